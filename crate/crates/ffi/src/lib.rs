//! C interface to the monoideal library.
//!
//! Objects cross the boundary as opaque handles created by `*_parse` and
//! released by the matching `*_free`. Every call returns an [`MiStatus`];
//! results come back through out-pointers. After a failure,
//! [`mi_last_error_message`] describes it until the next call on the same
//! thread. Strings returned by the library must be released with
//! [`mi_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use monoideal::cool::{all_orderings_cool, find_cool_ordering};
use monoideal::preimage::preimage_fg;
use monoideal::sorted_ideal::{fg_generating_set, is_fg_sorted, minimal_word_generators};
use monoideal::text::{parse_monomial_file, parse_order, parse_tgraph};
use monoideal::torient::{t_orientation_search, TGraph};
use monoideal::{Alphabet, Error, LetterOrder, MonomialSet};

/// Outcome of a call. The first four values match the command-line exit
/// codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MiStatus {
    Ok = 0,
    Negative = 1,
    InputError = 2,
    BudgetExceeded = 3,
    NullPointer = 4,
    Panic = 5,
}

/// A parsed monomial file: alphabet, antichain and ordering.
pub struct MiProblem {
    alphabet: Alphabet,
    set: MonomialSet,
    order: LetterOrder,
}

/// A parsed graph with its set `T`.
pub struct MiTGraph {
    graph: TGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> MiStatus {
    match e {
        Error::BudgetExceeded { .. } => MiStatus::BudgetExceeded,
        _ => MiStatus::InputError,
    }
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<MiStatus, (MiStatus, String)>) -> MiStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            MiStatus::Panic
        }
    }
}

fn lib<T>(r: monoideal::Result<T>) -> Result<T, (MiStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null() -> (MiStatus, String) {
    (MiStatus::NullPointer, "null pointer argument".into())
}

/// # Safety
/// `p` is null or a valid NUL-terminated string.
unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, (MiStatus, String)> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (MiStatus::InputError, "input is not UTF-8".into()))
}

/// # Safety
/// `p` is null or points to a live `T`.
unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, (MiStatus, String)> {
    p.as_ref().ok_or_else(null)
}

/// # Safety
/// `out` is null or writable.
unsafe fn write<T>(out: *mut T, v: T) -> Result<(), (MiStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    out.write(v);
    Ok(())
}

fn decided(yes: bool) -> MiStatus {
    if yes {
        MiStatus::Ok
    } else {
        MiStatus::Negative
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn mi_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` is null or came from this library and was not freed before.
#[no_mangle]
pub unsafe extern "C" fn mi_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a monomial file. The ordering is the file's order line, or index
/// order when absent. Non-minimal members are dropped.
///
/// # Safety
/// `src` is a NUL-terminated string and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn mi_problem_parse(
    src: *const c_char,
    out: *mut *mut MiProblem,
) -> MiStatus {
    guard(|| {
        let f = lib(parse_monomial_file(text(src)?))?;
        let order = f
            .order
            .unwrap_or_else(|| LetterOrder::identity(f.monomials.arity()));
        let p = MiProblem {
            alphabet: f.alphabet,
            set: f.monomials.antichain_reduce(),
            order,
        };
        write(out, Box::into_raw(Box::new(p)))?;
        Ok(MiStatus::Ok)
    })
}

/// # Safety
/// `p` is null or came from [`mi_problem_parse`] and was not freed before.
#[no_mangle]
pub unsafe extern "C" fn mi_problem_free(p: *mut MiProblem) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of letters.
///
/// # Safety
/// `p` is a live problem handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn mi_problem_letter_count(p: *const MiProblem, out: *mut usize) -> MiStatus {
    guard(|| {
        write(out, handle(p)?.set.arity())?;
        Ok(MiStatus::Ok)
    })
}

/// Replaces the ordering, given as letter names (e.g. "b a c").
///
/// # Safety
/// `p` is a live problem handle and `order` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn mi_problem_set_order(p: *mut MiProblem, order: *const c_char) -> MiStatus {
    guard(|| {
        let prob = p.as_mut().ok_or_else(null)?;
        prob.order = lib(parse_order(&prob.alphabet, text(order)?))?;
        Ok(MiStatus::Ok)
    })
}

/// Finite generation of the sorted-word ideal under the problem's
/// ordering. Returns `MI_STATUS_OK` when finite and `MI_STATUS_NEGATIVE` when not.
///
/// # Safety
/// `p` is a live problem handle.
#[no_mangle]
pub unsafe extern "C" fn mi_check_fg(p: *const MiProblem) -> MiStatus {
    guard(|| {
        let prob = handle(p)?;
        Ok(decided(lib(is_fg_sorted(&prob.set, &prob.order))?.verdict))
    })
}

/// Searches for a cool ordering. On `MI_STATUS_OK`, when `order_out` is non-null,
/// the ordering is written there as `letter_count` letter indices, smallest
/// first. Returns `MI_STATUS_NEGATIVE` when no ordering is cool.
///
/// # Safety
/// `p` is a live problem handle; `order_out` is null or has room for
/// `letter_count` values.
#[no_mangle]
pub unsafe extern "C" fn mi_find_cool(p: *const MiProblem, order_out: *mut usize) -> MiStatus {
    guard(|| {
        let prob = handle(p)?;
        let r = lib(find_cool_ordering(&prob.set))?;
        if let (Some(o), false) = (&r.ordering, order_out.is_null()) {
            ptr::copy_nonoverlapping(o.sequence().as_ptr(), order_out, o.len());
        }
        Ok(decided(r.found))
    })
}

/// Whether every ordering is cool.
///
/// # Safety
/// `p` is a live problem handle.
#[no_mangle]
pub unsafe extern "C" fn mi_all_orderings_cool(p: *const MiProblem) -> MiStatus {
    guard(|| Ok(decided(lib(all_orderings_cool(&handle(p)?.set))?)))
}

/// Finite generation of the full preimage in the free monoid.
///
/// # Safety
/// `p` is a live problem handle.
#[no_mangle]
pub unsafe extern "C" fn mi_preimage_fg(p: *const MiProblem) -> MiStatus {
    guard(|| Ok(decided(lib(preimage_fg(&handle(p)?.set))?.verdict)))
}

/// Minimal generators under the problem's ordering as a JSON array of
/// words. Returns `MI_STATUS_NEGATIVE` (and writes nothing) when the ideal is not
/// finitely generated.
///
/// # Safety
/// `p` is a live problem handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn mi_generators_json(
    p: *const MiProblem,
    out: *mut *mut c_char,
) -> MiStatus {
    guard(|| {
        let prob = handle(p)?;
        if out.is_null() {
            return Err(null());
        }
        if !lib(is_fg_sorted(&prob.set, &prob.order))?.verdict {
            return Ok(MiStatus::Negative);
        }
        let gens = minimal_word_generators(&lib(fg_generating_set(&prob.set, &prob.order))?);
        let words: Vec<String> = gens.iter().map(|w| prob.alphabet.format_word(w)).collect();
        let json = serde_json::to_string(&words).expect("strings serialize");
        write(out, CString::new(json).expect("no nul bytes").into_raw())?;
        Ok(MiStatus::Ok)
    })
}

/// Parses a graph in `p tgraph` format.
///
/// # Safety
/// `src` is a NUL-terminated string and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn mi_tgraph_parse(src: *const c_char, out: *mut *mut MiTGraph) -> MiStatus {
    guard(|| {
        let graph = lib(parse_tgraph(text(src)?))?;
        write(out, Box::into_raw(Box::new(MiTGraph { graph })))?;
        Ok(MiStatus::Ok)
    })
}

/// # Safety
/// `g` is null or came from [`mi_tgraph_parse`] and was not freed before.
#[no_mangle]
pub unsafe extern "C" fn mi_tgraph_free(g: *mut MiTGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Whether the graph has an acyclic orientation transitive at every vertex
/// of `T`.
///
/// # Safety
/// `g` is a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn mi_tgraph_has_t_orientation(g: *const MiTGraph) -> MiStatus {
    guard(|| Ok(decided(t_orientation_search(&handle(g)?.graph).is_some())))
}
