use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use monoideal_ffi::*;

fn problem(text: &str) -> *mut MiProblem {
    let src = CString::new(text).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { mi_problem_parse(src.as_ptr(), &mut p) },
        MiStatus::Ok
    );
    assert!(!p.is_null());
    p
}

fn last_error() -> String {
    let msg = mi_last_error_message();
    assert!(!msg.is_null());
    unsafe { CStr::from_ptr(msg) }
        .to_string_lossy()
        .into_owned()
}

const EXAMPLE: &str = "letters: a b c\na b^2 c\na^3 b\n";

#[test]
fn worked_example_through_handles() {
    let p = problem(EXAMPLE);
    unsafe {
        let mut n = 0;
        assert_eq!(mi_problem_letter_count(p, &mut n), MiStatus::Ok);
        assert_eq!(n, 3);
        assert_eq!(mi_check_fg(p), MiStatus::Negative);
        let mut out = ptr::null_mut();
        assert_eq!(mi_generators_json(p, &mut out), MiStatus::Negative);
        assert!(out.is_null());

        let order = CString::new("b a c").unwrap();
        assert_eq!(mi_problem_set_order(p, order.as_ptr()), MiStatus::Ok);
        assert_eq!(mi_check_fg(p), MiStatus::Ok);
        assert_eq!(mi_generators_json(p, &mut out), MiStatus::Ok);
        let json = CStr::from_ptr(out).to_str().unwrap().to_owned();
        mi_string_free(out);
        let mut words: Vec<String> = serde_json::from_str(&json).unwrap();
        words.sort();
        assert_eq!(words, ["baaa", "bbaac", "bbac"]);

        let mut found = [usize::MAX; 3];
        assert_eq!(mi_find_cool(p, found.as_mut_ptr()), MiStatus::Ok);
        let mut sorted = found;
        sorted.sort();
        assert_eq!(sorted, [0, 1, 2]);
        mi_problem_free(p);
    }
}

#[test]
fn preimage_and_every_ordering() {
    let p = problem("letters: a b c\na^2\nb c\n");
    unsafe {
        assert_eq!(mi_all_orderings_cool(p), MiStatus::Ok);
        assert_eq!(mi_preimage_fg(p), MiStatus::Negative);
        mi_problem_free(p);
    }
}

#[test]
fn errors_are_reported() {
    let src = CString::new("letters: a b\na^\n").unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { mi_problem_parse(src.as_ptr(), &mut p) },
        MiStatus::InputError
    );
    assert!(p.is_null());
    assert!(last_error().contains("line 2"));

    assert_eq!(unsafe { mi_check_fg(ptr::null()) }, MiStatus::NullPointer);
    assert_eq!(
        unsafe { mi_problem_parse(ptr::null(), &mut p) },
        MiStatus::NullPointer
    );

    let p = problem(EXAMPLE);
    let bad = CString::new("a b").unwrap();
    assert_eq!(
        unsafe { mi_problem_set_order(p, bad.as_ptr()) },
        MiStatus::InputError
    );
    // a successful call clears the message
    assert_eq!(unsafe { mi_check_fg(p) }, MiStatus::Negative);
    assert!(mi_last_error_message().is_null());
    unsafe { mi_problem_free(p) };
    unsafe { mi_problem_free(ptr::null_mut()) };
    unsafe { mi_string_free(ptr::null_mut()) };
}

#[test]
fn graphs() {
    let cycle =
        CString::new("p tgraph 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\nt 1 2 3 4 5\n").unwrap();
    let path = CString::new("p tgraph 3 2\ne 1 2\ne 2 3\nt 2\n").unwrap();
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(mi_tgraph_parse(cycle.as_ptr(), &mut g), MiStatus::Ok);
        assert_eq!(mi_tgraph_has_t_orientation(g), MiStatus::Negative);
        mi_tgraph_free(g);
        assert_eq!(mi_tgraph_parse(path.as_ptr(), &mut g), MiStatus::Ok);
        assert_eq!(mi_tgraph_has_t_orientation(g), MiStatus::Ok);
        mi_tgraph_free(g);
    }
}

#[test]
fn header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/monoideal.h");
    assert!(header.exists());
    let Ok(out) = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"])
        .arg(&header)
        .output()
    else {
        eprintln!("no C compiler; skipping");
        return;
    };
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}
