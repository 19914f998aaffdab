//! The `monoideal` command line: JSON on standard output, exit status 0
//! when computed, 1 for a negative decision, 2 for bad input, 3 when a
//! budget runs out.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::cool::{all_orderings_cool, find_cool_ordering, is_cool};
use crate::error::{Error, Result};
use crate::monomial::{Alphabet, LetterOrder, MonomialSet};
use crate::oracle::{enumerate_preimage, enumerate_sorted, EnumerationReport, DEFAULT_BUDGET};
use crate::polyhedral::{
    convexity_check, find_certificate, from_generators, sat_reduction, union, verify_certificate,
    Certificate, CertificateKind, IneqSystem, SatInstance, SatTarget, DEFAULT_BOX_BUDGET,
};
use crate::preimage::{preimage_degree_bounds, preimage_fg, preimage_fg_pairs, PreimageWitness};
use crate::sorted_ideal::{
    eps_minimal_generators, fg_generating_set, groebner_lift, is_fg_sorted,
    minimal_word_generators, WordSet,
};
use crate::sweep::{
    antichains, sweep_all_orderings, sweep_preimage, sweep_sorted_probe, SweepBounds,
};
use crate::text::{
    format_tgraph, parse_dimacs, parse_monomial_file, parse_order, parse_tgraph, parse_vector,
};
use crate::torient::{
    count_t_orientations, gadget3, nae3sat_reduce, t_orientation_search_with_stats, top_hat,
    NaeInstance, TGraph,
};

pub const BUDGET_ENV: &str = "MONOIDEAL_BUDGET";

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "monoideal",
    version,
    about = "Finite generation of word ideals built from monomial ideals"
)]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Enumeration budget; overrides MONOIDEAL_BUDGET and the defaults.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct MonomialInput {
    /// Monomial file.
    file: PathBuf,
    /// Increasing letter ordering, e.g. "b a c"; overrides the file's order line.
    #[arg(long)]
    order: Option<String>,
}

#[derive(Args, Debug)]
struct GraphOutput {
    /// Also write the graph in tgraph format to this path.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleTarget {
    Sorted,
    Preimage,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReductionTarget {
    Mdois,
    Imfg,
    Pinfg,
}

impl From<ReductionTarget> for SatTarget {
    fn from(t: ReductionTarget) -> Self {
        match t {
            ReductionTarget::Mdois => SatTarget::Mdois,
            ReductionTarget::Imfg => SatTarget::Imfg,
            ReductionTarget::Pinfg => SatTarget::Pinfg,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CertKindArg {
    Support3,
    PreimageNotFg,
    SortedNotFg,
}

impl From<CertKindArg> for CertificateKind {
    fn from(k: CertKindArg) -> Self {
        match k {
            CertKindArg::Support3 => CertificateKind::Support3,
            CertKindArg::PreimageNotFg => CertificateKind::PreimageNotFg,
            CertKindArg::SortedNotFg => CertificateKind::SortedNotFg,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Keep the divisibility-minimal monomials.
    Reduce { file: PathBuf },
    /// Decide finite generation of the sorted-word ideal.
    CheckFg(MonomialInput),
    /// Minimal generators of a finitely generated sorted-word ideal.
    Generators {
        #[command(flatten)]
        input: MonomialInput,
        /// Use the direct minimal-generator characterisation up to this length.
        #[arg(long)]
        eps_cap: Option<u64>,
    },
    /// Leading words of the lifted Groebner basis.
    GbLift(MonomialInput),
    /// Whether an ordering is cool.
    IsCool(MonomialInput),
    /// Search for a cool ordering.
    FindCool { file: PathBuf },
    /// Whether every ordering is cool.
    AllCool { file: PathBuf },
    /// Decide finite generation of the full preimage.
    PreimageFg {
        file: PathBuf,
        /// Use the pair formulation of the criterion.
        #[arg(long)]
        pairs: bool,
    },
    /// Enumerate minimal word generators up to a length cap.
    Oracle {
        #[command(flatten)]
        input: MonomialInput,
        #[arg(long, value_enum, default_value = "sorted")]
        target: OracleTarget,
        #[arg(long)]
        cap: usize,
    },
    /// Search for an acyclic orientation transitive at T.
    Torient {
        graph: PathBuf,
        /// Count all solutions (up to this many) instead of returning one.
        #[arg(long)]
        count: Option<u64>,
    },
    /// The top-hat graph.
    GenTophat(GraphOutput),
    /// Three top hats glued in a cycle.
    GenGadget(GraphOutput),
    /// Graph of the NAE-3SAT reduction for a DIMACS file of 3-literal clauses.
    ReduceNae {
        cnf: PathBuf,
        #[command(flatten)]
        out: GraphOutput,
    },
    /// Membership of a point in I(A, W).
    PolyMember {
        system: PathBuf,
        /// Point, e.g. "2,3".
        #[arg(long)]
        point: String,
    },
    /// Minimal generators of I(A, W).
    PolyMingens { system: PathBuf },
    /// Union of inequality systems.
    PolyUnion {
        #[arg(required = true)]
        systems: Vec<PathBuf>,
    },
    /// The identity presentation of a monomial file.
    PolyFromGens { file: PathBuf },
    /// Search for a certificate of a negative answer.
    PolyCert {
        system: PathBuf,
        #[arg(long, value_enum)]
        kind: CertKindArg,
        /// Ordering for sorted certificates, as variable names.
        #[arg(long)]
        order: Option<String>,
    },
    /// Check a certificate against an inequality system.
    VerifyCert {
        system: PathBuf,
        certificate: PathBuf,
    },
    /// Inequality instance for a DIMACS CNF file.
    ReduceSat {
        cnf: PathBuf,
        #[arg(long, value_enum)]
        target: ReductionTarget,
    },
    /// Whether the ideal contains every lattice point of its convex region.
    Convexity { file: PathBuf },
    /// Run the invariant sweeps over small antichains.
    Crosscheck {
        #[arg(long, default_value_t = 3)]
        letters: usize,
        #[arg(long, default_value_t = 3)]
        max_degree: u64,
        /// Per-letter exponent cap; defaults to the degree cap.
        #[arg(long)]
        max_exponent: Option<u64>,
    },
}

struct Ctx {
    budget: Option<u64>,
}

impl Ctx {
    fn budget(&self, default: u64) -> u64 {
        self.budget.unwrap_or(default)
    }
}

struct Outcome {
    value: Value,
    positive: bool,
}

fn done(value: Value) -> Result<Outcome> {
    Ok(Outcome {
        value,
        positive: true,
    })
}

fn decided(value: Value, positive: bool) -> Result<Outcome> {
    Ok(Outcome { value, positive })
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::InvalidInstance(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text)
        .map_err(|e| Error::InvalidInstance(format!("cannot write {}: {e}", path.display())))
}

struct Loaded {
    alphabet: Alphabet,
    set: MonomialSet,
    order: LetterOrder,
}

fn load(path: &Path, order: Option<&str>) -> Result<Loaded> {
    let f = parse_monomial_file(&read(path)?)?;
    let order = match order {
        Some(s) => parse_order(&f.alphabet, s)?,
        None => f
            .order
            .unwrap_or_else(|| LetterOrder::identity(f.alphabet.len())),
    };
    Ok(Loaded {
        alphabet: f.alphabet,
        set: f.monomials,
        order,
    })
}

fn load_system(path: &Path) -> Result<IneqSystem> {
    serde_json::from_str(&read(path)?).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn words_json(a: &Alphabet, ws: &WordSet) -> Value {
    Value::from(ws.iter().map(|w| a.format_word(w)).collect::<Vec<_>>())
}

fn monomials_json(a: &Alphabet, m: &MonomialSet) -> Value {
    Value::from(
        m.canonical()
            .iter()
            .map(|g| a.format_monomial(g))
            .collect::<Vec<_>>(),
    )
}

fn order_json(a: &Alphabet, o: &LetterOrder) -> Value {
    Value::from(
        o.sequence()
            .iter()
            .map(|&l| a.name(l).to_string())
            .collect::<Vec<_>>(),
    )
}

fn fg_json(l: &Loaded) -> Result<(Value, bool)> {
    let w = is_fg_sorted(&l.set, &l.order)?;
    let mut obj = Map::new();
    obj.insert("verdict".into(), w.verdict.into());
    obj.insert("order".into(), order_json(&l.alphabet, &l.order));
    if let Some(v) = w.violator {
        obj.insert(
            "witness".into(),
            json!({
                "member": v.member,
                "monomial": l.alphabet.format_monomial(&v.monomial),
                "letter": l.alphabet.name(v.letter),
            }),
        );
    }
    Ok((Value::Object(obj), w.verdict))
}

fn preimage_json(a: &Alphabet, w: &PreimageWitness) -> Value {
    let mut obj = Map::new();
    obj.insert("verdict".into(), w.verdict.into());
    if let Some(v) = &w.violator {
        obj.insert(
            "witness".into(),
            json!({
                "member": v.member,
                "monomial": a.format_monomial(&v.monomial),
                "letter": a.name(v.letter),
            }),
        );
    }
    Value::Object(obj)
}

fn report_json(a: &Alphabet, r: &EnumerationReport) -> Value {
    json!({
        "cap": r.cap,
        "generators": words_json(a, &r.minimal_generators),
        "count": r.minimal_generators.len(),
        "longest": r.longest(),
        "saturated": r.saturated,
        "membership_tests": r.membership_tests,
    })
}

fn graph_json(g: &TGraph) -> Value {
    json!({
        "vertices": g.vertex_count(),
        "edges": g.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect::<Vec<_>>(),
        "t": g.t_vertices().iter().map(|v| v + 1).collect::<Vec<_>>(),
        "labels": g.labels(),
    })
}

fn emit_graph(g: &TGraph, out: &GraphOutput) -> Result<Outcome> {
    if let Some(path) = &out.output {
        write_file(path, &format_tgraph(g))?;
    }
    done(graph_json(g))
}

fn load_cnf(path: &Path) -> Result<(usize, Vec<Vec<i32>>)> {
    parse_dimacs(&read(path)?)
}

fn execute(cmd: Command, ctx: &Ctx) -> Result<Outcome> {
    match cmd {
        Command::Reduce { file } => {
            let l = load(&file, None)?;
            let r = l.set.antichain_reduce();
            done(json!({
                "monomials": monomials_json(&l.alphabet, &r),
                "vectors": r.canonical().iter().map(|g| g.exponents().to_vec()).collect::<Vec<_>>(),
                "removed": l.set.len() - r.len(),
            }))
        }
        Command::CheckFg(input) => {
            let l = load(&input.file, input.order.as_deref())?;
            let (v, ok) = fg_json(&l)?;
            decided(v, ok)
        }
        Command::Generators { input, eps_cap } => {
            let l = load(&input.file, input.order.as_deref())?;
            let (mut v, ok) = fg_json(&l)?;
            if ok {
                let gens = match eps_cap {
                    Some(cap) => eps_minimal_generators(&l.set, &l.order, cap)?,
                    None => minimal_word_generators(&fg_generating_set(&l.set, &l.order)?),
                };
                v["generators"] = words_json(&l.alphabet, &gens);
                v["count"] = gens.len().into();
            }
            decided(v, ok)
        }
        Command::GbLift(input) => {
            let l = load(&input.file, input.order.as_deref())?;
            let (mut v, ok) = fg_json(&l)?;
            if ok {
                let lift = groebner_lift(&l.set, &l.order)?;
                v["leading_words"] = words_json(&l.alphabet, &lift);
                v["count"] = lift.len().into();
            }
            decided(v, ok)
        }
        Command::IsCool(input) => {
            let l = load(&input.file, input.order.as_deref())?;
            let cool = is_cool(&l.set, &l.order)?;
            decided(
                json!({"cool": cool, "order": order_json(&l.alphabet, &l.order)}),
                cool,
            )
        }
        Command::FindCool { file } => {
            let l = load(&file, None)?;
            let r = find_cool_ordering(&l.set)?;
            let mut v = json!({
                "found": r.found,
                "nodes_explored": r.nodes_explored,
                "method": r.method,
            });
            v["ordering"] = match &r.ordering {
                Some(o) => order_json(&l.alphabet, o),
                None => Value::Null,
            };
            decided(v, r.found)
        }
        Command::AllCool { file } => {
            let l = load(&file, None)?;
            let all = all_orderings_cool(&l.set)?;
            decided(json!({"all_cool": all}), all)
        }
        Command::PreimageFg { file, pairs } => {
            let l = load(&file, None)?;
            let w = if pairs {
                preimage_fg_pairs(&l.set)?
            } else {
                preimage_fg(&l.set)?
            };
            let mut v = preimage_json(&l.alphabet, &w);
            v["degree_bounds"] = preimage_degree_bounds(&l.set).into();
            decided(v, w.verdict)
        }
        Command::Oracle { input, target, cap } => {
            let l = load(&input.file, input.order.as_deref())?;
            let budget = ctx.budget(DEFAULT_BUDGET);
            let r = match target {
                OracleTarget::Sorted => enumerate_sorted(&l.set, &l.order, cap, budget)?,
                OracleTarget::Preimage => enumerate_preimage(&l.set, cap, budget)?,
            };
            done(report_json(&l.alphabet, &r))
        }
        Command::Torient { graph, count } => {
            let g = parse_tgraph(&read(&graph)?)?;
            if let Some(limit) = count {
                let n = count_t_orientations(&g, &[], limit)?;
                return decided(json!({"count": n, "limit": limit}), n > 0);
            }
            let outcome = t_orientation_search_with_stats(&g);
            let mut v = json!({"found": outcome.orientation.is_some(), "nodes": outcome.nodes});
            if let Some(o) = &outcome.orientation {
                v["arcs"] = o
                    .arcs(&g)
                    .iter()
                    .map(|&(u, w)| [u + 1, w + 1])
                    .collect::<Vec<_>>()
                    .into();
            }
            decided(v, outcome.orientation.is_some())
        }
        Command::GenTophat(out) => emit_graph(&top_hat(), &out),
        Command::GenGadget(out) => emit_graph(&gadget3(), &out),
        Command::ReduceNae { cnf, out } => {
            let (n, clauses) = load_cnf(&cnf)?;
            let triples = clauses
                .iter()
                .map(|c| {
                    <[i32; 3]>::try_from(c.as_slice()).map_err(|_| {
                        Error::InvalidInstance(format!("clause {c:?} does not have 3 literals"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            emit_graph(&nae3sat_reduce(&NaeInstance::new(n, triples)?), &out)
        }
        Command::PolyMember { system, point } => {
            let s = load_system(&system)?;
            let x = parse_vector(&point)?;
            let member = s.membership(&x)?;
            decided(json!({"member": member, "point": x}), member)
        }
        Command::PolyMingens { system } => {
            let s = load_system(&system)?;
            let gens = s.enumerate_minimal_generators(ctx.budget(DEFAULT_BOX_BUDGET))?;
            done(json!({"count": gens.len(), "generators": gens}))
        }
        Command::PolyUnion { systems } => {
            let parts = systems
                .iter()
                .map(|p| load_system(p))
                .collect::<Result<Vec<_>>>()?;
            done(serde_json::to_value(union(&parts)?).expect("serializable"))
        }
        Command::PolyFromGens { file } => {
            let l = load(&file, None)?;
            let s = from_generators(&l.set).with_vars(l.alphabet.names().to_vec())?;
            done(serde_json::to_value(s).expect("serializable"))
        }
        Command::PolyCert {
            system,
            kind,
            order,
        } => {
            let s = load_system(&system)?;
            let ord = match order {
                Some(o) => Some(parse_order(&Alphabet::new(s.vars().to_vec())?, &o)?),
                None => None,
            };
            let cert = find_certificate(
                &s,
                kind.into(),
                ord.as_ref(),
                ctx.budget(DEFAULT_BOX_BUDGET),
            )?;
            let found = cert.is_some();
            decided(json!({"found": found, "certificate": cert}), found)
        }
        Command::VerifyCert {
            system,
            certificate,
        } => {
            let s = load_system(&system)?;
            let cert: Certificate = serde_json::from_str(&read(&certificate)?)
                .map_err(|e| Error::MalformedCertificate(e.to_string()))?;
            let valid = verify_certificate(&s, &cert)?;
            decided(json!({"valid": valid}), valid)
        }
        Command::ReduceSat { cnf, target } => {
            let (n, clauses) = load_cnf(&cnf)?;
            let inst = SatInstance::new(n, clauses)?;
            done(serde_json::to_value(sat_reduction(&inst, target.into())?).expect("serializable"))
        }
        Command::Convexity { file } => {
            let l = load(&file, None)?;
            let convex = convexity_check(&l.set, ctx.budget(DEFAULT_BOX_BUDGET))?;
            decided(json!({"convex": convex}), convex)
        }
        Command::Crosscheck {
            letters,
            max_degree,
            max_exponent,
        } => {
            let bounds = SweepBounds {
                letters,
                max_exponent: max_exponent.unwrap_or(max_degree),
                max_total_degree: max_degree,
            };
            let family = antichains(&bounds);
            let budget = ctx.budget(DEFAULT_BUDGET);
            let reports = [
                ("sorted_probe", sweep_sorted_probe(&family, budget)?),
                ("preimage", sweep_preimage(&family, budget)?),
                ("all_orderings", sweep_all_orderings(&family)?),
            ];
            let passed = reports.iter().all(|(_, r)| r.passed());
            let mut v = json!({"bounds": bounds, "passed": passed});
            for (name, r) in &reports {
                v[*name] = serde_json::to_value(r).expect("serializable");
            }
            decided(v, passed)
        }
    }
}

fn error_json(e: &Error) -> Value {
    let mut v = json!({"error": e.to_string()});
    if let Error::Parse { line, column, .. } = e {
        v["line"] = (*line).into();
        v["column"] = (*column).into();
    }
    v
}

fn render_pretty(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_pretty(val, indent + 1, out);
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for item in items {
                            out.push_str(&format!("{pad}  -\n"));
                            render_pretty(item, indent + 2, out);
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(val))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            if items.iter().any(Value::is_array) {
                parts.join("; ")
            } else {
                parts.join(", ")
            }
        }
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

fn env_budget() -> std::result::Result<Option<u64>, String> {
    match std::env::var(BUDGET_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| format!("{BUDGET_ENV} must be a nonnegative integer, got {s:?}")),
        Err(_) => Ok(None),
    }
}

/// Parses `args` (program name first), runs the subcommand and writes the
/// result. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if code == EXIT_OK {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    let budget = match cli.budget {
        Some(b) => Some(b),
        None => match env_budget() {
            Ok(b) => b,
            Err(msg) => {
                let _ = writeln!(err, "{msg}");
                return EXIT_INPUT;
            }
        },
    };
    let ctx = Ctx { budget };
    let (value, code) = match execute(cli.command, &ctx) {
        Ok(o) => (o.value, if o.positive { EXIT_OK } else { EXIT_NEGATIVE }),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            let code = match e {
                Error::BudgetExceeded { .. } => EXIT_BUDGET,
                _ => EXIT_INPUT,
            };
            (error_json(&e), code)
        }
    };
    let text = if cli.pretty {
        let mut s = String::new();
        render_pretty(&value, 0, &mut s);
        s
    } else {
        format!("{value}\n")
    };
    let _ = out.write_all(text.as_bytes());
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(args.iter().copied(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn generated_graphs() {
        let (code, out) = run_str(&["monoideal", "gen-tophat"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["vertices"], 7);
        let (_, out) = run_str(&["monoideal", "--pretty", "gen-gadget"]);
        assert!(out.contains("vertices: 15"));
    }

    #[test]
    fn unknown_subcommand_is_input_error() {
        assert_eq!(run_str(&["monoideal", "frobnicate"]).0, EXIT_INPUT);
    }

    #[test]
    fn pretty_rendering() {
        let mut s = String::new();
        render_pretty(&json!({"a": [1, 2], "b": {"c": "x"}, "d": null}), 0, &mut s);
        assert_eq!(s, "a: 1, 2\nb:\n  c: x\nd: none\n");
    }
}
