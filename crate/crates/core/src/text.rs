//! Text formats: monomial lists, T-graphs and DIMACS CNF.
//!
//! Monomial files hold one monomial per line, either as factors
//! (`a b^2 c`, `1` for the unit) or as an exponent vector (`[1,2,1]`).
//! `letters: a b c` fixes the alphabet and its index order, `order: b a c`
//! gives an increasing letter ordering, and `#` starts a comment. Letters
//! used without a declaration are appended in order of first occurrence.

use crate::error::{Error, Result};
use crate::monomial::{Alphabet, Letter, LetterOrder, Monomial, MonomialSet};
use crate::torient::TGraph;

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(s: &str, base: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(st)) => {
                out.push((st, &s[st..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(st) = start {
        out.push((st, &s[st..]));
    }
    out.into_iter()
        .map(|(i, t)| (base + s[..i].chars().count(), t))
        .collect()
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn parse_exponent(s: &str, line: usize, column: usize) -> Result<u64> {
    if s.is_empty() {
        return Err(parse_err(line, column, "missing exponent"));
    }
    if s.starts_with('-') {
        return Err(parse_err(line, column, "negative exponent"));
    }
    s.parse()
        .map_err(|_| parse_err(line, column, format!("invalid exponent {s:?}")))
}

/// A parsed monomial file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialFile {
    pub alphabet: Alphabet,
    pub monomials: MonomialSet,
    pub order: Option<LetterOrder>,
}

pub fn parse_monomial_file(text: &str) -> Result<MonomialFile> {
    let mut alphabet = Alphabet::empty();
    let mut declared = false;
    let mut entries: Vec<Vec<(Letter, u64)>> = Vec::new();
    let mut order: Option<(usize, Vec<(usize, String)>)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let ln = idx + 1;
        let content = strip_comment(raw);
        let trimmed = content.trim_start();
        if trimmed.is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let col0 = content[..indent].chars().count() + 1;
        if let Some(rest) = trimmed.strip_prefix("letters:") {
            if declared || !alphabet.is_empty() {
                return Err(parse_err(
                    ln,
                    col0,
                    "the alphabet is declared more than once or after use",
                ));
            }
            declared = true;
            for (col, name) in tokens(rest, col0 + "letters:".len()) {
                if !valid_name(name) {
                    return Err(parse_err(ln, col, format!("invalid letter name {name:?}")));
                }
                if alphabet.index_of(name).is_some() {
                    return Err(parse_err(
                        ln,
                        col,
                        format!("letter {name:?} declared twice"),
                    ));
                }
                alphabet.push(name.to_string());
            }
            if alphabet.is_empty() {
                return Err(parse_err(ln, col0, "empty letters declaration"));
            }
        } else if let Some(rest) = trimmed.strip_prefix("order:") {
            if order.is_some() {
                return Err(parse_err(ln, col0, "more than one order line"));
            }
            let names = tokens(rest, col0 + "order:".len())
                .into_iter()
                .map(|(c, t)| (c, t.to_string()))
                .collect();
            order = Some((ln, names));
        } else if let Some(rest) = trimmed.strip_prefix('[') {
            let Some(close) = rest.find(']') else {
                return Err(parse_err(ln, col0, "unterminated exponent vector"));
            };
            if !rest[close + 1..].trim().is_empty() {
                return Err(parse_err(
                    ln,
                    col0 + close + 2,
                    "text after exponent vector",
                ));
            }
            let body = &rest[..close];
            let mut exps = Vec::new();
            let mut offset = col0 + 1;
            if !body.trim().is_empty() {
                for part in body.split(',') {
                    let lead = part.len() - part.trim_start().len();
                    exps.push(parse_exponent(part.trim(), ln, offset + lead)?);
                    offset += part.chars().count() + 1;
                }
            }
            if alphabet.is_empty() {
                if exps.is_empty() {
                    return Err(parse_err(ln, col0, "empty exponent vector"));
                }
                for name in Alphabet::standard(exps.len()).names() {
                    alphabet.push(name.clone());
                }
            }
            if exps.len() != alphabet.len() {
                return Err(parse_err(
                    ln,
                    col0,
                    format!(
                        "vector has {} entries, the alphabet has {} letters",
                        exps.len(),
                        alphabet.len()
                    ),
                ));
            }
            entries.push(
                exps.into_iter()
                    .enumerate()
                    .filter(|&(_, e)| e > 0)
                    .collect(),
            );
        } else {
            let toks = tokens(trimmed, col0);
            if toks.len() == 1 && toks[0].1 == "1" {
                entries.push(Vec::new());
                continue;
            }
            let mut factors = Vec::new();
            for (col, tok) in toks {
                let (name, exp) = match tok.split_once('^') {
                    Some((n, e)) => (n, parse_exponent(e, ln, col + n.chars().count() + 1)?),
                    None => (tok, 1),
                };
                if !valid_name(name) {
                    return Err(parse_err(ln, col, format!("invalid factor {tok:?}")));
                }
                let letter = match alphabet.index_of(name) {
                    Some(l) => l,
                    None => alphabet.push(name.to_string()),
                };
                factors.push((letter, exp));
            }
            entries.push(factors);
        }
    }

    if alphabet.is_empty() {
        return Err(Error::InvalidAlphabet("no letters declared or used".into()));
    }
    let n = alphabet.len();
    let mut monomials = Vec::with_capacity(entries.len());
    for factors in entries {
        let mut exps = vec![0u64; n];
        for (l, e) in factors {
            exps[l] = exps[l].checked_add(e).ok_or(Error::Overflow)?;
        }
        monomials.push(Monomial::new(exps));
    }
    let order = match order {
        None => None,
        Some((ln, names)) => {
            let mut seq = Vec::with_capacity(names.len());
            for (col, name) in &names {
                match alphabet.index_of(name) {
                    Some(l) => seq.push(l),
                    None => return Err(parse_err(ln, *col, format!("unknown letter {name:?}"))),
                }
            }
            if seq.len() != n {
                return Err(parse_err(
                    ln,
                    1,
                    format!("order lists {} letters, the alphabet has {n}", seq.len()),
                ));
            }
            Some(LetterOrder::from_sequence(seq).map_err(|e| parse_err(ln, 1, e.to_string()))?)
        }
    };
    Ok(MonomialFile {
        alphabet,
        monomials: MonomialSet::new(n, monomials)?,
        order,
    })
}

/// Renders a file that [`parse_monomial_file`] reads back to the same data.
pub fn format_monomial_file(
    alphabet: &Alphabet,
    m: &MonomialSet,
    order: Option<&LetterOrder>,
) -> String {
    let mut out = format!("letters: {}\n", alphabet.names().join(" "));
    if let Some(o) = order {
        let names: Vec<&str> = o.sequence().iter().map(|&l| alphabet.name(l)).collect();
        out.push_str(&format!("order: {}\n", names.join(" ")));
    }
    for g in m {
        out.push_str(&alphabet.format_monomial(g));
        out.push('\n');
    }
    out
}

/// Letter names separated by whitespace, commas or `<`.
pub fn parse_order(alphabet: &Alphabet, s: &str) -> Result<LetterOrder> {
    let mut seq = Vec::new();
    for name in s.split(|c: char| c.is_whitespace() || c == ',' || c == '<') {
        if name.is_empty() {
            continue;
        }
        match alphabet.index_of(name) {
            Some(l) => seq.push(l),
            None => return Err(Error::InvalidOrdering(format!("unknown letter {name:?}"))),
        }
    }
    if seq.len() != alphabet.len() {
        return Err(Error::InvalidOrdering(format!(
            "ordering lists {} letters, the alphabet has {}",
            seq.len(),
            alphabet.len()
        )));
    }
    LetterOrder::from_sequence(seq)
}

/// Comma- or space-separated nonnegative integers.
pub fn parse_vector(s: &str) -> Result<Vec<u64>> {
    let body = s.trim().trim_start_matches('[').trim_end_matches(']');
    body.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::InvalidInstance(format!("invalid vector entry {t:?}")))
        })
        .collect()
}

fn parse_index(tok: &str, n: usize, line: usize, col: usize) -> Result<usize> {
    let v: usize = tok
        .parse()
        .map_err(|_| parse_err(line, col, format!("invalid vertex {tok:?}")))?;
    if v == 0 || v > n {
        return Err(parse_err(line, col, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

/// `p tgraph <n> <m>`, then `e u v` per edge and `t v1 v2 ...` for `T`,
/// vertices 1-based; `c` lines are comments.
pub fn parse_tgraph(text: &str) -> Result<TGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut t = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let ln = idx + 1;
        let toks = tokens(strip_comment(raw), 1);
        let Some(&(col, kind)) = toks.first() else {
            continue;
        };
        match kind {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(parse_err(ln, col, "duplicate problem line"));
                }
                if toks.len() != 4 || toks[1].1 != "tgraph" {
                    return Err(parse_err(ln, col, "expected `p tgraph <n> <m>`"));
                }
                let num = |i: usize| {
                    toks[i]
                        .1
                        .parse::<usize>()
                        .map_err(|_| parse_err(ln, toks[i].0, "expected a count"))
                };
                header = Some((num(2)?, num(3)?));
            }
            "e" | "t" => {
                let Some((n, _)) = header else {
                    return Err(parse_err(ln, col, "edge or T line before the problem line"));
                };
                let vs = toks[1..]
                    .iter()
                    .map(|&(c, tok)| parse_index(tok, n, ln, c))
                    .collect::<Result<Vec<_>>>()?;
                if kind == "e" {
                    if vs.len() != 2 {
                        return Err(parse_err(ln, col, "an edge line needs two vertices"));
                    }
                    edges.push((vs[0], vs[1]));
                } else {
                    t.extend(vs);
                }
            }
            other => return Err(parse_err(ln, col, format!("unknown line type {other:?}"))),
        }
    }
    let Some((n, m)) = header else {
        return Err(parse_err(1, 1, "missing `p tgraph` line"));
    };
    if edges.len() != m {
        return Err(Error::InvalidGraph(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    TGraph::new(n, edges, &t)
}

pub fn format_tgraph(g: &TGraph) -> String {
    let mut out = format!("p tgraph {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    let t: Vec<String> = g.t_vertices().iter().map(|v| (v + 1).to_string()).collect();
    if t.is_empty() {
        out.push_str("t\n");
    } else {
        out.push_str(&format!("t {}\n", t.join(" ")));
    }
    out
}

/// DIMACS CNF: `p cnf <vars> <clauses>`, clauses as literal lists closed by
/// `0`, `c` comment lines.
pub fn parse_dimacs(text: &str) -> Result<(usize, Vec<Vec<i32>>)> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let ln = idx + 1;
        let toks = tokens(raw, 1);
        let Some(&(col, first)) = toks.first() else {
            continue;
        };
        if first == "c" {
            continue;
        }
        if first == "%" {
            break;
        }
        if first == "p" {
            if header.is_some() {
                return Err(parse_err(ln, col, "duplicate problem line"));
            }
            if toks.len() != 4 || toks[1].1 != "cnf" {
                return Err(parse_err(ln, col, "expected `p cnf <vars> <clauses>`"));
            }
            let num = |i: usize| {
                toks[i]
                    .1
                    .parse::<usize>()
                    .map_err(|_| parse_err(ln, toks[i].0, "expected a count"))
            };
            header = Some((num(2)?, num(3)?));
            continue;
        }
        let Some((nv, _)) = header else {
            return Err(parse_err(ln, col, "clause before the problem line"));
        };
        for (c, tok) in toks {
            let lit: i32 = tok
                .parse()
                .map_err(|_| parse_err(ln, c, format!("invalid literal {tok:?}")))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() as usize > nv {
                return Err(parse_err(ln, c, format!("literal {lit} outside 1..={nv}")));
            } else {
                current.push(lit);
            }
        }
    }
    let Some((nv, nc)) = header else {
        return Err(parse_err(1, 1, "missing `p cnf` line"));
    };
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != nc {
        return Err(Error::InvalidInstance(format!(
            "header announces {nc} clauses, found {}",
            clauses.len()
        )));
    }
    Ok((nv, clauses))
}

pub fn format_dimacs(variables: usize, clauses: &[Vec<i32>]) -> String {
    let mut out = format!("p cnf {variables} {}\n", clauses.len());
    for c in clauses {
        for l in c {
            out.push_str(&format!("{l} "));
        }
        out.push_str("0\n");
    }
    out
}
