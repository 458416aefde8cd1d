//! Plain-text formats for ideals and complexes.
//!
//! ```text
//! n 4
//! # comments and blank lines are skipped
//! 1 2
//! 2 3
//! ```

use std::fmt::Write as _;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::monomial::{MonomialIdeal, SqfMonomial, MAX_VARS};

fn parse_sets(src: &str) -> Result<(usize, Vec<SqfMonomial>)> {
    let mut lines = src
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines.next().ok_or_else(|| Error::Input("empty input; expected `n <int>`".into()))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", v] => v
            .parse::<usize>()
            .map_err(|_| Error::Input(format!("bad variable count `{v}`")))?,
        _ => return Err(Error::Input(format!("expected `n <int>`, found `{header}`"))),
    };
    if n > MAX_VARS {
        return Err(Error::Input(format!("n = {n} exceeds the maximum of {MAX_VARS}")));
    }
    let mut sets = Vec::new();
    for (line, body) in lines {
        let mut bits = 0u64;
        for tok in body.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::Input(format!("line {line}: bad index `{tok}`")))?;
            if v == 0 || v > n {
                return Err(Error::Input(format!("line {line}: index {v} outside 1..={n}")));
            }
            bits |= 1 << (v - 1);
        }
        sets.push(SqfMonomial::from_bits(bits));
    }
    Ok((n, sets))
}

/// Parses an ideal, minimalizing the generator list.
pub fn parse_ideal(src: &str) -> Result<MonomialIdeal> {
    let (n, gens) = parse_sets(src)?;
    MonomialIdeal::new(n, &gens)
}

/// Parses a complex given by facets; non-maximal faces are rejected.
pub fn parse_complex(src: &str) -> Result<SimplicialComplex> {
    let (n, facets) = parse_sets(src)?;
    SimplicialComplex::new(n, facets)
}

fn format_sets(n: usize, sets: &[SqfMonomial]) -> String {
    let mut out = format!("n {n}\n");
    for s in sets {
        let line: Vec<String> = s.vars().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

pub fn format_ideal(ideal: &MonomialIdeal) -> String {
    format_sets(ideal.n(), ideal.gens())
}

pub fn format_complex(complex: &SimplicialComplex) -> String {
    format_sets(complex.n(), complex.facets())
}
