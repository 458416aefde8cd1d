//! Graded Betti numbers of squarefree monomial ideals via Hochster's formula:
//!
//! `β_{i,j}(I) = Σ_{|W| = j} dim H̃_{j-i-2}(Δ|_W)`
//!
//! where `Δ` is the Stanley-Reisner complex of `I`. Only sets `W` that are the
//! lcm of the generators they contain can contribute, so the rest are skipped.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::{reduced_homology_of_faces, HomologyProfile};
use crate::monomial::MonomialIdeal;

/// Graded Betti numbers `β_{i,j}` of an ideal; absent entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub field: FieldSpec,
    pub entries: BTreeMap<(usize, usize), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|((k, _), _)| *k == i).map(|(_, &b)| b).sum()
    }

    /// Largest homological degree with a nonzero entry.
    pub fn proj_dim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// True iff `β_{i,j} = 0` whenever `j ≠ i + d`.
    pub fn is_linear(&self, d: usize) -> bool {
        self.entries.keys().all(|&(i, j)| j == i + d)
    }

    /// True iff `β_{1,j} = 0` for all `j ≠ d + 1`.
    pub fn has_linear_relations(&self, d: usize) -> bool {
        self.entries.keys().all(|&(i, j)| i != 1 || j == d + 1)
    }

    /// Macaulay-style table: homological degree across, `j - i` down.
    pub fn render(&self) -> String {
        if self.entries.is_empty() {
            return "(zero table)\n".to_string();
        }
        let pd = self.proj_dim();
        let rows: Vec<usize> = {
            let lo = self.entries.keys().map(|&(i, j)| j - i).min().unwrap();
            let hi = self.entries.keys().map(|&(i, j)| j - i).max().unwrap();
            (lo..=hi).collect()
        };
        let cell = |v: usize| if v == 0 { ".".to_string() } else { v.to_string() };
        let width = self
            .entries
            .values()
            .map(|v| v.to_string().len())
            .chain((0..=pd).map(|i| self.total(i).to_string().len()))
            .max()
            .unwrap_or(1);
        let label_w = rows.iter().map(|r| r.to_string().len()).max().unwrap_or(1).max(5) + 1;
        let mut out = String::new();
        let _ = write!(out, "{:>label_w$}", "");
        for i in 0..=pd {
            let _ = write!(out, " {:>width$}", i);
        }
        out.push('\n');
        let _ = write!(out, "{:>label_w$}", "total:");
        for i in 0..=pd {
            let _ = write!(out, " {:>width$}", self.total(i));
        }
        out.push('\n');
        for r in rows {
            let _ = write!(out, "{:>label_w$}", format!("{r}:"));
            for i in 0..=pd {
                let _ = write!(out, " {:>width$}", cell(self.get(i, i + r)));
            }
            out.push('\n');
        }
        out
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            i: usize,
            j: usize,
            beta: usize,
        }
        let entries: Vec<Entry> = self
            .entries
            .iter()
            .map(|(&(i, j), &beta)| Entry { i, j, beta })
            .collect();
        let mut s = serializer.serialize_struct("BettiTable", 2)?;
        s.serialize_field("field", &self.field)?;
        s.serialize_field("entries", &entries)?;
        s.end()
    }
}

fn check_oracle_input(ideal: &MonomialIdeal, caps: &Caps) -> Result<()> {
    if ideal.is_empty() {
        return Err(Error::Input("Betti numbers of the zero ideal are not defined here".into()));
    }
    if ideal.gens().iter().any(|g| g.is_one()) {
        return Err(Error::Input("the unit ideal is not a proper monomial ideal".into()));
    }
    if ideal.n() > caps.oracle_vars {
        return Err(Error::Cap { what: "n", value: ideal.n(), cap: caps.oracle_vars });
    }
    Ok(())
}

/// Faces of `Δ|_W`: subsets of `w` containing no generator.
fn restriction_faces(gens: &[u64], w: u64) -> Vec<u64> {
    let mut faces = Vec::new();
    let mut sub = w;
    loop {
        if gens.iter().all(|&g| g & !sub != 0) {
            faces.push(sub);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & w;
    }
    faces
}

/// Reduced homology of the restriction of the Stanley-Reisner complex of
/// `ideal` to the vertex set `w`.
pub fn restriction_homology(
    ideal: &MonomialIdeal,
    w: u64,
    field: FieldSpec,
    caps: &Caps,
) -> Result<HomologyProfile> {
    if w.count_ones() as usize > caps.oracle_vars {
        return Err(Error::Cap { what: "|W|", value: w.count_ones() as usize, cap: caps.oracle_vars });
    }
    let gens: Vec<u64> = ideal.gens().iter().map(|g| g.bits()).collect();
    let faces = restriction_faces(&gens, w);
    if faces.len() > caps.restriction_faces {
        return Err(Error::Cap { what: "restriction faces", value: faces.len(), cap: caps.restriction_faces });
    }
    Ok(reduced_homology_of_faces(&faces, field))
}

/// The graded Betti table of a nonzero proper squarefree monomial ideal.
pub fn betti_table(ideal: &MonomialIdeal, field: FieldSpec, caps: &Caps) -> Result<BettiTable> {
    betti_table_impl(ideal, field, caps, true)
}

pub(crate) fn betti_table_impl(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    caps: &Caps,
    skip_non_lcm: bool,
) -> Result<BettiTable> {
    check_oracle_input(ideal, caps)?;
    let gens: Vec<u64> = ideal.gens().iter().map(|g| g.bits()).collect();
    let min_deg = gens.iter().map(|g| g.count_ones()).min().unwrap_or(0);
    let n = ideal.n();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let relevant = |w: u64| -> bool {
        if w.count_ones() < min_deg {
            return false;
        }
        let lcm = gens.iter().filter(|&&g| g & !w == 0).fold(0u64, |a, &g| a | g);
        if skip_non_lcm {
            lcm == w
        } else {
            lcm != 0
        }
    };
    let per_w: Vec<Result<Vec<(usize, usize, usize)>>> = (0..=full)
        .into_par_iter()
        .filter(|&w| relevant(w))
        .map(|w| {
            let faces = restriction_faces(&gens, w);
            if faces.len() > caps.restriction_faces {
                return Err(Error::Cap {
                    what: "restriction faces",
                    value: faces.len(),
                    cap: caps.restriction_faces,
                });
            }
            let h = reduced_homology_of_faces(&faces, field);
            let j = w.count_ones() as usize;
            // k = j - i - 2  =>  i = j - 2 - k, for k = -1..
            let mut out = Vec::new();
            for (s, &dim) in h.dims.iter().enumerate() {
                let k = s as isize - 1;
                let i = j as isize - 2 - k;
                if dim > 0 && i >= 0 {
                    out.push((i as usize, j, dim));
                }
            }
            Ok(out)
        })
        .collect();
    let mut entries = BTreeMap::new();
    for part in per_w {
        for (i, j, b) in part? {
            *entries.entry((i, j)).or_insert(0) += b;
        }
    }
    Ok(BettiTable { field, entries })
}

/// True iff `I` is generated in one degree `d` and `β_{i,j} = 0` for `j ≠ i + d`.
/// Mixed-degree ideals report `false`.
pub fn has_linear_resolution(ideal: &MonomialIdeal, field: FieldSpec, caps: &Caps) -> Result<bool> {
    let table = betti_table(ideal, field, caps)?;
    Ok(ideal.degree().is_some_and(|d| table.is_linear(d)))
}

/// True iff the first syzygies are generated in degree `d + 1`.
pub fn has_linear_relations(ideal: &MonomialIdeal, field: FieldSpec, caps: &Caps) -> Result<bool> {
    let table = betti_table(ideal, field, caps)?;
    Ok(ideal.degree().is_some_and(|d| table.has_linear_relations(d)))
}

pub fn proj_dim(ideal: &MonomialIdeal, field: FieldSpec, caps: &Caps) -> Result<usize> {
    Ok(betti_table(ideal, field, caps)?.proj_dim())
}
