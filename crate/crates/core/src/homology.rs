//! Reduced simplicial homology from boundary-matrix ranks.

use std::collections::HashMap;

use serde::Serialize;

use crate::field::FieldSpec;
use crate::linalg;

/// Reduced Betti numbers `dim H̃_k` for `k = -1, 0, 1, ...`.
///
/// `dims[0]` is `H̃_{-1}`. The void complex (no faces at all) has an empty
/// profile; the complex `{∅}` has `H̃_{-1} = 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub dims: Vec<usize>,
}

impl HomologyProfile {
    /// `dim H̃_k`, zero outside the stored range.
    pub fn get(&self, k: isize) -> usize {
        if k < -1 {
            return 0;
        }
        self.dims.get((k + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `Σ_k (-1)^k dim H̃_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(s, &d)| if s % 2 == 1 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// Reduced homology of the complex whose faces (every face, including `∅`
/// when present) are given as vertex bitmasks.
pub fn reduced_homology_of_faces(faces: &[u64], field: FieldSpec) -> HomologyProfile {
    if faces.is_empty() {
        return HomologyProfile::default();
    }
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    // by_size[s] holds the faces with s vertices, i.e. the (s-1)-chains.
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    for group in &mut by_size {
        group.sort_unstable();
    }
    // ranks[s] = rank of the boundary from size-s chains to size-(s-1) chains.
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        ranks[s] = boundary_rank(&by_size[s], &by_size[s - 1], field);
    }
    let dims = (0..=top)
        .map(|s| by_size[s].len() - ranks[s] - ranks[s + 1])
        .collect();
    HomologyProfile { dims }
}

fn boundary_rank(upper: &[u64], lower: &[u64], field: FieldSpec) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let index: HashMap<u64, usize> = lower.iter().enumerate().map(|(k, &f)| (f, k)).collect();
    let rows: Vec<Vec<i64>> = upper
        .iter()
        .map(|&face| {
            let mut row = vec![0i64; lower.len()];
            let mut bits = face;
            let mut pos = 0;
            while bits != 0 {
                let b = bits & bits.wrapping_neg();
                let col = index[&(face & !b)];
                row[col] = if pos % 2 == 0 { 1 } else { -1 };
                bits &= bits - 1;
                pos += 1;
            }
            row
        })
        .collect();
    // Tall matrices eliminate faster with fewer rows.
    if rows.len() > lower.len() {
        linalg::rank(&transpose(&rows), field)
    } else {
        linalg::rank(&rows, field)
    }
}

fn transpose(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let ncols = rows[0].len();
    (0..ncols).map(|c| rows.iter().map(|r| r[c]).collect()).collect()
}

/// All faces of the complex generated by `facets` (including `∅` when there
/// is at least one facet).
pub fn faces_from_facets(facets: &[u64]) -> Vec<u64> {
    let mut faces: Vec<u64> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for &f in facets {
        let mut sub = f;
        loop {
            if seen.insert(sub) {
                faces.push(sub);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & f;
        }
    }
    faces.sort_unstable();
    faces
}
