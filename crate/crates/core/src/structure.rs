//! Linear quotients, variable-decomposability, the Scarf complex and the
//! shape-specific linear-resolution criteria.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graph::{
    build_syzygy_graph, classify_shape, has_linear_relations_combinatorial, GraphShape, SyzygyGraph,
};
use crate::monomial::{MonomialIdeal, SqfMonomial};
use crate::oracle;

/// Result of a combinatorial criterion with an optional failure witness
/// (0-based generator indices) and a short reason.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
    pub reason: Option<String>,
}

impl CriterionResult {
    fn pass() -> Self {
        CriterionResult { holds: true, witness: None, reason: None }
    }

    fn fail(witness: Option<Vec<usize>>, reason: impl Into<String>) -> Self {
        CriterionResult { holds: false, witness, reason: Some(reason.into()) }
    }
}

// ---------------------------------------------------------------------------
// Linear quotients

/// Outcome of [`is_admissible_order`]. On failure `failure = (g, j)`: adding
/// generator `g` leaves the colon by earlier generator `j` uncovered by variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderCheck {
    pub admissible: bool,
    pub failure: Option<(usize, usize)>,
}

/// First earlier generator `j` in `prefix` whose colon `u_j : u_g` is not
/// divisible by any variable generator of `<prefix> : u_g`.
fn colon_blocker(gens: &[SqfMonomial], prefix: impl Iterator<Item = usize> + Clone, g: usize) -> Option<usize> {
    let ug = gens[g];
    let linear = prefix
        .clone()
        .map(|k| gens[k].colon(ug))
        .filter(|c| c.degree() == 1)
        .fold(0u64, |acc, c| acc | c.bits());
    prefix.into_iter().find(|&j| gens[j].colon(ug).bits() & linear == 0)
}

/// Whether `<u_1,...,u_{i-1}> : u_i` is generated by variables for every step of `order`.
pub fn is_admissible_order(ideal: &MonomialIdeal, order: &[usize]) -> Result<OrderCheck> {
    let m = ideal.len();
    let mut seen = vec![false; m];
    if order.len() != m || order.iter().any(|&k| k >= m || std::mem::replace(&mut seen[k], true)) {
        return Err(Error::Input(format!("order is not a permutation of 1..={m}")));
    }
    let gens = ideal.gens();
    for pos in 1..m {
        if let Some(j) = colon_blocker(gens, order[..pos].iter().copied(), order[pos]) {
            return Ok(OrderCheck { admissible: false, failure: Some((order[pos], j)) });
        }
    }
    Ok(OrderCheck { admissible: true, failure: None })
}

/// Breadth-first order of a connected graph from vertex 0; every prefix induces
/// a connected subgraph.
pub fn connected_prefix_order(g: &SyzygyGraph) -> Option<Vec<usize>> {
    let m = g.vertex_count();
    if m == 0 || !g.is_connected() {
        return None;
    }
    let mut order = vec![0];
    let mut seen = vec![false; m];
    seen[0] = true;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
    }
    Some(order)
}

/// Searches for an admissible order. The connected-prefix order of `G_I` is
/// tried first; then a backtracking search over prefixes, memoizing prefix
/// sets that cannot be completed.
pub fn find_admissible_order(ideal: &MonomialIdeal) -> Result<Option<Vec<usize>>> {
    let m = ideal.len();
    if m > 64 {
        return Err(Error::Cap { what: "m", value: m, cap: 64 });
    }
    if m <= 1 {
        return Ok(Some((0..m).collect()));
    }
    if ideal.is_equigenerated() {
        let g = build_syzygy_graph(ideal)?;
        if let Some(order) = connected_prefix_order(&g) {
            if is_admissible_order(ideal, &order)?.admissible {
                return Ok(Some(order));
            }
        }
    }
    let gens = ideal.gens();
    let mut dead: HashSet<u64> = HashSet::new();
    let mut order = Vec::with_capacity(m);
    for start in 0..m {
        order.clear();
        order.push(start);
        if extend_order(gens, &mut order, 1u64 << start, &mut dead) {
            return Ok(Some(order));
        }
    }
    Ok(None)
}

fn extend_order(gens: &[SqfMonomial], order: &mut Vec<usize>, used: u64, dead: &mut HashSet<u64>) -> bool {
    let m = gens.len();
    if order.len() == m {
        return true;
    }
    if dead.contains(&used) {
        return false;
    }
    let mut candidates: Vec<(usize, usize)> = (0..m)
        .filter(|&g| used & (1 << g) == 0)
        .filter(|&g| colon_blocker(gens, order.iter().copied(), g).is_none())
        .map(|g| {
            let linear = order.iter().filter(|&&k| gens[k].colon(gens[g]).degree() == 1).count();
            (g, linear)
        })
        .collect();
    candidates.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    for (g, _) in candidates {
        order.push(g);
        if extend_order(gens, order, used | (1 << g), dead) {
            return true;
        }
        order.pop();
    }
    dead.insert(used);
    false
}

// ---------------------------------------------------------------------------
// Variable-decomposability

/// Witness of variable-decomposability. Generator indices refer to the input ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "node", rename_all = "camelCase")]
pub enum DecompositionTree {
    Leaf { gens: Vec<usize> },
    /// `without` holds `I_{x_l}`, `with` holds `I^{x_l}`.
    Branch {
        variable: usize,
        without: Box<DecompositionTree>,
        with: Box<DecompositionTree>,
    },
}

impl DecompositionTree {
    pub fn root_variable(&self) -> Option<usize> {
        match self {
            DecompositionTree::Leaf { .. } => None,
            DecompositionTree::Branch { variable, .. } => Some(*variable),
        }
    }
}

fn mask_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|&k| mask & (1 << k) != 0).collect()
}

/// Whether `x_l` is a shedding variable for the generators in `mask`; returns
/// the split `(I_{x_l}, I^{x_l})` when it is.
fn shedding_split(gens: &[SqfMonomial], mask: u64, l: usize) -> Option<(u64, u64)> {
    let xl = SqfMonomial::var(l);
    let (mut lo, mut hi) = (0u64, 0u64);
    for k in mask_indices(mask) {
        if gens[k].contains(l) {
            hi |= 1 << k;
        } else {
            lo |= 1 << k;
        }
    }
    if lo == 0 {
        return None;
    }
    let hi_idx = mask_indices(hi);
    let ok = mask_indices(lo)
        .into_iter()
        .all(|i| hi_idx.iter().any(|&j| gens[j].colon(gens[i]) == xl));
    ok.then_some((lo, hi))
}

fn decompose(
    gens: &[SqfMonomial],
    n: usize,
    mask: u64,
    memo: &mut HashMap<u64, Option<DecompositionTree>>,
) -> Option<DecompositionTree> {
    if mask.count_ones() <= 1 {
        return Some(DecompositionTree::Leaf { gens: mask_indices(mask) });
    }
    if let Some(hit) = memo.get(&mask) {
        return hit.clone();
    }
    let mut result = None;
    for l in 1..=n {
        let Some((lo, hi)) = shedding_split(gens, mask, l) else {
            continue;
        };
        let Some(without) = decompose(gens, n, lo, memo) else {
            continue;
        };
        let Some(with) = decompose(gens, n, hi, memo) else {
            continue;
        };
        result = Some(DecompositionTree::Branch {
            variable: l,
            without: Box::new(without),
            with: Box::new(with),
        });
        break;
    }
    memo.insert(mask, result.clone());
    result
}

/// 0-decomposability: recursive splitting by shedding variables, trying
/// `x_1, x_2, ...` in order and memoizing on generator subsets.
pub fn variable_decomposition(ideal: &MonomialIdeal) -> Result<Option<DecompositionTree>> {
    let m = ideal.len();
    if m > 64 {
        return Err(Error::Cap { what: "m", value: m, cap: 64 });
    }
    let mask = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut memo = HashMap::new();
    Ok(decompose(ideal.gens(), ideal.n(), mask, &mut memo))
}

pub fn is_variable_decomposable(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(variable_decomposition(ideal)?.is_some())
}

// ---------------------------------------------------------------------------
// Scarf complex

/// Subsets of generator indices (as bitmasks) whose lcm is attained by no
/// other subset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScarfComplex {
    pub m: usize,
    pub faces: Vec<u64>,
}

impl ScarfComplex {
    pub fn contains(&self, face: u64) -> bool {
        self.faces.binary_search(&face).is_ok()
    }

    /// Largest face size minus one (`-1` for `{∅}`).
    pub fn dimension(&self) -> isize {
        self.faces.iter().map(|f| f.count_ones() as isize).max().unwrap_or(0) - 1
    }

    pub fn faces_of_size(&self, s: u32) -> Vec<Vec<usize>> {
        self.faces
            .iter()
            .filter(|f| f.count_ones() == s)
            .map(|&f| mask_indices(f))
            .collect()
    }
}

pub fn scarf_complex(ideal: &MonomialIdeal, caps: &Caps) -> Result<ScarfComplex> {
    let m = ideal.len();
    if m > caps.scarf_gens {
        return Err(Error::Cap { what: "m", value: m, cap: caps.scarf_gens });
    }
    let gens = ideal.gens();
    let total = 1usize << m;
    let mut lcms = vec![0u64; total];
    for s in 1..total {
        let low = s.trailing_zeros() as usize;
        lcms[s] = lcms[s & (s - 1)] | gens[low].bits();
    }
    let mut counts: HashMap<u64, u32> = HashMap::new();
    for &l in &lcms {
        *counts.entry(l).or_insert(0) += 1;
    }
    let mut faces: Vec<u64> = (0..total)
        .filter(|&s| counts[&lcms[s]] == 1)
        .map(|s| s as u64)
        .collect();
    faces.sort_unstable();
    Ok(ScarfComplex { m, faces })
}

/// Whether the Scarf complex equals `G_I` as a 1-dimensional complex.
/// Requires `G_I` to be a tree.
pub fn scarf_matches_graph(ideal: &MonomialIdeal, caps: &Caps) -> Result<bool> {
    let g = build_syzygy_graph(ideal)?;
    if !classify_shape(&g).is_tree() {
        return Err(Error::Precondition("the syzygy graph is not a tree".into()));
    }
    let scarf = scarf_complex(ideal, caps)?;
    let m = ideal.len();
    if (0..m).any(|k| !scarf.contains(1 << k)) || scarf.dimension() > 1 {
        return Ok(false);
    }
    let scarf_edges: Vec<(usize, usize)> = scarf
        .faces_of_size(2)
        .into_iter()
        .map(|e| (e[0], e[1]))
        .collect();
    Ok(scarf_edges.len() == g.edge_count() && scarf_edges.iter().all(|&(a, b)| g.has_edge(a, b)))
}

// ---------------------------------------------------------------------------
// Shape criteria

fn shape_of(ideal: &MonomialIdeal) -> Result<(SyzygyGraph, GraphShape)> {
    let g = build_syzygy_graph(ideal)?;
    let shape = classify_shape(&g);
    Ok((g, shape))
}

/// Nested-support condition along a path `order`: `F(u_k) ⊆ F(u_i) ∪ F(u_j)`
/// whenever `k` lies between `j` and `i`. Witness `(j, k, i)`.
pub fn nested_along(ideal: &MonomialIdeal, order: &[usize]) -> CriterionResult {
    let s = order.len();
    for a in 0..s {
        for c in a + 2..s {
            let union = ideal.gen(order[a]).lcm(ideal.gen(order[c]));
            if let Some(b) = (a + 1..c).find(|&b| !ideal.gen(order[b]).divides(union)) {
                return CriterionResult::fail(
                    Some(vec![order[a], order[b], order[c]]),
                    "interior support not contained in the endpoint union",
                );
            }
        }
    }
    CriterionResult::pass()
}

/// Line criterion; requires `G_I` to be a line.
pub fn line_criterion(ideal: &MonomialIdeal) -> Result<CriterionResult> {
    match shape_of(ideal)?.1 {
        GraphShape::Line { order } => Ok(nested_along(ideal, &order)),
        other => Err(Error::Precondition(format!("syzygy graph is {other}, not a line"))),
    }
}

/// Cycle criterion; requires the unpruned syzygy graph to be a cycle of
/// length `m ≥ 4`. A cycle that only appears after removing an edge of a
/// type-(i) triangle depends on which edge was removed, and the criterion is
/// not sound there.
///
/// The test runs on `I / gcd(G(I))` in the variables that occur: with `m`
/// such variables and every generator of degree `m - 2`, a relabeling making
/// `u_j` miss exactly `x_j, x_{j+1}` exists iff every variable is missing
/// from exactly two cyclically consecutive generators.
pub fn cycle_criterion(ideal: &MonomialIdeal) -> Result<CriterionResult> {
    let (g, shape) = shape_of(ideal)?;
    let order = match shape {
        GraphShape::Cycle { order } if order.len() >= 4 => order,
        other => return Err(Error::Precondition(format!("syzygy graph is {other}, not a cycle of length ≥ 4"))),
    };
    if !g.pruned_edges().is_empty() {
        return Err(Error::Precondition("syzygy graph is a cycle only after triangle pruning".into()));
    }
    Ok(cycle_pattern(ideal, &order))
}

fn cycle_pattern(ideal: &MonomialIdeal, order: &[usize]) -> CriterionResult {
    let common = ideal.gens().iter().fold(ideal.support(), |acc, &u| acc.gcd(u));
    let free = SqfMonomial::from_bits(ideal.support().bits() & !common.bits());
    let (m, n) = (order.len(), free.degree());
    if m != n {
        return CriterionResult::fail(None, format!("m = {m} differs from the {n} non-common variables"));
    }
    if let Some(&bad) = order.iter().find(|&&k| ideal.gen(k).degree() - common.degree() + 2 != n) {
        return CriterionResult::fail(Some(vec![bad]), format!("reduced generator degree is not {}", n - 2));
    }
    for v in free.vars() {
        let missing: Vec<usize> = (0..m).filter(|&p| !ideal.gen(order[p]).contains(v)).collect();
        let consecutive = missing.len() == 2 && {
            let gap = missing[1] - missing[0];
            gap == 1 || gap == m - 1
        };
        if !consecutive {
            return CriterionResult::fail(
                Some(missing.iter().map(|&p| order[p]).collect()),
                format!("x{v} is not missing from exactly two consecutive generators"),
            );
        }
    }
    CriterionResult::pass()
}

/// Tree criterion; requires `G_I` to be a tree. Every interior vertex `w` of
/// the path between `a` and `b` must satisfy `F(u_w) ⊆ F(u_a) ∪ F(u_b)`.
/// Witness `(a, w, b)` for the lexicographically least failing pair.
pub fn tree_criterion(ideal: &MonomialIdeal) -> Result<CriterionResult> {
    let (g, shape) = shape_of(ideal)?;
    if !shape.is_tree() {
        return Err(Error::Precondition(format!("syzygy graph is {shape}, not a tree")));
    }
    Ok(tree_paths_nested(ideal, &g))
}

fn tree_paths_nested(ideal: &MonomialIdeal, g: &SyzygyGraph) -> CriterionResult {
    let m = ideal.len();
    for a in 0..m {
        for b in a + 1..m {
            let path = g.path(a, b).expect("trees are connected");
            let union = ideal.gen(a).lcm(ideal.gen(b));
            if let Some(&w) = path[1..path.len() - 1].iter().find(|&&w| !ideal.gen(w).divides(union)) {
                return CriterionResult::fail(
                    Some(vec![a, w, b]),
                    "interior support not contained in the endpoint union",
                );
            }
        }
    }
    CriterionResult::pass()
}

/// For `I` with linear quotients and a new degree-`d` generator `v` that is a
/// leaf of `G_{<I,v>}` with neighbor `u_i`: whether the variable
/// `F(u_i) \ F(v)` divides every generator of `I`.
pub fn leaf_extension_check(ideal: &MonomialIdeal, v: SqfMonomial) -> Result<bool> {
    let d = ideal
        .degree()
        .ok_or_else(|| Error::Precondition("ideal must be nonzero and equigenerated".into()))?;
    if v.degree() != d {
        return Err(Error::Precondition(format!("v has degree {}, expected {d}", v.degree())));
    }
    if ideal.contains(v) {
        return Err(Error::Precondition("v already lies in the ideal".into()));
    }
    if v.max_var() > ideal.n() {
        return Err(Error::Input(format!("v = {v} uses a variable outside 1..={}", ideal.n())));
    }
    if find_admissible_order(ideal)?.is_none() {
        return Err(Error::Precondition("ideal does not have linear quotients".into()));
    }
    let mut gens = ideal.gens().to_vec();
    gens.push(v);
    let extended = MonomialIdeal::new(ideal.n(), &gens)?;
    let g = build_syzygy_graph(&extended)?;
    let leaf = ideal.len();
    let nbrs = g.neighbors(leaf);
    let [branch] = nbrs[..] else {
        return Err(Error::Precondition(format!(
            "v is not a leaf of the extended graph (degree {})",
            nbrs.len()
        )));
    };
    let l = ideal
        .gen(branch)
        .colon(v)
        .as_var()
        .expect("adjacent generators differ by one variable");
    Ok(ideal.gens().iter().all(|u| u.contains(l)))
}

// ---------------------------------------------------------------------------
// Dispatcher

/// Which rule produced a linear-resolution verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Rule {
    Principal,
    Complete,
    Line,
    Triangle,
    Cycle,
    Tree,
    Disconnected,
    Oracle,
}

/// Verdict of [`decide_linear_resolution`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub linear_resolution: bool,
    pub rule: Rule,
    pub shape: GraphShape,
    /// Set when a shape theorem makes linear quotients equivalent to the verdict.
    pub linear_quotients: Option<bool>,
    /// Set when a shape theorem makes variable-decomposability equivalent to the verdict.
    pub variable_decomposable: Option<bool>,
    pub detail: Option<CriterionResult>,
}

/// Shape-theorem verdict without touching the oracle; `None` when `G_I` is
/// connected but neither a line, tree, cycle nor complete graph, or is a
/// cycle of length at least 4 only after triangle pruning.
pub fn decide_by_criterion(ideal: &MonomialIdeal) -> Result<Option<Decision>> {
    let (g, shape) = shape_of(ideal)?;
    let (verdict, rule, detail) = match &shape {
        GraphShape::Line { order } if order.len() <= 1 => (true, Rule::Principal, None),
        GraphShape::Line { order } => {
            let r = nested_along(ideal, order);
            (r.holds, Rule::Line, Some(r))
        }
        GraphShape::Tree => {
            let r = tree_paths_nested(ideal, &g);
            (r.holds, Rule::Tree, Some(r))
        }
        GraphShape::Cycle { order } if order.len() == 3 => (true, Rule::Triangle, None),
        GraphShape::Cycle { .. } if !g.pruned_edges().is_empty() => return Ok(None),
        GraphShape::Cycle { order } => {
            let r = cycle_pattern(ideal, order);
            (r.holds, Rule::Cycle, Some(r))
        }
        GraphShape::Complete => (true, Rule::Complete, None),
        GraphShape::Disconnected => (false, Rule::Disconnected, None),
        GraphShape::ConnectedOther => return Ok(None),
    };
    Ok(Some(Decision {
        linear_resolution: verdict,
        rule,
        shape,
        linear_quotients: Some(verdict),
        variable_decomposable: Some(verdict),
        detail,
    }))
}

/// Decides whether `I` has a linear resolution, preferring the shape criteria
/// and falling back to the Betti oracle.
pub fn decide_linear_resolution(ideal: &MonomialIdeal, field: FieldSpec, caps: &Caps) -> Result<Decision> {
    if let Some(decision) = decide_by_criterion(ideal)? {
        return Ok(decision);
    }
    let verdict = oracle::has_linear_resolution(ideal, field, caps)?;
    Ok(Decision {
        linear_resolution: verdict,
        rule: Rule::Oracle,
        shape: shape_of(ideal)?.1,
        linear_quotients: None,
        variable_decomposable: None,
        detail: None,
    })
}

/// Combinatorial linear relations as a [`CriterionResult`].
pub fn linear_relations_criterion(ideal: &MonomialIdeal) -> Result<CriterionResult> {
    let cert = has_linear_relations_combinatorial(ideal)?;
    Ok(match cert.violating_pair {
        None => CriterionResult::pass(),
        Some((a, b)) => CriterionResult::fail(Some(vec![a, b]), "pair subgraph is disconnected"),
    })
}
