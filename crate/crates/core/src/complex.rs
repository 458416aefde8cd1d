//! Simplicial complexes given by facets, Alexander duality and the
//! Cohen-Macaulay / shellable / vertex-decomposable decisions.

use std::collections::HashSet;

use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graph::{build_syzygy_graph, classify_shape, raw_syzygy_graph, GraphShape, SyzygyGraph};
use crate::monomial::{MonomialIdeal, SqfMonomial, MAX_VARS};
use crate::structure::{decide_linear_resolution, is_variable_decomposable, CriterionResult, Decision};

/// A face, stored as a vertex set with the same bit layout as [`SqfMonomial`].
pub type Face = SqfMonomial;

/// A simplicial complex on `[n]` given by its facets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
}

fn full_set(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl SimplicialComplex {
    /// Facets must be pairwise incomparable and use vertices in `1..=n`.
    pub fn new(n: usize, facets: Vec<Face>) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::Input(format!("n = {n} exceeds the maximum of {MAX_VARS}")));
        }
        for (a, f) in facets.iter().enumerate() {
            if f.max_var() > n {
                return Err(Error::Input(format!("facet {f} uses a vertex outside 1..={n}")));
            }
            if let Some(g) = facets.iter().enumerate().find(|&(b, g)| b != a && f.divides(*g)) {
                return Err(Error::Input(format!("facet {f} is contained in facet {}", g.1)));
            }
        }
        Ok(SimplicialComplex { n, facets })
    }

    pub fn from_facets(n: usize, facets: &[&[usize]]) -> Result<Self> {
        let facets = facets
            .iter()
            .map(|f| Face::from_support(f.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, facets)
    }

    /// Keeps the inclusion-maximal sets among `faces`, in first-occurrence order.
    pub fn from_faces(n: usize, faces: &[Face]) -> Result<Self> {
        let mut facets: Vec<Face> = Vec::new();
        for (k, &f) in faces.iter().enumerate() {
            let dominated = faces.iter().any(|&g| g != f && f.divides(g)) || faces[..k].contains(&f);
            if !dominated {
                facets.push(f);
            }
        }
        Self::new(n, facets)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].degree() == w[1].degree())
    }

    /// `max |F| - 1`; `-1` for `{∅}` and the void complex.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.degree() as isize).max().unwrap_or(0) - 1
    }

    pub fn facet_index(&self, f: Face) -> Option<usize> {
        self.facets.iter().position(|&g| g == f)
    }

    pub fn contains_face(&self, f: Face) -> bool {
        self.facets.iter().any(|g| f.divides(*g))
    }

    fn require_pure(&self) -> Result<()> {
        if self.is_pure() {
            Ok(())
        } else {
            Err(Error::Precondition("simplicial complex is not pure".into()))
        }
    }
}

/// `I_{Δ∨}`, generated by the complements `[n] \ F` of the facets.
pub fn dual_ideal(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
    if complex.is_empty() {
        return Err(Error::Input("complex has no facets".into()));
    }
    let full = full_set(complex.n);
    if complex.facets.iter().any(|f| f.bits() == full) {
        return Err(Error::Input("a facet equals [n]; its dual generator would be 1".into()));
    }
    let gens: Vec<SqfMonomial> = complex
        .facets
        .iter()
        .map(|f| SqfMonomial::from_bits(full & !f.bits()))
        .collect();
    MonomialIdeal::new(complex.n, &gens)
}

/// The complex whose faces are the subsets of `[n]` containing no generator's support.
pub fn stanley_reisner_complex(ideal: &MonomialIdeal, caps: &Caps) -> Result<SimplicialComplex> {
    let n = ideal.n();
    if n > caps.oracle_vars {
        return Err(Error::Cap { what: "n", value: n, cap: caps.oracle_vars });
    }
    let gens: Vec<u64> = ideal.gens().iter().map(|g| g.bits()).collect();
    let is_face = |s: u64| gens.iter().all(|&g| g & !s != 0);
    let mut facets = Vec::new();
    for s in 0..=full_set(n) {
        if is_face(s) && (0..n).all(|v| s & (1 << v) != 0 || !is_face(s | 1 << v)) {
            facets.push(SqfMonomial::from_bits(s));
        }
    }
    SimplicialComplex::new(n, facets)
}

/// Alexander dual `I^∨ = I_{(Δ_I)∨}`, generated by the minimal transversals of `G(I)`.
pub fn alexander_dual(ideal: &MonomialIdeal, caps: &Caps) -> Result<MonomialIdeal> {
    dual_ideal(&stanley_reisner_complex(ideal, caps)?)
}

/// Height of a proper nonzero ideal: the smallest transversal of its generators.
pub fn height(ideal: &MonomialIdeal, caps: &Caps) -> Result<usize> {
    if ideal.is_empty() || ideal.gens().iter().any(|g| g.is_one()) {
        return Err(Error::Input("height needs a proper nonzero ideal".into()));
    }
    let dual = alexander_dual(ideal, caps)?;
    Ok(dual.gens().iter().map(|g| g.degree()).min().unwrap_or(0))
}

fn codim_one(a: Face, b: Face) -> bool {
    a.degree() == b.degree() && a.gcd(b).degree() + 1 == a.degree()
}

/// `G_Δ`: facets adjacent when they meet in codimension one.
pub fn facet_graph(complex: &SimplicialComplex) -> Result<SyzygyGraph> {
    complex.require_pure()?;
    let f = &complex.facets;
    let edges = (0..f.len())
        .flat_map(|a| (a + 1..f.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| codim_one(f[a], f[b]));
    let g = SyzygyGraph::new(f.len(), edges);
    if let Ok(dual) = dual_ideal(complex) {
        debug_assert_eq!(
            raw_syzygy_graph(&dual).map(|h| h.edges().clone()).ok(),
            Some(g.edges().clone()),
            "facet graph must agree with the dual syzygy graph"
        );
    }
    Ok(g)
}

/// Connected in codimension one.
pub fn is_strongly_connected(complex: &SimplicialComplex) -> Result<bool> {
    Ok(facet_graph(complex)?.is_connected())
}

/// Facet indices of `Δ^{(F,G)}`: facets containing `F ∩ G`.
pub fn pair_subcomplex(complex: &SimplicialComplex, f: usize, g: usize) -> Vec<usize> {
    let core = complex.facets[f].gcd(complex.facets[g]);
    (0..complex.len()).filter(|&k| core.divides(complex.facets[k])).collect()
}

/// Whether `Δ^{(F,G)}` is connected in codimension one.
pub fn pair_subcomplex_connected(complex: &SimplicialComplex, f: Face, g: Face) -> Result<bool> {
    let fi = complex
        .facet_index(f)
        .ok_or_else(|| Error::Input(format!("{f} is not a facet")))?;
    let gi = complex
        .facet_index(g)
        .ok_or_else(|| Error::Input(format!("{g} is not a facet")))?;
    let graph = facet_graph(complex)?;
    Ok(graph.connected_within(&pair_subcomplex(complex, fi, gi)))
}

/// First facet pair (lexicographic) whose `Δ^{(F,G)}` is not connected in
/// codimension one, or `None` if all are.
pub fn first_disconnected_pair(complex: &SimplicialComplex) -> Result<Option<(usize, usize)>> {
    let graph = facet_graph(complex)?;
    let m = complex.len();
    for a in 0..m {
        for b in a + 1..m {
            if !graph.connected_within(&pair_subcomplex(complex, a, b)) {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

/// Cohen-Macaulay verdict with its provenance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmVerdict {
    pub cohen_macaulay: bool,
    pub reason: String,
    /// Linear-resolution decision for the dual ideal, when one was made.
    pub dual_decision: Option<Decision>,
}

/// Cohen-Macaulayness via Eagon-Reiner: `Δ` is CM iff `I_{Δ∨}` has a linear
/// resolution. Non-pure complexes are never CM.
pub fn is_cohen_macaulay(complex: &SimplicialComplex, field: FieldSpec, caps: &Caps) -> Result<CmVerdict> {
    if !complex.is_pure() {
        return Ok(CmVerdict { cohen_macaulay: false, reason: "not pure".into(), dual_decision: None });
    }
    if complex.len() == 1 {
        return Ok(CmVerdict { cohen_macaulay: true, reason: "simplex".into(), dual_decision: None });
    }
    let dual = dual_ideal(complex)?;
    let decision = decide_linear_resolution(&dual, field, caps)?;
    Ok(CmVerdict {
        cohen_macaulay: decision.linear_resolution,
        reason: format!("dual ideal decided by the {:?} rule", decision.rule).to_lowercase(),
        dual_decision: Some(decision),
    })
}

/// Searches for a shelling order: each facet after the first must meet the
/// complex of the earlier ones in a pure complex of codimension one.
pub fn is_shellable(complex: &SimplicialComplex, caps: &Caps) -> Result<Option<Vec<usize>>> {
    complex.require_pure()?;
    let m = complex.len();
    if m > caps.shelling_facets {
        return Err(Error::Cap { what: "facets", value: m, cap: caps.shelling_facets });
    }
    if m <= 1 {
        return Ok(Some((0..m).collect()));
    }
    let mut dead = HashSet::new();
    let mut order = Vec::with_capacity(m);
    for start in 0..m {
        order.clear();
        order.push(start);
        if extend_shelling(&complex.facets, &mut order, 1 << start, &mut dead) {
            return Ok(Some(order));
        }
    }
    Ok(None)
}

/// `<F_prefix> ∩ <F>` is pure of dimension `|F| - 2` iff every `F ∩ F_j` lies
/// in some codimension-one intersection `F ∩ F_k`.
fn shells_onto(facets: &[Face], prefix: &[usize], f: usize) -> bool {
    let target = facets[f].degree() - 1;
    let ridges: Vec<Face> = prefix
        .iter()
        .map(|&k| facets[f].gcd(facets[k]))
        .filter(|r| r.degree() == target)
        .collect();
    prefix.iter().all(|&j| {
        let meet = facets[f].gcd(facets[j]);
        ridges.iter().any(|r| meet.divides(*r))
    })
}

fn extend_shelling(facets: &[Face], order: &mut Vec<usize>, used: u64, dead: &mut HashSet<u64>) -> bool {
    let m = facets.len();
    if order.len() == m {
        return true;
    }
    if dead.contains(&used) {
        return false;
    }
    let mut candidates: Vec<(usize, usize)> = (0..m)
        .filter(|&f| used & (1 << f) == 0 && shells_onto(facets, order, f))
        .map(|f| {
            let overlap = order.iter().filter(|&&k| codim_one(facets[f], facets[k])).count();
            (f, overlap)
        })
        .collect();
    candidates.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    for (f, _) in candidates {
        order.push(f);
        if extend_shelling(facets, order, used | 1 << f, dead) {
            return true;
        }
        order.pop();
    }
    dead.insert(used);
    false
}

/// Vertex-decomposability of a pure complex, via variable-decomposability of
/// its Alexander dual ideal.
pub fn is_vertex_decomposable_pure(complex: &SimplicialComplex) -> Result<bool> {
    complex.require_pure()?;
    if complex.len() <= 1 {
        return Ok(true);
    }
    is_variable_decomposable(&dual_ideal(complex)?)
}

/// `F_i ∩ F_k ⊆ F_j` for all `i ≤ j ≤ k` along `order`. Witness `(i, j, k)`.
fn facet_path_nested(facets: &[Face], order: &[usize]) -> CriterionResult {
    let s = order.len();
    for a in 0..s {
        for c in a + 2..s {
            let meet = facets[order[a]].gcd(facets[order[c]]);
            if let Some(b) = (a + 1..c).find(|&b| !meet.divides(facets[order[b]])) {
                return CriterionResult {
                    holds: false,
                    witness: Some(vec![order[a], order[b], order[c]]),
                    reason: Some("intersection of the endpoints escapes an interior facet".into()),
                };
            }
        }
    }
    CriterionResult { holds: true, witness: None, reason: None }
}

fn facet_cycle_condition(complex: &SimplicialComplex, order: &[usize]) -> CriterionResult {
    let (m, n) = (order.len(), complex.n);
    let fail = |reason: String| CriterionResult { holds: false, witness: None, reason: Some(reason) };
    if m != n {
        return fail(format!("fails: m = {m} differs from n = {n}"));
    }
    for v in 1..=n {
        let hits: Vec<usize> = (0..m).filter(|&p| complex.facets[order[p]].contains(v)).collect();
        let ok = hits.len() == 2 && {
            let gap = hits[1] - hits[0];
            gap == 1 || gap == m - 1
        };
        if !ok {
            return fail(format!("vertex {v} does not lie in exactly two consecutive facets"));
        }
    }
    CriterionResult { holds: true, witness: None, reason: None }
}

/// Report of the facet-side corollary conditions together with independently
/// computed CM, shellability and vertex-decomposability verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmShapeReport {
    pub shape: GraphShape,
    /// Facet-side condition of the shape corollary; `None` when the shape has none.
    pub condition: Option<CriterionResult>,
    pub cohen_macaulay: CmVerdict,
    pub shellable: bool,
    pub shelling_order: Option<Vec<usize>>,
    pub vertex_decomposable: bool,
    /// Whether every `Δ^{(F,G)}` is connected in codimension one.
    pub pair_subcomplexes_connected: bool,
    /// For line, cycle and tree shapes: whether all verdicts equal the condition.
    pub equivalences_hold: Option<bool>,
}

pub fn cm_shape_report(complex: &SimplicialComplex, field: FieldSpec, caps: &Caps) -> Result<CmShapeReport> {
    complex.require_pure()?;
    let cohen_macaulay = is_cohen_macaulay(complex, field, caps)?;
    let shelling_order = is_shellable(complex, caps)?;
    let vertex_decomposable = is_vertex_decomposable_pure(complex)?;
    let pair_subcomplexes_connected = first_disconnected_pair(complex)?.is_none();
    let shape = if complex.len() <= 1 {
        GraphShape::Line { order: (0..complex.len()).collect() }
    } else {
        classify_shape(&build_syzygy_graph(&dual_ideal(complex)?)?)
    };
    let condition = match &shape {
        GraphShape::Line { order } => Some(facet_path_nested(&complex.facets, order)),
        GraphShape::Cycle { order } if order.len() >= 4 => Some(facet_cycle_condition(complex, order)),
        GraphShape::Tree => {
            let g = build_syzygy_graph(&dual_ideal(complex)?)?;
            let m = complex.len();
            let mut result = CriterionResult { holds: true, witness: None, reason: None };
            'pairs: for a in 0..m {
                for b in a + 1..m {
                    let path = g.path(a, b).expect("trees are connected");
                    let r = facet_path_nested(&complex.facets, &path);
                    if !r.holds {
                        result = r;
                        break 'pairs;
                    }
                }
            }
            Some(result)
        }
        _ => None,
    };
    let equivalences_hold = match (&shape, &condition) {
        (GraphShape::Line { .. } | GraphShape::Tree | GraphShape::Cycle { .. }, Some(c)) => {
            let c = c.holds;
            Some(
                cohen_macaulay.cohen_macaulay == c
                    && shelling_order.is_some() == c
                    && vertex_decomposable == c,
            )
        }
        _ => None,
    };
    Ok(CmShapeReport {
        shape,
        condition,
        cohen_macaulay,
        shellable: shelling_order.is_some(),
        shelling_order,
        vertex_decomposable,
        pair_subcomplexes_connected,
        equivalences_hold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, f: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, f).unwrap()
    }

    fn sqf(s: &[usize]) -> SqfMonomial {
        SqfMonomial::from_support(s.iter().copied()).unwrap()
    }

    #[test]
    fn construction_checks() {
        assert!(SimplicialComplex::from_facets(3, &[&[1, 2], &[1, 2, 3]]).is_err());
        assert!(SimplicialComplex::from_facets(3, &[&[1, 4]]).is_err());
        let c = SimplicialComplex::from_faces(3, &[sqf(&[1]), sqf(&[1, 2]), sqf(&[3]), sqf(&[1, 2])]).unwrap();
        assert_eq!(c.facets(), &[sqf(&[1, 2]), sqf(&[3])]);
        assert!(!c.is_pure());
        assert_eq!(c.dimension(), 1);
    }

    #[test]
    fn dual_ideals() {
        let d = dual_ideal(&cx(4, &[&[1, 2], &[2, 3], &[3, 4]])).unwrap();
        assert_eq!(d.gens(), &[sqf(&[3, 4]), sqf(&[1, 4]), sqf(&[1, 2])]);
        assert!(dual_ideal(&cx(3, &[&[1, 2, 3]])).is_err());
        let mixed = dual_ideal(&cx(5, &[&[1, 2], &[3, 4, 5]])).unwrap();
        assert!(!mixed.is_equigenerated());
    }

    #[test]
    fn stanley_reisner() {
        let caps = Caps::default();
        let c = stanley_reisner_complex(&MonomialIdeal::from_supports(2, &[&[1, 2]]).unwrap(), &caps).unwrap();
        assert_eq!(c.facets(), &[sqf(&[1]), sqf(&[2])]);
        let c4 = MonomialIdeal::from_supports(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]).unwrap();
        let c = stanley_reisner_complex(&c4, &caps).unwrap();
        assert_eq!(c.facets(), &[sqf(&[1, 3]), sqf(&[2, 4])]);
        let zero = stanley_reisner_complex(&MonomialIdeal::zero(3), &caps).unwrap();
        assert_eq!(zero.facets(), &[sqf(&[1, 2, 3])]);
    }

    #[test]
    fn duality_round_trip() {
        let caps = Caps::default();
        let i = MonomialIdeal::from_supports(4, &[&[1, 2], &[2, 3], &[3, 4]]).unwrap();
        let delta = stanley_reisner_complex(&i, &caps).unwrap();
        let dual = dual_ideal(&delta).unwrap();
        let again = dual_ideal(&stanley_reisner_complex(&dual, &caps).unwrap()).unwrap();
        let mut a = again.gens().to_vec();
        let mut b = i.gens().to_vec();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    fn broken_line_dual() -> SimplicialComplex {
        cx(6, &[&[4, 5, 6], &[3, 5, 6], &[2, 3, 6], &[1, 2, 3], &[1, 2, 4]])
    }

    #[test]
    fn broken_line_dual_fails_everywhere() {
        let caps = Caps::default();
        let delta = broken_line_dual();
        assert!(!pair_subcomplex_connected(&delta, sqf(&[4, 5, 6]), sqf(&[1, 2, 4])).unwrap());
        assert_eq!(first_disconnected_pair(&delta).unwrap(), Some((0, 4)));
        assert!(!is_vertex_decomposable_pure(&delta).unwrap());
        let r = cm_shape_report(&delta, FieldSpec::Rationals, &caps).unwrap();
        assert_eq!(r.shape, GraphShape::Line { order: vec![0, 1, 2, 3, 4] });
        assert!(!r.condition.as_ref().unwrap().holds);
        assert!(!r.cohen_macaulay.cohen_macaulay && !r.shellable && !r.vertex_decomposable);
        assert_eq!(r.equivalences_hold, Some(true));
    }

    #[test]
    fn facet_graphs() {
        let g = facet_graph(&cx(4, &[&[1, 2], &[2, 3], &[3, 4]])).unwrap();
        assert_eq!(classify_shape(&g), GraphShape::Line { order: vec![0, 1, 2] });
        let g = facet_graph(&cx(4, &[&[1, 2], &[3, 4]])).unwrap();
        assert_eq!(g.edge_count(), 0);
        let g = facet_graph(&cx(3, &[&[1, 2]])).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert!(facet_graph(&cx(4, &[&[1, 2], &[2, 3, 4]])).is_err());
    }

    #[test]
    fn strong_connectivity() {
        assert!(is_strongly_connected(&cx(4, &[&[1, 2], &[2, 3], &[3, 4]])).unwrap());
        assert!(!is_strongly_connected(&cx(4, &[&[1, 2], &[3, 4]])).unwrap());
        assert!(is_strongly_connected(&cx(3, &[&[1, 2]])).unwrap());
    }

    #[test]
    fn pair_subcomplexes() {
        let line = cx(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        assert!(pair_subcomplex_connected(&line, sqf(&[1, 2]), sqf(&[3, 4])).unwrap());
        assert!(pair_subcomplex_connected(&line, sqf(&[2, 3]), sqf(&[2, 3])).unwrap());
        assert!(pair_subcomplex_connected(&line, sqf(&[1, 3]), sqf(&[2, 3])).is_err());
        assert_eq!(first_disconnected_pair(&line).unwrap(), None);
    }

    #[test]
    fn cohen_macaulay_spot_checks() {
        let caps = Caps::default();
        // duals of (xy, yz, zt) and (xy, zt)
        let yes = cx(4, &[&[3, 4], &[1, 4], &[1, 2]]);
        assert!(is_cohen_macaulay(&yes, FieldSpec::Rationals, &caps).unwrap().cohen_macaulay);
        let no = cx(4, &[&[3, 4], &[1, 2]]);
        assert!(!is_cohen_macaulay(&no, FieldSpec::Rationals, &caps).unwrap().cohen_macaulay);
        // all 3-subsets of [4]: dual generated by the variables
        let boundary = cx(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        assert!(is_cohen_macaulay(&boundary, FieldSpec::Rationals, &caps).unwrap().cohen_macaulay);
        let nonpure = cx(4, &[&[1, 2], &[2, 3, 4]]);
        let v = is_cohen_macaulay(&nonpure, FieldSpec::Rationals, &caps).unwrap();
        assert!(!v.cohen_macaulay);
        assert_eq!(v.reason, "not pure");
    }

    #[test]
    fn shellability() {
        let caps = Caps::default();
        assert_eq!(is_shellable(&cx(4, &[&[1, 2], &[2, 3], &[3, 4]]), &caps).unwrap(), Some(vec![0, 1, 2]));
        assert_eq!(is_shellable(&cx(4, &[&[1, 2], &[3, 4]]), &caps).unwrap(), None);
        assert_eq!(is_shellable(&cx(3, &[&[1, 2, 3]]), &caps).unwrap(), Some(vec![0]));
        // points are shellable
        assert!(is_shellable(&cx(3, &[&[1], &[2], &[3]]), &caps).unwrap().is_some());
        // two triangles sharing a vertex: not shellable
        assert_eq!(is_shellable(&cx(5, &[&[1, 2, 3], &[3, 4, 5]]), &caps).unwrap(), None);
    }

    #[test]
    fn vertex_decomposability() {
        assert!(is_vertex_decomposable_pure(&cx(4, &[&[1, 2], &[2, 3], &[3, 4]])).unwrap());
        assert!(!is_vertex_decomposable_pure(&cx(4, &[&[1, 2], &[3, 4]])).unwrap());
        assert!(is_vertex_decomposable_pure(&cx(3, &[&[1, 2, 3]])).unwrap());
        assert!(is_vertex_decomposable_pure(&cx(4, &[&[1], &[2, 3]])).is_err());
    }

    #[test]
    fn shape_reports() {
        let caps = Caps::default();
        let r = cm_shape_report(&cx(4, &[&[1, 2], &[2, 3], &[3, 4]]), FieldSpec::Rationals, &caps).unwrap();
        assert!(matches!(r.shape, GraphShape::Line { .. }));
        assert!(r.condition.as_ref().unwrap().holds);
        assert!(r.cohen_macaulay.cohen_macaulay && r.shellable && r.vertex_decomposable);
        assert_eq!(r.equivalences_hold, Some(true));

        let cyc = cx(4, &[&[1, 4], &[1, 2], &[2, 3], &[3, 4]]);
        let r = cm_shape_report(&cyc, FieldSpec::Rationals, &caps).unwrap();
        assert!(matches!(r.shape, GraphShape::Cycle { .. }));
        assert!(r.condition.as_ref().unwrap().holds);
        assert_eq!(r.equivalences_hold, Some(true));
        assert!(r.cohen_macaulay.cohen_macaulay);
    }
}
