//! The linear syzygy graph `G_I` of an equigenerated squarefree monomial ideal.
//!
//! Vertices are generator positions (0-based). Two generators are adjacent
//! when `x u_i = y u_j` for variables `x, y`, i.e. their supports differ by a
//! single swap. Triangles whose three pairwise lcms coincide carry only two
//! independent linear syzygies, so one edge of each such triangle is pruned.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{MonomialIdeal, SqfMonomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrunedEdge {
    pub edge: (usize, usize),
    pub triangle: (usize, usize, usize),
}

/// Simple undirected graph on vertices `0..m` with an audit trail of pruned edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SyzygyGraph {
    m: usize,
    edges: BTreeSet<(usize, usize)>,
    pruned: Vec<PrunedEdge>,
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl SyzygyGraph {
    pub fn new(m: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let edges = edges
            .into_iter()
            .filter(|&(a, b)| a != b)
            .map(|(a, b)| {
                assert!(a < m && b < m, "edge ({a},{b}) out of range for {m} vertices");
                ordered(a, b)
            })
            .collect();
        SyzygyGraph { m, edges, pruned: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn pruned_edges(&self) -> &[PrunedEdge] {
        &self.pruned
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&ordered(a, b))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.m];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        self.m <= 1 || self.connected_within(&(0..self.m).collect::<Vec<_>>())
    }

    /// Whether the subgraph induced on `vertices` is connected (vacuously true
    /// when empty).
    pub fn connected_within(&self, vertices: &[usize]) -> bool {
        let Some(&start) = vertices.first() else {
            return true;
        };
        let mut inside = vec![false; self.m];
        for &v in vertices {
            inside[v] = true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.m];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == vertices.iter().collect::<BTreeSet<_>>().len()
    }

    /// A shortest path from `a` to `b` (lexicographically smallest among BFS
    /// choices), or `None` if they lie in different components.
    pub fn path(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let adj = self.adjacency();
        let mut parent = vec![usize::MAX; self.m];
        parent[a] = a;
        let mut queue = VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            if v == b {
                break;
            }
            for &w in &adj[v] {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if parent[b] == usize::MAX {
            return None;
        }
        let mut path = vec![b];
        let mut v = b;
        while v != a {
            v = parent[v];
            path.push(v);
        }
        path.reverse();
        Some(path)
    }

    /// The subgraph induced on `vertices`, keeping the original labels.
    pub fn induced(&self, vertices: &[usize]) -> InducedSubgraph {
        let set: BTreeSet<usize> = vertices.iter().copied().collect();
        let edges = self
            .edges
            .iter()
            .filter(|(a, b)| set.contains(a) && set.contains(b))
            .copied()
            .collect();
        InducedSubgraph { vertices: set.into_iter().collect(), edges }
    }
}

/// An induced subgraph labelled by the parent graph's vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedSubgraph {
    pub vertices: Vec<usize>,
    pub edges: BTreeSet<(usize, usize)>,
}

impl InducedSubgraph {
    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.vertices.first() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == self.vertices.len()
    }
}

/// Whether two squarefree monomials of equal degree differ by one variable swap.
pub fn linearly_adjacent(u: SqfMonomial, v: SqfMonomial) -> bool {
    u.colon(v).degree() == 1 && v.colon(u).degree() == 1
}

/// `G_I` before triangle pruning.
pub fn raw_syzygy_graph(ideal: &MonomialIdeal) -> Result<SyzygyGraph> {
    if ideal.is_empty() {
        return Err(Error::Precondition("syzygy graph of the zero ideal".into()));
    }
    if !ideal.is_equigenerated() {
        return Err(Error::MixedDegrees);
    }
    let gens = ideal.gens();
    let m = gens.len();
    let mut edges = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            if linearly_adjacent(gens[a], gens[b]) {
                edges.push((a, b));
            }
        }
    }
    Ok(SyzygyGraph::new(m, edges))
}

/// `G_I`: the raw graph with one edge removed from every triangle whose
/// pairwise lcms coincide. Triples are scanned in lexicographic order and the
/// lexicographically largest edge of each such triangle goes, until no such
/// triangle survives.
pub fn build_syzygy_graph(ideal: &MonomialIdeal) -> Result<SyzygyGraph> {
    let mut g = raw_syzygy_graph(ideal)?;
    let gens = ideal.gens();
    let m = g.m;
    loop {
        let mut changed = false;
        for i in 0..m {
            for j in i + 1..m {
                if !g.edges.contains(&(i, j)) {
                    continue;
                }
                let l = gens[i].lcm(gens[j]);
                for k in j + 1..m {
                    if g.edges.contains(&(i, k))
                        && g.edges.contains(&(j, k))
                        && gens[i].lcm(gens[k]) == l
                        && gens[j].lcm(gens[k]) == l
                    {
                        g.edges.remove(&(j, k));
                        g.pruned.push(PrunedEdge { edge: (j, k), triangle: (i, j, k) });
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    Ok(g)
}

/// Shape of a graph as used by the linear-resolution criteria.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "camelCase")]
pub enum GraphShape {
    /// A path; `order` lists the vertices along it, starting from the smaller endpoint.
    Line { order: Vec<usize> },
    /// A single cycle through all vertices; `order` starts at vertex 0.
    Cycle { order: Vec<usize> },
    /// A tree that is not a path.
    Tree,
    Complete,
    ConnectedOther,
    Disconnected,
}

impl GraphShape {
    pub fn name(&self) -> String {
        match self {
            GraphShape::Line { .. } => "line".into(),
            GraphShape::Cycle { order } => format!("cycle({})", order.len()),
            GraphShape::Tree => "tree".into(),
            GraphShape::Complete => "complete".into(),
            GraphShape::ConnectedOther => "connectedOther".into(),
            GraphShape::Disconnected => "disconnected".into(),
        }
    }

    /// Lines are trees too.
    pub fn is_tree(&self) -> bool {
        matches!(self, GraphShape::Line { .. } | GraphShape::Tree)
    }
}

impl fmt::Display for GraphShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub fn classify_shape(g: &SyzygyGraph) -> GraphShape {
    let m = g.m;
    if m <= 1 {
        return GraphShape::Line { order: (0..m).collect() };
    }
    if !g.is_connected() {
        return GraphShape::Disconnected;
    }
    let adj = g.adjacency();
    let e = g.edge_count();
    if e == m - 1 {
        if adj.iter().all(|n| n.len() <= 2) {
            let start = (0..m).find(|&v| adj[v].len() == 1).expect("a path has an endpoint");
            return GraphShape::Line { order: walk(&adj, start) };
        }
        return GraphShape::Tree;
    }
    if e == m && adj.iter().all(|n| n.len() == 2) {
        return GraphShape::Cycle { order: walk(&adj, 0) };
    }
    if e == m * (m - 1) / 2 {
        return GraphShape::Complete;
    }
    GraphShape::ConnectedOther
}

/// Follows a max-degree-2 graph from `start`, taking the smaller neighbor first.
fn walk(adj: &[Vec<usize>], start: usize) -> Vec<usize> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = adj[cur].iter().find(|&&w| w != prev && w != start) {
        if order.contains(&next) {
            break;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

/// `G^{(a,b)}`: the subgraph of `g` induced on the generators whose support lies
/// in `F(u_a) ∪ F(u_b)`.
pub fn induced_pair_subgraph(g: &SyzygyGraph, ideal: &MonomialIdeal, a: usize, b: usize) -> InducedSubgraph {
    let union = ideal.gen(a).lcm(ideal.gen(b));
    let vertices: Vec<usize> = (0..ideal.len()).filter(|&w| ideal.gen(w).divides(union)).collect();
    g.induced(&vertices)
}

/// Outcome of the combinatorial linear-relations test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearRelationsCertificate {
    pub holds: bool,
    /// Lexicographically least pair `(a, b)` whose pair subgraph is disconnected.
    pub violating_pair: Option<(usize, usize)>,
}

/// Linear relations via connectivity of every `G^{(a,b)}`.
pub fn has_linear_relations_combinatorial(ideal: &MonomialIdeal) -> Result<LinearRelationsCertificate> {
    let g = build_syzygy_graph(ideal)?;
    let m = ideal.len();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect();
    let violating_pair = pairs
        .par_iter()
        .copied()
        .filter(|&(a, b)| !induced_pair_subgraph(&g, ideal, a, b).is_connected())
        .min();
    Ok(LinearRelationsCertificate { holds: violating_pair.is_none(), violating_pair })
}

/// A monomial with arbitrary exponents, used for path multipliers.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Multiplier {
    exponents: Vec<u32>,
}

impl Multiplier {
    pub fn one(n: usize) -> Self {
        Multiplier { exponents: vec![0; n] }
    }

    fn mul_sqf(&mut self, u: SqfMonomial) {
        for v in u.vars() {
            self.exponents[v - 1] += 1;
        }
    }

    /// Exponent of `x_var`.
    pub fn exponent(&self, var: usize) -> u32 {
        self.exponents[var - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn support(&self) -> SqfMonomial {
        SqfMonomial::from_support(
            self.exponents.iter().enumerate().filter(|(_, &e)| e > 0).map(|(k, _)| k + 1),
        )
        .expect("multiplier supports stay within range")
    }

    /// Whether the squarefree monomial `u` divides this multiplier.
    pub fn divisible_by(&self, u: SqfMonomial) -> bool {
        u.vars().all(|v| self.exponents[v - 1] > 0)
    }

    /// The squarefree monomial equal to this multiplier, if it is squarefree.
    pub fn as_squarefree(&self) -> Option<SqfMonomial> {
        self.exponents.iter().all(|&e| e <= 1).then(|| self.support())
    }

    fn cancel_common(a: &mut Multiplier, b: &mut Multiplier) {
        for (x, y) in a.exponents.iter_mut().zip(b.exponents.iter_mut()) {
            let c = (*x).min(*y);
            *x -= c;
            *y -= c;
        }
    }
}

impl fmt::Debug for Multiplier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Multiplier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", k + 1)?;
            } else {
                write!(f, "x{}^{}", k + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Multipliers `(w_a, w_b)` with `w_a u_a = w_b u_b`, obtained by chaining the
/// edge syzygies along `path` (from `a = path[0]` to `b = path[last]`) and
/// cancelling common factors.
pub fn path_multipliers(
    g: &SyzygyGraph,
    ideal: &MonomialIdeal,
    path: &[usize],
) -> Result<(Multiplier, Multiplier)> {
    let Some(&first) = path.first() else {
        return Err(Error::Input("empty path".into()));
    };
    let n = ideal.n();
    if path.iter().any(|&v| v >= ideal.len()) {
        return Err(Error::Input("path vertex out of range".into()));
    }
    let mut wa = Multiplier::one(n);
    let mut wb = Multiplier::one(n);
    let mut cur = first;
    for &next in &path[1..] {
        if !g.has_edge(cur, next) {
            return Err(Error::Input(format!(
                "vertices {} and {} are not adjacent",
                cur + 1,
                next + 1
            )));
        }
        // x_{F(next)\F(cur)} u_cur = x_{F(cur)\F(next)} u_next
        wa.mul_sqf(ideal.gen(next).colon(ideal.gen(cur)));
        wb.mul_sqf(ideal.gen(cur).colon(ideal.gen(next)));
        cur = next;
    }
    Multiplier::cancel_common(&mut wa, &mut wb);
    Ok((wa, wb))
}
