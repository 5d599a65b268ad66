//! Vertex connectivity via max-flow, Menger witnesses, and exhaustive
//! minimum-separator enumeration with structural classification.
//!
//! The flow substrate is the usual vertex-split digraph: every graph
//! vertex v becomes an arc in(v) -> out(v) of capacity one, and every
//! edge becomes a pair of arcs between the split halves. Augmenting paths
//! are found breadth-first over ascending node ids, so cuts and witness
//! paths are deterministic.
//!
//! Separator enumeration is deliberately brute force: it walks every
//! k-subset in lexicographic order under an explicit work limit, because
//! the point is to certify that *all* minimum separators of an instance
//! have a given shape. The inner connectivity test is a union-find seeded
//! incrementally with early exit once a single component remains.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{Graph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConnectivityError {
    #[error("source and sink must differ")]
    SameEndpoints,
    #[error("vertices {0} and {1} are adjacent: no vertex cut separates them")]
    AdjacentEndpoints(VertexId, VertexId),
    #[error("enumerating C({n}, {k}) = {required} subsets exceeds the work limit {limit}")]
    WorkLimitExceeded {
        n: usize,
        k: usize,
        required: u128,
        limit: u64,
    },
    #[error("graphs with more than {max} vertices are not supported by subset enumeration, got {n}")]
    TooManyVertices { n: usize, max: usize },
}

const VERTEX_CAP: i64 = 1;
const BIG: i64 = i64::MAX / 4;

struct FlowNetwork {
    // Paired arcs: arc 2i and 2i+1 are mutual reverses.
    to: Vec<u32>,
    cap: Vec<i64>,
    base: Vec<i64>,
    adj: Vec<Vec<u32>>,
}

impl FlowNetwork {
    fn in_node(v: VertexId) -> u32 {
        2 * v
    }

    fn out_node(v: VertexId) -> u32 {
        2 * v + 1
    }

    /// Split network for `g`. `edge_cap` is the capacity of the arcs that
    /// realise graph edges: `BIG` when computing vertex cuts (so only
    /// vertex arcs are ever saturated), one when counting independent
    /// paths (so an s-t edge carries a single path).
    fn for_graph(g: &Graph, s: VertexId, t: VertexId, edge_cap: i64) -> FlowNetwork {
        let n = g.n();
        let mut net = FlowNetwork {
            to: Vec::new(),
            cap: Vec::new(),
            base: Vec::new(),
            adj: vec![Vec::new(); 2 * n],
        };
        for v in 0..n as VertexId {
            let cap = if v == s || v == t { BIG } else { VERTEX_CAP };
            net.add_arc(Self::in_node(v), Self::out_node(v), cap);
        }
        for (u, v) in g.edges() {
            net.add_arc(Self::out_node(u), Self::in_node(v), edge_cap);
            net.add_arc(Self::out_node(v), Self::in_node(u), edge_cap);
        }
        net
    }

    fn add_arc(&mut self, from: u32, to: u32, cap: i64) {
        let id = self.to.len() as u32;
        self.to.push(to);
        self.cap.push(cap);
        self.base.push(cap);
        self.adj[from as usize].push(id);
        self.to.push(from);
        self.cap.push(0);
        self.base.push(0);
        self.adj[to as usize].push(id + 1);
    }

    /// Shortest augmenting path in the residual network, breadth-first
    /// over arcs in insertion order. Returns the bottleneck pushed.
    fn augment(&mut self, s: u32, t: u32) -> i64 {
        let mut parent_arc: Vec<Option<u32>> = vec![None; self.adj.len()];
        let mut queue = std::collections::VecDeque::from([s]);
        let mut seen = vec![false; self.adj.len()];
        seen[s as usize] = true;
        'bfs: while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u as usize] {
                let v = self.to[a as usize];
                if self.cap[a as usize] > 0 && !seen[v as usize] {
                    seen[v as usize] = true;
                    parent_arc[v as usize] = Some(a);
                    if v == t {
                        break 'bfs;
                    }
                    queue.push_back(v);
                }
            }
        }
        if parent_arc[t as usize].is_none() {
            return 0;
        }
        let mut bottleneck = i64::MAX;
        let mut cur = t;
        while cur != s {
            let a = parent_arc[cur as usize].unwrap() as usize;
            bottleneck = bottleneck.min(self.cap[a]);
            cur = self.to[a ^ 1];
        }
        let mut cur = t;
        while cur != s {
            let a = parent_arc[cur as usize].unwrap() as usize;
            self.cap[a] -= bottleneck;
            self.cap[a ^ 1] += bottleneck;
            cur = self.to[a ^ 1];
        }
        bottleneck
    }

    fn max_flow(&mut self, s: u32, t: u32) -> i64 {
        let mut total = 0;
        loop {
            let pushed = self.augment(s, t);
            if pushed == 0 {
                return total;
            }
            total += pushed;
        }
    }

    /// Nodes reachable from `s` in the residual network.
    fn residual_reachable(&self, s: u32) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s as usize] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u as usize] {
                let v = self.to[a as usize];
                if self.cap[a as usize] > 0 && !seen[v as usize] {
                    seen[v as usize] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Flow currently carried by arc `a`.
    fn flow(&self, a: usize) -> i64 {
        self.base[a] - self.cap[a]
    }
}

/// A minimum vertex set separating `s` from `t`, via max-flow on the split
/// network. Requires non-adjacent distinct endpoints.
pub fn min_vertex_cut(
    g: &Graph,
    s: VertexId,
    t: VertexId,
) -> Result<Vec<VertexId>, ConnectivityError> {
    if s == t {
        return Err(ConnectivityError::SameEndpoints);
    }
    if g.has_edge(s, t) {
        return Err(ConnectivityError::AdjacentEndpoints(s, t));
    }
    let mut net = FlowNetwork::for_graph(g, s, t, BIG);
    let value = net.max_flow(FlowNetwork::out_node(s), FlowNetwork::in_node(t));
    let reach = net.residual_reachable(FlowNetwork::out_node(s));
    let cut: Vec<VertexId> = (0..g.n() as VertexId)
        .filter(|&v| {
            reach[FlowNetwork::in_node(v) as usize] && !reach[FlowNetwork::out_node(v) as usize]
        })
        .collect();
    debug_assert_eq!(cut.len() as i64, value);
    Ok(cut)
}

/// Local connectivity between two distinct vertices: the maximum number of
/// internally disjoint s-t paths (finite also for adjacent pairs).
pub fn local_connectivity(g: &Graph, s: VertexId, t: VertexId) -> usize {
    assert_ne!(s, t);
    let mut net = FlowNetwork::for_graph(g, s, t, VERTEX_CAP);
    net.max_flow(FlowNetwork::out_node(s), FlowNetwork::in_node(t)) as usize
}

/// The vertex connectivity of `g`: 0 for disconnected graphs, n-1 for the
/// complete graph, otherwise the minimum s-t cut over every non-adjacent
/// pair. Desk-scale graphs make the all-pairs sweep affordable and easy to
/// audit.
pub fn vertex_connectivity(g: &Graph) -> usize {
    vertex_connectivity_with_cut(g).0
}

/// As [`vertex_connectivity`], also returning a witness cut when one
/// exists (`None` for complete or trivial graphs).
pub fn vertex_connectivity_with_cut(g: &Graph) -> (usize, Option<Vec<VertexId>>) {
    let n = g.n();
    if n <= 1 {
        return (0, None);
    }
    if !g.is_connected() {
        return (0, Some(Vec::new()));
    }
    if g.is_complete() {
        return (n - 1, None);
    }
    let mut best: Option<Vec<VertexId>> = None;
    for s in 0..n as VertexId {
        for t in s + 1..n as VertexId {
            if g.has_edge(s, t) {
                continue;
            }
            let cut = min_vertex_cut(g, s, t).expect("checked non-adjacent");
            if best.as_ref().is_none_or(|b| cut.len() < b.len()) {
                best = Some(cut);
            }
        }
    }
    let kappa = best.as_ref().expect("non-complete graph has a cut").len();
    (kappa, best)
}

/// `k` internally vertex-disjoint s-t paths extracted from an integral
/// max-flow, or `None` when fewer than `k` exist. Each path is a vertex
/// sequence from `s` to `t`.
pub fn independent_paths(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    k: usize,
) -> Option<Vec<Vec<VertexId>>> {
    let (count, paths) = max_independent_paths(g, s, t);
    if count < k {
        None
    } else {
        Some(paths.into_iter().take(k).collect())
    }
}

/// The maximum family of internally disjoint s-t paths, with witnesses.
pub fn max_independent_paths(g: &Graph, s: VertexId, t: VertexId) -> (usize, Vec<Vec<VertexId>>) {
    assert_ne!(s, t);
    let mut net = FlowNetwork::for_graph(g, s, t, VERTEX_CAP);
    let value = net.max_flow(FlowNetwork::out_node(s), FlowNetwork::in_node(t)) as usize;
    let mut paths = Vec::with_capacity(value);
    let source = FlowNetwork::out_node(s);
    let sink = FlowNetwork::in_node(t);
    for _ in 0..value {
        // Walk positive flow from the source, consuming it; conservation
        // guarantees the walk reaches the sink, and unit vertex arcs keep
        // the walk simple. Forward arcs have even ids.
        let mut path = vec![s];
        let mut node = source;
        while node != sink {
            let a = *net.adj[node as usize]
                .iter()
                .find(|&&a| a % 2 == 0 && net.flow(a as usize) > 0)
                .expect("flow conservation");
            net.cap[a as usize] += 1;
            node = net.to[a as usize];
            if node.is_multiple_of(2) {
                path.push(node / 2); // entered in(v)
            }
        }
        paths.push(path);
    }
    (value, paths)
}

/// Structured evidence about one vertex set: whether it separates, the
/// components it leaves, whether it is exactly the neighbourhood of some
/// vertex, and whether some component is a singleton.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatorReport {
    #[serde(rename = "X")]
    pub x: Vec<VertexId>,
    #[serde(rename = "separator")]
    pub is_separator: bool,
    pub components: Vec<Vec<VertexId>>,
    /// The smallest vertex v with N(v) = X exactly, if one exists.
    pub neighborhood_of: Option<VertexId>,
    /// The vertex of the first singleton component, if any.
    #[serde(rename = "singleton")]
    pub singleton_component: Option<VertexId>,
}

impl SeparatorReport {
    /// The separator shape asserted for small minimum separators: the
    /// neighbourhood of a vertex, leaving exactly two components, one of
    /// which is that vertex alone.
    pub fn is_vertex_neighborhood_split(&self) -> bool {
        match self.neighborhood_of {
            None => false,
            Some(v) => {
                self.is_separator
                    && self.components.len() == 2
                    && self.components.iter().any(|c| c.as_slice() == [v])
            }
        }
    }
}

/// Component census of `g - x` plus the neighbourhood and singleton tests.
pub fn classify_separator(g: &Graph, x: &BTreeSet<VertexId>) -> SeparatorReport {
    let components = g.components_without(x);
    let is_separator = components.len() >= 2;
    let neighborhood_of = (0..g.n() as VertexId)
        .find(|&v| !x.contains(&v) && g.degree(v) == x.len() && g.neighbors(v).all(|w| x.contains(&w)));
    let singleton_component = components
        .iter()
        .find(|c| c.len() == 1)
        .map(|c| c[0]);
    SeparatorReport {
        x: x.iter().copied().collect(),
        is_separator,
        components,
        neighborhood_of,
        singleton_component,
    }
}

/// Budget knobs for exhaustive enumeration.
#[derive(Debug, Clone, Copy)]
pub struct EnumerationLimits {
    /// Refuse outright when the subset count exceeds this.
    pub work_limit: u64,
    /// Keep at most this many reports (a truncation flag is set).
    pub cap: usize,
    /// Number of worker threads; each owns a contiguous lexicographic
    /// range of subsets and results are merged in order, so the output is
    /// independent of the parallelism degree.
    pub jobs: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits { work_limit: 100_000_000, cap: 100_000, jobs: 1 }
    }
}

/// Outcome of an exhaustive separator sweep.
#[derive(Debug, Clone)]
pub struct SeparatorEnumeration {
    /// Classified separators in lexicographic order of their vertex sets
    /// (possibly truncated at the cap).
    pub reports: Vec<SeparatorReport>,
    /// Total number of separators found, truncation notwithstanding.
    pub found: u64,
    pub subsets_checked: u64,
    pub truncated: bool,
}

/// Every vertex subset of the given size whose removal disconnects `g`,
/// by exhaustive lexicographic enumeration.
pub fn enumerate_separators_of_size(
    g: &Graph,
    size: usize,
    limits: &EnumerationLimits,
) -> Result<SeparatorEnumeration, ConnectivityError> {
    let n = g.n();
    if n > 128 {
        return Err(ConnectivityError::TooManyVertices { n, max: 128 });
    }
    let total = binomial(n, size);
    if total > limits.work_limit as u128 {
        return Err(ConnectivityError::WorkLimitExceeded {
            n,
            k: size,
            required: total,
            limit: limits.work_limit,
        });
    }
    let jobs = limits.jobs.max(1).min((total.max(1)) as usize);
    let edges = g.edges();
    let chunk = total.div_ceil(jobs as u128);
    let worker = |w: usize| -> Vec<Vec<VertexId>> {
        let start = (w as u128) * chunk;
        let count = chunk.min(total.saturating_sub(start));
        let mut found = Vec::new();
        if count == 0 {
            return found;
        }
        let mut subset = unrank_combination(n, size, start);
        let mut uf = UnionFind::new(n);
        for _ in 0..count {
            if disconnects(n, &edges, &subset, &mut uf) {
                found.push(subset.iter().map(|&v| v as VertexId).collect());
            }
            if !next_combination(n, &mut subset) {
                break;
            }
        }
        found
    };
    let found_lists: Vec<Vec<Vec<VertexId>>> = if jobs == 1 {
        vec![worker(0)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs).map(|w| scope.spawn(move || worker(w))).collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        })
    };
    let mut reports = Vec::new();
    let mut found = 0u64;
    let mut truncated = false;
    for list in found_lists {
        for x in list {
            found += 1;
            if reports.len() < limits.cap {
                let set: BTreeSet<VertexId> = x.into_iter().collect();
                reports.push(classify_separator(g, &set));
            } else {
                truncated = true;
            }
        }
    }
    Ok(SeparatorEnumeration { reports, found, subsets_checked: total as u64, truncated })
}

/// All minimum separators of `g`. The caller supplies `kappa`, which must
/// be the vertex connectivity (typically already computed via
/// [`vertex_connectivity`]); it is not recomputed here.
pub fn enumerate_min_separators(
    g: &Graph,
    kappa: usize,
    limits: &EnumerationLimits,
) -> Result<SeparatorEnumeration, ConnectivityError> {
    enumerate_separators_of_size(g, kappa, limits)
}

/// Union-find over a fixed slot count, reset per use.
struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n as u32).collect(), size: vec![1; n] }
    }

    fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i as u32;
        }
        self.size.fill(1);
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        true
    }
}

/// Does removing `subset` disconnect the graph? Union-find seeded over the
/// surviving edges with early exit once everything is joined.
fn disconnects(n: usize, edges: &[(VertexId, VertexId)], subset: &[usize], uf: &mut UnionFind) -> bool {
    let mut removed = 0u128;
    for &v in subset {
        removed |= 1 << v;
    }
    let mut remaining = n - subset.len();
    if remaining <= 1 {
        return false;
    }
    uf.reset();
    for &(u, v) in edges {
        if removed & (1 << u) != 0 || removed & (1 << v) != 0 {
            continue;
        }
        if uf.union(u, v) {
            remaining -= 1;
            if remaining == 1 {
                return false;
            }
        }
    }
    true
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i + 1) as u128;
    }
    acc
}

/// The combination of the given lexicographic rank among k-subsets of
/// {0, ..., n-1}.
fn unrank_combination(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut next = 0usize;
    for remaining in (1..=k).rev() {
        let mut c = next;
        loop {
            let with_c = binomial(n - c - 1, remaining - 1);
            if rank < with_c {
                out.push(c);
                next = c + 1;
                break;
            }
            rank -= with_c;
            c += 1;
        }
    }
    out
}

/// Advance to the lexicographic successor; false when exhausted.
fn next_combination(n: usize, subset: &mut [usize]) -> bool {
    let k = subset.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - (k - i) {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope;

    fn path_graph(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 0..n as u32 - 1 {
            g.add_edge(v, v + 1);
        }
        g
    }

    fn cycle_graph(n: usize) -> Graph {
        let mut g = path_graph(n);
        g.add_edge(0, n as u32 - 1);
        g
    }

    fn complete_graph(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                g.add_edge(u, v);
            }
        }
        g
    }

    fn cube_graph(d: usize) -> Graph {
        polytope::hypercube(d).unwrap().graph()
    }

    /// Independent oracle: the smallest k such that some k-subset
    /// disconnects, found by direct subset search.
    fn brute_force_connectivity(g: &Graph) -> usize {
        let n = g.n();
        if n <= 1 {
            return 0;
        }
        if !g.is_connected() {
            return 0;
        }
        for k in 0..n - 1 {
            let mut subset: Vec<usize> = (0..k).collect();
            loop {
                let removed: BTreeSet<u32> = subset.iter().map(|&v| v as u32).collect();
                if g.components_without(&removed).len() > 1 {
                    return k;
                }
                if !next_combination(n, &mut subset) {
                    break;
                }
                if subset.is_empty() {
                    break;
                }
            }
        }
        n - 1
    }

    #[test]
    fn min_cut_on_a_path() {
        let g = path_graph(3);
        assert_eq!(min_vertex_cut(&g, 0, 2).unwrap(), vec![1]);
    }

    #[test]
    fn min_cut_on_a_4_cycle() {
        let g = cycle_graph(4);
        let cut = min_vertex_cut(&g, 0, 2).unwrap();
        assert_eq!(cut.len(), 2);
        assert_eq!(cut, vec![1, 3]);
    }

    #[test]
    fn min_cut_antipodal_in_q3() {
        let g = cube_graph(3);
        let cut = min_vertex_cut(&g, 0, 7).unwrap();
        assert_eq!(cut.len(), 3);
    }

    #[test]
    fn min_cut_rejects_adjacent_endpoints() {
        let g = path_graph(3);
        assert!(matches!(
            min_vertex_cut(&g, 0, 1),
            Err(ConnectivityError::AdjacentEndpoints(0, 1))
        ));
        assert!(matches!(min_vertex_cut(&g, 1, 1), Err(ConnectivityError::SameEndpoints)));
    }

    #[test]
    fn cube_connectivity_matches_dimension() {
        for d in 2..=5usize {
            assert_eq!(vertex_connectivity(&cube_graph(d)), d, "d={d}");
        }
    }

    #[test]
    fn connectivity_agrees_with_brute_force_on_small_graphs() {
        let mut disconnected = Graph::new(5);
        disconnected.add_edge(0, 1);
        disconnected.add_edge(2, 3);
        let q3 = polytope::hypercube(3).unwrap();
        let double_q3 = polytope::connected_sum(&q3, 0, &q3, 0, None).unwrap();
        let samples = vec![
            path_graph(6),
            cycle_graph(7),
            complete_graph(5),
            cube_graph(2),
            cube_graph(3),
            double_q3.graph(),
            disconnected,
        ];
        for g in &samples {
            assert_eq!(vertex_connectivity(g), brute_force_connectivity(g));
        }
        // The glued double cube keeps the 3-cube's connectivity: the
        // brute-force sweep confirms no 2-subset of its 12 vertices cuts it.
        assert_eq!(vertex_connectivity(&double_q3.graph()), 3);
    }

    #[test]
    fn complete_graph_connectivity() {
        assert_eq!(vertex_connectivity(&complete_graph(5)), 4);
        assert_eq!(vertex_connectivity(&complete_graph(2)), 1);
    }

    #[test]
    fn independent_paths_menger_consistency() {
        let g = cube_graph(3);
        for s in 0..8u32 {
            for t in s + 1..8 {
                let local = local_connectivity(&g, s, t);
                let paths = independent_paths(&g, s, t, local).unwrap();
                assert_eq!(paths.len(), local);
                let mut inner = BTreeSet::new();
                for p in &paths {
                    assert_eq!(p.first(), Some(&s));
                    assert_eq!(p.last(), Some(&t));
                    for w in p.windows(2) {
                        assert!(g.has_edge(w[0], w[1]), "witness uses a non-edge");
                    }
                    for &v in &p[1..p.len() - 1] {
                        assert!(inner.insert(v), "paths share inner vertex {v}");
                    }
                }
                assert!(independent_paths(&g, s, t, local + 1).is_none());
            }
        }
    }

    #[test]
    fn independent_paths_examples() {
        let g = cube_graph(3);
        assert!(independent_paths(&g, 0, 7, 3).is_some());
        assert!(independent_paths(&g, 0, 7, 4).is_none());
        let c4 = cycle_graph(4);
        let two = independent_paths(&c4, 0, 2, 2).unwrap();
        assert_eq!(two.len(), 2);
    }

    #[test]
    fn classify_neighborhood_separator_in_q3() {
        let g = cube_graph(3);
        let x: BTreeSet<u32> = g.neighborhood(0).into_iter().collect();
        let report = classify_separator(&g, &x);
        assert!(report.is_separator);
        assert_eq!(report.components.len(), 2);
        assert_eq!(report.neighborhood_of, Some(0));
        assert_eq!(report.singleton_component, Some(0));
        assert!(report.is_vertex_neighborhood_split());
    }

    #[test]
    fn facet_vertices_do_not_separate_q3() {
        let g = cube_graph(3);
        let x: BTreeSet<u32> = [0u32, 1, 2, 3].into_iter().collect();
        let report = classify_separator(&g, &x);
        assert!(!report.is_separator);
        assert_eq!(report.components.len(), 1);
    }

    #[test]
    fn enumerate_q3_separators() {
        let g = cube_graph(3);
        let result = enumerate_min_separators(&g, 3, &EnumerationLimits::default()).unwrap();
        assert_eq!(result.found, 8);
        assert_eq!(result.subsets_checked, 56);
        assert!(!result.truncated);
        for report in &result.reports {
            assert!(report.is_vertex_neighborhood_split());
        }
        let xs: BTreeSet<Vec<u32>> = result.reports.iter().map(|r| r.x.clone()).collect();
        let expected: BTreeSet<Vec<u32>> = (0..8u32).map(|v| g.neighborhood(v)).collect();
        assert_eq!(xs, expected);
    }

    #[test]
    fn enumerate_q4_separators() {
        let g = cube_graph(4);
        let result = enumerate_min_separators(&g, 4, &EnumerationLimits::default()).unwrap();
        assert_eq!(result.found, 16);
        assert_eq!(result.subsets_checked, 1820);
        for report in &result.reports {
            assert!(report.is_vertex_neighborhood_split());
        }
    }

    #[test]
    fn double_4_cube_minimum_separators_are_the_simple_neighborhoods() {
        // Exhaustion over C(24,4) = 10626 subsets of the glued double
        // 4-cube: exactly the neighbourhoods of its 16 degree-4 vertices.
        let q4 = polytope::hypercube(4).unwrap();
        let p = polytope::connected_sum(&q4, 0, &q4, 0, None).unwrap();
        let g = p.graph();
        let result = enumerate_min_separators(&g, 4, &EnumerationLimits::default()).unwrap();
        assert_eq!(result.subsets_checked, 10626);
        assert_eq!(result.found, 16);
        let expected: BTreeSet<Vec<u32>> = (0..g.n() as u32)
            .filter(|&v| g.degree(v) == 4)
            .map(|v| g.neighborhood(v))
            .collect();
        assert_eq!(expected.len(), 16);
        let got: BTreeSet<Vec<u32>> = result.reports.iter().map(|r| r.x.clone()).collect();
        assert_eq!(got, expected);
        assert!(result.reports.iter().all(|r| r.is_vertex_neighborhood_split()));
    }

    #[test]
    fn enumeration_respects_work_limit_and_cap() {
        let g = cube_graph(4);
        let refused = enumerate_min_separators(
            &g,
            4,
            &EnumerationLimits { work_limit: 100, ..Default::default() },
        );
        assert!(matches!(refused, Err(ConnectivityError::WorkLimitExceeded { required: 1820, .. })));
        let capped = enumerate_min_separators(
            &g,
            4,
            &EnumerationLimits { cap: 5, ..Default::default() },
        )
        .unwrap();
        assert!(capped.truncated);
        assert_eq!(capped.reports.len(), 5);
        assert_eq!(capped.found, 16);
    }

    #[test]
    fn enumeration_is_parallelism_invariant() {
        let g = cube_graph(4);
        let serial = enumerate_min_separators(&g, 4, &EnumerationLimits::default()).unwrap();
        for jobs in [2usize, 3, 7] {
            let par = enumerate_min_separators(
                &g,
                4,
                &EnumerationLimits { jobs, ..Default::default() },
            )
            .unwrap();
            assert_eq!(par.reports, serial.reports, "jobs={jobs}");
            assert_eq!(par.found, serial.found);
        }
    }

    #[test]
    fn enumeration_output_is_sorted_and_valid() {
        let g = cube_graph(3);
        let result = enumerate_min_separators(&g, 3, &EnumerationLimits::default()).unwrap();
        let xs: Vec<Vec<u32>> = result.reports.iter().map(|r| r.x.clone()).collect();
        let mut sorted = xs.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(xs, sorted);
        for r in &result.reports {
            let set: BTreeSet<u32> = r.x.iter().copied().collect();
            assert!(classify_separator(&g, &set).is_separator);
            // Whenever the set is some vertex's whole neighbourhood, that
            // vertex must sit alone in a component, with matching degree.
            if let Some(v) = r.neighborhood_of {
                assert_eq!(g.degree(v), r.x.len());
                assert!(r.components.iter().any(|c| c.as_slice() == [v]));
            }
        }
    }

    #[test]
    fn unranking_agrees_with_iteration() {
        let n = 9;
        let k = 4;
        let mut subset: Vec<usize> = (0..k).collect();
        let mut rank = 0u128;
        loop {
            assert_eq!(unrank_combination(n, k, rank), subset);
            rank += 1;
            if !next_combination(n, &mut subset) {
                break;
            }
        }
        assert_eq!(rank, binomial(n, k));
    }

    #[test]
    fn separator_report_json_field_names() {
        let g = cube_graph(3);
        let x: BTreeSet<u32> = g.neighborhood(0).into_iter().collect();
        let report = classify_separator(&g, &x);
        let value = serde_json::to_value(&report).unwrap();
        assert!(value.get("X").is_some());
        assert!(value.get("separator").is_some());
        assert!(value.get("components").is_some());
        assert_eq!(value.get("neighborhood_of"), Some(&serde_json::json!(0)));
        assert_eq!(value.get("singleton"), Some(&serde_json::json!(0)));
    }
}
