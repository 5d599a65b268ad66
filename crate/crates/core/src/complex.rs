//! Polytopal complexes as pure combinatorics.
//!
//! A complex is a finite collection of faces, each face a set of integer
//! vertex ids with a declared dimension, closed under taking subfaces.
//! The empty face is a member of every complex and is kept implicit; a
//! complex built from no maximal faces contains only the empty face and
//! has dimension -1.
//!
//! All queries are read-only and complexes are immutable once built, so
//! values can be shared freely across threads.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde_json::{json, Value};
use thiserror::Error;

pub type VertexId = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("face {vertices:?} declared with dimension {first} and again with {second}")]
    InconsistentDimension {
        vertices: Vec<VertexId>,
        first: i32,
        second: i32,
    },
    #[error("closure of face {face:?} lists {subface:?}, which is not a subset")]
    ClosureOutsideFace {
        face: Vec<VertexId>,
        subface: Vec<VertexId>,
    },
    #[error("face {face:?} is stored but its vertex {missing:?} is not a 0-face")]
    MissingSubface { face: Vec<VertexId>, missing: VertexId },
    #[error("face {vertices:?} is not in the complex")]
    FaceNotInComplex { vertices: Vec<VertexId> },
    #[error("vertex set {vertices:?} is not contained in the complex's vertex set")]
    VerticesNotInComplex { vertices: Vec<VertexId> },
    #[error("operation requires a pure complex, but a maximal face of dimension {face_dim} sits below the complex dimension {complex_dim}")]
    Nonpure { face_dim: i32, complex_dim: i32 },
    #[error("operation requires dimension >= 1, complex has dimension {dim}")]
    DimensionTooSmall { dim: i32 },
    #[error("face {vertices:?} is not a facet of the complex")]
    NotAFacet { vertices: Vec<VertexId> },
    #[error("endpoint facet {vertices:?} is listed in the avoid set")]
    AvoidedEndpoint { vertices: Vec<VertexId> },
    #[error("the two facets must be distinct")]
    SameFacet,
    #[error("an ordered cube face must have 2^k distinct vertices, got {len}")]
    BadCubeFaceLength { len: usize },
    #[error("ordered cube face repeats vertex {vertex}")]
    RepeatedVertex { vertex: VertexId },
    #[error("maximal face {vertices:?} does not carry a cube graph: {reason}")]
    NotACubeFace {
        vertices: Vec<VertexId>,
        reason: String,
    },
    #[error("malformed complex JSON: {0}")]
    Json(String),
}

/// A face: a sorted set of vertex ids together with a declared dimension.
///
/// The dimension is declared rather than inferred because a vertex set does
/// not determine it; for cube-combinatorial faces `|vertices| == 2^dim` is
/// enforced where such faces are constructed. Dimension -1 denotes the
/// empty face.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face {
    vertices: Vec<VertexId>,
    dim: i32,
}

impl Face {
    pub fn new(mut vertices: Vec<VertexId>, dim: i32) -> Face {
        vertices.sort_unstable();
        let before = vertices.len();
        vertices.dedup();
        assert_eq!(before, vertices.len(), "face with repeated vertex");
        assert!(dim >= -1);
        assert_eq!(dim == -1, vertices.is_empty());
        Face { vertices, dim }
    }

    pub fn empty() -> Face {
        Face { vertices: Vec::new(), dim: -1 }
    }

    pub fn vertex(v: VertexId) -> Face {
        Face { vertices: vec![v], dim: 0 }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn dim(&self) -> i32 {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn is_subface_of(&self, other: &Face) -> bool {
        is_subset(&self.vertices, &other.vertices)
    }

    pub fn disjoint_from(&self, other: &[VertexId]) -> bool {
        intersection(&self.vertices, other).is_empty()
    }
}

fn is_subset(a: &[VertexId], b: &[VertexId]) -> bool {
    let mut it = b.iter();
    'outer: for x in a {
        for y in it.by_ref() {
            match y.cmp(x) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

fn intersection(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Simple undirected graph on vertex ids `0..n`, no loops, no multi-edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<VertexId>>,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph { adj: vec![BTreeSet::new(); n] }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) {
        assert!(u != v, "self-loop");
        assert!((u as usize) < self.adj.len() && (v as usize) < self.adj.len());
        self.adj[u as usize].insert(v);
        self.adj[v as usize].insert(u);
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u as usize].contains(&v)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v as usize].len()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v as usize].iter().copied()
    }

    /// Sorted neighbourhood of `v`.
    pub fn neighborhood(&self, v: VertexId) -> Vec<VertexId> {
        self.adj[v as usize].iter().copied().collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`, in ascending order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if (u as VertexId) < v {
                    out.push((u as VertexId, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0u32]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|s| s.len() == n - 1)
    }

    /// Induced subgraph on `keep`, with ids compacted to `0..keep.len()`
    /// preserving ascending order.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Graph {
        let index: BTreeMap<VertexId, VertexId> = keep
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as VertexId))
            .collect();
        let mut g = Graph::new(keep.len());
        for &v in keep {
            for w in self.neighbors(v) {
                if w > v {
                    if let Some(&wi) = index.get(&w) {
                        g.add_edge(index[&v], wi);
                    }
                }
            }
        }
        g
    }

    /// Connected components of the graph after deleting `removed`, each
    /// sorted, listed in ascending order of their smallest member.
    pub fn components_without(&self, removed: &BTreeSet<VertexId>) -> Vec<Vec<VertexId>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n as VertexId {
            if seen[start as usize] || removed.contains(&start) {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start as usize] = true;
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for v in self.neighbors(u) {
                    if !seen[v as usize] && !removed.contains(&v) {
                        seen[v as usize] = true;
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

/// Result of a strong-connectivity query. Strong connectivity is defined
/// for pure complexes; a nonpure complex reports `Nonpure` rather than an
/// error because nonpure complexes are first-class observable outcomes
/// here (deleting a vertex and a proper subset of its neighbours from a
/// cube can leave one).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrongConnectivity {
    StronglyConnected,
    Disconnected,
    Nonpure,
}

impl StrongConnectivity {
    pub fn holds(self) -> bool {
        self == StrongConnectivity::StronglyConnected
    }
}

/// A polytopal complex: faces grouped by dimension, deduplicated by vertex
/// set, with the maximal faces tracked explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopalComplex {
    /// `faces[k]` holds the vertex sets of the k-faces.
    faces: Vec<BTreeSet<Vec<VertexId>>>,
    /// Dimension by vertex set, for O(log) membership tests.
    by_vertices: BTreeMap<Vec<VertexId>, i32>,
    /// Faces contained in no other face, sorted by (dim, vertex set).
    maximal: Vec<Face>,
    vertex_set: BTreeSet<VertexId>,
}

impl PolytopalComplex {
    /// Build a complex from maximal faces, each paired with its full
    /// subface closure (the face itself included). The union of all
    /// closures is stored, deduplicated by vertex set.
    pub fn build(maximal: Vec<(Face, Vec<Face>)>) -> Result<PolytopalComplex, ComplexError> {
        let mut by_vertices: BTreeMap<Vec<VertexId>, i32> = BTreeMap::new();
        for (top, closure) in &maximal {
            let mut saw_self = false;
            for f in closure {
                if f.is_empty() {
                    continue;
                }
                if !f.is_subface_of(top) {
                    return Err(ComplexError::ClosureOutsideFace {
                        face: top.vertices.clone(),
                        subface: f.vertices.clone(),
                    });
                }
                saw_self = saw_self || f == top;
                match by_vertices.get(&f.vertices) {
                    None => {
                        by_vertices.insert(f.vertices.clone(), f.dim);
                    }
                    Some(&d) if d != f.dim => {
                        return Err(ComplexError::InconsistentDimension {
                            vertices: f.vertices.clone(),
                            first: d,
                            second: f.dim,
                        });
                    }
                    Some(_) => {}
                }
            }
            if !top.is_empty() && !saw_self {
                return Err(ComplexError::ClosureOutsideFace {
                    face: top.vertices.clone(),
                    subface: top.vertices.clone(),
                });
            }
        }
        // Every vertex of a stored face must itself be stored: a cheap
        // check that the supplied closures were complete at the bottom.
        for verts in by_vertices.keys() {
            for &v in verts {
                if !by_vertices.contains_key(&vec![v]) {
                    return Err(ComplexError::MissingSubface {
                        face: verts.clone(),
                        missing: v,
                    });
                }
            }
        }
        Ok(Self::from_map(by_vertices))
    }

    /// Assemble a complex from faces of an already-validated complex,
    /// without re-checking closure. Crate-internal, for union constructions.
    pub(crate) fn from_faces_unchecked(faces: impl IntoIterator<Item = Face>) -> PolytopalComplex {
        let mut by_vertices = BTreeMap::new();
        for f in faces {
            if f.is_empty() {
                continue;
            }
            let prev = by_vertices.insert(f.vertices.clone(), f.dim);
            debug_assert!(prev.is_none_or(|d| d == f.dim), "conflicting dims for a face");
        }
        Self::from_map(by_vertices)
    }

    /// Assemble a complex from an already-validated face map. Used for
    /// subcomplex filters, which preserve closure.
    fn from_map(by_vertices: BTreeMap<Vec<VertexId>, i32>) -> PolytopalComplex {
        let dim = by_vertices.values().copied().max().unwrap_or(-1);
        let mut faces: Vec<BTreeSet<Vec<VertexId>>> =
            vec![BTreeSet::new(); (dim + 1).max(0) as usize];
        let mut vertex_set = BTreeSet::new();
        for (verts, d) in &by_vertices {
            faces[*d as usize].insert(verts.clone());
            vertex_set.extend(verts.iter().copied());
        }
        let mut maximal = Vec::new();
        for (verts, d) in &by_vertices {
            let covered = by_vertices
                .iter()
                .any(|(other, _)| other != verts && is_subset(verts, other));
            if !covered {
                maximal.push(Face { vertices: verts.clone(), dim: *d });
            }
        }
        maximal.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));
        PolytopalComplex { faces, by_vertices, maximal, vertex_set }
    }

    /// Dimension of the complex; -1 for the complex that contains only the
    /// empty face.
    pub fn dim(&self) -> i32 {
        self.faces.len() as i32 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Vertex sets of the k-faces, ascending. Empty for out-of-range k.
    pub fn faces_of_dim(&self, k: i32) -> Vec<&[VertexId]> {
        if k < 0 || k > self.dim() {
            return Vec::new();
        }
        self.faces[k as usize].iter().map(|v| v.as_slice()).collect()
    }

    pub fn face_count(&self, k: i32) -> usize {
        if k < 0 || k > self.dim() {
            0
        } else {
            self.faces[k as usize].len()
        }
    }

    /// Total number of nonempty faces.
    pub fn total_faces(&self) -> usize {
        self.faces.iter().map(|s| s.len()).sum()
    }

    /// Dimension of the stored face with this vertex set, if any. The
    /// empty set answers -1: the empty face is in every complex.
    pub fn face_dim(&self, vertices: &[VertexId]) -> Option<i32> {
        if vertices.is_empty() {
            return Some(-1);
        }
        self.by_vertices.get(vertices).copied()
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.face_dim(&face.vertices) == Some(face.dim)
    }

    /// All faces, ascending by (dim, vertex set).
    pub fn all_faces(&self) -> Vec<Face> {
        let mut out: Vec<Face> = self
            .by_vertices
            .iter()
            .map(|(v, &d)| Face { vertices: v.clone(), dim: d })
            .collect();
        out.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));
        out
    }

    /// Faces contained in no other face, sorted by (dim, vertex set).
    pub fn maximal_faces(&self) -> &[Face] {
        &self.maximal
    }

    pub fn vertex_ids(&self) -> Vec<VertexId> {
        self.vertex_set.iter().copied().collect()
    }

    pub fn vertex_set(&self) -> &BTreeSet<VertexId> {
        &self.vertex_set
    }

    /// True iff every maximal face has the dimension of the complex.
    /// The empty complex and 0-complexes are trivially pure.
    pub fn is_pure(&self) -> bool {
        self.maximal.iter().all(|f| f.dim == self.dim())
    }

    /// The star of `face`: all faces containing it, plus their subfaces.
    pub fn star(&self, face: &Face) -> Result<PolytopalComplex, ComplexError> {
        if !face.is_empty() && !self.contains(face) {
            return Err(ComplexError::FaceNotInComplex { vertices: face.vertices.clone() });
        }
        let tops: Vec<&Face> = self
            .maximal
            .iter()
            .filter(|m| face.is_subface_of(m))
            .collect();
        let kept = self
            .by_vertices
            .iter()
            .filter(|(verts, _)| tops.iter().any(|m| is_subset(verts, &m.vertices)))
            .map(|(v, &d)| (v.clone(), d))
            .collect();
        Ok(Self::from_map(kept))
    }

    /// The antistar of `face`: all faces with vertex sets disjoint from it.
    /// Identical to `induced` on the complementary vertex set.
    pub fn antistar(&self, face: &Face) -> Result<PolytopalComplex, ComplexError> {
        if !face.is_empty() && !self.contains(face) {
            return Err(ComplexError::FaceNotInComplex { vertices: face.vertices.clone() });
        }
        let kept = self
            .by_vertices
            .iter()
            .filter(|(verts, _)| intersection(verts, &face.vertices).is_empty())
            .map(|(v, &d)| (v.clone(), d))
            .collect();
        Ok(Self::from_map(kept))
    }

    /// The subcomplex induced by `keep`: all faces whose vertices lie in it.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Result<PolytopalComplex, ComplexError> {
        if let Some(&bad) = keep.iter().find(|v| !self.vertex_set.contains(v)) {
            return Err(ComplexError::VerticesNotInComplex { vertices: vec![bad] });
        }
        let kept = self
            .by_vertices
            .iter()
            .filter(|(verts, _)| verts.iter().all(|v| keep.contains(v)))
            .map(|(v, &d)| (v.clone(), d))
            .collect();
        Ok(Self::from_map(kept))
    }

    /// The graph of the complex: its 0- and 1-faces. Vertex ids are
    /// compacted to `0..n` in ascending order of the original ids; use
    /// [`PolytopalComplex::vertex_ids`] to translate back.
    pub fn graph(&self) -> Graph {
        let index: BTreeMap<VertexId, VertexId> = self
            .vertex_set
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as VertexId))
            .collect();
        let mut g = Graph::new(index.len());
        for edge in self.faces_of_dim(1) {
            debug_assert_eq!(edge.len(), 2);
            g.add_edge(index[&edge[0]], index[&edge[1]]);
        }
        g
    }

    /// The facet-ridge dual graph: one node per facet, an edge whenever two
    /// facets intersect in a face that is stored with dimension dim-1.
    /// Requires a pure complex of dimension at least 1.
    pub fn dual_graph(&self) -> Result<DualGraph, ComplexError> {
        if self.dim() < 1 {
            return Err(ComplexError::DimensionTooSmall { dim: self.dim() });
        }
        if let Some(f) = self.maximal.iter().find(|f| f.dim != self.dim()) {
            return Err(ComplexError::Nonpure { face_dim: f.dim, complex_dim: self.dim() });
        }
        let facets = self.maximal.clone();
        let mut graph = Graph::new(facets.len());
        let mut shared_ridges = BTreeMap::new();
        for i in 0..facets.len() {
            for j in i + 1..facets.len() {
                let inter = intersection(&facets[i].vertices, &facets[j].vertices);
                if inter.is_empty() {
                    continue;
                }
                if self.face_dim(&inter) == Some(self.dim() - 1) {
                    graph.add_edge(i as VertexId, j as VertexId);
                    shared_ridges.insert((i, j), inter);
                }
            }
        }
        Ok(DualGraph { facets, graph, shared_ridges })
    }

    /// Strong connectivity: the complex is pure and any two facets are
    /// joined by a path of facets with consecutive members sharing a ridge.
    /// Complexes of dimension <= 0 are trivially strongly connected.
    pub fn is_strongly_connected(&self) -> StrongConnectivity {
        if self.dim() <= 0 {
            return StrongConnectivity::StronglyConnected;
        }
        match self.dual_graph() {
            Err(ComplexError::Nonpure { .. }) => StrongConnectivity::Nonpure,
            Err(_) => unreachable!("dim checked above"),
            Ok(dual) => {
                if dual.graph.is_connected() {
                    StrongConnectivity::StronglyConnected
                } else {
                    StrongConnectivity::Disconnected
                }
            }
        }
    }

    /// True iff every face of `self` is a face of `host` and both have the
    /// same vertex set.
    pub fn is_spanning_subcomplex_of(&self, host: &PolytopalComplex) -> bool {
        self.vertex_set == host.vertex_set
            && self
                .by_vertices
                .iter()
                .all(|(verts, &d)| host.face_dim(verts) == Some(d))
    }

    /// True iff every face of `self` is a face of `host`.
    pub fn is_subcomplex_of(&self, host: &PolytopalComplex) -> bool {
        self.by_vertices
            .iter()
            .all(|(verts, &d)| host.face_dim(verts) == Some(d))
    }

    /// Shortest facet-ridge path from `from` to `to` that avoids the given
    /// facets, and never steps across a shared ridge listed in
    /// `avoid_ridges`. Breadth-first with ascending facet-id tie-breaking,
    /// so the witness is reproducible. `None` when no such path exists.
    pub fn facet_ridge_path(
        &self,
        from: &Face,
        to: &Face,
        avoid_facets: &BTreeSet<Vec<VertexId>>,
        avoid_ridges: &BTreeSet<Vec<VertexId>>,
    ) -> Result<Option<Vec<Face>>, ComplexError> {
        let dual = self.dual_graph()?;
        let s = dual
            .facet_index(from.vertices())
            .ok_or_else(|| ComplexError::NotAFacet { vertices: from.vertices.clone() })?;
        let t = dual
            .facet_index(to.vertices())
            .ok_or_else(|| ComplexError::NotAFacet { vertices: to.vertices.clone() })?;
        for endpoint in [s, t] {
            if avoid_facets.contains(&dual.facets[endpoint].vertices) {
                return Err(ComplexError::AvoidedEndpoint {
                    vertices: dual.facets[endpoint].vertices.clone(),
                });
            }
        }
        let avoid: BTreeSet<usize> = dual
            .facets
            .iter()
            .enumerate()
            .filter(|(_, f)| avoid_facets.contains(&f.vertices))
            .map(|(i, _)| i)
            .collect();
        Ok(dual
            .path_avoiding(s, t, &avoid, avoid_ridges)
            .map(|idxs| idxs.into_iter().map(|i| dual.facets[i].clone()).collect()))
    }

    /// Maximum number of facet-ridge paths between two distinct facets that
    /// share no inner facet, with witness paths. Computed as an integral
    /// max-flow on the dual graph.
    pub fn independent_facet_ridge_paths(
        &self,
        f1: &Face,
        f2: &Face,
    ) -> Result<(usize, Vec<Vec<Face>>), ComplexError> {
        let dual = self.dual_graph()?;
        let s = dual
            .facet_index(f1.vertices())
            .ok_or_else(|| ComplexError::NotAFacet { vertices: f1.vertices.clone() })?;
        let t = dual
            .facet_index(f2.vertices())
            .ok_or_else(|| ComplexError::NotAFacet { vertices: f2.vertices.clone() })?;
        if s == t {
            return Err(ComplexError::SameFacet);
        }
        let (count, paths) =
            crate::connectivity::max_independent_paths(&dual.graph, s as VertexId, t as VertexId);
        let witness = paths
            .into_iter()
            .map(|p| p.into_iter().map(|i| dual.facets[i as usize].clone()).collect())
            .collect();
        Ok((count, witness))
    }

    /// Serialize as `{"dim": k, "faces": [[ids...]...]}`, listing maximal
    /// faces only, each as a cube-ordered vertex list (the index of a
    /// position, in binary, gives its cube coordinates). Every maximal face
    /// must therefore carry a cube graph in this complex.
    pub fn to_json(&self) -> Result<Value, ComplexError> {
        let edges: Vec<(VertexId, VertexId)> = self
            .faces_of_dim(1)
            .iter()
            .map(|e| (e[0], e[1]))
            .collect();
        let mut lists = Vec::new();
        for f in &self.maximal {
            let ordered = crate::polytope::recognize_cube(&f.vertices, &edges).map_err(|e| {
                ComplexError::NotACubeFace {
                    vertices: f.vertices.clone(),
                    reason: e.to_string(),
                }
            })?;
            lists.push(ordered);
        }
        Ok(json!({ "dim": self.dim(), "faces": lists }))
    }

    /// Load a complex serialized by [`PolytopalComplex::to_json`]. Each
    /// maximal face is re-closed under subfaces via the cube rule.
    pub fn from_json(value: &Value) -> Result<PolytopalComplex, ComplexError> {
        let dim = value
            .get("dim")
            .and_then(Value::as_i64)
            .ok_or_else(|| ComplexError::Json("missing integer field `dim`".into()))?;
        let lists = value
            .get("faces")
            .and_then(Value::as_array)
            .ok_or_else(|| ComplexError::Json("missing array field `faces`".into()))?;
        let mut maximal = Vec::new();
        for entry in lists {
            let ids: Option<Vec<VertexId>> = entry
                .as_array()
                .map(|a| a.iter().map(|x| x.as_u64().map(|v| v as VertexId)).collect())
                .and_then(|v: Vec<Option<VertexId>>| v.into_iter().collect());
            let ids = ids.ok_or_else(|| ComplexError::Json("faces must be arrays of ids".into()))?;
            let closure = cube_ordered_closure(&ids)?;
            let top = closure.last().expect("closure includes the face").clone();
            maximal.push((top, closure));
        }
        let complex = PolytopalComplex::build(maximal)?;
        if complex.dim() as i64 != dim {
            return Err(ComplexError::Json(format!(
                "declared dim {} but faces close to dim {}",
                dim,
                complex.dim()
            )));
        }
        Ok(complex)
    }
}

/// Subface closure of an ordered cube face. The list must have length 2^k;
/// position `p` sits at cube coordinates given by the binary digits of `p`
/// (most significant digit first). Faces come out sorted by (dim, vertex
/// set), with the face itself last.
pub fn cube_ordered_closure(ordered: &[VertexId]) -> Result<Vec<Face>, ComplexError> {
    let len = ordered.len();
    if len == 0 || !len.is_power_of_two() {
        return Err(ComplexError::BadCubeFaceLength { len });
    }
    let k = len.trailing_zeros() as usize;
    {
        let mut seen = BTreeSet::new();
        for &v in ordered {
            if !seen.insert(v) {
                return Err(ComplexError::RepeatedVertex { vertex: v });
            }
        }
    }
    // Subcubes of the position set: choose free coordinates `free` and an
    // assignment of the rest.
    let mut faces = Vec::new();
    for free in 0..(1usize << k) {
        let fixed_positions = (0..k).filter(|c| free & (1 << (k - 1 - c)) == 0);
        let fixed: Vec<usize> = fixed_positions.collect();
        let f = free.count_ones() as usize;
        for assign in 0..(1usize << fixed.len()) {
            let mut base = 0usize;
            for (slot, &c) in fixed.iter().enumerate() {
                if assign & (1 << (fixed.len() - 1 - slot)) != 0 {
                    base |= 1 << (k - 1 - c);
                }
            }
            let verts: Vec<VertexId> = (0..(1usize << f))
                .map(|m| {
                    let mut pos = base;
                    let free_coords: Vec<usize> =
                        (0..k).filter(|c| free & (1 << (k - 1 - c)) != 0).collect();
                    for (slot, &c) in free_coords.iter().enumerate() {
                        if m & (1 << (f - 1 - slot)) != 0 {
                            pos |= 1 << (k - 1 - c);
                        }
                    }
                    ordered[pos]
                })
                .collect();
            faces.push(Face::new(verts, f as i32));
        }
    }
    faces.sort_by_key(|a| (a.dim, a.vertices.clone()));
    faces.dedup();
    Ok(faces)
}

/// The facet-ridge dual graph of a pure complex, with the shared ridge
/// recorded per dual edge.
#[derive(Debug, Clone)]
pub struct DualGraph {
    /// Facets sorted by vertex set; the index is the dual vertex id.
    pub facets: Vec<Face>,
    pub graph: Graph,
    shared_ridges: BTreeMap<(usize, usize), Vec<VertexId>>,
}

impl DualGraph {
    pub fn facet_index(&self, vertices: &[VertexId]) -> Option<usize> {
        self.facets
            .binary_search_by(|f| f.vertices.as_slice().cmp(vertices))
            .ok()
    }

    pub fn shared_ridge(&self, i: usize, j: usize) -> Option<&[VertexId]> {
        let key = if i < j { (i, j) } else { (j, i) };
        self.shared_ridges.get(&key).map(|v| v.as_slice())
    }

    /// Distinct ridge vertex sets realised by dual edges, ascending.
    pub fn crossing_ridges(&self) -> Vec<Vec<VertexId>> {
        let set: BTreeSet<Vec<VertexId>> = self.shared_ridges.values().cloned().collect();
        set.into_iter().collect()
    }

    /// Shortest path avoiding the facet indices in `avoid` and never
    /// crossing a ridge from `avoid_ridges`. BFS over ascending facet ids.
    pub fn path_avoiding(
        &self,
        s: usize,
        t: usize,
        avoid: &BTreeSet<usize>,
        avoid_ridges: &BTreeSet<Vec<VertexId>>,
    ) -> Option<Vec<usize>> {
        if avoid.contains(&s) || avoid.contains(&t) {
            return None;
        }
        if s == t {
            return Some(vec![s]);
        }
        let mut parent: Vec<Option<usize>> = vec![None; self.facets.len()];
        let mut seen = vec![false; self.facets.len()];
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(u) = queue.pop_front() {
            for v in self.graph.neighbors(u as VertexId) {
                let v = v as usize;
                if seen[v] || avoid.contains(&v) {
                    continue;
                }
                if !avoid_ridges.is_empty() {
                    let ridge = self.shared_ridge(u, v).expect("dual edge has a ridge");
                    if avoid_ridges.contains(ridge) {
                        continue;
                    }
                }
                seen[v] = true;
                parent[v] = Some(u);
                if v == t {
                    let mut path = vec![t];
                    let mut cur = t;
                    while let Some(p) = parent[cur] {
                        path.push(p);
                        cur = p;
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(v);
            }
        }
        None
    }
}
