//! Combinatorial cubical d-polytopes: hypercubes, connected sums, chains,
//! and file-loaded instances.
//!
//! A polytope here is its boundary complex plus a coordinatization of each
//! facet: an ordered vertex list of length 2^(d-1) whose position indices,
//! read in binary (most significant digit first), are cube coordinates.
//! Validation covers exactly what the connectivity arguments use:
//!
//! * every facet carries a (d-1)-cube graph under its coordinatization,
//!   with no extra edges between its vertices contributed by other facets;
//! * every ridge lies in exactly two facets (the boundary is a closed
//!   pseudo-manifold);
//! * the facet-ridge dual graph is connected;
//! * faces shared by two facets induce the same subface sets through both
//!   coordinatizations;
//! * the minimum degree is at least d.
//!
//! Sphericity is *not* verified: a loaded instance that satisfies the
//! checks above is accepted. All generator outputs are polytopal by
//! construction, so this trust boundary only concerns hand-written files.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{cube_ordered_closure, ComplexError, Face, Graph, PolytopalComplex, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RecognitionFailure {
    #[error("vertex count {count} is not a power of two")]
    CardinalityNotPowerOfTwo { count: usize },
    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    NotRegular { vertex: VertexId, degree: usize, expected: usize },
    #[error("graph is disconnected: reached {reached} of {expected} vertices")]
    Disconnected { reached: usize, expected: usize },
    #[error("vertex {vertex} at distance {distance} has {predecessors} neighbours one step closer, expected {distance}")]
    DistanceStructure { vertex: VertexId, distance: usize, predecessors: usize },
    #[error("label conflict at vertex {vertex}")]
    LabelConflict { vertex: VertexId },
    #[error("edge {u}-{v} joins labels differing in {differ} coordinates")]
    EdgeNotUnitDistance { u: VertexId, v: VertexId, differ: u32 },
}

#[derive(Debug, Error)]
pub enum PolytopeError {
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("facet {index} has {len} vertices, expected 2^(d-1) = {expected}")]
    FacetSize { index: usize, len: usize, expected: usize },
    #[error("facet {index} repeats vertex {vertex}")]
    RepeatedVertexInFacet { index: usize, vertex: VertexId },
    #[error("facets {first} and {second} have identical vertex sets")]
    DuplicateFacet { first: usize, second: usize },
    #[error("vertex ids must cover 0..{nverts}; id {missing} never occurs")]
    UnusedVertexId { nverts: usize, missing: VertexId },
    #[error("cube recognition failed on facet {index}: {failure}")]
    CubeRecognition { index: usize, failure: RecognitionFailure },
    #[error("facet {index} does not induce a cube graph: vertices {u} and {v} are joined but their positions differ in {differ} coordinates")]
    FacetGraphNotCube { index: usize, u: VertexId, v: VertexId, differ: u32 },
    #[error("ridge {ridge:?} lies in {count} facets, expected exactly 2")]
    RidgeFacetCount { ridge: Vec<VertexId>, count: usize },
    #[error("the facet-ridge dual graph is disconnected")]
    DisconnectedDualGraph,
    #[error("facets {first} and {second} share vertices {shared:?} that do not form a common face consistently")]
    InconsistentSharedFaces { first: usize, second: usize, shared: Vec<VertexId> },
    #[error("vertex {vertex} has degree {degree}, below the dimension {d}")]
    MinDegreeTooLow { vertex: VertexId, degree: usize, d: usize },
    #[error("connected sum requires equal dimensions, got {0} and {1}")]
    DimensionMismatch(usize, usize),
    #[error("no facet with index {index}; the polytope has {count} facets")]
    NoSuchFacet { index: usize, count: usize },
    #[error("the supplied matching is not an isomorphism of the facet cube graphs: {reason}")]
    MatchingNotIsomorphism { reason: String },
    #[error("chain parameters out of range: need d >= 3 and n >= 1, got d = {d}, n = {n}")]
    ChainParameters { d: usize, n: usize },
    #[error("the Euler edge count check is only defined for d = 3, got d = {0}")]
    EulerWrongDimension(usize),
    #[error("declared vertex count {declared} does not match the facets, which use {derived} vertices")]
    VertexCountMismatch { declared: usize, derived: usize },
    #[error("edge list mentions vertex {vertex}, beyond the declared count {nverts}")]
    EdgeOutOfRange { vertex: VertexId, nverts: usize },
    #[error("the instance's edge list does not match the boundary complex: {reason}")]
    EdgeSetMismatch { reason: String },
    #[error("complex construction failed: {0}")]
    Complex(#[from] ComplexError),
    #[error("cannot read instance: {0}")]
    Io(String),
    #[error("malformed instance JSON: {0}")]
    Json(String),
}

/// A validated combinatorial cubical d-polytope.
#[derive(Debug, Clone)]
pub struct CubicalPolytope {
    d: usize,
    nverts: usize,
    facets: Vec<Vec<VertexId>>,
    boundary: PolytopalComplex,
}

impl CubicalPolytope {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn vertex_count(&self) -> usize {
        self.nverts
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Coordinatized facets: ordered vertex lists of length 2^(d-1).
    pub fn facets(&self) -> &[Vec<VertexId>] {
        &self.facets
    }

    pub fn boundary(&self) -> &PolytopalComplex {
        &self.boundary
    }

    /// The graph of the polytope. Vertex ids are already compact.
    pub fn graph(&self) -> Graph {
        self.boundary.graph()
    }

    pub fn edge_count(&self) -> usize {
        self.boundary.face_count(1)
    }

    /// Serialize as an instance file value.
    pub fn to_instance_json(&self) -> serde_json::Value {
        serde_json::to_value(InstanceFile {
            d: self.d,
            vertices: self.nverts,
            facets: self.facets.clone(),
            edges: None,
        })
        .expect("instance serializes")
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct InstanceFile {
    d: usize,
    vertices: usize,
    facets: Vec<Vec<VertexId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    edges: Option<Vec<(VertexId, VertexId)>>,
}

/// The d-cube as a 0–1 polytope: vertex ids are coordinate words read as
/// binary numerals, facets fix one coordinate to 0 or 1.
pub fn hypercube(d: usize) -> Result<CubicalPolytope, PolytopeError> {
    if d < 2 {
        return Err(PolytopeError::DimensionTooSmall(d));
    }
    let facets = crate::cube::enumerate_faces(d, d as i64 - 1)
        .expect("facet dimension in range")
        .into_iter()
        .map(|w| w.vertex_indices())
        .collect();
    from_ordered_facets(d, facets)
}

/// BFS coordinatization of a candidate cube graph.
///
/// The lexicographically smallest vertex becomes the origin; its k
/// neighbours receive singleton labels in neighbour-id order; a vertex at
/// BFS distance j must have exactly j neighbours one step closer and
/// receives the union of their labels. Succeeds iff the labels are
/// distinct, exhaustive, and every edge joins labels differing in one
/// element. Returns the vertex list in binary order of labels.
pub fn recognize_cube(
    vertices: &[VertexId],
    edges: &[(VertexId, VertexId)],
) -> Result<Vec<VertexId>, RecognitionFailure> {
    let mut verts: Vec<VertexId> = vertices.to_vec();
    verts.sort_unstable();
    verts.dedup();
    let count = verts.len();
    if count == 0 || !count.is_power_of_two() {
        return Err(RecognitionFailure::CardinalityNotPowerOfTwo { count });
    }
    let k = count.trailing_zeros() as usize;
    let index: BTreeMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); count];
    for &(u, v) in edges {
        if let (Some(&ui), Some(&vi)) = (index.get(&u), index.get(&v)) {
            if ui != vi {
                adj[ui].insert(vi);
                adj[vi].insert(ui);
            }
        }
    }
    for (i, nbrs) in adj.iter().enumerate() {
        if nbrs.len() != k {
            return Err(RecognitionFailure::NotRegular {
                vertex: verts[i],
                degree: nbrs.len(),
                expected: k,
            });
        }
    }
    // BFS layers from the origin.
    let mut dist: Vec<Option<usize>> = vec![None; count];
    dist[0] = Some(0);
    let mut layer = vec![0usize];
    let mut reached = 1usize;
    let mut labels: Vec<u64> = vec![0; count];
    let mut next_layer_dist = 1usize;
    while !layer.is_empty() {
        let mut next: Vec<usize> = Vec::new();
        for &u in &layer {
            for &v in &adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(next_layer_dist);
                    next.push(v);
                    reached += 1;
                }
            }
        }
        next.sort_unstable();
        next.dedup();
        if next_layer_dist == 1 {
            for (c, &v) in next.iter().enumerate() {
                labels[v] = 1 << c;
            }
        } else {
            for &v in &next {
                let preds: Vec<usize> = adj[v]
                    .iter()
                    .copied()
                    .filter(|&w| dist[w] == Some(next_layer_dist - 1))
                    .collect();
                if preds.len() != next_layer_dist {
                    return Err(RecognitionFailure::DistanceStructure {
                        vertex: verts[v],
                        distance: next_layer_dist,
                        predecessors: preds.len(),
                    });
                }
                let label = preds.iter().fold(0u64, |acc, &w| acc | labels[w]);
                if label.count_ones() as usize != next_layer_dist {
                    return Err(RecognitionFailure::LabelConflict { vertex: verts[v] });
                }
                labels[v] = label;
            }
        }
        layer = next;
        next_layer_dist += 1;
    }
    if reached != count {
        return Err(RecognitionFailure::Disconnected { reached, expected: count });
    }
    let mut seen_labels = vec![false; count];
    for (i, &label) in labels.iter().enumerate() {
        if label as usize >= count || seen_labels[label as usize] {
            return Err(RecognitionFailure::LabelConflict { vertex: verts[i] });
        }
        seen_labels[label as usize] = true;
    }
    for (u, nbrs) in adj.iter().enumerate() {
        for &v in nbrs {
            if u < v {
                let differ = (labels[u] ^ labels[v]).count_ones();
                if differ != 1 {
                    return Err(RecognitionFailure::EdgeNotUnitDistance {
                        u: verts[u],
                        v: verts[v],
                        differ,
                    });
                }
            }
        }
    }
    // Labels are coordinate subsets read as binary positions; the c-th
    // neighbour of the origin lands at position 2^c.
    let mut ordered = vec![0 as VertexId; count];
    for (i, &label) in labels.iter().enumerate() {
        ordered[label as usize] = verts[i];
    }
    Ok(ordered)
}

/// Build and validate a polytope from coordinatized facets.
pub fn from_ordered_facets(
    d: usize,
    facets: Vec<Vec<VertexId>>,
) -> Result<CubicalPolytope, PolytopeError> {
    if d < 2 {
        return Err(PolytopeError::DimensionTooSmall(d));
    }
    let expected = 1usize << (d - 1);
    let mut seen_sets: BTreeMap<Vec<VertexId>, usize> = BTreeMap::new();
    let mut max_id: VertexId = 0;
    for (index, facet) in facets.iter().enumerate() {
        if facet.len() != expected {
            return Err(PolytopeError::FacetSize { index, len: facet.len(), expected });
        }
        let mut sorted = facet.clone();
        sorted.sort_unstable();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(PolytopeError::RepeatedVertexInFacet { index, vertex: pair[0] });
            }
        }
        max_id = max_id.max(*sorted.last().expect("facet nonempty"));
        if let Some(first) = seen_sets.insert(sorted, index) {
            return Err(PolytopeError::DuplicateFacet { first, second: index });
        }
    }
    let nverts = max_id as usize + 1;
    let mut used = vec![false; nverts];
    for facet in &facets {
        for &v in facet {
            used[v as usize] = true;
        }
    }
    if let Some(missing) = used.iter().position(|&u| !u) {
        return Err(PolytopeError::UnusedVertexId { nverts, missing: missing as VertexId });
    }

    let closures: Vec<Vec<Face>> = facets
        .iter()
        .map(|f| cube_ordered_closure(f))
        .collect::<Result<_, _>>()?;
    let boundary = PolytopalComplex::build(
        closures
            .iter()
            .map(|c| (c.last().expect("closure includes the facet").clone(), c.clone()))
            .collect(),
    )?;

    // Position of every vertex within every facet, for the cube-graph and
    // shared-face checks.
    let positions: Vec<BTreeMap<VertexId, usize>> = facets
        .iter()
        .map(|f| f.iter().enumerate().map(|(p, &v)| (v, p)).collect())
        .collect();

    // No facet may acquire a chord from another facet's edges.
    for edge in boundary.faces_of_dim(1) {
        let (u, v) = (edge[0], edge[1]);
        for (index, pos) in positions.iter().enumerate() {
            if let (Some(&pu), Some(&pv)) = (pos.get(&u), pos.get(&v)) {
                let differ = (pu ^ pv).count_ones();
                if differ != 1 {
                    return Err(PolytopeError::FacetGraphNotCube { index, u, v, differ });
                }
            }
        }
    }

    // Closed pseudo-manifold: each ridge in exactly two facets.
    let facet_vertex_sets: Vec<BTreeSet<VertexId>> = facets
        .iter()
        .map(|f| f.iter().copied().collect())
        .collect();
    for ridge in boundary.faces_of_dim(d as i32 - 2) {
        let count = facet_vertex_sets
            .iter()
            .filter(|set| ridge.iter().all(|v| set.contains(v)))
            .count();
        if count != 2 {
            return Err(PolytopeError::RidgeFacetCount { ridge: ridge.to_vec(), count });
        }
    }

    // Shared faces must be faces of both coordinatizations, with identical
    // subface closures.
    for i in 0..facets.len() {
        for j in i + 1..facets.len() {
            let shared: Vec<VertexId> = facet_vertex_sets[i]
                .intersection(&facet_vertex_sets[j])
                .copied()
                .collect();
            if shared.is_empty() {
                continue;
            }
            let sub_i = subcube_closure(&facets[i], &positions[i], &shared);
            let sub_j = subcube_closure(&facets[j], &positions[j], &shared);
            match (sub_i, sub_j) {
                (Some(a), Some(b)) if a == b => {}
                _ => {
                    return Err(PolytopeError::InconsistentSharedFaces {
                        first: i,
                        second: j,
                        shared,
                    });
                }
            }
        }
    }

    let dual = boundary.dual_graph()?;
    if !dual.graph.is_connected() {
        return Err(PolytopeError::DisconnectedDualGraph);
    }

    let graph = boundary.graph();
    for v in 0..nverts as VertexId {
        let degree = graph.degree(v);
        if degree < d {
            return Err(PolytopeError::MinDegreeTooLow { vertex: v, degree, d });
        }
    }

    Ok(CubicalPolytope { d, nverts, facets, boundary })
}

/// The subface closure of a shared vertex set inside one facet, or `None`
/// when the set is not a subcube of that facet's positions.
fn subcube_closure(
    facet: &[VertexId],
    positions: &BTreeMap<VertexId, usize>,
    shared: &[VertexId],
) -> Option<BTreeSet<Face>> {
    let pos: Vec<usize> = shared.iter().map(|v| positions[v]).collect();
    if !pos.len().is_power_of_two() {
        return None;
    }
    let and = pos.iter().fold(usize::MAX, |a, &p| a & p);
    let or = pos.iter().fold(0usize, |a, &p| a | p);
    let free = and ^ or;
    if (1usize << free.count_ones()) != pos.len() {
        return None;
    }
    if pos.iter().any(|&p| p & !free != and & !free) {
        return None;
    }
    // Ordered sub-list: positions matching the pattern, ascending.
    let mut sub = Vec::with_capacity(pos.len());
    let mut sorted_pos = pos.clone();
    sorted_pos.sort_unstable();
    for p in sorted_pos {
        sub.push(facet[p]);
    }
    cube_ordered_closure(&sub).ok().map(|v| v.into_iter().collect())
}

/// Build a polytope from unordered facet vertex sets plus the polytope's
/// edge list; each facet is coordinatized by cube recognition first.
pub fn from_unordered_facets(
    d: usize,
    facets: Vec<Vec<VertexId>>,
    edges: &[(VertexId, VertexId)],
) -> Result<CubicalPolytope, PolytopeError> {
    let ordered = facets
        .iter()
        .enumerate()
        .map(|(index, f)| {
            recognize_cube(f, edges)
                .map_err(|failure| PolytopeError::CubeRecognition { index, failure })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let polytope = from_ordered_facets(d, ordered)?;
    let given: BTreeSet<(VertexId, VertexId)> = edges
        .iter()
        .map(|&(u, v)| if u < v { (u, v) } else { (v, u) })
        .collect();
    let built: BTreeSet<(VertexId, VertexId)> = polytope
        .boundary
        .faces_of_dim(1)
        .iter()
        .map(|e| (e[0], e[1]))
        .collect();
    if given != built {
        let extra: Vec<_> = given.difference(&built).take(3).collect();
        let missing: Vec<_> = built.difference(&given).take(3).collect();
        return Err(PolytopeError::EdgeSetMismatch {
            reason: format!("extra edges {extra:?}, missing edges {missing:?}"),
        });
    }
    Ok(polytope)
}

/// Glue two d-polytopes along a facet of each. The identified facets stop
/// being faces; the matching must be an isomorphism of their cube graphs.
/// When omitted, both facets are coordinatized by cube recognition (origin
/// at the lexicographically smallest vertex) and matched position by
/// position, which is deterministic.
///
/// Vertex ids of the first summand survive; the remaining vertices of the
/// second are appended in ascending order of their old ids. The result is
/// validated from scratch.
pub fn connected_sum(
    p1: &CubicalPolytope,
    f1: usize,
    p2: &CubicalPolytope,
    f2: usize,
    matching: Option<&BTreeMap<VertexId, VertexId>>,
) -> Result<CubicalPolytope, PolytopeError> {
    if p1.d != p2.d {
        return Err(PolytopeError::DimensionMismatch(p1.d, p2.d));
    }
    let d = p1.d;
    if f1 >= p1.facets.len() {
        return Err(PolytopeError::NoSuchFacet { index: f1, count: p1.facets.len() });
    }
    if f2 >= p2.facets.len() {
        return Err(PolytopeError::NoSuchFacet { index: f2, count: p2.facets.len() });
    }
    let facet1 = &p1.facets[f1];
    let facet2 = &p2.facets[f2];

    let pairing: Vec<(VertexId, VertexId)> = match matching {
        Some(m) => {
            validate_matching(facet1, facet2, m)?;
            facet1.iter().map(|v| (*v, m[v])).collect()
        }
        None => {
            let edges1 = facet_cube_edges(facet1);
            let edges2 = facet_cube_edges(facet2);
            let ordered1 = recognize_cube(facet1, &edges1)
                .map_err(|failure| PolytopeError::CubeRecognition { index: f1, failure })?;
            let ordered2 = recognize_cube(facet2, &edges2)
                .map_err(|failure| PolytopeError::CubeRecognition { index: f2, failure })?;
            ordered1.into_iter().zip(ordered2).collect()
        }
    };
    let glue_to_p1: BTreeMap<VertexId, VertexId> =
        pairing.iter().map(|&(a, b)| (b, a)).collect();

    // Remap p2: glued vertices collapse onto p1 ids, the rest follow in
    // ascending order of their p2 ids.
    let mut remap: BTreeMap<VertexId, VertexId> = glue_to_p1.clone();
    let mut next = p1.nverts as VertexId;
    for v in 0..p2.nverts as VertexId {
        if let std::collections::btree_map::Entry::Vacant(e) = remap.entry(v) {
            e.insert(next);
            next += 1;
        }
    }

    let mut facets: Vec<Vec<VertexId>> = Vec::with_capacity(p1.facets.len() + p2.facets.len() - 2);
    for (i, f) in p1.facets.iter().enumerate() {
        if i != f1 {
            facets.push(f.clone());
        }
    }
    for (i, f) in p2.facets.iter().enumerate() {
        if i != f2 {
            facets.push(f.iter().map(|v| remap[v]).collect());
        }
    }
    from_ordered_facets(d, facets)
}

/// Edges of a coordinatized facet: positions differing in one binary digit.
fn facet_cube_edges(facet: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    let mut edges = Vec::new();
    for p in 0..facet.len() {
        for q in p + 1..facet.len() {
            if ((p ^ q) as u32).count_ones() == 1 {
                edges.push((facet[p], facet[q]));
            }
        }
    }
    edges
}

fn validate_matching(
    facet1: &[VertexId],
    facet2: &[VertexId],
    m: &BTreeMap<VertexId, VertexId>,
) -> Result<(), PolytopeError> {
    let v1: BTreeSet<VertexId> = facet1.iter().copied().collect();
    let v2: BTreeSet<VertexId> = facet2.iter().copied().collect();
    if m.len() != v1.len() || m.keys().any(|k| !v1.contains(k)) {
        return Err(PolytopeError::MatchingNotIsomorphism {
            reason: "domain is not the first facet's vertex set".into(),
        });
    }
    let image: BTreeSet<VertexId> = m.values().copied().collect();
    if image != v2 {
        return Err(PolytopeError::MatchingNotIsomorphism {
            reason: "image is not the second facet's vertex set".into(),
        });
    }
    let edges2: BTreeSet<(VertexId, VertexId)> = facet_cube_edges(facet2)
        .into_iter()
        .map(|(u, v)| if u < v { (u, v) } else { (v, u) })
        .collect();
    for (u, v) in facet_cube_edges(facet1) {
        let (mu, mv) = (m[&u], m[&v]);
        let key = if mu < mv { (mu, mv) } else { (mv, mu) };
        if !edges2.contains(&key) {
            return Err(PolytopeError::MatchingNotIsomorphism {
                reason: format!("edge {u}-{v} maps to the non-edge {mu}-{mv}"),
            });
        }
    }
    Ok(())
}

/// n copies of the d-cube glued in a path, each along opposite facets.
/// `chain_of_cubes(d, 1)` is the d-cube itself. The result has
/// 2^d + (n-1) 2^(d-1) vertices and 2dn - 2(n-1) facets.
pub fn chain_of_cubes(d: usize, n: usize) -> Result<CubicalPolytope, PolytopeError> {
    if d < 3 || n < 1 {
        return Err(PolytopeError::ChainParameters { d, n });
    }
    let cube = hypercube(d)?;
    let mut acc = cube.clone();
    // Facets of the cube are ordered x1=0, x1=1, x2=0, ...; each new cube
    // is glued by its x1=0 facet onto the free x1=1 end of the chain.
    let mut free_end = 1usize;
    for _ in 1..n {
        let before = acc.facets.len();
        acc = connected_sum(&acc, free_end, &cube, 0, None)?;
        // The glued cube's facets minus its x1=0 facet are appended after
        // the old facets minus the free end, so the new free end (x1=1 of
        // the glued cube) lands exactly at the seam.
        free_end = before - 1;
    }
    Ok(acc)
}

/// Per-vertex degrees, the minimum degree, and the split into simple
/// vertices (degree exactly d) and the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCensus {
    pub degrees: Vec<usize>,
    pub delta: usize,
    pub simple_vertices: Vec<VertexId>,
    pub nonsimple_vertices: Vec<VertexId>,
}

pub fn vertex_census(p: &CubicalPolytope) -> VertexCensus {
    let graph = p.graph();
    let degrees: Vec<usize> = (0..p.nverts as VertexId).map(|v| graph.degree(v)).collect();
    let delta = degrees.iter().copied().min().unwrap_or(0);
    let (simple, nonsimple): (Vec<VertexId>, Vec<VertexId>) =
        (0..p.nverts as VertexId).partition(|&v| degrees[v as usize] == p.d);
    VertexCensus { degrees, delta, simple_vertices: simple, nonsimple_vertices: nonsimple }
}

/// For cubical 3-polytopes, Euler's formula pins the edge count to
/// 2|V| - 4. Errors for other dimensions.
pub fn euler_edge_check(p: &CubicalPolytope) -> Result<bool, PolytopeError> {
    if p.d != 3 {
        return Err(PolytopeError::EulerWrongDimension(p.d));
    }
    Ok(p.edge_count() == 2 * p.vertex_count() - 4)
}

/// Load an instance from a JSON value. The `edges` field, when present,
/// switches to unordered-facet recognition mode.
pub fn instance_from_json(value: &serde_json::Value) -> Result<CubicalPolytope, PolytopeError> {
    let file: InstanceFile =
        serde_json::from_value(value.clone()).map_err(|e| PolytopeError::Json(e.to_string()))?;
    let polytope = match &file.edges {
        None => from_ordered_facets(file.d, file.facets)?,
        Some(edges) => {
            for &(u, v) in edges {
                let beyond = u.max(v);
                if beyond as usize >= file.vertices {
                    return Err(PolytopeError::EdgeOutOfRange {
                        vertex: beyond,
                        nverts: file.vertices,
                    });
                }
            }
            from_unordered_facets(file.d, file.facets, edges)?
        }
    };
    if polytope.nverts != file.vertices {
        return Err(PolytopeError::VertexCountMismatch {
            declared: file.vertices,
            derived: polytope.nverts,
        });
    }
    Ok(polytope)
}

pub fn load_instance(path: &Path) -> Result<CubicalPolytope, PolytopeError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| PolytopeError::Io(format!("{}: {e}", path.display())))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| PolytopeError::Json(e.to_string()))?;
    instance_from_json(&value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube;

    #[test]
    fn hypercube_counts() {
        let q2 = hypercube(2).unwrap();
        assert_eq!((q2.vertex_count(), q2.edge_count(), q2.facet_count()), (4, 4, 4));
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.vertex_count(), q3.edge_count(), q3.facet_count()), (8, 12, 6));
        let q4 = hypercube(4).unwrap();
        assert_eq!((q4.vertex_count(), q4.edge_count(), q4.facet_count()), (16, 32, 8));
        assert_eq!(q4.boundary().face_count(2), 24);
        assert!(matches!(hypercube(1), Err(PolytopeError::DimensionTooSmall(1))));
    }

    #[test]
    fn hypercube_boundary_matches_word_construction() {
        for d in 2..=5usize {
            let via_facets = hypercube(d).unwrap();
            let via_words = cube::cube_boundary_complex(d);
            assert_eq!(via_facets.boundary(), &via_words, "d={d}");
        }
    }

    #[test]
    fn recognize_square_and_cube() {
        let ordered = recognize_cube(&[10, 11, 12, 13], &[(10, 11), (11, 13), (13, 12), (12, 10)])
            .unwrap();
        assert_eq!(ordered.len(), 4);
        assert_eq!(ordered[0], 10);
        // Positions 0 and 3 are opposite corners.
        assert_eq!(ordered[3], 13);

        let q3 = hypercube(3).unwrap();
        let edges = q3.graph().edges();
        let ordered = recognize_cube(&(0..8).collect::<Vec<_>>(), &edges).unwrap();
        assert_eq!(ordered, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn recognize_rejects_k4_and_irregular_graphs() {
        let k4 = [(0u32, 1u32), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        assert!(matches!(
            recognize_cube(&[0, 1, 2, 3], &k4),
            Err(RecognitionFailure::NotRegular { .. })
        ));
        assert!(matches!(
            recognize_cube(&[0, 1, 2], &[(0, 1), (1, 2)]),
            Err(RecognitionFailure::CardinalityNotPowerOfTwo { count: 3 })
        ));
        // 8 vertices, 3-regular, but not the cube graph: K_{3,3} plus an
        // isolated matching fails on connectivity/distance grounds.
        let two_squares = [(0u32, 1), (1, 3), (3, 2), (2, 0), (4, 5), (5, 7), (7, 6), (6, 4)];
        assert!(recognize_cube(&(0..8).collect::<Vec<_>>(), &two_squares).is_err());
    }

    #[test]
    fn from_facets_accepts_scrambled_facet_with_edges() {
        let q3 = hypercube(3).unwrap();
        let edges = q3.graph().edges();
        let mut facet_sets: Vec<Vec<VertexId>> =
            q3.facets().iter().map(|f| f.to_vec()).collect();
        facet_sets[2].reverse();
        facet_sets[4].swap(0, 3);
        let rebuilt = from_unordered_facets(3, facet_sets, &edges).unwrap();
        assert_eq!(rebuilt.boundary(), q3.boundary());
    }

    #[test]
    fn missing_facet_breaks_the_ridge_count() {
        let q3 = hypercube(3).unwrap();
        let five: Vec<Vec<VertexId>> = q3.facets()[..5].to_vec();
        match from_ordered_facets(3, five) {
            Err(PolytopeError::RidgeFacetCount { count: 1, .. }) => {}
            other => panic!("expected open-surface ridge error, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_facet_is_rejected() {
        let q3 = hypercube(3).unwrap();
        let mut facets = q3.facets().to_vec();
        let mut dup = facets[0].clone();
        dup.reverse(); // same vertex set, different order
        facets.push(dup);
        assert!(matches!(
            from_ordered_facets(3, facets),
            Err(PolytopeError::DuplicateFacet { .. })
        ));
    }

    #[test]
    fn chord_between_facet_vertices_is_rejected() {
        // A square facet listed with two columns swapped declares the
        // diagonal an edge, which clashes with the true square from the
        // other facets.
        let q3 = hypercube(3).unwrap();
        let mut facets = q3.facets().to_vec();
        facets[0].swap(2, 3);
        assert!(from_ordered_facets(3, facets).is_err());
    }

    #[test]
    fn connected_sum_of_two_3_cubes() {
        let q3 = hypercube(3).unwrap();
        let sum = connected_sum(&q3, 0, &q3, 0, None).unwrap();
        assert_eq!(sum.vertex_count(), 12);
        assert_eq!(sum.facet_count(), 10);
        assert_eq!(sum.edge_count(), 20);
        assert_eq!(sum.edge_count(), 2 * sum.vertex_count() - 4);
        assert!(euler_edge_check(&sum).unwrap());
    }

    #[test]
    fn connected_sum_of_two_4_cubes() {
        let q4 = hypercube(4).unwrap();
        let sum = connected_sum(&q4, 0, &q4, 0, None).unwrap();
        assert_eq!(sum.vertex_count(), 24);
        assert_eq!(sum.facet_count(), 14);
        let census = vertex_census(&sum);
        assert_eq!(census.delta, 4);
        assert_eq!(census.simple_vertices.len(), 16);
        assert_eq!(census.nonsimple_vertices.len(), 8);
        assert!(census.nonsimple_vertices.iter().all(|&v| census.degrees[v as usize] == 5));
    }

    #[test]
    fn connected_sum_counts_are_symmetric() {
        let q3 = hypercube(3).unwrap();
        let chain = chain_of_cubes(3, 2).unwrap();
        let a = connected_sum(&chain, 0, &q3, 3, None).unwrap();
        let b = connected_sum(&q3, 3, &chain, 0, None).unwrap();
        assert_eq!(a.vertex_count(), b.vertex_count());
        assert_eq!(a.facet_count(), b.facet_count());
        assert_eq!(a.edge_count(), b.edge_count());
    }

    #[test]
    fn connected_sum_with_explicit_matching() {
        let q3 = hypercube(3).unwrap();
        // Identity-style matching from facet 0 (x1=0: vertices 0..=3) to
        // facet 1 (x1=1: vertices 4..=7) of the other copy.
        let m: BTreeMap<VertexId, VertexId> = [(0, 4), (1, 5), (2, 6), (3, 7)].into();
        let sum = connected_sum(&q3, 0, &q3, 1, Some(&m)).unwrap();
        assert_eq!(sum.vertex_count(), 12);
        // A non-isomorphism: swap two images so an edge maps to a diagonal.
        let bad: BTreeMap<VertexId, VertexId> = [(0, 4), (1, 5), (2, 7), (3, 6)].into();
        assert!(matches!(
            connected_sum(&q3, 0, &q3, 1, Some(&bad)),
            Err(PolytopeError::MatchingNotIsomorphism { .. })
        ));
    }

    #[test]
    fn gluing_squares_yields_a_hexagon() {
        let q2 = hypercube(2).unwrap();
        let hex = connected_sum(&q2, 0, &q2, 0, None).unwrap();
        assert_eq!(hex.vertex_count(), 6);
        assert_eq!(hex.facet_count(), 6);
        assert_eq!(hex.edge_count(), 6);
        let g = hex.graph();
        assert!((0..6).all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
    }

    #[test]
    fn chain_counts_match_formulas() {
        for (d, n) in [(3usize, 1usize), (3, 2), (3, 3), (3, 4), (4, 2), (4, 3)] {
            let chain = chain_of_cubes(d, n).unwrap();
            assert_eq!(chain.vertex_count(), (1 << d) + (n - 1) * (1 << (d - 1)), "d={d} n={n}");
            assert_eq!(chain.facet_count(), 2 * d * n - 2 * (n - 1), "d={d} n={n}");
            if d == 3 {
                assert!(euler_edge_check(&chain).unwrap());
            }
        }
        assert_eq!(chain_of_cubes(3, 3).unwrap().vertex_count(), 16);
        assert_eq!(chain_of_cubes(3, 3).unwrap().edge_count(), 28);
        assert!(matches!(
            chain_of_cubes(2, 2),
            Err(PolytopeError::ChainParameters { .. })
        ));
    }

    #[test]
    fn census_of_cubes_is_simple() {
        let q4 = hypercube(4).unwrap();
        let census = vertex_census(&q4);
        assert_eq!(census.delta, 4);
        assert_eq!(census.simple_vertices.len(), 16);
        assert!(census.nonsimple_vertices.is_empty());
        let q3 = hypercube(3).unwrap();
        let census = vertex_census(&q3);
        assert_eq!(census.delta, 3);
        assert_eq!(census.simple_vertices.len(), 8);
    }

    #[test]
    fn euler_check_requires_dimension_3() {
        let q4 = hypercube(4).unwrap();
        assert!(matches!(euler_edge_check(&q4), Err(PolytopeError::EulerWrongDimension(4))));
        assert!(euler_edge_check(&hypercube(3).unwrap()).unwrap());
    }

    #[test]
    fn instance_json_round_trip() {
        for p in [
            hypercube(3).unwrap(),
            hypercube(4).unwrap(),
            chain_of_cubes(3, 3).unwrap(),
            connected_sum(&hypercube(4).unwrap(), 0, &hypercube(4).unwrap(), 0, None).unwrap(),
        ] {
            let value = p.to_instance_json();
            let back = instance_from_json(&value).unwrap();
            assert_eq!(back.boundary(), p.boundary());
            assert_eq!(back.facets(), p.facets());
        }
    }

    #[test]
    fn instance_json_with_edges_round_trip() {
        let q3 = hypercube(3).unwrap();
        let mut value = q3.to_instance_json();
        let edges = q3.graph().edges();
        value["edges"] = serde_json::to_value(&edges).unwrap();
        // Scramble the facet lists: recognition mode must recover them.
        let scrambled: Vec<Vec<VertexId>> = q3
            .facets()
            .iter()
            .map(|f| {
                let mut f = f.clone();
                f.reverse();
                f
            })
            .collect();
        value["facets"] = serde_json::to_value(&scrambled).unwrap();
        let back = instance_from_json(&value).unwrap();
        assert_eq!(back.boundary(), q3.boundary());
    }

    #[test]
    fn instance_json_rejects_bad_vertex_count() {
        let q3 = hypercube(3).unwrap();
        let mut value = q3.to_instance_json();
        value["vertices"] = serde_json::json!(9);
        assert!(matches!(
            instance_from_json(&value),
            Err(PolytopeError::VertexCountMismatch { declared: 9, derived: 8 })
        ));
    }
}
