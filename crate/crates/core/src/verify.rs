//! The claim harness: one operation per connectivity claim, each producing
//! a structured pass/fail report with machine-checkable witnesses.
//!
//! Reports carry four outcomes. `Pass` and `Fail` are self-explanatory and
//! a failing report always embeds a replayable counterexample (the face,
//! separator or facet pair that broke the claim). `Indeterminate` means an
//! exhaustive enumeration refused to run under the configured work limit —
//! a budget guard, never a theorem failure. `NotApplicable` means the
//! claim's hypothesis is not met by the instance (wrong dimension, or
//! simple vertices present where none are allowed).

use std::collections::BTreeSet;
use std::time::Instant;

use serde_json::{json, Value};

use crate::complex::{Face, PolytopalComplex, VertexId};
use crate::connectivity::{
    enumerate_min_separators, enumerate_separators_of_size, vertex_connectivity,
    vertex_connectivity_with_cut, ConnectivityError, EnumerationLimits,
};
use crate::cube::{
    all_words, cube_antistar_complex, cube_boundary_complex, cube_cutset_complex, CubeCutsetSpec,
    CubeWord, Letter,
};
use crate::polytope::{euler_edge_check, hypercube, vertex_census, CubicalPolytope};

/// Budgets for the enumeration-backed checks.
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    /// Maximum number of subsets an exhaustive sweep may inspect.
    pub work_limit: u64,
    /// Maximum number of separator reports kept per sweep.
    pub cap: usize,
    /// Worker threads for subset enumeration.
    pub jobs: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { work_limit: 100_000_000, cap: 100_000, jobs: 1 }
    }
}

impl VerifyConfig {
    fn limits(&self) -> EnumerationLimits {
        EnumerationLimits { work_limit: self.work_limit, cap: self.cap, jobs: self.jobs }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Indeterminate,
    NotApplicable,
}

impl Outcome {
    fn passed_field(self) -> Value {
        match self {
            Outcome::Pass => json!(true),
            Outcome::Fail => json!(false),
            Outcome::Indeterminate => json!("indeterminate"),
            Outcome::NotApplicable => json!("n/a"),
        }
    }
}

/// One verified claim on one instance.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub claim: String,
    pub instance: String,
    pub outcome: Outcome,
    pub witness: Value,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    fn finish(
        claim: &str,
        instance: String,
        started: Instant,
        outcome: Outcome,
        witness: Value,
    ) -> Self {
        VerificationReport {
            claim: claim.to_string(),
            instance,
            outcome,
            witness,
            elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
        }
    }

    pub fn failed(&self) -> bool {
        self.outcome == Outcome::Fail
    }

    /// One JSON-lines record: `{"claim", "instance", "passed", "witness", "ms"}`
    /// where `passed` is `true`, `false`, `"indeterminate"` or `"n/a"`.
    pub fn to_json(&self) -> Value {
        json!({
            "claim": self.claim,
            "instance": self.instance,
            "passed": self.outcome.passed_field(),
            "witness": self.witness,
            "ms": self.elapsed_ms,
        })
    }
}

pub fn describe_instance(p: &CubicalPolytope) -> String {
    format!(
        "cubical {}-polytope ({} vertices, {} facets)",
        p.d(),
        p.vertex_count(),
        p.facet_count()
    )
}

/// The graph of a d-polytope is d-connected.
pub fn verify_balinski(p: &CubicalPolytope) -> VerificationReport {
    let started = Instant::now();
    let (kappa, cut) = vertex_connectivity_with_cut(&p.graph());
    let outcome = if kappa >= p.d() { Outcome::Pass } else { Outcome::Fail };
    let mut witness = json!({ "kappa": kappa, "required": p.d() });
    if outcome == Outcome::Fail {
        witness["cut"] = json!(cut);
    }
    VerificationReport::finish("balinski", describe_instance(p), started, outcome, witness)
}

/// The connectivity of a cubical d-polytope (d >= 3) is min(delta, 2d-2);
/// and for d >= 4 every minimum separator of size at most 2d-3 is the full
/// neighbourhood of a vertex, leaving exactly two components, one of which
/// is that vertex alone.
pub fn verify_connectivity_theorem(p: &CubicalPolytope, cfg: &VerifyConfig) -> VerificationReport {
    let claim = "connectivity-theorem";
    let started = Instant::now();
    let instance = describe_instance(p);
    let d = p.d();
    if d < 3 {
        let witness = json!({ "reason": "stated for d >= 3" });
        return VerificationReport::finish(claim, instance, started, Outcome::NotApplicable, witness);
    }
    let graph = p.graph();
    let delta = vertex_census(p).delta;
    let (kappa, cut) = vertex_connectivity_with_cut(&graph);
    let bound = delta.min(2 * d - 2);
    if kappa < bound {
        let witness = json!({
            "kappa": kappa, "delta": delta, "bound": bound, "cut": cut,
        });
        return VerificationReport::finish(claim, instance, started, Outcome::Fail, witness);
    }
    let mut witness = json!({ "kappa": kappa, "delta": delta, "bound": bound });
    if d >= 4 && kappa <= 2 * d - 3 {
        let enumeration = match enumerate_min_separators(&graph, kappa, &cfg.limits()) {
            Err(e) => {
                return VerificationReport::finish(
                    claim,
                    instance,
                    started,
                    Outcome::Indeterminate,
                    work_limit_witness(&e),
                );
            }
            Ok(enumeration) => enumeration,
        };
        if enumeration.truncated {
            witness["separator_structure"] = json!("truncated at cap");
            return VerificationReport::finish(
                claim,
                instance,
                started,
                Outcome::Indeterminate,
                witness,
            );
        }
        witness["separators"] = json!(enumeration.found);
        witness["subsets_checked"] = json!(enumeration.subsets_checked);
        if let Some(bad) = enumeration.reports.iter().find(|r| !r.is_vertex_neighborhood_split()) {
            witness["counterexample"] = serde_json::to_value(bad).expect("report serializes");
            return VerificationReport::finish(claim, instance, started, Outcome::Fail, witness);
        }
        // Bonus bound, cheap and a good trap for enumeration bugs: a small
        // minimum separator meets any single facet in at most d-1 vertices.
        for report in &enumeration.reports {
            for facet in p.boundary().maximal_faces() {
                let inside = report.x.iter().filter(|v| facet.contains_vertex(**v)).count();
                if inside > d - 1 {
                    witness["counterexample"] = json!({
                        "separator": report.x,
                        "facet": facet.vertices(),
                        "intersection": inside,
                        "max_allowed": d - 1,
                    });
                    return VerificationReport::finish(claim, instance, started, Outcome::Fail, witness);
                }
            }
        }
        witness["separator_structure"] =
            json!("all vertex neighborhoods, two components, one singleton");
        witness["facet_intersection_bound"] = json!(d - 1);
    } else {
        witness["separator_structure"] = if d < 4 {
            json!("skipped: structure claim needs d >= 4")
        } else {
            json!(format!("skipped: kappa {} exceeds 2d-3 = {}", kappa, 2 * d - 3))
        };
    }
    VerificationReport::finish(claim, instance, started, Outcome::Pass, witness)
}

fn work_limit_witness(e: &ConnectivityError) -> Value {
    match e {
        ConnectivityError::WorkLimitExceeded { n, k, required, limit } => json!({
            "reason": "work limit exceeded",
            "n": n, "k": k, "required": required.to_string(), "limit": limit,
        }),
        other => json!({ "reason": other.to_string() }),
    }
}

/// Every separator of cardinality d in the d-cube is the neighbourhood of
/// a vertex, and removing it leaves two components, one the vertex itself.
pub fn verify_cube_separators(d: usize, cfg: &VerifyConfig) -> VerificationReport {
    let claim = "cube-separators";
    let started = Instant::now();
    let instance = format!("0-1 {d}-cube graph");
    if d < 2 {
        let witness = json!({ "reason": "needs d >= 2" });
        return VerificationReport::finish(claim, instance, started, Outcome::NotApplicable, witness);
    }
    let graph = hypercube(d).expect("d >= 2").graph();
    let enumeration = match enumerate_separators_of_size(&graph, d, &cfg.limits()) {
        Err(e) => {
            return VerificationReport::finish(
                claim,
                instance,
                started,
                Outcome::Indeterminate,
                work_limit_witness(&e),
            );
        }
        Ok(enumeration) => enumeration,
    };
    let mut witness = json!({
        "d": d,
        "subsets_checked": enumeration.subsets_checked,
        "separators_found": enumeration.found,
    });
    if enumeration.truncated {
        witness["reason"] = json!("separator cap reached before the sweep finished");
        return VerificationReport::finish(claim, instance, started, Outcome::Indeterminate, witness);
    }
    let found: BTreeSet<Vec<VertexId>> = enumeration.reports.iter().map(|r| r.x.clone()).collect();
    let neighborhoods: BTreeSet<Vec<VertexId>> =
        (0..graph.n() as VertexId).map(|v| graph.neighborhood(v)).collect();
    witness["distinct_neighborhoods"] = json!(neighborhoods.len());
    if found != neighborhoods {
        let extra: Vec<_> = found.difference(&neighborhoods).take(3).collect();
        let missing: Vec<_> = neighborhoods.difference(&found).take(3).collect();
        witness["extra"] = json!(extra);
        witness["missing"] = json!(missing);
        return VerificationReport::finish(claim, instance, started, Outcome::Fail, witness);
    }
    if let Some(bad) = enumeration.reports.iter().find(|r| !r.is_vertex_neighborhood_split()) {
        witness["counterexample"] = serde_json::to_value(bad).expect("report serializes");
        return VerificationReport::finish(claim, instance, started, Outcome::Fail, witness);
    }
    VerificationReport::finish(claim, instance, started, Outcome::Pass, witness)
}

/// The antistar of every proper nonempty face of the d-cube is a strongly
/// connected (d-1)-complex, and the constructive union of opposite facet
/// complexes agrees face-for-face with the independent disjointness filter.
pub fn verify_cube_antistar(d: usize) -> VerificationReport {
    let claim = "cube-antistar";
    let started = Instant::now();
    let instance = format!("0-1 {d}-cube");
    if d < 2 {
        let witness = json!({ "reason": "needs d >= 2" });
        return VerificationReport::finish(claim, instance, started, Outcome::NotApplicable, witness);
    }
    let boundary = cube_boundary_complex(d);
    let mut checked = 0usize;
    for word in all_words(d) {
        if word.is_full_cube() {
            continue;
        }
        checked += 1;
        let constructed = cube_antistar_complex(d, &word).expect("proper face");
        let filtered = boundary.antistar(&word.face()).expect("face of the cube");
        let failure = if constructed != filtered {
            Some("construction differs from the disjoint-face filter")
        } else if constructed.dim() != d as i32 - 1 {
            Some("antistar does not have dimension d-1")
        } else if !constructed.is_pure() {
            Some("antistar is not pure")
        } else if !constructed.is_strongly_connected().holds() {
            Some("antistar is not strongly connected")
        } else {
            None
        };
        if let Some(reason) = failure {
            let witness = json!({ "face": word.to_string(), "reason": reason });
            return VerificationReport::finish(claim, instance, started, Outcome::Fail, witness);
        }
    }
    let witness = json!({ "faces_checked": checked });
    VerificationReport::finish(claim, instance, started, Outcome::Pass, witness)
}

/// Deleting a vertex y and any subset Y of its neighbours from the d-cube
/// leaves an induced complex with a spanning strongly connected
/// codimension-2 subcomplex; the induced complex is itself a pure
/// codimension-2 complex exactly when Y is the whole neighbourhood.
pub fn verify_cube_cutset(d: usize) -> VerificationReport {
    let claim = "cube-cutset";
    let started = Instant::now();
    let instance = format!("0-1 {d}-cube");
    if d < 3 {
        let witness = json!({ "reason": "needs d >= 3" });
        return VerificationReport::finish(claim, instance, started, Outcome::NotApplicable, witness);
    }
    // Canonical prefix subsets always; every neighbour subset at small d,
    // which also exercises the coordinate relabelling.
    let mut masks: BTreeSet<u32> = (0..=d).map(|k| ((1u64 << k) - 1) as u32).collect();
    if d <= 4 {
        masks.extend(0..(1u32 << d));
    }
    let apex = CubeWord::vertex_from_index(d, 0);
    let neighbor = |i: usize| -> CubeWord {
        let mut letters = vec![Letter::Zero; d];
        letters[i] = Letter::One;
        CubeWord::new(letters)
    };
    let mut checked = 0usize;
    for &mask in &masks {
        let chosen: Vec<CubeWord> =
            (0..d).filter(|i| mask & (1 << i) != 0).map(neighbor).collect();
        let k = chosen.len();
        let spec = CubeCutsetSpec::new(apex.clone(), chosen).expect("valid neighbours");
        let (c, cprime) = cube_cutset_complex(&spec).expect("valid spec");
        checked += 1;
        let pure_codim2 = c.is_pure() && c.dim() == d as i32 - 2;
        let failure = if !cprime.is_pure() || cprime.dim() != d as i32 - 2 {
            Some("spanning subcomplex is not pure of dimension d-2")
        } else if !cprime.is_strongly_connected().holds() {
            Some("spanning subcomplex is not strongly connected")
        } else if !cprime.is_spanning_subcomplex_of(&c) {
            Some("subcomplex does not span the induced complex")
        } else if pure_codim2 != (k == d) {
            Some("purity at codimension 2 must hold exactly for the full neighbourhood")
        } else if k == d && c != cprime {
            Some("for the full neighbourhood the induced complex must equal the ridge union")
        } else {
            None
        };
        if let Some(reason) = failure {
            let witness = json!({ "neighbor_mask": mask, "reason": reason });
            return VerificationReport::finish(claim, instance, started, Outcome::Fail, witness);
        }
    }
    // The nonpure showcase at d = 4, Y = {e_1, e_3}: exactly two 3-faces
    // and one uncovered 2-face, by name.
    if d == 4 {
        let spec =
            CubeCutsetSpec::new(apex.clone(), vec![neighbor(0), neighbor(2)]).expect("valid");
        let (c, _) = cube_cutset_complex(&spec).expect("valid spec");
        let three_faces: BTreeSet<Vec<VertexId>> =
            c.faces_of_dim(3).iter().map(|f| f.to_vec()).collect();
        let expected: BTreeSet<Vec<VertexId>> = [
            "*1**".parse::<CubeWord>().unwrap().vertex_indices(),
            "***1".parse::<CubeWord>().unwrap().vertex_indices(),
        ]
        .into_iter()
        .collect();
        let uncovered = "1*1*".parse::<CubeWord>().unwrap().face();
        if three_faces != expected || !c.maximal_faces().contains(&uncovered) || c.is_pure() {
            let witness = json!({
                "reason": "nonpure showcase at Y = {e1, e3} has the wrong shape",
                "three_faces": three_faces.iter().collect::<Vec<_>>(),
            });
            return VerificationReport::finish(claim, instance, started, Outcome::Fail, witness);
        }
    }
    let witness = json!({ "neighbor_subsets_checked": checked });
    VerificationReport::finish(claim, instance, started, Outcome::Pass, witness)
}

/// The boundary complex, and the star and antistar of every vertex, are
/// strongly connected (d-1)-complexes.
pub fn verify_star_antistar(p: &CubicalPolytope) -> VerificationReport {
    let claim = "star-antistar";
    let started = Instant::now();
    let instance = describe_instance(p);
    let boundary = p.boundary();
    if !boundary.is_strongly_connected().holds() {
        let witness = json!({ "reason": "boundary complex is not strongly connected" });
        return VerificationReport::finish(claim, instance, started, Outcome::Fail, witness);
    }
    let want_dim = p.d() as i32 - 1;
    for v in 0..p.vertex_count() as VertexId {
        let face = Face::vertex(v);
        for (kind, complex) in [
            ("star", boundary.star(&face).expect("vertex in complex")),
            ("antistar", boundary.antistar(&face).expect("vertex in complex")),
        ] {
            if complex.dim() != want_dim
                || !complex.is_pure()
                || !complex.is_strongly_connected().holds()
            {
                let witness = json!({
                    "vertex": v,
                    "complex": kind,
                    "dim": complex.dim(),
                    "pure": complex.is_pure(),
                });
                return VerificationReport::finish(claim, instance, started, Outcome::Fail, witness);
            }
        }
    }
    let witness = json!({ "vertices_checked": p.vertex_count() });
    VerificationReport::finish(claim, instance, started, Outcome::Pass, witness)
}

/// Inside the star of any vertex, removing the vertex set of one of its
/// facets leaves a strongly connected (d-2)-complex.
pub fn verify_star_minus_facet(p: &CubicalPolytope) -> VerificationReport {
    let claim = "star-minus-facet";
    let started = Instant::now();
    let instance = describe_instance(p);
    let boundary = p.boundary();
    let want_dim = p.d() as i32 - 2;
    let mut pairs = 0usize;
    for v in 0..p.vertex_count() as VertexId {
        let star = boundary.star(&Face::vertex(v)).expect("vertex in complex");
        for facet in star.maximal_faces().to_vec() {
            pairs += 1;
            let rest = star.antistar(&facet).expect("facet of the star");
            if rest.dim() != want_dim || !rest.is_pure() || !rest.is_strongly_connected().holds() {
                let witness = json!({
                    "vertex": v,
                    "facet": facet.vertices(),
                    "dim": rest.dim(),
                    "pure": rest.is_pure(),
                });
                return VerificationReport::finish(claim, instance, started, Outcome::Fail, witness);
            }
        }
    }
    let witness = json!({ "pairs_checked": pairs });
    VerificationReport::finish(claim, instance, started, Outcome::Pass, witness)
}

/// The antistar of every proper face contains a spanning strongly
/// connected (d-2)-subcomplex, built constructively as the union over all
/// facets of the facet's boundary complex minus the face's vertices.
pub fn verify_antistar_spanning(p: &CubicalPolytope) -> VerificationReport {
    let claim = "antistar-spanning";
    let started = Instant::now();
    let instance = describe_instance(p);
    if p.d() < 3 {
        let witness = json!({ "reason": "needs d >= 3" });
        return VerificationReport::finish(claim, instance, started, Outcome::NotApplicable, witness);
    }
    let boundary = p.boundary();
    let all_faces = boundary.all_faces();
    let facets = boundary.maximal_faces().to_vec();
    let want_dim = p.d() as i32 - 2;
    for face in &all_faces {
        let target = boundary.antistar(face).expect("face of the boundary");
        let mut union: Vec<Face> = Vec::new();
        for facet in &facets {
            if facet == face {
                continue; // its boundary minus itself contributes nothing
            }
            for h in &all_faces {
                if h.dim() < facet.dim()
                    && h.is_subface_of(facet)
                    && h.disjoint_from(face.vertices())
                {
                    union.push(h.clone());
                }
            }
        }
        let constructed = PolytopalComplex::from_faces_unchecked(union);
        let ok = constructed.dim() == want_dim
            && constructed.is_pure()
            && constructed.is_strongly_connected().holds()
            && constructed.is_spanning_subcomplex_of(&target);
        if !ok {
            let witness = json!({
                "face": face.vertices(),
                "dim": constructed.dim(),
                "pure": constructed.is_pure(),
                "spanning": constructed.is_spanning_subcomplex_of(&target),
            });
            return VerificationReport::finish(claim, instance, started, Outcome::Fail, witness);
        }
    }
    let witness = json!({ "faces_checked": all_faces.len() });
    VerificationReport::finish(claim, instance, started, Outcome::Pass, witness)
}

/// Removing the vertices of any proper face leaves a (d-2)-connected
/// subgraph.
pub fn verify_face_removal(p: &CubicalPolytope) -> VerificationReport {
    let claim = "face-removal";
    let started = Instant::now();
    let instance = describe_instance(p);
    if p.d() < 3 {
        let witness = json!({ "reason": "needs d >= 3" });
        return VerificationReport::finish(claim, instance, started, Outcome::NotApplicable, witness);
    }
    let graph = p.graph();
    let required = p.d() - 2;
    let mut min_seen = usize::MAX;
    for face in p.boundary().all_faces() {
        let keep: BTreeSet<VertexId> = (0..p.vertex_count() as VertexId)
            .filter(|v| !face.contains_vertex(*v))
            .collect();
        let kappa = vertex_connectivity(&graph.induced(&keep));
        min_seen = min_seen.min(kappa);
        if kappa < required {
            let witness = json!({
                "face": face.vertices(),
                "kappa": kappa,
                "required": required,
            });
            return VerificationReport::finish(claim, instance, started, Outcome::Fail, witness);
        }
    }
    let witness = json!({
        "faces_checked": p.boundary().total_faces(),
        "min_kappa_seen": min_seen,
        "required": required,
    });
    VerificationReport::finish(claim, instance, started, Outcome::Pass, witness)
}

/// Between any two facets there are at least d facet-ridge paths sharing
/// no inner facet; moreover a path exists avoiding any single other facet,
/// and one exists never stepping across any single ridge.
pub fn verify_dual_menger(p: &CubicalPolytope) -> VerificationReport {
    let claim = "dual-menger";
    let started = Instant::now();
    let instance = describe_instance(p);
    let boundary = p.boundary();
    let dual = boundary.dual_graph().expect("boundary is pure of dim >= 1");
    let m = dual.facets.len();
    let d = p.d();
    let mut min_independent = usize::MAX;
    for i in 0..m {
        for j in i + 1..m {
            let (count, _) = crate::connectivity::max_independent_paths(
                &dual.graph,
                i as VertexId,
                j as VertexId,
            );
            min_independent = min_independent.min(count);
            if count < d {
                let witness = json!({
                    "facet_1": dual.facets[i].vertices(),
                    "facet_2": dual.facets[j].vertices(),
                    "independent_paths": count,
                    "required": d,
                });
                return VerificationReport::finish(claim, instance, started, Outcome::Fail, witness);
            }
        }
    }
    // Avoidance sweeps, exhaustive over single avoided facets and ridges.
    let ridges = dual.crossing_ridges();
    for i in 0..m {
        for j in i + 1..m {
            for a in 0..m {
                if a == i || a == j {
                    continue;
                }
                let avoid = BTreeSet::from([a]);
                if dual.path_avoiding(i, j, &avoid, &BTreeSet::new()).is_none() {
                    let witness = json!({
                        "facet_1": dual.facets[i].vertices(),
                        "facet_2": dual.facets[j].vertices(),
                        "avoided_facet": dual.facets[a].vertices(),
                    });
                    return VerificationReport::finish(
                        claim,
                        instance,
                        started,
                        Outcome::Fail,
                        witness,
                    );
                }
            }
            for ridge in &ridges {
                let avoid: BTreeSet<Vec<VertexId>> = BTreeSet::from([ridge.clone()]);
                if dual.path_avoiding(i, j, &BTreeSet::new(), &avoid).is_none() {
                    let witness = json!({
                        "facet_1": dual.facets[i].vertices(),
                        "facet_2": dual.facets[j].vertices(),
                        "avoided_ridge": ridge,
                    });
                    return VerificationReport::finish(
                        claim,
                        instance,
                        started,
                        Outcome::Fail,
                        witness,
                    );
                }
            }
        }
    }
    let witness = json!({
        "facet_pairs": m * (m - 1) / 2,
        "min_independent_paths": min_independent,
        "required": d,
        "ridges_swept": ridges.len(),
    });
    VerificationReport::finish(claim, instance, started, Outcome::Pass, witness)
}

/// A cubical d-polytope with no simple vertices is (d+1)-connected.
/// Instances with simple vertices report NotApplicable.
pub fn verify_nonsimple(p: &CubicalPolytope) -> VerificationReport {
    let claim = "nonsimple";
    let started = Instant::now();
    let instance = describe_instance(p);
    let census = vertex_census(p);
    if !census.simple_vertices.is_empty() {
        let witness = json!({
            "reason": "instance has simple vertices",
            "simple_vertices": census.simple_vertices.len(),
        });
        return VerificationReport::finish(claim, instance, started, Outcome::NotApplicable, witness);
    }
    let kappa = vertex_connectivity(&p.graph());
    let outcome = if kappa > p.d() { Outcome::Pass } else { Outcome::Fail };
    let witness = json!({ "kappa": kappa, "required": p.d() + 1 });
    VerificationReport::finish(claim, instance, started, outcome, witness)
}

/// Cubical 3-polytopes have exactly 2|V| - 4 edges.
pub fn verify_euler_edges(p: &CubicalPolytope) -> VerificationReport {
    let claim = "euler-edges";
    let started = Instant::now();
    let instance = describe_instance(p);
    if p.d() != 3 {
        let witness = json!({ "reason": "defined for d = 3 only" });
        return VerificationReport::finish(claim, instance, started, Outcome::NotApplicable, witness);
    }
    let ok = euler_edge_check(p).expect("d = 3");
    let witness = json!({
        "vertices": p.vertex_count(),
        "edges": p.edge_count(),
        "expected_edges": 2 * p.vertex_count() - 4,
    });
    let outcome = if ok { Outcome::Pass } else { Outcome::Fail };
    VerificationReport::finish(claim, instance, started, outcome, witness)
}

/// Enumerate the minimum separators and list those that are not vertex
/// neighbourhoods. For d >= 4 a nonempty list within the 2d-3 bound fails;
/// for d = 3 the list is informational (such separators do exist for some
/// cubical 3-polytopes).
pub fn search_non_neighborhood_separators(
    p: &CubicalPolytope,
    cfg: &VerifyConfig,
) -> VerificationReport {
    let claim = "non-neighborhood-separators";
    let started = Instant::now();
    let instance = describe_instance(p);
    let graph = p.graph();
    let kappa = vertex_connectivity(&graph);
    let enumeration = match enumerate_min_separators(&graph, kappa, &cfg.limits()) {
        Err(e) => {
            return VerificationReport::finish(
                claim,
                instance,
                started,
                Outcome::Indeterminate,
                work_limit_witness(&e),
            );
        }
        Ok(enumeration) => enumeration,
    };
    let mut witness = json!({
        "kappa": kappa,
        "minimum_separators": enumeration.found,
        "subsets_checked": enumeration.subsets_checked,
    });
    if enumeration.truncated {
        witness["reason"] = json!("separator cap reached before the sweep finished");
        return VerificationReport::finish(claim, instance, started, Outcome::Indeterminate, witness);
    }
    let non_neighborhood: Vec<&crate::connectivity::SeparatorReport> = enumeration
        .reports
        .iter()
        .filter(|r| r.neighborhood_of.is_none())
        .collect();
    witness["non_neighborhood_count"] = json!(non_neighborhood.len());
    witness["non_neighborhood"] = json!(non_neighborhood
        .iter()
        .take(32)
        .map(|r| r.x.clone())
        .collect::<Vec<_>>());
    let outcome = if p.d() >= 4 && kappa <= 2 * p.d() - 3 && !non_neighborhood.is_empty() {
        Outcome::Fail
    } else {
        Outcome::Pass
    };
    VerificationReport::finish(claim, instance, started, outcome, witness)
}

/// The recorded bounds 2d-3 <= g(d) < f(d) <= 2^(d-1), checked through
/// their refutable consequences on concrete instances. The exact values of
/// the two bound functions are open and are never computed.
#[derive(Debug, Clone)]
pub struct BoundsLedger {
    pub d: usize,
    /// Every minimum separator of size at most this must be a vertex
    /// neighbourhood: 2d - 3.
    pub g_lower: usize,
    /// Ceiling for the minimum-degree-forces-connectivity range: 2^(d-1).
    pub f_upper: u128,
    pub instances_checked: usize,
    pub violations: Vec<Value>,
}

impl BoundsLedger {
    pub fn to_json(&self) -> Value {
        json!({
            "d": self.d,
            "g_lower": self.g_lower,
            "f_upper": self.f_upper.to_string(),
            "instances_checked": self.instances_checked,
            "violations": self.violations,
        })
    }
}

/// Check every instance of the corpus against the two implications that
/// would witness a bound violation: a small minimum separator that is not
/// a neighbourhood (against the g bound), or an instance with minimum
/// degree at most 2d-2 that is less than delta-connected (against the f
/// bound). Requires d >= 4; the bound functions are not defined below that.
pub fn bounds_ledger(
    d: usize,
    corpus: &[&CubicalPolytope],
    cfg: &VerifyConfig,
) -> Result<BoundsLedger, ConnectivityError> {
    assert!(d >= 4, "the bound functions are defined for d >= 4");
    let mut ledger = BoundsLedger {
        d,
        g_lower: 2 * d - 3,
        f_upper: 1u128 << (d - 1),
        instances_checked: 0,
        violations: Vec::new(),
    };
    for p in corpus {
        assert_eq!(p.d(), d, "corpus instance of wrong dimension");
        ledger.instances_checked += 1;
        let graph = p.graph();
        let delta = vertex_census(p).delta;
        let kappa = vertex_connectivity(&graph);
        if delta <= 2 * d - 2 && kappa < delta {
            ledger.violations.push(json!({
                "instance": describe_instance(p),
                "kind": "delta-connectivity",
                "kappa": kappa,
                "delta": delta,
            }));
        }
        if kappa <= 2 * d - 3 {
            let enumeration = enumerate_min_separators(&graph, kappa, &cfg.limits())?;
            for report in &enumeration.reports {
                if report.neighborhood_of.is_none() {
                    ledger.violations.push(json!({
                        "instance": describe_instance(p),
                        "kind": "non-neighborhood minimum separator",
                        "separator": report.x,
                    }));
                }
            }
        }
    }
    Ok(ledger)
}

/// Report wrapper for [`bounds_ledger`] over a single instance.
pub fn verify_bounds_ledger(p: &CubicalPolytope, cfg: &VerifyConfig) -> VerificationReport {
    let claim = "bounds-ledger";
    let started = Instant::now();
    let instance = describe_instance(p);
    if p.d() < 4 {
        let witness = json!({ "reason": "the bound functions are defined for d >= 4" });
        return VerificationReport::finish(claim, instance, started, Outcome::NotApplicable, witness);
    }
    match bounds_ledger(p.d(), &[p], cfg) {
        Err(e) => VerificationReport::finish(
            claim,
            instance,
            started,
            Outcome::Indeterminate,
            work_limit_witness(&e),
        ),
        Ok(ledger) => {
            let outcome = if ledger.violations.is_empty() { Outcome::Pass } else { Outcome::Fail };
            VerificationReport::finish(claim, instance, started, outcome, ledger.to_json())
        }
    }
}

/// Claims runnable against a single instance, in canonical order.
pub const INSTANCE_CLAIMS: &[&str] = &[
    "balinski",
    "euler-edges",
    "star-antistar",
    "star-minus-facet",
    "antistar-spanning",
    "face-removal",
    "dual-menger",
    "connectivity-theorem",
    "nonsimple",
    "non-neighborhood-separators",
    "bounds-ledger",
    "cube-separators",
    "cube-antistar",
    "cube-cutset",
];

/// Run one claim by name. The cube claims take their dimension from the
/// instance. Returns `None` for an unknown claim name.
pub fn run_claim(
    claim: &str,
    p: &CubicalPolytope,
    cfg: &VerifyConfig,
) -> Option<VerificationReport> {
    let report = match claim {
        "balinski" => verify_balinski(p),
        "euler-edges" => verify_euler_edges(p),
        "star-antistar" => verify_star_antistar(p),
        "star-minus-facet" => verify_star_minus_facet(p),
        "antistar-spanning" => verify_antistar_spanning(p),
        "face-removal" => verify_face_removal(p),
        "dual-menger" => verify_dual_menger(p),
        "connectivity-theorem" => verify_connectivity_theorem(p, cfg),
        "nonsimple" => verify_nonsimple(p),
        "non-neighborhood-separators" => search_non_neighborhood_separators(p, cfg),
        "bounds-ledger" => verify_bounds_ledger(p, cfg),
        "cube-separators" => verify_cube_separators(p.d(), cfg),
        "cube-antistar" => verify_cube_antistar(p.d()),
        "cube-cutset" => verify_cube_cutset(p.d()),
        _ => return None,
    };
    Some(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{chain_of_cubes, connected_sum};

    fn q(d: usize) -> CubicalPolytope {
        hypercube(d).unwrap()
    }

    fn double(d: usize) -> CubicalPolytope {
        connected_sum(&q(d), 0, &q(d), 0, None).unwrap()
    }

    #[test]
    fn balinski_on_cubes_and_sums() {
        assert_eq!(verify_balinski(&q(4)).outcome, Outcome::Pass);
        assert_eq!(verify_balinski(&double(3)).outcome, Outcome::Pass);
        assert_eq!(verify_balinski(&chain_of_cubes(4, 3).unwrap()).outcome, Outcome::Pass);
    }

    #[test]
    fn connectivity_theorem_outcomes() {
        let cfg = VerifyConfig::default();
        let r = verify_connectivity_theorem(&double(4), &cfg);
        assert_eq!(r.outcome, Outcome::Pass);
        assert_eq!(r.witness["kappa"], json!(4));
        assert_eq!(r.witness["separators"], json!(16));
        let r = verify_connectivity_theorem(&double(3), &cfg);
        assert_eq!(r.outcome, Outcome::Pass);
        assert!(r.witness["separator_structure"].as_str().unwrap().contains("skipped"));
        let r = verify_connectivity_theorem(&q(2), &cfg);
        assert_eq!(r.outcome, Outcome::NotApplicable);
    }

    #[test]
    fn connectivity_theorem_hits_work_limit() {
        let cfg = VerifyConfig { work_limit: 10, ..Default::default() };
        let r = verify_connectivity_theorem(&double(4), &cfg);
        assert_eq!(r.outcome, Outcome::Indeterminate);
        assert_eq!(r.witness["reason"], json!("work limit exceeded"));
    }

    #[test]
    fn cube_separator_reports() {
        let cfg = VerifyConfig::default();
        for d in 2..=4usize {
            let r = verify_cube_separators(d, &cfg);
            assert_eq!(r.outcome, Outcome::Pass, "d={d}");
            if d >= 3 {
                assert_eq!(r.witness["separators_found"], json!(1u64 << d));
            }
        }
        let tiny = VerifyConfig { work_limit: 3, ..Default::default() };
        assert_eq!(verify_cube_separators(4, &tiny).outcome, Outcome::Indeterminate);
    }

    #[test]
    fn cube_antistar_reports() {
        for d in 2..=4usize {
            let r = verify_cube_antistar(d);
            assert_eq!(r.outcome, Outcome::Pass, "d={d}");
            assert_eq!(r.witness["faces_checked"], json!(3usize.pow(d as u32) - 1));
        }
    }

    #[test]
    fn cube_cutset_reports() {
        assert_eq!(verify_cube_cutset(3).outcome, Outcome::Pass);
        assert_eq!(verify_cube_cutset(4).outcome, Outcome::Pass);
        // d = 5 runs the canonical prefix subsets only.
        assert_eq!(verify_cube_cutset(5).outcome, Outcome::Pass);
        assert_eq!(verify_cube_cutset(2).outcome, Outcome::NotApplicable);
    }

    #[test]
    fn star_and_antistar_reports() {
        assert_eq!(verify_star_antistar(&q(4)).outcome, Outcome::Pass);
        assert_eq!(verify_star_antistar(&double(3)).outcome, Outcome::Pass);
        assert_eq!(verify_star_antistar(&chain_of_cubes(3, 3).unwrap()).outcome, Outcome::Pass);
    }

    #[test]
    fn star_minus_facet_reports() {
        assert_eq!(verify_star_minus_facet(&q(3)).outcome, Outcome::Pass);
        assert_eq!(verify_star_minus_facet(&q(4)).outcome, Outcome::Pass);
        // d = 2: the antistar inside a star is a single vertex, a
        // 0-complex, trivially strongly connected.
        assert_eq!(verify_star_minus_facet(&q(2)).outcome, Outcome::Pass);
    }

    #[test]
    fn antistar_spanning_reports() {
        assert_eq!(verify_antistar_spanning(&q(3)).outcome, Outcome::Pass);
        assert_eq!(verify_antistar_spanning(&q(4)).outcome, Outcome::Pass);
        assert_eq!(verify_antistar_spanning(&double(3)).outcome, Outcome::Pass);
        assert_eq!(verify_antistar_spanning(&q(2)).outcome, Outcome::NotApplicable);
    }

    #[test]
    fn face_removal_reports() {
        assert_eq!(verify_face_removal(&q(3)).outcome, Outcome::Pass);
        assert_eq!(verify_face_removal(&double(3)).outcome, Outcome::Pass);
        assert_eq!(verify_face_removal(&q(4)).outcome, Outcome::Pass);
    }

    #[test]
    fn dual_menger_reports() {
        assert_eq!(verify_dual_menger(&q(3)).outcome, Outcome::Pass);
        assert_eq!(verify_dual_menger(&q(4)).outcome, Outcome::Pass);
        assert_eq!(verify_dual_menger(&double(3)).outcome, Outcome::Pass);
    }

    #[test]
    fn nonsimple_is_vacuous_on_the_corpus() {
        assert_eq!(verify_nonsimple(&q(4)).outcome, Outcome::NotApplicable);
        assert_eq!(verify_nonsimple(&double(4)).outcome, Outcome::NotApplicable);
    }

    #[test]
    fn euler_reports() {
        assert_eq!(verify_euler_edges(&q(3)).outcome, Outcome::Pass);
        assert_eq!(verify_euler_edges(&chain_of_cubes(3, 3).unwrap()).outcome, Outcome::Pass);
        assert_eq!(verify_euler_edges(&q(4)).outcome, Outcome::NotApplicable);
    }

    #[test]
    fn non_neighborhood_search_on_small_instances() {
        let cfg = VerifyConfig::default();
        let r = search_non_neighborhood_separators(&q(3), &cfg);
        assert_eq!(r.outcome, Outcome::Pass);
        assert_eq!(r.witness["non_neighborhood_count"], json!(0));
        // Exhaustion over all C(12,3) = 220 subsets of the double 3-cube:
        // 8 minimum separators, every one a vertex neighbourhood.
        let r = search_non_neighborhood_separators(&double(3), &cfg);
        assert_eq!(r.outcome, Outcome::Pass);
        assert_eq!(r.witness["subsets_checked"], json!(220));
        assert_eq!(r.witness["minimum_separators"], json!(8));
        assert_eq!(r.witness["non_neighborhood_count"], json!(0));
    }

    #[test]
    fn bounds_ledger_reports() {
        let cfg = VerifyConfig::default();
        let q4 = q(4);
        let sum = double(4);
        let chain = chain_of_cubes(4, 3).unwrap();
        let ledger = bounds_ledger(4, &[&q4, &sum, &chain], &cfg).unwrap();
        assert_eq!(ledger.g_lower, 5);
        assert_eq!(ledger.f_upper, 8);
        assert_eq!(ledger.instances_checked, 3);
        assert!(ledger.violations.is_empty());
        let empty = bounds_ledger(4, &[], &cfg).unwrap();
        assert_eq!(empty.instances_checked, 0);
        assert_eq!(verify_bounds_ledger(&q(3), &cfg).outcome, Outcome::NotApplicable);
        assert_eq!(verify_bounds_ledger(&q4, &cfg).outcome, Outcome::Pass);
    }

    #[test]
    fn report_json_schema() {
        let r = verify_balinski(&q(3));
        let v = r.to_json();
        assert_eq!(v["claim"], json!("balinski"));
        assert_eq!(v["passed"], json!(true));
        assert!(v["instance"].is_string());
        assert!(v["witness"].is_object());
        assert!(v["ms"].is_number());
        let na = verify_euler_edges(&q(4)).to_json();
        assert_eq!(na["passed"], json!("n/a"));
    }

    #[test]
    fn run_claim_dispatch_covers_all_names() {
        let cfg = VerifyConfig::default();
        let p = q(3);
        for claim in INSTANCE_CLAIMS {
            let report = run_claim(claim, &p, &cfg).expect("known claim");
            assert_eq!(&report.claim, claim);
        }
        assert!(run_claim("no-such-claim", &p, &cfg).is_none());
    }

    #[test]
    fn reports_are_deterministic_modulo_timing() {
        let cfg = VerifyConfig::default();
        let p = double(3);
        for claim in INSTANCE_CLAIMS {
            let mut a = run_claim(claim, &p, &cfg).unwrap().to_json();
            let mut b = run_claim(claim, &p, &cfg).unwrap().to_json();
            a.as_object_mut().unwrap().remove("ms");
            b.as_object_mut().unwrap().remove("ms");
            assert_eq!(a, b, "claim {claim}");
        }
    }
}
