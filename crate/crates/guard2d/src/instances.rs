//! Test-instance generation and problem/solution documents.
//!
//! Random polygons follow the benchmark recipe: vertices drawn uniformly
//! from the unit box, joined by a nearest-neighbor tour, then improved with
//! 2-opt until no move shortens it. Crossing edge pairs always admit a
//! shortening swap, so the final tour is a simple polygon.

use crate::deployment::Deployment;
use crate::error::{Error, Result};
use crate::geom::{Component, Point2, PolygonSet, Ring};
use crate::ilp::{verify_cover, VerifyReport};
use crate::sampling::{SampleKind, SampleSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Recipe for one random benchmark polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    /// Number of vertices, drawn uniformly from the unit box.
    pub vertex_count: usize,
    pub seed: u64,
}

impl InstanceSpec {
    pub fn new(vertex_count: usize, seed: u64) -> Self {
        Self { vertex_count, seed }
    }
}

const MAX_ATTEMPTS: u32 = 32;

fn attempt_seed(seed: u64, attempt: u32) -> u64 {
    seed ^ (attempt as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn nearest_neighbor_tour(points: &[Point2]) -> Vec<usize> {
    let n = points.len();
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut current = 0usize;
    used[0] = true;
    order.push(0);
    for _ in 1..n {
        let mut best = usize::MAX;
        let mut best_d = f64::INFINITY;
        for (j, u) in used.iter().enumerate() {
            if !u {
                let d = points[current].dist_sq(&points[j]);
                if d < best_d {
                    best_d = d;
                    best = j;
                }
            }
        }
        used[best] = true;
        order.push(best);
        current = best;
    }
    order
}

/// 2-opt tour improvement: reverse a segment whenever reconnecting shortens
/// the tour. Every applied move strictly shortens the tour, so the sweep
/// terminates; since a crossing pair of edges always admits a shortening
/// swap, the final tour is crossing-free. The pass cap only guards against
/// floating-point stalemates.
fn two_opt(points: &[Point2], order: &mut [usize]) {
    let n = order.len();
    let max_passes = 20 * n + 100;
    for _ in 0..max_passes {
        let mut changed = false;
        for i in 0..n {
            for j in (i + 1)..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    continue;
                }
                let (a1, a2) = (&points[order[i]], &points[order[(i + 1) % n]]);
                let (b1, b2) = (&points[order[j]], &points[order[(j + 1) % n]]);
                let old = a1.dist(a2) + b1.dist(b2);
                let new = a1.dist(b1) + a2.dist(b2);
                if new + 1e-12 < old {
                    order[i + 1..=j].reverse();
                    changed = true;
                }
            }
        }
        if !changed {
            return;
        }
    }
}

/// Generates a simple polygon from the seeded recipe. Degenerate draws
/// (collinear or otherwise invalid rings) are resampled with a derived
/// sub-seed, up to a bounded number of retries.
pub fn random_simple_polygon(spec: &InstanceSpec) -> Result<PolygonSet> {
    if spec.vertex_count < 3 {
        return Err(Error::InvalidPolygon(format!(
            "need at least 3 vertices, got {}",
            spec.vertex_count
        )));
    }
    let mut last_err = String::new();
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(attempt_seed(spec.seed, attempt));
        let points: Vec<Point2> = (0..spec.vertex_count)
            .map(|_| Point2::new(rng.gen::<f64>(), rng.gen::<f64>()))
            .collect();
        let mut order = nearest_neighbor_tour(&points);
        two_opt(&points, &mut order);
        let ring = order.iter().map(|&i| points[i]).collect::<Vec<_>>();
        match PolygonSet::simple(ring) {
            Ok(poly) => return Ok(poly),
            Err(e) => last_err = e.to_string(),
        }
    }
    Err(Error::GenerationFailed(MAX_ATTEMPTS, last_err))
}

/// Axis-aligned plus shape centered at the origin: a square core of side
/// `arm_width` with four arms of length `arm_length`. Twelve vertices.
pub fn plus_polygon(arm_width: f64, arm_length: f64) -> Result<PolygonSet> {
    if arm_width <= 0.0 || arm_length <= 0.0 {
        return Err(Error::InvalidPolygon(format!(
            "plus dimensions must be positive, got width {arm_width}, length {arm_length}"
        )));
    }
    let h = arm_width / 2.0;
    let r = h + arm_length;
    PolygonSet::simple(vec![
        Point2::new(h, h),
        Point2::new(r, h),
        Point2::new(r, -h),
        Point2::new(h, -h),
        Point2::new(h, -r),
        Point2::new(-h, -r),
        Point2::new(-h, -h),
        Point2::new(-r, -h),
        Point2::new(-r, h),
        Point2::new(-h, h),
        Point2::new(-h, r),
        Point2::new(h, r),
    ])
}

// --- problem & solution documents --------------------------------------------

/// A guarding problem as carried by the problem document.
#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    pub polygon: PolygonSet,
    pub mode: SampleKind,
    pub k: usize,
    pub epsilon: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProblemDoc {
    mode: SampleKind,
    k: usize,
    epsilon: f64,
    polygon: PolygonDoc,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolygonDoc {
    components: Vec<ComponentDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentDoc {
    outer: Vec<[f64; 2]>,
    #[serde(default)]
    holes: Vec<Vec<[f64; 2]>>,
}

fn ring_from_doc(coords: &[[f64; 2]]) -> Result<Ring> {
    Ring::new(coords.iter().map(|c| Point2::new(c[0], c[1])).collect())
}

fn ring_to_doc(ring: &Ring) -> Vec<[f64; 2]> {
    ring.vertices().iter().map(|p| [p.x, p.y]).collect()
}

/// Parses a UTF-8 problem document. Unknown fields are rejected; geometry is
/// re-validated on load.
pub fn load_problem(text: &str) -> Result<Problem> {
    let doc: ProblemDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.k == 0 {
        return Err(Error::ZeroSensors);
    }
    if doc.epsilon <= 0.0 {
        return Err(Error::NonPositiveEpsilon(doc.epsilon));
    }
    let components = doc
        .polygon
        .components
        .iter()
        .map(|c| {
            Ok(Component {
                outer: ring_from_doc(&c.outer)?,
                holes: c
                    .holes
                    .iter()
                    .map(|h| ring_from_doc(h))
                    .collect::<Result<Vec<_>>>()?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Problem {
        polygon: PolygonSet::new(components)?,
        mode: doc.mode,
        k: doc.k,
        epsilon: doc.epsilon,
    })
}

/// Serializes a problem back into document form.
pub fn save_problem(problem: &Problem) -> String {
    let doc = ProblemDoc {
        mode: problem.mode,
        k: problem.k,
        epsilon: problem.epsilon,
        polygon: PolygonDoc {
            components: problem
                .polygon
                .components()
                .iter()
                .map(|c| ComponentDoc {
                    outer: ring_to_doc(&c.outer),
                    holes: c.holes.iter().map(ring_to_doc).collect(),
                })
                .collect(),
        },
    };
    serde_json::to_string_pretty(&doc).expect("document serialization cannot fail")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SolutionDoc {
    method: String,
    radius: f64,
    centers: Vec<[f64; 2]>,
    verify: VerifyDoc,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VerifyDoc {
    ok: bool,
    worst_gap: f64,
}

/// Writes the solution document for a deployment, embedding the result of an
/// independent cover verification against `samples`.
pub fn save_deployment(deployment: &Deployment, samples: &SampleSet) -> Result<String> {
    let report = verify_cover(deployment, samples)?;
    let doc = SolutionDoc {
        method: deployment.method.to_string(),
        radius: deployment.radius,
        centers: deployment.centers.iter().map(|p| [p.x, p.y]).collect(),
        verify: VerifyDoc {
            ok: report.ok,
            worst_gap: report.worst_gap,
        },
    };
    Ok(serde_json::to_string_pretty(&doc).expect("document serialization cannot fail"))
}

/// Parses a solution document back into a deployment plus the stored
/// verification summary.
pub fn load_deployment(text: &str) -> Result<(Deployment, VerifyReport)> {
    let doc: SolutionDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let method = doc.method.parse().map_err(Error::Parse)?;
    let centers = doc
        .centers
        .iter()
        .map(|c| Point2::new(c[0], c[1]))
        .collect();
    Ok((
        Deployment::new(centers, doc.radius, method),
        VerifyReport {
            ok: doc.verify.ok,
            worst_gap: doc.verify.worst_gap,
            worst_sample: 0,
        },
    ))
}
