//! Perimeter guarding under the rule that each disc covers one contiguous
//! circular run of boundary samples.
//!
//! The feasibility check works in two phases. Phase 1 slides a window along
//! the chain and records, for every start index, the largest number of
//! consecutive samples a disc of the candidate radius can enclose (the reach
//! table). Phase 2 tiles the chain greedily with maximal runs; only starts
//! inside the first reach window need to be tried, because no disc can hold
//! that whole window plus its successor. On top of the check, a binary
//! search on the radius drives the gap below epsilon.

use crate::deployment::{Deployment, Method};
use crate::error::{Error, Result};
use crate::geom::{med_in_place, min_enclosing_disc, Point2, PolygonSet, EPS};
use crate::sampling::{sample_perimeter, SampleKind, SampleSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Outcome of a contiguous-run feasibility probe.
#[derive(Debug, Clone)]
pub struct ContFeasibility {
    pub feasible: bool,
    /// Covering deployment at the probed radius, when feasible.
    pub witness: Option<Deployment>,
    /// One `(start, len)` per disc: the contiguous sample run it covers.
    /// Indices advance circularly within the chain containing `start`.
    pub runs: Option<Vec<(usize, usize)>>,
    pub discs_used: Option<usize>,
}

impl ContFeasibility {
    fn no() -> Self {
        Self {
            feasible: false,
            witness: None,
            runs: None,
            discs_used: None,
        }
    }
}

/// Scratch state for the many enclosing-disc calls a probe makes.
struct MedCtx {
    rng: ChaCha8Rng,
    scratch: Vec<Point2>,
}

impl MedCtx {
    fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            scratch: Vec::new(),
        }
    }

    /// MED of the circular window `points[i ..= j]` (indices mod n).
    fn window_disc(&mut self, points: &[Point2], i: usize, j: usize) -> crate::geom::Disc {
        let n = points.len();
        self.scratch.clear();
        let mut t = i;
        loop {
            self.scratch.push(points[t % n]);
            if t == j {
                break;
            }
            t += 1;
        }
        med_in_place(&mut self.scratch, &mut self.rng)
    }
}

/// Phase 1: for each start `i`, the maximum number of consecutive samples a
/// disc of radius `r` can enclose. The window end only moves forward, so the
/// enclosing-disc subroutine runs at most 2N times.
fn reach_table(points: &[Point2], r: f64, ctx: &mut MedCtx) -> Vec<usize> {
    let n = points.len();
    let mut m = vec![1usize; n];
    let mut end = 0usize;
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        if end < i {
            end = i;
        }
        while end - i + 1 < n {
            let disc = ctx.window_disc(points, i, end + 1);
            if disc.radius <= r + EPS {
                end += 1;
            } else {
                break;
            }
        }
        m[i] = end - i + 1;
    }
    m
}

/// Phase 2 runs from a fixed start: maximal jumps until the chain is fully
/// tiled. The final run is truncated so assignments do not overlap the start.
fn runs_from(m: &[usize], start: usize) -> Vec<(usize, usize)> {
    let n = m.len();
    let mut runs = Vec::new();
    let mut j = start;
    while j - start < n {
        let reach = m[j % n];
        let len = reach.min(n - (j - start));
        runs.push((j % n, len));
        j += reach;
    }
    runs
}

/// Minimum disc count over the permissible start set `{0 ..= M[0]}`.
fn min_discs_on_points(points: &[Point2], r: f64, ctx: &mut MedCtx) -> (usize, usize, Vec<usize>) {
    let n = points.len();
    let m = reach_table(points, r, ctx);
    let max_start = m[0].min(n - 1);
    let mut best = usize::MAX;
    let mut best_start = 0;
    for s in 0..=max_start {
        let mut j = s;
        let mut used = 0usize;
        while j - s < n {
            j += m[j % n];
            used += 1;
        }
        if used < best {
            best = used;
            best_start = s;
        }
    }
    (best, best_start, m)
}

fn witness_centers(points: &[Point2], runs: &[(usize, usize)], ctx: &mut MedCtx) -> Vec<Point2> {
    runs.iter()
        .map(|&(s, len)| ctx.window_disc(points, s, s + len - 1).center)
        .collect()
}

fn check_args(samples: &SampleSet, k: usize, r: f64) -> Result<()> {
    if samples.kind != SampleKind::Perimeter || samples.chains.is_empty() {
        return Err(Error::PerimeterSamplesRequired);
    }
    if k == 0 {
        return Err(Error::ZeroSensors);
    }
    if r < 0.0 {
        return Err(Error::NegativeRadius(r));
    }
    Ok(())
}

/// Can `k` discs of radius `r` cover a single chain, each covering one
/// contiguous circular run?
pub fn feasible(samples: &SampleSet, k: usize, r: f64, seed: u64) -> Result<ContFeasibility> {
    check_args(samples, k, r)?;
    if samples.chains.len() != 1 {
        return Err(Error::SingleChainRequired(samples.chains.len()));
    }
    let points = samples.chain_points(0);
    let n = points.len();
    let mut ctx = MedCtx::new(seed);

    // One disc around everything beats any tiling.
    let whole = min_enclosing_disc(points, &mut ctx.rng)?;
    if whole.radius <= r + EPS {
        return Ok(ContFeasibility {
            feasible: true,
            witness: Some(Deployment::new(vec![whole.center], r, Method::Cont)),
            runs: Some(vec![(0, n)]),
            discs_used: Some(1),
        });
    }

    let m = reach_table(points, r, &mut ctx);
    let max_start = m[0].min(n - 1);
    for s in 0..=max_start {
        let mut j = s;
        let mut used = 0usize;
        while used < k {
            j += m[j % n];
            used += 1;
            if j - s >= n {
                let runs = runs_from(&m, s);
                debug_assert_eq!(runs.len(), used);
                let centers = witness_centers(points, &runs, &mut ctx);
                return Ok(ContFeasibility {
                    feasible: true,
                    witness: Some(Deployment::new(centers, r, Method::Cont)),
                    runs: Some(runs),
                    discs_used: Some(used),
                });
            }
        }
    }
    Ok(ContFeasibility::no())
}

/// Smallest number of discs of radius `r` that tiles the single chain.
pub fn min_discs_for_chain(samples: &SampleSet, r: f64, seed: u64) -> Result<usize> {
    check_args(samples, 1, r)?;
    if samples.chains.len() != 1 {
        return Err(Error::SingleChainRequired(samples.chains.len()));
    }
    let mut ctx = MedCtx::new(seed);
    let (count, _, _) = min_discs_on_points(samples.chain_points(0), r, &mut ctx);
    Ok(count)
}

/// Multi-chain feasibility: chains are independent, so `k` suffices exactly
/// when the per-chain minimum disc counts sum to at most `k`.
pub fn feasible_multi(samples: &SampleSet, k: usize, r: f64, seed: u64) -> Result<ContFeasibility> {
    check_args(samples, k, r)?;
    let mut ctx = MedCtx::new(seed);
    let mut total = 0usize;
    let mut all_runs = Vec::new();
    let mut centers = Vec::new();
    for chain in &samples.chains {
        let points = &samples.points[chain.clone()];
        let (count, start, m) = min_discs_on_points(points, r, &mut ctx);
        total += count;
        if total > k {
            return Ok(ContFeasibility::no());
        }
        let runs = runs_from(&m, start);
        centers.extend(witness_centers(points, &runs, &mut ctx));
        all_runs.extend(runs.into_iter().map(|(s, len)| (chain.start + s, len)));
    }
    Ok(ContFeasibility {
        feasible: true,
        witness: Some(Deployment::new(centers, r, Method::Cont)),
        runs: Some(all_runs),
        discs_used: Some(total),
    })
}

/// Binary-search driver over precomputed samples. `r_hi` must be an upper
/// bound to start from; if it probes infeasible the search escalates to the
/// per-chain enclosing-disc radius, which always suffices when `k` is at
/// least the chain count. Stops once the bracket width drops below
/// `epsilon`; iterations are capped to stay finite under floating-point
/// stagnation.
pub fn solve_on_samples(
    samples: &SampleSet,
    k: usize,
    r_hi_init: f64,
    epsilon: f64,
    seed: u64,
) -> Result<Deployment> {
    if epsilon <= 0.0 {
        return Err(Error::NonPositiveEpsilon(epsilon));
    }
    if samples.kind != SampleKind::Perimeter || samples.chains.is_empty() {
        return Err(Error::PerimeterSamplesRequired);
    }
    if k == 0 {
        return Err(Error::ZeroSensors);
    }
    let chains = samples.chains.len();
    if k < chains {
        return Err(Error::TooFewSensorsForRings { k, rings: chains });
    }

    let mut r_hi = r_hi_init.max(0.0);
    let mut best = feasible_multi(samples, k, r_hi, seed)?;
    if !best.feasible {
        // One disc per chain at its enclosing radius always works.
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut guaranteed = 0.0f64;
        for chain in &samples.chains {
            let disc = min_enclosing_disc(&samples.points[chain.clone()], &mut rng)?;
            guaranteed = guaranteed.max(disc.radius);
        }
        r_hi = guaranteed + EPS;
        best = feasible_multi(samples, k, r_hi, seed)?;
        debug_assert!(best.feasible);
    }

    let mut r_lo = 0.0f64;
    let max_iter = (((r_hi - r_lo) / epsilon).log2().ceil() as i64 + 2).clamp(1, 200);
    let mut iter = 0;
    while r_hi - r_lo > epsilon && iter < max_iter {
        let mid = 0.5 * (r_lo + r_hi);
        let probe = feasible_multi(samples, k, mid, seed)?;
        if probe.feasible {
            r_hi = mid;
            best = probe;
        } else {
            r_lo = mid;
        }
        iter += 1;
    }

    let mut deployment = best.witness.expect("feasible result carries a witness");
    deployment.radius = r_hi;
    Ok(deployment)
}

/// Samples the perimeter at granularity `epsilon` and binary-searches the
/// radius on `[0, len(boundary) / (2k)]` down to a bracket of width
/// `epsilon`. The returned radius is within `epsilon` of the optimum over
/// the samples and within `2 * epsilon` of the optimum over the boundary,
/// under the contiguous-run rule.
pub fn solve(poly: &PolygonSet, k: usize, epsilon: f64, seed: u64) -> Result<Deployment> {
    if k == 0 {
        return Err(Error::ZeroSensors);
    }
    let samples = sample_perimeter(poly, epsilon)?;
    let r_hi = poly.perimeter_length() / (2.0 * k as f64);
    solve_on_samples(&samples, k, r_hi, epsilon, seed)
}
