//! Independent oracles for the integration suites: brute-force enclosing
//! discs, winding numbers, the exhaustive contiguous-partition DP, exact
//! k-center by candidate-disc enumeration, and exhaustive set-cover
//! feasibility. None of these share code with the solver paths they check.

#![allow(dead_code)]

use guard2d::geom::{min_enclosing_disc, Point2, PolygonSet, Ring};
use guard2d::ilp::CoverModel;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const TOL: f64 = 1e-9;

pub fn unit_square() -> PolygonSet {
    PolygonSet::simple(vec![
        Point2::new(0.0, 0.0),
        Point2::new(1.0, 0.0),
        Point2::new(1.0, 1.0),
        Point2::new(0.0, 1.0),
    ])
    .unwrap()
}

// --- brute-force minimum enclosing disc --------------------------------------

fn covers_all(center: (f64, f64), r: f64, pts: &[Point2]) -> bool {
    let slack = r + 1e-12 * (1.0 + r);
    pts.iter().all(|p| {
        let dx = p.x - center.0;
        let dy = p.y - center.1;
        (dx * dx + dy * dy).sqrt() <= slack
    })
}

fn circumcenter(a: &Point2, b: &Point2, c: &Point2) -> Option<(f64, f64)> {
    let d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    if d.abs() < 1e-14 {
        return None;
    }
    let ux = ((a.x * a.x + a.y * a.y) * (b.y - c.y)
        + (b.x * b.x + b.y * b.y) * (c.y - a.y)
        + (c.x * c.x + c.y * c.y) * (a.y - b.y))
        / d;
    let uy = ((a.x * a.x + a.y * a.y) * (c.x - b.x)
        + (b.x * b.x + b.y * b.y) * (a.x - c.x)
        + (c.x * c.x + c.y * c.y) * (b.x - a.x))
        / d;
    Some((ux, uy))
}

/// Minimum enclosing radius by trying every pair as a diameter and every
/// triple as a circumcircle. O(n^4); for small n only.
pub fn brute_med_radius(pts: &[Point2]) -> f64 {
    assert!(!pts.is_empty());
    if pts.len() == 1 {
        return 0.0;
    }
    let mut best = f64::INFINITY;
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let c = ((pts[i].x + pts[j].x) / 2.0, (pts[i].y + pts[j].y) / 2.0);
            let r = pts[i].dist(&pts[j]) / 2.0;
            if r < best && covers_all(c, r, pts) {
                best = r;
            }
            for l in (j + 1)..pts.len() {
                if let Some(c) = circumcenter(&pts[i], &pts[j], &pts[l]) {
                    let r = ((pts[i].x - c.0).powi(2) + (pts[i].y - c.1).powi(2)).sqrt();
                    if r < best && covers_all(c, r, pts) {
                        best = r;
                    }
                }
            }
        }
    }
    best
}

// --- winding number -----------------------------------------------------------

/// Signed winding of a ring around `p`, by summing direction angles. Close
/// to +-1 for interior points, close to 0 outside. Unreliable on the
/// boundary.
pub fn winding_number(p: &Point2, ring: &Ring) -> f64 {
    let verts = ring.vertices();
    let n = verts.len();
    let mut total = 0.0;
    for i in 0..n {
        let a = &verts[i];
        let b = &verts[(i + 1) % n];
        let a1 = (a.y - p.y).atan2(a.x - p.x);
        let a2 = (b.y - p.y).atan2(b.x - p.x);
        let mut d = a2 - a1;
        while d > std::f64::consts::PI {
            d -= std::f64::consts::TAU;
        }
        while d < -std::f64::consts::PI {
            d += std::f64::consts::TAU;
        }
        total += d;
    }
    total / std::f64::consts::TAU
}

/// Even-odd containment from winding parity across all rings: inside the
/// region iff the total winding over outer and hole rings is odd.
pub fn winding_inside(p: &Point2, poly: &PolygonSet) -> bool {
    let mut crossings = 0i64;
    for ring in poly.rings() {
        crossings += winding_number(p, ring).round() as i64;
    }
    crossings % 2 != 0
}

// --- contiguous-partition DP oracle -------------------------------------------

/// For each start position, the longest circular run whose minimum
/// enclosing disc has radius at most `r` (closed, tolerance [`TOL`]).
/// Recomputed from scratch per run; feasibility is monotone in run length.
pub fn max_run_table(points: &[Point2], r: f64, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let n = points.len();
    (0..n)
        .map(|s| {
            let mut len = 1usize;
            while len < n {
                let run: Vec<Point2> = (0..=len).map(|t| points[(s + t) % n]).collect();
                let med = min_enclosing_disc(&run, rng).unwrap();
                if med.radius <= r + TOL {
                    len += 1;
                } else {
                    break;
                }
            }
            len
        })
        .collect()
}

/// Exhaustive minimum number of discs of radius `r` covering the circular
/// sequence, each disc holding one contiguous run: a line DP over all split
/// points, minimized over every rotation.
pub fn dp_min_discs(points: &[Point2], r: f64, rng: &mut ChaCha8Rng) -> usize {
    let n = points.len();
    let max_run = max_run_table(points, r, rng);
    let mut best = usize::MAX;
    for s in 0..n {
        // d[i] = min runs covering the first i samples of the rotation.
        let mut d = vec![usize::MAX; n + 1];
        d[0] = 0;
        for i in 1..=n {
            for j in 0..i {
                if d[j] != usize::MAX && i - j <= max_run[(s + j) % n] {
                    d[i] = d[i].min(d[j] + 1);
                }
            }
        }
        best = best.min(d[n]);
    }
    best
}

// --- exact k-center oracle ------------------------------------------------------

/// Exact continuous k-center radius for at most 64 points: every optimal
/// cluster disc is the enclosing disc of its points, hence determined by a
/// pair or triple; enumerate those candidate discs and decide coverage by
/// exhaustive search over maximal coverage masks.
pub fn brute_kcenter_radius(pts: &[Point2], k: usize) -> f64 {
    assert!(pts.len() <= 64 && !pts.is_empty() && k >= 1);
    let n = pts.len();

    struct Cand {
        r: f64,
        mask: u64,
    }
    let mut cands: Vec<Cand> = Vec::new();
    let mut push = |c: (f64, f64), r: f64| {
        let mut mask = 0u64;
        let slack = r + TOL;
        for (i, p) in pts.iter().enumerate() {
            let dx = p.x - c.0;
            let dy = p.y - c.1;
            if (dx * dx + dy * dy).sqrt() <= slack {
                mask |= 1 << i;
            }
        }
        cands.push(Cand { r, mask });
    };
    for p in pts {
        push((p.x, p.y), 0.0);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let c = ((pts[i].x + pts[j].x) / 2.0, (pts[i].y + pts[j].y) / 2.0);
            push(c, pts[i].dist(&pts[j]) / 2.0);
            for l in (j + 1)..n {
                if let Some(c) = circumcenter(&pts[i], &pts[j], &pts[l]) {
                    let r = ((pts[i].x - c.0).powi(2) + (pts[i].y - c.1).powi(2)).sqrt();
                    push(c, r);
                }
            }
        }
    }
    cands.sort_by(|a, b| a.r.partial_cmp(&b.r).unwrap());

    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let feasible = |r_cut: f64| -> bool {
        // Masks of discs no larger than the cut, reduced to maximal ones.
        let mut masks: Vec<u64> = cands
            .iter()
            .take_while(|c| c.r <= r_cut + TOL)
            .map(|c| c.mask)
            .collect();
        masks.sort_unstable();
        masks.dedup();
        let maximal: Vec<u64> = masks
            .iter()
            .filter(|&&m| !masks.iter().any(|&o| o != m && m & !o == 0))
            .copied()
            .collect();

        fn cover(uncovered: u64, left: usize, maximal: &[u64]) -> bool {
            if uncovered == 0 {
                return true;
            }
            if left == 0 {
                return false;
            }
            let first = uncovered.trailing_zeros() as usize;
            for &m in maximal {
                if m >> first & 1 == 1 && cover(uncovered & !m, left - 1, maximal) {
                    return true;
                }
            }
            false
        }
        cover(full, k, &maximal)
    };

    // The optimum is one of the candidate radii; find the smallest feasible.
    let mut radii: Vec<f64> = cands.iter().map(|c| c.r).collect();
    radii.dedup_by(|a, b| (*a - *b).abs() <= TOL);
    let mut lo = 0usize;
    let mut hi = radii.len() - 1;
    debug_assert!(feasible(radii[hi]));
    if feasible(radii[0]) {
        return radii[0];
    }
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if feasible(radii[mid]) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    radii[hi]
}

// --- exhaustive set-cover feasibility -------------------------------------------

/// Ground-truth decision for small cover models: try every candidate subset
/// of size at most `k` via bitmask enumeration.
pub fn exhaustive_cover_feasible(model: &CoverModel) -> bool {
    let n_cand = model.candidates.len();
    let n_samp = model.coverage.len();
    assert!(n_cand <= 20 && n_samp <= 32);
    let mut sample_masks = vec![0u32; n_cand];
    for (s, cov) in model.coverage.iter().enumerate() {
        for &c in cov {
            sample_masks[c] |= 1 << s;
        }
    }
    let full: u32 = if n_samp == 32 {
        u32::MAX
    } else {
        (1 << n_samp) - 1
    };
    for subset in 0u32..(1 << n_cand) {
        if subset.count_ones() as usize > model.k {
            continue;
        }
        let mut covered = 0u32;
        for (c, mask) in sample_masks.iter().enumerate() {
            if subset >> c & 1 == 1 {
                covered |= mask;
            }
        }
        if covered == full {
            return true;
        }
    }
    false
}

// --- random helpers ---------------------------------------------------------------

/// Random points in a box, sorted into circular order around their centroid.
pub fn random_circular_points(rng: &mut ChaCha8Rng, n: usize, scale: f64) -> Vec<Point2> {
    let mut pts: Vec<Point2> = (0..n)
        .map(|_| Point2::new(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale)))
        .collect();
    let cx = pts.iter().map(|p| p.x).sum::<f64>() / n as f64;
    let cy = pts.iter().map(|p| p.y).sum::<f64>() / n as f64;
    pts.sort_by(|a, b| {
        let aa = (a.y - cy).atan2(a.x - cx);
        let bb = (b.y - cy).atan2(b.x - cx);
        aa.partial_cmp(&bb).unwrap()
    });
    pts
}
