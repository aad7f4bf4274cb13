//! One-off oracle computations whose outputs are frozen into the acceptance
//! suite. Run manually:
//!
//!     cargo test -p guard2d --test pin_oracles --release -- --ignored --nocapture

mod common;

use guard2d::geom::Point2;
use guard2d::instances::plus_polygon;
use guard2d::sampling::{candidate_centers, sample_perimeter, sample_region, GridSpec};

/// Exhaustive k-cover decision over explicit candidate discs: branch on the
/// lowest uncovered sample, over the maximal coverage sets only.
fn coverable(cover: &[Vec<u64>], words: usize, n_samples: usize, k: usize) -> bool {
    let maximal: Vec<&Vec<u64>> = cover
        .iter()
        .filter(|m| {
            !cover
                .iter()
                .any(|o| o != *m && m.iter().zip(o).all(|(a, b)| a & !b == 0))
        })
        .collect();
    let mut uncovered = vec![u64::MAX; words];
    if !n_samples.is_multiple_of(64) {
        uncovered[words - 1] = (1u64 << (n_samples % 64)) - 1;
    }
    fn rec(uncovered: &mut [u64], left: usize, maximal: &[&Vec<u64>]) -> bool {
        let first = match uncovered
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
        {
            Some(f) => f,
            None => return true,
        };
        if left == 0 {
            return false;
        }
        for m in maximal {
            if m[first / 64] >> (first % 64) & 1 == 0 {
                continue;
            }
            let saved: Vec<u64> = uncovered.to_vec();
            for (u, c) in uncovered.iter_mut().zip(m.iter()) {
                *u &= !c;
            }
            if rec(uncovered, left - 1, maximal) {
                return true;
            }
            uncovered.copy_from_slice(&saved);
        }
        false
    }
    rec(&mut uncovered, k, &maximal)
}

fn min_radius_over_grid(samples: &[Point2], candidates: &[Point2], k: usize) -> f64 {
    // Candidate radii: all candidate-sample distances.
    let mut radii: Vec<f64> = candidates
        .iter()
        .flat_map(|c| samples.iter().map(move |s| c.dist(s)))
        .collect();
    radii.sort_by(|a, b| a.partial_cmp(b).unwrap());
    radii.dedup_by(|a, b| (*a - *b).abs() <= 1e-12);

    let words = samples.len().div_ceil(64);
    let feasible = |r: f64| {
        let slack = r + 1e-9;
        let cover: Vec<Vec<u64>> = candidates
            .iter()
            .map(|c| {
                let mut m = vec![0u64; words];
                for (i, s) in samples.iter().enumerate() {
                    if c.dist(s) <= slack {
                        m[i / 64] |= 1 << (i % 64);
                    }
                }
                m
            })
            .collect();
        coverable(&cover, words, samples.len(), k)
    };

    let mut lo = 0usize;
    let mut hi = radii.len() - 1;
    assert!(feasible(radii[hi]));
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

#[test]
#[ignore]
fn pin_plus_shape_k5() {
    let plus = plus_polygon(1.0, 1.0).unwrap();
    let (lo, hi) = plus.bbox();
    let coarse = 0.1;
    let grid = GridSpec::covering(lo, hi, coarse).unwrap();
    let cands = candidate_centers(&grid);
    println!("candidates: {}", cands.len());

    let peri = sample_perimeter(&plus, 0.05).unwrap();
    println!("perimeter samples: {}", peri.len());
    let t = std::time::Instant::now();
    let r_peri = min_radius_over_grid(&peri.points, &cands, 5);
    println!(
        "plus perimeter k=5 oracle over {:.}x{} grid: {:.9}  ({:?})",
        grid.rows,
        grid.cols,
        r_peri,
        t.elapsed()
    );

    let (reg, _) = sample_region(&plus, 0.1).unwrap();
    println!("region samples: {}", reg.len());
    let t = std::time::Instant::now();
    let r_reg = min_radius_over_grid(&reg.points, &cands, 5);
    println!("plus region k=5 oracle: {:.9}  ({:?})", r_reg, t.elapsed());
    println!("sqrt(2)/2 = {:.9}", std::f64::consts::SQRT_2 / 2.0);
}

#[test]
#[ignore]
fn pin_square_perimeter_k4() {
    let sq = common::unit_square();
    let (lo, hi) = sq.bbox();
    let grid = GridSpec::covering(lo, hi, 0.05).unwrap();
    let cands = candidate_centers(&grid);
    let peri = sample_perimeter(&sq, 0.05).unwrap();
    let t = std::time::Instant::now();
    let r = min_radius_over_grid(&peri.points, &cands, 4);
    println!(
        "square perimeter k=4 oracle over fine grid: {:.9}  ({:?})  [sqrt(2)/4 = {:.9}]",
        r,
        t.elapsed(),
        std::f64::consts::SQRT_2 / 4.0
    );
}
