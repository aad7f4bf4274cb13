//! Farthest-first traversal: the classic 2-approximation for k-center,
//! applied to the sample set. O(nk), deterministic given the start index.

use crate::deployment::{Deployment, Method};
use crate::error::{Error, Result};
use crate::geom::PolygonSet;
use crate::sampling::{sample_perimeter, sample_region, SampleKind, SampleSet};

/// Picks `samples[start_index]` first, then repeatedly the sample farthest
/// from the chosen centers (ties to the lowest index), until `k` centers are
/// placed or the residual radius hits zero. The reported radius is the
/// max-min distance from samples to centers.
pub fn farthest_first(samples: &SampleSet, k: usize, start_index: usize) -> Result<Deployment> {
    if samples.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if k == 0 {
        return Err(Error::ZeroSensors);
    }
    let n = samples.len();
    if start_index >= n {
        return Err(Error::IndexOutOfRange(start_index, n));
    }

    let pts = &samples.points;
    let mut centers = vec![pts[start_index]];
    // Squared distance from each sample to its nearest chosen center; only
    // the newest center can improve it.
    let mut dist_sq: Vec<f64> = pts.iter().map(|p| p.dist_sq(&pts[start_index])).collect();

    while centers.len() < k {
        let mut far_idx = 0;
        let mut far_sq = -1.0f64;
        for (j, &d) in dist_sq.iter().enumerate() {
            if d > far_sq {
                far_sq = d;
                far_idx = j;
            }
        }
        if far_sq <= 0.0 {
            break;
        }
        let c = pts[far_idx];
        centers.push(c);
        for (j, d) in dist_sq.iter_mut().enumerate() {
            let nd = pts[j].dist_sq(&c);
            if nd < *d {
                *d = nd;
            }
        }
    }

    let radius = dist_sq.iter().fold(0.0f64, |acc, &d| acc.max(d)).sqrt();
    Ok(Deployment::new(centers, radius, Method::Gonzalez))
}

/// Samples the critical set at granularity `epsilon` and runs the traversal
/// from sample 0. The radius is at most twice the optimum over the samples,
/// hence within `2 * optimum + 2 * epsilon` of the continuous optimum.
pub fn solve(poly: &PolygonSet, k: usize, epsilon: f64, mode: SampleKind) -> Result<Deployment> {
    let samples = match mode {
        SampleKind::Perimeter => sample_perimeter(poly, epsilon)?,
        SampleKind::Region => sample_region(poly, epsilon)?.0,
    };
    farthest_first(&samples, k, 0)
}
