//! Discretization of guarding problems: perimeter chains, region grids, and
//! candidate-center grids.
//!
//! Perimeter sampling splits every ring independently into
//! `ceil(ring_length / (2 * epsilon))` arcs of equal length and places one
//! sample at each arc's midpoint, measured by arc length from the ring's
//! first vertex. Region sampling lays an `epsilon` grid over the bounding
//! box (expanded symmetrically to whole cells) and keeps the centers of
//! cells that meet the polygon.

use crate::error::{Error, Result};
use crate::geom::{cell_intersects_polygon, Point2, PolygonSet, Ring};
use serde::{Deserialize, Serialize};
use std::ops::Range;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SampleKind {
    Perimeter,
    Region,
}

/// A finite stand-in for the critical set: the ordered sample points, the
/// per-ring circular chains (perimeter only), and the granularity they were
/// built at.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleSet {
    pub points: Vec<Point2>,
    /// Index ranges into `points`, one per boundary ring, each circularly
    /// ordered along its ring. Empty for region samples.
    pub chains: Vec<Range<usize>>,
    pub epsilon: f64,
    pub kind: SampleKind,
}

impl SampleSet {
    /// Hand-built sample set without chain structure (tests, custom point
    /// clouds). Invariants tying points to a polygon are the caller's
    /// responsibility.
    pub fn from_points(points: Vec<Point2>, epsilon: f64) -> Self {
        Self {
            points,
            chains: Vec::new(),
            epsilon,
            kind: SampleKind::Region,
        }
    }

    /// Hand-built perimeter set with all points forming one circular chain.
    pub fn single_chain(points: Vec<Point2>, epsilon: f64) -> Self {
        let n = points.len();
        Self {
            points,
            chains: std::iter::once(0..n).collect(),
            epsilon,
            kind: SampleKind::Perimeter,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn chain_points(&self, chain: usize) -> &[Point2] {
        &self.points[self.chains[chain].clone()]
    }
}

/// An m x n grid of candidate cell centers covering the polygon's bounding
/// box. `origin` is the lower-left cell center.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub origin: Point2,
    pub cell_side: f64,
    pub rows: usize,
    pub cols: usize,
}

impl GridSpec {
    /// Smallest grid of `side`-sized cells whose footprint contains the
    /// bounding box `(lo, hi)`, with the excess split evenly on both sides.
    pub fn covering(lo: Point2, hi: Point2, side: f64) -> Result<Self> {
        if side <= 0.0 {
            return Err(Error::NonPositiveEpsilon(side));
        }
        let w = (hi.x - lo.x).max(0.0);
        let h = (hi.y - lo.y).max(0.0);
        let cols = ((w / side).ceil() as usize).max(1);
        let rows = ((h / side).ceil() as usize).max(1);
        let slack_x = cols as f64 * side - w;
        let slack_y = rows as f64 * side - h;
        let origin = Point2::new(
            lo.x - slack_x / 2.0 + side / 2.0,
            lo.y - slack_y / 2.0 + side / 2.0,
        );
        Ok(Self {
            origin,
            cell_side: side,
            rows,
            cols,
        })
    }

    pub fn center(&self, row: usize, col: usize) -> Point2 {
        Point2::new(
            self.origin.x + col as f64 * self.cell_side,
            self.origin.y + row as f64 * self.cell_side,
        )
    }
}

/// All cell centers of the grid in row-major order.
pub fn candidate_centers(grid: &GridSpec) -> Vec<Point2> {
    let mut out = Vec::with_capacity(grid.rows * grid.cols);
    for row in 0..grid.rows {
        for col in 0..grid.cols {
            out.push(grid.center(row, col));
        }
    }
    out
}

/// Point at arc length `t` along the ring, walking edges from the first
/// vertex. `t` must lie in [0, perimeter].
fn point_at_arc_length(ring: &Ring, t: f64) -> Point2 {
    let verts = ring.vertices();
    let n = verts.len();
    let mut remaining = t;
    for i in 0..n {
        let a = &verts[i];
        let b = &verts[(i + 1) % n];
        let len = a.dist(b);
        if remaining <= len {
            let f = remaining / len;
            return Point2::new(a.x + f * (b.x - a.x), a.y + f * (b.y - a.y));
        }
        remaining -= len;
    }
    verts[0]
}

/// Splits every ring into arcs of length at most `2 * epsilon` and samples
/// each arc's midpoint. Chains record which samples belong to which ring.
pub fn sample_perimeter(poly: &PolygonSet, epsilon: f64) -> Result<SampleSet> {
    if epsilon <= 0.0 {
        return Err(Error::NonPositiveEpsilon(epsilon));
    }
    let mut points = Vec::new();
    let mut chains = Vec::new();
    for ring in poly.rings() {
        let len = ring.perimeter();
        let n = ((len / (2.0 * epsilon)).ceil() as usize).max(1);
        let arc = len / n as f64;
        let start = points.len();
        for i in 0..n {
            points.push(point_at_arc_length(ring, (i as f64 + 0.5) * arc));
        }
        chains.push(start..points.len());
    }
    Ok(SampleSet {
        points,
        chains,
        epsilon,
        kind: SampleKind::Perimeter,
    })
}

/// Grid-samples the closed region: one sample at the center of every
/// `epsilon` cell that intersects the polygon.
pub fn sample_region(poly: &PolygonSet, epsilon: f64) -> Result<(SampleSet, GridSpec)> {
    if epsilon <= 0.0 {
        return Err(Error::NonPositiveEpsilon(epsilon));
    }
    let (lo, hi) = poly.bbox();
    let grid = GridSpec::covering(lo, hi, epsilon)?;
    let mut points = Vec::new();
    for row in 0..grid.rows {
        for col in 0..grid.cols {
            let c = grid.center(row, col);
            if cell_intersects_polygon(&c, epsilon, poly) {
                points.push(c);
            }
        }
    }
    debug_assert!(!points.is_empty());
    Ok((
        SampleSet {
            points,
            chains: Vec::new(),
            epsilon,
            kind: SampleKind::Region,
        },
        grid,
    ))
}
