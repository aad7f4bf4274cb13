//! Planar geometry primitives: points, rings, polygons with holes, containment
//! tests, and the randomized minimum enclosing disc.
//!
//! All predicates treat regions and discs as closed sets: a point on a
//! boundary counts as inside, a point exactly at distance `r` counts as
//! covered. Comparisons use the absolute tolerance [`EPS`] in workspace
//! units; fixture coordinates are O(1)-O(100) so this sits well below
//! feature scale.

use crate::error::{Error, Result};
use rand::Rng;
use serde::{Deserialize, Serialize};

/// Absolute tolerance for geometric comparisons, in workspace units.
pub const EPS: f64 = 1e-9;

/// A planar point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dist(&self, other: &Point2) -> f64 {
        self.dist_sq(other).sqrt()
    }

    pub fn dist_sq(&self, other: &Point2) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }
}

/// A closed disc: center plus non-negative radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Disc {
    pub center: Point2,
    pub radius: f64,
}

impl Disc {
    pub fn new(center: Point2, radius: f64) -> Self {
        Self { center, radius }
    }

    /// Closed containment with absolute slack [`EPS`].
    pub fn contains(&self, p: &Point2) -> bool {
        self.center.dist(p) <= self.radius + EPS
    }
}

/// Signed twice-area of the triangle (a, b, c). Positive when c lies to the
/// left of the directed line a->b.
fn cross(a: &Point2, b: &Point2, c: &Point2) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

/// Distance from `p` to the closed segment (a, b).
pub fn dist_to_segment(p: &Point2, a: &Point2, b: &Point2) -> f64 {
    let ab = a.dist_sq(b);
    if ab <= EPS * EPS {
        return p.dist(a);
    }
    let t = ((p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y)) / ab;
    let t = t.clamp(0.0, 1.0);
    let proj = Point2::new(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y));
    p.dist(&proj)
}

fn on_segment(p: &Point2, a: &Point2, b: &Point2) -> bool {
    dist_to_segment(p, a, b) <= EPS
}

/// Closed segment intersection test (shared endpoints and collinear overlap
/// count as intersecting).
pub fn segments_intersect(p1: &Point2, p2: &Point2, q1: &Point2, q2: &Point2) -> bool {
    // Cross products scale with coordinate magnitude squared; widen the
    // degeneracy band accordingly so near-collinear cases fall through to
    // the distance-based checks.
    let scale = [p1, p2, q1, q2]
        .iter()
        .map(|p| p.x.abs().max(p.y.abs()))
        .fold(1.0f64, f64::max);
    let tol = EPS * scale;

    let d1 = cross(q1, q2, p1);
    let d2 = cross(q1, q2, p2);
    let d3 = cross(p1, p2, q1);
    let d4 = cross(p1, p2, q2);

    if ((d1 > tol && d2 < -tol) || (d1 < -tol && d2 > tol))
        && ((d3 > tol && d4 < -tol) || (d3 < -tol && d4 > tol))
    {
        return true;
    }
    // Degenerate or touching configurations.
    on_segment(p1, q1, q2)
        || on_segment(p2, q1, q2)
        || on_segment(q1, p1, p2)
        || on_segment(q2, p1, p2)
}

/// A simple closed polygonal chain. The closure edge (last -> first) is
/// implicit; the first vertex is not repeated at the end.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Ring {
    vertices: Vec<Point2>,
}

impl Ring {
    /// Validates and builds a ring: at least 3 vertices, all finite,
    /// consecutive vertices distinct, implicit closure, no self-intersection.
    pub fn new(vertices: Vec<Point2>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidRing(format!(
                "need at least 3 vertices, got {n}"
            )));
        }
        for (i, v) in vertices.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::InvalidRing(format!("vertex {i} is not finite")));
            }
        }
        for i in 0..n {
            let j = (i + 1) % n;
            if vertices[i].dist(&vertices[j]) <= EPS {
                return Err(Error::InvalidRing(format!(
                    "consecutive vertices {i} and {j} coincide"
                )));
            }
        }
        // O(n^2) segment-pair simplicity test, fine at desk scale.
        for i in 0..n {
            let (a1, a2) = (&vertices[i], &vertices[(i + 1) % n]);
            for j in (i + 1)..n {
                let (b1, b2) = (&vertices[j], &vertices[(j + 1) % n]);
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    // Edges sharing a vertex may only touch at that vertex.
                    let shared = if j == i + 1 { a2 } else { a1 };
                    let (free_a, free_b) = if j == i + 1 { (a1, b2) } else { (a2, b1) };
                    if on_segment(free_a, b1, b2) && free_a.dist(shared) > EPS
                        || on_segment(free_b, a1, a2) && free_b.dist(shared) > EPS
                    {
                        return Err(Error::InvalidRing(format!(
                            "edges {i} and {j} overlap beyond their shared vertex"
                        )));
                    }
                } else if segments_intersect(a1, a2, b1, b2) {
                    return Err(Error::InvalidRing(format!("edges {i} and {j} intersect")));
                }
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Edges in order, including the closure edge.
    pub fn edges(&self) -> impl Iterator<Item = (&Point2, &Point2)> {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    pub fn perimeter(&self) -> f64 {
        self.edges().map(|(a, b)| a.dist(b)).sum()
    }

    /// Unsigned shoelace area.
    pub fn area(&self) -> f64 {
        let n = self.vertices.len();
        let mut acc = 0.0;
        for i in 0..n {
            let a = &self.vertices[i];
            let b = &self.vertices[(i + 1) % n];
            acc += a.x * b.y - b.x * a.y;
        }
        (acc / 2.0).abs()
    }

    pub fn contains_on_boundary(&self, p: &Point2) -> bool {
        self.edges().any(|(a, b)| on_segment(p, a, b))
    }

    /// Even-odd crossing test. Only meaningful for points not on the
    /// boundary; callers handle the boundary case first.
    fn contains_strict(&self, p: &Point2) -> bool {
        let mut inside = false;
        for (a, b) in self.edges() {
            if (a.y > p.y) != (b.y > p.y) {
                let x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
                if p.x < x_cross {
                    inside = !inside;
                }
            }
        }
        inside
    }

    fn bbox(&self) -> (Point2, Point2) {
        let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for v in &self.vertices {
            lo.x = lo.x.min(v.x);
            lo.y = lo.y.min(v.y);
            hi.x = hi.x.max(v.x);
            hi.y = hi.y.max(v.y);
        }
        (lo, hi)
    }
}

impl<'de> Deserialize<'de> for Ring {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        #[derive(Deserialize)]
        struct Raw {
            vertices: Vec<Point2>,
        }
        let raw = Raw::deserialize(deserializer)?;
        Ring::new(raw.vertices).map_err(serde::de::Error::custom)
    }
}

/// One workspace component: an outer ring plus zero or more hole rings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Component {
    pub outer: Ring,
    pub holes: Vec<Ring>,
}

/// The workspace geometry: one or more components, each an outer ring with
/// holes. The guarded region of a component is the closed set between its
/// outer ring and its holes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolygonSet {
    components: Vec<Component>,
}

impl PolygonSet {
    pub fn new(components: Vec<Component>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidPolygon("no components".into()));
        }
        for (ci, comp) in components.iter().enumerate() {
            for (hi, hole) in comp.holes.iter().enumerate() {
                for v in hole.vertices() {
                    if comp.outer.contains_on_boundary(v) || !comp.outer.contains_strict(v) {
                        return Err(Error::InvalidPolygon(format!(
                            "hole {hi} of component {ci} is not strictly inside its outer ring"
                        )));
                    }
                }
                for (a1, a2) in hole.edges() {
                    for (b1, b2) in comp.outer.edges() {
                        if segments_intersect(a1, a2, b1, b2) {
                            return Err(Error::InvalidPolygon(format!(
                                "hole {hi} of component {ci} crosses the outer ring"
                            )));
                        }
                    }
                }
            }
            for hi in 0..comp.holes.len() {
                for hj in (hi + 1)..comp.holes.len() {
                    let (a, b) = (&comp.holes[hi], &comp.holes[hj]);
                    let crossing = a.edges().any(|(a1, a2)| {
                        b.edges().any(|(b1, b2)| segments_intersect(a1, a2, b1, b2))
                    });
                    let nested = a.vertices().iter().any(|v| b.contains_strict(v))
                        || b.vertices().iter().any(|v| a.contains_strict(v));
                    if crossing || nested {
                        return Err(Error::InvalidPolygon(format!(
                            "holes {hi} and {hj} of component {ci} are not disjoint"
                        )));
                    }
                }
            }
        }
        let ps = Self { components };
        if ps.perimeter_length() <= EPS {
            return Err(Error::InvalidPolygon("zero perimeter".into()));
        }
        Ok(ps)
    }

    /// Single simple polygon without holes.
    pub fn simple(vertices: Vec<Point2>) -> Result<Self> {
        Self::new(vec![Component {
            outer: Ring::new(vertices)?,
            holes: Vec::new(),
        }])
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// All rings, outers first within each component, then its holes.
    pub fn rings(&self) -> impl Iterator<Item = &Ring> {
        self.components
            .iter()
            .flat_map(|c| std::iter::once(&c.outer).chain(c.holes.iter()))
    }

    /// Sum of edge lengths over all rings, outer and holes.
    pub fn perimeter_length(&self) -> f64 {
        self.rings().map(Ring::perimeter).sum()
    }

    /// Shoelace area of outers minus holes.
    pub fn area(&self) -> f64 {
        self.components
            .iter()
            .map(|c| c.outer.area() - c.holes.iter().map(Ring::area).sum::<f64>())
            .sum()
    }

    /// Axis-aligned bounding box over all outer rings.
    pub fn bbox(&self) -> (Point2, Point2) {
        let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for c in &self.components {
            let (l, h) = c.outer.bbox();
            lo.x = lo.x.min(l.x);
            lo.y = lo.y.min(l.y);
            hi.x = hi.x.max(h.x);
            hi.y = hi.y.max(h.y);
        }
        (lo, hi)
    }
}

impl<'de> Deserialize<'de> for PolygonSet {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        #[derive(Deserialize)]
        struct Raw {
            components: Vec<Component>,
        }
        let raw = Raw::deserialize(deserializer)?;
        PolygonSet::new(raw.components).map_err(serde::de::Error::custom)
    }
}

/// Closed-set point-in-polygon test: true iff `p` lies inside some
/// component's outer ring and not strictly inside any of that component's
/// holes. Boundary points count as inside.
pub fn point_in_polygon(p: &Point2, poly: &PolygonSet) -> bool {
    for comp in poly.components() {
        if comp.outer.contains_on_boundary(p)
            || comp.holes.iter().any(|h| h.contains_on_boundary(p))
        {
            return true;
        }
        if comp.outer.contains_strict(p) && !comp.holes.iter().any(|h| h.contains_strict(p)) {
            return true;
        }
    }
    false
}

/// True iff the closed axis-aligned square of side `side` centered at
/// `cell_center` meets the closed region of `poly`: some cell corner or the
/// center lies in the polygon, some polygon vertex lies in the cell, or a
/// polygon edge crosses a cell edge.
pub fn cell_intersects_polygon(cell_center: &Point2, side: f64, poly: &PolygonSet) -> bool {
    let h = side / 2.0;
    let corners = [
        Point2::new(cell_center.x - h, cell_center.y - h),
        Point2::new(cell_center.x + h, cell_center.y - h),
        Point2::new(cell_center.x + h, cell_center.y + h),
        Point2::new(cell_center.x - h, cell_center.y + h),
    ];
    if point_in_polygon(cell_center, poly) || corners.iter().any(|c| point_in_polygon(c, poly)) {
        return true;
    }
    let in_cell = |p: &Point2| {
        (p.x - cell_center.x).abs() <= h + EPS && (p.y - cell_center.y).abs() <= h + EPS
    };
    for ring in poly.rings() {
        if ring.vertices().iter().any(in_cell) {
            return true;
        }
        for (a, b) in ring.edges() {
            for i in 0..4 {
                let (c1, c2) = (&corners[i], &corners[(i + 1) % 4]);
                if segments_intersect(a, b, c1, c2) {
                    return true;
                }
            }
        }
    }
    false
}

// --- minimum enclosing disc -------------------------------------------------

// Multiplicative slack used inside the incremental construction, so that a
// point sitting numerically on the boundary does not trigger a rebuild.
const MED_REL_EPS: f64 = 1.0 + 1e-12;

fn med_contains(d: &Disc, p: &Point2) -> bool {
    d.radius >= 0.0 && d.center.dist(p) <= d.radius * MED_REL_EPS + 1e-14
}

fn disc_from_diameter(a: &Point2, b: &Point2) -> Disc {
    let c = Point2::new((a.x + b.x) / 2.0, (a.y + b.y) / 2.0);
    Disc::new(c, c.dist(a).max(c.dist(b)))
}

/// Circumcircle of three points, or radius -1 when they are collinear.
/// Coordinates are relocated near the origin before solving, which keeps the
/// computation stable for far-from-origin inputs.
fn disc_from_circumcircle(a: &Point2, b: &Point2, c: &Point2) -> Disc {
    let ox = (a.x.min(b.x).min(c.x) + a.x.max(b.x).max(c.x)) / 2.0;
    let oy = (a.y.min(b.y).min(c.y) + a.y.max(b.y).max(c.y)) / 2.0;
    let (ax, ay) = (a.x - ox, a.y - oy);
    let (bx, by) = (b.x - ox, b.y - oy);
    let (cx, cy) = (c.x - ox, c.y - oy);
    let d = (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by)) * 2.0;
    if d == 0.0 {
        return Disc::new(Point2::new(0.0, 0.0), -1.0);
    }
    let x = ((ax * ax + ay * ay) * (by - cy)
        + (bx * bx + by * by) * (cy - ay)
        + (cx * cx + cy * cy) * (ay - by))
        / d;
    let y = ((ax * ax + ay * ay) * (cx - bx)
        + (bx * bx + by * by) * (ax - cx)
        + (cx * cx + cy * cy) * (bx - ax))
        / d;
    let p = Point2::new(ox + x, oy + y);
    let r = p.dist(a).max(p.dist(b)).max(p.dist(c));
    Disc::new(p, r)
}

fn med_two_boundary(points: &[Point2], p: &Point2, q: &Point2) -> Disc {
    let circ = disc_from_diameter(p, q);
    let mut left = Disc::new(Point2::new(0.0, 0.0), -1.0);
    let mut right = Disc::new(Point2::new(0.0, 0.0), -1.0);

    let (px, py) = (q.x - p.x, q.y - p.y);
    for r in points {
        if med_contains(&circ, r) {
            continue;
        }
        let side = px * (r.y - p.y) - py * (r.x - p.x);
        let c = disc_from_circumcircle(p, q, r);
        if c.radius < 0.0 {
            continue;
        }
        let c_side = px * (c.center.y - p.y) - py * (c.center.x - p.x);
        if side > 0.0
            && (left.radius < 0.0
                || c_side > px * (left.center.y - p.y) - py * (left.center.x - p.x))
        {
            left = c;
        } else if side < 0.0
            && (right.radius < 0.0
                || c_side < px * (right.center.y - p.y) - py * (right.center.x - p.x))
        {
            right = c;
        }
    }

    if left.radius < 0.0 && right.radius < 0.0 {
        circ
    } else if left.radius < 0.0 {
        right
    } else if right.radius < 0.0 || left.radius <= right.radius {
        left
    } else {
        right
    }
}

fn med_one_boundary(points: &[Point2], p: &Point2) -> Disc {
    let mut d = Disc::new(*p, 0.0);
    for (i, q) in points.iter().enumerate() {
        if !med_contains(&d, q) {
            d = if d.radius == 0.0 {
                disc_from_diameter(p, q)
            } else {
                med_two_boundary(&points[..=i], p, q)
            };
        }
    }
    d
}

/// Minimum enclosing disc over a scratch slice that this function is free to
/// reorder. Randomized incremental construction, expected linear time.
pub(crate) fn med_in_place<R: Rng + ?Sized>(points: &mut [Point2], rng: &mut R) -> Disc {
    for i in (1..points.len()).rev() {
        points.swap(i, rng.gen_range(0..=i));
    }
    let mut d = Disc::new(Point2::new(0.0, 0.0), -1.0);
    for i in 0..points.len() {
        let p = points[i];
        if d.radius < 0.0 || !med_contains(&d, &p) {
            d = med_one_boundary(&points[..=i], &p);
        }
    }
    d
}

/// Smallest disc enclosing every input point. The disc is determined by at
/// most three boundary points; every input lies within `radius + EPS` of the
/// center. Shuffling is driven by the caller's RNG so results are
/// reproducible under a fixed seed.
pub fn min_enclosing_disc<R: Rng + ?Sized>(points: &[Point2], rng: &mut R) -> Result<Disc> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let mut scratch = points.to_vec();
    Ok(med_in_place(&mut scratch, rng))
}
