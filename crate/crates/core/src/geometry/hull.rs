use crate::error::{Error, Result};
use crate::model::{Embedding, Point, Size, SizedGraph};

use super::GEOMETRY_TOLERANCE;

/// Number of rays used to sample a hull outline (every 10 degrees).
pub const RAY_COUNT: usize = 36;

/// Convex polygon in counter-clockwise order with collinear vertices removed.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexHull {
    pub vertices: Vec<Point>,
    /// Area centroid, or the vertex mean when the area is zero.
    pub centroid: Point,
    pub area: f64,
}

impl ConvexHull {
    /// Andrew's monotone chain.
    pub fn from_points(points: &[Point]) -> Self {
        let mut pts = points.to_vec();
        pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
        pts.dedup();
        if pts.len() <= 2 {
            return Self::with_vertices(pts);
        }
        let mut lower: Vec<Point> = Vec::with_capacity(pts.len());
        for &p in &pts {
            while lower.len() >= 2 && turn(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0
            {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<Point> = Vec::with_capacity(pts.len());
        for &p in pts.iter().rev() {
            while upper.len() >= 2 && turn(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0
            {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        Self::with_vertices(lower)
    }

    fn with_vertices(vertices: Vec<Point>) -> Self {
        let (area, centroid) = area_centroid(&vertices);
        Self {
            vertices,
            centroid,
            area,
        }
    }

    /// Point-in-polygon test, boundary included within `tol`.
    pub fn contains(&self, p: Point, tol: f64) -> bool {
        let k = self.vertices.len();
        if k < 3 {
            return self.distance_to_boundary(p) <= tol;
        }
        (0..k).all(|i| {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % k];
            let edge = b - a;
            edge.cross(p - a) >= -tol * edge.norm()
        })
    }

    pub fn distance_to_boundary(&self, p: Point) -> f64 {
        let k = self.vertices.len();
        match k {
            0 => f64::INFINITY,
            1 => p.distance(self.vertices[0]),
            _ => (0..k)
                .map(|i| segment_distance(p, self.vertices[i], self.vertices[(i + 1) % k]))
                .fold(f64::INFINITY, f64::min),
        }
    }
}

fn turn(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

fn segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_squared();
    if len2 == 0.0 {
        return p.distance(a);
    }
    let t = ((p - a).dot(ab) / len2).clamp(0.0, 1.0);
    p.distance(a + ab * t)
}

fn area_centroid(vertices: &[Point]) -> (f64, Point) {
    let k = vertices.len();
    if k == 0 {
        return (0.0, Point::default());
    }
    let mean = vertices.iter().fold(Point::default(), |acc, &p| acc + p) * (1.0 / k as f64);
    if k < 3 {
        return (0.0, mean);
    }
    // Shoelace relative to the first vertex to limit cancellation.
    let origin = vertices[0];
    let mut twice_area = 0.0;
    let mut cx = 0.0;
    let mut cy = 0.0;
    for i in 0..k {
        let p = vertices[i] - origin;
        let q = vertices[(i + 1) % k] - origin;
        let cross = p.cross(q);
        twice_area += cross;
        cx += (p.x + q.x) * cross;
        cy += (p.y + q.y) * cross;
    }
    let area = twice_area / 2.0;
    if area.abs() <= f64::EPSILON * extent(vertices).powi(2) {
        return (0.0, mean);
    }
    let centroid = origin + Point::new(cx / (3.0 * twice_area), cy / (3.0 * twice_area));
    (area.abs(), centroid)
}

fn extent(vertices: &[Point]) -> f64 {
    vertices
        .iter()
        .map(|p| p.x.abs().max(p.y.abs()))
        .fold(1.0, f64::max)
}

pub fn corners(positions: &[Point], sizes: &[Size]) -> Vec<Point> {
    let mut out = Vec::with_capacity(positions.len() * 4);
    for (p, s) in positions.iter().zip(sizes) {
        let (hw, hh) = (s.w / 2.0, s.h / 2.0);
        out.push(Point::new(p.x - hw, p.y - hh));
        out.push(Point::new(p.x + hw, p.y - hh));
        out.push(Point::new(p.x + hw, p.y + hh));
        out.push(Point::new(p.x - hw, p.y + hh));
    }
    out
}

/// Hull of the four corners of every node rectangle.
pub fn convex_hull(graph: &SizedGraph, embedding: &Embedding) -> Result<ConvexHull> {
    if graph.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(ConvexHull::from_points(&corners(
        embedding.positions(),
        &graph.sizes(),
    )))
}

/// Distance from the centroid to the hull boundary along rays at 0, 10, ...,
/// 350 degrees.
pub fn hull_ray_lengths(hull: &ConvexHull) -> Result<[f64; RAY_COUNT]> {
    if hull.area <= 0.0 || hull.vertices.len() < 3 {
        return Err(Error::DegenerateHull);
    }
    let mut out = [0.0; RAY_COUNT];
    for (step, slot) in out.iter_mut().enumerate() {
        *slot = ray_length(hull, (step as f64 * 10.0).to_radians()).ok_or(Error::DegenerateHull)?;
    }
    Ok(out)
}

/// Distance from the centroid to where the ray at angle `theta` (radians)
/// leaves the hull.
pub fn ray_length(hull: &ConvexHull, theta: f64) -> Option<f64> {
    let c = hull.centroid;
    let k = hull.vertices.len();
    let dir = Point::new(theta.cos(), theta.sin());
    let mut best = 0.0_f64;
    for i in 0..k {
        let a = hull.vertices[i];
        let edge = hull.vertices[(i + 1) % k] - a;
        let denom = dir.cross(edge);
        if denom.abs() < 1e-300 {
            continue;
        }
        let ac = a - c;
        let t = ac.cross(edge) / denom;
        let s = ac.cross(dir) / denom;
        if t > 0.0 && (-GEOMETRY_TOLERANCE..=1.0 + GEOMETRY_TOLERANCE).contains(&s) {
            best = best.max(t);
        }
    }
    (best > 0.0).then_some(best)
}
