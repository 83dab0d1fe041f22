//! Computational geometry shared by the metrics and the algorithms.

mod bbox;
mod delaunay;
mod hull;
mod knn;
mod overlap;

pub use bbox::{bounding_box, bounds, BoundingBox};
pub use delaunay::{delaunay_edges, triangulate, Triangulation};
pub use hull::{
    convex_hull, corners as hull_corners, hull_ray_lengths, ray_length, ConvexHull, RAY_COUNT,
};
pub use knn::{knn_indices, knn_sets};
pub use overlap::{count_overlapping_pairs, count_overlaps, overlapping_pairs, overlaps};

use std::collections::HashSet;

use crate::model::{Point, Size};

/// Absolute tolerance used by geometric predicates.
pub const GEOMETRY_TOLERANCE: f64 = 1e-9;

/// Return positions where every center that coincides with an earlier one
/// (in dense order) is nudged by a small, index-dependent offset. Nodes at
/// unique positions are left untouched. Returns `None` when no centers
/// coincide.
pub fn separate_coincident(positions: &[Point], sizes: &[Size]) -> Option<Vec<Point>> {
    let n = positions.len();
    let mut seen = HashSet::with_capacity(n);
    let dupes: Vec<usize> = (0..n)
        .filter(|&i| !seen.insert(key(positions[i])))
        .collect();
    if dupes.is_empty() {
        return None;
    }
    let bb = bounds(positions, sizes);
    let eps = 1e-6 * bb.width().max(bb.height()).max(1.0);
    let mut out = positions.to_vec();
    let mut taken: HashSet<(u64, u64)> = positions.iter().map(|p| key(*p)).collect();
    for i in dupes {
        let angle = std::f64::consts::TAU * i as f64 / n as f64;
        let mut scale = i as f64;
        loop {
            let candidate = positions[i] + Point::new(angle.cos(), angle.sin()) * (eps * scale);
            if taken.insert(key(candidate)) {
                out[i] = candidate;
                break;
            }
            scale += 0.5;
        }
    }
    Some(out)
}

fn key(p: Point) -> (u64, u64) {
    // +0.0 and -0.0 are the same location.
    ((p.x + 0.0).to_bits(), (p.y + 0.0).to_bits())
}
