use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::model::{Embedding, Point, Size, SizedGraph};

use super::separate_coincident;

/// Delaunay triangulation of node centers, as dense-index pairs `(u, v)`
/// with `u < v`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Triangulation {
    pub edges: Vec<(usize, usize)>,
    pub triangles: Vec<[usize; 3]>,
}

pub fn delaunay_edges(graph: &SizedGraph, embedding: &Embedding) -> Result<Triangulation> {
    triangulate(embedding.positions(), &graph.sizes())
}

/// Triangulate `positions`. Coincident centers are separated first (see
/// [`separate_coincident`]); collinear inputs yield the path through the
/// points in order along their line.
pub fn triangulate(positions: &[Point], sizes: &[Size]) -> Result<Triangulation> {
    let n = positions.len();
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "triangulation needs at least 2 points, got {n}"
        )));
    }
    let jittered = separate_coincident(positions, sizes);
    let pts = jittered.as_deref().unwrap_or(positions);
    let input: Vec<delaunator::Point> = pts
        .iter()
        .map(|p| delaunator::Point { x: p.x, y: p.y })
        .collect();
    let raw = delaunator::triangulate(&input);

    let mut edges = BTreeSet::new();
    let mut triangles = Vec::with_capacity(raw.len());
    for t in raw.triangles.chunks_exact(3) {
        triangles.push([t[0], t[1], t[2]]);
        for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    if triangles.is_empty() {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            pts[a]
                .x
                .total_cmp(&pts[b].x)
                .then(pts[a].y.total_cmp(&pts[b].y))
                .then(a.cmp(&b))
        });
        for w in order.windows(2) {
            edges.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
    }
    Ok(Triangulation {
        edges: edges.into_iter().collect(),
        triangles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn unit(n: usize) -> Vec<Size> {
        vec![Size::new(1.0, 1.0); n]
    }

    #[test]
    fn small_cases() {
        let two = [Point::new(0.0, 0.0), Point::new(1.0, 1.0)];
        assert_eq!(triangulate(&two, &unit(2)).unwrap().edges, vec![(0, 1)]);

        let tri = [
            Point::new(0.0, 0.0),
            Point::new(4.0, 0.0),
            Point::new(1.0, 3.0),
        ];
        assert_eq!(triangulate(&tri, &unit(3)).unwrap().edges.len(), 3);

        let square = [
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ];
        assert_eq!(triangulate(&square, &unit(4)).unwrap().edges.len(), 5);

        assert!(triangulate(&two[..1], &unit(1)).is_err());
    }

    #[test]
    fn collinear_points_form_a_path() {
        let line = [
            Point::new(3.0, 3.0),
            Point::new(0.0, 0.0),
            Point::new(2.0, 2.0),
            Point::new(1.0, 1.0),
        ];
        let t = triangulate(&line, &unit(4)).unwrap();
        assert_eq!(t.edges, vec![(0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn coincident_points_are_triangulated() {
        let pts = [
            Point::new(0.0, 0.0),
            Point::new(0.0, 0.0),
            Point::new(5.0, 0.0),
            Point::new(0.0, 5.0),
        ];
        let t = triangulate(&pts, &unit(4)).unwrap();
        let touched: BTreeSet<usize> = t.edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        assert_eq!(touched.len(), 4);
    }

    #[test]
    fn deterministic() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let pts: Vec<Point> = (0..50)
            .map(|_| Point::new(rng.gen_range(0.0..10.0), rng.gen_range(0.0..10.0)))
            .collect();
        assert_eq!(
            triangulate(&pts, &unit(50)).unwrap(),
            triangulate(&pts, &unit(50)).unwrap()
        );
    }
}
