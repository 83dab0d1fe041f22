use crate::error::{Error, Result};
use crate::model::{Embedding, Point, Size, SizedGraph};

/// Smallest axis-aligned rectangle containing every node rectangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundingBox {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
}

impl BoundingBox {
    pub fn width(&self) -> f64 {
        self.max_x - self.min_x
    }

    pub fn height(&self) -> f64 {
        self.max_y - self.min_y
    }

    pub fn center(&self) -> Point {
        Point::new(
            (self.min_x + self.max_x) / 2.0,
            (self.min_y + self.max_y) / 2.0,
        )
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }
}

pub fn bounding_box(graph: &SizedGraph, embedding: &Embedding) -> Result<BoundingBox> {
    if graph.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(bounds(embedding.positions(), &graph.sizes()))
}

/// Bounding box of raw centers and sizes. An empty input yields an inverted
/// box at infinity, so callers must check for emptiness first.
pub fn bounds(positions: &[Point], sizes: &[Size]) -> BoundingBox {
    let mut bb = BoundingBox {
        min_x: f64::INFINITY,
        min_y: f64::INFINITY,
        max_x: f64::NEG_INFINITY,
        max_y: f64::NEG_INFINITY,
    };
    for (p, s) in positions.iter().zip(sizes) {
        bb.min_x = bb.min_x.min(p.x - s.w / 2.0);
        bb.max_x = bb.max_x.max(p.x + s.w / 2.0);
        bb.min_y = bb.min_y.min(p.y - s.h / 2.0);
        bb.max_y = bb.max_y.max(p.y + s.h / 2.0);
    }
    bb
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn two_squares() {
        let bb = bounds(
            &[Point::new(0.0, 0.0), Point::new(4.0, 0.0)],
            &[Size::new(2.0, 2.0); 2],
        );
        assert_eq!((bb.width(), bb.height()), (6.0, 2.0));
        assert_eq!(bb.center(), Point::new(2.0, 0.0));
    }

    #[test]
    fn singleton_and_translation() {
        let s = [Size::new(3.0, 1.0)];
        let bb = bounds(&[Point::new(5.0, 5.0)], &s);
        assert_eq!(
            (bb.min_x, bb.max_x, bb.min_y, bb.max_y),
            (3.5, 6.5, 4.5, 5.5)
        );
        let moved = bounds(&[Point::new(15.0, 5.0)], &s);
        assert_eq!(moved.width(), bb.width());
        assert_eq!(moved.center(), Point::new(15.0, 5.0));
    }

    #[test]
    fn empty_graph_is_an_error() {
        let g = SizedGraph::new("g", vec![], []).unwrap();
        let e = Embedding::new(&g, vec![]).unwrap();
        assert!(matches!(bounding_box(&g, &e), Err(Error::EmptyGraph)));
    }

    #[test]
    fn matches_direct_formula() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let n = rng.gen_range(1..20);
            let pos: Vec<Point> = (0..n)
                .map(|_| Point::new(rng.gen_range(-50.0..50.0), rng.gen_range(-50.0..50.0)))
                .collect();
            let sizes: Vec<Size> = (0..n)
                .map(|_| Size::new(rng.gen_range(0.1..9.0), rng.gen_range(0.1..9.0)))
                .collect();
            let right = (0..n)
                .map(|v| pos[v].x + sizes[v].w / 2.0)
                .fold(f64::MIN, f64::max);
            let left = (0..n)
                .map(|u| pos[u].x - sizes[u].w / 2.0)
                .fold(f64::MAX, f64::min);
            let top = (0..n)
                .map(|v| pos[v].y + sizes[v].h / 2.0)
                .fold(f64::MIN, f64::max);
            let bottom = (0..n)
                .map(|u| pos[u].y - sizes[u].h / 2.0)
                .fold(f64::MAX, f64::min);
            let bb = bounds(&pos, &sizes);
            assert_eq!(bb.width(), (right - left).abs());
            assert_eq!(bb.height(), (top - bottom).abs());
        }
    }
}
