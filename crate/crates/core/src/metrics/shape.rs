use crate::geometry::hull_ray_lengths;
use crate::model::AdjustmentPair;

use super::Frames;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeMetrics {
    pub gs_bb_ar: f64,
    pub gs_bb_iar: f64,
    /// Undefined when either hull has zero area.
    pub gs_ch_sd: Option<f64>,
}

pub fn gs_metrics(pair: &AdjustmentPair<'_>) -> ShapeMetrics {
    from_frames(&Frames::new(pair))
}

pub(crate) fn from_frames(f: &Frames) -> ShapeMetrics {
    let (w, h) = (f.bb.width(), f.bb.height());
    let (w2, h2) = (f.bb_adj.width(), f.bb_adj.height());
    let gs_ch_sd = match (hull_ray_lengths(&f.hull), hull_ray_lengths(&f.hull_adj)) {
        (Ok(before), Ok(after)) => {
            let ratios: Vec<f64> = after.iter().zip(&before).map(|(a, b)| a / b).collect();
            Some(population_sd(&ratios))
        }
        _ => None,
    };
    ShapeMetrics {
        gs_bb_ar: aspect_ratio(w, h, w2, h2),
        gs_bb_iar: improved_aspect_ratio(w, h, w2, h2),
        gs_ch_sd,
    }
}

pub(crate) fn aspect_ratio(w: f64, h: f64, w2: f64, h2: f64) -> f64 {
    if w2 > h2 {
        (w2 * h) / (h2 * w)
    } else {
        (h2 * w) / (w2 * h)
    }
}

pub(crate) fn improved_aspect_ratio(w: f64, h: f64, w2: f64, h2: f64) -> f64 {
    ((w2 * h) / (h2 * w)).max((h2 * w) / (w2 * h))
}

fn population_sd(values: &[f64]) -> f64 {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n).sqrt()
}
