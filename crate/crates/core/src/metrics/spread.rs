use crate::model::AdjustmentPair;

use super::Frames;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpreadMetrics {
    pub sp_bb_l1ml: f64,
    pub sp_bb_a: f64,
    pub sp_bb_na: f64,
    /// Undefined when the initial hull has zero area.
    pub sp_ch_a: Option<f64>,
}

pub fn sp_metrics(pair: &AdjustmentPair<'_>) -> SpreadMetrics {
    from_frames(&Frames::new(pair))
}

pub(crate) fn from_frames(f: &Frames) -> SpreadMetrics {
    let (w, h) = (f.bb.width(), f.bb.height());
    let (w2, h2) = (f.bb_adj.width(), f.bb_adj.height());
    SpreadMetrics {
        sp_bb_l1ml: bb_l1ml(w, h, w2, h2),
        sp_bb_a: (w2 * h2) / (w * h),
        sp_bb_na: 1.0 - (w * h) / (w2 * h2),
        sp_ch_a: (f.hull.area > 0.0).then(|| f.hull_adj.area / f.hull.area),
    }
}

pub(crate) fn bb_l1ml(w: f64, h: f64, w2: f64, h2: f64) -> f64 {
    w2.max(h2) / w.max(h)
}
