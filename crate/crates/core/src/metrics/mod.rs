//! Quality metrics comparing an initial layout with its adjusted version.
//!
//! Each submodule covers one class of the catalog. [`compute_metrics`]
//! evaluates all 21 metrics at once and returns a [`MetricReport`].

mod edges;
mod movement;
mod ordering;
mod shape;
mod spread;

pub use edges::{el_metrics, EdgeLengthMetrics};
pub use movement::{nm_metrics, MovementMetrics, MOVEMENT_THRESHOLD};
pub use ordering::{oo_metrics, OrderingMetrics};
pub use shape::{gs_metrics, ShapeMetrics};
pub use spread::{sp_metrics, SpreadMetrics};

use crate::geometry::{bounds, BoundingBox, ConvexHull};
use crate::model::AdjustmentPair;
use crate::registry::Metric;

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct MetricOptions {
    /// Neighborhood size for `nm_knn`; defaults to `min(10, n - 1)`.
    pub knn_k: Option<usize>,
}

impl MetricOptions {
    pub fn knn_k_for(&self, n: usize) -> usize {
        self.knn_k.unwrap_or_else(|| n.saturating_sub(1).min(10))
    }
}

/// Values of all 21 metrics. `None` marks a value that is undefined for the
/// pair (for instance `el_r` on a graph without edges).
#[derive(Debug, Clone, PartialEq)]
pub struct MetricReport {
    values: [Option<f64>; Metric::COUNT],
}

impl MetricReport {
    pub fn empty() -> Self {
        Self {
            values: [None; Metric::COUNT],
        }
    }

    pub fn get(&self, metric: Metric) -> Option<f64> {
        self.values[metric.index()]
    }

    pub fn set(&mut self, metric: Metric, value: Option<f64>) {
        self.values[metric.index()] = value;
    }

    pub fn undefined_count(&self) -> usize {
        self.values.iter().filter(|v| v.is_none()).count()
    }

    /// `(metric, value)` in catalog order.
    pub fn iter(&self) -> impl Iterator<Item = (Metric, Option<f64>)> + '_ {
        Metric::ALL
            .iter()
            .map(move |&m| (m, self.values[m.index()]))
    }
}

/// Bounding boxes and hulls of both sides of a pair, shared by several
/// metric classes.
pub(crate) struct Frames {
    pub bb: BoundingBox,
    pub bb_adj: BoundingBox,
    pub hull: ConvexHull,
    pub hull_adj: ConvexHull,
}

impl Frames {
    pub fn new(pair: &AdjustmentPair<'_>) -> Self {
        let sizes = pair.graph.sizes();
        let hull_of = |pos| ConvexHull::from_points(&crate::geometry::hull_corners(pos, &sizes));
        Self {
            bb: bounds(pair.initial.positions(), &sizes),
            bb_adj: bounds(pair.adjusted.positions(), &sizes),
            hull: hull_of(pair.initial.positions()),
            hull_adj: hull_of(pair.adjusted.positions()),
        }
    }
}

/// Evaluate the whole catalog on a pair. The graph must have at least one
/// node.
pub fn compute_metrics(pair: &AdjustmentPair<'_>, options: &MetricOptions) -> MetricReport {
    let frames = Frames::new(pair);
    let mut report = MetricReport::empty();

    let oo = oo_metrics(pair);
    report.set(Metric::OoO, Some(oo.oo_o));
    report.set(Metric::OoKt, Some(oo.oo_kt));
    report.set(Metric::OoNi, Some(oo.oo_ni));
    report.set(Metric::OoNni, Some(oo.oo_nni));

    let sp = spread::from_frames(&frames);
    report.set(Metric::SpBbL1ml, Some(sp.sp_bb_l1ml));
    report.set(Metric::SpBbA, Some(sp.sp_bb_a));
    report.set(Metric::SpBbNa, Some(sp.sp_bb_na));
    report.set(Metric::SpChA, sp.sp_ch_a);

    let gs = shape::from_frames(&frames);
    report.set(Metric::GsBbAr, Some(gs.gs_bb_ar));
    report.set(Metric::GsBbIar, Some(gs.gs_bb_iar));
    report.set(Metric::GsChSd, gs.gs_ch_sd);

    let nm = movement::from_frames(pair, &frames, options.knn_k_for(pair.n()));
    report.set(Metric::NmMn, Some(nm.nm_mn));
    report.set(Metric::NmDmMe, Some(nm.nm_dm_me));
    report.set(Metric::NmDmNe, Some(nm.nm_dm_ne));
    report.set(Metric::NmDmH, Some(nm.nm_dm_h));
    report.set(Metric::NmDmSe, Some(nm.nm_dm_se));
    report.set(Metric::NmDmImse, Some(nm.nm_dm_imse));
    report.set(Metric::NmD, Some(nm.nm_d));
    report.set(Metric::NmKnn, nm.nm_knn);

    let el = el_metrics(pair);
    report.set(Metric::ElR, el.el_r);
    report.set(Metric::ElRsdd, el.el_rsdd);

    report
}
