//! The catalog of 21 layout-adjustment quality metrics, with the value range
//! and target value of each.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MetricClass {
    OrthogonalOrdering,
    Spread,
    GlobalShape,
    NodeMovement,
    EdgeLength,
}

impl MetricClass {
    pub fn name(self) -> &'static str {
        match self {
            MetricClass::OrthogonalOrdering => "orthogonal_ordering",
            MetricClass::Spread => "spread",
            MetricClass::GlobalShape => "global_shape",
            MetricClass::NodeMovement => "node_movement",
            MetricClass::EdgeLength => "edge_length",
        }
    }
}

/// One metric of the catalog. Declaration order is the catalog order used
/// for CSV columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Metric {
    OoO,
    OoKt,
    OoNi,
    OoNni,
    SpBbL1ml,
    SpBbA,
    SpBbNa,
    SpChA,
    GsBbAr,
    GsBbIar,
    GsChSd,
    NmMn,
    NmDmMe,
    NmDmNe,
    NmDmH,
    NmDmSe,
    NmDmImse,
    NmD,
    NmKnn,
    ElR,
    ElRsdd,
}

impl Metric {
    pub const COUNT: usize = 21;

    pub const ALL: [Metric; Metric::COUNT] = [
        Metric::OoO,
        Metric::OoKt,
        Metric::OoNi,
        Metric::OoNni,
        Metric::SpBbL1ml,
        Metric::SpBbA,
        Metric::SpBbNa,
        Metric::SpChA,
        Metric::GsBbAr,
        Metric::GsBbIar,
        Metric::GsChSd,
        Metric::NmMn,
        Metric::NmDmMe,
        Metric::NmDmNe,
        Metric::NmDmH,
        Metric::NmDmSe,
        Metric::NmDmImse,
        Metric::NmD,
        Metric::NmKnn,
        Metric::ElR,
        Metric::ElRsdd,
    ];

    /// The representative metric of each class.
    pub const SELECTED: [Metric; 5] = [
        Metric::OoNni,
        Metric::SpChA,
        Metric::GsBbIar,
        Metric::NmDmImse,
        Metric::ElRsdd,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn abbreviation(self) -> &'static str {
        self.descriptor().abbreviation
    }

    pub fn descriptor(self) -> &'static MetricDescriptor {
        &DESCRIPTORS[self.index()]
    }

    pub fn from_abbreviation(s: &str) -> Option<Metric> {
        DESCRIPTORS
            .iter()
            .find(|d| d.abbreviation == s)
            .map(|d| d.metric)
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.abbreviation())
    }
}

impl FromStr for Metric {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Metric::from_abbreviation(s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown metric {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetricDescriptor {
    pub metric: Metric,
    pub abbreviation: &'static str,
    pub class: MetricClass,
    pub range_low: f64,
    pub range_high: f64,
    pub low_inclusive: bool,
    pub high_inclusive: bool,
    pub target: f64,
    pub selected: bool,
}

impl MetricDescriptor {
    /// Upper end of the range for a graph with `n` nodes. Only `oo_ni`
    /// depends on `n`; every other upper bound is a constant.
    pub fn upper_bound(&self, n: usize) -> f64 {
        if self.metric == Metric::OoNi {
            (n * n.saturating_sub(1)) as f64
        } else {
            self.range_high
        }
    }

    pub fn contains(&self, value: f64, n: usize) -> bool {
        let high = self.upper_bound(n);
        let above = if self.low_inclusive {
            value >= self.range_low
        } else {
            value > self.range_low
        };
        let below = if self.high_inclusive {
            value <= high
        } else {
            value < high
        };
        above && below
    }
}

const INF: f64 = f64::INFINITY;

macro_rules! descriptor {
    ($metric:ident, $abbr:literal, $class:ident, $lo:expr, $lo_in:literal, $hi:expr, $hi_in:literal, $target:expr, $sel:literal) => {
        MetricDescriptor {
            metric: Metric::$metric,
            abbreviation: $abbr,
            class: MetricClass::$class,
            range_low: $lo,
            range_high: $hi,
            low_inclusive: $lo_in,
            high_inclusive: $hi_in,
            target: $target,
            selected: $sel,
        }
    };
}

// The range of oo_ni is [0, n(n-1)]; `upper_bound` supplies the n-dependent end.
// nm_d is often given as ]0, +inf[, but its target is 0 and an unchanged
// layout attains it, so the lower end is closed here.
static DESCRIPTORS: [MetricDescriptor; Metric::COUNT] = [
    descriptor!(
        OoO,
        "oo_o",
        OrthogonalOrdering,
        0.0,
        true,
        1.0,
        true,
        1.0,
        false
    ),
    descriptor!(
        OoKt,
        "oo_kt",
        OrthogonalOrdering,
        0.0,
        true,
        1.0,
        true,
        0.0,
        false
    ),
    descriptor!(
        OoNi,
        "oo_ni",
        OrthogonalOrdering,
        0.0,
        true,
        INF,
        true,
        0.0,
        false
    ),
    descriptor!(
        OoNni,
        "oo_nni",
        OrthogonalOrdering,
        0.0,
        true,
        1.0,
        true,
        0.0,
        true
    ),
    descriptor!(
        SpBbL1ml,
        "sp_bb_l1ml",
        Spread,
        1.0,
        true,
        INF,
        false,
        1.0,
        false
    ),
    descriptor!(SpBbA, "sp_bb_a", Spread, 1.0, true, INF, false, 1.0, false),
    descriptor!(SpBbNa, "sp_bb_na", Spread, 0.0, true, 1.0, false, 0.0, false),
    descriptor!(SpChA, "sp_ch_a", Spread, 1.0, true, INF, false, 1.0, true),
    descriptor!(
        GsBbAr,
        "gs_bb_ar",
        GlobalShape,
        0.0,
        false,
        INF,
        false,
        1.0,
        false
    ),
    descriptor!(
        GsBbIar,
        "gs_bb_iar",
        GlobalShape,
        1.0,
        true,
        INF,
        false,
        1.0,
        true
    ),
    descriptor!(
        GsChSd,
        "gs_ch_sd",
        GlobalShape,
        0.0,
        true,
        INF,
        false,
        0.0,
        false
    ),
    descriptor!(
        NmMn,
        "nm_mn",
        NodeMovement,
        0.0,
        true,
        1.0,
        true,
        0.0,
        false
    ),
    descriptor!(
        NmDmMe,
        "nm_dm_me",
        NodeMovement,
        0.0,
        true,
        INF,
        false,
        0.0,
        false
    ),
    descriptor!(
        NmDmNe,
        "nm_dm_ne",
        NodeMovement,
        0.0,
        true,
        1.0,
        true,
        0.0,
        false
    ),
    descriptor!(
        NmDmH,
        "nm_dm_h",
        NodeMovement,
        0.0,
        true,
        INF,
        false,
        0.0,
        false
    ),
    descriptor!(
        NmDmSe,
        "nm_dm_se",
        NodeMovement,
        0.0,
        true,
        INF,
        false,
        0.0,
        false
    ),
    descriptor!(
        NmDmImse,
        "nm_dm_imse",
        NodeMovement,
        0.0,
        true,
        INF,
        true,
        0.0,
        true
    ),
    descriptor!(NmD, "nm_d", NodeMovement, 0.0, true, INF, false, 0.0, false),
    descriptor!(
        NmKnn,
        "nm_knn",
        NodeMovement,
        0.0,
        true,
        INF,
        false,
        0.0,
        false
    ),
    descriptor!(ElR, "el_r", EdgeLength, 1.0, true, INF, false, 1.0, false),
    descriptor!(ElRsdd, "el_rsdd", EdgeLength, 0.0, true, INF, true, 0.0, true),
];

pub fn descriptors() -> &'static [MetricDescriptor] {
    &DESCRIPTORS
}
