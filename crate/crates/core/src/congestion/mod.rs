//! Pairwise congestion classification between the links of a network.
//!
//! Every unordered link pair is intersected exactly and classified:
//!
//! * a positive-length overlap is **line** congestion;
//! * a single crossing away from every node coordinate is **point** congestion;
//! * a single crossing at a node that lies inside at least one of the two
//!   links is **full** congestion;
//! * two links meeting only at a common endpoint are incident, not congested.

mod analysis;
mod permit;
mod sweep;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::geometry::{RationalPoint3, Segment};
use crate::network::GridNode;

pub use analysis::{
    center_cube_coverage, center_cube_coverage_capped, center_cube_coverage_direct,
    center_cube_coverage_in, congestion_coordinates, corollary2_check, externality_report,
    links_with_events, paradox_metrics, paradox_metrics_from, redundant_points, CenterCoverage,
    CongestionMap, CoordinateEntry, ParadoxMetrics,
};
pub use permit::{permit_assignment, ConflictGraph};
pub use sweep::{classify_pair, pairwise_congestion, pairwise_congestion_par};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CongestionKind {
    Point,
    Line,
    Full,
}

impl CongestionKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CongestionKind::Point => "point",
            CongestionKind::Line => "line",
            CongestionKind::Full => "full",
        }
    }
}

impl fmt::Display for CongestionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Locus {
    Point(RationalPoint3),
    Segment(Segment),
}

impl Locus {
    /// The point used for the externality test: the point itself, or the
    /// midpoint of an overlap.
    pub fn representative(&self) -> RationalPoint3 {
        match self {
            Locus::Point(p) => p.clone(),
            Locus::Segment(s) => s.midpoint(),
        }
    }

    pub fn as_point(&self) -> Option<&RationalPoint3> {
        match self {
            Locus::Point(p) => Some(p),
            Locus::Segment(_) => None,
        }
    }
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Locus::Point(p) => write!(f, "{p}"),
            Locus::Segment(s) => write!(f, "{s}"),
        }
    }
}

/// One classified interaction between two links of a network.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongestionEvent {
    pub kind: CongestionKind,
    /// Link indices into `Network::links()`, smaller first.
    pub links: (usize, usize),
    pub locus: Locus,
    /// Set for full congestion only.
    pub at_node: Option<GridNode>,
    /// Locus (midpoint for line congestion) lies outside every cube.
    pub external: bool,
    /// Line congestion whose overlap spans at least one whole unit link.
    pub whole_unit: bool,
}
