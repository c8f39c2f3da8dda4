use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{check_distinct, GridNode};
use crate::error::{Error, Result};

/// Link taxonomy by sorted absolute displacement between endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LinkKind {
    /// (1,0,0)
    Unit,
    /// (1,1,0)
    PlanarDiagonal,
    /// (1,1,1)
    SpatialDiagonal,
    /// (2,1,0)
    LongPlanarDiagonal,
    /// (2,1,1)
    LongSpatialDiagonal,
    /// (2,0,0)
    LongEdge,
    Other,
}

impl LinkKind {
    pub const ALL: [LinkKind; 7] = [
        LinkKind::Unit,
        LinkKind::PlanarDiagonal,
        LinkKind::SpatialDiagonal,
        LinkKind::LongPlanarDiagonal,
        LinkKind::LongSpatialDiagonal,
        LinkKind::LongEdge,
        LinkKind::Other,
    ];

    pub fn from_displacement(d: [i64; 3]) -> LinkKind {
        let mut s = d.map(i64::abs);
        s.sort_unstable_by(|a, b| b.cmp(a));
        match s {
            [1, 0, 0] => LinkKind::Unit,
            [1, 1, 0] => LinkKind::PlanarDiagonal,
            [1, 1, 1] => LinkKind::SpatialDiagonal,
            [2, 1, 0] => LinkKind::LongPlanarDiagonal,
            [2, 1, 1] => LinkKind::LongSpatialDiagonal,
            [2, 0, 0] => LinkKind::LongEdge,
            _ => LinkKind::Other,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            LinkKind::Unit => "unit",
            LinkKind::PlanarDiagonal => "planar_diagonal",
            LinkKind::SpatialDiagonal => "spatial_diagonal",
            LinkKind::LongPlanarDiagonal => "long_planar_diagonal",
            LinkKind::LongSpatialDiagonal => "long_spatial_diagonal",
            LinkKind::LongEdge => "long_edge",
            LinkKind::Other => "other",
        }
    }
}

impl fmt::Display for LinkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LinkKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LinkKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Document(format!("unknown link kind {s:?}")))
    }
}

pub fn classify_link(a: GridNode, b: GridNode) -> Result<LinkKind> {
    check_distinct(a, b)?;
    Ok(LinkKind::from_displacement([
        b.l - a.l,
        b.m - a.m,
        b.n - a.n,
    ]))
}
