//! Complete delivery networks on integer lattices.
//!
//! Every constructor links *all* node pairs; the link taxonomy is metadata
//! derived from the displacement between endpoints, not a filter.

mod build;
mod json;
mod kind;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Box3, RationalPoint3, Segment};

pub use build::{
    build_cube, build_lattice, build_lattice_capped, build_linear, build_plane, build_two_cube,
    NetworkSelector, DEFAULT_NODE_CAP,
};
pub use json::{NetworkDoc, NETWORK_SCHEMA_VERSION};
pub use kind::{classify_link, LinkKind};

/// Lattice node `(l, m, n)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GridNode {
    pub l: i64,
    pub m: i64,
    pub n: i64,
}

impl GridNode {
    pub const fn new(l: i64, m: i64, n: i64) -> Self {
        GridNode { l, m, n }
    }

    pub fn coords(&self) -> [i64; 3] {
        [self.l, self.m, self.n]
    }

    pub fn point(&self) -> RationalPoint3 {
        RationalPoint3::from_ints(self.l, self.m, self.n)
    }
}

impl From<[i64; 3]> for GridNode {
    fn from(c: [i64; 3]) -> Self {
        GridNode::new(c[0], c[1], c[2])
    }
}

impl fmt::Display for GridNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.l, self.m, self.n)
    }
}

impl fmt::Debug for GridNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// A straight delivery link between two distinct nodes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Link {
    from: GridNode,
    to: GridNode,
    kind: LinkKind,
    segment: Segment,
}

impl Link {
    pub fn new(a: GridNode, b: GridNode) -> Result<Self> {
        let kind = classify_link(a, b)?;
        let (from, to) = if a < b { (a, b) } else { (b, a) };
        let segment = Segment::new(from.point(), to.point())?;
        Ok(Link {
            from,
            to,
            kind,
            segment,
        })
    }

    /// Endpoints in lexicographic order.
    pub fn endpoints(&self) -> (GridNode, GridNode) {
        (self.from, self.to)
    }

    pub fn kind(&self) -> LinkKind {
        self.kind
    }

    pub fn segment(&self) -> &Segment {
        &self.segment
    }

    pub fn touches(&self, node: GridNode) -> bool {
        self.from == node || self.to == node
    }

    /// Integer bounding box of the link as (min, max) corners.
    pub fn bounds(&self) -> ([i64; 3], [i64; 3]) {
        let (a, b) = (self.from.coords(), self.to.coords());
        (
            [a[0].min(b[0]), a[1].min(b[1]), a[2].min(b[2])],
            [a[0].max(b[0]), a[1].max(b[1]), a[2].max(b[2])],
        )
    }
}

impl fmt::Display for Link {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.from, self.to)
    }
}

impl fmt::Debug for Link {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Link({self}, {:?})", self.kind)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SharingMode {
    Plane,
    Edge,
    Node,
}

impl SharingMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            SharingMode::Plane => "plane",
            SharingMode::Edge => "edge",
            SharingMode::Node => "node",
        }
    }
}

/// How a network was constructed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NetworkLabel {
    Linear,
    Plane,
    Cube,
    TwoCube(SharingMode),
    Lattice { nx: i64, ny: i64, nz: i64 },
}

impl fmt::Display for NetworkLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NetworkLabel::Linear => f.write_str("linear"),
            NetworkLabel::Plane => f.write_str("plane"),
            NetworkLabel::Cube => f.write_str("cube"),
            NetworkLabel::TwoCube(mode) => write!(f, "two-cube:{}", mode.as_str()),
            NetworkLabel::Lattice { nx, ny, nz } => write!(f, "lattice:{nx},{ny},{nz}"),
        }
    }
}

/// Complete network: nodes in lexicographic order, every unordered node
/// pair linked exactly once, links ordered by endpoint indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Network {
    label: NetworkLabel,
    nodes: Vec<GridNode>,
    links: Vec<Link>,
    cubes: Vec<Box3>,
    /// Nodes common to both cubes of a two-cube network.
    shared: Vec<GridNode>,
}

impl Network {
    pub(crate) fn complete(
        label: NetworkLabel,
        mut nodes: Vec<GridNode>,
        mut cubes: Vec<Box3>,
        mut shared: Vec<GridNode>,
    ) -> Result<Self> {
        nodes.sort();
        nodes.dedup();
        cubes.sort();
        shared.sort();
        let mut links = Vec::with_capacity(nodes.len() * nodes.len().saturating_sub(1) / 2);
        for (i, &a) in nodes.iter().enumerate() {
            for &b in &nodes[i + 1..] {
                links.push(Link::new(a, b)?);
            }
        }
        Ok(Network {
            label,
            nodes,
            links,
            cubes,
            shared,
        })
    }

    pub fn label(&self) -> NetworkLabel {
        self.label
    }

    pub fn nodes(&self) -> &[GridNode] {
        &self.nodes
    }

    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn cubes(&self) -> &[Box3] {
        &self.cubes
    }

    pub fn shared_nodes(&self) -> &[GridNode] {
        &self.shared
    }

    pub fn node_index(&self, node: GridNode) -> Option<usize> {
        self.nodes.binary_search(&node).ok()
    }

    pub fn contains_node(&self, node: GridNode) -> bool {
        self.node_index(node).is_some()
    }

    /// Index of the link joining `a` and `b`.
    pub fn link_index(&self, a: GridNode, b: GridNode) -> Option<usize> {
        let (i, j) = (self.node_index(a)?, self.node_index(b)?);
        if i == j {
            return None;
        }
        let (i, j) = (i.min(j), i.max(j));
        let n = self.nodes.len();
        // row-major index into the strict upper triangle
        Some(i * (2 * n - i - 1) / 2 + (j - i - 1))
    }

    /// Count of links per kind, including kinds with zero links omitted.
    pub fn link_census(&self) -> BTreeMap<LinkKind, usize> {
        let mut census = BTreeMap::new();
        for link in &self.links {
            *census.entry(link.kind()).or_insert(0) += 1;
        }
        census
    }

    /// Indices of cubes whose closed volume contains `node`.
    pub fn cubes_containing(&self, node: GridNode) -> impl Iterator<Item = usize> + '_ {
        self.cubes
            .iter()
            .enumerate()
            .filter(move |(_, c)| c.contains_int(node.coords()))
            .map(|(i, _)| i)
    }

    /// True if both endpoints of the link lie in one common cube.
    pub fn is_intra_cube(&self, link: &Link) -> bool {
        let (a, b) = link.endpoints();
        self.cubes
            .iter()
            .any(|c| c.contains_int(a.coords()) && c.contains_int(b.coords()))
    }
}

/// Census of a network, one entry per kind present.
pub fn link_census(net: &Network) -> BTreeMap<LinkKind, usize> {
    net.link_census()
}

pub(crate) fn check_distinct(a: GridNode, b: GridNode) -> Result<()> {
    if a == b {
        return Err(Error::SameNode(a.to_string()));
    }
    Ok(())
}
