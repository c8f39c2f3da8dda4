use std::fmt;
use std::str::FromStr;

use super::{GridNode, Network, NetworkLabel, SharingMode};
use crate::error::{Error, Result};
use crate::geometry::Box3;

/// Default upper bound on lattice node count (the 3x3x3 lattice).
pub const DEFAULT_NODE_CAP: usize = 64;

fn box_nodes(b: &Box3) -> Vec<GridNode> {
    let (lo, hi) = (b.min(), b.max());
    let mut out = Vec::new();
    for l in lo[0]..=hi[0] {
        for m in lo[1]..=hi[1] {
            for n in lo[2]..=hi[2] {
                out.push(GridNode::new(l, m, n));
            }
        }
    }
    out
}

fn from_cubes(label: NetworkLabel, cubes: Vec<Box3>, shared: Vec<GridNode>) -> Network {
    let nodes = cubes.iter().flat_map(box_nodes).collect();
    Network::complete(label, nodes, cubes, shared).expect("distinct lattice nodes")
}

pub fn build_linear() -> Network {
    let nodes = vec![GridNode::new(0, 0, 0), GridNode::new(1, 0, 0)];
    Network::complete(NetworkLabel::Linear, nodes, vec![], vec![]).expect("distinct nodes")
}

pub fn build_plane() -> Network {
    let nodes = vec![
        GridNode::new(0, 0, 0),
        GridNode::new(1, 0, 0),
        GridNode::new(0, 1, 0),
        GridNode::new(1, 1, 0),
    ];
    Network::complete(NetworkLabel::Plane, nodes, vec![], vec![]).expect("distinct nodes")
}

pub fn build_cube() -> Network {
    from_cubes(NetworkLabel::Cube, vec![Box3::unit([0, 0, 0])], vec![])
}

/// Two unit cubes sharing a face, an edge or a single node.
///
/// Placements: plane `[0,1]^2x[0,1]` + `[0,1]^2x[1,2]`; edge `[0,1]^3` +
/// `[1,2]x[1,2]x[0,1]`; node `[0,1]^3` + `[1,2]^3`.
pub fn build_two_cube(mode: SharingMode) -> Network {
    let first = Box3::unit([0, 0, 0]);
    let second = match mode {
        SharingMode::Plane => Box3::unit([0, 0, 1]),
        SharingMode::Edge => Box3::unit([1, 1, 0]),
        SharingMode::Node => Box3::unit([1, 1, 1]),
    };
    let a = box_nodes(&first);
    let shared = box_nodes(&second)
        .into_iter()
        .filter(|n| a.contains(n))
        .collect();
    from_cubes(NetworkLabel::TwoCube(mode), vec![first, second], shared)
}

pub fn build_lattice(nx: i64, ny: i64, nz: i64) -> Result<Network> {
    build_lattice_capped(nx, ny, nz, DEFAULT_NODE_CAP)
}

/// Lattice `[0,nx]x[0,ny]x[0,nz]` with one unit cube per cell.
pub fn build_lattice_capped(nx: i64, ny: i64, nz: i64, node_cap: usize) -> Result<Network> {
    if nx < 1 || ny < 1 || nz < 1 {
        return Err(Error::InvalidDimensions(nx, ny, nz));
    }
    let nodes = (nx as u128 + 1) * (ny as u128 + 1) * (nz as u128 + 1);
    if nodes > node_cap as u128 {
        return Err(Error::NodeCap {
            nodes: usize::try_from(nodes).unwrap_or(usize::MAX),
            cap: node_cap,
        });
    }
    let mut cubes = Vec::with_capacity((nx * ny * nz) as usize);
    for l in 0..nx {
        for m in 0..ny {
            for n in 0..nz {
                cubes.push(Box3::unit([l, m, n]));
            }
        }
    }
    Ok(from_cubes(
        NetworkLabel::Lattice { nx, ny, nz },
        cubes,
        vec![],
    ))
}

/// Parsed form of a `--network` argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NetworkSelector {
    Linear,
    Plane,
    Cube,
    TwoCube(SharingMode),
    Lattice(i64, i64, i64),
}

impl NetworkSelector {
    pub fn build(&self, node_cap: usize) -> Result<Network> {
        Ok(match *self {
            NetworkSelector::Linear => build_linear(),
            NetworkSelector::Plane => build_plane(),
            NetworkSelector::Cube => build_cube(),
            NetworkSelector::TwoCube(mode) => build_two_cube(mode),
            NetworkSelector::Lattice(x, y, z) => build_lattice_capped(x, y, z, node_cap)?,
        })
    }
}

impl FromStr for NetworkSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSelector(s.to_string());
        Ok(match s.trim() {
            "linear" => NetworkSelector::Linear,
            "plane" => NetworkSelector::Plane,
            "cube" => NetworkSelector::Cube,
            "two-cube:plane" => NetworkSelector::TwoCube(SharingMode::Plane),
            "two-cube:edge" => NetworkSelector::TwoCube(SharingMode::Edge),
            "two-cube:node" => NetworkSelector::TwoCube(SharingMode::Node),
            other => {
                let dims = other.strip_prefix("lattice:").ok_or_else(bad)?;
                let parts: Vec<i64> = dims
                    .split(',')
                    .map(|p| p.trim().parse::<i64>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| bad())?;
                match parts[..] {
                    [x, y, z] if x >= 1 && y >= 1 && z >= 1 => NetworkSelector::Lattice(x, y, z),
                    _ => return Err(bad()),
                }
            }
        })
    }
}

impl fmt::Display for NetworkSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NetworkSelector::Linear => f.write_str("linear"),
            NetworkSelector::Plane => f.write_str("plane"),
            NetworkSelector::Cube => f.write_str("cube"),
            NetworkSelector::TwoCube(m) => write!(f, "two-cube:{}", m.as_str()),
            NetworkSelector::Lattice(x, y, z) => write!(f, "lattice:{x},{y},{z}"),
        }
    }
}
