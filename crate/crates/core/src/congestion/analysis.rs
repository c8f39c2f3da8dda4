use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use rayon::prelude::*;

use super::{classify_pair, pairwise_congestion, CongestionEvent, CongestionKind, Locus};
use crate::error::{Error, Result};
use crate::geometry::{Rational, RationalPoint3};
use crate::network::{build_lattice_capped, GridNode, LinkKind, Network, DEFAULT_NODE_CAP};

/// Links meeting at one congestion coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoordinateEntry {
    pub kind: CongestionKind,
    pub links: BTreeSet<usize>,
}

impl CoordinateEntry {
    pub fn multiplicity(&self) -> usize {
        self.links.len()
    }
}

/// Point and full congestion events grouped by exact coordinate.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CongestionMap {
    pub point_multiplicity: BTreeMap<RationalPoint3, CoordinateEntry>,
    pub events: Vec<CongestionEvent>,
}

impl CongestionMap {
    pub fn coordinates_of(&self, kind: CongestionKind) -> impl Iterator<Item = &RationalPoint3> {
        self.point_multiplicity
            .iter()
            .filter(move |(_, e)| e.kind == kind)
            .map(|(p, _)| p)
    }
}

pub fn congestion_coordinates(events: &[CongestionEvent]) -> CongestionMap {
    let mut map: BTreeMap<RationalPoint3, CoordinateEntry> = BTreeMap::new();
    for e in events {
        let Locus::Point(p) = &e.locus else { continue };
        let entry = map.entry(p.clone()).or_insert_with(|| CoordinateEntry {
            kind: e.kind,
            links: BTreeSet::new(),
        });
        entry.links.insert(e.links.0);
        entry.links.insert(e.links.1);
    }
    CongestionMap {
        point_multiplicity: map,
        events: events.to_vec(),
    }
}

/// Point-congestion coordinates where a link spanning two cubes passes
/// through a crossing that already exists between links lying inside single
/// cubes.
pub fn redundant_points(net: &Network, map: &CongestionMap) -> Vec<RationalPoint3> {
    if net.cubes().is_empty() {
        return Vec::new();
    }
    map.point_multiplicity
        .iter()
        .filter(|(_, entry)| entry.kind == CongestionKind::Point)
        .filter(|(_, entry)| {
            let (intra, cross): (Vec<usize>, Vec<usize>) = entry
                .links
                .iter()
                .partition(|&&l| net.is_intra_cube(&net.links()[l]));
            intra.len() >= 2 && !cross.is_empty()
        })
        .map(|(p, _)| p.clone())
        .collect()
}

pub fn externality_report(events: &[CongestionEvent]) -> Vec<CongestionEvent> {
    events.iter().filter(|e| e.external).cloned().collect()
}

/// True iff every unit link at a fully congested `node` is line congested.
pub fn corollary2_check(net: &Network, node: GridNode, events: &[CongestionEvent]) -> Result<bool> {
    let fully = events
        .iter()
        .any(|e| e.kind == CongestionKind::Full && e.at_node == Some(node));
    if !fully {
        return Err(Error::Precondition(format!(
            "node {node} is not fully congested"
        )));
    }
    let line_links: BTreeSet<usize> = events
        .iter()
        .filter(|e| e.kind == CongestionKind::Line)
        .flat_map(|e| [e.links.0, e.links.1])
        .collect();
    Ok(net
        .links()
        .iter()
        .enumerate()
        .filter(|(_, l)| l.kind() == LinkKind::Unit && l.touches(node))
        .all(|(i, _)| line_links.contains(&i)))
}

/// Indices of links taking part in at least one event.
pub fn links_with_events(events: &[CongestionEvent]) -> BTreeSet<usize> {
    events.iter().flat_map(|e| [e.links.0, e.links.1]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParadoxMetrics {
    pub links_total: usize,
    pub links_congested: usize,
    pub fraction_congested: Rational,
    pub point_coordinate_count: usize,
    pub full_nodes: Vec<GridNode>,
    pub external_count: usize,
    pub point_events: usize,
    pub line_events: usize,
    pub full_events: usize,
}

pub fn paradox_metrics(net: &Network) -> ParadoxMetrics {
    paradox_metrics_from(net, &pairwise_congestion(net))
}

pub fn paradox_metrics_from(net: &Network, events: &[CongestionEvent]) -> ParadoxMetrics {
    let congested = links_with_events(events).len();
    let total = net.links().len();
    let fraction = if total == 0 {
        Rational::zero()
    } else {
        Rational::new(congested as i64, total as i64).expect("nonzero total")
    };
    let point_coords: BTreeSet<_> = events
        .iter()
        .filter(|e| e.kind == CongestionKind::Point)
        .filter_map(|e| e.locus.as_point())
        .collect();
    let full_nodes: BTreeSet<GridNode> = events.iter().filter_map(|e| e.at_node).collect();
    let count = |k| events.iter().filter(|e| e.kind == k).count();
    ParadoxMetrics {
        links_total: total,
        links_congested: congested,
        fraction_congested: fraction,
        point_coordinate_count: point_coords.len(),
        full_nodes: full_nodes.into_iter().collect(),
        external_count: events.iter().filter(|e| e.external).count(),
        point_events: count(CongestionKind::Point),
        line_events: count(CongestionKind::Line),
        full_events: count(CongestionKind::Full),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CenterCoverage {
    pub center_links: usize,
    pub congested: usize,
    pub all_congested: bool,
}

fn center_corner(nx: i64, ny: i64, nz: i64) -> Result<[i64; 3]> {
    if [nx, ny, nz].iter().any(|&d| d < 3 || d % 2 == 0) {
        return Err(Error::Precondition(format!(
            "lattice {nx}x{ny}x{nz} has no center cube; every dimension must be odd and at least 3"
        )));
    }
    Ok([(nx - 1) / 2, (ny - 1) / 2, (nz - 1) / 2])
}

pub fn center_cube_coverage(nx: i64, ny: i64, nz: i64) -> Result<CenterCoverage> {
    center_cube_coverage_capped(nx, ny, nz, DEFAULT_NODE_CAP)
}

pub fn center_cube_coverage_capped(
    nx: i64,
    ny: i64,
    nz: i64,
    node_cap: usize,
) -> Result<CenterCoverage> {
    center_corner(nx, ny, nz)?;
    let net = build_lattice_capped(nx, ny, nz, node_cap)?;
    let events = super::pairwise_congestion_par(&net);
    center_cube_coverage_in(&net, &events)
}

fn center_links(net: &Network) -> Result<Vec<usize>> {
    let crate::network::NetworkLabel::Lattice { nx, ny, nz } = net.label() else {
        return Err(Error::Precondition(
            "center coverage needs a lattice network".into(),
        ));
    };
    let c = center_corner(nx, ny, nz)?;
    let corners: Vec<GridNode> = (0..8)
        .map(|k| GridNode::new(c[0] + (k >> 2 & 1), c[1] + (k >> 1 & 1), c[2] + (k & 1)))
        .collect();
    let mut links = Vec::new();
    for (i, &a) in corners.iter().enumerate() {
        for &b in &corners[i + 1..] {
            links.push(
                net.link_index(a, b)
                    .expect("center nodes are in the lattice"),
            );
        }
    }
    Ok(links)
}

fn coverage(center: &[usize], congested: usize) -> CenterCoverage {
    CenterCoverage {
        center_links: center.len(),
        congested,
        all_congested: congested == center.len(),
    }
}

/// Coverage of the 28 links among the center cube's nodes, given the events
/// of a lattice network.
pub fn center_cube_coverage_in(
    net: &Network,
    events: &[CongestionEvent],
) -> Result<CenterCoverage> {
    let center = center_links(net)?;
    let busy = links_with_events(events);
    Ok(coverage(
        &center,
        center.iter().filter(|l| busy.contains(l)).count(),
    ))
}

/// Same as [`center_cube_coverage_in`], but classifies only the pairs that
/// involve a center link, stopping at each link's first event.
pub fn center_cube_coverage_direct(net: &Network) -> Result<CenterCoverage> {
    let center = center_links(net)?;
    let congested = center
        .par_iter()
        .filter(|&&c| {
            (0..net.links().len())
                .filter(|&o| o != c)
                .any(|o| classify_pair(net, c.min(o), c.max(o)).is_some())
        })
        .count();
    Ok(coverage(&center, congested))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{build_cube, build_linear, build_two_cube, SharingMode};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn cube_multiplicities() {
        let net = build_cube();
        let map = congestion_coordinates(&pairwise_congestion(&net));
        assert_eq!(map.point_multiplicity.len(), 7);
        let body = RationalPoint3::new(r(1, 2), r(1, 2), r(1, 2));
        assert_eq!(map.point_multiplicity[&body].multiplicity(), 4);
        for (p, e) in &map.point_multiplicity {
            if *p != body {
                assert_eq!(e.multiplicity(), 2, "face centre {p}");
                let halves = p.coords().iter().filter(|c| !c.is_integer()).count();
                assert_eq!(halves, 2);
            }
        }
        assert!(congestion_coordinates(&[]).point_multiplicity.is_empty());
    }

    #[test]
    fn plane_sharing_redundant_centre() {
        let net = build_two_cube(SharingMode::Plane);
        let map = congestion_coordinates(&pairwise_congestion(&net));
        let centre = RationalPoint3::new(r(1, 2), r(1, 2), 1.into());
        assert_eq!(redundant_points(&net, &map), vec![centre]);
        assert!(redundant_points(
            &build_cube(),
            &congestion_coordinates(&pairwise_congestion(&build_cube()))
        )
        .is_empty());
    }

    #[test]
    fn fully_congested_node_unit_links() {
        let node_net = build_two_cube(SharingMode::Node);
        let events = pairwise_congestion(&node_net);
        assert!(corollary2_check(&node_net, GridNode::new(1, 1, 1), &events).unwrap());

        let plane = build_two_cube(SharingMode::Plane);
        let events = pairwise_congestion(&plane);
        assert!(!corollary2_check(&plane, GridNode::new(0, 0, 1), &events).unwrap());

        let cube = build_cube();
        let events = pairwise_congestion(&cube);
        for &n in cube.nodes() {
            assert!(matches!(
                corollary2_check(&cube, n, &events),
                Err(Error::Precondition(_))
            ));
        }
    }

    #[test]
    fn paradox_small_networks() {
        let lin = paradox_metrics(&build_linear());
        assert_eq!(lin.fraction_congested, Rational::zero());

        let cube = paradox_metrics(&build_cube());
        assert_eq!(cube.links_total, 28);
        assert_eq!(cube.links_congested, 16);
        assert_eq!(cube.fraction_congested, r(16, 28));
        assert_eq!(cube.point_coordinate_count, 7);
        assert!(cube.full_nodes.is_empty());
        assert_eq!(cube.external_count, 0);
    }

    #[test]
    fn center_coverage_rejects_even_or_small() {
        assert!(center_cube_coverage(1, 1, 1).is_err());
        assert!(center_cube_coverage(3, 3, 2).is_err());
        assert!(center_cube_coverage(4, 3, 3).is_err());
    }

    #[test]
    fn externality_ordering() {
        let ext = |m| externality_report(&pairwise_congestion(&build_two_cube(m))).len();
        let (p, e, n) = (
            ext(SharingMode::Plane),
            ext(SharingMode::Edge),
            ext(SharingMode::Node),
        );
        assert_eq!(p, 0);
        assert!(e >= 1);
        assert!(n >= e, "node {n} < edge {e}");
    }
}
