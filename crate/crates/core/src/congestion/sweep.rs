use rayon::prelude::*;

use super::{CongestionEvent, CongestionKind, Locus};
use crate::geometry::{intersect_segments, point_in_box_union, IntersectionResult, Segment};
use crate::network::{GridNode, Link, Network};

fn boxes_overlap(a: &Link, b: &Link) -> bool {
    let (amin, amax) = a.bounds();
    let (bmin, bmax) = b.bounds();
    (0..3).all(|k| amin[k] <= bmax[k] && bmin[k] <= amax[k])
}

fn is_external(net: &Network, locus: &Locus) -> bool {
    // Networks without volume (linear, plane) have nothing to be outside of.
    point_in_box_union(&locus.representative(), net.cubes()).is_ok_and(|inside| !inside)
}

fn spans_unit_link(s: &Segment) -> bool {
    let d = s.direction();
    let nonzero: Vec<_> = d.0.iter().filter(|c| !c.is_zero()).collect();
    nonzero.len() == 1 && nonzero[0].abs() >= 1.into()
}

/// Classifies the interaction between links `i < j` of `net`.
pub fn classify_pair(net: &Network, i: usize, j: usize) -> Option<CongestionEvent> {
    let (li, lj) = (&net.links()[i], &net.links()[j]);
    if !boxes_overlap(li, lj) {
        return None;
    }
    let (kind, locus, at_node) = match intersect_segments(li.segment(), lj.segment()) {
        IntersectionResult::Empty => return None,
        IntersectionResult::Overlap(s) => (CongestionKind::Line, Locus::Segment(s), None),
        IntersectionResult::Point(p) => {
            let node = p
                .as_integer_triple()
                .map(GridNode::from)
                .filter(|n| net.contains_node(*n));
            match node {
                Some(n) if li.touches(n) && lj.touches(n) => return None,
                // The crossing is an endpoint of at most one link, so it is
                // interior to the other.
                Some(n) => (CongestionKind::Full, Locus::Point(p), Some(n)),
                None => (CongestionKind::Point, Locus::Point(p), None),
            }
        }
    };
    let external = is_external(net, &locus);
    let whole_unit = match &locus {
        Locus::Segment(s) => spans_unit_link(s),
        Locus::Point(_) => false,
    };
    Some(CongestionEvent {
        kind,
        links: (i, j),
        locus,
        at_node,
        external,
        whole_unit,
    })
}

fn row(net: &Network, i: usize) -> Vec<CongestionEvent> {
    (i + 1..net.links().len())
        .filter_map(|j| classify_pair(net, i, j))
        .collect()
}

/// All congestion events of `net`, ordered by link pair.
pub fn pairwise_congestion(net: &Network) -> Vec<CongestionEvent> {
    (0..net.links().len()).flat_map(|i| row(net, i)).collect()
}

/// Parallel sweep over rows of the link-pair triangle. Produces exactly the
/// same list as [`pairwise_congestion`].
pub fn pairwise_congestion_par(net: &Network) -> Vec<CongestionEvent> {
    let rows: Vec<Vec<CongestionEvent>> = (0..net.links().len())
        .into_par_iter()
        .map(|i| row(net, i))
        .collect();
    rows.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::geometry::{Rational, RationalPoint3};
    use crate::network::{build_cube, build_linear, build_plane, build_two_cube, SharingMode};

    fn half() -> Rational {
        Rational::new(1, 2).unwrap()
    }

    fn count(events: &[CongestionEvent], kind: CongestionKind) -> usize {
        events.iter().filter(|e| e.kind == kind).count()
    }

    #[test]
    fn linear_has_no_events() {
        assert!(pairwise_congestion(&build_linear()).is_empty());
    }

    #[test]
    fn plane_diagonals_cross() {
        let events = pairwise_congestion(&build_plane());
        assert_eq!(events.len(), 1);
        assert_eq!(events[0].kind, CongestionKind::Point);
        assert_eq!(
            events[0].locus,
            Locus::Point(RationalPoint3::new(half(), half(), 0.into()))
        );
        assert!(!events[0].external);
    }

    #[test]
    fn cube_sweep_kinds() {
        let events = pairwise_congestion(&build_cube());
        assert_eq!(count(&events, CongestionKind::Line), 0);
        assert_eq!(count(&events, CongestionKind::Full), 0);
        // 6 face-diagonal crossings + C(4,2) space-diagonal pairs
        assert_eq!(count(&events, CongestionKind::Point), 12);
        let loci: BTreeSet<_> = events.iter().map(|e| e.locus.clone()).collect();
        assert_eq!(loci.len(), 7);
    }

    #[test]
    fn plane_sharing_line_events() {
        let net = build_two_cube(SharingMode::Plane);
        let events = pairwise_congestion(&net);
        let lines: Vec<_> = events
            .iter()
            .filter(|e| e.kind == CongestionKind::Line)
            .collect();
        assert_eq!(lines.len(), 8);
        for e in lines {
            assert!(e.whole_unit);
            let kinds = [net.links()[e.links.0].kind(), net.links()[e.links.1].kind()];
            assert!(kinds.contains(&crate::network::LinkKind::LongEdge));
            assert!(kinds.contains(&crate::network::LinkKind::Unit));
        }
    }

    #[test]
    fn node_sharing_full_congestion_at_shared_node() {
        let net = build_two_cube(SharingMode::Node);
        let events = pairwise_congestion(&net);
        let shared = GridNode::new(1, 1, 1);
        let a = net.link_index([0, 0, 0].into(), [2, 2, 2].into()).unwrap();
        let b = net.link_index([0, 1, 1].into(), [2, 1, 1].into()).unwrap();
        let e = events
            .iter()
            .find(|e| e.links == (a.min(b), a.max(b)))
            .expect("event between the two long links");
        assert_eq!(e.kind, CongestionKind::Full);
        assert_eq!(e.at_node, Some(shared));
        assert_eq!(e.locus, Locus::Point(shared.point()));
    }

    #[test]
    fn incidence_is_not_congestion() {
        let net = build_cube();
        let a = net.link_index([0, 0, 0].into(), [1, 0, 0].into()).unwrap();
        let b = net.link_index([0, 0, 0].into(), [0, 1, 0].into()).unwrap();
        assert!(classify_pair(&net, a.min(b), a.max(b)).is_none());
    }

    #[test]
    fn parallel_sweep_is_identical() {
        for net in [build_cube(), build_two_cube(SharingMode::Edge)] {
            assert_eq!(pairwise_congestion(&net), pairwise_congestion_par(&net));
        }
    }

    #[test]
    fn event_invariants() {
        for mode in [SharingMode::Plane, SharingMode::Edge, SharingMode::Node] {
            let net = build_two_cube(mode);
            let node_points: BTreeSet<_> = net.nodes().iter().map(GridNode::point).collect();
            let mut pairs = BTreeSet::new();
            for e in pairwise_congestion(&net) {
                assert!(e.links.0 < e.links.1);
                assert!(pairs.insert(e.links), "one event per pair");
                let (si, sj) = (
                    net.links()[e.links.0].segment(),
                    net.links()[e.links.1].segment(),
                );
                match (&e.kind, &e.locus) {
                    (CongestionKind::Point, Locus::Point(p)) => {
                        assert!(!node_points.contains(p));
                        assert!(e.at_node.is_none());
                    }
                    (CongestionKind::Full, Locus::Point(p)) => {
                        assert_eq!(e.at_node.map(|n| n.point()).as_ref(), Some(p));
                        assert!(
                            crate::geometry::point_interior_to_segment(p, si)
                                || crate::geometry::point_interior_to_segment(p, sj)
                        );
                    }
                    (CongestionKind::Line, Locus::Segment(s)) => {
                        for q in [s.a(), s.b()] {
                            assert!(si.contains(q) && sj.contains(q));
                        }
                    }
                    other => panic!("kind/locus mismatch {other:?}"),
                }
                let inside = point_in_box_union(&e.locus.representative(), net.cubes()).unwrap();
                assert_eq!(e.external, !inside);
            }
        }
    }
}
