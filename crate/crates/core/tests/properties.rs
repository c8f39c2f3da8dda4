use proptest::prelude::*;

use cubenet::congestion::{
    congestion_coordinates, pairwise_congestion, pairwise_congestion_par, paradox_metrics_from,
    redundant_points, CongestionKind,
};
use cubenet::equilibrium::{
    best_response, kt_verify, payoff, sample_best_response, Allocation, PlayerProblem,
};
use cubenet::geometry::Rational;
use cubenet::network::{build_two_cube, GridNode, SharingMode};

fn rational(max: i64) -> impl Strategy<Value = Rational> {
    (1..=max, 1..=4i64).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

/// Destinations, costs, margins `b - c` and storage cost.
fn problem() -> impl Strategy<Value = PlayerProblem> {
    (1..=7usize)
        .prop_flat_map(|k| {
            (
                prop::collection::vec(rational(8), k),
                prop::collection::vec(rational(4), k),
                rational(6),
            )
        })
        .prop_map(|(costs, margins, c_self)| {
            let k = costs.len();
            let benefits = costs.iter().zip(&margins).map(|(c, m)| c + m).collect();
            PlayerProblem::new(0, (1..=k).collect(), benefits, costs, c_self).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn kt_holds_iff_payoff_is_optimal(p in problem(), weights in prop::collection::vec(0..4i64, 8)) {
        let n = p.destinations().len() + 1;
        let w = &weights[..n];
        let total: i64 = w.iter().sum();
        prop_assume!(total > 0);
        let x = Allocation::new(
            Rational::new(w[0], total).unwrap(),
            w[1..].iter().map(|&k| Rational::new(k, total).unwrap()).collect(),
        )
        .unwrap();
        let optimal = payoff(&p, &x).unwrap() == best_response(&p).value;
        prop_assert_eq!(kt_verify(&p, &x).is_satisfied(), optimal);
    }

    #[test]
    fn same_margins_same_best_response(p in problem(), shift in rational(5)) {
        // Raising benefit and cost together keeps every b - c unchanged.
        let shifted = PlayerProblem::new(
            0,
            p.destinations().to_vec(),
            p.benefits().iter().map(|b| b + &shift).collect(),
            p.costs().iter().map(|c| c + &shift).collect(),
            p.storage_cost().clone(),
        )
        .unwrap();
        let (a, b) = (best_response(&p), best_response(&shifted));
        prop_assert_eq!(a.argmax_set, b.argmax_set);
        prop_assert_eq!(a.certificate, b.certificate);
    }

    #[test]
    fn samples_are_feasible_best_responses(p in problem(), seed in any::<u64>()) {
        let x = sample_best_response(&p, seed);
        prop_assert!(x.x_self.is_zero());
        prop_assert_eq!(x.total(), Rational::one());
        prop_assert_eq!(payoff(&p, &x).unwrap(), best_response(&p).value);
        prop_assert!(kt_verify(&p, &x).is_satisfied());
    }
}

#[test]
fn two_cube_regression_values() {
    // (mode, congested links, point coordinates, point/line/full events, external)
    let expected = [
        (SharingMode::Plane, 58, 41, (73, 8, 36), 0),
        (SharingMode::Edge, 73, 61, (123, 12, 72), 10),
        (SharingMode::Node, 81, 62, (150, 14, 105), 18),
    ];
    for (mode, congested, coords, (point, line, full), external) in expected {
        let net = build_two_cube(mode);
        let events = pairwise_congestion(&net);
        assert_eq!(events, pairwise_congestion_par(&net), "{mode:?}");
        let m = paradox_metrics_from(&net, &events);
        assert_eq!(m.links_congested, congested, "{mode:?}");
        assert_eq!(m.point_coordinate_count, coords, "{mode:?}");
        assert_eq!(
            (m.point_events, m.line_events, m.full_events),
            (point, line, full)
        );
        assert_eq!(m.external_count, external, "{mode:?}");
    }
}

#[test]
fn edge_sharing_hotspot() {
    let net = build_two_cube(SharingMode::Edge);
    let map = congestion_coordinates(&pairwise_congestion(&net));
    let half = Rational::new(1, 2).unwrap();
    let p = cubenet::geometry::RationalPoint3::new(1.into(), 1.into(), half);
    assert_eq!(map.point_multiplicity[&p].multiplicity(), 7);
    assert_eq!(map.point_multiplicity[&p].kind, CongestionKind::Point);
}

#[test]
fn full_nodes_by_sharing_mode() {
    let full = |mode| {
        paradox_metrics_from(
            &build_two_cube(mode),
            &pairwise_congestion(&build_two_cube(mode)),
        )
        .full_nodes
    };
    assert_eq!(full(SharingMode::Node), vec![GridNode::new(1, 1, 1)]);
    assert_eq!(
        full(SharingMode::Edge),
        vec![GridNode::new(1, 1, 0), GridNode::new(1, 1, 1)]
    );
    assert_eq!(full(SharingMode::Plane).len(), 4);
}

#[test]
fn plane_sharing_has_one_redundant_point() {
    let net = build_two_cube(SharingMode::Plane);
    let map = congestion_coordinates(&pairwise_congestion(&net));
    let points = redundant_points(&net, &map);
    assert_eq!(points.len(), 1);
    assert_eq!(points[0].to_string(), "(1/2 1/2 1/1)");
}
