use std::fmt;

use serde::Serialize;

use super::SCHEMA_VERSION;
use crate::congestion::{
    center_cube_coverage_direct, congestion_coordinates, corollary2_check, pairwise_congestion,
    CongestionKind,
};
use crate::equilibrium::{best_response, PlayerProblem};
use crate::network::{
    build_cube, build_lattice, build_two_cube, GridNode, LinkKind, Network, SharingMode,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimRow {
    pub id: String,
    /// Where the published claim is made, in words.
    pub source: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub rows: Vec<ClaimRow>,
    pub pass: bool,
}

impl VerificationReport {
    fn from_rows(rows: Vec<ClaimRow>) -> Self {
        let pass = rows.iter().all(|r| r.pass);
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            rows,
            pass,
        }
    }

    pub fn row(&self, id: &str) -> Option<&ClaimRow> {
        self.rows.iter().find(|r| r.id == id)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.rows.iter().map(|r| r.id.len()).max().unwrap_or(0);
        for r in &self.rows {
            writeln!(
                f,
                "{} {:width$}  expected {}  computed {}",
                if r.pass { "PASS" } else { "FAIL" },
                r.id,
                r.expected,
                r.computed,
            )?;
        }
        write!(f, "{}", if self.pass { "ALL PASS" } else { "FAILED" })
    }
}

struct Rows(Vec<ClaimRow>);

impl Rows {
    fn check(&mut self, id: &str, source: &str, expected: impl ToString, computed: impl ToString) {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        self.0.push(ClaimRow {
            id: id.into(),
            source: source.into(),
            pass: expected == computed,
            expected,
            computed,
        });
    }
}

fn census_string(net: &Network) -> String {
    net.link_census()
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Recomputes every count the published analysis states and compares.
pub fn verify_paper() -> VerificationReport {
    let mut rows = Rows(Vec::new());

    let plane = build_two_cube(SharingMode::Plane);
    rows.check(
        "plane-sharing links = 66",
        "two cubes sharing a face: a total of 66 links",
        66,
        plane.links().len(),
    );
    let expected_census = [
        (LinkKind::Unit, 20),
        (LinkKind::PlanarDiagonal, 22),
        (LinkKind::SpatialDiagonal, 8),
        (LinkKind::LongPlanarDiagonal, 8),
        (LinkKind::LongSpatialDiagonal, 4),
        (LinkKind::LongEdge, 4),
    ]
    .iter()
    .map(|(k, v)| format!("{k}={v}"))
    .collect::<Vec<_>>()
    .join(" ");
    rows.check(
        "plane-sharing census",
        "two cubes sharing a face: 20 unit, 22 planar diagonal, 8 spatial diagonal links",
        expected_census,
        census_string(&plane),
    );
    rows.check(
        "edge-sharing paths = 91",
        "two cubes sharing an edge: a total of 91 paths",
        91,
        build_two_cube(SharingMode::Edge).links().len(),
    );
    let node = build_two_cube(SharingMode::Node);
    rows.check(
        "node-sharing paths = 105",
        "two cubes sharing a node: a total of 105 paths",
        105,
        node.links().len(),
    );
    let cube = build_cube();
    rows.check(
        "single-cube links = 28",
        "single cube: a total of 28 links",
        28,
        cube.links().len(),
    );

    let plane_events = pairwise_congestion(&plane);
    rows.check(
        "plane-sharing line congestion = 8",
        "two cubes sharing a face: eight possible line congestions",
        8,
        plane_events
            .iter()
            .filter(|e| e.kind == CongestionKind::Line)
            .count(),
    );

    let cube_events = pairwise_congestion(&cube);
    let cube_map = congestion_coordinates(&cube_events);
    rows.check(
        "single-cube point coordinates = 7",
        "single cube: face centers and body center (pairwise sweep)",
        7,
        cube_map.coordinates_of(CongestionKind::Point).count(),
    );
    rows.check(
        "single-cube line/full events = 0/0",
        "single cube: no line or full congestion",
        "0/0",
        format!(
            "{}/{}",
            cube_events
                .iter()
                .filter(|e| e.kind == CongestionKind::Line)
                .count(),
            cube_events
                .iter()
                .filter(|e| e.kind == CongestionKind::Full)
                .count()
        ),
    );

    let node_events = pairwise_congestion(&node);
    let shared = GridNode::new(1, 1, 1);
    let full_at_shared = node_events
        .iter()
        .any(|e| e.kind == CongestionKind::Full && e.at_node == Some(shared));
    rows.check(
        "node-sharing full congestion at shared node",
        "two cubes sharing a node: paths through the shared node",
        true,
        full_at_shared,
    );
    rows.check(
        "node-sharing shared node unit links line congested",
        "all unit links of a fully congested node are line congested",
        true,
        corollary2_check(&node, shared, &node_events).unwrap_or(false),
    );

    let coverage = build_lattice(3, 3, 3).and_then(|net| center_cube_coverage_direct(&net));
    rows.check(
        "lattice 3,3,3 center cube filled",
        "the interior of the center cube will be filled with congestion",
        "28/28",
        match coverage {
            Ok(c) => format!("{}/{}", c.congested, c.center_links),
            Err(e) => e.to_string(),
        },
    );

    let computed = PlayerProblem::new(0, vec![1], vec![3.into()], vec![1.into()], 2.into())
        .map(|p| {
            let br = best_response(&p);
            format!("({}, {})", br.representative.x_self, br.representative.x[0])
        })
        .unwrap_or_else(|e| e.to_string());
    rows.check(
        "two-node best response = (0, 1)",
        "two-node player: the largest payoff ships everything",
        "(0/1, 1/1)",
        computed,
    );

    VerificationReport::from_rows(rows.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_display_marks_failures() {
        let report = VerificationReport::from_rows(vec![
            ClaimRow {
                id: "a".into(),
                source: String::new(),
                expected: "1".into(),
                computed: "1".into(),
                pass: true,
            },
            ClaimRow {
                id: "b".into(),
                source: String::new(),
                expected: "1".into(),
                computed: "2".into(),
                pass: false,
            },
        ]);
        assert!(!report.pass);
        let text = report.to_string();
        assert!(text.contains("PASS a"));
        assert!(text.contains("FAIL b"));
        assert!(text.ends_with("FAILED"));
    }
}
