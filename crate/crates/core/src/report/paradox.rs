use serde::Serialize;

use super::export::node_list;
use super::SCHEMA_VERSION;
use crate::congestion::{center_cube_coverage_in, pairwise_congestion_par, paradox_metrics_from};
use crate::error::{Error, Result};
use crate::geometry::Rational;
use crate::network::NetworkSelector;

/// Lattice sizes swept when no `--network` is given.
pub const DEFAULT_SERIES: [(i64, i64, i64); 5] =
    [(1, 1, 1), (1, 1, 2), (1, 2, 2), (2, 2, 2), (3, 3, 3)];

/// Congestion growth for one lattice size. Center columns are empty when
/// the lattice has no center cube.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParadoxRow {
    pub network: String,
    pub nodes: usize,
    pub links: usize,
    pub links_congested: usize,
    pub fraction_congested: Rational,
    pub uncongested_links: usize,
    pub point_coordinates: usize,
    pub point_events: usize,
    pub line_events: usize,
    pub full_events: usize,
    pub full_node_count: usize,
    pub full_nodes: String,
    pub external_events: usize,
    pub center_links: Option<usize>,
    pub center_congested: Option<usize>,
    pub center_all_congested: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ParadoxDoc {
    pub schema_version: u32,
    pub rows: Vec<ParadoxRow>,
}

pub fn paradox_row(selector: NetworkSelector, node_cap: usize) -> Result<ParadoxRow> {
    let NetworkSelector::Lattice(nx, ny, nz) = selector else {
        return Err(Error::InvalidSelector(format!(
            "{selector} (the paradox series needs lattice:nx,ny,nz)"
        )));
    };
    let net = selector.build(node_cap)?;
    let events = pairwise_congestion_par(&net);
    let m = paradox_metrics_from(&net, &events);
    let has_center = [nx, ny, nz].iter().all(|&d| d >= 3 && d % 2 == 1);
    let center = has_center
        .then(|| center_cube_coverage_in(&net, &events))
        .transpose()?;
    Ok(ParadoxRow {
        network: selector.to_string(),
        nodes: net.nodes().len(),
        links: m.links_total,
        links_congested: m.links_congested,
        fraction_congested: m.fraction_congested,
        uncongested_links: m.links_total - m.links_congested,
        point_coordinates: m.point_coordinate_count,
        point_events: m.point_events,
        line_events: m.line_events,
        full_events: m.full_events,
        full_node_count: m.full_nodes.len(),
        full_nodes: node_list(&m.full_nodes),
        external_events: m.external_count,
        center_links: center.as_ref().map(|c| c.center_links),
        center_congested: center.as_ref().map(|c| c.congested),
        center_all_congested: center.as_ref().map(|c| c.all_congested),
    })
}

pub fn paradox_csv(rows: &[ParadoxRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| std::io::Error::other(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn paradox_doc(rows: Vec<ParadoxRow>) -> ParadoxDoc {
    ParadoxDoc {
        schema_version: SCHEMA_VERSION,
        rows,
    }
}
