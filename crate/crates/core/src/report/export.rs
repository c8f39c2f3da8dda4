use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::SCHEMA_VERSION;
use crate::congestion::{
    congestion_coordinates, corollary2_check, paradox_metrics_from, permit_assignment,
    redundant_points, ConflictGraph, CongestionEvent, CongestionKind, Locus, ParadoxMetrics,
};
use crate::error::Result;
use crate::geometry::{Rational, RationalPoint3};
use crate::network::{GridNode, Network};

/// Undirected DOT graph: one node per lattice point labeled `l,m,n`, one
/// edge per link carrying its kind.
pub fn network_dot(net: &Network) -> String {
    let mut s = String::new();
    writeln!(s, "graph \"{}\" {{", net.label()).unwrap();
    for n in net.nodes() {
        writeln!(s, "  \"{n}\" [pos=\"{},{},{}\"];", n.l, n.m, n.n).unwrap();
    }
    for link in net.links() {
        let (a, b) = link.endpoints();
        writeln!(s, "  \"{a}\" -- \"{b}\" [kind=\"{}\"];", link.kind()).unwrap();
    }
    s.push_str("}\n");
    s
}

/// Wavefront OBJ with nodes as vertices and links as line elements.
pub fn network_obj(net: &Network) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "# {} {} nodes {} links",
        net.label(),
        net.nodes().len(),
        net.links().len()
    )
    .unwrap();
    writeln!(s, "o {}", net.label()).unwrap();
    for n in net.nodes() {
        writeln!(s, "v {} {} {}", n.l, n.m, n.n).unwrap();
    }
    for link in net.links() {
        let (a, b) = link.endpoints();
        let ia = net.node_index(a).expect("endpoint is a node") + 1;
        let ib = net.node_index(b).expect("endpoint is a node") + 1;
        writeln!(s, "l {ia} {ib}").unwrap();
    }
    s
}

#[derive(Serialize)]
struct LinkRow<'a> {
    index: usize,
    a: String,
    b: String,
    kind: &'a str,
}

pub fn links_csv(net: &Network) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for (index, link) in net.links().iter().enumerate() {
        let (a, b) = link.endpoints();
        w.serialize(LinkRow {
            index,
            a: a.to_string(),
            b: b.to_string(),
            kind: link.kind().as_str(),
        })?;
    }
    finish_csv(w)
}

#[derive(Serialize)]
struct EventRow {
    kind: CongestionKind,
    link_a: usize,
    link_b: usize,
    link_a_nodes: String,
    link_b_nodes: String,
    x: Rational,
    y: Rational,
    z: Rational,
    locus: String,
    at_node: String,
    external: bool,
    whole_unit: bool,
}

/// One row per event; coordinates are the locus point (the overlap midpoint
/// for line congestion) as exact fractions.
pub fn events_csv(net: &Network, events: &[CongestionEvent]) -> Result<String> {
    let nodes = |i: usize| {
        let (a, b) = net.links()[i].endpoints();
        format!("{a}-{b}")
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    for e in events {
        let [x, y, z] = owned(&e.locus.representative());
        w.serialize(EventRow {
            kind: e.kind,
            link_a: e.links.0,
            link_b: e.links.1,
            link_a_nodes: nodes(e.links.0),
            link_b_nodes: nodes(e.links.1),
            x,
            y,
            z,
            locus: e.locus.to_string(),
            at_node: e.at_node.map(|n| n.to_string()).unwrap_or_default(),
            external: e.external,
            whole_unit: e.whole_unit,
        })?;
    }
    finish_csv(w)
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w
        .into_inner()
        .map_err(|e| std::io::Error::other(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[derive(Clone, Debug, Serialize)]
pub struct CoordinateDoc {
    pub point: [Rational; 3],
    pub kind: CongestionKind,
    pub multiplicity: usize,
    pub links: Vec<usize>,
    pub external: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LineDoc {
    pub links: [usize; 2],
    pub from: [Rational; 3],
    pub to: [Rational; 3],
    pub whole_unit: bool,
    pub external: bool,
}

/// Congestion coordinates of one network.
#[derive(Clone, Debug, Serialize)]
pub struct CongestionMapDoc {
    pub schema_version: u32,
    pub network: String,
    pub coordinates: Vec<CoordinateDoc>,
    pub line_congestion: Vec<LineDoc>,
    pub redundant_points: Vec<[Rational; 3]>,
}

pub fn congestion_map_doc(net: &Network, events: &[CongestionEvent]) -> CongestionMapDoc {
    let map = congestion_coordinates(events);
    let mut external: BTreeMap<&RationalPoint3, bool> = BTreeMap::new();
    for e in events {
        if let Locus::Point(p) = &e.locus {
            *external.entry(p).or_default() |= e.external;
        }
    }
    let coordinates = map
        .point_multiplicity
        .iter()
        .map(|(p, entry)| CoordinateDoc {
            point: owned(p),
            kind: entry.kind,
            multiplicity: entry.multiplicity(),
            links: entry.links.iter().copied().collect(),
            external: external.get(p).copied().unwrap_or(false),
        })
        .collect();
    let line_congestion = events
        .iter()
        .filter_map(|e| match &e.locus {
            Locus::Segment(s) => Some(LineDoc {
                links: [e.links.0, e.links.1],
                from: owned(s.a()),
                to: owned(s.b()),
                whole_unit: e.whole_unit,
                external: e.external,
            }),
            Locus::Point(_) => None,
        })
        .collect();
    CongestionMapDoc {
        schema_version: SCHEMA_VERSION,
        network: net.label().to_string(),
        coordinates,
        line_congestion,
        redundant_points: redundant_points(net, &map).iter().map(owned).collect(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FullNodeDoc {
    pub node: String,
    pub shared: bool,
    pub unit_links_line_congested: bool,
}

/// Headline numbers of one congestion sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SummaryDoc {
    pub schema_version: u32,
    pub network: String,
    pub nodes: usize,
    pub links: usize,
    pub census: BTreeMap<String, usize>,
    pub events: usize,
    pub line_congestion_events: usize,
    pub point_congestion_events: usize,
    pub full_congestion_events: usize,
    pub point_coordinates: usize,
    pub links_congested: usize,
    pub fraction_congested: Rational,
    pub external_events: usize,
    pub full_nodes: Vec<FullNodeDoc>,
    pub permit_holders: usize,
}

pub fn summary_doc(net: &Network, events: &[CongestionEvent]) -> Result<SummaryDoc> {
    let m: ParadoxMetrics = paradox_metrics_from(net, events);
    let full_nodes = m
        .full_nodes
        .iter()
        .map(|&n| {
            Ok(FullNodeDoc {
                node: n.to_string(),
                shared: net.shared_nodes().contains(&n),
                unit_links_line_congested: corollary2_check(net, n, events)?,
            })
        })
        .collect::<Result<_>>()?;
    let permits = permit_assignment(&ConflictGraph::from_events(net.links().len(), events));
    Ok(SummaryDoc {
        schema_version: SCHEMA_VERSION,
        network: net.label().to_string(),
        nodes: net.nodes().len(),
        links: net.links().len(),
        census: net
            .link_census()
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
        events: events.len(),
        line_congestion_events: m.line_events,
        point_congestion_events: m.point_events,
        full_congestion_events: m.full_events,
        point_coordinates: m.point_coordinate_count,
        links_congested: m.links_congested,
        fraction_congested: m.fraction_congested,
        external_events: m.external_count,
        full_nodes,
        permit_holders: permits.len(),
    })
}

fn owned(p: &RationalPoint3) -> [Rational; 3] {
    p.coords().map(Clone::clone)
}

pub(crate) fn node_list(nodes: &[GridNode]) -> String {
    nodes
        .iter()
        .map(GridNode::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub(crate) fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}
