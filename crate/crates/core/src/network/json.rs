use serde::{Deserialize, Serialize};

use super::{GridNode, LinkKind, Network, NetworkLabel, NetworkSelector};
use crate::error::{Error, Result};
use crate::geometry::Box3;

pub const NETWORK_SCHEMA_VERSION: u32 = 1;

/// Versioned JSON form of a [`Network`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetworkDoc {
    pub schema_version: u32,
    pub label: String,
    pub nodes: Vec<[i64; 3]>,
    pub links: Vec<LinkDoc>,
    /// Min corners of the unit cubes.
    pub cubes: Vec<[i64; 3]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub shared_nodes: Vec<[i64; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkDoc {
    pub a: usize,
    pub b: usize,
    pub kind: String,
}

impl Network {
    pub fn to_doc(&self) -> NetworkDoc {
        let index = |n: GridNode| self.node_index(n).expect("link endpoint is a node");
        NetworkDoc {
            schema_version: NETWORK_SCHEMA_VERSION,
            label: self.label.to_string(),
            nodes: self.nodes.iter().map(GridNode::coords).collect(),
            links: self
                .links
                .iter()
                .map(|l| {
                    let (a, b) = l.endpoints();
                    LinkDoc {
                        a: index(a),
                        b: index(b),
                        kind: l.kind().to_string(),
                    }
                })
                .collect(),
            cubes: self.cubes.iter().map(Box3::min).collect(),
            shared_nodes: self.shared.iter().map(GridNode::coords).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_doc()).expect("network doc serializes");
        s.push('\n');
        s
    }

    /// Rebuilds a network from its document, checking that the document is
    /// a complete network with consistent kinds.
    pub fn from_doc(doc: &NetworkDoc) -> Result<Network> {
        if doc.schema_version != NETWORK_SCHEMA_VERSION {
            return Err(Error::Document(format!(
                "unsupported schema_version {}",
                doc.schema_version
            )));
        }
        let label = parse_label(&doc.label)?;
        let nodes: Vec<GridNode> = doc.nodes.iter().copied().map(GridNode::from).collect();
        let cubes = doc.cubes.iter().copied().map(Box3::unit).collect();
        let shared = doc
            .shared_nodes
            .iter()
            .copied()
            .map(GridNode::from)
            .collect();
        let net = Network::complete(label, nodes.clone(), cubes, shared)?;
        if net.nodes != nodes {
            return Err(Error::Document(
                "nodes must be distinct and in lexicographic order".into(),
            ));
        }
        if doc.links.len() != net.links.len() {
            return Err(Error::Document(format!(
                "expected {} links for a complete network, found {}",
                net.links.len(),
                doc.links.len()
            )));
        }
        for (ld, link) in doc.links.iter().zip(&net.links) {
            let (a, b) = link.endpoints();
            let kind: LinkKind = ld.kind.parse()?;
            if nodes.get(ld.a) != Some(&a) || nodes.get(ld.b) != Some(&b) || kind != link.kind() {
                return Err(Error::Document(format!(
                    "link {}-{} ({}) does not match the canonical link {link}",
                    ld.a, ld.b, ld.kind
                )));
            }
        }
        Ok(net)
    }

    pub fn from_json(s: &str) -> Result<Network> {
        let doc: NetworkDoc = serde_json::from_str(s)?;
        Network::from_doc(&doc)
    }
}

fn parse_label(s: &str) -> Result<NetworkLabel> {
    let sel: NetworkSelector = s
        .parse()
        .map_err(|_| Error::Document(format!("unknown network label {s:?}")))?;
    Ok(match sel {
        NetworkSelector::Linear => NetworkLabel::Linear,
        NetworkSelector::Plane => NetworkLabel::Plane,
        NetworkSelector::Cube => NetworkLabel::Cube,
        NetworkSelector::TwoCube(m) => NetworkLabel::TwoCube(m),
        NetworkSelector::Lattice(nx, ny, nz) => NetworkLabel::Lattice { nx, ny, nz },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{build_cube, build_lattice, build_linear, build_two_cube, SharingMode};

    #[test]
    fn round_trip() {
        for net in [
            build_linear(),
            build_cube(),
            build_two_cube(SharingMode::Edge),
            build_lattice(2, 1, 1).unwrap(),
        ] {
            let json = net.to_json();
            let back = Network::from_json(&json).unwrap();
            assert_eq!(back, net);
            assert_eq!(back.to_json(), json);
        }
    }

    #[test]
    fn cube_document_shape() {
        let doc = build_cube().to_doc();
        assert_eq!(doc.schema_version, 1);
        assert_eq!(doc.nodes.len(), 8);
        assert_eq!(doc.links.len(), 28);
        assert_eq!(doc.nodes[0], [0, 0, 0]);
        assert_eq!(doc.nodes[7], [1, 1, 1]);
        assert_eq!(doc.links[0].kind, "unit");
    }

    #[test]
    fn tampered_documents_rejected() {
        let mut doc = build_cube().to_doc();
        doc.links[0].kind = "long_edge".into();
        assert!(Network::from_doc(&doc).is_err());

        let mut doc = build_cube().to_doc();
        doc.links.pop();
        assert!(Network::from_doc(&doc).is_err());

        let mut doc = build_cube().to_doc();
        doc.nodes.swap(0, 1);
        assert!(Network::from_doc(&doc).is_err());

        let mut doc = build_cube().to_doc();
        doc.schema_version = 9;
        assert!(Network::from_doc(&doc).is_err());
    }
}
