use std::collections::BTreeSet;

use super::CongestionEvent;

/// Links as vertices, joined when they share a congestion event.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConflictGraph {
    adjacency: Vec<BTreeSet<usize>>,
}

impl ConflictGraph {
    /// `vertices` vertices, numbered `0..vertices`, with the given edges.
    /// Self-loops are dropped.
    pub fn from_edges(vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adjacency = vec![BTreeSet::new(); vertices];
        for (a, b) in edges {
            if a != b {
                adjacency[a].insert(b);
                adjacency[b].insert(a);
            }
        }
        ConflictGraph { adjacency }
    }

    /// Vertices are link indices `0..link_count`.
    pub fn from_events(link_count: usize, events: &[CongestionEvent]) -> Self {
        ConflictGraph::from_edges(link_count, events.iter().map(|e| e.links))
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adjacency[v]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }
}

/// Greedy maximal independent set: vertices by ascending degree, ties by
/// vertex index. For graphs built from a network, index order is the
/// lexicographic endpoint order of the links.
pub fn permit_assignment(g: &ConflictGraph) -> BTreeSet<usize> {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut blocked = vec![false; g.vertex_count()];
    let mut chosen = BTreeSet::new();
    for v in order {
        if blocked[v] {
            continue;
        }
        chosen.insert(v);
        for &n in g.neighbors(v) {
            blocked[n] = true;
        }
    }
    chosen
}
