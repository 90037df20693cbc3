//! Clique sequence of a proper interval component and the bypass operation.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{MultiGraph, VertexId, VertexSet};
use crate::recognition::ProperIntervalOrdering;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliquePartition {
    /// Cliques in left-to-right order; each lists its vertices in ordering order.
    pub cliques: Vec<Vec<VertexId>>,
    index: BTreeMap<VertexId, usize>,
    position: BTreeMap<VertexId, usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("ordering is not a proper interval ordering of the component")]
    InvalidOrdering,
    #[error("clique index {0} is a boundary clique or out of range (t = {1})")]
    Boundary(usize, usize),
    #[error("clique {0} has no neighbour in an adjacent clique")]
    MissingAttachment(usize),
}

impl CliquePartition {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn clique_of(&self, v: VertexId) -> Option<usize> {
        self.index.get(&v).copied()
    }

    /// Position of `v` in the underlying ordering.
    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.position.get(&v).copied()
    }

    pub fn clique_set(&self, i: usize) -> VertexSet {
        self.cliques[i].iter().copied().collect()
    }

    /// Minimum of clique `i` under the ordering.
    pub fn first_vertex(&self, i: usize) -> VertexId {
        self.cliques[i][0]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.cliques.iter().flatten().copied()
    }

    /// Vertices of clique `i` adjacent to some vertex of clique `j`.
    pub fn attachment(&self, g: &MultiGraph, i: usize, j: usize) -> Vec<VertexId> {
        let target = &self.cliques[j];
        self.cliques[i].iter().copied().filter(|&u| target.iter().any(|&w| g.adjacent(u, w))).collect()
    }
}

/// Greedy left-to-right partition: the first remaining vertex together with its
/// later neighbours forms the next clique.
pub fn build_clique_partition(
    g: &MultiGraph,
    ordering: &ProperIntervalOrdering,
) -> Result<CliquePartition, PartitionError> {
    let order = ordering.vertices();
    let comp: VertexSet = order.iter().copied().collect();
    if !ordering.is_valid_for(g, &comp) {
        return Err(PartitionError::InvalidOrdering);
    }
    let mut cliques = Vec::new();
    let mut index = BTreeMap::new();
    let position: BTreeMap<VertexId, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut i = 0;
    while i < order.len() {
        let head = order[i];
        let mut j = i + 1;
        while j < order.len() && g.adjacent(head, order[j]) {
            j += 1;
        }
        for &v in &order[i..j] {
            index.insert(v, cliques.len());
        }
        cliques.push(order[i..j].to_vec());
        i = j;
    }
    Ok(CliquePartition { cliques, index, position })
}

/// Removes clique `l` (0-based, strictly inside) and joins its two attachment sets.
/// Returns the added edges.
pub fn bypass(g: &mut MultiGraph, p: &CliquePartition, l: usize) -> Result<Vec<(VertexId, VertexId)>, PartitionError> {
    let t = p.len();
    if l == 0 || l + 1 >= t {
        return Err(PartitionError::Boundary(l, t));
    }
    let middle = p.clique_set(l);
    let left: Vec<VertexId> = p.cliques[l - 1].iter().copied().filter(|&u| middle.iter().any(|&m| g.adjacent(u, m))).collect();
    let right: Vec<VertexId> = p.cliques[l + 1].iter().copied().filter(|&u| middle.iter().any(|&m| g.adjacent(u, m))).collect();
    if left.is_empty() || right.is_empty() {
        return Err(PartitionError::MissingAttachment(l));
    }
    g.remove_vertices(&middle).expect("clique vertices belong to the graph");
    let mut added = Vec::new();
    for &a in &left {
        for &b in &right {
            if !g.adjacent(a, b) {
                g.add_edge(a, b, 1).expect("attachment vertices belong to the graph");
                added.push((a, b));
            }
        }
    }
    Ok(added)
}
