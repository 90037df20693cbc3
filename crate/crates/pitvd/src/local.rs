//! Dense, index-addressed snapshot of a vertex subset, used by the hot loops
//! of recognition and search. Multiplicities are dropped.

use std::collections::{HashMap, VecDeque};

use crate::graph::{MultiGraph, VertexId, VertexSet};

#[derive(Clone, Debug)]
pub(crate) struct LocalGraph {
    pub ids: Vec<VertexId>,
    pub index: HashMap<VertexId, usize>,
    pub adj: Vec<Vec<usize>>,
    words: usize,
    bits: Vec<u64>,
}

impl LocalGraph {
    pub fn new(g: &MultiGraph, keep: &VertexSet) -> Self {
        let ids: Vec<VertexId> = keep.iter().copied().filter(|&v| g.has_vertex(v)).collect();
        let index: HashMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let n = ids.len();
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * words];
        let mut adj = vec![Vec::new(); n];
        for (i, &v) in ids.iter().enumerate() {
            for u in g.neighbor_ids(v) {
                if let Some(&j) = index.get(&u) {
                    adj[i].push(j);
                    bits[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        LocalGraph { ids, index, adj, words, bits }
    }

    pub fn whole(g: &MultiGraph) -> Self {
        Self::new(g, &g.vertex_set())
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    #[inline]
    pub fn has(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn to_ids(&self, idx: &[usize]) -> Vec<VertexId> {
        idx.iter().map(|&i| self.ids[i]).collect()
    }

    /// BFS from `s` that never expands vertices flagged in `sink`, and never enters `blocked`.
    /// Returns parent pointers (`usize::MAX` = unreached, `s` maps to itself).
    pub fn bfs(&self, s: usize, blocked: &[bool], sink: &[bool]) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.len()];
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if v != s && sink[v] {
                continue;
            }
            for &u in &self.adj[v] {
                if parent[u] == usize::MAX && !blocked[u] {
                    parent[u] = v;
                    queue.push_back(u);
                }
            }
        }
        parent
    }

    pub fn path_from_parents(parent: &[usize], t: usize) -> Vec<usize> {
        let mut path = vec![t];
        let mut cur = t;
        while parent[cur] != cur {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }
}
