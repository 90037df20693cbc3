//! Undirected multigraph with stable vertex identities.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

pub type VertexSet = BTreeSet<VertexId>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("self-loop at {0}")]
    SelfLoop(VertexId),
    #[error("vertex {0} already present")]
    DuplicateVertex(VertexId),
    #[error("tail length must be at least 1")]
    EmptyTail,
}

/// Multigraph keyed by `VertexId`; every map is ordered so iteration is deterministic.
#[derive(Clone, Debug, Default)]
pub struct MultiGraph {
    adj: BTreeMap<VertexId, BTreeMap<VertexId, u32>>,
    next_id: u32,
}

impl PartialEq for MultiGraph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for MultiGraph {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PathKind {
    Tail,
    Overbridge,
    Other,
}

/// A maximal path whose internal vertices have degree exactly two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTwoPath {
    pub vertices: Vec<VertexId>,
    pub kind: PathKind,
}

impl DegreeTwoPath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn internal(&self) -> &[VertexId] {
        let n = self.vertices.len();
        if n <= 2 {
            &[]
        } else {
            &self.vertices[1..n - 1]
        }
    }
}

impl MultiGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph with vertices `0..n` and no edges.
    pub fn with_vertices(n: usize) -> Self {
        let mut g = Self::new();
        for _ in 0..n {
            g.add_vertex();
        }
        g
    }

    /// Builds a simple-or-multi graph on `0..n` from `(u, v, multiplicity)` triples.
    pub fn from_edges(n: usize, edges: &[(u32, u32, u32)]) -> Result<Self, GraphError> {
        let mut g = Self::with_vertices(n);
        for &(u, v, m) in edges {
            g.add_edge(VertexId(u), VertexId(v), m)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        let id = VertexId(self.next_id);
        self.next_id += 1;
        self.adj.insert(id, BTreeMap::new());
        id
    }

    pub fn insert_vertex(&mut self, id: VertexId) -> Result<(), GraphError> {
        if self.adj.contains_key(&id) {
            return Err(GraphError::DuplicateVertex(id));
        }
        self.adj.insert(id, BTreeMap::new());
        self.next_id = self.next_id.max(id.0 + 1);
        Ok(())
    }

    fn check(&self, v: VertexId) -> Result<(), GraphError> {
        if self.adj.contains_key(&v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    /// Adds `mult` parallel copies of the edge `uv`.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId, mult: u32) -> Result<(), GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let m = self.multiplicity(u, v) + mult;
        self.set_multiplicity(u, v, m)
    }

    /// Sets the multiplicity of `uv`; zero removes the edge.
    pub fn set_multiplicity(&mut self, u: VertexId, v: VertexId, m: u32) -> Result<(), GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if m == 0 {
            self.adj.get_mut(&u).unwrap().remove(&v);
            self.adj.get_mut(&v).unwrap().remove(&u);
        } else {
            self.adj.get_mut(&u).unwrap().insert(v, m);
            self.adj.get_mut(&v).unwrap().insert(u, m);
        }
        Ok(())
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> u32 {
        self.adj.get(&u).and_then(|n| n.get(&v)).copied().unwrap_or(0)
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.multiplicity(u, v) > 0
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Number of distinct adjacent pairs.
    pub fn edge_count(&self) -> usize {
        self.adj.values().map(|n| n.len()).sum::<usize>() / 2
    }

    /// Sum of multiplicities over all pairs.
    pub fn total_multiplicity(&self) -> u64 {
        self.edges().map(|(_, _, m)| m as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// Upper bound (exclusive) on ids handed out so far.
    pub fn id_bound(&self) -> u32 {
        self.next_id
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    /// Neighbours with multiplicities, in id order. Panics on an unknown vertex.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, u32)> + '_ {
        self.adj[&v].iter().map(|(&u, &m)| (u, m))
    }

    pub fn neighbor_ids(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[&v].keys().copied()
    }

    pub fn neighbor_set(&self, v: VertexId) -> VertexSet {
        self.neighbor_ids(v).collect()
    }

    /// Degree counting multiplicity.
    pub fn degree(&self, v: VertexId) -> u32 {
        self.adj[&v].values().sum()
    }

    /// Number of distinct neighbours.
    pub fn distinct_degree(&self, v: VertexId) -> usize {
        self.adj[&v].len()
    }

    /// Edges `(u, v, m)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, u32)> + '_ {
        self.adj.iter().flat_map(|(&u, n)| {
            n.range((std::ops::Bound::Excluded(u), std::ops::Bound::Unbounded))
                .map(move |(&v, &m)| (u, v, m))
        })
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.edges().map(|(_, _, m)| m).max().unwrap_or(0)
    }

    pub fn is_simple(&self) -> bool {
        self.max_multiplicity() <= 1
    }

    /// Open neighbourhood of a set.
    pub fn set_neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for &v in set {
            for u in self.neighbor_ids(v) {
                if !set.contains(&u) {
                    out.insert(u);
                }
            }
        }
        out
    }

    pub fn remove_vertex(&mut self, v: VertexId) -> Result<(), GraphError> {
        let nbrs = self.adj.remove(&v).ok_or(GraphError::UnknownVertex(v))?;
        for u in nbrs.keys() {
            self.adj.get_mut(u).unwrap().remove(&v);
        }
        Ok(())
    }

    pub fn remove_vertices<'a, I>(&mut self, z: I) -> Result<(), GraphError>
    where
        I: IntoIterator<Item = &'a VertexId>,
    {
        let z: Vec<VertexId> = z.into_iter().copied().collect();
        if let Some(&bad) = z.iter().find(|v| !self.has_vertex(**v)) {
            return Err(GraphError::UnknownVertex(bad));
        }
        for v in z {
            if self.has_vertex(v) {
                self.remove_vertex(v)?;
            }
        }
        Ok(())
    }

    /// `G - Z` as a new graph.
    pub fn delete_vertices(&self, z: &VertexSet) -> Result<MultiGraph, GraphError> {
        let mut g = self.clone();
        g.remove_vertices(z)?;
        Ok(g)
    }

    /// Induced subgraph on `keep` (unknown ids are ignored).
    pub fn induced(&self, keep: &VertexSet) -> MultiGraph {
        let mut adj = BTreeMap::new();
        for &v in keep {
            if let Some(n) = self.adj.get(&v) {
                let n: BTreeMap<VertexId, u32> = n
                    .iter()
                    .filter(|(u, _)| keep.contains(u))
                    .map(|(&u, &m)| (u, m))
                    .collect();
                adj.insert(v, n);
            }
        }
        MultiGraph { adj, next_id: self.next_id }
    }

    /// Components in order of their minimum vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen.contains(&s) {
                continue;
            }
            let comp = self.reach(s, &VertexSet::new());
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `s` without entering `blocked`.
    pub fn reach(&self, s: VertexId, blocked: &VertexSet) -> VertexSet {
        let mut comp = VertexSet::new();
        comp.insert(s);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for u in self.neighbor_ids(v) {
                if !blocked.contains(&u) && comp.insert(u) {
                    queue.push_back(u);
                }
            }
        }
        comp
    }

    /// Shortest path from `s` to any vertex of `targets`, avoiding `blocked`.
    pub fn shortest_path_to(
        &self,
        s: VertexId,
        targets: &VertexSet,
        blocked: &VertexSet,
    ) -> Option<Vec<VertexId>> {
        let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        let mut queue = VecDeque::from([s]);
        let mut seen = VertexSet::from([s]);
        while let Some(v) = queue.pop_front() {
            if targets.contains(&v) {
                let mut path = vec![v];
                let mut cur = v;
                while let Some(&p) = parent.get(&cur) {
                    path.push(p);
                    cur = p;
                }
                path.reverse();
                return Some(path);
            }
            for u in self.neighbor_ids(v) {
                if !blocked.contains(&u) && seen.insert(u) {
                    parent.insert(u, v);
                    queue.push_back(u);
                }
            }
        }
        None
    }

    /// Whether the (whole) graph is a simple forest.
    pub fn is_forest(&self) -> bool {
        self.is_simple() && self.edge_count() + self.connected_components().len() == self.vertex_count()
    }

    /// All maximal degree-2 paths with at least one internal vertex.
    ///
    /// A cycle hanging from a single vertex `x` is reported as `(x, w1, .., wm)`;
    /// an isolated cycle is listed from its smallest vertex. Both have kind `Other`.
    pub fn find_degree2_paths(&self) -> Vec<DegreeTwoPath> {
        let inner: VertexSet = self
            .vertices()
            .filter(|&v| self.distinct_degree(v) == 2 && self.degree(v) == 2)
            .collect();
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for &s in &inner {
            if seen.contains(&s) {
                continue;
            }
            // Walk to one end of the run of inner vertices.
            let mut prev: Option<VertexId> = None;
            let mut cur = s;
            let mut is_cycle = false;
            while let Some(u) = self.neighbor_ids(cur).find(|&u| Some(u) != prev && inner.contains(&u)) {
                if u == s {
                    is_cycle = true;
                    break;
                }
                prev = Some(cur);
                cur = u;
            }
            let run = if is_cycle {
                let mut run = vec![s];
                let mut prev = s;
                let mut cur = self.neighbor_ids(s).next().unwrap();
                while cur != s {
                    run.push(cur);
                    let nxt = self.neighbor_ids(cur).find(|&u| u != prev).unwrap();
                    prev = cur;
                    cur = nxt;
                }
                run
            } else {
                let mut run = vec![cur];
                let mut prev = None;
                while let Some(u) = self.neighbor_ids(cur).find(|&u| Some(u) != prev && inner.contains(&u)) {
                    run.push(u);
                    prev = Some(cur);
                    cur = u;
                }
                run
            };
            seen.extend(run.iter().copied());
            if is_cycle {
                out.push(DegreeTwoPath { vertices: run, kind: PathKind::Other });
                continue;
            }
            let first = run[0];
            let last = *run.last().unwrap();
            let (a, b) = if run.len() == 1 {
                let mut it = self.neighbor_ids(first);
                (it.next().unwrap(), it.next().unwrap())
            } else {
                (
                    self.neighbor_ids(first).find(|&u| u != run[1]).unwrap(),
                    self.neighbor_ids(last).find(|&u| u != run[run.len() - 2]).unwrap(),
                )
            };
            let mut vertices = Vec::with_capacity(run.len() + 2);
            if a == b {
                vertices.push(a);
                vertices.extend(run);
                out.push(DegreeTwoPath { vertices, kind: PathKind::Other });
                continue;
            }
            let (da, db) = (self.degree(a), self.degree(b));
            let kind = if da > 2 && db > 2 {
                PathKind::Overbridge
            } else if (da > 2 && db == 1) || (db > 2 && da == 1) {
                PathKind::Tail
            } else {
                PathKind::Other
            };
            let forward = match kind {
                PathKind::Tail => da > 2,
                _ => a < b,
            };
            vertices.push(a);
            vertices.extend(run);
            vertices.push(b);
            if !forward {
                vertices.reverse();
            }
            out.push(DegreeTwoPath { vertices, kind });
        }
        out
    }

    /// Appends a fresh path of `len` vertices hanging from `v`; returns the new ids.
    pub fn attach_tail_mut(&mut self, v: VertexId, len: usize) -> Result<Vec<VertexId>, GraphError> {
        self.check(v)?;
        if len == 0 {
            return Err(GraphError::EmptyTail);
        }
        let mut prev = v;
        let mut added = Vec::with_capacity(len);
        for _ in 0..len {
            let u = self.add_vertex();
            self.add_edge(prev, u, 1)?;
            added.push(u);
            prev = u;
        }
        Ok(added)
    }

    pub fn attach_tail(&self, v: VertexId, len: usize) -> Result<MultiGraph, GraphError> {
        let mut g = self.clone();
        g.attach_tail_mut(v, len)?;
        Ok(g)
    }

    /// Replaces the edge `uv` by a path through `count` fresh vertices.
    pub fn subdivide_edge(&mut self, u: VertexId, v: VertexId, count: usize) -> Result<Vec<VertexId>, GraphError> {
        if !self.adjacent(u, v) {
            self.check(u)?;
            self.check(v)?;
            return Err(GraphError::UnknownVertex(v));
        }
        self.set_multiplicity(u, v, 0)?;
        let mut prev = u;
        let mut added = Vec::with_capacity(count);
        for _ in 0..count {
            let w = self.add_vertex();
            self.add_edge(prev, w, 1)?;
            added.push(w);
            prev = w;
        }
        self.add_edge(prev, v, 1)?;
        Ok(added)
    }
}
