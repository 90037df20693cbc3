//! Minimum vertex separators by unit-capacity max flow on the split graph.

use std::collections::{BTreeMap, VecDeque};

use crate::graph::{MultiGraph, VertexId, VertexSet};

const INF: i64 = i64::MAX / 4;

struct Network {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
}

impl Network {
    fn new(n: usize) -> Self {
        Network { head: vec![Vec::new(); n], to: Vec::new(), cap: Vec::new() }
    }

    fn arc(&mut self, a: usize, b: usize, c: i64) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    fn reachable(&self, s: usize) -> (Vec<bool>, Vec<usize>) {
        let mut seen = vec![false; self.head.len()];
        let mut via = vec![usize::MAX; self.head.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(a) = queue.pop_front() {
            for &e in &self.head[a] {
                let b = self.to[e];
                if self.cap[e] > 0 && !seen[b] {
                    seen[b] = true;
                    via[b] = e;
                    queue.push_back(b);
                }
            }
        }
        (seen, via)
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        loop {
            let (seen, via) = self.reachable(s);
            if !seen[t] {
                return flow;
            }
            let mut push = INF;
            let mut cur = t;
            while cur != s {
                let e = via[cur];
                push = push.min(self.cap[e]);
                cur = self.to[e ^ 1];
            }
            cur = t;
            while cur != s {
                let e = via[cur];
                self.cap[e] -= push;
                self.cap[e ^ 1] += push;
                cur = self.to[e ^ 1];
            }
            flow += push;
        }
    }
}

/// Smallest set of vertices, avoiding `x`, `y` and `excluded`, whose removal
/// disconnects `x` from `y` in `g - excluded`. Among minimum separators, returns the
/// one closest to `x`. `None` when `x` and `y` are adjacent.
pub fn minimum_vertex_separator(g: &MultiGraph, x: VertexId, y: VertexId, excluded: &VertexSet) -> Option<VertexSet> {
    if g.adjacent(x, y) {
        return None;
    }
    let ids: Vec<VertexId> = g.vertices().filter(|v| !excluded.contains(v)).collect();
    let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = ids.len();
    let mut net = Network::new(2 * n);
    for (i, &v) in ids.iter().enumerate() {
        let c = if v == x || v == y { INF } else { 1 };
        net.arc(2 * i, 2 * i + 1, c);
        for u in g.neighbor_ids(v) {
            if let Some(&j) = index.get(&u) {
                net.arc(2 * i + 1, 2 * j, INF);
            }
        }
    }
    let (s, t) = (2 * index[&x] + 1, 2 * index[&y]);
    net.max_flow(s, t);
    let (seen, _) = net.reachable(s);
    Some((0..n).filter(|&i| seen[2 * i] && !seen[2 * i + 1]).map(|i| ids[i]).collect())
}
