//! Maximum matchings: Hopcroft–Karp for bipartite graphs, Edmonds' blossom
//! algorithm for general graphs.

use std::collections::VecDeque;

const NIL: usize = usize::MAX;

/// Maximum bipartite matching. `adj[a]` lists right vertices adjacent to left `a`.
/// Returns `(match_left, match_right)` with `NIL`-free `Option`s.
pub fn hopcroft_karp(n_left: usize, n_right: usize, adj: &[Vec<usize>]) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let mut ml = vec![NIL; n_left];
    let mut mr = vec![NIL; n_right];
    let mut dist = vec![0usize; n_left];
    loop {
        // Layer the free left vertices.
        let mut queue = VecDeque::new();
        for a in 0..n_left {
            if ml[a] == NIL {
                dist[a] = 0;
                queue.push_back(a);
            } else {
                dist[a] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(a) = queue.pop_front() {
            for &b in &adj[a] {
                let next = mr[b];
                if next == NIL {
                    found = true;
                } else if dist[next] == usize::MAX {
                    dist[next] = dist[a] + 1;
                    queue.push_back(next);
                }
            }
        }
        if !found {
            break;
        }
        for a in 0..n_left {
            if ml[a] == NIL {
                augment(a, adj, &mut ml, &mut mr, &mut dist);
            }
        }
    }
    let wrap = |v: Vec<usize>| v.into_iter().map(|x| (x != NIL).then_some(x)).collect();
    (wrap(ml), wrap(mr))
}

fn augment(a: usize, adj: &[Vec<usize>], ml: &mut [usize], mr: &mut [usize], dist: &mut [usize]) -> bool {
    for &b in &adj[a] {
        let next = mr[b];
        if next == NIL || (dist[next] == dist[a] + 1 && augment(next, adj, ml, mr, dist)) {
            ml[a] = b;
            mr[b] = a;
            return true;
        }
    }
    dist[a] = usize::MAX;
    false
}

/// Edmonds' blossom algorithm on an undirected simple graph given by adjacency lists.
pub struct GeneralMatching<'a> {
    adj: &'a [Vec<usize>],
    pub mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    even: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> GeneralMatching<'a> {
    pub fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        GeneralMatching {
            adj,
            mate: vec![NIL; n],
            parent: vec![NIL; n],
            base: (0..n).collect(),
            even: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    /// Runs to a maximum matching and returns its size.
    pub fn solve(&mut self) -> usize {
        let n = self.adj.len();
        // Greedy start.
        for v in 0..n {
            if self.mate[v] == NIL {
                if let Some(&u) = self.adj[v].iter().find(|&&u| self.mate[u] == NIL && u != v) {
                    self.mate[v] = u;
                    self.mate[u] = v;
                }
            }
        }
        for v in 0..n {
            if self.mate[v] == NIL {
                if let Some(end) = self.search(v) {
                    self.flip(end);
                }
            }
        }
        self.size()
    }

    pub fn size(&self) -> usize {
        self.mate.iter().filter(|&&m| m != NIL).count() / 2
    }

    pub fn mate_of(&self, v: usize) -> Option<usize> {
        (self.mate[v] != NIL).then_some(self.mate[v])
    }

    fn flip(&mut self, mut v: usize) {
        while v != NIL {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NIL {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Alternating search from the exposed `root`; returns the end of an augmenting
    /// path if one exists. Afterwards `even` flags the outer vertices reached.
    fn search(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.even.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NIL);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.even[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NIL && self.parent[self.mate[to]] != NIL) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.even[i] {
                                self.even[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NIL {
                    self.parent[to] = v;
                    if self.mate[to] == NIL {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.even[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    /// Vertices reachable from an exposed vertex by an even alternating path
    /// (the `D` set of the Gallai–Edmonds decomposition). Requires a maximum matching.
    pub fn gallai_edmonds_d(&mut self) -> Vec<bool> {
        let n = self.adj.len();
        let mut d = vec![false; n];
        for r in 0..n {
            if self.mate[r] != NIL {
                continue;
            }
            let res = self.search(r);
            debug_assert!(res.is_none(), "matching was not maximum");
            for (dv, &even) in d.iter_mut().zip(&self.even) {
                if even {
                    *dv = true;
                }
            }
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_max_matching(n: usize, edges: &[(usize, usize)]) -> usize {
        let m = edges.len();
        let mut best = 0;
        for mask in 0u32..(1 << m) {
            let mut used = vec![false; n];
            let mut ok = true;
            for (i, &(a, b)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    if used[a] || used[b] {
                        ok = false;
                        break;
                    }
                    used[a] = true;
                    used[b] = true;
                }
            }
            if ok {
                best = best.max(mask.count_ones() as usize);
            }
        }
        best
    }

    #[test]
    fn blossom_on_odd_cycle_with_stem() {
        // 5-cycle 0..4 plus pendant 5 on 0 and 6 on 2.
        let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (2, 6)];
        let mut adj = vec![Vec::new(); 7];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut m = GeneralMatching::new(&adj);
        assert_eq!(m.solve(), brute_max_matching(7, &edges));
    }

    #[test]
    fn blossom_matches_brute_force_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..9);
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(0.35) {
                        edges.push((a, b));
                    }
                }
            }
            if edges.len() > 16 {
                edges.truncate(16);
            }
            let mut adj = vec![Vec::new(); n];
            for &(a, b) in &edges {
                adj[a].push(b);
                adj[b].push(a);
            }
            let mut m = GeneralMatching::new(&adj);
            let size = m.solve();
            assert_eq!(size, brute_max_matching(n, &edges));
            // D = vertices missed by some maximum matching.
            let d = m.gallai_edmonds_d();
            for (x, &dx) in d.iter().enumerate() {
                let sub: Vec<(usize, usize)> = edges.iter().copied().filter(|&(a, b)| a != x && b != x).collect();
                assert_eq!(dx, brute_max_matching(n, &sub) == size, "vertex {x}");
            }
        }
    }

    #[test]
    fn hopcroft_karp_perfect() {
        let adj = vec![vec![0, 1], vec![0], vec![1, 2]];
        let (ml, mr) = hopcroft_karp(3, 3, &adj);
        assert!(ml.iter().all(Option::is_some));
        assert!(mr.iter().all(Option::is_some));
    }
}
