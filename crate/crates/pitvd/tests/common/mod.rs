//! Shared generators and oracle checks for the integration tests.
#![allow(dead_code)]

use pitvd::exact::{decide, SolverConfig};
use pitvd::generate::random_multigraph;
use pitvd::kernel::{KernelConfig, Kernelizer, RuleId, RuleMask, Step};
use pitvd::{MultiGraph, VertexId};
use rand::seq::SliceRandom;
use rand::Rng;

/// Edge-list builder with fresh vertex allocation.
#[derive(Default)]
pub struct Builder {
    pub n: u32,
    pub edges: Vec<(u32, u32, u32)>,
}

impl Builder {
    pub fn vertex(&mut self) -> u32 {
        self.n += 1;
        self.n - 1
    }

    pub fn vertices(&mut self, count: usize) -> Vec<u32> {
        (0..count).map(|_| self.vertex()).collect()
    }

    pub fn edge(&mut self, u: u32, v: u32) {
        self.edges.push((u, v, 1));
    }

    pub fn double(&mut self, u: u32, v: u32) {
        self.edges.push((u, v, 2));
    }

    pub fn path(&mut self, vs: &[u32]) {
        for w in vs.windows(2) {
            self.edge(w[0], w[1]);
        }
    }

    pub fn cycle(&mut self, vs: &[u32]) {
        self.path(vs);
        self.edge(vs[vs.len() - 1], vs[0]);
    }

    pub fn clique(&mut self, vs: &[u32]) {
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                self.edge(a, b);
            }
        }
    }

    /// Square of a path: a chain of triangles, cliques of three in greedy order.
    pub fn strip(&mut self, len: usize) -> Vec<u32> {
        let vs = self.vertices(len);
        for i in 0..len {
            for j in i + 1..(i + 3).min(len) {
                self.edge(vs[i], vs[j]);
            }
        }
        vs
    }

    /// Random tree on `size` fresh vertices hanging from `root`.
    pub fn tree<R: Rng>(&mut self, rng: &mut R, root: u32, size: usize) -> Vec<u32> {
        let mut nodes = vec![root];
        for _ in 0..size {
            let p = nodes[rng.gen_range(0..nodes.len())];
            let v = self.vertex();
            self.edge(p, v);
            nodes.push(v);
        }
        nodes[1..].to_vec()
    }

    /// Copies `g` in with fresh ids.
    pub fn embed(&mut self, g: &MultiGraph) -> Vec<u32> {
        let base = self.n;
        let ids: Vec<VertexId> = g.vertices().collect();
        self.n += ids.len() as u32;
        let pos = |v: VertexId| base + ids.iter().position(|&w| w == v).unwrap() as u32;
        for (u, v, m) in g.edges() {
            self.edges.push((pos(u), pos(v), m));
        }
        (base..self.n).collect()
    }

    /// A random small obstruction as a separate component.
    pub fn obstruction<R: Rng>(&mut self, rng: &mut R) {
        match rng.gen_range(0..6) {
            0 => {
                let v = self.vertices(2);
                self.double(v[0], v[1]);
            }
            1..=3 => {
                let len = rng.gen_range(4..=8);
                let v = self.vertices(len);
                self.cycle(&v);
            }
            4 => {
                let t = self.vertices(3);
                self.clique(&t);
                for &x in &t {
                    let p = self.vertex();
                    self.edge(x, p);
                }
            }
            _ => {
                let t = self.vertices(3);
                self.clique(&t);
                for i in 0..3 {
                    let o = self.vertex();
                    self.edge(o, t[i]);
                    self.edge(o, t[(i + 1) % 3]);
                }
            }
        }
    }

    /// Builds the graph with vertex ids randomly permuted.
    pub fn finish<R: Rng>(&self, rng: &mut R) -> MultiGraph {
        let mut perm: Vec<u32> = (0..self.n).collect();
        perm.shuffle(rng);
        let e: Vec<(u32, u32, u32)> = self.edges.iter().map(|&(u, v, m)| (perm[u as usize], perm[v as usize], m)).collect();
        MultiGraph::from_edges(self.n as usize, &e).unwrap()
    }
}

/// Adds up to `max` separate obstructions; returns the number of new vertices.
fn noise<R: Rng>(rng: &mut R, b: &mut Builder, max: usize) -> usize {
    let before = b.n;
    for _ in 0..rng.gen_range(0..=max) {
        b.obstruction(rng);
    }
    (b.n - before) as usize
}

fn core<R: Rng>(rng: &mut R, b: &mut Builder) -> Vec<u32> {
    let n = rng.gen_range(5..=9);
    let density = [0.3, 0.4, 0.5][rng.gen_range(0..3)];
    b.embed(&random_multigraph(rng, n, density, 0.1))
}

/// A random instance built so that `rule` is likely to fire.
pub fn rule_instance<R: Rng>(rule: u8, rng: &mut R) -> (MultiGraph, usize) {
    let mut b = Builder::default();
    let mut k = rng.gen_range(0..=3);
    match rule {
        3 if rng.gen_bool(0.5) => {
            // A hub with more than k double edges; the rest may or may not be solvable.
            k = rng.gen_range(1..=3);
            let hub = b.vertex();
            for _ in 0..k + rng.gen_range(1..=3) {
                let v = b.vertex();
                b.double(hub, v);
            }
            let n = rng.gen_range(4..=9);
            b.embed(&random_multigraph(rng, n, 0.3, 0.0));
        }
        1..=4 => {
            let n = rng.gen_range(5..=12);
            let density = [0.15, 0.3, 0.5][rng.gen_range(0..3)];
            b.embed(&random_multigraph(rng, n, density, 0.1));
            if rule == 4 {
                let c = core(rng, &mut b);
                let tail = b.vertices(rng.gen_range(3..=5));
                b.edge(c[0], tail[0]);
                b.path(&tail);
            }
        }
        5 => {
            let c = core(rng, &mut b);
            let p = b.vertices(rng.gen_range(4..=8));
            b.path(&p);
            b.edge(c[0], p[0]);
            let end = if rng.gen_bool(0.3) { c[0] } else { c[1] };
            b.edge(end, p[p.len() - 1]);
        }
        6 => {
            let c = core(rng, &mut b);
            let size = rng.gen_range(4..=8);
            let t = b.vertices(2);
            b.edge(c[0], t[0]);
            b.edge(t[0], t[1]);
            b.tree(rng, t[1], size);
        }
        7 => {
            let c = core(rng, &mut b);
            for _ in 0..rng.gen_range(4..=6) {
                let r = b.vertex();
                b.edge(c[0], r);
                let size = rng.gen_range(0..=2);
                b.tree(rng, r, size);
            }
        }
        8 => {
            // `s` closes a cycle over a path whose interior carries hangers.
            let s = b.vertex();
            let leaves = b.vertices(2);
            for &l in &leaves {
                b.edge(s, l);
            }
            let p = b.vertices(rng.gen_range(7..=10));
            b.path(&p);
            b.edge(s, p[0]);
            b.edge(s, p[p.len() - 1]);
            let t = b.vertices(3);
            b.clique(&t);
            b.edge(s, t[0]);
            for &w in &p[1..p.len() - 1] {
                if rng.gen_bool(0.6) {
                    let size = rng.gen_range(1..=2);
                    b.tree(rng, w, size);
                }
            }
            k = rng.gen_range(1..=3);
        }
        9 => {
            k = rng.gen_range(0..=1);
            let s = b.vertex();
            for _ in 0..4 * k + 3 + rng.gen_range(0..=2) {
                let t = b.vertices(2);
                b.edge(s, t[0]);
                b.edge(s, t[1]);
                b.edge(t[0], t[1]);
                if rng.gen_bool(0.3) {
                    b.tree(rng, t[1], 1);
                }
            }
        }
        10 => {
            k = rng.gen_range(1..=2);
            let extra = if rng.gen_bool(0.5) {
                let d = b.vertices(2);
                b.double(d[0], d[1]);
                2
            } else {
                0
            };
            let hub = b.vertices(2);
            b.double(hub[0], hub[1]);
            for _ in 0..7 * (2 + extra) + 5 + rng.gen_range(0..=4) {
                let a = b.vertex();
                b.edge(hub[0], a);
                b.edge(hub[1], a);
            }
        }
        11 => {
            // One extra obstruction raises |S|; more components keep the ratio.
            k = rng.gen_range(0..=2);
            let extra = noise(rng, &mut b, 1);
            let s = b.vertex();
            for _ in 0..3 * (1 + extra) + rng.gen_range(0..=3) {
                let t = b.strip(rng.gen_range(3..=6));
                // An end of a strip is simplicial, so no net forms around it.
                b.edge(s, t[0]);
            }
        }
        12 => {
            k = rng.gen_range(0..=1);
            // s sees a long prefix of the strip: the only obstructions are
            // claws centred at s.
            let cliques = 6 * k + 5 + rng.gen_range(0..=2);
            let s = b.vertex();
            let st = b.strip(3 * cliques + rng.gen_range(3..=9));
            for &u in &st[..3 * cliques] {
                b.edge(s, u);
            }
        }
        13 => {
            k = rng.gen_range(0..=1);
            let s = b.vertex();
            let len = 3 * (14 * k + 8) + rng.gen_range(0..=6);
            let st = b.strip(len);
            b.edge(s, st[0]);
            if rng.gen_bool(0.5) {
                b.edge(s, st[len - 1]);
            }
            let leaves = b.vertices(2);
            for &l in &leaves {
                b.edge(s, l);
            }
        }
        14 => {
            k = rng.gen_range(0..=1);
            let s = b.vertex();
            let size = rng.gen_range(16..=28);
            let kk = b.vertices(size);
            b.clique(&kk);
            for &v in &kk {
                if rng.gen_bool(0.5) {
                    b.edge(s, v);
                }
            }
            let leaves = b.vertices(2);
            for &l in &leaves {
                b.edge(s, l);
            }
        }
        _ => unreachable!(),
    }
    if !matches!(rule, 10 | 11) {
        noise(rng, &mut b, 2);
    }
    (b.finish(rng), k)
}

#[derive(Debug, Default, Clone, Copy)]
pub struct RuleOutcome {
    pub firings: usize,
    pub yes_before: usize,
    pub no_before: usize,
    pub mismatches: usize,
}

pub fn yes(g: &MultiGraph, k: usize) -> bool {
    decide(g, k, &SolverConfig::default()).expect("within solver scale").is_yes()
}

/// Runs rules `1..=rule` with the greedy bootstrap and compares the oracle
/// before and after each of the first `limit` applications of `rule`.
pub fn check_rule(rule: u8, g: &MultiGraph, k: usize, limit: usize) -> RuleOutcome {
    let cfg = KernelConfig { rules: RuleMask::upto(rule), force_greedy: true, ..KernelConfig::default() };
    let mut kz = Kernelizer::new(g.clone(), k, cfg);
    let mut out = RuleOutcome::default();
    loop {
        match kz.next_step() {
            Step::Apply(app) => {
                let target = app.rule == RuleId::Rule(rule);
                let before = target.then(|| yes(kz.graph(), kz.k()));
                let alive = kz.apply(app);
                if let Some(before) = before {
                    let after = alive && yes(kz.graph(), kz.k());
                    out.firings += 1;
                    if before {
                        out.yes_before += 1;
                    } else {
                        out.no_before += 1;
                    }
                    if before != after {
                        out.mismatches += 1;
                    }
                    if out.firings >= limit {
                        return out;
                    }
                }
                if !alive {
                    return out;
                }
            }
            Step::Fixpoint | Step::DecidedNo => return out,
        }
    }
}

/// Definition-level check: simple, and every component is a tree or admits an
/// ordering where each edge `v_i v_l` forces `v_j` adjacent to both for `i < j < l`.
pub fn brute_pitg(g: &MultiGraph) -> bool {
    g.is_simple() && g.connected_components().iter().all(|c| is_tree(g, c) || has_umbrella_ordering(g, c))
}

fn is_tree(g: &MultiGraph, c: &pitvd::VertexSet) -> bool {
    let edges: usize = c.iter().map(|&v| g.distinct_degree(v)).sum::<usize>() / 2;
    edges + 1 == c.len()
}

fn has_umbrella_ordering(g: &MultiGraph, c: &pitvd::VertexSet) -> bool {
    let vs: Vec<VertexId> = c.iter().copied().collect();
    let mut order = Vec::with_capacity(vs.len());
    let mut used = vec![false; vs.len()];
    extend_ordering(g, &vs, &mut order, &mut used)
}

fn extend_ordering(g: &MultiGraph, vs: &[VertexId], order: &mut Vec<usize>, used: &mut [bool]) -> bool {
    if order.len() == vs.len() {
        return true;
    }
    for w in 0..vs.len() {
        if used[w] {
            continue;
        }
        let fits = order.iter().enumerate().all(|(i, &a)| {
            !g.adjacent(vs[a], vs[w]) || order[i + 1..].iter().all(|&b| g.adjacent(vs[a], vs[b]) && g.adjacent(vs[b], vs[w]))
        });
        // A placed vertex skipped over by `w` can never take another neighbour.
        let closed = order
            .iter()
            .all(|&a| g.adjacent(vs[a], vs[w]) || (0..vs.len()).all(|x| used[x] || x == w || !g.adjacent(vs[a], vs[x])));
        if !fits || !closed {
            continue;
        }
        used[w] = true;
        order.push(w);
        if extend_ordering(g, vs, order, used) {
            return true;
        }
        order.pop();
        used[w] = false;
    }
    false
}
