//! q-expansions in bipartite graphs (classic and slack-bounded variants).

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::combinatorics::matching::hopcroft_karp;

/// Bipartite graph with sides `0..left` and `0..right`; `adj[a]` lists right neighbours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    pub left: usize,
    pub right: usize,
    pub adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize) -> Self {
        BipartiteGraph { left, right, adj: vec![Vec::new(); left] }
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        if !self.adj[a].contains(&b) {
            self.adj[a].push(b);
        }
    }

    /// Left neighbours of each right vertex.
    pub fn right_adj(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.right];
        for (a, nb) in self.adj.iter().enumerate() {
            for &b in nb {
                out[b].push(a);
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteExpansion {
    pub q: usize,
    pub a_hat: BTreeSet<usize>,
    pub b_hat: BTreeSet<usize>,
    /// Edges `(a, b)`; every `a` in `a_hat` appears exactly `q` times.
    pub matching: Vec<(usize, usize)>,
}

impl BipartiteExpansion {
    pub fn saturated(&self) -> BTreeSet<usize> {
        self.matching.iter().map(|&(_, b)| b).collect()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExpansionError {
    #[error("|B| = {b} is smaller than q|A| = {qa}")]
    TooFewRight { b: usize, qa: usize },
    #[error("right vertex {0} is isolated")]
    IsolatedRight(usize),
    #[error("left side is empty")]
    EmptyLeft,
    #[error("right side is empty")]
    EmptyRight,
    #[error("q must be positive")]
    ZeroQ,
    #[error("expansion came out empty")]
    Empty,
}

/// Core construction: maximum matching from `q` copies of every left vertex, then the
/// vertices reachable by alternating paths from free copies are discarded.
fn expand(h: &BipartiteGraph, q: usize) -> BipartiteExpansion {
    let copies: Vec<Vec<usize>> = (0..h.left * q).map(|c| h.adj[c / q].clone()).collect();
    let (ml, mr) = hopcroft_karp(h.left * q, h.right, &copies);
    let mut left_seen = vec![false; h.left * q];
    let mut right_seen = vec![false; h.right];
    let mut queue: VecDeque<usize> = (0..h.left * q).filter(|&c| ml[c].is_none()).collect();
    for &c in &queue {
        left_seen[c] = true;
    }
    while let Some(c) = queue.pop_front() {
        for &b in &copies[c] {
            if ml[c] == Some(b) || right_seen[b] {
                continue;
            }
            right_seen[b] = true;
            if let Some(next) = mr[b] {
                if !left_seen[next] {
                    left_seen[next] = true;
                    queue.push_back(next);
                }
            }
        }
    }
    let a_hat: BTreeSet<usize> = (0..h.left).filter(|&a| (0..q).all(|i| !left_seen[a * q + i])).collect();
    let b_hat: BTreeSet<usize> = (0..h.right).filter(|&b| !right_seen[b]).collect();
    let mut matching = Vec::new();
    for &a in &a_hat {
        for i in 0..q {
            let b = ml[a * q + i].expect("copies of an expanded vertex are matched");
            matching.push((a, b));
        }
    }
    BipartiteExpansion { q, a_hat, b_hat, matching }
}

/// q-expansion for `|B| >= q|A|` with no isolated right vertex.
pub fn q_expansion_classic(h: &BipartiteGraph, q: usize) -> Result<BipartiteExpansion, ExpansionError> {
    if q == 0 {
        return Err(ExpansionError::ZeroQ);
    }
    if h.left == 0 {
        return Err(ExpansionError::EmptyLeft);
    }
    if h.right < q * h.left {
        return Err(ExpansionError::TooFewRight { b: h.right, qa: q * h.left });
    }
    let radj = h.right_adj();
    if let Some(b) = (0..h.right).find(|&b| radj[b].is_empty()) {
        return Err(ExpansionError::IsolatedRight(b));
    }
    let e = expand(h, q);
    if e.a_hat.is_empty() {
        return Err(ExpansionError::Empty);
    }
    Ok(e)
}

/// q-expansion with the slack bound `|B \ B^| <= q|A \ A^|`; no size precondition.
pub fn q_expansion_new(h: &BipartiteGraph, q: usize) -> Result<BipartiteExpansion, ExpansionError> {
    if q == 0 {
        return Err(ExpansionError::ZeroQ);
    }
    if h.left == 0 {
        return Err(ExpansionError::EmptyLeft);
    }
    if h.right == 0 {
        return Err(ExpansionError::EmptyRight);
    }
    Ok(expand(h, q))
}

/// Re-checks an expansion from scratch. `slack` also checks `|B \ B^| <= q|A \ A^|`.
pub fn validate_expansion(h: &BipartiteGraph, e: &BipartiteExpansion, slack: bool) -> Result<(), String> {
    let mut per_a = vec![0usize; h.left];
    let mut seen_b = BTreeSet::new();
    for &(a, b) in &e.matching {
        if !e.a_hat.contains(&a) {
            return Err(format!("matching edge ({a},{b}) leaves A^"));
        }
        if !h.adj[a].contains(&b) {
            return Err(format!("({a},{b}) is not an edge"));
        }
        if !e.b_hat.contains(&b) {
            return Err(format!("saturated {b} outside B^"));
        }
        if !seen_b.insert(b) {
            return Err(format!("{b} saturated twice"));
        }
        per_a[a] += 1;
    }
    if let Some(&a) = e.a_hat.iter().find(|&&a| per_a[a] != e.q) {
        return Err(format!("{a} has {} matching edges, expected {}", per_a[a], e.q));
    }
    if seen_b.len() != e.q * e.a_hat.len() {
        return Err("saturation count differs from q|A^|".into());
    }
    for (a, nb) in h.adj.iter().enumerate() {
        if !e.a_hat.contains(&a) && nb.iter().any(|b| e.b_hat.contains(b)) {
            return Err(format!("N(B^) contains {a} outside A^"));
        }
    }
    if slack && h.right - e.b_hat.len() > e.q * (h.left - e.a_hat.len()) {
        return Err("slack bound |B \\ B^| <= q|A \\ A^| violated".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(l: usize, r: usize) -> BipartiteGraph {
        let mut h = BipartiteGraph::new(l, r);
        for a in 0..l {
            for b in 0..r {
                h.add_edge(a, b);
            }
        }
        h
    }

    #[test]
    fn star_three() {
        let h = complete(1, 3);
        let e = q_expansion_classic(&h, 3).unwrap();
        assert_eq!(e.a_hat, BTreeSet::from([0]));
        assert_eq!(e.saturated().len(), 3);
        validate_expansion(&h, &e, false).unwrap();
    }

    #[test]
    fn complete_two_by_six() {
        let h = complete(2, 6);
        let e = q_expansion_classic(&h, 3).unwrap();
        assert_eq!(e.a_hat.len(), 2);
        assert_eq!(e.saturated().len(), 6);
    }

    #[test]
    fn isolated_right_vertex_rejected() {
        let mut h = complete(1, 3);
        h.right = 4;
        assert_eq!(q_expansion_classic(&h, 3), Err(ExpansionError::IsolatedRight(3)));
    }

    #[test]
    fn new_variant_exact_and_slack() {
        let h = complete(2, 6);
        let e = q_expansion_new(&h, 3).unwrap();
        assert_eq!(e.a_hat.len(), 2);
        assert_eq!(e.b_hat.len(), 6);
        validate_expansion(&h, &e, true).unwrap();
        let h = complete(2, 9);
        let e = q_expansion_new(&h, 3).unwrap();
        assert_eq!(e.b_hat.len(), 9);
        assert!(e.b_hat.len() > e.saturated().len());
        validate_expansion(&h, &e, true).unwrap();
    }

    #[test]
    fn new_variant_empty_sides() {
        assert_eq!(q_expansion_new(&BipartiteGraph::new(0, 3), 2), Err(ExpansionError::EmptyLeft));
        assert_eq!(q_expansion_new(&BipartiteGraph::new(2, 0), 2), Err(ExpansionError::EmptyRight));
    }
}
