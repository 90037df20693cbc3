//! Sunflower-based shrinking of a set family that keeps all small minimal hitting sets.

use std::collections::BTreeSet;

/// A family of distinct finite sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily<T: Ord + Clone> {
    pub sets: Vec<BTreeSet<T>>,
}

impl<T: Ord + Clone> SetFamily<T> {
    /// Deduplicates and sorts the input sets.
    pub fn new(sets: impl IntoIterator<Item = BTreeSet<T>>) -> Self {
        let uniq: BTreeSet<BTreeSet<T>> = sets.into_iter().collect();
        SetFamily { sets: uniq.into_iter().collect() }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Largest set size.
    pub fn max_size(&self) -> usize {
        self.sets.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn universe(&self) -> BTreeSet<T> {
        self.sets.iter().flatten().cloned().collect()
    }

    pub fn is_hit_by(&self, z: &BTreeSet<T>) -> bool {
        self.sets.iter().all(|s| !s.is_disjoint(z))
    }

    /// `z` hits every set and no element of `z` can be dropped.
    pub fn is_minimal_hitting_set(&self, z: &BTreeSet<T>) -> bool {
        if !self.is_hit_by(z) {
            return false;
        }
        z.iter().all(|x| self.sets.iter().any(|s| s.intersection(z).all(|y| y == x)))
    }
}

/// `d! (k+1)^d`, saturating.
pub fn sunflower_bound(d: usize, k: usize) -> u128 {
    let fact: u128 = (1..=d as u128).product();
    fact.saturating_mul((k as u128 + 1).saturating_pow(d as u32))
}

/// Indices of `p` sets forming a sunflower, with its core.
fn find_sunflower<T: Ord + Clone>(sets: &[&BTreeSet<T>], p: usize) -> Option<(Vec<usize>, BTreeSet<T>)> {
    if sets.is_empty() || p == 0 {
        return None;
    }
    // Greedy maximal pairwise-disjoint subfamily.
    let mut disjoint = Vec::new();
    let mut covered: BTreeSet<T> = BTreeSet::new();
    for (i, s) in sets.iter().enumerate() {
        if s.is_disjoint(&covered) {
            covered.extend(s.iter().cloned());
            disjoint.push(i);
            if disjoint.len() == p {
                return Some((disjoint, BTreeSet::new()));
            }
        }
    }
    // Some element of the cover lies in many sets; recurse on the sets containing it.
    let best = covered
        .iter()
        .max_by_key(|x| sets.iter().filter(|s| s.contains(*x)).count())?
        .clone();
    let containing: Vec<usize> = (0..sets.len()).filter(|&i| sets[i].contains(&best)).collect();
    let stripped: Vec<BTreeSet<T>> = containing
        .iter()
        .map(|&i| sets[i].iter().filter(|y| **y != best).cloned().collect())
        .collect();
    if stripped.len() == sets.len() && stripped.iter().all(BTreeSet::is_empty) {
        return None;
    }
    let refs: Vec<&BTreeSet<T>> = stripped.iter().collect();
    let (idx, mut core) = find_sunflower(&refs, p)?;
    core.insert(best);
    Some((idx.into_iter().map(|i| containing[i]).collect(), core))
}

/// Removes sets from sunflowers with `k + 2` petals until `|F'| <= d!(k+1)^d`.
pub fn sunflower_reduce<T: Ord + Clone>(family: &SetFamily<T>, k: usize) -> SetFamily<T> {
    let d = family.max_size();
    let bound = sunflower_bound(d, k);
    let mut sets = family.sets.clone();
    while sets.len() as u128 > bound {
        let refs: Vec<&BTreeSet<T>> = sets.iter().collect();
        let Some((petals, core)) = find_sunflower(&refs, k + 2) else {
            break;
        };
        // Drop a member whose petal is non-empty; at most one member equals the core.
        let victim = *petals.iter().rev().find(|&&i| sets[i] != core).expect("sunflower with k+2 >= 2 petals");
        sets.remove(victim);
    }
    SetFamily { sets }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(v: &[&[u32]]) -> SetFamily<u32> {
        SetFamily::new(v.iter().map(|s| s.iter().copied().collect()))
    }

    fn subsets_up_to(universe: &[u32], k: usize) -> Vec<BTreeSet<u32>> {
        let mut out = vec![BTreeSet::new()];
        for &x in universe {
            let more: Vec<BTreeSet<u32>> = out
                .iter()
                .filter(|s| s.len() < k)
                .map(|s| {
                    let mut t = s.clone();
                    t.insert(x);
                    t
                })
                .collect();
            out.extend(more);
        }
        out
    }

    fn equivalent(f: &SetFamily<u32>, g: &SetFamily<u32>, k: usize) -> bool {
        let u: Vec<u32> = f.universe().into_iter().collect();
        subsets_up_to(&u, k).iter().all(|z| f.is_minimal_hitting_set(z) == g.is_minimal_hitting_set(z))
    }

    #[test]
    fn singleton_family_kept() {
        let f = fam(&[&[1]]);
        assert_eq!(sunflower_reduce(&f, 1), f);
    }

    #[test]
    fn disjoint_singletons() {
        let f = fam(&[&[1], &[2], &[3]]);
        let r = sunflower_reduce(&f, 1);
        assert!(r.len() >= 2 && r.len() as u128 <= sunflower_bound(1, 1));
        assert!(equivalent(&f, &r, 1));
    }

    #[test]
    fn common_core_family() {
        let sets: Vec<BTreeSet<u32>> = (1..=100).map(|i| BTreeSet::from([0, i])).collect();
        let f = SetFamily::new(sets);
        let r = sunflower_reduce(&f, 2);
        assert!(r.len() <= 18);
        assert!(r.sets.iter().all(|s| f.sets.contains(s)));
        assert!(equivalent(&f, &r, 2));
    }
}
