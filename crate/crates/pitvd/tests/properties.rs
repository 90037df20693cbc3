mod common;

use pitvd::clique_partition::{build_clique_partition, bypass};
use pitvd::exact::{decide, decide_by_enumeration, greedy_modulator, SolverConfig};
use pitvd::format::{parse, serialize};
use pitvd::generate::{random_multigraph, random_unit_interval, seeded};
use pitvd::kernel::audit::audit;
use pitvd::kernel::instance::potential;
use pitvd::kernel::{compute_base_set, kernelize, replay, BaseSet, KernelConfig, KernelOutcome, Replayed};
use pitvd::recognition::{is_pitg, proper_interval_ordering, PigResult};
use pitvd::{MultiGraph, VertexSet};
use proptest::prelude::*;

/// `(seed, n, density index, k)` drawn from the suite-1 distribution.
fn instance() -> impl Strategy<Value = (MultiGraph, usize)> {
    (any::<u64>(), 1usize..=11, 0usize..3, 0usize..=4)
        .prop_map(|(seed, n, d, k)| (random_multigraph(&mut seeded(seed, 0), n, [0.15, 0.3, 0.5][d], 0.1), k))
}

fn yes(g: &MultiGraph, k: usize) -> bool {
    decide(g, k, &SolverConfig::default()).unwrap().is_yes()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn serialize_then_parse_is_identity((g, k) in instance()) {
        let (h, k2) = parse(&serialize(&g, k)).unwrap();
        prop_assert_eq!(h, g);
        prop_assert_eq!(k2, k);
    }

    #[test]
    fn kernel_is_equivalent_and_no_larger((g, k) in instance()) {
        match kernelize(&g, k, &KernelConfig::default()) {
            KernelOutcome::Kernel(ki) => {
                prop_assert!(ki.k <= k);
                prop_assert!(ki.graph.vertex_count() <= g.vertex_count());
                prop_assert_eq!(yes(&ki.graph, ki.k), yes(&g, k));
                let violations = audit(&ki.graph, ki.k, &ki.base_set());
                prop_assert!(violations.is_empty(), "{:?}", violations);
            }
            KernelOutcome::DecidedNo { .. } => prop_assert!(!yes(&g, k)),
        }
    }

    #[test]
    fn trace_replays_to_the_kernel((g, k) in instance()) {
        let out = kernelize(&g, k, &KernelConfig::default());
        let replayed = replay(&g, k, out.trace()).unwrap();
        match out {
            KernelOutcome::Kernel(ki) => prop_assert_eq!(replayed, Replayed::Instance(ki.graph, ki.k)),
            KernelOutcome::DecidedNo { .. } => prop_assert_eq!(replayed, Replayed::DecidedNo),
        }
    }

    #[test]
    fn every_application_lowers_the_potential((g, k) in instance()) {
        let out = kernelize(&g, k, &KernelConfig::default());
        let mut prefix = Vec::new();
        let mut last = potential(&g, k);
        for app in out.trace() {
            prefix.push(app.clone());
            if app.base_set.is_some() {
                continue;
            }
            if let Ok(Replayed::Instance(h, kh)) = replay(&g, k, &prefix) {
                let now = potential(&h, kh);
                prop_assert!(now < last, "{:?} did not decrease {:?}", app.rule, last);
                prop_assert!(kh <= last.0);
                last = now;
            }
        }
    }

    #[test]
    fn recognition_matches_definition(seed in any::<u64>(), n in 1usize..=8, d in 0.05f64..0.8) {
        let g = random_multigraph(&mut seeded(seed, 1), n, d, 0.03);
        prop_assert_eq!(is_pitg(&g).is_ok(), common::brute_pitg(&g));
    }

    #[test]
    fn branching_matches_enumeration(seed in any::<u64>(), n in 1usize..=9, d in 0.1f64..0.6, k in 0usize..=3) {
        let g = random_multigraph(&mut seeded(seed, 2), n, d, 0.1);
        prop_assert_eq!(yes(&g, k), decide_by_enumeration(&g, k).is_yes());
    }

    #[test]
    fn greedy_and_base_set_are_modulators((g, k) in instance()) {
        let z = greedy_modulator(&g);
        prop_assert!(is_pitg(&g.delete_vertices(&z).unwrap()).is_ok());
        match compute_base_set(&g, k, &SolverConfig::default(), false) {
            BaseSet::Modulator { set, .. } => prop_assert!(is_pitg(&g.delete_vertices(&set).unwrap()).is_ok()),
            BaseSet::DecidedNo => prop_assert!(!yes(&g, k)),
        }
    }

    #[test]
    fn clique_partition_and_bypass(seed in any::<u64>(), n in 3usize..=24, span in 1.0f64..8.0) {
        let g = random_unit_interval(&mut seeded(seed, 3), n, span);
        for comp in g.connected_components() {
            let Ok(PigResult::Ordering(order)) = proper_interval_ordering(&g, &comp) else {
                return Err(TestCaseError::fail("unit interval component without an ordering"));
            };
            let p = build_clique_partition(&g, &order).unwrap();
            let covered: VertexSet = p.vertices().collect();
            prop_assert_eq!(&covered, &comp);
            for c in &p.cliques {
                for (i, &a) in c.iter().enumerate() {
                    for &b in &c[i + 1..] {
                        prop_assert!(g.adjacent(a, b));
                    }
                }
            }
            for l in 1..p.len().saturating_sub(1) {
                let mut h = g.clone();
                if bypass(&mut h, &p, l).is_ok() {
                    prop_assert!(is_pitg(&h).is_ok(), "bypass of clique {} broke the class", l);
                }
            }
        }
    }
}
