//! Randomised equivalence harness: `decide(input) == decide(kernel)`.

use std::panic::{catch_unwind, AssertUnwindSafe};

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{decide, SolverConfig};
use crate::generate::{random_multigraph, seeded};
use crate::graph::MultiGraph;
use crate::kernel::audit::audit;
use crate::kernel::{kernelize, KernelConfig, KernelOutcome};

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyParams {
    pub count: usize,
    pub min_n: usize,
    pub max_n: usize,
    pub densities: Vec<f64>,
    pub double_rate: f64,
    pub max_k: usize,
    pub seed: u64,
    pub mutation: Option<u8>,
    pub solver: SolverConfig,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            count: 100,
            min_n: 4,
            max_n: 12,
            densities: vec![0.15, 0.3, 0.5],
            double_rate: 0.1,
            max_k: 4,
            seed: 1,
            mutation: None,
            solver: SolverConfig::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub index: usize,
    pub n: usize,
    pub edges: usize,
    pub k: usize,
    pub input_yes: bool,
    /// `None` when the kernel run decided the instance negatively.
    pub kernel_n: Option<usize>,
    pub kernel_yes: bool,
    pub audit: Vec<String>,
    pub panic: Option<String>,
}

impl CaseReport {
    pub fn equivalent(&self) -> bool {
        self.panic.is_none() && self.input_yes == self.kernel_yes
    }

    pub fn passed(&self) -> bool {
        self.equivalent() && self.audit.is_empty()
    }
}

/// The `index`-th instance of a run; independent of `count` and of scheduling.
pub fn instance(p: &VerifyParams, index: usize) -> (MultiGraph, usize) {
    let mut rng = seeded(p.seed, index as u64);
    let n = rng.gen_range(p.min_n..=p.max_n);
    let density = p.densities[rng.gen_range(0..p.densities.len())];
    let k = rng.gen_range(0..=p.max_k);
    (random_multigraph(&mut rng, n, density, p.double_rate), k)
}

pub fn check(g: &MultiGraph, k: usize, index: usize, cfg: &KernelConfig) -> CaseReport {
    let input_yes = decide(g, k, &cfg.solver).expect("instance within the solver scale").is_yes();
    let mut report = CaseReport {
        index,
        n: g.vertex_count(),
        edges: g.edge_count(),
        k,
        input_yes,
        kernel_n: None,
        kernel_yes: false,
        audit: Vec::new(),
        panic: None,
    };
    match catch_unwind(AssertUnwindSafe(|| kernelize(g, k, cfg))) {
        Ok(KernelOutcome::Kernel(ki)) => {
            report.kernel_n = Some(ki.graph.vertex_count());
            report.kernel_yes = decide(&ki.graph, ki.k, &cfg.solver).expect("kernel within the solver scale").is_yes();
            if cfg.rules == KernelConfig::default().rules {
                report.audit = audit(&ki.graph, ki.k, &ki.base_set());
            }
        }
        Ok(KernelOutcome::DecidedNo { .. }) => {}
        Err(e) => {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            report.panic = Some(msg.unwrap_or_else(|| "panic".into()));
        }
    }
    report
}

/// Runs every instance in parallel; the result is ordered by index.
pub fn verify(p: &VerifyParams) -> Vec<CaseReport> {
    let cfg = KernelConfig { solver: p.solver, mutation: p.mutation, ..KernelConfig::default() };
    (0..p.count)
        .into_par_iter()
        .map(|i| {
            let (g, k) = instance(p, i);
            check(&g, k, i, &cfg)
        })
        .collect()
}
