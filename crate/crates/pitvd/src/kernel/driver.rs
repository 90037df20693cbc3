use crate::exact::SolverConfig;
use crate::graph::{MultiGraph, VertexSet};
use crate::kernel::base_set::{compute_base_set, BaseSet};
use crate::kernel::instance::{apply_edits, potential, BaseSetRecord, KernelInstance, RuleApplication, RuleId};
use crate::kernel::modulator::Modulator;
use crate::kernel::{pig_side, preprocess, tree_side, RULE_COUNT};

type LocalRule = fn(&MultiGraph, usize, bool) -> Option<RuleApplication>;
type ModularRule = fn(&MultiGraph, usize, &Modulator, bool) -> Option<RuleApplication>;

/// Set of enabled rules, bit `r` for rule `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RuleMask(u16);

impl RuleMask {
    pub const ALL: RuleMask = RuleMask(((1u16 << RULE_COUNT) - 1) << 1);

    /// Rules `1..=r`.
    pub fn upto(r: u8) -> Self {
        RuleMask(((1u16 << r) - 1) << 1)
    }

    pub fn contains(self, r: u8) -> bool {
        self.0 & (1 << r) != 0
    }

    fn needs_modulator(self) -> bool {
        (8..=RULE_COUNT).any(|r| self.contains(r))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelConfig {
    pub solver: SolverConfig,
    /// Rule whose action is deliberately perturbed.
    pub mutation: Option<u8>,
    pub rules: RuleMask,
    /// Use greedy obstruction deletion instead of the exact bootstrap.
    pub force_greedy: bool,
}

impl Default for KernelConfig {
    fn default() -> Self {
        KernelConfig { solver: SolverConfig::default(), mutation: None, rules: RuleMask::ALL, force_greedy: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Apply(RuleApplication),
    Fixpoint,
    DecidedNo,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelOutcome {
    Kernel(KernelInstance),
    DecidedNo { trace: Vec<RuleApplication> },
}

impl KernelOutcome {
    pub fn trace(&self) -> &[RuleApplication] {
        match self {
            KernelOutcome::Kernel(ki) => &ki.trace,
            KernelOutcome::DecidedNo { trace } => trace,
        }
    }
}

/// Applies the rules one at a time. Rules are tried in ascending order and the
/// search restarts from rule 1 after every application.
pub struct Kernelizer {
    graph: MultiGraph,
    k: usize,
    trace: Vec<RuleApplication>,
    cfg: KernelConfig,
    base: Option<VertexSet>,
    decided_no: bool,
}

impl Kernelizer {
    pub fn new(graph: MultiGraph, k: usize, cfg: KernelConfig) -> Self {
        Kernelizer { graph, k, trace: Vec::new(), cfg, base: None, decided_no: false }
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn trace(&self) -> &[RuleApplication] {
        &self.trace
    }

    /// The cached modulator, if one is current.
    pub fn base_set(&self) -> Option<&VertexSet> {
        self.base.as_ref()
    }

    fn mutated(&self, r: u8) -> bool {
        self.cfg.mutation == Some(r)
    }

    fn record_base(&mut self, set: &VertexSet, exact: bool, decided_no: bool) {
        self.trace.push(RuleApplication {
            rule: RuleId::BaseSet,
            edits: Vec::new(),
            k_delta: 0,
            base_set: Some(BaseSetRecord { set: set.iter().copied().collect(), exact, decided_no }),
        });
    }

    /// Current modulator structure, recomputing `S` when needed. `None` means the
    /// bootstrap decided the instance negatively.
    fn modulator(&mut self) -> Option<Modulator> {
        if let Some(s) = &self.base {
            if let Ok(m) = Modulator::build(&self.graph, s) {
                return Some(m);
            }
        }
        match compute_base_set(&self.graph, self.k, &self.cfg.solver, self.cfg.force_greedy) {
            BaseSet::DecidedNo => {
                self.record_base(&VertexSet::new(), true, true);
                self.decided_no = true;
                None
            }
            BaseSet::Modulator { set, exact } => {
                self.record_base(&set, exact, false);
                let m = Modulator::build(&self.graph, &set).expect("fresh base set leaves a (prop-int, tree)-graph");
                self.base = Some(set);
                Some(m)
            }
        }
    }

    /// The next rule application, without applying it.
    pub fn next_step(&mut self) -> Step {
        if self.decided_no {
            return Step::DecidedNo;
        }
        let (g, k) = (&self.graph, self.k);
        let on = |r: u8| self.cfg.rules.contains(r);
        let local: [(u8, LocalRule); 7] = [
            (1, |g, _, m| preprocess::rule1(g, m)),
            (2, |g, _, m| preprocess::rule2(g, m)),
            (3, preprocess::rule3),
            (4, |g, _, m| preprocess::rule4(g, m)),
            (5, |g, _, m| preprocess::rule5(g, m)),
            (6, |g, _, m| preprocess::rule6(g, m)),
            (7, |g, _, m| preprocess::rule7(g, m)),
        ];
        for (r, rule) in local {
            if on(r) {
                if let Some(app) = rule(g, k, self.mutated(r)) {
                    return Step::Apply(app);
                }
            }
        }
        if !self.cfg.rules.needs_modulator() || self.graph.is_empty() {
            return Step::Fixpoint;
        }
        let Some(m) = self.modulator() else { return Step::DecidedNo };
        let (g, k) = (&self.graph, self.k);
        let modular: [(u8, ModularRule); 7] = [
            (8, |_, _, m, x| tree_side::rule8(m, x)),
            (9, tree_side::rule9),
            (10, tree_side::rule10),
            (11, |g, _, m, x| pig_side::rule11(g, m, x)),
            (12, pig_side::rule12),
            (13, pig_side::rule13),
            (14, pig_side::rule14),
        ];
        for (r, rule) in modular {
            if self.cfg.rules.contains(r) {
                if let Some(app) = rule(g, k, &m, self.mutated(r)) {
                    return Step::Apply(app);
                }
            }
        }
        Step::Fixpoint
    }

    /// Applies `app`; returns false when its budget cost exceeds the remaining `k`.
    pub fn apply(&mut self, app: RuleApplication) -> bool {
        if app.k_delta > self.k {
            self.trace.push(app);
            self.decided_no = true;
            return false;
        }
        let before = potential(&self.graph, self.k);
        apply_edits(&mut self.graph, &app.edits).expect("rule edits refer to present vertices");
        self.k -= app.k_delta;
        let after = potential(&self.graph, self.k);
        assert!(after < before, "{} did not decrease the potential: {before:?} -> {after:?}", app.rule);
        if app.rule == RuleId::Rule(5) || self.base.as_ref().is_some_and(|s| app.touches(s)) {
            self.base = None;
        }
        self.trace.push(app);
        true
    }

    pub fn run(mut self) -> KernelOutcome {
        loop {
            match self.next_step() {
                Step::Apply(app) => {
                    if !self.apply(app) {
                        return KernelOutcome::DecidedNo { trace: self.trace };
                    }
                }
                Step::Fixpoint => {
                    return KernelOutcome::Kernel(KernelInstance { graph: self.graph, k: self.k, trace: self.trace })
                }
                Step::DecidedNo => return KernelOutcome::DecidedNo { trace: self.trace },
            }
        }
    }
}

pub fn kernelize(g: &MultiGraph, k: usize, cfg: &KernelConfig) -> KernelOutcome {
    Kernelizer::new(g.clone(), k, cfg.clone()).run()
}
