//! Instances, primitive edits and the replayable trace.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{GraphError, MultiGraph, VertexId, VertexSet};

/// Which step of the pipeline produced a trace entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleId {
    BaseSet,
    Rule(u8),
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleId::BaseSet => write!(f, "base-set"),
            RuleId::Rule(r) => write!(f, "R{r}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Edit {
    DeleteVertices(Vec<VertexId>),
    /// Multiplicity 0 removes the edge.
    SetMultiplicity(VertexId, VertexId, u32),
}

/// Modulator recorded in the trace; replay ignores it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseSetRecord {
    pub set: Vec<VertexId>,
    /// False when the bootstrap hit the scale guard and fell back to greedy deletion.
    pub exact: bool,
    pub decided_no: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleApplication {
    pub rule: RuleId,
    pub edits: Vec<Edit>,
    /// Amount subtracted from the budget.
    pub k_delta: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_set: Option<BaseSetRecord>,
}

impl RuleApplication {
    pub fn new(rule: u8, edits: Vec<Edit>, k_delta: usize) -> Self {
        RuleApplication { rule: RuleId::Rule(rule), edits, k_delta, base_set: None }
    }

    pub fn delete(rule: u8, z: impl IntoIterator<Item = VertexId>, k_delta: usize) -> Self {
        Self::new(rule, vec![Edit::DeleteVertices(z.into_iter().collect())], k_delta)
    }

    pub fn deleted(&self) -> VertexSet {
        let mut out = VertexSet::new();
        for e in &self.edits {
            if let Edit::DeleteVertices(z) = e {
                out.extend(z.iter().copied());
            }
        }
        out
    }

    /// Whether any edit deletes a vertex of `s` or changes an edge incident to `s`.
    pub fn touches(&self, s: &VertexSet) -> bool {
        self.edits.iter().any(|e| match e {
            Edit::DeleteVertices(z) => z.iter().any(|v| s.contains(v)),
            Edit::SetMultiplicity(u, v, _) => s.contains(u) || s.contains(v),
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReplayError {
    #[error("step {step}: {source}")]
    Graph { step: usize, source: GraphError },
}

pub fn apply_edits(g: &mut MultiGraph, edits: &[Edit]) -> Result<(), GraphError> {
    for e in edits {
        match e {
            Edit::DeleteVertices(z) => g.remove_vertices(z)?,
            Edit::SetMultiplicity(u, v, m) => g.set_multiplicity(*u, *v, *m)?,
        }
    }
    Ok(())
}

/// Lexicographic progress measure; every rule application strictly decreases it.
pub fn potential(g: &MultiGraph, k: usize) -> (usize, usize, u64) {
    (k, g.vertex_count(), g.total_multiplicity())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelInstance {
    pub graph: MultiGraph,
    pub k: usize,
    pub trace: Vec<RuleApplication>,
}

impl KernelInstance {
    pub fn new(graph: MultiGraph, k: usize) -> Self {
        KernelInstance { graph, k, trace: Vec::new() }
    }

    /// Surviving vertices of the most recent base-set entry.
    pub fn base_set(&self) -> VertexSet {
        let last = self.trace.iter().rev().find_map(|a| a.base_set.as_ref());
        last.map(|b| b.set.iter().copied().filter(|&v| self.graph.has_vertex(v)).collect()).unwrap_or_default()
    }
}

/// Result of replaying a trace on the original instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Replayed {
    Instance(MultiGraph, usize),
    DecidedNo,
}

pub fn replay(g: &MultiGraph, k: usize, trace: &[RuleApplication]) -> Result<Replayed, ReplayError> {
    let mut g = g.clone();
    let mut k = k;
    for (step, app) in trace.iter().enumerate() {
        if app.base_set.as_ref().is_some_and(|b| b.decided_no) {
            return Ok(Replayed::DecidedNo);
        }
        if app.k_delta > k {
            return Ok(Replayed::DecidedNo);
        }
        apply_edits(&mut g, &app.edits).map_err(|source| ReplayError::Graph { step, source })?;
        k -= app.k_delta;
    }
    Ok(Replayed::Instance(g, k))
}
