//! Hamiltonian paths and cycles in graph squares with incidence side
//! conditions: the witness type, its independent validator, the search
//! engine, the property checkers built on it, and path surgery.

mod checks;
mod search;
mod surgery;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, Edge, Graph};

pub(crate) use checks::require_distinct;
pub use checks::{
    check_apex_hc, check_corollary1, check_corollary2, check_endpoint_edge, check_fbar, check_fk, check_strong_f3,
    check_theorem2, check_vw_ham_cycle, fbar_triple, has_fk_property, ApexCheck, ApexHypotheses, ChainWitnesses,
    EndpointBranch,
};
pub use search::{ham_search, ham_search_in, Search, SearchOptions};
pub use surgery::{concatenate, shortcut, splice, Embedded};

/// One side condition on a hamiltonian walk.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Requirement {
    /// `count` (1 or 2) host edges of the walk incident to `vertex`.
    EdgeAt { vertex: usize, count: u8 },
    /// The walk traverses this host edge.
    Edge { edge: Edge },
    /// A host edge of the walk at `vertex`, or else a walk edge joining two
    /// neighbours of `vertex`.
    EdgeAtOrNeighborPair { vertex: usize },
}

impl Requirement {
    fn slots(&self) -> usize {
        match *self {
            Requirement::EdgeAt { count, .. } => count as usize,
            Requirement::Edge { .. } | Requirement::EdgeAtOrNeighborPair { .. } => 1,
        }
    }

    fn vertices(&self) -> Vec<usize> {
        match *self {
            Requirement::EdgeAt { vertex, .. } | Requirement::EdgeAtOrNeighborPair { vertex } => {
                vec![vertex]
            }
            Requirement::Edge { edge } => vec![edge.lo(), edge.hi()],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Constraint {
    pub label: String,
    #[serde(flatten)]
    pub requirement: Requirement,
}

/// What a hamiltonian walk must satisfy: its shape (cycle, or path between
/// fixed endpoints) and a list of labelled requirements. All host edges
/// claimed by requirements must be pairwise distinct.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IncidenceSpec {
    /// `None` asks for a hamiltonian cycle.
    pub endpoints: Option<(usize, usize)>,
    pub constraints: Vec<Constraint>,
}

impl IncidenceSpec {
    pub fn cycle() -> Self {
        IncidenceSpec { endpoints: None, constraints: Vec::new() }
    }

    pub fn path(from: usize, to: usize) -> Self {
        IncidenceSpec { endpoints: Some((from, to)), constraints: Vec::new() }
    }

    pub fn is_cycle(&self) -> bool {
        self.endpoints.is_none()
    }

    pub fn with(mut self, label: impl Into<String>, requirement: Requirement) -> Self {
        self.constraints.push(Constraint { label: label.into(), requirement });
        self
    }

    pub fn edge_at(self, label: impl Into<String>, vertex: usize, count: u8) -> Self {
        self.with(label, Requirement::EdgeAt { vertex, count })
    }

    pub fn edge(self, label: impl Into<String>, edge: Edge) -> Self {
        self.with(label, Requirement::Edge { edge })
    }

    pub fn edge_at_or_neighbor_pair(self, label: impl Into<String>, vertex: usize) -> Self {
        self.with(label, Requirement::EdgeAtOrNeighborPair { vertex })
    }

    /// Checks labels, vertex ranges and counts against `base`.
    pub fn check(&self, base: &Graph) -> Result<()> {
        let n = base.n();
        let bad = |msg: String| Err(Error::MalformedSpec(msg));
        if let Some((a, b)) = self.endpoints {
            if a >= n || b >= n {
                return bad(format!("endpoint out of range ({a}, {b}) for {n} vertices"));
            }
            if a == b {
                return bad(format!("path endpoints coincide at {a}"));
            }
        }
        let mut labels = BTreeSet::new();
        for c in &self.constraints {
            if !labels.insert(c.label.as_str()) {
                return bad(format!("duplicate constraint label `{}`", c.label));
            }
            if let Some(&v) = c.requirement.vertices().iter().find(|&&v| v >= n) {
                return bad(format!("constraint `{}` references vertex {v} >= {n}", c.label));
            }
            match c.requirement {
                Requirement::EdgeAt { count, .. } if !(1..=2).contains(&count) => {
                    return bad(format!("constraint `{}` has count {count}, expected 1 or 2", c.label));
                }
                Requirement::Edge { edge } if !base.contains_edge(edge) => {
                    return bad(format!("constraint `{}` requires {edge}, not a host edge", c.label));
                }
                _ => {}
            }
        }
        Ok(())
    }
}

/// A hamiltonian path or cycle of `host²`, with the edges that discharge each
/// requirement of `spec`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamWitness {
    /// The base graph `G` (not its square), serialized as graph6.
    pub host: Graph,
    pub sequence: Vec<usize>,
    pub closed: bool,
    pub spec: IncidenceSpec,
    /// Constraint label to the edges that satisfy it.
    pub satisfied: BTreeMap<String, Vec<Edge>>,
}

impl HamWitness {
    /// Consecutive pairs, including the closing pair of a cycle.
    pub fn edges(&self) -> Vec<Edge> {
        walk_edges(&self.sequence, self.closed)
    }

    /// Witness edges that are edges of the host.
    pub fn host_edges(&self) -> Vec<Edge> {
        self.edges().into_iter().filter(|&e| self.host.contains_edge(e)).collect()
    }

    pub fn uses_edge(&self, e: Edge) -> bool {
        self.edges().contains(&e)
    }

    /// Independent re-check of every invariant; does not reuse the search code.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidWitness(msg));
        let g = &self.host;
        let n = g.n();
        if self.closed != self.spec.endpoints.is_none() {
            return fail("closed flag disagrees with the spec shape".into());
        }
        if self.sequence.len() != n {
            return fail(format!("sequence has {} vertices, host has {n}", self.sequence.len()));
        }
        let mut seen = 0u64;
        for &v in &self.sequence {
            if v >= n || seen & bit(v) != 0 {
                return fail(format!("vertex {v} repeated or out of range"));
            }
            seen |= bit(v);
        }
        if self.closed && n < 3 {
            return fail("a hamiltonian cycle needs at least 3 vertices".into());
        }
        if !self.closed && n < 2 {
            return fail("a hamiltonian path needs at least 2 vertices".into());
        }
        let walk = self.edges();
        for e in &walk {
            let (a, b) = (e.lo(), e.hi());
            let near = g.has_edge(a, b) || g.neighbor_iter(a).any(|c| g.has_edge(c, b));
            if !near {
                return fail(format!("{a} and {b} are not adjacent in the square"));
            }
        }
        if let Some((x, y)) = self.spec.endpoints {
            if self.sequence[0] != x || self.sequence[n - 1] != y {
                return fail(format!("path must run from {x} to {y}"));
            }
        }
        let mut claimed: Vec<Edge> = Vec::new();
        for c in &self.spec.constraints {
            let Some(edges) = self.satisfied.get(&c.label) else {
                return fail(format!("constraint `{}` has no satisfying edge", c.label));
            };
            if edges.len() != c.requirement.slots() {
                return fail(format!("constraint `{}` needs {} edges", c.label, c.requirement.slots()));
            }
            for &e in edges {
                if !walk.contains(&e) {
                    return fail(format!("claimed edge {e} is not traversed"));
                }
                let at = |v: usize| e.contains(v) && g.contains_edge(e);
                match c.requirement {
                    Requirement::EdgeAt { vertex, .. } => {
                        if !at(vertex) {
                            return fail(format!("{e} is not a host edge at {vertex}"));
                        }
                        claimed.push(e);
                    }
                    Requirement::Edge { edge } => {
                        if e != edge || !g.contains_edge(e) {
                            return fail(format!("constraint `{}` claims {e}, wants {edge}", c.label));
                        }
                        claimed.push(e);
                    }
                    Requirement::EdgeAtOrNeighborPair { vertex } => {
                        if at(vertex) {
                            claimed.push(e);
                        } else if !(g.has_edge(e.lo(), vertex) && g.has_edge(e.hi(), vertex)) {
                            return fail(format!("{e} neither meets {vertex} nor joins two of its neighbours"));
                        }
                    }
                }
            }
        }
        let distinct: BTreeSet<Edge> = claimed.iter().copied().collect();
        if distinct.len() != claimed.len() {
            return fail("claimed host edges are not pairwise distinct".into());
        }
        if let Some(extra) = self.satisfied.keys().find(|k| !self.spec.constraints.iter().any(|c| &c.label == *k)) {
            return fail(format!("claim `{extra}` has no matching constraint"));
        }
        Ok(())
    }
}

pub(crate) fn walk_edges(seq: &[usize], closed: bool) -> Vec<Edge> {
    let mut out: Vec<Edge> = seq.windows(2).map(|w| Edge::new(w[0], w[1])).collect();
    if closed && seq.len() > 2 {
        out.push(Edge::new(seq[seq.len() - 1], seq[0]));
    }
    out
}

/// Assigns walk edges to the requirements of `spec` so that host edges are
/// claimed at most once. Host-edge alternatives are preferred over
/// neighbour-pair edges.
pub(crate) fn assign_claims(spec: &IncidenceSpec, base: &Graph, walk: &[Edge]) -> Option<BTreeMap<String, Vec<Edge>>> {
    struct Slot<'a> {
        label: &'a str,
        candidates: Vec<(Edge, bool)>,
    }
    let mut slots = Vec::new();
    for c in &spec.constraints {
        let host_at = |v: usize| -> Vec<(Edge, bool)> {
            walk.iter().filter(|e| e.contains(v) && base.contains_edge(**e)).map(|&e| (e, true)).collect()
        };
        match c.requirement {
            Requirement::EdgeAt { vertex, count } => {
                let cands = host_at(vertex);
                for _ in 0..count {
                    slots.push(Slot { label: &c.label, candidates: cands.clone() });
                }
            }
            Requirement::Edge { edge } => {
                let cands = if walk.contains(&edge) { vec![(edge, true)] } else { vec![] };
                slots.push(Slot { label: &c.label, candidates: cands });
            }
            Requirement::EdgeAtOrNeighborPair { vertex } => {
                let mut cands = host_at(vertex);
                let nb = base.neighbors(vertex);
                cands.extend(
                    walk.iter().filter(|e| nb & bit(e.lo()) != 0 && nb & bit(e.hi()) != 0).map(|&e| (e, false)),
                );
                slots.push(Slot { label: &c.label, candidates: cands });
            }
        }
    }

    fn go(slots: &[Slot<'_>], i: usize, used: &mut Vec<Edge>, pick: &mut Vec<Edge>) -> bool {
        if i == slots.len() {
            return true;
        }
        for &(e, claims) in &slots[i].candidates {
            if claims && used.contains(&e) {
                continue;
            }
            // symmetric slots of one constraint take candidates in increasing order
            if i > 0 && slots[i - 1].label == slots[i].label && pick[i - 1] >= e {
                continue;
            }
            if claims {
                used.push(e);
            }
            pick.push(e);
            if go(slots, i + 1, used, pick) {
                return true;
            }
            pick.pop();
            if claims {
                used.pop();
            }
        }
        false
    }

    let mut used = Vec::new();
    let mut pick = Vec::new();
    if !go(&slots, 0, &mut used, &mut pick) {
        return None;
    }
    let mut out: BTreeMap<String, Vec<Edge>> = BTreeMap::new();
    for (slot, e) in slots.iter().zip(pick) {
        out.entry(slot.label.to_string()).or_default().push(e);
    }
    Some(out)
}
