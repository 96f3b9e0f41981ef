use serde::{Deserialize, Serialize};

use super::{assign_claims, walk_edges, HamWitness, IncidenceSpec, Requirement};
use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};

/// Outcome of a complete search. `Exhausted` is only reported after the whole
/// space was explored; a hit node budget yields `Undecided` instead.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "witness", rename_all = "kebab-case")]
pub enum Search<T> {
    Found(T),
    Exhausted,
    Undecided,
}

impl<T> Search<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, Search::Exhausted)
    }

    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn as_ref(&self) -> Search<&T> {
        match self {
            Search::Found(t) => Search::Found(t),
            Search::Exhausted => Search::Exhausted,
            Search::Undecided => Search::Undecided,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Search<U> {
        match self {
            Search::Found(t) => Search::Found(f(t)),
            Search::Exhausted => Search::Exhausted,
            Search::Undecided => Search::Undecided,
        }
    }

    pub fn status(&self) -> &'static str {
        match self {
            Search::Found(_) => "found",
            Search::Exhausted => "exhausted",
            Search::Undecided => "undecided",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    /// Maximum number of search nodes before giving up with `Undecided`.
    pub node_budget: Option<u64>,
}

impl SearchOptions {
    pub fn unlimited() -> Self {
        SearchOptions { node_budget: None }
    }

    pub fn with_budget(nodes: u64) -> Self {
        SearchOptions { node_budget: Some(nodes) }
    }
}

/// Searches `g²` for a hamiltonian walk satisfying `spec`.
pub fn ham_search(g: &Graph, spec: &IncidenceSpec, opts: SearchOptions) -> Result<Search<HamWitness>> {
    ham_search_in(g, &g.square(), spec, opts)
}

/// Like [`ham_search`] but only traverses edges of `allowed`, which must be a
/// spanning subgraph of `base²`; requirements are judged against `base`.
pub fn ham_search_in(
    base: &Graph,
    allowed: &Graph,
    spec: &IncidenceSpec,
    opts: SearchOptions,
) -> Result<Search<HamWitness>> {
    spec.check(base)?;
    if allowed.n() != base.n() {
        return Err(Error::Precondition("search graph and base graph differ in order".into()));
    }
    let n = base.n();
    if n == 0 {
        return Err(Error::Precondition("empty graph".into()));
    }
    if spec.is_cycle() && n < 3 {
        return Ok(Search::Exhausted);
    }
    let mut need = vec![0u32; n];
    let mut partners = vec![0u64; n];
    for c in &spec.constraints {
        match c.requirement {
            Requirement::EdgeAt { vertex, count } => need[vertex] += count as u32,
            Requirement::Edge { edge } => {
                partners[edge.lo()] |= bit(edge.hi());
                partners[edge.hi()] |= bit(edge.lo());
            }
            Requirement::EdgeAtOrNeighborPair { .. } => {}
        }
    }
    let start = match spec.endpoints {
        Some((x, _)) => x,
        None => (0..n).max_by_key(|&v| (need[v], std::cmp::Reverse(v))).unwrap(),
    };
    let mut engine = Engine {
        base,
        allowed,
        spec,
        n,
        all: base.vertex_mask(),
        start,
        target: spec.endpoints.map(|(_, y)| y),
        need,
        partners,
        seq: Vec::with_capacity(n),
        nodes: 0,
        budget: opts.node_budget,
        found: None,
    };
    engine.seq.push(start);
    let outcome = engine.extend(start, None, bit(start));
    Ok(match outcome {
        Flow::Done => Search::Found(engine.found.take().unwrap()),
        Flow::Continue => Search::Exhausted,
        Flow::OutOfBudget => Search::Undecided,
    })
}

enum Flow {
    Continue,
    Done,
    OutOfBudget,
}

struct Engine<'a> {
    base: &'a Graph,
    allowed: &'a Graph,
    spec: &'a IncidenceSpec,
    n: usize,
    all: u64,
    start: usize,
    target: Option<usize>,
    need: Vec<u32>,
    partners: Vec<u64>,
    seq: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
    found: Option<HamWitness>,
}

impl Engine<'_> {
    fn host_edges(&self, v: usize, around: u64) -> u32 {
        (self.base.neighbors(v) & around).count_ones()
    }

    /// `v` with walk neighbours `around` meets its local requirements.
    fn locally_ok(&self, v: usize, around: u64) -> bool {
        self.host_edges(v, around) >= self.need[v] && self.partners[v] & !around == 0
    }

    fn extend(&mut self, cur: usize, prev: Option<usize>, visited: u64) -> Flow {
        self.nodes += 1;
        if let Some(b) = self.budget {
            if self.nodes > b {
                return Flow::OutOfBudget;
            }
        }
        if visited == self.all {
            return self.finish(cur, prev);
        }
        let remaining = self.all & !visited;
        let mut cands = self.allowed.neighbors(cur) & remaining;
        if let Some(t) = self.target {
            if remaining != bit(t) {
                cands &= !bit(t);
            }
        }
        let host = self.base.neighbors(cur);
        let order = bits(cands & host).chain(bits(cands & !host));
        let order: Vec<usize> = order.collect();
        for nxt in order {
            // cur's walk neighbourhood is now complete unless cur is a cycle start
            let is_cycle_start = self.target.is_none() && prev.is_none();
            if !is_cycle_start {
                let around = prev.map_or(0, bit) | bit(nxt);
                if !self.locally_ok(cur, around) {
                    continue;
                }
            } else if self.need[cur] >= 2 && host & bit(nxt) == 0 {
                continue;
            }
            let rest = remaining & !bit(nxt);
            if !self.feasible(nxt, rest) {
                continue;
            }
            self.seq.push(nxt);
            match self.extend(nxt, Some(cur), visited | bit(nxt)) {
                Flow::Continue => {}
                other => return other,
            }
            self.seq.pop();
        }
        Flow::Continue
    }

    /// Cheap necessary conditions for completing the walk from `head` through
    /// every vertex of `rest`.
    fn feasible(&self, head: usize, rest: u64) -> bool {
        if rest == 0 {
            return true;
        }
        let adj = |v: usize| self.allowed.neighbors(v);
        let closing = if self.target.is_none() { bit(self.start) } else { 0 };
        if self.target.is_none() && adj(self.start) & (rest | bit(head)) == 0 {
            return false;
        }
        for r in bits(rest) {
            let avail = adj(r) & (rest | bit(head) | closing);
            let is_target = Some(r) == self.target;
            let want = if is_target { 1 } else { 2 };
            if avail.count_ones() < want {
                return false;
            }
            let host_avail = self.base.neighbors(r) & (rest | bit(head) | closing);
            if host_avail.count_ones() < self.need[r] {
                return false;
            }
        }
        // rest must hang together and be entered from head
        let first = adj(head) & rest;
        if first == 0 {
            return false;
        }
        let reach = self.allowed.reach_within(first.trailing_zeros() as usize, rest);
        reach == rest
    }

    fn finish(&mut self, last: usize, prev: Option<usize>) -> Flow {
        match self.target {
            Some(t) => {
                if last != t || !self.locally_ok(last, prev.map_or(0, bit)) {
                    return Flow::Continue;
                }
                let start_around = self.seq.get(1).map_or(0, |&s| bit(s));
                if !self.locally_ok(self.start, start_around) {
                    return Flow::Continue;
                }
            }
            None => {
                if !self.allowed.has_edge(last, self.start) {
                    return Flow::Continue;
                }
                if !self.locally_ok(last, prev.map_or(0, bit) | bit(self.start)) {
                    return Flow::Continue;
                }
                if !self.locally_ok(self.start, bit(self.seq[1]) | bit(last)) {
                    return Flow::Continue;
                }
            }
        }
        let closed = self.target.is_none();
        let walk = walk_edges(&self.seq, closed);
        let Some(satisfied) = assign_claims(self.spec, self.base, &walk) else {
            return Flow::Continue;
        };
        debug_assert_eq!(self.seq.len(), self.n);
        self.found = Some(HamWitness {
            host: self.base.clone(),
            sequence: self.seq.clone(),
            closed,
            spec: self.spec.clone(),
            satisfied,
        });
        Flow::Done
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    #[test]
    fn path_in_triangle() {
        let k3 = Graph::complete(3).unwrap();
        let w = ham_search(&k3, &IncidenceSpec::path(0, 2), SearchOptions::default()).unwrap().found().unwrap();
        assert_eq!(w.sequence, vec![0, 1, 2]);
        w.validate().unwrap();
    }

    #[test]
    fn c6_cycle_with_both_edges_at_zero() {
        let c6 = Graph::cycle(6).unwrap();
        let spec = IncidenceSpec::cycle().edge_at("v", 0, 2);
        let w = ham_search(&c6, &spec, SearchOptions::default()).unwrap().found().unwrap();
        w.validate().unwrap();
        assert_eq!(w.satisfied["v"], vec![Edge::new(0, 1), Edge::new(0, 5)]);
    }

    #[test]
    fn k23_fails_f5_tuple() {
        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        let spec = IncidenceSpec::path(0, 1).edge_at("x3", 2, 1).edge_at("x4", 3, 1).edge_at("x5", 4, 1);
        assert_eq!(ham_search(&k23, &spec, SearchOptions::default()).unwrap(), Search::Exhausted);
    }

    #[test]
    fn budget_turns_negatives_into_undecided() {
        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        let spec = IncidenceSpec::path(0, 1).edge_at("x3", 2, 1).edge_at("x4", 3, 1).edge_at("x5", 4, 1);
        let out = ham_search(&k23, &spec, SearchOptions::with_budget(2)).unwrap();
        assert_eq!(out, Search::Undecided);
    }

    #[test]
    fn malformed_spec_is_an_error() {
        let g = Graph::cycle(4).unwrap();
        assert!(ham_search(&g, &IncidenceSpec::path(1, 1), SearchOptions::default()).is_err());
    }

    #[test]
    fn required_edge_is_used() {
        let g = Graph::complete(5).unwrap();
        let spec = IncidenceSpec::cycle().edge("e", Edge::new(1, 3)).edge("f", Edge::new(2, 4));
        let w = ham_search(&g, &spec, SearchOptions::default()).unwrap().found().unwrap();
        w.validate().unwrap();
        assert!(w.uses_edge(Edge::new(1, 3)) && w.uses_edge(Edge::new(2, 4)));
    }
}
