//! Exhaustive verification campaigns: every qualifying small graph, every
//! labelled tuple in the statement's range.
//!
//! Tuples in failure records are the checker arguments in order. A few
//! properties append a discriminator so that one record stays re-checkable:
//! `theorem-3` `[x1, x2, x3, i]`; `theorem-f` `[0, x1, x2, x3]` for the F₃
//! part and `[1, x, y, q]` for the endpoint edge; `lemma-1` `[v, w, part]`
//! with part 0 = EPS, 1 = EPS rooted at `v`, 2 = JEPS; `corollary-2`
//! `[e.lo, e.hi, u, v]`; `k2m-negative` the whole `F_k` tuple; `h-negative`
//! `[n, k]`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::builders::{build_h_example, build_k2m};
use super::cache::ResultsCache;
use super::enumerate::{enumerate_2connected, enumerate_block_chains, Filter};
use crate::decomposition::{blocks, dt_endblock_edge, is_block_chain};
use crate::eps::{cycle_through, eps_to_ham_cycle, find_eps, find_jeps, maximal_cycle, theorem_a, Anchors, EpsOrJeps};
use crate::error::{Error, Result};
use crate::graph::{bit, Graph};
use crate::report::{FailureRecord, PropertyReport};
use crate::witness::{
    check_apex_hc, check_corollary1, check_corollary2, check_endpoint_edge, check_fbar, check_fk, check_strong_f3,
    check_theorem2, check_vw_ham_cycle, has_fk_property, EndpointBranch, Search, SearchOptions,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    EpsDichotomy,
    EpsFourOnCycle,
    EpsMaximalCycle,
    EpsTwoOnCycle,
    RootedCycle,
    F3AndEndpointEdge,
    DtEndblockEdge,
    ChainDecompositions,
    ApexCycle,
    DtTwoLightCycle,
    EndpointCondition,
    StrongF3,
    F4,
    ChainCycleAndPath,
    EdgeAndTwoVertices,
    DtDerivation,
    TwinTripleNegative,
    K2mNegative,
    HNegative,
}

impl Property {
    pub const ALL: [Property; 19] = [
        Property::EpsDichotomy,
        Property::EpsFourOnCycle,
        Property::EpsMaximalCycle,
        Property::EpsTwoOnCycle,
        Property::RootedCycle,
        Property::F3AndEndpointEdge,
        Property::DtEndblockEdge,
        Property::ChainDecompositions,
        Property::ApexCycle,
        Property::DtTwoLightCycle,
        Property::EndpointCondition,
        Property::StrongF3,
        Property::F4,
        Property::ChainCycleAndPath,
        Property::EdgeAndTwoVertices,
        Property::DtDerivation,
        Property::TwinTripleNegative,
        Property::K2mNegative,
        Property::HNegative,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Property::EpsDichotomy => "theorem-a",
            Property::EpsFourOnCycle => "theorem-b",
            Property::EpsMaximalCycle => "theorem-c",
            Property::EpsTwoOnCycle => "theorem-d",
            Property::RootedCycle => "theorem-e",
            Property::F3AndEndpointEdge => "theorem-f",
            Property::DtEndblockEdge => "theorem-g",
            Property::ChainDecompositions => "lemma-1",
            Property::ApexCycle => "lemma-2",
            Property::DtTwoLightCycle => "lemma-3",
            Property::EndpointCondition => "theorem-2",
            Property::StrongF3 => "theorem-3",
            Property::F4 => "theorem-4",
            Property::ChainCycleAndPath => "corollary-1",
            Property::EdgeAndTwoVertices => "corollary-2",
            Property::DtDerivation => "dt-derivation",
            Property::TwinTripleNegative => "fbar-negative",
            Property::K2mNegative => "k2m-negative",
            Property::HNegative => "h-negative",
        }
    }

    /// Default `(min_n, max_n)`; for `k2m-negative` the range is over `k`.
    pub fn default_range(self) -> (usize, usize) {
        match self {
            Property::F4 => (4, 6),
            Property::StrongF3 => (3, 6),
            Property::EpsFourOnCycle | Property::EdgeAndTwoVertices | Property::ApexCycle => (4, 7),
            Property::DtTwoLightCycle => (4, 8),
            Property::DtDerivation => (3, 8),
            Property::TwinTripleNegative | Property::K2mNegative => (5, 7),
            Property::HNegative => (9, 10),
            _ => (3, 7),
        }
    }

    /// Expected outcome is a failed search rather than a witness.
    pub fn is_negative(self) -> bool {
        matches!(self, Property::TwinTripleNegative | Property::K2mNegative | Property::HNegative)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Property {
    type Err = Error;

    /// Accepts the id or the descriptive name, with or without separators:
    /// `theorem-4`, `theorem4`, `Theorem_4`, `f4`, `strong-f3`.
    fn from_str(s: &str) -> Result<Self> {
        let squash = |t: &str| t.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_lowercase();
        let want = squash(s);
        Property::ALL
            .into_iter()
            .find(|p| squash(p.id()) == want || squash(&format!("{p:?}")) == want)
            .ok_or_else(|| Error::UnknownProperty(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub min_n: Option<usize>,
    pub max_n: Option<usize>,
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
    pub budget: Option<u64>,
}

impl CampaignConfig {
    pub fn up_to(max_n: usize) -> Self {
        CampaignConfig { max_n: Some(max_n), ..Default::default() }
    }

    fn range(&self, p: Property) -> (usize, usize) {
        let (lo, hi) = p.default_range();
        (self.min_n.unwrap_or(lo), self.max_n.unwrap_or(hi))
    }
}

/// What one graph contributed to a report.
#[derive(Default)]
struct Outcome {
    checks: usize,
    failures: Vec<FailureRecord>,
    confirmed: Vec<FailureRecord>,
    tallies: BTreeMap<String, u64>,
}

struct Instance<'a> {
    property: Property,
    g: &'a Graph,
    g6: String,
    opts: SearchOptions,
    cache: Option<&'a ResultsCache>,
    out: Outcome,
}

impl<'a> Instance<'a> {
    fn new(property: Property, g: &'a Graph, opts: SearchOptions, cache: Option<&'a ResultsCache>) -> Self {
        Instance { property, g, g6: g.to_graph6(), opts, cache, out: Outcome::default() }
    }

    fn tally(&mut self, key: &str) {
        *self.out.tallies.entry(key.to_string()).or_default() += 1;
    }

    /// Runs one check (or replays it from the cache) and files the result.
    /// `run` reports `Found` when the statement's conclusion held.
    fn check(&mut self, tuple: Vec<usize>, run: impl FnOnce(&mut Self) -> Result<Search<()>>) {
        self.out.checks += 1;
        let prop = self.property.id();
        let cached = self.cache.and_then(|c| c.get(&self.g6, prop, &tuple)).map(str::to_string);
        let status = match cached {
            Some(s) => s,
            None => {
                let s = match run(self) {
                    Ok(outcome) => outcome.status().to_string(),
                    Err(e) => format!("error: {e}"),
                };
                if let Some(c) = self.cache {
                    if s == "found" || s == "exhausted" {
                        let _ = c.record(&self.g6, prop, &tuple, &s);
                    }
                }
                s
            }
        };
        let record = FailureRecord { graph6: self.g6.clone(), tuple, status: status.clone() };
        let expected = if self.property.is_negative() { "exhausted" } else { "found" };
        if status == expected {
            if self.property.is_negative() {
                self.out.confirmed.push(record);
            }
        } else {
            self.out.failures.push(record);
        }
    }
}

fn ordered_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, cur: &mut Vec<usize>, used: u64, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if used & bit(v) == 0 {
                cur.push(v);
                go(n, k, cur, used | bit(v), out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, k, &mut Vec::with_capacity(k), 0, &mut out);
    out
}

fn found(ok: bool) -> Search<()> {
    if ok {
        Search::Found(())
    } else {
        Search::Exhausted
    }
}

fn unit<T>(s: Search<T>) -> Search<()> {
    s.map(|_| ())
}

/// Non-cutvertex pairs `(v, w)` in different endblocks of a non-trivial chain.
fn chain_end_pairs(g: &Graph) -> Vec<(usize, usize, bool)> {
    let Some(dec) = is_block_chain(g) else { return Vec::new() };
    let Some((first, last)) = dec.endblocks() else { return Vec::new() };
    let inner = |b: usize| -> Vec<usize> {
        dec.blocks[b].vertex_list().into_iter().filter(|&v| !dec.is_cutvertex(v)).collect()
    };
    let mut pairs = Vec::new();
    for (a, b) in [(first, last), (last, first)] {
        let two_connected = !dec.blocks[a].is_bridge();
        for &v in &inner(a) {
            for &w in &inner(b) {
                pairs.push((v, w, two_connected));
            }
        }
    }
    pairs.sort_unstable();
    pairs
}

fn run_instance(inst: &mut Instance<'_>) {
    let g = inst.g;
    let n = g.n();
    let opts = inst.opts;
    match inst.property {
        Property::F4 => {
            for t in ordered_tuples(n, 4) {
                inst.check(t.clone(), |_| Ok(unit(check_fk(g, &t, opts)?)));
            }
        }
        Property::StrongF3 => {
            for t in ordered_tuples(n, 3) {
                for i in [1u8, 2] {
                    let mut key = t.clone();
                    key.push(i as usize);
                    inst.check(key, |_| Ok(unit(check_strong_f3(g, t[0], t[1], t[2], i, opts)?)));
                }
            }
        }
        Property::EndpointCondition => {
            for t in ordered_tuples(n, 2) {
                inst.check(t.clone(), |me| {
                    let out = check_theorem2(g, t[0], t[1], opts)?;
                    if let Search::Found(w) = &out {
                        match EndpointBranch::of(w) {
                            Some(EndpointBranch::EdgeAtY) => me.tally("edge-at-y"),
                            Some(EndpointBranch::NeighborPair) => me.tally("neighbor-pair"),
                            None => return Err(Error::InvalidWitness("no claim at y".into())),
                        }
                        w.validate()?;
                    }
                    Ok(unit(out))
                });
            }
        }
        Property::RootedCycle => {
            for t in ordered_tuples(n, 2) {
                inst.check(t.clone(), |_| Ok(unit(check_vw_ham_cycle(g, t[0], &t[1..], opts)?)));
            }
        }
        Property::F3AndEndpointEdge => {
            for t in ordered_tuples(n, 3) {
                let key = [vec![0], t.clone()].concat();
                inst.check(key, |_| Ok(unit(check_fk(g, &t, opts)?)));
            }
            for t in ordered_tuples(n, 2) {
                for q in [t[0], t[1]] {
                    inst.check(vec![1, t[0], t[1], q], |_| Ok(unit(check_endpoint_edge(g, t[0], t[1], q, opts)?)));
                }
            }
        }
        Property::DtEndblockEdge => {
            for t in ordered_tuples(n, 2) {
                inst.check(t.clone(), |_| {
                    let r = dt_endblock_edge(g, t[0], t[1])?;
                    // re-derive the claim from scratch
                    let rest = g.without_edge(r.edge);
                    let dec = blocks(&rest)?;
                    let ends = dec.endblocks().ok_or(Error::InvalidWitness("G - e is not a chain".into()))?;
                    let idx = dec.blocks.iter().position(|b| b.edges == r.block.edges);
                    let (x, y) = (t[0], t[1]);
                    let ok = g.d_set().contains(r.edge)
                        && idx.is_some_and(|i| i == ends.0 || i == ends.1)
                        && r.block.is_dt()
                        && !(r.block.contains(x) && r.block.contains(y))
                        && (!r.block.contains(x) || dec.endblock_cutvertex(idx.unwrap()) == Some(x));
                    Ok(found(ok))
                });
            }
        }
        Property::EpsDichotomy => {
            for t in ordered_tuples(n, 2) {
                inst.check(t.clone(), |me| {
                    let out = theorem_a(g, t[0], t[1])?;
                    out.validate()?;
                    let ok = match &out {
                        EpsOrJeps::Eps(s) => {
                            me.tally("eps");
                            s.forest_degree(t[0]) == 0 && s.forest_degree(t[1]) == 0
                        }
                        EpsOrJeps::Jeps(s) => {
                            me.tally("jeps");
                            s.ends == (t[0], t[1]) && s.forest_degree(t[0]) == 0 && s.forest_degree(t[1]) == 0
                        }
                    };
                    Ok(found(ok))
                });
            }
        }
        Property::EpsFourOnCycle => {
            for v in 0..n {
                let others: Vec<usize> = (0..n).filter(|&u| u != v).collect();
                for (i, &a) in others.iter().enumerate() {
                    for (j, &b) in others.iter().enumerate().skip(i + 1) {
                        for &c in &others[j + 1..] {
                            let Some(k) = cycle_through(g, v, bit(a) | bit(b) | bit(c)) else {
                                inst.tally("no-cycle");
                                continue;
                            };
                            inst.check(vec![v, a, b, c], |_| eps_with_cycle(g, v, &[a, b, c], &k));
                        }
                    }
                }
            }
        }
        Property::EpsMaximalCycle => {
            for t in ordered_tuples(n, 3) {
                inst.check(t.clone(), |me| {
                    let k = maximal_cycle(g, t[0], t[1], t[2])?;
                    if !k.contains(&t[2]) {
                        me.tally("w2-off-cycle");
                    }
                    eps_with_cycle(g, t[0], &t[1..], &k)
                });
            }
        }
        Property::EpsTwoOnCycle => {
            for t in ordered_tuples(n, 2) {
                let k = cycle_through(g, t[0], bit(t[1]));
                inst.check(t.clone(), |_| {
                    let k = k.ok_or(Error::GuaranteeViolated("no cycle through v and w".into()))?;
                    eps_with_cycle(g, t[0], &t[1..], &k)
                });
            }
        }
        Property::ChainDecompositions => {
            let cutvertices = blocks(g).map(|d| d.cutvertices).unwrap_or_default();
            for (v, w, v_block_2c) in chain_end_pairs(g) {
                inst.check(vec![v, w, 0], |_| {
                    Ok(match find_eps(g, None, &[v, w], None)? {
                        Some(s) => found(s.validate().is_ok() && s.forest_degree(v) <= 1 && s.forest_degree(w) <= 1),
                        None => Search::Exhausted,
                    })
                });
                if v_block_2c {
                    inst.check(vec![v, w, 1], |_| {
                        Ok(match find_eps(g, Some(v), &[w], None)? {
                            Some(s) => found(s.validate().is_ok()),
                            None => Search::Exhausted,
                        })
                    });
                }
                inst.check(vec![v, w, 2], |me| {
                    Ok(match find_jeps(g, v, w, &[v, w])? {
                        Some(s) => {
                            let heavy = cutvertices.iter().filter(|&&c| s.forest_degree(c) == 2).count();
                            me.tally(if heavy <= 1 {
                                "cutvertex-refinement-holds"
                            } else {
                                "cutvertex-refinement-open"
                            });
                            found(s.validate().is_ok())
                        }
                        None => Search::Exhausted,
                    })
                });
            }
        }
        Property::DtTwoLightCycle => {
            let light: Vec<usize> = (0..n).filter(|&v| g.neighborhood_in_v2(v)).collect();
            for &v in &light {
                for &w1 in &light {
                    for w2 in 0..n {
                        if w1 == v || w2 == v || w2 == w1 {
                            continue;
                        }
                        inst.check(vec![v, w1, w2], |_| Ok(unit(check_vw_ham_cycle(g, v, &[w1, w2], opts)?)));
                    }
                }
            }
        }
        Property::ChainCycleAndPath => {
            for (v, w, _) in chain_end_pairs(g) {
                inst.check(vec![v, w], |_| {
                    let c = check_corollary1(g, v, w, opts)?;
                    Ok(match (c.cycle, c.path) {
                        (Search::Found(_), Search::Found(_)) => Search::Found(()),
                        (Search::Undecided, _) | (_, Search::Undecided) => Search::Undecided,
                        _ => Search::Exhausted,
                    })
                });
            }
        }
        Property::EdgeAndTwoVertices => {
            for e in g.edges() {
                for t in ordered_tuples(n, 2) {
                    if e.contains(t[0]) || e.contains(t[1]) {
                        continue;
                    }
                    inst.check(vec![e.lo(), e.hi(), t[0], t[1]], |_| {
                        Ok(unit(check_corollary2(g, e, t[0], t[1], opts)?))
                    });
                }
            }
        }
        Property::ApexCycle => {
            for t in ordered_tuples(n, 4) {
                let x = [t[0], t[1], t[2], t[3]];
                if !crate::witness::ApexHypotheses::evaluate(g, x).hold() {
                    continue;
                }
                inst.check(t, |_| Ok(check_apex_hc(g, x, opts)?.outcome.map(|_| ())));
            }
        }
        Property::DtDerivation => {
            for v in 0..n {
                inst.check(vec![v], |me| derived_cycle(me, v, None));
                for w in 0..n {
                    if w != v && g.neighborhood_in_v2(w) {
                        inst.check(vec![v, w], |me| derived_cycle(me, v, Some(w)));
                    }
                }
            }
        }
        Property::TwinTripleNegative => {
            if !check_fbar(g) {
                return;
            }
            match has_fk_property(g, 5, opts) {
                Ok(r) => match r.failures.iter().find(|f| f.status == "exhausted") {
                    Some(f) => inst.check(f.tuple.clone(), |_| Ok(Search::Exhausted)),
                    None => {
                        let status = if r.undecided > 0 { Search::Undecided } else { Search::Found(()) };
                        inst.check(Vec::new(), |_| Ok(status));
                    }
                },
                Err(e) => inst.check(Vec::new(), |_| Err(e)),
            }
        }
        // handled by their own drivers
        Property::K2mNegative | Property::HNegative => {}
    }
}

fn eps_with_cycle(g: &Graph, v: usize, light: &[usize], k: &[usize]) -> Result<Search<()>> {
    Ok(match find_eps(g, Some(v), light, Some(k))? {
        Some(s) => {
            s.validate()?;
            let ok = s.forest_degree(v) == 0 && light.iter().all(|&w| s.forest_degree(w) <= 1);
            found(ok)
        }
        None => Search::Exhausted,
    })
}

fn derived_cycle(me: &mut Instance<'_>, v: usize, w: Option<usize>) -> Result<Search<()>> {
    let g = me.g;
    let light: Vec<usize> = w.into_iter().collect();
    let Some(s) = find_eps(g, Some(v), &light, None)? else {
        return Ok(Search::Exhausted);
    };
    let c = eps_to_ham_cycle(g, &s, &Anchors { root: Some(v), light: light.clone() })?;
    c.validate()?;
    let sub = g.spanning_subgraph(s.edges().iter())?.square();
    let inside = c.edges().iter().all(|e| sub.contains_edge(*e));
    let root_edges = c.edges().iter().filter(|e| e.contains(v) && g.contains_edge(**e)).count();
    let light_ok = light.iter().all(|&w| c.edges().iter().any(|e| e.contains(w) && g.contains_edge(*e)));
    if let Some(w) = w {
        if c.satisfied.get(&format!("light{w}")).is_some_and(|e| e[0] == crate::graph::Edge::new(v, w)) {
            me.tally("light-edge-is-root-edge");
        }
    }
    Ok(found(inside && root_edges == 2 && light_ok))
}

/// The graphs a property quantifies over, by order.
pub fn family(property: Property, n: usize) -> Result<Vec<Graph>> {
    Ok(match property {
        Property::ChainDecompositions | Property::ChainCycleAndPath => enumerate_block_chains(n)?,
        Property::DtTwoLightCycle | Property::ApexCycle | Property::DtDerivation => {
            enumerate_2connected(n, Filter::Dt)?
        }
        Property::DtEndblockEdge => {
            enumerate_2connected(n, Filter::EdgeCritical)?.into_iter().filter(|g| !g.is_dt()).collect()
        }
        Property::TwinTripleNegative => enumerate_2connected(n, Filter::All)?.into_iter().filter(check_fbar).collect(),
        _ => enumerate_2connected(n, Filter::All)?,
    })
}

fn family_label(property: Property, lo: usize, hi: usize) -> String {
    let kind = match property {
        Property::ChainDecompositions | Property::ChainCycleAndPath => "non-trivial block chains",
        Property::DtTwoLightCycle | Property::ApexCycle | Property::DtDerivation => "2-connected DT graphs",
        Property::DtEndblockEdge => "edge-critical non-DT blocks",
        Property::TwinTripleNegative => "2-connected graphs with three twin degree-2 vertices",
        Property::K2mNegative => return format!("K_(2,k-2), {lo} <= k <= {hi}"),
        Property::HNegative => return "H(n,k) for (8,5), (9,5), (9,6)".into(),
        _ => "2-connected graphs",
    };
    format!("{kind}, {lo} <= n <= {hi}")
}

fn negative_instances(property: Property, lo: usize, hi: usize) -> Result<Vec<(Graph, Vec<usize>)>> {
    Ok(match property {
        Property::K2mNegative => {
            (lo.max(5)..=hi).map(|k| Ok((build_k2m(k)?, (0..k).collect()))).collect::<Result<_>>()?
        }
        _ => [(8, 5), (9, 5), (9, 6)]
            .into_iter()
            .map(|(n, k)| Ok((build_h_example(n, k)?.0, vec![n, k])))
            .collect::<Result<_>>()?,
    })
}

/// Runs `property` over its whole family and every tuple in range.
/// Results are independent of `config.jobs`.
pub fn run_campaign(
    property: Property,
    config: &CampaignConfig,
    cache: Option<&ResultsCache>,
) -> Result<PropertyReport> {
    let clock = Instant::now();
    let (lo, hi) = config.range(property);
    let opts = SearchOptions { node_budget: config.budget };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;

    let outcomes: Vec<Outcome> = match property {
        Property::K2mNegative | Property::HNegative => {
            let cases = negative_instances(property, lo, hi)?;
            pool.install(|| {
                cases
                    .par_iter()
                    .map(|(g, key)| {
                        let mut inst = Instance::new(property, g, opts, cache);
                        let run = |_: &mut Instance<'_>| -> Result<Search<()>> {
                            if property == Property::K2mNegative {
                                Ok(unit(check_fk(g, key, opts)?))
                            } else {
                                let (_, v, v1, vk) = build_h_example(key[0], key[1])?;
                                Ok(unit(check_vw_ham_cycle(g, v, &[v1, vk], opts)?))
                            }
                        };
                        inst.check(key.clone(), run);
                        inst.out
                    })
                    .collect()
            })
        }
        _ => {
            let mut graphs = Vec::new();
            for n in lo..=hi {
                graphs.extend(family(property, n)?);
            }
            pool.install(|| {
                graphs
                    .par_iter()
                    .map(|g| {
                        let mut inst = Instance::new(property, g, opts, cache);
                        run_instance(&mut inst);
                        inst.out
                    })
                    .collect()
            })
        }
    };

    let mut report = PropertyReport::new(property.id(), family_label(property, lo, hi));
    report.instances = outcomes.len();
    for o in outcomes {
        report.checks += o.checks;
        report.failures.extend(o.failures);
        report.confirmed.extend(o.confirmed);
        for (k, v) in o.tallies {
            report.bump(&k, v);
        }
    }
    report.confirmed.sort();
    report.settle();
    if let Some(c) = cache {
        c.flush()?;
    }
    report.wall_time_ms = clock.elapsed().as_millis();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn property_names() {
        for p in Property::ALL {
            assert_eq!(p.id().parse::<Property>().unwrap(), p);
        }
        assert_eq!("theorem4".parse::<Property>().unwrap(), Property::F4);
        assert_eq!("K2M_Negative".parse::<Property>().unwrap(), Property::K2mNegative);
        assert_eq!("f4".parse::<Property>().unwrap(), Property::F4);
        assert_eq!("strong-f3".parse::<Property>().unwrap(), Property::StrongF3);
        assert!(matches!("theorem-9".parse::<Property>(), Err(Error::UnknownProperty(_))));
    }

    #[test]
    fn tuples() {
        assert_eq!(ordered_tuples(3, 2).len(), 6);
        assert_eq!(ordered_tuples(5, 4).len(), 120);
    }

    #[test]
    fn small_positive_campaign() {
        let r = run_campaign(Property::F4, &CampaignConfig::up_to(5), None).unwrap();
        assert!(r.passed(), "{r:?}");
        // C4, diamond and K4 give 3 * 24 tuples; 10 graphs on five vertices give 10 * 120
        assert_eq!(r.checks, 3 * 24 + 10 * 120);
    }

    #[test]
    fn negative_campaign_confirms_k23() {
        let cfg = CampaignConfig { min_n: Some(5), max_n: Some(5), ..Default::default() };
        let r = run_campaign(Property::K2mNegative, &cfg, None).unwrap();
        assert!(r.passed());
        assert_eq!(r.confirmed.len(), 1);
        assert_eq!(r.confirmed[0].tuple, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn budget_produces_undecided() {
        let cfg = CampaignConfig { min_n: Some(5), max_n: Some(5), budget: Some(1), ..Default::default() };
        let r = run_campaign(Property::K2mNegative, &cfg, None).unwrap();
        assert_eq!(r.status, crate::report::Status::Undecided);
    }

    #[test]
    fn cache_replays() {
        let dir = tempfile::tempdir().unwrap();
        let cache = ResultsCache::open(dir.path().join("c.tsv")).unwrap();
        let cfg = CampaignConfig::up_to(4);
        let first = run_campaign(Property::EndpointCondition, &cfg, Some(&cache)).unwrap();
        drop(cache);
        let cache = ResultsCache::open(dir.path().join("c.tsv")).unwrap();
        assert_eq!(cache.len(), first.checks);
        let second = run_campaign(Property::EndpointCondition, &cfg, Some(&cache)).unwrap();
        assert_eq!(first.failures, second.failures);
        assert_eq!(first.checks, second.checks);
    }
}
