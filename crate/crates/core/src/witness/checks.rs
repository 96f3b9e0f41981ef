use std::time::Instant;

use serde::Serialize;

use super::{ham_search, HamWitness, IncidenceSpec, Search, SearchOptions};
use crate::decomposition::{is_2_connected, is_block_chain};
use crate::error::{Error, Result};
use crate::graph::{bit, Edge, Graph};
use crate::report::{FailureRecord, PropertyReport};

fn require_2_connected(g: &Graph) -> Result<()> {
    if is_2_connected(g) {
        Ok(())
    } else {
        Err(Error::NotTwoConnected)
    }
}

pub(crate) fn require_distinct(g: &Graph, vs: &[usize]) -> Result<()> {
    let mut seen = 0u64;
    for &v in vs {
        g.check_vertex(v)?;
        if seen & bit(v) != 0 {
            return Err(Error::RoleConflict(format!("vertex {v} appears twice in {vs:?}")));
        }
        seen |= bit(v);
    }
    Ok(())
}

/// An `x₁x₂`-hamiltonian path of `g²` with distinct host edges at `x₃..x_k`.
pub fn check_fk(g: &Graph, xs: &[usize], opts: SearchOptions) -> Result<Search<HamWitness>> {
    require_2_connected(g)?;
    if xs.len() < 3 {
        return Err(Error::Precondition(format!("F_k needs k >= 3 vertices, got {}", xs.len())));
    }
    require_distinct(g, xs)?;
    let spec = xs[2..]
        .iter()
        .enumerate()
        .fold(IncidenceSpec::path(xs[0], xs[1]), |s, (i, &x)| s.edge_at(format!("x{}", i + 3), x, 1));
    ham_search(g, &spec, opts)
}

/// Every labelled ordered `k`-tuple admits an F_k path. Stops at the first
/// exhausted tuple.
pub fn has_fk_property(g: &Graph, k: usize, opts: SearchOptions) -> Result<PropertyReport> {
    require_2_connected(g)?;
    if k < 3 || k > g.n() {
        return Err(Error::Precondition(format!("need 3 <= k <= n, got k = {k}, n = {}", g.n())));
    }
    let clock = Instant::now();
    let mut report = PropertyReport::new(format!("f{k}"), g.to_graph6());
    report.instances = 1;
    let mut tuple = Vec::with_capacity(k);
    fk_tuples(g, k, opts, &mut tuple, 0, &mut report)?;
    report.settle();
    report.wall_time_ms = clock.elapsed().as_millis();
    Ok(report)
}

fn fk_tuples(
    g: &Graph,
    k: usize,
    opts: SearchOptions,
    tuple: &mut Vec<usize>,
    used: u64,
    report: &mut PropertyReport,
) -> Result<bool> {
    if tuple.len() == k {
        report.checks += 1;
        let outcome = check_fk(g, tuple, opts)?;
        if !outcome.is_found() {
            let status = outcome.status().to_string();
            let stop = outcome.is_exhausted();
            report.failures.push(FailureRecord { graph6: g.to_graph6(), tuple: tuple.clone(), status });
            return Ok(stop);
        }
        return Ok(false);
    }
    for v in 0..g.n() {
        if used & bit(v) != 0 {
            continue;
        }
        tuple.push(v);
        let stop = fk_tuples(g, k, opts, tuple, used | bit(v), report)?;
        tuple.pop();
        if stop {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Strong F₃: an `x₁x₂`-path with distinct host edges at `x₃` and at `x_i`.
pub fn check_strong_f3(
    g: &Graph,
    x1: usize,
    x2: usize,
    x3: usize,
    i: u8,
    opts: SearchOptions,
) -> Result<Search<HamWitness>> {
    require_2_connected(g)?;
    require_distinct(g, &[x1, x2, x3])?;
    let xi = match i {
        1 => x1,
        2 => x2,
        _ => return Err(Error::Precondition(format!("i must be 1 or 2, got {i}"))),
    };
    let spec = IncidenceSpec::path(x1, x2).edge_at("x3", x3, 1).edge_at(format!("x{i}"), xi, 1);
    ham_search(g, &spec, opts)
}

/// Which alternative of the endpoint condition at `y` a witness realises.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EndpointBranch {
    /// A host edge of the path at `y`.
    EdgeAtY,
    /// A path edge joining two neighbours of `y`.
    NeighborPair,
}

impl EndpointBranch {
    pub fn of(w: &HamWitness) -> Option<EndpointBranch> {
        let (_, y) = w.spec.endpoints?;
        let e = *w.satisfied.get("y")?.first()?;
        Some(if e.contains(y) { EndpointBranch::EdgeAtY } else { EndpointBranch::NeighborPair })
    }
}

/// An `xy`-hamiltonian path with a host edge at `x`, and at `y` either a host
/// edge or an edge between two neighbours of `y`.
pub fn check_theorem2(g: &Graph, x: usize, y: usize, opts: SearchOptions) -> Result<Search<HamWitness>> {
    require_2_connected(g)?;
    require_distinct(g, &[x, y])?;
    let spec = IncidenceSpec::path(x, y).edge_at("x", x, 1).edge_at_or_neighbor_pair("y", y);
    ham_search(g, &spec, opts)
}

/// An `xy`-hamiltonian path with a host edge at the chosen end `q ∈ {x, y}`.
pub fn check_endpoint_edge(g: &Graph, x: usize, y: usize, q: usize, opts: SearchOptions) -> Result<Search<HamWitness>> {
    require_2_connected(g)?;
    require_distinct(g, &[x, y])?;
    if q != x && q != y {
        return Err(Error::Precondition(format!("q = {q} must be one of the endpoints {x}, {y}")));
    }
    ham_search(g, &IncidenceSpec::path(x, y).edge_at("q", q, 1), opts)
}

/// A `[v; w₁, …, w_k]`-hamiltonian cycle: both cycle edges at `v` and at least
/// one at each `w_i` are host edges, all distinct.
pub fn check_vw_ham_cycle(g: &Graph, v: usize, ws: &[usize], opts: SearchOptions) -> Result<Search<HamWitness>> {
    require_2_connected(g)?;
    let mut all = vec![v];
    all.extend_from_slice(ws);
    require_distinct(g, &all)?;
    let spec = ws
        .iter()
        .enumerate()
        .fold(IncidenceSpec::cycle().edge_at("v", v, 2), |s, (i, &w)| s.edge_at(format!("w{}", i + 1), w, 1));
    ham_search(g, &spec, opts)
}

/// Three vertices of degree 2 with identical neighbourhoods, if any.
pub fn fbar_triple(g: &Graph) -> Option<[usize; 3]> {
    let v2 = g.v2_set();
    for (i, &a) in v2.iter().enumerate() {
        let same: Vec<usize> = v2[i + 1..].iter().copied().filter(|&b| g.neighbors(b) == g.neighbors(a)).collect();
        if same.len() >= 2 {
            return Some([a, same[0], same[1]]);
        }
    }
    None
}

pub fn check_fbar(g: &Graph) -> bool {
    fbar_triple(g).is_some()
}

/// The neighbourhood hypotheses for the apex cycle, evaluated but not enforced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ApexHypotheses {
    pub x3_outside_v2: bool,
    pub x4_outside_v2: bool,
    pub end_inside_v2: bool,
}

impl ApexHypotheses {
    pub fn evaluate(g: &Graph, x: [usize; 4]) -> Self {
        ApexHypotheses {
            x3_outside_v2: !g.neighborhood_in_v2(x[2]),
            x4_outside_v2: !g.neighborhood_in_v2(x[3]),
            end_inside_v2: g.neighborhood_in_v2(x[0]) || g.neighborhood_in_v2(x[1]),
        }
    }

    pub fn hold(&self) -> bool {
        self.x3_outside_v2 && self.x4_outside_v2 && self.end_inside_v2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApexCheck {
    /// Witness on the apex graph `G⁺`, whose new vertex is `g.n()`.
    pub outcome: Search<HamWitness>,
    pub hypotheses: ApexHypotheses,
}

/// A hamiltonian cycle of `(G⁺)²`, `G⁺` = `g` plus a vertex `y` joined to
/// `x₁, x₂`, through `x₁y`, `x₂y` and distinct host edges at `x₃`, `x₄`.
pub fn check_apex_hc(g: &Graph, x: [usize; 4], opts: SearchOptions) -> Result<ApexCheck> {
    require_2_connected(g)?;
    if !g.is_dt() {
        return Err(Error::NotDt);
    }
    require_distinct(g, &x)?;
    let plus = g.augment_apex(x[0], x[1])?;
    let y = g.n();
    let spec = IncidenceSpec::cycle()
        .edge("x1y", Edge::new(x[0], y))
        .edge("x2y", Edge::new(x[1], y))
        .edge_at("x3", x[2], 1)
        .edge_at("x4", x[3], 1);
    Ok(ApexCheck { outcome: ham_search(&plus, &spec, opts)?, hypotheses: ApexHypotheses::evaluate(g, x) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainWitnesses {
    pub cycle: Search<HamWitness>,
    pub path: Search<HamWitness>,
    /// Whether the endblock of `v` is 2-connected (two host edges demanded at `v`).
    pub v_block_2_connected: bool,
}

/// Hamiltonian cycle and `vw`-path of `b²` for a block chain `b` with `v`, `w`
/// non-cutvertices in different endblocks.
pub fn check_corollary1(b: &Graph, v: usize, w: usize, opts: SearchOptions) -> Result<ChainWitnesses> {
    require_distinct(b, &[v, w])?;
    if b.n() < 3 {
        return Err(Error::Precondition("block chain needs at least 3 vertices".into()));
    }
    let dec = is_block_chain(b).ok_or_else(|| Error::Precondition("not a block chain".into()))?;
    let (first, last) =
        dec.endblocks().ok_or_else(|| Error::Precondition("trivial chain: use the single-block results".into()))?;
    if dec.is_cutvertex(v) || dec.is_cutvertex(w) {
        return Err(Error::Precondition("v and w must not be cutvertices".into()));
    }
    let (bv, bw) = (&dec.blocks[first], &dec.blocks[last]);
    let v_block = if bv.contains(v) && bw.contains(w) {
        bv
    } else if bw.contains(v) && bv.contains(w) {
        bw
    } else {
        return Err(Error::Precondition("v and w must lie in different endblocks".into()));
    };
    let v_count = if v_block.is_bridge() { 1 } else { 2 };
    let cycle_spec = IncidenceSpec::cycle().edge_at("v", v, v_count).edge_at("w", w, 1);
    let path_spec = IncidenceSpec::path(v, w).edge_at("v", v, 1).edge_at("w", w, 1);
    Ok(ChainWitnesses {
        cycle: ham_search(b, &cycle_spec, opts)?,
        path: ham_search(b, &path_spec, opts)?,
        v_block_2_connected: v_count == 2,
    })
}

/// A hamiltonian cycle of `g²` through the host edge `e` with host edges at
/// `u` and at `v`.
pub fn check_corollary2(g: &Graph, e: Edge, u: usize, v: usize, opts: SearchOptions) -> Result<Search<HamWitness>> {
    require_2_connected(g)?;
    if g.n() < 4 {
        return Err(Error::Precondition("needs at least 4 vertices".into()));
    }
    if !g.contains_edge(e) {
        return Err(Error::Precondition(format!("{e} is not an edge")));
    }
    require_distinct(g, &[e.lo(), e.hi(), u, v])?;
    let spec = IncidenceSpec::cycle().edge("e", e).edge_at("u", u, 1).edge_at("v", v, 1);
    ham_search(g, &spec, opts)
}
