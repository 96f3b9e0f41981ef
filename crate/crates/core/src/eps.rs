//! Spanning subgraphs split into an eulerian part and a linear forest (EPS),
//! optionally with an open trail (JEPS), plus hamiltonian cycles and paths
//! read off their squares.

use serde::{Deserialize, Serialize};

use crate::decomposition::is_2_connected;
use crate::error::{Error, Result};
use crate::graph::{bit, bits, Edge, EdgeSet, Graph};
use crate::witness::{ham_search_in, HamWitness, IncidenceSpec, Search, SearchOptions};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsDecomposition {
    pub host: Graph,
    pub eul: EdgeSet,
    pub forest: EdgeSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JepsDecomposition {
    pub host: Graph,
    /// Edges of the open trail in walking order from `ends.0` to `ends.1`.
    pub trail: Vec<Edge>,
    pub eul: EdgeSet,
    pub forest: EdgeSet,
    pub ends: (usize, usize),
}

fn degree_in(edges: impl IntoIterator<Item = Edge>, n: usize) -> Vec<usize> {
    let mut d = vec![0; n];
    for e in edges {
        d[e.lo()] += 1;
        d[e.hi()] += 1;
    }
    d
}

fn adjacency(edges: impl IntoIterator<Item = Edge>, n: usize) -> Graph {
    let mut adj = vec![0u64; n];
    for e in edges {
        adj[e.lo()] |= bit(e.hi());
        adj[e.hi()] |= bit(e.lo());
    }
    Graph::from_adjacency(adj)
}

fn check_linear_forest(forest: &EdgeSet, n: usize) -> Result<()> {
    let bad = |m: String| Err(Error::InvalidDecomposition(m));
    if let Some(v) = degree_in(forest.iter().copied(), n).iter().position(|&d| d > 2) {
        return bad(format!("forest has degree > 2 at {v}"));
    }
    // a forest has |E| = n - (number of components), counted over its own vertices
    let f = adjacency(forest.iter().copied(), n);
    let mut seen = 0u64;
    let mut comps = 0;
    for v in bits(forest.vertex_mask()) {
        if seen & bit(v) == 0 {
            seen |= f.reach_within(v, f.vertex_mask());
            comps += 1;
        }
    }
    if forest.len() + comps != forest.vertex_mask().count_ones() as usize {
        return bad("forest contains a cycle".into());
    }
    Ok(())
}

fn check_spanning_connected(host: &Graph, parts: &[&EdgeSet], trail: &[Edge]) -> Result<()> {
    let n = host.n();
    let all = parts.iter().flat_map(|p| p.iter().copied()).chain(trail.iter().copied());
    let s = adjacency(all, n);
    if n > 0 && s.reach_within(0, s.vertex_mask()) != s.vertex_mask() {
        return Err(Error::InvalidDecomposition("union is not spanning and connected".into()));
    }
    Ok(())
}

fn check_even(eul: &EdgeSet, n: usize) -> Result<()> {
    if let Some(v) = degree_in(eul.iter().copied(), n).iter().position(|d| d % 2 == 1) {
        return Err(Error::InvalidDecomposition(format!("eulerian part has odd degree at {v}")));
    }
    Ok(())
}

impl EpsDecomposition {
    /// Checks every structural invariant from scratch.
    pub fn validate(&self) -> Result<()> {
        let n = self.host.n();
        if !self.eul.is_subset_of(&self.host) || !self.forest.is_subset_of(&self.host) {
            return Err(Error::InvalidDecomposition("edge outside the host".into()));
        }
        if !self.eul.is_disjoint(&self.forest) {
            return Err(Error::InvalidDecomposition("eulerian part and forest overlap".into()));
        }
        check_even(&self.eul, n)?;
        check_linear_forest(&self.forest, n)?;
        check_spanning_connected(&self.host, &[&self.eul, &self.forest], &[])
    }

    pub fn forest_degree(&self, v: usize) -> usize {
        self.forest.degree(v)
    }

    pub fn edges(&self) -> EdgeSet {
        EdgeSet::from_unchecked(self.eul.iter().chain(self.forest.iter()).copied())
    }
}

impl JepsDecomposition {
    pub fn validate(&self) -> Result<()> {
        let n = self.host.n();
        let bad = |m: &str| Err(Error::InvalidDecomposition(m.into()));
        let (v, w) = self.ends;
        self.host.check_vertex(v)?;
        self.host.check_vertex(w)?;
        if v == w {
            return bad("trail ends coincide");
        }
        let trail = EdgeSet::from_unchecked(self.trail.iter().copied());
        if trail.len() != self.trail.len() {
            return bad("trail repeats an edge");
        }
        if !trail.is_subset_of(&self.host)
            || !self.eul.is_subset_of(&self.host)
            || !self.forest.is_subset_of(&self.host)
        {
            return bad("edge outside the host");
        }
        let mut cur = v;
        for e in &self.trail {
            match e.other(cur) {
                Some(next) => cur = next,
                None => return bad("trail is not a walk"),
            }
        }
        if cur != w || self.trail.is_empty() {
            return bad("trail does not run between its ends");
        }
        if !trail.is_disjoint(&self.eul) || !trail.is_disjoint(&self.forest) || !self.eul.is_disjoint(&self.forest) {
            return bad("parts are not edge-disjoint");
        }
        check_even(&self.eul, n)?;
        check_linear_forest(&self.forest, n)?;
        check_spanning_connected(&self.host, &[&self.eul, &self.forest], &self.trail)
    }

    pub fn forest_degree(&self, v: usize) -> usize {
        self.forest.degree(v)
    }

    pub fn edges(&self) -> EdgeSet {
        EdgeSet::from_unchecked(self.trail.iter().chain(self.eul.iter()).chain(self.forest.iter()).copied())
    }
}

const EUL: u8 = 0;
const FOREST: u8 = 1;
const UNUSED: u8 = 2;
const TRAIL: u8 = 3;

/// Exact branch-and-bound over edge colourings. Edges are decided in
/// lexicographic order; colours are tried trail, eulerian, forest, unused.
struct Colouring<'a> {
    g: &'a Graph,
    edges: Vec<Edge>,
    last_at: Vec<usize>,
    caps: Vec<u8>,
    required: Vec<bool>,
    ends: Option<(usize, usize)>,
    colour: Vec<u8>,
    deg_e: Vec<u8>,
    deg_p: Vec<u8>,
    deg_j: Vec<u8>,
    p_adj: Vec<u64>,
    live_adj: Vec<u64>,
    j_adj: Vec<u64>,
    cost: (usize, usize),
    best: Option<((usize, usize), Vec<u8>)>,
}

impl<'a> Colouring<'a> {
    fn new(g: &'a Graph, caps: Vec<u8>, required: &EdgeSet, ends: Option<(usize, usize)>) -> Self {
        let n = g.n();
        let edges = g.edges();
        let mut last_at = vec![usize::MAX; n];
        for (i, e) in edges.iter().enumerate() {
            last_at[e.lo()] = i;
            last_at[e.hi()] = i;
        }
        let required = edges.iter().map(|e| required.contains(*e)).collect();
        Colouring {
            g,
            colour: vec![UNUSED; edges.len()],
            edges,
            last_at,
            caps,
            required,
            ends,
            deg_e: vec![0; n],
            deg_p: vec![0; n],
            deg_j: vec![0; n],
            p_adj: vec![0; n],
            live_adj: (0..n).map(|v| g.neighbors(v)).collect(),
            j_adj: vec![0; n],
            cost: (0, 0),
            best: None,
        }
    }

    fn run(mut self) -> Option<Vec<u8>> {
        let n = self.g.n();
        if n == 0 {
            return None;
        }
        if self.edges.is_empty() {
            return (n == 1 && self.ends.is_none()).then(Vec::new);
        }
        self.descend(0);
        self.best.map(|(_, c)| c)
    }

    fn worse_than_best(&self) -> bool {
        match &self.best {
            None => false,
            Some((b, _)) => self.cost >= *b,
        }
    }

    fn vertex_done(&self, v: usize) -> bool {
        if self.deg_e[v] % 2 == 1 {
            return false;
        }
        match self.ends {
            Some((a, b)) => (self.deg_j[v] % 2 == 1) == (v == a || v == b),
            None => true,
        }
    }

    fn live_connected(&self) -> bool {
        let live = Graph::from_adjacency(self.live_adj.clone());
        live.reach_within(0, live.vertex_mask()) == live.vertex_mask()
    }

    fn trail_connected(&self) -> bool {
        let Some((a, _)) = self.ends else { return true };
        let j = Graph::from_adjacency(self.j_adj.clone());
        let touched = (0..self.g.n()).filter(|&v| self.j_adj[v] != 0).fold(0u64, |m, v| m | bit(v));
        j.reach_within(a, touched) == touched
    }

    fn descend(&mut self, i: usize) {
        if i == self.edges.len() {
            if self.trail_connected() {
                self.best = Some((self.cost, self.colour.clone()));
            }
            return;
        }
        let e = self.edges[i];
        let (a, b) = (e.lo(), e.hi());
        let palette: &[u8] = if self.required[i] {
            &[EUL]
        } else if self.ends.is_some() {
            &[TRAIL, EUL, FOREST, UNUSED]
        } else {
            &[EUL, FOREST, UNUSED]
        };
        for &c in palette {
            if !self.apply(i, a, b, c) {
                continue;
            }
            let ok = !self.worse_than_best()
                && (self.last_at[a] != i || self.vertex_done(a))
                && (self.last_at[b] != i || self.vertex_done(b))
                && (c != UNUSED || self.live_connected());
            if ok {
                self.descend(i + 1);
            }
            self.undo(i, a, b, c);
            if matches!(self.best, Some(((0, 0), _))) {
                return;
            }
        }
    }

    fn apply(&mut self, i: usize, a: usize, b: usize, c: u8) -> bool {
        match c {
            EUL => {
                self.deg_e[a] += 1;
                self.deg_e[b] += 1;
                if self.ends.is_some() {
                    self.cost.1 += 1;
                }
            }
            FOREST => {
                if self.deg_p[a] >= self.caps[a] || self.deg_p[b] >= self.caps[b] {
                    return false;
                }
                let forest = Graph::from_adjacency(self.p_adj.clone());
                if forest.reach_within(a, forest.vertex_mask()) & bit(b) != 0 {
                    return false;
                }
                self.deg_p[a] += 1;
                self.deg_p[b] += 1;
                self.p_adj[a] |= bit(b);
                self.p_adj[b] |= bit(a);
                self.cost.0 += 1;
            }
            TRAIL => {
                self.deg_j[a] += 1;
                self.deg_j[b] += 1;
                self.j_adj[a] |= bit(b);
                self.j_adj[b] |= bit(a);
            }
            _ => {
                self.live_adj[a] &= !bit(b);
                self.live_adj[b] &= !bit(a);
            }
        }
        self.colour[i] = c;
        true
    }

    fn undo(&mut self, i: usize, a: usize, b: usize, c: u8) {
        match c {
            EUL => {
                self.deg_e[a] -= 1;
                self.deg_e[b] -= 1;
                if self.ends.is_some() {
                    self.cost.1 -= 1;
                }
            }
            FOREST => {
                self.deg_p[a] -= 1;
                self.deg_p[b] -= 1;
                self.p_adj[a] &= !bit(b);
                self.p_adj[b] &= !bit(a);
                self.cost.0 -= 1;
            }
            TRAIL => {
                self.deg_j[a] -= 1;
                self.deg_j[b] -= 1;
                self.j_adj[a] &= !bit(b);
                self.j_adj[b] &= !bit(a);
            }
            _ => {
                self.live_adj[a] |= bit(b);
                self.live_adj[b] |= bit(a);
            }
        }
        self.colour[i] = UNUSED;
    }
}

fn part(edges: &[Edge], colour: &[u8], c: u8) -> EdgeSet {
    EdgeSet::from_unchecked(edges.iter().zip(colour).filter(|(_, &k)| k == c).map(|(e, _)| *e))
}

/// Checks that `cycle` is a cycle of `g` and returns its edges.
pub fn cycle_edges(g: &Graph, cycle: &[usize]) -> Result<EdgeSet> {
    let bad = |m: &str| Err(Error::InvalidCycle(m.into()));
    if cycle.len() < 3 {
        return bad("a cycle needs at least 3 vertices");
    }
    let mut seen = 0u64;
    for &v in cycle {
        g.check_vertex(v)?;
        if seen & bit(v) != 0 {
            return bad("cycle repeats a vertex");
        }
        seen |= bit(v);
    }
    let k = cycle.len();
    let edges: Vec<Edge> = (0..k).map(|i| Edge::new(cycle[i], cycle[(i + 1) % k])).collect();
    if edges.iter().any(|e| !g.contains_edge(*e)) {
        return bad("consecutive cycle vertices are not adjacent");
    }
    Ok(EdgeSet::from_unchecked(edges))
}

/// Per-vertex forest-degree caps: 0 at the root, 1 at light vertices, 2 elsewhere.
/// A vertex that is both root and light gets the stricter cap 0.
fn forest_caps(g: &Graph, root: Option<usize>, light: &[usize]) -> Result<Vec<u8>> {
    let mut caps = vec![2u8; g.n()];
    let mut seen = 0u64;
    for &w in light {
        g.check_vertex(w)?;
        if seen & bit(w) != 0 {
            return Err(Error::RoleConflict(format!("{w} is listed twice as light")));
        }
        seen |= bit(w);
        caps[w] = 1;
    }
    if let Some(r) = root {
        g.check_vertex(r)?;
        caps[r] = 0;
    }
    Ok(caps)
}

/// An EPS of `g` with forest degree 0 at `root`, at most 1 at each light
/// vertex, and `required_cycle` inside the eulerian part. Among all such, the
/// one with the fewest forest edges (first in search order) is returned.
pub fn find_eps(
    g: &Graph,
    root: Option<usize>,
    light: &[usize],
    required_cycle: Option<&[usize]>,
) -> Result<Option<EpsDecomposition>> {
    let caps = forest_caps(g, root, light)?;
    let required = match required_cycle {
        Some(c) => cycle_edges(g, c)?,
        None => EdgeSet::new(),
    };
    find_eps_with_caps(g, caps, &required)
}

pub(crate) fn find_eps_with_caps(g: &Graph, caps: Vec<u8>, required: &EdgeSet) -> Result<Option<EpsDecomposition>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let search = Colouring::new(g, caps, required, None);
    let edges = search.edges.clone();
    Ok(search.run().map(|colour| EpsDecomposition {
        host: g.clone(),
        eul: part(&edges, &colour, EUL),
        forest: part(&edges, &colour, FOREST),
    }))
}

/// A JEPS whose trail runs from `v` to `w`, with forest degree 0 at every
/// vertex of `forbidden_forest_at`. Minimises the forest, then the eulerian part.
pub fn find_jeps(g: &Graph, v: usize, w: usize, forbidden_forest_at: &[usize]) -> Result<Option<JepsDecomposition>> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    if v == w {
        return Err(Error::RoleConflict("trail ends must differ".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut caps = vec![2u8; g.n()];
    for &x in forbidden_forest_at {
        g.check_vertex(x)?;
        caps[x] = 0;
    }
    let search = Colouring::new(g, caps, &EdgeSet::new(), Some((v, w)));
    let edges = search.edges.clone();
    Ok(search.run().map(|colour| {
        let trail = part(&edges, &colour, TRAIL);
        JepsDecomposition {
            host: g.clone(),
            trail: euler_trail(&trail, v, g.n()),
            eul: part(&edges, &colour, EUL),
            forest: part(&edges, &colour, FOREST),
            ends: (v, w),
        }
    }))
}

/// Orders a connected edge set whose odd vertices are `start` and one other
/// vertex into a trail from `start` (Hierholzer).
fn euler_trail(edges: &EdgeSet, start: usize, n: usize) -> Vec<Edge> {
    let mut adj = vec![0u64; n];
    for e in edges.iter() {
        adj[e.lo()] |= bit(e.hi());
        adj[e.hi()] |= bit(e.lo());
    }
    let mut stack = vec![start];
    let mut circuit = Vec::new();
    while let Some(&v) = stack.last() {
        if adj[v] == 0 {
            circuit.push(v);
            stack.pop();
        } else {
            let u = adj[v].trailing_zeros() as usize;
            adj[v] &= !bit(u);
            adj[u] &= !bit(v);
            stack.push(u);
        }
    }
    circuit.reverse();
    circuit.windows(2).map(|p| Edge::new(p[0], p[1])).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "branch", rename_all = "kebab-case")]
pub enum EpsOrJeps {
    Eps(EpsDecomposition),
    Jeps(JepsDecomposition),
}

impl EpsOrJeps {
    pub fn validate(&self) -> Result<()> {
        match self {
            EpsOrJeps::Eps(s) => s.validate(),
            EpsOrJeps::Jeps(s) => s.validate(),
        }
    }
}

/// For a 2-connected `g`: an EPS with forest degree 0 at both `v` and `w`,
/// or else a JEPS with trail from `v` to `w` and forest degree 0 at both.
pub fn theorem_a(g: &Graph, v: usize, w: usize) -> Result<EpsOrJeps> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    if v == w {
        return Err(Error::RoleConflict("v and w must differ".into()));
    }
    if !is_2_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    let mut caps = vec![2u8; g.n()];
    caps[v] = 0;
    caps[w] = 0;
    if let Some(s) = find_eps_with_caps(g, caps, &EdgeSet::new())? {
        return Ok(EpsOrJeps::Eps(s));
    }
    match find_jeps(g, v, w, &[v, w])? {
        Some(s) => Ok(EpsOrJeps::Jeps(s)),
        None => {
            Err(Error::GuaranteeViolated(format!("{}: neither decomposition exists for ({v}, {w})", g.to_graph6())))
        }
    }
}

/// First cycle through `v` (in depth-first order from `v`, ascending
/// neighbours) whose vertex set contains `must`.
pub fn cycle_through(g: &Graph, v: usize, must: u64) -> Option<Vec<usize>> {
    fn go(g: &Graph, v: usize, must: u64, path: &mut Vec<usize>, seen: u64) -> bool {
        let cur = *path.last().unwrap();
        if path.len() >= 3 && g.has_edge(cur, v) && must & !seen == 0 {
            return true;
        }
        for nxt in bits(g.neighbors(cur) & !seen) {
            // the rest of the cycle must still be able to return to v
            path.push(nxt);
            if go(g, v, must, path, seen | bit(nxt)) {
                return true;
            }
            path.pop();
        }
        false
    }
    let mut path = vec![v];
    go(g, v, must, &mut path, bit(v)).then_some(path)
}

/// A cycle through `v` and `w1` that also passes `w2` whenever any cycle does.
pub fn maximal_cycle(g: &Graph, v: usize, w1: usize, w2: usize) -> Result<Vec<usize>> {
    crate::witness::require_distinct(g, &[v, w1, w2])?;
    if !is_2_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    cycle_through(g, v, bit(w1) | bit(w2))
        .or_else(|| cycle_through(g, v, bit(w1)))
        .ok_or_else(|| Error::GuaranteeViolated(format!("no cycle through {v} and {w1}")))
}

/// Incidence guarantees requested from a cycle derived from an EPS.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Anchors {
    /// Both cycle edges at the root lie in the host.
    pub root: Option<usize>,
    /// At least one cycle edge at each light vertex lies in the host.
    pub light: Vec<usize>,
}

fn require_dt_host(g: &Graph, host: &Graph) -> Result<()> {
    if host != g {
        return Err(Error::InvalidDecomposition("decomposition belongs to a different graph".into()));
    }
    if !g.is_dt() {
        return Err(Error::NotDt);
    }
    Ok(())
}

fn derive(g: &Graph, s: &EdgeSet, spec: &IncidenceSpec) -> Result<HamWitness> {
    let sub = g.spanning_subgraph(s.iter())?;
    match ham_search_in(g, &sub.square(), spec, SearchOptions::unlimited())? {
        Search::Found(w) => Ok(w),
        _ => Err(Error::GuaranteeViolated(format!(
            "{}: no hamiltonian walk in the square of the decomposition",
            g.to_graph6()
        ))),
    }
}

/// A hamiltonian cycle of `S²` meeting the anchor guarantees, for an EPS `S`
/// of a DT-graph.
///
/// All claimed host edges are distinct when possible. Otherwise a light
/// vertex `w` adjacent to the root may be served by the root edge `vw`
/// itself; such claims appear under the label `light{w}` as a required edge.
pub fn eps_to_ham_cycle(g: &Graph, s: &EpsDecomposition, anchors: &Anchors) -> Result<HamWitness> {
    require_dt_host(g, &s.host)?;
    s.validate()?;
    if let Some(r) = anchors.root {
        g.check_vertex(r)?;
        if s.forest_degree(r) != 0 {
            return Err(Error::Precondition(format!("root {r} has forest edges")));
        }
    }
    for &w in &anchors.light {
        g.check_vertex(w)?;
        if Some(w) == anchors.root {
            return Err(Error::RoleConflict(format!("{w} is both root and light")));
        }
        if s.forest_degree(w) > 1 {
            return Err(Error::Precondition(format!("light vertex {w} has forest degree > 1")));
        }
        if !g.neighborhood_in_v2(w) {
            return Err(Error::Precondition(format!("light vertex {w} has a neighbour of degree != 2")));
        }
    }
    let spec_for = |shared: &[usize]| {
        let mut spec = IncidenceSpec::cycle();
        if let Some(r) = anchors.root {
            spec = spec.edge_at("root", r, 2 - shared.len() as u8);
        }
        for &w in &anchors.light {
            spec = match (shared.contains(&w), anchors.root) {
                (true, Some(r)) => spec.edge(format!("light{w}"), Edge::new(r, w)),
                _ => spec.edge_at(format!("light{w}"), w, 1),
            };
        }
        spec
    };
    let edges = s.edges();
    let strict = derive(g, &edges, &spec_for(&[]));
    let Some(r) = anchors.root else { return strict };
    if strict.is_ok() {
        return strict;
    }
    let near: Vec<usize> = anchors.light.iter().copied().filter(|&w| g.has_edge(r, w)).collect();
    let mut options: Vec<Vec<usize>> = near.iter().map(|&w| vec![w]).collect();
    for (i, &a) in near.iter().enumerate() {
        options.extend(near[i + 1..].iter().map(|&b| vec![a, b]));
    }
    for shared in options {
        if let Ok(w) = derive(g, &edges, &spec_for(&shared)) {
            return Ok(w);
        }
    }
    strict
}

/// A hamiltonian path of `S²` between the trail ends of a JEPS `S` of a
/// DT-graph; its first and last edges lie in the host when neither end has
/// forest edges.
pub fn jeps_to_ham_path(g: &Graph, s: &JepsDecomposition) -> Result<HamWitness> {
    require_dt_host(g, &s.host)?;
    s.validate()?;
    let (v, w) = s.ends;
    let mut spec = IncidenceSpec::path(v, w);
    if s.forest_degree(v) == 0 && s.forest_degree(w) == 0 {
        spec = spec.edge_at("start", v, 1).edge_at("end", w, 1);
    }
    derive(g, &s.edges(), &spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::fixtures::{bowtie, triangle_bridge_triangle};

    fn set(g: &Graph, edges: &[(usize, usize)]) -> EdgeSet {
        EdgeSet::from_host(g, edges.iter().copied()).unwrap()
    }

    // K_{2,3} with a = 0, b = 1 on the small side and u, v, w = 2, 3, 4
    fn k23() -> Graph {
        Graph::complete_bipartite(2, 3).unwrap()
    }

    #[test]
    fn cycle_is_its_own_eps() {
        let c5 = Graph::cycle(5).unwrap();
        let s = find_eps(&c5, Some(0), &[1, 2], None).unwrap().unwrap();
        assert_eq!(s.eul.len(), 5);
        assert!(s.forest.is_empty());
        s.validate().unwrap();
    }

    #[test]
    fn k23_rooted_at_a_side_vertex() {
        let g = k23();
        let s = find_eps(&g, Some(0), &[1], None).unwrap().unwrap();
        assert_eq!(s.eul, set(&g, &[(0, 2), (0, 3), (1, 2), (1, 3)]));
        assert_eq!(s.forest, set(&g, &[(1, 4)]));
        s.validate().unwrap();
    }

    #[test]
    fn required_cycle_lands_in_the_eulerian_part() {
        let k4 = Graph::complete(4).unwrap();
        let s = find_eps(&k4, Some(0), &[1, 2, 3], Some(&[0, 1, 2, 3])).unwrap().unwrap();
        for e in cycle_edges(&k4, &[0, 1, 2, 3]).unwrap().iter() {
            assert!(s.eul.contains(*e));
        }
        s.validate().unwrap();
    }

    #[test]
    fn bad_inputs() {
        let k4 = Graph::complete(4).unwrap();
        assert!(matches!(find_eps(&k4, None, &[], Some(&[0, 1])), Err(Error::InvalidCycle(_))));
        assert!(matches!(find_eps(&k4, None, &[1, 1], None), Err(Error::RoleConflict(_))));
        let c4 = Graph::cycle(4).unwrap();
        assert!(matches!(find_eps(&c4, None, &[], Some(&[0, 1, 3, 2])), Err(Error::InvalidCycle(_))));
        // root also light: the stricter cap wins
        let s = find_eps(&c4, Some(0), &[0], None).unwrap().unwrap();
        assert_eq!(s.forest_degree(0), 0);
    }

    #[test]
    fn jeps_on_k23() {
        let g = k23();
        let s = find_jeps(&g, 2, 3, &[2, 3]).unwrap().unwrap();
        s.validate().unwrap();
        assert!(s.eul.is_empty() && s.forest.is_empty());
        let j = EdgeSet::from_unchecked(s.trail.iter().copied());
        assert_eq!(j, set(&g, &[(0, 2), (0, 4), (1, 4), (1, 3)]));
        assert!(s.trail.first().unwrap().other(2).is_some());
    }

    #[test]
    fn jeps_on_a_path() {
        let p3 = Graph::path(3).unwrap();
        let s = find_jeps(&p3, 0, 2, &[]).unwrap().unwrap();
        assert_eq!(s.trail, vec![Edge::new(0, 1), Edge::new(1, 2)]);
        assert!(find_jeps(&p3, 1, 1, &[]).is_err());
    }

    #[test]
    fn dichotomy_branches() {
        let c6 = Graph::cycle(6).unwrap();
        match theorem_a(&c6, 0, 3).unwrap() {
            EpsOrJeps::Eps(s) => assert_eq!(s.eul.len(), 6),
            other => panic!("{other:?}"),
        }
        let out = theorem_a(&k23(), 2, 3).unwrap();
        out.validate().unwrap();
        assert!(matches!(theorem_a(&bowtie(), 0, 4), Err(Error::NotTwoConnected)));
    }

    #[test]
    fn maximal_cycles() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(maximal_cycle(&c4, 0, 1, 2).unwrap().len(), 4);
        // no cycle of K_{2,3} holds all three vertices of the large side
        let k = maximal_cycle(&k23(), 2, 3, 4).unwrap();
        assert_eq!(k.len(), 4);
        assert!(k.contains(&2) && k.contains(&3) && !k.contains(&4));
        let k4 = Graph::complete(4).unwrap();
        let k = maximal_cycle(&k4, 0, 1, 2).unwrap();
        assert!(k.contains(&2));
        cycle_edges(&k4, &k).unwrap();
    }

    #[test]
    fn derived_cycles() {
        let c4 = Graph::cycle(4).unwrap();
        let s = find_eps(&c4, Some(0), &[], None).unwrap().unwrap();
        let w = eps_to_ham_cycle(&c4, &s, &Anchors { root: Some(0), light: vec![] }).unwrap();
        assert_eq!(w.host_edges().len(), 4);

        let g = k23();
        let s = find_eps(&g, Some(0), &[1], None).unwrap().unwrap();
        let w = eps_to_ham_cycle(&g, &s, &Anchors { root: Some(0), light: vec![] }).unwrap();
        w.validate().unwrap();
        assert_eq!(w.satisfied["root"].len(), 2);

        let k4 = Graph::complete(4).unwrap();
        let s = find_eps(&k4, None, &[], None).unwrap().unwrap();
        assert!(matches!(eps_to_ham_cycle(&k4, &s, &Anchors::default()), Err(Error::NotDt)));
    }

    #[test]
    fn light_vertex_served_by_the_root_edge() {
        // theta graph: 5 and 6 joined by the paths 5-0-6, 5-4-1-6, 5-3-2-6
        let g = Graph::from_graph6("F@Q^?").unwrap();
        let s = find_eps(&g, Some(0), &[6], None).unwrap().unwrap();
        let w = eps_to_ham_cycle(&g, &s, &Anchors { root: Some(0), light: vec![6] }).unwrap();
        w.validate().unwrap();
        assert_eq!(w.satisfied["light6"], vec![Edge::new(0, 6)]);
        assert_eq!(w.satisfied["root"].len(), 1);
    }

    #[test]
    fn derived_paths() {
        let p3 = Graph::path(3).unwrap();
        let s = find_jeps(&p3, 0, 2, &[]).unwrap().unwrap();
        assert_eq!(jeps_to_ham_path(&p3, &s).unwrap().sequence, vec![0, 1, 2]);

        let g = k23();
        let s = find_jeps(&g, 2, 3, &[2, 3]).unwrap().unwrap();
        let w = jeps_to_ham_path(&g, &s).unwrap();
        assert_eq!((w.sequence[0], *w.sequence.last().unwrap()), (2, 3));
        assert!(g.has_edge(w.sequence[0], w.sequence[1]));
        assert!(g.has_edge(w.sequence[3], w.sequence[4]));

        let c4 = Graph::cycle(4).unwrap();
        assert!(jeps_to_ham_path(&c4, &s).is_err());
    }

    #[test]
    fn validators_catch_broken_decompositions() {
        let g = k23();
        let mut s = find_eps(&g, Some(0), &[1], None).unwrap().unwrap();
        s.forest = EdgeSet::new();
        assert!(s.validate().is_err());
        let c4 = Graph::cycle(4).unwrap();
        let odd =
            EpsDecomposition { host: c4.clone(), eul: set(&c4, &[(0, 1), (1, 2), (2, 3)]), forest: EdgeSet::new() };
        assert!(odd.validate().is_err());
        let cyclic = EpsDecomposition {
            host: c4.clone(),
            eul: EdgeSet::new(),
            forest: set(&c4, &[(0, 1), (1, 2), (2, 3), (0, 3)]),
        };
        assert!(cyclic.validate().is_err());
        let mut j = find_jeps(&g, 2, 3, &[2, 3]).unwrap().unwrap();
        j.trail.swap(0, 1);
        assert!(j.validate().is_err());
    }

    #[test]
    fn block_chain_decompositions() {
        let g = triangle_bridge_triangle();
        let s = find_eps(&g, None, &[0, 5], None).unwrap().unwrap();
        s.validate().unwrap();
        let j = find_jeps(&g, 0, 5, &[0, 5]).unwrap().unwrap();
        j.validate().unwrap();
    }
}
