//! Simple undirected graphs on vertices `0..n` stored as adjacency bit sets.
//!
//! A [`Graph`] is immutable once built; derived graphs ([`Graph::square`],
//! [`Graph::augment_apex`], edge/vertex deletions) are new values.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph6;

/// Largest supported vertex count (one graph6 size byte, one `u64` per row).
pub const MAX_VERTICES: usize = 62;

/// Iterates over the set bits of a vertex mask in increasing order.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", from = "[usize; 2]")]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Edge {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn lo(self) -> usize {
        self.0
    }

    pub fn hi(self) -> usize {
        self.1
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint opposite `v`, if `v` is an endpoint.
    pub fn other(self, v: usize) -> Option<usize> {
        if self.0 == v {
            Some(self.1)
        } else if self.1 == v {
            Some(self.0)
        } else {
            None
        }
    }
}

impl From<[usize; 2]> for Edge {
    fn from(p: [usize; 2]) -> Self {
        Edge::new(p[0], p[1])
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.0, e.1]
    }
}

impl From<(usize, usize)> for Edge {
    fn from(p: (usize, usize)) -> Self {
        Edge::new(p.0, p.1)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Immutable simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds the simple graph on `n` vertices with the given edges; duplicates collapse.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut g = Graph::empty(n)?;
        for e in edges {
            let e = e.into();
            if e.0 == e.1 {
                return Err(Error::SelfLoop(e.0));
            }
            g.check_vertex(e.1)?;
            g.adj[e.0] |= bit(e.1);
            g.adj[e.1] |= bit(e.0);
        }
        Ok(g)
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from adjacency rows; the caller guarantees symmetry and no loops.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Graph {
        debug_assert!(adj.len() <= MAX_VERTICES);
        debug_assert!(adj.iter().enumerate().all(|(v, &row)| row & bit(v) == 0));
        Graph { n: adj.len(), adj }
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::Precondition(format!("cycle needs at least 3 vertices, got {n}")));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Graph> {
        Graph::new(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    /// `K_{a,b}` with the `a`-side labelled `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Neighbourhood of `v` as a bit mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbor_iter(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.0, e.1)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !full_mask(u + 1)) {
                out.push(Edge(u, v));
            }
        }
        out
    }

    /// The square: same vertices, `uv` an edge iff `u` and `v` are at distance 1 or 2.
    pub fn square(&self) -> Graph {
        let adj = (0..self.n)
            .map(|u| {
                let mut row = self.adj[u];
                for w in bits(self.adj[u]) {
                    row |= self.adj[w];
                }
                row & !bit(u)
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// Vertices of degree exactly 2.
    pub fn v2_set(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 2).collect()
    }

    pub fn v2_mask(&self) -> u64 {
        (0..self.n).filter(|&v| self.degree(v) == 2).fold(0, |m, v| m | bit(v))
    }

    /// Edges whose endpoints both have degree greater than 2.
    pub fn d_set(&self) -> EdgeSet {
        EdgeSet(self.edges().into_iter().filter(|e| self.degree(e.0) > 2 && self.degree(e.1) > 2).collect())
    }

    /// Every edge meets a vertex of degree 2.
    pub fn is_dt(&self) -> bool {
        self.d_set().is_empty()
    }

    /// `Some(u)` when `u` is pendant, `None` otherwise.
    pub fn pendant_delta(&self, u: usize) -> Option<usize> {
        (u < self.n && self.degree(u) == 1).then_some(u)
    }

    /// `N(v) ⊆ V₂`.
    pub fn neighborhood_in_v2(&self, v: usize) -> bool {
        bits(self.adj[v]).all(|w| self.degree(w) == 2)
    }

    /// Adds a vertex `n` adjacent to exactly `x1` and `x2`.
    pub fn augment_apex(&self, x1: usize, x2: usize) -> Result<Graph> {
        self.check_vertex(x1)?;
        self.check_vertex(x2)?;
        if x1 == x2 {
            return Err(Error::RoleConflict(format!("apex attachments coincide at {x1}")));
        }
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices { n: self.n + 1 });
        }
        let y = self.n;
        let mut adj = self.adj.clone();
        adj[x1] |= bit(y);
        adj[x2] |= bit(y);
        adj.push(bit(x1) | bit(x2));
        Ok(Graph { n: y + 1, adj })
    }

    pub fn without_edge(&self, e: Edge) -> Graph {
        let mut adj = self.adj.clone();
        if e.1 < self.n {
            adj[e.0] &= !bit(e.1);
            adj[e.1] &= !bit(e.0);
        }
        Graph { n: self.n, adj }
    }

    pub fn with_edge(&self, e: Edge) -> Result<Graph> {
        Graph::new(self.n, self.edges().into_iter().chain(std::iter::once(e)))
    }

    /// Spanning subgraph with exactly the given edges.
    pub fn spanning_subgraph<'a>(&self, edges: impl IntoIterator<Item = &'a Edge>) -> Result<Graph> {
        let mut adj = vec![0u64; self.n];
        for e in edges {
            if !self.contains_edge(*e) {
                return Err(Error::Precondition(format!("{e} is not an edge of the host")));
            }
            adj[e.0] |= bit(e.1);
            adj[e.1] |= bit(e.0);
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Subgraph induced by `keep`, relabelled in increasing order.
    /// Returns the graph and the old-to-new vertex map.
    pub fn induced(&self, keep: u64) -> (Graph, Vec<Option<usize>>) {
        let keep = keep & self.vertex_mask();
        let mut map = vec![None; self.n];
        for (i, v) in bits(keep).enumerate() {
            map[v] = Some(i);
        }
        let adj =
            bits(keep).map(|v| bits(self.adj[v] & keep).fold(0u64, |row, w| row | bit(map[w].unwrap()))).collect();
        (Graph::from_adjacency(adj), map)
    }

    pub fn without_vertex(&self, v: usize) -> (Graph, Vec<Option<usize>>) {
        self.induced(self.vertex_mask() & !bit(v))
    }

    /// Vertices reachable from `start` using only vertices in `within`.
    pub fn reach_within(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start) & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connectivity; the empty graph and `K₁` count as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach_within(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// BFS distances from `s` (`usize::MAX` for unreachable vertices).
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut seen = bit(s);
        let mut frontier = bit(s);
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= !seen;
            for v in bits(next) {
                dist[v] = d;
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    /// Applies a vertex relabelling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits(self.adj[u]) {
                adj[perm[u]] |= bit(perm[v]);
            }
        }
        Graph { n: self.n, adj }
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph> {
        graph6::decode(text)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", self.to_graph6(), self.edges())
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_graph6())
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Graph::from_graph6(&text).map_err(serde::de::Error::custom)
    }
}

/// A set of edges; every member was checked against a host graph at construction.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(BTreeSet<Edge>);

impl EdgeSet {
    pub fn new() -> EdgeSet {
        EdgeSet(BTreeSet::new())
    }

    /// Collects `edges`, rejecting any pair that is not an edge of `host`.
    pub fn from_host<I, E>(host: &Graph, edges: I) -> Result<EdgeSet>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut set = BTreeSet::new();
        for e in edges {
            let e = e.into();
            if !host.contains_edge(e) {
                return Err(Error::Precondition(format!("{e} is not an edge of the host graph")));
            }
            set.insert(e);
        }
        Ok(EdgeSet(set))
    }

    pub(crate) fn from_unchecked(edges: impl IntoIterator<Item = Edge>) -> EdgeSet {
        EdgeSet(edges.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.0.contains(&e)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Edge> {
        self.0.iter()
    }

    pub fn is_subset_of(&self, host: &Graph) -> bool {
        self.0.iter().all(|&e| host.contains_edge(e))
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    /// Number of members incident to `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.0.iter().filter(|e| e.contains(v)).count()
    }

    pub fn vertex_mask(&self) -> u64 {
        self.0.iter().fold(0, |m, e| m | bit(e.0) | bit(e.1))
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = &'a Edge;
    type IntoIter = std::collections::btree_set::Iter<'a, Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
