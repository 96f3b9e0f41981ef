//! Blocks, cutvertices and block chains, plus the edge-critical reductions
//! used when working through a block one `D(G)` edge at a time.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Edge, EdgeSet, Graph};

/// A maximal 2-connected subgraph or a bridge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    /// Edges in lexicographic order.
    pub edges: Vec<Edge>,
    #[serde(skip)]
    pub vertices: u64,
}

impl Block {
    fn from_edges(mut edges: Vec<Edge>) -> Block {
        edges.sort_unstable();
        let vertices = edges.iter().fold(0, |m, e| m | bit(e.lo()) | bit(e.hi()));
        Block { edges, vertices }
    }

    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices & bit(v) != 0
    }

    pub fn vertex_list(&self) -> Vec<usize> {
        bits(self.vertices).collect()
    }

    pub fn order(&self) -> usize {
        self.vertices.count_ones() as usize
    }

    /// The block as a graph of its own, relabelled in increasing vertex order.
    pub fn as_graph(&self, host: &Graph) -> (Graph, Vec<Option<usize>>) {
        let spanning = host.spanning_subgraph(self.edges.iter()).expect("block edges belong to the host");
        spanning.induced(self.vertices)
    }

    /// DT-ness measured with degrees inside the block.
    pub fn is_dt(&self) -> bool {
        let deg = |v: usize| self.edges.iter().filter(|e| e.contains(v)).count();
        self.edges.iter().all(|e| deg(e.lo()) == 2 || deg(e.hi()) == 2)
    }
}

/// Linear arrangement `B₀, c₁, B₁, …, c_k, B_k` of a block chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Chain {
    /// Block indices from one endblock to the other.
    pub order: Vec<usize>,
    /// `links[i]` is the cutvertex shared by `order[i]` and `order[i + 1]`.
    pub links: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Sorted by smallest edge.
    pub blocks: Vec<Block>,
    pub cutvertices: Vec<usize>,
    /// Present iff the block-cut tree is a path.
    pub chain: Option<Chain>,
}

impl BlockDecomposition {
    pub fn is_cutvertex(&self, v: usize) -> bool {
        self.cutvertices.contains(&v)
    }

    /// Chain with at least two blocks.
    pub fn is_nontrivial_chain(&self) -> bool {
        self.chain.as_ref().is_some_and(|c| c.order.len() >= 2)
    }

    /// The two endblocks (block indices) of a non-trivial chain.
    pub fn endblocks(&self) -> Option<(usize, usize)> {
        let chain = self.chain.as_ref()?;
        if chain.order.len() < 2 {
            return None;
        }
        Some((chain.order[0], *chain.order.last().unwrap()))
    }

    /// For an endblock of a non-trivial chain, the cutvertex it contains.
    pub fn endblock_cutvertex(&self, block: usize) -> Option<usize> {
        let chain = self.chain.as_ref()?;
        if chain.order.len() < 2 {
            return None;
        }
        if chain.order[0] == block {
            chain.links.first().copied()
        } else if *chain.order.last().unwrap() == block {
            chain.links.last().copied()
        } else {
            None
        }
    }

    /// Index of the block containing edge `e`.
    pub fn block_of_edge(&self, e: Edge) -> Option<usize> {
        self.blocks.iter().position(|b| b.edges.binary_search(&e).is_ok())
    }
}

struct Tarjan<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<Edge>,
    blocks: Vec<Vec<Edge>>,
    cut: u64,
}

impl Tarjan<'_> {
    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        let mut children = 0;
        for v in self.g.neighbor_iter(u) {
            if self.disc[v] == 0 {
                children += 1;
                self.stack.push(Edge::new(u, v));
                self.visit(v, Some(u));
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    if parent.is_some() || children > 1 {
                        self.cut |= bit(u);
                    }
                    let tree_edge = Edge::new(u, v);
                    let mut block = Vec::new();
                    while let Some(e) = self.stack.pop() {
                        block.push(e);
                        if e == tree_edge {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                self.stack.push(Edge::new(u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

/// Blocks and cutvertices of a connected graph.
pub fn blocks(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut t = Tarjan { g, disc: vec![0; n], low: vec![0; n], time: 0, stack: Vec::new(), blocks: Vec::new(), cut: 0 };
    if n > 0 {
        t.visit(0, None);
    }
    let mut blocks: Vec<Block> = t.blocks.into_iter().map(Block::from_edges).collect();
    blocks.sort_by(|a, b| a.edges[0].cmp(&b.edges[0]));
    let cutvertices: Vec<usize> = bits(t.cut).collect();
    let chain = chain_order(&blocks, &cutvertices);
    Ok(BlockDecomposition { blocks, cutvertices, chain })
}

fn chain_order(blocks: &[Block], cutvertices: &[usize]) -> Option<Chain> {
    match blocks.len() {
        0 => return Some(Chain { order: vec![], links: vec![] }),
        1 => return Some(Chain { order: vec![0], links: vec![] }),
        _ => {}
    }
    let cuts_in = |b: &Block| cutvertices.iter().filter(|&&c| b.contains(c)).count();
    if blocks.iter().any(|b| cuts_in(b) > 2) {
        return None;
    }
    for &c in cutvertices {
        if blocks.iter().filter(|b| b.contains(c)).count() != 2 {
            return None;
        }
    }
    // the bc-tree is a tree with max degree 2, hence a path
    let start = blocks.iter().position(|b| cuts_in(b) == 1)?;
    let mut order = vec![start];
    let mut links = Vec::new();
    let mut prev_cut = None;
    let mut cur = start;
    loop {
        let next_cut = cutvertices.iter().copied().find(|&c| blocks[cur].contains(c) && Some(c) != prev_cut);
        let Some(c) = next_cut else { break };
        let next = (0..blocks.len()).find(|&i| i != cur && blocks[i].contains(c))?;
        links.push(c);
        order.push(next);
        prev_cut = Some(c);
        cur = next;
    }
    (order.len() == blocks.len()).then_some(Chain { order, links })
}

pub fn is_2_connected(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && blocks(g).is_ok_and(|d| d.cutvertices.is_empty() && d.blocks.len() == 1)
}

/// The decomposition when `g` is connected and its block-cut tree is a path.
pub fn is_block_chain(g: &Graph) -> Option<BlockDecomposition> {
    blocks(g).ok().filter(|d| d.chain.is_some())
}

fn require_2_connected(g: &Graph) -> Result<()> {
    if is_2_connected(g) {
        Ok(())
    } else {
        Err(Error::NotTwoConnected)
    }
}

/// Deleting any single edge destroys 2-connectivity.
pub fn is_edge_critical(g: &Graph) -> Result<bool> {
    require_2_connected(g)?;
    Ok(g.edges().into_iter().all(|e| !is_2_connected(&g.without_edge(e))))
}

/// Greedily deletes edges (lexicographic scan, restarted after every deletion)
/// while 2-connectivity survives.
pub fn edge_critical_reduce(g: &Graph) -> Result<(Graph, EdgeSet)> {
    require_2_connected(g)?;
    let mut cur = g.clone();
    let mut removed = Vec::new();
    'scan: loop {
        for e in cur.edges() {
            let next = cur.without_edge(e);
            if is_2_connected(&next) {
                removed.push(e);
                cur = next;
                continue 'scan;
            }
        }
        break;
    }
    Ok((cur, EdgeSet::from_unchecked(removed)))
}

/// An edge `e ∈ D(G)` together with a DT endblock of `G − e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DtEndblock {
    pub edge: Edge,
    /// Endpoint of `edge` lying in `block`.
    pub inner: usize,
    pub block: Block,
    /// Cutvertex of `G − e` contained in `block`.
    pub cutvertex: usize,
    /// Decomposition of `G − e`.
    pub remainder: BlockDecomposition,
}

/// Scans `D(g)` lexicographically for an edge `e` such that `g − e` is a block
/// chain with a DT endblock `B`, `{x, y} ⊄ V(B)`, and `x ∈ V(B)` only as the
/// cutvertex of `B`.
pub fn dt_endblock_edge(g: &Graph, x: usize, y: usize) -> Result<DtEndblock> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(Error::RoleConflict(format!("x = y = {x}")));
    }
    require_2_connected(g)?;
    if !is_edge_critical(g)? {
        return Err(Error::NotEdgeCritical);
    }
    let d = g.d_set();
    if d.is_empty() {
        return Err(Error::NotDt);
    }
    for &e in &d {
        let rest = g.without_edge(e);
        let Some(dec) = is_block_chain(&rest) else { continue };
        let Some((first, last)) = dec.endblocks() else { continue };
        for b in [first, last] {
            let block = &dec.blocks[b];
            let c = dec.endblock_cutvertex(b).unwrap();
            if !block.is_dt() {
                continue;
            }
            if block.contains(x) && block.contains(y) {
                continue;
            }
            if block.contains(x) && x != c {
                continue;
            }
            let inner = if block.contains(e.lo()) && e.lo() != c { e.lo() } else { e.hi() };
            if !block.contains(inner) {
                continue;
            }
            return Ok(DtEndblock { edge: e, inner, block: block.clone(), cutvertex: c, remainder: dec });
        }
    }
    Err(Error::GuaranteeViolated(format!(
        "no D-edge of {} yields a qualifying DT endblock for ({x}, {y})",
        g.to_graph6()
    )))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathReplacement {
    pub graph: Graph,
    /// Old vertex to new vertex; `None` for deleted block interior.
    pub map: Vec<Option<usize>>,
    /// The two fresh internal path vertices `p`, `q` of `a–p–q–b`.
    pub fresh: [usize; 2],
}

/// Replaces `block` by a path of length 3 between `a` and `b`: the block's
/// other vertices and all its edges disappear, the survivors are compacted in
/// increasing order and the two fresh vertices take the next indices.
pub fn replace_block_with_path3(g: &Graph, block: &Block, a: usize, b: usize) -> Result<PathReplacement> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if !block.contains(a) || !block.contains(b) {
        return Err(Error::Precondition(format!("attachment vertices {a}, {b} must lie in the block")));
    }
    if a == b {
        return Err(Error::RoleConflict(format!("attachment vertices coincide at {a}")));
    }
    if let Some(e) = block.edges.iter().find(|e| !g.contains_edge(**e)) {
        return Err(Error::Precondition(format!("block edge {e} is not in the graph")));
    }
    let gone = block.vertices & !bit(a) & !bit(b);
    let keep = g.vertex_mask() & !gone;
    let mut map = vec![None; g.n()];
    for (i, v) in bits(keep).enumerate() {
        map[v] = Some(i);
    }
    let kept = keep.count_ones() as usize;
    let (p, q) = (kept, kept + 1);
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|e| block.edges.binary_search(e).is_err())
        .filter_map(|e| Some((map[e.lo()]?, map[e.hi()]?)))
        .collect();
    let (na, nb) = (map[a].unwrap(), map[b].unwrap());
    edges.extend([(na, p), (p, q), (q, nb)]);
    let graph = Graph::new(kept + 2, edges)?;
    Ok(PathReplacement { graph, map, fresh: [p, q] })
}
