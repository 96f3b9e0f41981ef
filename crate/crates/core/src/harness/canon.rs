//! Canonical labelling by partition refinement with individualisation.
//!
//! The search tree is explored in full (no automorphism pruning); the
//! canonical form is the relabelling whose upper-triangle code is largest.

use crate::graph::{bit, Graph};

/// Largest supported order: the code packs all `n(n-1)/2` vertex pairs into a u64.
pub const MAX_CANON_VERTICES: usize = 11;

fn pair_index(i: usize, j: usize) -> u32 {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    (j * (j - 1) / 2 + i) as u32
}

/// Adjacency code of `g` relabelled by `label` (old vertex -> new position).
fn code_of(g: &Graph, label: &[usize]) -> u64 {
    let mut code = 0u64;
    for e in g.edges() {
        code |= 1u64 << pair_index(label[e.lo()], label[e.hi()]);
    }
    code
}

/// Splits cells until every cell is equitable with respect to every other.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = cells[s].iter().fold(0u64, |m, &v| m | bit(v));
            for c in 0..cells.len() {
                if cells[c].len() == 1 {
                    continue;
                }
                let count = |v: usize| (g.neighbors(v) & splitter).count_ones();
                let first = count(cells[c][0]);
                if cells[c].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[c].iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut parts: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for (k, v) in keyed {
                    if last != Some(k) {
                        parts.push(Vec::new());
                        last = Some(k);
                    }
                    parts.last_mut().unwrap().push(v);
                }
                cells.splice(c..=c, parts);
                continue 'outer;
            }
        }
        return;
    }
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<(u64, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let mut label = vec![0; g.n()];
        for (pos, cell) in cells.iter().enumerate() {
            label[cell[0]] = pos;
        }
        let code = code_of(g, &label);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, label));
        }
        return;
    };
    for &v in &cells[target] {
        let mut next = cells.clone();
        let rest: Vec<usize> = next[target].iter().copied().filter(|&u| u != v).collect();
        next.splice(target..=target, [vec![v], rest]);
        refine(g, &mut next);
        search(g, next, best);
    }
}

/// Canonical code and the labelling (old vertex -> canonical position) that
/// realises it. Isomorphic graphs, and only they, get equal codes.
pub fn canonical_labelling(g: &Graph) -> (u64, Vec<usize>) {
    assert!(g.n() <= MAX_CANON_VERTICES, "canonical form supports at most {MAX_CANON_VERTICES} vertices");
    if g.n() == 0 {
        return (0, Vec::new());
    }
    // start from the degree partition, low degrees first
    let mut by_degree: Vec<(usize, usize)> = (0..g.n()).map(|v| (g.degree(v), v)).collect();
    by_degree.sort_unstable();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut last = None;
    for (d, v) in by_degree {
        if last != Some(d) {
            cells.push(Vec::new());
            last = Some(d);
        }
        cells.last_mut().unwrap().push(v);
    }
    refine(g, &mut cells);
    let mut best = None;
    search(g, cells, &mut best);
    best.unwrap()
}

pub fn canonical_code(g: &Graph) -> u64 {
    canonical_labelling(g).0
}

pub fn canonical_form(g: &Graph) -> Graph {
    let (_, label) = canonical_labelling(g);
    g.relabel(&label)
}
