//! The fixed counterexample families.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `K_{2,k-2}` with the two high-degree vertices labelled 0 and 1. Orders
/// below 5 are built but flagged on stderr: `K_{2,2}` is just `C₄`.
pub fn build_k2m(k: usize) -> Result<Graph> {
    if k < 4 {
        return Err(Error::Precondition(format!("K_(2,k-2) needs k >= 4, got {k}")));
    }
    if k < 5 {
        eprintln!("warning: K_(2,{}) is not a counterexample for F_{k}", k - 2);
    }
    Graph::complete_bipartite(2, k - 2)
}

/// The cycle `v₁ … v_n` (vertices `0..n`) with an extra vertex `v` joined to
/// `v₁` and `v_k`. Returns `(graph, v, v₁, v_k)`.
pub fn build_h_example(n: usize, k: usize) -> Result<(Graph, usize, usize, usize)> {
    if k < 5 || n < k + 3 {
        return Err(Error::Precondition(format!("need k >= 5 and n >= k + 3, got n = {n}, k = {k}")));
    }
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.push((n, 0));
    edges.push((n, k - 1));
    Ok((Graph::new(n + 1, edges)?, n, 0, k - 1))
}
