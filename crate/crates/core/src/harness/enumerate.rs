//! Isomorph-free generation of small connected graphs by vertex extension.
//!
//! Every connected graph on `n` vertices arises from a connected graph on
//! `n - 1` vertices (delete a non-cutvertex) by adding a vertex with a
//! non-empty neighbourhood, so extending one representative per class and
//! deduplicating by canonical code reaches every class exactly once.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::canon::{canonical_labelling, MAX_CANON_VERTICES};
use crate::decomposition::{is_2_connected, is_block_chain, is_edge_critical};
use crate::error::{Error, Result};
use crate::graph::{bit, Graph};

/// Largest order accepted by the enumerators.
pub const MAX_ENUMERATION_ORDER: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    All,
    Dt,
    EdgeCritical,
}

impl Filter {
    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            Filter::All => true,
            Filter::Dt => g.is_dt(),
            Filter::EdgeCritical => is_edge_critical(g).unwrap_or(false),
        }
    }
}

type Memo = Mutex<Vec<Option<Arc<Vec<Graph>>>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(vec![None; MAX_ENUMERATION_ORDER + 1]))
}

fn check_order(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_ENUMERATION_ORDER.min(MAX_CANON_VERTICES) {
        return Err(Error::Precondition(format!(
            "enumeration supports {min} <= n <= {MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    Ok(())
}

fn extend(smaller: &[Graph], n: usize) -> Vec<Graph> {
    let mut seen: HashMap<u64, Graph> = HashMap::new();
    let new = n - 1;
    for g in smaller {
        let mut adj: Vec<u64> = (0..new).map(|v| g.neighbors(v)).collect();
        adj.push(0);
        for subset in 1u64..(1 << new) {
            let mut a = adj.clone();
            a[new] = subset;
            for (v, row) in a.iter_mut().enumerate().take(new) {
                if subset & bit(v) != 0 {
                    *row |= bit(new);
                }
            }
            let h = Graph::from_adjacency(a);
            let (code, label) = canonical_labelling(&h);
            seen.entry(code).or_insert_with(|| h.relabel(&label));
        }
    }
    let mut out: Vec<(u64, Graph)> = seen.into_iter().collect();
    out.sort_unstable_by_key(|(c, _)| *c);
    out.into_iter().map(|(_, g)| g).collect()
}

/// One canonical representative of every connected graph on `n` vertices,
/// in increasing order of canonical code.
pub fn enumerate_connected(n: usize) -> Result<Arc<Vec<Graph>>> {
    check_order(n, 1)?;
    if let Some(hit) = memo().lock().unwrap()[n].clone() {
        return Ok(hit);
    }
    let graphs = if n == 1 {
        vec![Graph::empty(1)?]
    } else {
        let smaller = enumerate_connected(n - 1)?;
        extend(&smaller, n)
    };
    let graphs = Arc::new(graphs);
    memo().lock().unwrap()[n] = Some(graphs.clone());
    Ok(graphs)
}

/// One representative per isomorphism class of 2-connected graphs on `n`
/// vertices passing `filter`, in deterministic order.
pub fn enumerate_2connected(n: usize, filter: Filter) -> Result<Vec<Graph>> {
    check_order(n, 3)?;
    Ok(enumerate_connected(n)?.iter().filter(|g| is_2_connected(g) && filter.accepts(g)).cloned().collect())
}

/// Connected graphs on `n` vertices whose blocks form a chain of length at least two.
pub fn enumerate_block_chains(n: usize) -> Result<Vec<Graph>> {
    check_order(n, 2)?;
    Ok(enumerate_connected(n)?
        .iter()
        .filter(|g| is_block_chain(g).is_some_and(|d| d.is_nontrivial_chain()))
        .cloned()
        .collect())
}
