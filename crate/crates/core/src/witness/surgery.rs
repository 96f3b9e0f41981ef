//! Local rewrites of witnesses: dropping a vertex by a shortcut, splicing two
//! cycles across a junction, and chaining paths end to end.

use std::collections::BTreeMap;

use super::{walk_edges, Constraint, HamWitness, IncidenceSpec, Requirement};
use crate::error::{Error, Result};
use crate::graph::{bit, Edge, Graph};

/// Removes `u` from the witness and from its host, joining the two walk
/// neighbours of `u` directly. The result lives on `host − u` (relabelled in
/// increasing order) and must be valid there.
pub fn shortcut(w: &HamWitness, u: usize) -> Result<HamWitness> {
    w.host.check_vertex(u)?;
    let n = w.sequence.len();
    let pos = w
        .sequence
        .iter()
        .position(|&v| v == u)
        .ok_or_else(|| Error::InvalidWitness(format!("vertex {u} missing from sequence")))?;
    if !w.closed && (pos == 0 || pos == n - 1) {
        return Err(Error::Precondition(format!("{u} is an endpoint, not interior")));
    }
    if w.closed && n <= 3 {
        return Err(Error::Precondition("a cycle on 3 vertices has no shortcut".into()));
    }
    let a = w.sequence[(pos + n - 1) % n];
    let b = w.sequence[(pos + 1) % n];
    let (host, map) = w.host.without_vertex(u);
    let (ma, mb) = (map[a].unwrap(), map[b].unwrap());
    let sq_adjacent = host.has_edge(ma, mb) || host.neighbors(ma) & host.neighbors(mb) != 0;
    if !sq_adjacent {
        return Err(Error::InvalidWitness(format!("{a} and {b} are not adjacent in the square of host - {u}")));
    }
    let sequence: Vec<usize> = w.sequence.iter().filter(|&&v| v != u).map(|&v| map[v].unwrap()).collect();
    let walk = walk_edges(&sequence, w.closed);
    let remap = |v: usize| if v == u { None } else { map[v] };
    let endpoints = w.spec.endpoints.map(|(x, y)| (remap(x).unwrap(), remap(y).unwrap()));
    let mut spec = IncidenceSpec { endpoints, constraints: Vec::new() };
    let mut satisfied = BTreeMap::new();
    for c in &w.spec.constraints {
        let Some(req) = remap_requirement(&c.requirement, &remap) else { continue };
        let Some(edges) = w.satisfied.get(&c.label) else { continue };
        let Some(moved) = remap_edges(edges, &remap) else { continue };
        if moved.iter().all(|e| walk.contains(e)) {
            spec.constraints.push(Constraint { label: c.label.clone(), requirement: req });
            satisfied.insert(c.label.clone(), moved);
        }
    }
    let out = HamWitness { host, sequence, closed: w.closed, spec, satisfied };
    out.validate()?;
    Ok(out)
}

fn remap_requirement(r: &Requirement, f: &impl Fn(usize) -> Option<usize>) -> Option<Requirement> {
    Some(match *r {
        Requirement::EdgeAt { vertex, count } => Requirement::EdgeAt { vertex: f(vertex)?, count },
        Requirement::Edge { edge } => Requirement::Edge { edge: Edge::new(f(edge.lo())?, f(edge.hi())?) },
        Requirement::EdgeAtOrNeighborPair { vertex } => Requirement::EdgeAtOrNeighborPair { vertex: f(vertex)? },
    })
}

fn remap_edges(edges: &[Edge], f: &impl Fn(usize) -> Option<usize>) -> Option<Vec<Edge>> {
    edges.iter().map(|e| Some(Edge::new(f(e.lo())?, f(e.hi())?))).collect()
}

/// A witness placed inside a larger host: `embed[v]` is the host vertex of
/// the witness vertex `v`. `cut` (in witness labels) is the edge removed from
/// a closed witness before splicing.
#[derive(Clone, Copy, Debug)]
pub struct Embedded<'a> {
    pub witness: &'a HamWitness,
    pub embed: &'a [usize],
    pub cut: Option<Edge>,
}

impl Embedded<'_> {
    fn check(&self, host: &Graph) -> Result<()> {
        if self.embed.len() != self.witness.host.n() {
            return Err(Error::Precondition("embedding does not cover the witness host".into()));
        }
        let mut seen = 0u64;
        for &h in self.embed {
            host.check_vertex(h)?;
            if seen & bit(h) != 0 {
                return Err(Error::Precondition(format!("embedding is not injective at {h}")));
            }
            seen |= bit(h);
        }
        Ok(())
    }

    fn mask(&self) -> u64 {
        self.embed.iter().fold(0, |m, &h| m | bit(h))
    }

    /// The closed witness opened at `cut`, as a host-labelled path.
    fn opened(&self) -> Result<Vec<usize>> {
        let w = self.witness;
        if !w.closed {
            return Err(Error::Precondition("splice needs closed witnesses".into()));
        }
        let cut = self.cut.ok_or_else(|| Error::Precondition("closed witness needs a cut edge".into()))?;
        let n = w.sequence.len();
        let i = (0..n)
            .find(|&i| Edge::new(w.sequence[i], w.sequence[(i + 1) % n]) == cut)
            .ok_or_else(|| Error::Precondition(format!("cut edge {cut} is not on the witness")))?;
        Ok((1..=n).map(|k| self.embed[w.sequence[(i + k) % n]]).collect())
    }

    fn host_path(&self) -> Result<Vec<usize>> {
        if self.witness.closed {
            return Err(Error::Precondition("concatenation needs open witnesses".into()));
        }
        Ok(self.witness.sequence.iter().map(|&v| self.embed[v]).collect())
    }

    /// Constraints and claims moved to host labels, keyed with `prefix`.
    fn carried(&self, prefix: &str) -> Vec<(Constraint, Vec<Edge>)> {
        let f = |v: usize| self.embed.get(v).copied();
        self.witness
            .spec
            .constraints
            .iter()
            .filter_map(|c| {
                let req = remap_requirement(&c.requirement, &f)?;
                let edges = remap_edges(self.witness.satisfied.get(&c.label)?, &f)?;
                Some((Constraint { label: format!("{prefix}{}", c.label), requirement: req }, edges))
            })
            .collect()
    }
}

fn assemble(
    host: &Graph,
    sequence: Vec<usize>,
    closed: bool,
    carried: Vec<(Constraint, Vec<Edge>)>,
) -> Result<HamWitness> {
    let walk = walk_edges(&sequence, closed);
    let endpoints = (!closed).then(|| (sequence[0], *sequence.last().unwrap()));
    let mut spec = IncidenceSpec { endpoints, constraints: Vec::new() };
    let mut satisfied = BTreeMap::new();
    for (c, edges) in carried {
        if edges.iter().all(|e| walk.contains(e)) {
            satisfied.insert(c.label.clone(), edges);
            spec.constraints.push(c);
        }
    }
    let out = HamWitness { host: host.clone(), sequence, closed, spec, satisfied };
    out.validate()?;
    Ok(out)
}

/// Joins two closed witnesses into one hamiltonian cycle of `host²`.
///
/// Each side is opened at its cut edge. If the two sides share exactly one
/// host vertex (the junction), the opened paths are glued there and one
/// bridge closes the cycle; if they are disjoint, two bridges are needed.
pub fn splice(host: &Graph, a: Embedded<'_>, b: Embedded<'_>, bridges: &[Edge]) -> Result<HamWitness> {
    a.check(host)?;
    b.check(host)?;
    let shared = a.mask() & b.mask();
    if a.mask() | b.mask() != host.vertex_mask() {
        return Err(Error::Precondition("the two witnesses do not cover the host".into()));
    }
    let pa = a.opened()?;
    let pb = b.opened()?;
    let incompatible = || Error::Precondition("junction and bridges do not fit the opened cycles".into());
    let sequence = match (shared.count_ones(), bridges) {
        (1, [bridge]) => {
            let j = shared.trailing_zeros() as usize;
            let mut pa = pa;
            let mut pb = pb;
            if pa[0] == j {
                pa.reverse();
            }
            if *pb.last().unwrap() == j {
                pb.reverse();
            }
            if *pa.last().unwrap() != j || pb[0] != j {
                return Err(incompatible());
            }
            if Edge::new(*pb.last().unwrap(), pa[0]) != *bridge {
                return Err(incompatible());
            }
            pa.into_iter().chain(pb.into_iter().skip(1)).collect()
        }
        (0, [b1, b2]) => {
            let ends = |p: &[usize]| (p[0], *p.last().unwrap());
            let mut out = None;
            'orient: for ra in [false, true] {
                for rb in [false, true] {
                    let mut x = pa.clone();
                    let mut y = pb.clone();
                    if ra {
                        x.reverse();
                    }
                    if rb {
                        y.reverse();
                    }
                    let (xs, xe) = ends(&x);
                    let (ys, ye) = ends(&y);
                    let join = Edge::new(xe, ys);
                    let close = Edge::new(ye, xs);
                    if (join == *b1 && close == *b2) || (join == *b2 && close == *b1) {
                        out = Some(x.into_iter().chain(y).collect::<Vec<_>>());
                        break 'orient;
                    }
                }
            }
            out.ok_or_else(incompatible)?
        }
        _ => return Err(incompatible()),
    };
    let mut carried = a.carried("a.");
    carried.extend(b.carried("b."));
    assemble(host, sequence, true, carried)
}

/// Chains open witnesses whose consecutive parts share an endpoint, reversing
/// parts where needed, into one hamiltonian path of `host²`.
pub fn concatenate(host: &Graph, parts: &[Embedded<'_>]) -> Result<HamWitness> {
    let first = parts.first().ok_or_else(|| Error::Precondition("nothing to concatenate".into()))?;
    first.check(host)?;
    let mut seq = first.host_path()?;
    let mut covered = first.mask();
    let mut carried = first.carried("0.");
    for (i, part) in parts.iter().enumerate().skip(1) {
        part.check(host)?;
        let mut p = part.host_path()?;
        let junction = *seq.last().unwrap();
        if p[0] != junction && *p.last().unwrap() == junction {
            p.reverse();
        }
        if p[0] != junction && i == 1 && (seq[0] == p[0] || seq[0] == *p.last().unwrap()) {
            seq.reverse();
            if p[0] != seq[seq.len() - 1] {
                p.reverse();
            }
        }
        if p[0] != *seq.last().unwrap() {
            return Err(Error::Precondition(format!("part {i} does not start where the previous part ends")));
        }
        if covered & part.mask() != bit(p[0]) {
            return Err(Error::Precondition(format!("part {i} overlaps earlier parts beyond the junction")));
        }
        covered |= part.mask();
        seq.extend_from_slice(&p[1..]);
        carried.extend(part.carried(&format!("{i}.")));
    }
    if covered != host.vertex_mask() {
        return Err(Error::Precondition("parts do not cover the host".into()));
    }
    assemble(host, seq, false, carried)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::fixtures::bowtie;
    use crate::witness::{ham_search, SearchOptions};

    fn closed(g: &Graph, seq: Vec<usize>) -> HamWitness {
        HamWitness {
            host: g.clone(),
            sequence: seq,
            closed: true,
            spec: IncidenceSpec::cycle(),
            satisfied: BTreeMap::new(),
        }
    }

    fn open(g: &Graph, seq: Vec<usize>) -> HamWitness {
        let spec = IncidenceSpec::path(seq[0], *seq.last().unwrap());
        HamWitness { host: g.clone(), sequence: seq, closed: false, spec, satisfied: BTreeMap::new() }
    }

    #[test]
    fn shortcut_on_c4() {
        let c4 = Graph::cycle(4).unwrap();
        let w = closed(&c4, vec![0, 1, 2, 3]);
        let s = shortcut(&w, 1).unwrap();
        // host C4 - 1 is the path 0-1-2 after relabelling (old 2 -> 1, old 3 -> 2)
        assert_eq!(s.host, Graph::path(3).unwrap().relabel(&[0, 2, 1]));
        assert_eq!(s.sequence, vec![0, 1, 2]);
    }

    #[test]
    fn shortcut_on_c6() {
        let c6 = Graph::cycle(6).unwrap();
        // 2,1,3,5,0,4 is a hamiltonian cycle of C6²; dropping 1 leaves one of (C6 - 1)²
        let w = closed(&c6, vec![2, 1, 3, 5, 0, 4]);
        w.validate().unwrap();
        let s = shortcut(&w, 1).unwrap();
        s.validate().unwrap();
        assert_eq!(s.sequence.len(), 5);
    }

    #[test]
    fn shortcut_rejects_invalidated_square_edges() {
        // 0 and 2 are at distance 2 in C6, but only through the removed vertex 1
        let c6 = Graph::cycle(6).unwrap();
        let w = closed(&c6, vec![0, 1, 2, 3, 4, 5]);
        assert!(shortcut(&w, 1).is_err());
        let w = open(&c6, vec![0, 1, 2, 4, 5, 3]);
        assert!(shortcut(&w, 0).is_err());
    }

    #[test]
    fn shortcut_keeps_surviving_claims() {
        let c5 = Graph::cycle(5).unwrap();
        let spec = IncidenceSpec::cycle().edge_at("v", 3, 2).edge_at("w", 1, 1);
        let w = ham_search(&c5, &spec, SearchOptions::default()).unwrap().found().unwrap();
        // drop a vertex that is not adjacent (in the walk) to 3
        let u = w.sequence.iter().copied().find(|&v| v != 3 && v != 2 && v != 4).unwrap();
        if let Ok(s) = shortcut(&w, u) {
            s.validate().unwrap();
        }
    }

    #[test]
    fn splice_two_triangles_at_a_junction() {
        let host = bowtie();
        let tri = Graph::complete(3).unwrap();
        let left = closed(&tri, vec![0, 1, 2]);
        let right = closed(&tri, vec![0, 1, 2]);
        // left vertices -> 0,1,2 ; right vertices -> 2,3,4 ; junction 2
        let a = Embedded { witness: &left, embed: &[0, 1, 2], cut: Some(Edge::new(1, 2)) };
        let b = Embedded { witness: &right, embed: &[2, 3, 4], cut: Some(Edge::new(0, 1)) };
        let w = splice(&host, a, b, &[Edge::new(1, 3)]).unwrap();
        assert_eq!(w.sequence.len(), 5);
        assert!(w.uses_edge(Edge::new(1, 3)));
        assert!(!w.uses_edge(Edge::new(1, 2)) && !w.uses_edge(Edge::new(2, 3)));
        w.validate().unwrap();
    }

    #[test]
    fn splice_rejects_bad_bridges() {
        let host = bowtie();
        let tri = Graph::complete(3).unwrap();
        let t = closed(&tri, vec![0, 1, 2]);
        let a = Embedded { witness: &t, embed: &[0, 1, 2], cut: Some(Edge::new(1, 2)) };
        let b = Embedded { witness: &t, embed: &[2, 3, 4], cut: Some(Edge::new(0, 1)) };
        assert!(splice(&host, a, b, &[Edge::new(0, 4)]).is_err());
        assert!(splice(&host, a, b, &[]).is_err());
        let b_far = Embedded { witness: &t, embed: &[2, 3, 4], cut: Some(Edge::new(1, 2)) };
        // opening the right triangle at 3-4 leaves 2 in the middle: no junction fit
        assert!(splice(&host, a, b_far, &[Edge::new(1, 3)]).is_err());
    }

    #[test]
    fn concatenation_through_a_cutvertex() {
        let host = bowtie();
        let tri = Graph::complete(3).unwrap();
        let left = open(&tri, vec![0, 1, 2]);
        let right = open(&tri, vec![0, 1, 2]);
        let parts = [
            Embedded { witness: &left, embed: &[0, 1, 2], cut: None },
            Embedded { witness: &right, embed: &[2, 3, 4], cut: None },
        ];
        let w = concatenate(&host, &parts).unwrap();
        assert_eq!(w.sequence, vec![0, 1, 2, 3, 4]);
        assert_eq!(w.spec.endpoints, Some((0, 4)));
    }

    #[test]
    fn concatenation_rejects_gaps() {
        let host = bowtie();
        let tri = Graph::complete(3).unwrap();
        let left = open(&tri, vec![0, 1, 2]);
        let parts = [
            Embedded { witness: &left, embed: &[0, 1, 2], cut: None },
            // the shared vertex 2 sits inside the second path, not at an end
            Embedded { witness: &left, embed: &[3, 2, 4], cut: None },
        ];
        assert!(concatenate(&host, &parts).is_err());
    }
}
