//! Canonical forms and automorphism counts.
//!
//! A connected graph is reduced to a vertex-coloured complete graph whose
//! edge colours encode the multiset of (labelled) internal edges between
//! two vertices. Colour refinement plus individualization enumerates the
//! leaves of a search tree; the least leaf encoding is the canonical key and
//! the number of leaves attaining it is the order of the vertex
//! automorphism group. Half-edge automorphisms fixing every vertex (leg
//! permutations, loop flips, parallel-edge permutations) contribute a
//! product of factorials.

use std::collections::BTreeMap;

use super::graph::StableGraph;
use crate::error::{Error, Result};

/// Deterministic encoding of an isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u32>);

impl CanonicalKey {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

/// Size limits for canonicalization.
#[derive(Clone, Copy, Debug)]
pub struct CanonLimits {
    pub max_vertices: usize,
    pub max_half_edges_per_vertex: usize,
}

impl Default for CanonLimits {
    fn default() -> Self {
        CanonLimits { max_vertices: 24, max_half_edges_per_vertex: 32 }
    }
}

pub fn canonicalize(g: &StableGraph) -> Result<(CanonicalKey, u128)> {
    canonicalize_with(g, &CanonLimits::default())
}

pub fn canonicalize_with(g: &StableGraph, limits: &CanonLimits) -> Result<(CanonicalKey, u128)> {
    let comps = g.components();
    let mut parts: Vec<(Vec<u32>, u128)> = Vec::with_capacity(comps.len());
    for c in &comps {
        if c.len() > limits.max_vertices {
            return Err(Error::Resource(format!("{} vertices in one component", c.len())));
        }
        parts.push(canonical_connected(g, c, limits)?);
    }
    Ok(combine(parts))
}

/// Key of a disjoint union from the keys of its components.
pub(crate) fn combine(mut parts: Vec<(Vec<u32>, u128)>) -> (CanonicalKey, u128) {
    parts.sort();
    let mut key = vec![parts.len() as u32];
    let mut aut: u128 = 1;
    let mut run = 0u128;
    for i in 0..parts.len() {
        key.push(parts[i].0.len() as u32);
        key.extend_from_slice(&parts[i].0);
        aut *= parts[i].1;
        run = if i > 0 && parts[i].0 == parts[i - 1].0 { run + 1 } else { 1 };
        aut *= run;
    }
    (CanonicalKey(key), aut)
}

/// Split a key back into component keys.
fn component_keys(key: &CanonicalKey) -> Vec<&[u32]> {
    let k = &key.0;
    let mut out = Vec::new();
    let mut i = 1;
    while i < k.len() {
        let len = k[i] as usize;
        out.push(&k[i + 1..i + 1 + len]);
        i += 1 + len;
    }
    out
}

/// Key of the disjoint union of two canonical classes.
pub fn union_key(a: &CanonicalKey, b: &CanonicalKey) -> CanonicalKey {
    let mut parts = component_keys(a);
    parts.extend(component_keys(b));
    parts.sort();
    let mut key = vec![parts.len() as u32];
    for p in parts {
        key.push(p.len() as u32);
        key.extend_from_slice(p);
    }
    CanonicalKey(key)
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

struct Coded {
    n: usize,
    vcode: Vec<u32>,
    ecode: Vec<Vec<u32>>,
    header: Vec<u32>,
    local: u128,
}

/// Encodes a component as a coloured complete graph.
fn encode(g: &StableGraph, verts: &[usize], limits: &CanonLimits) -> Result<Coded> {
    let n = verts.len();
    let mut idx = BTreeMap::new();
    for (i, &v) in verts.iter().enumerate() {
        idx.insert(v, i);
    }
    let mut legs: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut loops: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
    let mut between: BTreeMap<(usize, usize), Vec<(u32, u32)>> = BTreeMap::new();
    let mut valence = vec![0usize; n];
    for &h in g.legs() {
        if let Some(&i) = idx.get(&g.owner(h)) {
            legs[i].push(g.label(h));
            valence[i] += 1;
        }
    }
    for &(a, b) in g.pairs() {
        let (Some(&u), Some(&v)) = (idx.get(&g.owner(a)), idx.get(&g.owner(b))) else { continue };
        let (la, lb) = (g.label(a), g.label(b));
        valence[u] += 1;
        valence[v] += 1;
        if u == v {
            loops[u].push((la.min(lb), la.max(lb)));
        } else {
            between.entry((u, v)).or_default().push((la, lb));
            between.entry((v, u)).or_default().push((lb, la));
        }
    }
    if valence.iter().any(|&d| d > limits.max_half_edges_per_vertex) {
        return Err(Error::Resource("too many half-edges at a vertex".into()));
    }

    let mut local: u128 = 1;
    let mut vdesc: Vec<Vec<u32>> = Vec::with_capacity(n);
    for i in 0..n {
        legs[i].sort_unstable();
        loops[i].sort_unstable();
        for run in runs(&legs[i]) {
            local *= factorial(run);
        }
        for (k, run) in runs_with(&loops[i]) {
            local *= factorial(run);
            if k.0 == k.1 {
                local *= 1u128 << run;
            }
        }
        let mut d = vec![g.genera()[verts[i]], legs[i].len() as u32];
        d.extend_from_slice(&legs[i]);
        d.push(loops[i].len() as u32);
        d.extend(loops[i].iter().flat_map(|&(a, b)| [a, b]));
        vdesc.push(d);
    }
    let mut edesc: BTreeMap<(usize, usize), Vec<u32>> = BTreeMap::new();
    for ((u, v), mut list) in between {
        list.sort_unstable();
        if u < v {
            for (_, run) in runs_with(&list) {
                local *= factorial(run);
            }
        }
        edesc.insert((u, v), list.iter().flat_map(|&(a, b)| [a, b]).collect());
    }

    let mut vtable: Vec<Vec<u32>> = vdesc.clone();
    vtable.sort();
    vtable.dedup();
    let mut etable: Vec<Vec<u32>> = edesc.values().cloned().collect();
    etable.sort();
    etable.dedup();
    let vcode = vdesc.iter().map(|d| vtable.binary_search(d).unwrap() as u32).collect();
    let mut ecode = vec![vec![0u32; n]; n];
    for ((u, v), d) in &edesc {
        ecode[*u][*v] = etable.binary_search(d).unwrap() as u32 + 1;
    }
    let mut header = vec![n as u32, vtable.len() as u32];
    for d in &vtable {
        header.push(d.len() as u32);
        header.extend_from_slice(d);
    }
    header.push(etable.len() as u32);
    for d in &etable {
        header.push(d.len() as u32);
        header.extend_from_slice(d);
    }
    Ok(Coded { n, vcode, ecode, header, local })
}

fn runs(xs: &[u32]) -> Vec<usize> {
    runs_with(xs).into_iter().map(|(_, r)| r).collect()
}

fn runs_with<T: PartialEq + Copy>(xs: &[T]) -> Vec<(T, usize)> {
    let mut out: Vec<(T, usize)> = Vec::new();
    for &x in xs {
        match out.last_mut() {
            Some((y, r)) if *y == x => *r += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

type Partition = Vec<Vec<usize>>;

fn refine(c: &Coded, mut part: Partition) -> Partition {
    let mut cell_of = vec![0usize; c.n];
    loop {
        for (i, cell) in part.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let mut next: Partition = Vec::with_capacity(part.len());
        let mut changed = false;
        for cell in &part {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut sigs: Vec<(Vec<(usize, u32)>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut s: Vec<(usize, u32)> = (0..c.n)
                        .filter(|&u| u != v && c.ecode[v][u] != 0)
                        .map(|u| (cell_of[u], c.ecode[v][u]))
                        .collect();
                    s.sort_unstable();
                    (s, v)
                })
                .collect();
            sigs.sort();
            let before = next.len();
            let mut start = 0;
            for i in 1..=sigs.len() {
                if i == sigs.len() || sigs[i].0 != sigs[start].0 {
                    next.push(sigs[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
            changed |= next.len() > before + 1;
        }
        part = next;
        if !changed {
            return part;
        }
    }
}

struct Search<'a> {
    c: &'a Coded,
    best: Option<Vec<u32>>,
    count: u128,
}

impl Search<'_> {
    fn leaf(&mut self, part: &Partition) {
        let order: Vec<usize> = part.iter().map(|cell| cell[0]).collect();
        let n = self.c.n;
        let mut code = Vec::with_capacity(n + n * (n.saturating_sub(1)) / 2);
        code.extend(order.iter().map(|&v| self.c.vcode[v]));
        for i in 0..n {
            for j in i + 1..n {
                code.push(self.c.ecode[order[i]][order[j]]);
            }
        }
        match &self.best {
            Some(b) if *b < code => {}
            Some(b) if *b == code => self.count += 1,
            _ => {
                self.best = Some(code);
                self.count = 1;
            }
        }
    }

    fn run(&mut self, part: Partition) {
        if part.iter().all(|cell| cell.len() == 1) {
            self.leaf(&part);
            return;
        }
        let (target, _) =
            part.iter().enumerate().filter(|(_, c)| c.len() > 1).min_by_key(|(i, c)| (c.len(), *i)).unwrap();
        for &v in &part[target] {
            let mut next: Partition = Vec::with_capacity(part.len() + 1);
            next.extend(part[..target].iter().cloned());
            next.push(vec![v]);
            next.push(part[target].iter().copied().filter(|&u| u != v).collect());
            next.extend(part[target + 1..].iter().cloned());
            let next = refine(self.c, next);
            self.run(next);
        }
    }
}

fn canonical_connected(g: &StableGraph, verts: &[usize], limits: &CanonLimits) -> Result<(Vec<u32>, u128)> {
    let c = encode(g, verts, limits)?;
    let mut initial: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for v in 0..c.n {
        initial.entry(c.vcode[v]).or_default().push(v);
    }
    let part = refine(&c, initial.into_values().collect());
    let mut s = Search { c: &c, best: None, count: 0 };
    s.run(part);
    let mut key = c.header.clone();
    key.extend(s.best.unwrap_or_default());
    Ok((key, s.count * c.local))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aut(g: &StableGraph) -> u128 {
        canonicalize(g).unwrap().1
    }

    #[test]
    fn reference_automorphism_orders() {
        let theta = StableGraph::from_edges(&[0, 0], &[(0, 1), (0, 1), (0, 1)], &[]).unwrap();
        assert_eq!(aut(&theta), 12);
        let dumbbell = StableGraph::from_edges(&[0, 0], &[(0, 0), (0, 1), (1, 1)], &[]).unwrap();
        assert_eq!(aut(&dumbbell), 8);
        let tadpole = StableGraph::from_edges(&[0], &[(0, 0)], &[0]).unwrap();
        assert_eq!(aut(&tadpole), 2);
        let tripod = StableGraph::from_edges(&[0], &[], &[0, 0, 0]).unwrap();
        assert_eq!(aut(&tripod), 6);
    }

    #[test]
    fn isomorphic_graphs_share_keys() {
        let a = StableGraph::from_edges(&[0, 1], &[(0, 1), (0, 0)], &[0]).unwrap();
        let b = StableGraph::from_edges(&[1, 0], &[(1, 1), (1, 0)], &[1]).unwrap();
        assert_eq!(canonicalize(&a).unwrap(), canonicalize(&b).unwrap());
        let c = StableGraph::from_edges(&[1, 0], &[(1, 1), (1, 0)], &[0]).unwrap();
        assert_ne!(canonicalize(&a).unwrap().0, canonicalize(&c).unwrap().0);
    }
}
