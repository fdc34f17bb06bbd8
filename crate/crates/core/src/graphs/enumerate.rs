//! Exhaustive generation of stable graphs up to isomorphism.
//!
//! Connected graphs of type (g, n) are generated from multisets of vertex
//! types (genus, valence) with sum of 2g_v - 2 + val_v equal to 2g - 2 + n,
//! a distribution of legs, and all symmetric multiplicity matrices with the
//! prescribed internal degrees (a perfect matching of half-edges taken up to
//! permutations at each vertex). Duplicates are removed by canonical key.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::canon::{canonicalize, CanonicalKey};
use super::graph::StableGraph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    /// Number of half-edge labels; 1 means the unlabelled theory.
    pub n_labels: u32,
    pub genus_zero_only: bool,
    pub connected: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { n_labels: 1, genus_zero_only: false, connected: true }
    }
}

/// Caps on the size of an enumeration request.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_vertices: usize,
    pub max_half_edges: usize,
    pub max_classes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_vertices: 12, max_half_edges: 40, max_classes: 2_000_000 }
    }
}

impl Budget {
    /// Default budget with the class cap taken from `SGQFT_BUDGET` when set.
    pub fn from_env() -> Budget {
        let mut b = Budget::default();
        if let Some(n) = std::env::var("SGQFT_BUDGET").ok().and_then(|s| s.trim().parse().ok()) {
            b.max_classes = n;
        }
        b
    }

    fn admits(&self, g: u32, n: u32) -> Result<()> {
        // A connected graph of type (g, n) has at most 2g - 2 + n vertices
        // and at most g - 1 + (2g - 2 + n) internal edges.
        let chi = 2 * g as usize + n as usize - 2;
        let half_edges = 2 * (g as usize + chi - 1) + n as usize;
        if chi > self.max_vertices || half_edges > self.max_half_edges {
            return Err(Error::Resource(format!("type ({}, {}) exceeds the enumeration budget", g, n)));
        }
        Ok(())
    }
}

/// One representative per class, with its automorphism order.
pub type Classes = Vec<(StableGraph, u128)>;

pub(crate) fn check_stable_range(g: u32, n: u32) -> Result<()> {
    if 2 * g as i64 - 2 + n as i64 <= 0 {
        return Err(Error::Domain(format!("(g, n) = ({}, {}) is not in the stable range", g, n)));
    }
    Ok(())
}

pub fn enumerate_stable(g: u32, n: u32, opts: EnumOptions) -> Result<Classes> {
    enumerate_stable_with(g, n, opts, &Budget::default())
}

pub fn enumerate_stable_with(g: u32, n: u32, opts: EnumOptions, budget: &Budget) -> Result<Classes> {
    let keyed = enumerate_keyed(g, n, opts, None, budget)?;
    Ok(keyed.into_values().collect())
}

/// Connected labelled graphs with exactly `leg_counts[j-1]` legs labelled j.
pub fn enumerate_labelled_by_legs(g: u32, leg_counts: &[u32]) -> Result<Classes> {
    enumerate_labelled_by_legs_with(g, leg_counts, &Budget::default())
}

pub fn enumerate_labelled_by_legs_with(g: u32, leg_counts: &[u32], budget: &Budget) -> Result<Classes> {
    if leg_counts.is_empty() {
        return Err(Error::Domain("at least one label required".into()));
    }
    let n: u32 = leg_counts.iter().sum();
    let opts = EnumOptions { n_labels: leg_counts.len() as u32, genus_zero_only: false, connected: true };
    Ok(enumerate_keyed(g, n, opts, Some(leg_counts), budget)?.into_values().collect())
}

/// Classes keyed and sorted by canonical key.
pub fn enumerate_keyed(
    g: u32,
    n: u32,
    opts: EnumOptions,
    leg_counts: Option<&[u32]>,
    budget: &Budget,
) -> Result<BTreeMap<CanonicalKey, (StableGraph, u128)>> {
    check_stable_range(g, n)?;
    if opts.n_labels == 0 {
        return Err(Error::Domain("the number of labels must be positive".into()));
    }
    if !opts.connected {
        return disconnected(g, n, opts, leg_counts, budget);
    }
    budget.admits(g, n)?;
    let base = connected_unlabelled(g, n, opts.genus_zero_only, budget)?;
    if opts.n_labels == 1 && leg_counts.is_none() {
        return Ok(base);
    }
    let mut out = BTreeMap::new();
    let per_class: Vec<Vec<(CanonicalKey, StableGraph, u128)>> =
        base.par_iter().map(|(_, (rep, _))| labellings(rep, opts.n_labels, leg_counts)).collect::<Result<_>>()?;
    for list in per_class {
        for (k, gr, a) in list {
            out.entry(k).or_insert((gr, a));
        }
        if out.len() > budget.max_classes {
            return Err(Error::Resource("too many labelled classes".into()));
        }
    }
    Ok(out)
}

/// All label assignments on one unlabelled representative, deduplicated.
///
/// Half-edges are grouped into locally symmetric bundles (legs at a vertex,
/// loops at a vertex, parallel edges between two vertices); within a bundle
/// only multisets of label types are generated.
fn labellings(
    rep: &StableGraph,
    n_labels: u32,
    leg_counts: Option<&[u32]>,
) -> Result<Vec<(CanonicalKey, StableGraph, u128)>> {
    let mut groups: BTreeMap<(usize, usize, bool), Vec<(usize, usize)>> = BTreeMap::new();
    for &h in rep.legs() {
        groups.entry((rep.owner(h), usize::MAX, true)).or_default().push((h, h));
    }
    for &(a, b) in rep.pairs() {
        let (u, v) = (rep.owner(a), rep.owner(b));
        let slot = if u <= v { (a, b) } else { (b, a) };
        groups.entry((u.min(v), u.max(v), false)).or_default().push(slot);
    }
    let labels: Vec<u32> = (1..=n_labels).collect();
    let bundles: Vec<Bundle> = groups
        .into_iter()
        .map(|((u, v, is_leg), slots)| {
            let types: Vec<(u32, u32)> = if is_leg {
                labels.iter().map(|&l| (l, l)).collect()
            } else if u == v {
                labels.iter().flat_map(|&a| labels.iter().filter(move |&&b| b >= a).map(move |&b| (a, b))).collect()
            } else {
                labels.iter().flat_map(|&a| labels.iter().map(move |&b| (a, b))).collect()
            };
            Bundle { slots, types }
        })
        .collect();
    let mut walk =
        LabelWalk { rep, bundles: &bundles, leg_counts, assign: vec![0; rep.num_half_edges()], seen: BTreeMap::new() };
    walk.run(0, 0, 0)?;
    Ok(walk.seen.into_iter().map(|(k, (g, a))| (k, g, a)).collect())
}

struct Bundle {
    /// Half-edge pairs; a leg appears as `(h, h)`.
    slots: Vec<(usize, usize)>,
    types: Vec<(u32, u32)>,
}

struct LabelWalk<'a> {
    rep: &'a StableGraph,
    bundles: &'a [Bundle],
    leg_counts: Option<&'a [u32]>,
    assign: Vec<u32>,
    seen: BTreeMap<CanonicalKey, (StableGraph, u128)>,
}

impl LabelWalk<'_> {
    fn run(&mut self, b: usize, slot: usize, min_type: usize) -> Result<()> {
        if b == self.bundles.len() {
            return self.finish();
        }
        let bundle = &self.bundles[b];
        if slot == bundle.slots.len() {
            return self.run(b + 1, 0, 0);
        }
        let (h1, h2) = bundle.slots[slot];
        for t in min_type..bundle.types.len() {
            self.assign[h1] = bundle.types[t].0;
            self.assign[h2] = bundle.types[t].1;
            self.run(b, slot + 1, t)?;
        }
        Ok(())
    }

    fn finish(&mut self) -> Result<()> {
        if let Some(c) = self.leg_counts {
            let mut have = vec![0u32; c.len()];
            for &h in self.rep.legs() {
                have[self.assign[h] as usize - 1] += 1;
            }
            if have != c {
                return Ok(());
            }
        }
        let gr = self.rep.map_labels(|x, _| self.assign[x]);
        let (k, a) = canonicalize(&gr)?;
        self.seen.entry(k).or_insert((gr, a));
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct VertexType {
    genus: u32,
    valence: u32,
}

fn vertex_multisets(g: u32, n: u32, genus_zero_only: bool, max_vertices: usize) -> Vec<Vec<VertexType>> {
    let chi = 2 * g + n - 2;
    let mut types = Vec::new();
    for gv in 0..=g {
        if genus_zero_only && gv > 0 {
            break;
        }
        for val in 0..=(chi + 2) {
            let w = 2 * gv as i64 - 2 + val as i64;
            if w >= 1 && w <= chi as i64 {
                types.push(VertexType { genus: gv, valence: val });
            }
        }
    }
    types.sort();
    types.reverse();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        types: &[VertexType],
        start: usize,
        left: i64,
        genus_left: i64,
        cur: &mut Vec<VertexType>,
        out: &mut Vec<Vec<VertexType>>,
        max_v: usize,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if cur.len() >= max_v {
            return;
        }
        for i in start..types.len() {
            let t = types[i];
            let w = 2 * t.genus as i64 - 2 + t.valence as i64;
            if w <= left && t.genus as i64 <= genus_left {
                cur.push(t);
                rec(types, i, left - w, genus_left - t.genus as i64, cur, out, max_v);
                cur.pop();
            }
        }
    }
    rec(&types, 0, chi as i64, g as i64, &mut cur, &mut out, max_vertices);
    out
}

/// Leg distributions, non-increasing along runs of equal vertex types.
fn leg_distributions(types: &[VertexType], n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(types: &[VertexType], left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let i = cur.len();
        if i == types.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut hi = types[i].valence.min(left);
        if i > 0 && types[i - 1] == types[i] {
            hi = hi.min(cur[i - 1]);
        }
        for l in 0..=hi {
            cur.push(l);
            rec(types, left - l, cur, out);
            cur.pop();
        }
    }
    rec(types, n, &mut cur, &mut out);
    out
}

struct MatrixSearch<'a> {
    types: &'a [VertexType],
    legs: &'a [u32],
    v: usize,
    mat: Vec<Vec<u32>>,
    rem: Vec<u32>,
    out: BTreeMap<CanonicalKey, (StableGraph, u128)>,
    /// Classes found across all seeds, checked against `cap`.
    total: &'a AtomicUsize,
    cap: usize,
    failed: Option<Error>,
}

impl MatrixSearch<'_> {
    fn same_kind(&self, i: usize) -> bool {
        i > 0 && self.types[i - 1] == self.types[i] && self.legs[i - 1] == self.legs[i]
    }

    /// An isomorphism invariant of a vertex whose row is complete. Vertices
    /// of the same kind can always be ordered so that it is non-increasing.
    fn invariant(&self, i: usize) -> (u32, Vec<u32>) {
        let mut m: Vec<u32> = (0..self.v).filter(|&k| k != i && self.mat[i][k] > 0).map(|k| self.mat[i][k]).collect();
        m.sort_unstable_by(|a, b| b.cmp(a));
        (self.mat[i][i], m)
    }

    fn row(&mut self, i: usize) {
        if self.failed.is_some() {
            return;
        }
        if i == self.v {
            if let Some(g) = self.build() {
                self.record(g);
            }
            return;
        }
        let max_loops = self.rem[i] / 2;
        let cap = if self.same_kind(i) { max_loops.min(self.mat[i - 1][i - 1]) } else { max_loops };
        for l in (0..=cap).rev() {
            // A vertex spending all its degree on loops would be isolated.
            if self.v > 1 && 2 * l == self.rem[i] && (0..i).all(|j| self.mat[j][i] == 0) {
                continue;
            }
            self.mat[i][i] = l;
            self.rem[i] -= 2 * l;
            self.col(i, i + 1);
            self.rem[i] += 2 * l;
            self.mat[i][i] = 0;
        }
    }

    fn col(&mut self, i: usize, j: usize) {
        if self.failed.is_some() {
            return;
        }
        if j == self.v {
            if self.rem[i] == 0 && !(self.same_kind(i) && self.invariant(i - 1) < self.invariant(i)) {
                self.row(i + 1);
            }
            return;
        }
        let hi = self.rem[i].min(self.rem[j]);
        let lo = if j + 1 == self.v { self.rem[i] } else { 0 };
        if lo > hi {
            return;
        }
        for m in lo..=hi {
            self.mat[i][j] = m;
            self.mat[j][i] = m;
            self.rem[i] -= m;
            self.rem[j] -= m;
            self.col(i, j + 1);
            self.rem[i] += m;
            self.rem[j] += m;
        }
        self.mat[i][j] = 0;
        self.mat[j][i] = 0;
    }

    fn record(&mut self, g: StableGraph) {
        match canonicalize(&g) {
            Ok((k, a)) => {
                if let std::collections::btree_map::Entry::Vacant(e) = self.out.entry(k) {
                    e.insert((g, a));
                    if self.total.fetch_add(1, Ordering::Relaxed) >= self.cap {
                        self.failed = Some(Error::Resource("too many classes".into()));
                    }
                }
            }
            Err(e) => self.failed = Some(e),
        }
    }

    fn build(&self) -> Option<StableGraph> {
        let genera: Vec<u32> = self.types.iter().map(|t| t.genus).collect();
        let mut edges = Vec::new();
        for i in 0..self.v {
            for j in i..self.v {
                for _ in 0..self.mat[i][j] {
                    edges.push((i, j));
                }
            }
        }
        let mut legs = Vec::new();
        for (i, &l) in self.legs.iter().enumerate() {
            legs.extend(std::iter::repeat_n(i, l as usize));
        }
        let g = StableGraph::from_edges(&genera, &edges, &legs).ok()?;
        if g.is_connected() {
            Some(g)
        } else {
            None
        }
    }
}

fn connected_unlabelled(
    g: u32,
    n: u32,
    genus_zero_only: bool,
    budget: &Budget,
) -> Result<BTreeMap<CanonicalKey, (StableGraph, u128)>> {
    let mut seeds = Vec::new();
    for types in vertex_multisets(g, n, genus_zero_only, budget.max_vertices) {
        let vg: u32 = types.iter().map(|t| t.genus).sum();
        let edges = g as i64 - 1 + types.len() as i64 - vg as i64;
        if edges < types.len() as i64 - 1 {
            continue;
        }
        let half: u32 = types.iter().map(|t| t.valence).sum();
        if half as usize > budget.max_half_edges {
            return Err(Error::Resource(format!("type ({}, {}) needs {} half-edges", g, n, half)));
        }
        for legs in leg_distributions(&types, n) {
            seeds.push((types.clone(), legs));
        }
    }
    let total = AtomicUsize::new(0);
    let found: Vec<BTreeMap<CanonicalKey, (StableGraph, u128)>> = seeds
        .par_iter()
        .map(|(types, legs)| {
            let v = types.len();
            let rem: Vec<u32> = types.iter().zip(legs).map(|(t, l)| t.valence - l).collect();
            let mut s = MatrixSearch {
                types,
                legs,
                v,
                mat: vec![vec![0; v]; v],
                rem,
                out: BTreeMap::new(),
                total: &total,
                cap: budget.max_classes,
                failed: None,
            };
            s.row(0);
            match s.failed {
                Some(e) => Err(e),
                None => Ok(s.out),
            }
        })
        .collect::<Result<_>>()?;
    // Distinct seeds give non-isomorphic graphs, so the maps are disjoint.
    let mut out = BTreeMap::new();
    for m in found {
        out.extend(m);
    }
    Ok(out)
}

/// Possibly disconnected graphs: multisets of connected classes whose genera
/// and legs add up.
fn disconnected(
    g: u32,
    n: u32,
    opts: EnumOptions,
    leg_counts: Option<&[u32]>,
    budget: &Budget,
) -> Result<BTreeMap<CanonicalKey, (StableGraph, u128)>> {
    if leg_counts.is_some() {
        return Err(Error::UnsupportedInput("leg counts apply to connected enumeration".into()));
    }
    let conn = EnumOptions { connected: true, ..opts };
    // Component types (g_i, n_i) in the stable range.
    let mut types = Vec::new();
    for gi in 0..=g {
        for ni in 0..=n {
            if 2 * gi as i64 - 2 + ni as i64 > 0 {
                types.push((gi, ni));
            }
        }
    }
    let mut pools: BTreeMap<(u32, u32), Vec<(CanonicalKey, StableGraph, u128)>> = BTreeMap::new();
    for &(gi, ni) in &types {
        let m = enumerate_keyed(gi, ni, conn, None, budget)?;
        pools.insert((gi, ni), m.into_iter().map(|(k, (gr, a))| (k, gr, a)).collect());
    }
    // Flatten into one ordered list of classes, then pick multisets.
    let flat: Vec<((u32, u32), &StableGraph)> =
        types.iter().flat_map(|t| pools[t].iter().map(move |(_, gr, _)| (*t, gr))).collect();
    let mut out = BTreeMap::new();
    let mut pick: Vec<usize> = Vec::new();
    fn rec(
        flat: &[((u32, u32), &StableGraph)],
        start: usize,
        g_left: u32,
        n_left: u32,
        pick: &mut Vec<usize>,
        out: &mut BTreeMap<CanonicalKey, (StableGraph, u128)>,
        cap: usize,
    ) -> Result<()> {
        if g_left == 0 && n_left == 0 && !pick.is_empty() {
            let mut gr = StableGraph::empty();
            for &i in pick.iter() {
                gr = gr.disjoint_union(flat[i].1);
            }
            let (k, a) = canonicalize(&gr)?;
            out.insert(k, (gr, a));
            if out.len() > cap {
                return Err(Error::Resource("too many classes".into()));
            }
            return Ok(());
        }
        for i in start..flat.len() {
            let (gi, ni) = flat[i].0;
            if gi <= g_left && ni <= n_left {
                pick.push(i);
                rec(flat, i, g_left - gi, n_left - ni, pick, out, cap)?;
                pick.pop();
            }
        }
        Ok(())
    }
    rec(&flat, 0, g, n, &mut pick, &mut out, budget.max_classes)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, Rational};

    fn inverse_aut_sum(c: &Classes) -> Rational {
        c.iter().map(|(_, a)| Rational::new(1.into(), (*a).into())).sum()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_stable(1, 1, EnumOptions::default()).unwrap().len(), 2);
        assert_eq!(enumerate_stable(2, 0, EnumOptions::default()).unwrap().len(), 7);
        assert_eq!(enumerate_stable(0, 3, EnumOptions::default()).unwrap().len(), 1);
        assert_eq!(enumerate_stable(0, 4, EnumOptions::default()).unwrap().len(), 2);
    }

    #[test]
    fn genus_zero_vertices_only() {
        let opts = EnumOptions { genus_zero_only: true, ..EnumOptions::default() };
        let c = enumerate_stable(2, 0, opts).unwrap();
        // Two loops at one vertex, the dumbbell and the theta graph.
        assert_eq!(c.len(), 3);
        let trivalent: Classes = c.into_iter().filter(|(g, _)| g.num_vertices() == 2).collect();
        assert_eq!(trivalent.len(), 2);
        assert_eq!(inverse_aut_sum(&trivalent), rat(5, 24));
    }

    #[test]
    fn unstable_range_rejected() {
        assert!(enumerate_stable(1, 0, EnumOptions::default()).is_err());
        assert!(enumerate_stable(0, 2, EnumOptions::default()).is_err());
    }

    #[test]
    fn one_label_matches_unlabelled() {
        let a = enumerate_labelled_by_legs(1, &[2]).unwrap();
        let b = enumerate_stable(1, 2, EnumOptions::default()).unwrap();
        assert_eq!(a.len(), b.len());
        assert_eq!(inverse_aut_sum(&a), inverse_aut_sum(&b));
    }
}
