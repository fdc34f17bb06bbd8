use serde_json::{json, Value};

use crate::error::{Error, Result};

/// A stable graph given by its half-edge structure.
///
/// Half-edges are numbered `0..owner.len()`. Each is either one side of an
/// internal edge (`pairs`) or an external leg (`legs`). Labels are stored per
/// half-edge; label 0 means unlabelled, labelled graphs use `1..=N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableGraph {
    genera: Vec<u32>,
    owner: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    legs: Vec<usize>,
    labels: Vec<u32>,
}

impl StableGraph {
    /// Build from raw half-edge data, checking that pairs and legs partition
    /// the half-edges.
    pub fn new(
        genera: Vec<u32>,
        owner: Vec<usize>,
        pairs: Vec<(usize, usize)>,
        legs: Vec<usize>,
        labels: Option<Vec<u32>>,
    ) -> Result<StableGraph> {
        let h = owner.len();
        if owner.iter().any(|&v| v >= genera.len()) {
            return Err(Error::Domain("half-edge owned by a missing vertex".into()));
        }
        let mut seen = vec![false; h];
        for &x in pairs.iter().flat_map(|(a, b)| [a, b]).chain(legs.iter()) {
            if x >= h || seen[x] {
                return Err(Error::Domain("half-edges must be partitioned by pairs and legs".into()));
            }
            seen[x] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Domain("unused half-edge".into()));
        }
        let labels = labels.unwrap_or_else(|| vec![0; h]);
        if labels.len() != h {
            return Err(Error::Domain("one label per half-edge required".into()));
        }
        Ok(StableGraph { genera, owner, pairs, legs, labels })
    }

    /// Unlabelled graph from vertex genera, edges as vertex pairs (loops
    /// repeat the index) and the vertex of each leg.
    pub fn from_edges(genera: &[u32], edges: &[(usize, usize)], legs: &[usize]) -> Result<StableGraph> {
        let e: Vec<((usize, u32), (usize, u32))> = edges.iter().map(|&(u, v)| ((u, 0), (v, 0))).collect();
        let l: Vec<(usize, u32)> = legs.iter().map(|&v| (v, 0)).collect();
        StableGraph::from_labelled_edges(genera, &e, &l)
    }

    /// Graph with a label on every half-edge: each edge is
    /// `((u, label at u), (v, label at v))`, each leg `(v, label)`.
    pub fn from_labelled_edges(
        genera: &[u32],
        edges: &[((usize, u32), (usize, u32))],
        legs: &[(usize, u32)],
    ) -> Result<StableGraph> {
        let mut owner = Vec::new();
        let mut labels = Vec::new();
        let mut pairs = Vec::new();
        let mut leg_ids = Vec::new();
        for &((u, a), (v, b)) in edges {
            owner.push(u);
            labels.push(a);
            owner.push(v);
            labels.push(b);
            pairs.push((owner.len() - 2, owner.len() - 1));
        }
        for &(v, a) in legs {
            owner.push(v);
            labels.push(a);
            leg_ids.push(owner.len() - 1);
        }
        StableGraph::new(genera.to_vec(), owner, pairs, leg_ids, Some(labels))
    }

    /// The graph with no vertices.
    pub fn empty() -> StableGraph {
        StableGraph { genera: vec![], owner: vec![], pairs: vec![], legs: vec![], labels: vec![] }
    }

    pub fn genera(&self) -> &[u32] {
        &self.genera
    }

    pub fn owners(&self) -> &[usize] {
        &self.owner
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, h: usize) -> u32 {
        self.labels[h]
    }

    pub fn owner(&self, h: usize) -> usize {
        self.owner[h]
    }

    pub fn num_vertices(&self) -> usize {
        self.genera.len()
    }

    pub fn num_half_edges(&self) -> usize {
        self.owner.len()
    }

    pub fn num_edges(&self) -> usize {
        self.pairs.len()
    }

    pub fn num_legs(&self) -> usize {
        self.legs.len()
    }

    pub fn is_labelled(&self) -> bool {
        self.labels.iter().any(|&l| l != 0)
    }

    pub fn valence(&self, v: usize) -> usize {
        self.owner.iter().filter(|&&o| o == v).count()
    }

    /// Valence split by label: entry `j - 1` counts half-edges labelled `j`.
    /// Unlabelled half-edges count in the single entry of a one-label vector.
    pub fn valence_by_label(&self, v: usize, n_labels: usize) -> Vec<u32> {
        let mut out = vec![0u32; n_labels.max(1)];
        for (h, &o) in self.owner.iter().enumerate() {
            if o == v {
                let l = self.labels[h] as usize;
                let top = out.len() - 1;
                out[l.saturating_sub(1).min(top)] += 1;
            }
        }
        out
    }

    pub fn leg_label_counts(&self, n_labels: usize) -> Vec<u32> {
        let mut out = vec![0u32; n_labels.max(1)];
        for &h in &self.legs {
            let l = self.labels[h] as usize;
            let top = out.len() - 1;
            out[l.saturating_sub(1).min(top)] += 1;
        }
        out
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for &(a, b) in &self.pairs {
            let (ra, rb) = (find(&mut parent, self.owner[a]), find(&mut parent, self.owner[b]));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut index = vec![usize::MAX; n];
        for v in 0..n {
            let r = find(&mut parent, v);
            if index[r] == usize::MAX {
                index[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[index[r]].push(v);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// First Betti number plus the vertex genera.
    pub fn genus(&self) -> i64 {
        self.num_edges() as i64 - self.num_vertices() as i64
            + self.components().len() as i64
            + self.genera.iter().map(|&g| g as i64).sum::<i64>()
    }

    pub fn is_stable(&self) -> bool {
        (0..self.num_vertices()).all(|v| {
            let val = self.valence(v);
            match self.genera[v] {
                0 => val >= 3,
                1 => val >= 1,
                _ => true,
            }
        })
    }

    /// For each internal edge: the edge index and the labels at both ends.
    pub fn edge_label_pair(&self, e: usize) -> (u32, u32) {
        let (a, b) = self.pairs[e];
        (self.labels[a], self.labels[b])
    }

    /// The subgraph spanned by a set of vertices (which must be a union of
    /// components), renumbered.
    pub fn induced(&self, vertices: &[usize]) -> StableGraph {
        let mut vmap = vec![usize::MAX; self.num_vertices()];
        for (i, &v) in vertices.iter().enumerate() {
            vmap[v] = i;
        }
        let mut hmap = vec![usize::MAX; self.num_half_edges()];
        let mut owner = Vec::new();
        let mut labels = Vec::new();
        for h in 0..self.num_half_edges() {
            if vmap[self.owner[h]] != usize::MAX {
                hmap[h] = owner.len();
                owner.push(vmap[self.owner[h]]);
                labels.push(self.labels[h]);
            }
        }
        let pairs =
            self.pairs.iter().filter(|(a, _)| hmap[*a] != usize::MAX).map(|&(a, b)| (hmap[a], hmap[b])).collect();
        let legs = self.legs.iter().filter(|&&h| hmap[h] != usize::MAX).map(|&h| hmap[h]).collect();
        StableGraph { genera: vertices.iter().map(|&v| self.genera[v]).collect(), owner, pairs, legs, labels }
    }

    pub fn disjoint_union(&self, other: &StableGraph) -> StableGraph {
        let (nv, nh) = (self.num_vertices(), self.num_half_edges());
        let mut g = self.clone();
        g.genera.extend_from_slice(&other.genera);
        g.owner.extend(other.owner.iter().map(|v| v + nv));
        g.pairs.extend(other.pairs.iter().map(|(a, b)| (a + nh, b + nh)));
        g.legs.extend(other.legs.iter().map(|h| h + nh));
        g.labels.extend_from_slice(&other.labels);
        g
    }

    /// Cut internal edge `e`; both half-edges become legs.
    pub fn cut_edge(&self, e: usize) -> StableGraph {
        let mut g = self.clone();
        let (a, b) = g.pairs.remove(e);
        g.legs.push(a);
        g.legs.push(b);
        g
    }

    /// Attach a new leg with the given label to vertex `v`.
    pub fn add_leg(&self, v: usize, label: u32) -> StableGraph {
        let mut g = self.clone();
        g.owner.push(v);
        g.labels.push(label);
        g.legs.push(g.owner.len() - 1);
        g
    }

    /// Break internal edge `e = (h1, h2)` with a new genus-0 vertex `w`:
    /// `h1` is joined to a half-edge of `w` labelled `near`, `h2` to one
    /// labelled `far`, and `w` gets a new leg labelled `leg`.
    pub fn insert_on_edge(&self, e: usize, leg: u32, near: u32, far: u32) -> StableGraph {
        let mut g = self.clone();
        let (h1, h2) = g.pairs[e];
        let w = g.genera.len();
        g.genera.push(0);
        let base = g.owner.len();
        g.owner.extend([w, w, w]);
        g.labels.extend([near, far, leg]);
        g.pairs[e] = (h1, base);
        g.pairs.push((base + 1, h2));
        g.legs.push(base + 2);
        g
    }

    /// Replace leg number `leg_index` by an edge to a new genus-0 vertex
    /// carrying two legs labelled `moved` and `fresh`. The old leg's
    /// half-edge is relabelled `inner` and the new vertex's side `outer`.
    pub fn graft_on_leg(&self, leg_index: usize, inner: u32, outer: u32, moved: u32, fresh: u32) -> StableGraph {
        let mut g = self.clone();
        let h = g.legs.remove(leg_index);
        g.labels[h] = inner;
        let w = g.genera.len();
        g.genera.push(0);
        let base = g.owner.len();
        g.owner.extend([w, w, w]);
        g.labels.extend([outer, moved, fresh]);
        g.pairs.push((h, base));
        g.legs.push(base + 1);
        g.legs.push(base + 2);
        g
    }

    /// Same graph with all half-edge labels set by a function of the old ones.
    pub fn map_labels(&self, f: impl Fn(usize, u32) -> u32) -> StableGraph {
        let mut g = self.clone();
        g.labels = self.labels.iter().enumerate().map(|(h, &l)| f(h, l)).collect();
        g
    }

    /// Renumber vertices by `vperm[old] = new` and half-edges by `hperm`.
    pub fn permuted(&self, vperm: &[usize], hperm: &[usize]) -> StableGraph {
        let mut genera = vec![0; self.num_vertices()];
        for (v, &nv) in vperm.iter().enumerate() {
            genera[nv] = self.genera[v];
        }
        let mut owner = vec![0; self.num_half_edges()];
        let mut labels = vec![0; self.num_half_edges()];
        for (h, &nh) in hperm.iter().enumerate() {
            owner[nh] = vperm[self.owner[h]];
            labels[nh] = self.labels[h];
        }
        StableGraph {
            genera,
            owner,
            pairs: self.pairs.iter().map(|&(a, b)| (hperm[b], hperm[a])).collect(),
            legs: self.legs.iter().rev().map(|&h| hperm[h]).collect(),
            labels,
        }
    }

    pub fn to_json(&self) -> Value {
        let vertices: Vec<Value> = self.genera.iter().map(|g| json!({ "genus": g })).collect();
        let edges: Vec<Value> = self.pairs.iter().map(|&(a, b)| json!([self.owner[a], self.owner[b]])).collect();
        let legs: Vec<Value> = self.legs.iter().map(|&h| json!(self.owner[h])).collect();
        let mut obj = json!({ "vertices": vertices, "edges": edges, "legs": legs });
        if self.is_labelled() {
            obj["edgeLabels"] = self.pairs.iter().map(|&(a, b)| json!([self.labels[a], self.labels[b]])).collect();
            obj["legLabels"] = self.legs.iter().map(|&h| json!(self.labels[h])).collect();
        }
        obj
    }

    pub fn from_json(v: &Value) -> Result<StableGraph> {
        let bad = |what: &str| Error::Parse(format!("graph JSON: {}", what));
        let as_usize = |x: &Value| x.as_u64().map(|n| n as usize).ok_or_else(|| bad("expected index"));
        let genera: Vec<u32> = v
            .get("vertices")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing vertices"))?
            .iter()
            .map(|x| x.get("genus").and_then(Value::as_u64).map(|g| g as u32).ok_or_else(|| bad("vertex genus")))
            .collect::<Result<_>>()?;
        let empty = Vec::new();
        let edges = v.get("edges").and_then(Value::as_array).unwrap_or(&empty);
        let legs = v.get("legs").and_then(Value::as_array).unwrap_or(&empty);
        let edge_labels = v.get("edgeLabels").and_then(Value::as_array);
        let leg_labels = v.get("legLabels").and_then(Value::as_array);
        let mut e = Vec::new();
        for (i, x) in edges.iter().enumerate() {
            let pair = x.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("edge must be a pair"))?;
            let (a, b) = match edge_labels {
                Some(ls) => {
                    let p = ls
                        .get(i)
                        .and_then(Value::as_array)
                        .filter(|p| p.len() == 2)
                        .ok_or_else(|| bad("edge label"))?;
                    (as_usize(&p[0])? as u32, as_usize(&p[1])? as u32)
                }
                None => (0, 0),
            };
            e.push(((as_usize(&pair[0])?, a), (as_usize(&pair[1])?, b)));
        }
        let mut l = Vec::new();
        for (i, x) in legs.iter().enumerate() {
            let a = match leg_labels {
                Some(ls) => as_usize(ls.get(i).ok_or_else(|| bad("leg label"))?)? as u32,
                None => 0,
            };
            l.push((as_usize(x)?, a));
        }
        StableGraph::from_labelled_edges(&genera, &e, &l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_examples() {
        let lone = StableGraph::from_edges(&[2], &[], &[]).unwrap();
        assert_eq!(lone.genus(), 2);
        assert!(lone.is_stable());
        let two_loops = StableGraph::from_edges(&[0], &[(0, 0), (0, 0)], &[]).unwrap();
        assert_eq!(two_loops.genus(), 2);
        let theta = StableGraph::from_edges(&[0, 0], &[(0, 1), (0, 1), (0, 1)], &[]).unwrap();
        assert_eq!(theta.genus(), 2);
    }

    #[test]
    fn stability_thresholds() {
        assert!(!StableGraph::from_edges(&[0], &[], &[0, 0]).unwrap().is_stable());
        assert!(StableGraph::from_edges(&[1], &[], &[0]).unwrap().is_stable());
        assert!(StableGraph::from_edges(&[2], &[], &[]).unwrap().is_stable());
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"vertices":[{"genus":0},{"genus":1}],"edges":[[0,1],[0,0]],"legs":[0],"edgeLabels":[[1,2],[1,1]],"legLabels":[1]}"#;
        let v: Value = serde_json::from_str(text).unwrap();
        let g = StableGraph::from_json(&v).unwrap();
        assert_eq!(g.to_json(), v);
        assert_eq!(g.genus(), 2);
    }
}
