//! The operators K (cut an edge), ∂ (add a leg), γ (graft a leg) and
//! D = ∂ + γ, with their labelled versions.
//!
//! Every operator emits raw graphs from concrete representatives and lets
//! canonical deduplication add up the coefficients.

use rayon::prelude::*;

use super::graphsum::GraphSum;
use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::graphs::{canonicalize, CanonicalKey, StableGraph};

fn emit<F>(s: &GraphSum, f: F) -> Result<GraphSum>
where
    F: Fn(&StableGraph, &mut Vec<StableGraph>) + Sync,
{
    let terms: Vec<(&StableGraph, &Rational)> = s.iter().map(|(_, g, c)| (g, c)).collect();
    let produced: Vec<Vec<(CanonicalKey, StableGraph, Rational)>> = terms
        .par_iter()
        .map(|(g, c)| {
            let mut raw = Vec::new();
            f(g, &mut raw);
            raw.into_iter().map(|r| Ok((canonicalize(&r)?.0, r, (*c).clone()))).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut out = GraphSum::zero();
    for list in produced {
        for (k, g, c) in list {
            out.add_keyed(k, g, c);
        }
    }
    Ok(out)
}

fn check_label(i: u32, n_labels: u32) -> Result<()> {
    if i == 0 || i > n_labels {
        return Err(Error::Domain(format!("label {} outside 1..={}", i, n_labels)));
    }
    Ok(())
}

fn cut_where(s: &GraphSum, keep: impl Fn(u32, u32) -> bool + Sync) -> Result<GraphSum> {
    emit(s, |g, out| {
        for e in 0..g.num_edges() {
            let (a, b) = g.edge_label_pair(e);
            if keep(a, b) {
                out.push(g.cut_edge(e));
            }
        }
    })
}

fn attach(s: &GraphSum, leg: u32, internal: &[u32]) -> Result<GraphSum> {
    emit(s, |g, out| {
        for v in 0..g.num_vertices() {
            out.push(g.add_leg(v, leg));
        }
        for e in 0..g.num_edges() {
            for &near in internal {
                for &far in internal {
                    out.push(g.insert_on_edge(e, leg, near, far));
                }
            }
        }
    })
}

fn glue(s: &GraphSum, fresh: u32, internal: &[u32]) -> Result<GraphSum> {
    emit(s, |g, out| {
        for li in 0..g.num_legs() {
            let moved = g.label(g.legs()[li]);
            for &inner in internal {
                for &outer in internal {
                    out.push(g.graft_on_leg(li, inner, outer, moved, fresh));
                }
            }
        }
    })
}

/// K: sum over internal edges of the graph with that edge cut.
pub fn op_cut(s: &GraphSum) -> Result<GraphSum> {
    cut_where(s, |_, _| true)
}

/// ∂: add a leg at every vertex, or on every edge through a new
/// trivalent genus-0 vertex.
pub fn op_attach(s: &GraphSum) -> Result<GraphSum> {
    attach(s, 0, &[0])
}

/// γ: replace every leg by an edge to a new genus-0 vertex with two legs.
pub fn op_glue_leg(s: &GraphSum) -> Result<GraphSum> {
    glue(s, 0, &[0])
}

pub fn op_d(s: &GraphSum) -> Result<GraphSum> {
    Ok(op_attach(s)?.add(&op_glue_leg(s)?))
}

/// K_ij: cut the edges whose label multiset is {i, j}.
pub fn op_cut_ij(s: &GraphSum, i: u32, j: u32, n_labels: u32) -> Result<GraphSum> {
    check_label(i, n_labels)?;
    check_label(j, n_labels)?;
    cut_where(s, |a, b| (a == i && b == j) || (a == j && b == i))
}

/// ∂_i: the new leg is labelled i; inserted vertices take every pair of
/// internal labels.
pub fn op_attach_i(s: &GraphSum, i: u32, n_labels: u32) -> Result<GraphSum> {
    check_label(i, n_labels)?;
    let internal: Vec<u32> = (1..=n_labels).collect();
    attach(s, i, &internal)
}

/// γ_i: the grafted vertex carries the old leg's label and a new leg
/// labelled i; both ends of the new edge take every label.
pub fn op_glue_i(s: &GraphSum, i: u32, n_labels: u32) -> Result<GraphSum> {
    check_label(i, n_labels)?;
    let internal: Vec<u32> = (1..=n_labels).collect();
    glue(s, i, &internal)
}

pub fn op_d_i(s: &GraphSum, i: u32, n_labels: u32) -> Result<GraphSum> {
    Ok(op_attach_i(s, i, n_labels)?.add(&op_glue_i(s, i, n_labels)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn one(g: &StableGraph) -> GraphSum {
        GraphSum::graph(g).unwrap()
    }

    #[test]
    fn cut_examples() {
        let lone = StableGraph::from_edges(&[2], &[], &[]).unwrap();
        assert!(op_cut(&one(&lone)).unwrap().is_zero());
        let theta = StableGraph::from_edges(&[0, 0], &[(0, 1), (0, 1), (0, 1)], &[]).unwrap();
        let cut = op_cut(&one(&theta)).unwrap();
        let expect = StableGraph::from_edges(&[0, 0], &[(0, 1), (0, 1)], &[0, 1]).unwrap();
        assert_eq!(cut, one(&expect).scale(&int(3)));
        let dumbbell = StableGraph::from_edges(&[0, 0], &[(0, 0), (0, 1), (1, 1)], &[]).unwrap();
        let cut = op_cut(&one(&dumbbell)).unwrap();
        let loop_cut = StableGraph::from_edges(&[0, 0], &[(0, 1), (1, 1)], &[0, 0]).unwrap();
        let bridge_cut = StableGraph::from_edges(&[0, 0], &[(0, 0), (1, 1)], &[0, 1]).unwrap();
        assert_eq!(cut, one(&loop_cut).scale(&int(2)).add(&one(&bridge_cut)));
    }

    #[test]
    fn attach_and_glue_examples() {
        let g11 = StableGraph::from_edges(&[1], &[], &[0]).unwrap();
        let g12 = StableGraph::from_edges(&[1], &[], &[0, 0]).unwrap();
        assert_eq!(op_attach(&one(&g11)).unwrap(), one(&g12));
        let grafted = StableGraph::from_edges(&[1, 0], &[(0, 1)], &[1, 1]).unwrap();
        assert_eq!(op_glue_leg(&one(&g11)).unwrap(), one(&grafted));
        let tadpole2 = StableGraph::from_edges(&[0], &[(0, 0)], &[0, 0]).unwrap();
        let expect = StableGraph::from_edges(&[0, 0], &[(0, 0), (0, 1)], &[0, 1, 1]).unwrap();
        assert_eq!(op_glue_leg(&one(&tadpole2)).unwrap(), one(&expect).scale(&int(2)));
        assert!(op_attach(&GraphSum::zero()).unwrap().is_zero());
        let lone = StableGraph::from_edges(&[2], &[], &[]).unwrap();
        assert!(op_glue_leg(&one(&lone)).unwrap().is_zero());
    }

    #[test]
    fn attach_on_dumbbell() {
        let dumbbell = StableGraph::from_edges(&[0, 0], &[(0, 0), (0, 1), (1, 1)], &[]).unwrap();
        let s = op_attach(&one(&dumbbell)).unwrap();
        let end = StableGraph::from_edges(&[0, 0], &[(0, 0), (0, 1), (1, 1)], &[0]).unwrap();
        let on_loop = StableGraph::from_edges(&[0, 0, 0], &[(0, 2), (2, 0), (0, 1), (1, 1)], &[2]).unwrap();
        let on_bridge = StableGraph::from_edges(&[0, 0, 0], &[(0, 0), (0, 2), (2, 1), (1, 1)], &[2]).unwrap();
        let expect = one(&end).scale(&int(2)).add(&one(&on_loop).scale(&int(2))).add(&one(&on_bridge));
        assert_eq!(s, expect);
    }

    #[test]
    fn labelled_cut() {
        let g = StableGraph::from_labelled_edges(&[0, 0], &[((0, 1), (0, 1)), ((0, 1), (1, 2)), ((1, 1), (1, 1))], &[])
            .unwrap();
        let s = one(&g);
        assert!(op_cut_ij(&s, 2, 2, 2).unwrap().is_zero());
        assert_eq!(op_cut_ij(&s, 1, 1, 2).unwrap().len(), 2);
        assert_eq!(op_cut_ij(&s, 1, 2, 2).unwrap().len(), 1);
        assert!(op_cut_ij(&s, 3, 1, 2).is_err());
    }

    #[test]
    fn labelled_attach() {
        let g = StableGraph::from_labelled_edges(&[1], &[], &[(0, 2)]).unwrap();
        let out = op_attach_i(&one(&g), 1, 2).unwrap();
        let expect = StableGraph::from_labelled_edges(&[1], &[], &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(out, one(&expect));
    }
}
