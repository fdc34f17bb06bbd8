use rayon::prelude::*;

use crate::algebra::{int, rat, Atom, Derivation, Monomial, Poly, Rational};
use crate::calculus::{abstract_free_energy, GraphSum};
use crate::error::{Error, Result};
use crate::graphs::StableGraph;

use super::context::FeynmanContext;

/// Product of the vertex symbols and propagators of a graph, before any
/// vertex rule is applied.
pub(crate) fn raw_weight(g: &StableGraph, ctx: &FeynmanContext) -> Result<Poly> {
    let n = ctx.n_labels();
    let mut m = Monomial::one();
    for v in 0..g.num_vertices() {
        let val = if n == 1 { vec![g.valence(v) as u32] } else { g.valence_by_label(v, n as usize) };
        m = m.mul(&Monomial::var(ctx.vertex(g.genera()[v], &val)));
    }
    for e in 0..g.num_edges() {
        let (a, b) = g.edge_label_pair(e);
        if n > 1 && (a == 0 || b == 0 || a > n || b > n) {
            return Err(Error::Domain(format!("edge labels ({}, {}) outside 1..={}", a, b, n)));
        }
        m = m.mul(&Monomial::var(ctx.kappa(a, b)));
    }
    Ok(Poly::term(m, int(1)))
}

/// The Feynman weight of a graph: vertex weights times propagators.
pub fn feynman_weight(g: &StableGraph, ctx: &FeynmanContext) -> Result<Poly> {
    ctx.specialize(&raw_weight(g, ctx)?)
}

/// Realization of a graph sum, term by term.
pub fn realize_sum(s: &GraphSum, ctx: &FeynmanContext) -> Result<Poly> {
    let parts: Result<Vec<Poly>> =
        s.iter().collect::<Vec<_>>().par_iter().map(|(_, g, c)| Ok(raw_weight(g, ctx)?.scale(c))).collect();
    let mut out = Poly::zero();
    for p in parts? {
        out += p;
    }
    Ok(out)
}

/// Ŵ_g for g >= 2: the sum of 1/|Aut| times the weight over connected
/// graphs of genus g without legs.
pub fn realized_free_energy(g: u32, ctx: &FeynmanContext) -> Result<Poly> {
    ctx.specialize(&realized_free_energy_raw(g, ctx)?)
}

pub(crate) fn realized_free_energy_raw(g: u32, ctx: &FeynmanContext) -> Result<Poly> {
    if g < 2 {
        return Err(Error::Domain(format!("realized free energy needs g >= 2, got {}", g)));
    }
    realize_sum(&abstract_free_energy(g, 0, ctx.n_labels())?, ctx)
}

/// d/dt_i of Ŵ_1 = F_1 + 1/2 log det kappa, i.e.
/// F_1^{(e_i)} + 1/2 sum_{l,m} kappa_lm F_0^{(e_i+e_l+e_m)}.
pub fn wf1_t_derivative(ctx: &FeynmanContext, i: u32) -> Poly {
    let n = ctx.n_labels();
    let mut out = Poly::atom(ctx.vertex_at(1, &[i]));
    for l in 1..=n {
        for m in 1..=n {
            let mono = Monomial::var(ctx.kappa(l, m)).mul(&Monomial::var(ctx.vertex_at(0, &[i, l, m])));
            out.add_term(mono, rat(1, 2));
        }
    }
    out
}

/// D_{t_i} applied to a gradient: d_i grad_j + sum_{l,m} grad_l kappa_lm F_0^{(e_m+e_i+e_j)}.
pub fn covariant_from_gradient(grad: &[Poly], ctx: &FeynmanContext, i: u32, j: u32) -> Poly {
    let n = ctx.n_labels();
    let mut out = ctx.dt(&grad[j as usize - 1], i);
    for l in 1..=n {
        for m in 1..=n {
            let f = Monomial::var(ctx.kappa(l, m)).mul(&Monomial::var(ctx.vertex_at(0, &[m, i, j])));
            out += grad[l as usize - 1].mul_monomial(&f);
        }
    }
    out
}

pub fn gradient(p: &Poly, ctx: &FeynmanContext) -> Vec<Poly> {
    (1..=ctx.n_labels()).map(|i| ctx.dt(p, i)).collect()
}

/// D_{t_i} d_{t_j} p.
pub fn covariant_second(p: &Poly, ctx: &FeynmanContext, i: u32, j: u32) -> Poly {
    covariant_from_gradient(&gradient(p, ctx), ctx, i, j)
}

/// Checks that cutting, attaching and grafting are realized by d/dkappa,
/// d/dt and multiplication by (#legs) kappa F_0''' on every connected graph
/// of genus `g` with at most `max_legs` legs. With several labels only the
/// cutting and attaching operators are checked, label by label.
pub fn verify_operator_realization(g: u32, max_legs: u32, ctx: &FeynmanContext) -> Result<bool> {
    use crate::calculus::{op_attach, op_attach_i, op_cut, op_cut_ij, op_glue_leg};
    let n = ctx.n_labels();
    for legs in 0..=max_legs {
        if 2 * g as i64 - 2 + legs as i64 <= 0 {
            continue;
        }
        let sum = abstract_free_energy(g, legs, n)?;
        for (_, graph, _) in sum.iter() {
            let single = GraphSum::graph(graph)?;
            let w = raw_weight(graph, ctx)?;
            if n == 1 {
                let k = Atom::scalar_kappa();
                if realize_sum(&op_cut(&single)?, ctx)? != w.partial(&k) {
                    return Ok(false);
                }
                if realize_sum(&op_attach(&single)?, ctx)? != ctx.dt(&w, 1) {
                    return Ok(false);
                }
                let glue = w.mul_monomial(&Monomial::from_pairs(vec![(k, 1), (Atom::f(0, 3), 1)]));
                let expected = glue.scale(&Rational::from_integer((graph.num_legs() as i64).into()));
                if realize_sum(&op_glue_leg(&single)?, ctx)? != expected {
                    return Ok(false);
                }
            } else {
                for i in 1..=n {
                    if realize_sum(&op_attach_i(&single, i, n)?, ctx)? != ctx.dt(&w, i) {
                        return Ok(false);
                    }
                    for j in i..=n {
                        let d = Derivation::partial(ctx.kappa(i, j));
                        if realize_sum(&op_cut_ij(&single, i, j, n)?, ctx)? != d.apply(&w) {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    #[test]
    fn weights() {
        let ctx = FeynmanContext::new(1).unwrap();
        let theta = StableGraph::from_edges(&[0, 0], &[(0, 1), (0, 1), (0, 1)], &[]).unwrap();
        assert_eq!(feynman_weight(&theta, &ctx).unwrap(), parse_poly("F0'''^2*k^3", 1).unwrap());
        let ctx2 = FeynmanContext::new(2).unwrap();
        let g = StableGraph::from_labelled_edges(&[1, 1], &[((0, 1), (1, 2))], &[]).unwrap();
        assert_eq!(feynman_weight(&g, &ctx2).unwrap(), parse_poly("F1_1_0*F1_0_1*k12", 2).unwrap());
    }

    #[test]
    fn genus_two() {
        let ctx = FeynmanContext::new(1).unwrap();
        let w2 = realized_free_energy(2, &ctx).unwrap();
        let expected =
            parse_poly("F2 + k*(1/2*F1'' + 1/2*F1'^2) + k^2*(1/8*F0'''' + 1/2*F1'*F0''') + 5/24*k^3*F0'''^2", 1)
                .unwrap();
        assert_eq!(w2, expected);
        assert!(realized_free_energy(1, &ctx).is_err());
    }

    #[test]
    fn covariant_symmetric() {
        let ctx = FeynmanContext::new(2).unwrap();
        let p = parse_poly("F1_1_0*k12 + F0_2_1*F1_0_1*k11^2 + F2_0_0", 2).unwrap();
        assert_eq!(covariant_second(&p, &ctx, 1, 2), covariant_second(&p, &ctx, 2, 1));
        let grad = [wf1_t_derivative(&ctx, 1), wf1_t_derivative(&ctx, 2)];
        assert_eq!(covariant_from_gradient(&grad, &ctx, 1, 2), covariant_from_gradient(&grad, &ctx, 2, 1));
    }

    #[test]
    fn operators_realized() {
        assert!(verify_operator_realization(2, 2, &FeynmanContext::new(1).unwrap()).unwrap());
        assert!(verify_operator_realization(1, 2, &FeynmanContext::new(2).unwrap()).unwrap());
    }
}
