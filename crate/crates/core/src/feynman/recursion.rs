use crate::algebra::{integrate_kappa, rat, Atom, Derivation, GradedFreeEnergy, Poly};
use crate::error::{Error, Result};

use super::context::FeynmanContext;
use super::realize::{covariant_from_gradient, gradient, realized_free_energy_raw, wf1_t_derivative};

/// Right-hand side of the one-label quadratic recursion,
/// 1/2 (D_t d_t Ŵ_{g-1} + sum_{r=1}^{g-1} d_tŴ_r d_tŴ_{g-r}), from the
/// t-derivatives of the lower genera (index r holds d_tŴ_r).
pub fn recursion_rhs(dw: &[Poly], ctx: &FeynmanContext, g: usize) -> Poly {
    let mut rhs = covariant_from_gradient(&dw[g - 1..g], ctx, 1, 1);
    for r in 1..g {
        rhs += &dw[r] * &dw[g - r];
    }
    rhs.scale(&rat(1, 2))
}

/// Solve the one-label recursion for Ŵ_2..Ŵ_{g_max}: integrate the
/// right-hand side in kappa with integration constant F_g. The vertex rule
/// of the context is applied to the result.
pub fn recursion_solve(g_max: u32, ctx: &FeynmanContext) -> Result<GradedFreeEnergy> {
    if ctx.n_labels() != 1 {
        return Err(Error::UnsupportedInput("recursion_solve needs a one-label context".into()));
    }
    if g_max < 2 {
        return Err(Error::Domain(format!("g_max must be at least 2, got {}", g_max)));
    }
    let raw = solve_raw(g_max, ctx)?;
    let mut out = GradedFreeEnergy::new();
    for (g, p) in raw.iter() {
        out.insert(g, ctx.specialize(p)?);
    }
    Ok(out)
}

fn solve_raw(g_max: u32, ctx: &FeynmanContext) -> Result<GradedFreeEnergy> {
    let k = Atom::scalar_kappa();
    let mut dw = vec![Poly::zero(), wf1_t_derivative(ctx, 1)];
    let mut out = GradedFreeEnergy::new();
    for g in 2..=g_max as usize {
        let rhs = recursion_rhs(&dw, ctx, g);
        let w = integrate_kappa(&rhs, &k, &Poly::atom(Atom::f(g as u32, 0)))?;
        dw.push(ctx.dt(&w, 1));
        out.insert(g as u32, w);
    }
    Ok(out)
}

/// Checks the labelled recursion on the graph-sum free energies:
/// d Ŵ_g / d kappa_ij = [1/2 if i = j] (D_i d_j Ŵ_{g-1} + sum d_iŴ_r d_jŴ_{g-r}).
pub fn verify_recursion_n(g: u32, ctx: &FeynmanContext, i: u32, j: u32) -> Result<bool> {
    let n = ctx.n_labels();
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::Domain(format!("labels ({}, {}) outside 1..={}", i, j, n)));
    }
    if g < 2 {
        return Err(Error::Domain(format!("recursion needs g >= 2, got {}", g)));
    }
    let mut grads: Vec<Vec<Poly>> = vec![Vec::new(), (1..=n).map(|l| wf1_t_derivative(ctx, l)).collect()];
    for r in 2..g {
        grads.push(gradient(&realized_free_energy_raw(r, ctx)?, ctx));
    }
    let w = realized_free_energy_raw(g, ctx)?;
    let lhs = Derivation::partial(ctx.kappa(i, j)).apply(&w);
    let mut rhs = covariant_from_gradient(&grads[g as usize - 1], ctx, i, j);
    for r in 1..g as usize {
        rhs += &grads[r][i as usize - 1] * &grads[g as usize - r][j as usize - 1];
    }
    if i == j {
        rhs = rhs.scale(&rat(1, 2));
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;
    use crate::feynman::realize::{covariant_second, realized_free_energy};

    #[test]
    fn genus_one_covariant() {
        let ctx = FeynmanContext::new(1).unwrap();
        let dw1 = wf1_t_derivative(&ctx, 1);
        assert_eq!(dw1, parse_poly("F1' + 1/2*k*F0'''", 1).unwrap());
        let d2 = covariant_from_gradient(std::slice::from_ref(&dw1), &ctx, 1, 1);
        let expected = parse_poly("F1'' + k*(1/2*F0'''' + F1'*F0''') + k^2*F0'''^2", 1).unwrap();
        assert_eq!(d2, expected);
        let w2 = realized_free_energy(2, &ctx).unwrap();
        let lhs = w2.partial(&Atom::scalar_kappa());
        assert_eq!(lhs, (&d2 + &(&dw1 * &dw1)).scale(&rat(1, 2)));
        let dtw2 = parse_poly(
            "F2' + k*(1/2*F1''' + F1'*F1'') + k^2*(1/8*F0''''' + 1/2*F1'*F0'''' + 1/2*F1'^2*F0''' + F1''*F0''') \
             + k^3*(F1'*F0'''^2 + 2/3*F0'''*F0'''') + 5/8*k^4*F0'''^3",
            1,
        )
        .unwrap();
        assert_eq!(ctx.dt(&w2, 1), dtw2);
        assert!(covariant_second(&Poly::constant(rat(3, 1)), &ctx, 1, 1).is_zero());
    }

    #[test]
    fn solver_matches_graph_sum() {
        let ctx = FeynmanContext::new(1).unwrap();
        let solved = recursion_solve(3, &ctx).unwrap();
        for g in 2..=3 {
            assert_eq!(solved.get(g).unwrap(), &realized_free_energy(g, &ctx).unwrap());
        }
    }

    #[test]
    fn labelled_recursion_genus_two() {
        let ctx = FeynmanContext::new(2).unwrap();
        for (i, j) in [(1, 1), (1, 2), (2, 2)] {
            assert!(verify_recursion_n(2, &ctx, i, j).unwrap());
        }
        assert!(verify_recursion_n(2, &ctx, 3, 1).is_err());
    }
}
