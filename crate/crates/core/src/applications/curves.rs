//! The Airy and Catalan curves as points of 1D gravity: free energies as
//! rational functions of the critical point c, their recursions in c, and
//! the order-by-order expansion of the quantum curve equations.

use std::collections::BTreeMap;

use crate::algebra::rational::factorial;
use crate::algebra::{int, parse_ratfn, rat, substitute, Atom, Poly, Rational, RationalFn};
use crate::error::{Error, Result};

use super::one_d::one_d_recursion;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CurvePreset {
    Airy,
    Catalan,
}

impl CurvePreset {
    pub fn name(&self) -> &'static str {
        match self {
            CurvePreset::Airy => "airy",
            CurvePreset::Catalan => "catalan",
        }
    }

    pub fn parse(s: &str) -> Option<CurvePreset> {
        match s {
            "airy" => Some(CurvePreset::Airy),
            "catalan" => Some(CurvePreset::Catalan),
            _ => None,
        }
    }
}

fn rf(s: &str) -> RationalFn {
    parse_ratfn(s, 1).expect("well-formed literal")
}

fn c() -> RationalFn {
    RationalFn::atom(Atom::CoordC)
}

fn dc(f: &RationalFn) -> RationalFn {
    f.partial(&Atom::CoordC)
}

/// I_k for the preset as a function of c.
pub fn coupling(p: CurvePreset, k: u32) -> RationalFn {
    match p {
        CurvePreset::Airy => match k {
            0 => c(),
            1 => rf("1 - 2 c"),
            2 => RationalFn::constant(int(-2)),
            _ => RationalFn::zero(),
        },
        CurvePreset::Catalan => {
            if k == 0 {
                return c();
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let num = Poly::constant(Rational::from_integer(factorial(k as u64) * sign));
            RationalFn::new(num, Poly::atom(Atom::CoordC).pow(k + 1)).expect("nonzero")
        }
    }
}

/// The propagator 1/(1 - I_1).
pub fn propagator(p: CurvePreset) -> RationalFn {
    RationalFn::one().div(&RationalFn::one().sub(&coupling(p, 1))).expect("nonzero")
}

/// Substitution of kappa and I_1..I_{k_max}.
pub fn substitution(p: CurvePreset, k_max: u32) -> BTreeMap<Atom, RationalFn> {
    let mut m = BTreeMap::new();
    m.insert(Atom::scalar_kappa(), propagator(p));
    for k in 1..=k_max {
        m.insert(Atom::CoordI(k), coupling(p, k));
    }
    m
}

/// d I_k / dc = I_{k+1} for 1 <= k < k_max and d kappa / dc = kappa^2 I_2.
pub fn check_substitution(p: CurvePreset, k_max: u32) -> bool {
    let k = propagator(p);
    if dc(&k) != k.mul(&k).mul(&coupling(p, 2)) {
        return false;
    }
    (1..k_max).all(|j| dc(&coupling(p, j)) == coupling(p, j + 1))
}

/// t as a function of c.
pub fn time(p: CurvePreset) -> RationalFn {
    match p {
        CurvePreset::Airy => rf("c^2"),
        CurvePreset::Catalan => rf("-(c + 1/c)"),
    }
}

/// d/dt expressed through d/dc.
pub fn dt(p: CurvePreset, f: &RationalFn) -> RationalFn {
    dc(f).div(&dc(&time(p))).expect("t is not constant in c")
}

/// d F_0 / dc. For the Catalan curve F_0 = -c^2/2 - 1 + log c.
pub fn genus_zero_derivative(p: CurvePreset) -> RationalFn {
    match p {
        CurvePreset::Airy => rf("-2 c^2"),
        CurvePreset::Catalan => rf("-c + 1/c"),
    }
}

/// d F_1 / dc with F_1 = 1/2 log kappa.
pub fn genus_one_derivative(p: CurvePreset) -> RationalFn {
    let k = propagator(p);
    dc(&k).div(&k).expect("nonzero").scale(&rat(1, 2))
}

/// F_2..F_{g_max} of the preset, from the 1D free energies.
pub fn curve_free_energies(p: CurvePreset, g_max: u32) -> Result<BTreeMap<u32, RationalFn>> {
    let one_d = one_d_recursion(g_max)?;
    let asg = substitution(p, 2 * g_max + 1);
    let mut out = BTreeMap::new();
    for (g, f) in one_d.iter() {
        out.insert(g, substitute(f, &asg)?);
    }
    Ok(out)
}

pub fn curve_free_energy(p: CurvePreset, g: u32) -> Result<RationalFn> {
    if g < 2 {
        return Err(Error::Domain(format!("curve free energies are rational only for g >= 2, got {}", g)));
    }
    Ok(curve_free_energies(p, g)?.remove(&g).expect("computed"))
}

/// d F_g / dc for g = 1..g_max.
fn c_derivatives(p: CurvePreset, fs: &BTreeMap<u32, RationalFn>, g_max: u32) -> Vec<RationalFn> {
    let mut d = vec![RationalFn::zero(), genus_one_derivative(p)];
    for g in 2..=g_max {
        d.push(dc(&fs[&g]));
    }
    d
}

/// The recursion in c: for Airy
/// F_g' = -1/(4c^2) [(d/dc - 1/c) F_{g-1}' + sum_r F_r' F_{g-r}'],
/// for Catalan
/// F_g' = -c^3/(c^2-1)^2 [(d/dc - 2/(c(c^2-1))) F_{g-1}' + sum_r F_r' F_{g-r}'].
pub fn curve_recursion_check(p: CurvePreset, g_max: u32) -> Result<bool> {
    let fs = curve_free_energies(p, g_max)?;
    Ok(c_recursion_holds(p, &fs, g_max))
}

pub fn c_recursion_holds(p: CurvePreset, fs: &BTreeMap<u32, RationalFn>, g_max: u32) -> bool {
    let d = c_derivatives(p, fs, g_max);
    let (pre, shift) = match p {
        CurvePreset::Airy => (rf("-1/(4 c^2)"), rf("1/c")),
        CurvePreset::Catalan => (rf("-c^3/(c^2 - 1)^2"), rf("2/(c (c^2 - 1))")),
    };
    (2..=g_max as usize).all(|g| {
        let mut bracket = dc(&d[g - 1]).sub(&shift.mul(&d[g - 1]));
        for r in 1..g {
            bracket = bracket.add(&d[r].mul(&d[g - r]));
        }
        d[g] == pre.mul(&bracket)
    })
}

/// The Catalan recursion in t = -(c + 1/c):
/// (c - 1/c) dF_g/dt = d^2F_{g-1}/dt^2 + sum_r dF_r/dt dF_{g-r}/dt.
pub fn catalan_t_recursion_holds(fs: &BTreeMap<u32, RationalFn>, g_max: u32) -> bool {
    let p = CurvePreset::Catalan;
    let mut d = vec![RationalFn::zero(), genus_one_derivative(p).div(&dc(&time(p))).expect("nonzero")];
    for g in 2..=g_max {
        d.push(dt(p, &fs[&g]));
    }
    let pre = rf("c - 1/c");
    (2..=g_max as usize).all(|g| {
        let mut rhs = dt(p, &d[g - 1]);
        for r in 1..g {
            rhs = rhs.add(&d[r].mul(&d[g - r]));
        }
        pre.mul(&d[g]) == rhs
    })
}

/// dF_g/dc = (kappa^2 I_2 - 2 kappa / c) dF_g/dkappa as rational functions,
/// with dF_g/dkappa taken on the 1D polynomial before substitution.
pub fn catalan_lemma_holds(g_max: u32) -> Result<bool> {
    let p = CurvePreset::Catalan;
    let one_d = one_d_recursion(g_max)?;
    let asg = substitution(p, 2 * g_max + 1);
    let k = propagator(p);
    let factor = k.mul(&k).mul(&coupling(p, 2)).sub(&k.scale(&int(2)).div(&c())?);
    for (_, f) in one_d.iter() {
        let lhs = dc(&substitute(f, &asg)?);
        let rhs = factor.mul(&substitute(&f.partial(&Atom::scalar_kappa()), &asg)?);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The quantum curve operators, as polynomials in hbar and d/dt acting on
/// the wave function: (hbar d/dt)^2 - t for Airy and
/// hbar^2 d^2/dt^2 + s hbar t d/dt + (1 - hbar) for Catalan, where `s` is
/// the sign of the first-order term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveOperator {
    Airy,
    Catalan { first_order_sign: i64 },
}

impl CurveOperator {
    /// The operator as printed for each preset.
    pub fn printed(p: CurvePreset) -> CurveOperator {
        match p {
            CurvePreset::Airy => CurveOperator::Airy,
            CurvePreset::Catalan => CurveOperator::Catalan { first_order_sign: 1 },
        }
    }
}

/// Coefficients of hbar^0..hbar^order of (A Z)/Z, where
/// log Z = -F_0/hbar + F_1 + sum_{g>=2} hbar^{g-1} F_g.
///
/// F_0 enters with a minus sign because both curves come from integrals of
/// exp(-f/hbar) and F_0 = f(c) is the critical value.
pub fn curve_ode_residuals(p: CurvePreset, op: CurveOperator, order: u32) -> Result<Vec<RationalFn>> {
    curve_ode_residuals_with_sign(p, op, order, -1)
}

/// As [`curve_ode_residuals`] with log Z = sign F_0/hbar + ... .
pub fn curve_ode_residuals_with_sign(
    p: CurvePreset,
    op: CurveOperator,
    order: u32,
    genus_zero_sign: i64,
) -> Result<Vec<RationalFn>> {
    if order > 6 {
        return Err(Error::Resource(format!("order {} is above the supported 6", order)));
    }
    let g_max = (order + 1).max(2);
    let fs = curve_free_energies(p, g_max)?;
    // s[k+1] holds the hbar^k coefficient of d log Z / dt, k >= -1.
    let ct = dc(&time(p));
    let mut s =
        vec![genus_zero_derivative(p).scale(&int(genus_zero_sign)).div(&ct)?, genus_one_derivative(p).div(&ct)?];
    for g in 2..=g_max {
        s.push(dt(p, &fs[&g]));
    }
    let coeff = |k: i64| -> RationalFn {
        let idx = k + 1;
        if idx < 0 || idx as usize >= s.len() {
            RationalFn::zero()
        } else {
            s[idx as usize].clone()
        }
    };
    let t = time(p);
    let mut out = Vec::new();
    for n in 0..=order as i64 {
        // hbar^2 (S'' + S'^2) contributes at hbar^n the terms with index n - 2.
        let mut r = dt(p, &coeff(n - 2));
        for a in -1..=(n - 1) {
            r = r.add(&coeff(a).mul(&coeff(n - 2 - a)));
        }
        match op {
            CurveOperator::Airy => {
                if n == 0 {
                    r = r.sub(&t);
                }
            }
            CurveOperator::Catalan { first_order_sign } => {
                r = r.add(&t.mul(&coeff(n - 1)).scale(&int(first_order_sign)));
                if n == 0 {
                    r = r.add(&RationalFn::one());
                }
                if n == 1 {
                    r = r.sub(&RationalFn::one());
                }
            }
        }
        out.push(r);
    }
    Ok(out)
}

/// Whether the printed quantum curve equation holds through hbar^order.
pub fn curve_ode_check(p: CurvePreset, order: u32) -> Result<bool> {
    Ok(curve_ode_residuals(p, CurveOperator::printed(p), order)?.iter().all(|r| r.is_zero()))
}

/// The lowest order at which a residual is nonzero.
pub fn first_failing_order(residuals: &[RationalFn]) -> Option<usize> {
    residuals.iter().position(|r| !r.is_zero())
}

/// Coefficient s_g of S_g = s_g / z^{3(g-1)} predicted from F_g = f_g / c^{3(g-1)}
/// under z^3 = 2c^3.
pub fn airy_s_coefficient(g: u32) -> Result<Rational> {
    let f = curve_free_energy(CurvePreset::Airy, g)?;
    let e = 3 * (g as i32 - 1);
    let expected_den = Poly::atom(Atom::CoordC).pow(e as u32);
    let num = f.num().as_constant();
    match num {
        Some(q) if f.den() == &expected_den => Ok(q * Rational::from_integer(num_bigint::BigInt::from(2).pow(g - 1))),
        _ => Err(Error::Domain(format!("F_{} of the Airy curve is not a monomial in 1/c", g))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitutions_are_consistent() {
        assert!(check_substitution(CurvePreset::Airy, 6));
        assert!(check_substitution(CurvePreset::Catalan, 8));
    }

    #[test]
    fn airy_values() {
        let fs = curve_free_energies(CurvePreset::Airy, 3).unwrap();
        assert_eq!(fs[&2], rf("5/(48 c^3)"));
        assert_eq!(fs[&3], rf("5/(64 c^6)"));
        assert!(c_recursion_holds(CurvePreset::Airy, &fs, 3));
        assert_eq!(airy_s_coefficient(2).unwrap(), rat(5, 24));
    }

    #[test]
    fn catalan_genus_two() {
        let fs = curve_free_energies(CurvePreset::Catalan, 2).unwrap();
        assert_eq!(fs[&2], rf("3/(4 (c^2-1)^2) + 5/(6 (c^2-1)^3)"));
    }

    #[test]
    fn eikonal_order() {
        let r = curve_ode_residuals(CurvePreset::Airy, CurveOperator::Airy, 0).unwrap();
        assert!(r[0].is_zero());
    }
}
