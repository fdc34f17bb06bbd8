//! Counting stable graphs with genus-0 vertices (coefficients a^g_d) and
//! counting all graphs (coefficients lambda_{g,k} and b^g_n).

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::algebra::rational::{bernoulli_numbers, binomial, factorial, rational_to_string};
use crate::algebra::{
    int, integrate_kappa, rat, Atom, Derivation, GradedFreeEnergy, Monomial, Poly, Rational, RationalFn,
    TruncatedSeries,
};
use crate::error::{Error, Result};

use super::one_d::one_d_free_energy;

fn kappa() -> Poly {
    Poly::atom(Atom::scalar_kappa())
}

fn tt() -> Poly {
    Poly::atom(Atom::CoordT)
}

fn q(n: num_bigint::BigInt) -> Rational {
    Rational::from_integer(n)
}

fn check_genus(g: u32) -> Result<()> {
    if g < 2 {
        return Err(Error::Domain(format!("the counting models start at g = 2, got {}", g)));
    }
    Ok(())
}

/// F^st_g from enumeration: sum over connected genus-g graphs with genus-0
/// vertices of T^{#vertices} kappa^{#edges} / |Aut|.
pub fn stable_count_free_energy(g: u32) -> Result<Poly> {
    check_genus(g)?;
    one_d_free_energy(g)?.substitute_with(|a| matches!(a, Atom::CoordI(_)).then(tt))
}

/// The derivation D with D T = T and D kappa = kappa^2 T.
pub fn stable_count_derivation() -> Derivation {
    Derivation::new().with_rule(Atom::CoordT, tt()).with_rule(Atom::scalar_kappa(), &kappa().pow(2) * &tt())
}

/// F^st_2..F^st_{g_max} from
/// d F_g / d kappa = 1/2 ((D + kappa T) D F_{g-1} + sum_r D F_r D F_{g-r})
/// with D F_1 = kappa T / 2.
pub fn stable_count_recursion(g_max: u32) -> Result<GradedFreeEnergy> {
    check_genus(g_max)?;
    let d = stable_count_derivation();
    let kt = &kappa() * &tt();
    let mut df = vec![Poly::zero(), kt.scale(&rat(1, 2))];
    let mut out = GradedFreeEnergy::new();
    for g in 2..=g_max as usize {
        let prev = &df[g - 1];
        let mut rhs = &d.apply(prev) + &(&kt * prev);
        for r in 1..g {
            rhs += &df[r] * &df[g - r];
        }
        let f = integrate_kappa(&rhs.scale(&rat(1, 2)), &Atom::scalar_kappa(), &Poly::zero())?;
        df.push(d.apply(&f));
        out.insert(g as u32, f);
    }
    Ok(out)
}

/// a^g_d for d = 1..2g-2, read off F^st_g. Errors if a term is not of the
/// form T^d kappa^{g-1+d}.
pub fn a_coefficients(f: &Poly, g: u32) -> Result<Vec<Rational>> {
    let mut a = vec![Rational::from_integer(0.into()); 2 * g as usize - 1];
    for (m, c) in f.terms() {
        let d = m.exponent(&Atom::CoordT);
        let e = m.exponent(&Atom::scalar_kappa());
        if m.factors().len() != 2 || d < 1 || d > 2 * g as i32 - 2 || e != g as i32 - 1 + d {
            return Err(Error::Domain(format!("unexpected term in F^st_{}", g)));
        }
        a[d as usize] = c.clone();
    }
    Ok(a)
}

/// a^g_1 = 1/(2^g g!) and a^g_2 = (2^{2g} - 2^{g-1} - (g+1)^2)/(2^g (g+1)!).
pub fn stable_count_closed_forms(g: u32) -> Result<(Rational, Rational)> {
    check_genus(g)?;
    let two = num_bigint::BigInt::from(2);
    let a1 = Rational::new(1.into(), two.pow(g) * factorial(g as u64));
    let num = two.pow(2 * g) - two.pow(g - 1) - num_bigint::BigInt::from((g + 1) * (g + 1));
    let a2 = Rational::new(num, two.pow(g) * factorial(g as u64 + 1));
    Ok((a1, a2))
}

/// a^g_2 as the double sum 1/2 sum_{k, l} 1/(k! (2l)!! (2g+2-2k-2l)!!) over
/// 1 <= k <= g+1 with k + 2l >= 3 and 2g + 2 - k - 2l >= 3.
pub fn a2_double_sum(g: u32) -> Rational {
    let dfact = |n: i64| -> num_bigint::BigInt {
        // (2m)!! = 2^m m!
        num_bigint::BigInt::from(2).pow(n as u32 / 2) * factorial(n as u64 / 2)
    };
    let g = g as i64;
    let mut s = Rational::from_integer(0.into());
    for k in 1..=g + 1 {
        for l in 0..=g + 1 {
            if k + 2 * l >= 3 && 2 * g + 2 - k - 2 * l >= 3 && 2 * g + 2 - 2 * k - 2 * l >= 0 {
                s += Rational::new(1.into(), factorial(k as u64) * dfact(2 * l) * dfact(2 * g + 2 - 2 * k - 2 * l));
            }
        }
    }
    s * rat(1, 2)
}

/// a^g_d for 2 <= g <= g_max by the explicit quadratic recursion on
/// coefficients (g >= 3), starting from a^2 = (1/8, 5/24).
pub fn a_recursion(g_max: u32) -> BTreeMap<u32, Vec<Rational>> {
    let mut a: BTreeMap<u32, Vec<Rational>> = BTreeMap::new();
    a.insert(2, vec![int(0), rat(1, 8), rat(5, 24)]);
    let get = |a: &BTreeMap<u32, Vec<Rational>>, g: u32, d: i64| -> Rational {
        if d < 1 {
            return int(0);
        }
        a.get(&g).and_then(|v| v.get(d as usize)).cloned().unwrap_or_else(|| int(0))
    };
    for g in 3..=g_max {
        let gi = g as i64;
        let mut row = vec![int(0); 2 * g as usize - 1];
        for d in 1..=2 * gi - 2 {
            let mut s = get(&a, g - 1, d) * int(d * d)
                + get(&a, g - 1, d - 2) * int((gi - 4 + d) * (gi - 1 + d))
                + get(&a, g - 1, d - 1) * int((gi - 3 + d) * (2 * d - 1) + 2 * (d - 1));
            for r in 2..=g - 2 {
                let (ri, hi) = (r as i64, (g - r) as i64);
                for d1 in 1..=2 * ri - 2 {
                    let x = get(&a, r, d1);
                    s += &x * get(&a, g - r, d - d1) * int(d1 * (d - d1));
                    s += &x * get(&a, g - r, d - 1 - d1) * int((ri - 1 + d1) * (d - 1 - d1));
                    s += &x * get(&a, g - r, d - 1 - d1) * int(d1 * (hi - 1 + d - 1 - d1));
                    s += &x * get(&a, g - r, d - 2 - d1) * int((ri - 1 + d1) * (hi - 1 + d - 2 - d1));
                }
            }
            row[d as usize] = s / int(2 * (gi - 1 + d));
        }
        a.insert(g, row);
    }
    a
}

/// Coefficients of x^{g-1}, g = 2..g_max+... of
/// log sum_m (6m)!/((3m)!(2m)!) (x/288)^m; entry g holds the x^{g-1} one.
pub fn trivalent_log_series(g_max: u32) -> Result<BTreeMap<u32, Rational>> {
    let x = Atom::named("x", 0);
    let n = g_max as i64 - 1;
    let mut p = Poly::zero();
    for m in 0..=n as u64 {
        let c = Rational::new(
            factorial(6 * m),
            factorial(3 * m) * factorial(2 * m) * num_bigint::BigInt::from(288).pow(m as u32),
        );
        p.add_term(Monomial::power(x.clone(), m as i32), c);
    }
    let log = TruncatedSeries::new(vec![x.clone()], n, &p).log()?;
    Ok((2..=g_max)
        .map(|g| (g, log.poly().coefficient_of(&x, g as i32 - 1).as_constant().unwrap_or_else(|| int(0))))
        .collect())
}

/// F^gr_g = sum_d a_d T^d / (1-T)^{g-1+d} as a rational function of T.
pub fn graph_count_free_energy_t(g: u32, a: &[Rational]) -> Result<RationalFn> {
    let one_minus = &Poly::one() - &tt();
    let mut out = RationalFn::zero();
    for (d, c) in a.iter().enumerate().skip(1) {
        let term = RationalFn::new(tt().pow(d as u32).scale(c), one_minus.pow(g - 1 + d as u32))?;
        out = out.add(&term);
    }
    Ok(out)
}

/// f_g(T) = (1-T)^{3g-3} F^gr_g = sum_d a_d T^d (1-T)^{2g-2-d}.
pub fn f_polynomial(g: u32, a: &[Rational]) -> Poly {
    let one_minus = &Poly::one() - &tt();
    let mut out = Poly::zero();
    for (d, c) in a.iter().enumerate().skip(1) {
        out += (&tt().pow(d as u32) * &one_minus.pow(2 * g - 2 - d as u32)).scale(c);
    }
    out
}

/// F^gr_g as a polynomial in kappa through T = 1 - 1/kappa:
/// sum_d a_d (kappa - 1)^d kappa^{g-1}.
pub fn graph_count_free_energy_kappa(g: u32, a: &[Rational]) -> Poly {
    let km1 = &kappa() - &Poly::one();
    let mut out = Poly::zero();
    for (d, c) in a.iter().enumerate().skip(1) {
        out += (&km1.pow(d as u32) * &kappa().pow(g - 1)).scale(c);
    }
    out
}

/// Coefficients of kappa^0..kappa^{3g-3} of a kappa-polynomial.
pub fn kappa_coefficients(p: &Poly, g: u32) -> Vec<Rational> {
    let k = Atom::scalar_kappa();
    (0..=3 * g as i32 - 3).map(|l| p.coefficient_of(&k, l).as_constant().unwrap_or_else(|| int(0))).collect()
}

/// Solves [(kappa^2 - kappa) d/dkappa + g - 1] F = R for the coefficients
/// lambda_l of F, top down: (L-1) lambda_{L-1} + (g-1-L) lambda_L = R_L for
/// L = 3g-2, ..., g. The remaining equations L = g-1, ..., 1 must then hold
/// with lambda_l = 0 for l < g-1.
fn solve_lambda_row(g: u32, rhs: impl Fn(i64) -> Rational) -> Result<Vec<Rational>> {
    let gi = g as i64;
    let top = 3 * gi - 3;
    let mut lam = vec![int(0); top as usize + 2];
    for l in (gi..=top + 1).rev() {
        let known = int(gi - 1 - l) * &lam[l as usize];
        lam[l as usize - 1] = (rhs(l) - known) / int(l - 1);
    }
    for l in 1..gi {
        let lhs = int(l - 1) * &lam[l as usize - 1] + int(gi - 1 - l) * &lam[l as usize];
        if lhs != rhs(l) {
            return Err(Error::Domain(format!("lambda recursion inconsistent at g = {}, l = {}", g, l)));
        }
    }
    if lam.iter().take(gi as usize - 1).any(|x| !num_traits::Zero::is_zero(x)) {
        return Err(Error::Domain(format!("lambda_{{{},l}} nonzero below l = g-1", g)));
    }
    lam.truncate(top as usize + 1);
    Ok(lam)
}

/// Right-hand side of the kappa-form recursion valid for all g >= 2:
/// kappa^2/2 [(k^2-k)^2 F_{g-1}'' + (3k-2)(k^2-k) F_{g-1}' + (k^2-k)^2 sum_{r=1}^{g-1} F_r' F_{g-r}'],
/// with F_1' = 1/(2 kappa). `fs[r]` holds F_r for r >= 2.
pub fn kappa_recursion_rhs(g: u32, fs: &BTreeMap<u32, Poly>) -> Poly {
    let k = Atom::scalar_kappa();
    let deriv = |r: u32| -> Poly {
        if r == 1 {
            Poly::term(Monomial::power(k.clone(), -1), rat(1, 2))
        } else {
            fs[&r].partial(&k)
        }
    };
    let kk = &kappa().pow(2) - &kappa();
    let prev = deriv(g - 1);
    let mut inner = &kk.pow(2) * &prev.partial(&k);
    inner += &(&(&kappa().scale(&int(3)) - &Poly::constant(int(2))) * &kk) * &prev;
    let mut sum = Poly::zero();
    for r in 1..g {
        sum += &deriv(r) * &deriv(g - r);
    }
    inner += &kk.pow(2) * &sum;
    (&kappa().pow(2) * &inner).scale(&rat(1, 2))
}

/// lambda_{g,k} for 2 <= g <= g_max. Genus 2 comes from the kappa-form
/// recursion with F_1 = 1/2 log kappa; higher genera from the coefficient
/// recursion
/// (l-1) lambda_{g,l-1} + (g-l-1) lambda_{g,l}
///   = 1/2 (l-4)(l-1) lambda_{g-1,l-4} - 1/2 (l-3)(2l-1) lambda_{g-1,l-3}
///     + 1/2 (l-2) l lambda_{g-1,l-2}
///     + 1/2 sum_{r=2}^{g-2} (S_{l-4} - 2 S_{l-3} + S_{l-2}),
/// S_m = sum_{l1+l2=m} l1 l2 lambda_{r,l1} lambda_{g-r,l2}.
pub fn lambda_recursion_solve(g_max: u32) -> Result<BTreeMap<u32, Vec<Rational>>> {
    check_genus(g_max)?;
    let mut lam: BTreeMap<u32, Vec<Rational>> = BTreeMap::new();
    let rhs2 = kappa_recursion_rhs(2, &BTreeMap::new());
    let k = Atom::scalar_kappa();
    lam.insert(2, solve_lambda_row(2, |l| rhs2.coefficient_of(&k, l as i32).as_constant().unwrap_or_else(|| int(0)))?);
    for g in 3..=g_max {
        let get = |h: u32, l: i64| -> Rational {
            if l < 0 {
                return int(0);
            }
            lam.get(&h).and_then(|v| v.get(l as usize)).cloned().unwrap_or_else(|| int(0))
        };
        let s = |r: u32, m: i64| -> Rational {
            let mut acc = int(0);
            for l1 in 0..=m {
                acc += get(r, l1) * get(g - r, m - l1) * int(l1 * (m - l1));
            }
            acc
        };
        let rhs = |l: i64| -> Rational {
            let mut acc = rat(1, 2) * int((l - 4) * (l - 1)) * get(g - 1, l - 4)
                - rat(1, 2) * int((l - 3) * (2 * l - 1)) * get(g - 1, l - 3)
                + rat(1, 2) * int((l - 2) * l) * get(g - 1, l - 2);
            for r in 2..=g.saturating_sub(2) {
                acc += rat(1, 2) * (s(r, l - 4) - int(2) * s(r, l - 3) + s(r, l - 2));
            }
            acc
        };
        let row = solve_lambda_row(g, rhs)?;
        lam.insert(g, row);
    }
    Ok(lam)
}

/// b^g_k = sum_{l=1}^k (-1)^{k+l} C(2g-2-l, k-l) a^g_l.
pub fn b_from_a(g: u32, a: &[Rational]) -> Vec<Rational> {
    let n = 2 * g as i64 - 2;
    (0..=n)
        .map(|k| {
            let mut s = int(0);
            for l in 1..=k {
                let sign = if (k + l) % 2 == 0 { 1 } else { -1 };
                s += &a[l as usize] * q(binomial(n - l, k - l) * sign);
            }
            s
        })
        .collect()
}

/// Inverse of `b_from_a` (the transform is unitriangular).
pub fn a_from_b(g: u32, b: &[Rational]) -> Vec<Rational> {
    let n = 2 * g as i64 - 2;
    let mut a = vec![int(0); n as usize + 1];
    for k in 1..=n {
        let mut s = b[k as usize].clone();
        for l in 1..k {
            let sign = if (k + l) % 2 == 0 { 1 } else { -1 };
            s -= &a[l as usize] * q(binomial(n - l, k - l) * sign);
        }
        a[k as usize] = s;
    }
    a
}

/// lambda_{g,3g-3-k} = (-1)^k sum_{l=k}^{2g-2} C(l, k) b^g_l, as a vector
/// indexed by the kappa exponent.
pub fn lambda_from_b(g: u32, b: &[Rational]) -> Vec<Rational> {
    let top = 3 * g as i64 - 3;
    let n = 2 * g as i64 - 2;
    let mut lam = vec![int(0); top as usize + 1];
    for k in 0..=n {
        let mut s = int(0);
        for l in k..=n {
            s += &b[l as usize] * q(binomial(l, k));
        }
        if k % 2 == 1 {
            s = -s;
        }
        lam[(top - k) as usize] = s;
    }
    lam
}

/// b^g_n = (-1)^n sum_{j=g-1}^{3g-3} C(3g-3-j, n) lambda_{g,j}.
pub fn b_from_lambda(g: u32, lam: &[Rational]) -> Vec<Rational> {
    let top = 3 * g as i64 - 3;
    (0..=2 * g as i64 - 2)
        .map(|n| {
            let mut s = int(0);
            for j in g as i64 - 1..=top {
                s += &lam[j as usize] * q(binomial(top - j, n));
            }
            if n % 2 == 1 {
                -s
            } else {
                s
            }
        })
        .collect()
}

/// lambda_{g,3g-3-k} = sum_{l=0}^k (-1)^{k+l} C(2g-2-l, k-l) a^g_{2g-2-l}.
pub fn lambda_from_a(g: u32, a: &[Rational]) -> Vec<Rational> {
    let top = 3 * g as i64 - 3;
    let n = 2 * g as i64 - 2;
    let mut lam = vec![int(0); top as usize + 1];
    for k in 0..=n {
        let mut s = int(0);
        for l in 0..=k {
            let sign = if (k + l) % 2 == 0 { 1 } else { -1 };
            s += &a[(n - l) as usize] * q(binomial(n - l, k - l) * sign);
        }
        lam[(top - k) as usize] = s;
    }
    lam
}

/// Checks the a / b / lambda relations at genus g against each other and
/// against f_g and the kappa-polynomial.
pub fn coefficient_conversions(g: u32) -> Result<bool> {
    check_genus(g)?;
    let st = stable_count_recursion(g)?;
    let a = a_coefficients(st.get(g).expect("computed"), g)?;
    let b = b_from_a(g, &a);
    let f = f_polynomial(g, &a);
    let b_from_f: Vec<Rational> = (0..=2 * g as i32 - 2)
        .map(|n| f.coefficient_of(&Atom::CoordT, n).as_constant().unwrap_or_else(|| int(0)))
        .collect();
    let lam = kappa_coefficients(&graph_count_free_energy_kappa(g, &a), g);
    Ok(b == b_from_f
        && lambda_from_b(g, &b) == lam
        && lambda_from_a(g, &a) == lam
        && b_from_lambda(g, &lam) == b
        && a_from_b(g, &b_from_lambda(g, &lambda_from_b(g, &b))) == a)
}

/// B_g / (g (g-1)).
pub fn bernoulli_boundary(g: u32) -> Rational {
    let b = bernoulli_numbers(g as usize);
    b[g as usize].clone() / int(g as i64 * (g as i64 - 1))
}

/// The Lambert series T = sum_{d>=1} d^{d-1}/d! t^d in t = t_0, to degree `cutoff`.
pub fn lambert_series(cutoff: u32) -> TruncatedSeries {
    let t = Atom::CoordTee(0);
    let mut p = Poly::zero();
    for d in 1..=cutoff as u64 {
        let c = Rational::new(num_bigint::BigInt::from(d).pow(d as u32 - 1), factorial(d));
        p.add_term(Monomial::power(t.clone(), d as i32), c);
    }
    TruncatedSeries::new(vec![t], cutoff as i64, &p)
}

/// T - t e^T vanishes to the cutoff.
pub fn lambert_residual_vanishes(cutoff: u32) -> Result<bool> {
    let tser = lambert_series(cutoff);
    let t = TruncatedSeries::variable(tser.variables().to_vec(), cutoff as i64, Atom::CoordTee(0));
    Ok(tser.sub(&t.mul(&tser.exp()?)).is_zero())
}

/// (D + g - 1) F_g = 1/(2(1-T)^2) [(D + T/(1-T)) D F_{g-1} + sum_r D F_r D F_{g-r}]
/// with D = T d/dT and D F_1 = T/(2(1-T)).
pub fn graph_count_t_recursion_holds(g_max: u32) -> Result<bool> {
    check_genus(g_max)?;
    let st = stable_count_recursion(g_max)?;
    let t = RationalFn::atom(Atom::CoordT);
    let one_minus = RationalFn::one().sub(&t);
    let d = |f: &RationalFn| t.mul(&f.partial(&Atom::CoordT));
    let mut fs = vec![RationalFn::zero(), RationalFn::zero()];
    let mut df = vec![RationalFn::zero(), t.div(&one_minus.scale(&int(2)))?];
    for g in 2..=g_max {
        let f = graph_count_free_energy_t(g, &a_coefficients(st.get(g).expect("computed"), g)?)?;
        df.push(d(&f));
        fs.push(f);
    }
    let pre = RationalFn::one().div(&one_minus.mul(&one_minus).scale(&int(2)))?;
    let shift = t.div(&one_minus)?;
    for g in 2..=g_max as usize {
        let lhs = d(&fs[g]).add(&fs[g].scale(&int(g as i64 - 1)));
        let mut inner = d(&df[g - 1]).add(&shift.mul(&df[g - 1]));
        for r in 1..g {
            inner = inner.add(&df[r].mul(&df[g - r]));
        }
        if lhs != pre.mul(&inner) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Tables of a^g_d, lambda_{g,k} and b^g_n, exact.
#[derive(Clone, Debug, PartialEq)]
pub struct EnumerationTable {
    pub model: String,
    pub a: BTreeMap<(u32, u32), Rational>,
    pub lambda: BTreeMap<(u32, u32), Rational>,
    pub b: BTreeMap<(u32, u32), Rational>,
}

impl EnumerationTable {
    /// a^g_d from the recursion, for the stable-graph count.
    pub fn stable_count(g_max: u32) -> Result<EnumerationTable> {
        let st = stable_count_recursion(g_max)?;
        let mut a = BTreeMap::new();
        for (g, f) in st.iter() {
            for (d, c) in a_coefficients(f, g)?.into_iter().enumerate().skip(1) {
                a.insert((g, d as u32), c);
            }
        }
        Ok(EnumerationTable { model: "stable-count".into(), a, lambda: BTreeMap::new(), b: BTreeMap::new() })
    }

    /// a, b and lambda for the graph count; lambda from its recursion.
    pub fn graph_count(g_max: u32) -> Result<EnumerationTable> {
        let mut t = EnumerationTable::stable_count(g_max)?;
        t.model = "graph-count".into();
        let lam = lambda_recursion_solve(g_max)?;
        for g in 2..=g_max {
            let a: Vec<Rational> =
                (0..=2 * g - 2).map(|d| t.a.get(&(g, d)).cloned().unwrap_or_else(|| int(0))).collect();
            for (n, c) in b_from_a(g, &a).into_iter().enumerate().skip(1) {
                t.b.insert((g, n as u32), c);
            }
            for (k, c) in lam[&g].iter().enumerate() {
                if k as u32 >= g - 1 {
                    t.lambda.insert((g, k as u32), c.clone());
                }
            }
        }
        Ok(t)
    }

    /// Rows `family,g,index,value`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("family,g,index,value\n");
        for (name, m) in [("a", &self.a), ("b", &self.b), ("lambda", &self.lambda)] {
            for ((g, k), v) in m {
                s.push_str(&format!("{},{},{},{}\n", name, g, k, rational_to_string(v)));
            }
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let family = |m: &BTreeMap<(u32, u32), Rational>| -> Value {
            Value::Array(
                m.iter().map(|((g, k), v)| json!({"g": g, "index": k, "value": rational_to_string(v)})).collect(),
            )
        };
        json!({
            "model": self.model,
            "a": family(&self.a),
            "b": family(&self.b),
            "lambda": family(&self.lambda),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    #[test]
    fn genus_two() {
        let st = stable_count_recursion(3).unwrap();
        assert_eq!(st.get(2), Some(&parse_poly("1/8 T k^2 + 5/24 T^2 k^3", 1).unwrap()));
        assert_eq!(stable_count_free_energy(2).unwrap(), *st.get(2).unwrap());
        assert_eq!(stable_count_closed_forms(3).unwrap(), (rat(1, 48), rat(11, 48)));
        assert_eq!(a2_double_sum(3), rat(11, 48));
        let lam = lambda_recursion_solve(2).unwrap();
        assert_eq!(lam[&2], vec![int(0), rat(1, 12), rat(-7, 24), rat(5, 24)]);
    }

    #[test]
    fn lambert() {
        let t = lambert_series(3);
        assert_eq!(t.poly(), &parse_poly("t[0] + t[0]^2 + 3/2 t[0]^3", 1).unwrap());
        assert!(lambert_residual_vanishes(8).unwrap());
        assert!(lambert_series(0).is_zero());
    }

    #[test]
    fn conversions() {
        for g in 2..=5 {
            assert!(coefficient_conversions(g).unwrap());
        }
        assert!(graph_count_t_recursion_holds(4).unwrap());
    }
}
