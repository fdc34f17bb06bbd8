//! Topological 1D gravity: free energies in the coordinates I_k, the
//! quadratic recursion in d_X, and the change of coordinates t <-> I.

use rayon::prelude::*;

use crate::algebra::rational::factorial;
use crate::algebra::{
    int, integrate_kappa, rat, Atom, Derivation, GradedFreeEnergy, Monomial, Poly, Rational, TruncatedSeries,
};
use crate::error::{Error, Result};
use crate::feynman::{realized_free_energy, FeynmanContext};
use crate::graphs::{enumerate_stable_with, Budget, EnumOptions};

fn kappa() -> Poly {
    Poly::atom(Atom::scalar_kappa())
}

fn i(k: u32) -> Poly {
    Poly::atom(Atom::CoordI(k))
}

/// The derivation d_X: I_k -> I_{k+1} (k >= 1), kappa -> kappa^2 I_2.
pub fn d_x() -> Derivation {
    Derivation::new().with_rule(Atom::scalar_kappa(), &kappa().pow(2) * &i(2)).with_family(|a| match a {
        Atom::CoordI(k) if *k >= 1 => Some(Poly::atom(Atom::CoordI(k + 1))),
        _ => None,
    })
}

/// F_g^{1D} for g >= 2: the sum over connected graphs of genus g whose
/// vertices all have genus 0, weighted by prod I_{val-1} kappa^{#edges} / |Aut|.
pub fn one_d_free_energy(g: u32) -> Result<Poly> {
    if g < 2 {
        return Err(Error::Domain(format!("F^1D_g is a graph sum only for g >= 2, got {}", g)));
    }
    let opts = EnumOptions { genus_zero_only: true, ..EnumOptions::default() };
    let classes = enumerate_stable_with(g, 0, opts, &Budget::from_env())?;
    let parts: Vec<Poly> = classes
        .par_iter()
        .map(|(gr, aut)| {
            let mut m = Monomial::power(Atom::scalar_kappa(), gr.num_edges() as i32);
            for v in 0..gr.num_vertices() {
                m = m.mul(&Monomial::var(Atom::CoordI(gr.valence(v) as u32 - 1)));
            }
            Poly::term(m, Rational::new(1.into(), (*aut).into()))
        })
        .collect();
    let mut out = Poly::zero();
    for p in parts {
        out += p;
    }
    Ok(out)
}

/// The one-label Feynman context specialized to 1D gravity:
/// F_0^{(n)} -> I_{n-1} and F_g^{(n)} -> 0 for g >= 1.
pub fn one_d_context() -> FeynmanContext {
    FeynmanContext::new(1).expect("one label").with_vertex_rule(|g, v| if g == 0 { i(v[0] - 1) } else { Poly::zero() })
}

/// F_g^{1D} through the general realization and the specializing substitution.
pub fn one_d_free_energy_realized(g: u32) -> Result<Poly> {
    realized_free_energy(g, &one_d_context())
}

/// Right-hand side of the recursion for d F_g / d kappa from the d_X
/// derivatives of the lower genera (index r holds d_X F_r).
pub fn one_d_recursion_rhs(dx: &[Poly], g: usize) -> Poly {
    let d = d_x();
    let prev = &dx[g - 1];
    let mut rhs = &d.apply(prev) + &(&(&kappa() * &i(2)) * prev);
    for r in 1..g {
        rhs += &dx[r] * &dx[g - r];
    }
    rhs.scale(&rat(1, 2))
}

/// F_2..F_{g_max} from the recursion, seeded by d_X F_1 = kappa I_2 / 2 and
/// integrated in kappa with zero constant.
pub fn one_d_recursion(g_max: u32) -> Result<GradedFreeEnergy> {
    if g_max < 2 {
        return Err(Error::Domain(format!("g_max must be at least 2, got {}", g_max)));
    }
    let d = d_x();
    let k = Atom::scalar_kappa();
    let mut dx = vec![Poly::zero(), (&kappa() * &i(2)).scale(&rat(1, 2))];
    let mut out = GradedFreeEnergy::new();
    for g in 2..=g_max as usize {
        let f = integrate_kappa(&one_d_recursion_rhs(&dx, g), &k, &Poly::zero())?;
        dx.push(d.apply(&f));
        out.insert(g as u32, f);
    }
    Ok(out)
}

/// Whether every term a prod I_{i_j} kappa^l satisfies sum (i_j + 1) = 2l.
pub fn is_homogeneous(p: &Poly) -> bool {
    p.terms().all(|(m, _)| {
        let mut weight = 0i64;
        let mut l = 0i64;
        for (a, e) in m.factors() {
            match a {
                Atom::CoordI(k) => weight += (*k as i64 + 1) * *e as i64,
                Atom::Kappa(0, 0) => l = *e as i64,
                _ => return false,
            }
        }
        weight == 2 * l
    })
}

fn tee(k: u32) -> Atom {
    Atom::CoordTee(k)
}

fn t_vars(n: u32) -> Vec<Atom> {
    (0..=n).map(tee).collect()
}

/// The critical point I_0 as a series in t_0, t_1, ... to total degree
/// `degree`:
/// sum_k 1/k sum_{p_1+...+p_k = k-1} prod t_{p_j}/p_j!.
pub fn critical_point(degree: u32) -> TruncatedSeries {
    let vars = t_vars(degree);
    let mut out = Poly::zero();
    for k in 1..=degree {
        for comp in compositions(k - 1, k) {
            let mut m = Monomial::one();
            let mut den = num_bigint::BigInt::from(k);
            for &p in &comp {
                m = m.mul(&Monomial::var(tee(p)));
                den *= factorial(p as u64);
            }
            out.add_term(m, Rational::new(1.into(), den));
        }
    }
    TruncatedSeries::new(vars, degree as i64, &out)
}

/// Ordered k-tuples of non-negative integers summing to `total`.
fn compositions(total: u32, k: u32) -> Vec<Vec<u32>> {
    if k == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// I_0, ..., I_{n_max} as series in the t_k to total degree `degree`, where
/// I_k = sum_n t_{n+k} I_0^n / n! for k >= 1.
pub fn i_from_t(n_max: u32, degree: u32) -> Vec<TruncatedSeries> {
    let vars = t_vars(n_max + degree);
    let i0 = TruncatedSeries::new(vars.clone(), degree as i64, critical_point(degree).poly());
    let mut powers = vec![TruncatedSeries::constant(vars.clone(), degree as i64, int(1))];
    for n in 1..degree {
        powers.push(powers[n as usize - 1].mul(&i0));
    }
    let mut out = vec![i0];
    for k in 1..=n_max {
        let mut acc = TruncatedSeries::zero(vars.clone(), degree as i64);
        for n in 0..degree {
            let term = powers[n as usize]
                .mul(&TruncatedSeries::variable(vars.clone(), degree as i64, tee(n + k)))
                .scale(&Rational::new(1.into(), factorial(n as u64)));
            acc = acc.add(&term);
        }
        out.push(acc);
    }
    out
}

/// I_0, ..., I_cutoff as series in the t_k, truncated at total degree `cutoff`.
pub fn coordinates_i_from_t(cutoff: u32) -> Result<Vec<TruncatedSeries>> {
    if cutoff < 1 {
        return Err(Error::Domain("cutoff must be at least 1".into()));
    }
    Ok(i_from_t(cutoff, cutoff))
}

/// t_0, ..., t_cutoff as polynomials in the I_k, truncated at total degree
/// `cutoff` in the I_k: t_k = sum_n (-1)^n I_0^n / n! I_{n+k}.
pub fn coordinates_t_from_i(cutoff: u32) -> Result<Vec<TruncatedSeries>> {
    if cutoff < 1 {
        return Err(Error::Domain("cutoff must be at least 1".into()));
    }
    let vars: Vec<Atom> = (0..=2 * cutoff).map(Atom::CoordI).collect();
    let d = cutoff as i64;
    let i0 = TruncatedSeries::variable(vars.clone(), d, Atom::CoordI(0));
    Ok((0..=cutoff)
        .map(|k| {
            let mut acc = TruncatedSeries::zero(vars.clone(), d);
            for n in 0..cutoff {
                let sign = if n % 2 == 0 { 1 } else { -1 };
                let term = i0
                    .pow(n)
                    .mul(&TruncatedSeries::variable(vars.clone(), d, Atom::CoordI(n + k)))
                    .scale(&Rational::new(sign.into(), factorial(n as u64)));
                acc = acc.add(&term);
            }
            acc
        })
        .collect())
}

/// Composes t -> I -> t and checks that t_0..t_cutoff come back to total
/// degree `cutoff`.
pub fn coordinates_round_trip(cutoff: u32) -> Result<bool> {
    let inv = coordinates_t_from_i(cutoff)?;
    let forward = i_from_t(2 * cutoff, cutoff);
    let vars = t_vars(3 * cutoff);
    for (k, tk) in inv.iter().enumerate() {
        let p = tk.poly().substitute_with(|a| match a {
            Atom::CoordI(j) => Some(forward[*j as usize].poly().clone()),
            _ => None,
        })?;
        let back = TruncatedSeries::new(vars.clone(), cutoff as i64, &p);
        if back.poly() != &Poly::atom(tee(k as u32)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    #[test]
    fn genus_two_and_three() {
        let f2 = parse_poly("5/24 I2^2 k^3 + 1/8 I3 k^2", 1).unwrap();
        assert_eq!(one_d_free_energy(2).unwrap(), f2);
        let f3 =
            parse_poly("1/48 I5 k^3 + (1/12 I3^2 + 7/48 I2 I4) k^4 + 25/48 I2^2 I3 k^5 + 5/16 I2^4 k^6", 1).unwrap();
        assert_eq!(one_d_free_energy(3).unwrap(), f3);
        let rec = one_d_recursion(3).unwrap();
        assert_eq!(rec.get(2), Some(&f2));
        assert_eq!(rec.get(3), Some(&f3));
        assert_eq!(one_d_free_energy_realized(3).unwrap(), f3);
        assert!(is_homogeneous(&f3));
    }

    #[test]
    fn critical_point_fixed_point() {
        // I_0 = sum_p t_p I_0^p / p!
        let d = 5;
        let i0 = critical_point(d);
        let vars = i0.variables().to_vec();
        let mut rhs = TruncatedSeries::zero(vars.clone(), d as i64);
        for p in 0..d {
            let term = i0
                .pow(p)
                .mul(&TruncatedSeries::variable(vars.clone(), d as i64, tee(p)))
                .scale(&Rational::new(1.into(), factorial(p as u64)));
            rhs = rhs.add(&term);
        }
        assert_eq!(rhs.poly(), i0.poly());
        let low = TruncatedSeries::new(vars, 3, i0.poly());
        let expected = parse_poly("t[0] + t[0] t[1] + t[0] t[1]^2 + 1/2 t[0]^2 t[2]", 1).unwrap();
        assert_eq!(low.poly(), &expected);
    }

    #[test]
    fn round_trip() {
        assert!(coordinates_round_trip(5).unwrap());
    }
}
