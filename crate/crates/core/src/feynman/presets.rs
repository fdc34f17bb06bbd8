//! Concrete propagators and genus-expanded free energies fed through the
//! Feynman rules. Entries of kappa are stored as numerator polynomials over
//! a common denominator `den`; during evaluation 1/den is carried by the
//! atom `detinv[0]` and cleared at the end.

use std::collections::BTreeMap;

use crate::algebra::{rat, Atom, Derivation, Monomial, Poly, RationalFn};
use crate::error::Result;

use super::context::FeynmanContext;
use super::realize::realized_free_energy;

#[derive(Clone, Debug)]
pub struct PropagatorPreset {
    pub name: String,
    n_labels: u32,
    derivations: Vec<Derivation>,
    free_energies: BTreeMap<u32, Poly>,
    kappa_num: Vec<Vec<Poly>>,
    den: Poly,
}

fn inverse_atom() -> Atom {
    Atom::named("detinv", 0)
}

fn x(a: Atom) -> Poly {
    Poly::atom(a)
}

impl PropagatorPreset {
    /// One primary field, F_0 = t^3/6, F_g = 0 for g >= 1 and
    /// kappa = 1/(tbar - t).
    pub fn a1() -> PropagatorPreset {
        let t = Atom::CoordTee(0);
        let tb = Atom::CoordTBar(0);
        let mut fe = BTreeMap::new();
        fe.insert(0, Poly::atom(t.clone()).pow(3).scale(&rat(1, 6)));
        PropagatorPreset {
            name: "a1".into(),
            n_labels: 1,
            derivations: vec![Derivation::partial(t.clone())],
            free_energies: fe,
            kappa_num: vec![vec![Poly::one()]],
            den: &x(tb) - &x(t),
        }
    }

    /// Two primary fields (t_0, t_1) with F_0 = t_0^2 t_1/2 + q e^{t_1},
    /// F_1 = -t_1/24 and kappa = -(tau - taubar)^{-1}. The exponential is the
    /// atom `exp[1]` with d/dt_1 exp = exp; its conjugate is `expbar[1]`.
    pub fn p1() -> PropagatorPreset {
        let (t0, t1) = (Atom::CoordTee(0), Atom::CoordTee(1));
        let (s0, s1) = (Atom::CoordTBar(0), Atom::CoordTBar(1));
        let q = x(Atom::named("q", 0));
        let e = Atom::named("exp", 1);
        let eb = Atom::named("expbar", 1);
        let mut fe = BTreeMap::new();
        fe.insert(0, &(&x(t0.clone()).pow(2) * &x(t1.clone())).scale(&rat(1, 2)) + &(&q * &x(e.clone())));
        fe.insert(1, x(t1.clone()).scale(&rat(-1, 24)));
        let a = &x(t1.clone()) - &x(s1);
        let b = &x(t0.clone()) - &x(s0);
        let d = &q * &(&x(e.clone()) - &x(eb));
        let den = &(&a * &d) - &(&b * &b);
        PropagatorPreset {
            name: "p1".into(),
            n_labels: 2,
            derivations: vec![
                Derivation::partial(t0),
                Derivation::new().with_rule(t1, Poly::one()).with_rule(e.clone(), x(e)),
            ],
            free_energies: fe,
            kappa_num: vec![vec![-&d, b.clone()], vec![b, -&a]],
            den,
        }
    }

    pub fn n_labels(&self) -> u32 {
        self.n_labels
    }

    /// d^v F_g, zero when F_g vanishes.
    pub fn vertex_value(&self, genus: u32, valence: &[u32]) -> Poly {
        let Some(mut p) = self.free_energies.get(&genus).cloned() else {
            return Poly::zero();
        };
        for (i, &k) in valence.iter().enumerate() {
            for _ in 0..k {
                p = self.derivations[i].apply(&p);
            }
        }
        p
    }

    fn kappa_entry(&self, i: u32, j: u32) -> Poly {
        self.kappa_num[i as usize - 1][j as usize - 1].mul_monomial(&Monomial::var(inverse_atom()))
    }

    /// Replace `detinv` by 1/den.
    fn clear_inverse(&self, p: &Poly) -> Result<RationalFn> {
        let u = inverse_atom();
        let top = p.max_degree_in(&u).unwrap_or(0).max(0);
        let mut num = Poly::zero();
        for k in 0..=top {
            let c = p.coefficient_of(&u, k);
            num += &c * &self.den.pow((top - k) as u32);
        }
        RationalFn::new(num, self.den.pow(top as u32))
    }

    fn substitute_atoms(&self, p: &Poly) -> Result<Poly> {
        p.substitute_with(|a| match a {
            Atom::Vertex { genus, valence } => Some(self.vertex_value(*genus, valence)),
            Atom::Kappa(0, 0) => Some(self.kappa_entry(1, 1)),
            Atom::Kappa(i, j) => Some(self.kappa_entry(*i, *j)),
            _ => None,
        })
    }

    /// Evaluate a polynomial in vertex symbols and propagators.
    pub fn evaluate(&self, p: &Poly) -> Result<RationalFn> {
        self.clear_inverse(&self.substitute_atoms(p)?)
    }

    /// Ŵ_g evaluated on the preset.
    pub fn free_energy(&self, g: u32) -> Result<RationalFn> {
        self.evaluate(&realized_free_energy(g, &FeynmanContext::new(self.n_labels)?)?)
    }

    /// Whether d kappa/dt_k = kappa (d_k Hess F_0) kappa holds exactly.
    pub fn check_constraint(&self) -> Result<bool> {
        let n = self.n_labels;
        let u = inverse_atom();
        for k in 1..=n {
            // d(1/den) = -(1/den)^2 d den
            let dden = self.derivations[k as usize - 1].apply(&self.den);
            let rule = (&x(u.clone()).pow(2) * &dden).scale(&rat(-1, 1));
            let dk = self.derivations[k as usize - 1].clone().with_rule(u.clone(), rule);
            for i in 1..=n {
                for j in 1..=n {
                    let lhs = dk.apply(&self.kappa_entry(i, j));
                    let mut rhs = Poly::zero();
                    for l in 1..=n {
                        for m in 1..=n {
                            let mut v = vec![0; n as usize];
                            v[(k - 1) as usize] += 1;
                            v[(l - 1) as usize] += 1;
                            v[(m - 1) as usize] += 1;
                            let f3 = self.vertex_value(0, &v);
                            rhs += &(&self.kappa_entry(i, l) * &f3) * &self.kappa_entry(m, j);
                        }
                    }
                    if self.clear_inverse(&lhs)? != self.clear_inverse(&rhs)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constraints_hold() {
        assert!(PropagatorPreset::a1().check_constraint().unwrap());
        assert!(PropagatorPreset::p1().check_constraint().unwrap());
    }

    #[test]
    fn a1_genus_two() {
        let w2 = PropagatorPreset::a1().free_energy(2).unwrap();
        let expected = RationalFn::constant(rat(5, 24))
            .div(&RationalFn::from_poly((&x(Atom::CoordTBar(0)) - &x(Atom::CoordTee(0))).pow(3)))
            .unwrap();
        assert_eq!(w2, expected);
    }

    #[test]
    fn p1_genus_two_evaluates() {
        let p = PropagatorPreset::p1();
        let w2 = p.free_energy(2).unwrap();
        assert!(!w2.is_zero());
    }
}
