use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use super::atom::Atom;
use super::monomial::Monomial;
use super::poly::Poly;
use super::rational::int;

type AtomRule = Arc<dyn Fn(&Atom) -> Option<Poly> + Send + Sync>;

/// A derivation of the polynomial ring, given by its values on atoms and
/// extended by linearity and the Leibniz rule. Atoms without a rule are
/// constants.
///
/// Besides a finite rule table, a derivation may carry a rule for whole
/// families of atoms (for instance F_g^{(n)} -> F_g^{(n+1)} for every n).
#[derive(Clone, Default)]
pub struct Derivation {
    rules: BTreeMap<Atom, Poly>,
    family: Option<AtomRule>,
}

impl Derivation {
    pub fn new() -> Derivation {
        Derivation::default()
    }

    pub fn with_rule(mut self, a: Atom, image: Poly) -> Derivation {
        self.rules.insert(a, image);
        self
    }

    pub fn with_family<F>(mut self, f: F) -> Derivation
    where
        F: Fn(&Atom) -> Option<Poly> + Send + Sync + 'static,
    {
        self.family = Some(Arc::new(f));
        self
    }

    /// The partial derivative with respect to one atom.
    pub fn partial(a: Atom) -> Derivation {
        Derivation::new().with_rule(a, Poly::one())
    }

    pub fn on_atom(&self, a: &Atom) -> Option<Poly> {
        if let Some(p) = self.rules.get(a) {
            return Some(p.clone());
        }
        self.family.as_ref().and_then(|f| f(a))
    }

    pub fn apply(&self, p: &Poly) -> Poly {
        let mut images: BTreeMap<&Atom, Option<Poly>> = BTreeMap::new();
        let mut out = Poly::zero();
        for (m, c) in p.terms() {
            for (a, e) in m.factors() {
                let img = images.entry(a).or_insert_with(|| self.on_atom(a));
                let Some(img) = img else { continue };
                if img.is_zero() {
                    continue;
                }
                let rest = m.with_exponent(a, e - 1);
                let coeff = c * int(*e as i64);
                if coeff.is_zero() {
                    continue;
                }
                for (mi, ci) in img.terms() {
                    out.add_term(rest.mul(mi), &coeff * ci);
                }
            }
        }
        out
    }

    /// Sum of two derivations, evaluated lazily.
    pub fn plus(&self, other: &Derivation) -> Derivation {
        let (a, b) = (self.clone(), other.clone());
        Derivation::new().with_family(move |x| match (a.on_atom(x), b.on_atom(x)) {
            (None, None) => None,
            (Some(p), None) | (None, Some(p)) => Some(p),
            (Some(p), Some(q)) => Some(&p + &q),
        })
    }
}

impl std::fmt::Debug for Derivation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Derivation").field("rules", &self.rules).field("family", &self.family.is_some()).finish()
    }
}

/// Helper for rules that raise one exponent: `a -> b`.
pub fn shift_rule(to: Atom) -> Poly {
    Poly::term(Monomial::var(to), int(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn dt() -> Derivation {
        let k = Atom::scalar_kappa();
        let kk = Poly::atom(k.clone());
        Derivation::new().with_rule(k, &kk.pow(2) * &Poly::atom(Atom::f(0, 3))).with_family(|a| match a {
            Atom::Vertex { genus, valence } if valence.len() == 1 => Some(Poly::atom(Atom::f(*genus, valence[0] + 1))),
            _ => None,
        })
    }

    #[test]
    fn propagator_rule() {
        let k = Poly::atom(Atom::scalar_kappa());
        assert_eq!(dt().apply(&k), &k.pow(2) * &Poly::atom(Atom::f(0, 3)));
        assert!(dt().apply(&Poly::constant(rat(3, 2))).is_zero());
    }

    #[test]
    fn leibniz_example() {
        let k = Poly::atom(Atom::scalar_kappa());
        let f1 = Poly::atom(Atom::f(1, 1));
        let lhs = dt().apply(&(&f1 * &k));
        let rhs = &(&Poly::atom(Atom::f(1, 2)) * &k) + &(&(&f1 * &k.pow(2)) * &Poly::atom(Atom::f(0, 3)));
        assert_eq!(lhs, rhs);
    }
}
