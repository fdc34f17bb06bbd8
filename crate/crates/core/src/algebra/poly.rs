use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::atom::Atom;
use super::monomial::Monomial;
use super::rational::{int, Rational};
use crate::error::Error;

/// Sparse Laurent polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(Rational::one())
    }

    pub fn constant(q: Rational) -> Poly {
        Poly::term(Monomial::one(), q)
    }

    pub fn atom(a: Atom) -> Poly {
        Poly::term(Monomial::var(a), Rational::one())
    }

    pub fn term(m: Monomial, q: Rational) -> Poly {
        let mut p = Poly::zero();
        p.add_term(m, q);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Constant polynomial value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, q: Rational) {
        if q.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(q);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += q;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, q: &Rational) -> Poly {
        if q.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// All atoms occurring in the polynomial, sorted.
    pub fn atoms(&self) -> Vec<Atom> {
        let mut v: Vec<Atom> = self.terms.keys().flat_map(|m| m.factors().iter().map(|(a, _)| a.clone())).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn max_degree_in(&self, a: &Atom) -> Option<i32> {
        self.terms.keys().map(|m| m.exponent(a)).max()
    }

    pub fn min_degree_in(&self, a: &Atom) -> Option<i32> {
        self.terms.keys().map(|m| m.exponent(a)).min()
    }

    /// Coefficient of `a^k`, as a polynomial in the remaining atoms.
    pub fn coefficient_of(&self, a: &Atom, k: i32) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if m.exponent(a) == k {
                out.add_term(m.without(a), c.clone());
            }
        }
        out
    }

    /// Partial derivative with respect to a single atom.
    pub fn partial(&self, a: &Atom) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(a);
            if e != 0 {
                out.add_term(m.with_exponent(a, e - 1), c * int(e as i64));
            }
        }
        out
    }

    /// Term-wise antiderivative in `a`, plus a constant of integration.
    pub fn integrate(&self, a: &Atom, constant: &Poly) -> Result<Poly, Error> {
        let mut out = constant.clone();
        for (m, c) in &self.terms {
            let e = m.exponent(a);
            if e < 0 {
                return Err(Error::UnsupportedInput(format!("cannot integrate negative power of {}", a)));
            }
            out.add_term(m.with_exponent(a, e + 1), c / int(e as i64 + 1));
        }
        Ok(out)
    }

    /// Substitute polynomials for atoms. Negative exponents are only allowed
    /// on atoms that are left alone.
    pub fn substitute_with<F>(&self, f: F) -> Result<Poly, Error>
    where
        F: Fn(&Atom) -> Option<Poly>,
    {
        let mut cache: BTreeMap<(Atom, i32), Poly> = BTreeMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut acc = Poly::constant(c.clone());
            for (a, e) in m.factors() {
                match f(a) {
                    None => kept = kept.mul(&Monomial::power(a.clone(), *e)),
                    Some(img) => {
                        if *e < 0 {
                            return Err(Error::UnsupportedInput(format!("negative power of substituted atom {}", a)));
                        }
                        let key = (a.clone(), *e);
                        let pw = cache.entry(key).or_insert_with(|| img.pow(*e as u32));
                        acc = &acc * &*pw;
                    }
                }
                if acc.is_zero() {
                    break;
                }
            }
            out += acc.mul_monomial(&kept);
        }
        Ok(out)
    }

    pub fn map_coefficients<F: Fn(&Rational) -> Rational>(&self, f: F) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Keep only terms accepted by the predicate.
    pub fn filter<F: Fn(&Monomial) -> bool>(&self, keep: F) -> Poly {
        Poly { terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let atoms: serde_json::Map<String, Value> =
                    m.factors().iter().map(|(a, e)| (a.to_string(), json!(e))).collect();
                json!({"coef": c.to_string(), "atoms": atoms})
            })
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Poly, Error> {
        let bad = || Error::Parse("malformed polynomial JSON".to_string());
        let mut out = Poly::zero();
        for t in v.get("terms").and_then(Value::as_array).ok_or_else(bad)? {
            let coef: Rational = t.get("coef").and_then(Value::as_str).ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let mut m = Monomial::one();
            if let Some(atoms) = t.get("atoms").and_then(Value::as_object) {
                for (k, e) in atoms {
                    let a: Atom = k.parse()?;
                    let e = e.as_i64().ok_or_else(bad)? as i32;
                    m = m.mul(&Monomial::power(a, e));
                }
            }
            out.add_term(m, coef);
        }
        Ok(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", abs, m)?;
            }
        }
        Ok(())
    }
}

impl From<Atom> for Poly {
    fn from(a: Atom) -> Poly {
        Poly::atom(a)
    }
}

impl From<Rational> for Poly {
    fn from(q: Rational) -> Poly {
        Poly::constant(q)
    }
}

impl AddAssign<Poly> for Poly {
    fn add_assign(&mut self, rhs: Poly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += rhs;
        self
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn k() -> Poly {
        Poly::atom(Atom::scalar_kappa())
    }

    #[test]
    fn additive_inverse() {
        assert!((&k() + &(-k())).is_zero());
    }

    #[test]
    fn scaling_theta_term() {
        let f3 = Poly::atom(Atom::f(0, 3));
        let p = (&f3.pow(2) * &k().pow(3)).scale(&rat(5, 24));
        assert_eq!(p.to_string(), "5/24*F[g=0,v=(3)]^2*kappa^3");
    }

    #[test]
    fn integrate_power_rule() {
        let a = Atom::scalar_kappa();
        let p = k().pow(2).integrate(&a, &Poly::zero()).unwrap();
        assert_eq!(p, k().pow(3).scale(&rat(1, 3)));
        assert_eq!(p.partial(&a), k().pow(2));
        let neg = Poly::term(Monomial::power(a.clone(), -1), rat(1, 1));
        assert!(neg.integrate(&a, &Poly::zero()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = &(&Poly::atom(Atom::CoordI(2)).pow(2) * &k().pow(3)).scale(&rat(5, 24))
            + &Poly::atom(Atom::CoordC).pow(2).scale(&rat(-1, 3));
        assert_eq!(Poly::from_json(&p.to_json()).unwrap(), p);
        let text = p.to_json().to_string();
        assert!(text.contains("\"I[2]\":2"));
    }
}
