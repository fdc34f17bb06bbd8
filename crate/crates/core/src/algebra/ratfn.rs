use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::atom::Atom;
use super::derivation::Derivation;
use super::monomial::Monomial;
use super::poly::Poly;
use super::rational::Rational;
use crate::error::Error;

/// Quotient of polynomials, normalized so that no atom appears with a
/// negative exponent, common monomial factors are cancelled, the
/// denominator is monic under the monomial order, and (for functions of a
/// single atom) numerator and denominator are coprime.
#[derive(Clone, Debug)]
pub struct RationalFn {
    num: Poly,
    den: Poly,
}

impl RationalFn {
    pub fn new(num: Poly, den: Poly) -> Result<RationalFn, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(normalize(num, den))
    }

    pub fn from_poly(p: Poly) -> RationalFn {
        normalize(p, Poly::one())
    }

    pub fn constant(q: Rational) -> RationalFn {
        RationalFn::from_poly(Poly::constant(q))
    }

    pub fn atom(a: Atom) -> RationalFn {
        RationalFn::from_poly(Poly::atom(a))
    }

    pub fn zero() -> RationalFn {
        RationalFn { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> RationalFn {
        RationalFn { num: Poly::one(), den: Poly::one() }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The numerator when the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly> {
        if self.den == Poly::one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn add(&self, o: &RationalFn) -> RationalFn {
        if self.den == o.den {
            return normalize(&self.num + &o.num, self.den.clone());
        }
        normalize(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }

    pub fn sub(&self, o: &RationalFn) -> RationalFn {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RationalFn {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, o: &RationalFn) -> RationalFn {
        normalize(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn scale(&self, q: &Rational) -> RationalFn {
        normalize(self.num.scale(q), self.den.clone())
    }

    pub fn inv(&self) -> Result<RationalFn, Error> {
        RationalFn::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &RationalFn) -> Result<RationalFn, Error> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<RationalFn, Error> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(normalize(base.num.pow(k), base.den.pow(k)))
    }

    pub fn derive(&self, d: &Derivation) -> RationalFn {
        let n1 = d.apply(&self.num);
        let d1 = d.apply(&self.den);
        normalize(&(&n1 * &self.den) - &(&self.num * &d1), self.den.pow(2))
    }

    pub fn partial(&self, a: &Atom) -> RationalFn {
        let n1 = self.num.partial(a);
        let d1 = self.den.partial(a);
        normalize(&(&n1 * &self.den) - &(&self.num * &d1), self.den.pow(2))
    }

    /// Substitute rational functions for atoms.
    pub fn substitute(&self, assignment: &BTreeMap<Atom, RationalFn>) -> Result<RationalFn, Error> {
        substitute(&self.num, assignment)?.div(&substitute(&self.den, assignment)?)
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        (&self.num * &other.den) == (&other.num * &self.den)
    }
}

impl Eq for RationalFn {}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl From<Poly> for RationalFn {
    fn from(p: Poly) -> RationalFn {
        RationalFn::from_poly(p)
    }
}

/// Substitute rational functions for atoms of a polynomial.
pub fn substitute(p: &Poly, assignment: &BTreeMap<Atom, RationalFn>) -> Result<RationalFn, Error> {
    let mut cache: BTreeMap<(Atom, i32), RationalFn> = BTreeMap::new();
    // Accumulate over a common denominator per distinct denominator to keep
    // intermediate sizes small.
    let mut groups: BTreeMap<Vec<(Atom, i32)>, Poly> = BTreeMap::new();
    for (m, c) in p.terms() {
        let mut kept = Monomial::one();
        let mut subst: Vec<(Atom, i32)> = Vec::new();
        for (a, e) in m.factors() {
            if assignment.contains_key(a) {
                subst.push((a.clone(), *e));
            } else {
                kept = kept.mul(&Monomial::power(a.clone(), *e));
            }
        }
        *groups.entry(subst).or_default() += Poly::term(kept, c.clone());
    }
    let mut out = RationalFn::zero();
    for (subst, coeff) in groups {
        let mut acc = RationalFn::from_poly(coeff);
        for (a, e) in subst {
            let key = (a.clone(), e);
            if !cache.contains_key(&key) {
                let v = assignment[&a].pow(e)?;
                cache.insert(key.clone(), v);
            }
            acc = acc.mul(&cache[&key]);
        }
        out = out.add(&acc);
    }
    Ok(out)
}

fn normalize(num: Poly, den: Poly) -> RationalFn {
    if num.is_zero() {
        return RationalFn::zero();
    }
    let (mut num, mut den) = (num, den);
    // Clear negative exponents and cancel the common monomial factor.
    let mut atoms = num.atoms();
    atoms.extend(den.atoms());
    atoms.sort();
    atoms.dedup();
    let mut shift = Monomial::one();
    for a in &atoms {
        let m = num.min_degree_in(a).unwrap_or(0).min(den.min_degree_in(a).unwrap_or(0));
        if m != 0 {
            shift = shift.mul(&Monomial::power(a.clone(), -m));
        }
    }
    if !shift.is_one() {
        num = num.mul_monomial(&shift);
        den = den.mul_monomial(&shift);
    }
    let mut vars = num.atoms();
    vars.extend(den.atoms());
    vars.sort();
    vars.dedup();
    if vars.len() == 1 && den.as_constant().is_none() {
        let x = &vars[0];
        let g = univariate::gcd(&univariate::dense(&num, x), &univariate::dense(&den, x));
        if g.len() > 1 {
            num = univariate::sparse(&univariate::div_exact(&univariate::dense(&num, x), &g), x);
            den = univariate::sparse(&univariate::div_exact(&univariate::dense(&den, x), &g), x);
        }
    }
    let lead = den.leading().map(|(_, c)| c.clone()).unwrap_or_else(Rational::one);
    if !lead.is_one() {
        let inv = Rational::one() / lead;
        num = num.scale(&inv);
        den = den.scale(&inv);
    }
    RationalFn { num, den }
}

mod univariate {
    use super::*;

    pub fn dense(p: &Poly, x: &Atom) -> Vec<Rational> {
        let deg = p.max_degree_in(x).unwrap_or(0).max(0) as usize;
        let mut v = vec![Rational::zero(); deg + 1];
        for (m, c) in p.terms() {
            v[m.exponent(x) as usize] += c.clone();
        }
        trim(v)
    }

    pub fn sparse(v: &[Rational], x: &Atom) -> Poly {
        let mut p = Poly::zero();
        for (i, c) in v.iter().enumerate() {
            p.add_term(Monomial::power(x.clone(), i as i32), c.clone());
        }
        p
    }

    fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
        while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    }

    fn is_zero(v: &[Rational]) -> bool {
        v.iter().all(|c| c.is_zero())
    }

    /// Quotient and remainder.
    fn divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut r = a.to_vec();
        let db = b.len() - 1;
        let lb = b[db].clone();
        if r.len() < b.len() {
            return (vec![Rational::zero()], trim(r));
        }
        let mut q = vec![Rational::zero(); r.len() - db];
        for i in (0..q.len()).rev() {
            let c = &r[i + db] / &lb;
            if !c.is_zero() {
                for (j, bj) in b.iter().enumerate() {
                    r[i + j] -= &c * bj;
                }
            }
            q[i] = c;
        }
        (trim(q), trim(r))
    }

    pub fn div_exact(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        divmod(a, b).0
    }

    /// Monic gcd.
    pub fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !is_zero(&b) {
            let (_, r) = divmod(&a, &b);
            a = b;
            b = r;
        }
        let lead = a.last().cloned().unwrap_or_else(Rational::one);
        a.iter().map(|c| c / &lead).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn c() -> Poly {
        Poly::atom(Atom::CoordC)
    }

    #[test]
    fn normalization_is_canonical() {
        // (c^2 - 1)/(c - 1) built two ways equals c + 1 exactly.
        let a = RationalFn::new(&c().pow(2) - &Poly::one(), &c() - &Poly::one()).unwrap();
        let b = RationalFn::from_poly(&c() + &Poly::one());
        assert_eq!(a.num(), b.num());
        assert_eq!(a.den(), b.den());
        let x = RationalFn::new(Poly::constant(int(2)), c().scale(&int(6))).unwrap();
        let y = RationalFn::new(Poly::one(), c().scale(&int(3))).unwrap();
        assert_eq!(x.num(), y.num());
        assert_eq!(x.den(), y.den());
    }

    #[test]
    fn laurent_input_is_cleared() {
        let inv = Poly::term(Monomial::power(Atom::CoordC, -3), rat(5, 48));
        let f = RationalFn::from_poly(inv);
        assert_eq!(f.num(), &Poly::constant(rat(5, 48)));
        assert_eq!(f.den(), &c().pow(3));
    }

    #[test]
    fn division_by_zero() {
        assert!(RationalFn::new(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn substitution() {
        let mut asg = BTreeMap::new();
        asg.insert(Atom::scalar_kappa(), RationalFn::new(Poly::one(), c().scale(&int(2))).unwrap());
        let p = Poly::atom(Atom::scalar_kappa()).pow(3).scale(&rat(5, 6));
        let r = substitute(&p, &asg).unwrap();
        assert_eq!(r, RationalFn::new(Poly::constant(rat(5, 48)), c().pow(3)).unwrap());
    }
}
