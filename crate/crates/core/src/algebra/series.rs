use num_traits::{One, Zero};

use super::atom::Atom;
use super::monomial::Monomial;
use super::poly::Poly;
use super::rational::{int, Rational};
use crate::error::Error;

/// Multivariate power series truncated at a total degree in the graded
/// variables. Atoms outside `variables` are carried as coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    variables: Vec<Atom>,
    cutoff: i64,
    terms: Poly,
}

impl TruncatedSeries {
    pub fn new(variables: Vec<Atom>, cutoff: i64, p: &Poly) -> TruncatedSeries {
        let mut s = TruncatedSeries { variables, cutoff, terms: Poly::zero() };
        s.terms = s.truncate(p);
        s
    }

    pub fn zero(variables: Vec<Atom>, cutoff: i64) -> TruncatedSeries {
        TruncatedSeries { variables, cutoff, terms: Poly::zero() }
    }

    pub fn constant(variables: Vec<Atom>, cutoff: i64, q: Rational) -> TruncatedSeries {
        TruncatedSeries::new(variables, cutoff, &Poly::constant(q))
    }

    pub fn variable(variables: Vec<Atom>, cutoff: i64, a: Atom) -> TruncatedSeries {
        TruncatedSeries::new(variables, cutoff, &Poly::atom(a))
    }

    pub fn variables(&self) -> &[Atom] {
        &self.variables
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn poly(&self) -> &Poly {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn degree(&self, m: &Monomial) -> i64 {
        m.degree_in(&self.variables)
    }

    fn truncate(&self, p: &Poly) -> Poly {
        p.filter(|m| m.degree_in(&self.variables) <= self.cutoff)
    }

    fn like(&self, p: Poly) -> TruncatedSeries {
        TruncatedSeries { variables: self.variables.clone(), cutoff: self.cutoff, terms: p }
    }

    /// The part of graded degree exactly `d`.
    pub fn homogeneous(&self, d: i64) -> Poly {
        self.terms.filter(|m| m.degree_in(&self.variables) == d)
    }

    pub fn add(&self, o: &TruncatedSeries) -> TruncatedSeries {
        self.like(&self.terms + &o.terms)
    }

    pub fn sub(&self, o: &TruncatedSeries) -> TruncatedSeries {
        self.like(&self.terms - &o.terms)
    }

    pub fn scale(&self, q: &Rational) -> TruncatedSeries {
        self.like(self.terms.scale(q))
    }

    pub fn mul(&self, o: &TruncatedSeries) -> TruncatedSeries {
        let mut out = Poly::zero();
        let vars = &self.variables;
        let right: Vec<(i64, &Monomial, &Rational)> = o.terms.terms().map(|(m, c)| (m.degree_in(vars), m, c)).collect();
        for (ma, ca) in self.terms.terms() {
            let da = ma.degree_in(vars);
            for (db, mb, cb) in &right {
                if da + db <= self.cutoff {
                    out.add_term(ma.mul(mb), ca * *cb);
                }
            }
        }
        self.like(out)
    }

    pub fn pow(&self, k: u32) -> TruncatedSeries {
        let mut acc = self.like(Poly::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    fn min_degree(&self) -> Option<i64> {
        self.terms.terms().map(|(m, _)| self.degree(m)).min()
    }

    /// exp(s) for s without a degree-0 part.
    pub fn exp(&self) -> Result<TruncatedSeries, Error> {
        if !self.homogeneous(0).is_zero() || self.min_degree().is_some_and(|d| d < 0) {
            return Err(Error::Domain("exp needs a series without constant term".into()));
        }
        let mut acc = self.like(Poly::one());
        let mut power = self.like(Poly::one());
        let mut k = 1i64;
        while k <= self.cutoff.max(0) {
            power = power.mul(self).scale(&(Rational::one() / int(k)));
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
            k += 1;
        }
        Ok(acc)
    }

    /// log(s) for s with degree-0 part exactly 1.
    pub fn log(&self) -> Result<TruncatedSeries, Error> {
        if self.homogeneous(0) != Poly::one() || self.min_degree().is_some_and(|d| d < 0) {
            return Err(Error::Domain("log needs a series with constant term 1".into()));
        }
        let u = self.sub(&self.like(Poly::one()));
        let mut acc = self.like(Poly::zero());
        let mut power = self.like(Poly::one());
        for k in 1..=self.cutoff.max(0) {
            power = power.mul(&u);
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { int(1) } else { int(-1) };
            acc = acc.add(&power.scale(&(sign / int(k))));
        }
        Ok(acc)
    }

    /// Substitute a series for one atom. The substituted series must have
    /// positive order when `var` is graded, so truncation stays consistent.
    pub fn compose(&self, var: &Atom, sub: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
        if self.variables.contains(var) && sub.min_degree().is_some_and(|d| d < 1) {
            return Err(Error::Domain(format!("substitution for {} must have positive order", var)));
        }
        let top = self.terms.max_degree_in(var).unwrap_or(0);
        if self.terms.min_degree_in(var).unwrap_or(0) < 0 {
            return Err(Error::UnsupportedInput(format!("negative power of {}", var)));
        }
        let mut powers = vec![self.like(Poly::one())];
        for i in 1..=top.max(0) as usize {
            powers.push(powers[i - 1].mul(sub));
        }
        let mut out = self.like(Poly::zero());
        for (m, c) in self.terms.terms() {
            let e = m.exponent(var) as usize;
            let base = self.like(Poly::term(m.without(var), c.clone()));
            out = out.add(&base.mul(&powers[e]));
        }
        Ok(out)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        let c = self.terms.coefficient(m);
        if c.is_zero() {
            Rational::zero()
        } else {
            c
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn t() -> Atom {
        Atom::named("t", 0)
    }

    #[test]
    fn log_one_is_zero() {
        let s = TruncatedSeries::constant(vec![t()], 5, int(1));
        assert!(s.log().unwrap().is_zero());
    }

    #[test]
    fn exp_log_identity() {
        let x = Poly::atom(t());
        let p = &(&Poly::one() + &x.scale(&rat(3, 2))) + &x.pow(3).scale(&rat(-2, 7));
        let s = TruncatedSeries::new(vec![t()], 6, &p);
        assert_eq!(s.log().unwrap().exp().unwrap(), s);
    }

    #[test]
    fn wrong_constant_term() {
        let s = TruncatedSeries::constant(vec![t()], 3, int(2));
        assert!(s.log().is_err());
        assert!(s.exp().is_err());
    }
}
