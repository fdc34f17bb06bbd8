use std::cmp::Ordering;
use std::fmt;

use super::atom::Atom;

/// A Laurent monomial: sorted atoms with non-zero integer exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Atom, i32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(a: Atom) -> Monomial {
        Monomial(vec![(a, 1)])
    }

    pub fn power(a: Atom, e: i32) -> Monomial {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(a, e)])
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Atom, i32)>) -> Monomial {
        let mut m = Monomial::one();
        for (a, e) in pairs {
            m = m.mul(&Monomial::power(a, e));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Atom, i32)] {
        &self.0
    }

    pub fn exponent(&self, a: &Atom) -> i32 {
        match self.0.binary_search_by(|(x, _)| x.cmp(a)) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|(_, e)| *e as i64).sum()
    }

    /// Total degree counting only the given atoms.
    pub fn degree_in(&self, vars: &[Atom]) -> i64 {
        self.0.iter().filter(|(a, _)| vars.contains(a)).map(|(_, e)| *e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0.clone(), e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|(a, e)| (a.clone(), -e)).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|(a, e)| (a.clone(), e * k)).collect())
    }

    /// The monomial with `a` removed entirely.
    pub fn without(&self, a: &Atom) -> Monomial {
        Monomial(self.0.iter().filter(|(x, _)| x != a).cloned().collect())
    }

    pub fn with_exponent(&self, a: &Atom, e: i32) -> Monomial {
        self.without(a).mul(&Monomial::power(a.clone(), e))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> =
            self.0.iter().map(|(a, e)| if *e == 1 { a.to_string() } else { format!("{}^{}", a, e) }).collect();
        write!(f, "{}", parts.join("*"))
    }
}
