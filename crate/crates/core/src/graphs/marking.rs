//! Forgetting leg markings.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::canon::canonicalize;
use super::enumerate::{enumerate_stable, EnumOptions};
use crate::algebra::rational::{factorial, Rational};
use crate::error::Result;

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// For every class with `k` unmarked legs, checks that the marked classes
/// over it (legs carrying distinct markers 1..k) satisfy
/// (1/k!) sum 1/|Aut(marked)| = 1/|Aut(unmarked)|.
pub fn verify_marking_identity(g: u32, k: u32) -> Result<bool> {
    let classes = enumerate_stable(g, k, EnumOptions::default())?;
    let kfact = Rational::from_integer(factorial(k as u64));
    for (rep, aut) in &classes {
        let mut marked: BTreeMap<_, u128> = BTreeMap::new();
        for p in permutations(k as usize) {
            let legs = rep.legs().to_vec();
            let gr = rep.map_labels(|h, _| legs.iter().position(|&x| x == h).map_or(0, |i| p[i] as u32 + 1));
            let (key, a) = canonicalize(&gr)?;
            marked.insert(key, a);
        }
        let mut sum = Rational::zero();
        for a in marked.values() {
            sum += Rational::new(1.into(), (*a).into());
        }
        if sum / &kfact != Rational::new(1.into(), (*aut).into()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert!(verify_marking_identity(0, 3).unwrap());
        assert!(verify_marking_identity(1, 1).unwrap());
        assert!(verify_marking_identity(2, 1).unwrap());
    }
}
