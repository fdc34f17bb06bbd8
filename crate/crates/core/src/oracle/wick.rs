use rayon::prelude::*;

use crate::algebra::rational::{factorial, odd_double_factorial};
use crate::algebra::{int, Atom, GradedFreeEnergy, Monomial, Poly, Rational, TruncatedSeries};
use crate::error::{Error, Result};
use crate::feynman::{realized_free_energy, FeynmanContext};

/// The formal expansion parameter.
pub fn lambda() -> Atom {
    Atom::named("lambda", 0)
}

/// A kind of vertex in a Wick expansion: its genus and valence vector, the
/// weight it contributes (before the 1/valence! factors), its power of
/// lambda, and a cost used to truncate the expansion.
#[derive(Clone, Debug)]
pub struct VertexType {
    pub genus: u32,
    pub valence: Vec<u32>,
    pub weight: Poly,
    pub lambda_power: i32,
    pub cost: u32,
}

/// One summand of the Wick expansion: a multiset of vertex types (index into
/// the type list, multiplicity), the symmetry factor 1/(prod m! (prod l!)^m)
/// and the sum over pairings of the typed half-edges.
#[derive(Clone, Debug)]
pub struct WickTerm {
    pub vertices: Vec<(usize, u32)>,
    pub symmetry: Rational,
    pub pairing: Poly,
}

/// Sum over perfect matchings of half-edges carrying labels with the given
/// counts, each matching weighted by the product of `kappa(i, j)` over its
/// pairs. Matchings with m_ij pairs of type {i,j} number
/// prod L_i! / (prod m_ii! 2^{m_ii} prod_{i<j} m_ij!).
pub fn pairing_polynomial(counts: &[u32], kappa: &dyn Fn(u32, u32) -> Atom) -> Poly {
    let n = counts.len();
    let total: u32 = counts.iter().sum();
    if total % 2 == 1 {
        return Poly::zero();
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut out = Poly::zero();
    let mut rest = counts.to_vec();
    let mut chosen = vec![0u32; pairs.len()];
    fn walk(
        k: usize,
        pairs: &[(usize, usize)],
        rest: &mut Vec<u32>,
        chosen: &mut Vec<u32>,
        counts: &[u32],
        kappa: &dyn Fn(u32, u32) -> Atom,
        out: &mut Poly,
    ) {
        if k == pairs.len() {
            if rest.iter().any(|&r| r != 0) {
                return;
            }
            let mut num = num_bigint::BigInt::from(1);
            for &c in counts {
                num *= factorial(c as u64);
            }
            let mut den = num_bigint::BigInt::from(1);
            let mut mono = Monomial::one();
            for (p, &(i, j)) in pairs.iter().enumerate() {
                let m = chosen[p];
                den *= factorial(m as u64);
                if i == j {
                    den *= num_bigint::BigInt::from(2).pow(m);
                }
                if m > 0 {
                    mono = mono.mul(&Monomial::power(kappa(i as u32 + 1, j as u32 + 1), m as i32));
                }
            }
            out.add_term(mono, Rational::new(num, den));
            return;
        }
        let (i, j) = pairs[k];
        // Once every pair involving label i has been chosen, i must be used up.
        let max = if i == j { rest[i] / 2 } else { rest[i].min(rest[j]) };
        for m in 0..=max {
            if i == j {
                rest[i] -= 2 * m;
            } else {
                rest[i] -= m;
                rest[j] -= m;
            }
            let last_for_i = pairs[k + 1..].iter().all(|&(a, _)| a != i);
            if !last_for_i || rest[i] == 0 {
                chosen[k] = m;
                walk(k + 1, pairs, rest, chosen, counts, kappa, out);
            }
            if i == j {
                rest[i] += 2 * m;
            } else {
                rest[i] += m;
                rest[j] += m;
            }
        }
        chosen[k] = 0;
    }
    walk(0, &pairs, &mut rest, &mut chosen, counts, kappa, &mut out);
    out
}

/// The pairing sum written as (1/(2^l l!)) sum over all orderings of the
/// half-edge labels `seq` of the product over consecutive pairs, computed
/// literally over (2l)! permutations. Only for cross-checking tiny cases.
pub fn pairing_permutation_sum(seq: &[u32], kappa: &dyn Fn(u32, u32) -> Atom) -> Result<Poly> {
    if seq.len() % 2 == 1 {
        return Ok(Poly::zero());
    }
    if seq.len() > 8 {
        return Err(Error::Resource(format!("{} half-edges is too many for the permutation sum", seq.len())));
    }
    let l = seq.len() / 2;
    let mut out = Poly::zero();
    let mut idx: Vec<usize> = (0..seq.len()).collect();
    permute(&mut idx, 0, &mut |p| {
        let mut mono = Monomial::one();
        for j in 0..l {
            mono = mono.mul(&Monomial::var(kappa(seq[p[2 * j]], seq[p[2 * j + 1]])));
        }
        out.add_term(mono, int(1));
    });
    let den = num_bigint::BigInt::from(2).pow(l as u32) * factorial(l as u64);
    Ok(out.scale(&Rational::new(1.into(), den)))
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

/// Number of perfect matchings of `n` points by direct recursion.
pub fn count_matchings(n: u32) -> u64 {
    if n == 0 {
        return 1;
    }
    if n % 2 == 1 {
        return 0;
    }
    (n as u64 - 1) * count_matchings(n - 2)
}

fn multisets(costs: &[u32], cap: u32) -> Vec<Vec<(usize, u32)>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(k: usize, costs: &[u32], cap: u32, cur: &mut Vec<(usize, u32)>, out: &mut Vec<Vec<(usize, u32)>>) {
        if k == costs.len() {
            out.push(cur.clone());
            return;
        }
        let max = cap.checked_div(costs[k]).unwrap_or(0);
        for m in 0..=max {
            if m > 0 {
                cur.push((k, m));
            }
            rec(k + 1, costs, cap - m * costs[k], cur, out);
            if m > 0 {
                cur.pop();
            }
        }
    }
    rec(0, costs, cap, &mut cur, &mut out);
    out
}

/// All summands of the expansion whose total cost is at most `cap`.
pub fn wick_terms(types: &[VertexType], cap: u32, kappa: &(dyn Fn(u32, u32) -> Atom + Sync)) -> Vec<WickTerm> {
    let costs: Vec<u32> = types.iter().map(|t| t.cost).collect();
    let n_labels = types.first().map(|t| t.valence.len()).unwrap_or(1);
    multisets(&costs, cap)
        .into_par_iter()
        .filter_map(|ms| {
            let mut counts = vec![0u32; n_labels];
            let mut den = num_bigint::BigInt::from(1);
            for &(k, m) in &ms {
                for (c, v) in counts.iter_mut().zip(&types[k].valence) {
                    *c += v * m;
                }
                den *= factorial(m as u64);
                for v in &types[k].valence {
                    den *= factorial(*v as u64).pow(m);
                }
            }
            let pairing = pairing_polynomial(&counts, kappa);
            if pairing.is_zero() {
                return None;
            }
            Some(WickTerm { vertices: ms, symmetry: Rational::new(1.into(), den), pairing })
        })
        .collect()
}

/// Sum of the Wick terms, with vertex weights and powers of lambda.
pub fn wick_expansion(types: &[VertexType], cap: u32, kappa: &(dyn Fn(u32, u32) -> Atom + Sync)) -> Poly {
    let lam = lambda();
    let parts: Vec<Poly> = wick_terms(types, cap, kappa)
        .into_par_iter()
        .map(|t| {
            let mut p = t.pairing.scale(&t.symmetry);
            let mut lp = 0;
            for &(k, m) in &t.vertices {
                p = &p * &types[k].weight.pow(m);
                lp += types[k].lambda_power * m as i32;
            }
            p.mul_monomial(&Monomial::power(lam.clone(), lp))
        })
        .collect();
    let mut out = Poly::zero();
    for p in parts {
        out += p;
    }
    out
}

fn valence_vectors(total: u32, n: usize) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in valence_vectors(total - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Stable vertex types F_g^{(v)} with 2g-2+|v| between 1 and `cap`.
pub fn stable_vertex_types(cap: u32, n_labels: u32) -> Vec<VertexType> {
    let mut out = Vec::new();
    for g in 0..=(cap + 2) / 2 {
        for l in 0..=cap + 2 {
            let w = 2 * g as i64 - 2 + l as i64;
            if w < 1 || w > cap as i64 {
                continue;
            }
            for v in valence_vectors(l, n_labels as usize) {
                out.push(VertexType {
                    genus: g,
                    valence: v.clone(),
                    weight: Poly::atom(Atom::vertex(g, &v)),
                    lambda_power: w as i32,
                    cost: w as u32,
                });
            }
        }
    }
    out
}

/// Ŵ_2..Ŵ_{g_max} read off from the logarithm of the normalized Gaussian
/// integral, expanded by Wick's theorem.
pub fn wick_free_energies(g_max: u32, n_labels: u32) -> Result<GradedFreeEnergy> {
    if g_max < 2 {
        return Err(Error::Domain(format!("g_max must be at least 2, got {}", g_max)));
    }
    let ctx = FeynmanContext::new(n_labels)?;
    let cap = 2 * g_max - 2;
    let types = stable_vertex_types(cap, n_labels);
    let kappa = move |i: u32, j: u32| ctx.kappa(i, j);
    let z = wick_expansion(&types, cap, &kappa);
    let lam = lambda();
    let series = TruncatedSeries::new(vec![lam.clone()], cap as i64, &z).log()?;
    let mut out = GradedFreeEnergy::new();
    for g in 2..=g_max {
        out.insert(g, series.poly().coefficient_of(&lam, 2 * g as i32 - 2));
    }
    Ok(out)
}

/// Whether the Wick oracle agrees with the graph-sum free energies.
pub fn oracle_equivalence(g_max: u32, n_labels: u32) -> Result<bool> {
    let ctx = FeynmanContext::new(n_labels)?;
    let wick = wick_free_energies(g_max, n_labels)?;
    for g in 2..=g_max {
        if wick.get(g) != Some(&realized_free_energy(g, &ctx)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The closed partition sum of topological 1D gravity up to `n_max`
/// propagators: sum over m with sum_j j m_j = 2n of
/// (2n-1)!!/prod((j!)^{m_j} m_j!) lambda^{2n-2 sum m_j} prod t_{j-1}^{m_j}.
pub fn one_d_partition_coefficients(n_max: u32) -> Poly {
    let lam = lambda();
    let mut out = Poly::zero();
    for n in 0..=n_max {
        for part in partitions(2 * n, 2 * n) {
            // part[j-1] = m_j
            let mut den = num_bigint::BigInt::from(1);
            let mut mono = Monomial::one();
            let mut parts = 0i32;
            for (idx, &m) in part.iter().enumerate() {
                if m == 0 {
                    continue;
                }
                let j = idx as u64 + 1;
                den *= factorial(j).pow(m) * factorial(m as u64);
                mono = mono.mul(&Monomial::power(Atom::CoordTee(idx as u32), m as i32));
                parts += m as i32;
            }
            let mono = mono.mul(&Monomial::power(lam.clone(), 2 * n as i32 - 2 * parts));
            out.add_term(mono, Rational::new(odd_double_factorial(n as u64), den));
        }
    }
    out
}

/// Multiplicity vectors m (m[j-1] = number of parts equal to j, j <= max)
/// of the partitions of `total`.
fn partitions(total: u32, max: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, j: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if j == 0 {
            return;
        }
        for m in (0..=rest / j).rev() {
            cur[j as usize - 1] = m;
            rec(rest - m * j, j - 1, cur, out);
        }
        cur[j as usize - 1] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0; max.max(1) as usize];
    rec(total, max, &mut cur, &mut out);
    out
}

/// The same partition sum from the generic Wick expansion, with one
/// genus-0 vertex type of each valence l >= 1 weighted by t_{l-1} and a
/// unit propagator.
pub fn one_d_wick_partition(n_max: u32) -> Poly {
    let types: Vec<VertexType> = (1..=2 * n_max)
        .map(|l| VertexType {
            genus: 0,
            valence: vec![l],
            weight: Poly::atom(Atom::CoordTee(l - 1)),
            lambda_power: l as i32 - 2,
            cost: l,
        })
        .collect();
    let unit = Atom::named("unit", 0);
    let kappa = move |_: u32, _: u32| unit.clone();
    let p = wick_expansion(&types, 2 * n_max, &kappa);
    p.substitute_with(|a| if *a == Atom::named("unit", 0) { Some(Poly::one()) } else { None })
        .expect("unit has no negative powers")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn k2(i: u32, j: u32) -> Atom {
        Atom::kappa(i, j)
    }

    #[test]
    fn pairings_match_permutation_sum() {
        let seqs: [&[u32]; 6] = [&[1, 1], &[1, 2], &[1, 1, 1, 1], &[1, 1, 2, 2], &[1, 2, 2, 2], &[1, 1, 1, 2, 2, 2]];
        for s in seqs {
            let counts = [s.iter().filter(|&&x| x == 1).count() as u32, s.iter().filter(|&&x| x == 2).count() as u32];
            assert_eq!(pairing_polynomial(&counts, &k2), pairing_permutation_sum(s, &k2).unwrap(), "{:?}", s);
        }
        for l in 0..=5u32 {
            let p = pairing_polynomial(&[2 * l], &|_, _| Atom::scalar_kappa());
            let q = Rational::from_integer(odd_double_factorial(l as u64));
            assert_eq!(p, Poly::term(Monomial::power(Atom::scalar_kappa(), l as i32), q));
            assert_eq!(num_bigint::BigInt::from(count_matchings(2 * l)), odd_double_factorial(l as u64));
        }
    }

    #[test]
    fn one_d_low_orders() {
        let z = one_d_partition_coefficients(1);
        let lam = lambda();
        let expected = &(&Poly::one()
            + &Poly::term(Monomial::from_pairs(vec![(Atom::CoordTee(0), 2), (lam, -2)]), rat(1, 2)))
            + &Poly::term(Monomial::var(Atom::CoordTee(1)), rat(1, 2));
        assert_eq!(z, expected);
        assert_eq!(one_d_wick_partition(3), one_d_partition_coefficients(3));
    }

    #[test]
    fn oracle_genus_two() {
        assert!(oracle_equivalence(2, 1).unwrap());
        let zero = wick_free_energies(2, 1)
            .unwrap()
            .get(2)
            .unwrap()
            .substitute_with(|a| matches!(a, Atom::Vertex { .. }).then(Poly::zero))
            .unwrap();
        assert!(zero.is_zero());
    }
}
