//! Machine checks of the recursions satisfied by the abstract free energies.
//!
//! Each `*_sides` function returns both sides of an identity as graph sums;
//! the `verify_*` wrappers compare them.

use crate::algebra::rational::{binomial, int, rat};
use crate::algebra::Rational;
use crate::error::Result;
use crate::graphs::enumerate::check_stable_range;

use super::free_energy::FreeEnergies;
use super::graphsum::GraphSum;
use super::ops::{op_attach, op_attach_i, op_cut, op_cut_ij, op_d, op_d_i};

fn stable(g: u32, n: u32) -> bool {
    2 * g as i64 - 2 + n as i64 > 0
}

/// K F̂_{g,n} against C(n+2,2) F̂_{g-1,n+2} + 1/2 sum (n1 F̂_{g1,n1})(n2 F̂_{g2,n2}).
pub fn cut_recursion_sides(fe: &mut FreeEnergies, g: u32, n: u32) -> Result<(GraphSum, GraphSum)> {
    check_stable_range(g, n)?;
    let lhs = op_cut(&fe.get(g, n)?)?;
    let mut rhs = GraphSum::zero();
    if g >= 1 {
        let c = Rational::from_integer(binomial(n as i64 + 2, 2));
        rhs = rhs.add(&fe.get(g - 1, n + 2)?.scale(&c));
    }
    let total = n + 2;
    for g1 in 0..=g {
        for n1 in 1..total {
            let (g2, n2) = (g - g1, total - n1);
            if stable(g1, n1) && stable(g2, n2) {
                let a = fe.get(g1, n1)?.scale(&int(n1 as i64));
                let b = fe.get(g2, n2)?.scale(&int(n2 as i64));
                rhs = rhs.add(&a.mul(&b).scale(&rat(1, 2)));
            }
        }
    }
    Ok((lhs, rhs))
}

pub fn verify_cut_recursion(g: u32, n: u32) -> Result<bool> {
    let (l, r) = cut_recursion_sides(&mut FreeEnergies::new(), g, n)?;
    Ok(l == r)
}

/// D F̂_{g,n} against (n+1) F̂_{g,n+1}.
pub fn lemma_d_sides(fe: &mut FreeEnergies, g: u32, n: u32) -> Result<(GraphSum, GraphSum)> {
    check_stable_range(g, n)?;
    Ok((op_d(&fe.get(g, n)?)?, fe.get(g, n + 1)?.scale(&int(n as i64 + 1))))
}

pub fn verify_lemma_d(g: u32, n: u32) -> Result<bool> {
    let (l, r) = lemma_d_sides(&mut FreeEnergies::new(), g, n)?;
    Ok(l == r)
}

/// D F̂_{g,n}, with D F̂_1 = F̂_{1,1} and D F̂_{0,2} = 3 F̂_{0,3}; the cells
/// (0,0) and (0,1) do not contribute.
fn d_cell(fe: &mut FreeEnergies, g: u32, n: u32) -> Result<Option<GraphSum>> {
    Ok(match (g, n) {
        (0, 0) | (0, 1) => None,
        (1, 0) => Some(fe.get(1, 1)?),
        (0, 2) => Some(fe.get(0, 3)?.scale(&int(3))),
        _ => Some(op_d(&fe.get(g, n)?)?),
    })
}

/// D D F̂_{g,n}, with D D F̂_{0,1} = 6 F̂_{0,3}.
fn dd_cell(fe: &mut FreeEnergies, g: u32, n: u32) -> Result<Option<GraphSum>> {
    Ok(match (g, n) {
        (0, 0) => None,
        (0, 1) => Some(fe.get(0, 3)?.scale(&int(6))),
        _ => match d_cell(fe, g, n)? {
            Some(s) => Some(op_d(&s)?),
            None => None,
        },
    })
}

/// K F̂_{g,n} against 1/2 (D D F̂_{g-1,n} + sum D F̂_{g1,n1} D F̂_{g2,n2}).
pub fn quadratic_recursion_sides(fe: &mut FreeEnergies, g: u32, n: u32) -> Result<(GraphSum, GraphSum)> {
    check_stable_range(g, n)?;
    let lhs = op_cut(&fe.get(g, n)?)?;
    let mut rhs = GraphSum::zero();
    if g >= 1 {
        if let Some(s) = dd_cell(fe, g - 1, n)? {
            rhs = rhs.add(&s);
        }
    }
    for g1 in 0..=g {
        for n1 in 0..=n {
            let (g2, n2) = (g - g1, n - n1);
            let (Some(a), Some(b)) = (d_cell(fe, g1, n1)?, d_cell(fe, g2, n2)?) else { continue };
            rhs = rhs.add(&a.mul(&b));
        }
    }
    Ok((lhs, rhs.scale(&rat(1, 2))))
}

pub fn verify_quadratic_recursion(g: u32, n: u32) -> Result<bool> {
    let (l, r) = quadratic_recursion_sides(&mut FreeEnergies::new(), g, n)?;
    Ok(l == r)
}

/// The closed-string form: K F̂_g against
/// 1/2 (D ∂ F̂_{g-1} + sum_{r=1}^{g-1} ∂F̂_r ∂F̂_{g-r}), with ∂F̂_1 = F̂_{1,1}.
pub fn closed_recursion_sides(fe: &mut FreeEnergies, g: u32) -> Result<(GraphSum, GraphSum)> {
    check_stable_range(g, 0)?;
    let attach_cell = |fe: &mut FreeEnergies, r: u32| -> Result<GraphSum> {
        if r == 1 {
            fe.get(1, 1)
        } else {
            op_attach(&fe.get(r, 0)?)
        }
    };
    let lhs = op_cut(&fe.get(g, 0)?)?;
    let mut rhs = op_d(&attach_cell(fe, g - 1)?)?;
    for r in 1..g {
        let a = attach_cell(fe, r)?;
        let b = attach_cell(fe, g - r)?;
        rhs = rhs.add(&a.mul(&b));
    }
    Ok((lhs, rhs.scale(&rat(1, 2))))
}

fn add_unit(l: &[u32], j: u32) -> Vec<u32> {
    let mut v = l.to_vec();
    v[j as usize - 1] += 1;
    v
}

/// D_j F̂_{g;l}, with D_j F̂_{1;0} = F̂_{1;e_j} and
/// D_j F̂_{0;l} = (l_j+1) F̂_{0;l+e_j} for |l| = 2; cells (0;l) with |l| <= 1
/// do not contribute.
fn d_cell_labelled(fe: &mut FreeEnergies, g: u32, l: &[u32], j: u32) -> Result<Option<GraphSum>> {
    let n_labels = l.len() as u32;
    let size: u32 = l.iter().sum();
    Ok(match (g, size) {
        (0, 0) | (0, 1) => None,
        (1, 0) => Some(fe.get_labelled(1, &add_unit(l, j))?),
        (0, 2) => Some(fe.get_labelled(0, &add_unit(l, j))?.scale(&int(l[j as usize - 1] as i64 + 1))),
        _ => Some(op_d_i(&fe.get_labelled(g, l)?, j, n_labels)?),
    })
}

/// D_i D_j F̂_{g;l}, with D_i D_j F̂_{0;l} = (l_j+1) D_i F̂_{0;l+e_j} for |l| = 1.
fn dd_cell_labelled(fe: &mut FreeEnergies, g: u32, l: &[u32], i: u32, j: u32) -> Result<Option<GraphSum>> {
    let n_labels = l.len() as u32;
    let size: u32 = l.iter().sum();
    if (g, size) == (0, 0) {
        return Ok(None);
    }
    if (g, size) == (0, 1) {
        let inner = d_cell_labelled(fe, 0, &add_unit(l, j), i)?.expect("stable cell");
        return Ok(Some(inner.scale(&int(l[j as usize - 1] as i64 + 1))));
    }
    Ok(match d_cell_labelled(fe, g, l, j)? {
        Some(s) => Some(op_d_i(&s, i, n_labels)?),
        None => None,
    })
}

fn splits(l: &[u32]) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut out = vec![(Vec::new(), Vec::new())];
    for &x in l {
        let mut next = Vec::new();
        for (p, q) in &out {
            for a in 0..=x {
                let mut p2 = p.clone();
                let mut q2 = q.clone();
                p2.push(a);
                q2.push(x - a);
                next.push((p2, q2));
            }
        }
        out = next;
    }
    out
}

/// K_ij F̂_{g;l} against D_i D_j F̂_{g-1;l} + sum D_i F̂_{g1;p} D_j F̂_{g2;q},
/// halved when i = j. For l = 0 the operators D reduce to ∂.
pub fn labelled_sides(fe: &mut FreeEnergies, g: u32, l: &[u32], i: u32, j: u32) -> Result<(GraphSum, GraphSum)> {
    let n_labels = l.len() as u32;
    let size: u32 = l.iter().sum();
    check_stable_range(g, size)?;
    let lhs = op_cut_ij(&fe.get_labelled(g, l)?, i, j, n_labels)?;
    let mut rhs = GraphSum::zero();
    if g >= 1 {
        if let Some(s) = dd_cell_labelled(fe, g - 1, l, i, j)? {
            rhs = rhs.add(&s);
        }
    }
    for g1 in 0..=g {
        for (p, q) in splits(l) {
            let Some(a) = d_cell_labelled(fe, g1, &p, i)? else { continue };
            let Some(b) = d_cell_labelled(fe, g - g1, &q, j)? else { continue };
            rhs = rhs.add(&a.mul(&b));
        }
    }
    if i == j {
        rhs = rhs.scale(&rat(1, 2));
    }
    Ok((lhs, rhs))
}

pub fn verify_recursion_labelled(g: u32, leg_counts: &[u32], i: u32, j: u32) -> Result<bool> {
    let (l, r) = labelled_sides(&mut FreeEnergies::new(), g, leg_counts, i, j)?;
    Ok(l == r)
}

/// D_j F̂_{g;l} against (l_j+1) F̂_{g;l+e_j}.
pub fn labelled_lemma_sides(fe: &mut FreeEnergies, g: u32, l: &[u32], j: u32) -> Result<(GraphSum, GraphSum)> {
    let size: u32 = l.iter().sum();
    check_stable_range(g, size)?;
    let lhs = op_d_i(&fe.get_labelled(g, l)?, j, l.len() as u32)?;
    let rhs = fe.get_labelled(g, &add_unit(l, j))?.scale(&int(l[j as usize - 1] as i64 + 1));
    Ok((lhs, rhs))
}

/// ∂_i on F̂_{g;0}: used by the closed-string labelled recursion.
pub fn attach_labelled(fe: &mut FreeEnergies, g: u32, n_labels: u32, i: u32) -> Result<GraphSum> {
    let zero = vec![0; n_labels as usize];
    if g == 1 {
        return fe.get_labelled(1, &add_unit(&zero, i));
    }
    op_attach_i(&fe.get_labelled(g, &zero)?, i, n_labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_identities() {
        let mut fe = FreeEnergies::new();
        for (g, n) in [(0, 3), (0, 4), (1, 1), (1, 2), (2, 0)] {
            let (l, r) = cut_recursion_sides(&mut fe, g, n).unwrap();
            assert_eq!(l, r, "cut recursion {:?}", (g, n));
            let (l, r) = quadratic_recursion_sides(&mut fe, g, n).unwrap();
            assert_eq!(l, r, "quadratic recursion {:?}", (g, n));
            let (l, r) = lemma_d_sides(&mut fe, g, n).unwrap();
            assert_eq!(l, r, "lemma {:?}", (g, n));
        }
        let (l, r) = closed_recursion_sides(&mut fe, 2).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn labelled_genus_two() {
        let mut fe = FreeEnergies::new();
        for (i, j) in [(1, 1), (1, 2), (2, 2)] {
            let (l, r) = labelled_sides(&mut fe, 2, &[0, 0], i, j).unwrap();
            assert_eq!(l, r, "{:?}", (i, j));
        }
    }
}
