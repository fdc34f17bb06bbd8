use std::collections::HashMap;

use crate::algebra::Rational;
use crate::error::Result;
use crate::graphs::{enumerate_keyed, Budget, EnumOptions};

use super::graphsum::GraphSum;

fn sum_of(
    classes: std::collections::BTreeMap<crate::graphs::CanonicalKey, (crate::graphs::StableGraph, u128)>,
) -> GraphSum {
    let mut s = GraphSum::zero();
    for (k, (g, a)) in classes {
        s.add_keyed(k, g, Rational::new(1.into(), a.into()));
    }
    s
}

/// F̂_{g,n}: sum of connected stable graphs of type (g, n) weighted by
/// 1/|Aut|. With `n_labels > 1` every leg labelling is included.
pub fn abstract_free_energy(g: u32, n: u32, n_labels: u32) -> Result<GraphSum> {
    let opts = EnumOptions { n_labels, ..EnumOptions::default() };
    Ok(sum_of(enumerate_keyed(g, n, opts, None, &Budget::from_env())?))
}

/// F̂_{g;l}: connected labelled graphs with `leg_counts[j-1]` legs labelled j.
pub fn abstract_free_energy_labelled(g: u32, leg_counts: &[u32]) -> Result<GraphSum> {
    let n: u32 = leg_counts.iter().sum();
    let opts = EnumOptions { n_labels: leg_counts.len() as u32, ..EnumOptions::default() };
    Ok(sum_of(enumerate_keyed(g, n, opts, Some(leg_counts), &Budget::from_env())?))
}

/// Memoized abstract free energies for repeated use by the verifiers.
#[derive(Default)]
pub struct FreeEnergies {
    unlabelled: HashMap<(u32, u32), GraphSum>,
    labelled: HashMap<(u32, Vec<u32>), GraphSum>,
}

impl FreeEnergies {
    pub fn new() -> FreeEnergies {
        FreeEnergies::default()
    }

    pub fn get(&mut self, g: u32, n: u32) -> Result<GraphSum> {
        if let Some(s) = self.unlabelled.get(&(g, n)) {
            return Ok(s.clone());
        }
        let s = abstract_free_energy(g, n, 1)?;
        self.unlabelled.insert((g, n), s.clone());
        Ok(s)
    }

    pub fn get_labelled(&mut self, g: u32, legs: &[u32]) -> Result<GraphSum> {
        let key = (g, legs.to_vec());
        if let Some(s) = self.labelled.get(&key) {
            return Ok(s.clone());
        }
        let s = abstract_free_energy_labelled(g, legs)?;
        self.labelled.insert(key, s.clone());
        Ok(s)
    }
}
