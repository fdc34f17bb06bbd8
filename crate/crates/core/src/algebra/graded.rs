use std::collections::BTreeMap;

use super::poly::Poly;

/// A genus expansion sum_g lambda^{2g-2} parts[g]; the grading parameter
/// itself is never an atom.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedFreeEnergy<T = Poly> {
    parts: BTreeMap<u32, T>,
}

impl<T> GradedFreeEnergy<T> {
    pub fn new() -> Self {
        GradedFreeEnergy { parts: BTreeMap::new() }
    }

    pub fn insert(&mut self, g: u32, value: T) {
        self.parts.insert(g, value);
    }

    pub fn get(&self, g: u32) -> Option<&T> {
        self.parts.get(&g)
    }

    pub fn genera(&self) -> impl Iterator<Item = u32> + '_ {
        self.parts.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &T)> {
        self.parts.iter().map(|(g, v)| (*g, v))
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl<T> FromIterator<(u32, T)> for GradedFreeEnergy<T> {
    fn from_iter<I: IntoIterator<Item = (u32, T)>>(iter: I) -> Self {
        GradedFreeEnergy { parts: iter.into_iter().collect() }
    }
}
