use std::sync::Arc;

use crate::algebra::{int, Atom, Derivation, Monomial, Poly};
use crate::error::{Error, Result};

type VertexRule = Arc<dyn Fn(u32, &[u32]) -> Poly + Send + Sync>;

/// Feynman rules for an N-dimensional theory: vertex weights, propagator
/// atoms and the t-derivations compatible with the propagator constraint.
///
/// With one label the propagator is the scalar `kappa` and the vertex symbols
/// are F_g^{(n)}; otherwise the propagator entries are `kappa[i,j]` and
/// vertex symbols carry a valence vector of length N.
#[derive(Clone)]
pub struct FeynmanContext {
    n_labels: u32,
    vertex_rule: Option<VertexRule>,
    t: Vec<Derivation>,
}

impl std::fmt::Debug for FeynmanContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FeynmanContext")
            .field("n_labels", &self.n_labels)
            .field("vertex_rule", &self.vertex_rule.is_some())
            .finish()
    }
}

impl FeynmanContext {
    pub fn new(n_labels: u32) -> Result<FeynmanContext> {
        if n_labels == 0 {
            return Err(Error::Domain("need at least one label".into()));
        }
        let t = (1..=n_labels).map(|i| t_derivation(n_labels, i)).collect();
        Ok(FeynmanContext { n_labels, vertex_rule: None, t })
    }

    /// Replace the vertex weights F_g^{(v)} by other polynomials. The rule is
    /// applied when weights are read out, after all symbolic manipulation.
    pub fn with_vertex_rule<F>(mut self, f: F) -> FeynmanContext
    where
        F: Fn(u32, &[u32]) -> Poly + Send + Sync + 'static,
    {
        self.vertex_rule = Some(Arc::new(f));
        self
    }

    pub fn n_labels(&self) -> u32 {
        self.n_labels
    }

    pub fn kappa(&self, i: u32, j: u32) -> Atom {
        if self.n_labels == 1 {
            Atom::scalar_kappa()
        } else {
            Atom::kappa(i, j)
        }
    }

    /// Every propagator atom, `kappa[i,j]` with i <= j.
    pub fn kappa_atoms(&self) -> Vec<Atom> {
        let n = self.n_labels;
        (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).map(|(i, j)| self.kappa(i, j)).collect()
    }

    /// F_g with valence vector `v`.
    pub fn vertex(&self, genus: u32, v: &[u32]) -> Atom {
        Atom::vertex(genus, v)
    }

    /// F_g^{(e_a + e_b + ...)} for 1-based label indices.
    pub fn vertex_at(&self, genus: u32, labels: &[u32]) -> Atom {
        let mut v = vec![0; self.n_labels as usize];
        for &l in labels {
            v[l as usize - 1] += 1;
        }
        Atom::vertex(genus, &v)
    }

    /// The derivation d/dt_i (1-based).
    pub fn t_derivation(&self, i: u32) -> &Derivation {
        &self.t[i as usize - 1]
    }

    pub fn dt(&self, p: &Poly, i: u32) -> Poly {
        self.t_derivation(i).apply(p)
    }

    /// Apply the vertex rule, if any, to every vertex symbol of `p`.
    pub fn specialize(&self, p: &Poly) -> Result<Poly> {
        match &self.vertex_rule {
            None => Ok(p.clone()),
            Some(rule) => p.substitute_with(|a| match a {
                Atom::Vertex { genus, valence } => Some(rule(*genus, valence)),
                _ => None,
            }),
        }
    }
}

/// d/dt_i: raises the i-th valence of every vertex symbol and acts on the
/// propagator by d kappa_jk = sum_{l,m} kappa_jl kappa_km F_0^{(e_i+e_l+e_m)}.
fn t_derivation(n: u32, i: u32) -> Derivation {
    Derivation::new().with_family(move |a| match a {
        Atom::Vertex { genus, valence } => {
            let mut v = valence.clone();
            v[i as usize - 1] += 1;
            Some(Poly::atom(Atom::Vertex { genus: *genus, valence: v }))
        }
        Atom::Kappa(0, 0) if n == 1 => {
            let k = Atom::scalar_kappa();
            Some(Poly::term(Monomial::from_pairs(vec![(k, 2), (Atom::f(0, 3), 1)]), int(1)))
        }
        Atom::Kappa(j, k) if *j >= 1 => {
            let mut out = Poly::zero();
            for l in 1..=n {
                for m in 1..=n {
                    let mut v = vec![0; n as usize];
                    v[i as usize - 1] += 1;
                    v[l as usize - 1] += 1;
                    v[m as usize - 1] += 1;
                    let mono = Monomial::var(Atom::kappa(*j, l))
                        .mul(&Monomial::var(Atom::kappa(*k, m)))
                        .mul(&Monomial::var(Atom::vertex(0, &v)));
                    out.add_term(mono, int(1));
                }
            }
            Some(out)
        }
        _ => None,
    })
}
