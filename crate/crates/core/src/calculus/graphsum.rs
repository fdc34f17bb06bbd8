use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::algebra::Rational;
use crate::error::Result;
use crate::graphs::{canonicalize, union_key, CanonicalKey, StableGraph};

/// Finite rational linear combination of isomorphism classes of stable
/// graphs, possibly disconnected.
#[derive(Clone, Debug, Default)]
pub struct GraphSum {
    terms: BTreeMap<CanonicalKey, (StableGraph, Rational)>,
}

impl GraphSum {
    pub fn zero() -> GraphSum {
        GraphSum::default()
    }

    pub fn graph(g: &StableGraph) -> Result<GraphSum> {
        let mut s = GraphSum::zero();
        s.add_graph(g.clone(), Rational::one())?;
        Ok(s)
    }

    /// The empty graph, unit of the product.
    pub fn unit() -> GraphSum {
        let g = StableGraph::empty();
        let (k, _) = canonicalize(&g).expect("empty graph");
        let mut terms = BTreeMap::new();
        terms.insert(k, (g, Rational::one()));
        GraphSum { terms }
    }

    pub fn add_graph(&mut self, g: StableGraph, c: Rational) -> Result<()> {
        let (k, _) = canonicalize(&g)?;
        self.add_keyed(k, g, c);
        Ok(())
    }

    pub(crate) fn add_keyed(&mut self, k: CanonicalKey, g: StableGraph, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(v) => {
                v.insert((g, c));
            }
            Entry::Occupied(mut o) => {
                o.get_mut().1 += c;
                if o.get().1.is_zero() {
                    o.remove();
                }
            }
        }
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

    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalKey, &StableGraph, &Rational)> {
        self.terms.iter().map(|(k, (g, c))| (k, g, c))
    }

    pub fn coefficient(&self, k: &CanonicalKey) -> Rational {
        self.terms.get(k).map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the class of `g`.
    pub fn coefficient_of(&self, g: &StableGraph) -> Result<Rational> {
        Ok(self.coefficient(&canonicalize(g)?.0))
    }

    /// Coefficients in canonical order.
    pub fn coefficients(&self) -> Vec<Rational> {
        self.terms.values().map(|(_, c)| c.clone()).collect()
    }

    pub fn add(&self, o: &GraphSum) -> GraphSum {
        let mut out = self.clone();
        for (k, (g, c)) in &o.terms {
            out.add_keyed(k.clone(), g.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &GraphSum) -> GraphSum {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, q: &Rational) -> GraphSum {
        if q.is_zero() {
            return GraphSum::zero();
        }
        GraphSum { terms: self.terms.iter().map(|(k, (g, c))| (k.clone(), (g.clone(), c * q))).collect() }
    }

    /// Bilinear product by disjoint union.
    pub fn mul(&self, o: &GraphSum) -> GraphSum {
        let mut out = GraphSum::zero();
        for (ka, (ga, ca)) in &self.terms {
            for (kb, (gb, cb)) in &o.terms {
                out.add_keyed(union_key(ka, kb), ga.disjoint_union(gb), ca * cb);
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.terms.values().map(|(g, c)| json!({ "coef": c.to_string(), "graph": g.to_json() })).collect())
    }

    pub fn from_json(v: &Value) -> Result<GraphSum> {
        let bad = || crate::Error::Parse("graph sum JSON".into());
        let mut out = GraphSum::zero();
        for t in v.as_array().ok_or_else(bad)? {
            let c: Rational = t.get("coef").and_then(Value::as_str).ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let g = StableGraph::from_json(t.get("graph").ok_or_else(bad)?)?;
            out.add_graph(g, c)?;
        }
        Ok(out)
    }
}

impl PartialEq for GraphSum {
    fn eq(&self, other: &Self) -> bool {
        self.terms.len() == other.terms.len()
            && self.terms.iter().all(|(k, (_, c))| other.terms.get(k).is_some_and(|(_, d)| d == c))
    }
}

impl Eq for GraphSum {}

impl fmt::Display for GraphSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.values().map(|(g, c)| format!("{} {}", c, g.to_json())).collect();
        write!(f, "{}", parts.join("\n"))
    }
}
