//! Transcribed abstract free energies. Each entry lists the printed graphs
//! of one type (g, n) with the printed coefficients, exactly as drawn.
//! Known misprints are kept in the data and listed in [`ERRATA`].

use serde::Serialize;
use serde_json::Value;

use crate::algebra::Rational;
use crate::calculus::{abstract_free_energy, GraphSum};
use crate::error::{Error, Result};
use crate::graphs::StableGraph;

const ABSTRACT_TABLES: &str = include_str!("abstract_tables.json");

#[derive(Clone, Debug)]
pub struct AbstractTable {
    pub genus: u32,
    pub legs: u32,
    pub terms: Vec<(Rational, StableGraph)>,
}

/// A printed term that cannot be right as drawn, with its replacement.
#[derive(Clone, Copy, Debug)]
pub struct Erratum {
    pub genus: u32,
    pub legs: u32,
    /// Position of the term in the printed table, from 0.
    pub index: usize,
    /// Replacement graph in the JSON form of [`StableGraph::from_json`].
    pub graph: Option<&'static str>,
    pub coefficient: Option<(i64, i64)>,
    pub reason: &'static str,
}

pub const ERRATA: [Erratum; 5] = [
    Erratum {
        genus: 2,
        legs: 2,
        index: 5,
        graph: Some(r#"{"vertices":[{"genus":0}],"edges":[[0,0],[0,0]],"legs":[0,0]}"#),
        coefficient: None,
        reason: "vertex drawn with genus 1, giving a graph of genus 3",
    },
    Erratum {
        genus: 2,
        legs: 2,
        index: 6,
        graph: Some(r#"{"vertices":[{"genus":1},{"genus":0}],"edges":[[0,1],[0,1]],"legs":[1,1]}"#),
        coefficient: None,
        reason: "one of the two parallel edges is missing, giving a graph of genus 1",
    },
    Erratum {
        genus: 2,
        legs: 2,
        index: 18,
        graph: None,
        coefficient: Some((1, 16)),
        reason: "two loops at one vertex and two legs at the other: |Aut| = 16, printed 1/8",
    },
    Erratum {
        genus: 2,
        legs: 2,
        index: 20,
        graph: None,
        coefficient: Some((1, 12)),
        reason: "triple edge with both legs at one end: |Aut| = 12, printed 1/8",
    },
    Erratum {
        genus: 3,
        legs: 0,
        index: 31,
        graph: Some(
            r#"{"vertices":[{"genus":0},{"genus":0},{"genus":0}],"edges":[[0,0],[0,1],[1,2],[1,2],[1,2]],"legs":[]}"#,
        ),
        coefficient: None,
        reason: "loop drawn on the 4-valent vertex, leaving a 1-valent genus-0 vertex",
    },
];

#[derive(Clone, Debug, Serialize)]
pub struct TableComparison {
    pub genus: u32,
    pub legs: u32,
    pub printed_terms: usize,
    pub computed_terms: usize,
    /// Differences between the printed table as drawn and the computed one.
    pub discrepancies: Vec<String>,
    pub errata_applied: usize,
    /// Whether the computed table equals the printed one after the errata.
    pub matches_with_errata: bool,
}

impl TableComparison {
    pub fn matches(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    s.parse::<Rational>().map_err(|_| Error::Parse(format!("bad coefficient `{}`", s)))
}

pub fn abstract_tables() -> Result<Vec<AbstractTable>> {
    let v: Value = serde_json::from_str(ABSTRACT_TABLES).map_err(|e| Error::Parse(e.to_string()))?;
    let bad = |w: &str| Error::Parse(format!("abstract table: {}", w));
    let mut out = Vec::new();
    for t in v.as_array().ok_or_else(|| bad("expected a list"))? {
        let genus = t["g"].as_u64().ok_or_else(|| bad("g"))? as u32;
        let legs = t["n"].as_u64().ok_or_else(|| bad("n"))? as u32;
        let mut terms = Vec::new();
        for term in t["terms"].as_array().ok_or_else(|| bad("terms"))? {
            let c = parse_rational(term["coefficient"].as_str().ok_or_else(|| bad("coefficient"))?)?;
            terms.push((c, StableGraph::from_json(&term["graph"])?));
        }
        out.push(AbstractTable { genus, legs, terms });
    }
    Ok(out)
}

pub fn abstract_table(genus: u32, legs: u32) -> Result<AbstractTable> {
    abstract_tables()?
        .into_iter()
        .find(|t| t.genus == genus && t.legs == legs)
        .ok_or_else(|| Error::Domain(format!("no printed table for ({}, {})", genus, legs)))
}

impl AbstractTable {
    pub fn with_errata(&self) -> Result<AbstractTable> {
        let mut t = self.clone();
        for e in ERRATA.iter().filter(|e| e.genus == self.genus && e.legs == self.legs) {
            let term = t.terms.get_mut(e.index).ok_or_else(|| Error::Domain("erratum out of range".into()))?;
            if let Some(json) = e.graph {
                let v: Value = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
                term.1 = StableGraph::from_json(&v)?;
            }
            if let Some((p, q)) = e.coefficient {
                term.0 = Rational::new(p.into(), q.into());
            }
        }
        Ok(t)
    }

    fn sum(&self) -> Result<GraphSum> {
        let mut s = GraphSum::zero();
        for (c, g) in &self.terms {
            s.add_graph(g.clone(), c.clone())?;
        }
        Ok(s)
    }

    fn discrepancies(&self, computed: &GraphSum) -> Result<Vec<String>> {
        let mut out = Vec::new();
        for (i, (_, g)) in self.terms.iter().enumerate() {
            if g.genus() != self.genus as i64 || g.num_legs() != self.legs as usize || !g.is_stable() {
                out.push(format!(
                    "term {}: drawn graph has genus {}, {} legs, stable {}",
                    i,
                    g.genus(),
                    g.num_legs(),
                    g.is_stable()
                ));
            }
        }
        let printed = self.sum()?;
        if printed.len() != self.terms.len() {
            out.push(format!("{} printed terms are isomorphic to earlier ones", self.terms.len() - printed.len()));
        }
        for (k, g, c) in computed.sub(&printed).iter() {
            out.push(format!(
                "{}: computed {}, printed {}",
                g.to_json(),
                computed.coefficient(k),
                &computed.coefficient(k) - c
            ));
        }
        Ok(out)
    }
}

/// Compare a printed table with the enumerated abstract free energy, term
/// by term.
pub fn compare_abstract_table(t: &AbstractTable) -> Result<TableComparison> {
    let computed = abstract_free_energy(t.genus, t.legs, 1)?;
    let corrected = t.with_errata()?;
    Ok(TableComparison {
        genus: t.genus,
        legs: t.legs,
        printed_terms: t.terms.len(),
        computed_terms: computed.len(),
        discrepancies: t.discrepancies(&computed)?,
        errata_applied: ERRATA.iter().filter(|e| e.genus == t.genus && e.legs == t.legs).count(),
        matches_with_errata: corrected.discrepancies(&computed)?.is_empty(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_zero_tables() {
        for (n, terms) in [(3, 1), (4, 2), (5, 3)] {
            let t = abstract_table(0, n).unwrap();
            assert_eq!(t.terms.len(), terms);
            let c = compare_abstract_table(&t).unwrap();
            assert!(c.matches(), "{:?}", c.discrepancies);
        }
    }

    #[test]
    fn errata_point_at_defective_terms() {
        for e in ERRATA {
            let t = abstract_table(e.genus, e.legs).unwrap();
            let (c, g) = &t.terms[e.index];
            let wrong_type = g.genus() != e.genus as i64 || !g.is_stable();
            let (_, aut) = crate::graphs::canonicalize(g).unwrap();
            let wrong_coefficient = *c != Rational::new(1.into(), aut.into());
            assert!(wrong_type || wrong_coefficient, "{}", e.reason);
        }
    }
}
