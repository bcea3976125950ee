use std::collections::BTreeMap;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::CharAlgError;
use crate::exactalg::GradedWeight;

/// Exponent vector over the variables of a presentation.
pub type Monomial = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub weight: GradedWeight,
}

/// A polynomial relation with its declared bigrading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub weight: GradedWeight,
    pub terms: Vec<(Monomial, BigRational)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedPresentation {
    rank: usize,
    pub name: Option<String>,
    pub variables: Vec<Variable>,
    pub relations: Vec<Relation>,
}

impl WeightedPresentation {
    pub fn new(rank: usize, variables: Vec<Variable>, relations: Vec<Relation>) -> Result<Self, CharAlgError> {
        for v in &variables {
            if v.weight.rank() != rank {
                return Err(CharAlgError::Schema(format!("variable `{}` has wrong z-rank", v.name)));
            }
        }
        for r in &relations {
            if r.weight.rank() != rank {
                return Err(CharAlgError::Schema("relation has wrong z-rank".into()));
            }
            if r.terms.iter().any(|(m, _)| m.len() != variables.len()) {
                return Err(CharAlgError::Schema("relation monomial has wrong length".into()));
            }
        }
        Ok(WeightedPresentation { rank, name: None, variables, relations })
    }

    /// Number of z-variables of the grading.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v.name == name)
    }

    pub fn monomial_weight(&self, m: &[u32]) -> GradedWeight {
        let mut q = 0;
        let mut z = vec![0i64; self.rank];
        for (v, &e) in self.variables.iter().zip(m) {
            let e = e as i64;
            q += e * v.weight.q;
            for (zi, wi) in z.iter_mut().zip(&v.weight.z) {
                *zi += e * wi;
            }
        }
        GradedWeight::new(q, z)
    }

    /// Copy with variable `name` given a new weight; relation tags unchanged.
    pub fn with_variable_weight(&self, name: &str, weight: GradedWeight) -> Option<Self> {
        let i = self.variable_index(name)?;
        let mut out = self.clone();
        out.variables[i].weight = weight;
        Some(out)
    }

    pub fn from_json_str(s: &str) -> Result<Self, CharAlgError> {
        let doc: PresentationDoc = serde_json::from_str(s).map_err(|e| CharAlgError::Schema(e.to_string()))?;
        doc.try_into()
    }

    pub fn to_json_string(&self) -> String {
        let doc = PresentationDoc::from(self);
        let mut s = serde_json::to_string_pretty(&doc).expect("presentation serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VariableDoc {
    name: String,
    q: i64,
    z: Vec<i64>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    coeff: String,
    monomial: BTreeMap<String, u32>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RelationDoc {
    q: i64,
    z: Vec<i64>,
    terms: Vec<TermDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rank: Option<usize>,
    variables: Vec<VariableDoc>,
    relations: Vec<RelationDoc>,
}

impl From<&WeightedPresentation> for PresentationDoc {
    fn from(p: &WeightedPresentation) -> Self {
        let variables = p
            .variables
            .iter()
            .map(|v| VariableDoc { name: v.name.clone(), q: v.weight.q, z: v.weight.z.clone() })
            .collect();
        let relations = p
            .relations
            .iter()
            .map(|r| RelationDoc {
                q: r.weight.q,
                z: r.weight.z.clone(),
                terms: r
                    .terms
                    .iter()
                    .map(|(m, c)| TermDoc {
                        coeff: c.to_string(),
                        monomial: m
                            .iter()
                            .enumerate()
                            .filter(|(_, &e)| e > 0)
                            .map(|(i, &e)| (p.variables[i].name.clone(), e))
                            .collect(),
                    })
                    .collect(),
            })
            .collect();
        PresentationDoc { name: p.name.clone(), rank: p.variables.is_empty().then_some(p.rank), variables, relations }
    }
}

impl TryFrom<PresentationDoc> for WeightedPresentation {
    type Error = CharAlgError;

    fn try_from(doc: PresentationDoc) -> Result<Self, CharAlgError> {
        let rank = match (doc.rank, doc.variables.first()) {
            (Some(r), _) => r,
            (None, Some(v)) => v.z.len(),
            (None, None) => return Err(CharAlgError::Schema("cannot infer z-rank without variables".into())),
        };
        let variables: Vec<Variable> = doc
            .variables
            .into_iter()
            .map(|v| Variable { name: v.name, weight: GradedWeight::new(v.q, v.z) })
            .collect();
        let mut seen = std::collections::HashSet::new();
        for v in &variables {
            if !seen.insert(v.name.as_str()) {
                return Err(CharAlgError::Schema(format!("duplicate variable `{}`", v.name)));
            }
        }
        let index: BTreeMap<&str, usize> = variables.iter().enumerate().map(|(i, v)| (v.name.as_str(), i)).collect();
        let mut relations = Vec::new();
        for r in doc.relations {
            let mut terms = Vec::new();
            for t in r.terms {
                let c = BigRational::from_str(t.coeff.trim())
                    .map_err(|_| CharAlgError::Schema(format!("bad coefficient `{}`", t.coeff)))?;
                if c.is_zero() {
                    continue;
                }
                let mut m = vec![0u32; variables.len()];
                for (name, e) in t.monomial {
                    let i = *index
                        .get(name.as_str())
                        .ok_or_else(|| CharAlgError::Schema(format!("unknown variable `{name}`")))?;
                    m[i] += e;
                }
                terms.push((m, c));
            }
            relations.push(Relation { weight: GradedWeight::new(r.q, r.z), terms });
        }
        let mut p = WeightedPresentation::new(rank, variables, relations)?;
        p.name = doc.name;
        Ok(p)
    }
}
