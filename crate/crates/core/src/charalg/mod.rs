//! Characters of explicit zastava presentations.
//!
//! A [`WeightedPresentation`] is a polynomial ring on bigraded variables
//! modulo homogeneous relations. Its character is computed either in closed
//! form (single relation) or degreewise by exact linear algebra.

mod hilbert;
mod presentation;

pub use hilbert::{free_character, graded_hilbert_function, hilbert_function_to_poly, hypersurface_series};
pub use presentation::{Monomial, Relation, Variable, WeightedPresentation};

use thiserror::Error;

use crate::exactalg::GradedWeight;
use crate::rootdata::{FoldingDatum, RootDataError, RootVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharAlgError {
    #[error("relation {index} is not homogeneous: term {term} has weight {found}, tag is {tag}")]
    InhomogeneousRelation { index: usize, term: usize, found: String, tag: String },
    #[error("variable `{0}` has q-weight < 1")]
    NonPositiveWeight(String),
    #[error("t-power {k} out of range for slot degree {n}")]
    SlotOverflow { k: i64, n: i64 },
    #[error("slot {slot} has degree {expected} in a(α), got {got}")]
    SlotMismatch { slot: usize, expected: i64, got: i64 },
    #[error("presentation has {0} relations, expected exactly one")]
    NotHypersurface(usize),
    #[error("presentation has relations, expected a free ring")]
    NotFree,
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

/// A coefficient of a parent `V_{ω̌_j}`-valued polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotCoefficient {
    /// Parent fundamental weight index `j` (0-based).
    pub slot: usize,
    /// `n_j = <ω'_j, a(α)>`.
    pub slot_degree: i64,
    /// Power `k` of `t` the coefficient multiplies.
    pub t_power: i64,
    /// Parent root-lattice drop `β'` of the basis vector.
    pub depth: Vec<i64>,
}

/// Bigrading of a slot coefficient: `q^{n_j - k}` and `z` the image of the
/// depth under the orbit collapse `β'_p ↦ α̌_{orbit(p)}`.
pub fn assign_weight(folding: &FoldingDatum, alpha: &RootVector, s: &SlotCoefficient) -> Result<GradedWeight, CharAlgError> {
    let a = folding.a_map(alpha)?;
    let np = folding.parent.rank();
    if s.slot >= np {
        return Err(RootDataError::IndexOutOfRange { index: s.slot, rank: np }.into());
    }
    if s.depth.len() != np {
        return Err(RootDataError::LengthMismatch { got: s.depth.len(), expected: np }.into());
    }
    if a[s.slot] != s.slot_degree {
        return Err(CharAlgError::SlotMismatch { slot: s.slot, expected: a[s.slot], got: s.slot_degree });
    }
    if s.t_power < 0 || s.t_power >= s.slot_degree {
        return Err(CharAlgError::SlotOverflow { k: s.t_power, n: s.slot_degree });
    }
    let collapsed = collapse_depth(folding, &s.depth);
    Ok(GradedWeight::new(s.slot_degree - s.t_power, collapsed))
}

/// `Σ_p c_p α̌_{orbit(p)}` in fundamental-weight coordinates.
pub fn collapse_depth(folding: &FoldingDatum, depth: &[i64]) -> Vec<i64> {
    let mut beta = vec![0i64; folding.rank()];
    for (p, c) in depth.iter().enumerate() {
        beta[folding.parent.orbit[p]] += c;
    }
    folding.star(&RootVector(beta)).0
}

/// Checks every relation against its tag and every variable's q-weight.
pub fn audit_homogeneity(p: &WeightedPresentation) -> Result<(), CharAlgError> {
    for v in &p.variables {
        if v.weight.q < 1 {
            return Err(CharAlgError::NonPositiveWeight(v.name.clone()));
        }
    }
    for (index, r) in p.relations.iter().enumerate() {
        for (term, (m, _)) in r.terms.iter().enumerate() {
            let w = p.monomial_weight(m);
            if w != r.weight {
                return Err(CharAlgError::InhomogeneousRelation {
                    index,
                    term,
                    found: format!("{w:?}"),
                    tag: format!("{:?}", r.weight),
                });
            }
        }
    }
    Ok(())
}

/// Free presentation of the A1 zastava of degree `n`: pairs `(P, R)` with `P`
/// monic of degree `n` and `deg R < n`, weighted slot by slot.
pub fn a1_tower_presentation(folding: &FoldingDatum, n: i64) -> Result<WeightedPresentation, CharAlgError> {
    let alpha = RootVector(vec![n]);
    let mut variables = Vec::new();
    for (prefix, depth) in [("p", 0), ("r", 1)] {
        for k in 0..n {
            let s = SlotCoefficient { slot: 0, slot_degree: n, t_power: k, depth: vec![depth] };
            variables.push(Variable { name: format!("{prefix}{k}"), weight: assign_weight(folding, &alpha, &s)? });
        }
    }
    WeightedPresentation::new(1, variables, Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::build_folding;

    fn slot(slot: usize, n: i64, k: i64, depth: &[i64]) -> SlotCoefficient {
        SlotCoefficient { slot, slot_degree: n, t_power: k, depth: depth.to_vec() }
    }

    #[test]
    fn c2_slot_weights() {
        let c2 = build_folding("C2".parse().unwrap());
        let alpha = RootVector(vec![1, 1]);
        // a_2: slot 1, depth β'_1
        let w = assign_weight(&c2, &alpha, &slot(0, 1, 0, &[1, 0, 0])).unwrap();
        assert_eq!(w, GradedWeight::new(1, c2.cartan_g[0].clone()));
        // a_13: slot 2, depth β'_2
        let w = assign_weight(&c2, &alpha, &slot(1, 2, 0, &[0, 1, 0])).unwrap();
        assert_eq!(w, GradedWeight::new(2, c2.cartan_g[1].clone()));
        // b_14: slot 2, t^1, depth β'_2 + β'_3
        let w = assign_weight(&c2, &alpha, &slot(1, 2, 1, &[0, 1, 1])).unwrap();
        assert_eq!(w, GradedWeight::new(1, vec![1, 0]));
    }

    #[test]
    fn monic_slot_is_rejected() {
        let c2 = build_folding("C2".parse().unwrap());
        let alpha = RootVector(vec![1, 1]);
        assert_eq!(
            assign_weight(&c2, &alpha, &slot(0, 1, 1, &[0, 0, 0])),
            Err(CharAlgError::SlotOverflow { k: 1, n: 1 })
        );
        assert!(matches!(
            assign_weight(&c2, &alpha, &slot(0, 2, 0, &[0, 0, 0])),
            Err(CharAlgError::SlotMismatch { .. })
        ));
    }

    #[test]
    fn g2_slot_weights() {
        let g2 = build_folding("G2".parse().unwrap());
        let alpha = RootVector(vec![1, 1]);
        // e: central slot of degree 3, depth β'_1
        let w = assign_weight(&g2, &alpha, &slot(0, 3, 0, &[1, 0, 0, 0])).unwrap();
        assert_eq!(w, GradedWeight::new(3, vec![2, -1]));
        // c: outer slot, depth β'_1 + β'_2
        let w = assign_weight(&g2, &alpha, &slot(1, 1, 0, &[1, 1, 0, 0])).unwrap();
        assert_eq!(w, GradedWeight::new(1, vec![-1, 1]));
    }
}
