//! Lattice q-difference operators and their polynomial eigenfunctions.
//!
//! An operator is `Σ_β c_β(q, x) T_β` acting on functions `Ψ` on the weight
//! lattice by `(MΨ)(λ) = Σ_β c_β(q, q^λ) Ψ(λ + β)`, where `x_i` evaluates to
//! `q^{m_i}` at `λ = Σ m_i ω̌_i` and `Ψ` vanishes off the dominant cone.

use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::demazure::is_weyl_invariant;
use crate::exactalg::format::{character_json, poly_from_json, poly_json};
use crate::exactalg::{ExactAlgError, GradedWeight, LaurentPoly, RationalCharacter};
use crate::rootdata::{build_folding, dominant_weights_up_to, DynkinType, FoldingDatum, WeightVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TodaError {
    #[error("operator schema error: {0}")]
    SchemaError(String),
    #[error("eigenvalue is not W-invariant")]
    NonInvariantEigenvalue,
    #[error("entry {0} is needed but lies outside the table box")]
    BoxExceeded(WeightVector),
    #[error("no usable leading shift: {0}")]
    NotTriangular(String),
    #[error("leading coefficient vanishes at {0}")]
    SingularCoefficient(WeightVector),
    #[error("leading coefficient at {0} is not a product of factors (1 - q^k)")]
    UnfactorableCoefficient(WeightVector),
    #[error("solved table fails the eigen-equation at {0:?}")]
    InconsistentSystem(Vec<WeightVector>),
    #[error(transparent)]
    ExactAlg(#[from] ExactAlgError),
}

/// `c · q^k · x^e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTerm {
    pub coeff: BigRational,
    pub q: i64,
    pub x: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorTerm {
    pub shift: Vec<i64>,
    /// Coefficient terms; an optional per-term `q_shift` of the document is
    /// folded into their q-exponents.
    pub coeff: Vec<CoeffTerm>,
}

impl OperatorTerm {
    /// The coefficient at the lattice point `λ`, as a polynomial in `q`.
    pub fn evaluate(&self, lambda: &[i64]) -> LaurentPoly {
        let n = lambda.len();
        LaurentPoly::from_terms(
            n,
            self.coeff.iter().map(|t| {
                let k = t.q + t.x.iter().zip(lambda).map(|(e, m)| e * m).sum::<i64>();
                (GradedWeight::new(k, vec![0; n]), t.coeff.clone())
            }),
        )
    }

    pub fn height(&self) -> i64 {
        self.shift.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceOperator {
    pub g_type: DynkinType,
    pub terms: Vec<OperatorTerm>,
    pub eigenvalue: LaurentPoly,
    pub provenance: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoeffDoc {
    coeff: String,
    q: i64,
    x: Vec<i64>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    shift: Vec<i64>,
    coeff: Vec<CoeffDoc>,
    #[serde(default, skip_serializing_if = "is_zero_i64")]
    q_shift: i64,
}

fn is_zero_i64(x: &i64) -> bool {
    *x == 0
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OperatorDoc {
    #[serde(rename = "type")]
    g_type: String,
    terms: Vec<TermDoc>,
    eigenvalue: Value,
    #[serde(default)]
    provenance: String,
}

/// Parses and validates an operator document.
pub fn parse_operator(document: &str) -> Result<DifferenceOperator, TodaError> {
    let doc: OperatorDoc = serde_json::from_str(document).map_err(|e| TodaError::SchemaError(e.to_string()))?;
    let g_type = DynkinType::from_str(&doc.g_type).map_err(|e| TodaError::SchemaError(e.to_string()))?;
    let folding = build_folding(g_type);
    let n = folding.rank();
    let mut merged: BTreeMap<Vec<i64>, OperatorTerm> = BTreeMap::new();
    for t in doc.terms {
        if t.shift.len() != n {
            return Err(TodaError::SchemaError(format!("shift {:?} has wrong length", t.shift)));
        }
        let mut coeff = Vec::new();
        for c in t.coeff {
            if c.x.len() != n {
                return Err(TodaError::SchemaError(format!("x-exponent {:?} has wrong length", c.x)));
            }
            let v = BigRational::from_str(c.coeff.trim())
                .map_err(|_| TodaError::SchemaError(format!("bad coefficient `{}`", c.coeff)))?;
            // fold the per-term q-shift in so that merged terms stay exact
            coeff.push(CoeffTerm { coeff: v, q: c.q + t.q_shift, x: c.x });
        }
        merged
            .entry(t.shift.clone())
            .or_insert_with(|| OperatorTerm { shift: t.shift, coeff: Vec::new() })
            .coeff
            .extend(coeff);
    }
    let eigenvalue = poly_from_json(&doc.eigenvalue, n)?;
    if !is_weyl_invariant(&folding, &eigenvalue) {
        return Err(TodaError::NonInvariantEigenvalue);
    }
    Ok(DifferenceOperator { g_type, terms: merged.into_values().collect(), eigenvalue, provenance: doc.provenance })
}

impl DifferenceOperator {
    pub fn rank(&self) -> usize {
        self.g_type.rank()
    }

    pub fn folding(&self) -> FoldingDatum {
        build_folding(self.g_type)
    }

    pub fn to_json_string(&self) -> String {
        let doc = OperatorDoc {
            g_type: self.g_type.to_string(),
            terms: self
                .terms
                .iter()
                .map(|t| TermDoc {
                    shift: t.shift.clone(),
                    coeff: t
                        .coeff
                        .iter()
                        .map(|c| CoeffDoc { coeff: c.coeff.to_string(), q: c.q, x: c.x.clone() })
                        .collect(),
                    q_shift: 0,
                })
                .collect(),
            eigenvalue: poly_json(&self.eigenvalue),
            provenance: self.provenance.clone(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("operator serializes");
        s.push('\n');
        s
    }
}

/// Values `Ψ_λ` for dominant `λ` with `Σ m_i ≤ bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhittakerTable {
    rank: usize,
    bound: i64,
    entries: BTreeMap<Vec<i64>, RationalCharacter>,
}

impl WhittakerTable {
    pub fn new(rank: usize, bound: i64) -> Self {
        WhittakerTable { rank, bound, entries: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn insert(&mut self, lambda: WeightVector, value: RationalCharacter) {
        self.entries.insert(lambda.0, value);
    }

    pub fn entries(&self) -> impl Iterator<Item = (WeightVector, &RationalCharacter)> {
        self.entries.iter().map(|(k, v)| (WeightVector(k.clone()), v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Ψ(μ)`: zero off the dominant cone, `None` for a missing dominant entry.
    pub fn get(&self, mu: &[i64]) -> Option<RationalCharacter> {
        if mu.iter().any(|&m| m < 0) {
            return Some(RationalCharacter::zero(self.rank));
        }
        self.entries.get(mu).cloned()
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "rank": self.rank,
            "box": self.bound,
            "entries": self.entries.iter().map(|(k, v)| serde_json::json!({"lambda": k, "value": character_json(v)})).collect::<Vec<_>>(),
        })
    }
}

/// `Σ_β c_β(q, q^λ) Ψ(λ + β)`.
pub fn lattice_apply(op: &DifferenceOperator, psi: &WhittakerTable, lambda: &WeightVector) -> Result<RationalCharacter, TodaError> {
    let mut acc = RationalCharacter::zero(op.rank());
    for t in &op.terms {
        let target: Vec<i64> = lambda.0.iter().zip(&t.shift).map(|(a, b)| a + b).collect();
        let value = psi.get(&target).ok_or_else(|| TodaError::BoxExceeded(WeightVector(target.clone())))?;
        if value.is_zero() {
            continue;
        }
        acc = acc.add(&value.mul_poly(&t.evaluate(&lambda.0)));
    }
    Ok(acc)
}

fn residual(op: &DifferenceOperator, psi: &WhittakerTable, lambda: &WeightVector) -> Result<RationalCharacter, TodaError> {
    let lhs = lattice_apply(op, psi, lambda)?;
    let here = psi.get(&lambda.0).ok_or_else(|| TodaError::BoxExceeded(lambda.clone()))?;
    Ok(lhs.sub(&here.mul_poly(&op.eigenvalue)))
}

#[derive(Debug, Clone)]
pub struct EigenReport {
    /// Dominant points checked.
    pub checked: Vec<WeightVector>,
    /// Non-dominant points whose equation involves a dominant entry.
    pub boundary: Vec<WeightVector>,
    /// Points with a nonzero residual, and the residual.
    pub failures: Vec<(WeightVector, RationalCharacter)>,
}

impl EigenReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `M Ψ = f Ψ` at every dominant `λ` with `Σ m_i ≤ bound` and at the
/// non-dominant points adjacent to them.
pub fn eigencheck(op: &DifferenceOperator, psi: &WhittakerTable, bound: i64) -> Result<EigenReport, TodaError> {
    let checked = dominant_weights_up_to(op.rank(), bound);
    let mut boundary = BTreeSet::new();
    for nu in &checked {
        for t in &op.terms {
            let lambda: Vec<i64> = nu.0.iter().zip(&t.shift).map(|(a, b)| a - b).collect();
            if lambda.iter().any(|&m| m < 0) {
                boundary.insert(lambda);
            }
        }
    }
    let boundary: Vec<WeightVector> = boundary.into_iter().map(WeightVector).collect();
    let points: Vec<&WeightVector> = checked.iter().chain(&boundary).collect();
    let results: Vec<Result<(WeightVector, RationalCharacter), TodaError>> =
        points.par_iter().map(|l| residual(op, psi, l).map(|r| ((*l).clone(), r))).collect();
    let mut failures = Vec::new();
    for r in results {
        let (l, res) = r?;
        if !res.rc_equal(&RationalCharacter::zero(op.rank())) {
            failures.push((l, res));
        }
    }
    Ok(EigenReport { checked, boundary, failures })
}

/// Writes a nonzero polynomial in `q` as `c · q^a · Π_j (1 - q^{k_j})`.
fn factor_q_poly(p: &LaurentPoly) -> Option<(BigRational, i64, Vec<i64>)> {
    let n = p.rank();
    let a = p.min_q()?;
    let mut rest = p.shift(&GradedWeight::new(-a, vec![0; n]));
    let c = rest.coeff(&GradedWeight::unit(n));
    rest = rest.scale(&c.recip());
    let mut ks = Vec::new();
    while !rest.is_one() {
        let k = rest.terms().map(|(w, _)| w.q).find(|&q| q > 0)?;
        rest = rest.div_one_minus(&GradedWeight::new(k, vec![0; n]))?;
        ks.push(k);
    }
    Some((c, a, ks))
}

fn leading_term(op: &DifferenceOperator) -> Result<&OperatorTerm, TodaError> {
    let top = op.terms.iter().map(|t| t.height()).max().ok_or_else(|| TodaError::NotTriangular("no terms".into()))?;
    let leading: Vec<&OperatorTerm> = op.terms.iter().filter(|t| t.height() == top).collect();
    if top <= 0 {
        return Err(TodaError::NotTriangular("no shift raises the height".into()));
    }
    if leading.len() != 1 {
        return Err(TodaError::NotTriangular(format!("{} shifts share the maximal height {top}", leading.len())));
    }
    Ok(leading[0])
}

/// Solves `M Ψ = f Ψ` with `Ψ_0 = 1` for all dominant `λ` with
/// `Σ m_i ≤ bound`, by height, and re-verifies the result.
pub fn solve_whittaker(op: &DifferenceOperator, bound: i64) -> Result<WhittakerTable, TodaError> {
    let n = op.rank();
    let lead = leading_term(op)?;
    let h = lead.height();
    let mut table = WhittakerTable::new(n, bound);
    table.insert(WeightVector::zero(n), RationalCharacter::one(n));
    let order = dominant_weights_up_to(n, bound);
    for nu in order.iter().filter(|v| !v.is_zero()) {
        let lambda: Vec<i64> = nu.0.iter().zip(&lead.shift).map(|(a, b)| a - b).collect();
        let lambda = WeightVector(lambda);
        if !lambda.is_dominant() {
            return Err(TodaError::NotTriangular(format!("{nu} is not reached from a dominant point")));
        }
        // every other term lands strictly below the height of ν
        let mut rhs = table.get(&lambda.0).ok_or_else(|| TodaError::BoxExceeded(lambda.clone()))?.mul_poly(&op.eigenvalue);
        for t in op.terms.iter().filter(|t| t.shift != lead.shift) {
            let target: Vec<i64> = lambda.0.iter().zip(&t.shift).map(|(a, b)| a + b).collect();
            let v = table.get(&target).ok_or_else(|| TodaError::BoxExceeded(WeightVector(target.clone())))?;
            if !v.is_zero() {
                rhs = rhs.sub(&v.mul_poly(&t.evaluate(&lambda.0)));
            }
        }
        let c = lead.evaluate(&lambda.0);
        if c.is_zero() {
            return Err(TodaError::SingularCoefficient(lambda));
        }
        let (c0, a, ks) = factor_q_poly(&c).ok_or_else(|| TodaError::UnfactorableCoefficient(lambda.clone()))?;
        let mut value = rhs.mul_poly(&LaurentPoly::monomial(GradedWeight::new(-a, vec![0; n]), c0.recip()));
        for k in ks {
            value.push_factor(GradedWeight::new(k, vec![0; n]))?;
        }
        value.cancel_common_factors();
        table.insert(nu.clone(), value);
    }
    let verify_box = bound - h;
    if verify_box >= 0 {
        let report = eigencheck(op, &table, verify_box)?;
        if !report.passed() {
            return Err(TodaError::InconsistentSystem(report.failures.into_iter().map(|(l, _)| l).collect()));
        }
    }
    Ok(table)
}

/// Points where two tables differ (by `rc_equal`) or where only one has an
/// entry.
pub fn compare_tables(a: &WhittakerTable, b: &WhittakerTable) -> Vec<WeightVector> {
    let keys: BTreeSet<&Vec<i64>> = a.entries.keys().chain(b.entries.keys()).collect();
    keys.into_iter()
        .filter(|k| match (a.entries.get(*k), b.entries.get(*k)) {
            (Some(x), Some(y)) => !x.rc_equal(y),
            _ => true,
        })
        .map(|k| WeightVector(k.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::format::{parse_character, parse_poly};

    const A1: &str = r#"{
  "type": "A1",
  "terms": [
    {"shift": [1], "coeff": [{"coeff": "1", "q": 0, "x": [0]}, {"coeff": "-1", "q": 1, "x": [1]}]},
    {"shift": [-1], "coeff": [{"coeff": "1", "q": 0, "x": [0]}]}
  ],
  "eigenvalue": [[0, [-1], "1"], [0, [1], "1"]],
  "provenance": "test"
}"#;

    #[test]
    fn parse_and_solve_a1() {
        let op = parse_operator(A1).unwrap();
        let t = solve_whittaker(&op, 2).unwrap();
        assert!(t.get(&[0]).unwrap().num().is_one());
        let one = parse_character("(z1^-1 + z1) / [(1 - q)]", 1).unwrap();
        assert!(t.get(&[1]).unwrap().rc_equal(&one));
        let two = parse_character("(z1^-2 + 1 + q + z1^2) / [(1 - q) (1 - q^2)]", 1).unwrap();
        assert!(t.get(&[2]).unwrap().rc_equal(&two));
        assert_eq!(solve_whittaker(&op, 0).unwrap().len(), 1);
    }

    #[test]
    fn zero_operator() {
        let op = parse_operator(r#"{"type": "A1", "terms": [], "eigenvalue": []}"#).unwrap();
        assert!(op.terms.is_empty());
        let mut t = WhittakerTable::new(1, 2);
        for m in 0..=2 {
            t.insert(WeightVector(vec![m]), RationalCharacter::one(1));
        }
        assert!(lattice_apply(&op, &t, &WeightVector(vec![1])).unwrap().is_zero());
        assert!(eigencheck(&op, &t, 2).unwrap().passed());
        assert!(matches!(solve_whittaker(&op, 1), Err(TodaError::NotTriangular(_))));
    }

    #[test]
    fn non_invariant_eigenvalue() {
        let doc = r#"{"type": "A1", "terms": [], "eigenvalue": [[0, [1], "1"]]}"#;
        assert_eq!(parse_operator(doc), Err(TodaError::NonInvariantEigenvalue));
        assert!(matches!(parse_operator(r#"{"type": "X9"}"#), Err(TodaError::SchemaError(_))));
    }

    #[test]
    fn identity_operator() {
        let op = parse_operator(
            r#"{"type": "A1", "terms": [{"shift": [0], "coeff": [{"coeff": "1", "q": 0, "x": [0]}]}], "eigenvalue": [[0, [0], "1"]]}"#,
        )
        .unwrap();
        let a1 = parse_operator(A1).unwrap();
        let t = solve_whittaker(&a1, 2).unwrap();
        let l = WeightVector(vec![2]);
        assert!(lattice_apply(&op, &t, &l).unwrap().rc_equal(&t.get(&[2]).unwrap()));
    }

    #[test]
    fn only_lowering_is_not_triangular() {
        let op = parse_operator(
            r#"{"type": "A1", "terms": [{"shift": [-1], "coeff": [{"coeff": "1", "q": 0, "x": [0]}]}], "eigenvalue": []}"#,
        )
        .unwrap();
        assert!(matches!(solve_whittaker(&op, 1), Err(TodaError::NotTriangular(_))));
    }

    #[test]
    fn perturbed_table_fails() {
        let op = parse_operator(A1).unwrap();
        let mut t = solve_whittaker(&op, 4).unwrap();
        let bumped = t.get(&[2]).unwrap().add(&RationalCharacter::one(1));
        t.insert(WeightVector(vec![2]), bumped);
        let r = eigencheck(&op, &t, 3).unwrap();
        let bad: Vec<i64> = r.failures.iter().map(|(l, _)| l.0[0]).collect();
        assert_eq!(bad, vec![1, 2, 3]);
        assert!(matches!(eigencheck(&op, &t, 4), Err(TodaError::BoxExceeded(_))));
    }

    #[test]
    fn factoring_q_polynomials() {
        let p = parse_poly("2*q - 2*q^2 - 2*q^3 + 2*q^4", 1).unwrap();
        let (c, a, ks) = factor_q_poly(&p).unwrap();
        assert_eq!((c, a), (BigRational::from_integer(2.into()), 1));
        assert_eq!(ks, vec![1, 2]);
        assert!(factor_q_poly(&parse_poly("1 + q", 1).unwrap()).is_none());
    }
}
