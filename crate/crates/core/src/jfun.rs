//! Twisted J-function from the fermionic recurrence
//!
//! ```text
//! J_α = Σ_{0 ≤ β ≤ α} q^{(β,β)/2} z^{β*} J_β / (q)_{α-β},   J_0 = 1.
//! ```
//!
//! The `β = α` term carries `J_α` itself with coefficient
//! `q^{(α,α)/2} z^{α*}`, so `J_α` is obtained by moving it to the left and
//! appending the factor `(1 - q^{(α,α)/2} z^{α*})` to the denominator.

use std::collections::HashMap;

use thiserror::Error;

use crate::charalg::{self, CharAlgError, WeightedPresentation};
use crate::exactalg::{ExactAlgError, GradedWeight, LaurentPoly, RationalCharacter};
use crate::rootdata::{FoldingDatum, RootDataError, RootVector};
use num_rational::BigRational;

/// Default q-degree bound for degreewise comparisons.
pub const DEFAULT_SERIES_BOUND: i64 = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JFunError {
    #[error("root vector {0} has a negative coordinate")]
    NegativeCoordinate(RootVector),
    #[error("denominator factor (1 - q^{q} z^{z:?}) is not q-adically expandable")]
    InternalNonFactored { q: i64, z: Vec<i64> },
    #[error("fixture grading has {fixture} z-variables, folding has rank {rank}")]
    GradingMismatch { fixture: usize, rank: usize },
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error(transparent)]
    ExactAlg(#[from] ExactAlgError),
    #[error(transparent)]
    CharAlg(#[from] CharAlgError),
}

/// `(q)_γ = Π_i Π_{s=1}^{c_i} (1 - q^{d_i s})` as its list of factors.
pub fn q_pochhammer_factors(folding: &FoldingDatum, gamma: &RootVector) -> Result<Vec<GradedWeight>, JFunError> {
    if !gamma.is_nonnegative() {
        return Err(JFunError::NegativeCoordinate(gamma.clone()));
    }
    let n = folding.rank();
    let mut out = Vec::new();
    for (i, &c) in gamma.0.iter().enumerate() {
        for s in 1..=c {
            out.push(GradedWeight::new(folding.d_i[i] * s, vec![0; n]));
        }
    }
    Ok(out)
}

/// `(q)_γ` multiplied out.
pub fn q_pochhammer(folding: &FoldingDatum, gamma: &RootVector) -> Result<LaurentPoly, JFunError> {
    let n = folding.rank();
    Ok(q_pochhammer_factors(folding, gamma)?
        .iter()
        .fold(LaurentPoly::one(n), |acc, w| &acc * &LaurentPoly::one_minus(w)))
}

/// The monomial `q^{(β,β)/2} z^{β*}`.
pub fn boundary_weight(folding: &FoldingDatum, beta: &RootVector) -> GradedWeight {
    GradedWeight::new(folding.norm_half(beta), folding.star(beta).0)
}

/// Memoized solver for the family `{J_α}` of one folding.
#[derive(Debug, Clone)]
pub struct JFunction<'a> {
    folding: &'a FoldingDatum,
    memo: HashMap<RootVector, RationalCharacter>,
}

impl<'a> JFunction<'a> {
    pub fn new(folding: &'a FoldingDatum) -> Self {
        JFunction { folding, memo: HashMap::new() }
    }

    pub fn folding(&self) -> &FoldingDatum {
        self.folding
    }

    /// `J_α`.
    pub fn compute(&mut self, alpha: &RootVector) -> Result<RationalCharacter, JFunError> {
        if alpha.rank() != self.folding.rank() {
            return Err(RootDataError::LengthMismatch { got: alpha.rank(), expected: self.folding.rank() }.into());
        }
        if !alpha.is_nonnegative() {
            return Err(JFunError::NegativeCoordinate(alpha.clone()));
        }
        if let Some(j) = self.memo.get(alpha) {
            return Ok(j.clone());
        }
        // Lexicographic order visits every β < α before α.
        for beta in FoldingDatum::enumerate_below(alpha) {
            if !self.memo.contains_key(&beta) {
                let j = self.solve_one(&beta)?;
                self.memo.insert(beta, j);
            }
        }
        Ok(self.memo[alpha].clone())
    }

    fn solve_one(&self, alpha: &RootVector) -> Result<RationalCharacter, JFunError> {
        let n = self.folding.rank();
        if alpha.is_zero() {
            return Ok(RationalCharacter::one(n));
        }
        let mut sum = RationalCharacter::zero(n);
        for beta in FoldingDatum::enumerate_below(alpha) {
            if &beta == alpha {
                continue;
            }
            let j_beta = &self.memo[&beta];
            let mut term = j_beta.mul_poly(&LaurentPoly::monomial(boundary_weight(self.folding, &beta), one()));
            for f in q_pochhammer_factors(self.folding, &(alpha - &beta))? {
                term.push_factor(f)?;
            }
            sum = sum.add(&term);
        }
        let mut j = sum.with_factor(boundary_weight(self.folding, alpha))?;
        j.cancel_common_factors();
        if let Some((w, _)) = j.den().find(|(w, _)| w.q < 1) {
            return Err(JFunError::InternalNonFactored { q: w.q, z: w.z.clone() });
        }
        Ok(j)
    }

    /// Right-hand side of the recurrence at `α`, built from the stored family
    /// including the `β = α` term.
    pub fn recurrence_rhs(&mut self, alpha: &RootVector) -> Result<RationalCharacter, JFunError> {
        self.compute(alpha)?;
        let n = self.folding.rank();
        let mut sum = RationalCharacter::zero(n);
        for beta in FoldingDatum::enumerate_below(alpha) {
            let mut term =
                self.memo[&beta].mul_poly(&LaurentPoly::monomial(boundary_weight(self.folding, &beta), one()));
            for f in q_pochhammer_factors(self.folding, &(alpha - &beta))? {
                term.push_factor(f)?;
            }
            sum = sum.add(&term);
        }
        Ok(sum)
    }

    /// Whether the stored `J_α` satisfies the recurrence verbatim.
    pub fn satisfies_recurrence(&mut self, alpha: &RootVector) -> Result<bool, JFunError> {
        let rhs = self.recurrence_rhs(alpha)?;
        Ok(self.memo[alpha].rc_equal(&rhs))
    }
}

fn one() -> BigRational {
    num_traits::One::one()
}

/// One-shot `J_α`.
pub fn compute_j(folding: &FoldingDatum, alpha: &RootVector) -> Result<RationalCharacter, JFunError> {
    JFunction::new(folding).compute(alpha)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComparisonMode {
    /// Closed forms compared by cross-multiplication.
    Exact,
    /// Series compared coefficientwise up to the given q-degree.
    Degreewise(i64),
}

#[derive(Debug, Clone)]
pub struct TheoremMainReport {
    pub alpha: RootVector,
    pub mode: ComparisonMode,
    pub passed: bool,
    /// First multidegree (canonical order) where the two sides differ, with
    /// the coefficient from `J_α` and from the fixture.
    pub first_difference: Option<(GradedWeight, BigRational, BigRational)>,
}

/// Compares `J_α` with the character of a zastava fixture.
pub fn check_theorem_main(
    folding: &FoldingDatum,
    alpha: &RootVector,
    fixture: &WeightedPresentation,
    bound: i64,
) -> Result<TheoremMainReport, JFunError> {
    if fixture.rank() != folding.rank() {
        return Err(JFunError::GradingMismatch { fixture: fixture.rank(), rank: folding.rank() });
    }
    let j = compute_j(folding, alpha)?;
    let j_series = j.series_expand(bound)?;
    let (mode, passed, fixture_series) = if fixture.relations.len() == 1 {
        let h = charalg::hypersurface_series(fixture)?;
        (ComparisonMode::Exact, j.rc_equal(&h), h.series_expand(bound)?)
    } else {
        let dims = charalg::graded_hilbert_function(fixture, bound)?;
        let s = charalg::hilbert_function_to_poly(fixture.rank(), &dims);
        let eq = s == j_series;
        (ComparisonMode::Degreewise(bound), eq, s)
    };
    let first_difference = if passed {
        None
    } else {
        first_difference(&j_series, &fixture_series)
    };
    Ok(TheoremMainReport { alpha: alpha.clone(), mode, passed, first_difference })
}

fn first_difference(a: &LaurentPoly, b: &LaurentPoly) -> Option<(GradedWeight, BigRational, BigRational)> {
    let diff = a - b;
    let w = diff.terms().next()?.0.clone();
    Some((w.clone(), a.coeff(&w), b.coeff(&w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::format::parse_character;
    use crate::rootdata::build_folding;

    fn fold(s: &str) -> FoldingDatum {
        build_folding(s.parse().unwrap())
    }

    #[test]
    fn pochhammer_examples() {
        let c2 = fold("C2");
        let p = q_pochhammer(&c2, &RootVector(vec![1, 1])).unwrap();
        let expect = crate::exactalg::format::parse_poly("1 - q - q^2 + q^3", 2).unwrap();
        assert_eq!(p, expect);
        assert!(q_pochhammer(&c2, &RootVector(vec![0, 0])).unwrap().is_one());
        let g2 = fold("G2");
        assert_eq!(q_pochhammer(&g2, &RootVector(vec![0, 2])).unwrap(), expect);
        assert!(matches!(
            q_pochhammer(&g2, &RootVector(vec![-1, 0])),
            Err(JFunError::NegativeCoordinate(_))
        ));
    }

    #[test]
    fn j_zero_is_one() {
        for t in ["A1", "C2", "G2"] {
            let f = fold(t);
            assert!(compute_j(&f, &RootVector::zero(f.rank())).unwrap().num().is_one());
        }
    }

    #[test]
    fn j_simple_roots() {
        for t in ["A1", "A2", "C2", "G2"] {
            let f = fold(t);
            let n = f.rank();
            for i in 0..n {
                let j = compute_j(&f, &RootVector::simple(n, i)).unwrap();
                let expect = RationalCharacter::new(
                    LaurentPoly::one(n),
                    [GradedWeight::new(f.d_i[i], vec![0; n]), GradedWeight::new(f.d_i[i], f.cartan_g[i].clone())],
                )
                .unwrap();
                assert_eq!(j, expect, "{t} α_{}", i + 1);
            }
        }
    }

    #[test]
    fn j_c2_and_g2_closed_forms() {
        // z^{α̌_1} = z1^2 z2^-2, z^{α̌_2} = z1^-1 z2^2 for C2
        let c2 = fold("C2");
        let j = compute_j(&c2, &RootVector(vec![1, 1])).unwrap();
        let expect = parse_character(
            "(1 - q^3*z1*z2^0) / [(1 - q) (1 - q^2) (1 - q*z1^2*z2^-2) (1 - q^2*z1^-1*z2^2) (1 - q*z1)]",
            2,
        )
        .unwrap();
        assert_eq!(j, expect);

        // G2: z^{α̌_1} = z1^2 z2^-1, z^{α̌_2} = z1^-3 z2^2
        let g2 = fold("G2");
        let j = compute_j(&g2, &RootVector(vec![1, 1])).unwrap();
        let expect = parse_character(
            "(1 - q^4*z1^-1*z2) / [(1 - q) (1 - q^3) (1 - q^3*z1^2*z2^-1) (1 - q*z1^-3*z2^2) (1 - q*z1^-1*z2)]",
            2,
        )
        .unwrap();
        assert_eq!(j, expect);
    }

    #[test]
    fn j_a1_second_step() {
        let a1 = fold("A1");
        let j = compute_j(&a1, &RootVector(vec![2])).unwrap();
        let expect = parse_character("1 / [(1 - q) (1 - q^2) (1 - q*z1^2) (1 - q^2*z1^2)]", 1).unwrap();
        assert!(j.rc_equal(&expect));
    }

    #[test]
    fn negative_alpha_is_rejected() {
        let c2 = fold("C2");
        assert!(matches!(compute_j(&c2, &RootVector(vec![1, -1])), Err(JFunError::NegativeCoordinate(_))));
    }
}
