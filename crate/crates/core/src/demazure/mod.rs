//! Level-one twisted affine Demazure characters `Ψ̂_λ`, the global Weyl
//! module characters `Ψ_λ`, and finite Weyl characters.
//!
//! The extremal weight `Λ_0 + w_0λ` (or `Λ_0 + λ`, see [`SignConvention`]) is
//! raised to an affine-dominant weight by a greedy sequence of simple
//! reflections; the Demazure operators along that word applied to the
//! dominant exponential give the character, with `e^δ ↦ q`.

mod affine;
mod conventions;

pub use affine::{build_affine, AffineData, AffineGroupElement, AffineWeight};
pub use conventions::{frozen_conventions, resolve_convention, ConventionRecord, CONVENTIONS_JSON};

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{GradedWeight, LaurentPoly, RationalCharacter};
use crate::rootdata::{FoldingDatum, RootDataError, WeightVector};

/// Safety bound on the number of greedy reflections.
pub const MAX_WORD_LENGTH: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DemazureError {
    #[error("unsupported type `{0}` for the affine construction")]
    UnsupportedType(String),
    #[error("weight {0} is not dominant")]
    NotDominant(WeightVector),
    #[error("greedy descent from {0} did not terminate within {MAX_WORD_LENGTH} steps")]
    NotInOrbit(String),
    #[error("cannot normalize character for {lambda}: {reason}")]
    NormalizationFailure { lambda: WeightVector, reason: String },
    #[error("no sign convention passes validation for type {0}")]
    ConventionUnresolved(String),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

/// Which finite part the extremal weight of `D(λ)` carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignConvention {
    /// `Λ_0 + λ`.
    Plus,
    /// `Λ_0 + w_0 λ`.
    Minus,
}

impl fmt::Display for SignConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignConvention::Plus => "plus",
            SignConvention::Minus => "minus",
        })
    }
}

impl FromStr for SignConvention {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "plus" => Ok(SignConvention::Plus),
            "minus" => Ok(SignConvention::Minus),
            _ => Err(format!("unknown sign convention `{s}`")),
        }
    }
}

/// `D_i f = (f - e^{-α_i} s_i f) / (1 - e^{-α_i})`, evaluated termwise as an
/// `α_i`-string.
pub fn demazure_step(a: &AffineData, i: usize, f: &AffineGroupElement) -> AffineGroupElement {
    let mut out = AffineGroupElement::zero();
    for (tau, c) in f.terms() {
        let n = a.pairing(tau, i);
        if n >= 0 {
            for j in 0..=n {
                out.add_term(a.add_root(tau, i, -j), c.clone());
            }
        } else {
            for j in 1..=(-n - 1) {
                out.add_term(a.add_root(tau, i, j), -c.clone());
            }
        }
    }
    out
}

/// Finite Demazure operator on the z-exponents of a Laurent polynomial.
pub fn finite_demazure_step(folding: &FoldingDatum, i: usize, f: &LaurentPoly) -> LaurentPoly {
    let root = &folding.cartan_g[i];
    let mut out = LaurentPoly::zero(f.rank());
    for (w, c) in f.terms() {
        let n = w.z[i];
        let shifted = |k: i64| GradedWeight::new(w.q, w.z.iter().zip(root).map(|(m, r)| m + k * r).collect());
        if n >= 0 {
            for j in 0..=n {
                out.add_term(shifted(-j), c.clone());
            }
        } else {
            for j in 1..=(-n - 1) {
                out.add_term(shifted(j), -c.clone());
            }
        }
    }
    out
}

fn check_dominant(folding: &FoldingDatum, lambda: &WeightVector) -> Result<(), DemazureError> {
    if lambda.rank() != folding.rank() {
        return Err(RootDataError::LengthMismatch { got: lambda.rank(), expected: folding.rank() }.into());
    }
    if !lambda.is_dominant() {
        return Err(DemazureError::NotDominant(lambda.clone()));
    }
    Ok(())
}

/// Greedy word and the affine-dominant weight it reaches.
fn descend(
    a: &AffineData,
    folding: &FoldingDatum,
    lambda: &WeightVector,
    conv: SignConvention,
) -> Result<(Vec<usize>, AffineWeight), DemazureError> {
    check_dominant(folding, lambda)?;
    let mu = match conv {
        SignConvention::Plus => lambda.0.clone(),
        SignConvention::Minus => folding.longest_element_action(lambda).0,
    };
    let start = AffineWeight::new(1, mu, 0);
    let mut tau = start.clone();
    let mut word = Vec::new();
    while let Some(i) = (0..a.size()).find(|&i| a.pairing(&tau, i) < 0) {
        if word.len() >= MAX_WORD_LENGTH {
            return Err(DemazureError::NotInOrbit(start.to_string()));
        }
        tau = a.reflect(&tau, i);
        word.push(i);
    }
    Ok((word, tau))
}

/// Greedy word `i_1 … i_k` (smallest index first) taking the extremal weight
/// to an affine-dominant weight `τ`; the extremal weight is
/// `s_{i_1} ⋯ s_{i_k} τ`.
pub fn translation_word(
    a: &AffineData,
    folding: &FoldingDatum,
    lambda: &WeightVector,
    conv: SignConvention,
) -> Result<Vec<usize>, DemazureError> {
    Ok(descend(a, folding, lambda, conv)?.0)
}

/// `D_{i_1} ⋯ D_{i_k} e^τ` before normalization, with `e^δ ↦ q`.
pub fn raw_demazure_character(
    a: &AffineData,
    folding: &FoldingDatum,
    lambda: &WeightVector,
    conv: SignConvention,
) -> Result<LaurentPoly, DemazureError> {
    let (word, top) = descend(a, folding, lambda, conv)?;
    let mut f = AffineGroupElement::exp(top);
    for &i in word.iter().rev() {
        f = demazure_step(a, i, &f);
    }
    let n = folding.rank();
    Ok(LaurentPoly::from_terms(n, f.terms().map(|(t, c)| (GradedWeight::new(t.m, t.mu.clone()), c.clone()))))
}

/// `Ψ̂_λ`: the normalized level-one Demazure character.
pub fn demazure_character(
    a: &AffineData,
    folding: &FoldingDatum,
    lambda: &WeightVector,
    conv: SignConvention,
) -> Result<LaurentPoly, DemazureError> {
    let raw = raw_demazure_character(a, folding, lambda, conv)?;
    Ok(normalize_character(folding, &raw, lambda)?.0)
}

/// Flips `z ↦ z^{w_0}` if only `z^{w_0 λ}` occurs, then shifts by a power of
/// `q` so that the `z^λ` coefficient is `1 + O(q)`. Returns whether the flip
/// was applied.
pub fn normalize_character(
    folding: &FoldingDatum,
    raw: &LaurentPoly,
    lambda: &WeightVector,
) -> Result<(LaurentPoly, bool), DemazureError> {
    let fail = |reason: &str| DemazureError::NormalizationFailure { lambda: lambda.clone(), reason: reason.to_string() };
    if raw.is_zero() {
        return Err(fail("character is zero"));
    }
    let mut p = raw.clone();
    let mut flipped = false;
    if p.z_coefficient(&lambda.0).is_zero() {
        let w0l = folding.longest_element_action(lambda);
        if p.z_coefficient(&w0l.0).is_zero() {
            return Err(fail("no z^λ or z^{w_0 λ} term"));
        }
        let word = folding.longest_word();
        p = p.map_z(|z| {
            let mut v = z.to_vec();
            for &i in &word {
                v = folding.reflect_slice(i, &v);
            }
            v
        });
        flipped = true;
    }
    let e = p.z_coefficient(&lambda.0).min_q().expect("nonzero coefficient");
    p = p.shift(&GradedWeight::new(-e, vec![0; folding.rank()]));
    let lead = p.z_coefficient(&lambda.0);
    if !lead.coeff(&GradedWeight::unit(folding.rank())).is_one() {
        return Err(fail("z^λ coefficient does not start with 1"));
    }
    Ok((p, flipped))
}

/// `Ψ_λ = Ψ̂_λ / Π_i Π_{r=1}^{<α_i, λ>} (1 - q^{d_i r})`.
pub fn global_weyl_character(folding: &FoldingDatum, psi_hat: &LaurentPoly, lambda: &WeightVector) -> RationalCharacter {
    let n = folding.rank();
    let mut out = RationalCharacter::from_poly(psi_hat.clone());
    for (i, &m) in lambda.0.iter().enumerate() {
        for r in 1..=m {
            out.push_factor(GradedWeight::new(folding.d_i[i] * r, vec![0; n])).expect("q-power factor is valid");
        }
    }
    out
}

/// `Π_i Π_{r=1}^{<α_i, λ>} (1 - q^{d_i r})` multiplied out.
pub fn lambda_pochhammer(folding: &FoldingDatum, lambda: &WeightVector) -> LaurentPoly {
    global_weyl_character(folding, &LaurentPoly::one(folding.rank()), lambda).den_poly()
}

/// Weyl character `χ_λ` via Demazure operators along a reduced word for `w_0`.
pub fn weyl_character_finite(folding: &FoldingDatum, lambda: &WeightVector) -> Result<LaurentPoly, DemazureError> {
    check_dominant(folding, lambda)?;
    let n = folding.rank();
    let mut f = LaurentPoly::monomial(GradedWeight::new(0, lambda.0.clone()), BigRational::one());
    for &i in folding.longest_word().iter().rev() {
        f = finite_demazure_step(folding, i, &f);
    }
    debug_assert_eq!(f.rank(), n);
    Ok(f)
}

/// Invariance of the z-exponents under every simple reflection.
pub fn is_weyl_invariant(folding: &FoldingDatum, p: &LaurentPoly) -> bool {
    (0..folding.rank()).all(|i| p.map_z(|z| folding.reflect_slice(i, z)) == *p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::format::parse_poly;
    use crate::rootdata::build_folding;

    fn setup(t: &str) -> (FoldingDatum, AffineData) {
        let f = build_folding(t.parse().unwrap());
        let a = build_affine(&f).unwrap();
        (f, a)
    }

    fn wv(v: &[i64]) -> WeightVector {
        WeightVector(v.to_vec())
    }

    #[test]
    fn affine_matrices() {
        let (_, a) = setup("A1");
        assert_eq!(a.gcm, vec![vec![2, -2], vec![-2, 2]]);
        let (_, a) = setup("C2");
        assert_eq!(a.gcm, vec![vec![2, -2, 0], vec![-1, 2, -1], vec![0, -2, 2]]);
        assert_eq!(a.marks, vec![1, 1, 1]);
        assert_eq!(a.label, "D3^(2)");
        let (_, a) = setup("G2");
        assert_eq!(a.marks, vec![1, 2, 1]);
        assert_eq!(a.label, "D4^(3)");
        for t in ["A1", "A2", "A3", "B2", "C2", "B3", "C3", "G2", "F4"] {
            let (_, a) = setup(t);
            assert!(a.null_root_holds(), "{t}");
            let n = a.size();
            for i in 0..n {
                assert_eq!(a.gcm[i][i], 2);
                for j in 0..n {
                    assert_eq!(a.symmetrizer[i] * a.gcm[i][j], a.symmetrizer[j] * a.gcm[j][i], "{t}");
                }
            }
        }
    }

    #[test]
    fn step_strings() {
        let (_, a) = setup("A1");
        let d = |mu: i64| demazure_step(&a, 1, &AffineGroupElement::exp(AffineWeight::new(1, vec![mu], 0)));
        let two = d(1);
        assert_eq!(two.len(), 2);
        assert!(two.terms().any(|(t, _)| t.mu == vec![-1]));
        assert_eq!(d(0), AffineGroupElement::exp(AffineWeight::new(1, vec![0], 0)));
        assert!(d(-1).is_zero());
    }

    #[test]
    fn a1_words_and_characters() {
        let (f, a) = setup("A1");
        assert!(translation_word(&a, &f, &wv(&[0]), SignConvention::Minus).unwrap().is_empty());
        assert_eq!(translation_word(&a, &f, &wv(&[1]), SignConvention::Minus).unwrap(), vec![1]);
        assert_eq!(translation_word(&a, &f, &wv(&[2]), SignConvention::Minus).unwrap(), vec![1, 0]);
        let psi = |m| demazure_character(&a, &f, &wv(&[m]), SignConvention::Minus).unwrap();
        assert!(psi(0).is_one());
        assert_eq!(psi(1), parse_poly("z1 + z1^-1", 1).unwrap());
        assert_eq!(psi(2), parse_poly("z1^2 + 1 + q + z1^-2", 1).unwrap());
    }

    #[test]
    fn c2_first_fundamental() {
        let (f, a) = setup("C2");
        let w = translation_word(&a, &f, &wv(&[1, 0]), SignConvention::Minus).unwrap();
        assert_eq!(w, vec![1, 2, 1, 0]);
        let psi = demazure_character(&a, &f, &wv(&[1, 0]), SignConvention::Minus).unwrap();
        let chi = weyl_character_finite(&f, &wv(&[1, 0])).unwrap();
        let q = parse_poly("q", 2).unwrap();
        assert_eq!(chi.len(), 5);
        assert_eq!(psi, &chi + &q);
    }

    #[test]
    fn finite_characters() {
        let f = build_folding("A1".parse().unwrap());
        assert_eq!(weyl_character_finite(&f, &wv(&[2])).unwrap(), parse_poly("z1^2 + 1 + z1^-2", 1).unwrap());
        assert!(weyl_character_finite(&f, &wv(&[0])).unwrap().is_one());
        let f = build_folding("A2".parse().unwrap());
        assert_eq!(
            weyl_character_finite(&f, &wv(&[1, 0])).unwrap(),
            parse_poly("z1 + z1^-1*z2 + z2^-1", 2).unwrap()
        );
    }

    #[test]
    fn normalization_cases() {
        let f = build_folding("A1".parse().unwrap());
        let l = wv(&[1]);
        let p = parse_poly("z1 + z1^-1", 1).unwrap();
        assert_eq!(normalize_character(&f, &p, &l).unwrap(), (p.clone(), false));
        let shifted = parse_poly("q^3*z1 + q^3*z1^-1", 1).unwrap();
        assert_eq!(normalize_character(&f, &shifted, &l).unwrap().0, p);
        let only_low = parse_poly("q^2*z1^-1", 1).unwrap();
        assert_eq!(normalize_character(&f, &only_low, &l).unwrap(), (parse_poly("z1", 1).unwrap(), true));
        assert!(matches!(
            normalize_character(&f, &parse_poly("1", 1).unwrap(), &l),
            Err(DemazureError::NormalizationFailure { .. })
        ));
    }

    #[test]
    fn global_character_examples() {
        let f = build_folding("A1".parse().unwrap());
        let psi = parse_poly("z1 + z1^-1", 1).unwrap();
        let g = global_weyl_character(&f, &psi, &wv(&[1]));
        assert_eq!(crate::exactalg::format::character_text(&g), "(z1^-1 + z1) / [(1 - q)]");
        assert!(global_weyl_character(&f, &LaurentPoly::one(1), &wv(&[0])).num().is_one());
    }
}

