use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{
    build_affine, is_weyl_invariant, normalize_character, raw_demazure_character, translation_word,
    weyl_character_finite, DemazureError, SignConvention,
};
use crate::rootdata::{dominant_weights_up_to, FoldingDatum};

pub const CONVENTIONS_JSON: &str = include_str!("../../fixtures/conventions.json");

/// Resolved Demazure convention of one type, with golden word lengths keyed
/// by `λ` written as `m1,m2,...`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConventionRecord {
    pub sign_convention: SignConvention,
    pub flip_applied: bool,
    pub word_lengths: BTreeMap<String, usize>,
}

/// The conventions file shipped with the crate, keyed by type label.
pub fn frozen_conventions() -> BTreeMap<String, ConventionRecord> {
    serde_json::from_str(CONVENTIONS_JSON).expect("bundled conventions file parses")
}

fn lambda_key(l: &[i64]) -> String {
    l.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",")
}

/// Tries each sign convention on all dominant `λ` with `Σ m_i ≤ bound` and
/// returns the first one whose characters normalize, are W-invariant with
/// nonnegative integer coefficients, and specialize at `q = 0` to the Weyl
/// character.
pub fn resolve_convention(folding: &FoldingDatum, bound: i64) -> Result<ConventionRecord, DemazureError> {
    let a = build_affine(folding)?;
    'conv: for conv in [SignConvention::Minus, SignConvention::Plus] {
        let mut flips = Vec::new();
        let mut word_lengths = BTreeMap::new();
        for lambda in dominant_weights_up_to(folding.rank(), bound) {
            let Ok(raw) = raw_demazure_character(&a, folding, &lambda, conv) else {
                continue 'conv;
            };
            let Ok((psi, flipped)) = normalize_character(folding, &raw, &lambda) else {
                continue 'conv;
            };
            let chi = weyl_character_finite(folding, &lambda)?;
            let ok = psi.is_nonnegative_integral()
                && is_weyl_invariant(folding, &psi)
                && psi.at_q_zero().as_ref() == Some(&chi);
            if !ok {
                continue 'conv;
            }
            flips.push(flipped);
            word_lengths.insert(lambda_key(&lambda.0), translation_word(&a, folding, &lambda, conv)?.len());
        }
        let flip_applied = flips.iter().any(|&f| f);
        return Ok(ConventionRecord { sign_convention: conv, flip_applied, word_lengths });
    }
    Err(DemazureError::ConventionUnresolved(folding.g_type.to_string()))
}
