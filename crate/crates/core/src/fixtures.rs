//! Fixture files bundled with the crate.

use crate::charalg::{CharAlgError, WeightedPresentation};
use crate::toda::{parse_operator, DifferenceOperator};

pub const C2_REDUCED: &str = include_str!("../fixtures/zastava/c2_reduced.json");
pub const C2_FULL: &str = include_str!("../fixtures/zastava/c2_full.json");
pub const G2_REDUCED: &str = include_str!("../fixtures/zastava/g2_reduced.json");

/// Bundled zastava presentations by file stem.
pub const ZASTAVA: &[(&str, &str)] = &[("c2_reduced", C2_REDUCED), ("c2_full", C2_FULL), ("g2_reduced", G2_REDUCED)];

pub fn zastava(name: &str) -> Option<Result<WeightedPresentation, CharAlgError>> {
    ZASTAVA.iter().find(|(n, _)| *n == name).map(|(_, s)| WeightedPresentation::from_json_str(s))
}

pub fn c2_reduced() -> WeightedPresentation {
    WeightedPresentation::from_json_str(C2_REDUCED).expect("bundled fixture parses")
}

pub fn c2_full() -> WeightedPresentation {
    WeightedPresentation::from_json_str(C2_FULL).expect("bundled fixture parses")
}

pub fn g2_reduced() -> WeightedPresentation {
    WeightedPresentation::from_json_str(G2_REDUCED).expect("bundled fixture parses")
}

pub const A1_TODA: &str = include_str!("../fixtures/operators/a1_toda.json");

/// Bundled operator configs by file stem.
pub const OPERATORS: &[(&str, &str)] = &[("a1_toda", A1_TODA)];

pub fn a1_toda() -> DifferenceOperator {
    parse_operator(A1_TODA).expect("bundled operator parses")
}
