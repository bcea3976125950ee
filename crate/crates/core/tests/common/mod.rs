use zastava_core::toda::{parse_operator, DifferenceOperator};

/// The bundled A1 operator plus a shift-0 identity term, with eigenvalue
/// raised by 1: same eigenfunctions, different config.
pub fn a1_shifted_config(eigen_constant: &str) -> DifferenceOperator {
    let src = format!(
        r#"{{
  "type": "A1",
  "terms": [
    {{"shift": [-1], "coeff": [{{"coeff": "1", "q": 0, "x": [0]}}]}},
    {{"shift": [0], "coeff": [{{"coeff": "1", "q": 0, "x": [0]}}]}},
    {{"shift": [1], "coeff": [{{"coeff": "1", "q": 0, "x": [0]}}, {{"coeff": "-1", "q": 1, "x": [1]}}]}}
  ],
  "eigenvalue": [[0, [-1], "1"], [0, [0], "{eigen_constant}"], [0, [1], "1"]],
  "provenance": "test config"
}}"#
    );
    parse_operator(&src).expect("test operator parses")
}
