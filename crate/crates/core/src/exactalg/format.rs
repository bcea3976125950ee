//! Canonical text and JSON forms.
//!
//! Text: a monomial prints as `q^K*z1^M1*...*zn^Mn` with zero exponents
//! omitted and unit exponents written bare; a character prints as
//! `NUM / [(1 - MONO) (1 - MONO) ...]`, with `NUM` parenthesized when it has
//! more than one term and the bracket omitted for a trivial denominator.
//!
//! JSON: a polynomial is `[[k, [m...], "p/r"], ...]`; a character is
//! `{"num": POLY, "den": [[k, [m...]], ...]}` with factors repeated by
//! multiplicity. Both follow the canonical term order.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::{ExactAlgError, GradedWeight, LaurentPoly, RationalCharacter};

pub fn monomial_text(w: &GradedWeight) -> String {
    let mut parts = Vec::new();
    match w.q {
        0 => {}
        1 => parts.push("q".to_string()),
        k => parts.push(format!("q^{k}")),
    }
    for (i, m) in w.z.iter().enumerate() {
        match *m {
            0 => {}
            1 => parts.push(format!("z{}", i + 1)),
            m => parts.push(format!("z{}^{}", i + 1, m)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

pub fn poly_text(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (w, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        if w.is_unit() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&monomial_text(w));
        } else {
            out.push_str(&format!("{}*{}", abs, monomial_text(w)));
        }
    }
    out
}

pub fn character_text(r: &RationalCharacter) -> String {
    let num = poly_text(r.num());
    if r.den_len() == 0 {
        return num;
    }
    let num = if r.num().len() > 1 { format!("({num})") } else { num };
    let factors: Vec<String> = r.den_factors().iter().map(|w| format!("(1 - {})", monomial_text(w))).collect();
    format!("{} / [{}]", num, factors.join(" "))
}

fn parse_err(msg: impl Into<String>) -> ExactAlgError {
    ExactAlgError::Parse(msg.into())
}

fn parse_rational(s: &str) -> Result<BigRational, ExactAlgError> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| parse_err(format!("bad coefficient `{s}`")))?;
    let d: BigInt = d.trim().parse().map_err(|_| parse_err(format!("bad coefficient `{s}`")))?;
    if d.is_zero() {
        return Err(parse_err("zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

pub fn parse_monomial(s: &str, rank: usize) -> Result<GradedWeight, ExactAlgError> {
    let mut w = GradedWeight::unit(rank);
    if s.trim() == "1" {
        return Ok(w);
    }
    for factor in s.split('*') {
        let factor = factor.trim();
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => (b, e.parse::<i64>().map_err(|_| parse_err(format!("bad exponent in `{factor}`")))?),
            None => (factor, 1),
        };
        if base == "q" {
            w.q += exp;
        } else if let Some(idx) = base.strip_prefix('z') {
            let i: usize = idx.parse().map_err(|_| parse_err(format!("bad variable `{base}`")))?;
            if i == 0 || i > rank {
                return Err(parse_err(format!("variable `{base}` out of range for rank {rank}")));
            }
            w.z[i - 1] += exp;
        } else {
            return Err(parse_err(format!("unknown variable `{base}`")));
        }
    }
    Ok(w)
}

fn parse_term(s: &str, rank: usize) -> Result<(GradedWeight, BigRational), ExactAlgError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(parse_err("empty term"));
    }
    let first = s.split('*').next().unwrap_or("");
    if first.starts_with(|c: char| c.is_ascii_digit()) {
        let coeff = parse_rational(first)?;
        let rest = s[first.len()..].trim_start_matches('*');
        let w = if rest.is_empty() { GradedWeight::unit(rank) } else { parse_monomial(rest, rank)? };
        Ok((w, coeff))
    } else {
        Ok((parse_monomial(s, rank)?, BigRational::one()))
    }
}

/// Parses the canonical polynomial text form.
pub fn parse_poly(s: &str, rank: usize) -> Result<LaurentPoly, ExactAlgError> {
    let s = s.trim();
    if s == "0" {
        return Ok(LaurentPoly::zero(rank));
    }
    let (mut sign, mut rest) = match s.strip_prefix('-') {
        Some(r) => (-1i64, r),
        None => (1, s),
    };
    let mut p = LaurentPoly::zero(rank);
    loop {
        let plus = rest.find(" + ");
        let minus = rest.find(" - ");
        let cut = match (plus, minus) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let (head, next) = match cut {
            Some(i) => (&rest[..i], Some((&rest[i + 3..], if rest[i..].starts_with(" - ") { -1 } else { 1 }))),
            None => (rest, None),
        };
        let (w, c) = parse_term(head, rank)?;
        p.add_term(w, if sign < 0 { -c } else { c });
        match next {
            Some((r, sg)) => {
                rest = r;
                sign = sg;
            }
            None => break,
        }
    }
    Ok(p)
}

/// Parses the canonical character text form.
pub fn parse_character(s: &str, rank: usize) -> Result<RationalCharacter, ExactAlgError> {
    let s = s.trim();
    let Some((num, den)) = s.split_once(" / [") else {
        return Ok(RationalCharacter::from_poly(parse_poly(s, rank)?));
    };
    let num = num.trim();
    let num = num.strip_prefix('(').and_then(|n| n.strip_suffix(')')).unwrap_or(num);
    let den = den.trim().strip_suffix(']').ok_or_else(|| parse_err("unterminated denominator"))?;
    let mut r = RationalCharacter::from_poly(parse_poly(num, rank)?);
    for f in den.split(')').map(str::trim).filter(|f| !f.is_empty()) {
        let inner = f
            .strip_prefix("(1 - ")
            .ok_or_else(|| parse_err(format!("bad denominator factor `{f}`")))?;
        r.push_factor(parse_monomial(inner, rank)?)?;
    }
    Ok(r)
}

fn weight_json(w: &GradedWeight) -> Value {
    json!([w.q, w.z])
}

pub fn poly_json(p: &LaurentPoly) -> Value {
    Value::Array(p.terms().map(|(w, c)| json!([w.q, w.z, c.to_string()])).collect())
}

pub fn character_json(r: &RationalCharacter) -> Value {
    json!({
        "num": poly_json(r.num()),
        "den": Value::Array(r.den_factors().iter().map(weight_json).collect()),
    })
}

fn weight_from_json(v: &Value, rank: Option<usize>) -> Result<GradedWeight, ExactAlgError> {
    let arr = v.as_array().ok_or_else(|| parse_err("expected [k, [m...], ...]"))?;
    let q = arr.first().and_then(Value::as_i64).ok_or_else(|| parse_err("missing q-exponent"))?;
    let z: Vec<i64> = arr
        .get(1)
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("missing z-exponent"))?
        .iter()
        .map(|m| m.as_i64().ok_or_else(|| parse_err("non-integer exponent")))
        .collect::<Result<_, _>>()?;
    if let Some(r) = rank {
        if z.len() != r {
            return Err(ExactAlgError::RankMismatch { left: r, right: z.len() });
        }
    }
    Ok(GradedWeight::new(q, z))
}

fn coeff_from_json(v: &Value) -> Result<BigRational, ExactAlgError> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(i.into()))
            .ok_or_else(|| parse_err("non-integer numeric coefficient")),
        _ => Err(parse_err("coefficient must be a string or integer")),
    }
}

pub fn poly_from_json(v: &Value, rank: usize) -> Result<LaurentPoly, ExactAlgError> {
    let arr = v.as_array().ok_or_else(|| parse_err("polynomial must be an array of terms"))?;
    let mut p = LaurentPoly::zero(rank);
    for t in arr {
        let w = weight_from_json(t, Some(rank))?;
        let c = t
            .as_array()
            .and_then(|a| a.get(2))
            .ok_or_else(|| parse_err("term is missing its coefficient"))
            .and_then(coeff_from_json)?;
        p.add_term(w, c);
    }
    Ok(p)
}

pub fn character_from_json(v: &Value, rank: usize) -> Result<RationalCharacter, ExactAlgError> {
    let num = poly_from_json(v.get("num").ok_or_else(|| parse_err("missing `num`"))?, rank)?;
    let mut r = RationalCharacter::from_poly(num);
    if let Some(den) = v.get("den") {
        for f in den.as_array().ok_or_else(|| parse_err("`den` must be an array"))? {
            r.push_factor(weight_from_json(f, Some(rank))?)?;
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::super::int;
    use super::*;
    use proptest::prelude::*;

    fn w(q: i64, z: &[i64]) -> GradedWeight {
        GradedWeight::new(q, z.to_vec())
    }

    #[test]
    fn text_examples() {
        let p = LaurentPoly::from_terms(1, [(w(0, &[0]), int(1)), (w(1, &[1]), int(1))]);
        assert_eq!(poly_text(&p), "1 + q*z1");
        let r = RationalCharacter::one(1).with_factor(w(1, &[0])).unwrap();
        assert_eq!(character_text(&r), "1 / [(1 - q)]");
        assert_eq!(poly_text(&LaurentPoly::zero(2)), "0");
        let n = LaurentPoly::from_terms(
            2,
            [(w(0, &[0, 0]), int(1)), (w(3, &[1, -2]), int(-1)), (w(2, &[0, 0]), BigRational::new(3.into(), 2.into()))],
        );
        assert_eq!(poly_text(&n), "1 + 3/2*q^2 - q^3*z1*z2^-2");
    }

    #[test]
    fn json_shape() {
        let r = RationalCharacter::new(
            LaurentPoly::from_terms(2, [(w(0, &[0, 0]), int(1)), (w(3, &[1, 1]), int(-1))]),
            [w(1, &[0, 0]), w(1, &[0, 0])],
        )
        .unwrap();
        let j = character_json(&r);
        assert_eq!(j.to_string(), r#"{"den":[[1,[0,0]],[1,[0,0]]],"num":[[0,[0,0],"1"],[3,[1,1],"-1"]]}"#);
        assert_eq!(character_from_json(&j, 2).unwrap(), r);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-3i64..6, -3i64..4, -3i64..4, -5i64..6, 1i64..4), 0..6).prop_map(|ts| {
            LaurentPoly::from_terms(
                2,
                ts.into_iter().map(|(q, a, b, n, d)| (w(q, &[a, b]), BigRational::new(n.into(), d.into()))),
            )
        })
    }

    fn arb_character() -> impl Strategy<Value = RationalCharacter> {
        (arb_poly(), prop::collection::vec((0i64..4, -2i64..3, -2i64..3), 0..4)).prop_map(|(p, fs)| {
            let mut r = RationalCharacter::from_poly(p);
            for (q, a, b) in fs {
                let f = w(q, &[a, b]);
                if !f.is_unit() {
                    r.push_factor(f).unwrap();
                }
            }
            r
        })
    }

    proptest! {
        #[test]
        fn text_round_trip(r in arb_character()) {
            let s = character_text(&r);
            let back = parse_character(&s, 2).unwrap();
            prop_assert_eq!(character_text(&back), s);
            prop_assert!(back.rc_equal(&r));
        }

        #[test]
        fn json_round_trip(r in arb_character()) {
            let j = character_json(&r);
            let back = character_from_json(&j, 2).unwrap();
            prop_assert_eq!(character_json(&back).to_string(), j.to_string());
        }
    }
}
