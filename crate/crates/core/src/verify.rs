//! Verification suites: each check recomputes both sides of an identity
//! exactly and reports pass/fail with the first counterexample.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::Serialize;

use crate::charalg::{self, a1_tower_presentation, audit_homogeneity, hypersurface_series};
use crate::demazure::{
    build_affine, demazure_character, frozen_conventions, global_weyl_character, is_weyl_invariant, lambda_pochhammer,
    weyl_character_finite, SignConvention,
};
use crate::exactalg::format::{character_text, monomial_text, poly_text};
use crate::exactalg::{GradedWeight, LaurentPoly, RationalCharacter};
use crate::fixtures;
use crate::jfun::{boundary_weight, check_theorem_main, compute_j, q_pochhammer_factors, JFunction};
use crate::rootdata::{build_folding, dominant_weights_up_to, positive_box_up_to, DynkinType, FoldingDatum, RootVector};
use crate::toda::{compare_tables, eigencheck, solve_whittaker, DifferenceOperator};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn pass(name: &str, detail: impl Into<String>) -> Self {
        Check { name: name.to_string(), status: Status::Pass, detail: detail.into() }
    }

    fn fail(name: &str, detail: impl Into<String>) -> Self {
        Check { name: name.to_string(), status: Status::Fail, detail: detail.into() }
    }

    fn skipped(name: &str, detail: impl Into<String>) -> Self {
        Check { name: name.to_string(), status: Status::Skipped, detail: detail.into() }
    }

    fn from_result(name: &str, r: Result<String, String>) -> Self {
        match r {
            Ok(d) => Check::pass(name, d),
            Err(d) => Check::fail(name, d),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Main,
    Weights,
    Whittaker,
    Corollary,
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "main" => Ok(Suite::Main),
            "weights" => Ok(Suite::Weights),
            "whittaker" => Ok(Suite::Whittaker),
            "corollary" => Ok(Suite::Corollary),
            _ => Err(format!("unknown suite `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }
}

fn fold(t: &str) -> FoldingDatum {
    build_folding(t.parse().expect("known type label"))
}

fn err<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

/// `J_{α_1+α_2}` against the closed form of a single-relation fixture.
pub fn theorem_main(type_label: &str, fixture: &charalg::WeightedPresentation) -> Check {
    let name = format!("theorem-main {type_label}");
    let f = fold(type_label);
    let r = check_theorem_main(&f, &RootVector(vec![1, 1]), fixture, crate::jfun::DEFAULT_SERIES_BOUND)
        .map_err(err)
        .and_then(|rep| match rep.first_difference {
            None if rep.passed => Ok(format!("J_(1,1) = H(fixture) exactly ({:?})", rep.mode)),
            Some((w, a, b)) => Err(format!("first difference at {}: J has {a}, fixture has {b}", monomial_text(&w))),
            None => Err("closed forms differ".to_string()),
        });
    Check::from_result(&name, r)
}

/// `J_{nα}` for A1 against the free ring of pairs of polynomials, `n ≤ max_n`.
pub fn a1_tower(max_n: i64) -> Check {
    let f = fold("A1");
    let r = (|| {
        for n in 1..=max_n {
            let j = compute_j(&f, &RootVector(vec![n])).map_err(err)?;
            let free = charalg::free_character(&a1_tower_presentation(&f, n).map_err(err)?).map_err(err)?;
            if !j.rc_equal(&free) {
                return Err(format!("n = {n}: J = {} but free ring gives {}", character_text(&j), character_text(&free)));
            }
        }
        Ok(format!("J_(n) = 1/((q)_n Π_k (1 - q^k z^α̌)) for n ≤ {max_n}"))
    })();
    Check::from_result("a1-tower", r)
}

/// Degreewise Hilbert function of the full C2 fixture against the series of
/// the reduced hypersurface.
pub fn elimination(bound: i64) -> Check {
    let r = (|| {
        let dims = charalg::graded_hilbert_function(&fixtures::c2_full(), bound).map_err(err)?;
        let full = charalg::hilbert_function_to_poly(2, &dims);
        let reduced = hypersurface_series(&fixtures::c2_reduced()).map_err(err)?.series_expand(bound).map_err(err)?;
        let diff = &full - &reduced;
        let first = diff.terms().next().map(|(w, _)| w.clone());
        match first {
            None => Ok(format!("{} multidegrees agree through q^{bound}", dims.len())),
            Some(w) => Err(format!(
                "multidegree {}: full fixture {} vs reduced {}",
                monomial_text(&w),
                full.coeff(&w),
                reduced.coeff(&w)
            )),
        }
    })();
    Check::from_result("c2-elimination", r)
}

pub const FOLDING_TYPES: &[&str] = &["A1", "A2", "B2", "C2", "B3", "C3", "G2", "F4"];

/// `d · (α, α) = (a(α), a(α))` on all positive `α` with `|α| ≤ bound`.
pub fn folding_identity(bound: i64) -> Check {
    let r = (|| {
        let mut count = 0;
        for t in FOLDING_TYPES {
            let f = fold(t);
            for alpha in positive_box_up_to(f.rank(), bound) {
                let a = f.a_map(&alpha).map_err(err)?;
                let lhs = f.d * f.norm(&alpha);
                let rhs = f.parent.pairing(&a, &a);
                if lhs != rhs {
                    return Err(format!("{t}, α = {alpha}: d(α,α) = {lhs}, (a(α),a(α)) = {rhs}"));
                }
                count += 1;
            }
        }
        Ok(format!("{count} vectors over {}", FOLDING_TYPES.join(", ")))
    })();
    Check::from_result("folding-identity", r)
}

pub const RECURRENCE_TYPES: &[&str] = &["C2", "G2", "A1", "A2"];

/// Positive roots in simple-root coordinates, closed under simple reflections.
pub fn positive_roots(f: &FoldingDatum) -> Vec<RootVector> {
    let n = f.rank();
    let mut out: Vec<RootVector> = (0..n).map(|i| RootVector::simple(n, i)).collect();
    let mut k = 0;
    while k < out.len() {
        for i in 0..n {
            let mut r = out[k].clone();
            r.0[i] -= (0..n).map(|j| out[k].0[j] * f.cartan_g[i][j]).sum::<i64>();
            if r.is_nonnegative() && !r.is_zero() && !out.contains(&r) {
                out.push(r);
            }
        }
        k += 1;
    }
    out
}

/// The computed family satisfies the recurrence verbatim for `|α| ≤ bound`
/// and keeps the boundary pole `1 - q^{(α,α)/2} z^{α*}` on positive roots.
pub fn resubstitution(bound: i64) -> Check {
    let r = (|| {
        let mut count = 0;
        for t in RECURRENCE_TYPES {
            let f = fold(t);
            let mut j = JFunction::new(&f);
            let roots = positive_roots(&f);
            for alpha in positive_box_up_to(f.rank(), bound) {
                if !j.satisfies_recurrence(&alpha).map_err(err)? {
                    return Err(format!("{t}, α = {alpha}: recurrence fails"));
                }
                let jj = j.compute(&alpha).map_err(err)?;
                if roots.contains(&alpha) && !jj.has_factor(&boundary_weight(&f, &alpha)) {
                    return Err(format!("{t}, α = {alpha}: boundary factor missing"));
                }
                count += 1;
            }
        }
        Ok(format!("{count} pairs (type, α) with |α| ≤ {bound}"))
    })();
    Check::from_result("recurrence-resubstitution", r)
}

/// Every coefficient of the q-expansion of `J_α` up to `q^degree` is a
/// z-Laurent polynomial with nonnegative integer coefficients.
pub fn series_positivity(bound: i64, degree: i64) -> Check {
    let r = (|| {
        let mut count = 0;
        for t in RECURRENCE_TYPES {
            let f = fold(t);
            let mut j = JFunction::new(&f);
            for alpha in positive_box_up_to(f.rank(), bound) {
                let s = j.compute(&alpha).map_err(err)?.series_expand(degree).map_err(err)?;
                if let Some((w, c)) = s.terms().find(|(_, c)| !c.is_integer() || *c < &num_traits::Zero::zero()) {
                    return Err(format!("{t}, α = {alpha}: coefficient {c} at {}", monomial_text(w)));
                }
                count += 1;
            }
        }
        Ok(format!("{count} series through q^{degree}"))
    })();
    Check::from_result("series-positivity", r)
}

/// The z-degree-0 part of `J_α` agrees with `1/(q)_α` on simple roots and
/// on `α_1 + α_2` for C2 and G2.
pub fn z_degree_zero(degree: i64) -> Check {
    let r = (|| {
        for t in ["A1", "A2", "C2", "G2"] {
            let f = fold(t);
            let n = f.rank();
            let mut alphas: Vec<RootVector> = (0..n).map(|i| RootVector::simple(n, i)).collect();
            if t == "C2" || t == "G2" {
                alphas.push(RootVector(vec![1, 1]));
            }
            for alpha in alphas {
                let s = compute_j(&f, &alpha).map_err(err)?.series_expand(degree).map_err(err)?;
                let zero = s.z_coefficient(&vec![0; n]);
                let poch = RationalCharacter::new(LaurentPoly::one(n), q_pochhammer_factors(&f, &alpha).map_err(err)?)
                    .map_err(err)?
                    .series_expand(degree)
                    .map_err(err)?;
                if zero != poch {
                    return Err(format!("{t}, α = {alpha}: z^0 part {} vs {}", poly_text(&zero), poly_text(&poch)));
                }
            }
        }
        Ok(format!("through q^{degree}"))
    })();
    Check::from_result("z-degree-zero", r)
}

/// Homogeneity of every bundled fixture under its stored weights.
pub fn fixture_homogeneity() -> Check {
    let r = (|| {
        for (name, src) in fixtures::ZASTAVA {
            let p = charalg::WeightedPresentation::from_json_str(src).map_err(err)?;
            audit_homogeneity(&p).map_err(|e| format!("{name}: {e}"))?;
        }
        Ok(format!("{} fixtures", fixtures::ZASTAVA.len()))
    })();
    Check::from_result("fixture-homogeneity", r)
}

/// Boundary variables carry `q^{(α,α)/2} z^{α*}`; projection coordinates
/// have z-weight 0 and q-weights `d_i s`.
pub fn boundary_weights() -> Check {
    let r = (|| {
        let alpha = RootVector(vec![1, 1]);
        for (t, p, boundary, proj) in [
            ("C2", fixtures::c2_reduced(), "a3", [("a1", 1), ("a12", 2)]),
            ("G2", fixtures::g2_reduced(), "c", [("a", 1), ("f", 3)]),
        ] {
            let f = fold(t);
            let weight = |n: &str| -> Result<GradedWeight, String> {
                Ok(p.variables[p.variable_index(n).ok_or(format!("{t}: no variable {n}"))?].weight.clone())
            };
            if weight(boundary)? != boundary_weight(&f, &alpha) {
                return Err(format!("{t}: boundary variable {boundary} has weight {:?}", weight(boundary)?));
            }
            for (v, q) in proj {
                if weight(v)? != GradedWeight::new(q, vec![0, 0]) {
                    return Err(format!("{t}: projection coordinate {v} has weight {:?}", weight(v)?));
                }
            }
        }
        Ok("a3 (C2) and c (G2) carry q^{(α,α)/2} z^{α*}".to_string())
    })();
    Check::from_result("boundary-weights", r)
}

fn convention_for(t: &str) -> SignConvention {
    frozen_conventions().get(t).map(|r| r.sign_convention).unwrap_or(SignConvention::Minus)
}

pub const PSI_HAT_TYPES: &[&str] = &["C2", "G2", "A1"];

/// Positivity, W-invariance, normalization and the `q = 0` limit of `Ψ̂_λ`.
pub fn psi_hat_properties(bound: i64) -> Check {
    let r = (|| {
        let mut count = 0;
        for t in PSI_HAT_TYPES {
            let f = fold(t);
            let a = build_affine(&f).map_err(err)?;
            let conv = convention_for(t);
            let n = f.rank();
            for lambda in dominant_weights_up_to(n, bound) {
                let psi = demazure_character(&a, &f, &lambda, conv).map_err(err)?;
                let at = |what: &str| format!("{t}, λ = {lambda}: {what}");
                if !psi.is_nonnegative_integral() {
                    return Err(at("negative or fractional coefficient"));
                }
                if !is_weyl_invariant(&f, &psi) {
                    return Err(at("not W-invariant"));
                }
                if lambda.is_zero() && !psi.is_one() {
                    return Err(at("Ψ̂_0 ≠ 1"));
                }
                if !psi.z_coefficient(&lambda.0).coeff(&GradedWeight::unit(n)).is_one() {
                    return Err(at("z^λ coefficient does not start with 1"));
                }
                let chi = weyl_character_finite(&f, &lambda).map_err(err)?;
                if psi.at_q_zero().as_ref() != Some(&chi) {
                    return Err(at("q = 0 specialization differs from the Weyl character"));
                }
                count += 1;
            }
        }
        Ok(format!("{count} weights over {}", PSI_HAT_TYPES.join(", ")))
    })();
    Check::from_result("psi-hat-properties", r)
}

/// Solved A1 table against `Ψ̂_λ / (q)_λ`, plus the eigen-equation on
/// `Σ m_i ≤ bound`.
pub fn toda_chain(bound: i64) -> Check {
    let r = (|| {
        let op = fixtures::a1_toda();
        let f = op.folding();
        let a = build_affine(&f).map_err(err)?;
        // the eigen-equation at height `bound` reads entries one step higher
        let lead = op.terms.iter().map(|t| t.height()).max().unwrap_or(0).max(0);
        let table = solve_whittaker(&op, bound + lead).map_err(err)?;
        for (lambda, value) in table.entries() {
            let psi_hat = demazure_character(&a, &f, &lambda, convention_for("A1")).map_err(err)?;
            let global = global_weyl_character(&f, &psi_hat, &lambda);
            if !value.rc_equal(&global) {
                return Err(format!(
                    "λ = {lambda}: Toda gives {}, Demazure gives {}",
                    character_text(value),
                    character_text(&global)
                ));
            }
        }
        let check_box = bound;
        let report = eigencheck(&op, &table, check_box).map_err(err)?;
        if let Some((l, res)) = report.failures.first() {
            return Err(format!("residual at λ = {l}: {}", character_text(res)));
        }
        Ok(format!(
            "{} entries agree; {} residuals zero (Σm ≤ {check_box} and {} boundary points)",
            table.len(),
            report.checked.len() + report.boundary.len(),
            report.boundary.len()
        ))
    })();
    Check::from_result("toda-chain-a1", r)
}

/// Solved Toda entries times `Π (1 - q_i^r)` are W-invariant polynomials with
/// nonnegative integer coefficients.
pub fn toda_positivity(op: &DifferenceOperator, bound: i64) -> Check {
    let name = format!("toda-positivity {}", op.g_type);
    let r = (|| {
        let f = op.folding();
        let table = solve_whittaker(op, bound).map_err(err)?;
        for (lambda, value) in table.entries() {
            let scaled = value.mul_poly(&lambda_pochhammer(&f, &lambda)).cancelled();
            if scaled.den_len() != 0 {
                return Err(format!("λ = {lambda}: {} is not a polynomial", character_text(&scaled)));
            }
            if !scaled.num().is_nonnegative_integral() || !is_weyl_invariant(&f, scaled.num()) {
                return Err(format!("λ = {lambda}: {} fails positivity or invariance", poly_text(scaled.num())));
            }
        }
        Ok(format!("{} entries", table.len()))
    })();
    Check::from_result(&name, r)
}

/// Two or more configs of one type must produce the same table and each
/// must pass the eigen-equation on `Σ m_i ≤ bound`.
pub fn corollary(configs: &[DifferenceOperator], bound: i64) -> Vec<Check> {
    let mut by_type: BTreeMap<DynkinType, Vec<&DifferenceOperator>> = BTreeMap::new();
    for op in configs {
        by_type.entry(op.g_type).or_default().push(op);
    }
    by_type.retain(|_, v| v.len() >= 2);
    if by_type.is_empty() {
        return vec![Check::skipped("corollary", "skipped: no external operator configs")];
    }
    let mut out = Vec::new();
    for (t, ops) in by_type {
        let name = format!("corollary {t}");
        let r = (|| {
            let mut tables = Vec::new();
            for op in &ops {
                let lead = op.terms.iter().map(|t| t.height()).max().unwrap_or(0).max(0);
                let table = solve_whittaker(op, bound + lead).map_err(err)?;
                let report = eigencheck(op, &table, bound).map_err(err)?;
                if let Some((l, _)) = report.failures.first() {
                    return Err(format!("config `{}` fails the eigen-equation at {l}", op.provenance));
                }
                tables.push(table);
            }
            for (k, other) in tables.iter().enumerate().skip(1) {
                let diff: Vec<_> = compare_tables(&tables[0], other)
                    .into_iter()
                    .filter(|l| l.height() <= bound)
                    .collect();
                if let Some(l) = diff.first() {
                    return Err(format!("configs 1 and {} differ at λ = {l}", k + 1));
                }
            }
            Ok(format!("{} configs agree on Σm ≤ {bound}", ops.len()))
        })();
        out.push(Check::from_result(&name, r));
    }
    out
}

/// Runs one suite. `operators` are the configs visible to the corollary and
/// Toda checks (bundled ones plus any supplied externally).
pub fn run_suite(suite: Suite, operators: &[DifferenceOperator]) -> SuiteReport {
    let checks = match suite {
        Suite::Main => vec![
            theorem_main("C2", &fixtures::c2_reduced()),
            theorem_main("G2", &fixtures::g2_reduced()),
            a1_tower(4),
            elimination(10),
            resubstitution(5),
            series_positivity(5, 12),
            z_degree_zero(12),
        ],
        Suite::Weights => vec![folding_identity(6), fixture_homogeneity(), boundary_weights()],
        Suite::Whittaker => {
            let mut v = vec![psi_hat_properties(3), toda_chain(6)];
            v.extend(operators.iter().map(|op| toda_positivity(op, 6)));
            v
        }
        Suite::Corollary => corollary(operators, 3),
    };
    SuiteReport { suite, checks }
}

/// Operators bundled with the crate.
pub fn bundled_operators() -> Vec<DifferenceOperator> {
    fixtures::OPERATORS.iter().map(|(_, s)| crate::toda::parse_operator(s).expect("bundled operator parses")).collect()
}
