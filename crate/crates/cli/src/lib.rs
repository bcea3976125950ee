//! Command-line front end for `zastava-core`.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use zastava_core::charalg::{self, graded_hilbert_function, hilbert_function_to_poly, WeightedPresentation};
use zastava_core::demazure::{
    build_affine, demazure_character, frozen_conventions, global_weyl_character, resolve_convention, translation_word,
    SignConvention,
};
use zastava_core::exactalg::format::{character_json, character_text, monomial_text, poly_json, poly_text};
use zastava_core::fixtures;
use zastava_core::toda::{eigencheck, parse_operator, solve_whittaker, DifferenceOperator};
use zastava_core::verify::{self, Suite};
use zastava_core::{build_folding, compute_j, DynkinType, FoldingDatum, RootVector, WeightVector};

#[derive(Debug, Parser)]
#[command(name = "zastava", version, about = "Exact characters of twisted zastava spaces and related q-series")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the folding datum of a type.
    Fold {
        #[arg(long = "type")]
        g_type: DynkinType,
    },
    /// Compute the J-function of a type at a positive root-lattice vector.
    Jfun {
        #[arg(long = "type")]
        g_type: DynkinType,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Coords,
        /// Also print the q-expansion up to this degree.
        #[arg(long)]
        series: Option<i64>,
    },
    /// Character of a bundled fixture (by name) or a presentation file.
    Hilbert {
        #[arg(long)]
        fixture: String,
        /// Degreewise dimensions through this q-degree.
        #[arg(long, conflicts_with = "closed_form")]
        degree: Option<i64>,
        /// Closed form (free ring or hypersurface).
        #[arg(long)]
        closed_form: bool,
    },
    /// Twisted Demazure character of a dominant weight.
    Demazure {
        #[arg(long = "type")]
        g_type: DynkinType,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Coords,
        /// Print the Demazure character (default).
        #[arg(long, conflicts_with = "global")]
        hat: bool,
        /// Print the global Weyl module character instead.
        #[arg(long)]
        global: bool,
    },
    /// Lattice q-Toda operators.
    Toda {
        #[command(subcommand)]
        action: TodaAction,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        /// Directory of additional operator configs (`*.json`).
        #[arg(long)]
        operators: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum TodaAction {
    /// Solve for the table and check the eigen-equation on the box.
    Check(TodaArgs),
    /// Solve for the table on the box and print it.
    Solve(TodaArgs),
}

#[derive(Debug, Args)]
pub struct TodaArgs {
    /// Operator config: a file path or the name of a bundled config.
    #[arg(long)]
    pub op: String,
    #[arg(long = "box")]
    pub bound: i64,
}

/// Comma-separated integer coordinates, e.g. `1,0,2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coords(pub Vec<i64>);

impl FromStr for Coords {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',').map(|p| p.trim().parse::<i64>().map_err(|e| format!("`{p}`: {e}"))).collect::<Result<_, _>>().map(Coords)
    }
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

/// Rendered output and whether every check in it passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, ok: true }
    }
}

fn render(format: Format, text: String, value: Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(&value).expect("json values serialize"),
    }
}

fn check_rank(f: &FoldingDatum, v: &[i64], what: &str) -> Result<(), String> {
    if v.len() != f.rank() {
        return Err(format!("{what} has {} coordinates, type {} has rank {}", v.len(), f.g_type, f.rank()));
    }
    Ok(())
}

fn matrix_text(m: &[Vec<i64>]) -> String {
    m.iter()
        .map(|r| format!("  [{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
        .collect::<Vec<_>>()
        .join("\n")
}

fn fold(format: Format, t: DynkinType) -> Outcome {
    let f = build_folding(t);
    let text = format!(
        "type {}\nparent {}\nd {}\nd_i {:?}\ncartan\n{}\npairing\n{}\nsigma {:?}\norbit {:?}\na\n{}",
        f.g_type,
        f.parent.label,
        f.d,
        f.d_i,
        matrix_text(&f.cartan_g),
        matrix_text(&f.pairing),
        f.parent.sigma,
        f.parent.orbit,
        matrix_text(&f.a_matrix),
    );
    let value = json!({
        "type": f.g_type.to_string(),
        "parent": f.parent.label,
        "d": f.d,
        "d_i": f.d_i,
        "cartan": f.cartan_g,
        "pairing": f.pairing,
        "parent_cartan": f.parent.cartan,
        "sigma": f.parent.sigma,
        "orbit": f.parent.orbit,
        "a": f.a_matrix,
    });
    Outcome::ok(render(format, text, value))
}

fn jfun(format: Format, t: DynkinType, alpha: Vec<i64>, series: Option<i64>) -> Result<Outcome, String> {
    let f = build_folding(t);
    check_rank(&f, &alpha, "alpha")?;
    let j = compute_j(&f, &RootVector(alpha)).map_err(|e| e.to_string())?;
    let mut text = character_text(&j);
    let mut value = json!({ "closed_form": character_json(&j) });
    if let Some(n) = series {
        let s = j.series_expand(n).map_err(|e| e.to_string())?;
        text = format!("{text}\nseries to q^{n}: {}", poly_text(&s));
        value["series"] = poly_json(&s);
    }
    Ok(Outcome::ok(render(format, text, value)))
}

fn load_presentation(name: &str) -> Result<WeightedPresentation, String> {
    if let Some(p) = fixtures::zastava(name) {
        return p.map_err(|e| e.to_string());
    }
    let src = fs::read_to_string(name).map_err(|e| format!("{name}: {e}"))?;
    WeightedPresentation::from_json_str(&src).map_err(|e| format!("{name}: {e}"))
}

fn hilbert(format: Format, fixture: &str, degree: Option<i64>, closed_form: bool) -> Result<Outcome, String> {
    let p = load_presentation(fixture)?;
    charalg::audit_homogeneity(&p).map_err(|e| e.to_string())?;
    let closed = || -> Result<_, String> {
        match p.relations.len() {
            0 => charalg::free_character(&p),
            _ => charalg::hypersurface_series(&p),
        }
        .map_err(|e| e.to_string())
    };
    if closed_form || (degree.is_none() && p.relations.len() <= 1) {
        let c = closed()?;
        return Ok(Outcome::ok(render(format, character_text(&c), character_json(&c))));
    }
    let n = degree.unwrap_or(zastava_core::jfun::DEFAULT_SERIES_BOUND);
    let dims = graded_hilbert_function(&p, n).map_err(|e| e.to_string())?;
    let text = dims.iter().filter(|(_, d)| **d > 0).map(|(w, d)| format!("{}\t{d}", monomial_text(w))).collect::<Vec<_>>().join("\n");
    let value = json!({
        "degree": n,
        "dimensions": dims.iter().map(|(w, d)| json!([w.q, w.z, d])).collect::<Vec<_>>(),
        "series": poly_json(&hilbert_function_to_poly(p.rank(), &dims)),
    });
    Ok(Outcome::ok(render(format, text, value)))
}

fn convention(f: &FoldingDatum) -> Result<SignConvention, String> {
    if let Some(r) = frozen_conventions().get(&f.g_type.to_string()) {
        return Ok(r.sign_convention);
    }
    resolve_convention(f, 2).map(|r| r.sign_convention).map_err(|e| e.to_string())
}

fn demazure(format: Format, t: DynkinType, lambda: Vec<i64>, global: bool) -> Result<Outcome, String> {
    let f = build_folding(t);
    check_rank(&f, &lambda, "lambda")?;
    let lambda = WeightVector(lambda);
    if !lambda.is_dominant() {
        return Err(format!("lambda = {lambda} is not dominant"));
    }
    let a = build_affine(&f).map_err(|e| e.to_string())?;
    let conv = convention(&f)?;
    let psi = demazure_character(&a, &f, &lambda, conv).map_err(|e| e.to_string())?;
    if global {
        let g = global_weyl_character(&f, &psi, &lambda);
        return Ok(Outcome::ok(render(format, character_text(&g), character_json(&g))));
    }
    let word = translation_word(&a, &f, &lambda, conv).map_err(|e| e.to_string())?;
    let value = json!({
        "affine_type": a.label,
        "sign_convention": conv.to_string(),
        "word": word,
        "character": poly_json(&psi),
    });
    Ok(Outcome::ok(render(format, poly_text(&psi), value)))
}

fn load_operator(op: &str) -> Result<DifferenceOperator, String> {
    if let Some((_, src)) = fixtures::OPERATORS.iter().find(|(name, _)| *name == op) {
        return parse_operator(src).map_err(|e| e.to_string());
    }
    let src = fs::read_to_string(op).map_err(|e| format!("{op}: {e}"))?;
    parse_operator(&src).map_err(|e| format!("{op}: {e}"))
}

fn lead_height(op: &DifferenceOperator) -> i64 {
    op.terms.iter().map(|t| t.height()).max().unwrap_or(0).max(0)
}

fn toda(format: Format, action: &TodaAction) -> Result<Outcome, String> {
    match action {
        TodaAction::Solve(args) => {
            let op = load_operator(&args.op)?;
            let table = solve_whittaker(&op, args.bound).map_err(|e| e.to_string())?;
            let text = table
                .entries()
                .map(|(l, v)| format!("{l}\t{}", character_text(v)))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Outcome::ok(render(format, text, table.to_json())))
        }
        TodaAction::Check(args) => {
            let op = load_operator(&args.op)?;
            let table = solve_whittaker(&op, args.bound + lead_height(&op)).map_err(|e| e.to_string())?;
            let report = eigencheck(&op, &table, args.bound).map_err(|e| e.to_string())?;
            let ok = report.passed();
            let text = match report.failures.first() {
                None => format!(
                    "PASS eigen-equation on {} dominant points and {} boundary points",
                    report.checked.len(),
                    report.boundary.len()
                ),
                Some((l, r)) => format!("FAIL residual at lambda = {l}: {}", character_text(r)),
            };
            let value = json!({
                "passed": ok,
                "checked": report.checked.iter().map(|l| l.0.clone()).collect::<Vec<_>>(),
                "boundary": report.boundary.iter().map(|l| l.0.clone()).collect::<Vec<_>>(),
                "failures": report.failures.iter().map(|(l, r)| json!({"lambda": l.0, "residual": character_json(r)})).collect::<Vec<_>>(),
            });
            Ok(Outcome { output: render(format, text, value), ok })
        }
    }
}

fn operators_in(dir: &Path) -> Result<Vec<DifferenceOperator>, String> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| format!("{}: {e}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let src = fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            parse_operator(&src).map_err(|e| format!("{}: {e}", p.display()))
        })
        .collect()
}

fn run_verify(format: Format, suite: Suite, dir: Option<&Path>) -> Result<Outcome, String> {
    let mut ops = verify::bundled_operators();
    if let Some(d) = dir {
        ops.extend(operators_in(d)?);
    }
    let report = verify::run_suite(suite, &ops);
    let ok = report.passed();
    let mut text = report.checks.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("\n");
    if let Some(c) = report.first_failure() {
        text = format!("{text}\nfirst counterexample: {}", c.detail);
    }
    let value = serde_json::to_value(&report).expect("reports serialize");
    Ok(Outcome { output: render(format, text, value), ok })
}

/// Executes a parsed command line.
pub fn execute(cli: &Cli) -> Result<Outcome, String> {
    let fmt = cli.format;
    match &cli.command {
        Command::Fold { g_type } => Ok(fold(fmt, *g_type)),
        Command::Jfun { g_type, alpha, series } => jfun(fmt, *g_type, alpha.0.clone(), *series),
        Command::Hilbert { fixture, degree, closed_form } => hilbert(fmt, fixture, *degree, *closed_form),
        Command::Demazure { g_type, lambda, global, .. } => demazure(fmt, *g_type, lambda.0.clone(), *global),
        Command::Toda { action } => toda(fmt, action),
        Command::Verify { suite, operators } => run_verify(fmt, *suite, operators.as_deref()),
    }
}
