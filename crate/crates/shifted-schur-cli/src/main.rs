//! `shifted-schur`: exact evaluation and verification toolkit for shifted
//! Schur functions and the Capelli differential operators they govern.

mod suites;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use shifted_schur::capelli::{
    capelli_operator, eigen_check, r_map, restrict, sigma_inverse, sigma_poly, DiffOp,
    GeneratorWord, VarExp,
};
use shifted_schur::characters::{char_small_cycles, mn_character};
use shifted_schur::exact_arith::Rat;
use shifted_schur::lambda_star::{multiply, ShiftedElement};
use shifted_schur::partitions::{dim_gl, dim_sym, Partition, Signature, SkewShape};
use shifted_schur::shifted_eval::{
    dim_skew, sstar_at_partition, sstar_comb, sstar_det, sstar_signature, EvalError, EvalPoint,
};
use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "shifted-schur",
    version,
    about = "Exact arithmetic for shifted Schur functions, symmetric group characters, and Capelli operators"
)]
struct Cli {
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Det,
    Comb,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CapelliCheck {
    Eigen,
    Stability,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CharMethod {
    /// Evaluate the character through shifted Schur values on the padded class.
    Values,
    /// Border-strip recursion.
    Direct,
    /// Run both and require agreement.
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate s*_mu at a rational point or at a signature.
    Eval {
        /// Shape, e.g. "2,1" (empty string for the empty shape).
        #[arg(long)]
        mu: String,
        /// Comma-separated rational coordinates, e.g. "3,1" or "5/2,-1/3".
        #[arg(long, conflicts_with = "at_signature")]
        point: Option<String>,
        /// Weakly decreasing integer tuple, e.g. "2,0,-1".
        #[arg(long)]
        at_signature: Option<String>,
        /// Expected length of the signature (validated when given).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Engine::Both)]
        engine: Engine,
    },
    /// Skew-shape tableau dimension, or symmetric-group/GL dimensions.
    Dim {
        /// Skew shape "outer/inner", e.g. "3,2/2"; bare "3,2" means inner = empty.
        #[arg(long, conflicts_with = "lambda")]
        skew: Option<String>,
        /// Straight shape for dim_sym (or dim_GL with --gl-n).
        #[arg(long)]
        lambda: Option<String>,
        /// Number of GL variables; switches --lambda to the Weyl dimension.
        #[arg(long, requires = "lambda")]
        gl_n: Option<u32>,
    },
    /// Expand a product of s*-basis elements in the s*-basis (JSON map output).
    Expand {
        /// Product grammar: "s[2,1]*s[1]"; "s[]" is the unit.
        #[arg(long)]
        product: String,
    },
    /// Symmetric-group character values on a class with small support.
    Char {
        /// Irreducible label, a partition of l.
        #[arg(long)]
        lambda: String,
        /// Class with the trivial cycles dropped, a partition of k <= l.
        #[arg(long)]
        rho: String,
        #[arg(long, value_enum, default_value_t = CharMethod::Both)]
        method: CharMethod,
    },
    /// Capelli operator checks on the matrix space of the given format.
    Capelli {
        #[arg(long)]
        n: u16,
        #[arg(long)]
        m: u16,
        #[arg(long)]
        mu: String,
        /// Highest weight (required for --check eigen).
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, value_enum, default_value_t = CapelliCheck::Eigen)]
        check: CapelliCheck,
    },
    /// Symmetrize generator words and test the cluster-expansion inverse.
    Sigma {
        /// Comma-separated two-digit letters, e.g. "11,22,12" for E11 E22 E12.
        #[arg(long)]
        word: String,
        #[arg(long)]
        n: u16,
        /// Compare the composed word with the symmetrization of its
        /// cluster-expansion preimage.
        #[arg(long)]
        roundtrip: bool,
    },
    /// Run the verification suites.
    Verify {
        /// Suite name, or "all" for every suite in dependency order.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Size knob: caps shape sizes inside the suites.
        #[arg(long, default_value_t = 4)]
        max_size: u64,
        #[arg(long, default_value_t = shifted_schur::sampling::DEFAULT_SEED)]
        seed: u64,
    },
}

enum Failure {
    /// Bad input: exit 2.
    Usage(String),
    /// A verification or cross-check failed: exit 1.
    Check(String),
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("SHIFTED_SCHUR_THREADS") {
        if let Ok(threads) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(message)) => {
            eprintln!("check failed: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("usage error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Eval { mu, point, at_signature, n, engine } => {
            eval_cmd(cli.json, &mu, point.as_deref(), at_signature.as_deref(), n, engine)
        }
        Command::Dim { skew, lambda, gl_n } => {
            dim_cmd(cli.json, skew.as_deref(), lambda.as_deref(), gl_n)
        }
        Command::Expand { product } => expand_cmd(cli.json, &product),
        Command::Char { lambda, rho, method } => char_cmd(cli.json, &lambda, &rho, method),
        Command::Capelli { n, m, mu, lambda, check } => {
            capelli_cmd(cli.json, n, m, &mu, lambda.as_deref(), check)
        }
        Command::Sigma { word, n, roundtrip } => sigma_cmd(cli.json, &word, n, roundtrip),
        Command::Verify { suite, max_size, seed } => verify_cmd(cli.json, &suite, max_size, seed),
    }
}

fn parse_partition(text: &str) -> Result<Partition, Failure> {
    Partition::from_str(text.trim())
        .map_err(|e| Failure::Usage(format!("invalid partition {text:?}: {e}")))
}

fn parse_rationals(text: &str) -> Result<Vec<Rat>, Failure> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|c| {
            Rat::from_str(c.trim())
                .map_err(|e| Failure::Usage(format!("invalid rational {c:?}: {e}")))
        })
        .collect()
}

fn partition_json(p: &Partition) -> Value {
    Value::Array(p.parts().iter().map(|&x| json!(x)).collect())
}

fn eval_cmd(
    as_json: bool,
    mu: &str,
    point: Option<&str>,
    at_signature: Option<&str>,
    n: Option<usize>,
    engine: Engine,
) -> Result<(), Failure> {
    let mu = parse_partition(mu)?;
    if let Some(sig_text) = at_signature {
        let sig = Signature::from_str(sig_text)
            .map_err(|e| Failure::Usage(format!("invalid signature {sig_text:?}: {e}")))?;
        if let Some(n) = n {
            if n != sig.n() {
                return Err(Failure::Usage(format!(
                    "--n {n} does not match the {}-entry signature",
                    sig.n()
                )));
            }
        }
        let value = sstar_signature(&mu, &sig);
        if as_json {
            let payload = json!({
                "mu": partition_json(&mu),
                "signature": sig.parts(),
                "value": value.to_string(),
            });
            println!("{payload}");
        } else {
            println!("{value}");
        }
        return Ok(());
    }
    let Some(point_text) = point else {
        return Err(Failure::Usage("eval needs --point or --at-signature".into()));
    };
    let coords = parse_rationals(point_text)?;
    let x = EvalPoint::new(coords.clone());
    let n_vars = x.len().max(mu.len());
    let det_value = || -> Result<Rat, Failure> {
        sstar_det(&mu, &x, n_vars).map_err(|e| match e {
            EvalError::DegeneratePoint => Failure::Usage(format!(
                "the determinantal engine needs distinct shifted coordinates: {e}"
            )),
            EvalError::TooFewVariables { .. } => Failure::Usage(e.to_string()),
        })
    };
    let value = match engine {
        Engine::Det => det_value()?,
        Engine::Comb => sstar_comb(&mu, &x),
        Engine::Both => {
            let comb = sstar_comb(&mu, &x);
            match sstar_det(&mu, &x, n_vars) {
                Ok(det) if det == comb => comb,
                Ok(det) => {
                    return Err(Failure::Check(format!(
                        "engines disagree: determinantal {det}, combinatorial {comb}"
                    )))
                }
                Err(EvalError::DegeneratePoint) => comb,
                Err(e) => return Err(Failure::Usage(e.to_string())),
            }
        }
    };
    if as_json {
        let payload = json!({
            "mu": partition_json(&mu),
            "point": coords.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "engine": match engine { Engine::Det => "det", Engine::Comb => "comb", Engine::Both => "both" },
            "value": value.to_string(),
        });
        println!("{payload}");
    } else {
        println!("{value}");
    }
    Ok(())
}

fn dim_cmd(
    as_json: bool,
    skew: Option<&str>,
    lambda: Option<&str>,
    gl_n: Option<u32>,
) -> Result<(), Failure> {
    if let Some(text) = skew {
        let shape = SkewShape::from_str(text)
            .map_err(|e| Failure::Usage(format!("invalid skew shape {text:?}: {e}")))?;
        let outer = shape.outer();
        let inner = shape.inner();
        let value = dim_skew(outer, inner);
        let oracle = shifted_schur::partitions::syt_count_skew(&shape);
        let l = outer.size();
        let k = inner.size();
        let dim_outer = dim_sym(outer);
        let sstar = sstar_at_partition(inner, outer);
        let falling = shifted_schur::exact_arith::falling_int(l as i64, k);
        if value != oracle {
            return Err(Failure::Check(format!(
                "ratio value {value} disagrees with tableau count {oracle}"
            )));
        }
        if as_json {
            let payload = json!({
                "skew": format!("{outer}/{inner}"),
                "value": value.to_string(),
                "dim_outer": dim_outer.to_string(),
                "sstar_inner_at_outer": sstar.to_string(),
                "falling": falling.to_string(),
                "tableau_count": oracle.to_string(),
            });
            println!("{payload}");
        } else {
            println!("{value}");
            println!(
                "ratio: dim[{outer}] * s*[{inner}]([{outer}]) / ({l} falling {k}) = {dim_outer} * {sstar} / {falling}; tableau count: {oracle}"
            );
        }
        return Ok(());
    }
    let Some(lambda_text) = lambda else {
        return Err(Failure::Usage("dim needs --skew or --lambda".into()));
    };
    let lambda = parse_partition(lambda_text)?;
    match gl_n {
        Some(n) => {
            let value = dim_gl(n, &lambda)
                .map_err(|e| Failure::Usage(format!("dimension undefined: {e}")))?;
            if as_json {
                println!(
                    "{}",
                    json!({"lambda": partition_json(&lambda), "gl_n": n, "dim": value.to_string()})
                );
            } else {
                println!("{value}");
            }
        }
        None => {
            let value = dim_sym(&lambda);
            if as_json {
                println!(
                    "{}",
                    json!({"lambda": partition_json(&lambda), "dim": value.to_string()})
                );
            } else {
                println!("{value}");
            }
        }
    }
    Ok(())
}

fn expand_cmd(as_json: bool, product: &str) -> Result<(), Failure> {
    let mut element = ShiftedElement::one();
    let trimmed = product.trim();
    if trimmed.is_empty() {
        return Err(Failure::Usage("empty product".into()));
    }
    for factor in trimmed.split('*') {
        let factor = factor.trim();
        let inner = factor
            .strip_prefix("s[")
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| {
                Failure::Usage(format!("factor {factor:?} is not of the form s[...]"))
            })?;
        let shape = parse_partition(inner)?;
        element = multiply(&element, &ShiftedElement::basis(&shape));
    }
    // The exact coefficient map is the useful artifact, so even the human
    // mode prints it as JSON; --json adds the envelope.
    let mut map = Map::new();
    for (shape, coeff) in element.coeffs() {
        map.insert(shape.bracket_string(), Value::String(coeff.to_string()));
    }
    if as_json {
        println!("{}", json!({"product": trimmed, "coefficients": Value::Object(map)}));
    } else {
        println!("{}", Value::Object(map));
    }
    Ok(())
}

fn char_cmd(as_json: bool, lambda: &str, rho: &str, method: CharMethod) -> Result<(), Failure> {
    let lambda = parse_partition(lambda)?;
    let rho = parse_partition(rho)?;
    let l = lambda.size();
    let k = rho.size();
    if k > l {
        return Err(Failure::Usage(format!(
            "class size {k} exceeds the degree {l} of the representation"
        )));
    }
    let padded = {
        let mut parts = rho.parts().to_vec();
        parts.extend(std::iter::repeat(1).take((l - k) as usize));
        Partition::new(parts)
    };
    let via_values = || {
        char_small_cycles(&lambda, &rho, sstar_at_partition)
            .expect("sizes validated above")
    };
    let direct = || mn_character(&lambda, &padded).expect("sizes match by construction");
    let (values_str, direct_str, agree) = match method {
        CharMethod::Values => (Some(via_values().to_string()), None, true),
        CharMethod::Direct => (None, Some(direct().to_string()), true),
        CharMethod::Both => {
            let a = via_values();
            let b = direct();
            let agree = a == Rat::from_integer(b.clone());
            (Some(a.to_string()), Some(b.to_string()), agree)
        }
    };
    if as_json {
        let payload = json!({
            "lambda": partition_json(&lambda),
            "rho": partition_json(&rho),
            "padded_class": partition_json(&padded),
            "via_values": values_str,
            "direct": direct_str,
            "agree": agree,
        });
        println!("{payload}");
    } else {
        if let Some(v) = &values_str {
            println!("via shifted Schur values: {v}");
        }
        if let Some(v) = &direct_str {
            println!("border-strip recursion:   {v}");
        }
    }
    if !agree {
        return Err(Failure::Check("character methods disagree".into()));
    }
    Ok(())
}

fn capelli_cmd(
    as_json: bool,
    n: u16,
    m: u16,
    mu: &str,
    lambda: Option<&str>,
    check: CapelliCheck,
) -> Result<(), Failure> {
    let mu = parse_partition(mu)?;
    match check {
        CapelliCheck::Eigen => {
            let Some(lambda_text) = lambda else {
                return Err(Failure::Usage("--check eigen needs --lambda".into()));
            };
            let lambda = parse_partition(lambda_text)?;
            let eigen = eigen_check(&mu, &lambda, n, m)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let expected = sstar_at_partition(&mu, &lambda);
            let ok = eigen == expected;
            if as_json {
                let payload = json!({
                    "mu": partition_json(&mu),
                    "lambda": partition_json(&lambda),
                    "n": n, "m": m,
                    "eigenvalue": eigen.to_string(),
                    "shifted_schur_value": expected.to_string(),
                    "agree": ok,
                });
                println!("{payload}");
            } else {
                println!("eigenvalue: {eigen}");
                println!("shifted Schur value: {expected}");
            }
            if !ok {
                return Err(Failure::Check("eigenvalue does not match".into()));
            }
        }
        CapelliCheck::Stability => {
            let big = capelli_operator(&mu, n + 1, m + 1)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let small =
                capelli_operator(&mu, n, m).map_err(|e| Failure::Usage(e.to_string()))?;
            let ok = restrict(&big, n, m) == small;
            if as_json {
                let payload = json!({
                    "mu": partition_json(&mu),
                    "n": n, "m": m,
                    "restricted_from": [n + 1, m + 1],
                    "agree": ok,
                });
                println!("{payload}");
            } else if ok {
                println!(
                    "stability: restriction from {}x{} to {n}x{m} reproduces the operator",
                    n + 1,
                    m + 1
                );
            }
            if !ok {
                return Err(Failure::Check("restricted operator differs".into()));
            }
        }
    }
    Ok(())
}

fn parse_word(text: &str, n: u16) -> Result<GeneratorWord, Failure> {
    if n == 0 || n > 9 {
        return Err(Failure::Usage("word letters use single digits, so 1 <= n <= 9".into()));
    }
    let mut letters = Vec::new();
    let trimmed = text.trim();
    if !trimmed.is_empty() {
        for token in trimmed.split(',') {
            let token = token.trim();
            let digits: Vec<u16> = token
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as u16))
                .collect::<Option<_>>()
                .ok_or_else(|| Failure::Usage(format!("letter {token:?} is not two digits")))?;
            if digits.len() != 2 {
                return Err(Failure::Usage(format!("letter {token:?} is not two digits")));
            }
            let (i, j) = (digits[0], digits[1]);
            if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
                return Err(Failure::Usage(format!("letter {token:?} is out of range 1..={n}")));
            }
            letters.push((i, j));
        }
    }
    Ok(GeneratorWord::new(n, letters))
}

fn format_exponent(exp: &VarExp, symbol: char) -> String {
    let mut out = String::new();
    for (&(i, j), &q) in exp {
        if !out.is_empty() {
            out.push(' ');
        }
        let _ = write!(out, "{symbol}[{i},{j}]");
        if q > 1 {
            let _ = write!(out, "^{q}");
        }
    }
    out
}

fn format_op(op: &DiffOp) -> String {
    if op.is_zero() {
        return "0".into();
    }
    let mut lines = Vec::new();
    for ((xs, ds), c) in op.terms() {
        let mut line = format!("{c}");
        let x_part = format_exponent(xs, 'x');
        let d_part = format_exponent(ds, 'd');
        if !x_part.is_empty() {
            let _ = write!(line, " {x_part}");
        }
        if !d_part.is_empty() {
            let _ = write!(line, " {d_part}");
        }
        lines.push(line);
    }
    lines.join("\n")
}

fn op_json(op: &DiffOp) -> Value {
    let terms: Vec<Value> = op
        .terms()
        .iter()
        .map(|((xs, ds), c)| {
            let expand = |exp: &VarExp| {
                Value::Array(
                    exp.iter().map(|(&(i, j), &q)| json!([i, j, q])).collect(),
                )
            };
            json!({"coeff": c.to_string(), "x": expand(xs), "d": expand(ds)})
        })
        .collect();
    Value::Array(terms)
}

fn sigma_cmd(as_json: bool, word: &str, n: u16, roundtrip: bool) -> Result<(), Failure> {
    let w = parse_word(word, n)?;
    let composed = r_map(&w, n);
    if roundtrip {
        let through_inverse = sigma_poly(&sigma_inverse(&w), n, n);
        let ok = composed == through_inverse;
        if as_json {
            let payload = json!({
                "word": w.letters().iter().map(|&(i, j)| format!("{i}{j}")).collect::<Vec<_>>(),
                "n": n,
                "terms": composed.terms().len(),
                "roundtrip": ok,
            });
            println!("{payload}");
        } else if ok {
            println!(
                "round trip: ok ({} normal-ordered terms)",
                composed.terms().len()
            );
        }
        if !ok {
            return Err(Failure::Check(
                "symmetrizing the cluster expansion does not reproduce the word".into(),
            ));
        }
        return Ok(());
    }
    if as_json {
        println!("{}", json!({"word_image": op_json(&composed)}));
    } else {
        println!("{}", format_op(&composed));
    }
    Ok(())
}

fn verify_cmd(as_json: bool, suite: &str, max_size: u64, seed: u64) -> Result<(), Failure> {
    let plan: Vec<Vec<&str>> = if suite == "all" {
        suites::LAYERS.iter().map(|layer| layer.to_vec()).collect()
    } else if suites::exists(suite) {
        vec![vec![suite]]
    } else {
        return Err(Failure::Usage(format!(
            "unknown suite {suite:?}; known: all, {}",
            suites::names().join(", ")
        )));
    };
    let mut reports = Vec::new();
    let mut failed_layer = false;
    for layer in plan {
        for name in layer {
            reports.push(suites::run_suite(name, max_size, seed));
        }
        if reports.iter().any(|r| !r.failures.is_empty()) {
            // Localize faults: later layers depend on this one.
            failed_layer = true;
            break;
        }
    }
    let any_failures = reports.iter().any(|r| !r.failures.is_empty());
    if as_json {
        let value = if reports.len() == 1 && suite != "all" {
            serde_json::to_value(&reports[0])
        } else {
            serde_json::to_value(&reports)
        }
        .expect("reports serialize");
        println!("{value}");
    } else {
        for report in &reports {
            println!(
                "suite {}: {} cases, {} failures, {} ms (seed {})",
                report.suite,
                report.cases,
                report.failures.len(),
                report.elapsed_ms,
                report.seed
            );
            for failure in &report.failures {
                println!(
                    "  FAIL {}: expected {}, got {}",
                    failure.case, failure.expected, failure.actual
                );
            }
        }
        if failed_layer && suite == "all" {
            println!("stopped at the first failing layer");
        }
    }
    if any_failures {
        return Err(Failure::Check("verification failures reported above".into()));
    }
    Ok(())
}
