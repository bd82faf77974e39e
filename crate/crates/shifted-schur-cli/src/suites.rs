//! Named verification suites behind `shifted-schur verify`.
//!
//! Suites are grouped into layers ordered by dependency: a failure in an
//! early layer makes later results uninformative, so `--suite all` stops at
//! the first layer with failures.  Every case is exact arithmetic; `max_size`
//! caps the shape sizes and `seed` fixes the sampled points, so a report is
//! reproducible from its own fields.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use shifted_schur::capelli::{
    capelli_operator, casimir_operator, eigenvalue_on, highest_vector, r_map, restrict,
    s_mu_symmetric, schur_weyl_check, sigma_inverse, sigma_poly, sigma_power_check, GeneratorWord,
};
use shifted_schur::characters::{char_small_cycles, gibbs_eigenvalue, mn_character};
use shifted_schur::exact_arith::{
    binom, factorial, falling, inverse_falling_to_powers, powers_to_inverse_falling, raising,
    rat_int, Int, Rat, TruncatedSeries,
};
use shifted_schur::lambda_star::{
    binomial_check, binomial_coeffs, coherence_check, iterated_pieri, jacobi_trudi, multiply,
    omega, psharp, JtVariant, ShiftedElement,
};
use shifted_schur::partitions::{
    dim_gl, dim_sym, hook_product, partitions_of, partitions_up_to, syt_count_skew, up_factorial,
    Partition, Signature, SkewShape,
};
use shifted_schur::sampling;
use shifted_schur::shifted_eval::{
    dim_skew, e_series_reflected, generator_eval, h_e_series, sstar_at_partition, sstar_comb,
    sstar_det, EvalPoint, Generator, SeriesKind,
};
use shifted_schur::tableaux::{enumerate_reverse, enumerate_ssyt};
use std::time::Instant;

/// Suites in dependency order; `--suite all` walks the layers left to right.
pub const LAYERS: &[&[&str]] = &[
    &["arith"],
    &["partitions"],
    &["eval", "vanishing", "series"],
    &["pieri", "jt", "binomial", "coherence", "omega"],
    &["characters"],
    &["capelli", "sigma", "schur-weyl", "casimir"],
];

pub fn names() -> Vec<&'static str> {
    LAYERS.iter().flat_map(|layer| layer.iter().copied()).collect()
}

pub fn exists(name: &str) -> bool {
    names().contains(&name)
}

struct Outcome {
    ok: bool,
    expected: String,
    actual: String,
}

struct Case {
    id: String,
    run: Box<dyn Fn() -> Outcome + Send + Sync>,
}

#[derive(Serialize)]
pub struct CaseFailure {
    pub case: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<CaseFailure>,
    pub elapsed_ms: u128,
    pub max_size: u64,
    pub seed: u64,
}

pub fn run_suite(name: &str, max_size: u64, seed: u64) -> SuiteReport {
    let cases = build(name, max_size, seed);
    let start = Instant::now();
    let outcomes: Vec<(String, Outcome)> =
        cases.par_iter().map(|case| (case.id.clone(), (case.run)())).collect();
    let mut failures: Vec<CaseFailure> = outcomes
        .into_iter()
        .filter(|(_, outcome)| !outcome.ok)
        .map(|(case, outcome)| CaseFailure {
            case,
            expected: outcome.expected,
            actual: outcome.actual,
        })
        .collect();
    failures.sort_by(|a, b| a.case.cmp(&b.case));
    SuiteReport {
        suite: name.to_string(),
        cases: cases.len(),
        failures,
        elapsed_ms: start.elapsed().as_millis(),
        max_size,
        seed,
    }
}

fn case<F>(id: impl Into<String>, f: F) -> Case
where
    F: Fn() -> Outcome + Send + Sync + 'static,
{
    Case { id: id.into(), run: Box::new(f) }
}

fn ok() -> Outcome {
    Outcome { ok: true, expected: "pass".into(), actual: "pass".into() }
}

fn eq<T: PartialEq + std::fmt::Display>(
    context: &str,
    expected: &T,
    actual: &T,
) -> Option<Outcome> {
    if expected == actual {
        None
    } else {
        Some(Outcome {
            ok: false,
            expected: format!("{context}: {expected}"),
            actual: actual.to_string(),
        })
    }
}

fn holds(context: &str, flag: bool) -> Option<Outcome> {
    if flag {
        None
    } else {
        Some(Outcome { ok: false, expected: format!("{context}: holds"), actual: "fails".into() })
    }
}

/// Shorthand: bail out of a case closure on the first failed comparison.
macro_rules! require {
    ($check:expr) => {
        if let Some(out) = $check {
            return out;
        }
    };
}

fn build(name: &str, max_size: u64, seed: u64) -> Vec<Case> {
    match name {
        "arith" => arith_cases(max_size, seed),
        "partitions" => partitions_cases(max_size),
        "eval" => eval_cases(max_size, seed),
        "vanishing" => vanishing_cases(max_size),
        "series" => series_cases(max_size, seed),
        "pieri" => pieri_cases(max_size),
        "jt" => jt_cases(max_size),
        "binomial" => binomial_cases(max_size, seed),
        "coherence" => coherence_cases(max_size),
        "omega" => omega_cases(max_size),
        "characters" => characters_cases(max_size),
        "capelli" => capelli_cases(max_size),
        "sigma" => sigma_cases(max_size, seed),
        "schur-weyl" => schur_weyl_cases(max_size),
        "casimir" => casimir_cases(max_size),
        other => panic!("unknown suite {other:?}; guard with exists() first"),
    }
}

fn row(k: u32) -> Partition {
    if k == 0 {
        Partition::empty()
    } else {
        Partition::new(vec![k])
    }
}

fn decreasing_tuples(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                let cap = t.last().copied().unwrap_or(hi);
                (lo..=cap).map(move |v| {
                    let mut t2 = t.clone();
                    t2.push(v);
                    t2
                })
            })
            .collect();
    }
    out
}

fn arith_cases(max_size: u64, seed: u64) -> Vec<Case> {
    let k_max = (max_size + 8).min(12);
    let order = ((max_size + 4).min(8)) as usize;
    vec![
        case("falling-raising-sign", move || {
            let mut rng = sampling::seeded(seed);
            for _ in 0..20 {
                let x = sampling::rational(&mut rng);
                for k in 0..=k_max {
                    let sign = rat_int(if k % 2 == 0 { 1 } else { -1 });
                    let lhs = falling(&x, k);
                    let rhs = sign * raising(&(-&x), k);
                    require!(eq(&format!("sign rule at x={x}, k={k}"), &lhs, &rhs));
                }
            }
            ok()
        }),
        case("falling-splits", move || {
            let mut rng = sampling::seeded(seed.wrapping_add(1));
            for _ in 0..20 {
                let x = sampling::rational(&mut rng);
                for a in 0..=5u64 {
                    for b in 0..=5u64 {
                        let lhs = falling(&x, a + b);
                        let rhs = falling(&x, a) * falling(&(&x - rat_int(a as i64)), b);
                        require!(eq(&format!("split at x={x}, a={a}, b={b}"), &lhs, &rhs));
                    }
                }
            }
            ok()
        }),
        case("series-basis-round-trip", move || {
            let mut rng = sampling::seeded(seed.wrapping_add(2));
            for _ in 0..10 {
                let coeffs: Vec<Rat> =
                    (0..=order).map(|_| sampling::rational(&mut rng)).collect();
                let series = TruncatedSeries::from_coeffs(coeffs.clone());
                let in_falling = powers_to_inverse_falling(&series);
                let back = inverse_falling_to_powers(&in_falling, order);
                require!(holds("round trip through the inverse-falling basis", back == series));
            }
            ok()
        }),
        case("series-reciprocal", move || {
            let mut rng = sampling::seeded(seed.wrapping_add(3));
            for _ in 0..10 {
                let mut coeffs: Vec<Rat> =
                    (0..=order).map(|_| sampling::rational(&mut rng)).collect();
                if coeffs[0].is_zero() {
                    coeffs[0] = rat_int(1);
                }
                let series = TruncatedSeries::from_coeffs(coeffs);
                let recip = series.recip().expect("constant term is nonzero");
                require!(holds(
                    "series times reciprocal is 1",
                    series.mul(&recip) == TruncatedSeries::one(order)
                ));
            }
            ok()
        }),
        case("binomial-factorial", move || {
            for n in 0..=10u64 {
                for k in 0..=n {
                    let lhs = binom(n, k) * factorial(k) * factorial(n - k);
                    require!(eq(&format!("n={n}, k={k}"), &factorial(n), &lhs));
                }
            }
            ok()
        }),
    ]
}

fn partitions_cases(max_size: u64) -> Vec<Case> {
    let big = (max_size + 4).min(10);
    let mid = (max_size + 2).min(8);
    let small = max_size.min(4);
    vec![
        case("conjugate-involution", move || {
            for lambda in partitions_up_to(big) {
                let conj = lambda.conjugate();
                require!(eq(&format!("size of {lambda}'"), &lambda.size(), &conj.size()));
                require!(eq(&format!("({lambda}')'"), &lambda, &conj.conjugate()));
            }
            ok()
        }),
        case("hook-product-conjugation", move || {
            for lambda in partitions_up_to(big) {
                let conj = lambda.conjugate();
                require!(eq(
                    &format!("hook product of {lambda}"),
                    &hook_product(&lambda),
                    &hook_product(&conj)
                ));
                require!(eq(&format!("dim of {lambda}"), &dim_sym(&lambda), &dim_sym(&conj)));
            }
            ok()
        }),
        case("dimensions-square-to-order", move || {
            for l in 1..=mid {
                let total: Int = partitions_of(l)
                    .iter()
                    .map(|lambda| {
                        let d = dim_sym(lambda);
                        &d * &d
                    })
                    .sum();
                require!(eq(&format!("sum of squared dims at l={l}"), &factorial(l), &total));
            }
            ok()
        }),
        case("tableau-count-matches-dim", move || {
            for lambda in partitions_up_to(mid) {
                let shape = SkewShape::straight(lambda.clone());
                require!(eq(
                    &format!("standard tableaux of {lambda}"),
                    &dim_sym(&lambda),
                    &syt_count_skew(&shape)
                ));
            }
            ok()
        }),
        case("weyl-dimension", move || {
            for n in 1..=3u32 {
                for lambda in partitions_up_to(small) {
                    let ssyt = enumerate_ssyt(&lambda, n).count();
                    let reverse = enumerate_reverse(&lambda, n as usize).count();
                    require!(eq(
                        &format!("tableau families at n={n}, λ={lambda}"),
                        &ssyt,
                        &reverse
                    ));
                    if lambda.len() > n as usize {
                        require!(eq(&format!("no fillings for n={n}, λ={lambda}"), &0, &ssyt));
                        continue;
                    }
                    let weyl = dim_gl(n, &lambda).expect("length checked");
                    require!(eq(
                        &format!("Weyl dimension at n={n}, λ={lambda}"),
                        &rat_int(ssyt as i64),
                        &weyl
                    ));
                    let ratio = up_factorial(n as i64, &lambda)
                        / Rat::from_integer(hook_product(&lambda));
                    require!(eq(
                        &format!("content-product form at n={n}, λ={lambda}"),
                        &weyl,
                        &ratio
                    ));
                }
            }
            ok()
        }),
    ]
}

fn eval_cases(max_size: u64, seed: u64) -> Vec<Case> {
    let mu_max = max_size.min(5);
    let lambda_max = (max_size + 1).min(6);
    let small = max_size.min(4);
    let mut cases = Vec::new();
    for (idx, mu) in partitions_up_to(mu_max).into_iter().enumerate() {
        let id = format!("engines-mu-{}", mu.bracket_string());
        let case_seed = seed.wrapping_add(idx as u64);
        cases.push(case(id, move || {
            for lambda in partitions_up_to(lambda_max) {
                let n = mu.len().max(lambda.len()).max(1);
                let x = EvalPoint::from_partition(&lambda);
                let det = sstar_det(&mu, &x, n).expect("partition points are non-degenerate");
                let padded = EvalPoint::new((0..n).map(|i| x.coord(i)).collect());
                let comb = sstar_comb(&mu, &padded);
                require!(eq(&format!("λ={lambda}"), &det, &comb));
            }
            let mut rng = sampling::seeded(case_seed);
            for n in mu.len().max(1)..=3 {
                for _ in 0..5 {
                    let x = sampling::point_distinct_shifted(&mut rng, n);
                    let det = sstar_det(&mu, &x, n).expect("coordinates sampled distinct");
                    require!(eq(&format!("sampled point, n={n}"), &det, &sstar_comb(&mu, &x)));
                }
            }
            ok()
        }));
    }
    cases.push(case("stability-under-zeros", move || {
        let mut rng = sampling::seeded(seed.wrapping_add(100));
        for mu in partitions_up_to(small) {
            for n in mu.len().max(1)..=3 {
                let x = sampling::point(&mut rng, n);
                let mut extended = x.coords().to_vec();
                extended.extend([Rat::zero(), Rat::zero()]);
                require!(eq(
                    &format!("appending zeros at μ={mu}, n={n}"),
                    &sstar_comb(&mu, &x),
                    &sstar_comb(&mu, &EvalPoint::new(extended))
                ));
            }
        }
        ok()
    }));
    cases.push(case("shifted-symmetry", move || {
        let mut rng = sampling::seeded(seed.wrapping_add(101));
        for mu in partitions_up_to(small) {
            for _ in 0..5 {
                let x = sampling::point(&mut rng, 3);
                for i in 0..2usize {
                    let mut twisted = x.coords().to_vec();
                    let a = twisted[i].clone();
                    let b = twisted[i + 1].clone();
                    twisted[i] = b - rat_int(1);
                    twisted[i + 1] = a + rat_int(1);
                    require!(eq(
                        &format!("twist at position {i}, μ={mu}"),
                        &sstar_comb(&mu, &x),
                        &sstar_comb(&mu, &EvalPoint::new(twisted))
                    ));
                }
            }
        }
        ok()
    }));
    cases
}

fn vanishing_cases(max_size: u64) -> Vec<Case> {
    let mu_max = (max_size + 2).min(6);
    partitions_up_to(mu_max)
        .into_iter()
        .map(|mu| {
            let id = format!("mu-{}", mu.bracket_string());
            case(id, move || {
                for lambda in partitions_up_to(mu.size()) {
                    let value = sstar_at_partition(&mu, &lambda);
                    if lambda == mu {
                        require!(eq(
                            &format!("normalization s*_{mu}({mu})"),
                            &Rat::from_integer(hook_product(&mu)),
                            &value
                        ));
                    } else if !lambda.contains(&mu) {
                        require!(holds(
                            &format!("s*_{mu}({lambda}) vanishes"),
                            value.is_zero()
                        ));
                    }
                }
                ok()
            })
        })
        .collect()
}

fn series_cases(max_size: u64, seed: u64) -> Vec<Case> {
    let order = ((max_size + 2).min(8)) as usize;
    (1..=3usize)
        .map(|n| {
            let case_seed = seed.wrapping_add(n as u64);
            case(format!("coordinates-{n}"), move || {
                let mut rng = sampling::seeded(case_seed);
                for _ in 0..5 {
                    let x = sampling::point(&mut rng, n);
                    let h = h_e_series(SeriesKind::Complete, &x, order);
                    let e = h_e_series(SeriesKind::Elementary, &x, order);
                    let h_coeffs = powers_to_inverse_falling(&h);
                    let e_coeffs = powers_to_inverse_falling(&e);
                    for r in 0..=order as u64 {
                        require!(eq(
                            &format!("complete coefficient r={r}"),
                            &generator_eval(Generator::Complete, r, &x),
                            &h_coeffs[r as usize]
                        ));
                        require!(eq(
                            &format!("elementary coefficient r={r}"),
                            &generator_eval(Generator::Elementary, r, &x),
                            &e_coeffs[r as usize]
                        ));
                    }
                    require!(holds(
                        "h-series times reflected e-series is 1",
                        h.mul(&e_series_reflected(&x, order)) == TruncatedSeries::one(order)
                    ));
                }
                ok()
            })
        })
        .collect()
}

fn pieri_cases(max_size: u64) -> Vec<Case> {
    let mu_max = max_size.min(4);
    partitions_up_to(mu_max)
        .into_iter()
        .map(|mu| {
            let id = format!("mu-{}", mu.bracket_string());
            case(id, move || {
                let factor =
                    ShiftedElement::basis(&row(1)).add_scalar(&rat_int(-(mu.size() as i64)));
                let lhs = multiply(&ShiftedElement::basis(&mu), &factor);
                let mut rhs = ShiftedElement::zero();
                for nu in mu.successors() {
                    rhs = rhs.add(&ShiftedElement::basis(&nu));
                }
                require!(holds("single-box rule", lhs == rhs));
                let k = mu.size();
                for l in k..=k + 2 {
                    let lhs = iterated_pieri(&mu, l);
                    let mut rhs = ShiftedElement::zero();
                    for nu in partitions_of(l) {
                        if nu.contains(&mu) {
                            rhs = rhs.add(
                                &ShiftedElement::basis(&nu)
                                    .scale(&Rat::from_integer(dim_skew(&nu, &mu))),
                            );
                        }
                    }
                    require!(holds(&format!("iterated rule at l={l}"), lhs == rhs));
                }
                ok()
            })
        })
        .collect()
}

fn jt_cases(max_size: u64) -> Vec<Case> {
    let mu_max = max_size.min(4);
    partitions_up_to(mu_max)
        .into_iter()
        .map(|mu| {
            let id = format!("mu-{}", mu.bracket_string());
            case(id, move || {
                let expected = ShiftedElement::basis(&mu);
                for variant in [JtVariant::H, JtVariant::E, JtVariant::Giambelli] {
                    require!(holds(
                        &format!("{variant:?} determinant reproduces s*_{mu}"),
                        jacobi_trudi(&mu, variant) == expected
                    ));
                }
                ok()
            })
        })
        .collect()
}

fn binomial_cases(max_size: u64, seed: u64) -> Vec<Case> {
    let n_max = if max_size >= 4 { 3u32 } else { 2 };
    let lambda_max = max_size.min(4);
    let mut cases = Vec::new();
    let mut idx = 0u64;
    for n in 1..=n_max {
        for lambda in partitions_up_to(lambda_max) {
            if lambda.len() > n as usize {
                continue;
            }
            idx += 1;
            let case_seed = seed.wrapping_add(idx);
            let id = format!("n-{n}-lambda-{}", lambda.bracket_string());
            cases.push(case(id, move || {
                let mut rng = sampling::seeded(case_seed);
                for _ in 0..10 {
                    let x: Vec<Rat> = (0..n).map(|_| sampling::rational(&mut rng)).collect();
                    require!(holds(
                        "expansion matches a direct evaluation",
                        binomial_check(&lambda, n, &x).expect("length checked")
                    ));
                }
                ok()
            }));
        }
    }
    cases.push(case("one-variable-closed-form", move || {
        for k in 0..=6u32 {
            let coeffs = binomial_coeffs(&row(k), 1).expect("one row fits one variable");
            for m in 0..=k {
                let expected = falling(&rat_int(k as i64), m as u64)
                    / Rat::from_integer(factorial(m as u64));
                let got = coeffs.get(&row(m)).cloned().unwrap_or_else(Rat::zero);
                require!(eq(&format!("k={k}, m={m}"), &expected, &got));
            }
        }
        ok()
    }));
    cases
}

fn coherence_cases(max_size: u64) -> Vec<Case> {
    let n_max = if max_size >= 4 { 3usize } else { 2 };
    let mu_max = max_size.min(3);
    let mut cases = Vec::new();
    for n in 1..=n_max {
        for mu in partitions_up_to(mu_max) {
            if mu.len() > n {
                continue;
            }
            let id = format!("n-{n}-mu-{}", mu.bracket_string());
            cases.push(case(id, move || {
                for entries in decreasing_tuples(n + 1, -2, 2) {
                    let lambda = Signature::new(entries);
                    require!(holds(
                        &format!("branching relation at λ={lambda}"),
                        coherence_check(n, &mu, &lambda).expect("lengths checked")
                    ));
                }
                ok()
            }));
        }
    }
    cases
}

fn omega_cases(max_size: u64) -> Vec<Case> {
    let mu_max = max_size.min(4);
    let k_max = max_size.min(5) as u32;
    vec![
        case("involution-and-conjugation", move || {
            for mu in partitions_up_to(mu_max) {
                let image = omega(&ShiftedElement::basis(&mu));
                require!(holds(
                    &format!("ω(s*_{mu}) = s*_conjugate"),
                    image == ShiftedElement::basis(&mu.conjugate())
                ));
                require!(holds(
                    &format!("ω is an involution at {mu}"),
                    omega(&image) == ShiftedElement::basis(&mu)
                ));
            }
            ok()
        }),
        case("h-e-exchange", move || {
            for k in 1..=k_max {
                let h = ShiftedElement::basis(&row(k));
                let e = ShiftedElement::basis(&Partition::new(vec![1; k as usize]));
                require!(holds(&format!("ω(h*_{k}) = e*_{k}"), omega(&h) == e));
            }
            ok()
        }),
        case("algebra-homomorphism", move || {
            for a in partitions_up_to(mu_max.min(3)) {
                for b in partitions_up_to(2) {
                    let ea = ShiftedElement::basis(&a);
                    let eb = ShiftedElement::basis(&b);
                    let lhs = omega(&multiply(&ea, &eb));
                    let rhs = multiply(&omega(&ea), &omega(&eb));
                    require!(holds(
                        &format!("ω distributes over s*_{a} · s*_{b}"),
                        lhs == rhs
                    ));
                }
            }
            ok()
        }),
    ]
}

fn characters_cases(max_size: u64) -> Vec<Case> {
    let l_max = (max_size + 3).min(7);
    let k_cap = max_size.min(4);
    let mut cases = Vec::new();
    for l in 1..=l_max {
        for k in 1..=k_cap.min(l) {
            cases.push(case(format!("l-{l}-k-{k}"), move || {
                for lambda in partitions_of(l) {
                    for rho in partitions_of(k) {
                        let via_values = char_small_cycles(&lambda, &rho, sstar_at_partition)
                            .expect("k <= l by construction");
                        let mut padded = rho.parts().to_vec();
                        padded.extend(std::iter::repeat(1).take((l - k) as usize));
                        let direct = mn_character(&lambda, &Partition::new(padded))
                            .expect("padded class has the right size");
                        require!(eq(
                            &format!("character of {lambda} on {rho}"),
                            &Rat::from_integer(direct),
                            &via_values
                        ));
                        require!(eq(
                            &format!("Gibbsian eigenvalue at λ={lambda}, ρ={rho}"),
                            &psharp(&rho).evaluate(&lambda),
                            &gibbs_eigenvalue(&lambda, &rho).expect("k <= l by construction")
                        ));
                    }
                }
                ok()
            }));
        }
    }
    cases
}

fn capelli_cases(max_size: u64) -> Vec<Case> {
    let mu_max = max_size.min(3);
    let lambda_max = (max_size + 1).min(4);
    let mut formats = vec![(1u16, 1u16), (2, 2), (2, 3)];
    if max_size >= 4 {
        formats.push((3, 3));
    }
    let mut cases = Vec::new();
    for (n, m) in formats {
        cases.push(case(format!("eigen-{n}x{m}"), move || {
            for mu in partitions_up_to(mu_max) {
                if mu.len() > n.min(m) as usize {
                    continue;
                }
                let op = capelli_operator(&mu, n, m).expect("format bounds are tiny");
                for lambda in partitions_up_to(lambda_max) {
                    if lambda.len() > n.min(m) as usize {
                        continue;
                    }
                    let v = highest_vector(&lambda, n, m).expect("length checked");
                    require!(eq(
                        &format!("μ={mu}, λ={lambda}"),
                        &sstar_at_partition(&mu, &lambda),
                        &eigenvalue_on(&op, &v)
                    ));
                }
            }
            ok()
        }));
    }
    let stability_big = if max_size >= 3 { (3u16, 3u16) } else { (2, 2) };
    cases.push(case("restriction-stability", move || {
        let (big_n, big_m) = stability_big;
        for mu in partitions_up_to(mu_max) {
            if mu.len() > big_n as usize {
                continue;
            }
            let big = capelli_operator(&mu, big_n, big_m).expect("format bounds are tiny");
            for n in 1..big_n {
                for m in 1..big_m {
                    if mu.len() > n.min(m) as usize {
                        continue;
                    }
                    let small = capelli_operator(&mu, n, m).expect("format bounds are tiny");
                    require!(holds(
                        &format!("restriction to {n}x{m} at μ={mu}"),
                        restrict(&big, n, m) == small
                    ));
                }
            }
        }
        ok()
    }));
    cases
}

fn sigma_cases(max_size: u64, seed: u64) -> Vec<Case> {
    let n_max = if max_size >= 3 { 3u16 } else { 2 };
    let mu_max = max_size.min(3);
    let k_max = max_size.min(4) as u32;
    vec![
        case("capelli-image", move || {
            for n in 1..=n_max {
                for mu in partitions_up_to(mu_max) {
                    if mu.len() > n as usize {
                        continue;
                    }
                    let s = s_mu_symmetric(&mu, n).expect("length checked");
                    require!(holds(
                        &format!("σ(S_{mu}) at n={n}"),
                        sigma_poly(&s, n, n)
                            == capelli_operator(&mu, n, n).expect("format bounds are tiny")
                    ));
                }
            }
            ok()
        }),
        case("roundtrip-short-words", move || {
            let letters: Vec<(u16, u16)> =
                (1..=2).flat_map(|i| (1..=2).map(move |j| (i, j))).collect();
            let mut words: Vec<Vec<(u16, u16)>> = vec![Vec::new()];
            let mut frontier = words.clone();
            for _ in 0..3 {
                frontier = frontier
                    .iter()
                    .flat_map(|w| {
                        letters.iter().map(move |&l| {
                            let mut w2 = w.clone();
                            w2.push(l);
                            w2
                        })
                    })
                    .collect();
                words.extend(frontier.iter().cloned());
            }
            for w in &words {
                let word = GeneratorWord::new(2, w.clone());
                require!(holds(
                    &format!("round trip on {w:?}"),
                    r_map(&word, 2) == sigma_poly(&sigma_inverse(&word), 2, 2)
                ));
            }
            ok()
        }),
        case("roundtrip-sampled-words", move || {
            let mut rng = sampling::seeded(seed);
            for _ in 0..5 {
                let w: Vec<(u16, u16)> =
                    (0..4).map(|_| sampling::index_pair(&mut rng, 2)).collect();
                let word = GeneratorWord::new(2, w.clone());
                require!(holds(
                    &format!("round trip on sampled {w:?}"),
                    r_map(&word, 2) == sigma_poly(&sigma_inverse(&word), 2, 2)
                ));
            }
            ok()
        }),
        case("symmetrized-powers", move || {
            let mut rng = sampling::seeded(seed.wrapping_add(1));
            for n in 2..=(n_max as usize) {
                let a: Vec<Vec<Rat>> = (0..n)
                    .map(|_| (0..n).map(|_| sampling::rational(&mut rng)).collect())
                    .collect();
                for k in 1..=k_max {
                    require!(holds(
                        &format!("generic matrix, n={n}, k={k}"),
                        sigma_power_check(&a, k)
                    ));
                }
            }
            let half = Rat::new(1.into(), 2.into());
            let idempotents: Vec<Vec<Vec<Rat>>> = vec![
                vec![vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(0)]],
                vec![vec![rat_int(1), rat_int(1)], vec![rat_int(0), rat_int(0)]],
                vec![vec![half.clone(), half.clone()], vec![half.clone(), half]],
            ];
            for (i, a) in idempotents.iter().enumerate() {
                for k in 1..=k_max.min(3) {
                    require!(holds(
                        &format!("idempotent {i}, k={k}"),
                        sigma_power_check(a, k)
                    ));
                }
            }
            ok()
        }),
    ]
}

fn schur_weyl_cases(max_size: u64) -> Vec<Case> {
    let mut pairs = vec![(2u16, 2usize), (2, 3)];
    if max_size >= 3 {
        pairs.extend([(2, 4), (3, 3)]);
    }
    pairs
        .into_iter()
        .map(|(n, l)| {
            case(format!("n-{n}-l-{l}"), move || {
                for mu in partitions_up_to(3.min(l as u64)) {
                    if mu.len() > n as usize {
                        continue;
                    }
                    require!(holds(
                        &format!("action matrices at μ={mu}"),
                        schur_weyl_check(n, l, &mu).expect("dimension bound respected")
                    ));
                }
                ok()
            })
        })
        .collect()
}

fn casimir_cases(max_size: u64) -> Vec<Case> {
    let lambda_max = max_size.min(4);
    (1..=3u16)
        .map(|n| {
            case(format!("n-{n}"), move || {
                let op = casimir_operator(n);
                for lambda in partitions_up_to(lambda_max) {
                    if lambda.len() > n as usize {
                        continue;
                    }
                    let v = highest_vector(&lambda, n, n).expect("length checked");
                    let expected: Rat = (0..n as usize)
                        .map(|i| {
                            let li = rat_int(lambda.part(i) as i64);
                            &li * &li + rat_int(n as i64 + 1 - 2 * (i as i64 + 1)) * li
                        })
                        .sum();
                    require!(eq(&format!("λ={lambda}"), &expected, &eigenvalue_on(&op, &v)));
                }
                ok()
            })
        })
        .collect()
}
