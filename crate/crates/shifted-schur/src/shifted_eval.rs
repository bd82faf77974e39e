//! Point evaluation of shifted Schur polynomials and the named generator
//! families, by two independent routes:
//!
//! * a ratio of determinants in falling factorial powers (fast, but
//!   inapplicable where the denominator degenerates), and
//! * a sum over reverse tableaux (total — a polynomial identity valid at
//!   every point), which is the canonical evaluator.
//!
//! Everything downstream — coefficient recovery, character formulas, the
//! Capelli eigenvalue checks — trusts values produced here, so the two
//! engines are cross-tested exhaustively and at random rational points.

use crate::exact_arith::{
    falling, rat_int, rational_fn_series, Int, Rat, TruncatedSeries,
};
use crate::partitions::{content, dim_sym, syt_count_skew, Partition, Signature, SkewShape};
use crate::tableaux::{enumerate_reverse, enumerate_ssyt};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("shifted coordinates coincide; the determinant engine does not apply here")]
    DegeneratePoint,
    #[error("evaluation needs at least {needed} variables, got n={n}")]
    TooFewVariables { needed: usize, n: usize },
}

/// A finite evaluation point `(x₁, …, xₙ)`, with `xᵢ = 0` beyond the stored
/// coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EvalPoint {
    coords: Vec<Rat>,
}

impl EvalPoint {
    pub fn new(coords: Vec<Rat>) -> Self {
        Self { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self { coords: coords.iter().map(|&c| rat_int(c)).collect() }
    }

    pub fn from_partition(lambda: &Partition) -> Self {
        Self { coords: lambda.parts().iter().map(|&p| rat_int(p as i64)).collect() }
    }

    pub fn from_signature(lambda: &Signature) -> Self {
        Self { coords: lambda.parts().iter().map(|&p| rat_int(p)).collect() }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// The 0-based `i`-th coordinate, zero beyond the stored length.
    pub fn coord(&self, i: usize) -> Rat {
        self.coords.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

/// Exact determinant by fraction-free-enough Gaussian elimination (pivots are
/// exact rationals, so plain elimination is already exact).
fn det(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut acc = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            m.swap(p, col);
            acc = -acc;
        }
        let pv = m[col][col].clone();
        acc *= &pv;
        for r in (col + 1)..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pv;
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    acc
}

/// Shared core of the determinantal evaluators: given the row coordinates
/// `a`, computes `det[(aᵢ ↓ μⱼ+n−j)] / det[(aᵢ ↓ n−j)]`.  The denominator
/// equals the Vandermonde product in the `aᵢ` because falling powers are
/// monic.
fn falling_det_ratio(a: &[Rat], mu: &Partition) -> Result<Rat, EvalError> {
    let n = a.len();
    let mut denom = Rat::one();
    for i in 0..n {
        for j in (i + 1)..n {
            let d = &a[i] - &a[j];
            if d.is_zero() {
                return Err(EvalError::DegeneratePoint);
            }
            denom *= d;
        }
    }
    let numer = det((0..n)
        .map(|i| {
            (0..n)
                .map(|j| falling(&a[i], (mu.part(j) as usize + n - 1 - j) as u64))
                .collect()
        })
        .collect());
    Ok(numer / denom)
}

/// `s*_μ(x₁, …, xₙ)` as a ratio of `n×n` determinants in the shifted
/// coordinates `aᵢ = xᵢ + n − i`.  Needs `n ≥ ℓ(μ)`, `n ≥ len(x)`, and
/// pairwise distinct `aᵢ`; at degenerate points use [`sstar_comb`], which
/// computes the same polynomial.
pub fn sstar_det(mu: &Partition, x: &EvalPoint, n: usize) -> Result<Rat, EvalError> {
    if n < mu.len() {
        return Err(EvalError::TooFewVariables { needed: mu.len(), n });
    }
    if n < x.len() {
        return Err(EvalError::TooFewVariables { needed: x.len(), n });
    }
    let a: Vec<Rat> = (0..n).map(|i| x.coord(i) + rat_int((n - 1 - i) as i64)).collect();
    falling_det_ratio(&a, mu)
}

/// `s*_μ(x₁, …, xₙ)` as the sum over reverse tableaux of shape `μ` with
/// letters in `1..=n` of `∏_boxes (x_letter − content)`.  Total: defined at
/// every point, zero when `ℓ(μ) > n`.
pub fn sstar_comb(mu: &Partition, x: &EvalPoint) -> Rat {
    let n = x.len();
    let mut total = Rat::zero();
    for t in enumerate_reverse(mu, n) {
        let chain = t.chain();
        let mut term = Rat::one();
        for i in 1..chain.len() {
            let xi = x.coord(i - 1);
            for (r, c) in chain[i - 1].skew_boxes(&chain[i]) {
                term *= &xi - rat_int(content(r, c));
            }
        }
        total += term;
    }
    total
}

static PARTITION_VALUES: LazyLock<RwLock<HashMap<(Partition, Partition), Rat>>> =
    LazyLock::new(Default::default);

/// `s*_μ(λ)` at a partition point, cached process-wide.  Partition points
/// are never degenerate (their shifted coordinates strictly decrease), so
/// the determinant engine always applies.
pub fn sstar_at_partition(mu: &Partition, lambda: &Partition) -> Rat {
    let key = (mu.clone(), lambda.clone());
    if let Some(v) = PARTITION_VALUES.read().unwrap().get(&key) {
        return v.clone();
    }
    let n = mu.len().max(lambda.len());
    let v = sstar_det(mu, &EvalPoint::from_partition(lambda), n)
        .expect("partition points are never degenerate");
    PARTITION_VALUES.write().unwrap().insert(key, v.clone());
    v
}

/// `s*_μ` at a signature (weakly decreasing integer tuple, negative parts
/// allowed), evaluated in exactly the signature's number of variables.
/// Signatures are never degenerate either.
pub fn sstar_signature(mu: &Partition, lambda: &Signature) -> Rat {
    if mu.len() > lambda.n() {
        return Rat::zero();
    }
    sstar_det(mu, &EvalPoint::from_signature(lambda), lambda.n())
        .expect("signature points are never degenerate")
}

/// The factorial Schur polynomial `t_μ(x₁, …, xₙ) = det[(xᵢ ↓ μⱼ+n−j)] /
/// det[(xᵢ ↓ n−j)]` — the unshifted cousin of [`sstar_det`], related by
/// `s*_μ(x₁,…,xₙ) = t_μ(x₁+n−1, x₂+n−2, …, xₙ)`.  Unlike `s*_μ`, it is NOT
/// stable under appending zero coordinates.
pub fn factorial_t(mu: &Partition, x: &EvalPoint, n: usize) -> Result<Rat, EvalError> {
    if n < mu.len() {
        return Err(EvalError::TooFewVariables { needed: mu.len(), n });
    }
    if n < x.len() {
        return Err(EvalError::TooFewVariables { needed: x.len(), n });
    }
    let b: Vec<Rat> = (0..n).map(|i| x.coord(i)).collect();
    falling_det_ratio(&b, mu)
}

/// The ordinary Schur polynomial `s_μ(x₁, …, xₙ)`: the classical bialternant
/// ratio `det[xᵢ^{μⱼ+n−j}]/det[xᵢ^{n−j}]` at points with pairwise distinct
/// coordinates, and the monomial sum over semistandard tableaux otherwise.
/// Total in `x`; zero when `ℓ(μ) > n`.
pub fn schur_eval(mu: &Partition, x: &EvalPoint, n: usize) -> Rat {
    assert!(n >= x.len(), "cannot evaluate {} coordinates in {n} variables", x.len());
    if mu.len() > n {
        return Rat::zero();
    }
    let coords: Vec<Rat> = (0..n).map(|i| x.coord(i)).collect();
    let distinct = (0..n).all(|i| ((i + 1)..n).all(|j| coords[i] != coords[j]));
    if distinct {
        let mut denom = Rat::one();
        for i in 0..n {
            for j in (i + 1)..n {
                denom *= &coords[i] - &coords[j];
            }
        }
        let numer = det((0..n)
            .map(|i| {
                (0..n)
                    .map(|j| int_pow(&coords[i], (mu.part(j) as usize + n - 1 - j) as u64))
                    .collect()
            })
            .collect());
        return numer / denom;
    }
    // Monomial sum over semistandard tableaux: Σ_T ∏_boxes x_{entry}.
    let mut total = Rat::zero();
    for t in enumerate_ssyt(mu, n as u32) {
        let mut term = Rat::one();
        for (_, v) in t.entries() {
            term *= x.coord(v as usize - 1);
        }
        total += term;
    }
    total
}

fn int_pow(x: &Rat, k: u64) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

/// The six generator families evaluated by [`generator_eval`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Generator {
    /// `h*ₖ = Σ_{i₁≤⋯≤iₖ} (x_{i₁}−k+1)(x_{i₂}−k+2)⋯x_{iₖ}`; equals `s*₍ₖ₎`.
    Complete,
    /// `e*ₖ = Σ_{i₁<⋯<iₖ} (x_{i₁}+k−1)(x_{i₂}+k−2)⋯x_{iₖ}`; equals `s*₍₁ᵏ₎`.
    Elementary,
    /// `p*ₖ = Σᵢ ((xᵢ−i)ᵏ − (−i)ᵏ)`.
    Power,
    /// `p̂ₖ = Σᵢ ((xᵢ−i ↑ k) − (−i ↑ k))` in raising powers.
    PowerRaising,
    /// `p̌ₖ = Σᵢ ((xᵢ+1−i ↓ k) − (1−i ↓ k))` in falling powers.
    PowerFalling,
    /// `p°ₖ`: coefficient of `u^{−(k+1)}` in `H*(u−1)/H*(u)`.
    PowerRatio,
}

/// Evaluates one generator of the shifted symmetric function algebra at `x`.
pub fn generator_eval(kind: Generator, k: u64, x: &EvalPoint) -> Rat {
    let n = x.len();
    match kind {
        Generator::Complete => {
            // Weakly increasing index tuples; position t (1-based) among k
            // contributes x_{i_t} − k + t.
            fn rec(x: &EvalPoint, k: u64, t: u64, lo: usize) -> Rat {
                if t > k {
                    return Rat::one();
                }
                let mut sum = Rat::zero();
                for i in lo..x.len() {
                    let factor = x.coord(i) - rat_int(k as i64) + rat_int(t as i64);
                    sum += factor * rec(x, k, t + 1, i);
                }
                sum
            }
            rec(x, k, 1, 0)
        }
        Generator::Elementary => {
            fn rec(x: &EvalPoint, k: u64, t: u64, lo: usize) -> Rat {
                if t > k {
                    return Rat::one();
                }
                let mut sum = Rat::zero();
                for i in lo..x.len() {
                    let factor = x.coord(i) + rat_int(k as i64) - rat_int(t as i64);
                    sum += factor * rec(x, k, t + 1, i + 1);
                }
                sum
            }
            rec(x, k, 1, 0)
        }
        Generator::Power => (1..=n)
            .map(|i| {
                let shifted = x.coord(i - 1) - rat_int(i as i64);
                int_pow(&shifted, k) - int_pow(&rat_int(-(i as i64)), k)
            })
            .sum(),
        Generator::PowerRaising => (1..=n)
            .map(|i| {
                let shifted = x.coord(i - 1) - rat_int(i as i64);
                crate::exact_arith::raising(&shifted, k)
                    - crate::exact_arith::raising(&rat_int(-(i as i64)), k)
            })
            .sum(),
        Generator::PowerFalling => (1..=n)
            .map(|i| {
                let shifted = x.coord(i - 1) + rat_int(1 - i as i64);
                falling(&shifted, k) - falling(&rat_int(1 - i as i64), k)
            })
            .sum(),
        Generator::PowerRatio => {
            // H*(u−1)/H*(u) = ∏ᵢ (u+i−1)(u+i−xᵢ) / ((u+i−1−xᵢ)(u+i)) equals
            // 1 + Σ_k p°ₖ u^{−(k+1)}: the u⁻¹ coefficient vanishes
            // identically, and the orientation of the quotient is the one
            // that gives p°ₖ the Newton power sum pₖ as its highest term
            // (the reversed quotient would negate every coefficient).
            let mut numer = Vec::with_capacity(2 * n);
            let mut denom = Vec::with_capacity(2 * n);
            for i in 1..=n as i64 {
                numer.push(rat_int(1 - i));
                numer.push(x.coord(i as usize - 1) - rat_int(i));
                denom.push(x.coord(i as usize - 1) + rat_int(1 - i));
                denom.push(rat_int(-i));
            }
            let series = rational_fn_series(&numer, &denom, (k + 2) as usize)
                .expect("equal root counts by construction");
            series.coeff((k + 1) as usize).clone()
        }
    }
}

/// Which generating series [`h_e_series`] produces.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeriesKind {
    /// `H*(u) = ∏ᵢ (u+i)/(u+i−xᵢ) = Σᵣ h*ᵣ/(u↓r)`.
    Complete,
    /// `E*(u) = ∏ᵢ (u−i+1+xᵢ)/(u−i+1) = Σᵣ e*ᵣ/(u↓r)`.
    Elementary,
}

/// The closed-product generating series for the complete or elementary
/// family, truncated at `order`, as a series in `u⁻¹`.  Converting the
/// coefficients to the inverse-falling basis recovers the `h*ᵣ` (resp.
/// `e*ᵣ`) values at `x`.
pub fn h_e_series(kind: SeriesKind, x: &EvalPoint, order: usize) -> TruncatedSeries {
    let n = x.len();
    let mut numer = Vec::with_capacity(n);
    let mut denom = Vec::with_capacity(n);
    for i in 1..=n as i64 {
        match kind {
            SeriesKind::Complete => {
                numer.push(rat_int(-i));
                denom.push(x.coord(i as usize - 1) - rat_int(i));
            }
            SeriesKind::Elementary => {
                numer.push(rat_int(i - 1) - x.coord(i as usize - 1));
                denom.push(rat_int(i - 1));
            }
        }
    }
    rational_fn_series(&numer, &denom, order).expect("equal root counts by construction")
}

/// `E*(−u−1) = ∏ᵢ (u+i−xᵢ)/(u+i)` as a series in `u⁻¹`; multiplying it with
/// `H*(u)` gives the constant series 1.
pub fn e_series_reflected(x: &EvalPoint, order: usize) -> TruncatedSeries {
    let n = x.len();
    let mut numer = Vec::with_capacity(n);
    let mut denom = Vec::with_capacity(n);
    for i in 1..=n as i64 {
        numer.push(x.coord(i as usize - 1) - rat_int(i));
        denom.push(rat_int(-i));
    }
    rational_fn_series(&numer, &denom, order).expect("equal root counts by construction")
}

/// Number of standard tableaux of the skew shape `λ/μ`, by the ratio formula
/// `dim λ/μ = dim λ · s*_μ(λ) / (l ↓ k)` with `l = |λ|`, `k = |μ|`.  Returns
/// zero when `μ ⊄ λ`.  The result is asserted integral, and — on shapes
/// small enough for exhaustive enumeration — asserted equal to the
/// brute-force standard-tableau count.
pub fn dim_skew(outer: &Partition, inner: &Partition) -> Int {
    if !outer.contains(inner) {
        return Int::zero();
    }
    let l = outer.size();
    let k = inner.size();
    let value = Rat::from_integer(dim_sym(outer)) * sstar_at_partition(inner, outer)
        / falling(&rat_int(l as i64), k);
    assert!(value.is_integer(), "skew dimension must be an integer, got {value}");
    let result = value.to_integer();
    if l <= 9 {
        let oracle = syt_count_skew(
            &SkewShape::new(outer.clone(), inner.clone()).expect("containment checked"),
        );
        assert_eq!(result, oracle, "ratio formula disagrees with enumeration for {outer}/{inner}");
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{powers_to_inverse_falling, rat};
    use crate::partitions::{hook_product, partitions_up_to};
    use crate::sampling;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn determinant_engine_examples() {
        let v = sstar_det(&p(&[1, 1]), &EvalPoint::from_ints(&[2, 1]), 2).unwrap();
        assert_eq!(v, rat_int(3));
        for mu in partitions_up_to(5) {
            let at_self = sstar_det(&mu, &EvalPoint::from_partition(&mu), mu.len().max(1));
            assert_eq!(at_self.unwrap(), Rat::from_integer(hook_product(&mu)), "at {mu}");
        }
        let vanish = sstar_det(&p(&[2]), &EvalPoint::from_ints(&[1, 1]), 2).unwrap();
        assert_eq!(vanish, rat_int(0));
    }

    #[test]
    fn determinant_engine_errors() {
        // x = (0, 1) has shifted coordinates (0+1, 1+0) = (1, 1).
        assert_eq!(
            sstar_det(&p(&[1]), &EvalPoint::from_ints(&[0, 1]), 2).unwrap_err(),
            EvalError::DegeneratePoint
        );
        assert_eq!(
            sstar_det(&p(&[1, 1]), &EvalPoint::from_ints(&[3]), 1).unwrap_err(),
            EvalError::TooFewVariables { needed: 2, n: 1 }
        );
        assert_eq!(
            sstar_det(&p(&[1]), &EvalPoint::from_ints(&[3, 2]), 1).unwrap_err(),
            EvalError::TooFewVariables { needed: 2, n: 1 }
        );
    }

    #[test]
    fn combinatorial_engine_examples() {
        assert_eq!(sstar_comb(&p(&[2]), &EvalPoint::from_ints(&[3, 2])), rat_int(12));
        assert_eq!(sstar_comb(&p(&[1, 1]), &EvalPoint::from_ints(&[2, 1])), rat_int(3));
        assert_eq!(sstar_comb(&p(&[2, 1]), &EvalPoint::from_ints(&[1])), rat_int(0));
        assert_eq!(sstar_comb(&Partition::empty(), &EvalPoint::new(vec![])), rat_int(1));
    }

    #[test]
    fn engines_agree_on_partitions_and_random_points() {
        for mu in partitions_up_to(4) {
            for lambda in partitions_up_to(5) {
                let n = mu.len().max(lambda.len()).max(1);
                let mut coords = EvalPoint::from_partition(&lambda).coords().to_vec();
                coords.resize(n, Rat::zero());
                let x = EvalPoint::new(coords);
                assert_eq!(
                    sstar_det(&mu, &x, n).unwrap(),
                    sstar_comb(&mu, &x),
                    "engines disagree at μ={mu}, λ={lambda}"
                );
            }
        }
        let mut rng = sampling::seeded(42);
        for _ in 0..20 {
            for n in 1..=4usize {
                let x = sampling::point_distinct_shifted(&mut rng, n);
                for mu in partitions_up_to(3) {
                    if mu.len() > n {
                        continue;
                    }
                    assert_eq!(sstar_det(&mu, &x, n).unwrap(), sstar_comb(&mu, &x));
                }
            }
        }
    }

    #[test]
    fn stability_under_appending_zeros() {
        let mut rng = sampling::seeded(7);
        for _ in 0..10 {
            for n in 0..=3usize {
                let x = sampling::point(&mut rng, n);
                let mut padded = x.coords().to_vec();
                padded.push(Rat::zero());
                let xz = EvalPoint::new(padded);
                for mu in partitions_up_to(4) {
                    assert_eq!(sstar_comb(&mu, &x), sstar_comb(&mu, &xz));
                }
            }
        }
    }

    #[test]
    fn shifted_symmetry_at_a_fixed_point() {
        // Swapping (xᵢ, xᵢ₊₁) → (xᵢ₊₁ − 1, xᵢ + 1) preserves every value.
        let x = EvalPoint::new(vec![rat(7, 2), rat(-1, 3), rat_int(4)]);
        let swapped01 = EvalPoint::new(vec![rat(-1, 3) - rat_int(1), rat(7, 2) + rat_int(1), rat_int(4)]);
        let swapped12 = EvalPoint::new(vec![rat(7, 2), rat_int(4) - rat_int(1), rat(-1, 3) + rat_int(1)]);
        for mu in partitions_up_to(4) {
            let base = sstar_comb(&mu, &x);
            assert_eq!(base, sstar_comb(&mu, &swapped01));
            assert_eq!(base, sstar_comb(&mu, &swapped12));
        }
    }

    #[test]
    fn factorial_polynomial_relates_by_argument_shift() {
        let mut rng = sampling::seeded(11);
        for _ in 0..10 {
            for n in 1..=3usize {
                let x = sampling::point_distinct_shifted(&mut rng, n);
                let shifted = EvalPoint::new(
                    (0..n).map(|i| x.coord(i) + rat_int((n - 1 - i) as i64)).collect(),
                );
                for mu in partitions_up_to(3) {
                    if mu.len() > n {
                        continue;
                    }
                    assert_eq!(
                        factorial_t(&mu, &shifted, n).unwrap(),
                        sstar_det(&mu, &x, n).unwrap()
                    );
                }
            }
        }
        assert_eq!(
            factorial_t(&p(&[1]), &EvalPoint::new(vec![rat(5, 3)]), 1).unwrap(),
            rat(5, 3)
        );
    }

    #[test]
    fn factorial_polynomial_is_not_stable() {
        // t₍₁₎(x₁, x₂) = x₁ + x₂ − 1 but t₍₁₎(x₁, x₂, 0) = x₁ + x₂ − 3:
        // appending a zero coordinate changes the value.
        let two = factorial_t(&p(&[1]), &EvalPoint::from_ints(&[5, 3]), 2).unwrap();
        let three = factorial_t(&p(&[1]), &EvalPoint::from_ints(&[5, 3, 0]), 3).unwrap();
        assert_eq!(two, rat_int(7));
        assert_eq!(three, rat_int(5));
        assert_ne!(two, three);
    }

    #[test]
    fn schur_examples() {
        let x = EvalPoint::new(vec![rat(1, 2), rat_int(3), rat(-2, 5)]);
        let sum: Rat = x.coords().iter().cloned().sum();
        assert_eq!(schur_eval(&p(&[1]), &x, 3), sum);
        assert_eq!(schur_eval(&p(&[2]), &EvalPoint::from_ints(&[1, 1]), 2), rat_int(3));
        assert_eq!(schur_eval(&p(&[1, 1]), &EvalPoint::from_ints(&[1, 1]), 2), rat_int(1));
        assert_eq!(schur_eval(&p(&[1, 1, 1]), &EvalPoint::from_ints(&[1, 1]), 2), rat_int(0));
        // Determinant route against the tableau sum at a distinct point.
        for mu in partitions_up_to(4) {
            let x = EvalPoint::from_ints(&[3, 2, 1]);
            let by_det = schur_eval(&mu, &x, 3);
            let by_ssyt: Rat = enumerate_ssyt(&mu, 3)
                .map(|t| {
                    t.entries()
                        .map(|(_, v)| x.coord(v as usize - 1))
                        .product::<Rat>()
                })
                .sum();
            assert_eq!(by_det, by_ssyt, "at μ={mu}");
        }
    }

    #[test]
    fn generator_examples() {
        assert_eq!(
            generator_eval(Generator::Complete, 2, &EvalPoint::from_ints(&[3, 2])),
            rat_int(12)
        );
        assert_eq!(
            generator_eval(Generator::Elementary, 2, &EvalPoint::from_ints(&[2, 1])),
            rat_int(3)
        );
        let x = EvalPoint::new(vec![rat(3, 4), rat_int(-2), rat(1, 6)]);
        let sum: Rat = x.coords().iter().cloned().sum();
        for kind in [
            Generator::Complete,
            Generator::Power,
            Generator::PowerRaising,
            Generator::PowerFalling,
            Generator::PowerRatio,
        ] {
            assert_eq!(generator_eval(kind, 1, &x), sum, "{kind:?} at k=1");
        }
        // e*₁ = Σxᵢ as well.
        assert_eq!(generator_eval(Generator::Elementary, 1, &x), sum);
    }

    #[test]
    fn generator_edge_cases() {
        let x = EvalPoint::from_ints(&[4, 1]);
        assert_eq!(generator_eval(Generator::Complete, 0, &x), rat_int(1));
        assert_eq!(generator_eval(Generator::Elementary, 0, &x), rat_int(1));
        assert_eq!(generator_eval(Generator::Power, 0, &x), rat_int(0));
        assert_eq!(generator_eval(Generator::PowerRatio, 0, &x), rat_int(0));
        // Only two variables: e*₃ has no strictly increasing index triple.
        assert_eq!(generator_eval(Generator::Elementary, 3, &x), rat_int(0));
        // Empty point: every generator vanishes except h*₀ = e*₀ = 1.
        let empty = EvalPoint::new(vec![]);
        assert_eq!(generator_eval(Generator::Complete, 2, &empty), rat_int(0));
        assert_eq!(generator_eval(Generator::PowerRatio, 3, &empty), rat_int(0));
    }

    #[test]
    fn complete_and_elementary_are_row_and_column_values() {
        let mut rng = sampling::seeded(3);
        for _ in 0..10 {
            let n = 3;
            let x = sampling::point(&mut rng, n);
            for k in 0..=4u64 {
                assert_eq!(
                    generator_eval(Generator::Complete, k, &x),
                    sstar_comb(&Partition::new(vec![k as u32]), &x)
                );
                assert_eq!(
                    generator_eval(Generator::Elementary, k, &x),
                    sstar_comb(&Partition::new(vec![1; k as usize]), &x)
                );
            }
        }
    }

    #[test]
    fn series_examples() {
        // One variable x = 3: H*(u) = (u+1)/(u−2).
        let x = EvalPoint::from_ints(&[3]);
        let h = h_e_series(SeriesKind::Complete, &x, 3);
        assert_eq!(
            h.coeffs().to_vec(),
            vec![rat_int(1), rat_int(3), rat_int(6), rat_int(12)]
        );
        assert_eq!(
            powers_to_inverse_falling(&h),
            vec![rat_int(1), rat_int(3), rat_int(6), rat_int(6)]
        );

        let empty = EvalPoint::new(vec![]);
        assert_eq!(h_e_series(SeriesKind::Complete, &empty, 4), TruncatedSeries::one(4));
        assert_eq!(h_e_series(SeriesKind::Elementary, &empty, 4), TruncatedSeries::one(4));
    }

    #[test]
    fn series_coefficients_match_generator_values() {
        let mut rng = sampling::seeded(5);
        for _ in 0..8 {
            for n in 0..=3usize {
                let x = sampling::point(&mut rng, n);
                let order = 6;
                let h = powers_to_inverse_falling(&h_e_series(SeriesKind::Complete, &x, order));
                let e = powers_to_inverse_falling(&h_e_series(SeriesKind::Elementary, &x, order));
                for r in 0..=order as u64 {
                    assert_eq!(h[r as usize], generator_eval(Generator::Complete, r, &x));
                    assert_eq!(e[r as usize], generator_eval(Generator::Elementary, r, &x));
                }
            }
        }
    }

    #[test]
    fn complete_times_reflected_elementary_is_one() {
        let mut rng = sampling::seeded(9);
        for _ in 0..8 {
            for n in 0..=3usize {
                let x = sampling::point(&mut rng, n);
                let h = h_e_series(SeriesKind::Complete, &x, 6);
                let e = e_series_reflected(&x, 6);
                assert_eq!(h.mul(&e), TruncatedSeries::one(6));
            }
        }
    }

    #[test]
    fn signature_evaluation() {
        // At a nonnegative signature the value agrees with the partition value.
        let lambda = p(&[3, 1]);
        let sig = Signature::from_partition(&lambda, 3).unwrap();
        for mu in partitions_up_to(3) {
            let expected = if mu.len() > 3 { Rat::zero() } else { sstar_at_partition(&mu, &lambda) };
            assert_eq!(sstar_signature(&mu, &sig), expected);
        }
        // Negative parts are fine for the determinant engine.
        let neg = Signature::new(vec![2, 0, -1]);
        let v = sstar_signature(&p(&[1]), &neg);
        // s*₍₁₎ = x₁ + x₂ + x₃ at any point.
        assert_eq!(v, rat_int(1));
        assert_eq!(sstar_signature(&p(&[1, 1, 1, 1]), &neg), rat_int(0));
    }

    #[test]
    fn skew_dimension_examples() {
        assert_eq!(dim_skew(&p(&[2, 1]), &p(&[1])), Int::from(2));
        assert_eq!(dim_skew(&p(&[3, 2]), &p(&[2])), Int::from(3));
        assert_eq!(dim_skew(&p(&[2]), &p(&[1, 1])), Int::zero());
        for lambda in partitions_up_to(6) {
            assert_eq!(dim_skew(&lambda, &Partition::empty()), dim_sym(&lambda));
            assert_eq!(dim_skew(&lambda, &lambda), Int::one());
        }
    }
}
