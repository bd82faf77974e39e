//! Exact scalar arithmetic: big rationals, factorial powers, and truncated
//! series in inverse powers of a formal variable `u`.
//!
//! Everything downstream flows through these types, and all of it is exact:
//! no floating point, no rounding, so identities are compared with tolerance
//! zero.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator by the underlying representation.
pub type Rat = BigRational;

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// The fraction `n/d`. Panics when `d = 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// `n!`.
pub fn factorial(n: u64) -> Int {
    (1..=n).map(Int::from).product()
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binom(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut num = Int::one();
    for i in 0..k {
        num *= Int::from(n - i);
    }
    num / factorial(k)
}

/// Falling factorial power `x(x−1)⋯(x−k+1)`; `1` when `k = 0`.
pub fn falling(x: &Rat, k: u64) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= x - rat_int(i as i64);
    }
    acc
}

/// Raising factorial power `x(x+1)⋯(x+k−1)`; `1` when `k = 0`.
pub fn raising(x: &Rat, k: u64) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= x + rat_int(i as i64);
    }
    acc
}

/// Falling factorial of an integer argument, as an integer.
pub fn falling_int(n: i64, k: u64) -> Int {
    let mut acc = Int::one();
    for i in 0..k {
        acc *= Int::from(n - i as i64);
    }
    acc
}

/// Errors from series construction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    /// A quotient of linear factors only expands as `1 + O(u⁻¹)` when the
    /// factor counts agree.
    #[error("numerator has {numer} linear factors but denominator has {denom}")]
    DegreeMismatch { numer: usize, denom: usize },
    /// Reciprocals exist only for series with invertible constant term.
    #[error("series with zero constant term has no reciprocal")]
    ZeroConstantTerm,
}

/// A series `c₀ + c₁u⁻¹ + ⋯ + c_N u⁻ᴺ` truncated at a fixed order `N`.
///
/// Arithmetic truncates to the smaller order of the two operands; equality is
/// coefficient-list equality, order included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rat>, // coeffs[m] is the coefficient of u^{-m}
}

impl TruncatedSeries {
    /// The zero series truncated at `order`.
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Rat::zero(); order + 1] }
    }

    /// The constant series `1` truncated at `order`.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rat::one();
        s
    }

    /// Builds a series from the coefficients of `u⁻⁰, u⁻¹, …`; the order is
    /// `coeffs.len() − 1`.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least a constant term");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `u^{−m}`.
    pub fn coeff(&self, m: usize) -> &Rat {
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|m| &self.coeffs[m] + &other.coeffs[m]).collect();
        Self { coeffs }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self { coeffs }
    }

    /// Multiplicative inverse, defined when the constant term is nonzero.
    pub fn recip(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0].is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let order = self.order();
        let mut out = vec![Rat::zero(); order + 1];
        out[0] = self.coeffs[0].recip();
        for m in 1..=order {
            let mut acc = Rat::zero();
            for i in 1..=m {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &out[m - i];
                }
            }
            out[m] = -acc / &self.coeffs[0];
        }
        Ok(Self { coeffs: out })
    }
}

/// The expansion of `1/(u↓r)` in powers of `u⁻¹`.
fn inverse_falling_series(r: usize, order: usize) -> TruncatedSeries {
    // 1/(u↓r) = ∏_{j<r} 1/(u−j), and 1/(u−j) = u⁻¹ + j·u⁻² + j²·u⁻³ + ⋯
    let mut acc = TruncatedSeries::one(order);
    for j in 0..r {
        let mut factor = TruncatedSeries::zero(order);
        let mut p = Rat::one();
        for m in 1..=order {
            factor.coeffs[m] = p.clone();
            p *= rat_int(j as i64);
        }
        acc = acc.mul(&factor);
    }
    acc
}

/// Re-expands `Σ cᵣ/(u↓r)` — coefficients in the inverse-falling-factorial
/// basis — as a truncated series in powers of `u⁻¹`.
pub fn inverse_falling_to_powers(coeffs: &[Rat], order: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::zero(order);
    for (r, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            acc = acc.add(&inverse_falling_series(r, order).scale(c));
        }
    }
    acc
}

/// Inverse of [`inverse_falling_to_powers`]: recovers coefficients in the
/// inverse-falling-factorial basis by triangular elimination, using that
/// `1/(u↓r)` starts at `u⁻ʳ` with coefficient 1.
pub fn powers_to_inverse_falling(series: &TruncatedSeries) -> Vec<Rat> {
    let order = series.order();
    let mut residual = series.clone();
    let mut out = Vec::with_capacity(order + 1);
    for r in 0..=order {
        let c = residual.coeff(r).clone();
        if !c.is_zero() {
            residual = residual.add(&inverse_falling_series(r, order).scale(&-c.clone()));
        }
        out.push(c);
    }
    out
}

/// Expands `∏ᵢ(u − rᵢ) / ∏ⱼ(u − sⱼ)` in powers of `u⁻¹`.
pub fn rational_fn_series(
    numer_roots: &[Rat],
    denom_roots: &[Rat],
    order: usize,
) -> Result<TruncatedSeries, SeriesError> {
    if numer_roots.len() != denom_roots.len() {
        return Err(SeriesError::DegreeMismatch {
            numer: numer_roots.len(),
            denom: denom_roots.len(),
        });
    }
    // (u − r) = u·(1 − r·u⁻¹); the loose powers of u cancel between numerator
    // and denominator, leaving a quotient of series with constant term 1.
    let linear = |root: &Rat| {
        let mut s = TruncatedSeries::one(order);
        if order >= 1 {
            s.coeffs[1] = -root.clone();
        }
        s
    };
    let mut num = TruncatedSeries::one(order);
    for r in numer_roots {
        num = num.mul(&linear(r));
    }
    let mut den = TruncatedSeries::one(order);
    for s in denom_roots {
        den = den.mul(&linear(s));
    }
    let den_inv = den.recip().expect("denominator series has constant term 1");
    Ok(num.mul(&den_inv))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn falling_small_values() {
        assert_eq!(falling(&rat_int(5), 2), rat_int(20));
        assert_eq!(falling(&rat(7, 3), 0), Rat::one());
        assert_eq!(falling(&rat_int(3), 5), Rat::zero());
    }

    #[test]
    fn raising_small_values() {
        assert_eq!(raising(&rat_int(2), 3), rat_int(24));
        assert_eq!(raising(&rat(-5, 2), 0), Rat::one());
        assert_eq!(raising(&rat_int(-1), 3), Rat::zero());
    }

    #[test]
    fn binom_and_factorial() {
        assert_eq!(factorial(5), Int::from(120));
        assert_eq!(binom(7, 3), Int::from(35));
        assert_eq!(binom(3, 5), Int::zero());
        assert_eq!(falling_int(6, 2), Int::from(30));
    }

    #[test]
    fn inverse_falling_constant_is_constant() {
        let s = inverse_falling_to_powers(&[rat_int(1)], 4);
        assert_eq!(s, TruncatedSeries::one(4));
    }

    #[test]
    fn inverse_falling_single_linear_term() {
        // 1/(u↓1) = u⁻¹ exactly, so coefficients (0, 1) expand to (0, 1, 0).
        let s = inverse_falling_to_powers(&[rat_int(0), rat_int(1)], 2);
        assert_eq!(s.coeffs(), &[rat_int(0), rat_int(1), rat_int(0)]);
    }

    #[test]
    fn one_variable_complete_coefficients_match_rational_function() {
        // Σᵣ (3↓r)/(u↓r) = (u+1)/(u+1−3): the falling powers of 3 are
        // 1, 3, 6, 6 and vanish from r = 4 on.
        let coeffs = [rat_int(1), rat_int(3), rat_int(6), rat_int(6)];
        let lhs = inverse_falling_to_powers(&coeffs, 3);
        let rhs = rational_fn_series(&[rat_int(-1)], &[rat_int(2)], 3).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rational_fn_series_equal_roots_cancel() {
        let roots = [rat_int(-1), rat_int(-2)];
        let s = rational_fn_series(&roots, &roots, 5).unwrap();
        assert_eq!(s, TruncatedSeries::one(5));
    }

    #[test]
    fn rational_fn_series_one_variable_column_generator() {
        // (u + 3)/u = 1 + 3u⁻¹ exactly.
        let s = rational_fn_series(&[rat_int(-3)], &[rat_int(0)], 2).unwrap();
        assert_eq!(s.coeffs(), &[rat_int(1), rat_int(3), rat_int(0)]);
    }

    #[test]
    fn rational_fn_series_rejects_degree_mismatch() {
        let err = rational_fn_series(&[rat_int(1)], &[], 3).unwrap_err();
        assert_eq!(err, SeriesError::DegreeMismatch { numer: 1, denom: 0 });
    }

    #[test]
    fn recip_requires_nonzero_constant_term() {
        let s = TruncatedSeries::from_coeffs(vec![rat_int(0), rat_int(1)]);
        assert_eq!(s.recip().unwrap_err(), SeriesError::ZeroConstantTerm);
        let t = TruncatedSeries::from_coeffs(vec![rat_int(2), rat_int(1), rat(1, 3)]);
        assert_eq!(t.mul(&t.recip().unwrap()), TruncatedSeries::one(2));
    }

    #[test]
    fn conversion_round_trip() {
        let coeffs = vec![rat_int(2), rat(-1, 3), rat_int(0), rat(5, 7), rat_int(1)];
        let series = inverse_falling_to_powers(&coeffs, 4);
        assert_eq!(powers_to_inverse_falling(&series), coeffs);
    }
}
