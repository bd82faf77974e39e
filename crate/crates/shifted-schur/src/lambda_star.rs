//! The algebra of shifted symmetric functions, with elements stored in the
//! shifted Schur basis exclusively.
//!
//! There is no symbolic polynomial engine here: an element IS its coefficient
//! map, and every structural operation (multiplication, the conjugation
//! involution, determinantal identities) is computed by interpolation.  The
//! vanishing theorem makes this work: evaluating at partitions of growing
//! size determines the coefficients triangularly, one hook product division
//! per partition.

use crate::characters::{mn_character, perm_sign, permutations};
use crate::exact_arith::{binom, falling, rat_int, Rat};
use crate::partitions::{
    dim_gl_signature, hook_product, partitions_of, up_factorial, Partition, Signature,
};
use crate::shifted_eval::{schur_eval, sstar_at_partition, sstar_signature, EvalPoint};
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LambdaError {
    #[error("oracle not a shifted symmetric function of degree <= {degree}")]
    NotShiftedSymmetric { degree: u64 },
    #[error("shape has {len} rows but only {n} variables are available")]
    TooManyRows { len: usize, n: usize },
    #[error("signature must have {expected} parts, got {got}")]
    WrongSignatureLength { expected: usize, got: usize },
}

/// An element of the shifted symmetric function algebra, as a finite
/// coefficient map over the shifted Schur basis.  Zero coefficients are
/// never stored, so equality of maps is equality of elements.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ShiftedElement {
    coeffs: BTreeMap<Partition, Rat>,
}

impl ShiftedElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit: `s*_∅ = 1`.
    pub fn one() -> Self {
        Self::basis(&Partition::empty())
    }

    /// The basis element `s*_μ`.
    pub fn basis(mu: &Partition) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(mu.clone(), Rat::one());
        Self { coeffs }
    }

    pub fn from_map(map: BTreeMap<Partition, Rat>) -> Self {
        let coeffs = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Rat> {
        &self.coeffs
    }

    pub fn coeff(&self, mu: &Partition) -> Rat {
        self.coeffs.get(mu).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Maximum size of a partition in the support (zero for the zero element).
    pub fn degree(&self) -> u64 {
        self.coeffs.keys().map(Partition::size).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (mu, c) in &other.coeffs {
            let entry = coeffs.entry(mu.clone()).or_insert_with(Rat::zero);
            *entry += c;
        }
        Self::from_map(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|(mu, a)| (mu.clone(), a * c)).collect() }
    }

    /// Adds `c · 1` (a multiple of the unit basis element).
    pub fn add_scalar(&self, c: &Rat) -> Self {
        self.add(&Self::one().scale(c))
    }

    /// Value at a partition point: `Σ c_μ s*_μ(λ)`.
    pub fn evaluate(&self, lambda: &Partition) -> Rat {
        self.coeffs
            .iter()
            .map(|(mu, c)| c * sstar_at_partition(mu, lambda))
            .sum()
    }

    /// Value at a signature, evaluated in the signature's own number of
    /// variables.
    pub fn evaluate_signature(&self, lambda: &Signature) -> Rat {
        self.coeffs.iter().map(|(mu, c)| c * sstar_signature(mu, lambda)).sum()
    }
}

impl fmt::Display for ShiftedElement {
    /// Renders like `1*s[2] + -1*s[1,1]`; the zero element prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(mu, c)| format!("{c}*s{}", mu.bracket_string()))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Recovers the coefficients of a shifted symmetric function of degree `≤ d`
/// from its values at partitions.  Works size by size: once all coefficients
/// of size `< |λ|` are known, the vanishing theorem pins
/// `c_λ = (f(λ) − Σ_{|ρ|<|λ|} c_ρ s*_ρ(λ)) / H(λ)`.
///
/// The result is verified against `f` at every partition of size `d+1`; a
/// mismatch means `f` was not a shifted symmetric function of degree `≤ d`
/// and is reported as an error.  The oracle must be pure — distinct
/// partitions are evaluated concurrently.
pub fn expand_from_oracle<F>(f: F, d: u64) -> Result<ShiftedElement, LambdaError>
where
    F: Fn(&Partition) -> Rat + Sync,
{
    let mut coeffs: BTreeMap<Partition, Rat> = BTreeMap::new();
    for size in 0..=d {
        let shapes = partitions_of(size);
        let computed: Vec<(Partition, Rat)> = shapes
            .into_par_iter()
            .map(|lambda| {
                let correction: Rat = coeffs
                    .iter()
                    .map(|(rho, c)| c * sstar_at_partition(rho, &lambda))
                    .sum();
                let c = (f(&lambda) - correction) / Rat::from_integer(hook_product(&lambda));
                (lambda, c)
            })
            .collect();
        for (lambda, c) in computed {
            if !c.is_zero() {
                coeffs.insert(lambda, c);
            }
        }
    }
    let result = ShiftedElement { coeffs };
    let clean = partitions_of(d + 1)
        .into_par_iter()
        .all(|lambda| result.evaluate(&lambda) == f(&lambda));
    if clean {
        Ok(result)
    } else {
        Err(LambdaError::NotShiftedSymmetric { degree: d })
    }
}

/// Product in the algebra, computed by expanding the pointwise-product
/// oracle up to the sum of the degrees.
pub fn multiply(a: &ShiftedElement, b: &ShiftedElement) -> ShiftedElement {
    if a.is_zero() || b.is_zero() {
        return ShiftedElement::zero();
    }
    let d = a.degree() + b.degree();
    expand_from_oracle(|lambda| a.evaluate(lambda) * b.evaluate(lambda), d)
        .expect("a product of shifted symmetric functions is one")
}

/// The right-hand side of the Pieri rule: `Σ_{μ ↗ ν} s*_ν` over all ways of
/// adding one box.  Equals `s*_μ · (s*₍₁₎ − |μ|)`.
pub fn pieri_rhs(mu: &Partition) -> ShiftedElement {
    let mut coeffs = BTreeMap::new();
    for nu in mu.successors() {
        coeffs.insert(nu, Rat::one());
    }
    ShiftedElement { coeffs }
}

/// The conjugation involution, defined by `[ω(f)](λ) = f(λ′)`; on basis
/// elements `ω(s*_μ) = s*_{μ′}`.
pub fn omega(a: &ShiftedElement) -> ShiftedElement {
    expand_from_oracle(|lambda| a.evaluate(&lambda.conjugate()), a.degree())
        .expect("conjugating the argument preserves shifted symmetry and degree")
}

/// `φʳ(h*ₖ) = Σᵢ C(r,i)·(k−1 ↓ i)·h*₍ₖ₋ᵢ₎` — the `r`-th power of the shift
/// automorphism applied to a complete generator, expressed back in the
/// shifted Schur basis (`h*ₘ = s*₍ₘ₎`).
pub fn phi_h(k: u64, r: u64) -> ShiftedElement {
    let mut acc = ShiftedElement::zero();
    for i in 0..=r.min(k) {
        let c = Rat::from_integer(binom(r, i)) * falling(&rat_int(k as i64 - 1), i);
        let row = if k - i == 0 {
            Partition::empty()
        } else {
            Partition::new(vec![(k - i) as u32])
        };
        acc = acc.add(&ShiftedElement::basis(&row).scale(&c));
    }
    acc
}

/// `φ⁻ʳ(e*ₖ) = Σᵢ C(r,i)·(k−1 ↓ i)·e*₍ₖ₋ᵢ₎`, in the shifted Schur basis
/// (`e*ₘ = s*₍₁ᵐ₎`).
pub fn phi_e_inv(k: u64, r: u64) -> ShiftedElement {
    let mut acc = ShiftedElement::zero();
    for i in 0..=r.min(k) {
        let c = Rat::from_integer(binom(r, i)) * falling(&rat_int(k as i64 - 1), i);
        let col = Partition::new(vec![1; (k - i) as usize]);
        acc = acc.add(&ShiftedElement::basis(&col).scale(&c));
    }
    acc
}

/// Which determinantal identity [`jacobi_trudi`] expands.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum JtVariant {
    /// `s*_μ = det[φ^{j−1} h*_{μᵢ−i+j}]`, size `ℓ(μ)`.
    H,
    /// `s*_μ = det[φ^{1−j} e*_{μ′ᵢ−i+j}]`, size `μ₁` (Nägelsbach–Kostka form).
    E,
    /// `s*_μ = det[s*_{(αᵢ|βⱼ)}]` over Frobenius hook coordinates (Giambelli).
    Giambelli,
}

/// Expands one of the three determinantal expressions for `s*_μ` through the
/// algebra product.  All three must reproduce the basis element `{μ: 1}`.
pub fn jacobi_trudi(mu: &Partition, variant: JtVariant) -> ShiftedElement {
    let entries: Vec<Vec<ShiftedElement>> = match variant {
        JtVariant::H => {
            let l = mu.len();
            (1..=l)
                .map(|i| {
                    (1..=l)
                        .map(|j| {
                            let idx = mu.part(i - 1) as i64 - i as i64 + j as i64;
                            if idx < 0 {
                                ShiftedElement::zero()
                            } else {
                                phi_h(idx as u64, (j - 1) as u64)
                            }
                        })
                        .collect()
                })
                .collect()
        }
        JtVariant::E => {
            let conj = mu.conjugate();
            let m = mu.part(0) as usize; // = ℓ(μ′)
            (1..=m)
                .map(|i| {
                    (1..=m)
                        .map(|j| {
                            let idx = conj.part(i - 1) as i64 - i as i64 + j as i64;
                            if idx < 0 {
                                ShiftedElement::zero()
                            } else {
                                phi_e_inv(idx as u64, (j - 1) as u64)
                            }
                        })
                        .collect()
                })
                .collect()
        }
        JtVariant::Giambelli => {
            // Frobenius coordinates: d diagonal boxes, arm αᵢ = μᵢ − i and
            // leg βᵢ = μ′ᵢ − i (1-based); the (i,j) entry is the hook
            // s*_{(αᵢ+1, 1^{βⱼ})}.
            let conj = mu.conjugate();
            let d = (0..mu.len()).take_while(|&i| mu.part(i) as usize > i).count();
            (0..d)
                .map(|i| {
                    let arm = mu.part(i) as usize - i - 1;
                    (0..d)
                        .map(|j| {
                            let leg = conj.part(j) as usize - j - 1;
                            let mut parts = vec![(arm + 1) as u32];
                            parts.extend(std::iter::repeat(1).take(leg));
                            ShiftedElement::basis(&Partition::new(parts))
                        })
                        .collect()
                })
                .collect()
        }
    };
    element_det(&entries)
}

/// Leibniz expansion of a determinant with algebra-element entries.
fn element_det(entries: &[Vec<ShiftedElement>]) -> ShiftedElement {
    let l = entries.len();
    let mut acc = ShiftedElement::zero();
    for s in permutations(l) {
        let mut term = ShiftedElement::one();
        for (i, &si) in s.iter().enumerate() {
            term = multiply(&term, &entries[i][si]);
            if term.is_zero() {
                break;
            }
        }
        if perm_sign(&s) < 0 {
            term = term.scale(&-Rat::one());
        }
        acc = acc.add(&term);
    }
    acc
}

/// Coefficients of the binomial expansion at `λ` in `n` variables: the map
/// `μ ↦ s*_μ(λ) / (n ↑ μ)` over `μ ⊆ λ`, so that
/// `s_λ(1+x₁,…,1+xₙ)/dim_gl(n,λ) = Σ_μ coeff_μ · s_μ(x₁,…,xₙ)`.
pub fn binomial_coeffs(
    lambda: &Partition,
    n: u32,
) -> Result<BTreeMap<Partition, Rat>, LambdaError> {
    if lambda.len() > n as usize {
        return Err(LambdaError::TooManyRows { len: lambda.len(), n: n as usize });
    }
    let mut map = BTreeMap::new();
    for mu in lambda.subdiagrams() {
        let denom = up_factorial(n as i64, &mu);
        let c = sstar_at_partition(&mu, lambda) / denom;
        if !c.is_zero() {
            map.insert(mu, c);
        }
    }
    Ok(map)
}

/// Checks the binomial expansion at one concrete `x`: evaluates both sides
/// exactly and compares.
pub fn binomial_check(lambda: &Partition, n: u32, x: &[Rat]) -> Result<bool, LambdaError> {
    let coeffs = binomial_coeffs(lambda, n)?;
    let shifted = EvalPoint::new(x.iter().map(|xi| xi + Rat::one()).collect());
    let lhs = schur_eval(lambda, &shifted, n as usize)
        / crate::partitions::dim_gl(n, lambda).expect("length checked");
    let point = EvalPoint::new(x.to_vec());
    let rhs: Rat = coeffs
        .iter()
        .map(|(mu, c)| c * schur_eval(mu, &point, n as usize))
        .sum();
    Ok(lhs == rhs)
}

/// Verifies the coherence relation binding consecutive variable counts:
/// `s*_{μ|n+1}(λ)/((n+1) ↑ μ) = Σ_{ν ≺ λ} (dim ν / dim λ) · s*_{μ|n}(ν)/(n ↑ μ)`,
/// where `λ` has `n+1` parts, `ν` runs over interlacing signatures with `n`
/// parts, and the dimensions are Weyl products.
pub fn coherence_check(
    n: usize,
    mu: &Partition,
    lambda: &Signature,
) -> Result<bool, LambdaError> {
    if mu.len() > n {
        return Err(LambdaError::TooManyRows { len: mu.len(), n });
    }
    if lambda.n() != n + 1 {
        return Err(LambdaError::WrongSignatureLength { expected: n + 1, got: lambda.n() });
    }
    let lhs = sstar_signature(mu, lambda) / up_factorial(n as i64 + 1, mu);
    let dim_lambda = dim_gl_signature(lambda);
    let n_up = up_factorial(n as i64, mu);
    let rhs: Rat = lambda
        .interlacing()
        .iter()
        .map(|nu| {
            (dim_gl_signature(nu) / &dim_lambda) * sstar_signature(mu, nu) / &n_up
        })
        .sum();
    Ok(lhs == rhs)
}

/// An element of the ordinary symmetric function algebra in the Schur basis,
/// kept separate from [`ShiftedElement`] so the two bases can never be mixed
/// silently.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SymElement {
    coeffs: BTreeMap<Partition, Rat>,
}

impl SymElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(mu: &Partition) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(mu.clone(), Rat::one());
        Self { coeffs }
    }

    pub fn from_map(map: BTreeMap<Partition, Rat>) -> Self {
        Self { coeffs: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Rat> {
        &self.coeffs
    }

    /// The power sum `p_ρ = Σ_{λ⊢k} χ^λ_ρ · s_λ` expanded in the Schur basis.
    pub fn power_sum(rho: &Partition) -> Self {
        let mut coeffs = BTreeMap::new();
        for lambda in partitions_of(rho.size()) {
            let chi = mn_character(&lambda, rho).expect("sizes agree");
            if !chi.is_zero() {
                coeffs.insert(lambda, Rat::from_integer(chi));
            }
        }
        Self { coeffs }
    }
}

/// The canonical linear isomorphism onto the shifted algebra: relabels
/// `s_μ ↦ s*_μ` coefficient by coefficient.
pub fn phi_map(a: &SymElement) -> ShiftedElement {
    ShiftedElement { coeffs: a.coeffs.clone() }
}

/// `p#_ρ = Σ_{λ ⊢ |ρ|} χ^λ_ρ · s*_λ` — the image of the power sum under the
/// canonical isomorphism.  Its value at `λ` is the Gibbsian class-operator
/// eigenvalue for cycle type `ρ`.
pub fn psharp(rho: &Partition) -> ShiftedElement {
    phi_map(&SymElement::power_sum(rho))
}

/// Iterated Pieri product `s*_μ · (p₁ − k)(p₁ − k − 1) ⋯ (p₁ − l + 1)` where
/// `k = |μ|`; its expansion has coefficient `dim ν/μ` on each `s*_ν` with
/// `|ν| = l`.
pub fn iterated_pieri(mu: &Partition, l: u64) -> ShiftedElement {
    let k = mu.size();
    assert!(l >= k, "target size {l} below |mu| = {k}");
    let p1 = ShiftedElement::basis(&Partition::new(vec![1]));
    let mut acc = ShiftedElement::basis(mu);
    for j in k..l {
        acc = multiply(&acc, &p1.add_scalar(&rat_int(-(j as i64))));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{gibbs_eigenvalue, CharTable};
    use crate::exact_arith::factorial;
    use crate::exact_arith::rat;
    use crate::partitions::partitions_up_to;
    use crate::sampling;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn elem(pairs: &[(&[u32], i64)]) -> ShiftedElement {
        let mut map = BTreeMap::new();
        for (parts, c) in pairs {
            map.insert(p(parts), rat_int(*c));
        }
        ShiftedElement::from_map(map)
    }

    #[test]
    fn expand_examples() {
        let size = expand_from_oracle(|l| rat_int(l.size() as i64), 1).unwrap();
        assert_eq!(size, elem(&[(&[1], 1)]));

        let square =
            expand_from_oracle(|l| rat_int(l.size() as i64) * rat_int(l.size() as i64), 2)
                .unwrap();
        assert_eq!(square, elem(&[(&[2], 1), (&[1, 1], 1), (&[1], 1)]));

        let zero = expand_from_oracle(|_| Rat::zero(), 3).unwrap();
        assert!(zero.is_zero());

        // |λ|² has degree 2; claiming degree 1 must be caught by verification.
        let err = expand_from_oracle(
            |l| rat_int(l.size() as i64) * rat_int(l.size() as i64),
            1,
        )
        .unwrap_err();
        assert_eq!(err, LambdaError::NotShiftedSymmetric { degree: 1 });
    }

    #[test]
    fn multiply_examples() {
        let p1 = ShiftedElement::basis(&p(&[1]));
        assert_eq!(multiply(&p1, &p1), elem(&[(&[2], 1), (&[1, 1], 1), (&[1], 1)]));
        let a = elem(&[(&[2], 3), (&[1, 1], -1)]);
        assert_eq!(multiply(&ShiftedElement::one(), &a), a);
        assert_eq!(
            multiply(&p1, &p1.add_scalar(&rat_int(-1))),
            elem(&[(&[2], 1), (&[1, 1], 1)])
        );
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri_rhs(&Partition::empty()), elem(&[(&[1], 1)]));
        assert_eq!(pieri_rhs(&p(&[1])), elem(&[(&[2], 1), (&[1, 1], 1)]));
        assert_eq!(
            pieri_rhs(&p(&[2, 1])),
            elem(&[(&[3, 1], 1), (&[2, 2], 1), (&[2, 1, 1], 1)])
        );
        // The rule itself: s*_μ (p₁ − |μ|) = pieri_rhs(μ).
        for mu in partitions_up_to(3) {
            let lhs = multiply(
                &ShiftedElement::basis(&mu),
                &ShiftedElement::basis(&p(&[1])).add_scalar(&rat_int(-(mu.size() as i64))),
            );
            assert_eq!(lhs, pieri_rhs(&mu), "at μ={mu}");
        }
    }

    #[test]
    fn iterated_pieri_counts_skew_tableaux() {
        for mu in partitions_up_to(3) {
            let k = mu.size();
            for l in k..=k + 2 {
                let product = iterated_pieri(&mu, l);
                for (nu, c) in product.coeffs() {
                    assert_eq!(nu.size(), l);
                    assert_eq!(
                        c,
                        &Rat::from_integer(crate::shifted_eval::dim_skew(nu, &mu)),
                        "coefficient of {nu} in the iterated product over {mu}"
                    );
                }
                // Every ν ⊇ μ of size l appears.
                for nu in partitions_of(l) {
                    if nu.contains(&mu) {
                        assert!(!product.coeff(&nu).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(&ShiftedElement::basis(&p(&[2]))), ShiftedElement::basis(&p(&[1, 1])));
        assert_eq!(
            omega(&ShiftedElement::basis(&p(&[2, 1]))),
            ShiftedElement::basis(&p(&[2, 1]))
        );
        for mu in partitions_up_to(4) {
            let om = omega(&ShiftedElement::basis(&mu));
            assert_eq!(om, ShiftedElement::basis(&mu.conjugate()), "ω at {mu}");
            assert_eq!(omega(&om), ShiftedElement::basis(&mu), "involution at {mu}");
        }
    }

    #[test]
    fn phi_h_examples() {
        assert_eq!(phi_h(1, 1), elem(&[(&[1], 1)]));
        assert_eq!(phi_h(2, 1), elem(&[(&[2], 1), (&[1], 1)]));
        assert_eq!(phi_h(2, 2), elem(&[(&[2], 1), (&[1], 2)]));
        assert_eq!(phi_h(0, 3), ShiftedElement::one());
        assert_eq!(phi_e_inv(2, 1), elem(&[(&[1, 1], 1), (&[1], 1)]));
    }

    #[test]
    fn jacobi_trudi_examples() {
        assert_eq!(jacobi_trudi(&p(&[1, 1]), JtVariant::H), ShiftedElement::basis(&p(&[1, 1])));
        for k in 1..=4u32 {
            assert_eq!(
                jacobi_trudi(&p(&[k]), JtVariant::H),
                ShiftedElement::basis(&p(&[k]))
            );
        }
        assert_eq!(
            jacobi_trudi(&p(&[2, 1]), JtVariant::Giambelli),
            ShiftedElement::basis(&p(&[2, 1]))
        );
        for mu in partitions_up_to(3) {
            for variant in [JtVariant::H, JtVariant::E, JtVariant::Giambelli] {
                assert_eq!(
                    jacobi_trudi(&mu, variant),
                    ShiftedElement::basis(&mu),
                    "{variant:?} at {mu}"
                );
            }
        }
    }

    #[test]
    fn binomial_examples() {
        // One variable: (1+x)^k = Σ (k↓m)/m! x^m.
        for k in 1..=5u32 {
            let coeffs = binomial_coeffs(&p(&[k]), 1).unwrap();
            for m in 0..=k {
                let mu = if m == 0 { Partition::empty() } else { p(&[m]) };
                let expected = falling(&rat_int(k as i64), m as u64)
                    / Rat::from_integer(factorial(m as u64));
                assert_eq!(coeffs.get(&mu).cloned().unwrap_or_else(Rat::zero), expected);
            }
        }
        let trivial = binomial_coeffs(&Partition::empty(), 2).unwrap();
        assert_eq!(trivial.len(), 1);
        assert_eq!(trivial[&Partition::empty()], Rat::one());

        let std_rep = binomial_coeffs(&p(&[1]), 2).unwrap();
        assert_eq!(std_rep[&Partition::empty()], Rat::one());
        assert_eq!(std_rep[&p(&[1])], rat(1, 2));

        assert_eq!(
            binomial_coeffs(&p(&[1, 1]), 1).unwrap_err(),
            LambdaError::TooManyRows { len: 2, n: 1 }
        );

        let mut rng = sampling::seeded(42);
        for lambda in [p(&[1]), p(&[2]), p(&[2, 1])] {
            for _ in 0..5 {
                let x: Vec<Rat> = (0..2).map(|_| sampling::rational(&mut rng)).collect();
                assert!(binomial_check(&lambda, 2, &x).unwrap(), "λ={lambda}");
            }
        }
    }

    #[test]
    fn coherence_examples() {
        assert!(coherence_check(1, &p(&[1]), &Signature::new(vec![2, 0])).unwrap());
        assert!(coherence_check(1, &p(&[1]), &Signature::new(vec![1, 1])).unwrap());
        assert!(coherence_check(2, &p(&[1, 1]), &Signature::new(vec![2, 1, 0])).unwrap());
        assert_eq!(
            coherence_check(1, &p(&[1, 1]), &Signature::new(vec![1, 0])).unwrap_err(),
            LambdaError::TooManyRows { len: 2, n: 1 }
        );
        assert_eq!(
            coherence_check(2, &p(&[1]), &Signature::new(vec![1, 0])).unwrap_err(),
            LambdaError::WrongSignatureLength { expected: 3, got: 2 }
        );
    }

    #[test]
    fn psharp_examples() {
        assert_eq!(psharp(&p(&[1])), elem(&[(&[1], 1)]));
        assert_eq!(psharp(&p(&[2])), elem(&[(&[2], 1), (&[1, 1], -1)]));
        assert_eq!(psharp(&p(&[2])).evaluate(&p(&[2, 1])), rat_int(0));
        // p# evaluates to the Gibbsian eigenvalue wherever the class fits.
        for k in 1..=3u64 {
            for rho in partitions_of(k) {
                let elt = psharp(&rho);
                for l in k..=5u64 {
                    for lambda in partitions_of(l) {
                        assert_eq!(
                            elt.evaluate(&lambda),
                            gibbs_eigenvalue(&lambda, &rho).unwrap(),
                            "ρ={rho}, λ={lambda}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn phi_map_carries_power_sums() {
        assert_eq!(
            phi_map(&SymElement::basis(&p(&[2, 1]))),
            ShiftedElement::basis(&p(&[2, 1]))
        );
        assert!(phi_map(&SymElement::zero()).is_zero());
        for k in 1..=4u64 {
            for rho in partitions_of(k) {
                assert_eq!(phi_map(&SymElement::power_sum(&rho)), psharp(&rho));
            }
        }
    }

    #[test]
    fn round_trip_small() {
        let mut rng = sampling::seeded(13);
        for _ in 0..5 {
            let mut map = BTreeMap::new();
            for mu in partitions_up_to(3) {
                map.insert(mu, sampling::rational(&mut rng));
            }
            let a = ShiftedElement::from_map(map);
            let back = expand_from_oracle(|l| a.evaluate(l), a.degree()).unwrap();
            assert_eq!(back, a);
        }
    }

    #[test]
    fn char_table_bridge() {
        // The coefficients of p#_ρ really are the character column for ρ.
        let table = CharTable::new(3);
        let elt = psharp(&p(&[2, 1]));
        for lambda in partitions_of(3) {
            assert_eq!(
                elt.coeff(&lambda),
                Rat::from_integer(table.value(&lambda, &p(&[2, 1])).clone())
            );
        }
    }
}
