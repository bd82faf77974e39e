//! Polynomial differential operators on matrix entries, and the higher
//! Capelli operators acting on them.
//!
//! Everything abstract is pushed through the right-action realization into
//! normal-ordered differential operators (coefficients to the left,
//! derivatives to the right, unique term maps), where equality is decidable
//! term by term.  The same variable type doubles as the commuting coordinate
//! functions on the general linear Lie algebra, so the symmetrization map and
//! its cluster-expansion inverse live here too.

use crate::characters::{cycle_type, mn_character, perm_sign, permutations};
use crate::exact_arith::{binom, factorial, falling_int, rat_int, Int, Rat};
use crate::partitions::Partition;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CapelliError {
    #[error("shape with {len} rows does not fit (bound is {bound})")]
    ShapeTooLong { len: usize, bound: usize },
    #[error("shape of size {k} exceeds the tensor degree {l}")]
    DegreeTooSmall { k: u64, l: u64 },
    #[error("tensor space dimension {dim} exceeds the {bound} limit")]
    TooLarge { dim: u64, bound: u64 },
}

/// A variable `x_{ij}` (or a coordinate function `e_{ij}` on the Lie
/// algebra), by its 1-based index pair.
pub type Var = (u16, u16);

/// Exponent map of a monomial; no zero exponents stored.
pub type VarExp = BTreeMap<Var, u32>;

fn exp_insert(exp: &mut VarExp, v: Var, by: u32) {
    if by == 0 {
        return;
    }
    *exp.entry(v).or_insert(0) += by;
}

fn exp_of(pairs: &[Var]) -> VarExp {
    let mut exp = VarExp::new();
    for &v in pairs {
        exp_insert(&mut exp, v, 1);
    }
    exp
}

/// A polynomial in the variables `x_{ij}` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<VarExp, Rat>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(VarExp::new(), c);
        }
        Self { terms }
    }

    pub fn var(v: Var) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(exp_of(&[v]), Rat::one());
        Self { terms }
    }

    pub fn monomial(exp: VarExp, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (VarExp, Rat)>) -> Self {
        let mut out = Self::zero();
        for (exp, c) in terms {
            out.add_term(exp, c);
        }
        out
    }

    fn add_term(&mut self, exp: VarExp, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    fn normalize(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn terms(&self) -> &BTreeMap<VarExp, Rat> {
        &self.terms
    }

    pub fn coeff(&self, exp: &VarExp) -> Rat {
        self.terms.get(exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        !self.terms.values().any(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.add_term(exp.clone(), c.clone());
        }
        out.normalize();
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut exp = ea.clone();
                for (&v, &q) in eb {
                    exp_insert(&mut exp, v, q);
                }
                out.add_term(exp, ca * cb);
            }
        }
        out.normalize();
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

/// A differential operator with polynomial coefficients, in normal form:
/// each term is a coefficient monomial in the `x_{ij}` times a monomial in
/// the `∂_{ij}`, with all derivatives to the right.  The term map is the
/// canonical form, so `==` decides operator equality.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DiffOp {
    terms: BTreeMap<(VarExp, VarExp), Rat>,
}

impl DiffOp {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((VarExp::new(), VarExp::new()), Rat::one());
        Self { terms }
    }

    /// A single normal-ordered term `c · x^xs · ∂^ds`.
    pub fn term(xs: VarExp, ds: VarExp, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((xs, ds), c);
        }
        Self { terms }
    }

    pub fn terms(&self) -> &BTreeMap<(VarExp, VarExp), Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: (VarExp, VarExp), c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (key, c) in &other.terms {
            out.add_term(key.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, a)| (k.clone(), a * c)).collect() }
    }
}

/// Applies a normal-ordered operator to a polynomial: per term, the
/// derivative monomial acts first (`∂^q` on `x^r` gives `(r↓q)·x^{r−q}`,
/// zero when `q > r`), then the coefficient monomial multiplies back in.
pub fn apply(op: &DiffOp, p: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for ((xs, ds), c) in &op.terms {
        'target: for (pe, d) in p.terms() {
            let mut coeff = c * d;
            let mut exp = pe.clone();
            for (v, &q) in ds {
                let Some(&r) = pe.get(v) else { continue 'target };
                if r < q {
                    continue 'target;
                }
                coeff *= Rat::from_integer(falling_int(r as i64, q as u64));
                if r == q {
                    exp.remove(v);
                } else {
                    exp.insert(*v, r - q);
                }
            }
            for (&v, &q) in xs {
                exp_insert(&mut exp, v, q);
            }
            out.add_term(exp, coeff);
        }
    }
    out.normalize();
    out
}

/// Normal-ordered product `a·b` (so `b` acts first):
/// `apply(compose(a,b), p) = apply(a, apply(b, p))`.  Normal ordering uses
/// the one-variable rule `∂^q x^r = Σ_t C(q,t)·(r↓t)·x^{r−t} ∂^{q−t}`
/// independently in each shared variable.
pub fn compose(a: &DiffOp, b: &DiffOp) -> DiffOp {
    let mut out = DiffOp::zero();
    for ((xa, da), ca) in &a.terms {
        for ((xb, db), cb) in &b.terms {
            let shared: Vec<Var> =
                da.keys().filter(|v| xb.contains_key(*v)).copied().collect();
            // All ways of contracting t_v of the q_v derivatives against the
            // r_v coordinates, one choice per shared variable.
            let mut choices: Vec<(Vec<u32>, Rat)> = vec![(Vec::new(), ca * cb)];
            for &v in &shared {
                let q = da[&v];
                let r = xb[&v];
                let mut next = Vec::new();
                for (prefix, w) in &choices {
                    for t in 0..=q.min(r) {
                        let mult = Rat::from_integer(
                            binom(q as u64, t as u64) * falling_int(r as i64, t as u64),
                        );
                        let mut p = prefix.clone();
                        p.push(t);
                        next.push((p, w * mult));
                    }
                }
                choices = next;
            }
            for (tsel, w) in choices {
                let mut xs = xa.clone();
                for (&v, &q) in xb {
                    exp_insert(&mut xs, v, q);
                }
                let mut ds = db.clone();
                for (&v, &q) in da {
                    exp_insert(&mut ds, v, q);
                }
                for (idx, &v) in shared.iter().enumerate() {
                    let t = tsel[idx];
                    if t == 0 {
                        continue;
                    }
                    for exp in [&mut xs, &mut ds] {
                        let e = exp.get_mut(&v).expect("shared variable present");
                        *e -= t;
                        if *e == 0 {
                            exp.remove(&v);
                        }
                    }
                }
                out.add_term((xs, ds), w);
            }
        }
    }
    out
}

fn index_tuples(n: u16, k: usize) -> Vec<Vec<u16>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..=n).map(move |i| {
                    let mut t2 = t.clone();
                    t2.push(i);
                    t2
                })
            })
            .collect();
    }
    out
}

/// Character values `χ^μ(s)`, one per permutation in [`permutations`]`(k)`
/// order, looked up by cycle type.
fn char_by_perm(mu: &Partition, k: usize) -> Vec<Int> {
    let mut by_type: HashMap<Partition, Int> = HashMap::new();
    permutations(k)
        .iter()
        .map(|s| {
            let rho = cycle_type(s);
            by_type
                .entry(rho.clone())
                .or_insert_with(|| mn_character(mu, &rho).expect("sizes match"))
                .clone()
        })
        .collect()
}

/// The higher Capelli operator for shape `μ` on the space of `n × m`
/// matrices:
/// `(1/k!) Σ_{i∈[n]^k} Σ_{j∈[m]^k} Σ_{s} χ^μ(s) ·
///  x_{i₁j₁}⋯x_{iₖjₖ} ∂_{i_{s(1)}j₁}⋯∂_{i_{s(k)}jₖ}`.
/// Each summand is already normal-ordered, so construction is pure
/// bookkeeping.  For `μ = ∅` this is the identity operator.
pub fn capelli_operator(mu: &Partition, n: u16, m: u16) -> Result<DiffOp, CapelliError> {
    let bound = n.min(m) as usize;
    if mu.len() > bound {
        return Err(CapelliError::ShapeTooLong { len: mu.len(), bound });
    }
    let k = mu.size() as usize;
    let perms = permutations(k);
    let chars = char_by_perm(mu, k);
    let inv_kfact = Rat::new(Int::one(), factorial(k as u64));
    let j_tuples = index_tuples(m, k);
    let terms = index_tuples(n, k)
        .into_par_iter()
        .map(|i| {
            let mut local: BTreeMap<(VarExp, VarExp), Rat> = BTreeMap::new();
            for j in &j_tuples {
                let xs = exp_of(&(0..k).map(|t| (i[t], j[t])).collect::<Vec<_>>());
                for (s, chi) in perms.iter().zip(&chars) {
                    if chi.is_zero() {
                        continue;
                    }
                    let ds = exp_of(&(0..k).map(|t| (i[s[t]], j[t])).collect::<Vec<_>>());
                    let c = Rat::from_integer(chi.clone()) * &inv_kfact;
                    let entry =
                        local.entry((xs.clone(), ds)).or_insert_with(Rat::zero);
                    *entry += c;
                }
            }
            local
        })
        .reduce(BTreeMap::new, |mut acc, local| {
            for (key, c) in local {
                let entry = acc.entry(key).or_insert_with(Rat::zero);
                *entry += c;
            }
            acc
        });
    let mut op = DiffOp { terms };
    op.terms.retain(|_, c| !c.is_zero());
    Ok(op)
}

/// The joint highest weight vector `v_λ`: the product over `i` of the
/// leading principal `i × i` minor of `[x]` raised to the power
/// `λᵢ − λᵢ₊₁`.
pub fn highest_vector(lambda: &Partition, n: u16, m: u16) -> Result<MultiPoly, CapelliError> {
    let bound = n.min(m) as usize;
    if lambda.len() > bound {
        return Err(CapelliError::ShapeTooLong { len: lambda.len(), bound });
    }
    let mut v = MultiPoly::one();
    for i in 1..=lambda.len() {
        let power = lambda.part(i - 1) - lambda.part(i);
        if power == 0 {
            continue;
        }
        let minor = leading_minor(i as u16);
        v = v.mul(&minor.pow(power));
    }
    Ok(v)
}

/// Determinant of the leading `size × size` block of `[x_{ij}]`.
fn leading_minor(size: u16) -> MultiPoly {
    let mut det = MultiPoly::zero();
    for s in permutations(size as usize) {
        let exp = exp_of(
            &(0..size as usize)
                .map(|t| (t as u16 + 1, s[t] as u16 + 1))
                .collect::<Vec<_>>(),
        );
        let sign = rat_int(perm_sign(&s) as i64);
        det = det.add(&MultiPoly::monomial(exp, sign));
    }
    det
}

/// Applies `op` to `v` and asserts the image is an exact scalar multiple of
/// `v`, returning the scalar (zero for the zero image).  Panics otherwise —
/// for the operators checked here a non-eigenvector signals a bug.
pub fn eigenvalue_on(op: &DiffOp, v: &MultiPoly) -> Rat {
    let image = apply(op, v);
    if image.is_zero() {
        return Rat::zero();
    }
    let (lead, a) = v.terms().iter().next().expect("eigenvector must be nonzero");
    let c = image.coeff(lead) / a;
    assert_eq!(image, v.scale(&c), "image is not a scalar multiple of the vector");
    c
}

/// The eigenvalue of the Capelli operator for `μ` on the highest vector
/// `v_λ`.  By the characterization theorem this must equal `s*_μ(λ)` —
/// callers compare against the evaluation engines.
pub fn eigen_check(
    mu: &Partition,
    lambda: &Partition,
    n: u16,
    m: u16,
) -> Result<Rat, CapelliError> {
    let op = capelli_operator(mu, n, m)?;
    let v = highest_vector(lambda, n, m)?;
    Ok(eigenvalue_on(&op, &v))
}

/// A word in the standard generators `E_{ij}` of the general linear Lie
/// algebra of size `n`, representing their composition (or, where stated,
/// their commutative product).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorWord {
    n: u16,
    letters: Vec<(u16, u16)>,
}

impl GeneratorWord {
    pub fn new(n: u16, letters: Vec<(u16, u16)>) -> Self {
        assert!(
            letters.iter().all(|&(i, j)| (1..=n).contains(&i) && (1..=n).contains(&j)),
            "letter indices must lie in 1..={n}"
        );
        Self { n, letters }
    }

    pub fn n(&self) -> u16 {
        self.n
    }

    pub fn letters(&self) -> &[(u16, u16)] {
        &self.letters
    }
}

/// First-order image of one generator: `E_{rs} ↦ Σ_{a≤rows} x_{ar} ∂_{as}`.
fn generator_op(r: u16, s: u16, rows: u16) -> DiffOp {
    let mut op = DiffOp::zero();
    for a in 1..=rows {
        op = op.add(&DiffOp::term(exp_of(&[(a, r)]), exp_of(&[(a, s)]), Rat::one()));
    }
    op
}

/// The right-action realization of a generator word on polynomials in an
/// `rows × n` matrix of variables: each letter maps to its first-order
/// operator and the word composes left-to-right (first letter outermost).
/// The empty word is the identity.
pub fn r_map(w: &GeneratorWord, rows: u16) -> DiffOp {
    let mut acc = DiffOp::identity();
    for &(r, s) in &w.letters {
        acc = compose(&acc, &generator_op(r, s, rows));
    }
    acc
}

/// The realized symmetrization of a commutative generator monomial:
/// `Σ_{α∈[rows]^k} x_{α₁i₁}⋯x_{αₖiₖ} ∂_{α₁j₁}⋯∂_{αₖjₖ}`, which is manifestly
/// independent of the letter order and already normal-ordered.
pub fn sigma(w: &GeneratorWord, rows: u16) -> DiffOp {
    let k = w.letters.len();
    let mut op = DiffOp::zero();
    for alpha in index_tuples(rows, k) {
        let xs = exp_of(&(0..k).map(|t| (alpha[t], w.letters[t].0)).collect::<Vec<_>>());
        let ds = exp_of(&(0..k).map(|t| (alpha[t], w.letters[t].1)).collect::<Vec<_>>());
        op = op.add(&DiffOp::term(xs, ds, Rat::one()));
    }
    op
}

/// Linear extension of [`sigma`] to polynomials in the coordinate functions
/// `e_{ij}`: each monomial is flattened to a word (order is irrelevant) and
/// symmetrized.
pub fn sigma_poly(p: &MultiPoly, n: u16, rows: u16) -> DiffOp {
    let mut op = DiffOp::zero();
    for (exp, c) in p.terms() {
        let mut letters = Vec::new();
        for (&v, &q) in exp {
            for _ in 0..q {
                letters.push(v);
            }
        }
        let w = GeneratorWord::new(n, letters);
        op = op.add(&sigma(&w, rows).scale(c));
    }
    op
}

/// The central-idempotent-like element `S_{μ|n}` of the symmetric algebra:
/// `(k!)⁻¹ Σ_{i∈[n]^k} Σ_s χ^μ(s) · e_{i₁,i_{s(1)}} ⋯ e_{iₖ,i_{s(k)}}`.
/// Its symmetrization equals the Capelli operator for `μ` on square
/// matrices.
pub fn s_mu_symmetric(mu: &Partition, n: u16) -> Result<MultiPoly, CapelliError> {
    if mu.len() > n as usize {
        return Err(CapelliError::ShapeTooLong { len: mu.len(), bound: n as usize });
    }
    let k = mu.size() as usize;
    let perms = permutations(k);
    let chars = char_by_perm(mu, k);
    let inv_kfact = Rat::new(Int::one(), factorial(k as u64));
    let mut p = MultiPoly::zero();
    for i in index_tuples(n, k) {
        for (s, chi) in perms.iter().zip(&chars) {
            if chi.is_zero() {
                continue;
            }
            let exp = exp_of(&(0..k).map(|t| (i[t], i[s[t]])).collect::<Vec<_>>());
            p.add_term(exp, Rat::from_integer(chi.clone()) * &inv_kfact);
        }
    }
    p.normalize();
    Ok(p)
}

/// All partitions of `{0, …, k−1}` into clusters; within a cluster the
/// elements appear in increasing order, and clusters are ordered by their
/// minima.
fn set_partitions(k: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for t in 0..k {
        let mut next = Vec::new();
        for xi in &out {
            for c in 0..xi.len() {
                let mut xi2 = xi.clone();
                xi2[c].push(t);
                next.push(xi2);
            }
            let mut xi2 = xi.clone();
            xi2.push(vec![t]);
            next.push(xi2);
        }
        out = next;
    }
    out
}

/// The inverse of the symmetrization on a composed word, by the cluster
/// expansion: sum over all set partitions of the letter positions, where a
/// cluster `t₁<⋯<t_p` collapses through `⟨E_{ab}E_{cd}⟩ = δ_{bc} E_{ad}` to
/// a single coordinate function (or kills the term when indices do not
/// chain).  The result is a polynomial in the `e_{ij}`.
pub fn sigma_inverse(w: &GeneratorWord) -> MultiPoly {
    let k = w.letters.len();
    let mut out = MultiPoly::zero();
    'partition: for xi in set_partitions(k) {
        let mut exp = VarExp::new();
        for cluster in &xi {
            let (row, mut col) = w.letters[cluster[0]];
            for &t in &cluster[1..] {
                let (i, j) = w.letters[t];
                if col != i {
                    continue 'partition;
                }
                col = j;
            }
            exp_insert(&mut exp, (row, col), 1);
        }
        out.add_term(exp, Rat::one());
    }
    out.normalize();
    out
}

/// Restriction of an operator to the variables `x_{ij}` with `i ≤ n`,
/// `j ≤ m`: keeps the terms supported inside the block.  Asserts that no
/// term differentiates only inside yet multiplies by an outside variable —
/// for the operators restricted here the inside part is a genuine operator
/// on the smaller matrix space.
pub fn restrict(op: &DiffOp, n: u16, m: u16) -> DiffOp {
    let inside =
        |exp: &VarExp| exp.keys().all(|&(i, j)| i <= n && j <= m);
    let mut out = DiffOp::zero();
    for ((xs, ds), c) in &op.terms {
        if inside(ds) {
            assert!(
                inside(xs),
                "restriction is not an operator on the block: {xs:?} ∂{ds:?}"
            );
            out.add_term((xs.clone(), ds.clone()), c.clone());
        }
    }
    out
}

fn matmul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|t| &a[i][t] * &b[t][j]).sum())
                .collect()
        })
        .collect()
}

fn matpow(a: &[Vec<Rat>], k: u32) -> Vec<Vec<Rat>> {
    let n = a.len();
    let mut acc: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect();
    for _ in 0..k {
        acc = matmul(&acc, a);
    }
    acc
}

/// The first-order operator realizing the Lie algebra element with
/// coefficient matrix `a`: `Σ_{r,s} a_{rs} · Σ_α x_{αr} ∂_{αs}`.
fn matrix_element_op(a: &[Vec<Rat>], rows: u16) -> DiffOp {
    let n = a.len() as u16;
    let mut op = DiffOp::zero();
    for r in 1..=n {
        for s in 1..=n {
            let c = &a[r as usize - 1][s as usize - 1];
            if c.is_zero() {
                continue;
            }
            op = op.add(&generator_op(r, s, rows).scale(c));
        }
    }
    op
}

/// Verifies the symmetrized-power expansion for the matrix `a`: the
/// symmetrization of the `k`-th symmetric power of `A = Σ a_{ij} e_{ij}`
/// must equal `Σ_{λ⊢k} (−1)^{k−ℓ(λ)} (k!/z_λ) · ⟨A^{λ₁}⟩∘⟨A^{λ₂}⟩∘⋯`, where
/// `⟨A^p⟩` is the Lie algebra element with matrix `Aᵖ` (the factors commute,
/// so the composition order is immaterial).  When `A` is idempotent, the
/// falling-style form `σ(Aᵏ) = A∘(A−1)∘⋯∘(A−k+1)` is checked as well.
pub fn sigma_power_check(a: &[Vec<Rat>], k: u32) -> bool {
    let n = a.len() as u16;
    assert!(n <= 3 && k <= 5, "symmetrized-power check is desk-scale: n ≤ 3, k ≤ 5");
    let rows = n;

    // Left side: A as a linear form in the e's, raised to the k-th power.
    let mut linear = MultiPoly::zero();
    for r in 1..=n {
        for s in 1..=n {
            linear = linear.add(
                &MultiPoly::var((r, s)).scale(&a[r as usize - 1][s as usize - 1]),
            );
        }
    }
    let lhs = sigma_poly(&linear.pow(k), n, rows);

    // Right side: the cycle-type expansion.
    let mut rhs = DiffOp::zero();
    for lambda in crate::partitions::partitions_of(k as u64) {
        let sign = if (k as usize - lambda.len()) % 2 == 0 { 1 } else { -1 };
        let weight = rat_int(sign)
            * Rat::new(factorial(k as u64), crate::characters::z_factor(&lambda));
        let mut factor = DiffOp::identity();
        for &part in lambda.parts() {
            factor = compose(&factor, &matrix_element_op(&matpow(a, part), rows));
        }
        rhs = rhs.add(&factor.scale(&weight));
    }
    if lhs != rhs {
        return false;
    }

    // Idempotent extra: σ(Aᵏ) = A∘(A−1)∘⋯∘(A−k+1).
    if matpow(a, 2) == a {
        let op_a = matrix_element_op(a, rows);
        let mut falling_form = DiffOp::identity();
        for j in 0..k {
            let shifted = op_a.add(&DiffOp::identity().scale(&rat_int(-(j as i64))));
            falling_form = compose(&falling_form, &shifted);
        }
        if lhs != falling_form {
            return false;
        }
    }
    true
}

/// The operator `Σ_{i,j} E_{ij} E_{ji}` realized on polynomials in an
/// `n × n` matrix of variables; its scalar on `v_λ` is
/// `Σᵢ (λᵢ² + (n+1−2i)·λᵢ)`.
pub fn casimir_operator(n: u16) -> DiffOp {
    let mut op = DiffOp::zero();
    for i in 1..=n {
        for j in 1..=n {
            let w = GeneratorWord::new(n, vec![(i, j), (j, i)]);
            op = op.add(&r_map(&w, n));
        }
    }
    op
}

/// Compares the two sides of the Schur–Weyl realization on the full tensor
/// space `(ℂⁿ)^⊗l`, as dense `nˡ × nˡ` rational matrices: the Capelli
/// operator for `μ ⊢ k` acting on multilinear monomials against the place
/// action `Σ_{J ⊆ [l], |J|=k} Σ_{s∈S_k} χ^μ(s) · (permute the letters at J
/// by s)`.
pub fn schur_weyl_check(n: u16, l: usize, mu: &Partition) -> Result<bool, CapelliError> {
    if mu.len() > n as usize {
        return Err(CapelliError::ShapeTooLong { len: mu.len(), bound: n as usize });
    }
    let k = mu.size() as usize;
    if k > l {
        return Err(CapelliError::DegreeTooSmall { k: k as u64, l: l as u64 });
    }
    let dim = (n as u64).pow(l as u32);
    if dim > 4096 {
        return Err(CapelliError::TooLarge { dim, bound: 4096 });
    }
    let dim = dim as usize;
    let tuples = index_tuples(n, l);
    let index_of = |r: &[u16]| -> usize {
        r.iter().fold(0usize, |acc, &v| acc * n as usize + (v as usize - 1))
    };

    // Left side: the Capelli operator on the multilinear monomials
    // x_{r₁,1} x_{r₂,2} ⋯ x_{r_l,l}.
    let op = capelli_operator(mu, n, l as u16)?;
    let mut lhs = vec![vec![Rat::zero(); dim]; dim];
    for r in &tuples {
        let col = index_of(r);
        let mono = MultiPoly::monomial(
            exp_of(&(0..l).map(|t| (r[t], t as u16 + 1)).collect::<Vec<_>>()),
            Rat::one(),
        );
        let image = apply(&op, &mono);
        for (exp, c) in image.terms() {
            // The image of a multilinear monomial stays multilinear: one
            // variable per column index.
            let mut row_tuple = vec![0u16; l];
            let mut total = 0usize;
            for (&(i, j), &q) in exp {
                assert_eq!(q, 1, "image monomial must be multilinear");
                row_tuple[j as usize - 1] = i;
                total += 1;
            }
            assert_eq!(total, l, "image monomial must cover every column");
            lhs[index_of(&row_tuple)][col] += c;
        }
    }

    // Right side: permute k chosen tensor positions with character weights.
    let perms = permutations(k);
    let chars = char_by_perm(mu, k);
    let subsets = k_subsets(l, k);
    let mut rhs = vec![vec![Rat::zero(); dim]; dim];
    for r in &tuples {
        let col = index_of(r);
        for subset in &subsets {
            for (s, chi) in perms.iter().zip(&chars) {
                if chi.is_zero() {
                    continue;
                }
                let mut out = r.clone();
                for t in 0..k {
                    out[subset[t]] = r[subset[s[t]]];
                }
                rhs[index_of(&out)][col] += Rat::from_integer(chi.clone());
            }
        }
    }

    Ok(lhs == rhs)
}

/// All `k`-element subsets of `{0, …, l−1}`, each in increasing order.
fn k_subsets(l: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, l: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..l {
            cur.push(v);
            rec(v + 1, l, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, l, k, &mut Vec::new(), &mut out);
    out
}
