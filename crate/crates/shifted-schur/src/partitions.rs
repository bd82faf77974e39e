//! Partitions, signatures, and skew shapes, together with hooks, contents,
//! dimension formulas, interlacing, and the exhaustive standard-tableau
//! counter that serves as the independent oracle for every dimension claim.

use crate::exact_arith::{factorial, rat_int, Int, Rat};
use num_traits::One;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Errors for partition and signature construction and parsing.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing, got {0}")]
    NotWeaklyDecreasing(String),
    #[error("inner shape must be contained in the outer shape")]
    NotContained,
    #[error("shape has {len} parts but only {n} variables are available")]
    TooManyParts { len: usize, n: usize },
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

/// A partition: a weakly decreasing tuple of positive integers.  Trailing
/// zeros are trimmed, so the representation is canonical and the empty
/// partition is the empty list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, trimming trailing zeros.  Panics when the parts
    /// are not weakly decreasing; use [`Partition::from_str`] for validated
    /// parsing of external input.
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts = parts.into();
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`-th part (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// The conjugate (transposed diagram) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect::<Vec<_>>();
        Partition::new(parts)
    }

    /// Whether `inner` fits inside `self` row by row.
    pub fn contains(&self, inner: &Partition) -> bool {
        (0..inner.len()).all(|i| inner.part(i) <= self.part(i))
    }

    /// All boxes `(row, col)` of the diagram, 0-based, in row-reading order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
    }

    /// Boxes of the skew diagram `self / inner`, in row-reading order.
    pub fn skew_boxes(&self, inner: &Partition) -> Vec<(usize, usize)> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (inner.part(i) as usize..p as usize).map(move |j| (i, j)))
            .collect()
    }

    /// Hook length of the box `(row, col)` (0-based).
    pub fn hook_len(&self, row: usize, col: usize) -> u32 {
        let arm = self.part(row) - col as u32 - 1;
        let leg = self.parts.iter().skip(row + 1).filter(|&&p| p as usize > col).count() as u32;
        arm + leg + 1
    }

    /// All partitions contained in `self`, the empty partition included.
    pub fn subdiagrams(&self) -> Vec<Partition> {
        fn rec(lambda: &Partition, row: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition::new(cur.clone()));
            if row >= lambda.len() {
                return;
            }
            let hi = cap.min(lambda.part(row));
            for v in (1..=hi).rev() {
                cur.push(v);
                rec(lambda, row + 1, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(self, 0, u32::MAX, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions obtained from `self` by adding one box.
    pub fn successors(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            if i == 0 || self.part(i - 1) > self.part(i) {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition::new(parts));
            }
        }
        out
    }

    /// Key string in the bracketed form used by JSON maps, e.g. `"[3,1]"`.
    pub fn bracket_string(&self) -> String {
        let inner = self.parts.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        format!("[{inner}]")
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition prints as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, PartitionError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let v: u32 = tok.trim().parse().map_err(|_| PartitionError::Parse {
                what: "partition",
                input: s.to_string(),
            })?;
            parts.push(v);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(PartitionError::NotWeaklyDecreasing(s.to_string()));
        }
        Ok(Partition::new(parts))
    }
}

/// Content `c(α) = col − row` of a 0-based box.
pub fn content(row: usize, col: usize) -> i64 {
    col as i64 - row as i64
}

/// A signature: a weakly decreasing integer tuple of fixed length `n`,
/// negative parts allowed.  Unlike partitions, the length is part of the
/// data, so trailing zeros are kept.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Signature {
    parts: Vec<i64>,
}

impl Signature {
    /// Builds a signature; panics when the parts are not weakly decreasing.
    pub fn new(parts: impl Into<Vec<i64>>) -> Self {
        let parts = parts.into();
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "signature parts must be weakly decreasing: {parts:?}"
        );
        Self { parts }
    }

    /// The partition `lambda` padded with zeros to length `n`.
    pub fn from_partition(lambda: &Partition, n: usize) -> Result<Self, PartitionError> {
        if lambda.len() > n {
            return Err(PartitionError::TooManyParts { len: lambda.len(), n });
        }
        let mut parts: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
        parts.resize(n, 0);
        Ok(Self { parts })
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// All signatures `ν` of length `n−1` interlacing `self`
    /// (`λ₁ ≥ ν₁ ≥ λ₂ ≥ ⋯ ≥ ν_{n−1} ≥ λₙ`), in lexicographically
    /// descending order.
    pub fn interlacing(&self) -> Vec<Signature> {
        let n = self.parts.len();
        assert!(n >= 1, "interlacing needs at least one part");
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n - 1);
        fn rec(lambda: &[i64], i: usize, cur: &mut Vec<i64>, out: &mut Vec<Signature>) {
            if i == lambda.len() - 1 {
                out.push(Signature::new(cur.clone()));
                return;
            }
            let (hi, lo) = (lambda[i], lambda[i + 1]);
            for v in (lo..=hi).rev() {
                cur.push(v);
                rec(lambda, i + 1, cur, out);
                cur.pop();
            }
        }
        rec(&self.parts, 0, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
    }
}

impl FromStr for Signature {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, PartitionError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Signature { parts: Vec::new() });
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let v: i64 = tok.trim().parse().map_err(|_| PartitionError::Parse {
                what: "signature",
                input: s.to_string(),
            })?;
            parts.push(v);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(PartitionError::NotWeaklyDecreasing(s.to_string()));
        }
        Ok(Signature { parts })
    }
}

/// A skew shape `outer/inner` with the containment invariant enforced.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, PartitionError> {
        if !outer.contains(&inner) {
            return Err(PartitionError::NotContained);
        }
        Ok(Self { outer, inner })
    }

    /// The straight shape `lambda/∅`.
    pub fn straight(outer: Partition) -> Self {
        Self { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of boxes of the skew diagram.
    pub fn size(&self) -> u64 {
        self.outer.size() - self.inner.size()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl FromStr for SkewShape {
    type Err = PartitionError;

    /// Parses `"3,2/2"`; a missing or empty inner component means `∅`.
    fn from_str(s: &str) -> Result<Self, PartitionError> {
        let (outer, inner) = match s.split_once('/') {
            Some((o, i)) => (o, i),
            None => (s, ""),
        };
        SkewShape::new(outer.parse()?, inner.parse()?)
    }
}

/// All partitions of `k` in lexicographically descending order.
pub fn partitions_of(k: u64) -> Vec<Partition> {
    fn rec(rem: u64, max: u64, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition::new(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p as u32);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size `0, 1, …, k`, each size class lexicographically
/// descending.
pub fn partitions_up_to(k: u64) -> Vec<Partition> {
    (0..=k).flat_map(partitions_of).collect()
}

/// Product of the hook lengths over all boxes; `1` for the empty partition.
pub fn hook_product(mu: &Partition) -> Int {
    let mut acc = Int::one();
    for (i, j) in mu.boxes() {
        acc *= Int::from(mu.hook_len(i, j));
    }
    acc
}

/// Number of standard Young tableaux of shape `mu`, computed by two closed
/// formulas — the hook formula and the difference-product formula — whose
/// mandatory agreement guards against arithmetic bugs.
pub fn dim_sym(mu: &Partition) -> Int {
    let fact = factorial(mu.size());
    let hooks = hook_product(mu);
    let by_hooks = &fact / &hooks;
    assert!(
        (&by_hooks * &hooks) == fact,
        "hook product {hooks} does not divide {}! for {mu:?}",
        mu.size()
    );

    // ∏_{i<j}(μᵢ − μⱼ + j − i) · |μ|! / ∏ᵢ (μᵢ + ℓ − i)! over the rows i ≤ ℓ.
    let l = mu.len();
    let mut num = fact;
    for i in 0..l {
        for j in (i + 1)..l {
            num *= Int::from(mu.part(i) as i64 - mu.part(j) as i64 + j as i64 - i as i64);
        }
    }
    let mut den = Int::one();
    for i in 0..l {
        den *= factorial((mu.part(i) as usize + l - 1 - i) as u64);
    }
    let by_products = &num / &den;
    assert!(
        &by_products * &den == num && by_products == by_hooks,
        "standard-tableau count formulas disagree for {mu:?}"
    );
    by_hooks
}

/// `∏_{α ∈ μ} (n + c(α))`, the product of `n` shifted by the contents.
pub fn up_factorial(n: i64, mu: &Partition) -> Rat {
    let mut acc = Rat::one();
    for (i, j) in mu.boxes() {
        acc *= rat_int(n + content(i, j));
    }
    acc
}

/// Dimension of the irreducible polynomial representation of the rank-`n`
/// general linear group indexed by `lambda`, computed by the content-product
/// formula and by Weyl's difference-product formula, with mandatory
/// agreement.
pub fn dim_gl(n: u32, lambda: &Partition) -> Result<Rat, PartitionError> {
    if lambda.len() > n as usize {
        return Err(PartitionError::TooManyParts { len: lambda.len(), n: n as usize });
    }
    let by_contents = up_factorial(n as i64, lambda)
        / Rat::from_integer(hook_product(lambda));
    let by_weyl = weyl_dimension(
        &(0..n as usize).map(|i| lambda.part(i) as i64).collect::<Vec<_>>(),
    );
    assert!(
        by_contents == by_weyl && by_contents.is_integer(),
        "general-linear dimension formulas disagree for n={n}, lambda={lambda:?}"
    );
    Ok(by_contents)
}

/// Weyl's dimension product `∏_{i<j} (λᵢ − λⱼ + j − i)/(j − i)` for an
/// arbitrary signature; valid (and positive) for every weakly decreasing
/// integer tuple.
pub fn dim_gl_signature(lambda: &Signature) -> Rat {
    weyl_dimension(lambda.parts())
}

fn weyl_dimension(parts: &[i64]) -> Rat {
    let n = parts.len();
    let mut num = Int::one();
    let mut den = Int::one();
    for i in 0..n {
        for j in (i + 1)..n {
            num *= Int::from(parts[i] - parts[j] + j as i64 - i as i64);
            den *= Int::from((j - i) as i64);
        }
    }
    Rat::new(num, den)
}

/// Exhaustive count of standard tableaux of a skew shape: cells are filled in
/// row-reading order by depth-first search.  This is the independent oracle
/// that the closed dimension formulas are tested against, so it deliberately
/// takes no shortcuts.
pub fn syt_count_skew(shape: &SkewShape) -> Int {
    let cells = shape.outer.skew_boxes(&shape.inner);
    let n = cells.len();
    if n == 0 {
        return Int::one();
    }
    let index: HashMap<(usize, usize), usize> =
        cells.iter().copied().enumerate().map(|(t, c)| (c, t)).collect();
    let mut values = vec![0u32; n];
    let mut used = vec![false; n + 1];
    let mut count = 0u64;

    fn rec(
        t: usize,
        cells: &[(usize, usize)],
        index: &HashMap<(usize, usize), usize>,
        values: &mut Vec<u32>,
        used: &mut Vec<bool>,
        count: &mut u64,
    ) {
        if t == cells.len() {
            *count += 1;
            return;
        }
        let (row, col) = cells[t];
        let mut lower = 0u32;
        if col > 0 {
            if let Some(&left) = index.get(&(row, col - 1)) {
                lower = lower.max(values[left]);
            }
        }
        if row > 0 {
            if let Some(&up) = index.get(&(row - 1, col)) {
                lower = lower.max(values[up]);
            }
        }
        for v in (lower + 1)..=(cells.len() as u32) {
            if !used[v as usize] {
                used[v as usize] = true;
                values[t] = v;
                rec(t + 1, cells, index, values, used, count);
                used[v as usize] = false;
            }
        }
    }
    rec(0, &cells, &index, &mut values, &mut used, &mut count);
    Int::from(count)
}
