//! Irreducible characters of symmetric groups.
//!
//! The Murnaghan–Nakayama border-strip recursion (run on beta-sets) is the
//! independent oracle here.  On top of it sit the centralizer orders, full
//! character tables for one group at a time, and two quantities tied to
//! shifted Schur values: character values on classes with few non-trivial
//! cycles, and the eigenvalues of Gibbsian class operators.  The shifted
//! Schur evaluator is injected as a closure so this module never depends on
//! the evaluation engines.

use crate::exact_arith::{factorial, falling, rat_int, Int, Rat};
use crate::partitions::{dim_sym, Partition};
use num_traits::One;
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharError {
    #[error("character needs |lambda| = |rho|, got {lambda} and {rho}")]
    SizeMismatch { lambda: u64, rho: u64 },
    #[error("cycle type of size {k} does not fit in a symmetric group of degree {l}")]
    ClassTooLarge { k: u64, l: u64 },
}

/// Centralizer order of the cycle type `rho`: `∏ mʳ·r!` over each part size
/// `m` occurring `r` times.
pub fn z_factor(rho: &Partition) -> Int {
    let mut acc = Int::one();
    let parts = rho.parts();
    let mut i = 0;
    while i < parts.len() {
        let m = parts[i];
        let mut mult = 0u64;
        while i < parts.len() && parts[i] == m {
            mult += 1;
            i += 1;
        }
        for _ in 0..mult {
            acc *= Int::from(m);
        }
        acc *= factorial(mult);
    }
    acc
}

/// All permutations of `{0, …, k−1}` in lexicographic order, as image vectors.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining.is_empty() {
            out.push(cur.clone());
            return;
        }
        for idx in 0..remaining.len() {
            let v = remaining.remove(idx);
            cur.push(v);
            rec(remaining, cur, out);
            cur.pop();
            remaining.insert(idx, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..k).collect(), &mut Vec::with_capacity(k), &mut out);
    out
}

/// Cycle type of a permutation given as an image vector.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut lens = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        lens.push(len);
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(lens)
}

/// Sign of a permutation: `(−1)^(k − #cycles)`.
pub fn perm_sign(perm: &[usize]) -> i32 {
    let cycles = cycle_type(perm).len();
    if (perm.len() - cycles) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `χ^λ_ρ` by the Murnaghan–Nakayama recursion.  Errors when `|λ| ≠ |ρ|`.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<Int, CharError> {
    if lambda.size() != rho.size() {
        return Err(CharError::SizeMismatch { lambda: lambda.size(), rho: rho.size() });
    }
    let mut memo = HashMap::new();
    Ok(mn_rec(lambda, rho.parts(), 0, &mut memo))
}

/// Recursive strip removal on beta-sets.  `rho[next..]` is the multiset of
/// cycle lengths still to be peeled off, largest first; removing a strip of
/// length `r` from `λ` is replacing a beta-number `b` by `b − r` (when that
/// stays nonnegative and unoccupied), with sign `(−1)^{#beta-numbers strictly
/// between}`.
fn mn_rec(
    lambda: &Partition,
    rho: &[u32],
    next: usize,
    memo: &mut HashMap<(Partition, usize), Int>,
) -> Int {
    if next == rho.len() {
        debug_assert!(lambda.is_empty());
        return Int::one();
    }
    if let Some(v) = memo.get(&(lambda.clone(), next)) {
        return v.clone();
    }
    let r = rho[next] as i64;
    let l = lambda.len();
    let beta: Vec<i64> = (0..l).map(|i| lambda.part(i) as i64 + (l - 1 - i) as i64).collect();
    let mut total = Int::ZERO;
    for (pos, &b) in beta.iter().enumerate() {
        let target = b - r;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        // Beta-numbers strictly between target and b are exactly the rows the
        // strip passes through below its own; each contributes a sign flip.
        let between = beta.iter().filter(|&&x| target < x && x < b).count();
        let mut new_beta = beta.clone();
        new_beta[pos] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = new_beta
            .iter()
            .enumerate()
            .map(|(i, &bi)| (bi - (l - 1 - i) as i64) as u32)
            .collect();
        let sub = mn_rec(&Partition::new(parts), rho, next + 1, memo);
        if between % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert((lambda.clone(), next), total.clone());
    total
}

/// The complete character table of the symmetric group of degree `k`:
/// every value `χ^λ_ρ` for `λ, ρ ⊢ k`.
pub struct CharTable {
    k: u64,
    values: BTreeMap<(Partition, Partition), Int>,
}

impl CharTable {
    pub fn new(k: u64) -> Self {
        let shapes = crate::partitions::partitions_of(k);
        let mut values = BTreeMap::new();
        for rho in &shapes {
            // One memo per class: the recursion trees for different λ overlap
            // heavily once a strip has been removed.
            let mut memo = HashMap::new();
            for lambda in &shapes {
                let v = mn_rec(lambda, rho.parts(), 0, &mut memo);
                values.insert((lambda.clone(), rho.clone()), v);
            }
        }
        Self { k, values }
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn value(&self, lambda: &Partition, rho: &Partition) -> &Int {
        self.values
            .get(&(lambda.clone(), rho.clone()))
            .unwrap_or_else(|| panic!("no character value for λ={lambda:?}, ρ={rho:?}"))
    }

    pub fn values(&self) -> &BTreeMap<(Partition, Partition), Int> {
        &self.values
    }
}

/// `χ^λ` on the class whose non-trivial cycles form `rho`, padded with fixed
/// points to degree `|λ|`, computed from shifted Schur values:
/// `(dim λ / (l↓k)) · Σ_{μ⊢k} χ^μ_ρ · s*_μ(λ)`.
///
/// The evaluator for `s*_μ(λ)` is passed in as `sstar`.  The result is
/// provably an integer; a non-integer value means an upstream bug, so it
/// panics rather than returning.
pub fn char_small_cycles<F>(
    lambda: &Partition,
    rho: &Partition,
    sstar: F,
) -> Result<Rat, CharError>
where
    F: Fn(&Partition, &Partition) -> Rat,
{
    let l = lambda.size();
    let k = rho.size();
    if k > l {
        return Err(CharError::ClassTooLarge { k, l });
    }
    let mut sum = Rat::from_integer(Int::ZERO);
    for mu in crate::partitions::partitions_of(k) {
        let chi = mn_character(&mu, rho).expect("sizes agree by construction");
        sum += Rat::from_integer(chi) * sstar(&mu, lambda);
    }
    let value = Rat::from_integer(dim_sym(lambda)) * sum / falling(&rat_int(l as i64), k);
    assert!(
        value.is_integer(),
        "character value must be an integer, got {value} for λ={lambda}, ρ={rho}"
    );
    Ok(value)
}

/// Eigenvalue of the Gibbsian class operator for cycle type `rho` on the
/// irreducible module `λ`: `f_ρ(λ) = (l↓k)/dim λ · χ^λ on ρ∪(1^{l−k})`.
pub fn gibbs_eigenvalue(lambda: &Partition, rho: &Partition) -> Result<Rat, CharError> {
    let l = lambda.size();
    let k = rho.size();
    if k > l {
        return Err(CharError::ClassTooLarge { k, l });
    }
    let mut padded: Vec<u32> = rho.parts().to_vec();
    padded.extend(std::iter::repeat(1).take((l - k) as usize));
    let chi = mn_character(lambda, &Partition::new(padded)).expect("padded class has size l");
    Ok(falling(&rat_int(l as i64), k) * Rat::from_integer(chi)
        / Rat::from_integer(dim_sym(lambda)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn z_factor_examples() {
        assert_eq!(z_factor(&p(&[1, 1])), Int::from(2));
        assert_eq!(z_factor(&p(&[2])), Int::from(2));
        assert_eq!(z_factor(&p(&[2, 1])), Int::from(2));
        assert_eq!(z_factor(&Partition::empty()), Int::one());
        // Class sizes k!/z_ρ partition the whole group.
        for k in 1..=6u64 {
            let total: Int = partitions_of(k).iter().map(|rho| factorial(k) / z_factor(rho)).sum();
            assert_eq!(total, factorial(k));
        }
    }

    #[test]
    fn mn_examples() {
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), Int::from(2));
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), Int::from(-1));
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), Int::ZERO);
        for k in 1..=5u64 {
            for rho in partitions_of(k) {
                // Trivial representation: all ones.
                assert_eq!(mn_character(&p(&[k as u32]), &rho).unwrap(), Int::one());
                // Sign representation: parity of the permutation.
                let sign = if (k as usize - rho.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(
                    mn_character(&Partition::new(vec![1; k as usize]), &rho).unwrap(),
                    Int::from(sign)
                );
            }
        }
        assert_eq!(
            mn_character(&p(&[2]), &p(&[3])).unwrap_err(),
            CharError::SizeMismatch { lambda: 2, rho: 3 }
        );
    }

    #[test]
    fn identity_class_gives_dimension() {
        for k in 0..=6u64 {
            let ones = Partition::new(vec![1; k as usize]);
            for lambda in partitions_of(k) {
                assert_eq!(mn_character(&lambda, &ones).unwrap(), dim_sym(&lambda));
            }
        }
    }

    #[test]
    fn table_column_orthogonality() {
        for k in 1..=5u64 {
            let table = CharTable::new(k);
            let shapes = partitions_of(k);
            for rho in &shapes {
                for sigma in &shapes {
                    let dot: Int = shapes
                        .iter()
                        .map(|l| table.value(l, rho) * table.value(l, sigma))
                        .sum();
                    let expected = if rho == sigma { z_factor(rho) } else { Int::ZERO };
                    assert_eq!(dot, expected, "columns {rho} and {sigma} of degree {k}");
                }
            }
        }
    }

    #[test]
    fn permutation_utilities() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms[0], vec![0, 1, 2]);
        assert_eq!(perms[5], vec![2, 1, 0]);
        assert_eq!(cycle_type(&[0, 1, 2]), p(&[1, 1, 1]));
        assert_eq!(cycle_type(&[1, 2, 0]), p(&[3]));
        assert_eq!(perm_sign(&[0, 1, 2]), 1);
        assert_eq!(perm_sign(&[1, 0, 2]), -1);
        assert_eq!(perm_sign(&[1, 2, 0]), 1);
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
        // Character of a permutation's class sums to the regular character:
        // Σ_λ dim λ · χ^λ(s) = 0 for s ≠ e.
        for s in &perms {
            let rho = cycle_type(s);
            let total: Int = partitions_of(3)
                .iter()
                .map(|l| dim_sym(l) * mn_character(l, &rho).unwrap())
                .sum();
            let expected = if rho == p(&[1, 1, 1]) { factorial(3) } else { Int::ZERO };
            assert_eq!(total, expected);
        }
    }

    #[test]
    fn small_cycle_formula_examples() {
        let sstar = |mu: &Partition, lam: &Partition| crate::shifted_eval::sstar_at_partition(mu, lam);
        assert_eq!(char_small_cycles(&p(&[2, 1]), &p(&[2]), sstar).unwrap(), rat_int(0));
        assert_eq!(char_small_cycles(&p(&[3]), &p(&[2]), sstar).unwrap(), rat_int(1));
        for lambda in partitions_of(4) {
            assert_eq!(
                char_small_cycles(&lambda, &Partition::empty(), sstar).unwrap(),
                Rat::from_integer(dim_sym(&lambda))
            );
        }
        assert_eq!(
            char_small_cycles(&p(&[1]), &p(&[2]), sstar).unwrap_err(),
            CharError::ClassTooLarge { k: 2, l: 1 }
        );
    }

    #[test]
    fn small_cycle_formula_matches_mn() {
        let sstar = |mu: &Partition, lam: &Partition| crate::shifted_eval::sstar_at_partition(mu, lam);
        for l in 1..=5u64 {
            for lambda in partitions_of(l) {
                for k in 0..=l.min(3) {
                    for rho in partitions_of(k) {
                        let mut padded: Vec<u32> = rho.parts().to_vec();
                        padded.extend(std::iter::repeat(1).take((l - k) as usize));
                        let direct = mn_character(&lambda, &Partition::new(padded)).unwrap();
                        let via_sstar = char_small_cycles(&lambda, &rho, sstar).unwrap();
                        assert_eq!(via_sstar, Rat::from_integer(direct), "λ={lambda}, ρ={rho}");
                    }
                }
            }
        }
    }

    #[test]
    fn gibbs_examples() {
        assert_eq!(gibbs_eigenvalue(&p(&[2, 1]), &p(&[1])).unwrap(), rat_int(3));
        assert_eq!(gibbs_eigenvalue(&p(&[3]), &p(&[2])).unwrap(), rat_int(6));
        assert_eq!(gibbs_eigenvalue(&p(&[2, 1]), &p(&[2])).unwrap(), rat_int(0));
        assert_eq!(
            gibbs_eigenvalue(&p(&[1]), &p(&[1, 1])).unwrap_err(),
            CharError::ClassTooLarge { k: 2, l: 1 }
        );
    }
}
