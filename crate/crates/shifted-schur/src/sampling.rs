//! Seeded random rational points for property tests and verification
//! suites.  Everything is deterministic given the seed, so failures
//! reproduce exactly.

use crate::exact_arith::{rat, rat_int, Rat};
use crate::shifted_eval::EvalPoint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The seed used throughout when none is given.
pub const DEFAULT_SEED: u64 = 42;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational with numerator in `[−100, 100]` and denominator in `[1, 100]`.
pub fn rational(rng: &mut impl Rng) -> Rat {
    let numer = rng.random_range(-100..=100i64);
    let denom = rng.random_range(1..=100i64);
    rat(numer, denom)
}

/// A random point with `n` coordinates.
pub fn point(rng: &mut impl Rng, n: usize) -> EvalPoint {
    EvalPoint::new((0..n).map(|_| rational(rng)).collect())
}

/// A uniform generator index pair `(i, j)` with `1 ≤ i, j ≤ n`.
pub fn index_pair(rng: &mut impl Rng, n: u16) -> (u16, u16) {
    (rng.random_range(1..=n), rng.random_range(1..=n))
}

/// A random point whose shifted coordinates `xᵢ + n − i` are pairwise
/// distinct, resampling until that holds (almost always on the first try).
pub fn point_distinct_shifted(rng: &mut impl Rng, n: usize) -> EvalPoint {
    loop {
        let x = point(rng, n);
        let shifted: Vec<Rat> =
            (0..n).map(|i| x.coord(i) + rat_int((n - 1 - i) as i64)).collect();
        let distinct =
            (0..n).all(|i| ((i + 1)..n).all(|j| shifted[i] != shifted[j]));
        if distinct {
            return x;
        }
    }
}
