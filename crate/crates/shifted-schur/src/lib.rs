//! Exact arithmetic for shifted Schur functions and everything they touch:
//! partition combinatorics, reverse and semistandard tableaux, symmetric
//! group characters, the interpolation algebra spanned by the shifted Schur
//! basis, and polynomial differential operators realizing the higher Capelli
//! elements.
//!
//! All scalars are arbitrary-precision rationals and every identity the crate
//! exposes is checked exactly — there are no tolerances anywhere.
//!
//! The modules are layered bottom-up:
//!
//! * [`exact_arith`] — big rationals, factorial powers, truncated series in
//!   `u⁻¹`.
//! * [`partitions`] — partitions, signatures, hooks and contents, dimension
//!   formulas, and the exhaustive standard-tableau oracle.
//! * [`tableaux`] — lazy enumeration of reverse and semistandard tableaux.
//! * [`characters`] — symmetric group character values and eigenvalue
//!   formulas built on them.
//! * [`shifted_eval`] — point evaluation of shifted Schur polynomials by two
//!   independent engines, generator families, and generating series.
//! * [`lambda_star`] — the algebra of shifted symmetric functions in the
//!   shifted Schur basis: interpolation, multiplication, dualities, and
//!   determinantal expansions.
//! * [`capelli`] — normal-ordered differential operators on matrix entries:
//!   higher Capelli operators, their eigenvalues, and the special
//!   symmetrization map with its cluster-expansion inverse.
//! * [`sampling`] — seeded random rational data for randomized exact checks.

pub mod capelli;
pub mod characters;
pub mod exact_arith;
pub mod lambda_star;
pub mod partitions;
pub mod sampling;
pub mod shifted_eval;
pub mod tableaux;
