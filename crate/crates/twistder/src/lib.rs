//! Exact arithmetic for twisted derivations of cyclic group rings.
//!
//! Everything happens in `R[C_n]`, the group ring of the cyclic group of
//! order n over `R = Z` or `R = Z/qZ`, with a pair of ring endomorphisms
//! (sigma, tau) induced by group endomorphisms x -> x^u and x -> x^w. The
//! crate constructs candidate (sigma, tau)-derivations from their generator
//! image D(x), decides whether they satisfy the twisted Leibniz rule,
//! decides whether they are inner, produces and parameterizes inner
//! witnesses, and classifies whole (ring, order, pair) instances by counting
//! derivations against inner derivations.
//!
//! All arithmetic is exact: modular coefficients stay canonical, and
//! characteristic-zero coefficients are checked 64-bit integers that report
//! overflow instead of wrapping.
//!
//! Modules, bottom-up:
//!
//! - [`ring`]: scalars of `Z` and `Z/qZ`, units, gcd with gcd(0, n) = n.
//! - [`group_ring`]: dense elements of `R[C_n]`, cyclic convolution,
//!   endomorphism action, trivial units.
//! - [`derivation`]: generator-image candidates, extension to all basis
//!   powers, and the three equivalent derivation criteria.
//! - [`inner`]: class-sum innerness test, telescoping witness solver,
//!   witness verification, and the circulant matrix view with exact
//!   determinant and rank diagnostics.
//! - [`classify`]: the inner-versus-outer dichotomy, exhaustive counting,
//!   and the standard outer example.

pub mod classify;
pub mod derivation;
pub mod error;
pub mod group_ring;
pub mod inner;
pub mod ring;

pub use classify::{
    canonical_outer_example, special_case_checks, dichotomy, enumerate, ClassificationReport,
    SpecialCaseChecks, DerivationCounts, Verdict, VerdictBasis,
};
pub use derivation::DerivationCandidate;
pub use error::{Error, Result};
pub use group_ring::{EndoPair, GroupRingElement};
pub use inner::{
    build_matrix, is_inner, matrix_diagnostics, solve_witness, verify_witness, CirculantSystem,
    MatrixDiagnostics, WitnessSolution,
};
pub use ring::{gcd, RingSpec, Scalar};
