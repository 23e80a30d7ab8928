//! Exact finite-`n` distributions and asymptotics of extreme values of
//! one-dimensional simple random walks.
//!
//! The library covers the running maximum and minimum of a plain walk
//! (jointly and marginally), the maximum of walks reflected at the origin in
//! the strong sense (`S_j = |S_{j-1} + X_j|`) and the weak sense
//! (`S_j = max{S_{j-1} + X_j, 0}`), cycle maxima of biased walks, and the
//! limiting constants governing all of these regimes.
//!
//! Everything exact is computed with arbitrary-precision rationals, and every
//! distribution is available by at least two independent routes (Markov
//! matrices, dynamic-programming recurrences, generating-function coefficient
//! extraction, band-confinement DP) that the test suite checks against each
//! other and against exhaustive enumeration.
//!
//! Entry points by topic:
//! - [`extrema_joint`]: joint and marginal laws of `(M_n^+, M_n^-)`.
//! - [`reflect_strong`], [`reflect_weak`]: reflected-maximum pmfs.
//! - [`cycles`]: cycle maxima and the trie-style logarithmic asymptotic.
//! - [`asymptotics`]: closed-form predictors and limit probes.
//! - [`montecarlo`]: reproducible seeded simulation of every walk variant.
//! - [`oracle`]: exhaustive enumeration, the reference for all tests.

pub mod asymptotics;
pub mod cli;
pub mod cycles;
pub mod exactnum;
pub mod extrema_joint;
pub mod montecarlo;
pub mod oracle;
pub mod reflect_strong;
pub mod reflect_weak;
pub mod walkcore;

mod reflect_common;

pub use exactnum::{PowerSeries, Rat};
pub use walkcore::{JointPmf, Mode, Moments, Pmf, WalkParams};
