//! Exact computation and cross-validation of the poly-Bernoulli number
//! family.
//!
//! The array `B(n,k)` counts the n-by-k lonesum 0/1 matrices (matrices that
//! are uniquely reconstructible from their row and column sums).  Its two
//! relatives count lonesum matrices without all-zero columns (`C`) and
//! without all-zero columns or rows (`D`).  The same three arrays show up as
//! counts of forbidden-submatrix classes, banded permutations, excedance
//! classes, Callan permutations, acyclic orientations of complete bipartite
//! graphs, chromatic-polynomial coefficients and triangle transforms of
//! power sequences.  This crate implements every one of those routes in
//! exact integer/rational arithmetic so they can be checked against each
//! other, against brute-force enumeration, and against OEIS data
//! (A099594, A098830, A136127).
//!
//! Module map:
//!
//! * [`exact`] - big integers, exact rationals, Stirling/binomial tables,
//!   integer polynomials, truncated bivariate power series.
//! * [`sequences`] - closed/sieve/recursive/EGF formulas for `B`, `C`, `D`,
//!   the banded-permutation count `f(r,n,k)`, binomial-transform relations.
//! * [`matrices`] - 0/1 matrices, forbidden-submatrix search, lonesum
//!   detection and decomposition.
//! * [`perms`] - exhaustive permutation-class oracles (bands, excedance
//!   classes, Callan permutations) and Ryser permanents.
//! * [`bijections`] - constructive maps between the interpretations, each
//!   with its inverse.
//! * [`chromatic`] - chromatic polynomials of complete bipartite graphs and
//!   the identities recovering `B`, `C`, `D` from them.
//! * [`transforms`] - Akiyama-Tanigawa and Chen triangle algorithms.
//! * [`diagonal`] - diagonal sums and the Stephan conjecture checker.
//! * [`oeis`] - b-file parsing, fetching/caching, and comparison.
//!
//! The whole point is that independent routes agree exactly:
//!
//! ```
//! use polybern::exact::Int;
//! use polybern::matrices::{count_avoiding, PatternSet, Restriction};
//! use polybern::perms::{band_matrix, permanent_ryser, BandSpec};
//! use polybern::sequences::{value, SequenceId};
//!
//! let closed = value(SequenceId::B, 2, 2);
//! let lonesum = count_avoiding(2, 2, &PatternSet::lonesum(), Restriction::None).unwrap();
//! let permanent = permanent_ryser(&band_matrix(&BandSpec::v(2, 2))).unwrap();
//! assert_eq!(closed, Int::from(14));
//! assert_eq!(lonesum, closed);
//! assert_eq!(permanent, closed);
//! ```

pub mod bijections;
pub mod chromatic;
pub mod diagonal;
pub mod exact;
pub mod matrices;
pub mod oeis;
pub mod perms;
pub mod sequences;
pub mod transforms;
