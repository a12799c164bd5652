//! Formula routes to the poly-Bernoulli array `B(n,k)` and its relatives
//! `C(n,k)` (lonesum counts without all-zero columns) and `D(n,k)` (without
//! all-zero columns or rows).
//!
//! Every sequence is computable by several independent routes - closed
//! Stirling-number formula, alternating sieve, recursion, and EGF
//! coefficient extraction - and all routes must agree exactly.  The
//! enumeration, permanent and chromatic routes live in their own modules.
//!
//! Index conventions: the tables are extended to `n = 0` / `k = 0` by the
//! matrix-counting semantics (an empty matrix counts 1 when no restriction
//! is violated and 0 when a per-row/per-column restriction cannot be met):
//! `B(n,0) = B(0,k) = 1`; `C(n,0) = 1`, `C(0,0) = 1`, `C(0,k) = 0` for
//! `k >= 1`; `D(0,0) = 1`, `D(n,0) = D(0,k) = 0` for `n,k >= 1`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{binomial, factorial, stirling2, BivariateSeries, Int, Rat};

/// Which of the three arrays an operation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceId {
    B,
    C,
    D,
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceId::B => write!(f, "B"),
            SequenceId::C => write!(f, "C"),
            SequenceId::D => write!(f, "D"),
        }
    }
}

impl FromStr for SequenceId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "B" | "b" => Ok(SequenceId::B),
            "C" | "c" => Ok(SequenceId::C),
            "D" | "d" => Ok(SequenceId::D),
            other => Err(format!(
                "unknown sequence id {other:?} (expected B, C or D)"
            )),
        }
    }
}

/// Computation route selector.
///
/// `Closed`, `Sieve`, `Recursion` and `Egf` are implemented here; the
/// `Permanent`, `Chromatic` and `Enumeration` routes are provided by the
/// `perms`, `chromatic` and `matrices` modules and are rejected by the
/// formula entry points below.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Closed,
    Sieve,
    Recursion,
    Egf,
    Permanent,
    Chromatic,
    Enumeration,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Method::Closed => "closed",
            Method::Sieve => "sieve",
            Method::Recursion => "recursion",
            Method::Egf => "egf",
            Method::Permanent => "permanent",
            Method::Chromatic => "chromatic",
            Method::Enumeration => "enumeration",
        };
        write!(f, "{name}")
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SequenceError {
    #[error("method `{method}` is not supported for {seq}(n,k) here: {reason}")]
    UnsupportedMethod {
        seq: SequenceId,
        method: Method,
        reason: &'static str,
    },
}

fn unsupported(seq: SequenceId, method: Method) -> SequenceError {
    let reason = match method {
        Method::Permanent => "use perms::permanent_ryser on the band matrix",
        Method::Chromatic => "use chromatic::{b,c,d}_via_chromatic",
        Method::Enumeration => "use matrices::count_avoiding or the perms oracles",
        _ => "unreachable",
    };
    SequenceError::UnsupportedMethod {
        seq,
        method,
        reason,
    }
}

fn ipow(base: Int, exp: usize) -> Int {
    let mut acc = Int::one();
    for _ in 0..exp {
        acc *= &base;
    }
    acc
}

/// `B(n,k)` by the requested formula route (`Closed`, `Sieve`, `Recursion`
/// or `Egf`); all routes return identical values.
pub fn poly_bernoulli(n: usize, k: usize, method: Method) -> Result<Int, SequenceError> {
    match method {
        Method::Closed => Ok(b_closed(n, k)),
        Method::Sieve => Ok(b_sieve(n, k)),
        Method::Recursion => Ok(recursion_table(SequenceId::B, n, k)[n][k].clone()),
        Method::Egf => Ok(egf_value(SequenceId::B, n, k)),
        other => Err(unsupported(SequenceId::B, other)),
    }
}

/// `C(n,k)` by the requested formula route.
pub fn c_relative(n: usize, k: usize, method: Method) -> Result<Int, SequenceError> {
    match method {
        Method::Closed => Ok(c_closed(n, k)),
        Method::Sieve => Ok(c_sieve(n, k)),
        Method::Recursion => Ok(recursion_table(SequenceId::C, n, k)[n][k].clone()),
        Method::Egf => Ok(egf_value(SequenceId::C, n, k)),
        other => Err(unsupported(SequenceId::C, other)),
    }
}

/// `D(n,k)` by the requested formula route.
pub fn d_relative(n: usize, k: usize, method: Method) -> Result<Int, SequenceError> {
    match method {
        Method::Closed => Ok(d_closed(n, k)),
        Method::Sieve => Ok(d_sieve(n, k)),
        Method::Recursion => Ok(recursion_table(SequenceId::D, n, k)[n][k].clone()),
        Method::Egf => Ok(egf_value(SequenceId::D, n, k)),
        other => Err(unsupported(SequenceId::D, other)),
    }
}

/// Reference value by the closed formula; the default route everywhere else
/// in the crate.
pub fn value(seq: SequenceId, n: usize, k: usize) -> Int {
    match seq {
        SequenceId::B => b_closed(n, k),
        SequenceId::C => c_closed(n, k),
        SequenceId::D => d_closed(n, k),
    }
}

/// Boundary values dictated by the matrix-counting semantics, for cells
/// with `n = 0` or `k = 0`.  Returns `None` for interior cells.  Kept as an
/// explicit table so the closed formulas can be checked against it.
pub fn boundary_value(seq: SequenceId, n: usize, k: usize) -> Option<Int> {
    if n != 0 && k != 0 {
        return None;
    }
    let v = match seq {
        SequenceId::B => Int::one(),
        SequenceId::C => {
            // no all-zero column allowed: impossible as soon as k >= 1, n = 0
            if n == 0 && k >= 1 {
                Int::zero()
            } else {
                Int::one()
            }
        }
        SequenceId::D => {
            if n == 0 && k == 0 {
                Int::one()
            } else {
                Int::zero()
            }
        }
    };
    Some(v)
}

/// `B(n,k) = sum_m m! S(n+1,m+1) m! S(k+1,m+1)`.
fn b_closed(n: usize, k: usize) -> Int {
    let mut acc = Int::zero();
    for m in 0..=n.min(k) {
        let f = factorial(m);
        acc += &f * stirling2(n + 1, m + 1) * &f * stirling2(k + 1, m + 1);
    }
    acc
}

/// Inclusion-exclusion route,
/// `B(n,k) = (-1)^n sum_{m=0}^{n} (-1)^m m! S(n,m) (m+1)^k`,
/// evaluated with the leading sign factored out exactly as written: this
/// sum doubles as the oracle for the triangle transforms.
fn b_sieve(n: usize, k: usize) -> Int {
    let mut acc = Int::zero();
    for m in 0..=n {
        let term = factorial(m) * stirling2(n, m) * ipow(Int::from(m + 1), k);
        if m % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    if n % 2 == 0 {
        acc
    } else {
        -acc
    }
}

/// `C(n,k) = sum_m (m!)^2 S(n+1,m+1) S(k,m)`.
fn c_closed(n: usize, k: usize) -> Int {
    let mut acc = Int::zero();
    for m in 0..=n.min(k) {
        let f = factorial(m);
        acc += &f * &f * stirling2(n + 1, m + 1) * stirling2(k, m);
    }
    acc
}

/// Alternating sieve for `C`.
///
/// The axis carrying the no-zero-column restriction is the one summed over:
/// `C(n,k) = sum_{m=0}^{k} (-1)^{k+m} m! (m+1)^n S(k+1,m+1)`.  (Writing the
/// same sum with the roles of `n` and `k` exchanged yields the mirror value
/// `C(k+1,n-1)` instead; the orientation here is pinned by the closed
/// formula and the enumeration oracles.)
fn c_sieve(n: usize, k: usize) -> Int {
    let mut acc = Int::zero();
    for m in 0..=k {
        let term = factorial(m) * ipow(Int::from(m + 1), n) * stirling2(k + 1, m + 1);
        if (k + m) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `D(n,k) = sum_m (m!)^2 S(n,m) S(k,m)`.
fn d_closed(n: usize, k: usize) -> Int {
    let mut acc = Int::zero();
    for m in 0..=n.min(k) {
        let f = factorial(m);
        acc += &f * &f * stirling2(n, m) * stirling2(k, m);
    }
    acc
}

/// Alternating sieve for `D`:
/// `D(n,k) = sum_{m=0}^{n} (-1)^{n+m} m! m^k S(n+1,m+1)` (with `0^0 = 1`).
fn d_sieve(n: usize, k: usize) -> Int {
    let mut acc = Int::zero();
    for m in 0..=n {
        let term = factorial(m) * ipow(Int::from(m), k) * stirling2(n + 1, m + 1);
        if (n + m) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Full recursion table for `seq` on `0..=n_max` x `0..=k_max`, built
/// bottom-up column by column from the boundary conventions:
///
/// * `B(n,k+1) = B(n,k) + sum_{m=1}^{n} C(n,m) B(n-m+1,k)`
/// * `C(n,k+1) = sum_{m=1}^{n} C(n,m) C(n-m+1,k)`
/// * `D(n,k+1) = sum_{m=1}^{n} C(n,m) (D(n-m,k) + D(n-m+1,k))`
pub fn recursion_table(seq: SequenceId, n_max: usize, k_max: usize) -> Vec<Vec<Int>> {
    let mut t = vec![vec![Int::zero(); k_max + 1]; n_max + 1];
    for (n, row) in t.iter_mut().enumerate() {
        row[0] = boundary_value(seq, n, 0).unwrap();
    }
    for k in 0..k_max {
        t[0][k + 1] = boundary_value(seq, 0, k + 1).unwrap();
        for n in 1..=n_max {
            let mut acc = match seq {
                SequenceId::B => t[n][k].clone(),
                _ => Int::zero(),
            };
            for m in 1..=n {
                let coef = binomial(n, m);
                let contrib = match seq {
                    SequenceId::B | SequenceId::C => coef * &t[n - m + 1][k],
                    SequenceId::D => coef * (&t[n - m][k] + &t[n - m + 1][k]),
                };
                acc += contrib;
            }
            t[n][k + 1] = acc;
        }
    }
    t
}

/// The banded-permutation count
/// `f(r,n,k) = sum_{m=0}^{n} (-1)^{n+m} (m+r)! (m+r)^k S(n+1,m+1)`,
/// evaluated exactly as the alternating sum is written.
///
/// As an enumeration this counts the permutations of `[n+k+r]` whose
/// displacements satisfy `-(k+r) < pi(i)-i < n+r` (the `perms` oracle pins
/// this down); in particular `f(0,n,k) = D(n,k)`, `f(1,n,k) = C(n+1,k)` and
/// `f(2,n,k) = B(n+1,k+1)`.
pub fn vesztergombi_f(r: usize, n: usize, k: usize) -> Int {
    let mut acc = Int::zero();
    for m in 0..=n {
        let term = factorial(m + r) * ipow(Int::from(m + r), k) * stirling2(n + 1, m + 1);
        if (n + m) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// A rectangular grid of exact rationals indexed by `(n,k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTable {
    entries: Vec<Vec<Rat>>,
}

impl SeriesTable {
    pub fn n_max(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn k_max(&self) -> usize {
        self.entries[0].len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> &Rat {
        &self.entries[n][k]
    }

    /// Entry as an integer; panics if the stored rational is not integral.
    pub fn to_integer(&self, n: usize, k: usize) -> Int {
        let v = &self.entries[n][k];
        assert!(
            v.is_integer(),
            "table entry ({n},{k}) = {v} is not an integer"
        );
        v.to_integer()
    }
}

/// EGF coefficient grid for the chosen sequence: entry `(n,k)` is
/// `n! k! [x^n y^k] g(x,y)` where `g` is
/// `e^{x+y} / (e^x + e^y - e^{x+y})` for `B`,
/// `e^x / (e^x + e^y - e^{x+y})` for `C`, and
/// `1 / (e^x + e^y - e^{x+y})` for `D`.
pub fn egf_table(seq: SequenceId, n_max: usize, k_max: usize) -> SeriesTable {
    let denom = BivariateSeries::exp_x(n_max, k_max) + BivariateSeries::exp_y(n_max, k_max)
        - BivariateSeries::exp_x_plus_y(n_max, k_max);
    let recip = denom
        .reciprocal()
        .expect("e^x + e^y - e^{x+y} has constant term 1");
    let g = match seq {
        SequenceId::B => &BivariateSeries::exp_x_plus_y(n_max, k_max) * &recip,
        SequenceId::C => &BivariateSeries::exp_x(n_max, k_max) * &recip,
        SequenceId::D => recip,
    };
    let entries = (0..=n_max)
        .map(|n| (0..=k_max).map(|k| g.egf_entry(n, k)).collect())
        .collect();
    SeriesTable { entries }
}

/// Single EGF-route value.  Builds a table of just the required size; grid
/// consumers should call [`egf_table`] once instead.
pub fn egf_value(seq: SequenceId, n: usize, k: usize) -> Int {
    egf_table(seq, n, k).to_integer(n, k)
}

/// Two sides of one binomial-transform relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub lhs: Int,
    pub rhs: Int,
}

impl RelationCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Outcome of [`binomial_transform_check`]; `None` marks a relation whose
/// stated index range excludes the requested cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformCheck {
    pub n: usize,
    pub k: usize,
    /// `B(n,k) = sum_{i=0}^{k} C(k,i) C(n,i)`, for `n >= 1`.
    pub b_from_c: Option<RelationCheck>,
    /// `C(n,k) = sum_{i=1}^{n} C(n,i) D(i,k)`, for `n, k >= 1`.
    pub c_from_d: Option<RelationCheck>,
    /// `B(n,k) = 1 + sum_{i>=1} sum_{j>=1} C(n,i) C(k,j) D(i,j)`, for `n, k >= 1`.
    pub b_from_d: Option<RelationCheck>,
}

impl TransformCheck {
    pub fn all_hold(&self) -> bool {
        [&self.b_from_c, &self.c_from_d, &self.b_from_d]
            .into_iter()
            .flatten()
            .all(RelationCheck::holds)
    }
}

/// Verifies the three binomial-transform relations linking `B`, `C` and `D`
/// at `(n,k)`.  A failed relation is reported, never panicked on.
pub fn binomial_transform_check(n: usize, k: usize) -> TransformCheck {
    let b_from_c = (n >= 1).then(|| {
        let rhs = (0..=k).map(|i| binomial(k, i) * c_closed(n, i)).sum();
        RelationCheck {
            lhs: b_closed(n, k),
            rhs,
        }
    });
    let c_from_d = (n >= 1 && k >= 1).then(|| {
        let rhs = (1..=n).map(|i| binomial(n, i) * d_closed(i, k)).sum();
        RelationCheck {
            lhs: c_closed(n, k),
            rhs,
        }
    });
    let b_from_d = (n >= 1 && k >= 1).then(|| {
        let mut rhs = Int::one();
        for i in 1..=n {
            for j in 1..=k {
                rhs += binomial(n, i) * binomial(k, j) * d_closed(i, j);
            }
        }
        RelationCheck {
            lhs: b_closed(n, k),
            rhs,
        }
    });
    TransformCheck {
        n,
        k,
        b_from_c,
        c_from_d,
        b_from_d,
    }
}
