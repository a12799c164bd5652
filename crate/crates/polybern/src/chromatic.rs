//! Chromatic polynomials of complete bipartite graphs, in both classical
//! bases, with a brute-force coloring oracle and the three evaluations that
//! recover `B`, `C`, `D`:
//!
//! * `B(n,k) = (-1)^(n+k) chr_{K_{n,k}}(-1)` (Stanley's acyclic-orientation
//!   count);
//! * `C(n,k) = (-1)^(n+k) [q] chr_{K_{n,k+1}}(q)` (Greene-Zaslavsky, unique
//!   sink);
//! * `D(n,k) = (-1)^(n+k) (d/dq chr_{K_{n+1,k+1}})(1)` (Crapo's beta
//!   invariant).

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{falling_factorial_poly, stirling1_signed, stirling2, Int, IntPolynomial};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChromaticError {
    #[error("coloring space {q}^{vertices} exceeds the brute-force budget")]
    BudgetExceeded { q: usize, vertices: usize },
}

/// Chromatic polynomial of `K_{n,k}` in the monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticPoly {
    pub n: usize,
    pub k: usize,
    pub poly: IntPolynomial,
}

impl ChromaticPoly {
    /// Number of proper `q`-colorings.
    pub fn colorings(&self, q: usize) -> Int {
        self.poly.eval(&Int::from(q))
    }
}

/// `chr_{K_{n,k}}(q) = sum_{i<=n} sum_{j<=k} S(n,i) S(k,j) (q)_{i+j}`,
/// assembled from the falling-factorial basis.
pub fn chr_bipartite(n: usize, k: usize) -> ChromaticPoly {
    let falling: Vec<IntPolynomial> = (0..=n + k).map(falling_factorial_poly).collect();
    let mut poly = IntPolynomial::zero();
    for i in 0..=n {
        let si = stirling2(n, i);
        if si.is_zero() {
            continue;
        }
        for j in 0..=k {
            let sj = stirling2(k, j);
            if sj.is_zero() {
                continue;
            }
            let scaled = IntPolynomial::from_coefficients(
                falling[i + j]
                    .coefficients()
                    .iter()
                    .map(|c| c * &si * &sj)
                    .collect(),
            );
            poly = &poly + &scaled;
        }
    }
    ChromaticPoly { n, k, poly }
}

/// The same polynomial assembled coefficientwise in the monomial basis,
/// `[q^m] chr = sum_{i,j} s(i+j, m) S(n,i) S(k,j)` with signed first-kind
/// Stirling numbers.  Must agree with [`chr_bipartite`] identically.
pub fn chr_bipartite_monomial(n: usize, k: usize) -> ChromaticPoly {
    let mut coeffs = vec![Int::zero(); n + k + 1];
    for i in 0..=n {
        let si = stirling2(n, i);
        if si.is_zero() {
            continue;
        }
        for j in 0..=k {
            let sj = stirling2(k, j);
            if sj.is_zero() {
                continue;
            }
            let weight = &si * &sj;
            for (m, c) in coeffs.iter_mut().enumerate() {
                let s1 = stirling1_signed(i + j, m);
                if !s1.is_zero() {
                    *c += &weight * s1;
                }
            }
        }
    }
    ChromaticPoly {
        n,
        k,
        poly: IntPolynomial::from_coefficients(coeffs),
    }
}

/// Counts proper `q`-colorings of `K_{n,k}` by scanning all assignments.
/// The oracle for [`chr_bipartite`]; refuses more than `2^24` assignments.
pub fn count_colorings_bruteforce(n: usize, k: usize, q: usize) -> Result<Int, ChromaticError> {
    let vertices = n + k;
    if (q as f64).powi(vertices as i32) > (1u64 << 24) as f64 {
        return Err(ChromaticError::BudgetExceeded { q, vertices });
    }
    if q == 0 {
        return Ok(if vertices == 0 {
            Int::one()
        } else {
            Int::zero()
        });
    }
    let mut colors = vec![0usize; vertices];
    let mut count = Int::zero();
    loop {
        let proper = (0..n).all(|i| (0..k).all(|j| colors[i] != colors[n + j]));
        if proper {
            count += Int::one();
        }
        // odometer step
        let mut pos = 0;
        loop {
            if pos == vertices {
                return Ok(count);
            }
            colors[pos] += 1;
            if colors[pos] < q {
                break;
            }
            colors[pos] = 0;
            pos += 1;
        }
    }
}

fn sign(n: usize, k: usize) -> Int {
    if (n + k) % 2 == 0 {
        Int::one()
    } else {
        -Int::one()
    }
}

/// `B(n,k)` as the signed chromatic evaluation at -1.
pub fn b_via_chromatic(n: usize, k: usize) -> Int {
    sign(n, k) * chr_bipartite(n, k).poly.eval(&(-Int::one()))
}

/// `C(n,k)` as the signed linear coefficient of `chr_{K_{n,k+1}}`.
pub fn c_via_chromatic(n: usize, k: usize) -> Int {
    sign(n, k) * chr_bipartite(n, k + 1).poly.coefficient(1)
}

/// `D(n,k)` as the signed derivative of `chr_{K_{n+1,k+1}}` at 1.
pub fn d_via_chromatic(n: usize, k: usize) -> Int {
    sign(n, k)
        * chr_bipartite(n + 1, k + 1)
            .poly
            .derivative()
            .eval(&Int::one())
}
