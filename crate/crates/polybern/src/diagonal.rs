//! Diagonal sums of the arrays and the Stephan conjecture checker.
//!
//! The diagonal sums of `B` are OEIS A098830 (1, 2, 4, 10, 32, 126, 588,
//! 3170, ...) and those of `C` are A136127 (1, 2, 5, 16, 63, 294, 1585,
//! ...); from `B(n,k) = C(n,k) + C(k,n)` the former is exactly twice the
//! latter for `N >= 1`.  Stephan observed that the `B` diagonal sums appear
//! to equal `3 P_N`, the rational part of the central binomial sum
//! `CB(N) = sum n^N / C(2n,n) = P_N + Q_N pi/sqrt(3)`; the checker
//! evaluates the explicit rational expression for `3 P_N` exactly and
//! reports, never asserts - it is a conjecture.  (`N = 0` is included in
//! the reports but lies outside the quoted numerical evidence.)

use num_traits::Zero;

use crate::exact::{binomial, factorial, stirling2, Int, Rat};
use crate::sequences::{value, SequenceId};

/// One row of conjecture evidence: the exact diagonal sum, the exact
/// `3 P_N`, and whether they coincide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalReport {
    pub n: usize,
    pub diag_sum: Int,
    pub three_p_n: Rat,
    pub equal: bool,
}

/// Sum of the chosen array along the antidiagonal `n + k = N`.
///
/// For `B` the sum runs over the full quadrant `n, k >= 0`; for `C` it runs
/// over `n >= 1, k >= 0` and for `D` over `n, k >= 1`, matching each
/// table's natural domain.
pub fn diagonal_sum(seq: SequenceId, n_total: usize) -> Int {
    let start = match seq {
        SequenceId::B => 0usize,
        SequenceId::C | SequenceId::D => 1,
    };
    let end = match seq {
        SequenceId::B | SequenceId::C => n_total,
        SequenceId::D => n_total.saturating_sub(1),
    };
    let mut acc = Int::zero();
    for n in start..=end.min(n_total) {
        acc += value(seq, n, n_total - n);
    }
    acc
}

/// The exact rational `3 P_N` from the central binomial sum:
///
/// `(-1)^(N+1) * 1/2 * sum_{j=1}^{N+1} (-1)^j j! S(N+1,j)
///  * C(2j,j)/3^(j-1) * sum_{i=0}^{j-1} 3^i / ((2i+1) C(2i,i))`.
pub fn three_p_n(n_total: usize) -> Rat {
    let mut outer = Rat::zero();
    let mut inner = Rat::zero();
    // 3^(j-1), which is also 3^i for the inner term gained at step j
    let mut pow3 = Int::from(1);
    for j in 1..=n_total + 1 {
        let i = j - 1;
        inner += Rat::new(
            pow3.clone(),
            Int::from(2 * i as i64 + 1) * binomial(2 * i, i),
        );
        let coef = Rat::new(
            factorial(j) * stirling2(n_total + 1, j) * binomial(2 * j, j),
            pow3.clone(),
        );
        let term = coef * &inner;
        if j % 2 == 0 {
            outer += term;
        } else {
            outer -= term;
        }
        pow3 *= Int::from(3);
    }
    let half = Rat::new(Int::from(1), Int::from(2));
    if n_total % 2 == 0 {
        -(half * outer)
    } else {
        half * outer
    }
}

/// Evidence rows for `N = 0..=n_max`.  Equality is reported, not asserted.
pub fn check_stephan(n_max: usize) -> Vec<DiagonalReport> {
    (0..=n_max)
        .map(|n| {
            let diag_sum = diagonal_sum(SequenceId::B, n);
            let rhs = three_p_n(n);
            let equal = rhs.is_integer() && rhs.to_integer() == diag_sum;
            DiagonalReport {
                n,
                diag_sum,
                three_p_n: rhs,
                equal,
            }
        })
        .collect()
}
