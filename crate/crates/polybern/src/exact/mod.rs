//! Exact arithmetic building blocks: arbitrary-precision integers and
//! rationals, combinatorial number tables, integer polynomials, and
//! truncated bivariate power series.
//!
//! All values everywhere in this crate are exact; floating point never
//! enters except in asymptotics checks that live in test code.

mod poly;
mod series;
mod stirling;

pub use poly::{falling_factorial_poly, IntPolynomial};
pub use series::{BivariateSeries, SeriesError};
pub use stirling::{binomial, factorial, stirling1_signed, stirling2, StirlingKind, StirlingTable};

/// Arbitrary-precision signed integer used for every sequence value.
pub type Int = num_bigint::BigInt;

/// Exact fraction of two [`Int`]s.  `num_rational` keeps these in lowest
/// terms with a positive denominator, which is exactly the invariant the
/// triangle transforms rely on.
pub type Rat = num_rational::BigRational;

/// Shorthand for an [`Int`] from a machine integer.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Shorthand for an exact fraction from machine integers.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Signed, Zero};
    use proptest::prelude::*;

    /// Brute-force oracle: number of partitions of an `n`-set into exactly
    /// `m` nonempty blocks, by direct recursive placement.
    fn count_set_partitions(n: usize, m: usize) -> u64 {
        fn rec(remaining: usize, blocks: usize, m: usize) -> u64 {
            if remaining == 0 {
                return if blocks == m { 1 } else { 0 };
            }
            // next element joins an existing block or opens a new one
            let mut total = blocks as u64 * rec(remaining - 1, blocks, m);
            if blocks < m {
                total += rec(remaining - 1, blocks + 1, m);
            }
            total
        }
        rec(n, 0, m)
    }

    /// Independent Bell numbers via the Bell triangle.
    fn bell_numbers(up_to: usize) -> Vec<Int> {
        let mut bells = vec![Int::one()];
        let mut row = vec![Int::one()];
        for _ in 1..=up_to {
            let mut next = vec![row.last().unwrap().clone()];
            for v in &row {
                let last = next.last().unwrap().clone();
                next.push(last + v);
            }
            bells.push(next[0].clone());
            row = next;
        }
        bells
    }

    #[test]
    fn stirling2_small_values() {
        assert_eq!(stirling2(0, 0), int(1));
        assert_eq!(stirling2(3, 2), int(count_set_partitions(3, 2) as i64));
        assert_eq!(stirling2(3, 2), int(3));
        assert_eq!(stirling2(4, 2), int(count_set_partitions(4, 2) as i64));
        assert_eq!(stirling2(4, 2), int(7));
        assert_eq!(stirling2(2, 5), int(0));
        assert_eq!(stirling2(5, 0), int(0));
    }

    #[test]
    fn stirling2_matches_partition_oracle() {
        for n in 0..=8 {
            for m in 0..=n {
                assert_eq!(
                    stirling2(n, m),
                    int(count_set_partitions(n, m) as i64),
                    "S({n},{m})"
                );
            }
        }
    }

    #[test]
    fn stirling2_row_sums_are_bell_numbers() {
        let bells = bell_numbers(15);
        for n in 0..=15 {
            let row_sum: Int = (0..=n).map(|m| stirling2(n, m)).sum();
            assert_eq!(row_sum, bells[n], "row {n}");
        }
    }

    #[test]
    fn stirling1_small_values() {
        assert_eq!(stirling1_signed(1, 1), int(1));
        assert_eq!(stirling1_signed(3, 1), int(2));
        assert_eq!(stirling1_signed(3, 2), int(-3));
        assert_eq!(stirling1_signed(0, 0), int(1));
        assert_eq!(stirling1_signed(2, 5), int(0));
    }

    #[test]
    fn stirling1_rows_expand_falling_factorials() {
        for n in 0..=15 {
            let poly = falling_factorial_poly(n);
            for m in 0..=n + 2 {
                assert_eq!(poly.coefficient(m), stirling1_signed(n, m), "s({n},{m})");
            }
        }
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 0), int(1));
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(3, 5), int(0));
        // Pascal row check against the factorial formula
        for n in 0..=12usize {
            for m in 0..=n {
                let by_factorials = factorial(n) / (factorial(m) * factorial(n - m));
                assert_eq!(binomial(n, m), by_factorials);
            }
        }
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial_poly(0), IntPolynomial::constant(int(1)));
        let q2 = falling_factorial_poly(2);
        assert_eq!(q2.coefficient(2), int(1));
        assert_eq!(q2.coefficient(1), int(-1));
        let q3 = falling_factorial_poly(3);
        assert_eq!(
            q3,
            IntPolynomial::from_coefficients(vec![int(0), int(2), int(-3), int(1)])
        );
    }

    #[test]
    fn polynomial_eval_and_derivative() {
        // (q)_3 = q^3 - 3q^2 + 2q, derivative 3q^2 - 6q + 2
        let p = falling_factorial_poly(3);
        assert_eq!(p.eval(&int(4)), int(4 * 3 * 2));
        let d = p.derivative();
        assert_eq!(d.eval(&int(1)), int(-1));
        assert_eq!(d.eval(&int(0)), int(2));
    }

    #[test]
    fn series_reciprocal_examples() {
        let two = BivariateSeries::constant(3, 3, rat(2, 1));
        let half = two.reciprocal().unwrap();
        assert_eq!(*half.coeff(0, 0), rat(1, 2));
        assert!(half.coeff(1, 0).is_zero());

        // 1/(1+x) = 1 - x + x^2 - ...
        let mut one_plus_x = BivariateSeries::constant(2, 0, rat(1, 1));
        one_plus_x.set_coeff(1, 0, rat(1, 1));
        let inv = one_plus_x.reciprocal().unwrap();
        assert_eq!(*inv.coeff(0, 0), rat(1, 1));
        assert_eq!(*inv.coeff(1, 0), rat(-1, 1));
        assert_eq!(*inv.coeff(2, 0), rat(1, 1));

        // e^x + e^y - e^{x+y} has constant term 1; its reciprocal must invert it
        let s = BivariateSeries::exp_x(4, 4) + BivariateSeries::exp_y(4, 4)
            - BivariateSeries::exp_x_plus_y(4, 4);
        let t = s.reciprocal().unwrap();
        assert!((&s * &t).is_one());
        assert!((&t * &s).is_one());
    }

    #[test]
    fn series_reciprocal_rejects_zero_constant_term() {
        let mut s = BivariateSeries::new_zero(2, 2);
        s.set_coeff(1, 1, rat(5, 1));
        assert!(matches!(s.reciprocal(), Err(SeriesError::ZeroConstantTerm)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn series_reciprocal_is_two_sided_inverse(
            coeffs in proptest::collection::vec((-20i64..=20, 1i64..=6), 16),
            c0num in proptest::sample::select(vec![-5i64, -3, -2, -1, 1, 2, 3, 7]),
        ) {
            let mut s = BivariateSeries::new_zero(3, 3);
            let mut it = coeffs.into_iter();
            for a in 0..=3 {
                for b in 0..=3 {
                    let (num, den) = it.next().unwrap();
                    s.set_coeff(a, b, rat(num, den));
                }
            }
            s.set_coeff(0, 0, rat(c0num, 1));
            let t = s.reciprocal().unwrap();
            prop_assert!((&s * &t).is_one());
            prop_assert!((&t * &s).is_one());
        }

        #[test]
        fn ratio_arithmetic_stays_normalized(a in -40i64..40, b in 1i64..20, c in -40i64..40, d in 1i64..20) {
            let x = rat(a, b) * rat(c, d) + rat(c, d);
            prop_assert!(x.denom().is_positive());
            prop_assert!(num_integer::Integer::gcd(x.numer(), x.denom()).is_one() || x.numer().is_zero());
        }
    }
}
