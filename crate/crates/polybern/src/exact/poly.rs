//! Dense integer polynomials in one formal variable.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use super::Int;

/// Polynomial with [`Int`] coefficients, `coeffs[d]` = coefficient of the
/// degree-`d` monomial.  Invariant: no trailing zero coefficient; the zero
/// polynomial stores an empty vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<Int>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Int) -> Self {
        Self::from_coefficients(vec![c])
    }

    /// Builds a polynomial, trimming trailing zeros.
    pub fn from_coefficients(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of the degree-`d` term (0 beyond the degree).
    pub fn coefficient(&self, d: usize) -> Int {
        self.coeffs.get(d).cloned().unwrap_or_else(Int::zero)
    }

    pub fn coefficients(&self) -> &[Int] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formal derivative on the coefficient vector.
    pub fn derivative(&self) -> IntPolynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(d, c)| c * Int::from(d))
            .collect();
        IntPolynomial::from_coefficients(coeffs)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = vec![Int::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (d, c) in self.coeffs.iter().enumerate() {
            coeffs[d] += c;
        }
        for (d, c) in rhs.coeffs.iter().enumerate() {
            coeffs[d] += c;
        }
        IntPolynomial::from_coefficients(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = vec![Int::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (d, c) in self.coeffs.iter().enumerate() {
            coeffs[d] += c;
        }
        for (d, c) in rhs.coeffs.iter().enumerate() {
            coeffs[d] -= c;
        }
        IntPolynomial::from_coefficients(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![Int::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in rhs.coeffs.iter().enumerate() {
                coeffs[a + b] += ca * cb;
            }
        }
        IntPolynomial::from_coefficients(coeffs)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c < &Int::zero() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let one = mag == Int::from(1);
            match (d, one) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{d}")?,
                (_, false) => write!(f, "{mag}*q^{d}")?,
            }
        }
        Ok(())
    }
}

/// The falling factorial `(q)_l = q(q-1)...(q-l+1)` as a polynomial; the
/// empty product `(q)_0` is the constant 1.
pub fn falling_factorial_poly(l: usize) -> IntPolynomial {
    let mut acc = IntPolynomial::constant(Int::from(1));
    for i in 0..l {
        let factor = IntPolynomial::from_coefficients(vec![Int::from(-(i as i64)), Int::from(1)]);
        acc = &acc * &factor;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_reads_naturally() {
        assert_eq!(falling_factorial_poly(3).to_string(), "q^3 - 3*q^2 + 2*q");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::constant(Int::from(-4)).to_string(), "-4");
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = IntPolynomial::from_coefficients(vec![Int::from(1), Int::from(0), Int::from(0)]);
        assert_eq!(p.degree(), Some(0));
        let z = IntPolynomial::from_coefficients(vec![Int::from(0)]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn ring_ops() {
        let a = falling_factorial_poly(2); // q^2 - q
        let b = IntPolynomial::from_coefficients(vec![Int::from(0), Int::from(1)]); // q
        assert_eq!(
            &(&a + &b),
            &IntPolynomial::from_coefficients(vec![Int::from(0), Int::from(0), Int::from(1)])
        );
        assert_eq!((&a - &a).degree(), None);
        let prod = &a * &b; // q^3 - q^2
        assert_eq!(prod.coefficient(3), Int::from(1));
        assert_eq!(prod.coefficient(2), Int::from(-1));
    }
}
