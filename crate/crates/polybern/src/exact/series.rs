//! Truncated bivariate power series over exact rationals.
//!
//! A series stores the raw Taylor coefficients of `x^a y^b` for
//! `a <= order_x`, `b <= order_y`; nothing is pre-divided by factorials.
//! EGF readers multiply by `a! b!` at extraction time, which keeps the ring
//! operations generic.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use super::{factorial, Int, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series reciprocal requires a nonzero constant term")]
    ZeroConstantTerm,
}

/// Bivariate power series truncated at (inclusive) orders `(order_x, order_y)`.
///
/// Arithmetic is exact up to the truncation orders; combining series of
/// different orders truncates to the componentwise minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    order_x: usize,
    order_y: usize,
    coeffs: Vec<Vec<Rat>>,
}

impl BivariateSeries {
    pub fn new_zero(order_x: usize, order_y: usize) -> Self {
        BivariateSeries {
            order_x,
            order_y,
            coeffs: vec![vec![Rat::zero(); order_y + 1]; order_x + 1],
        }
    }

    pub fn constant(order_x: usize, order_y: usize, c: Rat) -> Self {
        let mut s = Self::new_zero(order_x, order_y);
        s.coeffs[0][0] = c;
        s
    }

    /// Series with coefficient `f(a, b)` for `x^a y^b`.
    pub fn from_fn(order_x: usize, order_y: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut s = Self::new_zero(order_x, order_y);
        for a in 0..=order_x {
            for b in 0..=order_y {
                s.coeffs[a][b] = f(a, b);
            }
        }
        s
    }

    /// `e^x` truncated to the given orders.
    pub fn exp_x(order_x: usize, order_y: usize) -> Self {
        Self::from_fn(order_x, order_y, |a, b| {
            if b == 0 {
                Rat::new(Int::one(), factorial(a))
            } else {
                Rat::zero()
            }
        })
    }

    /// `e^y` truncated to the given orders.
    pub fn exp_y(order_x: usize, order_y: usize) -> Self {
        Self::from_fn(order_x, order_y, |a, b| {
            if a == 0 {
                Rat::new(Int::one(), factorial(b))
            } else {
                Rat::zero()
            }
        })
    }

    /// `e^{x+y}` truncated to the given orders.
    pub fn exp_x_plus_y(order_x: usize, order_y: usize) -> Self {
        Self::from_fn(order_x, order_y, |a, b| {
            Rat::new(Int::one(), factorial(a) * factorial(b))
        })
    }

    pub fn order_x(&self) -> usize {
        self.order_x
    }

    pub fn order_y(&self) -> usize {
        self.order_y
    }

    /// Raw Taylor coefficient of `x^a y^b`.
    pub fn coeff(&self, a: usize, b: usize) -> &Rat {
        &self.coeffs[a][b]
    }

    pub fn set_coeff(&mut self, a: usize, b: usize, v: Rat) {
        self.coeffs[a][b] = v;
    }

    /// EGF entry: `a! b!` times the raw coefficient.
    pub fn egf_entry(&self, a: usize, b: usize) -> Rat {
        &self.coeffs[a][b] * Rat::from_integer(factorial(a) * factorial(b))
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(a, row)| {
            row.iter().enumerate().all(|(b, c)| {
                if a == 0 && b == 0 {
                    c.is_one()
                } else {
                    c.is_zero()
                }
            })
        })
    }

    /// Multiplicative inverse up to the truncation orders.
    ///
    /// Coefficients are solved gridwise from `self * t = 1`; defined only
    /// when the constant term is nonzero.
    pub fn reciprocal(&self) -> Result<BivariateSeries, SeriesError> {
        let c00 = &self.coeffs[0][0];
        if c00.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv00 = c00.recip();
        let mut t = BivariateSeries::new_zero(self.order_x, self.order_y);
        for a in 0..=self.order_x {
            for b in 0..=self.order_y {
                // coefficient of x^a y^b in self*t must be [a==0 && b==0]
                let mut acc = if a == 0 && b == 0 {
                    Rat::one()
                } else {
                    Rat::zero()
                };
                for c in 0..=a {
                    for d in 0..=b {
                        if c == a && d == b {
                            continue;
                        }
                        let s = &self.coeffs[a - c][b - d];
                        let tv = &t.coeffs[c][d];
                        if !s.is_zero() && !tv.is_zero() {
                            acc -= s * tv;
                        }
                    }
                }
                t.coeffs[a][b] = acc * &inv00;
            }
        }
        Ok(t)
    }

    /// Integer power by repeated multiplication.
    pub fn pow(&self, e: usize) -> BivariateSeries {
        let mut acc = BivariateSeries::constant(self.order_x, self.order_y, Rat::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for BivariateSeries {
    type Output = BivariateSeries;
    fn add(self, rhs: BivariateSeries) -> BivariateSeries {
        let ox = self.order_x.min(rhs.order_x);
        let oy = self.order_y.min(rhs.order_y);
        BivariateSeries::from_fn(ox, oy, |a, b| &self.coeffs[a][b] + &rhs.coeffs[a][b])
    }
}

impl Sub for BivariateSeries {
    type Output = BivariateSeries;
    fn sub(self, rhs: BivariateSeries) -> BivariateSeries {
        let ox = self.order_x.min(rhs.order_x);
        let oy = self.order_y.min(rhs.order_y);
        BivariateSeries::from_fn(ox, oy, |a, b| &self.coeffs[a][b] - &rhs.coeffs[a][b])
    }
}

impl Mul for &BivariateSeries {
    type Output = BivariateSeries;
    fn mul(self, rhs: &BivariateSeries) -> BivariateSeries {
        let ox = self.order_x.min(rhs.order_x);
        let oy = self.order_y.min(rhs.order_y);
        let mut out = BivariateSeries::new_zero(ox, oy);
        for a in 0..=ox {
            for b in 0..=oy {
                let ca = &self.coeffs[a][b];
                if ca.is_zero() {
                    continue;
                }
                for c in 0..=ox - a {
                    for d in 0..=oy - b {
                        let cb = &rhs.coeffs[c][d];
                        if !cb.is_zero() {
                            let prod = ca * cb;
                            out.coeffs[a + c][b + d] += prod;
                        }
                    }
                }
            }
        }
        out
    }
}
