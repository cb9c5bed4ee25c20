//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients, plus the two-part `z`-linear polynomials that carry the
//! right-statistic distributions.

use std::fmt;
use std::ops::{Add, AddAssign};

use num_bigint::BigInt;
use num_traits::Zero;

/// `coeffs[d]` is the coefficient of `x^d`. Trailing zeros are stripped on
/// construction, so the zero polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPoly::new(vec![c.into()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Monomial `c * x^degree`.
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        IntPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^degree`; zero outside the stored range.
    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Add `c * x^degree` in place.
    pub fn add_term(&mut self, c: BigInt, degree: usize) {
        if c.is_zero() {
            return;
        }
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, BigInt::zero());
        }
        self.coeffs[degree] += c;
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Coefficient list reversed over degrees `0..=window`; compares equal to
    /// `self` exactly when the polynomial is palindromic over that window.
    pub fn reversed_over(&self, window: usize) -> IntPoly {
        let coeffs = (0..=window).rev().map(|d| self.coeff(d)).collect();
        IntPoly::new(coeffs)
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        for (d, c) in rhs.coeffs.iter().enumerate() {
            self.add_term(c.clone(), d);
        }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// `z0(x) + z * z1(x)`: the `z`-degree never exceeds one because a
/// permutation's first entry either lies in the class or not.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    pub z0: IntPoly,
    pub z1: IntPoly,
}

impl BiPoly {
    pub fn new(z0: IntPoly, z1: IntPoly) -> Self {
        BiPoly { z0, z1 }
    }

    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        BiPoly {
            z0: IntPoly::constant(c),
            z1: IntPoly::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.z0.is_zero() && self.z1.is_zero()
    }

    /// Coefficient of `z^i x^degree` for `i` in `{0, 1}`.
    pub fn coeff(&self, z_degree: usize, x_degree: usize) -> BigInt {
        match z_degree {
            0 => self.z0.coeff(x_degree),
            1 => self.z1.coeff(x_degree),
            _ => BigInt::zero(),
        }
    }

    /// Specialize `z = 1`.
    pub fn at_z1(&self) -> IntPoly {
        &self.z0 + &self.z1
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.z0.coefficient_sum() + self.z1.coefficient_sum()
    }

    pub fn add_term(&mut self, c: BigInt, z_degree: usize, x_degree: usize) {
        match z_degree {
            0 => self.z0.add_term(c, x_degree),
            1 => self.z1.add_term(c, x_degree),
            _ => panic!("z-degree must be 0 or 1"),
        }
    }
}

impl AddAssign<&BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &BiPoly) {
        self.z0 += &rhs.z0;
        self.z1 += &rhs.z1;
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z0={} z1={}", self.z0, self.z1)
    }
}
