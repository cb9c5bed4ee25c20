//! Direct evaluation of the explicit coefficient formulas.
//!
//! Lengths are addressed as `kn + j` with `0 <= j <= k-1`. Several formulas
//! are stated in a shifted index (the coefficient of `x^(n-s)` or
//! `x^(n-1-s)`); each is exposed both in its native index and through
//! [`coefficient`], which takes a plain x-degree and does the index algebra,
//! returning zero outside the support `0..=n`.
//!
//! All intermediate arithmetic is exact and signed; the alternating sums
//! pass through negative partial values even though every final coefficient
//! is a nonnegative count.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Provenance tag for a value: which explicit formula produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaId {
    ABoundaryLow,
    ABoundaryHigh,
    AInclExcl,
    ADual,
    BBoundary,
    BTotalDual,
    BTotalInclExcl,
    B1Form,
    B0Form,
    Omega,
}

/// Which boundary value of the right-statistic distribution to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BBoundaryKind {
    /// Total constant term (both `z` parts).
    Total0,
    /// Constant term of the `z^0` part.
    Split00,
    /// Constant term of the `z^1` part.
    Split10,
    /// Total coefficient of `x^n`.
    TotalN,
    /// `z^0` coefficient of `x^n`.
    Split0N,
    /// `z^1` coefficient of `x^(n-1)`.
    B1NMinus1,
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `x(x-1)...(x-r+1)`; the empty product (r = 0) is 1.
pub fn falling_factorial(x: i64, r: usize) -> BigInt {
    (0..r).map(|i| BigInt::from(x - i as i64)).product()
}

/// Binomial coefficient with the convention `binom(a, b) = 0` for `b < 0`
/// or `b > a` (all formulas use `a >= 0`).
pub fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 || b > a {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..b {
        num *= a - i;
        den *= i + 1;
    }
    num / den
}

fn product(range: impl Iterator<Item = i64>) -> BigInt {
    range.map(BigInt::from).product()
}

fn sign(parity: i64) -> BigInt {
    if parity % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn km1 (k: usize) -> i64 {
    k as i64 - 1
}

/// Constant term of the left distribution at length `kn + j`:
/// `((k-1)n+j)! * prod_{i=0}^{n-1} (j + 1 + i(k-1))`.
pub fn coeff_a_boundary_low(k: usize, n: usize, j: usize) -> BigInt {
    assert!(k >= 2 && j < k);
    factorial((k - 1) * n + j)
        * product((0..n as i64).map(|i| j as i64 + 1 + i * km1(k)))
}

/// Top coefficient (of `x^n`) of the left distribution at length `kn + j`:
/// `((k-1)n+j)! * (k-1)^n * n!`.
pub fn coeff_a_boundary_high(k: usize, n: usize, j: usize) -> BigInt {
    assert!(k >= 2 && j < k);
    factorial((k - 1) * n + j) * BigInt::from(km1(k)).pow(n as u32) * factorial(n)
}

/// Coefficient of `x^s` of the left distribution at length `kn + j`, by the
/// alternating sum grown from the constant term.
pub fn coeff_a_incl_excl(k: usize, n: usize, j: usize, s: i64) -> BigInt {
    assert!(k >= 2 && j < k);
    if s < 0 || s > n as i64 {
        return BigInt::zero();
    }
    let (n_, j_) = (n as i64, j as i64);
    let mut sum = BigInt::zero();
    for r in 0..=s {
        sum += sign(s - r)
            * binom(km1(k) * n_ + j_ + r, r)
            * binom(k as i64 * n_ + j_ + 1, s - r)
            * product((0..n_).map(|i| r + 1 + j_ + km1(k) * i));
    }
    factorial((k - 1) * n + j) * sum
}

/// Coefficient of `x^(n-s)` of the left distribution at length `kn + j`, by
/// the alternating sum grown from the top coefficient.
pub fn coeff_a_dual(k: usize, n: usize, j: usize, s: i64) -> BigInt {
    assert!(k >= 2 && j < k);
    if s < 0 || s > n as i64 {
        return BigInt::zero();
    }
    let (n_, j_) = (n as i64, j as i64);
    let mut sum = BigInt::zero();
    for r in 0..=s {
        sum += sign(s - r)
            * binom(km1(k) * n_ + j_ + r, r)
            * binom(k as i64 * n_ + j_ + 1, s - r)
            * product((1..=n_).map(|i| r + km1(k) * i));
    }
    factorial((k - 1) * n + j) * sum
}

/// Sum form: classify by which class element leads.
pub fn omega_sum(k: usize, n: usize, r: i64) -> BigInt {
    let n_ = n as i64;
    let mut sum = BigInt::zero();
    for p in 0..n_ {
        sum += product((0..p).map(|i| r + km1(k) * i))
            * product((p + 1..n_).map(|i| 1 + r + km1(k) * i));
    }
    sum
}

/// Product-difference form of the same quantity.
pub fn omega_prod(k: usize, n: usize, r: i64) -> BigInt {
    let n_ = n as i64;
    product((0..n_).map(|i| 1 + r + km1(k) * i)) - product((0..n_).map(|i| r + km1(k) * i))
}

/// Boundary values of the right-statistic distribution at length `kn + j`.
pub fn coeff_b_boundary(k: usize, n: usize, j: usize, which: BBoundaryKind) -> BigInt {
    assert!(k >= 2 && j < k);
    let (n_, j_) = (n as i64, j as i64);
    let pre = factorial((k - 1) * n + j);
    match which {
        BBoundaryKind::Total0 => pre * product((1..=n_).map(|i| 1 + km1(k) * i)),
        BBoundaryKind::Split00 => pre * BigInt::from(km1(k)).pow(n as u32) * factorial(n),
        BBoundaryKind::Split10 => {
            coeff_b_boundary(k, n, j, BBoundaryKind::Total0)
                - coeff_b_boundary(k, n, j, BBoundaryKind::Split00)
        }
        // The top coefficient sits entirely in the z^0 part, and vanishes at
        // j = 0 (the maximum cannot be a descent's second element).
        BBoundaryKind::TotalN | BBoundaryKind::Split0N => {
            pre * product((0..n_).map(|i| j_ + km1(k) * i))
        }
        BBoundaryKind::B1NMinus1 => pre * omega_sum(k, n, j_),
    }
}

/// Total coefficient of `x^(n-s)` of the right distribution at length
/// `kn + j`, grown from the top coefficient.
pub fn coeff_b_total_dual(k: usize, n: usize, j: usize, s: i64) -> BigInt {
    assert!(k >= 2 && j < k);
    if s < 0 || s > n as i64 {
        return BigInt::zero();
    }
    let (n_, j_) = (n as i64, j as i64);
    let mut sum = BigInt::zero();
    for r in 0..=s {
        sum += sign(s - r)
            * binom(km1(k) * n_ + j_ + r, r)
            * binom(k as i64 * n_ + j_ + 1, s - r)
            * product((0..n_).map(|i| r + j_ + km1(k) * i));
    }
    factorial((k - 1) * n + j) * sum
}

/// Total coefficient of `x^s` of the right distribution at length `kn + j`,
/// grown from the constant term.
pub fn coeff_b_total_incl_excl(k: usize, n: usize, j: usize, s: i64) -> BigInt {
    assert!(k >= 2 && j < k);
    if s < 0 || s > n as i64 {
        return BigInt::zero();
    }
    let (n_, j_) = (n as i64, j as i64);
    let mut sum = BigInt::zero();
    for r in 0..=s {
        sum += sign(s - r)
            * binom(km1(k) * n_ + j_ + r, r)
            * binom(k as i64 * n_ + j_ + 1, s - r)
            * product((1..=n_).map(|i| 1 + r + km1(k) * i));
    }
    factorial((k - 1) * n + j) * sum
}

/// `z^1` coefficient of `x^(n-1-s)` at length `kn + j`.
pub fn coeff_b1(k: usize, n: usize, j: usize, s: i64) -> BigInt {
    assert!(k >= 2 && j < k);
    if s < 0 || n == 0 || s > n as i64 - 1 {
        return BigInt::zero();
    }
    let (n_, j_) = (n as i64, j as i64);
    let mut sum = BigInt::zero();
    for r in 0..=s {
        sum += sign(s - r)
            * binom(km1(k) * n_ + j_ + r, r)
            * binom(k as i64 * n_ + j_, s - r)
            * omega_sum(k, n, r + j_);
    }
    factorial((k - 1) * n + j) * sum
}

/// `z^0` coefficient of `x^(n-1-s)` at length `kn + j`, as the two-sum
/// difference obtained by subtracting the `z^1` formula from the total.
pub fn coeff_b0(k: usize, n: usize, j: usize, s: i64) -> BigInt {
    assert!(k >= 2 && j < k);
    if s < 0 || n == 0 || s > n as i64 - 1 {
        return BigInt::zero();
    }
    let (n_, j_) = (n as i64, j as i64);
    let mut first = BigInt::zero();
    for r in 0..=s + 1 {
        first += sign(s + 1 - r)
            * binom(km1(k) * n_ + j_ + r, r)
            * binom(k as i64 * n_ + j_, s + 1 - r)
            * product((0..n_).map(|i| r + j_ + km1(k) * i));
    }
    let mut second = BigInt::zero();
    for r in 0..=s {
        second += sign(s - r)
            * binom(km1(k) * n_ + j_ + r, r)
            * binom(k as i64 * n_ + j_, s - r)
            * product((0..n_).map(|i| 1 + r + j_ + km1(k) * i));
    }
    factorial((k - 1) * n + j) * (first - second)
}

/// `z^0` coefficient of `x^n` at length `kn + j`.
pub fn coeff_b0_top(k: usize, n: usize, j: usize) -> BigInt {
    coeff_b_boundary(k, n, j, BBoundaryKind::Split0N)
}

/// Normalized accessor: value of the formula at a plain x-degree, with the
/// index shift done here. Returns `None` for tags that are not indexed by a
/// single x-degree.
pub fn coefficient(id: FormulaId, k: usize, n: usize, j: usize, x_degree: i64) -> Option<BigInt> {
    let d = x_degree;
    let n_ = n as i64;
    let value = match id {
        FormulaId::ABoundaryLow => {
            if d == 0 {
                coeff_a_boundary_low(k, n, j)
            } else {
                BigInt::zero()
            }
        }
        FormulaId::ABoundaryHigh => {
            if d == n_ {
                coeff_a_boundary_high(k, n, j)
            } else {
                BigInt::zero()
            }
        }
        FormulaId::AInclExcl => coeff_a_incl_excl(k, n, j, d),
        FormulaId::ADual => coeff_a_dual(k, n, j, n_ - d),
        FormulaId::BTotalDual => coeff_b_total_dual(k, n, j, n_ - d),
        FormulaId::BTotalInclExcl => coeff_b_total_incl_excl(k, n, j, d),
        FormulaId::B1Form => coeff_b1(k, n, j, n_ - 1 - d),
        FormulaId::B0Form => {
            if d == n_ {
                coeff_b0_top(k, n, j)
            } else {
                coeff_b0(k, n, j, n_ - 1 - d)
            }
        }
        FormulaId::BBoundary | FormulaId::Omega => return None,
    };
    Some(value)
}
