//! Identity checkers: hypergeometric evaluations and the dual/summation
//! identities relating the two alternating-sum coefficient formulas.
//!
//! Each checker produces both sides of one instance as exact integers
//! (identities stated with a rational factor are cross-multiplied first).
//! [`run_checks`] folds any stream of instances into a [`VerificationReport`]
//! that records every mismatch, so a sweep never stops at the first failure.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::closed::{binom, factorial};
use crate::recursion::{poly_a_chain, poly_b_chain};

/// One failed instance: the parameter label plus both evaluated sides,
/// rendered in decimal.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckFailure {
    pub params: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of sweeping one identity over a parameter range.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub checks_run: usize,
    pub failures: Vec<CheckFailure>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluate a stream of `(label, lhs, rhs)` instances into a report.
pub fn run_checks(
    suite: &str,
    instances: impl Iterator<Item = (String, BigInt, BigInt)>,
) -> VerificationReport {
    let mut report = VerificationReport {
        suite: suite.to_string(),
        checks_run: 0,
        failures: Vec::new(),
    };
    for (params, lhs, rhs) in instances {
        report.checks_run += 1;
        if lhs != rhs {
            report.failures.push(CheckFailure {
                params,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
    report
}

fn sign(parity: i64) -> BigInt {
    if parity % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn product(range: impl Iterator<Item = i64>) -> BigInt {
    range.map(BigInt::from).product()
}

/// `C(n,s)^2 = sum_{r=0}^{s} (-1)^(s-r) C(n+r,r)^2 C(2n+1,s-r)`.
pub fn saalschutz_a1(n: i64, s: i64) -> (BigInt, BigInt) {
    let lhs = binom(n, s).pow(2);
    let rhs = (0..=s)
        .map(|r| sign(s - r) * binom(n + r, r).pow(2) * binom(2 * n + 1, s - r))
        .sum();
    (lhs, rhs)
}

/// `C(n,s) C(n+1,s+1) = sum_{r} (-1)^(s-r) C(n+r+1,r) C(n+r+1,r+1) C(2n+2,s-r)`.
pub fn saalschutz_a2(n: i64, s: i64) -> (BigInt, BigInt) {
    let lhs = binom(n, s) * binom(n + 1, s + 1);
    let rhs = (0..=s)
        .map(|r| sign(s - r) * binom(n + r + 1, r) * binom(n + r + 1, r + 1) * binom(2 * n + 2, s - r))
        .sum();
    (lhs, rhs)
}

/// Cross-multiplied form of the rational variant:
/// `(n+1) C(n,s)^2 = (s+1) sum_{r=0}^{n-s} (-1)^(n-s-r) C(n+r,r) C(n+r+1,r) C(2n+2,n-s-r)`.
pub fn saalschutz_b1(n: i64, s: i64) -> (BigInt, BigInt) {
    let lhs = BigInt::from(n + 1) * binom(n, s).pow(2);
    let rhs = BigInt::from(s + 1)
        * (0..=n - s)
            .map(|r| sign(n - s - r) * binom(n + r, r) * binom(n + r + 1, r) * binom(2 * n + 2, n - s - r))
            .sum::<BigInt>();
    (lhs, rhs)
}

/// `C(n-1,s) C(n+1,s+1) = sum_{r=0}^{n-s} (-1)^(n-s-r) C(n+r,r) C(n+r-1,r-1) C(2n+1,n-s-r)`.
pub fn saalschutz_b2(n: i64, s: i64) -> (BigInt, BigInt) {
    let lhs = binom(n - 1, s) * binom(n + 1, s + 1);
    let rhs = (0..=n - s)
        .map(|r| sign(n - s - r) * binom(n + r, r) * binom(n + r - 1, r - 1) * binom(2 * n + 1, n - s - r))
        .sum();
    (lhs, rhs)
}

/// Equality of the two alternating sums for the left-statistic coefficient
/// at `x^(n-s)`: the sum grown from the top against the one grown from the
/// constant term.
pub fn cross_a(k: i64, n: i64, j: i64, s: i64) -> (BigInt, BigInt) {
    let m = (k - 1) * n + j;
    let lhs = (0..=s)
        .map(|r| {
            sign(s - r)
                * binom(m + r, r)
                * binom(k * n + j + 1, s - r)
                * product((1..=n).map(|i| r + (k - 1) * i))
        })
        .sum();
    let rhs = (0..=n - s)
        .map(|r| {
            sign(n - s - r)
                * binom(m + r, r)
                * binom(k * n + j + 1, n - s - r)
                * product((0..n).map(|i| r + 1 + j + (k - 1) * i))
        })
        .sum();
    (lhs, rhs)
}

/// Same cross identity for the right-statistic totals.
pub fn cross_b(k: i64, n: i64, j: i64, s: i64) -> (BigInt, BigInt) {
    let m = (k - 1) * n + j;
    let lhs = (0..=s)
        .map(|r| {
            sign(s - r)
                * binom(m + r, r)
                * binom(k * n + j + 1, s - r)
                * product((1..=n).map(|i| 1 + r + (k - 1) * i))
        })
        .sum();
    let rhs = (0..=n - s)
        .map(|r| {
            sign(n - s - r)
                * binom(m + r, r)
                * binom(k * n + j + 1, n - s - r)
                * product((0..n).map(|i| r + j + (k - 1) * i))
        })
        .sum();
    (lhs, rhs)
}

/// `s = 0` case of [`cross_a`]: the long side must collapse to `(k-1)^n n!`.
pub fn cross_a_s0(k: i64, n: i64, j: i64) -> (BigInt, BigInt) {
    let (_, rhs) = cross_a(k, n, j, 0);
    let closed = BigInt::from(k - 1).pow(n as u32) * factorial(n as usize);
    (closed, rhs)
}

/// `s = 1` case of [`cross_a`], with the short side expanded explicitly:
/// `((k-1)n+j+1) prod_{i=0}^{n}(1+(k-1)i) - (kn+j+1)(k-1)^n n!`.
pub fn cross_a_s1(k: i64, n: i64, j: i64) -> (BigInt, BigInt) {
    let lhs = BigInt::from((k - 1) * n + j + 1) * product((0..=n).map(|i| 1 + (k - 1) * i))
        - BigInt::from(k * n + j + 1) * BigInt::from(k - 1).pow(n as u32) * factorial(n as usize);
    let rhs = (0..=n - 1)
        .map(|r| {
            sign(n - 1 - r)
                * binom((k - 1) * n + j + r, r)
                * binom(k * n + j + 1, n - 1 - r)
                * product((0..n).map(|i| r + 1 + j + (k - 1) * i))
        })
        .sum();
    (lhs, rhs)
}

fn a2_constant(len: usize) -> BigInt {
    poly_a_chain(2, len)[len].coeff(0)
}

fn b2_constant(len: usize) -> BigInt {
    poly_b_chain(2, len)[len].at_z1().coeff(0)
}

/// Constant term of the `k = 2` left distribution at even length `2n`
/// against its alternating-sum evaluation.
pub fn problem1_a_even(n: i64) -> (BigInt, BigInt) {
    let lhs = a2_constant(2 * n as usize);
    let rhs = factorial(n as usize).pow(2)
        * (0..=n)
            .map(|r| sign(n - r) * binom(2 * n + 1, n - r) * binom(n + r, n).pow(2))
            .sum::<BigInt>();
    (lhs, rhs)
}

/// Shared constant term of both `k = 2` distributions at odd length `2n+1`.
pub fn problem1_odd(n: i64) -> (BigInt, BigInt) {
    let lhs = a2_constant(2 * n as usize + 1);
    let rhs = factorial(n as usize + 1)
        * factorial(n as usize)
        * (0..=n)
            .map(|r| sign(n - r) * binom(2 * n + 2, n - r) * binom(n + r, n) * binom(n + r + 1, r))
            .sum::<BigInt>();
    (lhs, rhs)
}

/// Constant term of the `k = 2` right distribution at even length `2n`.
pub fn problem1_b_even(n: i64) -> (BigInt, BigInt) {
    let lhs = b2_constant(2 * n as usize);
    let rhs = factorial(n as usize).pow(2)
        * (0..=n)
            .map(|r| sign(n - r) * binom(2 * n + 1, n - r) * binom(n + r, n) * binom(n + r - 1, n))
            .sum::<BigInt>();
    (lhs, rhs)
}

/// Closed product forms for all `k = 2` coefficients against the recursion
/// engine: `C(n,s)^2 (n!)^2` at length `2n`, and (cross-multiplied)
/// `(s+1) A_s = C(n,s)^2 ((n+1)!)^2` at length `2n+1`.
pub fn k2_theorem(n: i64, s: i64, odd: bool) -> (BigInt, BigInt) {
    if odd {
        let len = 2 * n as usize + 1;
        let lhs = BigInt::from(s + 1) * poly_a_chain(2, len)[len].coeff(s as usize);
        (lhs, binom(n, s).pow(2) * factorial(n as usize + 1).pow(2))
    } else {
        let len = 2 * n as usize;
        let lhs = poly_a_chain(2, len)[len].coeff(s as usize);
        (lhs, binom(n, s).pow(2) * factorial(n as usize).pow(2))
    }
}

/// Bounds for [`run_suite`].
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SuiteLimits {
    pub saalschutz_n: i64,
    pub cross_k: i64,
    pub cross_n: i64,
    pub problem1_n: i64,
}

impl Default for SuiteLimits {
    fn default() -> Self {
        SuiteLimits {
            saalschutz_n: 40,
            cross_k: 5,
            cross_n: 20,
            problem1_n: 12,
        }
    }
}

/// Sweep every identity family over the given bounds.
pub fn run_suite(limits: SuiteLimits) -> Vec<VerificationReport> {
    let sn = limits.saalschutz_n;
    let mut reports = vec![
        run_checks(
            "saalschutz-a1",
            (0..=sn).flat_map(|n| (0..=n).map(move |s| (n, s))).map(|(n, s)| {
                let (l, r) = saalschutz_a1(n, s);
                (format!("n={n} s={s}"), l, r)
            }),
        ),
        run_checks(
            "saalschutz-a2",
            (0..=sn).flat_map(|n| (0..=n).map(move |s| (n, s))).map(|(n, s)| {
                let (l, r) = saalschutz_a2(n, s);
                (format!("n={n} s={s}"), l, r)
            }),
        ),
        run_checks(
            "saalschutz-b1",
            (0..=sn).flat_map(|n| (0..=n).map(move |s| (n, s))).map(|(n, s)| {
                let (l, r) = saalschutz_b1(n, s);
                (format!("n={n} s={s}"), l, r)
            }),
        ),
        run_checks(
            "saalschutz-b2",
            (1..=sn).flat_map(|n| (0..=n).map(move |s| (n, s))).map(|(n, s)| {
                let (l, r) = saalschutz_b2(n, s);
                (format!("n={n} s={s}"), l, r)
            }),
        ),
    ];
    let cross_params = || {
        (2..=limits.cross_k).flat_map(move |k| {
            (0..=limits.cross_n)
                .flat_map(move |n| (0..k).map(move |j| (k, n, j)))
        })
    };
    reports.push(run_checks(
        "cross-a",
        cross_params().flat_map(|(k, n, j)| (0..=n).map(move |s| (k, n, j, s))).map(
            |(k, n, j, s)| {
                let (l, r) = cross_a(k, n, j, s);
                (format!("k={k} n={n} j={j} s={s}"), l, r)
            },
        ),
    ));
    reports.push(run_checks(
        "cross-b",
        cross_params().flat_map(|(k, n, j)| (0..=n).map(move |s| (k, n, j, s))).map(
            |(k, n, j, s)| {
                let (l, r) = cross_b(k, n, j, s);
                (format!("k={k} n={n} j={j} s={s}"), l, r)
            },
        ),
    ));
    reports.push(run_checks(
        "cross-a-s0",
        cross_params().map(|(k, n, j)| {
            let (l, r) = cross_a_s0(k, n, j);
            (format!("k={k} n={n} j={j}"), l, r)
        }),
    ));
    reports.push(run_checks(
        "cross-a-s1",
        cross_params().filter(|&(_, n, _)| n >= 1).map(|(k, n, j)| {
            let (l, r) = cross_a_s1(k, n, j);
            (format!("k={k} n={n} j={j}"), l, r)
        }),
    ));
    let pn = limits.problem1_n;
    reports.push(run_checks(
        "problem1",
        (0..=pn).flat_map(|n| {
            let (l1, r1) = problem1_a_even(n);
            let (l2, r2) = problem1_odd(n);
            let mut out = vec![
                (format!("a-even n={n}"), l1, r1),
                (format!("odd n={n}"), l2, r2),
            ];
            // The b-even sum involves C(n+r-1, n) and degenerates at n = 0.
            if n >= 1 {
                let (l3, r3) = problem1_b_even(n);
                out.push((format!("b-even n={n}"), l3, r3));
            }
            out
        }),
    ));
    reports.push(run_checks(
        "k2-closed",
        (0..=pn)
            .flat_map(|n| (0..=n).flat_map(move |s| [(n, s, false), (n, s, true)]))
            .map(|(n, s, odd)| {
                let (l, r) = k2_theorem(n, s, odd);
                (format!("n={n} s={s} odd={odd}"), l, r)
            }),
    ));
    reports
}
