//! Insertion-operator recursions for the distribution polynomials.
//!
//! Both chains advance one length at a time by inserting the new maximum in
//! every position. Which operator applies is derived from the current length
//! alone, so callers never pass operator subscripts:
//!
//! * left statistic, producing length `m`: a down-shift step for
//!   `m % k != 0` and an up-shift step for `m % k == 0`;
//! * right statistic, consuming length `m = kn + j`: a plain step for
//!   `0 <= j <= k-2` and a class-leading step (the only one that creates
//!   `z` mass) for `j = k-1`.
//!
//! The right chain starts at length 1 with `1` and no `z` part: a length
//! below `k` has no value in the class, so the first `z` term can only
//! appear at length `k`, which is exactly when the first class-leading step
//! fires.

use num_bigint::BigInt;

use crate::poly::{BiPoly, IntPoly};

/// Step for the left statistic at non-multiple lengths: sends `x^s` to
/// `s x^{s-1} + (m - s) x^s`, where `m` is the new length.
pub fn apply_delta(p: &IntPoly, m: usize) -> IntPoly {
    let mut out = IntPoly::zero();
    for (s, c) in p.coeffs().iter().enumerate() {
        if s > 0 {
            out.add_term(c * BigInt::from(s), s - 1);
        }
        out.add_term(c * BigInt::from(m as i64 - s as i64), s);
    }
    out
}

/// Step for the left statistic at multiple-of-`k` lengths: sends `x^s` to
/// `(s+1) x^s + (m - 1 - s) x^{s+1}`, where `m` is the new length.
pub fn apply_gamma(p: &IntPoly, m: usize) -> IntPoly {
    let mut out = IntPoly::zero();
    for (s, c) in p.coeffs().iter().enumerate() {
        out.add_term(c * BigInt::from(s + 1), s);
        out.add_term(c * BigInt::from(m as i64 - 1 - s as i64), s + 1);
    }
    out
}

/// Plain step for the right statistic, consuming length `kn + j` with
/// `0 <= j <= k-2`.
pub fn apply_theta(p: &BiPoly, k: usize, n: usize, j: usize) -> BiPoly {
    debug_assert!(j + 2 <= k);
    let stay = |s: usize| BigInt::from(1 + s + (k - 1) * n + j);
    let mut out = BiPoly::zero();
    for (s, c) in p.z0.coeffs().iter().enumerate() {
        out.add_term(c * stay(s), 0, s);
        out.add_term(c * BigInt::from(n as i64 - s as i64), 0, s + 1);
    }
    for (s, c) in p.z1.coeffs().iter().enumerate() {
        out.add_term(c * stay(s), 1, s);
        out.add_term(c * BigInt::from(n as i64 - s as i64 - 1), 1, s + 1);
        out.add_term(c.clone(), 0, s + 1);
    }
    out
}

/// Class-leading step for the right statistic, consuming length `kn + k - 1`.
/// Inserting the new maximum (a multiple of `k`) at the front is what moves
/// mass from `z^0` to `z^1`.
pub fn apply_psi(p: &BiPoly, k: usize, n: usize) -> BiPoly {
    let mut out = BiPoly::zero();
    for (s, c) in p.z0.coeffs().iter().enumerate() {
        out.add_term(c * BigInt::from(s + (k - 1) * (n + 1)), 0, s);
        out.add_term(c.clone(), 1, s);
        out.add_term(c * BigInt::from(n as i64 - s as i64), 0, s + 1);
    }
    for (s, c) in p.z1.coeffs().iter().enumerate() {
        out.add_term(c * BigInt::from(1 + s + (k - 1) * (n + 1)), 1, s);
        out.add_term(c * BigInt::from(n as i64 - s as i64), 1, s + 1);
    }
    out
}

/// Left-statistic polynomials for every length `0..=n` (index = length).
pub fn poly_a_chain(k: usize, n: usize) -> Vec<IntPoly> {
    assert!(k >= 2);
    let mut chain = Vec::with_capacity(n + 1);
    chain.push(IntPoly::constant(1));
    for m in 1..=n {
        let next = if m == 1 {
            IntPoly::constant(1)
        } else if m % k == 0 {
            apply_gamma(&chain[m - 1], m)
        } else {
            apply_delta(&chain[m - 1], m)
        };
        chain.push(next);
    }
    chain
}

pub fn poly_a_recursive(k: usize, n: usize) -> IntPoly {
    poly_a_chain(k, n).pop().unwrap()
}

/// Right-statistic polynomials for every length `0..=n` (index = length).
pub fn poly_b_chain(k: usize, n: usize) -> Vec<BiPoly> {
    assert!(k >= 2);
    let mut chain = Vec::with_capacity(n + 1);
    chain.push(BiPoly::constant(1));
    for m in 1..=n {
        let next = if m == 1 {
            BiPoly::constant(1)
        } else {
            let prev = &chain[m - 1];
            let (q, j) = ((m - 1) / k, (m - 1) % k);
            if j == k - 1 {
                apply_psi(prev, k, q)
            } else {
                apply_theta(prev, k, q, j)
            }
        };
        chain.push(next);
    }
    chain
}

pub fn poly_b_recursive(k: usize, n: usize) -> BiPoly {
    poly_b_chain(k, n).pop().unwrap()
}

/// One coefficient of the left distribution at `target_len` from the full
/// polynomial at `target_len - 1`. Out-of-support `s` contributes zero.
pub fn coeff_step_a(k: usize, target_len: usize, s: usize, prev: &IntPoly) -> BigInt {
    assert!(k >= 2 && target_len >= 1);
    if target_len.is_multiple_of(k) {
        let mut v = BigInt::from(1 + s) * prev.coeff(s);
        if s > 0 {
            v += BigInt::from(target_len - s) * prev.coeff(s - 1);
        }
        v
    } else {
        BigInt::from(target_len as i64 - s as i64) * prev.coeff(s)
            + BigInt::from(s + 1) * prev.coeff(s + 1)
    }
}

/// One split coefficient (`z_degree` 0 or 1) of the right distribution at
/// `target_len` from the full split polynomial at `target_len - 1`.
pub fn coeff_step_b(
    k: usize,
    target_len: usize,
    z_degree: usize,
    s: usize,
    prev: &BiPoly,
) -> BigInt {
    assert!(k >= 2 && target_len >= 2);
    let (n, j) = ((target_len - 1) / k, (target_len - 1) % k);
    let below = |p: &IntPoly| if s > 0 { p.coeff(s - 1) } else { BigInt::from(0) };
    if j <= k - 2 {
        let stay = BigInt::from(1 + s + (k - 1) * n + j);
        match z_degree {
            0 => {
                stay * prev.z0.coeff(s)
                    + BigInt::from(n as i64 - s as i64 + 1) * below(&prev.z0)
                    + below(&prev.z1)
            }
            1 => {
                stay * prev.z1.coeff(s) + BigInt::from(n as i64 - s as i64) * below(&prev.z1)
            }
            _ => BigInt::from(0),
        }
    } else {
        match z_degree {
            0 => {
                BigInt::from(s + (k - 1) * (n + 1)) * prev.z0.coeff(s)
                    + BigInt::from(n as i64 - s as i64 + 1) * below(&prev.z0)
            }
            1 => {
                BigInt::from(1 + s + (k - 1) * (n + 1)) * prev.z1.coeff(s)
                    + BigInt::from(n as i64 - s as i64 + 1) * below(&prev.z1)
                    + prev.z0.coeff(s)
            }
            _ => BigInt::from(0),
        }
    }
}

/// One total coefficient of the right distribution at `target_len` from the
/// `z = 1` specialization at `target_len - 1`.
pub fn coeff_step_b_total(k: usize, target_len: usize, s: usize, prev_total: &IntPoly) -> BigInt {
    assert!(k >= 2 && target_len >= 2);
    let (n, j) = ((target_len - 1) / k, (target_len - 1) % k);
    let stay = if j <= k - 2 {
        BigInt::from(1 + s + (k - 1) * n + j)
    } else {
        BigInt::from(1 + s + (k - 1) * (n + 1))
    };
    let mut v = stay * prev_total.coeff(s);
    if s > 0 {
        v += BigInt::from(n as i64 - s as i64 + 1) * prev_total.coeff(s - 1);
    }
    v
}
