//! Ground-truth distributions by exhaustive enumeration of `S_n`.
//!
//! Enumeration is lexicographic via the successor algorithm on a reusable
//! buffer. The parallel split fixes the first entry: worker `w` handles the
//! first values `w, w + jobs, w + 2*jobs, ...` and partial counts are merged
//! by addition in first-value order, so the output is bit-identical for any
//! worker count.

use num_bigint::BigInt;

use crate::perm::{Permutation, StatConfig};
use crate::poly::{BiPoly, IntPoly};
use crate::{Error, Result};

/// Default ceiling on `n`: 11! is about 4e7 permutations, seconds-scale.
pub const DEFAULT_GUARD: usize = 11;

#[derive(Debug, Clone)]
pub struct Oracle {
    guard: usize,
    jobs: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            guard: DEFAULT_GUARD,
            jobs: 1,
        }
    }
}

impl Oracle {
    pub fn new() -> Self {
        Oracle::default()
    }

    pub fn with_guard(mut self, guard: usize) -> Self {
        self.guard = guard;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    fn check_guard(&self, n: usize) -> Result<()> {
        if n > self.guard {
            return Err(Error::EnumerationGuard {
                n,
                guard: self.guard,
            });
        }
        Ok(())
    }

    /// Distribution of the left statistic for the class of multiples of `k`:
    /// the coefficient of `x^s` counts permutations with `des_left = s`.
    pub fn poly_a(&self, k: usize, n: usize) -> Result<IntPoly> {
        if k < 1 {
            return Err(Error::InvalidModulus);
        }
        self.check_guard(n)?;
        let counts = sweep(n, self.jobs, &|p| {
            let s = p
                .windows(2)
                .filter(|w| w[0] > w[1] && w[0] % k == 0)
                .count();
            (0, s)
        });
        Ok(counts_to_poly(&counts[0]))
    }

    /// Joint distribution of the right statistic and the first-entry class
    /// indicator: the coefficient of `z^i x^s` counts permutations with
    /// `des_right = s` and `i = 1` iff the first entry is a multiple of `k`.
    pub fn poly_b(&self, k: usize, n: usize) -> Result<BiPoly> {
        if k < 1 {
            return Err(Error::InvalidModulus);
        }
        self.check_guard(n)?;
        let counts = sweep(n, self.jobs, &|p| {
            let s = p
                .windows(2)
                .filter(|w| w[0] > w[1] && w[1] % k == 0)
                .count();
            let z = usize::from(p.first().is_some_and(|&v| v % k == 0));
            (z, s)
        });
        Ok(BiPoly::new(
            counts_to_poly(&counts[0]),
            counts_to_poly(&counts[1]),
        ))
    }

    /// Distribution of an arbitrary residue-class statistic.
    pub fn distribution(&self, n: usize, cfg: &StatConfig) -> Result<IntPoly> {
        self.check_guard(n)?;
        let counts = sweep(n, self.jobs, &|p| {
            let s = p
                .windows(2)
                .filter(|w| {
                    w[0] > w[1]
                        && match cfg.direction() {
                            crate::perm::Direction::FirstElement => cfg.in_class(w[0]),
                            crate::perm::Direction::SecondElement => cfg.in_class(w[1]),
                        }
                })
                .count();
            (0, s)
        });
        Ok(counts_to_poly(&counts[0]))
    }
}

fn counts_to_poly(counts: &[u64]) -> IntPoly {
    IntPoly::new(counts.iter().map(|&c| BigInt::from(c)).collect())
}

/// `stat` maps a permutation (as a slice) to its `(z, x)` exponents.
/// Returns `counts[z][x]`.
fn sweep(n: usize, jobs: usize, stat: &(dyn Fn(&[usize]) -> (usize, usize) + Sync)) -> [Vec<u64>; 2] {
    let mut totals = [vec![0u64; n + 1], vec![0u64; n + 1]];
    if n == 0 {
        totals[0][0] = 1; // the empty permutation
        return totals;
    }

    let jobs = jobs.max(1).min(n);
    let partials: Vec<[Vec<u64>; 2]> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|w| {
                scope.spawn(move || {
                    let mut acc = [vec![0u64; n + 1], vec![0u64; n + 1]];
                    let mut first = w + 1;
                    while first <= n {
                        count_with_first(first, n, stat, &mut acc);
                        first += jobs;
                    }
                    acc
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });

    for acc in partials {
        for z in 0..2 {
            for (t, a) in totals[z].iter_mut().zip(&acc[z]) {
                *t += a;
            }
        }
    }
    totals
}

fn count_with_first(
    first: usize,
    n: usize,
    stat: &dyn Fn(&[usize]) -> (usize, usize),
    acc: &mut [Vec<u64>; 2],
) {
    let mut buf = Vec::with_capacity(n);
    buf.push(first);
    buf.extend((1..=n).filter(|&v| v != first));
    loop {
        let (z, s) = stat(&buf);
        acc[z][s] += 1;
        if !next_permutation(&mut buf[1..]) {
            break;
        }
    }
}

/// Lexicographic successor in place; false once the slice is descending.
fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut buf: Vec<usize> = (1..=n).collect();
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let current = Permutation::from_valid(buf.clone());
        done = !next_permutation(&mut buf);
        Some(current)
    })
}
