//! Symmetry maps on permutations and the two explicit bijections behind the
//! palindromicity and decomposition results at lengths just below a
//! multiple of `k`.
//!
//! Lengths of the form `kn + k - 2` (with `k >= 3`) are where the left
//! distribution is palindromic; [`bij01`] realizes that symmetry directly,
//! and [`bij02`] refines it by also reading off which part of the split
//! right statistic the image lands in.

use crate::error::Error;
use crate::perm::Permutation;
use crate::Result;

/// Value complement `v -> n + 1 - v`.
pub fn complement(p: &Permutation) -> Permutation {
    let n = p.len();
    Permutation::from_valid(p.values().iter().map(|&v| n + 1 - v).collect())
}

/// Position reversal.
pub fn reverse(p: &Permutation) -> Permutation {
    let mut values = p.values().to_vec();
    values.reverse();
    Permutation::from_valid(values)
}

/// `reverse . complement`; swaps the roles of the two descent statistics
/// at lengths divisible by `k` after adding one.
pub fn star(p: &Permutation) -> Permutation {
    reverse(&complement(p))
}

fn require_length(p: &Permutation, k: usize) -> Result<(usize, usize)> {
    if k < 3 {
        return Err(Error::UnsupportedModulus(k));
    }
    let len = p.len();
    if len + 2 < k || !(len + 2).is_multiple_of(k) {
        return Err(Error::InvalidLength {
            len,
            k,
            expected: "kn + k - 2",
        });
    }
    Ok((len, (len + 2) / k - 1))
}

/// Append a new maximum, complement, and cut at the (new) maximum so it
/// leads; the tail after dropping it is the image.
fn fold_through_max(values: Vec<usize>) -> Permutation {
    let m = values.len();
    let complemented: Vec<usize> = values.iter().map(|&v| m + 1 - v).collect();
    let top = complemented.iter().position(|&v| v == m).unwrap();
    let rotated: Vec<usize> = complemented[top..]
        .iter()
        .chain(&complemented[..top])
        .copied()
        .collect();
    Permutation::from_valid(rotated[1..].to_vec())
}

/// Palindromicity bijection at length `kn + k - 2`, `k >= 3`: sends a
/// permutation with left statistic `j` to one with left statistic `n - j`.
pub fn bij01(p: &Permutation, k: usize) -> Result<Permutation> {
    let (len, _) = require_length(p, k)?;
    let mut w = p.values().to_vec();
    w.push(len + 1);
    Ok(fold_through_max(w))
}

/// Inverse of [`bij01`]: lead with a new maximum, rotate until 1 is last,
/// complement, and drop the maximum from the end.
pub fn bij01_inv(p: &Permutation, k: usize) -> Result<Permutation> {
    let (len, _) = require_length(p, k)?;
    let m = len + 1;
    let mut w = Vec::with_capacity(m);
    w.push(m);
    w.extend_from_slice(p.values());
    let one = w.iter().position(|&v| v == 1).unwrap();
    w.rotate_left(one + 1);
    let mut values: Vec<usize> = w.iter().map(|&v| m + 1 - v).collect();
    debug_assert_eq!(values.last(), Some(&m));
    values.pop();
    Ok(Permutation::from_valid(values))
}

/// Refined bijection at length `kn + k - 2`, `k >= 3`: like [`bij01`] but
/// routed through reversal, so the image carries the right statistic. The
/// flag reports whether the image's first entry is a multiple of `k`; a
/// left statistic of `j` maps to a right statistic of `j - 1` when the flag
/// is set and `j` otherwise.
pub fn bij02(p: &Permutation, k: usize) -> Result<(Permutation, bool)> {
    let (len, _) = require_length(p, k)?;
    let mut w = p.values().to_vec();
    w.push(len + 1);
    w.reverse();
    let image = fold_through_max(w);
    let flag = image.values()[0].is_multiple_of(k);
    Ok((image, flag))
}
