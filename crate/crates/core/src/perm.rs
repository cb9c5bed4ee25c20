//! Permutations in one-line notation and the refined descent statistics.
//!
//! Descent positions are 1-based, matching the usual convention
//! `Des(p) = { i : 1 <= i <= n-1, p_i > p_{i+1} }`. Insertion positions for
//! [`Permutation::insert_max`] are 0-based: position 0 means "at the front"
//! and position `i >= 1` means "immediately after the i-th entry".

use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

/// Which element of a descent pair must lie in the residue class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    FirstElement,
    SecondElement,
}

/// A residue-class statistic: count descents whose first (or second) element
/// is congruent mod `k` to one of `residues`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatConfig {
    k: usize,
    direction: Direction,
    residues: BTreeSet<usize>,
}

impl StatConfig {
    /// The default class `{0}` mod `k`, i.e. multiples of `k`.
    pub fn multiples_of(k: usize, direction: Direction) -> Result<Self> {
        Self::new(k, direction, [0])
    }

    pub fn new(
        k: usize,
        direction: Direction,
        residues: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidModulus);
        }
        let residues: BTreeSet<usize> = residues.into_iter().collect();
        for &r in &residues {
            if r >= k {
                return Err(Error::InvalidResidue { residue: r, k });
            }
        }
        Ok(StatConfig {
            k,
            direction,
            residues,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn in_class(&self, value: usize) -> bool {
        self.residues.contains(&(value % self.k))
    }

    /// Evaluate the configured statistic on `p`.
    pub fn statistic(&self, p: &Permutation) -> usize {
        match self.direction {
            Direction::FirstElement => des_left(p, self),
            Direction::SecondElement => des_right(p, self),
        }
    }
}

/// A permutation of `{1, ..., n}` in one-line notation. `n = 0` is legal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation(values));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    /// Construct without validating; `values` must already be a permutation
    /// of `1..=n`.
    pub(crate) fn from_valid(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Classical descent count `|Des(p)|`.
    pub fn des(&self) -> usize {
        self.values.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Insert `n+1` at 0-based position `pos` (0 = front, `n` = append).
    pub fn insert_max(&self, pos: usize) -> Result<Permutation> {
        let n = self.len();
        if pos > n {
            return Err(Error::PositionOutOfRange { pos, n });
        }
        let mut values = Vec::with_capacity(n + 1);
        values.extend_from_slice(&self.values[..pos]);
        values.push(n + 1);
        values.extend_from_slice(&self.values[pos..]);
        Ok(Permutation { values })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Number of descents whose first element lies in the class.
pub fn des_left(p: &Permutation, cfg: &StatConfig) -> usize {
    p.values()
        .windows(2)
        .filter(|w| w[0] > w[1] && cfg.in_class(w[0]))
        .count()
}

/// Number of descents whose second element lies in the class.
pub fn des_right(p: &Permutation, cfg: &StatConfig) -> usize {
    p.values()
        .windows(2)
        .filter(|w| w[0] > w[1] && cfg.in_class(w[1]))
        .count()
}

/// 1 iff the first entry lies in the class. Errors on the empty permutation.
pub fn first_in_class(p: &Permutation, cfg: &StatConfig) -> Result<usize> {
    match p.values().first() {
        Some(&v) => Ok(usize::from(cfg.in_class(v))),
        None => Err(Error::EmptyPermutation),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn cfg(k: usize, dir: Direction) -> StatConfig {
        StatConfig::multiples_of(k, dir).unwrap()
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![2, 3]).is_err());
        assert!(Permutation::new(vec![]).is_ok());
    }

    #[test]
    fn des_left_examples() {
        let c3 = cfg(3, Direction::FirstElement);
        assert_eq!(des_left(&perm(&[1, 2, 3, 4, 5, 6]), &c3), 0);
        assert_eq!(des_left(&perm(&[6, 2, 4, 5, 3, 1]), &c3), 2);
        let c2 = cfg(2, Direction::FirstElement);
        assert_eq!(des_left(&perm(&[2, 1]), &c2), 1);
    }

    #[test]
    fn des_right_examples() {
        let c3 = cfg(3, Direction::SecondElement);
        assert_eq!(des_right(&perm(&[1, 2, 3]), &c3), 0);
        assert_eq!(des_right(&perm(&[5, 3, 1, 6, 4, 2]), &c3), 1);
        let odd = StatConfig::new(2, Direction::SecondElement, [1]).unwrap();
        assert_eq!(des_right(&perm(&[2, 1]), &odd), 1);
    }

    #[test]
    fn first_in_class_examples() {
        let c3 = cfg(3, Direction::SecondElement);
        assert_eq!(first_in_class(&perm(&[3, 1, 2]), &c3).unwrap(), 1);
        assert_eq!(first_in_class(&perm(&[1, 3, 2]), &c3).unwrap(), 0);
        let c2 = cfg(2, Direction::SecondElement);
        assert_eq!(first_in_class(&perm(&[2, 1]), &c2).unwrap(), 1);
        assert_eq!(
            first_in_class(&perm(&[]), &c2),
            Err(Error::EmptyPermutation)
        );
    }

    #[test]
    fn insert_max_examples() {
        assert_eq!(perm(&[1, 2]).insert_max(0).unwrap(), perm(&[3, 1, 2]));
        assert_eq!(perm(&[1, 2]).insert_max(2).unwrap(), perm(&[1, 2, 3]));
        assert_eq!(perm(&[2, 1]).insert_max(1).unwrap(), perm(&[2, 3, 1]));
        assert!(perm(&[2, 1]).insert_max(3).is_err());
    }

    #[test]
    fn full_residue_set_recovers_classical_descents() {
        // des_left = des_right = des when every residue is in the class.
        for k in 1..=4 {
            let left = StatConfig::new(k, Direction::FirstElement, 0..k).unwrap();
            let right = StatConfig::new(k, Direction::SecondElement, 0..k).unwrap();
            for p in crate::oracle::all_permutations(5) {
                assert_eq!(des_left(&p, &left), p.des());
                assert_eq!(des_right(&p, &right), p.des());
            }
        }
    }

    #[test]
    fn class_and_complement_partition_descents() {
        let c3 = cfg(3, Direction::FirstElement);
        let not3 = StatConfig::new(3, Direction::FirstElement, [1, 2]).unwrap();
        for p in crate::oracle::all_permutations(6) {
            assert_eq!(des_left(&p, &c3) + des_left(&p, &not3), p.des());
        }
        let r3 = cfg(3, Direction::SecondElement);
        let notr3 = StatConfig::new(3, Direction::SecondElement, [1, 2]).unwrap();
        for p in crate::oracle::all_permutations(6) {
            assert_eq!(des_right(&p, &r3) + des_right(&p, &notr3), p.des());
        }
    }

    #[test]
    fn insertion_case_analysis() {
        // Inserting n+1 (with n+1 not in the class) at a class-descent
        // position removes exactly that descent from the statistic; all
        // other positions preserve it.
        for n in 0..=6 {
            let c3 = cfg(3, Direction::FirstElement);
            for p in crate::oracle::all_permutations(n) {
                if c3.in_class(n + 1) {
                    continue;
                }
                let s = des_left(&p, &c3);
                let mut drops = 0;
                for pos in 0..=n {
                    let q = p.insert_max(pos).unwrap();
                    let t = des_left(&q, &c3);
                    if t + 1 == s {
                        drops += 1;
                    } else {
                        assert_eq!(t, s, "insert at {pos} of {p}");
                    }
                }
                assert_eq!(drops, s);
            }
        }
    }

    #[test]
    fn complement_preserves_multiples_at_length_kn_plus_k_minus_1() {
        // At length kn+k-1 the value map v -> kn+k-v fixes divisibility by k.
        for (k, len) in [(3usize, 5usize), (3, 8), (4, 7), (2, 5)] {
            assert_eq!(len % k, k - 1);
            for v in 1..=len {
                assert_eq!(v % k == 0, (len + 1 - v) % k == 0);
            }
        }
    }
}
