use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("values {0:?} are not a rearrangement of 1..=n")]
    NotAPermutation(Vec<usize>),
    #[error("operation requires a non-empty permutation")]
    EmptyPermutation,
    #[error("insert position {pos} out of range 0..={n}")]
    PositionOutOfRange { pos: usize, n: usize },
    #[error("modulus k must be >= 1")]
    InvalidModulus,
    #[error("residue {residue} out of range for modulus {k}")]
    InvalidResidue { residue: usize, k: usize },
    #[error("n = {n} exceeds the enumeration guard {guard}; raise the guard to proceed")]
    EnumerationGuard { n: usize, guard: usize },
    #[error("length {len} is not of the required form for k = {k}: {expected}")]
    InvalidLength {
        len: usize,
        k: usize,
        expected: &'static str,
    },
    #[error("k = {0} is not supported here (requires k >= 3)")]
    UnsupportedModulus(usize),
}
