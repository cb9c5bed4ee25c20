//! Exact arithmetic for descent statistics refined by residue classes mod `k`.
//!
//! For a permutation written in one-line notation, a descent position can be
//! classified by whether its first or second element falls in a residue class
//! mod `k`. This crate computes the resulting distribution polynomials over
//! the full symmetric group by four independent routes:
//!
//! * brute-force enumeration of `S_n` ([`oracle`]),
//! * insertion-operator recursions ([`recursion`]),
//! * explicit coefficient formulas ([`closed`]),
//!
//! and verifies the binomial identities that follow from comparing the
//! routes ([`identities`]). The constructive maps relating the left and
//! right statistics live in [`bijections`].

pub mod bijections;
pub mod closed;
pub mod identities;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod recursion;

mod error;

pub use error::Error;
pub use perm::{Direction, Permutation, StatConfig};
pub use poly::{BiPoly, IntPoly};

pub type Result<T> = std::result::Result<T, Error>;
