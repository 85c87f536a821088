//! Exact computational algebra around packed words.
//!
//! The crate is organized bottom-up:
//!
//! * [`codes`]: packed words, ordered set partitions, coinversion codes and
//!   their boosted variant, together with the insertion maps inverting them.
//! * [`polyring`]: sparse multivariate polynomials over `Q`, monomial
//!   orders, elementary/complete symmetric polynomials and key polynomials.
//! * [`groebner`]: a Buchberger engine, normal forms, standard monomials,
//!   Hilbert series, vanishing ideals of finite point sets (Buchberger–Möller)
//!   and associated graded ideals.
//! * [`symfunc`]: partitions, standard Young tableaux, `q`-analogs,
//!   Schur-basis symmetric functions and symmetric group characters.
//! * [`quotients`]: the ideals `J_{n,k}` and `I_{n,k}`, the packed-word
//!   point loci, graded characters and the verification routines tying all
//!   of the above together.

pub mod codes;
pub mod error;
pub mod groebner;
pub mod perm;
pub mod polyring;
pub mod quotients;
pub mod symfunc;

pub use error::{Error, Result};
pub use perm::Permutation;
