//! Binary combinatorics around the symplectic dual polar space.
//!
//! Three families share the count `g(n) = (2ⁿ+1)(2ⁿ⁻¹+1)/3`:
//!
//! * the universal embedding dimension of the rank-n binary symplectic dual
//!   polar space ([`polar`]),
//! * restricted-growth words over `{1,2,3,4}` ([`language`]),
//! * a family 𝒩ⁿ of subspaces of F₂ⁿ cut out by support conditions ([`nset`]).
//!
//! [`bijection`] builds an explicit case-compatible bijection between the
//! last two, by induction on `n`.
//!
//! ```
//! use polar_words::{bijection, language, nset, polar};
//!
//! assert_eq!(language::g(3), 15);
//! assert_eq!(language::count_words(3).unwrap(), 15);
//! assert_eq!(nset::enumerate_n(3).unwrap().len(), 15);
//! assert_eq!(polar::udim(3).unwrap(), 15);
//! assert!(bijection::verify_bijection(3).unwrap().passed());
//! ```

pub mod bijection;
pub mod error;
pub mod gf2;
pub mod language;
pub mod nset;
pub mod polar;
pub mod verify;

pub use error::{Error, Result};
pub use gf2::{Gf2Subspace, Gf2Vector};
pub use language::{CaseLabel, Subcase, Word};

/// The guide's snippets, compiled and run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/gf2.md")]
    mod gf2 {}
    #[doc = include_str!("../../../book/src/polar.md")]
    mod polar {}
    #[doc = include_str!("../../../book/src/words.md")]
    mod words {}
    #[doc = include_str!("../../../book/src/nset.md")]
    mod nset {}
    #[doc = include_str!("../../../book/src/bijection.md")]
    mod bijection {}
}
