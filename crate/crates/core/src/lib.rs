//! Finite generation of word ideals obtained from commutative monomial
//! ideals, either by sorting letters under an ordering or by taking the full
//! preimage in the free monoid.

pub mod cli;
pub mod cool;
pub mod error;
pub mod monomial;
pub mod oracle;
pub mod polyhedral;
pub mod preimage;
pub mod sorted_ideal;
pub mod sweep;
pub mod text;
pub mod torient;

pub use error::{Error, Result};
pub use monomial::{Alphabet, Letter, LetterOrder, Monomial, MonomialSet, Word};
