//! Algebras built from words: free anticommutative truncations, the
//! multilinear quotient, central extensions and a zoo of reference
//! algebras.

mod example;
mod extension;
mod free;
mod word;
pub mod zoo;

pub use example::{atilde, atilde_corrupted, atilde_from_table, atilde_unpatched, Atilde, CORRUPTED_PSI_TABLE, PSI_TABLE, UNPATCHED_PSI_TABLE};
pub use extension::{central_extension, parse_psi};
pub use free::{free_anticommutative, free_anticommutative_capped, multilinear_quotient, WordAlgebra, DEFAULT_WORD_CAP};
pub use word::Word;
