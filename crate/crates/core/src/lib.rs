//! Lexicographic ranking, unranking, prefix counting and uniform sampling of
//! derangements and menage permutations.
//!
//! The [`engine`] turns any family that can count its members by prefix into
//! rank/unrank/sample/enumerate operations. [`derangement`] and [`menage`]
//! provide closed-form prefix counts built on rook polynomials; [`rook`] is
//! the general (and slow) rook-theory toolkit used to check them. [`lyndon`]
//! explores prefix counts of binary Lyndon words.

pub mod cli;
pub mod derangement;
pub mod engine;
pub mod error;
pub mod lyndon;
pub mod menage;
pub mod numeric;
pub mod rook;
pub mod words;

pub use derangement::DerangementFamily;
pub use engine::{enumerate_range, rank, sample_uniform, total_count, unrank, PrefixCountFamily};
pub use error::{Error, Result};
pub use menage::MenageFamily;
pub use numeric::{Count, IntegerPolynomial};
pub use rook::Board;
pub use words::Word;
