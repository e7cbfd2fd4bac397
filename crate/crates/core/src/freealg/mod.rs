//! Free algebras of the bracketed varieties: words, normal forms, evaluation, and
//! the structure of their underlying associative and Leibniz algebras.

mod eval;
mod free;
mod structure;
mod term;
mod word;

pub use eval::{extend_map, interpret, Evaluator};
pub use free::{confluence_check, raw_words, ConfluenceReport, FreeAlgebra, FreeElement, Lin, Strategy, DEFAULT_DEGREE_CAP};
pub use structure::{
    associative_dependence_witness, truncated_free_algebra, underlying_free_basis_report, DependenceWitness,
    FreeBasisReport, MultidegreeCheck, UnderlyingKind,
};
pub use term::Term;
pub use word::{multidegrees, Word};

#[cfg(test)]
mod tests;
