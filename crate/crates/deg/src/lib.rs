//! Combinatorics of dual equivalence: tableaux, reading words, signed colored
//! graphs and their local axioms, and explicit quasisymmetric/Schur expansions
//! of LLT and modified Macdonald polynomials.
//!
//! The crate is organised bottom-up:
//!
//! * [`tableaux`] — partitions, skew shapes, standard tableaux, reading words,
//!   signatures, jeu de taquin, Yamanouchi words.
//! * [`words`] — permutation words, RSK insertion, Knuth moves, dual and
//!   twisted elementary moves, and the `tau`-controlled move family.
//! * [`graph`] — signed colored graphs, builders for standard/skew dual
//!   equivalence graphs and symmetric-group graphs, restrictions, components,
//!   morphisms and isomorphism search.
//! * [`axioms`] — the local axioms a signed colored graph must satisfy to be a
//!   dual equivalence graph, the strengthened four-color axiom, and detection
//!   of the loop family that separates the two.
//! * [`qsym`] — polynomials in `q, t`, fundamental quasisymmetric expansions,
//!   Schur expansions, and exact Schur-coefficient extraction.
//! * [`llt`] — tuples of skew shapes, inversion statistics, LLT graphs and the
//!   explicit Schur expansion available when the diameter is at most 3.
//! * [`macdonald`] — ribbon tuples for a shape, inv/maj statistics, and
//!   expansions of modified Macdonald polynomials.
//! * [`campaigns`] — the named verification campaigns run by the `deg` CLI.

pub mod axioms;
pub mod campaigns;
pub mod graph;
pub mod llt;
pub mod macdonald;
pub mod qsym;
pub mod tableaux;
pub mod words;

mod error;

/// The book from `book/` (`mdbook build book`), re-exposed chapter by
/// chapter so its code snippets compile and run under `cargo test --doc`.
pub mod guide {
    #[doc = include_str!("../../../book/src/overview.md")]
    pub mod overview {}
    #[doc = include_str!("../../../book/src/tableaux-and-words.md")]
    pub mod tableaux_and_words {}
    #[doc = include_str!("../../../book/src/moves-and-graphs.md")]
    pub mod moves_and_graphs {}
    #[doc = include_str!("../../../book/src/axioms.md")]
    pub mod axioms {}
    #[doc = include_str!("../../../book/src/tuples-and-expansions.md")]
    pub mod tuples_and_expansions {}
    #[doc = include_str!("../../../book/src/macdonald.md")]
    pub mod macdonald {}
    #[doc = include_str!("../../../book/src/campaigns.md")]
    pub mod campaigns {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}

pub use error::DegError;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, DegError>;
