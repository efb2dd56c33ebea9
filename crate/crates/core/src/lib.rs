//! Finite Hilbert algebras and their depth.
//!
//! A Hilbert algebra is an algebra `⟨A; →⟩` that embeds into the implication
//! reduct of a Heyting algebra. This crate works with finite ones given by
//! their implication table and computes
//!
//! * the order `a ≤ b ⟺ a → b = 1`, subuniverses and isomorphisms
//!   ([`algebra`]);
//! * implicative filters, the lattice `Fi(A)`, its meet-irreducible spectrum
//!   `A_*` and the depth of `A` ([`filters`]);
//! * quotients `A/F` and the correspondence between filters above `F` and
//!   filters of `A/F` ([`quotient`]);
//! * the terms `d_n`, with the check that depth `≤ n` is the same as
//!   `A ⊨ d_n ≈ 1`, and the two constructions turning a witness for one side
//!   into a witness for the other ([`depth`]);
//! * isomorph-free enumeration of small algebras and upset Heyting algebras of
//!   posets ([`enumerate`]).
//!
//! ```
//! use hilbert_depth::{chain_algebra, depth, depth_leq_via_identity};
//!
//! let chain = chain_algebra(3); // a0 < a1 < a2 < 1
//! assert_eq!(depth(&chain).unwrap(), 3);
//! assert!(!depth_leq_via_identity(&chain, 2).holds());
//! assert!(depth_leq_via_identity(&chain, 3).holds());
//! ```
//!
//! The guide in `book/` walks through each concept with runnable snippets;
//! those snippets are compiled and run as doctests of this crate.

pub mod algebra;
pub mod depth;
pub mod enumerate;
pub mod error;
pub mod filters;
pub mod quotient;
pub mod subset;
pub mod term;

pub use algebra::{
    chain_algebra, validate, Element, FiniteHilbertAlgebra, ValidationReport, Violation,
};
pub use depth::{
    chain_from_counterexample, d_term, depth_leq_via_identity, subalgebra_from_chain,
    verify_main_theorem, ChainWitness, DepthReport, DepthRow, SubalgebraChainWitness,
};
pub use enumerate::{
    enumerate_hilbert, enumerate_hilbert_with_cap, enumerate_posets, heyting_from_poset,
    reduct_depth_vs_poset, HeytingAlgebra, Poset, PosetDepthComparison,
};
pub use error::{Error, Result};
pub use filters::{
    all_filters, depth, fg_closure, fg_extra_formula_member, fg_formula_member, fg_with_extra,
    is_implicative_filter, is_meet_prime, meet_irreducibles, separate, spectrum, Filter,
    FilterLattice, SpectrumPoset,
};
pub use quotient::{
    correspondence_check, quotient, theta, Congruence, Correspondence, QuotientResult,
};
pub use subset::Subset;
pub use term::{eval_term, satisfies_identity, IdentityVerdict, Term};

/// The guide's chapters, compiled so their snippets run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/terms.md")]
    mod terms {}
    #[doc = include_str!("../../../book/src/filters.md")]
    mod filters {}
    #[doc = include_str!("../../../book/src/quotients.md")]
    mod quotients {}
    #[doc = include_str!("../../../book/src/depth.md")]
    mod depth {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/counts.md")]
    mod counts {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
