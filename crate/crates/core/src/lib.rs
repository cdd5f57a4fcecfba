//! Analysis of cyclically presented groups `G_n(w)`: combinatorial
//! non-exceptionality tests on Magnus subgroup pairs of the one-relator
//! group `<x_0..x_k | w>`, infiniteness certificates built from them, and
//! independent abelianization / coset-enumeration oracles for spot checks.
//!
//! Modules follow the pipeline:
//! - [`freeword`]: letters, reduced words, cyclic words, the text grammar;
//! - [`presentation`]: one-relator spans, shift families, Magnus subsets;
//! - [`formcheck`]: the two-form decomposition search on a Magnus pair;
//! - [`certify`]: purity analysis, certificate rules and JSON output;
//! - [`oracle`]: exact circulant/Smith/resultant arithmetic and a
//!   deterministic Todd-Coxeter enumerator.

pub mod certify;
pub mod error;
pub mod formcheck;
pub mod freeword;
pub mod oracle;
pub mod presentation;

/// Exact integer scalar used by the concrete oracle entry points.
pub type Int = num_bigint::BigInt;
/// Relation matrices over [`Int`].
pub type IntMatrix = oracle::Matrix<Int>;
/// Representer polynomials over [`Int`].
pub type IntPoly = oracle::Poly<Int>;

pub use certify::{
    analyze, analyze_purity, assumptions_from_extras, certify, required_pairs, AnalysisReport,
    Assumption, Certificate, CertifyOutcome, CheckRecord, NoCertificate, PairStatus,
    PurityCandidate, PurityReport, TheoremTag,
};
pub use error::{Error, Result};
pub use formcheck::{
    brute_force_oracle, check_pair, match_form_i, match_form_ii, syllable_factorize,
    AlternationSkeleton, AnchorBlock, FormWitness, InconclusiveReason, LetterClass, MagnusPair,
    PairOutcome, PairVerdict, SearchConfig, SearchOutcome, SearchParams,
};
pub use oracle::{
    abelian_invariants, abelian_order, abelian_order_by_resultant, circulant, determinant,
    enumerate_cosets, power_minus_one, relation_matrix, representer_polynomial, resultant,
    smith_normal_form, AbelianOrder, EnumerationOutcome, Matrix, Poly, ENUMERATION_STRATEGY,
};
pub use freeword::{cyclically_reduce, CyclicWord, GenIndex, Letter, Sign, Word};
pub use presentation::{
    CyclicPresentationSpec, GapProfile, MagnusSubset, OneRelatorSpec, PresentationLine,
};
