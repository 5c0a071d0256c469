//! Single-qubit gates from braids of three Fibonacci anyons.
//!
//! Words are products of the rotated generators `σ̃_1, σ̃_2`, evaluated with
//! the first factor rightmost and compared to targets with the
//! phase-invariant distance `ε = √(1 - |Tr(U V†)|/2)`.

mod generators;
mod reference;
mod search;
mod targets;
mod unitary;
mod word;

pub use generators::{rotated_generators, rotated_generators_from_tableau, GeneratorSet};
pub use reference::{
    reference_braidwords, reference_sweep, t_gate_length_31_reading, verify_reference_braidword, Convention,
    ConventionResult, GeneratorChoice, ReferenceBraidword, ReferenceVerification, WordOrder, QUOTE_MATCH_TOL,
};
pub use search::{
    exhaustive_search, exhaustive_word_count, random_weave_search, SearchConfig, SynthesisResult,
    BATCHES_PER_WAVE, DEFAULT_NODE_BUDGET, MAX_EXHAUSTIVE_LENGTH, MAX_SEARCH_LENGTH, REVERIFY_TOL,
};
pub use targets::{GateTarget, TARGET_UNITARITY_TOL};
pub use unitary::{distance, distance_unchecked, U2, UNITARITY_TOL};
pub use word::{evaluate, format_word, parse_word, BraidWord, Factor};
