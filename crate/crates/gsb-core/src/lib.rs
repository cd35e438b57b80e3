//! Noncommutative Gröbner–Shirshov engine for monoid and group
//! presentations, with Coxeter presets, normal-form counting, and an
//! independent permutation-group oracle.

pub mod automaton;
pub mod completion;
pub mod coxeter;
pub mod error;
pub mod families;
pub mod growth;
pub mod io;
pub mod oracle;
pub mod poly;
pub mod rewrite;
pub mod word;

pub use completion::{
    compositions, interreduce, is_gs_basis, shirshov_complete, shirshov_complete_with, verify,
    ClosureReport, CompletionReport, CompletionStatus, CompositionCandidate, CompositionKind,
    Limits, Progress, RoundEvent,
};
pub use coxeter::{
    builtin_preset, presentation_from_matrix, CoxeterMatrix, DiagramPreset, Presentation,
    PresetType,
};
pub use error::{Error, Result};
pub use families::{
    claimed_basis, corrected_basis, screen_instances, verify_against_claims, word_descending,
    word_skip, ClaimedBasis, ClaimsReport, FamilyInstance, InstanceStatus, Variant,
};
pub use growth::{
    build_avoidance, count_by_length, enumerate_normal_forms, group_order, AvoidanceAutomaton,
    GroupOrder, GrowthSeries,
};
pub use io::{
    format_basis_file, format_presentation, parse_basis_file, parse_matrix_json,
    parse_presentation, read_basis_file, write_basis_file,
};
pub use oracle::{
    cartan_matrix, cross_check, root_system, schreier_sims_order, word_to_perm, CoxeterOracle,
    CrossCheckReport, MismatchWitness, PermGroup, RootSystem,
};
pub use poly::{Poly, Rule, Term};
pub use rewrite::{Basis, LeadIndex, Occurrence};
pub use word::{Alphabet, Generator, Word};
