//! Dyck-path model of type-A cluster algebras.
//!
//! Members of `S` (Dyck paths of half-length `n` with `n - 1` peaks) index the
//! indecomposable representations of an `A_{n-1}` quiver chosen by an
//! admissible subchain. Their cluster variables are computed from snake-graph
//! matchings and compared with the output of seed mutation.

pub mod cluster;
pub mod dyck;
pub mod error;
pub mod knitting;
pub mod laurent;
pub mod linalg;
pub mod nakayama;
pub mod quiver;
pub mod shiftcat;
pub mod snake;
pub mod subchain;

pub use cluster::{
    b_matrix_from_quiver, cluster_var_from_dyck, dyck_cluster_variables, enumerate_cluster_variables, eta, explore,
    mutate_matrix, mutate_seed, type_a_variable_count, verify_all, verify_bijection, word_monomial, ExchangeMatrix,
    Exploration, Seed, VerifyReport, DEFAULT_SEED_CAP,
};
pub use dyck::{
    count_peaks, enumerate_dyck, enumerate_dyck_bounded, enumerate_s, pair_decompose, peak_run, support, unitary_shift,
    validate_dyck, DyckPath, Pair, PairForm, PeakPath, Step, DEFAULT_ENUMERATION_BOUND,
};
pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use nakayama::{ar_quiver_nakayama, dyck_from_kupisch, kupisch_from_dyck, nv_objects, KupischSeries, NvSpec};
pub use quiver::{
    coxeter_translate, hom_dim_bruteforce, indecomposables, quiver_from_subchain, theta, theta_inverse, Dir, QuiverA,
    RepA, Translate,
};
pub use shiftcat::{
    ar_quiver, connected, es_successors, hom_nonzero, injective, projective, simple, ARQuiver, ShiftArrow, ShiftKind,
};
pub use snake::{
    count_matchings_transfer, enumerate_matchings, letter_path, local_transitions, restricted_words,
    snake_from_subchain, snake_from_subchain_with, word_from_matching, words_x_c, HWord, LabeledSnake, Letter,
    PerfectMatching, SnakeGraph, SnakeStep,
};
pub use subchain::{validate_subchain, AdmissibleSubchain, Role};
