//! Finite-model engine for definability spaces (reducts) of discrete linear
//! orders.
//!
//! The engine evaluates order-definable relations on finite linear orders and
//! on finite grids of vertical chains, computes automorphism groups by
//! backtracking, decides definability by automorphism invariance and lays the
//! resulting spaces out as Hasse diagrams.
//!
//! Module map:
//!
//! * [`perm`] and [`structure`]: permutations, groups, relations and finite
//!   structures.
//! * [`logic`]: first-order formulas with a parser, printer and table-based
//!   evaluator.
//! * [`relations`]: direct constructors for the named relations.
//! * [`grid`]: vertical chains, permutation classification, initiation,
//!   indistinguishability, boundaries and block placement.
//! * [`galois`]: preservation, automorphism groups, definability and lattices.
//! * [`verify`]: the reproduction suite behind `reductlab verify-paper`.

pub mod brute;
pub mod dot;
pub mod error;
pub mod galois;
pub mod grid;
pub mod logic;
pub mod perm;
pub mod relations;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use galois::{
    aut_group, definable, hasse, preserves, space_compare, strictness_witnesses, Definability,
    DefinabilitySpace, HasseDiagram, Inclusion, Witness,
};
pub use grid::{ExtendedInt, GridStructure, PermClass, Section, SectionCondition};
pub use logic::{parse, DefinedRelation, Formula};
pub use perm::{generate_group, Permutation, PermutationGroup};
pub use relations::RelationPreset;
pub use structure::{FiniteStructure, Relation, StructureKind};

/// Runs `f` on a rayon pool with exactly `jobs` worker threads.
///
/// Every parallel section of the engine merges its results canonically, so
/// the value returned does not depend on `jobs`.
pub fn with_jobs<R, F>(jobs: usize, f: F) -> Result<R>
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Input(format!("cannot build thread pool: {e}")))?;
    Ok(pool.install(f))
}
