//! Exact computation of Garnir relations in generalized Specht modules of
//! Weyl groups.
//!
//! The crate is layered bottom-up: [`rootsys`] builds root systems and
//! subsystems, [`weyl`] enumerates the Weyl group, [`tableaux`] models
//! Δ-tableaux and tabloids, [`specht`] the permutation module and its
//! polytabloids, and [`garnir`] the straightening machinery. [`verify`]
//! bundles exhaustive checks of all of the above.

pub mod error;
pub mod garnir;
pub mod linalg;
pub mod rational;
pub mod rootsys;
pub mod specht;
pub mod tableaux;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use rational::Rational;
pub use rootsys::{build_root_system, inner, reflect, CartanType, RootId, RootSystem, RootVector, Subsystem};
pub use weyl::{generate_group, CosetDecomposition, ElementId, GroupConfig, Order, ReflectionSubgroup, WeylGroup};
pub use specht::{all_pairs, kappa, AlgebraElement, Classification, ModuleVector, SpechtSpan, SystemPair};
pub use tableaux::{Tableau, Tabloid, TabloidSpace};
pub use garnir::{peel_product, product_set, GarnirContext, GarnirReport, Pairing, Straightening};
pub use verify::{run_all, run_suite, worked_example, Suite, SuiteReport, WorkedExample};
