//! Coadjoint-orbit analysis of the one-dimensional static kinematical
//! group.
//!
//! The static group is the abelian group of boosts, space translations
//! and time translations with all brackets zero. Its physics lives in
//! the central extension: three central generators turn the trivial
//! bracket table into [K,P] = M, [K,E] = Y, [P,E] = F, and the dual of
//! that extension splits into eight coadjoint-orbit classes, four
//! massive and four massless, each a classical elementary system with its
//! own invariants, canonical chart, momentum map and Hamiltonian flow.
//!
//! The crate provides, layer by layer:
//!
//! - [`algebra`]: structure-constant tables for the eleven
//!   three-dimensional kinematical algebras plus the extension, with
//!   Jacobi checking and a step-2 truncated BCH product;
//! - [`group`]: the group law, its 2-cocycles c₁/c₂/c and the
//!   trivializing map b, the extended multiplication law, and the
//!   adjoint action;
//! - [`coadjoint`]: the duality pairing, coadjoint action, Kirillov
//!   form, eight-class orbit classification and chart embeddings;
//! - [`dynamics`]: symplectic realizations, momentum maps,
//!   Hamiltonians, Poisson brackets, flows and action kernels;
//! - [`verify`]: seeded property suites over all of the above;
//! - [`tables`]: the massive/massless summary tables with corrected
//!   cells flagged against the [`errata`] ledger;
//! - [`cli`]: the `kinstatic` command-line front end.
//!
//! Every value is immutable after construction and every operation is a
//! pure function, so the whole crate is safe to use from multiple
//! threads without synchronization.
//!
//! The runnable examples under `examples/` walk through each capability;
//! start with `algebra_registry` and `coadjoint_orbits`.

pub mod algebra;
pub mod cli;
pub mod coadjoint;
pub mod dynamics;
pub mod errata;
pub mod error;
pub mod group;
pub mod tables;
pub mod verify;

pub use algebra::{registry_get, AlgebraName, AlgebraParams, AlgebraVector, BracketTable};
pub use coadjoint::{
    classify, coadjoint_act, from_chart, kirillov, pair, to_chart, ChartKind, ChartPoint,
    DualVector, Orbit, OrbitClass,
};
pub use dynamics::{
    act_point, action_kernel, flow, hamiltonian, momentum_map, poisson, realize, vector_field,
    AffineObservable, FlowMethod, Generator, Realization,
};
pub use error::{Error, Result};
pub use group::{adjoint, b_map, cocycle, CocycleKind, ExtGroupElement, GroupElement};
