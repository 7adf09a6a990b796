//! Container-bay storage optimization.
//!
//! A single bay of `n1 × n2 × n3` cells stores `nc` containers, each
//! with a delivery deadline. Unloading a container means rehandling
//! everything stacked above it, so arrangements are scored by the sum of
//! `rehandles × 1/deadline` over all containers, and solvers search the
//! permutations assigning containers to a fixed canonical cell set.
//!
//! - [`hs`]: a generic harmony-search engine over discrete decision
//!   vectors, problem-agnostic behind [`hs::ProblemAdapter`].
//! - [`storage`]: the bay model, stacking constraints, fitness, repair
//!   and exact small-instance oracles.
//! - [`ga`]: a genetic-algorithm baseline over the same encoding.
//! - [`bench`] / [`plot`] / [`io`]: seeded experiment campaigns with CSV
//!   and SVG output, and the instance file format.
//!
//! Everything fitness-valued is generic over [`Scalar`] (`f32` or
//! `f64`); the aliases below pin the common `f64` instantiations.

pub mod bench;
pub mod error;
pub mod ga;
pub mod hs;
pub mod io;
pub mod plot;
pub mod scalar;
pub mod storage;
pub mod trace;

pub use error::{Error, Result};
pub use scalar::Scalar;
pub use trace::RunTrace;

/// Storage adapter computing fitness in `f64`.
pub type StorageAdapterF64 = storage::StorageAdapter<f64>;
/// Storage adapter computing fitness in `f32`.
pub type StorageAdapterF32 = storage::StorageAdapter<f32>;
/// Run trace of either solver over the storage problem, in `f64`.
pub type RunTraceF64 = trace::RunTrace<storage::ContainerId, f64>;
/// Campaign result row in `f64`.
pub type ResultRowF64 = bench::ResultRow<f64>;
