//! Exact mixed multiplicities of multigraded monomial modules and ideal
//! systems.
//!
//! Everything is computed over an arbitrary field without ever choosing
//! one: monomial data reduces all lengths and Hilbert functions to lattice
//! point counts, which this crate evaluates exactly and turns into Hilbert
//! polynomials by validated finite-difference interpolation.
//!
//! The `examples/` directory is the guided tour, one program per
//! capability:
//!
//! - `graded_pieces` — rings, ideals, modules, and their invariants
//! - `hilbert_polynomial` — validated interpolation of Hilbert polynomials
//! - `module_multiplicities` — mixed multiplicities of multigraded modules
//!   and the rank transmutation
//! - `ideal_multiplicities` — ideal systems, fiber lengths, types, and the
//!   dropped-ideal identity
//! - `rees_multiplicities` — multi-Rees module multiplicities and the sum
//!   identity
//! - `ring_extensions` — module-finite extensions, local multiplicities,
//!   and length decomposition
//! - `scenario_verify` — batch verification from scenario files
//!
//! The same machinery is scriptable through the `mixmult` binary; see the
//! `scenario` module for the file format it consumes.

pub mod error;
pub mod extension;
pub mod hilbert;
pub mod ideal;
pub mod mixed;
pub mod module;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod ring;
pub mod scenario;
pub mod verify;

pub use error::{Error, Result};
