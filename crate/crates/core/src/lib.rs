//! Combinatorics and numerics for Gelfand-Cetlin systems on co-adjoint
//! SO(n)-orbits.
//!
//! The crate has four layers:
//!
//! * [`ladder`] builds the ladder diagram of a pair `(n, lambda)` and
//!   enumerates its faces (isogram + coastline pairs) together with their
//!   partial order and dimensions.
//! * [`polytope`] is an exact-arithmetic oracle: it builds the defining
//!   half-space system of the Gelfand-Cetlin polytope, enumerates its face
//!   lattice by brute force and checks the diagram/polytope correspondence.
//! * [`fiber`] computes the topology of the fiber over a point or a face:
//!   per-stage sphere factors, the total dimension, the block decomposition
//!   of anti-diagonal strips, and the L/I-block filling that certifies
//!   Lagrangian faces.
//! * [`numerics`] samples orbit matrices, evaluates the moment map through
//!   eigenvalues and Pfaffians, and reconstructs matrices over a given point
//!   of the polytope.
//!
//! [`verify`] bundles the cross-checks between these layers; [`reference`]
//! holds slow brute-force implementations used as independent test oracles.

pub mod error;
pub mod fiber;
pub mod ladder;
pub mod numerics;
pub mod polytope;
pub mod rational;
pub mod reference;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Q;
