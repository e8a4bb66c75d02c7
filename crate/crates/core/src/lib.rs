//! Set-valued optimization under the set less order relation.
//!
//! Sets are compared through the Gerstewitz vectorizing function
//! `w_e(A, B) = (-G^ℓ_e(A, B), G^u_e(B, A))` and its one-argument form
//! `v_e(A) = w_e({0}, A)`. A finite family of sets can then be solved by
//! direct pairwise comparison or by reduction to vector optimization problems
//! in `R²`.
//!
//! * [`geometry`]: vectors, polyhedral ordering cones, Pareto filtering.
//! * [`sets`]: set representations and their finite surrogates.
//! * [`scalarization`]: `φ`, `G^ℓ`, `G^u`, `w_e`, `v_e`.
//! * [`set_orders`]: set relations and family solvers.
//! * [`cli`]: problem files, built-in problems and command dispatch.

pub mod cli;
pub mod error;
pub mod geometry;
pub mod scalarization;
pub mod set_orders;
pub mod sets;

pub use error::{Error, Result};
pub use geometry::{Cone, ConeKind, Direction, Sense, Vector};
pub use scalarization::VecValue;
pub use set_orders::{CompareMethod, Family, FamilyEntry, OrderKind, Relation, Report};
pub use sets::{Cloud, DiscretizationPolicy, Shape, Side};
