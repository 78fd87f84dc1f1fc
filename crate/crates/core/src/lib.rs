//! Desk-scale laboratory for stability conditions on finite models of
//! triangulated categories.
//!
//! The crate presents a triangulated category as finite data (indecomposables
//! with lattice classes, exact triangles, a Hom-vanishing table), derives
//! Harder-Narasimhan filtrations, phases and masses from it, and builds the
//! analytic superstructure on top: the generalized metric on stability
//! conditions, the rotate-and-rescale action and its quotient, the universal
//! cover of GL2+(R) with its displacement metric and hyperbolic quotient,
//! Cauchy-sequence limits, and the tilting calculus of hearts.
//!
//! With the default `parallel` feature, grid sweeps and property batteries
//! run on rayon; reductions are order-independent (max/min), so results do
//! not depend on the schedule. Disabling the feature swaps in sequential
//! loops with identical results.

pub mod charge;
pub mod error;
pub mod fixtures;
pub mod model;
pub mod oracle;
pub mod phase;
pub mod qi;
pub mod report;
pub mod stability;
pub mod sweep;
pub mod tol;

pub use charge::{CentralCharge, ChargeMode, ChargeValue};
pub use error::{Error, Result};
pub use model::{CategoryModel, IndecRef, LatticeClass, ObjectExpr};
pub use phase::Phase;
pub use oracle::{oracle_hn, validate_model, QuiverKind, QuiverRep};
pub use report::{Check, Report};
pub use stability::{
    charge_of, check_stability_axioms, hn_filtration, is_semistable, phase_data, Heart,
    HnFactor, HnFiltration, PhaseData, StabilityCondition,
};
