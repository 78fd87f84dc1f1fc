//! Shipped desk-scale fixtures: the A1 and A2 quiver models and standard
//! stability conditions on them. The JSON under `models/` is the single
//! source; the library embeds it so tests and the acceptance battery need no
//! filesystem access.

use crate::charge::CentralCharge;
use crate::model::CategoryModel;
use crate::stability::{compute_simples, exact_charge, standard_heart_members, Heart, StabilityCondition};

pub const A1_JSON: &str = include_str!("../../../models/a1.json");
pub const A2_JSON: &str = include_str!("../../../models/a2.json");

pub fn a1_model() -> CategoryModel {
    CategoryModel::from_json(A1_JSON).expect("shipped a1 fixture parses")
}

pub fn a2_model() -> CategoryModel {
    CategoryModel::from_json(A2_JSON).expect("shipped a2 fixture parses")
}

/// The standard heart (all indecomposables at shift 0) with derived simples.
pub fn standard_heart(model: &CategoryModel) -> Heart {
    let members = standard_heart_members(model);
    let simples = compute_simples(model, &members);
    Heart::new("H0", members, simples)
}

/// A2 with Z(S1) = i, Z(S2) = 1 + i: X is semistable.
pub fn a2_std_stability(model: &CategoryModel) -> StabilityCondition {
    StabilityCondition::new(standard_heart(model), exact_charge(&[(0, 1, 1, 1), (1, 1, 1, 1)]))
}

/// A2 with Z(S1) = 1 + i, Z(S2) = i: X destabilized by S2.
pub fn a2_flip_stability(model: &CategoryModel) -> StabilityCondition {
    StabilityCondition::new(standard_heart(model), exact_charge(&[(1, 1, 1, 1), (0, 1, 1, 1)]))
}

/// A1 with Z(S) = i.
pub fn a1_std_stability(model: &CategoryModel) -> StabilityCondition {
    StabilityCondition::new(standard_heart(model), exact_charge(&[(0, 1, 1, 1)]))
}

pub fn a2_charge(s1: (i64, i64, i64, i64), s2: (i64, i64, i64, i64)) -> CentralCharge {
    exact_charge(&[s1, s2])
}
