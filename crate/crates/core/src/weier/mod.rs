//! Weierstrass models over `ℚ(t)`: polynomial arithmetic, the group law, torsion,
//! Kodaira fibers at every place and verification of birational maps.

pub mod curve;
pub mod expr;
pub mod fibers;
pub mod field;
pub mod maps;
pub mod models;
pub mod poly;

pub use curve::{CurvePoint, FnFieldCurve, TorsionGroup};
pub use expr::{Expr, Ring};
pub use fibers::{euler_sum, kodaira_at, singular_fibers, Place, PlaceFiber};
pub use maps::{
    verify_birational_map, verify_elliptic_parameter, verify_parametrized_component, verify_pullback,
    BirationalMap, MapReport,
};
pub use models::{builtin_maps, MapCheck, Model};
pub use poly::{Poly, RatFn};
