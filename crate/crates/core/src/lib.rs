//! Exact arithmetic for elliptic fibrations of the discriminant −12 K3 surface.
//!
//! The crate is split along the two halves of the computation:
//!
//! * the lattice half ([`arith`], [`rootlat`], [`niemeier`], [`frame`], [`mwl`]) builds
//!   Niemeier lattices from glue codes, embeds `A5 ⊕ A1`, and reads off the frame,
//!   torsion and Mordell–Weil lattice of the resulting fibration;
//! * the curve half ([`weier`]) works with Weierstrass models over `ℚ(t)`: group law,
//!   torsion, Kodaira fibers and verification of birational maps.
//!
//! Everything is exact (big rationals); there is no floating point anywhere.
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod arith;
pub mod error;
pub mod frame;
pub mod mwl;
pub mod niemeier;
pub mod rootlat;
pub mod weier;

pub use arith::{Int, IntMatrix, Rat, RatMatrix};
pub use error::{Error, Result};
