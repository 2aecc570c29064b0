//! Core algebra and geometry for enumerating isotopy classes of equivariant
//! tilings of hyperbolic surfaces: orbifold symbols and group presentations,
//! free-group automorphisms for mapping-class-group generators, isometries of
//! the Poincaré disc, realizations of stellate groups commensurate with the
//! `*246` triangle group, and breadth-first enumeration with numeric
//! deduplication.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live in
//! the companion `orbitile` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod enumeration;
pub mod hyperbolic;
pub mod mcg;
pub mod orbifold;
pub mod realization;
pub mod render;
pub mod words;

/// Numeric tolerances used across the crate.
pub mod tol {
    /// Band for isometry classification decisions (elliptic/parabolic/hyperbolic).
    pub const CLASSIFY: f64 = 1e-9;
    /// Allowed unit-determinant drift before renormalization is considered broken.
    pub const DETERMINANT: f64 = 1e-12;
    /// Residual bound for a realized tuple to pass verification.
    pub const VERIFY: f64 = 1e-9;
    /// Residual bound when evaluating automorphism images on a tuple.
    pub const ACT_RESIDUAL: f64 = 1e-6;
    /// Quantization step for dedup signatures, in disc coordinates.
    pub const SIG_QUANTUM: f64 = 1e-6;
    /// Fine tolerance used to re-check signature collisions.
    pub const SIG_FINE: f64 = 1e-9;
    /// Tolerance for area comparisons (Gauss-Bonnet checks).
    pub const AREA: f64 = 1e-6;
    /// Margin keeping constructed points strictly inside the unit disc.
    pub const DISC_MARGIN: f64 = 1e-12;
}
