//! Exact computational Lie theory at desk scale.
//!
//! The crate provides exact rational realizations of the irreducible root
//! systems, Weyl-group orbit machinery, Dynkin diagram folding with the
//! extended McKay data, Weyl-orbit factorization of spectral curves,
//! dimension bookkeeping for Hitchin bases and cameral/spectral curves,
//! adjoint quotients with Kostant and Slodowy slices for classical matrix
//! algebras, ADE deformation families with exact discriminants, and a small
//! floating-point module for elliptic period integrals and the
//! Seiberg-Witten derivative identity.
//!
//! Everything outside [`swdiff`] is exact: scalars are arbitrary-precision
//! rationals and every identity is checked as an equality, never up to a
//! tolerance. All values are immutable after construction and all operations
//! are pure functions.
//!
//! The crate is `no_std`-compatible (`default-features = false`,
//! `features = ["libm"]`); it only needs `alloc`.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod adjquot;
pub mod exact;
pub mod folding;
pub mod hitchin;
pub mod rootsys;
pub mod singular;
pub mod spectral;
pub mod swdiff;
pub mod weyl;

pub use exact::{rat, rint, Rat, RatMatrix, RatPoly, RatVec};
pub use rootsys::{DynkinType, Family, RootSystem};
