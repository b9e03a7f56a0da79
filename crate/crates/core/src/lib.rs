//! Combinatorics and exact linear algebra for wonderful compactifications of
//! adjoint semisimple groups.
//!
//! Root systems, Weyl groups, the orbit poset, Betti numbers from a
//! torus-fixed-point decomposition, the Weyl-chamber fan, restricted roots of
//! a symmetric pair, and explicit Lie-algebra checks in small rank.

#![cfg_attr(not(test), no_std)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod bbcoh;
pub mod error;
pub mod linalg;
pub mod orbits;
pub mod poly;
pub mod realization;
pub mod rootsys;
pub mod symmetric;
pub mod toricfan;
pub mod weyl;

pub use error::{Error, Result};
pub use orbits::{OrbitDatum, OrbitPoset, Subset};
pub use poly::Poly;
pub use rootsys::{CartanType, Coweight, Family, RootSystem, RootVector, SimpleType};
pub use weyl::{WeylElement, WeylGroup};
