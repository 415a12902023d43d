//! Exact-arithmetic toolkit for real Schubert problems on lines in `RP^3`
//! and convexity certificates for projective curves.
//!
//! Everything is computed over arbitrary-precision rationals (or a single
//! quadratic extension where a discriminant forces one); there is no
//! floating point anywhere in the computational path.

pub mod error;
pub mod rat;
pub mod quadext;
pub mod matrix;
pub mod unipoly;
pub mod trigpoly;
pub mod multipoly;
pub mod projective;
pub mod totalpos;
pub mod schubert;
pub mod wronski;
pub mod developable;
pub mod json;

pub use error::Error;
pub use rat::Rat;
