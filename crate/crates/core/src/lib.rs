//! Exact tools for lines and singular conics on projective varieties cut out by
//! homogeneous equations.
//!
//! The crate is layered bottom-up:
//!
//! - [`exactmath`]: rationals and prime-field residues.
//! - [`multipoly`]: sparse polynomials, the expression parser, projective points
//!   and line-pencil expansion.
//! - [`groebner`]: Buchberger's algorithm, normal forms, elimination, and the
//!   dimension and degree of homogeneous ideals.
//! - [`variety`]: variety specs, numerical criteria and the line-family classifier.
//! - [`linelocus`]: the cone of lines through a point.
//! - [`conicfinder`]: singular conics through two points and their count.
//! - [`fforacle`]: exhaustive finite-field ground truth.

pub mod conicfinder;
pub mod error;
pub mod exactmath;
pub mod fforacle;
pub mod groebner;
pub mod linalg;
pub mod linelocus;
pub mod multipoly;
pub mod variety;

pub use error::{Error, Result};
