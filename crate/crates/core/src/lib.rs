//! Spherical designs of harmonic index `t`.
//!
//! A finite set `X` on `S^{n-1}` is a harmonic index `t`-design when every
//! harmonic homogeneous polynomial of degree exactly `t` sums to zero over
//! `X`. This crate evaluates the reproducing kernel `Q_{n,t}`, builds and
//! verifies such designs, computes the Fisher-type lower bound `b_{n,t}` with
//! its large-`t` Bessel limit, and runs exact feasibility tests for tight
//! designs.

pub mod bounds;
pub mod designs;
pub mod error;
pub mod exactnum;
pub mod orthopoly;
pub mod tightness;

pub use error::{Error, Result};
