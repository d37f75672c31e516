//! Exact-arithmetic toolkit for cowreaths, entwined modules, wreaths, smash
//! products, corings and their Frobenius / separability theory, instantiated
//! in the monoidal category of finite-dimensional vector spaces over Q or
//! F_p.
//!
//! Every structure is a typed morphism backed by an exact matrix, every
//! axiom is checked as an exact matrix identity, and every solver is a
//! rational linear-algebra computation, so all verdicts are decidable and
//! reproducible bit for bit.

pub mod error;
pub mod exactlin;
pub mod moncat;
pub mod report;
pub mod structures;

pub mod entwine;
pub mod wreath;

pub mod coring;
pub mod frobsep;

pub mod fixtures;
pub mod workspace;

pub use error::{Error, Result};
