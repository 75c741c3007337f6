//! Exact construction and verification of the canonical complexes attached
//! to a map of free modules, generalizing Eagon–Northcott and Buchsbaum–Rim.

pub mod complexes;
pub mod differentials;
pub mod error;
pub mod exactnum;
pub mod homology;
pub mod io;
pub mod multilinear;
pub mod polyring;
pub mod verify;

pub use error::{Error, Result};
