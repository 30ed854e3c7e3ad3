//! Exact representation theory of the pointed Hopf algebras `A(lambda, mu)`
//! over the group `C3 x| C_{2l}`.

pub mod battery;
pub mod cli;
pub mod error;
pub mod grp;
pub mod homext;
pub mod linalg;
pub mod quiverrt;
pub mod repmod;
pub mod scalars;
pub mod smash;
pub mod tenscat;

pub use error::{Error, Result};
