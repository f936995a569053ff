//! Gauss diagrams, planarity of closed curves, and meander matrices.

pub mod bitmatrix;
pub mod braid;
pub mod cli;
pub mod error;
pub mod gauss;
pub mod limits;
pub mod meander;
pub mod realize;
pub mod render;

pub use bitmatrix::{BitMatrix, MatrixRecord};
pub use error::{BraidError, DeltaFillError, GaussError, LimitExceeded, MatrixError, MeanderError};
pub use gauss::{ChordDiagram, GaussCode};
pub use limits::Limits;
