//! Numeric lower bounds for shortest opaque sets (barriers) of the unit
//! disc and the centered unit square.
//!
//! A *barrier* for a convex body `K` is a set that meets every line meeting
//! `K`. The crate evaluates the waste machinery (Crofton-type projection
//! integrals, enlarged bodies `K_zeta`, strip separation) that lifts the
//! classical half-perimeter lower bound, optimizes the free parameters of
//! the disc case, and emits certificates with every intermediate quantity.
//!
//! Entry points:
//! - [`disc::disc_lower_bound`] / [`disc::optimize`] for the unit disc,
//! - [`square::square_case_split`] for the unit square,
//! - [`barrier::validate`] for sampling-based opacity checks of candidate
//!   barriers,
//! - [`cli::run`] behind the `opaque-bounds` binary.

// `!(x >= 0.0)` is used deliberately throughout to reject NaN along with
// out-of-range values
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod barrier;
pub mod cli;
pub mod disc;
pub mod geometry;
pub mod kzeta;
pub mod square;
pub mod waste;

use thiserror::Error;

/// Errors shared across the bound pipelines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("segment {index} is not outside K_zeta")]
    SegmentInsideKZeta { index: usize },
    #[error("vacuous regime: {0}")]
    Vacuous(String),
    #[error("barrier file: {0}")]
    BarrierFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
