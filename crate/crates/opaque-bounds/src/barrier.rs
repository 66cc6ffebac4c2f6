//! Candidate barriers: representation, length measurement, sampling-based
//! opacity validation, and the known constructions from the summary table.
//!
//! The validator is a falsifier, not a prover: it sweeps a dense grid of
//! lines through the body and reports every line missed by the barrier,
//! with exact line parameters for inspection.

use crate::geometry::{
    line_hits_arc, line_hits_segment, unit_disc_projection, unit_square_projection, Arc,
    LineByAngle, Segment, Vec2,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, SQRT_2, TAU};

/// Inset from tangency when sampling offsets, to avoid degenerate misses.
const TANGENT_INSET: f64 = 1e-9;

/// A finite union of segments and arcs.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Barrier {
    pub label: String,
    #[serde(default)]
    pub segments: Vec<Segment>,
    #[serde(default)]
    pub arcs: Vec<Arc>,
}

impl Barrier {
    pub fn new(label: impl Into<String>) -> Self {
        Barrier {
            label: label.into(),
            segments: Vec::new(),
            arcs: Vec::new(),
        }
    }

    pub fn hits(&self, line: &LineByAngle) -> bool {
        self.segments.iter().any(|s| line_hits_segment(line, s))
            || self.arcs.iter().any(|a| line_hits_arc(line, a))
    }
}

/// Sum of primitive lengths.
pub fn total_length(b: &Barrier) -> f64 {
    let seg: f64 = b.segments.iter().map(Segment::length).sum();
    let arc: f64 = b.arcs.iter().map(Arc::length).sum();
    seg + arc
}

/// The body a barrier is validated against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ValidationBody {
    /// Unit disc centered at the origin.
    Disc,
    /// Centered unit square `[-1/2, 1/2]^2`.
    UnitSquare,
}

impl ValidationBody {
    pub fn projection(&self, alpha: f64) -> crate::geometry::Interval {
        match self {
            ValidationBody::Disc => unit_disc_projection(alpha),
            ValidationBody::UnitSquare => unit_square_projection(alpha),
        }
    }

    /// Half of the body's perimeter (the classical lower bound).
    pub fn half_perimeter(&self) -> f64 {
        match self {
            ValidationBody::Disc => PI,
            ValidationBody::UnitSquare => 2.0,
        }
    }
}

/// Outcome of an opacity sweep.
#[derive(Clone, Debug, Serialize)]
pub struct OpacityReport {
    pub body: ValidationBody,
    pub samples: usize,
    pub missed: usize,
    /// First few missed lines, ordered by `(alpha, offset)`.
    pub missed_examples: Vec<LineByAngle>,
    pub passed: bool,
}

/// Sweeps `n_alpha` directions over `[0, pi)` and `n_offset` offsets
/// strictly inside the body's projection at each direction, and tests
/// every line against the barrier.
pub fn validate(
    b: &Barrier,
    body: ValidationBody,
    n_alpha: usize,
    n_offset: usize,
) -> OpacityReport {
    assert!(n_alpha >= 1 && n_offset >= 1);
    let rows: Vec<Vec<LineByAngle>> = (0..n_alpha)
        .into_par_iter()
        .map(|i| {
            let alpha = PI * i as f64 / n_alpha as f64;
            let clip = body.projection(alpha);
            let lo = clip.lo + TANGENT_INSET;
            let hi = clip.hi - TANGENT_INSET;
            let mut misses = Vec::new();
            for k in 0..n_offset {
                let offset = lo + (hi - lo) * (k as f64 + 0.5) / n_offset as f64;
                let line = LineByAngle::new(alpha, offset);
                if !b.hits(&line) {
                    misses.push(line);
                }
            }
            misses
        })
        .collect();
    let missed: usize = rows.iter().map(Vec::len).sum();
    let missed_examples: Vec<LineByAngle> = rows.into_iter().flatten().take(10).collect();
    OpacityReport {
        body,
        samples: n_alpha * n_offset,
        missed,
        missed_examples,
        passed: missed == 0,
    }
}

/// The boundary-circle barrier of the unit disc (length `2 pi`).
pub fn disc_boundary_barrier() -> Barrier {
    let mut b = Barrier::new("disc boundary");
    b.arcs.push(Arc::new(Vec2::new(0.0, 0.0), 1.0, 0.0, TAU));
    b
}

/// The four-sided boundary barrier of the unit square (length 4).
pub fn square_boundary_barrier() -> Barrier {
    let mut b = Barrier::new("square boundary");
    for i in 0..4 {
        b.segments.push(Segment::new(
            crate::kzeta::square_vertex(i),
            crate::kzeta::square_vertex(i + 1),
        ));
    }
    b
}

/// The classical short barrier for the unit square, of length
/// `sqrt(2) + sqrt(6)/2 ≈ 2.639`: the Steiner tree of three vertices
/// (three segments meeting at 120° in the Fermat point) plus half a
/// diagonal to the fourth vertex.
pub fn jones_square_barrier() -> Barrier {
    let x0 = crate::kzeta::square_vertex(0);
    let x1 = crate::kzeta::square_vertex(1);
    let x2 = crate::kzeta::square_vertex(2);
    let x3 = crate::kzeta::square_vertex(3);
    // Fermat point of the right isosceles triangle {x1, x2, x3}: on the
    // diagonal through x2, at -(sqrt(3)/6)(1, 1)
    let f = 3.0_f64.sqrt() / 6.0;
    let fermat = Vec2::new(-f, -f);
    let mut b = Barrier::new("steiner tree + half diagonal");
    b.segments.push(Segment::new(x1, fermat));
    b.segments.push(Segment::new(x2, fermat));
    b.segments.push(Segment::new(x3, fermat));
    b.segments.push(Segment::new(x0, Vec2::new(0.0, 0.0)));
    b
}

/// Closed form of the [`jones_square_barrier`] length.
pub fn jones_square_barrier_length() -> f64 {
    SQRT_2 + 6.0_f64.sqrt() / 2.0
}

/// Checks the classical half-perimeter bound on a validated barrier.
pub fn jones_length_lower_check(b: &Barrier, body: ValidationBody) -> bool {
    total_length(b) >= body.half_perimeter()
}
