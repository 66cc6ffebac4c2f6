//! Executable waste bounds: closed forms lifting the half-perimeter bound
//! and a numeric check of the projection-integral inequality for barrier
//! parts outside `K_zeta`.

use crate::geometry::{
    project_segment, simpson, union_measure, unit_disc_projection, unit_square_projection,
    Interval, Segment,
};
use crate::kzeta::{point_in_kzeta, KZetaBody};
use crate::{Error, Result};
use serde::Serialize;
use std::f64::consts::PI;

/// Quadrature tolerance for the integral inequality check.
pub const INTEGRAL_TOLERANCE: f64 = 1e-4;

/// Default Simpson subinterval count for the integral check.
pub const SIMPSON_NODES: usize = 2048;

/// Where a waste gain comes from, together with the inputs it was
/// evaluated at.
#[derive(Clone, Copy, Debug, Serialize)]
#[serde(tag = "source", rename_all = "snake_case")]
pub enum GainSource {
    /// Barrier length outside `K_zeta`.
    Outside { len_outside: f64, zeta: f64 },
    /// Strip-separated facing barrier parts.
    Separated { eta: f64, gamma: f64, diameter: f64 },
}

/// A lower-bound improvement `|B| - p >= delta`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct WasteGain {
    pub delta: f64,
    #[serde(flatten)]
    pub source: GainSource,
}

/// Gain from barrier length outside `K_zeta`:
/// `delta = len * (1 - cos(zeta/2))`.
pub fn corollary1_gain(len_outside: f64, zeta: f64) -> Result<WasteGain> {
    if !(len_outside >= 0.0) {
        return Err(Error::InvalidParameter {
            name: "len_outside",
            value: len_outside,
            reason: "length must be nonnegative",
        });
    }
    if !(0.0..PI).contains(&zeta) {
        return Err(Error::InvalidParameter {
            name: "zeta",
            value: zeta,
            reason: "must lie in [0, pi)",
        });
    }
    Ok(WasteGain {
        delta: len_outside * (1.0 - (0.5 * zeta).cos()),
        source: GainSource::Outside { len_outside, zeta },
    })
}

/// Gain from a strip-separated facing pair:
/// `delta = (eta sin(gamma))^2 / (2 D)` where `D` is the diameter of a disc
/// containing both sets.
pub fn corollary2_gain(eta: f64, gamma: f64, diameter: f64) -> Result<WasteGain> {
    if !(eta >= 0.0) {
        return Err(Error::InvalidParameter {
            name: "eta",
            value: eta,
            reason: "must be nonnegative",
        });
    }
    if !(gamma > 0.0) {
        return Err(Error::InvalidParameter {
            name: "gamma",
            value: gamma,
            reason: "must be positive",
        });
    }
    if !(diameter > 0.0) {
        return Err(Error::InvalidParameter {
            name: "D",
            value: diameter,
            reason: "must be positive",
        });
    }
    let w = eta * gamma.sin();
    Ok(WasteGain {
        delta: w * w / (2.0 * diameter),
        source: GainSource::Separated {
            eta,
            gamma,
            diameter,
        },
    })
}

/// Disc specialization of the outside gain:
/// `delta = len * r / (1 + r)`.
pub fn prop2_gain(len_outside: f64, r: f64) -> Result<WasteGain> {
    if !(len_outside >= 0.0) {
        return Err(Error::InvalidParameter {
            name: "len_outside",
            value: len_outside,
            reason: "length must be nonnegative",
        });
    }
    if !(r >= 0.0) {
        return Err(Error::InvalidParameter {
            name: "r",
            value: r,
            reason: "enlargement must be nonnegative",
        });
    }
    let zeta = crate::kzeta::disc_zeta_of_r(r)?;
    Ok(WasteGain {
        delta: len_outside * r / (1.0 + r),
        source: GainSource::Outside { len_outside, zeta },
    })
}

/// Result of the projection-integral inequality check.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct IntegralCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub ok: bool,
}

/// Numerically verifies, for segments outside `K_zeta`, that
/// `∫ |B'(α) ∩ K(α)| dα <= 4 |B'| cos(zeta/2)`.
///
/// The integral runs over `[-pi, pi]` with composite Simpson quadrature.
/// Segments are required to lie outside `K_zeta`; endpoints and midpoint
/// are checked (sufficient for segments, by convexity of `K_zeta`).
pub fn lemma6_integral_check(
    segments: &[Segment],
    body: &KZetaBody,
    nodes: usize,
) -> Result<IntegralCheck> {
    for (index, s) in segments.iter().enumerate() {
        let inside = point_in_kzeta(body, s.a)
            || point_in_kzeta(body, s.b)
            || point_in_kzeta(body, s.midpoint());
        if inside {
            return Err(Error::SegmentInsideKZeta { index });
        }
    }
    let clip_at = |alpha: f64| -> Interval {
        match body {
            KZetaBody::Disc { .. } => unit_disc_projection(alpha),
            KZetaBody::Square { .. } => unit_square_projection(alpha),
        }
    };
    let integrand = |alpha: f64| -> f64 {
        let projected: Vec<Interval> = segments.iter().map(|s| project_segment(s, alpha)).collect();
        union_measure(&projected, clip_at(alpha))
    };
    let lhs = simpson(integrand, -PI, PI, nodes.max(SIMPSON_NODES));
    let total_len: f64 = segments.iter().map(Segment::length).sum();
    let rhs = 4.0 * total_len * (0.5 * body.zeta()).cos();
    Ok(IntegralCheck {
        lhs,
        rhs,
        ok: lhs <= rhs + INTEGRAL_TOLERANCE,
    })
}
