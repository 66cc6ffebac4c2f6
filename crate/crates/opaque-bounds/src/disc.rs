//! Lower bound for the unit disc: feasibility region, the fixed-point
//! deviation `delta(r, t)`, global parameter search, the neighboring-pair
//! case, and certificate assembly.

use crate::geometry::{project_point, strip_separates, Interval, Strip, Vec2};
use crate::kzeta::{disc_endpoints, disc_w, disc_zeta_of_r};
use crate::waste::{corollary1_gain, prop2_gain};
use crate::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::FRAC_PI_8;

/// Fixed separation angle of the facing-pair argument.
pub const LAMBDA: f64 = FRAC_PI_8;

/// Strip angle used in the neighboring-pair case.
pub const GAMMA_NEIGHBOR: f64 = 0.124;

/// Published optimum and target values.
pub const R_STAR: f64 = 0.001067;
pub const T_STAR: f64 = 0.965763;
pub const DELTA_TARGET: f64 = 1.076e-6;

/// Free parameters of the disc case.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct DiscParams {
    pub r: f64,
    pub t: f64,
    pub lambda: f64,
    pub gamma_neighbor: f64,
}

impl DiscParams {
    /// Validates the feasibility constraints
    /// `0 <= r < 1/cos(pi/8) - 1`, `(1+r) cos(pi/8) < t <= 1`.
    pub fn new(r: f64, t: f64) -> Result<Self> {
        let r_max = 1.0 / LAMBDA.cos() - 1.0;
        if !(r >= 0.0 && r < r_max) {
            return Err(Error::Infeasible(format!(
                "r = {r} outside [0, {r_max:.6})"
            )));
        }
        let t_min = (1.0 + r) * LAMBDA.cos();
        if !(t > t_min && t <= 1.0) {
            return Err(Error::Infeasible(format!(
                "t = {t} outside ({t_min:.6}, 1] for r = {r}"
            )));
        }
        Ok(DiscParams {
            r,
            t,
            lambda: LAMBDA,
            gamma_neighbor: GAMMA_NEIGHBOR,
        })
    }
}

/// `w(r, t) = sqrt((1+r)^2 - t^2)`.
pub fn w_of(r: f64, t: f64) -> Result<f64> {
    disc_w(r, t)
}

/// Slope bound of the separating strips:
/// `h = (eta + 2 t cos(pi/8) + 2 w sin(pi/8)) / (2 t sin(pi/8) - 2 w cos(pi/8))`.
///
/// The denominator is positive exactly on the feasible parameter range.
pub fn h_of(r: f64, t: f64, eta: f64) -> Result<f64> {
    let w = disc_w(r, t)?;
    let den = 2.0 * t * LAMBDA.sin() - 2.0 * w * LAMBDA.cos();
    if den <= 0.0 {
        return Err(Error::Infeasible(format!(
            "2t sin(pi/8) - 2w cos(pi/8) = {den} <= 0 at (r, t) = ({r}, {t})"
        )));
    }
    Ok((eta + 2.0 * t * LAMBDA.cos() + 2.0 * w * LAMBDA.sin()) / den)
}

/// Angle of the diagonal through the chord endpoints:
/// `alpha_+ = arccos(t / (1+r))`. Separation is feasible iff this is
/// below `pi/8`.
pub fn alpha_plus(r: f64, t: f64) -> Result<f64> {
    if t > 1.0 + r {
        return Err(Error::InvalidParameter {
            name: "t",
            value: t,
            reason: "chord offset exceeds 1 + r",
        });
    }
    Ok((t / (1.0 + r)).acos())
}

/// Opposing-pair gain `eta^2 / ((1 + h^2) 4 (1+r))`, i.e. the separated
/// gain with strip width `eta / sqrt(1 + h^2)` and diameter `2(1+r)`.
pub fn opposing_gain(r: f64, t: f64, eta: f64) -> Result<f64> {
    if !(eta > 0.0) {
        return Err(Error::InvalidParameter {
            name: "eta",
            value: eta,
            reason: "must be positive",
        });
    }
    let h = h_of(r, t, eta)?;
    Ok(eta * eta / ((1.0 + h * h) * 4.0 * (1.0 + r)))
}

/// `eta'(delta) = (1 - t - (1+r)/r * delta) / 2`, clamped at zero.
pub fn eta0_prime(r: f64, t: f64, delta: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::InvalidParameter {
            name: "r",
            value: r,
            reason: "must be positive (division by r)",
        });
    }
    Ok((0.5 * (1.0 - t - (1.0 + r) / r * delta)).max(0.0))
}

/// Result of the fixed-point search.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct FixedPoint {
    pub delta: f64,
    /// Set when no positive root exists (the bound is vacuous).
    pub vacuous: bool,
}

/// Deficiency function whose smallest positive root is `delta(r, t)`:
/// `F(delta) = eta'(delta)^2 - 4 (1+r) (1 + h'(delta)^2) delta`.
fn deficiency(params: &DiscParams, delta: f64) -> f64 {
    let eta_p = eta0_prime(params.r, params.t, delta).expect("r > 0 checked by params");
    let h_p = h_of(params.r, params.t, eta_p).expect("feasible params");
    eta_p * eta_p - 4.0 * (1.0 + params.r) * (1.0 + h_p * h_p) * delta
}

/// Smallest `delta > 0` with `eta'(delta)^2 = 4 (1+r)(1 + h'(delta)^2) delta`,
/// found by an upward scan to the first sign change followed by bisection
/// to relative tolerance 1e-12. The domain is capped at
/// `delta_max = r (1 - t) / (1 + r)`, where `eta'` vanishes.
pub fn delta_fixed_point(r: f64, t: f64) -> Result<FixedPoint> {
    let params = DiscParams::new(r, t)?;
    if r == 0.0 {
        return Err(Error::InvalidParameter {
            name: "r",
            value: r,
            reason: "must be positive for the fixed point",
        });
    }
    let delta_max = r * (1.0 - t) / (1.0 + r);
    if delta_max <= 0.0 {
        return Ok(FixedPoint {
            delta: 0.0,
            vacuous: true,
        });
    }
    const SCAN_STEPS: usize = 4096;
    let mut prev = 0.0;
    for i in 1..=SCAN_STEPS {
        let d = delta_max * i as f64 / SCAN_STEPS as f64;
        if deficiency(&params, d) <= 0.0 {
            let (mut lo, mut hi) = (prev, d);
            while hi - lo > 1e-12 * hi {
                let mid = 0.5 * (lo + hi);
                if deficiency(&params, mid) > 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return Ok(FixedPoint {
                delta: 0.5 * (lo + hi),
                vacuous: false,
            });
        }
        prev = d;
    }
    Ok(FixedPoint {
        delta: 0.0,
        vacuous: true,
    })
}

/// Outcome of the parameter search.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Optimum {
    pub r: f64,
    pub t: f64,
    pub delta: f64,
}

fn grid_best(
    r_lo: f64,
    r_hi: f64,
    t_lo: f64,
    t_hi: f64,
    n_r: usize,
    n_t: usize,
) -> Option<Optimum> {
    let cells: Vec<(usize, usize)> = (0..n_r)
        .flat_map(|i| (0..n_t).map(move |j| (i, j)))
        .collect();
    let evaluated: Vec<Optimum> = cells
        .par_iter()
        .filter_map(|&(i, j)| {
            let r = if n_r == 1 {
                r_lo
            } else {
                r_lo + (r_hi - r_lo) * i as f64 / (n_r - 1) as f64
            };
            let t = if n_t == 1 {
                t_lo
            } else {
                t_lo + (t_hi - t_lo) * j as f64 / (n_t - 1) as f64
            };
            match delta_fixed_point(r, t) {
                Ok(fp) if !fp.vacuous => Some(Optimum {
                    r,
                    t,
                    delta: fp.delta,
                }),
                _ => None,
            }
        })
        .collect();
    // deterministic argmax: ties broken by lexicographically smallest (r, t)
    evaluated.into_iter().reduce(|best, cand| {
        if cand.delta > best.delta
            || (cand.delta == best.delta && (cand.r, cand.t) < (best.r, best.t))
        {
            cand
        } else {
            best
        }
    })
}

/// Coarse grid search over `(r, t)` followed by shrinking-box coordinate
/// refinement (box halves each iteration) around the best cell.
/// Deterministic given inputs.
pub fn optimize(
    r_range: Interval,
    t_range: Interval,
    grid: (usize, usize),
    refine_iters: usize,
) -> Result<Optimum> {
    let (n_r, n_t) = grid;
    if n_r == 0 || n_t == 0 {
        return Err(Error::InvalidParameter {
            name: "grid",
            value: 0.0,
            reason: "grid dimensions must be positive",
        });
    }
    let mut best = grid_best(r_range.lo, r_range.hi, t_range.lo, t_range.hi, n_r, n_t)
        .ok_or_else(|| Error::Infeasible("no feasible cell in the given ranges".into()))?;
    let mut half_r = if n_r > 1 {
        (r_range.hi - r_range.lo) / (n_r - 1) as f64
    } else {
        0.0
    };
    let mut half_t = if n_t > 1 {
        (t_range.hi - t_range.lo) / (n_t - 1) as f64
    } else {
        0.0
    };
    for _ in 0..refine_iters {
        half_r *= 0.5;
        half_t *= 0.5;
        if half_r == 0.0 && half_t == 0.0 {
            break;
        }
        let r_lo = (best.r - half_r).max(r_range.lo);
        let r_hi = (best.r + half_r).min(r_range.hi);
        let t_lo = (best.t - half_t).max(t_range.lo);
        let t_hi = (best.t + half_t).min(t_range.hi);
        if let Some(cand) = grid_best(r_lo, r_hi, t_lo, t_hi, 9, 9) {
            if cand.delta > best.delta {
                best = cand;
            }
        }
    }
    Ok(best)
}

/// Default feasible search box for [`optimize`].
pub fn default_ranges() -> (Interval, Interval) {
    let r_max = 1.0 / LAMBDA.cos() - 1.0;
    (
        Interval::new(1e-6, r_max - 1e-9),
        Interval::new(LAMBDA.cos() + 1e-9, 1.0 - 1e-9),
    )
}

/// Neighboring-pair case at strip angle `gamma = 0.124`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct NeighborCase {
    /// `sqrt(2) (t sin(pi/8 - gamma) - w cos(pi/8 - gamma))`, the projected
    /// gap between the chords of two neighboring regions.
    pub separation_lhs: f64,
    /// `(eta' sin(gamma))^2 / (2 sqrt(2) (t + w))`.
    pub gain: f64,
    pub ok: bool,
    /// Diameter `2 rho = sqrt(2) (t + w)` of the disc containing the pair.
    pub diameter: f64,
    /// `(eta' sin(gamma))^2 / 2`: the gain equals this divided by the
    /// diameter, exposed as a diagnostic.
    pub gain_times_diameter: f64,
}

/// Checks the strip separation of two neighboring regions and evaluates
/// the resulting gain.
pub fn neighboring_gain(r: f64, t: f64, eta0p: f64) -> Result<NeighborCase> {
    DiscParams::new(r, t)?;
    if !(eta0p >= 0.0) {
        return Err(Error::InvalidParameter {
            name: "eta0p",
            value: eta0p,
            reason: "must be nonnegative",
        });
    }
    let w = disc_w(r, t)?;
    let gamma = GAMMA_NEIGHBOR;
    let separation_lhs =
        std::f64::consts::SQRT_2 * (t * (LAMBDA - gamma).sin() - w * (LAMBDA - gamma).cos());
    let width = eta0p * gamma.sin();
    let diameter = std::f64::consts::SQRT_2 * (t + w);
    Ok(NeighborCase {
        separation_lhs,
        gain: width * width / (2.0 * diameter),
        ok: separation_lhs >= width,
        diameter,
        gain_times_diameter: width * width / 2.0,
    })
}

/// A fully evaluated run of the disc argument.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct DiscCertificate {
    pub params: DiscParams,
    /// The fixed-point deviation `delta(r, t)`.
    pub delta: f64,
    pub eta_prime: f64,
    pub h_prime: f64,
    pub w: f64,
    pub gamma_star: f64,
    pub alpha_plus: f64,
    pub opposing_gain: f64,
    pub neighboring: NeighborCase,
    /// Identity `1 - cos(zeta(r)/2) = r/(1+r)` holds at this `r`.
    pub outside_regime_ok: bool,
    pub strip_witness_ok: bool,
    pub final_bound: f64,
    pub valid: bool,
    /// Whether `final_bound` clears the published target `1.076e-6`.
    pub meets_target: bool,
}

/// Checks that strips of the certified width at angles
/// `±(lambda - gamma*)` actually separate the rotated chords of the two
/// opposing regions, tying the algebra back to the geometry.
pub fn opposing_strip_witness(r: f64, t: f64, eta: f64) -> Result<bool> {
    let w = disc_w(r, t)?;
    let h = h_of(r, t, eta)?;
    let gamma_star = (1.0 / h).atan();
    let width = eta * gamma_star.sin();
    // rotated chords: l0' = {(t, ±w)}, l2' = {(-t, ±w)}
    let l0 = [Vec2::new(t, w), Vec2::new(t, -w)];
    let l2 = [Vec2::new(-t, w), Vec2::new(-t, -w)];
    // back off by a relative epsilon: gamma* attains the width with equality
    let width = width * (1.0 - 1e-9);
    for alpha in [LAMBDA - gamma_star, -(LAMBDA - gamma_star)] {
        if !witness_at(alpha, width, &l0, &l2) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Places a strip of the given width in the projection gap between the two
/// point sets at angle `alpha`, then confirms it with [`strip_separates`].
pub(crate) fn witness_at(alpha: f64, width: f64, a: &[Vec2], b: &[Vec2]) -> bool {
    let bounds = |pts: &[Vec2]| {
        pts.iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &p| {
                let v = project_point(p, alpha);
                (lo.min(v), hi.max(v))
            })
    };
    let (a_lo, a_hi) = bounds(a);
    let (b_lo, b_hi) = bounds(b);
    let strip = if b_lo - a_hi >= width {
        Strip::new(alpha, a_hi, a_hi + width)
    } else if a_lo - b_hi >= width {
        Strip::new(alpha, b_hi, b_hi + width)
    } else {
        return false;
    };
    strip_separates(&strip, a, b)
}

/// Runs the full disc argument at the given parameters (or the published
/// optimum) and assembles the certificate.
pub fn disc_lower_bound(at: Option<(f64, f64)>) -> Result<DiscCertificate> {
    let (r, t) = at.unwrap_or((R_STAR, T_STAR));
    let params = DiscParams::new(r, t)?;
    let fp = delta_fixed_point(r, t)?;
    if fp.vacuous {
        return Err(Error::Vacuous(format!(
            "no positive fixed point at (r, t) = ({r}, {t})"
        )));
    }
    let delta = fp.delta;
    let eta_prime = eta0_prime(r, t, delta)?;
    let w = disc_w(r, t)?;
    let h_prime = h_of(r, t, eta_prime)?;
    let gamma_star = (1.0 / h_prime).atan();
    let opposing = opposing_gain(r, t, eta_prime)?;
    let neighboring = neighboring_gain(r, t, eta_prime)?;
    let zeta = disc_zeta_of_r(r)?;
    let outside_regime_ok = {
        // Prop. 2 folds into the eta' definition through the identity
        // 1 - cos(zeta/2) = r/(1+r); verify it numerically at this r.
        let lhs = corollary1_gain(1.0, zeta)?.delta;
        let rhs = prop2_gain(1.0, r)?.delta;
        (lhs - rhs).abs() < 1e-14
    };
    let strip_witness_ok = opposing_strip_witness(r, t, eta_prime)?;
    let antipodal_ok = {
        let (p0p, _) = disc_endpoints(r, t, 0)?;
        let (_, p2m) = disc_endpoints(r, t, 2)?;
        ((p0p - p2m).norm() - 2.0 * (1.0 + r)).abs() < 1e-12
    };
    let final_bound = opposing.min(neighboring.gain);
    let valid =
        outside_regime_ok && strip_witness_ok && antipodal_ok && neighboring.ok && delta > 0.0;
    Ok(DiscCertificate {
        params,
        delta,
        eta_prime,
        h_prime,
        w,
        gamma_star,
        alpha_plus: alpha_plus(r, t)?,
        opposing_gain: opposing,
        neighboring,
        outside_regime_ok,
        strip_witness_ok,
        final_bound,
        valid,
        meets_target: final_bound >= DELTA_TARGET,
    })
}
