//! Enlarged bodies `K_zeta` for the unit disc and the centered unit square.
//!
//! `K_zeta` is the set of points from which the body appears under an angle
//! of at least `pi - zeta`. For the unit disc it is the concentric disc of
//! radius `1 + r` with `zeta = 2 arccos(1/(1+r))`; for the square its
//! boundary consists of four circular arcs through the vertices.

use crate::geometry::{Arc, Vec2, EPS};
use crate::{Error, Result};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};

/// The four exposed boundary points of the unit disc used by the bound.
pub fn disc_exposed_point(i: usize) -> Vec2 {
    let s = 1.0 / SQRT_2;
    match i % 4 {
        0 => Vec2::new(s, s),
        1 => Vec2::new(-s, s),
        2 => Vec2::new(-s, -s),
        _ => Vec2::new(s, -s),
    }
}

/// Vertices of the centered unit square `[-1/2, 1/2]^2`, counterclockwise
/// from the upper right.
pub fn square_vertex(i: usize) -> Vec2 {
    match i % 4 {
        0 => Vec2::new(0.5, 0.5),
        1 => Vec2::new(-0.5, 0.5),
        2 => Vec2::new(-0.5, -0.5),
        _ => Vec2::new(0.5, -0.5),
    }
}

/// Enlargement angle of the disc: `zeta = 2 arccos(1/(1+r))`.
pub fn disc_zeta_of_r(r: f64) -> Result<f64> {
    if !(r >= 0.0) {
        return Err(Error::InvalidParameter {
            name: "r",
            value: r,
            reason: "enlargement must be nonnegative",
        });
    }
    Ok(2.0 * (1.0 / (1.0 + r)).acos())
}

/// Inverse of [`disc_zeta_of_r`]: `r = 1/cos(zeta/2) - 1`.
pub fn disc_r_of_zeta(zeta: f64) -> Result<f64> {
    if !(0.0..PI).contains(&zeta) {
        return Err(Error::InvalidParameter {
            name: "zeta",
            value: zeta,
            reason: "must lie in [0, pi)",
        });
    }
    Ok(1.0 / (0.5 * zeta).cos() - 1.0)
}

/// The disc `(1+r)U` together with its enlargement angle.
#[derive(Clone, Copy, Debug)]
pub struct DiscKZeta {
    pub r: f64,
    pub zeta: f64,
}

impl DiscKZeta {
    pub fn new(r: f64) -> Result<Self> {
        Ok(DiscKZeta {
            r,
            zeta: disc_zeta_of_r(r)?,
        })
    }
}

/// Half-chord length `w(r, t) = sqrt((1+r)^2 - t^2)`.
pub(crate) fn disc_w(r: f64, t: f64) -> Result<f64> {
    if t > 1.0 + r {
        return Err(Error::InvalidParameter {
            name: "t",
            value: t,
            reason: "chord offset exceeds 1 + r",
        });
    }
    Ok(((1.0 + r) * (1.0 + r) - t * t).max(0.0).sqrt())
}

/// Endpoints `(p_{i+}, p_{i-})` of the chord `l_i` of `(1+r)U` at inner
/// offset `t`, with `p_{0±} = t x_0 ± w x_1` and the other indices given
/// by the stated symmetries.
pub fn disc_endpoints(r: f64, t: f64, i: usize) -> Result<(Vec2, Vec2)> {
    if !(t > 0.0) {
        return Err(Error::InvalidParameter {
            name: "t",
            value: t,
            reason: "chord offset must be positive",
        });
    }
    let w = disc_w(r, t)?;
    let x0 = disc_exposed_point(0);
    let x1 = disc_exposed_point(1);
    let p0 = (x0.scale(t) + x1.scale(w), x0.scale(t) - x1.scale(w));
    let p1 = (x1.scale(t) + x0.scale(w), x1.scale(t) - x0.scale(w));
    Ok(match i % 4 {
        0 => p0,
        1 => p1,
        2 => (-p0.1, -p0.0),
        _ => (-p1.1, -p1.0),
    })
}

/// The arc-bounded enlargement of the centered unit square.
#[derive(Clone, Copy, Debug)]
pub struct SquareQZeta {
    pub zeta: f64,
    pub arc_radius: f64,
    pub arc_centers: [Vec2; 4],
}

impl SquareQZeta {
    pub fn new(zeta: f64) -> Result<Self> {
        if !(zeta > 0.0 && zeta < FRAC_PI_2) {
            return Err(Error::InvalidParameter {
                name: "zeta",
                value: zeta,
                reason: "must lie in (0, pi/2)",
            });
        }
        let c0 = Vec2::new(0.0, 0.5 * (1.0 - 1.0 / zeta.tan()));
        let arc_centers = [
            c0,
            c0.rotate(FRAC_PI_2),
            c0.rotate(PI),
            c0.rotate(3.0 * FRAC_PI_2),
        ];
        Ok(SquareQZeta {
            zeta,
            arc_radius: 0.5 / zeta.sin(),
            arc_centers,
        })
    }
}

/// Boundary arc of `Q_zeta` over the side connecting vertices `side` and
/// `side + 1`.
pub fn square_arc(zeta: f64, side: usize) -> Result<Arc> {
    let q = SquareQZeta::new(zeta)?;
    let side = side % 4;
    let center = q.arc_centers[side];
    let v0 = square_vertex(side) - center;
    let v1 = square_vertex(side + 1) - center;
    let a0 = v0.y.atan2(v0.x);
    let a1 = v1.y.atan2(v1.x);
    // minor arc through both adjacent vertices
    let mut sweep = a1 - a0;
    if sweep > PI {
        sweep -= 2.0 * PI;
    } else if sweep < -PI {
        sweep += 2.0 * PI;
    }
    Ok(Arc::new(center, q.arc_radius, a0, sweep))
}

/// Endpoint `p_{1-}` of the chord `l_1 = {x in Q_zeta : sqrt(2) <x, x_1> = t}`,
/// on the arc circle over the top side.
pub fn square_ell_endpoint(zeta: f64, t: f64) -> Result<Vec2> {
    let q = SquareQZeta::new(zeta)?;
    let c = q.arc_centers[0].y;
    let u = c - SQRT_2 * t;
    let disc = 2.0 * q.arc_radius * q.arc_radius - u * u;
    if disc < 0.0 {
        return Err(Error::Infeasible(format!(
            "chord offset t = {t} incompatible with zeta = {zeta} (negative discriminant)"
        )));
    }
    let x = 0.5 * (u + disc.sqrt());
    Ok(Vec2::new(x, SQRT_2 * t + x))
}

/// Both endpoints of the chord `l_i` of `Q_zeta`, obtained from
/// [`square_ell_endpoint`] by reflection across the axis through `x_i` and
/// rotation by multiples of `pi/2`.
pub fn square_ell_endpoints(zeta: f64, t: f64, i: usize) -> Result<(Vec2, Vec2)> {
    let p = square_ell_endpoint(zeta, t)?;
    // reflect across the line spanned by x_1 (direction (-1, 1)/sqrt(2)):
    // (x, y) -> (-y, -x)
    let p_refl = Vec2::new(-p.y, -p.x);
    let rot = FRAC_PI_2 * ((i % 4) as f64 - 1.0);
    Ok((p.rotate(rot), p_refl.rotate(rot)))
}

/// Body descriptor for `K_zeta` membership queries.
#[derive(Clone, Copy, Debug)]
pub enum KZetaBody {
    /// Unit disc, enlarged to `(1+r)U`.
    Disc { r: f64 },
    /// Centered unit square with enlargement angle `zeta`.
    Square { zeta: f64 },
}

impl KZetaBody {
    pub fn disc(r: f64) -> Result<Self> {
        disc_zeta_of_r(r)?;
        Ok(KZetaBody::Disc { r })
    }

    /// The square pipeline only ever uses `zeta < pi/4`; at `pi/4` the set
    /// is the circumdisc, and larger angles are rejected.
    pub fn square(zeta: f64) -> Result<Self> {
        if !(zeta > 0.0 && zeta <= FRAC_PI_4 + EPS) {
            return Err(Error::InvalidParameter {
                name: "zeta",
                value: zeta,
                reason: "square K_zeta is implemented for (0, pi/4]",
            });
        }
        Ok(KZetaBody::Square { zeta })
    }

    pub fn zeta(&self) -> f64 {
        match *self {
            KZetaBody::Disc { r } => disc_zeta_of_r(r).expect("validated on construction"),
            KZetaBody::Square { zeta } => zeta,
        }
    }
}

/// Membership in `K_zeta`. Disc: `|p| <= 1 + r`. Square: inside `Q` or
/// inside all four arc circles.
pub fn point_in_kzeta(body: &KZetaBody, p: Vec2) -> bool {
    match *body {
        KZetaBody::Disc { r } => p.norm() <= 1.0 + r + EPS,
        KZetaBody::Square { zeta } => {
            if p.x.abs() <= 0.5 + EPS && p.y.abs() <= 0.5 + EPS {
                return true;
            }
            let q = SquareQZeta::new(zeta).expect("validated on construction");
            q.arc_centers
                .iter()
                .all(|&c| (p - c).norm() <= q.arc_radius + EPS)
        }
    }
}

/// One of the four chord-bounded regions `R_i` near an exposed point.
#[derive(Clone, Copy, Debug)]
pub struct ChordRegion {
    pub index: usize,
    pub t: f64,
    /// Outer offset of the slab: 1 for the disc, `1/sqrt(2)` for the square.
    pub outer: f64,
    pub p_plus: Vec2,
    pub p_minus: Vec2,
}

impl ChordRegion {
    /// `R_i = {x in (1+r)U : t <= <x, x_i> <= 1}` for the unit disc.
    pub fn disc(r: f64, t: f64, i: usize) -> Result<Self> {
        let (p_plus, p_minus) = disc_endpoints(r, t, i)?;
        Ok(ChordRegion {
            index: i % 4,
            t,
            outer: 1.0,
            p_plus,
            p_minus,
        })
    }

    /// `R_i = {x in Q_zeta : t <= sqrt(2) <x, x_i> <= 1/sqrt(2)}` for the
    /// centered unit square.
    pub fn square(zeta: f64, t: f64, i: usize) -> Result<Self> {
        let (p_plus, p_minus) = square_ell_endpoints(zeta, t, i)?;
        Ok(ChordRegion {
            index: i % 4,
            t,
            outer: 1.0 / SQRT_2,
            p_plus,
            p_minus,
        })
    }

    /// Slab membership for the square case, paired with `Q_zeta` membership.
    pub fn square_contains(&self, zeta: f64, p: Vec2) -> bool {
        let xi = square_vertex(self.index);
        let s = SQRT_2 * p.dot(xi);
        s >= self.t - EPS && s <= self.outer + EPS && point_in_kzeta(&KZetaBody::Square { zeta }, p)
    }
}
