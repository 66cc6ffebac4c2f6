//! Planar primitives, projections onto directions and incidence tests.
//!
//! The projection of a set `X` onto the direction whose normal has angle
//! `alpha` is the set of signed coordinates `x sin(alpha) - y cos(alpha)`.
//! All modules share this identification, so offsets are comparable across
//! the crate.

use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};

/// Absolute epsilon for incidence ties; all coordinates here are O(1).
pub const EPS: f64 = 1e-12;

/// Reduces an angle to `[0, 2*pi)`.
pub fn normalize_angle(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r == TAU {
        0.0
    } else {
        r
    }
}

/// A point or vector in the plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl From<[f64; 2]> for Vec2 {
    fn from(v: [f64; 2]) -> Self {
        Vec2 { x: v[0], y: v[1] }
    }
}

impl From<Vec2> for [f64; 2] {
    fn from(v: Vec2) -> Self {
        [v.x, v.y]
    }
}

impl Vec2 {
    pub fn new(x: f64, y: f64) -> Self {
        debug_assert!(x.is_finite() && y.is_finite());
        Vec2 { x, y }
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Counterclockwise rotation by `theta` about the origin.
    pub fn rotate(self, theta: f64) -> Vec2 {
        let (s, c) = theta.sin_cos();
        Vec2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn scale(self, s: f64) -> Vec2 {
        Vec2::new(s * self.x, s * self.y)
    }
}

impl std::ops::Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl std::ops::Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

impl std::ops::Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// A line segment `[a, b]`; degenerate `a == b` is allowed (length 0).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(from = "[[f64; 2]; 2]", into = "[[f64; 2]; 2]")]
pub struct Segment {
    pub a: Vec2,
    pub b: Vec2,
}

impl From<[[f64; 2]; 2]> for Segment {
    fn from(v: [[f64; 2]; 2]) -> Self {
        Segment {
            a: v[0].into(),
            b: v[1].into(),
        }
    }
}

impl From<Segment> for [[f64; 2]; 2] {
    fn from(s: Segment) -> Self {
        [s.a.into(), s.b.into()]
    }
}

impl Segment {
    pub fn new(a: Vec2, b: Vec2) -> Self {
        Segment { a, b }
    }

    pub fn length(&self) -> f64 {
        (self.b - self.a).norm()
    }

    pub fn midpoint(&self) -> Vec2 {
        Vec2::new(0.5 * (self.a.x + self.b.x), 0.5 * (self.a.y + self.b.y))
    }
}

/// A circular arc, swept from `angle_start` by `angle_sweep` (sign gives
/// the orientation).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Arc {
    pub center: Vec2,
    pub radius: f64,
    pub angle_start: f64,
    pub angle_sweep: f64,
}

impl Arc {
    pub fn new(center: Vec2, radius: f64, angle_start: f64, angle_sweep: f64) -> Self {
        debug_assert!(radius > 0.0);
        debug_assert!(angle_sweep.abs() <= TAU + EPS);
        Arc {
            center,
            radius,
            angle_start,
            angle_sweep,
        }
    }

    pub fn length(&self) -> f64 {
        self.radius * self.angle_sweep.abs()
    }

    pub fn point_at(&self, theta: f64) -> Vec2 {
        Vec2::new(
            self.center.x + self.radius * theta.cos(),
            self.center.y + self.radius * theta.sin(),
        )
    }

    /// Whether the polar angle `theta` (about the arc center) falls within
    /// the swept range, closed at both ends.
    pub fn angle_in_sweep(&self, theta: f64) -> bool {
        let (start, sweep) = if self.angle_sweep >= 0.0 {
            (self.angle_start, self.angle_sweep)
        } else {
            (self.angle_start + self.angle_sweep, -self.angle_sweep)
        };
        let rel = normalize_angle(theta - start);
        rel <= sweep + EPS || rel >= TAU - EPS
    }
}

/// The line `{(x, y) : x sin(alpha) - y cos(alpha) = offset}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineByAngle {
    pub alpha: f64,
    pub offset: f64,
}

impl LineByAngle {
    pub fn new(alpha: f64, offset: f64) -> Self {
        LineByAngle {
            alpha: normalize_angle(alpha),
            offset,
        }
    }
}

/// A slab between two parallel lines of normal angle `alpha`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Strip {
    pub alpha: f64,
    pub lo: f64,
    pub hi: f64,
}

impl Strip {
    pub fn new(alpha: f64, lo: f64, hi: f64) -> Self {
        debug_assert!(lo < hi);
        Strip { alpha, lo, hi }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// A closed interval on the real line.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    /// Interval spanned by two unordered endpoints.
    pub fn hull(a: f64, b: f64) -> Self {
        Interval {
            lo: a.min(b),
            hi: a.max(b),
        }
    }

    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn is_empty(&self) -> bool {
        self.hi <= self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo - EPS <= x && x <= self.hi + EPS
    }
}

/// Signed projection coordinate `p.x sin(alpha) - p.y cos(alpha)`.
pub fn project_point(p: Vec2, alpha: f64) -> f64 {
    p.x * alpha.sin() - p.y * alpha.cos()
}

/// Projection of a segment: the interval between its endpoint projections.
pub fn project_segment(s: &Segment, alpha: f64) -> Interval {
    Interval::hull(project_point(s.a, alpha), project_point(s.b, alpha))
}

/// Lebesgue measure of `(union of intervals) ∩ clip`, by sort-and-sweep.
pub fn union_measure(intervals: &[Interval], clip: Interval) -> f64 {
    let mut clipped: Vec<(f64, f64)> = intervals
        .iter()
        .map(|iv| (iv.lo.max(clip.lo), iv.hi.min(clip.hi)))
        .filter(|(lo, hi)| hi > lo)
        .collect();
    clipped.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut total = 0.0;
    let mut current: Option<(f64, f64)> = None;
    for (lo, hi) in clipped {
        match current {
            Some((clo, chi)) if lo <= chi => current = Some((clo, chi.max(hi))),
            Some((clo, chi)) => {
                total += chi - clo;
                current = Some((lo, hi));
            }
            None => current = Some((lo, hi)),
        }
    }
    if let Some((clo, chi)) = current {
        total += chi - clo;
    }
    total
}

/// Whether the line meets the closed segment.
pub fn line_hits_segment(l: &LineByAngle, s: &Segment) -> bool {
    project_segment(s, l.alpha).contains(l.offset)
}

/// Whether the line meets the arc: the full circle must intersect the line
/// and at least one intersection point must fall within the sweep.
pub fn line_hits_arc(l: &LineByAngle, a: &Arc) -> bool {
    let d = project_point(a.center, l.alpha) - l.offset;
    if d.abs() > a.radius + EPS {
        return false;
    }
    let half_chord = (a.radius * a.radius - d * d).max(0.0).sqrt();
    // normal n = (sin a, -cos a), tangent u = (cos a, sin a)
    let n = Vec2::new(l.alpha.sin(), -l.alpha.cos());
    let u = Vec2::new(l.alpha.cos(), l.alpha.sin());
    let foot = a.center - n.scale(d);
    for sign in [-1.0, 1.0] {
        let p = foot + u.scale(sign * half_chord);
        let theta = (p.y - a.center.y).atan2(p.x - a.center.x);
        if a.angle_in_sweep(theta) {
            return true;
        }
    }
    false
}

/// Whether the strip separates the point sets `a` and `b`: all projections
/// of one set lie at or below `strip.lo` and all of the other at or above
/// `strip.hi`.
pub fn strip_separates(strip: &Strip, a: &[Vec2], b: &[Vec2]) -> bool {
    if a.is_empty() || b.is_empty() {
        return false;
    }
    let proj = |pts: &[Vec2]| -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &p in pts {
            let v = project_point(p, strip.alpha);
            lo = lo.min(v);
            hi = hi.max(v);
        }
        (lo, hi)
    };
    let (a_lo, a_hi) = proj(a);
    let (b_lo, b_hi) = proj(b);
    (a_hi <= strip.lo && b_lo >= strip.hi) || (b_hi <= strip.lo && a_lo >= strip.hi)
}

/// Projection interval of the unit disc: `[-1, 1]` at every angle.
pub fn unit_disc_projection(_alpha: f64) -> Interval {
    Interval::new(-1.0, 1.0)
}

/// Projection interval of the centered unit square `[-1/2, 1/2]^2`.
pub fn unit_square_projection(alpha: f64) -> Interval {
    let w = 0.5 * (alpha.sin().abs() + alpha.cos().abs());
    Interval::new(-w, w)
}

/// Composite Simpson quadrature of `f` over `[a, b]` with `n` (even)
/// subintervals, summed in fixed index order.
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    assert!(
        n >= 2 && n.is_multiple_of(2),
        "simpson needs an even node count"
    );
    let h = (b - a) / n as f64;
    let mut sum = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(a + i as f64 * h);
    }
    sum * h / 3.0
}

/// Quadrature helper for the Cauchy perimeter identity used in tests:
/// integrates a projection-width function over `[0, pi]`.
pub fn integrate_projection_width<F: Fn(f64) -> f64>(width: F, n: usize) -> f64 {
    simpson(width, 0.0, PI, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn project_point_axis_cases() {
        assert!((project_point(Vec2::new(1.0, 0.0), FRAC_PI_2) - 1.0).abs() < EPS);
        assert!((project_point(Vec2::new(0.0, 1.0), 0.0) + 1.0).abs() < EPS);
        let s = 1.0 / SQRT_2;
        assert!(project_point(Vec2::new(s, s), PI / 4.0).abs() < EPS);
    }

    #[test]
    fn project_segment_cases() {
        let iv = project_segment(
            &Segment::new(Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0)),
            FRAC_PI_2,
        );
        assert!((iv.lo - 0.0).abs() < EPS && (iv.hi - 1.0).abs() < EPS);
        let iv = project_segment(
            &Segment::new(Vec2::new(0.0, 0.0), Vec2::new(0.0, 5.0)),
            FRAC_PI_2,
        );
        assert!(iv.len() < EPS);
        let iv = project_segment(
            &Segment::new(Vec2::new(0.0, 0.0), Vec2::new(1.0, 1.0)),
            PI / 4.0,
        );
        assert!(iv.len() < EPS);
    }

    #[test]
    fn union_measure_merges_overlaps() {
        let m = union_measure(
            &[Interval::new(0.0, 1.0), Interval::new(0.5, 2.0)],
            Interval::new(0.0, 3.0),
        );
        assert!((m - 2.0).abs() < EPS);
        assert_eq!(union_measure(&[], Interval::new(0.0, 1.0)), 0.0);
    }

    #[test]
    fn union_measure_matches_monte_carlo() {
        let intervals = [Interval::new(-1.0, 0.5), Interval::new(0.4, 0.6)];
        let clip = Interval::new(0.0, 1.0);
        let m = union_measure(&intervals, clip);
        assert!((m - 0.6).abs() < EPS);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let n = 1_000_000usize;
        let hits = (0..n)
            .filter(|_| {
                let x = rng.gen_range(clip.lo..clip.hi);
                intervals.iter().any(|iv| iv.lo <= x && x <= iv.hi)
            })
            .count();
        let estimate = clip.len() * hits as f64 / n as f64;
        assert!((estimate - m).abs() < 1e-3, "mc {estimate} vs sweep {m}");
    }

    #[test]
    fn line_hits_segment_cases() {
        let s = Segment::new(Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0));
        assert!(line_hits_segment(&LineByAngle::new(FRAC_PI_2, 0.5), &s));
        assert!(!line_hits_segment(&LineByAngle::new(FRAC_PI_2, 2.0), &s));
        let v = Segment::new(Vec2::new(0.0, 0.0), Vec2::new(0.0, 1.0));
        assert!(line_hits_segment(&LineByAngle::new(0.0, -0.5), &v));
    }

    /// Explicit intersection oracle: solve a + s (b - a) = offset*n + u*d
    /// for (s, u) and check s in [0, 1].
    fn hits_by_linear_solve(l: &LineByAngle, s: &Segment) -> Option<bool> {
        let n = Vec2::new(l.alpha.sin(), -l.alpha.cos());
        let d = Vec2::new(l.alpha.cos(), l.alpha.sin());
        let e = s.b - s.a;
        // [e.x  -d.x; e.y  -d.y] (s, u)^T = offset*n - a
        let det = e.x * (-d.y) - (-d.x) * e.y;
        if det.abs() < 1e-9 {
            return None; // near parallel; skip in the fuzz comparison
        }
        let rhs = n.scale(l.offset) - s.a;
        let sp = (rhs.x * (-d.y) - (-d.x) * rhs.y) / det;
        Some((-1e-9..=1.0 + 1e-9).contains(&sp))
    }

    #[test]
    fn line_hits_segment_matches_solve_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut checked = 0;
        while checked < 10_000 {
            let l = LineByAngle::new(rng.gen_range(0.0..TAU), rng.gen_range(-2.0..2.0));
            let s = Segment::new(
                Vec2::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)),
                Vec2::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)),
            );
            if let Some(expected) = hits_by_linear_solve(&l, &s) {
                // skip razor-thin margins where the closed predicate may
                // legitimately differ by its epsilon
                let iv = project_segment(&s, l.alpha);
                if (l.offset - iv.lo).abs() < 1e-7 || (l.offset - iv.hi).abs() < 1e-7 {
                    continue;
                }
                assert_eq!(line_hits_segment(&l, &s), expected, "line {l:?} seg {s:?}");
                checked += 1;
            }
        }
    }

    #[test]
    fn line_hits_arc_cases() {
        let full = Arc::new(Vec2::new(0.0, 0.0), 1.0, 0.0, TAU);
        assert!(line_hits_arc(&LineByAngle::new(FRAC_PI_2, 0.0), &full));
        assert!(!line_hits_arc(&LineByAngle::new(FRAC_PI_2, 1.5), &full));
        let upper = Arc::new(Vec2::new(0.0, 0.0), 1.0, 0.0, PI);
        // intersections at x = 0.5, y = ±sqrt(0.75); the + branch is on the arc
        assert!(line_hits_arc(&LineByAngle::new(FRAC_PI_2, 0.5), &upper));
        let lower = Arc::new(Vec2::new(0.0, 0.0), 1.0, PI, PI);
        assert!(line_hits_arc(&LineByAngle::new(FRAC_PI_2, 0.5), &lower));
        // alpha = 0 gives the line {-y = offset}; y = +0.5 misses the
        // lower half, y = -0.5 hits it
        assert!(!line_hits_arc(&LineByAngle::new(0.0, -0.5), &lower));
        assert!(line_hits_arc(&LineByAngle::new(0.0, 0.5), &lower));
    }

    #[test]
    fn negative_sweep_matches_positive() {
        let fwd = Arc::new(Vec2::new(0.0, 0.0), 1.0, 0.0, PI);
        let bwd = Arc::new(Vec2::new(0.0, 0.0), 1.0, PI, -PI);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let l = LineByAngle::new(rng.gen_range(0.0..TAU), rng.gen_range(-1.5..1.5));
            assert_eq!(line_hits_arc(&l, &fwd), line_hits_arc(&l, &bwd));
        }
    }

    #[test]
    fn strip_separates_cases() {
        let strip = Strip::new(FRAC_PI_2, 1.0, 2.0);
        let a = [Vec2::new(0.0, 0.0)];
        let b = [Vec2::new(3.0, 0.0)];
        assert!(strip_separates(&strip, &a, &b));
        let a2 = [Vec2::new(0.0, 0.0), Vec2::new(1.5, 0.0)];
        assert!(!strip_separates(&strip, &a2, &b));
        // symmetric in the order of the two sets
        assert!(strip_separates(&strip, &b, &a));
    }

    #[test]
    fn cauchy_perimeter_of_unit_disc() {
        let integral = integrate_projection_width(|a| unit_disc_projection(a).len(), 2048);
        assert!((integral - TAU).abs() < 1e-6);
    }

    #[test]
    fn square_projection_width() {
        assert!((unit_square_projection(0.0).len() - 1.0).abs() < EPS);
        assert!((unit_square_projection(PI / 4.0).len() - SQRT_2).abs() < EPS);
    }

    use std::f64::consts::SQRT_2;

    proptest! {
        #[test]
        fn projection_is_linear(
            px in -10.0..10.0f64, py in -10.0..10.0f64,
            qx in -10.0..10.0f64, qy in -10.0..10.0f64,
            alpha in 0.0..TAU,
        ) {
            let p = Vec2::new(px, py);
            let q = Vec2::new(qx, qy);
            let lhs = project_point(p + q, alpha);
            let rhs = project_point(p, alpha) + project_point(q, alpha);
            prop_assert!((lhs - rhs).abs() < 1e-9);
        }

        #[test]
        fn projected_segment_no_longer_than_segment(
            ax in -10.0..10.0f64, ay in -10.0..10.0f64,
            bx in -10.0..10.0f64, by in -10.0..10.0f64,
            alpha in 0.0..TAU,
        ) {
            let s = Segment::new(Vec2::new(ax, ay), Vec2::new(bx, by));
            prop_assert!(project_segment(&s, alpha).len() <= s.length() + 1e-9);
        }

        #[test]
        fn union_measure_monotone_and_clipped(
            items in proptest::collection::vec((-5.0..5.0f64, 0.0..3.0f64), 0..12),
            extra in (-5.0..5.0f64, 0.0..3.0f64),
        ) {
            let clip = Interval::new(-2.0, 2.0);
            let ivs: Vec<Interval> =
                items.iter().map(|&(lo, w)| Interval::new(lo, lo + w)).collect();
            let base = union_measure(&ivs, clip);
            prop_assert!(base <= clip.len() + 1e-12);
            let mut more = ivs.clone();
            more.push(Interval::new(extra.0, extra.0 + extra.1));
            prop_assert!(union_measure(&more, clip) + 1e-12 >= base);
        }
    }

    #[test]
    fn perpendicular_segment_projects_at_full_length() {
        // normal angle pi/2 projects onto the x-axis; a horizontal segment
        // is perpendicular to that axis' normal direction
        let s = Segment::new(Vec2::new(0.3, -1.0), Vec2::new(2.3, -1.0));
        assert!((project_segment(&s, FRAC_PI_2).len() - s.length()).abs() < EPS);
    }
}
