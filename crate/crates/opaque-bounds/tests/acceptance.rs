//! End-to-end acceptance checks: each test covers one headline claim and
//! prints a single pass/fail line.

use opaque_bounds::barrier::{
    disc_boundary_barrier, jones_length_lower_check, jones_square_barrier,
    jones_square_barrier_length, total_length, validate, ValidationBody,
};
use opaque_bounds::disc::{
    default_ranges, delta_fixed_point, disc_lower_bound, eta0_prime, h_of, neighboring_gain,
    opposing_gain, optimize, R_STAR, T_STAR,
};
use opaque_bounds::geometry::{
    integrate_projection_width, project_point, unit_disc_projection, Interval, Segment, Vec2,
};
use opaque_bounds::kzeta::{disc_endpoints, disc_zeta_of_r, KZetaBody};
use opaque_bounds::square::{square_case_split_with_samples, SquareParams, SQUARE_TARGET};
use opaque_bounds::waste::{corollary1_gain, corollary2_gain, lemma6_integral_check, prop2_gain};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{PI, TAU};
use std::time::Instant;

fn report(name: &str, ok: bool) {
    println!(
        "acceptance: {} ... {}",
        name,
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "{name} failed");
}

#[test]
fn c1_fixed_point_at_published_parameters() {
    let start = Instant::now();
    let fp = delta_fixed_point(R_STAR, T_STAR).unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    let expected = 1.076457e-6;
    let ok = !fp.vacuous && (fp.delta - expected).abs() <= 1e-3 * expected && elapsed < 1.0;
    report("disc deviation at published parameters", ok);
}

#[test]
fn c2_parameter_search_recovers_optimum() {
    let start = Instant::now();
    let (r_range, t_range) = default_ranges();
    let opt = optimize(r_range, t_range, (200, 200), 40).unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    let ok = opt.delta >= 1.076457e-6
        && (opt.r - R_STAR).abs() <= 5e-4
        && (opt.t - T_STAR).abs() <= 5e-4
        && elapsed < 60.0;
    report("disc parameter search", ok);
}

#[test]
fn c3_neighboring_case_quantities() {
    let fp = delta_fixed_point(R_STAR, T_STAR).unwrap();
    let eta = eta0_prime(R_STAR, T_STAR, fp.delta).unwrap();
    let n = neighboring_gain(R_STAR, T_STAR, eta).unwrap();
    let intermediate = 2.1111e-6;
    let ok = eta >= 0.016613
        && n.ok
        && n.separation_lhs > 0.002169
        && n.gain >= 1.214e-6
        && (n.gain_times_diameter - intermediate).abs() <= 1e-3 * intermediate
        && (n.gain - n.gain_times_diameter / n.diameter).abs() < 1e-18;
    report("disc neighboring case", ok);
}

#[test]
fn c4_square_case_split() {
    let cert = square_case_split_with_samples(&SquareParams::default(), 100_000).unwrap();
    let ok = (cert.gain_outside - 2.30011e-5).abs() < 1e-9
        && (cert.gain_neighbor - 3.00791e-5).abs() < 1e-9
        && (cert.gain_opposing - 2.31379e-5).abs() < 1e-9
        && cert.valid
        && cert.final_bound > SQUARE_TARGET;
    report("square case split", ok);
}

#[test]
fn c5_closed_form_identities() {
    // len r/(1+r) vs len (1 - cos(zeta(r)/2)) across the range
    let mut ok = true;
    for k in 0..=1000 {
        let r = 5.0 * k as f64 / 1000.0;
        let zeta = disc_zeta_of_r(r).unwrap();
        let a = prop2_gain(1.0, r).unwrap().delta;
        let b = corollary1_gain(1.0, zeta).unwrap().delta;
        ok &= (a - b).abs() <= 1e-14 * (1.0 + a);
    }
    // quadratic/inverse scaling of the separated gain is exact
    let base = corollary2_gain(0.04, 0.19, 1.0).unwrap().delta;
    ok &= (corollary2_gain(0.08, 0.19, 1.0).unwrap().delta / base - 4.0).abs() < 1e-12;
    ok &= (corollary2_gain(0.04, 0.19, 2.0).unwrap().delta / base - 0.5).abs() < 1e-12;
    // the width factor is sin, not the angle itself
    let g = corollary2_gain(1.0, PI / 2.0, 2.0).unwrap().delta;
    ok &= (g - 0.25).abs() < 1e-15;
    // the opposing-pair gain is the separated gain at gamma* = arccot(h)
    // over a disc of diameter 2(1+r)
    let fp = delta_fixed_point(R_STAR, T_STAR).unwrap();
    let eta = eta0_prime(R_STAR, T_STAR, fp.delta).unwrap();
    let h = h_of(R_STAR, T_STAR, eta).unwrap();
    let direct = opposing_gain(R_STAR, T_STAR, eta).unwrap();
    let via_cor2 = corollary2_gain(eta, (1.0 / h).atan(), 2.0 * (1.0 + R_STAR))
        .unwrap()
        .delta;
    ok &= (direct - via_cor2).abs() < 1e-15;
    // opposite chord endpoints are antipodal on the enlarged circle
    let (p0p, _) = disc_endpoints(R_STAR, T_STAR, 0).unwrap();
    let (_, p2m) = disc_endpoints(R_STAR, T_STAR, 2).unwrap();
    ok &= ((p0p - p2m).norm() - 2.0 * (1.0 + R_STAR)).abs() < 1e-12;
    report("closed-form identities", ok);
}

#[test]
fn c6_projection_integral_inequality_fuzz() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1234);
    let mut all_ok = true;
    for &r in &[0.1, 0.2, 0.5] {
        let body = KZetaBody::disc(r).unwrap();
        for _ in 0..334 {
            let n = rng.gen_range(1..=6);
            let mut segments = Vec::with_capacity(n);
            while segments.len() < n {
                let rho = rng.gen_range((1.0 + r + 0.05)..2.5);
                let th = rng.gen_range(0.0..TAU);
                let a = Vec2::new(rho * th.cos(), rho * th.sin());
                let dir = rng.gen_range(0.0..TAU);
                let len = rng.gen_range(0.0..0.3);
                let b = a + Vec2::new(len * dir.cos(), len * dir.sin());
                if b.norm() > 1.0 + r + 1e-6 {
                    segments.push(Segment::new(a, b));
                }
            }
            let check = lemma6_integral_check(&segments, &body, 2048).unwrap();
            all_ok &= check.ok;
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    report(
        "projection integral inequality fuzz",
        all_ok && elapsed < 30.0,
    );
}

#[test]
fn c7_barrier_laboratory() {
    let start = Instant::now();
    let circle = validate(&disc_boundary_barrier(), ValidationBody::Disc, 1000, 1000);
    let jones = jones_square_barrier();
    let jones_len_ok = (total_length(&jones) - jones_square_barrier_length()).abs() < 1e-9;
    let jones_report = validate(&jones, ValidationBody::UnitSquare, 2000, 2000);
    let mut gapped = disc_boundary_barrier();
    gapped.arcs[0].angle_start = 0.2;
    gapped.arcs[0].angle_sweep = TAU - 0.2;
    let gapped_report = validate(&gapped, ValidationBody::Disc, 1000, 1000);
    let ok = circle.passed
        && jones_len_ok
        && jones_report.passed
        && !gapped_report.passed
        && gapped_report.missed >= 1
        && jones_length_lower_check(&jones, ValidationBody::UnitSquare)
        && jones_length_lower_check(&disc_boundary_barrier(), ValidationBody::Disc)
        && start.elapsed().as_secs_f64() < 60.0;
    report("barrier laboratory", ok);
}

#[test]
fn c8_structural_properties() {
    let mut ok = true;
    // projection linearity under a deterministic fuzz
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..10_000 {
        let p = Vec2::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let q = Vec2::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let alpha = rng.gen_range(0.0..TAU);
        let lhs = project_point(p + q, alpha);
        let rhs = project_point(p, alpha) + project_point(q, alpha);
        ok &= (lhs - rhs).abs() < 1e-9;
    }
    // mean projection width of the unit disc integrates to its perimeter
    let integral = integrate_projection_width(|a| unit_disc_projection(a).len(), 2048);
    ok &= (integral - TAU).abs() < 1e-6;
    // the reported deviation is the smallest positive root
    for k in 0..100 {
        let t = 0.9655 + 0.0004 * k as f64 / 100.0;
        let fp = delta_fixed_point(R_STAR, t).unwrap();
        ok &= !fp.vacuous;
        let probe = fp.delta * 0.5;
        let e = eta0_prime(R_STAR, t, probe).unwrap();
        let h = h_of(R_STAR, t, e).unwrap();
        ok &= e * e - 4.0 * (1.0 + R_STAR) * (1.0 + h * h) * probe > 0.0;
    }
    // refining a nested search grid never lowers the optimum
    let (r_range, _) = default_ranges();
    let t_range = Interval::new(0.96, 0.97);
    let mut prev = f64::NEG_INFINITY;
    for &n in &[51usize, 101, 201] {
        let opt = optimize(r_range, t_range, (n, n), 0).unwrap();
        ok &= opt.delta >= prev - 1e-15;
        prev = opt.delta;
    }
    // and the final certificate holds together
    let cert = disc_lower_bound(None).unwrap();
    ok &= cert.valid && cert.meets_target;
    report("structural properties", ok);
}
