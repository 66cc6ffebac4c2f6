//! Validates the classical short barrier of the unit square by sweeping a
//! dense grid of lines, then shows the validator catching a gapped circle.

use opaque_bounds::barrier::{
    disc_boundary_barrier, jones_square_barrier, jones_square_barrier_length, total_length,
    validate, ValidationBody,
};
use std::f64::consts::TAU;

fn main() {
    let jones = jones_square_barrier();
    println!(
        "barrier '{}': length {:.9} (closed form {:.9})",
        jones.label,
        total_length(&jones),
        jones_square_barrier_length()
    );
    let report = validate(&jones, ValidationBody::UnitSquare, 1000, 1000);
    println!(
        "swept {} lines, missed {}: {}",
        report.samples,
        report.missed,
        if report.passed {
            "opaque"
        } else {
            "NOT opaque"
        }
    );

    let mut gapped = disc_boundary_barrier();
    gapped.arcs[0].angle_start = 0.2;
    gapped.arcs[0].angle_sweep = TAU - 0.2;
    gapped.label = "circle with a gap".into();
    let report = validate(&gapped, ValidationBody::Disc, 1000, 1000);
    println!(
        "\nbarrier '{}': swept {} lines, missed {}",
        gapped.label, report.samples, report.missed
    );
    for line in report.missed_examples.iter().take(3) {
        println!(
            "  missed line: alpha = {:.6}, offset = {:.6}",
            line.alpha, line.offset
        );
    }
}
