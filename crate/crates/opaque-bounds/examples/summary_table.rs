//! Prints the summary table: perimeter, certified lower bound, and best
//! known upper bound for the unit disc and the unit square.

use opaque_bounds::barrier::{disc_boundary_barrier, jones_square_barrier_length, total_length};
use opaque_bounds::disc::disc_lower_bound;
use opaque_bounds::square::{square_case_split, SquareParams};
use std::f64::consts::PI;

fn main() {
    let disc = disc_lower_bound(None).expect("published parameters");
    let square = square_case_split(&SquareParams::default()).expect("published parameters");

    println!(
        "{:<8} {:>12} {:>22} {:>12}",
        "shape", "perimeter", "lower bound", "upper"
    );
    println!(
        "{:<8} {:>12.6} pi + {:>17.9e} {:>12.6}",
        "disc",
        2.0 * PI,
        disc.final_bound,
        total_length(&disc_boundary_barrier()),
    );
    println!(
        "{:<8} {:>12.6}  2 + {:>17.9e} {:>12.6}",
        "square",
        4.0,
        square.final_bound,
        jones_square_barrier_length(),
    );
}
