//! Runs the three-case split for the unit square and prints the gains and
//! the geometric checks backing them.

use opaque_bounds::square::{square_case_split, SquareParams};

fn main() {
    let cert = square_case_split(&SquareParams::default()).expect("defaults are valid");
    println!("eta = {:.9e}", cert.eta);
    println!("case gains:");
    println!("  outside    = {:.9e}", cert.gain_outside);
    println!("  neighboring = {:.9e}", cert.gain_neighbor);
    println!("  opposing   = {:.9e}", cert.gain_opposing);
    println!("containment:");
    println!(
        "  enclosing disc for the neighboring pair: radius {:.6e} at center y = {:.6e}",
        cert.containment.neighbor_radius, cert.containment.neighbor_center_y
    );
    println!(
        "  max |p| over the enlarged-body boundary: {:.6e}",
        cert.containment.qzeta_max_norm
    );
    println!(
        "strip witnesses: neighboring = {}, opposing = {}",
        cert.witness_neighbor, cert.witness_opposing
    );
    println!("final bound = 2 + {:.9e}", cert.final_bound);
    println!(
        "valid = {}, meets target = {}",
        cert.valid, cert.meets_target
    );
}
