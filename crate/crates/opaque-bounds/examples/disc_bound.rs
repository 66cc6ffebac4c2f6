//! Evaluates the disc lower bound: first at the published parameters, then
//! via the full parameter search, and prints the resulting certificate.

use opaque_bounds::disc::{default_ranges, disc_lower_bound, optimize};

fn main() {
    let cert = disc_lower_bound(None).expect("published parameters are feasible");
    println!(
        "at published (r, t) = ({}, {}):",
        cert.params.r, cert.params.t
    );
    println!("  delta          = {:.9e}", cert.delta);
    println!("  eta'           = {:.9e}", cert.eta_prime);
    println!("  gamma*         = {:.9e}", cert.gamma_star);
    println!("  opposing gain  = {:.9e}", cert.opposing_gain);
    println!("  neighbor gain  = {:.9e}", cert.neighboring.gain);
    println!("  final bound    = pi + {:.9e}", cert.final_bound);
    println!(
        "  valid = {}, meets target = {}",
        cert.valid, cert.meets_target
    );

    let (r_range, t_range) = default_ranges();
    let opt = optimize(r_range, t_range, (120, 120), 30).expect("search box is feasible");
    println!("\nsearch over the feasible box:");
    println!("  best (r, t) = ({:.6e}, {:.6e})", opt.r, opt.t);
    println!("  best delta  = {:.9e}", opt.delta);
}
