//! Checks the projection-integral inequality for barrier pieces kept
//! outside the enlarged body, on a batch of random annulus segments.

use opaque_bounds::geometry::{Segment, Vec2};
use opaque_bounds::kzeta::KZetaBody;
use opaque_bounds::waste::lemma6_integral_check;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

fn main() {
    let r = 0.2;
    let body = KZetaBody::disc(r).expect("valid enlargement");
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut segments = Vec::new();
    while segments.len() < 50 {
        let rho = rng.gen_range((1.0 + r + 0.05)..2.0);
        let th = rng.gen_range(0.0..TAU);
        let a = Vec2::new(rho * th.cos(), rho * th.sin());
        let dir = rng.gen_range(0.0..TAU);
        let len = rng.gen_range(0.0..0.25);
        let b = a + Vec2::new(len * dir.cos(), len * dir.sin());
        if b.norm() > 1.0 + r + 1e-6 {
            segments.push(Segment::new(a, b));
        }
    }
    let check = lemma6_integral_check(&segments, &body, 4096).expect("segments are outside");
    println!("segments: {}", segments.len());
    println!("integral of covered projection length = {:.9e}", check.lhs);
    println!("4 |B'| cos(zeta/2)                    = {:.9e}", check.rhs);
    println!("inequality holds: {}", check.ok);
}
