#![allow(dead_code)]

use fareyzc_core::{RealZcInstance, ScenarioTag};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn log_uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    (rng.gen_range(lo.ln()..hi.ln())).exp()
}

/// Random instance whose cross/direct ratio falls in the requested scenario.
pub fn instance_in(rng: &mut ChaCha8Rng, tag: ScenarioTag, m: u32) -> RealZcInstance {
    let g11 = log_uniform(rng, 1e-2, 1e2);
    let g22 = log_uniform(rng, 1e-2, 1e2);
    let two_m = 2.0 * m as f64;
    let ratio = match tag {
        ScenarioTag::Weak => log_uniform(rng, 1e-2, 1.0),
        ScenarioTag::Strong => {
            let r = rng.gen_range(1.0..two_m);
            if r == 1.0 {
                1.5
            } else {
                r
            }
        }
        ScenarioTag::VeryStrong => log_uniform(rng, two_m, two_m * 1e2),
    };
    let p1 = log_uniform(rng, 1e-1, 1e1);
    let p2 = log_uniform(rng, 1e-1, 1e1);
    RealZcInstance::new(g11, ratio * g22, g22, p1, p2, m).unwrap()
}

pub fn rel_close(a: f64, b: f64, rtol: f64) -> bool {
    (a - b).abs() <= rtol * a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}
