//! Maximum-likelihood detectors for real PAM rails and complex PSK sets.

use num_complex::Complex64;

use crate::channel::RealZcInstance;

/// Index of the `order`-PAM point `scale * (2i - order + 1)` closest to `y`.
/// Midpoint ties go to the smaller index; a non-positive scale makes every
/// point equally likely, so index 0 is returned.
pub(crate) fn nearest_pam_index(y: f64, scale: f64, order: u32) -> usize {
    if !(scale > 0.0) {
        return 0;
    }
    let top = (order - 1) as f64;
    let t = (y / scale + top) / 2.0;
    // ceil(t - 1/2) rounds half down
    let i = (t - 0.5).ceil();
    i.clamp(0.0, top) as usize
}

/// Joint detection of `(s1, s2)` indices from one receiver-1 sample, with
/// receiver amplitudes `a = g11 w1` and `b = g21 w2`.
///
/// For each `s1` the best `s2` is found by rounding, which gives the same
/// lexicographic tie-break as scanning all `M^2` pairs.
pub(crate) fn joint_pam_indices(y: f64, a: f64, b: f64, order: u32) -> (usize, usize) {
    let top = (order - 1) as f64;
    let mut best = (0, 0);
    let mut best_dist = f64::INFINITY;
    for i1 in 0..order as usize {
        let s1 = 2.0 * i1 as f64 - top;
        let i2 = nearest_pam_index(y - a * s1, b, order);
        let s2 = 2.0 * i2 as f64 - top;
        let dist = (y - (a * s1 + b * s2)).abs();
        if dist < best_dist {
            best_dist = dist;
            best = (i1, i2);
        }
    }
    best
}

/// Exhaustive ML detection at receiver 1. Returns the symbol values
/// `(s1, s2)`; ties go to the lexicographically smaller pair.
pub fn ml_detect_d1(y1: f64, inst: &RealZcInstance, w1: f64, w2: f64) -> (f64, f64) {
    let pam = inst.pam();
    let (a, b) = (inst.g11 * w1, inst.g21 * w2);
    let mut best = (pam.point(0), pam.point(0));
    let mut best_dist = f64::INFINITY;
    for &s1 in pam.points() {
        for &s2 in pam.points() {
            let dist = (y1 - (a * s1 + b * s2)).abs();
            if dist < best_dist {
                best_dist = dist;
                best = (s1, s2);
            }
        }
    }
    best
}

/// ML detection of `s2` at receiver 2; midpoint ties go to the smaller symbol.
pub fn ml_detect_d2(y2: f64, inst: &RealZcInstance, w2: f64) -> f64 {
    let i = nearest_pam_index(y2, inst.g22 * w2, inst.m);
    inst.pam().point(i)
}

/// Index of the point in `points` nearest to `z`, first one on ties.
pub(crate) fn nearest_point(z: Complex64, points: &[Complex64]) -> usize {
    let mut best = 0;
    let mut best_dist = f64::INFINITY;
    for (i, p) in points.iter().enumerate() {
        let dist = (z - p).norm_sqr();
        if dist < best_dist {
            best_dist = dist;
            best = i;
        }
    }
    best
}
