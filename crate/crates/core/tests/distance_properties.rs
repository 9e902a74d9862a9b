mod common;

use common::{log_uniform, rel_close};
use fareyzc_core::distance::interval_index;
use fareyzc_core::{
    d1, extended_farey_sequence, farey_intervals, mediant_gap_bound, min_distance_bruteforce,
    min_distance_farey, DifferencePair, RealZcInstance,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn unit(r: f64, m: u32) -> RealZcInstance {
    RealZcInstance::new(1.0, r, 1.0, 1.0, 1.0, m).unwrap()
}

#[test]
fn farey_route_matches_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..10_000 {
        let m = [2, 4, 8][rng.gen_range(0..3)];
        let inst = RealZcInstance::new(
            log_uniform(&mut rng, 1e-2, 1e2),
            log_uniform(&mut rng, 1e-2, 1e2),
            log_uniform(&mut rng, 1e-2, 1e2),
            1.0,
            1.0,
            m,
        )
        .unwrap();
        let w1 = rng.gen_range(0.0..inst.cap1()) + 1e-6;
        let w2 = rng.gen_range(0.0..inst.cap2()) + 1e-6;
        let brute = min_distance_bruteforce(&inst, w1, w2);
        let farey = min_distance_farey(&inst, w1, w2);
        assert!(
            rel_close(brute.d1_min, farey.d1_min, 1e-12),
            "{brute:?} {farey:?}"
        );
        assert!(rel_close(brute.objective, farey.objective, 1e-12));
        assert_eq!(brute.d2_min, farey.d2_min);
    }
}

#[test]
fn quadrant_minimum_equals_signed_minimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..2_000 {
        let m = [2u32, 4, 8, 16][rng.gen_range(0..4)];
        let inst = unit(log_uniform(&mut rng, 1e-2, 1e2), m);
        let k = (m - 1) as i64;
        let mut full = f64::INFINITY;
        for a in -k..=k {
            for b in -k..=k {
                if a != 0 || b != 0 {
                    full = full.min(d1(&inst, 1.0, 1.0, DifferencePair::new(a, b)).unwrap());
                }
            }
        }
        assert_eq!(min_distance_bruteforce(&inst, 1.0, 1.0).d1_min, full);
    }
}

#[test]
fn reduced_argmin_is_no_worse() {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..2_000 {
        let m = [4u32, 8, 16][rng.gen_range(0..3)];
        let inst = unit(log_uniform(&mut rng, 1e-2, 1e2), m);
        let rep = min_distance_bruteforce(&inst, 1.0, 1.0);
        let p = rep.d1_argmin;
        let g = gcd(p.m, p.n);
        let reduced = DifferencePair::new(p.m / g, p.n / g);
        assert!(d1(&inst, 1.0, 1.0, reduced).unwrap() <= rep.d1_min);
    }
}

#[test]
fn endpoint_comparison_follows_mediant_position() {
    for m in (2u32..=16).step_by(2) {
        let k = (m - 1) as u64;
        for iv in farey_intervals(k).unwrap() {
            let lo = iv.lo.to_f64();
            let hi = if iv.hi.is_infinite() {
                lo + 2.0
            } else {
                iv.hi.to_f64()
            };
            let med = iv.mediant().to_f64();
            let lo_pair = DifferencePair::from_fraction(iv.lo);
            let hi_pair = DifferencePair::from_fraction(iv.hi);
            for i in 0..1000 {
                let r = lo + (hi - lo) * (i as f64 + 0.5) / 1000.0;
                if (r - med).abs() < 1e-9 {
                    continue;
                }
                let inst = unit(r, m);
                let d_lo = d1(&inst, 1.0, 1.0, lo_pair).unwrap();
                let d_hi = d1(&inst, 1.0, 1.0, hi_pair).unwrap();
                assert_eq!(r < med, d_lo < d_hi, "M={m} r={r} in {iv}");
                // the endpoint nearer in mediant sense is the global minimum
                let best = min_distance_bruteforce(&inst, 1.0, 1.0).d1_min;
                let expected = if r < med { d_lo } else { d_hi };
                assert!(rel_close(best, expected, 1e-12), "M={m} r={r} in {iv}");
            }
            // at the mediant both endpoints are equally far
            let inst = unit(med, m);
            let d_lo = d1(&inst, 1.0, 1.0, lo_pair).unwrap();
            let d_hi = d1(&inst, 1.0, 1.0, hi_pair).unwrap();
            assert!(rel_close(d_lo, d_hi, 1e-12));
        }
    }
}

#[test]
fn interval_lookup_is_half_open_on_the_left() {
    let seq = extended_farey_sequence(3).unwrap();
    // seq = 0, 1/3, 1/2, 2/3, 1, 3/2, 2, 3, inf
    assert_eq!(interval_index(&seq, 1.0, 0.5), Some(1));
    assert_eq!(interval_index(&seq, 1.0, 0.4), Some(1));
    assert_eq!(interval_index(&seq, 1.0, 0.3), Some(0));
    assert_eq!(interval_index(&seq, 1.0, 5.0), Some(7));
}

#[test]
fn gap_bound_holds_when_applicable() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for k in 1..=15u64 {
        for iv in farey_intervals(k).unwrap() {
            let need = iv.numerator_sum() as f64;
            for _ in 0..5 {
                let ratio = need * rng.gen_range(1.0..4.0);
                let g22 = log_uniform(&mut rng, 1e-1, 1e1);
                let bound = mediant_gap_bound(&iv, ratio * g22, g22).unwrap();
                assert!(bound.is_ordered(1e-12), "{iv} {bound:?}");
            }
            if need > 0.0 {
                assert!(mediant_gap_bound(&iv, 0.5 * need, 1.0).is_err());
            }
        }
    }
}
