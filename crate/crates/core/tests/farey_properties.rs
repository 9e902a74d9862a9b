use fareyzc_core::{
    extended_farey_sequence, farey_intervals, farey_sequence, mediant, partition_intervals,
    Fraction,
};
use proptest::prelude::*;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn totient(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

fn totient_sum(k: u64) -> u64 {
    (1..=k).map(totient).sum()
}

fn reduced_mediant(a: Fraction, b: Fraction) -> Fraction {
    Fraction::new(a.num() + b.num(), a.den() + b.den()).unwrap()
}

#[test]
fn adjacent_terms_are_unimodular() {
    for k in 1..=30 {
        let seq = extended_farey_sequence(k).unwrap();
        for w in seq.windows(2) {
            let lhs = w[0].den() as i128 * w[1].num() as i128;
            let rhs = w[1].den() as i128 * w[0].num() as i128;
            assert_eq!(lhs - rhs, 1, "order {k}: {} {}", w[0], w[1]);
        }
    }
}

#[test]
fn middle_term_is_mediant_of_neighbours() {
    for k in 1..=30 {
        let seq = extended_farey_sequence(k).unwrap();
        for w in seq.windows(3) {
            assert_eq!(reduced_mediant(w[0], w[2]), w[1], "order {k}");
        }
    }
}

#[test]
fn neighbour_mediants_bracket_the_pair() {
    for k in 1..=30 {
        let seq = extended_farey_sequence(k).unwrap();
        for w in seq.windows(4) {
            assert!(reduced_mediant(w[0], w[2]) <= w[1], "order {k}");
            assert!(w[2] <= reduced_mediant(w[1], w[3]), "order {k}");
        }
    }
}

#[test]
fn cardinalities_match_totient_sums() {
    for k in 1..=100 {
        let s = totient_sum(k) as usize;
        assert_eq!(farey_sequence(k).unwrap().len(), 1 + s);
        assert_eq!(extended_farey_sequence(k).unwrap().len(), 1 + 2 * s);
        if k <= 30 {
            assert_eq!(farey_intervals(k).unwrap().len(), 2 * s);
        }
    }
}

#[test]
fn lower_order_sequence_embeds_in_next() {
    for k in 1..30 {
        let small = farey_sequence(k).unwrap();
        let big = farey_sequence(k + 1).unwrap();
        let mut it = big.iter();
        for f in &small {
            assert!(it.any(|g| g == f), "{f} missing from order {}", k + 1);
        }
    }
}

#[test]
fn upper_half_is_reciprocal_of_lower_half() {
    for k in 1..=30 {
        let base = farey_sequence(k).unwrap();
        let ext = extended_farey_sequence(k).unwrap();
        let n = base.len();
        assert_eq!(&ext[..n], &base[..]);
        for (i, f) in base.iter().rev().enumerate() {
            assert_eq!(ext[n - 1 + i], f.recip());
        }
    }
}

#[test]
fn intervals_pair_consecutive_terms_and_mediants_lie_inside() {
    for k in 1..=30 {
        let seq = extended_farey_sequence(k).unwrap();
        let ivs = farey_intervals(k).unwrap();
        for (iv, w) in ivs.iter().zip(seq.windows(2)) {
            assert_eq!((iv.lo, iv.hi), (w[0], w[1]));
            let med = mediant(iv.lo, iv.hi);
            assert!(iv.lo < med && med < iv.hi);
            assert_eq!(gcd(med.num(), med.den()), 1);
        }
    }
}

#[test]
fn partitions_split_every_threshold() {
    for k in 1..=12 {
        let all = farey_intervals(k).unwrap();
        for l in 1..=2 * k {
            let p = partition_intervals(k, l).unwrap();
            assert_eq!(p.u_set.len() + p.v_set.len(), all.len());
            assert!(p.u_set.iter().all(|iv| iv.numerator_sum() >= l));
            assert!(p.v_set.iter().all(|iv| iv.numerator_sum() < l));
            if l == 1 {
                assert!(p.v_set.is_empty());
            }
            // at order 1 the interval (1/1, 1/0) already reaches sum 2
            if l == 2 * k && k >= 2 {
                assert!(p.u_set.is_empty());
            }
        }
    }
}

proptest! {
    #[test]
    fn fractions_are_reduced_and_ordered_like_rationals(
        a in 0u64..10_000, b in 1u64..10_000, c in 0u64..10_000, d in 1u64..10_000,
    ) {
        let x = Fraction::new(a, b).unwrap();
        let y = Fraction::new(c, d).unwrap();
        prop_assert_eq!(gcd(x.num(), x.den()), 1);
        prop_assert_eq!(x.num() as u128 * b as u128, a as u128 * x.den() as u128);
        let exact = (a as u128 * d as u128).cmp(&(c as u128 * b as u128));
        prop_assert_eq!(x.cmp(&y), exact);
        prop_assert!(x < Fraction::INFINITY);
    }

    #[test]
    fn fraction_text_roundtrip(a in 0u64..100_000, b in 0u64..100_000) {
        prop_assume!(a != 0 || b != 0);
        let x = Fraction::new(a, b).unwrap();
        prop_assert_eq!(x.to_string().parse::<Fraction>().unwrap(), x);
    }
}
