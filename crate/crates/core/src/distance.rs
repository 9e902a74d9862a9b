//! Minimum Euclidean distance at both receivers of a real Z-channel.
//!
//! Two routes are provided: an exhaustive scan of all symbol-difference
//! pairs and a Farey reduction that only looks at the two endpoints of the
//! Farey interval containing `g21 w2 / (g11 w1)`. They must agree exactly.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::channel::RealZcInstance;
use crate::error::{Error, Result};
use crate::farey::{extended_farey_sequence, FareyInterval, Fraction};

/// Relative tolerance used when comparing a real ratio against a fraction.
pub const RATIO_RTOL: f64 = 1e-12;

/// Half-differences `m = (s2' - s2)/2`, `n = (s1 - s1')/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DifferencePair {
    pub m: i64,
    pub n: i64,
}

impl DifferencePair {
    pub fn new(m: i64, n: i64) -> Self {
        DifferencePair { m, n }
    }

    /// The pair `(den, num)` sitting on the ray of a Farey term.
    pub fn from_fraction(f: Fraction) -> Self {
        DifferencePair {
            m: f.den() as i64,
            n: f.num() as i64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistanceReport {
    pub d1_min: f64,
    pub d1_argmin: DifferencePair,
    pub d2_min: f64,
    pub objective: f64,
}

impl DistanceReport {
    fn new(d1_min: f64, d1_argmin: DifferencePair, d2_min: f64) -> Self {
        DistanceReport {
            d1_min,
            d1_argmin,
            d2_min,
            objective: d1_min.min(d2_min),
        }
    }
}

// Shared by both routes so equal pairs give bit-identical values.
#[inline]
fn d1_raw(a: f64, b: f64, pair: DifferencePair) -> f64 {
    (a * pair.n as f64 - b * pair.m as f64).abs()
}

/// Half distance at D1 between two sum points differing by `pair`.
pub fn d1(inst: &RealZcInstance, w1: f64, w2: f64, pair: DifferencePair) -> Result<f64> {
    if pair.m == 0 && pair.n == 0 {
        return Err(Error::ZeroPair);
    }
    Ok(d1_raw(inst.g11 * w1, inst.g21 * w2, pair))
}

/// Exhaustive minimum over the non-negative quadrant of difference pairs,
/// which attains the same minimum as the full signed set.
///
/// Ties go to the smallest `m`, then the smallest `n`.
pub fn min_distance_bruteforce(inst: &RealZcInstance, w1: f64, w2: f64) -> DistanceReport {
    let k = inst.farey_order() as i64;
    let (a, b) = (inst.g11 * w1, inst.g21 * w2);
    let mut best = f64::INFINITY;
    let mut arg = DifferencePair::new(0, 1);
    for m in 0..=k {
        for n in 0..=k {
            if m == 0 && n == 0 {
                continue;
            }
            let pair = DifferencePair::new(m, n);
            let d = d1_raw(a, b, pair);
            if d < best {
                best = d;
                arg = pair;
            }
        }
    }
    DistanceReport::new(best, arg, inst.g22 * w2)
}

/// Compares the real ratio `b / a` against `frac` by cross-multiplication,
/// treating relative differences up to [`RATIO_RTOL`] as equality.
pub fn cmp_ratio(a: f64, b: f64, frac: Fraction) -> Ordering {
    let lhs = b * frac.den() as f64;
    let rhs = a * frac.num() as f64;
    let scale = lhs.abs().max(rhs.abs());
    if (lhs - rhs).abs() <= RATIO_RTOL * scale {
        Ordering::Equal
    } else if lhs < rhs {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Where a ratio falls in an extended Farey sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioLocation {
    /// The ratio equals term `seq[i]`.
    Exact(usize),
    /// The ratio lies in `(seq[k], seq[k+1])`.
    Inside(usize),
}

/// Locates `b / a` (with `a > 0`) in an ascending extended sequence.
pub fn locate_ratio(seq: &[Fraction], a: f64, b: f64) -> RatioLocation {
    // first term that is >= the ratio; 1/0 always qualifies
    let idx = seq.partition_point(|&f| cmp_ratio(a, b, f) == Ordering::Greater);
    if cmp_ratio(a, b, seq[idx]) == Ordering::Equal {
        RatioLocation::Exact(idx)
    } else {
        RatioLocation::Inside(idx - 1)
    }
}

/// Index of the interval a ratio belongs to under the half-open convention
/// `(lo, hi]`. `None` only for a ratio equal to zero.
pub fn interval_index(seq: &[Fraction], a: f64, b: f64) -> Option<usize> {
    match locate_ratio(seq, a, b) {
        RatioLocation::Exact(0) => None,
        RatioLocation::Exact(i) => Some(i - 1),
        RatioLocation::Inside(k) => Some(k),
    }
}

/// Minimum distance via the Farey reduction.
///
/// The ratio `r = g21 w2 / (g11 w1)` is located in the extended Farey
/// sequence of order `M-1`. An exact hit on a term means two sum points
/// coincide. Otherwise only the two endpoint pairs can be minimal, and the
/// mediant decides which one.
pub fn min_distance_farey(inst: &RealZcInstance, w1: f64, w2: f64) -> DistanceReport {
    let seq = extended_farey_sequence(inst.farey_order()).expect("order >= 1");
    let (a, b) = (inst.g11 * w1, inst.g21 * w2);
    let d2 = inst.g22 * w2;
    match locate_ratio(&seq, a, b) {
        RatioLocation::Exact(i) => {
            DistanceReport::new(0.0, DifferencePair::from_fraction(seq[i]), d2)
        }
        RatioLocation::Inside(k) => {
            let (lo, hi) = (seq[k], seq[k + 1]);
            let lo_pair = DifferencePair::from_fraction(lo);
            let hi_pair = DifferencePair::from_fraction(hi);
            let d_lo = d1_raw(a, b, lo_pair);
            let d_hi = d1_raw(a, b, hi_pair);
            let pick = match cmp_ratio(a, b, crate::farey::mediant(lo, hi)) {
                Ordering::Less => lo_pair,
                Ordering::Greater => hi_pair,
                Ordering::Equal if d_hi < d_lo => hi_pair,
                Ordering::Equal => lo_pair,
            };
            let d = if pick == lo_pair { d_lo } else { d_hi };
            DistanceReport::new(d, pick, d2)
        }
    }
}

/// Ordered witness `lower <= mediant_inverse <= upper` relating the inverse
/// mediant of a Farey interval to its shifted endpoint inverses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapBound {
    /// `a_{k+1}/b_{k+1} + g22/(b_{k+1} g21)`
    pub lower: f64,
    /// `(a_k + a_{k+1}) / (b_k + b_{k+1})`
    pub mediant_inverse: f64,
    /// `a_k/b_k - g22/(b_k g21)`, infinite when `b_k = 0`
    pub upper: f64,
}

impl GapBound {
    pub fn as_array(&self) -> [f64; 3] {
        [self.lower, self.mediant_inverse, self.upper]
    }

    pub fn is_ordered(&self, rtol: f64) -> bool {
        let slack = |x: f64| rtol * x.abs().max(1.0);
        self.lower <= self.mediant_inverse + slack(self.mediant_inverse)
            && self.mediant_inverse <= self.upper + slack(self.mediant_inverse)
    }
}

/// Evaluates the gap bound for `interval`; applicable only when
/// `g21/g22 >= b_k + b_{k+1}`.
pub fn mediant_gap_bound(interval: &FareyInterval, g21: f64, g22: f64) -> Result<GapBound> {
    let bsum = interval.numerator_sum();
    let ratio = g21 / g22;
    if !(ratio >= bsum as f64) {
        return Err(Error::InapplicableBound {
            ratio,
            numerator_sum: bsum,
        });
    }
    let (lo, hi) = (interval.lo, interval.hi);
    let lower = hi.den() as f64 / hi.num() as f64 + g22 / (hi.num() as f64 * g21);
    let mediant_inverse = interval.denominator_sum() as f64 / bsum as f64;
    let upper = if lo.num() == 0 {
        f64::INFINITY
    } else {
        lo.den() as f64 / lo.num() as f64 - g22 / (lo.num() as f64 * g21)
    };
    Ok(GapBound {
        lower,
        mediant_inverse,
        upper,
    })
}
