//! Exact Farey sequences, their reciprocal extension up to `1/0`, and the
//! interval sets built from adjacent terms.
//!
//! Everything here is integer arithmetic. Fractions are kept irreducible and
//! compared by cross-multiplication in `u128`, so orders far beyond any
//! practical PAM size are safe.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A non-negative irreducible fraction `num/den`; `1/0` is infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Fraction {
    pub const ZERO: Fraction = Fraction { num: 0, den: 1 };
    pub const ONE: Fraction = Fraction { num: 1, den: 1 };
    pub const INFINITY: Fraction = Fraction { num: 1, den: 0 };

    /// Builds `num/den` reduced to lowest terms. `0/0` is rejected.
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 && den == 0 {
            return Err(Error::ZeroOverZero);
        }
        let g = gcd(num, den);
        Ok(Fraction {
            num: num / g,
            den: den / g,
        })
    }

    /// Caller guarantees `gcd(num, den) == 1` and not `0/0`.
    pub(crate) const fn new_unchecked(num: u64, den: u64) -> Self {
        Fraction { num, den }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den == 0
    }

    pub fn recip(&self) -> Fraction {
        Fraction {
            num: self.den,
            den: self.num,
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.den == 0 {
            f64::INFINITY
        } else {
            self.num as f64 / self.den as f64
        }
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        // b1/a1 vs b2/a2  <=>  b1*a2 vs b2*a1; valid for 1/0 as well since
        // the only infinite value is 1/0.
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseFraction(s.to_string());
        let (n, d) = s.trim().split_once('/').ok_or_else(bad)?;
        let num = n.trim().parse::<u64>().map_err(|_| bad())?;
        let den = d.trim().parse::<u64>().map_err(|_| bad())?;
        Fraction::new(num, den)
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Fraction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Mediant `(b1+b2)/(a1+a2)` of two Farey neighbours.
///
/// For a Farey pair the component sums are coprime, so no reduction is
/// needed; the result lies strictly between the two inputs.
pub fn mediant(lo: Fraction, hi: Fraction) -> Fraction {
    Fraction::new_unchecked(lo.num + hi.num, lo.den + hi.den)
}

/// The open interval between two adjacent terms of an extended Farey sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FareyInterval {
    pub lo: Fraction,
    pub hi: Fraction,
}

impl FareyInterval {
    pub fn mediant(&self) -> Fraction {
        mediant(self.lo, self.hi)
    }

    /// `b_k + b_{k+1}`
    pub fn numerator_sum(&self) -> u64 {
        self.lo.num + self.hi.num
    }

    /// `a_k + a_{k+1}`
    pub fn denominator_sum(&self) -> u64 {
        self.lo.den + self.hi.den
    }
}

impl fmt::Display for FareyInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// Split of a Farey interval set by numerator sum against a threshold `L`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalPartition {
    /// Intervals with `num(lo) + num(hi) >= L`.
    pub u_set: Vec<FareyInterval>,
    /// Intervals with `num(lo) + num(hi) < L`.
    pub v_set: Vec<FareyInterval>,
    pub threshold: u64,
}

/// Farey sequence of order `order`: irreducible fractions in `[0, 1]` with
/// denominator at most `order`, ascending.
pub fn farey_sequence(order: u64) -> Result<Vec<Fraction>> {
    if order == 0 {
        return Err(Error::InvalidOrder(order));
    }
    let mut out = Vec::new();
    // next-term recurrence from the seeds 0/1, 1/order
    let (mut a, mut b, mut c, mut d) = (0u64, 1u64, 1u64, order);
    out.push(Fraction::ZERO);
    while c <= order {
        out.push(Fraction::new_unchecked(c, d));
        if c == d {
            break;
        }
        let k = (order + b) / d;
        (a, b, c, d) = (c, d, k * c - a, k * d - b);
    }
    Ok(out)
}

/// Extended Farey sequence: the Farey sequence followed by the reciprocals
/// of its terms in reverse, ending at `1/0`.
pub fn extended_farey_sequence(order: u64) -> Result<Vec<Fraction>> {
    let mut seq = farey_sequence(order)?;
    let upper: Vec<Fraction> = seq.iter().rev().skip(1).map(Fraction::recip).collect();
    seq.extend(upper);
    Ok(seq)
}

/// All Farey intervals of the extended sequence of `order`, ascending.
pub fn farey_intervals(order: u64) -> Result<Vec<FareyInterval>> {
    let seq = extended_farey_sequence(order)?;
    Ok(seq
        .windows(2)
        .map(|w| FareyInterval { lo: w[0], hi: w[1] })
        .collect())
}

/// Partition `farey_intervals(order)` at numerator-sum threshold `threshold`.
pub fn partition_intervals(order: u64, threshold: u64) -> Result<IntervalPartition> {
    if order == 0 {
        return Err(Error::InvalidOrder(order));
    }
    if threshold == 0 || threshold > 2 * order {
        return Err(Error::InvalidThreshold { order, threshold });
    }
    let (u_set, v_set) = farey_intervals(order)?
        .into_iter()
        .partition(|iv| iv.numerator_sum() >= threshold);
    Ok(IntervalPartition {
        u_set,
        v_set,
        threshold,
    })
}
