//! Max-min scaling factors for the real Z-channel.
//!
//! For every Farey interval of order `M-1` the problem restricted to
//! `g21 w2 / (g11 w1)` lying in that interval has a four-branch closed form
//! ([`solve_interval`]). The global optimum is the best interval. The
//! scenario solvers in [`solve`] jump straight to the winning interval using
//! the weak / strong / very-strong formulas; their answer is cross-checked
//! against the per-interval maximum and any disagreement is reported on the
//! returned solution.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::channel::{decompose, ComplexZcChannel, RealZcInstance};
use crate::distance::{interval_index, min_distance_bruteforce};
use crate::error::{Error, Result};
use crate::farey::{
    extended_farey_sequence, farey_intervals, partition_intervals, FareyInterval, Fraction,
};

/// Relative tolerance for "same objective" decisions in the solver.
pub const OBJECTIVE_RTOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScenarioTag {
    Weak,
    Strong,
    VeryStrong,
}

/// Cross-link strength class, driven by `g21 / g22`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub tag: ScenarioTag,
    /// `L` with `L - 1 < ratio <= L`; only set for [`ScenarioTag::Strong`].
    pub threshold: Option<u64>,
    pub ratio: f64,
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.tag, self.threshold) {
            (ScenarioTag::Weak, _) => write!(f, "weak"),
            (ScenarioTag::Strong, Some(l)) => write!(f, "strong(L={l})"),
            (ScenarioTag::Strong, None) => write!(f, "strong"),
            (ScenarioTag::VeryStrong, _) => write!(f, "very_strong"),
        }
    }
}

/// Which closed-form branch produced a solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// Per-interval, mediant balanced, `w2` at its cap.
    Interval1a,
    /// Per-interval, mediant balanced, `w1` at its cap.
    Interval1b,
    /// Per-interval, D2 limited, `w2` at its cap.
    Interval2a,
    /// Per-interval, D2 limited, `w1` at its cap.
    Interval2b,
    /// No cross link: both users at full power.
    NoCrossLink,
    Weak1,
    Weak2,
    Weak3a,
    Weak3b,
    StrongUa,
    StrongUb,
    StrongUc1,
    StrongUc2,
    StrongVa,
    StrongVb1,
    StrongVb2,
    VeryStrong1,
    VeryStrong2a,
    VeryStrong2b,
    /// Grid search.
    Oracle,
}

impl Branch {
    pub const ALL: [Branch; 20] = [
        Branch::Interval1a,
        Branch::Interval1b,
        Branch::Interval2a,
        Branch::Interval2b,
        Branch::NoCrossLink,
        Branch::Weak1,
        Branch::Weak2,
        Branch::Weak3a,
        Branch::Weak3b,
        Branch::StrongUa,
        Branch::StrongUb,
        Branch::StrongUc1,
        Branch::StrongUc2,
        Branch::StrongVa,
        Branch::StrongVb1,
        Branch::StrongVb2,
        Branch::VeryStrong1,
        Branch::VeryStrong2a,
        Branch::VeryStrong2b,
        Branch::Oracle,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            Branch::Interval1a => "interval-1a",
            Branch::Interval1b => "interval-1b",
            Branch::Interval2a => "interval-2a",
            Branch::Interval2b => "interval-2b",
            Branch::NoCrossLink => "no-cross-link",
            Branch::Weak1 => "weak-1",
            Branch::Weak2 => "weak-2",
            Branch::Weak3a => "weak-3a",
            Branch::Weak3b => "weak-3b",
            Branch::StrongUa => "strong-u-a",
            Branch::StrongUb => "strong-u-b",
            Branch::StrongUc1 => "strong-u-c1",
            Branch::StrongUc2 => "strong-u-c2",
            Branch::StrongVa => "strong-v-a",
            Branch::StrongVb1 => "strong-v-b1",
            Branch::StrongVb2 => "strong-v-b2",
            Branch::VeryStrong1 => "very-strong-1",
            Branch::VeryStrong2a => "very-strong-2a",
            Branch::VeryStrong2b => "very-strong-2b",
            Branch::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for Branch {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Branch::ALL
            .into_iter()
            .find(|b| b.label() == s)
            .ok_or_else(|| format!("unknown branch {s:?}"))
    }
}

impl Serialize for Branch {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

impl<'de> Deserialize<'de> for Branch {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// One per-interval candidate considered by the solver.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub interval: FareyInterval,
    pub branch: Branch,
    pub w1: f64,
    pub w2: f64,
    pub objective: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalingSolution {
    pub w1: f64,
    pub w2: f64,
    /// Smaller of the two receivers' minimum half-distances at `(w1, w2)`.
    pub objective: f64,
    pub scenario: Scenario,
    /// Farey interval `(lo, hi]` containing `g21 w2 / (g11 w1)`.
    pub interval: Option<FareyInterval>,
    pub branch: Branch,
    /// Branch the scenario formulas selected, when it differs from `branch`
    /// because the per-interval maximum beat it (or it was not applicable).
    pub printed_branch: Option<Branch>,
    /// False when the scenario formulas were overruled by the per-interval
    /// maximum.
    pub scenario_formula_agrees: bool,
    pub trace: Vec<Candidate>,
}

/// Classifies the cross link by `g21 / g22`.
pub fn classify(inst: &RealZcInstance) -> Scenario {
    let ratio = inst.g21 / inst.g22;
    let two_m = 2.0 * inst.m as f64;
    if ratio <= 1.0 {
        Scenario {
            tag: ScenarioTag::Weak,
            threshold: None,
            ratio,
        }
    } else if ratio < two_m {
        Scenario {
            tag: ScenarioTag::Strong,
            threshold: Some(ratio.ceil() as u64),
            ratio,
        }
    } else {
        Scenario {
            tag: ScenarioTag::VeryStrong,
            threshold: None,
            ratio,
        }
    }
}

// `a/b + g22/(b g21)` for a term `b/a`; infinite for 0/1.
fn shifted_inverse(inst: &RealZcInstance, f: Fraction) -> f64 {
    if f.num() == 0 {
        return f64::INFINITY;
    }
    let b = f.num() as f64;
    f.den() as f64 / b + inst.g22 / (b * inst.g21)
}

/// Closed-form optimum with the ratio restricted to one Farey interval.
pub fn solve_interval(inst: &RealZcInstance, interval: &FareyInterval) -> Candidate {
    let (g11, g21, g22) = (inst.g11, inst.g21, inst.g22);
    let (c1, c2) = (inst.cap1(), inst.cap2());
    let asum = interval.denominator_sum() as f64;
    let bsum = interval.numerator_sum() as f64;
    let sp = inst.p2.sqrt() / inst.p1.sqrt();
    let make = |branch, w1, w2, objective| Candidate {
        interval: *interval,
        branch,
        w1,
        w2,
        objective,
    };

    if g21 == 0.0 {
        // D1 never sees S2; the mediant-balanced form degenerates.
        return make(Branch::Interval1b, c1, c2, g11 * c1 / asum);
    }

    if g21 / g22 <= bsum {
        if g11 / g21 >= sp * asum / bsum {
            make(
                Branch::Interval1a,
                asum * g21 / (bsum * g11) * c2,
                c2,
                g21 / bsum * c2,
            )
        } else {
            make(
                Branch::Interval1b,
                c1,
                bsum * g11 / (asum * g21) * c1,
                g11 / asum * c1,
            )
        }
    } else {
        let hi = interval.hi;
        let (a_hi, b_hi) = (hi.den() as f64, hi.num() as f64);
        let denom = a_hi * g21 + g22;
        if g11 / g21 >= sp * (a_hi / b_hi + g22 / (b_hi * g21)) {
            make(Branch::Interval2a, denom / (b_hi * g11) * c2, c2, g22 * c2)
        } else {
            make(
                Branch::Interval2b,
                c1,
                b_hi * g11 / denom * c1,
                b_hi * g11 * g22 / denom * c1,
            )
        }
    }
}

/// Every per-interval candidate, in interval order.
pub fn interval_candidates(inst: &RealZcInstance) -> Vec<Candidate> {
    farey_intervals(inst.farey_order())
        .expect("order >= 1")
        .iter()
        .map(|iv| solve_interval(inst, iv))
        .collect()
}

/// Best per-interval candidate; ties go to the earliest interval.
pub fn best_interval_candidate(candidates: &[Candidate]) -> Candidate {
    let mut best = candidates[0];
    for c in &candidates[1..] {
        if c.objective > best.objective {
            best = *c;
        }
    }
    best
}

// A closed-form point produced by a scenario formula, before verification.
#[derive(Debug, Clone, Copy)]
struct Proposal {
    branch: Branch,
    w1: f64,
    w2: f64,
}

fn argmin_by<T: Copy>(items: &[T], key: impl Fn(&T) -> u64) -> T {
    let mut best = items[0];
    for it in &items[1..] {
        if key(it) < key(&best) {
            best = *it;
        }
    }
    best
}

fn weak_proposal(inst: &RealZcInstance, all: &[FareyInterval]) -> Proposal {
    let (g11, g21) = (inst.g11, inst.g21);
    let (c1, c2) = (inst.cap1(), inst.cap2());
    let m = inst.m as f64;
    let sp = inst.p2.sqrt() / inst.p1.sqrt();
    let x = g11 / g21;

    if x <= sp / m {
        return Proposal {
            branch: Branch::Weak1,
            w1: c1,
            w2: m * g11 / g21 * c1,
        };
    }
    if x >= m * sp {
        return Proposal {
            branch: Branch::Weak2,
            w1: m * g21 / g11 * c2,
            w2: c2,
        };
    }
    ladder_proposal(inst, all, (Branch::Weak3a, Branch::Weak3b))
        .expect("weak case 3 covers (sp/M, M sp)")
}

fn inverse_mediant(iv: &FareyInterval) -> f64 {
    iv.denominator_sum() as f64 / iv.numerator_sum() as f64
}

// Descending ladder of inverse mediants: find l with
// sp*A_{l+1}/B_{l+1} < x <= sp*A_l/B_l, then compare the best
// denominator-sum interval at or before l with the best numerator-sum
// interval after it.
fn ladder_proposal(
    inst: &RealZcInstance,
    ivs: &[FareyInterval],
    (first, second): (Branch, Branch),
) -> Option<Proposal> {
    let (g11, g21) = (inst.g11, inst.g21);
    let (c1, c2) = (inst.cap1(), inst.cap2());
    let sp = inst.p2.sqrt() / inst.p1.sqrt();
    let x = g11 / g21;
    let l = (0..ivs.len().saturating_sub(1))
        .find(|&l| sp * inverse_mediant(&ivs[l + 1]) < x && x <= sp * inverse_mediant(&ivs[l]))?;
    let la = argmin_by(&ivs[..=l], FareyInterval::denominator_sum);
    let lb = argmin_by(&ivs[l + 1..], FareyInterval::numerator_sum);
    let (aa, ba) = (la.denominator_sum() as f64, la.numerator_sum() as f64);
    let (ab, bb) = (lb.denominator_sum() as f64, lb.numerator_sum() as f64);
    if x >= sp * aa / bb {
        Some(Proposal {
            branch: first,
            w1: c1,
            w2: ba * g11 / (aa * g21) * c1,
        })
    } else {
        Some(Proposal {
            branch: second,
            w1: ab * g21 / (bb * g11) * c2,
            w2: c2,
        })
    }
}

// Decreasing ladder of shifted inverses `C(f) = a/b + g22/(b g21)`: find the
// interval with C(hi) < t <= C(lo), t = g11 sqrt(p1) / (g21 sqrt(p2)).
fn shifted_ladder_proposal(
    inst: &RealZcInstance,
    ivs: &[FareyInterval],
    (first, second): (Branch, Branch),
) -> Option<Proposal> {
    let (g11, g21, g22) = (inst.g11, inst.g21, inst.g22);
    let (c1, c2) = (inst.cap1(), inst.cap2());
    let sp = inst.p2.sqrt() / inst.p1.sqrt();
    let x = g11 / g21;
    let t = x / sp;
    let iv = ivs
        .iter()
        .find(|iv| shifted_inverse(inst, iv.hi) < t && t <= shifted_inverse(inst, iv.lo))?;
    if x >= sp * shifted_inverse(inst, iv.lo) {
        let (a, b) = (iv.lo.den() as f64, iv.lo.num() as f64);
        Some(Proposal {
            branch: first,
            w1: c1,
            w2: b * g11 / (a * g21 + g22) * c1,
        })
    } else {
        let (a, b) = (iv.hi.den() as f64, iv.hi.num() as f64);
        Some(Proposal {
            branch: second,
            w1: (a * g21 + g22) / (b * g11) * c2,
            w2: c2,
        })
    }
}

fn strong_u_proposal(inst: &RealZcInstance, u_set: &[FareyInterval]) -> Option<Proposal> {
    let last = u_set.last()?;
    let (g11, g21) = (inst.g11, inst.g21);
    let (c1, c2) = (inst.cap1(), inst.cap2());
    let m = inst.m as f64;
    let sp = inst.p2.sqrt() / inst.p1.sqrt();
    let x = g11 / g21;
    if x <= sp * inverse_mediant(last) {
        let lc = argmin_by(u_set, FareyInterval::denominator_sum);
        let (a, b) = (lc.denominator_sum() as f64, lc.numerator_sum() as f64);
        return Some(Proposal {
            branch: Branch::StrongUa,
            w1: c1,
            w2: b * g11 / (a * g21) * c1,
        });
    }
    if x >= m * sp {
        return Some(Proposal {
            branch: Branch::StrongUb,
            w1: m * g21 / g11 * c2,
            w2: c2,
        });
    }
    ladder_proposal(inst, u_set, (Branch::StrongUc1, Branch::StrongUc2))
}

fn strong_v_proposal(inst: &RealZcInstance, v_set: &[FareyInterval]) -> Option<Proposal> {
    let last = v_set.last()?;
    let (g11, g21, g22) = (inst.g11, inst.g21, inst.g22);
    let c1 = inst.cap1();
    let sp = inst.p2.sqrt() / inst.p1.sqrt();
    if g11 / g22 <= sp {
        // Transcribed as given, including the g22 factor on w2.
        let (a, b) = (last.hi.den() as f64, last.hi.num() as f64);
        return Some(Proposal {
            branch: Branch::StrongVa,
            w1: c1,
            w2: b * g11 * g22 / (a * g21 + g22) * c1,
        });
    }
    shifted_ladder_proposal(inst, v_set, (Branch::StrongVb1, Branch::StrongVb2))
}

fn very_strong_proposal(inst: &RealZcInstance, all: &[FareyInterval]) -> Option<Proposal> {
    let (g11, g22) = (inst.g11, inst.g22);
    let c1 = inst.cap1();
    let sp = inst.p2.sqrt() / inst.p1.sqrt();
    if g11 / g22 <= sp {
        return Some(Proposal {
            branch: Branch::VeryStrong1,
            w1: c1,
            w2: g11 / g22 * c1,
        });
    }
    shifted_ladder_proposal(inst, all, (Branch::VeryStrong2a, Branch::VeryStrong2b))
}

// Snaps values that overshoot a cap by rounding only; rejects real overshoot.
fn feasible(inst: &RealZcInstance, w1: f64, w2: f64) -> Option<(f64, f64)> {
    let snap = |w: f64, cap: f64| {
        if !(w.is_finite() && w > 0.0) {
            None
        } else if w <= cap {
            Some(w)
        } else if w <= cap * (1.0 + 1e-12) {
            Some(cap)
        } else {
            None
        }
    };
    Some((snap(w1, inst.cap1())?, snap(w2, inst.cap2())?))
}

fn active_interval(inst: &RealZcInstance, w1: f64, w2: f64) -> Option<FareyInterval> {
    let seq = extended_farey_sequence(inst.farey_order()).expect("order >= 1");
    interval_index(&seq, inst.g11 * w1, inst.g21 * w2).map(|k| FareyInterval {
        lo: seq[k],
        hi: seq[k + 1],
    })
}

fn scenario_proposals(inst: &RealZcInstance, scenario: &Scenario) -> Vec<Proposal> {
    let order = inst.farey_order();
    let all = farey_intervals(order).expect("order >= 1");
    match scenario.tag {
        ScenarioTag::Weak => vec![weak_proposal(inst, &all)],
        ScenarioTag::Strong => {
            let l = scenario.threshold.expect("strong scenario carries L");
            // L can exceed 2(M-1) just below the very-strong boundary; no
            // interval reaches that numerator sum, so U is empty.
            let (u_set, v_set) = if l <= 2 * order {
                let p = partition_intervals(order, l).expect("threshold in range");
                (p.u_set, p.v_set)
            } else {
                (Vec::new(), all)
            };
            strong_u_proposal(inst, &u_set)
                .into_iter()
                .chain(strong_v_proposal(inst, &v_set))
                .collect()
        }
        ScenarioTag::VeryStrong => very_strong_proposal(inst, &all).into_iter().collect(),
    }
}

fn objective_at(inst: &RealZcInstance, w1: f64, w2: f64) -> f64 {
    min_distance_bruteforce(inst, w1, w2).objective
}

/// Optimal `(w1, w2)` for a real Z-channel.
pub fn solve(inst: &RealZcInstance) -> Result<ScalingSolution> {
    if !(inst.g11 > 0.0 && inst.g22 > 0.0) {
        return Err(Error::DegenerateChannel("direct links must be positive"));
    }
    let scenario = classify(inst);
    let (c1, c2) = (inst.cap1(), inst.cap2());

    if inst.g21 == 0.0 {
        return Ok(ScalingSolution {
            w1: c1,
            w2: c2,
            objective: objective_at(inst, c1, c2),
            scenario,
            interval: None,
            branch: Branch::NoCrossLink,
            printed_branch: None,
            scenario_formula_agrees: true,
            trace: Vec::new(),
        });
    }

    let trace = interval_candidates(inst);
    let best = best_interval_candidate(&trace);
    let interval_objective = objective_at(inst, best.w1, best.w2);

    // Verified scenario-formula point with the largest achieved objective;
    // earlier proposals win ties.
    let mut printed: Option<(Proposal, f64)> = None;
    let mut first_branch = None;
    for p in scenario_proposals(inst, &scenario) {
        first_branch.get_or_insert(p.branch);
        let Some((w1, w2)) = feasible(inst, p.w1, p.w2) else {
            continue;
        };
        let obj = objective_at(inst, w1, w2);
        if printed.is_none_or(|(_, best)| obj > best) {
            printed = Some((Proposal { w1, w2, ..p }, obj));
        }
    }

    let tol = OBJECTIVE_RTOL * interval_objective.abs().max(f64::MIN_POSITIVE);
    let (w1, w2, objective, branch, printed_branch, agrees) = match printed {
        Some((p, obj)) if obj >= interval_objective - tol => {
            (p.w1, p.w2, obj, p.branch, None, true)
        }
        other => (
            best.w1,
            best.w2,
            interval_objective,
            best.branch,
            other.map(|(p, _)| p.branch).or(first_branch),
            false,
        ),
    };

    Ok(ScalingSolution {
        w1,
        w2,
        objective,
        scenario,
        interval: active_interval(inst, w1, w2),
        branch,
        printed_branch,
        scenario_formula_agrees: agrees,
        trace,
    })
}

/// Solves the in-phase and quadrature rails of a complex channel.
pub fn solve_complex(ch: &ComplexZcChannel) -> Result<(ScalingSolution, ScalingSolution)> {
    let (i, q) = decompose(ch)?;
    Ok((solve(&i)?, solve(&q)?))
}

/// Grid-search reference solution.
///
/// At the optimum at least one user runs at full power, so it suffices to
/// sweep `w2` over `(0, cap2]` with `w1 = cap1` and `w1` over `(0, cap1]`
/// with `w2 = cap2`, `grid_points` samples each, scoring every point with
/// the exhaustive distance search. Ties go to the larger scaling factor.
pub fn oracle_solve(inst: &RealZcInstance, grid_points: usize) -> ScalingSolution {
    let (c1, c2) = (inst.cap1(), inst.cap2());
    let n = grid_points.max(1);
    let point = |sweep: usize, i: usize| {
        let frac = i as f64 / n as f64;
        if sweep == 0 {
            (c1, c2 * frac)
        } else {
            (c1 * frac, c2)
        }
    };
    let (_, sweep, i) = (0..2usize)
        .into_par_iter()
        .flat_map(|sweep| (1..=n).into_par_iter().map(move |i| (sweep, i)))
        .map(|(sweep, i)| {
            let (w1, w2) = point(sweep, i);
            (objective_at(inst, w1, w2), sweep, i)
        })
        .max_by(|a, b| a.0.total_cmp(&b.0).then(a.2.cmp(&b.2)).then(a.1.cmp(&b.1)))
        .expect("non-empty grid");
    let (w1, w2) = point(sweep, i);
    ScalingSolution {
        w1,
        w2,
        objective: objective_at(inst, w1, w2),
        scenario: classify(inst),
        interval: active_interval(inst, w1, w2),
        branch: Branch::Oracle,
        printed_branch: None,
        scenario_formula_agrees: true,
        trace: Vec::new(),
    }
}
