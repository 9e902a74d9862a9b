//! Max-min constellation scaling for two-user NOMA over a Gaussian
//! Z-channel with PAM/QAM inputs.
//!
//! * [`farey`]: exact Farey sequences and interval sets.
//! * [`channel`]: complex channel model, real decomposition, PAM alphabets.
//! * [`distance`]: minimum distance at both receivers, exhaustive and via Farey pairs.
//! * [`solver`]: closed-form optimal scaling factors and a grid-search oracle.
//! * [`sim`]: Monte Carlo bit-error-rate simulation of the design and baselines.

// `!(x > 0.0)` is used on purpose so NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod channel;
pub mod distance;
pub mod error;
pub mod farey;
pub mod sim;
pub mod solver;

pub use channel::{
    allocate_power, decompose, power_cap, sum_constellation, ComplexZcChannel, NoiseModel,
    PamConstellation, RealZcInstance, SumConstellation,
};
pub use distance::{
    d1, mediant_gap_bound, min_distance_bruteforce, min_distance_farey, DifferencePair,
    DistanceReport, GapBound,
};
pub use error::{Error, Result};
pub use farey::{
    extended_farey_sequence, farey_intervals, farey_sequence, mediant, partition_intervals,
    FareyInterval, Fraction, IntervalPartition,
};
pub use sim::{
    ml_detect_d1, ml_detect_d2, run_baseline, run_ber, BerCurve, BerRow, FadingSpec, Scheme,
    SimConfig, Stream, StreamCounts,
};
pub use solver::{
    classify, oracle_solve, solve, solve_complex, solve_interval, Branch, Candidate,
    ScalingSolution, Scenario, ScenarioTag,
};
