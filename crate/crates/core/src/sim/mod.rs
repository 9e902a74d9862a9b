//! Monte Carlo bit-error-rate simulation of the max-min NOMA design and of
//! the TDMA, FDMA and constellation-rotation NOMA baselines.
//!
//! Randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`). Trial `t` uses
//! the generator seeded with `seed_from_u64(seed)` and switched to stream `t`,
//! so every trial owns an independent substream and results do not depend on
//! how trials are scheduled across threads. Counts are integers summed per
//! trial, which keeps the reduction order-independent.
//!
//! Within a trial the same symbols and unit-variance noise samples are
//! reused at every SNR point (noise is `sigma * z`), so curves are smooth in
//! SNR and points of one curve are directly comparable.
//!
//! Three message streams are counted: `s1` detected at D1, `s2` detected at
//! D1 and `s2` detected at D2. The reported BER is the bit-weighted mean over
//! the three streams; per-stream counts are kept alongside it.

mod detect;

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::channel::{allocate_power, decompose, power_cap, ComplexZcChannel};
use crate::error::{Error, Result};
use crate::solver::solve;

use detect::{joint_pam_indices, nearest_pam_index, nearest_point};
pub use detect::{ml_detect_d1, ml_detect_d2};

/// Minimum number of simulated symbols behind every reported point.
pub const MIN_SYMBOLS_PER_POINT: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    #[serde(rename = "noma")]
    ProposedNoma,
    Tdma,
    Fdma,
    #[serde(rename = "crnoma")]
    CrNoma,
}

impl Scheme {
    pub const ALL: [Scheme; 4] = [
        Scheme::ProposedNoma,
        Scheme::Tdma,
        Scheme::Fdma,
        Scheme::CrNoma,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Scheme::ProposedNoma => "noma",
            Scheme::Tdma => "tdma",
            Scheme::Fdma => "fdma",
            Scheme::CrNoma => "crnoma",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scheme::ALL
            .into_iter()
            .find(|sc| sc.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnsupportedScheme(s.to_string()))
    }
}

/// Channel law for the simulation: independent Rayleigh links drawn per
/// trial, or one fixed channel reused for every trial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FadingSpec {
    /// `h_ij ~ CN(0, var_ij)`.
    Rayleigh { var11: f64, var21: f64, var22: f64 },
    Fixed {
        h11: Complex64,
        h21: Complex64,
        h22: Complex64,
    },
}

impl FadingSpec {
    fn validate(&self) -> Result<()> {
        match *self {
            FadingSpec::Rayleigh {
                var11,
                var21,
                var22,
            } => {
                for v in [var11, var21, var22] {
                    if !(v.is_finite() && v > 0.0) {
                        return Err(Error::InvalidConfig(format!(
                            "fading variance {v} must be finite and positive"
                        )));
                    }
                }
                Ok(())
            }
            FadingSpec::Fixed { h11, h21, h22 } => {
                if [h11, h21, h22].iter().any(|h| !h.is_finite()) {
                    return Err(Error::InvalidConfig("channel gains must be finite".into()));
                }
                Ok(())
            }
        }
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> [Complex64; 3] {
        match *self {
            FadingSpec::Rayleigh {
                var11,
                var21,
                var22,
            } => [var11, var21, var22].map(|v| {
                let s = (v / 2.0).sqrt();
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                Complex64::new(s * re, s * im)
            }),
            FadingSpec::Fixed { h11, h21, h22 } => [h11, h21, h22],
        }
    }
}

/// Simulation settings. `snr_grid` holds linear SNR values `rho`, with
/// per-real-dimension noise variance `1/(2 rho)`; `p1` and `p2` are the
/// total (complex) power budgets of the two transmitters.
#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig {
    pub scheme: Scheme,
    pub m: u32,
    pub mp: u32,
    pub snr_grid: Vec<f64>,
    pub trials: u64,
    pub symbols_per_trial: u64,
    pub seed: u64,
    pub p1: f64,
    pub p2: f64,
}

impl SimConfig {
    pub fn new(
        scheme: Scheme,
        m: u32,
        mp: u32,
        snr_grid: Vec<f64>,
        trials: u64,
        symbols_per_trial: u64,
        seed: u64,
    ) -> Self {
        SimConfig {
            scheme,
            m,
            mp,
            snr_grid,
            trials,
            symbols_per_trial,
            seed,
            p1: 1.0,
            p2: 1.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for order in [self.m, self.mp] {
            if order < 2 || !order.is_power_of_two() {
                return Err(Error::InvalidConfig(format!(
                    "PAM order {order} must be a power of two >= 2 for Gray-labelled simulation"
                )));
            }
        }
        for p in [self.p1, self.p2] {
            if !(p.is_finite() && p > 0.0) {
                return Err(Error::InvalidPower(p));
            }
        }
        if self.snr_grid.is_empty() {
            return Err(Error::InvalidConfig("empty SNR grid".into()));
        }
        if self.snr_grid.iter().any(|r| !(r.is_finite() && *r > 0.0)) {
            return Err(Error::InvalidConfig(
                "SNR values must be finite and positive".into(),
            ));
        }
        if self.snr_grid.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidConfig("SNR grid must be ascending".into()));
        }
        let total = self.trials.saturating_mul(self.symbols_per_trial);
        if total < MIN_SYMBOLS_PER_POINT {
            return Err(Error::InvalidConfig(format!(
                "trials x symbols = {total} is below the minimum of {MIN_SYMBOLS_PER_POINT}"
            )));
        }
        Ok(())
    }
}

/// The three message streams: `s1` at D1, `s2` at D1, `s2` at D2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stream {
    D1User1,
    D1User2,
    D2User2,
}

impl Stream {
    pub const ALL: [Stream; 3] = [Stream::D1User1, Stream::D1User2, Stream::D2User2];

    pub fn name(&self) -> &'static str {
        match self {
            Stream::D1User1 => "d1_s1",
            Stream::D1User2 => "d1_s2",
            Stream::D2User2 => "d2_s2",
        }
    }
}

/// Raw counts for one stream at one SNR. A "symbol" is one detected PAM
/// symbol (per real rail) for PAM-based schemes and one PSK symbol for
/// constellation-rotation NOMA.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StreamCounts {
    pub bits: u64,
    pub bit_errors: u64,
    pub symbols: u64,
    pub symbol_errors: u64,
}

impl StreamCounts {
    fn add(&mut self, other: &StreamCounts) {
        self.bits += other.bits;
        self.bit_errors += other.bit_errors;
        self.symbols += other.symbols;
        self.symbol_errors += other.symbol_errors;
    }

    fn record(&mut self, bits: u32, sent: u32, detected: u32) {
        self.bits += bits as u64;
        self.symbols += 1;
        if sent != detected {
            self.symbol_errors += 1;
            self.bit_errors += (sent ^ detected).count_ones() as u64;
        }
    }

    pub fn ber(&self) -> f64 {
        ratio(self.bit_errors, self.bits)
    }

    pub fn ser(&self) -> f64 {
        ratio(self.symbol_errors, self.symbols)
    }
}

fn ratio(num: u64, den: u64) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

/// Binomial standard error `sqrt(p (1 - p) / n)` of an estimated rate.
pub fn standard_error(rate: f64, n: u64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    (rate * (1.0 - rate) / n as f64).sqrt()
}

#[derive(Debug, Clone, PartialEq)]
pub struct BerRow {
    pub rho: f64,
    pub snr_db: f64,
    /// Bit-weighted mean over the three streams, `errors / bits`.
    pub ber: f64,
    pub bits: u64,
    pub errors: u64,
    /// Indexed like [`Stream::ALL`].
    pub streams: [StreamCounts; 3],
}

impl BerRow {
    fn from_counts(rho: f64, streams: [StreamCounts; 3]) -> Self {
        let bits = streams.iter().map(|s| s.bits).sum();
        let errors = streams.iter().map(|s| s.bit_errors).sum();
        BerRow {
            rho,
            snr_db: 10.0 * rho.log10(),
            ber: ratio(errors, bits),
            bits,
            errors,
            streams,
        }
    }

    pub fn stream(&self, s: Stream) -> &StreamCounts {
        &self.streams[s as usize]
    }

    pub fn standard_error(&self) -> f64 {
        standard_error(self.ber, self.bits)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BerCurve {
    pub scheme: Scheme,
    pub rows: Vec<BerRow>,
}

pub const CSV_HEADER: &str = "scheme,rho,snr_db,ber,bits,errors";
pub const STREAMS_CSV_HEADER: &str =
    "scheme,rho,snr_db,stream,ber,bits,errors,symbols,symbol_errors";

// dB values come back from log10 with float noise; nine decimals is far
// below any grid a user would type and keeps the column readable.
fn tidy_db(db: f64) -> f64 {
    let r = (db * 1e9).round() / 1e9;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

impl BerCurve {
    /// Writes the averaged curve, one row per SNR point.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "{CSV_HEADER}")?;
        for r in &self.rows {
            writeln!(
                out,
                "{},{},{},{},{},{}",
                self.scheme,
                r.rho,
                tidy_db(r.snr_db),
                r.ber,
                r.bits,
                r.errors
            )?;
        }
        Ok(())
    }

    /// Writes per-stream counts, three rows per SNR point.
    pub fn write_streams_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "{STREAMS_CSV_HEADER}")?;
        for r in &self.rows {
            for (s, c) in Stream::ALL.iter().zip(&r.streams) {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{}",
                    self.scheme,
                    r.rho,
                    tidy_db(r.snr_db),
                    s.name(),
                    c.ber(),
                    c.bits,
                    c.bit_errors,
                    c.symbols,
                    c.symbol_errors
                )?;
            }
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("CSV is ASCII")
    }
}

type TrialCounts = Vec<[StreamCounts; 3]>;

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn gray(i: usize) -> u32 {
    let i = i as u32;
    i ^ (i >> 1)
}

fn normal(rng: &mut ChaCha8Rng) -> f64 {
    rng.sample(StandardNormal)
}

/// Runs the configured scheme. Trials execute on the current rayon pool;
/// the result is identical for any pool size.
pub fn run_ber(cfg: &SimConfig, fading: &FadingSpec) -> Result<BerCurve> {
    match cfg.scheme {
        Scheme::ProposedNoma => run_noma(cfg, fading),
        _ => run_baseline(cfg, fading),
    }
}

/// Runs one of the orthogonal or rotation baselines.
pub fn run_baseline(cfg: &SimConfig, fading: &FadingSpec) -> Result<BerCurve> {
    match cfg.scheme {
        Scheme::Tdma => run_orthogonal(cfg, fading, 1.0),
        Scheme::Fdma => run_orthogonal(cfg, fading, 0.5),
        Scheme::CrNoma => run_crnoma(cfg, fading),
        Scheme::ProposedNoma => Err(Error::UnsupportedScheme(cfg.scheme.to_string())),
    }
}

fn collect<F>(cfg: &SimConfig, fading: &FadingSpec, noise_scale: f64, trial: F) -> Result<BerCurve>
where
    F: Fn(&mut ChaCha8Rng, [Complex64; 3], &[f64]) -> Result<TrialCounts> + Sync,
{
    cfg.validate()?;
    fading.validate()?;
    let sigmas: Vec<f64> = cfg
        .snr_grid
        .iter()
        .map(|rho| (noise_scale / (2.0 * rho)).sqrt())
        .collect();
    let zero = vec![[StreamCounts::default(); 3]; sigmas.len()];
    let totals = (0..cfg.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(cfg.seed, t);
            let h = fading.draw(&mut rng);
            trial(&mut rng, h, &sigmas)
        })
        .try_reduce(
            || zero.clone(),
            |mut acc, part| {
                for (a, p) in acc.iter_mut().zip(&part) {
                    for (x, y) in a.iter_mut().zip(p) {
                        x.add(y);
                    }
                }
                Ok(acc)
            },
        )?;
    let rows = cfg
        .snr_grid
        .iter()
        .zip(totals)
        .map(|(&rho, streams)| BerRow::from_counts(rho, streams))
        .collect();
    Ok(BerCurve {
        scheme: cfg.scheme,
        rows,
    })
}

fn run_noma(cfg: &SimConfig, fading: &FadingSpec) -> Result<BerCurve> {
    collect(cfg, fading, 1.0, |rng, [h11, h21, h22], sigmas| {
        let ch = ComplexZcChannel {
            h11,
            h21,
            h22,
            p1: cfg.p1,
            p2: cfg.p2,
            m: cfg.m,
            mp: cfg.mp,
        };
        let (inst_i, inst_q) = decompose(&ch)?;
        let mut rails = Vec::with_capacity(2);
        for inst in [inst_i, inst_q] {
            let sol = solve(&inst)?;
            let order = inst.m;
            rails.push((
                inst.g11 * sol.w1,
                inst.g21 * sol.w2,
                inst.g22 * sol.w2,
                order,
                order.trailing_zeros(),
            ));
        }
        let mut counts = vec![[StreamCounts::default(); 3]; sigmas.len()];
        for _ in 0..cfg.symbols_per_trial {
            for &(a, b, c, order, bits) in &rails {
                let i1 = rng.gen_range(0..order as usize);
                let i2 = rng.gen_range(0..order as usize);
                let (z1, z2) = (normal(rng), normal(rng));
                let top = (order - 1) as f64;
                let s1 = 2.0 * i1 as f64 - top;
                let s2 = 2.0 * i2 as f64 - top;
                let clean1 = a * s1 + b * s2;
                let clean2 = c * s2;
                for (row, &sigma) in counts.iter_mut().zip(sigmas) {
                    let (j1, j2) = joint_pam_indices(clean1 + sigma * z1, a, b, order);
                    let k2 = nearest_pam_index(clean2 + sigma * z2, c, order);
                    row[0].record(bits, gray(i1), gray(j1));
                    row[1].record(bits, gray(i2), gray(j2));
                    row[2].record(bits, gray(i2), gray(k2));
                }
            }
        }
        Ok(counts)
    })
}

/// TDMA and FDMA: each user transmits alone on an `M^2 x Mp^2` QAM at full
/// power; `noise_scale` multiplies the noise variance (1/2 for FDMA).
fn run_orthogonal(cfg: &SimConfig, fading: &FadingSpec, noise_scale: f64) -> Result<BerCurve> {
    let orders = [cfg.m * cfg.m, cfg.mp * cfg.mp];
    let (p1i, p1q) = allocate_power(cfg.p1, orders[0], orders[1])?;
    let (p2i, p2q) = allocate_power(cfg.p2, orders[0], orders[1])?;
    let caps1 = [power_cap(p1i, orders[0]), power_cap(p1q, orders[1])];
    let caps2 = [power_cap(p2i, orders[0]), power_cap(p2q, orders[1])];
    collect(cfg, fading, noise_scale, |rng, [h11, h21, h22], sigmas| {
        let (g11, g21, g22) = (h11.norm(), h21.norm(), h22.norm());
        let mut counts = vec![[StreamCounts::default(); 3]; sigmas.len()];
        for _ in 0..cfg.symbols_per_trial {
            for rail in 0..2 {
                let order = orders[rail];
                let bits = order.trailing_zeros();
                let top = (order - 1) as f64;
                let (a, b, c) = (g11 * caps1[rail], g21 * caps2[rail], g22 * caps2[rail]);
                let i1 = rng.gen_range(0..order as usize);
                let i2 = rng.gen_range(0..order as usize);
                let (z1, z21, z22) = (normal(rng), normal(rng), normal(rng));
                let s1 = 2.0 * i1 as f64 - top;
                let s2 = 2.0 * i2 as f64 - top;
                for (row, &sigma) in counts.iter_mut().zip(sigmas) {
                    let j1 = nearest_pam_index(a * s1 + sigma * z1, a, order);
                    let j2 = nearest_pam_index(b * s2 + sigma * z21, b, order);
                    let k2 = nearest_pam_index(c * s2 + sigma * z22, c, order);
                    row[0].record(bits, gray(i1), gray(j1));
                    row[1].record(bits, gray(i2), gray(j2));
                    row[2].record(bits, gray(i2), gray(k2));
                }
            }
        }
        Ok(counts)
    })
}

/// Constellation-rotation NOMA: both users send `N`-PSK at full power with
/// `N = M Mp`; user 2 is rotated by `pi/N`. Transmitters pre-rotate so the
/// effective gains at D1 are real and positive; D1 detects the pair jointly.
fn run_crnoma(cfg: &SimConfig, fading: &FadingSpec) -> Result<BerCurve> {
    let n = (cfg.m * cfg.mp) as usize;
    let bits = n.trailing_zeros();
    let step = 2.0 * std::f64::consts::PI / n as f64;
    let psk1: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(cfg.p1.sqrt(), step * k as f64))
        .collect();
    let psk2: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(cfg.p2.sqrt(), step * (k as f64 + 0.5)))
        .collect();
    collect(cfg, fading, 1.0, |rng, [h11, h21, h22], sigmas| {
        let (g11, g21, g22) = (h11.norm(), h21.norm(), h22.norm());
        let joint: Vec<Complex64> = psk1
            .iter()
            .flat_map(|&x1| psk2.iter().map(move |&x2| g11 * x1 + g21 * x2))
            .collect();
        let single: Vec<Complex64> = psk2.iter().map(|&x2| g22 * x2).collect();
        let mut counts = vec![[StreamCounts::default(); 3]; sigmas.len()];
        for _ in 0..cfg.symbols_per_trial {
            let k1 = rng.gen_range(0..n);
            let k2 = rng.gen_range(0..n);
            let z1 = Complex64::new(normal(rng), normal(rng));
            let z2 = Complex64::new(normal(rng), normal(rng));
            let clean1 = joint[k1 * n + k2];
            let clean2 = single[k2];
            for (row, &sigma) in counts.iter_mut().zip(sigmas) {
                let j = nearest_point(clean1 + sigma * z1, &joint);
                let l = nearest_point(clean2 + sigma * z2, &single);
                row[0].record(bits, gray(k1), gray(j / n));
                row[1].record(bits, gray(k2), gray(j % n));
                row[2].record(bits, gray(k2), gray(l));
            }
        }
        Ok(counts)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weak_fixed() -> FadingSpec {
        FadingSpec::Fixed {
            h11: Complex64::new(1.0, 0.0),
            h21: Complex64::new(0.5, 0.0),
            h22: Complex64::new(1.0, 0.0),
        }
    }

    fn cfg(scheme: Scheme, snr: Vec<f64>) -> SimConfig {
        SimConfig::new(scheme, 4, 4, snr, 20, 500, 3)
    }

    #[test]
    fn noise_free_limit_has_no_errors() {
        for scheme in Scheme::ALL {
            let mut c = cfg(scheme, vec![1e12]);
            c.trials = 10;
            c.symbols_per_trial = 10_000;
            let curve = run_ber(&c, &weak_fixed()).unwrap();
            assert_eq!(curve.rows[0].errors, 0, "{scheme}");
            assert!(curve.rows[0].bits > 0);
        }
    }

    #[test]
    fn bit_count_is_exact() {
        let c = cfg(Scheme::ProposedNoma, vec![1.0, 10.0]);
        let curve = run_ber(
            &c,
            &FadingSpec::Rayleigh {
                var11: 1.0,
                var21: 1.0,
                var22: 1.0,
            },
        )
        .unwrap();
        // 2 bits per rail, two rails, three streams
        for r in &curve.rows {
            assert_eq!(r.bits, 20 * 500 * 2 * 2 * 3);
            for s in &r.streams {
                assert_eq!(s.symbols, 20 * 500 * 2);
            }
        }
    }

    #[test]
    fn same_seed_same_curve_across_pool_sizes() {
        let c = cfg(Scheme::ProposedNoma, vec![1.0, 10.0, 100.0]);
        let fading = FadingSpec::Rayleigh {
            var11: 1.0,
            var21: 1.0,
            var22: 1.0,
        };
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| run_ber(&c, &fading).unwrap())
        };
        let a = run(1);
        assert_eq!(a, run(4));
        assert_eq!(a.to_csv_string(), run(3).to_csv_string());
    }

    #[test]
    fn fdma_equals_tdma_at_double_snr() {
        let fading = FadingSpec::Rayleigh {
            var11: 1.0,
            var21: 0.5,
            var22: 2.0,
        };
        let f = run_ber(&cfg(Scheme::Fdma, vec![5.0, 50.0]), &fading).unwrap();
        let t = run_ber(&cfg(Scheme::Tdma, vec![10.0, 100.0]), &fading).unwrap();
        for (a, b) in f.rows.iter().zip(&t.rows) {
            assert_eq!(a.streams, b.streams);
        }
    }

    #[test]
    fn baseline_rejects_proposed_scheme() {
        let c = cfg(Scheme::ProposedNoma, vec![1.0]);
        assert!(matches!(
            run_baseline(&c, &weak_fixed()),
            Err(Error::UnsupportedScheme(_))
        ));
    }

    #[test]
    fn config_validation() {
        let mut c = cfg(Scheme::Tdma, vec![1.0]);
        c.symbols_per_trial = 10;
        assert!(c.validate().is_err());
        let mut c = cfg(Scheme::Tdma, vec![2.0, 1.0]);
        assert!(c.validate().is_err());
        c.snr_grid = vec![1.0];
        c.m = 6;
        assert!(c.validate().is_err());
    }

    #[test]
    fn csv_layout() {
        let c = cfg(Scheme::Tdma, vec![1000.0]);
        let curve = run_ber(&c, &weak_fixed()).unwrap();
        let text = curve.to_csv_string();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        let row: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(row[0], "tdma");
        assert_eq!(row[2], "30");
        let mut buf = Vec::new();
        curve.write_streams_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 4);
    }

    #[test]
    fn scheme_names_roundtrip() {
        for s in Scheme::ALL {
            assert_eq!(s.name().parse::<Scheme>().unwrap(), s);
        }
        assert!("ofdma".parse::<Scheme>().is_err());
    }
}
