//! Complex Z-channel model, its split into two real scalar Z-channels, PAM
//! alphabets and power allocation between in-phase and quadrature rails.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn check_pam_order(order: u32) -> Result<()> {
    if order < 2 || !order.is_multiple_of(2) {
        return Err(Error::InvalidPamOrder(order));
    }
    Ok(())
}

fn check_power(p: f64) -> Result<()> {
    if !(p.is_finite() && p > 0.0) {
        return Err(Error::InvalidPower(p));
    }
    Ok(())
}

/// Largest scaling factor an `order`-PAM can use under average power `power`.
pub fn power_cap(power: f64, order: u32) -> f64 {
    let m = order as f64;
    (3.0 * power / (m * m - 1.0)).sqrt()
}

mod complex_pair {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        [z.re, z.im].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(d)?;
        Ok(Complex64::new(re, im))
    }
}

/// Complex baseband Z-channel: `S1 -> D1` (h11), `S2 -> D1` (h21),
/// `S2 -> D2` (h22). `m` and `mp` are the in-phase and quadrature PAM
/// orders shared by both users.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexZcChannel {
    #[serde(with = "complex_pair")]
    pub h11: Complex64,
    #[serde(with = "complex_pair")]
    pub h21: Complex64,
    #[serde(with = "complex_pair")]
    pub h22: Complex64,
    #[serde(rename = "P1")]
    pub p1: f64,
    #[serde(rename = "P2")]
    pub p2: f64,
    #[serde(rename = "M")]
    pub m: u32,
    #[serde(rename = "Mp")]
    pub mp: u32,
}

impl ComplexZcChannel {
    pub fn validate(&self) -> Result<()> {
        check_pam_order(self.m)?;
        check_pam_order(self.mp)?;
        check_power(self.p1)?;
        check_power(self.p2)?;
        if !(self.h11.norm() > 0.0) {
            return Err(Error::DegenerateChannel("|h11| must be positive"));
        }
        if !(self.h22.norm() > 0.0) {
            return Err(Error::DegenerateChannel("|h22| must be positive"));
        }
        if !self.h21.norm().is_finite() {
            return Err(Error::DegenerateChannel("|h21| must be finite"));
        }
        Ok(())
    }
}

/// One real scalar Z-channel: `y1 = g11 w1 s1 + g21 w2 s2 + n1`,
/// `y2 = g22 w2 s2 + n2`, both users on the same `m`-PAM.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RealZcInstance {
    pub g11: f64,
    pub g21: f64,
    pub g22: f64,
    pub p1: f64,
    pub p2: f64,
    #[serde(rename = "M")]
    pub m: u32,
}

impl RealZcInstance {
    pub fn new(g11: f64, g21: f64, g22: f64, p1: f64, p2: f64, m: u32) -> Result<Self> {
        check_pam_order(m)?;
        check_power(p1)?;
        check_power(p2)?;
        if !(g11.is_finite() && g11 > 0.0) {
            return Err(Error::DegenerateChannel("g11 must be positive"));
        }
        if !(g22.is_finite() && g22 > 0.0) {
            return Err(Error::DegenerateChannel("g22 must be positive"));
        }
        if !(g21.is_finite() && g21 >= 0.0) {
            return Err(Error::DegenerateChannel("g21 must be non-negative"));
        }
        Ok(RealZcInstance {
            g11,
            g21,
            g22,
            p1,
            p2,
            m,
        })
    }

    /// Same as [`RealZcInstance::new`] but with separate user orders, which
    /// must agree.
    pub fn with_orders(
        g11: f64,
        g21: f64,
        g22: f64,
        p1: f64,
        p2: f64,
        m1: u32,
        m2: u32,
    ) -> Result<Self> {
        if m1 != m2 {
            return Err(Error::UnequalOrders(m1, m2));
        }
        Self::new(g11, g21, g22, p1, p2, m1)
    }

    /// Upper bound on `w1`.
    pub fn cap1(&self) -> f64 {
        power_cap(self.p1, self.m)
    }

    /// Upper bound on `w2`.
    pub fn cap2(&self) -> f64 {
        power_cap(self.p2, self.m)
    }

    /// Largest PAM half-difference, the Farey order used by the solver.
    pub fn farey_order(&self) -> u64 {
        self.m as u64 - 1
    }

    pub fn pam(&self) -> PamConstellation {
        PamConstellation::new(self.m).expect("order validated at construction")
    }

    /// Same channel with every gain multiplied by `c`.
    pub fn scaled(&self, c: f64) -> Self {
        RealZcInstance {
            g11: self.g11 * c,
            g21: self.g21 * c,
            g22: self.g22 * c,
            ..*self
        }
    }
}

/// Unit-spaced `order`-PAM: the odd integers `-(order-1), ..., order-1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PamConstellation {
    order: u32,
    points: Vec<f64>,
}

impl PamConstellation {
    pub fn new(order: u32) -> Result<Self> {
        check_pam_order(order)?;
        let points = (0..order)
            .map(|i| (2 * i as i64 - (order as i64 - 1)) as f64)
            .collect();
        Ok(PamConstellation { order, points })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn bits_per_symbol(&self) -> u32 {
        self.order.trailing_zeros()
    }

    /// Symbol value at index `i` (ascending).
    pub fn point(&self, i: usize) -> f64 {
        self.points[i]
    }

    /// Gray label of the point at index `i`. Adjacent points differ in one
    /// bit when the order is a power of two.
    pub fn gray_label(&self, i: usize) -> u32 {
        let i = i as u32;
        i ^ (i >> 1)
    }
}

/// Per-real-dimension noise variance and the matching SNR, `rho = 1/(2 sigma2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseModel {
    pub sigma2: f64,
    pub rho: f64,
}

impl NoiseModel {
    pub fn from_rho(rho: f64) -> Self {
        NoiseModel {
            sigma2: 1.0 / (2.0 * rho),
            rho,
        }
    }

    pub fn from_snr_db(db: f64) -> Self {
        Self::from_rho(10f64.powf(db / 10.0))
    }

    pub fn sigma(&self) -> f64 {
        self.sigma2.sqrt()
    }
}

/// Splits a total power budget between in-phase (`m`-PAM) and quadrature
/// (`mp`-PAM) so both rails get the same minimum distance.
pub fn allocate_power(total: f64, m: u32, mp: u32) -> Result<(f64, f64)> {
    check_pam_order(m)?;
    check_pam_order(mp)?;
    check_power(total)?;
    let mm = (m as f64).powi(2) - 1.0;
    let mpp = (mp as f64).powi(2) - 1.0;
    let denom = mm + mpp;
    let p = mm * total / denom;
    // quadrature gets the remainder so the split is exact
    Ok((p, total - p))
}

/// Splits a complex Z-channel into its in-phase and quadrature real channels.
///
/// Transmitters pre-rotate by `arg(h11)` and `arg(h21)`; D2 de-rotates by
/// `arg(h21/h22)`. Every effective real gain is therefore a magnitude.
pub fn decompose(ch: &ComplexZcChannel) -> Result<(RealZcInstance, RealZcInstance)> {
    ch.validate()?;
    let (g11, g21, g22) = (ch.h11.norm(), ch.h21.norm(), ch.h22.norm());
    let (p1, p1q) = allocate_power(ch.p1, ch.m, ch.mp)?;
    let (p2, p2q) = allocate_power(ch.p2, ch.m, ch.mp)?;
    Ok((
        RealZcInstance::new(g11, g21, g22, p1, p2, ch.m)?,
        RealZcInstance::new(g11, g21, g22, p1q, p2q, ch.mp)?,
    ))
}

/// Noise-free received values for a real Z-channel.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SumConstellation {
    /// `g11 w1 s1 + g21 w2 s2`, indexed `s1_index * M + s2_index`.
    pub receiver1: Vec<f64>,
    /// `g22 w2 s2`, ascending.
    pub receiver2: Vec<f64>,
}

impl SumConstellation {
    /// Number of receiver-1 points separated by more than `tol`.
    pub fn distinct_receiver1(&self, tol: f64) -> usize {
        let mut pts = self.receiver1.clone();
        pts.sort_by(f64::total_cmp);
        pts.dedup_by(|a, b| (*a - *b).abs() <= tol);
        pts.len()
    }
}

pub fn sum_constellation(inst: &RealZcInstance, w1: f64, w2: f64) -> SumConstellation {
    let pam = inst.pam();
    let a = inst.g11 * w1;
    let b = inst.g21 * w2;
    let receiver1 = pam
        .points()
        .iter()
        .flat_map(|&s1| pam.points().iter().map(move |&s2| a * s1 + b * s2))
        .collect();
    let receiver2 = pam.points().iter().map(|&s2| inst.g22 * w2 * s2).collect();
    SumConstellation {
        receiver1,
        receiver2,
    }
}
