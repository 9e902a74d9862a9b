use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid Farey order {0}: order must be at least 1")]
    InvalidOrder(u64),

    #[error("invalid partition threshold L = {threshold} for order {order}: expected 1 <= L <= {}", 2 * order)]
    InvalidThreshold { order: u64, threshold: u64 },

    #[error("fraction 0/0 is not a valid value")]
    ZeroOverZero,

    #[error("cannot parse fraction from {0:?}")]
    ParseFraction(String),

    #[error("difference pair (0, 0) has no distance")]
    ZeroPair,

    #[error("degenerate channel: {0}")]
    DegenerateChannel(&'static str),

    #[error("invalid PAM order {0}: order must be even and at least 2")]
    InvalidPamOrder(u32),

    #[error("unequal constellation orders ({0} vs {1}) are not supported")]
    UnequalOrders(u32, u32),

    #[error("invalid power budget {0}: must be finite and positive")]
    InvalidPower(f64),

    #[error("bound not applicable: cross/direct ratio {ratio} < numerator sum {numerator_sum}")]
    InapplicableBound { ratio: f64, numerator_sum: u64 },

    #[error("invalid simulation config: {0}")]
    InvalidConfig(String),

    #[error("unsupported scheme {0:?}")]
    UnsupportedScheme(String),
}

pub type Result<T> = std::result::Result<T, Error>;
