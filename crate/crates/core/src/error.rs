use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("offset set must contain at least one offset")]
    EmptyOffsets,

    #[error("duplicate offset {0} in stencil")]
    DuplicateOffset(i64),

    #[error("derivative order m and time-marching order n must be at least 1 (got m={m}, n={n})")]
    InvalidOrder { m: u32, n: u32 },

    #[error(
        "an order-{n} scheme for an order-{m} derivative needs exactly N = nm + 1 = {required} \
         grid points, got {got}"
    )]
    StencilSize { m: u32, n: u32, required: usize, got: usize },

    #[error("{what} = {value} is out of range ({range})")]
    OutOfRange { what: &'static str, value: i64, range: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("order condition for k^{power} failed: expected {expected}, found {found}")]
    OrderCondition { power: usize, expected: String, found: String },

    #[error("identity check failed: {0}")]
    IdentityViolated(String),

    #[error("stencil reaches {reach} cells but the grid only has {cells} cells")]
    StencilTooWide { reach: u64, cells: usize },

    #[error("density family provides {available} densities but the scheme needs {required}")]
    DensityFamilyTooShort { available: usize, required: usize },

    #[error("unstable configuration: |nu| = {nu} exceeds the critical Courant number {critical}")]
    Unstable { nu: f64, critical: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("parse error: {0}")]
    Parse(String),
}
