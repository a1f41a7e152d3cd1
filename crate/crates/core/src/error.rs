use thiserror::Error;

/// Errors raised by the numerical kernels, the model and the CLI.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("gamma function pole at {re}{im:+}i")]
    PoleOfGamma { re: f64, im: f64 },

    #[error("non-finite {what}")]
    NonFinite { what: &'static str },

    #[error("binomial coefficient requested for n = {n} > 64")]
    BinomialRange { n: u32 },

    #[error("polynomial degree {n} exceeds the supported maximum {max}")]
    DegreeTooLarge { n: u32, max: u32 },

    #[error("continuous dual Hahn parameters make a Pochhammer denominator vanish at k = {k}")]
    SingularParameters { k: u32 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("collapse regime: g = {g} is below the critical coupling g_crit = {g_crit}")]
    Collapse { g: f64, g_crit: f64 },

    #[error("non-relativistic exponent d is complex (g0 = {g0} < -1/8)")]
    ComplexExponent { g0: f64 },

    #[error("operator singular at rho = {re}{im:+}i")]
    SingularPoint { re: f64, im: f64 },

    #[error("quadrature tail bound {tail_bound:e} exceeds tolerance/10 = {limit:e}; enlarge the grid")]
    GridTooSmall { tail_bound: f64, limit: f64 },

    #[error("{0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
