use crate::transform::TransformKind;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the field / transform / image layers.
///
/// The variants are deliberately fine-grained: callers (the CLI in
/// particular) report them verbatim, so each one names the exact
/// precondition that was violated.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u32),

    #[error("modulus {0} is not congruent to 3 mod 4, so x^2 + 1 is reducible over GF({0})")]
    NotThreeModFour(u32),

    #[error("modulus {0} exceeds the supported limit of 2^15")]
    ModulusTooLarge(u32),

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("zero has no multiplicative order")]
    ZeroOrder,

    #[error("operands belong to different fields: GF({left}) vs GF({right})")]
    FieldMismatch { left: u32, right: u32 },

    #[error("{value} is not unimodular over GF({p}): its norm is {norm}, not 1")]
    NotUnimodular { value: String, p: u32, norm: u32 },

    #[error("zeta has multiplicative order {found}, expected {expected}")]
    OrderMismatch { expected: u32, found: u32 },

    #[error("zeta must lie in the prime field (zero imaginary part) for the Fourier kernel")]
    NotReal,

    #[error("blocklength {0} is degenerate; transforms need at least 2 points")]
    DegenerateBlocklength(usize),

    #[error("blocklength {n} is divisible by the characteristic {p}, so {n}^-1 does not exist")]
    BlocklengthDivisibleByP { n: usize, p: u32 },

    #[error("input has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("operation is defined for {expected} configurations, got {found}")]
    KindMismatch {
        expected: TransformKind,
        found: TransformKind,
    },

    #[error("shape mismatch: expected {expected_width}x{expected_height}, got {width}x{height}")]
    ShapeMismatch {
        expected_width: usize,
        expected_height: usize,
        width: usize,
        height: usize,
    },

    #[error("transform matrix is singular: forward and inverse kernels do not compose to identity")]
    SingularMatrix,

    #[error("image dimensions {width}x{height} are not divisible by blocklength {n}")]
    IndivisibleDimensions {
        width: usize,
        height: usize,
        n: usize,
    },

    #[error("pixel ({x},{y}) has value {value}, outside the field range [0, {p})")]
    PixelOutOfField { x: usize, y: usize, value: u32, p: u32 },

    #[error("watermark pixel ({x},{y}) has value {value}, outside the field range [0, {p})")]
    WatermarkOutOfField { x: usize, y: usize, value: u32, p: u32 },

    #[error("invalid image: {0}")]
    InvalidImage(String),

    #[error("invalid PGM data: {0}")]
    PgmParse(String),

    #[error("pixel value {0} cannot be written to PGM (maxval limit is 65535)")]
    PgmUnrepresentable(u32),

    #[error("cannot parse {0:?} as a Gaussian integer (expected forms: \"5\", \"j\", \"2j\", \"2+5j\", \"2-5j\")")]
    ZetaParse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
