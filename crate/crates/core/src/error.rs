use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    DimensionMismatch { expected: usize, found: usize },
    OutOfRange { what: &'static str, value: i64 },
    /// Capacity vector fails admissibility; carries the violated class or `volume`.
    Inadmissible(String),
    UnsupportedLabel { n: usize },
    UnknownSymbol(String),
    TableMismatch,
    NotHomogeneous(String),
    DegreeMismatch { generator: String, expected: u32, found: u32 },
    Parse(String),
    DuplicatePoints,
    ZeroPoint,
    NotCollinear,
    SingularMatrix,
    InconsistentConfiguration,
    DSquaredNonzero { generator: String },
    IdealNotStable { relation: String },
    UnsupportedModel { n: usize, chamber: String },
    InvalidWeight { a: i64, b: i64 },
    WeightCount { expected: usize, found: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::OutOfRange { what, value } => write!(f, "{what} out of range: {value}"),
            Error::Inadmissible(v) => write!(f, "inadmissible capacities (violated by {v})"),
            Error::UnsupportedLabel { n } => write!(f, "no chamber labels for n = {n}"),
            Error::UnknownSymbol(s) => write!(f, "unknown generator `{s}`"),
            Error::TableMismatch => f.write_str("polynomials belong to different generator tables"),
            Error::NotHomogeneous(p) => write!(f, "polynomial is not homogeneous: {p}"),
            Error::DegreeMismatch { generator, expected, found } => write!(
                f,
                "differential of `{generator}` has degree {found}, expected {expected}"
            ),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::ZeroPoint => f.write_str("all homogeneous coordinates are zero"),
            Error::DuplicatePoints => f.write_str("configuration contains coincident points"),
            Error::NotCollinear => f.write_str("points are not collinear"),
            Error::SingularMatrix => f.write_str("matrix is singular"),
            Error::InconsistentConfiguration => {
                f.write_str("collinear triples do not form a valid stratum")
            }
            Error::DSquaredNonzero { generator } => write!(f, "d^2 is nonzero on `{generator}`"),
            Error::IdealNotStable { relation } => {
                write!(f, "differential does not preserve the ideal at relation {relation}")
            }
            Error::UnsupportedModel { n, chamber } => {
                write!(f, "no model for n = {n}, chamber {chamber}")
            }
            Error::InvalidWeight { a, b } => write!(f, "invalid circle weight ({a},{b})"),
            Error::WeightCount { expected, found } => {
                write!(f, "expected {expected} circle weights, got {found}")
            }
        }
    }
}

impl core::error::Error for Error {}
