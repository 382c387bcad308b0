use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    // exact arithmetic
    #[error("incompatible radicands: √{0} and √{1}")]
    RadicandMismatch(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial has no Sturm sequence")]
    ZeroPolynomial,
    #[error("empty or reversed interval")]
    InvalidInterval,
    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    RaggedMatrix {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("cannot parse number {input:?}: {reason}")]
    ParseNumber { input: String, reason: String },

    // special functions
    #[error("invalid kernel parameters n={n}, t={t}: {reason}")]
    InvalidKernel {
        n: u32,
        t: u32,
        reason: &'static str,
    },
    #[error("Bessel argument must be non-negative, got {0}")]
    NegativeBesselArgument(f64),
    #[error("invalid Bessel order {0}")]
    InvalidBesselOrder(f64),
    #[error("no sign change of J_{alpha} found in ({lo}, {hi})")]
    NoBesselZero { alpha: f64, lo: f64, hi: f64 },

    // point sets
    #[error("point set is empty")]
    EmptyPointSet,
    #[error("point {index} has {found} coordinates, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("point {index} is not a unit vector (norm {norm})")]
    NotUnitVector { index: usize, norm: f64 },
    #[error("points {first} and {second} coincide (distance {distance:e})")]
    DuplicatePoint {
        first: usize,
        second: usize,
        distance: f64,
    },
    #[error("point {index} has a non-finite coordinate")]
    NonFiniteCoordinate { index: usize },
    #[error("{0} labels given for {1} points")]
    LabelCountMismatch(usize, usize),
    #[error("{value} is not a root of Q_{{{n},{t}}} (|Q| = {residual:e})")]
    NotARoot {
        n: u32,
        t: u32,
        value: f64,
        residual: f64,
    },
    #[error("root index {index} out of range 1..={count}")]
    RootIndexOutOfRange { index: usize, count: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid generator parameters: {0}")]
    InvalidGenerator(String),

    // graphs and tightness
    #[error("line {line}: malformed graph6 record: {reason}")]
    Graph6 { line: usize, reason: String },
    #[error("malformed graph: {0}")]
    MalformedGraph(String),
    #[error("squared distance ratio must exceed 1")]
    RatioNotAboveOne,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("JSON: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
