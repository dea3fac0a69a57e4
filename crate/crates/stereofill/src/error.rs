use std::path::PathBuf;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {actual}")]
    DimensionMismatch {
        context: &'static str,
        expected: String,
        actual: String,
    },

    #[error("non-finite value {value} at flat index {index} in {context}")]
    NonFiniteValue {
        context: &'static str,
        index: usize,
        value: f64,
    },

    #[error("value {value} out of range at flat index {index} in {context}: expected {expected}")]
    OutOfRange {
        context: &'static str,
        index: usize,
        value: f64,
        expected: &'static str,
    },

    #[error("expected {expected} channel(s), got {actual}")]
    WrongChannelCount { expected: &'static str, actual: usize },

    #[error("image {height}x{width} too small: both dimensions must be at least {min}")]
    ImageTooSmall {
        height: usize,
        width: usize,
        min: usize,
    },

    #[error("texture mask has no active pixels; the image is fully untextured")]
    NoActivePixels,

    #[error("texture mask has no active pixels at pyramid scale {scale}")]
    NoActivePixelsAtScale { scale: usize },

    #[error("fill is incomplete: {remaining} pixel(s) still inactive")]
    IncompleteFill { remaining: usize },

    #[error("row {row} out of bounds for height {height}")]
    RowOutOfBounds { row: usize, height: usize },

    #[error("non-finite loss at optimization step {step}")]
    NonFiniteLoss { step: usize },

    #[error("ground-truth depth must be positive; found {value} at flat index {index}")]
    ZeroGroundTruthDepth { index: usize, value: f64 },

    #[error("no valid pixels to evaluate metrics over")]
    EmptyValidSet,

    #[error("covariate value {value} falls outside the bin range [{lo}, {hi})")]
    CovariateOutOfRange { value: f64, lo: f64, hi: f64 },

    #[error("bin edges must be strictly ascending and at least two")]
    BadBinEdges,

    #[error("region ({x}, {y}) {width}x{height} does not fit inside a {image_width}x{image_height} image")]
    RegionOutOfBounds {
        x: usize,
        y: usize,
        width: usize,
        height: usize,
        image_width: usize,
        image_height: usize,
    },

    #[error("unknown fixture {0:?}; known fixtures: textured_shift, untextured_wall, framed_hole, multi_plane")]
    UnknownFixture(String),

    #[error("unknown dataset {0:?}; known datasets: N, R, P, PR")]
    UnknownDataset(String),

    #[error("malformed {format} header in {path}: {reason}")]
    MalformedHeader {
        format: &'static str,
        path: PathBuf,
        reason: String,
    },

    #[error("truncated data in {path}: expected {expected} bytes, got {actual}")]
    TruncatedData {
        path: PathBuf,
        expected: usize,
        actual: usize,
    },

    #[error("unsupported channel count {0} (only 1 or 3 supported)")]
    UnsupportedChannelCount(usize),

    #[error("unsupported maxval {0} (only 255 supported)")]
    UnsupportedMaxval(u32),

    #[error("invalid scene spec: {0}")]
    BadSceneSpec(String),

    #[error("invalid configuration: {0}")]
    BadConfig(String),

    #[error("gradient check exceeded tolerance: max relative error {max_rel:.3e} > {tolerance:.1e} ({term})")]
    ToleranceExceeded {
        term: String,
        max_rel: f64,
        tolerance: f64,
    },

    #[error("io failure on {path}: {source}")]
    IoFailure {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::IoFailure {
            path: path.into(),
            source,
        }
    }
}
