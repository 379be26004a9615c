use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed complex: {0}")]
    MalformedComplex(String),
    #[error("complex is not closed: {0}")]
    NotClosed(String),
    #[error("complex is not connected")]
    NotConnected,
    #[error("complex is not orientable; only Z/2 evaluation is defined")]
    NotOrientable,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("bad lens space parameters L({p},{q}): need p >= 2 and gcd(p,q) = 1")]
    BadLensParams { p: u64, q: u64 },
    #[error("no triangulation available for catalog-only prime `{0}`")]
    NoTriangulation(String),
    #[error("product dimension {0} exceeds the supported maximum of 4")]
    DimensionOverflow(usize),
    #[error("cup product degree {0} exceeds complex dimension {1}")]
    DegreeOverflow(usize, usize),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("operation requires a prime modulus, got {0}")]
    CompositeModulus(u64),
    #[error("invalid modulus {0}")]
    BadModulus(u64),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("degree-one corollaries need oriented manifolds; `{0}` is non-orientable")]
    NonOrientable(String),
    #[error("integer overflow: {0}")]
    Overflow(String),
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
