use crate::clifford::Signature;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("blade mask {mask:#b} does not fit signature {sig}")]
    Width { mask: u32, sig: Signature },
    #[error("signature mismatch: {0} vs {1}")]
    SignatureMismatch(Signature, Signature),
    #[error("signature {0} exceeds the 32-generator cap")]
    SignatureTooLarge(Signature),
    #[error("degenerate signature: n = 0")]
    DegenerateSignature,
    #[error("decomposition error: {0}")]
    Decomposition(String),
    #[error("structure error: {0}")]
    Structure(String),
    #[error("parse error at column {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("no transform for {sig} route `{route}`; {hint}")]
    CatalogMiss { sig: Signature, route: String, hint: String },
    #[error("matrix is not in the image of the representation")]
    NotInImage,
    #[error("equality violation: {0}")]
    EqualityViolation(String),
    #[error("basis change error: {0}")]
    BasisChange(String),
    #[error("shape error: {0}")]
    Shape(String),
}

pub type Result<T> = std::result::Result<T, Error>;
