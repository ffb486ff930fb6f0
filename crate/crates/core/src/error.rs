use alloc::string::String;

use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix has shape {found}, expected {expected}")]
    Shape { expected: String, found: String },

    #[error("invalid label {0:?}: labels must be nonempty and contain only letters, digits or '_'")]
    InvalidLabel(String),

    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),

    #[error("Coxeter matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("Coxeter matrix entry m_{{{0}{0}}} must be 1")]
    DiagonalNotOne(String),

    #[error("Coxeter matrix entry m_{{{0},{1}}} must be at least 2")]
    OffDiagonalTooSmall(String, String),

    #[error("unknown color {0:?}")]
    UnknownColor(String),

    #[error("Cartan matrix entry a_{{{0}{0}}} must be 2")]
    CartanDiagonal(String),

    #[error("Cartan entry a_{{{0},{1}}} is zero exactly when m_{{{0},{1}}} = 2 is violated")]
    CartanZeroPattern(String, String),

    #[error("m_{{{0},{1}}} = {2} needs irrational Cartan entries; the polynomial engine only supports m in {{2,3,4,6,∞}}")]
    Unsupported(String, String, String),

    #[error("coroot pairing <α_{0}^∨, α_{0}> must be 2")]
    RootPairing(String),

    #[error("unknown variable {0:?}")]
    UnknownVariable(String),

    #[error("polynomial is not divisible by the linear form")]
    NotDivisible,

    #[error("polynomial parse error at byte {pos}: {msg}")]
    PolyParse { pos: usize, msg: String },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("boundary mismatch at slice {slice}, position {position}: expected {expected}, found {found}")]
    Boundary {
        slice: usize,
        position: usize,
        expected: String,
        found: String,
    },

    #[error("cannot compose: top word [{top}] differs from bottom word [{bottom}]")]
    ComposeMismatch { top: String, bottom: String },

    #[error("no 2m-valent vertex for ({0}, {1}): m is infinite or the colors coincide")]
    NoVertex(String, String),

    #[error("elements belong to different groups")]
    GroupMismatch,

    #[error("expected {expected} entries, found {found}")]
    Length { expected: usize, found: usize },

    #[error("not a homomorphism: relator {relator} maps to {image}")]
    NotAHomomorphism { relator: usize, image: String },

    #[error("inhomogeneous polynomial: monomials of degree {first} and {second}")]
    Inhomogeneous { first: String, second: String },

    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,

    #[error("character image of generator {0} must be nonzero")]
    ZeroImage(String),

    #[error("not a character: relator {relator} maps to {value}, expected 1")]
    NotACharacter { relator: usize, value: String },

    #[error("invalid grading of V: {0}")]
    InvalidVGrading(String),

    #[error("pitchfork degree is ill-defined for ({s}, {t}): {left} ≠ {right}")]
    PitchforkDegree {
        s: String,
        t: String,
        left: String,
        right: String,
    },

    #[error("catalog template line {line}: {msg}")]
    Template { line: usize, msg: String },

    #[error("constraint system contradicts the original Z-grading: {0}")]
    Contradiction(String),

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
}
