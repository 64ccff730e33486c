use thiserror::Error;

/// Errors raised by field construction, code building and verification.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("extension degree {0} outside 1..=16")]
    InvalidDegree(u32),
    #[error("modulus {modulus:#x} does not have degree {degree}")]
    ModulusDegree { modulus: u32, degree: u32 },
    #[error("modulus {0:#x} is reducible over F_2")]
    NotIrreducible(u32),
    #[error("root of modulus {modulus:#x} has order {order}, not {expected}")]
    NotPrimitive {
        modulus: u32,
        order: u32,
        expected: u32,
    },
    #[error("division by zero")]
    DivisionByZero,
    #[error("F_2^{sub} is not a subfield of F_2^{ambient}")]
    NotSubfield { sub: u32, ambient: u32 },
    #[error("element {elem} does not lie in F_2^{degree}")]
    NotInSubfield { elem: u16, degree: u32 },
    #[error("no element of order {0} in the multiplicative group")]
    OrderUnavailable(u32),
    #[error("element cannot be factored as d*zeta^l: {0}")]
    NoFactorization(String),
    #[error("generator rows have rank {rank} < {rows}")]
    RankDeficient { rank: usize, rows: usize },
    #[error("enumeration of {0} items exceeds the guard")]
    TooLarge(u128),
    #[error("MacWilliams transform is not integral at weight {0}")]
    NonIntegerResult(usize),
    #[error("count at weight {0} does not fit in 64 bits")]
    CountOverflow(usize),
    #[error("check polynomial does not divide x^{0} - 1")]
    NotDivisor(usize),
    #[error("exponents {0} and {1} lie in the same Frobenius orbit")]
    DegenerateOrbit(u32, u32),
    #[error("code is not invariant under the cyclic shift")]
    NotCyclic,
    #[error("gcd({m}, {p_minus_one}) != 1")]
    CoprimalityViolated { m: u32, p_minus_one: u32 },
    #[error("symbol {elem} at position {pos} is outside the expected alphabet")]
    AlphabetMismatch { pos: usize, elem: u16 },
    #[error("cyclic reindexing maps two coordinates to position {0}")]
    IndexCollision(usize),
    #[error("check matrix column {0} is zero")]
    ZeroColumn(usize),
    #[error("graph is disconnected: {0} vertices unreachable")]
    Disconnected(usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("intersection array {0} does not match the union-of-cosets hypothesis")]
    WrongArray(String),
    #[error("k = {k} outside 1..={max}")]
    KOutOfRange { k: usize, max: usize },
    #[error("alpha + alpha^q vanishes")]
    BasisDegenerate,
    #[error("Frobenius exponent 2^{0} is not linear over the inner alphabet")]
    NotPLinear(u32),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
