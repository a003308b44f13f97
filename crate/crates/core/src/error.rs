use thiserror::Error;

use crate::stats::Modulus;

/// Errors produced by the counting library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be nonnegative, got {0}")]
    NegativeArgument(i64),

    #[error("modulus must be a positive integer, got {0}")]
    InvalidModulus(i64),

    #[error("n = {n} exceeds the enumeration cap of {cap}")]
    EnumerationCap { n: u32, cap: u32 },

    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    #[error("binary string must be empty or end in 1")]
    BinaryNotTerminated,

    #[error("composition has an odd middle part {middle}")]
    OddMiddlePart { middle: u32 },

    #[error("invalid pair sequences: {0}")]
    InvalidPair(String),

    #[error("series denominator must have constant term 1")]
    NonUnitConstantTerm,

    #[error("no generating function for {0}")]
    UnknownGenFun(String),

    #[error("generating function {key} {detail}")]
    GenFunModulus { key: String, detail: &'static str },

    #[error("modulus {0} is not accepted here")]
    UnsupportedModulus(Modulus),

    #[error("formula variant {variant} is not defined for {quantity}")]
    InvalidVariant { quantity: String, variant: u8 },

    #[error("{id} is only defined for {domain}, got n = {n}")]
    OutOfDomain {
        id: &'static str,
        domain: &'static str,
        n: u32,
    },

    #[error("alternating sum evaluated to a negative count ({0})")]
    NegativeCount(String),

    #[error("{numerator} is not divisible by 2^{k}")]
    Indivisible { numerator: String, k: u32 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
