//! Exact counting of compositions by how close they are to being
//! palindromic: closed formulas, generating functions, exhaustive
//! enumeration, and an explicit bijection for the mismatch statistic.

pub mod bijection;
pub mod error;
pub mod formulas;
pub mod genfun;
pub mod method;
pub mod numbers;
pub mod oracle;
pub mod stats;
pub mod verify;

pub use bijection::{decode_pair, encode_pair, pair_statistics, PairSequences};
pub use error::{Error, Result};
pub use formulas::special::SpecialValue;
pub use formulas::{formula_count, FormulaVariant};
pub use genfun::{gf_catalog, gf_count, BivariatePoly, GfCounter, GfKey, ModulusForm, RationalGF};
pub use method::{Counter, Method};
pub use numbers::{Count, SignedCount};
pub use oracle::{Oracle, DEFAULT_CAP};
pub use stats::{Composition, CountSpec, Family, Modulus, Sign, SignClass};
pub use verify::{Report, Verifier, VerifyConfig};
