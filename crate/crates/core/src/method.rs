//! One entry point for the three ways of computing a count.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::formulas::{formula_count, FormulaVariant};
use crate::genfun::GfCounter;
use crate::numbers::Count;
use crate::oracle::Oracle;
use crate::stats::CountSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Method {
    /// Closed summation formulas.
    #[default]
    Formula,
    /// Coefficient extraction from a rational generating function.
    Gf,
    /// Exhaustive enumeration.
    Brute,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Formula, Method::Gf, Method::Brute];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Formula => "formula",
            Method::Gf => "gf",
            Method::Brute => "brute",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "formula" => Ok(Method::Formula),
            "gf" => Ok(Method::Gf),
            "brute" => Ok(Method::Brute),
            other => Err(Error::Parse {
                what: "method",
                detail: other.to_string(),
            }),
        }
    }
}

/// Evaluates counts by any method, reusing series expansions across calls.
#[derive(Debug, Default)]
pub struct Counter {
    oracle: Oracle,
    series: GfCounter,
}

impl Counter {
    pub fn new(oracle: Oracle) -> Self {
        Self {
            oracle,
            series: GfCounter::new(),
        }
    }

    pub fn oracle(&self) -> &Oracle {
        &self.oracle
    }

    /// `variant` selects among formulas and is ignored by the other methods.
    pub fn count(
        &self,
        spec: &CountSpec,
        n: u32,
        method: Method,
        variant: Option<FormulaVariant>,
    ) -> Result<Count> {
        match method {
            Method::Formula => formula_count(spec, n, variant),
            Method::Gf => self.series.count(spec, n),
            Method::Brute => self.oracle.brute_count(spec, n),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::{Family, Modulus, Sign};

    #[test]
    fn methods_agree_on_definition_example() {
        let counter = Counter::default();
        let spec = CountSpec::new(Family::Pc, false, Sign::Plus, Modulus::Infinity, 1);
        for method in Method::ALL {
            assert_eq!(
                counter.count(&spec, 4, method, None).unwrap(),
                Count::from(2u32)
            );
            let total = spec.with_sign(Sign::Total);
            assert_eq!(
                counter.count(&total, 4, method, None).unwrap(),
                Count::from(4u32)
            );
        }
    }

    #[test]
    fn parse_and_display() {
        for m in Method::ALL {
            assert_eq!(m.to_string().parse::<Method>().unwrap(), m);
        }
        assert!("fast".parse::<Method>().is_err());
        assert_eq!(Method::default(), Method::Formula);
    }

    #[test]
    fn brute_respects_cap() {
        let counter = Counter::new(Oracle::with_cap(10));
        let spec = CountSpec::new(Family::Ac, false, Sign::Plus, Modulus::Infinity, 0);
        assert!(matches!(
            counter.count(&spec, 11, Method::Brute, None),
            Err(Error::EnumerationCap { n: 11, cap: 10 })
        ));
        assert!(counter.count(&spec, 11, Method::Formula, None).is_ok());
    }
}
