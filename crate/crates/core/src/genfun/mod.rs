//! Rational generating functions in `q` (marking `n`) and `t` (marking the
//! statistic `k`), expanded as truncated power series.
//!
//! This is the second, independent way of computing every count: extract the
//! coefficient of `q^n t^k` from the rational function instead of evaluating
//! a closed summation.

mod poly;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numbers::{Count, SignedCount};
use crate::stats::{CountSpec, Family, Modulus, Sign};

pub use poly::BivariatePoly;

/// A quotient of two polynomials whose denominator has constant term 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    numerator: BivariatePoly,
    denominator: BivariatePoly,
}

impl RationalGF {
    pub fn new(numerator: BivariatePoly, denominator: BivariatePoly) -> Result<Self> {
        if denominator.coeff(0, 0) != 1.into() {
            return Err(Error::NonUnitConstantTerm);
        }
        Ok(Self {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &BivariatePoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &BivariatePoly {
        &self.denominator
    }

    /// Power series expansion modulo `(q^{n_max+1}, t^{k_max+1})`.
    pub fn expand(&self, n_max: usize, k_max: usize) -> Result<BivariatePoly> {
        let inverse = self.denominator.series_inverse(n_max, k_max)?;
        Ok(&self.numerator.rebound(n_max, k_max) * &inverse)
    }
}

/// Coefficient of `q^n t^k` in the expansion of `gf`.
pub fn extract_coefficient(gf: &RationalGF, n: usize, k: usize) -> Result<SignedCount> {
    Ok(gf.expand(n, k)?.coeff(n, k))
}

/// Whether a catalog entry is for the modulus `∞` or for a symbolic `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModulusForm {
    Infinity,
    Symbolic,
}

/// Identifies one generating function. Only `Plus` and `Total` signs have
/// entries; minus counts are plus counts shifted by one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GfKey {
    pub family: Family,
    pub reduced: bool,
    pub sign: Sign,
    pub form: ModulusForm,
}

impl GfKey {
    pub fn new(family: Family, reduced: bool, sign: Sign, form: ModulusForm) -> Self {
        Self {
            family,
            reduced,
            sign,
            form,
        }
    }

    /// Every key in the catalog.
    pub fn all() -> Vec<GfKey> {
        let mut out = Vec::new();
        for family in [Family::Pc, Family::Ac] {
            for reduced in [false, true] {
                for sign in [Sign::Plus, Sign::Total] {
                    for form in [ModulusForm::Infinity, ModulusForm::Symbolic] {
                        out.push(GfKey::new(family, reduced, sign, form));
                    }
                }
            }
        }
        out
    }

    /// True for entries built from another entry rather than written out
    /// directly: the totals obtained by the `(1+q)` multiplier, and reduced
    /// mismatch counts at `∞` obtained by `t ↦ t/2`.
    pub fn is_derived(&self) -> bool {
        use Family::*;
        use ModulusForm::*;
        matches!(
            (self.family, self.reduced, self.sign, self.form),
            (Pc, true, Sign::Plus, Infinity)
                | (Pc, _, Sign::Total, _)
                | (Ac, true, Sign::Total, Infinity)
        )
    }
}

impl fmt::Display for GfKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = if self.reduced { "r" } else { "" };
        let sign = match self.sign {
            Sign::Plus => "_+",
            Sign::Minus => "_-",
            Sign::Total => "",
        };
        let m = match self.form {
            ModulusForm::Infinity => "inf",
            ModulusForm::Symbolic => "m",
        };
        write!(f, "{prefix}{}{sign}(q,t; {m})", self.family)
    }
}

// Builds catalog polynomials. Every catalog polynomial has t-degree at most
// 1 and q-degree at most m + 3, so the bounds below hold them exactly.
struct Builder {
    n_max: usize,
}

impl Builder {
    fn c(&self, v: i64) -> BivariatePoly {
        BivariatePoly::monomial(v, 0, 0, self.n_max, 1)
    }

    /// `c q^e`
    fn q(&self, c: i64, e: usize) -> BivariatePoly {
        BivariatePoly::monomial(c, e, 0, self.n_max, 1)
    }

    /// `t`
    fn t(&self) -> BivariatePoly {
        BivariatePoly::monomial(1, 0, 1, self.n_max, 1)
    }

    /// `1 - q^e`
    fn one_minus(&self, e: usize) -> BivariatePoly {
        &self.c(1) - &self.q(1, e)
    }

    /// `1 + q^e`
    fn one_plus(&self, e: usize) -> BivariatePoly {
        &self.c(1) + &self.q(1, e)
    }
}

fn plus_entry(family: Family, reduced: bool, form: ModulusForm, m: u32) -> Result<RationalGF> {
    use Family::*;
    use ModulusForm::*;
    let m = m as usize;
    let x = Builder { n_max: m + 6 };
    let t = x.t();
    let (num, den) = match (family, reduced, form) {
        // (1-q) / ((1-q)(1-2q²) - 2q³t)
        (Pc, false, Infinity) => (
            x.one_minus(1),
            x.one_minus(1) * (&x.c(1) - &x.q(2, 2)) - x.q(2, 3) * t,
        ),
        // the entry above at t/2
        (Pc, true, Infinity) => (
            x.one_minus(1),
            x.one_minus(1) * (&x.c(1) - &x.q(2, 2)) - x.q(1, 3) * t,
        ),
        // (1-q) / (1-q-q²-q³-(1-q)q²t)
        (Ac, false, Infinity) => (
            x.one_minus(1),
            x.c(1) - x.q(1, 1) - x.q(1, 2) - x.q(1, 3) - x.one_minus(1) * x.q(1, 2) * t,
        ),
        // (1-q) / (1-q-q²-(1-q)q²t)
        (Ac, true, Infinity) => (
            x.one_minus(1),
            x.c(1) - x.q(1, 1) - x.q(1, 2) - x.one_minus(1) * x.q(1, 2) * t,
        ),
        // (1-q)(1-q^m) / ((1-q)(1-q^m) - 2q²(1-q+q(1-q^{m-1})t))
        (Pc, false, Symbolic) => (
            x.one_minus(1) * x.one_minus(m),
            x.one_minus(1) * x.one_minus(m)
                - x.q(2, 2) * (x.one_minus(1) + x.q(1, 1) * x.one_minus(m - 1) * t),
        ),
        // (1-q)(1-q^m) / ((1-q)(1-q²)(1-q^m) - q²(1-q) - q³(1-q^{m-1})t)
        (Pc, true, Symbolic) => (
            x.one_minus(1) * x.one_minus(m),
            x.one_minus(1) * x.one_minus(2) * x.one_minus(m)
                - x.q(1, 2) * x.one_minus(1)
                - x.q(1, 3) * x.one_minus(m - 1) * t,
        ),
        // (1-q)(1-q^m) / ((1-q)(1-q^m) - q²(1-q)(1-q^m) - 2q³(1-q^{m-1}) - q²(1-q)(1+q^m)t)
        (Ac, false, Symbolic) => (
            x.one_minus(1) * x.one_minus(m),
            x.one_minus(1) * x.one_minus(m)
                - x.q(1, 2) * x.one_minus(1) * x.one_minus(m)
                - x.q(2, 3) * x.one_minus(m - 1)
                - x.q(1, 2) * x.one_minus(1) * x.one_plus(m) * t,
        ),
        // (1-q)(1-q^m) / ((1-q)(1-q^m) - q²(1-2q^m+q^{m+1}) - q²(1-q)t)
        (Ac, true, Symbolic) => (
            x.one_minus(1) * x.one_minus(m),
            x.one_minus(1) * x.one_minus(m)
                - x.q(1, 2) * (x.c(1) - x.q(2, m) + x.q(1, m + 1))
                - x.q(1, 2) * x.one_minus(1) * t,
        ),
    };
    RationalGF::new(num, den)
}

fn total_entry(family: Family, reduced: bool, form: ModulusForm, m: u32) -> Result<RationalGF> {
    use Family::*;
    use ModulusForm::*;
    let mu = m as usize;
    let x = Builder { n_max: mu + 6 };
    let t = x.t();
    let (num, den) = match (family, reduced, form) {
        // (1-q²) / (1-q-q²-q³-(1-q)q²t)
        (Ac, false, Infinity) => (
            x.one_minus(2),
            x.c(1) - x.q(1, 1) - x.q(1, 2) - x.q(1, 3) - x.one_minus(1) * x.q(1, 2) * t,
        ),
        // (1-q²)(1-q^m) / ((1-q)(1-q²)(1-q^m) - 2q³(1-q^{m-1}) - q²(1-q)(1+q^m)t)
        (Ac, false, Symbolic) => (
            x.one_minus(2) * x.one_minus(mu),
            x.one_minus(1) * x.one_minus(2) * x.one_minus(mu)
                - x.q(2, 3) * x.one_minus(mu - 1)
                - x.q(1, 2) * x.one_minus(1) * x.one_plus(mu) * t,
        ),
        // (1-q²)(1-q^m) / ((1-q)(1-q²)(1-q^m) - q³(1-q^{m-1}) - q²(1-q)t)
        (Ac, true, Symbolic) => (
            x.one_minus(2) * x.one_minus(mu),
            x.one_minus(1) * x.one_minus(2) * x.one_minus(mu)
                - x.q(1, 3) * x.one_minus(mu - 1)
                - x.q(1, 2) * x.one_minus(1) * t,
        ),
        // total(n) = plus(n) + plus(n-1): multiply the numerator by 1+q
        _ => {
            let plus = plus_entry(family, reduced, form, m)?;
            let num = x.one_plus(1) * plus.numerator().rebound(mu + 6, 1);
            (num, plus.denominator().clone())
        }
    };
    RationalGF::new(num, den)
}

/// The generating function for `key`; symbolic entries need `m ≥ 1`,
/// entries at `∞` take no `m`.
pub fn gf_catalog(key: GfKey, m: Option<u32>) -> Result<RationalGF> {
    let m = match (key.form, m) {
        (ModulusForm::Infinity, None) => 0,
        (ModulusForm::Infinity, Some(_)) => {
            return Err(Error::GenFunModulus {
                key: key.to_string(),
                detail: "takes no modulus",
            })
        }
        (ModulusForm::Symbolic, None) => {
            return Err(Error::GenFunModulus {
                key: key.to_string(),
                detail: "requires a modulus m",
            })
        }
        (ModulusForm::Symbolic, Some(0)) => return Err(Error::InvalidModulus(0)),
        (ModulusForm::Symbolic, Some(m)) => m,
    };
    match key.sign {
        Sign::Plus => plus_entry(key.family, key.reduced, key.form, m),
        Sign::Total => total_entry(key.family, key.reduced, key.form, m),
        Sign::Minus => Err(Error::UnknownGenFun(key.to_string())),
    }
}

/// Catalog key and `m` for the generating function of `spec`, with minus
/// counts mapped to the plus entry.
pub fn key_for(spec: &CountSpec) -> (GfKey, Option<u32>) {
    let sign = match spec.sign {
        Sign::Minus => Sign::Plus,
        s => s,
    };
    let (form, m) = match spec.modulus {
        Modulus::Infinity => (ModulusForm::Infinity, None),
        Modulus::Finite(m) => (ModulusForm::Symbolic, Some(m)),
    };
    (GfKey::new(spec.family, spec.reduced, sign, form), m)
}

fn nonnegative(value: SignedCount) -> Result<Count> {
    value
        .to_biguint()
        .ok_or_else(|| Error::NegativeCount(value.to_string()))
}

/// Evaluates `spec` at `n` by coefficient extraction. Minus counts are
/// read off the plus series at `n-1`.
pub fn gf_count(spec: &CountSpec, n: u32) -> Result<Count> {
    let (key, m) = key_for(spec);
    let n = match (spec.sign, n) {
        (Sign::Minus, 0) => return Ok(Count::zero()),
        (Sign::Minus, n) => n - 1,
        (_, n) => n,
    };
    nonnegative(extract_coefficient(
        &gf_catalog(key, m)?,
        n as usize,
        spec.k as usize,
    )?)
}

type CatalogInstance = (GfKey, Option<u32>);

/// Caches series expansions so that many coefficients of the same
/// generating function cost one expansion.
#[derive(Debug, Default)]
pub struct GfCounter {
    cache: Mutex<HashMap<CatalogInstance, Arc<BivariatePoly>>>,
}

impl GfCounter {
    pub fn new() -> Self {
        Self::default()
    }

    fn series(&self, key: GfKey, m: Option<u32>, n: usize, k: usize) -> Result<Arc<BivariatePoly>> {
        if let Some(s) = self.cache.lock().unwrap().get(&(key, m)) {
            if s.n_max() >= n && s.k_max() >= k {
                return Ok(Arc::clone(s));
            }
        }
        // Grow geometrically so a sweep over n does not re-expand each time.
        let (n_max, k_max) = match self.cache.lock().unwrap().get(&(key, m)) {
            Some(s) => (n.max(2 * s.n_max()), k.max(s.k_max())),
            None => (n.max(16), k.max(4)),
        };
        let series = Arc::new(gf_catalog(key, m)?.expand(n_max, k_max)?);
        self.cache
            .lock()
            .unwrap()
            .insert((key, m), Arc::clone(&series));
        Ok(series)
    }

    pub fn count(&self, spec: &CountSpec, n: u32) -> Result<Count> {
        let (key, m) = key_for(spec);
        let n = match (spec.sign, n) {
            (Sign::Minus, 0) => return Ok(Count::zero()),
            (Sign::Minus, n) => n - 1,
            (_, n) => n,
        };
        let k = spec.k as usize;
        let series = self.series(key, m, n as usize, k)?;
        nonnegative(series.coeff(n as usize, k))
    }
}
