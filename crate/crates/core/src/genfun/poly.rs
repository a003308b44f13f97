//! Truncated bivariate power series in `q` and `t` with integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A polynomial in `q` and `t` with every term of `q`-degree above `n_max` or
/// `t`-degree above `k_max` discarded.
///
/// Coefficients are stored densely, row `p` holding the `t`-coefficients of
/// `q^p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariatePoly {
    n_max: usize,
    k_max: usize,
    coeffs: Vec<BigInt>,
}

impl BivariatePoly {
    pub fn zero(n_max: usize, k_max: usize) -> Self {
        Self {
            n_max,
            k_max,
            coeffs: vec![BigInt::zero(); (n_max + 1) * (k_max + 1)],
        }
    }

    pub fn one(n_max: usize, k_max: usize) -> Self {
        Self::monomial(BigInt::one(), 0, 0, n_max, k_max)
    }

    /// `c q^p t^s`, or zero if the term lies beyond the bounds.
    pub fn monomial(c: impl Into<BigInt>, p: usize, s: usize, n_max: usize, k_max: usize) -> Self {
        let mut out = Self::zero(n_max, k_max);
        if p <= n_max && s <= k_max {
            out.coeffs[p * (k_max + 1) + s] = c.into();
        }
        out
    }

    /// Builds a polynomial from `(coefficient, q-degree, t-degree)` terms;
    /// repeated degrees accumulate.
    pub fn from_terms<I, C>(terms: I, n_max: usize, k_max: usize) -> Self
    where
        I: IntoIterator<Item = (C, usize, usize)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero(n_max, k_max);
        for (c, p, s) in terms {
            if p <= n_max && s <= k_max {
                out.coeffs[p * (k_max + 1) + s] += c.into();
            }
        }
        out
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    /// Coefficient of `q^p t^s`; zero outside the bounds.
    pub fn coeff(&self, p: usize, s: usize) -> BigInt {
        self.get(p, s).cloned().unwrap_or_default()
    }

    fn get(&self, p: usize, s: usize) -> Option<&BigInt> {
        (p <= self.n_max && s <= self.k_max).then(|| &self.coeffs[p * (self.k_max + 1) + s])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The same polynomial under new bounds, dropping or zero-filling terms.
    pub fn rebound(&self, n_max: usize, k_max: usize) -> Self {
        let mut out = Self::zero(n_max, k_max);
        for (p, s, c) in self.terms() {
            if p <= n_max && s <= k_max {
                out.coeffs[p * (k_max + 1) + s] = c.clone();
            }
        }
        out
    }

    /// Nonzero terms as `(q-degree, t-degree, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> + '_ {
        let width = self.k_max + 1;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(idx, c)| (idx / width, idx % width, c))
    }

    /// Highest `q`-degree with a nonzero coefficient.
    pub fn q_degree(&self) -> Option<usize> {
        self.terms().map(|(p, _, _)| p).max()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let n_max = self.n_max.min(other.n_max);
        let k_max = self.k_max.min(other.k_max);
        let mut out = Self::zero(n_max, k_max);
        for p in 0..=n_max {
            for s in 0..=k_max {
                out.coeffs[p * (k_max + 1) + s] = f(
                    self.get(p, s).expect("within bounds"),
                    other.get(p, s).expect("within bounds"),
                );
            }
        }
        out
    }

    /// Multiplicative inverse modulo `(q^{n_max+1}, t^{k_max+1})`.
    ///
    /// Solves `d·u = 1` one coefficient at a time in order of increasing
    /// `q`-degree, then `t`-degree:
    /// `u[p][s] = -Σ_{(a,b) ≠ (0,0)} d[a][b] u[p-a][s-b]`.
    pub fn series_inverse(&self, n_max: usize, k_max: usize) -> Result<Self> {
        if !self.coeff(0, 0).is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let terms: Vec<(usize, usize, BigInt)> = self
            .terms()
            .filter(|&(a, b, _)| (a, b) != (0, 0) && a <= n_max && b <= k_max)
            .map(|(a, b, c)| (a, b, c.clone()))
            .collect();
        let mut u = Self::zero(n_max, k_max);
        let width = k_max + 1;
        u.coeffs[0] = BigInt::one();
        for p in 0..=n_max {
            for s in 0..=k_max {
                if (p, s) == (0, 0) {
                    continue;
                }
                let mut acc = BigInt::zero();
                for (a, b, c) in &terms {
                    if *a <= p && *b <= s {
                        let prev = &u.coeffs[(p - a) * width + (s - b)];
                        if !prev.is_zero() {
                            acc -= c * prev;
                        }
                    }
                }
                u.coeffs[p * width + s] = acc;
            }
        }
        Ok(u)
    }
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;

    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &BivariatePoly {
    type Output = BivariatePoly;

    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;

    fn neg(self) -> BivariatePoly {
        BivariatePoly {
            n_max: self.n_max,
            k_max: self.k_max,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;

    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let n_max = self.n_max.min(rhs.n_max);
        let k_max = self.k_max.min(rhs.k_max);
        let mut out = BivariatePoly::zero(n_max, k_max);
        let rhs_terms: Vec<_> = rhs.terms().collect();
        for (a, b, x) in self.terms() {
            for &(c, d, y) in &rhs_terms {
                if a + c <= n_max && b + d <= k_max {
                    out.coeffs[(a + c) * (k_max + 1) + b + d] += x * y;
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for BivariatePoly {
            type Output = BivariatePoly;

            fn $m(self, rhs: BivariatePoly) -> BivariatePoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for BivariatePoly {
    type Output = BivariatePoly;

    fn neg(self) -> BivariatePoly {
        -&self
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, s, c) in self.terms() {
            let (sign, mag) = if c < &BigInt::zero() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let unit = mag.is_one() && (p, s) != (0, 0);
            if !unit {
                write!(f, "{mag}")?;
            }
            let var = |name: &str, e: usize, f: &mut fmt::Formatter<'_>| match e {
                0 => Ok(()),
                1 => write!(f, "{name}"),
                _ => write!(f, "{name}^{e}"),
            };
            var("q", p, f)?;
            var("t", s, f)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
