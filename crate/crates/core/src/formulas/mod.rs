//! Closed-form summations for every counting family.
//!
//! Each function evaluates its sum over exactly the index set it is stated
//! with, using [`binom`] for every binomial so that the `binom(-1, 0) = 1`
//! convention is honored. Alternating sums accumulate in [`SignedCount`] and
//! are checked for nonnegativity once, at the end.

mod index;
pub mod special;
pub mod specialized;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbers::{binom, multinom, pow2, Count, SignedCount};
use crate::stats::{CountSpec, Family, Modulus, Sign};

use index::{for_each_weak_composition, sum_over, Cap, Var};

/// Selects among several published formulas for the same quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FormulaVariant {
    V1,
    V2,
    V3,
}

impl FormulaVariant {
    pub const ALL: [FormulaVariant; 3] =
        [FormulaVariant::V1, FormulaVariant::V2, FormulaVariant::V3];

    pub fn number(self) -> u8 {
        match self {
            FormulaVariant::V1 => 1,
            FormulaVariant::V2 => 2,
            FormulaVariant::V3 => 3,
        }
    }

    pub fn from_number(v: u8) -> Result<Self> {
        match v {
            1 => Ok(FormulaVariant::V1),
            2 => Ok(FormulaVariant::V2),
            3 => Ok(FormulaVariant::V3),
            _ => Err(Error::Parse {
                what: "formula variant",
                detail: v.to_string(),
            }),
        }
    }
}

impl fmt::Display for FormulaVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

fn b(a: i64, b_: i64) -> BigInt {
    BigInt::from(binom(a, b_))
}

fn p2(e: i64) -> BigInt {
    BigInt::from(pow2(e as u64))
}

fn sign(e: i64) -> BigInt {
    if e % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn to_count(sum: SignedCount) -> Result<Count> {
    sum.to_biguint()
        .ok_or_else(|| Error::NegativeCount(sum.to_string()))
}

fn check_modulus(m: u32) -> Result<i64> {
    if m == 0 {
        return Err(Error::InvalidModulus(0));
    }
    Ok(m as i64)
}

fn bad_variant(quantity: &str, v: FormulaVariant) -> Error {
    Error::InvalidVariant {
        quantity: quantity.to_string(),
        variant: v.number(),
    }
}

/// `pc_+^k(n) = Σ_{i+2j=n-3k} C(i+k-1,i) C(j+k,j) 2^{j+k}`.
pub fn pc_plus_k(n: u32, k: u32) -> Result<Count> {
    let k = k as i64;
    let target = n as i64 - 3 * k;
    let sum = sum_over(target, &[Var::new(1), Var::new(2)], |x| {
        let (i, j) = (x[0], x[1]);
        b(i + k - 1, i) * b(j + k, j) * p2(j + k)
    });
    to_count(sum)
}

/// `pc_+^1(n) = 2 + (⌈n/2⌉ - 2) 2^{⌈n/2⌉}`.
pub fn pc_plus_1_closed(n: u32) -> Result<Count> {
    let c = n.div_ceil(2) as i64;
    to_count(BigInt::from(2) + BigInt::from(c - 2) * p2(c))
}

/// `ac_+^k(n)` by one of three formulas.
///
/// * `V1`: `Σ_{2r+i+j=n-2k} C(r+k,r) C(r,i) C(r+j-1,j)`
/// * `V2`: `Σ_{2r+i+j=n-2k} 2^i C(r+k,k) C(r,i) C(i+j-1,j)`
/// * `V3`: `Σ_{i+j+r+2s=n-2k} (-1)^i C(k+1,i) C(j+k,j) C(j,r+s) C(r+s,r)`
pub fn ac_plus_k(n: u32, k: u32, variant: FormulaVariant) -> Result<Count> {
    let k = k as i64;
    let target = n as i64 - 2 * k;
    let sum = match variant {
        FormulaVariant::V1 => sum_over(target, &[Var::new(2), Var::new(1), Var::new(1)], |x| {
            let (r, i, j) = (x[0], x[1], x[2]);
            b(r + k, r) * b(r, i) * b(r + j - 1, j)
        }),
        FormulaVariant::V2 => sum_over(target, &[Var::new(2), Var::new(1), Var::new(1)], |x| {
            let (r, i, j) = (x[0], x[1], x[2]);
            p2(i) * b(r + k, k) * b(r, i) * b(i + j - 1, j)
        }),
        FormulaVariant::V3 => sum_over(
            target,
            &[Var::new(1), Var::new(1), Var::new(1), Var::new(2)],
            |x| {
                let (i, j, r, s) = (x[0], x[1], x[2], x[3]);
                sign(i) * b(k + 1, i) * b(j + k, j) * b(j, r + s) * b(r + s, r)
            },
        ),
    };
    to_count(sum)
}

/// `ac^k(n)` as a difference of two alternating sums over `i+j+r+s = n-2k`
/// and `i+j+r+s = n-2k-2` of `(-1)^i C(k,i) C(j+k,j) C(j,r) C(r,s)`.
pub fn ac_total_k_alt(n: u32, k: u32) -> Result<Count> {
    let k = k as i64;
    let vars = [Var::new(1); 4];
    let term = |x: &[i64]| {
        let (i, j, r, s) = (x[0], x[1], x[2], x[3]);
        sign(i) * b(k, i) * b(j + k, j) * b(j, r) * b(r, s)
    };
    let n = n as i64;
    to_count(sum_over(n - 2 * k, &vars, term) - sum_over(n - 2 * k - 2, &vars, term))
}

fn divide_by_pow2(numerator: Count, k: u32) -> Result<Count> {
    let mask = pow2(k as u64) - BigUint::one();
    if !(&numerator & &mask).is_zero() {
        return Err(Error::Indivisible {
            numerator: numerator.to_string(),
            k,
        });
    }
    Ok(numerator >> k as usize)
}

/// `rpc_+^k(n) = pc_+^k(n) / 2^k`.
pub fn rpc_plus_k(n: u32, k: u32) -> Result<Count> {
    divide_by_pow2(pc_plus_k(n, k)?, k)
}

/// `rpc^k(n) = pc^k(n) / 2^k`; fails if the division is not exact.
pub fn rpc_total_k(n: u32, k: u32) -> Result<Count> {
    divide_by_pow2(total_from_plus(|x| pc_plus_k(x, k), n)?, k)
}

/// `rac_+^k(n) = Σ_{2r+j=n-2k} C(r+k,r) C(r+j-1,j)`.
pub fn rac_plus_k(n: u32, k: u32) -> Result<Count> {
    let k = k as i64;
    let sum = sum_over(n as i64 - 2 * k, &[Var::new(2), Var::new(1)], |x| {
        let (r, j) = (x[0], x[1]);
        b(r + k, r) * b(r + j - 1, j)
    });
    to_count(sum)
}

/// `pc_+^k(n,m)`.
///
/// * `V1`: `Σ_{2i+mj+(m-1)r+s=n-k} (-1)^r 2^i C(i,k) C(i+j-1,j) C(k,r) C(k+s-1,s)`
/// * `V2`: the multinomial form over `i_0+…+i_{m-2} = k`.
pub fn pc_plus_k_mod(n: u32, k: u32, m: u32, variant: FormulaVariant) -> Result<Count> {
    let m = check_modulus(m)?;
    let k = k as i64;
    let target = n as i64 - k;
    let sum = match variant {
        FormulaVariant::V1 => sum_over(
            target,
            &[
                Var::new(2),
                Var::new(m),
                Var::capped(m - 1, Cap::Const(k)),
                Var::new(1),
            ],
            |x| {
                let (i, j, r, s) = (x[0], x[1], x[2], x[3]);
                sign(r) * p2(i) * b(i, k) * b(i + j - 1, j) * b(k, r) * b(k + s - 1, s)
            },
        ),
        FormulaVariant::V2 => {
            let mut acc = BigInt::zero();
            for_each_weak_composition((m - 1) as usize, k, target, |parts, weighted| {
                let coeff = BigInt::from(multinom(k as u64, parts));
                acc += coeff
                    * sum_over(target - weighted, &[Var::new(2), Var::new(m)], |x| {
                        let (i, j) = (x[0], x[1]);
                        p2(i) * b(i, k) * b(i + j - 1, j)
                    });
            });
            acc
        }
        v => return Err(bad_variant("pc_+^k(n,m)", v)),
    };
    to_count(sum)
}

/// `pc_+(n,m) = Σ_{2i+mj=n} 2^i C(i+j-1,j)`.
pub fn pc_plus_mod_k0(n: u32, m: u32) -> Result<Count> {
    let m = check_modulus(m)?;
    to_count(sum_over(n as i64, &[Var::new(2), Var::new(m)], |x| {
        let (i, j) = (x[0], x[1]);
        p2(i) * b(i + j - 1, j)
    }))
}

/// `rpc_+^k(n,m)`.
///
/// * `V1`: `Σ_{2i+mj+2c+(m-1)r+s=n-k} (-1)^r C(i,k) C(i+j-1,j) C(i+c,c) C(k,r) C(k+s-1,s)`
/// * `V2`: the multinomial form over `i_0+…+i_{m-2} = k`.
pub fn rpc_plus_k_mod(n: u32, k: u32, m: u32, variant: FormulaVariant) -> Result<Count> {
    let m = check_modulus(m)?;
    let k = k as i64;
    let target = n as i64 - k;
    let sum = match variant {
        FormulaVariant::V1 => sum_over(
            target,
            &[
                Var::new(2),
                Var::new(m),
                Var::new(2),
                Var::capped(m - 1, Cap::Const(k)),
                Var::new(1),
            ],
            |x| {
                let (i, j, c, r, s) = (x[0], x[1], x[2], x[3], x[4]);
                sign(r) * b(i, k) * b(i + j - 1, j) * b(i + c, c) * b(k, r) * b(k + s - 1, s)
            },
        ),
        FormulaVariant::V2 => {
            let mut acc = BigInt::zero();
            for_each_weak_composition((m - 1) as usize, k, target, |parts, weighted| {
                let coeff = BigInt::from(multinom(k as u64, parts));
                acc += coeff
                    * sum_over(
                        target - weighted,
                        &[Var::new(2), Var::new(m), Var::new(2)],
                        |x| {
                            let (i, j, c) = (x[0], x[1], x[2]);
                            b(i, k) * b(i + j - 1, j) * b(i + c, c)
                        },
                    );
            });
            acc
        }
        v => return Err(bad_variant("rpc_+^k(n,m)", v)),
    };
    to_count(sum)
}

/// `rpc_+(n,m) = Σ_{2i+mj+2r=n} C(i+j-1,j) C(i+r,r)`.
pub fn rpc_plus_mod_k0(n: u32, m: u32) -> Result<Count> {
    let m = check_modulus(m)?;
    to_count(sum_over(
        n as i64,
        &[Var::new(2), Var::new(m), Var::new(2)],
        |x| {
            let (i, j, r) = (x[0], x[1], x[2]);
            b(i + j - 1, j) * b(i + r, r)
        },
    ))
}

/// `ac_+^k(n,m)`.
///
/// * `V1`: `Σ_{2i+j+(m-1)r+s+mc+md=n-2k} (-1)^r 2^j C(i+k,k) C(i,j) C(j,r) C(j+s-1,s) C(k,c) C(k+j+d-1,d)`
/// * `V2`: the multinomial form over `i_0+…+i_{m-2} = j`.
pub fn ac_plus_k_mod(n: u32, k: u32, m: u32, variant: FormulaVariant) -> Result<Count> {
    let m = check_modulus(m)?;
    let k = k as i64;
    let target = n as i64 - 2 * k;
    let sum = match variant {
        FormulaVariant::V1 => sum_over(
            target,
            &[
                Var::new(2),
                Var::new(1),
                Var::capped(m - 1, Cap::Index(1)),
                Var::new(1),
                Var::new(m),
                Var::new(m),
            ],
            |x| {
                let (i, j, r, s, c, d) = (x[0], x[1], x[2], x[3], x[4], x[5]);
                sign(r)
                    * p2(j)
                    * b(i + k, k)
                    * b(i, j)
                    * b(j, r)
                    * b(j + s - 1, s)
                    * b(k, c)
                    * b(k + j + d - 1, d)
            },
        ),
        FormulaVariant::V2 => {
            let mut acc = BigInt::zero();
            for j in 0..=target.max(-1) {
                for_each_weak_composition((m - 1) as usize, j, target - j, |parts, weighted| {
                    let coeff = BigInt::from(multinom(j as u64, parts)) * p2(j);
                    acc += coeff
                        * sum_over(
                            target - j - weighted,
                            &[Var::new(2), Var::new(m), Var::new(m)],
                            |x| {
                                let (i, c, d) = (x[0], x[1], x[2]);
                                b(i + k, k) * b(i, j) * b(k, c) * b(k + j + d - 1, d)
                            },
                        );
                });
            }
            acc
        }
        v => return Err(bad_variant("ac_+^k(n,m)", v)),
    };
    to_count(sum)
}

/// `ac^k(n,m) = Σ_{3i+j+(m-1)r+2s+mc+md=n-2k} (-1)^r 2^i C(i+k,k) C(i+j,j) C(i,r) C(i+k+s-1,s) C(k,c) C(i+k+d-1,d)`.
pub fn ac_total_k_mod(n: u32, k: u32, m: u32) -> Result<Count> {
    let m = check_modulus(m)?;
    let k = k as i64;
    to_count(sum_over(
        n as i64 - 2 * k,
        &[
            Var::new(3),
            Var::new(1),
            Var::capped(m - 1, Cap::Index(0)),
            Var::new(2),
            Var::new(m),
            Var::new(m),
        ],
        |x| {
            let (i, j, r, s, c, d) = (x[0], x[1], x[2], x[3], x[4], x[5]);
            sign(r)
                * p2(i)
                * b(i + k, k)
                * b(i + j, j)
                * b(i, r)
                * b(i + k + s - 1, s)
                * b(k, c)
                * b(i + k + d - 1, d)
        },
    ))
}

/// `rac_+^k(n,m)`.
///
/// * `V1`: `Σ_{2i+j+(m-1)r+s+md=n-2k} (-1)^r C(i+k,k) C(i,j) C(j,r) C(j+s-1,s) C(k+j+d-1,d)`
/// * `V2`: the multinomial form over `i_0+…+i_{m-2} = j`.
pub fn rac_plus_k_mod(n: u32, k: u32, m: u32, variant: FormulaVariant) -> Result<Count> {
    let m = check_modulus(m)?;
    let k = k as i64;
    let target = n as i64 - 2 * k;
    let sum = match variant {
        FormulaVariant::V1 => sum_over(
            target,
            &[
                Var::new(2),
                Var::new(1),
                Var::capped(m - 1, Cap::Index(1)),
                Var::new(1),
                Var::new(m),
            ],
            |x| {
                let (i, j, r, s, d) = (x[0], x[1], x[2], x[3], x[4]);
                sign(r) * b(i + k, k) * b(i, j) * b(j, r) * b(j + s - 1, s) * b(k + j + d - 1, d)
            },
        ),
        FormulaVariant::V2 => {
            let mut acc = BigInt::zero();
            for j in 0..=target.max(-1) {
                for_each_weak_composition((m - 1) as usize, j, target - j, |parts, weighted| {
                    let coeff = BigInt::from(multinom(j as u64, parts));
                    acc += coeff
                        * sum_over(target - j - weighted, &[Var::new(2), Var::new(m)], |x| {
                            let (i, d) = (x[0], x[1]);
                            b(i + k, k) * b(i, j) * b(k + j + d - 1, d)
                        });
                });
            }
            acc
        }
        v => return Err(bad_variant("rac_+^k(n,m)", v)),
    };
    to_count(sum)
}

/// `rac^k(n,m) = Σ_{3i+j+(m-1)r+2s+md=n-2k} (-1)^r C(i+k,k) C(i+j,j) C(i,r) C(i+k+s-1,s) C(i+k+d-1,d)`.
pub fn rac_total_k_mod(n: u32, k: u32, m: u32) -> Result<Count> {
    let m = check_modulus(m)?;
    let k = k as i64;
    to_count(sum_over(
        n as i64 - 2 * k,
        &[
            Var::new(3),
            Var::new(1),
            Var::capped(m - 1, Cap::Index(0)),
            Var::new(2),
            Var::new(m),
        ],
        |x| {
            let (i, j, r, s, d) = (x[0], x[1], x[2], x[3], x[4]);
            sign(r)
                * b(i + k, k)
                * b(i + j, j)
                * b(i, r)
                * b(i + k + s - 1, s)
                * b(i + k + d - 1, d)
        },
    ))
}

/// `f(n) + f(n-1)`, with the `n-1 = -1` term taken as 0.
pub fn total_from_plus<F>(plus: F, n: u32) -> Result<Count>
where
    F: Fn(u32) -> Result<Count>,
{
    let here = plus(n)?;
    if n == 0 {
        return Ok(here);
    }
    Ok(here + plus(n - 1)?)
}

/// The variants a [`formula_count`] call accepts for a given family.
pub fn variants_for(family: Family, reduced: bool, modulus: Modulus) -> &'static [FormulaVariant] {
    use FormulaVariant::*;
    match (family, reduced, modulus) {
        (Family::Ac, false, Modulus::Infinity) => &[V1, V2, V3],
        (_, _, Modulus::Infinity) => &[V1],
        (_, _, Modulus::Finite(_)) => &[V1, V2],
    }
}

fn plus_count(spec: &CountSpec, n: u32, variant: FormulaVariant) -> Result<Count> {
    let k = spec.k;
    match (spec.family, spec.reduced, spec.modulus) {
        (Family::Pc, false, Modulus::Infinity) => pc_plus_k(n, k),
        (Family::Ac, false, Modulus::Infinity) => ac_plus_k(n, k, variant),
        (Family::Pc, true, Modulus::Infinity) => rpc_plus_k(n, k),
        (Family::Ac, true, Modulus::Infinity) => rac_plus_k(n, k),
        (Family::Pc, false, Modulus::Finite(m)) => pc_plus_k_mod(n, k, m, variant),
        (Family::Pc, true, Modulus::Finite(m)) => rpc_plus_k_mod(n, k, m, variant),
        (Family::Ac, false, Modulus::Finite(m)) => ac_plus_k_mod(n, k, m, variant),
        (Family::Ac, true, Modulus::Finite(m)) => rac_plus_k_mod(n, k, m, variant),
    }
}

/// Direct formula for the total, where one exists independently of the
/// plus/minus split.
fn direct_total(spec: &CountSpec, n: u32) -> Option<Result<Count>> {
    let k = spec.k;
    match (spec.family, spec.reduced, spec.modulus) {
        (Family::Ac, false, Modulus::Infinity) => Some(ac_total_k_alt(n, k)),
        (Family::Pc, true, Modulus::Infinity) => Some(rpc_total_k(n, k)),
        (Family::Ac, false, Modulus::Finite(m)) => Some(ac_total_k_mod(n, k, m)),
        (Family::Ac, true, Modulus::Finite(m)) => Some(rac_total_k_mod(n, k, m)),
        _ => None,
    }
}

/// Evaluates the count selected by `spec` at `n` through closed formulas.
///
/// Minus counts use `minus(n) = plus(n-1)`. Totals use the direct total
/// formula when one exists and no variant is requested; otherwise
/// `plus(n) + plus(n-1)` with the chosen plus variant.
pub fn formula_count(spec: &CountSpec, n: u32, variant: Option<FormulaVariant>) -> Result<Count> {
    let chosen = variant.unwrap_or(FormulaVariant::V1);
    if !variants_for(spec.family, spec.reduced, spec.modulus).contains(&chosen) {
        return Err(bad_variant(&spec.name(), chosen));
    }
    match spec.sign {
        Sign::Plus => plus_count(spec, n, chosen),
        Sign::Minus => match n {
            0 => Ok(Count::zero()),
            _ => plus_count(spec, n - 1, chosen),
        },
        Sign::Total => match (variant, direct_total(spec, n)) {
            (None, Some(direct)) => direct,
            _ => total_from_plus(|x| plus_count(spec, x, chosen), n),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{fibonacci, tribonacci_prime};
    use crate::oracle::Oracle;
    use FormulaVariant::*;

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    fn brute(family: Family, reduced: bool, sign: Sign, k: u32, m: Modulus, n: u32) -> Count {
        Oracle::default()
            .brute_count(&CountSpec::new(family, reduced, sign, m, k), n)
            .unwrap()
    }

    #[test]
    fn pc_plus_k_examples() {
        assert_eq!(pc_plus_k(4, 1).unwrap(), c(2));
        assert_eq!(pc_plus_k(6, 0).unwrap(), c(8));
        assert_eq!(pc_plus_k(5, 0).unwrap(), c(0));
        assert_eq!(
            pc_plus_k(10, 2).unwrap(),
            brute(Family::Pc, false, Sign::Plus, 2, Modulus::Infinity, 10)
        );
    }

    #[test]
    fn pc_plus_1_closed_examples() {
        assert_eq!(pc_plus_1_closed(4).unwrap(), c(2));
        assert_eq!(pc_plus_1_closed(3).unwrap(), c(2));
        assert_eq!(pc_plus_1_closed(0).unwrap(), c(0));
        for n in 0..=40 {
            assert_eq!(
                pc_plus_1_closed(n).unwrap(),
                pc_plus_k(n, 1).unwrap(),
                "n={n}"
            );
        }
        for n in 0..=12 {
            assert_eq!(
                pc_plus_1_closed(n).unwrap(),
                brute(Family::Pc, false, Sign::Plus, 1, Modulus::Infinity, n)
            );
        }
    }

    #[test]
    fn ac_plus_k_examples() {
        for v in [V1, V2, V3] {
            assert_eq!(ac_plus_k(6, 0, v).unwrap(), c(11));
            assert_eq!(ac_plus_k(0, 0, v).unwrap(), c(1));
        }
        for n in 0..=30 {
            assert_eq!(
                ac_plus_k(n, 0, V1).unwrap(),
                tribonacci_prime(n as i64 + 1).unwrap()
            );
        }
    }

    #[test]
    fn ac_total_k_alt_examples() {
        assert_eq!(ac_total_k_alt(6, 0).unwrap(), c(17));
        assert_eq!(ac_total_k_alt(0, 0).unwrap(), c(1));
        assert_eq!(
            ac_total_k_alt(4, 1).unwrap(),
            brute(Family::Ac, false, Sign::Total, 1, Modulus::Infinity, 4)
        );
    }

    #[test]
    fn rpc_examples() {
        assert_eq!(rpc_total_k(4, 1).unwrap(), c(2));
        for n in 0..=20u32 {
            assert_eq!(rpc_total_k(n, 0).unwrap(), pow2(n as u64 / 2));
        }
        assert_eq!(
            rpc_total_k(7, 2).unwrap(),
            brute(Family::Pc, true, Sign::Total, 2, Modulus::Infinity, 7)
        );
        assert!(matches!(
            divide_by_pow2(c(6), 2),
            Err(Error::Indivisible { .. })
        ));
    }

    #[test]
    fn rac_plus_k_examples() {
        assert_eq!(rac_plus_k(5, 0).unwrap(), c(3));
        assert_eq!(rac_plus_k(0, 0).unwrap(), c(1));
        let oracle = Oracle::default();
        assert_eq!(
            rac_plus_k(6, 1).unwrap(),
            oracle.count_parts_equal_one(5, 1).unwrap()
        );
        for n in 1..=20 {
            assert_eq!(rac_plus_k(n, 0).unwrap(), fibonacci(n as i64 - 1).unwrap());
        }
    }

    #[test]
    fn pc_plus_k_mod_examples() {
        assert_eq!(pc_plus_k_mod(4, 0, 2, V1).unwrap(), c(6));
        for n in 0..=12 {
            assert_eq!(pc_plus_k_mod(n, 1, 1, V2).unwrap(), c(0));
            assert_eq!(pc_plus_k_mod(n, 2, 1, V1).unwrap(), c(0));
        }
        // 1*2*C(2,0) + 2*4*C(2,1) + 3*8*C(2,2)
        assert_eq!(pc_plus_k_mod(7, 1, 2, V1).unwrap(), c(42));
        assert_eq!(
            brute(Family::Pc, false, Sign::Plus, 1, Modulus::Finite(2), 7),
            c(42)
        );
        assert!(matches!(
            pc_plus_k_mod(7, 1, 2, V3),
            Err(Error::InvalidVariant { .. })
        ));
        assert_eq!(pc_plus_k_mod(7, 1, 0, V1), Err(Error::InvalidModulus(0)));
    }

    #[test]
    fn pc_plus_mod_k0_examples() {
        // pc(5,3) = pc_+(5,3) + pc_+(4,3) = 2 F_4 = 6
        assert_eq!(
            pc_plus_mod_k0(5, 3).unwrap() + pc_plus_mod_k0(4, 3).unwrap(),
            c(6)
        );
        for n in 0..=6u32 {
            for m in (2 * n + 2)..(2 * n + 5) {
                assert_eq!(pc_plus_mod_k0(2 * n, m).unwrap(), pow2(n as u64));
            }
        }
        for m in 1..=6 {
            assert_eq!(pc_plus_mod_k0(0, m).unwrap(), c(1));
        }
    }

    #[test]
    fn rpc_plus_k_mod_examples() {
        assert_eq!(rpc_plus_k_mod(4, 0, 2, V1).unwrap(), c(5));
        for n in 0..=12 {
            assert_eq!(rpc_plus_k_mod(n, 1, 1, V1).unwrap(), c(0));
            assert_eq!(rpc_plus_k_mod(n, 3, 1, V2).unwrap(), c(0));
        }
        // Σ_{0≤i≤3} i C(3+i, 2i) = 6 + 10 + 3
        assert_eq!(rpc_plus_k_mod(7, 1, 2, V1).unwrap(), c(19));
        assert_eq!(
            brute(Family::Pc, true, Sign::Plus, 1, Modulus::Finite(2), 7),
            c(19)
        );
    }

    #[test]
    fn rpc_plus_mod_k0_examples() {
        assert_eq!(rpc_plus_mod_k0(4, 2).unwrap(), c(5));
        for m in 1..=5 {
            assert_eq!(rpc_plus_mod_k0(0, m).unwrap(), c(1));
        }
        assert_eq!(
            rpc_plus_mod_k0(6, 1).unwrap(),
            brute(Family::Pc, true, Sign::Plus, 0, Modulus::Finite(1), 6)
        );
    }

    #[test]
    fn ac_plus_k_mod_examples() {
        assert_eq!(ac_plus_k_mod(5, 1, 1, V1).unwrap(), c(6));
        for n in 0..=12u32 {
            let parity = if n % 2 == 0 { 1 } else { 0 };
            assert_eq!(ac_plus_k_mod(n, 0, 1, V2).unwrap(), c(parity));
        }
        assert_eq!(
            ac_plus_k_mod(8, 2, 2, V1).unwrap(),
            brute(Family::Ac, false, Sign::Plus, 2, Modulus::Finite(2), 8)
        );
    }

    #[test]
    fn ac_total_k_mod_examples() {
        assert_eq!(ac_total_k_mod(5, 1, 2).unwrap(), c(8));
        assert_eq!(ac_total_k_mod(5, 0, 3).unwrap(), c(7));
        assert_eq!(ac_total_k_mod(6, 2, 1).unwrap(), c(15));
    }

    #[test]
    fn rac_plus_k_mod_examples() {
        assert_eq!(rac_plus_k_mod(6, 1, 1, V1).unwrap(), c(6));
        for n in 0..=8u32 {
            assert_eq!(rac_plus_k_mod(2 * n, 0, 1, V2).unwrap(), c(1));
            assert_eq!(rac_plus_k_mod(2 * n + 1, 0, 1, V1).unwrap(), c(0));
        }
        assert_eq!(
            rac_plus_k_mod(7, 2, 2, V1).unwrap(),
            brute(Family::Ac, true, Sign::Plus, 2, Modulus::Finite(2), 7)
        );
    }

    #[test]
    fn rac_total_k_mod_examples() {
        assert_eq!(rac_total_k_mod(5, 1, 1).unwrap(), c(6));
        for n in 0..=12 {
            assert_eq!(rac_total_k_mod(n, 0, 1).unwrap(), c(1));
        }
        assert_eq!(
            rac_total_k_mod(6, 1, 3).unwrap(),
            brute(Family::Ac, true, Sign::Total, 1, Modulus::Finite(3), 6)
        );
    }

    #[test]
    fn total_from_plus_examples() {
        assert_eq!(total_from_plus(|x| pc_plus_k(x, 1), 4).unwrap(), c(4));
        assert_eq!(total_from_plus(|x| ac_plus_k(x, 0, V1), 6).unwrap(), c(17));
        assert_eq!(total_from_plus(|_| Ok(c(7)), 0).unwrap(), c(7));
    }

    #[test]
    fn dispatch_signs() {
        let spec = CountSpec::new(Family::Pc, false, Sign::Plus, Modulus::Infinity, 1);
        assert_eq!(formula_count(&spec, 4, None).unwrap(), c(2));
        assert_eq!(
            formula_count(&spec.with_sign(Sign::Minus), 4, None).unwrap(),
            c(2)
        );
        assert_eq!(
            formula_count(&spec.with_sign(Sign::Total), 4, None).unwrap(),
            c(4)
        );
        assert_eq!(
            formula_count(&spec.with_sign(Sign::Minus), 0, None).unwrap(),
            c(0)
        );
        assert!(formula_count(&spec, 4, Some(V2)).is_err());
        let ac = CountSpec::new(Family::Ac, false, Sign::Total, Modulus::Infinity, 0);
        for v in [None, Some(V1), Some(V2), Some(V3)] {
            assert_eq!(formula_count(&ac, 6, v).unwrap(), c(17));
        }
    }
}
