//! Closed forms for particular parameter choices, each with its own range
//! of valid `n`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numbers::{binom, fibonacci, pow2, tribonacci, tribonacci_prime, Count};
use crate::stats::{CountSpec, Family, Modulus, Sign};

/// A named closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialValue {
    /// `pc(n) = 2^⌊n/2⌋`
    PcPow2,
    /// `pc(n,1) = 2^{n-1}`
    PcMod1,
    /// `pc(2j,2) = pc(2j+1,2) = 2·3^{j-1}`
    PcMod2,
    /// `pc(n,3) = 2F_{n-1}`
    PcMod3,
    /// `pc_+(n,3) = 2(F_{n-2} + (-1)^{n-2})`
    PcPlusMod3,
    /// `pc(n,m) = 2^⌊n/2⌋` while `2⌊n/2⌋+1 < m`
    PcBelowModulus { m: u32 },
    /// `pc_+^1(n) = 2 + (⌈n/2⌉-2) 2^{⌈n/2⌉}`
    PcPlus1,
    /// `pc_+^1(2j+1,2) = Σ_i (i+1) 2^{i+1} C(j-1,i)`
    PcPlus1Mod2Odd,
    /// `ac(n) = T_n + T_{n-2}`
    AcTrib,
    /// `ac(n) = T'_{n+1} + T'_n`
    AcTribPrime,
    /// `ac(n) = T_{n+1} - T_{n-1}`
    AcTribDiff,
    /// `ac_+(n) = T'_{n+1}`
    AcPlusTribPrime,
    /// `ac^k(n,1) = C(n,2k)`
    AcMod1 { k: u32 },
    /// `ac_+(n,1) = (1+(-1)^n)/2`
    AcPlusMod1,
    /// `ac_+^1(n,1) = ⌊n²/4⌋`
    AcPlus1Mod1,
    /// `rpc_+(2j,2) = F_{2j+1}`, zero at odd arguments
    RpcPlusMod2,
    /// `rpc(2j,2) = rpc(2j+1,2) = F_{2j+1}`
    RpcMod2,
    /// `rpc_+^1(2j+1,2) = Σ_{0≤i≤j} i C(j+i,2i)`
    RpcPlus1Mod2Odd,
    /// `rac(n) = F_n`, `rac(0) = 1`
    RacFib,
    /// `rac_+(n) = F_{n-1}`, `rac_+(0) = 1`
    RacPlusFib,
    /// `rac(n,1) = 1`
    RacMod1,
    /// `rac_+(n,1) = 1` for even `n`, 0 for odd
    RacPlusMod1,
    /// `rac^1(n,1) = ⌊n/2⌋⌈n/2⌉`
    Rac1Mod1,
    /// `rac_+^1(2j,1) = rac_+^1(2j+1,1) = j(j+1)/2`
    RacPlus1Mod1,
}

/// The `n` for which a closed form is valid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Domain {
    pub min: u32,
    pub max: Option<u32>,
    /// Required parity of `n`, if any.
    pub parity: Option<u32>,
    pub text: &'static str,
}

impl Domain {
    const fn from(min: u32, text: &'static str) -> Self {
        Self {
            min,
            max: None,
            parity: None,
            text,
        }
    }

    const fn odd_from(min: u32, text: &'static str) -> Self {
        Self {
            min,
            max: None,
            parity: Some(1),
            text,
        }
    }

    pub fn contains(&self, n: u32) -> bool {
        n >= self.min
            && self.max.is_none_or(|max| n <= max)
            && self.parity.is_none_or(|p| n % 2 == p)
    }
}

impl SpecialValue {
    /// Every closed form, with the parameterized ones instantiated for
    /// `k ≤ k_max` and `m ≤ m_max`.
    pub fn all(k_max: u32, m_max: u32) -> Vec<SpecialValue> {
        use SpecialValue::*;
        let mut out = vec![
            PcPow2,
            PcMod1,
            PcMod2,
            PcMod3,
            PcPlusMod3,
            PcPlus1,
            PcPlus1Mod2Odd,
            AcTrib,
            AcTribPrime,
            AcTribDiff,
            AcPlusTribPrime,
            AcPlusMod1,
            AcPlus1Mod1,
            RpcPlusMod2,
            RpcMod2,
            RpcPlus1Mod2Odd,
            RacFib,
            RacPlusFib,
            RacMod1,
            RacPlusMod1,
            Rac1Mod1,
            RacPlus1Mod1,
        ];
        out.extend((2..=m_max).map(|m| PcBelowModulus { m }));
        out.extend((0..=k_max).map(|k| AcMod1 { k }));
        out
    }

    pub fn id(self) -> &'static str {
        use SpecialValue::*;
        match self {
            PcPow2 => "pc_pow2",
            PcMod1 => "pc_mod1",
            PcMod2 => "pc_mod2",
            PcMod3 => "pc_mod3",
            PcPlusMod3 => "pc_plus_mod3",
            PcBelowModulus { .. } => "pc_below_modulus",
            PcPlus1 => "pc_plus1",
            PcPlus1Mod2Odd => "pc_plus1_mod2_odd",
            AcTrib => "ac_trib",
            AcTribPrime => "ac_trib_prime",
            AcTribDiff => "ac_trib_diff",
            AcPlusTribPrime => "ac_plus_trib_prime",
            AcMod1 { .. } => "ac_mod1",
            AcPlusMod1 => "ac_plus_mod1",
            AcPlus1Mod1 => "ac_plus1_mod1",
            RpcPlusMod2 => "rpc_plus_mod2",
            RpcMod2 => "rpc_mod2",
            RpcPlus1Mod2Odd => "rpc_plus1_mod2_odd",
            RacFib => "rac_fib",
            RacPlusFib => "rac_plus_fib",
            RacMod1 => "rac_mod1",
            RacPlusMod1 => "rac_plus_mod1",
            Rac1Mod1 => "rac1_mod1",
            RacPlus1Mod1 => "rac_plus1_mod1",
        }
    }

    pub fn domain(self) -> Domain {
        use SpecialValue::*;
        match self {
            PcMod1 | AcTrib => Domain::from(1, "n >= 1"),
            PcMod2 | PcMod3 | PcPlusMod3 => Domain::from(2, "n >= 2"),
            PcPlus1Mod2Odd => Domain::odd_from(3, "odd n >= 3"),
            RpcPlus1Mod2Odd => Domain::odd_from(1, "odd n >= 1"),
            PcBelowModulus { m } => Domain {
                // m <= 1 leaves no valid n: min 1 > max 0
                min: if m <= 1 { 1 } else { 0 },
                max: Some(below_modulus_max(m)),
                parity: None,
                text: "2*floor(n/2) + 1 < m",
            },
            _ => Domain::from(0, "n >= 0"),
        }
    }

    /// The count this closed form evaluates.
    pub fn spec(self) -> CountSpec {
        use SpecialValue::*;
        let (family, reduced, sign, modulus, k) = match self {
            PcPow2 => (Family::Pc, false, Sign::Total, Modulus::Infinity, 0),
            PcMod1 => (Family::Pc, false, Sign::Total, Modulus::Finite(1), 0),
            PcMod2 => (Family::Pc, false, Sign::Total, Modulus::Finite(2), 0),
            PcMod3 => (Family::Pc, false, Sign::Total, Modulus::Finite(3), 0),
            PcPlusMod3 => (Family::Pc, false, Sign::Plus, Modulus::Finite(3), 0),
            PcBelowModulus { m } => (Family::Pc, false, Sign::Total, Modulus::Finite(m), 0),
            PcPlus1 => (Family::Pc, false, Sign::Plus, Modulus::Infinity, 1),
            PcPlus1Mod2Odd => (Family::Pc, false, Sign::Plus, Modulus::Finite(2), 1),
            AcTrib | AcTribPrime | AcTribDiff => {
                (Family::Ac, false, Sign::Total, Modulus::Infinity, 0)
            }
            AcPlusTribPrime => (Family::Ac, false, Sign::Plus, Modulus::Infinity, 0),
            AcMod1 { k } => (Family::Ac, false, Sign::Total, Modulus::Finite(1), k),
            AcPlusMod1 => (Family::Ac, false, Sign::Plus, Modulus::Finite(1), 0),
            AcPlus1Mod1 => (Family::Ac, false, Sign::Plus, Modulus::Finite(1), 1),
            RpcPlusMod2 => (Family::Pc, true, Sign::Plus, Modulus::Finite(2), 0),
            RpcMod2 => (Family::Pc, true, Sign::Total, Modulus::Finite(2), 0),
            RpcPlus1Mod2Odd => (Family::Pc, true, Sign::Plus, Modulus::Finite(2), 1),
            RacFib => (Family::Ac, true, Sign::Total, Modulus::Infinity, 0),
            RacPlusFib => (Family::Ac, true, Sign::Plus, Modulus::Infinity, 0),
            RacMod1 => (Family::Ac, true, Sign::Total, Modulus::Finite(1), 0),
            RacPlusMod1 => (Family::Ac, true, Sign::Plus, Modulus::Finite(1), 0),
            Rac1Mod1 => (Family::Ac, true, Sign::Total, Modulus::Finite(1), 1),
            RacPlus1Mod1 => (Family::Ac, true, Sign::Plus, Modulus::Finite(1), 1),
        };
        CountSpec::new(family, reduced, sign, modulus, k)
    }

    /// Evaluates the closed form at `n`.
    pub fn eval(self, n: u32) -> Result<Count> {
        use SpecialValue::*;
        let domain = self.domain();
        if !domain.contains(n) {
            return Err(Error::OutOfDomain {
                id: self.id(),
                domain: domain.text,
                n,
            });
        }
        let ni = n as i64;
        let fib = |i: i64| fibonacci(i).expect("index checked by domain");
        let half = (n / 2) as u64;
        let value = match self {
            PcPow2 | PcBelowModulus { .. } => pow2(half),
            PcMod1 => pow2(n as u64 - 1),
            PcMod2 => Count::from(2u32) * Count::from(3u32).pow(half as u32 - 1),
            PcMod3 => fib(ni - 1) * 2u32,
            PcPlusMod3 => {
                let f = fib(ni - 2);
                if n.is_multiple_of(2) {
                    (f + 1u32) * 2u32
                } else {
                    (f - 1u32) * 2u32
                }
            }
            PcPlus1 => {
                let c = n.div_ceil(2) as u64;
                if c >= 2 {
                    pow2(c) * (c - 2) + 2u32
                } else {
                    // c ∈ {0, 1}: 2 - (2-c) 2^c
                    Count::from(2u32) - pow2(c) * (2 - c)
                }
            }
            PcPlus1Mod2Odd => {
                let j = (n - 1) / 2;
                (0..j as i64).fold(Count::zero(), |acc, i| {
                    acc + pow2(i as u64 + 1) * (i as u64 + 1) * binom(j as i64 - 1, i)
                })
            }
            AcTrib => tribonacci(ni) + tribonacci(ni - 2),
            AcTribPrime => {
                tribonacci_prime(ni + 1).expect("nonnegative")
                    + tribonacci_prime(ni).expect("nonnegative")
            }
            AcTribDiff => tribonacci(ni + 1) - tribonacci(ni - 1),
            AcPlusTribPrime => tribonacci_prime(ni + 1).expect("nonnegative"),
            AcMod1 { k } => binom(ni, 2 * k as i64),
            AcPlusMod1 | RacPlusMod1 => parity_indicator(n),
            AcPlus1Mod1 => Count::from(n as u64 * n as u64 / 4),
            RpcPlusMod2 => match n % 2 {
                0 => fib(ni + 1),
                _ => Count::zero(),
            },
            RpcMod2 => fib(2 * half as i64 + 1),
            RpcPlus1Mod2Odd => {
                let j = ((n - 1) / 2) as i64;
                (0..=j).fold(Count::zero(), |acc, i| acc + binom(j + i, 2 * i) * i as u64)
            }
            RacFib => match n {
                0 => Count::one(),
                _ => fib(ni),
            },
            RacPlusFib => match n {
                0 => Count::one(),
                _ => fib(ni - 1),
            },
            RacMod1 => Count::one(),
            Rac1Mod1 => Count::from(half * n.div_ceil(2) as u64),
            RacPlus1Mod1 => Count::from(half * (half + 1) / 2),
        };
        Ok(value)
    }
}

fn parity_indicator(n: u32) -> Count {
    if n.is_multiple_of(2) {
        Count::one()
    } else {
        Count::zero()
    }
}

// Largest n with 2⌊n/2⌋ + 1 < m, for m >= 2.
fn below_modulus_max(m: u32) -> u32 {
    match m {
        0 | 1 => 0,
        _ if m.is_multiple_of(2) => m - 1,
        _ => m - 2,
    }
}
