//! Arbitrary-precision combinatorial primitives.
//!
//! The binomial coefficient here follows a nonstandard convention that every
//! closed formula in the crate depends on:
//!
//! ```text
//! binom(a, b) = a! / (b! (a-b)!)   if a >= b >= 1
//!             = 1                  if b == 0   (for every a, negative included)
//!             = 0                  otherwise
//! ```
//!
//! so `binom(-1, 0) == 1` while `binom(-1, 1) == 0`.

use std::sync::{Mutex, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A nonnegative count.
pub type Count = BigUint;

/// An intermediate value of an alternating sum.
pub type SignedCount = BigInt;

fn pascal() -> &'static RwLock<Vec<Vec<BigUint>>> {
    static PASCAL: OnceLock<RwLock<Vec<Vec<BigUint>>>> = OnceLock::new();
    PASCAL.get_or_init(|| RwLock::new(vec![vec![BigUint::one()]]))
}

fn pascal_entry(a: usize, b: usize) -> BigUint {
    debug_assert!(b <= a);
    {
        let rows = pascal().read().unwrap();
        if let Some(row) = rows.get(a) {
            return row[b].clone();
        }
    }
    let mut rows = pascal().write().unwrap();
    while rows.len() <= a {
        let prev = rows.last().unwrap();
        let mut row = Vec::with_capacity(prev.len() + 1);
        row.push(BigUint::one());
        for w in prev.windows(2) {
            row.push(&w[0] + &w[1]);
        }
        row.push(BigUint::one());
        rows.push(row);
    }
    rows[a][b].clone()
}

/// Binomial coefficient under the convention described in the module docs.
pub fn binom(a: i64, b: i64) -> Count {
    if b == 0 {
        return BigUint::one();
    }
    if b < 0 || a < b {
        return BigUint::zero();
    }
    // a >= b >= 1
    let b = b.min(a - b);
    pascal_entry(a as usize, b as usize)
}

/// `k! / (parts[0]! * parts[1]! * ...)` when the parts sum to `k`, else 0.
pub fn multinom(k: u64, parts: &[u64]) -> Count {
    let total: u64 = parts.iter().sum();
    if total != k {
        return BigUint::zero();
    }
    // Product of successive binomials: C(p0, p0) C(p0+p1, p1) ...
    let mut acc = BigUint::one();
    let mut running = 0i64;
    for &p in parts {
        running += p as i64;
        acc *= binom(running, p as i64);
    }
    acc
}

/// `2^e` as a count.
pub fn pow2(e: u64) -> Count {
    BigUint::one() << e
}

/// Memoized order-`N` linear recurrence with unit coefficients.
struct Recurrence<const N: usize> {
    initial: [u32; N],
    values: Mutex<Vec<BigUint>>,
}

impl<const N: usize> Recurrence<N> {
    const fn new(initial: [u32; N]) -> Self {
        Self {
            initial,
            values: Mutex::new(Vec::new()),
        }
    }

    fn get(&self, n: usize) -> BigUint {
        let mut values = self.values.lock().unwrap();
        if values.is_empty() {
            values.extend(self.initial.iter().map(|&v| BigUint::from(v)));
        }
        while values.len() <= n {
            let len = values.len();
            let next = values[len - N..].iter().sum();
            values.push(next);
        }
        values[n].clone()
    }
}

static FIBONACCI: Recurrence<2> = Recurrence::new([0, 1]);
static TRIBONACCI: Recurrence<3> = Recurrence::new([0, 1, 1]);
static TRIBONACCI_PRIME: Recurrence<3> = Recurrence::new([0, 1, 0]);

/// Fibonacci number `F_n` with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(n: i64) -> Result<Count> {
    if n < 0 {
        return Err(Error::NegativeArgument(n));
    }
    Ok(FIBONACCI.get(n as usize))
}

/// Tribonacci number `T_n` with `T_n = 0` for `n < 1` and `T_1 = T_2 = 1`.
pub fn tribonacci(n: i64) -> Count {
    if n < 1 {
        return BigUint::zero();
    }
    TRIBONACCI.get(n as usize)
}

/// Tribonacci variant `T'_n` with `T'_0 = 0`, `T'_1 = 1`, `T'_2 = 0`.
pub fn tribonacci_prime(n: i64) -> Result<Count> {
    if n < 0 {
        return Err(Error::NegativeArgument(n));
    }
    Ok(TRIBONACCI_PRIME.get(n as usize))
}

/// `sum_{j+r+s=n} binom(j,r) binom(r,s)`, which equals `T_{n+1}`.
pub fn tribonacci_identity_sum(n: u32) -> Count {
    let n = n as i64;
    let mut acc = BigUint::zero();
    for j in 0..=n {
        for r in 0..=n - j {
            let s = n - j - r;
            acc += binom(j, r) * binom(r, s);
        }
    }
    acc
}
