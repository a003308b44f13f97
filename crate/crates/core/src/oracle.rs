//! Ground truth by exhaustive enumeration of compositions.
//!
//! Nothing in here may call into `formulas` or `genfun`: this module is the
//! referee the other two computation paths are checked against.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numbers::Count;
use crate::stats::{
    is_swap_canonical, mismatch_count, sign_class, swap_canonical, Composition, CountSpec, Family,
    Modulus, Sign, SignClass,
};

/// Default largest `n` the oracle will enumerate (2^23 compositions).
pub const DEFAULT_CAP: u32 = 24;

/// Below this size a single thread walks the whole space.
const PARALLEL_THRESHOLD: u32 = 16;

/// Streams every composition of `n` once, ordered lexicographically by
/// binary encoding: `(n)` first and `(1,1,…,1)` last.
#[derive(Debug, Clone)]
pub struct Compositions {
    n: u32,
    next: u64,
    end: u64,
}

impl Compositions {
    fn new(n: u32) -> Self {
        let end = if n == 0 { 1 } else { 1u64 << (n - 1) };
        Self::range(n, 0, end)
    }

    fn range(n: u32, start: u64, end: u64) -> Self {
        Self {
            n,
            next: start,
            end,
        }
    }
}

/// Writes into `parts` the composition whose binary prefix (first `n-1`
/// entries, most significant bit first) is `x`.
fn fill_parts(n: u32, x: u64, parts: &mut Vec<u32>) {
    parts.clear();
    if n == 0 {
        return;
    }
    let mut run = 0u32;
    for i in 1..n {
        run += 1;
        if x >> (n - 1 - i) & 1 == 1 {
            parts.push(run);
            run = 0;
        }
    }
    parts.push(run + 1);
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        if self.next >= self.end {
            return None;
        }
        let mut parts = Vec::new();
        fill_parts(self.n, self.next, &mut parts);
        self.next += 1;
        Some(Composition::from_parts_unchecked(parts))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Compositions {}

/// Per-`(family, reduced, sign class, k)` counts for one `(n, modulus)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    // index: [family][reduced][class] -> counts by k
    counts: [[[Vec<u64>; 2]; 2]; 2],
}

impl Tally {
    fn bump(&mut self, family: usize, reduced: usize, class: usize, k: usize) {
        let v = &mut self.counts[family][reduced][class];
        if v.len() <= k {
            v.resize(k + 1, 0);
        }
        v[k] += 1;
    }

    fn merge(mut self, other: Tally) -> Tally {
        for f in 0..2 {
            for r in 0..2 {
                for c in 0..2 {
                    let dst = &mut self.counts[f][r][c];
                    let src = &other.counts[f][r][c];
                    if dst.len() < src.len() {
                        dst.resize(src.len(), 0);
                    }
                    for (d, s) in dst.iter_mut().zip(src) {
                        *d += s;
                    }
                }
            }
        }
        self
    }

    /// The count selected by `spec` (its modulus is the one this tally was built for).
    pub fn get(&self, spec: &CountSpec) -> Count {
        let f = match spec.family {
            Family::Pc => 0,
            Family::Ac => 1,
        };
        let r = spec.reduced as usize;
        let at = |class: usize| -> u64 {
            self.counts[f][r][class]
                .get(spec.k as usize)
                .copied()
                .unwrap_or(0)
        };
        let v = match spec.sign {
            Sign::Plus => at(0),
            Sign::Minus => at(1),
            Sign::Total => at(0) + at(1),
        };
        BigUint::from(v)
    }
}

/// Exhaustive counter with a configurable size cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    cap: u32,
}

impl Default for Oracle {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP }
    }
}

impl Oracle {
    pub fn with_cap(cap: u32) -> Self {
        Self { cap }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    fn check(&self, n: u32) -> Result<()> {
        if n > self.cap {
            return Err(Error::EnumerationCap { n, cap: self.cap });
        }
        Ok(())
    }

    pub fn enumerate_compositions(&self, n: u32) -> Result<Compositions> {
        self.check(n)?;
        Ok(Compositions::new(n))
    }

    /// Folds `visit` over every composition of `n`, splitting the space across
    /// threads for larger `n`. `merge` must be associative and commutative.
    fn fold<T, I, V, M>(&self, n: u32, init: I, visit: V, merge: M) -> Result<T>
    where
        T: Send,
        I: Fn() -> T + Sync + Send,
        V: Fn(&mut T, &Composition) + Sync + Send,
        M: Fn(T, T) -> T + Sync + Send,
    {
        self.check(n)?;
        let total = if n == 0 { 1 } else { 1u64 << (n - 1) };
        let walk = |start: u64, end: u64| {
            let mut acc = init();
            let mut c = Composition::empty();
            for x in start..end {
                fill_parts(n, x, c.parts_mut());
                visit(&mut acc, &c);
            }
            acc
        };
        if n < PARALLEL_THRESHOLD {
            return Ok(walk(0, total));
        }
        let chunk = 1u64 << (PARALLEL_THRESHOLD - 2);
        let chunks = total.div_ceil(chunk);
        Ok((0..chunks)
            .into_par_iter()
            .map(|i| walk(i * chunk, ((i + 1) * chunk).min(total)))
            .reduce(&init, &merge))
    }

    /// Counts compositions of `n` selected by `spec`. Reduced specs count the
    /// distinct swap-canonical images of the selected compositions.
    pub fn brute_count(&self, spec: &CountSpec, n: u32) -> Result<Count> {
        if spec.reduced {
            let images = self.fold(
                n,
                HashSet::new,
                |set: &mut HashSet<Composition>, c| {
                    if spec.admits(c) {
                        set.insert(swap_canonical(c));
                    }
                },
                |mut a, b| {
                    a.extend(b);
                    a
                },
            )?;
            Ok(BigUint::from(images.len()))
        } else {
            let count = self.fold(
                n,
                || 0u64,
                |acc, c| {
                    if spec.admits(c) {
                        *acc += 1;
                    }
                },
                |a, b| a + b,
            )?;
            Ok(BigUint::from(count))
        }
    }

    /// Every family, sign class and `k` for one `(n, modulus)` in a single pass.
    ///
    /// Reduced classes are counted by their canonical member: each swap class
    /// contains exactly one composition that is its own canonical form.
    pub fn tally(&self, n: u32, modulus: Modulus) -> Result<Tally> {
        self.fold(
            n,
            Tally::default,
            |t, c| {
                let class = match sign_class(c) {
                    SignClass::Plus => 0,
                    SignClass::Minus => 1,
                };
                let pairs = c.len() / 2;
                let mismatches = mismatch_count(c, modulus);
                let matches = pairs - mismatches;
                let canonical = is_swap_canonical(c);
                t.bump(0, 0, class, mismatches);
                t.bump(1, 0, class, matches);
                if canonical {
                    t.bump(0, 1, class, mismatches);
                    t.bump(1, 1, class, matches);
                }
            },
            Tally::merge,
        )
    }

    fn count_where<P>(&self, n: u32, pred: P) -> Result<Count>
    where
        P: Fn(&Composition) -> bool + Sync + Send,
    {
        let count = self.fold(
            n,
            || 0u64,
            |acc, c| {
                if pred(c) {
                    *acc += 1;
                }
            },
            |a, b| a + b,
        )?;
        Ok(BigUint::from(count))
    }

    /// Compositions of `n` with exactly `k` parts equal to 1.
    pub fn count_parts_equal_one(&self, n: u32, k: u32) -> Result<Count> {
        self.count_where(n, |c| {
            c.parts().iter().filter(|&&p| p == 1).count() == k as usize
        })
    }

    /// Compositions of `n` with no part larger than `max_part`.
    pub fn count_parts_at_most(&self, n: u32, max_part: u32) -> Result<Count> {
        self.count_where(n, |c| c.parts().iter().all(|&p| p <= max_part))
    }

    /// Compositions of `n` with at most one even part.
    pub fn count_at_most_one_even_part(&self, n: u32) -> Result<Count> {
        self.count_where(n, |c| {
            c.parts().iter().filter(|&&p| p % 2 == 0).count() <= 1
        })
    }

    /// Compositions of `n` into parts greater than 1, each part in one of two
    /// colors.
    pub fn count_two_colored_parts_above_one(&self, n: u32) -> Result<Count> {
        self.fold(
            n,
            BigUint::zero,
            |acc, c| {
                if c.parts().iter().all(|&p| p > 1) {
                    *acc += BigUint::from(1u8) << c.len();
                }
            },
            |a, b| a + b,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{pow2, tribonacci};

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    fn spec(family: Family, reduced: bool, sign: Sign, k: u32, m: Modulus) -> CountSpec {
        CountSpec::new(family, reduced, sign, m, k)
    }

    #[test]
    fn enumerate_small() {
        let o = Oracle::default();
        assert_eq!(
            o.enumerate_compositions(0).unwrap().collect::<Vec<_>>(),
            vec![Composition::empty()]
        );
        let three: Vec<_> = o.enumerate_compositions(3).unwrap().collect();
        assert_eq!(
            three,
            vec![comp("3"), comp("2,1"), comp("1,2"), comp("1,1,1")]
        );
        assert_eq!(o.enumerate_compositions(10).unwrap().count(), 512);
    }

    #[test]
    fn enumeration_is_lexicographic_in_binary() {
        let o = Oracle::default();
        let codes: Vec<Vec<bool>> = o
            .enumerate_compositions(9)
            .unwrap()
            .map(|c| crate::stats::encode_binary(&c))
            .collect();
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
        let distinct: HashSet<_> = codes.iter().collect();
        assert_eq!(distinct.len(), 256);
    }

    #[test]
    fn cap_is_enforced() {
        let o = Oracle::with_cap(10);
        assert_eq!(
            o.enumerate_compositions(11).unwrap_err(),
            Error::EnumerationCap { n: 11, cap: 10 }
        );
        let s = spec(Family::Pc, false, Sign::Total, 0, Modulus::Infinity);
        assert!(o.brute_count(&s, 11).is_err());
        assert!(o.tally(11, Modulus::Infinity).is_err());
    }

    #[test]
    fn brute_examples() {
        let o = Oracle::default();
        let inf = Modulus::Infinity;
        assert_eq!(
            o.brute_count(&spec(Family::Pc, false, Sign::Plus, 1, inf), 4)
                .unwrap(),
            c(2)
        );
        assert_eq!(
            o.brute_count(&spec(Family::Pc, false, Sign::Minus, 1, inf), 4)
                .unwrap(),
            c(2)
        );
        assert_eq!(
            o.brute_count(&spec(Family::Ac, false, Sign::Plus, 0, inf), 6)
                .unwrap(),
            c(11)
        );
        assert_eq!(
            o.brute_count(
                &spec(Family::Pc, false, Sign::Total, 0, Modulus::Finite(2)),
                4
            )
            .unwrap(),
            c(6)
        );
        assert_eq!(
            o.brute_count(&spec(Family::Ac, true, Sign::Total, 0, inf), 5)
                .unwrap(),
            c(5)
        );
    }

    #[test]
    fn parts_equal_one_examples() {
        let o = Oracle::default();
        assert_eq!(o.count_parts_equal_one(3, 1).unwrap(), c(2));
        assert_eq!(o.count_parts_equal_one(0, 0).unwrap(), c(1));
        assert_eq!(o.count_parts_equal_one(4, 4).unwrap(), c(1));
    }

    #[test]
    fn parts_at_most_examples() {
        let o = Oracle::default();
        assert_eq!(o.count_parts_at_most(4, 3).unwrap(), c(7));
        assert_eq!(o.count_parts_at_most(0, 3).unwrap(), c(1));
        for n in 1..=12 {
            assert_eq!(o.count_parts_at_most(n, n).unwrap(), pow2(n as u64 - 1));
        }
        for n in 1..=18 {
            assert_eq!(
                o.count_parts_at_most(n, 3).unwrap(),
                tribonacci(n as i64 + 1)
            );
        }
    }

    #[test]
    fn tally_agrees_with_brute_count() {
        let o = Oracle::default();
        for m in [
            Modulus::Finite(1),
            Modulus::Finite(2),
            Modulus::Finite(3),
            Modulus::Infinity,
        ] {
            for n in 0..=11 {
                let t = o.tally(n, m).unwrap();
                for family in [Family::Pc, Family::Ac] {
                    for reduced in [false, true] {
                        for sign in [Sign::Plus, Sign::Minus, Sign::Total] {
                            for k in 0..=4 {
                                let s = spec(family, reduced, sign, k, m);
                                assert_eq!(
                                    t.get(&s),
                                    o.brute_count(&s, n).unwrap(),
                                    "{} n={n}",
                                    s.name()
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parallel_path_matches_sequential_walk() {
        let o = Oracle::default();
        let n = PARALLEL_THRESHOLD + 1;
        let s = spec(Family::Ac, true, Sign::Total, 2, Modulus::Finite(3));
        let sequential: HashSet<Composition> = o
            .enumerate_compositions(n)
            .unwrap()
            .filter(|c| s.admits(c))
            .map(|c| swap_canonical(&c))
            .collect();
        assert_eq!(
            o.brute_count(&s, n).unwrap(),
            BigUint::from(sequential.len())
        );
    }

    #[test]
    fn statistics_partition_all_compositions() {
        let o = Oracle::default();
        for m in [Modulus::Finite(2), Modulus::Finite(5), Modulus::Infinity] {
            for n in 0..=12u32 {
                let t = o.tally(n, m).unwrap();
                let sum: Count = (0..=n / 2)
                    .map(|k| t.get(&spec(Family::Pc, false, Sign::Total, k, m)))
                    .sum();
                let expected = if n == 0 { c(1) } else { pow2(n as u64 - 1) };
                assert_eq!(sum, expected);
            }
        }
    }

    #[test]
    fn reflection_identity_small() {
        let o = Oracle::default();
        for m in [Modulus::Finite(3), Modulus::Infinity] {
            for n in 1..=12 {
                let plus = o.tally(n - 1, m).unwrap();
                let here = o.tally(n, m).unwrap();
                for family in [Family::Pc, Family::Ac] {
                    for reduced in [false, true] {
                        for k in 0..=3 {
                            let s = spec(family, reduced, Sign::Minus, k, m);
                            assert_eq!(here.get(&s), plus.get(&s.with_sign(Sign::Plus)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn two_colored_and_even_part_counts() {
        let o = Oracle::default();
        // n = 4: (4) -> 2, (2,2) -> 4
        assert_eq!(o.count_two_colored_parts_above_one(4).unwrap(), c(6));
        assert_eq!(o.count_two_colored_parts_above_one(1).unwrap(), c(0));
        assert_eq!(o.count_two_colored_parts_above_one(0).unwrap(), c(1));
        // n = 3: (3),(2,1),(1,2),(1,1,1) all have at most one even part
        assert_eq!(o.count_at_most_one_even_part(3).unwrap(), c(4));
        // n = 4: all but (2,2)
        assert_eq!(o.count_at_most_one_even_part(4).unwrap(), c(7));
    }
}
