//! Enumeration of the nonnegative index sets the closed formulas sum over.
//!
//! Every index with a positive weight in the linear constraint is bounded by
//! nonnegativity alone. An index whose weight vanishes (the `(m-1)r` terms at
//! `m = 1`) needs an explicit bound, which is taken from the support of the
//! binomial it appears in.

use num_bigint::BigInt;
use num_traits::Zero;

/// Upper bound for an index whose weight is zero.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Cap {
    /// Weight is always positive; no bound needed.
    Unbounded,
    /// At most this constant.
    Const(i64),
    /// At most the value of an earlier index.
    Index(usize),
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Var {
    pub weight: i64,
    pub cap: Cap,
}

impl Var {
    pub fn new(weight: i64) -> Self {
        Self {
            weight,
            cap: Cap::Unbounded,
        }
    }

    /// An index that may carry weight zero; `cap` is used only in that case.
    pub fn capped(weight: i64, cap: Cap) -> Self {
        Self { weight, cap }
    }
}

/// Sums `term` over all nonnegative `x` with `Σ vars[i].weight * x[i] == target`.
pub(crate) fn sum_over<F>(target: i64, vars: &[Var], mut term: F) -> BigInt
where
    F: FnMut(&[i64]) -> BigInt,
{
    let mut acc = BigInt::zero();
    if target < 0 {
        return acc;
    }
    let mut xs = vec![0i64; vars.len()];
    recurse(target, vars, 0, &mut xs, &mut |x| acc += term(x));
    acc
}

fn recurse(remaining: i64, vars: &[Var], at: usize, xs: &mut [i64], f: &mut dyn FnMut(&[i64])) {
    if at == vars.len() {
        if remaining == 0 {
            f(xs);
        }
        return;
    }
    let var = vars[at];
    // With only the last positive-weight index left the value is forced.
    if var.weight > 0 {
        let last_positive = vars[at + 1..].iter().all(|v| v.weight == 0);
        if last_positive {
            if remaining % var.weight == 0 {
                xs[at] = remaining / var.weight;
                recurse(0, vars, at + 1, xs, f);
            }
            return;
        }
        for x in 0..=remaining / var.weight {
            xs[at] = x;
            recurse(remaining - x * var.weight, vars, at + 1, xs, f);
        }
    } else {
        let cap = match var.cap {
            Cap::Const(c) => c,
            Cap::Index(i) => xs[i],
            Cap::Unbounded => panic!("zero-weight summation index without a bound"),
        };
        for x in 0..=cap {
            xs[at] = x;
            recurse(remaining, vars, at + 1, xs, f);
        }
    }
}

/// Calls `f(parts, weighted)` for every weak composition `parts` of `total`
/// into `len` parts whose weighted sum `Σ h * parts[h]` is at most `budget`.
pub(crate) fn for_each_weak_composition<F>(len: usize, total: i64, budget: i64, mut f: F)
where
    F: FnMut(&[u64], i64),
{
    if total < 0 || budget < 0 {
        return;
    }
    if len == 0 {
        if total == 0 {
            f(&[], 0);
        }
        return;
    }
    let mut parts = vec![0u64; len];
    weak_recurse(&mut parts, 1, total, budget, 0, &mut f);
}

// Chooses parts[h] for h >= 1 (weight h); parts[0] takes what is left.
fn weak_recurse<F>(parts: &mut [u64], h: usize, left: i64, budget: i64, weighted: i64, f: &mut F)
where
    F: FnMut(&[u64], i64),
{
    if h == parts.len() {
        parts[0] = left as u64;
        f(parts, weighted);
        return;
    }
    let w = h as i64;
    let mut x = 0i64;
    while x <= left && weighted + x * w <= budget {
        parts[h] = x as u64;
        weak_recurse(parts, h + 1, left - x, budget, weighted + x * w, f);
        x += 1;
    }
    parts[h] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn count(target: i64, vars: &[Var]) -> BigInt {
        sum_over(target, vars, |_| BigInt::one())
    }

    #[test]
    fn counts_solutions() {
        // i + 2j = 6: j in 0..=3
        assert_eq!(count(6, &[Var::new(1), Var::new(2)]), BigInt::from(4));
        // 2i + 3j = 1: none
        assert_eq!(count(1, &[Var::new(2), Var::new(3)]), BigInt::from(0));
        assert_eq!(count(-1, &[Var::new(1)]), BigInt::from(0));
        assert_eq!(count(0, &[]), BigInt::from(1));
        assert_eq!(count(3, &[]), BigInt::from(0));
    }

    #[test]
    fn zero_weight_uses_cap() {
        // j + 0*r = 3 with r <= j: 4 choices of r
        let vars = [Var::new(1), Var::capped(0, Cap::Index(0))];
        assert_eq!(count(3, &vars), BigInt::from(4));
        let vars = [Var::new(2), Var::capped(0, Cap::Const(2))];
        assert_eq!(count(4, &vars), BigInt::from(3));
        // positive weight ignores the cap
        let vars = [Var::new(1), Var::capped(1, Cap::Const(0))];
        assert_eq!(count(3, &vars), BigInt::from(4));
    }

    #[test]
    fn matches_brute_force_solution_count() {
        let weights = [2i64, 3, 1, 4];
        for target in 0..25i64 {
            let mut brute = 0i64;
            for a in 0..=target {
                for b in 0..=target {
                    for c in 0..=target {
                        for d in 0..=target {
                            if 2 * a + 3 * b + c + 4 * d == target {
                                brute += 1;
                            }
                        }
                    }
                }
            }
            let vars: Vec<_> = weights.iter().map(|&w| Var::new(w)).collect();
            assert_eq!(count(target, &vars), BigInt::from(brute));
        }
    }

    #[test]
    fn weak_compositions() {
        let mut seen = Vec::new();
        for_each_weak_composition(3, 2, 10, |p, w| seen.push((p.to_vec(), w)));
        // all 6 weak compositions of 2 into 3 parts
        assert_eq!(seen.len(), 6);
        for (p, w) in &seen {
            assert_eq!(p.iter().sum::<u64>(), 2);
            assert_eq!(*w, p[1] as i64 + 2 * p[2] as i64);
        }
        let mut budgeted = 0;
        for_each_weak_composition(3, 2, 1, |_, w| {
            assert!(w <= 1);
            budgeted += 1;
        });
        // (2,0,0), (1,1,0)
        assert_eq!(budgeted, 2);
        let mut empty = 0;
        for_each_weak_composition(0, 0, 5, |p, _| {
            assert!(p.is_empty());
            empty += 1;
        });
        assert_eq!(empty, 1);
        for_each_weak_composition(0, 1, 5, |_, _| panic!("no parts cannot sum to 1"));
    }
}
