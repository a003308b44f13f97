//! A bijection between compositions without an odd middle part and pairs of
//! nonnegative integer sequences `(b′, b″)`.
//!
//! Each mirrored pair `(α_h, α_{ℓ+1-h})` is split into its minimum, which
//! goes into a palindromic core `γ`, and the difference `β_h`. The left half
//! of `γ` is written as a 0/1 sequence `b` marking partial sums (an even
//! middle part `2c` becomes `c` trailing zeros), and `β_h` is added to `b′`
//! or `b″` at the position of the `h`-th partial sum, depending on which
//! side of the pair was larger.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::stats::{sign_class, Composition, SignClass};

/// Result of splitting a composition into difference and core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// 1-based indices `h ≤ ⌊ℓ/2⌋` of the unequal mirrored pairs.
    pub s: Vec<usize>,
    /// `|α_h - α_{ℓ+1-h}|` for each `h` in `s`.
    pub beta: Vec<u32>,
    /// The palindromic core.
    pub gamma: Composition,
}

/// The image `(b′, b″)` of a composition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairSequences {
    pub b_prime: Vec<u32>,
    pub b_double_prime: Vec<u32>,
}

impl PairSequences {
    pub fn new(b_prime: Vec<u32>, b_double_prime: Vec<u32>) -> Self {
        Self {
            b_prime,
            b_double_prime,
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[u32]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for PairSequences {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.b_prime)?;
        f.write_str(";")?;
        write_list(f, &self.b_double_prime)
    }
}

impl FromStr for PairSequences {
    type Err = Error;

    /// Two comma-separated lists joined by `;`, e.g. `0,1,1,3,0,0;0,4,1,1,0,0`.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s.trim().split_once(';').ok_or_else(|| Error::Parse {
            what: "pair sequences",
            detail: format!("{s:?} has no ';' separator"),
        })?;
        let list = |part: &str| -> Result<Vec<u32>> {
            let part = part.trim();
            if part.is_empty() {
                return Ok(Vec::new());
            }
            part.split(',')
                .map(|x| {
                    x.trim().parse::<u32>().map_err(|e| Error::Parse {
                        what: "pair sequences",
                        detail: format!("{x:?}: {e}"),
                    })
                })
                .collect()
        };
        Ok(Self::new(list(a)?, list(b)?))
    }
}

fn require_plus(c: &Composition) -> Result<()> {
    match sign_class(c) {
        SignClass::Plus => Ok(()),
        SignClass::Minus => Err(Error::OddMiddlePart {
            middle: c.middle().expect("minus class has a middle part"),
        }),
    }
}

/// Splits `c` into the unequal pair indices, their differences, and the
/// palindromic core.
pub fn decompose(c: &Composition) -> Result<Decomposition> {
    require_plus(c)?;
    let parts = c.parts();
    let l = parts.len();
    let mut gamma = parts.to_vec();
    let mut s = Vec::new();
    let mut beta = Vec::new();
    for h in 0..l / 2 {
        let (a, b) = (parts[h], parts[l - 1 - h]);
        if a != b {
            s.push(h + 1);
            beta.push(a.abs_diff(b));
        }
        gamma[h] = a.min(b);
        gamma[l - 1 - h] = a.min(b);
    }
    Ok(Decomposition {
        s,
        beta,
        gamma: Composition::from_parts_unchecked(gamma),
    })
}

/// Maps a composition without an odd middle part to its pair sequences.
pub fn encode_pair(c: &Composition) -> Result<PairSequences> {
    require_plus(c)?;
    let parts = c.parts();
    let l = parts.len();
    let half: u32 = (0..l / 2).map(|h| parts[h].min(parts[l - 1 - h])).sum();
    let len = (half + c.middle().unwrap_or(0) / 2) as usize;
    let mut b_prime = vec![0u32; len];
    let mut b_double_prime = vec![0u32; len];
    let mut position = 0usize;
    for h in 0..l / 2 {
        let (a, b) = (parts[h], parts[l - 1 - h]);
        position += a.min(b) as usize;
        let at = position - 1;
        b_prime[at] = 1;
        b_double_prime[at] = 1;
        if a > b {
            b_prime[at] += a - b;
        } else {
            b_double_prime[at] += b - a;
        }
    }
    Ok(PairSequences::new(b_prime, b_double_prime))
}

// Each positive entry plus the zeros immediately before it.
fn segments(xs: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    let mut zeros = 0u32;
    for &x in xs {
        if x == 0 {
            zeros += 1;
        } else {
            out.push(zeros + x);
            zeros = 0;
        }
    }
    out
}

fn invalid(detail: impl Into<String>) -> Error {
    Error::InvalidPair(detail.into())
}

fn validate(p: &PairSequences) -> Result<()> {
    let (x, y) = (&p.b_prime, &p.b_double_prime);
    if x.len() != y.len() {
        return Err(invalid(format!(
            "lengths differ ({} and {})",
            x.len(),
            y.len()
        )));
    }
    for (i, (&a, &b)) in x.iter().zip(y).enumerate() {
        if (a == 0) != (b == 0) {
            return Err(invalid(format!(
                "position {} is positive in only one sequence",
                i + 1
            )));
        }
        if a > 0 && a.min(b) != 1 {
            return Err(invalid(format!(
                "position {} has entries {a} and {b}; one of them must be 1",
                i + 1
            )));
        }
    }
    Ok(())
}

/// Recovers the composition from its pair sequences.
pub fn decode_pair(p: &PairSequences) -> Result<Composition> {
    validate(p)?;
    if p.b_prime.is_empty() {
        return Ok(Composition::empty());
    }
    let left = segments(&p.b_prime);
    let right = segments(&p.b_double_prime);
    let trailing = p.b_prime.iter().rev().take_while(|&&x| x == 0).count() as u32;
    let mut parts = left;
    if trailing > 0 {
        parts.push(2 * trailing);
    }
    parts.extend(right.into_iter().rev());
    Ok(Composition::from_parts_unchecked(parts))
}

/// Index parameters read off a pair, for the mismatch statistic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MismatchParams {
    /// Number of unequal mirrored pairs.
    pub k: usize,
    /// `|β| - k`.
    pub i: usize,
    /// `|γ|/2 - k`.
    pub j: usize,
}

/// Index parameters read off a pair, for the match statistic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchParams {
    /// Number of equal mirrored pairs.
    pub k: usize,
    /// Unequal pairs whose left part is larger.
    pub i: usize,
    /// `|β| - i`.
    pub j: usize,
    /// `|γ|/2 - k`.
    pub r: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairStatistics {
    pub mismatch: MismatchParams,
    pub matched: MatchParams,
}

/// Reads the statistics of the preimage directly from `p`.
pub fn pair_statistics(p: &PairSequences) -> Result<PairStatistics> {
    let c = decode_pair(p)?;
    let len = p.b_prime.len();
    let mut unequal = 0usize;
    let mut left_larger = 0usize;
    let mut beta = 0usize;
    for (&a, &b) in p.b_prime.iter().zip(&p.b_double_prime) {
        if a != b {
            unequal += 1;
            beta += a.abs_diff(b) as usize;
            if a > b {
                left_larger += 1;
            }
        }
    }
    let equal = c.len() / 2 - unequal;
    Ok(PairStatistics {
        mismatch: MismatchParams {
            k: unequal,
            i: beta - unequal,
            j: len - unequal,
        },
        matched: MatchParams {
            k: equal,
            i: left_larger,
            j: beta - left_larger,
            r: len - equal,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Oracle;
    use crate::stats::{mismatch_count, Modulus};

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn pair(s: &str) -> PairSequences {
        s.parse().unwrap()
    }

    const FIRST: &str = "2,1,4,1,1,2,4,1,1,1,2,3,2";
    const FIRST_PAIR: &str = "0,1,1,0,3,1,1,2,0,0;0,1,3,0,1,1,1,1,0,0";
    const SECOND: &str = "2,1,3,4,1,1,5";
    const SECOND_PAIR: &str = "0,1,1,3,0,0;0,4,1,1,0,0";

    #[test]
    fn decompose_examples() {
        let d = decompose(&comp(FIRST)).unwrap();
        assert_eq!(d.s, vec![2, 3, 6]);
        assert_eq!(d.beta, vec![2, 2, 1]);
        assert_eq!(d.gamma, comp("2,1,2,1,1,1,4,1,1,1,2,1,2"));
        assert_eq!(d.gamma.n() + d.beta.iter().sum::<u32>(), 25);
        let d = decompose(&comp(SECOND)).unwrap();
        assert_eq!(d.s, vec![1, 3]);
        assert_eq!(d.beta, vec![3, 2]);
        assert_eq!(d.gamma, comp("2,1,1,4,1,1,2"));
        let d = decompose(&comp("3,1,2,1,3")).unwrap();
        assert!(d.s.is_empty() && d.beta.is_empty());
        assert_eq!(d.gamma, comp("3,1,2,1,3"));
        assert!(decompose(&comp("1,3,1")).is_err());
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode_pair(&comp(FIRST)).unwrap(), pair(FIRST_PAIR));
        assert_eq!(encode_pair(&comp(SECOND)).unwrap(), pair(SECOND_PAIR));
        assert_eq!(encode_pair(&comp("2")).unwrap(), pair("0;0"));
        assert_eq!(encode_pair(&Composition::empty()).unwrap(), pair(";"));
        assert_eq!(
            encode_pair(&comp("1,1,1")),
            Err(Error::OddMiddlePart { middle: 1 })
        );
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode_pair(&pair(FIRST_PAIR)).unwrap(), comp(FIRST));
        assert_eq!(decode_pair(&pair(SECOND_PAIR)).unwrap(), comp(SECOND));
        assert_eq!(decode_pair(&pair("0;0")).unwrap(), comp("2"));
        assert_eq!(decode_pair(&pair("5;1")).unwrap(), comp("5,1"));
        assert_eq!(decode_pair(&pair(";")).unwrap(), Composition::empty());
    }

    #[test]
    fn decode_rejects_malformed() {
        for bad in ["1,0;1", "1,0;0,1", "2;2", "0,3;0,0", "2,1;3,1"] {
            assert!(
                matches!(decode_pair(&pair(bad)), Err(Error::InvalidPair(_))),
                "{bad}"
            );
        }
        assert!("1,2".parse::<PairSequences>().is_err());
        assert!("1,x;1,2".parse::<PairSequences>().is_err());
    }

    #[test]
    fn text_format_round_trip() {
        for s in [FIRST_PAIR, SECOND_PAIR, ";", "0;0"] {
            assert_eq!(pair(s).to_string(), s);
        }
    }

    #[test]
    fn statistics_examples() {
        let st = pair_statistics(&pair(FIRST_PAIR)).unwrap();
        assert_eq!((st.mismatch.k, st.mismatch.i, st.mismatch.j), (3, 2, 7));
        assert_eq!(st.mismatch.i + 2 * st.mismatch.j + 3 * st.mismatch.k, 25);
        let st = pair_statistics(&pair(SECOND_PAIR)).unwrap();
        assert_eq!(
            st.matched,
            MatchParams {
                k: 1,
                i: 1,
                j: 4,
                r: 5
            }
        );
        assert_eq!(
            2 * st.matched.r + 2 * st.matched.k + st.matched.i + st.matched.j,
            17
        );
        let st = pair_statistics(&encode_pair(&comp("1,3,3,1")).unwrap()).unwrap();
        assert_eq!(st.mismatch.k, 0);
    }

    #[test]
    fn exhaustive_round_trip_small() {
        let oracle = Oracle::default();
        for n in 0..=10 {
            for c in oracle.enumerate_compositions(n).unwrap() {
                if sign_class(&c) == SignClass::Minus {
                    continue;
                }
                let p = encode_pair(&c).unwrap();
                assert_eq!(decode_pair(&p).unwrap(), c);
                let st = pair_statistics(&p).unwrap();
                assert_eq!(st.mismatch.k, mismatch_count(&c, Modulus::Infinity));
                assert_eq!(
                    st.mismatch.i + 2 * st.mismatch.j + 3 * st.mismatch.k,
                    n as usize
                );
                let m = st.matched;
                assert_eq!(2 * m.r + 2 * m.k + m.i + m.j, n as usize);
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn sequence() -> impl Strategy<Value = Vec<u32>> {
            proptest::collection::vec(
                prop_oneof![3 => Just(0u32), 2 => Just(1u32), 1 => 2u32..5],
                0..8,
            )
        }

        proptest! {
            #[test]
            fn encode_inverts_decode_on_valid_pairs(a in sequence(), b in sequence()) {
                let p = PairSequences::new(a, b);
                if let Ok(c) = decode_pair(&p) {
                    prop_assert_eq!(encode_pair(&c).unwrap(), p);
                }
            }
        }
    }
}
