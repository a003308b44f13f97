//! Compositions, their binary encoding, and the palindromicity statistics.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of positive integers. The empty sequence is the unique
/// composition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    /// Builds a composition, rejecting zero parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse {
                what: "composition",
                detail: "parts must be positive".into(),
            });
        }
        Ok(Self(parts))
    }

    /// Caller guarantees every part is positive.
    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(!parts.contains(&0));
        Self(parts)
    }

    pub(crate) fn parts_mut(&mut self) -> &mut Vec<u32> {
        &mut self.0
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// Sum of the parts.
    pub fn n(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The middle part, when the length is odd.
    pub fn middle(&self) -> Option<u32> {
        let l = self.0.len();
        (l % 2 == 1).then(|| self.0[l / 2])
    }

    /// Mirrored pairs `(α_h, α_{ℓ+1-h})` for `h = 1..=⌊ℓ/2⌋`.
    pub fn mirror_pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let l = self.0.len();
        (0..l / 2).map(move |h| (self.0[h], self.0[l - 1 - h]))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Comma-separated positive integers; the empty string is the empty composition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim().parse::<u32>().map_err(|e| Error::Parse {
                    what: "composition",
                    detail: format!("{p:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// Either a positive integer modulus or equality itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Modulus {
    Finite(u32),
    Infinity,
}

impl Modulus {
    pub fn finite(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidModulus(0));
        }
        Ok(Self::Finite(m))
    }

    /// Whether two parts are congruent under this modulus.
    pub fn congruent(self, a: u32, b: u32) -> bool {
        match self {
            Modulus::Finite(m) => a % m == b % m,
            Modulus::Infinity => a == b,
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Modulus::Finite(m) => write!(f, "{m}"),
            Modulus::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Modulus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Modulus::Infinity),
            other => {
                let m: i64 = other.parse().map_err(|e| Error::Parse {
                    what: "modulus",
                    detail: format!("{other:?}: {e}"),
                })?;
                if m < 1 || m > u32::MAX as i64 {
                    return Err(Error::InvalidModulus(m));
                }
                Ok(Modulus::Finite(m as u32))
            }
        }
    }
}

impl From<Modulus> for String {
    fn from(m: Modulus) -> String {
        m.to_string()
    }
}

impl TryFrom<String> for Modulus {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Plus: even length, or odd length with an even middle part. Minus: odd middle part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignClass {
    Plus,
    Minus,
}

/// Which counting family a [`CountSpec`] selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Counted by the number of mirrored pairs that differ.
    Pc,
    /// Counted by the number of mirrored pairs that agree.
    Ac,
}

/// Sign restriction of a [`CountSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
    Total,
}

impl Sign {
    pub fn admits(self, class: SignClass) -> bool {
        match self {
            Sign::Total => true,
            Sign::Plus => class == SignClass::Plus,
            Sign::Minus => class == SignClass::Minus,
        }
    }
}

macro_rules! lowercase_enum_text {
    ($ty:ident, $what:literal, $($variant:ident => $text:literal),+) => {
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(match self { $($ty::$variant => $text),+ })
            }
        }

        impl FromStr for $ty {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s.trim().to_ascii_lowercase().as_str() {
                    $($text => Ok($ty::$variant),)+
                    other => Err(Error::Parse { what: $what, detail: other.to_string() }),
                }
            }
        }
    };
}

lowercase_enum_text!(Family, "family", Pc => "pc", Ac => "ac");
lowercase_enum_text!(Sign, "sign", Plus => "plus", Minus => "minus", Total => "total");

/// Selects one counting function: family, reduced flag, sign, modulus and
/// the statistic value `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CountSpec {
    pub family: Family,
    pub reduced: bool,
    pub sign: Sign,
    pub modulus: Modulus,
    pub k: u32,
}

impl CountSpec {
    pub fn new(family: Family, reduced: bool, sign: Sign, modulus: Modulus, k: u32) -> Self {
        Self {
            family,
            reduced,
            sign,
            modulus,
            k,
        }
    }

    pub fn with_sign(self, sign: Sign) -> Self {
        Self { sign, ..self }
    }

    pub fn with_k(self, k: u32) -> Self {
        Self { k, ..self }
    }

    /// Short name in the usual notation, e.g. `rac_+^2(·,3)`.
    pub fn name(&self) -> String {
        let prefix = if self.reduced { "r" } else { "" };
        let sign = match self.sign {
            Sign::Plus => "_+",
            Sign::Minus => "_-",
            Sign::Total => "",
        };
        format!(
            "{prefix}{}{sign}^{}(n,{})",
            self.family, self.k, self.modulus
        )
    }

    /// The statistic this spec filters on, evaluated on `c`.
    pub fn statistic(&self, c: &Composition) -> usize {
        match self.family {
            Family::Pc => mismatch_count(c, self.modulus),
            Family::Ac => match_count(c, self.modulus),
        }
    }

    /// Whether `c` is counted by the unreduced version of this spec.
    pub fn admits(&self, c: &Composition) -> bool {
        self.sign.admits(sign_class(c)) && self.statistic(c) == self.k as usize
    }
}

/// Binary string of length `n` with a 1 at each partial sum of the parts.
pub fn encode_binary(c: &Composition) -> Vec<bool> {
    let mut bits = vec![false; c.n() as usize];
    let mut acc = 0usize;
    for &p in c.parts() {
        acc += p as usize;
        bits[acc - 1] = true;
    }
    bits
}

/// Inverse of [`encode_binary`].
pub fn decode_binary(bits: &[bool]) -> Result<Composition> {
    if let Some(false) = bits.last() {
        return Err(Error::BinaryNotTerminated);
    }
    let mut parts = Vec::new();
    let mut run = 0u32;
    for &b in bits {
        run += 1;
        if b {
            parts.push(run);
            run = 0;
        }
    }
    Ok(Composition::from_parts_unchecked(parts))
}

/// Number of mirrored pairs that are not congruent under `modulus`.
pub fn mismatch_count(c: &Composition, modulus: Modulus) -> usize {
    c.mirror_pairs()
        .filter(|&(a, b)| !modulus.congruent(a, b))
        .count()
}

/// Number of mirrored pairs that are congruent under `modulus`.
pub fn match_count(c: &Composition, modulus: Modulus) -> usize {
    c.len() / 2 - mismatch_count(c, modulus)
}

pub fn sign_class(c: &Composition) -> SignClass {
    match c.middle() {
        Some(mid) if mid % 2 == 1 => SignClass::Minus,
        _ => SignClass::Plus,
    }
}

/// Representative of `c` under independent swaps of mirrored pairs: the
/// larger part of each pair comes first.
pub fn swap_canonical(c: &Composition) -> Composition {
    let mut parts = c.parts().to_vec();
    let l = parts.len();
    for h in 0..l / 2 {
        if parts[h] < parts[l - 1 - h] {
            parts.swap(h, l - 1 - h);
        }
    }
    Composition::from_parts_unchecked(parts)
}

/// Whether `c` is already its own [`swap_canonical`] form.
pub fn is_swap_canonical(c: &Composition) -> bool {
    c.mirror_pairs().all(|(a, b)| a >= b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|ch| ch == '1').collect()
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode_binary(&comp("2,4,1,1,2")), bits("0100011101"));
        assert_eq!(encode_binary(&comp("5")), bits("00001"));
        assert!(encode_binary(&Composition::empty()).is_empty());
    }

    #[test]
    fn decode_examples() {
        assert_eq!(
            decode_binary(&bits("0100011101")).unwrap(),
            comp("2,4,1,1,2")
        );
        assert_eq!(decode_binary(&bits("1111")).unwrap(), comp("1,1,1,1"));
        assert_eq!(decode_binary(&bits("0101")).unwrap(), comp("2,2"));
        assert_eq!(decode_binary(&[]).unwrap(), Composition::empty());
        assert_eq!(
            decode_binary(&bits("0110")),
            Err(Error::BinaryNotTerminated)
        );
    }

    #[test]
    fn binary_round_trip_exhaustive() {
        for len in 1..=14usize {
            for x in 0u32..(1 << (len - 1)) {
                let mut b: Vec<bool> = (0..len - 1).map(|i| x >> i & 1 == 1).collect();
                b.push(true);
                let c = decode_binary(&b).unwrap();
                assert_eq!(c.n() as usize, len);
                assert_eq!(encode_binary(&c), b);
            }
        }
    }

    #[test]
    fn mismatch_examples() {
        let c = comp("2,4,1,1,2");
        assert_eq!(mismatch_count(&c, Modulus::Infinity), 1);
        assert_eq!(mismatch_count(&c, Modulus::Finite(3)), 0);
        assert_eq!(mismatch_count(&Composition::empty(), Modulus::Finite(2)), 0);
    }

    #[test]
    fn match_examples() {
        assert_eq!(match_count(&comp("2,4,1,1,2"), Modulus::Infinity), 1);
        assert_eq!(match_count(&comp("1,5"), Modulus::Infinity), 0);
        assert_eq!(match_count(&comp("3"), Modulus::Finite(7)), 0);
        assert_eq!(match_count(&comp("3"), Modulus::Infinity), 0);
    }

    #[test]
    fn sign_examples() {
        assert_eq!(sign_class(&comp("3,1")), SignClass::Plus);
        assert_eq!(sign_class(&comp("2,1,1")), SignClass::Minus);
        assert_eq!(sign_class(&comp("1,2,1")), SignClass::Plus);
        assert_eq!(sign_class(&Composition::empty()), SignClass::Plus);
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(swap_canonical(&comp("1,5")), comp("5,1"));
        assert_eq!(swap_canonical(&comp("2,1,4")), comp("4,1,2"));
        assert_eq!(swap_canonical(&comp("3,3")), comp("3,3"));
        assert!(is_swap_canonical(&comp("5,1")));
        assert!(!is_swap_canonical(&comp("1,5")));
    }

    #[test]
    fn text_formats() {
        assert_eq!(comp("2, 4,1,1,2").to_string(), "2,4,1,1,2");
        assert_eq!(comp(""), Composition::empty());
        assert!("1,0,2".parse::<Composition>().is_err());
        assert!("1,x".parse::<Composition>().is_err());
        assert_eq!("inf".parse::<Modulus>().unwrap(), Modulus::Infinity);
        assert_eq!("3".parse::<Modulus>().unwrap(), Modulus::Finite(3));
        assert_eq!("0".parse::<Modulus>(), Err(Error::InvalidModulus(0)));
        assert_eq!("ac".parse::<Family>().unwrap(), Family::Ac);
        assert_eq!("Total".parse::<Sign>().unwrap(), Sign::Total);
    }

    #[test]
    fn spec_name() {
        let spec = CountSpec::new(Family::Ac, true, Sign::Plus, Modulus::Finite(3), 2);
        assert_eq!(spec.name(), "rac_+^2(n,3)");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn composition() -> impl Strategy<Value = Composition> {
            prop::collection::vec(1u32..9, 0..12).prop_map(Composition::from_parts_unchecked)
        }

        fn modulus() -> impl Strategy<Value = Modulus> {
            prop_oneof![(1u32..7).prop_map(Modulus::Finite), Just(Modulus::Infinity)]
        }

        proptest! {
            #[test]
            fn counts_partition_pairs(c in composition(), m in modulus()) {
                prop_assert_eq!(mismatch_count(&c, m) + match_count(&c, m), c.len() / 2);
            }

            #[test]
            fn modulus_one_never_mismatches(c in composition()) {
                prop_assert_eq!(mismatch_count(&c, Modulus::Finite(1)), 0);
            }

            #[test]
            fn infinity_dominates(c in composition(), m in 1u32..9) {
                prop_assert!(mismatch_count(&c, Modulus::Infinity) >= mismatch_count(&c, Modulus::Finite(m)));
            }

            #[test]
            fn canonical_preserves_statistics(c in composition(), m in modulus()) {
                let d = swap_canonical(&c);
                prop_assert_eq!(swap_canonical(&d).clone(), d.clone());
                prop_assert!(is_swap_canonical(&d));
                prop_assert_eq!(d.n(), c.n());
                prop_assert_eq!(d.len(), c.len());
                prop_assert_eq!(sign_class(&d), sign_class(&c));
                prop_assert_eq!(mismatch_count(&d, m), mismatch_count(&c, m));
                prop_assert_eq!(match_count(&d, m), match_count(&c, m));
            }

            #[test]
            fn text_round_trip(c in composition()) {
                prop_assert_eq!(c.to_string().parse::<Composition>().unwrap(), c);
            }
        }
    }
}
