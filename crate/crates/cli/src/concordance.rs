//! Bundled table of OEIS sequences expressed through the library's counts.

use std::sync::OnceLock;

use anyhow::{bail, Context, Result};
use palcomp::{Count, CountSpec, Family, Modulus, Sign};
use serde::Deserialize;

const DATA: &str = include_str!("../data/concordance.toml");

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Record {
    pub id: String,
    pub relation: String,
    pub family: Family,
    #[serde(default)]
    pub reduced: bool,
    pub sign: Sign,
    pub modulus: Modulus,
    /// `None` for triangles, where the caller picks the row.
    pub k: Option<u32>,
    #[serde(default = "one")]
    pub scale: u32,
    #[serde(default)]
    pub shift: i64,
    #[serde(default)]
    pub shift_per_k: i64,
    #[serde(default = "one")]
    pub divisor: u32,
}

fn one() -> u32 {
    1
}

#[derive(Deserialize)]
struct File {
    sequence: Vec<Record>,
}

impl Record {
    pub fn spec(&self, k: u32) -> CountSpec {
        CountSpec::new(self.family, self.reduced, self.sign, self.modulus, k)
    }

    /// Argument of the count giving term `n`, or `None` when it is negative.
    pub fn index(&self, n: u32, k: u32) -> Option<u32> {
        let i = self.scale as i64 * n as i64 + self.shift + self.shift_per_k * k as i64;
        u32::try_from(i).ok()
    }

    /// Turns the raw count into the sequence term.
    pub fn term(&self, raw: Count) -> Result<Count> {
        let d = Count::from(self.divisor);
        if &raw % &d != Count::from(0u32) {
            bail!("{}: {raw} is not divisible by {}", self.id, self.divisor);
        }
        Ok(raw / d)
    }
}

/// Every record, in file order. Some ids appear more than once.
pub fn records() -> &'static [Record] {
    static PARSED: OnceLock<Vec<Record>> = OnceLock::new();
    PARSED.get_or_init(|| {
        toml::from_str::<File>(DATA)
            .expect("bundled concordance is valid")
            .sequence
    })
}

/// The first record for `id`.
pub fn lookup(id: &str) -> Result<&'static Record> {
    let id = id.trim().to_ascii_uppercase();
    records()
        .iter()
        .find(|r| r.id == id)
        .with_context(|| format!("no concordance entry for {id}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_file_parses() {
        let all = records();
        assert!(all.len() > 30);
        assert!(all
            .iter()
            .all(|r| r.id.starts_with('A') && r.scale >= 1 && r.divisor >= 1));
        assert_eq!(lookup("a002620").unwrap().relation, "ac_+^1(n,1)");
        assert!(lookup("A000000").is_err());
    }

    #[test]
    fn negative_index_is_none() {
        let r = lookup("A001590").unwrap();
        assert_eq!(r.index(0, 0), None);
        assert_eq!(r.index(1, 0), Some(0));
        let tri = lookup("A060098").unwrap();
        assert_eq!(tri.k, None);
        assert_eq!(tri.index(3, 2), Some(7));
    }
}
