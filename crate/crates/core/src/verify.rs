//! Cross-checks every computation path against the others and against the
//! known identities, producing a report with one entry per check.
//!
//! The formula path is injectable so that a deliberately corrupted formula
//! can be used to confirm that the harness notices.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bijection::{decode_pair, encode_pair, pair_statistics};
use crate::error::Result;
use crate::formulas::special::SpecialValue;
use crate::formulas::{self, formula_count, specialized, FormulaVariant};
use crate::genfun::{gf_catalog, GfCounter, GfKey, ModulusForm};
use crate::numbers::{
    fibonacci, pow2, tribonacci, tribonacci_identity_sum, tribonacci_prime, Count,
};
use crate::oracle::Oracle;
use crate::stats::{mismatch_count, sign_class, CountSpec, Family, Modulus, Sign, SignClass};

/// The formula path under test.
pub type FormulaFn =
    Arc<dyn Fn(&CountSpec, u32, Option<FormulaVariant>) -> Result<Count> + Send + Sync>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest `n` of the three-path grid and of every enumeration-backed check.
    pub n_max: u32,
    pub k_max: u32,
    pub moduli: Vec<Modulus>,
    pub variant_n_max: u32,
    pub variant_k_max: u32,
    pub variant_m_max: u32,
    /// Largest `n` for the exhaustive bijection checks.
    pub bijection_n_max: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            n_max: 14,
            k_max: 4,
            moduli: vec![
                Modulus::Finite(1),
                Modulus::Finite(2),
                Modulus::Finite(3),
                Modulus::Finite(4),
                Modulus::Finite(5),
                Modulus::Infinity,
            ],
            variant_n_max: 30,
            variant_k_max: 6,
            variant_m_max: 6,
            bijection_n_max: 14,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one check. On failure `params`, `expected` and `actual`
/// describe the first failing case; on success `params` describes the range
/// covered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub params: String,
    pub status: Status,
    pub expected: Option<String>,
    pub actual: Option<String>,
    pub cases: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn get(&self, check: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check == check)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match c.status {
                Status::Pass => writeln!(f, "PASS {} ({} cases; {})", c.check, c.cases, c.params)?,
                Status::Fail => writeln!(
                    f,
                    "FAIL {} at {}: expected {}, got {}",
                    c.check,
                    c.params,
                    c.expected.as_deref().unwrap_or("-"),
                    c.actual.as_deref().unwrap_or("-"),
                )?,
            }
        }
        let failed = self.failures().count();
        writeln!(
            f,
            "{} checks, {} passed, {} failed",
            self.checks.len(),
            self.checks.len() - failed,
            failed
        )
    }
}

/// A single mismatch found by a check.
struct Failure {
    params: String,
    expected: String,
    actual: String,
}

fn fail(
    params: impl Into<String>,
    expected: impl fmt::Display,
    actual: impl fmt::Display,
) -> Failure {
    Failure {
        params: params.into(),
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

// Collects cases for one check, keeping the first failure.
struct Tracker {
    check: &'static str,
    range: String,
    cases: usize,
    failure: Option<Failure>,
}

impl Tracker {
    fn new(check: &'static str, range: impl Into<String>) -> Self {
        Self {
            check,
            range: range.into(),
            cases: 0,
            failure: None,
        }
    }

    /// Records one case; returns false once a failure has been seen.
    fn case(&mut self, outcome: std::result::Result<(), Failure>) -> bool {
        self.cases += 1;
        if let Err(f) = outcome {
            if self.failure.is_none() {
                self.failure = Some(f);
            }
        }
        self.failure.is_none()
    }

    /// Merges cases counted elsewhere, e.g. on another thread.
    fn absorb(&mut self, cases: usize, failure: Option<Failure>) {
        self.cases += cases;
        if self.failure.is_none() {
            self.failure = failure;
        }
    }

    fn eq<T: PartialEq + fmt::Display>(
        &mut self,
        params: impl FnOnce() -> String,
        expected: T,
        actual: T,
    ) -> bool {
        let outcome = if expected == actual {
            Ok(())
        } else {
            Err(fail(params(), expected, actual))
        };
        self.case(outcome)
    }

    fn error(&mut self, params: impl Into<String>, e: impl fmt::Display) -> bool {
        self.case(Err(fail(params, "a value", format!("error: {e}"))))
    }

    fn finish(self) -> CheckResult {
        match self.failure {
            None => CheckResult {
                check: self.check.to_string(),
                params: self.range,
                status: Status::Pass,
                expected: None,
                actual: None,
                cases: self.cases,
            },
            Some(f) => CheckResult {
                check: self.check.to_string(),
                params: f.params,
                status: Status::Fail,
                expected: Some(f.expected),
                actual: Some(f.actual),
                cases: self.cases,
            },
        }
    }
}

fn all_specs(moduli: &[Modulus], k_max: u32) -> Vec<CountSpec> {
    let mut out = Vec::new();
    for &modulus in moduli {
        for family in [Family::Pc, Family::Ac] {
            for reduced in [false, true] {
                for sign in [Sign::Plus, Sign::Minus, Sign::Total] {
                    for k in 0..=k_max {
                        out.push(CountSpec::new(family, reduced, sign, modulus, k));
                    }
                }
            }
        }
    }
    out
}

fn describe(spec: &CountSpec, n: u32) -> String {
    format!(
        "family={}{} sign={} n={} k={} m={}",
        if spec.reduced { "r" } else { "" },
        spec.family,
        spec.sign,
        n,
        spec.k,
        spec.modulus
    )
}

/// Runs every check under a configuration.
pub struct Verifier {
    config: VerifyConfig,
    formula: FormulaFn,
    oracle: Oracle,
}

impl Verifier {
    pub fn new(config: VerifyConfig) -> Self {
        Self::with_formula(config, Arc::new(formula_count))
    }

    /// Uses `formula` in place of the library's formula path.
    pub fn with_formula(config: VerifyConfig, formula: FormulaFn) -> Self {
        Self {
            config,
            formula,
            oracle: Oracle::default(),
        }
    }

    pub fn config(&self) -> &VerifyConfig {
        &self.config
    }

    fn formula(&self, spec: &CountSpec, n: u32) -> Result<Count> {
        (self.formula)(spec, n, None)
    }

    pub fn run(&self) -> Report {
        let checks: Vec<fn(&Verifier) -> CheckResult> = vec![
            Verifier::three_path_grid,
            Verifier::variant_agreement,
            Verifier::sign_partition,
            Verifier::reflection,
            Verifier::reduced_mismatch_division,
            Verifier::divisibility,
            Verifier::tribonacci_forms,
            Verifier::ac_plus_tribonacci,
            Verifier::parity_vanishing,
            Verifier::rac_parts_equal_one,
            Verifier::tribonacci_identity,
            Verifier::specializations,
            Verifier::special_values,
            Verifier::bijection_round_trip,
            Verifier::bijection_statistic_transport,
            Verifier::bijection_cardinality,
            Verifier::gf_total_plus,
            Verifier::gf_fibonacci_fold,
            Verifier::gf_truncation,
            Verifier::two_colored_parts,
            Verifier::at_most_one_even_part,
        ];
        Report {
            checks: checks.par_iter().map(|check| check(self)).collect(),
        }
    }

    /// formula = generating function = enumeration on the whole grid.
    fn three_path_grid(&self) -> CheckResult {
        let c = &self.config;
        let mut t = Tracker::new(
            "three_path_grid",
            format!(
                "n<={} k<={} m in {}",
                c.n_max,
                c.k_max,
                moduli_text(&c.moduli)
            ),
        );
        let gf = GfCounter::new();
        let cells: Vec<(Modulus, u32)> = c
            .moduli
            .iter()
            .flat_map(|&m| (0..=c.n_max).map(move |n| (m, n)))
            .collect();
        let results: Vec<(usize, Option<Failure>)> = cells
            .par_iter()
            .map(|&(modulus, n)| {
                let tally = match self.oracle.tally(n, modulus) {
                    Ok(t) => t,
                    Err(e) => return (1, Some(fail(format!("n={n} m={modulus}"), "a tally", e))),
                };
                let mut cases = 0;
                for spec in all_specs(&[modulus], c.k_max) {
                    cases += 1;
                    let brute = tally.get(&spec);
                    let formula = self.formula(&spec, n);
                    let series = gf.count(&spec, n);
                    let ok =
                        matches!((&formula, &series), (Ok(f), Ok(g)) if *f == brute && *g == brute);
                    if !ok {
                        let shown = |r: &Result<Count>| match r {
                            Ok(v) => v.to_string(),
                            Err(e) => format!("error: {e}"),
                        };
                        let actual = format!("formula={} gf={}", shown(&formula), shown(&series));
                        return (cases, Some(fail(describe(&spec, n), brute, actual)));
                    }
                }
                (cases, None)
            })
            .collect();
        for (cases, failure) in results {
            t.absorb(cases, failure);
        }
        t.finish()
    }

    /// Every formula variant of a quantity gives the same value.
    fn variant_agreement(&self) -> CheckResult {
        let c = &self.config;
        let mut t = Tracker::new(
            "variant_agreement",
            format!(
                "n<={} k<={} m<={}",
                c.variant_n_max, c.variant_k_max, c.variant_m_max
            ),
        );
        let mut specs = Vec::new();
        for k in 0..=c.variant_k_max {
            specs.push(CountSpec::new(
                Family::Ac,
                false,
                Sign::Plus,
                Modulus::Infinity,
                k,
            ));
            for m in 1..=c.variant_m_max {
                for family in [Family::Pc, Family::Ac] {
                    for reduced in [false, true] {
                        specs.push(CountSpec::new(
                            family,
                            reduced,
                            Sign::Plus,
                            Modulus::Finite(m),
                            k,
                        ));
                    }
                }
            }
        }
        let failures: Vec<(usize, Option<Failure>)> = specs
            .par_iter()
            .map(|spec| {
                let variants = formulas::variants_for(spec.family, spec.reduced, spec.modulus);
                let mut cases = 0;
                for n in 0..=c.variant_n_max {
                    let values: Vec<Result<Count>> = variants
                        .iter()
                        .map(|&v| (self.formula)(spec, n, Some(v)))
                        .collect();
                    cases += 1;
                    let first = &values[0];
                    if values.iter().any(|v| v != first || v.is_err()) {
                        let shown: Vec<String> = values
                            .iter()
                            .zip(variants)
                            .map(|(v, var)| match v {
                                Ok(x) => format!("V{var}={x}"),
                                Err(e) => format!("V{var}=error: {e}"),
                            })
                            .collect();
                        return (
                            cases,
                            Some(fail(
                                describe(spec, n),
                                "all variants equal",
                                shown.join(" "),
                            )),
                        );
                    }
                }
                (cases, None)
            })
            .collect();
        for (cases, failure) in failures {
            t.absorb(cases, failure);
        }
        t.finish()
    }

    fn grid_cells(&self) -> Vec<(Modulus, u32)> {
        let c = &self.config;
        c.moduli
            .iter()
            .flat_map(|&m| (0..=c.n_max).map(move |n| (m, n)))
            .collect()
    }

    /// Enumerated totals split into plus and minus counts.
    fn sign_partition(&self) -> CheckResult {
        let c = &self.config;
        let mut t = Tracker::new("sign_partition", format!("n<={} k<={}", c.n_max, c.k_max));
        for (modulus, n) in self.grid_cells() {
            let tally = match self.oracle.tally(n, modulus) {
                Ok(x) => x,
                Err(e) => {
                    t.error(format!("n={n}"), e);
                    break;
                }
            };
            for spec in all_specs(&[modulus], c.k_max) {
                if spec.sign != Sign::Total {
                    continue;
                }
                let sum = tally.get(&spec.with_sign(Sign::Plus))
                    + tally.get(&spec.with_sign(Sign::Minus));
                t.eq(|| describe(&spec, n), tally.get(&spec), sum);
            }
        }
        t.finish()
    }

    /// Enumerated minus counts at `n` equal plus counts at `n-1`.
    fn reflection(&self) -> CheckResult {
        let c = &self.config;
        let mut t = Tracker::new("reflection", format!("n<={} k<={}", c.n_max, c.k_max));
        for (modulus, n) in self.grid_cells() {
            if n == 0 {
                continue;
            }
            let (here, before) = match (
                self.oracle.tally(n, modulus),
                self.oracle.tally(n - 1, modulus),
            ) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => {
                    t.error(format!("n={n}"), e);
                    break;
                }
            };
            for spec in all_specs(&[modulus], c.k_max) {
                if spec.sign != Sign::Minus {
                    continue;
                }
                t.eq(
                    || describe(&spec, n),
                    before.get(&spec.with_sign(Sign::Plus)),
                    here.get(&spec),
                );
            }
        }
        t.finish()
    }

    /// Reduced mismatch counts are the unreduced ones divided by `2^k`.
    fn reduced_mismatch_division(&self) -> CheckResult {
        let mut t = Tracker::new("reduced_mismatch_division", "n<=20 k<=6");
        for n in 0..=20 {
            for k in 0..=6u32 {
                let spec = CountSpec::new(Family::Pc, false, Sign::Total, Modulus::Infinity, k);
                let reduced = CountSpec {
                    reduced: true,
                    ..spec
                };
                match (self.formula(&spec, n), self.formula(&reduced, n)) {
                    (Ok(full), Ok(r)) => {
                        t.eq(|| describe(&reduced, n), full, r * pow2(k as u64));
                    }
                    (Err(e), _) | (_, Err(e)) => {
                        t.error(describe(&reduced, n), e);
                    }
                }
            }
        }
        t.finish()
    }

    /// `2^k` divides `pc^k(n)`.
    fn divisibility(&self) -> CheckResult {
        let mut t = Tracker::new("divisibility", "n<=20 k<=6");
        for n in 0..=20 {
            for k in 0..=6u32 {
                let spec = CountSpec::new(Family::Pc, false, Sign::Total, Modulus::Infinity, k);
                match self.formula(&spec, n) {
                    Ok(v) => {
                        let rem = v % pow2(k as u64);
                        t.eq(|| describe(&spec, n), Count::zero(), rem);
                    }
                    Err(e) => {
                        t.error(describe(&spec, n), e);
                    }
                }
            }
        }
        t.finish()
    }

    /// Three tribonacci expressions for the anti-palindromic total.
    fn tribonacci_forms(&self) -> CheckResult {
        let mut t = Tracker::new("tribonacci_forms", "1<=n<=30");
        let spec = CountSpec::new(Family::Ac, false, Sign::Total, Modulus::Infinity, 0);
        for n in 1..=30u32 {
            let ni = n as i64;
            let a = tribonacci(ni) + tribonacci(ni - 2);
            let b = tribonacci_prime(ni + 1).unwrap() + tribonacci_prime(ni).unwrap();
            let c = tribonacci(ni + 1) - tribonacci(ni - 1);
            t.eq(
                || format!("n={n} T_n+T_(n-2) vs T'_(n+1)+T'_n"),
                a.clone(),
                b,
            );
            t.eq(
                || format!("n={n} T_n+T_(n-2) vs T_(n+1)-T_(n-1)"),
                a.clone(),
                c,
            );
            match self.formula(&spec, n) {
                Ok(f) => {
                    t.eq(|| describe(&spec, n), a, f);
                }
                Err(e) => {
                    t.error(describe(&spec, n), e);
                }
            }
        }
        t.finish()
    }

    /// `ac_+(n) = T'_{n+1}`.
    fn ac_plus_tribonacci(&self) -> CheckResult {
        let mut t = Tracker::new("ac_plus_tribonacci", "n<=30");
        let spec = CountSpec::new(Family::Ac, false, Sign::Plus, Modulus::Infinity, 0);
        for n in 0..=30u32 {
            let expected = tribonacci_prime(n as i64 + 1).unwrap();
            match self.formula(&spec, n) {
                Ok(f) => {
                    t.eq(|| describe(&spec, n), expected, f);
                }
                Err(e) => {
                    t.error(describe(&spec, n), e);
                }
            }
        }
        t.finish()
    }

    /// Mod-2 mismatch counts vanish when `n-k` is odd; plus counts at odd
    /// `n` vanish for even moduli.
    fn parity_vanishing(&self) -> CheckResult {
        let mut t = Tracker::new("parity_vanishing", "n<=30 k<=6 even m<=6");
        for n in 0..=30u32 {
            for k in 0..=6u32 {
                if (n + k) % 2 == 1 {
                    let spec = CountSpec::new(Family::Pc, false, Sign::Plus, Modulus::Finite(2), k);
                    self.expect_zero(&mut t, &spec, n);
                }
            }
            if n % 2 == 1 {
                for m in [2u32, 4, 6] {
                    let spec = CountSpec::new(Family::Pc, false, Sign::Plus, Modulus::Finite(m), 0);
                    self.expect_zero(&mut t, &spec, n);
                }
            }
        }
        t.finish()
    }

    fn expect_zero(&self, t: &mut Tracker, spec: &CountSpec, n: u32) {
        match self.formula(spec, n) {
            Ok(v) => {
                t.eq(|| describe(spec, n), Count::zero(), v);
            }
            Err(e) => {
                t.error(describe(spec, n), e);
            }
        }
    }

    /// Reduced anti-palindromic plus counts equal compositions of `n-k`
    /// with exactly `k` parts equal to 1.
    fn rac_parts_equal_one(&self) -> CheckResult {
        let c = &self.config;
        let mut t = Tracker::new(
            "rac_parts_equal_one",
            format!("k<=n<={} k<={}", c.n_max, c.k_max),
        );
        for n in 0..=c.n_max {
            for k in 0..=c.k_max.min(n) {
                let spec = CountSpec::new(Family::Ac, true, Sign::Plus, Modulus::Infinity, k);
                match (
                    self.formula(&spec, n),
                    self.oracle.count_parts_equal_one(n - k, k),
                ) {
                    (Ok(f), Ok(o)) => {
                        t.eq(|| describe(&spec, n), o, f);
                    }
                    (Err(e), _) | (_, Err(e)) => {
                        t.error(describe(&spec, n), e);
                    }
                }
            }
        }
        t.finish()
    }

    /// `Σ_{j+r+s=n} C(j,r) C(r,s) = T_{n+1}` = compositions with parts at most 3.
    fn tribonacci_identity(&self) -> CheckResult {
        let c = &self.config;
        let mut t = Tracker::new("tribonacci_identity", format!("n<={}", c.n_max));
        for n in 0..=c.n_max {
            let sum = tribonacci_identity_sum(n);
            t.eq(
                || format!("n={n} sum vs T_(n+1)"),
                tribonacci(n as i64 + 1),
                sum.clone(),
            );
            match self.oracle.count_parts_at_most(n, 3) {
                Ok(o) => {
                    t.eq(|| format!("n={n} sum vs parts<=3"), o, sum);
                }
                Err(e) => {
                    t.error(format!("n={n}"), e);
                }
            }
        }
        t.finish()
    }

    /// The simplified `m = 1` and `m = 2` sums agree with the general ones.
    fn specializations(&self) -> CheckResult {
        let mut t = Tracker::new("specializations", "n<=20 k<=6");
        let f = |family, reduced, sign, m, k| {
            CountSpec::new(family, reduced, sign, Modulus::Finite(m), k)
        };
        for n in 0..=20u32 {
            let mut pairs: Vec<(CountSpec, Result<Count>)> = vec![
                (
                    f(Family::Pc, false, Sign::Plus, 1, 0),
                    specialized::pc_plus_m1(n),
                ),
                (
                    f(Family::Pc, true, Sign::Total, 1, 0),
                    specialized::rpc_total_m1(n),
                ),
            ];
            for k in 0..=6u32 {
                pairs.push((
                    f(Family::Ac, false, Sign::Plus, 1, k),
                    specialized::ac_plus_k_m1(n, k),
                ));
                pairs.push((
                    f(Family::Ac, false, Sign::Total, 1, k),
                    Ok(specialized::ac_total_k_m1(n, k)),
                ));
                pairs.push((
                    f(Family::Ac, true, Sign::Plus, 1, k),
                    specialized::rac_plus_k_m1(n, k),
                ));
                pairs.push((
                    f(Family::Ac, true, Sign::Total, 1, k),
                    specialized::rac_total_k_m1(n, k),
                ));
                pairs.push((
                    f(Family::Pc, false, Sign::Plus, 2, k),
                    specialized::pc_plus_k_m2(n, k),
                ));
                pairs.push((
                    f(Family::Pc, true, Sign::Plus, 2, k),
                    specialized::rpc_plus_k_m2(n, k),
                ));
            }
            for (spec, special) in pairs {
                match (self.formula(&spec, n), special) {
                    (Ok(general), Ok(s)) => {
                        t.eq(|| describe(&spec, n), general, s);
                    }
                    (Err(e), _) | (_, Err(e)) => {
                        t.error(describe(&spec, n), e);
                    }
                }
            }
        }
        t.finish()
    }

    /// Closed forms agree with the formula path and with enumeration.
    fn special_values(&self) -> CheckResult {
        let c = &self.config;
        let mut t = Tracker::new("special_values", format!("n<={}", c.n_max));
        for sv in SpecialValue::all(c.k_max, 6) {
            let spec = sv.spec();
            for n in (0..=c.n_max).filter(|&n| sv.domain().contains(n)) {
                let value = sv.eval(n).expect("n in domain");
                let params = || format!("{} {}", sv.id(), describe(&spec, n));
                match (self.formula(&spec, n), self.oracle.brute_count(&spec, n)) {
                    (Ok(f), Ok(b)) => {
                        t.eq(params, value.clone(), f);
                        t.eq(params, value, b);
                    }
                    (Err(e), _) | (_, Err(e)) => {
                        t.error(params(), e);
                    }
                }
            }
        }
        t.finish()
    }

    fn plus_class_compositions(&self, n: u32) -> Result<Vec<crate::stats::Composition>> {
        Ok(self
            .oracle
            .enumerate_compositions(n)?
            .filter(|c| sign_class(c) == SignClass::Plus)
            .collect())
    }

    /// Decoding undoes encoding on every plus-class composition.
    fn bijection_round_trip(&self) -> CheckResult {
        let n_max = self.config.bijection_n_max;
        let mut t = Tracker::new("bijection_round_trip", format!("n<={n_max}"));
        for n in 0..=n_max {
            let comps = match self.plus_class_compositions(n) {
                Ok(c) => c,
                Err(e) => {
                    t.error(format!("n={n}"), e);
                    break;
                }
            };
            for c in comps {
                let back = encode_pair(&c).and_then(|p| decode_pair(&p));
                match back {
                    Ok(d) => {
                        t.eq(|| format!("composition {c}"), c.to_string(), d.to_string());
                    }
                    Err(e) => {
                        t.error(format!("composition {c}"), e);
                    }
                }
            }
        }
        t.finish()
    }

    /// The mismatch statistic read off the pair equals the one of the preimage.
    fn bijection_statistic_transport(&self) -> CheckResult {
        let n_max = self.config.bijection_n_max;
        let mut t = Tracker::new("bijection_statistic_transport", format!("n<={n_max}"));
        for n in 0..=n_max {
            let comps = match self.plus_class_compositions(n) {
                Ok(c) => c,
                Err(e) => {
                    t.error(format!("n={n}"), e);
                    break;
                }
            };
            for c in comps {
                match encode_pair(&c).and_then(|p| pair_statistics(&p)) {
                    Ok(st) => {
                        t.eq(
                            || format!("composition {c}"),
                            mismatch_count(&c, Modulus::Infinity),
                            st.mismatch.k,
                        );
                    }
                    Err(e) => {
                        t.error(format!("composition {c}"), e);
                    }
                }
            }
        }
        t.finish()
    }

    /// Distinct images with statistic `k` are counted by the plus formula.
    fn bijection_cardinality(&self) -> CheckResult {
        let n_max = self.config.bijection_n_max;
        let mut t = Tracker::new("bijection_cardinality", format!("n<={n_max}"));
        for n in 0..=n_max {
            let comps = match self.plus_class_compositions(n) {
                Ok(c) => c,
                Err(e) => {
                    t.error(format!("n={n}"), e);
                    break;
                }
            };
            let mut images: Vec<std::collections::HashSet<_>> = Vec::new();
            for c in comps {
                if let Ok(p) = encode_pair(&c) {
                    let k = pair_statistics(&p)
                        .map(|s| s.mismatch.k)
                        .unwrap_or(usize::MAX);
                    if k == usize::MAX {
                        continue;
                    }
                    if images.len() <= k {
                        images.resize_with(k + 1, Default::default);
                    }
                    images[k].insert(p);
                }
            }
            for k in 0..=(n / 3) {
                let spec = CountSpec::new(Family::Pc, false, Sign::Plus, Modulus::Infinity, k);
                let seen = images.get(k as usize).map_or(0, |s| s.len());
                match self.formula(&spec, n) {
                    Ok(f) => {
                        t.eq(|| describe(&spec, n), f, Count::from(seen));
                    }
                    Err(e) => {
                        t.error(describe(&spec, n), e);
                    }
                }
            }
        }
        t.finish()
    }

    fn catalog_instances(&self) -> Vec<(GfKey, Option<u32>)> {
        let mut out = Vec::new();
        for key in GfKey::all() {
            match key.form {
                ModulusForm::Infinity => out.push((key, None)),
                ModulusForm::Symbolic => {
                    for m in self.config.moduli.iter().filter_map(|m| match m {
                        Modulus::Finite(m) => Some(*m),
                        Modulus::Infinity => None,
                    }) {
                        out.push((key, Some(m)));
                    }
                }
            }
        }
        out
    }

    /// Total series coefficients are plus coefficients at `n` and `n-1`.
    fn gf_total_plus(&self) -> CheckResult {
        let c = &self.config;
        let (n, k) = (c.n_max as usize, c.k_max as usize);
        let mut t = Tracker::new("gf_total_plus", format!("n<={n} k<={k}"));
        for (key, m) in self.catalog_instances() {
            if key.sign != Sign::Total {
                continue;
            }
            let plus_key = GfKey {
                sign: Sign::Plus,
                ..key
            };
            let series = gf_catalog(key, m)
                .and_then(|g| g.expand(n, k))
                .and_then(|total| Ok((total, gf_catalog(plus_key, m)?.expand(n, k)?)));
            let (total, plus) = match series {
                Ok(s) => s,
                Err(e) => {
                    t.error(format!("{key} m={m:?}"), e);
                    continue;
                }
            };
            for p in 0..=n {
                for s in 0..=k {
                    let shifted = if p == 0 {
                        Zero::zero()
                    } else {
                        plus.coeff(p - 1, s)
                    };
                    t.eq(
                        || format!("{key} m={m:?} n={p} k={s}"),
                        plus.coeff(p, s) + shifted,
                        total.coeff(p, s),
                    );
                }
            }
        }
        t.finish()
    }

    /// The reduced mismatch plus series at `m = 2` folds the Fibonacci series.
    fn gf_fibonacci_fold(&self) -> CheckResult {
        let mut t = Tracker::new("gf_fibonacci_fold", "n<=24");
        let key = GfKey::new(Family::Pc, true, Sign::Plus, ModulusForm::Symbolic);
        match gf_catalog(key, Some(2)).and_then(|g| g.expand(24, 0)) {
            Ok(series) => {
                for n in 0..=24usize {
                    let expected = match n % 2 {
                        0 => fibonacci(n as i64 + 1).unwrap(),
                        _ => Count::zero(),
                    };
                    t.eq(|| format!("n={n}"), expected.into(), series.coeff(n, 0));
                }
            }
            Err(e) => {
                t.error("m=2", e);
            }
        }
        t.finish()
    }

    /// Expanding with larger bounds does not change any coefficient.
    fn gf_truncation(&self) -> CheckResult {
        let c = &self.config;
        let (n, k) = (c.n_max as usize, c.k_max as usize);
        let mut t = Tracker::new(
            "gf_truncation",
            format!("({n},{k}) vs ({},{})", n + 5, k + 3),
        );
        for (key, m) in self.catalog_instances() {
            let pair =
                gf_catalog(key, m).and_then(|g| Ok((g.expand(n, k)?, g.expand(n + 5, k + 3)?)));
            match pair {
                Ok((small, large)) => {
                    let same = large.rebound(n, k) == small;
                    t.eq(|| format!("{key} m={m:?}"), true, same);
                }
                Err(e) => {
                    t.error(format!("{key} m={m:?}"), e);
                }
            }
        }
        t.finish()
    }

    /// `pc_+(n,1)` equals the number of two-colored compositions of `n` into
    /// parts greater than 1.
    fn two_colored_parts(&self) -> CheckResult {
        let c = &self.config;
        let mut t = Tracker::new("two_colored_parts", format!("n<={}", c.n_max));
        let spec = CountSpec::new(Family::Pc, false, Sign::Plus, Modulus::Finite(1), 0);
        for n in 0..=c.n_max {
            match (
                self.formula(&spec, n),
                self.oracle.count_two_colored_parts_above_one(n),
            ) {
                (Ok(f), Ok(o)) => {
                    t.eq(|| describe(&spec, n), o, f);
                }
                (Err(e), _) | (_, Err(e)) => {
                    t.error(describe(&spec, n), e);
                }
            }
        }
        t.finish()
    }

    /// `rac^1(n)` equals the number of compositions of `n-2` with at most one
    /// even part.
    fn at_most_one_even_part(&self) -> CheckResult {
        let c = &self.config;
        let mut t = Tracker::new("at_most_one_even_part", format!("2<=n<={}", c.n_max));
        let spec = CountSpec::new(Family::Ac, true, Sign::Total, Modulus::Infinity, 1);
        for n in 2..=c.n_max {
            match (
                self.formula(&spec, n),
                self.oracle.count_at_most_one_even_part(n - 2),
            ) {
                (Ok(f), Ok(o)) => {
                    t.eq(|| describe(&spec, n), o, f);
                }
                (Err(e), _) | (_, Err(e)) => {
                    t.error(describe(&spec, n), e);
                }
            }
        }
        t.finish()
    }
}

fn moduli_text(moduli: &[Modulus]) -> String {
    let parts: Vec<String> = moduli.iter().map(|m| m.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}
