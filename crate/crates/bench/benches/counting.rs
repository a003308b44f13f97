use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use palcomp::{
    decode_pair, encode_pair, formula_count, gf_catalog, CountSpec, Family, GfKey, Modulus,
    ModulusForm, Oracle, Sign,
};

fn formulas(c: &mut Criterion) {
    let mut g = c.benchmark_group("formula");
    let cases = [
        (
            "pc_total_inf",
            CountSpec::new(Family::Pc, false, Sign::Total, Modulus::Infinity, 3),
        ),
        (
            "ac_plus_inf",
            CountSpec::new(Family::Ac, false, Sign::Plus, Modulus::Infinity, 3),
        ),
        (
            "pc_plus_mod3",
            CountSpec::new(Family::Pc, false, Sign::Plus, Modulus::Finite(3), 3),
        ),
        (
            "ac_total_mod3",
            CountSpec::new(Family::Ac, false, Sign::Total, Modulus::Finite(3), 3),
        ),
        (
            "rac_plus_mod2",
            CountSpec::new(Family::Ac, true, Sign::Plus, Modulus::Finite(2), 3),
        ),
    ];
    for (name, spec) in cases {
        for n in [20u32, 60] {
            g.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| formula_count(black_box(&spec), n, None).unwrap())
            });
        }
    }
    g.finish();
}

fn series(c: &mut Criterion) {
    let mut g = c.benchmark_group("gf_expand");
    let cases = [
        (
            "ac_plus_mod3",
            GfKey::new(Family::Ac, false, Sign::Plus, ModulusForm::Symbolic),
            Some(3),
        ),
        (
            "pc_total_inf",
            GfKey::new(Family::Pc, false, Sign::Total, ModulusForm::Infinity),
            None,
        ),
    ];
    for (name, key, m) in cases {
        let gf = gf_catalog(key, m).unwrap();
        for n in [30usize, 80] {
            g.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| gf.expand(n, 8).unwrap())
            });
        }
    }
    g.finish();
}

fn enumeration(c: &mut Criterion) {
    let oracle = Oracle::default();
    let spec = CountSpec::new(Family::Ac, false, Sign::Total, Modulus::Finite(2), 1);
    let mut g = c.benchmark_group("brute");
    g.sample_size(10);
    for n in [12u32, 16, 20] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| oracle.brute_count(black_box(&spec), n).unwrap())
        });
    }
    g.finish();
}

fn bijection(c: &mut Criterion) {
    let comps: Vec<_> = Oracle::default()
        .enumerate_compositions(14)
        .unwrap()
        .filter(|c| encode_pair(c).is_ok())
        .collect();
    c.bench_function("bijection_round_trip_n14", |b| {
        b.iter(|| {
            for comp in &comps {
                let p = encode_pair(comp).unwrap();
                black_box(decode_pair(&p).unwrap());
            }
        })
    });
}

criterion_group!(benches, formulas, series, enumeration, bijection);
criterion_main!(benches);
