use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use tanglekit::braid::{conjugacy_census, coxeter_quotient};
use tanglekit::coloring::col_group;
use tanglekit::jones::{eval_at_fifth_root, jones, kauffman_bracket};
use tanglekit::kei::{burnside_kei, enumerate};
use tanglekit::KeiPresentation;
use tanglekit_bench::{alternating_closure, corpus_diagram};

fn quotient(c: &mut Criterion) {
    c.bench_function("coxeter_quotient", |b| b.iter(|| coxeter_quotient().unwrap()));
    let q = coxeter_quotient().unwrap();
    c.bench_function("conjugacy_census", |b| b.iter(|| conjugacy_census(black_box(&q))));
}

fn kei_enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("kei");
    for (m, n) in [(3, 3), (4, 3), (3, 4)] {
        let p = KeiPresentation::q(m, n);
        g.bench_with_input(BenchmarkId::new("Q", format!("{m},{n}")), &p, |b, p| {
            b.iter(|| enumerate(p, 20_000))
        });
    }
    for name in ["9_40", "9_49"] {
        let d = corpus_diagram(name);
        g.bench_with_input(BenchmarkId::new("BQ5", name), &d, |b, d| {
            b.iter(|| burnside_kei(d, 5, 20_000))
        });
    }
    g.finish();
}

fn bracket(c: &mut Criterion) {
    let mut g = c.benchmark_group("bracket");
    g.sample_size(10);
    for k in [4, 6, 8] {
        let d = alternating_closure(k);
        g.bench_with_input(BenchmarkId::from_parameter(2 * k), &d, |b, d| {
            b.iter(|| kauffman_bracket(d).unwrap())
        });
    }
    let d = corpus_diagram("9_40");
    g.bench_function("jones5_9_40", |b| {
        b.iter(|| eval_at_fifth_root(&jones(&d, &[]).unwrap()))
    });
    g.finish();
}

fn smith_normal_form(c: &mut Criterion) {
    let mut g = c.benchmark_group("col_group");
    for name in ["8_18", "9_40", "9^2_40"] {
        let d = corpus_diagram(name);
        g.bench_with_input(BenchmarkId::from_parameter(name), &d, |b, d| {
            b.iter(|| col_group(d, 5).unwrap())
        });
    }
    let big = alternating_closure(40);
    g.bench_function("80_crossings", |b| b.iter(|| col_group(&big, 5).unwrap()));
    g.finish();
}

criterion_group!(benches, quotient, kei_enumeration, bracket, smith_normal_form);
criterion_main!(benches);
