use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use garnir_bench::{example_pair, group};
use garnir_core::verify::{for_each_context, run_suite};
use garnir_core::{all_pairs, generate_group, GarnirContext, RootSystem, Suite};

fn group_generation(c: &mut Criterion) {
    let mut g = c.benchmark_group("generate");
    for label in ["G2", "B3", "A4", "D4"] {
        g.bench_with_input(BenchmarkId::from_parameter(label), label, |b, label| {
            b.iter(|| generate_group(RootSystem::from_label(label).unwrap()).unwrap())
        });
    }
    g.finish();
}

fn specht_span(c: &mut Criterion) {
    let w = group("A3");
    c.bench_function("classify all pairs A3", |b| {
        b.iter(|| {
            // fresh pairs each time so the cached results are recomputed
            let pairs = all_pairs(&w).unwrap();
            pairs.iter().map(|p| p.classification().specht_rank).sum::<usize>()
        })
    });
}

fn straightening(c: &mut Criterion) {
    let w = group("G2");
    let pair = example_pair(&w);
    let phi = w.root_system();
    let star = phi.subsystem(&phi.parse_roots("10,21").unwrap()).unwrap();
    let d = w.parse_word("t1").unwrap();
    c.bench_function("straighten worked example", |b| {
        b.iter(|| {
            let ctx = GarnirContext::new(&pair, black_box(d), star.clone()).unwrap();
            ctx.straighten().unwrap()
        })
    });

    let b2 = group("B2");
    c.bench_function("pairing search over B2 contexts", |b| {
        b.iter(|| {
            let mut found = 0;
            for_each_context(&b2, |ctx| {
                found += ctx.find_pairing().is_some() as usize;
                Ok(())
            })
            .unwrap();
            found
        })
    });
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    let w = group("A3");
    for suite in [Suite::Peel, Suite::Lemma, Suite::Theorem] {
        g.bench_function(suite.name(), |b| b.iter(|| run_suite(&w, suite).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, group_generation, specht_span, straightening, suites);
criterion_main!(benches);
