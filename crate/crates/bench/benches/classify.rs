//! Classification throughput: scalar spaces, operator spaces, and the
//! canonical index on uncountable targets.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use num_rational::Ratio;
use ordcalc_bench::{atom_values, countable_values, operator_index_pairs};
use ordcalc_core::{canonical_index, iso_k, iso_k_abstract, iso_scalar, AxiomContext, NormalOrdinal};

fn bench_scalar(c: &mut Criterion) {
    let sample: Vec<NormalOrdinal> = countable_values()
        .into_iter()
        .filter(|v| !v.is_finite())
        .step_by(18)
        .collect();
    c.bench_function("scalar/sampled-pair-pass", |b| {
        b.iter(|| {
            for xi in &sample {
                for eta in &sample {
                    black_box(iso_scalar(xi, eta).expect("infinite inputs"));
                }
            }
        })
    });
}

fn bench_operator(c: &mut Criterion) {
    let pairs = operator_index_pairs();
    let ctx = AxiomContext::default();
    let p = Ratio::from_integer(2u64);

    c.bench_function("operator/case-analysis-pair-pass", |b| {
        b.iter(|| {
            for (lambda, xi) in &pairs {
                for (mu, eta) in &pairs {
                    black_box(iso_k(lambda, xi, mu, eta, p, p, &ctx).expect("valid query"));
                }
            }
        })
    });

    c.bench_function("operator/abstract-pair-pass", |b| {
        b.iter(|| {
            for (lambda, xi) in &pairs {
                for (mu, eta) in &pairs {
                    black_box(iso_k_abstract(lambda, xi, mu, eta, p, p, &ctx).expect("valid query"));
                }
            }
        })
    });
}

fn bench_canonical_index(c: &mut Criterion) {
    let omega_1 = NormalOrdinal::initial(&NormalOrdinal::nat(1u32));
    let targets: Vec<NormalOrdinal> = atom_values().into_iter().step_by(10).collect();
    let ctx = AxiomContext::default();
    c.bench_function("canonical-index/uncountable-targets", |b| {
        b.iter(|| {
            for xi in &targets {
                black_box(canonical_index(&omega_1, xi, &ctx));
            }
        })
    });
}

criterion_group!(benches, bench_scalar, bench_operator, bench_canonical_index);
criterion_main!(benches);
