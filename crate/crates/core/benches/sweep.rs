//! Parallel against sequential execution of the same cyclicity sweeps.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qloop_core::field::QRat;
use qloop_core::par::Exec;
use qloop_core::superlinalg::Superdim;
use qloop_core::tensorcyc::{natural_parameters, natural_sweep, prime_parameters, q_powers, web_sweep};

fn modes() -> Vec<(&'static str, Exec)> {
    let mut v = vec![("sequential", Exec::Sequential)];
    if Exec::parallel_available() {
        v.push(("parallel", Exec::Parallel));
    }
    v
}

fn web_pairs(c: &mut Criterion) {
    let params = prime_parameters();
    let mut g = c.benchmark_group("web_sweep_pairs");
    g.sample_size(10);
    for (name, exec) in modes() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| web_sweep(&params, 2, exec).unwrap())
        });
    }
    g.finish();
}

fn natural_pairs(c: &mut Criterion) {
    let params = natural_parameters();
    let mut g = c.benchmark_group("natural_sweep_gl21_pairs");
    g.sample_size(10);
    for (name, exec) in modes() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| natural_sweep(Superdim::new(2, 1), &params, 2, exec).unwrap())
        });
    }
    g.finish();
}

fn natural_triples(c: &mut Criterion) {
    let params: Vec<QRat> = q_powers(-2, 2);
    let mut g = c.benchmark_group("natural_sweep_gl11_triples");
    g.sample_size(10);
    for (name, exec) in modes() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| natural_sweep(Superdim::new(1, 1), &params, 3, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, web_pairs, natural_pairs, natural_triples);
criterion_main!(benches);
