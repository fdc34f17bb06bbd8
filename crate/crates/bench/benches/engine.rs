use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use sgqft::applications::{curve_free_energies, lambda_recursion_solve, one_d_recursion, CurvePreset};
use sgqft::calculus::{abstract_free_energy, op_cut, op_d};
use sgqft::feynman::{realized_free_energy, recursion_solve, FeynmanContext};
use sgqft::graphs::{canonicalize, enumerate_stable, EnumOptions};
use sgqft::oracle::wick_free_energies;

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    for (g, n) in [(2, 2), (3, 0), (3, 1)] {
        group.bench_function(format!("({g},{n})"), |b| {
            b.iter(|| enumerate_stable(black_box(g), black_box(n), EnumOptions::default()).unwrap())
        });
    }
    group.finish();
    let classes = enumerate_stable(3, 1, EnumOptions::default()).unwrap();
    c.bench_function("canonicalize (3,1) classes", |b| {
        b.iter(|| classes.iter().map(|(g, _)| canonicalize(black_box(g)).unwrap().1).sum::<u128>())
    });
}

fn operators(c: &mut Criterion) {
    let f = abstract_free_energy(2, 1, 1).unwrap();
    c.bench_function("K on F(2,1)", |b| b.iter(|| op_cut(black_box(&f)).unwrap()));
    c.bench_function("D on F(2,1)", |b| b.iter(|| op_d(black_box(&f)).unwrap()));
}

fn realization(c: &mut Criterion) {
    let ctx = FeynmanContext::new(1).unwrap();
    c.bench_function("realized W_3", |b| b.iter(|| realized_free_energy(black_box(3), &ctx).unwrap()));
    c.bench_function("recursion to genus 4", |b| b.iter(|| recursion_solve(black_box(4), &ctx).unwrap()));
    c.bench_function("Wick oracle to genus 3", |b| b.iter(|| wick_free_energies(black_box(3), 1).unwrap()));
}

fn applications(c: &mut Criterion) {
    c.bench_function("1D recursion to genus 6", |b| b.iter(|| one_d_recursion(black_box(6)).unwrap()));
    c.bench_function("Catalan curve to genus 5", |b| {
        b.iter(|| curve_free_energies(CurvePreset::Catalan, black_box(5)).unwrap())
    });
    c.bench_function("lambda recursion to genus 7", |b| b.iter(|| lambda_recursion_solve(black_box(7)).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = enumeration, operators, realization, applications
}
criterion_main!(benches);
