use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use rspin_core::moduli::enumerate_assignments;
use rspin_core::ring::RawPoly;
use rspin_core::suites::small_stable_graphs;
use rspin_core::{
    compatibility_check, power_map, product_map, AlgebraWindow, ModulePresentation, NodeRing,
    PrimeField,
};

fn ring(l: u32) -> NodeRing {
    NodeRing::generic(l, PrimeField::new(13).unwrap()).unwrap()
}

fn normalize(c: &mut Criterion) {
    let a = ring(6);
    let mut poly = RawPoly::new();
    for k in 0..40i64 {
        poly = poly.term(k + 1, k % 5, k % 7, (k * 3) % 11);
    }
    c.bench_function("normalize 40 terms, l=6", |b| {
        b.iter(|| a.normalize(black_box(&poly)).unwrap())
    });
}

fn products(c: &mut Criterion) {
    let mut group = c.benchmark_group("product_map");
    for l in [2u32, 5, 10] {
        group.bench_with_input(BenchmarkId::from_parameter(l), &l, |b, &l| {
            let r = ring(l);
            b.iter(|| product_map(r, black_box((1, l - 1)), black_box((l - 1, 1))).unwrap())
        });
    }
    group.finish();
}

fn powers(c: &mut Criterion) {
    let mut group = c.benchmark_group("power_map");
    for (r, l, i) in [(4u32, 4u32, 1u32), (6, 6, 5), (12, 12, 5)] {
        group.bench_function(format!("c_{{{r}->1}} l={l}"), |b| {
            let a = ring(l);
            b.iter(|| power_map(a, r, 1, i, l - i, r).unwrap())
        });
    }
    group.bench_function("compatibility 12,6,1", |b| {
        let a = ring(12);
        b.iter(|| compatibility_check(a, (12, 6, 1), 5, 7, 12).unwrap())
    });
    group.finish();
}

fn cokernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("cokernel_length");
    for r in [4u32, 8, 12] {
        let map = power_map(ring(r), r, 1, 1, r - 1, r).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(r), &map, |b, map| {
            b.iter(|| map.cokernel_length().unwrap())
        });
    }
    group.finish();
}

fn module_rewriting(c: &mut Criterion) {
    let a = ring(7);
    let pres = ModulePresentation::new(a, 3, 4).unwrap();
    let f = a.monomial(1, 2, 0, 9);
    let g = a.monomial(1, 1, 8, 0);
    c.bench_function("module normal form, l=7", |b| {
        b.iter(|| {
            pres.element(black_box(f.clone()), black_box(g.clone()))
                .unwrap()
        })
    });
}

fn window(c: &mut Criterion) {
    c.bench_function("window associativity r=l=3, D=3", |b| {
        let w = AlgebraWindow::new(ring(3), 1, 2, 3, 3).unwrap();
        b.iter(|| w.associativity_failure().unwrap())
    });
}

fn enumeration(c: &mut Criterion) {
    let graphs = small_stable_graphs(3, 3, 1, 2);
    let mut group = c.benchmark_group("enumerate_assignments");
    for r in [2u32, 4, 6] {
        group.bench_with_input(BenchmarkId::from_parameter(r), &r, |b, &r| {
            b.iter(|| {
                graphs
                    .iter()
                    .map(|g| {
                        let m = vec![1i64; g.n() as usize];
                        enumerate_assignments(g, r, &m).unwrap().len()
                    })
                    .sum::<usize>()
            })
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    normalize,
    products,
    powers,
    cokernels,
    module_rewriting,
    window,
    enumeration
);
criterion_main!(benches);
