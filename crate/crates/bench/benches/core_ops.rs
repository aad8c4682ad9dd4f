use criterion::{criterion_group, criterion_main, Criterion};
use fqhg::duality::{dual_fqh, verify_fqh};
use fqhg::integrals::{solve_antipode, Hand};
use fqhg::Side;
use fqhg_bench::{free_cyclic, hecke_sn};

fn constructions(c: &mut Criterion) {
    c.bench_function("hecke S4", |b| b.iter(|| hecke_sn(4)));
    c.bench_function("twosub Z3*Z3", |b| b.iter(|| free_cyclic(3, 3)));
}

fn verification(c: &mut Criterion) {
    for (name, ex) in [("hecke S4", hecke_sn(4)), ("twosub Z3*Z3", free_cyclic(3, 3))] {
        let a = ex.algebra(Side::A).clone();
        let delta = ex.coproduct(Side::A).unwrap();
        let eps = ex.counit(Side::A);
        c.bench_function(&format!("verify_fqh {name}"), |b| {
            b.iter(|| verify_fqh(&a, &delta, &eps, &ex.integral_a).unwrap())
        });
        c.bench_function(&format!("solve_antipode {name}"), |b| {
            b.iter(|| solve_antipode(&a, &delta, &ex.integral_a, Hand::Left).unwrap())
        });
        let (f, pair) = ex.fqh(Side::A).unwrap();
        c.bench_function(&format!("dual_fqh {name}"), |b| b.iter(|| dual_fqh(&pair, &f).unwrap()));
        c.bench_function(&format!("rank Δ {name}"), |b| b.iter(|| delta.rank()));
    }
}

criterion_group!(benches, constructions, verification);
criterion_main!(benches);
