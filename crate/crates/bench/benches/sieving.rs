use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sievekit::cyclotomic::eval_at_root;
use sievekit::orbits::{enumerate, Family};
use sievekit::qanalog::q_catalan;
use sievekit::qtcat::{DyckPath, SchroderPath};
use sievekit::sievecheck::{verify_cyclic, verify_dihedral};
use sievekit_bench::{ncpartition_case, spec};

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    for (family, n, k) in [
        (Family::Subsets, 12, Some(6)),
        (Family::NcPartitions, 9, None),
        (Family::Triangulations, 10, None),
        (Family::Dissections, 9, Some(3)),
    ] {
        let s = spec(family, n, k);
        g.bench_with_input(BenchmarkId::from_parameter(s), &s, |b, &s| b.iter(|| enumerate(s).unwrap()));
    }
    g.finish();
}

fn verification(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    for n in [5, 7, 9] {
        let (fam, p) = ncpartition_case(n);
        g.bench_with_input(BenchmarkId::new("dihedral-ncpartitions", n), &n, |b, _| {
            b.iter(|| verify_dihedral(&fam, &p).unwrap())
        });
        let q = q_catalan(n).unwrap();
        g.bench_with_input(BenchmarkId::new("cyclic-ncpartitions", n), &n, |b, _| {
            b.iter(|| verify_cyclic(&fam, &q).unwrap())
        });
    }
    g.finish();
}

fn cyclotomic(c: &mut Criterion) {
    let p = q_catalan(10).unwrap();
    c.bench_function("eval_at_root C_10(q) at all 10th roots", |b| {
        b.iter(|| (0..10).map(|l| eval_at_root(&p, 10, l).unwrap()).collect::<Vec<_>>())
    });
}

fn path_statistics(c: &mut Criterion) {
    c.bench_function("area+bounce over Dyck paths n=9", |b| {
        b.iter(|| DyckPath::all(9).iter().map(|d| d.area() + d.bounce()).sum::<u32>())
    });
    c.bench_function("area+bounce over Schroder paths n=6", |b| {
        b.iter(|| SchroderPath::all(6).iter().map(|p| p.area() + p.bounce()).sum::<u32>())
    });
}

criterion_group!(benches, enumeration, verification, cyclotomic, path_statistics);
criterion_main!(benches);
