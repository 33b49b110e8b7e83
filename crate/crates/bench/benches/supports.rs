use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cherednik_bench::{chamber, kappa_zero, labels, level_three, CHAMBER_CHARGES};
use cherednik_core::crystal::Crystal;
use cherednik_core::supports::table;
use cherednik_core::wallcross::wc_pair;
use cherednik_core::{KmCrystal, PairSide, Parameter};

fn support_tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("table");
    group.sample_size(10);
    for s2 in CHAMBER_CHARGES {
        let param = Parameter::from(chamber(s2));
        group.bench_with_input(BenchmarkId::new("level2_n6", s2), &param, |b, p| {
            b.iter(|| table(p, 6).expect("table"))
        });
    }
    let param = Parameter::from(level_three());
    group.bench_function("level3_n4", |b| b.iter(|| table(&param, 4).expect("table")));
    let param = kappa_zero();
    group.bench_function("kappa_zero_n8", |b| {
        b.iter(|| table(&param, 8).expect("table"))
    });
    group.finish();
}

fn crystal_ascent(c: &mut Criterion) {
    let km = KmCrystal::new(chamber(-4));
    let universe = labels(2, 8);
    c.bench_function("km_ascend_level2_n8", |b| {
        b.iter(|| universe.iter().map(|l| km.ascend(l).1.len()).sum::<usize>())
    });
}

fn pair_crossing(c: &mut Criterion) {
    let universe = labels(2, 8);
    c.bench_function("wc_pair_m2_n8", |b| {
        b.iter(|| {
            for l in &universe {
                wc_pair(l.comp(0), l.comp(1), 2, PairSide::First).expect("wall-crossing");
            }
        })
    });
}

criterion_group!(benches, support_tables, crystal_ascent, pair_crossing);
criterion_main!(benches);
