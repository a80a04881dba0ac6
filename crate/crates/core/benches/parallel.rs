use binmorph::periodicity::{search_min_up_with, SearchBounds};
use binmorph::witness::falsify::{falsify_with, FalsifyConfig};
use binmorph::{BinaryMorphism, Exec, WordStream};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn bench_falsify(c: &mut Criterion) {
    let mut group = c.benchmark_group("falsify");
    group.sample_size(10);
    let config = FalsifyConfig {
        trials: 100,
        ..FalsifyConfig::new(42)
    };
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(name, config.trials), &config, |b, config| {
            b.iter(|| falsify_with(black_box(config), exec).unwrap())
        });
    }
    group.finish();
}

fn bench_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search_min_up");
    // A commuting image makes every candidate period scan the whole word.
    let h = BinaryMorphism::new("abcabcabcabc", "abc");
    let image = h.apply(&WordStream::fibonacci().prefix(1 << 16).unwrap()).unwrap();
    let bounds = SearchBounds {
        max_preperiod: 64,
        max_period: 2048,
        min_full_periods: 3,
    };
    let shifted = {
        let mut s = image.clone().into_symbols();
        s.insert(0, b'x');
        s
    };
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, "periodic"), |b| {
            b.iter(|| search_min_up_with(black_box(&image), bounds, exec))
        });
        group.bench_function(BenchmarkId::new(name, "no-fit"), |b| {
            b.iter(|| search_min_up_with(black_box(&shifted[..]), SearchBounds { max_preperiod: 0, ..bounds }, exec))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_falsify, bench_search);
criterion_main!(benches);
