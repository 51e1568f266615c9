use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use plactic::insertion::{phi_left, phi_right};
use plactic::knuth::{fibers_of_perm, knuth_class};
use plactic::schubert::{expand_schubert_with, schubert_bpd, schubert_divdiff, SchubertCache};
use plactic::verify::example;
use plactic::{maxword, minword, Bpd, Permutation};
use plactic_bench::maxwords;

fn insertion(c: &mut Criterion) {
    let word = example::maxword();
    c.bench_function("phi_left example maxword", |b| b.iter(|| phi_left(black_box(&word))));
    c.bench_function("phi_right example maxword", |b| b.iter(|| phi_right(black_box(&word))));

    let d = example::pipe_dream();
    c.bench_function("maxword example", |b| b.iter(|| maxword(black_box(&d))));
    c.bench_function("minword example", |b| b.iter(|| minword(black_box(&d))));

    let mut group = c.benchmark_group("phi_left all maxwords");
    for w in ["4321", "25314", "351624"] {
        let words = maxwords(w);
        group.bench_with_input(BenchmarkId::from_parameter(w), &words, |b, ws| {
            b.iter(|| ws.iter().map(|q| phi_left(q).0).collect::<Vec<_>>())
        });
    }
    group.finish();
}

fn knuth(c: &mut Criterion) {
    let q = example::maxword();
    let mut group = c.benchmark_group("knuth");
    group.sample_size(10);
    group.bench_function("class of example maxword", |b| b.iter(|| knuth_class(black_box(&q))));
    let p: Permutation = "4231".parse().unwrap();
    group.bench_function("fibers of 4231", |b| b.iter(|| fibers_of_perm(black_box(&p))));
    group.finish();
}

fn schubert(c: &mut Criterion) {
    let mut group = c.benchmark_group("schubert");
    for w in ["4321", "153264", "2154763"] {
        let p: Permutation = w.parse().unwrap();
        group.bench_with_input(BenchmarkId::new("bpd", w), &p, |b, p| b.iter(|| schubert_bpd(p)));
        group.bench_with_input(BenchmarkId::new("divdiff", w), &p, |b, p| b.iter(|| schubert_divdiff(p)));
        group.bench_with_input(BenchmarkId::new("enumerate", w), &p, |b, p| b.iter(|| Bpd::all(p).len()));
    }
    let a: Permutation = "1432".parse().unwrap();
    let r: Permutation = "2143".parse().unwrap();
    group.bench_function("expand 1432 * 2143", |b| {
        b.iter(|| {
            let mut cache = SchubertCache::new();
            let f = &cache.get(&a) * &cache.get(&r);
            expand_schubert_with(&f, &mut cache).unwrap()
        })
    });
    group.finish();
}

criterion_group!(benches, insertion, knuth, schubert);
criterion_main!(benches);
