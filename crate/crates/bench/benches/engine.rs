use criterion::{black_box, criterion_group, criterion_main, Criterion};

use sigma_core::enumeration::free_trees;
use sigma_core::families::{caterpillar_uniform, greedy_tree, three_level_tree, GreedyVariant};
use sigma_core::indices::sigma;
use sigma_core::tree::{DegreeSequence, Tree};

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("free_trees_n12_count", |b| {
        b.iter(|| black_box(free_trees(12).unwrap().count()))
    });
    c.bench_function("free_trees_n10_sigma_sum", |b| {
        b.iter(|| {
            let total: i128 = free_trees(10).unwrap().map(|t| sigma(&t).0).sum();
            black_box(total)
        })
    });
}

fn bench_canonical_form(c: &mut Criterion) {
    // A moderately bushy fixed tree.
    let tree = three_level_tree(6, 3, 3, 3).unwrap();
    c.bench_function("canonical_form_n510", |b| {
        b.iter(|| black_box(tree.canonical_form()))
    });
}

fn bench_prufer_decode(c: &mut Criterion) {
    let seq: Vec<u32> = (0..62u32).map(|i| (i * 7) % 64).collect();
    c.bench_function("prufer_decode_n64", |b| {
        b.iter(|| black_box(Tree::from_prufer(&seq).unwrap()))
    });
}

fn bench_constructions(c: &mut Criterion) {
    c.bench_function("caterpillar_uniform_1000x4", |b| {
        b.iter(|| black_box(caterpillar_uniform(1000, 4).unwrap()))
    });
    let ds = DegreeSequence::new({
        let mut d = vec![6; 100];
        d.extend(vec![1; 402]);
        d
    })
    .unwrap();
    c.bench_function("greedy_bfs_n502", |b| {
        b.iter(|| black_box(greedy_tree(&ds, GreedyVariant::Bfs).unwrap()))
    });
}

fn bench_verify_pipeline(c: &mut Criterion) {
    c.bench_function("verify_gutman_nmax8", |b| {
        b.iter(|| {
            let doc = sigma_core::report::run_verify(
                sigma_core::ClaimSelector::Gutman,
                8,
                sigma_core::EvalMode::Exact,
            )
            .unwrap();
            black_box(doc.to_json())
        })
    });
}

criterion_group!(
    benches,
    bench_enumeration,
    bench_canonical_form,
    bench_prufer_decode,
    bench_constructions,
    bench_verify_pipeline
);
criterion_main!(benches);
