use std::sync::Arc;

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use haar_core::aut::refine;
use haar_core::{
    atlas, automorphism_group, haar_graph, haar_verdict, ColoredPartition, ConnectionSet, Graph,
    PermGroup, Permutation, Role,
};

fn haar(name: &str, s: &str) -> (Arc<haar_core::FiniteGroup>, ConnectionSet, Graph) {
    let g = Arc::new(atlas(name).unwrap());
    let cs = ConnectionSet::parse(&g, s, Role::S).unwrap();
    let graph = haar_graph(Arc::clone(&g), &cs).unwrap().into_graph();
    (g, cs, graph)
}

fn automorphisms(c: &mut Criterion) {
    for (name, s) in [
        ("D6xZ3", "1,a,b,c,abc"),
        ("Q8xZ7", "1,a,c,abc^-1,bc"),
        ("Z7", "0,1,3"),
    ] {
        let (_, _, graph) = haar(name, s);
        c.bench_function(&format!("aut H({name})"), |b| {
            b.iter(|| automorphism_group(black_box(&graph)).unwrap())
        });
    }
    let k = Graph::complete_bipartite(8, 8);
    c.bench_function("aut K8,8", |b| {
        b.iter(|| automorphism_group(black_box(&k)).unwrap())
    });
}

fn verdicts(c: &mut Criterion) {
    let (g, cs, _) = haar("Q8xZ2", "1,a,b,c");
    c.bench_function("verdict Q8xZ2", |b| {
        b.iter(|| haar_verdict(&g, black_box(&cs)).unwrap())
    });
}

fn schreier_sims(c: &mut Criterion) {
    let n = 12;
    let cycle: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    let gens = vec![
        Permutation::from_cycles(n, &[&[0, 1]]).unwrap(),
        Permutation::from_images(cycle).unwrap(),
    ];
    c.bench_function("schreier-sims S12", |b| {
        b.iter(|| PermGroup::from_generators(n, black_box(&gens)).unwrap())
    });
}

fn refinement(c: &mut Criterion) {
    let (_, _, graph) = haar("D12xZ5", "1,a,b,c,abc");
    let unit = ColoredPartition::unit(graph.order());
    c.bench_function("refine H(D12xZ5)", |b| {
        b.iter(|| refine(black_box(&graph), &unit))
    });
}

criterion_group!(benches, automorphisms, verdicts, schreier_sims, refinement);
criterion_main!(benches);
