use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use cubical::enumerative::{cubical_h_vectors, f_vector};
use cubical::generators::{cube_boundary, cubical_torus, pile_boundary, pile_of_cubes};
use cubical::verify::{verify_adin_ds, verify_theorem_37, verify_theorem_42};
use cubical::{CubicalCell, CubicalComplex};

fn pile_cells(sides: &[usize]) -> Vec<CubicalCell> {
    let pile = pile_of_cubes(sides).unwrap();
    pile.as_cubical()
        .unwrap()
        .cells()
        .map(|f| f.witness().clone())
        .collect()
}

fn build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build");
    for sides in [&[4usize, 4, 4][..], &[6, 6, 6], &[3, 3, 3, 3]] {
        let cells = pile_cells(sides);
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{sides:?}")),
            &cells,
            |b, cells| b.iter(|| CubicalComplex::build(black_box(cells.clone())).unwrap()),
        );
    }
    group.finish();
}

fn counting(c: &mut Criterion) {
    let torus = cubical_torus(&[8, 8, 8]).unwrap();
    let torus = torus.as_cubical().unwrap();
    c.bench_function("f_vector torus 8 8 8", |b| {
        b.iter(|| f_vector(black_box(torus)))
    });
    c.bench_function("link eulers torus 8 8 8", |b| {
        b.iter(|| black_box(torus).link_eulers())
    });
    let cube = cube_boundary(6).unwrap();
    let cube = cube.as_cubical().unwrap();
    c.bench_function("h vectors cube boundary 6", |b| {
        b.iter(|| cubical_h_vectors(black_box(cube)).unwrap())
    });
}

fn verifiers(c: &mut Criterion) {
    let pile = pile_of_cubes(&[5, 5, 2, 4]).unwrap();
    c.bench_function("with boundary pile 5 5 2 4", |b| {
        b.iter(|| verify_theorem_42(black_box(pile.as_cubical().unwrap()), &pile.claim))
    });
    let torus = cubical_torus(&[6, 6, 6]).unwrap();
    c.bench_function("adin torus 6 6 6", |b| {
        b.iter(|| verify_adin_ds(black_box(torus.as_cubical().unwrap())))
    });
    let sphere = pile_boundary(&[2, 2, 2, 1, 1]).unwrap();
    c.bench_function("g2 pile boundary 2 2 2 1 1", |b| {
        b.iter(|| verify_theorem_37(black_box(sphere.as_cubical().unwrap()), &sphere.claim))
    });
}

criterion_group!(benches, build, counting, verifiers);
criterion_main!(benches);
