use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use homforge_core::chaincx::homology_dims;
use homforge_core::constructions::koszul_complex;
use homforge_core::exterior::{theta_element, THETA_PAIRS};
use homforge_core::gfp::{kron, rank};
use homforge_core::modrep::{cyclic_regular, GModule, GroupAlgebraContext};
use homforge_core::{FieldPrime, SparseMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_sparse(n: usize, density: f64, field: FieldPrime, seed: u64) -> SparseMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if rng.gen_bool(density) {
                t.push((i, j, rng.gen_range(1..field.p())));
            }
        }
    }
    SparseMatrix::from_triplets(n, n, field, t).unwrap()
}

fn linear_algebra(c: &mut Criterion) {
    let f = FieldPrime::new(3).unwrap();
    let m = random_sparse(800, 0.01, f, 1);
    c.bench_function("rank 800x800 1%", |b| b.iter(|| rank(&m)));

    let x = cyclic_regular(f);
    let x2 = kron(&x, &x).unwrap();
    let x4 = kron(&x2, &x2).unwrap();
    c.bench_function("kron 81x81 by 81x81", |b| b.iter(|| kron(&x4, &x4).unwrap()));
}

fn exterior(c: &mut Criterion) {
    let f = FieldPrime::new(3).unwrap();
    c.bench_function("theta rank r=8", |b| {
        b.iter(|| theta_element(f, 8, &THETA_PAIRS).unwrap().left_mult_rank())
    });
}

fn complexes(c: &mut Criterion) {
    let mut g = c.benchmark_group("complexes");
    g.sample_size(10);
    let ctx = GroupAlgebraContext::with_prime(3, 5).unwrap();
    g.bench_function("koszul build r=5", |b| b.iter(|| koszul_complex(ctx).unwrap()));
    let k = koszul_complex(ctx).unwrap();
    g.bench_function("koszul homology r=5", |b| b.iter(|| homology_dims(k.complex()).unwrap()));
    g.bench_function("is_free rank 2 r=5", |b| {
        b.iter_batched(|| GModule::free(ctx, 2), |m| m.is_free(), BatchSize::SmallInput)
    });
    g.finish();
}

criterion_group!(benches, linear_algebra, exterior, complexes);
criterion_main!(benches);
