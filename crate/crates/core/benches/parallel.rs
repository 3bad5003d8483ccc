use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewcoh::algebras;
use skewcoh::anick::AnickResolution;
use skewcoh::barcoh::{BarComplex, DEFAULT_BUDGET_MB};
use skewcoh::ffmat::{Elimination, FMatrix, PrimeField, Route};
use skewcoh::Exec;

const POLICIES: [Exec; 2] = [Exec::Sequential, Exec::Parallel];

fn random_matrix(f: PrimeField, rows: usize, cols: usize, seed: u64) -> FMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data = (0..rows * cols).map(|_| rng.gen_range(0..f.p())).collect();
    FMatrix::from_dense(f, rows, cols, data).unwrap()
}

fn dense_rank(c: &mut Criterion) {
    let f = PrimeField::new(7).unwrap();
    let m = random_matrix(f, 400, 400, 1);
    let mut group = c.benchmark_group("dense_rank_400");
    for exec in POLICIES {
        let how = Elimination {
            route: Route::Dense,
            exec,
            ..Elimination::default()
        };
        group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &how, |b, how| {
            b.iter(|| m.rank_with(how))
        });
    }
    group.finish();
}

fn bar_differential(c: &mut Criterion) {
    let s = algebras::smash(3).unwrap();
    let mut group = c.benchmark_group("smash3_bar_d2");
    group.sample_size(10);
    for exec in POLICIES {
        group.bench_function(format!("{exec:?}"), |b| {
            b.iter(|| {
                let bar = BarComplex::new(&s.algebra, DEFAULT_BUDGET_MB, exec).unwrap();
                bar.differential_matrix(2).unwrap().cols()
            })
        });
    }
    group.finish();
}

fn anick_resolution(c: &mut Criterion) {
    let a = algebras::build_a(7).unwrap();
    let s = algebras::smash(3).unwrap();
    let mut group = c.benchmark_group("anick");
    group.sample_size(10);
    for exec in POLICIES {
        group.bench_function(format!("A_7 to degree 12 {exec:?}"), |b| {
            b.iter(|| AnickResolution::new(&a, 12, exec).unwrap().ext_dims(11).unwrap())
        });
        group.bench_function(format!("smash(3) to degree 6 {exec:?}"), |b| {
            b.iter(|| AnickResolution::new(&s.algebra, 6, exec).unwrap().ext_dims(5).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, dense_rank, bar_differential, anick_resolution);
criterion_main!(benches);
