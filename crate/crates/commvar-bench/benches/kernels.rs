use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use commvar_core::excep::{self, PairChoice};
use commvar_core::liealg::{build_model, Family};
use commvar_core::satake;
use commvar_core::strata;
use commvar_core::RatMat;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn bench_rank(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let model = build_model(Family::BDI { n: 3, m: 4 }).unwrap();
    let mats: Vec<RatMat> = (0..16).map(|_| model.random_g1(&mut rng)).collect();
    c.bench_function("rank_7x7_exact", |b| {
        let mut i = 0;
        b.iter(|| {
            i = (i + 1) % mats.len();
            mats[i].rank()
        })
    });
}

fn bench_centralizer(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let model = build_model(Family::AIIIGl { n: 2, m: 4 }).unwrap();
    c.bench_function("centralizer_dims_aiii_2_4", |b| {
        b.iter_batched(
            || model.random_g1(&mut rng),
            |x| model.centralizer_dims(&x),
            BatchSize::SmallInput,
        )
    });
}

fn bench_subdiagrams(c: &mut Criterion) {
    let d = satake::catalog("E6/sl6+sl2").unwrap();
    c.bench_function("subdiagram_classes_rank6", |b| b.iter(|| d.all_subdiagrams().len()));
}

fn bench_joint_kernel(c: &mut Criterion) {
    // warm the module cache so the bench isolates the kernel computation
    let _ = excep::irrep(4, 4);
    c.bench_function("joint_kernel_133", |b| {
        b.iter(|| excep::pn_pair_check_e7(PairChoice::AlphaAlphaBeta))
    });
}

fn bench_witness(c: &mut Criterion) {
    c.bench_function("stratum_witness_3_6", |b| {
        b.iter(|| {
            for q in strata::stratum_range(3, 6) {
                let pair = strata::witness_aiii(3, 6, q).unwrap();
                strata::rank_sum_check(&pair);
            }
        })
    });
}

criterion_group!(
    benches,
    bench_rank,
    bench_centralizer,
    bench_subdiagrams,
    bench_joint_kernel,
    bench_witness
);
criterion_main!(benches);
