use criterion::{black_box, criterion_group, criterion_main, Criterion};
use halftwist::complex::{check_path, random_vertex, straighten, RawPath};
use halftwist::geometry::{code_crossing_number, ArcCode};
use halftwist::morphism::{verify_homomorphism, MorphismKind, MorphismSpec};
use halftwist::word_problem::{Backend, Solver};
use halftwist::{ArcOracle, BraidWord};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn word_problem(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let u = BraidWord::random(6, 30, &mut rng);
    let v = BraidWord::new(6, u.letters().iter().chain(&[2, 3, 2, -3, -2, -3]).copied()).unwrap();
    for (name, backend) in [("free", Backend::FreeGroup), ("linear", Backend::Linear)] {
        let solver = Solver::with_backend(backend);
        c.bench_function(&format!("equal/{name}/n6_len30"), |b| {
            b.iter(|| solver.equal(black_box(&u), black_box(&v)).unwrap())
        });
    }
}

fn geometry(c: &mut Criterion) {
    let a = ArcCode::straight(2, 7)
        .unwrap()
        .apply_word(&[1, 2, -3, 4, 5, -2, 1, 3, 6, -4])
        .unwrap();
    let b = ArcCode::straight(4, 7)
        .unwrap()
        .apply_word(&[-1, 3, 2, -5, 6, 4, -2])
        .unwrap();
    c.bench_function("crossing_number/n7", |bch| {
        bch.iter(|| code_crossing_number(black_box(&a), black_box(&b)).unwrap())
    });
}

fn complex(c: &mut Criterion) {
    let v = random_vertex(8, 3, 10, 7).unwrap();
    c.bench_function("straighten/n8_k3", |b| {
        b.iter(|| straighten(black_box(&v)).unwrap())
    });
    let path = RawPath::from(&straighten(&v).unwrap().path);
    c.bench_function("check_path/n8_k3", |b| {
        b.iter(|| check_path(black_box(&path), &ArcOracle::default()).unwrap())
    });
}

fn morphisms(c: &mut Criterion) {
    let m = MorphismSpec::new(MorphismKind::InclusionWithTwist { s: 2, t: 2 }, 8)
        .build()
        .unwrap();
    c.bench_function("verify/inclusion_n8", |b| {
        b.iter(|| verify_homomorphism(black_box(&m), &Solver::default()).unwrap())
    });
}

criterion_group!(benches, word_problem, geometry, complex, morphisms);
criterion_main!(benches);
