use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use superdim::corpus;
use superdim::hcgroup::HcGroup;
use superdim::sdim::{ksdim, KsdimOptions};
use superdim::selftest::{self, Config};
use superdim::{Exec, Field, Ring, SuperAlgebra};

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

// odd-parameter search over subsets of candidates
fn bench_ksdim(c: &mut Criterion) {
    let mut group = c.benchmark_group("ksdim_search");
    group.sample_size(10);
    let ring = Ring::new(&["x1", "x2"], &["y1", "y2", "y3", "y4"], Field::Rational).unwrap();
    let y = |n: &str| ring.generator(n).unwrap();
    let x1 = ring.generator("x1").unwrap();
    let rel = &(&x1 * &y("y1")) * &y("y2");
    let a = SuperAlgebra::new("A", ring.clone(), vec![rel]).unwrap();
    for (name, exec) in MODES {
        let opts = KsdimOptions {
            exec,
            random_combinations: 6,
            ..Default::default()
        };
        group.bench_with_input(BenchmarkId::from_parameter(name), &opts, |b, opts| {
            b.iter(|| black_box(ksdim(&a, opts).unwrap().dim));
        });
    }
    group.finish();
}

// batches of group products, one normal form per element pair
fn bench_hc_batch(c: &mut Criterion) {
    let mut group = c.benchmark_group("hc_products");
    group.sample_size(10);
    let coeff = SuperAlgebra::free(
        "L",
        Ring::new(&[] as &[&str], &["s", "t", "u", "w"], Field::Rational).unwrap(),
    );
    let grp = HcGroup::new(corpus::pair("gl11.shc"), coeff).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let pairs: Vec<_> = (0..64)
        .map(|_| {
            (
                grp.random_element(&mut rng).unwrap(),
                grp.random_element(&mut rng).unwrap(),
            )
        })
        .collect();
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| black_box(exec.map(&pairs, |(x, y)| grp.mul(x, y).unwrap())));
        });
    }
    group.finish();
}

fn bench_selftest(c: &mut Criterion) {
    let mut group = c.benchmark_group("selftest");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| black_box(selftest::run(&Config { seed: 0, exec }).passed()));
        });
    }
    group.finish();
}

criterion_group!(benches, bench_ksdim, bench_hc_batch, bench_selftest);
criterion_main!(benches);
