//! Parallel versus sequential batch checking on the two heaviest
//! workloads of the suite: Euler sum/product instances and record ring
//! laws.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use grosscalc::checks::{random_gross, run_batch, run_batch_seq};
use grosscalc::gross::GrossNumber;
use grosscalc::zetaeta::euler_inequality_check;

fn euler_items(count: usize) -> Vec<(u32, u64, Vec<u32>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    (0..count)
        .map(|_| {
            let s = rng.gen_range(2..=4);
            let n = rng.gen_range(3..=300);
            let r = rng.gen_range(1..=6);
            let depths = (0..r).map(|_| rng.gen_range(1..=15)).collect();
            (s, n, depths)
        })
        .collect()
}

fn euler_check(item: &(u32, u64, Vec<u32>)) -> Option<String> {
    let (s, n, depths) = item;
    match euler_inequality_check(*s, *n, depths) {
        Ok(true) => None,
        other => Some(format!("{other:?}")),
    }
}

fn ring_items(count: usize) -> Vec<(GrossNumber, GrossNumber, GrossNumber)> {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    (0..count)
        .map(|_| {
            (
                random_gross(&mut rng),
                random_gross(&mut rng),
                random_gross(&mut rng),
            )
        })
        .collect()
}

fn ring_check(item: &(GrossNumber, GrossNumber, GrossNumber)) -> Option<String> {
    let (a, b, c) = item;
    let ok = (a + b) + c == a + &(b + c)
        && (a * b) * c == a * &(b * c)
        && a * &(b + c) == (a * b) + (a * c)
        && (b.is_zero() || (a * b).div_exact(b).as_ref() == Ok(a));
    (!ok).then(|| "law violated".to_string())
}

fn bench_euler(c: &mut Criterion) {
    let mut group = c.benchmark_group("euler_batch");
    group.sample_size(10);
    for count in [32usize, 64] {
        let items = euler_items(count);
        group.bench_with_input(BenchmarkId::new("seq", count), &items, |b, items| {
            b.iter(|| run_batch_seq(items, euler_check));
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("par", count), &items, |b, items| {
            b.iter(|| run_batch(items, euler_check));
        });
    }
    group.finish();
}

fn bench_ring_laws(c: &mut Criterion) {
    let mut group = c.benchmark_group("ring_laws_batch");
    group.sample_size(10);
    for count in [2000usize, 8000] {
        let items = ring_items(count);
        group.bench_with_input(BenchmarkId::new("seq", count), &items, |b, items| {
            b.iter(|| run_batch_seq(items, ring_check));
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("par", count), &items, |b, items| {
            b.iter(|| run_batch(items, ring_check));
        });
    }
    group.finish();
}

criterion_group!(benches, bench_euler, bench_ring_laws);
criterion_main!(benches);
