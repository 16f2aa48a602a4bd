//! Seeded random instances shared by `verify`, `bench` and the tests.

use clap::ValueEnum;
use maxseg::{WeightedItem, WeightedSequence};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    /// Unit weights, values in 0..=9.
    Uniform,
    /// Weights in 1..=5, values in -9..=9.
    General,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` items drawn from `model`.
pub fn sequence<R: Rng>(rng: &mut R, model: Model, n: usize) -> WeightedSequence {
    let items: Vec<_> = (0..n)
        .map(|_| match model {
            Model::Uniform => WeightedItem::new(rng.gen_range(0..=9), 1),
            Model::General => WeightedItem::new(rng.gen_range(-9..=9), rng.gen_range(1..=5)),
        })
        .collect();
    WeightedSequence::new(&items, 0).expect("small values stay in range")
}

/// `1 <= L <= U <= total`.
pub fn width_bounds<R: Rng>(rng: &mut R, total: i64) -> (i64, i64) {
    let l = rng.gen_range(1..=total);
    (l, rng.gen_range(l..=total))
}

/// Random DNA over `ACGT` where each base is G or C with probability `gc`.
pub fn dna<R: Rng>(rng: &mut R, len: usize, gc: f64) -> Vec<u8> {
    (0..len)
        .map(|_| {
            let strong = rng.gen_bool(gc);
            let pick = rng.gen_bool(0.5);
            match (strong, pick) {
                (true, true) => b'G',
                (true, false) => b'C',
                (false, true) => b'A',
                (false, false) => b'T',
            }
        })
        .collect()
}
