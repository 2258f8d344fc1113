use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::{max_abs, Rational};

/// Bound on numerators and denominators of sampled coordinates.
pub const COORD_BITS: u32 = 16;

/// Generator for sample `index` of a run seeded with `seed`; independent of scheduling.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Coordinates `a/b` with `a` uniform in `[-2^16, 2^16]` and `b` uniform in `[1, 2^16]`.
pub fn random_direction(n: usize, rng: &mut impl Rng) -> Vec<Rational> {
    let lim = 1i64 << COORD_BITS;
    (0..n)
        .map(|_| {
            let a = rng.gen_range(-lim..=lim);
            let b = rng.gen_range(1..=lim);
            Rational::new(BigInt::from(a), BigInt::from(b))
        })
        .collect()
}

/// Scales `v` by a positive rational so that its largest coordinate has absolute value 1.
pub fn normalize(v: &[Rational]) -> Vec<Rational> {
    let m = max_abs(v);
    if m.is_zero() || m.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &m).collect()
}

/// A nonzero direction from `rng`, normalized.
pub fn random_unit_direction(n: usize, rng: &mut impl Rng) -> Vec<Rational> {
    loop {
        let v = random_direction(n, rng);
        if v.iter().any(|x| !x.is_zero()) {
            return normalize(&v);
        }
    }
}

/// Coordinatewise `v + c e`.
pub fn shift(v: &[Rational], c: &Rational, e: &[Rational]) -> Vec<Rational> {
    v.iter().zip(e).map(|(x, y)| x + c * y).collect()
}
