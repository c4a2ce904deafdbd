//! Seeded random inputs for property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactalg::{Poly1, Rational};
use crate::operators::{op_from_d_series, EndoOp};
use crate::sequence::PolySeq;

fn small_rational(rng: &mut impl Rng, nonzero: bool) -> Rational {
    loop {
        let n: i64 = rng.gen_range(-9..=9);
        if nonzero && n == 0 {
            continue;
        }
        let d: i64 = rng.gen_range(1..=4);
        return Rational::new(n, d);
    }
}

/// Numerators uniform in `[-9, 9]`, denominators in `{1, 2, 3, 4}`, with a
/// nonzero leading coefficient so that `deg p_n = n`.
pub fn random_sequence(seed: u64, trunc: usize) -> PolySeq {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    PolySeq::from_fn(trunc, |n| {
        let coeffs = (0..=n).map(|k| small_rational(&mut rng, k == n)).collect();
        Poly1::from_coeffs(coeffs)
    })
    .expect("leading coefficients are nonzero")
}

/// A random `Σ c_k D^k` with `c_0 != 0`: shift-invariant and invertible.
pub fn random_shift_invariant(seed: u64, trunc: usize) -> EndoOp {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs: Vec<Rational> = (0..=trunc).map(|k| small_rational(&mut rng, k == 0)).collect();
    op_from_d_series(&coeffs)
}

pub fn random_rational(seed: u64) -> Rational {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    small_rational(&mut rng, false)
}
