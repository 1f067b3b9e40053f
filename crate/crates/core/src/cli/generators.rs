//! Seeded random basis monomials, monomials and polynomials.

use rand::Rng;

use crate::multivector::{Blade, Multivector};
use crate::scalar::Scalar;

/// Uniform blade among the `2^dim` basis elements.
pub fn rd_clibasmon<R: Rng>(dim: usize, rng: &mut R) -> Blade {
    Blade::from_mask(rng.gen_range(0..(1u32 << dim)) as u16)
}

/// Nonzero coefficient `n/d` with `|n| <= 9`, `1 <= d <= 3`.
fn small_rational<R: Rng>(rng: &mut R) -> Scalar {
    let mut n = 0;
    while n == 0 {
        n = rng.gen_range(-9..=9);
    }
    Scalar::from_ratio(n, rng.gen_range(1..=3))
}

pub fn rd_climon<R: Rng>(dim: usize, rng: &mut R) -> Multivector {
    let b = rd_clibasmon(dim, rng);
    Multivector::term(dim, b, small_rational(rng))
}

/// Sum of `nterms` random monomials; coinciding blades merge.
pub fn rd_clipolynom<R: Rng>(dim: usize, rng: &mut R, nterms: usize) -> Multivector {
    let mut out = Multivector::zero(dim);
    for _ in 0..nterms {
        out += rd_climon(dim, rng);
    }
    out
}
