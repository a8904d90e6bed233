//! Seeded random instance generation for property suites.
//!
//! All generation is parameterized by an explicit seed (ChaCha8); there is
//! no ambient randomness, so identical seeds reproduce identical instances.

use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, SkewMatrix};
use crate::pfaffian::pfaffian;
use crate::scalar::{rat, rat_int, Scalar};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn draw_int(r: &mut ChaCha8Rng, bound: i64) -> i64 {
    r.random_range(-bound..=bound)
}

fn draw_nonzero_int(r: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let v = draw_int(r, bound);
        if v != 0 {
            return v;
        }
    }
}

/// Random antisymmetric matrix with integer entries in `[-entry_range,
/// entry_range]` on the strict upper triangle, mirrored with negation.
pub fn random_skew(dim: usize, seed: u64, entry_range: i64) -> SkewMatrix<BigRational> {
    let mut r = rng(seed);
    SkewMatrix::from_upper(dim, |_, _| rat_int(draw_int(&mut r, entry_range)))
}

/// Random antisymmetric matrix with nonzero Pfaffian, found by bumping the
/// seed. Fails only for odd dimensions, where no such matrix exists.
pub fn random_invertible_skew(
    dim: usize,
    seed: u64,
    entry_range: i64,
) -> Result<SkewMatrix<BigRational>> {
    if !dim.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "invertible antisymmetric matrices need even dimension, got {dim}"
        )));
    }
    for bump in 0..1000 {
        let a = random_skew(dim, seed.wrapping_add(bump * 0x9e37_79b9), entry_range);
        if dim == 0 || !Scalar::is_zero(&pfaffian(&a)?) {
            return Ok(a);
        }
    }
    Err(Error::Precondition(format!(
        "no invertible skew instance found near seed {seed}"
    )))
}

/// Random rectangular matrix with small integer entries.
pub fn random_matrix(rows: usize, cols: usize, seed: u64, entry_range: i64) -> Matrix<BigRational> {
    let mut r = rng(seed);
    Matrix::from_fn(rows, cols, |_, _| rat_int(draw_int(&mut r, entry_range)))
}

/// Random rationals with numerators in `[-max_num, max_num]` and
/// denominators in `[1, max_den]`.
pub fn random_rationals(count: usize, seed: u64, max_num: i64, max_den: i64) -> Vec<BigRational> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| rat(draw_int(&mut r, max_num), r.random_range(1..=max_den)))
        .collect()
}

/// Random nonzero rationals (nonzero numerator, small denominator).
pub fn random_nonzero_rationals(
    count: usize,
    seed: u64,
    max_num: i64,
    max_den: i64,
) -> Vec<BigRational> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| rat(draw_nonzero_int(&mut r, max_num), r.random_range(1..=max_den)))
        .collect()
}

/// Random rational kernel instance: a seeded coupling matrix (optionally
/// invertible), random basis tables, and nonzero rational atom weights.
pub fn random_kernel_instance(
    n: usize,
    points: usize,
    seed: u64,
    entry_range: i64,
    invertible_mu: bool,
) -> Result<crate::measure::KernelInstance<BigRational>> {
    let mu = if invertible_mu {
        random_invertible_skew(n, seed, entry_range)?
    } else {
        random_skew(n, seed, entry_range)
    };
    let plus = random_matrix(points, n, seed.wrapping_add(1), entry_range);
    let minus = random_matrix(points, n, seed.wrapping_add(2), entry_range);
    let weights = random_nonzero_rationals(points, seed.wrapping_add(3), 3, 2);
    let basis = crate::measure::BasisTable::new(plus, minus)?;
    let space = crate::measure::MeasureSpace::atoms(weights);
    crate::measure::KernelInstance::new(mu, basis, space)
}

/// Random permutation of `0..n` with its sign, by Fisher-Yates with
/// transposition counting.
pub fn random_permutation(n: usize, seed: u64) -> (Vec<usize>, i64) {
    let mut r = rng(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sign = 1i64;
    for i in (1..n).rev() {
        let j = r.random_range(0..=i);
        if j != i {
            perm.swap(i, j);
            sign = -sign;
        }
    }
    (perm, sign)
}
