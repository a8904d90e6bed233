//! Measure spaces as weighted point sets, function-system tables, moment
//! matrices, de Bruijn's integral formula, and the Gauss-Hermite tensor
//! grid on the complex plane.
//!
//! Integration is always a finite weighted sum `sum_i w_i f(x_i)`: discrete
//! spaces list their atoms, continuous ones enter through quadrature nodes
//! whose weights already absorb the density factor.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, SkewMatrix};
use crate::pfaffian::pfaffian;
use crate::scalar::{factorial, Scalar};

/// Tuple sums are capped at this many inner evaluations.
pub const TUPLE_WORK_GUARD: u128 = 10_000_000;

/// Finite weighted point set.
#[derive(Clone, PartialEq, Debug)]
pub struct MeasureSpace<S> {
    points: Vec<S>,
    weights: Vec<S>,
}

impl<S: Scalar> MeasureSpace<S> {
    pub fn new(points: Vec<S>, weights: Vec<S>) -> Result<Self> {
        if points.len() != weights.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} points vs {} weights",
                points.len(),
                weights.len()
            )));
        }
        if !S::EXACT {
            for w in &weights {
                if !w.magnitude().is_finite() {
                    return Err(Error::Precondition("weights must be finite".into()));
                }
            }
        }
        Ok(Self { points, weights })
    }

    /// Opaque atoms labelled 0, 1, 2, ... with the given weights.
    pub fn atoms(weights: Vec<S>) -> Self {
        let points = (0..weights.len()).map(|i| S::from_int(i as i64)).collect();
        Self { points, weights }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &S {
        &self.points[i]
    }

    pub fn weight(&self, i: usize) -> &S {
        &self.weights[i]
    }

    pub fn points(&self) -> &[S] {
        &self.points
    }

    pub fn weights(&self) -> &[S] {
        &self.weights
    }

    /// Weighted sum `sum_i w_i f(i)` over point indices.
    pub fn integrate(&self, mut f: impl FnMut(usize) -> S) -> S {
        let mut acc = S::zero();
        for i in 0..self.len() {
            acc = acc + self.weights[i].clone() * f(i);
        }
        acc
    }
}

/// Values of the function vectors at the points of a measure space:
/// `plus[i][j] = phi^+_j(x_i)` and `minus[i][j] = phi^-_j(x_i)`.
#[derive(Clone, PartialEq, Debug)]
pub struct BasisTable<S> {
    plus: Matrix<S>,
    minus: Matrix<S>,
}

impl<S: Scalar> BasisTable<S> {
    pub fn new(plus: Matrix<S>, minus: Matrix<S>) -> Result<Self> {
        if plus.rows() != minus.rows() || plus.cols() != minus.cols() {
            return Err(Error::DimensionMismatch(format!(
                "plus table {}x{} vs minus table {}x{}",
                plus.rows(),
                plus.cols(),
                minus.rows(),
                minus.cols()
            )));
        }
        Ok(Self { plus, minus })
    }

    /// Number of functions in each vector.
    pub fn n(&self) -> usize {
        self.plus.cols()
    }

    /// Number of tabulated points.
    pub fn points(&self) -> usize {
        self.plus.rows()
    }

    pub fn plus(&self) -> &Matrix<S> {
        &self.plus
    }

    pub fn minus(&self) -> &Matrix<S> {
        &self.minus
    }

    pub fn plus_row(&self, i: usize) -> &[S] {
        self.plus.row(i)
    }

    pub fn minus_row(&self, i: usize) -> &[S] {
        self.minus.row(i)
    }
}

/// An antisymmetric coupling matrix, a basis table and a measure space,
/// with the four kernel blocks `Phi^{ss'}(x_i, x_j) = phi^s(x_i) mu
/// phi^{s' T}(x_j)` precomputed on the point grid.
#[derive(Clone, Debug)]
pub struct KernelInstance<S> {
    mu: SkewMatrix<S>,
    basis: BasisTable<S>,
    space: MeasureSpace<S>,
    phi_pp: Matrix<S>,
    phi_pm: Matrix<S>,
    phi_mp: Matrix<S>,
    phi_mm: Matrix<S>,
}

impl<S: Scalar> KernelInstance<S> {
    pub fn new(mu: SkewMatrix<S>, basis: BasisTable<S>, space: MeasureSpace<S>) -> Result<Self> {
        if basis.n() != mu.dim() {
            return Err(Error::DimensionMismatch(format!(
                "basis has {} functions but mu is {}x{}",
                basis.n(),
                mu.dim(),
                mu.dim()
            )));
        }
        if basis.points() != space.len() {
            return Err(Error::DimensionMismatch(format!(
                "basis tabulates {} points but the space has {}",
                basis.points(),
                space.len()
            )));
        }
        let plus_mu = basis.plus.matmul(mu.matrix())?;
        let minus_mu = basis.minus.matmul(mu.matrix())?;
        let plus_t = basis.plus.transpose();
        let minus_t = basis.minus.transpose();
        let phi_pp = plus_mu.matmul(&plus_t)?;
        let phi_pm = plus_mu.matmul(&minus_t)?;
        let phi_mp = minus_mu.matmul(&plus_t)?;
        let phi_mm = minus_mu.matmul(&minus_t)?;
        Ok(Self {
            mu,
            basis,
            space,
            phi_pp,
            phi_pm,
            phi_mp,
            phi_mm,
        })
    }

    pub fn mu(&self) -> &SkewMatrix<S> {
        &self.mu
    }

    pub fn basis(&self) -> &BasisTable<S> {
        &self.basis
    }

    pub fn space(&self) -> &MeasureSpace<S> {
        &self.space
    }

    /// Dimension of the coupling matrix.
    pub fn n(&self) -> usize {
        self.mu.dim()
    }

    pub fn points(&self) -> usize {
        self.space.len()
    }

    pub fn phi_pp(&self, i: usize, j: usize) -> &S {
        self.phi_pp.get(i, j)
    }

    pub fn phi_pm(&self, i: usize, j: usize) -> &S {
        self.phi_pm.get(i, j)
    }

    pub fn phi_mp(&self, i: usize, j: usize) -> &S {
        self.phi_mp.get(i, j)
    }

    pub fn phi_mm(&self, i: usize, j: usize) -> &S {
        self.phi_mm.get(i, j)
    }

    /// Pads to dimension `n + 1` by appending an identically-zero function
    /// and a zero row/column on the coupling matrix. All kernel values are
    /// unchanged, so every verification result is too.
    pub fn padded(&self) -> Result<Self> {
        let n = self.n();
        let grow = |m: &Matrix<S>| {
            Matrix::from_fn(m.rows(), n + 1, |i, j| {
                if j < n {
                    m.get(i, j).clone()
                } else {
                    S::zero()
                }
            })
        };
        let basis = BasisTable::new(grow(&self.basis.plus), grow(&self.basis.minus))?;
        let mu = SkewMatrix::from_upper(n + 1, |i, j| {
            if j < n {
                self.mu.get(i, j).clone()
            } else {
                S::zero()
            }
        });
        Self::new(mu, basis, self.space.clone())
    }
}

/// The antisymmetrized moment matrix
/// `g = sum_i w_i (phi^-(x_i)^T phi^+(x_i) - phi^+(x_i)^T phi^-(x_i))`,
/// validated as antisymmetric on construction.
pub fn moment_matrix_g<S: Scalar>(k: &KernelInstance<S>) -> Result<SkewMatrix<S>> {
    let n = k.n();
    let basis = k.basis();
    let space = k.space();
    let g = Matrix::from_fn(n, n, |r, c| {
        let mut acc = S::zero();
        for i in 0..space.len() {
            let plus = basis.plus_row(i);
            let minus = basis.minus_row(i);
            let term = minus[r].clone() * plus[c].clone() - plus[r].clone() * minus[c].clone();
            acc = acc + space.weight(i).clone() * term;
        }
        acc
    });
    SkewMatrix::new(g)
}

/// Iterates all ordered `arity`-tuples over `0..base` in odometer order.
pub(crate) fn for_each_tuple<E>(
    base: usize,
    arity: usize,
    mut f: impl FnMut(&[usize]) -> std::result::Result<(), E>,
) -> std::result::Result<(), E> {
    let mut idx = vec![0usize; arity];
    if arity == 0 {
        return f(&idx);
    }
    if base == 0 {
        return Ok(());
    }
    loop {
        f(&idx)?;
        let mut pos = arity;
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < base {
                break;
            }
            idx[pos] = 0;
        }
    }
}

pub(crate) fn check_tuple_guard(base: usize, arity: usize) -> Result<()> {
    let mut required: u128 = 1;
    for _ in 0..arity {
        required = required.saturating_mul(base.max(1) as u128);
    }
    if required > TUPLE_WORK_GUARD {
        return Err(Error::WorkGuard {
            required,
            cap: TUPLE_WORK_GUARD,
        });
    }
    Ok(())
}

/// Both sides of de Bruijn's integral formula for a `2l`-function table:
/// the `l`-fold weighted sum of the interleaved `2l x 2l` determinant on
/// the left, `l! pf[g^T]` on the right.
///
/// For each integration variable `x_i` the determinant takes the row pair
/// `(phi^+(x_i), phi^-(x_i))`; the coupling matrix of the instance is
/// ignored.
pub fn de_bruijn_sides<S: Scalar>(k: &KernelInstance<S>, l: usize) -> Result<(S, S)> {
    let n = k.basis().n();
    if n != 2 * l {
        return Err(Error::DimensionMismatch(format!(
            "table has {n} functions, need {} for an {l}-fold integral",
            2 * l
        )));
    }
    let space = k.space();
    let basis = k.basis();
    check_tuple_guard(space.len(), l)?;

    let mut lhs = S::zero();
    for_each_tuple(space.len(), l, |tuple| -> Result<()> {
        let det_matrix = Matrix::from_fn(2 * l, 2 * l, |r, c| {
            let point = tuple[r / 2];
            if r % 2 == 0 {
                basis.plus_row(point)[c].clone()
            } else {
                basis.minus_row(point)[c].clone()
            }
        });
        let mut term = det_matrix.determinant()?;
        for &p in tuple {
            term = term * space.weight(p).clone();
        }
        lhs = lhs.clone() + term;
        Ok(())
    })?;

    let g = moment_matrix_g(k)?;
    let rhs = factorial::<S>(l) * pfaffian(&g.transpose())?;
    Ok((lhs, rhs))
}

/// Nodes and weights of the `n`-point Gauss-Hermite rule for the weight
/// `exp(-x^2)` on the real line, by Newton iteration on the orthonormal
/// Hermite recurrence. Nodes come out in decreasing order.
pub fn gauss_hermite_1d(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 {
        return Err(Error::Precondition(
            "quadrature needs at least one node".into(),
        ));
    }
    const PIM4: f64 = 0.751_125_544_464_942_5; // pi^(-1/4)
    let nf = n as f64;
    let mut x = vec![0.0_f64; n];
    let mut w = vec![0.0_f64; n];
    let m = n.div_ceil(2);
    let mut z = 0.0_f64;
    for i in 0..m {
        z = match i {
            0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-1.0 / 6.0),
            1 => z - 1.14 * nf.powf(0.426) / z,
            2 => 1.86 * z - 0.86 * x[0],
            3 => 1.91 * z - 0.91 * x[1],
            _ => 2.0 * z - x[i - 2],
        };
        let mut pp = 0.0;
        for _ in 0..200 {
            let mut p1 = PIM4;
            let mut p2 = 0.0;
            for j in 0..n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = z * (2.0 / (jf + 1.0)).sqrt() * p2 - (jf / (jf + 1.0)).sqrt() * p3;
            }
            pp = (2.0 * nf).sqrt() * p2;
            let delta = p1 / pp;
            z -= delta;
            if delta.abs() <= 1e-15 {
                break;
            }
        }
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / (pp * pp);
        w[n - 1 - i] = w[i];
    }
    Ok((x, w))
}

/// Tensor Gauss-Hermite grid on the complex plane: points `z = x_a + i y_b`
/// with product weights, so that `sum w f(z)` approximates the integral of
/// `exp(-|z|^2) f(z)` over the plane. Exact for polynomial integrands in
/// `x, y` of degree below `2 * nodes_per_axis` per axis.
pub fn gauss_hermite_plane(nodes_per_axis: usize) -> Result<MeasureSpace<Complex64>> {
    let (x, w) = gauss_hermite_1d(nodes_per_axis)?;
    let mut points = Vec::with_capacity(nodes_per_axis * nodes_per_axis);
    let mut weights = Vec::with_capacity(nodes_per_axis * nodes_per_axis);
    for (a, &xa) in x.iter().enumerate() {
        for (b, &yb) in x.iter().enumerate() {
            points.push(Complex64::new(xa, yb));
            weights.push(Complex64::new(w[a] * w[b], 0.0));
        }
    }
    MeasureSpace::new(points, weights)
}

/// Polynomial evaluation by Horner's scheme; coefficients ascending.
fn eval_poly(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// Kernel instance on a complex-plane measure with `phi^+_j(z) = q_j(z)`
/// and `phi^-_j(z) = q_j(z-bar)` for the monic monomials `q_j(z) = z^j`.
pub fn ginibre_kernel(
    n: usize,
    mu: SkewMatrix<Complex64>,
    space: MeasureSpace<Complex64>,
) -> Result<KernelInstance<Complex64>> {
    let polys: Vec<Vec<Complex64>> = (0..n)
        .map(|j| {
            let mut c = vec![Complex64::new(0.0, 0.0); j + 1];
            c[j] = Complex64::new(1.0, 0.0);
            c
        })
        .collect();
    ginibre_kernel_with_polys(mu, space, &polys)
}

/// As [`ginibre_kernel`] with caller-supplied polynomial coefficient lists
/// (ascending powers); `q_j` must have degree exactly `j`. The minus vector
/// evaluates each `q_j` at the conjugated point, which is the right reading
/// for arbitrary complex coefficients.
pub fn ginibre_kernel_with_polys(
    mu: SkewMatrix<Complex64>,
    space: MeasureSpace<Complex64>,
    polys: &[Vec<Complex64>],
) -> Result<KernelInstance<Complex64>> {
    let n = mu.dim();
    if polys.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{} polynomials supplied for an {n}x{n} coupling",
            polys.len()
        )));
    }
    for (j, q) in polys.iter().enumerate() {
        if q.len() != j + 1 || Scalar::is_zero(&q[j]) {
            return Err(Error::Precondition(format!(
                "q_{j} must have degree exactly {j}"
            )));
        }
    }
    let p = space.len();
    let plus = Matrix::from_fn(p, n, |i, j| eval_poly(&polys[j], *space.point(i)));
    let minus = Matrix::from_fn(p, n, |i, j| eval_poly(&polys[j], space.point(i).conj()));
    KernelInstance::new(mu, BasisTable::new(plus, minus)?, space)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};
    use num_rational::BigRational;

    fn single_atom_instance() -> KernelInstance<BigRational> {
        // one atom of weight 1, phi+ = (1, 2), phi- = (3, 4), mu = [[0,1],[-1,0]]
        let plus = Matrix::new(1, 2, vec![rat_int(1), rat_int(2)]).unwrap();
        let minus = Matrix::new(1, 2, vec![rat_int(3), rat_int(4)]).unwrap();
        let basis = BasisTable::new(plus, minus).unwrap();
        let space = MeasureSpace::atoms(vec![rat_int(1)]);
        KernelInstance::new(SkewMatrix::symplectic(2).unwrap(), basis, space).unwrap()
    }

    #[test]
    fn moment_matrix_single_atom() {
        let k = single_atom_instance();
        let g = moment_matrix_g(&k).unwrap();
        // g_{01} = phi-_0 phi+_1 - phi+_0 phi-_1 = 3*2 - 1*4 = 2
        assert_eq!(g.get(0, 1), &rat_int(2));
        assert_eq!(g.get(1, 0), &rat_int(-2));
        assert_eq!(g.get(0, 0), &rat_int(0));
    }

    #[test]
    fn moment_matrix_vanishes_when_vectors_coincide() {
        let table = Matrix::from_fn(3, 4, |i, j| rat_int((i * 7 + j * 3 + 1) as i64));
        let basis = BasisTable::new(table.clone(), table).unwrap();
        let space = MeasureSpace::atoms(vec![rat(1, 2), rat(1, 3), rat(2, 1)]);
        let k = KernelInstance::new(SkewMatrix::zero(4), basis, space).unwrap();
        let g = moment_matrix_g(&k).unwrap();
        assert_eq!(g, SkewMatrix::zero(4));
    }

    #[test]
    fn moment_matrix_matches_naive_double_loop() {
        let plus = Matrix::from_fn(2, 4, |i, j| rat_int((3 * i + j + 1) as i64));
        let minus = Matrix::from_fn(2, 4, |i, j| rat_int((5 * i as i64) - (j as i64)));
        let basis = BasisTable::new(plus.clone(), minus.clone()).unwrap();
        let weights = vec![rat(2, 3), rat(-1, 2)];
        let space = MeasureSpace::atoms(weights.clone());
        let k = KernelInstance::new(SkewMatrix::zero(4), basis, space).unwrap();
        let g = moment_matrix_g(&k).unwrap();
        for r in 0..4 {
            for c in 0..4 {
                let mut expect = rat_int(0);
                for (i, w) in weights.iter().enumerate() {
                    expect += w.clone()
                        * (minus.get(i, r).clone() * plus.get(i, c).clone()
                            - plus.get(i, r).clone() * minus.get(i, c).clone());
                }
                assert_eq!(g.get(r, c), &expect, "entry ({r},{c})");
            }
        }
    }

    #[test]
    fn de_bruijn_one_fold_matches_moment_entry() {
        let k = single_atom_instance();
        let (lhs, rhs) = de_bruijn_sides(&k, 1).unwrap();
        let g = moment_matrix_g(&k).unwrap();
        // 1-fold integral of the 2x2 determinant is g_{10} = -g_{01}
        assert_eq!(lhs, g.get(1, 0).clone());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn de_bruijn_vanishes_for_coincident_vectors() {
        let table = Matrix::from_fn(3, 4, |i, j| rat_int((i + 2 * j + 1) as i64));
        let basis = BasisTable::new(table.clone(), table).unwrap();
        let space = MeasureSpace::atoms(vec![rat_int(1), rat_int(2), rat_int(1)]);
        let k = KernelInstance::new(SkewMatrix::zero(4), basis, space).unwrap();
        let (lhs, rhs) = de_bruijn_sides(&k, 2).unwrap();
        assert_eq!(lhs, rat_int(0));
        assert_eq!(rhs, rat_int(0));
    }

    #[test]
    fn de_bruijn_two_fold_on_three_atoms() {
        use crate::random::{random_matrix, random_nonzero_rationals};
        for seed in 0..10 {
            let plus = random_matrix(3, 4, 900 + seed, 4);
            let minus = random_matrix(3, 4, 950 + seed, 4);
            let basis = BasisTable::new(plus, minus).unwrap();
            let space = MeasureSpace::atoms(random_nonzero_rationals(3, 990 + seed, 3, 2));
            let k = KernelInstance::new(SkewMatrix::zero(4), basis, space).unwrap();
            let (lhs, rhs) = de_bruijn_sides(&k, 2).unwrap();
            assert_eq!(lhs, rhs, "seed {seed}");
        }
    }

    #[test]
    fn de_bruijn_requires_matching_column_count() {
        let k = single_atom_instance(); // 2 functions
        assert!(matches!(
            de_bruijn_sides(&k, 2),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn de_bruijn_lhs_is_symmetric_in_the_integration_variables() {
        use crate::random::{random_matrix, random_nonzero_rationals};
        let plus = random_matrix(3, 4, 31, 4);
        let minus = random_matrix(3, 4, 32, 4);
        let basis = BasisTable::new(plus, minus).unwrap();
        let space = MeasureSpace::atoms(random_nonzero_rationals(3, 33, 3, 2));
        let k = KernelInstance::new(SkewMatrix::zero(4), basis, space.clone()).unwrap();
        let (lhs, _) = de_bruijn_sides(&k, 2).unwrap();

        // re-sum with the tuple reversed (variables permuted) in reversed
        // enumeration order; exact scalars make the reassociation safe
        let mut shuffled = rat_int(0);
        let mut tuples: Vec<Vec<usize>> = Vec::new();
        for_each_tuple(3, 2, |t| -> Result<()> {
            tuples.push(t.to_vec());
            Ok(())
        })
        .unwrap();
        for t in tuples.iter().rev() {
            let rev: Vec<usize> = t.iter().rev().copied().collect();
            let m = Matrix::from_fn(4, 4, |r, c| {
                let point = rev[r / 2];
                if r % 2 == 0 {
                    k.basis().plus_row(point)[c].clone()
                } else {
                    k.basis().minus_row(point)[c].clone()
                }
            });
            let mut term = m.determinant().unwrap();
            for &p in &rev {
                term *= space.weight(p).clone();
            }
            shuffled += term;
        }
        assert_eq!(lhs, shuffled);
    }

    #[test]
    fn hermite_rule_integrates_gaussian_moments() {
        for n in [1usize, 2, 5, 24] {
            let (x, w) = gauss_hermite_1d(n).unwrap();
            let total: f64 = w.iter().sum();
            let pi_sqrt = std::f64::consts::PI.sqrt();
            assert!((total - pi_sqrt).abs() < 1e-12 * pi_sqrt, "n = {n}");
            if n >= 2 {
                let second: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi * xi).sum();
                assert!((second - pi_sqrt / 2.0).abs() < 1e-12, "n = {n}");
            }
        }
        assert!(gauss_hermite_1d(0).is_err());
    }

    #[test]
    fn plane_grid_normalization_and_low_moments() {
        let pi = std::f64::consts::PI;
        // the single-node grid already integrates the weight itself
        let tiny = gauss_hermite_plane(1).unwrap();
        let total = tiny.integrate(|_| Complex64::new(1.0, 0.0));
        assert!((total.re - pi).abs() < 1e-12 * pi);

        let space = gauss_hermite_plane(6).unwrap();
        let total = space.integrate(|_| Complex64::new(1.0, 0.0));
        assert!((total.re - pi).abs() < 1e-12 * pi);
        assert!(total.im.abs() < 1e-14);
        // second moment z z-bar -> pi
        let zz = space.integrate(|i| {
            let z = space.point(i);
            z * z.conj()
        });
        assert!((zz.re - pi).abs() < 1e-10);
        // angular symmetry kills z^2
        let z2 = space.integrate(|i| {
            let z = space.point(i);
            z * z
        });
        assert!(z2.norm() < 1e-12);
    }

    #[test]
    fn plane_grid_monomial_moments() {
        // z^a zbar^b integrates to pi * a! * delta_{ab} for a + b below the
        // node count per axis
        let nodes = 8;
        let space = gauss_hermite_plane(nodes).unwrap();
        let pi = std::f64::consts::PI;
        for a in 0..nodes / 2 {
            for b in 0..nodes / 2 {
                let val = space.integrate(|i| {
                    let z = space.point(i);
                    z.powu(a as u32) * z.conj().powu(b as u32)
                });
                let expected = if a == b {
                    pi * (1..=a).map(|k| k as f64).product::<f64>()
                } else {
                    0.0
                };
                let tol = 1e-10 * expected.abs().max(1.0);
                assert!(
                    (val.re - expected).abs() < tol && val.im.abs() < tol,
                    "a={a} b={b}: {val} vs {expected}"
                );
            }
        }
    }

    #[test]
    fn ginibre_constant_function_gives_zero_moment_matrix() {
        let space = gauss_hermite_plane(3).unwrap();
        let k = ginibre_kernel(1, SkewMatrix::zero(1), space).unwrap();
        let g = moment_matrix_g(&k).unwrap();
        assert!(g.get(0, 0).norm() < 1e-14);
    }

    #[test]
    fn ginibre_real_coefficients_make_g_purely_imaginary() {
        let space = gauss_hermite_plane(6).unwrap();
        let mu = SkewMatrix::symplectic(4).unwrap();
        let k = ginibre_kernel(4, mu, space).unwrap();
        let g = moment_matrix_g(&k).unwrap();
        let scale = g.matrix().max_magnitude().max(1.0);
        for i in 0..4 {
            for j in 0..4 {
                assert!(
                    g.get(i, j).re.abs() < 1e-12 * scale,
                    "entry ({i},{j}) = {}",
                    g.get(i, j)
                );
            }
        }
    }

    #[test]
    fn ginibre_rejects_malformed_polynomials() {
        let space = gauss_hermite_plane(2).unwrap();
        let mu = SkewMatrix::symplectic(2).unwrap();
        // q_1 has degree 0: wrong
        let polys = vec![
            vec![Complex64::new(1.0, 0.0)],
            vec![Complex64::new(1.0, 0.0)],
        ];
        assert!(ginibre_kernel_with_polys(mu, space, &polys).is_err());
    }

    #[test]
    fn padding_keeps_kernel_values() {
        let k = single_atom_instance();
        let padded = k.padded().unwrap();
        assert_eq!(padded.n(), 3);
        assert_eq!(padded.phi_pm(0, 0), k.phi_pm(0, 0));
        assert_eq!(padded.phi_pp(0, 0), k.phi_pp(0, 0));
    }

    #[test]
    fn tuple_guard_trips() {
        assert!(check_tuple_guard(100, 4).is_err());
        assert!(check_tuple_guard(10, 3).is_ok());
    }
}
