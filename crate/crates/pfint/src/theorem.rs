//! The Pfaffian integration theorem and the Fredholm Pfaffian identities.
//!
//! The central objects are the moments
//! `sigma_l = l-fold integral of pf[Phi block matrix]`, the product
//! `upsilon = mu g`, and the generating polynomial `S(tau) = sum_l tau^l
//! sigma_l / l!`. Identities checked here:
//!
//! - `sigma_l / l! = e_l(tr(upsilon)/2, ..., tr(upsilon^l)/2)` (trace form),
//! - `S(tau) = pf[mu] pf[mu^{-1 T} - tau g]` for invertible `mu`,
//! - `S(tau)^2 = det(I + tau upsilon)` (Fredholm determinant reduction),
//! - the scalar Fredholm determinant as a special Fredholm Pfaffian.
//!
//! Tuple sums run over ordered tuples and divide by `l!`; the integrand is
//! symmetric, so this matches the unordered integral exactly.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, SkewMatrix};
use crate::measure::{check_tuple_guard, for_each_tuple, KernelInstance, MeasureSpace};
use crate::measure::moment_matrix_g;
use crate::minorsum::pfaffian_sum_poly;
use crate::pfaffian::pfaffian;
use crate::scalar::{factorial, Scalar};
use crate::symfun::{elementary_newton, powersum_exponential, PowerSums};
use crate::taupoly::TauPoly;

/// Pass/fail tolerance for float scalars: relative against the larger
/// magnitude with an absolute floor for near-zero values. Exact scalars
/// ignore it and compare exactly.
#[derive(Clone, Copy, Debug)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            rel: 1e-8,
            abs: 1e-10,
        }
    }
}

impl Tolerance {
    pub fn check<S: Scalar>(&self, a: &S, b: &S) -> bool {
        a.close_to(b, self.rel, self.abs)
    }

    pub fn check_poly<S: Scalar>(&self, a: &TauPoly<S>, b: &TauPoly<S>) -> bool {
        a.close_to(b, self.rel, self.abs)
    }
}

/// One comparison of the verification reports.
#[derive(Clone, Debug)]
pub struct VerifyRow<S> {
    pub ell: usize,
    pub lhs: S,
    pub rhs: S,
    pub pass: bool,
}

/// The moment `sigma_l`: sum over ordered `l`-tuples of points, weighted,
/// of the Pfaffian of the `2l x 2l` matrix whose `2 x 2` block `(s, t)` is
/// `[[Phi++, Phi+-], [Phi-+, Phi--]]` at `(x_s, x_t)` (rows and columns
/// interleaved per point: `x_1+, x_1-, x_2+, x_2-, ...`).
pub fn sigma_ell<S: Scalar>(k: &KernelInstance<S>, l: usize) -> Result<S> {
    if l == 0 {
        return Ok(S::one());
    }
    let p = k.points();
    check_tuple_guard(p, l)?;
    let mut total = S::zero();
    for_each_tuple(p, l, |tuple| -> Result<()> {
        let block = Matrix::from_fn(2 * l, 2 * l, |r, c| {
            let (s, t) = (tuple[r / 2], tuple[c / 2]);
            match (r % 2, c % 2) {
                (0, 0) => k.phi_pp(s, t).clone(),
                (0, 1) => k.phi_pm(s, t).clone(),
                (1, 0) => k.phi_mp(s, t).clone(),
                _ => k.phi_mm(s, t).clone(),
            }
        });
        let mut term = pfaffian(&SkewMatrix::new(block)?)?;
        if Scalar::is_zero(&term) {
            return Ok(());
        }
        for &i in tuple {
            term = term * k.space().weight(i).clone();
        }
        total = total.clone() + term;
        Ok(())
    })?;
    Ok(total)
}

/// `upsilon = mu g` with `g` the moment matrix of the instance.
pub fn upsilon<S: Scalar>(k: &KernelInstance<S>) -> Result<Matrix<S>> {
    let g = moment_matrix_g(k)?;
    k.mu().matrix().matmul(g.matrix())
}

/// Power sums `p_j = tr(upsilon^j) / 2` for `j = 1..=upto`.
pub fn half_trace_powersums<S: Scalar>(ups: &Matrix<S>, upto: usize) -> Result<PowerSums<S>> {
    let half = S::one().checked_div(&S::from_int(2))?;
    let mut values = Vec::with_capacity(upto);
    let mut power = ups.clone();
    for j in 1..=upto {
        values.push(half.clone() * power.trace()?);
        if j < upto {
            power = power.matmul(ups)?;
        }
    }
    Ok(PowerSums::new(values))
}

/// Trace side of the integration theorem:
/// `e_l(tr(upsilon)/2, ..., tr(upsilon^l)/2)`.
pub fn theorem1_rhs<S: Scalar>(k: &KernelInstance<S>, l: usize) -> Result<S> {
    if l == 0 {
        return Ok(S::one());
    }
    let ups = upsilon(k)?;
    let p = half_trace_powersums(&ups, l)?;
    elementary_newton(l, &p)
}

/// Compares `sigma_l / l!` against the trace side for every `l` up to
/// `l_max`; exact equality for exact scalars, tolerance otherwise.
pub fn theorem1_verify<S: Scalar>(
    k: &KernelInstance<S>,
    l_max: usize,
    tol: &Tolerance,
) -> Result<Vec<VerifyRow<S>>> {
    let mut rows = Vec::with_capacity(l_max + 1);
    for l in 0..=l_max {
        let lhs = sigma_ell(k, l)?.checked_div(&factorial::<S>(l))?;
        let rhs = theorem1_rhs(k, l)?;
        let pass = tol.check(&lhs, &rhs);
        rows.push(VerifyRow { ell: l, lhs, rhs, pass });
    }
    Ok(rows)
}

/// The generating polynomial `S(tau) = sum_l tau^l sigma_l / l!`, computed
/// from the tuple sums. The series terminates: `sigma_l` vanishes once `2l`
/// exceeds the coupling dimension (rank) or the tuple must repeat a point.
pub fn fredholm_pfaffian<S: Scalar>(k: &KernelInstance<S>) -> Result<TauPoly<S>> {
    let top = (k.n() / 2).min(k.points());
    let mut coeffs = Vec::with_capacity(top + 1);
    for l in 0..=top {
        coeffs.push(sigma_ell(k, l)?.checked_div(&factorial::<S>(l))?);
    }
    Ok(TauPoly::new(coeffs))
}

/// Both sides of the tau-polynomial identity for invertible `mu`:
/// the series `S(tau)` on the left, `pf[mu] pf[mu^{-1 T} - tau g]` on the
/// right, the latter expanded through the Pfaffian addition formula.
pub fn theorem2_sides<S: Scalar>(k: &KernelInstance<S>) -> Result<(TauPoly<S>, TauPoly<S>)> {
    let lhs = fredholm_pfaffian(k)?;
    let rhs = theorem2_rhs(k)?;
    Ok((lhs, rhs))
}

fn mu_inverse_transpose<S: Scalar>(k: &KernelInstance<S>) -> Result<SkewMatrix<S>> {
    SkewMatrix::new(k.mu().matrix().inverse()?.transpose())
}

/// `pf[mu] pf[mu^{-1 T} - tau g]` as a polynomial in tau.
pub fn theorem2_rhs<S: Scalar>(k: &KernelInstance<S>) -> Result<TauPoly<S>> {
    let inv_t = mu_inverse_transpose(k)?;
    let g = moment_matrix_g(k)?;
    let poly = pfaffian_sum_poly(&inv_t, &g.scale(&-S::one()))?;
    Ok(poly.scale(&pfaffian(k.mu())?))
}

/// `pf[mu] pf[mu^{-1 T} + tau g^T]`: the same polynomial written through
/// the transposed moment matrix. Since `g^T = -g` both forms must agree;
/// computing both keeps the sign conventions honest.
pub fn theorem2_rhs_transposed_form<S: Scalar>(k: &KernelInstance<S>) -> Result<TauPoly<S>> {
    let inv_t = mu_inverse_transpose(k)?;
    let g = moment_matrix_g(k)?;
    let poly = pfaffian_sum_poly(&inv_t, &g.transpose())?;
    Ok(poly.scale(&pfaffian(k.mu())?))
}

/// Determinant of `I + tau upsilon` as a polynomial in tau, by Laplace
/// expansion with memoization on row subsets (no division needed).
pub fn det_one_plus_tau<S: Scalar>(ups: &Matrix<S>) -> Result<TauPoly<S>> {
    let n = ups.rows();
    if !ups.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "square matrix required, got {}x{}",
            n,
            ups.cols()
        )));
    }
    if n > 32 {
        return Err(Error::SizeLimit { dim: n, max: 32 });
    }
    let entry = |i: usize, j: usize| -> TauPoly<S> {
        let constant = if i == j { S::one() } else { S::zero() };
        TauPoly::new(vec![constant, ups.get(i, j).clone()])
    };
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut memo: HashMap<u32, TauPoly<S>> = HashMap::new();

    fn minor<S: Scalar>(
        rows: u32,
        n: usize,
        entry: &impl Fn(usize, usize) -> TauPoly<S>,
        memo: &mut HashMap<u32, TauPoly<S>>,
    ) -> TauPoly<S> {
        if rows == 0 {
            return TauPoly::one();
        }
        if let Some(hit) = memo.get(&rows) {
            return hit.clone();
        }
        let col = n - rows.count_ones() as usize;
        let mut acc = TauPoly::zero();
        let mut position = 0usize;
        for r in 0..n {
            if rows & (1 << r) == 0 {
                continue;
            }
            let sub = minor(rows & !(1 << r), n, entry, memo);
            let term = entry(r, col).mul(&sub);
            acc = if position.is_multiple_of(2) {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
            position += 1;
        }
        memo.insert(rows, acc.clone());
        acc
    }

    Ok(minor(full, n, &entry, &mut memo))
}

/// `S(tau)^2` against `det(I + tau upsilon)`: the square of the Fredholm
/// Pfaffian equals the Fredholm determinant reduced to the coupling
/// dimension. Holds for singular `mu` as well.
pub fn fredholm_det_identity<S: Scalar>(
    k: &KernelInstance<S>,
) -> Result<(TauPoly<S>, TauPoly<S>)> {
    let s = fredholm_pfaffian(k)?;
    let det = det_one_plus_tau(&upsilon(k)?)?;
    Ok((s.mul(&s), det))
}

/// Scalar-kernel special case: the Fredholm Pfaffian of the block kernel
/// `[[eps, K], [-K^T, 0]]` equals the scalar Fredholm determinant of `K`,
/// for any antisymmetric `eps`. Both series terminate once a tuple must
/// repeat a point.
pub fn fredholm_scalar_particular_case<S: Scalar>(
    kvals: &Matrix<S>,
    eps: &SkewMatrix<S>,
    space: &MeasureSpace<S>,
) -> Result<(S, S)> {
    let p = space.len();
    if !kvals.is_square() || kvals.rows() != p || eps.dim() != p {
        return Err(Error::DimensionMismatch(format!(
            "kernel {}x{}, eps {}x{}, {} points",
            kvals.rows(),
            kvals.cols(),
            eps.dim(),
            eps.dim(),
            p
        )));
    }

    let mut pf_side = S::zero();
    let mut det_side = S::zero();
    for l in 0..=p {
        check_tuple_guard(p, l)?;
        let inv_lfac = S::one().checked_div(&factorial::<S>(l))?;

        let mut pf_sum = S::zero();
        for_each_tuple(p, l, |tuple| -> Result<()> {
            let block = Matrix::from_fn(2 * l, 2 * l, |r, c| {
                let (s, t) = (tuple[r / 2], tuple[c / 2]);
                match (r % 2, c % 2) {
                    (0, 0) => eps.get(s, t).clone(),
                    (0, 1) => kvals.get(s, t).clone(),
                    (1, 0) => -kvals.get(t, s).clone(),
                    _ => S::zero(),
                }
            });
            let mut term = pfaffian(&SkewMatrix::new(block)?)?;
            for &i in tuple {
                term = term * space.weight(i).clone();
            }
            pf_sum = pf_sum.clone() + term;
            Ok(())
        })?;
        pf_side = pf_side + inv_lfac.clone() * pf_sum;

        let mut det_sum = S::zero();
        for_each_tuple(p, l, |tuple| -> Result<()> {
            let minor = Matrix::from_fn(l, l, |a, b| kvals.get(tuple[a], tuple[b]).clone());
            let mut term = minor.determinant()?;
            for &i in tuple {
                term = term * space.weight(i).clone();
            }
            det_sum = det_sum.clone() + term;
            Ok(())
        })?;
        det_side = det_side + inv_lfac * det_sum;
    }
    Ok((pf_side, det_side))
}

/// Three-way equivalence report: the exponential of the half-trace series,
/// the formal square root of `det(I + tau upsilon)` (branch fixed by the
/// unit constant term), and `pf[mu] pf[mu^{-1 T} - tau g]`, all truncated
/// at degree `n/2`.
#[derive(Clone, Debug)]
pub struct Remark13Report<S> {
    pub exp_route: TauPoly<S>,
    pub sqrt_route: TauPoly<S>,
    pub pf_route: TauPoly<S>,
    pub pass: bool,
}

pub fn remark13_equivalence<S: Scalar>(
    k: &KernelInstance<S>,
    tol: &Tolerance,
) -> Result<Remark13Report<S>> {
    let degree = k.n() / 2;
    let ups = upsilon(k)?;
    let p = half_trace_powersums(&ups, degree)?;
    let exp_route = powersum_exponential(&p, degree)?;
    let sqrt_route = det_one_plus_tau(&ups)?.sqrt_truncated(degree)?;
    let pf_route = theorem2_rhs(k)?;
    let pass = tol.check_poly(&exp_route, &pf_route)
        && tol.check_poly(&sqrt_route, &pf_route)
        && tol.check_poly(&exp_route, &sqrt_route);
    Ok(Remark13Report {
        exp_route,
        sqrt_route,
        pf_route,
        pass,
    })
}
