//! Minor summation formulas of Ishikawa-Wakayama type, each exposed as a
//! two-sided computation so callers can assert the identity itself.
//!
//! All subset signs use `|I|`, the sum of the 1-based element values of the
//! subset, not its cardinality. For the even-cardinality subsets that carry
//! every nonvanishing term this is the only reading that makes the
//! identities hold.

use crate::error::{Error, Result};
use crate::matrix::{even_subsets, subsets_of_size, IndexSubset, Matrix, SkewMatrix};
use crate::pfaffian::pfaffian;
use crate::scalar::{sign_pow, Scalar};
use crate::taupoly::TauPoly;

/// Both sides of the even-minor summation identity
/// `sum_{#I = M} pf[B_I^I] det[A(columns I)] = pf[A B A^T]`
/// for an `M x N` matrix `A` (`M` even, `M <= N`) and antisymmetric `B`.
pub fn lemma1_sides<S: Scalar>(a: &Matrix<S>, b: &SkewMatrix<S>) -> Result<(S, S)> {
    let m = a.rows();
    let n = a.cols();
    if !m.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "row count must be even, got {m}"
        )));
    }
    if m > n {
        return Err(Error::Precondition(format!(
            "row count {m} exceeds column count {n}"
        )));
    }
    if b.dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "antisymmetric factor is {}x{}, expected {n}x{n}",
            b.dim(),
            b.dim()
        )));
    }
    let all_rows = IndexSubset::full(m);
    let mut lhs = S::zero();
    for idx in subsets_of_size(n, m)? {
        let pf_minor = pfaffian(&b.principal_submatrix(&idx)?)?;
        if Scalar::is_zero(&pf_minor) {
            continue;
        }
        let det_minor = a.submatrix(&all_rows, &idx)?.determinant()?;
        lhs = lhs + pf_minor * det_minor;
    }
    let aba = a.matmul(b.matrix())?.matmul(&a.transpose())?;
    let rhs = pfaffian(&SkewMatrix::new(aba)?)?;
    Ok((lhs, rhs))
}

/// Both sides of the complementary-minor identity
/// `pf[A] pf[(A^{-1})_I^I] = (-1)^{|I|} pf[A_Ibar^Ibar]`
/// for invertible antisymmetric `A`. Odd-cardinality subsets make both
/// sides vanish and are accepted.
pub fn lemma2_sides<S: Scalar>(a: &SkewMatrix<S>, idx: &IndexSubset) -> Result<(S, S)> {
    let n = a.dim();
    let inv = a.inverse()?;
    let pf_a = pfaffian(a)?;
    let lhs = pf_a * pfaffian(&inv.principal_submatrix(idx)?)?;
    let comp = idx.complement(n)?;
    let rhs = sign_pow::<S>(idx.element_sum()) * pfaffian(&a.principal_submatrix(&comp)?)?;
    Ok((lhs, rhs))
}

/// Both sides of the Pfaffian addition expansion
/// `pf[A + B] = sum_r sum_{#I = 2r} (-1)^{|I| - r} pf[A_I^I] pf[B_Ibar^Ibar]`.
pub fn lemma3_sides<S: Scalar>(a: &SkewMatrix<S>, b: &SkewMatrix<S>) -> Result<(S, S)> {
    let n = common_dim(a, b)?;
    let lhs = pfaffian(&a.add(b)?)?;
    let mut rhs = S::zero();
    for idx in even_subsets(n)? {
        rhs = rhs + lemma3_term(a, b, &idx, n)?;
    }
    Ok((lhs, rhs))
}

/// The addition-expansion right side summed over every subset, odd sizes
/// included; odd subsets contribute vanishing Pfaffians, so this must equal
/// the even-only sum.
pub fn lemma3_rhs_all_subsets<S: Scalar>(a: &SkewMatrix<S>, b: &SkewMatrix<S>) -> Result<S> {
    let n = common_dim(a, b)?;
    let mut rhs = S::zero();
    for idx in crate::matrix::all_subsets(n)? {
        rhs = rhs + lemma3_term(a, b, &idx, n)?;
    }
    Ok(rhs)
}

fn lemma3_term<S: Scalar>(
    a: &SkewMatrix<S>,
    b: &SkewMatrix<S>,
    idx: &IndexSubset,
    n: usize,
) -> Result<S> {
    let r = idx.len() / 2;
    let pf_a = pfaffian(&a.principal_submatrix(idx)?)?;
    if Scalar::is_zero(&pf_a) {
        return Ok(S::zero());
    }
    let comp = idx.complement(n)?;
    let pf_b = pfaffian(&b.principal_submatrix(&comp)?)?;
    Ok(sign_pow::<S>(idx.element_sum() + r) * pf_a * pf_b)
}

fn common_dim<S: Scalar>(a: &SkewMatrix<S>, b: &SkewMatrix<S>) -> Result<usize> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "antisymmetric pair of sizes {} and {}",
            a.dim(),
            b.dim()
        )));
    }
    Ok(a.dim())
}

/// Both sides of the principal-minor pairing identity
/// `sum_I pf[A_I^I] pf[B_I^I] = pf[A] pf[A^{-1 T} + B]`
/// over all even-size subsets including the empty and full ones. The
/// transpose of the inverse is computed literally.
pub fn corollary1_sides<S: Scalar>(a: &SkewMatrix<S>, b: &SkewMatrix<S>) -> Result<(S, S)> {
    let n = common_dim(a, b)?;
    if n % 2 != 0 {
        return Err(Error::Precondition(format!(
            "even dimension required, got {n}"
        )));
    }
    let mut lhs = S::zero();
    for idx in even_subsets(n)? {
        lhs = lhs
            + pfaffian(&a.principal_submatrix(&idx)?)?
                * pfaffian(&b.principal_submatrix(&idx)?)?;
    }
    let inv_t = SkewMatrix::new(a.matrix().inverse()?.transpose())?;
    let rhs = pfaffian(a)? * pfaffian(&inv_t.add(b)?)?;
    Ok((lhs, rhs))
}

/// Step values of the chain that derives the pairing identity from the
/// addition expansion and the complementary-minor identity, in that order.
/// Every field must agree with both sides of [`corollary1_sides`].
#[derive(Clone, Debug, PartialEq)]
pub struct Corollary1Chain<S> {
    /// `pf[A] * (addition expansion of pf[A^{-1 T} + B])`.
    pub via_addition: S,
    /// Same after absorbing the transpose sign `(-1)^r` into `(-1)^{|I|}`.
    pub via_transpose_absorbed: S,
    /// Same after the complementary-minor substitution; `pf[A]` cancels.
    pub via_complement: S,
}

pub fn corollary1_chain<S: Scalar>(
    a: &SkewMatrix<S>,
    b: &SkewMatrix<S>,
) -> Result<Corollary1Chain<S>> {
    let n = common_dim(a, b)?;
    let inv = a.inverse()?;
    let inv_t = SkewMatrix::new(a.matrix().inverse()?.transpose())?;
    let pf_a = pfaffian(a)?;

    let mut addition = S::zero();
    let mut absorbed = S::zero();
    let mut complement = S::zero();
    for idx in even_subsets(n)? {
        let r = idx.len() / 2;
        let comp = idx.complement(n)?;
        let pf_b_comp = pfaffian(&b.principal_submatrix(&comp)?)?;
        let sign_addition = sign_pow::<S>(idx.element_sum() + r);
        addition = addition
            + sign_addition.clone() * pfaffian(&inv_t.principal_submatrix(&idx)?)? * pf_b_comp.clone();
        let sign_absorbed = sign_pow::<S>(idx.element_sum());
        absorbed =
            absorbed + sign_absorbed * pfaffian(&inv.principal_submatrix(&idx)?)? * pf_b_comp.clone();
        complement =
            complement + pfaffian(&a.principal_submatrix(&comp)?)? * pf_b_comp;
    }
    Ok(Corollary1Chain {
        via_addition: pf_a.clone() * addition,
        via_transpose_absorbed: pf_a * absorbed,
        via_complement: complement,
    })
}

/// `pf[A + tau B]` as a polynomial in `tau`, by the addition expansion:
/// the subsets with `#Ibar = 2m` collect into the coefficient of `tau^m`.
pub fn pfaffian_sum_poly<S: Scalar>(
    a: &SkewMatrix<S>,
    b: &SkewMatrix<S>,
) -> Result<TauPoly<S>> {
    let n = common_dim(a, b)?;
    let mut coeffs = vec![S::zero(); n / 2 + 1];
    for idx in even_subsets(n)? {
        let r = idx.len() / 2;
        let m = (n - idx.len()) / 2;
        let pf_a = pfaffian(&a.principal_submatrix(&idx)?)?;
        if Scalar::is_zero(&pf_a) {
            continue;
        }
        let comp = idx.complement(n)?;
        let pf_b = pfaffian(&b.principal_submatrix(&comp)?)?;
        coeffs[m] =
            coeffs[m].clone() + sign_pow::<S>(idx.element_sum() + r) * pf_a * pf_b;
    }
    Ok(TauPoly::new(coeffs))
}
