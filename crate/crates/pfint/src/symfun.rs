//! Elementary symmetric functions of power sums.
//!
//! Two independent evaluation routes are kept side by side as mutual
//! oracles: the explicit sum over partitions in frequency representation,
//!
//! ```text
//! e_l = (-1)^l sum_{|lambda| = l} prod_j (1/sigma_j!) (-p_{l_j}/l_j)^{sigma_j},
//! ```
//!
//! and the Newton-type recursion `l e_l = sum_{j=1}^{l} (-1)^{j-1} p_j e_{l-j}`.
//! Both are tied to the generating identity
//! `sum_l tau^l e_l = exp(sum_j (-1)^{j-1} tau^j p_j / j)` through truncated
//! formal series.

use crate::error::{Error, Result};
use crate::scalar::{factorial, pow, sign_pow, Scalar};
use crate::taupoly::TauPoly;

/// Partition in frequency representation: distinct decreasing part values
/// with multiplicities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    pairs: Vec<(usize, usize)>,
}

impl Partition {
    /// From a weakly decreasing list of parts.
    pub fn from_parts(parts: &[usize]) -> Self {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for &p in parts {
            debug_assert!(p >= 1);
            match pairs.last_mut() {
                Some((value, mult)) if *value == p => *mult += 1,
                _ => pairs.push((p, 1)),
            }
        }
        Self { pairs }
    }

    pub fn empty() -> Self {
        Self { pairs: vec![] }
    }

    /// `(part value, multiplicity)` pairs, parts strictly decreasing.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// `|lambda| = sum l_j sigma_j`.
    pub fn size(&self) -> usize {
        self.pairs.iter().map(|&(l, s)| l * s).sum()
    }

    /// Number of distinct parts (`g` in the frequency notation).
    pub fn distinct_parts(&self) -> usize {
        self.pairs.len()
    }
}

/// All partitions of `l`, each exactly once, ordered by decreasing largest
/// part and lexicographically (descending) within.
pub fn partitions_of(l: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_parts(current));
            return;
        }
        let top = remaining.min(max_part);
        for part in (1..=top).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(l, l.max(1), &mut current, &mut out);
    out
}

/// Power-sum sequence `p_1, p_2, ..., p_L`, indexed from 1.
#[derive(Clone, PartialEq, Debug)]
pub struct PowerSums<S> {
    values: Vec<S>,
}

impl<S: Scalar> PowerSums<S> {
    pub fn new(values: Vec<S>) -> Self {
        Self { values }
    }

    /// Power sums `p_j = sum_i x_i^j` of a concrete value multiset.
    pub fn from_values(xs: &[S], upto: usize) -> Self {
        let mut values = Vec::with_capacity(upto);
        let mut powers: Vec<S> = xs.to_vec();
        for _ in 1..=upto {
            let mut acc = S::zero();
            for p in &powers {
                acc = acc + p.clone();
            }
            values.push(acc);
            for (p, x) in powers.iter_mut().zip(xs) {
                *p = p.clone() * x.clone();
            }
        }
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// 1-based access; names the missing index on failure.
    pub fn get(&self, j: usize) -> Result<&S> {
        if j == 0 || j > self.values.len() {
            return Err(Error::MissingPowerSum {
                index: j,
                available: self.values.len(),
            });
        }
        Ok(&self.values[j - 1])
    }
}

/// `e_l` by the literal partition sum.
pub fn elementary_from_powersums<S: Scalar>(l: usize, p: &PowerSums<S>) -> Result<S> {
    if l == 0 {
        return Ok(S::one());
    }
    p.get(l)?;
    let mut total = S::zero();
    for lambda in partitions_of(l) {
        let mut term = S::one();
        for &(part, mult) in lambda.pairs() {
            let base = (-p.get(part)?.clone()).checked_div(&S::from_int(part as i64))?;
            term = term * pow(&base, mult).checked_div(&factorial::<S>(mult))?;
        }
        total = total + term;
    }
    Ok(sign_pow::<S>(l) * total)
}

/// `e_0, ..., e_l` by the Newton-type recursion.
pub fn elementary_newton_all<S: Scalar>(l: usize, p: &PowerSums<S>) -> Result<Vec<S>> {
    if l > 0 {
        p.get(l)?;
    }
    let mut e = Vec::with_capacity(l + 1);
    e.push(S::one());
    for m in 1..=l {
        let mut acc = S::zero();
        for j in 1..=m {
            acc = acc + sign_pow::<S>(j - 1) * p.get(j)?.clone() * e[m - j].clone();
        }
        e.push(acc.checked_div(&S::from_int(m as i64))?);
    }
    Ok(e)
}

/// `e_l` by the Newton-type recursion; agrees exactly with
/// [`elementary_from_powersums`].
pub fn elementary_newton<S: Scalar>(l: usize, p: &PowerSums<S>) -> Result<S> {
    Ok(elementary_newton_all(l, p)?.pop().expect("nonempty"))
}

/// The exponential side of the generating identity,
/// `exp(sum_{j>=1} (-1)^{j-1} tau^j p_j / j)` truncated at `degree`.
pub fn powersum_exponential<S: Scalar>(p: &PowerSums<S>, degree: usize) -> Result<TauPoly<S>> {
    let mut inner = vec![S::zero()];
    for j in 1..=degree {
        inner.push(
            (sign_pow::<S>(j - 1) * p.get(j)?.clone()).checked_div(&S::from_int(j as i64))?,
        );
    }
    TauPoly::new(inner).exp_truncated(degree)
}

/// Both sides of the generating identity truncated at `degree`: the
/// partition-sum coefficients on the left, the formal exponential on the
/// right. Callers assert coefficient-wise equality.
pub fn generating_series_check<S: Scalar>(
    p: &PowerSums<S>,
    degree: usize,
) -> Result<(TauPoly<S>, TauPoly<S>)> {
    let mut lhs = Vec::with_capacity(degree + 1);
    for l in 0..=degree {
        lhs.push(elementary_from_powersums(l, p)?);
    }
    Ok((TauPoly::new(lhs), powersum_exponential(p, degree)?))
}
