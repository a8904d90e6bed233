//! Polynomials in the formal variable tau, as dense coefficient vectors.
//!
//! These carry the generating series of the verification suites: trailing
//! zero coefficients are trimmed for exact scalars so that equality is
//! decidable, and the truncated exponential / square root are exact over
//! rationals (the only divisions are by integers and by 2).

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Polynomial in tau; `coeffs[k]` is the coefficient of `tau^k`.
#[derive(Clone, PartialEq, Debug)]
pub struct TauPoly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> TauPoly<S> {
    /// Builds from coefficients, trimming trailing zeros when exact.
    pub fn new(coeffs: Vec<S>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self {
            coeffs: vec![S::one()],
        }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    fn trim(&mut self) {
        if S::EXACT {
            while let Some(last) = self.coeffs.last() {
                if Scalar::is_zero(last) {
                    self.coeffs.pop();
                } else {
                    break;
                }
            }
        }
    }

    /// Coefficient of `tau^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Degree of the highest stored coefficient; `None` for the zero
    /// polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|v| c.clone() * v.clone()).collect())
    }

    /// Full product (no truncation).
    pub fn mul(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            if Scalar::is_zero(ca) {
                continue;
            }
            for (b, cb) in rhs.coeffs.iter().enumerate() {
                out[a + b] = out[a + b].clone() + ca.clone() * cb.clone();
            }
        }
        Self::new(out)
    }

    /// Product truncated at degree `deg` inclusive.
    pub fn mul_truncated(&self, rhs: &Self, deg: usize) -> Self {
        let mut out = vec![S::zero(); deg + 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            if a > deg || Scalar::is_zero(ca) {
                continue;
            }
            for (b, cb) in rhs.coeffs.iter().enumerate() {
                if a + b > deg {
                    break;
                }
                out[a + b] = out[a + b].clone() + ca.clone() * cb.clone();
            }
        }
        Self::new(out)
    }

    /// Drops every coefficient above degree `deg`.
    pub fn truncated(&self, deg: usize) -> Self {
        Self::new(self.coeffs.iter().take(deg + 1).cloned().collect())
    }

    /// Multiplies by `tau^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![S::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Self::new(out)
    }

    /// Truncated exponential of a series with zero constant term, via
    /// `n g_n = sum_{k=1}^{n} k f_k g_{n-k}`.
    pub fn exp_truncated(&self, deg: usize) -> Result<Self> {
        if !Scalar::is_zero(&self.coeff(0)) {
            return Err(Error::Series(
                "a zero constant term for the exponential".into(),
            ));
        }
        let mut g = vec![S::zero(); deg + 1];
        g[0] = S::one();
        for n in 1..=deg {
            let mut acc = S::zero();
            for k in 1..=n {
                let fk = self.coeff(k);
                if Scalar::is_zero(&fk) {
                    continue;
                }
                acc = acc + S::from_int(k as i64) * fk * g[n - k].clone();
            }
            g[n] = acc.checked_div(&S::from_int(n as i64))?;
        }
        Ok(Self::new(g))
    }

    /// Truncated square root with constant term fixed to +1, via
    /// `h_n = (f_n - sum_{k=1}^{n-1} h_k h_{n-k}) / 2`.
    pub fn sqrt_truncated(&self, deg: usize) -> Result<Self> {
        if self.coeff(0) != S::one() {
            return Err(Error::Series(
                "a unit constant term for the square root".into(),
            ));
        }
        let mut h = vec![S::zero(); deg + 1];
        h[0] = S::one();
        for n in 1..=deg {
            let mut acc = self.coeff(n);
            for k in 1..n {
                acc = acc - h[k].clone() * h[n - k].clone();
            }
            h[n] = acc.checked_div(&S::from_int(2))?;
        }
        Ok(Self::new(h))
    }

    /// Coefficient-wise comparison under the scalar tolerance policy.
    pub fn close_to(&self, other: &Self, rel: f64, abs: f64) -> bool {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).all(|k| self.coeff(k).close_to(&other.coeff(k), rel, abs))
    }
}

impl<S: Scalar> fmt::Display for TauPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if S::EXACT && Scalar::is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};
    use num_rational::BigRational;

    fn p(v: &[i64]) -> TauPoly<BigRational> {
        TauPoly::new(v.iter().map(|&x| rat_int(x)).collect())
    }

    #[test]
    fn trim_and_degree() {
        let q = p(&[1, 2, 0, 0]);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(q.coeff(5), rat_int(0));
        assert_eq!(TauPoly::<BigRational>::zero().degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        let sq = a.mul(&a);
        assert_eq!(sq, p(&[1, 2, 1]));
        assert_eq!(a.sub(&a), TauPoly::zero());
        assert_eq!(sq.truncated(1), p(&[1, 2]));
        assert_eq!(a.shift(2), p(&[0, 0, 1, 1]));
        assert_eq!(a.mul_truncated(&a, 1), p(&[1, 2]));
    }

    #[test]
    fn exp_of_log_of_one_plus_tau() {
        // log(1 + t) = t - t^2/2 + t^3/3 - ...
        let log = TauPoly::new(vec![
            rat_int(0),
            rat_int(1),
            rat(-1, 2),
            rat(1, 3),
            rat(-1, 4),
            rat(1, 5),
            rat(-1, 6),
        ]);
        let exp = log.exp_truncated(6).unwrap();
        assert_eq!(exp, p(&[1, 1]));
        assert!(p(&[1, 1]).exp_truncated(3).is_err());
    }

    #[test]
    fn sqrt_of_a_perfect_square() {
        let a = p(&[1, -2, 3]);
        let sq = a.mul(&a);
        assert_eq!(sq.sqrt_truncated(2).unwrap(), a);
        assert!(p(&[2, 1]).sqrt_truncated(2).is_err());
    }

    #[test]
    fn sqrt_of_one_plus_tau_series() {
        // (1+t)^(1/2) = 1 + t/2 - t^2/8 + t^3/16 - ...
        let s = p(&[1, 1]).sqrt_truncated(3).unwrap();
        assert_eq!(s.coeff(1), rat(1, 2));
        assert_eq!(s.coeff(2), rat(-1, 8));
        assert_eq!(s.coeff(3), rat(1, 16));
    }

    #[test]
    fn display_formats() {
        assert_eq!(p(&[1, -2]).to_string(), "1 + (-2)*t");
        assert_eq!(p(&[0, 0, 3]).to_string(), "(3)*t^2");
        assert_eq!(TauPoly::<BigRational>::zero().to_string(), "0");
    }
}
