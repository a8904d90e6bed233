//! Dense matrices, antisymmetric matrices and 1-based index subsets.
//!
//! Everything is stored row-major and owned; values are immutable after
//! construction except through explicit setters. Index subsets are 1-based
//! throughout because the minor-summation signs depend on the sum of the
//! element values.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Exhaustive subset enumeration is allowed up to this dimension (2^12 sets).
pub const SUBSET_ENUM_MAX_DIM: usize = 12;

/// Relative tolerance for accepting and symmetrizing nearly-skew float input.
pub const SKEW_FLOAT_TOL: f64 = 1e-12;

/// Dense row-major matrix over a scalar field.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| S::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| -self.get(i, j).clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| {
            c.clone() * self.get(i, j).clone()
        })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "add: {}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).clone() + rhs.get(i, j).clone()
        }))
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "matmul: {}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = S::zero();
            for k in 0..self.cols {
                acc = acc + self.get(i, k).clone() * rhs.get(k, j).clone();
            }
            acc
        }))
    }

    pub fn trace(&self) -> Result<S> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "trace of {}x{}",
                self.rows, self.cols
            )));
        }
        let mut acc = S::zero();
        for i in 0..self.rows {
            acc = acc + self.get(i, i).clone();
        }
        Ok(acc)
    }

    pub fn max_magnitude(&self) -> f64 {
        self.data
            .iter()
            .map(Scalar::magnitude)
            .fold(0.0_f64, f64::max)
    }

    /// Submatrix with the given 1-based row and column subsets, in
    /// increasing index order.
    pub fn submatrix(&self, rows: &IndexSubset, cols: &IndexSubset) -> Result<Self> {
        rows.check_bound(self.rows)?;
        cols.check_bound(self.cols)?;
        Ok(Self::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows.as_slice()[i] - 1, cols.as_slice()[j] - 1).clone()
        }))
    }

    /// Determinant by fraction-free (Bareiss) elimination. Exact over
    /// rational scalars; row swaps flip the sign.
    pub fn determinant(&self) -> Result<S> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "determinant of {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(S::one());
        }
        let mut m = self.clone();
        let mut negated = false;
        let mut prev = S::one();
        for k in 0..n - 1 {
            let pivot_row = select_pivot(&m, k, |i| m.get(i, k));
            match pivot_row {
                None => return Ok(S::zero()),
                Some(r) if r != k => {
                    m.swap_rows(r, k);
                    negated = !negated;
                }
                _ => {}
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.get(i, j).clone() * m.get(k, k).clone()
                        - m.get(i, k).clone() * m.get(k, j).clone();
                    m.set(i, j, num.checked_div(&prev)?);
                }
            }
            prev = m.get(k, k).clone();
        }
        let det = m.get(n - 1, n - 1).clone();
        Ok(if negated { -det } else { det })
    }

    /// Inverse by Gauss-Jordan elimination with pivoting.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "inverse of {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Self::identity(n);
        for k in 0..n {
            let pivot_row = select_pivot(&m, k, |i| m.get(i, k));
            let r = pivot_row.ok_or(Error::SingularMatrix)?;
            if r != k {
                m.swap_rows(r, k);
                inv.swap_rows(r, k);
            }
            let p = m.get(k, k).clone();
            for j in 0..n {
                m.set(k, j, m.get(k, j).checked_div(&p)?);
                inv.set(k, j, inv.get(k, j).checked_div(&p)?);
            }
            for i in 0..n {
                if i == k || Scalar::is_zero(m.get(i, k)) {
                    continue;
                }
                let f = m.get(i, k).clone();
                for j in 0..n {
                    let mv = m.get(i, j).clone() - f.clone() * m.get(k, j).clone();
                    m.set(i, j, mv);
                    let iv = inv.get(i, j).clone() - f.clone() * inv.get(k, j).clone();
                    inv.set(i, j, iv);
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Simultaneous row and column swap (congruence by a transposition).
    pub(crate) fn swap_rowcol(&mut self, a: usize, b: usize) {
        self.swap_rows(a, b);
        self.swap_cols(a, b);
    }
}

/// Pivot choice: first nonzero for exact scalars, largest magnitude for
/// floats. Returns the chosen row index at or below `k`, or `None` when the
/// whole pivot column vanishes.
fn select_pivot<'a, S: Scalar>(
    m: &Matrix<S>,
    k: usize,
    entry: impl Fn(usize) -> &'a S,
) -> Option<usize> {
    if S::EXACT {
        (k..m.rows()).find(|&i| !Scalar::is_zero(entry(i)))
    } else {
        let mut best: Option<(usize, f64)> = None;
        for i in k..m.rows() {
            let mag = entry(i).magnitude();
            if mag > 0.0 && best.is_none_or(|(_, b)| mag > b) {
                best = Some((i, mag));
            }
        }
        best.map(|(i, _)| i)
    }
}

impl<S: Scalar> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Square antisymmetric matrix: `A(i,j) = -A(j,i)`, zero diagonal.
///
/// Exact scalars are validated strictly. Float input whose violation stays
/// within [`SKEW_FLOAT_TOL`] times the largest entry is symmetrized to
/// `(A - A^T)/2`; anything worse is rejected.
#[derive(Clone, PartialEq, Debug)]
pub struct SkewMatrix<S> {
    inner: Matrix<S>,
}

impl<S: Scalar> SkewMatrix<S> {
    pub fn new(m: Matrix<S>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "antisymmetric matrix must be square, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        if S::EXACT {
            for i in 0..m.rows() {
                for j in i..m.cols() {
                    let sum = m.get(i, j).clone() + m.get(j, i).clone();
                    if !Scalar::is_zero(&sum) {
                        return Err(Error::NotSkew { row: i, col: j });
                    }
                }
            }
            Ok(Self { inner: m })
        } else {
            let scale = m.max_magnitude();
            let tol = SKEW_FLOAT_TOL * scale;
            for i in 0..m.rows() {
                for j in i..m.cols() {
                    let violation = (m.get(i, j).clone() + m.get(j, i).clone()).magnitude();
                    if violation > tol {
                        return Err(Error::NotSkew { row: i, col: j });
                    }
                }
            }
            let half = S::one().checked_div(&S::from_int(2))?;
            let sym = Matrix::from_fn(m.rows(), m.cols(), |i, j| {
                if i == j {
                    S::zero()
                } else {
                    half.clone() * (m.get(i, j).clone() - m.get(j, i).clone())
                }
            });
            Ok(Self { inner: sym })
        }
    }

    /// Build from the strictly upper triangle; the lower triangle is
    /// mirrored with negation.
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let v = f(i, j);
                m.set(i, j, v.clone());
                m.set(j, i, -v);
            }
        }
        Self { inner: m }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            inner: Matrix::zero(n, n),
        }
    }

    /// Block-diagonal standard symplectic form `diag([[0,1],[-1,0]], ...)`.
    pub fn symplectic(n: usize) -> Result<Self> {
        if !n.is_multiple_of(2) {
            return Err(Error::Precondition(format!(
                "symplectic form needs even dimension, got {n}"
            )));
        }
        Ok(Self::from_upper(n, |i, j| {
            if j == i + 1 && i % 2 == 0 {
                S::one()
            } else {
                S::zero()
            }
        }))
    }

    pub fn dim(&self) -> usize {
        self.inner.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        self.inner.get(i, j)
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.inner
    }

    pub fn into_matrix(self) -> Matrix<S> {
        self.inner
    }

    /// Principal submatrix `A_I^I`; antisymmetry is inherited.
    pub fn principal_submatrix(&self, idx: &IndexSubset) -> Result<Self> {
        let sub = self.inner.submatrix(idx, idx)?;
        Ok(Self { inner: sub })
    }

    pub fn transpose(&self) -> Self {
        Self {
            inner: self.inner.transpose(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        Self {
            inner: self.inner.scale(c),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        Ok(Self {
            inner: self.inner.add(&rhs.inner)?,
        })
    }

    pub fn determinant(&self) -> Result<S> {
        self.inner.determinant()
    }

    /// Inverse of an antisymmetric matrix (itself antisymmetric).
    pub fn inverse(&self) -> Result<Self> {
        Self::new(self.inner.inverse()?)
    }
}

impl<S: Scalar> fmt::Display for SkewMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

/// Strictly increasing sequence of 1-based indices drawn from `{1, ..., n}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexSubset {
    indices: Vec<usize>,
}

impl IndexSubset {
    /// Validates strict increase and the `1..=n` range.
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Self> {
        for (pos, &i) in indices.iter().enumerate() {
            if i < 1 || i > n {
                return Err(Error::IndexOutOfRange { index: i, dim: n });
            }
            if pos > 0 && indices[pos - 1] >= i {
                return Err(Error::Precondition(format!(
                    "subset indices must be strictly increasing, got {indices:?}"
                )));
            }
        }
        Ok(Self { indices })
    }

    pub fn empty() -> Self {
        Self { indices: vec![] }
    }

    /// The full subset `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        Self {
            indices: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.indices
    }

    /// Sum of the 1-based element values; drives the `(-1)^{|I|}` signs.
    pub fn element_sum(&self) -> usize {
        self.indices.iter().sum()
    }

    /// Complement within `{1, ..., n}`.
    pub fn complement(&self, n: usize) -> Result<Self> {
        self.check_bound(n)?;
        let mut out = Vec::with_capacity(n - self.indices.len());
        let mut it = self.indices.iter().peekable();
        for i in 1..=n {
            if it.peek() == Some(&&i) {
                it.next();
            } else {
                out.push(i);
            }
        }
        Ok(Self { indices: out })
    }

    fn check_bound(&self, n: usize) -> Result<()> {
        if let Some(&last) = self.indices.last() {
            if last > n {
                return Err(Error::IndexOutOfRange { index: last, dim: n });
            }
        }
        Ok(())
    }
}

/// All size-`k` subsets of `{1, ..., n}` in lexicographic order.
pub fn subsets_of_size(n: usize, k: usize) -> Result<Vec<IndexSubset>> {
    if n > SUBSET_ENUM_MAX_DIM {
        return Err(Error::SizeLimit {
            dim: n,
            max: SUBSET_ENUM_MAX_DIM,
        });
    }
    if k > n {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<IndexSubset>) {
        if cur.len() == k {
            out.push(IndexSubset {
                indices: cur.clone(),
            });
            return;
        }
        for i in start..=n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 1, &mut cur, &mut out);
    Ok(out)
}

/// All even-size subsets of `{1, ..., n}`, increasing size then lexicographic.
pub fn even_subsets(n: usize) -> Result<Vec<IndexSubset>> {
    let mut out = Vec::new();
    let mut size = 0;
    while size <= n {
        out.extend(subsets_of_size(n, size)?);
        size += 2;
    }
    Ok(out)
}

/// Every subset of `{1, ..., n}`, increasing size then lexicographic.
pub fn all_subsets(n: usize) -> Result<Vec<IndexSubset>> {
    let mut out = Vec::new();
    for size in 0..=n {
        out.extend(subsets_of_size(n, size)?);
    }
    Ok(out)
}
