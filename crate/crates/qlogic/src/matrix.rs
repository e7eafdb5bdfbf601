//! Dense exact matrices over any [`Field`].
//!
//! The canonicalization backbone of the crate is [`Matrix::rref`]: reduced
//! row echelon form with unit pivots, zeros above and below every pivot,
//! strictly increasing pivot columns and zero rows dropped. Because the
//! arithmetic is exact there is no pivoting heuristic — the first nonzero
//! entry of each column is the pivot — and the output is canonical: two row
//! spaces are equal iff their RREFs are identical.
//!
//! Ambient dimensions in this crate stay small (at most 16 over Q(i), 6 over
//! GF(p)), so everything is dense and row-major.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Field, FieldTag, Scalar};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    entries: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn new(field: F, rows: usize, cols: usize, entries: Vec<F::Elem>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix { field, rows, cols, entries })
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn construct(field: F, rows: usize, cols: usize, f: impl Fn(usize, usize) -> F::Elem) -> Self {
        let entries = (0..rows * cols).map(|idx| f(idx / cols, idx % cols)).collect();
        Matrix { field, rows, cols, entries }
    }

    pub fn zero(field: F, rows: usize, cols: usize) -> Self {
        let z = field.zero();
        Matrix::construct(field, rows, cols, |_, _| z.clone())
    }

    pub fn identity(field: F, n: usize) -> Self {
        let (z, o) = (field.zero(), field.one());
        Matrix::construct(field, n, n, |r, c| if r == c { o.clone() } else { z.clone() })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &F::Elem {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        assert!(r < self.rows, "row out of bounds");
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.field.is_zero(e))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.field.clone(), self.rows)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Matrix::construct(self.field.clone(), self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    /// Entrywise involution.
    pub fn conj(&self) -> Self {
        Matrix::construct(self.field.clone(), self.rows, self.cols, |r, c| {
            self.field.conj(self.at(r, c))
        })
    }

    /// The adjoint `A*`: entry `(i,j)` is `conj(A(j,i))`. Over fields with
    /// identity involution this is the plain transpose.
    pub fn conj_transpose(&self) -> Self {
        Matrix::construct(self.field.clone(), self.cols, self.rows, |r, c| {
            self.field.conj(self.at(c, r))
        })
    }

    pub fn neg(&self) -> Self {
        Matrix::construct(self.field.clone(), self.rows, self.cols, |r, c| {
            self.field.neg(self.at(r, c))
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Matrix::construct(self.field.clone(), self.rows, self.cols, |r, c| {
            self.field.add(self.at(r, c), other.at(r, c))
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Matrix::construct(self.field.clone(), self.rows, self.cols, |r, c| {
            self.field.sub(self.at(r, c), other.at(r, c))
        }))
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        Matrix::construct(self.field.clone(), self.rows, self.cols, |r, c| {
            self.field.mul(self.at(r, c), s)
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        Ok(Matrix::construct(f.clone(), self.rows, other.cols, |r, c| {
            let mut acc = f.zero();
            for k in 0..self.cols {
                acc = f.add(&acc, &f.mul(self.at(r, k), other.at(k, c)));
            }
            acc
        }))
    }

    /// `A * x` for a column vector `x`.
    pub fn mul_vec(&self, x: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = f.zero();
                for k in 0..self.cols {
                    acc = f.add(&acc, &f.mul(self.at(r, k), &x[k]));
                }
                acc
            })
            .collect())
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack column mismatch".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix::new(self.field.clone(), self.rows + other.rows, self.cols, entries)
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row mismatch".into()));
        }
        Ok(Matrix::construct(
            self.field.clone(),
            self.rows,
            self.cols + other.cols,
            |r, c| {
                if c < self.cols {
                    self.at(r, c).clone()
                } else {
                    other.at(r, c - self.cols).clone()
                }
            },
        ))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::construct(self.field.clone(), rows.len(), cols.len(), |r, c| {
            self.at(rows[r], cols[c]).clone()
        })
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Reduced row echelon form and its pivot columns. Zero rows are
    /// dropped, so the result has exactly `rank` rows and is the canonical
    /// representative of the row space.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.row_vecs();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(pr) = (r..m.len()).find(|&i| !f.is_zero(&m[i][c])) else {
                continue;
            };
            m.swap(r, pr);
            let inv = f.inv(&m[r][c]).expect("pivot is nonzero");
            for v in m[r].iter_mut() {
                *v = f.mul(v, &inv);
            }
            for i in 0..m.len() {
                if i != r && !f.is_zero(&m[i][c]) {
                    let factor = m[i][c].clone();
                    for j in 0..self.cols {
                        let delta = f.mul(&factor, &m[r][j]);
                        m[i][j] = f.sub(&m[i][j], &delta);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.len() {
                break;
            }
        }
        m.truncate(r);
        let entries = m.into_iter().flatten().collect();
        let reduced = Matrix::new(f, r, self.cols, entries).expect("rows are rectangular");
        (reduced, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis (as RREF rows) of `{ x : A x = 0 }`. The result has
    /// `cols - rank` rows in the ambient dimension `cols`.
    pub fn kernel(&self) -> Self {
        let f = self.field.clone();
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![f.zero(); self.cols];
            v[fc] = f.one();
            for (t, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(red.at(t, fc));
            }
            basis.push(v);
        }
        let stacked = Matrix::new(f, basis.len(), self.cols, basis.into_iter().flatten().collect())
            .expect("rows are rectangular");
        stacked.rref().0
    }

    /// One solution of `A x = b`, if any.
    pub fn solve(&self, b: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "rhs of length {} against {} rows",
                b.len(),
                self.rows
            )));
        }
        let f = self.field.clone();
        let rhs = Matrix::construct(f.clone(), self.rows, 1, |r, _| b[r].clone());
        let (red, pivots) = self.hstack(&rhs)?.rref();
        if pivots.contains(&self.cols) {
            return Ok(None); // inconsistent: pivot in the augmented column
        }
        let mut x = vec![f.zero(); self.cols];
        for (t, &pc) in pivots.iter().enumerate() {
            x[pc] = red.at(t, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// True iff `v` lies in the row space.
    pub fn row_space_contains(&self, v: &[F::Elem]) -> bool {
        assert_eq!(v.len(), self.cols, "ambient dimension mismatch");
        self.transpose()
            .solve(v)
            .expect("shape checked")
            .is_some()
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let aug = self
            .hstack(&Matrix::identity(self.field.clone(), n))
            .expect("rows match");
        let (red, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
            return None;
        }
        Some(red.submatrix(&(0..n).collect::<Vec<_>>(), &(n..2 * n).collect::<Vec<_>>()))
    }

    /// Exact determinant by Gaussian elimination with division tracking.
    pub fn det(&self) -> F::Elem {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let f = self.field.clone();
        let n = self.rows;
        let mut m = self.row_vecs();
        let mut det = f.one();
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !f.is_zero(&m[i][c])) else {
                return f.zero();
            };
            if pr != c {
                m.swap(c, pr);
                det = f.neg(&det);
            }
            det = f.mul(&det, &m[c][c]);
            let inv = f.inv(&m[c][c]).expect("pivot is nonzero");
            for i in c + 1..n {
                if !f.is_zero(&m[i][c]) {
                    let factor = f.mul(&m[i][c], &inv);
                    for j in c..n {
                        let delta = f.mul(&factor, &m[c][j]);
                        m[i][j] = f.sub(&m[i][j], &delta);
                    }
                }
            }
        }
        det
    }

    pub fn format_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|e| self.field.format(e)).collect())
            .collect()
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.field.format(self.at(r, c)))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// JSON form of a matrix: the field tag plus entry strings in the crate's
/// textual scalar syntax.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct MatrixJson {
    pub field: String,
    pub rows: Vec<Vec<String>>,
}

impl<F: Field> Matrix<F> {
    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            field: self.field.tag().to_string(),
            rows: self.format_rows(),
        }
    }

    pub fn from_json(field: F, json: &MatrixJson) -> Result<Self> {
        let tag: FieldTag = json.field.parse()?;
        if tag != field.tag() {
            return Err(Error::FieldMismatch(format!(
                "matrix is over {tag}, expected {}",
                field.tag()
            )));
        }
        let rows = json
            .rows
            .iter()
            .map(|row| row.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(field, rows)
    }
}

/// Parses a matrix from entry strings of a known tag into [`Scalar`] rows;
/// convenience for the CLI layer.
pub fn parse_scalar_rows(tag: FieldTag, rows: &[Vec<String>]) -> Result<Vec<Vec<Scalar>>> {
    rows.iter()
        .map(|row| row.iter().map(|s| Scalar::parse(tag, s)).collect())
        .collect()
}
