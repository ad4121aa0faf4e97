//! Dense square matrices over an exact field, indexed `0..=d`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// A `(d+1) × (d+1)` matrix whose entries all live in one field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    n: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    /// Builds a matrix from row-major entries. `n` must be at least 1.
    pub fn new(field: FieldSpec, n: usize, data: Vec<Scalar>) -> Result<Self> {
        if n == 0 || data.len() != n * n {
            return Err(Error::SizeMismatch {
                left: n * n,
                right: data.len(),
            });
        }
        if data.iter().any(|x| x.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Matrix { field, n, data })
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::SizeMismatch {
                left: n,
                right: bad.len(),
            });
        }
        Matrix::new(field, n, rows.into_iter().flatten().collect())
    }

    pub fn from_ints<R: AsRef<[i64]>>(field: FieldSpec, rows: &[R]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(field, rows)
    }

    /// Parses every entry with the exact-scalar grammar.
    pub fn parse<R: AsRef<[S]>, S: AsRef<str>>(field: FieldSpec, rows: &[R]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|s| field.parse(s.as_ref())).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        Matrix::from_rows(field, rows)
    }

    pub fn zeros(field: FieldSpec, n: usize) -> Self {
        Matrix {
            field,
            n,
            data: vec![field.zero(); n * n],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// The matrix unit `Δ_{i,j}`.
    pub fn unit(field: FieldSpec, n: usize, i: usize, j: usize) -> Self {
        let mut m = Matrix::zeros(field, n);
        m.set(i, j, field.one());
        m
    }

    pub fn diagonal(field: FieldSpec, entries: &[Scalar]) -> Result<Self> {
        let mut m = Matrix::zeros(field, entries.len().max(1));
        if entries.is_empty() {
            return Err(Error::SizeMismatch { left: 1, right: 0 });
        }
        for (i, x) in entries.iter().enumerate() {
            if x.field() != field {
                return Err(Error::FieldMismatch);
            }
            m.set(i, i, x.clone());
        }
        Ok(m)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Number of rows (`d + 1`).
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn diameter(&self) -> usize {
        self.n - 1
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.n + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.n + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.data.chunks(self.n)
    }

    pub fn diagonal_entries(&self) -> Vec<Scalar> {
        (0..self.n).map(|i| self.get(i, i).clone()).collect()
    }

    fn check_compatible(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let data = (0..n * n).map(|k| self.get(k % n, k / n).clone()).collect();
        Matrix {
            field: self.field,
            n,
            data,
        }
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        let n = self.n;
        let mut out = Matrix::zeros(self.field, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let acc = out.get(i, j) + &(a * b);
                        out.set(i, j, acc);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Product of a chain of matrices, left to right.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Matrix>) -> Result<Matrix> {
        let mut iter = factors.into_iter();
        let first = iter
            .next()
            .ok_or(Error::SizeMismatch { left: 1, right: 0 })?
            .clone();
        iter.try_fold(first, |acc, m| acc.matmul(m))
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        self.check_compatible(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(Matrix {
            field: self.field,
            n: self.n,
            data,
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|x| x * c).collect();
        Matrix {
            field: self.field,
            n: self.n,
            data,
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        (0..self.n).fold(self.field.zero(), |acc, i| acc + self.get(i, i))
    }

    /// Gauss–Jordan inverse; the first nonzero entry of each column is the pivot.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.n;
        let mut aug: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| {
                    if i == j {
                        self.field.one()
                    } else {
                        self.field.zero()
                    }
                }));
                row
            })
            .collect();
        let pivots = reduce(&mut aug, n);
        if pivots.len() < n {
            return Err(Error::Singular);
        }
        let data = aug
            .into_iter()
            .flat_map(|row| row.into_iter().skip(n))
            .collect();
        Ok(Matrix {
            field: self.field,
            n,
            data,
        })
    }

    pub fn determinant(&self) -> Scalar {
        let n = self.n;
        let mut rows: Vec<Vec<Scalar>> = self.rows().map(<[Scalar]>::to_vec).collect();
        let mut det = self.field.one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
                return self.field.zero();
            };
            if p != col {
                rows.swap(p, col);
                det = -det;
            }
            let pivot = rows[col][col].clone();
            det = &det * &pivot;
            let pinv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if rows[r][col].is_zero() {
                    continue;
                }
                let f = &rows[r][col] * &pinv;
                for c in col..n {
                    let v = &rows[r][c] - &(&f * &rows[col][c]);
                    rows[r][c] = v;
                }
            }
        }
        det
    }

    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<Scalar>> = self.rows().map(<[Scalar]>::to_vec).collect();
        reduce(&mut rows, self.n).len()
    }

    pub fn is_rank_one(&self) -> bool {
        self.rank() == 1
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.field, self.n)
    }

    /// `true` iff `self = c·I` for some scalar `c`.
    pub fn scalar_multiple_of_identity(&self) -> Option<Scalar> {
        let c = self.get(0, 0).clone();
        (*self == Matrix::identity(self.field, self.n).scale(&c)).then_some(c)
    }

    pub fn commutes_with(&self, other: &Matrix) -> Result<bool> {
        Ok(self.matmul(other)? == other.matmul(self)?)
    }

    /// Conjugation `T · self · T⁻¹` given `T` and its inverse.
    /// `u·vᵗ`.
    pub fn outer(field: FieldSpec, u: &[Scalar], v: &[Scalar]) -> Result<Matrix> {
        if u.len() != v.len() {
            return Err(Error::SizeMismatch {
                left: u.len(),
                right: v.len(),
            });
        }
        let data = u
            .iter()
            .flat_map(|a| v.iter().map(move |b| a * b))
            .collect();
        Matrix::new(field, u.len(), data)
    }

    /// `self·Δ_{i,i}·self⁻¹`, given `self⁻¹`.
    pub fn conjugate_unit(&self, inv: &Matrix, i: usize) -> Matrix {
        Matrix::outer(self.field, &self.column(i), inv.row(i)).expect("square")
    }

    pub fn conjugate(&self, t: &Matrix, t_inv: &Matrix) -> Result<Matrix> {
        t.matmul(self)?.matmul(t_inv)
    }
}

/// In-place reduced row echelon form on the first `cols` columns.
/// Returns the pivot column of each nonzero row, in order.
pub(crate) fn reduce(rows: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let m = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(p, r);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Outcome of solving a (possibly overdetermined) linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Solution {
    Unique(Vec<Scalar>),
    Inconsistent,
    Underdetermined,
}

/// Solves `Σ_j coeffs[r][j]·u_j = rhs[r]` for the unknowns `u`.
pub(crate) fn solve(coeffs: &[Vec<Scalar>], rhs: &[Scalar], unknowns: usize) -> Solution {
    let mut aug: Vec<Vec<Scalar>> = coeffs
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut row = row.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let pivots = reduce(&mut aug, unknowns + 1);
    if pivots.last() == Some(&unknowns) {
        return Solution::Inconsistent;
    }
    if pivots.len() < unknowns {
        return Solution::Underdetermined;
    }
    Solution::Unique(
        aug.iter()
            .take(unknowns)
            .map(|row| row[unknowns].clone())
            .collect(),
    )
}

/// `e = u·wᵗ` with `u` a nonzero column of `e`, or `None` if `e` does not
/// have rank 1.
fn rank_one_factors(e: &Matrix) -> Option<(Vec<Scalar>, Vec<Scalar>)> {
    let n = e.size();
    let pos = e.data.iter().position(|x| !x.is_zero())?;
    let (r, c) = (pos / n, pos % n);
    let pivot_inv = e.get(r, c).inv().expect("nonzero");
    let u = e.column(c);
    let w: Vec<Scalar> = e.row(r).iter().map(|x| x * &pivot_inv).collect();
    let exact = (0..n).all(|i| (0..n).all(|j| *e.get(i, j) == &u[i] * &w[j]));
    exact.then_some((u, w))
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .fold(a[0].field().zero(), |acc, (x, y)| acc + x * y)
}

/// Checks that `family` is a system of mutually orthogonal rank-1
/// idempotents summing to `I`, describing the first failure.
///
/// Writing each member as `u_i·w_iᵗ`, the products are
/// `E_i·E_j = (w_i·u_j)·u_i·w_jᵗ`, so only the scalars `w_i·u_j` are needed.
pub fn check_idempotent_family(family: &[Matrix]) -> std::result::Result<(), String> {
    let Some(first) = family.first() else {
        return Err("empty family".into());
    };
    let (field, n) = (first.field(), first.size());
    if family.len() != n {
        return Err(format!("{} members for matrices of size {n}", family.len()));
    }
    if family.iter().any(|e| e.field() != field || e.size() != n) {
        return Err("members differ in field or size".into());
    }
    let factors = family
        .iter()
        .enumerate()
        .map(|(i, e)| rank_one_factors(e).ok_or_else(|| format!("member {i} does not have rank 1")))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    for (i, (_, wi)) in factors.iter().enumerate() {
        for (j, (uj, _)) in factors.iter().enumerate() {
            let c = dot(wi, uj);
            let ok = if i == j { c.is_one() } else { c.is_zero() };
            if !ok {
                return Err(format!("product of members {i} and {j} is wrong"));
            }
        }
    }
    let sum = family[1..]
        .iter()
        .try_fold(family[0].clone(), |acc, e| acc.add(e))
        .map_err(|e| e.to_string())?;
    if !sum.is_identity() {
        return Err("members do not sum to I".into());
    }
    Ok(())
}

/// Finds an invertible `R` with `family[i] = R·Δ_{i,i}·R⁻¹`. Column `i` of
/// `R` is the leftmost nonzero column of `family[i]`.
pub fn recover_diagonalizer(family: &[Matrix]) -> Result<Matrix> {
    check_idempotent_family(family).map_err(Error::NotAnIdempotentFamily)?;
    let n = family.len();
    let field = family[0].field();
    let columns: Vec<Vec<Scalar>> = family
        .iter()
        .map(|e| {
            let j = (0..n)
                .find(|&j| (0..n).any(|i| !e.get(i, j).is_zero()))
                .expect("rank-1 member has a nonzero column");
            e.column(j)
        })
        .collect();
    let data = (0..n * n).map(|k| columns[k % n][k / n].clone()).collect();
    let r = Matrix::new(field, n, data)?;
    let r_inv = r.inverse()?;
    for (i, e) in family.iter().enumerate() {
        if r.conjugate_unit(&r_inv, i) != *e {
            return Err(Error::NotAnIdempotentFamily(format!(
                "member {i} is not recovered by the assembled diagonalizer"
            )));
        }
    }
    Ok(r)
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}>{}", self.field, self)
    }
}
