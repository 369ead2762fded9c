use std::fmt;

use super::scalar::{FieldSpec, Scalar};
use super::subspace::{EchelonAccumulator, Subspace};
use super::vector;

/// Dense exact matrix. Acts on column vectors: `y = A x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: field.zeros(rows * cols) }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix { field, rows: r, cols, data }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                if !x.is_zero() {
                    m.set(i, j, x.clone());
                }
            }
        }
        m
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(field, cols, rows.iter().map(|r| r.iter().map(|&x| field.int(x)).collect()).collect())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Scalar) {
        let idx = i * self.cols + j;
        self.data[idx] += v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in matrix-vector product");
        let mut out = self.field.zeros(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if !x.is_zero() {
                    t.set(j, i, x.clone());
                }
            }
        }
        t
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let rows = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend_from_slice(other.row(i));
                r
            })
            .collect();
        Matrix::from_rows(self.field, self.cols + other.cols, rows)
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Restricts to the given column indices, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_columns(self.field, self.rows, &cols.iter().map(|&j| self.column(j)).collect::<Vec<_>>())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_rows(self.field, self.cols, rows.iter().map(|&i| self.row(i).to_vec()).collect())
    }

    fn row_space(&self) -> Subspace {
        let mut acc = EchelonAccumulator::new(self.field, self.cols);
        for i in 0..self.rows {
            acc.insert(self.row(i).to_vec());
        }
        acc.finish()
    }

    pub fn rank(&self) -> usize {
        if self.rows <= self.cols {
            self.row_space().dim()
        } else {
            self.transpose().row_space().dim()
        }
    }

    /// Canonical basis of `{v : A v = 0}`.
    pub fn kernel_basis(&self) -> Subspace {
        let rs = self.row_space();
        let pivots = rs.pivots();
        let mut is_pivot = vec![false; self.cols];
        for &p in pivots {
            is_pivot[p] = true;
        }
        let mut vecs = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = self.field.unit_vector(self.cols, f);
            for (row, &p) in rs.basis().iter().zip(pivots) {
                if !row[f].is_zero() {
                    v[p] = -&row[f];
                }
            }
            vecs.push(v);
        }
        Subspace::span(self.field, self.cols, vecs)
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        self.transpose().row_space()
    }

    /// Some `x` with `A x = b`, if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut acc = EchelonAccumulator::new(self.field, self.cols + 1);
        for i in 0..self.rows {
            let mut r = self.row(i).to_vec();
            r.push(b[i].clone());
            acc.insert(r);
        }
        let rs = acc.finish();
        let mut x = self.field.zeros(self.cols);
        for (row, &p) in rs.basis().iter().zip(rs.pivots()) {
            if p == self.cols {
                return None;
            }
            x[p] = row[self.cols].clone();
        }
        debug_assert!(vector::eq(&self.mul_vec(&x), b));
        Some(x)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::zeros(Q, 0, 0).rank(), 0);
        assert_eq!(Matrix::identity(Q, 3).rank(), 3);
        assert_eq!(Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(Q, 2).kernel_basis().dim(), 0);
        assert_eq!(Matrix::zeros(Q, 2, 3).kernel_basis().dim(), 3);
        let k = Matrix::from_i64(Q, &[&[1, 1, 0]]).kernel_basis();
        assert_eq!(k.dim(), 2);
        // canonical echelon basis: e1 - e0 would be written with pivot at column 0
        assert_eq!(k.basis()[0], vec![Q.one(), Q.int(-1), Q.zero()]);
        assert_eq!(k.basis()[1], vec![Q.zero(), Q.zero(), Q.one()]);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        let x = a.solve(&[Q.int(3), Q.int(6)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![Q.int(3), Q.int(6)]);
        assert!(a.solve(&[Q.int(3), Q.int(7)]).is_none());
    }

    #[test]
    fn rank_over_prime_field_differs() {
        let f7 = FieldSpec::prime(7).unwrap();
        // det = 7, singular mod 7 only
        let q = Matrix::from_i64(Q, &[&[1, 2], &[3, 13]]);
        let p = Matrix::from_i64(f7, &[&[1, 2], &[3, 13]]);
        assert_eq!(q.rank(), 2);
        assert_eq!(p.rank(), 1);
    }
}
