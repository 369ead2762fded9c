use std::fmt;

use super::axioms::{Certificate, Law};
use super::{dense_of, format_vector, sparse_of, LieSuperAlgebra, Sparse};
use crate::exactla::{vector, FieldSpec, Matrix, Scalar};
use crate::superspace::{sign, SuperSpace};

/// A finite-dimensional associative superalgebra, optionally unital.
#[derive(Clone, PartialEq, Eq)]
pub struct AssocSuperAlgebra {
    name: String,
    field: FieldSpec,
    space: SuperSpace,
    table: Vec<Sparse>,
    unit: Option<Vec<Scalar>>,
}

impl AssocSuperAlgebra {
    /// Full product table `f(i, j) = eᵢ·eⱼ`.
    pub fn from_fn<F>(
        name: impl Into<String>,
        field: FieldSpec,
        space: SuperSpace,
        unit: Option<Vec<Scalar>>,
        mut f: F,
    ) -> Self
    where
        F: FnMut(usize, usize) -> Vec<Scalar>,
    {
        let n = space.dim();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(sparse_of(&f(i, j)));
            }
        }
        AssocSuperAlgebra { name: name.into(), field, space, table, unit }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn unit(&self) -> Option<&[Scalar]> {
        self.unit.as_deref()
    }

    pub fn product_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn product_basis_dense(&self, i: usize, j: usize) -> Vec<Scalar> {
        dense_of(self.field, self.dim(), self.product_basis(i, j))
    }

    pub fn set_product_raw(&mut self, i: usize, j: usize, v: &[Scalar]) {
        let n = self.dim();
        self.table[i * n + j] = sparse_of(v);
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = self.field.zeros(n);
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in &self.table[i * n + j] {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    /// Graded commutator `eᵢeⱼ - (-1)^{|i||j|}eⱼeᵢ`.
    pub fn commutator_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let s = sign(self.field, self.space.parity(i) * self.space.parity(j));
        let mut v = self.product_basis_dense(i, j);
        vector::axpy(&mut v, &-s, &self.product_basis_dense(j, i));
        v
    }

    pub fn is_supercommutative(&self) -> bool {
        (0..self.dim()).all(|i| (i..self.dim()).all(|j| vector::is_zero(&self.commutator_basis(i, j))))
    }

    /// The Lie superalgebra with bracket `[a,b] = ab - (-1)^{|a||b|}ba`.
    pub fn commutator_algebra(&self) -> LieSuperAlgebra {
        LieSuperAlgebra::from_fn(format!("Lie({})", self.name), self.field, self.space.clone(), |i, j| {
            self.commutator_basis(i, j)
        })
    }

    /// Matrix of left multiplication by `x`.
    pub fn left_mul(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.mul(x, &self.field.unit_vector(n, j))).collect();
        Matrix::from_columns(self.field, n, &cols)
    }
}

impl fmt::Debug for AssocSuperAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AssocSuperAlgebra({}, {} over {})", self.name, self.space, self.field)
    }
}

/// Parity consistency, associativity on basis triples and unit laws.
pub fn check_assoc_axioms(a: &AssocSuperAlgebra) -> Certificate {
    let mut cert = Certificate::default();
    let n = a.dim();
    let sp = a.space();
    let lab = |i: usize| sp.label(i).to_string();
    for i in 0..n {
        for j in 0..n {
            let pij = sp.parity(i) + sp.parity(j);
            let bad = a.product_basis(i, j).iter().find(|(k, _)| sp.parity(*k) != pij).map(|(k, _)| *k);
            cert.check(bad.is_none(), Law::Parity, || {
                (vec![lab(i), lab(j)], format!("component on {}", lab(bad.unwrap())))
            });
        }
    }
    for i in 0..n {
        for j in 0..n {
            let ij = a.product_basis_dense(i, j);
            for k in 0..n {
                let ek = a.field.unit_vector(n, k);
                let left = a.mul(&ij, &ek);
                let right = a.mul(&a.field.unit_vector(n, i), &a.product_basis_dense(j, k));
                let d = vector::sub(&left, &right);
                cert.check(vector::is_zero(&d), Law::Associativity, || {
                    (vec![lab(i), lab(j), lab(k)], format_vector(sp, &d))
                });
            }
        }
    }
    if let Some(u) = a.unit() {
        let ok = sp.parity_of(u) == Some(crate::superspace::Parity::Even);
        cert.check(ok, Law::Unit, || (vec!["unit".into()], "unit is not even".into()));
        for i in 0..n {
            let e = a.field.unit_vector(n, i);
            let d1 = vector::sub(&a.mul(u, &e), &e);
            let d2 = vector::sub(&a.mul(&e, u), &e);
            cert.check(vector::is_zero(&d1) && vector::is_zero(&d2), Law::Unit, || {
                (vec![lab(i)], format!("1·e - e = {}, e·1 - e = {}", format_vector(sp, &d1), format_vector(sp, &d2)))
            });
        }
    }
    cert
}
