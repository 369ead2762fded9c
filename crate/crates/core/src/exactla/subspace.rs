use super::matrix::Matrix;
use super::scalar::{FieldSpec, Scalar};
use super::vector;
use crate::error::{Error, Result};

/// A subspace of `field^ambient`, stored as its reduced row echelon basis.
///
/// The echelon form is unique per subspace, so `==` is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: (0..ambient).map(|i| field.unit_vector(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<I: IntoIterator<Item = Vec<Scalar>>>(field: FieldSpec, ambient: usize, vectors: I) -> Self {
        let mut acc = EchelonAccumulator::new(field, ambient);
        for v in vectors {
            acc.insert(v);
        }
        acc.finish()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// Echelon basis rows.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "ambient mismatch");
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if !c.is_zero() {
                vector::axpy(&mut out, &-c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vector::is_zero(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Linear combination of the basis rows.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        vector::combine(self.field, self.ambient, coords.iter().zip(&self.rows))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::span(self.field, self.ambient, self.rows.iter().chain(&other.rows).cloned()))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        // (x, y) with sum x_i a_i = sum y_j b_j
        let cols: Vec<Vec<Scalar>> =
            self.rows.iter().cloned().chain(other.rows.iter().map(|b| vector::neg(b))).collect();
        let k = Matrix::from_columns(self.field, self.ambient, &cols).kernel_basis();
        let n = self.dim();
        Ok(Subspace::span(
            self.field,
            self.ambient,
            k.basis().iter().map(|kv| vector::combine(self.field, self.ambient, kv[..n].iter().zip(&self.rows))),
        ))
    }

    /// Image under a linear map given as a matrix of shape `target × ambient`.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        Subspace::span(self.field, m.rows(), self.rows.iter().map(|r| m.mul_vec(r)))
    }

    /// Matrix whose columns are the basis vectors (`ambient × dim`).
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.field, self.ambient, &self.rows)
    }
}

/// Incremental reduced echelon form. Rows are kept fully reduced and sorted by pivot.
#[derive(Clone, Debug)]
pub struct EchelonAccumulator {
    field: FieldSpec,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl EchelonAccumulator {
    pub fn new(field: FieldSpec, ambient: usize) -> Self {
        EchelonAccumulator { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        EchelonAccumulator { field: s.field, ambient: s.ambient, rows: s.rows.clone(), pivots: s.pivots.clone() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient mismatch");
        if self.is_full() {
            return false;
        }
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if !c.is_zero() {
                vector::axpy(&mut v, &-c, row);
            }
        }
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[lead].inv().expect("nonzero");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            let c = row[lead].clone();
            if !c.is_zero() {
                vector::axpy(row, &-c, &v);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(pos, lead);
        self.rows.insert(pos, v);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if !c.is_zero() {
                vector::axpy(&mut w, &-c, row);
            }
        }
        vector::is_zero(&w)
    }

    pub fn finish(self) -> Subspace {
        Subspace { field: self.field, ambient: self.ambient, rows: self.rows, pivots: self.pivots }
    }
}

/// `top / bottom` with a chosen section.
///
/// The section is the echelon basis of `top` reduced modulo `bottom`; its
/// pivots are disjoint from those of `bottom`, which makes `reduce` a
/// coordinate read-off.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subquotient {
    top: Subspace,
    bottom: Subspace,
    section: Subspace,
}

impl Subquotient {
    pub fn new(top: Subspace, bottom: Subspace) -> Result<Self> {
        top.check_ambient(&bottom)?;
        if !top.contains_subspace(&bottom) {
            return Err(Error::Containment);
        }
        let section = Subspace::span(top.field, top.ambient, top.rows.iter().map(|r| bottom.reduce(r)));
        debug_assert_eq!(section.dim() + bottom.dim(), top.dim());
        Ok(Subquotient { top, bottom, section })
    }

    pub fn dim(&self) -> usize {
        self.section.dim()
    }

    pub fn ambient(&self) -> usize {
        self.top.ambient
    }

    pub fn field(&self) -> FieldSpec {
        self.top.field
    }

    pub fn top(&self) -> &Subspace {
        &self.top
    }

    pub fn bottom(&self) -> &Subspace {
        &self.bottom
    }

    /// Representatives of the quotient basis.
    pub fn section(&self) -> &[Vec<Scalar>] {
        self.section.basis()
    }

    /// Coordinates of the class of `v`; `v` must lie in `top`.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.bottom.reduce(v);
        self.section.pivots().iter().map(|&p| r[p].clone()).collect()
    }

    /// Like [`Subquotient::reduce`] but rejects vectors outside `top`.
    pub fn try_reduce(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let r = self.bottom.reduce(v);
        self.section.coordinates(&r)
    }

    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.section.combine(coords)
    }

    /// Matrix of `reduce` restricted to the ambient space (`dim × ambient`).
    /// Only meaningful on vectors of `top`.
    pub fn reduce_matrix(&self) -> Matrix {
        let n = self.ambient();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.reduce(&self.field().unit_vector(n, j))).collect();
        Matrix::from_columns(self.field(), self.dim(), &cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Q.int(x)).collect()
    }

    #[test]
    fn subquotient_examples() {
        let full = Subspace::full(Q, 2);
        let sq = Subquotient::new(full.clone(), full.clone()).unwrap();
        assert_eq!(sq.dim(), 0);

        let sq = Subquotient::new(full, Subspace::zero(Q, 2)).unwrap();
        assert_eq!(sq.dim(), 2);
        assert_eq!(sq.reduce(&v(&[3, -1])), v(&[3, -1]));

        let top = Subspace::span(Q, 3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let bottom = Subspace::span(Q, 3, vec![v(&[1, 1, 0])]);
        let sq = Subquotient::new(top, bottom).unwrap();
        assert_eq!(sq.dim(), 1);
        let c = sq.reduce(&v(&[1, 0, 0]));
        assert_eq!(sq.reduce(&sq.lift(&c)), c);
        // e1 and -e2 are the same class
        assert_eq!(sq.reduce(&v(&[1, 0, 0])), sq.reduce(&v(&[0, -1, 0])));
    }

    #[test]
    fn containment_error() {
        let a = Subspace::span(Q, 2, vec![v(&[1, 0])]);
        let b = Subspace::span(Q, 2, vec![v(&[0, 1])]);
        assert!(matches!(Subquotient::new(a, b), Err(Error::Containment)));
    }

    #[test]
    fn intersect_examples() {
        let a = Subspace::span(Q, 2, vec![v(&[1, 0])]);
        let b = Subspace::span(Q, 2, vec![v(&[1, 1])]);
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert_eq!(a.intersect(&b).unwrap().dim(), 0);
        let p1 = Subspace::span(Q, 3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let p2 = Subspace::span(Q, 3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let line = p1.intersect(&p2).unwrap();
        assert_eq!(line, Subspace::span(Q, 3, vec![v(&[0, 2, 0])]));
        assert!(matches!(a.intersect(&p1), Err(Error::AmbientMismatch { .. })));
    }

    #[test]
    fn try_reduce_rejects_outside_top() {
        let top = Subspace::span(Q, 3, vec![v(&[1, 0, 0])]);
        let sq = Subquotient::new(top, Subspace::zero(Q, 3)).unwrap();
        assert!(sq.try_reduce(&v(&[0, 1, 0])).is_none());
        assert_eq!(sq.try_reduce(&v(&[2, 0, 0])), Some(v(&[2])));
    }
}
