//! Lie and associative superalgebras given by structure constants, their
//! axiom checkers, actions, crossed modules and standard constructions.

mod action;
mod assoc;
mod axioms;
mod constructors;
mod structure;

use std::fmt;

use crate::exactla::{FieldSpec, Matrix, Scalar};
use crate::superspace::{sign, Parity, SuperSpace};

pub use action::{check_action, check_compatible, check_crossed, semidirect, Action, CrossedModule};
pub use assoc::{check_assoc_axioms, AssocSuperAlgebra};
pub use axioms::{check_homomorphism, check_lie_axioms, Certificate, Law, Violation};
pub use constructors::{
    abelian, dual_numbers, grassmann, ground_field, heisenberg, matrix_assoc, matrix_gl, matrix_sl, solvable2,
};
pub use structure::{
    abelianization, bracket_span, center, ideal_closure, is_engel, is_ideal, quotient_algebra, series, subalgebra,
    subalgebra_closure, Quotient, Series,
};

/// Sparse coefficient list `[(basis index, coefficient)]`.
pub type Sparse = Vec<(usize, Scalar)>;

pub(crate) fn sparse_of(v: &[Scalar]) -> Sparse {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub(crate) fn dense_of(field: FieldSpec, n: usize, s: &[(usize, Scalar)]) -> Vec<Scalar> {
    let mut v = field.zeros(n);
    for (i, c) in s {
        v[*i] += c;
    }
    v
}

/// Renders a vector as `c·label + …` for reports.
pub fn format_vector(space: &SuperSpace, v: &[Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| if c.is_one() { space.label(i).to_string() } else { format!("({c})·{}", space.label(i)) })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// A finite-dimensional Lie superalgebra on a homogeneous basis.
#[derive(Clone, PartialEq, Eq)]
pub struct LieSuperAlgebra {
    name: String,
    field: FieldSpec,
    space: SuperSpace,
    table: Vec<Sparse>,
}

impl LieSuperAlgebra {
    /// Builds the full table from `f(i, j) = [eᵢ, eⱼ]` with no symmetrization.
    pub fn from_fn<F>(name: impl Into<String>, field: FieldSpec, space: SuperSpace, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Vec<Scalar>,
    {
        let n = space.dim();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                assert_eq!(v.len(), n, "bracket value has wrong length");
                table.push(sparse_of(&v));
            }
        }
        LieSuperAlgebra { name: name.into(), field, space, table }
    }

    /// Builds from brackets on pairs `i ≤ j`; pairs `i > j` follow from graded
    /// antisymmetry `[eⱼ, eᵢ] = -(-1)^{|i||j|}[eᵢ, eⱼ]`. Unlisted pairs are zero.
    pub fn from_upper<I>(name: impl Into<String>, field: FieldSpec, space: SuperSpace, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Vec<Scalar>)>,
    {
        let n = space.dim();
        let mut table = vec![Vec::new(); n * n];
        for (i, j, v) in entries {
            assert!(i <= j, "from_upper expects i <= j");
            assert_eq!(v.len(), n);
            let s = -sign(field, space.parity(i) * space.parity(j));
            if i != j {
                table[j * n + i] = sparse_of(&v.iter().map(|x| x * &s).collect::<Vec<_>>());
            }
            table[i * n + j] = sparse_of(&v);
        }
        LieSuperAlgebra { name: name.into(), field, space, table }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
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

    pub fn sdim(&self) -> (usize, usize) {
        self.space.sdim()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.space.parity(i)
    }

    /// `[eᵢ, eⱼ]` as a sparse list.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket_basis_dense(&self, i: usize, j: usize) -> Vec<Scalar> {
        dense_of(self.field, self.dim(), self.bracket_basis(i, j))
    }

    /// Overwrites one table entry. Meant for tests that corrupt an algebra on purpose.
    pub fn set_bracket_raw(&mut self, i: usize, j: usize, v: &[Scalar]) {
        let n = self.dim();
        self.table[i * n + j] = sparse_of(v);
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
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

    /// `[eᵢ, y]`.
    pub fn bracket_left_basis(&self, i: usize, y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = self.field.zeros(n);
        for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            for (k, c) in &self.table[i * n + j] {
                out[*k] += &(b * c);
            }
        }
        out
    }

    /// Matrix of `ad(eᵢ)`.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for j in 0..n {
            for (k, c) in &self.table[i * n + j] {
                m.add_to(*k, j, c);
            }
        }
        m
    }

    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for j in 0..n {
                for (k, c) in &self.table[i * n + j] {
                    m.add_to(*k, j, &(a * c));
                }
            }
        }
        m
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        self.field.unit_vector(self.dim(), i)
    }
}

impl fmt::Debug for LieSuperAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieSuperAlgebra({}, {} over {})", self.name, self.space, self.field)
    }
}

impl fmt::Display for LieSuperAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} over {}", self.name, self.space, self.field)?;
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                let v = self.bracket_basis_dense(i, j);
                if !v.iter().all(Scalar::is_zero) {
                    writeln!(
                        f,
                        "  [{}, {}] = {}",
                        self.space.label(i),
                        self.space.label(j),
                        format_vector(&self.space, &v)
                    )?;
                }
            }
        }
        Ok(())
    }
}
