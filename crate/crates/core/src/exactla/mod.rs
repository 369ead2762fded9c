//! Exact scalars and linear algebra over ℚ and 𝔽ₚ.

mod matrix;
mod rational;
mod scalar;
mod subspace;

pub use matrix::Matrix;
pub use rational::{ParseRationalError, Rational};
pub use scalar::{FieldSpec, Scalar};
pub use subspace::{EchelonAccumulator, Subquotient, Subspace};

/// Dense vector helpers. Vectors are plain `Vec<Scalar>` / `&[Scalar]`.
pub mod vector {
    use super::{FieldSpec, Scalar};

    pub fn is_zero(v: &[Scalar]) -> bool {
        v.iter().all(Scalar::is_zero)
    }

    pub fn eq(a: &[Scalar], b: &[Scalar]) -> bool {
        a == b
    }

    /// `y += c * x`
    pub fn axpy(y: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
        debug_assert_eq!(y.len(), x.len());
        if c.is_zero() {
            return;
        }
        for (yi, xi) in y.iter_mut().zip(x) {
            if !xi.is_zero() {
                *yi += &(c * xi);
            }
        }
    }

    pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn neg(a: &[Scalar]) -> Vec<Scalar> {
        a.iter().map(|x| -x).collect()
    }

    pub fn scale(c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
        a.iter().map(|x| c * x).collect()
    }

    pub fn combine<'a, I>(field: FieldSpec, n: usize, terms: I) -> Vec<Scalar>
    where
        I: IntoIterator<Item = (&'a Scalar, &'a Vec<Scalar>)>,
    {
        let mut out = field.zeros(n);
        for (c, v) in terms {
            axpy(&mut out, c, v);
        }
        out
    }

    /// Nonzero entries as `(index, value)` pairs.
    pub fn support(v: &[Scalar]) -> impl Iterator<Item = (usize, &Scalar)> {
        v.iter().enumerate().filter(|(_, x)| !x.is_zero())
    }

    /// Kronecker product of coordinate vectors, row-major on `(i, j)`.
    pub fn kron(field: FieldSpec, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = field.zeros(a.len() * b.len());
        for (i, x) in support(a) {
            for (j, y) in support(b) {
                out[i * b.len() + j] = x * y;
            }
        }
        out
    }
}
