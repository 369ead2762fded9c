use crate::error::{Error, Result};
use crate::exactla::{EchelonAccumulator, Matrix, Scalar, Subquotient, Subspace};
use crate::homology::HomologyResult;
use crate::liesuper::AssocSuperAlgebra;
use crate::superspace::{Parity, SuperSpace};

/// Default top degree; `HC₁` needs `C₂ → C₁ → C₀`.
pub const DEFAULT_CONNES_DEGREE: usize = 2;

/// Cap on `dim A^{⊗(n+1)}`.
pub const MAX_TENSOR_DIM: usize = 6_000;

/// Digits of a basis index of `A^{⊗(n+1)}`, most significant first.
fn digits(mut idx: usize, d: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for k in (0..len).rev() {
        out[k] = idx % d;
        idx /= d;
    }
    out
}

fn index(ds: &[usize], d: usize) -> usize {
    ds.iter().fold(0, |acc, &x| acc * d + x)
}

/// `A^{⊗n}` with labels `a⊗b⊗…`.
pub fn tensor_power(a: &AssocSuperAlgebra, n: usize) -> SuperSpace {
    let d = a.dim();
    let total = d.pow(n as u32);
    let basis: Vec<(String, Parity)> = (0..total)
        .map(|i| {
            let ds = digits(i, d, n);
            let label = ds.iter().map(|&x| a.space().label(x)).collect::<Vec<_>>().join("⊗");
            (label, Parity::total(ds.iter().map(|&x| a.space().parity(x))))
        })
        .collect();
    SuperSpace::new(basis).expect("tensor labels are distinct")
}

/// The Connes complex `Cₙ(A) = A^{⊗(n+1)}/Im(1 - tₙ)` with the boundaries
/// induced by the Hochschild boundary.
#[derive(Clone, Debug)]
pub struct ConnesComplex {
    /// `A^{⊗(n+1)}` for `n = 0..=N`.
    pub tensor_spaces: Vec<SuperSpace>,
    /// `Cₙ` as a subquotient of `A^{⊗(n+1)}`.
    pub coinvariants: Vec<Subquotient>,
    /// Coordinate spaces of `Cₙ`.
    pub spaces: Vec<SuperSpace>,
    /// `boundaries[n]: Cₙ → Cₙ₋₁` in coinvariant coordinates (`n ≥ 1`);
    /// `boundaries[0]` is the zero map to the zero space.
    pub boundaries: Vec<Matrix>,
}

impl ConnesComplex {
    pub fn max_degree(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn homology(&self, n: usize) -> Result<HomologyResult> {
        if n >= self.max_degree() {
            return Err(Error::DegreeOverflow { degree: n + 1, limit: self.max_degree() });
        }
        let q = Subquotient::new(self.boundaries[n].kernel_basis(), self.boundaries[n + 1].image())?;
        Ok(HomologyResult::from_subquotient(n, &self.spaces[n], &q))
    }
}

/// `tₙ(a₀⊗⋯⊗aₙ) = (-1)^{n + |aₙ|Σ_{k<n}|a_k|} aₙ⊗a₀⊗⋯⊗aₙ₋₁` on a basis tuple.
fn cyclic_operator(a: &AssocSuperAlgebra, n: usize) -> Matrix {
    let field = a.field();
    let d = a.dim();
    let len = d.pow((n + 1) as u32);
    let mut t = Matrix::zeros(field, len, len);
    for i in 0..len {
        let ds = digits(i, d, n + 1);
        let last = a.space().parity(ds[n]).is_odd();
        let before = ds[..n].iter().filter(|&&x| a.space().parity(x).is_odd()).count() % 2 == 1;
        let negative = (n % 2 == 1) ^ (last && before);
        let mut rotated = Vec::with_capacity(n + 1);
        rotated.push(ds[n]);
        rotated.extend_from_slice(&ds[..n]);
        t.set(index(&rotated, d), i, field.sign(negative));
    }
    t
}

/// The Hochschild boundary `d'ₙ: A^{⊗(n+1)} → A^{⊗n}`.
fn hochschild(a: &AssocSuperAlgebra, n: usize) -> Matrix {
    let field = a.field();
    let d = a.dim();
    let (src, tgt) = (d.pow((n + 1) as u32), d.pow(n as u32));
    let mut m = Matrix::zeros(field, tgt, src);
    for col in 0..src {
        let ds = digits(col, d, n + 1);
        for i in 0..n {
            let s = field.sign(i % 2 == 1);
            for (k, c) in a.product_basis(ds[i], ds[i + 1]) {
                let mut out = Vec::with_capacity(n);
                out.extend_from_slice(&ds[..i]);
                out.push(*k);
                out.extend_from_slice(&ds[i + 2..]);
                m.add_to(index(&out, d), col, &(&s * c));
            }
        }
        let last = a.space().parity(ds[n]).is_odd();
        let before = ds[..n].iter().filter(|&&x| a.space().parity(x).is_odd()).count() % 2 == 1;
        let s = field.sign((n % 2 == 1) ^ (last && before));
        for (k, c) in a.product_basis(ds[n], ds[0]) {
            let mut out = Vec::with_capacity(n);
            out.push(*k);
            out.extend_from_slice(&ds[1..n]);
            m.add_to(index(&out, d), col, &(&s * c));
        }
    }
    m
}

/// Builds the Connes complex up to degree `max_degree`, checking that each
/// Hochschild boundary maps `Im(1 - tₙ)` into `Im(1 - tₙ₋₁)` and that
/// `d ∘ d = 0` on coinvariants.
pub fn connes(a: &AssocSuperAlgebra, max_degree: usize) -> Result<ConnesComplex> {
    let field = a.field();
    let d = a.dim();
    if max_degree == 0 {
        return Err(Error::Input("the Connes complex needs degree at least 1".into()));
    }
    let top = d.checked_pow((max_degree + 1) as u32).unwrap_or(usize::MAX);
    if top > MAX_TENSOR_DIM {
        return Err(Error::DegreeOverflow { degree: max_degree, limit: max_degree - 1 });
    }
    let mut tensor_spaces = Vec::new();
    let mut coinvariants: Vec<Subquotient> = Vec::new();
    let mut spaces = Vec::new();
    let mut boundaries = Vec::new();
    for n in 0..=max_degree {
        let space = tensor_power(a, n + 1);
        let len = space.dim();
        let t = cyclic_operator(a, n);
        let one_minus_t = Matrix::identity(field, len).add(&t.scale(&-field.one()));
        let q = Subquotient::new(Subspace::full(field, len), one_minus_t.image())?;
        let parities: Vec<Parity> = q
            .section()
            .iter()
            .map(|r| space.parity_of(r).expect("coinvariants of a graded space are graded"))
            .collect();
        spaces.push(quotient_space(&space, q.section(), parities));
        if n == 0 {
            boundaries.push(Matrix::zeros(field, 0, q.dim()));
        } else {
            let h = hochschild(a, n);
            let prev = &coinvariants[n - 1];
            for g in q.bottom().basis() {
                if !prev.bottom().contains(&h.mul_vec(g)) {
                    return Err(Error::ComplexInconsistent(format!("d'{n} does not preserve Im(1 - t)")));
                }
            }
            let cols: Vec<Vec<Scalar>> = q.section().iter().map(|r| prev.reduce(&h.mul_vec(r))).collect();
            boundaries.push(Matrix::from_columns(field, prev.dim(), &cols));
        }
        tensor_spaces.push(space);
        coinvariants.push(q);
    }
    for n in 2..=max_degree {
        if !boundaries[n - 1].mul(&boundaries[n]).is_zero() {
            crate::homology::ce::record_complex(false);
            return Err(Error::ComplexInconsistent(format!("d{} ∘ d{n} ≠ 0 on coinvariants", n - 1)));
        }
    }
    crate::homology::ce::record_complex(true);
    Ok(ConnesComplex { tensor_spaces, coinvariants, spaces, boundaries })
}

/// Coordinate space of a quotient labelled by the leading basis word of each
/// representative.
pub(crate) fn quotient_space(space: &SuperSpace, reps: &[Vec<Scalar>], parities: Vec<Parity>) -> SuperSpace {
    let mut used = std::collections::HashSet::new();
    let basis: Vec<(String, Parity)> = reps
        .iter()
        .zip(parities)
        .map(|(r, p)| {
            let k = r.iter().position(|c| !c.is_zero()).expect("nonzero representative");
            let mut label = format!("[{}]", space.label(k));
            while !used.insert(label.clone()) {
                label.push('\'');
            }
            (label, p)
        })
        .collect();
    SuperSpace::new(basis).expect("labels made unique")
}

/// `HCₙ(A)`.
pub fn hc(a: &AssocSuperAlgebra, n: usize) -> Result<HomologyResult> {
    connes(a, (n + 1).max(1))?.homology(n)
}

/// `[A, A]`, spanned by `ab - (-1)^{|a||b|}ba`.
pub fn commutator_subspace(a: &AssocSuperAlgebra) -> Subspace {
    let mut acc = EchelonAccumulator::new(a.field(), a.dim());
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            acc.insert(a.commutator_basis(i, j));
        }
    }
    acc.finish()
}
