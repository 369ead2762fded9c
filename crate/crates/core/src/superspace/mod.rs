//! ℤ₂-graded spaces, parity-homogeneous maps and super exterior powers.

mod wedge;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Matrix, Scalar, Subspace};

pub use wedge::{exterior_power, koszul_sign, koszul_sign_is_negative, wedge_normalize, ExteriorPower, WedgeMonomial};

/// An element of ℤ₂.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn is_even(self) -> bool {
        self == Parity::Even
    }

    pub fn from_bool(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn as_u8(self) -> u8 {
        self as u8
    }

    /// Sum of an iterator of parities.
    pub fn total<I: IntoIterator<Item = Parity>>(it: I) -> Parity {
        it.into_iter().fold(Parity::Even, |a, b| a + b)
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bool(self.is_odd() != rhs.is_odd())
    }
}

impl Mul for Parity {
    type Output = Parity;
    fn mul(self, rhs: Parity) -> Parity {
        Parity::from_bool(self.is_odd() && rhs.is_odd())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_odd() { "1" } else { "0" })
    }
}

/// `(-1)^e` as a field element.
pub fn sign(field: FieldSpec, e: Parity) -> Scalar {
    field.sign(e.is_odd())
}

/// A super vector space with a labelled homogeneous basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperSpace {
    labels: Vec<String>,
    parities: Vec<Parity>,
}

impl SuperSpace {
    pub fn new<S: Into<String>>(basis: Vec<(S, Parity)>) -> Result<Self> {
        let (labels, parities): (Vec<String>, Vec<Parity>) = basis.into_iter().map(|(l, p)| (l.into(), p)).unzip();
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if let Some(j) = seen.insert(l.as_str(), i) {
                return Err(Error::Input(format!("duplicate basis label `{l}` at positions {j} and {i}")));
            }
        }
        Ok(SuperSpace { labels, parities })
    }

    /// Space with generated labels `prefix0, prefix1, ...`.
    pub fn with_parities(prefix: &str, parities: Vec<Parity>) -> Self {
        let labels = (0..parities.len()).map(|i| format!("{prefix}{i}")).collect();
        SuperSpace { labels, parities }
    }

    /// `(p|q)` with labels `e0..` for the even part and `f0..` for the odd part.
    pub fn standard(p: usize, q: usize) -> Self {
        let labels = (0..p).map(|i| format!("e{i}")).chain((0..q).map(|i| format!("f{i}"))).collect();
        let parities = std::iter::repeat(Parity::Even).take(p).chain(std::iter::repeat(Parity::Odd).take(q)).collect();
        SuperSpace { labels, parities }
    }

    pub fn zero() -> Self {
        SuperSpace { labels: Vec::new(), parities: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    /// `(dim₀, dim₁)`.
    pub fn sdim(&self) -> (usize, usize) {
        let odd = self.parities.iter().filter(|p| p.is_odd()).count();
        (self.dim() - odd, odd)
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn indices_of(&self, p: Parity) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parities[i] == p).collect()
    }

    /// Parity of `v`, `None` when `v` is not homogeneous. The zero vector counts as even.
    pub fn parity_of(&self, v: &[Scalar]) -> Option<Parity> {
        let mut found: Option<Parity> = None;
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match found {
                None => found = Some(self.parities[i]),
                Some(p) if p != self.parities[i] => return None,
                _ => {}
            }
        }
        Some(found.unwrap_or(Parity::Even))
    }

    /// Even and odd components of `v`.
    pub fn split(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut even = v.to_vec();
        let mut odd = v.to_vec();
        for (i, p) in self.parities.iter().enumerate() {
            let field = v[i].field();
            if p.is_odd() {
                even[i] = field.zero();
            } else {
                odd[i] = field.zero();
            }
        }
        (even, odd)
    }

    /// True when the subspace is spanned by homogeneous vectors.
    ///
    /// The echelon basis of a graded subspace is itself homogeneous (even and
    /// odd rows have pivots in disjoint coordinate sets), so checking the
    /// echelon rows is exact.
    pub fn is_graded(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|r| self.parity_of(r).is_some())
    }

    /// Parities of the echelon rows of a graded subspace.
    pub fn row_parities(&self, s: &Subspace) -> Vec<Parity> {
        s.basis().iter().map(|r| self.parity_of(r).expect("graded subspace")).collect()
    }

    /// `(dim₀, dim₁)` of a graded subspace.
    pub fn sdim_of(&self, s: &Subspace) -> (usize, usize) {
        count_parities(&self.row_parities(s))
    }
}

impl fmt::Display for SuperSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = self.sdim();
        write!(f, "({p}|{q})")
    }
}

pub fn count_parities(ps: &[Parity]) -> (usize, usize) {
    let odd = ps.iter().filter(|p| p.is_odd()).count();
    (ps.len() - odd, odd)
}

/// `a ⊗ b`, basis pairs in row-major order.
pub fn tensor_space(a: &SuperSpace, b: &SuperSpace) -> SuperSpace {
    let mut labels = Vec::with_capacity(a.dim() * b.dim());
    let mut parities = Vec::with_capacity(a.dim() * b.dim());
    for i in 0..a.dim() {
        for j in 0..b.dim() {
            labels.push(format!("{}⊗{}", a.label(i), b.label(j)));
            parities.push(a.parity(i) + b.parity(j));
        }
    }
    SuperSpace { labels, parities }
}

/// `a ⊕ b`; labels of `b` get a prime if they collide with labels of `a`.
pub fn direct_sum(a: &SuperSpace, b: &SuperSpace) -> SuperSpace {
    let mut labels = a.labels.clone();
    for l in &b.labels {
        let mut l = l.clone();
        while labels.contains(&l) {
            l.push('\'');
        }
        labels.push(l);
    }
    let parities = a.parities.iter().chain(&b.parities).copied().collect();
    SuperSpace { labels, parities }
}

/// A homogeneous vector together with its parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedVector {
    pub coords: Vec<Scalar>,
    pub parity: Parity,
}

impl GradedVector {
    pub fn new(space: &SuperSpace, coords: Vec<Scalar>) -> Result<Self> {
        if coords.len() != space.dim() {
            return Err(Error::AmbientMismatch { left: coords.len(), right: space.dim() });
        }
        let parity = space.parity_of(&coords).ok_or_else(|| Error::Input("vector is not parity-homogeneous".into()))?;
        Ok(GradedVector { coords, parity })
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }
}

/// A parity-homogeneous linear map; `matrix` has shape `target × source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    source: SuperSpace,
    target: SuperSpace,
    degree: Parity,
    matrix: Matrix,
}

impl GradedMap {
    pub fn new(source: SuperSpace, target: SuperSpace, degree: Parity, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::Size(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        for i in 0..matrix.rows() {
            for j in 0..matrix.cols() {
                if !matrix.get(i, j).is_zero() && target.parity(i) != source.parity(j) + degree {
                    return Err(Error::Input(format!(
                        "entry ({i},{j}) breaks degree {degree}: {} -> {}",
                        source.label(j),
                        target.label(i)
                    )));
                }
            }
        }
        Ok(GradedMap { source, target, degree, matrix })
    }

    /// Even map; panics if `matrix` is not parity preserving.
    pub fn even(source: SuperSpace, target: SuperSpace, matrix: Matrix) -> Self {
        Self::new(source, target, Parity::Even, matrix).expect("even map")
    }

    pub fn source(&self) -> &SuperSpace {
        &self.source
    }

    pub fn target(&self) -> &SuperSpace {
        &self.target
    }

    pub fn degree(&self) -> Parity {
        self.degree
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMap) -> Result<GradedMap> {
        if other.target != self.source {
            return Err(Error::Input("maps are not composable".into()));
        }
        Ok(GradedMap {
            source: other.source.clone(),
            target: self.target.clone(),
            degree: self.degree + other.degree,
            matrix: self.matrix.mul(&other.matrix),
        })
    }

    pub fn kernel(&self) -> Subspace {
        self.matrix.kernel_basis()
    }

    pub fn image(&self) -> Subspace {
        self.matrix.image()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}
