use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar, Subquotient, Subspace};
use crate::superspace::{GradedMap, Parity, SuperSpace};

/// A finite sequence `V₀ → V₁ → ⋯ → V_k` of even maps, optionally preceded
/// by `0 →` and followed by `→ 0`.
#[derive(Clone, Debug)]
pub struct ExactSequence {
    pub labels: Vec<String>,
    pub maps: Vec<GradedMap>,
    pub leading_zero: bool,
    pub trailing_zero: bool,
}

impl ExactSequence {
    pub fn new(labels: Vec<String>, maps: Vec<GradedMap>) -> Self {
        ExactSequence { labels, maps, leading_zero: false, trailing_zero: false }
    }

    pub fn with_leading_zero(mut self) -> Self {
        self.leading_zero = true;
        self
    }

    pub fn with_trailing_zero(mut self) -> Self {
        self.trailing_zero = true;
        self
    }

    pub fn spaces(&self) -> Vec<&SuperSpace> {
        let mut out: Vec<&SuperSpace> = self.maps.iter().map(|m| m.source()).collect();
        if let Some(last) = self.maps.last() {
            out.push(last.target());
        }
        out
    }

    /// `(dim₀|dim₁)` of every space in order.
    pub fn dimensions(&self) -> Vec<(usize, usize)> {
        self.spaces().iter().map(|s| s.sdim()).collect()
    }
}

/// Outcome at one node: `Im(in) = Ker(out)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeCheck {
    pub label: String,
    pub image_dim: usize,
    pub kernel_dim: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExactnessCertificate {
    pub nodes: Vec<NodeCheck>,
}

impl ExactnessCertificate {
    pub fn is_exact(&self) -> bool {
        self.nodes.iter().all(|n| n.exact)
    }

    pub fn first_failure(&self) -> Option<&NodeCheck> {
        self.nodes.iter().find(|n| !n.exact)
    }
}

impl fmt::Display for ExactnessCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first_failure() {
            None => write!(f, "exact at all {} nodes", self.nodes.len()),
            Some(n) => write!(f, "not exact at {}: image dim {}, kernel dim {}", n.label, n.image_dim, n.kernel_dim),
        }
    }
}

/// Checks `Im fₖ = Ker fₖ₊₁` at every interior node by comparing canonical
/// echelon bases, injectivity of the first map after a leading `0`, and
/// surjectivity of the last map before a trailing `0`.
pub fn exactness_check(seq: &ExactSequence) -> Result<ExactnessCertificate> {
    let spaces = seq.spaces();
    if seq.labels.len() != spaces.len() {
        return Err(Error::Input(format!("{} labels for {} spaces", seq.labels.len(), spaces.len())));
    }
    for (k, w) in seq.maps.windows(2).enumerate() {
        if w[0].target().dim() != w[1].source().dim() {
            return Err(Error::Input(format!("maps {k} and {} are not composable", k + 1)));
        }
    }
    let mut nodes = Vec::new();
    if seq.leading_zero {
        if let Some(first) = seq.maps.first() {
            let k = first.kernel();
            nodes.push(NodeCheck {
                label: seq.labels[0].clone(),
                image_dim: 0,
                kernel_dim: k.dim(),
                exact: k.is_zero(),
            });
        }
    }
    for (k, w) in seq.maps.windows(2).enumerate() {
        let im = w[0].image();
        let ker = w[1].kernel();
        nodes.push(NodeCheck {
            label: seq.labels[k + 1].clone(),
            image_dim: im.dim(),
            kernel_dim: ker.dim(),
            exact: im == ker,
        });
    }
    if seq.trailing_zero {
        if let Some(last) = seq.maps.last() {
            let im = last.image();
            let n = last.target().dim();
            nodes.push(NodeCheck {
                label: seq.labels[seq.labels.len() - 1].clone(),
                image_dim: im.dim(),
                kernel_dim: n,
                exact: im.dim() == n,
            });
        }
    }
    Ok(ExactnessCertificate { nodes })
}

/// Coordinate space of a graded subspace (or quotient) with the parities of
/// its basis vectors.
pub fn coordinate_space(prefix: &str, parities: Vec<Parity>) -> SuperSpace {
    SuperSpace::with_parities(prefix, parities)
}

fn parities_of(space: &SuperSpace, vs: &[Vec<Scalar>]) -> Vec<Parity> {
    vs.iter().map(|v| space.parity_of(v).expect("basis of a graded subspace is homogeneous")).collect()
}

/// A commutative diagram with exact rows
///
/// ```text
///        A₁ --f₁--> A₂ --f₂--> A₃ --> 0
///        |v₁        |v₂        |v₃
///   0 -> B₁ --g₁--> B₂ --g₂--> B₃
/// ```
#[derive(Clone, Debug)]
pub struct SnakeDiagram {
    pub a: [SuperSpace; 3],
    pub b: [SuperSpace; 3],
    pub f: [Matrix; 2],
    pub g: [Matrix; 2],
    pub v: [Matrix; 3],
}

/// The six-term sequence `Ker v₁ → Ker v₂ → Ker v₃ → Coker v₁ → Coker v₂ → Coker v₃ → 0`.
#[derive(Clone, Debug)]
pub struct Snake {
    pub sequence: ExactSequence,
    pub kernels: [Subspace; 3],
    pub cokernels: [Subquotient; 3],
}

/// Builds the snake sequence, including the connecting map
/// `δ(k) = [g₁⁻¹(v₂(f₂⁻¹(k)))]`, after checking that the squares commute and
/// the rows satisfy the hypotheses.
pub fn snake(d: &SnakeDiagram, labels: [&str; 6]) -> Result<Snake> {
    let field = d.v[0].field();
    if d.v[1].mul(&d.f[0]) != d.g[0].mul(&d.v[0]) || d.v[2].mul(&d.f[1]) != d.g[1].mul(&d.v[1]) {
        return Err(Error::ComplexInconsistent("snake diagram does not commute".into()));
    }
    if d.g[0].rank() != d.g[0].cols() {
        return Err(Error::ComplexInconsistent("bottom row is not injective on the left".into()));
    }
    if d.f[1].rank() != d.f[1].rows() {
        return Err(Error::ComplexInconsistent("top row is not surjective on the right".into()));
    }
    if !d.f[1].mul(&d.f[0]).is_zero() || !d.g[1].mul(&d.g[0]).is_zero() {
        return Err(Error::ComplexInconsistent("rows are not complexes".into()));
    }
    let kernels = [d.v[0].kernel_basis(), d.v[1].kernel_basis(), d.v[2].kernel_basis()];
    let cokernels = [
        Subquotient::new(Subspace::full(field, d.b[0].dim()), d.v[0].image())?,
        Subquotient::new(Subspace::full(field, d.b[1].dim()), d.v[1].image())?,
        Subquotient::new(Subspace::full(field, d.b[2].dim()), d.v[2].image())?,
    ];
    let ker_spaces: Vec<SuperSpace> =
        (0..3).map(|i| coordinate_space(&format!("k{}_", i + 1), parities_of(&d.a[i], kernels[i].basis()))).collect();
    let cok_spaces: Vec<SuperSpace> = (0..3)
        .map(|i| coordinate_space(&format!("c{}_", i + 1), parities_of(&d.b[i], cokernels[i].section())))
        .collect();

    let restrict = |i: usize| -> Result<Matrix> {
        let cols = kernels[i]
            .basis()
            .iter()
            .map(|k| {
                kernels[i + 1]
                    .coordinates(&d.f[i].mul_vec(k))
                    .ok_or_else(|| Error::ComplexInconsistent("f does not map kernels into kernels".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(field, kernels[i + 1].dim(), &cols))
    };
    let induce = |i: usize| -> Matrix {
        let cols: Vec<Vec<Scalar>> =
            cokernels[i].section().iter().map(|s| cokernels[i + 1].reduce(&d.g[i].mul_vec(s))).collect();
        Matrix::from_columns(field, cokernels[i + 1].dim(), &cols)
    };
    let delta_cols = kernels[2]
        .basis()
        .iter()
        .map(|k| {
            let a2 = d.f[1].solve(k).ok_or_else(|| Error::ComplexInconsistent("f₂ is not surjective".into()))?;
            let b2 = d.v[1].mul_vec(&a2);
            let b1 = d.g[0].solve(&b2).ok_or_else(|| Error::ComplexInconsistent("v₂ lift leaves Im g₁".into()))?;
            Ok(cokernels[0].reduce(&b1))
        })
        .collect::<Result<Vec<_>>>()?;
    let delta = Matrix::from_columns(field, cokernels[0].dim(), &delta_cols);

    let mats = [restrict(0)?, restrict(1)?, delta, induce(0), induce(1)];
    let spaces = [&ker_spaces[0], &ker_spaces[1], &ker_spaces[2], &cok_spaces[0], &cok_spaces[1], &cok_spaces[2]];
    let maps = mats
        .into_iter()
        .enumerate()
        .map(|(i, m)| GradedMap::new(spaces[i].clone(), spaces[i + 1].clone(), Parity::Even, m))
        .collect::<Result<Vec<_>>>()?;
    let sequence = ExactSequence::new(labels.iter().map(|s| s.to_string()).collect(), maps).with_trailing_zero();
    Ok(Snake { sequence, kernels, cokernels })
}
