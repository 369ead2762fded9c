use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar, Subquotient};
use crate::liesuper::{abelian, check_action, Action, LieSuperAlgebra};
use crate::superspace::{exterior_power, tensor_space, wedge_normalize, ExteriorPower, GradedMap, Parity, SuperSpace};

/// Default top degree of a complex; `H₂` needs `d₃`.
pub const DEFAULT_MAX_DEGREE: usize = 3;

/// Cap on the dimension of a single chain space.
pub const MAX_CHAIN_DIM: usize = 20_000;

static COMPLEXES_CHECKED: AtomicUsize = AtomicUsize::new(0);
static COMPLEXES_FAILED: AtomicUsize = AtomicUsize::new(0);

pub(crate) fn record_complex(ok: bool) {
    COMPLEXES_CHECKED.fetch_add(1, Ordering::Relaxed);
    if !ok {
        COMPLEXES_FAILED.fetch_add(1, Ordering::Relaxed);
    }
}

/// `(checked, failed)`: how many chain complexes (Chevalley–Eilenberg and
/// Connes) this process has tested for `d ∘ d = 0`, and how many failed.
pub fn complexes_checked() -> (usize, usize) {
    (COMPLEXES_CHECKED.load(Ordering::Relaxed), COMPLEXES_FAILED.load(Ordering::Relaxed))
}

/// A `P`-supermodule: an action of `P` on an abelian algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct Supermodule {
    action: Action,
}

impl Supermodule {
    /// Checks `[p,p']m = p(p'm) - (-1)^{|p||p'|}p'(pm)` on basis triples.
    pub fn new(action: Action) -> Result<Self> {
        if !action.target().is_abelian() {
            return Err(Error::ActionInvalid("a supermodule needs an abelian target".into()));
        }
        if let Some(v) = check_action(&action).first() {
            return Err(Error::ActionInvalid(v.to_string()));
        }
        Ok(Supermodule { action })
    }

    /// The ground field with the trivial action.
    pub fn trivial(p: &LieSuperAlgebra) -> Self {
        Self::trivial_on(p, SuperSpace::new(vec![("1", Parity::Even)]).unwrap())
    }

    pub fn trivial_on(p: &LieSuperAlgebra, space: SuperSpace) -> Self {
        let m = LieSuperAlgebra::from_upper("M", p.field(), space, []);
        Supermodule { action: Action::trivial(p.clone(), m) }
    }

    /// The action `p·m = ρ(p)m` given by one matrix per basis element of `P`.
    pub fn from_matrices(p: &LieSuperAlgebra, space: SuperSpace, rho: &[Matrix]) -> Result<Self> {
        if rho.len() != p.dim() || rho.iter().any(|r| r.rows() != space.dim() || r.cols() != space.dim()) {
            return Err(Error::Size("one square matrix per basis element of P".into()));
        }
        let m = abelian_on(p, space);
        Self::new(Action::from_fn(p.clone(), m, |i, j| rho[i].column(j)))
    }

    /// `P` acting on its underlying space by `ad`.
    pub fn adjoint(p: &LieSuperAlgebra) -> Self {
        let rho: Vec<Matrix> = (0..p.dim()).map(|i| p.ad_basis(i)).collect();
        Self::from_matrices(p, p.space().clone(), &rho).expect("ad is an action")
    }

    pub fn action(&self) -> &Action {
        &self.action
    }

    pub fn algebra(&self) -> &LieSuperAlgebra {
        self.action.actor()
    }

    pub fn space(&self) -> &SuperSpace {
        self.action.target().space()
    }

    pub fn dim(&self) -> usize {
        self.action.target().dim()
    }
}

fn abelian_on(p: &LieSuperAlgebra, space: SuperSpace) -> LieSuperAlgebra {
    let (a, b) = space.sdim();
    let base = abelian(p.field(), a, b);
    LieSuperAlgebra::from_upper(base.name().to_string(), p.field(), space, [])
}

/// `C₀ ← C₁ ← ⋯ ← C_N` with `boundaries[n] = dₙ: Cₙ → Cₙ₋₁` (`d₀ = 0`).
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub spaces: Vec<SuperSpace>,
    pub boundaries: Vec<GradedMap>,
}

impl ChainComplex {
    pub fn max_degree(&self) -> usize {
        self.spaces.len() - 1
    }

    /// `Ker dₙ / Im dₙ₊₁`; needs `n < max_degree`.
    pub fn homology(&self, n: usize) -> Result<HomologyResult> {
        if n >= self.max_degree() {
            return Err(Error::DegreeOverflow { degree: n + 1, limit: self.max_degree() });
        }
        let q = Subquotient::new(self.boundaries[n].kernel(), self.boundaries[n + 1].image())?;
        Ok(HomologyResult::from_subquotient(n, &self.spaces[n], &q))
    }

    /// Checks `dₙ₋₁ ∘ dₙ = 0` for all `n`.
    pub fn check(&self) -> Result<()> {
        for n in 2..self.boundaries.len() {
            if !self.boundaries[n - 1].matrix().mul(self.boundaries[n].matrix()).is_zero() {
                record_complex(false);
                return Err(Error::ComplexInconsistent(format!("d{} ∘ d{n} ≠ 0", n - 1)));
            }
        }
        record_complex(true);
        Ok(())
    }
}

/// A homology space with canonical representatives in the chain space.
#[derive(Clone, Debug, PartialEq)]
pub struct HomologyResult {
    pub n: usize,
    pub dim: (usize, usize),
    pub representatives: Vec<Vec<Scalar>>,
    /// Labels of the chain space the representatives live in.
    pub chain_space: SuperSpace,
}

impl HomologyResult {
    pub fn from_subquotient(n: usize, space: &SuperSpace, q: &Subquotient) -> Self {
        let reps = q.section().to_vec();
        let mut dim = (0, 0);
        for r in &reps {
            match space.parity_of(r) {
                Some(Parity::Odd) => dim.1 += 1,
                _ => dim.0 += 1,
            }
        }
        HomologyResult { n, dim, representatives: reps, chain_space: space.clone() }
    }

    pub fn total(&self) -> usize {
        self.dim.0 + self.dim.1
    }
}

/// Sparse image of one chain `x₁∧⋯∧xₙ ⊗ y`, for an arbitrary tuple of basis
/// indices.
pub(crate) fn boundary_on_tuple(
    p: &LieSuperAlgebra,
    module: &Action,
    target: &ExteriorPower,
    xs: &[usize],
    y: usize,
) -> Vec<(usize, Scalar)> {
    let field = p.field();
    let dm = module.target().dim();
    let par: Vec<bool> = xs.iter().map(|&x| p.parity(x).is_odd()).collect();
    let ps = p.space().parities();
    let mut out: Vec<(usize, Scalar)> = Vec::new();
    let mut push = |factors: &[usize], sign_odd: bool, coeffs: &[(usize, Scalar)], on_module: bool| {
        if let Some((neg, mono)) = wedge_normalize(ps, factors) {
            let idx = target.index_of(&mono).expect("normalized monomial is a basis element");
            for (t, c) in coeffs {
                let s = field.sign(sign_odd ^ neg);
                let k = if on_module { idx * dm + t } else { idx * dm + y };
                out.push((k, &s * c));
            }
        }
    };
    let n = xs.len();
    for i in 0..n {
        // (-1)^{i + |xᵢ| Σ_{k>i} |x_k|}, i counted from 1
        let after = par[i + 1..].iter().filter(|&&b| b).count() % 2 == 1;
        let sign_odd = ((i + 1) % 2 == 1) ^ (par[i] && after);
        let rest: Vec<usize> = xs.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &x)| x).collect();
        let act = module.act_basis(xs[i], y).to_vec();
        push(&rest, sign_odd, &act, true);
    }
    for i in 0..n {
        for j in i + 1..n {
            let before_i = par[..i].iter().filter(|&&b| b).count() % 2 == 1;
            let before_j = par[..j].iter().filter(|&&b| b).count() % 2 == 1;
            let sign_odd = ((i + j) % 2 == 1) ^ (par[i] && before_i) ^ (par[j] && before_j) ^ (par[i] && par[j]);
            let rest: Vec<usize> = xs.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, &x)| x).collect();
            for (b, c) in p.bracket_basis(xs[i], xs[j]) {
                let mut factors = Vec::with_capacity(n - 1);
                factors.push(*b);
                factors.extend_from_slice(&rest);
                push(&factors, sign_odd, &[(y, c.clone())], false);
            }
        }
    }
    out
}

/// Chevalley–Eilenberg complex `Cₙ = Λⁿ(P) ⊗ M` up to degree `max_degree`,
/// checked to satisfy `d ∘ d = 0`. The basis of `Cₙ` is
/// `monomial · dim M + module index`.
pub fn ce_complex(p: &LieSuperAlgebra, module: &Supermodule, max_degree: usize) -> Result<ChainComplex> {
    let field = p.field();
    let dm = module.dim();
    let powers: Vec<ExteriorPower> = (0..=max_degree).map(|n| exterior_power(p.space(), n)).collect();
    for (n, w) in powers.iter().enumerate() {
        if w.dim() * dm > MAX_CHAIN_DIM {
            return Err(Error::DegreeOverflow { degree: n, limit: n.saturating_sub(1) });
        }
    }
    let spaces: Vec<SuperSpace> = powers.iter().map(|w| tensor_space(w.space(), module.space())).collect();
    let mut boundaries =
        vec![GradedMap::even(spaces[0].clone(), SuperSpace::zero(), Matrix::zeros(field, 0, spaces[0].dim()))];
    for n in 1..=max_degree {
        let mut d = Matrix::zeros(field, spaces[n - 1].dim(), spaces[n].dim());
        for (c, mono) in powers[n].monomials().iter().enumerate() {
            for y in 0..dm {
                for (row, v) in boundary_on_tuple(p, module.action(), &powers[n - 1], mono.factors(), y) {
                    d.add_to(row, c * dm + y, &v);
                }
            }
        }
        boundaries.push(GradedMap::even(spaces[n].clone(), spaces[n - 1].clone(), d));
    }
    let complex = ChainComplex { spaces, boundaries };
    complex.check()?;
    Ok(complex)
}

/// `Hₙ(P, M)`.
pub fn homology(p: &LieSuperAlgebra, module: &Supermodule, n: usize) -> Result<HomologyResult> {
    ce_complex(p, module, n + 1)?.homology(n)
}

/// `Hₙ(P) = Hₙ(P, 𝕂)`.
pub fn trivial_homology(p: &LieSuperAlgebra, n: usize) -> Result<HomologyResult> {
    homology(p, &Supermodule::trivial(p), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;
    use crate::liesuper::{ground_field, heisenberg, matrix_gl, matrix_sl, solvable2};

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn adjoint_complexes_square_to_zero() {
        let k = ground_field(Q);
        for l in [heisenberg(Q), solvable2(Q), matrix_gl(1, 1, &k).unwrap(), matrix_sl(2, 1, &k).unwrap()] {
            ce_complex(&l, &Supermodule::adjoint(&l), 3).unwrap();
            ce_complex(&l, &Supermodule::trivial(&l), 3).unwrap();
        }
    }
}
