//! Non-abelian tensor and exterior products of Lie superalgebras, the maps
//! `μ`, `ν`, universal central extensions and the structural checks built
//! on them.

mod exterior;
mod tensor;
mod uce;

pub use exterior::{exterior_of, induced_exterior_map, nonabelian_exterior, self_exterior, ExteriorProduct};
pub use tensor::{
    d_generators, induced_tensor_map, nonabelian_tensor, nonabelian_tensor_with, self_tensor, Generation, TensorProduct,
};
pub use uce::{uce, CentralExtension};

use crate::error::{Error, Result};
use crate::exactla::{vector, Matrix, Scalar, Subspace};
use crate::homology::{exactness_check, ExactSequence, ExactnessCertificate};
use crate::liesuper::{
    abelianization, check_homomorphism, is_engel, is_ideal, quotient_algebra, semidirect, series, subalgebra, Action,
    Certificate, Law, LieSuperAlgebra,
};
use crate::superspace::{sign, tensor_space, GradedMap, SuperSpace};

/// The isomorphism `M ⊗ N → N ⊗ M`, `m ⊗ n ↦ -(-1)^{|m||n|} n ⊗ m`.
#[derive(Clone, Debug)]
pub struct SymmetryIso {
    pub swapped: TensorProduct,
    pub map: GradedMap,
    /// Bijectivity and the homomorphism identities.
    pub certificate: Certificate,
}

/// Builds `N ⊗ M` from the same pair of actions and the symmetry map onto it.
pub fn tensor_symmetry_iso(t: &TensorProduct) -> Result<SymmetryIso> {
    let swapped = nonabelian_tensor(t.act_nm(), t.act_mn())?;
    let field = t.field();
    let (m, n) = (t.m(), t.n());
    let (dm, dn) = (m.dim(), n.dim());
    let amb = |v: &[Scalar]| {
        let mut out = field.zeros(dm * dn);
        for (k, c) in vector::support(v) {
            let (i, j) = (k / dn, k % dn);
            let s = -sign(field, m.parity(i) * n.parity(j));
            out[j * dm + i] = &s * c;
        }
        out
    };
    for g in t.d_generators().basis() {
        if !swapped.d_generators().contains(&amb(g)) {
            return Err(Error::BracketNotWellDefined("symmetry map does not preserve D".into()));
        }
    }
    let cols: Vec<Vec<Scalar>> = t.quotient().section().iter().map(|r| swapped.reduce(&amb(r))).collect();
    let matrix = Matrix::from_columns(field, swapped.dim(), &cols);
    let mut certificate = check_homomorphism(t.algebra(), swapped.algebra(), &matrix);
    let rank = matrix.rank();
    certificate.check(rank == t.dim() && rank == swapped.dim(), Law::Bijective, || {
        (vec![t.algebra().name().to_string()], format!("rank {rank} for dims {} and {}", t.dim(), swapped.dim()))
    });
    let map = GradedMap::even(t.algebra().space().clone(), swapped.algebra().space().clone(), matrix);
    Ok(SymmetryIso { swapped, map, certificate })
}

/// `M^{ab} ⊗_K N^{ab}`, the tensor product for trivial actions.
pub fn trivial_action_tensor(m: &LieSuperAlgebra, n: &LieSuperAlgebra) -> SuperSpace {
    tensor_space(abelianization(m).algebra.space(), abelianization(n).algebra.space())
}

/// `M` acting on an ideal `K` by the bracket, and `K` acting on `M`.
fn ideal_actions(m: &LieSuperAlgebra, k: &Subspace, ksub: &LieSuperAlgebra, incl: &Matrix) -> (Action, Action) {
    let on_k = Action::from_fn(m.clone(), ksub.clone(), |i, j| {
        k.coordinates(&m.bracket_left_basis(i, &incl.column(j))).expect("K is an ideal")
    });
    let on_m = Action::from_fn(ksub.clone(), m.clone(), |j, i| m.bracket(&incl.column(j), &m.basis_vector(i)));
    (on_k, on_m)
}

/// `(K⊗M) ⋊ (M⊗K) → M⊗M → (M/K)⊗(M/K) → 0` with its exactness.
#[derive(Clone, Debug)]
pub struct RightExactness {
    pub semidirect: LieSuperAlgebra,
    pub sequence: ExactSequence,
    pub exactness: ExactnessCertificate,
    /// `α` is a homomorphism out of the semidirect product.
    pub homomorphism: Certificate,
}

impl RightExactness {
    pub fn is_certified(&self) -> bool {
        self.exactness.is_exact() && self.homomorphism.is_certified()
    }
}

/// Right exactness of the tensor square for a graded ideal `K ⊴ M`.
pub fn right_exactness_check(m: &LieSuperAlgebra, k: &Subspace) -> Result<RightExactness> {
    if !is_ideal(m, k) || !m.space().is_graded(k) {
        return Err(Error::NotAnIdeal("K is not a graded ideal of M".into()));
    }
    let (ksub, incl) = subalgebra(m, k, "K")?;
    let (m_on_k, k_on_m) = ideal_actions(m, k, &ksub, &incl);
    let km = nonabelian_tensor(&k_on_m, &m_on_k)?;
    let mk = nonabelian_tensor(&m_on_k, &k_on_m)?;
    let mm = self_tensor(m)?;
    let q = quotient_algebra(m, k, &format!("{}/K", m.name()))?;
    let qq = self_tensor(&q.algebra)?;

    let id = Matrix::identity(m.field(), m.dim());
    let alpha = induced_tensor_map(&km, &mm, &incl, &id)?.hstack(&induced_tensor_map(&mk, &mm, &id, &incl)?);
    let beta = induced_tensor_map(&mm, &qq, &q.projection, &q.projection)?;

    // M⊗K acts on K⊗M through ν: M⊗K → K
    let act = Action::from_fn(mk.algebra().clone(), km.algebra().clone(), |x, y| {
        km.m_action().act(&mk.nu().column(x), &km.algebra().basis_vector(y))
    });
    let s = semidirect(&act)?;
    let homomorphism = check_homomorphism(&s, mm.algebra(), &alpha);
    let sequence = ExactSequence::new(
        vec![s.name().to_string(), mm.algebra().name().to_string(), qq.algebra().name().to_string()],
        vec![
            GradedMap::even(s.space().clone(), mm.algebra().space().clone(), alpha),
            GradedMap::even(mm.algebra().space().clone(), qq.algebra().space().clone(), beta),
        ],
    )
    .with_trailing_zero();
    let exactness = exactness_check(&sequence)?;
    Ok(RightExactness { semidirect: s, sequence, exactness, homomorphism })
}

/// Nilpotency class, derived length and Engel degree of one algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilData {
    pub class: Option<usize>,
    pub derived_length: Option<usize>,
    /// Least `n` with `ad(x)ⁿ = 0` for all `x`; computed for nilpotent
    /// algebras, where it is at most the class.
    pub engel: Option<usize>,
}

fn nil_data(l: &LieSuperAlgebra) -> NilData {
    let s = series(l);
    let engel =
        s.nil_class
            .map(|c| if l.dim() == 0 { 0 } else { (1..=c.max(1)).find(|&n| is_engel(l, n)).unwrap_or(c.max(1)) });
    NilData { class: s.nil_class, derived_length: s.derived_length, engel }
}

/// The numbers entering the nilpotency, solvability and Engel bounds for
/// `M ⊗ N`, with the outcome of each inequality.
#[derive(Clone, Debug)]
pub struct NilBoundsReport {
    pub image_mu: NilData,
    pub tensor: NilData,
    pub image_nu: NilData,
    pub certificate: Certificate,
}

impl NilBoundsReport {
    pub fn holds(&self) -> bool {
        self.certificate.is_certified()
    }
}

/// Checks `c(Im μ) ≤ c(M⊗N) ≤ c(Im μ)+1`, `c(Im ν) ≤ c(Im μ)+1` for the
/// class and the derived length, and that `n`-Engel `Im μ` forces
/// `(n+1)`-Engel `M⊗N` and `Im ν`.
pub fn nilpotency_bounds_check(t: &TensorProduct) -> Result<NilBoundsReport> {
    let (im_mu, _) = subalgebra(t.m(), &t.image_mu(), "[M,N]^M")?;
    let (im_nu, _) = subalgebra(t.n(), &t.image_nu(), "[M,N]^N")?;
    let (a, b, c) = (nil_data(&im_mu), nil_data(t.algebra()), nil_data(&im_nu));
    let mut cert = Certificate::default();
    let mut bound = |name: &str, lo: Option<usize>, mid: Option<usize>, hi: Option<usize>| {
        if let Some(x) = lo {
            let ok = matches!(mid, Some(y) if x <= y && y <= x + 1) && matches!(hi, Some(z) if z <= x + 1);
            cert.check(ok, Law::Inequality, || (vec![name.to_string()], format!("{lo:?}, {mid:?}, {hi:?}")));
        }
    };
    bound("class", a.class, b.class, c.class);
    bound("derived length", a.derived_length, b.derived_length, c.derived_length);
    if let Some(n) = a.engel {
        cert.check(is_engel(t.algebra(), n + 1) && is_engel(&im_nu, n + 1), Law::Inequality, || {
            (vec!["Engel".to_string()], format!("Im μ is {n}-Engel"))
        });
    }
    Ok(NilBoundsReport { image_mu: a, tensor: b, image_nu: c, certificate: cert })
}

/// `M ∧ N → N ∧ M` induced by the tensor symmetry.
pub fn exterior_symmetry_iso(e_mn: &ExteriorProduct, e_nm: &ExteriorProduct) -> Result<GradedMap> {
    let iso = tensor_symmetry_iso(e_mn.tensor())?;
    if iso.swapped.algebra().space() != e_nm.tensor().algebra().space()
        || iso.swapped.d_generators() != e_nm.tensor().d_generators()
    {
        return Err(Error::CrossedModuleMismatch("N∧M is not built on the swapped tensor product".into()));
    }
    let matrix = induced_exterior_map(e_mn, e_nm, iso.map.matrix())?;
    Ok(GradedMap::even(e_mn.algebra().space().clone(), e_nm.algebra().space().clone(), matrix))
}

#[cfg(test)]
mod tests;
