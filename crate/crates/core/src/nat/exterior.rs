use super::tensor::{nonabelian_tensor, TensorProduct};
use crate::error::{Error, Result};
use crate::exactla::{vector, EchelonAccumulator, Matrix, Scalar, Subspace};
use crate::liesuper::{format_vector, quotient_algebra, Certificate, CrossedModule, Law, LieSuperAlgebra, Quotient};
use crate::superspace::Parity;

/// `M ∧ N = (M ⊗ N)/(M □ N)` for crossed modules `(M, ∂)`, `(N, ∂')` over a
/// common `P`.
#[derive(Clone, Debug)]
pub struct ExteriorProduct {
    tensor: TensorProduct,
    square: Subspace,
    quotient: Quotient,
    mu: Matrix,
    nu: Matrix,
    central: Certificate,
}

impl ExteriorProduct {
    pub fn tensor(&self) -> &TensorProduct {
        &self.tensor
    }

    /// `M □ N` in the coordinates of `M ⊗ N`.
    pub fn square_ideal(&self) -> &Subspace {
        &self.square
    }

    pub fn algebra(&self) -> &LieSuperAlgebra {
        &self.quotient.algebra
    }

    pub fn dim(&self) -> usize {
        self.quotient.algebra.dim()
    }

    /// `M ⊗ N ↠ M ∧ N`.
    pub fn projection(&self) -> &Matrix {
        &self.quotient.projection
    }

    /// Coordinates in `M ∧ N` of an element of `M ⊗ N`.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.quotient.section.reduce(v)
    }

    /// Representatives in `M ⊗ N` of the basis of `M ∧ N`.
    pub fn section(&self) -> &[Vec<Scalar>] {
        self.quotient.section.section()
    }

    /// `m ∧ n ↦ -(-1)^{|m||n|} ⁿm`.
    pub fn mu(&self) -> &Matrix {
        &self.mu
    }

    /// `m ∧ n ↦ ᵐn`.
    pub fn nu(&self) -> &Matrix {
        &self.nu
    }

    /// `M □ N` is central in `M ⊗ N` and killed by `μ`, `ν`.
    pub fn central(&self) -> &Certificate {
        &self.central
    }
}

/// Basis of `{(m, n) : m ∈ M_a, n ∈ N_b, ∂m = ∂'n}` as vectors in `M ⊕ N`.
fn pullback_block(cm_m: &CrossedModule, cm_n: &CrossedModule, a: Parity, b: Parity) -> Vec<Vec<Scalar>> {
    let field = cm_m.p().field();
    let (dm, dn) = (cm_m.m().dim(), cm_n.m().dim());
    let ms = cm_m.m().space().indices_of(a);
    let ns = cm_n.m().space().indices_of(b);
    let mut cols: Vec<Vec<Scalar>> = ms.iter().map(|&i| cm_m.boundary().column(i)).collect();
    cols.extend(ns.iter().map(|&j| vector::neg(&cm_n.boundary().column(j))));
    let sys = Matrix::from_columns(field, cm_m.p().dim(), &cols);
    sys.kernel_basis()
        .basis()
        .iter()
        .map(|k| {
            let mut v = field.zeros(dm + dn);
            for (t, &i) in ms.iter().enumerate() {
                v[i] = k[t].clone();
            }
            for (t, &j) in ns.iter().enumerate() {
                v[dm + j] = k[ms.len() + t].clone();
            }
            v
        })
        .collect()
}

/// The exterior product of `t = M ⊗ N`, where `t` carries the actions of `M`
/// and `N` on each other through `P`.
pub fn nonabelian_exterior(t: &TensorProduct, cm_m: &CrossedModule, cm_n: &CrossedModule) -> Result<ExteriorProduct> {
    if cm_m.p() != cm_n.p() {
        return Err(Error::CrossedModuleMismatch("crossed modules over different bases".into()));
    }
    if cm_m.m() != t.m() || cm_n.m() != t.n() {
        return Err(Error::CrossedModuleMismatch("tensor factors differ from the crossed modules".into()));
    }
    if &cm_m.action_on(cm_n)? != t.act_mn() || &cm_n.action_on(cm_m)? != t.act_nm() {
        return Err(Error::CrossedModuleMismatch("tensor product not built from the actions through P".into()));
    }
    let field = t.field();
    let (dm, dn) = (t.m().dim(), t.n().dim());
    let split = |v: &[Scalar]| (v[..dm].to_vec(), v[dm..].to_vec());
    let kron = |x: &[Scalar], y: &[Scalar]| vector::kron(field, x, y);

    let blocks: Vec<(Parity, Parity, Vec<Vec<Scalar>>)> = [Parity::Even, Parity::Odd]
        .into_iter()
        .flat_map(|a| [Parity::Even, Parity::Odd].into_iter().map(move |b| (a, b)))
        .map(|(a, b)| (a, b, pullback_block(cm_m, cm_n, a, b)))
        .collect();

    let mut acc = EchelonAccumulator::new(field, t.dim());
    // (a) m⊗n + (-1)^{|m'||n'|} m'⊗n' with x = (m, n'), y = (m', n) in the pullback
    for (_, xb, xs) in &blocks {
        for (ya, _, ys) in &blocks {
            let s = crate::superspace::sign(field, *ya * *xb);
            for x in xs {
                let (xm, xn) = split(x);
                for y in ys {
                    let (ym, yn) = split(y);
                    let mut v = kron(&xm, &yn);
                    vector::axpy(&mut v, &s, &kron(&ym, &xn));
                    acc.insert(t.reduce(&v));
                }
            }
        }
    }
    // (b) m₀⊗n₀ with ∂m₀ = ∂'n₀, polarized over the even block
    let evens = &blocks[0].2;
    for (i, x) in evens.iter().enumerate() {
        let (xm, xn) = split(x);
        for y in &evens[i..] {
            let (ym, yn) = split(y);
            let mut v = kron(&xm, &yn);
            if x != y {
                v = vector::add(&v, &kron(&ym, &xn));
            }
            acc.insert(t.reduce(&v));
        }
    }
    let square = acc.finish();

    let tensor_alg = t.algebra();
    let mut central = Certificate::default();
    let lab = |v: &[Scalar]| format_vector(tensor_alg.space(), v);
    for g in square.basis() {
        for j in 0..t.dim() {
            let v = tensor_alg.bracket(g, &tensor_alg.basis_vector(j));
            central.check(vector::is_zero(&v), Law::Central, || {
                (vec![lab(g), tensor_alg.space().label(j).to_string()], lab(&v))
            });
        }
        let (a, b) = (t.mu().mul_vec(g), t.nu().mul_vec(g));
        central.check(vector::is_zero(&a) && vector::is_zero(&b), Law::WellDefined, || {
            (vec![lab(g)], "μ or ν does not vanish".into())
        });
    }
    if let Some(v) = central.first() {
        return Err(Error::NotAnIdeal(format!("M□N: {v}")));
    }
    let name = format!("{}∧{}", t.m().name(), t.n().name());
    let mut quotient = quotient_algebra(tensor_alg, &square, &name)?;
    let relabelled: Vec<(String, Parity)> = quotient
        .algebra
        .space()
        .labels()
        .iter()
        .zip(quotient.algebra.space().parities())
        .map(|(l, p)| (l.replace('⊗', "∧"), *p))
        .collect();
    if let Ok(space) = crate::superspace::SuperSpace::new(relabelled) {
        let old = quotient.algebra.clone();
        quotient.algebra = LieSuperAlgebra::from_fn(name, field, space, |i, j| old.bracket_basis_dense(i, j));
    }
    let reps = quotient.section.section().to_vec();
    let mu = Matrix::from_columns(field, dm, &reps.iter().map(|r| t.mu().mul_vec(r)).collect::<Vec<_>>());
    let nu = Matrix::from_columns(field, dn, &reps.iter().map(|r| t.nu().mul_vec(r)).collect::<Vec<_>>());
    Ok(ExteriorProduct { tensor: t.clone(), square, quotient, mu, nu, central })
}

/// `M ∧ N` built directly from two crossed modules over the same `P`.
pub fn exterior_of(cm_m: &CrossedModule, cm_n: &CrossedModule) -> Result<ExteriorProduct> {
    let t = nonabelian_tensor(&cm_m.action_on(cm_n)?, &cm_n.action_on(cm_m)?)?;
    nonabelian_exterior(&t, cm_m, cm_n)
}

/// `P ∧ P` from the identity crossed module.
pub fn self_exterior(p: &LieSuperAlgebra) -> Result<ExteriorProduct> {
    let id = CrossedModule::identity(p);
    exterior_of(&id, &id)
}

/// Map `M ∧ N → M' ∧ N'` induced by a map of tensor products, checked to send
/// `M □ N` into `M' □ N'`.
pub fn induced_exterior_map(source: &ExteriorProduct, target: &ExteriorProduct, tensor_map: &Matrix) -> Result<Matrix> {
    for g in source.square_ideal().basis() {
        if !target.square_ideal().contains(&tensor_map.mul_vec(g)) {
            return Err(Error::BracketNotWellDefined("induced map does not preserve the square ideal".into()));
        }
    }
    let cols: Vec<Vec<Scalar>> = source.section().iter().map(|r| target.reduce(&tensor_map.mul_vec(r))).collect();
    Ok(Matrix::from_columns(source.algebra().field(), target.dim(), &cols))
}
