use super::tensor::{self_tensor, TensorProduct};
use crate::error::{Error, Result};
use crate::exactla::{vector, Matrix, Subspace};
use crate::liesuper::{bracket_span, format_vector, series, Certificate, Law, LieSuperAlgebra};

/// A surjective even homomorphism `total ↠ base` with central kernel.
#[derive(Clone, Debug)]
pub struct CentralExtension {
    pub total: LieSuperAlgebra,
    pub base: LieSuperAlgebra,
    /// `dim base × dim total`
    pub proj: Matrix,
    pub kernel: Subspace,
    /// Surjectivity, central kernel and perfectness of `total`.
    pub certificate: Certificate,
    pub tensor: TensorProduct,
}

impl CentralExtension {
    /// `(d₀|d₁)` of `Ker proj`.
    pub fn kernel_sdim(&self) -> (usize, usize) {
        self.total.space().sdim_of(&self.kernel)
    }
}

/// `u: P ⊗ P ↠ P`, `p ⊗ p' ↦ [p, p']`, for perfect `P`.
pub fn uce(p: &LieSuperAlgebra) -> Result<CentralExtension> {
    if !series(p).is_perfect {
        return Err(Error::NotPerfect(format!("{} is not perfect", p.name())));
    }
    let t = self_tensor(p)?;
    let total = t.algebra().clone();
    let proj = t.mu().clone();
    let kernel = proj.kernel_basis();
    let mut cert = Certificate::default();
    cert.check(proj.rank() == p.dim(), Law::Surjective, || {
        (vec![p.name().to_string()], format!("rank {}", proj.rank()))
    });
    for k in kernel.basis() {
        for j in 0..total.dim() {
            let v = total.bracket(k, &total.basis_vector(j));
            cert.check(vector::is_zero(&v), Law::KernelCentral, || {
                (
                    vec![format_vector(total.space(), k), total.space().label(j).to_string()],
                    format_vector(total.space(), &v),
                )
            });
        }
    }
    let full = Subspace::full(total.field(), total.dim());
    let derived = bracket_span(&total, &full, &full);
    cert.check(derived.dim() == total.dim(), Law::Perfect, || {
        (vec![total.name().to_string()], format!("[T,T] has dim {} < {}", derived.dim(), total.dim()))
    });
    Ok(CentralExtension { total, base: p.clone(), proj, kernel, certificate: cert, tensor: t })
}
