use super::axioms::{check_homomorphism, Certificate, Law};
use super::{dense_of, format_vector, sparse_of, structure, LieSuperAlgebra, Sparse};
use crate::error::{Error, Result};
use crate::exactla::{vector, Matrix, Scalar, Subspace};
use crate::superspace::{direct_sum, sign, GradedMap, Parity};

/// A bilinear even map `P × M → M`, `(p, m) ↦ ᵖm`, stored on basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    actor: LieSuperAlgebra,
    target: LieSuperAlgebra,
    table: Vec<Sparse>,
}

impl Action {
    /// `f(p, m) = ^{e_p} e_m`.
    pub fn from_fn<F>(actor: LieSuperAlgebra, target: LieSuperAlgebra, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Vec<Scalar>,
    {
        let (dp, dm) = (actor.dim(), target.dim());
        let mut table = Vec::with_capacity(dp * dm);
        for p in 0..dp {
            for m in 0..dm {
                let v = f(p, m);
                assert_eq!(v.len(), dm, "action value has wrong length");
                table.push(sparse_of(&v));
            }
        }
        Action { actor, target, table }
    }

    pub fn trivial(actor: LieSuperAlgebra, target: LieSuperAlgebra) -> Self {
        let n = actor.dim() * target.dim();
        Action { actor, target, table: vec![Vec::new(); n] }
    }

    /// `L` acting on itself by the bracket.
    pub fn adjoint(l: &LieSuperAlgebra) -> Self {
        Action::from_fn(l.clone(), l.clone(), |p, m| l.bracket_basis_dense(p, m))
    }

    pub fn actor(&self) -> &LieSuperAlgebra {
        &self.actor
    }

    pub fn target(&self) -> &LieSuperAlgebra {
        &self.target
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    pub fn act_basis(&self, p: usize, m: usize) -> &[(usize, Scalar)] {
        &self.table[p * self.target.dim() + m]
    }

    pub fn act_basis_dense(&self, p: usize, m: usize) -> Vec<Scalar> {
        dense_of(self.target.field(), self.target.dim(), self.act_basis(p, m))
    }

    pub fn set_raw(&mut self, p: usize, m: usize, v: &[Scalar]) {
        let dm = self.target.dim();
        self.table[p * dm + m] = sparse_of(v);
    }

    /// `^{e_p} m`.
    pub fn act_left_basis(&self, p: usize, m: &[Scalar]) -> Vec<Scalar> {
        let dm = self.target.dim();
        let mut out = self.target.field().zeros(dm);
        for (j, b) in m.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            for (k, c) in &self.table[p * dm + j] {
                out[*k] += &(b * c);
            }
        }
        out
    }

    pub fn act(&self, p: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        let dm = self.target.dim();
        let mut out = self.target.field().zeros(dm);
        for (i, a) in p.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            vector::axpy(&mut out, a, &self.act_left_basis(i, m));
        }
        out
    }

    /// Matrix of `m ↦ ᵖm`.
    pub fn matrix(&self, p: &[Scalar]) -> Matrix {
        let dm = self.target.dim();
        let f = self.target.field();
        let cols: Vec<Vec<Scalar>> = (0..dm).map(|j| self.act(p, &f.unit_vector(dm, j))).collect();
        Matrix::from_columns(f, dm, &cols)
    }
}

/// Parity consistency and the two action axioms on all basis triples.
pub fn check_action(a: &Action) -> Certificate {
    let mut cert = Certificate::default();
    let (pa, ma) = (a.actor(), a.target());
    let f = ma.field();
    let (dp, dm) = (pa.dim(), ma.dim());
    let pl = |i: usize| pa.space().label(i).to_string();
    let ml = |i: usize| ma.space().label(i).to_string();

    for p in 0..dp {
        for m in 0..dm {
            let want = pa.parity(p) + ma.parity(m);
            let bad = a.act_basis(p, m).iter().find(|(k, _)| ma.parity(*k) != want).map(|(k, _)| *k);
            cert.check(bad.is_none(), Law::Parity, || {
                (vec![pl(p), ml(m)], format!("component on {}", ml(bad.unwrap())))
            });
        }
    }
    for p in 0..dp {
        for q in 0..dp {
            let pq = pa.bracket_basis_dense(p, q);
            let s = sign(f, pa.parity(p) * pa.parity(q));
            for m in 0..dm {
                let em = f.unit_vector(dm, m);
                let lhs = a.act(&pq, &em);
                let r1 = a.act_left_basis(p, &a.act_basis_dense(q, m));
                let r2 = a.act_left_basis(q, &a.act_basis_dense(p, m));
                let mut d = vector::sub(&lhs, &r1);
                vector::axpy(&mut d, &s, &r2);
                cert.check(vector::is_zero(&d), Law::ActionBracket, || {
                    (vec![pl(p), pl(q), ml(m)], format_vector(ma.space(), &d))
                });
            }
        }
    }
    for p in 0..dp {
        for m in 0..dm {
            let pm = a.act_basis_dense(p, m);
            let s = sign(f, pa.parity(p) * ma.parity(m));
            for n in 0..dm {
                let lhs = a.act_left_basis(p, &ma.bracket_basis_dense(m, n));
                let r1 = ma.bracket(&pm, &f.unit_vector(dm, n));
                let r2 = ma.bracket_left_basis(m, &a.act_basis_dense(p, n));
                let mut d = vector::sub(&lhs, &r1);
                vector::axpy(&mut d, &-&s, &r2);
                cert.check(vector::is_zero(&d), Law::ActionDerivation, || {
                    (vec![pl(p), ml(m), ml(n)], format_vector(ma.space(), &d))
                });
            }
        }
    }
    cert
}

/// The two compatibility identities for `M` acting on `N` (`a_mn`) and `N` on `M` (`a_nm`).
pub fn check_compatible(a_mn: &Action, a_nm: &Action) -> Result<Certificate> {
    if a_mn.actor() != a_nm.target() || a_mn.target() != a_nm.actor() {
        return Err(Error::Input("actions are not between the same pair of algebras".into()));
    }
    let (m_alg, n_alg) = (a_mn.actor(), a_mn.target());
    let f = m_alg.field();
    let (dm, dn) = (m_alg.dim(), n_alg.dim());
    let ml = |i: usize| m_alg.space().label(i).to_string();
    let nl = |i: usize| n_alg.space().label(i).to_string();
    let mut cert = Certificate::default();
    for m in 0..dm {
        for n in 0..dn {
            let s = -sign(f, m_alg.parity(m) * n_alg.parity(n));
            let nm = a_nm.act_basis_dense(n, m);
            let mn = a_mn.act_basis_dense(m, n);
            for k in 0..dn {
                let ek = f.unit_vector(dn, k);
                let lhs = a_mn.act(&nm, &ek);
                let rhs = vector::scale(&s, &n_alg.bracket(&mn, &ek));
                let d = vector::sub(&lhs, &rhs);
                cert.check(vector::is_zero(&d), Law::CompatibilityN, || {
                    (vec![ml(m), nl(n), nl(k)], format_vector(n_alg.space(), &d))
                });
            }
            for k in 0..dm {
                let ek = f.unit_vector(dm, k);
                let lhs = a_nm.act(&mn, &ek);
                let rhs = vector::scale(&s, &m_alg.bracket(&nm, &ek));
                let d = vector::sub(&lhs, &rhs);
                cert.check(vector::is_zero(&d), Law::CompatibilityM, || {
                    (vec![ml(m), nl(n), ml(k)], format_vector(m_alg.space(), &d))
                });
            }
        }
    }
    Ok(cert)
}

/// `∂: M → P` with an action of `P` on `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    m: LieSuperAlgebra,
    p: LieSuperAlgebra,
    boundary: Matrix,
    action: Action,
}

impl CrossedModule {
    pub fn new(m: LieSuperAlgebra, p: LieSuperAlgebra, boundary: Matrix, action: Action) -> Result<Self> {
        if boundary.rows() != p.dim() || boundary.cols() != m.dim() {
            return Err(Error::Size(format!(
                "boundary is {}x{}, expected {}x{}",
                boundary.rows(),
                boundary.cols(),
                p.dim(),
                m.dim()
            )));
        }
        if action.actor() != &p || action.target() != &m {
            return Err(Error::Input("action must be of P on M".into()));
        }
        Ok(CrossedModule { m, p, boundary, action })
    }

    /// `id: P → P` with the adjoint action.
    pub fn identity(p: &LieSuperAlgebra) -> Self {
        CrossedModule {
            m: p.clone(),
            p: p.clone(),
            boundary: Matrix::identity(p.field(), p.dim()),
            action: Action::adjoint(p),
        }
    }

    /// Inclusion of a graded ideal, with the bracket action.
    pub fn from_ideal(p: &LieSuperAlgebra, ideal: &Subspace, name: &str) -> Result<Self> {
        if !structure::is_ideal(p, ideal) {
            return Err(Error::NotAnIdeal(format!("subspace of {} is not a graded ideal", p.name())));
        }
        let (m, incl) = structure::subalgebra(p, ideal, name)?;
        let action = Action::from_fn(p.clone(), m.clone(), |x, j| {
            let v = p.bracket_left_basis(x, &incl.column(j));
            ideal.coordinates(&v).expect("ideal is bracket-closed")
        });
        Ok(CrossedModule { m, p: p.clone(), boundary: incl, action })
    }

    /// A `P`-supermodule seen as `(M, 0)`; `module.target()` must be abelian.
    pub fn from_module(module: Action) -> Result<Self> {
        if !module.target().is_abelian() {
            return Err(Error::Input("supermodule must be an abelian algebra".into()));
        }
        let p = module.actor().clone();
        let m = module.target().clone();
        let boundary = Matrix::zeros(p.field(), p.dim(), m.dim());
        Ok(CrossedModule { m, p, boundary, action: module })
    }

    /// A central extension `∂: M ↠ P` acting by `ᵖm = [m̄, m]` for any preimage `m̄`.
    pub fn central_extension(m: &LieSuperAlgebra, p: &LieSuperAlgebra, proj: Matrix) -> Result<Self> {
        let pre: Vec<Vec<Scalar>> = (0..p.dim())
            .map(|i| proj.solve(&p.basis_vector(i)).ok_or_else(|| Error::Input("projection is not surjective".into())))
            .collect::<Result<_>>()?;
        let action = Action::from_fn(p.clone(), m.clone(), |i, j| m.bracket(&pre[i], &m.basis_vector(j)));
        Ok(CrossedModule { m: m.clone(), p: p.clone(), boundary: proj, action })
    }

    pub fn m(&self) -> &LieSuperAlgebra {
        &self.m
    }

    pub fn p(&self) -> &LieSuperAlgebra {
        &self.p
    }

    pub fn boundary(&self) -> &Matrix {
        &self.boundary
    }

    pub fn boundary_map(&self) -> Result<GradedMap> {
        GradedMap::new(self.m.space().clone(), self.p.space().clone(), Parity::Even, self.boundary.clone())
    }

    pub fn action(&self) -> &Action {
        &self.action
    }

    /// `M` acting on `other.m()` through `P`: `ᵐn = ^{∂m}n`.
    pub fn action_on(&self, other: &CrossedModule) -> Result<Action> {
        if self.p != other.p {
            return Err(Error::CrossedModuleMismatch(format!(
                "{} and {} are over different bases",
                self.m.name(),
                other.m.name()
            )));
        }
        let boundary = &self.boundary;
        Ok(Action::from_fn(self.m.clone(), other.m.clone(), |i, j| {
            other.action.act(&boundary.column(i), &other.m.basis_vector(j))
        }))
    }
}

/// Crossed module axioms together with the three consequences every crossed
/// module must satisfy: central kernel, ideal image, and a well-defined
/// `P/Im ∂`-module structure on the kernel.
pub fn check_crossed(c: &CrossedModule) -> Certificate {
    let (m, p) = (c.m(), c.p());
    let d = c.boundary();
    let ml = |i: usize| m.space().label(i).to_string();
    let pl = |i: usize| p.space().label(i).to_string();
    let mut cert = check_action(c.action());
    cert.merge(check_homomorphism(m, p, d));

    for x in 0..p.dim() {
        for j in 0..m.dim() {
            let lhs = d.mul_vec(&c.action().act_basis_dense(x, j));
            let rhs = p.bracket_left_basis(x, &d.column(j));
            let diff = vector::sub(&lhs, &rhs);
            cert.check(vector::is_zero(&diff), Law::Equivariance, || {
                (vec![pl(x), ml(j)], format_vector(p.space(), &diff))
            });
        }
    }
    for i in 0..m.dim() {
        let di = d.column(i);
        for j in 0..m.dim() {
            let lhs = c.action().act(&di, &m.basis_vector(j));
            let diff = vector::sub(&lhs, &m.bracket_basis_dense(i, j));
            cert.check(vector::is_zero(&diff), Law::Peiffer, || (vec![ml(i), ml(j)], format_vector(m.space(), &diff)));
        }
    }

    let ker = d.kernel_basis();
    let img = d.image();
    for k in ker.basis() {
        for j in 0..m.dim() {
            let v = m.bracket(k, &m.basis_vector(j));
            cert.check(vector::is_zero(&v), Law::KernelCentral, || {
                (vec![format_vector(m.space(), k), ml(j)], format_vector(m.space(), &v))
            });
        }
        for x in 0..p.dim() {
            let v = d.mul_vec(&c.action().act_left_basis(x, k));
            cert.check(vector::is_zero(&v), Law::KernelModule, || {
                (vec![pl(x), format_vector(m.space(), k)], format_vector(p.space(), &v))
            });
        }
        for i in 0..m.dim() {
            let v = c.action().act(&d.column(i), k);
            cert.check(vector::is_zero(&v), Law::KernelModule, || {
                (vec![format!("∂{}", ml(i)), format_vector(m.space(), k)], format_vector(m.space(), &v))
            });
        }
    }
    for b in img.basis() {
        for x in 0..p.dim() {
            let v = p.bracket_left_basis(x, b);
            cert.check(img.contains(&v), Law::ImageIdeal, || {
                (vec![pl(x), format_vector(p.space(), b)], format_vector(p.space(), &v))
            });
        }
    }
    cert
}

/// `M ⋊ P` on `M ⊕ P` with
/// `[(m,p),(m',p')] = ([m,m'] + ᵖm' - (-1)^{|m||p'|} ^{p'}m, [p,p'])`.
pub fn semidirect(a: &Action) -> Result<LieSuperAlgebra> {
    let cert = check_action(a);
    if let Some(v) = cert.first() {
        return Err(Error::ActionInvalid(v.to_string()));
    }
    let (m, p) = (a.target(), a.actor());
    let f = m.field();
    let (dm, dp) = (m.dim(), p.dim());
    let space = direct_sum(m.space(), p.space());
    let name = format!("{}⋊{}", m.name(), p.name());
    Ok(LieSuperAlgebra::from_fn(name, f, space, |i, j| {
        let mut out = f.zeros(dm + dp);
        match (i < dm, j < dm) {
            (true, true) => out[..dm].clone_from_slice(&m.bracket_basis_dense(i, j)),
            (true, false) => {
                let s = -sign(f, m.parity(i) * p.parity(j - dm));
                out[..dm].clone_from_slice(&vector::scale(&s, &a.act_basis_dense(j - dm, i)));
            }
            (false, true) => out[..dm].clone_from_slice(&a.act_basis_dense(i - dm, j)),
            (false, false) => out[dm..].clone_from_slice(&p.bracket_basis_dense(i - dm, j - dm)),
        }
        out
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;
    use crate::liesuper::{abelian, center, check_lie_axioms, ground_field, heisenberg, matrix_sl, quotient_algebra};

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn standard_crossed_modules() {
        let h = heisenberg(Q);
        assert!(check_crossed(&CrossedModule::identity(&h)).is_certified());
        let z = CrossedModule::from_ideal(&h, &center(&h), "z").unwrap();
        assert!(check_crossed(&z).is_certified());
        let module = Action::trivial(h.clone(), abelian(Q, 1, 1));
        assert!(check_crossed(&CrossedModule::from_module(module).unwrap()).is_certified());
        let q = quotient_algebra(&h, &center(&h), "h/z").unwrap();
        let ext = CrossedModule::central_extension(&h, &q.algebra, q.projection.clone()).unwrap();
        assert!(check_crossed(&ext).is_certified());
    }

    #[test]
    fn compatibility() {
        let h = heisenberg(Q);
        let ad = Action::adjoint(&h);
        assert!(check_compatible(&ad, &ad).unwrap().is_certified());
        let triv = Action::trivial(h.clone(), h.clone());
        assert!(check_compatible(&triv, &triv).unwrap().is_certified());
        let s = crate::liesuper::solvable2(Q);
        let mixed = check_compatible(&Action::adjoint(&s), &Action::trivial(s.clone(), s.clone())).unwrap();
        assert!(!mixed.is_certified());
    }

    #[test]
    fn semidirect_products() {
        let line = abelian(Q, 1, 0);
        let scalar = Action::from_fn(line.clone(), line.clone(), |_, _| vec![Q.one()]);
        let s = semidirect(&scalar).unwrap();
        assert!(check_lie_axioms(&s).is_certified());
        assert!(!s.is_abelian());
        let sl = matrix_sl(2, 1, &ground_field(Q)).unwrap();
        let ad = semidirect(&Action::adjoint(&sl)).unwrap();
        assert_eq!(ad.dim(), 16);
        assert!(check_lie_axioms(&ad).is_certified());
        let triv = semidirect(&Action::trivial(heisenberg(Q), abelian(Q, 1, 1))).unwrap();
        assert!(check_lie_axioms(&triv).is_certified());
    }

    #[test]
    fn broken_action_rejected() {
        let h = heisenberg(Q);
        let mut ad = Action::adjoint(&h);
        ad.set_raw(0, 1, &Q.unit_vector(3, 0));
        assert!(!check_action(&ad).is_certified());
        assert!(matches!(semidirect(&ad), Err(Error::ActionInvalid(_))));
    }
}
