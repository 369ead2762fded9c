use crate::error::{Error, Result};
use crate::exactla::{vector, EchelonAccumulator, FieldSpec, Matrix, Scalar, Subquotient, Subspace};
use crate::liesuper::{check_action, check_compatible, Action, Certificate, CrossedModule, Law, LieSuperAlgebra};
use crate::superspace::{sign, tensor_space, Parity, SuperSpace};

/// How the generators of `D(M, N)` are enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Generation {
    /// Families (iv) and (v) range over a basis of the span of the pairs
    /// `(ⁿm, ᵐn)` per parity class; they depend on `(m, n)` only through that
    /// pair, so the spanned subspace is the same as in the exhaustive mode.
    #[default]
    Reduced,
    /// Every family over every tuple of basis elements.
    Exhaustive,
}

/// `M ⊗ N = (M ⊗_K N)/D(M, N)` with its bracket, `μ`, `ν` and the actions of
/// `M` and `N` on it.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    act_mn: Action,
    act_nm: Action,
    algebra: LieSuperAlgebra,
    ambient: SuperSpace,
    quotient: Subquotient,
    mu: Matrix,
    nu: Matrix,
    m_action: Action,
    n_action: Action,
    well_defined: Certificate,
}

impl TensorProduct {
    pub fn m(&self) -> &LieSuperAlgebra {
        self.act_mn.actor()
    }

    pub fn n(&self) -> &LieSuperAlgebra {
        self.act_mn.target()
    }

    /// Action of `M` on `N`.
    pub fn act_mn(&self) -> &Action {
        &self.act_mn
    }

    /// Action of `N` on `M`.
    pub fn act_nm(&self) -> &Action {
        &self.act_nm
    }

    pub fn algebra(&self) -> &LieSuperAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `M ⊗_K N` with labels `m⊗n`, row-major.
    pub fn ambient(&self) -> &SuperSpace {
        &self.ambient
    }

    /// The span of all `D(M, N)` generators inside `M ⊗_K N`.
    pub fn d_generators(&self) -> &Subspace {
        self.quotient.bottom()
    }

    pub fn quotient(&self) -> &Subquotient {
        &self.quotient
    }

    /// Class of `eᵢ ⊗ fⱼ` in `M ⊗ N`.
    pub fn embed(&self, i: usize, j: usize) -> Vec<Scalar> {
        let dn = self.n().dim();
        self.quotient.reduce(&self.field().unit_vector(self.ambient.dim(), i * dn + j))
    }

    /// Class of an element of `M ⊗_K N`.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.quotient.reduce(v)
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    /// `μ: m⊗n ↦ -(-1)^{|m||n|} ⁿm`, as a `dim M × dim(M⊗N)` matrix.
    pub fn mu(&self) -> &Matrix {
        &self.mu
    }

    /// `ν: m⊗n ↦ ᵐn`.
    pub fn nu(&self) -> &Matrix {
        &self.nu
    }

    pub fn m_action(&self) -> &Action {
        &self.m_action
    }

    pub fn n_action(&self) -> &Action {
        &self.n_action
    }

    /// `(M⊗N, μ)` as a crossed `M`-module.
    pub fn crossed_mu(&self) -> CrossedModule {
        CrossedModule::new(self.algebra.clone(), self.m().clone(), self.mu.clone(), self.m_action.clone())
            .expect("shapes agree by construction")
    }

    /// `(M⊗N, ν)` as a crossed `N`-module.
    pub fn crossed_nu(&self) -> CrossedModule {
        CrossedModule::new(self.algebra.clone(), self.n().clone(), self.nu.clone(), self.n_action.clone())
            .expect("shapes agree by construction")
    }

    /// `[M, N]^M = Im μ`.
    pub fn image_mu(&self) -> Subspace {
        self.mu.image()
    }

    /// `[M, N]^N = Im ν`.
    pub fn image_nu(&self) -> Subspace {
        self.nu.image()
    }

    /// Certificate that `μ` and `ν` vanish on `D(M, N)`, hence that the
    /// bracket `[x, y] = μ(x) ⊗ ν(y)` annihilates every generator, and that
    /// both induced actions preserve `D(M, N)`.
    pub fn well_defined(&self) -> &Certificate {
        &self.well_defined
    }
}

/// Adds `c · x ⊗ y` to `out` (row-major, `y` of length `dn`).
fn add_kron(out: &mut [Scalar], c: &Scalar, x: &[Scalar], y: &[Scalar]) {
    let dn = y.len();
    for (i, a) in vector::support(x) {
        let ca = c * a;
        for (j, b) in vector::support(y) {
            out[i * dn + j] += &(&ca * b);
        }
    }
}

struct Parts<'a> {
    field: FieldSpec,
    m: &'a LieSuperAlgebra,
    n: &'a LieSuperAlgebra,
    /// `nm[j][i] = ^{fⱼ}eᵢ`
    nm: Vec<Vec<Vec<Scalar>>>,
    /// `mn[i][j] = ^{eᵢ}fⱼ`
    mn: Vec<Vec<Vec<Scalar>>>,
}

impl<'a> Parts<'a> {
    fn new(act_mn: &'a Action, act_nm: &'a Action) -> Self {
        let (m, n) = (act_mn.actor(), act_mn.target());
        let nm = (0..n.dim()).map(|j| (0..m.dim()).map(|i| act_nm.act_basis_dense(j, i)).collect()).collect();
        let mn = (0..m.dim()).map(|i| (0..n.dim()).map(|j| act_mn.act_basis_dense(i, j)).collect()).collect();
        Parts { field: m.field(), m, n, nm, mn }
    }

    fn len(&self) -> usize {
        self.m.dim() * self.n.dim()
    }

    fn s(&self, p: Parity) -> Scalar {
        sign(self.field, p)
    }

    fn em(&self, i: usize) -> Vec<Scalar> {
        self.m.basis_vector(i)
    }

    fn en(&self, j: usize) -> Vec<Scalar> {
        self.n.basis_vector(j)
    }

    /// Families (i), (ii) and the polarized family (iii).
    fn linear_families(&self, acc: &mut EchelonAccumulator) {
        let (dm, dn) = (self.m.dim(), self.n.dim());
        let one = self.field.one();
        let pm = |i: usize| self.m.parity(i);
        let pn = |j: usize| self.n.parity(j);
        // (i) [m,m']⊗n - m⊗^{m'}n + (-1)^{|m||m'|} m'⊗^m n
        for i in 0..dm {
            for k in 0..dm {
                let mk = self.m.bracket_basis_dense(i, k);
                for j in 0..dn {
                    let mut v = self.field.zeros(self.len());
                    add_kron(&mut v, &one, &mk, &self.en(j));
                    add_kron(&mut v, &-&one, &self.em(i), &self.mn[k][j]);
                    add_kron(&mut v, &self.s(pm(i) * pm(k)), &self.em(k), &self.mn[i][j]);
                    acc.insert(v);
                    if acc.is_full() {
                        return;
                    }
                }
            }
        }
        // (ii) m⊗[n,n'] - (-1)^{|n'|(|m|+|n|)} ^{n'}m⊗n + (-1)^{|m||n|} ^n m⊗n'
        for i in 0..dm {
            for j in 0..dn {
                for l in 0..dn {
                    let mut v = self.field.zeros(self.len());
                    add_kron(&mut v, &one, &self.em(i), &self.n.bracket_basis_dense(j, l));
                    add_kron(&mut v, &-self.s(pn(l) * (pm(i) + pn(j))), &self.nm[l][i], &self.en(j));
                    add_kron(&mut v, &self.s(pm(i) * pn(j)), &self.nm[j][i], &self.en(l));
                    acc.insert(v);
                    if acc.is_full() {
                        return;
                    }
                }
            }
        }
        // (iii) ^n m ⊗ ^m n for |m| = |n|, polarized over both arguments
        for parity in [Parity::Even, Parity::Odd] {
            let ms = self.m.space().indices_of(parity);
            let ns = self.n.space().indices_of(parity);
            for (a, &i) in ms.iter().enumerate() {
                for &k in &ms[a..] {
                    for (b, &j) in ns.iter().enumerate() {
                        for &l in &ns[b..] {
                            let mut v = self.field.zeros(self.len());
                            for (x, y) in orderings(i, k) {
                                for (p, q) in orderings(j, l) {
                                    add_kron(&mut v, &one, &self.nm[p][x], &self.mn[y][q]);
                                }
                            }
                            acc.insert(v);
                            if acc.is_full() {
                                return;
                            }
                        }
                    }
                }
            }
        }
    }

    /// A term of families (iv)/(v) is determined by the pair `(ⁿm, ᵐn)` and
    /// the parities of `m` and `n`.
    fn pair(&self, i: usize, j: usize) -> Tagged {
        Tagged { pm: self.m.parity(i), pn: self.n.parity(j), x: self.nm[j][i].clone(), y: self.mn[i][j].clone() }
    }

    /// `(-1)^{|m||n|} x⊗y' + (-1)^{(|m|+|n|)(|m'|+|n'|) + |m'||n'|} x'⊗y`
    fn family_iv(&self, u: &Tagged, w: &Tagged) -> Vec<Scalar> {
        let mut v = self.field.zeros(self.len());
        add_kron(&mut v, &self.s(u.pm * u.pn), &u.x, &w.y);
        add_kron(&mut v, &self.s(u.total() * w.total() + w.pm * w.pn), &w.x, &u.y);
        v
    }

    /// Cyclic sum of `(-1)^{(|m|+|n|)(|m''|+|n''|) + |m||n| + |m'||n'|} [x, x'] ⊗ y''`.
    fn family_v(&self, u: &Tagged, w: &Tagged, z: &Tagged) -> Vec<Scalar> {
        let mut v = self.field.zeros(self.len());
        for (a, b, c) in [(u, w, z), (w, z, u), (z, u, w)] {
            let s = self.s(a.total() * c.total() + a.pm * a.pn + b.pm * b.pn);
            add_kron(&mut v, &s, &self.m.bracket(&a.x, &b.x), &c.y);
        }
        v
    }

    fn bilinear_families_exhaustive(&self, acc: &mut EchelonAccumulator) {
        let pairs: Vec<Tagged> = (0..self.m.dim())
            .flat_map(|i| (0..self.n.dim()).map(move |j| (i, j)))
            .map(|(i, j)| self.pair(i, j))
            .collect();
        for u in &pairs {
            for w in &pairs {
                if acc.is_full() {
                    return;
                }
                acc.insert(self.family_iv(u, w));
            }
        }
        for u in &pairs {
            for w in &pairs {
                for z in &pairs {
                    if acc.is_full() {
                        return;
                    }
                    acc.insert(self.family_v(u, w, z));
                }
            }
        }
    }

    fn bilinear_families_reduced(&self, acc: &mut EchelonAccumulator) {
        let (dm, dn) = (self.m.dim(), self.n.dim());
        let mut classes: Vec<Tagged> = Vec::new();
        for pm in [Parity::Even, Parity::Odd] {
            for pn in [Parity::Even, Parity::Odd] {
                let span = Subspace::span(
                    self.field,
                    dm + dn,
                    self.m
                        .space()
                        .indices_of(pm)
                        .into_iter()
                        .flat_map(|i| self.n.space().indices_of(pn).into_iter().map(move |j| (i, j)))
                        .map(|(i, j)| {
                            let t = self.pair(i, j);
                            let mut v = t.x;
                            v.extend(t.y);
                            v
                        }),
                );
                for b in span.basis() {
                    classes.push(Tagged { pm, pn, x: b[..dm].to_vec(), y: b[dm..].to_vec() });
                }
            }
        }
        for u in &classes {
            for w in &classes {
                if acc.is_full() {
                    return;
                }
                acc.insert(self.family_iv(u, w));
            }
        }
        for u in &classes {
            for w in &classes {
                for z in &classes {
                    if acc.is_full() {
                        return;
                    }
                    acc.insert(self.family_v(u, w, z));
                }
            }
        }
    }

    /// `M` acting on `M ⊗_K N`: `^{m'}(m⊗n) = [m',m]⊗n + (-1)^{|m||m'|} m⊗^{m'}n`.
    fn m_action_ambient(&self, k: usize) -> Matrix {
        let (dm, dn) = (self.m.dim(), self.n.dim());
        let cols: Vec<Vec<Scalar>> = (0..dm)
            .flat_map(|i| (0..dn).map(move |j| (i, j)))
            .map(|(i, j)| {
                let mut v = self.field.zeros(self.len());
                add_kron(&mut v, &self.field.one(), &self.m.bracket_basis_dense(k, i), &self.en(j));
                add_kron(&mut v, &self.s(self.m.parity(i) * self.m.parity(k)), &self.em(i), &self.mn[k][j]);
                v
            })
            .collect();
        Matrix::from_columns(self.field, self.len(), &cols)
    }

    /// `N` acting on `M ⊗_K N`: `^{n'}(m⊗n) = ^{n'}m⊗n + (-1)^{|m||n'|} m⊗[n',n]`.
    fn n_action_ambient(&self, l: usize) -> Matrix {
        let (dm, dn) = (self.m.dim(), self.n.dim());
        let cols: Vec<Vec<Scalar>> = (0..dm)
            .flat_map(|i| (0..dn).map(move |j| (i, j)))
            .map(|(i, j)| {
                let mut v = self.field.zeros(self.len());
                add_kron(&mut v, &self.field.one(), &self.nm[l][i], &self.en(j));
                add_kron(
                    &mut v,
                    &self.s(self.m.parity(i) * self.n.parity(l)),
                    &self.em(i),
                    &self.n.bracket_basis_dense(l, j),
                );
                v
            })
            .collect();
        Matrix::from_columns(self.field, self.len(), &cols)
    }

    fn mu_ambient(&self) -> Matrix {
        let (dm, dn) = (self.m.dim(), self.n.dim());
        let cols: Vec<Vec<Scalar>> = (0..dm)
            .flat_map(|i| (0..dn).map(move |j| (i, j)))
            .map(|(i, j)| vector::scale(&-self.s(self.m.parity(i) * self.n.parity(j)), &self.nm[j][i]))
            .collect();
        Matrix::from_columns(self.field, dm, &cols)
    }

    fn nu_ambient(&self) -> Matrix {
        let (dm, dn) = (self.m.dim(), self.n.dim());
        let cols: Vec<Vec<Scalar>> =
            (0..dm).flat_map(|i| (0..dn).map(move |j| (i, j))).map(|(i, j)| self.mn[i][j].clone()).collect();
        Matrix::from_columns(self.field, dn, &cols)
    }
}

#[derive(Clone)]
struct Tagged {
    pm: Parity,
    pn: Parity,
    x: Vec<Scalar>,
    y: Vec<Scalar>,
}

impl Tagged {
    fn total(&self) -> Parity {
        self.pm + self.pn
    }
}

fn orderings(a: usize, b: usize) -> Vec<(usize, usize)> {
    if a == b {
        vec![(a, b)]
    } else {
        vec![(a, b), (b, a)]
    }
}

/// The span of `D(M, N)` inside `M ⊗_K N`.
pub fn d_generators(act_mn: &Action, act_nm: &Action, mode: Generation) -> Subspace {
    let parts = Parts::new(act_mn, act_nm);
    let mut acc = EchelonAccumulator::new(parts.field, parts.len());
    parts.linear_families(&mut acc);
    match mode {
        Generation::Reduced => parts.bilinear_families_reduced(&mut acc),
        Generation::Exhaustive => parts.bilinear_families_exhaustive(&mut acc),
    }
    acc.finish()
}

/// `M ⊗ N` for `M` acting on `N` by `act_mn` and `N` on `M` by `act_nm`.
pub fn nonabelian_tensor(act_mn: &Action, act_nm: &Action) -> Result<TensorProduct> {
    nonabelian_tensor_with(act_mn, act_nm, Generation::Reduced)
}

pub fn nonabelian_tensor_with(act_mn: &Action, act_nm: &Action, mode: Generation) -> Result<TensorProduct> {
    let compat = check_compatible(act_mn, act_nm)?;
    for cert in [check_action(act_mn), check_action(act_nm), compat] {
        if let Some(v) = cert.first() {
            return Err(Error::IncompatibleActions(v.to_string()));
        }
    }
    let parts = Parts::new(act_mn, act_nm);
    let (m, n) = (parts.m, parts.n);
    let field = parts.field;
    let ambient = tensor_space(m.space(), n.space());
    let d = d_generators(act_mn, act_nm, mode);
    let quotient = Subquotient::new(Subspace::full(field, ambient.dim()), d)?;

    let mu_amb = parts.mu_ambient();
    let nu_amb = parts.nu_ambient();
    let lab = |v: &[Scalar]| crate::liesuper::format_vector(&ambient, v);
    let mut cert = Certificate::default();
    for g in quotient.bottom().basis() {
        let a = mu_amb.mul_vec(g);
        let b = nu_amb.mul_vec(g);
        cert.check(vector::is_zero(&a) && vector::is_zero(&b), Law::WellDefined, || {
            (
                vec![lab(g)],
                format!(
                    "mu = {}, nu = {}",
                    crate::liesuper::format_vector(m.space(), &a),
                    crate::liesuper::format_vector(n.space(), &b)
                ),
            )
        });
    }
    let m_amb: Vec<Matrix> = (0..m.dim()).map(|k| parts.m_action_ambient(k)).collect();
    let n_amb: Vec<Matrix> = (0..n.dim()).map(|l| parts.n_action_ambient(l)).collect();
    for g in quotient.bottom().basis() {
        for (k, a) in m_amb.iter().enumerate() {
            let v = a.mul_vec(g);
            cert.check(quotient.bottom().contains(&v), Law::WellDefined, || {
                (vec![m.space().label(k).to_string(), lab(g)], lab(&v))
            });
        }
        for (l, a) in n_amb.iter().enumerate() {
            let v = a.mul_vec(g);
            cert.check(quotient.bottom().contains(&v), Law::WellDefined, || {
                (vec![n.space().label(l).to_string(), lab(g)], lab(&v))
            });
        }
    }
    if let Some(v) = cert.first() {
        return Err(Error::BracketNotWellDefined(v.to_string()));
    }

    let reps: Vec<Vec<Scalar>> = quotient.section().to_vec();
    let labels: Vec<(String, Parity)> = reps
        .iter()
        .map(|r| {
            let k = r.iter().position(|c| !c.is_zero()).expect("section vectors are nonzero");
            (ambient.label(k).to_string(), ambient.parity_of(r).expect("section of a graded quotient is homogeneous"))
        })
        .collect();
    let space = SuperSpace::new(labels)?;
    let mu_vals: Vec<Vec<Scalar>> = reps.iter().map(|r| mu_amb.mul_vec(r)).collect();
    let nu_vals: Vec<Vec<Scalar>> = reps.iter().map(|r| nu_amb.mul_vec(r)).collect();
    let name = format!("{}⊗{}", m.name(), n.name());
    let algebra = LieSuperAlgebra::from_fn(name, field, space, |a, b| {
        let mut v = field.zeros(ambient.dim());
        add_kron(&mut v, &field.one(), &mu_vals[a], &nu_vals[b]);
        quotient.reduce(&v)
    });
    let mu = Matrix::from_columns(field, m.dim(), &mu_vals);
    let nu = Matrix::from_columns(field, n.dim(), &nu_vals);
    let m_action = Action::from_fn(m.clone(), algebra.clone(), |k, a| quotient.reduce(&m_amb[k].mul_vec(&reps[a])));
    let n_action = Action::from_fn(n.clone(), algebra.clone(), |l, a| quotient.reduce(&n_amb[l].mul_vec(&reps[a])));
    Ok(TensorProduct {
        act_mn: act_mn.clone(),
        act_nm: act_nm.clone(),
        algebra,
        ambient,
        quotient,
        mu,
        nu,
        m_action,
        n_action,
        well_defined: cert,
    })
}

/// `P ⊗ P` with both actions adjoint.
pub fn self_tensor(p: &LieSuperAlgebra) -> Result<TensorProduct> {
    let ad = Action::adjoint(p);
    nonabelian_tensor(&ad, &ad)
}

/// `φ ⊗ ψ: M⊗N → M'⊗N'`, `m⊗n ↦ φ(m)⊗ψ(n)`, checked to map `D` into `D'`.
pub fn induced_tensor_map(
    source: &TensorProduct,
    target: &TensorProduct,
    phi: &Matrix,
    psi: &Matrix,
) -> Result<Matrix> {
    let (dm, dn) = (source.m().dim(), source.n().dim());
    if phi.cols() != dm || psi.cols() != dn || phi.rows() != target.m().dim() || psi.rows() != target.n().dim() {
        return Err(Error::Size("maps do not match the tensor factors".into()));
    }
    let field = source.field();
    let amb_len = target.ambient().dim();
    let amb_map = |v: &[Scalar]| {
        let mut out = field.zeros(amb_len);
        for (k, c) in vector::support(v) {
            add_kron(&mut out, c, &phi.column(k / dn), &psi.column(k % dn));
        }
        out
    };
    for g in source.d_generators().basis() {
        if !target.d_generators().contains(&amb_map(g)) {
            return Err(Error::BracketNotWellDefined("induced map does not preserve D".into()));
        }
    }
    let cols: Vec<Vec<Scalar>> = source.quotient().section().iter().map(|r| target.reduce(&amb_map(r))).collect();
    Ok(Matrix::from_columns(field, target.dim(), &cols))
}
