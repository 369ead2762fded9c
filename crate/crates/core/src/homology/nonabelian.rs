use super::ce::{trivial_homology, HomologyResult};
use super::exact::{exactness_check, snake, ExactnessCertificate, Snake, SnakeDiagram};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar, Subquotient, Subspace};
use crate::liesuper::{
    bracket_span, check_crossed, check_homomorphism, format_vector, quotient_algebra, subalgebra, Action, Certificate,
    CrossedModule, Law, LieSuperAlgebra,
};
use crate::nat::{
    exterior_of, induced_exterior_map, induced_tensor_map, nonabelian_tensor, self_exterior, self_tensor,
    ExteriorProduct, TensorProduct,
};
use crate::superspace::{exterior_power, wedge_normalize, SuperSpace};

/// `𝓗₀(P, M) = Coker ν` and `𝓗₁(P, M) = Ker ν` for `ν: P ⊗ M → M`.
#[derive(Clone, Debug)]
pub struct NonAbelianHomology {
    pub tensor: TensorProduct,
    pub nh0: HomologyResult,
    pub nh1: HomologyResult,
}

/// `P ⊗ M` for a crossed `P`-module `M`, with `P` acting on `M` through the
/// crossed module and `M` on `P` through `∂`.
pub fn tensor_with_base(cm: &CrossedModule) -> Result<TensorProduct> {
    let id = CrossedModule::identity(cm.p());
    nonabelian_tensor(&id.action_on(cm)?, &cm.action_on(&id)?)
}

pub fn nh(cm: &CrossedModule) -> Result<NonAbelianHomology> {
    if let Some(v) = check_crossed(cm).first() {
        return Err(Error::AxiomViolation(v.to_string()));
    }
    let t = tensor_with_base(cm)?;
    let field = cm.p().field();
    let m = cm.m();
    let coker = Subquotient::new(Subspace::full(field, m.dim()), t.nu().image())?;
    let nh0 = HomologyResult::from_subquotient(0, m.space(), &coker);
    let ker = Subquotient::new(t.nu().kernel_basis(), Subspace::zero(field, t.dim()))?;
    let nh1 = HomologyResult::from_subquotient(1, t.algebra().space(), &ker);
    Ok(NonAbelianHomology { tensor: t, nh0, nh1 })
}

/// The six-term sequence `𝓗₁(P,L) → 𝓗₁(P,M) → 𝓗₁(P,N) → 𝓗₀(P,L) → 𝓗₀(P,M)
/// → 𝓗₀(P,N) → 0` of a short exact sequence `0 → L →f M →g N → 0` of crossed
/// `P`-modules, as the snake of `ν` between `P⊗(-)` and the sequence itself.
pub fn nh_long_sequence(
    cm_l: &CrossedModule,
    cm_m: &CrossedModule,
    cm_n: &CrossedModule,
    f: &Matrix,
    g: &Matrix,
) -> Result<(Snake, ExactnessCertificate)> {
    let p = cm_m.p();
    if cm_l.p() != p || cm_n.p() != p {
        return Err(Error::CrossedModuleMismatch("crossed modules over different bases".into()));
    }
    let [tl, tm, tn] = [cm_l, cm_m, cm_n].map(tensor_with_base);
    let (tl, tm, tn) = (tl?, tm?, tn?);
    let id = Matrix::identity(p.field(), p.dim());
    let d = SnakeDiagram {
        a: [tl.algebra().space().clone(), tm.algebra().space().clone(), tn.algebra().space().clone()],
        b: [cm_l.m().space().clone(), cm_m.m().space().clone(), cm_n.m().space().clone()],
        f: [induced_tensor_map(&tl, &tm, &id, f)?, induced_tensor_map(&tm, &tn, &id, g)?],
        g: [f.clone(), g.clone()],
        v: [tl.nu().clone(), tm.nu().clone(), tn.nu().clone()],
    };
    let s = snake(&d, ["𝓗₁(P,L)", "𝓗₁(P,M)", "𝓗₁(P,N)", "𝓗₀(P,L)", "𝓗₀(P,M)", "𝓗₀(P,N)"])?;
    let cert = exactness_check(&s.sequence)?;
    Ok((s, cert))
}

/// `0 → (Ker μ, 0) → (P⊗P, μ) → ([P,P], incl) → 0` and its six-term sequence.
pub fn tensor_square_sequence(p: &LieSuperAlgebra) -> Result<(Snake, ExactnessCertificate)> {
    let field = p.field();
    let t = self_tensor(p)?;
    let ker = t.mu().kernel_basis();
    let (l_alg, f) = subalgebra(t.algebra(), &ker, "Ker μ")?;
    let l_action = Action::from_fn(p.clone(), l_alg.clone(), |x, j| {
        ker.coordinates(&t.m_action().act(&p.basis_vector(x), &f.column(j))).expect("Ker μ is P-invariant")
    });
    let cl = CrossedModule::new(l_alg.clone(), p.clone(), Matrix::zeros(field, p.dim(), l_alg.dim()), l_action)?;
    let cm = t.crossed_mu();
    let im = t.mu().image();
    let cn = CrossedModule::from_ideal(p, &im, "[P,P]")?;
    let g_cols: Vec<Vec<Scalar>> =
        (0..t.dim()).map(|j| im.coordinates(&t.mu().column(j)).expect("μ lands in [P,P]")).collect();
    let g = Matrix::from_columns(field, im.dim(), &g_cols);
    nh_long_sequence(&cl, &cm, &cn, &f, &g)
}

/// `H₂(P) ≅ Ker(P ∧ P → P)`, `x ∧ y ↦ [x, y]`.
pub fn h2_via_exterior(p: &LieSuperAlgebra) -> Result<HomologyResult> {
    let e = self_exterior(p)?;
    let ker = Subquotient::new(e.mu().kernel_basis(), Subspace::zero(p.field(), e.dim()))?;
    Ok(HomologyResult::from_subquotient(2, e.algebra().space(), &ker))
}

/// `(Λ²P)/Im d₃` with bracket `[x∧y, x'∧y'] = [x,y]∧[x',y']`, the canonical
/// map onto `P ∧ P` and its certificate.
#[derive(Clone, Debug)]
pub struct D3Lemma {
    pub left: LieSuperAlgebra,
    pub right: ExteriorProduct,
    /// `dim right × dim left`.
    pub map: Matrix,
    pub certificate: Certificate,
}

pub fn d3_lemma_check(p: &LieSuperAlgebra) -> Result<D3Lemma> {
    let field = p.field();
    let complex = super::ce::ce_complex(p, &super::ce::Supermodule::trivial(p), 3)?;
    let l2 = exterior_power(p.space(), 2);
    let im_d3 = complex.boundaries[3].image();
    let q = Subquotient::new(Subspace::full(field, l2.dim()), im_d3.clone())?;
    let ps = p.space().parities();
    let wedge = |x: &[Scalar], y: &[Scalar]| {
        let mut out = field.zeros(l2.dim());
        for (a, ca) in crate::exactla::vector::support(x) {
            for (b, cb) in crate::exactla::vector::support(y) {
                if let Some((neg, mono)) = wedge_normalize(ps, &[a, b]) {
                    let k = l2.index_of(&mono).expect("canonical monomial");
                    let c = &field.sign(neg) * &(ca * cb);
                    out[k] = &out[k] + &c;
                }
            }
        }
        out
    };
    let bracket_of = |v: &[Scalar]| {
        // x∧y ↦ [x,y], extended linearly
        let mut out = field.zeros(p.dim());
        for (k, c) in crate::exactla::vector::support(v) {
            let f = l2.monomial(k).factors();
            crate::exactla::vector::axpy(&mut out, c, &p.bracket_basis_dense(f[0], f[1]));
        }
        out
    };
    let reps = q.section().to_vec();
    let labels: Vec<(String, crate::superspace::Parity)> = reps
        .iter()
        .map(|r| {
            let k = r.iter().position(|c| !c.is_zero()).expect("nonzero representative");
            (l2.space().label(k).to_string(), l2.space().parity_of(r).expect("graded quotient"))
        })
        .collect();
    let space = SuperSpace::new(labels)?;
    let brackets: Vec<Vec<Scalar>> = reps.iter().map(|r| bracket_of(r)).collect();
    let left =
        LieSuperAlgebra::from_fn("Λ²P/Im d₃", field, space, |i, j| q.reduce(&wedge(&brackets[i], &brackets[j])));

    let right = self_exterior(p)?;
    let t = right.tensor();
    let to_right = |v: &[Scalar]| {
        let mut out = field.zeros(right.dim());
        for (k, c) in crate::exactla::vector::support(v) {
            let f = l2.monomial(k).factors();
            crate::exactla::vector::axpy(&mut out, c, &right.reduce(&t.embed(f[0], f[1])));
        }
        out
    };
    let mut certificate = Certificate::default();
    for g in im_d3.basis() {
        let v = to_right(g);
        certificate.check(crate::exactla::vector::is_zero(&v), Law::WellDefined, || {
            (vec![format_vector(l2.space(), g)], format_vector(right.algebra().space(), &v))
        });
    }
    let map = Matrix::from_columns(field, right.dim(), &reps.iter().map(|r| to_right(r)).collect::<Vec<_>>());
    let rank = map.rank();
    certificate.check(rank == left.dim() && rank == right.dim(), Law::Bijective, || {
        (vec!["Λ²P/Im d₃".into()], format!("rank {rank}, dims {} and {}", left.dim(), right.dim()))
    });
    certificate.merge(check_homomorphism(&left, right.algebra(), &map));
    Ok(D3Lemma { left, right, map, certificate })
}

/// `Ker(M∧P → M) → H₂(P) → H₂(P/M) → M/[P,M] → H₁(P) → H₁(P/M) → 0` for a
/// graded ideal `M ⊴ P`, as the snake of the commutators
/// `M∧P → P∧P → (P/M)∧(P/M)` over `0 → M → P → P/M → 0`.
pub fn exterior_sixterm(p: &LieSuperAlgebra, m: &Subspace) -> Result<(Snake, ExactnessCertificate)> {
    let cm_m = CrossedModule::from_ideal(p, m, "M")?;
    let id = CrossedModule::identity(p);
    let mp = exterior_of(&cm_m, &id)?;
    let pp = self_exterior(p)?;
    let quotient = quotient_algebra(p, m, &format!("{}/M", p.name()))?;
    let qq = self_exterior(&quotient.algebra)?;
    let field = p.field();
    let incl = cm_m.boundary().clone();
    let proj = quotient.projection.clone();
    let id_p = Matrix::identity(field, p.dim());
    let f1 = induced_exterior_map(&mp, &pp, &induced_tensor_map(mp.tensor(), pp.tensor(), &incl, &id_p)?)?;
    let f2 = induced_exterior_map(&pp, &qq, &induced_tensor_map(pp.tensor(), qq.tensor(), &proj, &proj)?)?;
    let d = SnakeDiagram {
        a: [mp.algebra().space().clone(), pp.algebra().space().clone(), qq.algebra().space().clone()],
        b: [cm_m.m().space().clone(), p.space().clone(), quotient.algebra.space().clone()],
        f: [f1, f2],
        g: [incl, proj],
        v: [mp.mu().clone(), pp.mu().clone(), qq.mu().clone()],
    };
    let s = snake(&d, ["Ker(M∧P→M)", "H₂(P)", "H₂(P/M)", "M/[P,M]", "H₁(P)", "H₁(P/M)"])?;
    let cert = exactness_check(&s.sequence)?;
    Ok((s, cert))
}

/// Dimension checks tying the six-term sequence to the chain complex:
/// node 2 is `H₂(P)`, node 3 is `H₂(P/M)`, node 4 is `M/[P,M]`.
pub fn exterior_sixterm_dims_match(p: &LieSuperAlgebra, m: &Subspace, s: &Snake) -> Result<bool> {
    let quotient = quotient_algebra(p, m, "P/M")?;
    let dims = s.sequence.dimensions();
    let h2p = trivial_homology(p, 2)?.dim;
    let h2q = trivial_homology(&quotient.algebra, 2)?.dim;
    let full = Subspace::full(p.field(), p.dim());
    let pm = bracket_span(p, &full, m);
    let mq = p.space().sdim_of(m);
    let pq = p.space().sdim_of(&pm);
    let h1p = trivial_homology(p, 1)?.dim;
    let h1q = trivial_homology(&quotient.algebra, 1)?.dim;
    Ok(dims[1] == h2p && dims[2] == h2q && dims[3] == (mq.0 - pq.0, mq.1 - pq.1) && dims[4] == h1p && dims[5] == h1q)
}
