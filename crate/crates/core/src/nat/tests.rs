use super::*;
use crate::exactla::FieldSpec;
use crate::liesuper::{
    abelian, center, check_crossed, check_lie_axioms, ground_field, heisenberg, matrix_gl, matrix_sl, solvable2,
    CrossedModule,
};

const Q: FieldSpec = FieldSpec::Rationals;

fn trivial_tensor(m: &LieSuperAlgebra, n: &LieSuperAlgebra) -> TensorProduct {
    nonabelian_tensor(&Action::trivial(m.clone(), n.clone()), &Action::trivial(n.clone(), m.clone())).unwrap()
}

#[test]
fn trivial_actions_give_abelianized_tensor() {
    for (p, q, want) in [(1, 0, (1, 0)), (1, 1, (2, 2)), (0, 1, (1, 0))] {
        let a = abelian(Q, p, q);
        let t = trivial_tensor(&a, &a);
        assert_eq!(t.algebra().sdim(), want);
        assert!(t.algebra().is_abelian());
        assert_eq!(trivial_action_tensor(&a, &a).sdim(), want);
    }
    let h = heisenberg(Q);
    let a = abelian(Q, 1, 0);
    assert_eq!(trivial_tensor(&h, &a).dim(), 2);
    assert_eq!(trivial_action_tensor(&h, &a).dim(), 2);
}

#[test]
fn reduced_generation_matches_exhaustive() {
    let gl = matrix_gl(1, 1, &ground_field(Q)).unwrap();
    for l in [heisenberg(Q), solvable2(Q), gl, abelian(Q, 1, 2)] {
        let ad = Action::adjoint(&l);
        let r = d_generators(&ad, &ad, Generation::Reduced);
        let e = d_generators(&ad, &ad, Generation::Exhaustive);
        assert_eq!(r, e, "{}", l.name());
    }
}

#[test]
fn tensor_squares_are_crossed_modules() {
    let gl = matrix_gl(1, 1, &ground_field(Q)).unwrap();
    for l in [heisenberg(Q), solvable2(Q), gl] {
        let t = self_tensor(&l).unwrap();
        assert!(t.well_defined().is_certified());
        assert!(check_lie_axioms(t.algebra()).is_certified(), "{}", l.name());
        assert!(check_crossed(&t.crossed_mu()).is_certified(), "{}", l.name());
        assert!(check_crossed(&t.crossed_nu()).is_certified(), "{}", l.name());
        // Ker μ lies in the center
        let z = center(t.algebra());
        assert!(t.mu().kernel_basis().basis().iter().all(|k| z.contains(k)));
    }
}

#[test]
fn heisenberg_tensor_square() {
    let t = self_tensor(&heisenberg(Q)).unwrap();
    assert_eq!(t.dim(), 6);
    let e = self_exterior(&heisenberg(Q)).unwrap();
    assert_eq!(e.dim(), 3);
}

#[test]
fn incompatible_actions_rejected() {
    let s = solvable2(Q);
    let r = nonabelian_tensor(&Action::adjoint(&s), &Action::trivial(s.clone(), s.clone()));
    assert!(matches!(r, Err(Error::IncompatibleActions(_))));
}

#[test]
fn symmetry_is_an_involution() {
    let gl = matrix_gl(1, 1, &ground_field(Q)).unwrap();
    for l in [heisenberg(Q), gl, abelian(Q, 1, 1)] {
        let t = self_tensor(&l).unwrap();
        let iso = tensor_symmetry_iso(&t).unwrap();
        assert!(iso.certificate.is_certified(), "{}: {}", l.name(), iso.certificate);
        let sq = iso.map.matrix().mul(iso.map.matrix());
        assert_eq!(sq, Matrix::identity(Q, t.dim()));
    }
}

#[test]
fn symmetry_between_different_factors() {
    let h = heisenberg(Q);
    let z = CrossedModule::from_ideal(&h, &center(&h), "z").unwrap();
    let id = CrossedModule::identity(&h);
    let t = nonabelian_tensor(&z.action_on(&id).unwrap(), &id.action_on(&z).unwrap()).unwrap();
    let iso = tensor_symmetry_iso(&t).unwrap();
    assert!(iso.certificate.is_certified());
    assert_eq!(iso.swapped.dim(), t.dim());
    let e_mn = exterior_of(&z, &id).unwrap();
    let e_nm = exterior_of(&id, &z).unwrap();
    let m = exterior_symmetry_iso(&e_mn, &e_nm).unwrap();
    assert_eq!(m.rank(), e_mn.dim());
    assert_eq!(e_mn.dim(), e_nm.dim());
}

#[test]
fn exterior_examples() {
    assert_eq!(self_exterior(&abelian(Q, 1, 0)).unwrap().dim(), 0);
    let odd = self_exterior(&abelian(Q, 0, 1)).unwrap();
    assert_eq!(odd.algebra().sdim(), (1, 0));
    let gl = matrix_gl(1, 1, &ground_field(Q)).unwrap();
    for l in [heisenberg(Q), gl] {
        let e = self_exterior(&l).unwrap();
        assert!(e.central().is_certified());
        assert!(check_lie_axioms(e.algebra()).is_certified());
    }
}

#[test]
fn perfect_algebra_has_trivial_square_ideal() {
    let sl = matrix_sl(2, 1, &ground_field(Q)).unwrap();
    let e = self_exterior(&sl).unwrap();
    assert!(e.square_ideal().is_zero());
    assert_eq!(e.dim(), e.tensor().dim());
}

#[test]
fn uce_of_perfect_algebras() {
    let sl30 = matrix_sl(3, 0, &ground_field(Q)).unwrap();
    let u = uce(&sl30).unwrap();
    assert!(u.certificate.is_certified(), "{}", u.certificate);
    assert_eq!(u.kernel_sdim(), (0, 0));
    let sl21 = matrix_sl(2, 1, &ground_field(Q)).unwrap();
    let u = uce(&sl21).unwrap();
    assert!(u.certificate.is_certified(), "{}", u.certificate);
    assert_eq!(u.total.dim(), 8 + u.kernel.dim());
    assert!(matches!(uce(&heisenberg(Q)), Err(Error::NotPerfect(_))));
}

#[test]
fn right_exactness_for_heisenberg_ideals() {
    let h = heisenberg(Q);
    for k in [Subspace::zero(Q, 3), center(&h), Subspace::full(Q, 3)] {
        let r = right_exactness_check(&h, &k).unwrap();
        assert!(r.is_certified(), "dim K = {}: {} / {}", k.dim(), r.exactness, r.homomorphism);
    }
    let gl = matrix_gl(1, 1, &ground_field(Q)).unwrap();
    let z = center(&gl);
    assert!(right_exactness_check(&gl, &z).unwrap().is_certified());
    let not_ideal = Subspace::span(Q, 3, [Q.unit_vector(3, 0)]);
    assert!(matches!(right_exactness_check(&h, &not_ideal), Err(Error::NotAnIdeal(_))));
}

#[test]
fn nilpotency_bounds() {
    let a = abelian(Q, 1, 1);
    let r = nilpotency_bounds_check(&trivial_tensor(&a, &a)).unwrap();
    assert!(r.holds());
    assert!(r.tensor.class.unwrap() <= 1);

    let r = nilpotency_bounds_check(&self_tensor(&heisenberg(Q)).unwrap()).unwrap();
    assert!(r.holds(), "{}", r.certificate);
    assert_eq!(r.image_mu.class, Some(1));

    let r = nilpotency_bounds_check(&self_tensor(&solvable2(Q)).unwrap()).unwrap();
    assert!(r.holds(), "{}", r.certificate);
    assert_eq!(r.image_mu.class, Some(1));
    assert!(r.tensor.derived_length.is_some());
}
