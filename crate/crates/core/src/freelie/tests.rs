use super::*;
use crate::homology::{hopf_formula, trivial_homology};
use crate::liesuper::{check_lie_axioms, heisenberg, series};
use Parity::{Even, Odd};

const Q: FieldSpec = FieldSpec::Rationals;

fn gens(ps: &[(&str, Parity)]) -> GradedGenSet {
    GradedGenSet::new(ps.to_vec()).unwrap()
}

#[test]
fn component_dimensions() {
    let one_even = free_truncated(Q, &gens(&[("x", Even)]), 3).unwrap();
    assert_eq!(one_even.component_dims(), vec![1, 0, 0]);
    let one_odd = free_truncated(Q, &gens(&[("t", Odd)]), 3).unwrap();
    assert_eq!(one_odd.component_sdims(), vec![(0, 1), (1, 0), (0, 0)]);
    let two_even = free_truncated(Q, &gens(&[("x", Even), ("y", Even)]), 4).unwrap();
    assert_eq!(two_even.component_dims(), vec![2, 1, 2, 3]);
}

#[test]
fn free_nilpotent_algebras() {
    let xy = gens(&[("x", Even), ("y", Even)]);
    let f2 = free_nilpotent(Q, &xy, 2).unwrap();
    assert_eq!(f2.dim(), 3);
    assert_eq!(series(&f2).nil_class, Some(2));
    assert_eq!(trivial_homology(&f2, 2).unwrap().dim, trivial_homology(&heisenberg(Q), 2).unwrap().dim);
    let t = free_nilpotent(Q, &gens(&[("t", Odd)]), 2).unwrap();
    assert_eq!(t.sdim(), (1, 1));
    let a = free_nilpotent(Q, &gens(&[("x", Even), ("t", Odd)]), 1).unwrap();
    assert!(a.is_abelian());
    for c in 1..=3 {
        let f = free_nilpotent(Q, &gens(&[("x", Even), ("t", Odd)]), c).unwrap();
        assert!(check_lie_axioms(&f).is_certified());
        assert_eq!(series(&f).nil_class, Some(c));
    }
    assert!(matches!(free_truncated(FieldSpec::prime(5).unwrap(), &xy, 2), Err(Error::FieldUnsupported(_))));
}

#[test]
fn relator_evaluation() {
    let f = free_truncated(Q, &gens(&[("x", Even), ("y", Even), ("t", Odd)]), 2).unwrap();
    let one = Q.one();
    let xy = evaluate_relator(&f, &[(one.clone(), Word::bracket(Word::gen("x"), Word::gen("y")))]).unwrap();
    assert_eq!(f.algebra().space().parity_of(&xy), Some(Even));
    assert!(!vector::is_zero(&xy));
    let xx = evaluate_relator(&f, &[(one.clone(), Word::bracket(Word::gen("x"), Word::gen("x")))]).unwrap();
    assert!(vector::is_zero(&xx));
    let tt = evaluate_relator(&f, &[(one.clone(), Word::bracket(Word::gen("t"), Word::gen("t")))]).unwrap();
    assert_eq!(f.algebra().space().parity_of(&tt), Some(Even));
    assert!(!vector::is_zero(&tt));
    let deep = Word::bracket(Word::bracket(Word::gen("x"), Word::gen("y")), Word::gen("x"));
    assert!(matches!(evaluate_relator(&f, &[(one, deep)]), Err(Error::DegreeOverflow { .. })));
}

#[test]
fn hopf_examples() {
    let xy = gens(&[("x", Even), ("y", Even)]);
    // free nilpotent of class 2 on two generators is heis
    let heis = Presentation::new(xy.clone(), vec![], Some(2)).unwrap();
    assert_eq!(hopf_formula(Q, &heis, 2).unwrap().dim, (2, 0));
    // a line
    let line = Presentation::new(gens(&[("x", Even)]), vec![], None).unwrap();
    assert_eq!(hopf_formula(Q, &line, 1).unwrap().total(), 0);
    // the free Lie algebra on two generators is not nilpotent
    let free = Presentation::new(xy.clone(), vec![], None).unwrap();
    assert!(matches!(hopf_formula(Q, &free, 2), Err(Error::ClassExceeded { bound: 2 })));
    // abelian(2|0) = ⟨x, y | [x,y]⟩ has H₂ = 1
    let ab = Presentation::new(xy, vec![vec![(Q.one(), Word::bracket(Word::gen("x"), Word::gen("y")))]], None).unwrap();
    assert_eq!(hopf_formula(Q, &ab, 1).unwrap().dim, (1, 0));
    // free nilpotent class 3: H₂ = degree-4 component
    let xy = gens(&[("x", Even), ("y", Even)]);
    let f3 = Presentation::new(xy.clone(), vec![], Some(3)).unwrap();
    assert_eq!(hopf_formula(Q, &f3, 3).unwrap().total(), 3);
    assert_eq!(trivial_homology(&free_nilpotent(Q, &xy, 3).unwrap(), 2).unwrap().total(), 3);
}

#[test]
fn miller_examples() {
    assert!(miller_truncated_check(Q, &gens(&[("x", Even)]), 2).unwrap().holds());
    let xy = gens(&[("x", Even), ("y", Even)]);
    let m1 = miller_truncated_check(Q, &xy, 1).unwrap();
    assert_eq!((m1.kernel, m1.holds()), ((1, 0), true));
    let m2 = miller_truncated_check(Q, &xy, 2).unwrap();
    assert_eq!((m2.kernel, m2.holds()), ((2, 0), true));
    assert!(miller_truncated_check(Q, &gens(&[("x", Even), ("t", Odd)]), 2).unwrap().holds());
}
