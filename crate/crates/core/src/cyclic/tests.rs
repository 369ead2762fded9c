use super::*;
use crate::exactla::FieldSpec;
use crate::liesuper::{dual_numbers, grassmann, ground_field, matrix_assoc};

const Q: FieldSpec = FieldSpec::Rationals;

fn examples() -> Vec<AssocSuperAlgebra> {
    let k = ground_field(Q);
    vec![k.clone(), dual_numbers(Q), grassmann(Q), matrix_assoc(1, 1, &k).unwrap()]
}

#[test]
fn connes_complex_of_the_field() {
    let c = connes(&ground_field(Q), DEFAULT_CONNES_DEGREE).unwrap();
    assert_eq!(c.spaces[0].dim(), 1);
    assert_eq!(c.homology(0).unwrap().dim, (1, 0));
    assert_eq!(c.homology(1).unwrap().dim, (0, 0));
    // t₁ = -swap on 1⊗1, so C₁ = 0; t₂ = id on 1⊗1⊗1, so C₂ = ℚ
    assert_eq!(c.spaces[1].dim(), 0);
    assert_eq!(c.spaces[2].dim(), 1);
}

#[test]
fn coinvariant_dimensions_by_orbit_count() {
    // Orbits of tₙ on basis tuples; an orbit survives iff the sign picked up
    // around it is +1.
    for a in examples() {
        let c = connes(&a, 2).unwrap();
        let d = a.dim();
        for n in 0..=2 {
            let len = d.pow((n + 1) as u32);
            let mut seen = vec![false; len];
            let mut want = (0, 0);
            for start in 0..len {
                if seen[start] {
                    continue;
                }
                let mut cur = start;
                let mut negative = false;
                loop {
                    seen[cur] = true;
                    let digits: Vec<usize> = (0..=n).map(|k| (cur / d.pow((n - k) as u32)) % d).collect();
                    let odd = |x: usize| a.space().parity(x).is_odd();
                    let before = digits[..n].iter().filter(|&&x| odd(x)).count() % 2 == 1;
                    negative ^= (n % 2 == 1) ^ (odd(digits[n]) && before);
                    let mut rot = vec![digits[n]];
                    rot.extend_from_slice(&digits[..n]);
                    cur = rot.iter().fold(0, |acc, &x| acc * d + x);
                    if cur == start {
                        break;
                    }
                }
                if !negative {
                    let odd =
                        (0..=n).filter(|k| a.space().parity((start / d.pow((n - k) as u32)) % d).is_odd()).count();
                    if odd % 2 == 0 {
                        want.0 += 1;
                    } else {
                        want.1 += 1;
                    }
                }
            }
            assert_eq!(c.spaces[n].sdim(), want, "{} C{n}", a.name());
        }
    }
}

#[test]
fn hc0_is_the_commutator_quotient() {
    for a in examples() {
        let h0 = hc(&a, 0).unwrap();
        let comm = commutator_subspace(&a);
        let (p, q) = a.space().sdim();
        let (cp, cq) = a.space().sdim_of(&comm);
        assert_eq!(h0.dim, (p - cp, q - cq), "{}", a.name());
        if a.is_supercommutative() {
            assert_eq!(h0.total(), a.dim());
        }
    }
}

#[test]
fn hc1_two_constructions_agree() {
    for a in examples() {
        let connes_hc1 = hc(&a, 1).unwrap().dim;
        let kernel = hc1_kernel_model(&a).unwrap();
        assert_eq!(tensor_subquotient_sdim(&a, &kernel), connes_hc1, "{}", a.name());
    }
    assert_eq!(hc(&ground_field(Q), 1).unwrap().total(), 0);
}

#[test]
fn supercommutative_hc1_is_milnor() {
    for a in [ground_field(Q), dual_numbers(Q), grassmann(Q)] {
        assert!(a.is_supercommutative());
        let kernel = hc1_kernel_model(&a).unwrap();
        let m = milnor_hc1(&a).unwrap();
        assert_eq!(tensor_subquotient_sdim(&a, &kernel), m.sdim(), "{}", a.name());
        let map = hc1_to_milnor(&kernel, &m);
        assert_eq!(map.rank(), m.dim());
        assert_eq!(map.rank(), kernel.dim());
    }
    assert_eq!(milnor_hc1(&ground_field(Q)).unwrap().dim(), 0);
}

#[test]
fn v_algebra_certificates() {
    let k = ground_field(Q);
    let v = v_algebra(&k).unwrap();
    assert!(v.certificate.is_certified(), "{}", v.certificate);
    assert_eq!(v.algebra.dim(), 0);
    for a in examples() {
        let v = v_algebra(&a).unwrap();
        assert!(v.certificate.is_certified(), "{}: {}", a.name(), v.certificate);
        let kernel = hc1_kernel_model(&a).unwrap();
        assert_eq!(v.algebra.dim(), kernel.dim() + commutator_subspace(&a).dim());
    }
}

#[test]
fn non_unital_algebra_is_rejected() {
    let k = ground_field(Q);
    let zero = AssocSuperAlgebra::from_fn("null", Q, k.space().clone(), None, |_, _| vec![Q.zero()]);
    assert!(matches!(v_algebra(&zero), Err(Error::NotUnital(_))));
}

#[test]
fn sixterm_sequences_are_exact() {
    for a in examples() {
        let s = cyclic_sixterm(&a).unwrap();
        assert!(s.exactness.is_exact(), "{}: {:?}", a.name(), s.exactness.first_failure());
        assert!(s.lemma.is_certified(), "{}: {}", a.name(), s.lemma);
        assert!(s.is_certified());
        if a.is_supercommutative() {
            assert_eq!(s.hc1_kernel, s.milnor);
        }
    }
    let s = cyclic_sixterm(&ground_field(Q)).unwrap();
    assert!(s.table.iter().all(|(_, d, _)| *d == (0, 0)));
}

#[test]
fn corollary_is_conditional_on_perfection() {
    for a in examples() {
        assert!(corollary_check(&a).unwrap().is_none(), "{}", a.name());
    }
}
