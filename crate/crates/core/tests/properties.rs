//! Property tests for the structural invariants of each module.

mod common;

use common::{lie_oracle, random_lie, Q};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use superlie::exactla::vector;
use superlie::freelie::{evaluate_relator, free_truncated, GradedGenSet, Word};
use superlie::homology::{h2_via_exterior, trivial_homology};
use superlie::liesuper::{bracket_span, center, check_crossed, check_lie_axioms, is_engel, series};
use superlie::nat::self_tensor;
use superlie::superspace::{exterior_power, koszul_sign_is_negative, wedge_normalize};
use superlie::{FieldSpec, LieSuperAlgebra, Matrix, Parity, Scalar, Subquotient, Subspace, SuperSpace};

fn scalars(field: FieldSpec, entries: &[i64]) -> Vec<Scalar> {
    entries.iter().map(|&x| field.int(x)).collect()
}

fn fields() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(FieldSpec::Rationals), Just(FieldSpec::prime(5).unwrap()), Just(FieldSpec::prime(7).unwrap())]
}

/// Small integer vectors, biased towards zero so ranks vary.
fn vectors(n: usize, count: std::ops::Range<usize>) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], n), count)
}

fn matrices() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..7).prop_flat_map(|cols| (Just(cols), vectors(cols, 1..7)))
}

fn span(field: FieldSpec, n: usize, rows: &[Vec<i64>]) -> Subspace {
    Subspace::span(field, n, rows.iter().map(|r| scalars(field, r)))
}

fn parities() -> impl Strategy<Value = Vec<Parity>> {
    prop::collection::vec(any::<bool>().prop_map(Parity::from_bool), 1..6)
}

/// The same algebra with its basis listed in the order `perm`.
fn relabel(l: &LieSuperAlgebra, perm: &[usize]) -> LieSuperAlgebra {
    let basis: Vec<(String, Parity)> = perm.iter().map(|&i| (l.space().label(i).to_string(), l.parity(i))).collect();
    let space = SuperSpace::new(basis).unwrap();
    LieSuperAlgebra::from_fn(format!("{}′", l.name()), l.field(), space, |a, b| {
        let v = l.bracket_basis_dense(perm[a], perm[b]);
        perm.iter().map(|&k| v[k].clone()).collect()
    })
}

proptest! {
    #[test]
    fn rank_nullity(field in fields(), (cols, rows) in matrices()) {
        let m = Matrix::from_rows(field, cols, rows.iter().map(|r| scalars(field, r)).collect());
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.dim(), cols);
        for v in kernel.basis() {
            prop_assert!(vector::is_zero(&m.mul_vec(v)));
        }
    }

    #[test]
    fn echelon_form_is_canonical(field in fields(), rows in vectors(5, 0..7), seed in any::<u64>()) {
        let a = span(field, 5, &rows);
        let mut shuffled = rows.clone();
        shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let b = span(field, 5, &shuffled);
        prop_assert_eq!(a.basis(), b.basis());
        let again = Subspace::span(field, 5, a.basis().to_vec());
        prop_assert_eq!(again.basis(), a.basis());
    }

    #[test]
    fn subquotient_reduce_lift(field in fields(), top in vectors(5, 1..6), bottom in vectors(5, 0..4), x in vectors(5, 1..2)) {
        let top = span(field, 5, &top);
        // keep the bottom inside the top
        let bottom = span(field, 5, &bottom).intersect(&top).unwrap();
        let q = Subquotient::new(top.clone(), bottom.clone()).unwrap();
        for i in 0..q.dim() {
            let e = field.unit_vector(q.dim(), i);
            prop_assert_eq!(q.reduce(&q.lift(&e)), e);
        }
        // lift∘reduce moves an element of top only by something in bottom
        let v = top.combine(&scalars(field, &x[0][..top.dim()]));
        let back = q.lift(&q.reduce(&v));
        prop_assert!(bottom.contains(&vector::sub(&back, &v)));
    }

    #[test]
    fn grassmann_identity(field in fields(), a in vectors(6, 0..5), b in vectors(6, 0..5)) {
        let (a, b) = (span(field, 6, &a), span(field, 6, &b));
        let sum = a.sum(&b).unwrap();
        let meet = a.intersect(&b).unwrap();
        prop_assert_eq!(a.dim() + b.dim(), sum.dim() + meet.dim());
        prop_assert!(a.contains_subspace(&meet) && b.contains_subspace(&meet));
        prop_assert!(sum.contains_subspace(&a) && sum.contains_subspace(&b));
    }

    #[test]
    fn wedge_normalize_is_idempotent(ps in parities(), raw in prop::collection::vec(0usize..6, 0..5)) {
        let factors: Vec<usize> = raw.into_iter().map(|i| i % ps.len()).collect();
        if let Some((_, m)) = wedge_normalize(&ps, &factors) {
            let (negative, again) = wedge_normalize(&ps, m.factors()).unwrap();
            prop_assert!(!negative);
            prop_assert_eq!(again, m);
        }
    }

    #[test]
    fn exterior_dims_match_enumeration(p in 0usize..4, q in 0usize..3, n in 0usize..5) {
        let ps: Vec<Parity> = (0..p + q).map(|i| Parity::from_bool(i >= p)).collect();
        let ext = exterior_power(&SuperSpace::standard(p, q), n);
        // brute force: all weakly increasing index sequences, evens not repeated
        let mut count = 0;
        let mut stack: Vec<Vec<usize>> = vec![vec![]];
        while let Some(w) = stack.pop() {
            if w.len() == n {
                count += 1;
                continue;
            }
            let start = w.last().copied().unwrap_or(0);
            for i in start..p + q {
                if w.last() == Some(&i) && ps[i].is_even() {
                    continue;
                }
                let mut next = w.clone();
                next.push(i);
                stack.push(next);
            }
        }
        prop_assert_eq!(ext.dim(), count);
        if n == 2 {
            prop_assert_eq!(ext.dim(), p * (p.max(1) - 1) / 2 + p * q + q * (q + 1) / 2);
        }
    }

    #[test]
    fn evaluate_relator_respects_parity(ps in prop::collection::vec(any::<bool>(), 1..4), shape in prop::collection::vec(0usize..8, 1..4)) {
        let labels: Vec<String> = (0..ps.len()).map(|i| format!("x{i}")).collect();
        let gens = GradedGenSet::new(labels.iter().cloned().zip(ps.iter().map(|&o| Parity::from_bool(o))).collect()).unwrap();
        let f = free_truncated(Q, &gens, 4).unwrap();
        // a left-normed word of degree ≤ 4 built from `shape`
        let mut word = Word::gen(labels[shape[0] % ps.len()].clone());
        for &s in &shape[1..] {
            word = Word::bracket(word, Word::gen(labels[s % ps.len()].clone()));
        }
        let v = evaluate_relator(&f, &[(Q.one(), word.clone())]).unwrap();
        let expected = word.parity(&gens).unwrap();
        let odd_sum = shape.iter().filter(|&&s| ps[s % ps.len()]).count() % 2 == 1;
        prop_assert_eq!(expected, Parity::from_bool(odd_sum));
        if !vector::is_zero(&v) {
            prop_assert_eq!(f.algebra().space().parity_of(&v), Some(expected));
        }
    }
}

/// Koszul signs are a homomorphism: the sign of `σ∘τ` is the sign of `τ`
/// times the sign of `σ` acting on the already permuted factors.
#[test]
fn koszul_sign_is_multiplicative() {
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for k in 0..n {
                let mut q = p.clone();
                q.insert(k, n - 1);
                out.push(q);
            }
        }
        out
    }
    for n in 0..=5 {
        let perms = permutations(n);
        for mask in 0..1u32 << n {
            let ps: Vec<Parity> = (0..n).map(|i| Parity::from_bool(mask >> i & 1 == 1)).collect();
            for tau in &perms {
                let permuted: Vec<Parity> = tau.iter().map(|&i| ps[i]).collect();
                for sigma in &perms {
                    let composed: Vec<usize> = sigma.iter().map(|&i| tau[i]).collect();
                    let direct = koszul_sign_is_negative(&composed, &ps);
                    let stepwise = koszul_sign_is_negative(tau, &ps) ^ koszul_sign_is_negative(sigma, &permuted);
                    assert_eq!(direct, stepwise, "n={n} mask={mask:b} σ={sigma:?} τ={tau:?}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_algebras_are_lie(seed in any::<u64>()) {
        let l = random_lie(&mut ChaCha8Rng::seed_from_u64(seed), 5);
        prop_assert!(check_lie_axioms(&l).is_certified());
        prop_assert!(lie_oracle(&l));
    }

    #[test]
    fn series_are_nested(seed in any::<u64>()) {
        let l = random_lie(&mut ChaCha8Rng::seed_from_u64(seed), 5);
        let s = series(&l);
        for w in s.lower_central.windows(2).chain(s.derived.windows(2)) {
            prop_assert!(w[0].contains_subspace(&w[1]));
        }
        if s.is_nilpotent() {
            prop_assert!(s.is_solvable());
        }
        prop_assert_eq!(l.is_abelian(), s.nil_class.is_some_and(|c| c <= 1));
    }

    #[test]
    fn engel_is_monotone(seed in any::<u64>(), n in 1usize..4) {
        let l = random_lie(&mut ChaCha8Rng::seed_from_u64(seed), 4);
        if is_engel(&l, n) {
            prop_assert!(is_engel(&l, n + 1));
        }
    }

    #[test]
    fn h1_is_abelianization(seed in any::<u64>()) {
        let l = random_lie(&mut ChaCha8Rng::seed_from_u64(seed), 5);
        let full = Subspace::full(Q, l.dim());
        let derived = l.space().sdim_of(&bracket_span(&l, &full, &full));
        let h1 = trivial_homology(&l, 1).unwrap().dim;
        prop_assert_eq!(h1, (l.sdim().0 - derived.0, l.sdim().1 - derived.1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tensor_square_invariants(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = random_lie(&mut rng, 4);
        let t = self_tensor(&l).unwrap();
        prop_assert!(check_crossed(&t.crossed_mu()).is_certified());
        prop_assert!(check_crossed(&t.crossed_nu()).is_certified());
        let z = center(t.algebra());
        prop_assert!(z.contains_subspace(&t.mu().kernel_basis()));
        if series(&l).is_perfect {
            prop_assert!(series(t.algebra()).is_perfect);
        }
        let mut perm: Vec<usize> = (0..l.dim()).collect();
        perm.shuffle(&mut rng);
        let shuffled = self_tensor(&relabel(&l, &perm)).unwrap();
        prop_assert_eq!(shuffled.algebra().sdim(), t.algebra().sdim());
    }

    #[test]
    fn h2_two_ways(seed in any::<u64>()) {
        let l = random_lie(&mut ChaCha8Rng::seed_from_u64(seed), 4);
        prop_assert_eq!(h2_via_exterior(&l).unwrap().dim, trivial_homology(&l, 2).unwrap().dim);
    }
}
