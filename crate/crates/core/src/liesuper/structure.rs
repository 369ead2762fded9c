use std::collections::HashMap;

use super::LieSuperAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{EchelonAccumulator, Matrix, Scalar, Subquotient, Subspace};
use crate::superspace::SuperSpace;

/// `span{[a, b] : a ∈ A, b ∈ B}`.
pub fn bracket_span(l: &LieSuperAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let mut acc = EchelonAccumulator::new(l.field(), l.dim());
    for x in a.basis() {
        for y in b.basis() {
            if acc.is_full() {
                return acc.finish();
            }
            acc.insert(l.bracket(x, y));
        }
    }
    acc.finish()
}

/// Smallest bracket-closed subspace containing `s`.
pub fn subalgebra_closure(l: &LieSuperAlgebra, s: Vec<Vec<Scalar>>) -> Subspace {
    let mut acc = EchelonAccumulator::new(l.field(), l.dim());
    let mut frontier: Vec<Vec<Scalar>> = s.into_iter().filter(|v| acc.insert(v.clone())).collect();
    let mut all = frontier.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for y in all.clone() {
                for v in [l.bracket(x, &y), l.bracket(&y, x)] {
                    if acc.insert(v.clone()) {
                        next.push(v);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    acc.finish()
}

/// Smallest ideal containing `s`.
pub fn ideal_closure(l: &LieSuperAlgebra, s: Vec<Vec<Scalar>>) -> Subspace {
    let mut acc = EchelonAccumulator::new(l.field(), l.dim());
    let mut frontier: Vec<Vec<Scalar>> = s.into_iter().filter(|v| acc.insert(v.clone())).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for i in 0..l.dim() {
                let v = l.bracket_left_basis(i, x);
                if acc.insert(v.clone()) {
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    acc.finish()
}

/// Graded and `[L, S] ⊆ S`.
pub fn is_ideal(l: &LieSuperAlgebra, s: &Subspace) -> bool {
    l.space().is_graded(s) && s.basis().iter().all(|x| (0..l.dim()).all(|i| s.contains(&l.bracket_left_basis(i, x))))
}

/// `Z(L) = {z : [z, L] = 0}`.
pub fn center(l: &LieSuperAlgebra) -> Subspace {
    let n = l.dim();
    let mut rows = Vec::with_capacity(n * n);
    for j in 0..n {
        // row k of the block for eⱼ: z ↦ ([z, eⱼ])_k
        for k in 0..n {
            rows.push((0..n).map(|i| l.bracket_basis_dense(i, j)[k].clone()).collect());
        }
    }
    Matrix::from_rows(l.field(), n, rows).kernel_basis()
}

/// Lower central and derived series with the derived invariants.
#[derive(Clone, Debug)]
pub struct Series {
    pub lower_central: Vec<Subspace>,
    pub derived: Vec<Subspace>,
    pub center: Subspace,
    /// Smallest `c` with `γ_{c+1} = 0`; `None` if the series stabilizes above zero.
    pub nil_class: Option<usize>,
    /// Smallest `l` with `L⁽ˡ⁾ = 0`.
    pub derived_length: Option<usize>,
    pub is_perfect: bool,
}

impl Series {
    pub fn is_nilpotent(&self) -> bool {
        self.nil_class.is_some()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_length.is_some()
    }
}

pub fn series(l: &LieSuperAlgebra) -> Series {
    let full = Subspace::full(l.field(), l.dim());
    let mut lower = vec![full.clone()];
    let nil_class = loop {
        let last = lower.last().unwrap();
        if last.is_zero() {
            break Some(lower.len() - 1);
        }
        let next = bracket_span(l, &full, last);
        if next.dim() == last.dim() {
            break None;
        }
        lower.push(next);
    };
    let mut derived = vec![full];
    let derived_length = loop {
        let last = derived.last().unwrap();
        if last.is_zero() {
            break Some(derived.len() - 1);
        }
        let next = bracket_span(l, last, last);
        if next.dim() == last.dim() {
            break None;
        }
        derived.push(next);
    };
    let is_perfect = bracket_span(l, &derived[0], &derived[0]).dim() == l.dim();
    Series { lower_central: lower, derived, center: center(l), nil_class, derived_length, is_perfect }
}

/// `ad(x)ⁿ = 0` for every element `x = Σ tᵢeᵢ`.
///
/// Expanding `ad(x)ⁿ` as a polynomial in the `tᵢ`, the coefficient of
/// `t^α` is the sum of `ad(e_{i₁})⋯ad(e_{iₙ})` over the distinct
/// arrangements of the multiset `α`. All coefficients vanishing is exact over
/// an infinite field; over 𝔽ₚ it is a sufficient condition only.
pub fn is_engel(l: &LieSuperAlgebra, n: usize) -> bool {
    assert!(n >= 1, "Engel degree must be positive");
    let d = l.dim();
    if d == 0 {
        return true;
    }
    let ads: Vec<Matrix> = (0..d).map(|i| l.ad_basis(i)).collect();
    let mut level: HashMap<Vec<usize>, Matrix> = HashMap::new();
    level.insert(Vec::new(), Matrix::identity(l.field(), d));
    for _ in 0..n {
        let mut next: HashMap<Vec<usize>, Matrix> = HashMap::new();
        for (alpha, s) in &level {
            let start = alpha.last().copied().unwrap_or(0);
            for i in start..d {
                let mut beta = alpha.clone();
                beta.push(i);
                if next.contains_key(&beta) {
                    continue;
                }
                // S(β) = Σ_{j ∈ β distinct} ad_j · S(β - j)
                let mut total = Matrix::zeros(l.field(), d, d);
                let mut prev = None;
                for (pos, &j) in beta.iter().enumerate() {
                    if prev == Some(j) {
                        continue;
                    }
                    prev = Some(j);
                    let mut rest = beta.clone();
                    rest.remove(pos);
                    total = total.add(&ads[j].mul(&level[&rest]));
                }
                next.insert(beta, total);
            }
            let _ = s;
        }
        level = next;
    }
    level.values().all(Matrix::is_zero)
}

/// The algebra structure on a bracket-closed graded subspace, with its inclusion.
///
/// The basis is the echelon basis of `s`; each element is labelled by its pivot.
pub fn subalgebra(l: &LieSuperAlgebra, s: &Subspace, name: &str) -> Result<(LieSuperAlgebra, Matrix)> {
    if !l.space().is_graded(s) {
        return Err(Error::NotAnIdeal("subspace is not spanned by homogeneous vectors".into()));
    }
    let basis = s.basis();
    let space = SuperSpace::new(
        basis
            .iter()
            .zip(s.pivots())
            .map(|(r, &p)| (l.space().label(p).to_string(), l.space().parity_of(r).unwrap()))
            .collect(),
    )?;
    let mut table = Vec::with_capacity(basis.len() * basis.len());
    for x in basis {
        for y in basis {
            let v = l.bracket(x, y);
            table.push(
                s.coordinates(&v).ok_or_else(|| Error::Input("subspace is not closed under the bracket".into()))?,
            );
        }
    }
    let k = basis.len();
    let sub = LieSuperAlgebra::from_fn(name, l.field(), space, |i, j| table[i * k + j].clone());
    Ok((sub, s.basis_matrix()))
}

/// `L/I` with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: LieSuperAlgebra,
    /// `dim(L/I) × dim L`
    pub projection: Matrix,
    pub section: Subquotient,
}

pub fn quotient_algebra(l: &LieSuperAlgebra, ideal: &Subspace, name: &str) -> Result<Quotient> {
    if !is_ideal(l, ideal) {
        return Err(Error::NotAnIdeal(format!("subspace of {} is not a graded ideal", l.name())));
    }
    let sq = Subquotient::new(Subspace::full(l.field(), l.dim()), ideal.clone())?;
    let reps = sq.section().to_vec();
    let pivots: Vec<usize> = Subspace::span(l.field(), l.dim(), reps.clone()).pivots().to_vec();
    let space = SuperSpace::new(
        reps.iter()
            .zip(&pivots)
            .map(|(r, &p)| (l.space().label(p).to_string(), l.space().parity_of(r).unwrap()))
            .collect(),
    )?;
    let algebra = LieSuperAlgebra::from_fn(name, l.field(), space, |i, j| sq.reduce(&l.bracket(&reps[i], &reps[j])));
    let projection = sq.reduce_matrix();
    Ok(Quotient { algebra, projection, section: sq })
}

/// `L/[L, L]`.
pub fn abelianization(l: &LieSuperAlgebra) -> Quotient {
    let full = Subspace::full(l.field(), l.dim());
    let d = bracket_span(l, &full, &full);
    quotient_algebra(l, &d, &format!("{}^ab", l.name())).expect("derived algebra is a graded ideal")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;
    use crate::liesuper::{abelian, check_lie_axioms, ground_field, heisenberg, matrix_gl, solvable2};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn e(n: usize, i: usize) -> Vec<Scalar> {
        Q.unit_vector(n, i)
    }

    #[test]
    fn closures_in_heisenberg() {
        let h = heisenberg(Q);
        assert_eq!(ideal_closure(&h, vec![e(3, 2)]).dim(), 1);
        let s = ideal_closure(&h, vec![e(3, 0)]);
        assert_eq!(s, Subspace::span(Q, 3, vec![e(3, 0), e(3, 2)]));
        assert!(ideal_closure(&h, vec![]).is_zero());
        assert_eq!(subalgebra_closure(&h, vec![e(3, 0)]).dim(), 1);
        assert!(subalgebra_closure(&h, (0..3).map(|i| e(3, i)).collect()).is_full());
    }

    #[test]
    fn quotients() {
        let h = heisenberg(Q);
        let q = quotient_algebra(&h, &center(&h), "h/z").unwrap();
        assert_eq!(q.algebra.sdim(), (2, 0));
        assert!(q.algebra.is_abelian());
        assert_eq!(quotient_algebra(&h, &Subspace::full(Q, 3), "0").unwrap().algebra.dim(), 0);
        assert!(matches!(quotient_algebra(&h, &Subspace::span(Q, 3, vec![e(3, 0)]), "bad"), Err(Error::NotAnIdeal(_))));

        let gl = matrix_gl(1, 1, &ground_field(Q)).unwrap();
        let sp = gl.space();
        let ix = |s: &str| sp.index_of(s).unwrap();
        let mut diag = e(4, ix("E11"));
        diag[ix("E22")] = Q.one();
        let sl = Subspace::span(Q, 4, vec![e(4, ix("E12")), e(4, ix("E21")), diag]);
        let q = quotient_algebra(&gl, &sl, "gl/sl").unwrap();
        assert_eq!(q.algebra.sdim(), (1, 0));
        assert!(check_lie_axioms(&q.algebra).is_certified());
        assert_eq!(abelianization(&h).algebra.dim(), 2);
    }

    #[test]
    fn engel_degrees() {
        let h = heisenberg(Q);
        assert!(!is_engel(&h, 1));
        assert!(is_engel(&h, 2));
        assert!(is_engel(&abelian(Q, 1, 2), 1));
        assert!(!is_engel(&solvable2(Q), 4));
        // odd generator with [θ,θ] = z: ad(θ)² ≠ 0 but ad(x)³ = 0
        let space =
            SuperSpace::new(vec![("t", crate::superspace::Parity::Odd), ("z", crate::superspace::Parity::Even)])
                .unwrap();
        let l = LieSuperAlgebra::from_upper("t", Q, space, [(0, 0, e(2, 1))]);
        assert!(check_lie_axioms(&l).is_certified());
        assert!(!is_engel(&l, 1));
        assert!(is_engel(&l, 2));
    }

    #[test]
    fn subalgebra_rejects_ungraded() {
        let l = abelian(Q, 1, 1);
        let s = Subspace::span(Q, 2, vec![vec![Q.one(), Q.one()]]);
        assert!(subalgebra(&l, &s, "bad").is_err());
    }
}
