use super::structure::{subalgebra, subalgebra_closure};
use super::{AssocSuperAlgebra, LieSuperAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Scalar};
use crate::superspace::{Parity, SuperSpace};

/// Zero bracket on `(p|q)`.
pub fn abelian(field: FieldSpec, p: usize, q: usize) -> LieSuperAlgebra {
    LieSuperAlgebra::from_upper(format!("abelian({p}|{q})"), field, SuperSpace::standard(p, q), [])
}

/// `heis(1|0)`: basis `x, y, z` with `[x, y] = z`.
pub fn heisenberg(field: FieldSpec) -> LieSuperAlgebra {
    let space = SuperSpace::new(vec![("x", Parity::Even), ("y", Parity::Even), ("z", Parity::Even)]).unwrap();
    let z = field.unit_vector(3, 2);
    LieSuperAlgebra::from_upper("heis", field, space, [(0, 1, z)])
}

/// The two-dimensional non-abelian even algebra `[a, b] = b`.
pub fn solvable2(field: FieldSpec) -> LieSuperAlgebra {
    let space = SuperSpace::new(vec![("a", Parity::Even), ("b", Parity::Even)]).unwrap();
    LieSuperAlgebra::from_upper("solvable2", field, space, [(0, 1, field.unit_vector(2, 1))])
}

/// The field itself as a unital superalgebra of dimension `(1|0)`.
pub fn ground_field(field: FieldSpec) -> AssocSuperAlgebra {
    let space = SuperSpace::new(vec![("1", Parity::Even)]).unwrap();
    AssocSuperAlgebra::from_fn(field.to_string(), field, space, Some(vec![field.one()]), |_, _| vec![field.one()])
}

fn square_zero(field: FieldSpec, name: &str, label: &str, parity: Parity) -> AssocSuperAlgebra {
    let space = SuperSpace::new(vec![("1", Parity::Even), (label, parity)]).unwrap();
    AssocSuperAlgebra::from_fn(name, field, space, Some(field.unit_vector(2, 0)), |i, j| match (i, j) {
        (0, k) | (k, 0) => field.unit_vector(2, k),
        _ => field.zeros(2),
    })
}

/// `𝕂[ε]/(ε²)` with `ε` even.
pub fn dual_numbers(field: FieldSpec) -> AssocSuperAlgebra {
    square_zero(field, "dual", "ε", Parity::Even)
}

/// The Grassmann algebra `Λ(θ)` on one odd generator.
pub fn grassmann(field: FieldSpec) -> AssocSuperAlgebra {
    square_zero(field, "grassmann", "θ", Parity::Odd)
}

/// `M(m, n, A)`: `(m+n)×(m+n)` matrices over `A` with the ordinary matrix
/// product `E_{ij}(a)E_{kl}(b) = δ_{jk}E_{il}(ab)` and `|E_{ij}(a)| = |i|+|j|+|a|`.
///
/// Basis index of `E_{ij}(a_t)` is `(i·N + j)·dim A + t`; row and column
/// labels are 1-based.
pub fn matrix_assoc(m: usize, n: usize, a: &AssocSuperAlgebra) -> Result<AssocSuperAlgebra> {
    let size = m + n;
    if size == 0 {
        return Err(Error::Size("matrix size m+n must be positive".into()));
    }
    let unit = a.unit().ok_or_else(|| Error::NotUnital(format!("{} has no unit", a.name())))?.to_vec();
    let field = a.field();
    let da = a.dim();
    let row_parity = |i: usize| Parity::from_bool(i >= m);
    let mut basis = Vec::with_capacity(size * size * da);
    for i in 0..size {
        for j in 0..size {
            for t in 0..da {
                let label = if da == 1 {
                    format!("E{}{}", i + 1, j + 1)
                } else {
                    format!("E{}{}({})", i + 1, j + 1, a.space().label(t))
                };
                basis.push((label, row_parity(i) + row_parity(j) + a.space().parity(t)));
            }
        }
    }
    let space = SuperSpace::new(basis)?;
    let dim = space.dim();
    let index = |i: usize, j: usize, t: usize| (i * size + j) * da + t;
    let split = |x: usize| (x / da / size, (x / da) % size, x % da);
    let mut one = field.zeros(dim);
    for i in 0..size {
        for (t, c) in unit.iter().enumerate() {
            one[index(i, i, t)] = c.clone();
        }
    }
    let name = format!("M({m},{n},{})", a.name());
    Ok(AssocSuperAlgebra::from_fn(name, field, space, Some(one), |x, y| {
        let (i, j, s) = split(x);
        let (k, l, t) = split(y);
        let mut out = field.zeros(dim);
        if j == k {
            for (u, c) in a.product_basis(s, t) {
                out[index(i, l, *u)] = c.clone();
            }
        }
        out
    }))
}

/// `gl(m, n, A)`: the matrix superalgebra under the supercommutator.
pub fn matrix_gl(m: usize, n: usize, a: &AssocSuperAlgebra) -> Result<LieSuperAlgebra> {
    Ok(matrix_assoc(m, n, a)?.commutator_algebra().with_name(format!("gl({m},{n},{})", a.name())))
}

/// `sl(m, n, A)`: the subalgebra of `gl(m, n, A)` generated by the
/// off-diagonal `E_{ij}(a)`, realized on the echelon basis of the closure.
pub fn matrix_sl(m: usize, n: usize, a: &AssocSuperAlgebra) -> Result<LieSuperAlgebra> {
    if m + n < 3 {
        return Err(Error::Size(format!("sl(m,n,A) needs m+n >= 3, got {}", m + n)));
    }
    let gl = matrix_gl(m, n, a)?;
    let size = m + n;
    let da = a.dim();
    let gens: Vec<Vec<Scalar>> = (0..size)
        .flat_map(|i| (0..size).filter(move |&j| j != i).map(move |j| (i, j)))
        .flat_map(|(i, j)| (0..da).map(move |t| (i * size + j) * da + t))
        .map(|x| gl.basis_vector(x))
        .collect();
    let closure = subalgebra_closure(&gl, gens);
    let (sl, _) = subalgebra(&gl, &closure, &format!("sl({m},{n},{})", a.name()))?;
    Ok(sl)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liesuper::{check_assoc_axioms, check_lie_axioms, series};

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn gl_dimensions() {
        let k = ground_field(Q);
        assert_eq!(matrix_gl(1, 1, &k).unwrap().sdim(), (2, 2));
        let gl20 = matrix_gl(2, 0, &k).unwrap();
        assert_eq!(gl20.sdim(), (4, 0));
        assert_eq!(matrix_gl(1, 1, &grassmann(Q)).unwrap().sdim(), (4, 4));
    }

    #[test]
    fn gl_certified_and_matches_matrices() {
        let gl = matrix_gl(1, 1, &ground_field(Q)).unwrap();
        assert!(check_lie_axioms(&gl).is_certified());
        // [E12, E21] = E11 + E22 for two odd units
        let e12 = gl.space().index_of("E12").unwrap();
        let e21 = gl.space().index_of("E21").unwrap();
        let v = gl.bracket_basis_dense(e12, e21);
        let e11 = gl.space().index_of("E11").unwrap();
        let e22 = gl.space().index_of("E22").unwrap();
        assert!(v[e11].is_one() && v[e22].is_one());
    }

    #[test]
    fn tampered_gl_fails_jacobi() {
        let mut gl = matrix_gl(1, 1, &ground_field(Q)).unwrap();
        let v: Vec<Scalar> = gl.bracket_basis_dense(0, 1).iter().map(|x| -x).collect();
        gl.set_bracket_raw(0, 1, &v);
        assert!(!check_lie_axioms(&gl).is_certified());
    }

    #[test]
    fn sl_dimensions_and_perfect() {
        let k = ground_field(Q);
        let sl21 = matrix_sl(2, 1, &k).unwrap();
        assert_eq!(sl21.dim(), 8);
        assert!(check_lie_axioms(&sl21).is_certified());
        assert!(series(&sl21).is_perfect);
        let sl30 = matrix_sl(3, 0, &k).unwrap();
        assert_eq!(sl30.sdim(), (8, 0));
        assert!(matches!(matrix_sl(1, 1, &k), Err(Error::Size(_))));
    }

    #[test]
    fn assoc_examples_certified() {
        for a in [ground_field(Q), dual_numbers(Q), grassmann(Q), matrix_assoc(1, 1, &ground_field(Q)).unwrap()] {
            assert!(check_assoc_axioms(&a).is_certified(), "{}", a.name());
        }
        assert!(dual_numbers(Q).is_supercommutative());
        assert!(grassmann(Q).is_supercommutative());
        assert!(!matrix_assoc(1, 1, &ground_field(Q)).unwrap().is_supercommutative());
    }

    #[test]
    fn small_lie_algebras() {
        let h = heisenberg(Q);
        let s = series(&h);
        assert_eq!((s.nil_class, s.derived_length, s.center.dim()), (Some(2), Some(2), 1));
        let a = abelian(Q, 2, 1);
        let s = series(&a);
        assert_eq!(s.nil_class, Some(1));
        assert!(!s.is_perfect);
        assert!(check_lie_axioms(&solvable2(Q)).is_certified());
        assert_eq!(series(&solvable2(Q)).nil_class, None);
        assert_eq!(series(&solvable2(Q)).derived_length, Some(2));
    }
}
