//! Free Lie superalgebras truncated by degree, free nilpotent quotients,
//! relator evaluation and presentations.
//!
//! The degree-`k` component of the free Lie superalgebra on `X` is realized
//! inside `V^{⊗k}`, `V = span X`, as the span of left-normed supercommutators
//! `[..[[x₁,x₂],x₃]..,x_k]` of the tensor superalgebra. This embedding is
//! faithful in characteristic zero, so only ℚ is accepted.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{vector, EchelonAccumulator, FieldSpec, Matrix, Scalar, Subspace};
use crate::liesuper::LieSuperAlgebra;
use crate::superspace::{Parity, SuperSpace};

/// Largest number of generators accepted.
pub const MAX_GENERATORS: usize = 4;
/// Largest truncation degree accepted.
pub const MAX_DEGREE: usize = 5;

/// A `ℤ₂`-graded set of generators with unique labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedGenSet {
    generators: Vec<(String, Parity)>,
}

impl GradedGenSet {
    pub fn new<S: Into<String>>(generators: Vec<(S, Parity)>) -> Result<Self> {
        let generators: Vec<(String, Parity)> = generators.into_iter().map(|(s, p)| (s.into(), p)).collect();
        if generators.len() > MAX_GENERATORS {
            return Err(Error::Size(format!("at most {MAX_GENERATORS} generators, got {}", generators.len())));
        }
        for (i, (a, _)) in generators.iter().enumerate() {
            if a.is_empty() || generators[..i].iter().any(|(b, _)| a == b) {
                return Err(Error::Input(format!("generator label {a:?} is empty or repeated")));
            }
        }
        Ok(GradedGenSet { generators })
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.generators[i].0
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.generators[i].1
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.generators.iter().position(|(l, _)| l == label)
    }

    pub fn generators(&self) -> &[(String, Parity)] {
        &self.generators
    }
}

/// A formal bracket word in the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Word {
    Gen(String),
    Bracket(Box<Word>, Box<Word>),
}

impl Word {
    pub fn gen(label: impl Into<String>) -> Self {
        Word::Gen(label.into())
    }

    pub fn bracket(a: Word, b: Word) -> Self {
        Word::Bracket(Box::new(a), Box::new(b))
    }

    /// Number of generator occurrences.
    pub fn degree(&self) -> usize {
        match self {
            Word::Gen(_) => 1,
            Word::Bracket(a, b) => a.degree() + b.degree(),
        }
    }

    pub fn parity(&self, gens: &GradedGenSet) -> Result<Parity> {
        match self {
            Word::Gen(l) => {
                gens.index_of(l).map(|i| gens.parity(i)).ok_or_else(|| Error::Input(format!("unknown generator {l:?}")))
            }
            Word::Bracket(a, b) => Ok(a.parity(gens)? + b.parity(gens)?),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Gen(l) => f.write_str(l),
            Word::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// A linear combination of bracket words.
pub type Relator = Vec<(Scalar, Word)>;

/// Generators and relators, optionally inside the variety of nilpotent
/// algebras of a given class (relators then implicitly include `γ_{k+1}F`).
#[derive(Clone, Debug, PartialEq)]
pub struct Presentation {
    pub gens: GradedGenSet,
    pub relators: Vec<Relator>,
    pub nilpotent_class: Option<usize>,
}

impl Presentation {
    /// Checks that each relator is homogeneous in parity and degree.
    pub fn new(gens: GradedGenSet, relators: Vec<Relator>, nilpotent_class: Option<usize>) -> Result<Self> {
        for r in &relators {
            let mut shape = None;
            for (_, w) in r {
                let s = (w.parity(&gens)?, w.degree());
                if shape.is_some_and(|t| t != s) {
                    return Err(Error::Input("relator terms differ in parity or degree".into()));
                }
                shape = Some(s);
            }
        }
        if nilpotent_class == Some(0) {
            return Err(Error::Input("nilpotency class must be positive".into()));
        }
        Ok(Presentation { gens, relators, nilpotent_class })
    }
}

/// `F/γ_{d+1}F` for the free Lie superalgebra `F` on `gens`.
#[derive(Clone, Debug)]
pub struct FreeTruncation {
    gens: GradedGenSet,
    max_degree: usize,
    /// Per degree `k ≥ 1`: chosen left-normed commutators (label, vector in `V^{⊗k}`).
    components: Vec<Vec<(String, Vec<Scalar>)>>,
    /// Per degree: the component as a subspace of `V^{⊗k}`.
    spans: Vec<Subspace>,
    /// Per degree: offset of the component in the algebra basis.
    offsets: Vec<usize>,
    algebra: LieSuperAlgebra,
}

fn word_parity(gens: &GradedGenSet, mut idx: usize, k: usize) -> bool {
    let g = gens.len();
    let mut odd = false;
    for _ in 0..k {
        odd ^= gens.parity(idx % g).is_odd();
        idx /= g;
    }
    odd
}

/// `u v - (-1)^{|u||v|} v u` in the tensor superalgebra, `u ∈ V^{⊗a}`, `v ∈ V^{⊗b}`.
fn supercommutator(gens: &GradedGenSet, u: &[Scalar], a: usize, v: &[Scalar], b: usize) -> Vec<Scalar> {
    let field = FieldSpec::Rationals;
    let g = gens.len();
    let (na, nb) = (g.pow(a as u32), g.pow(b as u32));
    let mut out = field.zeros(na * nb);
    let homog =
        |w: &[Scalar], k: usize| vector::support(w).next().map(|(i, _)| word_parity(gens, i, k)).unwrap_or(false);
    let s = field.sign(!(homog(u, a) && homog(v, b)));
    for (i, x) in vector::support(u) {
        for (j, y) in vector::support(v) {
            let xy = x * y;
            out[i * nb + j] = &out[i * nb + j] + &xy;
            let k = j * na + i;
            out[k] = &out[k] + &(&s * &xy);
        }
    }
    out
}

impl FreeTruncation {
    pub fn gens(&self) -> &GradedGenSet {
        &self.gens
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// `F/γ_{d+1}F` with basis ordered by degree.
    pub fn algebra(&self) -> &LieSuperAlgebra {
        &self.algebra
    }

    /// Dimensions of the degree components `1..=d`.
    pub fn component_dims(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.len()).collect()
    }

    /// `(even|odd)` dimensions per degree.
    pub fn component_sdims(&self) -> Vec<(usize, usize)> {
        (1..=self.max_degree)
            .map(|k| {
                let odd = (0..self.components[k - 1].len())
                    .filter(|&i| self.algebra.parity(self.offsets[k - 1] + i).is_odd())
                    .count();
                (self.components[k - 1].len() - odd, odd)
            })
            .collect()
    }

    /// The degree-`k` component as a subspace of `V^{⊗k}`.
    pub fn component_span(&self, k: usize) -> &Subspace {
        &self.spans[k - 1]
    }

    /// Indices of the degree-`k` basis elements in the algebra.
    pub fn degree_range(&self, k: usize) -> std::ops::Range<usize> {
        self.offsets[k - 1]..self.offsets[k - 1] + self.components[k - 1].len()
    }

    /// `γ_k F / γ_{d+1} F` as a subspace of the algebra.
    pub fn lower_central(&self, k: usize) -> Subspace {
        let n = self.algebra.dim();
        let start = if k == 0 { 0 } else { self.offsets.get(k - 1).copied().unwrap_or(n) };
        Subspace::span(FieldSpec::Rationals, n, (start..n).map(|i| self.algebra.basis_vector(i)))
    }
}

/// The degree-`d` truncation of the free Lie superalgebra on `gens`.
pub fn free_truncated(field: FieldSpec, gens: &GradedGenSet, d: usize) -> Result<FreeTruncation> {
    if field != FieldSpec::Rationals {
        return Err(Error::FieldUnsupported(format!("free Lie superalgebras need characteristic 0, got {field}")));
    }
    if d == 0 || d > MAX_DEGREE {
        return Err(Error::DegreeOverflow { degree: d, limit: MAX_DEGREE });
    }
    let g = gens.len();
    let mut components: Vec<Vec<(String, Vec<Scalar>)>> = Vec::with_capacity(d);
    let mut spans = Vec::with_capacity(d);
    components.push((0..g).map(|i| (gens.label(i).to_string(), field.unit_vector(g, i))).collect());
    spans.push(Subspace::full(field, g));
    for k in 2..=d {
        let len = g.pow(k as u32);
        let mut acc = EchelonAccumulator::new(field, len);
        let mut chosen = Vec::new();
        for (label, u) in &components[k - 2] {
            for x in 0..g {
                let v = supercommutator(gens, u, k - 1, &field.unit_vector(g, x), 1);
                if acc.insert(v.clone()) {
                    chosen.push((format!("[{label},{}]", gens.label(x)), v));
                }
            }
        }
        components.push(chosen);
        spans.push(acc.finish());
    }
    let mut offsets = Vec::with_capacity(d);
    let mut basis: Vec<(String, Parity)> = Vec::new();
    let mut degree_of = Vec::new();
    for (k, comp) in components.iter().enumerate() {
        offsets.push(basis.len());
        for (label, v) in comp {
            let i = vector::support(v).next().expect("nonzero commutator").0;
            basis.push((label.clone(), Parity::from_bool(word_parity(gens, i, k + 1))));
            degree_of.push(k + 1);
        }
    }
    let space = SuperSpace::new(basis)?;
    let n = space.dim();
    let solvers: Vec<Matrix> = components
        .iter()
        .map(|c| {
            Matrix::from_columns(
                field,
                c.first().map_or(0, |x| x.1.len()),
                &c.iter().map(|x| x.1.clone()).collect::<Vec<_>>(),
            )
        })
        .collect();
    let name =
        format!("F({})/γ{}", gens.generators().iter().map(|(l, _)| l.as_str()).collect::<Vec<_>>().join(","), d + 1);
    let algebra = LieSuperAlgebra::from_fn(name, field, space, |i, j| {
        let (a, b) = (degree_of[i], degree_of[j]);
        let mut out = field.zeros(n);
        if a + b > d {
            return out;
        }
        let u = &components[a - 1][i - offsets[a - 1]].1;
        let v = &components[b - 1][j - offsets[b - 1]].1;
        let w = supercommutator(gens, u, a, v, b);
        if vector::is_zero(&w) {
            return out;
        }
        let coords = solvers[a + b - 1].solve(&w).expect("bracket lies in the next component");
        for (t, c) in coords.into_iter().enumerate() {
            out[offsets[a + b - 1] + t] = c;
        }
        out
    });
    Ok(FreeTruncation { gens: gens.clone(), max_degree: d, components, spans, offsets, algebra })
}

/// The free nilpotent Lie superalgebra `F/γ_{c+1}F` of class `c`.
pub fn free_nilpotent(field: FieldSpec, gens: &GradedGenSet, c: usize) -> Result<LieSuperAlgebra> {
    Ok(free_truncated(field, gens, c)?.algebra)
}

fn evaluate_word(f: &FreeTruncation, w: &Word) -> Result<Vec<Scalar>> {
    match w {
        Word::Gen(l) => {
            let i = f.gens.index_of(l).ok_or_else(|| Error::Input(format!("unknown generator {l:?}")))?;
            Ok(f.algebra.basis_vector(i))
        }
        Word::Bracket(a, b) => Ok(f.algebra.bracket(&evaluate_word(f, a)?, &evaluate_word(f, b)?)),
    }
}

/// Coordinates of a relator in `F/γ_{d+1}F`.
pub fn evaluate_relator(f: &FreeTruncation, relator: &[(Scalar, Word)]) -> Result<Vec<Scalar>> {
    let mut out = FieldSpec::Rationals.zeros(f.algebra.dim());
    for (c, w) in relator {
        if w.degree() > f.max_degree {
            return Err(Error::DegreeOverflow { degree: w.degree(), limit: f.max_degree });
        }
        vector::axpy(&mut out, c, &evaluate_word(f, w)?);
    }
    Ok(out)
}

/// `Ker(F_c ∧ F_c → F_c)` against the degree-`(c+1)` component of the free
/// algebra: injectivity of `x ∧ y ↦ [x, y]` on the free algebra, seen
/// through the truncation, where the kernel is what truncation destroys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MillerCheck {
    pub class: usize,
    pub kernel: (usize, usize),
    pub next_component: (usize, usize),
}

impl MillerCheck {
    pub fn holds(&self) -> bool {
        self.kernel == self.next_component
    }
}

pub fn miller_truncated_check(field: FieldSpec, gens: &GradedGenSet, c: usize) -> Result<MillerCheck> {
    let fc = free_nilpotent(field, gens, c)?;
    let kernel = crate::homology::h2_via_exterior(&fc)?.dim;
    let next = free_truncated(field, gens, c + 1)?;
    Ok(MillerCheck { class: c, kernel, next_component: next.component_sdims()[c] })
}

#[cfg(test)]
mod tests;
