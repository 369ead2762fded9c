//! Oracles and generators shared by the integration tests. Everything here
//! works from raw structure constants and does not call the checkers under
//! test.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use superlie::liesuper::{abelian, ground_field, matrix_gl, subalgebra, subalgebra_closure};
use superlie::{Action, AssocSuperAlgebra, FieldSpec, LieSuperAlgebra, Matrix, Parity, Scalar, Subspace};

pub const Q: FieldSpec = FieldSpec::Rationals;

fn sign(odd: bool) -> Scalar {
    Q.sign(odd)
}

fn homogeneous_of(v: &[Scalar], parities: &[Parity], want: bool) -> bool {
    v.iter().zip(parities).all(|(c, p)| c.is_zero() || p.is_odd() == want)
}

fn add_scaled(out: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    for (o, x) in out.iter_mut().zip(v) {
        if !x.is_zero() {
            *o += &(c * x);
        }
    }
}

/// `[x, y]` by bilinear expansion of the basis table.
fn bracket(l: &LieSuperAlgebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut out = Q.zeros(l.dim());
    for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            add_scaled(&mut out, &(a * b), &l.bracket_basis_dense(i, j));
        }
    }
    out
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    Q.unit_vector(n, i)
}

fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Parity, graded antisymmetry and graded Jacobi on basis elements.
pub fn lie_oracle(l: &LieSuperAlgebra) -> bool {
    let n = l.dim();
    let ps: Vec<Parity> = (0..n).map(|i| l.parity(i)).collect();
    let odd = |i: usize| ps[i].is_odd();
    for i in 0..n {
        for j in 0..n {
            let b = l.bracket_basis_dense(i, j);
            if !homogeneous_of(&b, &ps, odd(i) ^ odd(j)) {
                return false;
            }
            let mut s = l.bracket_basis_dense(j, i);
            let c = sign(odd(i) && odd(j));
            s.iter_mut().for_each(|x| *x = &*x * &c);
            if b.iter().zip(&s).any(|(x, y)| !(x + y).is_zero()) {
                return false;
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
                let mut sum = Q.zeros(n);
                add_scaled(&mut sum, &sign(odd(i) && odd(k)), &bracket(l, &x, &bracket(l, &y, &z)));
                add_scaled(&mut sum, &sign(odd(j) && odd(i)), &bracket(l, &y, &bracket(l, &z, &x)));
                add_scaled(&mut sum, &sign(odd(k) && odd(j)), &bracket(l, &z, &bracket(l, &x, &y)));
                if !is_zero(&sum) {
                    return false;
                }
            }
        }
    }
    true
}

fn product(a: &AssocSuperAlgebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut out = Q.zeros(a.dim());
    for (i, s) in x.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
        for (j, t) in y.iter().enumerate().filter(|(_, t)| !t.is_zero()) {
            add_scaled(&mut out, &(s * t), &a.product_basis_dense(i, j));
        }
    }
    out
}

/// Parity, associativity and, if a unit is declared, the unit laws.
pub fn assoc_oracle(a: &AssocSuperAlgebra) -> bool {
    let n = a.dim();
    let ps = a.space().parities().to_vec();
    for i in 0..n {
        for j in 0..n {
            if !homogeneous_of(&a.product_basis_dense(i, j), &ps, ps[i].is_odd() ^ ps[j].is_odd()) {
                return false;
            }
            for k in 0..n {
                let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
                if product(a, &product(a, &x, &y), &z) != product(a, &x, &product(a, &y, &z)) {
                    return false;
                }
            }
        }
    }
    if let Some(u) = a.unit() {
        for i in 0..n {
            let x = unit(n, i);
            if product(a, u, &x) != x || product(a, &x, u) != x {
                return false;
            }
        }
    }
    true
}

fn act(a: &Action, p: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
    let dm = a.target().dim();
    let mut out = Q.zeros(dm);
    for (i, s) in p.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
        for (j, t) in m.iter().enumerate().filter(|(_, t)| !t.is_zero()) {
            add_scaled(&mut out, &(s * t), &a.act_basis_dense(i, j));
        }
    }
    out
}

/// Parity and the two action identities on basis elements.
pub fn action_oracle(a: &Action) -> bool {
    let (p, m) = (a.actor(), a.target());
    let (dp, dm) = (p.dim(), m.dim());
    let mps = m.space().parities().to_vec();
    for i in 0..dp {
        for j in 0..dm {
            if !homogeneous_of(&a.act_basis_dense(i, j), &mps, p.parity(i).is_odd() ^ m.parity(j).is_odd()) {
                return false;
            }
        }
    }
    for i in 0..dp {
        for k in 0..dp {
            let (x, y) = (unit(dp, i), unit(dp, k));
            let s = sign(p.parity(i).is_odd() && p.parity(k).is_odd());
            for j in 0..dm {
                let v = unit(dm, j);
                let lhs = act(a, &bracket(p, &x, &y), &v);
                let mut rhs = act(a, &x, &act(a, &y, &v));
                add_scaled(&mut rhs, &-s.clone(), &act(a, &y, &act(a, &x, &v)));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    for i in 0..dp {
        let x = unit(dp, i);
        for j in 0..dm {
            for k in 0..dm {
                let (u, v) = (unit(dm, j), unit(dm, k));
                let lhs = act(a, &x, &bracket(m, &u, &v));
                let mut rhs = bracket(m, &act(a, &x, &u), &v);
                add_scaled(
                    &mut rhs,
                    &sign(p.parity(i).is_odd() && m.parity(j).is_odd()),
                    &bracket(m, &u, &act(a, &x, &v)),
                );
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

fn small<R: Rng>(rng: &mut R) -> Scalar {
    let v = *[-2i64, -1, 1, 2].choose(rng).unwrap();
    Q.int(v)
}

/// A sparse homogeneous element of `l`.
fn random_element<R: Rng>(rng: &mut R, l: &LieSuperAlgebra) -> Vec<Scalar> {
    let odd = rng.gen_bool(0.5);
    let mut idx: Vec<usize> = (0..l.dim()).filter(|&i| l.parity(i).is_odd() == odd).collect();
    if idx.is_empty() {
        idx = (0..l.dim()).collect();
    }
    let mut v = Q.zeros(l.dim());
    for _ in 0..rng.gen_range(1..=2) {
        let i = *idx.choose(rng).unwrap();
        v[i] = small(rng);
    }
    v
}

/// A random Lie superalgebra of dimension `1..=max_dim`: either abelian or
/// the subalgebra of `gl(m|n)` generated by a few sparse homogeneous
/// matrices.
pub fn random_lie<R: Rng>(rng: &mut R, max_dim: usize) -> LieSuperAlgebra {
    let k = ground_field(Q);
    loop {
        if rng.gen_bool(0.15) {
            let p = rng.gen_range(0..=max_dim.min(3));
            let q = rng.gen_range(0..=(max_dim - p).min(2));
            if p + q > 0 {
                return abelian(Q, p, q);
            }
            continue;
        }
        let (m, n) = *[(1, 1), (2, 1), (1, 2), (2, 0)].choose(rng).unwrap();
        let gl = matrix_gl(m, n, &k).expect("gl(m|n)");
        let gens: Vec<Vec<Scalar>> = (0..rng.gen_range(2..=3)).map(|_| random_element(rng, &gl)).collect();
        let s = subalgebra_closure(&gl, gens);
        if s.dim() == 0 || s.dim() > max_dim {
            continue;
        }
        let (l, _) = subalgebra(&gl, &s, &format!("rand⊂gl({m}|{n})")).expect("closed subspace");
        // abelian closures are common and already covered by the branch above
        if l.is_abelian() && rng.gen_bool(0.9) {
            continue;
        }
        return l;
    }
}

/// Adds a random nonzero multiple of one basis vector to one table entry.
pub fn corrupt_entry<R: Rng>(rng: &mut R, v: &mut [Scalar]) {
    let k = rng.gen_range(0..v.len());
    v[k] = &v[k] + &small(rng);
}

/// `(a₀|a₁) ⊗ (b₀|b₁)` as super dimensions.
pub fn tensor_sdim(a: (usize, usize), b: (usize, usize)) -> (usize, usize) {
    (a.0 * b.0 + a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

/// `(dim - dim [L,L])` per parity, from the rank of all basis brackets.
pub fn abelianization_sdim(l: &LieSuperAlgebra) -> (usize, usize) {
    let n = l.dim();
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let b = l.bracket_basis_dense(i, j);
            if !is_zero(&b) {
                if l.parity(i).is_odd() ^ l.parity(j).is_odd() {
                    odd.push(b);
                } else {
                    even.push(b);
                }
            }
        }
    }
    let rank = |rows: Vec<Vec<Scalar>>| if rows.is_empty() { 0 } else { Matrix::from_rows(Q, n, rows).rank() };
    let (p, q) = l.sdim();
    (p - rank(even), q - rank(odd))
}

/// Free magma on graded generators, words grouped by degree.
pub struct Magma {
    parities: Vec<bool>,
    /// `words[k]`: words of degree `k`, a generator or the (degree, index)
    /// of their two factors.
    words: Vec<Vec<Word>>,
    odd: Vec<Vec<bool>>,
}

#[derive(Clone, Copy)]
enum Word {
    Gen(usize),
    Pair((usize, usize), (usize, usize)),
}

impl Magma {
    pub fn new(parities: &[bool], max_degree: usize) -> Self {
        let mut words = vec![Vec::new(), (0..parities.len()).map(Word::Gen).collect::<Vec<_>>()];
        let mut odd = vec![Vec::new(), parities.to_vec()];
        for k in 2..=max_degree {
            let mut w = Vec::new();
            let mut o = Vec::new();
            for a in 1..k {
                let b = k - a;
                for i in 0..words[a].len() {
                    for j in 0..words[b].len() {
                        w.push(Word::Pair((a, i), (b, j)));
                        o.push(odd[a][i] ^ odd[b][j]);
                    }
                }
            }
            words.push(w);
            odd.push(o);
        }
        Magma { parities: parities.to_vec(), words, odd }
    }

    fn count(&self, k: usize) -> usize {
        self.words[k].len()
    }

    /// Index of the word `u·v` with `u` of degree `a`, `v` of degree `b`.
    fn index(&self, a: usize, i: usize, b: usize, j: usize) -> usize {
        let k = a + b;
        let mut offset = 0;
        for a2 in 1..a {
            offset += self.count(a2) * self.count(k - a2);
        }
        offset + i * self.count(b) + j
    }

    /// `x·y` for `x` in degree `a`, `y` in degree `b`.
    fn mul(&self, a: usize, x: &[Scalar], b: usize, y: &[Scalar]) -> Vec<Scalar> {
        let mut out = Q.zeros(self.count(a + b));
        for (i, s) in x.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
            for (j, t) in y.iter().enumerate().filter(|(_, t)| !t.is_zero()) {
                out[self.index(a, i, b, j)] += &(s * t);
            }
        }
        out
    }

    fn word(&self, k: usize, i: usize) -> Vec<Scalar> {
        Q.unit_vector(self.count(k), i)
    }

    /// `(even|odd)` dimension of the degree-`k` component of the free Lie
    /// superalgebra, for `k = 1..=max_degree`: the free magma algebra modulo
    /// the graded ideal generated by graded antisymmetry and graded Jacobi.
    pub fn lie_quotient_sdims(&self) -> Vec<(usize, usize)> {
        let d = self.words.len() - 1;
        let mut ideals: Vec<Subspace> = vec![Subspace::zero(Q, 0), Subspace::zero(Q, self.count(1))];
        let mut out =
            vec![(self.parities.iter().filter(|&&o| !o).count(), self.parities.iter().filter(|&&o| o).count())];
        for k in 2..=d {
            let mut rels: Vec<Vec<Scalar>> = Vec::new();
            for a in 1..k {
                let b = k - a;
                for i in 0..self.count(a) {
                    for j in 0..self.count(b) {
                        let (u, v) = (self.word(a, i), self.word(b, j));
                        let mut r = self.mul(a, &u, b, &v);
                        let s = sign(self.odd[a][i] && self.odd[b][j]);
                        add_scaled(&mut r, &s, &self.mul(b, &v, a, &u));
                        rels.push(r);
                    }
                }
                // multiples of lower-degree relations
                for g in ideals[a].basis() {
                    for j in 0..self.count(b) {
                        let w = self.word(b, j);
                        rels.push(self.mul(a, g, b, &w));
                        rels.push(self.mul(b, &w, a, g));
                    }
                }
            }
            for a in 1..k {
                for b in 1..k - a {
                    let c = k - a - b;
                    for i in 0..self.count(a) {
                        for j in 0..self.count(b) {
                            for l in 0..self.count(c) {
                                let (x, y, z) = (self.word(a, i), self.word(b, j), self.word(c, l));
                                let (ox, oy, oz) = (self.odd[a][i], self.odd[b][j], self.odd[c][l]);
                                let mut r = Q.zeros(self.count(k));
                                let yz = self.mul(b, &y, c, &z);
                                add_scaled(&mut r, &sign(ox && oz), &self.mul(a, &x, b + c, &yz));
                                let zx = self.mul(c, &z, a, &x);
                                add_scaled(&mut r, &sign(oy && ox), &self.mul(b, &y, a + c, &zx));
                                let xy = self.mul(a, &x, b, &y);
                                add_scaled(&mut r, &sign(oz && oy), &self.mul(c, &z, a + b, &xy));
                                rels.push(r);
                            }
                        }
                    }
                }
            }
            let ideal = Subspace::span(Q, self.count(k), rels);
            let mut dims = (0, 0);
            for parity in [false, true] {
                let total = self.odd[k].iter().filter(|&&o| o == parity).count();
                let inside = ideal.basis().iter().filter(|v| {
                    let i = v.iter().position(|c| !c.is_zero()).unwrap();
                    self.odd[k][i] == parity
                });
                let quotient = total - inside.count();
                if parity {
                    dims.1 = quotient;
                } else {
                    dims.0 = quotient;
                }
            }
            out.push(dims);
            ideals.push(ideal);
        }
        out
    }
}
