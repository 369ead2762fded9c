use std::collections::HashMap;

use super::{Parity, SuperSpace};
use crate::exactla::{FieldSpec, Scalar};

/// A canonical wedge monomial: indices weakly increasing, even indices never repeated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WedgeMonomial(pub Vec<usize>);

impl WedgeMonomial {
    pub fn factors(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Sorts `factors` with adjacent swaps, each contributing `-(-1)^{|u||v|}`.
///
/// Returns `None` when an even index repeats (the monomial vanishes),
/// otherwise `(negative, monomial)`.
pub fn wedge_normalize(parities: &[Parity], factors: &[usize]) -> Option<(bool, WedgeMonomial)> {
    let mut f = factors.to_vec();
    let mut negative = false;
    for i in 1..f.len() {
        let mut j = i;
        while j > 0 && f[j - 1] > f[j] {
            let (u, v) = (parities[f[j - 1]], parities[f[j]]);
            // u∧v = -(-1)^{|u||v|} v∧u: the swap is free only for two odd factors
            if !(u.is_odd() && v.is_odd()) {
                negative = !negative;
            }
            f.swap(j - 1, j);
            j -= 1;
        }
    }
    if f.windows(2).any(|w| w[0] == w[1] && parities[w[0]].is_even()) {
        return None;
    }
    Some((negative, WedgeMonomial(f)))
}

/// Whether `x_{perm(0)} ∧ … ∧ x_{perm(n-1)} = -x_0 ∧ … ∧ x_{n-1}`.
///
/// `parities[k]` is the parity of `x_k`.
pub fn koszul_sign_is_negative(perm: &[usize], parities: &[Parity]) -> bool {
    assert_eq!(perm.len(), parities.len(), "permutation and parity list differ in length");
    let mut negative = false;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] && !(parities[perm[i]].is_odd() && parities[perm[j]].is_odd()) {
                negative = !negative;
            }
        }
    }
    negative
}

/// [`koszul_sign_is_negative`] as a field element `±1`.
pub fn koszul_sign(field: FieldSpec, perm: &[usize], parities: &[Parity]) -> Scalar {
    field.sign(koszul_sign_is_negative(perm, parities))
}

/// `Λⁿ(V)` with its canonical monomial basis, in lexicographic order.
#[derive(Clone, Debug)]
pub struct ExteriorPower {
    degree: usize,
    space: SuperSpace,
    monomials: Vec<WedgeMonomial>,
    index: HashMap<WedgeMonomial, usize>,
}

impl ExteriorPower {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[WedgeMonomial] {
        &self.monomials
    }

    pub fn monomial(&self, i: usize) -> &WedgeMonomial {
        &self.monomials[i]
    }

    /// Index of a canonical monomial.
    pub fn index_of(&self, m: &WedgeMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

pub fn exterior_power(v: &SuperSpace, n: usize) -> ExteriorPower {
    let mut monomials = Vec::new();
    let mut current = Vec::with_capacity(n);
    enumerate(v.parities(), n, 0, &mut current, &mut monomials);
    let mut basis = Vec::with_capacity(monomials.len());
    let mut index = HashMap::with_capacity(monomials.len());
    for (k, m) in monomials.iter().enumerate() {
        let label = if m.is_empty() {
            "1".to_string()
        } else {
            m.0.iter().map(|&i| v.label(i)).collect::<Vec<_>>().join("∧")
        };
        basis.push((label, Parity::total(m.0.iter().map(|&i| v.parity(i)))));
        index.insert(m.clone(), k);
    }
    let space = SuperSpace::new(basis).expect("monomial labels are distinct");
    ExteriorPower { degree: n, space, monomials, index }
}

fn enumerate(parities: &[Parity], n: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<WedgeMonomial>) {
    if current.len() == n {
        out.push(WedgeMonomial(current.clone()));
        return;
    }
    for i in start..parities.len() {
        current.push(i);
        let next = if parities[i].is_odd() { i } else { i + 1 };
        enumerate(parities, n, next, current, out);
        current.pop();
    }
}
