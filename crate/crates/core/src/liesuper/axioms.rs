use std::fmt;

use super::{format_vector, LieSuperAlgebra};
use crate::exactla::{vector, Matrix, Scalar};
use crate::superspace::sign;

/// The identity a violation breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    Parity,
    Antisymmetry,
    Jacobi,
    EvenSquare,
    Associativity,
    Unit,
    /// `^{[p,p']}m = ^p(^{p'}m) - (-1)^{|p||p'|} ^{p'}(^p m)`
    ActionBracket,
    /// `^p[m,m'] = [^p m, m'] + (-1)^{|p||m|}[m, ^p m']`
    ActionDerivation,
    /// `^{(ⁿm)}n' = -(-1)^{|m||n|}[ᵐn, n']`
    CompatibilityN,
    /// `^{(ᵐn)}m' = -(-1)^{|m||n|}[ⁿm, m']`
    CompatibilityM,
    Homomorphism,
    /// `∂(ᵖm) = [p, ∂m]`
    Equivariance,
    /// `^{∂m}m' = [m, m']`
    Peiffer,
    KernelCentral,
    ImageIdeal,
    KernelModule,
    /// A map or bracket descends to a quotient.
    WellDefined,
    /// An ideal lies in the center.
    Central,
    Bijective,
    Surjective,
    Exactness,
    Perfect,
    /// A numerical inequality between invariants.
    Inequality,
    /// An action that must vanish on a submodule.
    TrivialAction,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::Parity => "parity",
            Law::Antisymmetry => "graded antisymmetry",
            Law::Jacobi => "graded Jacobi",
            Law::EvenSquare => "[x0,x0]=0",
            Law::Associativity => "associativity",
            Law::Unit => "unit law",
            Law::ActionBracket => "action axiom (i)",
            Law::ActionDerivation => "action axiom (ii)",
            Law::CompatibilityN => "compatibility (i)",
            Law::CompatibilityM => "compatibility (ii)",
            Law::Homomorphism => "homomorphism",
            Law::Equivariance => "equivariance",
            Law::Peiffer => "Peiffer identity",
            Law::KernelCentral => "kernel central",
            Law::ImageIdeal => "image is an ideal",
            Law::KernelModule => "kernel module structure",
            Law::WellDefined => "well-defined on the quotient",
            Law::Central => "central",
            Law::Bijective => "bijective",
            Law::Surjective => "surjective",
            Law::Exactness => "exactness",
            Law::Perfect => "perfect",
            Law::Inequality => "inequality",
            Law::TrivialAction => "trivial action",
        };
        f.write_str(s)
    }
}

/// A failed identity together with the basis elements that witness it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: Law,
    pub witness: Vec<String>,
    pub defect: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at ({}): defect {}", self.law, self.witness.join(", "), self.defect)
    }
}

/// Outcome of an axiom check: certified iff no violation was found.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificate {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl Certificate {
    /// Stored violations are capped; counting continues past the cap.
    pub const MAX_STORED: usize = 16;

    pub fn is_certified(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub(crate) fn record(&mut self, law: Law, witness: Vec<String>, defect: String) {
        if self.violations.len() < Self::MAX_STORED {
            self.violations.push(Violation { law, witness, defect });
        }
    }

    pub(crate) fn check(&mut self, ok: bool, law: Law, witness: impl FnOnce() -> (Vec<String>, String)) {
        self.checked += 1;
        if !ok {
            let (w, d) = witness();
            self.record(law, w, d);
        }
    }

    pub fn merge(&mut self, other: Certificate) {
        self.checked += other.checked;
        for v in other.violations {
            if self.violations.len() < Self::MAX_STORED {
                self.violations.push(v);
            }
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first() {
            None => write!(f, "certified ({} identities checked)", self.checked),
            Some(v) => write!(f, "violated: {v}"),
        }
    }
}

/// Parity consistency, graded antisymmetry, `[x₀,x₀] = 0` for general even
/// `x₀`, and graded Jacobi on all basis triples.
pub fn check_lie_axioms(l: &LieSuperAlgebra) -> Certificate {
    let mut cert = Certificate::default();
    let n = l.dim();
    let sp = l.space();
    let lab = |i: usize| sp.label(i).to_string();

    for i in 0..n {
        for j in 0..n {
            let pij = l.parity(i) + l.parity(j);
            let bad = l.bracket_basis(i, j).iter().find(|(k, _)| l.parity(*k) != pij).map(|(k, _)| *k);
            cert.check(bad.is_none(), Law::Parity, || {
                (vec![lab(i), lab(j)], format!("component on {}", lab(bad.unwrap())))
            });
        }
    }

    for i in 0..n {
        for j in i..n {
            let a = l.bracket_basis_dense(i, j);
            let b = l.bracket_basis_dense(j, i);
            let s = sign(l.field(), l.parity(i) * l.parity(j));
            let defect: Vec<Scalar> = a.iter().zip(&b).map(|(x, y)| x + &(&s * y)).collect();
            cert.check(vector::is_zero(&defect), Law::Antisymmetry, || {
                (vec![lab(i), lab(j)], format_vector(sp, &defect))
            });
        }
    }

    // [x,x] = Σ aᵢ²[eᵢ,eᵢ] + Σ_{i<j} aᵢaⱼ([eᵢ,eⱼ] + [eⱼ,eᵢ]) for even x
    let evens = sp.indices_of(crate::superspace::Parity::Even);
    for (a, &i) in evens.iter().enumerate() {
        for &j in &evens[a..] {
            let mut v = l.bracket_basis_dense(i, j);
            if i != j {
                v = vector::add(&v, &l.bracket_basis_dense(j, i));
            }
            cert.check(vector::is_zero(&v), Law::EvenSquare, || (vec![lab(i), lab(j)], format_vector(sp, &v)));
        }
    }

    // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]
    for x in 0..n {
        for y in 0..n {
            let xy = l.bracket_basis_dense(x, y);
            let s = sign(l.field(), l.parity(x) * l.parity(y));
            for z in 0..n {
                let yz = l.bracket_basis_dense(y, z);
                let xz = l.bracket_basis_dense(x, z);
                let lhs = l.bracket_left_basis(x, &yz);
                let r1 = l.bracket(&xy, &l.basis_vector(z));
                let r2 = l.bracket_left_basis(y, &xz);
                let mut d = vector::sub(&lhs, &r1);
                vector::axpy(&mut d, &-&s, &r2);
                cert.check(vector::is_zero(&d), Law::Jacobi, || (vec![lab(x), lab(y), lab(z)], format_vector(sp, &d)));
            }
        }
    }
    cert
}

/// Checks that `f` (`target × source`) is even and preserves brackets on basis pairs.
pub fn check_homomorphism(source: &LieSuperAlgebra, target: &LieSuperAlgebra, f: &Matrix) -> Certificate {
    let mut cert = Certificate::default();
    let sp = source.space();
    for j in 0..source.dim() {
        let col = f.column(j);
        let ok = target.space().parity_of(&col).is_some_and(|p| vector::is_zero(&col) || p == source.parity(j));
        cert.check(ok, Law::Parity, || (vec![sp.label(j).to_string()], format_vector(target.space(), &col)));
    }
    let images: Vec<Vec<Scalar>> = f.columns();
    for i in 0..source.dim() {
        for j in 0..source.dim() {
            let lhs = f.mul_vec(&source.bracket_basis_dense(i, j));
            let rhs = target.bracket(&images[i], &images[j]);
            let d = vector::sub(&lhs, &rhs);
            cert.check(vector::is_zero(&d), Law::Homomorphism, || {
                (vec![sp.label(i).to_string(), sp.label(j).to_string()], format_vector(target.space(), &d))
            });
        }
    }
    cert
}
