//! Named batteries that check the main theorems on the bundled corpus and
//! report one line per theorem and example.

pub mod catalog;

use std::fmt;
use std::str::FromStr;

use crate::cyclic::cyclic_sixterm;
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Subspace};
use crate::freelie::{free_nilpotent, miller_truncated_check, GradedGenSet, Presentation};
use crate::homology::{
    d3_lemma_check, exterior_sixterm, exterior_sixterm_dims_match, h2_via_exterior, hopf_formula, nh_long_sequence,
    tensor_square_sequence, trivial_homology, Supermodule,
};
use crate::liesuper::{
    abelianization, bracket_span, center, check_crossed, heisenberg, is_ideal, solvable2, Action, CrossedModule,
    LieSuperAlgebra,
};
use crate::nat::{
    nilpotency_bounds_check, nonabelian_tensor, right_exactness_check, self_tensor, tensor_symmetry_iso,
    trivial_action_tensor, uce,
};
use crate::superspace::{Parity, SuperSpace};
use crate::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    TensorProps,
    NilBounds,
    Uce,
    D3Lemma,
    Hopf,
    Snake,
    CyclicSixterm,
    FinalSixterm,
    Miller,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::TensorProps,
        Suite::NilBounds,
        Suite::Uce,
        Suite::D3Lemma,
        Suite::Hopf,
        Suite::Snake,
        Suite::CyclicSixterm,
        Suite::FinalSixterm,
        Suite::Miller,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::TensorProps => "tensor-props",
            Suite::NilBounds => "nil-bounds",
            Suite::Uce => "uce",
            Suite::D3Lemma => "d3-lemma",
            Suite::Hopf => "hopf",
            Suite::Snake => "snake",
            Suite::CyclicSixterm => "cyclic-sixterm",
            Suite::FinalSixterm => "final-sixterm",
            Suite::Miller => "miller",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.id() == s).ok_or_else(|| Error::Input(format!("unknown suite {s:?}")))
    }
}

/// One theorem checked on one example.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub theorem: String,
    pub example: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }
}

struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    /// Records the outcome of `f`; an error counts as a failure.
    fn run(&mut self, theorem: &str, example: &str, f: impl FnOnce() -> Result<(bool, String)>) {
        let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
        self.checks.push(Check { theorem: theorem.into(), example: example.into(), passed, detail });
    }
}

pub fn run(suite: Suite, field: FieldSpec) -> SuiteReport {
    let mut r = Recorder { checks: Vec::new() };
    match suite {
        Suite::TensorProps => tensor_props(&mut r, field),
        Suite::NilBounds => nil_bounds(&mut r, field),
        Suite::Uce => uce_triangle(&mut r, field),
        Suite::D3Lemma => d3(&mut r, field),
        Suite::Hopf => hopf(&mut r, field),
        Suite::Snake => snakes(&mut r, field),
        Suite::CyclicSixterm => cyclic(&mut r, field),
        Suite::FinalSixterm => final_sixterm(&mut r, field),
        Suite::Miller => miller(&mut r, field),
    }
    SuiteReport { suite, checks: r.checks }
}

fn sdim(s: (usize, usize)) -> String {
    format!("({}|{})", s.0, s.1)
}

fn tensor_props(r: &mut Recorder, field: FieldSpec) {
    for l in catalog::lie_corpus(field) {
        let name = l.name().to_string();
        let t = match self_tensor(&l) {
            Ok(t) => t,
            Err(e) => {
                r.run("well-definedness", &name, || Err(e));
                continue;
            }
        };
        r.run("well-definedness", &name, || {
            let c = t.well_defined();
            Ok((c.is_certified(), format!("dim L⊗L = {}: {c}", sdim(t.algebra().sdim()))))
        });
        r.run("μ, ν crossed modules", &name, || {
            let (a, b) = (check_crossed(&t.crossed_mu()), check_crossed(&t.crossed_nu()));
            Ok((a.is_certified() && b.is_certified(), format!("μ: {a}; ν: {b}")))
        });
        r.run("symmetry", &name, || {
            let iso = tensor_symmetry_iso(&t)?;
            Ok((iso.certificate.is_certified(), iso.certificate.to_string()))
        });
        r.run("trivial actions give L^ab⊗L^ab", &name, || {
            let tr = nonabelian_tensor(&Action::trivial(l.clone(), l.clone()), &Action::trivial(l.clone(), l.clone()))?;
            let ab = abelianization(&l).algebra;
            let want = trivial_action_tensor(&ab, &ab).sdim();
            let got = tr.algebra().sdim();
            Ok((got == want && tr.algebra().is_abelian(), format!("{} vs {}", sdim(got), sdim(want))))
        });
    }
    for name in ["heis", "gl11"] {
        let l = catalog::lie(name, field).expect("catalog entry");
        let z = center(&l);
        let example = format!("{name} ⊇ center");
        r.run("mixed pair Z⊗L", &example, || {
            let cz = CrossedModule::from_ideal(&l, &z, "Z")?;
            let id = CrossedModule::identity(&l);
            let t = nonabelian_tensor(&cz.action_on(&id)?, &id.action_on(&cz)?)?;
            let w = t.well_defined();
            let (a, b) = (check_crossed(&t.crossed_mu()), check_crossed(&t.crossed_nu()));
            let ok = w.is_certified() && a.is_certified() && b.is_certified();
            Ok((ok, format!("dim Z⊗L = {}", sdim(t.algebra().sdim()))))
        });
        r.run("right exactness", &example, || {
            let re = right_exactness_check(&l, &z)?;
            Ok((re.is_certified(), format!("{} / {}", re.exactness, re.homomorphism)))
        });
    }
}

fn nil_bounds(r: &mut Recorder, field: FieldSpec) {
    for l in catalog::lie_corpus(field) {
        r.run("nilpotency, solvability, Engel bounds", l.name(), || {
            let rep = nilpotency_bounds_check(&self_tensor(&l)?)?;
            let fmt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
            let d = format!(
                "class {}/{}/{}, derived length {}/{}/{}, Engel {}",
                fmt(rep.image_mu.class),
                fmt(rep.tensor.class),
                fmt(rep.image_nu.class),
                fmt(rep.image_mu.derived_length),
                fmt(rep.tensor.derived_length),
                fmt(rep.image_nu.derived_length),
                fmt(rep.image_mu.engel),
            );
            Ok((rep.holds(), d))
        });
    }
}

fn uce_triangle(r: &mut Recorder, field: FieldSpec) {
    for name in ["sl21", "sl30"] {
        let l = catalog::lie(name, field).expect("catalog entry");
        r.run("UCE kernel = H₂ = Ker(P∧P→P)", name, || {
            let u = uce(&l)?;
            let a = u.kernel_sdim();
            let b = trivial_homology(&l, 2)?.dim;
            let c = h2_via_exterior(&l)?.dim;
            let ok = a == b && b == c && u.certificate.is_certified();
            Ok((ok, format!("{} / {} / {}", sdim(a), sdim(b), sdim(c))))
        });
    }
}

fn d3(r: &mut Recorder, field: FieldSpec) {
    for name in ["abelian21", "heis", "gl11", "sl21"] {
        let l = catalog::lie(name, field).expect("catalog entry");
        r.run("(Λ²P)/Im d₃ ≅ P∧P", name, || {
            let d = d3_lemma_check(&l)?;
            Ok((d.certificate.is_certified(), format!("dim {}: {}", sdim(d.left.sdim()), d.certificate)))
        });
    }
}

fn even_gens(labels: &[&str]) -> Result<GradedGenSet> {
    GradedGenSet::new(labels.iter().map(|&l| (l, Parity::Even)).collect())
}

fn hopf(r: &mut Recorder, field: FieldSpec) {
    r.run("Hopf formula = CE H₂", "heis = ⟨x,y | γ₃⟩", || {
        let pres = Presentation::new(even_gens(&["x", "y"])?, vec![], Some(2))?;
        let h = hopf_formula(field, &pres, 2)?.dim;
        let ce = trivial_homology(&heisenberg(field), 2)?.dim;
        Ok((h == ce, format!("{} vs {}", sdim(h), sdim(ce))))
    });
    for c in [2, 3] {
        r.run("Hopf formula = CE H₂", &format!("free nilpotent, 2 even generators, class {c}"), || {
            let gens = even_gens(&["x", "y"])?;
            let pres = Presentation::new(gens.clone(), vec![], Some(c))?;
            let h = hopf_formula(field, &pres, c)?.dim;
            let ce = trivial_homology(&free_nilpotent(field, &gens, c)?, 2)?.dim;
            Ok((h == ce, format!("{} vs {}", sdim(h), sdim(ce))))
        });
    }
}

/// `0 → span{b} → solvable2 → solvable2/span{b} → 0` as adjoint supermodules.
fn solvable2_modules(field: FieldSpec) -> Result<[CrossedModule; 3]> {
    let s = solvable2(field);
    let m = Supermodule::adjoint(&s);
    let l = Supermodule::from_matrices(
        &s,
        SuperSpace::standard(1, 0),
        &[Matrix::from_i64(field, &[&[1]]), Matrix::from_i64(field, &[&[0]])],
    )?;
    let n = Supermodule::trivial_on(&s, SuperSpace::standard(1, 0));
    let [l, m, n] = [l, m, n].map(|x| CrossedModule::from_module(x.action().clone()));
    Ok([l?, m?, n?])
}

fn snakes(r: &mut Recorder, field: FieldSpec) {
    r.run("six-term sequence", "solvable2: span{b} → ad → trivial", || {
        let [l, m, n] = solvable2_modules(field)?;
        let f = Matrix::from_i64(field, &[&[0], &[1]]);
        let g = Matrix::from_i64(field, &[&[1, 0]]);
        let (s, cert) = nh_long_sequence(&l, &m, &n, &f, &g)?;
        Ok((cert.is_exact(), format!("dims {:?}", s.sequence.dimensions())))
    });
    for name in ["heis", "gl11"] {
        let l = catalog::lie(name, field).expect("catalog entry");
        r.run("six-term sequence", &format!("{name}: Ker μ → {name}⊗{name} → [P,P]"), || {
            let (s, cert) = tensor_square_sequence(&l)?;
            Ok((cert.is_exact(), format!("dims {:?}", s.sequence.dimensions())))
        });
    }
}

fn cyclic(r: &mut Recorder, field: FieldSpec) {
    for (name, a) in catalog::assoc_corpus(field) {
        r.run("cyclic six-term theorem", name, || {
            let s = cyclic_sixterm(&a)?;
            let dims: Vec<String> = s.table.iter().map(|(_, d, _)| sdim(*d)).collect();
            let mut detail = format!("dims {}", dims.join(" → "));
            if a.is_supercommutative() {
                detail.push_str(&format!("; HC₁ {} = HC₁^M {}", sdim(s.hc1_kernel), sdim(s.milnor)));
            }
            let ok = s.is_certified() && (!a.is_supercommutative() || s.hc1_kernel == s.milnor);
            Ok((ok, detail))
        });
    }
}

fn final_sixterm(r: &mut Recorder, field: FieldSpec) {
    let pairs: [(&str, fn(&LieSuperAlgebra) -> Subspace); 2] = [
        ("heis", center),
        ("gl11", |l| {
            let full = Subspace::full(l.field(), l.dim());
            bracket_span(l, &full, &full)
        }),
    ];
    for (name, ideal) in pairs {
        let l = catalog::lie(name, field).expect("catalog entry");
        let m = ideal(&l);
        let label = if name == "heis" { "heis ⊇ center" } else { "gl11 ⊇ sl11" };
        r.run("exterior six-term theorem", label, || {
            if !is_ideal(&l, &m) {
                return Err(Error::NotAnIdeal(label.into()));
            }
            let (s, cert) = exterior_sixterm(&l, &m)?;
            let dims_ok = exterior_sixterm_dims_match(&l, &m, &s)?;
            Ok((cert.is_exact() && dims_ok, format!("dims {:?}", s.sequence.dimensions())))
        });
    }
}

fn miller(r: &mut Recorder, field: FieldSpec) {
    use Parity::{Even, Odd};
    let sets: [&[(&str, Parity)]; 5] = [
        &[("x", Even)],
        &[("t", Odd)],
        &[("x", Even), ("y", Even)],
        &[("x", Even), ("t", Odd)],
        &[("s", Odd), ("t", Odd)],
    ];
    for set in sets {
        let label = set.iter().map(|(l, p)| format!("{l}{}", if p.is_odd() { "₁" } else { "₀" })).collect::<Vec<_>>();
        for c in 1..=3 {
            r.run("Ker(F∧F→F) = next free component", &format!("{{{}}}, class {c}", label.join(",")), || {
                let gens = GradedGenSet::new(set.to_vec())?;
                let m = miller_truncated_check(field, &gens, c)?;
                Ok((m.holds(), format!("{} vs {}", sdim(m.kernel), sdim(m.next_component))))
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_ids_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.id().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn catalog_entries_certify() {
        use crate::liesuper::{check_assoc_axioms, check_lie_axioms};
        for l in catalog::lie_corpus(FieldSpec::Rationals) {
            assert!(check_lie_axioms(&l).is_certified(), "{}", l.name());
        }
        for (n, a) in catalog::assoc_corpus(FieldSpec::Rationals) {
            assert!(check_assoc_axioms(&a).is_certified(), "{n}");
        }
    }

    #[test]
    fn quick_suites_pass() {
        for s in [Suite::D3Lemma, Suite::Snake, Suite::FinalSixterm, Suite::Hopf] {
            let rep = run(s, FieldSpec::Rationals);
            assert!(rep.passed(), "{s}: {:?}", rep.checks.iter().find(|c| !c.passed));
        }
    }
}
