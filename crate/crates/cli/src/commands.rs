//! One function per subcommand. Each returns a summary line and result
//! sections; errors are turned into reports by the caller.

use std::fs;
use std::path::{Path, PathBuf};

use superlie::cyclic::{corollary_check, cyclic_sixterm, hc, hc1_kernel_model, milnor_hc1, tensor_subquotient_sdim};
use superlie::homology::{ce_complex, hopf_formula, nh, trivial_homology, Supermodule};
use superlie::liesuper::{check_assoc_axioms, check_lie_axioms, series};
use superlie::nat::{nonabelian_tensor, self_exterior, uce};
use superlie::verify::{self, catalog, Suite};
use superlie::{Action, CrossedModule, Error, FieldSpec, LieSuperAlgebra, Result};

use crate::files::{build_algebra, export_assoc, export_lie, same_field, Algebra, AlgebraFile, Loader};
use crate::report::{sdim, Section};

pub type Outcome = Result<(String, Vec<Section>)>;

pub fn check(loader: &mut Loader, path: &Path) -> Outcome {
    let mut s = Section::new("axioms");
    let summary = match loader.algebra(path)? {
        Algebra::Lie(l) => {
            let cert = check_lie_axioms(&l);
            s.dim("dimension", l.sdim()).certificate("Lie superalgebra axioms", &cert);
            if !cert.is_certified() {
                format!("not a Lie superalgebra: {}", cert.first().expect("a violation"))
            } else {
                let class = match series(&l).nil_class {
                    Some(c) => format!("class {c}"),
                    None => "not nilpotent".into(),
                };
                s.value("nilpotency", &class);
                format!("certified, dim {}, {class}", sdim(l.sdim()))
            }
        }
        Algebra::Assoc(a) => {
            let cert = check_assoc_axioms(&a);
            s.dim("dimension", a.space().sdim()).certificate("associative superalgebra axioms", &cert);
            if !cert.is_certified() {
                format!("not associative: {}", cert.first().expect("a violation"))
            } else {
                let mut flags = vec!["associative"];
                flags.push(if a.unit().is_some() { "unital" } else { "non-unital" });
                if a.is_supercommutative() {
                    flags.push("supercommutative");
                }
                flags.join(", ")
            }
        }
    };
    Ok((summary, vec![s]))
}

pub struct TensorArgs {
    pub m: PathBuf,
    pub n: Option<PathBuf>,
    pub act_mn: Option<PathBuf>,
    pub act_nm: Option<PathBuf>,
    pub exterior: bool,
    pub uce: bool,
    pub emit: Option<PathBuf>,
}

pub fn tensor(loader: &mut Loader, a: &TensorArgs) -> Outcome {
    let m = loader.lie(&a.m)?;
    let (act_mn, act_nm) = match &a.n {
        None => {
            if a.act_mn.is_some() || a.act_nm.is_some() {
                return Err(Error::Input("actions on the tensor square are the adjoint ones".into()));
            }
            (Action::adjoint(&m), Action::adjoint(&m))
        }
        Some(np) => {
            let n = loader.lie(np)?;
            same_field(m.field(), n.field())?;
            if a.exterior || a.uce {
                return Err(Error::Input("--exterior and --uce apply to the tensor square only".into()));
            }
            match (&a.act_mn, &a.act_nm) {
                (None, None) => (Action::trivial(m.clone(), n.clone()), Action::trivial(n.clone(), m.clone())),
                (Some(x), Some(y)) => {
                    let (x, y) = (loader.action(x)?, loader.action(y)?);
                    if x.actor() != &m || x.target() != &n || y.actor() != &n || y.target() != &m {
                        return Err(Error::Input("--act-mn must be M acting on N and --act-nm N acting on M".into()));
                    }
                    (x, y)
                }
                _ => return Err(Error::Input("give both --act-mn and --act-nm, or neither".into())),
            }
        }
    };
    let t = nonabelian_tensor(&act_mn, &act_nm)?;
    let (mm, nn) = (t.m(), t.n());
    let tsp = t.algebra().space();
    let mut s = Section::new(format!("{} ⊗ {}", mm.name(), nn.name()));
    s.dim("M⊗N", t.algebra().sdim())
        .dim("[M,N]^M = Im μ", mm.space().sdim_of(&t.image_mu()))
        .dim("[M,N]^N = Im ν", nn.space().sdim_of(&t.image_nu()))
        .dim("Ker μ", tsp.sdim_of(&t.mu().kernel_basis()))
        .dim("Ker ν", tsp.sdim_of(&t.nu().kernel_basis()))
        .certificate("well defined", t.well_defined());
    let mut sections = vec![s];
    if a.exterior {
        let e = self_exterior(&m)?;
        let mut s = Section::new(format!("{0} ∧ {0}", m.name()));
        s.dim("M□M", tsp.sdim_of(e.square_ideal())).dim("M∧M", e.algebra().sdim()).certificate("central", e.central());
        sections.push(s);
    }
    if a.uce {
        let u = uce(&m)?;
        let h2 = trivial_homology(&m, 2)?.dim;
        let mut s = Section::new("universal central extension");
        s.dim("total", u.total.sdim())
            .dim("kernel", u.kernel_sdim())
            .dim("H₂", h2)
            .certificate("central extension", &u.certificate)
            .check("kernel = H₂", u.kernel_sdim() == h2, format!("{} vs {}", sdim(u.kernel_sdim()), sdim(h2)));
        sections.push(s);
    }
    if let Some(path) = &a.emit {
        write_json(path, &export_lie(t.algebra()))?;
    }
    Ok((format!("dim M⊗N = {}", sdim(t.algebra().sdim())), sections))
}

pub struct HomologyArgs {
    pub p: PathBuf,
    pub n: usize,
    pub module: Option<String>,
    pub hopf: Option<PathBuf>,
    pub class: Option<usize>,
    pub nonabelian: Option<String>,
}

pub fn homology(loader: &mut Loader, a: &HomologyArgs) -> Outcome {
    let p = loader.lie(&a.p)?;
    let module = match a.module.as_deref() {
        None => Supermodule::trivial(&p),
        Some("adjoint") => Supermodule::adjoint(&p),
        Some(path) => Supermodule::new(loader.module(&p, Path::new(path))?)?,
    };
    let complex = ce_complex(&p, &module, a.n + 1)?;
    let mut s = Section::new(format!("H•({}, M)", p.name()));
    let mut dims = Vec::new();
    for n in 0..=a.n {
        let h = complex.homology(n)?;
        s.dim(format!("H{}", subscript(n)), h.dim);
        dims.push(format!("H{}={}", subscript(n), sdim(h.dim)));
    }
    let mut sections = vec![s];
    let mut summary = dims.join(", ");
    if let Some(path) = &a.hopf {
        let c = a.class.ok_or_else(|| Error::Input("--hopf needs --class".into()))?;
        let (field, pres) = loader.presentation(path)?;
        same_field(field, p.field())?;
        let via_hopf = hopf_formula(field, &pres, c)?.dim;
        let via_ce = trivial_homology(&p, 2)?.dim;
        let mut s = Section::new("H₂ two ways");
        s.dim("Hopf formula", via_hopf).dim("Chevalley–Eilenberg", via_ce).check(
            "paths agree",
            via_hopf == via_ce,
            format!("{} vs {}", sdim(via_hopf), sdim(via_ce)),
        );
        sections.push(s);
        summary = format!("{summary}; H₂ via Hopf = {}, via CE = {}", sdim(via_hopf), sdim(via_ce));
    } else if a.class.is_some() {
        return Err(Error::Input("--class needs --hopf".into()));
    }
    if let Some(which) = &a.nonabelian {
        let (s, line) = nonabelian(loader, &p, which)?;
        sections.push(s);
        summary = format!("{summary}; {line}");
    }
    Ok((summary, sections))
}

fn nonabelian(loader: &mut Loader, p: &LieSuperAlgebra, which: &str) -> Result<(Section, String)> {
    let cm = if which == "identity" { CrossedModule::identity(p) } else { loader.crossed(Path::new(which))? };
    if cm.p() != p {
        return Err(Error::Input("the crossed module must lie over the algebra given on the command line".into()));
    }
    let r = nh(&cm)?;
    let mut s = Section::new(format!("non-abelian homology of {} → {}", cm.m().name(), p.name()));
    s.dim("𝓗₀", r.nh0.dim).dim("𝓗₁", r.nh1.dim);
    if which == "identity" && series(p).is_perfect {
        let h2 = trivial_homology(p, 2)?.dim;
        s.dim("H₂", h2).check("𝓗₀ = 0", r.nh0.total() == 0, sdim(r.nh0.dim)).check(
            "𝓗₁ = H₂",
            r.nh1.dim == h2,
            format!("{} vs {}", sdim(r.nh1.dim), sdim(h2)),
        );
    }
    if cm.m().is_abelian() && cm.boundary().is_zero() {
        let module = Supermodule::new(cm.action().clone())?;
        let c = ce_complex(p, &module, 2)?;
        let (h0, h1) = (c.homology(0)?.dim, c.homology(1)?.dim);
        s.dim("H₀(P,M)", h0).dim("H₁(P,M)", h1).check(
            "𝓗ᵢ = Hᵢ",
            h0 == r.nh0.dim && h1 == r.nh1.dim,
            format!("{} {} vs {} {}", sdim(r.nh0.dim), sdim(r.nh1.dim), sdim(h0), sdim(h1)),
        );
    }
    let line = format!("𝓗₀={}, 𝓗₁={}", sdim(r.nh0.dim), sdim(r.nh1.dim));
    Ok((s, line))
}

/// `H₂` of a presented algebra by the Hopf formula alone.
pub fn hopf(loader: &mut Loader, path: &Path, class: usize) -> Outcome {
    let (field, pres) = loader.presentation(path)?;
    let h = hopf_formula(field, &pres, class)?;
    let mut s = Section::new("Hopf formula");
    s.value("class bound", class).dim("H₂", h.dim);
    Ok((format!("H₂ = {}", sdim(h.dim)), vec![s]))
}

pub fn cyclic(loader: &mut Loader, path: &Path, sixterm: bool) -> Outcome {
    let a = loader.assoc(path)?;
    let cert = check_assoc_axioms(&a);
    if !cert.is_certified() {
        return Err(Error::AxiomViolation(cert.first().expect("a violation").to_string()));
    }
    if a.unit().is_none() {
        return Err(Error::NotUnital(a.name().into()));
    }
    let (h0, h1) = (hc(&a, 0)?.dim, hc(&a, 1)?.dim);
    let kernel = tensor_subquotient_sdim(&a, &hc1_kernel_model(&a)?);
    let milnor = milnor_hc1(&a)?.sdim();
    let mut s = Section::new(format!("cyclic homology of {}", a.name()));
    s.dim("HC₀", h0).dim("HC₁", h1).dim("HC₁ (kernel model)", kernel).dim("HC₁^M", milnor).check(
        "Connes = kernel model",
        h1 == kernel,
        format!("{} vs {}", sdim(h1), sdim(kernel)),
    );
    if a.is_supercommutative() {
        s.check("supercommutative: HC₁ = HC₁^M", h1 == milnor, format!("{} vs {}", sdim(h1), sdim(milnor)));
    }
    let mut sections = vec![s];
    let mut summary = format!("HC₀={}, HC₁={}, HC₁^M={}", sdim(h0), sdim(h1), sdim(milnor));
    if sixterm {
        let six = cyclic_sixterm(&a)?;
        let mut s = Section::new("six-term sequence");
        for (label, got, want) in &six.table {
            s.dim(label.clone(), *got);
            s.check(format!("{label} identified"), got == want, format!("expected {}", sdim(*want)));
        }
        s.check("exact", six.exactness.is_exact(), &six.exactness)
            .certificate("V(A)", &six.v.certificate)
            .certificate("identifications", &six.lemma);
        sections.push(s);
        let mut s = Section::new("perfect case");
        match corollary_check(&a)? {
            None => {
                s.value("[A,A] = A", "no; nothing to check");
            }
            Some(c) => {
                s.check("exact", c.exactness.is_exact(), &c.exactness)
                    .check("𝓗₁(A,A) = H₂(A)", c.h2_matches, "")
                    .check("outer terms vanish", c.outer_terms_vanish, "");
            }
        }
        sections.push(s);
        summary =
            format!("{summary}; six-term sequence {}", if six.is_certified() { "certified" } else { "NOT certified" });
    }
    Ok((summary, sections))
}

pub fn verify(suites: &[Suite]) -> Outcome {
    let mut sections = Vec::new();
    let mut failed = 0;
    for &suite in suites {
        let r = verify::run(suite, FieldSpec::Rationals);
        let mut s = Section::new(suite.id());
        for c in &r.checks {
            s.check(format!("{} [{}]", c.theorem, c.example), c.passed, &c.detail);
        }
        if r.checks.is_empty() {
            s.check("suite ran", false, "no checks");
        }
        if !r.passed() {
            failed += 1;
        }
        sections.push(s);
    }
    let summary = if failed == 0 {
        format!("{} suite(s) passed", suites.len())
    } else {
        format!("{failed} of {} suite(s) failed", suites.len())
    };
    Ok((summary, sections))
}

/// Writes a catalog algebra as an algebra file.
pub fn export(name: &str, out: Option<&Path>) -> Outcome {
    let file = catalog_file(name)?;
    let mut s = Section::new("export");
    s.value("name", name).dim("dimension", dims_of(&file));
    match out {
        Some(path) => {
            write_json(path, &file)?;
            s.value("written", path.display());
        }
        None => println!("{}", to_json(&file)),
    }
    Ok((format!("exported {name}"), vec![s]))
}

pub fn catalog_names() -> impl Iterator<Item = &'static str> {
    catalog::LIE_NAMES.into_iter().chain(catalog::ASSOC_NAMES)
}

pub fn catalog_file(name: &str) -> Result<AlgebraFile> {
    let q = FieldSpec::Rationals;
    if catalog::LIE_NAMES.contains(&name) {
        Ok(export_lie(&catalog::lie(name, q)?))
    } else if catalog::ASSOC_NAMES.contains(&name) {
        Ok(export_assoc(&catalog::assoc(name, q)?).with_name(name))
    } else {
        Err(Error::Input(format!("unknown catalog entry {name:?}")))
    }
}

fn dims_of(f: &AlgebraFile) -> (usize, usize) {
    match build_algebra(f) {
        Ok(Algebra::Lie(l)) => l.sdim(),
        Ok(Algebra::Assoc(a)) => a.space().sdim(),
        Err(_) => (0, 0),
    }
}

pub fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn write_json<T: serde::Serialize>(path: &Path, v: &T) -> Result<()> {
    fs::write(path, to_json(v)).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn subscript(n: usize) -> String {
    n.to_string().chars().map(|c| char::from_u32(0x2080 + c.to_digit(10).unwrap()).unwrap()).collect()
}
