//! JSON input formats. Coefficients are always strings, unknown fields are
//! rejected, and labels must resolve against the declared bases.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use superlie::freelie::{GradedGenSet, Presentation, Word};
use superlie::{
    Action, AssocSuperAlgebra, CrossedModule, Error, FieldSpec, LieSuperAlgebra, Matrix, Parity, Result, Scalar,
    SuperSpace,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Lie,
    Assoc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityJson {
    Even,
    Odd,
}

impl From<ParityJson> for Parity {
    fn from(p: ParityJson) -> Self {
        match p {
            ParityJson::Even => Parity::Even,
            ParityJson::Odd => Parity::Odd,
        }
    }
}

impl From<Parity> for ParityJson {
    fn from(p: Parity) -> Self {
        if p.is_odd() {
            ParityJson::Odd
        } else {
            ParityJson::Even
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisEntry {
    pub label: String,
    pub parity: ParityJson,
}

/// `[label, coefficient]`.
pub type Term = (String, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    pub left: String,
    pub right: String,
    pub value: Vec<Term>,
}

/// A Lie superalgebra or an associative superalgebra given by structure
/// constants. Lie tables may list each unordered pair once; the missing
/// order is filled in by graded antisymmetry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub field: String,
    pub kind: Kind,
    pub basis: Vec<BasisEntry>,
    pub table: Vec<TableEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<Term>>,
}

impl AlgebraFile {
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionEntry {
    pub p: String,
    pub m: String,
    pub value: Vec<Term>,
}

/// An action of `actor` on `target`; paths are relative to this file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionFile {
    pub actor: String,
    pub target: String,
    pub entries: Vec<ActionEntry>,
}

/// A supermodule of the algebra named on the command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub basis: Vec<BasisEntry>,
    pub entries: Vec<ActionEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundaryEntry {
    pub m: String,
    pub value: Vec<Term>,
}

/// `∂: M → P` with an action of `P` on `M`; paths are relative to this file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossedFile {
    pub m: String,
    pub p: String,
    pub boundary: Vec<BoundaryEntry>,
    pub action: String,
}

/// A bracket word: a generator label or a pair `[u, v]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WordJson {
    Gen(String),
    Bracket(Box<WordJson>, Box<WordJson>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelatorTerm {
    pub coeff: String,
    pub word: WordJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub field: String,
    pub generators: Vec<BasisEntry>,
    pub relators: Vec<Vec<RelatorTerm>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nilpotent_class: Option<usize>,
}

/// A file that was read, with its SHA-256 digest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug)]
pub enum Algebra {
    Lie(LieSuperAlgebra),
    Assoc(AssocSuperAlgebra),
}

/// Reads files and remembers what was read.
#[derive(Default)]
pub struct Loader {
    pub digests: Vec<InputDigest>,
}

impl Loader {
    fn read<T: for<'de> Deserialize<'de>>(&mut self, path: &Path) -> Result<T> {
        let bytes = fs::read(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        let digest = hex::encode(Sha256::digest(&bytes));
        let entry = InputDigest { path: path.display().to_string(), sha256: digest };
        if !self.digests.contains(&entry) {
            self.digests.push(entry);
        }
        serde_json::from_slice(&bytes).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    pub fn algebra(&mut self, path: &Path) -> Result<Algebra> {
        let f: AlgebraFile = self.read(path)?;
        build_algebra(&f)
    }

    pub fn lie(&mut self, path: &Path) -> Result<LieSuperAlgebra> {
        match self.algebra(path)? {
            Algebra::Lie(l) => Ok(l),
            Algebra::Assoc(_) => Err(Error::Input(format!("{}: expected a Lie superalgebra", path.display()))),
        }
    }

    pub fn assoc(&mut self, path: &Path) -> Result<AssocSuperAlgebra> {
        match self.algebra(path)? {
            Algebra::Assoc(a) => Ok(a),
            Algebra::Lie(_) => Err(Error::Input(format!("{}: expected an associative superalgebra", path.display()))),
        }
    }

    pub fn action(&mut self, path: &Path) -> Result<Action> {
        let f: ActionFile = self.read(path)?;
        let actor = self.lie(&relative(path, &f.actor))?;
        let target = self.lie(&relative(path, &f.target))?;
        same_field(actor.field(), target.field())?;
        action_from_entries(&actor, &target, &f.entries)
    }

    /// A supermodule of `p`, as an action on an abelian algebra.
    pub fn module(&mut self, p: &LieSuperAlgebra, path: &Path) -> Result<Action> {
        let f: ModuleFile = self.read(path)?;
        let space = space_of(&f.basis)?;
        let target = LieSuperAlgebra::from_upper("M", p.field(), space, []);
        action_from_entries(p, &target, &f.entries)
    }

    pub fn crossed(&mut self, path: &Path) -> Result<CrossedModule> {
        let f: CrossedFile = self.read(path)?;
        let m = self.lie(&relative(path, &f.m))?;
        let p = self.lie(&relative(path, &f.p))?;
        same_field(m.field(), p.field())?;
        let action = self.action(&relative(path, &f.action))?;
        if action.actor() != &p || action.target() != &m {
            return Err(Error::Input("the action file must describe P acting on M".into()));
        }
        let mut cols = vec![p.field().zeros(p.dim()); m.dim()];
        for e in &f.boundary {
            let j = index(m.space(), &e.m)?;
            cols[j] = vector(p.field(), p.space(), &e.value)?;
        }
        CrossedModule::new(m, p.clone(), Matrix::from_columns(p.field(), p.dim(), &cols), action)
    }

    pub fn presentation(&mut self, path: &Path) -> Result<(FieldSpec, Presentation)> {
        let f: PresentationFile = self.read(path)?;
        let field: FieldSpec = f.field.parse()?;
        let gens = GradedGenSet::new(f.generators.iter().map(|b| (b.label.clone(), b.parity.into())).collect())?;
        let relators = f
            .relators
            .iter()
            .map(|r| r.iter().map(|t| Ok((field.parse(&t.coeff)?, word(&t.word)))).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok((field, Presentation::new(gens, relators, f.nilpotent_class)?))
    }
}

fn word(w: &WordJson) -> Word {
    match w {
        WordJson::Gen(g) => Word::gen(g.clone()),
        WordJson::Bracket(a, b) => Word::bracket(word(a), word(b)),
    }
}

fn relative(base: &Path, p: &str) -> PathBuf {
    base.parent().unwrap_or(Path::new(".")).join(p)
}

pub fn same_field(a: FieldSpec, b: FieldSpec) -> Result<()> {
    if a != b {
        return Err(Error::Input(format!("field mismatch: {a} vs {b}")));
    }
    Ok(())
}

fn space_of(basis: &[BasisEntry]) -> Result<SuperSpace> {
    if basis.iter().any(|b| b.label.is_empty()) {
        return Err(Error::Input("empty basis label".into()));
    }
    SuperSpace::new(basis.iter().map(|b| (b.label.clone(), Parity::from(b.parity))).collect())
}

fn index(space: &SuperSpace, label: &str) -> Result<usize> {
    space.index_of(label).ok_or_else(|| Error::Input(format!("unknown basis label {label:?}")))
}

fn vector(field: FieldSpec, space: &SuperSpace, terms: &[Term]) -> Result<Vec<Scalar>> {
    let mut v = field.zeros(space.dim());
    for (label, coeff) in terms {
        let k = index(space, label)?;
        v[k] += &field.parse(coeff)?;
    }
    Ok(v)
}

fn action_from_entries(actor: &LieSuperAlgebra, target: &LieSuperAlgebra, entries: &[ActionEntry]) -> Result<Action> {
    let field = actor.field();
    let (dp, dm) = (actor.dim(), target.dim());
    let mut table = vec![field.zeros(dm); dp * dm];
    for e in entries {
        let (i, j) = (index(actor.space(), &e.p)?, index(target.space(), &e.m)?);
        table[i * dm + j] = vector(field, target.space(), &e.value)?;
    }
    Ok(Action::from_fn(actor.clone(), target.clone(), |i, j| table[i * dm + j].clone()))
}

pub fn build_algebra(f: &AlgebraFile) -> Result<Algebra> {
    let field: FieldSpec = f.field.parse()?;
    let space = space_of(&f.basis)?;
    let n = space.dim();
    let mut table: Vec<Option<Vec<Scalar>>> = vec![None; n * n];
    for e in &f.table {
        let (i, j) = (index(&space, &e.left)?, index(&space, &e.right)?);
        if table[i * n + j].is_some() {
            return Err(Error::Input(format!("duplicate table entry ({}, {})", e.left, e.right)));
        }
        table[i * n + j] = Some(vector(field, &space, &e.value)?);
    }
    match f.kind {
        Kind::Lie => {
            if f.unit.is_some() {
                return Err(Error::Input("a Lie superalgebra has no unit".into()));
            }
            let full: Vec<Vec<Scalar>> = (0..n * n)
                .map(|k| {
                    let (i, j) = (k / n, k % n);
                    match (&table[k], &table[j * n + i]) {
                        (Some(v), _) => v.clone(),
                        (None, Some(w)) => {
                            let s = -superlie::superspace::sign(field, space.parity(i) * space.parity(j));
                            w.iter().map(|x| x.times(&s)).collect()
                        }
                        (None, None) => field.zeros(n),
                    }
                })
                .collect();
            Ok(Algebra::Lie(LieSuperAlgebra::from_fn(f.name.clone(), field, space, |i, j| full[i * n + j].clone())))
        }
        Kind::Assoc => {
            let unit = f.unit.as_ref().map(|u| vector(field, &space, u)).transpose()?;
            let full: Vec<Vec<Scalar>> = table.into_iter().map(|v| v.unwrap_or_else(|| field.zeros(n))).collect();
            Ok(Algebra::Assoc(AssocSuperAlgebra::from_fn(f.name.clone(), field, space, unit, |i, j| {
                full[i * n + j].clone()
            })))
        }
    }
}

fn terms(space: &SuperSpace, v: &[Scalar]) -> Vec<Term> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (space.label(k).to_string(), c.to_string()))
        .collect()
}

fn basis(space: &SuperSpace) -> Vec<BasisEntry> {
    (0..space.dim()).map(|i| BasisEntry { label: space.label(i).to_string(), parity: space.parity(i).into() }).collect()
}

/// Lists `[eᵢ, eⱼ]` for `i ≤ j` only; the parser restores the rest.
pub fn export_lie(l: &LieSuperAlgebra) -> AlgebraFile {
    let sp = l.space();
    let mut table = Vec::new();
    for i in 0..l.dim() {
        for j in i..l.dim() {
            let v = l.bracket_basis_dense(i, j);
            if v.iter().any(|c| !c.is_zero()) {
                table.push(TableEntry { left: sp.label(i).into(), right: sp.label(j).into(), value: terms(sp, &v) });
            }
        }
    }
    AlgebraFile {
        name: l.name().into(),
        field: l.field().to_string(),
        kind: Kind::Lie,
        basis: basis(sp),
        table,
        unit: None,
    }
}

pub fn export_assoc(a: &AssocSuperAlgebra) -> AlgebraFile {
    let sp = a.space();
    let mut table = Vec::new();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let v = a.product_basis_dense(i, j);
            if v.iter().any(|c| !c.is_zero()) {
                table.push(TableEntry { left: sp.label(i).into(), right: sp.label(j).into(), value: terms(sp, &v) });
            }
        }
    }
    AlgebraFile {
        name: a.name().into(),
        field: a.field().to_string(),
        kind: Kind::Assoc,
        basis: basis(sp),
        table,
        unit: a.unit().map(|u| terms(sp, u)),
    }
}
