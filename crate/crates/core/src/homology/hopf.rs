use super::ce::HomologyResult;
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Subquotient, Subspace};
use crate::freelie::{evaluate_relator, free_truncated, Presentation};
use crate::liesuper::{bracket_span, ideal_closure};

/// `H₂(P) ≅ (R ∩ [F,F])/[F,R]` for `P = F/R` of class at most `c`.
///
/// Everything is computed in `F/γ_{c+2}F`. This is faithful because class
/// `≤ c` means `γ_{c+1}F ⊆ R`, hence `γ_{c+2}F ⊆ [F,R] ⊆ R ∩ [F,F]`, so
/// both numerator and denominator contain the truncated part. Relators are
/// homogeneous in degree, so `R` is graded and `γ_{c+1}F ⊆ R` can be read off
/// from degree `c+1` of the truncation; failure raises `ClassExceeded`.
pub fn hopf_formula(field: FieldSpec, pres: &Presentation, c: usize) -> Result<HomologyResult> {
    if c == 0 {
        return Err(Error::Input("class bound must be positive".into()));
    }
    let f = free_truncated(field, &pres.gens, c + 1)?;
    let fa = f.algebra();
    let n = fa.dim();
    let mut gens = Vec::new();
    for r in &pres.relators {
        if r.iter().any(|(_, w)| w.degree() > c + 1) {
            // relators beyond degree c+1 lie in γ_{c+2}F, which is zero here
            continue;
        }
        gens.push(evaluate_relator(&f, r)?);
    }
    if let Some(k) = pres.nilpotent_class {
        gens.extend(f.lower_central(k + 1).basis().iter().cloned());
    }
    let r = ideal_closure(fa, gens);
    if !r.contains_subspace(&f.lower_central(c + 1)) {
        return Err(Error::ClassExceeded { bound: c });
    }
    let full = Subspace::full(field, n);
    let ff = bracket_span(fa, &full, &full);
    let fr = bracket_span(fa, &full, &r);
    let q = Subquotient::new(r.intersect(&ff)?, fr)?;
    Ok(HomologyResult::from_subquotient(2, fa.space(), &q))
}
