use crate::error::{Error, Result};
use crate::exactla::FieldSpec;
use crate::liesuper::{
    abelian, dual_numbers, grassmann, ground_field, heisenberg, matrix_assoc, matrix_gl, matrix_sl, solvable2,
    AssocSuperAlgebra, LieSuperAlgebra,
};

/// Names of the bundled Lie superalgebras.
pub const LIE_NAMES: [&str; 9] =
    ["abelian10", "abelian01", "abelian11", "abelian21", "heis", "solvable2", "gl11", "sl21", "sl30"];

/// Names of the bundled associative superalgebras.
pub const ASSOC_NAMES: [&str; 4] = ["q", "dual", "grassmann", "m11"];

pub fn lie(name: &str, field: FieldSpec) -> Result<LieSuperAlgebra> {
    let k = ground_field(field);
    let l = match name {
        "abelian10" => abelian(field, 1, 0),
        "abelian01" => abelian(field, 0, 1),
        "abelian11" => abelian(field, 1, 1),
        "abelian21" => abelian(field, 2, 1),
        "heis" => heisenberg(field),
        "solvable2" => solvable2(field),
        "gl11" => matrix_gl(1, 1, &k)?,
        "sl21" => matrix_sl(2, 1, &k)?,
        "sl30" => matrix_sl(3, 0, &k)?,
        _ => return Err(Error::Input(format!("unknown Lie superalgebra {name:?}"))),
    };
    Ok(l.with_name(name))
}

pub fn assoc(name: &str, field: FieldSpec) -> Result<AssocSuperAlgebra> {
    let k = ground_field(field);
    let a = match name {
        "q" => k,
        "dual" => dual_numbers(field),
        "grassmann" => grassmann(field),
        "m11" => matrix_assoc(1, 1, &k)?,
        _ => return Err(Error::Input(format!("unknown associative superalgebra {name:?}"))),
    };
    Ok(a)
}

pub fn lie_corpus(field: FieldSpec) -> Vec<LieSuperAlgebra> {
    LIE_NAMES.iter().map(|n| lie(n, field).expect("catalog entry")).collect()
}

pub fn assoc_corpus(field: FieldSpec) -> Vec<(&'static str, AssocSuperAlgebra)> {
    ASSOC_NAMES.iter().map(|&n| (n, assoc(n, field).expect("catalog entry"))).collect()
}
