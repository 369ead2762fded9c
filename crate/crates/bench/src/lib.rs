//! Fixed workloads shared by the benchmarks.

use superlie::exactla::FieldSpec;
use superlie::verify::catalog;
use superlie::{AssocSuperAlgebra, LieSuperAlgebra, Matrix};

pub const Q: FieldSpec = FieldSpec::Rationals;

pub fn lie(name: &str) -> LieSuperAlgebra {
    catalog::lie(name, Q).expect("catalog entry")
}

pub fn assoc(name: &str) -> AssocSuperAlgebra {
    catalog::assoc(name, Q).expect("catalog entry")
}

/// A dense `n × n` integer matrix of rank `n - 1` with small entries that
/// grow under elimination.
pub fn rank_workload(n: usize) -> Matrix {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| if i + 1 == n { 0 } else { ((i * 7 + j * 13 + i * j) % 11) as i64 - 5 }).collect())
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    Matrix::from_i64(Q, &refs)
}
