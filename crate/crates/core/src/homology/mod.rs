//! Chevalley–Eilenberg homology, non-abelian homology and exactness checks.

pub(crate) mod ce;
mod exact;
mod hopf;
mod nonabelian;

pub use ce::{
    ce_complex, complexes_checked, homology, trivial_homology, ChainComplex, HomologyResult, Supermodule,
    DEFAULT_MAX_DEGREE, MAX_CHAIN_DIM,
};

pub use exact::{
    coordinate_space, exactness_check, snake, ExactSequence, ExactnessCertificate, NodeCheck, Snake, SnakeDiagram,
};
pub use hopf::hopf_formula;
pub use nonabelian::{
    d3_lemma_check, exterior_sixterm, exterior_sixterm_dims_match, h2_via_exterior, nh, nh_long_sequence,
    tensor_square_sequence, tensor_with_base, D3Lemma, NonAbelianHomology,
};
