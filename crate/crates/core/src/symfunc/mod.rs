//! Schur `P`, `Q` and `s` polynomials, shifted Littlewood-Richardson and
//! `g` coefficients, and diagonal box-adding operators.

pub mod lr;
pub mod operators;
pub mod poly;
pub mod schur;
pub mod skew;

pub use lr::{
    boxadd_witnesses, g_coeff_plactic, g_coeff_rectify, g_expand, lr_coeff, lr_coeff_boxadd,
    lr_coeff_plactic, lr_coeff_stembridge, lr_expand, pieri_expand, CoeffExpansion, LrMethod,
};
pub use operators::{
    add_box_on_diagonal, apply_word, box_adders, cauchy_check, cauchy_mismatches, generalized_g,
    nil_tl_b_check, ShapeOperator, DEFAULT_SHAPE_BOUND,
};
pub use poly::SparsePolynomial;
pub use schur::{schur_p_poly, schur_q_poly, schur_s_poly, skew_schur_q_poly};
pub use skew::{skew_pschur_expand, SkewExpansion};
