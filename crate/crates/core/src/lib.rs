//! Computational toolkit for orbit braid groups `B^orb_n(C, Z_p)` and
//! `B^orb_n(C^×, Z_p)`: the Artin-style representation on `F_pn`, word
//! problems, recognition of representation images, and combing of pure
//! orbit braids.

pub mod braid;
pub mod combing;
pub mod diagram;
pub mod error;
pub mod random;
pub mod recognition;
pub mod rep;
pub mod word_problem;
pub mod words;

pub use braid::{
    expand_a, expand_aword, forget_strand0, is_pure, perm_image, AGen, ALetter, AWord,
    BraidLetter, BraidWord, Gen, PermZp,
};
pub use combing::{
    basis, comb, comb_with_budget, express_in_basis, include_lift, kernel_coordinate, multiply_back,
    CombedForm, UWord, DEFAULT_MAX_BASIS_LENGTH,
};
pub use diagram::{render, RenderStyle};
pub use error::{Error, Result};
pub use rep::{apply, compose, eq_endo, rho_gen, rho_word, shift_c, twist, Endo};
pub use recognition::{
    boundary_rotation, check_boundary, check_equivariance, decompose, decompose_traced, length, parse_conjugate_form,
    reduce_step, ConjugateForm,
};
pub use word_problem::{eq_plane, eq_punctured, eq_punctured_with, twist_power_of, RankOnePolicy};
pub use words::{
    boundary_word, conjugate, cyclic_conjugator, delta_word, reduce, FreeWord, GroupParams,
    Letter,
};
