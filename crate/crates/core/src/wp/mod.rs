//! Solvers for the LD word problem on terms: the Polish algorithm, the
//! dovetailed syntactic search, and normal forms built from descents.

pub mod normal;
pub mod polish;
pub mod syntactic;

pub use normal::{
    abridged, descents, enumerate_normal, expand_spelling, is_descent_step, normal_form,
    wp_ld_normalform, CutLevel, Descent, NormalForm, NormalOptions, NormalTerm, Spelling,
};
pub use polish::{
    disc, sol, wp_polish, PolishExit, PolishOutcome, PolishStep, PolishVerdict, Side,
};
pub use syntactic::{wp_ld_syntactic, SyntacticOutcome, SyntacticReason};
