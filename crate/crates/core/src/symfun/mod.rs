//! Symmetric-group side: partitions, tableaux and charge, Kostka–Foulkes
//! polynomials, characters of `S_n` and graded Springer characters of
//! `GL_n`.

mod characters;
mod partition;
mod springer;
mod tableau;

pub use characters::{
    char_sn, dim_sn, integer_trace, seminormal_generators, seminormal_matrix, standard_tableaux,
};
pub use partition::Partition;
pub use springer::{
    green_at_root, remark38_closed_form, springer_graded_char, springer_graded_char_bounded,
    GradedCharacter, Reading, DEFAULT_SIZE_BOUND,
};
pub use tableau::{
    charge, charge_word, enumerate_ssyt, kostka_foulkes, kostka_foulkes_tilde, Tableau,
};
