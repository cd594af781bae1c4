//! Checkers for the character identities of the induction theorem with a
//! cyclic twist, with structured pass/fail reports.

mod checks;
mod extension;
mod gamma;
mod model;
mod report;

pub use checks::{
    check_cor35, check_induction_e1, check_lemma15, check_lemma15_catalog, check_prop332_case_a,
    check_prop33_dims, check_prop37, check_remark38, check_theorem17, describe_config,
    primitive_exponents,
};
pub use extension::{
    block_action, tensor_cyclic_extension, ExtendedGradedCharacter, TwistedCycleType,
};
pub use gamma::{gamma_ind_trace, GammaTable};
pub use model::InducedModel;
pub use report::{Counterexample, ReportBuilder, Status, VerificationReport};
