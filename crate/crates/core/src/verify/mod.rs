//! Mechanical checks of the gadget lemmas and of both reductions on small
//! instances, plus the structured solver they rely on.

mod e2e;
mod lemmas;
mod structured;

pub use e2e::{e2e_check, e2e_check_tree, E2eReport};
pub use lemmas::{
    check_lemma_and, check_lemma_aux, check_lemma_bin, check_lemma_vtree, control_lemma_and, control_lemma_aux,
    control_lemma_bin, control_lemma_vtree, LemmaReport,
};
pub use structured::{
    decide_gadget, sigma_gadget, sigma_gadget_forest, sigma_gadget_scaled, CensusEntry, GadgetMethod, GadgetSolve,
    OffsetVector, StructuredSolver,
};
