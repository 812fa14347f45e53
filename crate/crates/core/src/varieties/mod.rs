//! Finite presentations of overcommutative varieties and the tests run on them.
//!
//! A variety *reduces* the transversal `W_λ` when it identifies two of its
//! words, *collapses* it when it identifies all of them, and is *greedy* when
//! every reduced transversal is collapsed. Non-trivial greedy varieties are
//! exactly the finite meets of the varieties `S_λ`; [`decompose`] recovers
//! such a meet from a presentation.
//!
//! Transversals are finite, so every verdict on a single `W_λ` is exact.
//! Statements quantifying over all transversals are checked only up to a
//! length bound, and the reports say so.

mod analysis;
mod presentation;

pub use analysis::{
    collapses, decompose, gamma_set, greedy_report, reduces, subset_up_to, DecompositionResult, GammaSet,
    GreedyReport, TransversalVerdict,
};
pub use presentation::{legacy_variety, meet, s_variety, s_variety_truncated, w_variety, LegacyFamily, VarietyPresentation};
