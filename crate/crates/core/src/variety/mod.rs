//! Varieties given by homogeneous equations, the numeric conic-connectedness
//! criteria, and the line-family classifier.

mod classify;
mod criteria;
mod spec;

pub use classify::{classify_line_family, Candidate, ClassificationInputs, ClassificationReport, Finding};
pub use criteria::{criteria_report, CriterionEntry, CriterionReport, DimensionSource, Verdict};
pub use spec::{jacobian_rank_at, load_variety, VarietyDocument, VarietySpec};
