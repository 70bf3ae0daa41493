//! The cone 𝔏oc_x ⊂ ℙᴺ swept by lines of X through a point, and `a = dim 𝓛ₓ`.

use serde::Serialize;

use crate::error::Result;
use crate::groebner::{ideal_dimension_and_degree, IdealSummary};
use crate::multipoly::{expand_line_pencil, Polynomial, ProjectivePoint};
use crate::variety::{classify_line_family, ClassificationReport, VarietySpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineLocus {
    pub base_point: ProjectivePoint,
    /// Pencil coefficients of every equation; the last one of each block is the equation itself.
    /// Identically zero coefficients are omitted.
    pub ideal_generators: Vec<Polynomial>,
    pub summary: IdealSummary,
}

/// Builds the pencil conditions at `x` and reads off the dimension of their zero set.
pub fn line_locus(x: &VarietySpec, base: &ProjectivePoint) -> Result<LineLocus> {
    x.require_point(base)?;
    let mut ideal_generators = Vec::new();
    for g in &x.equations {
        ideal_generators.extend(expand_line_pencil(g, base)?.into_iter().filter(|f| !f.is_zero()));
    }
    let summary = ideal_dimension_and_degree(&ideal_generators)?;
    Ok(LineLocus { base_point: base.clone(), ideal_generators, summary })
}

impl LineLocus {
    /// `dim 𝓛ₓ`: one less than the cone's dimension; `-1` when only `x` remains.
    pub fn a(&self) -> i64 {
        self.summary.projective_dimension - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinesReport {
    pub base_point: ProjectivePoint,
    pub locus_dimension: i64,
    pub locus_degree: Option<u64>,
    pub a: i64,
    /// `N − 1 − Σd`.
    pub lines_lower_bound: i64,
    /// `N − Σd`.
    pub locus_lower_bound: i64,
    pub meets_bound: bool,
    pub at_bound: bool,
    pub covered_by_lines_here: bool,
    /// Present when the dimension of X is known and `a ≥ 0`.
    pub classification: Option<ClassificationReport>,
    pub caveat: &'static str,
}

pub const GENERICITY_CAVEAT: &str =
    "a is defined at a general point; this value is computed at the given point, which may be special";

pub fn lines_dimension_report(l: &LineLocus, x: &VarietySpec) -> LinesReport {
    let big_n = x.ambient_dim as i64;
    let sum = x.degree_sum() as i64;
    let a = l.a();
    let bound = big_n - 1 - sum;
    let dimension = x.claimed_dim.or_else(|| {
        ideal_dimension_and_degree(&x.equations).ok().map(|s| s.projective_dimension).filter(|&d| d >= 1)
    });
    let classification = match dimension {
        Some(n) if a >= 0 && n < big_n => {
            Some(classify_line_family(n, big_n - n, a, x.secant_defect, x.fano_index))
        }
        _ => None,
    };
    LinesReport {
        base_point: l.base_point.clone(),
        locus_dimension: l.summary.projective_dimension,
        locus_degree: l.summary.degree,
        a,
        lines_lower_bound: bound,
        locus_lower_bound: big_n - sum,
        meets_bound: a >= bound,
        at_bound: a == bound,
        covered_by_lines_here: a >= 0,
        classification,
        caveat: GENERICITY_CAVEAT,
    }
}
