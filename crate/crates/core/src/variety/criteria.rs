use std::fmt;

use num_rational::BigRational;
use serde::Serialize;

use super::VarietySpec;
use crate::groebner::ideal_dimension_and_degree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "HOLDS",
            Verdict::Fails => "FAILS",
            Verdict::NotApplicable => "NOT APPLICABLE",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DimensionSource {
    Claimed,
    Computed,
    Unavailable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionEntry {
    /// Stable identifier.
    pub key: &'static str,
    pub name: &'static str,
    pub inequality: String,
    /// Exact values, rendered as `a` or `a/b`.
    pub left: String,
    pub right: String,
    pub verdict: Verdict,
    pub conclusion: String,
    /// The statement the entry instantiates.
    pub source: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl fmt::Display for CriterionEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} {}", self.name, self.inequality, self.verdict)?;
        if let Some(note) = &self.note {
            write!(f, "; {note}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub variety: String,
    pub ambient_dim: usize,
    pub equation_count: usize,
    pub degrees: Vec<u32>,
    pub degree_sum: u64,
    pub dimension: Option<i64>,
    pub codimension: Option<i64>,
    pub dimension_source: DimensionSource,
    pub smooth: bool,
    pub scheme_theoretic: bool,
    pub entries: Vec<CriterionEntry>,
    pub caveat: &'static str,
}

impl CriterionReport {
    pub fn entry(&self, key: &str) -> Option<&CriterionEntry> {
        self.entries.iter().find(|e| e.key == key)
    }
}

pub const CAVEAT: &str = "conclusions hold for general points of X and rest on the stated hypotheses \
(smoothness, scheme-theoretic equations); neither genericity nor the hypotheses are verified here";

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn show(x: &BigRational) -> String {
    x.to_string()
}

struct Cmp {
    left: BigRational,
    right: BigRational,
}

impl Cmp {
    fn le(left: BigRational, right: BigRational) -> Cmp {
        Cmp { left, right }
    }

    fn verdict(&self) -> Verdict {
        if self.left <= self.right {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    fn text(&self) -> String {
        format!("{} ≤ {}", show(&self.left), show(&self.right))
    }
}

pub(crate) fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

fn describe(x: &VarietySpec) -> String {
    let space = format!("ℙ{}", superscript(x.ambient_dim));
    match x.degrees.as_slice() {
        [2] => format!("quadric in {space}"),
        [3] => format!("cubic in {space}"),
        [4] => format!("quartic in {space}"),
        [d] => format!("degree-{d} hypersurface in {space}"),
        ds => {
            let list: Vec<String> = ds.iter().map(|d| d.to_string()).collect();
            format!("equations of degrees ({}) in {space}", list.join(","))
        }
    }
}

fn not_applicable(key: &'static str, name: &'static str, inequality: String, why: &str, source: &'static str) -> CriterionEntry {
    CriterionEntry {
        key,
        name,
        inequality,
        left: String::new(),
        right: String::new(),
        verdict: Verdict::NotApplicable,
        conclusion: why.to_string(),
        source,
        note: None,
    }
}

fn entry(key: &'static str, name: &'static str, c: &Cmp, holds: &str, fails: &str, source: &'static str) -> CriterionEntry {
    let verdict = c.verdict();
    CriterionEntry {
        key,
        name,
        inequality: c.text(),
        left: show(&c.left),
        right: show(&c.right),
        verdict,
        conclusion: if verdict == Verdict::Holds { holds } else { fails }.to_string(),
        source,
        note: None,
    }
}

/// Evaluates every numeric criterion for `x`. Pure in `x`, except that a missing
/// dimension is computed from the equations.
pub fn criteria_report(x: &VarietySpec) -> CriterionReport {
    let big_n = x.ambient_dim as i64;
    let m = x.m() as i64;
    let sum = x.degree_sum() as i64;

    let (dimension, dimension_source) = match x.claimed_dim {
        Some(n) => (Some(n), DimensionSource::Claimed),
        None => match ideal_dimension_and_degree(&x.equations) {
            Ok(s) if s.projective_dimension >= 0 => (Some(s.projective_dimension), DimensionSource::Computed),
            _ => (None, DimensionSource::Unavailable),
        },
    };
    let codimension = dimension.map(|n| big_n - n);
    let mut entries = Vec::new();

    // singular conics: Σd ≤ (N+m)/2
    let a = Cmp::le(q(sum, 1), q(big_n + m, 2));
    let mut singular = entry(
        "singular_conic",
        "singular-conic criterion",
        &a,
        "X is connected by singular conics",
        "no conclusion: two general points need not lie on a singular conic",
        "singular conics from intersecting cones of lines",
    );
    let sharp = 2 * sum == big_n + m || 2 * sum == big_n + m + 1;
    if sharp && singular.verdict == Verdict::Fails {
        singular.note = Some(format!("sharpness context: {}", describe(x)));
    }
    entries.push(singular.clone());

    // smooth conics via the first c equations
    let source_b = "smooth conics from the first c equations";
    let ineq_b = "Σ_{i≤c} d_i ≤ (N+c)/2".to_string();
    let b = match codimension {
        _ if !(x.smooth && x.scheme_theoretic) => {
            not_applicable("smooth_conic", "smooth-conic criterion", ineq_b, "requires smooth X with scheme-theoretic equations", source_b)
        }
        None => not_applicable("smooth_conic", "smooth-conic criterion", ineq_b, "dimension unknown", source_b),
        Some(c) if c < 1 || c > m => {
            not_applicable("smooth_conic", "smooth-conic criterion", ineq_b, "codimension exceeds the number of equations", source_b)
        }
        Some(c) => {
            let first: i64 = x.degrees[..c as usize].iter().map(|&d| d as i64).sum();
            let cmp = Cmp::le(q(first, 1), q(big_n + c, 2));
            let mut e = entry(
                "smooth_conic",
                "smooth-conic criterion",
                &cmp,
                "X is conic-connected by smooth conics",
                "no conclusion",
                source_b,
            );
            if cmp.left == cmp.right {
                e.note = Some("equality: finitely many singular conics through two general points expected".into());
            }
            e
        }
    };
    entries.push(b);

    // covered by lines: Σd ≤ N−1, i.e. Σd < N
    let c = Cmp::le(q(sum, 1), q(big_n - 1, 1));
    let mut lines = entry(
        "covered_by_lines",
        "covered-by-lines",
        &c,
        "X is covered by lines",
        "no conclusion about lines",
        "dimension count for lines through a point",
    );
    let bound = big_n - 1 - sum;
    lines.note = Some(format!("dim L_x ≥ N−1−Σd = {bound}"));
    if lines.verdict == Verdict::Holds {
        lines.conclusion = format!("X is covered by lines; dim L_x ≥ {bound}");
    }
    entries.push(lines);

    // smooth complete intersections: Σd ≤ n/2 + c
    let source_d = "conic-connectedness of smooth complete intersections";
    let ineq_d = "Σd ≤ n/2 + c".to_string();
    let d = match (dimension, codimension) {
        (Some(n), Some(cc)) if x.smooth && cc == m => {
            let cmp = Cmp::le(q(sum, 1), q(n + 2 * cc, 2));
            entry("complete_intersection", "complete-intersection criterion", &cmp, "X is conic-connected", "no conclusion", source_d)
        }
        _ => not_applicable(
            "complete_intersection",
            "complete-intersection criterion",
            ineq_d,
            "requires a smooth complete intersection (m = c)",
            source_d,
        ),
    };
    entries.push(d);

    // few equations: m ≤ N/2
    let source_e = "few scheme-theoretic equations force a complete intersection";
    let e = if x.smooth && x.scheme_theoretic {
        let cmp = Cmp::le(q(m, 1), q(big_n, 2));
        entry("faltings", "few-equations criterion", &cmp, "X is a complete intersection", "no conclusion", source_e)
    } else {
        not_applicable("faltings", "few-equations criterion", "m ≤ N/2".into(), "requires smooth X with scheme-theoretic equations", source_e)
    };
    entries.push(e);

    // consistency 3m ≤ N inside the singular-conic range
    let source_f = "singular-conic range with all degrees at least 2";
    let f = if singular.verdict == Verdict::Holds {
        let cmp = Cmp::le(q(3 * m, 1), q(big_n, 1));
        let mut e = entry(
            "three_m",
            "equation-count consistency",
            &cmp,
            "consistent: 2m ≤ Σd ≤ (N+m)/2 gives 3m ≤ N",
            "inconsistent unless some equation has degree below 2",
            source_f,
        );
        if x.degrees.iter().any(|&d| d < 2) {
            e.note = Some("some equation has degree below 2 (degenerate variety)".into());
        }
        e
    } else {
        not_applicable("three_m", "equation-count consistency", "3m ≤ N".into(), "only checked when the singular-conic criterion holds", source_f)
    };
    entries.push(f);

    // sharpness of the singular-conic bound
    let verdict = if sharp { Verdict::Holds } else { Verdict::Fails };
    entries.push(CriterionEntry {
        key: "sharpness",
        name: "sharpness",
        inequality: format!("2Σd = {} against N+m = {}", 2 * sum, big_n + m),
        left: (2 * sum).to_string(),
        right: (big_n + m).to_string(),
        verdict,
        conclusion: if 2 * sum == big_n + m {
            "at the boundary of the singular-conic bound".into()
        } else if 2 * sum == big_n + m + 1 {
            format!(
                "one half-step beyond the bound (Σd = (N+m+1)/2): the {} is the standard example where conic-connectedness holds without singular conics",
                describe(x)
            )
        } else {
            "away from the boundary".into()
        },
        source: "sharpness of the singular-conic bound",
        note: None,
    });

    // Hartshorne range 2c ≤ n
    let source_h = "smooth-conic range lies in the Hartshorne range";
    let h = match (dimension, codimension) {
        (Some(n), Some(cc)) => {
            let cmp = Cmp::le(q(2 * cc, 1), q(n, 1));
            let mut e = entry(
                "hartshorne_range",
                "Hartshorne range",
                &cmp,
                "2c ≤ n: in the range of the Hartshorne conjecture",
                "2c > n: outside the range of the Hartshorne conjecture",
                source_h,
            );
            if x.degrees.iter().all(|&d| d == 2) {
                e.note = Some("all equations quadratic".into());
            }
            e
        }
        _ => not_applicable("hartshorne_range", "Hartshorne range", "2c ≤ n".into(), "dimension unknown", source_h),
    };
    entries.push(h);

    // equality case for the count of singular conics
    let source_i = "count of singular conics in the equality case";
    let i = match codimension {
        Some(cc) if cc == m => {
            let lhs = 2 * sum - cc;
            let formula: u128 = x.degrees.iter().map(|&d| factorial(d) * factorial(d.saturating_sub(1))).product();
            let equal = lhs == big_n;
            CriterionEntry {
                key: "count_equality",
                name: "count equality",
                inequality: format!("2Σd − c = N: {lhs} = {big_n}"),
                left: lhs.to_string(),
                right: big_n.to_string(),
                verdict: if equal { Verdict::Holds } else { Verdict::Fails },
                conclusion: if equal {
                    format!("finitely many singular conics through two general points, C₂,₂ = {formula}")
                } else if lhs > big_n {
                    format!("excess equations ({} more than N): no finite count predicted", lhs - big_n)
                } else {
                    format!("deficit of equations ({} fewer than N): no finite count predicted", big_n - lhs)
                },
                source: source_i,
                note: None,
            }
        }
        _ => not_applicable("count_equality", "count equality", "2Σd − c = N".into(), "requires a complete intersection (m = c)", source_i),
    };
    entries.push(i);

    CriterionReport {
        variety: x.name.clone(),
        ambient_dim: x.ambient_dim,
        equation_count: x.m(),
        degrees: x.degrees.clone(),
        degree_sum: x.degree_sum(),
        dimension,
        codimension,
        dimension_source,
        smooth: x.smooth,
        scheme_theoretic: x.scheme_theoretic,
        entries,
        caveat: CAVEAT,
    }
}

pub(crate) fn factorial(d: u32) -> u128 {
    (1..=d as u128).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::variety::VarietyDocument;

    fn spec(n: usize, eqs: &[&str], smooth: bool) -> VarietySpec {
        let mut doc = VarietyDocument::new("t", n, eqs);
        doc.smooth = smooth;
        doc.scheme_theoretic = smooth;
        doc.into_spec().unwrap()
    }

    #[test]
    fn quadric_surface() {
        let r = criteria_report(&spec(3, &["x0*x3 - x1*x2"], true));
        assert_eq!(r.entry("singular_conic").unwrap().to_string(), "singular-conic criterion: 2 ≤ 2 HOLDS");
        assert_eq!(r.dimension_source, DimensionSource::Computed);
        assert_eq!(r.dimension, Some(2));
        assert_eq!(r.entry("count_equality").unwrap().verdict, Verdict::Holds);
    }

    #[test]
    fn cubic_threefold_is_the_sharp_example() {
        let r = criteria_report(&spec(4, &["x0^3 + x1^3 + x2^3 + x3^3 + x4^3"], true));
        let a = r.entry("singular_conic").unwrap();
        assert_eq!(a.to_string(), "singular-conic criterion: 3 ≤ 5/2 FAILS; sharpness context: cubic in ℙ⁴");
        assert_eq!(r.entry("covered_by_lines").unwrap().inequality, "3 ≤ 3");
        assert_eq!(r.entry("covered_by_lines").unwrap().verdict, Verdict::Holds);
        assert_eq!(r.entry("sharpness").unwrap().verdict, Verdict::Holds);
    }

    #[test]
    fn report_is_deterministic() {
        let x = spec(6, &["x0*x6 + x1*x2 + x3^2", "x0*x5 + x2*x4 - x1^2"], true);
        let a = serde_json::to_string(&criteria_report(&x)).unwrap();
        let b = serde_json::to_string(&criteria_report(&x)).unwrap();
        assert_eq!(a, b);
    }
}
