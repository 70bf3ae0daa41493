//! Singular conics through two points: the combined system of both line cones,
//! its degree, its rational solutions, and the closed-form count.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::Field;
use crate::fforacle::FfVariety;
use crate::groebner::{ideal_dimension_and_degree, rational_projective_zeros, IdealSummary};
use crate::linalg;
use crate::multipoly::{expand_line_pencil, Polynomial, ProjectivePoint};
use crate::variety::VarietySpec;

/// Conditions on a vertex `p` forcing both lines ⟨x,p⟩ and ⟨y,p⟩ onto X.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConicSystem {
    pub x: ProjectivePoint,
    pub y: ProjectivePoint,
    pub generators: Vec<Polynomial>,
    /// The equations of X themselves, shared by both cones.
    pub shared_count: usize,
}

/// A line given by two points and its reduced linear equations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Line {
    pub through: [ProjectivePoint; 2],
    pub equations: Vec<Polynomial>,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eqs: Vec<String> = self.equations.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{} = 0}}", eqs.join(" = "))
    }
}

impl Line {
    pub fn new(a: &ProjectivePoint, b: &ProjectivePoint) -> Line {
        let rows = vec![a.coords().to_vec(), b.coords().to_vec()];
        let n = a.len();
        let field = a.field();
        let equations = linalg::kernel(&rows, n)
            .into_iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .fold(Polynomial::zero(n, field), |acc, (i, c)| &acc + &Polynomial::var(n, field, i).scale(c))
            })
            .collect();
        Line { through: [a.clone(), b.clone()], equations }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConicSolution {
    pub vertex: ProjectivePoint,
    /// Absent when the vertex is `x` itself.
    pub line_xp: Option<Line>,
    pub line_yp: Option<Line>,
    /// The vertex lies on the line ⟨x,y⟩ (including `x` and `y`).
    pub degenerate: bool,
}

impl fmt::Display for ConicSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |l: &Option<Line>| l.as_ref().map_or("(vertex is the base point)".to_string(), |l| l.to_string());
        write!(f, "vertex {}: {} ∪ {}", self.vertex, show(&self.line_xp), show(&self.line_yp))?;
        if self.degenerate {
            write!(f, " [degenerate: vertex on the line through x and y]")?;
        }
        Ok(())
    }
}

pub(crate) fn conic_solution(x: &ProjectivePoint, y: &ProjectivePoint, p: ProjectivePoint) -> ConicSolution {
    let rows = vec![x.coords().to_vec(), y.coords().to_vec(), p.coords().to_vec()];
    let degenerate = linalg::rank(&rows) < 3;
    ConicSolution {
        line_xp: (p != *x).then(|| Line::new(x, &p)),
        line_yp: (p != *y).then(|| Line::new(y, &p)),
        vertex: p,
        degenerate,
    }
}

fn check_points(x: &VarietySpec, a: &ProjectivePoint, b: &ProjectivePoint) -> Result<()> {
    x.require_point(a)?;
    x.require_point(b)?;
    if a == b {
        return Err(Error::SamePoints { point: a.to_string() });
    }
    Ok(())
}

/// Pencil coefficients of every equation at `x`, then at `y`, then the equations once.
/// Identically zero coefficients and repeated polynomials are dropped.
pub fn conic_system(x: &VarietySpec, a: &ProjectivePoint, b: &ProjectivePoint) -> Result<ConicSystem> {
    check_points(x, a, b)?;
    let mut at_a = Vec::new();
    let mut at_b = Vec::new();
    for g in &x.equations {
        let mut ca = expand_line_pencil(g, a)?;
        let mut cb = expand_line_pencil(g, b)?;
        ca.pop();
        cb.pop();
        at_a.extend(ca);
        at_b.extend(cb);
    }
    let mut generators: Vec<Polynomial> = Vec::new();
    for f in at_a.into_iter().chain(at_b).chain(x.equations.iter().cloned()) {
        if !f.is_zero() && !generators.contains(&f) {
            generators.push(f);
        }
    }
    Ok(ConicSystem { x: a.clone(), y: b.clone(), generators, shared_count: x.m() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "prime")]
pub enum SearchMode {
    Symbolic,
    FiniteField(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ConicSearch {
    /// Finitely many vertices; over ℚ only the rational ones are listed.
    Finite { solutions: Vec<ConicSolution> },
    /// Infinitely many vertices: the system has positive projective dimension.
    Infinite { summary: IdealSummary },
}

/// Singular conics through `a` and `b`, symbolically over the base field or by exhaustive scan over 𝔽_p.
pub fn find_singular_conics(
    x: &VarietySpec,
    a: &ProjectivePoint,
    b: &ProjectivePoint,
    mode: SearchMode,
    cap: u128,
) -> Result<ConicSearch> {
    match mode {
        SearchMode::Symbolic => {
            let system = conic_system(x, a, b)?;
            let summary = ideal_dimension_and_degree(&system.generators)?;
            if summary.projective_dimension > 0 {
                return Ok(ConicSearch::Infinite { summary });
            }
            let solutions = if summary.is_empty() {
                Vec::new()
            } else {
                rational_projective_zeros(&system.generators)?
                    .into_iter()
                    .map(|p| conic_solution(&system.x, &system.y, p))
                    .collect()
            };
            Ok(ConicSearch::Finite { solutions })
        }
        SearchMode::FiniteField(p) => {
            let xp = reduce_spec(x, p)?;
            let (ap, bp) = (reduce_point(a, p)?, reduce_point(b, p)?);
            let system = conic_system(&xp, &ap, &bp)?;
            let oracle = FfVariety::new(&xp, p, cap)?;
            let solutions = oracle
                .zero_set(&system.generators)?
                .into_iter()
                .map(|q| conic_solution(&system.x, &system.y, q))
                .collect();
            Ok(ConicSearch::Finite { solutions })
        }
    }
}

pub(crate) fn reduce_spec(x: &VarietySpec, p: u32) -> Result<VarietySpec> {
    if x.field == Field::Prime(p) {
        Ok(x.clone())
    } else {
        x.reduce_mod(p)
    }
}

pub(crate) fn reduce_point(a: &ProjectivePoint, p: u32) -> Result<ProjectivePoint> {
    if a.field() == Field::Prime(p) {
        Ok(a.clone())
    } else {
        a.reduce_mod(p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountResult {
    pub generator_count: usize,
    pub generator_degrees: Vec<u32>,
    pub projective_dimension: i64,
    /// With multiplicity, over the algebraic closure; absent unless the system is zero-dimensional.
    pub ideal_degree: Option<u64>,
    /// Product of the generator degrees.
    pub bezout_bound: u128,
    /// `∏ d_i! (d_i − 1)!`.
    pub formula_value: u128,
    /// `m = c`, from the claimed or computed dimension.
    pub formula_applicable: bool,
    /// `2Σd − c = N`.
    pub equality_case: bool,
    pub agrees_with_formula: Option<bool>,
    pub note: String,
}

fn factorial(d: u32) -> u128 {
    (1..=d as u128).product()
}

/// Degree of the combined system against the closed-form count.
pub fn count_conics(x: &VarietySpec, a: &ProjectivePoint, b: &ProjectivePoint) -> Result<CountResult> {
    let system = conic_system(x, a, b)?;
    let summary = ideal_dimension_and_degree(&system.generators)?;
    let generator_degrees: Vec<u32> = system.generators.iter().map(|g| g.total_degree().unwrap_or(0)).collect();
    let bezout_bound: u128 = generator_degrees.iter().map(|&d| d as u128).product();
    let formula_value: u128 = x.degrees.iter().map(|&d| factorial(d) * factorial(d.saturating_sub(1))).product();

    let dimension = match x.claimed_dim {
        Some(n) => Some(n),
        None => {
            let s = ideal_dimension_and_degree(&x.equations)?;
            (s.projective_dimension >= 0).then_some(s.projective_dimension)
        }
    };
    let m = x.m() as i64;
    let big_n = x.ambient_dim as i64;
    let codim = dimension.map(|n| big_n - n);
    let formula_applicable = codim == Some(m);
    let c = codim.unwrap_or(m);
    let lhs = 2 * x.degree_sum() as i64 - c;
    let equality_case = lhs == big_n;
    let zero_dim = summary.projective_dimension == 0;
    let ideal_degree = if zero_dim { summary.degree } else { None };
    let agrees_with_formula = (formula_applicable && equality_case && zero_dim).then(|| ideal_degree == Some(formula_value as u64));

    let note = if !formula_applicable {
        "formula not applicable: X is not claimed to be a complete intersection (m ≠ c)".to_string()
    } else if summary.projective_dimension > 0 {
        format!("the system has projective dimension {}: infinitely many vertices (special points)", summary.projective_dimension)
    } else if summary.is_empty() {
        "the system has no solutions".to_string()
    } else if !equality_case {
        if lhs > big_n {
            format!("excess equations: 2Σd − c = {lhs} > N = {big_n}; the formula is printed for reference only")
        } else {
            format!("deficit of equations: 2Σd − c = {lhs} < N = {big_n}; the formula is printed for reference only")
        }
    } else if agrees_with_formula == Some(true) {
        "ideal degree equals the formula".to_string()
    } else {
        "ideal degree differs from the formula (the points may be special)".to_string()
    };

    Ok(CountResult {
        generator_count: system.generators.len(),
        generator_degrees,
        projective_dimension: summary.projective_dimension,
        ideal_degree,
        bezout_bound,
        formula_value,
        formula_applicable,
        equality_case,
        agrees_with_formula,
        note,
    })
}

/// Evaluates both pencil-coefficient lists at the vertex.
pub fn verify_solution(x: &VarietySpec, s: &ConicSolution, a: &ProjectivePoint, b: &ProjectivePoint) -> Result<bool> {
    for g in &x.equations {
        for base in [a, b] {
            for f in expand_line_pencil(g, base)? {
                if !f.evaluate(s.vertex.coords())?.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
