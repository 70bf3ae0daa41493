use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{Field, Scalar};
use crate::linalg;
use crate::multipoly::{parse_polynomial, Polynomial, ProjectivePoint};

/// The on-disk variety description.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VarietyDocument {
    pub name: String,
    pub ambient_dim: usize,
    #[serde(default = "rational")]
    pub field: Field,
    pub equations: Vec<String>,
    #[serde(default)]
    pub claimed_dim: Option<i64>,
    #[serde(default)]
    pub scheme_theoretic: bool,
    #[serde(default)]
    pub smooth: bool,
    #[serde(default)]
    pub secant_defect: Option<i64>,
    #[serde(default)]
    pub fano_index: Option<i64>,
}

fn rational() -> Field {
    Field::Rational
}

/// A projective variety `X ⊂ ℙᴺ` cut out by homogeneous equations, degrees decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VarietySpec {
    pub name: String,
    pub ambient_dim: usize,
    pub field: Field,
    pub equations: Vec<Polynomial>,
    pub degrees: Vec<u32>,
    pub claimed_dim: Option<i64>,
    pub scheme_theoretic: bool,
    pub smooth: bool,
    pub secant_defect: Option<i64>,
    pub fano_index: Option<i64>,
    /// Non-fatal remarks produced while loading.
    pub warnings: Vec<String>,
}

impl VarietyDocument {
    pub fn new(name: &str, ambient_dim: usize, equations: &[&str]) -> VarietyDocument {
        VarietyDocument {
            name: name.to_string(),
            ambient_dim,
            field: Field::Rational,
            equations: equations.iter().map(|s| s.to_string()).collect(),
            claimed_dim: None,
            scheme_theoretic: false,
            smooth: false,
            secant_defect: None,
            fano_index: None,
        }
    }

    pub fn into_spec(self) -> Result<VarietySpec> {
        let n = self.ambient_dim;
        if n < 1 {
            return Err(Error::Malformed("ambient_dim must be at least 1".into()));
        }
        if self.equations.is_empty() {
            return Err(Error::Malformed("at least one equation is required".into()));
        }
        if let Some(d) = self.claimed_dim {
            if d < 1 || d > n as i64 - 1 {
                return Err(Error::Malformed(format!("claimed_dim {d} outside 1..={}", n - 1)));
            }
        }
        let mut warnings = Vec::new();
        let mut parsed = Vec::with_capacity(self.equations.len());
        for (index, src) in self.equations.iter().enumerate() {
            let g = parse_polynomial(src, n + 1, self.field)?;
            if g.is_zero() {
                return Err(Error::ZeroEquation { index });
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous { index, text: src.clone() });
            }
            let d = g.total_degree().expect("nonzero");
            match d {
                0 => warnings.push(format!("equation {index} is a nonzero constant: the variety is empty")),
                1 => warnings.push(format!("equation {index} is linear: the variety is degenerate (lies in a hyperplane)")),
                _ => {}
            }
            parsed.push((d, g));
        }
        let before: Vec<u32> = parsed.iter().map(|(d, _)| *d).collect();
        parsed.sort_by_key(|(d, _)| std::cmp::Reverse(*d));
        let degrees: Vec<u32> = parsed.iter().map(|(d, _)| *d).collect();
        if degrees != before {
            warnings.push(format!("equations reordered by decreasing degree: {before:?} -> {degrees:?}"));
        }
        Ok(VarietySpec {
            name: self.name,
            ambient_dim: n,
            field: self.field,
            equations: parsed.into_iter().map(|(_, g)| g).collect(),
            degrees,
            claimed_dim: self.claimed_dim,
            scheme_theoretic: self.scheme_theoretic,
            smooth: self.smooth,
            secant_defect: self.secant_defect,
            fano_index: self.fano_index,
            warnings,
        })
    }
}

/// Reads and validates a variety document.
pub fn load_variety(path: &Path) -> Result<VarietySpec> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))?;
    VarietySpec::from_json(&text)
}

impl VarietySpec {
    pub fn from_json(text: &str) -> Result<VarietySpec> {
        let doc: VarietyDocument = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        doc.into_spec()
    }

    /// Number of equations `m`.
    pub fn m(&self) -> usize {
        self.equations.len()
    }

    pub fn nvars(&self) -> usize {
        self.ambient_dim + 1
    }

    pub fn degree_sum(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).sum()
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn parse_point(&self, text: &str) -> Result<ProjectivePoint> {
        ProjectivePoint::parse(self.field, text, self.nvars())
    }

    pub fn contains(&self, pt: &ProjectivePoint) -> Result<bool> {
        if pt.len() != self.nvars() {
            return Err(Error::PointLength { expected: self.nvars(), got: pt.len() });
        }
        for g in &self.equations {
            if !g.evaluate(pt.coords())?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn require_point(&self, pt: &ProjectivePoint) -> Result<()> {
        if self.contains(pt)? {
            Ok(())
        } else {
            Err(Error::PointNotOnVariety { point: pt.to_string() })
        }
    }

    /// The same variety with coefficients reduced modulo `p`.
    pub fn reduce_mod(&self, p: u32) -> Result<VarietySpec> {
        let equations = self.equations.iter().map(|g| g.reduce_mod(p)).collect::<Result<Vec<_>>>()?;
        let mut warnings = self.warnings.clone();
        for (i, (g, d)) in equations.iter().zip(&self.degrees).enumerate() {
            if g.is_zero() || g.total_degree() != Some(*d) {
                warnings.push(format!("equation {i} degenerates modulo {p}"));
            }
        }
        Ok(VarietySpec { field: Field::prime(p as u64)?, equations, warnings, ..self.clone() })
    }
}

/// Rank of the Jacobian matrix `(∂G_i/∂x_j)` at a point of `X`.
pub fn jacobian_rank_at(x: &VarietySpec, pt: &ProjectivePoint) -> Result<usize> {
    x.require_point(pt)?;
    let rows: Vec<Vec<Scalar>> = x
        .equations
        .iter()
        .map(|g| (0..x.nvars()).map(|j| g.derivative(j).evaluate(pt.coords())).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    Ok(linalg::rank(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn document_defaults_and_sorting() {
        let spec = VarietySpec::from_json(r#"{"name":"ci","ambient_dim":4,"equations":["x0*x1","x0^3 - x1*x2*x3"]}"#).unwrap();
        assert_eq!(spec.degrees, vec![3, 2]);
        assert_eq!(spec.field, Field::Rational);
        assert!(!spec.smooth && !spec.scheme_theoretic);
        assert!(spec.warnings.iter().any(|w| w.contains("reordered")));
    }

    #[test]
    fn rejects_bad_documents() {
        let bad = [
            r#"{"name":"a","ambient_dim":3,"equations":["x0^2 + x1"]}"#,
            r#"{"name":"a","ambient_dim":3,"equations":["0"]}"#,
            r#"{"name":"a","ambient_dim":3,"equations":[]}"#,
            r#"{"name":"a","ambient_dim":3,"equations":["x4"]}"#,
            r#"{"name":"a","ambient_dim":3,"equations":["x0"],"claimed_dim":3}"#,
            r#"{"name":"a","ambient_dim":3,"equations":["x0"],"bogus":1}"#,
            r#"{"name":"a","ambient_dim":3}"#,
        ];
        for doc in bad {
            assert!(VarietySpec::from_json(doc).is_err(), "{doc}");
        }
        let err = VarietySpec::from_json(bad[0]).unwrap_err();
        assert!(matches!(err, Error::NotHomogeneous { index: 0, .. }));
    }

    #[test]
    fn linear_equation_warns() {
        let spec = VarietyDocument::new("plane", 3, &["x0"]).into_spec().unwrap();
        assert!(spec.warnings[0].contains("degenerate"));
    }

    #[test]
    fn jacobian_examples() {
        let q = VarietyDocument::new("q", 3, &["x0*x3 - x1*x2"]).into_spec().unwrap();
        let pt = ProjectivePoint::from_i64(Field::Rational, &[1, 0, 0, 0]).unwrap();
        assert_eq!(jacobian_rank_at(&q, &pt).unwrap(), 1);
        let cone = VarietyDocument::new("cone", 3, &["x0*x2 - x1^2"]).into_spec().unwrap();
        let vertex = ProjectivePoint::from_i64(Field::Rational, &[0, 0, 0, 1]).unwrap();
        assert_eq!(jacobian_rank_at(&cone, &vertex).unwrap(), 0);
        let off = ProjectivePoint::from_i64(Field::Rational, &[1, 0, 0, 1]).unwrap();
        assert!(matches!(jacobian_rank_at(&q, &off), Err(Error::PointNotOnVariety { .. })));
    }
}
