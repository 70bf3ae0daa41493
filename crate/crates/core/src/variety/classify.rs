//! Arithmetic consequences of the line-family bounds for `(n, c, a, δ, i)`.

use serde::Serialize;

use super::criteria::superscript;

fn sup(v: i64) -> String {
    superscript(v.max(0) as usize)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassificationInputs {
    pub n: i64,
    pub c: i64,
    pub a: i64,
    pub delta: Option<i64>,
    pub index: Option<i64>,
}

/// A variety from the classification lists, with whether its invariants match the inputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub name: &'static str,
    pub embedding: String,
    pub n: i64,
    pub c: i64,
    pub matches_inputs: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub remark: Option<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub key: &'static str,
    pub statement: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub candidates: Vec<Candidate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub inputs: ClassificationInputs,
    /// `a ≥ n − c`: every line of the family is a contact line.
    pub contact_regime: bool,
    /// `(n+c−3)/2`, rendered exactly.
    pub upper_bound: String,
    /// `a ≤ (n+c−3)/2`; only meaningful in the contact regime.
    pub bound_holds: Option<bool>,
    pub border_case: bool,
    pub dual_defect: Option<i64>,
    pub consistent: bool,
    pub findings: Vec<Finding>,
}

impl ClassificationReport {
    pub fn finding(&self, key: &str) -> Option<&Finding> {
        self.findings.iter().find(|f| f.key == key)
    }

    pub fn candidate_names(&self) -> Vec<&'static str> {
        let mut v: Vec<&'static str> = self.findings.iter().flat_map(|f| f.candidates.iter().map(|c| c.name)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

fn half(twice: i64) -> String {
    if twice % 2 == 0 {
        (twice / 2).to_string()
    } else {
        format!("{twice}/2")
    }
}

fn segre(n: i64, c: i64) -> Candidate {
    Candidate {
        name: "Segre P1 x P(n-1)",
        embedding: format!("ℙ¹×ℙ{} ⊂ ℙ{}", sup(n - 1), sup(2 * n - 1)),
        n,
        c: n - 1,
        matches_inputs: c == n - 1 && n >= 3,
        remark: None,
    }
}

fn grassmannian(n: i64, c: i64) -> Candidate {
    Candidate {
        name: "Grassmannian G(1,4)",
        embedding: "𝔾(1,4) ⊂ ℙ⁹".into(),
        n: 6,
        c: 3,
        matches_inputs: n == 6 && c == 3,
        remark: None,
    }
}

fn spinor(n: i64, c: i64) -> Candidate {
    Candidate {
        name: "Spinor variety S10",
        embedding: "𝕊¹⁰ ⊂ ℙ¹⁵".into(),
        n: 10,
        c: 5,
        matches_inputs: n == 10 && c == 5,
        remark: None,
    }
}

/// Reports which line-family statements apply to `(n, c, a)` and optional `δ`, `i`.
pub fn classify_line_family(n: i64, c: i64, a: i64, delta: Option<i64>, index: Option<i64>) -> ClassificationReport {
    let inputs = ClassificationInputs { n, c, a, delta, index };
    let mut findings = Vec::new();
    let mut consistent = true;

    if n < 1 || c < 1 || a < 0 {
        findings.push(Finding {
            key: "invalid",
            statement: "inputs must satisfy n ≥ 1, c ≥ 1, a ≥ 0".into(),
            candidates: vec![],
        });
        return ClassificationReport {
            inputs,
            contact_regime: false,
            upper_bound: half(n + c - 3),
            bound_holds: None,
            border_case: false,
            dual_defect: None,
            consistent: false,
            findings,
        };
    }

    let contact = a >= n - c;
    let bound_holds = contact.then_some(2 * a <= n + c - 3);
    if contact {
        findings.push(Finding {
            key: "contact_regime",
            statement: format!("a = {a} ≥ n − c = {}: every line is a contact line, so X is not a complete intersection", n - c),
            candidates: vec![],
        });
        if bound_holds == Some(true) {
            findings.push(Finding {
                key: "upper_bound",
                statement: format!("a = {a} ≤ (n+c−3)/2 = {}", half(n + c - 3)),
                candidates: vec![],
            });
        } else {
            consistent = false;
            findings.push(Finding {
                key: "inconsistent",
                statement: format!(
                    "inconsistent inputs: a ≥ n − c forces a ≤ (n+c−3)/2 = {}, but a = {a}",
                    half(n + c - 3)
                ),
                candidates: vec![],
            });
        }
    }

    if 2 * a >= n + c - 2 {
        let ok = n >= 3 * c;
        if !ok {
            consistent = false;
        }
        findings.push(Finding {
            key: "conic_connected",
            statement: if ok {
                format!("a ≥ (n+c−2)/2 = {}: X is CC and n ≥ 3c ({n} ≥ {})", half(n + c - 2), 3 * c)
            } else {
                format!(
                    "a ≥ (n+c−2)/2 = {} would make X CC with n ≥ 3c, but n = {n} < {}: inconsistent inputs",
                    half(n + c - 2),
                    3 * c
                )
            },
            candidates: vec![],
        });
    }

    let border_equality = 2 * a == n + c - 3;
    let border_case = border_equality && contact;
    let mut dual_defect = None;
    if border_case {
        dual_defect = Some(c - 1);
        let mut candidates = Vec::new();
        if n <= 2 * c {
            candidates = vec![segre(n, c), grassmannian(n, c), spinor(n, c)];
        }
        findings.push(Finding {
            key: "border_case",
            statement: if n <= 2 * c {
                format!(
                    "border case a = (n+c−3)/2 = {a}: X is dual defective with dim X* = dim X and dual defect k = c − 1 = {}; since n ≤ 2c, X is one of the listed varieties",
                    c - 1
                )
            } else {
                format!(
                    "border case a = (n+c−3)/2 = {a}: X is dual defective with dim X* = dim X and dual defect k = c − 1 = {}",
                    c - 1
                )
            },
            candidates,
        });
    }
    if border_equality && c <= 2 && n <= 2 * c {
        findings.push(Finding {
            key: "quadric_surface",
            statement: "border equality with c ≤ 2 and n ≤ 2c: the two-dimensional quadric is the only additional case; it lies outside the main hypothesis chain (a ≥ n − c is not assumed)".into(),
            candidates: vec![Candidate {
                name: "quadric surface",
                embedding: "Q² ⊂ ℙ³".into(),
                n: 2,
                c: 1,
                matches_inputs: n == 2 && c == 1,
                remark: Some("outside the main hypothesis chain"),
            }],
        });
    }

    // prime Fano varieties of high index
    let i = index.unwrap_or(a + 2);
    if let Some(given) = index {
        if given != a + 2 {
            consistent = false;
            findings.push(Finding {
                key: "index_mismatch",
                statement: format!("inconsistent inputs: a prime Fano variety covered by lines has i = a + 2 = {}, but i = {given}", a + 2),
                candidates: vec![],
            });
        }
    }
    let min_delta = n - c + 1;
    let d = delta.unwrap_or(min_delta);
    if d < min_delta {
        consistent = false;
        findings.push(Finding {
            key: "delta_too_small",
            statement: format!("inconsistent inputs: δ ≥ n − c + 1 = {min_delta}, but δ = {d}"),
            candidates: vec![],
        });
    }
    if 2 * i >= n + d {
        let assumed = match (index, delta) {
            (Some(_), Some(_)) => String::new(),
            (None, Some(_)) => " (taking i = a + 2)".into(),
            (Some(_), None) => format!(" (taking the smallest admissible δ = {min_delta})"),
            (None, None) => format!(" (taking i = a + 2 and the smallest admissible δ = {min_delta})"),
        };
        let head = format!("high index i = {i} ≥ (n+δ)/2 = {}{assumed}", half(n + d));
        let finding = if c == 1 {
            Finding {
                key: "high_index_quadric",
                statement: format!("{head}: X is a quadric"),
                candidates: vec![Candidate {
                    name: "quadric hypersurface",
                    embedding: format!("Q{} ⊂ ℙ{}", sup(n), sup(n + 1)),
                    n,
                    c: 1,
                    matches_inputs: true,
                    remark: None,
                }],
            }
        } else if c == 2 {
            consistent = false;
            Finding {
                key: "high_index_contradiction",
                statement: format!("{head}: impossible for a non-degenerate X of codimension 2"),
                candidates: vec![],
            }
        } else if n > 2 * c {
            consistent = false;
            Finding {
                key: "high_index_contradiction",
                statement: format!("{head}: forces n ≤ 2c, but n = {n} > {}", 2 * c),
                candidates: vec![],
            }
        } else if n == 2 * c {
            Finding {
                key: "high_index_lqel",
                statement: format!("{head}: c ≥ 3 and n ≤ 2c; if X is CC it is LQEL; since n = 2c, X is one of the listed varieties"),
                candidates: vec![grassmannian(n, c), spinor(n, c)],
            }
        } else {
            Finding {
                key: "high_index_lqel",
                statement: format!("{head}: c ≥ 3 and n ≤ 2c; if X is CC it is LQEL"),
                candidates: vec![],
            }
        };
        findings.push(finding);
    }

    if contact && n > 2 * c {
        findings.push(Finding {
            key: "conjectural_bound",
            statement: format!("a ≥ n − c with n = {n} > 2c = {}: conjecturally impossible for a non-degenerate X", 2 * c),
            candidates: vec![],
        });
    }

    ClassificationReport {
        inputs,
        contact_regime: contact,
        upper_bound: half(n + c - 3),
        bound_holds,
        border_case,
        dual_defect,
        consistent,
        findings,
    }
}
