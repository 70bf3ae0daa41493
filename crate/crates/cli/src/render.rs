//! Text renderings. Every number shown here is also present in the JSON form.

use std::fmt::Write;

use ccv_core::conicfinder::{ConicSearch, ConicSystem, CountResult};
use ccv_core::fforacle::OracleStats;
use ccv_core::linelocus::{LineLocus, LinesReport};
use ccv_core::variety::{ClassificationReport, CriterionReport};

use crate::RunConfig;

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "n/a".to_string(), |v| v.to_string())
}

pub fn config_line(c: &RunConfig) -> String {
    let mut parts = vec![format!("command={}", c.command)];
    let mut push = |k: &str, v: Option<String>| {
        if let Some(v) = v {
            parts.push(format!("{k}={v}"));
        }
    };
    push("file", c.file.clone());
    push("point", c.point.clone());
    push("x", c.x.clone());
    push("y", c.y.clone());
    push("prime", c.prime.map(|v| v.to_string()));
    push("pairs", c.pairs.map(|v| v.to_string()));
    push("seed", c.seed.map(|v| v.to_string()));
    push("count_only", c.count_only.map(|v| v.to_string()));
    push("n", c.n.map(|v| v.to_string()));
    push("c", c.c.map(|v| v.to_string()));
    push("a", c.a.map(|v| v.to_string()));
    push("delta", c.delta.map(|v| v.to_string()));
    push("index", c.index.map(|v| v.to_string()));
    push("point_cap", c.point_cap.clone());
    push("format", Some(c.format.to_string()));
    format!("# {}\n", parts.join(" "))
}

pub fn criteria(r: &CriterionReport) -> String {
    let mut s = String::new();
    let degrees: Vec<String> = r.degrees.iter().map(|d| d.to_string()).collect();
    writeln!(s, "variety: {}", r.variety).unwrap();
    writeln!(s, "ambient: P^{}, {} equations of degrees ({}), sum {}", r.ambient_dim, r.equation_count, degrees.join(", "), r.degree_sum).unwrap();
    writeln!(
        s,
        "dimension: {} (codimension {}, {:?})",
        opt(&r.dimension),
        opt(&r.codimension),
        r.dimension_source
    )
    .unwrap();
    writeln!(s, "smooth: {}, scheme-theoretic: {}", r.smooth, r.scheme_theoretic).unwrap();
    for e in &r.entries {
        writeln!(s, "{e}").unwrap();
        writeln!(s, "  {}", e.conclusion).unwrap();
    }
    writeln!(s, "caveat: {}", r.caveat).unwrap();
    s
}

pub fn lines(l: &LineLocus, r: &LinesReport) -> String {
    let mut s = String::new();
    writeln!(s, "base point: {}", l.base_point).unwrap();
    writeln!(s, "cone of lines, {} generators:", l.ideal_generators.len()).unwrap();
    for g in &l.ideal_generators {
        writeln!(s, "  {g}").unwrap();
    }
    writeln!(s, "cone dimension: {}, degree: {}", r.locus_dimension, opt(&r.locus_degree)).unwrap();
    writeln!(s, "a = dim L_x = {}", r.a).unwrap();
    writeln!(s, "lower bounds: a >= N-1-sum(d) = {}, cone dimension >= {}", r.lines_lower_bound, r.locus_lower_bound).unwrap();
    writeln!(s, "meets bound: {}, at bound: {}, covered by lines here: {}", r.meets_bound, r.at_bound, r.covered_by_lines_here).unwrap();
    if let Some(c) = &r.classification {
        s.push_str("line-family classification:\n");
        for line in classification(c).lines() {
            writeln!(s, "  {line}").unwrap();
        }
    }
    writeln!(s, "caveat: {}", r.caveat).unwrap();
    s
}

pub fn conics(sys: &ConicSystem, search: Option<&ConicSearch>, count: &CountResult) -> String {
    let mut s = String::new();
    writeln!(s, "x = {}, y = {}", sys.x, sys.y).unwrap();
    writeln!(s, "conic system, {} generators:", sys.generators.len()).unwrap();
    for g in &sys.generators {
        writeln!(s, "  {g}").unwrap();
    }
    match search {
        Some(ConicSearch::Finite { solutions }) => {
            let proper = solutions.iter().filter(|c| !c.degenerate).count();
            writeln!(s, "singular conics: {} ({} non-degenerate)", solutions.len(), proper).unwrap();
            for c in solutions {
                writeln!(s, "  {c}").unwrap();
            }
        }
        Some(ConicSearch::Infinite { summary }) => {
            writeln!(
                s,
                "singular conics: infinitely many (vertex locus of dimension {}, degree {})",
                summary.projective_dimension,
                opt(&summary.degree)
            )
            .unwrap();
        }
        None => {}
    }
    let degrees: Vec<String> = count.generator_degrees.iter().map(|d| d.to_string()).collect();
    writeln!(s, "generators: {} of degrees ({})", count.generator_count, degrees.join(", ")).unwrap();
    writeln!(s, "projective dimension: {}", count.projective_dimension).unwrap();
    writeln!(s, "ideal degree: {}", opt(&count.ideal_degree)).unwrap();
    writeln!(s, "bezout bound: {}", count.bezout_bound).unwrap();
    writeln!(s, "formula value: {} (applicable: {})", count.formula_value, count.formula_applicable).unwrap();
    writeln!(s, "equality case: {}", count.equality_case).unwrap();
    writeln!(s, "agrees with formula: {}", opt(&count.agrees_with_formula)).unwrap();
    writeln!(s, "note: {}", count.note).unwrap();
    s
}

pub fn census(st: &OracleStats) -> String {
    let mut s = String::new();
    writeln!(s, "GF({}) points on X: {}", st.p, st.rational_points).unwrap();
    writeln!(s, "pairs tested: {} (seed {})", st.pairs_tested, st.seed).unwrap();
    writeln!(s, "connected: {} (fraction {:?})", st.pairs_connected, st.connected_fraction).unwrap();
    writeln!(s, "with a non-degenerate singular conic: {}", st.pairs_with_conic).unwrap();
    writeln!(s, "on a common line of X: {}", st.pairs_on_common_line).unwrap();
    s.push_str("conic-count histogram:\n");
    for b in &st.histogram {
        writeln!(s, "  {} conics: {} pairs", b.count, b.pairs).unwrap();
    }
    writeln!(s, "modal count: {}", opt(&st.modal_count)).unwrap();
    writeln!(s, "caveat: {}", st.caveat).unwrap();
    s
}

pub fn classification(r: &ClassificationReport) -> String {
    let mut s = String::new();
    let i = &r.inputs;
    writeln!(s, "inputs: n={} c={} a={} delta={} index={}", i.n, i.c, i.a, opt(&i.delta), opt(&i.index)).unwrap();
    writeln!(s, "contact regime (a >= n-c): {}", r.contact_regime).unwrap();
    writeln!(s, "upper bound (n+c-3)/2 = {}, holds: {}", r.upper_bound, opt(&r.bound_holds)).unwrap();
    writeln!(s, "border case: {}", r.border_case).unwrap();
    writeln!(s, "dual defect: {}", opt(&r.dual_defect)).unwrap();
    writeln!(s, "consistent: {}", r.consistent).unwrap();
    for f in &r.findings {
        writeln!(s, "[{}] {}", f.key, f.statement).unwrap();
        for c in &f.candidates {
            write!(s, "  candidate: {} in {} (n={}, c={}, matches: {})", c.name, c.embedding, c.n, c.c, c.matches_inputs).unwrap();
            if let Some(rm) = c.remark {
                write!(s, "; {rm}").unwrap();
            }
            s.push('\n');
        }
    }
    s
}
