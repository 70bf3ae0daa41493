//! One line per acceptance criterion; exits non-zero if any fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use ccv_core::conicfinder::{conic_system, count_conics, find_singular_conics, ConicSearch, SearchMode};
use ccv_core::exactmath::{Field, Scalar};
use ccv_core::fforacle::{to_point, FfVariety, DEFAULT_POINT_CAP};
use ccv_core::groebner::{buchberger, ideal_dimension_and_degree, MonomialOrder};
use ccv_core::linelocus::{line_locus, lines_dimension_report};
use ccv_core::multipoly::{Monomial, Polynomial, ProjectivePoint};
use ccv_core::variety::{classify_line_family, criteria_report, load_variety, Verdict, VarietyDocument, VarietySpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn variety(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../varieties").join(name)
}

fn spec(name: &str) -> VarietySpec {
    load_variety(&variety(name)).expect("fixture loads")
}

fn ccv_json(args: &[&str]) -> Result<Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_ccv")).args(args).arg("--json").output().map_err(|e| e.to_string())?;
    ensure!(out.status.code() == Some(0), "ccv {:?} exited with {:?}", args, out.status.code());
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

fn within(t: Instant, limit: Duration) -> Result<Duration, String> {
    let e = t.elapsed();
    ensure!(e < limit, "took {e:?}, limit {limit:?}");
    Ok(e)
}

fn criterion_1() -> Outcome {
    let x = spec("quadric_p3.json");
    let (a, b) = (x.parse_point("1,0,0,0").unwrap(), x.parse_point("0,0,0,1").unwrap());
    let t = Instant::now();
    let search = find_singular_conics(&x, &a, &b, SearchMode::Symbolic, DEFAULT_POINT_CAP).map_err(|e| e.to_string())?;
    let count = count_conics(&x, &a, &b).map_err(|e| e.to_string())?;
    let elapsed = within(t, Duration::from_secs(1))?;
    let ConicSearch::Finite { solutions } = search else { return Err("infinitely many vertices".into()) };
    let shown: Vec<String> = solutions
        .iter()
        .filter(|s| !s.degenerate)
        .map(|s| format!("{} ∪ {}", s.line_xp.as_ref().unwrap(), s.line_yp.as_ref().unwrap()))
        .collect();
    let expected = ["{x2 = x3 = 0} ∪ {x0 = x2 = 0}", "{x1 = x3 = 0} ∪ {x0 = x1 = 0}"];
    ensure!(solutions.len() == 2 && shown == expected, "conics {shown:?}");
    ensure!(count.ideal_degree == Some(2) && count.formula_value == 2 && count.equality_case, "count {count:?}");
    // same facts through the command line
    let v = ccv_json(&["conics", variety("quadric_p3.json").to_str().unwrap(), "--x", "1,0,0,0", "--y", "0,0,0,1"])?;
    let sols = v["result"]["search"]["solutions"].as_array().ok_or("no solutions")?;
    ensure!(sols.len() == 2 && v["result"]["count"]["ideal_degree"] == 2, "cli output {v}");
    Ok(format!("2 conics {expected:?}, degree 2 = C = 2, equality case, {elapsed:?}"))
}

/// Projective dimension of the equations plus all maximal Jacobian minors, mod `p`.
fn singular_locus_dimension(x: &VarietySpec, p: u32) -> Result<i64, String> {
    let eqs: Vec<Polynomial> = x.equations.iter().map(|g| g.reduce_mod(p).unwrap()).collect();
    ensure!(eqs.len() == 2, "expected two equations");
    let n = x.nvars();
    let d: Vec<Vec<Polynomial>> = eqs.iter().map(|g| (0..n).map(|i| g.derivative(i)).collect()).collect();
    let mut gens = eqs.clone();
    for i in 0..n {
        for j in i + 1..n {
            let m = d[0][i].try_mul(&d[1][j]).unwrap().try_sub(&d[0][j].try_mul(&d[1][i]).unwrap()).unwrap();
            if !m.is_zero() {
                gens.push(m);
            }
        }
    }
    Ok(ideal_dimension_and_degree(&gens).map_err(|e| e.to_string())?.projective_dimension)
}

fn criterion_2() -> Outcome {
    let x = spec("two_quadrics_p6.json");
    let (a, b) = (x.parse_point("1,0,0,0,0,0,0").unwrap(), x.parse_point("0,0,0,0,0,0,1").unwrap());
    let t = Instant::now();
    let count = count_conics(&x, &a, &b).map_err(|e| e.to_string())?;
    let elapsed = within(t, Duration::from_secs(30))?;
    ensure!(count.ideal_degree == Some(4), "ideal degree {:?}", count.ideal_degree);
    ensure!(count.formula_value == 4 && count.equality_case, "{count:?}");
    ensure!(2 * x.degree_sum() as i64 - 2 == 6 && x.ambient_dim == 6, "not the equality case");
    let sing = singular_locus_dimension(&x, 32003)?;
    ensure!(sing < 0, "singular locus mod 32003 has dimension {sing}");
    let v = ccv_json(&[
        "conics",
        variety("two_quadrics_p6.json").to_str().unwrap(),
        "--x",
        "1,0,0,0,0,0,0",
        "--y",
        "0,0,0,0,0,0,1",
        "--count-only",
    ])?;
    ensure!(v["result"]["count"]["ideal_degree"] == 4 && v["result"]["search"].is_null(), "cli output {v}");
    Ok(format!("degree 4 = 2!·1!·2!·1!, 2·4−2 = 6 = N, smooth mod 32003, {elapsed:?}"))
}

fn criterion_3() -> Outcome {
    let x = spec("fermat3_p5.json");
    let (a, b) = (x.parse_point("3,4,5,-6,1,-1").unwrap(), x.parse_point("2,1,-2,6,8,-9").unwrap());
    let t = Instant::now();
    let sys = conic_system(&x, &a, &b).map_err(|e| e.to_string())?;
    let count = count_conics(&x, &a, &b).map_err(|e| e.to_string())?;
    let elapsed = within(t, Duration::from_secs(60))?;
    ensure!(sys.generators.len() == 5, "{} generators", sys.generators.len());
    ensure!(count.projective_dimension == 0, "dimension {}", count.projective_dimension);
    ensure!(count.ideal_degree == Some(12) && count.formula_value == 12 && count.equality_case, "{count:?}");
    Ok(format!("5 generators, degree 12 = 3!·2!, 2·3−1 = 5 = N, {elapsed:?}"))
}

fn verdict(x: &VarietySpec, key: &str) -> Result<(String, Verdict, Option<String>), String> {
    let r = criteria_report(x);
    let e = r.entry(key).ok_or(format!("missing {key}"))?;
    Ok((e.inequality.clone(), e.verdict, e.note.clone()))
}

fn criterion_4() -> Outcome {
    let q = spec("quadric_p3.json");
    ensure!(verdict(&q, "singular_conic")?.0 == "2 ≤ 2" && verdict(&q, "singular_conic")?.1 == Verdict::Holds, "quadric");
    let f = spec("fermat3_p4.json");
    let (ineq, v, note) = verdict(&f, "singular_conic")?;
    ensure!(ineq == "3 ≤ 5/2" && v == Verdict::Fails, "cubic: {ineq} {v}");
    ensure!(note.as_deref() == Some("sharpness context: cubic in ℙ⁴"), "cubic note {note:?}");
    let (ineq, v, _) = verdict(&f, "covered_by_lines")?;
    ensure!(ineq == "3 ≤ 3" && v == Verdict::Holds, "cubic lines: {ineq} {v}");
    let t = spec("two_quadrics_p6.json");
    for key in ["singular_conic", "smooth_conic"] {
        let (ineq, v, _) = verdict(&t, key)?;
        ensure!(ineq == "4 ≤ 4" && v == Verdict::Holds, "two quadrics {key}: {ineq} {v}");
    }
    let out = Command::new(env!("CARGO_BIN_EXE_ccv")).arg("check").arg(variety("fermat3_p4.json")).output().unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    ensure!(text.contains("singular-conic criterion: 3 ≤ 5/2 FAILS; sharpness context: cubic in ℙ⁴"), "check text");
    Ok("2 ≤ 2 holds; 3 ≤ 5/2 fails with 3 ≤ 3 lines and sharpness note; 4 ≤ 4 twice".into())
}

fn criterion_5() -> Outcome {
    let r = classify_line_family(6, 3, 3, None, None);
    ensure!(r.border_case && r.dual_defect == Some(2), "(6,3,3) {r:?}");
    ensure!(r.finding("border_case").unwrap().candidates.iter().any(|c| c.name == "Grassmannian G(1,4)" && c.matches_inputs), "G(1,4)");
    let r = classify_line_family(10, 5, 6, None, None);
    ensure!(r.finding("border_case").is_some_and(|f| f.candidates.iter().any(|c| c.name == "Spinor variety S10" && c.matches_inputs)), "(10,5,6)");
    for n in 2..12 {
        let r = classify_line_family(n, 1, n - 2, None, None);
        ensure!(r.candidate_names().iter().any(|c| c.starts_with("quadric")), "quadric branch missing for n = {n}");
    }
    let mut inconsistent = 0;
    for n in 1..=30 {
        for c in 1..=30 {
            for a in 0..=n {
                let r = classify_line_family(n, c, a, None, None);
                if a >= n - c && 2 * a > n + c - 3 {
                    ensure!(!r.consistent && r.finding("inconsistent").is_some(), "({n},{c},{a}) not flagged");
                    inconsistent += 1;
                }
            }
        }
    }
    Ok(format!("G(1,4) with k = 2, S10, quadric branch n = 2..11, {inconsistent} inconsistent triples flagged"))
}

fn criterion_6() -> Outcome {
    let t = Instant::now();
    let mut pairs = 0;
    for p in [5u32, 7] {
        let x = VarietyDocument::new("quadric", 3, &["x0*x3 - x1*x2"]).into_spec().unwrap().reduce_mod(p).unwrap();
        let ff = FfVariety::new(&x, p, DEFAULT_POINT_CAP).map_err(|e| e.to_string())?;
        let points: Vec<ProjectivePoint> = ff.rational_points().iter().map(|c| to_point(c, p)).collect();
        for a in &points {
            let locus = line_locus(&x, a).map_err(|e| e.to_string())?;
            let sym: BTreeSet<_> = ff.zero_set(&locus.ideal_generators).unwrap().into_iter().collect();
            let brute: BTreeSet<_> = ff.brute_line_locus(a).unwrap().into_iter().collect();
            ensure!(sym == brute, "line locus differs at {a} over GF({p})");
        }
        for (i, a) in points.iter().enumerate() {
            for b in &points[i + 1..] {
                let sys = conic_system(&x, a, b).map_err(|e| e.to_string())?;
                let sym: BTreeSet<_> = ff.zero_set(&sys.generators).unwrap().into_iter().collect();
                let brute: BTreeSet<_> = ff.brute_singular_conics(a, b).unwrap().into_iter().map(|s| s.vertex).collect();
                ensure!(sym == brute, "conic vertices differ at {a}, {b} over GF({p})");
                pairs += 1;
            }
        }
    }
    let elapsed = within(t, Duration::from_secs(120))?;
    Ok(format!("{pairs} pairs over GF(5) and GF(7), all loci equal, {elapsed:?}"))
}

fn criterion_7() -> Outcome {
    let q3 = spec("quadric_q3_p4.json");
    let e0 = q3.parse_point("1,0,0,0,0").unwrap();
    let locus = line_locus(&q3, &e0).map_err(|e| e.to_string())?;
    let report = lines_dimension_report(&locus, &q3);
    ensure!(locus.summary.projective_dimension == 2 && report.a == 1, "Q3: {report:?}");
    ensure!(report.lines_lower_bound == 1 && report.at_bound, "Q3 bound: {report:?}");
    let q5 = q3.reduce_mod(5).unwrap();
    let ff = FfVariety::new(&q5, 5, DEFAULT_POINT_CAP).unwrap();
    let e0p = q5.parse_point("1,0,0,0,0").unwrap();
    let brute: BTreeSet<_> = ff.brute_line_locus(&e0p).unwrap().into_iter().collect();
    let sym: BTreeSet<_> = ff.zero_set(&line_locus(&q5, &e0p).unwrap().ideal_generators).unwrap().into_iter().collect();
    ensure!(brute.len() == 31 && brute == sym, "GF(5) cross-check: {} points", brute.len());
    let g = spec("grassmannian_g14.json");
    let p = g.parse_point("1,0,0,0,0,0,0,0,0,0").unwrap();
    let gl = line_locus(&g, &p).map_err(|e| e.to_string())?;
    ensure!(gl.a() == 3, "G(1,4): a = {}", gl.a());
    Ok("Q3: cone dimension 2, a = 1 = N−1−Σd; 31 points over GF(5); G(1,4): a = 3".into())
}

fn random_poly(rng: &mut ChaCha8Rng, n: usize, field: Field) -> Polynomial {
    let terms = (0..rng.gen_range(1..=4))
        .map(|_| {
            let deg = rng.gen_range(0..=3u32);
            let mut e = vec![0u32; n];
            for _ in 0..deg {
                e[rng.gen_range(0..n)] += 1;
            }
            (Monomial::from_exponents(e), Scalar::from_i64(field, rng.gen_range(-5..=5)))
        })
        .collect();
    Polynomial::from_terms(n, field, terms)
}

fn criterion_8() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut checked = 0;
    let mut queries = 0;
    while checked < 40 {
        let field = if checked % 2 == 0 { Field::Rational } else { Field::Prime(32003) };
        let n = rng.gen_range(2..=5);
        let gens: Vec<Polynomial> = (0..rng.gen_range(2..=3)).map(|_| random_poly(&mut rng, n, field)).collect();
        if gens.iter().all(|g| g.is_zero()) {
            continue;
        }
        let grevlex = buchberger(&gens, MonomialOrder::GrevLex).map_err(|e| e.to_string())?;
        let lex = buchberger(&gens, MonomialOrder::Lex).map_err(|e| e.to_string())?;
        for b in [&grevlex, &lex] {
            ensure!(b.verify(), "S-pair check failed for {gens:?} ({})", b.order());
        }
        for _ in 0..5 {
            let f = random_poly(&mut rng, n, field);
            let h = random_poly(&mut rng, n, field);
            let member = f.try_mul(&gens[0]).unwrap().try_add(&h.try_mul(&gens[gens.len() - 1]).unwrap()).unwrap();
            for q in [&f, &member] {
                for b in [&grevlex, &lex] {
                    let r = b.normal_form(q);
                    ensure!(b.normal_form(&r) == r, "normal form not idempotent for {q}");
                }
                ensure!(grevlex.contains(q) == lex.contains(q), "membership differs for {q} in {gens:?}");
                queries += 1;
            }
            ensure!(grevlex.contains(&member), "combination {member} not a member");
        }
        checked += 1;
    }
    let elapsed = within(t, Duration::from_secs(60))?;
    Ok(format!("{checked} ideals, {queries} membership queries, {elapsed:?}"))
}

fn main() {
    let criteria: [(u32, fn() -> Outcome); 8] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
    ];
    let mut failed = 0;
    for (k, run) in criteria {
        match run() {
            Ok(detail) => println!("criterion {k}: PASS ({detail})"),
            Err(why) => {
                println!("criterion {k}: FAIL ({why})");
                failed += 1;
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
