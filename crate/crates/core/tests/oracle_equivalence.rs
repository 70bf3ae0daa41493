use std::collections::BTreeSet;

use ccv_core::conicfinder::{conic_system, find_singular_conics, ConicSearch, SearchMode};
use ccv_core::fforacle::{to_point, FfVariety, DEFAULT_POINT_CAP};
use ccv_core::linelocus::line_locus;
use ccv_core::multipoly::ProjectivePoint;
use ccv_core::variety::{VarietyDocument, VarietySpec};

fn quadric_mod(p: u32) -> VarietySpec {
    VarietyDocument::new("quadric", 3, &["x0*x3 - x1*x2"]).into_spec().unwrap().reduce_mod(p).unwrap()
}

fn set(v: Vec<ProjectivePoint>) -> BTreeSet<ProjectivePoint> {
    v.into_iter().collect()
}

fn check_quadric(p: u32) {
    let x = quadric_mod(p);
    let ff = FfVariety::new(&x, p, DEFAULT_POINT_CAP).unwrap();
    let points: Vec<ProjectivePoint> = ff.rational_points().iter().map(|c| to_point(c, p)).collect();
    assert_eq!(points.len() as u32, (p + 1) * (p + 1));
    for a in &points {
        let locus = line_locus(&x, a).unwrap();
        assert_eq!(set(ff.zero_set(&locus.ideal_generators).unwrap()), set(ff.brute_line_locus(a).unwrap()), "{a}");
    }
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            let sys = conic_system(&x, a, b).unwrap();
            let symbolic = set(ff.zero_set(&sys.generators).unwrap());
            let brute = set(ff.brute_singular_conics(a, b).unwrap().into_iter().map(|s| s.vertex).collect());
            assert_eq!(symbolic, brute, "{a} {b}");
        }
    }
}

#[test]
fn quadric_gf5_all_pairs() {
    check_quadric(5);
}

#[test]
fn quadric_gf7_all_pairs() {
    check_quadric(7);
}

#[test]
fn finite_field_search_matches_brute_force() {
    let x = quadric_mod(5);
    let ff = FfVariety::new(&x, 5, DEFAULT_POINT_CAP).unwrap();
    let a = x.parse_point("1,0,0,0").unwrap();
    let b = x.parse_point("0,0,0,1").unwrap();
    let ConicSearch::Finite { solutions } = find_singular_conics(&x, &a, &b, SearchMode::FiniteField(5), DEFAULT_POINT_CAP).unwrap()
    else {
        panic!("expected finitely many vertices");
    };
    assert_eq!(solutions, ff.brute_singular_conics(&a, &b).unwrap());
}

#[test]
fn smooth_quadric_threefold_cone_over_gf5() {
    let x = VarietyDocument::new("q3", 4, &["x0*x4 - x1*x3 + x2^2"]).into_spec().unwrap().reduce_mod(5).unwrap();
    let ff = FfVariety::new(&x, 5, DEFAULT_POINT_CAP).unwrap();
    let e0 = x.parse_point("1,0,0,0,0").unwrap();
    let brute = ff.brute_line_locus(&e0).unwrap();
    // vertex plus five further points on each of the six lines over a conic in ℙ²(𝔽₅)
    assert_eq!(brute.len(), 31);
    let locus = line_locus(&x, &e0).unwrap();
    assert_eq!(set(ff.zero_set(&locus.ideal_generators).unwrap()), set(brute));
    assert_eq!(locus.summary.projective_dimension, 2);
    assert_eq!(locus.a(), 1);
}

#[test]
fn partitioned_scans_match_a_single_worker() {
    let x = VarietyDocument::new("fermat", 4, &["x0^3 + x1^3 + x2^3 + x3^3 + x4^3"]).into_spec().unwrap().reduce_mod(7).unwrap();
    let single = FfVariety::new(&x, 7, DEFAULT_POINT_CAP).unwrap().with_workers(1);
    for workers in [2, 3, 8, 64] {
        let split = FfVariety::new(&x, 7, DEFAULT_POINT_CAP).unwrap().with_workers(workers);
        assert_eq!(single.rational_points(), split.rational_points());
        let a = x.parse_point("1,-1,0,0,0").unwrap();
        assert_eq!(single.brute_line_locus(&a).unwrap(), split.brute_line_locus(&a).unwrap());
        assert_eq!(single.cc_census(20, 5).unwrap(), split.cc_census(20, 5).unwrap());
    }
}
