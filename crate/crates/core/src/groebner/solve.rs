//! Rational zeros of zero-dimensional homogeneous systems.
//!
//! ℙᴺ is covered by the disjoint strata `x0 = … = x{j-1} = 0, xj = 1`; on each
//! stratum the affine system is solved by a lex basis, peeling off one
//! univariate polynomial in the smallest remaining variable at a time.

use num_rational::BigRational;

use super::{buchberger, rational_roots, MonomialOrder};
use crate::error::{Error, Result};
use crate::exactmath::{Field, Scalar};
use crate::multipoly::{Monomial, Polynomial, ProjectivePoint};

/// Largest prime for which univariate roots are found by exhaustive search.
const PRIME_SCAN_LIMIT: u32 = 1 << 20;

/// All zeros of a homogeneous system with coordinates in the base field.
///
/// Errors with [`Error::PositiveDimensional`] if some stratum carries infinitely many zeros.
pub fn rational_projective_zeros(gens: &[Polynomial]) -> Result<Vec<ProjectivePoint>> {
    let Some(first) = gens.first() else {
        return Err(Error::PositiveDimensional);
    };
    let (n, field) = (first.nvars(), first.field());
    if let Field::Prime(p) = field {
        if p > PRIME_SCAN_LIMIT {
            return Err(Error::Malformed(format!("root search over GF({p}) is not supported")));
        }
    }
    let mut out = Vec::new();
    for lead in 0..n {
        let mut values: Vec<Option<Scalar>> = vec![None; n];
        let mut chart: Vec<Polynomial> = gens.to_vec();
        for (j, slot) in values.iter_mut().enumerate().take(lead + 1) {
            let v = if j == lead { Scalar::one(field) } else { Scalar::zero(field) };
            chart = chart.iter().map(|g| g.substitute_value(j, &v)).collect();
            *slot = Some(v);
        }
        let free: Vec<usize> = (lead + 1..n).collect();
        solve_affine(chart, &free, values, &mut out)?;
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn solve_affine(
    gens: Vec<Polynomial>,
    free: &[usize],
    values: Vec<Option<Scalar>>,
    out: &mut Vec<ProjectivePoint>,
) -> Result<()> {
    let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    if gens.iter().any(|g| g.is_constant()) {
        return Ok(());
    }
    let Some(&last) = free.last() else {
        let coords = values.into_iter().map(|v| v.expect("every coordinate assigned")).collect();
        out.push(ProjectivePoint::new(coords)?);
        return Ok(());
    };
    if gens.is_empty() {
        return Err(Error::PositiveDimensional);
    }
    let basis = buchberger(&gens, MonomialOrder::Lex)?;
    if basis.is_unit() {
        return Ok(());
    }
    let univariate = basis
        .generators()
        .iter()
        .find(|g| g.variables() == [last])
        .ok_or(Error::PositiveDimensional)?;
    for root in roots_of(univariate, last)? {
        let next: Vec<Polynomial> = basis.generators().iter().map(|g| g.substitute_value(last, &root)).collect();
        let mut vals = values.clone();
        vals[last] = Some(root);
        solve_affine(next, &free[..free.len() - 1], vals, out)?;
    }
    Ok(())
}

fn roots_of(f: &Polynomial, var: usize) -> Result<Vec<Scalar>> {
    let n = f.nvars();
    let deg = f.total_degree().unwrap_or(0) as usize;
    match f.field() {
        Field::Rational => {
            let coeffs: Vec<BigRational> = (0..=deg)
                .map(|k| {
                    let mut e = vec![0; n];
                    e[var] = k as u32;
                    f.coefficient(&Monomial::from_exponents(e)).as_rational().cloned().expect("rational field")
                })
                .collect();
            Ok(rational_roots(&coeffs).into_iter().map(Scalar::Rational).collect())
        }
        field @ Field::Prime(p) => {
            let mut roots = Vec::new();
            let mut point = vec![Scalar::zero(field); n];
            for t in 0..p {
                point[var] = Scalar::from_i64(field, t as i64);
                if f.evaluate(&point)?.is_zero() {
                    roots.push(point[var].clone());
                }
            }
            Ok(roots)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::parse_polynomial;

    fn polys(src: &[&str], n: usize, field: Field) -> Vec<Polynomial> {
        src.iter().map(|s| parse_polynomial(s, n, field).unwrap()).collect()
    }

    fn pts(field: Field, rows: &[&[i64]]) -> Vec<ProjectivePoint> {
        let mut v: Vec<ProjectivePoint> = rows.iter().map(|r| ProjectivePoint::from_i64(field, r).unwrap()).collect();
        v.sort();
        v
    }

    #[test]
    fn quadric_system_vertices() {
        for field in [Field::Rational, Field::Prime(5)] {
            let got = rational_projective_zeros(&polys(&["x0", "x3", "x0*x3 - x1*x2"], 4, field)).unwrap();
            assert_eq!(got, pts(field, &[&[0, 1, 0, 0], &[0, 0, 1, 0]]));
        }
    }

    #[test]
    fn conic_meets_line() {
        let f = Field::Rational;
        let got = rational_projective_zeros(&polys(&["x0^2 + x1^2 - 25*x2^2", "x1 - 4*x2"], 3, f)).unwrap();
        assert_eq!(got, pts(f, &[&[3, 4, 1], &[-3, 4, 1]]));
        let got = rational_projective_zeros(&polys(&["x0^2 + x1^2 - x2^2 - x2^2", "x0 - x1"], 3, f)).unwrap();
        assert_eq!(got, pts(f, &[&[1, 1, 1], &[1, 1, -1]]));
        let got = rational_projective_zeros(&polys(&["x0^2 - 2*x2^2", "x0 - x1"], 3, f)).unwrap();
        assert!(got.is_empty());
    }

    #[test]
    fn positive_dimensional_refused() {
        let err = rational_projective_zeros(&polys(&["x0"], 4, Field::Rational)).unwrap_err();
        assert_eq!(err, Error::PositiveDimensional);
    }
}
