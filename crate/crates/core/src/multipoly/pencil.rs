use super::point::ProjectivePoint;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// Coefficients of `G(u·x + v·p)` as polynomials in the coordinates of `p`.
///
/// Entry `k - 1` is the coefficient of `u^(d-k) v^k` for `k = 1..=d`, so it is
/// homogeneous of degree `k` and the last entry is `G` itself. The `u^d`
/// coefficient equals `G(x)`; it must vanish and is dropped.
pub fn expand_line_pencil(g: &Polynomial, x: &ProjectivePoint) -> Result<Vec<Polynomial>> {
    let n = g.nvars();
    if x.len() != n {
        return Err(Error::PointLength { expected: n, got: x.len() });
    }
    if !g.is_homogeneous() {
        return Err(Error::NotHomogeneous { index: 0, text: g.to_string() });
    }
    let d = match g.total_degree() {
        Some(d) if d >= 1 => d,
        other => return Err(Error::DegreeTooLow { degree: other.unwrap_or(0) }),
    };
    let value = g.evaluate(x.coords())?;
    if !value.is_zero() {
        return Err(Error::BaseNotOnHypersurface { point: x.to_string(), value: value.to_string() });
    }

    // ring: p_0..p_{n-1}, u, v
    let field = g.field();
    let u = Polynomial::var(n + 2, field, n);
    let v = Polynomial::var(n + 2, field, n + 1);
    let images: Vec<Polynomial> = (0..n)
        .map(|j| {
            let pj = Polynomial::var(n + 2, field, j);
            &u.scale(&x.coords()[j]) + &(&v * &pj)
        })
        .collect();
    let expanded = g.substitute(&images)?;

    let mut buckets: Vec<Vec<_>> = vec![Vec::new(); d as usize + 1];
    for (m, c) in expanded.terms() {
        let exps = m.exponents();
        let k = exps[n + 1] as usize;
        debug_assert_eq!(exps[n] + exps[n + 1], d);
        let trimmed = super::Monomial::from_exponents(exps[..n].to_vec());
        buckets[k].push((trimmed, c.clone()));
    }
    debug_assert!(buckets[0].is_empty(), "u^d coefficient is G(x)");
    Ok(buckets
        .into_iter()
        .skip(1)
        .map(|terms| Polynomial::from_terms(n, field, terms))
        .collect())
}
