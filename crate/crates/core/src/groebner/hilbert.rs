//! Hilbert series of monomial ideals.
//!
//! For `I = (m_1, ..., m_r)` the numerator `N(t)` of `H(t) = N(t) / (1-t)^n`
//! satisfies `N(I) = N(I') − t^deg(m_r) · N(I' : m_r)` with `I' = (m_1..m_{r-1})`,
//! which is inclusion–exclusion over the generators with the colon ideal
//! collecting every term that contains `m_r`.

/// Coefficients of `N(t)`, lowest degree first.
pub fn hilbert_numerator(gens: &[Vec<u32>], nvars: usize) -> Vec<i64> {
    let gens: Vec<Vec<u32>> = gens.iter().map(|g| {
        debug_assert_eq!(g.len(), nvars);
        g.clone()
    }).collect();
    let mut n = numerator(gens);
    while n.len() > 1 && *n.last().unwrap() == 0 {
        n.pop();
    }
    n
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minimize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort_by_key(|g| g.iter().sum::<u32>());
    gens.dedup();
    let mut out: Vec<Vec<u32>> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| divides(h, &g)) {
            out.push(g);
        }
    }
    out
}

fn poly_sub_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, c) in b.iter().enumerate() {
        a[i + shift] -= c;
    }
}

fn numerator(gens: Vec<Vec<u32>>) -> Vec<i64> {
    let gens = minimize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return vec![0];
    }
    let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| {
        gens[i + 1..].iter().all(|b| a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0))
    });
    if pairwise_coprime {
        let mut acc = vec![1i64];
        for g in &gens {
            let d = g.iter().sum::<u32>() as usize;
            let mut next = acc.clone();
            poly_sub_shifted(&mut next, &acc, d);
            acc = next;
        }
        return acc;
    }
    // pivot on the generator of largest degree
    let mut rest = gens;
    let pivot = rest.pop().expect("nonempty");
    let colon: Vec<Vec<u32>> = rest
        .iter()
        .map(|g| g.iter().zip(&pivot).map(|(a, b)| a.saturating_sub(*b)).collect())
        .collect();
    let shift = pivot.iter().sum::<u32>() as usize;
    let mut n = numerator(rest);
    let c = numerator(colon);
    poly_sub_shifted(&mut n, &c, shift);
    n
}

/// Krull dimension of `S/I` and the degree, from the numerator.
///
/// `N(t) = (1-t)^(n-D) · Q(t)` with `Q(1) ≠ 0`; the degree is `Q(1)`.
pub(crate) fn dimension_and_degree(numerator: &[i64], nvars: usize) -> (usize, u64) {
    let mut q = numerator.to_vec();
    let mut codim = 0;
    while codim < nvars && q.iter().sum::<i64>() == 0 && q.iter().any(|&c| c != 0) {
        // synthetic division by (1 - t): q_k = n_k + q_{k-1}
        let mut out = Vec::with_capacity(q.len());
        let mut acc = 0i64;
        for &c in &q[..q.len() - 1] {
            acc += c;
            out.push(acc);
        }
        q = out;
        codim += 1;
    }
    let degree = q.iter().sum::<i64>();
    (nvars - codim, degree.max(0) as u64)
}

/// Size of a largest set of variables containing the support of no generator.
pub fn krull_dimension(gens: &[Vec<u32>], nvars: usize) -> usize {
    assert!(nvars <= 64, "at most 64 variables");
    let supports: Vec<u64> = minimize(gens.to_vec())
        .iter()
        .map(|g| g.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |m, (i, _)| m | 1 << i))
        .collect();
    if supports.contains(&0) {
        return 0;
    }
    let mut best = 0;
    search(&supports, nvars, 0, 0, 0, &mut best);
    best
}

fn search(supports: &[u64], nvars: usize, var: usize, chosen: u64, size: usize, best: &mut usize) {
    if size + (nvars - var) <= *best {
        return;
    }
    if var == nvars {
        *best = size;
        return;
    }
    let with = chosen | 1 << var;
    if supports.iter().all(|&s| s & !with != 0) {
        search(supports, nvars, var + 1, with, size + 1, best);
    }
    search(supports, nvars, var + 1, chosen, size, best);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numerators() {
        // (x0) in 4 vars: 1 - t
        assert_eq!(hilbert_numerator(&[vec![1, 0, 0, 0]], 4), vec![1, -1]);
        // (x0, x3, x1 x2): (1-t)^2 (1-t^2)
        assert_eq!(
            hilbert_numerator(&[vec![1, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 1, 1, 0]], 4),
            vec![1, -2, 0, 2, -1]
        );
        // (x0^2, x0 x1): 1 - 2t^2 + t^3
        assert_eq!(hilbert_numerator(&[vec![2, 0], vec![1, 1]], 2), vec![1, 0, -2, 1]);
        assert_eq!(hilbert_numerator(&[], 3), vec![1]);
    }

    #[test]
    fn dimension_and_degree_from_numerator() {
        assert_eq!(dimension_and_degree(&[1, -2, 0, 2, -1], 4), (1, 2));
        assert_eq!(dimension_and_degree(&[1, -1], 4), (3, 1));
        assert_eq!(dimension_and_degree(&[1], 3), (3, 1));
    }

    #[test]
    fn independent_sets() {
        assert_eq!(krull_dimension(&[vec![1, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 1, 1, 0]], 4), 1);
        assert_eq!(krull_dimension(&[vec![2, 0, 0], vec![0, 3, 0]], 3), 1);
        assert_eq!(krull_dimension(&[vec![1, 0], vec![0, 1]], 2), 0);
        assert_eq!(krull_dimension(&[], 5), 5);
    }
}
