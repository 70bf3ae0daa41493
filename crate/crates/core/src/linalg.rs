//! Dense Gaussian elimination over an exact field.

use crate::exactmath::Scalar;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        for c in rows[r].iter_mut() {
            *c = &*c * &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            let pivot_row = rows[r].clone();
            for (c, pv) in rows[i].iter_mut().zip(&pivot_row) {
                *c = &*c - &(&factor * pv);
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{v : rows · v = 0}`, itself in reduced row echelon form.
pub fn kernel(rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let field = match rows.iter().flatten().next() {
        Some(s) => s.field(),
        None => return Vec::new(),
    };
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Scalar::zero(field); ncols];
        v[free] = Scalar::one(field);
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = row[free].neg();
        }
        basis.push(v);
    }
    rref(&mut basis);
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Field;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&v| Scalar::from_i64(Field::Rational, v)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&m), 2);
        let k = kernel(&m, 3);
        assert_eq!(k.len(), 1);
        for row in &m {
            let dot = row.iter().zip(&k[0]).fold(Scalar::zero(Field::Rational), |a, (x, y)| &a + &(x * y));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn coordinate_line_equations() {
        let m = mat(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert_eq!(kernel(&m, 4), mat(&[&[0, 0, 1, 0], &[0, 0, 0, 1]]));
    }
}
