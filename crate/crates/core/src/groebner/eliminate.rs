use super::{buchberger, MonomialOrder};
use crate::error::Result;
use crate::multipoly::Polynomial;

/// Generators of the elimination ideal `I ∩ k[x_i : i ∉ drop]`.
///
/// The dropped variables are moved to the front and eliminated with a block order.
pub fn eliminate(gens: &[Polynomial], drop: &[usize]) -> Result<Vec<Polynomial>> {
    let Some(first) = gens.first() else { return Ok(Vec::new()) };
    let n = first.nvars();
    let mut dropped: Vec<usize> = drop.to_vec();
    dropped.sort_unstable();
    dropped.dedup();
    let kept: Vec<usize> = (0..n).filter(|i| !dropped.contains(i)).collect();
    // perm[old] = new position
    let mut perm = vec![0; n];
    for (new, &old) in dropped.iter().chain(&kept).enumerate() {
        perm[old] = new;
    }
    let mut inverse = vec![0; n];
    for (old, &new) in perm.iter().enumerate() {
        inverse[new] = old;
    }
    let k = dropped.len();
    let permuted: Vec<Polynomial> = gens.iter().map(|g| g.permute_vars(&perm)).collect();
    let basis = buchberger(&permuted, MonomialOrder::Elimination(k))?;
    Ok(basis
        .generators()
        .iter()
        .filter(|g| g.variables().iter().all(|&v| v >= k))
        .map(|g| g.permute_vars(&inverse))
        .collect())
}
