//! Buchberger's algorithm, normal forms and staircase invariants.
//!
//! Bases are computed with the coprime-leading-monomial and chain criteria and
//! returned reduced and monic. Over the rationals the intermediate polynomials
//! are kept as primitive integer polynomials; only the final basis is made monic.

mod eliminate;
mod hilbert;
mod order;
mod solve;
mod univariate;
mod work;

use std::collections::HashSet;

use serde::Serialize;

pub use eliminate::eliminate;
pub use hilbert::{hilbert_numerator, krull_dimension};
pub use order::MonomialOrder;
pub use solve::rational_projective_zeros;
pub use univariate::rational_roots;

use crate::error::{Error, Result};
use crate::exactmath::Field;
use crate::multipoly::{Monomial, Polynomial};
use work::{reduce, s_pair, Work};

/// A reduced, monic Gröbner basis.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    nvars: usize,
    field: Field,
    work: Vec<Work>,
    generators: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Generators sorted by leading monomial, largest first.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.work.iter().map(|w| w.lm().clone()).collect()
    }

    /// The basis is `[1]`.
    pub fn is_unit(&self) -> bool {
        self.work.iter().any(|w| w.lm().is_one())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, self)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Re-checks that every S-pair reduces to zero.
    pub fn verify(&self) -> bool {
        for i in 0..self.work.len() {
            for j in i + 1..self.work.len() {
                let s = s_pair(&self.work[i], &self.work[j], self.order);
                if !reduce(&s, &self.work, self.order, true).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// No leading monomial divides another generator's leading monomial, all monic,
    /// and no term of a generator is divisible by another generator's leading monomial.
    pub fn is_reduced(&self) -> bool {
        self.work.iter().enumerate().all(|(i, g)| {
            g.lc().is_one()
                && g.terms.iter().all(|(m, _)| {
                    self.work.iter().enumerate().all(|(j, h)| i == j || !h.lm().divides(m))
                })
        })
    }
}

fn check_ring(gens: &[Polynomial]) -> Result<(usize, Field)> {
    let first = gens.first().ok_or_else(|| Error::RingMismatch("no generators".into()))?;
    let (nvars, field) = (first.nvars(), first.field());
    if let Some(bad) = gens.iter().find(|g| g.nvars() != nvars || g.field() != field) {
        return Err(Error::RingMismatch(format!(
            "generator {bad} lives in a ring with {} vars over {}, expected {nvars} over {field}",
            bad.nvars(),
            bad.field()
        )));
    }
    Ok((nvars, field))
}

/// Standard S-polynomial `(L/lt f)·f − (L/lt g)·g` with `L = lcm(lm f, lm g)`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Polynomial {
    let mut wf = Work::from_poly(f, order);
    let mut wg = Work::from_poly(g, order);
    if wf.is_zero() || wg.is_zero() {
        return Polynomial::zero(f.nvars(), f.field());
    }
    wf.make_monic();
    wg.make_monic();
    s_pair(&wf, &wg, order).to_poly(f.nvars(), f.field())
}

/// Fully reduced remainder of `f` modulo `basis`.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Polynomial {
    let w = Work::from_poly(f, basis.order);
    // basis elements are monic, so reduction is exact division
    reduce(&w, &basis.work, basis.order, true).to_poly(f.nvars(), f.field())
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BuchbergerStats {
    pub pairs_total: usize,
    pub pairs_coprime: usize,
    pub pairs_chain: usize,
    pub reductions_to_zero: usize,
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with_stats(gens, order).map(|(b, _)| b)
}

pub fn buchberger_with_stats(gens: &[Polynomial], order: MonomialOrder) -> Result<(GroebnerBasis, BuchbergerStats)> {
    let (nvars, field) = check_ring(gens)?;
    let mut stats = BuchbergerStats::default();
    let mut basis: Vec<Work> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let unit = |nvars: usize| {
        let one = Polynomial::one(nvars, field);
        let w = Work::from_poly(&one, order);
        GroebnerBasis { order, nvars, field, work: vec![w], generators: vec![one] }
    };

    let mut input: Vec<Work> = gens.iter().filter(|g| !g.is_zero()).map(|g| Work::from_poly(g, order)).collect();
    input.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    for g in input {
        let mut h = reduce(&g, &basis, order, true);
        if h.is_zero() {
            continue;
        }
        h.normalize();
        if h.lm().is_one() {
            return Ok((unit(nvars), stats));
        }
        let k = basis.len();
        basis.push(h);
        for i in 0..k {
            pending.insert((i, k));
        }
        stats.pairs_total += k;
    }

    while let Some(&(i, j)) = pending.iter().min_by(|a, b| {
        let la = basis[a.0].lm().lcm(basis[a.1].lm());
        let lb = basis[b.0].lm().lcm(basis[b.1].lm());
        la.degree().cmp(&lb.degree()).then_with(|| order.cmp(&la, &lb)).then_with(|| a.cmp(b))
    }) {
        pending.remove(&(i, j));
        let (fi, fj) = (&basis[i], &basis[j]);
        if fi.lm().is_coprime(fj.lm()) {
            stats.pairs_coprime += 1;
            continue;
        }
        let l = fi.lm().lcm(fj.lm());
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            stats.pairs_chain += 1;
            continue;
        }
        let s = s_pair(fi, fj, order);
        let mut h = reduce(&s, &basis, order, true);
        if h.is_zero() {
            stats.reductions_to_zero += 1;
            continue;
        }
        h.normalize();
        if h.lm().is_one() {
            return Ok((unit(nvars), stats));
        }
        let k = basis.len();
        basis.push(h);
        for a in 0..k {
            pending.insert((a, k));
        }
        stats.pairs_total += k;
    }

    Ok((finish(basis, order, nvars, field), stats))
}

/// Minimalizes and interreduces, then makes every generator monic.
fn finish(mut basis: Vec<Work>, order: MonomialOrder, nvars: usize, field: Field) -> GroebnerBasis {
    basis.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    let mut minimal: Vec<Work> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| h.lm().divides(g.lm())) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Work> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, w)| w.clone()).collect();
        let mut r = reduce(&minimal[i], &others, order, true);
        r.make_monic();
        reduced.push(r);
    }
    reduced.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    let generators = reduced.iter().map(|w| w.to_poly(nvars, field)).collect();
    GroebnerBasis { order, nvars, field, work: reduced, generators }
}

/// Projective dimension and degree of a homogeneous ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealSummary {
    /// `-1` when the projective zero set is empty.
    pub projective_dimension: i64,
    /// Degree with multiplicity; absent for the empty zero set.
    pub degree: Option<u64>,
    pub field: Field,
}

impl IdealSummary {
    pub fn is_empty(&self) -> bool {
        self.projective_dimension < 0
    }

    pub fn is_finite(&self) -> bool {
        self.projective_dimension == 0
    }
}

/// Dimension and degree read off the grevlex staircase of `gens`.
pub fn ideal_dimension_and_degree(gens: &[Polynomial]) -> Result<IdealSummary> {
    for (index, g) in gens.iter().enumerate() {
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous { index, text: g.to_string() });
        }
    }
    let basis = buchberger(gens, MonomialOrder::GrevLex)?;
    Ok(summarize(&basis))
}

/// Staircase invariants of an existing basis (of a homogeneous ideal).
pub fn summarize(basis: &GroebnerBasis) -> IdealSummary {
    let nvars = basis.nvars();
    let lms: Vec<Vec<u32>> = basis.leading_monomials().iter().map(|m| m.exponents().to_vec()).collect();
    let field = basis.field();
    if basis.is_unit() {
        return IdealSummary { projective_dimension: -1, degree: None, field };
    }
    let krull = krull_dimension(&lms, nvars);
    if krull == 0 {
        return IdealSummary { projective_dimension: -1, degree: None, field };
    }
    let numerator = hilbert_numerator(&lms, nvars);
    let (dim_from_series, degree) = hilbert::dimension_and_degree(&numerator, nvars);
    debug_assert_eq!(dim_from_series, krull, "independent-set and Hilbert dimensions agree");
    IdealSummary { projective_dimension: krull as i64 - 1, degree: Some(degree), field }
}
