//! Brute-force ground truth over small prime fields.
//!
//! Points of ℙᴺ(𝔽_p) are enumerated in canonical form: first by the position
//! of the leading 1, then lexicographically in the remaining coordinates.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::conicfinder::{conic_solution, ConicSolution};
use crate::error::{Error, Result};
use crate::exactmath::{Field, Scalar};
use crate::multipoly::{Polynomial, ProjectivePoint};
use crate::variety::VarietySpec;

pub const DEFAULT_POINT_CAP: u128 = 10_000_000;

pub const CENSUS_CAVEAT: &str = "counts describe rational points over the finite field only; \
statements over the algebraic closure come from the symbolic path";

/// `(p^{N+1} − 1)/(p − 1)`, saturating.
pub fn point_count(n: usize, p: u32) -> u128 {
    let p = p as u128;
    let mut total: u128 = 0;
    let mut block: u128 = 1;
    for _ in 0..=n {
        total = total.saturating_add(block);
        block = block.saturating_mul(p);
    }
    total
}

/// Canonical points of ℙᴺ(𝔽_p), addressed by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectiveSpaceEnum {
    pub n: usize,
    pub p: u32,
    count: u64,
}

pub fn enumerate_points(n: usize, p: u32, cap: u128) -> Result<ProjectiveSpaceEnum> {
    Field::prime(p as u64)?;
    let count = point_count(n, p);
    if count > cap {
        return Err(Error::CapExceeded { count, cap });
    }
    Ok(ProjectiveSpaceEnum { n, p, count: count as u64 })
}

impl ProjectiveSpaceEnum {
    pub fn len(&self) -> u64 {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    /// The `index`-th canonical point.
    pub fn point(&self, mut index: u64) -> Vec<u32> {
        let p = self.p as u64;
        let mut coords = vec![0u32; self.n + 1];
        for lead in 0..=self.n {
            let block = p.pow((self.n - lead) as u32);
            if index < block {
                coords[lead] = 1;
                for slot in coords[lead + 1..].iter_mut().rev() {
                    *slot = (index % p) as u32;
                    index /= p;
                }
                return coords;
            }
            index -= block;
        }
        panic!("point index out of range");
    }

    pub fn iter(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        (0..self.count).map(|i| self.point(i))
    }

    pub fn points(&self) -> Vec<ProjectivePoint> {
        self.iter().map(|c| to_point(&c, self.p)).collect()
    }
}

pub fn to_point(coords: &[u32], p: u32) -> ProjectivePoint {
    let field = Field::Prime(p);
    ProjectivePoint::new(coords.iter().map(|&c| Scalar::from_i64(field, c as i64)).collect()).expect("nonzero point")
}

fn from_point(pt: &ProjectivePoint, p: u32) -> Result<Vec<u32>> {
    let pt = if pt.field() == Field::Prime(p) { pt.clone() } else { pt.reduce_mod(p)? };
    Ok(pt.coords().iter().map(|c| c.as_prime().expect("prime field").value()).collect())
}

/// A polynomial over 𝔽_p compiled for fast evaluation on `u32` coordinates.
#[derive(Debug, Clone)]
pub struct CompiledPoly {
    p: u64,
    terms: Vec<(u64, Vec<(usize, u32)>)>,
}

impl CompiledPoly {
    pub fn new(f: &Polynomial, p: u32) -> Result<CompiledPoly> {
        let f = if f.field() == Field::Prime(p) { f.clone() } else { f.reduce_mod(p)? };
        let terms = f
            .terms()
            .iter()
            .map(|(m, c)| {
                let vars = m.exponents().iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i, e)).collect();
                (c.as_prime().expect("prime field").value() as u64, vars)
            })
            .collect();
        Ok(CompiledPoly { p: p as u64, terms })
    }

    pub fn eval(&self, x: &[u32]) -> u64 {
        let p = self.p;
        let mut acc = 0u64;
        for (c, vars) in &self.terms {
            let mut t = *c;
            for &(i, e) in vars {
                let b = x[i] as u64;
                for _ in 0..e {
                    t = t * b % p;
                }
                if t == 0 {
                    break;
                }
            }
            acc = (acc + t) % p;
        }
        acc
    }

    pub fn vanishes_at(&self, x: &[u32]) -> bool {
        self.eval(x) == 0
    }
}

/// A variety over 𝔽_p prepared for exhaustive scans.
#[derive(Debug, Clone)]
pub struct FfVariety {
    pub p: u32,
    pub space: ProjectiveSpaceEnum,
    equations: Vec<CompiledPoly>,
    workers: usize,
}

impl FfVariety {
    /// Refuses primes below the largest equation degree: a binary form of degree
    /// d can vanish at all p + 1 points of a line without being zero when d > p.
    pub fn new(x: &VarietySpec, p: u32, cap: u128) -> Result<FfVariety> {
        let max_degree = x.max_degree();
        if p < max_degree {
            return Err(Error::PrimeTooSmall { p, max_degree });
        }
        let space = enumerate_points(x.ambient_dim, p, cap)?;
        let equations = x.equations.iter().map(|g| CompiledPoly::new(g, p)).collect::<Result<_>>()?;
        let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
        Ok(FfVariety { p, space, equations, workers })
    }

    /// Number of scan partitions; the results do not depend on it.
    pub fn with_workers(mut self, workers: usize) -> FfVariety {
        self.workers = workers.max(1);
        self
    }

    pub fn contains(&self, x: &[u32]) -> bool {
        self.equations.iter().all(|g| g.vanishes_at(x))
    }

    /// Indices of all points satisfying `keep`, in enumeration order.
    fn scan<F>(&self, keep: F) -> Vec<Vec<u32>>
    where
        F: Fn(&[u32]) -> bool + Sync,
    {
        let total = self.space.len();
        let workers = (self.workers as u64).min(total.max(1));
        let chunk = total.div_ceil(workers);
        let space = &self.space;
        let keep = &keep;
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    s.spawn(move || {
                        let lo = w * chunk;
                        let hi = ((w + 1) * chunk).min(total);
                        (lo..hi).map(|i| space.point(i)).filter(|c| keep(c)).collect::<Vec<_>>()
                    })
                })
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("scan worker")).collect()
        })
    }

    pub fn rational_points(&self) -> Vec<Vec<u32>> {
        self.scan(|c| self.contains(c))
    }

    /// Every point of the line through `a` and `b` lies on X.
    fn line_inside(&self, a: &[u32], b: &[u32]) -> bool {
        let p = self.p as u64;
        if !self.contains(a) {
            return false;
        }
        let mut q = vec![0u32; a.len()];
        for t in 0..p {
            for (k, slot) in q.iter_mut().enumerate() {
                *slot = ((b[k] as u64 + t * a[k] as u64) % p) as u32;
            }
            if !self.contains(&q) {
                return false;
            }
        }
        true
    }

    pub fn line_in_variety(&self, a: &ProjectivePoint, b: &ProjectivePoint) -> Result<bool> {
        let (a, b) = (from_point(a, self.p)?, from_point(b, self.p)?);
        if a == b {
            return Err(Error::SamePoints { point: to_point(&a, self.p).to_string() });
        }
        Ok(self.line_inside(&a, &b))
    }

    /// `{x} ∪ {q : the line ⟨x,q⟩ lies on X}`.
    pub fn brute_line_locus(&self, x: &ProjectivePoint) -> Result<Vec<ProjectivePoint>> {
        let xs = from_point(x, self.p)?;
        let hits = self.scan(|q| q == xs.as_slice() || self.line_inside(&xs, q));
        Ok(hits.iter().map(|c| to_point(c, self.p)).collect())
    }

    /// All vertices `q` with both lines ⟨x,q⟩ and ⟨y,q⟩ on X (a line to the point itself counts as contained).
    pub fn brute_singular_conics(&self, x: &ProjectivePoint, y: &ProjectivePoint) -> Result<Vec<ConicSolution>> {
        let (xs, ys) = (from_point(x, self.p)?, from_point(y, self.p)?);
        if xs == ys {
            return Err(Error::SamePoints { point: to_point(&xs, self.p).to_string() });
        }
        let hits = self.vertices(&xs, &ys);
        let (x, y) = (to_point(&xs, self.p), to_point(&ys, self.p));
        Ok(hits.iter().map(|c| conic_solution(&x, &y, to_point(c, self.p))).collect())
    }

    fn vertices(&self, xs: &[u32], ys: &[u32]) -> Vec<Vec<u32>> {
        self.scan(|q| (q == xs || self.line_inside(xs, q)) && (q == ys || self.line_inside(ys, q)))
    }

    /// Zero set in ℙᴺ(𝔽_p) of arbitrary homogeneous polynomials.
    pub fn zero_set(&self, polys: &[Polynomial]) -> Result<Vec<ProjectivePoint>> {
        let compiled = polys.iter().map(|g| CompiledPoly::new(g, self.p)).collect::<Result<Vec<_>>>()?;
        let hits = self.scan(|c| compiled.iter().all(|g| g.vanishes_at(c)));
        Ok(hits.iter().map(|c| to_point(c, self.p)).collect())
    }

    /// Samples seeded pairs of distinct rational points and counts the singular conics joining them.
    pub fn cc_census(&self, pairs: usize, seed: u64) -> Result<OracleStats> {
        let points = self.rational_points();
        if points.len() < 2 {
            return Err(Error::TooFewPoints { found: points.len(), p: self.p });
        }
        let mut rng = Lcg::new(seed);
        let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
        let (mut connected, mut by_conic, mut on_line) = (0, 0, 0);
        for _ in 0..pairs {
            let i = rng.below(points.len() as u64) as usize;
            let mut j = rng.below(points.len() as u64) as usize;
            while j == i {
                j = rng.below(points.len() as u64) as usize;
            }
            let (xs, ys) = (&points[i], &points[j]);
            let x = to_point(xs, self.p);
            let y = to_point(ys, self.p);
            let count = self
                .vertices(xs, ys)
                .iter()
                .filter(|q| !conic_solution(&x, &y, to_point(q, self.p)).degenerate)
                .count();
            let line = self.line_inside(xs, ys);
            *histogram.entry(count).or_default() += 1;
            if count > 0 {
                by_conic += 1;
            }
            if line {
                on_line += 1;
            }
            if count > 0 || line {
                connected += 1;
            }
        }
        let modal_count = histogram.iter().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0))).map(|(k, _)| *k);
        Ok(OracleStats {
            p: self.p,
            seed,
            rational_points: points.len(),
            pairs_tested: pairs,
            pairs_connected: connected,
            pairs_with_conic: by_conic,
            pairs_on_common_line: on_line,
            connected_fraction: if pairs == 0 { 0.0 } else { connected as f64 / pairs as f64 },
            histogram: histogram.into_iter().map(|(count, pairs)| HistogramBin { count, pairs }).collect(),
            modal_count,
            caveat: CENSUS_CAVEAT,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HistogramBin {
    /// Number of non-degenerate singular conics through the pair.
    pub count: usize,
    pub pairs: usize,
}

/// Census of point pairs. A pair is connected when some non-degenerate singular
/// conic joins it, or when the line through it lies on X.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleStats {
    pub p: u32,
    pub seed: u64,
    pub rational_points: usize,
    pub pairs_tested: usize,
    pub pairs_connected: usize,
    pub pairs_with_conic: usize,
    pub pairs_on_common_line: usize,
    pub connected_fraction: f64,
    pub histogram: Vec<HistogramBin>,
    pub modal_count: Option<usize>,
    pub caveat: &'static str,
}

/// 64-bit linear congruential generator (Knuth's MMIX constants); draws use the high bits.
#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Lcg {
        Lcg { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.state >> 33
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}
