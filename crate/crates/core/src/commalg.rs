//! Graded commutative algebra over a presented ring `R = k[g_1..g_m] / I`
//! with generator weights: Gröbner basis, Hilbert function, Krull dimension,
//! a minimal graded free resolution of `k` and bounds on depth.

use std::collections::HashMap;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cohomology::GradedPresentation;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Insert, PivotRule, SparseMatrix, SparseVec};
use crate::poly::{weighted_monomials, Monomial, Polynomial, WeightedOrder};
use crate::scalar::{int, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct QuotientRing {
    symbols: Vec<String>,
    order: WeightedOrder,
    relations: Vec<Polynomial>,
    groebner: Vec<Polynomial>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuotientRingSummary {
    pub symbols: Vec<String>,
    pub weights: Vec<u32>,
    pub groebner: Vec<String>,
    pub leading_terms: Vec<String>,
}

fn monic(p: Polynomial, order: &WeightedOrder) -> Polynomial {
    match p.leading_by(order) {
        Some((_, c)) => {
            let inv = Scalar::one() / c;
            p.scale(&inv)
        }
        None => p,
    }
}

impl QuotientRing {
    pub fn new(symbols: Vec<String>, weights: Vec<u32>, relations: Vec<Polynomial>) -> Self {
        assert_eq!(symbols.len(), weights.len());
        let order = WeightedOrder::new(weights);
        let mut ring = QuotientRing {
            symbols,
            order,
            relations: relations.clone(),
            groebner: Vec::new(),
        };
        ring.groebner = ring.complete(relations);
        ring
    }

    pub fn ngens(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn weights(&self) -> &[u32] {
        &self.order.weights
    }

    pub fn order(&self) -> &WeightedOrder {
        &self.order
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn groebner(&self) -> &[Polynomial] {
        &self.groebner
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.groebner
            .iter()
            .map(|g| g.leading_by(&self.order).expect("nonzero").0.clone())
            .collect()
    }

    fn reduce_against(&self, p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
        let leads: Vec<(Monomial, Scalar)> = basis
            .iter()
            .map(|g| {
                let (m, c) = g.leading_by(&self.order).expect("nonzero");
                (m.clone(), c.clone())
            })
            .collect();
        let mut p = p.clone();
        let mut rest = Polynomial::zero(p.nvars());
        while let Some((m, c)) = p.leading_by(&self.order).map(|(m, c)| (m.clone(), c.clone())) {
            match leads.iter().position(|(l, _)| l.divides(&m)) {
                Some(k) => {
                    let q = leads[k].0.quotient_of(&m);
                    let s = -(&c / &leads[k].1);
                    p = &p + &basis[k].mul_monomial(&q, &s);
                }
                None => {
                    p.add_term(m.clone(), -c.clone());
                    rest.add_term(m, c);
                }
            }
        }
        rest
    }

    /// Normal form modulo the ideal: a combination of standard monomials.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        self.reduce_against(p, &self.groebner)
    }

    fn s_poly(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        let (ma, ca) = a.leading_by(&self.order).expect("nonzero");
        let (mb, cb) = b.leading_by(&self.order).expect("nonzero");
        let l = ma.lcm(mb);
        &a.mul_monomial(&ma.quotient_of(&l), &(Scalar::one() / ca)) - &b.mul_monomial(&mb.quotient_of(&l), &(Scalar::one() / cb))
    }

    /// Buchberger with the coprime-leading-term criterion, pairs taken by
    /// lowest lcm degree, followed by interreduction.
    fn complete(&self, relations: Vec<Polynomial>) -> Vec<Polynomial> {
        let mut g: Vec<Polynomial> = Vec::new();
        for r in relations {
            let r = self.reduce_against(&r, &g);
            if !r.is_zero() {
                g.push(monic(r, &self.order));
            }
        }
        let mut pairs: Vec<(usize, usize)> = (0..g.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        while !pairs.is_empty() {
            let lcm_deg = |&(i, j): &(usize, usize)| {
                let a = g[i].leading_by(&self.order).unwrap().0;
                let b = g[j].leading_by(&self.order).unwrap().0;
                a.lcm(b).weighted_degree(&self.order.weights)
            };
            let k = (0..pairs.len()).min_by_key(|k| (lcm_deg(&pairs[*k]), *k)).unwrap();
            let (i, j) = pairs.remove(k);
            let a = g[i].leading_by(&self.order).unwrap().0;
            let b = g[j].leading_by(&self.order).unwrap().0;
            if a.coprime(b) {
                continue;
            }
            let s = self.reduce_against(&self.s_poly(&g[i], &g[j]), &g);
            if !s.is_zero() {
                g.push(monic(s, &self.order));
                let n = g.len() - 1;
                pairs.extend((0..n).map(|i| (i, n)));
            }
        }
        // drop redundant leading terms, then reduce tails
        let leads: Vec<Monomial> = g.iter().map(|p| p.leading_by(&self.order).unwrap().0.clone()).collect();
        let keep: Vec<usize> = (0..g.len())
            .filter(|&i| !(0..g.len()).any(|j| j != i && leads[j].divides(&leads[i]) && (leads[j] != leads[i] || j < i)))
            .collect();
        let minimal: Vec<Polynomial> = keep.iter().map(|&i| g[i].clone()).collect();
        let mut reduced: Vec<Polynomial> = (0..minimal.len())
            .map(|i| {
                let others: Vec<Polynomial> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p.clone()).collect();
                let (m, c) = minimal[i].leading_by(&self.order).unwrap();
                let (m, c) = (m.clone(), c.clone());
                let mut tail = minimal[i].clone();
                tail.add_term(m.clone(), -c.clone());
                let mut out = self.reduce_against(&tail, &others);
                out.add_term(m, c);
                monic(out, &self.order)
            })
            .collect();
        reduced.sort_by(|a, b| self.order.cmp(b.leading_by(&self.order).unwrap().0, a.leading_by(&self.order).unwrap().0));
        reduced
    }

    /// Every S-polynomial of the stored basis reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let g = &self.groebner;
        (0..g.len()).all(|j| (0..j).all(|i| self.normal_form(&self.s_poly(&g[i], &g[j])).is_zero()))
    }

    /// Running the completion again changes nothing.
    pub fn is_idempotent(&self) -> bool {
        self.complete(self.groebner.clone()) == self.groebner
    }

    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        let leads = self.leading_monomials();
        weighted_monomials(&self.order, d)
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .collect()
    }

    pub fn hilbert_series(&self, degree_bound: u32) -> Vec<usize> {
        (0..=degree_bound).map(|d| self.standard_monomials(d).len()).collect()
    }

    /// Numerator `N(t)` with `H(t) = N(t) / prod (1 - t^{w_j})`, from the
    /// leading-term ideal.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        trim(numerator(&minimalize(self.leading_monomials()), &self.order.weights))
    }

    /// Largest set of generators containing the support of no leading term.
    pub fn krull_dimension(&self) -> usize {
        let g = self.ngens();
        assert!(g < 26, "too many generators for subset search");
        let leads: Vec<u32> = self
            .leading_monomials()
            .iter()
            .map(|m| m.support().fold(0u32, |acc, i| acc | (1 << i)))
            .collect();
        (0u32..(1 << g))
            .filter(|s| leads.iter().all(|l| l & !s != 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn summary(&self) -> QuotientRingSummary {
        QuotientRingSummary {
            symbols: self.symbols.clone(),
            weights: self.order.weights.clone(),
            groebner: self.groebner.iter().map(|p| p.to_string_with(&self.symbols)).collect(),
            leading_terms: self
                .leading_monomials()
                .into_iter()
                .map(|m| Polynomial::term(m, Scalar::one()).to_string_with(&self.symbols))
                .collect(),
        }
    }
}

pub fn buchberger(pres: &GradedPresentation) -> QuotientRing {
    QuotientRing::new(pres.symbols(), pres.weights(), pres.relation_polys())
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(Monomial::degree);
    let mut out: Vec<Monomial> = Vec::new();
    for m in gens {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &[i64], b: &[i64], sign: i64) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += sign * y;
    }
    out
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn numerator(gens: &[Monomial], w: &[u32]) -> Vec<i64> {
    let Some((last, rest)) = gens.split_last() else {
        return vec![1];
    };
    let colon: Vec<Monomial> = rest.iter().map(|m| last.quotient_of(&m.lcm(last))).collect();
    let mut shifted = vec![0; last.weighted_degree(w) as usize];
    shifted.extend(numerator(&minimalize(colon), w));
    poly_add(&numerator(rest, w), &shifted, -1)
}

/// `prod_j (1 - t^{w_j})` as integer coefficients.
pub fn free_denominator(weights: &[u32]) -> Vec<i64> {
    weights.iter().fold(vec![1], |acc, &w| {
        let mut f = vec![0; w as usize + 1];
        f[0] = 1;
        f[w as usize] = -1;
        poly_mul(&acc, &f)
    })
}

/// Ranks and generator degrees of a minimal graded free resolution of `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    /// `beta_i`, starting with `beta_0 = 1`.
    pub betti: Vec<usize>,
    /// Internal degrees of the generators of each free module.
    pub degrees: Vec<Vec<u32>>,
    pub internal_degree_bound: u32,
    pub steps: usize,
    /// Some kernel vanished within the bounds.
    pub terminated: bool,
    /// `sum (-1)^i B_i(t) N(t) = prod (1 - t^{w_j})` holds exactly; only
    /// meaningful when terminated.
    pub euler_identity: bool,
}

impl BettiTable {
    pub fn pd(&self) -> Option<usize> {
        self.terminated.then(|| self.betti.len() - 1)
    }

    /// Largest index with a nonzero free module found so far.
    pub fn pd_lower_bound(&self) -> usize {
        self.betti.len() - 1
    }
}

/// The resolution itself: `maps[i][j]` is the image in `F_i` of generator `j`
/// of `F_{i+1}`.
#[derive(Debug, Clone)]
pub struct FreeResolution {
    pub table: BettiTable,
    pub maps: Vec<Vec<Vec<Polynomial>>>,
    /// Set when the degree bound cut the computation short.
    pub truncated_at: Option<usize>,
}

impl FreeResolution {
    /// Every entry of every map has positive degree.
    pub fn is_minimal(&self, ring: &QuotientRing) -> bool {
        self.maps.iter().all(|m| {
            m.iter()
                .all(|img| img.iter().all(|p| p.terms().all(|(m, _)| m.weighted_degree(ring.weights()) > 0)))
        })
    }

    /// Consecutive maps compose to zero in the ring.
    pub fn is_complex(&self, ring: &QuotientRing) -> bool {
        let first = self.maps.first().is_none_or(|m| {
            m.iter().all(|img| img.iter().all(|p| p.terms().all(|(m, _)| m.weighted_degree(ring.weights()) > 0)))
        });
        first
            && self.maps.windows(2).all(|w| {
                w[1].iter().all(|img| {
                    let n = ring.ngens();
                    let mut out = vec![Polynomial::zero(n); w[0].first().map_or(0, |v| v.len())];
                    for (j, c) in img.iter().enumerate() {
                        for (k, e) in w[0][j].iter().enumerate() {
                            out[k] = &out[k] + &(c * e);
                        }
                    }
                    out.iter().all(|p| ring.normal_form(p).is_zero())
                })
            })
    }
}

struct Graded<'a> {
    ring: &'a QuotientRing,
    standard: Vec<Vec<Monomial>>,
}

type Element = Vec<Polynomial>;

impl Graded<'_> {
    fn std(&self, d: i64) -> &[Monomial] {
        if d < 0 || d as usize >= self.standard.len() {
            &[]
        } else {
            &self.standard[d as usize]
        }
    }

    fn basis(&self, degs: &[u32], d: u32) -> (Vec<(usize, Monomial)>, HashMap<(usize, Monomial), usize>) {
        let mut basis = Vec::new();
        for (j, &a) in degs.iter().enumerate() {
            for m in self.std(d as i64 - a as i64) {
                basis.push((j, m.clone()));
            }
        }
        let index = basis.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        (basis, index)
    }

    fn times(&self, m: &Monomial, e: &Element) -> Element {
        e.iter().map(|p| self.ring.normal_form(&p.mul_monomial(m, &Scalar::one()))).collect()
    }

    fn to_vec(&self, e: &Element, index: &HashMap<(usize, Monomial), usize>) -> SparseVec {
        let mut v: SparseVec = e
            .iter()
            .enumerate()
            .flat_map(|(k, p)| p.terms().map(move |(m, c)| (index[&(k, m.clone())], c.clone())))
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    fn from_vec(&self, v: &SparseVec, basis: &[(usize, Monomial)], rank: usize) -> Element {
        let mut e = vec![Polynomial::zero(self.ring.ngens()); rank];
        for (i, c) in v {
            let (k, m) = &basis[*i];
            e[*k].add_term(m.clone(), c.clone());
        }
        e
    }

    /// Minimal homogeneous generators of `ker(phi)` in degrees `lo..=hi`,
    /// where `phi` sends generator `j` (degree `src[j]`) to `images[j]`.
    /// With `images = None` the map is the augmentation `R -> k`.
    fn kernel_generators(&self, src: &[u32], images: Option<(&[Element], &[u32])>, lo: u32, hi: u32) -> Vec<(u32, Element)> {
        let mut found: Vec<(u32, Element)> = Vec::new();
        for d in lo..=hi {
            let (basis, index) = self.basis(src, d);
            if basis.is_empty() {
                continue;
            }
            let kernel: Vec<SparseVec> = match images {
                None => (0..basis.len()).map(|i| vec![(i, Scalar::one())]).collect(),
                Some((imgs, tgt)) => {
                    let (tbasis, tindex) = self.basis(tgt, d);
                    let cols = basis
                        .iter()
                        .map(|(j, m)| self.to_vec(&self.times(m, &imgs[*j]), &tindex))
                        .collect();
                    let mat = SparseMatrix::from_columns(tbasis.len(), cols);
                    mat.kernel_basis_sparse()
                }
            };
            if kernel.is_empty() {
                continue;
            }
            let mut span = Echelon::new(basis.len(), PivotRule::Leading);
            for (e, g) in &found {
                for m in self.std(d as i64 - *e as i64) {
                    span.insert(&self.to_vec(&self.times(m, g), &index));
                }
            }
            let mut canonical = Echelon::new(basis.len(), PivotRule::Leading);
            for k in &kernel {
                canonical.insert(k);
            }
            for row in canonical.rows() {
                if let Insert::Pivot(_) = span.insert(row) {
                    found.push((d, self.from_vec(row, &basis, src.len())));
                }
            }
        }
        found
    }
}

fn graded_poly(degs: &[u32]) -> Vec<i64> {
    let mut out = Vec::new();
    for &d in degs {
        if out.len() <= d as usize {
            out.resize(d as usize + 1, 0);
        }
        out[d as usize] += 1;
    }
    out
}

/// Resolution computed as far as the bounds allow; never fails.
pub fn resolve_k(ring: &QuotientRing, steps: usize, internal_degree_bound: u32) -> FreeResolution {
    let g = Graded {
        ring,
        standard: (0..=internal_degree_bound).map(|d| ring.standard_monomials(d)).collect(),
    };
    let min_w = ring.weights().iter().copied().min();
    let mut degrees: Vec<Vec<u32>> = vec![vec![0]];
    let mut maps: Vec<Vec<Element>> = Vec::new();
    let mut terminated = false;
    let mut truncated_at = None;
    for i in 0..steps {
        let src = degrees[i].clone();
        let Some(w) = min_w else {
            terminated = true;
            break;
        };
        let lo = src.iter().min().unwrap() + w;
        if lo > internal_degree_bound {
            truncated_at = Some(i + 1);
            break;
        }
        let gens = if i == 0 {
            g.kernel_generators(&src, None, lo, internal_degree_bound)
        } else {
            g.kernel_generators(&src, Some((&maps[i - 1], &degrees[i - 1])), lo, internal_degree_bound)
        };
        if gens.is_empty() {
            terminated = true;
            break;
        }
        degrees.push(gens.iter().map(|(d, _)| *d).collect());
        maps.push(gens.into_iter().map(|(_, e)| e).collect());
    }
    let euler_identity = terminated && {
        let mut lhs = Vec::new();
        for (i, degs) in degrees.iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            lhs = poly_add(&lhs, &graded_poly(degs), sign);
        }
        trim(poly_mul(&lhs, &ring.hilbert_numerator())) == trim(free_denominator(ring.weights()))
    };
    FreeResolution {
        table: BettiTable {
            betti: degrees.iter().map(Vec::len).collect(),
            degrees,
            internal_degree_bound,
            steps,
            terminated,
            euler_identity,
        },
        maps,
        truncated_at,
    }
}

/// Minimal graded free resolution of `k`, at most `steps` syzygy steps,
/// every graded piece computed up to `internal_degree_bound`.
pub fn minimal_free_resolution_of_k(ring: &QuotientRing, steps: usize, internal_degree_bound: u32) -> Result<FreeResolution> {
    let res = resolve_k(ring, steps, internal_degree_bound);
    if let Some(step) = res.truncated_at {
        return Err(Error::BoundTooSmall {
            step,
            bound: internal_degree_bound,
        });
    }
    if res.table.terminated && !res.table.euler_identity {
        return Err(Error::BoundTooSmall {
            step: res.table.betti.len(),
            bound: internal_degree_bound,
        });
    }
    Ok(res)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthInterval {
    pub lower: usize,
    pub upper: usize,
    /// Regular sequence found, as polynomials in the generator symbols.
    pub sequence: Vec<String>,
    pub seed: u64,
    pub search_bound: u32,
    pub attempts_per_level: usize,
}

const ATTEMPTS: usize = 20;

/// Multiplication by `f` is injective on `R/(seq)` in every degree with
/// target at most `bound`.
fn is_regular(ring: &QuotientRing, seq: &[(u32, Polynomial)], f: &(u32, Polynomial), bound: u32) -> bool {
    let standard: Vec<Vec<Monomial>> = (0..=bound).map(|d| ring.standard_monomials(d)).collect();
    let ideal_in = |d: u32| -> Echelon {
        let basis = &standard[d as usize];
        let index = crate::poly::index_of(basis);
        let mut e = Echelon::new(basis.len(), PivotRule::Leading);
        for (w, h) in seq {
            if *w > d {
                continue;
            }
            for m in &standard[(d - w) as usize] {
                e.insert(&ring.normal_form(&h.mul_monomial(m, &Scalar::one())).to_sparse(&index));
            }
        }
        e
    };
    let (w, f) = f;
    (0..=bound.saturating_sub(*w)).all(|d| {
        let src = &standard[d as usize];
        if src.is_empty() {
            return true;
        }
        let tgt_index = crate::poly::index_of(&standard[(d + w) as usize]);
        let here = ideal_in(d);
        let there = ideal_in(d + w);
        let cols: Vec<SparseVec> = src
            .iter()
            .map(|m| there.reduce(&ring.normal_form(&f.mul_monomial(m, &Scalar::one())).to_sparse(&tgt_index)))
            .collect();
        let rank = SparseMatrix::from_columns(standard[(d + w) as usize].len(), cols).rank();
        src.len() - rank == here.rank()
    })
}

/// Depth pinched between a seeded regular-sequence search and the Krull
/// dimension.
pub fn depth_interval(ring: &QuotientRing, search_bound: u32, seed: u64) -> DepthInterval {
    let upper = ring.krull_dimension();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut weights: Vec<u32> = ring.weights().to_vec();
    weights.sort_unstable();
    weights.dedup();
    let n = ring.ngens();
    let mut seq: Vec<(u32, Polynomial)> = Vec::new();
    while seq.len() < upper {
        let mut next = None;
        for a in 0..ATTEMPTS {
            let w = weights[a % weights.len()];
            let mut f = Polynomial::zero(n);
            for (j, &wj) in ring.weights().iter().enumerate() {
                if wj == w {
                    f.add_term(Monomial::var(n, j), int(rng.gen_range(-5..=5)));
                }
            }
            if !ring.normal_form(&f).is_zero() && is_regular(ring, &seq, &(w, f.clone()), search_bound) {
                next = Some((w, f));
                break;
            }
        }
        match next {
            Some(f) => seq.push(f),
            None => break,
        }
    }
    DepthInterval {
        lower: seq.len(),
        upper,
        sequence: seq.iter().map(|(_, f)| f.to_string_with(ring.symbols())).collect(),
        seed,
        search_bound,
        attempts_per_level: ATTEMPTS,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(g: usize) -> Vec<String> {
        (1..=g).map(|i| format!("g_{i}")).collect()
    }

    fn free(g: usize, w: u32) -> QuotientRing {
        QuotientRing::new(names(g), vec![w; g], Vec::new())
    }

    fn veronese() -> QuotientRing {
        let rel = Polynomial::parse_with(&names(3), "g_2^2 + -1 g_1 g_3").unwrap();
        QuotientRing::new(names(3), vec![2; 3], vec![rel])
    }

    #[test]
    fn groebner_basics() {
        assert!(free(3, 1).groebner().is_empty());
        let r = veronese();
        assert_eq!(r.groebner().len(), 1);
        assert!(r.is_groebner() && r.is_idempotent());

        // twisted cubic: three quadrics in four variables
        let n = names(4);
        let p = |s: &str| Polynomial::parse_with(&n, s).unwrap();
        let r = QuotientRing::new(
            n.clone(),
            vec![1; 4],
            vec![p("g_1 g_3 + -1 g_2^2"), p("g_2 g_4 + -1 g_3^2"), p("g_1 g_4 + -1 g_2 g_3")],
        );
        assert!(r.is_groebner() && r.is_idempotent());
        assert_eq!(r.hilbert_series(5), [1, 4, 7, 10, 13, 16]);
        assert_eq!(r.krull_dimension(), 2);
    }

    #[test]
    fn hilbert_data() {
        assert_eq!(free(1, 2).hilbert_series(6), [1, 0, 1, 0, 1, 0, 1]);
        assert_eq!(free(3, 2).hilbert_series(4)[4], 6);
        let r = veronese();
        assert_eq!(r.hilbert_series(8), [1, 0, 3, 0, 5, 0, 7, 0, 9]);
        assert_eq!(r.hilbert_numerator(), [1, 0, 0, 0, -1]);
    }

    #[test]
    fn krull() {
        assert_eq!(free(4, 1).krull_dimension(), 4);
        let n = names(2);
        let p = |s: &str| Polynomial::parse_with(&n, s).unwrap();
        let r = QuotientRing::new(n.clone(), vec![1, 1], vec![p("g_1^2"), p("g_1 g_2"), p("g_2^2")]);
        assert_eq!(r.krull_dimension(), 0);
        assert_eq!(veronese().krull_dimension(), 2);
    }

    fn binom(n: usize, k: usize) -> usize {
        (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
    }

    #[test]
    fn koszul_resolutions() {
        for g in 1..=4 {
            let r = free(g, 1);
            let res = minimal_free_resolution_of_k(&r, g + 2, 10).unwrap();
            let expect: Vec<usize> = (0..=g).map(|i| binom(g, i)).collect();
            assert_eq!(res.table.betti, expect);
            assert_eq!(res.table.pd(), Some(g));
            assert!(res.table.euler_identity);
            assert!(res.is_minimal(&r) && res.is_complex(&r));
        }
        let res = minimal_free_resolution_of_k(&free(1, 2), 3, 12).unwrap();
        assert_eq!(res.table.betti, [1, 1]);
        assert_eq!(res.table.degrees, vec![vec![0], vec![2]]);
    }

    #[test]
    fn veronese_resolution_does_not_stop() {
        let r = veronese();
        let res = minimal_free_resolution_of_k(&r, 6, 12).unwrap();
        assert_eq!(res.table.betti, [1, 3, 4, 4, 4, 4, 4]);
        assert!(!res.table.terminated);
        assert!(res.is_minimal(&r) && res.is_complex(&r));
        assert!(matches!(minimal_free_resolution_of_k(&r, 8, 12), Err(Error::BoundTooSmall { .. })));
    }

    #[test]
    fn trivial_ring() {
        let r = QuotientRing::new(Vec::new(), Vec::new(), Vec::new());
        let res = minimal_free_resolution_of_k(&r, 2, 12).unwrap();
        assert_eq!(res.table.betti, [1]);
        assert_eq!(res.table.pd(), Some(0));
        let d = depth_interval(&r, 12, 7);
        assert_eq!((d.lower, d.upper), (0, 0));
    }

    #[test]
    fn depth() {
        let d = depth_interval(&free(3, 1), 8, 1);
        assert_eq!((d.lower, d.upper), (3, 3));
        let d = depth_interval(&veronese(), 12, 1);
        assert_eq!((d.lower, d.upper), (2, 2));
        let n = names(2);
        let p = |s: &str| Polynomial::parse_with(&n, s).unwrap();
        let art = QuotientRing::new(n.clone(), vec![1, 1], vec![p("g_1^2"), p("g_1 g_2"), p("g_2^2")]);
        let d = depth_interval(&art, 6, 1);
        assert_eq!((d.lower, d.upper), (0, 0));
    }
}
