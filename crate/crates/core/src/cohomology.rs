//! Degreewise cohomology `H(A)` and a presentation of it as a commutative
//! algebra, truncated at a degree bound.
//!
//! In each degree `d` the boundaries `im d^{d-1}` and a set of class
//! representatives are kept in reduced echelon form with pivots at leading
//! monomials. Representatives are reduced modulo boundaries, so the
//! coordinates of a class are read off at the representative pivots.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dg::{build_differential, AlgebraSpec, Differential};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Insert, PivotRule, SparseMatrix, SparseVec};
use crate::poly::{index_of, monomials_of_degree, weighted_monomials, Monomial, Polynomial, WeightedOrder};
use crate::scalar::Scalar;
use crate::SCHEMA_VERSION;

#[derive(Debug, Clone)]
struct DegreeSlice {
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    boundaries: Echelon,
    classes: Echelon,
    rank_out: usize,
}

/// Cohomology of one spec in degrees `0..=max_degree`.
#[derive(Debug, Clone)]
pub struct Cohomology {
    diff: Differential,
    max_degree: u32,
    slices: Vec<DegreeSlice>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub schema_version: u32,
    pub spec: AlgebraSpec,
    pub max_degree: u32,
    /// `dim H^d` for `d = 0..=max_degree`.
    pub dims: Vec<usize>,
    /// `dim A^d`.
    pub chain_dims: Vec<usize>,
    /// `rank d^d : A^d -> A^{d+1}`.
    pub ranks: Vec<usize>,
    /// Cocycles whose classes form the chosen basis of `H^d`.
    pub representatives: Vec<Vec<String>>,
}

impl CohomologyReport {
    /// `dim H^d = dim A^d - rank d^{d-1} - rank d^d` in every degree.
    pub fn rank_nullity_holds(&self) -> bool {
        (0..self.dims.len()).all(|d| {
            let before = if d == 0 { 0 } else { self.ranks[d - 1] };
            self.chain_dims[d] == self.dims[d] + before + self.ranks[d]
        })
    }
}

impl Cohomology {
    pub fn compute(spec: &AlgebraSpec, max_degree: u32) -> Self {
        let diff = build_differential(spec);
        let matrices: Vec<SparseMatrix> = (0..=max_degree).into_par_iter().map(|d| diff.matrix(d)).collect();
        let slices = (0..=max_degree as usize)
            .into_par_iter()
            .map(|d| {
                let basis = monomials_of_degree(spec.n(), d as u32);
                let index = index_of(&basis);
                let mut boundaries = Echelon::new(basis.len(), PivotRule::Leading);
                if d > 0 {
                    for col in matrices[d - 1].columns() {
                        boundaries.insert(col);
                    }
                }
                let mut classes = Echelon::new(basis.len(), PivotRule::Leading);
                for z in matrices[d].kernel_basis_sparse() {
                    let r = boundaries.reduce(&z);
                    if !r.is_empty() {
                        classes.insert(&r);
                    }
                }
                DegreeSlice {
                    basis,
                    index,
                    boundaries,
                    classes,
                    rank_out: matrices[d].rank(),
                }
            })
            .collect();
        Cohomology {
            diff,
            max_degree,
            slices,
        }
    }

    pub fn spec(&self) -> &AlgebraSpec {
        self.diff.spec()
    }

    pub fn differential(&self) -> &Differential {
        &self.diff
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn dim(&self, d: u32) -> usize {
        self.slices[d as usize].classes.rank()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.slices.iter().map(|s| s.classes.rank()).collect()
    }

    fn slice(&self, d: u32) -> Result<&DegreeSlice> {
        self.slices.get(d as usize).ok_or(Error::DegreeOutOfRange {
            degree: d,
            max: self.max_degree,
        })
    }

    /// The `k`-th basis representative of `H^d`.
    pub fn representative(&self, d: u32, k: usize) -> Polynomial {
        let s = &self.slices[d as usize];
        Polynomial::from_sparse(self.spec().n(), &s.basis, &s.classes.rows()[k])
    }

    pub fn representatives(&self, d: u32) -> Vec<Polynomial> {
        (0..self.dim(d)).map(|k| self.representative(d, k)).collect()
    }

    /// Representative of the class with the given coordinates.
    pub fn realize(&self, d: u32, coords: &[Scalar]) -> Polynomial {
        let mut p = Polynomial::zero(self.spec().n());
        for (k, c) in coords.iter().enumerate() {
            p.add_scaled(&self.representative(d, k), c);
        }
        p
    }

    pub fn is_coboundary(&self, d: u32, p: &Polynomial) -> Result<bool> {
        let s = self.slice(d)?;
        if !p.is_homogeneous_of(d) {
            return Err(Error::NotHomogeneous(d));
        }
        Ok(s.boundaries.contains(&p.to_sparse(&s.index)))
    }

    /// Coordinates of the class of a cocycle in degree `d`.
    pub fn class_of(&self, d: u32, p: &Polynomial) -> Result<Vec<Scalar>> {
        let s = self.slice(d)?;
        if !p.is_homogeneous_of(d) {
            return Err(Error::NotHomogeneous(d));
        }
        let dp = self.diff.apply(p);
        if !dp.is_zero() {
            return Err(Error::NotACocycle(dp.to_string()));
        }
        Ok(self.coords_unchecked(s, &p.to_sparse(&s.index)))
    }

    fn coords_unchecked(&self, s: &DegreeSlice, v: &SparseVec) -> Vec<Scalar> {
        let r = s.boundaries.reduce(v);
        let lookup: HashMap<usize, &Scalar> = r.iter().map(|(i, x)| (*i, x)).collect();
        s.classes
            .pivots()
            .iter()
            .map(|p| lookup.get(p).map(|x| (*x).clone()).unwrap_or_else(Scalar::zero))
            .collect()
    }

    /// Product of classes given as `(degree, coordinates)`.
    pub fn cup_product(&self, classes: &[(u32, Vec<Scalar>)]) -> Result<(u32, Vec<Scalar>)> {
        let total: u32 = classes.iter().map(|(d, _)| d).sum();
        if total > self.max_degree {
            return Err(Error::DegreeOutOfRange {
                degree: total,
                max: self.max_degree,
            });
        }
        let mut acc = Polynomial::one(self.spec().n());
        for (d, c) in classes {
            if c.len() != self.dim(*d) {
                return Err(Error::ArityMismatch {
                    expected: self.dim(*d),
                    got: c.len(),
                });
            }
            acc = &acc * &self.realize(*d, c);
        }
        Ok((total, self.class_of(total, &acc)?))
    }

    pub fn report(&self) -> CohomologyReport {
        CohomologyReport {
            schema_version: SCHEMA_VERSION,
            spec: self.spec().clone(),
            max_degree: self.max_degree,
            dims: self.dims(),
            chain_dims: self.slices.iter().map(|s| s.basis.len()).collect(),
            ranks: self.slices.iter().map(|s| s.rank_out).collect(),
            representatives: (0..=self.max_degree)
                .map(|d| self.representatives(d).iter().map(|p| p.to_string()).collect())
                .collect(),
        }
    }
}

pub fn cohomology_dims(spec: &AlgebraSpec, max_degree: u32) -> CohomologyReport {
    Cohomology::compute(spec, max_degree).report()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PresentationGenerator {
    pub symbol: String,
    pub degree: u32,
    pub representative: String,
}

/// Generators and relations of `H(A)` certified complete up to `degree_bound`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GradedPresentation {
    pub schema_version: u32,
    pub spec: AlgebraSpec,
    pub degree_bound: u32,
    pub generators: Vec<PresentationGenerator>,
    /// Minimal relations, written in the generator symbols.
    pub relations: Vec<String>,
    /// Weighted degree of each relation.
    pub relation_degrees: Vec<u32>,
    /// Dimension of the whole relation space (kernel of evaluation) per degree.
    pub relation_space_dims: Vec<usize>,
    /// Rank of the evaluation map onto `H^d` per degree.
    pub evaluation_ranks: Vec<usize>,
    pub cohomology_dims: Vec<usize>,
    /// Every relation evaluated on representatives is a coboundary.
    pub relations_verified: bool,
}

impl GradedPresentation {
    pub fn symbols(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.symbol.clone()).collect()
    }

    pub fn weights(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.degree).collect()
    }

    pub fn relation_polys(&self) -> Vec<Polynomial> {
        let names = self.symbols();
        self.relations
            .iter()
            .map(|r| Polynomial::parse_with(&names, r).expect("printed by this module"))
            .collect()
    }

    pub fn generator_reps(&self) -> Vec<Polynomial> {
        self.generators
            .iter()
            .map(|g| Polynomial::parse(self.spec.n(), &g.representative).expect("printed by this module"))
            .collect()
    }

    /// Evaluation onto `H(A)` is onto in every degree up to the bound.
    pub fn is_surjective(&self) -> bool {
        self.evaluation_ranks
            .iter()
            .zip(&self.cohomology_dims)
            .skip(1)
            .all(|(r, d)| r == d)
    }

    pub fn is_free(&self) -> bool {
        self.relations.is_empty()
    }
}

struct Evaluator<'a> {
    coh: &'a Cohomology,
    reps: Vec<Polynomial>,
    cache: HashMap<Monomial, Polynomial>,
}

impl Evaluator<'_> {
    fn eval(&mut self, m: &Monomial) -> Polynomial {
        if let Some(p) = self.cache.get(m) {
            return p.clone();
        }
        let n = self.coh.spec().n();
        let out = match m.support().next() {
            None => Polynomial::one(n),
            Some(i) => {
                let g = Monomial::var(m.nvars(), i);
                let rest = self.eval(&g.quotient_of(m));
                &self.reps[i] * &rest
            }
        };
        self.cache.insert(m.clone(), out.clone());
        out
    }

    fn eval_poly(&mut self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.coh.spec().n());
        for (m, c) in p.terms() {
            let v = self.eval(m);
            out.add_scaled(&v, c);
        }
        out
    }

    /// Monomial over generators, padded to `g` variables, as class coordinates.
    fn class_vec(&mut self, d: u32, m: &Monomial) -> SparseVec {
        let p = self.eval(m);
        let s = &self.coh.slices[d as usize];
        let coords = self.coh.coords_unchecked(s, &p.to_sparse(&s.index));
        crate::linalg::to_sparse(&coords)
    }
}

fn pad(m: &Monomial, g: usize) -> Monomial {
    let mut e = m.exponents().to_vec();
    e.resize(g, 0);
    Monomial::new(e)
}

fn generator_symbol(spec: &AlgebraSpec, rep: &Polynomial, position: usize) -> String {
    if spec.is_representative() && rep.len() == 1 {
        let (m, c) = rep.leading().expect("nonzero");
        if c.is_one() && m.degree() == 2 {
            let f = m.factors();
            return format!("g_{{{},{}}}", f[0] + 1, f[1] + 1);
        }
    }
    format!("g_{}", position + 1)
}

/// Greedy generators by increasing degree, then minimal relations from the
/// kernel of the evaluation map, both up to `degree_bound`.
pub fn extract_presentation(coh: &Cohomology, degree_bound: u32) -> Result<GradedPresentation> {
    if degree_bound > coh.max_degree() {
        return Err(Error::DegreeOutOfRange {
            degree: degree_bound,
            max: coh.max_degree(),
        });
    }
    let spec = coh.spec().clone();
    let mut gen_degrees: Vec<u32> = Vec::new();
    let mut gen_reps: Vec<Polynomial> = Vec::new();

    for d in 1..=degree_bound {
        let dim = coh.dim(d);
        if dim == 0 {
            continue;
        }
        let mut span = Echelon::new(dim, PivotRule::Leading);
        if !gen_degrees.is_empty() {
            let order = WeightedOrder::new(gen_degrees.clone());
            let mut ev = Evaluator {
                coh,
                reps: gen_reps.clone(),
                cache: HashMap::new(),
            };
            for m in weighted_monomials(&order, d) {
                let v = ev.class_vec(d, &m);
                span.insert(&v);
            }
        }
        for k in 0..dim {
            if let Insert::Pivot(_) = span.insert(&vec![(k, Scalar::one())]) {
                gen_degrees.push(d);
                gen_reps.push(coh.representative(d, k));
            }
        }
    }

    let g = gen_degrees.len();
    let symbols: Vec<String> = gen_reps
        .iter()
        .enumerate()
        .map(|(i, r)| generator_symbol(&spec, r, i))
        .collect();
    let order = WeightedOrder::new(gen_degrees.clone());
    let mut ev = Evaluator {
        coh,
        reps: gen_reps.clone(),
        cache: HashMap::new(),
    };
    let mut relations: Vec<(u32, Polynomial)> = Vec::new();
    let mut relation_space_dims = vec![0; degree_bound as usize + 1];
    let mut evaluation_ranks = vec![0; degree_bound as usize + 1];
    evaluation_ranks[0] = 1;
    for d in 1..=degree_bound {
        let mons = if g == 0 { Vec::new() } else { weighted_monomials(&order, d) };
        if mons.is_empty() {
            continue;
        }
        let dim = coh.dim(d);
        let columns: Vec<SparseVec> = mons.iter().map(|m| ev.class_vec(d, m)).collect();
        let eval = SparseMatrix::from_columns(dim, columns);
        let kernel = eval.kernel_basis();
        evaluation_ranks[d as usize] = mons.len() - kernel.len();
        relation_space_dims[d as usize] = kernel.len();
        if kernel.is_empty() {
            continue;
        }
        let index = index_of(&mons);
        let mut canonical = Echelon::new(mons.len(), PivotRule::Leading);
        for k in &kernel {
            canonical.insert(&crate::linalg::to_sparse(k));
        }
        let mut lower = Echelon::new(mons.len(), PivotRule::Leading);
        for (rd, r) in &relations {
            for m in weighted_monomials(&order, d - rd) {
                lower.insert(&r.mul_monomial(&m, &Scalar::one()).to_sparse(&index));
            }
        }
        for row in canonical.rows() {
            if let Insert::Pivot(_) = lower.insert(row) {
                relations.push((d, Polynomial::from_sparse(g, &mons, row)));
            }
        }
    }

    let relations_verified = relations.iter().all(|(d, r)| {
        let value = ev.eval_poly(r);
        coh.is_coboundary(*d, &value).unwrap_or(false)
    });

    Ok(GradedPresentation {
        schema_version: SCHEMA_VERSION,
        spec,
        degree_bound,
        generators: gen_degrees
            .iter()
            .zip(&gen_reps)
            .zip(&symbols)
            .map(|((d, r), s)| PresentationGenerator {
                symbol: s.clone(),
                degree: *d,
                representative: r.to_string(),
            })
            .collect(),
        relations: relations.iter().map(|(_, r)| r.to_string_with(&symbols)).collect(),
        relation_degrees: relations.iter().map(|(d, _)| *d).collect(),
        relation_space_dims,
        evaluation_ranks,
        cohomology_dims: coh.dims()[..=degree_bound as usize].to_vec(),
        relations_verified,
    })
}

/// Whether a polynomial in generator symbols evaluates to a coboundary.
pub fn evaluates_to_coboundary(coh: &Cohomology, pres: &GradedPresentation, rel: &Polynomial, degree: u32) -> bool {
    let mut ev = Evaluator {
        coh,
        reps: pres.generator_reps(),
        cache: HashMap::new(),
    };
    let value = ev.eval_poly(&rel_padded(rel, pres.generators.len()));
    coh.is_coboundary(degree, &value).unwrap_or(false)
}

fn rel_padded(p: &Polynomial, g: usize) -> Polynomial {
    Polynomial::from_terms(g, p.terms().map(|(m, c)| (pad(m, g), c.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn binom(n: u64, k: u64) -> u64 {
        (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
    }

    #[test]
    fn zero_differential_is_free() {
        let coh = Cohomology::compute(&AlgebraSpec::zero(3), 5);
        for d in 0..=5u64 {
            assert_eq!(coh.dim(d as u32) as u64, binom(d + 2, d));
        }
        let pres = extract_presentation(&coh, 5).unwrap();
        assert_eq!(pres.generators.len(), 3);
        assert!(pres.generators.iter().all(|g| g.degree == 1));
        assert!(pres.is_free() && pres.is_surjective());
    }

    #[test]
    fn representative_low_degrees() {
        for n in 2..=4usize {
            let coh = Cohomology::compute(&AlgebraSpec::representative(n), 3);
            assert_eq!(coh.dim(0), 1);
            assert_eq!(coh.dim(1), 0);
            assert_eq!(coh.dim(2), n * (n - 1) / 2);
            assert!(coh.report().rank_nullity_holds());
        }
    }

    #[test]
    fn classes() {
        let coh = Cohomology::compute(&AlgebraSpec::representative(3), 4);
        let p = |s: &str| Polynomial::parse(3, s).unwrap();
        assert!(coh.class_of(2, &Polynomial::zero(3)).unwrap().iter().all(Zero::is_zero));
        assert!(coh.class_of(2, &p("x1 x2")).unwrap().iter().all(Zero::is_zero));
        assert!(coh.class_of(2, &p("x2^2")).unwrap().iter().any(|x| !x.is_zero()));
        assert!(matches!(coh.class_of(1, &p("x2")), Err(Error::NotACocycle(_))));
        assert!(matches!(coh.class_of(9, &p("x2")), Err(Error::DegreeOutOfRange { .. })));
    }

    #[test]
    fn cup_products() {
        let coh = Cohomology::compute(&AlgebraSpec::representative(3), 4);
        let p = |s: &str| Polynomial::parse(3, s).unwrap();
        let c22 = (2, coh.class_of(2, &p("x2^2")).unwrap());
        let c23 = (2, coh.class_of(2, &p("x2 x3")).unwrap());
        let c33 = (2, coh.class_of(2, &p("x3^2")).unwrap());
        let unit = (0, vec![int(1)]);
        assert_eq!(coh.cup_product(&[c22.clone(), unit]).unwrap(), c22);
        let a = coh.cup_product(&[c23.clone(), c23]).unwrap();
        let b = coh.cup_product(&[c22.clone(), c33]).unwrap();
        assert_eq!(a, b);
        assert!(a.1.iter().any(|x| !x.is_zero()));
        assert!(coh.cup_product(&[c22.clone(), c22.clone(), c22]).is_err());

        let coh2 = Cohomology::compute(&AlgebraSpec::representative(2), 4);
        let sq = (2, coh2.class_of(2, &Polynomial::parse(2, "x2^2").unwrap()).unwrap());
        let (d, c) = coh2.cup_product(&[sq.clone(), sq]).unwrap();
        assert_eq!(d, 4);
        assert!(c.iter().any(|x| !x.is_zero()));
    }

    #[test]
    fn presentation_of_representatives() {
        let coh = Cohomology::compute(&AlgebraSpec::representative(2), 8);
        let pres = extract_presentation(&coh, 8).unwrap();
        assert_eq!(pres.symbols(), ["g_{2,2}"]);
        assert!(pres.is_free());

        let coh = Cohomology::compute(&AlgebraSpec::representative(3), 6);
        let pres = extract_presentation(&coh, 6).unwrap();
        assert_eq!(pres.symbols(), ["g_{2,2}", "g_{2,3}", "g_{3,3}"]);
        assert_eq!(pres.relations.len(), 1);
        assert_eq!(pres.relation_degrees, [4]);
        assert!(pres.relations_verified);
        assert!(pres.is_surjective());
    }
}
