//! Semifree resolutions of the trivial module `k` over `A`.
//!
//! A resolution is a list of basis elements `e_b`, each with a cohomological
//! degree, a filtration level and a differential image
//! `d(e_b) = sum_c a_bc e_c` over elements created earlier. On `a e_c` the
//! differential is `d(a) e_c + (-1)^|a| a d(e_c)`.
//!
//! A level-`i` element with internal degree `q` sits in degree `q - i`, i.e.
//! it is `Sigma^i` of a degree-`q` generator, where `(Sigma^i M)^j = M^{j+i}`.

use std::collections::{BTreeMap, HashMap};

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::cohomology::{Cohomology, GradedPresentation};
use crate::commalg::{BettiTable, DepthInterval, FreeResolution};
use crate::dg::{build_differential, AlgebraSpec, Differential};
use crate::error::{Error, Result};
use crate::linalg::{to_dense, to_sparse, Echelon, PivotRule, SparseMatrix, SparseVec};
use crate::poly::{monomials_of_degree, Monomial, Polynomial};
use crate::scalar::Scalar;
use crate::SCHEMA_VERSION;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "em")]
    EilenbergMoore,
    #[serde(rename = "killing")]
    KillingCycles,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisElement {
    pub symbol: String,
    pub degree: i32,
    /// `i` in `Sigma^i`; the internal degree is `degree + shift`.
    pub shift: u32,
    pub level: usize,
}

/// An element of a semifree module: coefficient in `A` per basis element.
pub type Element = BTreeMap<usize, Polynomial>;

#[derive(Debug, Clone)]
pub struct SemifreeResolution {
    diff: Differential,
    pub method: Method,
    pub basis: Vec<BasisElement>,
    pub images: Vec<Element>,
    pub truncation_degree: u32,
    /// False when a per-degree round limit stopped the construction early.
    pub complete: bool,
}

const MAX_ROUNDS: usize = 64;

fn add_into(acc: &mut Element, b: usize, p: &Polynomial) {
    if p.is_zero() {
        return;
    }
    let n = p.nvars();
    let entry = acc.entry(b).or_insert_with(|| Polynomial::zero(n));
    *entry = &*entry + p;
    if entry.is_zero() {
        acc.remove(&b);
    }
}

fn sign(e: i64) -> Scalar {
    if e.rem_euclid(2) == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// `a` with each term multiplied by `(-1)^{its degree}`, i.e. the Koszul
/// sign of moving `a` past an odd element, applied termwise so that
/// coefficients need not be homogeneous.
fn parity_twist(a: &Polynomial) -> Polynomial {
    Polynomial::from_terms(
        a.nvars(),
        a.terms().map(|(m, c)| (m.clone(), if m.degree() % 2 == 0 { c.clone() } else { -c.clone() })),
    )
}

struct DegreeBasis {
    basis: Vec<(usize, Monomial)>,
    index: HashMap<(usize, Monomial), usize>,
}

impl SemifreeResolution {
    fn empty(spec: &AlgebraSpec, method: Method, truncation_degree: u32) -> Self {
        SemifreeResolution {
            diff: build_differential(spec),
            method,
            basis: Vec::new(),
            images: Vec::new(),
            truncation_degree,
            complete: true,
        }
    }

    pub fn spec(&self) -> &AlgebraSpec {
        self.diff.spec()
    }

    fn n(&self) -> usize {
        self.spec().n()
    }

    fn push(&mut self, degree: i32, level: usize, image: Element) {
        let symbol = format!("e_{}", self.basis.len());
        self.basis.push(BasisElement {
            symbol,
            degree,
            shift: level as u32,
            level,
        });
        self.images.push(image);
    }

    /// The differential of a module element.
    pub fn apply(&self, x: &Element) -> Element {
        let mut out = Element::new();
        for (&c, a) in x {
            add_into(&mut out, c, &self.diff.apply(a));
            let twisted = parity_twist(a);
            for (&e, b) in &self.images[c] {
                add_into(&mut out, e, &(&twisted * b));
            }
        }
        out
    }

    /// Module action `a * x`.
    pub fn act(a: &Polynomial, x: &Element) -> Element {
        let mut out = Element::new();
        for (&c, p) in x {
            add_into(&mut out, c, &(a * p));
        }
        out
    }

    fn degree_basis(&self, d: i32, allowed: usize) -> DegreeBasis {
        let mut basis = Vec::new();
        for (c, e) in self.basis.iter().enumerate().take(allowed) {
            let k = d - e.degree;
            if k >= 0 {
                for m in monomials_of_degree(self.n(), k as u32) {
                    basis.push((c, m));
                }
            }
        }
        let index = basis.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        DegreeBasis { basis, index }
    }

    /// Like [`degree_basis`] but restricted to elements of level at most `max_level`.
    fn level_basis(&self, d: i32, max_level: usize) -> DegreeBasis {
        let mut basis = Vec::new();
        for (c, e) in self.basis.iter().enumerate() {
            let k = d - e.degree;
            if e.level <= max_level && k >= 0 {
                for m in monomials_of_degree(self.n(), k as u32) {
                    basis.push((c, m));
                }
            }
        }
        let index = basis.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        DegreeBasis { basis, index }
    }

    fn to_vec(&self, x: &Element, db: &DegreeBasis) -> Option<SparseVec> {
        let mut v = SparseVec::new();
        for (&c, p) in x {
            for (m, s) in p.terms() {
                v.push((*db.index.get(&(c, m.clone()))?, s.clone()));
            }
        }
        v.sort_by_key(|(i, _)| *i);
        Some(v)
    }

    fn from_vec(&self, v: &SparseVec, db: &DegreeBasis) -> Element {
        let mut out = Element::new();
        for (i, s) in v {
            let (c, m) = &db.basis[*i];
            add_into(&mut out, *c, &Polynomial::term(m.clone(), s.clone()));
        }
        out
    }

    fn matrix(&self, src: &DegreeBasis, tgt: &DegreeBasis) -> SparseMatrix {
        let cols = src
            .basis
            .iter()
            .map(|(c, m)| {
                let x = Element::from([(*c, Polynomial::term(m.clone(), Scalar::one()))]);
                self.to_vec(&self.apply(&x), tgt).expect("differential stays in the subcomplex")
            })
            .collect();
        SparseMatrix::from_columns(tgt.basis.len(), cols)
    }

    /// Cocycles of degree `d` representing a basis of `H^d`, in echelon form
    /// reduced modulo boundaries.
    fn cohomology_basis(&self, d: i32) -> (Vec<SparseVec>, DegreeBasis) {
        let all = self.basis.len();
        let below = self.degree_basis(d - 1, all);
        let here = self.degree_basis(d, all);
        let above = self.degree_basis(d + 1, all);
        let mut boundaries = Echelon::new(here.basis.len(), PivotRule::Leading);
        for col in self.matrix(&below, &here).columns() {
            boundaries.insert(col);
        }
        let mut classes = Echelon::new(here.basis.len(), PivotRule::Leading);
        for z in self.matrix(&here, &above).kernel_basis_sparse() {
            let r = boundaries.reduce(&z);
            if !r.is_empty() {
                classes.insert(&r);
            }
        }
        (classes.rows().to_vec(), here)
    }

    pub fn cohomology_dim(&self, d: i32) -> usize {
        self.cohomology_basis(d).0.len()
    }

    pub fn min_degree(&self) -> i32 {
        self.basis.iter().map(|e| e.degree).min().unwrap_or(0)
    }

    pub fn validate(&self) -> ResolutionChecks {
        let square_zero = self.images.iter().all(|img| self.apply(img).is_empty());
        let semifree = self
            .images
            .iter()
            .enumerate()
            .all(|(b, img)| img.keys().all(|&c| c < b && self.basis[c].level < self.basis[b].level));
        let minimal = self
            .images
            .iter()
            .all(|img| img.values().all(|p| p.terms().all(|(m, _)| m.degree() > 0)));
        let lo = self.min_degree().min(0);
        let dims: Vec<(i32, usize)> = (lo..=self.truncation_degree as i32).map(|d| (d, self.cohomology_dim(d))).collect();
        let quasi_isomorphism = dims.iter().all(|&(d, h)| h == usize::from(d == 0));
        ResolutionChecks {
            square_zero,
            semifree,
            minimal,
            quasi_isomorphism,
            cohomology_dims: dims,
            truncation_degree: self.truncation_degree,
        }
    }

    /// Number of basis elements per cohomological degree.
    pub fn degree_profile(&self) -> BTreeMap<i32, usize> {
        let mut out = BTreeMap::new();
        for e in &self.basis {
            *out.entry(e.degree).or_insert(0) += 1;
        }
        out
    }

    /// Number of basis elements per filtration level.
    pub fn level_sizes(&self) -> Vec<usize> {
        let top = self.basis.iter().map(|e| e.level).max().map_or(0, |l| l + 1);
        let mut out = vec![0; top];
        for e in &self.basis {
            out[e.level] += 1;
        }
        out
    }

    pub fn certificate(&self) -> ResolutionCertificate {
        let names: Vec<String> = self.basis.iter().map(|e| e.symbol.clone()).collect();
        ResolutionCertificate {
            schema_version: SCHEMA_VERSION,
            spec: self.spec().clone(),
            method: self.method,
            truncation_degree: self.truncation_degree,
            complete: self.complete,
            basis: self
                .basis
                .iter()
                .zip(&self.images)
                .map(|(e, img)| BasisRecord {
                    element: e.clone(),
                    differential: img.iter().map(|(c, p)| (names[*c].clone(), p.to_string())).collect(),
                })
                .collect(),
            level_sizes: self.level_sizes(),
            degree_profile: self.degree_profile(),
            dg_free_class: dg_free_class(self),
            checks: self.validate(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionChecks {
    pub square_zero: bool,
    pub semifree: bool,
    /// Every differential coefficient lies in `A^{>0}`.
    pub minimal: bool,
    /// The augmented complex is acyclic through `truncation_degree`.
    pub quasi_isomorphism: bool,
    pub cohomology_dims: Vec<(i32, usize)>,
    pub truncation_degree: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisRecord {
    #[serde(flatten)]
    pub element: BasisElement,
    /// `(basis symbol, coefficient)` pairs.
    pub differential: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResolutionCertificate {
    pub schema_version: u32,
    pub spec: AlgebraSpec,
    pub method: Method,
    pub truncation_degree: u32,
    pub complete: bool,
    pub basis: Vec<BasisRecord>,
    pub level_sizes: Vec<usize>,
    pub degree_profile: BTreeMap<i32, usize>,
    pub dg_free_class: usize,
    pub checks: ResolutionChecks,
}

/// Adjoin basis elements degree by degree, killing a basis of `H^d` until
/// it vanishes, for `d = 1..=truncation_degree`.
pub fn killing_cycles_resolution(spec: &AlgebraSpec, truncation_degree: u32) -> SemifreeResolution {
    let mut f = SemifreeResolution::empty(spec, Method::KillingCycles, truncation_degree);
    f.push(0, 0, Element::new());
    for d in 1..=truncation_degree as i32 {
        let mut settled = false;
        for _ in 0..MAX_ROUNDS {
            let (classes, here) = f.cohomology_basis(d);
            if classes.is_empty() {
                settled = true;
                break;
            }
            for z in &classes {
                let image = f.from_vec(z, &here);
                let level = 1 + image.keys().map(|&c| f.basis[c].level).max().unwrap_or(0);
                f.push(d - 1, level, image);
            }
        }
        if !settled {
            f.complete = false;
            break;
        }
    }
    f
}

fn lift(reps: &[Polynomial], n: usize, p: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(n);
    for (m, c) in p.terms() {
        let mut v = Polynomial::one(n);
        for (j, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                v = &v * &reps[j].pow(e);
            }
        }
        out.add_scaled(&v, c);
    }
    out
}

/// Lift a terminated minimal resolution of `k` over `H(A)` to a semifree
/// resolution over `A`: level `i` carries `Sigma^i V_i`, the leading part of
/// each differential lifts the matrix entries through the class
/// representatives, and corrections in lower levels are solved exactly.
pub fn eilenberg_moore(
    coh: &Cohomology,
    pres: &GradedPresentation,
    res: &FreeResolution,
    truncation_degree: u32,
) -> Result<SemifreeResolution> {
    let table = &res.table;
    if !table.terminated {
        return Err(Error::NotTerminated { steps: table.steps });
    }
    let spec = coh.spec();
    let n = spec.n();
    let reps = pres.generator_reps();
    let mut f = SemifreeResolution::empty(spec, Method::EilenbergMoore, truncation_degree);
    let mut offsets = vec![0usize];
    f.push(0, 0, Element::new());
    for i in 1..table.degrees.len() {
        offsets.push(f.basis.len());
        for (b, &q) in table.degrees[i].iter().enumerate() {
            let degree = q as i32 - i as i32;
            let mut leading = Element::new();
            for (c, entry) in res.maps[i - 1][b].iter().enumerate() {
                let qc = table.degrees[i - 1][c] as i64;
                add_into(&mut leading, offsets[i - 1] + c, &lift(&reps, n, entry).scale(&sign(qc)));
            }
            let defect = f.apply(&leading);
            let image = if defect.is_empty() {
                leading
            } else {
                let target: Element = defect.into_iter().map(|(c, p)| (c, -&p)).collect();
                let solved = (2..=i)
                    .filter_map(|gap| {
                        let top = i - gap;
                        let src = f.level_basis(degree + 1, top);
                        let tgt = f.level_basis(degree + 2, top);
                        let v = f.to_vec(&target, &tgt)?;
                        let x = f.matrix(&src, &tgt).membership(&to_dense(&v, tgt.basis.len()))?;
                        Some(f.from_vec(&to_sparse(&x), &src))
                    })
                    .next()
                    .ok_or(Error::LiftObstruction { level: i, degree })?;
                let mut image = leading;
                for (c, p) in &solved {
                    add_into(&mut image, *c, p);
                }
                image
            };
            f.push(degree, i, image);
        }
    }
    Ok(f)
}

/// Longest dependency chain among basis elements: `e_b` depends on every
/// `e_c` appearing in `d(e_b)`.
pub fn dg_free_class(f: &SemifreeResolution) -> usize {
    let mut depth = vec![0usize; f.basis.len()];
    for (b, img) in f.images.iter().enumerate() {
        depth[b] = img.keys().map(|&c| depth[c] + 1).max().unwrap_or(0);
    }
    depth.into_iter().max().unwrap_or(0)
}

/// Basis elements per cohomological degree predicted by a Betti table:
/// a level-`i` generator of internal degree `q` sits in degree `q - i`.
pub fn em_degree_profile(table: &BettiTable) -> BTreeMap<i32, usize> {
    let mut out = BTreeMap::new();
    for (i, degs) in table.degrees.iter().enumerate() {
        for &q in degs {
            *out.entry(q as i32 - i as i32).or_insert(0) += 1;
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeLengthBounds {
    pub lower: usize,
    pub lower_source: String,
    /// `None` when no finite resolution is available within the bounds.
    pub upper: Option<usize>,
    pub upper_source: String,
    pub exact: Option<usize>,
}

/// Depth of `H(A)` from below; the free class of a resolution and
/// `pd_{H(A)} k` from above.
pub fn cone_length_bounds(depth: &DepthInterval, resolution_class: Option<usize>, pd: Option<usize>) -> ConeLengthBounds {
    let lower = depth.lower;
    let (upper, upper_source) = match (resolution_class, pd) {
        (Some(c), Some(p)) if c <= p => (Some(c), "DG free class of the Eilenberg-Moore resolution".to_string()),
        (_, Some(p)) => (Some(p), "projective dimension of k over H(A)".to_string()),
        (Some(c), None) => (Some(c), "DG free class of the Eilenberg-Moore resolution".to_string()),
        (None, None) => (None, "no terminating resolution within the bounds".to_string()),
    };
    ConeLengthBounds {
        lower,
        lower_source: "depth of H(A), regular sequence found".to_string(),
        upper,
        upper_source,
        exact: upper.filter(|&u| u == lower),
    }
}

/// `Sigma^i` of a module element, with the action and differential of the
/// suspended module.
#[derive(Debug, Clone, PartialEq)]
pub struct Suspended {
    pub shift: i64,
    pub inner: Element,
}

impl Suspended {
    /// `a (Sigma^i m) = (-1)^{|a| i} Sigma^i (a m)`.
    pub fn act(&self, a: &Polynomial) -> Suspended {
        let a = if self.shift % 2 == 0 { a.clone() } else { parity_twist(a) };
        let inner = SemifreeResolution::act(&a, &self.inner);
        Suspended { shift: self.shift, inner }
    }

    /// `d(Sigma^i m) = (-1)^i Sigma^i d(m)`.
    pub fn differential(&self, f: &SemifreeResolution) -> Suspended {
        let s = sign(self.shift);
        let inner = f
            .apply(&self.inner)
            .into_iter()
            .map(|(c, p)| (c, p.scale(&s)))
            .collect();
        Suspended { shift: self.shift, inner }
    }

    pub fn add(&self, other: &Suspended) -> Suspended {
        let mut inner = self.inner.clone();
        for (c, p) in &other.inner {
            add_into(&mut inner, *c, p);
        }
        Suspended { shift: self.shift, inner }
    }
}

/// `d(a x) = d(a) x + (-1)^{|a|} a d(x)` on `Sigma^i F`.
pub fn suspended_leibniz_holds(f: &SemifreeResolution, a: &Polynomial, x: &Suspended) -> bool {
    let lhs = x.act(a).differential(f);
    let da = f.diff.apply(a);
    let rhs = x.act(&da).add(&x.differential(f).act(&parity_twist(a)));
    lhs == rhs
}
