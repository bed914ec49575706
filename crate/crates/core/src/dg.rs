//! The family of DG polynomial algebras `A(t1, ..., tn)`.
//!
//! The underlying algebra is `Q[x1, ..., xn]` with every `xi` in degree 1 and
//! the differential is determined on generators by
//! `d(xi) = sum_j tj * xi * xj`, extended by the graded Leibniz rule
//! `d(ab) = d(a) b + (-1)^|a| a d(b)`.
//!
//! Classification certificates only use field operations (no roots, no
//! rescaling of `y1`), so they are valid over any field containing the `tj`.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;
use crate::linalg::SparseMatrix;
use crate::poly::{index_of, monomials_of_degree, substitute, LinearChange, Monomial, Polynomial};
use crate::scalar::{self, Scalar};

/// Parameters `t` of `A(t1, ..., tn)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SpecWire", into = "SpecWire")]
pub struct AlgebraSpec {
    t: Vec<Scalar>,
}

#[derive(Serialize, Deserialize)]
struct SpecWire {
    n: usize,
    #[serde(with = "scalar::as_string_vec")]
    t: Vec<Scalar>,
}

impl TryFrom<SpecWire> for AlgebraSpec {
    type Error = ParseError;
    fn try_from(w: SpecWire) -> Result<Self, ParseError> {
        if w.n != w.t.len() {
            return Err(ParseError::Spec(format!("n = {} but t has {} entries", w.n, w.t.len())));
        }
        AlgebraSpec::new(w.t)
    }
}

impl From<AlgebraSpec> for SpecWire {
    fn from(s: AlgebraSpec) -> Self {
        SpecWire { n: s.n(), t: s.t }
    }
}

impl AlgebraSpec {
    pub fn new(t: Vec<Scalar>) -> Result<Self, ParseError> {
        if t.is_empty() {
            return Err(ParseError::Spec("need at least one generator".into()));
        }
        Ok(AlgebraSpec { t })
    }

    pub fn from_ints(t: &[i64]) -> Self {
        Self::new(t.iter().map(|&x| scalar::int(x)).collect()).expect("nonempty")
    }

    /// `A(1, 0, ..., 0)` in `n` generators.
    pub fn representative(n: usize) -> Self {
        let mut t = vec![Scalar::zero(); n];
        t[0] = Scalar::one();
        Self::new(t).expect("n >= 1")
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![Scalar::zero(); n]).expect("n >= 1")
    }

    /// Comma-separated rationals, e.g. `"1,0,-3/2"`.
    pub fn parse_t(s: &str) -> Result<Self, ParseError> {
        let t = s
            .split(',')
            .map(scalar::parse)
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(t)
    }

    pub fn n(&self) -> usize {
        self.t.len()
    }

    pub fn t(&self) -> &[Scalar] {
        &self.t
    }

    pub fn is_zero(&self) -> bool {
        self.t.iter().all(Zero::is_zero)
    }

    pub fn is_representative(&self) -> bool {
        self.t[0].is_one() && self.t[1..].iter().all(Zero::is_zero)
    }

    pub fn t_string(&self) -> String {
        self.t.iter().map(scalar::format).collect::<Vec<_>>().join(",")
    }
}

#[derive(Debug, Clone)]
pub struct Differential {
    spec: AlgebraSpec,
    generator_images: Vec<Polynomial>,
}

pub fn build_differential(spec: &AlgebraSpec) -> Differential {
    let n = spec.n();
    let generator_images = (0..n)
        .map(|i| {
            let xi = Monomial::var(n, i);
            Polynomial::from_terms(
                n,
                spec.t()
                    .iter()
                    .enumerate()
                    .map(|(j, tj)| (xi.mul(&Monomial::var(n, j)), tj.clone())),
            )
        })
        .collect();
    Differential {
        spec: spec.clone(),
        generator_images,
    }
}

pub type DiffCache = HashMap<Monomial, Polynomial>;

impl Differential {
    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.n()
    }

    pub fn generator_images(&self) -> &[Polynomial] {
        &self.generator_images
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        let mut cache = DiffCache::new();
        self.apply_cached(p, &mut cache)
    }

    pub fn apply_cached(&self, p: &Polynomial, cache: &mut DiffCache) -> Polynomial {
        let mut out = Polynomial::zero(self.n());
        for (m, c) in p.terms() {
            let dm = self.on_monomial(m, cache);
            out.add_scaled(&dm, c);
        }
        out
    }

    /// `d(xi * rest) = d(xi) rest - xi d(rest)`, peeling the first factor.
    pub fn on_monomial(&self, m: &Monomial, cache: &mut DiffCache) -> Polynomial {
        if let Some(hit) = cache.get(m) {
            return hit.clone();
        }
        let n = self.n();
        let out = match m.degree() {
            0 => Polynomial::zero(n),
            1 => {
                let i = m.support().next().expect("degree one");
                self.generator_images[i].clone()
            }
            _ => {
                let i = m.support().next().expect("nonconstant");
                let xi = Monomial::var(n, i);
                let rest = xi.quotient_of(m);
                let d_rest = self.on_monomial(&rest, cache);
                let mut acc = self.generator_images[i].mul_monomial(&rest, &Scalar::one());
                acc.add_scaled(&d_rest.mul_monomial(&xi, &Scalar::one()), &-Scalar::one());
                acc
            }
        };
        cache.insert(m.clone(), out.clone());
        out
    }

    /// Matrix of `d` restricted to degree `d0`, in the global monomial bases.
    pub fn matrix(&self, d0: u32) -> SparseMatrix {
        let n = self.n();
        let cols = monomials_of_degree(n, d0);
        let rows = monomials_of_degree(n, d0 + 1);
        let idx = index_of(&rows);
        let mut cache = DiffCache::new();
        let columns = cols
            .iter()
            .map(|m| self.on_monomial(m, &mut cache).to_sparse(&idx))
            .collect();
        SparseMatrix::from_columns(rows.len(), columns)
    }

    pub fn check_square_zero(&self, max_degree: u32) -> SquareZeroCheck {
        let mut cache = DiffCache::new();
        let mut checked = 0;
        for d in 0..=max_degree {
            for m in monomials_of_degree(self.n(), d) {
                let once = self.on_monomial(&m, &mut cache);
                let twice = self.apply_cached(&once, &mut cache);
                checked += 1;
                if !twice.is_zero() {
                    return SquareZeroCheck {
                        holds: false,
                        max_degree,
                        monomials_checked: checked,
                        witness: Some(SquareZeroWitness {
                            monomial: Polynomial::term(m, Scalar::one()).to_string(),
                            result: twice.to_string(),
                        }),
                    };
                }
            }
        }
        SquareZeroCheck {
            holds: true,
            max_degree,
            monomials_checked: checked,
            witness: None,
        }
    }
}

pub fn apply_differential(d: &Differential, p: &Polynomial) -> Polynomial {
    d.apply(p)
}

pub fn differential_matrix(d: &Differential, degree: u32) -> SparseMatrix {
    d.matrix(degree)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareZeroWitness {
    pub monomial: String,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareZeroCheck {
    pub holds: bool,
    pub max_degree: u32,
    pub monomials_checked: usize,
    pub witness: Option<SquareZeroWitness>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ClassTag {
    Zero,
    Nonzero,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub holds: bool,
}

/// Outcome of sorting a spec into one of the two isomorphism classes.
///
/// For a nonzero spec `iso` holds the forms `y1, ..., yn` with
/// `y1 = sum tj xj`. Read as a substitution (`xi -> yi`) it is a DG
/// isomorphism from `A(1,0,...,0)` onto `A(t)`; its inverse substitution
/// goes the other way.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub spec: AlgebraSpec,
    #[serde(rename = "class")]
    pub class_tag: ClassTag,
    /// One-based index of the first nonzero `tj`.
    pub pivot: Option<usize>,
    #[serde(with = "change_forms")]
    pub iso: Option<LinearChange>,
    pub verification_log: Vec<IdentityCheck>,
}

impl ClassificationResult {
    pub fn verified(&self) -> bool {
        self.verification_log.iter().all(|c| c.holds)
    }
}

mod change_forms {
    use super::*;

    pub fn serialize<S: Serializer>(c: &Option<LinearChange>, s: S) -> Result<S::Ok, S::Error> {
        let forms: Option<Vec<Vec<String>>> = c.as_ref().map(|c| {
            c.forms()
                .iter()
                .map(|f| f.iter().map(scalar::format).collect())
                .collect()
        });
        forms.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<LinearChange>, D::Error> {
        let raw = Option::<Vec<Vec<String>>>::deserialize(d)?;
        raw.map(|rows| {
            let rows = rows
                .iter()
                .map(|r| r.iter().map(|x| scalar::parse(x)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(serde::de::Error::custom)?;
            LinearChange::from_forms(&rows).map_err(serde::de::Error::custom)
        })
        .transpose()
    }
}

pub fn classify(spec: &AlgebraSpec) -> ClassificationResult {
    let n = spec.n();
    let Some(p) = spec.t().iter().position(|x| !x.is_zero()) else {
        return ClassificationResult {
            spec: spec.clone(),
            class_tag: ClassTag::Zero,
            pivot: None,
            iso: None,
            verification_log: vec![IdentityCheck {
                identity: "d = 0 on all generators".into(),
                holds: build_differential(spec).generator_images().iter().all(Polynomial::is_zero),
            }],
        };
    };
    let mut forms = vec![spec.t().to_vec()];
    for j in (0..n).filter(|&j| j != p) {
        let mut e = vec![Scalar::zero(); n];
        e[j] = Scalar::one();
        forms.push(e);
    }
    let iso = LinearChange::from_forms(&forms).expect("pivot completion is invertible");
    let log = verify_iso(spec, &iso);
    ClassificationResult {
        spec: spec.clone(),
        class_tag: ClassTag::Nonzero,
        pivot: Some(p + 1),
        iso: Some(iso),
        verification_log: log,
    }
}

fn verify_iso(spec: &AlgebraSpec, iso: &LinearChange) -> Vec<IdentityCheck> {
    let n = spec.n();
    let dt = build_differential(spec);
    let drep = build_differential(&AlgebraSpec::representative(n));
    let inv = iso.inverse();
    let y: Vec<Polynomial> = (0..n).map(|i| iso.form(i)).collect();
    let mut log = Vec::new();
    for i in 0..n {
        log.push(IdentityCheck {
            identity: format!("d(y{}) = y1*y{}", i + 1, i + 1),
            holds: dt.apply(&y[i]) == &y[0] * &y[i],
        });
    }
    for i in 0..n {
        let x = Polynomial::var(n, i);
        log.push(IdentityCheck {
            identity: format!("iso(d_rep(x{0})) = d_t(iso(x{0}))", i + 1),
            holds: substitute(&drep.apply(&x), iso) == dt.apply(&substitute(&x, iso)),
        });
        log.push(IdentityCheck {
            identity: format!("iso^-1(d_t(x{0})) = d_rep(iso^-1(x{0}))", i + 1),
            holds: substitute(&dt.apply(&x), &inv) == drep.apply(&substitute(&x, &inv)),
        });
    }
    log.push(IdentityCheck {
        identity: "iso * iso^-1 = identity".into(),
        holds: iso.compose(&inv) == LinearChange::identity(n),
    });
    log
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Polynomial {
        Polynomial::parse(n, s).unwrap()
    }

    #[test]
    fn generator_images() {
        let zero = build_differential(&AlgebraSpec::zero(3));
        assert!(zero.generator_images().iter().all(Polynomial::is_zero));
        let rep = build_differential(&AlgebraSpec::representative(3));
        assert_eq!(rep.generator_images()[1], p(3, "x1 x2"));
        let spec = AlgebraSpec::parse_t("2/3,5").unwrap();
        let d = build_differential(&spec);
        assert_eq!(d.generator_images()[0], p(2, "2/3 x1^2 + 5 x1 x2"));
    }

    #[test]
    fn leibniz_examples() {
        let rep3 = build_differential(&AlgebraSpec::representative(3));
        assert!(rep3.apply(&Polynomial::one(3)).is_zero());
        assert!(rep3.apply(&p(3, "x2 x3")).is_zero());
        let rep4 = build_differential(&AlgebraSpec::representative(4));
        assert_eq!(rep4.apply(&p(4, "x2 x3 x4")), p(4, "x1 x2 x3 x4"));
    }

    #[test]
    fn matrices() {
        let rep3 = build_differential(&AlgebraSpec::representative(3));
        let m1 = rep3.matrix(1);
        assert_eq!((m1.rows(), m1.cols()), (6, 3));
        assert!(m1.columns().iter().all(|c| c.len() == 1 && c[0].1.is_one()));
        assert_eq!(m1.rank(), 3);
        let m2 = rep3.matrix(2);
        assert_eq!((m2.rows(), m2.cols()), (10, 6));
        assert!(m2.is_zero());
        assert_eq!(m2.kernel_basis().len(), 6);
        assert!(build_differential(&AlgebraSpec::zero(2)).matrix(3).is_zero());
    }

    #[test]
    fn membership_of_boundary() {
        let rep3 = build_differential(&AlgebraSpec::representative(3));
        let m1 = rep3.matrix(1);
        let idx = index_of(&monomials_of_degree(3, 2));
        let v = crate::linalg::to_dense(&p(3, "x1 x2").to_sparse(&idx), 6);
        let c = m1.membership(&v).unwrap();
        assert_eq!(c, vec![scalar::int(0), scalar::int(1), scalar::int(0)]);
    }

    #[test]
    fn square_zero() {
        let d = build_differential(&AlgebraSpec::parse_t("1/2,-3,7").unwrap());
        let check = d.check_square_zero(6);
        assert!(check.holds, "{check:?}");
        assert!(build_differential(&AlgebraSpec::zero(2)).check_square_zero(8).holds);
    }

    #[test]
    fn classification() {
        let z = classify(&AlgebraSpec::zero(3));
        assert_eq!(z.class_tag, ClassTag::Zero);
        assert!(z.iso.is_none() && z.verified());

        let c = classify(&AlgebraSpec::from_ints(&[2, 3]));
        assert_eq!(c.class_tag, ClassTag::Nonzero);
        let iso = c.iso.as_ref().unwrap();
        assert_eq!(iso.form(0), p(2, "2 x1 + 3 x2"));
        assert_eq!(iso.form(1), p(2, "x2"));
        assert!(c.verified(), "{:?}", c.verification_log);

        let c = classify(&AlgebraSpec::from_ints(&[0, 0, 5]));
        assert_eq!(c.pivot, Some(3));
        assert!(c.verified());
    }

    #[test]
    fn spec_json() {
        let spec = AlgebraSpec::parse_t("2/3,0,-1").unwrap();
        let js = serde_json::to_string(&spec).unwrap();
        assert_eq!(js, r#"{"n":3,"t":["2/3","0","-1"]}"#);
        let back: AlgebraSpec = serde_json::from_str(&js).unwrap();
        assert_eq!(back, spec);
        assert!(serde_json::from_str::<AlgebraSpec>(r#"{"n":2,"t":["1"]}"#).is_err());
    }
}
