//! Commutative polynomials over the rationals.
//!
//! Monomials are dense exponent vectors compared in graded reverse
//! lexicographic order with `x1 > x2 > ... > xn`. That order is global: every
//! basis of a graded piece, every matrix and every printed polynomial lists
//! monomials from largest to smallest under it.
//!
//! Text syntax: terms joined by `" + "` or `" - "`, each term an optional
//! rational coefficient followed by space-separated factors `x3` or `x3^2`,
//! e.g. `3/2 x1^2 x3 - x2`. The parser also accepts `+ -1 x2`. The zero
//! polynomial prints as `0`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, ParseError};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.0.iter().zip(weights).map(|(e, w)| e * w).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }

    /// Indices of the degree-1 factors in increasing order, with repetition.
    pub fn factors(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
            .collect()
    }

    fn fmt_with(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        parts.join(" ")
    }
}

fn revlex_tail(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller exponent in the last differing variable is the larger monomial
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| revlex_tail(&self.0, &other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded reverse lexicographic order where variable `i` has degree `weights[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedOrder {
    pub weights: Vec<u32>,
}

impl WeightedOrder {
    pub fn new(weights: Vec<u32>) -> Self {
        WeightedOrder { weights }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.weighted_degree(&self.weights)
            .cmp(&b.weighted_degree(&self.weights))
            .then_with(|| revlex_tail(&a.0, &b.0))
    }
}

/// All monomials of degree `d` in `n` variables, largest first.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    assert!(n >= 1, "need at least one variable");
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fill(&mut cur, 0, d, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn fill(cur: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<Monomial>) {
    if i + 1 == cur.len() {
        cur[i] = left;
        out.push(Monomial(cur.clone()));
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e;
        fill(cur, i + 1, left - e, out);
    }
    cur[i] = 0;
}

/// Monomials of weighted degree `d`, largest first under the weighted order.
/// Variables of weight zero are not allowed.
pub fn weighted_monomials(order: &WeightedOrder, d: u32) -> Vec<Monomial> {
    let n = order.weights.len();
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    let mut cur = vec![0u32; n];
    fill_weighted(&order.weights, &mut cur, 0, d, &mut out);
    out.sort_by(|a, b| order.cmp(b, a));
    out
}

fn fill_weighted(w: &[u32], cur: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<Monomial>) {
    if i == w.len() {
        if left == 0 {
            out.push(Monomial(cur.clone()));
        }
        return;
    }
    assert!(w[i] > 0, "zero weight");
    for e in (0..=left / w[i]).rev() {
        cur[i] = e;
        fill_weighted(w, cur, i + 1, left - e * w[i], out);
    }
    cur[i] = 0;
}

/// Position of each monomial in a basis list.
pub fn index_of(basis: &[Monomial]) -> HashMap<Monomial, usize> {
    basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Scalar) -> Self {
        Self::term(Monomial::one(n), c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Scalar::one())
    }

    /// The variable `x_{i+1}` (zero-based index `i`).
    pub fn var(n: usize, i: usize) -> Self {
        Self::term(Monomial::var(n, i), Scalar::one())
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let n = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { n, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(n: usize, it: I) -> Self {
        let mut p = Polynomial::zero(n);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    /// Linear form `sum coeffs[i] * x_{i+1}`.
    pub fn linear_form(coeffs: &[Scalar]) -> Self {
        let n = coeffs.len();
        Self::from_terms(n, coeffs.iter().enumerate().map(|(i, c)| (Monomial::var(n, i), c.clone())))
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        debug_assert_eq!(m.nvars(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Polynomial, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * s);
        }
    }

    pub fn scale(&self, s: &Scalar) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, s: &Scalar) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c * s)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Largest term under the global order.
    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn leading_by(&self, order: &WeightedOrder) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn degree_range(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn component(&self, d: u32) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coordinates against a basis of monomials, as a sparse vector.
    /// Panics if a term is missing from the index.
    pub fn to_sparse(&self, index: &HashMap<Monomial, usize>) -> SparseVec {
        let mut v: SparseVec = self
            .terms
            .iter()
            .map(|(m, c)| (*index.get(m).expect("monomial outside basis"), c.clone()))
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    pub fn from_sparse(n: usize, basis: &[Monomial], v: &SparseVec) -> Polynomial {
        Polynomial::from_terms(n, v.iter().map(|(i, c)| (basis[*i].clone(), c.clone())))
    }

    pub fn default_names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = scalar::is_negative(c);
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let a = if neg { -c.clone() } else { c.clone() };
            if m.degree() == 0 {
                out.push_str(&scalar::format(&a));
            } else if a.is_one() {
                out.push_str(&m.fmt_with(names));
            } else {
                out.push_str(&format!("{} {}", scalar::format(&a), m.fmt_with(names)));
            }
        }
        out
    }

    pub fn parse(n: usize, s: &str) -> Result<Polynomial, ParseError> {
        Self::parse_with(&Self::default_names(n), s)
    }

    pub fn parse_with(names: &[String], s: &str) -> Result<Polynomial, ParseError> {
        let n = names.len();
        let lookup: HashMap<&str, usize> =
            names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mut p = Polynomial::zero(n);
        let s = s.trim();
        if s == "0" {
            return Ok(p);
        }
        // Binary minus becomes "+ -1"; a sign glued to a variable is peeled off below.
        let normalized = s.replace(" - ", " + -1 ");
        for raw in normalized.split('+') {
            let term = raw.trim();
            if term.is_empty() {
                return Err(ParseError::Term(raw.to_string()));
            }
            let mut tokens = term.split_whitespace().peekable();
            let mut coeff = Scalar::one();
            while let Some(c) = tokens.peek().and_then(|t| scalar::parse(t).ok()) {
                coeff *= c;
                tokens.next();
            }
            let mut exps = vec![0u32; n];
            for tok in tokens {
                let tok = match tok.strip_prefix('-') {
                    Some(rest) => {
                        coeff = -coeff;
                        rest
                    }
                    None => tok,
                };
                let (name, exp) = match tok.rsplit_once('^') {
                    Some((a, e)) => (a, e.parse::<u32>().map_err(|_| ParseError::Term(term.to_string()))?),
                    None => (tok, 1),
                };
                let i = *lookup.get(name).ok_or_else(|| ParseError::Variable(name.to_string()))?;
                exps[i] += exp;
            }
            p.add_term(Monomial(exps), coeff);
        }
        Ok(p)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&Self::default_names(self.n)))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Scalar::one());
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Scalar::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        let mut out = Polynomial::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

/// An invertible linear change of variables: `x_i` becomes the `i`-th row
/// of the matrix read as a linear form.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearChange {
    matrix: SparseMatrix,
}

impl LinearChange {
    pub fn new(matrix: SparseMatrix) -> Result<Self, Error> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::ArityMismatch {
                expected: matrix.rows(),
                got: matrix.cols(),
            });
        }
        if matrix.rank() != matrix.rows() {
            return Err(Error::SingularChange);
        }
        Ok(LinearChange { matrix })
    }

    pub fn from_forms(forms: &[Vec<Scalar>]) -> Result<Self, Error> {
        Self::new(SparseMatrix::from_dense(forms))
    }

    pub fn identity(n: usize) -> Self {
        LinearChange {
            matrix: SparseMatrix::identity(n),
        }
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn form_coeffs(&self, i: usize) -> Vec<Scalar> {
        (0..self.n()).map(|j| self.matrix.get(i, j)).collect()
    }

    pub fn form(&self, i: usize) -> Polynomial {
        Polynomial::linear_form(&self.form_coeffs(i))
    }

    pub fn forms(&self) -> Vec<Vec<Scalar>> {
        (0..self.n()).map(|i| self.form_coeffs(i)).collect()
    }

    pub fn inverse(&self) -> LinearChange {
        let n = self.n();
        // substitute(substitute(p, c), c_inv) = p needs M_inv * M = I
        // where row i of M_inv expresses x_i's image; solve column by column
        // against the transpose.
        let t = SparseMatrix::from_triplets(n, n, self.matrix.entries().map(|(r, c, x)| (c, r, x.clone())));
        let mut rows = vec![vec![Scalar::zero(); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            let mut e = vec![Scalar::zero(); n];
            e[i] = Scalar::one();
            *row = t.membership(&e).expect("invertible");
        }
        // rows[i] solves M^T r = e_i, i.e. r^T M = e_i^T.
        LinearChange {
            matrix: SparseMatrix::from_dense(&rows),
        }
    }

    pub fn compose(&self, then: &LinearChange) -> LinearChange {
        // substitute(substitute(p, self), then): x_i -> sum_j M[i][j] (then form j)
        let n = self.n();
        let mut rows = vec![vec![Scalar::zero(); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            for j in 0..n {
                let a = self.matrix.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for (k, slot) in row.iter_mut().enumerate() {
                    *slot += &a * then.matrix.get(j, k);
                }
            }
        }
        LinearChange {
            matrix: SparseMatrix::from_dense(&rows),
        }
    }
}

pub fn substitute(p: &Polynomial, c: &LinearChange) -> Polynomial {
    assert_eq!(p.nvars(), c.n(), "variable count mismatch");
    let forms: Vec<Polynomial> = (0..c.n()).map(|i| c.form(i)).collect();
    let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
    let mut out = Polynomial::zero(p.nvars());
    for (m, coef) in p.terms() {
        let mut acc = Polynomial::constant(p.nvars(), coef.clone());
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let pw = powers.entry((i, e)).or_insert_with(|| forms[i].pow(e));
            acc = &acc * pw;
        }
        out.add_scaled(&acc, &Scalar::one());
    }
    out
}
