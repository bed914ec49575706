//! Small, deliberately naive reimplementations used as oracles. Nothing here
//! calls into the engine except for the rational scalar type.

#![allow(dead_code)]

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::path::Path;
use std::process::{Command, Output};

use dgpoly::Scalar;
use num_traits::{One, Zero};
use serde_json::Value;

/// Exponent vector to coefficient.
pub type Poly = BTreeMap<Vec<u32>, Scalar>;

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dgpoly")).args(args).output().expect("binary runs")
}

pub fn run_json(args: &[&str]) -> Result<Value, String> {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    if !matches!(out.status.code(), Some(0 | 1)) {
        return Err(format!("{args:?} exited {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    serde_json::from_slice(&out.stdout).map_err(|e| format!("{args:?}: bad JSON: {e}"))
}

pub fn run_cached(args: &[&str], cache: &Path) -> Output {
    let mut all = args.to_vec();
    all.extend(["--json", "--cache-dir", cache.to_str().unwrap()]);
    run(&all)
}

pub fn rat(s: &str) -> Scalar {
    s.parse().unwrap_or_else(|_| panic!("not a rational: {s}"))
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All exponent vectors of total degree `d` in `n` variables.
pub fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

pub fn add_term(p: &mut Poly, m: Vec<u32>, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match p.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

pub fn add(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    for (m, c) in b {
        add_term(&mut out, m.clone(), c.clone());
    }
    out
}

pub fn scale(a: &Poly, s: &Scalar) -> Poly {
    let mut out = Poly::new();
    for (m, c) in a {
        add_term(&mut out, m.clone(), c * s);
    }
    out
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            add_term(&mut out, m, ca * cb);
        }
    }
    out
}

pub fn var(n: usize, i: usize) -> Poly {
    let mut m = vec![0; n];
    m[i] = 1;
    Poly::from([(m, Scalar::one())])
}

pub fn linear(coeffs: &[Scalar]) -> Poly {
    let n = coeffs.len();
    let mut out = Poly::new();
    for (i, c) in coeffs.iter().enumerate() {
        add_term(&mut out, (0..n).map(|j| u32::from(i == j)).collect(), c.clone());
    }
    out
}

/// `(-1)^{deg}` applied termwise.
pub fn twist(a: &Poly) -> Poly {
    a.iter()
        .map(|(m, c)| (m.clone(), if degree(m).is_multiple_of(2) { c.clone() } else { -c.clone() }))
        .collect()
}

/// The differential in closed form: odd-degree terms get multiplied by
/// `y = sum tj xj`, even ones die.
pub fn closed_form_d(t: &[Scalar], p: &Poly) -> Poly {
    let odd: Poly = p.iter().filter(|(m, _)| degree(m) % 2 == 1).map(|(m, c)| (m.clone(), c.clone())).collect();
    mul(&linear(t), &odd)
}

/// The ring map sending `xi` to `images[i]`, a polynomial in `nvars` variables.
pub fn substitute(p: &Poly, images: &[Poly], nvars: usize) -> Poly {
    let mut out = Poly::new();
    for (m, c) in p {
        let mut term = Poly::from([(vec![0; nvars], c.clone())]);
        for (i, &e) in m.iter().enumerate() {
            for _ in 0..e {
                term = mul(&term, &images[i]);
            }
        }
        out = add(&out, &term);
    }
    out
}

/// Parse the engine's text format (`"-2/3 x2 x3 - x3^2 + 5"`) in
/// variables named by `names`, without using the engine's parser.
pub fn parse(names: &[String], s: &str) -> Poly {
    let n = names.len();
    let mut out = Poly::new();
    let mut sign = Scalar::one();
    let mut coeff = Scalar::one();
    let mut mono = vec![0u32; n];
    let mut seen = false;
    let flush = |sign: &Scalar, coeff: &Scalar, mono: &mut Vec<u32>, seen: &mut bool, out: &mut Poly| {
        if *seen {
            add_term(out, std::mem::replace(mono, vec![0; n]), sign * coeff);
        }
        *seen = false;
    };
    for token in s.split_whitespace() {
        match token {
            "+" | "-" => {
                flush(&sign, &coeff, &mut mono, &mut seen, &mut out);
                sign = if token == "-" { -Scalar::one() } else { Scalar::one() };
                coeff = Scalar::one();
            }
            _ => {
                let mut tok = token;
                if let Some(rest) = tok.strip_prefix('-') {
                    sign = -sign;
                    tok = rest;
                }
                seen = true;
                if tok.starts_with(|c: char| c.is_ascii_digit()) {
                    coeff *= rat(tok);
                } else {
                    let (name, exp) = tok.split_once('^').unwrap_or((tok, "1"));
                    let i = names.iter().position(|v| v == name).unwrap_or_else(|| panic!("unknown variable {name} in {s}"));
                    mono[i] += exp.parse::<u32>().unwrap();
                }
            }
        }
    }
    flush(&sign, &coeff, &mut mono, &mut seen, &mut out);
    out
}

pub fn x_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Rank by plain Gaussian elimination over the rationals on a dense
/// row-major matrix.
pub fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][col].clone();
        for i in r + 1..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let f = &rows[i][col] / &pivot;
            for j in col..ncols {
                let delta = &f * &rows[r][j];
                rows[i][j] -= delta;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Dense coordinate vector of `p` in the basis `basis`.
pub fn coords(p: &Poly, basis: &[Vec<u32>]) -> Vec<Scalar> {
    let v: Vec<Scalar> = basis.iter().map(|m| p.get(m).cloned().unwrap_or_else(Scalar::zero)).collect();
    assert_eq!(v.iter().filter(|c| !c.is_zero()).count(), p.len(), "polynomial leaves the basis");
    v
}

/// Dense matrix of the closed-form differential from degree `d` to `d + 1`,
/// one row per source monomial.
pub fn d_rows(t: &[Scalar], d: u32) -> Vec<Vec<Scalar>> {
    let n = t.len();
    let target = monomials(n, d + 1);
    monomials(n, d)
        .into_iter()
        .map(|m| coords(&closed_form_d(t, &Poly::from([(m, Scalar::one())])), &target))
        .collect()
}
