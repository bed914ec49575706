use dgpoly::commalg::{free_denominator, resolve_k};
use dgpoly::poly::index_of;
use dgpoly::scalar::int;
use dgpoly::{
    buchberger, depth_interval, extract_presentation, minimal_free_resolution_of_k, monomials_of_degree, AlgebraSpec,
    BettiTable, Cohomology, Polynomial, QuotientRing, SparseMatrix,
};
use proptest::prelude::*;

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("g_{i}")).collect()
}

fn polynomial_ring(n: usize) -> QuotientRing {
    QuotientRing::new(names(n), vec![1; n], vec![])
}

/// Power series product truncated at `len` coefficients.
fn series_mul(a: &[i64], b: &[i64], len: usize) -> Vec<i64> {
    let mut out = vec![0; len];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if i + j < len {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// `sum (-1)^i B_i(t) * H(t)` up to `len` coefficients.
fn euler_sum(table: &BettiTable, hilbert: &[usize], len: usize) -> Vec<i64> {
    let mut b = vec![0i64; len];
    for (i, degs) in table.degrees.iter().enumerate() {
        for &q in degs {
            if (q as usize) < len {
                b[q as usize] += if i % 2 == 0 { 1 } else { -1 };
            }
        }
    }
    let h: Vec<i64> = hilbert.iter().map(|&x| x as i64).collect();
    series_mul(&b, &h, len)
}

/// Quotient dimension by plain linear algebra: the degree-d part of the
/// ideal is spanned by monomial multiples of the generators.
fn quotient_dim_oracle(n: usize, relations: &[Polynomial], d: u32) -> usize {
    let basis = monomials_of_degree(n, d);
    let index = index_of(&basis);
    let mut cols = Vec::new();
    for r in relations {
        let (lo, _) = r.degree_range().unwrap();
        if lo > d {
            continue;
        }
        for m in monomials_of_degree(n, d - lo) {
            cols.push(r.mul_monomial(&m, &int(1)).to_sparse(&index));
        }
    }
    basis.len() - SparseMatrix::from_columns(basis.len(), cols).rank()
}

fn relation(n: usize) -> impl Strategy<Value = Polynomial> {
    let quads = monomials_of_degree(n, 2);
    prop::collection::vec(-2i64..=2, quads.len()).prop_map(move |c| {
        Polynomial::from_terms(n, quads.iter().cloned().zip(c.into_iter().map(int)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn groebner_basis_is_stable_and_matches_oracle(rels in prop::collection::vec(relation(3), 0..=3)) {
        let rels: Vec<Polynomial> = rels.into_iter().filter(|r| !r.is_zero()).collect();
        let ring = QuotientRing::new(names(3), vec![1; 3], rels.clone());
        prop_assert!(ring.is_groebner());
        prop_assert!(ring.is_idempotent());
        let again = QuotientRing::new(names(3), vec![1; 3], ring.groebner().to_vec());
        prop_assert_eq!(again.groebner(), ring.groebner());
        for r in &rels {
            prop_assert!(ring.normal_form(r).is_zero());
        }
        let hilbert = ring.hilbert_series(6);
        for d in 0..=6u32 {
            prop_assert_eq!(hilbert[d as usize], quotient_dim_oracle(3, &rels, d));
        }
    }
}

#[test]
fn koszul_betti_numbers() {
    for n in 1..=4 {
        let ring = polynomial_ring(n);
        let res = minimal_free_resolution_of_k(&ring, n + 2, 12).unwrap();
        let expected: Vec<usize> = (0..=n).map(|i| binomial(n, i)).collect();
        assert_eq!(res.table.betti, expected);
        assert_eq!(res.table.pd(), Some(n));
        assert!(res.table.euler_identity);
        assert!(res.is_minimal(&ring) && res.is_complex(&ring));
        for (i, degs) in res.table.degrees.iter().enumerate() {
            assert!(degs.iter().all(|&q| q as usize == i));
        }
        // The Euler sum of a finite resolution of k is exactly 1.
        let mut want = vec![0i64; 13];
        want[0] = 1;
        assert_eq!(euler_sum(&res.table, &ring.hilbert_series(12), 13), want);
    }
}

#[test]
fn veronese_resolution_satisfies_euler_sum_below_its_cut() {
    let coh = Cohomology::compute(&AlgebraSpec::representative(3), 12);
    let pres = extract_presentation(&coh, 8).unwrap();
    let ring = buchberger(&pres);
    let res = resolve_k(&ring, 5, 12);
    assert!(!res.table.terminated);
    assert!(res.is_minimal(&ring) && res.is_complex(&ring));
    // Exactness holds at F_0..F_4; the first missing kernel starts in
    // internal degree 12.
    let sum = euler_sum(&res.table, &ring.hilbert_series(12), 12);
    let mut want = vec![0i64; 12];
    want[0] = 1;
    assert_eq!(sum, want);
    assert_eq!(res.table.betti, vec![1, 3, 4, 4, 4, 4]);
    assert!(minimal_free_resolution_of_k(&ring, 8, 12).is_err());
}

#[test]
fn hilbert_numerators() {
    let ring = polynomial_ring(3);
    assert_eq!(ring.hilbert_numerator(), vec![1]);
    assert_eq!(free_denominator(&[1, 1]), vec![1, -2, 1]);
    let cubic = QuotientRing::new(names(3), vec![1; 3], vec![Polynomial::parse_with(&names(3), "g_2^2 - g_1 g_3").unwrap()]);
    assert_eq!(cubic.hilbert_numerator(), vec![1, 0, -1]);
    assert_eq!(cubic.krull_dimension(), 2);
}

#[test]
fn depth_is_bounded_by_krull_dimension() {
    for n in 1..=3 {
        let d = depth_interval(&polynomial_ring(n), 8, 0);
        assert_eq!((d.lower, d.upper), (n, n));
    }
    for n in 2..=4 {
        let coh = Cohomology::compute(&AlgebraSpec::representative(n), 8);
        let ring = buchberger(&extract_presentation(&coh, 8).unwrap());
        let d = depth_interval(&ring, 8, 7);
        assert!(d.lower <= d.upper);
        assert_eq!(d.upper, n - 1, "Veronese subrings of k[x2..xn] have dimension n - 1");
        assert_eq!(d.sequence.len(), d.lower);
    }
}
