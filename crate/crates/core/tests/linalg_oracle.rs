//! The sparse rational engine against a dense fraction-free elimination
//! over the integers.

use dgpoly::linalg::to_sparse;
use dgpoly::scalar::int;
use dgpoly::{Scalar, SparseMatrix};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

/// Rank by Bareiss elimination on a dense integer copy.
fn bareiss_rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = (&a[r][k] * &a[rank][c] - &a[r][c] * &a[rank][k]) / &prev;
                a[r][k] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn to_scalars(m: &[Vec<i64>]) -> Vec<Vec<Scalar>> {
    m.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=50, 1usize..=50, 0u32..=3).prop_flat_map(|(r, c, sparsity)| {
        // Each entry is zero with probability sparsity / 4.
        let entry = (0u32..4, -3i64..=3).prop_map(move |(z, x)| if z < sparsity { 0 } else { x });
        prop::collection::vec(prop::collection::vec(entry, c), r)
    })
}

/// Rank-deficient matrices: products of thin factors.
fn low_rank() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=30, 1usize..=30, 1usize..=6).prop_flat_map(|(r, c, k)| {
        (
            prop::collection::vec(prop::collection::vec(-2i64..=2, k), r),
            prop::collection::vec(prop::collection::vec(-2i64..=2, c), k),
        )
            .prop_map(|(u, v)| {
                u.iter()
                    .map(|row| (0..v[0].len()).map(|j| row.iter().zip(&v).map(|(a, vr)| a * vr[j]).sum()).collect())
                    .collect()
            })
    })
}

fn check(m: &[Vec<i64>]) -> Result<(), TestCaseError> {
    let sm = SparseMatrix::from_dense(&to_scalars(m));
    let rank = bareiss_rank(m);
    prop_assert_eq!(sm.rank(), rank);
    let kernel = sm.kernel_basis();
    prop_assert_eq!(kernel.len(), sm.cols() - rank);
    for v in &kernel {
        prop_assert!(sm.mul_vec(v).iter().all(Zero::is_zero));
    }
    if !kernel.is_empty() {
        prop_assert_eq!(SparseMatrix::from_dense(&kernel).rank(), kernel.len());
    }
    let sparse = sm.kernel_basis_sparse();
    prop_assert_eq!(sparse, kernel.iter().map(|v| to_sparse(v)).collect::<Vec<_>>());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn rank_and_kernel_match_dense_oracle(m in matrix()) {
        check(&m)?;
    }

    #[test]
    fn rank_deficient_products(m in low_rank()) {
        check(&m)?;
    }

    #[test]
    fn membership_solves_consistent_systems(m in matrix(), seed in prop::collection::vec(-3i64..=3, 50)) {
        let sm = SparseMatrix::from_dense(&to_scalars(&m));
        let x: Vec<Scalar> = (0..sm.cols()).map(|j| int(seed[j])).collect();
        let b = sm.mul_vec(&x);
        let c = sm.membership(&b).expect("b lies in the column space");
        prop_assert_eq!(sm.mul_vec(&c), b);
    }
}

#[test]
fn membership_rejects_outside_vectors() {
    let sm = SparseMatrix::from_dense(&to_scalars(&[vec![1, 2], vec![2, 4], vec![0, 0]]));
    assert!(sm.membership(&[int(1), int(0), int(0)]).is_none());
    assert!(sm.membership(&[int(0), int(0), int(1)]).is_none());
    assert_eq!(sm.membership(&[int(3), int(6), int(0)]).map(|c| sm.mul_vec(&c)), Some(vec![int(3), int(6), int(0)]));
}
