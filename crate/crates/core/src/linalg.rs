//! Exact integer and rational linear algebra.
//!
//! Everything is arbitrary precision: vectors are `Vec<BigInt>`, rationals
//! are `BigRational` (always reduced, positive denominator). Determinants
//! and solves use fraction-free Bareiss elimination so intermediate values
//! stay integral.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    /// Build a matrix from its columns. All columns must share a length.
    pub fn from_columns(columns: &[Vec<BigInt>]) -> Result<Self> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        for c in columns {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    got: c.len(),
                });
            }
        }
        let mut m = IntMatrix::zero(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                *m.at_mut(i, j) = v.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    fn is_square(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }
}

/// Exact determinant by fraction-free Bareiss elimination.
pub fn det_bareiss(m: &IntMatrix) -> Result<BigInt> {
    let n = m.is_square()?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.data.clone();
    let idx = |r: usize, c: usize| r * n + c;
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[idx(k, k)].is_zero() {
            // pivot search below the diagonal
            let Some(p) = (k + 1..n).find(|&r| !a[idx(r, k)].is_zero()) else {
                return Ok(BigInt::zero());
            };
            for c in 0..n {
                a.swap(idx(k, c), idx(p, c));
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                // Bareiss update: exact division by the previous pivot
                let t = &a[idx(k, k)] * &a[idx(i, j)] - &a[idx(i, k)] * &a[idx(k, j)];
                a[idx(i, j)] = t / &prev;
            }
            a[idx(i, k)] = BigInt::zero();
        }
        prev = a[idx(k, k)].clone();
    }
    let det = a[idx(n - 1, n - 1)].clone();
    Ok(if sign < 0 { -det } else { det })
}

/// Solve `m x = b` exactly. The matrix must be square and nonsingular.
///
/// Bareiss elimination runs on the augmented matrix, then back-substitution
/// produces the rational solution (already in lowest terms).
pub fn solve_exact(m: &IntMatrix, b: &[BigInt]) -> Result<Vec<BigRational>> {
    let n = m.is_square()?;
    if b.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: b.len(),
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let w = n + 1;
    let mut a: Vec<BigInt> = Vec::with_capacity(n * w);
    for (i, rhs) in b.iter().enumerate() {
        a.extend_from_slice(m.row(i));
        a.push(rhs.clone());
    }
    let idx = |r: usize, c: usize| r * w + c;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[idx(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[idx(r, k)].is_zero()) else {
                return Err(Error::Singular);
            };
            for c in 0..w {
                a.swap(idx(k, c), idx(p, c));
            }
        }
        for i in k + 1..n {
            for j in k + 1..w {
                let t = &a[idx(k, k)] * &a[idx(i, j)] - &a[idx(i, k)] * &a[idx(k, j)];
                a[idx(i, j)] = t / &prev;
            }
            a[idx(i, k)] = BigInt::zero();
        }
        prev = a[idx(k, k)].clone();
    }
    // back-substitution in exact rationals
    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigRational::from(a[idx(i, n)].clone());
        for j in i + 1..n {
            acc -= BigRational::from(a[idx(i, j)].clone()) * &x[j];
        }
        x[i] = acc / BigRational::from(a[idx(i, i)].clone());
    }
    Ok(x)
}

/// Adjugate matrix via cofactors, so that `adj(m) * m = det(m) * I`.
pub fn adjugate(m: &IntMatrix) -> Result<IntMatrix> {
    let n = m.is_square()?;
    if n == 0 {
        return Ok(IntMatrix::zero(0, 0));
    }
    if n == 1 {
        return Ok(IntMatrix::identity(1));
    }
    let mut adj = IntMatrix::zero(n, n);
    let mut minor = IntMatrix::zero(n - 1, n - 1);
    for i in 0..n {
        for j in 0..n {
            for (mr, r) in (0..n).filter(|&r| r != i).enumerate() {
                for (mc, c) in (0..n).filter(|&c| c != j).enumerate() {
                    *minor.at_mut(mr, mc) = m.at(r, c).clone();
                }
            }
            let cof = det_bareiss(&minor)?;
            // adjugate is the transposed cofactor matrix
            *adj.at_mut(j, i) = if (i + j) % 2 == 0 { cof } else { -cof };
        }
    }
    Ok(adj)
}

/// Generalized binomial coefficient `n(n-1)...(n-k+1) / k!` for any integer
/// upper argument, including negative ones.
pub fn binomial(n: &BigInt, k: u64) -> BigInt {
    let mut res = BigInt::one();
    for i in 0..k {
        // exact at every step: res holds binomial(n, i)
        res = res * (n - BigInt::from(i)) / BigInt::from(i + 1);
    }
    res
}

/// Convenience wrapper for small upper arguments.
pub fn binomial_i64(n: i64, k: u64) -> BigInt {
    binomial(&BigInt::from(n), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn mat(rows: usize, cols: usize, vals: &[i64]) -> IntMatrix {
        IntMatrix::new(rows, cols, vals.iter().map(|&v| b(v)).collect()).unwrap()
    }

    /// Independent determinant oracle: cofactor expansion along the first row.
    fn det_cofactor(m: &IntMatrix) -> BigInt {
        let n = m.rows();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return m.at(0, 0).clone();
        }
        let mut det = BigInt::zero();
        for j in 0..n {
            let mut minor = IntMatrix::zero(n - 1, n - 1);
            for r in 1..n {
                for (mc, c) in (0..n).filter(|&c| c != j).enumerate() {
                    *minor.at_mut(r - 1, mc) = m.at(r, c).clone();
                }
            }
            let term = m.at(0, j) * det_cofactor(&minor);
            if j % 2 == 0 {
                det += term;
            } else {
                det -= term;
            }
        }
        det
    }

    #[test]
    fn det_identity() {
        assert_eq!(det_bareiss(&IntMatrix::identity(3)).unwrap(), b(1));
    }

    #[test]
    fn det_2x2() {
        assert_eq!(det_bareiss(&mat(2, 2, &[2, 3, 1, 2])).unwrap(), b(1));
    }

    #[test]
    fn det_edge_matrix_of_balanced_simplex() {
        // columns e1, e2, (1,1,2)
        let m = mat(3, 3, &[1, 0, 1, 0, 1, 1, 0, 0, 2]);
        assert_eq!(det_bareiss(&m).unwrap(), b(2));
        assert_eq!(det_cofactor(&m), b(2));
    }

    #[test]
    fn det_singular_and_pivoting() {
        assert_eq!(det_bareiss(&mat(2, 2, &[1, 2, 2, 4])).unwrap(), b(0));
        // zero leading pivot forces a row swap
        assert_eq!(det_bareiss(&mat(2, 2, &[0, 1, 1, 0])).unwrap(), b(-1));
    }

    #[test]
    fn det_rejects_non_square() {
        let m = mat(2, 3, &[1, 0, 0, 0, 1, 0]);
        assert_eq!(
            det_bareiss(&m),
            Err(Error::NonSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn solve_identity() {
        let x = solve_exact(&IntMatrix::identity(2), &[b(5), b(7)]).unwrap();
        assert_eq!(x, vec![BigRational::from(b(5)), BigRational::from(b(7))]);
    }

    #[test]
    fn solve_diagonal() {
        let m = mat(2, 2, &[2, 0, 0, 2]);
        let x = solve_exact(&m, &[b(1), b(1)]).unwrap();
        let half = BigRational::new(b(1), b(2));
        assert_eq!(x, vec![half.clone(), half]);
    }

    #[test]
    fn solve_lifted_simplex_system() {
        // columns (v_i, 1) for vertices 0, e1, e2, (1,1,2); rhs (1,1,1,2)
        let m = mat(4, 4, &[0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 2, 1, 1, 1, 1]);
        let x = solve_exact(&m, &[b(1), b(1), b(1), b(2)]).unwrap();
        let half = BigRational::new(b(1), b(2));
        assert_eq!(x, vec![half.clone(), half.clone(), half.clone(), half]);
    }

    #[test]
    fn solve_singular_is_an_error() {
        let m = mat(2, 2, &[1, 2, 2, 4]);
        assert_eq!(solve_exact(&m, &[b(1), b(1)]), Err(Error::Singular));
    }

    #[test]
    fn adjugate_times_matrix_is_det_identity() {
        let m = mat(3, 3, &[2, 0, 1, -1, 3, 2, 0, 1, 4]);
        let det = det_bareiss(&m).unwrap();
        let adj = adjugate(&m).unwrap();
        for i in 0..3 {
            let col: Vec<BigInt> = (0..3).map(|r| m.at(r, i).clone()).collect();
            let prod = adj.mul_vec(&col).unwrap();
            for (r, v) in prod.iter().enumerate() {
                let expect = if r == i { det.clone() } else { BigInt::zero() };
                assert_eq!(*v, expect);
            }
        }
    }

    #[test]
    fn binomial_small_cases() {
        assert_eq!(binomial_i64(4, 2), b(6));
        assert_eq!(binomial_i64(1, 3), b(0));
        assert_eq!(binomial_i64(-1, 2), b(1));
        assert_eq!(binomial_i64(7, 0), b(1));
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor_oracle(
            n in 1usize..=4,
            vals in proptest::collection::vec(-5i64..=5, 16),
        ) {
            let data: Vec<BigInt> = vals[..n * n].iter().map(|&v| b(v)).collect();
            let m = IntMatrix::new(n, n, data).unwrap();
            prop_assert_eq!(det_bareiss(&m).unwrap(), det_cofactor(&m));
        }

        #[test]
        fn solve_roundtrip(
            n in 1usize..=4,
            vals in proptest::collection::vec(-5i64..=5, 16),
            nums in proptest::collection::vec(-9i64..=9, 4),
            dens in proptest::collection::vec(1i64..=9, 4),
        ) {
            let data: Vec<BigInt> = vals[..n * n].iter().map(|&v| b(v)).collect();
            let m = IntMatrix::new(n, n, data).unwrap();
            prop_assume!(!det_bareiss(&m).unwrap().is_zero());
            let x: Vec<BigRational> = (0..n)
                .map(|i| BigRational::new(b(nums[i]), b(dens[i])))
                .collect();
            // rhs = m * x, computed in rationals
            let rhs_rat: Vec<BigRational> = (0..n)
                .map(|i| {
                    m.row(i)
                        .iter()
                        .zip(&x)
                        .map(|(a, xi)| BigRational::from(a.clone()) * xi)
                        .sum()
                })
                .collect();
            // scale to an integer rhs by the common denominator
            let scale: BigInt = dens[..n].iter().map(|&d| b(d)).product();
            let rhs: Vec<BigInt> = rhs_rat
                .iter()
                .map(|r| {
                    let scaled = r * BigRational::from(scale.clone());
                    prop_assert!(scaled.is_integer());
                    Ok(scaled.to_integer())
                })
                .collect::<std::result::Result<_, TestCaseError>>()?;
            let solved = solve_exact(&m, &rhs).unwrap();
            let expect: Vec<BigRational> = x
                .iter()
                .map(|xi| xi * BigRational::from(scale.clone()))
                .collect();
            prop_assert_eq!(solved, expect);
        }

        #[test]
        fn binomial_pascal_identity(n in -10i64..=10, k in 1u64..=8) {
            prop_assert_eq!(
                binomial_i64(n, k),
                binomial_i64(n - 1, k) + binomial_i64(n - 1, k - 1)
            );
        }

        #[test]
        fn binomial_negation_reflection(n in 1i64..=10, k in 0u64..=8) {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(
                binomial_i64(-n, k),
                binomial_i64(n + k as i64 - 1, k) * b(sign)
            );
        }
    }
}
