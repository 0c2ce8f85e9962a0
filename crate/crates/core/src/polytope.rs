//! Full-dimensional integral simplices.
//!
//! A `Simplex` of dimension `d` is given by `d + 1` integer vertices whose
//! edge vectors are linearly independent. It is immutable after
//! construction, so all operations are pure.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{det_bareiss, solve_exact, IntMatrix};

/// A full-dimensional simplex with integer vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplex {
    dim: usize,
    vertices: Vec<Vec<BigInt>>,
}

impl Simplex {
    /// Validate and build a simplex from `d + 1` vertices of dimension `d`.
    pub fn new(vertices: Vec<Vec<BigInt>>) -> Result<Self> {
        let dim = vertices.first().map_or(0, Vec::len);
        if dim == 0 {
            return Err(Error::InvalidParameters(
                "a simplex needs at least one coordinate".into(),
            ));
        }
        if vertices.len() != dim + 1 {
            return Err(Error::DimensionMismatch {
                expected: dim + 1,
                got: vertices.len(),
            });
        }
        for v in &vertices {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: v.len(),
                });
            }
        }
        let s = Simplex { dim, vertices };
        if det_bareiss(&s.edge_matrix())?.is_zero() {
            return Err(Error::Degenerate);
        }
        Ok(s)
    }

    /// The standard simplex `conv(0, e_1, ..., e_d)`.
    pub fn unit(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be positive");
        let mut vertices = vec![vec![BigInt::zero(); dim]];
        for i in 0..dim {
            let mut v = vec![BigInt::zero(); dim];
            v[i] = BigInt::one();
            vertices.push(v);
        }
        Simplex { dim, vertices }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<BigInt>] {
        &self.vertices
    }

    /// Columns `v_i - v_0` for `i = 1..=d`.
    pub fn edge_matrix(&self) -> IntMatrix {
        let v0 = &self.vertices[0];
        let cols: Vec<Vec<BigInt>> = self.vertices[1..]
            .iter()
            .map(|v| v.iter().zip(v0).map(|(a, b)| a - b).collect())
            .collect();
        IntMatrix::from_columns(&cols).expect("vertices share a dimension")
    }

    /// Columns `(v_i, 1)` for `i = 0..=d`, the cone generators over the
    /// simplex at height one.
    pub fn lifted_matrix(&self) -> IntMatrix {
        let cols: Vec<Vec<BigInt>> = self
            .vertices
            .iter()
            .map(|v| {
                let mut c = v.clone();
                c.push(BigInt::one());
                c
            })
            .collect();
        IntMatrix::from_columns(&cols).expect("vertices share a dimension")
    }

    /// `|det(v_1 - v_0, ..., v_d - v_0)|`, which equals the sum of the
    /// delta-vector entries.
    pub fn normalized_volume(&self) -> BigInt {
        det_bareiss(&self.edge_matrix())
            .expect("edge matrix is square")
            .abs()
    }

    /// The pyramid over this simplex: every vertex embedded at height zero
    /// plus the apex `(0, ..., 0, 1)`. Its delta-vector is the base's with
    /// one zero appended.
    pub fn pyramid(&self) -> Simplex {
        let mut vertices: Vec<Vec<BigInt>> = self
            .vertices
            .iter()
            .map(|v| {
                let mut w = v.clone();
                w.push(BigInt::zero());
                w
            })
            .collect();
        let mut apex = vec![BigInt::zero(); self.dim + 1];
        apex[self.dim] = BigInt::one();
        vertices.push(apex);
        Simplex::new(vertices).expect("pyramid preserves nondegeneracy")
    }

    /// Barycentric coordinates of `x` with respect to the `n`-th dilation:
    /// the unique `mu` with `sum mu_i v_i = x` and `sum mu_i = n`. Returns
    /// `None` when `x` lies outside `nP` (some coordinate negative); the
    /// point is strictly interior exactly when every coordinate is positive.
    pub fn barycentric(&self, x: &[BigInt], n: u64) -> Option<Vec<BigRational>> {
        assert_eq!(x.len(), self.dim, "point dimension must match the simplex");
        let mut rhs = x.to_vec();
        rhs.push(BigInt::from(n));
        let mu = solve_exact(&self.lifted_matrix(), &rhs)
            .expect("lifted matrix of a simplex is nonsingular");
        if mu.iter().any(|m| m.is_negative()) {
            return None;
        }
        Some(mu)
    }
}
