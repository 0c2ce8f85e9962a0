//! Constructions realizing flat delta-vectors.
//!
//! Two explicit simplex families do all the work: a "balanced" family whose
//! delta-vector is `(1, 0^k, a, ..., a, 0^k)` and a "full support" family
//! with `(1, a, ..., a)`. Their delta-vectors also come in closed form, as
//! a tally of ceilings of a rational linear function, so enumeration and
//! formula can be checked against each other. [`realize`] assembles an
//! arbitrary realizable flat pattern from a core family member plus
//! pyramids, and re-counts the result before returning it.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::counting::CountBudget;
use crate::ehrhart::{delta_by_counting, DeltaVector, FlatPattern};
use crate::error::{Error, Result};
use crate::polytope::Simplex;

/// Which core family a realization starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecipeKind {
    /// `balanced_simplex`: pattern `(1, 0^k, a, ..., a, 0^k)`.
    Balanced,
    /// `full_support_simplex`: pattern `(1, a, ..., a)`.
    FullSupport,
}

/// How [`realize`] assembled its output: a core simplex plus a number of
/// pyramid steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Recipe {
    pub kind: RecipeKind,
    pub base_dim: usize,
    pub leading_zeros: usize,
    pub level: u64,
    pub pyramids: usize,
}

fn check_balanced_params(dim: usize, zeros: usize, level: u64) -> Result<()> {
    if dim < 3 || zeros < 1 || 2 * zeros > dim - 1 || level == 0 {
        return Err(Error::InvalidParameters(format!(
            "balanced simplex needs d >= 3, 1 <= k <= (d-1)/2, a >= 1; got d={dim}, k={zeros}, a={level}"
        )));
    }
    Ok(())
}

fn check_full_params(dim: usize, level: u64) -> Result<()> {
    if dim < 1 || level == 0 {
        return Err(Error::InvalidParameters(format!(
            "full-support simplex needs d >= 1 and a >= 1; got d={dim}, a={level}"
        )));
    }
    Ok(())
}

/// Simplex of dimension `dim` whose delta-vector is
/// `(1, 0^zeros, level, ..., level, 0^zeros)`.
///
/// Vertices are the origin, the first `dim - 1` unit vectors, and one extra
/// vertex with entries 1 (first `dim - zeros` coordinates), `level * (dim -
/// 2*zeros)` (next `zeros - 1` coordinates), and that value plus one (last
/// coordinate).
pub fn balanced_simplex(dim: usize, zeros: usize, level: u64) -> Result<Simplex> {
    check_balanced_params(dim, zeros, level)?;
    let spread = BigInt::from(level) * BigInt::from((dim - 2 * zeros) as u64);
    let mut vertices = vec![vec![BigInt::zero(); dim]];
    for i in 0..dim - 1 {
        let mut v = vec![BigInt::zero(); dim];
        v[i] = BigInt::one();
        vertices.push(v);
    }
    let mut last = Vec::with_capacity(dim);
    for j in 1..=dim {
        last.push(if j <= dim - zeros {
            BigInt::one()
        } else if j < dim {
            spread.clone()
        } else {
            &spread + 1
        });
    }
    vertices.push(last);
    Simplex::new(vertices)
}

/// Simplex of dimension `dim` whose delta-vector is `(1, level, ..., level)`.
///
/// Vertices are the origin, the first `dim - 1` unit vectors, and one extra
/// vertex with `level * dim` in every coordinate except the last, which is
/// `level * dim + 1`.
pub fn full_support_simplex(dim: usize, level: u64) -> Result<Simplex> {
    check_full_params(dim, level)?;
    let spread = BigInt::from(level) * BigInt::from(dim as u64);
    let mut vertices = vec![vec![BigInt::zero(); dim]];
    for i in 0..dim - 1 {
        let mut v = vec![BigInt::zero(); dim];
        v[i] = BigInt::one();
        vertices.push(v);
    }
    let mut last = vec![spread.clone(); dim];
    last[dim - 1] = &spread + 1;
    vertices.push(last);
    Simplex::new(vertices)
}

/// Closed-form delta-vector of [`balanced_simplex`], never enumerating
/// lattice points: one unit lands at `(d - k) - floor(t (d - 2k) / (a (d -
/// 2k) + 1))` for each `t = 1 ..= a (d - 2k)`.
pub fn balanced_profile(dim: usize, zeros: usize, level: u64) -> Result<DeltaVector> {
    check_balanced_params(dim, zeros, level)?;
    let width = (dim - 2 * zeros) as u128;
    let volume_minus_one = level as u128 * width;
    let mut entries = vec![BigInt::zero(); dim + 1];
    entries[0] = BigInt::one();
    for t in 1..=volume_minus_one {
        let index = (dim - zeros) - (t * width / (volume_minus_one + 1)) as usize;
        entries[index] += 1;
    }
    DeltaVector::new(entries)
}

/// Closed-form delta-vector of [`full_support_simplex`]: one unit lands at
/// `ceil(d t / (a d + 1))` for each `t = 1 ..= a d`.
pub fn full_support_profile(dim: usize, level: u64) -> Result<DeltaVector> {
    check_full_params(dim, level)?;
    let d = dim as u128;
    let volume_minus_one = level as u128 * d;
    let mut entries = vec![BigInt::zero(); dim + 1];
    entries[0] = BigInt::one();
    for t in 1..=volume_minus_one {
        let index = (d * t).div_ceil(volume_minus_one + 1) as usize;
        entries[index] += 1;
    }
    DeltaVector::new(entries)
}

/// A flat pattern is realizable by a lattice polytope exactly when its
/// leading zero run is no longer than its trailing one.
pub fn is_realizable(pattern: &FlatPattern) -> bool {
    pattern.leading_zeros <= pattern.trailing_zeros
}

/// Build a simplex whose delta-vector is the given flat pattern.
///
/// Routing: with no leading zeros, start from the full-support simplex of
/// the support dimension; otherwise start from the balanced simplex whose
/// zero runs both equal the leading run. Pyramids supply the remaining
/// trailing zeros. The construction is self-validating: the delta-vector
/// of the result is recounted before returning.
pub fn realize(pattern: &FlatPattern, budget: &CountBudget) -> Result<(Simplex, Recipe)> {
    if !is_realizable(pattern) {
        return Err(Error::NotRealizable {
            leading: pattern.leading_zeros,
            trailing: pattern.trailing_zeros,
        });
    }
    let k = pattern.leading_zeros;
    let l = pattern.trailing_zeros;
    let (core, recipe) = if k == 0 {
        let base_dim = pattern.dim - l;
        (
            full_support_simplex(base_dim, pattern.level)?,
            Recipe {
                kind: RecipeKind::FullSupport,
                base_dim,
                leading_zeros: 0,
                level: pattern.level,
                pyramids: l,
            },
        )
    } else {
        let base_dim = 2 * k + pattern.run_length();
        (
            balanced_simplex(base_dim, k, pattern.level)?,
            Recipe {
                kind: RecipeKind::Balanced,
                base_dim,
                leading_zeros: k,
                level: pattern.level,
                pyramids: l - k,
            },
        )
    };
    let mut simplex = core;
    for _ in 0..recipe.pyramids {
        simplex = simplex.pyramid();
    }
    let counted = delta_by_counting(&simplex, budget)?;
    assert_eq!(
        counted,
        pattern.to_delta(),
        "constructed simplex failed its counting validation"
    );
    Ok((simplex, recipe))
}
