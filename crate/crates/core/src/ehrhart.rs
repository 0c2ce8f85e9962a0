//! Delta-vectors and the Ehrhart counting polynomial.
//!
//! The delta-vector is kept in the binomial basis throughout: evaluation at
//! any integer dilation, interior counts via reciprocity, the two classical
//! inequality checks, and recognition of flat patterns all work directly on
//! the entries `(delta_0, ..., delta_d)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::counting::{box_points, count_lattice_points, CountBudget};
use crate::error::{Error, Result};
use crate::linalg::binomial;
use crate::polytope::Simplex;

/// The delta-vector `(delta_0, ..., delta_d)` of a `d`-dimensional lattice
/// polytope: nonnegative entries with `delta_0 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaVector {
    entries: Vec<BigInt>,
}

impl DeltaVector {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::InvalidParameters(
                "a delta-vector has at least two entries".into(),
            ));
        }
        if !entries[0].is_one() {
            return Err(Error::InvalidParameters("delta_0 must be 1".into()));
        }
        if let Some(index) = entries.iter().position(Signed::is_negative) {
            return Err(Error::NotEhrhart { index });
        }
        Ok(DeltaVector { entries })
    }

    pub fn from_i64(entries: &[i64]) -> Result<Self> {
        DeltaVector::new(entries.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// Dimension `d` of the underlying polytope.
    pub fn dim(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// Largest index with a nonzero entry.
    pub fn support_max(&self) -> usize {
        self.entries
            .iter()
            .rposition(|e| !e.is_zero())
            .expect("delta_0 = 1")
    }

    /// Sum of the entries.
    pub fn normalized_volume(&self) -> BigInt {
        self.entries.iter().sum()
    }

    /// Evaluate the counting polynomial at any integer dilation:
    /// `sum_j delta_j * binomial(n + d - j, d)`.
    pub fn ehrhart_at(&self, n: &BigInt) -> BigInt {
        let d = self.dim();
        self.entries
            .iter()
            .enumerate()
            .map(|(j, delta)| delta * binomial(&(n + BigInt::from(d as i64 - j as i64)), d as u64))
            .sum()
    }

    /// Interior count at a positive dilation via reciprocity:
    /// `(-1)^d * i(P, -n)`.
    pub fn interior_at(&self, n: u64) -> BigInt {
        assert!(n >= 1, "interior evaluation needs a positive dilation");
        let value = self.ehrhart_at(&-BigInt::from(n));
        if self.dim().is_multiple_of(2) {
            value
        } else {
            -value
        }
    }

    /// First index violating the prefix/suffix inequality
    /// `delta_0 + ... + delta_i <= delta_s + ... + delta_{s-i}`,
    /// or `None` when it holds everywhere.
    pub fn stanley_violation(&self) -> Option<usize> {
        stanley_violation_raw(&self.entries)
    }

    /// First index violating the trailing-sum inequality
    /// `delta_d + ... + delta_{d-i} <= delta_1 + ... + delta_{i+1}`,
    /// or `None` when it holds everywhere.
    pub fn hibi_violation(&self) -> Option<usize> {
        hibi_violation_raw(&self.entries)
    }

    /// Recognize the flat shape `(1, 0^k, a, ..., a, 0^l)` with a nonempty
    /// run. The degenerate vector `(1, 0, ..., 0)` is not flat.
    pub fn classify_flat(&self) -> Option<FlatPattern> {
        let d = self.dim();
        let leading = self.entries[1..].iter().take_while(|e| e.is_zero()).count();
        if leading == d {
            return None;
        }
        let level_big = &self.entries[leading + 1];
        let level = u64::try_from(level_big).ok()?;
        let mut run = 0;
        while leading + 1 + run <= d && self.entries[leading + 1 + run] == *level_big {
            run += 1;
        }
        let trailing = d - leading - run;
        if self.entries[leading + 1 + run..].iter().any(|e| !e.is_zero()) {
            return None;
        }
        Some(FlatPattern {
            dim: d,
            leading_zeros: leading,
            trailing_zeros: trailing,
            level,
        })
    }
}

/// Like [`DeltaVector::stanley_violation`], but usable on arbitrary integer
/// sequences (the CLI reports verdicts even for vectors that fail the
/// delta-vector invariants).
pub fn stanley_violation_raw(entries: &[BigInt]) -> Option<usize> {
    let s = entries.iter().rposition(|e| !e.is_zero())?;
    for i in 0..=s / 2 {
        let prefix: BigInt = entries[..=i].iter().sum();
        let suffix: BigInt = entries[s - i..=s].iter().sum();
        if prefix > suffix {
            return Some(i);
        }
    }
    None
}

/// Like [`DeltaVector::hibi_violation`], on arbitrary integer sequences.
pub fn hibi_violation_raw(entries: &[BigInt]) -> Option<usize> {
    let d = entries.len() - 1;
    if d == 0 {
        return None;
    }
    for i in 0..=(d - 1) / 2 {
        let tail: BigInt = entries[d - i..=d].iter().sum();
        let head: BigInt = entries[1..=i + 1].iter().sum();
        if tail > head {
            return Some(i);
        }
    }
    None
}

/// Invert the generating-function relation: from the counts
/// `i(P, 0), ..., i(P, d)` recover the delta-vector via
/// `delta_j = sum_i (-1)^i binomial(d+1, i) counts[j-i]`.
pub fn delta_from_counts(counts: &[BigInt]) -> Result<DeltaVector> {
    if counts.len() < 2 {
        return Err(Error::InvalidParameters(
            "need counts for dilations 0..=d with d >= 1".into(),
        ));
    }
    if !counts[0].is_one() {
        return Err(Error::InvalidParameters("counts[0] must be 1".into()));
    }
    let d = counts.len() - 1;
    let top = BigInt::from(d as u64 + 1);
    let mut entries = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let mut delta = BigInt::zero();
        for i in 0..=j {
            let term = binomial(&top, i as u64) * &counts[j - i];
            if i % 2 == 0 {
                delta += term;
            } else {
                delta -= term;
            }
        }
        if delta.is_negative() {
            return Err(Error::NotEhrhart { index: j });
        }
        entries.push(delta);
    }
    DeltaVector::new(entries)
}

/// Delta-vector of a simplex by counting its dilations `0..=d`.
pub fn delta_by_counting(s: &Simplex, budget: &CountBudget) -> Result<DeltaVector> {
    let counts: Vec<BigInt> = (0..=s.dim() as u64)
        .map(|n| count_lattice_points(s, n, budget))
        .collect::<Result<_>>()?;
    delta_from_counts(&counts)
}

/// Delta-vector of a simplex as the degree distribution of its Box points.
pub fn delta_from_box(s: &Simplex, budget: &CountBudget) -> Result<DeltaVector> {
    let mut entries = vec![BigInt::zero(); s.dim() + 1];
    for p in box_points(s, budget)? {
        entries[p.degree] += 1;
    }
    DeltaVector::new(entries)
}

/// Parameters of a flat delta-vector `(1, 0^k, a, ..., a, 0^l)` with a
/// nonempty run of the positive level `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlatPattern {
    pub dim: usize,
    pub leading_zeros: usize,
    pub trailing_zeros: usize,
    pub level: u64,
}

impl FlatPattern {
    pub fn new(dim: usize, leading_zeros: usize, trailing_zeros: usize, level: u64) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameters("dimension must be positive".into()));
        }
        if level == 0 {
            return Err(Error::InvalidParameters("level must be at least 1".into()));
        }
        if leading_zeros + trailing_zeros > dim - 1 {
            return Err(Error::InvalidParameters(format!(
                "zero runs leave no room for the level: k + l = {} > d - 1 = {}",
                leading_zeros + trailing_zeros,
                dim - 1
            )));
        }
        Ok(FlatPattern {
            dim,
            leading_zeros,
            trailing_zeros,
            level,
        })
    }

    /// Length of the constant run.
    pub fn run_length(&self) -> usize {
        self.dim - self.leading_zeros - self.trailing_zeros
    }

    /// Write out the pattern as an actual delta-vector.
    pub fn to_delta(&self) -> DeltaVector {
        let mut entries = vec![BigInt::zero(); self.dim + 1];
        entries[0] = BigInt::one();
        for e in entries
            .iter_mut()
            .skip(self.leading_zeros + 1)
            .take(self.run_length())
        {
            *e = BigInt::from(self.level);
        }
        DeltaVector { entries }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn delta(entries: &[i64]) -> DeltaVector {
        DeltaVector::from_i64(entries).unwrap()
    }

    #[test]
    fn from_counts_examples() {
        let unit = delta_from_counts(&[b(1), b(3), b(6)]).unwrap();
        assert_eq!(unit, delta(&[1, 0, 0]));
        let triangle = delta_from_counts(&[b(1), b(4), b(10)]).unwrap();
        assert_eq!(triangle, delta(&[1, 1, 1]));
        let segment = delta_from_counts(&[b(1), b(4)]).unwrap();
        assert_eq!(segment, delta(&[1, 2]));
    }

    #[test]
    fn from_counts_rejects_bad_input() {
        assert_eq!(
            delta_from_counts(&[b(2), b(3)]),
            Err(Error::InvalidParameters("counts[0] must be 1".into()))
        );
        // counts that shrink cannot come from a polytope
        assert_eq!(
            delta_from_counts(&[b(1), b(5), b(2)]),
            Err(Error::NotEhrhart { index: 2 })
        );
    }

    #[test]
    fn eval_examples() {
        assert_eq!(delta(&[1, 0, 0]).ehrhart_at(&b(5)), b(21));
        assert_eq!(delta(&[1, 1, 1]).ehrhart_at(&b(2)), b(10));
        assert_eq!(delta(&[1, 0, 1, 0]).ehrhart_at(&b(-2)), b(-1));
        // constant term is always 1
        assert_eq!(delta(&[1, 0, 1, 0]).ehrhart_at(&b(0)), b(1));
    }

    #[test]
    fn interior_examples() {
        assert_eq!(delta(&[1, 0, 0]).interior_at(3), b(1));
        assert_eq!(delta(&[1, 0, 1, 0]).interior_at(2), b(1));
        assert_eq!(delta(&[1, 1, 1]).interior_at(1), b(1));
    }

    #[test]
    fn stanley_examples() {
        assert_eq!(delta(&[1, 0, 1, 0]).stanley_violation(), None);
        assert_eq!(delta(&[1, 2, 1]).stanley_violation(), None);
        assert_eq!(delta(&[1, 0, 0, 1, 0]).stanley_violation(), None);
        // heavy prefix against a light suffix
        assert_eq!(stanley_violation_raw(&[b(1), b(2), b(0), b(1)]), Some(1));
    }

    #[test]
    fn hibi_examples() {
        assert_eq!(delta(&[1, 1, 1]).hibi_violation(), None);
        assert_eq!(delta(&[1, 0, 1, 1, 0, 0]).hibi_violation(), None);
        assert_eq!(delta(&[1, 0, 0, 1, 0]).hibi_violation(), Some(1));
    }

    #[test]
    fn classify_examples() {
        let p = delta(&[1, 0, 2, 2, 0]).classify_flat().unwrap();
        assert_eq!(p, FlatPattern::new(4, 1, 1, 2).unwrap());
        let p = delta(&[1, 1, 1, 0]).classify_flat().unwrap();
        assert_eq!(p, FlatPattern::new(3, 0, 1, 1).unwrap());
        assert_eq!(delta(&[1, 2, 1]).classify_flat(), None);
        assert_eq!(delta(&[1, 0, 0, 0]).classify_flat(), None);
        assert_eq!(delta(&[1, 0, 2, 0, 1]).classify_flat(), None);
    }

    #[test]
    fn pattern_validation() {
        assert!(FlatPattern::new(3, 1, 2, 1).is_err());
        assert!(FlatPattern::new(3, 0, 0, 0).is_err());
        assert!(FlatPattern::new(0, 0, 0, 1).is_err());
        assert!(FlatPattern::new(1, 0, 0, 7).is_ok());
    }

    #[test]
    fn delta_invariants_enforced() {
        assert!(DeltaVector::from_i64(&[1]).is_err());
        assert!(DeltaVector::from_i64(&[2, 1]).is_err());
        assert_eq!(
            DeltaVector::from_i64(&[1, -1]),
            Err(Error::NotEhrhart { index: 1 })
        );
    }

    #[test]
    fn support_and_volume() {
        let d = delta(&[1, 0, 2, 0, 0]);
        assert_eq!(d.support_max(), 2);
        assert_eq!(d.normalized_volume(), b(3));
    }

    proptest! {
        #[test]
        fn classify_inverts_pattern_writer(
            dim in 1usize..=8,
            leading in 0usize..=7,
            trailing in 0usize..=7,
            level in 1u64..=5,
        ) {
            prop_assume!(leading + trailing < dim);
            let pattern = FlatPattern::new(dim, leading, trailing, level).unwrap();
            prop_assert_eq!(pattern.to_delta().classify_flat(), Some(pattern));
        }

        #[test]
        fn vanishing_law_from_reciprocity(
            dim in 1usize..=6,
            leading in 0usize..=5,
            trailing in 0usize..=5,
            level in 1u64..=4,
        ) {
            prop_assume!(leading + trailing < dim);
            let delta = FlatPattern::new(dim, leading, trailing, level).unwrap().to_delta();
            let s = delta.support_max();
            for t in 1..=(dim - s) as u64 {
                prop_assert_eq!(delta.interior_at(t), BigInt::zero());
            }
            prop_assert_eq!(
                delta.interior_at((dim - s) as u64 + 1),
                delta.entries()[s].clone()
            );
        }
    }
}
