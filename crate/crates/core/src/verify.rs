//! Dilation-agreement verification.
//!
//! Builders produce polytope pairs (or whole families) whose counting
//! functions agree up to prescribed dilations and then provably diverge;
//! the verifiers check those claims using the counting oracle alone, never
//! the delta-vector algebra that generated the polytopes. Reports record
//! every value inspected.

use num_bigint::BigInt;

use crate::counting::{count_interior_points, count_lattice_points, CountBudget};
use crate::ehrhart::FlatPattern;
use crate::error::{Error, Result};
use crate::flat::realize;
use crate::polytope::Simplex;

/// Which counting function a report row refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    /// All lattice points of the dilation.
    Count,
    /// Strictly interior lattice points.
    Interior,
}

/// A dilation at which the two counting functions were required to agree,
/// and did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Agreement {
    pub dilation: u64,
    pub quantity: Quantity,
    pub value: BigInt,
}

/// A dilation at which the two counting functions took different values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divergence {
    pub dilation: u64,
    pub quantity: Quantity,
    pub left: BigInt,
    pub right: BigInt,
}

/// Outcome of checking one pair: counts must agree for dilations
/// `1..=counts_agree`, interior counts for `1..=interiors_agree`, and both
/// must strictly differ one step past their agreement range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub dim: usize,
    pub counts_agree: usize,
    pub interiors_agree: usize,
    pub agreements: Vec<Agreement>,
    pub divergences: Vec<Divergence>,
    pub passed: bool,
}

/// Outcome of checking every unordered pair of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    /// `(i, j, report)` for each pair with `i < j`, zero-based.
    pub pairs: Vec<(usize, usize, VerificationReport)>,
    pub passed: bool,
}

fn check_params(dim: usize, k: usize, l: usize) -> Result<()> {
    if dim == 0 || k + l > dim - 1 {
        return Err(Error::InvalidParameters(format!(
            "need d >= 1 and k + l <= d - 1; got d={dim}, k={k}, l={l}"
        )));
    }
    Ok(())
}

/// A pair of `dim`-dimensional simplices whose counts agree for dilations
/// `1..=k`, whose interior counts agree for `1..=l`, and which diverge in
/// both quantities immediately after.
///
/// The first realizes `(1, a^k, 0^{d-k})` (the unit simplex when `k = 0`),
/// the second `(1, a^{d-l}, 0^l)`, with the same level `a`.
pub fn agreement_pair(
    dim: usize,
    k: usize,
    l: usize,
    level: u64,
    budget: &CountBudget,
) -> Result<(Simplex, Simplex)> {
    check_params(dim, k, l)?;
    if level == 0 {
        return Err(Error::InvalidParameters("level must be at least 1".into()));
    }
    let first = if k == 0 {
        Simplex::unit(dim)
    } else {
        realize(&FlatPattern::new(dim, 0, dim - k, level)?, budget)?.0
    };
    let second = realize(&FlatPattern::new(dim, 0, l, level)?, budget)?.0;
    Ok((first, second))
}

/// A family of simplices realizing `(1, 0^k, a^{d-k-l}, 0^l)` for levels
/// `a = 1 ..= len`. Every pair agrees in counts up to `k` and interior
/// counts up to `l`, then diverges.
pub fn level_family(
    dim: usize,
    k: usize,
    l: usize,
    len: usize,
    budget: &CountBudget,
) -> Result<Vec<Simplex>> {
    check_params(dim, k, l)?;
    if k > l {
        return Err(Error::InvalidParameters(format!(
            "leading zeros must not exceed trailing zeros; got k={k}, l={l}"
        )));
    }
    if len < 2 {
        return Err(Error::InvalidParameters(
            "a family needs at least two members".into(),
        ));
    }
    (1..=len as u64)
        .map(|level| Ok(realize(&FlatPattern::new(dim, k, l, level)?, budget)?.0))
        .collect()
}

/// Check the agreement/divergence claims for one pair by direct counting.
pub fn verify_pair(
    p: &Simplex,
    q: &Simplex,
    k: usize,
    l: usize,
    budget: &CountBudget,
) -> Result<VerificationReport> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            got: q.dim(),
        });
    }
    check_params(p.dim(), k, l)?;

    let mut agreements = Vec::new();
    let mut divergences = Vec::new();
    let mut passed = true;
    let mut record = |dilation: u64, quantity: Quantity, left: BigInt, right: BigInt, want_equal: bool| {
        if left == right {
            passed &= want_equal;
            agreements.push(Agreement {
                dilation,
                quantity,
                value: left,
            });
        } else {
            passed &= !want_equal;
            divergences.push(Divergence {
                dilation,
                quantity,
                left,
                right,
            });
        }
    };

    for t in 1..=k as u64 + 1 {
        let left = count_lattice_points(p, t, budget)?;
        let right = count_lattice_points(q, t, budget)?;
        record(t, Quantity::Count, left, right, t <= k as u64);
    }
    for t in 1..=l as u64 + 1 {
        let left = count_interior_points(p, t, budget)?;
        let right = count_interior_points(q, t, budget)?;
        record(t, Quantity::Interior, left, right, t <= l as u64);
    }

    Ok(VerificationReport {
        dim: p.dim(),
        counts_agree: k,
        interiors_agree: l,
        agreements,
        divergences,
        passed,
    })
}

/// Run [`verify_pair`] on every unordered pair of the family. A family of
/// fewer than two members passes vacuously.
pub fn verify_family(
    family: &[Simplex],
    k: usize,
    l: usize,
    budget: &CountBudget,
) -> Result<FamilyReport> {
    if let Some(first) = family.first() {
        for s in family {
            if s.dim() != first.dim() {
                return Err(Error::DimensionMismatch {
                    expected: first.dim(),
                    got: s.dim(),
                });
            }
        }
    }
    let mut pairs = Vec::new();
    let mut passed = true;
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            let report = verify_pair(&family[i], &family[j], k, l, budget)?;
            passed &= report.passed;
            pairs.push((i, j, report));
        }
    }
    Ok(FamilyReport { pairs, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ehrhart::delta_by_counting;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn budget() -> CountBudget {
        CountBudget::default()
    }

    fn find(report: &VerificationReport, dilation: u64, quantity: Quantity) -> (BigInt, BigInt) {
        for a in &report.agreements {
            if a.dilation == dilation && a.quantity == quantity {
                return (a.value.clone(), a.value.clone());
            }
        }
        for d in &report.divergences {
            if d.dilation == dilation && d.quantity == quantity {
                return (d.left.clone(), d.right.clone());
            }
        }
        panic!("no row for dilation {dilation}");
    }

    #[test]
    fn pair_deltas_match_the_plan() {
        let (p, q) = agreement_pair(3, 1, 1, 1, &budget()).unwrap();
        assert_eq!(
            delta_by_counting(&p, &budget()).unwrap().entries(),
            &[b(1), b(1), b(0), b(0)]
        );
        assert_eq!(
            delta_by_counting(&q, &budget()).unwrap().entries(),
            &[b(1), b(1), b(1), b(0)]
        );

        let (p, q) = agreement_pair(3, 0, 2, 2, &budget()).unwrap();
        assert_eq!(p, Simplex::unit(3));
        assert_eq!(
            delta_by_counting(&q, &budget()).unwrap().entries(),
            &[b(1), b(2), b(0), b(0)]
        );

        let (p, q) = agreement_pair(2, 1, 0, 1, &budget()).unwrap();
        assert_eq!(
            delta_by_counting(&p, &budget()).unwrap().entries(),
            &[b(1), b(1), b(0)]
        );
        assert_eq!(
            delta_by_counting(&q, &budget()).unwrap().entries(),
            &[b(1), b(1), b(1)]
        );
    }

    #[test]
    fn the_reference_pair_verifies_with_known_values() {
        let (p, q) = agreement_pair(3, 1, 1, 1, &budget()).unwrap();
        let report = verify_pair(&p, &q, 1, 1, &budget()).unwrap();
        assert!(report.passed);
        assert_eq!(find(&report, 1, Quantity::Count), (b(5), b(5)));
        assert_eq!(find(&report, 2, Quantity::Count), (b(14), b(15)));
        assert_eq!(find(&report, 1, Quantity::Interior), (b(0), b(0)));
        assert_eq!(find(&report, 2, Quantity::Interior), (b(0), b(1)));
    }

    #[test]
    fn family_members_step_by_level() {
        let family = level_family(3, 1, 1, 2, &budget()).unwrap();
        let report = verify_family(&family, 1, 1, &budget()).unwrap();
        assert!(report.passed);
        let (_, _, pair) = &report.pairs[0];
        assert_eq!(find(pair, 1, Quantity::Count), (b(4), b(4)));
        assert_eq!(find(pair, 2, Quantity::Count), (b(11), b(12)));
        assert_eq!(find(pair, 2, Quantity::Interior), (b(1), b(2)));
    }

    #[test]
    fn identical_simplices_fail_to_diverge() {
        let s = Simplex::unit(3);
        let report = verify_pair(&s, &s, 1, 1, &budget()).unwrap();
        assert!(!report.passed);
        assert!(report.divergences.is_empty());
    }

    #[test]
    fn single_member_family_passes_vacuously() {
        let family = vec![Simplex::unit(2)];
        let report = verify_family(&family, 1, 0, &budget()).unwrap();
        assert!(report.passed);
        assert!(report.pairs.is_empty());
    }

    #[test]
    fn duplicate_member_fails_the_family() {
        let s = full_support(2);
        let family = vec![s.clone(), s];
        let report = verify_family(&family, 1, 0, &budget()).unwrap();
        assert!(!report.passed);
    }

    fn full_support(dim: usize) -> Simplex {
        crate::flat::full_support_simplex(dim, 1).unwrap()
    }

    #[test]
    fn parameter_validation() {
        assert!(agreement_pair(3, 2, 1, 1, &budget()).is_err());
        assert!(level_family(3, 1, 1, 1, &budget()).is_err());
        assert!(level_family(4, 2, 1, 2, &budget()).is_err()); // k > l
        let p = Simplex::unit(2);
        let q = Simplex::unit(3);
        assert!(verify_pair(&p, &q, 0, 0, &budget()).is_err());
    }

    #[test]
    fn pair_divergence_magnitude_is_the_level() {
        // the count divergence one step past the agreement range is exactly a
        for d in 1..=4usize {
            for k in 0..d {
                for l in 0..d {
                    if k + l > d - 1 {
                        continue;
                    }
                    for a in 1..=2u64 {
                        let (p, q) = agreement_pair(d, k, l, a, &budget()).unwrap();
                        let report = verify_pair(&p, &q, k, l, &budget()).unwrap();
                        let gap = report
                            .divergences
                            .iter()
                            .find(|v| v.quantity == Quantity::Count && v.dilation == k as u64 + 1)
                            .map(|v| &v.right - &v.left)
                            .unwrap();
                        assert_eq!(gap, b(a as i64), "(d,k,l,a)=({d},{k},{l},{a})");
                    }
                }
            }
        }
    }

    #[test]
    fn report_values_match_delta_algebra() {
        // counting oracle verdicts and binomial-basis evaluation agree
        let (p, q) = agreement_pair(4, 1, 2, 2, &budget()).unwrap();
        let report = verify_pair(&p, &q, 1, 2, &budget()).unwrap();
        assert!(report.passed);
        let dp = delta_by_counting(&p, &budget()).unwrap();
        let dq = delta_by_counting(&q, &budget()).unwrap();
        for a in &report.agreements {
            let (vp, vq) = match a.quantity {
                Quantity::Count => (
                    dp.ehrhart_at(&b(a.dilation as i64)),
                    dq.ehrhart_at(&b(a.dilation as i64)),
                ),
                Quantity::Interior => (dp.interior_at(a.dilation), dq.interior_at(a.dilation)),
            };
            assert_eq!(vp, a.value);
            assert_eq!(vq, a.value);
        }
        for d in &report.divergences {
            let (vp, vq) = match d.quantity {
                Quantity::Count => (
                    dp.ehrhart_at(&b(d.dilation as i64)),
                    dq.ehrhart_at(&b(d.dilation as i64)),
                ),
                Quantity::Interior => (dp.interior_at(d.dilation), dq.interior_at(d.dilation)),
            };
            assert_eq!(vp, d.left);
            assert_eq!(vq, d.right);
        }
    }
}
