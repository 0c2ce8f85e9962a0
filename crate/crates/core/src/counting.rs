//! Exact lattice-point counting oracles.
//!
//! Dilation counts, interior counts, and the half-open parallelepiped
//! ("Box") points of a simplex are all computed by direct enumeration over
//! the integer bounding box, with membership decided by exact integer
//! linear forms derived from the adjugate of the lifted vertex matrix.
//!
//! The enumeration walks the bounding box one coordinate at a time and
//! skips slabs that provably contain no solution, so the candidates
//! actually visited stay proportional to the points found rather than to
//! the raw box volume. Pruning only ever discards empty slabs; every
//! emitted point satisfies all constraints exactly. A budget caps the
//! number of visited candidates, and exceeding it is a hard error, never a
//! silent truncation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{adjugate, det_bareiss, IntMatrix};
use crate::polytope::Simplex;

/// Cap on the number of candidates an enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountBudget {
    pub max_candidates: u64,
}

impl CountBudget {
    pub fn new(max_candidates: u64) -> Self {
        assert!(max_candidates > 0, "budget must be positive");
        CountBudget { max_candidates }
    }
}

impl Default for CountBudget {
    fn default() -> Self {
        CountBudget {
            max_candidates: 100_000_000,
        }
    }
}

/// A lattice point of the half-open parallelepiped spanned by the lifted
/// vertices `(v_i, 1)` of a simplex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxPoint {
    /// The point itself, in `Z^{d+1}`.
    pub point: Vec<BigInt>,
    /// Coefficients `lambda_i` with `point = sum lambda_i (v_i, 1)` and
    /// `0 <= lambda_i < 1`, indexed like the vertices (`lambda_0` first).
    pub lambdas: Vec<BigRational>,
    /// The last coordinate of the point.
    pub degree: usize,
}

/// Linear constraint `coeffs . x + constant >= 0`.
struct AffineForm {
    coeffs: Vec<BigInt>,
    constant: BigInt,
}

/// Membership data for a simplex: an integer matrix `b` and positive
/// integer `e` with `b * lifted = e * I`, so the barycentric coordinates of
/// a lifted point `y` are exactly `(b y) / e`.
fn scaled_inverse(s: &Simplex) -> (IntMatrix, BigInt) {
    let m = s.lifted_matrix();
    let det = det_bareiss(&m).expect("lifted matrix is square");
    let mut b = adjugate(&m).expect("lifted matrix is square");
    if det.is_negative() {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                let v = -b.at(i, j).clone();
                *b.at_mut(i, j) = v;
            }
        }
    }
    (b, det.abs())
}

/// Cap on rounds of interval tightening per search node. Bounds stay valid
/// whatever the cap; more rounds only sharpen the pruning.
const PROPAGATION_ROUNDS: usize = 4;

/// Tighten per-coordinate intervals against every form by interval
/// arithmetic, repeating until a fixpoint or the round cap. Returns `None`
/// when some form cannot reach zero anymore, i.e. the box is empty.
///
/// For a form `sum c_r x_r + const >= 0`, the largest achievable value is
/// `M = const + sum max(c_r lo_r, c_r hi_r)`; each coordinate must then
/// satisfy `c_r x_r >= -(M - max(c_r lo_r, c_r hi_r))`, which rounds to an
/// integer bound.
fn propagate(intervals: &mut [(BigInt, BigInt)], forms: &[AffineForm]) -> Option<()> {
    for _ in 0..PROPAGATION_ROUNDS {
        let mut changed = false;
        for f in forms {
            let gains: Vec<BigInt> = f
                .coeffs
                .iter()
                .zip(intervals.iter())
                .map(|(c, (lo, hi))| (c * lo).max(c * hi))
                .collect();
            let total = &f.constant + gains.iter().sum::<BigInt>();
            if total.is_negative() {
                return None;
            }
            for (r, c) in f.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let rest = &total - &gains[r];
                let (lo, hi) = &mut intervals[r];
                if c.is_positive() {
                    let bound = (-rest).div_ceil(c);
                    if bound > *lo {
                        if bound > *hi {
                            return None;
                        }
                        *lo = bound;
                        changed = true;
                    }
                } else {
                    let bound = rest.div_floor(&-c);
                    if bound < *hi {
                        if bound < *lo {
                            return None;
                        }
                        *hi = bound;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return Some(());
        }
    }
    Some(())
}

/// Enumerate all integer points of the product box `ranges` that satisfy
/// every form, invoking `on_point` once per solution. Coordinates are
/// branched widest range first; before each branch the remaining intervals
/// are tightened by [`propagate`], so provably empty slabs are skipped.
/// Every visited candidate value counts against the budget.
fn scan_box(
    ranges: &[(BigInt, BigInt)],
    forms: &[AffineForm],
    budget: &CountBudget,
    mut on_point: impl FnMut(&[BigInt]),
) -> Result<()> {
    let dim = ranges.len();
    assert!(dim > 0);
    if ranges.iter().any(|(lo, hi)| lo > hi) {
        return Ok(());
    }

    // widest coordinate first; ties broken by index for determinism
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| {
        let wa = &ranges[a].1 - &ranges[a].0;
        let wb = &ranges[b].1 - &ranges[b].0;
        wb.cmp(&wa).then(a.cmp(&b))
    });

    let mut intervals = ranges.to_vec();
    if propagate(&mut intervals, forms).is_none() {
        return Ok(());
    }

    struct Scan<'a, F> {
        order: &'a [usize],
        forms: &'a [AffineForm],
        max_candidates: u64,
        visited: u64,
        on_point: F,
    }

    impl<F: FnMut(&[BigInt])> Scan<'_, F> {
        fn descend(&mut self, depth: usize, intervals: &[(BigInt, BigInt)]) -> Result<()> {
            if depth == self.order.len() {
                let point: Vec<BigInt> = intervals.iter().map(|(lo, _)| lo.clone()).collect();
                (self.on_point)(&point);
                return Ok(());
            }
            let coord = self.order[depth];
            let (lo, hi) = intervals[coord].clone();
            let mut v = lo;
            while v <= hi {
                self.visited += 1;
                if self.visited > self.max_candidates {
                    return Err(Error::BudgetExceeded {
                        max_candidates: self.max_candidates,
                    });
                }
                let mut child = intervals.to_vec();
                child[coord] = (v.clone(), v.clone());
                if propagate(&mut child, self.forms).is_some() {
                    self.descend(depth + 1, &child)?;
                }
                v += 1;
            }
            Ok(())
        }
    }

    let mut scan = Scan {
        order: &order,
        forms,
        max_candidates: budget.max_candidates,
        visited: 0,
        on_point: &mut on_point,
    };
    scan.descend(0, &intervals)
}

/// Bounding box of the `n`-th dilation, from vertex coordinate extremes.
fn dilation_ranges(s: &Simplex, n: u64) -> Vec<(BigInt, BigInt)> {
    let n = BigInt::from(n);
    (0..s.dim())
        .map(|r| {
            let lo = s.vertices().iter().map(|v| &v[r]).min().unwrap() * &n;
            let hi = s.vertices().iter().map(|v| &v[r]).max().unwrap() * &n;
            (lo, hi)
        })
        .collect()
}

/// Membership forms for `nP`: barycentric numerators must satisfy
/// `g_i(x) >= threshold` where `g_i(x) = b_i . (x, n)`.
fn dilation_forms(s: &Simplex, n: u64, threshold: u32) -> Vec<AffineForm> {
    let (b, _e) = scaled_inverse(s);
    let d = s.dim();
    (0..=d)
        .map(|i| AffineForm {
            coeffs: b.row(i)[..d].to_vec(),
            constant: b.at(i, d) * BigInt::from(n) - BigInt::from(threshold),
        })
        .collect()
}

/// Number of lattice points of the `n`-th dilation, `i(P, n)`.
///
/// `n = 0` yields 1 (the origin of the dilation).
pub fn count_lattice_points(s: &Simplex, n: u64, budget: &CountBudget) -> Result<BigInt> {
    let mut count = BigInt::zero();
    scan_box(
        &dilation_ranges(s, n),
        &dilation_forms(s, n, 0),
        budget,
        |_| count += 1,
    )?;
    Ok(count)
}

/// Number of lattice points strictly inside the `n`-th dilation, `i*(P, n)`.
pub fn count_interior_points(s: &Simplex, n: u64, budget: &CountBudget) -> Result<BigInt> {
    assert!(n >= 1, "interior counts need a positive dilation");
    // strict positivity of integer numerators is `>= 1`
    let mut count = BigInt::zero();
    scan_box(
        &dilation_ranges(s, n),
        &dilation_forms(s, n, 1),
        budget,
        |_| count += 1,
    )?;
    Ok(count)
}

/// All lattice points of the half-open parallelepiped
/// `{ sum lambda_i (v_i, 1) : 0 <= lambda_i < 1 }`, sorted lexicographically
/// by coordinates. The number of points equals the normalized volume, and
/// the multiset of degrees is the delta-vector.
pub fn box_points(s: &Simplex, budget: &CountBudget) -> Result<Vec<BoxPoint>> {
    let m = s.lifted_matrix();
    let (b, e) = scaled_inverse(s);
    let d = s.dim();

    // per-coordinate extremes over coefficient choices in {0, 1}
    let ranges: Vec<(BigInt, BigInt)> = (0..=d)
        .map(|r| {
            let mut lo = BigInt::zero();
            let mut hi = BigInt::zero();
            for i in 0..=d {
                let v = m.at(r, i);
                if v.is_negative() {
                    lo += v;
                } else {
                    hi += v;
                }
            }
            (lo, hi)
        })
        .collect();

    // 0 <= g_i and g_i <= e - 1, i.e. lambda_i in [0, 1)
    let mut forms = Vec::with_capacity(2 * (d + 1));
    for i in 0..=d {
        forms.push(AffineForm {
            coeffs: b.row(i).to_vec(),
            constant: BigInt::zero(),
        });
        forms.push(AffineForm {
            coeffs: b.row(i).iter().map(|c| -c).collect(),
            constant: &e - 1,
        });
    }

    let mut points = Vec::new();
    scan_box(&ranges, &forms, budget, |y| {
        let numerators = b.mul_vec(y).expect("dimensions agree");
        let lambdas: Vec<BigRational> = numerators
            .into_iter()
            .map(|g| BigRational::new(g, e.clone()))
            .collect();
        let degree = usize::try_from(&y[d]).expect("degree is a small nonnegative integer");
        points.push(BoxPoint {
            point: y.to_vec(),
            lambdas,
            degree,
        });
    })?;
    points.sort_by(|a, b| a.point.cmp(&b.point));
    Ok(points)
}

/// Degree of a Box point of a simplex whose first vertex is the origin:
/// the ceiling of `lambda_1 + ... + lambda_d` (the origin coefficient
/// `lambda_0` does not contribute).
pub fn degree_of(lambdas: &[BigRational]) -> usize {
    debug_assert!(lambdas
        .iter()
        .all(|l| !l.is_negative() && *l < BigRational::one()));
    let total: BigRational = lambdas.iter().skip(1).sum();
    usize::try_from(&total.ceil().to_integer()).expect("degree is a small nonnegative integer")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn simplex(rows: &[&[i64]]) -> Simplex {
        Simplex::new(
            rows.iter()
                .map(|r| r.iter().map(|&c| b(c)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn balanced_3_1_1() -> Simplex {
        simplex(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 2]])
    }

    fn full_triangle() -> Simplex {
        simplex(&[&[0, 0], &[1, 0], &[2, 3]])
    }

    /// Independent membership route: full product-box walk filtered by the
    /// rational barycentric solve.
    fn naive_count(s: &Simplex, n: u64, interior: bool) -> BigInt {
        let ranges = dilation_ranges(s, n);
        let mut count = BigInt::zero();
        let mut cursor: Vec<BigInt> = ranges.iter().map(|(lo, _)| lo.clone()).collect();
        loop {
            if let Some(mu) = s.barycentric(&cursor, n) {
                if !interior || mu.iter().all(|m| m.is_positive()) {
                    count += 1;
                }
            }
            let mut carry = true;
            for (c, (lo, hi)) in cursor.iter_mut().zip(&ranges) {
                if carry {
                    *c += 1;
                    if *c > *hi {
                        *c = lo.clone();
                    } else {
                        carry = false;
                    }
                }
            }
            if carry {
                return count;
            }
        }
    }

    #[test]
    fn unit_triangle_dilation_counts() {
        let s = Simplex::unit(2);
        let budget = CountBudget::default();
        assert_eq!(count_lattice_points(&s, 0, &budget).unwrap(), b(1));
        assert_eq!(count_lattice_points(&s, 2, &budget).unwrap(), b(6));
        assert_eq!(count_interior_points(&s, 2, &budget).unwrap(), b(0));
        assert_eq!(count_interior_points(&s, 3, &budget).unwrap(), b(1));
    }

    #[test]
    fn balanced_simplex_counts() {
        let s = balanced_3_1_1();
        let budget = CountBudget::default();
        assert_eq!(count_lattice_points(&s, 1, &budget).unwrap(), b(4));
        assert_eq!(count_interior_points(&s, 2, &budget).unwrap(), b(1));
    }

    #[test]
    fn full_triangle_counts() {
        let s = full_triangle();
        let budget = CountBudget::default();
        assert_eq!(count_lattice_points(&s, 1, &budget).unwrap(), b(4));
        assert_eq!(count_interior_points(&s, 1, &budget).unwrap(), b(1));
    }

    #[test]
    fn box_of_unit_simplex_is_origin() {
        for d in 1..=4 {
            let pts = box_points(&Simplex::unit(d), &CountBudget::default()).unwrap();
            assert_eq!(pts.len(), 1);
            assert!(pts[0].point.iter().all(BigInt::is_zero));
            assert_eq!(pts[0].degree, 0);
        }
    }

    #[test]
    fn box_of_balanced_simplex() {
        let pts = box_points(&balanced_3_1_1(), &CountBudget::default()).unwrap();
        assert_eq!(pts.len(), 2);
        assert!(pts[0].point.iter().all(BigInt::is_zero));
        let expected: Vec<BigInt> = [1, 1, 1, 2].iter().map(|&v| b(v)).collect();
        assert_eq!(pts[1].point, expected);
        let half = BigRational::new(b(1), b(2));
        assert_eq!(pts[1].lambdas, vec![half.clone(), half.clone(), half.clone(), half]);
        assert_eq!(pts[1].degree, 2);
    }

    #[test]
    fn box_of_full_triangle_has_all_degrees() {
        let pts = box_points(&full_triangle(), &CountBudget::default()).unwrap();
        let mut degrees: Vec<usize> = pts.iter().map(|p| p.degree).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![0, 1, 2]);
    }

    #[test]
    fn budget_is_enforced() {
        let s = full_triangle();
        let tiny = CountBudget::new(3);
        assert_eq!(
            count_lattice_points(&s, 4, &tiny),
            Err(Error::BudgetExceeded { max_candidates: 3 })
        );
    }

    #[test]
    fn degree_of_examples() {
        let zero = BigRational::zero();
        assert_eq!(degree_of(&[zero.clone(), zero.clone(), zero.clone()]), 0);
        let half = BigRational::new(b(1), b(2));
        assert_eq!(
            degree_of(&[half.clone(), half.clone(), half.clone(), half]),
            2
        );
        let third = BigRational::new(b(1), b(3));
        assert_eq!(degree_of(&[third.clone(), third.clone(), third]), 1);
    }

    #[test]
    fn box_degree_matches_point_and_ceiling_formula() {
        for s in [balanced_3_1_1(), full_triangle(), Simplex::unit(3)] {
            let pts = box_points(&s, &CountBudget::default()).unwrap();
            for p in &pts {
                assert_eq!(BigInt::from(p.degree), p.point[s.dim()]);
                // first vertex of these simplices is the origin
                assert_eq!(p.degree, degree_of(&p.lambdas));
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn pruned_scan_matches_naive_walk(
            coords in proptest::collection::vec(-2i64..=3, 6),
            n in 0u64..=2,
            interior in proptest::bool::ANY,
        ) {
            let verts: Vec<Vec<BigInt>> = std::iter::once(vec![b(0), b(0)])
                .chain(coords.chunks(2).map(|c| c.iter().map(|&v| b(v)).collect()))
                .take(3)
                .collect();
            if let Ok(s) = Simplex::new(verts) {
                let budget = CountBudget::default();
                if interior {
                    if n >= 1 {
                        prop_assert_eq!(
                            count_interior_points(&s, n, &budget).unwrap(),
                            naive_count(&s, n, true)
                        );
                    }
                } else {
                    prop_assert_eq!(
                        count_lattice_points(&s, n, &budget).unwrap(),
                        naive_count(&s, n, false)
                    );
                }
            }
        }

        #[test]
        fn box_count_equals_normalized_volume(
            coords in proptest::collection::vec(-3i64..=3, 9),
        ) {
            let verts: Vec<Vec<BigInt>> =
                coords.chunks(3).map(|c| c.iter().map(|&v| b(v)).collect()).collect();
            if let Ok(s) = Simplex::new(verts) {
                prop_assume!(s.normalized_volume() <= b(50));
                let pts = box_points(&s, &CountBudget::default()).unwrap();
                prop_assert_eq!(BigInt::from(pts.len()), s.normalized_volume());
                for p in &pts {
                    prop_assert_eq!(BigInt::from(p.degree), p.point[s.dim()].clone());
                    // exact reconstruction: point = sum lambda_i (v_i, 1)
                    let lifted = s.lifted_matrix();
                    for r in 0..=s.dim() {
                        let rebuilt: BigRational = (0..=s.dim())
                            .map(|i| &p.lambdas[i] * BigRational::from(lifted.at(r, i).clone()))
                            .sum();
                        prop_assert_eq!(rebuilt, BigRational::from(p.point[r].clone()));
                    }
                }
            }
        }

        #[test]
        fn interior_never_exceeds_total_and_counts_grow(
            n in 1u64..=3,
        ) {
            for s in [balanced_3_1_1(), full_triangle()] {
                let budget = CountBudget::default();
                let total = count_lattice_points(&s, n, &budget).unwrap();
                let inner = count_interior_points(&s, n, &budget).unwrap();
                prop_assert!(inner <= total);
                let next = count_lattice_points(&s, n + 1, &budget).unwrap();
                prop_assert!(total <= next);
            }
        }
    }
}
