//! JSON wire formats shared by the CLI and the C interface.
//!
//! Coordinates, delta entries, and counts travel as `i64` on the wire;
//! values outside that range are rejected rather than rounded. Parsers
//! ignore unknown fields, so the `construct` output (a simplex object with
//! an extra `delta` field) round-trips into the simplex consumers.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::ehrhart::{DeltaVector, FlatPattern};
use crate::error::{Error, Result};
use crate::polytope::Simplex;
use crate::verify::{FamilyReport, Quantity, VerificationReport};

fn to_i64(value: &BigInt, what: &'static str) -> Result<i64> {
    i64::try_from(value).map_err(|_| Error::Unrepresentable(what))
}

/// `{"dim": d, "vertices": [[int, ...], ...]}` with `d + 1` vertices of
/// length `d`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SimplexJson {
    pub dim: usize,
    pub vertices: Vec<Vec<i64>>,
}

impl SimplexJson {
    pub fn from_simplex(s: &Simplex) -> Result<Self> {
        Ok(SimplexJson {
            dim: s.dim(),
            vertices: s
                .vertices()
                .iter()
                .map(|v| v.iter().map(|c| to_i64(c, "vertex coordinate")).collect())
                .collect::<Result<_>>()?,
        })
    }

    pub fn to_simplex(&self) -> Result<Simplex> {
        let s = Simplex::new(
            self.vertices
                .iter()
                .map(|v| v.iter().map(|&c| BigInt::from(c)).collect())
                .collect(),
        )?;
        if s.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: s.dim(),
            });
        }
        Ok(s)
    }
}

/// `{"d": d, "delta": [1, ...]}` with `d + 1` entries.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DeltaJson {
    pub d: usize,
    pub delta: Vec<i64>,
}

impl DeltaJson {
    pub fn from_delta(delta: &DeltaVector) -> Result<Self> {
        Ok(DeltaJson {
            d: delta.dim(),
            delta: delta
                .entries()
                .iter()
                .map(|e| to_i64(e, "delta entry"))
                .collect::<Result<_>>()?,
        })
    }

    pub fn to_delta(&self) -> Result<DeltaVector> {
        if self.delta.len() != self.d + 1 {
            return Err(Error::DimensionMismatch {
                expected: self.d + 1,
                got: self.delta.len(),
            });
        }
        DeltaVector::from_i64(&self.delta)
    }
}

fn quantity_name(q: Quantity) -> &'static str {
    match q {
        Quantity::Count => "count",
        Quantity::Interior => "interior",
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AgreementJson {
    pub dilation: u64,
    pub quantity: &'static str,
    pub value: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DivergenceJson {
    pub dilation: u64,
    pub quantity: &'static str,
    pub value_p: i64,
    pub value_q: i64,
}

/// One pair verification, with every inspected value recorded.
#[derive(Debug, Clone, Serialize)]
pub struct PairReportJson {
    pub dim: usize,
    pub k: usize,
    pub l: usize,
    pub agreements: Vec<AgreementJson>,
    pub first_divergence: Vec<DivergenceJson>,
    pub passed: bool,
}

impl PairReportJson {
    pub fn from_report(report: &VerificationReport) -> Result<Self> {
        Ok(PairReportJson {
            dim: report.dim,
            k: report.counts_agree,
            l: report.interiors_agree,
            agreements: report
                .agreements
                .iter()
                .map(|a| {
                    Ok(AgreementJson {
                        dilation: a.dilation,
                        quantity: quantity_name(a.quantity),
                        value: to_i64(&a.value, "count")?,
                    })
                })
                .collect::<Result<_>>()?,
            first_divergence: report
                .divergences
                .iter()
                .map(|d| {
                    Ok(DivergenceJson {
                        dilation: d.dilation,
                        quantity: quantity_name(d.quantity),
                        value_p: to_i64(&d.left, "count")?,
                        value_q: to_i64(&d.right, "count")?,
                    })
                })
                .collect::<Result<_>>()?,
            passed: report.passed,
        })
    }
}

/// One member-vs-member entry of a family verification; indices are
/// one-based, matching the levels used to build the family.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyPairJson {
    pub i: usize,
    pub j: usize,
    #[serde(flatten)]
    pub report: PairReportJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReportJson {
    pub pairs: Vec<FamilyPairJson>,
    pub passed: bool,
}

impl FamilyReportJson {
    pub fn from_report(report: &FamilyReport) -> Result<Self> {
        Ok(FamilyReportJson {
            pairs: report
                .pairs
                .iter()
                .map(|(i, j, r)| {
                    Ok(FamilyPairJson {
                        i: i + 1,
                        j: j + 1,
                        report: PairReportJson::from_report(r)?,
                    })
                })
                .collect::<Result<_>>()?,
            passed: report.passed,
        })
    }
}

/// Flat classification on the wire.
#[derive(Debug, Clone, Serialize)]
pub struct FlatPatternJson {
    pub d: usize,
    pub k: usize,
    pub l: usize,
    pub a: u64,
}

impl From<FlatPattern> for FlatPatternJson {
    fn from(p: FlatPattern) -> Self {
        FlatPatternJson {
            d: p.dim,
            k: p.leading_zeros,
            l: p.trailing_zeros,
            a: p.level,
        }
    }
}
