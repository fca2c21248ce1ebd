//! Translation of irregular Hodge numbers into limiting-Hodge-filtration
//! tables, the Landau-Ginzburg numbers `f^{p,q}_LG`, and the mechanical
//! comparison against user-supplied weight-graded dimensions `h^{p,q}_LG`.
//!
//! The weight side cannot be computed here (it needs the limit mixed Hodge
//! structure of the fibration at infinity), so it is always an input; this
//! module only decides whether the two number systems match and whether the
//! supplied weight data has the Hodge-Tate shape forced by a match.

use crate::spectrum::SpectrumReport;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KkpError {
    #[error(
        "total dimensions disagree: irregular table sums to {expected}, weight data sums to {got}"
    )]
    ShapeMismatch { expected: BigInt, got: BigInt },
    #[error("irregular table has fractional exponent {gamma}; expected a reduced pole divisor")]
    FractionalExponent { gamma: BigRational },
}

/// Graded dimensions of the limiting Hodge filtration on the eigenspaces of
/// the monodromy at infinity, in one cohomological degree.
///
/// The entry at `(alpha, p)` with `alpha` in `[0,1)` is the dimension of
/// `gr^p` of the limiting filtration on the `exp(-2 pi i alpha)` eigenspace;
/// it equals the irregular Hodge number at `gamma = p + alpha`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitingHodgeTable {
    pub degree: i32,
    pub entries: BTreeMap<(BigRational, i64), BigInt>,
}

impl LimitingHodgeTable {
    pub fn total_dimension(&self) -> BigInt {
        self.entries.values().sum()
    }
}

/// User-supplied weight-graded dimensions: `(p, q) -> dim gr^W_{2p}` of the
/// relative cohomology in degree `p + q`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightGradedInput {
    pub w: BTreeMap<(i64, i64), u64>,
}

impl WeightGradedInput {
    pub fn from_pairs<I: IntoIterator<Item = ((i64, i64), u64)>>(pairs: I) -> Self {
        WeightGradedInput {
            w: pairs.into_iter().filter(|(_, dim)| *dim > 0).collect(),
        }
    }

    pub fn total_dimension(&self) -> BigInt {
        self.w.values().map(|&v| BigInt::from(v)).sum()
    }
}

/// Outcome of the equality comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KkpVerdict {
    /// Whether `f^{p,q}_LG == h^{p,q}_LG` everywhere.
    pub holds: bool,
    /// Whether the weight data has the Hodge-Tate shape: each `gr^W_{2p}`
    /// carries exactly the `gr^p` dimension of the limiting filtration.
    pub hodge_tate: bool,
    /// First pair where the equality fails, in lexicographic order.
    pub witness: Option<(i64, i64)>,
}

/// Split every `gamma` in the irregular table as `p + alpha` with `alpha` in
/// `[0,1)` and regroup. For a reduced pole divisor only `alpha = 0` occurs.
pub fn to_limiting_table(report: &SpectrumReport) -> LimitingHodgeTable {
    let mut entries = BTreeMap::new();
    for (gamma, value) in &report.irregular {
        if value.is_zero() {
            continue;
        }
        let p = gamma.floor().to_integer();
        let alpha = gamma - BigRational::from_integer(p.clone());
        let p = i64::try_from(&p).expect("filtration index within i64");
        entries.insert((alpha, p), value.clone());
    }
    LimitingHodgeTable {
        degree: report.diagnostics.middle_degree,
        entries,
    }
}

/// The nonzero `f^{p,q}_LG`: with cohomology concentrated in the middle
/// degree `n`, only `p + q = n` contributes and `f^{p,n-p}_LG` is the
/// irregular Hodge number at `gamma = n - p`.
pub fn f_lg_numbers(report: &SpectrumReport) -> Result<BTreeMap<(i64, i64), BigInt>, KkpError> {
    let n = i64::from(report.diagnostics.middle_degree);
    let mut out = BTreeMap::new();
    for (gamma, value) in &report.irregular {
        if value.is_zero() {
            continue;
        }
        if !gamma.is_integer() {
            return Err(KkpError::FractionalExponent {
                gamma: gamma.clone(),
            });
        }
        let q = i64::try_from(gamma.numer()).expect("exponent within i64");
        out.insert((n - q, q), value.clone());
    }
    Ok(out)
}

/// Compare `f^{p,q}_LG` from the report against the supplied weight-graded
/// dimensions. Fails fast when the total dimensions differ, since the two
/// tables then cannot describe the same cohomology.
pub fn kkp_equality_check(
    report: &SpectrumReport,
    weights: &WeightGradedInput,
) -> Result<KkpVerdict, KkpError> {
    let f_lg = f_lg_numbers(report)?;
    let expected: BigInt = f_lg.values().sum();
    let got = weights.total_dimension();
    if expected != got {
        return Err(KkpError::ShapeMismatch { expected, got });
    }

    let mut keys: BTreeSet<(i64, i64)> = f_lg.keys().copied().collect();
    keys.extend(weights.w.keys().copied());

    let mut holds = true;
    let mut witness = None;
    for &(p, q) in &keys {
        let f_val = f_lg.get(&(p, q)).cloned().unwrap_or_else(BigInt::zero);
        let w_val = BigInt::from(weights.w.get(&(p, q)).copied().unwrap_or(0));
        if f_val != w_val {
            holds = false;
            witness = Some((p, q));
            break;
        }
    }

    // Hodge-Tate shape: dim gr^W_{2p} matches dim gr^p of the limiting
    // filtration, i.e. w(p, q) == irregular[p] == f_lg(q, p).
    let mut transposed_keys: BTreeSet<(i64, i64)> = keys.iter().map(|&(p, q)| (q, p)).collect();
    transposed_keys.extend(keys.iter().copied());
    let hodge_tate = transposed_keys.iter().all(|&(p, q)| {
        let w_val = BigInt::from(weights.w.get(&(p, q)).copied().unwrap_or(0));
        let f_transposed = f_lg.get(&(q, p)).cloned().unwrap_or_else(BigInt::zero);
        w_val == f_transposed
    });

    Ok(KkpVerdict {
        holds,
        hodge_tate,
        witness,
    })
}
