//! Spectrum polynomials and irregular Hodge numbers of a strongly
//! non-degenerate function on a simple-normal-crossing pair with reduced
//! boundary.
//!
//! The closed stratum formula computed here is
//!
//! ```text
//! Sp_f = Sp_X + sum_k (-1)^k (1 + t + ... + t^k)   sum_{|I|=k} Sp_{D_I}
//!             - sum_k (-1)^k (t + t^2 + ... + t^k) sum_{|I|=k} Sp_{D_I cap Z}
//! ```
//!
//! and every report is cross-checked two independent ways before it is
//! returned: the unipotent nearby-cycle spectrum is evaluated both as a sum
//! over open strata weighted by `(1-t)^{|I|-1}` and as a sum over closed
//! strata weighted by alternating geometric blocks, and `Sp_f` is recomputed
//! from `Sp_U - t * Sp_psi`. Disagreement means corrupted data or a bug and
//! is reported as a distinct error, never papered over.

use crate::fracpoly::EvalError;
use crate::hodge::HodgeData;
use crate::snc::{SncPair, StrataSide, StratumKey, Violation};
use crate::FracPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpectrumError {
    #[error("invalid pair description: {}", format_violations(.0))]
    InvalidSpec(Vec<Violation>),
    #[error(
        "the stratum formula requires a reduced pole divisor; component {label} has multiplicity {multiplicity}"
    )]
    NonReducedDivisor { label: String, multiplicity: u64 },
    #[error(
        "open and closed nearby-cycle forms disagree (open {open}, closed {closed}); strata data is corrupted"
    )]
    FormMismatch { open: FracPoly, closed: FracPoly },
    #[error(
        "the two derivations of Sp_f disagree (direct {direct}, via nearby cycles {via_nearby}); strata data is corrupted"
    )]
    InternalIdentityFailure {
        direct: FracPoly,
        via_nearby: FracPoly,
    },
    #[error("irregular Hodge number at gamma = {gamma} is negative ({value}); strata data is inconsistent")]
    NegativeIrregularNumber { gamma: BigRational, value: BigInt },
    #[error("evaluation failed: {0}")]
    Eval(#[from] EvalError),
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

/// Which of the two equivalent presentations of the nearby-cycle sum to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NearbyCycleForm {
    /// Sum over open strata with weight `(1-t)^{|I|-1}`.
    Open,
    /// Sum over closed strata with weight `(-1)^{k-1} (1 + t + ... + t^{k-1})`.
    Closed,
}

/// Diagnostics carried alongside a spectrum computation.
#[derive(Debug, Clone)]
pub struct Diagnostics {
    /// `Sp_f` evaluated at `t = 1`: the signed dimension of the relative
    /// cohomology, for cross-checking against Euler characteristics.
    pub euler_value: BigRational,
    /// Whether the coefficients satisfy `c_a == c_{n-a}`. Both worked plane
    /// examples do; this is a diagnostic, not a validated theorem.
    pub palindrome_about_n: bool,
    /// The middle cohomological degree `n = dim X`; strong non-degeneracy
    /// concentrates everything there.
    pub middle_degree: i32,
    pub warnings: Vec<String>,
}

/// Result of the full irregular-spectrum computation.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    /// Compactly supported spectrum polynomial of the function.
    pub sp_f: FracPoly,
    /// Spectrum of the unipotent nearby cycles at infinity.
    pub sp_psi: FracPoly,
    /// `gamma -> (-1)^n * coefficient(sp_f, gamma)`; nonnegative whenever the
    /// strata data is consistent, negative entries are reported in warnings.
    pub irregular: BTreeMap<BigRational, BigInt>,
    pub diagnostics: Diagnostics,
}

/// Spectrum polynomial of a smooth projective variety from its Hodge table:
/// `sum_{p,q} (-1)^{p+q} h^{p,q} t^p`.
pub fn spectrum_of_variety(hodge: &HodgeData) -> FracPoly {
    let mut poly = FracPoly::zero();
    for (p, row) in hodge.rows().iter().enumerate() {
        for (q, &value) in row.iter().enumerate() {
            let mut coeff = BigInt::from(value);
            if (p + q) % 2 == 1 {
                coeff = -coeff;
            }
            poly.add_term(BigRational::from_integer(p.into()), coeff);
        }
    }
    poly
}

/// Compactly supported spectrum of the `d`-torus: `(t - 1)^d`.
pub fn spectrum_of_torus_stratum(d: u32) -> FracPoly {
    let t_minus_one = FracPoly::from_terms([
        (BigRational::zero(), BigInt::from(-1)),
        (BigRational::one(), BigInt::one()),
    ]);
    t_minus_one.pow(d)
}

/// Spectrum of the open stratum `D_I - (deeper strata)` on either side, by
/// inclusion-exclusion over the closed supersets:
/// `Sp_{D_I^o} = sum_{J >= I} (-1)^{|J|-|I|} Sp_{D_J}`.
pub fn open_stratum_spectrum(
    pair: &SncPair,
    key: &StratumKey,
    side: StrataSide,
) -> Result<FracPoly, SpectrumError> {
    let violations = pair.validate();
    if !violations.is_empty() {
        return Err(SpectrumError::InvalidSpec(violations));
    }
    Ok(open_stratum_spectrum_unchecked(pair, key, side))
}

fn open_stratum_spectrum_unchecked(pair: &SncPair, key: &StratumKey, side: StrataSide) -> FracPoly {
    let mut sum = FracPoly::zero();
    for (superset, hodge) in pair.nonempty_strata(side) {
        if !key.subset_of(superset) {
            continue;
        }
        let mut term = spectrum_of_variety(hodge);
        if (superset.len() - key.len()) % 2 == 1 {
            term = term.negate();
        }
        sum = sum.add(&term);
    }
    sum
}

/// Spectrum of the unipotent nearby cycles of `1/f` at the boundary, in
/// either of the two equivalent forms. The pair must be valid and reduced.
pub fn nearby_cycle_spectrum(
    pair: &SncPair,
    form: NearbyCycleForm,
) -> Result<FracPoly, SpectrumError> {
    let violations = pair.validate();
    if !violations.is_empty() {
        return Err(SpectrumError::InvalidSpec(violations));
    }
    require_reduced(pair)?;
    Ok(match form {
        NearbyCycleForm::Open => nearby_cycle_open(pair),
        NearbyCycleForm::Closed => nearby_cycle_closed(pair),
    })
}

fn require_reduced(pair: &SncPair) -> Result<(), SpectrumError> {
    for component in pair.components() {
        if component.multiplicity != 1 {
            return Err(SpectrumError::NonReducedDivisor {
                label: component.label.clone(),
                multiplicity: component.multiplicity,
            });
        }
    }
    Ok(())
}

fn nearby_cycle_open(pair: &SncPair) -> FracPoly {
    let one_minus_t = FracPoly::from_terms([
        (BigRational::zero(), BigInt::one()),
        (BigRational::one(), BigInt::from(-1)),
    ]);
    let mut sum = FracPoly::zero();
    // Strata with empty divisor part have empty open strata on both sides
    // and contribute nothing, so the sum runs over stored keys only.
    for (key, _) in pair.nonempty_strata(StrataSide::Divisor) {
        let open_divisor = open_stratum_spectrum_unchecked(pair, key, StrataSide::Divisor);
        let open_z = open_stratum_spectrum_unchecked(pair, key, StrataSide::ZLocus);
        let weight = one_minus_t.pow(key.len() as u32 - 1);
        sum = sum.add(&weight.mul(&open_divisor.sub(&open_z)));
    }
    sum
}

fn nearby_cycle_closed(pair: &SncPair) -> FracPoly {
    let mut by_size: BTreeMap<usize, FracPoly> = BTreeMap::new();
    for (key, hodge) in pair.nonempty_strata(StrataSide::Divisor) {
        let entry = by_size.entry(key.len()).or_insert_with(FracPoly::zero);
        *entry = entry.add(&spectrum_of_variety(hodge));
    }
    for (key, hodge) in pair.nonempty_strata(StrataSide::ZLocus) {
        let entry = by_size.entry(key.len()).or_insert_with(FracPoly::zero);
        *entry = entry.sub(&spectrum_of_variety(hodge));
    }
    let mut sum = FracPoly::zero();
    for (k, inner) in by_size {
        let mut term = FracPoly::geometric_block(k as u32 - 1).mul(&inner);
        if k % 2 == 0 {
            term = term.negate();
        }
        sum = sum.add(&term);
    }
    sum
}

/// Spectrum of the open complement `U = X - D` by inclusion-exclusion.
fn open_complement_spectrum(pair: &SncPair) -> FracPoly {
    let mut sum = spectrum_of_variety(pair.ambient());
    for (key, hodge) in pair.nonempty_strata(StrataSide::Divisor) {
        let mut term = spectrum_of_variety(hodge);
        if key.len() % 2 == 1 {
            term = term.negate();
        }
        sum = sum.add(&term);
    }
    sum
}

/// Full computation: `Sp_f` by the closed stratum formula, the nearby-cycle
/// spectrum in both forms, the irregular Hodge number table, and diagnostics.
///
/// Construction-time identities: the two nearby-cycle forms must agree
/// ([`SpectrumError::FormMismatch`]) and the direct `Sp_f` must equal
/// `Sp_U - t * Sp_psi` ([`SpectrumError::InternalIdentityFailure`]).
pub fn irregular_spectrum(pair: &SncPair) -> Result<SpectrumReport, SpectrumError> {
    let violations = pair.validate();
    if !violations.is_empty() {
        return Err(SpectrumError::InvalidSpec(violations));
    }
    require_reduced(pair)?;

    let n = pair.dim();

    // Direct form of the stratum formula, grouped by subset size.
    let mut divisor_by_size: BTreeMap<usize, FracPoly> = BTreeMap::new();
    for (key, hodge) in pair.nonempty_strata(StrataSide::Divisor) {
        let entry = divisor_by_size
            .entry(key.len())
            .or_insert_with(FracPoly::zero);
        *entry = entry.add(&spectrum_of_variety(hodge));
    }
    let mut z_by_size: BTreeMap<usize, FracPoly> = BTreeMap::new();
    for (key, hodge) in pair.nonempty_strata(StrataSide::ZLocus) {
        let entry = z_by_size.entry(key.len()).or_insert_with(FracPoly::zero);
        *entry = entry.add(&spectrum_of_variety(hodge));
    }

    let mut sp_f = spectrum_of_variety(pair.ambient());
    for (k, inner) in &divisor_by_size {
        let mut term = FracPoly::geometric_block(*k as u32).mul(inner);
        if k % 2 == 1 {
            term = term.negate();
        }
        sp_f = sp_f.add(&term);
    }
    for (k, inner) in &z_by_size {
        let mut term = FracPoly::shifted_geometric_block(*k as u32).mul(inner);
        if k % 2 == 0 {
            term = term.negate();
        }
        sp_f = sp_f.add(&term);
    }

    // Cross-check one: both nearby-cycle forms.
    let psi_open = nearby_cycle_open(pair);
    let psi_closed = nearby_cycle_closed(pair);
    if psi_open != psi_closed {
        return Err(SpectrumError::FormMismatch {
            open: psi_open,
            closed: psi_closed,
        });
    }

    // Cross-check two: Sp_f = Sp_U - t * Sp_psi.
    let via_nearby = open_complement_spectrum(pair).sub(&FracPoly::t().mul(&psi_open));
    if sp_f != via_nearby {
        return Err(SpectrumError::InternalIdentityFailure {
            direct: sp_f,
            via_nearby,
        });
    }

    let mut warnings = pair.warnings().to_vec();
    let mut irregular = BTreeMap::new();
    for (gamma, coeff) in sp_f.iter() {
        let mut value = coeff.clone();
        if n % 2 == 1 {
            value = -value;
        }
        if value.is_negative() {
            warnings.push(format!(
                "irregular Hodge number at gamma = {gamma} is negative ({value}); \
                 strata data is inconsistent with strong non-degeneracy"
            ));
        }
        irregular.insert(gamma.clone(), value);
    }
    if !pair.strongly_nondegenerate() {
        warnings.push(
            "strong non-degeneracy not attested: middle-degree concentration is not guaranteed"
                .to_string(),
        );
    }

    let euler_value = sp_f.evaluate(&BigRational::one())?;
    let palindrome_about_n = sp_f.is_palindrome(&BigRational::from_integer(n.into()));

    Ok(SpectrumReport {
        sp_psi: psi_open,
        irregular,
        diagnostics: Diagnostics {
            euler_value,
            palindrome_about_n,
            middle_degree: n,
            warnings,
        },
        sp_f,
    })
}

/// The table `gamma -> h^gamma_irr(U, f, n)`; fails on a negative entry
/// rather than clamping it.
pub fn extract_irregular_numbers(
    report: &SpectrumReport,
) -> Result<BTreeMap<BigRational, BigInt>, SpectrumError> {
    for (gamma, value) in &report.irregular {
        if value.is_negative() {
            return Err(SpectrumError::NegativeIrregularNumber {
                gamma: gamma.clone(),
                value: value.clone(),
            });
        }
    }
    Ok(report.irregular.clone())
}

/// Whether `Sp_f(1)` matches an independently computed
/// `chi(U) - chi(generic fiber)`.
pub fn euler_cross_check(report: &SpectrumReport, chi_u: i64, chi_fiber: i64) -> bool {
    report.diagnostics.euler_value == BigRational::from_integer((chi_u - chi_fiber).into())
}

/// Deeper audit used by the CLI `--check full` level: Mobius round trip
/// (summing open strata over supersets recovers each closed stratum) on both
/// sides, for every stored stratum.
pub fn mobius_round_trip_holds(pair: &SncPair) -> Result<bool, SpectrumError> {
    let violations = pair.validate();
    if !violations.is_empty() {
        return Err(SpectrumError::InvalidSpec(violations));
    }
    for side in [StrataSide::Divisor, StrataSide::ZLocus] {
        let keys: Vec<StratumKey> = pair
            .nonempty_strata(StrataSide::Divisor)
            .map(|(k, _)| k.clone())
            .collect();
        for key in keys {
            let mut total = FracPoly::zero();
            for (superset, _) in pair.nonempty_strata(StrataSide::Divisor) {
                if key.subset_of(superset) {
                    total = total.add(&open_stratum_spectrum_unchecked(pair, superset, side));
                }
            }
            if total != spectrum_of_variety(&pair.stratum(&key, side)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
