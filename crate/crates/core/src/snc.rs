//! Input model for a simple-normal-crossing pair: the ambient variety, the
//! divisor components with multiplicities, and the Hodge tables of every
//! stratum `D_I` and `D_I \cap Z`.
//!
//! The model accepts non-reduced multiplicities (the spectrum engine rejects
//! them later) and treats missing strata as the empty variety, recording a
//! warning so defaults stay auditable. Validation returns a list of
//! violations instead of failing fast.

use crate::hodge::HodgeData;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

/// Nonempty subset of divisor-component indices, kept sorted and strictly
/// increasing. Ordering is by size first, then lexicographic, which is the
/// order strata are enumerated in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumKey {
    indices: Vec<usize>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KeyError {
    #[error("stratum subset must be nonempty")]
    EmptySubset,
    #[error("stratum subset contains duplicate index {index}")]
    DuplicateIndex { index: usize },
}

impl StratumKey {
    pub fn new(mut indices: Vec<usize>) -> Result<Self, KeyError> {
        if indices.is_empty() {
            return Err(KeyError::EmptySubset);
        }
        indices.sort_unstable();
        for pair in indices.windows(2) {
            if pair[0] == pair[1] {
                return Err(KeyError::DuplicateIndex { index: pair[0] });
            }
        }
        Ok(StratumKey { indices })
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn max_index(&self) -> usize {
        *self.indices.last().expect("keys are nonempty")
    }

    /// Whether `self` is a subset of `other`.
    pub fn subset_of(&self, other: &StratumKey) -> bool {
        let mut it = other.indices.iter();
        self.indices
            .iter()
            .all(|i| it.by_ref().any(|j| j == i))
    }

    /// All subsets of `self` with one index removed; empty for singletons.
    pub fn facets(&self) -> Vec<StratumKey> {
        if self.indices.len() == 1 {
            return Vec::new();
        }
        (0..self.indices.len())
            .map(|drop| {
                let mut indices = self.indices.clone();
                indices.remove(drop);
                StratumKey { indices }
            })
            .collect()
    }

    /// Every nonempty subset of `{0..r-1}` of size at most `max_size`, in
    /// enumeration order.
    pub fn all_subsets(r: usize, max_size: usize) -> Vec<StratumKey> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        for size in 1..=max_size.min(r) {
            subsets_of_size(r, size, 0, &mut current, &mut out);
        }
        out
    }
}

fn subsets_of_size(
    r: usize,
    size: usize,
    start: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<StratumKey>,
) {
    if current.len() == size {
        out.push(StratumKey {
            indices: current.clone(),
        });
        return;
    }
    for i in start..r {
        current.push(i);
        subsets_of_size(r, size, i + 1, current, out);
        current.pop();
    }
}

impl PartialOrd for StratumKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for StratumKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.indices.len(), &self.indices).cmp(&(other.indices.len(), &other.indices))
    }
}

impl fmt::Display for StratumKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, index) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{index}")?;
        }
        write!(f, "}}")
    }
}

/// One irreducible divisor component with its multiplicity in `D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorComponent {
    pub label: String,
    pub multiplicity: u64,
}

/// A structural problem found by [`SncPair::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyAmbient,
    IndexOutOfRange {
        key: StratumKey,
        r: usize,
    },
    DimensionViolation {
        key: StratumKey,
        which: StrataSide,
        expected: i32,
        actual: i32,
    },
    MonotonicityViolation {
        empty: StratumKey,
        nonempty: StratumKey,
    },
    ZWithoutDivisorStratum {
        key: StratumKey,
    },
    InvalidMultiplicity {
        component: usize,
    },
    ReducedFlagMismatch {
        declared: bool,
        derived: bool,
    },
}

/// Which strata table an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrataSide {
    Divisor,
    ZLocus,
}

impl fmt::Display for StrataSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrataSide::Divisor => write!(f, "D_I"),
            StrataSide::ZLocus => write!(f, "D_I \u{2229} Z"),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyAmbient => write!(f, "ambient variety must be nonempty"),
            Violation::IndexOutOfRange { key, r } => {
                write!(f, "stratum {key} uses a component index >= r = {r}")
            }
            Violation::DimensionViolation {
                key,
                which,
                expected,
                actual,
            } => write!(
                f,
                "{which} stratum {key} has dim {actual}, expected {expected}{}",
                if *expected < 0 { " (must be empty)" } else { "" }
            ),
            Violation::MonotonicityViolation { empty, nonempty } => write!(
                f,
                "stratum {empty} is empty but deeper stratum {nonempty} is nonempty"
            ),
            Violation::ZWithoutDivisorStratum { key } => {
                write!(f, "z stratum {key} is nonempty but divisor stratum {key} is empty")
            }
            Violation::InvalidMultiplicity { component } => {
                write!(f, "component {component} has multiplicity 0")
            }
            Violation::ReducedFlagMismatch { declared, derived } => write!(
                f,
                "flags declare reduced = {declared} but multiplicities give {derived}"
            ),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SncError {
    #[error("invalid pair description: {}", format_violations(.0))]
    InvalidSpec(Vec<Violation>),
    #[error("stratum entry: {0}")]
    BadKey(#[from] KeyError),
    #[error("duplicate stratum entry for subset {key}")]
    DuplicateEntry { key: StratumKey },
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

/// A simple-normal-crossing pair with strata Hodge data.
///
/// `strata` and `z_strata` hold only nonempty varieties; a subset that is
/// absent from the map is the empty stratum. The original file may declare
/// empty strata explicitly, which suppresses the defaulting warnings.
#[derive(Debug, Clone)]
pub struct SncPair {
    ambient: HodgeData,
    components: Vec<DivisorComponent>,
    strata: BTreeMap<StratumKey, HodgeData>,
    z_strata: BTreeMap<StratumKey, HodgeData>,
    strongly_nondegenerate: bool,
    declared_reduced: Option<bool>,
    warnings: Vec<String>,
}

/// On-disk JSON shape of a pair description.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SncPairFile {
    #[serde(default = "default_schema_version")]
    pub schema_version: u32,
    pub ambient: HodgeData,
    pub components: Vec<DivisorComponent>,
    #[serde(default)]
    pub strata: Vec<StratumEntry>,
    #[serde(default)]
    pub z_strata: Vec<StratumEntry>,
    #[serde(default)]
    pub flags: Flags,
}

fn default_schema_version() -> u32 {
    crate::SCHEMA_VERSION
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StratumEntry {
    pub subset: Vec<usize>,
    pub hodge: HodgeData,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Flags {
    #[serde(default)]
    pub strongly_nondegenerate: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reduced: Option<bool>,
}

impl SncPair {
    /// Build from the file shape, normalizing missing strata to the empty
    /// variety. Only structurally malformed subsets (duplicates in one
    /// subset, repeated entries) are errors here; everything else is left
    /// for [`SncPair::validate`].
    pub fn from_file(file: SncPairFile) -> Result<Self, SncError> {
        let mut declared: BTreeSet<StratumKey> = BTreeSet::new();
        let mut strata = BTreeMap::new();
        for entry in file.strata {
            let key = StratumKey::new(entry.subset)?;
            if !declared.insert(key.clone()) {
                return Err(SncError::DuplicateEntry { key });
            }
            if !entry.hodge.is_empty() {
                strata.insert(key, entry.hodge);
            }
        }
        let mut declared_z: BTreeSet<StratumKey> = BTreeSet::new();
        let mut z_strata = BTreeMap::new();
        for entry in file.z_strata {
            let key = StratumKey::new(entry.subset)?;
            if !declared_z.insert(key.clone()) {
                return Err(SncError::DuplicateEntry { key });
            }
            if !entry.hodge.is_empty() {
                z_strata.insert(key, entry.hodge);
            }
        }

        let mut pair = SncPair {
            ambient: file.ambient,
            components: file.components,
            strata,
            z_strata,
            strongly_nondegenerate: file.flags.strongly_nondegenerate,
            declared_reduced: file.flags.reduced,
            warnings: Vec::new(),
        };
        pair.warnings = pair.defaulting_warnings(&declared, &declared_z);
        Ok(pair)
    }

    /// Assemble a pair directly from parts (tests and generated inputs).
    pub fn from_parts(
        ambient: HodgeData,
        components: Vec<DivisorComponent>,
        strata: Vec<(StratumKey, HodgeData)>,
        z_strata: Vec<(StratumKey, HodgeData)>,
        strongly_nondegenerate: bool,
    ) -> Self {
        SncPair {
            ambient,
            components,
            strata: strata.into_iter().filter(|(_, h)| !h.is_empty()).collect(),
            z_strata: z_strata.into_iter().filter(|(_, h)| !h.is_empty()).collect(),
            strongly_nondegenerate,
            declared_reduced: None,
            warnings: Vec::new(),
        }
    }

    fn defaulting_warnings(
        &self,
        declared: &BTreeSet<StratumKey>,
        declared_z: &BTreeSet<StratumKey>,
    ) -> Vec<String> {
        let n = self.ambient.dim();
        if n < 0 {
            return Vec::new();
        }
        let mut warnings = Vec::new();
        let mut known_empty: BTreeSet<StratumKey> = BTreeSet::new();
        let max_size = (n as usize + 1).min(self.components.len());
        for key in StratumKey::all_subsets(self.components.len(), max_size) {
            let nonempty = self.strata.contains_key(&key);
            if !nonempty {
                let forced = key.len() > n as usize
                    || known_empty.iter().any(|empty| empty.subset_of(&key));
                if !declared.contains(&key) && !forced {
                    warnings.push(format!(
                        "stratum {key} not listed; defaulting to the empty variety"
                    ));
                }
                known_empty.insert(key.clone());
            }
            // A z stratum is only worth flagging where it could be nonempty.
            if nonempty
                && !self.z_strata.contains_key(&key)
                && !declared_z.contains(&key)
                && n - key.len() as i32 - 1 >= 0
            {
                warnings.push(format!(
                    "z stratum {key} not listed; defaulting to the empty variety"
                ));
            }
        }
        warnings
    }

    pub fn ambient(&self) -> &HodgeData {
        &self.ambient
    }

    /// Dimension of the ambient variety.
    pub fn dim(&self) -> i32 {
        self.ambient.dim()
    }

    /// Number of divisor components.
    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[DivisorComponent] {
        &self.components
    }

    /// Whether every component multiplicity equals one.
    pub fn is_reduced(&self) -> bool {
        self.components.iter().all(|c| c.multiplicity == 1)
    }

    pub fn strongly_nondegenerate(&self) -> bool {
        self.strongly_nondegenerate
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Hodge data of the closed stratum `D_I` or `D_I \cap Z`; the empty
    /// variety when not stored.
    pub fn stratum(&self, key: &StratumKey, side: StrataSide) -> HodgeData {
        let map = match side {
            StrataSide::Divisor => &self.strata,
            StrataSide::ZLocus => &self.z_strata,
        };
        map.get(key).cloned().unwrap_or_else(HodgeData::empty)
    }

    /// Nonempty strata of one side, in enumeration order.
    pub fn nonempty_strata(&self, side: StrataSide) -> impl Iterator<Item = (&StratumKey, &HodgeData)> {
        match side {
            StrataSide::Divisor => self.strata.iter(),
            StrataSide::ZLocus => self.z_strata.iter(),
        }
    }

    /// Check every structural invariant; an empty list means the pair is
    /// usable by the spectrum engine.
    pub fn validate(&self) -> Vec<Violation> {
        let mut violations = Vec::new();
        let n = self.ambient.dim();
        if self.ambient.is_empty() {
            violations.push(Violation::EmptyAmbient);
        }
        let r = self.components.len();
        for (index, component) in self.components.iter().enumerate() {
            if component.multiplicity == 0 {
                violations.push(Violation::InvalidMultiplicity { component: index });
            }
        }
        if let Some(declared) = self.declared_reduced {
            if declared != self.is_reduced() {
                violations.push(Violation::ReducedFlagMismatch {
                    declared,
                    derived: self.is_reduced(),
                });
            }
        }
        for (key, hodge) in &self.strata {
            if key.max_index() >= r {
                violations.push(Violation::IndexOutOfRange { key: key.clone(), r });
                continue;
            }
            let expected = n - key.len() as i32;
            if hodge.dim() != expected {
                violations.push(Violation::DimensionViolation {
                    key: key.clone(),
                    which: StrataSide::Divisor,
                    expected,
                    actual: hodge.dim(),
                });
            }
            for facet in key.facets() {
                if !self.strata.contains_key(&facet) {
                    violations.push(Violation::MonotonicityViolation {
                        empty: facet,
                        nonempty: key.clone(),
                    });
                }
            }
        }
        for (key, hodge) in &self.z_strata {
            if key.max_index() >= r {
                violations.push(Violation::IndexOutOfRange { key: key.clone(), r });
                continue;
            }
            if !self.strata.contains_key(key) {
                violations.push(Violation::ZWithoutDivisorStratum { key: key.clone() });
            }
            let expected = n - key.len() as i32 - 1;
            if hodge.dim() != expected {
                violations.push(Violation::DimensionViolation {
                    key: key.clone(),
                    which: StrataSide::ZLocus,
                    expected,
                    actual: hodge.dim(),
                });
            }
        }
        violations
    }

    /// All strata with a nonempty divisor part, ordered by subset size then
    /// lexicographically, each with its (possibly empty) z stratum.
    pub fn enumerate_strata(
        &self,
    ) -> Result<Vec<(StratumKey, HodgeData, HodgeData)>, SncError> {
        let violations = self.validate();
        if !violations.is_empty() {
            return Err(SncError::InvalidSpec(violations));
        }
        Ok(self
            .strata
            .iter()
            .map(|(key, hodge)| {
                (
                    key.clone(),
                    hodge.clone(),
                    self.stratum(key, StrataSide::ZLocus),
                )
            })
            .collect())
    }

    /// File shape with sorted strata lists; empty strata are written out
    /// explicitly so the canonical form is self-contained.
    pub fn to_file(&self) -> SncPairFile {
        let n = self.ambient.dim().max(0) as usize;
        let max_size = (n + 1).min(self.components.len());
        let mut strata = Vec::new();
        let mut z_strata = Vec::new();
        for key in StratumKey::all_subsets(self.components.len(), max_size) {
            strata.push(StratumEntry {
                subset: key.indices().to_vec(),
                hodge: self.stratum(&key, StrataSide::Divisor),
            });
            z_strata.push(StratumEntry {
                subset: key.indices().to_vec(),
                hodge: self.stratum(&key, StrataSide::ZLocus),
            });
        }
        SncPairFile {
            schema_version: crate::SCHEMA_VERSION,
            ambient: self.ambient.clone(),
            components: self.components.clone(),
            strata,
            z_strata,
            flags: Flags {
                strongly_nondegenerate: self.strongly_nondegenerate,
                reduced: Some(self.is_reduced()),
            },
        }
    }

    /// Canonical JSON: sorted object keys (serde_json's default map order)
    /// and strata sorted by subset size then lexicographically.
    pub fn to_canonical_json(&self) -> String {
        let value = serde_json::to_value(self.to_file()).expect("pair serialization");
        serde_json::to_string_pretty(&sort_json(value)).expect("canonical json")
    }
}

fn sort_json(value: serde_json::Value) -> serde_json::Value {
    match value {
        serde_json::Value::Object(map) => {
            let sorted: serde_json::Map<String, serde_json::Value> = map
                .into_iter()
                .map(|(k, v)| (k, sort_json(v)))
                .collect();
            serde_json::Value::Object(sorted)
        }
        serde_json::Value::Array(items) => {
            serde_json::Value::Array(items.into_iter().map(sort_json).collect())
        }
        other => other,
    }
}

/// Parse a pair description from JSON text.
pub fn parse_pair(json: &str) -> Result<SncPair, PairParseError> {
    let file: SncPairFile = serde_json::from_str(json)?;
    Ok(SncPair::from_file(file)?)
}

#[derive(Debug, Error)]
pub enum PairParseError {
    #[error("json error at line {line}, column {column}: {source}", line = .0.line(), column = .0.column(), source = .0)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Model(#[from] SncError),
}
