//! Hodge number tables of smooth projective (possibly empty, possibly
//! disconnected) varieties, plus the generators and combinators used to
//! assemble strata data: projective spaces, finite point sets, curves,
//! hypersurfaces, smooth proper toric varieties from cone counts, products
//! and disjoint unions.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HodgeError {
    #[error("hodge table must be a {expected}x{expected} square for dim {dim}")]
    TableShape { dim: i32, expected: usize },
    #[error("empty variety (dim -1) must have an empty table")]
    EmptyWithEntries,
    #[error("Hodge symmetry violated at (p,q)=({p},{q}): {lhs} != {rhs}")]
    SymmetryViolation { p: usize, q: usize, lhs: u64, rhs: u64 },
    #[error("Serre duality violated at (p,q)=({p},{q}): {lhs} != {rhs}")]
    SerreDualityViolation { p: usize, q: usize, lhs: u64, rhs: u64 },
    #[error("h^{{0,0}} = {h00} does not match component count {components}")]
    ComponentsMismatch { h00: u64, components: u64 },
    #[error("nonempty variety must have at least one connected component")]
    NoComponents,
    #[error("cone counts must start with a single zero-dimensional cone, got f_0 = {f0}")]
    InvalidConeCounts { f0: u64 },
    #[error("cone-count expansion gives negative h^{{{p},{p}}} = {value} (fan not smooth/complete?)")]
    NegativeHodgeNumber { p: usize, value: i128 },
    #[error("disjoint union requires equal dimensions, got {left} and {right}")]
    DimensionMismatch { left: i32, right: i32 },
    #[error("hodge number overflow at (p,q)=({p},{q})")]
    Overflow { p: usize, q: usize },
}

/// Hodge numbers `h^{p,q}` of a smooth projective variety.
///
/// `dim == -1` encodes the empty variety (empty table, zero components).
/// Construction checks Hodge symmetry, Serre duality and the component count
/// `h^{0,0}`, so every held value is a valid table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HodgeDataRepr", into = "HodgeDataRepr")]
pub struct HodgeData {
    dim: i32,
    h: Vec<Vec<u64>>,
    components: u64,
}

/// Raw serialized shape: `{dim, h, components?}` with `components` defaulting
/// to `h^{0,0}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct HodgeDataRepr {
    dim: i32,
    h: Vec<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    components: Option<u64>,
}

impl TryFrom<HodgeDataRepr> for HodgeData {
    type Error = HodgeError;
    fn try_from(repr: HodgeDataRepr) -> Result<Self, HodgeError> {
        let data = HodgeData::new(repr.dim, repr.h)?;
        if let Some(components) = repr.components {
            if components != data.components {
                return Err(HodgeError::ComponentsMismatch {
                    h00: data.components,
                    components,
                });
            }
        }
        Ok(data)
    }
}

impl From<HodgeData> for HodgeDataRepr {
    fn from(data: HodgeData) -> Self {
        HodgeDataRepr {
            dim: data.dim,
            h: data.h,
            components: Some(data.components),
        }
    }
}

impl HodgeData {
    /// Validate and wrap a raw table. `dim == -1` with an empty table gives
    /// the empty variety; the component count is read off `h^{0,0}`.
    pub fn new(dim: i32, h: Vec<Vec<u64>>) -> Result<Self, HodgeError> {
        if dim < 0 {
            if h.iter().any(|row| !row.is_empty()) || dim < -1 {
                return Err(HodgeError::EmptyWithEntries);
            }
            return Ok(HodgeData {
                dim: -1,
                h: Vec::new(),
                components: 0,
            });
        }
        let size = dim as usize + 1;
        if h.len() != size || h.iter().any(|row| row.len() != size) {
            return Err(HodgeError::TableShape {
                dim,
                expected: size,
            });
        }
        for p in 0..size {
            for q in p..size {
                if h[p][q] != h[q][p] {
                    return Err(HodgeError::SymmetryViolation {
                        p,
                        q,
                        lhs: h[p][q],
                        rhs: h[q][p],
                    });
                }
                let (dp, dq) = (size - 1 - p, size - 1 - q);
                if h[p][q] != h[dp][dq] {
                    return Err(HodgeError::SerreDualityViolation {
                        p,
                        q,
                        lhs: h[p][q],
                        rhs: h[dp][dq],
                    });
                }
            }
        }
        let components = h[0][0];
        if components == 0 {
            return Err(HodgeError::NoComponents);
        }
        Ok(HodgeData { dim, h, components })
    }

    /// The empty variety.
    pub fn empty() -> Self {
        HodgeData {
            dim: -1,
            h: Vec::new(),
            components: 0,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.dim < 0
    }

    pub fn dim(&self) -> i32 {
        self.dim
    }

    pub fn components(&self) -> u64 {
        self.components
    }

    /// `h^{p,q}`, zero outside the table.
    pub fn hodge_number(&self, p: usize, q: usize) -> u64 {
        self.h
            .get(p)
            .and_then(|row| row.get(q))
            .copied()
            .unwrap_or(0)
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.h
    }

    /// Compactly supported Euler characteristic `sum (-1)^{p+q} h^{p,q}`.
    pub fn euler_characteristic(&self) -> i64 {
        let mut chi = 0i64;
        for (p, row) in self.h.iter().enumerate() {
            for (q, &value) in row.iter().enumerate() {
                let signed = value as i64;
                if (p + q) % 2 == 0 {
                    chi += signed;
                } else {
                    chi -= signed;
                }
            }
        }
        chi
    }

    /// Projective space of dimension `n`: `h^{p,p} = 1` for `0 <= p <= n`.
    pub fn projective_space(n: u32) -> Self {
        let size = n as usize + 1;
        let mut h = vec![vec![0u64; size]; size];
        for (p, row) in h.iter_mut().enumerate() {
            row[p] = 1;
        }
        HodgeData {
            dim: n as i32,
            h,
            components: 1,
        }
    }

    /// `k` reduced points; `k = 0` is the empty variety.
    pub fn points(k: u64) -> Self {
        if k == 0 {
            return Self::empty();
        }
        HodgeData {
            dim: 0,
            h: vec![vec![k]],
            components: k,
        }
    }

    /// Smooth projective connected curve of the given genus.
    pub fn curve(genus: u64) -> Self {
        HodgeData {
            dim: 1,
            h: vec![vec![1, genus], vec![genus, 1]],
            components: 1,
        }
    }

    /// Smooth proper toric variety from its cone counts `f = (f_0, ..., f_n)`,
    /// `f_k` the number of `k`-dimensional cones of the fan.
    ///
    /// The torus-orbit decomposition gives the E-polynomial
    /// `sum_k f_k (uv - 1)^{n-k}`, so `h^{p,p}` is the coefficient of `(uv)^p`
    /// and everything off-diagonal vanishes. The fan itself is not checked;
    /// a negative coefficient is reported as [`HodgeError::NegativeHodgeNumber`].
    pub fn toric_from_cone_counts(f: &[u64]) -> Result<Self, HodgeError> {
        if f.first() != Some(&1) {
            return Err(HodgeError::InvalidConeCounts {
                f0: f.first().copied().unwrap_or(0),
            });
        }
        let n = f.len() - 1;
        let mut coeffs = vec![0i128; n + 1];
        for (k, &fk) in f.iter().enumerate() {
            // (s - 1)^{n-k} = sum_j C(n-k, j) (-1)^{n-k-j} s^j
            let m = n - k;
            let mut binom = 1i128;
            for j in 0..=m {
                let sign = if (m - j) % 2 == 0 { 1 } else { -1 };
                coeffs[j] += sign * binom * fk as i128;
                binom = binom * (m - j) as i128 / (j + 1) as i128;
            }
        }
        let mut h = vec![vec![0u64; n + 1]; n + 1];
        for (p, &value) in coeffs.iter().enumerate() {
            if value < 0 {
                return Err(HodgeError::NegativeHodgeNumber { p, value });
            }
            h[p][p] = u64::try_from(value).map_err(|_| HodgeError::Overflow { p, q: p })?;
        }
        Self::new(n as i32, h)
    }

    /// Smooth degree-`d` hypersurface in projective `n`-space (`n >= 1`,
    /// `d >= 1`), dimension `m = n - 1`.
    ///
    /// Off the middle degree the table is the restricted projective-space
    /// diagonal; on the middle antidiagonal the primitive part `h^{p,q}_prim`
    /// is the number of lattice tuples in `[1, d-1]^{n+1}` with coordinate sum
    /// `(q+1) d`, plus the hyperplane class when `m` is even and `p = m/2`.
    pub fn hypersurface_in_projective_space(n: u32, d: u64) -> Result<Self, HodgeError> {
        assert!(n >= 1, "ambient dimension must be at least 1");
        assert!(d >= 1, "degree must be at least 1");
        let m = (n - 1) as usize;
        let mut h = vec![vec![0u64; m + 1]; m + 1];
        for (p, row) in h.iter_mut().enumerate() {
            if p + p != m {
                row[p] = 1;
            }
        }
        for p in 0..=m {
            let q = m - p;
            let target = (q as u64 + 1) * d;
            let count = bounded_composition_count(n as usize + 1, d - 1, target);
            let lefschetz = u64::from(m % 2 == 0 && p + p == m);
            h[p][q] = u64::try_from(count)
                .ok()
                .and_then(|c| c.checked_add(lefschetz))
                .ok_or(HodgeError::Overflow { p, q })?;
        }
        Self::new(m as i32, h)
    }

    /// Kunneth product: `h^{p,q} = sum h^{p1,q1}(a) h^{p-p1,q-q1}(b)`.
    pub fn product(a: &HodgeData, b: &HodgeData) -> Result<Self, HodgeError> {
        if a.is_empty() || b.is_empty() {
            return Ok(Self::empty());
        }
        let dim = (a.dim + b.dim) as usize;
        let mut h = vec![vec![0u64; dim + 1]; dim + 1];
        for (p1, row_a) in a.h.iter().enumerate() {
            for (q1, &ha) in row_a.iter().enumerate() {
                if ha == 0 {
                    continue;
                }
                for (p2, row_b) in b.h.iter().enumerate() {
                    for (q2, &hb) in row_b.iter().enumerate() {
                        let cell = &mut h[p1 + p2][q1 + q2];
                        *cell = ha
                            .checked_mul(hb)
                            .and_then(|prod| cell.checked_add(prod))
                            .ok_or(HodgeError::Overflow {
                                p: p1 + p2,
                                q: q1 + q2,
                            })?;
                    }
                }
            }
        }
        Self::new(dim as i32, h)
    }

    /// Entrywise sum of two tables of equal dimension; components add.
    pub fn disjoint_union(a: &HodgeData, b: &HodgeData) -> Result<Self, HodgeError> {
        if a.is_empty() {
            return Ok(b.clone());
        }
        if b.is_empty() {
            return Ok(a.clone());
        }
        if a.dim != b.dim {
            return Err(HodgeError::DimensionMismatch {
                left: a.dim,
                right: b.dim,
            });
        }
        let mut h = a.h.clone();
        for (p, row) in h.iter_mut().enumerate() {
            for (q, cell) in row.iter_mut().enumerate() {
                *cell = cell
                    .checked_add(b.h[p][q])
                    .ok_or(HodgeError::Overflow { p, q })?;
            }
        }
        Self::new(a.dim, h)
    }
}

impl fmt::Display for HodgeData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "empty");
        }
        writeln!(f, "dim {}, {} component(s)", self.dim, self.components)?;
        for (p, row) in self.h.iter().enumerate() {
            write!(f, "  h[{p}][.] =")?;
            for value in row {
                write!(f, " {value}")?;
            }
            if p + 1 < self.h.len() {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Number of tuples `(a_1, ..., a_parts)` with `1 <= a_i <= max_part` and
/// `sum a_i = target`, by dynamic programming over the parts.
fn bounded_composition_count(parts: usize, max_part: u64, target: u64) -> u128 {
    if max_part == 0 {
        return 0;
    }
    if target > max_part * parts as u64 {
        return 0;
    }
    let target = target as usize;
    let max_part = max_part as usize;
    let mut counts = vec![0u128; target + 1];
    counts[0] = 1;
    for _ in 0..parts {
        let mut next = vec![0u128; target + 1];
        for (total, &ways) in counts.iter().enumerate() {
            if ways == 0 {
                continue;
            }
            for part in 1..=max_part {
                if total + part > target {
                    break;
                }
                next[total + part] += ways;
            }
        }
        counts = next;
    }
    counts[target]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_spaces() {
        let p2 = HodgeData::projective_space(2);
        assert_eq!(p2.rows(), &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let p0 = HodgeData::projective_space(0);
        assert_eq!(p0.rows(), &[vec![1]]);
        assert_eq!(HodgeData::projective_space(1).rows(), &[vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn point_sets() {
        assert_eq!(HodgeData::points(3).hodge_number(0, 0), 3);
        assert_eq!(HodgeData::points(3).components(), 3);
        assert_eq!(HodgeData::points(9).hodge_number(0, 0), 9);
        assert!(HodgeData::points(0).is_empty());
    }

    #[test]
    fn curves() {
        let elliptic = HodgeData::curve(1);
        assert_eq!(elliptic.rows(), &[vec![1, 1], vec![1, 1]]);
        assert_eq!(HodgeData::curve(0), HodgeData::projective_space(1));
        assert_eq!(HodgeData::curve(2).hodge_number(1, 0), 2);
    }

    #[test]
    fn toric_cone_counts() {
        // P^2 fan: 1 zero cone, 3 rays, 3 maximal cones.
        assert_eq!(
            HodgeData::toric_from_cone_counts(&[1, 3, 3]).unwrap(),
            HodgeData::projective_space(2)
        );
        // (s-1)^2 + 4(s-1) + 4 = s^2 + 2s + 1.
        let quadric = HodgeData::toric_from_cone_counts(&[1, 4, 4]).unwrap();
        assert_eq!(quadric.hodge_number(1, 1), 2);
        assert_eq!(
            HodgeData::toric_from_cone_counts(&[1, 2]).unwrap(),
            HodgeData::projective_space(1)
        );
        // Standard P^n fans for n = 1, 2, 3: f_k = C(n+1, k) proper cones.
        assert_eq!(
            HodgeData::toric_from_cone_counts(&[1, 4, 6, 4]).unwrap(),
            HodgeData::projective_space(3)
        );
        // (s-1)^2 + 3(s-1) + 1 = s^2 + s - 1: a fan with too few maximal cones.
        assert!(matches!(
            HodgeData::toric_from_cone_counts(&[1, 3, 1]),
            Err(HodgeError::NegativeHodgeNumber { .. })
        ));
        // A single ray gives h^{0,0} = 0, rejected at table construction.
        assert!(HodgeData::toric_from_cone_counts(&[1, 1]).is_err());
        assert!(matches!(
            HodgeData::toric_from_cone_counts(&[2, 3, 3]),
            Err(HodgeError::InvalidConeCounts { .. })
        ));
    }

    #[test]
    fn hypersurfaces() {
        let cubic_curve = HodgeData::hypersurface_in_projective_space(2, 3).unwrap();
        assert_eq!(cubic_curve, HodgeData::curve(1));

        let cubic_surface = HodgeData::hypersurface_in_projective_space(3, 3).unwrap();
        assert_eq!(cubic_surface.hodge_number(1, 1), 7);
        assert_eq!(cubic_surface.hodge_number(2, 0), 0);

        let quartic_k3 = HodgeData::hypersurface_in_projective_space(3, 4).unwrap();
        assert_eq!(quartic_k3.hodge_number(1, 1), 20);
        assert_eq!(quartic_k3.hodge_number(2, 0), 1);

        let quintic = HodgeData::hypersurface_in_projective_space(4, 5).unwrap();
        assert_eq!(quintic.hodge_number(2, 1), 101);
        assert_eq!(quintic.hodge_number(1, 1), 1);
        assert_eq!(quintic.hodge_number(3, 0), 1);

        // Degree 1 recovers a hyperplane, degree d in P^1 gives d points.
        assert_eq!(
            HodgeData::hypersurface_in_projective_space(3, 1).unwrap(),
            HodgeData::projective_space(2)
        );
        assert_eq!(
            HodgeData::hypersurface_in_projective_space(1, 4).unwrap(),
            HodgeData::points(4)
        );
        // Quadric surface matches P^1 x P^1.
        let p1 = HodgeData::projective_space(1);
        assert_eq!(
            HodgeData::hypersurface_in_projective_space(3, 2).unwrap(),
            HodgeData::product(&p1, &p1).unwrap()
        );
    }

    #[test]
    fn products() {
        let p1 = HodgeData::projective_space(1);
        let square = HodgeData::product(&p1, &p1).unwrap();
        assert_eq!(square.hodge_number(1, 1), 2);
        assert_eq!(square.hodge_number(0, 0), 1);
        assert_eq!(square.hodge_number(2, 2), 1);
        assert_eq!(square, HodgeData::toric_from_cone_counts(&[1, 4, 4]).unwrap());

        let a = HodgeData::curve(2);
        assert_eq!(HodgeData::product(&a, &HodgeData::points(1)).unwrap(), a);
        assert!(HodgeData::product(&a, &HodgeData::empty()).unwrap().is_empty());

        let b = HodgeData::projective_space(2);
        let c = HodgeData::points(2);
        let left = HodgeData::product(&HodgeData::product(&a, &b).unwrap(), &c).unwrap();
        let right = HodgeData::product(&a, &HodgeData::product(&b, &c).unwrap()).unwrap();
        assert_eq!(left, right);
        assert_eq!(
            HodgeData::product(&a, &b).unwrap(),
            HodgeData::product(&b, &a).unwrap()
        );
    }

    #[test]
    fn disjoint_unions() {
        assert_eq!(
            HodgeData::disjoint_union(&HodgeData::points(3), &HodgeData::points(6)).unwrap(),
            HodgeData::points(9)
        );
        let a = HodgeData::curve(1);
        assert_eq!(HodgeData::disjoint_union(&a, &HodgeData::empty()).unwrap(), a);
        let two = HodgeData::disjoint_union(&a, &a).unwrap();
        assert_eq!(two.hodge_number(0, 0), 2);
        assert_eq!(two.hodge_number(1, 0), 2);
        assert_eq!(two.hodge_number(1, 1), 2);
        assert_eq!(two.components(), 2);
        assert!(matches!(
            HodgeData::disjoint_union(&a, &HodgeData::points(1)),
            Err(HodgeError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn construction_rejects_bad_tables() {
        assert!(matches!(
            HodgeData::new(1, vec![vec![1, 2], vec![1, 1]]),
            Err(HodgeError::SymmetryViolation { .. })
        ));
        assert!(matches!(
            HodgeData::new(1, vec![vec![2, 1], vec![1, 1]]),
            Err(HodgeError::SerreDualityViolation { .. })
        ));
        assert!(matches!(
            HodgeData::new(1, vec![vec![1, 1]]),
            Err(HodgeError::TableShape { .. })
        ));
        assert!(matches!(
            HodgeData::new(0, vec![vec![0]]),
            Err(HodgeError::NoComponents)
        ));
        assert!(HodgeData::new(-1, vec![]).unwrap().is_empty());
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(HodgeData::projective_space(2).euler_characteristic(), 3);
        assert_eq!(HodgeData::curve(1).euler_characteristic(), 0);
        assert_eq!(HodgeData::curve(2).euler_characteristic(), -2);
        assert_eq!(HodgeData::points(9).euler_characteristic(), 9);
        assert_eq!(HodgeData::empty().euler_characteristic(), 0);
    }

    #[test]
    fn serde_round_trip_validates() {
        let k3 = HodgeData::hypersurface_in_projective_space(3, 4).unwrap();
        let json = serde_json::to_string(&k3).unwrap();
        let back: HodgeData = serde_json::from_str(&json).unwrap();
        assert_eq!(back, k3);

        let bad = r#"{"dim": 1, "h": [[1, 2], [1, 1]]}"#;
        assert!(serde_json::from_str::<HodgeData>(bad).is_err());
        let mismatch = r#"{"dim": 0, "h": [[3]], "components": 2}"#;
        assert!(serde_json::from_str::<HodgeData>(mismatch).is_err());
    }
}
