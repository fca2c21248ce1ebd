//! Shared constructors for the worked examples, used across unit tests.

use crate::hodge::HodgeData;
use crate::snc::{DivisorComponent, SncPair, StratumKey};

pub(crate) fn key(ix: &[usize]) -> StratumKey {
    StratumKey::new(ix.to_vec()).unwrap()
}

fn component(label: &str) -> DivisorComponent {
    DivisorComponent {
        label: label.to_string(),
        multiplicity: 1,
    }
}

/// The projective plane with its three coordinate lines and a transverse
/// cubic zero locus: U is the 2-torus.
pub(crate) fn three_lines_pair() -> SncPair {
    let line = HodgeData::projective_space(1);
    let point = HodgeData::points(1);
    let three_points = HodgeData::points(3);
    SncPair::from_parts(
        HodgeData::projective_space(2),
        vec![component("L0"), component("L1"), component("L2")],
        vec![
            (key(&[0]), line.clone()),
            (key(&[1]), line.clone()),
            (key(&[2]), line),
            (key(&[0, 1]), point.clone()),
            (key(&[0, 2]), point.clone()),
            (key(&[1, 2]), point),
        ],
        vec![
            (key(&[0]), three_points.clone()),
            (key(&[1]), three_points.clone()),
            (key(&[2]), three_points),
        ],
        true,
    )
}

/// The projective plane with a smooth cubic as boundary and a zero locus
/// meeting it in the nine base points (the generic translate of the triangle
/// function).
pub(crate) fn hesse_pair() -> SncPair {
    SncPair::from_parts(
        HodgeData::projective_space(2),
        vec![component("E")],
        vec![(key(&[0]), HodgeData::curve(1))],
        vec![(key(&[0]), HodgeData::points(9))],
        true,
    )
}

/// The line with boundary {0} + {infinity} and zero locus two points off the
/// boundary: the mirror of the projective line, x + 1/x on the 1-torus.
pub(crate) fn mirror_p1_pair() -> SncPair {
    let point = HodgeData::points(1);
    SncPair::from_parts(
        HodgeData::projective_space(1),
        vec![component("zero"), component("infinity")],
        vec![(key(&[0]), point.clone()), (key(&[1]), point)],
        vec![],
        true,
    )
}

/// The line with a single boundary point and a zero locus disjoint from it:
/// a linear function on the affine line.
pub(crate) fn a1_linear_pair() -> SncPair {
    SncPair::from_parts(
        HodgeData::projective_space(1),
        vec![component("infinity")],
        vec![(key(&[0]), HodgeData::points(1))],
        vec![],
        true,
    )
}
