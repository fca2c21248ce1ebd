//! Randomized valid reduced pair descriptions for the cross-form suites.

use rand::Rng;
use snc_spectrum::hodge::HodgeData;
use snc_spectrum::snc::{DivisorComponent, SncPair, StratumKey};
use std::collections::BTreeSet;

/// Random Hodge table of the given dimension satisfying symmetry, Serre
/// duality, and a positive component count: assign a value to each orbit of
/// `(p,q)` under the two symmetries.
pub fn random_hodge<R: Rng>(rng: &mut R, dim: i32) -> HodgeData {
    if dim < 0 {
        return HodgeData::empty();
    }
    let size = dim as usize + 1;
    let mut h = vec![vec![0u64; size]; size];
    for p in 0..size {
        for q in 0..size {
            let orbit = [
                (p, q),
                (q, p),
                (size - 1 - p, size - 1 - q),
                (size - 1 - q, size - 1 - p),
            ];
            if (p, q) != *orbit.iter().min().unwrap() {
                continue;
            }
            let value = if p == 0 && q == 0 {
                rng.gen_range(1..=3u64)
            } else {
                rng.gen_range(0..=3u64)
            };
            for (a, b) in orbit {
                h[a][b] = value;
            }
        }
    }
    HodgeData::new(dim, h).expect("orbit construction satisfies the table invariants")
}

/// Random valid reduced pair with ambient dimension at most `max_dim` and at
/// most `max_components` divisor components. The nonempty strata form a
/// downward-closed family, so monotonicity holds by construction.
pub fn random_reduced_pair<R: Rng>(rng: &mut R, max_dim: i32, max_components: usize) -> SncPair {
    let n = rng.gen_range(1..=max_dim);
    let r = rng.gen_range(0..=max_components);
    let ambient = random_hodge(rng, n);

    let mut nonempty: BTreeSet<StratumKey> = BTreeSet::new();
    for key in StratumKey::all_subsets(r, n as usize) {
        let facets_present = key.facets().iter().all(|f| nonempty.contains(f));
        if (key.len() == 1 || facets_present) && rng.gen_bool(0.7) {
            nonempty.insert(key);
        }
    }

    let strata: Vec<(StratumKey, HodgeData)> = nonempty
        .iter()
        .map(|key| (key.clone(), random_hodge(rng, n - key.len() as i32)))
        .collect();
    let mut z_strata: Vec<(StratumKey, HodgeData)> = Vec::new();
    for key in &nonempty {
        let z_dim = n - key.len() as i32 - 1;
        if z_dim >= 0 && rng.gen_bool(0.5) {
            z_strata.push((key.clone(), random_hodge(rng, z_dim)));
        }
    }

    let components = (0..r)
        .map(|i| DivisorComponent {
            label: format!("D{i}"),
            multiplicity: 1,
        })
        .collect();
    SncPair::from_parts(ambient, components, strata, z_strata, true)
}
