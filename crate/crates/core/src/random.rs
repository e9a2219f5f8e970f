//! Random Gauss diagrams. Most of them are not realizable by planar knot
//! diagrams, which is fine: every evaluator here accepts virtual input.

use std::collections::BTreeMap;

use rand::prelude::*;

use crate::gauss::{Endpoint, GaussDiagram, Role};
use crate::poly::{ChordId, Sign};

/// A diagram with `chords` chords placed by a uniform random perfect matching
/// of the endpoint slots, with random orientations and signs. With
/// `two_circles` the slots are split between two circles at a uniform cut.
pub fn random_diagram<R: Rng + ?Sized>(rng: &mut R, chords: usize, two_circles: bool) -> GaussDiagram {
    let n = 2 * chords;
    let mut slots: Vec<usize> = (0..n).collect();
    slots.shuffle(rng);
    let mut ends = vec![None; n];
    let mut signs = BTreeMap::new();
    for (k, pair) in slots.chunks(2).enumerate() {
        let id = ChordId::new(k as u32 + 1).unwrap();
        let (o, u) = if rng.random_bool(0.5) { (pair[0], pair[1]) } else { (pair[1], pair[0]) };
        ends[o] = Some(Endpoint { chord: id, role: Role::Over });
        ends[u] = Some(Endpoint { chord: id, role: Role::Under });
        signs.insert(id, if rng.random_bool(0.5) { Sign::Plus } else { Sign::Minus });
    }
    let seq: Vec<Endpoint> = ends.into_iter().map(Option::unwrap).collect();
    let circles = if two_circles {
        let cut = rng.random_range(0..=n);
        vec![seq[..cut].to_vec(), seq[cut..].to_vec()]
    } else {
        vec![seq]
    };
    GaussDiagram::from_parts(circles, &signs).expect("random matching is a valid diagram")
}

pub fn seeded_diagram(chords: usize, two_circles: bool, seed: u64) -> GaussDiagram {
    random_diagram(&mut StdRng::seed_from_u64(seed), chords, two_circles)
}
