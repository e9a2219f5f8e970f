//! Conway polynomial by the skein relation
//! `∇(K+) - ∇(K-) = z ∇(K0)`, `∇(unknot) = 1`, unknotting a knot diagram by
//! making it descending and splitting a link by pushing the based component
//! underneath.

use crate::error::Result;
use crate::gauss::GaussDiagram;
use crate::poly::{ChordId, IntPolynomial, Sign};

/// Chords that keep the diagram from being a base case: for a knot, chords
/// met first at their under-slot; for a link, inter-circle chords whose
/// over-slot is on the based circle. In slot order.
pub fn violating_chords(g: &GaussDiagram) -> Vec<ChordId> {
    let mut out: Vec<(usize, ChordId)> = if g.is_knot() {
        g.chords().filter(|(_, c)| c.under < c.over).map(|(id, c)| (c.under, id)).collect()
    } else {
        g.chords()
            .filter(|(_, c)| g.circle_of(c.over) == 0 && g.circle_of(c.under) == 1)
            .map(|(id, c)| (c.over, id))
            .collect()
    };
    out.sort();
    out.into_iter().map(|(_, id)| id).collect()
}

pub fn first_violating_chord(g: &GaussDiagram) -> Option<ChordId> {
    violating_chords(g).first().copied()
}

/// Recursion statistics. `max_depth` counts the root call as depth 1.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SkeinStats {
    pub calls: usize,
    pub max_depth: usize,
}

pub fn conway_skein(g: &GaussDiagram) -> Result<IntPolynomial> {
    conway_skein_with(g, &mut |_| 0).map(|(p, _)| p)
}

/// Skein recursion with a caller-chosen violating chord at every step:
/// `choose` receives the violating chords in slot order and returns an index.
pub fn conway_skein_with(
    g: &GaussDiagram,
    choose: &mut dyn FnMut(&[ChordId]) -> usize,
) -> Result<(IntPolynomial, SkeinStats)> {
    let mut stats = SkeinStats::default();
    let p = recurse(g, choose, 1, &mut stats)?;
    Ok((p, stats))
}

fn recurse(
    g: &GaussDiagram,
    choose: &mut dyn FnMut(&[ChordId]) -> usize,
    depth: usize,
    stats: &mut SkeinStats,
) -> Result<IntPolynomial> {
    stats.calls += 1;
    stats.max_depth = stats.max_depth.max(depth);
    let candidates = violating_chords(g);
    if candidates.is_empty() {
        return Ok(if g.is_knot() { IntPolynomial::one() } else { IntPolynomial::zero() });
    }
    let x = candidates[choose(&candidates) % candidates.len()];
    let sign = g.chord(x)?.sign;
    let switched = recurse(&g.switch_crossing(x)?, choose, depth + 1, stats)?;
    let smoothed = recurse(&g.smooth_crossing(x)?, choose, depth + 1, stats)?;
    let s = match sign {
        Sign::Plus => 1,
        Sign::Minus => -1,
    };
    Ok(switched.add(&smoothed.scale_shift(s, 1)))
}
