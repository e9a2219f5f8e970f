//! Based, signed Gauss diagrams on one or two circles.
//!
//! Endpoint slots are numbered from the base point of circle 0 in the
//! direction of orientation; circle 1 (if any) continues the numbering. The
//! base point sits on the arc entering slot 0.

mod code;
mod surgery;

use std::collections::{BTreeMap, BTreeSet};

pub use surgery::{ArcSite, KinkOrientation, Move, StrandDirection};

use crate::error::{Error, Result};
use crate::poly::{ChordId, Sign};
use crate::smoothing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Over,
    Under,
}

impl Role {
    pub fn flip(self) -> Role {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Endpoint {
    pub chord: ChordId,
    pub role: Role,
}

/// A chord, oriented from its over-slot to its under-slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Chord {
    pub over: usize,
    pub under: usize,
    pub sign: Sign,
}

impl Chord {
    pub fn slots(&self) -> (usize, usize) {
        (self.over, self.under)
    }
}

/// Which endpoint of each smoothed chord must be met first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Ascending,
    Descending,
}

impl Direction {
    fn first_role(self) -> Role {
        match self {
            Direction::Ascending => Role::Over,
            Direction::Descending => Role::Under,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussDiagram {
    circles: Vec<Vec<Endpoint>>,
    chords: BTreeMap<ChordId, Chord>,
}

/// A set of crossings of a diagram.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrossingSubset(BTreeSet<ChordId>);

impl CrossingSubset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_labels(labels: &[u32]) -> Self {
        labels.iter().filter_map(|&l| ChordId::new(l)).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = ChordId> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, c: ChordId) -> bool {
        self.0.contains(&c)
    }

    pub fn insert(&mut self, c: ChordId) -> bool {
        self.0.insert(c)
    }
}

impl FromIterator<ChordId> for CrossingSubset {
    fn from_iter<I: IntoIterator<Item = ChordId>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl GaussDiagram {
    /// The zero-crossing knot diagram.
    pub fn unknot() -> Self {
        Self { circles: vec![vec![]], chords: BTreeMap::new() }
    }

    /// Two circles with no chords.
    pub fn unlink() -> Self {
        Self { circles: vec![vec![], vec![]], chords: BTreeMap::new() }
    }

    /// Builds a diagram from per-circle endpoint sequences and chord signs.
    /// Every chord must occur exactly once as over and once as under.
    pub fn from_parts(circles: Vec<Vec<Endpoint>>, signs: &BTreeMap<ChordId, Sign>) -> Result<Self> {
        if circles.is_empty() || circles.len() > 2 {
            return Err(Error::TooManyCircles(circles.len()));
        }
        let mut over: BTreeMap<ChordId, usize> = BTreeMap::new();
        let mut under: BTreeMap<ChordId, usize> = BTreeMap::new();
        for (slot, e) in circles.iter().flatten().enumerate() {
            let seen = match e.role {
                Role::Over => over.insert(e.chord, slot),
                Role::Under => under.insert(e.chord, slot),
            };
            if seen.is_some() {
                return Err(Error::DuplicateRole(e.chord));
            }
        }
        let mut chords = BTreeMap::new();
        for id in over.keys().chain(under.keys()) {
            let (Some(&o), Some(&u)) = (over.get(id), under.get(id)) else {
                return Err(Error::DanglingChord(*id));
            };
            let sign = *signs.get(id).ok_or(Error::UnknownChord(*id))?;
            chords.insert(*id, Chord { over: o, under: u, sign });
        }
        Ok(Self { circles, chords })
    }

    /// Sign of every chord, by label.
    pub fn signs(&self) -> BTreeMap<ChordId, Sign> {
        self.chords.iter().map(|(&id, c)| (id, c.sign)).collect()
    }

    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    pub fn is_knot(&self) -> bool {
        self.circles.len() == 1
    }

    pub fn circles(&self) -> &[Vec<Endpoint>] {
        &self.circles
    }

    pub fn circle_lens(&self) -> Vec<usize> {
        self.circles.iter().map(Vec::len).collect()
    }

    pub fn chord_count(&self) -> usize {
        self.chords.len()
    }

    pub fn slot_count(&self) -> usize {
        self.circles.iter().map(Vec::len).sum()
    }

    pub fn chord(&self, id: ChordId) -> Result<&Chord> {
        self.chords.get(&id).ok_or(Error::UnknownChord(id))
    }

    pub fn chords(&self) -> impl Iterator<Item = (ChordId, &Chord)> + '_ {
        self.chords.iter().map(|(&id, c)| (id, c))
    }

    pub fn chord_ids(&self) -> Vec<ChordId> {
        self.chords.keys().copied().collect()
    }

    /// The endpoint occupying a global slot.
    pub fn endpoint(&self, slot: usize) -> Endpoint {
        let (c, i) = self.locate(slot);
        self.circles[c][i]
    }

    /// Circle index and position within that circle of a global slot.
    pub fn locate(&self, slot: usize) -> (usize, usize) {
        let len0 = self.circles[0].len();
        if slot < len0 {
            (0, slot)
        } else {
            (1, slot - len0)
        }
    }

    pub fn circle_of(&self, slot: usize) -> usize {
        self.locate(slot).0
    }

    /// Whether a chord joins the two circles.
    pub fn is_inter_circle(&self, id: ChordId) -> Result<bool> {
        let c = self.chord(id)?;
        Ok(self.circle_of(c.over) != self.circle_of(c.under))
    }

    /// Smallest label not used by any chord.
    pub fn next_label(&self) -> ChordId {
        let max = self.chords.keys().next_back().map_or(0, |c| c.get());
        ChordId::new(max + 1).expect("label overflow")
    }

    fn subset_slots(&self, s: &CrossingSubset) -> Result<Vec<(usize, usize)>> {
        s.iter().map(|id| self.chord(id).map(Chord::slots)).collect()
    }

    /// Number of components after oriented smoothing of every chord in `s`.
    pub fn smooth_count_components(&self, s: &CrossingSubset) -> Result<usize> {
        let pairs = self.subset_slots(s)?;
        Ok(SubsetEvaluator::new(self).components(&pairs))
    }

    /// Slots in the order met when travelling the smoothed curve from the
    /// base point. Fails unless the smoothing leaves a single component.
    pub fn smoothed_traversal(&self, s: &CrossingSubset) -> Result<Vec<usize>> {
        let pairs = self.subset_slots(s)?;
        SubsetEvaluator::new(self).traversal(&pairs)
    }

    /// Whether `s` is one-component and every chord of `s` is first met at
    /// its over-slot (ascending) or under-slot (descending).
    pub fn classify_subset(&self, s: &CrossingSubset, direction: Direction) -> Result<bool> {
        let pairs = self.subset_slots(s)?;
        Ok(SubsetEvaluator::new(self).classify(&pairs, direction))
    }

    /// True if every chord's over-slot precedes its under-slot from the base
    /// point (one circle), i.e. the diagram is descending.
    pub fn is_descending(&self) -> bool {
        self.is_knot() && self.chords.values().all(|c| c.over < c.under)
    }

    /// Rebuilds with chord labels mapped through `map`; labels not in the
    /// map are kept. The map must be injective on the diagram's labels.
    pub fn relabeled(&self, map: &BTreeMap<ChordId, ChordId>) -> Result<Self> {
        let f = |c: ChordId| map.get(&c).copied().unwrap_or(c);
        let circles = self
            .circles
            .iter()
            .map(|circ| circ.iter().map(|e| Endpoint { chord: f(e.chord), role: e.role }).collect())
            .collect();
        let signs = self.chords.iter().map(|(&id, c)| (f(id), c.sign)).collect();
        Self::from_parts(circles, &signs)
    }

    /// Reverses every arrow (exchanges over and under at each crossing),
    /// keeping signs.
    pub fn reverse_arrows(&self) -> Self {
        let circles = self
            .circles
            .iter()
            .map(|circ| circ.iter().map(|e| Endpoint { chord: e.chord, role: e.role.flip() }).collect())
            .collect();
        Self::from_parts(circles, &self.signs()).expect("reversal preserves validity")
    }

    /// Mirror image: every arrow reversed and every sign negated.
    pub fn mirror(&self) -> Self {
        let rev = self.reverse_arrows();
        let signs = rev.chords.iter().map(|(&id, c)| (id, -c.sign)).collect();
        Self::from_parts(rev.circles, &signs).expect("mirror preserves validity")
    }
}

/// Scratch buffers for evaluating many subsets of one diagram.
pub(crate) struct SubsetEvaluator<'a> {
    diagram: &'a GaussDiagram,
    base_succ: Vec<usize>,
    succ: Vec<usize>,
    seen: Vec<bool>,
    empty: usize,
}

impl<'a> SubsetEvaluator<'a> {
    pub(crate) fn new(diagram: &'a GaussDiagram) -> Self {
        let lens = diagram.circle_lens();
        let base_succ = smoothing::successor(&lens);
        Self {
            diagram,
            succ: base_succ.clone(),
            base_succ,
            seen: Vec::new(),
            empty: smoothing::empty_circles(&lens),
        }
    }

    fn smooth(&mut self, pairs: &[(usize, usize)]) {
        self.succ.copy_from_slice(&self.base_succ);
        for &(a, b) in pairs {
            self.succ.swap(a, b);
        }
    }

    pub(crate) fn components(&mut self, pairs: &[(usize, usize)]) -> usize {
        self.smooth(pairs);
        smoothing::cycle_count(&self.succ, &mut self.seen) + self.empty
    }

    pub(crate) fn traversal(&mut self, pairs: &[(usize, usize)]) -> Result<Vec<usize>> {
        let k = self.components(pairs);
        if k != 1 {
            return Err(Error::NotOneComponent(k));
        }
        if self.succ.is_empty() {
            return Ok(vec![]);
        }
        Ok(smoothing::walk_from(&self.succ, 0))
    }

    pub(crate) fn classify(&mut self, pairs: &[(usize, usize)], direction: Direction) -> bool {
        if self.components(pairs) != 1 {
            return false;
        }
        if pairs.is_empty() {
            return true;
        }
        // Walk the single cycle from slot 0; a chord is met first at whichever
        // endpoint the walk reaches first.
        let want = direction.first_role();
        let d = self.diagram;
        let mut pending = pairs.len();
        self.seen.clear();
        self.seen.resize(self.succ.len(), false);
        for &(a, b) in pairs {
            self.seen[a] = true;
            self.seen[b] = true;
        }
        let mut s = 0;
        loop {
            if self.seen[s] {
                if d.endpoint(s).role != want {
                    return false;
                }
                let c = d.chords[&d.endpoint(s).chord];
                self.seen[c.over] = false;
                self.seen[c.under] = false;
                pending -= 1;
                if pending == 0 {
                    return true;
                }
            }
            s = self.succ[s];
        }
    }
}
