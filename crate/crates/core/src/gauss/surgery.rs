//! Operations producing new diagrams: crossing switches and smoothings,
//! base-point moves and Reidemeister I/II insertions and deletions.

use super::{Endpoint, GaussDiagram, Role};
use crate::error::{Error, Result};
use crate::poly::{ChordId, Sign};
use crate::smoothing;

/// The gap on `circle` just before its slot `position`. `position` may equal
/// the circle's length, meaning the gap after its last slot; on circle 0 that
/// gap and position 0 lie on opposite sides of the base point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArcSite {
    pub circle: usize,
    pub position: usize,
}

impl ArcSite {
    pub fn new(circle: usize, position: usize) -> Self {
        Self { circle, position }
    }
}

/// Which endpoint of an R-I kink comes first along the strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KinkOrientation {
    OverFirst,
    UnderFirst,
}

/// Relative direction of the two strands of an R-II bigon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrandDirection {
    Parallel,
    Antiparallel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    /// Adds an isolated chord whose endpoints are adjacent at `site`.
    R1Insert { site: ArcSite, sign: Sign, orientation: KinkOrientation },
    /// Removes a chord whose endpoints are adjacent.
    R1Delete { chord: ChordId },
    /// Adds chords `x` (sign `sign`) and `y` (sign `-sign`): over-slots
    /// `Ox Oy` at `over_site`, under-slots `Ux Uy` (parallel) or `Uy Ux`
    /// (antiparallel) at `under_site`. The sites must be different arcs.
    R2Insert { over_site: ArcSite, under_site: ArcSite, sign: Sign, strands: StrandDirection },
    /// Removes two oppositely signed chords whose over-slots are adjacent
    /// and whose under-slots are adjacent.
    R2Delete { first: ChordId, second: ChordId },
}

impl GaussDiagram {
    /// Exchanges over and under at crossing `c` and negates its sign.
    pub fn switch_crossing(&self, c: ChordId) -> Result<GaussDiagram> {
        self.chord(c)?;
        let circles = self
            .circles
            .iter()
            .map(|circ| {
                circ.iter()
                    .map(|e| if e.chord == c { Endpoint { chord: c, role: e.role.flip() } } else { *e })
                    .collect()
            })
            .collect();
        let mut signs = self.signs();
        signs.insert(c, -signs[&c]);
        GaussDiagram::from_parts(circles, &signs)
    }

    /// Oriented smoothing of crossing `c`: the chord disappears and the
    /// circles are reconnected. A knot becomes a 2-circle diagram; an
    /// inter-circle chord merges two circles into one. The base point stays
    /// where it was, and the circle carrying it stays circle 0.
    pub fn smooth_crossing(&self, c: ChordId) -> Result<GaussDiagram> {
        let chord = *self.chord(c)?;
        let (a, b) = chord.slots();
        let lens = self.circle_lens();
        let mut succ = smoothing::successor(&lens);
        succ.swap(a, b);

        let n = succ.len();
        let mut seen = vec![false; n];
        let mut circles: Vec<Vec<Endpoint>> = Vec::new();
        let collect_cycle = |start: usize, seen: &mut Vec<bool>| {
            let cycle = smoothing::walk_from(&succ, start);
            for &s in &cycle {
                seen[s] = true;
            }
            cycle.into_iter().filter(|&s| s != a && s != b).map(|s| self.endpoint(s)).collect::<Vec<_>>()
        };
        if lens[0] == 0 {
            circles.push(vec![]);
        } else {
            circles.push(collect_cycle(0, &mut seen));
        }
        for s in 0..n {
            if !seen[s] {
                circles.push(collect_cycle(s, &mut seen));
            }
        }
        circles.extend(lens.iter().skip(1).filter(|&&l| l == 0).map(|_| vec![]));
        if circles.len() > 2 {
            return Err(Error::TooManyCircles(circles.len()));
        }
        let mut signs = self.signs();
        signs.remove(&c);
        GaussDiagram::from_parts(circles, &signs)
    }

    /// Moves the base point forward past `steps` endpoints.
    pub fn move_base_point(&self, steps: usize) -> Result<GaussDiagram> {
        if !self.is_knot() {
            return Err(Error::BasePointOnLink);
        }
        let len = self.circles[0].len();
        let mut seq = self.circles[0].clone();
        if len > 0 {
            seq.rotate_left(steps % len);
        }
        GaussDiagram::from_parts(vec![seq], &self.signs())
    }

    pub fn apply_move(&self, mv: Move) -> Result<GaussDiagram> {
        match mv {
            Move::R1Insert { site, sign, orientation } => self.r1_insert(site, sign, orientation),
            Move::R1Delete { chord } => self.r1_delete(chord),
            Move::R2Insert { over_site, under_site, sign, strands } => {
                self.r2_insert(over_site, under_site, sign, strands)
            }
            Move::R2Delete { first, second } => self.r2_delete(first, second),
        }
    }

    fn check_site(&self, site: ArcSite) -> Result<()> {
        match self.circles.get(site.circle) {
            Some(c) if site.position <= c.len() => Ok(()),
            _ => Err(Error::InvalidSite(format!("{site:?}"))),
        }
    }

    fn r1_insert(&self, site: ArcSite, sign: Sign, orientation: KinkOrientation) -> Result<GaussDiagram> {
        self.check_site(site)?;
        let id = self.next_label();
        let (first, second) = match orientation {
            KinkOrientation::OverFirst => (Role::Over, Role::Under),
            KinkOrientation::UnderFirst => (Role::Under, Role::Over),
        };
        let mut circles = self.circles.clone();
        let circ = &mut circles[site.circle];
        circ.insert(site.position, Endpoint { chord: id, role: second });
        circ.insert(site.position, Endpoint { chord: id, role: first });
        let mut signs = self.signs();
        signs.insert(id, sign);
        GaussDiagram::from_parts(circles, &signs)
    }

    fn r1_delete(&self, c: ChordId) -> Result<GaussDiagram> {
        let chord = self.chord(c)?;
        let (ca, pa) = self.locate(chord.over);
        let (cb, pb) = self.locate(chord.under);
        if ca != cb || pa.abs_diff(pb) != 1 {
            return Err(Error::NoSuchConfiguration(format!("chord {c} is not an isolated kink")));
        }
        Ok(self.without(&[c]))
    }

    fn r2_insert(
        &self,
        over_site: ArcSite,
        under_site: ArcSite,
        sign: Sign,
        strands: StrandDirection,
    ) -> Result<GaussDiagram> {
        self.check_site(over_site)?;
        self.check_site(under_site)?;
        if over_site == under_site {
            return Err(Error::InvalidSite("R-II needs two different arcs".into()));
        }
        let x = self.next_label();
        let y = ChordId::new(x.get() + 1).expect("label overflow");
        let over = [Endpoint { chord: x, role: Role::Over }, Endpoint { chord: y, role: Role::Over }];
        let under = match strands {
            StrandDirection::Parallel => {
                [Endpoint { chord: x, role: Role::Under }, Endpoint { chord: y, role: Role::Under }]
            }
            StrandDirection::Antiparallel => {
                [Endpoint { chord: y, role: Role::Under }, Endpoint { chord: x, role: Role::Under }]
            }
        };
        // Insert at the later site first so the earlier position stays valid.
        let mut inserts = [(over_site, over), (under_site, under)];
        inserts.sort_by_key(|(s, _)| std::cmp::Reverse((s.circle, s.position)));
        let mut circles = self.circles.clone();
        for (site, pair) in inserts {
            let circ = &mut circles[site.circle];
            circ.splice(site.position..site.position, pair);
        }
        let mut signs = self.signs();
        signs.insert(x, sign);
        signs.insert(y, -sign);
        GaussDiagram::from_parts(circles, &signs)
    }

    fn r2_delete(&self, first: ChordId, second: ChordId) -> Result<GaussDiagram> {
        let a = *self.chord(first)?;
        let b = *self.chord(second)?;
        let adjacent = |s: usize, t: usize| {
            let (cs, ps) = self.locate(s);
            let (ct, pt) = self.locate(t);
            cs == ct && ps.abs_diff(pt) == 1
        };
        if first == second || a.sign == b.sign || !adjacent(a.over, b.over) || !adjacent(a.under, b.under) {
            return Err(Error::NoSuchConfiguration(format!(
                "chords {first} and {second} do not form an R-II bigon"
            )));
        }
        Ok(self.without(&[first, second]))
    }

    fn without(&self, remove: &[ChordId]) -> GaussDiagram {
        let circles = self
            .circles
            .iter()
            .map(|circ| circ.iter().filter(|e| !remove.contains(&e.chord)).copied().collect())
            .collect();
        let mut signs = self.signs();
        for c in remove {
            signs.remove(c);
        }
        GaussDiagram::from_parts(circles, &signs).expect("removing whole chords keeps validity")
    }
}
