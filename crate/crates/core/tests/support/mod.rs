//! Shared helpers for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use pv_conway::fixture::{load_fixture_table, KnotFixture};
use pv_conway::gauss::{Endpoint, GaussDiagram, Role};
use pv_conway::{ChordId, Sign};
use rand::prelude::*;

pub fn fixtures() -> Vec<KnotFixture> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/knots.tsv");
    load_fixture_table(&path).expect("bundled fixture table loads")
}

pub fn diagram(code: &str) -> GaussDiagram {
    code.parse().unwrap_or_else(|e| panic!("bad code {code:?}: {e}"))
}

/// Gauss diagram of the closure of a braid word. Generator `i` crosses
/// strand `i` over strand `i+1` (1-based) positively; `-i` is the negative
/// crossing, with strand `i+1` on top. Returns `None` when the closure has
/// more than two components.
pub fn braid_closure(strands: usize, word: &[i32]) -> Option<GaussDiagram> {
    // where each crossing touches: (position before, over?) per strand
    let mut perm: Vec<usize> = (0..strands).collect();
    let mut pos: Vec<usize> = (0..strands).collect();
    for &g in word {
        let i = g.unsigned_abs() as usize - 1;
        assert!(g != 0 && i + 1 < strands, "generator {g} out of range");
        pos.swap(i, i + 1);
    }
    // pos[p] is the start strand now at position p; perm maps start -> end
    for (p, &s) in pos.iter().enumerate() {
        perm[s] = p;
    }
    let mut seen = vec![false; strands];
    let mut circles = Vec::new();
    for start in 0..strands {
        if seen[start] {
            continue;
        }
        let mut circle = Vec::new();
        let mut p = start;
        loop {
            seen[p] = true;
            let mut q = p;
            for (k, &g) in word.iter().enumerate() {
                let i = g.unsigned_abs() as usize - 1;
                let id = ChordId::new(k as u32 + 1).unwrap();
                if q == i || q == i + 1 {
                    let on_left = q == i;
                    let over = on_left == (g > 0);
                    circle.push(Endpoint { chord: id, role: if over { Role::Over } else { Role::Under } });
                    q = if on_left { i + 1 } else { i };
                }
            }
            p = perm[p];
            debug_assert_eq!(p, q);
            if p == start {
                break;
            }
        }
        circles.push(circle);
    }
    if circles.len() > 2 {
        return None;
    }
    let signs: BTreeMap<ChordId, Sign> = word
        .iter()
        .enumerate()
        .map(|(k, &g)| (ChordId::new(k as u32 + 1).unwrap(), if g > 0 { Sign::Plus } else { Sign::Minus }))
        .collect();
    Some(GaussDiagram::from_parts(circles, &signs).expect("closure is a valid diagram"))
}

/// A random braid closure with `components` (1 or 2) components and at most
/// `max_crossings` crossings, on 2 to 4 strands.
pub fn random_closure<R: Rng + ?Sized>(rng: &mut R, components: usize, max_crossings: usize) -> GaussDiagram {
    loop {
        let strands = rng.random_range(2..=4usize);
        let len = rng.random_range(1..=max_crossings);
        let word: Vec<i32> = (0..len)
            .map(|_| {
                let g = rng.random_range(1..strands as i32);
                if rng.random_bool(0.5) { g } else { -g }
            })
            .collect();
        if let Some(d) = braid_closure(strands, &word) {
            if d.circle_count() == components {
                return d;
            }
        }
    }
}

/// All perfect matchings of `0..2n`, each pair listed smaller slot first.
pub fn matchings(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(free: &[usize], cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some((&a, rest)) = free.split_first() else {
            out.push(cur.clone());
            return;
        };
        for (i, &b) in rest.iter().enumerate() {
            let left: Vec<usize> = rest.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
            cur.push((a, b));
            rec(&left, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&(0..2 * n).collect::<Vec<_>>(), &mut Vec::new(), &mut out);
    out
}

/// Every one-circle diagram with `n` chords: each matching, each choice of
/// arrow orientations, each choice of signs.
pub fn all_knot_diagrams(n: usize) -> Vec<GaussDiagram> {
    let mut out = Vec::new();
    for m in matchings(n) {
        for mask in 0..(1u32 << (2 * n)) {
            let mut seq = vec![None; 2 * n];
            let mut signs = BTreeMap::new();
            for (k, &(a, b)) in m.iter().enumerate() {
                let id = ChordId::new(k as u32 + 1).unwrap();
                let (o, u) = if mask >> k & 1 == 1 { (b, a) } else { (a, b) };
                seq[o] = Some(Endpoint { chord: id, role: Role::Over });
                seq[u] = Some(Endpoint { chord: id, role: Role::Under });
                let sign = if mask >> (n + k) & 1 == 1 { Sign::Minus } else { Sign::Plus };
                signs.insert(id, sign);
            }
            let seq = seq.into_iter().map(Option::unwrap).collect();
            out.push(GaussDiagram::from_parts(vec![seq], &signs).unwrap());
        }
    }
    out
}

/// A random descending knot diagram: every chord is met first at its
/// over-slot.
pub fn random_descending<R: Rng + ?Sized>(rng: &mut R, chords: usize) -> GaussDiagram {
    let g = pv_conway::random::random_diagram(rng, chords, false);
    let circle = &g.circles()[0];
    let mut met = std::collections::BTreeSet::new();
    let seq = circle
        .iter()
        .map(|e| {
            let role = if met.insert(e.chord) { Role::Over } else { Role::Under };
            Endpoint { chord: e.chord, role }
        })
        .collect();
    GaussDiagram::from_parts(vec![seq], &g.signs()).unwrap()
}

/// Sum of signs of inter-circle arrows (over to under) whose head is on
/// circle `head_circle`.
pub fn inter_circle_sign_sum(g: &GaussDiagram, head_circle: usize) -> i64 {
    g.chords()
        .filter(|(_, c)| g.circle_of(c.under) == head_circle && g.circle_of(c.over) != head_circle)
        .map(|(_, c)| c.sign.value())
        .sum()
}
