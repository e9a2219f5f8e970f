//! Pairing of arrow diagrams with Gauss diagrams: signed counts of
//! homomorphisms, i.e. embeddings of the arrow diagram's endpoints into the
//! Gauss diagram's endpoints that preserve cyclic order, base point, and
//! arrow orientation.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::combinat::{self, ArrowDiagram, Combination, End};
use crate::error::{Error, Result};
use crate::gauss::{GaussDiagram, Role};
use crate::poly::{ChordId, IntPolynomial};

/// One homomorphism, recorded as the chord each arrow is sent to (indexed
/// by arrow number of the arrow diagram).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomMatch {
    pub assignment: Vec<ChordId>,
}

impl HomMatch {
    /// Image chords, sorted.
    pub fn image(&self) -> Vec<ChordId> {
        let mut v = self.assignment.clone();
        v.sort();
        v
    }
}

#[derive(Clone, Copy)]
struct Token {
    arrow: usize,
    role: Role,
    circle: usize,
}

/// Slot data of a Gauss diagram in the layout the search needs.
struct Target<'a> {
    g: &'a GaussDiagram,
    offsets: [usize; 2],
    lens: [usize; 2],
    chord_index: Vec<usize>,
    slots_of: Vec<[usize; 2]>, // [over, under] per chord index
}

impl<'a> Target<'a> {
    fn new(g: &'a GaussDiagram) -> Self {
        let lens_v = g.circle_lens();
        let lens = [lens_v[0], lens_v.get(1).copied().unwrap_or(0)];
        let ids = g.chord_ids();
        let index: BTreeMap<ChordId, usize> = ids.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let chord_index = (0..g.slot_count()).map(|s| index[&g.endpoint(s).chord]).collect();
        let slots_of = g.chords().map(|(_, c)| [c.over, c.under]).collect();
        Self { g, offsets: [0, lens[0]], lens, chord_index, slots_of }
    }

    fn role(&self, slot: usize) -> Role {
        self.g.endpoint(slot).role
    }
}

struct Search<'t, 'a, F: FnMut(&[usize])> {
    target: &'t Target<'a>,
    tokens: Vec<Token>,
    /// Tokens remaining on each circle from position i onwards.
    remaining: Vec<[usize; 2]>,
    mapped: Vec<Option<usize>>,
    used: Vec<bool>,
    on_match: F,
}

impl<F: FnMut(&[usize])> Search<'_, '_, F> {
    fn run(&mut self, i: usize, last: [Option<usize>; 2]) {
        if i == self.tokens.len() {
            let m: Vec<usize> = self.mapped.iter().map(|x| x.expect("every arrow mapped")).collect();
            (self.on_match)(&m);
            return;
        }
        let tok = self.tokens[i];
        let t = self.target;
        let circ = tok.circle;
        let start = last[circ].map_or(0, |p| p + 1);
        let role_ix = if tok.role == Role::Over { 0 } else { 1 };
        if let Some(x) = self.mapped[tok.arrow] {
            let slot = t.slots_of[x][role_ix];
            let (c, pos) = t.g.locate(slot);
            if c == circ && pos >= start {
                let mut next = last;
                next[circ] = Some(pos);
                self.run(i + 1, next);
            }
            return;
        }
        let need_after = self.remaining[i][circ] - 1;
        let len = t.lens[circ];
        if len < need_after + 1 {
            return;
        }
        for pos in start..len - need_after {
            let slot = t.offsets[circ] + pos;
            if t.role(slot) != tok.role {
                continue;
            }
            let x = t.chord_index[slot];
            if self.used[x] {
                continue;
            }
            self.used[x] = true;
            self.mapped[tok.arrow] = Some(x);
            let mut next = last;
            next[circ] = Some(pos);
            self.run(i + 1, next);
            self.mapped[tok.arrow] = None;
            self.used[x] = false;
        }
    }
}

/// Drives `on_match` with the chord-index assignment of every homomorphism.
fn search(a: &ArrowDiagram, g: &GaussDiagram, mut on_match: impl FnMut(&[usize])) -> Result<()> {
    if a.circle_count() != g.circle_count() {
        return Err(Error::CircleCountMismatch { arrow: a.circle_count(), gauss: g.circle_count() });
    }
    if a.arrow_count() > g.chord_count() {
        return Ok(());
    }
    let target = Target::new(g);
    let to_tokens = |seq: &[combinat::ArrowEnd], circle: usize| -> Vec<Token> {
        seq.iter()
            .map(|e| Token {
                arrow: e.arrow,
                role: if e.end == End::Tail { Role::Over } else { Role::Under },
                circle,
            })
            .collect()
    };
    let circles = a.circles();
    let base = to_tokens(&circles[0], 0);
    // The unbased circle may be matched from any of its endpoints: rotation
    // r sends the r-th endpoint to the lowest matched slot of G's circle 1,
    // so distinct rotations give distinct endpoint maps.
    let rotations = if circles.len() == 2 { circles[1].len().max(1) } else { 1 };
    for r in 0..rotations {
        let mut tokens = base.clone();
        if circles.len() == 2 {
            let mut c1 = circles[1].clone();
            if !c1.is_empty() {
                c1.rotate_left(r);
            }
            tokens.extend(to_tokens(&c1, 1));
        }
        let mut remaining = vec![[0usize; 2]; tokens.len() + 1];
        for i in (0..tokens.len()).rev() {
            remaining[i] = remaining[i + 1];
            remaining[i][tokens[i].circle] += 1;
        }
        let mut s = Search {
            target: &target,
            tokens,
            remaining,
            mapped: vec![None; a.arrow_count()],
            used: vec![false; g.chord_count()],
            on_match: &mut on_match,
        };
        s.run(0, [None, None]);
    }
    Ok(())
}

pub fn enumerate_homomorphisms(a: &ArrowDiagram, g: &GaussDiagram) -> Result<Vec<HomMatch>> {
    let ids = g.chord_ids();
    let mut out = Vec::new();
    search(a, g, |m| out.push(HomMatch { assignment: m.iter().map(|&x| ids[x]).collect() }))?;
    out.sort();
    out.dedup();
    Ok(out)
}

fn pairing_i64(a: &ArrowDiagram, g: &GaussDiagram) -> Result<i64> {
    let signs: Vec<i64> = g.chords().map(|(_, c)| c.sign.value()).collect();
    let mut total = 0i64;
    search(a, g, |m| total += m.iter().map(|&x| signs[x]).product::<i64>())?;
    Ok(total)
}

/// `<A, G>`: the sum over homomorphisms of the product of image signs.
pub fn pairing_value(a: &ArrowDiagram, g: &GaussDiagram) -> Result<BigInt> {
    pairing_i64(a, g).map(BigInt::from)
}

/// Pairing extended linearly to a combination. Evaluated by whichever is
/// cheaper: matching each term separately, or reading off the sub-diagram
/// on every chord subset of the right size.
pub fn combination_pairing(c: &Combination, g: &GaussDiagram) -> Result<BigInt> {
    let Some(k) = uniform_arrow_count(c) else {
        return pairing_by_search(c, g);
    };
    if binomial(g.chord_count(), k) <= 4 * c.len() as u128 {
        pairing_by_subsets(c, g, k)
    } else {
        pairing_by_search(c, g)
    }
}

fn uniform_arrow_count(c: &Combination) -> Option<usize> {
    let mut counts = c.terms().map(|(_, a, _)| a.arrow_count());
    let k = counts.next()?;
    counts.all(|n| n == k).then_some(k)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn check_circles(c: &Combination, g: &GaussDiagram) -> Result<()> {
    match c.terms().find(|(_, a, _)| a.circle_count() != g.circle_count()) {
        Some((_, a, _)) => Err(Error::CircleCountMismatch { arrow: a.circle_count(), gauss: g.circle_count() }),
        None => Ok(()),
    }
}

/// Terms matched one at a time, in parallel.
pub(crate) fn pairing_by_search(c: &Combination, g: &GaussDiagram) -> Result<BigInt> {
    let terms: Vec<(&ArrowDiagram, i64)> = c.terms().map(|(_, a, m)| (a, m)).collect();
    let parts: Result<Vec<i64>> = terms.par_iter().map(|(a, m)| pairing_i64(a, g).map(|v| v * m)).collect();
    Ok(parts?.into_iter().map(BigInt::from).sum())
}

/// Every homomorphism of a `k`-arrow diagram onto chord set `S` is an
/// isomorphism with the sub-diagram on `S`; one exists per rotation of the
/// unbased circle under which that sub-diagram reads as the term's key.
pub(crate) fn pairing_by_subsets(c: &Combination, g: &GaussDiagram, k: usize) -> Result<BigInt> {
    check_circles(c, g)?;
    let n = g.chord_count();
    if k > n {
        return Ok(BigInt::from(0));
    }
    let chords: Vec<(usize, usize, i64)> = g.chords().map(|(_, ch)| (ch.over, ch.under, ch.sign.value())).collect();
    let lens = g.circle_lens();
    let eval = |subset: &[usize]| -> i64 {
        let mut keep = vec![None; g.slot_count()];
        for &i in subset {
            keep[chords[i].0] = Some(());
            keep[chords[i].1] = Some(());
        }
        let mut new_slot = vec![0; g.slot_count()];
        let mut next = 0;
        for (s, kept) in keep.iter().enumerate() {
            if kept.is_some() {
                new_slot[s] = next;
                next += 1;
            }
        }
        let sub_lens: Vec<usize> = {
            let mut start = 0;
            lens.iter()
                .map(|&len| {
                    let kept = keep[start..start + len].iter().filter(|x| x.is_some()).count();
                    start += len;
                    kept
                })
                .collect()
        };
        let arrows: Vec<(usize, usize)> = subset.iter().map(|&i| (new_slot[chords[i].0], new_slot[chords[i].1])).collect();
        let sub = ArrowDiagram::new(sub_lens, &arrows).expect("sub-diagram of a valid diagram");
        let homs: i64 = sub.rotation_keys().iter().map(|key| c.multiplicity(key)).sum();
        if homs == 0 {
            return 0;
        }
        homs * subset.iter().map(|&i| chords[i].2).product::<i64>()
    };
    if k == 0 {
        return Ok(BigInt::from(eval(&[])));
    }
    // Split the subsets by their smallest chord for parallelism.
    let total: i64 = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut subset = vec![first];
            let mut sum = 0;
            extend_subsets(&mut subset, n, k, &mut |s| sum += eval(s));
            sum
        })
        .sum();
    Ok(BigInt::from(total))
}

fn extend_subsets(subset: &mut Vec<usize>, n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    if subset.len() == k {
        f(subset);
        return;
    }
    let last = *subset.last().expect("nonempty");
    for next in last + 1..n {
        if n - next < k - subset.len() {
            break;
        }
        subset.push(next);
        extend_subsets(subset, n, k, f);
        subset.pop();
    }
}

/// Memoized Conway combinations, optionally backed by a directory of
/// cache files named `conway-<m>.txt`.
#[derive(Default)]
pub struct CombinationStore {
    cache_dir: Option<PathBuf>,
    generated: Mutex<BTreeMap<usize, Arc<Combination>>>,
}

impl CombinationStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cache_dir(dir: impl Into<PathBuf>) -> Self {
        Self { cache_dir: Some(dir.into()), generated: Mutex::default() }
    }

    /// A process-wide store without disk cache.
    pub fn global() -> &'static CombinationStore {
        static STORE: std::sync::OnceLock<CombinationStore> = std::sync::OnceLock::new();
        STORE.get_or_init(CombinationStore::new)
    }

    pub fn get(&self, m: usize) -> Result<Arc<Combination>> {
        if let Some(c) = self.generated.lock().expect("store lock").get(&m) {
            return Ok(c.clone());
        }
        let c = Arc::new(self.load_or_generate(m)?);
        self.generated.lock().expect("store lock").insert(m, c.clone());
        Ok(c)
    }

    fn load_or_generate(&self, m: usize) -> Result<Combination> {
        let Some(dir) = &self.cache_dir else {
            return Ok(combinat::generate_conway_combination(m));
        };
        let path = dir.join(format!("conway-{m}.txt"));
        if path.exists() {
            let (stored_m, c) = combinat::read_combination(&path)?;
            if stored_m == m {
                return Ok(c);
            }
        }
        let c = combinat::generate_conway_combination(m);
        combinat::write_combination(&path, m, &c)?;
        Ok(c)
    }
}

/// Coefficient of `z^k` in the Conway polynomial from the Conway combination
/// pairing. Parities that cannot occur (odd for knots, even for two-circle
/// diagrams) give 0, as does any `k` above the chord count.
pub fn conway_coefficient(g: &GaussDiagram, k: usize, store: &CombinationStore) -> Result<BigInt> {
    let knot = g.is_knot();
    if knot && k == 0 {
        return Ok(BigInt::from(1));
    }
    if k == 0 || (k % 2 == 1) == knot || k > g.chord_count() {
        return Ok(BigInt::from(0));
    }
    combination_pairing(&*store.get(k)?, g)
}

/// The Conway polynomial through degree `max_degree` from pairings.
pub fn pairing_polynomial(g: &GaussDiagram, max_degree: usize, store: &CombinationStore) -> Result<IntPolynomial> {
    let coeffs = (0..=max_degree).map(|k| conway_coefficient(g, k, store)).collect::<Result<Vec<_>>>()?;
    Ok(IntPolynomial::from_coeffs(coeffs))
}
