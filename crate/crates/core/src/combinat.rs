//! Chord and arrow diagrams, and the Conway combinations: the sums of all
//! based one-component ascending arrow diagrams with a given number of
//! arrows (one circle for an even count, two circles for an odd count).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::smoothing;

/// Based chord diagram on one or two circles. Slots are numbered globally as
/// for Gauss diagrams; `partner[s]` is the other endpoint of the chord at `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordDiagram {
    circle_lens: Vec<usize>,
    partner: Vec<usize>,
}

impl ChordDiagram {
    pub fn new(circle_lens: Vec<usize>, chords: &[(usize, usize)]) -> Result<Self> {
        if circle_lens.is_empty() || circle_lens.len() > 2 {
            return Err(Error::TooManyCircles(circle_lens.len()));
        }
        let n: usize = circle_lens.iter().sum();
        let mut partner = vec![usize::MAX; n];
        for &(a, b) in chords {
            if a >= n || b >= n || a == b || partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(Error::MalformedArrowDiagram(format!("bad chord ({a}, {b})")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if partner.contains(&usize::MAX) {
            return Err(Error::MalformedArrowDiagram("unpaired slot".into()));
        }
        Ok(Self { circle_lens, partner })
    }

    pub fn chords(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len()).filter(|&s| s < self.partner[s]).map(|s| (s, self.partner[s])).collect()
    }

    fn smoothed_successor(&self) -> Vec<usize> {
        let mut succ = smoothing::successor(&self.circle_lens);
        for (a, b) in self.chords() {
            succ.swap(a, b);
        }
        succ
    }

    /// Number of components after doubling every chord. Doubling a chord
    /// is the same as smoothing it.
    pub fn doubled_component_count(&self) -> usize {
        smoothing::cycle_count(&self.smoothed_successor(), &mut Vec::new())
            + smoothing::empty_circles(&self.circle_lens)
    }

    /// Orients each chord along the first passage of its doubled copies,
    /// travelling from the base point: the tail is the endpoint met first.
    pub fn to_ascending_arrow_diagram(&self) -> Result<ArrowDiagram> {
        let k = self.doubled_component_count();
        if k != 1 {
            return Err(Error::NotOneComponent(k));
        }
        let n = self.partner.len();
        let mut is_tail = vec![false; n];
        if n > 0 {
            let mut met = vec![false; n];
            for s in smoothing::walk_from(&self.smoothed_successor(), 0) {
                if !met[self.partner[s]] {
                    is_tail[s] = true;
                }
                met[s] = true;
            }
        }
        let arrows: Vec<(usize, usize)> = self
            .chords()
            .into_iter()
            .map(|(a, b)| if is_tail[a] { (a, b) } else { (b, a) })
            .collect();
        ArrowDiagram::new(self.circle_lens.clone(), &arrows)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    Tail,
    Head,
}

/// One endpoint of an arrow diagram: which arrow, and which end of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ArrowEnd {
    pub arrow: usize,
    pub end: End,
}

/// Based arrow diagram: oriented, unsigned chords on one or two circles.
/// Circle 0 carries the base point; circle 1 has none.
#[derive(Clone, Debug)]
pub struct ArrowDiagram {
    circles: Vec<Vec<ArrowEnd>>,
    arrows: Vec<(usize, usize)>,
}

impl ArrowDiagram {
    /// `arrows` are (tail, head) pairs of global slots.
    pub fn new(circle_lens: Vec<usize>, arrows: &[(usize, usize)]) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = arrows.to_vec();
        ChordDiagram::new(circle_lens.clone(), &pairs)?;
        let n: usize = circle_lens.iter().sum();
        let mut flat = vec![ArrowEnd { arrow: 0, end: End::Tail }; n];
        for (k, &(t, h)) in arrows.iter().enumerate() {
            flat[t] = ArrowEnd { arrow: k, end: End::Tail };
            flat[h] = ArrowEnd { arrow: k, end: End::Head };
        }
        let mut circles = Vec::new();
        let mut offset = 0;
        for len in circle_lens {
            circles.push(flat[offset..offset + len].to_vec());
            offset += len;
        }
        Ok(Self { circles, arrows: arrows.to_vec() })
    }

    pub fn empty() -> Self {
        Self { circles: vec![vec![]], arrows: vec![] }
    }

    pub fn circles(&self) -> &[Vec<ArrowEnd>] {
        &self.circles
    }

    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    /// (tail, head) global slots per arrow.
    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn circle_lens(&self) -> Vec<usize> {
        self.circles.iter().map(Vec::len).collect()
    }

    pub fn underlying_chord_diagram(&self) -> ChordDiagram {
        ChordDiagram::new(self.circle_lens(), &self.arrows).expect("arrow diagram is a valid chord diagram")
    }

    /// Deterministic encoding, equal for equal diagrams: `T<k>`/`H<k>` tokens
    /// per circle with arrows numbered in order of first appearance, circles
    /// joined by ` | `. The unbased circle is read from the rotation giving
    /// the lexicographically smallest encoding.
    pub fn canonical_key(&self) -> String {
        self.rotation_keys().into_iter().min().expect("at least one rotation")
    }

    /// Encodings of every rotation of the unbased circle, rotation `r`
    /// starting the circle at its slot `r`. A single entry for one circle.
    pub fn rotation_keys(&self) -> Vec<String> {
        let encode = |c1: &[ArrowEnd]| {
            let mut numbers: BTreeMap<usize, usize> = BTreeMap::new();
            let mut render = |seq: &[ArrowEnd]| {
                seq.iter()
                    .map(|e| {
                        let next = numbers.len() + 1;
                        let k = *numbers.entry(e.arrow).or_insert(next);
                        let t = if e.end == End::Tail { 'T' } else { 'H' };
                        format!("{t}{k}")
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let first = render(&self.circles[0]);
            if self.circles.len() == 1 {
                return first;
            }
            let second = render(c1);
            if second.is_empty() {
                format!("{first} |")
            } else {
                format!("{first} | {second}")
            }
        };
        if self.circles.len() == 1 {
            return vec![encode(&[])];
        }
        let c1 = &self.circles[1];
        (0..c1.len().max(1))
            .map(|r| {
                let mut rot = c1.clone();
                if !rot.is_empty() {
                    rot.rotate_left(r);
                }
                encode(&rot)
            })
            .collect()
    }
}

impl PartialEq for ArrowDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.canonical_key() == other.canonical_key()
    }
}

impl Eq for ArrowDiagram {}

impl fmt::Display for ArrowDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_key())
    }
}

impl FromStr for ArrowDiagram {
    type Err = Error;

    /// Parses the `T<k>`/`H<k>` token format (any numbering, any rotation).
    fn from_str(text: &str) -> Result<Self> {
        let bad = |m: String| Error::MalformedArrowDiagram(m);
        let parts: Vec<&str> = text.split('|').collect();
        if parts.len() > 2 {
            return Err(Error::TooManyCircles(parts.len()));
        }
        let mut lens = Vec::new();
        let mut tails: BTreeMap<u32, usize> = BTreeMap::new();
        let mut heads: BTreeMap<u32, usize> = BTreeMap::new();
        let mut slot = 0;
        for part in parts {
            let mut len = 0;
            for tok in part.split_whitespace() {
                let (end, num) = tok.split_at(1);
                let k: u32 = num.parse().map_err(|_| bad(format!("token `{tok}`")))?;
                let map = match end {
                    "T" => &mut tails,
                    "H" => &mut heads,
                    _ => return Err(bad(format!("token `{tok}`"))),
                };
                if map.insert(k, slot).is_some() {
                    return Err(bad(format!("arrow {k} repeated")));
                }
                slot += 1;
                len += 1;
            }
            lens.push(len);
        }
        if tails.keys().ne(heads.keys()) {
            return Err(bad("every arrow needs one tail and one head".into()));
        }
        let arrows: Vec<(usize, usize)> = tails.iter().map(|(k, &t)| (t, heads[k])).collect();
        ArrowDiagram::new(lens, &arrows)
    }
}

/// Integer linear combination of arrow diagrams, keyed by canonical key.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Combination {
    terms: BTreeMap<String, (ArrowDiagram, i64)>,
}

impl Combination {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `multiplicity` copies of `a`; terms that cancel are dropped.
    pub fn add(&mut self, a: ArrowDiagram, multiplicity: i64) {
        let key = a.canonical_key();
        let entry = self.terms.entry(key.clone()).or_insert((a, 0));
        entry.1 += multiplicity;
        if entry.1 == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&str, &ArrowDiagram, i64)> + '_ {
        self.terms.iter().map(|(k, (a, m))| (k.as_str(), a, *m))
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> + '_ {
        self.terms.keys().map(String::as_str)
    }

    pub fn multiplicity(&self, key: &str) -> i64 {
        self.terms.get(key).map_or(0, |t| t.1)
    }
}

/// Calls `f` on every perfect matching of `0..n` (n even).
fn for_each_matching(free: &mut Vec<usize>, pairs: &mut Vec<(usize, usize)>, f: &mut impl FnMut(&[(usize, usize)])) {
    if free.is_empty() {
        f(pairs);
        return;
    }
    let a = free.remove(0);
    for i in 0..free.len() {
        let b = free.remove(i);
        pairs.push((a, b));
        for_each_matching(free, pairs, f);
        pairs.pop();
        free.insert(i, b);
    }
    free.insert(0, a);
}

fn ascending_keys(circle_lens: &[usize]) -> BTreeSet<String> {
    let n: usize = circle_lens.iter().sum();
    if n == 0 {
        return BTreeSet::new();
    }
    // Split on the partner of slot 0 so branches run in parallel.
    (1..n)
        .into_par_iter()
        .map(|b| {
            let mut keys = BTreeSet::new();
            let mut free: Vec<usize> = (1..n).filter(|&s| s != b).collect();
            let mut pairs = vec![(0, b)];
            let mut succ = Vec::new();
            let mut seen = Vec::new();
            let base = smoothing::successor(circle_lens);
            for_each_matching(&mut free, &mut pairs, &mut |m| {
                succ.clone_from(&base);
                for &(x, y) in m {
                    succ.swap(x, y);
                }
                if smoothing::cycle_count(&succ, &mut seen) != 1 {
                    return;
                }
                let cd = ChordDiagram::new(circle_lens.to_vec(), m).expect("perfect matching");
                let a = cd.to_ascending_arrow_diagram().expect("one component");
                keys.insert(a.canonical_key());
            });
            keys
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        })
}

/// All based one-component ascending arrow diagrams with `m` arrows, each
/// with multiplicity 1. Even `m` gives one-circle diagrams; odd `m` gives
/// two-circle diagrams, enumerated over every split of the slots.
pub fn generate_conway_combination(m: usize) -> Combination {
    let n = 2 * m;
    let splits: Vec<Vec<usize>> = if m.is_multiple_of(2) {
        vec![vec![n]]
    } else {
        (1..n).map(|a| vec![a, n - a]).collect()
    };
    let keys: BTreeSet<String> = splits.iter().flat_map(|lens| ascending_keys(lens)).collect();
    let mut c = Combination::new();
    for k in keys {
        c.add(k.parse().expect("generated keys parse"), 1);
    }
    c
}

/// Writes a combination as `m=<m> count=<N>` followed by one key per line.
pub fn write_combination(path: &Path, m: usize, c: &Combination) -> Result<()> {
    let io = |source| Error::Io { path: path.to_path_buf(), source };
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(io)?;
    }
    let mut text = format!("m={m} count={}\n", c.len());
    for k in c.keys() {
        text.push_str(k);
        text.push('\n');
    }
    fs::write(path, text).map_err(io)
}

/// Reads a file written by [`write_combination`], returning `m` and the
/// combination (every term with multiplicity 1).
pub fn read_combination(path: &Path) -> Result<(usize, Combination)> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    let perr = |line: usize, message: String| Error::ParseError { line, message };
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| perr(1, "missing header".into()))?;
    let field = |name: &str| {
        header
            .split_whitespace()
            .find_map(|f| f.strip_prefix(name))
            .and_then(|v| v.parse::<usize>().ok())
            .ok_or_else(|| perr(1, format!("bad header `{header}`")))
    };
    let m = field("m=")?;
    let count = field("count=")?;
    let mut c = Combination::new();
    for (i, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let a: ArrowDiagram = line.parse().map_err(|e| perr(i + 2, format!("{e}")))?;
        if a.arrow_count() != m {
            return Err(perr(i + 2, format!("expected {m} arrows")));
        }
        c.add(a, 1);
    }
    if c.len() != count {
        return Err(perr(1, format!("header says {count} diagrams, found {}", c.len())));
    }
    Ok((m, c))
}
