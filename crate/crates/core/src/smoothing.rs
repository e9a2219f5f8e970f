//! Successor permutations on endpoint slots.
//!
//! Slots of all circles share one global numbering: circle 0 occupies
//! `0..len0`, circle 1 follows. Oriented smoothing of a chord with endpoints
//! `a`, `b` swaps `succ[a]` and `succ[b]`; the components of the smoothed curve
//! are the cycles of the resulting permutation, plus one per circle that never
//! carried an endpoint.

pub(crate) fn successor(circle_lens: &[usize]) -> Vec<usize> {
    let mut succ = Vec::with_capacity(circle_lens.iter().sum());
    let mut offset = 0;
    for &len in circle_lens {
        succ.extend((0..len).map(|i| offset + (i + 1) % len));
        offset += len;
    }
    succ
}

pub(crate) fn empty_circles(circle_lens: &[usize]) -> usize {
    circle_lens.iter().filter(|&&l| l == 0).count()
}

/// Number of cycles of `succ`; `seen` is scratch space of the same length.
pub(crate) fn cycle_count(succ: &[usize], seen: &mut Vec<bool>) -> usize {
    seen.clear();
    seen.resize(succ.len(), false);
    let mut cycles = 0;
    for start in 0..succ.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut s = start;
        while !seen[s] {
            seen[s] = true;
            s = succ[s];
        }
    }
    cycles
}

/// Slots of the cycle through `start`, beginning with `start`.
pub(crate) fn walk_from(succ: &[usize], start: usize) -> Vec<usize> {
    let mut out = vec![start];
    let mut s = succ[start];
    while s != start {
        out.push(s);
        s = succ[s];
    }
    out
}
