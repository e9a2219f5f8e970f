//! The state sum over ascending (or descending) one-component subsets of
//! crossings, each weighted by its writhe product and `z^|S|`.

use num_bigint::BigInt;

use crate::gauss::{Direction, GaussDiagram, SubsetEvaluator};
use crate::poly::IntPolynomial;

/// Largest chord count accepted; every subset is visited.
pub const MAX_STATE_SUM_CHORDS: usize = 30;

pub fn nabla_state(g: &GaussDiagram, direction: Direction) -> IntPolynomial {
    let chords: Vec<((usize, usize), i64)> = g.chords().map(|(_, c)| (c.slots(), c.sign.value())).collect();
    let n = chords.len();
    assert!(n <= MAX_STATE_SUM_CHORDS, "state sum over {n} chords is out of range");
    // One-component subsets of a knot diagram have even size, of a
    // two-circle diagram odd size.
    let parity = if g.is_knot() { 0 } else { 1 };
    let mut coeffs = vec![0i64; n + 1];
    let mut eval = SubsetEvaluator::new(g);
    let mut pairs = Vec::with_capacity(n);
    for mask in 0u64..(1u64 << n) {
        let size = mask.count_ones() as usize;
        if size % 2 != parity {
            continue;
        }
        pairs.clear();
        let mut weight = 1;
        for (i, &(p, s)) in chords.iter().enumerate() {
            if mask >> i & 1 == 1 {
                pairs.push(p);
                weight *= s;
            }
        }
        if eval.classify(&pairs, direction) {
            coeffs[size] += weight;
        }
    }
    IntPolynomial::from_coeffs(coeffs.into_iter().map(BigInt::from).collect())
}
