mod support;

use pv_conway::{conway_skein, IntPolynomial};
use support::braid_closure;

fn skein(strands: usize, word: &[i32]) -> IntPolynomial {
    conway_skein(&braid_closure(strands, word).unwrap()).unwrap()
}

#[test]
fn closures_of_table_braids() {
    let cases: &[(usize, &[i32], &[i64])] = &[
        (2, &[1, 1, 1], &[1, 0, 1]),
        (3, &[1, -2, 1, -2], &[1, 0, -1]),
        (3, &[1, 1, 1, 2, -1, 2], &[1, 0, 2]),
        (3, &[1, 1, 1, -2, 1, -2], &[1, 0, -1, 0, -1]),
        (4, &[1, 1, 2, -1, 2, 2, 3, -2, 3], &[1, 0, 4]),
        (3, &[1, 1, -2, 1, -2, 1, -2, -2], &[1, 0, -1, 0, -2, 0, -1]),
        (3, &[1, 1, 1, 2, 1, 1, 1, 2], &[1, 0, 5, 0, 5, 0, 1]),
        (3, &[1, 1, 1, -2, -1, -1, -1, -2], &[1, 0, 2, 0, 1]),
    ];
    for (strands, word, conway) in cases {
        assert_eq!(skein(*strands, word), IntPolynomial::from_i64s(conway), "braid {word:?}");
    }
}

#[test]
fn hopf_and_unlinks() {
    assert_eq!(skein(2, &[1, 1]), IntPolynomial::from_i64s(&[0, 1]));
    assert_eq!(skein(2, &[-1, -1]), IntPolynomial::from_i64s(&[0, -1]));
    assert!(skein(3, &[1, 2]).coeffs().len() == 1);
    assert!(braid_closure(3, &[]).is_none());
    assert!(skein(2, &[1, -1]).is_zero());
}
