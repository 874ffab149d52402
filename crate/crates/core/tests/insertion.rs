//! The insertion `z0 z1 ▶ z0^2 z1 z2`, expanded by hand term by term.

use mibs::eval::{elementary_differential, Poly};
use mibs::products::{derive_monomial_n, insert};
use mibs::{int, LinComb, MultiIndex};

fn mi(s: &str) -> MultiIndex {
    s.parse().unwrap()
}

#[test]
fn second_derivative_of_z0_z1() {
    // D(z0 z1) = z1^2 + z0 z2, D(z1^2) = 2 z1 z2, D(z0 z2) = z1 z2 + z0 z3
    let expected: LinComb<MultiIndex> = [(mi("z1 z2"), int(3)), (mi("z0 z3"), int(1))].into_iter().collect();
    assert_eq!(derive_monomial_n(&mi("z0 z1"), 2), expected);
}

#[test]
fn insertion_term_by_term() {
    // k = 0: z0 z1 . 2 z0 z1 z2          -> 2 z0^2 z1^2 z2
    // k = 1: (z1^2 + z0 z2) . z0^2 z2    -> z0^2 z1^2 z2 + z0^3 z2^2
    // k = 2: (3 z1 z2 + z0 z3) . z0^2 z1 -> 3 z0^2 z1^2 z2 + z0^3 z1 z3
    let expected: LinComb<MultiIndex> = [
        (mi("z0^2 z1^2 z2"), int(6)),
        (mi("z0^3 z2^2"), int(1)),
        (mi("z0^3 z1 z3"), int(1)),
    ]
    .into_iter()
    .collect();
    assert_eq!(insert(&mi("z0 z1"), &mi("z0^2 z1 z2")), expected);
}

#[test]
fn insertion_agrees_with_differentials() {
    // scalar counterpart of the k = 2 term: (f f')'' = 3 f' f'' + f f'''
    let f = Poly::new((1..=6).map(int).collect());
    let ff = elementary_differential(&mi("z0 z1"), &f);
    let lhs = ff.derive_n(2);
    let rhs = &elementary_differential(&mi("z1 z2"), &f).scale(&int(3)) + &elementary_differential(&mi("z0 z3"), &f);
    assert_eq!(lhs, rhs);
}
