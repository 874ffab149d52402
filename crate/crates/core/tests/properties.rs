//! Randomised invariants over the enumerated bases.

use mibs::characters::{compose, substitute, Character};
use mibs::eval::Poly;
use mibs::products::{derive_monomial, insert, pre_lie, star1, star2};
use mibs::trees::{corolla_witness, enumerate_trees, psi, RootedTree};
use mibs::verify::random_character;
use mibs::{enumerate_populated, rat, Forest, LinComb, MultiIndex, Rational};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn populated(max: usize) -> impl Strategy<Value = MultiIndex> {
    (1..=max, any::<prop::sample::Index>()).prop_map(|(n, i)| {
        let all = enumerate_populated(n).unwrap();
        all[i.index(all.len())].clone()
    })
}

fn monomial() -> impl Strategy<Value = MultiIndex> {
    prop::collection::vec(0usize..4, 0..5).prop_map(|d| MultiIndex::from_dense(&d))
}

fn forest(max_parts: usize, max_order: usize) -> impl Strategy<Value = Forest> {
    prop::collection::vec(populated(max_order), 0..=max_parts).prop_map(Forest::from_components)
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(p, q)| rat(p, q))
}

fn all_populated(lc: &LinComb<MultiIndex>) -> bool {
    lc.basis_elements().all(MultiIndex::is_populated)
}

fn tree(max: usize) -> impl Strategy<Value = RootedTree> {
    (1..=max, any::<prop::sample::Index>()).prop_map(|(n, i)| {
        let all = enumerate_trees(n).unwrap();
        all[i.index(all.len())].clone()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn derivation_law(x in monomial(), y in monomial()) {
        let left = derive_monomial(&x.mul(&y));
        let right = derive_monomial(&x).map_basis(|m| m.mul(&y)) + derive_monomial(&y).map_basis(|m| m.mul(&x));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn novikov_identities(x in populated(4), y in populated(4), z in populated(4)) {
        let lz = LinComb::basis(z.clone());
        let ly = LinComb::basis(y.clone());
        let lx = LinComb::basis(x.clone());
        let pl = |a: &LinComb<MultiIndex>, b: &LinComb<MultiIndex>| mibs::products::pre_lie_lin(a, b);
        let assoc_xy = pl(&pl(&lx, &ly), &lz) - pl(&lx, &pl(&ly, &lz));
        let assoc_yx = pl(&pl(&ly, &lx), &lz) - pl(&ly, &pl(&lx, &lz));
        prop_assert_eq!(assoc_xy, assoc_yx);
        prop_assert_eq!(pl(&pre_lie(&x, &y), &lz), pl(&pre_lie(&x, &z), &ly));
    }

    #[test]
    fn products_stay_populated(x in populated(5), y in populated(5), f in forest(3, 3)) {
        prop_assert!(all_populated(&pre_lie(&x, &y)));
        prop_assert!(all_populated(&star2(&f, &y)));
        prop_assert!(all_populated(&insert(&x, &y)));
        prop_assert!(all_populated(&star1(&f, &y)));
    }

    #[test]
    fn grading(f in forest(3, 3), alpha in populated(5)) {
        for m in star2(&f, &alpha).basis_elements() {
            prop_assert_eq!(m.length(), f.length() + alpha.length());
        }
        for m in star1(&f, &alpha).basis_elements() {
            prop_assert_eq!(m.length() + f.component_count(), f.length() + alpha.length());
        }
    }

    #[test]
    fn witness_inverts_psi(beta in populated(9)) {
        prop_assert_eq!(psi(&corolla_witness(&beta).unwrap()), beta);
    }

    #[test]
    fn tree_text_round_trip(t in tree(7)) {
        prop_assert_eq!(t.to_string().parse::<RootedTree>().unwrap(), t);
    }

    #[test]
    fn multi_index_round_trips(m in monomial()) {
        let text = m.to_string();
        prop_assert_eq!(text.parse::<MultiIndex>().unwrap(), m.clone());
        let json = serde_json::to_string(&m).unwrap();
        prop_assert_eq!(serde_json::from_str::<MultiIndex>(&json).unwrap(), m);
    }

    #[test]
    fn forest_json_round_trip(f in forest(4, 4)) {
        let json = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<Forest>(&json).unwrap(), f);
    }

    #[test]
    fn poly_json_round_trip(c in prop::collection::vec(rational(), 0..6)) {
        let p = Poly::new(c);
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Poly>(&json).unwrap(), p);
    }

    #[test]
    fn character_json_round_trip(seed in any::<u64>(), order in 1usize..5, empty in rational()) {
        let a = random_character(&mut ChaCha8Rng::seed_from_u64(seed), order, empty);
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Character>(&json).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Values of `b ⋆₂ a` and `b ⋆₁ a` at order `k` only see inputs up to
    /// order `k`.
    #[test]
    fn laws_respect_grading(seed in any::<u64>(), k in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_character(&mut rng, 4, Rational::from_integer(1.into()));
        let b = random_character(&mut rng, 4, Rational::from_integer(1.into()));
        let b0 = random_character(&mut rng, 4, Rational::from_integer(0.into()));
        let full = compose(&b, &a).unwrap().truncate(k);
        let cut = compose(&b.truncate(k), &a.truncate(k)).unwrap();
        prop_assert_eq!(full, cut);
        let full = substitute(&b0, &a).unwrap().truncate(k);
        let cut = substitute(&b0.truncate(k), &a.truncate(k)).unwrap();
        prop_assert_eq!(full, cut);
    }
}
