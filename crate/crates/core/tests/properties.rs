mod common;

use common::*;
use monocat::linalg::{FieldPrime, Matrix};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(0x6d6f_6e6f), failure_persistence: None, ..Config::default() }
}

fn matrix(p: u32, rows: usize, cols: usize, entries: &[u32]) -> Matrix {
    let f = FieldPrime::new(p).unwrap();
    Matrix::from_fn(f, rows, cols, |i, j| entries[(i * cols + j) % entries.len()] % p)
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn linalg_identities(
        p in prop::sample::select(vec![2u32, 3, 5, 7]),
        (r, c, k) in (1usize..6, 1usize..6, 1usize..6),
        e in prop::collection::vec(0u32..7, 36),
        f in prop::collection::vec(0u32..7, 36),
        y in prop::collection::vec(0u32..7, 6),
    ) {
        let a = matrix(p, r, c, &e);
        let b = matrix(p, c, k, &f);
        let y = matrix(p, c, 1, &y);
        prop_assert_eq!(check_linalg(&a, &b, &y), Ok(()));
        let sq = matrix(p, r, r, &f);
        prop_assert_eq!(check_linalg(&sq, &sq, &matrix(p, r, 1, &e)), Ok(()));
    }
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn krull_schmidt_is_idempotent(which in 0usize..3, seed in any::<u64>()) {
        let x = random_module(&anchors()[which], &mut rng(seed));
        prop_assert_eq!(check_krull_schmidt(&x), Ok(()));
    }

    #[test]
    fn inverse_translate_undoes_translate(which in 0usize..3, seed in any::<u64>()) {
        let x = random_module(&anchors()[which], &mut rng(seed));
        prop_assert_eq!(check_translate(&x), Ok(()));
    }

    #[test]
    fn recollement_four_terms(which in 0usize..2, seed in any::<u64>()) {
        let m = if which == 0 { a3r2_m3() } else { ppa2_hits().remove(0) };
        prop_assert_eq!(check_recollement(&m, seed), Ok(()));
    }
}
