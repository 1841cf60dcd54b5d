//! Implications between the game classes, checked on 500 seeded games per
//! class and player count.

use gately_core::gately::{equal_propensity, gately_point, utopia_payoffs, GatelyStatus};
use gately_core::oracle::{generate_game, GameClass};
use gately_core::properties::{classify, is_essential};
use gately_core::{Coalition, TuGame};

const SEEDS: u64 = 500;

fn games() -> impl Iterator<Item = (GameClass, usize, u64, TuGame)> {
    GameClass::ALL.into_iter().flat_map(|class| {
        (2..=4).flat_map(move |n| {
            (0..SEEDS).map(move |seed| (class, n, seed, generate_game(seed, n, class).unwrap()))
        })
    })
}

#[test]
fn class_implications() {
    let mut quasibalanced_seen = 0;
    for (class, n, seed, game) in games() {
        let flags = classify(&game);
        let ctx = format!("{class:?} n={n} seed={seed}");
        if flags.superadditive {
            assert!(flags.weakly_superadditive, "{ctx}");
        }
        if flags.weakly_superadditive {
            let utopia = utopia_payoffs(&game);
            for i in 1..=n {
                assert!(game.singleton(i) <= utopia.get(i), "{ctx}: v_{i} > M_{i}");
            }
        }
        let full = Coalition::grand(n);
        let by_complement = (1..=n).all(|i| game.singleton(i) + &game[full.without(i)] == *game.grand());
        let utopia = utopia_payoffs(&game);
        let by_utopia = (1..=n).all(|i| game.singleton(i) == utopia.get(i));
        assert_eq!(by_complement, by_utopia, "{ctx}");
        assert_eq!(flags.weakly_constant_sum, by_complement, "{ctx}");
        if flags.quasibalanced && is_essential(&game) {
            quasibalanced_seen += 1;
            assert_eq!(gately_point(&game).status, GatelyStatus::UniqueImputation, "{ctx}");
            assert!(!equal_propensity(&game).unwrap().is_negative(), "{ctx}");
        }
    }
    assert!(quasibalanced_seen >= 3 * SEEDS as usize);
}

#[test]
fn generators_deliver_their_class() {
    for (class, n, seed, game) in games() {
        let flags = classify(&game);
        let ok = match class {
            GameClass::Superadditive => flags.superadditive && flags.essential,
            GameClass::Quasibalanced => flags.quasibalanced && flags.essential,
            GameClass::WeaklyConstantSum => flags.weakly_constant_sum,
            GameClass::Arbitrary => true,
        };
        assert!(ok, "{class:?} n={n} seed={seed}");
    }
}

#[test]
fn weakly_constant_sum_games_have_no_unique_gately_point() {
    for n in 2..=4 {
        for seed in 0..SEEDS {
            let game = generate_game(seed, n, GameClass::WeaklyConstantSum).unwrap();
            if is_essential(&game) {
                let r = gately_point(&game);
                assert_eq!(r.status, GatelyStatus::UndefinedEqualPropensityMinusOne);
                assert_eq!(r.d_star, Some((-1).into()));
            }
        }
    }
}
