//! Grid search against the closed form on 200 quasibalanced three-player
//! games at resolution 200.

use gately_core::gately::{equal_propensity, gately_point, GatelyStatus};
use gately_core::oracle::{generate_game, grid_minmax_propensity, GameClass};
use gately_core::properties::{is_essential, is_quasibalanced};
use gately_core::Rational;

const RESOLUTION: u32 = 200;

#[test]
fn grid_agrees_with_closed_form() {
    let step = Rational::new(1, RESOLUTION as i64);
    let mut failures = Vec::new();
    for seed in 0..200 {
        let game = generate_game(seed, 3, GameClass::Quasibalanced).unwrap();
        let d_star = equal_propensity(&game).unwrap();
        let x = gately_point(&game).point.unwrap();
        let grid = grid_minmax_propensity(&game, RESOLUTION).unwrap();
        let surplus = game.grand() - game.singletons().iter().sum::<Rational>();
        let d_gap = (&grid.best_minmax - &d_star).abs();
        if d_gap > &step * &Rational::from(4) {
            failures.push(format!("seed {seed}: |minmax - d*| = {d_gap} ({:.6})", d_gap.to_f64()));
        }
        for i in 1..=3 {
            let gap = (grid.best_point.payoff(i) - x.payoff(i)).abs();
            if gap > &step * &(Rational::from(2) * &surplus) {
                failures.push(format!("seed {seed}: player {i} off by {gap}"));
            }
        }
    }
    assert!(failures.is_empty(), "{} violations:\n{}", failures.len(), failures.join("\n"));
}

/// Not asserted: how far the grid optimum sits from `d*` when the game is
/// essential but not quasibalanced.
#[test]
fn record_non_quasibalanced_behaviour() {
    let mut rows = Vec::new();
    for seed in 0..40 {
        let game = generate_game(seed, 3, GameClass::Arbitrary).unwrap();
        if !is_essential(&game) || is_quasibalanced(&game) {
            continue;
        }
        let r = gately_point(&game);
        let grid = grid_minmax_propensity(&game, 60).unwrap();
        let d_star = r.d_star.unwrap();
        rows.push(format!(
            "seed {seed:>2} {:<32} d* = {:>10.4} grid = {:>10.4}",
            r.status.as_str(),
            d_star.to_f64(),
            grid.best_minmax.to_f64()
        ));
        if r.status == GatelyStatus::UniqueImputation {
            assert!(grid.best_minmax >= d_star);
        }
    }
    println!("{}", rows.join("\n"));
}
