//! Small named games used throughout the tests, the CLI examples and the
//! README.

use crate::coalition::Coalition;
use crate::game::{CostGame, TuGame};
use crate::rational::Rational;

/// Three-player game from worths listed as
/// `[v1, v2, v3, v12, v13, v23, v123]`.
pub fn three_player(worths: [Rational; 7]) -> TuGame {
    TuGame::new(3, three_player_entries(worths)).expect("three-player listing is total")
}

pub fn three_player_cost(costs: [Rational; 7]) -> CostGame {
    CostGame::new(3, three_player_entries(costs)).expect("three-player listing is total")
}

fn three_player_entries(worths: [Rational; 7]) -> Vec<(Coalition, Rational)> {
    let keys: [&[usize]; 7] = [&[1], &[2], &[3], &[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]];
    keys.iter()
        .map(|k| Coalition::from_players(k.iter().copied()).unwrap())
        .zip(worths)
        .collect()
}

fn ints(v: [i64; 7]) -> [Rational; 7] {
    v.map(Rational::from)
}

/// `v_i = 3, 4, 5`, pairs `9, 10, 11`, `v(N) = 14`: superadditive, essential
/// and weakly constant-sum, so every imputation has propensity `-1`.
pub fn example1() -> TuGame {
    three_player(ints([3, 4, 5, 9, 10, 11, 14]))
}

/// Same as [`example1`] with `v(N) = 29/2`; Gately point `(23/6, 29/6, 35/6)`,
/// not quasibalanced.
pub fn example2() -> TuGame {
    let mut w = ints([3, 4, 5, 9, 10, 11, 0]);
    w[6] = Rational::new(29, 2);
    three_player(w)
}

/// Subadditive cost game `c_i = 7, 8, 9`, pairs `14, 15, 16`, `c(N) = 23`,
/// whose savings game is the 2-of-3 majority game.
pub fn example3() -> CostGame {
    three_player_cost(ints([7, 8, 9, 14, 15, 16, 23]))
}

/// `v(S) = Σ_{i∈S} i` on three players.
pub fn additive3() -> TuGame {
    TuGame::from_fn(3, |s| Rational::from(s.players().sum::<usize>() as i64)).unwrap()
}

/// Symmetric three-player game with the given singleton, pair and grand worths.
pub fn symmetric3(single: i64, pair: i64, grand: i64) -> TuGame {
    three_player(ints([single, single, single, pair, pair, pair, grand]))
}

pub fn symmetric_cost3(single: i64, pair: i64, grand: i64) -> CostGame {
    three_player_cost(ints([single, single, single, pair, pair, pair, grand]))
}

/// Additive cost game `c(S) = Σ_{i∈S} c_i` with `c = (2, 3, 5)`.
pub fn additive_cost3() -> CostGame {
    let c = [2i64, 3, 5];
    CostGame::from_fn(3, |s| Rational::from(s.players().map(|i| c[i - 1]).sum::<i64>())).unwrap()
}

/// `n = 2`, `v_1 = v_2 = 0`, `v(12) = 1`.
pub fn unit2() -> TuGame {
    TuGame::from_fn(2, |s| if s.len() == 2 { Rational::one() } else { Rational::zero() }).unwrap()
}
