//! Exact game-class predicates.

use serde::Serialize;

use crate::coalition::Coalition;
use crate::gately::utopia_payoffs;
use crate::game::TuGame;
use crate::rational::Rational;
use crate::tau::minimal_rights;

/// All classification flags of one game.
///
/// `superadditive` implies `weakly_superadditive`; `essential` and
/// `inessential` are never both set (a game can have neither).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GameClassification {
    pub essential: bool,
    pub inessential: bool,
    pub weakly_superadditive: bool,
    pub superadditive: bool,
    pub weakly_constant_sum: bool,
    pub quasibalanced: bool,
}

impl GameClassification {
    /// `(name, flag)` pairs in a fixed order, for reports.
    pub fn flags(&self) -> [(&'static str, bool); 6] {
        [
            ("essential", self.essential),
            ("inessential", self.inessential),
            ("weakly_superadditive", self.weakly_superadditive),
            ("superadditive", self.superadditive),
            ("weakly_constant_sum", self.weakly_constant_sum),
            ("quasibalanced", self.quasibalanced),
        ]
    }
}

pub fn classify(game: &TuGame) -> GameClassification {
    let superadditive = is_superadditive(game);
    GameClassification {
        essential: is_essential(game),
        inessential: superadditive && singleton_total(game) == *game.grand(),
        weakly_superadditive: is_weakly_superadditive(game),
        superadditive,
        weakly_constant_sum: is_weakly_constant_sum(game),
        quasibalanced: is_quasibalanced(game),
    }
}

/// `Σ_j v_j`.
pub(crate) fn singleton_total(game: &TuGame) -> Rational {
    (1..=game.n()).map(|i| game.singleton(i)).sum()
}

/// `Σ_j v_j < v(N)`.
pub fn is_essential(game: &TuGame) -> bool {
    singleton_total(game) < *game.grand()
}

/// Superadditive with `Σ_j v_j = v(N)`: the imputation set is the single
/// point `(v_1, …, v_n)`.
pub fn is_inessential(game: &TuGame) -> bool {
    singleton_total(game) == *game.grand() && is_superadditive(game)
}

/// `v(S ∪ {i}) ≥ v(S) + v_i` for every `S` and every `i ∉ S`.
pub fn is_weakly_superadditive(game: &TuGame) -> bool {
    let n = game.n();
    Coalition::all(n).all(|s| {
        (1..=n)
            .filter(|&i| !s.contains(i))
            .all(|i| game[s.with(i)] >= &game[s] + game.singleton(i))
    })
}

/// `v(S ∪ T) ≥ v(S) + v(T)` for all disjoint nonempty `S`, `T`.
///
/// Each unordered pair is visited once by requiring `S < T` as bitmasks, and
/// `T` ranges over the submasks of the complement of `S`: `O(3^n)` overall.
pub fn is_superadditive(game: &TuGame) -> bool {
    let full = game.grand_coalition();
    Coalition::all(game.n()).skip(1).all(|s| {
        let rest = Coalition::from_bits(full.bits() & !s.bits());
        rest.subsets()
            .filter(|t| t.bits() > s.bits())
            .all(|t| game[s.union(t)] >= &game[s] + &game[t])
    })
}

/// `v_i + v(N \ {i}) = v(N)` for all `i`.
///
/// Also evaluates the equivalent form `v_i = M_i` through the utopia vector
/// and panics if the two ever disagree.
pub fn is_weakly_constant_sum(game: &TuGame) -> bool {
    let full = game.grand_coalition();
    let by_definition =
        (1..=game.n()).all(|i| game.singleton(i) + &game[full.without(i)] == *game.grand());
    let utopia = utopia_payoffs(game);
    let by_utopia = (1..=game.n()).all(|i| game.singleton(i) == utopia.get(i));
    assert_eq!(by_definition, by_utopia, "weakly constant-sum characterizations disagree");
    by_definition
}

/// `m_i ≤ M_i` for all `i`, and `Σ m_j ≤ v(N) ≤ Σ M_j`.
pub fn is_quasibalanced(game: &TuGame) -> bool {
    let upper = utopia_payoffs(game);
    let lower = minimal_rights(game);
    let pointwise = lower.iter().zip(upper.iter()).all(|(m, big_m)| m <= big_m);
    pointwise && lower.total() <= *game.grand() && *game.grand() <= upper.total()
}
