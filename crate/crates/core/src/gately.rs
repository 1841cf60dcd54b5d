//! Utopia payoffs, propensity to disrupt, and the Gately point.
//!
//! The Gately point lies where the imputation set meets the half-line from
//! `(v_1, …, v_n)` in direction `(M_1 - v_1, …, M_n - v_n)`:
//!
//! ```text
//! x_i = v_i + t (M_i - v_i),   t = (v(N) - Σv) / (ΣM - Σv)
//! ```
//!
//! and at that point every player's propensity to disrupt equals
//! `d* = (ΣM - v(N)) / (v(N) - Σv)`. The line degenerates when `ΣM = Σv`,
//! which is exactly `d* = -1`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::game::{Allocation, TuGame};
use crate::properties::{is_essential, is_inessential, singleton_total};
use crate::rational::Rational;

/// `M_i = v(N) - v(N \ {i})` per player.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UtopiaVector(Vec<Rational>);

impl UtopiaVector {
    /// `M_i` for 1-based `i`.
    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i - 1]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn total(&self) -> Rational {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn to_allocation(&self) -> Allocation {
        Allocation::new(self.0.clone())
    }
}

pub fn utopia_payoffs(game: &TuGame) -> UtopiaVector {
    let full = game.grand_coalition();
    UtopiaVector((1..=game.n()).map(|i| game.grand() - &game[full.without(i)]).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PropensityError {
    #[error("allocation has {got} entries but the game has {n} players")]
    WrongLength { got: usize, n: usize },
    #[error("player {player} is out of range 1..={n}")]
    PlayerOutOfRange { player: usize, n: usize },
    #[error("allocation is not efficient: payoffs sum to {total}, v(N) = {grand}")]
    NotEfficient { total: Rational, grand: Rational },
    #[error("player {player} receives exactly v_{player}; the propensity to disrupt is undefined there")]
    AtLowerBound { player: usize },
    #[error("player {player} receives less than v_{player}")]
    BelowLowerBound { player: usize },
}

/// `d(i, x) = (M_i - x_i) / (x_i - v_i)` for an efficient `x` with
/// `x_i > v_i`.
pub fn propensity_to_disrupt(
    game: &TuGame,
    x: &Allocation,
    player: usize,
) -> Result<Rational, PropensityError> {
    let n = game.n();
    if x.len() != n {
        return Err(PropensityError::WrongLength { got: x.len(), n });
    }
    if !(1..=n).contains(&player) {
        return Err(PropensityError::PlayerOutOfRange { player, n });
    }
    let total = x.total();
    if total != *game.grand() {
        return Err(PropensityError::NotEfficient { total, grand: game.grand().clone() });
    }
    let gain = x.payoff(player) - game.singleton(player);
    if gain.is_zero() {
        return Err(PropensityError::AtLowerBound { player });
    }
    if gain.is_negative() {
        return Err(PropensityError::BelowLowerBound { player });
    }
    let utopia = game.grand() - &game[game.grand_coalition().without(player)];
    Ok((utopia - x.payoff(player)) / gain)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("game is not essential: Σ v_i = {singleton_total} is not below v(N) = {grand}")]
pub struct NotEssential {
    pub singleton_total: Rational,
    pub grand: Rational,
}

impl NotEssential {
    pub(crate) fn of(game: &TuGame) -> NotEssential {
        NotEssential { singleton_total: singleton_total(game), grand: game.grand().clone() }
    }
}

/// `d* = (ΣM - v(N)) / (v(N) - Σv)`; needs an essential game.
pub fn equal_propensity(game: &TuGame) -> Result<Rational, NotEssential> {
    let surplus = game.grand() - singleton_total(game);
    if !surplus.is_positive() {
        return Err(NotEssential::of(game));
    }
    Ok((utopia_payoffs(game).total() - game.grand()) / surplus)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GatelyStatus {
    /// The point on the line is an imputation.
    UniqueImputation,
    /// Inessential game; the point is `(v_1, …, v_n)`.
    InessentialBoundary,
    /// `ΣM = Σv`, so `d* = -1` and every imputation equalizes propensities.
    UndefinedEqualPropensityMinusOne,
    /// The efficient point on the line violates individual rationality.
    OutsideImputationSet,
    /// Neither essential nor inessential.
    NotEssential,
}

impl GatelyStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            GatelyStatus::UniqueImputation => "UniqueImputation",
            GatelyStatus::InessentialBoundary => "InessentialBoundary",
            GatelyStatus::UndefinedEqualPropensityMinusOne => "UndefinedEqualPropensityMinusOne",
            GatelyStatus::OutsideImputationSet => "OutsideImputationSet",
            GatelyStatus::NotEssential => "NotEssential",
        }
    }
}

impl fmt::Display for GatelyStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GatelyResult {
    pub status: GatelyStatus,
    pub point: Option<Allocation>,
    /// Present for every essential game, whatever the status.
    pub d_star: Option<Rational>,
    /// `t` in `x = v + t (M - v)`, present whenever the line is nondegenerate.
    pub line_parameter: Option<Rational>,
}

/// The Gately point with its full status gate.
///
/// Inessential games get `(v_1, …, v_n)`. Other non-essential games and
/// games with `ΣM = Σv` get no point. Otherwise the point on the line is
/// computed and tagged by whether every `(M_i - v_i) / (ΣM - Σv)` is
/// nonnegative, which is exactly when it is an imputation.
pub fn gately_point(game: &TuGame) -> GatelyResult {
    if is_inessential(game) {
        return GatelyResult {
            status: GatelyStatus::InessentialBoundary,
            point: Some(Allocation::new(game.singletons())),
            d_star: None,
            line_parameter: None,
        };
    }
    if !is_essential(game) {
        return GatelyResult {
            status: GatelyStatus::NotEssential,
            point: None,
            d_star: None,
            line_parameter: None,
        };
    }
    let d_star = equal_propensity(game).expect("essential game");
    let lower = game.singletons();
    let utopia = utopia_payoffs(game);
    let lower_total: Rational = lower.iter().sum();
    let spread = utopia.total() - &lower_total;
    if spread.is_zero() {
        debug_assert_eq!(d_star, Rational::from(-1));
        return GatelyResult {
            status: GatelyStatus::UndefinedEqualPropensityMinusOne,
            point: None,
            d_star: Some(d_star),
            line_parameter: None,
        };
    }
    let surplus = game.grand() - &lower_total;
    let t = &surplus / &spread;
    let gaps: Vec<Rational> = utopia.iter().zip(&lower).map(|(m, v)| m - v).collect();
    // sign of gap_i / spread, without dividing
    let in_imputation_set = gaps.iter().all(|g| g.is_zero() || g.signum() == spread.signum());
    let point = Allocation::new(lower.iter().zip(&gaps).map(|(v, g)| v + &t * g).collect());
    GatelyResult {
        status: if in_imputation_set {
            GatelyStatus::UniqueImputation
        } else {
            GatelyStatus::OutsideImputationSet
        },
        point: Some(point),
        d_star: Some(d_star),
        line_parameter: Some(t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn alloc(v: &[Rational]) -> Allocation {
        Allocation::new(v.to_vec())
    }

    #[test]
    fn utopia_examples() {
        assert_eq!(utopia_payoffs(&fixtures::example1()).as_slice(), &[q(3, 1), q(4, 1), q(5, 1)]);
        assert_eq!(utopia_payoffs(&fixtures::example2()).as_slice(), &[q(7, 2), q(9, 2), q(11, 2)]);
        assert_eq!(
            utopia_payoffs(&fixtures::symmetric3(0, 0, 1)).as_slice(),
            &[q(1, 1), q(1, 1), q(1, 1)]
        );
    }

    #[test]
    fn propensity_examples() {
        let g2 = fixtures::example2();
        let gately = alloc(&[q(23, 6), q(29, 6), q(35, 6)]);
        assert_eq!(propensity_to_disrupt(&g2, &gately, 1).unwrap(), q(-2, 5));
        let x = alloc(&[q(4, 1), q(5, 1), q(11, 2)]);
        assert_eq!(propensity_to_disrupt(&g2, &x, 3).unwrap(), q(0, 1));

        let g1 = fixtures::example1();
        for x in [[q(4, 1), q(5, 1), q(5, 1)], [q(10, 3), q(17, 3), q(5, 1)]] {
            // interior imputations have every coordinate strictly above v_i
            let x = alloc(&[x[0].clone(), x[1].clone(), q(14, 1) - &x[0] - &x[1]]);
            if (1..=3).all(|i| x.payoff(i) > g1.singleton(i)) {
                for i in 1..=3 {
                    assert_eq!(propensity_to_disrupt(&g1, &x, i).unwrap(), q(-1, 1));
                }
            }
        }
        let x = alloc(&[q(31, 10), q(41, 10), q(68, 10)]);
        assert_eq!(propensity_to_disrupt(&g1, &x, 1).unwrap(), q(-1, 1));
    }

    #[test]
    fn propensity_errors() {
        let g = fixtures::example2();
        assert!(matches!(
            propensity_to_disrupt(&g, &alloc(&[q(4, 1), q(5, 1), q(5, 1)]), 1),
            Err(PropensityError::NotEfficient { .. })
        ));
        assert_eq!(
            propensity_to_disrupt(&g, &alloc(&[q(3, 1), q(5, 1), q(13, 2)]), 1),
            Err(PropensityError::AtLowerBound { player: 1 })
        );
        assert_eq!(
            propensity_to_disrupt(&g, &alloc(&[q(2, 1), q(6, 1), q(13, 2)]), 1),
            Err(PropensityError::BelowLowerBound { player: 1 })
        );
        assert!(matches!(
            propensity_to_disrupt(&g, &alloc(&[q(29, 2)]), 1),
            Err(PropensityError::WrongLength { got: 1, n: 3 })
        ));
        assert!(matches!(
            propensity_to_disrupt(&g, &alloc(&[q(23, 6), q(29, 6), q(35, 6)]), 4),
            Err(PropensityError::PlayerOutOfRange { .. })
        ));
    }

    #[test]
    fn equal_propensity_examples() {
        assert_eq!(equal_propensity(&fixtures::example1()).unwrap(), q(-1, 1));
        assert_eq!(equal_propensity(&fixtures::example2()).unwrap(), q(-2, 5));
        assert_eq!(equal_propensity(&fixtures::symmetric3(0, 0, 1)).unwrap(), q(2, 1));
        assert!(equal_propensity(&fixtures::additive3()).is_err());
    }

    #[test]
    fn gately_examples() {
        let r = gately_point(&fixtures::example2());
        assert_eq!(r.status, GatelyStatus::UniqueImputation);
        assert_eq!(r.point.unwrap().as_slice(), &[q(23, 6), q(29, 6), q(35, 6)]);
        assert_eq!(r.d_star, Some(q(-2, 5)));
        assert_eq!(r.line_parameter, Some(q(5, 3)));

        let r = gately_point(&fixtures::example1());
        assert_eq!(r.status, GatelyStatus::UndefinedEqualPropensityMinusOne);
        assert_eq!(r.point, None);
        assert_eq!(r.d_star, Some(q(-1, 1)));

        let r = gately_point(&fixtures::additive3());
        assert_eq!(r.status, GatelyStatus::InessentialBoundary);
        assert_eq!(r.point.unwrap().as_slice(), &[q(1, 1), q(2, 1), q(3, 1)]);
        assert_eq!(r.d_star, None);

        let r = gately_point(&fixtures::symmetric3(0, 0, 1));
        assert_eq!(r.status, GatelyStatus::UniqueImputation);
        assert_eq!(r.point.unwrap().as_slice(), &[q(1, 3), q(1, 3), q(1, 3)]);
    }

    #[test]
    fn sub_essential_game_has_no_point() {
        let r = gately_point(&fixtures::symmetric3(2, 4, 5));
        assert_eq!(r.status, GatelyStatus::NotEssential);
        assert_eq!(r.point, None);
    }

    #[test]
    fn mixed_sign_gaps_leave_imputation_set() {
        // M - v = (2, 2, -1): ΣM - Σv = 3 but player 3 is pushed below v_3
        let g = fixtures::three_player([0, 0, 2, 3, 2, 2, 4].map(Rational::from));
        let m = utopia_payoffs(&g);
        assert_eq!(m.as_slice(), &[q(2, 1), q(2, 1), q(1, 1)]);
        let r = gately_point(&g);
        assert_eq!(r.status, GatelyStatus::OutsideImputationSet);
        let x = r.point.unwrap();
        assert_eq!(x.total(), q(4, 1));
        assert!(x.payoff(3) < g.singleton(3));
    }

    #[test]
    fn players_on_their_utopia_keep_v_i() {
        // M = (1, 1, 1) and v_3 = 1 = M_3
        let g = fixtures::three_player([0, 0, 1, 2, 2, 2, 3].map(Rational::from));
        let r = gately_point(&g);
        assert_eq!(r.status, GatelyStatus::UniqueImputation);
        assert_eq!(r.point.unwrap().as_slice(), &[q(1, 1), q(1, 1), q(1, 1)]);
    }

    #[test]
    fn condition_b_games_have_unique_point() {
        // v = (2, 1, 1) ≥ M = (1, 1, 1), strictly for player 1
        let g = fixtures::three_player([2, 1, 1, 4, 4, 4, 5].map(Rational::from));
        assert_eq!(utopia_payoffs(&g).as_slice(), &[q(1, 1), q(1, 1), q(1, 1)]);
        let r = gately_point(&g);
        assert_eq!(r.status, GatelyStatus::UniqueImputation);
        assert_eq!(r.d_star, Some(q(-2, 1)));
        assert_eq!(r.line_parameter, Some(q(-1, 1)));
        assert_eq!(r.point.unwrap().as_slice(), &[q(3, 1), q(1, 1), q(1, 1)]);
    }
}
