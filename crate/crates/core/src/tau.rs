//! Remainders, minimal rights and the τ-value.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::coalition::Coalition;
use crate::gately::{utopia_payoffs, UtopiaVector};
use crate::game::{Allocation, TuGame};
use crate::properties::is_quasibalanced;
use crate::rational::Rational;

/// `m_i = max_{S ∋ i} R(S, i)` per player. Always `m_i ≥ v_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalRightsVector(Vec<Rational>);

impl MinimalRightsVector {
    /// `m_i` for 1-based `i`.
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
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RemainderError {
    #[error("player {player} is not a member of {coalition}")]
    PlayerNotInCoalition { player: usize, coalition: Coalition },
    #[error("coalition {0} has players outside the game")]
    CoalitionOutOfRange(Coalition),
}

/// `R(S, i) = v(S) - Σ_{j ∈ S, j ≠ i} M_j`.
pub fn remainder(game: &TuGame, s: Coalition, player: usize) -> Result<Rational, RemainderError> {
    if s.max_player() > game.n() {
        return Err(RemainderError::CoalitionOutOfRange(s));
    }
    if !s.contains(player) {
        return Err(RemainderError::PlayerNotInCoalition { player, coalition: s });
    }
    let utopia = utopia_payoffs(game);
    let others: Rational = s.without(player).players().map(|j| utopia.get(j)).sum();
    Ok(&game[s] - others)
}

/// Exhaustive maximum of `R(S, i)` over the `2^(n-1)` coalitions containing
/// each `i`.
pub fn minimal_rights(game: &TuGame) -> MinimalRightsVector {
    let n = game.n();
    let utopia = utopia_payoffs(game);
    // utopia_sum[S] = Σ_{j∈S} M_j, built from S minus its lowest member
    let mut utopia_sum: Vec<Rational> = Vec::with_capacity(1 << n);
    utopia_sum.push(Rational::zero());
    for bits in 1u32..(1 << n) {
        let low = bits.trailing_zeros() as usize;
        let rest = (bits & (bits - 1)) as usize;
        utopia_sum.push(&utopia_sum[rest] + utopia.get(low + 1));
    }
    let mut best: Vec<Option<Rational>> = vec![None; n];
    for (s, worth) in game.iter() {
        for i in s.players() {
            let r = worth - (&utopia_sum[s.index()] - utopia.get(i));
            let slot = &mut best[i - 1];
            if slot.as_ref().is_none_or(|b| r > *b) {
                *slot = Some(r);
            }
        }
    }
    MinimalRightsVector(best.into_iter().map(|b| b.expect("every player is in N")).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TauStatus {
    Unique,
    /// `m = M`; the τ-value is `M` itself.
    DegenerateEndpoints,
    NotQuasibalanced,
}

impl TauStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            TauStatus::Unique => "Unique",
            TauStatus::DegenerateEndpoints => "DegenerateEndpoints",
            TauStatus::NotQuasibalanced => "NotQuasibalanced",
        }
    }
}

impl fmt::Display for TauStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauResult {
    pub status: TauStatus,
    pub point: Option<Allocation>,
    /// Weight on the minimal-rights end: `τ = α m + (1 - α) M`.
    pub alpha: Option<Rational>,
    pub minimal_rights: MinimalRightsVector,
    pub utopia: UtopiaVector,
}

/// The efficient point on the segment from `m` to `M`, for quasibalanced
/// games.
///
/// `Σ τ = v(N)` is linear in `α`, so `α = (ΣM - v(N)) / (ΣM - Σm)`, which
/// lies in `[0, 1]` by quasibalancedness.
pub fn tau_value(game: &TuGame) -> TauResult {
    let lower = minimal_rights(game);
    let upper = utopia_payoffs(game);
    if !is_quasibalanced(game) {
        return TauResult {
            status: TauStatus::NotQuasibalanced,
            point: None,
            alpha: None,
            minimal_rights: lower,
            utopia: upper,
        };
    }
    let upper_total = upper.total();
    let span = &upper_total - lower.total();
    if span.is_zero() {
        // m_i ≤ M_i for all i with equal sums forces m = M
        debug_assert_eq!(lower.as_slice(), upper.as_slice());
        return TauResult {
            status: TauStatus::DegenerateEndpoints,
            point: Some(upper.to_allocation()),
            alpha: None,
            minimal_rights: lower,
            utopia: upper,
        };
    }
    let alpha = (&upper_total - game.grand()) / span;
    let one_minus = Rational::one() - &alpha;
    let point = lower.iter().zip(upper.iter()).map(|(m, big_m)| &alpha * m + &one_minus * big_m);
    TauResult {
        status: TauStatus::Unique,
        point: Some(Allocation::new(point.collect())),
        alpha: Some(alpha),
        minimal_rights: lower,
        utopia: upper,
    }
}
