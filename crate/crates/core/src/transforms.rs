//! Strategic equivalence: `w(S) = α v(S) + Σ_{i∈S} a_i` with `α > 0`.

use thiserror::Error;

use crate::gately::NotEssential;
use crate::game::TuGame;
use crate::properties::singleton_total;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(Rational),
    #[error("shift has {got} entries but the game has {n} players")]
    ShiftLength { got: usize, n: usize },
}

pub fn strategic_equivalent(
    game: &TuGame,
    scale: &Rational,
    shift: &[Rational],
) -> Result<TuGame, TransformError> {
    if !scale.is_positive() {
        return Err(TransformError::NonPositiveScale(scale.clone()));
    }
    if shift.len() != game.n() {
        return Err(TransformError::ShiftLength { got: shift.len(), n: game.n() });
    }
    Ok(TuGame::from_fn(game.n(), |s| {
        let offset: Rational = s.players().map(|i| &shift[i - 1]).sum();
        scale * &game[s] + offset
    })
    .expect("same player count as a valid game"))
}

/// `w(S) = v(S) - Σ_{i∈S} v_i`.
pub fn zero_normalize(game: &TuGame) -> TuGame {
    let shift: Vec<Rational> = game.singletons().into_iter().map(|v| -v).collect();
    strategic_equivalent(game, &Rational::one(), &shift).expect("unit scale, full-length shift")
}

/// `u(S) = (v(S) - Σ_{i∈S} v_i) / (v(N) - Σ_j v_j)`; needs an essential game.
pub fn zero_one_normalize(game: &TuGame) -> Result<TuGame, NotEssential> {
    let surplus = game.grand() - singleton_total(game);
    if !surplus.is_positive() {
        return Err(NotEssential::of(game));
    }
    let scale = surplus.recip().expect("positive surplus");
    let shift: Vec<Rational> = game.singletons().iter().map(|v| -(v * &scale)).collect();
    Ok(strategic_equivalent(game, &scale, &shift).expect("positive scale, full-length shift"))
}
