//! Solution concepts for transferable-utility games over exact rationals.
//!
//! * [`gately`]: utopia payoffs, propensity to disrupt, the equal propensity
//!   `d*` and the Gately point, with a status for every degenerate case.
//! * [`tau`]: remainders, minimal rights and the τ-value.
//! * [`cost`]: separable/nonseparable costs, the ACA allocation and the
//!   savings game of a cost game.
//! * [`properties`] and [`transforms`]: game classes and normalizations.
//! * [`oracle`]: brute-force cross-checks and seeded game generators.
//!
//! ```
//! use gately_core::{fixtures, gately::{gately_point, GatelyStatus}, Rational};
//!
//! let result = gately_point(&fixtures::example2());
//! assert_eq!(result.status, GatelyStatus::UniqueImputation);
//! assert_eq!(result.point.unwrap().payoff(1), &Rational::new(23, 6));
//! ```

pub mod coalition;
pub mod cost;
pub mod fixtures;
pub mod format;
pub mod game;
pub mod gately;
pub mod oracle;
pub mod properties;
pub mod rational;
pub mod tau;
pub mod transforms;

pub use coalition::Coalition;
pub use format::{parse_game, serialize_game, GameKind, ParsedGame};
pub use game::{Allocation, CostGame, GameError, TuGame};
pub use rational::Rational;
