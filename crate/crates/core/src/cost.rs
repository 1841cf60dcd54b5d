//! Cost games: separable and nonseparable costs, the ACA (alternate cost
//! avoided) allocation, and the associated savings game.

use std::fmt;

use serde::Serialize;

use crate::game::{Allocation, CostGame, TuGame};
use crate::rational::Rational;

/// `SC_i = c(N) - c(N \ {i})`.
pub fn separable_costs(cost: &CostGame) -> Vec<Rational> {
    let full = cost.grand_coalition();
    (1..=cost.n()).map(|i| cost.grand() - &cost[full.without(i)]).collect()
}

/// `NSC = c(N) - Σ_j SC_j`.
pub fn nonseparable_cost(cost: &CostGame) -> Rational {
    let separable: Rational = separable_costs(cost).iter().sum();
    cost.grand() - separable
}

/// `v(S) = Σ_{i∈S} c_i - c(S)`. Singletons are always worth 0.
pub fn savings_game(cost: &CostGame) -> TuGame {
    TuGame::from_fn(cost.n(), |s| {
        let standalone: Rational = s.players().map(|i| cost.singleton(i)).sum();
        standalone - &cost[s]
    })
    .expect("cost game has a valid player count")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AcaStatus {
    Allocated,
    /// Allocated although `NSC < 0`, where practice would normally stop.
    AllocatedNegativeNSC,
    /// `Σ (c_j - SC_j) = 0` with a nonzero `NSC` to share: no proportional
    /// key exists.
    UndefinedZeroDenominator,
}

impl AcaStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            AcaStatus::Allocated => "Allocated",
            AcaStatus::AllocatedNegativeNSC => "AllocatedNegativeNSC",
            AcaStatus::UndefinedZeroDenominator => "UndefinedZeroDenominator",
        }
    }
}

impl fmt::Display for AcaStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcaResult {
    pub status: AcaStatus,
    /// Cost share `y_i` per agent.
    pub allocation: Option<Allocation>,
    pub separable: Vec<Rational>,
    pub nsc: Rational,
}

/// `y_i = SC_i + NSC (c_i - SC_i) / Σ_j (c_j - SC_j)`.
///
/// A zero denominator is only an error when there is nonseparable cost left
/// to share; with `NSC = 0` every agent pays its separable cost, which is the
/// cost-side image of the inessential savings game.
pub fn aca_allocation(cost: &CostGame) -> AcaResult {
    let separable = separable_costs(cost);
    let nsc = cost.grand() - separable.iter().sum::<Rational>();
    let avoided: Vec<Rational> =
        separable.iter().enumerate().map(|(k, sc)| cost.singleton(k + 1) - sc).collect();
    let denominator: Rational = avoided.iter().sum();
    if denominator.is_zero() && nsc.is_zero() {
        return AcaResult {
            status: AcaStatus::Allocated,
            allocation: Some(Allocation::new(separable.clone())),
            separable,
            nsc,
        };
    }
    if denominator.is_zero() {
        return AcaResult {
            status: AcaStatus::UndefinedZeroDenominator,
            allocation: None,
            separable,
            nsc,
        };
    }
    let shares = separable
        .iter()
        .zip(&avoided)
        .map(|(sc, a)| sc + &(&nsc * a) / &denominator)
        .collect();
    AcaResult {
        status: if nsc.is_negative() {
            AcaStatus::AllocatedNegativeNSC
        } else {
            AcaStatus::Allocated
        },
        allocation: Some(Allocation::new(shares)),
        separable,
        nsc,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn separable_examples() {
        assert_eq!(separable_costs(&fixtures::example3()), ints(&[7, 8, 9]));
        assert_eq!(separable_costs(&fixtures::symmetric_cost3(10, 16, 21)), ints(&[5, 5, 5]));
        assert_eq!(separable_costs(&fixtures::additive_cost3()), ints(&[2, 3, 5]));
    }

    #[test]
    fn nonseparable_examples() {
        assert_eq!(nonseparable_cost(&fixtures::example3()), Rational::from(-1));
        assert_eq!(nonseparable_cost(&fixtures::symmetric_cost3(10, 16, 21)), Rational::from(6));
        assert_eq!(nonseparable_cost(&fixtures::additive_cost3()), Rational::zero());
    }

    #[test]
    fn aca_examples() {
        let r = aca_allocation(&fixtures::example3());
        assert_eq!(r.status, AcaStatus::UndefinedZeroDenominator);
        assert_eq!(r.allocation, None);
        assert_eq!(r.nsc, Rational::from(-1));

        let r = aca_allocation(&fixtures::symmetric_cost3(10, 16, 21));
        assert_eq!(r.status, AcaStatus::Allocated);
        assert_eq!(r.allocation.unwrap().as_slice(), ints(&[7, 7, 7]).as_slice());

        let r = aca_allocation(&fixtures::additive_cost3());
        assert_eq!(r.status, AcaStatus::Allocated);
        assert_eq!(r.allocation.unwrap().as_slice(), ints(&[2, 3, 5]).as_slice());
    }

    #[test]
    fn negative_nsc_is_flagged_not_dropped() {
        let g = fixtures::three_player_cost([4, 4, 4, 7, 7, 6, 11].map(Rational::from));
        let r = aca_allocation(&g);
        assert_eq!(r.separable, ints(&[5, 4, 4]));
        assert_eq!(r.nsc, Rational::from(-2));
        assert_eq!(r.status, AcaStatus::AllocatedNegativeNSC);
        let y = r.allocation.unwrap();
        assert_eq!(y.as_slice(), ints(&[3, 4, 4]).as_slice());
    }

    #[test]
    fn savings_examples() {
        let u = savings_game(&fixtures::example3());
        assert_eq!(u, fixtures::symmetric3(0, 1, 1));
        let zero = savings_game(&fixtures::additive_cost3());
        assert!(zero.iter().all(|(_, v)| v.is_zero()));
        assert_eq!(savings_game(&fixtures::symmetric_cost3(10, 16, 21)), fixtures::symmetric3(0, 4, 9));
    }
}
