use gately_core::cost::{aca_allocation, savings_game, AcaStatus};
use gately_core::gately::{gately_point, GatelyStatus};
use gately_core::oracle::{generate_cost_game, GameClass};
use gately_core::CostGame;

fn cost_games(n: usize, per_class: u64) -> impl Iterator<Item = (String, CostGame)> {
    GameClass::ALL.into_iter().flat_map(move |class| {
        (0..per_class).map(move |seed| {
            (format!("{class:?} n={n} seed={seed}"), generate_cost_game(seed, n, class).unwrap())
        })
    })
}

#[test]
fn aca_saves_exactly_the_gately_point() {
    let mut checked = 0;
    for (ctx, cost) in cost_games(3, 200) {
        let x = gately_point(&savings_game(&cost));
        if x.status != GatelyStatus::UniqueImputation {
            continue;
        }
        let y = aca_allocation(&cost).allocation.unwrap();
        for i in 1..=3 {
            assert_eq!(&(cost.singleton(i) - y.payoff(i)), x.point.as_ref().unwrap().payoff(i), "{ctx}");
        }
        checked += 1;
    }
    assert!(checked >= 200, "only {checked} cost games checked");
}

#[test]
fn duality_holds_off_the_imputation_set_too() {
    for n in 2..=4 {
        for (ctx, cost) in cost_games(n, 100) {
            let x = gately_point(&savings_game(&cost));
            if !matches!(x.status, GatelyStatus::UniqueImputation | GatelyStatus::OutsideImputationSet) {
                continue;
            }
            let y = aca_allocation(&cost).allocation.unwrap();
            for i in 1..=n {
                assert_eq!(&(cost.singleton(i) - y.payoff(i)), x.point.as_ref().unwrap().payoff(i), "{ctx}");
            }
        }
    }
}

#[test]
fn failures_correspond() {
    let mut undefined = 0;
    for n in 2..=4 {
        for (ctx, cost) in cost_games(n, 100) {
            let gately = gately_point(&savings_game(&cost)).status;
            let aca = aca_allocation(&cost);
            if gately == GatelyStatus::UndefinedEqualPropensityMinusOne {
                undefined += 1;
                assert_eq!(aca.status, AcaStatus::UndefinedZeroDenominator, "{ctx}");
            }
            if aca.status == AcaStatus::UndefinedZeroDenominator {
                assert!(
                    matches!(gately, GatelyStatus::UndefinedEqualPropensityMinusOne | GatelyStatus::NotEssential),
                    "{ctx}: {gately}"
                );
            }
            assert_eq!(aca.nsc.is_negative(), aca.status == AcaStatus::AllocatedNegativeNSC || (aca.nsc.is_negative() && aca.status == AcaStatus::UndefinedZeroDenominator), "{ctx}");
        }
    }
    assert!(undefined > 0);
}
