use gately_core::gately::{equal_propensity, gately_point, propensity_to_disrupt, utopia_payoffs, GatelyStatus};
use gately_core::oracle::{generate_game, random_affine, GameClass};
use gately_core::properties::is_essential;
use gately_core::transforms::{strategic_equivalent, zero_normalize, zero_one_normalize};
use gately_core::{Rational, TuGame};

fn essential_games() -> Vec<(String, TuGame)> {
    let mut out = Vec::new();
    for class in GameClass::ALL {
        for n in 2..=4 {
            for seed in 0..150 {
                let game = generate_game(seed, n, class).unwrap();
                if is_essential(&game) {
                    out.push((format!("{class:?} n={n} seed={seed}"), game));
                }
            }
        }
    }
    out
}

#[test]
fn unique_points_satisfy_every_identity() {
    let mut checked = 0;
    for (seed, (ctx, game)) in essential_games().into_iter().enumerate() {
        let r = gately_point(&game);
        if r.status != GatelyStatus::UniqueImputation {
            continue;
        }
        checked += 1;
        let x = r.point.unwrap();
        let d_star = r.d_star.unwrap();
        let t = r.line_parameter.unwrap();
        let utopia = utopia_payoffs(&game);
        assert_eq!(&x.total(), game.grand(), "{ctx}");
        for i in 1..=game.n() {
            let v_i = game.singleton(i);
            assert_eq!(x.payoff(i), &(v_i + &t * &(utopia.get(i) - v_i)), "{ctx}");
            if utopia.get(i) != v_i {
                assert_eq!(propensity_to_disrupt(&game, &x, i).unwrap(), d_star, "{ctx}");
            }
        }

        let w = zero_normalize(&game);
        let xw = gately_point(&w).point.unwrap();
        for i in 1..=game.n() {
            assert_eq!(xw.payoff(i), &(x.payoff(i) - game.singleton(i)), "{ctx}");
        }

        let (scale, shift) = random_affine(seed as u64, game.n());
        let h = strategic_equivalent(&game, &scale, &shift).unwrap();
        let rh = gately_point(&h);
        assert_eq!(rh.status, GatelyStatus::UniqueImputation, "{ctx}");
        assert_eq!(rh.d_star, Some(d_star), "{ctx}");
        let xh = rh.point.unwrap();
        for i in 1..=game.n() {
            assert_eq!(xh.payoff(i), &(&scale * x.payoff(i) + &shift[i - 1]), "{ctx}");
        }
    }
    assert!(checked > 500, "only {checked} games checked");
}

#[test]
fn normalization_invariants() {
    for (ctx, game) in essential_games() {
        let w = zero_normalize(&game);
        assert_eq!(zero_normalize(&w), w, "{ctx}");
        let u = zero_one_normalize(&game).unwrap();
        assert_eq!(zero_one_normalize(&u).unwrap(), u, "{ctx}");
        assert_eq!(zero_one_normalize(&w).unwrap(), u, "{ctx}");
        assert!(u.singletons().iter().all(Rational::is_zero), "{ctx}");
        assert_eq!(u.grand(), &Rational::one(), "{ctx}");

        let d = equal_propensity(&game).unwrap();
        assert_eq!(equal_propensity(&w).unwrap(), d, "{ctx}");
        assert_eq!(equal_propensity(&u).unwrap(), d, "{ctx}");

        let status = gately_point(&game).status;
        assert_eq!(gately_point(&w).status, status, "{ctx}");
        assert_eq!(gately_point(&u).status, status, "{ctx}");
    }
}

#[test]
fn tau_value_on_quasibalanced_games() {
    use gately_core::tau::{tau_value, TauStatus};
    for n in 2..=4 {
        for seed in 0..150 {
            let game = generate_game(seed, n, GameClass::Quasibalanced).unwrap();
            let r = tau_value(&game);
            assert_ne!(r.status, TauStatus::NotQuasibalanced);
            let point = r.point.unwrap();
            assert_eq!(&point.total(), game.grand());
            for i in 1..=n {
                let (m, big_m) = (r.minimal_rights.get(i), r.utopia.get(i));
                assert!(m <= point.payoff(i) && point.payoff(i) <= big_m);
                assert!(game.singleton(i) <= m);
            }
            if r.status == TauStatus::DegenerateEndpoints {
                assert_eq!(equal_propensity(&game).unwrap(), Rational::zero());
            }
        }
    }
}

#[test]
fn tau_degenerate_fixture() {
    use gately_core::fixtures;
    use gately_core::tau::{tau_value, TauStatus};
    let game = fixtures::symmetric3(0, 2, 3);
    let r = tau_value(&game);
    let ones = vec![Rational::one(); 3];
    assert_eq!(r.status, TauStatus::DegenerateEndpoints);
    assert_eq!(r.minimal_rights.as_slice(), ones.as_slice());
    assert_eq!(r.utopia.as_slice(), ones.as_slice());
    assert_eq!(r.point.unwrap().as_slice(), ones.as_slice());
    assert_eq!(equal_propensity(&game).unwrap(), Rational::zero());
}
