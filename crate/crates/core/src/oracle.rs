//! Brute-force cross-checks for the closed forms.
//!
//! Nothing here calls into the solver modules' formulas: the grid search
//! minimizes the largest propensity to disrupt by enumeration, and
//! [`recompute_by_definition`] re-derives every vector and flag with its own
//! plain loops. The seeded generators feed the property and acceptance tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::coalition::Coalition;
use crate::game::{Allocation, CostGame, TuGame};
use crate::properties::{self, GameClassification};
use crate::rational::Rational;
use crate::transforms::zero_normalize;

/// Grid search is limited to this many players.
pub const MAX_GRID_PLAYERS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("game is not essential; the imputation set has no interior")]
    NotEssential,
    #[error("grid search supports at most {MAX_GRID_PLAYERS} players, got {0}")]
    TooManyPlayers(usize),
    #[error("resolution {resolution} leaves no interior grid point for {n} players")]
    ResolutionTooSmall { resolution: u32, n: usize },
    #[error("generator supports 2 to 4 players, got {0}")]
    UnsupportedPlayerCount(usize),
    #[error("no {class:?} game found for seed {seed} after {attempts} attempts")]
    GenerationFailed { seed: u64, class: GameClass, attempts: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSearchReport {
    pub best_point: Allocation,
    /// `max_i d(i, best_point)`.
    pub best_minmax: Rational,
    pub resolution: u32,
}

/// Minimizes `max_i d(i, x)` over the interior lattice of the imputation
/// simplex.
///
/// Points are `x_i = v_i + k_i h` with `h = (v(N) - Σv) / resolution`, every
/// `k_i ≥ 1` and `Σ k_i = resolution`, so all of them are efficient and
/// strictly individually rational. Ties go to the lexicographically smallest
/// point.
pub fn grid_minmax_propensity(game: &TuGame, resolution: u32) -> Result<GridSearchReport, OracleError> {
    let n = game.n();
    if n > MAX_GRID_PLAYERS {
        return Err(OracleError::TooManyPlayers(n));
    }
    let lower = game.singletons();
    let surplus = game.grand() - lower.iter().sum::<Rational>();
    if !surplus.is_positive() {
        return Err(OracleError::NotEssential);
    }
    if (resolution as usize) < n {
        return Err(OracleError::ResolutionTooSmall { resolution, n });
    }
    let full = game.grand_coalition();
    let utopia: Vec<Rational> = (1..=n).map(|i| game.grand() - &game[full.without(i)]).collect();
    let step = &surplus / Rational::from(resolution as i64);

    // With x_i - v_i = k_i h:  d(i, x) = (M_i - v_i) / (k_i h) - 1.
    let weight: Vec<Rational> =
        utopia.iter().zip(&lower).map(|(m, v)| (m - v) / &step).collect();

    let mut best: Option<(Rational, Vec<u32>)> = None;
    let mut counts = vec![1u32; n];
    counts[n - 1] = resolution - (n as u32 - 1);
    loop {
        let worst = counts
            .iter()
            .zip(&weight)
            .map(|(&k, w)| w / Rational::from(k as i64))
            .max()
            .expect("n ≥ 1");
        if best.as_ref().is_none_or(|(b, _)| worst < *b) {
            best = Some((worst, counts.clone()));
        }
        if !next_composition(&mut counts) {
            break;
        }
    }
    let (worst, counts) = best.expect("at least one interior point");
    let point = lower
        .iter()
        .zip(&counts)
        .map(|(v, &k)| v + &step * Rational::from(k as i64))
        .collect();
    Ok(GridSearchReport {
        best_point: Allocation::new(point),
        best_minmax: worst - Rational::one(),
        resolution,
    })
}

/// Advances a composition of a fixed total into positive parts to the next
/// one in lexicographic order. Returns `false` after the last.
fn next_composition(parts: &mut [u32]) -> bool {
    let n = parts.len();
    let mut rest = 0;
    for i in (0..n.saturating_sub(1)).rev() {
        rest += parts[i + 1];
        let tail_len = (n - i - 1) as u32;
        if rest > tail_len {
            parts[i] += 1;
            parts[i + 1..].fill(1);
            parts[n - 1] = rest - tail_len;
            return true;
        }
    }
    false
}

/// Utopia vector, minimal rights and classification flags, each recomputed
/// straight from its definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefinitionRecomputation {
    pub utopia: Vec<Rational>,
    pub minimal_rights: Vec<Rational>,
    pub classification: GameClassification,
}

/// Independent recomputation for differential tests.
///
/// Coalitions are built from explicit player lists rather than bitmask
/// arithmetic, and superadditivity checks every ordered disjoint pair, so the
/// cost is `O(4^n)`: meant for small games.
pub fn recompute_by_definition(game: &TuGame) -> DefinitionRecomputation {
    let n = game.n();
    let players: Vec<usize> = (1..=n).collect();
    let coalition = |members: &[usize]| Coalition::from_players(members.iter().copied()).unwrap();
    let worth = |members: &[usize]| game[coalition(members)].clone();
    let grand = worth(&players);
    let single: Vec<Rational> = players.iter().map(|&i| worth(&[i])).collect();
    let all_but = |i: usize| -> Vec<usize> { players.iter().copied().filter(|&j| j != i).collect() };

    let utopia: Vec<Rational> = players.iter().map(|&i| &grand - worth(&all_but(i))).collect();

    let subsets: Vec<Vec<usize>> = (0u32..(1 << n))
        .map(|mask| players.iter().copied().filter(|&p| mask & (1 << (p - 1)) != 0).collect())
        .collect();

    let mut minimal_rights = Vec::with_capacity(n);
    for &i in &players {
        let mut best: Option<Rational> = None;
        for s in subsets.iter().filter(|s| s.contains(&i)) {
            let mut r = worth(s);
            for &j in s.iter().filter(|&&j| j != i) {
                r -= &utopia[j - 1];
            }
            if best.as_ref().is_none_or(|b| &r > b) {
                best = Some(r);
            }
        }
        minimal_rights.push(best.unwrap());
    }

    let single_total: Rational = single.iter().sum();
    let essential = single_total < grand;

    let mut weakly_superadditive = true;
    for s in &subsets {
        for &i in players.iter().filter(|i| !s.contains(i)) {
            let mut joined = s.clone();
            joined.push(i);
            joined.sort_unstable();
            let lhs = worth(&joined);
            let rhs = if s.is_empty() { single[i - 1].clone() } else { worth(s) + &single[i - 1] };
            if lhs < rhs {
                weakly_superadditive = false;
            }
        }
    }

    let mut superadditive = true;
    for s in subsets.iter().filter(|s| !s.is_empty()) {
        for t in subsets.iter().filter(|t| !t.is_empty()) {
            if s.iter().any(|p| t.contains(p)) {
                continue;
            }
            let mut joined: Vec<usize> = s.iter().chain(t.iter()).copied().collect();
            joined.sort_unstable();
            if worth(&joined) < worth(s) + worth(t) {
                superadditive = false;
            }
        }
    }

    let weakly_constant_sum =
        players.iter().all(|&i| &single[i - 1] + worth(&all_but(i)) == grand);

    let quasibalanced = minimal_rights.iter().zip(&utopia).all(|(m, u)| m <= u)
        && minimal_rights.iter().sum::<Rational>() <= grand
        && grand <= utopia.iter().sum::<Rational>();

    DefinitionRecomputation {
        utopia,
        minimal_rights,
        classification: GameClassification {
            essential,
            inessential: superadditive && single_total == grand,
            weakly_superadditive,
            superadditive,
            weakly_constant_sum,
            quasibalanced,
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GameClass {
    Superadditive,
    Quasibalanced,
    WeaklyConstantSum,
    Arbitrary,
}

impl GameClass {
    pub const ALL: [GameClass; 4] = [
        GameClass::Superadditive,
        GameClass::Quasibalanced,
        GameClass::WeaklyConstantSum,
        GameClass::Arbitrary,
    ];

    fn salt(self) -> u64 {
        match self {
            GameClass::Superadditive => 0x5u64,
            GameClass::Quasibalanced => 0x9,
            GameClass::WeaklyConstantSum => 0xc,
            GameClass::Arbitrary => 0xa,
        }
    }
}

const MAX_ATTEMPTS: usize = 10_000;

/// A rational in `[lo, hi]` with denominator dividing 12.
fn sample(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rational {
    Rational::new(rng.random_range(lo * 12..=hi * 12), 12)
}

fn sample_fraction(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.random_range(0..=12), 12)
}

/// Deterministic random game of the requested class for `n` in `2..=4`.
///
/// Every draw is re-checked with [`properties`] and redrawn until it belongs
/// to the class. Superadditive games are built bottom-up from their best
/// split; the other classes fix singletons and `v(N)` first. All classes but
/// `Arbitrary` (and weakly constant-sum at `n = 2`) come out essential.
pub fn generate_game(seed: u64, n: usize, class: GameClass) -> Result<TuGame, OracleError> {
    if !(2..=4).contains(&n) {
        return Err(OracleError::UnsupportedPlayerCount(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (class.salt() << 56) ^ ((n as u64) << 48));
    for _ in 0..MAX_ATTEMPTS {
        let game = match class {
            GameClass::Arbitrary => draw_arbitrary(&mut rng, n),
            GameClass::Superadditive => draw_superadditive(&mut rng, n),
            GameClass::Quasibalanced => draw_interval(&mut rng, n),
            GameClass::WeaklyConstantSum => draw_weakly_constant_sum(&mut rng, n),
        };
        let accepted = match class {
            GameClass::Arbitrary => true,
            GameClass::Superadditive => properties::is_superadditive(&game),
            GameClass::Quasibalanced => properties::is_quasibalanced(&game),
            GameClass::WeaklyConstantSum => properties::is_weakly_constant_sum(&game),
        };
        if accepted {
            return Ok(game);
        }
    }
    Err(OracleError::GenerationFailed { seed, class, attempts: MAX_ATTEMPTS })
}

fn draw_arbitrary(rng: &mut ChaCha8Rng, n: usize) -> TuGame {
    TuGame::from_fn(n, |_| sample(rng, -10, 20)).unwrap()
}

/// Bottom-up: each coalition is worth at least its best two-block split.
fn draw_superadditive(rng: &mut ChaCha8Rng, n: usize) -> TuGame {
    let full = Coalition::grand(n);
    let mut worth: Vec<Rational> = vec![Rational::zero(); 1 << n];
    for s in Coalition::all(n).skip(1) {
        worth[s.index()] = if s.len() == 1 {
            sample(rng, -5, 10)
        } else {
            let best_split = s
                .subsets()
                .filter(|a| !a.is_empty() && *a != s)
                .map(|a| &worth[a.index()] + &worth[s.index() ^ a.index()])
                .max()
                .unwrap();
            // the grand coalition gets a strictly positive bonus: essential
            let bonus = if s == full {
                Rational::new(rng.random_range(1..=60), 12)
            } else {
                sample(rng, 0, 5)
            };
            best_split + bonus
        };
    }
    TuGame::from_fn(n, |s| worth[s.index()].clone()).unwrap()
}

/// Singletons, then `v(N) = Σv + surplus`, then every other coalition at
/// `Σ_{i∈S} v_i + u·surplus` with `u ∈ [0, 1]`.
fn draw_interval(rng: &mut ChaCha8Rng, n: usize) -> TuGame {
    let single: Vec<Rational> = (0..n).map(|_| sample(rng, -5, 10)).collect();
    let surplus = Rational::new(rng.random_range(12..=120), 12);
    let full = Coalition::grand(n);
    TuGame::from_fn(n, |s| {
        let base: Rational = s.players().map(|i| &single[i - 1]).sum();
        if s.len() == 1 {
            base
        } else if s == full {
            base + &surplus
        } else {
            base + sample_fraction(rng) * &surplus
        }
    })
    .unwrap()
}

/// `v(N \ {i}) = v(N) - v_i` for every `i`. Essential for `n ≥ 3`; for
/// `n = 2` the class forces `v(N) = v_1 + v_2`.
fn draw_weakly_constant_sum(rng: &mut ChaCha8Rng, n: usize) -> TuGame {
    let single: Vec<Rational> = (0..n).map(|_| sample(rng, -5, 10)).collect();
    let single_total: Rational = single.iter().sum();
    let grand = if n == 2 {
        single_total.clone()
    } else {
        &single_total + Rational::new(rng.random_range(1..=120), 12)
    };
    let surplus = &grand - &single_total;
    let full = Coalition::grand(n);
    TuGame::from_fn(n, |s| {
        let base: Rational = s.players().map(|i| &single[i - 1]).sum();
        if s == full {
            grand.clone()
        } else if s.len() == 1 {
            base
        } else if s.len() == n - 1 {
            let outsider = full.bits() & !s.bits();
            &grand - &single[outsider.trailing_zeros() as usize]
        } else {
            base + sample_fraction(rng) * &surplus
        }
    })
    .unwrap()
}

/// Cost game whose savings game is the 0-normalization of
/// `generate_game(seed, n, class)`, with stand-alone costs in `[5, 20]`.
pub fn generate_cost_game(seed: u64, n: usize, class: GameClass) -> Result<CostGame, OracleError> {
    let savings = zero_normalize(&generate_game(seed, n, class)?);
    let mut rng = ChaCha8Rng::seed_from_u64(seed.rotate_left(17) ^ 0xc057);
    let standalone: Vec<Rational> = (0..n).map(|_| sample(&mut rng, 5, 20)).collect();
    Ok(CostGame::from_fn(n, |s| {
        let total: Rational = s.players().map(|i| &standalone[i - 1]).sum();
        total - &savings[s]
    })
    .unwrap())
}

/// Random `α > 0` and shift `a` for strategic-equivalence checks.
pub fn random_affine(seed: u64, n: usize) -> (Rational, Vec<Rational>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xaff1_4e00);
    let scale = Rational::new(rng.random_range(1..=48), rng.random_range(1..=12));
    let shift = (0..n).map(|_| sample(&mut rng, -10, 10)).collect();
    (scale, shift)
}
