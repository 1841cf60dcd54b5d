//! TU games, cost games and payoff vectors.

use std::ops::Index;

use thiserror::Error;

use crate::coalition::{Coalition, MAX_PLAYERS};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("player count must be at least 1")]
    NoPlayers,
    #[error("player count {0} exceeds the supported maximum of {MAX_PLAYERS}")]
    NTooLarge(usize),
    #[error("no worth given for coalition {0}")]
    MissingCoalition(Coalition),
    #[error("coalition {0} given more than once")]
    DuplicateCoalition(Coalition),
    #[error("player {player} is out of range 1..={n}")]
    PlayerOutOfRange { player: usize, n: usize },
    #[error("the empty coalition must be worth 0, got {0}")]
    NonzeroEmptyCoalition(Rational),
}

/// Dense table of worths indexed by coalition bitmask; slot 0 holds the
/// implicit zero of the empty coalition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Table {
    n: usize,
    values: Vec<Rational>,
}

impl Table {
    fn check_n(n: usize) -> Result<(), GameError> {
        match n {
            0 => Err(GameError::NoPlayers),
            n if n > MAX_PLAYERS => Err(GameError::NTooLarge(n)),
            _ => Ok(()),
        }
    }

    fn build<I>(n: usize, entries: I) -> Result<Table, GameError>
    where
        I: IntoIterator<Item = (Coalition, Rational)>,
    {
        Table::check_n(n)?;
        let mut slots: Vec<Option<Rational>> = vec![None; 1 << n];
        let mut empty_seen = false;
        for (s, value) in entries {
            if s.max_player() > n {
                return Err(GameError::PlayerOutOfRange { player: s.max_player(), n });
            }
            if s.is_empty() {
                if empty_seen {
                    return Err(GameError::DuplicateCoalition(s));
                }
                empty_seen = true;
                if !value.is_zero() {
                    return Err(GameError::NonzeroEmptyCoalition(value));
                }
                continue;
            }
            let slot = &mut slots[s.index()];
            if slot.is_some() {
                return Err(GameError::DuplicateCoalition(s));
            }
            *slot = Some(value);
        }
        let mut values = Vec::with_capacity(1 << n);
        values.push(Rational::zero());
        for (bits, slot) in slots.into_iter().enumerate().skip(1) {
            let value = slot.ok_or(GameError::MissingCoalition(Coalition::from_bits(bits as u32)))?;
            values.push(value);
        }
        Ok(Table { n, values })
    }

    fn from_fn<F>(n: usize, mut f: F) -> Result<Table, GameError>
    where
        F: FnMut(Coalition) -> Rational,
    {
        Table::check_n(n)?;
        let values = Coalition::all(n)
            .map(|s| if s.is_empty() { Rational::zero() } else { f(s) })
            .collect();
        Ok(Table { n, values })
    }

    fn get(&self, s: Coalition) -> Result<&Rational, GameError> {
        if s.max_player() > self.n {
            return Err(GameError::PlayerOutOfRange { player: s.max_player(), n: self.n });
        }
        Ok(&self.values[s.index()])
    }
}

/// A transferable-utility game in characteristic function form.
///
/// Holds a worth for every one of the `2^n - 1` nonempty coalitions; the
/// empty coalition is worth zero. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TuGame {
    table: Table,
}

impl TuGame {
    /// Validated construction from an explicit coalition → worth listing.
    ///
    /// Every nonempty coalition of `{1, …, n}` must appear exactly once. An
    /// entry for the empty coalition is tolerated if it is zero.
    pub fn new<I>(n: usize, values: I) -> Result<TuGame, GameError>
    where
        I: IntoIterator<Item = (Coalition, Rational)>,
    {
        Table::build(n, values).map(|table| TuGame { table })
    }

    /// Builds a game by evaluating `f` on every nonempty coalition.
    pub fn from_fn<F>(n: usize, f: F) -> Result<TuGame, GameError>
    where
        F: FnMut(Coalition) -> Rational,
    {
        Table::from_fn(n, f).map(|table| TuGame { table })
    }

    pub fn n(&self) -> usize {
        self.table.n
    }

    pub fn grand_coalition(&self) -> Coalition {
        Coalition::grand(self.table.n)
    }

    /// `v(S)`, with `v(∅) = 0`.
    pub fn value(&self, s: Coalition) -> Result<&Rational, GameError> {
        self.table.get(s)
    }

    /// `v({i})` for a 1-based player index. Panics if `i` is out of range.
    pub fn singleton(&self, i: usize) -> &Rational {
        assert!((1..=self.n()).contains(&i), "player {i} out of range");
        &self.table.values[Coalition::singleton(i).index()]
    }

    /// `v(N)`.
    pub fn grand(&self) -> &Rational {
        self.table.values.last().expect("table is never empty")
    }

    /// `(v_1, …, v_n)`.
    pub fn singletons(&self) -> Vec<Rational> {
        (1..=self.n()).map(|i| self.singleton(i).clone()).collect()
    }

    /// `(S, v(S))` over nonempty coalitions in increasing bitmask order.
    pub fn iter(&self) -> impl Iterator<Item = (Coalition, &Rational)> {
        self.table
            .values
            .iter()
            .enumerate()
            .skip(1)
            .map(|(bits, v)| (Coalition::from_bits(bits as u32), v))
    }
}

impl Index<Coalition> for TuGame {
    type Output = Rational;

    /// Panics on players outside `1..=n`; [`TuGame::value`] is the checked form.
    fn index(&self, s: Coalition) -> &Rational {
        self.table.get(s).expect("coalition out of range")
    }
}

/// A cost game: `c(S)` is the cost of serving coalition `S` jointly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CostGame {
    table: Table,
}

impl CostGame {
    pub fn new<I>(n: usize, costs: I) -> Result<CostGame, GameError>
    where
        I: IntoIterator<Item = (Coalition, Rational)>,
    {
        Table::build(n, costs).map(|table| CostGame { table })
    }

    pub fn from_fn<F>(n: usize, f: F) -> Result<CostGame, GameError>
    where
        F: FnMut(Coalition) -> Rational,
    {
        Table::from_fn(n, f).map(|table| CostGame { table })
    }

    pub fn n(&self) -> usize {
        self.table.n
    }

    pub fn grand_coalition(&self) -> Coalition {
        Coalition::grand(self.table.n)
    }

    pub fn cost(&self, s: Coalition) -> Result<&Rational, GameError> {
        self.table.get(s)
    }

    /// `c({i})`. Panics if `i` is out of range.
    pub fn singleton(&self, i: usize) -> &Rational {
        assert!((1..=self.n()).contains(&i), "player {i} out of range");
        &self.table.values[Coalition::singleton(i).index()]
    }

    pub fn grand(&self) -> &Rational {
        self.table.values.last().expect("table is never empty")
    }

    pub fn iter(&self) -> impl Iterator<Item = (Coalition, &Rational)> {
        self.table
            .values
            .iter()
            .enumerate()
            .skip(1)
            .map(|(bits, v)| (Coalition::from_bits(bits as u32), v))
    }
}

impl Index<Coalition> for CostGame {
    type Output = Rational;

    fn index(&self, s: Coalition) -> &Rational {
        self.table.get(s).expect("coalition out of range")
    }
}

/// A payoff (or cost share) per player. Index 0 is player 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Allocation(Vec<Rational>);

impl Allocation {
    pub fn new(payoffs: Vec<Rational>) -> Self {
        Allocation(payoffs)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Payoff of 1-based player `i`.
    pub fn payoff(&self, i: usize) -> &Rational {
        &self.0[i - 1]
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn total(&self) -> Rational {
        self.0.iter().sum()
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.0
    }
}

impl From<Vec<Rational>> for Allocation {
    fn from(v: Vec<Rational>) -> Self {
        Allocation(v)
    }
}

impl Index<usize> for Allocation {
    type Output = Rational;

    /// Zero-based.
    fn index(&self, idx: usize) -> &Rational {
        &self.0[idx]
    }
}

impl<'a> IntoIterator for &'a Allocation {
    type Item = &'a Rational;
    type IntoIter = std::slice::Iter<'a, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
