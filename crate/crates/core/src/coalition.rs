use std::fmt;

use thiserror::Error;

/// Largest supported player count. A game stores `2^n - 1` worths.
pub const MAX_PLAYERS: usize = 16;

/// A set of players, stored as a bitmask: player `i` (1-based) is bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Coalition(u32);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoalitionKeyError {
    #[error("bad coalition key `{0}`: expected comma-separated, strictly increasing 1-based indices")]
    Malformed(String),
    #[error("player {player} in key `{key}` is out of range 1..={n}")]
    PlayerOutOfRange { key: String, player: usize, n: usize },
}

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn from_bits(bits: u32) -> Self {
        Coalition(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// Bitmask index into a `2^n` table.
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// `{1, …, n}`.
    pub fn grand(n: usize) -> Self {
        debug_assert!(n <= MAX_PLAYERS);
        Coalition(((1u64 << n) - 1) as u32)
    }

    /// `{i}` for a 1-based player index.
    pub fn singleton(i: usize) -> Self {
        debug_assert!((1..=32).contains(&i));
        Coalition(1 << (i - 1))
    }

    /// Builds a coalition from 1-based indices. Returns `None` for index 0 or
    /// indices above 32.
    pub fn from_players<I: IntoIterator<Item = usize>>(players: I) -> Option<Self> {
        let mut bits = 0u32;
        for p in players {
            if !(1..=32).contains(&p) {
                return None;
            }
            bits |= 1 << (p - 1);
        }
        Some(Coalition(bits))
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=32).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: Coalition) -> Coalition {
        Coalition(self.0 | other.0)
    }

    pub fn is_disjoint(self, other: Coalition) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn with(self, i: usize) -> Coalition {
        self.union(Coalition::singleton(i))
    }

    pub fn without(self, i: usize) -> Coalition {
        Coalition(self.0 & !Coalition::singleton(i).0)
    }

    /// Highest member index, 0 for the empty coalition.
    pub fn max_player(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    /// Members in increasing order, 1-based.
    pub fn players(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (1..=32usize).filter(move |&i| bits & (1 << (i - 1)) != 0)
    }

    /// All coalitions of `n` players, empty first, in increasing bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = Coalition> {
        (0..(1u32 << n)).map(Coalition)
    }

    /// Every subset of `self`, including the empty set and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets { full: self.0, next: Some(self.0) }
    }

    /// File key: comma-separated increasing indices, `""` for the empty set.
    pub fn key(self) -> String {
        self.players().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }

    /// Parses a file key for an `n`-player game.
    pub fn parse_key(key: &str, n: usize) -> Result<Coalition, CoalitionKeyError> {
        let malformed = || CoalitionKeyError::Malformed(key.to_string());
        if key.trim().is_empty() {
            return Ok(Coalition::EMPTY);
        }
        let mut bits = 0u32;
        let mut last = 0usize;
        for part in key.split(',') {
            let part = part.trim();
            if part.is_empty() || !part.bytes().all(|c| c.is_ascii_digit()) {
                return Err(malformed());
            }
            let player: usize = part.parse().map_err(|_| malformed())?;
            if player == 0 || player > n {
                return Err(CoalitionKeyError::PlayerOutOfRange {
                    key: key.to_string(),
                    player,
                    n,
                });
            }
            if player <= last {
                return Err(malformed());
            }
            last = player;
            bits |= 1 << (player - 1);
        }
        Ok(Coalition(bits))
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.key())
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.key())
    }
}

/// Submask enumeration, descending from the full mask down to the empty set.
pub struct Subsets {
    full: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = Coalition;

    fn next(&mut self) -> Option<Coalition> {
        let current = self.next?;
        self.next = if current == 0 {
            None
        } else {
            Some((current - 1) & self.full)
        };
        Some(Coalition(current))
    }
}
