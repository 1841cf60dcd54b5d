//! Game files.
//!
//! ```text
//! {"kind": "tu", "n": 3, "values": {"1": 3, "2": 4, "1,2": 9, "3": 5, ...}}
//! ```
//!
//! `kind` is `"tu"` or `"cost"`. Keys are comma-separated, strictly
//! increasing, 1-based player indices and every nonempty coalition must be
//! present. A worth is a JSON number (read from its literal text, never via
//! `f64`) or a string holding an integer, a decimal, or `p/q`.

use std::fmt;
use std::fmt::Write as _;

use serde::de::{Deserializer, MapAccess, Visitor};
use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

use crate::coalition::{Coalition, CoalitionKeyError, MAX_PLAYERS};
use crate::game::{CostGame, GameError, TuGame};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("unknown game kind `{0}` (expected \"tu\" or \"cost\")")]
    UnknownKind(String),
    #[error("bad player count `{0}`")]
    BadPlayerCount(String),
    #[error(transparent)]
    BadCoalitionKey(#[from] CoalitionKeyError),
    #[error("bad number `{token}` for coalition `{key}`")]
    BadNumber { key: String, token: String },
    #[error(transparent)]
    Game(#[from] GameError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GameKind {
    Tu,
    Cost,
}

impl GameKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GameKind::Tu => "tu",
            GameKind::Cost => "cost",
        }
    }
}

impl fmt::Display for GameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of [`parse_game`]: the file's `kind` decides the variant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedGame {
    Tu(TuGame),
    Cost(CostGame),
}

impl ParsedGame {
    pub fn kind(&self) -> GameKind {
        match self {
            ParsedGame::Tu(_) => GameKind::Tu,
            ParsedGame::Cost(_) => GameKind::Cost,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            ParsedGame::Tu(g) => g.n(),
            ParsedGame::Cost(g) => g.n(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGame {
    kind: String,
    n: Value,
    values: RawEntries,
}

/// Keeps entries in file order and keeps repeated keys, which a map type
/// would silently merge.
struct RawEntries(Vec<(String, Value)>);

impl<'de> Deserialize<'de> for RawEntries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct EntriesVisitor;

        impl<'de> Visitor<'de> for EntriesVisitor {
            type Value = RawEntries;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an object mapping coalition keys to worths")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<RawEntries, A::Error> {
                let mut entries = Vec::new();
                while let Some((k, v)) = map.next_entry::<String, Value>()? {
                    entries.push((k, v));
                }
                Ok(RawEntries(entries))
            }
        }

        deserializer.deserialize_map(EntriesVisitor)
    }
}

fn syntax(err: serde_json::Error) -> FormatError {
    FormatError::Syntax { line: err.line(), column: err.column(), message: err.to_string() }
}

fn parse_worth(key: &str, value: &Value) -> Result<Rational, FormatError> {
    let bad = |token: String| FormatError::BadNumber { key: key.to_string(), token };
    let text = match value {
        Value::Number(num) => num.as_str().to_string(),
        Value::String(s) => s.clone(),
        other => return Err(bad(other.to_string())),
    };
    text.parse::<Rational>().map_err(|_| bad(text))
}

/// Reads a TU or cost game from the file format described in the module docs.
pub fn parse_game(text: &str) -> Result<ParsedGame, FormatError> {
    let raw: RawGame = serde_json::from_str(text).map_err(syntax)?;
    let kind = match raw.kind.as_str() {
        "tu" => GameKind::Tu,
        "cost" => GameKind::Cost,
        other => return Err(FormatError::UnknownKind(other.to_string())),
    };
    let n: usize = match &raw.n {
        Value::Number(num) => num
            .as_str()
            .parse()
            .map_err(|_| FormatError::BadPlayerCount(num.as_str().to_string()))?,
        other => return Err(FormatError::BadPlayerCount(other.to_string())),
    };
    // keys are range-checked against n, so n itself goes first
    if n == 0 {
        return Err(GameError::NoPlayers.into());
    }
    if n > MAX_PLAYERS {
        return Err(GameError::NTooLarge(n).into());
    }
    let mut entries = Vec::with_capacity(raw.values.0.len());
    for (key, value) in &raw.values.0 {
        let coalition = Coalition::parse_key(key, n)?;
        entries.push((coalition, parse_worth(key, value)?));
    }
    Ok(match kind {
        GameKind::Tu => ParsedGame::Tu(TuGame::new(n, entries)?),
        GameKind::Cost => ParsedGame::Cost(CostGame::new(n, entries)?),
    })
}

/// Integers are written as JSON numbers, everything else as `"p/q"` strings.
fn worth_token(value: &Rational) -> String {
    if value.is_integer() {
        value.to_string()
    } else {
        format!("\"{value}\"")
    }
}

fn write_game<'a, I>(kind: GameKind, n: usize, entries: I) -> String
where
    I: Iterator<Item = (Coalition, &'a Rational)>,
{
    let mut out = String::new();
    let _ = writeln!(out, "{{");
    let _ = writeln!(out, "  \"kind\": \"{kind}\",");
    let _ = writeln!(out, "  \"n\": {n},");
    let _ = writeln!(out, "  \"values\": {{");
    let lines: Vec<String> =
        entries.map(|(s, v)| format!("    \"{}\": {}", s.key(), worth_token(v))).collect();
    let _ = writeln!(out, "{}", lines.join(",\n"));
    let _ = writeln!(out, "  }}");
    let _ = writeln!(out, "}}");
    out
}

/// Canonical text for a TU game: coalitions in increasing bitmask order.
pub fn serialize_tu_game(game: &TuGame) -> String {
    write_game(GameKind::Tu, game.n(), game.iter())
}

pub fn serialize_cost_game(game: &CostGame) -> String {
    write_game(GameKind::Cost, game.n(), game.iter())
}

pub fn serialize_game(game: &ParsedGame) -> String {
    match game {
        ParsedGame::Tu(g) => serialize_tu_game(g),
        ParsedGame::Cost(g) => serialize_cost_game(g),
    }
}
