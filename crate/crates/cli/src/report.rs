//! Command reports and their two renderings.

use std::fmt::Write as _;

use gately_core::Rational;
use serde_json::{json, Map, Value};

/// Decimal places in the display-only approximations.
pub const DECIMAL_PLACES: usize = 6;

/// Outcome of one command. Every rational is rendered exactly and as a
/// six-place decimal.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    /// SHA-256 of the canonical serialization of the input game.
    pub input_digest: String,
    pub status: String,
    pub vectors: Vec<(String, Vec<Rational>)>,
    pub scalars: Vec<(String, Rational)>,
    pub flags: Vec<(String, bool)>,
    pub messages: Vec<String>,
    /// Canonical game text, for commands that produce a game.
    pub game: Option<String>,
}

impl Report {
    pub fn new(command: &str, input_digest: String, status: &str) -> Self {
        Report {
            command: command.to_string(),
            input_digest,
            status: status.to_string(),
            vectors: Vec::new(),
            scalars: Vec::new(),
            flags: Vec::new(),
            messages: Vec::new(),
            game: None,
        }
    }

    pub fn vector(&mut self, name: &str, values: &[Rational]) -> &mut Self {
        self.vectors.push((name.to_string(), values.to_vec()));
        self
    }

    pub fn scalar(&mut self, name: &str, value: Rational) -> &mut Self {
        self.scalars.push((name.to_string(), value));
        self
    }

    pub fn flag(&mut self, name: &str, value: bool) -> &mut Self {
        self.flags.push((name.to_string(), value));
        self
    }

    pub fn message(&mut self, text: impl Into<String>) -> &mut Self {
        self.messages.push(text.into());
        self
    }

    pub fn to_structured(&self) -> Value {
        let vectors: Map<String, Value> = self
            .vectors
            .iter()
            .map(|(name, values)| (name.clone(), Value::Array(values.iter().map(number).collect())))
            .collect();
        let scalars: Map<String, Value> =
            self.scalars.iter().map(|(name, value)| (name.clone(), number(value))).collect();
        let flags: Map<String, Value> =
            self.flags.iter().map(|(name, value)| (name.clone(), Value::Bool(*value))).collect();
        let mut out = json!({
            "command": self.command,
            "input_digest": self.input_digest,
            "status": self.status,
            "vectors": vectors,
            "scalars": scalars,
            "flags": flags,
            "messages": self.messages,
        });
        if let Some(game) = &self.game {
            let parsed: Value = serde_json::from_str(game).expect("canonical game text is JSON");
            out["game"] = parsed;
        }
        out
    }

    pub fn render_structured(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.to_structured()).expect("report serializes");
        text.push('\n');
        text
    }

    /// One quantity per line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "input_digest: {}", self.input_digest);
        let _ = writeln!(out, "status: {}", self.status);
        for (name, values) in &self.vectors {
            for (k, value) in values.iter().enumerate() {
                let _ = writeln!(out, "{name}[{}] = {}", k + 1, exact_and_approx(value));
            }
        }
        for (name, value) in &self.scalars {
            let _ = writeln!(out, "{name} = {}", exact_and_approx(value));
        }
        for (name, value) in &self.flags {
            let _ = writeln!(out, "{name}: {value}");
        }
        if let Some(game) = &self.game {
            if let Ok(gately_core::ParsedGame::Tu(g)) = gately_core::parse_game(game) {
                for (s, value) in g.iter() {
                    let _ = writeln!(out, "v({}) = {}", s.key(), exact_and_approx(value));
                }
            }
        }
        for message in &self.messages {
            let _ = writeln!(out, "message: {message}");
        }
        out
    }
}

fn number(value: &Rational) -> Value {
    json!({
        "exact": value.to_string(),
        "approx": value.to_decimal_string(DECIMAL_PLACES),
    })
}

fn exact_and_approx(value: &Rational) -> String {
    format!("{value} ({})", value.to_decimal_string(DECIMAL_PLACES))
}

/// Reads an exact rational back out of a structured `{exact, approx}` entry.
pub fn exact_from_structured(entry: &Value) -> Option<Rational> {
    entry.get("exact")?.as_str()?.parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("gately", "00".into(), "UniqueImputation");
        r.vector("x", &[Rational::new(23, 6), Rational::new(29, 6)])
            .scalar("d_star", Rational::new(-2, 5))
            .flag("essential", true)
            .message("hello");
        r
    }

    #[test]
    fn text_lines() {
        let text = sample().render_text();
        assert!(text.contains("x[1] = 23/6 (3.833333)\n"));
        assert!(text.contains("d_star = -2/5 (-0.400000)\n"));
        assert!(text.contains("essential: true\n"));
        assert!(text.ends_with("message: hello\n"));
    }

    #[test]
    fn structured_fields() {
        let v = sample().to_structured();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            ["command", "input_digest", "status", "vectors", "scalars", "flags", "messages"]
        );
        assert_eq!(exact_from_structured(&v["vectors"]["x"][1]), Some(Rational::new(29, 6)));
        assert_eq!(v["scalars"]["d_star"]["approx"], "-0.400000");
    }
}
