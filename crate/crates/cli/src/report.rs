use serde_json::{Map, Value};

use kflat_core::{Ideal, MonomialOrder, Poly};

/// Text and JSON renderings of one command's result.
pub struct Report {
    command: &'static str,
    verdict: Option<bool>,
    lines: Vec<String>,
    data: Map<String, Value>,
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Value {
    Value::Array(items.into_iter().map(|x| Value::String(x.to_string())).collect())
}

/// Reduced Gröbner basis under `order`, the canonical printed form of an ideal.
pub fn basis(ideal: &Ideal, order: MonomialOrder) -> Vec<Poly> {
    ideal.gb(order).as_ref().clone()
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report { command, verdict: None, lines: Vec::new(), data: Map::new() }
    }

    pub fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.lines.push(s.into());
        self
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.data.insert(key.to_string(), value.into());
        self
    }

    /// `key: value` in text, `key_json: value` in JSON.
    pub fn field(&mut self, label: &str, key: &str, value: impl ToString + Into<Value> + Clone) -> &mut Self {
        self.lines.push(format!("{label}: {}", value.to_string()));
        self.set(key, value)
    }

    pub fn flag(&mut self, label: &str, key: &str, value: bool) -> &mut Self {
        self.lines.push(format!("{label}: {}", yes_no(value)));
        self.set(key, value)
    }

    /// `label: a, b, c` in text, an array of strings in JSON.
    pub fn list<T: ToString>(&mut self, label: &str, key: &str, items: &[T]) -> &mut Self {
        let shown: Vec<String> = items.iter().map(T::to_string).collect();
        let text = if shown.is_empty() { "none".to_string() } else { shown.join(", ") };
        self.lines.push(format!("{label}: {text}"));
        self.set(key, strings(shown))
    }

    /// A list of polynomials, one per indented line.
    pub fn polys(&mut self, label: &str, key: &str, polys: &[Poly]) -> &mut Self {
        self.lines.push(format!("{label} ({}):", polys.len()));
        for p in polys {
            self.lines.push(format!("  {p}"));
        }
        self.set(key, strings(polys))
    }

    pub fn verdict(&mut self, v: bool) -> &mut Self {
        self.verdict = Some(v);
        self
    }

    pub fn exit_code(&self) -> u8 {
        match self.verdict {
            Some(false) => 1,
            _ => 0,
        }
    }

    pub fn render(&self, json: bool) -> String {
        if !json {
            let mut out = self.lines.join("\n");
            out.push('\n');
            return out;
        }
        let mut obj = self.data.clone();
        obj.insert("command".into(), self.command.into());
        obj.insert("verdict".into(), self.verdict.map_or(Value::Null, Value::Bool));
        let mut out = serde_json::to_string_pretty(&Value::Object(obj)).expect("JSON values serialize");
        out.push('\n');
        out
    }
}
