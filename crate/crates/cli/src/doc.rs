//! Result documents: `key=value` lines plus named blocks of verbatim lines.
//!
//! Text form:
//!
//! ```text
//! hom=yes
//! [map]
//! X={0}
//! 0 -> 1
//! e1 -> e2
//! ```
//!
//! The machine form is a JSON object with `command`, `verdict`, `fields`
//! and `blocks`.

use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Budget,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Yes => 0,
            Verdict::No => 1,
            Verdict::Budget => 3,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Budget => "budget",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub command: String,
    pub verdict: Verdict,
    pub lines: Vec<Vec<(String, String)>>,
    pub blocks: Vec<(String, Vec<String>)>,
}

impl Document {
    pub fn new(command: &str) -> Self {
        Document { command: command.to_string(), verdict: Verdict::Yes, lines: Vec::new(), blocks: Vec::new() }
    }

    pub fn verdict(mut self, v: Verdict) -> Self {
        self.verdict = v;
        self
    }

    pub fn line<K: ToString, V: ToString>(&mut self, pairs: impl IntoIterator<Item = (K, V)>) -> &mut Self {
        self.lines.push(pairs.into_iter().map(|(k, v)| (k.to_string(), v.to_string())).collect());
        self
    }

    pub fn field(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.line([(key, value.to_string())])
    }

    pub fn block(&mut self, name: &str, text: impl AsRef<str>) -> &mut Self {
        let lines = text.as_ref().lines().map(str::to_string).collect();
        self.blocks.push((name.to_string(), lines));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.lines.iter().flatten().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn get_block(&self, name: &str) -> Option<&[String]> {
        self.blocks.iter().find(|(n, _)| n == name).map(|(_, l)| l.as_slice())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            let parts: Vec<String> = line.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        for (name, lines) in &self.blocks {
            out.push_str(&format!("[{name}]\n"));
            for l in lines {
                out.push_str(l);
                out.push('\n');
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let fields: Map<String, Value> =
            self.lines.iter().flatten().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
        let blocks: Map<String, Value> = self.blocks.iter().map(|(n, l)| (n.clone(), json!(l))).collect();
        let v = json!({
            "command": self.command,
            "verdict": self.verdict.name(),
            "fields": fields,
            "blocks": blocks,
        });
        serde_json::to_string_pretty(&v).expect("serialisable") + "\n"
    }

    /// Reads either form. The text form carries no command or verdict, so
    /// `command` is used and the verdict is left as `Yes`.
    pub fn parse(command: &str, text: &str) -> Result<Document, String> {
        if text.trim_start().starts_with('{') {
            return Self::parse_json(text);
        }
        let mut doc = Document::new(command);
        let mut current: Option<(String, Vec<String>)> = None;
        for line in text.lines() {
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                doc.blocks.extend(current.take());
                current = Some((name.to_string(), Vec::new()));
            } else if let Some((_, lines)) = current.as_mut() {
                lines.push(line.to_string());
            } else if !line.trim().is_empty() {
                let pairs = line
                    .split_whitespace()
                    .map(|tok| {
                        tok.split_once('=')
                            .map(|(k, v)| (k.to_string(), v.to_string()))
                            .ok_or_else(|| format!("expected key=value, found `{tok}`"))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                doc.lines.push(pairs);
            }
        }
        doc.blocks.extend(current);
        Ok(doc)
    }

    fn parse_json(text: &str) -> Result<Document, String> {
        let v: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
        let command = v["command"].as_str().ok_or("missing command")?.to_string();
        let verdict = match v["verdict"].as_str() {
            Some("yes") => Verdict::Yes,
            Some("no") => Verdict::No,
            Some("budget") => Verdict::Budget,
            _ => return Err("missing or unknown verdict".into()),
        };
        let mut doc = Document::new(&command).verdict(verdict);
        for (k, val) in v["fields"].as_object().ok_or("missing fields")? {
            doc.field(k, val.as_str().ok_or("field values must be strings")?);
        }
        for (name, lines) in v["blocks"].as_object().ok_or("missing blocks")? {
            let lines = lines
                .as_array()
                .ok_or("block must be an array")?
                .iter()
                .map(|l| l.as_str().map(str::to_string).ok_or("block lines must be strings"))
                .collect::<Result<Vec<_>, _>>()?;
            doc.blocks.push((name.clone(), lines));
        }
        Ok(doc)
    }
}
