use std::fmt::Write as _;

use serde_json::{json, Map, Value};
use spotty::oracle::LemmaReport;
use spotty::{DistributionTable, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// One piece of command output. A report is assembled completely before
/// anything is written, so a failing command never prints a partial table.
pub enum Entry {
    Field {
        key: &'static str,
        label: &'static str,
        value: Value,
    },
    Poly {
        key: &'static str,
        label: &'static str,
        poly: Polynomial,
    },
    Distribution(DistributionTable),
    Kernels(Vec<Polynomial>),
    Lemmas(Vec<LemmaReport>),
    Notice(String),
}

#[derive(Default)]
pub struct Report {
    entries: Vec<Entry>,
}

impl Report {
    pub fn field(&mut self, key: &'static str, label: &'static str, value: impl Into<Value>) {
        self.entries.push(Entry::Field {
            key,
            label,
            value: value.into(),
        });
    }

    pub fn poly(&mut self, key: &'static str, label: &'static str, poly: Polynomial) {
        self.entries.push(Entry::Poly { key, label, poly });
    }

    pub fn push(&mut self, entry: Entry) {
        self.entries.push(entry);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.json()).expect("report is valid JSON");
                s.push('\n');
                s
            }
            Format::Csv => self.csv(),
        }
    }

    fn text(&self) -> String {
        let mut out = String::new();
        for entry in &self.entries {
            match entry {
                Entry::Field { label, value, .. } => {
                    let _ = writeln!(out, "{label} = {}", plain(value));
                }
                Entry::Poly { label, poly, .. } => {
                    let _ = writeln!(out, "{label} = {poly}");
                }
                Entry::Distribution(dist) => {
                    let rows: Vec<(String, u64)> =
                        dist.entries().map(|(a, c)| (a.to_string(), c)).collect();
                    let width = rows
                        .iter()
                        .map(|(a, _)| a.len())
                        .max()
                        .unwrap_or(0)
                        .max("alpha".len());
                    let _ = writeln!(out, "{:<width$}  count", "alpha");
                    for (alpha, count) in rows {
                        let _ = writeln!(out, "{alpha:<width$}  {count}");
                    }
                }
                Entry::Kernels(polys) => {
                    for (j, f) in polys.iter().enumerate() {
                        let _ = writeln!(out, "F_{j}(z) = {f}");
                    }
                }
                Entry::Lemmas(reports) => {
                    for r in reports {
                        let status = if r.pass { "PASS" } else { "FAIL" };
                        let _ = writeln!(
                            out,
                            "{status} {} {} expected={} actual={}",
                            r.lemma, r.params, r.expected, r.actual
                        );
                    }
                }
                Entry::Notice(msg) => {
                    let _ = writeln!(out, "notice: {msg}");
                }
            }
        }
        out
    }

    fn json(&self) -> Value {
        let mut obj = Map::new();
        let mut notices = Vec::new();
        for entry in &self.entries {
            match entry {
                Entry::Field { key, value, .. } => {
                    obj.insert(key.to_string(), value.clone());
                }
                Entry::Poly { key, poly, .. } => {
                    obj.insert(
                        key.to_string(),
                        serde_json::to_value(poly).expect("polynomial serializes"),
                    );
                }
                Entry::Distribution(dist) => {
                    let rows: Vec<Value> = dist
                        .entries()
                        .map(|(a, c)| json!({ "alpha": a.counts(), "count": c }))
                        .collect();
                    obj.insert("distribution".into(), Value::Array(rows));
                }
                Entry::Kernels(polys) => {
                    let rows: Vec<Value> = polys
                        .iter()
                        .enumerate()
                        .map(|(j, f)| json!({ "j": j, "poly": f }))
                        .collect();
                    obj.insert("kernels".into(), Value::Array(rows));
                }
                Entry::Lemmas(reports) => {
                    obj.insert(
                        "reports".into(),
                        serde_json::to_value(reports).expect("reports serialize"),
                    );
                }
                Entry::Notice(msg) => notices.push(Value::String(msg.clone())),
            }
        }
        if !notices.is_empty() {
            obj.insert("notices".into(), Value::Array(notices));
        }
        Value::Object(obj)
    }

    /// Every line is `kind,key,value`.
    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut row = |kind: &str, key: &str, value: &str| {
            w.write_record([kind, key, value])
                .expect("writing to memory");
        };
        row("kind", "key", "value");
        for entry in &self.entries {
            match entry {
                Entry::Field { key, value, .. } => row("field", key, &plain(value)),
                Entry::Poly { key, poly, .. } => {
                    for (e, c) in poly.terms() {
                        row(key, &e.to_string(), &c.to_string());
                    }
                }
                Entry::Distribution(dist) => {
                    for (a, c) in dist.entries() {
                        let alpha: Vec<String> = a.counts().iter().map(|x| x.to_string()).collect();
                        row("distribution", &alpha.join(" "), &c.to_string());
                    }
                }
                Entry::Kernels(polys) => {
                    for (j, f) in polys.iter().enumerate() {
                        for (e, c) in f.terms() {
                            row(&format!("F_{j}"), &e.to_string(), &c.to_string());
                        }
                    }
                }
                Entry::Lemmas(reports) => {
                    for r in reports {
                        let verdict = if r.pass {
                            "pass".to_string()
                        } else {
                            format!("fail: expected {}, actual {}", r.expected, r.actual)
                        };
                        row("lemma", &format!("{} {}", r.lemma, r.params), &verdict);
                    }
                }
                Entry::Notice(msg) => row("notice", "", msg),
            }
        }
        let bytes = w.into_inner().expect("flushing to memory");
        String::from_utf8(bytes).expect("csv output is UTF-8")
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(plain).collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}
