//! Report types shared by every check, with text and CSV renderings. JSON
//! comes from `serde`.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::edge_list;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// The instance falls outside what the statement covers.
    Skipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        }
    }
}

/// One graph inside a ranked entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankedGraph {
    pub code: String,
    /// Family name(s) when recognized, otherwise `"unnamed"`.
    pub label: String,
}

/// All graphs sharing one Z value. `rank` is competition style: one more
/// than the number of graphs with strictly larger Z.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankedEntry {
    pub rank: usize,
    /// Decimal, so the value survives any JSON consumer intact.
    pub z: String,
    pub multiplicity: usize,
    /// Listed for the leading entries only; deeper entries keep their
    /// multiplicity but leave this empty.
    pub graphs: Vec<RankedGraph>,
}

/// Concrete evidence attached to a failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub message: String,
    /// Offending graph in edge-list format, when there is one.
    pub graph: Option<String>,
    pub values: Vec<NamedValue>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedValue {
    pub name: String,
    pub value: String,
}

impl NamedValue {
    pub fn new(name: impl Into<String>, value: impl ToString) -> Self {
        Self {
            name: name.into(),
            value: value.to_string(),
        }
    }
}

impl Witness {
    pub fn new(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            graph: None,
            values: Vec::new(),
        }
    }

    pub fn with_graph(mut self, g: &Graph) -> Self {
        self.graph = Some(edge_list::write(g));
        self
    }

    pub fn with_value(mut self, name: impl Into<String>, value: impl ToString) -> Self {
        self.values.push(NamedValue::new(name, value));
        self
    }
}

/// Outcome of one check on one parameter set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub params: Map<String, Value>,
    pub verdict: Verdict,
    /// `"exhaustive"` or `"formula-only"` where the distinction matters.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    /// What was asserted, in words.
    pub expected: String,
    pub entries: Vec<RankedEntry>,
    /// Key quantities computed along the way.
    pub values: Vec<NamedValue>,
    pub witness: Option<Witness>,
}

impl CheckResult {
    pub fn new(check: &str, expected: impl Into<String>) -> Self {
        Self {
            check: check.to_owned(),
            params: Map::new(),
            verdict: Verdict::Pass,
            mode: None,
            expected: expected.into(),
            entries: Vec::new(),
            values: Vec::new(),
            witness: None,
        }
    }

    pub fn param(mut self, name: &str, value: impl Into<Value>) -> Self {
        self.params.insert(name.to_owned(), value.into());
        self
    }

    pub fn value(&mut self, name: impl Into<String>, value: impl ToString) {
        self.values.push(NamedValue::new(name, value));
    }

    /// Records a failure; the first witness wins.
    pub fn fail(&mut self, witness: Witness) {
        self.verdict = Verdict::Fail;
        if self.witness.is_none() {
            self.witness = Some(witness);
        }
    }

    pub fn skip(&mut self, reason: &str) {
        self.verdict = Verdict::Skipped;
        self.value("skipped", reason);
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    fn params_inline(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let tag = self.verdict.as_str().to_uppercase();
        let _ = write!(out, "[{tag}] {}", self.check);
        let params = self.params_inline();
        if !params.is_empty() {
            let _ = write!(out, " {params}");
        }
        if let Some(mode) = &self.mode {
            let _ = write!(out, " ({mode})");
        }
        out.push('\n');
        let _ = writeln!(out, "  expected: {}", self.expected);
        for v in &self.values {
            let _ = writeln!(out, "  {}: {}", v.name, v.value);
        }
        for e in self.entries.iter().filter(|e| !e.graphs.is_empty()) {
            let labels: Vec<&str> = e.graphs.iter().map(|g| g.label.as_str()).collect();
            let _ = writeln!(
                out,
                "  #{:<4} Z={:<8} x{:<3} {}",
                e.rank,
                e.z,
                e.multiplicity,
                labels.join(", ")
            );
        }
        let hidden = self.entries.iter().filter(|e| e.graphs.is_empty()).count();
        if hidden > 0 {
            let graphs: usize = self
                .entries
                .iter()
                .filter(|e| e.graphs.is_empty())
                .map(|e| e.multiplicity)
                .sum();
            let _ = writeln!(out, "  ... {hidden} smaller values over {graphs} graphs");
        }
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "  witness: {}", w.message);
            for v in &w.values {
                let _ = writeln!(out, "    {} = {}", v.name, v.value);
            }
            if let Some(g) = &w.graph {
                for line in g.lines() {
                    let _ = writeln!(out, "    | {line}");
                }
            }
        }
        out
    }
}

pub const CSV_HEADER: &str = "check,params,verdict,rank,z,multiplicity,graphs";

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

/// CSV rows (without header): one per listed entry, or a single row with
/// empty entry columns.
pub fn csv_rows(r: &CheckResult) -> Vec<String> {
    let head = format!(
        "{},{},{}",
        csv_field(&r.check),
        csv_field(&r.params_inline()),
        r.verdict.as_str()
    );
    let listed: Vec<&RankedEntry> = r.entries.iter().filter(|e| !e.graphs.is_empty()).collect();
    if listed.is_empty() {
        return vec![format!("{head},,,,")];
    }
    listed
        .into_iter()
        .map(|e| {
            let labels: Vec<&str> = e.graphs.iter().map(|g| g.label.as_str()).collect();
            format!(
                "{head},{},{},{},{}",
                e.rank,
                e.z,
                e.multiplicity,
                csv_field(&labels.join(";"))
            )
        })
        .collect()
}

pub fn render_csv(results: &[CheckResult]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in results {
        for row in csv_rows(r) {
            out.push_str(&row);
            out.push('\n');
        }
    }
    out
}
