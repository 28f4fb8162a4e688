//! Run reports, rendered as TSV or JSON.

use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Tsv => "tsv",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub name: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(name: &'static str, columns: &[&'static str]) -> Self {
        Table { name, columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    /// `(name, digest)` of the input document.
    pub algebra: Option<(String, String)>,
    pub summary: Vec<(&'static str, Value)>,
    pub tables: Vec<Table>,
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

impl Report {
    pub fn new(command: String, algebra: Option<(String, String)>) -> Self {
        Report { command, algebra, summary: Vec::new(), tables: Vec::new() }
    }

    pub fn set(&mut self, key: &'static str, value: impl Into<Value>) {
        self.summary.push((key, value.into()));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Tsv => self.tsv(),
            Format::Json => self.json(),
        }
    }

    fn tsv(&self) -> String {
        let mut out = format!("# engine\t{}\n# command\t{}\n", gpw_core::ENGINE_VERSION, self.command);
        if let Some((name, digest)) = &self.algebra {
            out += &format!("# algebra\t{name}\n# digest\t{digest}\n");
        }
        for (k, v) in &self.summary {
            out += &format!("# {k}\t{}\n", cell(v));
        }
        for t in &self.tables {
            out += &format!("# table\t{}\n{}\n", t.name, t.columns.join("\t"));
            for row in &t.rows {
                out += &row.iter().map(cell).collect::<Vec<_>>().join("\t");
                out.push('\n');
            }
        }
        out
    }

    fn json(&self) -> String {
        let mut root = Map::new();
        root.insert("engine_version".into(), gpw_core::ENGINE_VERSION.into());
        root.insert("command".into(), self.command.clone().into());
        if let Some((name, digest)) = &self.algebra {
            let mut a = Map::new();
            a.insert("name".into(), name.clone().into());
            a.insert("digest".into(), digest.clone().into());
            root.insert("algebra".into(), a.into());
        }
        let summary: Map<String, Value> = self.summary.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
        root.insert("summary".into(), summary.into());
        let tables: Map<String, Value> = self
            .tables
            .iter()
            .map(|t| {
                let rows: Vec<Value> = t
                    .rows
                    .iter()
                    .map(|r| Value::Object(t.columns.iter().map(|c| c.to_string()).zip(r.iter().cloned()).collect()))
                    .collect();
                (t.name.to_string(), Value::Array(rows))
            })
            .collect();
        root.insert("tables".into(), tables.into());
        let mut s = serde_json::to_string_pretty(&Value::Object(root)).expect("reports serialize");
        s.push('\n');
        s
    }
}
