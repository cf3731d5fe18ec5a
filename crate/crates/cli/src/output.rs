use std::collections::BTreeMap;

use anyhow::Result;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{Cli, Format};

/// The resolved job, embedded in every output.
#[derive(Serialize)]
pub struct JobSpec<'a> {
    pub command: &'a str,
    pub params: Value,
    pub caps: &'a BTreeMap<&'static str, Value>,
    pub seed: u64,
    pub output: Option<String>,
    pub format: Format,
    pub threads: Option<usize>,
}

impl<'a> JobSpec<'a> {
    pub fn new(
        cli: &'a Cli,
        caps: &'a BTreeMap<&'static str, Value>,
        threads: Option<usize>,
    ) -> Result<Self> {
        Ok(JobSpec {
            command: cli.command.name(),
            params: serde_json::to_value(&cli.command)?,
            caps,
            seed: cli.seed,
            output: cli.out.as_ref().map(|p| p.display().to_string()),
            format: cli.format,
            threads,
        })
    }
}

fn header(job: &JobSpec<'_>) -> Value {
    json!({ "tool": "magnikit", "version": env!("CARGO_PKG_VERSION"), "job": job })
}

pub fn render(job: &JobSpec<'_>, results: &Value, rows: &[Value], ok: bool) -> Result<String> {
    match job.format {
        Format::Json => {
            let doc = json!({ "header": header(job), "ok": ok, "results": results });
            Ok(serde_json::to_string_pretty(&doc)? + "\n")
        }
        Format::Csv => csv_table(job, rows, ok),
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(xs) if xs.iter().all(|x| !x.is_array() && !x.is_object()) => {
            xs.iter().map(cell).collect::<Vec<_>>().join(";")
        }
        other => other.to_string(),
    }
}

fn csv_table(job: &JobSpec<'_>, rows: &[Value], ok: bool) -> Result<String> {
    let mut out = format!(
        "# magnikit {}\n# job {}\n# ok {ok}\n",
        env!("CARGO_PKG_VERSION"),
        serde_json::to_string(job)?
    );
    let mut columns: Vec<String> = Vec::new();
    for r in rows {
        if let Value::Object(m) = r {
            for k in m.keys() {
                if !columns.contains(k) {
                    columns.push(k.clone());
                }
            }
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    if !columns.is_empty() {
        w.write_record(&columns)?;
    }
    for r in rows {
        w.write_record(columns.iter().map(|c| r.get(c).map(cell).unwrap_or_default()))?;
    }
    out.push_str(&String::from_utf8(w.into_inner()?)?);
    Ok(out)
}
