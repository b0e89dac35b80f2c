use std::collections::BTreeMap;
use std::io::{self, Write};

use primefourier::{Error, ErrorKind};
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    PreconditionError,
    BudgetExceeded,
    TheoremViolation,
}

impl Status {
    pub fn from_error(e: &Error) -> Self {
        match e.kind() {
            ErrorKind::Precondition => Status::PreconditionError,
            ErrorKind::BudgetExceeded => Status::BudgetExceeded,
            ErrorKind::TheoremViolation => Status::TheoremViolation,
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::PreconditionError => 2,
            Status::BudgetExceeded => 3,
            Status::TheoremViolation => 4,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::PreconditionError => "precondition-error",
            Status::BudgetExceeded => "budget-exceeded",
            Status::TheoremViolation => "theorem-violation",
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorInfo {
    pub kind: Status,
    pub message: String,
}

/// Echo of everything that determines the result.
#[derive(Debug, Default, Serialize)]
pub struct ConfigEcho {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<u128>,
    pub seed: u64,
    pub retries: u32,
    pub threads: Option<usize>,
    pub max_p: usize,
    pub format: String,
}

/// One row of a sweep, for CSV output.
#[derive(Debug, Serialize)]
pub struct SweepRow {
    pub kind: String,
    pub first: String,
    pub second: String,
    pub passed: bool,
    pub attempts: u32,
    pub detail: String,
}

#[derive(Debug, Default)]
pub struct Outcome {
    pub result: Value,
    pub counts: BTreeMap<&'static str, u64>,
    pub rows: Option<Vec<SweepRow>>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: &'static str,
    pub config: ConfigEcho,
    pub status: Status,
    pub result: Value,
    pub counts: BTreeMap<&'static str, u64>,
    pub error: Option<ErrorInfo>,
    pub wall_time_ms: u64,
    #[serde(skip)]
    pub rows: Option<Vec<SweepRow>>,
}

impl Report {
    pub fn new(command: &'static str, config: ConfigEcho, outcome: Result<Outcome, Error>, wall_time_ms: u64) -> Self {
        let (status, outcome, error) = match outcome {
            Ok(o) => (Status::Ok, o, None),
            Err(e) => {
                let status = Status::from_error(&e);
                let info = ErrorInfo { kind: status, message: e.to_string() };
                (status, Outcome::default(), Some(info))
            }
        };
        Report {
            schema: SCHEMA_VERSION,
            command,
            config,
            status,
            result: outcome.result,
            counts: outcome.counts,
            error,
            wall_time_ms,
            rows: outcome.rows,
        }
    }

    pub fn write_json(&self, out: &mut impl Write) -> io::Result<()> {
        serde_json::to_writer_pretty(&mut *out, self)?;
        writeln!(out)
    }

    /// Sweeps produce one row per checked instance. Everything else is
    /// flattened to `field,value` rows.
    pub fn write_csv(&self, out: &mut impl Write) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        match &self.rows {
            Some(rows) => {
                for row in rows {
                    w.serialize(row)?;
                }
            }
            None => {
                w.write_record(["field", "value"])?;
                for (field, value) in self.flat_fields() {
                    w.write_record([field.as_str(), value.as_str()])?;
                }
            }
        }
        w.flush()
    }

    pub fn write_text(&self, out: &mut impl Write) -> io::Result<()> {
        for (field, value) in self.flat_fields() {
            writeln!(out, "{field}: {value}")?;
        }
        Ok(())
    }

    fn flat_fields(&self) -> Vec<(String, String)> {
        let mut fields = vec![
            ("command".to_string(), self.command.to_string()),
            ("status".to_string(), self.status.as_str().to_string()),
        ];
        if let Value::Object(map) = &self.result {
            for (k, v) in map {
                fields.push((k.clone(), compact(v)));
            }
        }
        for (k, v) in &self.counts {
            fields.push((format!("count.{k}"), v.to_string()));
        }
        if let Some(e) = &self.error {
            fields.push(("error".to_string(), e.message.clone()));
        }
        fields.push(("wall_time_ms".to_string(), self.wall_time_ms.to_string()));
        fields
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
