//! Check reports and their text and JSON forms.

use std::fmt::Write;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Informational output of a query.
    Finding,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Finding => "finding",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    /// Section tag, or `plumbing`.
    pub anchor: String,
    pub status: Status,
    pub data: Value,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse(format!("unknown format {s}"))),
        }
    }
}

pub fn emit(reports: &[Report], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("reports serialise");
            s.push('\n');
            s
        }
        Format::Text => emit_text(reports),
    }
}

fn emit_text(reports: &[Report]) -> String {
    let w = reports.iter().map(|r| r.check.len()).max().unwrap_or(5).max(5);
    let mut out = String::new();
    writeln!(out, "{:<w$}  {:<7}  anchor", "check", "status").unwrap();
    for r in reports {
        writeln!(out, "{:<w$}  {:<7}  {}", r.check, r.status.as_str(), r.anchor).unwrap();
        if let Value::Object(map) = &r.data {
            let kw = map.keys().map(String::len).max().unwrap_or(0);
            for (k, v) in map {
                match v {
                    Value::Array(rows) if rows.iter().all(|x| x.is_array() || x.is_object()) && !rows.is_empty() => {
                        writeln!(out, "    {k}:").unwrap();
                        for row in rows {
                            writeln!(out, "      {row}").unwrap();
                        }
                    }
                    Value::String(s) => writeln!(out, "    {k:<kw$}  {s}").unwrap(),
                    _ => writeln!(out, "    {k:<kw$}  {v}").unwrap(),
                }
            }
        } else if !r.data.is_null() {
            writeln!(out, "    {}", r.data).unwrap();
        }
    }
    out
}

pub fn parse_json(text: &str) -> Result<Vec<Report>> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// 0 when nothing failed, 1 otherwise.
pub fn exit_code(reports: &[Report]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Vec<Report> {
        vec![
            Report { check: "a".into(), anchor: "4.4".into(), status: Status::Pass, data: json!({"charge": "58/35"}) },
            Report {
                check: "bb".into(),
                anchor: "plumbing".into(),
                status: Status::Fail,
                data: json!({"rows": [[1, 2]]}),
            },
        ]
    }

    #[test]
    fn json_round_trip() {
        let text = emit(&sample(), Format::Json);
        let back = parse_json(&text).unwrap();
        assert_eq!(back, sample());
        assert_eq!(emit(&back, Format::Json), text);
        assert!(text.contains("\"status\": \"pass\""));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&sample()), 1);
        assert_eq!(exit_code(&sample()[..1]), 0);
    }

    #[test]
    fn text_is_aligned() {
        let t = emit(&sample(), Format::Text);
        assert!(t.lines().nth(1).unwrap().starts_with("a      pass"));
    }
}
