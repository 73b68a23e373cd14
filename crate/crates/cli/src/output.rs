use linalg::SymMatrix;
use monodromy::Report;
use serde_json::{Map, Value};

use crate::args::Format;

/// What a command produces before it is rendered.
#[derive(Debug)]
pub enum Output {
    /// A report, optionally with extra top-level JSON fields and a CSV body.
    Report { report: Report, extra: Map<String, Value>, csv: Option<String> },
    Json(Value),
    Text(String),
}

impl Output {
    pub fn report(report: Report) -> Self {
        Output::Report { report, extra: Map::new(), csv: None }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Output::Report { report, .. } => report.exit_code(),
            _ => 0,
        }
    }

    pub fn render(self, format: Format) -> String {
        match self {
            Output::Report { report, extra, csv } => {
                let report = report.sorted();
                match (format, csv) {
                    (Format::Csv, Some(body)) => body,
                    (Format::Csv, None) => report.to_csv(),
                    (Format::Json, _) => {
                        let mut v = report.to_json();
                        if let Value::Object(m) = &mut v {
                            m.extend(extra);
                        }
                        pretty(&v)
                    }
                }
            }
            Output::Json(v) => pretty(&v),
            Output::Text(s) => {
                let mut s = s;
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One line per row, entries in the canonical grammar.
pub fn matrix_csv(m: &SymMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.n() {
        let row: Vec<String> = m.row(i).iter().map(|e| csv_field(&e.to_string())).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use symring::SymbolTable;

    #[test]
    fn csv_quotes_only_when_needed() {
        assert_eq!(csv_field("1"), "1");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        let t = SymbolTable::standard();
        let m = SymMatrix::from_ints(&t, &[&[1, 2], &[0, 1]]).unwrap();
        assert_eq!(matrix_csv(&m), "1,2\n0,1\n");
    }

    #[test]
    fn report_exit_codes() {
        let mut r = Report::new();
        r.push("a", true, "");
        assert_eq!(Output::report(r.clone()).exit_code(), 0);
        r.push("b", false, "");
        assert_eq!(Output::report(r).exit_code(), 1);
        assert_eq!(Output::Text("x".into()).render(Format::Json), "x\n");
    }
}
