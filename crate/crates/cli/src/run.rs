use std::fs;
use std::io::Write;
use std::path::Path;

use a3::{a3_reference, critical_data, psi_matrix_a3, quarter_turn_path, reproduce_a3_table, unpermuted_s, A3Point};
use chambers::{lexicographic_order, parse_path_json, path_to_json, track_samples, ChamberError, OrientedLine, PointConfig};
use g24::reference::{c_kap_minus_reference, g_kap, table};
use g24::{
    band_crossing_line, band_crossing_path, band_rows, band_table, gamma_class, g24_reference, levelt_conjugation_check,
    todd_and_gram, verify_g24, verify_resultg24, CohClass, GammaSign,
};
use linalg::SymMatrix;
use monodromy::{
    apply_braid, braid_word_matrix, check_constraints, coalescence_vanishing_check, default_coalescence_tol, round15,
    BraidWord, MonodromyData, Report,
};
use serde_json::{json, Map, Value};
use symring::{Complex64, SymExpr};
use thiserror::Error;

use crate::args::{A3Command, Cli, Command, Format, G24Command};
use crate::output::{matrix_csv, Output};

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed or unreadable input; exit code 2.
    #[error("input error: {0}")]
    Input(String),
    /// A computation that could not be carried out as asked; exit code 1.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_data(path: &Path) -> Result<MonodromyData, CliError> {
    MonodromyData::from_json_str(&table(), &read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// `"re"` or `"re,im"`.
pub fn parse_complex(s: &str) -> Result<Complex64, CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |p: &str| p.parse::<f64>().map_err(|_| CliError::Input(format!("'{s}' is not a complex number")));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(CliError::Input(format!("'{s}' is not a complex number"))),
    }
}

fn complex_json(z: Complex64) -> Value {
    json!([round15(z.re), round15(z.im)])
}

fn constraint_report(md: &MonodromyData) -> Result<Report, CliError> {
    let mut r = check_constraints(md).map_err(input)?;
    if let Some(u) = &md.u {
        r.push("coalescence_vanishing", coalescence_vanishing_check(&md.s, u, default_coalescence_tol(u)), "");
    }
    Ok(r)
}

fn verify(target: &str) -> Result<Output, CliError> {
    let report = match target {
        "a3" => {
            let mut r = Report::new();
            r.extend_prefixed("band0_", constraint_report(&a3_reference(0, 1).map_err(input)?)?);
            r.extend_prefixed("table_", reproduce_a3_table().map_err(input)?);
            let cd = critical_data(&A3Point::maxwell(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))).map_err(input)?;
            let u = cd.u.to_vec();
            r.push("maxwell_coalescence_vanishing", coalescence_vanishing_check(&unpermuted_s(), &u, default_coalescence_tol(&u)), "");
            r
        }
        "g24" => {
            let mut r = verify_g24();
            let md = g24_reference();
            let u = md.u.clone().unwrap_or_default();
            r.push("coalescence_vanishing", coalescence_vanishing_check(&md.s, &u, default_coalescence_tol(&u)), "");
            r
        }
        file => constraint_report(&load_data(Path::new(file))?)?,
    };
    Ok(Output::report(report))
}

fn braid(input_path: &Path, word: &str) -> Result<(Output, String), CliError> {
    let md = load_data(input_path)?;
    let w: BraidWord = word.parse().map_err(input)?;
    let out = apply_braid(&md, &w).map_err(input)?;
    let a = braid_word_matrix(&md.s, &w).map_err(input)?;
    Ok((Output::Text(out.to_json_string()), matrix_csv(&a)))
}

fn track(path: &Path, phi: Option<f64>, apply: Option<&Path>) -> Result<(Output, Option<String>), CliError> {
    let v: Value = serde_json::from_str(&read(path)?).map_err(input)?;
    let (mut line, samples) = parse_path_json(&v).map_err(input)?;
    if let Some(phi) = phi {
        line = OrientedLine::new(phi).map_err(input)?;
    }
    let result = track_samples(&samples, &line).map_err(|e| match e {
        ChamberError::Input(m) => CliError::Input(m),
        other => CliError::Failed(other.to_string()),
    })?;
    let word = result.word.to_string();
    match apply {
        None => Ok((Output::Text(word), None)),
        Some(p) => {
            let md = load_data(p)?;
            let out = apply_braid(&md, &result.word).map_err(input)?;
            Ok((Output::Text(out.to_json_string()), Some(word)))
        }
    }
}

fn cmatrix_json(m: &[Vec<Complex64>]) -> Value {
    Value::Array(m.iter().map(|row| Value::Array(row.iter().map(|z| complex_json(*z)).collect())).collect())
}

fn a3_command(cmd: &A3Command) -> Result<Output, CliError> {
    match cmd {
        A3Command::Table => Ok(Output::report(reproduce_a3_table().map_err(input)?)),
        A3Command::Point { t1, t2, t3 } => {
            let p = A3Point::new(parse_complex(t1)?, parse_complex(t2)?, parse_complex(t3)?);
            let cd = critical_data(&p).map_err(input)?;
            let psi = psi_matrix_a3(&p).map_err(input)?;
            Ok(Output::Json(json!({
                "t": p.t.iter().map(|z| complex_json(*z)).collect::<Vec<_>>(),
                "x": cd.x.iter().map(|z| complex_json(*z)).collect::<Vec<_>>(),
                "u": cd.u.iter().map(|z| complex_json(*z)).collect::<Vec<_>>(),
                "psi": cmatrix_json(&psi),
            })))
        }
        A3Command::Data { band, cell } => Ok(Output::Text(a3_reference(*band, *cell).map_err(input)?.to_json_string())),
        A3Command::Path { samples } => {
            let line = OrientedLine::new(0.0).map_err(input)?;
            Ok(Output::Json(path_to_json(&line, &resample(quarter_turn_path(), *samples))))
        }
    }
}

fn resample(path: Vec<PointConfig>, samples: usize) -> Vec<PointConfig> {
    if samples < 2 || samples >= path.len() {
        return path;
    }
    let last = path.len() - 1;
    (0..samples).map(|k| path[k * last / (samples - 1)].clone()).collect()
}

fn class_json(c: &CohClass) -> Value {
    let mut m = Map::new();
    for (name, e) in g24::cohom::BASIS.iter().zip(c.coeffs()) {
        m.insert(name.to_string(), Value::String(e.to_string()));
    }
    Value::Object(m)
}

fn class_csv(c: &CohClass) -> String {
    let mut out = String::from("basis,coefficient\n");
    for (name, e) in g24::cohom::BASIS.iter().zip(c.coeffs()) {
        out.push_str(&format!("{name},\"{e}\"\n"));
    }
    out
}

/// The displayed `Γ̂⁻`; `Γ̂⁺` is its image under `δ ↦ −δ`.
fn displayed_gamma_minus() -> CohClass {
    let t = table();
    let coeffs = [
        "1",
        "4*gamma",
        "(48*gamma^2 + pi^2)/6",
        "(48*gamma^2 + pi^2)/6",
        "(4/3)*(16*gamma^3 + gamma*pi^2 - zeta3)",
        "(768*gamma^4 + 96*gamma^2*pi^2 - pi^4 - 192*gamma*zeta3)/36",
    ]
    .iter()
    .map(|s| SymExpr::parse_in(&t, s).expect("constant"))
    .collect();
    CohClass::from_coeffs(&t, coeffs)
}

fn matrix_output(report: Report, name: &str, m: &SymMatrix) -> Output {
    let mut extra = Map::new();
    extra.insert(name.to_string(), m.to_json());
    Output::Report { report, extra, csv: Some(matrix_csv(m)) }
}

fn g24_command(cmd: &G24Command) -> Result<Output, CliError> {
    let t = table();
    match cmd {
        G24Command::Verify => Ok(Output::report(verify_g24())),
        G24Command::Gamma { sign } => {
            let sign = GammaSign::parse(sign).ok_or_else(|| CliError::Input(format!("sign must be + or -, got '{sign}'")))?;
            let class = gamma_class(&t, sign);
            let display = match sign {
                GammaSign::Minus => displayed_gamma_minus(),
                GammaSign::Plus => displayed_gamma_minus().dual(),
            };
            let mut report = Report::new();
            report.push("matches_display", class == display, format!("gamma{}", sign.symbol()));
            let mut extra = Map::new();
            extra.insert("class".into(), class_json(&class));
            Ok(Output::Report { report, extra, csv: Some(class_csv(&class)) })
        }
        G24Command::Gram => {
            let (td, g) = todd_and_gram(&t);
            let mut report = Report::new();
            report.push("matches_kapranov_gram", g == g_kap(&t), "");
            report.push("todd_integral_is_one", td.integral().is_one(), "");
            Ok(matrix_output(report, "gram", &g))
        }
        G24Command::Kapranov => Ok(matrix_output(verify_resultg24(), "c_kap_minus", &c_kap_minus_reference(&t))),
        G24Command::Bands => {
            let report = band_table();
            let rows = band_rows().map_err(input)?;
            let mut extra = Map::new();
            extra.insert(
                "bands".into(),
                Value::Array(
                    rows.iter()
                        .map(|r| json!({ "band": r.band, "label": r.label, "word": r.word.to_string(), "S": r.data.s.to_json() }))
                        .collect(),
                ),
            );
            Ok(Output::Report { report, extra, csv: None })
        }
        G24Command::Levelt => Ok(Output::report(levelt_conjugation_check())),
        G24Command::Data { band: None } => Ok(Output::Text(g24_reference().to_json_string())),
        G24Command::Data { band: Some(k) } => {
            let rows = band_rows().map_err(input)?;
            let row = rows.get(*k).ok_or_else(|| CliError::Input(format!("no band {k}; bands are 0 to {}", rows.len() - 1)))?;
            Ok(Output::Text(row.data.to_json_string()))
        }
        G24Command::Path { alpha, samples } => {
            let path = band_crossing_path(*alpha, (*samples).max(2));
            let line = band_crossing_line();
            lexicographic_order(&path[0], &line).map_err(input)?;
            Ok(Output::Json(path_to_json(&line, &path)))
        }
    }
}

/// Runs a command, returning the main output and optional side text for stderr.
pub fn execute(cli: &Cli) -> Result<(Output, Option<String>), CliError> {
    match &cli.command {
        Command::Verify { target } => Ok((verify(target)?, None)),
        Command::Braid { input, word } => {
            let (out, a) = braid(input, word)?;
            Ok((out, Some(a)))
        }
        Command::Track { path, phi, apply } => track(path, *phi, apply.as_deref()),
        Command::A3 { command } => Ok((a3_command(command)?, None)),
        Command::G24 { command } => Ok((g24_command(command)?, None)),
    }
}

/// Executes and writes output; returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    match execute(cli) {
        Ok((out, side)) => {
            let code = out.exit_code();
            let text = out.render(if matches!(cli.command, Command::Braid { .. } | Command::Track { .. }) {
                Format::Json
            } else {
                cli.format
            });
            if let Some(side) = side {
                eprint!("{side}");
                if !side.ends_with('\n') {
                    eprintln!();
                }
            }
            match &cli.out {
                Some(p) => {
                    if let Err(e) = fs::write(p, text) {
                        eprintln!("error: {}: {e}", p.display());
                        return 2;
                    }
                }
                None => {
                    let _ = std::io::stdout().write_all(text.as_bytes());
                }
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
