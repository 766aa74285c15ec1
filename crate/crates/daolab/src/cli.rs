use std::ffi::OsString;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::report;
use crate::session::{self, Run, Settings, Task};
use crate::syntax::{self, FieldSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "daolab", version, about = "Dao numbers, Ratliff-Rush closures and Rees-module regularity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Cmd,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Seed for every random choice.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Random trials: sampled rings for `explore`, generic elements otherwise.
    #[arg(long, global = true)]
    pub trials: Option<u32>,
    /// Scan cap for local-mode computations.
    #[arg(long, global = true)]
    pub cap: Option<u32>,
    /// Write the report here (atomically) instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Replace the coefficient field of every ring (`Q` or `F<prime>`).
    #[arg(long, global = true, value_parser = parse_field_arg)]
    pub field: Option<FieldSpec>,
    /// Append explorer anomalies to this JSON-lines file.
    #[arg(long, global = true)]
    pub anomaly_log: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Invariant reports for the script's compute statements (default: every ideal).
    Compute {
        file: PathBuf,
        /// Exit 3 when a value is cap-limited or probabilistic.
        #[arg(long)]
        certified: bool,
    },
    /// Run a verification scenario on the script's rings or ideals (`all`: the script's verify statements).
    Verify {
        scenario: String,
        file: Option<PathBuf>,
        /// Exit 0 on evidence-only outcomes instead of 3.
        #[arg(long)]
        allow_evidence: bool,
    },
    /// Run the script's explore statements.
    Explore { file: PathBuf },
    /// Betti tables for the script's resolve statements (default: S/(J + I) for every ideal).
    Resolve { file: PathBuf },
}

fn parse_field_arg(s: &str) -> Result<FieldSpec, String> {
    syntax::parse_field(s)
}

/// Rebuilds every object with sorted keys, whatever map type serde_json was built with.
pub fn canonical(v: &Value) -> Value {
    match v {
        Value::Object(o) => {
            let mut keys: Vec<&String> = o.keys().collect();
            keys.sort();
            let mut m = Map::new();
            for k in keys {
                m.insert(k.clone(), canonical(&o[k]));
            }
            Value::Object(m)
        }
        Value::Array(a) => Value::Array(a.iter().map(canonical).collect()),
        other => other.clone(),
    }
}

fn status_name(code: i32) -> &'static str {
    match code {
        0 => "pass",
        1 => "fail",
        3 => "uncertified",
        _ => "error",
    }
}

fn document(command: &str, scenario: Option<&str>, source: Option<&Path>, settings: &Settings, run: &Run, code: i32) -> Value {
    let mut doc = json!({
        "daolab": env!("CARGO_PKG_VERSION"),
        "command": command,
        "settings": settings.to_json(),
        "results": run.records.iter().map(|r| r.value.clone()).collect::<Vec<_>>(),
        "status": status_name(code),
        "exit_code": code,
    });
    if let Some(s) = scenario {
        doc["scenario"] = json!(s);
    }
    if let Some(p) = source {
        doc["source"] = json!(p.display().to_string());
    }
    if command == "explore" {
        doc["anomalies"] = Value::Array(run.anomalies.clone());
    }
    canonical(&doc)
}

pub fn render(doc: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = format!("daolab {}", doc["command"].as_str().unwrap_or(""));
            if let Some(sc) = doc.get("scenario").and_then(Value::as_str) {
                s.push_str(&format!(" {}", sc));
            }
            if let Some(src) = doc.get("source").and_then(Value::as_str) {
                s.push_str(&format!(" {}", src));
            }
            s.push('\n');
            s.push_str(&report::render_text(&json!({ "settings": doc["settings"] })));
            for (n, r) in doc["results"].as_array().into_iter().flatten().enumerate() {
                s.push_str(&format!("\n== result {} ==\n", n + 1));
                s.push_str(&report::render_text(r));
            }
            if let Some(a) = doc.get("anomalies").and_then(Value::as_array) {
                s.push_str(&format!("\nanomalies: {}\n", a.len()));
                for x in a {
                    s.push_str(&report::render_text(x));
                }
            }
            s.push_str(&format!("\nstatus: {} (exit {})\n", doc["status"].as_str().unwrap_or(""), doc["exit_code"]));
            s
        }
    }
}

fn write_atomic(path: &Path, text: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn append_anomalies(path: &Path, anomalies: &[Value]) -> std::io::Result<()> {
    if anomalies.is_empty() {
        return Ok(());
    }
    let mut buf = String::new();
    for a in anomalies {
        buf.push_str(&serde_json::to_string(&canonical(a)).expect("serializable"));
        buf.push('\n');
    }
    let mut f = OpenOptions::new().create(true).append(true).open(path)?;
    f.write_all(buf.as_bytes())
}

/// Runs the CLI on `argv` (program name first) and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let settings = Settings { seed: cli.seed, trials: cli.trials, cap: cli.cap, field: cli.field };
    let (command, scenario, file, task, demand) = match &cli.command {
        Cmd::Compute { file, certified } => ("compute", None, Some(file.clone()), Task::Compute, *certified),
        Cmd::Verify { scenario, file, allow_evidence } => {
            ("verify", Some(scenario.clone()), file.clone(), Task::Verify(scenario.clone()), !*allow_evidence)
        }
        Cmd::Explore { file } => ("explore", None, Some(file.clone()), Task::Explore, false),
        Cmd::Resolve { file } => ("resolve", None, Some(file.clone()), Task::Resolve, false),
    };
    if file.is_none() && !matches!(&task, Task::Verify(s) if session::GLOBAL_SCENARIOS.contains(&s.as_str())) {
        eprintln!("error: this scenario needs a session file");
        return 2;
    }
    let (source_text, script) = match &file {
        Some(path) => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {}: {}", path.display(), e);
                    return 2;
                }
            };
            match syntax::parse_session(&text) {
                Ok(s) => (text, s),
                Err(d) => {
                    eprint!("{}", d.render(&path.display().to_string(), &text));
                    return 2;
                }
            }
        }
        None => (String::new(), syntax::SessionScript { statements: Vec::new() }),
    };
    let run = match session::execute(&script, &task, &settings) {
        Ok(r) => r,
        Err(d) => {
            let name = file.as_ref().map(|p| p.display().to_string()).unwrap_or_default();
            eprint!("{}", d.render(&name, &source_text));
            return 2;
        }
    };
    let code = run.exit_code(demand);
    let doc = document(command, scenario.as_deref(), file.as_deref(), &settings, &run, code);
    let text = render(&doc, cli.format);
    if let Some(log) = &cli.anomaly_log {
        if let Err(e) = append_anomalies(log, &run.anomalies) {
            eprintln!("error: cannot append to {}: {}", log.display(), e);
            return 2;
        }
    }
    match &cli.out {
        Some(path) => {
            if let Err(e) = write_atomic(path, &text) {
                eprintln!("error: cannot write {}: {}", path.display(), e);
                return 2;
            }
        }
        None => print!("{}", text),
    }
    code
}
