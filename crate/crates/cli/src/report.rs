use std::io::Write;
use std::path::Path;

use serde_json::{json, Value};

#[derive(Debug)]
pub enum Failure {
    Io(String),
    Invalid(String),
    Guard(String),
    Parse(String),
    Usage(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Invalid(_) => 2,
            Failure::Guard(_) => 3,
            Failure::Parse(_) | Failure::Usage(_) => 64,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Io(m) | Failure::Invalid(m) | Failure::Guard(m) | Failure::Parse(m) | Failure::Usage(m) => m,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Invalid,
    Error,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Invalid => "invalid",
            Status::Error => "error",
        }
    }
}

pub struct RunReport {
    pub command: String,
    pub status: Status,
    pub payload: Value,
    pub diagnostics: Vec<String>,
}

impl RunReport {
    pub fn ok(command: &str, payload: Value) -> Self {
        RunReport { command: command.into(), status: Status::Ok, payload, diagnostics: Vec::new() }
    }

    pub fn failed(command: &str, f: &Failure) -> Self {
        let status = if matches!(f, Failure::Invalid(_)) { Status::Invalid } else { Status::Error };
        RunReport { command: command.into(), status, payload: Value::Null, diagnostics: vec![f.message().to_string()] }
    }

    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Ok => 0,
            Status::Invalid => 2,
            Status::Error => 1,
        }
    }

    pub fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "status": self.status.as_str(),
            "payload": self.payload,
            "diagnostics": self.diagnostics,
        })
    }

    pub fn print(&self) {
        let text = serde_json::to_string_pretty(&self.to_value()).expect("json");
        let _ = writeln!(std::io::stdout(), "{text}");
    }
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::Io(format!("{}: {e}", path.display()));
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        tmp.as_file().set_permissions(std::fs::Permissions::from_mode(0o644)).map_err(io)?;
    }
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

pub fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}
