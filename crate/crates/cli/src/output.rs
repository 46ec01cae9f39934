use serde_json::{json, Map, Value};

use rk_core::{Complex64, Error};

/// What a command produced: a JSON payload plus the lines shown without `--json`.
pub struct Report {
    pub inputs: Value,
    pub result: Value,
    pub diagnostics: Map<String, Value>,
    pub text: Vec<String>,
    /// A computed check that did not hold (exit code 3).
    pub failed: bool,
}

impl Report {
    pub fn new(inputs: Value) -> Self {
        Report { inputs, result: Value::Null, diagnostics: Map::new(), text: Vec::new(), failed: false }
    }

    pub fn result(mut self, v: Value) -> Self {
        self.result = v;
        self
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    pub fn diag(&mut self, key: &str, v: impl Into<Value>) {
        self.diagnostics.insert(key.to_string(), v.into());
    }

    pub fn envelope(&self, command: &str) -> Value {
        json!({
            "command": command,
            "inputs": self.inputs,
            "result": self.result,
            "diagnostics": self.diagnostics,
        })
    }
}

pub fn error_envelope(command: &str, e: &Error) -> Value {
    json!({
        "command": command,
        "error": { "kind": error_kind(e), "message": e.to_string() },
    })
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Domain(_) => "domain",
        Error::Parse(_) => "parse",
        Error::Pole(_) => "pole",
        Error::RootsNotConverged { .. } => "roots_not_converged",
        Error::Quadrature { .. } => "quadrature",
        Error::NonIntegerWinding { .. } => "non_integer_winding",
        Error::Numeric(_) => "numeric",
        Error::Budget(_) => "budget",
        Error::Consistency(_) => "consistency",
        Error::CommonComponent => "common_component",
        Error::Precondition(_) => "precondition",
        Error::Unsupported(_) => "unsupported",
    }
}

pub fn exit_code(e: &Error) -> u8 {
    if e.is_numeric() {
        3
    } else {
        2
    }
}

/// `a+bi` for display; a component below 1e-13 of the modulus is shown as 0.
pub fn fmt_c(z: Complex64) -> String {
    let floor = 1e-13 * z.norm().max(1e-300);
    let clean = |x: f64| if x.abs() <= floor { 0.0 } else { x };
    let (re, im) = (clean(z.re), clean(z.im));
    if im == 0.0 {
        format!("{re}")
    } else if re == 0.0 {
        format!("{im}i")
    } else if im < 0.0 {
        format!("{re}-{}i", -im)
    } else {
        format!("{re}+{im}i")
    }
}

pub fn cjson(z: Complex64) -> Value {
    json!([z.re, z.im])
}
