use serde::Serialize;
use serde_json::Value;

/// One JSON document per command invocation (or per input graph).
#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<String>,
    pub result: Value,
    pub timing_ms: Option<f64>,
    pub version: &'static str,
}

impl Report {
    pub fn new(
        command: &str,
        inputs: Vec<String>,
        result: Value,
        timing_ms: Option<f64>,
    ) -> Report {
        Report {
            command: command.to_owned(),
            inputs,
            result,
            timing_ms,
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}
