//! Deterministic emission: every float is printed with 12 significant
//! digits so derived values pin down reproducibly.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde_json::Value;

/// 12-significant-digit text form.
pub fn fmt12(x: f64) -> String {
    format!("{x:.11e}")
}

/// Round to 12 significant digits.
pub fn sig12(x: f64) -> f64 {
    fmt12(x).parse().expect("formatted float parses back")
}

/// Round every float in a JSON tree to 12 significant digits.
pub fn round_floats(value: &mut Value) {
    match value {
        Value::Number(n) => {
            if let Some(f) = n.as_f64() {
                if !n.is_i64() && !n.is_u64() {
                    if let Some(rounded) = serde_json::Number::from_f64(sig12(f)) {
                        *value = Value::Number(rounded);
                    }
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

/// Pretty JSON with rounded floats and a trailing newline.
pub fn json_text(mut value: Value) -> String {
    round_floats(&mut value);
    let mut text = serde_json::to_string_pretty(&value).expect("report serializes");
    text.push('\n');
    text
}

/// Write to the path when given, stdout otherwise.
pub fn emit(text: &str, out: Option<&Path>) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}
