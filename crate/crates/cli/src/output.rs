use std::io::{self, Write};

use serde_json::Value;

/// One compact JSON document per line, or an aligned `key  value` table.
pub fn emit(lines: &[Value], pretty: bool) {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for (i, value) in lines.iter().enumerate() {
        if pretty {
            if i > 0 {
                let _ = writeln!(out);
            }
            let mut rows = Vec::new();
            flatten("", value, &mut rows);
            let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (key, cell) in rows {
                let _ = writeln!(out, "{key:<width$}  {cell}");
            }
        } else {
            let _ = writeln!(out, "{value}");
        }
    }
}

fn flatten(prefix: &str, value: &Value, rows: &mut Vec<(String, String)>) {
    let join = |key: &str| {
        if prefix.is_empty() {
            key.to_string()
        } else {
            format!("{prefix}.{key}")
        }
    };
    match value {
        Value::Object(map) if !map.is_empty() => {
            for (k, v) in map {
                flatten(&join(k), v, rows);
            }
        }
        Value::Array(items) if !items.is_empty() => {
            for (i, v) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), v, rows);
            }
        }
        Value::String(s) if s.is_empty() => rows.push((prefix.to_string(), "ε".to_string())),
        Value::String(s) => rows.push((prefix.to_string(), s.clone())),
        other => rows.push((prefix.to_string(), other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn flattens_nested_values() {
        let mut rows = Vec::new();
        flatten("", &json!({"fit": {"preperiod": "", "period": "ab"}, "n": [1, 2]}), &mut rows);
        let keys: Vec<&str> = rows.iter().map(|(k, _)| k.as_str()).collect();
        assert_eq!(keys, ["fit.preperiod", "fit.period", "n.0", "n.1"]);
        assert_eq!(rows[0].1, "ε");
    }
}
