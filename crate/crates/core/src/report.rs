//! Deterministic machine-readable output.
//!
//! Identical configuration must give byte-identical output, so objects keep
//! a fixed field order and every float is printed with the same fixed
//! 17-significant-digit scientific format in json, csv and plain text alike.

/// Fixed 17-significant-digit formatting used for every numeric field.
pub fn fmt_f64(x: f64) -> String {
    if !x.is_finite() {
        // ln-values of valid results are always finite; this only shows up
        // in diagnostic fields
        return if x.is_nan() {
            "nan".to_owned()
        } else if x > 0.0 {
            "inf".to_owned()
        } else {
            "-inf".to_owned()
        };
    }
    format!("{x:.16e}")
}

/// A json value with deterministic serialization.
#[derive(Clone, Debug)]
pub enum Value {
    Str(String),
    Num(f64),
    Int(i64),
    Bool(bool),
    Arr(Vec<Value>),
    Obj(Vec<(&'static str, Value)>),
}

impl Value {
    pub fn str(s: impl Into<String>) -> Value {
        Value::Str(s.into())
    }

    pub fn to_json(&self) -> String {
        let mut out = String::new();
        self.write_json(&mut out);
        out
    }

    fn write_json(&self, out: &mut String) {
        match self {
            Value::Str(s) => {
                out.push('"');
                for ch in s.chars() {
                    match ch {
                        '"' => out.push_str("\\\""),
                        '\\' => out.push_str("\\\\"),
                        '\n' => out.push_str("\\n"),
                        '\t' => out.push_str("\\t"),
                        '\r' => out.push_str("\\r"),
                        c if (c as u32) < 0x20 => {
                            out.push_str(&format!("\\u{:04x}", c as u32));
                        }
                        c => out.push(c),
                    }
                }
                out.push('"');
            }
            Value::Num(x) => {
                let s = fmt_f64(*x);
                if x.is_finite() {
                    out.push_str(&s);
                } else {
                    // not representable as a json number
                    out.push('"');
                    out.push_str(&s);
                    out.push('"');
                }
            }
            Value::Int(i) => out.push_str(&i.to_string()),
            Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Value::Arr(items) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    item.write_json(out);
                }
                out.push(']');
            }
            Value::Obj(fields) => {
                out.push('{');
                for (i, (key, val)) in fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push('"');
                    out.push_str(key);
                    out.push_str("\":");
                    val.write_json(out);
                }
                out.push('}');
            }
        }
    }
}

/// Renders a csv table; fields containing commas, quotes or newlines are
/// quoted.
pub fn to_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        let escaped: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
        out.push_str(&escaped.join(","));
        out.push('\n');
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_is_17_digits() {
        assert_eq!(fmt_f64(1.0), "1.0000000000000000e0");
        assert_eq!(fmt_f64(-0.5), "-5.0000000000000000e-1");
        let s = fmt_f64(std::f64::consts::PI);
        assert_eq!(s, "3.1415926535897931e0");
    }

    #[test]
    fn json_is_deterministic_and_escaped() {
        let v = Value::Obj(vec![
            ("command", Value::str("compute")),
            ("x", Value::Num(2.0)),
            ("note", Value::str("a\"b\\c\nd")),
            ("flags", Value::Arr(vec![Value::Bool(true), Value::Int(-3)])),
        ]);
        let a = v.to_json();
        let b = v.to_json();
        assert_eq!(a, b);
        assert_eq!(
            a,
            "{\"command\":\"compute\",\"x\":2.0000000000000000e0,\
             \"note\":\"a\\\"b\\\\c\\nd\",\"flags\":[true,-3]}"
        );
    }

    #[test]
    fn csv_escapes_fields() {
        let csv = to_csv(
            &["a", "b"],
            &[vec!["plain".into(), "needs,quote \"x\"".into()]],
        );
        assert_eq!(csv, "a,b\nplain,\"needs,quote \"\"x\"\"\"\n");
    }
}
