use std::io::{self, Write};

use clap::ValueEnum;
use meltdown_core::format_sig;
use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy)]
pub struct OutputSpec {
    pub format: Format,
    pub sig_digits: usize,
}

#[derive(Debug, Clone)]
pub enum Field {
    Num(f64),
    Int(i64),
    Str(String),
    Bool(bool),
}

impl From<f64> for Field {
    fn from(v: f64) -> Self {
        Field::Num(v)
    }
}

impl From<i64> for Field {
    fn from(v: i64) -> Self {
        Field::Int(v)
    }
}

impl From<u32> for Field {
    fn from(v: u32) -> Self {
        Field::Int(v as i64)
    }
}

impl From<usize> for Field {
    fn from(v: usize) -> Self {
        Field::Int(v as i64)
    }
}

impl From<i32> for Field {
    fn from(v: i32) -> Self {
        Field::Int(v as i64)
    }
}

impl From<bool> for Field {
    fn from(v: bool) -> Self {
        Field::Bool(v)
    }
}

impl From<String> for Field {
    fn from(v: String) -> Self {
        Field::Str(v)
    }
}

impl From<&str> for Field {
    fn from(v: &str) -> Self {
        Field::Str(v.to_string())
    }
}

/// What a subcommand produces. Rendering depends on the output format.
#[derive(Debug, Clone)]
pub enum Output {
    /// A single number; plain output is the bare value.
    Scalar(&'static str, Field),
    /// Named fields; plain output is one `name: value` line each.
    Record(Vec<(&'static str, Field)>),
    Table {
        columns: Vec<&'static str>,
        rows: Vec<Vec<Field>>,
    },
    /// Pre-rendered text, written as is for every format.
    Text(String),
}

impl OutputSpec {
    fn text(&self, f: &Field) -> String {
        match f {
            Field::Num(v) => format_sig(*v, self.sig_digits),
            Field::Int(i) => i.to_string(),
            Field::Str(s) => s.clone(),
            Field::Bool(b) => b.to_string(),
        }
    }

    fn json(&self, f: &Field) -> Value {
        match f {
            // round through the decimal rendering so JSON agrees with plain
            Field::Num(v) => format_sig(*v, self.sig_digits)
                .parse::<f64>()
                .ok()
                .and_then(Number::from_f64)
                .map(Value::Number)
                .unwrap_or(Value::Null),
            Field::Int(i) => Value::from(*i),
            Field::Str(s) => Value::from(s.as_str()),
            Field::Bool(b) => Value::from(*b),
        }
    }

    fn json_object(&self, fields: &[(&str, Field)]) -> Value {
        let mut map = Map::new();
        for (k, v) in fields {
            map.insert(k.to_string(), self.json(v));
        }
        Value::Object(map)
    }

    pub fn write(&self, out: &mut dyn Write, output: &Output) -> io::Result<()> {
        match (output, self.format) {
            (Output::Text(t), _) => out.write_all(t.as_bytes()),

            (Output::Scalar(_, v), Format::Plain) => writeln!(out, "{}", self.text(v)),
            (Output::Scalar(name, v), Format::Json) => {
                writeln!(out, "{}", self.json_object(&[(name, v.clone())]))
            }
            (Output::Scalar(name, v), Format::Csv) => {
                writeln!(out, "{name}")?;
                writeln!(out, "{}", self.text(v))
            }

            (Output::Record(fields), Format::Plain) => {
                for (k, v) in fields {
                    writeln!(out, "{k}: {}", self.text(v))?;
                }
                Ok(())
            }
            (Output::Record(fields), Format::Json) => writeln!(out, "{}", self.json_object(fields)),
            (Output::Record(fields), Format::Csv) => {
                let keys: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
                let vals: Vec<String> = fields.iter().map(|(_, v)| self.text(v)).collect();
                writeln!(out, "{}", keys.join(","))?;
                writeln!(out, "{}", vals.join(","))
            }

            (Output::Table { columns, rows }, Format::Plain) => {
                let cells: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| r.iter().map(|f| self.text(f)).collect())
                    .collect();
                let mut widths: Vec<usize> = columns.iter().map(|c| c.len()).collect();
                for row in &cells {
                    for (w, c) in widths.iter_mut().zip(row) {
                        *w = (*w).max(c.len());
                    }
                }
                let line = |items: Vec<&str>| {
                    items
                        .iter()
                        .zip(&widths)
                        .map(|(s, w)| format!("{s:>w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                };
                writeln!(out, "{}", line(columns.clone()))?;
                for row in &cells {
                    writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
                }
                Ok(())
            }
            (Output::Table { columns, rows }, Format::Json) => {
                let items: Vec<Value> = rows
                    .iter()
                    .map(|r| {
                        let pairs: Vec<(&str, Field)> =
                            columns.iter().copied().zip(r.iter().cloned()).collect();
                        self.json_object(&pairs)
                    })
                    .collect();
                writeln!(out, "{}", Value::Array(items))
            }
            (Output::Table { columns, rows }, Format::Csv) => {
                writeln!(out, "{}", columns.join(","))?;
                for r in rows {
                    let vals: Vec<String> = r.iter().map(|f| self.text(f)).collect();
                    writeln!(out, "{}", vals.join(","))?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(format: Format, o: &Output) -> String {
        let spec = OutputSpec {
            format,
            sig_digits: 4,
        };
        let mut buf = Vec::new();
        spec.write(&mut buf, o).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn scalar() {
        let o = Output::Scalar("value", Field::Num(1.23456));
        assert_eq!(render(Format::Plain, &o), "1.235\n");
        assert_eq!(render(Format::Json, &o), "{\"value\":1.235}\n");
        assert_eq!(render(Format::Csv, &o), "value\n1.235\n");
    }

    #[test]
    fn record_and_table() {
        let r = Output::Record(vec![("a", Field::Int(1)), ("b", Field::Num(0.5))]);
        assert_eq!(render(Format::Plain, &r), "a: 1\nb: 0.5\n");
        assert_eq!(render(Format::Csv, &r), "a,b\n1,0.5\n");
        let t = Output::Table {
            columns: vec!["k", "x"],
            rows: vec![
                vec![Field::Int(1), Field::Num(40.0)],
                vec![Field::Int(2), Field::Num(41.8375)],
            ],
        };
        assert_eq!(render(Format::Plain, &t), "k      x\n1     40\n2  41.84\n");
        assert_eq!(
            render(Format::Json, &t),
            "[{\"k\":1,\"x\":40.0},{\"k\":2,\"x\":41.84}]\n"
        );
    }
}
