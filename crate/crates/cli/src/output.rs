use std::fs;
use std::io::{self, Write};
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Ten significant digits for human-readable output.
pub fn text_num(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..10).contains(&exp) {
        format!("{:.*}", (9 - exp).max(0) as usize, x)
    } else {
        format!("{x:.9e}")
    }
}

/// Shortest representation that round-trips to the same binary64 value.
pub fn machine_num(x: f64) -> String {
    format!("{x:?}")
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("output types serialize");
    text.push('\n');
    text
}

pub fn emit(path: Option<&Path>, content: &str) -> io::Result<()> {
    match path {
        Some(path) => fs::write(path, content),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(content.as_bytes())?;
            stdout.flush()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_numbers_have_ten_digits() {
        assert_eq!(text_num(1.2020569031595942), "1.202056903");
        assert_eq!(text_num(40.61318131332324), "40.61318131");
        assert_eq!(text_num(1.5e-12), "1.500000000e-12");
        assert_eq!(text_num(0.0), "0");
    }

    #[test]
    fn machine_numbers_round_trip() {
        for x in [0.1, 1.0 / 3.0, 1e-300, 6.02214076e23, -2.5] {
            assert_eq!(machine_num(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("a, b"), "\"a, b\"");
    }
}
