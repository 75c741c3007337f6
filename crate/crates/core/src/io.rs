//! Matrix input: `{"f": 4, "g": 3, "entries": [["x1", "0", ...], ...]}`,
//! the word `generic`, or a file holding the JSON.

use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polyring::{generic_matrix, parse_poly, PolyMatrix};

/// Largest side accepted from untrusted input.
pub const MAX_SIDE: usize = 64;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixJson {
    f: usize,
    g: usize,
    entries: Entries,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entries {
    Word(String),
    Rows(Vec<Vec<Entry>>),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

fn check_side(f: usize, g: usize) -> Result<()> {
    if f == 0 || g == 0 || f > MAX_SIDE || g > MAX_SIDE {
        return Err(Error::InvalidParameters(format!("matrix size {f}x{g} outside 1..={MAX_SIDE}")));
    }
    Ok(())
}

/// Parses the matrix JSON format. Entries are exact rationals or polynomial
/// text in `x1, x2, ...`; `"entries": "generic"` gives `x_{(r-1)g+c}`.
pub fn parse_matrix_json(text: &str) -> Result<PolyMatrix> {
    let raw: MatrixJson = serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
    check_side(raw.f, raw.g)?;
    let rows = match raw.entries {
        Entries::Word(w) if w == "generic" => return Ok(generic_matrix(raw.f, raw.g)),
        Entries::Word(w) => return Err(Error::Parse(format!("unknown matrix keyword {w:?}"))),
        Entries::Rows(rows) => rows,
    };
    if rows.len() != raw.f || rows.iter().any(|r| r.len() != raw.g) {
        return Err(Error::DimensionMismatch(format!(
            "declared {}x{} but entries have {} rows of lengths {:?}",
            raw.f,
            raw.g,
            rows.len(),
            rows.iter().map(Vec::len).collect::<Vec<_>>()
        )));
    }
    let mut m = PolyMatrix::zeros(raw.f, raw.g);
    for (r, row) in rows.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            let p = match e {
                Entry::Int(v) => parse_poly(&v.to_string()),
                Entry::Text(t) => parse_poly(t),
            }
            .map_err(|err| Error::Parse(format!("entry ({}, {}): {err}", r + 1, c + 1)))?;
            m.set(r, c, p);
        }
    }
    Ok(m)
}

/// Resolves a matrix argument: `generic` (needs `f`, `g`), inline JSON, or a path.
pub fn load_matrix(arg: &str, f: Option<usize>, g: Option<usize>) -> Result<PolyMatrix> {
    let arg = arg.trim();
    if arg == "generic" {
        let (Some(f), Some(g)) = (f, g) else {
            return Err(Error::InvalidParameters("a generic matrix needs --f and --g".into()));
        };
        check_side(f, g)?;
        return Ok(generic_matrix(f, g));
    }
    let text = if arg.starts_with('{') { arg.to_string() } else { std::fs::read_to_string(Path::new(arg))? };
    let m = parse_matrix_json(&text)?;
    for (want, got, name) in [(f, m.rows(), "f"), (g, m.cols(), "g")] {
        if want.is_some_and(|w| w != got) {
            return Err(Error::DimensionMismatch(format!("--{name} disagrees with the matrix ({got})")));
        }
    }
    Ok(m)
}

pub fn matrix_to_json(m: &PolyMatrix) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows()).map(|r| m.row(r).iter().map(ToString::to_string).collect()).collect();
    json!({ "f": m.rows(), "g": m.cols(), "entries": rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let m = parse_matrix_json(r#"{"f":2,"g":2,"entries":[["x1","1/2"],[0,"x2^2 - x1"]]}"#).unwrap();
        assert_eq!(m.get(0, 1).to_string(), "1/2");
        let again = parse_matrix_json(&matrix_to_json(&m).to_string()).unwrap();
        assert_eq!(again, m);
    }

    #[test]
    fn generic_keyword() {
        let m = parse_matrix_json(r#"{"f":3,"g":2,"entries":"generic"}"#).unwrap();
        assert_eq!(m, generic_matrix(3, 2));
        assert_eq!(load_matrix("generic", Some(3), Some(2)).unwrap(), m);
        assert!(load_matrix("generic", None, Some(2)).is_err());
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(matches!(
            parse_matrix_json(r#"{"f":2,"g":2,"entries":[["1","0"]]}"#),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(parse_matrix_json(r#"{"f":0,"g":2,"entries":[]}"#).is_err());
        assert!(parse_matrix_json(r#"{"f":1,"g":1,"entries":[["x0"]]}"#).is_err());
        assert!(parse_matrix_json("not json").is_err());
    }
}
