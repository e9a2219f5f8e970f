//! Fixture tables: one knot or link per line,
//! `name<TAB>gauss-code<TAB>c0 c1 c2 …`, with `#` starting a comment.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::gauss::GaussDiagram;
use crate::poly::IntPolynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotFixture {
    pub name: String,
    pub code: String,
    pub diagram: GaussDiagram,
    pub expected: IntPolynomial,
}

pub fn parse_fixture_table(text: &str) -> Result<Vec<KnotFixture>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim_end_matches(['\r', '\n']);
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [name, code, coeffs] = fields[..] else {
            return Err(Error::ParseError {
                line: line_no,
                message: format!("expected 3 tab-separated fields, found {}", fields.len()),
            });
        };
        let name = name.trim();
        if name.is_empty() {
            return Err(Error::ParseError { line: line_no, message: "empty name".into() });
        }
        let expected = IntPolynomial::parse_machine(coeffs).ok_or_else(|| Error::ParseError {
            line: line_no,
            message: format!("bad coefficient list `{}`", coeffs.trim()),
        })?;
        let diagram: GaussDiagram =
            code.parse().map_err(|e| Error::InvalidCode { line: line_no, source: Box::new(e) })?;
        out.push(KnotFixture { name: name.to_string(), code: code.trim().to_string(), diagram, expected });
    }
    Ok(out)
}

pub fn load_fixture_table(path: &Path) -> Result<Vec<KnotFixture>> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    parse_fixture_table(&text)
}
