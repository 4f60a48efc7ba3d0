//! Symbol files: one canonical element encoding per line, `#` comments and
//! blank lines ignored.

use anyhow::{bail, Result};
use gagc::code::{GagCode, Message};
use gagc::field::{FieldElem, FieldTower};

fn parse_symbols(code: &GagCode, text: &str, expected: usize, what: &str) -> Result<Vec<FieldElem>> {
    let tower = code.tower();
    let mut out = Vec::with_capacity(expected);
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match tower.parse_elem(1, line) {
            Ok(sym) => out.push(sym),
            Err(e) => bail!("{what} line {}: {e}", lineno + 1),
        }
    }
    if out.len() != expected {
        bail!("{what} has {} symbols, expected {expected}", out.len());
    }
    Ok(out)
}

pub fn parse_message(code: &GagCode, text: &str) -> Result<Message> {
    Ok(Message(parse_symbols(code, text, code.k(), "message")?))
}

pub fn parse_word(code: &GagCode, text: &str) -> Result<Vec<FieldElem>> {
    parse_symbols(code, text, code.n(), "received word")
}

pub fn render(tower: &FieldTower, symbols: &[FieldElem]) -> String {
    let mut out = String::new();
    for s in symbols {
        out.push_str(&tower.encode_elem(*s));
        out.push('\n');
    }
    out
}
