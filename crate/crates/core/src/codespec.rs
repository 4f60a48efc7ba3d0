//! The code-spec text format: a line-oriented `key = value` file that pins
//! down a code completely.
//!
//! ```text
//! # comment
//! p = 2
//! e = 3
//! g = 100
//! label = f8-n567
//! degrees = 1:7, 2:28, 3:168
//! ```
//!
//! Places are given either by the `degrees` shorthand (`degree:count` pairs,
//! meaning the first `count` places of that degree in canonical order) or by
//! explicit `place` lines, one per place:
//!
//! ```text
//! place = 2 1.0.1 1.1.0 1.0.0
//! ```
//!
//! i.e. the degree followed by the `degree + 1` coefficients of the monic
//! minimal polynomial, low degree first, each in the canonical element
//! encoding. Writing a spec always produces the same bytes for the same
//! code.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::code::{CodeError, GagCode};
use crate::field::{FieldError, FieldTower, Poly};
use crate::places::{first_places, irreducible_count, Divisor, Place, PlaceError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("line {0}: expected key = value")]
    BadLine(usize),
    #[error("line {0}: unknown key {1:?}")]
    UnknownKey(usize, String),
    #[error("line {0}: bad value for {1}")]
    BadValue(usize, &'static str),
    #[error("duplicate key {0}")]
    DuplicateKey(&'static str),
    #[error("missing required key {0}")]
    MissingKey(&'static str),
    #[error("spec must use either degrees or place lines, not both")]
    MixedSelection,
    #[error("requested {requested} places of degree {degree}, only {available} exist")]
    NotEnoughPlaces {
        degree: usize,
        requested: usize,
        available: u64,
    },
    #[error("field error: {0}")]
    Field(#[from] FieldError),
    #[error("place error: {0}")]
    Place(#[from] PlaceError),
    #[error("code error: {0}")]
    Code(#[from] CodeError),
}

/// An explicit place entry: degree and minimal-polynomial coefficients as
/// `F_q` indices, low degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitPlace {
    pub degree: usize,
    pub min_poly: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlaceSelection {
    /// `degree -> count`, expanding to the first `count` places of each
    /// degree in canonical order.
    DegreeCounts(BTreeMap<usize, usize>),
    Explicit(Vec<ExplicitPlace>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSpec {
    pub p: u64,
    pub e: u32,
    pub g: usize,
    pub label: Option<String>,
    pub selection: PlaceSelection,
}

impl CodeSpec {
    pub fn parse(text: &str) -> Result<CodeSpec, SpecError> {
        let mut p: Option<u64> = None;
        let mut e: Option<u32> = None;
        let mut g: Option<usize> = None;
        let mut label: Option<String> = None;
        let mut degrees: Option<BTreeMap<usize, usize>> = None;
        let mut place_lines: Vec<(usize, String)> = Vec::new();

        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or(SpecError::BadLine(lineno))?;
            let key = key.trim();
            let value = value.trim();
            match key {
                "p" => {
                    set_once(&mut p, value.parse().map_err(|_| SpecError::BadValue(lineno, "p"))?, "p")?;
                }
                "e" => {
                    set_once(&mut e, value.parse().map_err(|_| SpecError::BadValue(lineno, "e"))?, "e")?;
                }
                "g" => {
                    set_once(&mut g, value.parse().map_err(|_| SpecError::BadValue(lineno, "g"))?, "g")?;
                }
                "label" => {
                    set_once(&mut label, value.to_string(), "label")?;
                }
                "degrees" => {
                    let mut map = BTreeMap::new();
                    for part in value.split(',') {
                        let part = part.trim();
                        if part.is_empty() {
                            continue;
                        }
                        let (d, c) = part
                            .split_once(':')
                            .ok_or(SpecError::BadValue(lineno, "degrees"))?;
                        let d: usize = d.trim().parse().map_err(|_| SpecError::BadValue(lineno, "degrees"))?;
                        let c: usize = c.trim().parse().map_err(|_| SpecError::BadValue(lineno, "degrees"))?;
                        if d == 0 || c == 0 {
                            return Err(SpecError::BadValue(lineno, "degrees"));
                        }
                        *map.entry(d).or_insert(0) += c;
                    }
                    if map.is_empty() {
                        return Err(SpecError::BadValue(lineno, "degrees"));
                    }
                    set_once(&mut degrees, map, "degrees")?;
                }
                "place" => place_lines.push((lineno, value.to_string())),
                other => return Err(SpecError::UnknownKey(lineno, other.to_string())),
            }
        }

        let p = p.ok_or(SpecError::MissingKey("p"))?;
        let e = e.ok_or(SpecError::MissingKey("e"))?;
        let g = g.ok_or(SpecError::MissingKey("g"))?;
        let selection = match (degrees, place_lines.is_empty()) {
            (Some(_), false) => return Err(SpecError::MixedSelection),
            (Some(map), true) => PlaceSelection::DegreeCounts(map),
            (None, true) => return Err(SpecError::MissingKey("degrees or place")),
            (None, false) => {
                let mut places = Vec::with_capacity(place_lines.len());
                for (lineno, line) in place_lines {
                    places.push(parse_place_line(p, e, lineno, &line)?);
                }
                PlaceSelection::Explicit(places)
            }
        };
        Ok(CodeSpec {
            p,
            e,
            g,
            label,
            selection,
        })
    }

    /// Deterministic text form; parsing it back yields an equal spec.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("p = {}\n", self.p));
        out.push_str(&format!("e = {}\n", self.e));
        out.push_str(&format!("g = {}\n", self.g));
        if let Some(label) = &self.label {
            out.push_str(&format!("label = {}\n", label));
        }
        match &self.selection {
            PlaceSelection::DegreeCounts(map) => {
                let parts: Vec<String> =
                    map.iter().map(|(d, c)| format!("{}:{}", d, c)).collect();
                out.push_str(&format!("degrees = {}\n", parts.join(", ")));
            }
            PlaceSelection::Explicit(places) => {
                for pl in places {
                    let coeffs: Vec<String> = pl
                        .min_poly
                        .iter()
                        .map(|&c| encode_fq(self.p, self.e, c))
                        .collect();
                    out.push_str(&format!("place = {} {}\n", pl.degree, coeffs.join(" ")));
                }
            }
        }
        out
    }

    /// Degrees used by this spec, each listed once.
    fn distinct_degrees(&self) -> Vec<usize> {
        match &self.selection {
            PlaceSelection::DegreeCounts(map) => map.keys().copied().collect(),
            PlaceSelection::Explicit(places) => {
                let mut degs: Vec<usize> = places.iter().map(|p| p.degree).collect();
                degs.sort_unstable();
                degs.dedup();
                degs
            }
        }
    }

    /// The tower this spec requires: `m` is the lcm of the place degrees.
    pub fn tower(&self) -> Result<FieldTower, SpecError> {
        let m = self
            .distinct_degrees()
            .iter()
            .fold(1u64, |acc, &d| lcm_u64(acc, d as u64));
        Ok(FieldTower::new(self.p, self.e, m as u32)?)
    }

    /// Resolves the selection into concrete places (canonical order).
    pub fn places(&self, tower: &FieldTower) -> Result<Vec<Place>, SpecError> {
        match &self.selection {
            PlaceSelection::DegreeCounts(map) => {
                let q = tower.q();
                let mut out = Vec::new();
                for (&d, &count) in map {
                    let available = irreducible_count(q, d as u32);
                    if count as u64 > available {
                        return Err(SpecError::NotEnoughPlaces {
                            degree: d,
                            requested: count,
                            available,
                        });
                    }
                    out.extend(first_places(tower, d, count));
                }
                Ok(out)
            }
            PlaceSelection::Explicit(places) => {
                let mut out = Vec::with_capacity(places.len());
                for pl in places {
                    let coeffs: Result<Vec<_>, _> =
                        pl.min_poly.iter().map(|&c| tower.elem(1, c)).collect();
                    let poly = Poly::new(&coeffs?)?;
                    out.push(Place::finite(tower, poly)?);
                }
                Ok(out)
            }
        }
    }

    /// Builds the code this spec describes.
    pub fn build(&self) -> Result<GagCode, SpecError> {
        let tower = self.tower()?;
        let places = self.places(&tower)?;
        Ok(GagCode::build(tower, places, Divisor::at_infinity(self.g))?)
    }

    /// The same spec with the shorthand expanded to explicit places in
    /// canonical order.
    pub fn expand(&self) -> Result<CodeSpec, SpecError> {
        let tower = self.tower()?;
        let mut places = self.places(&tower)?;
        places.sort_by(|a, b| a.canonical_cmp(b));
        let explicit = places
            .into_iter()
            .map(|p| ExplicitPlace {
                degree: p.degree(),
                min_poly: p.min_poly().unwrap().indices().to_vec(),
            })
            .collect();
        Ok(CodeSpec {
            p: self.p,
            e: self.e,
            g: self.g,
            label: self.label.clone(),
            selection: PlaceSelection::Explicit(explicit),
        })
    }
}

fn set_once<T>(slot: &mut Option<T>, value: T, key: &'static str) -> Result<(), SpecError> {
    if slot.is_some() {
        return Err(SpecError::DuplicateKey(key));
    }
    *slot = Some(value);
    Ok(())
}

fn parse_place_line(p: u64, e: u32, lineno: usize, line: &str) -> Result<ExplicitPlace, SpecError> {
    let mut tokens = line.split_whitespace();
    let degree: usize = tokens
        .next()
        .and_then(|t| t.parse().ok())
        .filter(|&d| d >= 1)
        .ok_or(SpecError::BadValue(lineno, "place"))?;
    let coeffs: Vec<&str> = tokens.collect();
    if coeffs.len() != degree + 1 {
        return Err(SpecError::BadValue(lineno, "place"));
    }
    let mut min_poly = Vec::with_capacity(coeffs.len());
    for c in coeffs {
        min_poly.push(parse_fq(p, e, c).ok_or(SpecError::BadValue(lineno, "place"))?);
    }
    Ok(ExplicitPlace { degree, min_poly })
}

/// Canonical encoding of an `F_q` index: `e` base-`p` digits joined by dots.
fn encode_fq(p: u64, e: u32, idx: u64) -> String {
    let mut digits = Vec::with_capacity(e as usize);
    let mut idx = idx;
    for _ in 0..e {
        digits.push((idx % p).to_string());
        idx /= p;
    }
    digits.join(".")
}

fn parse_fq(p: u64, e: u32, s: &str) -> Option<u64> {
    let parts: Vec<&str> = s.split('.').collect();
    if parts.len() != e as usize {
        return None;
    }
    let mut idx = 0u64;
    for part in parts.iter().rev() {
        let d: u64 = part.parse().ok()?;
        if d >= p {
            return None;
        }
        idx = idx * p + d;
    }
    Some(idx)
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}
