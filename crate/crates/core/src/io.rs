//! JSON scheme files.
//!
//! A file lists fat points, `{"points": [{"x": ["1","1"], "y": ["1","2"],
//! "m": 2}]}`, or explicit ideal generators, `{"generators": ["X1^2",
//! "Y0 - Y1"]}`. Coordinates are integers or strings `"p"` / `"p/q"`; a
//! missing multiplicity means 1.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::GeneratedIdeal;
use crate::ring::{parse_rational, BiPoly, Q};
use crate::scheme::{FatPointScheme, PointP1P1};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum Coordinate {
    Integer(i64),
    Text(String),
}

impl Coordinate {
    fn value(&self) -> Result<Q> {
        match self {
            Coordinate::Integer(n) => Ok(Q::from_integer((*n).into())),
            Coordinate::Text(s) => parse_rational(s),
        }
    }
}

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointEntry {
    x: [Coordinate; 2],
    y: [Coordinate; 2],
    #[serde(default = "one")]
    m: u32,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SchemeFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    points: Option<Vec<PointEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<String>>,
}

/// Contents of a scheme file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SchemeInput {
    Points(FatPointScheme),
    Generators(GeneratedIdeal),
}

impl SchemeInput {
    /// The fat point scheme, or an error for generator-only input.
    pub fn into_points(self) -> Result<FatPointScheme> {
        match self {
            SchemeInput::Points(y) => Ok(y),
            SchemeInput::Generators(_) => {
                Err(Error::Precondition("this command needs a point list, not ideal generators".into()))
            }
        }
    }
}

fn malformed(e: impl std::fmt::Display) -> Error {
    Error::MalformedScheme(e.to_string())
}

fn as_malformed(e: Error) -> Error {
    match e {
        Error::MalformedScheme(_) => e,
        Error::Parse(m) | Error::Precondition(m) => Error::MalformedScheme(m),
        other => malformed(other),
    }
}

/// Parses the JSON text of a scheme file.
pub fn parse_scheme(text: &str) -> Result<SchemeInput> {
    let file: SchemeFile = serde_json::from_str(text).map_err(malformed)?;
    match (file.points, file.generators) {
        (Some(points), None) => {
            let entries = points
                .into_iter()
                .map(|p| {
                    let [x0, x1] = &p.x;
                    let [y0, y1] = &p.y;
                    let point = PointP1P1::new([x0.value()?, x1.value()?], [y0.value()?, y1.value()?])?;
                    Ok((point, p.m))
                })
                .collect::<Result<Vec<_>>>()
                .map_err(as_malformed)?;
            Ok(SchemeInput::Points(FatPointScheme::new(entries)?))
        }
        (None, Some(gens)) => {
            let polys = gens.iter().map(|g| g.parse::<BiPoly>()).collect::<Result<Vec<_>>>().map_err(as_malformed)?;
            Ok(SchemeInput::Generators(GeneratedIdeal::new(polys).map_err(as_malformed)?))
        }
        (Some(_), Some(_)) => Err(malformed("give either points or generators, not both")),
        (None, None) => Err(malformed("expected a \"points\" or \"generators\" list")),
    }
}

/// Reads a scheme file; a missing or unreadable file is an `Io` error.
pub fn read_scheme(path: &Path) -> Result<SchemeInput> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_scheme(&text)
}

/// JSON text of a point list that `parse_scheme` reads back to `y`.
pub fn scheme_to_json(y: &FatPointScheme) -> String {
    let text = |c: &Q| Coordinate::Text(c.to_string());
    let points = y
        .entries()
        .iter()
        .map(|(p, m)| PointEntry {
            x: [text(&p.x()[0]), text(&p.x()[1])],
            y: [text(&p.y()[0]), text(&p.y()[1])],
            m: *m,
        })
        .collect();
    serde_json::to_string(&SchemeFile { points: Some(points), generators: None }).expect("plain data serializes")
}
