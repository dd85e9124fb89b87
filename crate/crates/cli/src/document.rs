//! Configuration documents: a TOML file with `[[components]]` and
//! `[[points]]` tables describing one curve.
//!
//! ```toml
//! [[components]]
//! name = "T1"
//! multiplicity = 1          # default 1
//! genus = 0                 # default 0
//! self_intersection = -2
//! intrinsic = ["node"]      # optional: node, cusp
//!
//! [[points]]
//! name = "P1"
//! local_type = "transverse" # transverse, tacnode, ordinary_triple
//! components = ["T1", "T2"]
//! ```

use std::collections::HashMap;
use std::ops::Range;

use kodaira_core::{Component, CurveConfiguration, IntrinsicSingularity, LocalType, ModelError, SingularPoint};
use serde::Deserialize;
use thiserror::Error;
use toml::Spanned;

/// Line and column, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl std::fmt::Display for Location {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

fn locate(source: &str, offset: usize) -> Location {
    let before = &source[..offset.min(source.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rfind('\n').map_or(before.len(), |nl| before.len() - nl - 1) + 1;
    Location { line, column }
}

#[derive(Debug, Error)]
pub enum DocumentError {
    /// Malformed TOML, wrong field types, unknown fields or an empty
    /// component list.
    #[error("parse error at {location}: {message}")]
    Parse { location: Location, message: String },
    /// Well-formed document describing an invalid configuration.
    #[error("invalid configuration at {location}: {message}")]
    Invalid { location: Location, message: String },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(default)]
    components: Vec<Spanned<RawComponent>>,
    #[serde(default)]
    points: Vec<Spanned<RawPoint>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComponent {
    name: Spanned<String>,
    #[serde(default = "one")]
    multiplicity: u32,
    #[serde(default)]
    genus: u32,
    self_intersection: i64,
    #[serde(default)]
    intrinsic: Vec<IntrinsicSingularity>,
}

fn one() -> u32 {
    1
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPoint {
    name: Spanned<String>,
    local_type: LocalType,
    components: Vec<Spanned<String>>,
}

pub fn parse_document(source: &str) -> Result<CurveConfiguration, DocumentError> {
    let raw: RawDocument = toml::from_str(source).map_err(|e| {
        let offset = e.span().map_or(0, |s| s.start);
        DocumentError::Parse {
            location: locate(source, offset),
            message: e.message().trim().to_string(),
        }
    })?;
    if raw.components.is_empty() {
        return Err(DocumentError::Parse {
            location: locate(source, 0),
            message: "no [[components]] entries".to_string(),
        });
    }
    let invalid = |span: Range<usize>, message: String| DocumentError::Invalid {
        location: locate(source, span.start),
        message,
    };

    let mut index = HashMap::new();
    for (i, c) in raw.components.iter().enumerate() {
        let name = c.get_ref().name.get_ref();
        if index.insert(name.clone(), i).is_some() {
            return Err(invalid(
                c.get_ref().name.span(),
                format!("duplicate component name `{name}`"),
            ));
        }
    }
    let mut points = Vec::with_capacity(raw.points.len());
    for p in &raw.points {
        let p_ref = p.get_ref();
        let mut incident = Vec::new();
        for c in &p_ref.components {
            let i = index.get(c.get_ref()).ok_or_else(|| {
                invalid(
                    c.span(),
                    format!(
                        "point `{}` references unknown component `{}`",
                        p_ref.name.get_ref(),
                        c.get_ref()
                    ),
                )
            })?;
            incident.push(*i);
        }
        points.push(SingularPoint::new(
            p_ref.name.get_ref().clone(),
            p_ref.local_type,
            incident,
        ));
    }
    let components = raw
        .components
        .iter()
        .map(|c| {
            let c = c.get_ref();
            Component {
                name: c.name.get_ref().clone(),
                multiplicity: c.multiplicity,
                genus: c.genus,
                self_intersection: c.self_intersection,
                intrinsic: c.intrinsic.clone(),
            }
        })
        .collect();

    CurveConfiguration::new(components, points).map_err(|e| {
        let span = model_error_span(&e, &raw).unwrap_or(0..0);
        invalid(span, e.to_string())
    })
}

fn model_error_span(e: &ModelError, raw: &RawDocument) -> Option<Range<usize>> {
    let component = |name: &str| {
        raw.components
            .iter()
            .find(|c| c.get_ref().name.get_ref() == name)
            .map(Spanned::span)
    };
    let point = |name: &str| {
        raw.points
            .iter()
            .find(|p| p.get_ref().name.get_ref() == name)
            .map(Spanned::span)
    };
    match e {
        ModelError::ZeroMultiplicity(n)
        | ModelError::SingularEllipticComponent(n)
        | ModelError::DuplicateComponent(n) => component(n),
        ModelError::UnsupportedGenus { name, .. } => component(name),
        ModelError::DuplicatePoint(n) | ModelError::RepeatedIncidence(n) => point(n),
        ModelError::Arity { point: n, .. } | ModelError::UnknownComponent { point: n, .. } => point(n),
        ModelError::NoComponents | ModelError::Disconnected | ModelError::LengthMismatch { .. } => None,
    }
}

/// Renders a configuration in the document format; `parse_document`
/// reads it back to an equal configuration.
pub fn write_document(config: &CurveConfiguration) -> String {
    let mut out = String::new();
    for c in config.components() {
        out.push_str("[[components]]\n");
        out.push_str(&format!("name = \"{}\"\n", c.name));
        out.push_str(&format!("multiplicity = {}\n", c.multiplicity));
        out.push_str(&format!("genus = {}\n", c.genus));
        out.push_str(&format!("self_intersection = {}\n", c.self_intersection));
        if !c.intrinsic.is_empty() {
            let list: Vec<String> = c.intrinsic.iter().map(|s| format!("\"{s}\"")).collect();
            out.push_str(&format!("intrinsic = [{}]\n", list.join(", ")));
        }
        out.push('\n');
    }
    for p in config.points() {
        out.push_str("[[points]]\n");
        out.push_str(&format!("name = \"{}\"\n", p.name));
        out.push_str(&format!("local_type = \"{}\"\n", p.local_type));
        let names: Vec<String> = p
            .incident
            .iter()
            .map(|&i| format!("\"{}\"", config.components()[i].name))
            .collect();
        out.push_str(&format!("components = [{}]\n\n", names.join(", ")));
    }
    out
}
