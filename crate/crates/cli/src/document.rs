//! JSON documents for coloured point sets and line covers.

use std::path::Path;

use blockset::blocked::ColouredPointSet;
use blockset::constructions::LineCover;
use blockset::geom::{PointConfig, Rational, RationalPoint};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl Metadata {
    pub fn named(name: impl Into<String>, provenance: impl Into<String>) -> Self {
        Metadata {
            name: Some(name.into()),
            seed: None,
            provenance: Some(provenance.into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointRecord {
    pub coords: Vec<String>,
    pub colour: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigDocument {
    pub dim: usize,
    pub points: Vec<PointRecord>,
    #[serde(default)]
    pub metadata: Metadata,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LineCoverDocument {
    pub k: usize,
    pub n: usize,
    pub lines: Vec<Vec<usize>>,
    #[serde(default)]
    pub metadata: Metadata,
}

pub enum Document {
    Config(ConfigDocument),
    Lines(LineCoverDocument),
}

impl ConfigDocument {
    pub fn from_set(set: &ColouredPointSet, metadata: Metadata) -> Self {
        let points = set
            .config()
            .iter()
            .zip(set.colours())
            .map(|(p, &colour)| PointRecord {
                coords: p.coords().iter().map(Rational::to_string).collect(),
                colour,
            })
            .collect();
        ConfigDocument {
            dim: set.dim(),
            points,
            metadata,
        }
    }

    pub fn to_set(&self) -> Result<ColouredPointSet, CliError> {
        if self.dim == 0 {
            return Err(CliError::Parse("dim must be at least 1".into()));
        }
        let mut points = Vec::with_capacity(self.points.len());
        for (i, record) in self.points.iter().enumerate() {
            if record.coords.len() != self.dim {
                return Err(CliError::Parse(format!(
                    "point {i} has {} coordinates, expected {}",
                    record.coords.len(),
                    self.dim
                )));
            }
            let coords = record
                .coords
                .iter()
                .map(|c| {
                    parse_rational(c)
                        .ok_or_else(|| CliError::Parse(format!("point {i}: bad coordinate {c:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            points.push(RationalPoint::new(coords));
        }
        let config =
            PointConfig::new(self.dim, points).map_err(|e| CliError::Parse(e.to_string()))?;
        ColouredPointSet::new(config, self.points.iter().map(|r| r.colour).collect())
            .map_err(|e| CliError::Parse(e.to_string()))
    }
}

impl LineCoverDocument {
    pub fn from_cover(cover: &LineCover, metadata: Metadata) -> Self {
        LineCoverDocument {
            k: cover.k,
            n: cover.n,
            lines: cover.lines.clone(),
            metadata,
        }
    }

    pub fn to_cover(&self) -> LineCover {
        LineCover {
            k: self.k,
            n: self.n,
            lines: self.lines.clone(),
        }
    }
}

/// Accepts `p/q` or `p` with an optional sign; rejects a zero denominator.
pub fn parse_rational(s: &str) -> Option<Rational> {
    s.trim().parse().ok()
}

pub fn read(path: &Path) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| match e {
        CliError::Parse(msg) => CliError::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn parse(text: &str) -> Result<Document, CliError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    if value.get("lines").is_some() {
        serde_json::from_value(value).map(Document::Lines)
    } else {
        serde_json::from_value(value).map(Document::Config)
    }
    .map_err(|e| CliError::Parse(e.to_string()))
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents serialise");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use blockset::constructions::canonical;

    #[test]
    fn round_trip() {
        let set = canonical("K3333").unwrap();
        let doc = ConfigDocument::from_set(&set, Metadata::named("K3333", "canonical"));
        let text = to_json(&doc);
        match parse(&text).unwrap() {
            Document::Config(back) => {
                assert_eq!(back, doc);
                assert_eq!(back.to_set().unwrap(), set);
            }
            Document::Lines(_) => panic!("wrong kind"),
        }
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/6").unwrap().to_string(), "-1/2");
        assert_eq!(parse_rational("4/2").unwrap().to_string(), "2");
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("1/00").is_none());
        assert!(parse_rational("x").is_none());
        assert!(parse_rational("").is_none());
    }

    #[test]
    fn rejects_bad_documents() {
        for text in [
            "{",
            r#"{"dim":2,"points":[{"coords":["0"],"colour":0}]}"#,
            r#"{"dim":2,"points":[{"coords":["0","0"],"colour":1}]}"#,
            r#"{"dim":2,"points":[{"coords":["0","0"],"colour":0},{"coords":["0","0"],"colour":1}]}"#,
            r#"{"dim":2,"points":[{"coords":["0","a"],"colour":0}]}"#,
            r#"{"dim":2,"points":[],"extra":1}"#,
            r#"{"dim":0,"points":[{"coords":[],"colour":0}]}"#,
        ] {
            let parsed = parse(text).and_then(|d| match d {
                Document::Config(c) => c.to_set().map(|_| ()),
                Document::Lines(_) => Ok(()),
            });
            assert!(matches!(parsed, Err(CliError::Parse(_))), "{text}");
        }
    }
}
