//! JSON and Graphviz DOT export.
//!
//! JSON shape: `{"name", "elements":[{"id","label","rank"}], "covers":[[lo,hi]],
//! "properties":{…}, "covers_annotated":[[lo,hi,degree,moves…]]}`. `name`,
//! `properties` and `covers_annotated` are omitted when absent.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::FinitePoset;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            other => Err(Error::InvalidParameters(format!(
                "unknown format {other:?}"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRecord {
    pub id: usize,
    pub label: String,
    pub rank: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Properties {
    pub graded: bool,
    pub lattice: bool,
    /// `null` when the poset is not a lattice.
    pub distributive: Option<bool>,
    /// `null` when the poset is not graded.
    pub eulerian: Option<bool>,
}

/// A cover with the moves producing it and its degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnotatedCover {
    pub lower: usize,
    pub upper: usize,
    pub degree: usize,
    /// Move names such as `"L1"` (left by `s_1`) or `"R2"`.
    pub moves: Vec<String>,
}

impl Serialize for AnnotatedCover {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut row: Vec<Value> = vec![self.lower.into(), self.upper.into(), self.degree.into()];
        row.extend(self.moves.iter().map(|m| Value::from(m.as_str())));
        row.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AnnotatedCover {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let row = Vec::<Value>::deserialize(d)?;
        let num = |i: usize| {
            row.get(i)
                .and_then(Value::as_u64)
                .map(|v| v as usize)
                .ok_or_else(|| D::Error::custom("annotated cover needs [lo, hi, degree, moves...]"))
        };
        let moves = row
            .iter()
            .skip(3)
            .map(|v| {
                v.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| D::Error::custom("move must be a string"))
            })
            .collect::<std::result::Result<_, _>>()?;
        Ok(AnnotatedCover {
            lower: num(0)?,
            upper: num(1)?,
            degree: num(2)?,
            moves,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub elements: Vec<ElementRecord>,
    pub covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub properties: Option<Properties>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covers_annotated: Option<Vec<AnnotatedCover>>,
}

impl FinitePoset {
    pub fn properties(&self) -> Properties {
        let grading = self.grading();
        let lattice = self.is_lattice();
        Properties {
            graded: grading.graded,
            lattice,
            distributive: lattice.then(|| self.is_distributive().unwrap_or(false)),
            eulerian: grading.graded.then(|| self.is_eulerian().unwrap_or(false)),
        }
    }

    /// Elements and covers only; ranks are filled in when the poset is graded.
    pub fn to_document(&self) -> PosetDocument {
        let grading = self.grading();
        PosetDocument {
            name: None,
            elements: self
                .labels
                .iter()
                .enumerate()
                .map(|(id, label)| ElementRecord {
                    id,
                    label: label.clone(),
                    rank: grading.graded.then(|| grading.ranks[id]),
                })
                .collect(),
            covers: self.covers.iter().map(|&(x, y)| [x, y]).collect(),
            properties: None,
            covers_annotated: None,
        }
    }

    /// JSON document; non-empty posets also carry their properties.
    pub fn to_json(&self) -> String {
        let mut doc = self.to_document();
        if !self.is_empty() {
            doc.properties = Some(self.properties());
        }
        doc.to_json()
    }

    pub fn to_dot(&self) -> String {
        self.to_document().to_dot()
    }

    pub fn serialize(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Dot => self.to_dot(),
        }
    }

    pub fn from_json(text: &str) -> Result<(FinitePoset, PosetDocument)> {
        let doc: PosetDocument =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        let poset = doc.to_poset()?;
        Ok((poset, doc))
    }
}

impl PosetDocument {
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }

    pub fn to_poset(&self) -> Result<FinitePoset> {
        for (k, e) in self.elements.iter().enumerate() {
            if e.id != k {
                return Err(Error::Format(format!("element {k} has id {}", e.id)));
            }
        }
        let labels = self.elements.iter().map(|e| e.label.clone()).collect();
        let edges: Vec<(usize, usize)> = self.covers.iter().map(|c| (c[0], c[1])).collect();
        let p = FinitePoset::from_covers(labels, &edges)?;
        if p.covers().len() != edges.len() {
            return Err(Error::Format(
                "covers are not a transitive reduction".into(),
            ));
        }
        Ok(p)
    }

    /// Bottom-to-top digraph; degree-2 covers get a doubled pen width.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let name = self.name.as_deref().unwrap_or("poset");
        let _ = writeln!(out, "digraph {} {{", quote(name));
        out.push_str("  rankdir=BT;\n");
        for e in &self.elements {
            let _ = writeln!(out, "  n{} [label={}];", e.id, quote(&e.label));
        }
        let doubled = |x: usize, y: usize| {
            self.covers_annotated.as_ref().is_some_and(|ann| {
                ann.iter()
                    .any(|a| a.lower == x && a.upper == y && a.degree == 2)
            })
        };
        for c in &self.covers {
            if doubled(c[0], c[1]) {
                let _ = writeln!(out, "  n{} -> n{} [penwidth=2];", c[0], c[1]);
            } else {
                let _ = writeln!(out, "  n{} -> n{};", c[0], c[1]);
            }
        }
        out.push_str("}\n");
        out
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_poset_json() {
        let p = FinitePoset::antichain(0);
        assert_eq!(p.to_json(), r#"{"elements":[],"covers":[]}"#);
    }

    #[test]
    fn two_chain_dot_has_one_edge() {
        let dot = FinitePoset::chain(2).to_dot();
        assert_eq!(dot.matches("->").count(), 1);
        assert!(dot.contains("rankdir=BT"));
    }

    #[test]
    fn json_roundtrip() {
        let b = FinitePoset::boolean_lattice(3);
        let text = b.to_json();
        let (back, doc) = FinitePoset::from_json(&text).unwrap();
        assert_eq!(back, b);
        assert_eq!(doc.to_json(), text);
        let props = doc.properties.unwrap();
        assert!(props.graded && props.lattice);
        assert_eq!(props.distributive, Some(true));
        assert_eq!(props.eulerian, Some(true));
    }

    #[test]
    fn annotated_roundtrip_and_doubled_edges() {
        let mut doc = FinitePoset::chain(2).to_document().with_name("c");
        doc.covers_annotated = Some(vec![AnnotatedCover {
            lower: 0,
            upper: 1,
            degree: 2,
            moves: vec!["L1".into(), "R1".into()],
        }]);
        let text = doc.to_json();
        assert!(text.contains(r#""covers_annotated":[[0,1,2,"L1","R1"]]"#));
        let back: PosetDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        assert!(doc.to_dot().contains("penwidth=2"));
    }

    #[test]
    fn malformed_documents() {
        assert!(FinitePoset::from_json("{").is_err());
        let bad = r#"{"elements":[{"id":1,"label":"a","rank":0}],"covers":[]}"#;
        assert!(FinitePoset::from_json(bad).is_err());
        let redundant = r#"{"elements":[{"id":0,"label":"a","rank":null},{"id":1,"label":"b","rank":null},{"id":2,"label":"c","rank":null}],"covers":[[0,1],[1,2],[0,2]]}"#;
        assert!(FinitePoset::from_json(redundant).is_err());
    }
}
