//! Semigroup, groupoid and map files.
//!
//! All three are JSON. Output is formatted by hand so that files are
//! byte-stable: two-space indent, one table row per line, keys in a fixed
//! order, trailing newline.

use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::groupoid::{ArrowSpec, RawGroupoid};
use crate::morphisms::ElementMap;
use crate::semigroup::InverseSemigroup;

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupFile {
    pub names: Vec<String>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default)]
    pub identity: Option<usize>,
    #[serde(default)]
    pub zero: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupoidFile {
    #[serde(default)]
    names: Option<Vec<String>>,
    arrows: Vec<ArrowSpec>,
    #[serde(default)]
    compose: Vec<(usize, usize, usize)>,
    #[serde(default)]
    leq: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapsFile {
    maps: Vec<MapEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapEntry {
    theta: Vec<usize>,
}

/// Contents of an input file, before validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputFile {
    Semigroup(SemigroupFile),
    Groupoid(RawGroupoid),
}

fn parse_error(e: serde_json::Error) -> Error {
    let message = e.to_string();
    let message = match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message,
    };
    Error::Parse { line: e.line(), column: e.column(), message }
}

fn typed<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(parse_error)
}

/// Reads either file kind, deciding by the presence of `mul` or `arrows`.
pub fn parse_input(text: &str) -> Result<InputFile> {
    let value: Value = serde_json::from_str(text).map_err(parse_error)?;
    let Value::Object(obj) = &value else {
        return Err(Error::Parse { line: 1, column: 1, message: "expected a JSON object".into() });
    };
    if obj.contains_key("mul") {
        return Ok(InputFile::Semigroup(typed(text)?));
    }
    if obj.contains_key("arrows") {
        let g: GroupoidFile = typed(text)?;
        return Ok(InputFile::Groupoid(RawGroupoid { names: g.names, arrows: g.arrows, compose: g.compose, leq: g.leq }));
    }
    Err(Error::Parse {
        line: 1,
        column: 1,
        message: "expected a semigroup file (with \"mul\") or a groupoid file (with \"arrows\")".into(),
    })
}

pub fn parse_semigroup_file(text: &str) -> Result<SemigroupFile> {
    match parse_input(text)? {
        InputFile::Semigroup(s) => Ok(s),
        InputFile::Groupoid(_) => Err(Error::Parse { line: 1, column: 1, message: "expected a semigroup file".into() }),
    }
}

impl SemigroupFile {
    /// Validates the table, and the declared identity and zero if present.
    pub fn build(&self, cap: usize) -> Result<InverseSemigroup> {
        let s = InverseSemigroup::from_table_capped(self.names.clone(), self.mul.clone(), cap)?;
        if self.identity.is_some() && self.identity != s.identity() {
            return Err(Error::InvalidSpec(format!(
                "declared identity {:?} but the table's identity is {:?}",
                self.identity,
                s.identity()
            )));
        }
        if self.zero.is_some() && self.zero != s.zero() {
            return Err(Error::InvalidSpec(format!("declared zero {:?} but the table's zero is {:?}", self.zero, s.zero())));
        }
        Ok(s)
    }
}

pub fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn quoted(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn list<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn rows_block(out: &mut String, key: &str, rows: &[String], last: bool) {
    if rows.is_empty() {
        let _ = write!(out, "  \"{key}\": []");
    } else {
        let _ = writeln!(out, "  \"{key}\": [");
        for (i, row) in rows.iter().enumerate() {
            let comma = if i + 1 < rows.len() { "," } else { "" };
            let _ = writeln!(out, "    {row}{comma}");
        }
        out.push_str("  ]");
    }
    out.push_str(if last { "\n" } else { ",\n" });
}

pub fn write_semigroup(s: &InverseSemigroup) -> String {
    let mut out = String::from("{\n");
    let names = list(s.names().iter().map(|n| quoted(n)));
    let _ = writeln!(out, "  \"names\": {names},");
    let rows: Vec<String> = s.rows().iter().map(list).collect();
    let tail: Vec<(&str, usize)> =
        [("identity", s.identity()), ("zero", s.zero())].into_iter().filter_map(|(k, v)| v.map(|v| (k, v))).collect();
    rows_block(&mut out, "mul", &rows, tail.is_empty());
    for (i, (k, v)) in tail.iter().enumerate() {
        let comma = if i + 1 < tail.len() { "," } else { "" };
        let _ = writeln!(out, "  \"{k}\": {v}{comma}");
    }
    out.push_str("}\n");
    out
}

pub fn write_groupoid(g: &RawGroupoid) -> String {
    let mut out = String::from("{\n");
    if let Some(names) = &g.names {
        let _ = writeln!(out, "  \"names\": {},", list(names.iter().map(|n| quoted(n))));
    }
    let arrows: Vec<String> =
        g.arrows.iter().map(|a| format!("{{\"dom\": {}, \"ran\": {}, \"inv\": {}}}", a.dom, a.ran, a.inv)).collect();
    rows_block(&mut out, "arrows", &arrows, false);
    let compose: Vec<String> = g.compose.iter().map(|&(a, b, c)| list([a, b, c])).collect();
    rows_block(&mut out, "compose", &compose, false);
    let leq: Vec<String> = g.leq.iter().map(|&(a, b)| list([a, b])).collect();
    rows_block(&mut out, "leq", &leq, true);
    out.push_str("}\n");
    out
}

pub fn write_maps(maps: &[ElementMap]) -> String {
    let mut out = String::from("{\n");
    let rows: Vec<String> = maps.iter().map(|m| format!("{{\"theta\": {}}}", list(m.theta()))).collect();
    rows_block(&mut out, "maps", &rows, true);
    out.push_str("}\n");
    out
}

pub fn parse_maps(text: &str, len: usize) -> Result<Vec<ElementMap>> {
    let file: MapsFile = typed(text)?;
    file.maps
        .into_iter()
        .enumerate()
        .map(|(i, m)| {
            if m.theta.len() != len {
                return Err(Error::InvalidSpec(format!("map {i} has {} values, expected {len}", m.theta.len())));
            }
            if let Some(&bad) = m.theta.iter().find(|&&v| v >= len) {
                return Err(Error::IndexOutOfRange { context: format!("maps[{i}]"), value: bad, size: len });
            }
            Ok(ElementMap::new(m.theta))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::esn::esn_forward_raw;
    use crate::semigroup::build_symmetric_inverse_monoid;

    #[test]
    fn semigroup_round_trip_is_byte_exact() {
        for name in ["z3", "two-chain", "i2", "clifford4"] {
            let s = catalog::build(name, 100).unwrap();
            let text = write_semigroup(&s);
            let back = parse_semigroup_file(&text).unwrap().build(100).unwrap();
            assert_eq!(back, s);
            assert_eq!(write_semigroup(&back), text);
            assert!(text.lines().all(|l| !l.ends_with(' ')));
        }
    }

    #[test]
    fn semigroup_layout() {
        let s = catalog::two_chain();
        assert_eq!(
            write_semigroup(&s),
            "{\n  \"names\": [\"1\", \"e\"],\n  \"mul\": [\n    [0, 1],\n    [1, 1]\n  ],\n  \"identity\": 0,\n  \"zero\": 1\n}\n"
        );
    }

    #[test]
    fn groupoid_round_trip() {
        let raw = esn_forward_raw(&build_symmetric_inverse_monoid(2, 100).unwrap());
        let text = write_groupoid(&raw);
        match parse_input(&text).unwrap() {
            InputFile::Groupoid(g) => assert_eq!(g, raw),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn maps_round_trip() {
        let maps = vec![ElementMap::new(vec![0, 1, 2]), ElementMap::new(vec![0, 0, 0])];
        assert_eq!(parse_maps(&write_maps(&maps), 3).unwrap(), maps);
        assert!(parse_maps(&write_maps(&maps), 4).is_err());
    }

    #[test]
    fn parse_errors_have_positions() {
        assert!(matches!(parse_input(""), Err(Error::Parse { line: 1, .. })));
        match parse_input("{\n  \"names\": [\"a\"],\n  \"mul\": [[0,]]\n}") {
            Err(Error::Parse { line: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_input("{\"foo\": 1}"), Err(Error::Parse { .. })));
        assert!(matches!(parse_input("{\"names\": [], \"mul\": [], \"extra\": 1}"), Err(Error::Parse { .. })));
    }

    #[test]
    fn declared_identity_is_checked() {
        let f = SemigroupFile { names: vec!["1".into(), "e".into()], mul: vec![vec![0, 1], vec![1, 1]], identity: Some(1), zero: None };
        assert!(matches!(f.build(10), Err(Error::InvalidSpec(_))));
    }
}
