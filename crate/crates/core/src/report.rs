//! Check reports with a text form and a JSON form that mirror each other.

use std::fmt::{self, Display};

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub params: Vec<Entry>,
    pub values: Vec<Entry>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), ..Default::default() }
    }

    pub fn param(&mut self, name: impl Into<String>, value: impl Display) -> &mut Self {
        self.params.push(Entry { name: name.into(), value: value.to_string() });
        self
    }

    pub fn value(&mut self, name: impl Into<String>, value: impl Display) -> &mut Self {
        self.values.push(Entry { name: name.into(), value: value.to_string() });
        self
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> &mut Self {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
        self
    }

    pub fn get_value(&self, name: &str) -> Option<&str> {
        self.values.iter().find(|e| e.name == name).map(|e| e.value.as_str())
    }

    pub fn get_check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Appends the values and checks of `other`, prefixing names with its title.
    pub fn absorb(&mut self, other: Report) {
        for e in other.values {
            self.values.push(Entry { name: format!("{}: {}", other.title, e.name), value: e.value });
        }
        for c in other.checks {
            self.checks.push(Check { name: format!("{}: {}", other.title, c.name), ..c });
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

impl Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.title)?;
        for e in &self.params {
            writeln!(f, "param {}: {}", e.name, e.value)?;
        }
        for e in &self.values {
            writeln!(f, "{}: {}", e.name, e.value)?;
        }
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "[{tag}] {}", c.name)?;
            } else {
                writeln!(f, "[{tag}] {} ({})", c.name, c.detail)?;
            }
        }
        let failed = self.failures().count();
        writeln!(f, "checks: {} passed, {} failed", self.checks.len() - failed, failed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json_carry_the_same_fields() {
        let mut r = Report::new("demo");
        r.param("seed", 7).value("count", 3).check("ok", true, "").check("bad", false, "witness 1");
        let text = r.to_string();
        assert!(text.contains("param seed: 7"));
        assert!(text.contains("[FAIL] bad (witness 1)"));
        assert!(text.ends_with("checks: 1 passed, 1 failed\n"));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["values"][0]["value"], "3");
        assert_eq!(v["checks"][1]["detail"], "witness 1");
        assert!(!r.all_passed());
    }
}
