use std::collections::BTreeMap;

use crate::error::{CliError, CliResult};

const SOURCE: &str = include_str!("anchors.txt");

/// Check id to anchor, loaded from the embedded registry file.
#[derive(Clone, Debug)]
pub struct Registry {
    anchors: BTreeMap<String, String>,
}

impl Registry {
    pub fn parse(source: &str) -> CliResult<Self> {
        let mut anchors = BTreeMap::new();
        for (n, line) in source.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (id, anchor) = line.split_once('=').ok_or_else(|| CliError::Registry(format!("line {}: expected 'id = anchor'", n + 1)))?;
            let (id, anchor) = (id.trim(), anchor.trim());
            if id.is_empty() || anchor.is_empty() {
                return Err(CliError::Registry(format!("line {}: empty id or anchor", n + 1)));
            }
            if anchors.insert(id.to_string(), anchor.to_string()).is_some() {
                return Err(CliError::Registry(format!("duplicate check id {id}")));
            }
        }
        Ok(Registry { anchors })
    }

    /// The embedded registry, checked against the ids the suites emit.
    pub fn load(expected: &[&str]) -> CliResult<Self> {
        let reg = Registry::parse(SOURCE)?;
        reg.validate(expected)?;
        Ok(reg)
    }

    pub fn validate(&self, expected: &[&str]) -> CliResult<()> {
        if let Some(missing) = expected.iter().find(|id| !self.anchors.contains_key(**id)) {
            return Err(CliError::Registry(format!("no anchor for check id {missing}")));
        }
        if let Some(extra) = self.anchors.keys().find(|id| !expected.contains(&id.as_str())) {
            return Err(CliError::Registry(format!("anchor for unknown check id {extra}")));
        }
        Ok(())
    }

    pub fn anchor(&self, id: &str) -> Option<&str> {
        self.anchors.get(id).map(String::as_str)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicates_and_strays_are_rejected() {
        assert!(Registry::parse("a = x\na = y").is_err());
        assert!(Registry::parse("a =").is_err());
        let reg = Registry::parse("a = x\nb = y").unwrap();
        assert!(reg.validate(&["a", "b"]).is_ok());
        assert!(reg.validate(&["a"]).is_err());
        assert!(reg.validate(&["a", "b", "c"]).is_err());
    }
}
