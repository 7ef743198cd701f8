use serde::Deserialize;

use crate::error::{Error, Result};

const BUILTIN: &str = include_str!("../../data/known_discrepancies.toml");

/// One documented formula/oracle disagreement and the parameters it covers.
#[derive(Debug, Clone, Deserialize, PartialEq, Eq)]
pub struct KnownDiscrepancy {
    pub check: String,
    #[serde(default)]
    pub cyclic: Option<bool>,
    #[serde(default)]
    pub n_min: Option<usize>,
    #[serde(default)]
    pub n_max: Option<usize>,
    #[serde(default)]
    pub n: Option<Vec<usize>>,
    pub explanation: String,
}

impl KnownDiscrepancy {
    pub fn matches(&self, check: &str, n: usize, cyclic: bool) -> bool {
        self.check == check
            && self.cyclic.is_none_or(|c| c == cyclic)
            && self.n_min.is_none_or(|lo| n >= lo)
            && self.n_max.is_none_or(|hi| n <= hi)
            && self.n.as_ref().is_none_or(|list| list.contains(&n))
    }
}

#[derive(Debug, Clone, Default, Deserialize, PartialEq, Eq)]
pub struct KnownDiscrepancies {
    #[serde(default)]
    discrepancy: Vec<KnownDiscrepancy>,
}

impl KnownDiscrepancies {
    /// The list shipped with the crate.
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("bundled discrepancy list parses")
    }

    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::io("parsing discrepancy list", e))
    }

    pub fn entries(&self) -> &[KnownDiscrepancy] {
        &self.discrepancy
    }

    pub fn lookup(&self, check: &str, n: usize, cyclic: bool) -> Option<&KnownDiscrepancy> {
        self.discrepancy
            .iter()
            .find(|d| d.matches(check, n, cyclic))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_list() {
        let known = KnownDiscrepancies::builtin();
        assert!(!known.entries().is_empty());
        assert!(known.lookup("le", 4, true).is_some());
        assert!(known.lookup("le", 2, true).is_none());
        assert!(known.lookup("le", 4, false).is_none());
        assert!(known.lookup("tau", 4, true).is_none());
    }

    #[test]
    fn predicates() {
        let known = KnownDiscrepancies::parse(
            r#"
            [[discrepancy]]
            check = "x"
            n = [3, 5]
            explanation = "listed"
            [[discrepancy]]
            check = "y"
            n_max = 10
            cyclic = false
            explanation = "bounded"
            "#,
        )
        .unwrap();
        assert!(known.lookup("x", 5, true).is_some());
        assert!(known.lookup("x", 4, true).is_none());
        assert!(known.lookup("y", 10, false).is_some());
        assert!(known.lookup("y", 11, false).is_none());
        assert!(known.lookup("y", 3, true).is_none());
        assert!(KnownDiscrepancies::parse("discrepancy = 3").is_err());
    }
}
