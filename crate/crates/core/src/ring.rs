use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered, duplicate-free list of variable names. A variable's rank is its
/// position in the list; monomials store ranks, never names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableTable {
    names: Vec<String>,
    rank: HashMap<String, usize>,
}

pub type Ring = Arc<VariableTable>;

impl VariableTable {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut rank = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::Invalid(format!("bad variable name '{n}'")));
            }
            if !n.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(Error::Invalid(format!("variable '{n}' must start with a letter")));
            }
            if rank.insert(n.clone(), i).is_some() {
                return Err(Error::Invalid(format!("duplicate variable '{n}'")));
            }
        }
        Ok(VariableTable { names, rank })
    }

    pub fn shared<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Ring> {
        Self::new(names).map(Arc::new)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, rank: usize) -> &str {
        &self.names[rank]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rank(&self, name: &str) -> Option<usize> {
        self.rank.get(name).copied()
    }

    pub fn rank_of(&self, name: &str) -> Result<usize> {
        self.rank(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// New table with `other`'s names appended (must be disjoint).
    pub fn extended<S: Into<String>>(&self, other: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::new(
            self.names
                .iter()
                .cloned()
                .chain(other.into_iter().map(Into::into)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_are_positions() {
        let t = VariableTable::new(["t", "s", "x14"]).unwrap();
        assert_eq!(t.rank("x14"), Some(2));
        assert_eq!(t.name(1), "s");
        assert!(t.rank("q").is_none());
    }

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert!(VariableTable::new(["a", "a"]).is_err());
        assert!(VariableTable::new(["1a"]).is_err());
        assert!(VariableTable::new(["a*b"]).is_err());
    }
}
