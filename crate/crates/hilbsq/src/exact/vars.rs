//! Variable registries: ordered symbol tables shared by polynomials.

use std::fmt;
use std::sync::Arc;

/// An ordered list of variable names with stable, contiguous indices.
#[derive(Debug, PartialEq, Eq)]
pub struct VarSet {
    names: Vec<String>,
}

pub type Registry = Arc<VarSet>;

impl VarSet {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Registry {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for i in 0..names.len() {
            for j in (i + 1)..names.len() {
                assert_ne!(names[i], names[j], "duplicate variable name {}", names[i]);
            }
        }
        Arc::new(VarSet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// A new registry extending this one by fresh names.
    pub fn extend<S: Into<String>>(&self, extra: Vec<S>) -> Registry {
        let mut names = self.names.clone();
        names.extend(extra.into_iter().map(Into::into));
        VarSet::new(names)
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names.join(","))
    }
}
