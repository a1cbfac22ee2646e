use std::fmt;
use std::sync::Arc;

/// An ordered list of variable names shared by every polynomial built on it.
///
/// Two universes are compatible when their name lists are identical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Universe {
    vars: Vec<String>,
}

impl Universe {
    pub fn new<I, S>(names: I) -> Arc<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Arc::new(Universe {
            vars: names.into_iter().map(Into::into).collect(),
        })
    }

    /// Variables `prefix{lo}`, ..., `prefix{hi-1}`.
    pub fn indexed(prefix: &str, range: std::ops::Range<usize>) -> Arc<Self> {
        Self::new(range.map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.vars[index]
    }

    pub fn names(&self) -> &[String] {
        &self.vars
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub(crate) fn same(a: &Arc<Self>, b: &Arc<Self>) -> bool {
        Arc::ptr_eq(a, b) || a.vars == b.vars
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.vars.join(", "))
    }
}
