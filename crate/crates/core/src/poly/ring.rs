use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::PolyError;

/// The polynomial ring `Q[x_1, ..., x_n]`, identified by its ordered variable
/// names. The listing order fixes `x_1 > x_2 > ... > x_n` for every term order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Ring>, PolyError> {
        if names.is_empty() {
            return Err(PolyError::EmptyRing);
        }
        let mut owned: Vec<String> = Vec::with_capacity(names.len());
        for name in names {
            let name = name.as_ref();
            if !is_identifier(name) {
                return Err(PolyError::BadVariableName(name.to_string()));
            }
            if owned.iter().any(|n| n == name) {
                return Err(PolyError::DuplicateVariable(name.to_string()));
            }
            owned.push(name.to_string());
        }
        Ok(Arc::new(Ring { names: owned }))
    }

    /// Ring with variables `x1, ..., xn`.
    pub fn with_arity(n: usize) -> Arc<Ring> {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        Ring::new(&names).expect("generated names are valid")
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The subring on the first `i` variables.
    pub fn prefix(&self, i: usize) -> Arc<Ring> {
        assert!(i >= 1 && i <= self.arity(), "prefix length out of range");
        Arc::new(Ring {
            names: self.names[..i].to_vec(),
        })
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.names.join(","))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
