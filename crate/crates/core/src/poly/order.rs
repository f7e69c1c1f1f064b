use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{PolyError, PowerProduct};

/// Monomial orderings with `x_1 > x_2 > ... > x_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum TermOrder {
    #[default]
    DegRevLex,
    Lex,
    DegLex,
}

impl TermOrder {
    /// Compares two power products of the same arity.
    ///
    /// Panics on arity mismatch; see [`TermOrder::try_compare`].
    pub fn compare(self, a: &PowerProduct, b: &PowerProduct) -> Ordering {
        assert_eq!(a.arity(), b.arity(), "power products from different rings");
        let (ea, eb) = (a.exponents(), b.exponents());
        match self {
            TermOrder::Lex => lex(ea, eb),
            TermOrder::DegLex => a.degree().cmp(&b.degree()).then_with(|| lex(ea, eb)),
            TermOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                // the smaller exponent in the last differing variable wins
                for (x, y) in ea.iter().zip(eb).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn try_compare(self, a: &PowerProduct, b: &PowerProduct) -> Result<Ordering, PolyError> {
        if a.arity() != b.arity() {
            return Err(PolyError::ArityMismatch {
                left: a.arity(),
                right: b.arity(),
            });
        }
        Ok(self.compare(a, b))
    }

    pub fn name(self) -> &'static str {
        match self {
            TermOrder::DegRevLex => "degrevlex",
            TermOrder::Lex => "lex",
            TermOrder::DegLex => "deglex",
        }
    }
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TermOrder {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "degrevlex" | "drl" => Ok(TermOrder::DegRevLex),
            "lex" => Ok(TermOrder::Lex),
            "deglex" => Ok(TermOrder::DegLex),
            other => Err(PolyError::UnknownOrder(other.to_string())),
        }
    }
}
