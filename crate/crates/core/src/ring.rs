//! Ambient polynomial ring descriptor.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::scalar::Characteristic;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("a polynomial ring needs at least one variable")]
    NoVariables,
    #[error("characteristic {0} is neither 0 nor a prime below 2^31")]
    BadCharacteristic(u32),
    #[error("expected {expected} variable names, got {got}")]
    NameCount { expected: usize, got: usize },
    #[error("invalid variable name `{0}`")]
    BadName(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateName(String),
}

/// `K[x_0, ..., x_{N-1}]` with `K = Q` or `F_p`.
///
/// Variable position fixes the term order: position 0 is the largest variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    num_vars: usize,
    characteristic: Characteristic,
    var_names: Vec<String>,
}

impl Ring {
    /// Ring with default names `x0 .. x{N-1}`.
    pub fn new(num_vars: usize, characteristic: u32) -> Result<Self, RingError> {
        let names = (0..num_vars).map(|i| format!("x{i}")).collect();
        Self::with_names(names, characteristic)
    }

    pub fn with_names(var_names: Vec<String>, characteristic: u32) -> Result<Self, RingError> {
        if var_names.is_empty() {
            return Err(RingError::NoVariables);
        }
        let ch = Characteristic::new(characteristic)
            .ok_or(RingError::BadCharacteristic(characteristic))?;
        for (i, name) in var_names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(RingError::BadName(name.clone()));
            }
            if var_names[..i].contains(name) {
                return Err(RingError::DuplicateName(name.clone()));
            }
        }
        Ok(Ring {
            num_vars: var_names.len(),
            characteristic: ch,
            var_names,
        })
    }

    /// Convenience constructor from string slices.
    pub fn with_var_names(names: &[&str], characteristic: u32) -> Result<Self, RingError> {
        Self::with_names(names.iter().map(|s| String::from(*s)).collect(), characteristic)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn characteristic(&self) -> Characteristic {
        self.characteristic
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.var_names[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.var_names.iter().position(|n| n == name)
    }

    /// The same ring with variable `index` removed.
    pub fn drop_var(&self, index: usize) -> Result<Ring, RingError> {
        let names: Vec<String> = self
            .var_names
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != index)
            .map(|(_, n)| n.clone())
            .collect();
        Ring::with_names(names, self.characteristic.value())
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_names() {
        let r = Ring::new(3, 0).unwrap();
        assert_eq!(r.var_names(), &["x0", "x1", "x2"]);
        assert_eq!(r.var_index("x2"), Some(2));
    }

    #[test]
    fn invariants_enforced() {
        assert_eq!(Ring::new(0, 0), Err(RingError::NoVariables));
        assert_eq!(Ring::new(2, 4), Err(RingError::BadCharacteristic(4)));
        assert!(matches!(
            Ring::with_var_names(&["x", "x"], 0),
            Err(RingError::DuplicateName(_))
        ));
        assert!(matches!(
            Ring::with_var_names(&["1x"], 0),
            Err(RingError::BadName(_))
        ));
    }
}
