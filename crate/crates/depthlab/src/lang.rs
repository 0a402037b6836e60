//! Language deciders and characteristic-sequence prefixes.

use crate::bits::{string_index, BitString, SeqPrefix};
use crate::{Error, Result};

/// A total decision procedure for a language, with a declared per-call
/// step budget. The procedure reports its own abstract step count; the
/// shipped deciders use one step per examined input bit plus one.
pub struct LanguageDecider {
    pub name: String,
    pub step_budget: u64,
    decide: Box<dyn Fn(&BitString) -> (bool, u64) + Send + Sync>,
}

impl LanguageDecider {
    pub fn new(
        name: impl Into<String>,
        step_budget: u64,
        decide: impl Fn(&BitString) -> (bool, u64) + Send + Sync + 'static,
    ) -> Self {
        LanguageDecider { name: name.into(), step_budget, decide: Box::new(decide) }
    }

    /// Decide membership of `x`, enforcing the declared budget.
    pub fn decide(&self, x: &BitString) -> Result<bool> {
        let (ans, used) = (self.decide)(x);
        if used > self.step_budget {
            return Err(Error::DeciderBudget { used, budget: self.step_budget });
        }
        Ok(ans)
    }

    /// The language of all strings.
    pub fn all() -> Self {
        Self::new("all", 1 << 20, |x| (true, x.len() as u64 + 1))
    }

    /// The empty language.
    pub fn empty() -> Self {
        Self::new("empty", 1 << 20, |x| (false, x.len() as u64 + 1))
    }

    /// Strings of even length (λ included).
    pub fn even_length() -> Self {
        Self::new("even-length", 1 << 20, |x| (x.len() % 2 == 0, x.len() as u64 + 1))
    }

    /// Strings with an odd number of ones.
    pub fn odd_parity() -> Self {
        Self::new("odd-parity", 1 << 20, |x| {
            (x.iter().filter(|&b| b).count() % 2 == 1, x.len() as u64 + 1)
        })
    }
}

impl std::fmt::Debug for LanguageDecider {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LanguageDecider({})", self.name)
    }
}

/// First `n` bits of the characteristic sequence of `L`: bit at 1-based
/// position m is `L(s_{m-1})`, so the λ bit sits at position 1.
pub fn char_prefix(lang: &LanguageDecider, n: usize) -> Result<SeqPrefix> {
    let mut bits = BitString::with_capacity(n);
    for m in 0..n as u64 {
        bits.push(lang.decide(&string_index(m))?);
    }
    Ok(SeqPrefix::new(bits, format!("chi[{}]", lang.name)))
}
