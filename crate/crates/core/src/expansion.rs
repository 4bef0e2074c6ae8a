//! Finite integer combinations `Σ c_w S_w` of Schubert classes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// Coefficients of an element of `H*(G/B)` in the Schubert basis.
///
/// Zero coefficients are never stored. Keys are ordered by one-line
/// notation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SchubertExpansion {
    terms: BTreeMap<Permutation, BigInt>,
}

impl SchubertExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `coeff · S_w`, dropping the term if it cancels.
    pub fn add(&mut self, w: Permutation, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn coefficient(&self, w: &Permutation) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &BigInt)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &Permutation> {
        self.terms.keys()
    }

    /// The common length of all keys, if they share one.
    pub fn degree(&self) -> Option<usize> {
        let mut lengths = self.terms.keys().map(Permutation::length);
        let first = lengths.next()?;
        lengths.all(|l| l == first).then_some(first)
    }

    /// Terms whose permutation lies in `S_n`, re-embedded with degree `n`.
    pub fn restricted_to(&self, n: usize) -> SchubertExpansion {
        let terms = self
            .terms
            .iter()
            .filter_map(|(w, c)| w.with_degree(n).ok().map(|w| (w, c.clone())))
            .collect();
        SchubertExpansion { terms }
    }

    pub fn to_terms(&self) -> Result<Vec<Term>> {
        self.terms
            .iter()
            .map(|(w, c)| {
                let coeff = c
                    .to_i64()
                    .ok_or_else(|| Error::CoefficientOverflow(c.to_string()))?;
                Ok(Term {
                    w: w.to_string(),
                    coeff,
                })
            })
            .collect()
    }
}

impl FromIterator<(Permutation, BigInt)> for SchubertExpansion {
    fn from_iter<I: IntoIterator<Item = (Permutation, BigInt)>>(iter: I) -> Self {
        let mut out = SchubertExpansion::new();
        for (w, c) in iter {
            out.add(w, c);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub w: String,
    pub coeff: i64,
}

/// Wire form of a product expansion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionRecord {
    pub x: String,
    pub y: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<usize>,
    pub terms: Vec<Term>,
}

impl ExpansionRecord {
    pub fn new(
        x: &Permutation,
        y: &Permutation,
        p: Option<usize>,
        expansion: &SchubertExpansion,
    ) -> Result<Self> {
        Ok(ExpansionRecord {
            x: x.to_string(),
            y: y.to_string(),
            p,
            terms: expansion.to_terms()?,
        })
    }
}
