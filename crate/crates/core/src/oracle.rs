//! Brute-force Schubert calculus through polynomials.
//!
//! This module knows nothing about clans. It builds Schubert polynomials
//! with divided differences, multiplies them exactly, and reads products
//! back in the Schubert basis by repeatedly subtracting the Schubert
//! polynomial of the leading monomial's code. It is slow on purpose and
//! serves as the reference that the clan rule is checked against.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::expansion::SchubertExpansion;
use crate::permutation::Permutation;

/// Exponent vector, ordered by comparing coordinates from the last one
/// backwards. Under this order the leading monomial of `S_w` is
/// `x^{code(w)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .iter()
            .rev()
            .cmp(other.0.iter().rev())
            .then_with(|| self.0.len().cmp(&other.0.len()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `x_1, ..., x_m` with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        MultiPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        MultiPoly::monomial(vec![0; arity], BigInt::one())
    }

    /// `coeff · x^exponents`; the arity is `exponents.len()`.
    pub fn monomial(exponents: Vec<u32>, coeff: BigInt) -> Self {
        let mut p = MultiPoly::zero(exponents.len());
        p.add_term(Monomial(exponents), coeff);
        p
    }

    /// The variable `x_i` (1-indexed).
    pub fn variable(arity: usize, i: usize) -> Result<Self> {
        if i == 0 || i > arity {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: arity,
            });
        }
        let mut exps = vec![0; arity];
        exps[i - 1] = 1;
        Ok(MultiPoly::monomial(exps, BigInt::one()))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    /// Largest monomial in the last-coordinate-first order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &MultiPoly) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> MultiPoly {
        let mut out = MultiPoly::zero(self.arity);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn multiply(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_arity(other)?;
        let mut out = MultiPoly::zero(self.arity);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let exps = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(exps), ca * cb);
            }
        }
        Ok(out)
    }

    /// Same polynomial viewed in more variables.
    pub fn with_arity(&self, arity: usize) -> Result<MultiPoly> {
        if arity < self.arity {
            let fits = self
                .terms
                .keys()
                .all(|m| m.0[arity..].iter().all(|&e| e == 0));
            if !fits {
                return Err(Error::ArityMismatch {
                    left: self.arity,
                    right: arity,
                });
            }
        }
        let mut out = MultiPoly::zero(arity);
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            exps.resize(arity, 0);
            out.add_term(Monomial(exps), c.clone());
        }
        Ok(out)
    }

    /// `s_i P`: exchange `x_i` and `x_{i+1}`.
    pub fn swap_variables(&self, i: usize) -> Result<MultiPoly> {
        self.check_variable_pair(i)?;
        let mut out = MultiPoly::zero(self.arity);
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            exps.swap(i - 1, i);
            out.add_term(Monomial(exps), c.clone());
        }
        Ok(out)
    }

    /// `∂_i P = (P - s_i P) / (x_i - x_{i+1})`, computed monomial by monomial:
    /// `∂_i(x_i^a x_{i+1}^b) = Σ_{k=0}^{a-b-1} x_i^{a-1-k} x_{i+1}^{b+k}` for
    /// `a > b`, zero for `a = b`, and the negated mirror sum for `a < b`.
    pub fn divided_difference(&self, i: usize) -> Result<MultiPoly> {
        self.check_variable_pair(i)?;
        let (xi, xj) = (i - 1, i);
        let mut out = MultiPoly::zero(self.arity);
        for (m, c) in &self.terms {
            let (a, b) = (m.0[xi], m.0[xj]);
            let (hi, lo, coeff) = match a.cmp(&b) {
                Ordering::Equal => continue,
                Ordering::Greater => (a, b, c.clone()),
                Ordering::Less => (b, a, -c),
            };
            for k in 0..hi - lo {
                let mut exps = m.0.clone();
                exps[xi] = hi - 1 - k;
                exps[xj] = lo + k;
                out.add_term(Monomial(exps), coeff.clone());
            }
        }
        Ok(out)
    }

    fn check_variable_pair(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.arity {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.arity.saturating_sub(1),
            });
        }
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if idx > 0 {
                f.write_str(if negative { " - " } else { " + " })?;
            } else if negative {
                f.write_str("-")?;
            }
            let abs = c.abs();
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(k, &e)| {
                    if e == 1 {
                        format!("x{}", k + 1)
                    } else {
                        format!("x{}^{e}", k + 1)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Schubert polynomial machinery with a cache of computed polynomials.
#[derive(Debug, Default)]
pub struct SchubertOracle {
    cache: HashMap<(Permutation, usize), MultiPoly>,
}

impl SchubertOracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// `S_w` in `arity` variables. `S_w` only involves
    /// `x_1, ..., x_d` where `d` is the last descent of `w`, so any
    /// `arity >= d` works and gives the same polynomial.
    ///
    /// Built from a dominant permutation `v ≥ w` (code weakly decreasing),
    /// whose Schubert polynomial is the monomial `x^{code(v)}`, via
    /// `∂_i S_u = S_{u s_i}` whenever `u(i) > u(i+1)`.
    pub fn schubert_poly(&mut self, w: &Permutation, arity: usize) -> Result<MultiPoly> {
        if arity < w.last_descent() {
            return Err(Error::TooFewVariables(arity, w.to_string()));
        }
        let key = (w.with_degree(w.minimal_degree())?, arity);
        if let Some(p) = self.cache.get(&key) {
            return Ok(p.clone());
        }
        let (dominant, word) = climb_to_dominant(w);
        let mut exps: Vec<u32> = dominant.code().iter().map(|&c| c as u32).collect();
        exps.resize(arity.max(exps.len()), 0);
        let mut poly = MultiPoly::monomial(exps, BigInt::one()).with_arity(arity.max(1))?;
        for &i in word.iter().rev() {
            poly = poly.divided_difference(i)?;
        }
        self.cache.insert(key, poly.clone());
        Ok(poly)
    }

    /// Greedy expansion of `P` in the Schubert basis: take the leading
    /// monomial `x^c`, subtract `coeff · S_w` with `code(w) = c`, repeat.
    pub fn expand_schubert(&mut self, poly: &MultiPoly) -> Result<SchubertExpansion> {
        let mut rest = poly.clone();
        let mut out = SchubertExpansion::new();
        while let Some((lead, coeff)) = rest.leading_term() {
            let (lead, coeff) = (lead.clone(), coeff.clone());
            let code: Vec<usize> = lead.0.iter().map(|&e| e as usize).collect();
            let w = Permutation::from_code(&code);
            let schubert = self.schubert_poly(&w, rest.arity())?;
            rest = rest.sub(&schubert.scale(&coeff))?;
            assert!(
                !rest.terms.contains_key(&lead),
                "leading monomial x^{:?} of S_{w} was not cancelled",
                lead.0
            );
            out.add(w, coeff);
        }
        Ok(out)
    }

    /// `S_x · S_y` in the Schubert basis, computed in `2n - 1` variables.
    /// Keys are embedded in `S_n` or the smallest larger symmetric group
    /// that contains them.
    pub fn product(&mut self, x: &Permutation, y: &Permutation) -> Result<SchubertExpansion> {
        let n = x.degree();
        if y.degree() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: y.degree(),
            });
        }
        let arity = (2 * n).saturating_sub(1).max(1);
        let px = self.schubert_poly(x, arity)?;
        let py = self.schubert_poly(y, arity)?;
        let expansion = self.expand_schubert(&px.multiply(&py)?)?;
        Ok(expansion
            .iter()
            .map(|(w, c)| {
                let degree = n.max(w.minimal_degree());
                (w.with_degree(degree).expect("degree covers w"), c.clone())
            })
            .collect())
    }

    /// `S_x · S_y` keeping only the terms indexed by `S_n`.
    pub fn product_in_sn(&mut self, x: &Permutation, y: &Permutation) -> Result<SchubertExpansion> {
        Ok(self.product(x, y)?.restricted_to(x.degree()))
    }

    /// `S_x · S_{s_k}`, whose terms Monk's rule predicts.
    pub fn monk_product(&mut self, x: &Permutation, k: usize) -> Result<SchubertExpansion> {
        let s = Permutation::simple_reflection(x.degree(), k)?;
        self.product(x, &s)
    }

    /// `Σ c_w S_w` as a polynomial in `arity` variables.
    pub fn reconstruct(&mut self, expansion: &SchubertExpansion, arity: usize) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(arity);
        for (w, c) in expansion.iter() {
            out = out.add(&self.schubert_poly(w, arity)?.scale(c))?;
        }
        Ok(out)
    }
}

/// Climbs from `w` through ascents `u → u s_i` until the code is weakly
/// decreasing. Returns the dominant permutation and the word `(i_1, ...)`
/// with `dominant = w s_{i_1} s_{i_2} ⋯`, lengths adding.
fn climb_to_dominant(w: &Permutation) -> (Permutation, Vec<usize>) {
    let mut code = w.code();
    let mut word = Vec::new();
    // Swapping c_i < c_{i+1} into (c_{i+1} + 1, c_i) is the code of u s_i.
    while let Some(k) = code.windows(2).position(|pair| pair[0] < pair[1]) {
        let (a, b) = (code[k], code[k + 1]);
        code[k] = b + 1;
        code[k + 1] = a;
        word.push(k + 1);
    }
    let dominant = Permutation::from_code(&code)
        .with_degree(w.degree())
        .expect("climbing stays inside S_n");
    (dominant, word)
}

/// `S_w` via a fresh oracle.
pub fn schubert_poly(w: &Permutation, arity: usize) -> Result<MultiPoly> {
    SchubertOracle::new().schubert_poly(w, arity)
}

pub fn expand_schubert(poly: &MultiPoly) -> Result<SchubertExpansion> {
    SchubertOracle::new().expand_schubert(poly)
}

pub fn oracle_product(x: &Permutation, y: &Permutation) -> Result<SchubertExpansion> {
    SchubertOracle::new().product(x, y)
}

pub fn monk_product(x: &Permutation, k: usize) -> Result<SchubertExpansion> {
    SchubertOracle::new().monk_product(x, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::guards::Guards;
    use crate::permutation::enumerate_all;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn mono(exps: &[u32]) -> MultiPoly {
        MultiPoly::monomial(exps.to_vec(), BigInt::one())
    }

    fn int(k: i64) -> BigInt {
        BigInt::from(k)
    }

    /// Staircase route: `S_w = ∂_{i_1} ⋯ ∂_{i_k} x^δ` where
    /// `w_0 = w s_{i_1} ⋯ s_{i_k}` in `S_n`.
    fn staircase_schubert(w: &Permutation) -> MultiPoly {
        let n = w.degree();
        let exps: Vec<u32> = (0..n).map(|k| (n - 1 - k) as u32).collect();
        let mut poly = MultiPoly::monomial(exps, BigInt::one());
        let w0 = Permutation::longest(n).unwrap();
        let word = w.inverse().compose(&w0).unwrap().reduced_word();
        for &i in word.iter().rev() {
            poly = poly.divided_difference(i).unwrap();
        }
        poly
    }

    #[test]
    fn divided_difference_examples() {
        let x1 = MultiPoly::variable(2, 1).unwrap();
        assert_eq!(x1.divided_difference(1).unwrap(), MultiPoly::one(2));
        let sym = mono(&[1, 1, 0]).add(&mono(&[2, 0, 3])).unwrap();
        let sym = sym.add(&mono(&[0, 2, 3])).unwrap();
        assert!(sym.divided_difference(1).unwrap().is_zero());
        assert!(x1.divided_difference(2).is_err());
        assert!(x1.divided_difference(0).is_err());
        // ∂_1(x_1^3 x_2^2 x_3) = x_1^2 x_2^2 x_3.
        assert_eq!(
            mono(&[3, 2, 1]).divided_difference(1).unwrap(),
            mono(&[2, 2, 1])
        );
        // ∂_2(x_2^0 x_3^2) = -(x_2 + x_3).
        let expected = mono(&[0, 1, 0]).add(&mono(&[0, 0, 1])).unwrap().scale(&int(-1));
        assert_eq!(mono(&[0, 0, 2]).divided_difference(2).unwrap(), expected);
    }

    #[test]
    fn divided_difference_is_exact_quotient() {
        // (x_i - x_{i+1}) ∂_i P = P - s_i P on a handful of polynomials.
        let polys = [
            mono(&[3, 0, 2, 1]),
            mono(&[1, 4, 0, 2]).add(&mono(&[2, 2, 2, 0]).scale(&int(-3))).unwrap(),
            mono(&[0, 1, 5, 1]).add(&mono(&[5, 0, 0, 0])).unwrap(),
        ];
        for p in &polys {
            for i in 1..4 {
                let mut diff = MultiPoly::variable(4, i).unwrap();
                diff = diff
                    .sub(&MultiPoly::variable(4, i + 1).unwrap())
                    .unwrap();
                let lhs = diff.multiply(&p.divided_difference(i).unwrap()).unwrap();
                let rhs = p.sub(&p.swap_variables(i).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "∂_{i} of {p}");
            }
        }
    }

    #[test]
    fn schubert_poly_examples() {
        assert_eq!(schubert_poly(&perm("123"), 3).unwrap(), MultiPoly::one(3));
        assert_eq!(schubert_poly(&perm("321"), 3).unwrap(), mono(&[2, 1, 0]));
        let expected = mono(&[1, 0, 0]).add(&mono(&[0, 1, 0])).unwrap();
        assert_eq!(schubert_poly(&perm("132"), 3).unwrap(), expected);
        // ∂_2 x_1^2 x_2 = x_1^2 is S_312; ∂_1 of that is S_132.
        assert_eq!(
            mono(&[2, 1, 0]).divided_difference(2).unwrap(),
            schubert_poly(&perm("312"), 3).unwrap()
        );
        assert!(matches!(
            schubert_poly(&perm("1243"), 2),
            Err(Error::TooFewVariables(2, _))
        ));
        // Stability: more variables give the same polynomial.
        let small = schubert_poly(&perm("1342"), 3).unwrap();
        assert_eq!(small.with_arity(7).unwrap(), schubert_poly(&perm("134256"), 7).unwrap());
    }

    #[test]
    fn dominant_route_matches_staircase_route() {
        let guards = Guards::default();
        for n in 1..=5 {
            for w in enumerate_all(n, &guards).unwrap() {
                assert_eq!(
                    schubert_poly(&w, n).unwrap(),
                    staircase_schubert(&w),
                    "S_{w}"
                );
            }
        }
    }

    #[test]
    fn multiply_examples() {
        let p = mono(&[1, 0]).add(&mono(&[0, 1])).unwrap();
        assert_eq!(p.multiply(&MultiPoly::one(2)).unwrap(), p);
        let x1 = MultiPoly::variable(2, 1).unwrap();
        assert_eq!(x1.multiply(&x1).unwrap(), mono(&[2, 0]));
        let expected = mono(&[2, 0]).add(&mono(&[1, 1])).unwrap();
        assert_eq!(p.multiply(&x1).unwrap(), expected);
        assert!(x1.multiply(&MultiPoly::one(3)).is_err());
    }

    #[test]
    fn expand_examples() {
        let e = expand_schubert(&mono(&[1, 0, 0]).add(&mono(&[0, 1, 0])).unwrap()).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.coefficient(&perm("132")), int(1));
        assert!(expand_schubert(&MultiPoly::zero(3)).unwrap().is_empty());
        let e = expand_schubert(&mono(&[2, 1, 0])).unwrap();
        assert_eq!(e.coefficient(&perm("321")), int(1));
        assert_eq!(e.len(), 1);
        // Signed input is allowed: x_2 = S_132 - S_213.
        let e = expand_schubert(&mono(&[0, 1, 0])).unwrap();
        assert_eq!(e.coefficient(&perm("132")), int(1));
        assert_eq!(e.coefficient(&perm("213")), int(-1));
    }

    #[test]
    fn product_examples() {
        let e = oracle_product(&perm("12345"), &perm("14253")).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.coefficient(&perm("14253")), int(1));
        let e = oracle_product(&perm("213"), &perm("213")).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.coefficient(&perm("312")), int(1));
        assert!(oracle_product(&perm("21"), &perm("213")).is_err());
    }

    #[test]
    fn monk_examples() {
        let e = monk_product(&perm("123"), 1).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.coefficient(&perm("213")), int(1));
        let e = monk_product(&perm("213"), 1).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.coefficient(&perm("312")), int(1));
    }

    #[test]
    fn leading_monomial_is_the_code() {
        let guards = Guards::default();
        for n in 4..=5 {
            for w in enumerate_all(n, &guards).unwrap() {
                let poly = schubert_poly(&w, n).unwrap();
                let code: Vec<u32> = w.code().iter().map(|&c| c as u32).collect();
                assert_eq!(poly.coefficient(&code), int(1), "{w}");
                let (lead, _) = poly.leading_term().unwrap();
                assert_eq!(lead.0, code, "{w}");
            }
        }
    }

    #[test]
    fn polynomial_display() {
        let p = mono(&[2, 0]).add(&mono(&[0, 1]).scale(&int(-3))).unwrap();
        assert_eq!(p.to_string(), "-3*x2 + x1^2");
        assert_eq!(MultiPoly::zero(2).to_string(), "0");
        assert_eq!(MultiPoly::one(2).to_string(), "1");
    }
}
