//! `(p,q)`-clans: strings of `+`, `-` and matched natural numbers that
//! index the `GL(p) × GL(q)`-orbits on the flag variety of `C^{p+q}`.
//!
//! Only the positions of matching numbers matter, so a [`Clan`] is always
//! stored in canonical form: pair labels are `1, 2, 3, ...` in order of
//! first occurrence. Equality and hashing use that form.

use std::fmt;

use crate::error::{Error, Result};
use crate::guards::Guards;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Plus,
    Minus,
    Pair(usize),
}

impl Symbol {
    pub fn is_sign(self) -> bool {
        !matches!(self, Symbol::Pair(_))
    }

    /// `Plus`/`Minus` pairs are opposite signs.
    pub fn is_opposite(self, other: Symbol) -> bool {
        matches!(
            (self, other),
            (Symbol::Plus, Symbol::Minus) | (Symbol::Minus, Symbol::Plus)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clan {
    symbols: Vec<Symbol>,
    p: usize,
    q: usize,
}

impl Clan {
    /// Validates and normalizes a symbol string as a `(p,q)`-clan.
    pub fn new(symbols: Vec<Symbol>, p: usize, q: usize) -> Result<Self> {
        if symbols.len() != p + q {
            return Err(Error::InvalidClan(format!(
                "length {} but p + q = {}",
                symbols.len(),
                p + q
            )));
        }
        let mut counts = std::collections::BTreeMap::new();
        let (mut plus, mut minus) = (0usize, 0usize);
        for s in &symbols {
            match *s {
                Symbol::Plus => plus += 1,
                Symbol::Minus => minus += 1,
                Symbol::Pair(k) => *counts.entry(k).or_insert(0usize) += 1,
            }
        }
        if let Some((label, count)) = counts.iter().find(|(_, &c)| c != 2) {
            return Err(Error::InvalidClan(format!(
                "label {label} occurs {count} time(s), expected exactly 2"
            )));
        }
        if plus as isize - minus as isize != p as isize - q as isize {
            return Err(Error::InvalidClan(format!(
                "{plus} plus and {minus} minus signs do not differ by p - q = {}",
                p as isize - q as isize
            )));
        }
        Ok(Clan {
            symbols: canonical_labels(&symbols),
            p,
            q,
        })
    }

    /// Parses `"(1,+,1,-)"` or the compact `"1+1-"` as a `(p,q)`-clan.
    pub fn parse(text: &str, p: usize, q: usize) -> Result<Self> {
        Clan::new(tokenize(text)?, p, q)
    }

    /// Parses a clan, inferring `(p, q)` from its sign surplus.
    pub fn parse_inferred(text: &str) -> Result<Self> {
        let symbols = tokenize(text)?;
        let n = symbols.len() as isize;
        let surplus: isize = symbols
            .iter()
            .map(|s| match s {
                Symbol::Plus => 1,
                Symbol::Minus => -1,
                Symbol::Pair(_) => 0,
            })
            .sum();
        // p + q = n and p - q = surplus.
        let p = (n + surplus) / 2;
        Clan::new(symbols, p as usize, (n - p) as usize)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// `c_i`, 1-indexed.
    pub fn get(&self, i: usize) -> Symbol {
        self.symbols[i - 1]
    }

    /// Position of the other occurrence of the number at position `i`.
    pub fn mate(&self, i: usize) -> Option<usize> {
        match self.get(i) {
            Symbol::Pair(k) => self
                .symbols
                .iter()
                .enumerate()
                .position(|(j, &s)| j + 1 != i && s == Symbol::Pair(k))
                .map(|j| j + 1),
            _ => None,
        }
    }

    /// Matched pairs as `(first, second)` positions, ordered by first position.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut open: Vec<Option<usize>> = Vec::new();
        let mut out = Vec::new();
        for (idx, s) in self.symbols.iter().enumerate() {
            if let Symbol::Pair(k) = *s {
                if open.len() < k {
                    open.resize(k, None);
                }
                match open[k - 1].take() {
                    Some(first) => out.push((first, idx + 1)),
                    None => open[k - 1] = Some(idx + 1),
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// A copy with the symbols in positions `i` and `i + 1` exchanged.
    pub(crate) fn swapped(&self, i: usize) -> Clan {
        let mut symbols = self.symbols.clone();
        symbols.swap(i - 1, i);
        Clan {
            symbols: canonical_labels(&symbols),
            p: self.p,
            q: self.q,
        }
    }

    /// A copy with positions `i` and `i + 1` replaced by a fresh matched pair.
    pub(crate) fn paired(&self, i: usize) -> Clan {
        let fresh = self
            .symbols
            .iter()
            .filter_map(|s| match s {
                Symbol::Pair(k) => Some(*k),
                _ => None,
            })
            .max()
            .unwrap_or(0)
            + 1;
        let mut symbols = self.symbols.clone();
        symbols[i - 1] = Symbol::Pair(fresh);
        symbols[i] = Symbol::Pair(fresh);
        Clan {
            symbols: canonical_labels(&symbols),
            p: self.p,
            q: self.q,
        }
    }

    fn check_position(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.len(),
            });
        }
        Ok(())
    }

    fn completed_pairs_within(&self, i: usize) -> usize {
        self.pairs().iter().filter(|&&(_, t)| t <= i).count()
    }

    /// `γ(i;+)`: plus signs plus completed pairs among `c_1..c_i`.
    pub fn gamma_plus(&self, i: usize) -> Result<usize> {
        self.check_position(i)?;
        let plus = self.symbols[..i]
            .iter()
            .filter(|&&s| s == Symbol::Plus)
            .count();
        Ok(plus + self.completed_pairs_within(i))
    }

    /// `γ(i;-)`: minus signs plus completed pairs among `c_1..c_i`.
    pub fn gamma_minus(&self, i: usize) -> Result<usize> {
        self.check_position(i)?;
        let minus = self.symbols[..i]
            .iter()
            .filter(|&&s| s == Symbol::Minus)
            .count();
        Ok(minus + self.completed_pairs_within(i))
    }

    /// `γ(i;j)`: pairs `c_s = c_t` with `s <= i < j < t`.
    pub fn gamma_cross(&self, i: usize, j: usize) -> Result<usize> {
        self.check_position(i)?;
        self.check_position(j)?;
        if i >= j {
            return Err(Error::InvalidClan(format!(
                "gamma_cross needs i < j, got ({i}, {j})"
            )));
        }
        Ok(self
            .pairs()
            .iter()
            .filter(|&&(s, t)| s <= i && j < t)
            .count())
    }

    /// Clan length: over pairs `c_i = c_j` (`i < j`), the sum of `j - i`
    /// minus the number of pairs `c_s = c_t` with `s < i < t < j`.
    pub fn length(&self) -> usize {
        let pairs = self.pairs();
        pairs
            .iter()
            .map(|&(i, j)| {
                let crossing = pairs
                    .iter()
                    .filter(|&&(s, t)| s < i && i < t && t < j)
                    .count();
                j - i - crossing
            })
            .sum()
    }

    /// Dimension of the flag variety of `GL(p) × GL(q)`.
    pub fn levi_flag_dimension(&self) -> usize {
        levi_flag_dimension(self.p, self.q)
    }

    /// Dimension of the orbit: `d(L) + l(γ)`.
    pub fn orbit_dimension(&self) -> usize {
        self.levi_flag_dimension() + self.length()
    }

    /// Codimension of the orbit in the flag variety.
    pub fn codimension(&self) -> usize {
        let n = self.len();
        n * n.saturating_sub(1) / 2 - self.orbit_dimension()
    }

    /// No two matched pairs interleave as `(1,2,1,2)`.
    pub fn avoids_1212(&self) -> bool {
        let pairs = self.pairs();
        !pairs.iter().any(|&(a, b)| {
            pairs
                .iter()
                .any(|&(c, d)| a < c && c < b && b < d)
        })
    }

    pub fn is_sign_only(&self) -> bool {
        self.symbols.iter().all(|s| s.is_sign())
    }

    pub fn is_dense(&self) -> bool {
        *self == dense_clan(self.p, self.q)
    }
}

pub fn levi_flag_dimension(p: usize, q: usize) -> usize {
    (p * p.saturating_sub(1) + q * q.saturating_sub(1)) / 2
}

/// The clan of the dense orbit: `(1, ..., m, ±, ..., ±, m, ..., 1)` with
/// `m = min(p, q)` and `|p - q|` signs in the middle.
pub fn dense_clan(p: usize, q: usize) -> Clan {
    let m = p.min(q);
    let middle = if p >= q { Symbol::Plus } else { Symbol::Minus };
    let mut symbols: Vec<Symbol> = (1..=m).map(Symbol::Pair).collect();
    symbols.extend(std::iter::repeat_n(middle, p.max(q) - m));
    symbols.extend((1..=m).rev().map(Symbol::Pair));
    Clan { symbols, p, q }
}

/// All `(p,q)`-clans in canonical form, ordered lexicographically with
/// `+ < - < (open a new pair) < (close pair 1) < (close pair 2) < ...`.
pub fn enumerate_clans(p: usize, q: usize, guards: &Guards) -> Result<Vec<Clan>> {
    guards.check_clan_size(p + q)?;
    let mut out = Vec::new();
    let mut state = EnumState {
        p,
        q,
        symbols: Vec::with_capacity(p + q),
        plus: 0,
        minus: 0,
        opened: 0,
        open: Vec::new(),
    };
    state.extend(&mut out);
    Ok(out)
}

struct EnumState {
    p: usize,
    q: usize,
    symbols: Vec<Symbol>,
    plus: usize,
    minus: usize,
    opened: usize,
    // Labels opened but not yet closed, in increasing order.
    open: Vec<usize>,
}

impl EnumState {
    fn extend(&mut self, out: &mut Vec<Clan>) {
        let n = self.p + self.q;
        let remaining = n - self.symbols.len();
        if remaining == 0 {
            if self.open.is_empty()
                && self.plus + self.opened == self.p
                && self.minus + self.opened == self.q
            {
                out.push(Clan {
                    symbols: self.symbols.clone(),
                    p: self.p,
                    q: self.q,
                });
            }
            return;
        }
        if self.open.len() > remaining {
            return;
        }
        // With k pairs in total there are p - k plus and q - k minus signs,
        // so every sign or new pair consumes budget on at least one side.
        if self.plus + self.opened < self.p {
            self.push_sign(Symbol::Plus, out);
        }
        if self.minus + self.opened < self.q {
            self.push_sign(Symbol::Minus, out);
        }
        if self.plus + self.opened < self.p && self.minus + self.opened < self.q {
            self.opened += 1;
            let label = self.opened;
            self.open.push(label);
            self.symbols.push(Symbol::Pair(label));
            self.extend(out);
            self.symbols.pop();
            self.open.pop();
            self.opened -= 1;
        }
        for idx in 0..self.open.len() {
            let label = self.open.remove(idx);
            self.symbols.push(Symbol::Pair(label));
            self.extend(out);
            self.symbols.pop();
            self.open.insert(idx, label);
        }
    }

    fn push_sign(&mut self, sign: Symbol, out: &mut Vec<Clan>) {
        let counter = match sign {
            Symbol::Plus => &mut self.plus,
            _ => &mut self.minus,
        };
        *counter += 1;
        self.symbols.push(sign);
        self.extend(out);
        self.symbols.pop();
        match sign {
            Symbol::Plus => self.plus -= 1,
            _ => self.minus -= 1,
        }
    }
}

fn canonical_labels(symbols: &[Symbol]) -> Vec<Symbol> {
    let mut relabel: Vec<(usize, usize)> = Vec::new();
    symbols
        .iter()
        .map(|s| match *s {
            Symbol::Pair(k) => {
                let next = relabel.len() + 1;
                let canon = match relabel.iter().find(|(old, _)| *old == k) {
                    Some(&(_, c)) => c,
                    None => {
                        relabel.push((k, next));
                        next
                    }
                };
                Symbol::Pair(canon)
            }
            sign => sign,
        })
        .collect()
}

fn tokenize(text: &str) -> Result<Vec<Symbol>> {
    let bad = |msg: String| Error::InvalidClan(msg);
    let body = text.trim();
    let body = body
        .strip_prefix('(')
        .and_then(|b| b.strip_suffix(')'))
        .unwrap_or(body)
        .trim();
    if body.is_empty() {
        return Err(bad("empty clan".into()));
    }
    let token = |t: &str| -> Result<Symbol> {
        match t {
            "+" => Ok(Symbol::Plus),
            "-" | "\u{2212}" => Ok(Symbol::Minus),
            _ => match t.parse::<usize>() {
                Ok(k) if k > 0 => Ok(Symbol::Pair(k)),
                _ => Err(bad(format!("unrecognized symbol `{t}` in `{text}`"))),
            },
        }
    };
    if body.contains(',') {
        body.split(',').map(|t| token(t.trim())).collect()
    } else {
        body.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| token(c.encode_utf8(&mut [0; 4])))
            .collect()
    }
}

impl fmt::Display for Clan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (idx, s) in self.symbols.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            match s {
                Symbol::Plus => f.write_str("+")?,
                Symbol::Minus => f.write_str("-")?,
                Symbol::Pair(k) => write!(f, "{k}")?,
            }
        }
        f.write_str(")")
    }
}
