//! Richardson varieties `X_u^v` stable under `GL(p) × GL(q)` and their clans.
//!
//! Such a variety has `u` a shuffle of `p, ..., 1` with `n, ..., p+1` and
//! `v` a shuffle of `1, ..., p` with `p+1, ..., n`, and is nonempty iff
//! `u ≥ v`. It is then the closure of the orbit of a `(1,2,1,2)`-avoiding
//! clan, and the product `S_{w_0 u} · S_v` is the sum of `S_w` over the
//! `w` of the right length that carry this clan to the dense clan.

use crate::clan::{dense_clan, Clan, Symbol};
use crate::error::{Error, Result};
use crate::expansion::SchubertExpansion;
use crate::guards::Guards;
use crate::permutation::Permutation;
use crate::weak_action::{act, brion_class};

/// A pair `(u, v)` indexing a nonempty `L`-stable Richardson variety.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RichardsonPair {
    u: Permutation,
    v: Permutation,
    p: usize,
}

impl RichardsonPair {
    /// Checks both shuffle shapes and `u ≥ v`.
    pub fn new(u: Permutation, v: Permutation, p: usize) -> Result<Self> {
        check_shuffles(&u, &v, p)?;
        if let Some(position) = first_failure(&u, &v, p) {
            return Err(Error::NotComparable {
                u: u.to_string(),
                v: v.to_string(),
                position,
            });
        }
        Ok(RichardsonPair { u, v, p })
    }

    pub fn u(&self) -> &Permutation {
        &self.u
    }

    pub fn v(&self) -> &Permutation {
        &self.v
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.u.degree() - self.p
    }

    /// The clan whose orbit closure is `X_u^v`.
    pub fn clan(&self) -> Clan {
        build_clan(&self.u, &self.v, self.p).expect("comparability was checked on construction")
    }
}

fn check_shuffles(u: &Permutation, v: &Permutation, p: usize) -> Result<()> {
    if u.degree() != v.degree() {
        return Err(Error::DegreeMismatch {
            left: u.degree(),
            right: v.degree(),
        });
    }
    if !u.is_descending_shuffle(p) {
        return Err(Error::NotShuffle {
            perm: u.to_string(),
            kind: "descending",
            p,
        });
    }
    if !v.is_ascending_shuffle(p) {
        return Err(Error::NotShuffle {
            perm: v.to_string(),
            kind: "ascending",
            p,
        });
    }
    Ok(())
}

/// First prefix `i` where `F(u,v,i) < S(u,v,i)`, counting positions with
/// `u(j) > p, v(j) <= p` (F) against `u(j) <= p, v(j) > p` (S).
fn first_failure(u: &Permutation, v: &Permutation, p: usize) -> Option<usize> {
    let mut balance = 0isize;
    for i in 1..=u.degree() {
        match (u.get(i) > p, v.get(i) > p) {
            (true, false) => balance += 1,
            (false, true) => balance -= 1,
            _ => {}
        }
        if balance < 0 {
            return Some(i);
        }
    }
    None
}

/// `u ≥ v` for shuffles, decided by the prefix counts `F(u,v,i) ≥ S(u,v,i)`.
pub fn shuffles_comparable(u: &Permutation, v: &Permutation, p: usize) -> Result<bool> {
    check_shuffles(u, v, p)?;
    Ok(first_failure(u, v, p).is_none())
}

/// Scans left to right: `+` where both values are low, `-` where both are
/// high, a new number where `u` is high and `v` low, and otherwise the
/// second occurrence of the most recently opened unmatched number.
fn build_clan(u: &Permutation, v: &Permutation, p: usize) -> Result<Clan> {
    let n = u.degree();
    let mut symbols = Vec::with_capacity(n);
    let mut unmatched = Vec::new();
    let mut next_label = 1;
    for i in 1..=n {
        let symbol = match (u.get(i) > p, v.get(i) > p) {
            (false, false) => Symbol::Plus,
            (true, true) => Symbol::Minus,
            (true, false) => {
                unmatched.push(next_label);
                next_label += 1;
                Symbol::Pair(next_label - 1)
            }
            (false, true) => match unmatched.pop() {
                Some(label) => Symbol::Pair(label),
                None => {
                    return Err(Error::NotComparable {
                        u: u.to_string(),
                        v: v.to_string(),
                        position: i,
                    })
                }
            },
        };
        symbols.push(symbol);
    }
    Clan::new(symbols, p, n - p)
}

/// `γ(u, v)`.
pub fn clan_of_pair(u: &Permutation, v: &Permutation, p: usize) -> Result<Clan> {
    let eager = RichardsonPair::new(u.clone(), v.clone(), p);
    let lazy = check_shuffles(u, v, p).and_then(|_| build_clan(u, v, p));
    match (eager, lazy) {
        (Ok(pair), Ok(clan)) => {
            debug_assert_eq!(pair.clan(), clan);
            Ok(clan)
        }
        (Err(e), Err(_)) => Err(e),
        (eager, lazy) => panic!(
            "comparability checks disagree for u = {u}, v = {v}, p = {p}: \
             prefix counts {:?}, scan {:?}",
            eager.err(),
            lazy.err()
        ),
    }
}

/// Inverse of [`clan_of_pair`] on `(1,2,1,2)`-avoiding clans.
///
/// `u` puts `p, ..., 1` on the `+`'s and second occurrences and
/// `n, ..., p+1` on the `-`'s and first occurrences; `v` puts `1, ..., p` on
/// the `+`'s and first occurrences and `p+1, ..., n` on the rest.
pub fn pair_of_clan(clan: &Clan) -> Result<RichardsonPair> {
    if !clan.avoids_1212() {
        return Err(Error::PatternPresent(clan.to_string()));
    }
    let (n, p) = (clan.len(), clan.p());
    let mut seen = vec![false; n + 1];
    let mut u = Vec::with_capacity(n);
    let mut v = Vec::with_capacity(n);
    let (mut u_low, mut u_high) = (p, n);
    let (mut v_low, mut v_high) = (1, p + 1);
    for s in clan.symbols() {
        let (u_gets_low, v_gets_low) = match *s {
            Symbol::Plus => (true, true),
            Symbol::Minus => (false, false),
            Symbol::Pair(k) => {
                let second = seen[k];
                seen[k] = true;
                (second, !second)
            }
        };
        if u_gets_low {
            u.push(u_low);
            u_low -= 1;
        } else {
            u.push(u_high);
            u_high -= 1;
        }
        if v_gets_low {
            v.push(v_low);
            v_low += 1;
        } else {
            v.push(v_high);
            v_high += 1;
        }
    }
    RichardsonPair::new(Permutation::new(u)?, Permutation::new(v)?, p)
}

/// Every pair of a descending and an ascending shuffle at `p` in `S_n`,
/// comparable or not, ordered by `(u, v)`.
pub fn shuffle_pairs(n: usize, p: usize, guards: &Guards) -> Result<Vec<(Permutation, Permutation)>> {
    guards.check_clan_size(n)?;
    if p > n {
        return Ok(Vec::new());
    }
    let mut descending = Vec::new();
    let mut ascending = Vec::new();
    for low in subsets(n, p) {
        let (mut d_low, mut d_high) = (p, n);
        let (mut a_low, mut a_high) = (1, p + 1);
        let mut d = Vec::with_capacity(n);
        let mut a = Vec::with_capacity(n);
        for is_low in low {
            if is_low {
                d.push(d_low);
                a.push(a_low);
                d_low = d_low.saturating_sub(1);
                a_low += 1;
            } else {
                d.push(d_high);
                a.push(a_high);
                d_high -= 1;
                a_high += 1;
            }
        }
        descending.push(Permutation::new(d)?);
        ascending.push(Permutation::new(a)?);
    }
    descending.sort();
    ascending.sort();
    let mut out = Vec::with_capacity(descending.len() * ascending.len());
    for u in &descending {
        for v in &ascending {
            out.push((u.clone(), v.clone()));
        }
    }
    Ok(out)
}

/// All nonempty `L`-stable Richardson pairs at `p` in `S_n`.
pub fn richardson_pairs(n: usize, p: usize, guards: &Guards) -> Result<Vec<RichardsonPair>> {
    Ok(shuffle_pairs(n, p, guards)?
        .into_iter()
        .filter_map(|(u, v)| RichardsonPair::new(u, v, p).ok())
        .collect())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<bool>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn go(n: usize, k: usize, current: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        let chosen = current.iter().filter(|&&b| b).count();
        if current.len() == n {
            if chosen == k {
                out.push(current.clone());
            }
            return;
        }
        for bit in [false, true] {
            if bit && chosen == k {
                continue;
            }
            current.push(bit);
            go(n, k, current, out);
            current.pop();
        }
    }
    go(n, k, &mut current, &mut out);
    out
}

/// The pair behind the product `S_x · S_y`: `u = w_0 x`, `v = y`.
fn product_pair(x: &Permutation, y: &Permutation, p: usize) -> Result<RichardsonPair> {
    if x.degree() != y.degree() {
        return Err(Error::DegreeMismatch {
            left: x.degree(),
            right: y.degree(),
        });
    }
    let u = Permutation::longest(x.degree())?.compose(x)?;
    RichardsonPair::new(u, y.clone(), p)
}

/// `S_x · S_y` for `w_0 x` a descending and `y` an ascending shuffle at `p`
/// with `w_0 x ≥ y`. Every coefficient is 1 and every key has length
/// `l(x) + l(y)`.
pub fn special_product(
    x: &Permutation,
    y: &Permutation,
    p: usize,
    guards: &Guards,
) -> Result<SchubertExpansion> {
    let pair = product_pair(x, y, p)?;
    let clan = pair.clan();
    debug_assert_eq!(clan.codimension(), x.length() + y.length());
    brion_class(&clan, guards)
}

/// `c_{x,y}^w`: 1 if `w · γ(w_0 x, y)` is the dense clan, 0 otherwise.
pub fn structure_constant(
    x: &Permutation,
    y: &Permutation,
    w: &Permutation,
    p: usize,
) -> Result<u8> {
    let pair = product_pair(x, y, p)?;
    if w.degree() != x.degree() {
        return Err(Error::DegreeMismatch {
            left: w.degree(),
            right: x.degree(),
        });
    }
    let expected = x.length() + y.length();
    if w.length() != expected {
        return Err(Error::WrongLength {
            w: w.to_string(),
            actual: w.length(),
            expected,
        });
    }
    let clan = pair.clan();
    Ok(u8::from(act(w, &clan)? == dense_clan(clan.p(), clan.q())))
}
