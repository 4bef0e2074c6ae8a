//! Permutations of `[n] = {1, ..., n}` in one-line notation.
//!
//! Everything is 1-indexed: `w.get(i)` is `w(i)` and simple reflections are
//! `s_1, ..., s_{n-1}`. Composition follows function composition,
//! `(a ∘ b)(i) = a(b(i))`, so right multiplication by `s_i` swaps the
//! entries in positions `i` and `i + 1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::guards::Guards;

/// An element of `S_n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation `w(1), ..., w(n)`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        Ok(Permutation {
            images: (1..=n).collect(),
        })
    }

    /// The longest element `w_0 : i ↦ n + 1 - i`.
    pub fn longest(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        Ok(Permutation {
            images: (1..=n).rev().collect(),
        })
    }

    /// The simple transposition `s_i` in `S_n`.
    pub fn simple_reflection(n: usize, i: usize) -> Result<Self> {
        let mut w = Permutation::identity(n)?;
        check_simple_index(i, n)?;
        w.images.swap(i - 1, i);
        Ok(w)
    }

    /// The product `s_{i_1} s_{i_2} ⋯ s_{i_k}` in `S_n`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = Permutation::identity(n)?;
        for &i in word {
            check_simple_index(i, n)?;
            w.images.swap(i - 1, i);
        }
        Ok(w)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(i)` for `1 <= i <= n`.
    ///
    /// Panics if `i` is out of range.
    pub fn get(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_same_degree(other)?;
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.images[j - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v - 1] = k + 1;
        }
        Permutation { images }
    }

    /// `self · s_i`, i.e. the one-line notation with positions `i, i+1` swapped.
    pub fn times_simple(&self, i: usize) -> Result<Permutation> {
        check_simple_index(i, self.degree())?;
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Ok(Permutation { images })
    }

    /// Number of inversions `i < j` with `w(i) > w(j)`.
    pub fn length(&self) -> usize {
        self.code().iter().sum()
    }

    /// `r_w(i, j) = #{k <= i : w(k) <= j}`.
    pub fn rank(&self, i: usize, j: usize) -> Result<usize> {
        let n = self.degree();
        for index in [i, j] {
            if index == 0 || index > n {
                return Err(Error::IndexOutOfRange { index, max: n });
            }
        }
        Ok(self.images[..i].iter().filter(|&&v| v <= j).count())
    }

    fn rank_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut rows = Vec::with_capacity(n);
        let mut row = vec![0; n];
        for &v in &self.images {
            for entry in row.iter_mut().skip(v - 1) {
                *entry += 1;
            }
            rows.push(row.clone());
        }
        rows
    }

    /// Bruhat comparison `self <= other` through rank matrices:
    /// `r_self(i,j) >= r_other(i,j)` everywhere.
    pub fn bruhat_leq_rank(&self, other: &Permutation) -> Result<bool> {
        self.check_same_degree(other)?;
        let mine = self.rank_matrix();
        let theirs = other.rank_matrix();
        Ok(mine
            .iter()
            .zip(&theirs)
            .all(|(a, b)| a.iter().zip(b).all(|(x, y)| x >= y)))
    }

    /// Bruhat comparison `self <= other` through sorted prefixes (tableau
    /// criterion): for every `i`, the sorted `{self(1..=i)}` is entrywise
    /// at most the sorted `{other(1..=i)}`.
    pub fn bruhat_leq_prefix(&self, other: &Permutation) -> Result<bool> {
        self.check_same_degree(other)?;
        let mut mine = Vec::with_capacity(self.degree());
        let mut theirs = Vec::with_capacity(self.degree());
        for (&a, &b) in self.images.iter().zip(&other.images) {
            insert_sorted(&mut mine, a);
            insert_sorted(&mut theirs, b);
            if mine.iter().zip(&theirs).any(|(x, y)| x > y) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Lehmer code: `c_i = #{j > i : w(j) < w(i)}`.
    pub fn code(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .map(|(i, &wi)| self.images[i + 1..].iter().filter(|&&wj| wj < wi).count())
            .collect()
    }

    /// The permutation with the given Lehmer code, in the smallest `S_m`
    /// with `m >= c.len()` and `c_i <= m - i` for every `i`.
    pub fn from_code(code: &[usize]) -> Permutation {
        let mut m = code.len().max(1);
        for (k, &c) in code.iter().enumerate() {
            m = m.max(k + 1 + c);
        }
        let mut remaining: Vec<usize> = (1..=m).collect();
        let mut images = Vec::with_capacity(m);
        for k in 0..m {
            let c = code.get(k).copied().unwrap_or(0);
            images.push(remaining.remove(c));
        }
        Permutation { images }
    }

    /// Positions `i` with `w(i) > w(i + 1)`.
    pub fn descents(&self) -> impl Iterator<Item = usize> + '_ {
        self.images
            .windows(2)
            .enumerate()
            .filter(|(_, pair)| pair[0] > pair[1])
            .map(|(k, _)| k + 1)
    }

    /// Largest descent, or 0 for the identity. `S_w` only involves
    /// `x_1, ..., x_{last_descent}`.
    pub fn last_descent(&self) -> usize {
        self.descents().last().unwrap_or(0)
    }

    /// Smallest `m` such that `w` fixes everything above `m` (at least 1).
    pub fn minimal_degree(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .rev()
            .find(|(k, &v)| v != k + 1)
            .map_or(1, |(k, _)| k + 1)
    }

    /// The same permutation viewed in `S_m`, adding or dropping trailing
    /// fixed points.
    pub fn with_degree(&self, m: usize) -> Result<Permutation> {
        if m < self.minimal_degree() {
            return Err(Error::DegreeMismatch {
                left: self.minimal_degree(),
                right: m,
            });
        }
        let mut images = self.images.clone();
        images.truncate(m);
        images.extend(images.len() + 1..=m);
        Ok(Permutation { images })
    }

    /// Canonical reduced word `(i_1, ..., i_k)` with `w = s_{i_1} ⋯ s_{i_k}`,
    /// built by repeatedly stripping the leftmost descent on the right.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut word = Vec::new();
        while let Some(k) = w.windows(2).position(|pair| pair[0] > pair[1]) {
            w.swap(k, k + 1);
            word.push(k + 1);
        }
        word.reverse();
        word
    }

    pub fn all_reduced_words(&self, guards: &Guards) -> Result<BTreeSet<Vec<usize>>> {
        guards.check_word_length(self.length())?;
        let mut out = BTreeSet::new();
        let mut suffix = Vec::new();
        collect_reduced_words(&mut self.images.clone(), &mut suffix, &mut out);
        Ok(out)
    }

    /// Values `<= p` and values `> p` each appear in decreasing order.
    pub fn is_descending_shuffle(&self, p: usize) -> bool {
        self.blocks_monotone(p, |a, b| a > b)
    }

    /// Values `<= p` and values `> p` each appear in increasing order.
    pub fn is_ascending_shuffle(&self, p: usize) -> bool {
        self.blocks_monotone(p, |a, b| a < b)
    }

    fn blocks_monotone(&self, p: usize, ordered: impl Fn(usize, usize) -> bool) -> bool {
        if p > self.degree() {
            return false;
        }
        let mut last_low: Option<usize> = None;
        let mut last_high: Option<usize> = None;
        for &v in &self.images {
            let slot = if v <= p { &mut last_low } else { &mut last_high };
            if let Some(prev) = *slot {
                if !ordered(prev, v) {
                    return false;
                }
            }
            *slot = Some(v);
        }
        true
    }

    fn check_same_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }
}

fn check_simple_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    Ok(())
}

fn insert_sorted(v: &mut Vec<usize>, x: usize) {
    let at = v.partition_point(|&y| y < x);
    v.insert(at, x);
}

fn collect_reduced_words(
    w: &mut Vec<usize>,
    suffix: &mut Vec<usize>,
    out: &mut BTreeSet<Vec<usize>>,
) {
    let mut any = false;
    for k in 0..w.len().saturating_sub(1) {
        if w[k] > w[k + 1] {
            any = true;
            w.swap(k, k + 1);
            suffix.push(k + 1);
            collect_reduced_words(w, suffix, out);
            suffix.pop();
            w.swap(k, k + 1);
        }
    }
    if !any {
        out.insert(suffix.iter().rev().copied().collect());
    }
}

/// All `w ∈ S_n` of length `k`, in lexicographic order of one-line notation.
pub fn enumerate_by_length(n: usize, k: usize, guards: &Guards) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    guards.check_degree(n)?;
    // Lehmer codes with c_i <= n - i and sum k, enumerated lexicographically,
    // are exactly the length-k permutations in lexicographic order.
    let mut out = Vec::new();
    let mut code = vec![0; n];
    fill_codes(&mut code, 0, k, &mut out);
    Ok(out)
}

fn fill_codes(code: &mut [usize], pos: usize, remaining: usize, out: &mut Vec<Permutation>) {
    let n = code.len();
    if pos == n {
        if remaining == 0 {
            out.push(Permutation::from_code(code).with_degree(n).expect("code fits S_n"));
        }
        return;
    }
    // Positions after `pos` can absorb at most sum_{i > pos} (n - 1 - i).
    let tail_capacity = (n - pos - 1) * (n - pos).saturating_sub(2) / 2;
    let max_here = (n - pos - 1).min(remaining);
    for c in 0..=max_here {
        if remaining - c > tail_capacity {
            continue;
        }
        code[pos] = c;
        fill_codes(code, pos + 1, remaining - c, out);
    }
    code[pos] = 0;
}

/// All of `S_n` in lexicographic order.
pub fn enumerate_all(n: usize, guards: &Guards) -> Result<Vec<Permutation>> {
    let max = n * n.saturating_sub(1) / 2;
    let mut out = Vec::new();
    for k in 0..=max {
        out.extend(enumerate_by_length(n, k, guards)?);
    }
    out.sort();
    Ok(out)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() <= 9 {
            for v in &self.images {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.images.iter().map(ToString::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts compact digit strings (`35241`) and comma-separated lists
    /// (`3,5,2,4,1`), optionally wrapped in brackets or parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPermutation(s.to_string());
        let trimmed = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')'])
            .trim();
        let images: Vec<usize> = if trimmed.contains(',') {
            trimmed
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            trimmed
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Permutation::new(images).map_err(|_| bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn brute_length(w: &Permutation) -> usize {
        let v = w.images();
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn identity_and_longest() {
        assert_eq!(Permutation::identity(3).unwrap().to_string(), "123");
        assert_eq!(Permutation::identity(5).unwrap().to_string(), "12345");
        assert_eq!(Permutation::identity(1).unwrap().to_string(), "1");
        assert_eq!(Permutation::identity(0), Err(Error::ZeroDegree));
        assert_eq!(Permutation::longest(5).unwrap().to_string(), "54321");
        assert_eq!(Permutation::longest(2).unwrap().to_string(), "21");
        assert_eq!(Permutation::longest(1).unwrap().to_string(), "1");
        assert_eq!(Permutation::longest(5).unwrap().length(), 10);
    }

    #[test]
    fn compose_examples() {
        let w0 = Permutation::longest(5).unwrap();
        assert_eq!(w0.compose(&perm("35241")).unwrap(), perm("31425"));
        let w = perm("35241");
        assert_eq!(w.compose(&Permutation::identity(5).unwrap()).unwrap(), w);
        assert!(perm("21").compose(&perm("21")).unwrap().is_identity());
        assert!(matches!(
            perm("21").compose(&perm("123")),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn length_examples() {
        // Inversions of 35241: (3,2),(3,1),(5,2),(5,4),(5,1),(2,1),(4,1).
        assert_eq!(perm("35241").length(), 7);
        assert_eq!(brute_length(&perm("35241")), 7);
        // 14253: (4,2),(4,3),(5,3).
        assert_eq!(perm("14253").length(), 3);
        assert_eq!(Permutation::identity(6).unwrap().length(), 0);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(perm("2143").rank(2, 2).unwrap(), 2);
        let w = perm("35241");
        assert_eq!(w.rank(5, 5).unwrap(), 5);
        let id = Permutation::identity(4).unwrap();
        for i in 1..=4 {
            for j in 1..=4 {
                assert_eq!(id.rank(i, j).unwrap(), i.min(j));
            }
        }
        assert!(matches!(w.rank(0, 1), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(w.rank(1, 6), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn bruhat_examples() {
        let cases = [
            ("14253", "35241", true),
            ("12345", "35241", true),
            ("21345", "12345", false),
        ];
        for (u, v, expected) in cases {
            assert_eq!(perm(u).bruhat_leq_rank(&perm(v)).unwrap(), expected);
            assert_eq!(perm(u).bruhat_leq_prefix(&perm(v)).unwrap(), expected);
        }
        assert!(perm("12").bruhat_leq_rank(&perm("123")).is_err());
        assert!(perm("12").bruhat_leq_prefix(&perm("123")).is_err());
    }

    #[test]
    fn bruhat_definitions_agree_through_s5() {
        let guards = Guards::default();
        for n in 1..=5 {
            let all = enumerate_all(n, &guards).unwrap();
            for u in &all {
                for v in &all {
                    assert_eq!(
                        u.bruhat_leq_rank(v).unwrap(),
                        u.bruhat_leq_prefix(v).unwrap(),
                        "{u} vs {v}"
                    );
                }
            }
        }
    }

    #[test]
    fn code_examples() {
        assert_eq!(perm("31425").code(), vec![2, 0, 1, 0, 0]);
        assert_eq!(perm("31425").length(), 3);
        assert_eq!(Permutation::identity(4).unwrap().code(), vec![0; 4]);
        assert_eq!(perm("54321").code(), vec![4, 3, 2, 1, 0]);

        assert_eq!(Permutation::from_code(&[2, 0, 1, 0, 0]), perm("31425"));
        assert_eq!(Permutation::from_code(&[0, 0, 0]), perm("123"));
        assert_eq!(Permutation::from_code(&[4, 3, 2, 1]), perm("54321"));
        assert_eq!(Permutation::from_code(&[]), perm("1"));
    }

    #[test]
    fn code_round_trip_and_length_through_s6() {
        let guards = Guards::default();
        for n in 1..=6 {
            for w in enumerate_all(n, &guards).unwrap() {
                assert_eq!(Permutation::from_code(&w.code()), w);
                assert_eq!(w.code().iter().sum::<usize>(), brute_length(&w));
                assert_eq!(w.inverse().compose(&w).unwrap(), Permutation::identity(n).unwrap());
            }
        }
    }

    #[test]
    fn reduced_word_examples() {
        assert!(Permutation::identity(4).unwrap().reduced_word().is_empty());
        assert_eq!(perm("1324").reduced_word(), vec![2]);
        let w = perm("321");
        let word = w.reduced_word();
        assert_eq!(word, vec![1, 2, 1]);
        assert_eq!(Permutation::from_word(3, &word).unwrap(), w);
    }

    #[test]
    fn canonical_reduced_word_is_reduced_through_s6() {
        let guards = Guards::default();
        for n in 1..=6 {
            for w in enumerate_all(n, &guards).unwrap() {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                assert_eq!(Permutation::from_word(n, &word).unwrap(), w);
            }
        }
    }

    #[test]
    fn all_reduced_words_examples() {
        let guards = Guards::default();
        let words = perm("321").all_reduced_words(&guards).unwrap();
        assert_eq!(words, BTreeSet::from([vec![1, 2, 1], vec![2, 1, 2]]));
        let words = perm("213").all_reduced_words(&guards).unwrap();
        assert_eq!(words, BTreeSet::from([vec![1]]));
        let words = perm("123").all_reduced_words(&guards).unwrap();
        assert_eq!(words, BTreeSet::from([vec![]]));
    }

    #[test]
    fn all_reduced_words_brute_force_s4() {
        // Oracle: every word of the right length over {1,2,3} whose product is w.
        let guards = Guards::default();
        for w in enumerate_all(4, &guards).unwrap() {
            let len = w.length();
            let mut expected = BTreeSet::new();
            let total = 3usize.pow(len as u32);
            for mut idx in 0..total {
                let mut word = Vec::with_capacity(len);
                for _ in 0..len {
                    word.push(idx % 3 + 1);
                    idx /= 3;
                }
                if Permutation::from_word(4, &word).unwrap() == w {
                    expected.insert(word);
                }
            }
            assert_eq!(w.all_reduced_words(&guards).unwrap(), expected, "{w}");
        }
    }

    #[test]
    fn all_reduced_words_guard() {
        let guards = Guards::default();
        let w0 = Permutation::longest(6).unwrap();
        assert!(matches!(
            w0.all_reduced_words(&guards),
            Err(Error::GuardExceeded { value: 15, limit: 12, .. })
        ));
    }

    #[test]
    fn shuffle_examples() {
        assert!(perm("35241").is_descending_shuffle(3));
        assert!(!perm("31425").is_descending_shuffle(3));
        assert!(!Permutation::identity(5).unwrap().is_descending_shuffle(1));

        assert!(perm("14253").is_ascending_shuffle(3));
        for p in 0..=5 {
            assert!(Permutation::identity(5).unwrap().is_ascending_shuffle(p));
        }
        assert!(perm("21345").is_ascending_shuffle(1));
        assert!(!perm("32145").is_ascending_shuffle(1));
    }

    #[test]
    fn enumerate_by_length_examples() {
        let guards = Guards::default();
        assert_eq!(enumerate_by_length(5, 6, &guards).unwrap().len(), 20);
        assert_eq!(
            enumerate_by_length(4, 0, &guards).unwrap(),
            vec![Permutation::identity(4).unwrap()]
        );
        assert_eq!(enumerate_by_length(3, 3, &guards).unwrap(), vec![perm("321")]);
        assert!(matches!(
            enumerate_by_length(9, 3, &guards),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn enumerate_by_length_partitions_sn() {
        let guards = Guards::default();
        let mut factorial = 1;
        for n in 1..=6 {
            factorial *= n;
            let max = n * (n - 1) / 2;
            let mut total = 0;
            for k in 0..=max + 1 {
                let layer = enumerate_by_length(n, k, &guards).unwrap();
                assert!(layer.windows(2).all(|p| p[0] < p[1]));
                assert!(layer.iter().all(|w| w.length() == k));
                total += layer.len();
            }
            assert_eq!(total, factorial);
        }
    }

    #[test]
    fn longest_complements_length() {
        let guards = Guards::default();
        for n in 1..=5 {
            let w0 = Permutation::longest(n).unwrap();
            for w in enumerate_all(n, &guards).unwrap() {
                assert_eq!(w0.compose(&w).unwrap().length(), n * (n - 1) / 2 - w.length());
            }
        }
    }

    #[test]
    fn text_formats() {
        assert_eq!(perm("3,5,2,4,1"), perm("35241"));
        let big = Permutation::longest(10).unwrap();
        assert_eq!(big.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
        assert!("1224".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
        assert!("1a3".parse::<Permutation>().is_err());
    }

    #[test]
    fn degree_changes() {
        let w = perm("21345");
        assert_eq!(w.minimal_degree(), 2);
        assert_eq!(w.with_degree(2).unwrap(), perm("21"));
        assert_eq!(perm("21").with_degree(4).unwrap(), perm("2134"));
        assert!(perm("132").with_degree(2).is_err());
        assert_eq!(perm("13254").last_descent(), 4);
        assert_eq!(perm("123").last_descent(), 0);
    }
}
