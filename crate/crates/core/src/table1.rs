//! Worked example: the twenty length-6 elements of `S_5` acting on the
//! clan `(+,-,+,-,+)` of `X_{35241}^{14253}`, i.e. the product
//! `S_{31425} · S_{14253}` with `(p, q) = (3, 2)`.
//!
//! The golden copy lives in `data/table1.tsv`. Regeneration reads only the
//! word column from it, recomputes every clan and constant, and renders
//! the table again for a byte comparison.

use std::collections::BTreeSet;

use crate::clan::Clan;
use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::permutation::{enumerate_by_length, Permutation};
use crate::richardson::{clan_of_pair, structure_constant};
use crate::weak_action::{act, act_word};

pub const GOLDEN: &str = include_str!("../data/table1.tsv");

pub const X: &str = "31425";
pub const Y: &str = "14253";
pub const P: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub word: Vec<usize>,
    pub w: Permutation,
    pub clan: Clan,
    pub constant: u8,
}

#[derive(Debug, Clone)]
pub struct Regenerated {
    pub start: Clan,
    pub rows: Vec<Row>,
    pub rendered: String,
    /// Every length-6 element of `S_5` appears exactly once.
    pub covers_all_elements: bool,
    /// Acting along the canonical reduced word gives the same clan.
    pub word_independent: bool,
}

impl Regenerated {
    pub fn matches_golden(&self) -> bool {
        self.rendered == GOLDEN && self.covers_all_elements && self.word_independent
    }

    /// Golden lines that differ from the regenerated ones, as `(line, golden, ours)`.
    pub fn diff(&self) -> Vec<(usize, String, String)> {
        let golden: Vec<&str> = GOLDEN.lines().collect();
        let ours: Vec<&str> = self.rendered.lines().collect();
        (0..golden.len().max(ours.len()))
            .filter_map(|k| {
                let g = golden.get(k).copied().unwrap_or("");
                let o = ours.get(k).copied().unwrap_or("");
                (g != o).then(|| (k + 1, g.to_string(), o.to_string()))
            })
            .collect()
    }
}

fn parse_word(text: &str) -> Result<Vec<usize>> {
    let body = text.trim().trim_start_matches('[').trim_end_matches(']');
    body.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidPermutation(text.to_string()))
        })
        .collect()
}

fn render_word(word: &[usize]) -> String {
    let parts: Vec<String> = word.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

pub fn regenerate() -> Result<Regenerated> {
    let x: Permutation = X.parse()?;
    let y: Permutation = Y.parse()?;
    let n = x.degree();
    let u = Permutation::longest(n)?.compose(&x)?;
    let start = clan_of_pair(&u, &y, P)?;

    let mut lines = GOLDEN.lines();
    let header = lines.next().unwrap_or_default();
    let mut rows = Vec::new();
    let mut word_independent = true;
    for line in lines {
        let word_text = line.split('\t').next().unwrap_or_default();
        let word = parse_word(word_text)?;
        let w = Permutation::from_word(n, &word)?;
        let clan = act_word(&word, &start)?;
        word_independent &= act(&w, &start)? == clan;
        let constant = structure_constant(&x, &y, &w, P)?;
        rows.push(Row {
            word,
            w,
            clan,
            constant,
        });
    }

    let expected: BTreeSet<Permutation> =
        enumerate_by_length(n, x.length() + y.length(), &Guards::default())?
            .into_iter()
            .collect();
    let listed: BTreeSet<Permutation> = rows.iter().map(|r| r.w.clone()).collect();
    let covers_all_elements = listed == expected && listed.len() == rows.len();

    let mut rendered = format!("{header}\n");
    for row in &rows {
        rendered.push_str(&format!(
            "{}\t{}\t{}\n",
            render_word(&row.word),
            row.clan,
            row.constant
        ));
    }
    Ok(Regenerated {
        start,
        rows,
        rendered,
        covers_all_elements,
        word_independent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_has_twenty_rows() {
        assert_eq!(GOLDEN.lines().count(), 21);
    }

    #[test]
    fn regenerates_byte_identical() {
        let table = regenerate().unwrap();
        assert_eq!(table.start.to_string(), "(+,-,+,-,+)");
        assert!(table.covers_all_elements);
        assert!(table.word_independent);
        assert_eq!(table.diff(), vec![]);
        assert!(table.matches_golden());
        assert_eq!(table.rows.iter().filter(|r| r.constant == 1).count(), 8);
    }

    #[test]
    fn sample_rows() {
        let table = regenerate().unwrap();
        let find = |word: &[usize]| table.rows.iter().find(|r| r.word == word).unwrap();
        let row = find(&[2, 1, 3, 2, 3, 4]);
        assert_eq!((row.clan.to_string(), row.constant), ("(1,2,+,2,1)".into(), 1));
        let row = find(&[3, 2, 1, 3, 2, 3]);
        assert_eq!((row.clan.to_string(), row.constant), ("(1,2,2,1,+)".into(), 0));
        let row = find(&[4, 3, 2, 1, 4, 3]);
        assert_eq!((row.clan.to_string(), row.constant), ("(1,2,+,2,1)".into(), 1));
    }
}
