//! The monoid action of `S_n` on `(p,q)`-clans and the weak order it
//! generates.
//!
//! `s_i · γ` follows the four clan rules: positions `i, i+1` are swapped
//! when `α_i` is complex and moves the orbit up, replaced by a fresh
//! matched pair when `α_i` is non-compact imaginary, and left alone
//! otherwise. A word `(i_1, ..., i_k)` acts rightmost letter first.

use num_bigint::BigInt;
use serde::Serialize;

use crate::clan::{dense_clan, enumerate_clans, Clan, Symbol};
use crate::error::{Error, Result};
use crate::expansion::SchubertExpansion;
use crate::guards::Guards;
use crate::permutation::{enumerate_by_length, Permutation};

/// How the simple root `α_i` sits relative to an orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootType {
    /// Complex root raising the orbit; `s_i` swaps `c_i` and `c_{i+1}`.
    ComplexSwap,
    /// `c_i, c_{i+1}` are opposite signs; `s_i` pairs them up.
    NonCompactImaginary,
    /// `s_i` fixes the orbit.
    Fixed,
}

pub fn classify_root(i: usize, clan: &Clan) -> Result<RootType> {
    check_root(i, clan.len())?;
    let (a, b) = (clan.get(i), clan.get(i + 1));
    let kind = match (a, b) {
        _ if a.is_opposite(b) => RootType::NonCompactImaginary,
        (Symbol::Plus | Symbol::Minus, Symbol::Pair(_))
            if clan.mate(i + 1).is_some_and(|m| m > i + 1) =>
        {
            RootType::ComplexSwap
        }
        (Symbol::Pair(_), Symbol::Plus | Symbol::Minus)
            if clan.mate(i).is_some_and(|m| m < i) =>
        {
            RootType::ComplexSwap
        }
        (Symbol::Pair(x), Symbol::Pair(y)) if x != y && clan.mate(i) < clan.mate(i + 1) => {
            RootType::ComplexSwap
        }
        _ => RootType::Fixed,
    };
    Ok(kind)
}

/// `s_i · γ`.
pub fn act_simple(i: usize, clan: &Clan) -> Result<Clan> {
    Ok(match classify_root(i, clan)? {
        RootType::ComplexSwap => clan.swapped(i),
        RootType::NonCompactImaginary => clan.paired(i),
        RootType::Fixed => clan.clone(),
    })
}

/// `s_{i_1} · (s_{i_2} · ( ⋯ (s_{i_k} · γ)))`.
pub fn act_word(word: &[usize], clan: &Clan) -> Result<Clan> {
    for &i in word {
        check_root(i, clan.len())?;
    }
    word.iter()
        .rev()
        .try_fold(clan.clone(), |current, &i| act_simple(i, &current))
}

/// `w · γ`, computed along the canonical reduced word of `w`.
pub fn act(w: &Permutation, clan: &Clan) -> Result<Clan> {
    if w.degree() != clan.len() {
        return Err(Error::DegreeMismatch {
            left: w.degree(),
            right: clan.len(),
        });
    }
    act_word(&w.reduced_word(), clan)
}

/// Cross action of `s_i`: permute the characters in positions `i, i+1`.
pub fn cross_action(i: usize, clan: &Clan) -> Result<Clan> {
    check_root(i, clan.len())?;
    Ok(clan.swapped(i))
}

/// Multiplicity of the weak-order edge leaving `clan` along `α_i`, or
/// `None` when `s_i` fixes the orbit.
///
/// Complex edges are single. A non-compact imaginary edge is double
/// exactly when the root is of type II, i.e. the cross action of `s_i`
/// fixes the orbit.
pub fn edge_multiplicity(i: usize, clan: &Clan) -> Result<Option<u8>> {
    Ok(match classify_root(i, clan)? {
        RootType::Fixed => None,
        RootType::ComplexSwap => Some(1),
        RootType::NonCompactImaginary => {
            if cross_action(i, clan)? == *clan {
                Some(2)
            } else {
                Some(1)
            }
        }
    })
}

/// Number of double edges on the path traced by `word` from `clan`.
pub fn double_edge_count(word: &[usize], clan: &Clan) -> Result<u32> {
    let mut current = clan.clone();
    let mut doubles = 0;
    for &i in word.iter().rev() {
        if edge_multiplicity(i, &current)? == Some(2) {
            doubles += 1;
        }
        current = act_simple(i, &current)?;
    }
    Ok(doubles)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub root: usize,
    pub mult: u8,
}

/// The weak order on all `(p,q)`-clans: an edge `γ → s_i · γ` labeled `i`
/// whenever `s_i` moves `γ`.
#[derive(Debug, Clone)]
pub struct WeakOrderGraph {
    pub p: usize,
    pub q: usize,
    pub nodes: Vec<Clan>,
    pub edges: Vec<Edge>,
}

pub fn weak_order_graph(p: usize, q: usize, guards: &Guards) -> Result<WeakOrderGraph> {
    let nodes = enumerate_clans(p, q, guards)?;
    let index: std::collections::HashMap<&Clan, usize> =
        nodes.iter().enumerate().map(|(k, c)| (c, k)).collect();
    let mut edges = Vec::new();
    for (src, clan) in nodes.iter().enumerate() {
        for i in 1..clan.len() {
            if let Some(mult) = edge_multiplicity(i, clan)? {
                let target = act_simple(i, clan)?;
                edges.push(Edge {
                    src,
                    dst: index[&target],
                    root: i,
                    mult,
                });
            }
        }
    }
    Ok(WeakOrderGraph { p, q, nodes, edges })
}

impl WeakOrderGraph {
    /// Nodes with no incoming edge.
    pub fn sources(&self) -> Vec<&Clan> {
        let mut has_in = vec![false; self.nodes.len()];
        for e in &self.edges {
            has_in[e.dst] = true;
        }
        self.nodes
            .iter()
            .zip(has_in)
            .filter_map(|(c, h)| (!h).then_some(c))
            .collect()
    }

    /// Nodes with no outgoing edge.
    pub fn sinks(&self) -> Vec<&Clan> {
        let mut has_out = vec![false; self.nodes.len()];
        for e in &self.edges {
            has_out[e.src] = true;
        }
        self.nodes
            .iter()
            .zip(has_out)
            .filter_map(|(c, h)| (!h).then_some(c))
            .collect()
    }

    /// Kahn's algorithm: true iff every node can be topologically ordered.
    pub fn is_acyclic(&self) -> bool {
        let mut indegree = vec![0usize; self.nodes.len()];
        for e in &self.edges {
            indegree[e.dst] += 1;
        }
        let mut ready: Vec<usize> = (0..self.nodes.len()).filter(|&k| indegree[k] == 0).collect();
        let mut seen = 0;
        while let Some(k) = ready.pop() {
            seen += 1;
            for e in self.edges.iter().filter(|e| e.src == k) {
                indegree[e.dst] -= 1;
                if indegree[e.dst] == 0 {
                    ready.push(e.dst);
                }
            }
        }
        seen == self.nodes.len()
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph weak_order_{}_{} {{\n", self.p, self.q);
        for (k, c) in self.nodes.iter().enumerate() {
            out.push_str(&format!("  n{k} [label=\"{c}\"];\n"));
        }
        for e in &self.edges {
            let style = if e.mult == 2 { ", style=bold" } else { "" };
            out.push_str(&format!(
                "  n{} -> n{} [label=\"{}\"{style}];\n",
                e.src, e.dst, e.root
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Node {
            id: usize,
            clan: String,
            dimension: usize,
        }
        #[derive(Serialize)]
        struct JsonEdge {
            src: String,
            dst: String,
            root: usize,
            mult: u8,
        }
        #[derive(Serialize)]
        struct Graph {
            p: usize,
            q: usize,
            nodes: Vec<Node>,
            edges: Vec<JsonEdge>,
        }
        let graph = Graph {
            p: self.p,
            q: self.q,
            nodes: self
                .nodes
                .iter()
                .enumerate()
                .map(|(id, c)| Node {
                    id,
                    clan: c.to_string(),
                    dimension: c.orbit_dimension(),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| JsonEdge {
                    src: self.nodes[e.src].to_string(),
                    dst: self.nodes[e.dst].to_string(),
                    root: e.root,
                    mult: e.mult,
                })
                .collect(),
        };
        serde_json::to_value(graph).expect("graph serializes")
    }
}

/// `W(γ)`: permutations of length `codim(γ)` carrying `γ` to the dense clan.
pub fn w_set(clan: &Clan, guards: &Guards) -> Result<Vec<Permutation>> {
    let n = clan.len();
    guards.check_clan_size(n)?;
    let dense = dense_clan(clan.p(), clan.q());
    let mut out = Vec::new();
    for w in enumerate_by_length(n, clan.codimension(), guards)? {
        if act(&w, clan)? == dense {
            out.push(w);
        }
    }
    Ok(out)
}

/// Class of the orbit closure: `Σ_{w ∈ W(γ)} 2^{D(w)} S_w`, where `D(w)`
/// counts double edges along a path labeled by a reduced word of `w`.
pub fn brion_class(clan: &Clan, guards: &Guards) -> Result<SchubertExpansion> {
    let mut out = SchubertExpansion::new();
    for w in w_set(clan, guards)? {
        let doubles = double_edge_count(&w.reduced_word(), clan)?;
        out.add(w, BigInt::from(1u8) << doubles);
    }
    Ok(out)
}

fn check_root(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    Ok(())
}
