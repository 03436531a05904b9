//! Generators for the graph families under study: de Bruijn graphs and
//! their simplifications, gap-constrained subgraphs, overlapping-permutation
//! graphs, increasing/decreasing subgraphs, cluster graphs, wheels and
//! complete graphs.
//!
//! Vertices of every word- or permutation-indexed family are ordered
//! lexicographically by their word, so vertex `i` of a generated graph
//! always corresponds to entry `i` of the matching word list. Labels carry
//! the rendered words.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::HashMap;

/// Abort threshold for eager family materialization.
pub const DEFAULT_VERTEX_BUDGET: u64 = 1_000_000;

/// A finite word over the alphabet `{0, 1, ..., k-1}` (or `{1..n}` for
/// permutations). The vertex identity in all word-indexed families.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u16>);

impl Word {
    pub fn new(letters: Vec<u16>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        let mut v = self.0.clone();
        v.reverse();
        Word(v)
    }

    /// Strictly increasing with gaps of at least `m`.
    pub fn is_increasing(&self, m: usize) -> bool {
        self.0.windows(2).all(|w| w[0] as usize + m <= w[1] as usize)
    }

    pub fn is_decreasing(&self, m: usize) -> bool {
        self.0.windows(2).all(|w| w[1] as usize + m <= w[0] as usize)
    }

    pub fn prefix(&self, len: usize) -> &[u16] {
        &self.0[..len]
    }

    pub fn suffix(&self, len: usize) -> &[u16] {
        &self.0[self.0.len() - len..]
    }
}

impl std::fmt::Display for Word {
    /// Single digits are concatenated; words with letters past 9 are
    /// dash-separated.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.iter().all(|&x| x <= 9) {
            for x in &self.0 {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join("-"))
        }
    }
}

/// Directed graph with loops permitted; at most one arc per ordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    vertex_count: usize,
    arcs: Vec<(u32, u32)>,
    labels: Option<Vec<String>>,
}

impl Digraph {
    pub fn new(vertex_count: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list: Vec<(u32, u32)> = Vec::new();
        for (t, h) in arcs {
            for v in [t, h] {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        vertex_count,
                    });
                }
            }
            list.push((t as u32, h as u32));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Digraph {
            vertex_count,
            arcs: list,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count {
            return Err(Error::LabelCountMismatch {
                expected: self.vertex_count,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        self.arcs.binary_search(&(tail as u32, head as u32)).is_ok()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }
}

/// Enumerates length-`n` words over `{0..k-1}` whose adjacent letter pairs
/// all satisfy `step`, in lexicographic order.
fn enumerate_words(n: usize, k: usize, step: &dyn Fn(u16, u16) -> bool) -> Vec<Word> {
    if n == 0 || k == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur: Vec<u16> = Vec::with_capacity(n);
    fn rec(
        n: usize,
        k: usize,
        step: &dyn Fn(u16, u16) -> bool,
        cur: &mut Vec<u16>,
        out: &mut Vec<Word>,
    ) {
        if cur.len() == n {
            out.push(Word::new(cur.clone()));
            return;
        }
        for x in 0..k as u16 {
            if let Some(&prev) = cur.last() {
                if !step(prev, x) {
                    continue;
                }
            }
            cur.push(x);
            rec(n, k, step, cur, out);
            cur.pop();
        }
    }
    rec(n, k, step, &mut cur, &mut out);
    out
}

/// Counts what `enumerate_words` would produce, saturating at `u64::MAX`.
fn count_words(n: usize, k: usize, step: &dyn Fn(u16, u16) -> bool) -> u64 {
    if n == 0 || k == 0 {
        return 0;
    }
    let mut cur = vec![1u64; k];
    for _ in 1..n {
        let mut next = vec![0u64; k];
        for (x, nx) in next.iter_mut().enumerate() {
            for (y, cy) in cur.iter().enumerate() {
                if step(y as u16, x as u16) {
                    *nx = nx.saturating_add(*cy);
                }
            }
        }
        cur = next;
    }
    cur.iter().fold(0u64, |a, &b| a.saturating_add(b))
}

fn gap_step(m: usize) -> impl Fn(u16, u16) -> bool {
    move |a, b| (a as i64 - b as i64).unsigned_abs() >= m as u64
}

fn increasing_step(m: usize) -> impl Fn(u16, u16) -> bool {
    move |a, b| b as usize >= a as usize + m
}

fn decreasing_step(m: usize) -> impl Fn(u16, u16) -> bool {
    move |a, b| a as usize >= b as usize + m
}

/// All words `x1...xn` over `{0..k-1}` with `|x_i - x_{i+1}| >= m`, in
/// lexicographic order. Empty when the constraints are unsatisfiable.
pub fn words_anm(n: usize, m: usize, k: usize) -> Vec<Word> {
    enumerate_words(n, k, &gap_step(m))
}

/// Number of words `words_anm(n, m, k)` would produce, without
/// materializing them.
pub fn count_words_anm(n: usize, m: usize, k: usize) -> u64 {
    count_words(n, k, &gap_step(m))
}

/// Number of increasing (`x_i <= x_{i+1} - m`) words of `words_anm(n, m, k)`.
pub fn count_increasing_words(n: usize, m: usize, k: usize) -> u64 {
    count_words(n, k, &increasing_step(m))
}

pub fn count_permutations(n: usize) -> u64 {
    (1..=n as u64).fold(1u64, |a, b| a.saturating_mul(b))
}

fn word_labels(words: &[Word]) -> Vec<String> {
    words.iter().map(|w| w.to_string()).collect()
}

/// The de Bruijn graph `B(n, k)`: vertex set `words_anm(n, 0, k)`, an arc
/// from `u` to `v` whenever the length-`n-1` suffix of `u` equals the
/// prefix of `v`. Loops included.
pub fn de_bruijn(n: usize, k: usize) -> Result<Digraph> {
    if n < 2 || k < 1 {
        return Err(Error::InvalidParameters {
            what: "de_bruijn",
            why: format!("need n >= 2 and k >= 1, got n={n}, k={k}"),
        });
    }
    let words = words_anm(n, 0, k);
    overlap_digraph(&words, n)
}

/// Builds the (n-1)-overlap digraph on an arbitrary set of length-`n` words.
fn overlap_digraph(words: &[Word], n: usize) -> Result<Digraph> {
    let mut by_prefix: HashMap<&[u16], Vec<usize>> = HashMap::new();
    for (i, w) in words.iter().enumerate() {
        by_prefix.entry(w.prefix(n - 1)).or_default().push(i);
    }
    let mut arcs = Vec::new();
    for (i, w) in words.iter().enumerate() {
        if let Some(heads) = by_prefix.get(w.suffix(n - 1)) {
            for &j in heads {
                arcs.push((i, j));
            }
        }
    }
    Digraph::new(words.len(), arcs)?.with_labels(word_labels(words))
}

/// Forgets orientations, loops, and multiplicities.
pub fn simplify(d: &Digraph) -> Graph {
    let edges = d
        .arcs()
        .iter()
        .filter(|&&(t, h)| t != h)
        .map(|&(t, h)| (t as usize, h as usize));
    let g = Graph::new(d.vertex_count(), edges).expect("arcs already validated");
    match d.labels() {
        Some(labels) => g.with_labels(labels.to_vec()).expect("label count"),
        None => g,
    }
}

/// The simplified de Bruijn graph `S_m(n, k)`: the subgraph of
/// `simplify(de_bruijn(n, k))` induced by the words with adjacent-letter
/// gaps at least `m`. Built directly on the restricted word set; the
/// adjacency rule only inspects the two endpoint words.
pub fn s_m(n: usize, k: usize, m: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameters {
            what: "s_m",
            why: format!("need n >= 2, got n={n}"),
        });
    }
    let words = words_anm(n, m, k);
    Ok(simplify(&overlap_digraph(&words, n)?))
}

/// All permutations of `{1..n}` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur: Vec<u16> = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn rec(n: usize, cur: &mut Vec<u16>, used: &mut Vec<bool>, out: &mut Vec<Word>) {
        if cur.len() == n {
            out.push(Word::new(cur.clone()));
            return;
        }
        for x in 1..=n {
            if !used[x] {
                used[x] = true;
                cur.push(x as u16);
                rec(n, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// Rank vector of a sequence of distinct values: entry `i` is the number of
/// entries smaller than `seq[i]`. Two sequences are order-isomorphic exactly
/// when their rank vectors agree.
fn order_pattern(seq: &[u16]) -> Vec<u16> {
    seq.iter()
        .map(|&x| seq.iter().filter(|&&y| y < x).count() as u16)
        .collect()
}

/// The graph of overlapping permutations `P(n)`: an arc from `x` to `y`
/// whenever `x2...xn` and `y1...y_{n-1}` are order-isomorphic.
pub fn overlap_perm(n: usize) -> Result<Digraph> {
    if n < 1 {
        return Err(Error::InvalidParameters {
            what: "overlap_perm",
            why: "need n >= 1".to_string(),
        });
    }
    let perms = permutations(n);
    let mut by_prefix: HashMap<Vec<u16>, Vec<usize>> = HashMap::new();
    for (i, p) in perms.iter().enumerate() {
        by_prefix
            .entry(order_pattern(p.prefix(n - 1)))
            .or_default()
            .push(i);
    }
    let mut arcs = Vec::new();
    for (i, p) in perms.iter().enumerate() {
        if let Some(heads) = by_prefix.get(&order_pattern(p.suffix(n - 1))) {
            for &j in heads {
                arcs.push((i, j));
            }
        }
    }
    Digraph::new(perms.len(), arcs)?.with_labels(word_labels(&perms))
}

/// The simplified graph of overlapping permutations `SP(n)`.
pub fn sp(n: usize) -> Result<Graph> {
    Ok(simplify(&overlap_perm(n)?))
}

/// Subgraph of `S_m(n, k)` induced by the increasing words
/// (`x_i <= x_{i+1} - m`).
pub fn increasing_subgraph(n: usize, k: usize, m: usize) -> Result<Graph> {
    monotone_subgraph(n, k, m, true)
}

/// Subgraph of `S_m(n, k)` induced by the decreasing words
/// (`x_i >= x_{i+1} + m`).
pub fn decreasing_subgraph(n: usize, k: usize, m: usize) -> Result<Graph> {
    monotone_subgraph(n, k, m, false)
}

fn monotone_subgraph(n: usize, k: usize, m: usize, increasing: bool) -> Result<Graph> {
    if n < 2 || m < 1 {
        return Err(Error::InvalidParameters {
            what: "monotone subgraph",
            why: format!("need n >= 2 and m >= 1, got n={n}, m={m}"),
        });
    }
    let words = if increasing {
        enumerate_words(n, k, &increasing_step(m))
    } else {
        enumerate_words(n, k, &decreasing_step(m))
    };
    Ok(simplify(&overlap_digraph(&words, n)?))
}

/// The cluster graph of a set of equal-length words: one vertex per
/// `(n-1)`-word whose cluster (members beginning or ending with it) has at
/// least two elements, with an edge between two clusters sharing a member.
pub fn cluster_graph(words: &[Word]) -> Result<Graph> {
    let n = match words.first() {
        Some(w) => w.len(),
        None => {
            return Err(Error::InvalidParameters {
                what: "cluster_graph",
                why: "empty word set".to_string(),
            })
        }
    };
    if n < 2 {
        return Err(Error::InvalidParameters {
            what: "cluster_graph",
            why: format!("need word length >= 2, got {n}"),
        });
    }
    if let Some(w) = words.iter().find(|w| w.len() != n) {
        return Err(Error::InvalidParameters {
            what: "cluster_graph",
            why: format!("word {w} has length {} != {n}", w.len()),
        });
    }
    let mut members: Vec<&Word> = words.iter().collect();
    members.sort();
    members.dedup();

    // A word belongs to exactly the clusters of its prefix and suffix, so
    // cluster sizes and shared members are computable from those two keys.
    let mut cluster_size: HashMap<&[u16], usize> = HashMap::new();
    for w in &members {
        let p = w.prefix(n - 1);
        let s = w.suffix(n - 1);
        *cluster_size.entry(p).or_insert(0) += 1;
        if s != p {
            *cluster_size.entry(s).or_insert(0) += 1;
        }
    }
    let mut names: Vec<&[u16]> = cluster_size
        .iter()
        .filter(|&(_, &c)| c >= 2)
        .map(|(&w, _)| w)
        .collect();
    names.sort();
    let index: HashMap<&[u16], usize> = names.iter().enumerate().map(|(i, &w)| (w, i)).collect();

    let mut edges = Vec::new();
    for w in &members {
        let p = w.prefix(n - 1);
        let s = w.suffix(n - 1);
        if p != s {
            if let (Some(&a), Some(&b)) = (index.get(p), index.get(s)) {
                edges.push((a, b));
            }
        }
    }
    let labels = names
        .iter()
        .map(|&w| Word::new(w.to_vec()).to_string())
        .collect();
    Graph::new(names.len(), edges)?.with_labels(labels)
}

/// Multiplies every letter by `m`; an adjacency-preserving map from
/// `S_1(n, k)` into `S_m(n, (k-1)m + 1)`.
pub fn scale_embed(w: &Word, m: usize) -> Word {
    Word::new(
        w.letters()
            .iter()
            .map(|&x| {
                u16::try_from(x as usize * m).expect("scaled letter exceeds the letter range")
            })
            .collect(),
    )
}

/// Cycle `C_n` (vertices `0..n`) plus a dominating hub (vertex `n`).
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameters {
            what: "wheel",
            why: format!("need cycle length >= 3, got {n}"),
        });
    }
    let mut edges = Vec::with_capacity(2 * n);
    for v in 0..n {
        edges.push((v, (v + 1) % n));
        edges.push((v, n));
    }
    Graph::new(n + 1, edges)
}

pub fn complete(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::InvalidParameters {
            what: "complete",
            why: "need at least one vertex".to_string(),
        });
    }
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v));
        }
    }
    Graph::new(k, edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    DeBruijn,
    Simplified,
    SimplifiedM,
    OverlapPerm,
    SimplifiedOverlap,
    Increasing,
    Decreasing,
    Wheel,
    Complete,
    Cluster,
}

impl Family {
    pub const NAMES: [(&'static str, Family); 10] = [
        ("debruijn", Family::DeBruijn),
        ("simplified", Family::Simplified),
        ("simplified_m", Family::SimplifiedM),
        ("overlap_perm", Family::OverlapPerm),
        ("simplified_overlap", Family::SimplifiedOverlap),
        ("increasing", Family::Increasing),
        ("decreasing", Family::Decreasing),
        ("wheel", Family::Wheel),
        ("complete", Family::Complete),
        ("cluster", Family::Cluster),
    ];

    pub fn name(&self) -> &'static str {
        Family::NAMES
            .iter()
            .find(|(_, f)| f == self)
            .map(|(n, _)| *n)
            .expect("listed")
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::NAMES
            .iter()
            .find(|(n, _)| *n == s)
            .map(|(_, f)| *f)
            .ok_or_else(|| Error::InvalidParameters {
                what: "family",
                why: format!("unknown family {s:?}"),
            })
    }
}

/// Parameter block selecting one member of one family. `n` is the word
/// length (or cycle length for wheels), `k` the alphabet size (or order for
/// complete graphs), `m` the adjacent-letter gap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub m: usize,
}

/// Families materialize either as a simple graph or as a digraph.
#[derive(Debug, Clone)]
pub enum Generated {
    Graph(Graph),
    Digraph(Digraph),
}

impl FamilySpec {
    pub fn new(family: Family, n: usize, k: usize, m: usize) -> Self {
        FamilySpec { family, n, k, m }
    }

    /// Conventional name of the selected graph, e.g. `S_1(3,4)`.
    pub fn describe(&self) -> String {
        let FamilySpec { n, k, m, .. } = *self;
        match self.family {
            Family::DeBruijn => format!("B({n},{k})"),
            Family::Simplified => format!("S({n},{k})"),
            Family::SimplifiedM => format!("S_{m}({n},{k})"),
            Family::OverlapPerm => format!("P({n})"),
            Family::SimplifiedOverlap => format!("SP({n})"),
            Family::Increasing => format!("S<_{m}({n},{k})"),
            Family::Decreasing => format!("S>_{m}({n},{k})"),
            Family::Wheel => format!("W_{n}"),
            Family::Complete => format!("K_{k}"),
            Family::Cluster => format!("C(A^{n}_{m}({k}))"),
        }
    }

    /// Number of vertices the build would materialize.
    pub fn vertex_estimate(&self) -> u64 {
        let FamilySpec { n, k, m, .. } = *self;
        match self.family {
            Family::DeBruijn | Family::Simplified => count_words_anm(n, 0, k),
            Family::SimplifiedM | Family::Cluster => count_words_anm(n, m, k),
            Family::OverlapPerm | Family::SimplifiedOverlap => count_permutations(n),
            Family::Increasing | Family::Decreasing => count_increasing_words(n, m, k),
            Family::Wheel => n as u64 + 1,
            Family::Complete => k as u64,
        }
    }

    pub fn build(&self) -> Result<Generated> {
        self.build_with_budget(DEFAULT_VERTEX_BUDGET)
    }

    pub fn build_with_budget(&self, budget: u64) -> Result<Generated> {
        let needed = self.vertex_estimate();
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let FamilySpec { n, k, m, .. } = *self;
        Ok(match self.family {
            Family::DeBruijn => Generated::Digraph(de_bruijn(n, k)?),
            Family::Simplified => Generated::Graph(s_m(n, k, 0)?),
            Family::SimplifiedM => Generated::Graph(s_m(n, k, m)?),
            Family::OverlapPerm => Generated::Digraph(overlap_perm(n)?),
            Family::SimplifiedOverlap => Generated::Graph(sp(n)?),
            Family::Increasing => Generated::Graph(increasing_subgraph(n, k, m)?),
            Family::Decreasing => Generated::Graph(decreasing_subgraph(n, k, m)?),
            Family::Wheel => Generated::Graph(wheel(n)?),
            Family::Complete => Generated::Graph(complete(k)?),
            Family::Cluster => Generated::Graph(cluster_graph(&words_anm(n, m, k))?),
        })
    }
}
