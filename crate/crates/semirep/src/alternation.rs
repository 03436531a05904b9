//! Alternation semantics of representing words.
//!
//! Two letters alternate in a word when deleting every other letter leaves
//! a strictly alternating sequence. A word `w` over the vertex set of a
//! graph represents the graph when two vertices alternate in `w` exactly
//! when they are adjacent.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// True iff the subsequence of `w` over `{x, y}` strictly alternates.
/// Subsequences of length at most one alternate vacuously.
pub fn alternate(w: &[usize], x: usize, y: usize) -> Result<bool> {
    if x == y {
        return Err(Error::EqualLetters(x));
    }
    let mut last = usize::MAX;
    for &s in w {
        if s == x || s == y {
            if s == last {
                return Ok(false);
            }
            last = s;
        }
    }
    Ok(true)
}

/// The graph on vertices `0..vertex_count` whose edges are exactly the
/// alternating pairs of `w`. Every vertex must occur in `w`, and `w` may
/// not mention anything else.
pub fn graph_of_word(w: &[usize], vertex_count: usize) -> Result<Graph> {
    let mut seen = vec![false; vertex_count];
    for &s in w {
        if s >= vertex_count {
            return Err(Error::ForeignSymbol {
                symbol: s,
                vertex_count,
            });
        }
        seen[s] = true;
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(Error::MissingVertex(v));
    }
    let mut edges = Vec::new();
    for x in 0..vertex_count {
        for y in x + 1..vertex_count {
            if alternate(w, x, y)? {
                edges.push((x, y));
            }
        }
    }
    Graph::new(vertex_count, edges)
}

/// True iff the alternation graph of `w` equals `g` (same vertex set, same
/// edges).
pub fn represents(w: &[usize], g: &Graph) -> Result<bool> {
    let gw = graph_of_word(w, g.vertex_count())?;
    Ok(gw.edges() == g.edges())
}

/// Searches for a `t`-uniform representing word (every vertex occurring
/// exactly `t` times) for `t = 1..=k_max`, smallest `t` first.
///
/// One-sided: a returned word always satisfies `represents(w, g)`; `None`
/// proves nothing about the graph. For uniform words, alternation of a pair
/// is a property of the cyclic word, so the first position can be pinned to
/// vertex 0 without losing completeness within each `t`.
pub fn find_uniform_word(g: &Graph, k_max: usize) -> Result<Option<Vec<usize>>> {
    find_uniform_word_with_budget(g, k_max, 50_000_000)
}

pub fn find_uniform_word_with_budget(
    g: &Graph,
    k_max: usize,
    budget: u64,
) -> Result<Option<Vec<usize>>> {
    if k_max < 1 {
        return Err(Error::InvalidParameters {
            what: "find_uniform_word",
            why: "k_max must be at least 1".to_string(),
        });
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let mut nodes = 0u64;
    for t in 1..=k_max {
        // 1-uniform words represent exactly the complete graph.
        if t == 1 && g.edge_count() != n * (n - 1) / 2 {
            continue;
        }
        let mut state = UniformSearch {
            graph: g,
            t,
            word: Vec::with_capacity(t * n),
            counts: vec![0usize; n],
            last_pos: vec![usize::MAX; n],
            budget,
        };
        state.word.push(0);
        state.counts[0] = 1;
        state.last_pos[0] = 0;
        match state.search(&mut nodes) {
            Ok(true) => return Ok(Some(state.word)),
            Ok(false) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

struct UniformSearch<'g> {
    graph: &'g Graph,
    t: usize,
    word: Vec<usize>,
    counts: Vec<usize>,
    last_pos: Vec<usize>,
    budget: u64,
}

impl UniformSearch<'_> {
    fn search(&mut self, nodes: &mut u64) -> Result<bool> {
        let n = self.graph.vertex_count();
        if self.word.len() == self.t * n {
            return Ok(self.non_edges_broken());
        }
        *nodes += 1;
        if *nodes > self.budget {
            return Err(Error::SearchBudgetExceeded {
                budget: self.budget,
            });
        }
        for v in 0..n {
            if self.counts[v] == self.t || !self.placement_keeps_edges_alternating(v) {
                continue;
            }
            let prev = self.last_pos[v];
            self.word.push(v);
            self.counts[v] += 1;
            self.last_pos[v] = self.word.len() - 1;
            if self.search(nodes)? {
                return Ok(true);
            }
            self.word.pop();
            self.counts[v] -= 1;
            self.last_pos[v] = prev;
        }
        Ok(false)
    }

    /// Placing `v` now must not create two consecutive `v`s in the
    /// restriction to any edge `{v, y}`: every neighbor `y` has to occur
    /// after the previous copy of `v`.
    fn placement_keeps_edges_alternating(&self, v: usize) -> bool {
        if self.counts[v] == 0 {
            return true;
        }
        let since = self.last_pos[v];
        self.graph.neighbors(v).iter().all(|&y| {
            let y = y as usize;
            self.last_pos[y] != usize::MAX && self.last_pos[y] > since
        })
    }

    /// Completed words already alternate on every edge; reject those where
    /// some non-adjacent pair still alternates.
    fn non_edges_broken(&self) -> bool {
        let n = self.graph.vertex_count();
        for x in 0..n {
            for y in x + 1..n {
                if !self.graph.has_edge(x, y)
                    && alternate(&self.word, x, y).expect("distinct")
                {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, wheel};

    #[test]
    fn alternation_basics() {
        // x = 0, y = 1
        assert!(alternate(&[0, 1, 0, 1], 0, 1).unwrap());
        assert!(!alternate(&[0, 0, 1], 0, 1).unwrap());
        // restriction of xyz to (x, z) is the length-2 word xz
        assert!(alternate(&[0, 1, 2], 0, 2).unwrap());
        assert!(alternate(&[], 0, 1).unwrap());
        assert_eq!(alternate(&[0], 2, 2), Err(Error::EqualLetters(2)));
    }

    #[test]
    fn graphs_of_words() {
        let g = graph_of_word(&[0, 1, 0, 1], 2).unwrap();
        assert_eq!(g.edge_count(), 1);

        let g = graph_of_word(&[0, 0, 1, 1], 2).unwrap();
        assert_eq!(g.edge_count(), 0);

        let g = graph_of_word(&[0, 1, 2], 3).unwrap();
        assert_eq!(g.edge_count(), 3);

        assert_eq!(graph_of_word(&[0, 0], 2), Err(Error::MissingVertex(1)));
        assert_eq!(
            graph_of_word(&[0, 3], 2),
            Err(Error::ForeignSymbol {
                symbol: 3,
                vertex_count: 2
            })
        );
    }

    #[test]
    fn graph_of_word_is_reversal_invariant() {
        let w = [0usize, 1, 2, 0, 3, 1, 2, 3, 0, 2];
        let rev: Vec<usize> = w.iter().rev().copied().collect();
        assert_eq!(
            graph_of_word(&w, 4).unwrap(),
            graph_of_word(&rev, 4).unwrap()
        );
    }

    #[test]
    fn represents_small_graphs() {
        let k3 = complete(3).unwrap();
        assert!(represents(&[0, 1, 2], &k3).unwrap());
        assert!(!represents(&[0, 0, 1, 1, 2, 2], &k3).unwrap());
    }

    #[test]
    fn uniform_word_for_complete_graph_is_a_permutation() {
        let k3 = complete(3).unwrap();
        let w = find_uniform_word(&k3, 1).unwrap().expect("representable");
        assert_eq!(w.len(), 3);
        assert!(represents(&w, &k3).unwrap());
    }

    #[test]
    fn uniform_word_for_edgeless_pair() {
        let g = Graph::new(2, []).unwrap();
        let w = find_uniform_word(&g, 2).unwrap().expect("representable");
        assert_eq!(w.len(), 4);
        assert!(represents(&w, &g).unwrap());
    }

    #[test]
    fn four_cycle_is_two_representable() {
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let w = find_uniform_word(&c4, 2).unwrap().expect("representable");
        assert!(w.len() <= 8);
        assert!(represents(&w, &c4).unwrap());
    }

    #[test]
    fn wheel_five_defeats_uniform_search() {
        let w5 = wheel(5).unwrap();
        assert_eq!(find_uniform_word(&w5, 2).unwrap(), None);
    }
}
