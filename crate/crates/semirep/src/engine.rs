//! Sound and complete decision procedure for semi-transitive orientability.
//!
//! The search assigns directions to edges one at a time, propagating three
//! kinds of forced moves after every assignment:
//!
//! * acyclicity: once a directed path connects the endpoints of an
//!   undecided edge, the edge can only point along the path;
//! * chordless cycles: when all but two edges of a chordless cycle (length
//!   4 by default) point the same way around, no semi-transitive completion
//!   can orient either remaining edge that way, so both are forced against;
//! * shortcut completion: a direction that would complete a directed
//!   3-path with its closing arc over a vertex set missing an edge is
//!   forbidden.
//!
//! One vertex is pinned as a source (every word-representable graph admits
//! a semi-transitive orientation with any prescribed source vertex, so this
//! loses no completeness). Total assignments are verified with the full
//! shortcut scan before a YES verdict; a NO verdict means the restricted
//! space was exhausted. Budgets turn into an explicit INCONCLUSIVE verdict,
//! never into a silent NO.

use crate::error::{Error, Result};
use crate::graph::{find_shortcut, is_semi_transitive, EdgeDir, Graph, Orientation};
use std::time::{Duration, Instant};

#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Source vertex; defaults to a vertex of maximum degree.
    pub source: Option<usize>,
    /// Search-tree node budget.
    pub max_nodes: u64,
    /// Wall-clock budget.
    pub max_time: Option<Duration>,
    /// Longest chordless cycle fed to the cycle rule; 0 disables the rule.
    pub lemma1_max_cycle: usize,
    /// Enables shortcut-completion propagation.
    pub shortcut_rule: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            source: None,
            max_nodes: u64::MAX,
            max_time: None,
            lemma1_max_cycle: 4,
            shortcut_rule: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "YES",
            Verdict::No => "NO",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Debug, Clone)]
pub struct DecisionReport {
    pub verdict: Verdict,
    /// Semi-transitive orientation as `(tail, head)` arcs, on YES.
    pub certificate: Option<Vec<(usize, usize)>>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub source: Option<usize>,
}

/// Outcome of constraint propagation. A conflict is a value, not an error:
/// it signals that the current partial orientation admits no
/// semi-transitive completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Propagation {
    Stable,
    Conflict,
}

/// A chordless cycle record: vertices in cycle order and the edge ids of
/// consecutive pairs (last entry closes back to the first vertex).
#[derive(Debug, Clone)]
struct CycleRecord {
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

/// Partially oriented graph under search, with an undo trail.
pub struct SearchState<'g> {
    graph: &'g Graph,
    dirs: Vec<EdgeDir>,
    trail: Vec<usize>,
    cycles: Vec<CycleRecord>,
    cycles_by_edge: Vec<Vec<u32>>,
    shortcut_rule: bool,
}

impl<'g> SearchState<'g> {
    pub fn new(graph: &'g Graph, config: &SearchConfig) -> Self {
        let cycles = if config.lemma1_max_cycle >= 4 {
            chordless_cycles(graph, config.lemma1_max_cycle)
        } else {
            Vec::new()
        };
        let mut cycles_by_edge = vec![Vec::new(); graph.edge_count()];
        for (i, c) in cycles.iter().enumerate() {
            for &e in &c.edges {
                cycles_by_edge[e].push(i as u32);
            }
        }
        SearchState {
            graph,
            dirs: vec![EdgeDir::Unset; graph.edge_count()],
            trail: Vec::new(),
            cycles,
            cycles_by_edge,
            shortcut_rule: config.shortcut_rule,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn assigned_count(&self) -> usize {
        self.trail.len()
    }

    pub fn is_total(&self) -> bool {
        self.trail.len() == self.graph.edge_count()
    }

    /// Current direction of the edge between `u` and `v`, as `(tail, head)`.
    pub fn direction_between(&self, u: usize, v: usize) -> Option<(usize, usize)> {
        let e = self.graph.edge_index(u, v)?;
        self.arc(e)
    }

    fn arc(&self, e: usize) -> Option<(usize, usize)> {
        let (lo, hi) = self.graph.endpoints(e);
        match self.dirs[e] {
            EdgeDir::Unset => None,
            EdgeDir::Forward => Some((lo, hi)),
            EdgeDir::Backward => Some((hi, lo)),
        }
    }

    pub fn mark(&self) -> usize {
        self.trail.len()
    }

    pub fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().unwrap();
            self.dirs[e] = EdgeDir::Unset;
        }
    }

    /// Directs the edge `{tail, head}` as `tail -> head` and propagates to a
    /// fixed point.
    pub fn assume(&mut self, tail: usize, head: usize) -> Propagation {
        let e = self
            .graph
            .edge_index(tail, head)
            .expect("assume over an existing edge");
        let (lo, _) = self.graph.endpoints(e);
        let dir = if tail == lo {
            EdgeDir::Forward
        } else {
            EdgeDir::Backward
        };
        self.propagate(e, dir)
    }

    /// Directs every edge at `source` outward, with propagation.
    pub fn fix_source(&mut self, source: usize) -> Propagation {
        let neighbors: Vec<usize> = self
            .graph
            .neighbors(source)
            .iter()
            .map(|&w| w as usize)
            .collect();
        for w in neighbors {
            match self.direction_between(source, w) {
                Some((t, _)) if t == source => {}
                Some(_) => return Propagation::Conflict,
                None => {
                    if self.propagate_arc(source, w) == Propagation::Conflict {
                        return Propagation::Conflict;
                    }
                }
            }
        }
        Propagation::Stable
    }

    fn propagate_arc(&mut self, tail: usize, head: usize) -> Propagation {
        let e = self.graph.edge_index(tail, head).expect("edge");
        let (lo, _) = self.graph.endpoints(e);
        let dir = if tail == lo {
            EdgeDir::Forward
        } else {
            EdgeDir::Backward
        };
        self.propagate(e, dir)
    }

    /// Applies one assignment and runs all rules until stable or conflicting.
    fn propagate(&mut self, edge: usize, dir: EdgeDir) -> Propagation {
        let mut worklist: Vec<usize> = Vec::new();
        if self.set(edge, dir, &mut worklist) == Propagation::Conflict {
            return Propagation::Conflict;
        }
        while let Some(e) = worklist.pop() {
            if self.trigger_rules(e, &mut worklist) == Propagation::Conflict {
                return Propagation::Conflict;
            }
        }
        Propagation::Stable
    }

    /// Records a direction. Rejects contradictions with earlier assignments
    /// and directions that close a directed cycle.
    fn set(&mut self, edge: usize, dir: EdgeDir, worklist: &mut Vec<usize>) -> Propagation {
        debug_assert!(dir != EdgeDir::Unset);
        if self.dirs[edge] != EdgeDir::Unset {
            return if self.dirs[edge] == dir {
                Propagation::Stable
            } else {
                Propagation::Conflict
            };
        }
        let (lo, hi) = self.graph.endpoints(edge);
        let (tail, head) = match dir {
            EdgeDir::Forward => (lo, hi),
            EdgeDir::Backward => (hi, lo),
            EdgeDir::Unset => unreachable!(),
        };
        // head already reaches tail: this direction closes a cycle
        if self.reaches(head, tail) {
            return Propagation::Conflict;
        }
        self.dirs[edge] = dir;
        self.trail.push(edge);
        worklist.push(edge);
        Propagation::Stable
    }

    fn reaches(&self, from: usize, to: usize) -> bool {
        if from == to {
            return true;
        }
        let mut seen = vec![false; self.graph.vertex_count()];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(v) = stack.pop() {
            for (i, &w) in self.graph.neighbors(v).iter().enumerate() {
                let w = w as usize;
                let e = self.graph.incident_edges(v)[i] as usize;
                if self.arc(e) == Some((v, w)) && !seen[w] {
                    if w == to {
                        return true;
                    }
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }

    fn trigger_rules(&mut self, edge: usize, worklist: &mut Vec<usize>) -> Propagation {
        if self.force_along_reachability(edge, worklist) == Propagation::Conflict {
            return Propagation::Conflict;
        }
        if self.apply_cycle_rule(edge, worklist) == Propagation::Conflict {
            return Propagation::Conflict;
        }
        if self.shortcut_rule && self.apply_shortcut_rule(edge, worklist) == Propagation::Conflict {
            return Propagation::Conflict;
        }
        Propagation::Stable
    }

    /// The new arc `(u, v)` creates directed connectivity from every
    /// ancestor of `u` to every descendant of `v`; undecided edges between
    /// such pairs are forced along the connectivity.
    fn force_along_reachability(&mut self, edge: usize, worklist: &mut Vec<usize>) -> Propagation {
        let (u, v) = self.arc(edge).expect("set");
        let ancestors = self.closure(u, false);
        let descendants = self.closure(v, true);
        for e in 0..self.graph.edge_count() {
            if self.dirs[e] != EdgeDir::Unset {
                continue;
            }
            let (p, q) = self.graph.endpoints(e);
            let forced = if ancestors[p] && descendants[q] {
                Some(EdgeDir::Forward)
            } else if ancestors[q] && descendants[p] {
                Some(EdgeDir::Backward)
            } else {
                None
            };
            if let Some(dir) = forced {
                if self.set(e, dir, worklist) == Propagation::Conflict {
                    return Propagation::Conflict;
                }
            }
        }
        Propagation::Stable
    }

    fn closure(&self, start: usize, forward: bool) -> Vec<bool> {
        let mut seen = vec![false; self.graph.vertex_count()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(x) = stack.pop() {
            for (i, &w) in self.graph.neighbors(x).iter().enumerate() {
                let w = w as usize;
                let e = self.graph.incident_edges(x)[i] as usize;
                let expected = if forward { Some((x, w)) } else { Some((w, x)) };
                if self.arc(e) == expected && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Chordless-cycle rule: with all but two edges of a recorded cycle
    /// pointing the same way around, the remaining edges are forced against
    /// that rotation; one more same-way edge is a conflict.
    fn apply_cycle_rule(&mut self, edge: usize, worklist: &mut Vec<usize>) -> Propagation {
        let ids: Vec<u32> = self.cycles_by_edge[edge].clone();
        for id in ids {
            let cycle = &self.cycles[id as usize];
            let len = cycle.vertices.len();
            let mut with = 0usize;
            let mut against = 0usize;
            let mut unset: Vec<(usize, usize, usize)> = Vec::new(); // (edge, tail, head) along rotation
            for i in 0..len {
                let a = cycle.vertices[i];
                let b = cycle.vertices[(i + 1) % len];
                let e = cycle.edges[i];
                match self.arc(e) {
                    Some((t, _)) if t == a => with += 1,
                    Some(_) => against += 1,
                    None => unset.push((e, a, b)),
                }
            }
            for (w, a, flip) in [(with, against, false), (against, with, true)] {
                if w > len - 2 {
                    return Propagation::Conflict;
                }
                if w == len - 2 && a + unset.len() == 2 {
                    for &(e, t, h) in &unset {
                        let (lo, _) = self.graph.endpoints(e);
                        // force against this rotation
                        let (tail, _head) = if flip { (t, h) } else { (h, t) };
                        let dir = if tail == lo {
                            EdgeDir::Forward
                        } else {
                            EdgeDir::Backward
                        };
                        if self.set(e, dir, worklist) == Propagation::Conflict {
                            return Propagation::Conflict;
                        }
                    }
                }
            }
        }
        Propagation::Stable
    }

    /// Shortcut-completion rule over directed 3-paths touching the new arc.
    ///
    /// For every 4-tuple `p0, p1, p2, p3` whose path edges and closing edge
    /// all exist in the graph, whose vertex set misses a chord, and whose
    /// slots are compatible with the new arc plus at most one undecided
    /// edge: a fully decided tuple is a completed shortcut (conflict), and a
    /// single undecided slot is forced against completion.
    fn apply_shortcut_rule(&mut self, edge: usize, worklist: &mut Vec<usize>) -> Propagation {
        let (u, v) = self.arc(edge).expect("set");
        let tuples = self.candidate_tuples(u, v);
        for [p0, p1, p2, p3] in tuples {
            if self.graph.has_edge(p0, p2) && self.graph.has_edge(p1, p3) {
                continue; // tournament: transitive closure, not a shortcut
            }
            let slots = [(p0, p1), (p1, p2), (p2, p3), (p0, p3)];
            let mut undecided: Option<(usize, usize)> = None;
            let mut compatible = true;
            for (t, h) in slots {
                match self.direction_between(t, h) {
                    Some((dt, _)) if dt == t => {}
                    Some(_) => {
                        compatible = false;
                        break;
                    }
                    None => {
                        if undecided.is_some() {
                            compatible = false;
                            break;
                        }
                        undecided = Some((t, h));
                    }
                }
            }
            if !compatible {
                continue;
            }
            match undecided {
                None => return Propagation::Conflict,
                Some((t, h)) => {
                    // completing as t -> h would finish the shortcut
                    if self.propagate_arc_into(h, t, worklist) == Propagation::Conflict {
                        return Propagation::Conflict;
                    }
                }
            }
        }
        Propagation::Stable
    }

    fn propagate_arc_into(
        &mut self,
        tail: usize,
        head: usize,
        worklist: &mut Vec<usize>,
    ) -> Propagation {
        let e = self.graph.edge_index(tail, head).expect("edge");
        let (lo, _) = self.graph.endpoints(e);
        let dir = if tail == lo {
            EdgeDir::Forward
        } else {
            EdgeDir::Backward
        };
        self.set(e, dir, worklist)
    }

    /// 4-tuples of distinct vertices forming `p0-p1-p2-p3` plus the closing
    /// edge `{p0, p3}` in the underlying graph, with the new arc `(u, v)` in
    /// one of the four slots.
    fn candidate_tuples(&self, u: usize, v: usize) -> Vec<[usize; 4]> {
        let g = self.graph;
        let mut out = Vec::new();
        let neighbors = |x: usize| g.neighbors(x).iter().map(|&w| w as usize);

        // (u, v) = (p0, p1)
        for p2 in neighbors(v) {
            if p2 == u {
                continue;
            }
            for p3 in neighbors(p2) {
                if p3 != u && p3 != v && g.has_edge(u, p3) {
                    out.push([u, v, p2, p3]);
                }
            }
        }
        // (u, v) = (p1, p2)
        for p0 in neighbors(u) {
            if p0 == v {
                continue;
            }
            for p3 in neighbors(v) {
                if p3 != u && p3 != p0 && g.has_edge(p0, p3) {
                    out.push([p0, u, v, p3]);
                }
            }
        }
        // (u, v) = (p2, p3)
        for p1 in neighbors(u) {
            if p1 == v {
                continue;
            }
            for p0 in neighbors(p1) {
                if p0 != u && p0 != v && g.has_edge(p0, v) {
                    out.push([p0, p1, u, v]);
                }
            }
        }
        // (u, v) = (p0, p3)
        for p1 in neighbors(u) {
            if p1 == v {
                continue;
            }
            for p2 in neighbors(p1) {
                if p2 != u && p2 != v && g.has_edge(p2, v) {
                    out.push([u, p1, p2, v]);
                }
            }
        }
        out
    }

    fn to_orientation(&self) -> Orientation<'g> {
        let mut o = Orientation::empty(self.graph);
        for (e, &d) in self.dirs.iter().enumerate() {
            o.set_dir(e, d);
        }
        o
    }
}

/// All chordless cycles of length 4..=max_len, each recorded once. The
/// representative starts at the cycle's minimum vertex and runs toward its
/// smaller neighbor within the cycle.
fn chordless_cycles(g: &Graph, max_len: usize) -> Vec<CycleRecord> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    for start in 0..n {
        path.push(start);
        extend_chordless(g, start, max_len, &mut path, &mut out);
        path.pop();
    }
    out
}

fn extend_chordless(
    g: &Graph,
    start: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<CycleRecord>,
) {
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        let w = w as usize;
        if w <= start || path.contains(&w) {
            continue;
        }
        // mirror symmetry: fix path[1] < closing neighbor
        if path.len() >= 2 && g.has_edge(w, start) && path.len() + 1 >= 4 && path[1] < w {
            // chordless closure: w adjacent only to `last` and `start` on the path
            let chordless = path[1..path.len() - 1]
                .iter()
                .all(|&x| !g.has_edge(x, w));
            if chordless {
                let mut vertices = path.clone();
                vertices.push(w);
                let edges = (0..vertices.len())
                    .map(|i| {
                        g.edge_index(vertices[i], vertices[(i + 1) % vertices.len()])
                            .expect("cycle edge")
                    })
                    .collect();
                out.push(CycleRecord { vertices, edges });
            }
        }
        if path.len() < max_len - 1 {
            // internal chordlessness: w may touch only the path's last vertex
            let internal_ok = path[..path.len() - 1].iter().all(|&x| !g.has_edge(x, w));
            if internal_ok {
                path.push(w);
                extend_chordless(g, start, max_len, path, out);
                path.pop();
            }
        }
    }
}

/// Decides word-representability: YES with a verified semi-transitive
/// orientation, NO when the search space (with one vertex pinned as a
/// source) is exhausted, INCONCLUSIVE when a budget runs out.
pub fn decide(g: &Graph) -> DecisionReport {
    decide_with(g, &SearchConfig::default()).expect("default config is valid")
}

pub fn decide_with(g: &Graph, config: &SearchConfig) -> Result<DecisionReport> {
    let started = Instant::now();
    if let Some(s) = config.source {
        if s >= g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: s,
                vertex_count: g.vertex_count(),
            });
        }
    }
    if g.edge_count() == 0 {
        return Ok(DecisionReport {
            verdict: Verdict::Yes,
            certificate: Some(Vec::new()),
            nodes_explored: 0,
            elapsed: started.elapsed(),
            source: None,
        });
    }
    let source = config
        .source
        .unwrap_or_else(|| (0..g.vertex_count()).max_by_key(|&v| g.degree(v)).unwrap());

    let mut state = SearchState::new(g, config);
    let mut search = Search {
        nodes: 0,
        started,
        config,
    };
    let outcome = if state.fix_source(source) == Propagation::Conflict {
        Outcome::Unsat
    } else {
        search.run(&mut state)
    };
    let (verdict, certificate) = match outcome {
        Outcome::Sat => {
            let o = state.to_orientation();
            debug_assert!(is_semi_transitive(&o).unwrap());
            (Verdict::Yes, Some(o.arcs().collect()))
        }
        Outcome::Unsat => (Verdict::No, None),
        Outcome::Budget => (Verdict::Inconclusive, None),
    };
    Ok(DecisionReport {
        verdict,
        certificate,
        nodes_explored: search.nodes,
        elapsed: started.elapsed(),
        source: Some(source),
    })
}

enum Outcome {
    Sat,
    Unsat,
    Budget,
}

struct Search<'c> {
    nodes: u64,
    started: Instant,
    config: &'c SearchConfig,
}

impl Search<'_> {
    fn run(&mut self, state: &mut SearchState<'_>) -> Outcome {
        if state.is_total() {
            let o = state.to_orientation();
            // propagation guarantees acyclicity; longer shortcuts are
            // caught only here
            return match find_shortcut(&o) {
                Ok(None) => Outcome::Sat,
                Ok(Some(_)) => Outcome::Unsat,
                Err(_) => unreachable!("propagation keeps the orientation acyclic"),
            };
        }
        let edge = self.pick_branch_edge(state);
        let (lo, hi) = state.graph().endpoints(edge);
        for (tail, head) in [(lo, hi), (hi, lo)] {
            self.nodes += 1;
            if self.nodes > self.config.max_nodes {
                return Outcome::Budget;
            }
            if self.nodes.is_multiple_of(4096) {
                if let Some(limit) = self.config.max_time {
                    if self.started.elapsed() > limit {
                        return Outcome::Budget;
                    }
                }
            }
            let mark = state.mark();
            if state.assume(tail, head) == Propagation::Stable {
                match self.run(state) {
                    Outcome::Unsat => {}
                    other => return other,
                }
            }
            state.undo_to(mark);
        }
        Outcome::Unsat
    }

    /// Most-constrained-first: the undecided edge incident to the most
    /// decided edges; ties broken by the lowest edge index.
    fn pick_branch_edge(&self, state: &SearchState<'_>) -> usize {
        let g = state.graph();
        let mut best = usize::MAX;
        let mut best_count = -1i64;
        for e in 0..g.edge_count() {
            if state.dirs[e] != EdgeDir::Unset {
                continue;
            }
            let (u, v) = g.endpoints(e);
            let count = g
                .incident_edges(u)
                .iter()
                .chain(g.incident_edges(v).iter())
                .filter(|&&i| state.dirs[i as usize] != EdgeDir::Unset)
                .count() as i64;
            if count > best_count {
                best_count = count;
                best = e;
            }
        }
        best
    }
}

/// Reference oracle: enumerates all `2^|E|` orientations and checks each
/// for semi-transitivity. Limited to 24 edges.
pub fn naive_decide(g: &Graph) -> Result<DecisionReport> {
    const LIMIT: usize = 24;
    let m = g.edge_count();
    if m > LIMIT {
        return Err(Error::TooManyEdges {
            edges: m,
            limit: LIMIT,
        });
    }
    let started = Instant::now();
    let n = g.vertex_count();
    let mut indeg = vec![0usize; n];
    let mut queue = Vec::with_capacity(n);
    let mut nodes = 0u64;

    'masks: for mask in 0u64..(1u64 << m) {
        nodes += 1;
        // Kahn's algorithm over the mask-encoded orientation
        indeg.iter_mut().for_each(|d| *d = 0);
        for e in 0..m {
            let (lo, hi) = g.endpoints(e);
            let head = if mask >> e & 1 == 0 { hi } else { lo };
            indeg[head] += 1;
        }
        queue.clear();
        queue.extend((0..n).filter(|&v| indeg[v] == 0));
        let mut processed = 0;
        while let Some(&v) = queue.get(processed) {
            processed += 1;
            for &ei in g.incident_edges(v) {
                let e = ei as usize;
                let (lo, hi) = g.endpoints(e);
                let (tail, head) = if mask >> e & 1 == 0 { (lo, hi) } else { (hi, lo) };
                if tail == v {
                    indeg[head] -= 1;
                    if indeg[head] == 0 {
                        queue.push(head);
                    }
                }
            }
        }
        if processed < n {
            continue 'masks; // cyclic
        }
        let mut o = Orientation::empty(g);
        for e in 0..m {
            o.set_dir(
                e,
                if mask >> e & 1 == 0 {
                    EdgeDir::Forward
                } else {
                    EdgeDir::Backward
                },
            );
        }
        if find_shortcut(&o).expect("acyclic").is_none() {
            return Ok(DecisionReport {
                verdict: Verdict::Yes,
                certificate: Some(o.arcs().collect()),
                nodes_explored: nodes,
                elapsed: started.elapsed(),
                source: None,
            });
        }
    }
    Ok(DecisionReport {
        verdict: Verdict::No,
        certificate: None,
        nodes_explored: nodes,
        elapsed: started.elapsed(),
        source: None,
    })
}

/// Validates a claimed semi-transitive orientation: the arcs must cover the
/// graph exactly, and the result is the full acyclicity-and-shortcut check.
pub fn verify_certificate(g: &Graph, arcs: &[(usize, usize)]) -> Result<bool> {
    let o = Orientation::from_arcs(g, arcs)?;
    match is_semi_transitive(&o) {
        Ok(v) => Ok(v),
        Err(Error::CyclicOrientation(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, s_m, wheel};

    #[test]
    fn cycle_rule_forces_chordless_four_cycle() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let mut state = SearchState::new(&g, &SearchConfig::default());
        assert_eq!(state.assume(0, 1), Propagation::Stable);
        assert_eq!(state.assume(1, 2), Propagation::Stable);
        // two edges along the rotation 0->1->2->3->0 force the other two
        // against it
        assert_eq!(state.direction_between(2, 3), Some((3, 2)));
        assert_eq!(state.direction_between(0, 3), Some((0, 3)));
    }

    #[test]
    fn cycle_rule_extends_to_longer_chordless_cycles() {
        let c5 = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let config = SearchConfig {
            lemma1_max_cycle: 5,
            ..SearchConfig::default()
        };
        let mut state = SearchState::new(&c5, &config);
        assert_eq!(state.assume(0, 1), Propagation::Stable);
        assert_eq!(state.assume(1, 2), Propagation::Stable);
        assert_eq!(state.assume(2, 3), Propagation::Stable);
        // three of five edges along the rotation force the remaining two
        // against it
        assert_eq!(state.direction_between(3, 4), Some((4, 3)));
        assert_eq!(state.direction_between(0, 4), Some((0, 4)));

        // the default configuration records no 5-cycles, so nothing fires
        let mut state = SearchState::new(&c5, &SearchConfig::default());
        assert_eq!(state.assume(0, 1), Propagation::Stable);
        assert_eq!(state.assume(1, 2), Propagation::Stable);
        assert_eq!(state.assume(2, 3), Propagation::Stable);
        assert_eq!(state.direction_between(3, 4), None);
    }

    #[test]
    fn acyclicity_rule_breaks_directed_triangle() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let mut state = SearchState::new(&g, &SearchConfig::default());
        assert_eq!(state.assume(0, 1), Propagation::Stable);
        assert_eq!(state.assume(1, 2), Propagation::Stable);
        assert_eq!(state.direction_between(0, 2), Some((0, 2)));
    }

    #[test]
    fn disagreeing_rules_conflict() {
        // path 0-1-2-3 with closing edge {0,3}: directing the path forces
        // 0->3 by reachability and 3->0 by shortcut completion
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let mut state = SearchState::new(&g, &SearchConfig { lemma1_max_cycle: 0, ..SearchConfig::default() });
        assert_eq!(state.assume(0, 1), Propagation::Stable);
        assert_eq!(state.assume(1, 2), Propagation::Stable);
        assert_eq!(state.assume(2, 3), Propagation::Conflict);
    }

    #[test]
    fn undo_restores_state() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let mut state = SearchState::new(&g, &SearchConfig::default());
        let mark = state.mark();
        assert_eq!(state.assume(0, 1), Propagation::Stable);
        assert_eq!(state.assume(1, 2), Propagation::Stable);
        state.undo_to(mark);
        assert_eq!(state.assigned_count(), 0);
        assert_eq!(state.direction_between(0, 1), None);
    }

    #[test]
    fn complete_graphs_get_transitive_certificates() {
        let k4 = complete(4).unwrap();
        let report = decide(&k4);
        assert_eq!(report.verdict, Verdict::Yes);
        let cert = report.certificate.unwrap();
        assert!(verify_certificate(&k4, &cert).unwrap());
    }

    #[test]
    fn wheel_five_is_not_orientable() {
        let w5 = wheel(5).unwrap();
        let report = decide(&w5);
        assert_eq!(report.verdict, Verdict::No);
        assert!(report.certificate.is_none());
    }

    #[test]
    fn naive_oracle_on_small_instances() {
        let w5 = wheel(5).unwrap();
        assert_eq!(naive_decide(&w5).unwrap().verdict, Verdict::No);

        let c5 = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let r = naive_decide(&c5).unwrap();
        assert_eq!(r.verdict, Verdict::Yes);
        assert!(verify_certificate(&c5, &r.certificate.unwrap()).unwrap());

        let k4 = complete(4).unwrap();
        assert_eq!(naive_decide(&k4).unwrap().verdict, Verdict::Yes);

        let big = complete(8).unwrap(); // 28 edges
        assert!(matches!(
            naive_decide(&big),
            Err(Error::TooManyEdges { .. })
        ));
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let g = s_m(2, 4, 1).unwrap();
        let config = SearchConfig {
            max_nodes: 3,
            ..SearchConfig::default()
        };
        let report = decide_with(&g, &config).unwrap();
        assert_eq!(report.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn verdict_is_source_independent() {
        let w5 = wheel(5).unwrap();
        let c5 = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        for g in [&w5, &c5] {
            let expected = decide(g).verdict;
            for s in 0..g.vertex_count() {
                let config = SearchConfig {
                    source: Some(s),
                    ..SearchConfig::default()
                };
                assert_eq!(decide_with(g, &config).unwrap().verdict, expected);
            }
        }
    }

    #[test]
    fn empty_and_edgeless_graphs_are_representable() {
        let empty = Graph::new(0, []).unwrap();
        assert_eq!(decide(&empty).verdict, Verdict::Yes);
        let edgeless = Graph::new(3, []).unwrap();
        assert_eq!(decide(&edgeless).verdict, Verdict::Yes);
    }

    /// The pinned source only restricts its own component; other components
    /// are still searched exhaustively.
    #[test]
    fn disconnected_graphs_keep_negative_components() {
        let w5 = wheel(5).unwrap();
        let mut edges: Vec<(usize, usize)> = w5
            .edges()
            .iter()
            .map(|&(u, v)| (u as usize, v as usize))
            .collect();
        edges.push((6, 7));
        let g = Graph::new(8, edges).unwrap();
        // force the source into the trivial component
        let cfg = SearchConfig {
            source: Some(6),
            ..SearchConfig::default()
        };
        assert_eq!(decide_with(&g, &cfg).unwrap().verdict, Verdict::No);
        assert_eq!(decide(&g).verdict, Verdict::No);
    }

    #[test]
    fn decision_agrees_with_uniform_word_search() {
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(decide(&c4).verdict, Verdict::Yes);
        assert!(crate::alternation::find_uniform_word(&c4, 2)
            .unwrap()
            .is_some());
    }
}
