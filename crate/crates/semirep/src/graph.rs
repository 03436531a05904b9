//! Simple graphs, edge orientations, and the shortcut machinery.
//!
//! An orientation is *semi-transitive* when it is acyclic and for every
//! directed path `v0 -> v1 -> ... -> vk` either the arc `v0 -> vk` is absent
//! or every pair `vi -> vj` (i < j) is an arc. Equivalently, it is acyclic
//! and shortcut-free, where a shortcut is a directed path of length >= 3
//! together with the arc closing it whose vertex set does not induce a
//! tournament.
//!
//! Since a closed directed walk cannot exist in an acyclic orientation, two
//! vertices that appear in order on a directed path can only carry an edge
//! oriented forward. A shortcut with shortcutting arc `u -> v` therefore
//! exists if and only if some pair `x, y` of non-adjacent vertices lies on a
//! common directed `u -> v` path with `x` before `y`. [`find_shortcut`]
//! exploits this: per arc `(u, v)` it restricts to the vertices lying on
//! `u -> v` paths and looks for a reachable non-adjacent pair inside that
//! set. [`enumerate_shortcutting_paths`] is the exhaustive path enumerator
//! used for small graphs and as an independent cross-check.

use crate::error::{Error, Result};

/// Finite simple undirected graph with dense 0-based vertex indices and
/// optional vertex labels. Labels are metadata only; all algorithms work on
/// indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    /// Normalized `(u, v)` with `u < v`, sorted, deduplicated.
    edges: Vec<(u32, u32)>,
    /// Sorted neighbor lists.
    adj: Vec<Vec<u32>>,
    /// `incident[v][i]` is the edge index of `{v, adj[v][i]}`.
    incident: Vec<Vec<u32>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut normalized: Vec<(u32, u32)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        vertex_count,
                    });
                }
            }
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            normalized.push((lo as u32, hi as u32));
        }
        normalized.sort_unstable();
        normalized.dedup();

        let mut adj = vec![Vec::new(); vertex_count];
        let mut incident = vec![Vec::new(); vertex_count];
        for (idx, &(u, v)) in normalized.iter().enumerate() {
            adj[u as usize].push(v);
            incident[u as usize].push(idx as u32);
            adj[v as usize].push(u);
            incident[v as usize].push(idx as u32);
        }
        for v in 0..vertex_count {
            let mut order: Vec<usize> = (0..adj[v].len()).collect();
            order.sort_by_key(|&i| adj[v][i]);
            adj[v] = order.iter().map(|&i| adj[v][i]).collect();
            incident[v] = order.iter().map(|&i| incident[v][i]).collect();
        }

        Ok(Graph {
            vertex_count,
            edges: normalized,
            adj,
            incident,
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

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        let (u, v) = self.edges[edge];
        (u as usize, v as usize)
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn incident_edges(&self, v: usize) -> &[u32] {
        &self.incident[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u == v || u >= self.vertex_count || v >= self.vertex_count {
            return None;
        }
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        self.edges
            .binary_search(&(lo as u32, hi as u32))
            .ok()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// Label of `v` when present, otherwise the index rendered as a string.
    pub fn display_vertex(&self, v: usize) -> String {
        match self.label(v) {
            Some(l) => l.to_string(),
            None => v.to_string(),
        }
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels
            .as_ref()
            .and_then(|ls| ls.iter().position(|l| l == label))
    }

    /// Subgraph induced by the vertex set `s`; labels are preserved.
    /// Vertices are renumbered by ascending original index.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<Graph> {
        let mut verts: Vec<usize> = s.to_vec();
        for &v in &verts {
            if v >= self.vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count: self.vertex_count,
                });
            }
        }
        verts.sort_unstable();
        verts.dedup();
        let mut index_of = vec![usize::MAX; self.vertex_count];
        for (new, &old) in verts.iter().enumerate() {
            index_of[old] = new;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            let (nu, nv) = (index_of[u as usize], index_of[v as usize]);
            if nu != usize::MAX && nv != usize::MAX {
                edges.push((nu, nv));
            }
        }
        let g = Graph::new(verts.len(), edges)?;
        match &self.labels {
            Some(labels) => g.with_labels(verts.iter().map(|&v| labels[v].clone()).collect()),
            None => Ok(g),
        }
    }
}

/// Direction of one edge relative to its normalized `(lo, hi)` storage.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeDir {
    Unset,
    /// `lo -> hi`
    Forward,
    /// `hi -> lo`
    Backward,
}

/// A direction assignment to the edges of a graph. Total when every edge is
/// directed; partial orientations appear during search.
#[derive(Debug, Clone)]
pub struct Orientation<'g> {
    graph: &'g Graph,
    dirs: Vec<EdgeDir>,
}

impl<'g> Orientation<'g> {
    pub fn empty(graph: &'g Graph) -> Self {
        Orientation {
            graph,
            dirs: vec![EdgeDir::Unset; graph.edge_count()],
        }
    }

    /// Total orientation from an explicit arc list. Every arc must be an
    /// edge of `graph`, no edge may be directed twice, and every edge must
    /// receive a direction.
    pub fn from_arcs(graph: &'g Graph, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut o = Orientation::empty(graph);
        for &(tail, head) in arcs {
            let e = graph
                .edge_index(tail, head)
                .ok_or(Error::ArcNotAnEdge { tail, head })?;
            if o.dirs[e] != EdgeDir::Unset {
                let (u, v) = graph.endpoints(e);
                return Err(Error::DuplicateArc { u, v });
            }
            let (lo, _) = graph.endpoints(e);
            o.dirs[e] = if tail == lo {
                EdgeDir::Forward
            } else {
                EdgeDir::Backward
            };
        }
        if let Some(e) = o.dirs.iter().position(|d| *d == EdgeDir::Unset) {
            let (u, v) = graph.endpoints(e);
            return Err(Error::PartialOrientation { u, v });
        }
        Ok(o)
    }

    /// Total orientation directing every edge from its lower-indexed
    /// endpoint, i.e. along the vertex order. Always acyclic.
    pub fn by_vertex_order(graph: &'g Graph) -> Self {
        Orientation {
            graph,
            dirs: vec![EdgeDir::Forward; graph.edge_count()],
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn dir(&self, edge: usize) -> EdgeDir {
        self.dirs[edge]
    }

    pub fn set_dir(&mut self, edge: usize, dir: EdgeDir) {
        self.dirs[edge] = dir;
    }

    pub fn is_total(&self) -> bool {
        self.dirs.iter().all(|d| *d != EdgeDir::Unset)
    }

    pub fn first_undirected(&self) -> Option<(usize, usize)> {
        self.dirs
            .iter()
            .position(|d| *d == EdgeDir::Unset)
            .map(|e| self.graph.endpoints(e))
    }

    /// The arc carried by `edge`, as `(tail, head)`.
    pub fn arc(&self, edge: usize) -> Option<(usize, usize)> {
        let (lo, hi) = self.graph.endpoints(edge);
        match self.dirs[edge] {
            EdgeDir::Unset => None,
            EdgeDir::Forward => Some((lo, hi)),
            EdgeDir::Backward => Some((hi, lo)),
        }
    }

    /// Directed edge between `u` and `v` if the pair is adjacent and decided.
    pub fn arc_between(&self, u: usize, v: usize) -> Option<(usize, usize)> {
        self.graph.edge_index(u, v).and_then(|e| self.arc(e))
    }

    /// True when the arc `u -> v` is present.
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arc_between(u, v) == Some((u, v))
    }

    /// All arcs in edge-index order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.dirs.len()).filter_map(|e| self.arc(e))
    }

    /// Out-neighbors of `v` in ascending order.
    pub fn out_neighbors(&self, v: usize) -> Vec<usize> {
        self.neighbors_directed(v, true)
    }

    /// In-neighbors of `v` in ascending order.
    pub fn in_neighbors(&self, v: usize) -> Vec<usize> {
        self.neighbors_directed(v, false)
    }

    fn neighbors_directed(&self, v: usize, out: bool) -> Vec<usize> {
        let mut res = Vec::new();
        for (i, &w) in self.graph.adj[v].iter().enumerate() {
            let e = self.graph.incident[v][i] as usize;
            if let Some((tail, _)) = self.arc(e) {
                if (tail == v) == out {
                    res.push(w as usize);
                }
            }
        }
        res
    }

    fn require_total(&self) -> Result<()> {
        match self.first_undirected() {
            Some((u, v)) => Err(Error::PartialOrientation { u, v }),
            None => Ok(()),
        }
    }
}

/// A shortcut certificate: a directed path `v0 -> ... -> vk` (k >= 3) whose
/// closing arc `v0 -> vk` is present while the ordered pair `missing_edge`
/// lies on the path but is not an edge of the underlying graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortcutWitness {
    pub path: Vec<usize>,
    pub missing_edge: (usize, usize),
}

impl ShortcutWitness {
    /// Re-checks every invariant against `o`.
    pub fn validate(&self, o: &Orientation<'_>) -> bool {
        let k = self.path.len();
        if k < 4 {
            return false;
        }
        for w in self.path.windows(2) {
            if !o.has_arc(w[0], w[1]) {
                return false;
            }
        }
        if !o.has_arc(self.path[0], self.path[k - 1]) {
            return false;
        }
        let (x, y) = self.missing_edge;
        let i = self.path.iter().position(|&v| v == x);
        let j = self.path.iter().position(|&v| v == y);
        match (i, j) {
            (Some(i), Some(j)) => i < j && !o.graph().has_edge(x, y),
            _ => false,
        }
    }
}

/// One entry of [`enumerate_shortcutting_paths`]: a directed path of
/// length at least 3 whose closing arc is present. `is_shortcut` records
/// whether the path's vertex set fails to induce a tournament, i.e.
/// whether the path induces a shortcut in this orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortcuttingPath {
    pub path: Vec<usize>,
    pub shortcutting_edge: (usize, usize),
    pub is_shortcut: bool,
}

/// Outcome of [`bipartition`]: either a proper 2-coloring or an odd cycle.
/// The cycle is a closed walk; the edge from its last vertex back to its
/// first is implied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BipartitionResult {
    Bipartite { parts: [Vec<usize>; 2] },
    OddCycle(Vec<usize>),
}

/// True iff the total orientation has no directed cycle.
pub fn is_acyclic(o: &Orientation<'_>) -> Result<bool> {
    o.require_total()?;
    Ok(find_directed_cycle(o).is_none())
}

/// Some directed cycle of `o` (first vertex not repeated), or `None`.
/// Works on partial orientations; undirected edges are ignored.
pub fn find_directed_cycle(o: &Orientation<'_>) -> Option<Vec<usize>> {
    let n = o.graph().vertex_count();
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        state[root] = 1;
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            let outs = o.out_neighbors(v);
            if *i < outs.len() {
                let w = outs[*i];
                *i += 1;
                match state[w] {
                    0 => {
                        state[w] = 1;
                        parent[w] = v;
                        stack.push((w, 0));
                    }
                    1 => {
                        // closing arc v -> w: walk parents from v back to w
                        let mut cycle = vec![v];
                        let mut cur = v;
                        while cur != w {
                            cur = parent[cur];
                            cycle.push(cur);
                        }
                        cycle.reverse();
                        return Some(cycle);
                    }
                    _ => {}
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    None
}

/// Searches a total acyclic orientation for a shortcut.
///
/// Per arc `(u, v)` the search restricts to `I(u, v)`, the vertices lying on
/// directed `u -> v` paths, and looks for an ordered pair `x, y` in `I` with
/// `y` reachable from `x` and `{x, y}` not an edge. A hit yields a witness
/// path `u => x => y => v` assembled from shortest segments. `None` means
/// the orientation is semi-transitive.
pub fn find_shortcut(o: &Orientation<'_>) -> Result<Option<ShortcutWitness>> {
    o.require_total()?;
    if let Some(cycle) = find_directed_cycle(o) {
        return Err(Error::CyclicOrientation(cycle));
    }
    let n = o.graph().vertex_count();
    let mut desc = vec![false; n];
    let mut anc = vec![false; n];

    for e in 0..o.graph().edge_count() {
        let (u, v) = o.arc(e).expect("total");
        mark_reachable(o, u, true, &mut desc);
        mark_reachable(o, v, false, &mut anc);
        let members: Vec<usize> = (0..n).filter(|&w| desc[w] && anc[w]).collect();
        for w in 0..n {
            desc[w] = false;
            anc[w] = false;
        }
        if members.len() < 4 {
            continue;
        }
        if let Some(witness) = scan_interval(o, u, v, &members) {
            return Ok(Some(witness));
        }
    }
    Ok(None)
}

fn mark_reachable(o: &Orientation<'_>, start: usize, forward: bool, seen: &mut [bool]) {
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for w in o.neighbors_directed(v, forward) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
}

/// Looks for a reachable non-adjacent pair inside the interval `members`
/// of the arc `u -> v` and assembles the witness.
fn scan_interval(
    o: &Orientation<'_>,
    u: usize,
    v: usize,
    members: &[usize],
) -> Option<ShortcutWitness> {
    let m = members.len();
    // Local successor lists restricted to the interval.
    let succs: Vec<Vec<usize>> = members
        .iter()
        .map(|&x| {
            o.out_neighbors(x)
                .into_iter()
                .filter_map(|w| members.binary_search(&w).ok())
                .collect()
        })
        .collect();

    // Reachability closure over local indices, via DFS finish order.
    let words = m.div_ceil(64);
    let mut reach = vec![0u64; m * words];
    let mut order = Vec::with_capacity(m);
    let mut state = vec![0u8; m];
    for s in 0..m {
        if state[s] != 0 {
            continue;
        }
        let mut stack = vec![(s, 0usize)];
        state[s] = 1;
        while let Some(&mut (x, ref mut i)) = stack.last_mut() {
            if *i < succs[x].len() {
                let y = succs[x][*i];
                *i += 1;
                if state[y] == 0 {
                    state[y] = 1;
                    stack.push((y, 0));
                }
            } else {
                state[x] = 2;
                order.push(x);
                stack.pop();
            }
        }
    }
    // Finish order guarantees every successor's row is already final.
    let mut row = vec![0u64; words];
    for &x in &order {
        row.fill(0);
        row[x / 64] |= 1 << (x % 64);
        for &y in &succs[x] {
            for w in 0..words {
                row[w] |= reach[y * words + w];
            }
        }
        reach[x * words..(x + 1) * words].copy_from_slice(&row);
    }

    let is_reach = |x: usize, y: usize| reach[x * words + y / 64] >> (y % 64) & 1 == 1;

    for xi in 0..m {
        for yi in 0..m {
            if xi == yi || !is_reach(xi, yi) {
                continue;
            }
            let (x, y) = (members[xi], members[yi]);
            if o.graph().has_edge(x, y) {
                continue;
            }
            let mut path = shortest_path_within(o, members, u, x);
            path.extend(shortest_path_within(o, members, x, y).into_iter().skip(1));
            path.extend(shortest_path_within(o, members, y, v).into_iter().skip(1));
            debug_assert!(path.len() >= 4);
            return Some(ShortcutWitness {
                path,
                missing_edge: (x, y),
            });
        }
    }
    None
}

/// BFS shortest directed path from `a` to `b` staying inside `members`.
fn shortest_path_within(o: &Orientation<'_>, members: &[usize], a: usize, b: usize) -> Vec<usize> {
    if a == b {
        return vec![a];
    }
    let n = o.graph().vertex_count();
    let mut inside = vec![false; n];
    for &w in members {
        inside[w] = true;
    }
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(a);
    parent[a] = a;
    while let Some(x) = queue.pop_front() {
        for y in o.out_neighbors(x) {
            if inside[y] && parent[y] == usize::MAX {
                parent[y] = x;
                if y == b {
                    let mut path = vec![b];
                    let mut cur = b;
                    while cur != a {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return path;
                }
                queue.push_back(y);
            }
        }
    }
    unreachable!("callers guarantee reachability");
}

/// Acyclic and shortcut-free.
pub fn is_semi_transitive(o: &Orientation<'_>) -> Result<bool> {
    if !is_acyclic(o)? {
        return Ok(false);
    }
    Ok(find_shortcut(o)?.is_none())
}

/// Exhaustively enumerates every directed path `v0 -> ... -> vk` with
/// `k >= 3` whose closing arc `v0 -> vk` is present, in lexicographic order
/// of the vertex sequence. Intended for small graphs (orientation targets,
/// cross-checks); the candidate endpoints may first be narrowed through
/// boolean powers of the adjacency matrix, which does not change the result.
pub fn enumerate_shortcutting_paths(o: &Orientation<'_>) -> Result<Vec<ShortcuttingPath>> {
    enumerate_shortcutting_paths_with(o, true)
}

pub fn enumerate_shortcutting_paths_with(
    o: &Orientation<'_>,
    matrix_prefilter: bool,
) -> Result<Vec<ShortcuttingPath>> {
    o.require_total()?;
    if let Some(cycle) = find_directed_cycle(o) {
        return Err(Error::CyclicOrientation(cycle));
    }
    let n = o.graph().vertex_count();
    let candidates: Vec<(usize, usize)> = if matrix_prefilter {
        arc_pairs_with_long_paths(o)
    } else {
        o.arcs().collect()
    };

    let mut result = Vec::new();
    let mut path = Vec::new();
    for (s, t) in candidates {
        path.clear();
        path.push(s);
        dfs_paths(o, t, &mut path, &mut result, n);
    }
    result.sort_by(|a, b| a.path.cmp(&b.path));
    Ok(result)
}

fn dfs_paths(
    o: &Orientation<'_>,
    target: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<ShortcuttingPath>,
    n: usize,
) {
    let last = *path.last().unwrap();
    if last == target {
        if path.len() >= 4 {
            out.push(ShortcuttingPath {
                path: path.clone(),
                shortcutting_edge: (path[0], target),
                is_shortcut: has_missing_pair(o.graph(), path),
            });
        }
        return;
    }
    if path.len() > n {
        return;
    }
    for w in o.out_neighbors(last) {
        path.push(w);
        dfs_paths(o, target, path, out, n);
        path.pop();
    }
}

fn has_missing_pair(g: &Graph, path: &[usize]) -> bool {
    for i in 0..path.len() {
        for j in i + 1..path.len() {
            if !g.has_edge(path[i], path[j]) {
                return true;
            }
        }
    }
    false
}

/// Arcs `(i, j)` such that some directed `i -> j` path of length `p` with
/// `3 <= p <= n - 1` exists, located via boolean powers of the adjacency
/// matrix.
fn arc_pairs_with_long_paths(o: &Orientation<'_>) -> Vec<(usize, usize)> {
    let n = o.graph().vertex_count();
    let words = n.div_ceil(64).max(1);
    let mut base = vec![0u64; n * words];
    for (t, h) in o.arcs() {
        base[t * words + h / 64] |= 1 << (h % 64);
    }
    let mut power = base.clone(); // M^1
    let mut hits = vec![0u64; n * words];
    for p in 2..n {
        // power <- power * base
        let mut next = vec![0u64; n * words];
        for i in 0..n {
            for j in 0..n {
                if power[i * words + j / 64] >> (j % 64) & 1 == 1 {
                    let (dst, src) = (i * words, j * words);
                    for w in 0..words {
                        next[dst + w] |= base[src + w];
                    }
                }
            }
        }
        power = next;
        if p >= 3 {
            for w in 0..n * words {
                hits[w] |= power[w] & base[w];
            }
        }
    }
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if hits[i * words + j / 64] >> (j % 64) & 1 == 1 {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// Two-colors the graph by BFS, or returns an odd cycle witness. Exactly one
/// of the two outcomes occurs. Isolated vertices land in the first part.
pub fn bipartition(g: &Graph) -> BipartitionResult {
    let n = g.vertex_count();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        parent[root] = root;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                let w = w as usize;
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    parent[w] = v;
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return BipartitionResult::OddCycle(odd_cycle_from_conflict(
                        v, w, &parent,
                    ));
                }
            }
        }
    }
    let mut parts = [Vec::new(), Vec::new()];
    for v in 0..n {
        parts[color[v] as usize].push(v);
    }
    BipartitionResult::Bipartite { parts }
}

fn odd_cycle_from_conflict(u: usize, v: usize, parent: &[usize]) -> Vec<usize> {
    let ancestors = |mut x: usize| {
        let mut chain = vec![x];
        while parent[x] != x {
            x = parent[x];
            chain.push(x);
        }
        chain
    };
    let au = ancestors(u);
    let av = ancestors(v);
    // First common vertex on the two root chains.
    let in_au: std::collections::HashSet<usize> = au.iter().copied().collect();
    let lca = *av.iter().find(|x| in_au.contains(x)).expect("common root");
    let mut cycle: Vec<usize> = au.iter().take_while(|&&x| x != lca).copied().collect();
    cycle.push(lca);
    let down: Vec<usize> = av.iter().take_while(|&&x| x != lca).copied().collect();
    cycle.extend(down.into_iter().rev());
    cycle
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orient<'g>(g: &'g Graph, arcs: &[(usize, usize)]) -> Orientation<'g> {
        Orientation::from_arcs(g, arcs).unwrap()
    }

    #[test]
    fn acyclicity_of_triangle_orientations() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let cyclic = orient(&g, &[(0, 1), (1, 2), (2, 0)]);
        assert!(!is_acyclic(&cyclic).unwrap());
        let transitive = orient(&g, &[(0, 1), (0, 2), (1, 2)]);
        assert!(is_acyclic(&transitive).unwrap());
    }

    #[test]
    fn acyclicity_requires_total() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let partial = Orientation::empty(&g);
        assert_eq!(
            is_acyclic(&partial),
            Err(Error::PartialOrientation { u: 0, v: 1 })
        );
    }

    #[test]
    fn shortcut_on_chordless_path_with_closing_arc() {
        // a -> b -> c -> d plus a -> d, nothing else
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let o = orient(&g, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let w = find_shortcut(&o).unwrap().expect("shortcut");
        assert!(w.validate(&o));
        assert_eq!(w.path, vec![0, 1, 2, 3]);
        assert!(w.missing_edge == (0, 2) || w.missing_edge == (1, 3));
        assert!(!is_semi_transitive(&o).unwrap());
    }

    #[test]
    fn transitive_tournament_has_no_shortcut() {
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let o = Orientation::by_vertex_order(&g);
        assert_eq!(find_shortcut(&o).unwrap(), None);
        assert!(is_semi_transitive(&o).unwrap());
    }

    #[test]
    fn find_shortcut_rejects_cycles_with_a_witness() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let o = orient(&g, &[(0, 1), (1, 2), (2, 0)]);
        match find_shortcut(&o) {
            Err(Error::CyclicOrientation(cycle)) => {
                assert_eq!(cycle.len(), 3);
                for w in cycle.windows(2) {
                    assert!(o.has_arc(w[0], w[1]));
                }
                assert!(o.has_arc(*cycle.last().unwrap(), cycle[0]));
            }
            other => panic!("expected cycle error, got {other:?}"),
        }
    }

    #[test]
    fn enumerate_on_plain_path_is_empty() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let o = orient(&g, &[(0, 1), (1, 2), (2, 3)]);
        assert!(enumerate_shortcutting_paths(&o).unwrap().is_empty());
    }

    #[test]
    fn enumerate_flags_non_transitive_closures() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let o = orient(&g, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let paths = enumerate_shortcutting_paths(&o).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].path, vec![0, 1, 2, 3]);
        assert!(paths[0].is_shortcut);

        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let o = Orientation::by_vertex_order(&k4);
        let paths = enumerate_shortcutting_paths(&o).unwrap();
        assert_eq!(paths.len(), 1);
        assert!(!paths[0].is_shortcut);
    }

    #[test]
    fn bipartition_of_even_cycle() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        match bipartition(&g) {
            BipartitionResult::Bipartite { parts } => {
                assert_eq!(parts[0].len(), 2);
                assert_eq!(parts[1].len(), 2);
            }
            other => panic!("expected bipartite, got {other:?}"),
        }
    }

    #[test]
    fn bipartition_of_triangle_yields_odd_cycle() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        match bipartition(&g) {
            BipartitionResult::OddCycle(c) => {
                assert_eq!(c.len(), 3);
                for i in 0..c.len() {
                    assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
                }
            }
            other => panic!("expected odd cycle, got {other:?}"),
        }
    }

    #[test]
    fn induced_subgraph_basics() {
        let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let sub = k3.induced_subgraph(&[0, 1]).unwrap();
        assert_eq!(sub.vertex_count(), 2);
        assert_eq!(sub.edge_count(), 1);

        let empty = k3.induced_subgraph(&[]).unwrap();
        assert_eq!(empty.vertex_count(), 0);
        assert_eq!(empty.edge_count(), 0);

        assert!(k3.induced_subgraph(&[0, 7]).is_err());
    }

    #[test]
    fn orientation_from_arcs_validates() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            Orientation::from_arcs(&g, &[(0, 2)]),
            Err(Error::ArcNotAnEdge { .. })
        ));
        assert!(matches!(
            Orientation::from_arcs(&g, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateArc { .. })
        ));
        assert!(matches!(
            Orientation::from_arcs(&g, &[(0, 1)]),
            Err(Error::PartialOrientation { .. })
        ));
    }
}
