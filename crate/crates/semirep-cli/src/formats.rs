//! Plain-text graph formats and DOT export.
//!
//! Edge-list dialect:
//!
//! ```text
//! graph <vertex_count> <edge_count>
//! l <index> <label>        (optional, one per labeled vertex)
//! e <u> <v>                (0-based endpoints)
//! ```
//!
//! Digraphs use a `digraph` header and `a <tail> <head>` lines (loops
//! allowed). Orientation companion files carry only `a <tail> <head>`
//! lines, one per directed edge of the graph they accompany. Parse errors
//! report 1-based line numbers. Writers emit sorted lines so that
//! parse-regenerate round trips are byte-identical.

use anyhow::{anyhow, bail, Context, Result};
use semirep::families::Digraph;
use semirep::graph::Graph;

pub fn parse_graph(text: &str) -> Result<Graph> {
    let (kind, n, count, labels, edges) = parse_common(text)?;
    if kind != "graph" {
        bail!("line 1: expected a 'graph' header, found '{kind}'");
    }
    let g = Graph::new(n, edges).map_err(|e| anyhow!("{e}"))?;
    if g.edge_count() != count {
        bail!(
            "header claims {count} edges but {} distinct edges were listed",
            g.edge_count()
        );
    }
    attach_labels_graph(g, labels, n)
}

#[cfg_attr(not(test), allow(dead_code))]
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let (kind, n, count, labels, arcs) = parse_common(text)?;
    if kind != "digraph" {
        bail!("line 1: expected a 'digraph' header, found '{kind}'");
    }
    let d = Digraph::new(n, arcs).map_err(|e| anyhow!("{e}"))?;
    if d.arc_count() != count {
        bail!(
            "header claims {count} arcs but {} distinct arcs were listed",
            d.arc_count()
        );
    }
    match labels {
        Some(l) => d.with_labels(l).map_err(|e| anyhow!("{e}")),
        None => Ok(d),
    }
}

type Parsed = (String, usize, usize, Option<Vec<String>>, Vec<(usize, usize)>);

fn parse_common(text: &str) -> Result<Parsed> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| anyhow!("empty input: missing header line"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 3 {
        bail!("line 1: header must be '<graph|digraph> <vertices> <edges>'");
    }
    let kind = head[0].to_string();
    let n: usize = head[1]
        .parse()
        .with_context(|| "line 1: vertex count is not a number")?;
    let count: usize = head[2]
        .parse()
        .with_context(|| "line 1: edge count is not a number")?;

    let mut labels: Option<Vec<String>> = None;
    let mut pairs = Vec::new();
    let link = if kind == "digraph" { "a" } else { "e" };
    for (i, line) in lines {
        let lineno = i + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("l") => {
                let idx: usize = tokens
                    .next()
                    .ok_or_else(|| anyhow!("line {lineno}: 'l' needs an index"))?
                    .parse()
                    .with_context(|| format!("line {lineno}: bad label index"))?;
                if idx >= n {
                    bail!("line {lineno}: label index {idx} out of range");
                }
                let label = tokens.collect::<Vec<_>>().join(" ");
                if label.is_empty() {
                    bail!("line {lineno}: empty label");
                }
                labels
                    .get_or_insert_with(|| vec![String::new(); n])
                    .get_mut(idx)
                    .map(|slot| *slot = label)
                    .ok_or_else(|| anyhow!("line {lineno}: label index out of range"))?;
            }
            Some(t) if t == link => {
                let u: usize = tokens
                    .next()
                    .ok_or_else(|| anyhow!("line {lineno}: '{link}' needs two endpoints"))?
                    .parse()
                    .with_context(|| format!("line {lineno}: bad endpoint"))?;
                let v: usize = tokens
                    .next()
                    .ok_or_else(|| anyhow!("line {lineno}: '{link}' needs two endpoints"))?
                    .parse()
                    .with_context(|| format!("line {lineno}: bad endpoint"))?;
                if tokens.next().is_some() {
                    bail!("line {lineno}: trailing tokens after '{link} {u} {v}'");
                }
                pairs.push((u, v));
            }
            Some(other) => bail!("line {lineno}: unknown line kind '{other}'"),
            None => {}
        }
    }
    if let Some(ls) = &labels {
        if let Some(missing) = ls.iter().position(String::is_empty) {
            bail!("vertex {missing} has no label while others do");
        }
    }
    Ok((kind, n, count, labels, pairs))
}

fn attach_labels_graph(g: Graph, labels: Option<Vec<String>>, _n: usize) -> Result<Graph> {
    match labels {
        Some(l) => g.with_labels(l).map_err(|e| anyhow!("{e}")),
        None => Ok(g),
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("graph {} {}\n", g.vertex_count(), g.edge_count());
    if let Some(labels) = g.labels() {
        for (i, l) in labels.iter().enumerate() {
            out.push_str(&format!("l {i} {l}\n"));
        }
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut out = format!("digraph {} {}\n", d.vertex_count(), d.arc_count());
    if let Some(labels) = d.labels() {
        for (i, l) in labels.iter().enumerate() {
            out.push_str(&format!("l {i} {l}\n"));
        }
    }
    for &(t, h) in d.arcs() {
        out.push_str(&format!("a {t} {h}\n"));
    }
    out
}

/// Orientation companion file: every arc of a total orientation.
pub fn write_orientation(arcs: &[(usize, usize)]) -> String {
    let mut out = String::new();
    for &(t, h) in arcs {
        out.push_str(&format!("a {t} {h}\n"));
    }
    out
}

pub fn parse_orientation(text: &str) -> Result<Vec<(usize, usize)>> {
    let mut arcs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 || tokens[0] != "a" {
            bail!("line {lineno}: expected 'a <tail> <head>'");
        }
        let t: usize = tokens[1]
            .parse()
            .with_context(|| format!("line {lineno}: bad tail"))?;
        let h: usize = tokens[2]
            .parse()
            .with_context(|| format!("line {lineno}: bad head"))?;
        arcs.push((t, h));
    }
    Ok(arcs)
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT rendering; with `orientation` the edges come out directed.
pub fn graph_to_dot(g: &Graph, orientation: Option<&[(usize, usize)]>) -> String {
    let directed = orientation.is_some();
    let mut out = String::from(if directed { "digraph g {\n" } else { "graph g {\n" });
    for v in 0..g.vertex_count() {
        out.push_str(&format!(
            "  {v} [label={}];\n",
            dot_quote(&g.display_vertex(v))
        ));
    }
    match orientation {
        Some(arcs) => {
            for &(t, h) in arcs {
                out.push_str(&format!("  {t} -> {h};\n"));
            }
        }
        None => {
            for &(u, v) in g.edges() {
                out.push_str(&format!("  {u} -- {v};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn digraph_to_dot(d: &Digraph) -> String {
    let mut out = String::from("digraph g {\n");
    for v in 0..d.vertex_count() {
        let label = d.label(v).map(str::to_string).unwrap_or_else(|| v.to_string());
        out.push_str(&format!("  {v} [label={}];\n", dot_quote(&label)));
    }
    for &(t, h) in d.arcs() {
        out.push_str(&format!("  {t} -> {h};\n"));
    }
    out.push_str("}\n");
    out
}
