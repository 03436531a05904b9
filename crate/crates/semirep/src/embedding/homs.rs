//! The lifting homomorphisms: maps from the generated families onto the
//! oriented templates, verified edge by edge, plus the lexicographic
//! orientation for two-letter words.
//!
//! Lifting pulls the template's arcs back along a verified homomorphism:
//! `u -> v` in the source exactly when the images carry an arc. Because the
//! templates are acyclic and fibers are independent sets, every lift is
//! acyclic, and any shortcut in a lift projects onto a same-length
//! shortcutting path of the template — which is what makes the
//! template-guided scan in the pipeline a complete shortcut check.

use crate::embedding::forms::{
    classify_form, descent_word, scheme_even_refined, scheme_odd, ColorScheme,
};
use crate::embedding::templates::{template, OrientedTemplate, TemplateName};
use crate::error::{Error, Result};
use crate::families::{
    increasing_subgraph, permutations, s_m, sp, words_anm, Word,
};
use crate::graph::{BipartitionResult, Graph, Orientation};
use std::collections::HashMap;

/// An adjacency-preserving vertex map from a generated graph into an
/// oriented template. Constructors verify edge preservation before
/// returning; fibers of a loopless target are automatically independent.
#[derive(Debug, Clone)]
pub struct Homomorphism {
    pub source: Graph,
    pub template: OrientedTemplate,
    pub map: Vec<u32>,
}

impl Homomorphism {
    fn checked(source: Graph, template: OrientedTemplate, map: Vec<u32>) -> Result<Self> {
        let hom = Homomorphism {
            source,
            template,
            map,
        };
        hom.verify()?;
        Ok(hom)
    }

    /// Every source edge must land on a template edge (in particular on two
    /// distinct template vertices).
    pub fn verify(&self) -> Result<()> {
        for &(u, v) in self.source.edges() {
            let (u, v) = (u as usize, v as usize);
            let (fu, fv) = (self.map[u] as usize, self.map[v] as usize);
            if fu == fv || !self.template.graph().has_edge(fu, fv) {
                return Err(Error::HomomorphismViolation {
                    u: self.source.display_vertex(u),
                    v: self.source.display_vertex(v),
                    fu: self.template.graph().display_vertex(fu),
                    fv: self.template.graph().display_vertex(fv),
                });
            }
        }
        Ok(())
    }

    /// Preimages of each template vertex.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut fibers = vec![Vec::new(); self.template.graph().vertex_count()];
        for (v, &t) in self.map.iter().enumerate() {
            fibers[t as usize].push(v);
        }
        fibers
    }

    /// Orientation of the source induced by the template arcs.
    pub fn lift(&self) -> Result<Orientation<'_>> {
        let mut arcs = Vec::with_capacity(self.source.edge_count());
        for &(u, v) in self.source.edges() {
            let (u, v) = (u as usize, v as usize);
            let (fu, fv) = (self.map[u] as usize, self.map[v] as usize);
            if self.template.arcs().contains(&(fu, fv)) {
                arcs.push((u, v));
            } else if self.template.arcs().contains(&(fv, fu)) {
                arcs.push((v, u));
            } else {
                return Err(Error::HomomorphismViolation {
                    u: self.source.display_vertex(u),
                    v: self.source.display_vertex(v),
                    fu: self.template.graph().display_vertex(fu),
                    fv: self.template.graph().display_vertex(fv),
                });
            }
        }
        Orientation::from_arcs(&self.source, &arcs)
    }
}

/// Embedding of the simplified overlapping-permutation graph `SP(n)`
/// (n >= 3) into the colored binary-word template via the descent word.
pub fn sp_embedding(n: usize) -> Result<Homomorphism> {
    if n < 3 {
        return Err(Error::InvalidParameters {
            what: "sp_embedding",
            why: format!("need n >= 3, got {n}"),
        });
    }
    let source = sp(n)?;
    let tpl = template(TemplateName::ColoredWords(n - 1))?;
    let map = permutations(n)
        .iter()
        .map(|p| {
            let tau = descent_word(p)?;
            // binary words of one length are lexicographically ordered by
            // numeric value
            let idx = tau
                .letters()
                .iter()
                .fold(0usize, |acc, &b| acc * 2 + b as usize);
            Ok(idx as u32)
        })
        .collect::<Result<Vec<u32>>>()?;
    Homomorphism::checked(source, tpl, map)
}

/// Words of the increasing subgraph split into two independent parts; the
/// part containing the lexicographically smallest increasing word comes
/// first.
fn increasing_parts(n: usize, k: usize, m: usize) -> Result<HashMap<String, usize>> {
    let inc = increasing_subgraph(n, k, m)?;
    match crate::graph::bipartition(&inc) {
        BipartitionResult::Bipartite { parts } => {
            let mut lookup = HashMap::new();
            for (side, part) in parts.iter().enumerate() {
                for &v in part {
                    lookup.insert(inc.display_vertex(v), side);
                }
            }
            Ok(lookup)
        }
        BipartitionResult::OddCycle(c) => Err(Error::NotBipartite {
            graph: format!("S<_{m}({n},{k})"),
            cycle_len: c.len(),
        }),
    }
}

/// Embedding of `S_m(n, k)` for odd `n >= 5`, `k <= 2mn`, into the
/// five-vertex template: increasing and decreasing words split over
/// `R'`/`R2`/`R2bar` by the bipartition of the monotone subgraphs, all other
/// vertices placed by the refined form of their descent word.
pub fn odd_embedding(n: usize, m: usize, k: usize) -> Result<Homomorphism> {
    if n < 5 || n.is_multiple_of(2) || m < 1 || k < 1 || k > 2 * m * n {
        return Err(Error::NotCovered(format!(
            "odd-length embedding needs odd n >= 5, m >= 1, k <= 2mn; got n={n}, m={m}, k={k}"
        )));
    }
    let tpl = template(TemplateName::HOdd)?;
    let scheme = scheme_even_refined();
    monotone_split_embedding(
        n,
        k,
        m,
        tpl,
        scheme,
        &["R'", "R2"],
        &["R'", "R2bar"],
        &|form| match form {
            "e0a1" | "e1a0" => Some("R'"),
            "o1e0a1" | "o1o0b1" => Some("B"),
            "o0e1a0" | "o0o1b0" => Some("G"),
            _ => None,
        },
        &increasing_parts(n, k, m)?,
    )
}

/// Embedding of `S_m(3, k)`, `k <= 4m`, into the five-vertex template with
/// the explicit split of the increasing words by their first and last
/// letters; peaks go to `B`, valleys to `G`.
pub fn n3_embedding(m: usize, k: usize) -> Result<Homomorphism> {
    if m < 1 || k < 1 || k > 4 * m {
        return Err(Error::NotCovered(format!(
            "three-letter embedding needs m >= 1 and k <= 4m; got m={m}, k={k}"
        )));
    }
    let n = 3;
    let tpl = template(TemplateName::HOdd)?;
    let words = words_anm(n, m, k);
    let source = s_m(n, k, m)?;
    let parts = explicit_parts(&words, m, 3 * m);
    let map = words
        .iter()
        .map(|w| {
            let x = w.letters();
            let label = if w.is_increasing(m) {
                match parts[&w.to_string()] {
                    0 => "R'",
                    _ => "R2",
                }
            } else if w.is_decreasing(m) {
                match parts[&w.reversed().to_string()] {
                    0 => "R'",
                    _ => "R2bar",
                }
            } else if x[1] as usize >= x[0] as usize + m && x[1] as usize >= x[2] as usize + m {
                "B"
            } else {
                "G"
            };
            tpl.index_of(label) as u32
        })
        .collect();
    Homomorphism::checked(source, tpl, map)
}

/// Embedding of `S_m(n, k)` for even `n >= 6`, `k <= 2mn`, into the
/// ten-vertex template, placing vertices by the form of their descent word
/// and splitting the monotone words by bipartition.
pub fn even_embedding(n: usize, m: usize, k: usize) -> Result<Homomorphism> {
    if n < 6 || n % 2 == 1 || m < 1 || k < 1 || k > 2 * m * n {
        return Err(Error::NotCovered(format!(
            "even-length embedding needs even n >= 6, m >= 1, k <= 2mn; got n={n}, m={m}, k={k}"
        )));
    }
    let tpl = template(TemplateName::HEven)?;
    monotone_split_embedding(
        n,
        k,
        m,
        tpl,
        scheme_odd(),
        &["B1", "B2"],
        &["G1", "G2"],
        &ten_vertex_form_map,
        &increasing_parts(n, k, m)?,
    )
}

/// Embedding of `S_m(4, k)`, `k <= 5m`, into the re-oriented ten-vertex
/// template, with the explicit first/last-letter split of the increasing
/// words.
pub fn n4_embedding(m: usize, k: usize) -> Result<Homomorphism> {
    if m < 1 || k < 1 || k > 5 * m {
        return Err(Error::NotCovered(format!(
            "four-letter embedding needs m >= 1 and k <= 5m; got m={m}, k={k}"
        )));
    }
    let n = 4;
    let tpl = template(TemplateName::HFour)?;
    let words = words_anm(n, m, k);
    let parts = explicit_parts(&words, m, 4 * m);
    monotone_split_embedding(
        n,
        k,
        m,
        tpl,
        scheme_odd(),
        &["B1", "B2"],
        &["G1", "G2"],
        &ten_vertex_form_map,
        &parts,
    )
}

fn ten_vertex_form_map(form: &str) -> Option<&'static str> {
    match form {
        "e0a1" => Some("R1"),
        "e1a0" => Some("R2"),
        "o1o0a1" => Some("B3"),
        "o1e0b1" => Some("B4"),
        "o0o1a0" => Some("G3"),
        "o0e1b0" => Some("G4"),
        _ => None,
    }
}

/// Shared frame for the descent-word embeddings: increasing words take
/// `inc_labels[part]`, decreasing words take `dec_labels[part of reversal]`,
/// everything else is placed by its descent-word form.
#[allow(clippy::too_many_arguments)]
fn monotone_split_embedding(
    n: usize,
    k: usize,
    m: usize,
    tpl: OrientedTemplate,
    scheme: ColorScheme,
    inc_labels: &[&str; 2],
    dec_labels: &[&str; 2],
    form_map: &dyn Fn(&str) -> Option<&'static str>,
    parts: &HashMap<String, usize>,
) -> Result<Homomorphism> {
    let words = words_anm(n, m, k);
    let source = s_m(n, k, m)?;
    let map = words
        .iter()
        .map(|w| {
            let label = if w.is_increasing(m) {
                inc_labels[parts[&w.to_string()]]
            } else if w.is_decreasing(m) {
                dec_labels[parts[&w.reversed().to_string()]]
            } else {
                let tau = descent_word(w)?;
                let (form, _) = classify_form(tau.letters(), &scheme)?;
                form_map(&form.to_string()).ok_or_else(|| Error::InvalidParameters {
                    what: "embedding",
                    why: format!("unhandled descent form {form} for word {w}"),
                })?
            };
            Ok(tpl.index_of(label) as u32)
        })
        .collect::<Result<Vec<u32>>>()?;
    Homomorphism::checked(source, tpl, map)
}

/// Two-part split of the increasing words by their first and last letters:
/// part 1 collects the words starting below `m` whose last letter falls in
/// the band right below `top`; everything else (including the isolated
/// words reaching past `top`) is part 0.
fn explicit_parts(words: &[Word], m: usize, top: usize) -> HashMap<String, usize> {
    let mut parts = HashMap::new();
    for w in words {
        if !w.is_increasing(m) {
            continue;
        }
        let first = w.letters()[0] as usize;
        let last = *w.letters().last().unwrap() as usize;
        let side = if first < m && (top - m..top).contains(&last) {
            1
        } else {
            0
        };
        parts.insert(w.to_string(), side);
    }
    parts
}

/// Orients every edge of a family graph from the lexicographically smaller
/// word to the larger (family vertices are lex-ordered, so this is the
/// vertex order) and verifies the defining property: no directed path of
/// length 3 exists, hence no shortcut can.
pub fn lex_orientation(g: &Graph) -> Result<Orientation<'_>> {
    let o = Orientation::by_vertex_order(g);
    // longest-path DP over the vertex order (all arcs point up)
    let n = g.vertex_count();
    let mut len = vec![0usize; n];
    let mut pred = vec![usize::MAX; n];
    for v in 0..n {
        for &u in g.neighbors(v) {
            let u = u as usize;
            if u < v && len[u] + 1 > len[v] {
                len[v] = len[u] + 1;
                pred[v] = u;
            }
        }
        if len[v] >= 3 {
            let mut path = vec![v];
            let mut cur = v;
            while pred[cur] != usize::MAX {
                cur = pred[cur];
                path.push(cur);
            }
            path.reverse();
            return Err(Error::DirectedPathOfLengthThree(path));
        }
    }
    Ok(o)
}
