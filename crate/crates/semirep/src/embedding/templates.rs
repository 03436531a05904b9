//! Orientation targets. Each template is a small, fixed, acyclic oriented
//! graph whose complete list of shortcutting paths is known and frozen as a
//! checksum; building a template re-enumerates its shortcutting paths and
//! aborts on any mismatch, so a transcription error in the arc tables
//! cannot go unnoticed.

use crate::embedding::forms::{color_s0, ColorClass};
use crate::error::{Error, Result};
use crate::graph::{
    enumerate_shortcutting_paths, find_directed_cycle, Graph, Orientation, ShortcuttingPath,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TemplateName {
    /// 5-vertex target for the odd word-length constructions.
    HOdd,
    /// 10-vertex target for even word lengths >= 6. Its own orientation
    /// contains shortcuts; only lifting makes it usable.
    HEven,
    /// The 10-vertex target re-oriented for word length 4.
    HFour,
    /// `S_0(len, 2)` oriented by its 3-coloring, Red -> Blue -> Green.
    ColoredWords(usize),
    /// Transitively oriented triangle.
    Triangle,
}

impl std::fmt::Display for TemplateName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TemplateName::HOdd => f.write_str("H-odd"),
            TemplateName::HEven => f.write_str("H-even"),
            TemplateName::HFour => f.write_str("H-four"),
            TemplateName::ColoredWords(n) => write!(f, "colored-S_0({n},2)"),
            TemplateName::Triangle => f.write_str("triangle"),
        }
    }
}

/// A named oriented graph used as the target of a lifting homomorphism.
#[derive(Debug, Clone)]
pub struct OrientedTemplate {
    pub name: TemplateName,
    graph: Graph,
    arcs: Vec<(usize, usize)>,
}

impl OrientedTemplate {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn oriented(&self) -> Orientation<'_> {
        Orientation::from_arcs(&self.graph, &self.arcs).expect("template arcs cover the edges")
    }

    pub fn index_of(&self, label: &str) -> usize {
        self.graph
            .vertex_by_label(label)
            .unwrap_or_else(|| panic!("template vertex {label}"))
    }

    /// Shortcutting paths of the template orientation.
    pub fn shortcutting_paths(&self) -> Vec<ShortcuttingPath> {
        enumerate_shortcutting_paths(&self.oriented()).expect("templates are acyclic")
    }

    /// Checks the template against an expected shortcutting-path list
    /// (label sequences plus shortcut flags, lexicographically ordered).
    pub fn validate_against(&self, expected: &[(&[&str], bool)]) -> Result<()> {
        if let Some(cycle) = find_directed_cycle(&self.oriented()) {
            return Err(Error::CyclicOrientation(cycle));
        }
        let found = self.shortcutting_paths();
        let found_view: Vec<(Vec<String>, bool)> = found
            .iter()
            .map(|p| {
                (
                    p.path.iter().map(|&v| self.graph.display_vertex(v)).collect(),
                    p.is_shortcut,
                )
            })
            .collect();
        let expected_view: Vec<(Vec<String>, bool)> = expected
            .iter()
            .map(|(labels, flag)| (labels.iter().map(|s| s.to_string()).collect(), *flag))
            .collect();
        if found_view != expected_view {
            return Err(Error::TemplateChecksum {
                name: self.name.to_string(),
                expected: format!("{expected_view:?}"),
                found: format!("{found_view:?}"),
            });
        }
        Ok(())
    }
}

/// Builds and checksum-validates a template.
pub fn template(name: TemplateName) -> Result<OrientedTemplate> {
    let t = build(name)?;
    match name {
        TemplateName::HOdd => t.validate_against(&[
            (&["R'", "B", "R2bar", "G"], false),
            (&["R'", "B", "R2", "G"], false),
        ])?,
        TemplateName::HEven => t.validate_against(&[
            (&["G2", "R1", "G1", "B4"], false),
            (&["G2", "R1", "G3", "B4"], true),
            (&["G4", "B1", "R2", "B2"], false),
            (&["G4", "B3", "R2", "B2"], true),
        ])?,
        TemplateName::HFour => t.validate_against(&[
            (&["R1", "G2", "G1", "B4"], false),
            (&["R2", "G4", "B2", "B1"], false),
        ])?,
        TemplateName::ColoredWords(_) | TemplateName::Triangle => t.validate_against(&[])?,
    }
    Ok(t)
}

fn build(name: TemplateName) -> Result<OrientedTemplate> {
    match name {
        TemplateName::HOdd => {
            let labels = ["R'", "B", "R2bar", "R2", "G"];
            // R2 and R2bar are the only non-adjacent pair
            let arcs = [
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 4),
                (3, 4),
            ];
            fixed(name, &labels, &arcs)
        }
        TemplateName::HEven => {
            let labels = ten_labels();
            let arcs = [
                (0, 9),
                (7, 0),
                (0, 5),
                (0, 6),
                (0, 8),
                (5, 1),
                (1, 3),
                (2, 1),
                (9, 1),
                (4, 1),
                (2, 3),
                (7, 6),
                (9, 2),
                (9, 4),
                (9, 3),
                (7, 5),
                (8, 5),
                (6, 5),
                (8, 4),
            ];
            fixed(name, &labels, &arcs)
        }
        TemplateName::HFour => {
            let labels = ten_labels();
            // same underlying graph as H-even, different orientation
            let arcs = [
                (0, 9),
                (0, 7),
                (0, 5),
                (0, 6),
                (0, 8),
                (1, 5),
                (1, 3),
                (1, 2),
                (1, 9),
                (1, 4),
                (3, 2),
                (7, 6),
                (9, 2),
                (9, 4),
                (9, 3),
                (7, 5),
                (8, 5),
                (6, 5),
                (8, 4),
            ];
            fixed(name, &labels, &arcs)
        }
        TemplateName::ColoredWords(len) => {
            let coloring = color_s0(len)?;
            let arcs: Vec<(usize, usize)> = coloring
                .graph
                .edges()
                .iter()
                .map(|&(u, v)| {
                    let (u, v) = (u as usize, v as usize);
                    if coloring.colors[u] < coloring.colors[v] {
                        (u, v)
                    } else {
                        (v, u)
                    }
                })
                .collect();
            Ok(OrientedTemplate {
                name,
                graph: coloring.graph,
                arcs,
            })
        }
        TemplateName::Triangle => {
            let labels = ["R", "B", "G"];
            fixed(name, &labels, &[(0, 1), (0, 2), (1, 2)])
        }
    }
}

fn ten_labels() -> [&'static str; 10] {
    ["R1", "R2", "B1", "B2", "B3", "B4", "G1", "G2", "G3", "G4"]
}

fn fixed(name: TemplateName, labels: &[&str], arcs: &[(usize, usize)]) -> Result<OrientedTemplate> {
    let graph = Graph::new(labels.len(), arcs.iter().copied())?
        .with_labels(labels.iter().map(|s| s.to_string()).collect())?;
    Ok(OrientedTemplate {
        name,
        graph,
        arcs: arcs.to_vec(),
    })
}

/// Colors of the vertices of a colored-words template, aligned with its
/// vertex order.
pub fn colored_words_colors(len: usize) -> Result<Vec<ColorClass>> {
    Ok(color_s0(len)?.colors)
}
