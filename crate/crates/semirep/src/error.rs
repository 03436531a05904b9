use std::fmt;

/// Library-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("self-loop at vertex {0} is not allowed in a simple graph")]
    SelfLoop(usize),

    #[error("expected {expected} labels, got {got}")]
    LabelCountMismatch { expected: usize, got: usize },

    #[error("orientation is partial: edge {{{u}, {v}}} is undirected")]
    PartialOrientation { u: usize, v: usize },

    #[error("orientation contains the directed cycle {}", DisplayPath(.0))]
    CyclicOrientation(Vec<usize>),

    #[error("arc ({tail}, {head}) does not correspond to an edge of the base graph")]
    ArcNotAnEdge { tail: usize, head: usize },

    #[error("edge {{{u}, {v}}} is directed more than once")]
    DuplicateArc { u: usize, v: usize },

    #[error("invalid parameters for {what}: {why}")]
    InvalidParameters { what: &'static str, why: String },

    #[error("generation would exceed the vertex budget: {needed} vertices > budget {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },

    #[error("search budget of {budget} nodes exhausted")]
    SearchBudgetExceeded { budget: u64 },

    #[error("edge count {edges} exceeds the exhaustive-enumeration limit of {limit}")]
    TooManyEdges { edges: usize, limit: usize },

    #[error("alternation is undefined for a letter paired with itself ({0})")]
    EqualLetters(usize),

    #[error("vertex {0} does not occur in the word")]
    MissingVertex(usize),

    #[error("word symbol {symbol} is not a vertex of the graph on {vertex_count} vertices")]
    ForeignSymbol { symbol: usize, vertex_count: usize },

    #[error("word of length {0} is too short (need at least 2 letters)")]
    WordTooShort(usize),

    #[error("word length parity does not match the {scheme} scheme")]
    SchemeParityMismatch { scheme: &'static str },

    #[error("binary word {word} matches no form of the {scheme} scheme")]
    NoFormMatch { word: String, scheme: &'static str },

    #[error("binary word {word} matches {count} forms of the {scheme} scheme; the scheme is broken")]
    AmbiguousForm {
        word: String,
        scheme: &'static str,
        count: usize,
    },

    #[error("coloring of {graph} has a monochromatic edge {{{u}, {v}}}")]
    MonochromaticEdge { graph: String, u: String, v: String },

    #[error("{graph} is not bipartite (odd cycle of length {cycle_len} found)")]
    NotBipartite { graph: String, cycle_len: usize },

    #[error("template {name} failed its shortcutting-path checksum: expected {expected}, found {found}")]
    TemplateChecksum {
        name: String,
        expected: String,
        found: String,
    },

    #[error("map is not a homomorphism: edge {{{u}, {v}}} has non-adjacent images {fu} and {fv}")]
    HomomorphismViolation {
        u: String,
        v: String,
        fu: String,
        fv: String,
    },

    #[error("lexicographic orientation contains the directed path {}", DisplayPath(.0))]
    DirectedPathOfLengthThree(Vec<usize>),

    #[error("orientation is over a different graph: {why}")]
    OrientationMismatch { why: String },

    #[error("parameters not covered by any construction: {0}")]
    NotCovered(String),

    #[error("graph has no vertex labels, which are required for {0}")]
    MissingLabels(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

struct DisplayPath<'a>(&'a [usize]);

impl fmt::Display for DisplayPath<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "->")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
