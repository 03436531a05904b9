//! Homomorphism-based orientation machinery: the run-length form grammar
//! and 3-colorings, the oriented templates with frozen checksums, the
//! per-family lifting homomorphisms, and the verification pipeline.

pub mod forms;
pub mod homs;
pub mod pipeline;
pub mod templates;

pub use forms::{
    classify_form, color_s0, descent_word, scheme_even, scheme_even_refined, scheme_odd,
    ColorClass, ColorScheme, FormAtom, FormPattern, Parity, S0Coloring,
};
pub use homs::{
    even_embedding, lex_orientation, n3_embedding, n4_embedding, odd_embedding, sp_embedding,
    Homomorphism,
};
pub use pipeline::{pipeline, pipeline_with_budget, Construction, VerificationReport};
pub use templates::{template, OrientedTemplate, TemplateName};
