//! Run-length form grammar over binary words and the derived 3-colorings.
//!
//! A *form* is a sequence of atoms matched against a binary word's maximal
//! runs: `e1`/`e0` an even-length run of 1s/0s, `o1`/`o0` an odd-length
//! run, `a1`/`a0` a nonempty tail beginning with the given letter, and
//! `b1`/`b0` a tail that begins with the given letter or is empty. A form
//! contains at most one tail atom, in final position. Each scheme below
//! partitions the binary words of its parity: every word matches exactly
//! one listed form.

use crate::error::{Error, Result};
use crate::families::{s_m, words_anm, Word};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormAtom {
    E0,
    E1,
    O0,
    O1,
    A0,
    A1,
    B0,
    B1,
}

impl FormAtom {
    fn letter(&self) -> u16 {
        match self {
            FormAtom::E0 | FormAtom::O0 | FormAtom::A0 | FormAtom::B0 => 0,
            _ => 1,
        }
    }

    fn is_tail(&self) -> bool {
        matches!(
            self,
            FormAtom::A0 | FormAtom::A1 | FormAtom::B0 | FormAtom::B1
        )
    }
}

impl std::fmt::Display for FormAtom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FormAtom::E0 => "e0",
            FormAtom::E1 => "e1",
            FormAtom::O0 => "o0",
            FormAtom::O1 => "o1",
            FormAtom::A0 => "a0",
            FormAtom::A1 => "a1",
            FormAtom::B0 => "b0",
            FormAtom::B1 => "b1",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormPattern(Vec<FormAtom>);

impl FormPattern {
    pub fn new(atoms: Vec<FormAtom>) -> Result<Self> {
        let tails = atoms.iter().filter(|a| a.is_tail()).count();
        let tail_last = atoms.last().is_none_or(|a| a.is_tail()) || tails == 0;
        if tails > 1 || (tails == 1 && !tail_last) {
            return Err(Error::InvalidParameters {
                what: "FormPattern",
                why: "at most one tail atom, in final position".to_string(),
            });
        }
        Ok(FormPattern(atoms))
    }

    /// Parses compact names like `"o1e0b1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        if !bytes.len().is_multiple_of(2) {
            return Err(Error::InvalidParameters {
                what: "FormPattern",
                why: format!("cannot parse {s:?}"),
            });
        }
        let mut atoms = Vec::new();
        for chunk in bytes.chunks(2) {
            let atom = match chunk {
                b"e0" => FormAtom::E0,
                b"e1" => FormAtom::E1,
                b"o0" => FormAtom::O0,
                b"o1" => FormAtom::O1,
                b"a0" => FormAtom::A0,
                b"a1" => FormAtom::A1,
                b"b0" => FormAtom::B0,
                b"b1" => FormAtom::B1,
                _ => {
                    return Err(Error::InvalidParameters {
                        what: "FormPattern",
                        why: format!("cannot parse {s:?}"),
                    })
                }
            };
            atoms.push(atom);
        }
        FormPattern::new(atoms)
    }

    pub fn atoms(&self) -> &[FormAtom] {
        &self.0
    }

    /// Matches the word's maximal-run decomposition against the atoms.
    pub fn matches(&self, word: &[u16]) -> bool {
        let runs = maximal_runs(word);
        let mut i = 0usize; // next run
        for (pos, atom) in self.0.iter().enumerate() {
            if atom.is_tail() {
                debug_assert_eq!(pos, self.0.len() - 1);
                let rest_first = runs.get(i).map(|r| r.0);
                return match atom {
                    FormAtom::A0 | FormAtom::A1 => rest_first == Some(atom.letter()),
                    FormAtom::B0 | FormAtom::B1 => {
                        rest_first.is_none() || rest_first == Some(atom.letter())
                    }
                    _ => unreachable!(),
                };
            }
            match runs.get(i) {
                Some(&(letter, len)) => {
                    let want_even = matches!(atom, FormAtom::E0 | FormAtom::E1);
                    if letter != atom.letter() || (len % 2 == 0) != want_even {
                        return false;
                    }
                    i += 1;
                }
                None => return false,
            }
        }
        i == runs.len()
    }
}

impl std::fmt::Display for FormPattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for a in &self.0 {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

fn maximal_runs(word: &[u16]) -> Vec<(u16, usize)> {
    let mut runs: Vec<(u16, usize)> = Vec::new();
    for &x in word {
        match runs.last_mut() {
            Some((letter, len)) if *letter == x => *len += 1,
            _ => runs.push((x, 1)),
        }
    }
    runs
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ColorClass {
    Red,
    Blue,
    Green,
}

impl std::fmt::Display for ColorClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ColorClass::Red => "Red",
            ColorClass::Blue => "Blue",
            ColorClass::Green => "Green",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// A named list of `(form, color)` entries partitioning the binary words of
/// one length parity.
#[derive(Debug, Clone)]
pub struct ColorScheme {
    pub name: &'static str,
    pub parity: Parity,
    pub entries: Vec<(FormPattern, ColorClass)>,
}

fn scheme(name: &'static str, parity: Parity, table: &[(&str, ColorClass)]) -> ColorScheme {
    ColorScheme {
        name,
        parity,
        entries: table
            .iter()
            .map(|(s, c)| (FormPattern::parse(s).expect("static pattern"), *c))
            .collect(),
    }
}

/// Forms for even-length binary words.
pub fn scheme_even() -> ColorScheme {
    use ColorClass::*;
    scheme(
        "even",
        Parity::Even,
        &[
            ("e0b1", Red),
            ("e1b0", Red),
            ("o1e0a1", Blue),
            ("o1o0b1", Blue),
            ("o0e1a0", Green),
            ("o0o1b0", Green),
        ],
    )
}

/// Forms for odd-length binary words.
pub fn scheme_odd() -> ColorScheme {
    use ColorClass::*;
    scheme(
        "odd",
        Parity::Odd,
        &[
            ("e0a1", Red),
            ("e1a0", Red),
            ("o1", Blue),
            ("o1o0a1", Blue),
            ("o1e0b1", Blue),
            ("o0", Green),
            ("o0o1a0", Green),
            ("o0e1b0", Green),
        ],
    )
}

/// Even scheme with the pure-run words split out of the `b`-tailed Red
/// forms: `e0b1 = e0 | e0a1` and `e1b0 = e1 | e1a0`.
pub fn scheme_even_refined() -> ColorScheme {
    use ColorClass::*;
    scheme(
        "even-refined",
        Parity::Even,
        &[
            ("e0", Red),
            ("e1", Red),
            ("e0a1", Red),
            ("e1a0", Red),
            ("o1e0a1", Blue),
            ("o1o0b1", Blue),
            ("o0e1a0", Green),
            ("o0o1b0", Green),
        ],
    )
}

/// The unique scheme entry matching `word`. Zero or multiple matches signal
/// a broken scheme and are hard errors.
pub fn classify_form<'s>(
    word: &[u16],
    scheme: &'s ColorScheme,
) -> Result<(&'s FormPattern, ColorClass)> {
    let want_even = scheme.parity == Parity::Even;
    if word.is_empty() || word.len().is_multiple_of(2) != want_even {
        return Err(Error::SchemeParityMismatch {
            scheme: scheme.name,
        });
    }
    let mut hit = None;
    let mut count = 0usize;
    for (pattern, color) in &scheme.entries {
        if pattern.matches(word) {
            count += 1;
            hit = Some((pattern, *color));
        }
    }
    match count {
        1 => Ok(hit.expect("counted")),
        0 => Err(Error::NoFormMatch {
            word: Word::new(word.to_vec()).to_string(),
            scheme: scheme.name,
        }),
        _ => Err(Error::AmbiguousForm {
            word: Word::new(word.to_vec()).to_string(),
            scheme: scheme.name,
            count,
        }),
    }
}

/// Ascent/descent indicator of a word: position `i` holds 0 when
/// `x_i > x_{i+1}` and 1 otherwise.
pub fn descent_word(w: &Word) -> Result<Word> {
    if w.len() < 2 {
        return Err(Error::WordTooShort(w.len()));
    }
    Ok(Word::new(
        w.letters()
            .windows(2)
            .map(|p| u16::from(p[0] <= p[1]))
            .collect(),
    ))
}

/// A verified proper 3-coloring of the binary de Bruijn simplification
/// `S_0(n, 2)`, with vertex `i` colored by the form of its word.
#[derive(Debug, Clone)]
pub struct S0Coloring {
    pub graph: Graph,
    pub words: Vec<Word>,
    pub colors: Vec<ColorClass>,
    pub scheme_name: &'static str,
}

/// Colors `S_0(n, 2)` by form and checks properness edge by edge.
pub fn color_s0(n: usize) -> Result<S0Coloring> {
    if n < 2 {
        return Err(Error::InvalidParameters {
            what: "color_s0",
            why: format!("need n >= 2, got {n}"),
        });
    }
    let graph = s_m(n, 2, 0)?;
    let words = words_anm(n, 0, 2);
    let scheme = if n.is_multiple_of(2) {
        scheme_even()
    } else {
        scheme_odd()
    };
    let colors = words
        .iter()
        .map(|w| classify_form(w.letters(), &scheme).map(|(_, c)| c))
        .collect::<Result<Vec<_>>>()?;
    for &(u, v) in graph.edges() {
        let (u, v) = (u as usize, v as usize);
        if colors[u] == colors[v] {
            return Err(Error::MonochromaticEdge {
                graph: format!("S_0({n},2)"),
                u: graph.display_vertex(u),
                v: graph.display_vertex(v),
            });
        }
    }
    Ok(S0Coloring {
        graph,
        words,
        colors,
        scheme_name: scheme.name,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> Vec<u16> {
        s.bytes().map(|b| (b - b'0') as u16).collect()
    }

    #[test]
    fn pattern_matching_on_runs() {
        let p = FormPattern::parse("e1b0").unwrap();
        assert!(p.matches(&bits("1100")));
        assert!(p.matches(&bits("11"))); // empty b0 tail
        assert!(p.matches(&bits("110011"))); // tail content is unconstrained
        assert!(!p.matches(&bits("100"))); // odd leading run
        assert!(!p.matches(&bits("0011")));

        let p = FormPattern::parse("o1e0a1").unwrap();
        assert!(p.matches(&bits("10011")));
        assert!(!p.matches(&bits("100"))); // a1 tail must be nonempty

        let p = FormPattern::parse("b0").unwrap();
        assert!(p.matches(&[]));
        assert!(p.matches(&bits("01")));
        assert!(!p.matches(&bits("10")));
    }

    #[test]
    fn tail_atom_must_be_final() {
        assert!(FormPattern::new(vec![FormAtom::A1, FormAtom::E0]).is_err());
        assert!(FormPattern::new(vec![FormAtom::B1, FormAtom::B0]).is_err());
    }

    #[test]
    fn classification_examples() {
        let even = scheme_even();
        let (form, color) = classify_form(&bits("1100"), &even).unwrap();
        assert_eq!(form.to_string(), "e1b0");
        assert_eq!(color, ColorClass::Red);

        let odd = scheme_odd();
        let (form, color) = classify_form(&bits("1"), &odd).unwrap();
        assert_eq!(form.to_string(), "o1");
        assert_eq!(color, ColorClass::Blue);

        let (form, color) = classify_form(&bits("100"), &odd).unwrap();
        assert_eq!(form.to_string(), "o1e0b1");
        assert_eq!(color, ColorClass::Blue);

        assert!(matches!(
            classify_form(&bits("10"), &odd),
            Err(Error::SchemeParityMismatch { .. })
        ));
    }

    /// Each scheme is a partition: every binary word of matching parity
    /// matches exactly one form.
    #[test]
    fn schemes_partition_binary_words() {
        for len in 1..=12usize {
            let schemes = if len % 2 == 0 {
                vec![scheme_even(), scheme_even_refined()]
            } else {
                vec![scheme_odd()]
            };
            for value in 0u32..1 << len {
                let word: Vec<u16> = (0..len).map(|i| (value >> (len - 1 - i) & 1) as u16).collect();
                for s in &schemes {
                    let matches = s.entries.iter().filter(|(p, _)| p.matches(&word)).count();
                    assert_eq!(matches, 1, "word {word:?} in scheme {}", s.name);
                }
            }
        }
    }

    /// Dropping the first letter shifts between the `e`- and `o`-headed
    /// forms: `e1b0` words drop to `o1b0`, and `o1b0` words drop to `e1b0`
    /// or to `b0` (symmetrically with 0s and 1s swapped).
    #[test]
    fn first_letter_removal_shifts_forms() {
        let e1b0 = FormPattern::parse("e1b0").unwrap();
        let o1b0 = FormPattern::parse("o1b0").unwrap();
        let b0 = FormPattern::parse("b0").unwrap();
        let e0b1 = FormPattern::parse("e0b1").unwrap();
        let o0b1 = FormPattern::parse("o0b1").unwrap();
        let b1 = FormPattern::parse("b1").unwrap();
        for len in 1..=12usize {
            for value in 0u32..1 << len {
                let w: Vec<u16> = (0..len).map(|i| (value >> (len - 1 - i) & 1) as u16).collect();
                let rest = &w[1..];
                if e1b0.matches(&w) {
                    assert!(o1b0.matches(rest), "{w:?}");
                }
                if e0b1.matches(&w) {
                    assert!(o0b1.matches(rest), "{w:?}");
                }
                if o1b0.matches(&w) {
                    assert!(e1b0.matches(rest) || b0.matches(rest), "{w:?}");
                }
                if o0b1.matches(&w) {
                    assert!(e0b1.matches(rest) || b1.matches(rest), "{w:?}");
                }
            }
        }
    }

    #[test]
    fn descent_words() {
        let w = |l: &[u16]| Word::new(l.to_vec());
        assert_eq!(descent_word(&w(&[0, 1, 0])).unwrap(), w(&[1, 0]));
        assert_eq!(descent_word(&w(&[1, 2, 3, 4])).unwrap(), w(&[1, 1, 1]));
        assert_eq!(descent_word(&w(&[2, 3, 1, 4])).unwrap(), w(&[1, 0, 1]));
        // ties count as ascents
        assert_eq!(descent_word(&w(&[2, 2, 1])).unwrap(), w(&[1, 0]));
        assert!(descent_word(&w(&[5])).is_err());
    }

    #[test]
    fn coloring_s0_small() {
        let c = color_s0(2).unwrap();
        assert_eq!(c.graph.edge_count(), 5);
        // the all-1s vertex is Red (form e1 with empty b0 tail)
        let idx = c.graph.vertex_by_label("11").unwrap();
        assert_eq!(c.colors[idx], ColorClass::Red);

        for n in 2..=10 {
            let c = color_s0(n).unwrap();
            for &(u, v) in c.graph.edges() {
                assert_ne!(c.colors[u as usize], c.colors[v as usize], "n={n}");
            }
        }
    }
}
