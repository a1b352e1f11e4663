//! Finite ordered generator sets and the textual form of words over them.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// A finite, totally ordered set of generator names.
///
/// The rank of a letter is its index; a higher rank is a greater letter.
#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, Letter>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    /// Letters in increasing order.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        let mut index = HashMap::new();
        let mut owned = Vec::with_capacity(names.len());
        for (rank, name) in names.iter().enumerate() {
            let name = name.as_ref().trim();
            if !valid_name(name) {
                return Err(Error::InvalidAlphabet(format!(
                    "`{name}` is not an alphanumeric identifier"
                )));
            }
            if index.insert(name.to_string(), rank as Letter).is_some() {
                return Err(Error::InvalidAlphabet(format!("duplicate letter `{name}`")));
            }
            owned.push(name.to_string());
        }
        Ok(Alphabet {
            names: owned,
            index,
        })
    }

    /// `x1 < x2 < ... < xn`.
    pub fn standard(size: usize) -> Self {
        let names: Vec<String> = (1..=size).map(|i| format!("x{i}")).collect();
        Alphabet::new(&names).expect("standard names are valid")
    }

    /// Parses `x1 < x2 < x3` (whitespace optional).
    pub fn parse(spec: &str) -> Result<Self> {
        let names: Vec<&str> = spec.split('<').map(str::trim).collect();
        if names.iter().any(|n| n.is_empty()) {
            return Err(Error::InvalidAlphabet(format!(
                "malformed declaration `{spec}`"
            )));
        }
        Alphabet::new(&names)
    }

    /// Collects letters of the form `<alpha><digits>` from `text` and orders
    /// them by alphabetic stem, then by numeric suffix.
    pub fn infer(text: &str) -> Result<Self> {
        let mut found: Vec<(String, u64, String)> = Vec::new();
        let bytes = text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i].is_ascii_alphabetic() {
                let start = i;
                i += 1;
                let digits_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let stem = text[start..digits_start].to_string();
                let number = text[digits_start..i].parse::<u64>().unwrap_or(0);
                let name = text[start..i].to_string();
                if !found.iter().any(|(_, _, n)| *n == name) {
                    found.push((stem, number, name));
                }
            } else {
                i += 1;
            }
        }
        found.sort();
        let names: Vec<String> = found.into_iter().map(|(_, _, n)| n).collect();
        Alphabet::new(&names)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.names[letter as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rank(&self, name: &str) -> Option<Letter> {
        self.index.get(name).copied()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.names.len()).map(|r| r as Letter)
    }

    pub fn check(&self, word: &Word) -> Result<()> {
        match word.letters().iter().find(|&&l| l as usize >= self.len()) {
            Some(&rank) => Err(Error::LetterOutOfRange {
                rank,
                size: self.len(),
            }),
            None => Ok(()),
        }
    }

    /// Splits a whitespace-free run of letter names into letters.
    ///
    /// The segmentation must be unique; a run that splits in two different
    /// ways is rejected as ambiguous.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        self.segment(text)
            .map_err(|(col, msg)| Error::parse(1, col, msg))
    }

    /// Like [`Alphabet::parse_word`] but reports the error column as `(column, message)`
    /// relative to `text`.
    pub(crate) fn segment(&self, text: &str) -> std::result::Result<Word, (usize, String)> {
        let n = text.len();
        // ways[i]: number of segmentations of text[i..], capped at 2
        let mut ways = vec![0u8; n + 1];
        let mut choice: Vec<Option<(usize, Letter)>> = vec![None; n + 1];
        ways[n] = 1;
        for i in (0..n).rev() {
            if !text.is_char_boundary(i) {
                continue;
            }
            for (name, &rank) in &self.index {
                if text[i..].starts_with(name.as_str()) && ways[i + name.len()] > 0 {
                    ways[i] = (ways[i] + ways[i + name.len()]).min(2);
                    let better = match choice[i] {
                        Some((len, _)) => name.len() > len,
                        None => true,
                    };
                    if better {
                        choice[i] = Some((name.len(), rank));
                    }
                }
            }
        }
        match ways[0] {
            0 => {
                // locate the first position no letter can start from
                let mut i = 0;
                let mut col = 1;
                while i < n {
                    match choice[i] {
                        Some((len, _)) => {
                            i += len;
                            col += len;
                        }
                        None => break,
                    }
                }
                Err((col, format!("`{text}` is not a word over the alphabet")))
            }
            1 => {
                let mut letters = Vec::new();
                let mut i = 0;
                while i < n {
                    let (len, rank) = choice[i].expect("unique segmentation");
                    letters.push(rank);
                    i += len;
                }
                Ok(Word::new(letters))
            }
            _ => Err((
                1,
                format!("`{text}` splits into letters in more than one way"),
            )),
        }
    }

    pub fn format_word(&self, word: &Word) -> String {
        word.letters().iter().map(|&l| self.name(l)).collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(" < "))
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_declaration() {
        let a = Alphabet::parse("x1 < x2<x3").unwrap();
        assert_eq!(a.len(), 3);
        assert_eq!(a.rank("x3"), Some(2));
        assert_eq!(a.to_string(), "x1 < x2 < x3");
        assert!(Alphabet::parse("x1 < x1").is_err());
        assert!(Alphabet::parse("x1 <").is_err());
        assert!(Alphabet::parse("1x").is_err());
    }

    #[test]
    fn greedy_word_parse() {
        let a = Alphabet::parse("x1 < x2 < x11").unwrap();
        let w = a.parse_word("x11x1x2").unwrap();
        assert_eq!(w.letters(), &[2, 0, 1]);
        assert_eq!(a.format_word(&w), "x11x1x2");
        assert!(a.parse_word("x3").is_err());
        assert_eq!(a.parse_word("").unwrap(), Word::empty());
    }

    #[test]
    fn ambiguous_word_rejected() {
        let a = Alphabet::parse("a < ab < b").unwrap();
        assert!(matches!(a.parse_word("ab"), Err(Error::Parse { .. })));
        assert!(a.parse_word("bab").is_err());
        assert_eq!(a.parse_word("ba").unwrap().letters(), &[2, 0]);
    }

    #[test]
    fn infers_order_from_names() {
        let a = Alphabet::infer("x10x2x1").unwrap();
        assert_eq!(a.names(), &["x1", "x2", "x10"]);
        assert!(Alphabet::infer("123").is_err());
    }
}
