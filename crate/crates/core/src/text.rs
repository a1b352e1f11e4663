//! Text formats: bracketed nonassociative words, polynomials and presentation files.
//!
//! Polynomials are sums of terms `c * m`, where `c` is an optional rational
//! `n` or `n/d` and `m` is a word (`x2x1`) or a bracketed nonassociative word
//! (`[x2 [x2 x1]]`). Brackets are expanded as commutators. Parentheses are
//! accepted as brackets on input; output always uses square brackets.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::alphabet::Alphabet;
use crate::bracketing::{std_tree, NonassocWord};
use crate::error::{Error, Result};
use crate::poly::{expand, AssocPoly, Coeff, LiePoly};
use crate::words::{is_lyndon_shirshov, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Open,
    Close,
    Plus,
    Minus,
    Star,
    Slash,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    col: usize,
}

fn tokenize(text: &str, line: usize) -> Result<Vec<Spanned>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let col = i + 1;
        let single = match c {
            b'[' | b'(' => Some(Tok::Open),
            b']' | b')' => Some(Tok::Close),
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'/' => Some(Tok::Slash),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Spanned { tok, col });
            i += 1;
        } else if c.is_ascii_whitespace() || c == b',' {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i < bytes.len() && (bytes[i].is_ascii_alphabetic() || bytes[i] == b'_') {
                return Err(Error::parse(
                    line,
                    i + 1,
                    "letter names must not start with a digit",
                ));
            }
            let n = BigInt::from_str(&text[start..i]).expect("digits");
            out.push(Spanned {
                tok: Tok::Num(n),
                col,
            });
        } else if c.is_ascii_alphabetic() || c == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push(Spanned {
                tok: Tok::Ident(text[start..i].to_string()),
                col,
            });
        } else {
            return Err(Error::parse(
                line,
                col,
                format!("unexpected character `{}`", c as char),
            ));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    line: usize,
    end_col: usize,
    alphabet: &'a Alphabet,
}

impl<'a> Parser<'a> {
    fn new(text: &str, line: usize, alphabet: &'a Alphabet) -> Result<Self> {
        Ok(Parser {
            toks: tokenize(text, line)?,
            pos: 0,
            line,
            end_col: text.len() + 1,
            alphabet,
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |s| s.col)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::parse(self.line, self.col(), msg))
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|s| s.tok.clone());
        self.pos += 1;
        t
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn word(&self, ident: &str, col: usize) -> Result<Word> {
        self.alphabet
            .segment(ident)
            .map_err(|(c, msg)| Error::parse(self.line, col + c - 1, msg))
    }

    /// `[` item+ `]` with items separated by whitespace.
    fn bracket(&mut self) -> Result<NonassocWord> {
        let open_col = self.col();
        self.bump();
        let mut items: Vec<NonassocWord> = Vec::new();
        loop {
            match self.peek() {
                Some(Tok::Close) => {
                    self.bump();
                    break;
                }
                Some(Tok::Open) => items.push(self.bracket()?),
                Some(Tok::Ident(id)) => {
                    let id = id.clone();
                    let col = self.col();
                    self.bump();
                    let w = self.word(&id, col)?;
                    items.extend(w.letters().iter().map(|&l| NonassocWord::Leaf(l)));
                }
                None => return Err(Error::parse(self.line, open_col, "unclosed bracket")),
                Some(_) => return self.err("expected a letter or a bracket"),
            }
        }
        match items.len() {
            0 => Err(Error::parse(self.line, open_col, "empty bracket")),
            1 => Ok(items.pop().expect("one item")),
            2 => {
                let r = items.pop().expect("two items");
                let l = items.pop().expect("two items");
                Ok(NonassocWord::node(l, r))
            }
            _ => {
                // a flat run of letters stands for the standard bracketing of an ALSW
                let letters: Option<Vec<u32>> = items
                    .iter()
                    .map(|t| match t {
                        NonassocWord::Leaf(l) => Some(*l),
                        NonassocWord::Node(..) => None,
                    })
                    .collect();
                match letters {
                    Some(ls) if is_lyndon_shirshov(&ls) => Ok(std_tree(&ls)),
                    _ => Err(Error::parse(
                        self.line,
                        open_col,
                        "a bracket must hold exactly two parts",
                    )),
                }
            }
        }
    }

    fn rational(&mut self) -> Result<Coeff> {
        let Some(Tok::Num(n)) = self.bump() else {
            unreachable!("caller checked for a number")
        };
        if self.peek() == Some(&Tok::Slash) {
            self.bump();
            match self.bump() {
                Some(Tok::Num(d)) if !d.is_zero() => Ok(Coeff::new(n, d)),
                Some(Tok::Num(_)) => {
                    self.pos -= 1;
                    self.err("zero denominator")
                }
                _ => {
                    self.pos -= 1;
                    self.err("expected a denominator")
                }
            }
        } else {
            Ok(Coeff::from_integer(n))
        }
    }

    fn monomial(&mut self) -> Result<AssocPoly> {
        match self.peek() {
            Some(Tok::Open) => Ok(expand(&self.bracket()?)),
            Some(Tok::Ident(id)) => {
                let id = id.clone();
                let col = self.col();
                self.bump();
                Ok(AssocPoly::word(self.word(&id, col)?))
            }
            _ => self.err("expected a word or a bracket"),
        }
    }

    fn term(&mut self) -> Result<AssocPoly> {
        if matches!(self.peek(), Some(Tok::Num(_))) {
            let c = self.rational()?;
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    Ok(self.monomial()?.scale(&c))
                }
                Some(Tok::Open) | Some(Tok::Ident(_)) => Ok(self.monomial()?.scale(&c)),
                _ => Ok(AssocPoly::monomial(Word::empty(), c)),
            }
        } else {
            self.monomial()
        }
    }

    fn poly(&mut self) -> Result<AssocPoly> {
        let mut total = AssocPoly::zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    Coeff::one()
                }
                Some(Tok::Minus) => {
                    self.bump();
                    -Coeff::one()
                }
                None if first => return self.err("empty polynomial"),
                _ if first => Coeff::one(),
                None => break,
                Some(_) => return self.err("expected `+` or `-`"),
            };
            let t = self.term()?;
            total.add_scaled(&sign, &t);
            first = false;
            if self.at_end() {
                break;
            }
        }
        Ok(total)
    }
}

/// Parses a bracketed nonassociative word such as `[[x2 x1] x1]`.
pub fn parse_nonassoc(text: &str, alphabet: &Alphabet) -> Result<NonassocWord> {
    parse_nonassoc_at(text, 1, alphabet)
}

fn parse_nonassoc_at(text: &str, line: usize, alphabet: &Alphabet) -> Result<NonassocWord> {
    let mut p = Parser::new(text, line, alphabet)?;
    let tree = match p.peek() {
        Some(Tok::Open) => p.bracket()?,
        Some(Tok::Ident(id)) => {
            let id = id.clone();
            let col = p.col();
            p.bump();
            let w = p.word(&id, col)?;
            if w.len() != 1 {
                return Err(Error::parse(
                    line,
                    col,
                    "a bare leaf must be a single letter",
                ));
            }
            NonassocWord::Leaf(w.letters()[0])
        }
        _ => return p.err("expected a bracketed word"),
    };
    if !p.at_end() {
        return p.err("trailing input");
    }
    Ok(tree)
}

pub fn parse_assoc(text: &str, alphabet: &Alphabet) -> Result<AssocPoly> {
    parse_assoc_at(text, 1, alphabet)
}

fn parse_assoc_at(text: &str, line: usize, alphabet: &Alphabet) -> Result<AssocPoly> {
    let (lhs, rhs) = match text.split_once('=') {
        Some((l, r)) => (l, Some((r, l.len() + 1))),
        None => (text, None),
    };
    let mut p = Parser::new(lhs, line, alphabet)?;
    let mut f = p.poly()?;
    if let Some((rhs, shift)) = rhs {
        let mut q = Parser::new(rhs, line, alphabet)?;
        let g = q.poly().map_err(|e| match e {
            Error::Parse {
                line,
                column,
                message,
            } => Error::Parse {
                line,
                column: column + shift,
                message,
            },
            other => other,
        })?;
        f = &f - &g;
    }
    Ok(f)
}

/// Parses a polynomial and certifies that it lies in `Lie(X)`.
pub fn parse_lie(text: &str, alphabet: &Alphabet) -> Result<LiePoly> {
    LiePoly::from_assoc(parse_assoc(text, alphabet)?)
}

/// Which engine a presentation targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Lie,
    Assoc,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "lie" => Ok(Mode::Lie),
            "assoc" => Ok(Mode::Assoc),
            other => Err(Error::parse(1, 1, format!("unknown mode `{other}`"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Lie => "lie",
            Mode::Assoc => "assoc",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relations {
    Lie(Vec<LiePoly>),
    Assoc(Vec<AssocPoly>),
}

/// An alphabet, an engine mode and a list of defining relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub alphabet: Alphabet,
    pub degree_bound: Option<usize>,
    pub relations: Relations,
}

impl Presentation {
    pub fn mode(&self) -> Mode {
        match self.relations {
            Relations::Lie(_) => Mode::Lie,
            Relations::Assoc(_) => Mode::Assoc,
        }
    }

    /// Reinterprets the relations for another engine. Going to `lie`
    /// requires every relation to be a Lie polynomial.
    pub fn with_mode(self, mode: Mode) -> Result<Presentation> {
        let relations = match (self.relations, mode) {
            (Relations::Lie(r), Mode::Assoc) => {
                Relations::Assoc(r.into_iter().map(LiePoly::into_assoc).collect())
            }
            (Relations::Assoc(r), Mode::Lie) => Relations::Lie(
                r.into_iter()
                    .map(LiePoly::from_assoc)
                    .collect::<Result<Vec<_>>>()?,
            ),
            (same, _) => same,
        };
        Ok(Presentation { relations, ..self })
    }

    /// Associative view of the relations, as written.
    pub fn assoc_relations(&self) -> Vec<AssocPoly> {
        match &self.relations {
            Relations::Lie(r) => r.iter().map(|f| f.assoc().clone()).collect(),
            Relations::Assoc(r) => r.clone(),
        }
    }

    pub fn parse(text: &str) -> Result<Presentation> {
        let mut alphabet: Option<Alphabet> = None;
        let mut mode = Mode::Lie;
        let mut degree_bound = None;
        let mut raw: Vec<(usize, &str)> = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            let content = line.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some((key, value)) = content.split_once(':') {
                let value = value.trim();
                match key.trim() {
                    "alphabet" => {
                        alphabet = Some(
                            Alphabet::parse(value)
                                .map_err(|e| Error::parse(lineno, 1, e.to_string()))?,
                        )
                    }
                    "mode" => {
                        mode = value.parse().map_err(|_| {
                            Error::parse(lineno, 1, format!("unknown mode `{value}`"))
                        })?
                    }
                    "degree_bound" | "max_deg" => {
                        degree_bound = Some(value.parse::<usize>().map_err(|_| {
                            Error::parse(lineno, 1, format!("invalid degree bound `{value}`"))
                        })?)
                    }
                    other => {
                        return Err(Error::parse(lineno, 1, format!("unknown header `{other}`")))
                    }
                }
                continue;
            }
            raw.push((lineno, content));
        }
        let alphabet = alphabet.ok_or_else(|| Error::parse(1, 1, "missing `alphabet:` header"))?;
        let mut assoc = Vec::with_capacity(raw.len());
        for (lineno, content) in &raw {
            let f = parse_assoc_at(content, *lineno, &alphabet)?;
            if f.is_zero() {
                return Err(Error::parse(*lineno, 1, "relation is zero"));
            }
            assoc.push((lineno, f));
        }
        let relations = match mode {
            Mode::Assoc => Relations::Assoc(assoc.into_iter().map(|(_, f)| f).collect()),
            Mode::Lie => Relations::Lie(
                assoc
                    .into_iter()
                    .map(|(lineno, f)| {
                        LiePoly::from_assoc(f).map_err(|_| {
                            Error::parse(*lineno, 1, "relation is not a Lie polynomial")
                        })
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        Ok(Presentation {
            alphabet,
            degree_bound,
            relations,
        })
    }

    /// Canonical text form; parsing it back yields an equal presentation.
    pub fn to_text(&self) -> String {
        let mut out = format!("alphabet: {}\nmode: {}\n", self.alphabet, self.mode());
        if let Some(d) = self.degree_bound {
            out.push_str(&format!("degree_bound: {d}\n"));
        }
        match &self.relations {
            Relations::Lie(r) => {
                for f in r {
                    out.push_str(&format!("{}\n", f.display(&self.alphabet)));
                }
            }
            Relations::Assoc(r) => {
                for f in r {
                    out.push_str(&format!("{}\n", f.display(&self.alphabet)));
                }
            }
        }
        out
    }
}
