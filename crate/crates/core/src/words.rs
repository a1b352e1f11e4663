//! Words over a finite ordered alphabet and Lyndon-Shirshov combinatorics.
//!
//! Two orders live here and must not be mixed up:
//!
//! * [`compare_shirshov_lex`]: letterwise, with a proper prefix *greater* than
//!   any of its extensions. All Lyndon-Shirshov combinatorics use this order.
//! * [`compare_deglex`]: length first, then letterwise. This is the monomial
//!   order for polynomials and completion.

use std::cmp::Ordering;
use std::fmt;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

/// Rank of a letter in its alphabet; larger rank is a greater letter.
pub type Letter = u32;

/// An element of the free monoid on an alphabet. The empty word is allowed.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(letter: Letter) -> Self {
        Word(vec![letter])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn min_letter(&self) -> Option<Letter> {
        self.0.iter().copied().min()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `a · self · b`
    pub fn sandwich(&self, a: &Word, b: &Word) -> Word {
        let mut letters = Vec::with_capacity(a.len() + self.len() + b.len());
        letters.extend_from_slice(&a.0);
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&b.0);
        Word(letters)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// Start positions of every occurrence of `factor` in `self`.
    pub fn occurrences(&self, factor: &Word) -> Vec<usize> {
        if factor.len() > self.len() {
            return Vec::new();
        }
        if factor.is_empty() {
            return (0..=self.len()).collect();
        }
        self.0
            .windows(factor.len())
            .enumerate()
            .filter(|(_, w)| *w == factor.letters())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn contains_factor(&self, factor: &Word) -> bool {
        factor.len() <= self.len()
            && (factor.is_empty() || self.0.windows(factor.len()).any(|w| w == factor.letters()))
    }

    /// Letter multiset as a sorted vector.
    pub fn content(&self) -> Vec<Letter> {
        let mut c = self.0.clone();
        c.sort_unstable();
        c
    }

    /// Weak-ALSW: the first letter exceeds the minimal letter, or `|u| = 1`.
    pub fn is_weak_alsw(&self) -> bool {
        match (self.first(), self.min_letter()) {
            (Some(f), Some(m)) => self.len() == 1 || f > m,
            _ => false,
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayWord {
            word: self,
            alphabet,
        }
    }
}

struct DisplayWord<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for &l in self.word.letters() {
            f.write_str(self.alphabet.name(l))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for l in &self.0 {
            write!(f, "x{}", l + 1)?;
        }
        Ok(())
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }
}

/// `Ord` on `Word` is the deg-lex monomial order. Lyndon-Shirshov
/// combinatorics never go through it; they call [`compare_shirshov_lex`].
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_deglex(&self.0, &other.0)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order in which a proper prefix is greater than its extensions.
pub fn compare_shirshov_lex<L: Ord>(u: &[L], v: &[L]) -> Ordering {
    for (x, y) in u.iter().zip(v) {
        match x.cmp(y) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    v.len().cmp(&u.len())
}

/// Degree-lexicographic order: shorter words are smaller, equal lengths compare letterwise.
pub fn compare_deglex<L: Ord>(u: &[L], v: &[L]) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| u.cmp(v))
}

/// Suffix test: `u` is Lyndon-Shirshov iff it is strictly greater than every
/// proper nonempty suffix.
pub fn is_lyndon_shirshov<L: Ord>(u: &[L]) -> bool {
    !u.is_empty() && (1..u.len()).all(|i| compare_shirshov_lex(u, &u[i..]) == Ordering::Greater)
}

pub fn is_alsw(u: &Word) -> Result<bool> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(is_lyndon_shirshov(u.letters()))
}

/// Unique factorization `u = u1 u2 ... uk` into ALSWs with `u1 <= ... <= uk`.
///
/// Built right to left: the last factor is always the longest ALSW suffix.
pub fn lyndon_factorize(u: &Word) -> Result<Vec<Word>> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut factors = Vec::new();
    let mut end = u.len();
    while end > 0 {
        let rest = &u.letters()[..end];
        let start = (0..end)
            .find(|&s| is_lyndon_shirshov(&rest[s..]))
            .expect("a single letter is always Lyndon-Shirshov");
        factors.push(Word::from(&rest[start..]));
        end = start;
    }
    factors.reverse();
    Ok(factors)
}

/// Splits an ALSW `u` as `v·w` with `w` its longest proper ALSW suffix.
/// `v` is then an ALSW as well.
pub fn longest_alsw_proper_suffix(u: &Word) -> Result<(Word, Word)> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    if u.len() < 2 {
        return Err(Error::TooShort(u.clone()));
    }
    if !is_lyndon_shirshov(u.letters()) {
        return Err(Error::NotAlsw(u.clone()));
    }
    Ok(split_standard(u.letters()))
}

pub(crate) fn split_standard(u: &[Letter]) -> (Word, Word) {
    let start = (1..u.len())
        .find(|&s| is_lyndon_shirshov(&u[s..]))
        .expect("last letter is a proper ALSW suffix");
    (Word::from(&u[..start]), Word::from(&u[start..]))
}

/// Letter `x_i^j = x_i x_β ... x_β` (`j` trailing minimal letters) of the
/// derived alphabet used by Shirshov elimination.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EliminationLetter<L> {
    pub base: L,
    pub tail: usize,
}

impl<L: Ord> Ord for EliminationLetter<L> {
    /// Greater base wins; for equal bases the shorter tail is greater.
    fn cmp(&self, other: &Self) -> Ordering {
        self.base
            .cmp(&other.base)
            .then_with(|| other.tail.cmp(&self.tail))
    }
}

impl<L: Ord> PartialOrd for EliminationLetter<L> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Rewrites `v` over the derived alphabet relative to minimal letter `min`:
/// every letter above `min` absorbs the run of `min` letters following it.
pub fn eliminate_relative<L: Ord + Clone>(
    v: &[L],
    min: &L,
) -> std::result::Result<Vec<EliminationLetter<L>>, EliminateError> {
    let Some(first) = v.first() else {
        return Err(EliminateError::Empty);
    };
    if first == min {
        return Err(EliminateError::StartsWithMin);
    }
    if v.iter().any(|l| l < min) {
        return Err(EliminateError::BelowMin);
    }
    let mut out: Vec<EliminationLetter<L>> = Vec::new();
    for l in v {
        if l == min {
            out.last_mut().expect("first letter exceeds min").tail += 1;
        } else {
            out.push(EliminationLetter {
                base: l.clone(),
                tail: 0,
            });
        }
    }
    Ok(out)
}

/// Failure modes of [`eliminate_relative`] on generic letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EliminateError {
    Empty,
    StartsWithMin,
    BelowMin,
}

/// Shirshov elimination `u ↦ u'` of a Weak-ALSW with `|u| >= 2`.
pub fn eliminate(u: &Word) -> Result<Vec<EliminationLetter<Letter>>> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    if u.len() < 2 {
        return Err(Error::TooShort(u.clone()));
    }
    let min = u.min_letter().expect("nonempty");
    eliminate_relative(u.letters(), &min).map_err(|_| Error::NotWeakAlsw(u.clone()))
}

/// A letter of an iterated derived alphabet `X^k(u)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DerivedLetter {
    Base(Letter),
    Derived(Box<EliminationLetter<DerivedLetter>>),
}

impl Ord for DerivedLetter {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (DerivedLetter::Base(a), DerivedLetter::Base(b)) => a.cmp(b),
            (DerivedLetter::Derived(a), DerivedLetter::Derived(b)) => a.cmp(b),
            // never compared within one alphabet; any fixed choice keeps Ord total
            (DerivedLetter::Base(_), DerivedLetter::Derived(_)) => Ordering::Less,
            (DerivedLetter::Derived(_), DerivedLetter::Base(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for DerivedLetter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl DerivedLetter {
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayDerived {
            letter: self,
            alphabet,
        }
    }
}

struct DisplayDerived<'a> {
    letter: &'a DerivedLetter,
    alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayDerived<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.letter {
            DerivedLetter::Base(l) => f.write_str(self.alphabet.name(*l)),
            DerivedLetter::Derived(e) => {
                let base = e.base.display(self.alphabet);
                match e.base {
                    DerivedLetter::Base(_) => write!(f, "{base}^{}", e.tail),
                    DerivedLetter::Derived(_) => write!(f, "({base})^{}", e.tail),
                }
            }
        }
    }
}

/// Formats a derived word as space-separated letters, e.g. `x3^0 x2^1`.
pub fn format_derived(word: &[DerivedLetter], alphabet: &Alphabet) -> String {
    word.iter()
        .map(|l| l.display(alphabet).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Formats the output of [`eliminate`], e.g. `x3^0 x2^1 x2^0`.
pub fn format_eliminated(word: &[EliminationLetter<Letter>], alphabet: &Alphabet) -> String {
    word.iter()
        .map(|e| format!("{}^{}", alphabet.name(e.base), e.tail))
        .collect::<Vec<_>>()
        .join(" ")
}

/// One elimination step on an already-derived word.
pub fn eliminate_derived(u: &[DerivedLetter]) -> Option<Vec<DerivedLetter>> {
    if u.len() < 2 {
        return None;
    }
    let min = u.iter().min()?.clone();
    let step = eliminate_relative(u, &min).ok()?;
    Some(
        step.into_iter()
            .map(|e| DerivedLetter::Derived(Box::new(e)))
            .collect(),
    )
}

/// `u, u', u'', ...` until the word has length one or stops being a Weak-ALSW.
pub fn elimination_chain(u: &Word) -> Vec<Vec<DerivedLetter>> {
    let mut chain = vec![u
        .letters()
        .iter()
        .map(|&l| DerivedLetter::Base(l))
        .collect::<Vec<_>>()];
    while let Some(next) = eliminate_derived(chain.last().expect("nonempty chain")) {
        chain.push(next);
    }
    chain
}

/// ALSW test by iterated elimination: `u` is an ALSW iff some `u^(k)` has length one.
pub fn is_alsw_by_elimination(u: &Word) -> Result<bool> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(elimination_chain(u).last().map(Vec::len) == Some(1))
}

/// All ALSWs of length `1..=max_len` over the first `alphabet_size` letters,
/// sorted by [`compare_deglex`].
pub fn enumerate_alsw(alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
    enumerate_alsw_ranks(alphabet.len(), max_len)
}

pub(crate) fn enumerate_alsw_ranks(size: usize, max_len: usize) -> Vec<Word> {
    if size == 0 || max_len == 0 {
        return Vec::new();
    }
    let top = (size - 1) as Letter;
    // Duval's generation of classical Lyndon words; an ALSW is a classical
    // Lyndon word once the letter order is reversed.
    let mut out = Vec::new();
    let mut w: Vec<Letter> = vec![0];
    loop {
        out.push(Word(w.iter().map(|&c| top - c).collect()));
        let m = w.len();
        while w.len() < max_len {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out.sort_by(|a, b| compare_deglex(a.letters(), b.letters()));
    out
}

/// All ALSWs of length exactly `len`.
pub fn enumerate_alsw_of_length(alphabet: &Alphabet, len: usize) -> Vec<Word> {
    enumerate_alsw(alphabet, len)
        .into_iter()
        .filter(|w| w.len() == len)
        .collect()
}

/// All words of length exactly `len` over `size` letters, in letterwise order.
pub fn all_words(size: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..size as Letter).map(move |l| {
                    let mut next = w.clone();
                    next.0.push(l);
                    next
                })
            })
            .collect();
    }
    out
}
