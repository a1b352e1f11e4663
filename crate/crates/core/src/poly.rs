//! Exact-rational polynomials in the free associative algebra and the NLSW
//! basis of its Lie subalgebra.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::alphabet::Alphabet;
use crate::bracketing::{bracket_std, std_tree, NlswTree, NonassocWord};
use crate::error::{Error, Result};
use crate::words::{compare_shirshov_lex, is_lyndon_shirshov, split_standard, Letter, Word};

pub type Coeff = BigRational;

pub fn coeff(n: i64) -> Coeff {
    Coeff::from_integer(n.into())
}

/// Element of `Q<X>`: a finite map from words to nonzero coefficients.
/// Iteration order is decreasing deg-lex.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AssocPoly {
    terms: BTreeMap<Word, Coeff>,
}

impl AssocPoly {
    pub fn zero() -> Self {
        AssocPoly::default()
    }

    pub fn monomial(word: Word, c: Coeff) -> Self {
        let mut p = AssocPoly::zero();
        p.add_term(word, c);
        p
    }

    pub fn word(word: Word) -> Self {
        AssocPoly::monomial(word, Coeff::one())
    }

    pub fn letter(letter: Letter) -> Self {
        AssocPoly::word(Word::letter(letter))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Coeff)>) -> Self {
        let mut p = AssocPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of support words.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, word: Word, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, word: &Word) -> Coeff {
        self.terms.get(word).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Terms in decreasing deg-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Coeff)> + '_ {
        self.terms.iter().rev()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> + '_ {
        self.terms.keys().rev()
    }

    /// Deg-lex maximal support word with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &Coeff)> {
        self.terms.last_key_value()
    }

    /// Removes and returns the leading term.
    pub fn pop_leading(&mut self) -> Option<(Word, Coeff)> {
        self.terms.pop_last()
    }

    pub fn try_leading(&self) -> Result<(&Word, &Coeff)> {
        self.leading().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.leading().map(|(w, _)| w)
    }

    pub fn degree(&self) -> Option<usize> {
        self.leading_word().map(Word::len)
    }

    pub fn is_monic(&self) -> bool {
        matches!(self.leading(), Some((_, c)) if c.is_one())
    }

    pub fn monic(&self) -> Result<AssocPoly> {
        let (_, lc) = self.try_leading()?;
        let inv = lc.recip();
        Ok(self.scale(&inv))
    }

    pub fn scale(&self, c: &Coeff) -> AssocPoly {
        if c.is_zero() {
            return AssocPoly::zero();
        }
        AssocPoly {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// `self += c · a · p · b`
    pub fn add_scaled_sandwich(&mut self, c: &Coeff, a: &Word, p: &AssocPoly, b: &Word) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &p.terms {
            self.add_term(w.sandwich(a, b), x * c);
        }
    }

    /// `self += c · p`
    pub fn add_scaled(&mut self, c: &Coeff, p: &AssocPoly) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &p.terms {
            self.add_term(w.clone(), x * c);
        }
    }

    /// `a · self · b`
    pub fn sandwich(&self, a: &Word, b: &Word) -> AssocPoly {
        AssocPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.sandwich(a, b), c.clone()))
                .collect(),
        }
    }

    /// `fg - gf`
    pub fn commutator(f: &AssocPoly, g: &AssocPoly) -> AssocPoly {
        let mut out = f * g;
        for (u, a) in &g.terms {
            for (v, b) in &f.terms {
                out.add_term(u.concat(v), -(a * b));
            }
        }
        out
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayPoly {
            terms: self
                .terms()
                .map(|(w, c)| (c.clone(), w.display(alphabet).to_string(), w.is_empty()))
                .collect(),
        }
    }
}

impl fmt::Debug for AssocPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .terms()
            .map(|(w, c)| {
                (
                    c.clone(),
                    if w.is_empty() {
                        String::new()
                    } else {
                        format!("{w:?}")
                    },
                    w.is_empty(),
                )
            })
            .collect();
        write!(f, "{}", DisplayPoly { terms })
    }
}

/// Canonical `c * m` sum printer shared by associative and Lie polynomials.
pub(crate) struct DisplayPoly {
    /// `(coefficient, monomial text, monomial is the unit)`
    pub(crate) terms: Vec<(Coeff, String, bool)>,
}

impl fmt::Display for DisplayPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, m, unit)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *unit {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                f.write_str(m)?;
            } else {
                write!(f, "{magnitude} * {m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &AssocPoly {
    type Output = AssocPoly;
    fn add(self, rhs: &AssocPoly) -> AssocPoly {
        let mut out = self.clone();
        out.add_scaled(&Coeff::one(), rhs);
        out
    }
}

impl Sub for &AssocPoly {
    type Output = AssocPoly;
    fn sub(self, rhs: &AssocPoly) -> AssocPoly {
        let mut out = self.clone();
        out.add_scaled(&-Coeff::one(), rhs);
        out
    }
}

impl Neg for &AssocPoly {
    type Output = AssocPoly;
    fn neg(self) -> AssocPoly {
        self.scale(&-Coeff::one())
    }
}

impl Mul for &AssocPoly {
    type Output = AssocPoly;
    fn mul(self, rhs: &AssocPoly) -> AssocPoly {
        let mut out = AssocPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }
}

/// Commutator expansion `(ab) = ab - ba` of a nonassociative word.
pub fn expand(t: &NonassocWord) -> AssocPoly {
    match t {
        NonassocWord::Leaf(l) => AssocPoly::letter(*l),
        NonassocWord::Node(l, r) => AssocPoly::commutator(&expand(l), &expand(r)),
    }
}

/// Deg-lex leading word and coefficient of a nonzero polynomial.
pub fn leading(f: &AssocPoly) -> Result<(Word, Coeff)> {
    f.try_leading().map(|(w, c)| (w.clone(), c.clone()))
}

/// NLSW-basis decomposition of `f`, or `None` when `f` is not in `Lie(X)`.
///
/// Peels off `lc(f) · [f̄]` until nothing is left; a non-ALSW leading word on
/// the way proves non-membership.
pub fn lie_decompose(f: &AssocPoly) -> Option<Vec<(Coeff, NlswTree)>> {
    let mut rest = f.clone();
    let mut out = Vec::new();
    while let Some((lead, lc)) = rest.leading() {
        if !is_lyndon_shirshov(lead.letters()) {
            return None;
        }
        let (lead, lc) = (lead.clone(), lc.clone());
        let tree = bracket_std(&lead).expect("leading word is an ALSW");
        rest.add_scaled(&-lc.clone(), &expand(tree.tree()));
        out.push((lc, tree));
    }
    Some(out)
}

type Combination = BTreeMap<Word, Coeff>;

fn add_into(acc: &mut Combination, word: Word, c: Coeff) {
    if c.is_zero() {
        return;
    }
    match acc.entry(word) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Bracket of two NLSWs (given by their ALSW words) rewritten in the NLSW
/// basis by the Jacobi rearrangement
/// `(([v1][v2])[w]) = (([v1][w])[v2]) + ([v1]([v2][w]))` when `v2 > w`.
#[derive(Default)]
struct NlswBracketer {
    memo: HashMap<(Word, Word), Combination>,
}

impl NlswBracketer {
    fn bracket(&mut self, u: &Word, w: &Word) -> Combination {
        if let Some(hit) = self.memo.get(&(u.clone(), w.clone())) {
            return hit.clone();
        }
        let result = match compare_shirshov_lex(u.letters(), w.letters()) {
            Ordering::Equal => Combination::new(),
            Ordering::Less => self
                .bracket(w, u)
                .into_iter()
                .map(|(t, c)| (t, -c))
                .collect(),
            Ordering::Greater if u.len() == 1 => Combination::from([(u.concat(w), Coeff::one())]),
            Ordering::Greater => {
                let (u1, u2) = split_standard(u.letters());
                if compare_shirshov_lex(u2.letters(), w.letters()) != Ordering::Greater {
                    Combination::from([(u.concat(w), Coeff::one())])
                } else {
                    let mut acc = Combination::new();
                    for (t, gamma) in self.bracket(&u1, w) {
                        for (r, c) in self.bracket(&t, &u2) {
                            add_into(&mut acc, r, &gamma * &c);
                        }
                    }
                    for (t, gamma) in self.bracket(&u2, w) {
                        for (r, c) in self.bracket(&u1, &t) {
                            add_into(&mut acc, r, &gamma * &c);
                        }
                    }
                    acc
                }
            }
        };
        self.memo.insert((u.clone(), w.clone()), result.clone());
        result
    }

    fn rewrite(&mut self, t: &NonassocWord) -> Combination {
        match t {
            NonassocWord::Leaf(l) => Combination::from([(Word::letter(*l), Coeff::one())]),
            NonassocWord::Node(l, r) => {
                let left = self.rewrite(l);
                let right = self.rewrite(r);
                let mut acc = Combination::new();
                for (v, a) in &left {
                    for (w, b) in &right {
                        for (u, c) in self.bracket(v, w) {
                            add_into(&mut acc, u, a * b * c);
                        }
                    }
                }
                acc
            }
        }
    }
}

fn combination_to_trees(comb: Combination) -> Vec<(Coeff, NlswTree)> {
    comb.into_iter()
        .rev()
        .map(|(w, c)| (c, bracket_std(&w).expect("rewriting yields ALSWs")))
        .collect()
}

/// Rewrites a nonassociative word as a combination of NLSWs of the same length.
pub fn rewrite_to_nlsw(t: &NonassocWord) -> Vec<(Coeff, NlswTree)> {
    combination_to_trees(NlswBracketer::default().rewrite(t))
}

/// Element of `Lie(X)`, carried together with its NLSW decomposition.
///
/// The decomposition lists distinct NLSWs by decreasing word and expands to
/// the associative form exactly.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LiePoly {
    assoc: AssocPoly,
    basis: Vec<(Coeff, NlswTree)>,
}

impl LiePoly {
    pub fn zero() -> Self {
        LiePoly::default()
    }

    pub fn generator(letter: Letter) -> Self {
        LiePoly {
            assoc: AssocPoly::letter(letter),
            basis: vec![(
                Coeff::one(),
                bracket_std(&Word::letter(letter)).expect("letter"),
            )],
        }
    }

    /// Certifies `f ∈ Lie(X)`; fails with [`Error::NotLie`] otherwise.
    pub fn from_assoc(f: AssocPoly) -> Result<Self> {
        let basis = lie_decompose(&f).ok_or(Error::NotLie)?;
        Ok(LiePoly { assoc: f, basis })
    }

    pub fn from_nlsw_terms(terms: impl IntoIterator<Item = (Coeff, NlswTree)>) -> Self {
        let mut comb = Combination::new();
        for (c, t) in terms {
            add_into(&mut comb, t.word().clone(), c);
        }
        Self::from_combination(comb)
    }

    fn from_combination(comb: Combination) -> Self {
        let basis = combination_to_trees(comb);
        let mut assoc = AssocPoly::zero();
        for (c, t) in &basis {
            assoc.add_scaled(c, &expand(t.tree()));
        }
        LiePoly { assoc, basis }
    }

    pub fn from_tree(t: &NonassocWord) -> Self {
        LiePoly {
            assoc: expand(t),
            basis: rewrite_to_nlsw(t),
        }
    }

    pub fn nlsw(t: &NlswTree) -> Self {
        LiePoly {
            assoc: expand(t.tree()),
            basis: vec![(Coeff::one(), t.clone())],
        }
    }

    pub fn assoc(&self) -> &AssocPoly {
        &self.assoc
    }

    pub fn into_assoc(self) -> AssocPoly {
        self.assoc
    }

    pub fn decomposition(&self) -> &[(Coeff, NlswTree)] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.assoc.is_zero()
    }

    /// The leading word is the leading NLSW's word.
    pub fn leading(&self) -> Option<(&Word, &Coeff)> {
        self.basis.first().map(|(c, t)| (t.word(), c))
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.leading().map(|(w, _)| w)
    }

    pub fn degree(&self) -> Option<usize> {
        self.leading_word().map(Word::len)
    }

    pub fn is_monic(&self) -> bool {
        matches!(self.leading(), Some((_, c)) if c.is_one())
    }

    pub fn monic(&self) -> Result<LiePoly> {
        let (_, lc) = self.leading().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&lc.recip()))
    }

    pub fn scale(&self, c: &Coeff) -> LiePoly {
        if c.is_zero() {
            return LiePoly::zero();
        }
        LiePoly {
            assoc: self.assoc.scale(c),
            basis: self.basis.iter().map(|(x, t)| (x * c, t.clone())).collect(),
        }
    }

    fn combination(&self) -> Combination {
        self.basis
            .iter()
            .map(|(c, t)| (t.word().clone(), c.clone()))
            .collect()
    }

    pub fn add_scaled(&self, c: &Coeff, other: &LiePoly) -> LiePoly {
        let mut comb = self.combination();
        for (x, t) in &other.basis {
            add_into(&mut comb, t.word().clone(), x * c);
        }
        let mut assoc = self.assoc.clone();
        assoc.add_scaled(c, &other.assoc);
        LiePoly {
            assoc,
            basis: combination_to_trees(comb),
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayPoly {
            terms: self
                .basis
                .iter()
                .map(|(c, t)| (c.clone(), t.display(alphabet).to_string(), false))
                .collect(),
        }
    }
}

impl fmt::Debug for LiePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .basis
            .iter()
            .map(|(c, t)| (c.clone(), format!("{t:?}"), false))
            .collect();
        write!(f, "{}", DisplayPoly { terms })
    }
}

impl Add for &LiePoly {
    type Output = LiePoly;
    fn add(self, rhs: &LiePoly) -> LiePoly {
        self.add_scaled(&Coeff::one(), rhs)
    }
}

impl Sub for &LiePoly {
    type Output = LiePoly;
    fn sub(self, rhs: &LiePoly) -> LiePoly {
        self.add_scaled(&-Coeff::one(), rhs)
    }
}

impl Neg for &LiePoly {
    type Output = LiePoly;
    fn neg(self) -> LiePoly {
        self.scale(&-Coeff::one())
    }
}

/// `(fg) = fg - gf`, decomposed afresh in the NLSW basis.
pub fn lie_bracket(f: &LiePoly, g: &LiePoly) -> LiePoly {
    let assoc = AssocPoly::commutator(&f.assoc, &g.assoc);
    LiePoly::from_assoc(assoc).expect("Lie(X) is closed under the bracket")
}

/// Expansion of the standard bracketing of an ALSW given as a slice.
pub(crate) fn expand_std(u: &[Letter]) -> AssocPoly {
    expand(&std_tree(u))
}
