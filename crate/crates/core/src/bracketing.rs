//! Nonassociative words, NLSW trees and the bracketings of Lyndon-Shirshov words.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::poly::{AssocPoly, Coeff, LiePoly};
use crate::words::{
    compare_shirshov_lex, is_lyndon_shirshov, lyndon_factorize, split_standard, Letter, Word,
};

/// A binary bracketing over letters (an element of `X**`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum NonassocWord {
    Leaf(Letter),
    Node(Box<NonassocWord>, Box<NonassocWord>),
}

impl NonassocWord {
    pub fn leaf(letter: Letter) -> Self {
        NonassocWord::Leaf(letter)
    }

    pub fn node(left: NonassocWord, right: NonassocWord) -> Self {
        NonassocWord::Node(Box::new(left), Box::new(right))
    }

    /// Left-normed bracketing `[[[t1 t2] t3] ... tn]`.
    pub fn left_normed(mut items: impl Iterator<Item = NonassocWord>) -> Option<Self> {
        let first = items.next()?;
        Some(items.fold(first, NonassocWord::node))
    }

    /// The underlying associative word (in-order leaves).
    pub fn word(&self) -> Word {
        let mut letters = Vec::new();
        self.collect_leaves(&mut letters);
        Word::new(letters)
    }

    fn collect_leaves(&self, out: &mut Vec<Letter>) {
        match self {
            NonassocWord::Leaf(l) => out.push(*l),
            NonassocWord::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            NonassocWord::Leaf(_) => 1,
            NonassocWord::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayTree {
            tree: self,
            alphabet: Some(alphabet),
        }
    }
}

struct DisplayTree<'a> {
    tree: &'a NonassocWord,
    alphabet: Option<&'a Alphabet>,
}

impl fmt::Display for DisplayTree<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tree {
            NonassocWord::Leaf(l) => match self.alphabet {
                Some(a) => f.write_str(a.name(*l)),
                None => write!(f, "x{}", l + 1),
            },
            NonassocWord::Node(l, r) => {
                let l = DisplayTree {
                    tree: l,
                    alphabet: self.alphabet,
                };
                let r = DisplayTree {
                    tree: r,
                    alphabet: self.alphabet,
                };
                write!(f, "[{l} {r}]")
            }
        }
    }
}

impl fmt::Debug for NonassocWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            DisplayTree {
                tree: self,
                alphabet: None
            }
        )
    }
}

/// A nonassociative Lyndon-Shirshov word.
///
/// Only constructible through [`bracket_std`], [`bracket_down_up`] or a
/// checked conversion, so the tree always satisfies the NLSW conditions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NlswTree {
    tree: NonassocWord,
    word: Word,
}

impl NlswTree {
    pub fn tree(&self) -> &NonassocWord {
        &self.tree
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn into_tree(self) -> NonassocWord {
        self.tree
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        self.tree.display(alphabet)
    }
}

impl TryFrom<NonassocWord> for NlswTree {
    type Error = Error;

    fn try_from(tree: NonassocWord) -> Result<Self> {
        if is_nlsw(&tree) {
            let word = tree.word();
            Ok(NlswTree { tree, word })
        } else {
            Err(Error::NotAlsw(tree.word()))
        }
    }
}

impl fmt::Debug for NlswTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.tree)
    }
}

/// Up-to-down bracketing: `[u] = [[v][w]]` with `w` the longest proper ALSW suffix.
pub fn bracket_std(u: &Word) -> Result<NlswTree> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !is_lyndon_shirshov(u.letters()) {
        return Err(Error::NotAlsw(u.clone()));
    }
    Ok(NlswTree {
        tree: std_tree(u.letters()),
        word: u.clone(),
    })
}

/// Standard bracketing of a slice already known to be Lyndon-Shirshov.
pub(crate) fn std_tree(u: &[Letter]) -> NonassocWord {
    if u.len() == 1 {
        return NonassocWord::Leaf(u[0]);
    }
    let (v, w) = split_standard(u);
    NonassocWord::node(std_tree(v.letters()), std_tree(w.letters()))
}

/// Down-to-up bracketing by Shirshov elimination carried out on trees.
pub fn bracket_down_up(u: &Word) -> Result<NlswTree> {
    let trace = bracket_down_up_trace(u)?;
    let last = trace.last().expect("trace starts with the letters of u");
    debug_assert_eq!(last.len(), 1);
    Ok(NlswTree {
        tree: last[0].clone(),
        word: u.clone(),
    })
}

/// Every step of the down-to-up procedure. A step joins each occurrence of
/// the minimal token to the token before it, unless that one is minimal too;
/// tokens are ordered lexicographically by their words.
pub fn bracket_down_up_trace(u: &Word) -> Result<Vec<Vec<NonassocWord>>> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !is_lyndon_shirshov(u.letters()) {
        return Err(Error::NotAlsw(u.clone()));
    }
    let mut tokens: Vec<(NonassocWord, Word)> = u
        .letters()
        .iter()
        .map(|&l| (NonassocWord::Leaf(l), Word::letter(l)))
        .collect();
    let mut trace = vec![tokens.iter().map(|(t, _)| t.clone()).collect::<Vec<_>>()];
    while tokens.len() > 1 {
        let min = tokens
            .iter()
            .map(|(_, w)| w)
            .min_by(|a, b| compare_shirshov_lex(a.letters(), b.letters()))
            .expect("nonempty")
            .clone();
        let tokens_len = tokens.len();
        let mut joined: Vec<(NonassocWord, Word)> = Vec::with_capacity(tokens_len);
        let mut prev_is_min = true;
        for (tree, word) in tokens {
            let is_min = word == min;
            if is_min && !prev_is_min {
                let (acc, acc_word) = joined.last_mut().expect("a non-minimal token precedes");
                let left = std::mem::replace(acc, NonassocWord::Leaf(0));
                *acc = NonassocWord::node(left, tree);
                *acc_word = acc_word.concat(&word);
            } else {
                joined.push((tree, word));
            }
            prev_is_min = is_min;
        }
        if joined.len() == tokens_len {
            return Err(Error::NotAlsw(u.clone()));
        }
        tokens = joined;
        trace.push(tokens.iter().map(|(t, _)| t.clone()).collect());
    }
    Ok(trace)
}

/// Checks the three NLSW conditions: the word is an ALSW, both children are
/// NLSWs, and for `((v1 v2) w)` we have `v2 <= w`.
pub fn is_nlsw(t: &NonassocWord) -> bool {
    nlsw_word(t).is_some()
}

fn nlsw_word(t: &NonassocWord) -> Option<Word> {
    match t {
        NonassocWord::Leaf(l) => Some(Word::letter(*l)),
        NonassocWord::Node(left, right) => {
            let v = nlsw_word(left)?;
            let w = nlsw_word(right)?;
            if let NonassocWord::Node(_, v2) = left.as_ref() {
                if compare_shirshov_lex(v2.word().letters(), w.letters()) == Ordering::Greater {
                    return None;
                }
            }
            let u = v.concat(&w);
            is_lyndon_shirshov(u.letters()).then_some(u)
        }
    }
}

/// A bracketing with one marked slot standing for a fixed subword.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum SlotTree {
    Letter(Letter),
    Slot,
    Node(Box<SlotTree>, Box<SlotTree>),
}

impl SlotTree {
    fn node(l: SlotTree, r: SlotTree) -> Self {
        SlotTree::Node(Box::new(l), Box::new(r))
    }

    fn from_tree(t: &NonassocWord) -> Self {
        match t {
            NonassocWord::Leaf(l) => SlotTree::Letter(*l),
            NonassocWord::Node(l, r) => SlotTree::node(Self::from_tree(l), Self::from_tree(r)),
        }
    }

    /// Replaces the slot by `fill`.
    pub fn fill(&self, fill: &NonassocWord) -> NonassocWord {
        match self {
            SlotTree::Letter(l) => NonassocWord::Leaf(*l),
            SlotTree::Slot => fill.clone(),
            SlotTree::Node(l, r) => NonassocWord::node(l.fill(fill), r.fill(fill)),
        }
    }

    fn has_slot(&self) -> bool {
        match self {
            SlotTree::Letter(_) => false,
            SlotTree::Slot => true,
            SlotTree::Node(l, r) => l.has_slot() || r.has_slot(),
        }
    }

    /// Expands the commutators treating the slot as a formal letter that
    /// occurs exactly once. Returns `(a, b) -> α` meaning `Σ α·a·[slot]·b`.
    fn expand_contexts(&self) -> HashMap<(Word, Word), Coeff> {
        match self {
            SlotTree::Letter(_) => HashMap::new(),
            SlotTree::Slot => HashMap::from([(
                (Word::empty(), Word::empty()),
                Coeff::from_integer(1.into()),
            )]),
            SlotTree::Node(l, r) => {
                let (ctx, plain, slot_left) = if l.has_slot() {
                    (l.expand_contexts(), r.expand_plain(), true)
                } else {
                    (r.expand_contexts(), l.expand_plain(), false)
                };
                let mut out: HashMap<(Word, Word), Coeff> = HashMap::new();
                for ((a, b), alpha) in &ctx {
                    for (m, beta) in plain.terms() {
                        let prod = alpha * beta;
                        // slot side times plain side minus plain side times slot side
                        let (right_mul, left_mul) = if slot_left {
                            (prod.clone(), -prod)
                        } else {
                            (-prod.clone(), prod)
                        };
                        *out.entry((a.clone(), b.concat(m))).or_default() += right_mul;
                        *out.entry((m.concat(a), b.clone())).or_default() += left_mul;
                    }
                }
                out.retain(|_, c| *c != Coeff::from_integer(0.into()));
                out
            }
        }
    }

    fn expand_plain(&self) -> AssocPoly {
        match self {
            SlotTree::Letter(l) => AssocPoly::word(Word::letter(*l)),
            SlotTree::Slot => unreachable!("plain subtree has no slot"),
            SlotTree::Node(l, r) => AssocPoly::commutator(&l.expand_plain(), &r.expand_plain()),
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet, slot: &'a str) -> impl fmt::Display + 'a {
        DisplaySlotTree {
            tree: self,
            alphabet,
            slot,
        }
    }
}

struct DisplaySlotTree<'a> {
    tree: &'a SlotTree,
    alphabet: &'a Alphabet,
    slot: &'a str,
}

impl fmt::Display for DisplaySlotTree<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tree {
            SlotTree::Letter(l) => f.write_str(self.alphabet.name(*l)),
            SlotTree::Slot => f.write_str(self.slot),
            SlotTree::Node(l, r) => {
                let l = DisplaySlotTree { tree: l, ..*self };
                let r = DisplaySlotTree { tree: r, ..*self };
                write!(f, "[{l} {r}]")
            }
        }
    }
}

/// The special bracketing `[u]_v` of an ALSW `u = a v b` adapted to the ALSW
/// occurrence `v`: the sub-bracket `[v c]` of `[u]` is replaced by the
/// left-normed `[[[v][c1]] ... [ck]]`, with `c = c1 ... ck` the
/// nondecreasing Lyndon-Shirshov factorization and `b = c d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpecialBracketing {
    tree: SlotTree,
    a: Word,
    v: Word,
    c: Word,
    factors: Vec<Word>,
    d: Word,
}

/// One term `α · a · [slot] · b` of the expansion of a special bracketing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SlotContext {
    pub coeff: Coeff,
    pub left: Word,
    pub right: Word,
}

impl SpecialBracketing {
    pub fn tree(&self) -> &SlotTree {
        &self.tree
    }

    pub fn a(&self) -> &Word {
        &self.a
    }

    pub fn v(&self) -> &Word {
        &self.v
    }

    pub fn c(&self) -> &Word {
        &self.c
    }

    pub fn d(&self) -> &Word {
        &self.d
    }

    /// `b = c · d`
    pub fn b(&self) -> Word {
        self.c.concat(&self.d)
    }

    pub fn factors(&self) -> &[Word] {
        &self.factors
    }

    pub fn word(&self) -> Word {
        self.v.sandwich(&self.a, &self.b())
    }

    /// The relative NLSW: the slot filled with the standard bracketing of `v`.
    pub fn relative_nlsw(&self) -> NonassocWord {
        self.tree.fill(&std_tree(self.v.letters()))
    }

    /// Expansion `Σ α·a_i·[slot]·b_i`, sorted by decreasing `a_i v b_i` in deg-lex.
    pub fn contexts(&self) -> Vec<SlotContext> {
        let mut out: Vec<SlotContext> = self
            .tree
            .expand_contexts()
            .into_iter()
            .map(|((left, right), coeff)| SlotContext { coeff, left, right })
            .collect();
        out.sort_by(|x, y| {
            let ux = self.v.sandwich(&x.left, &x.right);
            let uy = self.v.sandwich(&y.left, &y.right);
            uy.cmp(&ux).then_with(|| x.left.len().cmp(&y.left.len()))
        });
        out
    }

    /// Substitutes the polynomial `p` for the slot and expands.
    pub fn substitute(&self, p: &AssocPoly) -> AssocPoly {
        let mut out = AssocPoly::zero();
        for ctx in self.tree.expand_contexts().into_iter() {
            let ((a, b), alpha) = ctx;
            out.add_scaled_sandwich(&alpha, &a, p, &b);
        }
        out
    }
}

/// Builds `[u]_v` for the occurrence `u = a v b`.
pub fn special_bracket(u: &Word, a: &Word, v: &Word, b: &Word) -> Result<SpecialBracketing> {
    if v.sandwich(a, b) != *u {
        return Err(Error::InvalidOccurrence(format!(
            "{a:?}·{v:?}·{b:?} does not spell {u:?}"
        )));
    }
    if !is_lyndon_shirshov(u.letters()) {
        return Err(Error::NotAlsw(u.clone()));
    }
    if !is_lyndon_shirshov(v.letters()) {
        return Err(Error::NotAlsw(v.clone()));
    }
    let std = std_tree(u.letters());
    let start = a.len();
    let stop = start + v.len();
    let (tree, end) = replace_enclosing(&std, 0, start, stop, v)?;
    let c = u.slice(stop, end);
    let d = u.slice(end, u.len());
    let factors = if c.is_empty() {
        Vec::new()
    } else {
        lyndon_factorize(&c)?
    };
    let tree = tree.unwrap_or(SlotTree::Slot);
    let tree = substitute_marker(tree, &factors);
    Ok(SpecialBracketing {
        tree,
        a: a.clone(),
        v: v.clone(),
        c,
        factors,
        d,
    })
}

/// Descends `t` (whose leaves start at `offset`) to the minimal node covering
/// `[start, stop)`. That node must begin at `start`; it is replaced by the
/// slot marker. Returns the rewritten tree (None when `t` itself is the node)
/// and the end of the node's leaf span.
fn replace_enclosing(
    t: &NonassocWord,
    offset: usize,
    start: usize,
    stop: usize,
    v: &Word,
) -> Result<(Option<SlotTree>, usize)> {
    let span = t.leaf_count();
    if let NonassocWord::Node(l, r) = t {
        let mid = offset + l.leaf_count();
        if stop <= mid {
            let (inner, end) = replace_enclosing(l, offset, start, stop, v)?;
            let left = inner.unwrap_or(SlotTree::Slot);
            return Ok((Some(SlotTree::node(left, SlotTree::from_tree(r))), end));
        }
        if start >= mid {
            let (inner, end) = replace_enclosing(r, mid, start, stop, v)?;
            let right = inner.unwrap_or(SlotTree::Slot);
            return Ok((Some(SlotTree::node(SlotTree::from_tree(l), right)), end));
        }
    }
    if offset != start {
        return Err(Error::InvalidOccurrence(format!(
            "no sub-bracket of the standard bracketing starts at the occurrence of {v:?}"
        )));
    }
    Ok((None, offset + span))
}

/// Replaces the slot marker (standing for `[v c]`) by `[[[slot][c1]] ... [ck]]`.
fn substitute_marker(tree: SlotTree, factors: &[Word]) -> SlotTree {
    match tree {
        SlotTree::Slot => factors.iter().fold(SlotTree::Slot, |acc, c| {
            SlotTree::node(acc, SlotTree::from_tree(&std_tree(c.letters())))
        }),
        SlotTree::Node(l, r) => SlotTree::node(
            substitute_marker(*l, factors),
            substitute_marker(*r, factors),
        ),
        leaf => leaf,
    }
}

fn check_normal_s_word(s: &LiePoly, a: &Word, b: &Word) -> Result<Word> {
    let (lead, coeff) = s.leading().ok_or(Error::ZeroPolynomial)?;
    if *coeff != Coeff::from_integer(1.into()) {
        return Err(Error::NotMonic);
    }
    let u = lead.sandwich(a, b);
    if !is_lyndon_shirshov(u.letters()) {
        return Err(Error::NotAlsw(u));
    }
    Ok(u)
}

/// The normal s-word `[a s b]_{s̄}`: the special bracketing of `a·s̄·b`
/// with `s` substituted for the slot.
pub fn normal_s_word(s: &LiePoly, a: &Word, b: &Word) -> Result<LiePoly> {
    let assoc = normal_s_word_assoc(s, a, b)?;
    LiePoly::from_assoc(assoc)
}

/// As [`normal_s_word`] without recomputing the NLSW decomposition.
pub fn normal_s_word_assoc(s: &LiePoly, a: &Word, b: &Word) -> Result<AssocPoly> {
    let u = check_normal_s_word(s, a, b)?;
    let lead = s.leading().expect("checked nonzero").0.clone();
    let special = special_bracket(&u, a, &lead, b)?;
    Ok(special.substitute(s.assoc()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::expand;
    use crate::text::parse_nonassoc;

    fn alpha() -> Alphabet {
        Alphabet::standard(5)
    }

    fn w(s: &str) -> Word {
        alpha().parse_word(s).unwrap()
    }

    fn tree(s: &str) -> NonassocWord {
        parse_nonassoc(s, &alpha()).unwrap()
    }

    fn show(t: &NonassocWord) -> String {
        t.display(&alpha()).to_string()
    }

    #[test]
    fn standard_bracketing_examples() {
        let a = alpha();
        assert_eq!(
            bracket_std(&w("x2x2x1x1x2x1"))
                .unwrap()
                .display(&a)
                .to_string(),
            "[[x2 [[x2 x1] x1]] [x2 x1]]"
        );
        assert_eq!(show(bracket_std(&w("x1")).unwrap().tree()), "x1");
        assert_eq!(
            show(bracket_std(&w("x2x1x1")).unwrap().tree()),
            "[[x2 x1] x1]"
        );
        assert!(matches!(bracket_std(&w("x1x2")), Err(Error::NotAlsw(_))));
    }

    #[test]
    fn down_up_examples() {
        assert_eq!(
            show(bracket_down_up(&w("x2x2x1x1x2x1")).unwrap().tree()),
            "[[x2 [[x2 x1] x1]] [x2 x1]]"
        );
        assert_eq!(show(bracket_down_up(&w("x2x1")).unwrap().tree()), "[x2 x1]");
        assert_eq!(
            show(bracket_down_up(&w("x2x2x1")).unwrap().tree()),
            "[x2 [x2 x1]]"
        );
    }

    #[test]
    fn down_up_trace_rounds() {
        let trace = bracket_down_up_trace(&w("x2x2x1x1x2x1")).unwrap();
        let rounds: Vec<String> = trace
            .iter()
            .map(|r| r.iter().map(show).collect::<Vec<_>>().join(" "))
            .collect();
        assert_eq!(
            rounds,
            [
                "x2 x2 x1 x1 x2 x1",
                "x2 [x2 x1] x1 [x2 x1]",
                "x2 [[x2 x1] x1] [x2 x1]",
                "[x2 [[x2 x1] x1]] [x2 x1]",
                "[[x2 [[x2 x1] x1]] [x2 x1]]",
            ]
        );
    }

    #[test]
    fn nlsw_examples() {
        assert!(is_nlsw(&tree("[[x2 x1] x1]")));
        assert!(!is_nlsw(&tree("[x2 [x1 x1]]")));
        assert!(!is_nlsw(&tree("[x1 x2]")));
        // condition (iii): [[x3 x2] x2x1]... v2 = x2 > x2x1 fails
        assert!(!is_nlsw(&tree("[[x3 x2] [x2 x1]]")));
        assert!(is_nlsw(&tree("[x3 [x2 [x2 x1]]]")));
        assert_eq!(
            bracket_std(&w("x3x2x2x1")).unwrap().tree(),
            &tree("[x3 [x2 [x2 x1]]]")
        );
        assert!(NlswTree::try_from(tree("[x1 x2]")).is_err());
    }

    #[test]
    fn special_bracket_whole_word() {
        let u = w("x3x2x1");
        let sb = special_bracket(&u, &Word::empty(), &u, &Word::empty()).unwrap();
        assert_eq!(sb.relative_nlsw(), bracket_std(&u).unwrap().tree().clone());
        assert!(sb.c().is_empty() && sb.d().is_empty());
    }

    #[test]
    fn special_bracket_examples() {
        let sb = special_bracket(&w("x3x2x1x1"), &Word::empty(), &w("x3x2"), &w("x1x1")).unwrap();
        assert_eq!(sb.c(), &w("x1x1"));
        assert!(sb.d().is_empty());
        assert_eq!(sb.factors(), &[w("x1"), w("x1")]);
        assert_eq!(show(&sb.relative_nlsw()), "[[[x3 x2] x1] x1]");

        let sb = special_bracket(&w("x2x2x1x1"), &w("x2"), &w("x2x1"), &w("x1")).unwrap();
        assert_eq!(show(&sb.relative_nlsw()), "[x2 [[x2 x1] x1]]");
        assert_eq!(
            sb.relative_nlsw(),
            bracket_std(&w("x2x2x1x1")).unwrap().tree().clone()
        );
    }

    #[test]
    fn special_bracket_errors() {
        assert!(matches!(
            special_bracket(&w("x3x2x1"), &w("x3"), &w("x2"), &w("x2")),
            Err(Error::InvalidOccurrence(_))
        ));
        assert!(matches!(
            special_bracket(&w("x1x2"), &Word::empty(), &w("x1"), &w("x2")),
            Err(Error::NotAlsw(_))
        ));
        assert!(matches!(
            special_bracket(&w("x3x1x2"), &w("x3"), &w("x1x2"), &Word::empty()),
            Err(Error::NotAlsw(_))
        ));
    }

    #[test]
    fn normal_s_word_examples() {
        let s = LiePoly::from_tree(&tree("[x2 x1]"));
        let same = normal_s_word(&s, &Word::empty(), &Word::empty()).unwrap();
        assert_eq!(same, s);

        let right = normal_s_word(&s, &Word::empty(), &w("x1")).unwrap();
        assert_eq!(right.assoc(), &expand(&tree("[[x2 x1] x1]")));
        let a = alpha();
        assert_eq!(
            right.assoc().display(&a).to_string(),
            "x2x1x1 - 2 * x1x2x1 + x1x1x2"
        );

        let left = normal_s_word(&s, &w("x2"), &Word::empty()).unwrap();
        assert_eq!(left.assoc(), &expand(&tree("[x2 [x2 x1]]")));
        assert_eq!(left.leading().unwrap().0, &w("x2x2x1"));

        assert!(matches!(
            normal_s_word(&s, &w("x1"), &Word::empty()),
            Err(Error::NotAlsw(_))
        ));
        let twice = s.scale(&Coeff::from_integer(2.into()));
        assert_eq!(
            normal_s_word(&twice, &Word::empty(), &w("x1")),
            Err(Error::NotMonic)
        );
    }
}
