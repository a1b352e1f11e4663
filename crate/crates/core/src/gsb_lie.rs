//! Lie compositions through normal s-words, Lie reduction, completion in
//! `Lie(X)` and the comparison with the associative criterion.

use std::collections::BTreeMap;

use num_traits::One;

use crate::alphabet::Alphabet;
use crate::bracketing::{bracket_std, normal_s_word_assoc, NlswTree};
use crate::completion::{self, CompletionOptions, Engine, GsbState, Overlap, OverlapKind};
use crate::error::{Error, Result};
use crate::gsb_assoc::{is_gsb_assoc, Composition};
use crate::poly::{expand_std, AssocPoly, Coeff, LiePoly};
use crate::words::{enumerate_alsw, is_lyndon_shirshov, Word};

fn require_monic(f: &LiePoly) -> Result<()> {
    if f.is_zero() {
        Err(Error::ZeroPolynomial)
    } else if !f.is_monic() {
        Err(Error::NotMonic)
    } else {
        Ok(())
    }
}

fn lie_composition(f: &LiePoly, g: &LiePoly, ov: &Overlap) -> Result<AssocPoly> {
    let empty = Word::empty();
    let one = Coeff::one();
    let mut h = AssocPoly::zero();
    match ov.kind {
        OverlapKind::Inclusion => {
            h.add_scaled(&one, f.assoc());
            h.add_scaled(&-one, &normal_s_word_assoc(g, &ov.a, &ov.b)?);
        }
        OverlapKind::Intersection => {
            h.add_scaled(&one, &normal_s_word_assoc(f, &empty, &ov.b)?);
            h.add_scaled(&-one, &normal_s_word_assoc(g, &ov.a, &empty)?);
        }
    }
    Ok(h)
}

/// All Lie compositions `<f, g>_w`. When `f == g` the trivial inclusion is
/// left out.
pub fn compositions_lie(f: &LiePoly, g: &LiePoly) -> Result<Vec<Composition<LiePoly>>> {
    require_monic(f)?;
    require_monic(g)?;
    let (fl, gl) = (f.leading_word().unwrap(), g.leading_word().unwrap());
    completion::overlaps(fl, gl, f == g)
        .into_iter()
        .map(|overlap| {
            let poly = LiePoly::from_assoc(lie_composition(f, g, &overlap)?)?;
            Ok(Composition { overlap, poly })
        })
        .collect()
}

/// One subtraction `coeff · [a s b]_{s̄}` made during [`lie_reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UsedRelation {
    pub coeff: Coeff,
    pub relation: usize,
    pub a: Word,
    pub b: Word,
}

/// Record of a Lie reduction:
/// `h = Σ irreducible + Σ coeff · [a s_relation b]_{s̄}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieReduction {
    pub irreducible: Vec<(Coeff, NlswTree)>,
    pub used: Vec<UsedRelation>,
}

impl LieReduction {
    pub fn normal_form(&self) -> LiePoly {
        LiePoly::from_nlsw_terms(self.irreducible.iter().cloned())
    }

    pub fn is_zero(&self) -> bool {
        self.irreducible.is_empty()
    }
}

fn find_divisor(w: &Word, rels: &[&LiePoly]) -> Option<(usize, usize)> {
    rels.iter().enumerate().find_map(|(i, s)| {
        let lead = s.leading_word()?;
        w.occurrences(lead).first().map(|&p| (i, p))
    })
}

/// Peels off the leading term of `h` one step at a time: by a normal s-word
/// when the leading word is reducible, by its standard bracketing otherwise.
fn reduce_refs(h: &AssocPoly, rels: &[&LiePoly], record: bool) -> Result<LieReduction> {
    let mut rest = h.clone();
    let mut irreducible = Vec::new();
    let mut used = Vec::new();
    while let Some((w, c)) = rest.leading().map(|(w, c)| (w.clone(), c.clone())) {
        if !is_lyndon_shirshov(w.letters()) {
            return Err(Error::NotLie);
        }
        match find_divisor(&w, rels) {
            Some((i, pos)) => {
                let s = rels[i];
                let len = s.leading_word().expect("nonzero relation").len();
                let (a, b) = (w.slice(0, pos), w.slice(pos + len, w.len()));
                let sw = normal_s_word_assoc(s, &a, &b)?;
                rest.add_scaled(&-c.clone(), &sw);
                if record {
                    used.push(UsedRelation {
                        coeff: c,
                        relation: i,
                        a,
                        b,
                    });
                }
            }
            None => {
                rest.add_scaled(&-c.clone(), &expand_std(w.letters()));
                irreducible.push((c, bracket_std(&w).expect("checked ALSW")));
            }
        }
    }
    Ok(LieReduction { irreducible, used })
}

/// Reduction of `h` modulo monic `rels` by normal s-words, recording every
/// step. The irreducible part is a combination of NLSWs on words avoiding
/// all leading words of `rels`.
pub fn lie_reduce(h: &LiePoly, rels: &[LiePoly]) -> Result<LieReduction> {
    for s in rels {
        require_monic(s)?;
    }
    let refs: Vec<&LiePoly> = rels.iter().collect();
    reduce_refs(h.assoc(), &refs, true)
}

/// Rebuilds `h` from a reduction record.
pub fn reassemble(record: &LieReduction, rels: &[LiePoly]) -> Result<AssocPoly> {
    let mut h = record.normal_form().into_assoc();
    for u in &record.used {
        let s = rels
            .get(u.relation)
            .ok_or(Error::InvalidOccurrence(format!(
                "relation index {} out of range",
                u.relation
            )))?;
        h.add_scaled(&u.coeff, &normal_s_word_assoc(s, &u.a, &u.b)?);
    }
    Ok(h)
}

pub(crate) struct LieEngine;

impl Engine for LieEngine {
    type Rel = LiePoly;

    fn leading(rel: &LiePoly) -> &Word {
        rel.leading_word().expect("relations are nonzero")
    }

    fn assoc(rel: &LiePoly) -> &AssocPoly {
        rel.assoc()
    }

    fn composition(f: &LiePoly, g: &LiePoly, overlap: &Overlap) -> AssocPoly {
        lie_composition(f, g, overlap).expect("overlap words of ALSWs are ALSWs")
    }

    fn normal_form(h: &AssocPoly, rels: &[&LiePoly]) -> Option<LiePoly> {
        let r = reduce_refs(h, rels, false).expect("Lie input");
        if r.is_zero() {
            None
        } else {
            Some(r.normal_form().monic().expect("nonzero"))
        }
    }
}

pub type GsbStateLie = GsbState<LiePoly>;

/// Shirshov completion in `Lie(X)` processing compositions with `|w| ≤ degree_bound`.
pub fn complete_lie(rels: &[LiePoly], degree_bound: usize) -> Result<GsbStateLie> {
    complete_lie_with(rels, CompletionOptions::new(degree_bound))
}

pub fn complete_lie_with(rels: &[LiePoly], options: CompletionOptions) -> Result<GsbStateLie> {
    completion::complete::<LieEngine>(rels, options)
}

/// Lie compositions of `rels` with a nonzero normal form modulo `rels`.
pub fn nontrivial_compositions_lie(rels: &[LiePoly]) -> Result<Vec<Overlap>> {
    completion::nontrivial::<LieEngine>(rels)
}

/// Whether every Lie composition of `rels` lie-reduces to zero.
pub fn is_gsb_lie(rels: &[LiePoly]) -> Result<bool> {
    Ok(nontrivial_compositions_lie(rels)?.is_empty())
}

/// Standard bracketings of the ALSWs of length at most `max_deg` that avoid
/// every leading word of `rels`, in deg-lex order of the words.
pub fn red_nlsw(rels: &[LiePoly], alphabet: &Alphabet, max_deg: usize) -> Vec<NlswTree> {
    let leads: Vec<&Word> = rels.iter().filter_map(LiePoly::leading_word).collect();
    enumerate_alsw(alphabet, max_deg)
        .into_iter()
        .filter(|u| !leads.iter().any(|s| u.contains_factor(s)))
        .map(|u| bracket_std(&u).expect("enumerated ALSW"))
        .collect()
}

/// Number of [`red_nlsw`] elements per degree `1..=max_deg`.
pub fn red_nlsw_counts(rels: &[LiePoly], alphabet: &Alphabet, max_deg: usize) -> Vec<usize> {
    let mut counts: BTreeMap<usize, usize> = (1..=max_deg).map(|d| (d, 0)).collect();
    for t in red_nlsw(rels, alphabet, max_deg) {
        *counts.entry(t.len()).or_default() += 1;
    }
    counts.into_values().collect()
}

/// Outcome of testing one relation set as a Gröbner-Shirshov basis in both
/// `Lie(X)` and `Q<X>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub lie: bool,
    pub assoc: bool,
}

impl CrossCheck {
    pub fn agree(&self) -> bool {
        self.lie == self.assoc
    }
}

/// Runs [`is_gsb_lie`] and [`is_gsb_assoc`] on the same relations.
pub fn crosscheck_lie_assoc_gsb(rels: &[LiePoly]) -> Result<CrossCheck> {
    let assoc: Vec<AssocPoly> = rels.iter().map(|s| s.assoc().clone()).collect();
    Ok(CrossCheck {
        lie: is_gsb_lie(rels)?,
        assoc: is_gsb_assoc(&assoc)?,
    })
}
