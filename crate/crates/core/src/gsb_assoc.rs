//! Compositions, reduction and degree-bounded completion in `Q<X>`.

use crate::alphabet::Alphabet;
use crate::completion::{self, CompletionOptions, Engine, GsbState, Overlap, OverlapKind};
use crate::error::{Error, Result};
use crate::poly::{AssocPoly, Coeff};
use crate::words::{all_words, Word};

/// A composition `(f, g)_w` together with the overlap that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition<P> {
    pub overlap: Overlap,
    pub poly: P,
}

impl<P> Composition<P> {
    pub fn word(&self) -> &Word {
        &self.overlap.word
    }
}

fn require_monic(f: &AssocPoly) -> Result<()> {
    if f.is_zero() {
        Err(Error::ZeroPolynomial)
    } else if !f.is_monic() {
        Err(Error::NotMonic)
    } else {
        Ok(())
    }
}

fn assoc_composition(f: &AssocPoly, g: &AssocPoly, ov: &Overlap) -> AssocPoly {
    let one = Coeff::from_integer(1.into());
    let empty = Word::empty();
    let mut h = AssocPoly::zero();
    match ov.kind {
        OverlapKind::Inclusion => {
            h.add_scaled(&one, f);
            h.add_scaled_sandwich(&-one, &ov.a, g, &ov.b);
        }
        OverlapKind::Intersection => {
            h.add_scaled_sandwich(&one, &empty, f, &ov.b);
            h.add_scaled_sandwich(&-one, &ov.a, g, &empty);
        }
    }
    h
}

/// All intersection and inclusion compositions of `f` with `g`.
/// When `f == g` the trivial inclusion of `f̄` in itself is left out.
pub fn compositions_assoc(f: &AssocPoly, g: &AssocPoly) -> Result<Vec<Composition<AssocPoly>>> {
    require_monic(f)?;
    require_monic(g)?;
    let (fl, gl) = (f.leading_word().unwrap(), g.leading_word().unwrap());
    Ok(completion::overlaps(fl, gl, f == g)
        .into_iter()
        .map(|overlap| Composition {
            poly: assoc_composition(f, g, &overlap),
            overlap,
        })
        .collect())
}

/// First relation (in order) whose leading word occurs in `w`, with the
/// leftmost occurrence.
fn find_divisor(w: &Word, rels: &[&AssocPoly]) -> Option<(usize, usize)> {
    rels.iter().enumerate().find_map(|(i, s)| {
        let lead = s.leading_word()?;
        w.occurrences(lead).first().map(|&p| (i, p))
    })
}

fn reduce_refs(h: &AssocPoly, rels: &[&AssocPoly]) -> AssocPoly {
    let mut rest = h.clone();
    let mut out = AssocPoly::zero();
    while let Some((w, c)) = rest.pop_leading() {
        match find_divisor(&w, rels) {
            Some((i, pos)) => {
                let s = rels[i];
                let mut tail = s.clone();
                let (lead, lc) = tail.pop_leading().expect("nonzero relation");
                let (a, b) = (w.slice(0, pos), w.slice(pos + lead.len(), w.len()));
                // the leading term cancels exactly; only the tail is added
                rest.add_scaled_sandwich(&-(c / lc), &a, &tail, &b);
            }
            None => out.add_term(w, c),
        }
    }
    out
}

/// Full reduction of `h` modulo monic `rels`: the result is supported on
/// words containing no leading word of `rels`.
pub fn reduce_assoc(h: &AssocPoly, rels: &[AssocPoly]) -> AssocPoly {
    let refs: Vec<&AssocPoly> = rels.iter().filter(|s| !s.is_zero()).collect();
    reduce_refs(h, &refs)
}

/// A reducible spot in a word: relation index and start of the occurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Redex {
    pub relation: usize,
    pub position: usize,
}

/// Reduction with a caller-chosen rewrite order. At each step `choose`
/// receives the current polynomial and every available redex (term word
/// plus occurrence) and picks one by index.
pub fn reduce_assoc_with<F>(h: &AssocPoly, rels: &[AssocPoly], mut choose: F) -> AssocPoly
where
    F: FnMut(&AssocPoly, &[(Word, Redex)]) -> usize,
{
    let mut h = h.clone();
    loop {
        let mut redexes = Vec::new();
        for w in h.support() {
            for (i, s) in rels.iter().enumerate() {
                if let Some(lead) = s.leading_word() {
                    for position in w.occurrences(lead) {
                        redexes.push((
                            w.clone(),
                            Redex {
                                relation: i,
                                position,
                            },
                        ));
                    }
                }
            }
        }
        if redexes.is_empty() {
            return h;
        }
        let pick = choose(&h, &redexes).min(redexes.len() - 1);
        let (w, redex) = &redexes[pick];
        let s = &rels[redex.relation];
        let len = s.leading_word().unwrap().len();
        let a = w.slice(0, redex.position);
        let b = w.slice(redex.position + len, w.len());
        let c = h.coeff(w) / s.leading().unwrap().1;
        h.add_scaled_sandwich(&-c, &a, s, &b);
    }
}

pub(crate) struct AssocEngine;

impl Engine for AssocEngine {
    type Rel = AssocPoly;

    fn leading(rel: &AssocPoly) -> &Word {
        rel.leading_word().expect("relations are nonzero")
    }

    fn assoc(rel: &AssocPoly) -> &AssocPoly {
        rel
    }

    fn composition(f: &AssocPoly, g: &AssocPoly, overlap: &Overlap) -> AssocPoly {
        assoc_composition(f, g, overlap)
    }

    fn normal_form(h: &AssocPoly, rels: &[&AssocPoly]) -> Option<AssocPoly> {
        let r = reduce_refs(h, rels);
        if r.is_zero() {
            None
        } else {
            Some(r.monic().expect("nonzero"))
        }
    }
}

pub type GsbStateAssoc = GsbState<AssocPoly>;

/// Shirshov completion of `rels` processing compositions with `|w| ≤ degree_bound`.
pub fn complete_assoc(rels: &[AssocPoly], degree_bound: usize) -> Result<GsbStateAssoc> {
    complete_assoc_with(rels, CompletionOptions::new(degree_bound))
}

pub fn complete_assoc_with(
    rels: &[AssocPoly],
    options: CompletionOptions,
) -> Result<GsbStateAssoc> {
    completion::complete::<AssocEngine>(rels, options)
}

/// Compositions of `rels` that do not reduce to zero modulo `rels`.
pub fn nontrivial_compositions_assoc(rels: &[AssocPoly]) -> Result<Vec<Overlap>> {
    completion::nontrivial::<AssocEngine>(rels)
}

/// Whether every composition of `rels` reduces to zero modulo `rels`.
pub fn is_gsb_assoc(rels: &[AssocPoly]) -> Result<bool> {
    Ok(nontrivial_compositions_assoc(rels)?.is_empty())
}

/// Words of length at most `max_len` avoiding every leading word of `rels`,
/// in deg-lex order, starting with the empty word.
pub fn red_words(rels: &[AssocPoly], alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
    let leads: Vec<&Word> = rels.iter().filter_map(AssocPoly::leading_word).collect();
    let mut out = Vec::new();
    for len in 0..=max_len {
        for w in all_words(alphabet.len(), len) {
            if !leads.iter().any(|s| w.contains_factor(s)) {
                out.push(w);
            }
        }
    }
    out
}

/// Whether `h` reduces to zero; decides ideal membership when `gsb` is a
/// Gröbner-Shirshov basis.
pub fn in_ideal_assoc(h: &AssocPoly, gsb: &[AssocPoly]) -> bool {
    reduce_assoc(h, gsb).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_assoc;

    fn alpha() -> Alphabet {
        Alphabet::standard(2)
    }

    fn p(s: &str) -> AssocPoly {
        parse_assoc(s, &alpha()).unwrap()
    }

    fn w(s: &str) -> Word {
        alpha().parse_word(s).unwrap()
    }

    #[test]
    fn composition_examples() {
        let comm = p("x2x1 - x1x2");
        assert!(compositions_assoc(&comm, &comm).unwrap().is_empty());

        let idem = p("x1x1 - x1");
        let c = compositions_assoc(&idem, &idem).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].word(), &w("x1x1x1"));
        assert!(c[0].poly.is_zero());

        let c = compositions_assoc(&p("x2x1x1 - x1"), &idem).unwrap();
        let inc: Vec<_> = c
            .iter()
            .filter(|c| c.overlap.kind == OverlapKind::Inclusion)
            .collect();
        assert_eq!(inc.len(), 1);
        assert_eq!(inc[0].word(), &w("x2x1x1"));
        assert_eq!(inc[0].poly, p("x2x1 - x1"));

        assert_eq!(compositions_assoc(&p("2 x1"), &idem), Err(Error::NotMonic));
    }

    #[test]
    fn reduction_examples() {
        let comm = p("x2x1 - x1x2");
        assert!(reduce_assoc(&comm, std::slice::from_ref(&comm)).is_zero());
        assert_eq!(
            reduce_assoc(&p("x2x1"), std::slice::from_ref(&comm)),
            p("x1x2")
        );
        let irr = p("x1x2 + 3 x2x2");
        assert_eq!(reduce_assoc(&irr, std::slice::from_ref(&comm)), irr);
        assert_eq!(
            reduce_assoc(&p("x2x2x1x1"), std::slice::from_ref(&comm)),
            p("x1x1x2x2")
        );
        let first = reduce_assoc_with(&p("x2x2x1x1"), std::slice::from_ref(&comm), |_, r| {
            r.len() - 1
        });
        assert_eq!(first, p("x1x1x2x2"));
    }

    #[test]
    fn completion_examples() {
        let comm = p("x2x1 - x1x2");
        let st = complete_assoc(std::slice::from_ref(&comm), 6).unwrap();
        assert!(st.is_complete());
        assert_eq!(st.relations(), &[comm]);

        let idem = p("x1x1 - x1");
        let st = complete_assoc(std::slice::from_ref(&idem), 6).unwrap();
        assert!(st.is_complete());
        assert_eq!(st.relations(), std::slice::from_ref(&idem));

        let s = [p("x2x1x1 - x1"), idem.clone()];
        assert!(!is_gsb_assoc(&s).unwrap());
        let st = complete_assoc(&s, 8).unwrap();
        assert!(st.is_complete());
        assert!(is_gsb_assoc(st.relations()).unwrap());
        // x2x1 - x1 makes x2x1x1 - x1 reducible to zero
        assert_eq!(st.relations(), &[idem, p("x2x1 - x1")]);

        assert_eq!(
            complete_assoc(&[p("x2x1x1 - x1")], 2).unwrap_err(),
            Error::DegreeBoundTooSmall {
                bound: 2,
                degree: 3
            }
        );
    }

    #[test]
    fn truncation_is_reported() {
        // x2x1 - x1x2 - x1 style relations stay finite; a self-overlapping
        // relation with a growing tail does not
        let s = [p("x2x1x2 - x1x1")];
        let st = complete_assoc(&s, 5).unwrap();
        if !st.is_complete() {
            assert_eq!(st.status().to_string(), "truncated degree=5");
            assert!(!st.pending().is_empty());
        }
    }

    #[test]
    fn reduced_words() {
        let a = alpha();
        let words = red_words(&[p("x2x1 - x1x2")], &a, 2);
        let shown: Vec<String> = words.iter().map(|w| w.display(&a).to_string()).collect();
        assert_eq!(shown, ["1", "x1", "x2", "x1x1", "x1x2", "x2x2"]);
        assert_eq!(red_words(&[], &a, 1).len(), 3);
        let no_x1 = red_words(&[p("x1")], &a, 3);
        assert!(no_x1.iter().all(|w| !w.letters().contains(&0)));
        assert_eq!(no_x1.len(), 4);
    }
}
