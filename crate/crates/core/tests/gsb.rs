mod common;

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shirshov::completion::{overlaps, OverlapKind};
use shirshov::gsb_assoc::{
    complete_assoc, complete_assoc_with, compositions_assoc, is_gsb_assoc, red_words, reduce_assoc,
    reduce_assoc_with,
};
use shirshov::gsb_lie::{
    complete_lie, complete_lie_with, compositions_lie, crosscheck_lie_assoc_gsb, is_gsb_lie,
    lie_reduce, reassemble, red_nlsw,
};
use shirshov::poly::{AssocPoly, LiePoly};
use shirshov::text::{parse_assoc, parse_lie};
use shirshov::words::{all_words, enumerate_alsw};
use shirshov::{bracket_std, Alphabet, CompletionOptions, Status, Word};

use common::*;

fn assoc_set(a: &Alphabet, rels: &[&str]) -> Vec<AssocPoly> {
    rels.iter().map(|s| parse_assoc(s, a).unwrap()).collect()
}

fn lie_set(a: &Alphabet, rels: &[&str]) -> Vec<LiePoly> {
    rels.iter().map(|s| parse_lie(s, a).unwrap()).collect()
}

const ASSOC_PRESENTATIONS: &[&[&str]] = &[
    &["x2x1 - x1x2"],
    &["x2x1x1 - x1", "x1x1 - x1"],
    &["x2x1x2 - x1x1"],
    &["x2x2 - x1x1", "x2x1 - x1x2"],
    &["x2x1 - 2 x1x2 - 1"],
];

#[test]
fn completed_assoc_bases_reduce_ideal_elements_to_zero() {
    let a = Alphabet::standard(2);
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for rels in ASSOC_PRESENTATIONS {
        let s = assoc_set(&a, rels);
        let st = complete_assoc(&s, 8).unwrap();
        assert_eq!(st.status(), Status::Complete, "{rels:?}");
        let gsb = st.relations();
        assert!(is_gsb_assoc(gsb).unwrap());
        for r in &s {
            assert!(reduce_assoc(r, gsb).is_zero());
        }
        for _ in 0..50 {
            let h = random_assoc_ideal_element(&mut rng, &s, 2, 3, 2);
            let nf = reduce_assoc(&h, gsb);
            assert!(nf.is_zero(), "{rels:?}: {}", nf.display(&a));
            if !h.is_zero() {
                let lead = h.leading_word().unwrap();
                assert!(gsb
                    .iter()
                    .any(|g| lead.contains_factor(g.leading_word().unwrap())));
            }
        }
    }
}

#[test]
fn reduction_is_idempotent_linear_and_confluent() {
    let a = Alphabet::standard(2);
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for rels in ASSOC_PRESENTATIONS {
        let gsb = complete_assoc(&assoc_set(&a, rels), 8)
            .unwrap()
            .into_relations();
        for _ in 0..30 {
            let mut f = AssocPoly::zero();
            let mut g = AssocPoly::zero();
            for _ in 0..4 {
                f.add_term(random_word(&mut rng, 2, 0, 5), random_coeff(&mut rng));
                g.add_term(random_word(&mut rng, 2, 0, 5), random_coeff(&mut rng));
            }
            let nf = reduce_assoc(&f, &gsb);
            assert_eq!(reduce_assoc(&nf, &gsb), nf);
            let c = random_coeff(&mut rng);
            let mut combo = f.clone();
            combo.add_scaled(&c, &g);
            let mut expected = nf.clone();
            expected.add_scaled(&c, &reduce_assoc(&g, &gsb));
            assert_eq!(reduce_assoc(&combo, &gsb), expected);
            let mut strategy = ChaCha8Rng::seed_from_u64(rng.gen());
            let other =
                reduce_assoc_with(&f, &gsb, |_, redexes| strategy.gen_range(0..redexes.len()));
            assert_eq!(other, nf);
        }
    }
}

/// For homogeneous relations, the degree-d part of the ideal is spanned by the
/// products a·s·b of degree d; its codimension must equal the number of
/// reduced words of degree d.
#[test]
fn reduced_words_count_the_quotient_dimension() {
    let a = Alphabet::standard(2);
    for rels in [
        &["x2x1 - x1x2"][..],
        &["x2x1x2 - x1x1x1"],
        &["x2x2 - x1x1", "x2x1 - x1x2"],
    ] {
        let s = assoc_set(&a, rels);
        let st = complete_assoc(&s, 9).unwrap();
        let red = red_words(st.relations(), &a, 6);
        for d in 0..=6usize {
            let mut rows = Vec::new();
            for r in &s {
                let k = r.degree().unwrap();
                if k > d {
                    continue;
                }
                for la in 0..=d - k {
                    for x in all_words(2, la) {
                        for y in all_words(2, d - k - la) {
                            rows.push(as_row(&r.sandwich(&x, &y)));
                        }
                    }
                }
            }
            let reduced = red.iter().filter(|w| w.len() == d).count();
            assert_eq!(
                rank(&rows),
                2usize.pow(d as u32) - reduced,
                "{rels:?} degree {d}"
            );
        }
    }
}

#[test]
fn braid_relation_truncates() {
    let a = Alphabet::standard(2);
    let s = assoc_set(&a, &["x2x1x2 - x1x2x1"]);
    let st = complete_assoc(&s, 8).unwrap();
    assert_eq!(st.status(), Status::Truncated { degree: 8 });
    assert_eq!(st.status().to_string(), "truncated degree=8");
    assert!(!st.pending().is_empty());
    assert!(st.pending().iter().all(|p| p.overlap.word.len() > 8));
    assert!(!is_gsb_assoc(st.relations()).unwrap());
}

#[test]
fn completion_does_not_depend_on_thread_count() {
    let a = Alphabet::standard(3);
    let s = assoc_set(&a, &["x3x2 - x2x3 - x1", "x3x1 - x1x3", "x2x1x2 - x1x2x1"]);
    let one = complete_assoc_with(
        &s,
        CompletionOptions {
            degree_bound: 7,
            jobs: 1,
        },
    )
    .unwrap();
    let four = complete_assoc_with(
        &s,
        CompletionOptions {
            degree_bound: 7,
            jobs: 4,
        },
    )
    .unwrap();
    assert_eq!(one.relations(), four.relations());
    assert_eq!(one.status(), four.status());

    let l = lie_set(&a, &["[x3 [x3 x1]] - x2", "[[x2 x1] x1] + [x3 x1]"]);
    let one = complete_lie_with(
        &l,
        CompletionOptions {
            degree_bound: 6,
            jobs: 1,
        },
    )
    .unwrap();
    let four = complete_lie_with(
        &l,
        CompletionOptions {
            degree_bound: 6,
            jobs: 4,
        },
    )
    .unwrap();
    assert_eq!(one.relations(), four.relations());
}

#[test]
fn compositions_match_the_overlap_definition() {
    let a = Alphabet::standard(2);
    let f = parse_assoc("x2x1x1 - x1", &a).unwrap();
    let g = parse_assoc("x1x1 - x1", &a).unwrap();
    for c in compositions_assoc(&f, &g).unwrap() {
        let ov = &c.overlap;
        let expected = match ov.kind {
            OverlapKind::Inclusion => &f - &g.sandwich(&ov.a, &ov.b),
            OverlapKind::Intersection => {
                &f.sandwich(&Word::empty(), &ov.b) - &g.sandwich(&ov.a, &Word::empty())
            }
        };
        assert_eq!(c.poly, expected);
        assert!(c.poly.leading_word().is_none_or(|l| *l < ov.word));
    }
}

/// `[lead] + lower NLSW terms`, so the leading coefficient is exactly 1.
fn random_monic_lie(rng: &mut ChaCha8Rng, alsws: &[Word]) -> LiePoly {
    let lead = &alsws[rng.gen_range(0..alsws.len())];
    let mut terms = vec![(one(), bracket_std(lead).unwrap())];
    for _ in 0..rng.gen_range(0..3) {
        let w = &alsws[rng.gen_range(0..alsws.len())];
        if w < lead {
            terms.push((random_coeff(rng), bracket_std(w).unwrap()));
        }
    }
    LiePoly::from_nlsw_terms(terms)
}

#[test]
fn lie_compositions_sit_below_their_overlap_word() {
    let alsws = enumerate_alsw(&Alphabet::standard(3), 5);
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut seen = 0;
    for _ in 0..400 {
        let f = random_monic_lie(&mut rng, &alsws);
        let g = random_monic_lie(&mut rng, &alsws);
        let comps = compositions_lie(&f, &g).unwrap();
        let assoc = compositions_assoc(f.assoc(), g.assoc()).unwrap();
        assert_eq!(comps.len(), assoc.len());
        for (c, d) in comps.iter().zip(&assoc) {
            seen += 1;
            assert_eq!(c.overlap, d.overlap);
            assert!(alsw_by_suffixes(c.overlap.word.letters()));
            let diff = c.poly.assoc() - &d.poly;
            if let Some(l) = diff.leading_word() {
                assert!(*l < c.overlap.word);
            }
        }
    }
    assert!(seen > 50, "only {seen} compositions exercised");
}

const LIE_PRESENTATIONS: &[&[&str]] = &[
    &["[x2 x1]"],
    &["[[x2 x1] x1]"],
    &["[x2 [x2 x1]]", "[[x2 x1] x1]"],
    &["[x2 [x2 x1]] - x1", "[[x2 x1] x1] - x2"],
    &["[[[x2 x1] x1] x1]"],
];

#[test]
fn completed_lie_bases_reduce_ideal_elements_to_zero() {
    let a = Alphabet::standard(2);
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for rels in LIE_PRESENTATIONS {
        let s = lie_set(&a, rels);
        let st = complete_lie(&s, 8).unwrap();
        assert!(st.is_complete(), "{rels:?}");
        let gsb = st.relations();
        assert!(is_gsb_lie(gsb).unwrap());
        for _ in 0..30 {
            let h = random_lie_ideal_element(&mut rng, &s, 2, 2, 3);
            let r = lie_reduce(&h, gsb).unwrap();
            assert!(r.is_zero(), "{rels:?}: {}", r.normal_form().display(&a));
            assert_eq!(reassemble(&r, gsb).unwrap(), *h.assoc());
        }
        let basis = red_nlsw(gsb, &a, 6);
        for _ in 0..20 {
            let mut terms = Vec::new();
            for t in &basis {
                if rng.gen_bool(0.3) {
                    terms.push((random_coeff(&mut rng), t.clone()));
                }
            }
            let p = LiePoly::from_nlsw_terms(terms);
            assert_eq!(lie_reduce(&p, gsb).unwrap().normal_form(), p);
        }
    }
}

#[test]
fn lie_reduction_record_reassembles_and_descends() {
    let a = Alphabet::standard(3);
    let alsws = enumerate_alsw(&a, 5);
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..100 {
        let rels: Vec<LiePoly> = (0..rng.gen_range(1..=3))
            .map(|_| random_monic_lie(&mut rng, &alsws))
            .collect();
        let h = random_monic_lie(&mut rng, &alsws).scale(&random_coeff(&mut rng));
        let r = lie_reduce(&h, &rels).unwrap();
        assert_eq!(reassemble(&r, &rels).unwrap(), *h.assoc());
        let steps: Vec<Word> = r
            .used
            .iter()
            .map(|u| {
                rels[u.relation]
                    .leading_word()
                    .unwrap()
                    .sandwich(&u.a, &u.b)
            })
            .collect();
        assert!(steps.windows(2).all(|p| p[0] > p[1]));
        let irr: Vec<&Word> = r.irreducible.iter().map(|(_, t)| t.word()).collect();
        assert!(irr.windows(2).all(|p| p[0] > p[1]));
        for w in irr {
            assert!(rels
                .iter()
                .all(|s| !w.contains_factor(s.leading_word().unwrap())));
        }
    }
}

#[test]
fn lie_and_assoc_criteria_agree() {
    let a = Alphabet::standard(3);
    let alsws = enumerate_alsw(&a, 4);
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    let mut outcomes: BTreeMap<(bool, bool), usize> = BTreeMap::new();
    for _ in 0..150 {
        let rels: Vec<LiePoly> = (0..rng.gen_range(1..=2))
            .map(|_| random_monic_lie(&mut rng, &alsws))
            .collect();
        let cc = crosscheck_lie_assoc_gsb(&rels).unwrap();
        assert!(
            cc.agree(),
            "{:?}",
            rels.iter()
                .map(|r| r.display(&a).to_string())
                .collect::<Vec<_>>()
        );
        *outcomes.entry((cc.lie, cc.assoc)).or_default() += 1;
        let st = complete_lie(&rels, 6).unwrap();
        if st.is_complete() {
            let done = crosscheck_lie_assoc_gsb(st.relations()).unwrap();
            assert!(done.lie && done.assoc);
        }
    }
    assert!(outcomes.contains_key(&(true, true)) && outcomes.contains_key(&(false, false)));
}

#[test]
fn overlap_scan_finds_every_occurrence() {
    let a = Alphabet::standard(2);
    let f = a.parse_word("x2x1x2x1x1").unwrap();
    let g = a.parse_word("x2x1").unwrap();
    let inc: Vec<_> = overlaps(&f, &g, false)
        .into_iter()
        .filter(|o| o.kind == OverlapKind::Inclusion)
        .map(|o| o.a.len())
        .collect();
    assert_eq!(inc, [0, 2]);
}
