//! Brute-force oracles and random generators shared by the integration tests.
//! Nothing here calls into the library's word combinatorics.
#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::Rng;
use shirshov::bracketing::NonassocWord;
use shirshov::poly::{coeff, lie_bracket, AssocPoly, Coeff, LiePoly};
use shirshov::Word;

/// Prefix-greater lexicographic comparison, letter by letter.
pub fn lex_oracle(u: &[u32], v: &[u32]) -> Ordering {
    for (a, b) in u.iter().zip(v) {
        if a != b {
            return a.cmp(b);
        }
    }
    // a proper prefix is the greater word
    v.len().cmp(&u.len())
}

pub fn deglex_oracle(u: &[u32], v: &[u32]) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| u.cmp(v))
}

/// Strictly greater than every proper cyclic rotation.
pub fn alsw_by_rotations(u: &[u32]) -> bool {
    if u.is_empty() {
        return false;
    }
    (1..u.len()).all(|i| {
        let rot: Vec<u32> = u[i..].iter().chain(&u[..i]).copied().collect();
        lex_oracle(u, &rot) == Ordering::Greater
    })
}

/// Strictly greater than every proper suffix.
pub fn alsw_by_suffixes(u: &[u32]) -> bool {
    !u.is_empty() && (1..u.len()).all(|i| lex_oracle(u, &u[i..]) == Ordering::Greater)
}

/// Every word of length `len` over `size` letters, lexicographic by rank.
pub fn words_of_length(size: u32, len: usize) -> Vec<Vec<u32>> {
    let total = (size as usize).pow(len as u32);
    (0..total)
        .map(|mut n| {
            let mut w = vec![0; len];
            for slot in w.iter_mut().rev() {
                *slot = (n % size as usize) as u32;
                n /= size as usize;
            }
            w
        })
        .collect()
}

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number of aperiodic necklaces of length `n` over `k` letters.
pub fn necklace_count(k: i64, n: usize) -> i64 {
    let sum: i64 = (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| mobius(d) * k.pow((n / d) as u32))
        .sum();
    sum / n as i64
}

/// All splittings of `u` into ALSW pieces that are nondecreasing in the
/// prefix-greater order.
pub fn nondecreasing_factorizations(u: &[u32]) -> Vec<Vec<Vec<u32>>> {
    fn go(
        rest: &[u32],
        prev: Option<&[u32]>,
        acc: &mut Vec<Vec<u32>>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for cut in 1..=rest.len() {
            let piece = &rest[..cut];
            if !alsw_by_rotations(piece) {
                continue;
            }
            if let Some(p) = prev {
                if lex_oracle(p, piece) == Ordering::Greater {
                    continue;
                }
            }
            acc.push(piece.to_vec());
            go(&rest[cut..], Some(piece), acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(u, None, &mut Vec::new(), &mut out);
    out
}

/// Commutator expansion with integer coefficients.
pub fn expand_oracle(t: &NonassocWord) -> BTreeMap<Vec<u32>, i64> {
    match t {
        NonassocWord::Leaf(l) => BTreeMap::from([(vec![*l], 1)]),
        NonassocWord::Node(l, r) => {
            let (a, b) = (expand_oracle(l), expand_oracle(r));
            let mut out: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
            for (u, x) in &a {
                for (v, y) in &b {
                    let uv: Vec<u32> = u.iter().chain(v).copied().collect();
                    let vu: Vec<u32> = v.iter().chain(u).copied().collect();
                    *out.entry(uv).or_default() += x * y;
                    *out.entry(vu).or_default() -= x * y;
                }
            }
            out.retain(|_, c| *c != 0);
            out
        }
    }
}

pub fn to_oracle_map(p: &AssocPoly) -> BTreeMap<Vec<u32>, i64> {
    p.terms()
        .map(|(w, c)| {
            assert!(c.is_integer());
            (
                w.letters().to_vec(),
                c.to_integer().try_into().expect("small coefficient"),
            )
        })
        .collect()
}

/// Every full bracketing of `u`.
pub fn all_bracketings(u: &[u32]) -> Vec<NonassocWord> {
    if u.len() == 1 {
        return vec![NonassocWord::leaf(u[0])];
    }
    let mut out = Vec::new();
    for cut in 1..u.len() {
        for l in all_bracketings(&u[..cut]) {
            for r in all_bracketings(&u[cut..]) {
                out.push(NonassocWord::node(l.clone(), r));
            }
        }
    }
    out
}

/// Rank of a set of rational vectors (sparse maps) by Gaussian elimination
/// on the largest key.
pub fn rank<K: Ord + Clone>(rows: &[BTreeMap<K, Coeff>]) -> usize {
    let mut basis: BTreeMap<K, BTreeMap<K, Coeff>> = BTreeMap::new();
    for row in rows {
        let mut r = row.clone();
        while let Some((k, c)) = r.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) {
            match basis.get(&k) {
                Some(b) => {
                    let factor = c / &b[&k];
                    for (key, v) in b {
                        let e = r.entry(key.clone()).or_insert_with(Coeff::zero);
                        *e -= &factor * v;
                    }
                    r.retain(|_, v| !v.is_zero());
                }
                None => {
                    basis.insert(k, r);
                    break;
                }
            }
        }
    }
    basis.len()
}

pub fn as_row(p: &AssocPoly) -> BTreeMap<Word, Coeff> {
    p.terms().map(|(w, c)| (w.clone(), c.clone())).collect()
}

pub fn random_word<R: Rng>(rng: &mut R, size: u32, min_len: usize, max_len: usize) -> Word {
    let len = rng.gen_range(min_len..=max_len);
    Word::new((0..len).map(|_| rng.gen_range(0..size)).collect())
}

pub fn random_coeff<R: Rng>(rng: &mut R) -> Coeff {
    loop {
        let n = rng.gen_range(-3i64..=3);
        if n != 0 {
            let d = rng.gen_range(1i64..=2);
            return Coeff::new(n.into(), d.into());
        }
    }
}

/// `Σ c · a · s · b` with `s` drawn from `rels`.
pub fn random_assoc_ideal_element<R: Rng>(
    rng: &mut R,
    rels: &[AssocPoly],
    size: u32,
    terms: usize,
    max_ctx: usize,
) -> AssocPoly {
    let mut h = AssocPoly::zero();
    for _ in 0..terms {
        let s = &rels[rng.gen_range(0..rels.len())];
        let a = random_word(rng, size, 0, max_ctx);
        let b = random_word(rng, size, 0, max_ctx);
        h.add_scaled_sandwich(&random_coeff(rng), &a, s, &b);
    }
    h
}

pub fn random_lie_generator<R: Rng>(rng: &mut R, size: u32) -> LiePoly {
    LiePoly::generator(rng.gen_range(0..size))
}

/// `Σ c · [...[[s y1] y2] ... yk]` with each `y` a letter or a bracket of two
/// letters, randomly on either side.
pub fn random_lie_ideal_element<R: Rng>(
    rng: &mut R,
    rels: &[LiePoly],
    size: u32,
    terms: usize,
    max_depth: usize,
) -> LiePoly {
    let mut h = LiePoly::zero();
    for _ in 0..terms {
        let mut t = rels[rng.gen_range(0..rels.len())].clone();
        for _ in 0..rng.gen_range(0..=max_depth) {
            let y = if rng.gen_bool(0.7) {
                random_lie_generator(rng, size)
            } else {
                lie_bracket(
                    &random_lie_generator(rng, size),
                    &random_lie_generator(rng, size),
                )
            };
            t = if rng.gen_bool(0.5) {
                lie_bracket(&t, &y)
            } else {
                lie_bracket(&y, &t)
            };
        }
        h = h.add_scaled(&random_coeff(rng), &t);
    }
    h
}

pub fn one() -> Coeff {
    Coeff::one()
}

pub fn int(n: i64) -> Coeff {
    coeff(n)
}
