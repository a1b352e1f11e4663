//! Overlap enumeration and the degree-bounded completion loop shared by the
//! associative and Lie engines.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::AssocPoly;
use crate::words::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OverlapKind {
    /// `w = f̄ = a ḡ b`
    Inclusion,
    /// `w = f̄ b = a ḡ` with `|f̄| + |ḡ| > |w|` and `a`, `b` nonempty
    Intersection,
}

/// Where two leading words meet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Overlap {
    pub kind: OverlapKind,
    pub word: Word,
    pub a: Word,
    pub b: Word,
}

/// All inclusions of `g` in `f` and all proper overlaps of a suffix of `f`
/// with a prefix of `g`. With `same` set, the trivial self-inclusion is skipped.
pub fn overlaps(f: &Word, g: &Word, same: bool) -> Vec<Overlap> {
    let mut out = Vec::new();
    for pos in f.occurrences(g) {
        let a = f.slice(0, pos);
        let b = f.slice(pos + g.len(), f.len());
        if same && a.is_empty() && b.is_empty() {
            continue;
        }
        out.push(Overlap {
            kind: OverlapKind::Inclusion,
            word: f.clone(),
            a,
            b,
        });
    }
    let (fl, gl) = (f.letters(), g.letters());
    for k in 1..f.len().min(g.len()) {
        if fl[f.len() - k..] == gl[..k] {
            let a = f.slice(0, f.len() - k);
            let b = g.slice(k, g.len());
            out.push(Overlap {
                kind: OverlapKind::Intersection,
                word: f.concat(&b),
                a,
                b,
            });
        }
    }
    out
}

/// Outcome of a degree-bounded completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Complete,
    /// Some composition with `|w|` above the bound was never examined.
    Truncated {
        degree: usize,
    },
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Complete => f.write_str("complete"),
            Status::Truncated { degree } => write!(f, "truncated degree={degree}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompletionOptions {
    pub degree_bound: usize,
    /// Worker threads for reducing a batch of compositions; `1` runs inline.
    pub jobs: usize,
}

impl CompletionOptions {
    pub fn new(degree_bound: usize) -> Self {
        CompletionOptions {
            degree_bound,
            jobs: 1,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CompletionStats {
    pub compositions: usize,
    pub trivial: usize,
    pub added: usize,
    pub removed: usize,
}

/// A composition that was not examined, with indices into the final relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendingComposition {
    pub overlap: Overlap,
    pub left: usize,
    pub right: usize,
}

/// Result of completing a relation set.
#[derive(Clone, Debug)]
pub struct GsbState<R> {
    pub(crate) relations: Vec<R>,
    pub(crate) pending: Vec<PendingComposition>,
    pub(crate) degree_bound: usize,
    pub(crate) status: Status,
    pub(crate) stats: CompletionStats,
}

impl<R> GsbState<R> {
    /// Monic, interreduced relations sorted by increasing leading word.
    pub fn relations(&self) -> &[R] {
        &self.relations
    }

    pub fn into_relations(self) -> Vec<R> {
        self.relations
    }

    /// Compositions between surviving relations that exceeded the degree bound.
    pub fn pending(&self) -> &[PendingComposition] {
        &self.pending
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn is_complete(&self) -> bool {
        self.status == Status::Complete
    }

    pub fn stats(&self) -> CompletionStats {
        self.stats
    }
}

/// What the completion loop needs from an engine.
pub(crate) trait Engine {
    type Rel: Clone + PartialEq + Send + Sync;

    fn leading(rel: &Self::Rel) -> &Word;

    fn assoc(rel: &Self::Rel) -> &AssocPoly;

    /// The composition of `f` and `g` at `overlap`, as an associative polynomial.
    fn composition(f: &Self::Rel, g: &Self::Rel, overlap: &Overlap) -> AssocPoly;

    /// Normal form of `h` modulo `rels`, made monic; `None` when it vanishes.
    fn normal_form(h: &AssocPoly, rels: &[&Self::Rel]) -> Option<Self::Rel>;
}

struct Entry<R> {
    rel: R,
    lead: Word,
    alive: bool,
}

struct Queued {
    left: usize,
    right: usize,
    overlap: Overlap,
}

struct Runner<E: Engine> {
    entries: Vec<Entry<E::Rel>>,
    /// keyed by (overlap word in deg-lex, insertion sequence)
    queue: BTreeMap<(Word, usize), Queued>,
    skipped: Vec<Queued>,
    seq: usize,
    bound: usize,
    stats: CompletionStats,
}

impl<E: Engine> Runner<E> {
    fn alive(&self) -> Vec<&E::Rel> {
        self.entries
            .iter()
            .filter(|e| e.alive)
            .map(|e| &e.rel)
            .collect()
    }

    fn alive_except(&self, skip: usize) -> Vec<&E::Rel> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(i, e)| e.alive && *i != skip)
            .map(|(_, e)| &e.rel)
            .collect()
    }

    fn enqueue(&mut self, left: usize, right: usize) {
        let same = left == right;
        for overlap in overlaps(&self.entries[left].lead, &self.entries[right].lead, same) {
            let item = Queued {
                left,
                right,
                overlap,
            };
            if item.overlap.word.len() > self.bound {
                self.skipped.push(item);
            } else {
                self.seq += 1;
                self.queue
                    .insert((item.overlap.word.clone(), self.seq), item);
            }
        }
    }

    fn push_entry(&mut self, rel: E::Rel) -> usize {
        let lead = E::leading(&rel).clone();
        self.entries.push(Entry {
            rel,
            lead,
            alive: true,
        });
        self.stats.added += 1;
        self.entries.len() - 1
    }

    fn schedule(&mut self, id: usize) {
        let others: Vec<usize> = (0..self.entries.len())
            .filter(|&i| self.entries[i].alive)
            .collect();
        for other in others {
            self.enqueue(id, other);
            if other != id {
                self.enqueue(other, id);
            }
        }
    }

    /// Adds a monic relation whose leading word is irreducible, then
    /// interreduces: relations whose leading word became reducible are
    /// removed and re-inserted through their normal forms, the rest are
    /// tail-reduced.
    fn insert(&mut self, rel: E::Rel) {
        let lead = E::leading(&rel).clone();
        let mut requeue = Vec::new();
        for e in self.entries.iter_mut().filter(|e| e.alive) {
            if e.lead.contains_factor(&lead) {
                e.alive = false;
                requeue.push(E::assoc(&e.rel).clone());
                self.stats.removed += 1;
            }
        }
        let id = self.push_entry(rel);
        let mut fresh = vec![id];
        let ids: Vec<usize> = (0..self.entries.len())
            .filter(|&i| self.entries[i].alive && i != id)
            .collect();
        for i in ids {
            let reduced = {
                let others = self.alive_except(i);
                E::normal_form(E::assoc(&self.entries[i].rel), &others)
            };
            match reduced {
                Some(r) if r == self.entries[i].rel => {}
                Some(r) => {
                    self.entries[i].alive = false;
                    self.stats.removed += 1;
                    fresh.push(self.push_entry(r));
                }
                None => unreachable!("leading word of a surviving relation is irreducible"),
            }
        }
        for f in fresh {
            if self.entries[f].alive {
                self.schedule(f);
            }
        }
        for h in requeue {
            let nf = E::normal_form(&h, &self.alive());
            match nf {
                Some(r) => self.insert(r),
                None => log::debug!("removed relation reduces to zero"),
            }
        }
    }

    fn pop_batch(&mut self) -> Vec<Queued> {
        let Some(len) = self.queue.keys().next().map(|(w, _)| w.len()) else {
            return Vec::new();
        };
        let mut batch = Vec::new();
        while let Some(entry) = self.queue.first_entry() {
            if entry.key().0.len() != len {
                break;
            }
            batch.push(entry.remove());
        }
        batch
    }

    fn run(&mut self, jobs: usize) {
        loop {
            let batch = self.pop_batch();
            if batch.is_empty() {
                break;
            }
            let generation = self.entries.len();
            let results: Vec<Option<E::Rel>> = {
                let snapshot = self.alive();
                let entries = &self.entries;
                let reduce = |q: &Queued| {
                    let (l, r) = (&entries[q.left], &entries[q.right]);
                    if !(l.alive && r.alive) {
                        return None;
                    }
                    let h = E::composition(&l.rel, &r.rel, &q.overlap);
                    E::normal_form(&h, &snapshot)
                };
                if jobs > 1 {
                    batch.par_iter().map(reduce).collect()
                } else {
                    batch.iter().map(reduce).collect()
                }
            };
            for (q, result) in batch.iter().zip(results) {
                let (l, r) = (&self.entries[q.left], &self.entries[q.right]);
                if !(l.alive || r.alive) && result.is_none() {
                    continue;
                }
                self.stats.compositions += 1;
                let result = match result {
                    Some(r) if self.entries.len() != generation => {
                        E::normal_form(E::assoc(&r), &self.alive())
                    }
                    other => other,
                };
                match result {
                    Some(r) => self.insert(r),
                    None => {
                        self.stats.trivial += 1;
                        log::debug!("composition at {:?} is trivial", q.overlap.word);
                    }
                }
            }
        }
    }
}

pub(crate) fn complete<E: Engine>(
    input: &[E::Rel],
    options: CompletionOptions,
) -> Result<GsbState<E::Rel>>
where
    E::Rel: Send + Sync,
{
    for rel in input {
        if E::assoc(rel).is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !E::assoc(rel).is_monic() {
            return Err(Error::NotMonic);
        }
        let degree = E::leading(rel).len();
        if degree > options.degree_bound {
            return Err(Error::DegreeBoundTooSmall {
                bound: options.degree_bound,
                degree,
            });
        }
    }
    let mut runner: Runner<E> = Runner {
        entries: Vec::new(),
        queue: BTreeMap::new(),
        skipped: Vec::new(),
        seq: 0,
        bound: options.degree_bound,
        stats: CompletionStats::default(),
    };
    for rel in input {
        if let Some(r) = E::normal_form(E::assoc(rel), &runner.alive()) {
            runner.insert(r);
        }
    }
    let jobs = options.jobs.max(1);
    if jobs > 1 {
        match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| runner.run(jobs)),
            Err(e) => {
                log::warn!("falling back to one thread: {e}");
                runner.run(1);
            }
        }
    } else {
        runner.run(1);
    }

    let mut order: Vec<usize> = (0..runner.entries.len())
        .filter(|&i| runner.entries[i].alive)
        .collect();
    order.sort_by(|&x, &y| runner.entries[x].lead.cmp(&runner.entries[y].lead));
    let position = |id: usize| order.iter().position(|&i| i == id);
    let pending: Vec<PendingComposition> = runner
        .skipped
        .iter()
        .filter_map(|q| {
            Some(PendingComposition {
                overlap: q.overlap.clone(),
                left: position(q.left)?,
                right: position(q.right)?,
            })
        })
        .collect();
    let status = if pending.is_empty() {
        Status::Complete
    } else {
        Status::Truncated {
            degree: options.degree_bound,
        }
    };
    let relations = order
        .iter()
        .map(|&i| runner.entries[i].rel.clone())
        .collect();
    Ok(GsbState {
        relations,
        pending,
        degree_bound: options.degree_bound,
        status,
        stats: runner.stats,
    })
}

/// Every composition of `rels` (self-pairs included) that does not reduce to zero.
pub(crate) fn nontrivial<E: Engine>(rels: &[E::Rel]) -> Result<Vec<Overlap>> {
    for rel in rels {
        if !E::assoc(rel).is_monic() {
            return Err(if E::assoc(rel).is_zero() {
                Error::ZeroPolynomial
            } else {
                Error::NotMonic
            });
        }
    }
    let all: Vec<&E::Rel> = rels.iter().collect();
    let mut out = Vec::new();
    for (i, f) in rels.iter().enumerate() {
        for (j, g) in rels.iter().enumerate() {
            for ov in overlaps(E::leading(f), E::leading(g), i == j) {
                let h = E::composition(f, g, &ov);
                if E::normal_form(&h, &all).is_some() {
                    out.push(ov);
                }
            }
        }
    }
    Ok(out)
}
