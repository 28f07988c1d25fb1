//! Exact Stanley depth and fdepth by branch-and-prune search over interval
//! partitions of the characteristic poset, plus the cheap bounds.
//!
//! `sdepth I/J ≥ k` holds iff the poset has a partition whose tops all have
//! `ρ ≥ k`; `fdepth I/J ≥ k` holds iff such a partition exists whose prefix
//! unions are down-sets. Both decisions are monotone in `k`, so the exact
//! values are found by binary search between `min ρ` (the singleton
//! partition) and an upper bound.
//!
//! The sdepth search always branches on the first uncovered point `c` of the
//! linear extension: every point below `c` is already covered, so the
//! interval holding `c` must start at `c`. The fdepth search walks the
//! lattice of covered down-sets and branches on every minimal uncovered
//! point, with visited states memoized.
//!
//! With more than one thread the top levels of the search tree are explored
//! in parallel over a shared memo table. The value found is deterministic;
//! the witness may depend on scheduling. `threads = Some(1)` runs the
//! sequential reference search, whose witnesses are reproducible.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use dashmap::DashSet;

use crate::bitset::BitSet;
use crate::decomp::Partition;
use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal, QuotientPair};
use crate::par;
use crate::poset::{CharacteristicPoset, Interval};

/// Limits on one exact computation. All limits are shared by every decision
/// made on the way to the answer.
#[derive(Clone, Debug, Default)]
pub struct SearchBudget {
    pub time_limit: Option<Duration>,
    pub node_limit: Option<u64>,
    /// Worker threads; `None` uses the global pool, `Some(1)` is sequential.
    pub threads: Option<usize>,
}

impl SearchBudget {
    pub fn single_thread() -> Self {
        SearchBudget {
            threads: Some(1),
            ..Default::default()
        }
    }

    fn sequential(&self) -> bool {
        self.threads == Some(1) || par::current_num_threads() == 1 && self.threads.is_none()
    }
}

/// Tuning knobs of the search that do not change its answers.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Record failed covered sets (sdepth) or visited down-sets (fdepth).
    pub memoize: bool,
    /// The sdepth memo stops growing past this many entries.
    pub memo_capacity: usize,
    /// Levels of the search tree explored in parallel.
    pub parallel_depth: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            memoize: true,
            memo_capacity: 1 << 22,
            parallel_depth: 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Decision {
    /// A partition with every `ρ(top) ≥ k` (ordered, for fdepth).
    Yes(Partition),
    No,
    /// The budget ran out before the question was settled.
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DepthStatus {
    Exact,
    /// The budget ran out; `value` is a proven lower bound only.
    LowerBoundOnly,
}

#[derive(Clone, Debug)]
pub struct DepthResult {
    pub value: u32,
    /// A partition achieving `value` (ordered for fdepth), in the original
    /// coordinates of the module.
    pub witness: Option<Partition>,
    pub status: DepthStatus,
    /// Number of points of the poset the search ran on.
    pub poset_size: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Sdepth,
    Fdepth,
}

struct Limits {
    deadline: Option<Instant>,
    node_limit: Option<u64>,
    nodes: AtomicU64,
    exhausted: AtomicBool,
}

impl Limits {
    fn new(budget: &SearchBudget) -> Self {
        Limits {
            deadline: budget.time_limit.map(|t| Instant::now() + t),
            node_limit: budget.node_limit,
            nodes: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
        }
    }

    /// Counts one search node; false once the budget is spent.
    fn tick(&self) -> bool {
        if self.exhausted.load(Ordering::Relaxed) {
            return false;
        }
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over = self.node_limit.is_some_and(|l| n > l)
            || (n.is_multiple_of(256) && self.deadline.is_some_and(|d| Instant::now() >= d));
        if over {
            self.exhausted.store(true, Ordering::Relaxed);
        }
        !over
    }

    fn is_exhausted(&self) -> bool {
        self.exhausted.load(Ordering::Relaxed)
    }
}

/// One candidate interval `[c, top]` with its members.
struct Candidate {
    top: usize,
    members: BitSet,
}

/// For each bottom `c`, the intervals `[c, d]` with `ρ(d) ≥ k`, largest first
/// (ties by top index).
fn candidate_table(poset: &CharacteristicPoset, k: u32) -> Vec<Vec<Candidate>> {
    par::map_range(poset.len(), |c| {
        let mut cands: Vec<(usize, Candidate)> = poset
            .up_set(c)
            .iter()
            .filter(|&d| poset.rho(d) >= k)
            .map(|d| {
                let members = poset.members_unchecked(Interval::new(c, d));
                (members.count(), Candidate { top: d, members })
            })
            .collect();
        cands.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.top.cmp(&b.1.top)));
        cands.into_iter().map(|(_, c)| c).collect()
    })
}

enum Outcome {
    Found(Vec<Interval>),
    Failed,
    Aborted,
}

impl Outcome {
    fn combine(self, other: Outcome) -> Outcome {
        match (self, other) {
            (Outcome::Found(w), _) | (_, Outcome::Found(w)) => Outcome::Found(w),
            (Outcome::Aborted, _) | (_, Outcome::Aborted) => Outcome::Aborted,
            _ => Outcome::Failed,
        }
    }
}

struct Search<'a> {
    kind: Kind,
    poset: &'a CharacteristicPoset,
    candidates: Vec<Vec<Candidate>>,
    limits: &'a Limits,
    memo: Option<DashSet<BitSet>>,
    memo_capacity: usize,
    parallel_depth: usize,
    found: AtomicBool,
}

impl Search<'_> {
    /// Every uncovered point `p` must still fit in some interval `[p, d]`
    /// with `ρ(d) ≥ k` and no covered member.
    fn feasible(&self, covered: &BitSet) -> bool {
        covered.complement().iter().all(|p| {
            self.candidates[p]
                .iter()
                .any(|cand| cand.members.is_disjoint(covered))
        })
    }

    fn remember(&self, covered: &BitSet) {
        if let Some(memo) = &self.memo {
            if self.kind == Kind::Fdepth || memo.len() < self.memo_capacity {
                memo.insert(covered.clone());
            }
        }
    }

    /// Moves available from `covered`: (bottom, candidate index).
    fn moves(&self, covered: &BitSet) -> Vec<(usize, usize)> {
        let bottoms = match self.kind {
            Kind::Sdepth => covered.first_missing().into_iter().collect(),
            Kind::Fdepth => self.poset.minimal_uncovered(covered),
        };
        let mut out = Vec::new();
        for c in bottoms {
            for (k, cand) in self.candidates[c].iter().enumerate() {
                if !cand.members.is_disjoint(covered) {
                    continue;
                }
                if self.kind == Kind::Fdepth {
                    let mut next = covered.clone();
                    next.union_with(&cand.members);
                    if !cand
                        .members
                        .iter()
                        .all(|p| self.poset.down_set(p).is_subset(&next))
                    {
                        continue;
                    }
                }
                out.push((c, k));
            }
        }
        out
    }

    fn run(&self, covered: &mut BitSet, chosen: &mut Vec<Interval>, depth: usize) -> Outcome {
        if self.found.load(Ordering::Relaxed) || !self.limits.tick() {
            return Outcome::Aborted;
        }
        if covered.is_full() {
            self.found.store(true, Ordering::Relaxed);
            return Outcome::Found(chosen.clone());
        }
        if let Some(memo) = &self.memo {
            match self.kind {
                Kind::Sdepth => {
                    if memo.contains(covered) {
                        return Outcome::Failed;
                    }
                }
                // visited states are recorded on entry: a state seen before is
                // either failed or still being explored by its first visitor
                Kind::Fdepth => {
                    if !memo.insert(covered.clone()) {
                        return Outcome::Failed;
                    }
                }
            }
        }
        if !self.feasible(covered) {
            self.remember(covered);
            return Outcome::Failed;
        }
        let moves = self.moves(covered);

        let outcome = if depth < self.parallel_depth && moves.len() > 1 {
            self.run_parallel(covered, chosen, depth, &moves)
        } else {
            let mut outcome = Outcome::Failed;
            for (c, k) in moves {
                let cand = &self.candidates[c][k];
                covered.union_with(&cand.members);
                chosen.push(Interval::new(c, cand.top));
                let r = self.run(covered, chosen, depth + 1);
                chosen.pop();
                covered.difference_with(&cand.members);
                match r {
                    Outcome::Failed => {}
                    other => {
                        outcome = other;
                        break;
                    }
                }
            }
            outcome
        };
        if matches!(outcome, Outcome::Failed) && self.kind == Kind::Sdepth {
            self.remember(covered);
        }
        outcome
    }

    #[cfg(feature = "parallel")]
    fn run_parallel(
        &self,
        covered: &BitSet,
        chosen: &[Interval],
        depth: usize,
        moves: &[(usize, usize)],
    ) -> Outcome {
        use rayon::prelude::*;
        moves
            .par_iter()
            .map(|&(c, k)| {
                let cand = &self.candidates[c][k];
                let mut cov = covered.clone();
                cov.union_with(&cand.members);
                let mut ch = chosen.to_vec();
                ch.push(Interval::new(c, cand.top));
                self.run(&mut cov, &mut ch, depth + 1)
            })
            .reduce(|| Outcome::Failed, Outcome::combine)
    }

    #[cfg(not(feature = "parallel"))]
    fn run_parallel(
        &self,
        covered: &BitSet,
        chosen: &[Interval],
        depth: usize,
        moves: &[(usize, usize)],
    ) -> Outcome {
        let mut out = Outcome::Failed;
        for &(c, k) in moves {
            let cand = &self.candidates[c][k];
            let mut cov = covered.clone();
            cov.union_with(&cand.members);
            let mut ch = chosen.to_vec();
            ch.push(Interval::new(c, cand.top));
            out = out.combine(self.run(&mut cov, &mut ch, depth + 1));
            if !matches!(out, Outcome::Failed) {
                break;
            }
        }
        out
    }
}

fn decide(
    kind: Kind,
    poset: &Arc<CharacteristicPoset>,
    k: u32,
    limits: &Limits,
    options: &SearchOptions,
    sequential: bool,
) -> Decision {
    if poset.is_empty() {
        return Decision::No;
    }
    if poset.min_rho().is_some_and(|m| k <= m) {
        return Decision::Yes(Partition::singletons(Arc::clone(poset)));
    }
    if poset.max_rho().is_some_and(|m| k > m) {
        return Decision::No;
    }
    let search = Search {
        kind,
        poset,
        candidates: candidate_table(poset, k),
        limits,
        memo: options.memoize.then(DashSet::new),
        memo_capacity: options.memo_capacity,
        parallel_depth: if sequential {
            0
        } else {
            options.parallel_depth
        },
        found: AtomicBool::new(false),
    };
    let mut covered = poset.empty_set();
    match search.run(&mut covered, &mut Vec::new(), 0) {
        Outcome::Found(intervals) => {
            Decision::Yes(Partition::new_unchecked(Arc::clone(poset), intervals))
        }
        Outcome::Failed => Decision::No,
        Outcome::Aborted => {
            debug_assert!(limits.is_exhausted());
            Decision::Unknown
        }
    }
}

fn decision(
    kind: Kind,
    poset: &Arc<CharacteristicPoset>,
    k: u32,
    budget: &SearchBudget,
    options: &SearchOptions,
) -> Result<Decision> {
    let limits = Limits::new(budget);
    let sequential = budget.sequential();
    par::with_threads(budget.threads, || {
        decide(kind, poset, k, &limits, options, sequential)
    })
}

/// Does `poset` admit a partition with every `ρ(top) ≥ k`?
pub fn sdepth_decision(
    poset: &Arc<CharacteristicPoset>,
    k: u32,
    budget: &SearchBudget,
) -> Result<Decision> {
    decision(Kind::Sdepth, poset, k, budget, &SearchOptions::default())
}

pub fn sdepth_decision_with(
    poset: &Arc<CharacteristicPoset>,
    k: u32,
    budget: &SearchBudget,
    options: &SearchOptions,
) -> Result<Decision> {
    decision(Kind::Sdepth, poset, k, budget, options)
}

/// Does `poset` admit an ordered partition (prefix unions are down-sets)
/// with every `ρ(top) ≥ k`?
pub fn fdepth_decision(
    poset: &Arc<CharacteristicPoset>,
    k: u32,
    budget: &SearchBudget,
) -> Result<Decision> {
    decision(Kind::Fdepth, poset, k, budget, &SearchOptions::default())
}

pub fn fdepth_decision_with(
    poset: &Arc<CharacteristicPoset>,
    k: u32,
    budget: &SearchBudget,
    options: &SearchOptions,
) -> Result<Decision> {
    decision(Kind::Fdepth, poset, k, budget, options)
}

/// `dim I/J = max ρ`.
pub fn krull_dim(poset: &CharacteristicPoset) -> Result<u32> {
    poset.max_rho().ok_or(Error::EmptyModule)
}

/// `fdepth I/J ≥ min ρ`, witnessed by the singleton partition.
pub fn lower_bound_minrho(poset: &CharacteristicPoset) -> Result<u32> {
    poset.min_rho().ok_or(Error::EmptyModule)
}

fn require_ideal(pair: &QuotientPair) -> Result<&MonomialIdeal> {
    if pair.denominator().is_zero() {
        Ok(pair.numerator())
    } else {
        Err(Error::NotApplicable(
            "bound holds for ideals (J = 0) only".into(),
        ))
    }
}

/// `sdepth I ≥ max{1, n − m + 1}` for an ideal with `m` minimal generators.
pub fn lower_bound_gencount(pair: &QuotientPair) -> Result<u32> {
    let ideal = require_ideal(pair)?;
    let n = ideal.num_vars() as i64;
    let m = ideal.generators().len() as i64;
    Ok((n - m + 1).max(1) as u32)
}

/// Lower bound from slicing along the last variable:
/// `sdepth I ≥ min{sdepth I_p, …, sdepth I_{q−1}, sdepth I_q + 1}`, applied
/// recursively. Principal ideals contribute their exact value `n`.
pub fn lower_bound_recursive(pair: &QuotientPair) -> Result<u32> {
    let ideal = require_ideal(pair)?;
    recursive_bound(ideal)
}

fn recursive_bound(ideal: &MonomialIdeal) -> Result<u32> {
    let n = ideal.num_vars() as u32;
    if ideal.is_principal()? {
        return Ok(n);
    }
    let (p, q) = ideal.slice_range()?;
    let mut best = u32::MAX;
    for j in p..=q {
        let s = recursive_bound(&ideal.slice(j)?)?;
        best = best.min(if j == q { s + 1 } else { s });
    }
    Ok(best)
}

/// `dim I/J`, lowered to `n − 1` for a non-principal ideal.
pub fn upper_bound(pair: &QuotientPair) -> Result<u32> {
    let dim = krull_dim(&CharacteristicPoset::canonical(pair)?)?;
    Ok(upper_bound_with_dim(pair, dim))
}

fn upper_bound_with_dim(pair: &QuotientPair, dim: u32) -> u32 {
    let n = pair.num_vars() as u32;
    if pair.denominator().is_zero() && pair.numerator().generators().len() > 1 {
        dim.min(n - 1)
    } else {
        dim
    }
}

/// Drops the variables that occur in no generator of `I` or `J`. Returns the
/// reduced pair, the number of dropped variables and the kept indices.
/// Each dropped variable adds exactly one to sdepth and fdepth.
pub fn strip_free_variables(pair: &QuotientPair) -> (QuotientPair, usize, Vec<usize>) {
    let keep = pair.used_variables();
    let dropped = pair.num_vars() - keep.len();
    if dropped == 0 {
        return (pair.clone(), 0, keep);
    }
    (pair.restrict(&keep), dropped, keep)
}

fn exact(
    kind: Kind,
    pair: &QuotientPair,
    g: Option<&ExponentVector>,
    budget: &SearchBudget,
    options: &SearchOptions,
) -> Result<DepthResult> {
    // Only the canonical poset is reduced: with a user g the free variables
    // may carry nonzero g entries and the search runs on the poset as given.
    let (work_pair, extra, keep) = match g {
        Some(_) => (pair.clone(), 0, (0..pair.num_vars()).collect()),
        None => strip_free_variables(pair),
    };
    let poset = Arc::new(match g {
        Some(g) => CharacteristicPoset::build(&work_pair, g)?,
        None => CharacteristicPoset::canonical(&work_pair)?,
    });
    let mut lo = lower_bound_minrho(&poset)?;
    let mut hi = upper_bound_with_dim(&work_pair, krull_dim(&poset)?);
    let mut witness = Partition::singletons(Arc::clone(&poset));
    let mut status = DepthStatus::Exact;

    let limits = Limits::new(budget);
    let sequential = budget.sequential();
    par::with_threads(budget.threads, || {
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            match decide(kind, &poset, mid, &limits, options, sequential) {
                Decision::Yes(w) => {
                    lo = mid;
                    witness = w;
                }
                Decision::No => hi = mid - 1,
                Decision::Unknown => {
                    status = DepthStatus::LowerBoundOnly;
                    break;
                }
            }
        }
    })?;

    let witness = if extra == 0 {
        witness
    } else {
        inflate(pair, &keep, &witness)?
    };
    Ok(DepthResult {
        value: lo + extra as u32,
        witness: Some(witness),
        status,
        poset_size: poset.len(),
    })
}

/// Maps a partition of the reduced canonical poset back to the canonical
/// poset of `pair`, where the dropped coordinates are identically 0.
fn inflate(pair: &QuotientPair, keep: &[usize], witness: &Partition) -> Result<Partition> {
    let n = pair.num_vars();
    let full = Arc::new(CharacteristicPoset::canonical(pair)?);
    let lift = |e: &ExponentVector| {
        let mut v = vec![0; n];
        for (k, &j) in keep.iter().enumerate() {
            v[j] = e.get(k);
        }
        ExponentVector::new(v)
    };
    let intervals: Vec<_> = witness
        .interval_vectors()
        .iter()
        .map(|(c, d)| (lift(c), lift(d)))
        .collect();
    Partition::from_vectors(full, &intervals)
}

/// Stanley depth of `I/J`, with a witness partition.
///
/// `g` defaults to the canonical join of the generators; any admissible `g`
/// gives the same value.
pub fn sdepth_exact(
    pair: &QuotientPair,
    g: Option<&ExponentVector>,
    budget: &SearchBudget,
) -> Result<DepthResult> {
    exact(Kind::Sdepth, pair, g, budget, &SearchOptions::default())
}

pub fn sdepth_exact_with(
    pair: &QuotientPair,
    g: Option<&ExponentVector>,
    budget: &SearchBudget,
    options: &SearchOptions,
) -> Result<DepthResult> {
    exact(Kind::Sdepth, pair, g, budget, options)
}

/// fdepth of `I/J`, with an ordered witness partition.
pub fn fdepth_exact(
    pair: &QuotientPair,
    g: Option<&ExponentVector>,
    budget: &SearchBudget,
) -> Result<DepthResult> {
    exact(Kind::Fdepth, pair, g, budget, &SearchOptions::default())
}

pub fn fdepth_exact_with(
    pair: &QuotientPair,
    g: Option<&ExponentVector>,
    budget: &SearchBudget,
    options: &SearchOptions,
) -> Result<DepthResult> {
    exact(Kind::Fdepth, pair, g, budget, options)
}

/// Every bound in one place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub minrho: u32,
    /// `None` when `J ≠ 0`.
    pub gencount: Option<u32>,
    /// `None` when `J ≠ 0`.
    pub recursive: Option<u32>,
    pub upper: u32,
}

pub fn bounds(pair: &QuotientPair) -> Result<Bounds> {
    let poset = CharacteristicPoset::canonical(pair)?;
    let ideal_only = pair.denominator().is_zero();
    Ok(Bounds {
        minrho: lower_bound_minrho(&poset)?,
        gencount: ideal_only.then(|| lower_bound_gencount(pair)).transpose()?,
        recursive: ideal_only
            .then(|| lower_bound_recursive(pair))
            .transpose()?,
        upper: upper_bound_with_dim(pair, krull_dim(&poset)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::MonomialIdeal;

    fn ev<const N: usize>(a: [u32; N]) -> ExponentVector {
        ExponentVector::from(a)
    }

    fn ideal_pair<const N: usize>(gens: &[[u32; N]]) -> QuotientPair {
        QuotientPair::ideal(MonomialIdeal::new(N, gens.iter().map(|a| ev(*a))).unwrap()).unwrap()
    }

    fn maximal(n: usize) -> QuotientPair {
        QuotientPair::ideal(MonomialIdeal::maximal(n)).unwrap()
    }

    fn seq() -> SearchBudget {
        SearchBudget::single_thread()
    }

    #[test]
    fn maximal_four_decisions() {
        let poset = Arc::new(CharacteristicPoset::canonical(&maximal(4)).unwrap());
        match sdepth_decision(&poset, 2, &seq()).unwrap() {
            Decision::Yes(p) => {
                assert!(p.stats().sdepth >= 2);
                assert!(p.to_decomposition().verify().is_valid());
            }
            other => panic!("expected yes, got {other:?}"),
        }
        assert_eq!(sdepth_decision(&poset, 3, &seq()).unwrap(), Decision::No);
        assert!(matches!(
            sdepth_decision(&poset, 0, &seq()).unwrap(),
            Decision::Yes(_)
        ));
    }

    #[test]
    fn rotating_pairs_partition_for_maximal_four() {
        // [1,12] ∪ [2,23] ∪ [3,34] ∪ [4,14] plus singletons
        let poset = Arc::new(CharacteristicPoset::canonical(&maximal(4)).unwrap());
        let mut ivs = vec![
            (ev([1, 0, 0, 0]), ev([1, 1, 0, 0])),
            (ev([0, 1, 0, 0]), ev([0, 1, 1, 0])),
            (ev([0, 0, 1, 0]), ev([0, 0, 1, 1])),
            (ev([0, 0, 0, 1]), ev([1, 0, 0, 1])),
        ];
        let used: Vec<ExponentVector> = ivs
            .iter()
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect();
        for p in poset.points() {
            if !used.contains(p) {
                ivs.push((p.clone(), p.clone()));
            }
        }
        let p = Partition::from_vectors(Arc::clone(&poset), &ivs).unwrap();
        assert_eq!(p.stats().sdepth, 2);
    }

    #[test]
    fn small_exact_values() {
        assert_eq!(sdepth_exact(&maximal(3), None, &seq()).unwrap().value, 2);
        assert_eq!(fdepth_exact(&maximal(3), None, &seq()).unwrap().value, 1);
        assert_eq!(
            sdepth_exact(&ideal_pair(&[[2, 0], [0, 2]]), None, &seq())
                .unwrap()
                .value,
            1
        );
        assert_eq!(
            sdepth_exact(&ideal_pair(&[[1, 2, 0]]), None, &seq())
                .unwrap()
                .value,
            3
        );
    }

    #[test]
    fn fdepth_witness_is_ordered() {
        let r = fdepth_exact(
            &ideal_pair(&[[1, 1, 0], [0, 1, 1], [2, 0, 1]]),
            None,
            &seq(),
        )
        .unwrap();
        let w = r.witness.unwrap();
        assert!(w.is_ordered());
        assert_eq!(w.stats().sdepth, r.value);
        assert!(w.filtration_decomposition().is_filtration_order());
    }

    #[test]
    fn krull_dim_examples() {
        let p = CharacteristicPoset::canonical(&maximal(3)).unwrap();
        assert_eq!(krull_dim(&p).unwrap(), 3);
        let i = MonomialIdeal::new(2, [ev([2, 4]), ev([3, 3]), ev([5, 1])]).unwrap();
        let j = MonomialIdeal::new(2, [ev([4, 5]), ev([6, 2])]).unwrap();
        let pair = QuotientPair::new(i, j).unwrap();
        let p = CharacteristicPoset::build(&pair, &ev([7, 6])).unwrap();
        assert_eq!(krull_dim(&p).unwrap(), 1);
        assert!(p.index_of(&ev([7, 1])).is_some());
        assert!(p.index_of(&ev([7, 6])).is_none());
    }

    #[test]
    fn bound_examples() {
        let five = QuotientPair::ideal(
            MonomialIdeal::new(
                5,
                [
                    ev([1, 1, 0, 0, 0]),
                    ev([0, 0, 1, 0, 0]),
                    ev([0, 0, 0, 2, 1]),
                ],
            )
            .unwrap(),
        )
        .unwrap();
        assert_eq!(lower_bound_gencount(&five).unwrap(), 3);
        let squares = ideal_pair(&[[2, 0], [0, 2]]);
        assert_eq!(lower_bound_recursive(&squares).unwrap(), 1);
        let skeleton = ideal_pair(&[[1, 1, 0], [1, 0, 1], [0, 1, 1]]);
        assert_eq!(
            lower_bound_minrho(&CharacteristicPoset::canonical(&skeleton).unwrap()).unwrap(),
            2
        );
        assert_eq!(upper_bound(&maximal(3)).unwrap(), 2);
        assert_eq!(upper_bound(&ideal_pair(&[[1, 1]])).unwrap(), 2);

        let quotient = QuotientPair::quotient_ring(MonomialIdeal::maximal(2)).unwrap();
        assert!(lower_bound_gencount(&quotient).is_err());
        let b = bounds(&quotient).unwrap();
        assert_eq!(b.gencount, None);
        assert_eq!(b.upper, 0);
    }

    #[test]
    fn strip_examples() {
        let pair = ideal_pair(&[[1, 0, 0], [0, 1, 0]]);
        let (reduced, count, keep) = strip_free_variables(&pair);
        assert_eq!(count, 1);
        assert_eq!(keep, vec![0, 1]);
        assert_eq!(reduced, maximal(2));
        assert_eq!(sdepth_exact(&reduced, None, &seq()).unwrap().value, 1);
        let r = sdepth_exact(&pair, None, &seq()).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.unwrap().stats().sdepth, 2);

        let (_, count, _) = strip_free_variables(&maximal(3));
        assert_eq!(count, 0);

        let pair = ideal_pair(&[[2, 0, 0, 0]]);
        assert_eq!(strip_free_variables(&pair).1, 3);
        assert_eq!(sdepth_exact(&pair, None, &seq()).unwrap().value, 4);
    }

    #[test]
    fn budget_exhaustion_reports_lower_bound() {
        let budget = SearchBudget {
            node_limit: Some(3),
            threads: Some(1),
            ..Default::default()
        };
        let r = sdepth_exact(&maximal(5), None, &budget).unwrap();
        assert_eq!(r.status, DepthStatus::LowerBoundOnly);
        assert!(r.value <= 3);
        let w = r.witness.unwrap();
        assert!(w.stats().sdepth >= r.value);
    }

    #[test]
    fn memo_free_search_agrees() {
        let no_memo = SearchOptions {
            memoize: false,
            ..Default::default()
        };
        for pair in [maximal(4), ideal_pair(&[[2, 1, 0], [0, 2, 1], [1, 0, 2]])] {
            let a = sdepth_exact(&pair, None, &seq()).unwrap().value;
            let b = sdepth_exact_with(&pair, None, &seq(), &no_memo)
                .unwrap()
                .value;
            assert_eq!(a, b);
            let a = fdepth_exact(&pair, None, &seq()).unwrap().value;
            let b = fdepth_exact_with(&pair, None, &seq(), &no_memo)
                .unwrap()
                .value;
            assert_eq!(a, b);
        }
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let par = SearchBudget {
            threads: Some(4),
            ..Default::default()
        };
        for n in 2..=4 {
            let pair = maximal(n);
            assert_eq!(
                sdepth_exact(&pair, None, &seq()).unwrap().value,
                sdepth_exact(&pair, None, &par).unwrap().value
            );
            assert_eq!(
                fdepth_exact(&pair, None, &seq()).unwrap().value,
                fdepth_exact(&pair, None, &par).unwrap().value
            );
        }
    }
}
