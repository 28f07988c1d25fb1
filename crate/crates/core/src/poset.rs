//! The characteristic poset `P^g_{I/J} = { c ≤ g : x^c ∈ I \ J }`.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, QuotientPair};
use crate::par;

/// Boxes larger than this are refused rather than enumerated.
pub const MAX_BOX_SIZE: u64 = 1 << 26;

/// A closed interval `[bottom, top]`, given by point indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub bottom: usize,
    pub top: usize,
}

impl Interval {
    pub fn new(bottom: usize, top: usize) -> Self {
        Interval { bottom, top }
    }

    pub fn singleton(c: usize) -> Self {
        Interval { bottom: c, top: c }
    }
}

/// The finite poset `P^g_{I/J}` together with its order relation, `ρ` and
/// `Z_c` for every point.
///
/// Points are stored in a fixed linear extension: by total degree, then
/// lexicographically. Immutable after [`CharacteristicPoset::build`].
#[derive(Clone, Debug)]
pub struct CharacteristicPoset {
    pair: QuotientPair,
    g: ExponentVector,
    points: Vec<ExponentVector>,
    index: HashMap<ExponentVector, usize>,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    rho: Vec<u32>,
    zset: Vec<Vec<usize>>,
}

impl CharacteristicPoset {
    /// Builds the poset with the canonical `g` (join of all generators).
    pub fn canonical(pair: &QuotientPair) -> Result<Self> {
        Self::build(pair, &pair.canonical_g())
    }

    pub fn build(pair: &QuotientPair, g: &ExponentVector) -> Result<Self> {
        pair.check_admissible(g)?;
        let n = pair.num_vars();
        let radix: Vec<u64> = g.entries().iter().map(|&x| x as u64 + 1).collect();
        let total = radix
            .iter()
            .try_fold(1u64, |acc, &r| acc.checked_mul(r))
            .filter(|&t| t <= MAX_BOX_SIZE)
            .ok_or_else(|| {
                Error::NotApplicable(format!("box [0, {g}] is too large to enumerate"))
            })?;

        let decode = |mut idx: u64| {
            let mut e = vec![0u32; n];
            for j in (0..n).rev() {
                e[j] = (idx % radix[j]) as u32;
                idx /= radix[j];
            }
            ExponentVector::new(e)
        };
        let mut points: Vec<ExponentVector> = par::map_range(total as usize, |idx| {
            let e = decode(idx as u64);
            pair.contains(&e).then_some(e)
        })
        .into_iter()
        .flatten()
        .collect();
        points.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));

        let len = points.len();
        let up = par::map_range(len, |i| {
            BitSet::from_indices(len, (i..len).filter(|&j| points[i].divides(&points[j])))
        });
        let down = par::map_range(len, |i| {
            BitSet::from_indices(len, (0..=i).filter(|&j| points[j].divides(&points[i])))
        });
        let zset: Vec<Vec<usize>> = points
            .iter()
            .map(|c| (0..n).filter(|&j| c.get(j) == g.get(j)).collect())
            .collect();
        let rho = zset.iter().map(|z| z.len() as u32).collect();
        let index = points
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();

        Ok(CharacteristicPoset {
            pair: pair.clone(),
            g: g.clone(),
            points,
            index,
            up,
            down,
            rho,
            zset,
        })
    }

    pub fn pair(&self) -> &QuotientPair {
        &self.pair
    }

    pub fn g(&self) -> &ExponentVector {
        &self.g
    }

    pub fn num_vars(&self) -> usize {
        self.g.len()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points in linear-extension order.
    pub fn points(&self) -> &[ExponentVector] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &ExponentVector {
        &self.points[i]
    }

    pub fn index_of(&self, e: &ExponentVector) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn rho(&self, i: usize) -> u32 {
        self.rho[i]
    }

    /// `Z_c`: variables `j` with `c(j) = g(j)`.
    pub fn zset(&self, i: usize) -> &[usize] {
        &self.zset[i]
    }

    /// Points `d` with `c ≤ d` (including `c`).
    pub fn up_set(&self, i: usize) -> &BitSet {
        &self.up[i]
    }

    /// Points `d` with `d ≤ c` (including `c`).
    pub fn down_set(&self, i: usize) -> &BitSet {
        &self.down[i]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn min_rho(&self) -> Option<u32> {
        self.rho.iter().copied().min()
    }

    pub fn max_rho(&self) -> Option<u32> {
        self.rho.iter().copied().max()
    }

    pub fn empty_set(&self) -> BitSet {
        BitSet::new(self.len())
    }

    /// Looks up an interval by its end points.
    pub fn interval(&self, bottom: &ExponentVector, top: &ExponentVector) -> Result<Interval> {
        let b = self
            .index_of(bottom)
            .ok_or_else(|| Error::NotAPoint(bottom.clone()))?;
        let t = self
            .index_of(top)
            .ok_or_else(|| Error::NotAPoint(top.clone()))?;
        if !self.leq(b, t) {
            return Err(Error::IncomparableInterval {
                bottom: bottom.clone(),
                top: top.clone(),
            });
        }
        Ok(Interval::new(b, t))
    }

    /// The members of `[bottom, top]`.
    pub fn interval_members(&self, interval: Interval) -> Result<BitSet> {
        if !self.leq(interval.bottom, interval.top) {
            return Err(Error::IncomparableInterval {
                bottom: self.points[interval.bottom].clone(),
                top: self.points[interval.top].clone(),
            });
        }
        Ok(self.members_unchecked(interval))
    }

    pub(crate) fn members_unchecked(&self, interval: Interval) -> BitSet {
        let mut s = self.up[interval.bottom].clone();
        s.intersect_with(&self.down[interval.top]);
        s
    }

    /// Whether `s` is closed under going down in the poset.
    pub fn is_down_set(&self, s: &BitSet) -> bool {
        s.iter().all(|p| self.down[p].is_subset(s))
    }

    /// Minimal elements of the complement of `covered`.
    pub fn minimal_uncovered(&self, covered: &BitSet) -> Vec<usize> {
        let uncovered = covered.complement();
        uncovered
            .iter()
            .filter(|&p| self.down[p].iter().all(|q| q == p || covered.contains(q)))
            .collect()
    }

    /// One point per line: the exponents then `ρ`, space separated.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, p) in self.points.iter().enumerate() {
            for a in p.entries() {
                write!(out, "{a} ").expect("writing to a String");
            }
            writeln!(out, "{}", self.rho[i]).expect("writing to a String");
        }
        out
    }
}
