//! Stanley spaces and decompositions, interval partitions of the
//! characteristic poset, and the translations between the two.
//!
//! A partition `P = ⋃ [c_i, d_i]` yields the decomposition
//!
//! ```text
//! I/J = ⊕_i ⊕_{c ∈ [c_i, d_i], c(j) = c_i(j) ∀ j ∈ Z_{d_i}} x^c K[Z_{d_i}]
//! ```
//!
//! whose Stanley depth is `min_i ρ(d_i)`. Conversely every decomposition can
//! be folded back into a partition that is at least as good.
//!
//! Partitions are ordered: when every prefix union is a down-set of the poset
//! the partition is *ordered*, and listing its Stanley spaces in reverse
//! (last interval first, larger generators first within an interval) gives a
//! prime filtration.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal, QuotientPair};
use crate::par;
use crate::poset::{CharacteristicPoset, Interval};

/// The Stanley space `x^u K[Z]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StanleySpace {
    pub generator: ExponentVector,
    /// Free variables, sorted, 0-based.
    pub free: Vec<usize>,
}

impl StanleySpace {
    pub fn new(generator: ExponentVector, free: impl IntoIterator<Item = usize>) -> Self {
        let free: BTreeSet<usize> = free.into_iter().collect();
        StanleySpace {
            generator,
            free: free.into_iter().collect(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.free.len()
    }

    fn is_free(&self, j: usize) -> bool {
        self.free.binary_search(&j).is_ok()
    }

    /// `x^e ∈ x^u K[Z]`: `e ≥ u` with equality off `Z`.
    pub fn contains(&self, e: &ExponentVector) -> bool {
        self.generator
            .entries()
            .iter()
            .zip(e.entries())
            .enumerate()
            .all(|(j, (&u, &x))| if self.is_free(j) { x >= u } else { x == u })
    }
}

impl fmt::Display for StanleySpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = self.free.iter().map(|j| (j + 1).to_string()).collect();
        if vars.is_empty() {
            write!(f, "x^{} K[]", self.generator)
        } else {
            write!(f, "x^{} K[ {} ]", self.generator, vars.join(" "))
        }
    }
}

/// Summary statistics of a decomposition or partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecompositionStats {
    /// Minimum dimension of a Stanley space (minimum `ρ(top)` for partitions).
    pub sdepth: u32,
    /// Maximum total degree of a space generator (interval bottom).
    pub max_bottom_degree: u32,
}

/// A list of Stanley spaces claimed to decompose `I/J`. Validity is decided
/// by [`StanleyDecomposition::verify`], not by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleyDecomposition {
    pair: QuotientPair,
    spaces: Vec<StanleySpace>,
}

/// Outcome of [`StanleyDecomposition::verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    /// `x^point` lies in `count` spaces but should lie in `expected`.
    Counterexample {
        point: ExponentVector,
        count: usize,
        expected: usize,
    },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

impl StanleyDecomposition {
    pub fn new(pair: QuotientPair, spaces: Vec<StanleySpace>) -> Result<Self> {
        let n = pair.num_vars();
        for s in &spaces {
            if s.generator.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: s.generator.len(),
                });
            }
            if let Some(&j) = s.free.iter().find(|&&j| j >= n) {
                return Err(Error::VariableOutOfRange { index: j, n });
            }
        }
        Ok(StanleyDecomposition { pair, spaces })
    }

    pub fn pair(&self) -> &QuotientPair {
        &self.pair
    }

    pub fn spaces(&self) -> &[StanleySpace] {
        &self.spaces
    }

    pub fn into_spaces(self) -> Vec<StanleySpace> {
        self.spaces
    }

    pub fn stats(&self) -> DecompositionStats {
        DecompositionStats {
            sdepth: self
                .spaces
                .iter()
                .map(|s| s.dimension() as u32)
                .min()
                .unwrap_or(0),
            max_bottom_degree: self
                .spaces
                .iter()
                .map(|s| s.generator.degree())
                .max()
                .unwrap_or(0),
        }
    }

    /// Set equality of spaces, ignoring order.
    pub fn same_spaces(&self, other: &StanleyDecomposition) -> bool {
        let a: BTreeSet<&StanleySpace> = self.spaces.iter().collect();
        let b: BTreeSet<&StanleySpace> = other.spaces.iter().collect();
        self.spaces.len() == other.spaces.len() && a == b
    }

    /// Decides whether the spaces decompose `I/J` exactly.
    ///
    /// Every monomial `x^e` in the box `[0, g′ + 1]` is checked, where `g′`
    /// joins the canonical `g` with all space generators: it must lie in
    /// exactly one space when `x^e ∈ I \ J` and in none otherwise. Every
    /// predicate involved depends on `e(j)` only through `min(e(j), g′(j)+1)`,
    /// so the finite check is complete. Returns the first counterexample in
    /// box order.
    pub fn verify(&self) -> Verdict {
        let n = self.pair.num_vars();
        let bound = self
            .spaces
            .iter()
            .fold(self.pair.canonical_g(), |acc, s| acc.join(&s.generator));
        let radix: Vec<usize> = bound.entries().iter().map(|&b| b as usize + 2).collect();
        let total: usize = radix.iter().product();
        let decode = |mut idx: usize| {
            let mut e = vec![0u32; n];
            for j in (0..n).rev() {
                e[j] = (idx % radix[j]) as u32;
                idx /= radix[j];
            }
            ExponentVector::new(e)
        };
        let found = par::find_first(total, |idx| {
            let e = decode(idx);
            let expected = usize::from(self.pair.contains(&e));
            let count = self.spaces.iter().filter(|s| s.contains(&e)).count();
            (count != expected).then_some(Verdict::Counterexample {
                point: e,
                count,
                expected,
            })
        });
        found.unwrap_or(Verdict::Valid)
    }

    /// Whether the spaces, in stored order, satisfy the prime filtration
    /// condition: for each space `x^u K[Z]` and each `x_k ∉ Z`, `x_k x^u`
    /// lies in `J` or in one of the spaces up to and including this one.
    pub fn is_filtration_order(&self) -> bool {
        let n = self.pair.num_vars();
        self.spaces.iter().enumerate().all(|(t, s)| {
            (0..n).filter(|&k| !s.is_free(k)).all(|k| {
                let mut e = s.generator.clone();
                e.set(k, e.get(k) + 1);
                self.pair.denominator().contains(&e)
                    || self.spaces[..=t].iter().any(|p| p.contains(&e))
            })
        })
    }

    /// Folds a valid decomposition into a partition of `poset` whose
    /// Stanley depth is at least that of the decomposition.
    ///
    /// Each point `b` is sent to `[c, d]` where `x^c K[Z]` is the space
    /// containing `x^b` and `d` raises the free coordinates of `c` to `g`.
    /// Intervals appear in order of their first point in the linear
    /// extension; duplicates are merged.
    pub fn to_partition(&self, poset: &Arc<CharacteristicPoset>) -> Result<Partition> {
        if poset.pair() != &self.pair {
            return Err(Error::NotApplicable(
                "poset was built for a different module".into(),
            ));
        }
        let g = poset.g();
        let mut seen = HashSet::new();
        let mut intervals = Vec::new();
        for b in poset.points() {
            let mut containing = self.spaces.iter().filter(|s| s.contains(b));
            let space = match (containing.next(), containing.count()) {
                (Some(s), 0) => s,
                (first, rest) => {
                    return Err(Error::InvalidDecomposition {
                        point: b.clone(),
                        count: rest + usize::from(first.is_some()),
                    })
                }
            };
            let c = &space.generator;
            let mut d = c.clone();
            for &j in &space.free {
                d.set(j, g.get(j));
            }
            let interval = poset.interval(c, &d)?;
            if seen.insert(interval) {
                intervals.push(interval);
            }
        }
        Partition::new(Arc::clone(poset), intervals)
    }
}

impl fmt::Display for StanleyDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.spaces {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

/// An ordered list of pairwise disjoint intervals covering the poset.
#[derive(Clone, Debug)]
pub struct Partition {
    poset: Arc<CharacteristicPoset>,
    intervals: Vec<Interval>,
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.poset, &other.poset) && self.intervals == other.intervals
    }
}

impl Partition {
    /// Validates that the intervals are well formed, disjoint and cover
    /// every point.
    pub fn new(poset: Arc<CharacteristicPoset>, intervals: Vec<Interval>) -> Result<Self> {
        let mut covered = poset.empty_set();
        for &iv in &intervals {
            if iv.bottom >= poset.len() || iv.top >= poset.len() {
                return Err(Error::InvalidPartition(format!(
                    "interval index out of range for a poset of {} points",
                    poset.len()
                )));
            }
            let members = poset.interval_members(iv)?;
            if !members.is_disjoint(&covered) {
                return Err(Error::InvalidPartition(format!(
                    "interval [{}, {}] overlaps an earlier interval",
                    poset.point(iv.bottom),
                    poset.point(iv.top)
                )));
            }
            covered.union_with(&members);
        }
        if let Some(missing) = covered.first_missing() {
            return Err(Error::InvalidPartition(format!(
                "point {} is not covered",
                poset.point(missing)
            )));
        }
        Ok(Partition { poset, intervals })
    }

    pub(crate) fn new_unchecked(poset: Arc<CharacteristicPoset>, intervals: Vec<Interval>) -> Self {
        debug_assert!(Partition::new(Arc::clone(&poset), intervals.clone()).is_ok());
        Partition { poset, intervals }
    }

    /// Builds a partition from `(bottom, top)` vectors.
    pub fn from_vectors(
        poset: Arc<CharacteristicPoset>,
        intervals: &[(ExponentVector, ExponentVector)],
    ) -> Result<Self> {
        let ivs = intervals
            .iter()
            .map(|(c, d)| poset.interval(c, d))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(poset, ivs)
    }

    /// All singletons `[c, c]` in linear-extension order.
    pub fn singletons(poset: Arc<CharacteristicPoset>) -> Self {
        let intervals = (0..poset.len()).map(Interval::singleton).collect();
        Partition { poset, intervals }
    }

    pub fn poset(&self) -> &Arc<CharacteristicPoset> {
        &self.poset
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// Intervals as `(bottom, top)` vectors.
    pub fn interval_vectors(&self) -> Vec<(ExponentVector, ExponentVector)> {
        self.intervals
            .iter()
            .map(|iv| {
                (
                    self.poset.point(iv.bottom).clone(),
                    self.poset.point(iv.top).clone(),
                )
            })
            .collect()
    }

    pub fn stats(&self) -> DecompositionStats {
        DecompositionStats {
            sdepth: self
                .intervals
                .iter()
                .map(|iv| self.poset.rho(iv.top))
                .min()
                .unwrap_or(0),
            max_bottom_degree: self
                .intervals
                .iter()
                .map(|iv| self.poset.point(iv.bottom).degree())
                .max()
                .unwrap_or(0),
        }
    }

    /// Whether every prefix union of the intervals is a down-set.
    pub fn is_ordered(&self) -> bool {
        let mut covered = self.poset.empty_set();
        for &iv in &self.intervals {
            let members = self.poset.members_unchecked(iv);
            covered.union_with(&members);
            if !members
                .iter()
                .all(|p| self.poset.down_set(p).is_subset(&covered))
            {
                return false;
            }
        }
        true
    }

    /// The Stanley spaces of one interval: `x^c K[Z_d]` for every `c` in
    /// `[bottom, top]` that agrees with the bottom on `Z_d`.
    fn interval_spaces(&self, iv: Interval) -> Vec<StanleySpace> {
        let bottom = self.poset.point(iv.bottom);
        let top = self.poset.point(iv.top);
        let free = self.poset.zset(iv.top);
        let bound: Vec<usize> = (0..bottom.len()).filter(|j| !free.contains(j)).collect();
        let mut out = Vec::new();
        let mut c = bottom.clone();
        loop {
            out.push(StanleySpace::new(c.clone(), free.iter().copied()));
            // odometer over the bound coordinates
            let mut advanced = false;
            for &j in &bound {
                if c.get(j) < top.get(j) {
                    c.set(j, c.get(j) + 1);
                    advanced = true;
                    break;
                }
                c.set(j, bottom.get(j));
            }
            if !advanced {
                break;
            }
        }
        out
    }

    /// The Stanley decomposition induced by this partition, interval by
    /// interval in stored order.
    pub fn to_decomposition(&self) -> StanleyDecomposition {
        let spaces = self
            .intervals
            .iter()
            .flat_map(|&iv| self.interval_spaces(iv))
            .collect();
        StanleyDecomposition {
            pair: self.poset.pair().clone(),
            spaces,
        }
    }

    /// The induced decomposition listed in prime-filtration order: intervals
    /// reversed, and within an interval by decreasing generator degree.
    /// Meaningful when [`Partition::is_ordered`] holds.
    pub fn filtration_decomposition(&self) -> StanleyDecomposition {
        let mut spaces = Vec::new();
        for &iv in self.intervals.iter().rev() {
            let mut block = self.interval_spaces(iv);
            block.sort_by(|a, b| {
                b.generator
                    .degree()
                    .cmp(&a.generator.degree())
                    .then_with(|| a.generator.cmp(&b.generator))
            });
            spaces.extend(block);
        }
        StanleyDecomposition {
            pair: self.poset.pair().clone(),
            spaces,
        }
    }

    /// Partition with intervals listed in a different order.
    pub fn reordered(&self, order: &[usize]) -> Result<Partition> {
        let intervals = order
            .iter()
            .map(|&k| {
                self.intervals
                    .get(k)
                    .copied()
                    .ok_or_else(|| Error::InvalidPartition(format!("no interval {k}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(Arc::clone(&self.poset), intervals)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, d) in self.interval_vectors() {
            writeln!(f, "[{c} , {d}]")?;
        }
        Ok(())
    }
}

/// The explicit partition of `P_I` with Stanley depth `n − 1` for a
/// complete intersection `I` with three minimal generators.
///
/// With supports `β, γ, δ` of the generators `b, c, d` and `a = b ∨ c ∨ d`
/// the partition is `B ∪ C ∪ D ∪ [a, a]` where
/// `B = ⋃_k [b + Σ_{l<k} a(γ_l) ε_{γ_l}, a − ε_{γ_k}]`, and `C`, `D` follow
/// cyclically (`c` with `δ`, `d` with `β`). Variables in no generator keep
/// exponent 0 and only add to every `ρ`.
pub fn mci_partition(ideal: &MonomialIdeal) -> Result<Partition> {
    if !ideal.is_complete_intersection()? || ideal.generators().len() != 3 {
        return Err(Error::NotApplicable(
            "needs a complete intersection with exactly three generators".into(),
        ));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let pair = QuotientPair::ideal(ideal.clone())?;
    let poset = Arc::new(CharacteristicPoset::canonical(&pair)?);
    let a = poset.g().clone();
    let mut gens = ideal.generators().to_vec();
    gens.sort_by_key(|u| u.support().next());
    let blocks: Vec<Vec<usize>> = gens.iter().map(|u| u.support().collect()).collect();

    let mut intervals = Vec::new();
    for (k, base) in gens.iter().enumerate() {
        let next = &blocks[(k + 1) % 3];
        let mut bottom = base.clone();
        for &v in next {
            let mut top = a.clone();
            top.set(v, a.get(v) - 1);
            intervals.push((bottom.clone(), top));
            bottom.set(v, a.get(v));
        }
    }
    intervals.push((a.clone(), a));
    Partition::from_vectors(poset, &intervals)
}

/// Convenience: the set of `(bottom, top)` pairs of a partition.
pub fn interval_set(p: &Partition) -> BTreeSet<(ExponentVector, ExponentVector)> {
    p.interval_vectors().into_iter().collect()
}
