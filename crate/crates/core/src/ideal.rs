//! Monomials as exponent vectors, monomial ideals and quotient pairs `J ⊆ I`.
//!
//! Variables are indexed from 0 internally; everything user-facing (display,
//! file formats) numbers them from 1.

use std::fmt;

use crate::error::{Error, Result};

/// A point of ℕⁿ: the exponent vector of the monomial `x^a`.
///
/// The derived `Ord` is lexicographic and only used for canonical sorting;
/// divisibility is [`ExponentVector::divides`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// The unit vector `ε_j`.
    pub fn unit(n: usize, j: usize) -> Self {
        let mut e = vec![0; n];
        e[j] = 1;
        ExponentVector(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, j: usize) -> u32 {
        self.0[j]
    }

    pub fn set(&mut self, j: usize, value: u32) {
        self.0[j] = value;
    }

    /// Total degree `|a|`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Componentwise `self ≤ other`, i.e. `x^self | x^other`.
    #[inline]
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn meet(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn join(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self − (self ∧ other)`: the exponent of `x^self / gcd(x^self, x^other)`.
    pub fn saturating_sub(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Indices of variables with a nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(j, _)| j)
    }

    pub fn coprime(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Returns `Some(j)` if this is the unit vector `ε_j`.
    pub fn as_variable(&self) -> Option<usize> {
        let mut support = self.support();
        let j = support.next()?;
        (support.next().is_none() && self.0[j] == 1).then_some(j)
    }

    /// The monomial in `x1^a*x2^b` notation; `1` for the zero vector.
    pub fn monomial(&self) -> String {
        let terms: Vec<String> = self
            .support()
            .map(|j| match self.0[j] {
                1 => format!("x{}", j + 1),
                a => format!("x{}^{}", j + 1, a),
            })
            .collect();
        if terms.is_empty() {
            "1".to_string()
        } else {
            terms.join("*")
        }
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: n,
                found: self.len(),
            })
        }
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Returns the `≤`-minimal elements of `gens`, sorted and deduplicated.
pub fn minimal_elements(gens: impl IntoIterator<Item = ExponentVector>) -> Vec<ExponentVector> {
    let mut all: Vec<ExponentVector> = gens.into_iter().collect();
    // Sorting by degree first means a divisor is always seen before its multiples.
    all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    all.dedup();
    let mut minimal: Vec<ExponentVector> = Vec::new();
    for a in all {
        if !minimal.iter().any(|m| m.divides(&a)) {
            minimal.push(a);
        }
    }
    minimal.sort();
    minimal
}

/// A monomial ideal of `K[x_1..x_n]`, stored by its minimal generators.
///
/// The generator list is always minimal and sorted lexicographically; the
/// empty list is the zero ideal and `{0}` is the unit ideal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, minimalizing them.
    pub fn new(n: usize, gens: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        let gens: Vec<ExponentVector> = gens.into_iter().collect();
        for g in &gens {
            g.check_len(n)?;
        }
        Ok(MonomialIdeal {
            n,
            gens: minimal_elements(gens),
        })
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![ExponentVector::zero(n)],
        }
    }

    /// The graded maximal ideal `(x_1, …, x_n)`.
    pub fn maximal(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: minimal_elements((0..n).map(|j| ExponentVector::unit(n, j))),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].degree() == 0
    }

    /// Join of all minimal generators (the zero vector for the zero ideal).
    pub fn generator_join(&self) -> ExponentVector {
        self.gens
            .iter()
            .fold(ExponentVector::zero(self.n), |acc, g| acc.join(g))
    }

    /// `x^e ∈ I`.
    pub fn member(&self, e: &ExponentVector) -> Result<bool> {
        e.check_len(self.n)?;
        Ok(self.contains(e))
    }

    /// Unchecked membership test; `e` must have length `n`.
    #[inline]
    pub fn contains(&self, e: &ExponentVector) -> bool {
        self.gens.iter().any(|a| a.divides(e))
    }

    /// `self ⊆ other`.
    pub fn is_subideal_of(&self, other: &MonomialIdeal) -> bool {
        self.n == other.n && self.gens.iter().all(|g| other.contains(g))
    }

    /// The colon ideal `I : x^u`.
    pub fn colon(&self, u: &ExponentVector) -> Result<MonomialIdeal> {
        u.check_len(self.n)?;
        MonomialIdeal::new(self.n, self.gens.iter().map(|a| a.saturating_sub(u)))
    }

    /// `I : x_j^∞`, obtained by deleting `x_j` from every generator.
    pub fn saturate_variable(&self, j: usize) -> Result<MonomialIdeal> {
        if j >= self.n {
            return Err(Error::VariableOutOfRange {
                index: j,
                n: self.n,
            });
        }
        MonomialIdeal::new(
            self.n,
            self.gens.iter().map(|a| {
                let mut b = a.clone();
                b.set(j, 0);
                b
            }),
        )
    }

    /// Range `[p, q]` of `x_n`-degrees over which [`MonomialIdeal::slice`] is defined.
    pub fn slice_range(&self) -> Result<(u32, u32)> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.n == 0 {
            return Err(Error::NotApplicable(
                "slicing needs at least one variable".into(),
            ));
        }
        let last = self.n - 1;
        let p = self.gens.iter().map(|a| a.get(last)).min().unwrap_or(0);
        let q = self.gens.iter().map(|a| a.get(last)).max().unwrap_or(0);
        Ok((p, q))
    }

    /// The ideal `I_j ⊂ K[x_1..x_{n-1}]` with `I ∩ x_n^j K[x_1..x_{n-1}] = x_n^j I_j`.
    pub fn slice(&self, j: u32) -> Result<MonomialIdeal> {
        let (p, q) = self.slice_range()?;
        if j < p || j > q {
            return Err(Error::SliceOutOfRange {
                degree: j,
                min: p,
                max: q,
            });
        }
        let last = self.n - 1;
        MonomialIdeal::new(
            last,
            self.gens
                .iter()
                .filter(|a| a.get(last) <= j)
                .map(|a| ExponentVector::new(a.entries()[..last].to_vec())),
        )
    }

    /// Adjoins `extra` fresh variables after the existing ones.
    pub fn extend(&self, extra: usize) -> MonomialIdeal {
        MonomialIdeal {
            n: self.n + extra,
            gens: self
                .gens
                .iter()
                .map(|a| {
                    let mut v = a.entries().to_vec();
                    v.resize(self.n + extra, 0);
                    ExponentVector::new(v)
                })
                .collect(),
        }
    }

    /// Restricts to the variables in `keep` (in that order). Generators must
    /// not involve the dropped variables.
    pub(crate) fn restrict(&self, keep: &[usize]) -> MonomialIdeal {
        MonomialIdeal {
            n: keep.len(),
            gens: minimal_elements(
                self.gens
                    .iter()
                    .map(|a| ExponentVector::new(keep.iter().map(|&j| a.get(j)).collect())),
            ),
        }
    }

    fn require_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else {
            Ok(())
        }
    }

    pub fn is_principal(&self) -> Result<bool> {
        self.require_nonzero()?;
        Ok(self.gens.len() == 1)
    }

    /// Minimal generators pairwise coprime.
    pub fn is_complete_intersection(&self) -> Result<bool> {
        self.require_nonzero()?;
        Ok(self
            .gens
            .iter()
            .enumerate()
            .all(|(k, a)| self.gens[k + 1..].iter().all(|b| a.coprime(b))))
    }

    /// Checks the Borel-type exchange condition: for every minimal generator
    /// `u`, every `x_i | u` with `x_i^s ‖ u` and every `j < i`, some
    /// `x_j^t · u / x_i^s` lies in `I`.
    ///
    /// Only minimal generators are tested. Membership of `x_j^t · v` is
    /// monotone in `t`, so testing `t` = sum of all generator degrees decides
    /// the existential.
    pub fn is_borel_type(&self) -> Result<bool> {
        self.require_nonzero()?;
        let bound: u32 = self.gens.iter().map(|a| a.degree()).sum();
        for u in &self.gens {
            for i in u.support() {
                let mut v = u.clone();
                v.set(i, 0);
                for j in 0..i {
                    let mut w = v.clone();
                    w.set(j, w.get(j) + bound);
                    if !self.contains(&w) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// `m(I)`: the largest (1-based) variable index occurring in a minimal generator.
    pub fn max_variable(&self) -> usize {
        self.gens
            .iter()
            .filter_map(|a| a.support().last())
            .map(|j| j + 1)
            .max()
            .unwrap_or(0)
    }

    /// Depths of `S/I` and `I` for an ideal of Borel type, with the
    /// saturation chain `I = I_0 ⊂ I_1 ⊂ … ⊂ I_r = S`.
    pub fn borel_depth(&self) -> Result<BorelDepth> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if !self.is_borel_type()? {
            return Err(Error::NotBorelType);
        }
        let m = self.max_variable();
        let mut chain = vec![self.clone()];
        loop {
            let last = chain.last().expect("chain is nonempty");
            if last.is_unit() {
                break;
            }
            let next = last.saturate_variable(last.max_variable() - 1)?;
            chain.push(next);
        }
        Ok(BorelDepth {
            depth_quotient: (self.n - m) as u32,
            depth_ideal: (self.n - m + 1) as u32,
            chain,
        })
    }

    /// `depth I = n − r + 1` for a complete intersection with `r` generators.
    pub fn ci_depth(&self) -> Result<u32> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if !self.is_complete_intersection()? {
            return Err(Error::NotCompleteIntersection);
        }
        Ok((self.n + 1 - self.gens.len()) as u32)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let gens: Vec<String> = self.gens.iter().map(|g| g.monomial()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorelDepth {
    pub depth_quotient: u32,
    pub depth_ideal: u32,
    pub chain: Vec<MonomialIdeal>,
}

/// The colon ideals of a sequence with linear quotients, or the first
/// position where the sequence fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearQuotients {
    /// `sets[i]` lists the variables generating `(u_1..u_{i-1}) : u_i`.
    Success(Vec<Vec<usize>>),
    /// `(u_1..u_{i-1}) : u_i` is not generated by variables (0-based `index`).
    Failure { index: usize, colon: MonomialIdeal },
}

/// Checks whether `gens` is a sequence with linear quotients.
pub fn linear_quotients_check(n: usize, gens: &[ExponentVector]) -> Result<LinearQuotients> {
    if gens.is_empty() {
        return Err(Error::NotApplicable("empty generator sequence".into()));
    }
    for g in gens {
        g.check_len(n)?;
    }
    let mut sets = vec![Vec::new()];
    for i in 1..gens.len() {
        let prefix = MonomialIdeal::new(n, gens[..i].iter().cloned())?;
        let colon = prefix.colon(&gens[i])?;
        let vars: Option<Vec<usize>> = colon.generators().iter().map(|g| g.as_variable()).collect();
        match vars {
            Some(mut v) => {
                v.sort_unstable();
                sets.push(v);
            }
            None => return Ok(LinearQuotients::Failure { index: i, colon }),
        }
    }
    Ok(LinearQuotients::Success(sets))
}

/// A module `I/J` with `J ⊆ I ≠ J`, both ideals in the same ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuotientPair {
    numerator: MonomialIdeal,
    denominator: MonomialIdeal,
}

impl QuotientPair {
    pub fn new(numerator: MonomialIdeal, denominator: MonomialIdeal) -> Result<Self> {
        if numerator.num_vars() != denominator.num_vars() {
            return Err(Error::LengthMismatch {
                expected: numerator.num_vars(),
                found: denominator.num_vars(),
            });
        }
        if let Some(b) = denominator
            .generators()
            .iter()
            .find(|b| !numerator.contains(b))
        {
            return Err(Error::NotContained(b.clone()));
        }
        if numerator.is_subideal_of(&denominator) {
            return Err(Error::EmptyModule);
        }
        Ok(QuotientPair {
            numerator,
            denominator,
        })
    }

    /// The ideal `I` itself, i.e. the pair `(I, 0)`.
    pub fn ideal(i: MonomialIdeal) -> Result<Self> {
        let n = i.num_vars();
        QuotientPair::new(i, MonomialIdeal::zero(n))
    }

    /// The ring `S/I`, i.e. the pair `(S, I)`.
    pub fn quotient_ring(i: MonomialIdeal) -> Result<Self> {
        let n = i.num_vars();
        QuotientPair::new(MonomialIdeal::unit(n), i)
    }

    pub fn num_vars(&self) -> usize {
        self.numerator.num_vars()
    }

    /// `I`.
    pub fn numerator(&self) -> &MonomialIdeal {
        &self.numerator
    }

    /// `J`.
    pub fn denominator(&self) -> &MonomialIdeal {
        &self.denominator
    }

    /// `x^e ∈ I \ J`.
    #[inline]
    pub fn contains(&self, e: &ExponentVector) -> bool {
        self.numerator.contains(e) && !self.denominator.contains(e)
    }

    /// Join of all generators of `I` and `J`: the smallest admissible `g`.
    pub fn canonical_g(&self) -> ExponentVector {
        self.numerator
            .generator_join()
            .join(&self.denominator.generator_join())
    }

    /// Checks that `g` dominates every generator of `I` and `J`.
    pub fn check_admissible(&self, g: &ExponentVector) -> Result<()> {
        g.check_len(self.num_vars())?;
        for a in self
            .numerator
            .generators()
            .iter()
            .chain(self.denominator.generators())
        {
            if !a.divides(g) {
                return Err(Error::InadmissibleG {
                    g: g.clone(),
                    generator: a.clone(),
                });
            }
        }
        Ok(())
    }

    /// Adjoins `extra` fresh variables (`IT/JT`).
    pub fn extend(&self, extra: usize) -> QuotientPair {
        QuotientPair {
            numerator: self.numerator.extend(extra),
            denominator: self.denominator.extend(extra),
        }
    }

    /// Variables that occur in some minimal generator of `I` or `J`.
    pub fn used_variables(&self) -> Vec<usize> {
        let g = self.canonical_g();
        (0..self.num_vars()).filter(|&j| g.get(j) > 0).collect()
    }

    pub(crate) fn restrict(&self, keep: &[usize]) -> QuotientPair {
        QuotientPair {
            numerator: self.numerator.restrict(keep),
            denominator: self.denominator.restrict(keep),
        }
    }
}

impl fmt::Display for QuotientPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.numerator, self.denominator)
    }
}
