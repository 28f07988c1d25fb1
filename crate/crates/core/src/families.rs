//! Named instance families and fixed examples.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal, QuotientPair};

/// Generators of the Stanley-Reisner ideal of the six-vertex triangulation
/// of the real projective plane.
pub const RP2_GENERATORS: [[usize; 3]; 10] = [
    [1, 2, 3],
    [1, 2, 4],
    [1, 3, 5],
    [1, 4, 6],
    [1, 5, 6],
    [2, 3, 6],
    [2, 4, 5],
    [2, 5, 6],
    [3, 4, 5],
    [3, 4, 6],
];

/// Facets of the same triangulation.
pub const RP2_FACETS: [[usize; 3]; 10] = [
    [1, 2, 5],
    [1, 2, 6],
    [1, 3, 4],
    [1, 3, 6],
    [1, 4, 5],
    [2, 3, 4],
    [2, 3, 5],
    [2, 4, 6],
    [3, 5, 6],
    [4, 5, 6],
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// `(x1, …, xn)`.
    Maximal { n: usize },
    /// All squarefree monomials of degree `d` in `n` variables.
    Skeleton { n: usize, d: usize },
    /// `(x1 x2³, x1³ x2)`.
    Figure1,
    /// `I = (x1²x2⁴, x1³x2³, x1⁵x2)`, `J = (x1⁴x2⁵, x1⁶x2²)`.
    Figure4,
    /// Stanley-Reisner ideal of the triangulated projective plane.
    Rp2,
    /// Stanley-Reisner ideal of two disjoint edges `{12, 34}`.
    Delta1234,
}

/// A family member, optionally taken as the quotient ring `S/I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub quotient: bool,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind) -> Self {
        FamilySpec {
            kind,
            quotient: false,
        }
    }

    pub fn maximal(n: usize) -> Self {
        Self::new(FamilyKind::Maximal { n })
    }

    pub fn skeleton(n: usize, d: usize) -> Self {
        Self::new(FamilyKind::Skeleton { n, d })
    }

    pub fn quotient(mut self) -> Self {
        self.quotient = true;
        self
    }

    /// Parses a family name with its integer parameters, e.g.
    /// `("skeleton", [4, 2])`.
    pub fn parse(name: &str, params: &[usize]) -> Result<Self> {
        let arity = |k: usize| {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidFamily(format!(
                    "{name} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let kind = match name {
            "maximal" => {
                arity(1)?;
                FamilyKind::Maximal { n: params[0] }
            }
            "skeleton" => {
                arity(2)?;
                FamilyKind::Skeleton {
                    n: params[0],
                    d: params[1],
                }
            }
            "figure1" => {
                arity(0)?;
                FamilyKind::Figure1
            }
            "figure4" => {
                arity(0)?;
                FamilyKind::Figure4
            }
            "rp2" => {
                arity(0)?;
                FamilyKind::Rp2
            }
            "delta-12-34" => {
                arity(0)?;
                FamilyKind::Delta1234
            }
            _ => return Err(Error::InvalidFamily(format!("unknown family `{name}`"))),
        };
        let spec = Self::new(kind);
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        match self.kind {
            FamilyKind::Maximal { n: 0 } => {
                Err(Error::InvalidFamily("maximal(n) needs n ≥ 1".into()))
            }
            FamilyKind::Skeleton { n, d } if d == 0 || d > n => Err(Error::InvalidFamily(format!(
                "skeleton({n},{d}) needs 1 ≤ d ≤ n"
            ))),
            _ => Ok(()),
        }
    }

    /// The customary `g` for this example, when it differs from the
    /// canonical one.
    pub fn suggested_g(&self) -> Option<ExponentVector> {
        match (self.kind, self.quotient) {
            (FamilyKind::Figure4, false) => Some(ExponentVector::from([7, 6])),
            _ => None,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::Maximal { n } => write!(f, "maximal({n})")?,
            FamilyKind::Skeleton { n, d } => write!(f, "skeleton({n},{d})")?,
            FamilyKind::Figure1 => f.write_str("figure1")?,
            FamilyKind::Figure4 => f.write_str("figure4")?,
            FamilyKind::Rp2 => f.write_str("rp2")?,
            FamilyKind::Delta1234 => f.write_str("delta-12-34")?,
        }
        if self.quotient {
            f.write_str(" quotient")?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts `name` or `name(p1,p2,…)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, params) = match s.split_once('(') {
            Some((name, rest)) => {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::InvalidFamily(format!("malformed family `{s}`")))?;
                let params = inner
                    .split(',')
                    .filter(|p| !p.trim().is_empty())
                    .map(|p| {
                        p.trim()
                            .parse()
                            .map_err(|_| Error::InvalidFamily(format!("bad parameter `{p}`")))
                    })
                    .collect::<Result<Vec<usize>>>()?;
                (name, params)
            }
            None => (s, Vec::new()),
        };
        FamilySpec::parse(name.trim(), &params)
    }
}

fn squarefree(n: usize, support: &[usize]) -> ExponentVector {
    let mut v = vec![0; n];
    for &i in support {
        v[i - 1] = 1;
    }
    ExponentVector::new(v)
}

/// All `d`-subsets of `1..=n` in lexicographic order.
fn subsets(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            go(i + 1, n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, d, &mut Vec::new(), &mut out);
    out
}

/// The ideal of a family member.
pub fn family_ideal(spec: &FamilySpec) -> Result<MonomialIdeal> {
    spec.validate()?;
    match spec.kind {
        FamilyKind::Maximal { n } => Ok(MonomialIdeal::maximal(n)),
        FamilyKind::Skeleton { n, d } => {
            MonomialIdeal::new(n, subsets(n, d).iter().map(|s| squarefree(n, s)))
        }
        FamilyKind::Figure1 => MonomialIdeal::new(2, [[1, 3], [3, 1]].map(ExponentVector::from)),
        FamilyKind::Figure4 => {
            MonomialIdeal::new(2, [[2, 4], [3, 3], [5, 1]].map(ExponentVector::from))
        }
        FamilyKind::Rp2 => MonomialIdeal::new(6, RP2_GENERATORS.iter().map(|s| squarefree(6, s))),
        FamilyKind::Delta1234 => MonomialIdeal::new(
            4,
            [[1, 3], [1, 4], [2, 3], [2, 4]]
                .iter()
                .map(|s| squarefree(4, s)),
        ),
    }
}

/// The module `I/J` (or `S/I` with `quotient`) of a family member.
pub fn instantiate(spec: &FamilySpec) -> Result<QuotientPair> {
    let ideal = family_ideal(spec)?;
    if spec.quotient {
        return QuotientPair::quotient_ring(ideal);
    }
    match spec.kind {
        FamilyKind::Figure4 => {
            let j = MonomialIdeal::new(2, [[4, 5], [6, 2]].map(ExponentVector::from))?;
            QuotientPair::new(ideal, j)
        }
        _ => QuotientPair::ideal(ideal),
    }
}

/// Stanley-Reisner ideal of the complex on `[n]` with the given facets
/// (1-based vertices): generated by the minimal nonfaces.
pub fn stanley_reisner(n: usize, facets: &[Vec<usize>]) -> Result<MonomialIdeal> {
    if n > 24 {
        return Err(Error::InvalidFamily(
            "stanley_reisner supports n ≤ 24".into(),
        ));
    }
    let masks = facets
        .iter()
        .map(|f| {
            f.iter().try_fold(0u64, |m, &v| {
                if v == 0 || v > n {
                    Err(Error::VariableOutOfRange { index: v, n })
                } else {
                    Ok(m | 1 << (v - 1))
                }
            })
        })
        .collect::<Result<Vec<u64>>>()?;
    for (a, &fa) in masks.iter().enumerate() {
        for (b, &fb) in masks.iter().enumerate() {
            if a != b && fa & fb == fa {
                return Err(Error::InvalidFamily(format!(
                    "facet {:?} is contained in facet {:?}",
                    facets[a], facets[b]
                )));
            }
        }
    }
    let is_face = |s: u64| masks.iter().any(|&f| s & f == s);
    let mut gens = Vec::new();
    for s in 1u64..(1 << n) {
        // minimal nonface: not a face, every facet of it (drop one vertex) is
        if !is_face(s)
            && (0..n)
                .filter(|i| s >> i & 1 == 1)
                .all(|i| is_face(s & !(1 << i)))
        {
            let support: Vec<usize> = (0..n).filter(|i| s >> i & 1 == 1).map(|i| i + 1).collect();
            gens.push(squarefree(n, &support));
        }
    }
    MonomialIdeal::new(n, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn skeleton_counts() {
        for n in 1..=7 {
            for d in 1..=n {
                let i = family_ideal(&FamilySpec::skeleton(n, d)).unwrap();
                assert_eq!(i.generators().len(), binomial(n, d));
                assert!(i.generators().iter().all(|g| g.degree() == d as u32));
            }
            assert_eq!(
                family_ideal(&FamilySpec::skeleton(n, 1)).unwrap(),
                family_ideal(&FamilySpec::maximal(n)).unwrap()
            );
        }
        assert_eq!(
            family_ideal(&FamilySpec::skeleton(4, 2))
                .unwrap()
                .generators()
                .len(),
            6
        );
    }

    #[test]
    fn invalid_parameters() {
        assert!(FamilySpec::parse("skeleton", &[3, 4]).is_err());
        assert!(FamilySpec::parse("skeleton", &[3, 0]).is_err());
        assert!(FamilySpec::parse("maximal", &[0]).is_err());
        assert!(FamilySpec::parse("maximal", &[]).is_err());
        assert!(FamilySpec::parse("torus", &[]).is_err());
        assert!(family_ideal(&FamilySpec::skeleton(2, 3)).is_err());
    }

    #[test]
    fn parse_from_string() {
        assert_eq!(
            "skeleton(4,2)".parse::<FamilySpec>().unwrap(),
            FamilySpec::skeleton(4, 2)
        );
        assert_eq!(
            "rp2".parse::<FamilySpec>().unwrap(),
            FamilySpec::new(FamilyKind::Rp2)
        );
        assert_eq!(
            FamilySpec::skeleton(4, 2).quotient().to_string(),
            "skeleton(4,2) quotient"
        );
    }

    #[test]
    fn rp2_fixed_generators() {
        let i = family_ideal(&FamilySpec::new(FamilyKind::Rp2)).unwrap();
        assert_eq!(i.generators().len(), 10);
        assert!(i.generators().iter().all(|g| g.degree() == 3));
        let facets: Vec<Vec<usize>> = RP2_FACETS.iter().map(|f| f.to_vec()).collect();
        assert_eq!(stanley_reisner(6, &facets).unwrap(), i);
    }

    #[test]
    fn figure4_instance() {
        let pair = instantiate(&FamilySpec::new(FamilyKind::Figure4)).unwrap();
        let i: Vec<_> = pair.numerator().generators().to_vec();
        let j: Vec<_> = pair.denominator().generators().to_vec();
        for a in [[2, 4], [3, 3], [5, 1]] {
            assert!(i.contains(&ExponentVector::from(a)));
        }
        for a in [[4, 5], [6, 2]] {
            assert!(j.contains(&ExponentVector::from(a)));
        }
        assert_eq!((i.len(), j.len()), (3, 2));
        assert_eq!(
            FamilySpec::new(FamilyKind::Figure4).suggested_g(),
            Some(ExponentVector::from([7, 6]))
        );
    }

    #[test]
    fn delta_from_facets() {
        let i = stanley_reisner(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(
            i,
            family_ideal(&FamilySpec::new(FamilyKind::Delta1234)).unwrap()
        );
        let q = instantiate(&FamilySpec::new(FamilyKind::Delta1234).quotient()).unwrap();
        assert!(q.numerator().is_unit());
    }

    #[test]
    fn stanley_reisner_edge_cases() {
        assert!(stanley_reisner(4, &[vec![1, 2, 3, 4]]).unwrap().is_zero());
        assert!(stanley_reisner(3, &[vec![1, 2], vec![1]]).is_err());
        assert!(stanley_reisner(3, &[vec![1, 4]]).is_err());
        // a vertex outside every facet is itself a minimal nonface
        let i = stanley_reisner(3, &[vec![1, 2]]).unwrap();
        assert_eq!(i.generators(), &[ExponentVector::from([0, 0, 1])]);
    }
}
