#![allow(dead_code)]

use std::collections::HashMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use stanley_core::{ExponentVector, MonomialIdeal, QuotientPair};

/// Random ideal in `n` variables with up to `max_gens` generators and
/// exponents at most `max_exp`; never the unit ideal.
pub fn random_ideal(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_gens: usize,
    max_exp: u32,
) -> MonomialIdeal {
    loop {
        let k = rng.gen_range(1..=max_gens);
        let gens: Vec<ExponentVector> = (0..k)
            .map(|_| ExponentVector::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect()))
            .collect();
        let i = MonomialIdeal::new(n, gens).unwrap();
        if !i.is_unit() {
            return i;
        }
    }
}

/// `J ⊂ I` built from multiples of generators of `I`, or `0`.
pub fn random_subideal(rng: &mut ChaCha8Rng, i: &MonomialIdeal, max_exp: u32) -> MonomialIdeal {
    let n = i.num_vars();
    loop {
        let k = rng.gen_range(0..=2);
        let gens: Vec<ExponentVector> = (0..k)
            .map(|_| {
                let u = &i.generators()[rng.gen_range(0..i.generators().len())];
                let bump = ExponentVector::new(
                    (0..n).map(|_| rng.gen_range(0..=max_exp.min(2))).collect(),
                );
                u.add(&bump)
            })
            .collect();
        let j = MonomialIdeal::new(n, gens).unwrap();
        if QuotientPair::new(i.clone(), j.clone()).is_ok() {
            return j;
        }
    }
}

pub fn random_pair(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_gens: usize,
    max_exp: u32,
    with_j: bool,
) -> QuotientPair {
    let i = random_ideal(rng, n, max_gens, max_exp);
    let j = if with_j {
        random_subideal(rng, &i, max_exp)
    } else {
        MonomialIdeal::zero(n)
    };
    QuotientPair::new(i, j).unwrap()
}

/// Brute-force model of the module: the points `c ≤ g` with
/// `x^c ∈ I \ J`, tested by divisibility directly.
pub struct Model {
    pub g: Vec<u32>,
    pub points: Vec<Vec<u32>>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl Model {
    pub fn new(i: &[Vec<u32>], j: &[Vec<u32>], g: &[u32]) -> Self {
        let mut points = Vec::new();
        let mut c = vec![0u32; g.len()];
        loop {
            let in_i = i.iter().any(|u| divides(u, &c));
            let in_j = j.iter().any(|u| divides(u, &c));
            if in_i && !in_j {
                points.push(c.clone());
            }
            let mut k = 0;
            while k < g.len() && c[k] == g[k] {
                c[k] = 0;
                k += 1;
            }
            if k == g.len() {
                break;
            }
            c[k] += 1;
        }
        Model {
            g: g.to_vec(),
            points,
        }
    }

    pub fn from_pair(pair: &QuotientPair, g: &ExponentVector) -> Self {
        let conv = |m: &MonomialIdeal| {
            m.generators()
                .iter()
                .map(|u| u.entries().to_vec())
                .collect::<Vec<_>>()
        };
        Model::new(
            &conv(pair.numerator()),
            &conv(pair.denominator()),
            g.entries(),
        )
    }

    pub fn rho(&self, p: usize) -> u32 {
        self.points[p]
            .iter()
            .zip(&self.g)
            .filter(|(a, b)| a == b)
            .count() as u32
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        divides(&self.points[a], &self.points[b])
    }

    fn interval_mask(&self, a: usize, b: usize) -> u64 {
        (0..self.points.len())
            .filter(|&p| self.leq(a, p) && self.leq(p, b))
            .fold(0, |m, p| m | 1 << p)
    }

    fn intervals(&self) -> Vec<(u64, u32)> {
        let n = self.points.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.leq(a, b) {
                    out.push((self.interval_mask(a, b), self.rho(b)));
                }
            }
        }
        out
    }

    fn is_down_closed(&self, mask: u64) -> bool {
        (0..self.points.len()).all(|p| {
            mask >> p & 1 == 0
                || (0..self.points.len()).all(|q| !self.leq(q, p) || mask >> q & 1 == 1)
        })
    }

    /// Largest `min ρ(top)` over all interval partitions.
    pub fn sdepth(&self) -> u32 {
        assert!(self.points.len() <= 40, "oracle is exponential");
        let intervals = self.intervals();
        let full = if self.points.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.points.len()) - 1
        };
        let mut memo = HashMap::new();
        // cover the highest-index uncovered point with any interval holding it
        fn go(covered: u64, full: u64, ivs: &[(u64, u32)], memo: &mut HashMap<u64, u32>) -> u32 {
            if covered == full {
                return u32::MAX;
            }
            if let Some(&v) = memo.get(&covered) {
                return v;
            }
            let p = 63 - (full & !covered).leading_zeros() as usize;
            let mut best = 0;
            for &(mask, r) in ivs {
                if mask >> p & 1 == 1 && mask & covered == 0 && r > best {
                    best = best.max(go(covered | mask, full, ivs, memo).min(r));
                }
            }
            memo.insert(covered, best);
            best
        }
        go(0, full, &intervals, &mut memo)
    }

    /// Largest `min ρ(top)` over interval sequences whose prefix unions are
    /// down-closed.
    pub fn fdepth(&self) -> u32 {
        assert!(self.points.len() <= 40, "oracle is exponential");
        let intervals = self.intervals();
        let full = (1u64 << self.points.len()) - 1;
        let mut memo = HashMap::new();
        fn go(
            m: &Model,
            covered: u64,
            full: u64,
            ivs: &[(u64, u32)],
            memo: &mut HashMap<u64, u32>,
        ) -> u32 {
            if covered == full {
                return u32::MAX;
            }
            if let Some(&v) = memo.get(&covered) {
                return v;
            }
            let mut best = 0;
            for &(mask, r) in ivs {
                if mask & covered == 0 && r > best && m.is_down_closed(covered | mask) {
                    best = best.max(go(m, covered | mask, full, ivs, memo).min(r));
                }
            }
            memo.insert(covered, best);
            best
        }
        go(self, 0, full, &intervals, &mut memo)
    }
}
