//! The arithmetic group Γ(D₁, D₂) described by its ramification data.

use std::fmt;

use crate::error::{Error, Result};
use crate::number_theory::{factor_squarefree, residue_class, PrimeFactorization};

/// Selects one of the three prime sets of a level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Part {
    D,
    D1,
    D2,
}

/// A validated level: `D = D₁·D₂` is squarefree with an even, nonzero
/// number of prime factors, so it is the discriminant of an indefinite
/// division quaternion algebra over Q. Primes of `D₁` are where the
/// maximal lattice is locally `(O_p, O_p)`, primes of `D₂` where it is
/// `(πO_p, O_p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Level {
    d1: PrimeFactorization,
    d2: PrimeFactorization,
    d: PrimeFactorization,
}

impl Level {
    pub fn new(d1: u64, d2: u64) -> Result<Self> {
        if d1 == 0 || d2 == 0 {
            return Err(Error::Zero);
        }
        let d = d1.checked_mul(d2).ok_or(Error::TooLarge)?;
        let all = factor_squarefree(d)?;
        if all.is_empty() {
            return Err(Error::TrivialDiscriminant);
        }
        if all.len() % 2 == 1 {
            return Err(Error::OddRamification {
                d,
                count: all.len(),
            });
        }
        Ok(Self {
            d1: factor_squarefree(d1)?,
            d2: factor_squarefree(d2)?,
            d: all,
        })
    }

    /// Every valid level with discriminant at most `max_d`, ordered by
    /// `D`, then by `D₁` descending (so `(D, 1)` comes first).
    pub fn enumerate(max_d: u64) -> Vec<Level> {
        let mut out = Vec::new();
        for d in 2..=max_d {
            let Ok(f) = factor_squarefree(d) else {
                continue;
            };
            if f.is_empty() || f.len() % 2 == 1 {
                continue;
            }
            let mut splits: Vec<u64> = crate::number_theory::squarefree_divisors(&f)
                .iter()
                .map(PrimeFactorization::value)
                .collect();
            splits.sort_unstable_by(|a, b| b.cmp(a));
            out.extend(
                splits.into_iter().map(|d1| {
                    Level::new(d1, d / d1).expect("divisor split of a valid discriminant")
                }),
            );
        }
        out
    }

    pub fn d1(&self) -> &PrimeFactorization {
        &self.d1
    }

    pub fn d2(&self) -> &PrimeFactorization {
        &self.d2
    }

    pub fn d(&self) -> &PrimeFactorization {
        &self.d
    }

    pub fn d1_value(&self) -> u64 {
        self.d1.value()
    }

    pub fn d2_value(&self) -> u64 {
        self.d2.value()
    }

    pub fn discriminant(&self) -> u64 {
        self.d.value()
    }

    pub fn part(&self, which: Part) -> &PrimeFactorization {
        match which {
            Part::D => &self.d,
            Part::D1 => &self.d1,
            Part::D2 => &self.d2,
        }
    }

    /// `T(m; n)` for `T` one of `D`, `D₁`, `D₂`.
    pub fn class_set(&self, which: Part, m: i64, n: u64) -> PrimeFactorization {
        residue_class(self.part(which), m, n)
    }

    /// Whether `T(m; n)` is empty, without allocating.
    pub(crate) fn class_empty(&self, which: Part, m: i64, n: u64) -> bool {
        let target = m.rem_euclid(n as i64) as u64;
        !self.part(which).iter().any(|p| p % n == target)
    }

    pub(crate) fn class_count(&self, which: Part, m: i64, n: u64) -> usize {
        let target = m.rem_euclid(n as i64) as u64;
        self.part(which).iter().filter(|p| p % n == target).count()
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Γ({},{})", self.d1_value(), self.d2_value())
    }
}
