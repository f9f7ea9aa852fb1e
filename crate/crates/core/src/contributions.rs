//! The fifteen contributions `H₁ … H₁₂`, `I₁ … I₃` to
//! `dim S_{k,j}(Γ(D₁,D₂))`, each as an exact rational.
//!
//! `H₁` comes from `±1₄`, `H₂ … H₁₂` from the other torsion classes, and
//! `I₁ … I₃` from the non-semisimple classes. All of them are defined for
//! even `j` only.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::level::{Level, Part};
use crate::number_theory::{
    bracket, chi_unchecked, rat, squarefree_divisors, PrimeFactorization, QuadraticField, Rational,
    SplitSymbol,
};
use crate::tables;

/// The weight `det^k ⊗ Sym_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub k: u32,
    pub j: u32,
}

impl Weight {
    pub fn new(k: u32, j: u32) -> Self {
        Self { k, j }
    }

    fn k(self) -> i128 {
        self.k as i128
    }

    fn j(self) -> i128 {
        self.j as i128
    }

    /// Bracket index `j + k`.
    fn j_plus_k(self) -> u64 {
        self.j as u64 + self.k as u64
    }

    /// Bracket index `j + 2k`.
    fn j_plus_2k(self) -> u64 {
        self.j as u64 + 2 * self.k as u64
    }

    /// `(-1)^{j/2}`.
    fn half_j_sign(self) -> i128 {
        sign(self.j as u64 / 2)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(k={}, j={})", self.k, self.j)
    }
}

fn sign(e: u64) -> i128 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// How `H₁₂`'s "A (resp. B)" cases bind to the parity of `♯D(5;12)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum H12Binding {
    /// `A`: even parity reads case (I), odd reads (III). `B` the other way.
    #[default]
    Standard,
    /// Both swapped. Only useful to show the golden tables notice.
    Swapped,
}

/// Which `n` the `H₆`/`H₇` divisor sums run over.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DivisorDomain {
    /// Squarefree `n | q·D₁·D⁺` with `D⁺ | n`, where `D⁺` collects the
    /// primes of `D` that split in the relevant quadratic field.
    #[default]
    SquarefreeWithSplitPrimes,
    /// As above but allowing `q²` when `q | D₁`, i.e. every divisor of the
    /// literal integer `q·D₁·D⁺`.
    AllDivisors,
    /// Squarefree `n | q·D₁`, and the whole sum vanishes as soon as `D`
    /// has a prime that splits in the quadratic field.
    VanishOnSplitPrime,
}

/// Interpretation choices for the points where the formula leaves room.
/// [`Conventions::default`] is the reading that reproduces the published
/// numerical tables; the other values exist so tests can show that each
/// choice is forced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conventions {
    pub h12_binding: H12Binding,
    /// Symbol `(-3/2)`; 2 is inert in Q(√-3) so the default is `Inert`.
    pub eisenstein_at_two: SplitSymbol,
    pub divisor_domain: DivisorDomain,
}

impl Default for Conventions {
    fn default() -> Self {
        Self {
            h12_binding: H12Binding::Standard,
            eisenstein_at_two: SplitSymbol::Inert,
            divisor_domain: DivisorDomain::SquarefreeWithSplitPrimes,
        }
    }
}

/// Where a small prime sits relative to the level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    InD1,
    InD2,
    Absent,
}

impl Place {
    pub fn of(p: u64, level: &Level) -> Self {
        if level.d1().contains(p) {
            Place::InD1
        } else if level.d2().contains(p) {
            Place::InD2
        } else {
            Place::Absent
        }
    }

    fn row(self) -> usize {
        match self {
            Place::InD1 => 0,
            Place::InD2 => 1,
            Place::Absent => 2,
        }
    }

    fn h12_row(self) -> usize {
        match self {
            Place::Absent => 0,
            Place::InD1 => 1,
            Place::InD2 => 2,
        }
    }
}

/// `H₁₂` table column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum H12Case {
    I,
    II,
    III,
}

impl H12Case {
    fn column(self) -> usize {
        match self {
            H12Case::I => 0,
            H12Case::II => 1,
            H12Case::III => 2,
        }
    }
}

/// The level-dependent branch taken by each case table. Used for the
/// coverage map of the golden tables and for diagnostics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CaseSelectors {
    /// Index into [`tables::H2_CASE`], `None` for the "otherwise" row.
    pub h2: Option<usize>,
    pub h3: Option<usize>,
    pub h4: Option<usize>,
    pub h5: bool,
    pub h6_row: Place,
    pub h7_row: Place,
    pub h8: bool,
    pub h9: Option<usize>,
    /// 0, 1 or 2.
    pub h10_gate: u8,
    pub h11_gate: bool,
    /// `None` when `D(1;12) ⊔ D₂(11;12) ≠ ∅`; otherwise the table row and
    /// the columns read for `A` and `B`.
    pub h12: Option<(Place, Place, H12Case, H12Case)>,
}

/// The fifteen contributions and their sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContributionBreakdown {
    pub h: [Rational; 12],
    pub i: [Rational; 3],
    pub total: Rational,
}

pub const TERM_NAMES: [&str; 15] = [
    "H1", "H2", "H3", "H4", "H5", "H6", "H7", "H8", "H9", "H10", "H11", "H12", "I1", "I2", "I3",
];

impl ContributionBreakdown {
    fn from_terms(h: [Rational; 12], i: [Rational; 3]) -> Self {
        let total = h
            .iter()
            .chain(i.iter())
            .fold(Rational::zero(), |acc, t| acc + t);
        Self { h, i, total }
    }

    pub fn zero() -> Self {
        Self::from_terms(
            std::array::from_fn(|_| Rational::zero()),
            std::array::from_fn(|_| Rational::zero()),
        )
    }

    /// `(name, value)` for the fifteen terms in order.
    pub fn terms(&self) -> impl Iterator<Item = (&'static str, &Rational)> {
        TERM_NAMES
            .iter()
            .copied()
            .zip(self.h.iter().chain(self.i.iter()))
    }
}

impl fmt::Display for ContributionBreakdown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms().map(|(n, v)| format!("{n}={v}")).collect();
        write!(f, "{} total={}", parts.join(" "), self.total)
    }
}

impl Serialize for ContributionBreakdown {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(16))?;
        for (name, value) in self.terms() {
            map.serialize_entry(name, &fraction_string(value))?;
        }
        map.serialize_entry("total", &fraction_string(&self.total))?;
        map.end()
    }
}

/// `"num/den"`, always with an explicit denominator.
pub fn fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Evaluates the contributions under a fixed set of [`Conventions`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Formula {
    conventions: Conventions,
}

fn product<T: Into<BigInt>, I: IntoIterator<Item = T>>(factors: I) -> BigInt {
    factors
        .into_iter()
        .fold(BigInt::one(), |acc, f| acc * f.into())
}

fn scaled(numerator: BigInt, denominator: i64) -> Rational {
    Rational::new(numerator, BigInt::from(denominator))
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

fn require_even(w: Weight) -> Result<()> {
    if w.j % 2 == 1 {
        Err(Error::OddJ(w.j))
    } else {
        Ok(())
    }
}

impl Formula {
    pub fn new(conventions: Conventions) -> Self {
        Self { conventions }
    }

    pub fn conventions(&self) -> Conventions {
        self.conventions
    }

    fn chi_gauss(&self, p: u64) -> i64 {
        chi_unchecked(QuadraticField::Gaussian, p).value()
    }

    fn chi_eis(&self, p: u64) -> i64 {
        if p == 2 {
            self.conventions.eisenstein_at_two.value()
        } else {
            chi_unchecked(QuadraticField::Eisenstein, p).value()
        }
    }

    fn chi(&self, field: QuadraticField, p: u64) -> i64 {
        match field {
            QuadraticField::Gaussian => self.chi_gauss(p),
            QuadraticField::Eisenstein => self.chi_eis(p),
        }
    }

    pub fn selectors(&self, level: &Level) -> CaseSelectors {
        let d2 = level.d2_value();
        let two = Place::of(2, level);
        let h2 = match (two, d2) {
            (Place::InD1, 1) => Some(1),
            (_, 1) => Some(0),
            (_, 2) => Some(2),
            _ => None,
        };
        let h3 = match d2 {
            1 => Some(0),
            2 => Some(1),
            _ => None,
        };
        let h4 = match d2 {
            1 => Some(0),
            3 => Some(1),
            _ => None,
        };
        let h9 = match (two, d2) {
            (Place::InD1, 1) => Some(1),
            (_, 1) => Some(0),
            // D₂ = 2 forces 2 ∤ D₁.
            (_, 2) => Some(2),
            _ => None,
        };
        let h10_blocked = (1..=3).any(|i| !level.class_empty(Part::D1, i, 5))
            || !level.class_empty(Part::D2, 1, 5)
            || !level.class_empty(Part::D2, -1, 5);
        let h10_gate = match (h10_blocked, level.d().contains(5)) {
            (true, _) => 0,
            (false, true) => 1,
            (false, false) => 2,
        };
        let h11_gate = level.class_empty(Part::D, 1, 8) && level.class_empty(Part::D2, 7, 8);
        let h12 = if level.class_empty(Part::D, 1, 12) && level.class_empty(Part::D2, 11, 12) {
            let (a, b) = if !level.class_empty(Part::D1, 11, 12) {
                (H12Case::II, H12Case::II)
            } else {
                let even = level.class_count(Part::D, 5, 12).is_multiple_of(2);
                let standard = matches!(self.conventions.h12_binding, H12Binding::Standard);
                if even == standard {
                    (H12Case::I, H12Case::III)
                } else {
                    (H12Case::III, H12Case::I)
                }
            };
            Some((two, Place::of(3, level), a, b))
        } else {
            None
        };
        CaseSelectors {
            h2,
            h3,
            h4,
            h5: d2 == 1,
            h6_row: two,
            h7_row: Place::of(3, level),
            h8: d2 == 1,
            h9,
            h10_gate,
            h11_gate,
            h12,
        }
    }

    pub fn h1(&self, w: Weight, level: &Level) -> Result<Rational> {
        require_even(w)?;
        let (k, j) = (w.k(), w.j());
        let poly = BigInt::from(j + 1) * (k - 2) * (j + k - 1) * (j + 2 * k - 3);
        let local = product(level.d1().iter().map(|p| {
            let p = BigInt::from(p);
            (&p - 1) * (&p * &p + 1)
        })) * product(level.d2().iter().map(|p| {
            let p = BigInt::from(p);
            &p * &p - 1
        }));
        Ok(scaled(poly * local, 128 * 27 * 5))
    }

    pub fn h2(&self, w: Weight, level: &Level) -> Result<Rational> {
        require_even(w)?;
        let Some(case) = self.selectors(level).h2 else {
            return Ok(Rational::zero());
        };
        let (k, j) = (w.k(), w.j());
        let lead = sign(w.k as u64) * (j + k - 1) * (k - 2) * tables::H2_CASE[case] as i128;
        let local = product(level.d().iter().map(|p| (p as i128 - 1).pow(2)));
        Ok(scaled(BigInt::from(lead) * local, 128 * 9))
    }

    pub fn h3(&self, w: Weight, level: &Level) -> Result<Rational> {
        require_even(w)?;
        let Some(case) = self.selectors(level).h3 else {
            return Ok(Rational::zero());
        };
        let (k, j) = (w.k(), w.j());
        let s = w.half_j_sign();
        let row = [s * (k - 2), -(j + k - 1), -s * (k - 2), j + k - 1];
        let lead = bracket(&row, w.k as u64) * tables::H3_CASE[case] as i128;
        let local = product(
            level
                .d1()
                .iter()
                .map(|p| (p as i128 - 1) * (1 - self.chi_gauss(p)) as i128),
        );
        Ok(scaled(BigInt::from(lead) * local, 32 * 3))
    }

    pub fn h4(&self, w: Weight, level: &Level) -> Result<Rational> {
        require_even(w)?;
        let Some(case) = self.selectors(level).h4 else {
            return Ok(Rational::zero());
        };
        let (k, j) = (w.k(), w.j());
        let a = j + k - 1;
        let b = k - 2;
        let sum = bracket(&[a, -a, 0], w.k as u64) + bracket(&[b, 0, -b], w.j_plus_k());
        let local = self.eisenstein_d1_product(level);
        Ok(scaled(
            BigInt::from(sum * tables::H4_CASE[case] as i128) * local,
            8 * 27,
        ))
    }

    pub fn h5(&self, w: Weight, level: &Level) -> Result<Rational> {
        require_even(w)?;
        if !self.selectors(level).h5 {
            return Ok(Rational::zero());
        }
        let (k, j) = (w.k(), w.j());
        let a = j + k - 1;
        let b = k - 2;
        let sum = bracket(&[-a, -a, 0, a, a, 0], w.k as u64)
            + bracket(&[b, 0, -b, -b, 0, b], w.j_plus_k());
        let local = self.eisenstein_d1_product(level);
        Ok(scaled(BigInt::from(sum) * local, 8 * 9))
    }

    fn eisenstein_d1_product(&self, level: &Level) -> BigInt {
        product(
            level
                .d1()
                .iter()
                .map(|p| (p as i128 - 1) * (1 - self.chi_eis(p)) as i128),
        )
    }

    /// Shared shape of `H₆` (`q = 2`, Q(√-1)) and `H₇` (`q = 3`, Q(√-3)):
    /// a sum over `n` standing for the discriminant of the centralizer
    /// quaternion algebra. `a_odd`/`a_even` are selected by the parity of
    /// the number of primes of `n`; `b` is indexed by (place of `q`) ×
    /// (`q | n`, `q ∤ n`).
    fn divisor_sum(
        &self,
        level: &Level,
        field: QuadraticField,
        a_odd: &Rational,
        a_even: &Rational,
        b: &[[i64; 2]; 3],
    ) -> Rational {
        let q = field.ramified_prime();
        let split: Vec<u64> = level
            .d()
            .iter()
            .filter(|&p| self.chi(field, p) == 1)
            .collect();
        let row = b[Place::of(q, level).row()];
        let domain = self.conventions.divisor_domain;
        if domain == DivisorDomain::VanishOnSplitPrime && !split.is_empty() {
            return Rational::zero();
        }
        let mut primes: Vec<u64> = level.d1().primes().to_vec();
        primes.push(q);
        if domain != DivisorDomain::VanishOnSplitPrime {
            primes.extend(&split);
        }
        let base = PrimeFactorization::from_primes(primes);

        let mut total = Rational::zero();
        let mut term = |n: &PrimeFactorization| {
            let odd = n.len() % 2 == 1;
            let mut weight = product(n.iter().map(|p| p as i128 - 1));
            weight *= product(
                level
                    .d2()
                    .iter()
                    .filter(|&p| p != q && !n.contains(p))
                    .map(|p| p as i128 + 1),
            );
            let unmatched_d1 = level
                .d1()
                .iter()
                .filter(|&p| p != q && !n.contains(p))
                .count();
            weight <<= unmatched_d1;
            weight *= row[if n.contains(q) { 0 } else { 1 }];
            total += Rational::from_integer(weight) * if odd { a_odd } else { a_even };
        };
        for n in squarefree_divisors(&base) {
            if !split.iter().all(|&p| n.contains(p)) {
                continue;
            }
            term(&n);
            // The extra divisor q²·m duplicates the prime data of q·m.
            if domain == DivisorDomain::AllDivisors && n.contains(q) && level.d1().contains(q) {
                term(&n);
            }
        }
        total
    }

    pub fn h6(&self, w: Weight, level: &Level) -> Result<Rational> {
        require_even(w)?;
        let (k, j) = (w.k(), w.j());
        let s = w.half_j_sign();
        let a_odd = rat(sign(w.k as u64) * s * (j + 1), 128 * 3);
        let a_even = rat(s * (j + 2 * k - 3), 128 * 3);
        Ok(self.divisor_sum(
            level,
            QuadraticField::Gaussian,
            &a_odd,
            &a_even,
            &tables::H6_B,
        ))
    }

    pub fn h7(&self, w: Weight, level: &Level) -> Result<Rational> {
        require_even(w)?;
        let (k, j) = (w.k(), w.j());
        let a_odd = rat((j + 1) * bracket(&[0, 1, -1], w.j_plus_2k()), 8 * 27);
        let a_even = rat((j + 2 * k - 3) * bracket(&[1, -1, 0], w.j as u64), 8 * 27);
        Ok(self.divisor_sum(
            level,
            QuadraticField::Eisenstein,
            &a_odd,
            &a_even,
            &tables::H7_B,
        ))
    }

    pub fn h8(&self, w: Weight, level: &Level) -> Result<Rational> {
        require_even(w)?;
        if !self.selectors(level).h8 {
            return Ok(Rational::zero());
        }
        let c1 = bracket(&tables::C1[(w.j % 12 / 2) as usize], w.k as u64);
        let local = product(
            level
                .d()
                .iter()
                .map(|p| (1 - self.chi_gauss(p)) * (1 - self.chi_eis(p))),
        );
        Ok(scaled(BigInt::from(c1) * local, 4 * 3))
    }

    pub fn h9(&self, w: Weight, level: &Level) -> Result<Rational> {
        require_even(w)?;
        let Some(case) = self.selectors(level).h9 else {
            return Ok(Rational::zero());
        };
        let c2 = bracket(&tables::C2[(w.j % 6 / 2) as usize], w.k as u64);
        let local = product(
            level
                .d1()
                .iter()
                .filter(|&p| p != 2)
                .map(|p| (1 - self.chi_eis(p)).pow(2)),
        );
        Ok(scaled(
            BigInt::from(c2 * tables::H9_CASE[case]) * local,
            2 * 9,
        ))
    }

    pub fn h10(&self, w: Weight, level: &Level) -> Result<Rational> {
        require_even(w)?;
        let gate = self.selectors(level).h10_gate;
        if gate == 0 {
            return Ok(Rational::zero());
        }
        let c3 = bracket(&tables::C3[(w.j % 10 / 2) as usize], w.k as u64);
        let twos = level.d().len() + level.class_count(Part::D, 4, 5);
        Ok(scaled(BigInt::from(c3 * gate as i64) * pow2(twos), 2 * 5))
    }

    pub fn h11(&self, w: Weight, level: &Level) -> Result<Rational> {
        require_even(w)?;
        if !self.selectors(level).h11_gate {
            return Ok(Rational::zero());
        }
        let c4 = bracket(&tables::C4[(w.j % 8 / 2) as usize], w.k as u64);
        let odd = level.d().iter().filter(|&p| p != 2).count();
        let twos = odd + level.class_count(Part::D1, 7, 8);
        Ok(scaled(BigInt::from(c4) * pow2(twos), 8))
    }

    pub fn h12(&self, w: Weight, level: &Level) -> Result<Rational> {
        require_even(w)?;
        let Some((two, three, case_a, case_b)) = self.selectors(level).h12 else {
            return Ok(Rational::zero());
        };
        let row = tables::H12_TABLE_EIGHTHS[two.h12_row()][three.h12_row()];
        let a = row[case_a.column()];
        let b = row[case_b.column()];
        let s = w.half_j_sign();
        let a_term =
            sign(w.j as u64 / 2 + w.k as u64) * bracket(&[1, -1, 0], w.j as u64) * a as i128;
        let b_term = s * bracket(&[0, -1, 1], w.j_plus_2k()) * b as i128;
        let twos = level.d().len() + level.class_count(Part::D1, 11, 12);
        Ok(scaled(
            BigInt::from(a_term + b_term) * pow2(twos),
            4 * 3 * 8,
        ))
    }

    pub fn i1(&self, w: Weight, level: &Level) -> Result<Rational> {
        require_even(w)?;
        let local = product(level.d().iter().map(|p| p as i128 - 1));
        Ok(scaled(BigInt::from(w.j() + 1) * local, 8 * 3))
    }

    pub fn i2(&self, w: Weight, level: &Level) -> Result<Rational> {
        require_even(w)?;
        let local = product(level.d().iter().map(|p| 1 - self.chi_gauss(p)));
        Ok(scaled(BigInt::from(-w.half_j_sign()) * local, 8))
    }

    pub fn i3(&self, w: Weight, level: &Level) -> Result<Rational> {
        require_even(w)?;
        let local = product(level.d().iter().map(|p| 1 - self.chi_eis(p)));
        let b = bracket(&[1, -1, 0], w.j as u64);
        Ok(scaled(BigInt::from(-b) * local, 2 * 3))
    }

    pub fn breakdown(&self, w: Weight, level: &Level) -> Result<ContributionBreakdown> {
        require_even(w)?;
        let h = [
            self.h1(w, level)?,
            self.h2(w, level)?,
            self.h3(w, level)?,
            self.h4(w, level)?,
            self.h5(w, level)?,
            self.h6(w, level)?,
            self.h7(w, level)?,
            self.h8(w, level)?,
            self.h9(w, level)?,
            self.h10(w, level)?,
            self.h11(w, level)?,
            self.h12(w, level)?,
        ];
        let i = [self.i1(w, level)?, self.i2(w, level)?, self.i3(w, level)?];
        Ok(ContributionBreakdown::from_terms(h, i))
    }
}

macro_rules! default_term {
    ($($name:ident),*) => {$(
        /// Evaluated under the default [`Conventions`].
        pub fn $name(w: Weight, level: &Level) -> Result<Rational> {
            Formula::default().$name(w, level)
        }
    )*};
}

default_term!(h1, h2, h3, h4, h5, h6, h7, h8, h9, h10, h11, h12, i1, i2, i3);

pub fn breakdown(w: Weight, level: &Level) -> Result<ContributionBreakdown> {
    Formula::default().breakdown(w, level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lv(d1: u64, d2: u64) -> Level {
        Level::new(d1, d2).unwrap()
    }

    fn w(k: u32, j: u32) -> Weight {
        Weight::new(k, j)
    }

    #[test]
    fn odd_j_is_rejected() {
        assert_eq!(h1(w(5, 1), &lv(6, 1)), Err(Error::OddJ(1)));
        assert_eq!(
            breakdown(w(5, 3), &lv(6, 1)).unwrap_err().to_string(),
            "contributions defined for even j only (got j = 3)"
        );
    }

    #[test]
    fn h1_values() {
        assert_eq!(h1(w(2, 0), &lv(6, 1)).unwrap(), rat(0, 1));
        assert_eq!(h1(w(5, 0), &lv(6, 1)).unwrap(), rat(35, 72));
        assert_eq!(h1(w(5, 0), &lv(1, 6)).unwrap(), rat(7, 60));
    }

    #[test]
    fn h2_to_h5_values() {
        assert_eq!(h2(w(5, 0), &lv(1, 6)).unwrap(), rat(0, 1));
        assert_eq!(h2(w(5, 0), &lv(6, 1)).unwrap(), rat(-13, 24));
        assert_eq!(h2(w(2, 0), &lv(3, 2)).unwrap(), rat(0, 1));
        assert_eq!(h3(w(5, 0), &lv(5, 2)).unwrap(), rat(0, 1));
        assert_eq!(h3(w(5, 0), &lv(3, 2)).unwrap(), rat(-1, 2));
        assert_eq!(h3(w(5, 0), &lv(6, 1)).unwrap(), rat(-1, 6));
        assert_eq!(h4(w(5, 0), &lv(3, 2)).unwrap(), rat(0, 1));
        assert_eq!(h4(w(5, 0), &lv(2, 3)).unwrap(), rat(-2, 9));
        assert_eq!(h4(w(5, 0), &lv(6, 1)).unwrap(), rat(-1, 18));
        assert_eq!(h5(w(5, 0), &lv(3, 2)).unwrap(), rat(0, 1));
        assert_eq!(h5(w(5, 0), &lv(6, 1)).unwrap(), rat(1, 6));
        assert_eq!(h5(w(2, 2), &lv(6, 1)).unwrap(), rat(0, 1));
    }

    #[test]
    fn h6_h7_values() {
        assert_eq!(h6(w(5, 0), &lv(6, 1)).unwrap(), rat(1, 2));
        assert_eq!(h7(w(5, 0), &lv(6, 1)).unwrap(), rat(43, 36));
        // A split prime does not kill the sum; it is forced into every n.
        assert_ne!(h6(w(5, 0), &lv(10, 1)).unwrap(), rat(0, 1));
        assert_ne!(h7(w(6, 0), &lv(14, 1)).unwrap(), rat(0, 1));
    }

    #[test]
    fn h6_h7_totals_match_tables() {
        // Γ(6,1) at k=6 has dimension 4; Γ(10,1) at k=5 has dimension 2.
        assert_eq!(breakdown(w(6, 0), &lv(6, 1)).unwrap().total, rat(4, 1));
        assert_eq!(breakdown(w(5, 0), &lv(10, 1)).unwrap().total, rat(2, 1));
    }

    #[test]
    fn h8_to_h12_values() {
        assert_eq!(h8(w(5, 0), &lv(1, 6)).unwrap(), rat(0, 1));
        assert_eq!(h8(w(5, 0), &lv(6, 1)).unwrap(), rat(-1, 3));
        assert_eq!(h8(w(2, 0), &lv(6, 1)).unwrap(), rat(0, 1));
        assert_eq!(h9(w(5, 0), &lv(6, 1)).unwrap(), rat(0, 1));
        assert_eq!(h9(w(3, 0), &lv(6, 1)).unwrap(), rat(-5, 18));
        assert_eq!(h9(w(3, 0), &lv(1, 15)).unwrap(), rat(0, 1));
        assert_eq!(h10(w(3, 0), &lv(6, 1)).unwrap(), rat(0, 1));
        assert_eq!(h10(w(3, 0), &lv(1, 10)).unwrap(), rat(-2, 5));
        assert_eq!(h10(w(0, 0), &lv(1, 10)).unwrap(), rat(2, 5));
        assert_eq!(h11(w(5, 0), &lv(6, 1)).unwrap(), rat(0, 1));
        assert_eq!(h11(w(3, 0), &lv(6, 1)).unwrap(), rat(-1, 4));
        assert_eq!(h11(w(3, 0), &lv(34, 1)).unwrap(), rat(0, 1));
        assert_eq!(h12(w(5, 0), &lv(6, 1)).unwrap(), rat(-3, 4));
        assert_eq!(h12(w(5, 0), &lv(26, 1)).unwrap(), rat(0, 1));
        assert_eq!(h12(w(6, 2), &lv(6, 1)).unwrap(), rat(-1, 3));
    }

    #[test]
    fn i_values() {
        assert_eq!(i1(w(5, 0), &lv(6, 1)).unwrap(), rat(1, 12));
        assert_eq!(i1(w(9, 0), &lv(1, 6)).unwrap(), rat(1, 12));
        assert_eq!(i1(w(5, 2), &lv(10, 1)).unwrap(), rat(1, 2));
        assert_eq!(i2(w(5, 0), &lv(6, 1)).unwrap(), rat(-1, 4));
        assert_eq!(i2(w(5, 2), &lv(6, 1)).unwrap(), rat(1, 4));
        assert_eq!(i2(w(5, 0), &lv(10, 1)).unwrap(), rat(0, 1));
        assert_eq!(i3(w(5, 0), &lv(6, 1)).unwrap(), rat(-1, 3));
        assert_eq!(i3(w(5, 2), &lv(6, 1)).unwrap(), rat(0, 1));
        assert_eq!(i3(w(5, 0), &lv(14, 1)).unwrap(), rat(0, 1));
    }

    fn valid_level() -> impl Strategy<Value = Level> {
        proptest::sample::subsequence(vec![2u64, 3, 5, 7, 11, 13, 17, 19, 23], 0..=6)
            .prop_flat_map(|primes| {
                let n = primes.len();
                (Just(primes), proptest::collection::vec(any::<bool>(), n))
            })
            .prop_filter_map("even ramification", |(primes, in_d1)| {
                let d1: u64 = primes
                    .iter()
                    .zip(&in_d1)
                    .filter(|(_, &b)| b)
                    .map(|(p, _)| p)
                    .product();
                let d2: u64 = primes
                    .iter()
                    .zip(&in_d1)
                    .filter(|(_, &b)| !b)
                    .map(|(p, _)| p)
                    .product();
                Level::new(d1, d2).ok()
            })
    }

    fn weight() -> impl Strategy<Value = Weight> {
        (0u32..40, 0u32..20).prop_map(|(k, j)| Weight::new(k, 2 * j))
    }

    proptest! {
        #[test]
        fn moving_a_prime_to_d2_shrinks_h1(level in valid_level(), w in weight()) {
            for p in level.d1().iter() {
                let d1 = level.d1_value() / p;
                let d2 = level.d2_value() * p;
                // Only the parity of #D₂ matters for validity, and it flips.
                let Ok(moved) = Level::new(d1, d2) else { continue };
                let before = h1(w, &level).unwrap();
                let after = h1(w, &moved).unwrap();
                prop_assert_eq!(after, before * rat((p + 1) as i128, (p * p + 1) as i64));
                prop_assert_eq!(i1(w, &moved).unwrap(), i1(w, &level).unwrap());
            }
        }

        #[test]
        fn selector_zeros(level in valid_level(), w in weight()) {
            let zero = Rational::zero();
            let d2 = level.d2_value();
            if d2 != 1 && d2 != 2 {
                prop_assert_eq!(h2(w, &level).unwrap(), zero.clone());
                prop_assert_eq!(h3(w, &level).unwrap(), zero.clone());
                prop_assert_eq!(h9(w, &level).unwrap(), zero.clone());
            }
            if d2 != 1 && d2 != 3 {
                prop_assert_eq!(h4(w, &level).unwrap(), zero.clone());
            }
            if d2 != 1 {
                prop_assert_eq!(h5(w, &level).unwrap(), zero.clone());
                prop_assert_eq!(h8(w, &level).unwrap(), zero.clone());
            }
            let f = Formula::default();
            if level.d().iter().any(|p| f.chi_gauss(p) == 1) {
                prop_assert_eq!(i2(w, &level).unwrap(), zero.clone());
            }
            if level.d().iter().any(|p| f.chi_eis(p) == 1) {
                prop_assert_eq!(i3(w, &level).unwrap(), zero.clone());
            }
        }

        #[test]
        fn i_terms_ignore_k(level in valid_level(), w in weight(), k2 in 0u32..60) {
            let other = Weight::new(k2, w.j);
            prop_assert_eq!(i1(w, &level).unwrap(), i1(other, &level).unwrap());
            prop_assert_eq!(i2(w, &level).unwrap(), i2(other, &level).unwrap());
            prop_assert_eq!(i3(w, &level).unwrap(), i3(other, &level).unwrap());
        }

        #[test]
        fn total_is_the_sum_of_terms(level in valid_level(), w in weight()) {
            let b = breakdown(w, &level).unwrap();
            let sum = b.terms().fold(Rational::zero(), |acc, (_, v)| acc + v);
            prop_assert_eq!(sum, b.total);
        }
    }
}
