//! Exact integer primitives: primality, splitting symbols of the two
//! imaginary quadratic fields that enter the formula, periodic brackets,
//! squarefree factorization and residue-class prime filters.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Exact rational used for every contribution.
pub type Rational = BigRational;

pub(crate) fn rat(num: i128, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub(crate) fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Value of a quadratic character at a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SplitSymbol {
    Split,
    Ramified,
    Inert,
}

impl SplitSymbol {
    pub fn value(self) -> i64 {
        match self {
            SplitSymbol::Split => 1,
            SplitSymbol::Ramified => 0,
            SplitSymbol::Inert => -1,
        }
    }

    fn from_value(v: i64) -> Self {
        match v {
            1 => SplitSymbol::Split,
            0 => SplitSymbol::Ramified,
            _ => SplitSymbol::Inert,
        }
    }
}

/// The imaginary quadratic fields Q(sqrt(-1)) and Q(sqrt(-3)).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadraticField {
    Gaussian,
    Eisenstein,
}

impl QuadraticField {
    /// The prime that ramifies in the field.
    pub fn ramified_prime(self) -> u64 {
        match self {
            QuadraticField::Gaussian => 2,
            QuadraticField::Eisenstein => 3,
        }
    }
}

/// Splitting behaviour of the prime `p` in `field`, i.e. the Kronecker
/// symbol of the field discriminant (-4 or -3) at `p`.
pub fn chi(field: QuadraticField, p: u64) -> Result<SplitSymbol> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(chi_unchecked(field, p))
}

/// [`chi`] for callers that already hold a verified prime.
pub(crate) fn chi_unchecked(field: QuadraticField, p: u64) -> SplitSymbol {
    let v = match field {
        QuadraticField::Gaussian => match p {
            2 => 0,
            _ if p % 4 == 1 => 1,
            _ => -1,
        },
        // -3 = 5 mod 8, so 2 is inert.
        QuadraticField::Eisenstein => match p {
            2 => -1,
            3 => 0,
            _ if p % 3 == 1 => 1,
            _ => -1,
        },
    };
    SplitSymbol::from_value(v)
}

/// Legendre symbol `(a | p)` for an odd prime `p`, via Euler's criterion.
pub fn legendre(a: i64, p: u64) -> Result<i64> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return Ok(0);
    }
    Ok(if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    })
}

/// The periodic function `[a_0, ..., a_{m-1}; m]_n`, equal to `a_i` when
/// `n = i mod m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket {
    values: Vec<Rational>,
}

impl Bracket {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyBracket);
        }
        Ok(Self { values })
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| int(v)).collect())
    }

    pub fn period(&self) -> usize {
        self.values.len()
    }

    pub fn eval(&self, n: u64) -> &Rational {
        &self.values[(n % self.values.len() as u64) as usize]
    }
}

/// Integer-valued bracket lookup for the literal tables.
pub(crate) fn bracket<T: Copy, const M: usize>(values: &[T; M], n: u64) -> T {
    values[(n % M as u64) as usize]
}

/// A squarefree positive integer kept as its sorted list of prime factors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeFactorization {
    primes: Vec<u64>,
}

impl PrimeFactorization {
    /// Builds from primes in any order; duplicates collapse.
    pub(crate) fn from_primes(mut primes: Vec<u64>) -> Self {
        primes.sort_unstable();
        primes.dedup();
        Self { primes }
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok()
    }

    pub fn value(&self) -> u64 {
        self.primes.iter().product()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes.iter().copied()
    }
}

impl fmt::Display for PrimeFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primes.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.primes.iter().map(u64::to_string).collect();
        f.write_str(&parts.join("*"))
    }
}

/// Factors a squarefree `n >= 1` by trial division.
pub fn factor_squarefree(n: u64) -> Result<PrimeFactorization> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let mut rest = n;
    let mut primes = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if rest.is_multiple_of(p) {
            rest /= p;
            if rest.is_multiple_of(p) {
                return Err(Error::NotSquarefree { n, prime: p });
            }
            primes.push(p);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        primes.push(rest);
    }
    Ok(PrimeFactorization { primes })
}

/// `T(m; n)`: primes of `primes` congruent to `m` modulo `n`. Negative `m`
/// is reduced, so `T(-1; 5) = T(4; 5)`.
pub fn residue_class(primes: &PrimeFactorization, m: i64, n: u64) -> PrimeFactorization {
    let target = m.rem_euclid(n as i64) as u64;
    PrimeFactorization {
        primes: primes.iter().filter(|p| p % n == target).collect(),
    }
}

/// All squarefree divisors of `q * base`, in subset order. `q` must be prime.
pub fn squarefree_divisors_with_prime(
    base: &PrimeFactorization,
    q: u64,
) -> Vec<PrimeFactorization> {
    let mut all = base.primes.clone();
    all.push(q);
    squarefree_divisors(&PrimeFactorization::from_primes(all))
}

/// All `2^s` divisors of a squarefree number.
pub fn squarefree_divisors(n: &PrimeFactorization) -> Vec<PrimeFactorization> {
    let s = n.len();
    (0u64..1 << s)
        .map(|mask| PrimeFactorization {
            primes: (0..s)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| n.primes[i])
                .collect(),
        })
        .collect()
}
