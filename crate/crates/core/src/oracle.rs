//! Closed-form dimension of scalar-valued cusp forms on `Γ(1, 2p)`, written
//! out independently of [`crate::contributions`] and used only to
//! cross-check it.
//!
//! The expression is transcribed term by term. At `p = 3` the
//! closed form does not reduce to the general theorem (it is not even an
//! integer there, see the tests), so [`crosscheck`] reports `p = 3` as a
//! mismatch rather than special-casing it.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::contributions::{Formula, Weight};
use crate::dimension::DimensionResult;
use crate::error::{Error, Result};
use crate::level::Level;
use crate::number_theory::{is_prime, legendre, Rational};

/// An odd prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OraclePrime(u64);

impl OraclePrime {
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(Self(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

fn r(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn periodic(values: &[i64], n: u32) -> i64 {
    values[n as usize % values.len()]
}

/// `dim S_{k,0}(Γ(1,2p))` by the closed form.
pub fn intro_dim(k: u32, p: OraclePrime) -> Rational {
    let p_int = p.get() as i64;
    let pq = Rational::from_integer(BigInt::from(p_int));
    let k_int = k as i64;
    let minus_one_k = if k.is_multiple_of(2) { 1 } else { -1 };
    let sym_m1 = legendre(-1, p.get()).expect("odd prime");
    let sym_m3 = legendre(-3, p.get()).expect("odd prime");
    let sym_p5 = legendre(p_int, 5).expect("5 is an odd prime");
    let half = r(1, 2);
    let s3 = r(sym_m3, 1);

    let mut total = Rational::zero();

    total += r((k_int - 2) * (k_int - 1) * (2 * k_int - 3), 128 * 9 * 5)
        * Rational::from_integer(BigInt::from(p_int * p_int - 1));
    total += r(p_int - 1, 8 * 3);

    total += r(
        minus_one_k * (8 + sym_m1) + (2 * k_int - 3) * (8 - sym_m1),
        128 * 3,
    ) * (&pq - r(sym_m1, 1));

    let p_minus_s3 = &pq - &s3;
    total += r(periodic(&[0, -1, 1], k), 4 * 9)
        * (r(4, 1) + &half * &s3 * (r(1, 1) - r(5, 1) * &s3))
        * &p_minus_s3;
    total +=
        r(2 * k_int - 3, 4 * 9) * (r(5, 1) - &half * &s3 * (r(1, 1) + r(7, 1) * &s3)) * &p_minus_s3;

    total -= r(1 - sym_m1, 8);
    total -= r(1 - sym_m3, 3);

    total += r(2 * periodic(&[1, 0, 0, -1, 0], k), 5) * r(1 - sym_p5, 1);

    let mod8 = match p_int % 8 {
        1 | 7 => 0,
        _ => 1,
    };
    total += r(periodic(&[1, 0, 0, -1], k) * mod8, 4);

    let last = if p_int == 3 {
        r(minus_one_k, 2)
    } else {
        match p_int % 12 {
            1 | 11 => r(0, 1),
            5 => r(periodic(&[0, 1, -1], k), 1),
            _ => r(minus_one_k, 1),
        }
    };
    total += r(1, 6) * last;
    total
}

/// One disagreement found by [`crosscheck`].
#[derive(Clone, Debug)]
pub struct CrosscheckMismatch {
    pub p: u64,
    pub k: u32,
    pub oracle: Rational,
    /// `Err` carries the engine's failure message.
    pub engine: std::result::Result<DimensionResult, Error>,
}

#[derive(Clone, Debug, Default)]
pub struct CrosscheckReport {
    pub primes: Vec<u64>,
    pub compared: usize,
    pub mismatches: Vec<CrosscheckMismatch>,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        !self.primes.is_empty() && self.mismatches.is_empty()
    }
}

/// Compares [`intro_dim`] with `formula` on `Γ(1,2p)`, `j = 0`, for every
/// odd prime `p <= pmax` and `0 <= k <= kmax`.
pub fn crosscheck(formula: &Formula, pmax: u64, kmax: u32) -> CrosscheckReport {
    let primes: Vec<u64> = (3..=pmax).filter(|&p| is_prime(p)).collect();
    let mut report = CrosscheckReport {
        primes: primes.clone(),
        ..CrosscheckReport::default()
    };
    for &p in &primes {
        let level = Level::new(1, 2 * p).expect("2p with p odd prime is a valid discriminant");
        let prime = OraclePrime(p);
        for k in 0..=kmax {
            let oracle = intro_dim(k, prime);
            let engine = formula.dimension(Weight::new(k, 0), &level);
            report.compared += 1;
            let agree = matches!(&engine, Ok(res) if Rational::from_integer(res.dimension.clone()) == oracle);
            if !agree {
                report.mismatches.push(CrosscheckMismatch {
                    p,
                    k,
                    oracle,
                    engine,
                });
            }
        }
    }
    report
}
