//! Sums the contributions into `dim S_{k,j}(Γ(D₁,D₂))`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::contributions::{ContributionBreakdown, Formula, Weight};
use crate::error::{Error, Result};
use crate::level::Level;

/// Whether the value is a theorem (`k >= 5`, or `j` odd) or the formal
/// substitution of a small weight into the `k >= 5` formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Validity {
    Proven,
    Formal,
}

impl Validity {
    pub fn as_str(self) -> &'static str {
        match self {
            Validity::Proven => "proven",
            Validity::Formal => "formal",
        }
    }
}

impl fmt::Display for Validity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionResult {
    pub weight: Weight,
    /// Negative values only occur for formal results.
    pub dimension: BigInt,
    /// All zero when `j` is odd.
    pub breakdown: ContributionBreakdown,
    pub validity: Validity,
}

impl DimensionResult {
    /// `"proven, k>=5"`, `"formal, k<=4"` or `"proven, j odd"`.
    pub fn label(&self) -> String {
        let why = if self.weight.j % 2 == 1 {
            "j odd"
        } else if self.validity == Validity::Proven {
            "k>=5"
        } else {
            "k<=4"
        };
        format!("{}, {}", self.validity, why)
    }
}

impl fmt::Display for DimensionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.dimension, self.label())
    }
}

impl Formula {
    pub fn dimension(&self, w: Weight, level: &Level) -> Result<DimensionResult> {
        // -1₄ lies in the group, so odd j gives no forms at all.
        if w.j % 2 == 1 {
            return Ok(DimensionResult {
                weight: w,
                dimension: BigInt::zero(),
                breakdown: ContributionBreakdown::zero(),
                validity: Validity::Proven,
            });
        }
        let breakdown = self.breakdown(w, level)?;
        if !breakdown.total.is_integer() {
            return Err(Error::NonIntegralTotal {
                k: w.k,
                j: w.j,
                level: level.to_string(),
                total: breakdown.total.to_string(),
                terms: breakdown.to_string(),
            });
        }
        Ok(DimensionResult {
            weight: w,
            dimension: breakdown.total.to_integer(),
            breakdown,
            validity: if w.k >= 5 {
                Validity::Proven
            } else {
                Validity::Formal
            },
        })
    }
}

/// Dimension under the default conventions.
pub fn dim_cusp_forms(w: Weight, level: &Level) -> Result<DimensionResult> {
    Formula::default().dimension(w, level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number_theory::rat;

    fn dim(k: u32, j: u32, d1: u64, d2: u64) -> DimensionResult {
        dim_cusp_forms(Weight::new(k, j), &Level::new(d1, d2).unwrap()).unwrap()
    }

    #[test]
    fn table_values() {
        let r = dim(5, 0, 6, 1);
        assert_eq!(
            (r.dimension.clone(), r.validity),
            (0.into(), Validity::Proven)
        );
        assert_eq!(dim(10, 0, 6, 1).dimension, 15.into());
        assert_eq!(dim(5, 2, 3, 2).dimension, 1.into());
        assert_eq!(dim(15, 8, 1, 15).dimension, 1004.into());
        let r = dim(1, 0, 6, 1);
        assert_eq!(
            (r.dimension.clone(), r.validity),
            ((-1).into(), Validity::Formal)
        );
        assert_eq!(r.to_string(), "-1 (formal, k<=4)");
        assert_eq!(dim(10, 0, 6, 1).to_string(), "15 (proven, k>=5)");
    }

    #[test]
    fn odd_j_vanishes_without_evaluating() {
        let r = dim(7, 3, 6, 1);
        assert_eq!(r.dimension, 0.into());
        assert_eq!(r.validity, Validity::Proven);
        assert_eq!(r.breakdown, ContributionBreakdown::zero());
        assert_eq!(dim(1, 1, 1, 6).to_string(), "0 (proven, j odd)");
    }

    #[test]
    fn breakdown_matches_hand_evaluation() {
        let r = dim(5, 0, 6, 1);
        let expected_h = [
            rat(35, 72),
            rat(-13, 24),
            rat(-1, 6),
            rat(-1, 18),
            rat(1, 6),
            rat(1, 2),
            rat(43, 36),
            rat(-1, 3),
            rat(0, 1),
            rat(0, 1),
            rat(0, 1),
            rat(-3, 4),
        ];
        assert_eq!(r.breakdown.h, expected_h);
        assert_eq!(r.breakdown.i, [rat(1, 12), rat(-1, 4), rat(-1, 3)]);
        assert!(r.breakdown.total.is_zero());
    }

    #[test]
    fn breakdown_for_gamma_10_1() {
        let r = dim(5, 0, 10, 1);
        assert_eq!(r.dimension, 2.into());
        // (-1/5) = +1 kills the H₈ product.
        assert!(r.breakdown.h[7].is_zero());
        assert!(!r.breakdown.h[5].is_zero());
        assert_eq!(dim(2, 0, 6, 1).breakdown.h[0], rat(0, 1));
    }

    #[test]
    fn non_integral_totals_are_reported() {
        use crate::contributions::Conventions;
        use crate::number_theory::SplitSymbol;
        let broken = Formula::new(Conventions {
            eisenstein_at_two: SplitSymbol::Split,
            ..Conventions::default()
        });
        let err = broken
            .dimension(Weight::new(0, 0), &Level::new(6, 1).unwrap())
            .unwrap_err();
        let Error::NonIntegralTotal { terms, .. } = err else {
            panic!("expected a non-integral total");
        };
        assert!(terms.contains("H12="));
    }
}
