//! Exact evaluation of `dim S_{k,j}(Γ(D₁,D₂))`, the dimension of the space
//! of vector-valued Siegel cusp forms of degree two and weight
//! `det^k ⊗ Sym_j` for the arithmetic groups `Γ(D₁,D₂)` attached to
//! maximal lattices in a quaternion hermitian space over an indefinite
//! division quaternion algebra of discriminant `D = D₁D₂`.
//!
//! ```
//! use siegel_dim::{dim_cusp_forms, Level, Weight};
//!
//! let level = Level::new(6, 1).unwrap();
//! let result = dim_cusp_forms(Weight::new(10, 0), &level).unwrap();
//! assert_eq!(result.dimension, 15.into());
//! ```

pub mod contributions;
pub mod dimension;
pub mod error;
pub mod golden;
pub mod level;
pub mod number_theory;
pub mod oracle;
pub mod render;
pub mod tables;

pub use contributions::{breakdown, ContributionBreakdown, Conventions, Formula, Weight};
pub use dimension::{dim_cusp_forms, DimensionResult, Validity};
pub use error::{Error, Result};
pub use level::{Level, Part};
pub use number_theory::{PrimeFactorization, QuadraticField, Rational, SplitSymbol};
