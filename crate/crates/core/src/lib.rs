//! Pair correlation of zeta zeros: Fourier-positive kernels, the Tsang
//! kernel, the bound functional `𝒞_b(j)` with the zero-proportion bounds it
//! yields, and empirical pair sums over computed zeros.
//!
//! Module map:
//!
//! - [`quadrature`]: adaptive Gauss–Legendre integration and root finding
//! - [`kernels`]: `j_F`, `j_M`, their transforms, `h_{y,b}` and `K_b(z)`
//! - [`bounds`]: `𝒞_b(j)`, proportion coefficients, tables, failure thresholds
//! - [`zeta`]: Hardy's `Z(t)`, zero location, `N(T)`
//! - [`paircorr`]: `F(x,T)`, `𝓕(x,T)`, integral representations, kernel sums
//! - [`io`]: zero files and CSV/JSON emitters
//! - [`verify`]: the property suite behind `paircorr verify`

pub mod bounds;
pub mod error;
pub mod io;
pub mod kernels;
pub mod paircorr;
mod par;
pub mod quadrature;
pub mod sum;
pub mod verify;
pub mod zeta;

pub use error::{Error, Result};
pub use kernels::{ComplexValue, KernelId, TsangParams};
pub use quadrature::{QuadratureConfig, QuadratureResult};
pub use zeta::{Zero, ZeroDataset, ZeroSource};

/// Version string recorded in zero-cache headers.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
