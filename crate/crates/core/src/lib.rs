//! Exact computation of generalized smallest-parts functions.
//!
//! The crate is organised bottom-up:
//!
//! * [`series`]: truncated power series in `q` with big-integer coefficients.
//! * [`laurent`]: Laurent polynomials in `z` and bivariate series in `(z, q)`,
//!   including the rank, crank and `j`-rank generating functions.
//! * [`partitions`]: partition enumeration, successive Durfee and lower-Durfee
//!   squares, marks and frequencies.
//! * [`stats`]: rank, crank, `j`-rank, their counting tables and moments.
//! * [`spt`]: the spt families `spt`, `spt_k`, `Spt_j` and `jspt_k`, each by
//!   generating function, combinatorial weight and moment identity.
//! * [`verify`]: exact checks of the identities, inequalities and
//!   congruences, each producing a row-by-row report.
//!
//! Everything is exact. Divisions that are known to be exact are checked and
//! reported through [`Error::InexactDivision`] if they ever are not.

mod chains;
pub mod error;
pub mod laurent;
pub mod partitions;
pub mod series;
pub mod spt;
pub mod stats;
pub mod verify;

pub use error::{Error, Result};
pub use laurent::{BiSeries, LaurentPoly};
pub use partitions::{ChainKind, DurfeeChain, Partition};
pub use series::TruncSeries;
