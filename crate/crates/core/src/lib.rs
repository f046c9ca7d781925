//! Exact cohomological calculus for Fourier-Mukai transforms on product
//! abelian surfaces.

pub mod error;
pub mod exterior;
pub mod fm_engine;
pub mod ledger;
pub mod mukai;
pub mod theta_calc;
pub mod varieties;

pub use error::{Error, Result};
