//! Exact Masur–Veech volumes and polynomials, area Siegel–Veech constants,
//! ψ-class intersection numbers and square-tiled surface counts.
//!
//! Every value is an exact rational multiple of a power of π², see [`PiPoly`].

pub mod arith;
pub mod coeff;
pub mod conjectures;
pub mod error;
pub mod fixtures;
pub mod graphs;
pub mod kontsevich;
pub mod siegel_veech;
pub mod square_tiled;
pub mod virasoro;

pub use arith::{PiPoly, Rational};
pub use coeff::{CoeffTable, EvenPolynomial, MultiIndex, Theory};
pub use error::{Error, Result};
pub use square_tiled::{QSeries, QuasiPoly};
