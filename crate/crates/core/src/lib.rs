//! Exact computations around twisted zastava spaces: folded root data,
//! twisted J-functions from the fermionic recurrence, Hilbert series of
//! explicit zastava presentations, twisted affine Demazure characters and
//! lattice q-difference Toda eigenfunctions.

pub mod charalg;
pub mod demazure;
pub mod exactalg;
pub mod fixtures;
pub mod jfun;
pub mod rootdata;
pub mod toda;
pub mod verify;

pub use charalg::WeightedPresentation;
pub use exactalg::{GradedWeight, LaurentPoly, RationalCharacter};
pub use jfun::{compute_j, JFunction};
pub use rootdata::{build_folding, DynkinType, FoldingDatum, RootVector, WeightVector};
