//! Quadrature, bilateral summation, planar integration and extrapolation.

mod extrapolate;
mod plane;
mod quadrature;
mod sum;

pub use extrapolate::{fitted_order, richardson_extrapolate};
pub use plane::{integrate_plane, PlaneWindow};
pub(crate) use quadrature::{integrate_pieces, Piece};
pub use quadrature::{
    integrate_interval, integrate_line, Estimate, Indentation, LineContour, QuadratureSpec, Side,
};
pub(crate) use sum::bilateral_sum_try;
pub use sum::{
    bilateral_alternating_sum, bilateral_sum, outward_labels, HalfInt, MbSpec, Sector, Truncation,
};
