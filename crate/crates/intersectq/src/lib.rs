//! Exact-arithmetic toolkit for lattices built as intersections of simpler
//! lattices: the honeycomb of cells such an intersection induces, the
//! multiple-description quantizer that labels a point by its tuple of
//! per-component nearest lattice points, and the figures of merit of the
//! resulting cell classes.
//!
//! Everything geometric is exact: scalars live in Q(sqrt d) for a single
//! square-free d per context (d = 1 for plain rationals), comparisons are by
//! sign computation, and equality of lattices is decided by Hermite Normal
//! Form. Floating point appears only in final report fields flagged as
//! approximations.

pub mod catalog;
pub mod exactmath;
pub mod honeycomb;
pub mod lattice;
pub mod mcverify;
pub mod quantize;
