//! Exact-arithmetic analysis of 3-dimensional lattice polytopes.
//!
//! The crate is `no_std` (it needs `alloc`) and split into three layers:
//!
//! - [`lattice`], [`matrix`] and [`snf`]: integer linear algebra over `Z^3`
//!   and small integer matrices (Bézout, primitivity, unimodular inverses,
//!   Smith normal form).
//! - [`polytope`]: exact convex hulls of lattice points with primitive facet
//!   normals, reflexivity, duality and lattice-point enumeration.
//! - [`singularity`]: classification of triangular facets into smooth cones and
//!   `A_n`-triangles, detection of adjacent `A_n`-triangle pairs, the
//!   `GL_3(Z)` normal form of such a pair and the resulting non-smoothability
//!   verdict for the associated toric Fano threefold.
//!
//! All arithmetic uses arbitrary-precision integers; there is no floating
//! point anywhere.

#![no_std]

extern crate alloc;

mod error;
pub mod lattice;
pub mod matrix;
pub mod polytope;
pub mod singularity;
pub mod snf;

pub use error::Error;
pub use lattice::{gcd_ext, DualVector, Int, LatticePoint};
pub use matrix::IntMatrix;
pub use polytope::{convex_hull, Facet, LatticePolytope, Segment};
pub use singularity::{
    analyze, verdict, AdjacentAnPair, ExtProfile, FacetClass, NormalForm, PairAnalysis,
    PolytopeAnalysis, SmoothabilityVerdict, VerdictTag,
};
pub use snf::{smith_normal_form, SnfDecomposition};

pub type Result<T, E = Error> = core::result::Result<T, E>;
