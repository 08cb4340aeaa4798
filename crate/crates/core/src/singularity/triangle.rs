use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::lattice::{det_columns, DualVector, Int, LatticePoint};
use crate::polytope::{lattice_length, triangle_interior_lattice_points, Facet, LatticePolytope};

/// Why a facet is neither smooth nor an `A_n`-triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OtherReason {
    NotTriangle {
        vertices: usize,
    },
    /// The triangle's plane is not at height one for any integral form.
    NotHeightOne {
        height: Int,
    },
    /// Sorted lattice lengths of the three edges are not `1, 1, m >= 2`.
    EdgeLengths([Int; 3]),
    InteriorPoints(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FacetClass {
    /// A triangle whose vertices form a basis of `N`.
    Smooth,
    AnTriangle {
        n: i64,
    },
    Other(OtherReason),
}

impl FacetClass {
    pub fn an_index(&self) -> Option<i64> {
        match self {
            FacetClass::AnTriangle { n } => Some(*n),
            _ => None,
        }
    }

    pub fn is_smooth(&self) -> bool {
        matches!(self, FacetClass::Smooth)
    }
}

impl fmt::Display for FacetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FacetClass::Smooth => f.write_str("smooth"),
            FacetClass::AnTriangle { n } => write!(f, "A{n}-triangle"),
            FacetClass::Other(OtherReason::NotTriangle { vertices }) => {
                write!(f, "other ({vertices} vertices)")
            }
            FacetClass::Other(OtherReason::NotHeightOne { height }) => {
                write!(f, "other (plane at height {height})")
            }
            FacetClass::Other(OtherReason::EdgeLengths([a, b, c])) => {
                write!(f, "other (edge lengths {a}, {b}, {c})")
            }
            FacetClass::Other(OtherReason::InteriorPoints(k)) => {
                write!(f, "other ({k} interior lattice points)")
            }
        }
    }
}

/// The form `w` with `<w, v> = 1` on all three vertices, if it is integral.
pub fn height_one_form(tri: [&LatticePoint; 3]) -> Option<DualVector> {
    let [a, b, c] = tri;
    let normal = (b - a).cross(&(c - a)).primitive().ok()?;
    let h = normal.pair(a);
    if h.is_one() {
        Some(normal)
    } else if (-&h).is_one() {
        Some(-&normal)
    } else {
        None
    }
}

/// Shared part of the classification; `interior` counts relative-interior
/// lattice points by whichever route the caller trusts.
fn classify_with(tri: [&LatticePoint; 3], interior: impl FnOnce() -> usize) -> FacetClass {
    let [a, b, c] = tri;
    if det_columns(a, b, c).abs().is_one() {
        return FacetClass::Smooth;
    }
    if height_one_form(tri).is_none() {
        let height = (b - a)
            .cross(&(c - a))
            .primitive()
            .map(|w| w.pair(a).abs())
            .unwrap_or_else(|_| Int::zero());
        return FacetClass::Other(OtherReason::NotHeightOne { height });
    }
    let mut lengths = [
        lattice_length(a, b).unwrap_or_default(),
        lattice_length(b, c).unwrap_or_default(),
        lattice_length(c, a).unwrap_or_default(),
    ];
    lengths.sort();
    if !(lengths[0].is_one() && lengths[1].is_one() && lengths[2] > Int::one()) {
        return FacetClass::Other(OtherReason::EdgeLengths(lengths));
    }
    let inner = interior();
    if inner > 0 {
        return FacetClass::Other(OtherReason::InteriorPoints(inner));
    }
    match (&lengths[2] - 1u32).to_i64() {
        Some(n) => FacetClass::AnTriangle { n },
        None => FacetClass::Other(OtherReason::EdgeLengths(lengths)),
    }
}

/// Classifies a lattice triangle given by its vertices.
pub fn classify_triangle(tri: [&LatticePoint; 3]) -> FacetClass {
    classify_with(tri, || triangle_interior_lattice_points(tri).len())
}

/// Classifies a facet of `p`, counting interior points through the polytope's
/// facet inequalities.
pub fn classify_facet(p: &LatticePolytope, f: &Facet) -> FacetClass {
    let verts: Vec<&LatticePoint> = p.facet_vertices(f).collect();
    let Ok(tri) = <[&LatticePoint; 3]>::try_from(verts.as_slice()) else {
        return FacetClass::Other(OtherReason::NotTriangle {
            vertices: verts.len(),
        });
    };
    classify_with(tri, || p.facet_interior_lattice_points(f).len())
}
