//! Full-dimensional lattice polytopes in `N_R = R^3`.
//!
//! Hulls are built by incremental insertion. Every facet is stored as a
//! primitive outward normal `w` and an offset `h` with `<w, x> <= h` on the
//! polytope, so reflexivity is literally "every offset equals 1".

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::lattice::{cross3, det_columns, dot, DualVector, Int, LatticePoint};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    /// Indices into [`LatticePolytope::vertices`], ascending.
    pub vertex_indices: Vec<usize>,
    /// Primitive outward normal.
    pub support: DualVector,
    /// `<support, v> = height` on the facet, `< height` on every other vertex.
    pub height: Int,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    /// Endpoint indices, ascending.
    pub vertices: [usize; 2],
    /// The two facets meeting along the edge, ascending.
    pub facets: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub start: LatticePoint,
    pub end: LatticePoint,
}

impl Segment {
    pub fn new(start: LatticePoint, end: LatticePoint) -> Self {
        Self { start, end }
    }

    /// Number of primitive steps from one endpoint to the other.
    pub fn lattice_length(&self) -> Result<Int> {
        lattice_length(&self.start, &self.end)
    }
}

pub fn lattice_length(a: &LatticePoint, b: &LatticePoint) -> Result<Int> {
    let d = b - a;
    if d.is_zero() {
        return Err(Error::CoincidentEndpoints);
    }
    Ok(d.content())
}

/// A full-dimensional lattice polytope in canonical form: vertices sorted
/// lexicographically, facets sorted by their support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    vertices: Vec<LatticePoint>,
    facets: Vec<Facet>,
    edges: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Plane {
    normal: DualVector,
    offset: Int,
}

impl Plane {
    /// Plane through three non-collinear points, oriented so that the first
    /// point of `others` off the plane lies on the negative side.
    fn through<'a>(
        a: &LatticePoint,
        b: &LatticePoint,
        c: &LatticePoint,
        others: impl IntoIterator<Item = &'a LatticePoint>,
    ) -> Option<Plane> {
        let normal = (b - a).cross(&(c - a)).primitive().ok()?;
        let offset = normal.pair(a);
        for q in others {
            let value = normal.pair(q);
            if value > offset {
                return Some(Plane {
                    normal: -&normal,
                    offset: -offset,
                });
            }
            if value < offset {
                return Some(Plane { normal, offset });
            }
        }
        None
    }

    fn excess(&self, p: &LatticePoint) -> Int {
        self.normal.pair(p) - &self.offset
    }

    fn contains(&self, p: &LatticePoint) -> bool {
        self.excess(p).is_zero()
    }
}

fn initial_simplex(points: &[LatticePoint]) -> Result<[usize; 4]> {
    let p0 = &points[0];
    let i1 = (1..points.len())
        .find(|&i| points[i] != *p0)
        .ok_or(Error::Degenerate)?;
    let d1 = &points[i1] - p0;
    let i2 = (i1 + 1..points.len())
        .find(|&i| !d1.cross(&(&points[i] - p0)).is_zero())
        .ok_or(Error::Degenerate)?;
    let d2 = &points[i2] - p0;
    let i3 = (i2 + 1..points.len())
        .find(|&i| !det_columns(&d1, &d2, &(&points[i] - p0)).is_zero())
        .ok_or(Error::Degenerate)?;
    Ok([0, i1, i2, i3])
}

/// Whether some three of the normals are linearly independent.
fn spans_space(normals: &[&DualVector]) -> bool {
    let n = normals.len();
    (0..n).any(|i| {
        (i + 1..n).any(|j| {
            let ij = cross3(&normals[i].coords, &normals[j].coords);
            (j + 1..n).any(|k| !dot(&ij, &normals[k].coords).is_zero())
        })
    })
}

/// Keeps only the points that lie on planes whose normals span 3-space.
fn extreme_points(members: Vec<LatticePoint>, planes: &[Plane]) -> Vec<LatticePoint> {
    members
        .into_iter()
        .filter(|p| {
            let normals: Vec<&DualVector> = planes
                .iter()
                .filter(|pl| pl.contains(p))
                .map(|pl| &pl.normal)
                .collect();
            normals.len() >= 3 && spans_space(&normals)
        })
        .collect()
}

/// Horizon edges between visible and non-visible planes, as pairs of points.
fn horizon(
    members: &[LatticePoint],
    planes: &[Plane],
    visible: &[bool],
) -> Vec<(LatticePoint, LatticePoint)> {
    let incident: Vec<Vec<usize>> = planes
        .iter()
        .map(|pl| {
            (0..members.len())
                .filter(|&i| pl.contains(&members[i]))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for a in 0..planes.len() {
        if !visible[a] {
            continue;
        }
        for b in 0..planes.len() {
            if visible[b] {
                continue;
            }
            let shared: Vec<usize> = incident[a]
                .iter()
                .copied()
                .filter(|i| incident[b].contains(i))
                .collect();
            if shared.len() >= 2 {
                let lo = shared.iter().map(|&i| &members[i]).min().expect("nonempty");
                let hi = shared.iter().map(|&i| &members[i]).max().expect("nonempty");
                out.push((lo.clone(), hi.clone()));
            }
        }
    }
    out
}

/// Convex hull of a finite set of lattice points.
///
/// Points that are not extreme (duplicates, interior points, points in the
/// relative interior of faces) are dropped.
pub fn convex_hull(points: &[LatticePoint]) -> Result<LatticePolytope> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 4 {
        return Err(Error::Degenerate);
    }
    let simplex = initial_simplex(&pts)?;
    let mut members: Vec<LatticePoint> = simplex.iter().map(|&i| pts[i].clone()).collect();
    let mut planes = Vec::with_capacity(4);
    for skip in 0..4 {
        let tri: Vec<&LatticePoint> = (0..4).filter(|&k| k != skip).map(|k| &members[k]).collect();
        let plane = Plane::through(tri[0], tri[1], tri[2], [&members[skip]])
            .expect("simplex vertices are affinely independent");
        planes.push(plane);
    }

    for (idx, p) in pts.iter().enumerate() {
        if simplex.contains(&idx) {
            continue;
        }
        let visible: Vec<bool> = planes.iter().map(|pl| pl.excess(p).is_positive()).collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }
        let edges = horizon(&members, &planes, &visible);
        let mut next: Vec<Plane> = planes
            .iter()
            .zip(&visible)
            .filter(|(_, &v)| !v)
            .map(|(pl, _)| pl.clone())
            .collect();
        for (a, b) in &edges {
            let plane = Plane::through(p, a, b, members.iter())
                .ok_or_else(|| Error::Internal("horizon plane through a flat point set".into()))?;
            if !next.contains(&plane) {
                next.push(plane);
            }
        }
        planes = next;
        members.push(p.clone());
        members = extreme_points(members, &planes);
    }

    Ok(LatticePolytope::from_parts(members, planes))
}

impl LatticePolytope {
    fn from_parts(mut vertices: Vec<LatticePoint>, mut planes: Vec<Plane>) -> Self {
        vertices.sort();
        planes.sort_by(|a, b| a.normal.cmp(&b.normal));
        let facets: Vec<Facet> = planes
            .into_iter()
            .map(|pl| Facet {
                vertex_indices: (0..vertices.len())
                    .filter(|&i| pl.contains(&vertices[i]))
                    .collect(),
                support: pl.normal,
                height: pl.offset,
            })
            .collect();
        let mut edges = Vec::new();
        for i in 0..facets.len() {
            for j in i + 1..facets.len() {
                let shared: Vec<usize> = facets[i]
                    .vertex_indices
                    .iter()
                    .copied()
                    .filter(|v| facets[j].vertex_indices.contains(v))
                    .collect();
                if shared.len() == 2 {
                    edges.push(Edge {
                        vertices: [shared[0], shared[1]],
                        facets: [i, j],
                    });
                }
            }
        }
        edges.sort_by_key(|e| e.vertices);
        Self {
            vertices,
            facets,
            edges,
        }
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn facet_vertices<'a>(
        &'a self,
        facet: &'a Facet,
    ) -> impl Iterator<Item = &'a LatticePoint> + 'a {
        facet.vertex_indices.iter().map(move |&i| &self.vertices[i])
    }

    pub fn edge_segment(&self, edge: &Edge) -> Segment {
        Segment::new(
            self.vertices[edge.vertices[0]].clone(),
            self.vertices[edge.vertices[1]].clone(),
        )
    }

    /// Whether `p` satisfies every facet inequality.
    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.facets.iter().all(|f| f.support.pair(p) <= f.height)
    }

    /// Origin strictly inside and every facet at height one.
    pub fn is_reflexive(&self) -> bool {
        self.facets.iter().all(|f| f.height.is_one())
    }

    pub fn contains_origin_in_interior(&self) -> bool {
        self.facets.iter().all(|f| f.height.is_positive())
    }

    /// The polar `{u : <u, v> >= -1 for all v}`; its vertices are the negated
    /// facet supports.
    pub fn dual(&self) -> Result<LatticePolytope> {
        if !self.is_reflexive() {
            return Err(Error::DualNotLattice);
        }
        let points: Vec<LatticePoint> = self
            .facets
            .iter()
            .map(|f| LatticePoint::from((-&f.support).coords))
            .collect();
        convex_hull(&points)
    }

    fn bounding_box<'a>(points: impl Iterator<Item = &'a LatticePoint>) -> Option<[(Int, Int); 3]> {
        let mut bounds: Option<[(Int, Int); 3]> = None;
        for p in points {
            match &mut bounds {
                None => bounds = Some(core::array::from_fn(|k| (p[k].clone(), p[k].clone()))),
                Some(b) => {
                    for (k, (lo, hi)) in b.iter_mut().enumerate() {
                        if p[k] < *lo {
                            *lo = p[k].clone();
                        }
                        if p[k] > *hi {
                            *hi = p[k].clone();
                        }
                    }
                }
            }
        }
        bounds
    }

    /// All lattice points of the polytope in lexicographic order.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        let Some([(x0, x1), (y0, y1), (z0, z1)]) = Self::bounding_box(self.vertices.iter()) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        let mut x = x0;
        while x <= x1 {
            let mut y = y0.clone();
            while y <= y1 {
                let mut z = z0.clone();
                while z <= z1 {
                    let p = LatticePoint::new(x.clone(), y.clone(), z.clone());
                    if self.contains(&p) {
                        out.push(p);
                    }
                    z += 1;
                }
                y += 1;
            }
            x += 1;
        }
        out
    }

    /// Lattice points in the relative interior of a facet, lexicographically.
    ///
    /// A point of the facet's plane is in the relative interior iff it lies
    /// strictly inside every other facet inequality.
    pub fn facet_interior_lattice_points(&self, facet: &Facet) -> Vec<LatticePoint> {
        let others: Vec<&Facet> = self
            .facets
            .iter()
            .filter(|g| g.support != facet.support)
            .collect();
        let Some(bounds) = Self::bounding_box(self.facet_vertices(facet)) else {
            return Vec::new();
        };
        let mut out: Vec<LatticePoint> = plane_points(&facet.support, &facet.height, &bounds)
            .filter(|p| others.iter().all(|g| g.support.pair(p) < g.height))
            .collect();
        out.sort();
        out
    }

    /// Image under a linear map (typically unimodular).
    pub fn transform(&self, m: &crate::IntMatrix) -> Result<LatticePolytope> {
        let pts = self
            .vertices
            .iter()
            .map(|v| m.apply(v))
            .collect::<Result<Vec<_>>>()?;
        convex_hull(&pts)
    }
}

/// `facet_interior_lattice_points` for a triangle given only by its
/// vertices, using the three edge functionals inside the triangle's plane.
pub fn triangle_interior_lattice_points(tri: [&LatticePoint; 3]) -> Vec<LatticePoint> {
    let [a, b, c] = tri;
    let normal = (b - a).cross(&(c - a));
    if normal.is_zero() {
        return Vec::new();
    }
    let height = normal.pair(a);
    let Some(bounds) = LatticePolytope::bounding_box(tri.into_iter()) else {
        return Vec::new();
    };
    let mut out: Vec<LatticePoint> = plane_points(&normal, &height, &bounds)
        .filter(|p| {
            [(a, b), (b, c), (c, a)].iter().all(|(s, e)| {
                normal
                    .pair(&LatticePoint::from((*e - *s).cross(&(p - *s)).coords))
                    .is_positive()
            })
        })
        .collect();
    out.sort();
    out
}

/// Lattice points of the box on the plane `<normal, x> = height`, found by
/// enumerating two coordinates and solving for the one with the largest
/// normal component.
fn plane_points<'a>(
    normal: &'a DualVector,
    height: &'a Int,
    bounds: &'a [(Int, Int); 3],
) -> impl Iterator<Item = LatticePoint> + 'a {
    let solve = (0..3)
        .max_by_key(|&k| (normal[k].abs(), core::cmp::Reverse(k)))
        .expect("three axes");
    let [f0, f1] = match solve {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    };
    let w = &normal[solve];
    range(&bounds[f0]).flat_map(move |x| {
        range(&bounds[f1]).filter_map(move |y| {
            let rest = height - &normal[f0] * &x - &normal[f1] * &y;
            if !(&rest % w).is_zero() {
                return None;
            }
            let z = rest / w;
            if z < bounds[solve].0 || z > bounds[solve].1 {
                return None;
            }
            let mut coords: [Int; 3] = Default::default();
            coords[f0] = x.clone();
            coords[f1] = y;
            coords[solve] = z;
            Some(LatticePoint::from(coords))
        })
    })
}

fn range(bounds: &(Int, Int)) -> impl Iterator<Item = Int> + '_ {
    let mut next = bounds.0.clone();
    core::iter::from_fn(move || {
        (next <= bounds.1).then(|| {
            let current = next.clone();
            next += 1;
            current
        })
    })
}

#[cfg(test)]
pub(crate) fn points(coords: &[[i64; 3]]) -> Vec<LatticePoint> {
    coords.iter().map(|&c| LatticePoint::from(c)).collect()
}

#[cfg(test)]
pub(crate) fn unit_cube() -> Vec<LatticePoint> {
    let mut v = Vec::new();
    for x in [-1, 1] {
        for y in [-1, 1] {
            for z in [-1, 1] {
                v.push(LatticePoint::from([x, y, z]));
            }
        }
    }
    v
}
