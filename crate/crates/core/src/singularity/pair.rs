use alloc::vec::Vec;

use num_traits::{One, Signed};

use super::triangle::{classify_facet, classify_triangle, height_one_form, FacetClass};
use crate::lattice::{DualVector, Int, LatticePoint};
use crate::polytope::{lattice_length, LatticePolytope};
use crate::{Error, Result};

/// Two `A_n`-triangles `T0 = conv(rho0, rho_u, rho_v)` and
/// `T1 = conv(rho1, rho_u, rho_v)` glued along their long edge and lying on
/// opposite sides of the plane spanned by that edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacentAnPair {
    pub n: i64,
    pub rho0: LatticePoint,
    pub rho1: LatticePoint,
    pub rho_u: LatticePoint,
    pub rho_v: LatticePoint,
    /// Height-one form of `T0`.
    pub w0: DualVector,
    /// Height-one form of `T1`.
    pub w1: DualVector,
    /// `<w1, rho0>`, equal to `<w0, rho1>`.
    pub pairing: Int,
    /// Facet indices of `(T0, T1)` when the pair comes from a polytope.
    pub facet_ids: Option<(usize, usize)>,
}

impl AdjacentAnPair {
    /// Validates the adjacency conditions for an explicitly labelled pair.
    pub fn with_labels(
        rho0: LatticePoint,
        rho1: LatticePoint,
        rho_u: LatticePoint,
        rho_v: LatticePoint,
    ) -> Result<Self> {
        let n0 = classify_triangle([&rho0, &rho_u, &rho_v]).an_index();
        let n1 = classify_triangle([&rho1, &rho_u, &rho_v]).an_index();
        let n = match (n0, n1) {
            (Some(a), Some(b)) if a == b => a,
            (Some(_), Some(_)) => return Err(Error::NotAdjacentPair("different n")),
            _ => return Err(Error::NotAdjacentPair("not two A_n-triangles")),
        };
        if lattice_length(&rho_u, &rho_v)? != Int::from(n + 1) {
            return Err(Error::NotAdjacentPair("shared edge is not the long edge"));
        }
        let eta = rho_u.cross(&rho_v);
        let side0 = eta.pair(&rho0).signum();
        let side1 = eta.pair(&rho1).signum();
        if side0 * side1 != -Int::one() {
            return Err(Error::NotAdjacentPair(
                "triangles on the same side of the edge plane",
            ));
        }
        let w0 = height_one_form([&rho0, &rho_u, &rho_v]).expect("A_n-triangles are at height one");
        let w1 = height_one_form([&rho1, &rho_u, &rho_v]).expect("A_n-triangles are at height one");
        let pairing = w1.pair(&rho0);
        if pairing != w0.pair(&rho1) {
            return Err(Error::Internal("pairing is not symmetric".into()));
        }
        Ok(Self {
            n,
            rho0,
            rho1,
            rho_u,
            rho_v,
            w0,
            w1,
            pairing,
            facet_ids: None,
        })
    }

    /// Builds a pair from two triangles sharing exactly two vertices, using
    /// the canonical labelling: `rho0` is the lexicographically smaller apex
    /// and `rho_u` the lexicographically smaller endpoint of the shared edge.
    pub fn from_triangles(t0: [LatticePoint; 3], t1: [LatticePoint; 3]) -> Result<Self> {
        let shared: Vec<&LatticePoint> = t0.iter().filter(|v| t1.contains(v)).collect();
        if shared.len() != 2 {
            return Err(Error::NotAdjacentPair(
                "triangles do not share exactly one edge",
            ));
        }
        let apex0 = t0
            .iter()
            .find(|v| !shared.contains(v))
            .expect("third vertex");
        let apex1 = t1
            .iter()
            .find(|v| !shared.contains(v))
            .expect("third vertex");
        let (rho0, rho1) = LatticePoint::ordered(apex0, apex1);
        let (rho_u, rho_v) = LatticePoint::ordered(shared[0], shared[1]);
        Self::with_labels(rho0.clone(), rho1.clone(), rho_u.clone(), rho_v.clone())
    }

    /// The same pair with `T0` and `T1` exchanged.
    pub fn swap_triangles(&self) -> Result<Self> {
        Self::with_labels(
            self.rho1.clone(),
            self.rho0.clone(),
            self.rho_u.clone(),
            self.rho_v.clone(),
        )
    }

    /// The same pair with the endpoints of the shared edge exchanged.
    pub fn swap_edge(&self) -> Result<Self> {
        Self::with_labels(
            self.rho0.clone(),
            self.rho1.clone(),
            self.rho_v.clone(),
            self.rho_u.clone(),
        )
    }

    /// `<w1, rho0>`, re-checked against `<w0, rho1>`.
    pub fn pairing_value(&self) -> Result<Int> {
        let value = self.w1.pair(&self.rho0);
        if value != self.w0.pair(&self.rho1) {
            return Err(Error::Internal("pairing is not symmetric".into()));
        }
        Ok(value)
    }

    pub fn is_almost_flat(&self) -> bool {
        self.pairing == Int::from(0)
    }

    /// Lattice length of the dual edge `conv(-w0, -w1)`.
    pub fn dual_edge_length(&self) -> Int {
        (&self.w0 - &self.w1).content()
    }
}

/// All adjacent `A_n`-triangle pairs among the facets of `p`, in facet order.
pub fn find_adjacent_pairs(p: &LatticePolytope) -> Vec<AdjacentAnPair> {
    let classes: Vec<FacetClass> = p.facets().iter().map(|f| classify_facet(p, f)).collect();
    find_pairs_with(p, &classes)
}

pub(crate) fn find_pairs_with(p: &LatticePolytope, classes: &[FacetClass]) -> Vec<AdjacentAnPair> {
    let facets = p.facets();
    let verts = p.vertices();
    let mut out = Vec::new();
    for i in 0..facets.len() {
        let Some(n) = classes[i].an_index() else {
            continue;
        };
        for j in i + 1..facets.len() {
            if classes[j].an_index() != Some(n) {
                continue;
            }
            let (fi, fj) = (&facets[i].vertex_indices, &facets[j].vertex_indices);
            let shared: Vec<usize> = fi.iter().copied().filter(|v| fj.contains(v)).collect();
            if shared.len() != 2 {
                continue;
            }
            let apex_i = fi
                .iter()
                .copied()
                .find(|v| !shared.contains(v))
                .expect("triangle");
            let apex_j = fj
                .iter()
                .copied()
                .find(|v| !shared.contains(v))
                .expect("triangle");
            // vertex indices follow lexicographic order
            let (t0, t1, a0, a1) = if apex_i < apex_j {
                (i, j, apex_i, apex_j)
            } else {
                (j, i, apex_j, apex_i)
            };
            let Ok(mut pair) = AdjacentAnPair::with_labels(
                verts[a0].clone(),
                verts[a1].clone(),
                verts[shared[0]].clone(),
                verts[shared[1]].clone(),
            ) else {
                continue;
            };
            pair.facet_ids = Some((t0, t1));
            out.push(pair);
        }
    }
    out
}
