//! The `A_n`-triangle obstruction.
//!
//! A facet of a reflexive 3-polytope that is an empty lattice triangle at
//! height one with edge lengths `1, 1, n+1` spans a cone whose toric variety
//! has transverse `A_n` singularities. Two such facets glued along their long
//! edge give an `A_n`-bundle over `P^1` inside `X_P`; when
//! `<w1, rho0> >= 0` every summand of the pushed-forward `Ext^1` sheaf is
//! negative, the bundle has only locally trivial deformations and `X_P` is
//! not smoothable.

mod normal_form;
mod pair;
mod triangle;

use alloc::vec::Vec;
use core::fmt;

use num_traits::Signed;

use crate::polytope::LatticePolytope;
use crate::Result;

pub use normal_form::{ext_profile, ClassGroup, ExtProfile, NormalForm};
pub use pair::{find_adjacent_pairs, AdjacentAnPair};
pub use triangle::{classify_facet, classify_triangle, height_one_form, FacetClass, OtherReason};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictTag {
    /// Some adjacent pair has `<w1, rho0> >= 0`.
    NotSmoothable,
    /// The criterion does not apply; this is not a smoothability claim.
    NoObstructionFound,
    /// Every facet is a unimodular triangle.
    AlreadySmooth,
}

impl VerdictTag {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictTag::NotSmoothable => "not_smoothable",
            VerdictTag::NoObstructionFound => "no_obstruction_found",
            VerdictTag::AlreadySmooth => "already_smooth",
        }
    }
}

impl fmt::Display for VerdictTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictTag::NotSmoothable => "NOT SMOOTHABLE",
            VerdictTag::NoObstructionFound => "NO OBSTRUCTION FOUND",
            VerdictTag::AlreadySmooth => "ALREADY SMOOTH",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothabilityVerdict {
    pub tag: VerdictTag,
    /// Pairs with non-negative pairing; nonempty iff `tag` is `NotSmoothable`.
    pub witnesses: Vec<AdjacentAnPair>,
}

fn decide(classes: &[FacetClass], pairs: &[AdjacentAnPair]) -> SmoothabilityVerdict {
    let witnesses: Vec<AdjacentAnPair> = pairs
        .iter()
        .filter(|p| !p.pairing.is_negative())
        .cloned()
        .collect();
    let tag = if !witnesses.is_empty() {
        VerdictTag::NotSmoothable
    } else if classes.iter().all(FacetClass::is_smooth) {
        VerdictTag::AlreadySmooth
    } else {
        VerdictTag::NoObstructionFound
    };
    SmoothabilityVerdict { tag, witnesses }
}

pub fn verdict(p: &LatticePolytope) -> SmoothabilityVerdict {
    let classes: Vec<FacetClass> = p.facets().iter().map(|f| classify_facet(p, f)).collect();
    let pairs = pair::find_pairs_with(p, &classes);
    decide(&classes, &pairs)
}

/// Everything the analyzer derives for one adjacent pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairAnalysis {
    pub pair: AdjacentAnPair,
    pub normal_form: NormalForm,
    pub class_group: ClassGroup,
    pub ext_profile: ExtProfile,
}

impl PairAnalysis {
    pub fn new(pair: AdjacentAnPair) -> Result<Self> {
        let normal_form = NormalForm::of(&pair)?;
        let class_group = normal_form.class_group()?;
        let ext_profile = normal_form.ext_profile();
        Ok(Self {
            pair,
            normal_form,
            class_group,
            ext_profile,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeAnalysis {
    pub reflexive: bool,
    pub facet_classes: Vec<FacetClass>,
    pub pairs: Vec<PairAnalysis>,
    pub verdict: SmoothabilityVerdict,
}

impl PolytopeAnalysis {
    /// `(smooth, an_triangle, other)` facet counts.
    pub fn class_counts(&self) -> (usize, usize, usize) {
        self.facet_classes
            .iter()
            .fold((0, 0, 0), |(s, a, o), c| match c {
                FacetClass::Smooth => (s + 1, a, o),
                FacetClass::AnTriangle { .. } => (s, a + 1, o),
                FacetClass::Other(_) => (s, a, o + 1),
            })
    }
}

/// Classifies every facet, finds all adjacent pairs, computes their normal
/// forms and the verdict. Reflexivity is reported, not required.
pub fn analyze(p: &LatticePolytope) -> Result<PolytopeAnalysis> {
    let facet_classes: Vec<FacetClass> = p.facets().iter().map(|f| classify_facet(p, f)).collect();
    let found = pair::find_pairs_with(p, &facet_classes);
    let verdict = decide(&facet_classes, &found);
    let pairs = found
        .into_iter()
        .map(PairAnalysis::new)
        .collect::<Result<Vec<_>>>()?;
    Ok(PolytopeAnalysis {
        reflexive: p.is_reflexive(),
        facet_classes,
        pairs,
        verdict,
    })
}
