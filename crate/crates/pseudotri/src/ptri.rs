//! Four-sector diagrams of compact four-manifolds with connected boundary.
//!
//! A [`PseudoTrisection`] holds a central surface Σ_C (role `C`) and three
//! sector surfaces Σ_1, Σ_2, Σ_3 (roles `S(0..3)`) with identified
//! boundaries, plus curve families α_i on Σ_C ∪ Σ_i and δ_i on Σ_i ∪ Σ_{i+1}.
//! Each triple (Σ_C, Σ_i, Σ_{i+1}; α_i, δ_i, α_{i+1}) is a three-sector
//! diagram whose realization must have the homology of a connected sum of
//! k_i copies of S¹ × S²; the k_i are always computed from the diagram,
//! never trusted.  The moves live in [`crate::moves4`].

use serde::{Deserialize, Serialize};

use crate::cell::Role;
use crate::curve::{Curve, Family};
use crate::diagram::Diagram;
use crate::homology::AbelianGroup;
use crate::report::StructureError;
use crate::triheeg::{check_curve_positions, CheckReport, TripleHeegaard};

/// Index data of a four-sector diagram.
///
/// All consistency identities are verified on construction:
/// h_i = g + p_i + b − 1, y_i = p_i + p_{i+1} + b − 1,
/// χ = g − |k| + ½(|y| + b + 1), c = χ + |k| − 1 = g + |p| + 2b − 2,
/// c_pair = c + c_boundary, and |y| + b odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Indices4 {
    /// Genus of the central surface.
    pub g: usize,
    /// Number of binding circles.
    pub b: usize,
    /// Sector homology ranks: the i-th sector realizes #^{k_i}(S¹×S²).
    pub k: [usize; 3],
    /// Cut-system cardinalities y_i = |δ_i|.
    pub y: [usize; 3],
    /// Genera of the sector surfaces.
    pub p: [usize; 3],
    /// Cut-system cardinalities h_i = |α_i|.
    pub h: [usize; 3],
    /// Euler characteristic of the realized four-manifold.
    pub chi: i64,
    /// Complexity of the diagram.
    pub c: i64,
    /// Complexity of the boundary restriction.
    pub c_boundary: i64,
    /// Pair complexity c + c_boundary.
    pub c_pair: i64,
}

impl Indices4 {
    pub fn total_k(&self) -> usize {
        self.k.iter().sum()
    }
    pub fn total_y(&self) -> usize {
        self.y.iter().sum()
    }
}

/// A four-sector diagram: roles `C` and `S(0..3)`, with family `Alpha(i)`
/// on Σ_C ∪ Σ_{i+1} and `Delta(i)` on Σ_{i+1} ∪ Σ_{i+2} (0-based: `Alpha(i)`
/// on `C ∪ S(i)`, `Delta(i)` on `S(i) ∪ S(i+1)`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudoTrisection {
    pub diag: Diagram,
}

/// The two roles an α family lives on.
pub fn alpha_pair(i: u8) -> (Role, Role) {
    (Role::C, Role::S(i % 3))
}

impl PseudoTrisection {
    pub fn alpha(&self, i: u8) -> Vec<&Curve> {
        self.diag.curves_in(Family::Alpha(i % 3))
    }

    pub fn delta(&self, i: u8) -> Vec<&Curve> {
        self.diag.curves_in(Family::Delta(i % 3))
    }

    /// The i-th sector as a three-sector diagram: roles are retagged
    /// C → S(0), S(i) → S(1), S(i+1) → S(2), and families
    /// α_i → δ_1, δ_i → δ_2, α_{i+1} → δ_3.  Faces of the remaining
    /// surface and curves of the remaining families are dropped.
    pub fn sector_triple(&self, i: u8) -> TripleHeegaard {
        let i = i % 3;
        let (s1, s2) = (Role::S(i), Role::S((i + 1) % 3));
        let mut diag = self.diag.clone();
        diag.cx
            .faces
            .retain(|f| f.role == Role::C || f.role == s1 || f.role == s2);
        for f in diag.cx.faces.iter_mut() {
            f.role = if f.role == Role::C {
                Role::S(0)
            } else if f.role == s1 {
                Role::S(1)
            } else {
                Role::S(2)
            };
        }
        let keep = [
            Family::Alpha(i),
            Family::Delta(i),
            Family::Alpha((i + 1) % 3),
        ];
        diag.curves.retain(|c| keep.contains(&c.family));
        for c in diag.curves.iter_mut() {
            c.family = if c.family == keep[0] {
                Family::Delta(0)
            } else if c.family == keep[1] {
                Family::Delta(1)
            } else {
                Family::Delta(2)
            };
        }
        TripleHeegaard { diag }
    }

    /// Homology of the i-th sector's realized closed 3-manifold.
    pub fn sector_homology(&self, i: u8) -> Result<Vec<AbelianGroup>, StructureError> {
        self.sector_triple(i).realize_homology()
    }

    /// The rank k_i, certified: the i-th sector's realization must have the
    /// homology of #^{k_i}(S¹×S²), i.e. (Z, Z^{k_i}, Z^{k_i}, Z) with no
    /// torsion.
    pub fn sector_k(&self, i: u8) -> Result<usize, StructureError> {
        let h = self.sector_homology(i)?;
        let k = h[1].rank;
        if !h[1].is_free_of_rank(k) || !h[2].is_free_of_rank(k) {
            return Err(StructureError::MalformedMap(format!(
                "sector {} realizes H₁ = {}, H₂ = {}, not a connected sum of \
                 copies of S¹×S²",
                i % 3 + 1,
                h[1],
                h[2]
            )));
        }
        Ok(k)
    }

    /// Full structural validation, including the certification that every
    /// sector realizes a connected sum of copies of S¹×S²; the achieved
    /// k_i are reported in the notes.
    pub fn validate(&self) -> CheckReport {
        let mut rep = CheckReport::default();
        if let Err(e) = self.diag.cx.check_walks() {
            rep.fail(e);
            return rep;
        }
        if let Err(e) = self.diag.check_binding_cycles() {
            rep.fail(e);
            return rep;
        }
        for r in [Role::C, Role::S(0), Role::S(1), Role::S(2)] {
            if let Err(e) = self.diag.surface_flip(r) {
                rep.fail(format!("surface {}: {}", r.label(), e));
            }
        }
        if !rep.pass() {
            return rep;
        }
        for c in &self.diag.curves {
            match c.family {
                Family::Alpha(i) | Family::Delta(i) if i < 3 => {
                    if !c.closed {
                        rep.fail(format!("curve in {} is not closed", c.family.label()));
                    }
                }
                _ => rep.fail(format!(
                    "family {} does not belong in a four-sector diagram",
                    c.family.label()
                )),
            }
        }
        if !rep.pass() {
            return rep;
        }
        if let Err(e) = check_curve_positions(&self.diag) {
            rep.fail(e);
            return rep;
        }
        for i in 0..3u8 {
            let (neg, pos) = alpha_pair(i);
            if let Err(e) = self.diag.verify_cut_system(neg, pos, &self.alpha(i)) {
                rep.fail(format!("family {}: {}", Family::Alpha(i).label(), e));
            }
            let (neg, pos) = (Role::S(i), Role::S((i + 1) % 3));
            if let Err(e) = self.diag.verify_cut_system(neg, pos, &self.delta(i)) {
                rep.fail(format!("family {}: {}", Family::Delta(i).label(), e));
            }
        }
        if !rep.pass() {
            return rep;
        }
        for i in 0..3u8 {
            let sector = self.sector_triple(i);
            let sub = sector.validate();
            for f in sub.failures {
                rep.fail(format!("sector {}: {}", i + 1, f));
            }
        }
        if !rep.pass() {
            return rep;
        }
        for i in 0..3u8 {
            match self.sector_k(i) {
                Ok(k) => rep.notes.push(format!("sector {}: k = {}", i + 1, k)),
                Err(e) => rep.fail(e),
            }
        }
        rep
    }

    /// Index data; all consistency equations asserted.
    pub fn indices(&self) -> Result<Indices4, StructureError> {
        let b = self.diag.binding.len();
        let g = self.diag.cx.surface_shape(&[Role::C])?.total_genus;
        let mut p = [0usize; 3];
        let mut y = [0usize; 3];
        let mut h = [0usize; 3];
        let mut k = [0usize; 3];
        for i in 0..3u8 {
            p[i as usize] = self.diag.cx.surface_shape(&[Role::S(i)])?.total_genus;
            y[i as usize] = self.delta(i).len();
            h[i as usize] = self.alpha(i).len();
            k[i as usize] = self.sector_k(i)?;
        }
        for i in 0..3 {
            if h[i] != g + p[i] + b - 1 {
                return Err(StructureError::InconsistentIndices(format!(
                    "h_{} = {} but g + p_{} + b − 1 = {}",
                    i + 1,
                    h[i],
                    i + 1,
                    g + p[i] + b - 1
                )));
            }
            if y[i] != p[i] + p[(i + 1) % 3] + b - 1 {
                return Err(StructureError::InconsistentIndices(format!(
                    "y_{} = {} but p_{} + p_{} + b − 1 = {}",
                    i + 1,
                    y[i],
                    i + 1,
                    (i + 1) % 3 + 1,
                    p[i] + p[(i + 1) % 3] + b - 1
                )));
            }
        }
        let (ty, tk, tp) = (
            y.iter().sum::<usize>() as i64,
            k.iter().sum::<usize>() as i64,
            p.iter().sum::<usize>() as i64,
        );
        if (ty + b as i64) % 2 == 0 {
            return Err(StructureError::InconsistentIndices(format!(
                "|y| + b = {} must be odd",
                ty + b as i64
            )));
        }
        let chi = g as i64 - tk + (ty + b as i64 + 1) / 2;
        let c = chi + tk - 1;
        if c != g as i64 + tp + 2 * b as i64 - 2 {
            return Err(StructureError::InconsistentIndices(format!(
                "c = {} but g + |p| + 2b − 2 = {}",
                c,
                g as i64 + tp + 2 * b as i64 - 2
            )));
        }
        let c_boundary = ty;
        Ok(Indices4 {
            g,
            b,
            k,
            y,
            p,
            h,
            chi,
            c,
            c_boundary,
            c_pair: c + c_boundary,
        })
    }

    /// The boundary restriction: drops the central surface and all α
    /// families, leaving the three-sector diagram (Σ_1, Σ_2, Σ_3; δ_1, δ_2,
    /// δ_3) of the boundary 3-manifold.
    pub fn restrict_boundary(&self) -> TripleHeegaard {
        let mut diag = self.diag.clone();
        diag.cx.faces.retain(|f| f.role != Role::C);
        diag.curves.retain(|c| matches!(c.family, Family::Delta(_)));
        TripleHeegaard { diag }
    }
}

/// An orientation of every cell of a four-sector diagram, propagated from
/// one oriented binding component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationAssignment {
    /// Per face: `true` if the stored walk already runs counterclockwise
    /// with respect to the chosen orientation, `false` if its reverse does.
    pub face_counterclockwise: Vec<bool>,
    /// Per binding circle: +1 if the induced direction is the stored
    /// reference direction, −1 otherwise.
    pub binding_directions: Vec<(String, i8)>,
    /// Boundary expression of each three-dimensional sector Y_i as
    /// (negative role, positive role): ∂Y_i = (−Σ_i) ∪ Σ_{i+1}.
    pub sector_boundaries: [(Role, Role); 3],
    /// Boundary expression of each handlebody H_i: ∂H_i = (−Σ_C) ∪ Σ_i.
    pub handlebody_boundaries: [(Role, Role); 3],
}

/// Propagates an orientation of one binding component over the whole
/// diagram (outward-normal-first convention: every surface induces the
/// same direction on every binding circle).  Reversing the chosen
/// direction reverses every face bit and every induced direction.
pub fn orient_ptri(
    d: &PseudoTrisection,
    component: &str,
    forward: bool,
) -> Result<OrientationAssignment, StructureError> {
    if !d.diag.binding.iter().any(|b| b.label == component) {
        return Err(StructureError::DanglingReference(format!(
            "no binding circle {}",
            component
        )));
    }
    let eps: i64 = if forward { 1 } else { -1 };
    let mut flips = std::collections::BTreeMap::new();
    for r in [Role::C, Role::S(0), Role::S(1), Role::S(2)] {
        let f = d.diag.surface_flip(r).map_err(|e| {
            StructureError::DisconnectedPropagation(format!(
                "cannot propagate over surface {}: {}",
                r.label(),
                e
            ))
        })?;
        flips.insert(r, f);
    }
    let face_counterclockwise = d
        .diag
        .cx
        .faces
        .iter()
        .map(|f| flips[&f.role] == eps)
        .collect();
    let binding_directions = d
        .diag
        .binding
        .iter()
        .map(|b| (b.label.clone(), eps as i8))
        .collect();
    let sector_boundaries =
        std::array::from_fn(|i| (Role::S(i as u8), Role::S((i as u8 + 1) % 3)));
    let handlebody_boundaries = std::array::from_fn(|i| (Role::C, Role::S(i as u8)));
    Ok(OrientationAssignment {
        face_counterclockwise,
        binding_directions,
        sector_boundaries,
        handlebody_boundaries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn trivial_b4_validates() {
        let d = zoo::trivial_b4();
        let rep = d.validate();
        assert!(rep.pass(), "{:?}", rep.failures);
        let ix = d.indices().unwrap();
        assert_eq!(
            ix,
            Indices4 {
                g: 0,
                b: 1,
                k: [0, 0, 0],
                y: [0, 0, 0],
                p: [0, 0, 0],
                h: [0, 0, 0],
                chi: 1,
                c: 0,
                c_boundary: 0,
                c_pair: 0,
            }
        );
        let boundary = d.restrict_boundary();
        assert!(boundary.validate().pass());
        let bix = boundary.indices().unwrap();
        assert_eq!((bix.y, bix.b), ([0, 0, 0], 1));
    }

    #[test]
    fn s1_b3_has_expected_table_row() {
        let d = zoo::s1_b3();
        let rep = d.validate();
        assert!(rep.pass(), "{:?}", rep.failures);
        let ix = d.indices().unwrap();
        assert_eq!(ix.k, [1, 1, 0]);
        assert_eq!(ix.y, [1, 1, 0]);
        assert_eq!(ix.b, 1);
        assert_eq!(ix.chi, 0);
        assert_eq!(ix.c, 1);
        assert_eq!(ix.c_pair, 3);
    }

    #[test]
    fn s2_d2_has_expected_table_row() {
        let d = zoo::s2_d2();
        let rep = d.validate();
        assert!(rep.pass(), "{:?}", rep.failures);
        let ix = d.indices().unwrap();
        assert_eq!(ix.k, [0, 0, 0]);
        assert_eq!(ix.chi, 2);
        assert_eq!(ix.c, 1);
        // Boundary restriction is the genus-1 splitting diagram of S¹×S².
        let boundary = d.restrict_boundary();
        assert!(boundary.validate().pass());
        let h = boundary.realize_homology().unwrap();
        assert!(h[1].is_free_of_rank(1), "H₁ = {}", h[1]);
    }

    #[test]
    fn cp2_minus_b4_has_expected_table_row() {
        let d = zoo::cp2_minus_b4();
        let rep = d.validate();
        assert!(rep.pass(), "{:?}", rep.failures);
        let ix = d.indices().unwrap();
        assert_eq!(ix.g, 1);
        assert_eq!(ix.k, [0, 0, 0]);
        assert_eq!(ix.y, [0, 0, 0]);
        assert_eq!(ix.b, 1);
        assert_eq!(ix.chi, 2);
        assert_eq!(ix.c, 1);
        assert_eq!(ix.c_pair, 1);
    }

    #[test]
    fn extra_alpha_curve_fails_validation() {
        let mut d = zoo::trivial_b4();
        // A spurious closed curve in α₁ breaks the cut-system cardinality
        // h₁ = g + p₁ + b − 1 = 0.
        let walk = d.diag.cx.faces[0].walk.clone();
        d.diag
            .curves
            .push(Curve::closed(Family::Alpha(0), walk));
        assert!(!d.validate().pass());
    }

    #[test]
    fn sector_triples_validate_independently() {
        for d in [zoo::s1_b3(), zoo::s2_d2(), zoo::cp2_minus_b4()] {
            for i in 0..3u8 {
                let t = d.sector_triple(i);
                let rep = t.validate();
                assert!(rep.pass(), "sector {}: {:?}", i + 1, rep.failures);
                t.indices().unwrap();
            }
        }
    }

    #[test]
    fn orientation_propagates_and_is_equivariant() {
        for d in [zoo::trivial_b4(), zoo::cp2_minus_b4()] {
            let fwd = orient_ptri(&d, "B1", true).unwrap();
            let bwd = orient_ptri(&d, "B1", false).unwrap();
            assert_eq!(fwd.face_counterclockwise.len(), d.diag.cx.faces.len());
            for (a, b) in fwd
                .face_counterclockwise
                .iter()
                .zip(&bwd.face_counterclockwise)
            {
                assert_ne!(a, b);
            }
            for (l, s) in &fwd.binding_directions {
                assert_eq!(*s, 1, "circle {}", l);
            }
            // The assignment is consistent with the realization: every
            // sector chain complex passes its ∂₂∘∂₃ = 0 check.
            for i in 0..3u8 {
                d.sector_homology(i).unwrap();
            }
        }
        assert!(matches!(
            orient_ptri(&zoo::trivial_b4(), "nope", true),
            Err(StructureError::DanglingReference(_))
        ));
    }
}
