//! Three-sector Heegaard-style diagrams of closed 3-manifolds.
//!
//! A [`TripleHeegaard`] holds three surfaces Σ_1, Σ_2, Σ_3 with identified
//! boundaries (the binding) and curve families δ_1, δ_2, δ_3, where δ_i glues
//! to a cut system on the closed pair Σ_i ∪ Σ_{i+1}.  This module provides
//! validation, the index triple (y; b; p), complexity, and the realization
//! homology; the moves live in [`crate::moves3`].

use serde::{Deserialize, Serialize};

use crate::cell::Role;
use crate::curve::{transverse_crossings, Curve, Family};
use crate::diagram::{cw_from_realization, BallSpec, Diagram};
use crate::homology::AbelianGroup;
use crate::report::{StructureError, Warning};

/// Validation outcome: pass/fail with pinpointed failures.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub failures: Vec<String>,
    pub warnings: Vec<Warning>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
    pub fn fail(&mut self, e: impl ToString) {
        self.failures.push(e.to_string());
    }
}

/// Index data of a three-sector diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Indices3 {
    /// Cut-system cardinalities y_i = |δ_i|.
    pub y: [usize; 3],
    /// Genera of the three surfaces.
    pub p: [usize; 3],
    /// Number of binding circles.
    pub b: usize,
}

impl Indices3 {
    pub fn total_y(&self) -> usize {
        self.y.iter().sum()
    }
}

/// A three-sector diagram: roles `S(0..3)`, with family `Delta(i)` on the
/// glued pair Σ_{i+1} ∪ Σ_{i+2} (0-based: `Delta(i)` on `S(i) ∪ S(i+1)`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleHeegaard {
    pub diag: Diagram,
}

/// The two roles a three-sector family lives on.
pub fn delta_pair(i: u8) -> (Role, Role) {
    (Role::S(i % 3), Role::S((i + 1) % 3))
}

impl TripleHeegaard {
    pub fn delta(&self, i: u8) -> Vec<&Curve> {
        self.diag.curves_in(Family::Delta(i % 3))
    }

    /// Full structural validation.
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
        for r in 0..3 {
            if let Err(e) = self.diag.surface_flip(Role::S(r)) {
                rep.fail(format!("surface {}: {}", r + 1, e));
            }
        }
        if !rep.pass() {
            return rep;
        }
        for c in &self.diag.curves {
            match c.family {
                Family::Delta(i) if i < 3 => {
                    if !c.closed {
                        rep.fail(format!("curve in {} is not closed", c.family.label()));
                    }
                }
                _ => rep.fail(format!(
                    "family {} does not belong in a three-sector diagram",
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
            let (neg, pos) = delta_pair(i);
            let fam = self.delta(i);
            if let Err(e) = self.diag.verify_cut_system(neg, pos, &fam) {
                rep.fail(format!("family {}: {}", Family::Delta(i).label(), e));
            }
        }
        rep
    }

    /// Index triple; consistency equations asserted.
    pub fn indices(&self) -> Result<Indices3, StructureError> {
        let b = self.diag.binding.len();
        let mut p = [0usize; 3];
        for r in 0..3u8 {
            let shape = self.diag.cx.surface_shape(&[Role::S(r)])?;
            p[r as usize] = shape.total_genus;
        }
        let mut y = [0usize; 3];
        for i in 0..3u8 {
            y[i as usize] = self.delta(i).len();
        }
        for i in 0..3 {
            let expect = p[i] + p[(i + 1) % 3] + b - 1;
            if y[i] != expect {
                return Err(StructureError::InconsistentIndices(format!(
                    "y_{} = {} but p_{} + p_{} + b − 1 = {}",
                    i + 1,
                    y[i],
                    i + 1,
                    (i + 1) % 3 + 1,
                    expect
                )));
            }
            // p_i = ½(y_{i−1} + y_i − y_{i+1} − b + 1), rearranged to avoid
            // signed arithmetic.
            let lhs = 2 * p[i] + y[(i + 1) % 3] + b;
            let rhs = y[(i + 2) % 3] + y[i] + 1;
            if lhs != rhs {
                return Err(StructureError::InconsistentIndices(format!(
                    "p_{} fails the half-sum identity",
                    i + 1
                )));
            }
        }
        Ok(Indices3 { y, p, b })
    }

    /// Complexity |y|; the identity |y| = 2|p| + 3b − 3 is asserted.
    pub fn complexity(&self) -> Result<usize, StructureError> {
        let ix = self.indices()?;
        let total = ix.total_y();
        let alt = 2 * ix.p.iter().sum::<usize>() + 3 * ix.b - 3;
        assert_eq!(total, alt, "complexity identity |y| = 2|p| + 3b − 3");
        Ok(total)
    }

    /// The cellular chain complex of the realized closed 3-manifold: the
    /// glued 2-skeleton, one disk per δ curve, one 3-cell per sector
    /// handlebody.  1-cells are the skeleton edges in increasing id order.
    pub fn realization_complex(&self) -> Result<crate::homology::ChainComplex, StructureError> {
        let roles = [Role::S(0), Role::S(1), Role::S(2)];
        let disks: Vec<&Curve> = self.diag.curves.iter().collect();
        let balls: Vec<BallSpec> = (0..3u8)
            .map(|i| {
                let (neg, pos) = delta_pair(i);
                BallSpec { neg, pos }
            })
            .collect();
        cw_from_realization(&self.diag, &roles, &disks, &balls)
    }

    /// Homology of the realized closed 3-manifold.
    pub fn realize_homology(&self) -> Result<Vec<AbelianGroup>, StructureError> {
        let cc = self.realization_complex()?;
        let h = cc.all_homology()?;
        // Closed oriented 3-manifold witnesses.
        if !h[0].is_free_of_rank(1) || !h[3].is_free_of_rank(1) {
            return Err(StructureError::MalformedMap(format!(
                "realization has H₀ = {}, H₃ = {} (expected Z, Z)",
                h[0], h[3]
            )));
        }
        if h[1].rank != h[2].rank {
            return Err(StructureError::MalformedMap(format!(
                "realization fails duality rank check: H₁ = {}, H₂ = {}",
                h[1], h[2]
            )));
        }
        Ok(h)
    }
}

/// Checks every curve's position: lies in its glued pair, avoids binding
/// vertices except for clean transversal passages, and distinct curves never
/// share a vertex unless they cross transversally (same-family curves may
/// not cross at all — that is re-checked by cut-system verification).
pub fn check_curve_positions(diag: &Diagram) -> Result<(), StructureError> {
    use std::collections::BTreeSet;
    let curves = &diag.curves;
    // Pairwise: no shared binding vertices, no shared edges.
    let bverts = diag.binding_vertices();
    let bedges = diag.binding_edges();
    let mut seen_bcross: BTreeSet<usize> = BTreeSet::new();
    for (ci, c) in curves.iter().enumerate() {
        for d in &c.darts {
            if bedges.contains(&d.edge()) {
                return Err(StructureError::InvalidTarget(format!(
                    "curve {} runs along the binding at edge {}",
                    c.family.label(),
                    d.edge()
                )));
            }
        }
        let mut verts: Vec<_> = c.vertices(&diag.cx);
        if !c.closed {
            // Arc endpoints may (and for neat arcs must) be on the binding.
            verts = verts[1..verts.len() - 1].to_vec();
        }
        for v in verts {
            if bverts.contains(&v) && !seen_bcross.insert(v) {
                return Err(StructureError::NonTransverse(format!(
                    "two curves cross the binding at the same vertex {} (curve {})",
                    v,
                    curves[ci].family.label()
                )));
            }
        }
    }
    // Cross-family transversality wherever two curves share a surface.
    for (i, a) in curves.iter().enumerate() {
        for b in curves.iter().skip(i + 1) {
            if a.family == b.family {
                continue;
            }
            let (ra, rb) = (family_roles(a.family), family_roles(b.family));
            let shared: Vec<Role> = ra.iter().copied().filter(|r| rb.contains(r)).collect();
            if shared.is_empty() {
                continue;
            }
            // Check transversality on the union of both pairs' roles: any
            // shared vertex is interior to a shared surface, where the
            // single-role slot map has a closed fan.
            for r in shared {
                let av: BTreeSet<_> = a.vertices(&diag.cx).into_iter().collect();
                let bv: BTreeSet<_> = b.vertices(&diag.cx).into_iter().collect();
                let both: Vec<_> = av.intersection(&bv).copied().collect();
                let interior: Vec<_> = both
                    .iter()
                    .filter(|v| !bverts.contains(v))
                    .copied()
                    .collect();
                if interior.is_empty() {
                    continue;
                }
                let slots = diag.cx.slot_map(&[r])?;
                // Only meaningful if the shared vertices are in this role's
                // interior; transverse_crossings verifies fans there.
                let relevant = interior.iter().any(|v| {
                    diag.cx
                        .out_darts_by_vertex(&slots)
                        .get(*v)
                        .map(|ds| !ds.is_empty())
                        .unwrap_or(false)
                });
                if relevant {
                    transverse_crossings(&diag.cx, &slots, a, b)?;
                }
            }
        }
    }
    Ok(())
}

/// The two roles a curve family spans.
pub fn family_roles(f: Family) -> [Role; 2] {
    match f {
        Family::Delta(i) => [Role::S(i % 3), Role::S((i + 1) % 3)],
        Family::Alpha(i) => [Role::C, Role::S(i % 3)],
        Family::Tau(i) => [Role::C, Role::S(i % 3)],
        Family::Ell(i) => [Role::S(i % 3), Role::S((i + 1) % 3)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn trivial_s3_validates() {
        let d = zoo::trivial_s3();
        let rep = d.validate();
        assert!(rep.pass(), "{:?}", rep.failures);
        let ix = d.indices().unwrap();
        assert_eq!(ix, Indices3 { y: [0, 0, 0], p: [0, 0, 0], b: 1 });
        assert_eq!(d.complexity().unwrap(), 0);
        let h = d.realize_homology().unwrap();
        assert!(h[1].is_trivial() && h[2].is_trivial());
    }

    #[test]
    fn s1s2_genus1_diagram() {
        let d = zoo::s1s2_heegaard();
        let rep = d.validate();
        assert!(rep.pass(), "{:?}", rep.failures);
        let ix = d.indices().unwrap();
        assert_eq!(ix.y, [1, 1, 0]);
        assert_eq!(ix.p, [0, 1, 0]);
        assert_eq!(ix.b, 1);
        assert_eq!(d.complexity().unwrap(), 2);
        let h = d.realize_homology().unwrap();
        assert!(h[1].is_free_of_rank(1), "H₁ = {}", h[1]);
        assert!(h[2].is_free_of_rank(1), "H₂ = {}", h[2]);
    }

    #[test]
    fn two_s1s2_diagram() {
        let d = zoo::two_s1s2();
        let rep = d.validate();
        assert!(rep.pass(), "{:?}", rep.failures);
        let ix = d.indices().unwrap();
        assert_eq!(ix.y, [1, 1, 1]);
        assert_eq!(ix.b, 2);
        assert_eq!(d.complexity().unwrap(), 3);
        let h = d.realize_homology().unwrap();
        assert!(h[1].is_free_of_rank(2), "H₁ = {}", h[1]);
        assert!(h[2].is_free_of_rank(2), "H₂ = {}", h[2]);
    }

    #[test]
    fn missing_curve_fails_validation() {
        let mut d = zoo::s1s2_heegaard();
        d.diag.curves.pop();
        assert!(!d.validate().pass());
    }
}
