//! Shared diagram structure: several surfaces in one complex, a common
//! binding, and curve systems on glued pairs.
//!
//! Both three-sector diagrams (three surfaces Σ_1, Σ_2, Σ_3) and four-sector
//! diagrams (a central Σ_C plus Σ_1, Σ_2, Σ_3) are a [`Diagram`]: one
//! complex with role-tagged faces, binding circles shared by every surface,
//! and curves tagged by family.  This module owns the orientation
//! bookkeeping (every surface induces the reference boundary chain up to a
//! global flip), glued-pair extraction, cut-system verification, and the
//! chain-complex realization used for homology certification.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cell::{Complex, Dart, Edge, Face, Role, Vertex};
use crate::curve::{transverse_crossings, Curve, Family};
use crate::homology::{ChainComplex, Mat};
use crate::report::StructureError;

/// One binding circle: a labelled reference cycle of darts.  The reference
/// direction is the boundary chain induced by every surface (up to the
/// surface's global flip).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BindingCircle {
    pub label: String,
    pub darts: Vec<Dart>,
}

/// A multi-surface diagram: complex, binding, curves.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagram {
    pub cx: Complex,
    pub binding: Vec<BindingCircle>,
    pub curves: Vec<Curve>,
}

/// Cyclic equality of dart sequences.
pub fn cyclic_eq(a: &[Dart], b: &[Dart]) -> bool {
    if a.len() != b.len() || a.is_empty() {
        return a.len() == b.len();
    }
    (0..a.len()).any(|k| (0..a.len()).all(|i| a[(i + k) % a.len()] == b[i]))
}

/// The same circle traversed backwards.
pub fn reversed_circle(a: &[Dart]) -> Vec<Dart> {
    a.iter().rev().map(|d| d.rev()).collect()
}

impl Diagram {
    pub fn binding_edges(&self) -> BTreeSet<Edge> {
        self.binding
            .iter()
            .flat_map(|c| c.darts.iter().map(|d| d.edge()))
            .collect()
    }

    pub fn binding_vertices(&self) -> BTreeSet<Vertex> {
        self.binding
            .iter()
            .flat_map(|c| c.darts.iter().map(|d| self.cx.tail(*d)))
            .collect()
    }

    pub fn curves_in(&self, family: Family) -> Vec<&Curve> {
        self.curves.iter().filter(|c| c.family == family).collect()
    }

    /// Checks that the binding circles are well-formed closed cycles over
    /// distinct edges.
    pub fn check_binding_cycles(&self) -> Result<(), StructureError> {
        let mut seen = BTreeSet::new();
        for c in &self.binding {
            if c.darts.is_empty() {
                return Err(StructureError::MalformedMap(format!(
                    "binding circle {} is empty",
                    c.label
                )));
            }
            for i in 0..c.darts.len() {
                let d = c.darts[i];
                if d.edge() >= self.cx.n_edges() {
                    return Err(StructureError::DanglingReference(format!(
                        "binding circle {} references a missing edge",
                        c.label
                    )));
                }
                if !seen.insert(d.edge()) {
                    return Err(StructureError::MalformedMap(format!(
                        "binding circle {} reuses edge {}",
                        c.label,
                        d.edge()
                    )));
                }
                let d2 = c.darts[(i + 1) % c.darts.len()];
                if self.cx.head(d) != self.cx.tail(d2) {
                    return Err(StructureError::MalformedMap(format!(
                        "binding circle {} breaks at step {}",
                        c.label, i
                    )));
                }
            }
        }
        Ok(())
    }

    /// Validates one role as a connected surface whose boundary is exactly
    /// the binding, and returns its flip sign: +1 if its stored faces induce
    /// the reference direction on every circle, −1 if they induce the
    /// reverse on every circle.
    pub fn surface_flip(&self, role: Role) -> Result<i64, StructureError> {
        let shape = self.cx.surface_shape(&[role])?;
        if shape.components != 1 {
            return Err(StructureError::MalformedMap(format!(
                "surface {} is disconnected ({} components)",
                role.label(),
                shape.components
            )));
        }
        if shape.circles.len() != self.binding.len() {
            return Err(StructureError::LabelMismatch(format!(
                "surface {} has {} boundary circles, binding has {}",
                role.label(),
                shape.circles.len(),
                self.binding.len()
            )));
        }
        let mut flip: Option<i64> = None;
        for traced in &shape.circles {
            let edge0 = traced[0].edge();
            let bc = self
                .binding
                .iter()
                .find(|c| c.darts.iter().any(|d| d.edge() == edge0))
                .ok_or_else(|| {
                    StructureError::LabelMismatch(format!(
                        "surface {} boundary leaves the binding at edge {}",
                        role.label(),
                        edge0
                    ))
                })?;
            if bc.darts.len() != traced.len() {
                return Err(StructureError::LengthMismatch(format!(
                    "surface {} traces circle {} with length {}, reference has {}",
                    role.label(),
                    bc.label,
                    traced.len(),
                    bc.darts.len()
                )));
            }
            let this = if cyclic_eq(traced, &bc.darts) {
                // The *exposed* darts run with the reference; the used darts
                // (the induced boundary of the stored orientation) run the
                // other way.  The induced chain is the used one, so exposure
                // matching the reference means the stored surface induces
                // the reverse: flip −1.
                -1
            } else if cyclic_eq(traced, &reversed_circle(&bc.darts)) {
                1
            } else {
                return Err(StructureError::OrientationClash(format!(
                    "surface {} boundary on circle {} matches neither direction",
                    role.label(),
                    bc.label
                )));
            };
            match flip {
                None => flip = Some(this),
                Some(f) if f != this => {
                    return Err(StructureError::OrientationClash(format!(
                        "surface {} induces mixed directions on the binding",
                        role.label()
                    )));
                }
                _ => {}
            }
        }
        Ok(flip.unwrap_or(1))
    }

    /// Builds the closed glued pair (−`neg`) ∪ (+`pos`) as a standalone
    /// complex: faces of both roles, with walks reversed as needed so the
    /// result is coherently oriented with `pos` positive.  Dart and edge
    /// ids are unchanged.  Curves on the pair carry over verbatim.
    pub fn pair_complex(&self, neg: Role, pos: Role) -> Result<Complex, StructureError> {
        let flip_neg = self.surface_flip(neg)?;
        let flip_pos = self.surface_flip(pos)?;
        let mut cx = Complex {
            n_vertices: self.cx.n_vertices,
            edges: self.cx.edges.clone(),
            faces: Vec::new(),
        };
        for f in &self.cx.faces {
            let keep = if f.role == pos {
                flip_pos == 1
            } else if f.role == neg {
                flip_neg == -1
            } else {
                continue;
            };
            let walk = if keep {
                f.walk.clone()
            } else {
                reversed_circle(&f.walk)
            };
            cx.faces.push(Face {
                role: Role::S(0),
                walk,
            });
        }
        Ok(cx)
    }

    /// Verifies that `curves` is a cut system on the closed glued pair
    /// (−neg) ∪ (+pos): disjoint simple closed curves, as many as the pair's
    /// genus, cutting it into a connected genus-0 surface.
    pub fn verify_cut_system(
        &self,
        neg: Role,
        pos: Role,
        curves: &[&Curve],
    ) -> Result<(), StructureError> {
        let cx = self.pair_complex(neg, pos)?;
        let all = [Role::S(0)];
        let shape = cx.surface_shape(&all)?;
        if shape.components != 1 || shape.boundary_count != 0 {
            return Err(StructureError::MalformedMap(format!(
                "glued pair (−{}) ∪ {} is not a closed connected surface",
                neg.label(),
                pos.label()
            )));
        }
        if curves.len() != shape.total_genus {
            return Err(StructureError::MalformedMap(format!(
                "family on (−{}) ∪ {} has {} curves, pair genus is {}",
                neg.label(),
                pos.label(),
                curves.len(),
                shape.total_genus
            )));
        }
        let slots = cx.slot_map(&all)?;
        for (i, c) in curves.iter().enumerate() {
            if !c.closed {
                return Err(StructureError::NotALoop(format!(
                    "curve {} of family {} is an open arc",
                    i,
                    c.family.label()
                )));
            }
            c.check_embedded(&cx)?;
            for d in &c.darts {
                if !slots.used(*d) || !slots.used(d.rev()) {
                    return Err(StructureError::InvalidTarget(format!(
                        "curve {} of family {} leaves the glued pair at edge {}",
                        i,
                        c.family.label(),
                        d.edge()
                    )));
                }
            }
            for other in curves.iter().skip(i + 1) {
                let xs = transverse_crossings(&cx, &slots, c, other)?;
                if !xs.is_empty() {
                    return Err(StructureError::NonTransverse(format!(
                        "curves of family {} intersect",
                        c.family.label()
                    )));
                }
            }
        }
        if curves.is_empty() && shape.total_genus == 0 {
            return Ok(());
        }
        // Cut and classify.
        let mut cut = cx.clone();
        let darts: Vec<Dart> = curves.iter().flat_map(|c| c.darts.clone()).collect();
        crate::curve::duplicate_along(&mut cut, &all, &darts)?;
        cut.rebuild_vertices();
        let after = cut.surface_shape(&all)?;
        if after.components != 1 {
            return Err(StructureError::MalformedMap(format!(
                "cutting along {} disconnects the glued pair",
                curves[0].family.label()
            )));
        }
        if after.total_genus != 0 {
            return Err(StructureError::MalformedMap(format!(
                "cutting along {} leaves genus {}",
                curves[0].family.label(),
                after.total_genus
            )));
        }
        Ok(())
    }
}

/// Specification of one 3-cell of a realization: the handlebody between two
/// surfaces, contributing ∂₃ = (+pos) − (neg), with each surface weighted by
/// its flip sign so both induce the reference binding chain.
#[derive(Clone, Copy, Debug)]
pub struct BallSpec {
    pub neg: Role,
    pub pos: Role,
}

/// Builds the cellular chain complex of a realized closed 3-manifold:
/// the glued 2-skeleton of the given roles, one disk per attachment curve,
/// and one 3-cell per ball spec.  `∂₂∘∂₃ = 0` is verified and fails with
/// `OrientationClash`.
pub fn cw_from_realization(
    diag: &Diagram,
    roles: &[Role],
    disks: &[&Curve],
    balls: &[BallSpec],
) -> Result<ChainComplex, StructureError> {
    let cx = &diag.cx;
    // Collect the subcomplex cells.
    let mut face_ids = Vec::new();
    let mut edge_set = BTreeSet::new();
    for (fi, f) in cx.faces.iter().enumerate() {
        if roles.contains(&f.role) {
            face_ids.push(fi);
            for d in &f.walk {
                edge_set.insert(d.edge());
            }
        }
    }
    for c in disks {
        for d in &c.darts {
            if !edge_set.contains(&d.edge()) {
                return Err(StructureError::DanglingReference(format!(
                    "attachment curve {} uses edge {} outside the skeleton",
                    c.family.label(),
                    d.edge()
                )));
            }
        }
        if !c.closed {
            return Err(StructureError::NotALoop(format!(
                "attachment curve {} is not closed",
                c.family.label()
            )));
        }
    }
    let edges: Vec<Edge> = edge_set.iter().copied().collect();
    let edge_idx: BTreeMap<Edge, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut vert_set = BTreeSet::new();
    for &e in &edges {
        vert_set.insert(cx.edges[e].0);
        vert_set.insert(cx.edges[e].1);
    }
    let verts: Vec<Vertex> = vert_set.iter().copied().collect();
    let vert_idx: BTreeMap<Vertex, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    let n0 = verts.len();
    let n1 = edges.len();
    let n2 = face_ids.len() + disks.len();
    let n3 = balls.len();

    let mut d1 = Mat::zero(n0, n1);
    for (j, &e) in edges.iter().enumerate() {
        let (t, h) = cx.edges[e];
        d1[(vert_idx[&h], j)] += BigInt::from(1);
        d1[(vert_idx[&t], j)] -= BigInt::from(1);
    }

    let mut d2 = Mat::zero(n1, n2);
    for (j, &fi) in face_ids.iter().enumerate() {
        for d in &cx.faces[fi].walk {
            let s = if d.is_forward() { 1 } else { -1 };
            d2[(edge_idx[&d.edge()], j)] += BigInt::from(s);
        }
    }
    for (j, c) in disks.iter().enumerate() {
        for d in &c.darts {
            let s = if d.is_forward() { 1 } else { -1 };
            d2[(edge_idx[&d.edge()], face_ids.len() + j)] += BigInt::from(s);
        }
    }

    // ∂₃: each ball takes +flip(pos)·faces(pos) − flip(neg)·faces(neg),
    // and coefficient 0 on every disk.
    let mut flips: BTreeMap<Role, i64> = BTreeMap::new();
    for b in balls {
        for r in [b.neg, b.pos] {
            if let std::collections::btree_map::Entry::Vacant(e) = flips.entry(r) {
                e.insert(diag.surface_flip(r)?);
            }
        }
    }
    let mut d3 = Mat::zero(n2, n3);
    for (j, b) in balls.iter().enumerate() {
        for (i, &fi) in face_ids.iter().enumerate() {
            let role = cx.faces[fi].role;
            if role == b.pos {
                d3[(i, j)] += BigInt::from(flips[&b.pos]);
            }
            if role == b.neg {
                d3[(i, j)] -= BigInt::from(flips[&b.neg]);
            }
        }
    }
    // Verify ∂₂∘∂₃ = 0 explicitly; a failure means the orientation
    // assignment is inconsistent.
    let comp = d2.mul(&d3);
    if comp.a.iter().any(|x| !x.is_zero()) {
        return Err(StructureError::OrientationClash(
            "∂₂∘∂₃ ≠ 0 in the realized complex".into(),
        ));
    }
    let cc = ChainComplex {
        dims: vec![n0, n1, n2, n3],
        maps: vec![Mat::zero(0, 0), d1, d2, d3],
    };
    cc.check()?;
    Ok(cc)
}
