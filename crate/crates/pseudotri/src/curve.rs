//! Curves and arcs drawn on diagram surfaces.
//!
//! A curve is a walk of darts along edges of the complex, tagged with the
//! family it belongs to.  Closed curves stay in the interior of their
//! surface; arcs may end on the binding.  Two curves meet only transversally
//! at shared vertices (never along shared edges), and intersection signs are
//! read off from the rotation system.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::cell::{Complex, Dart, Edge, Role, SlotMap, Vertex};
use crate::report::StructureError;

/// Which curve system a curve belongs to.  Indices are 0-based internally
/// and printed 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Family {
    /// α_i: bounds a disk in the i-th three-dimensional sector of a
    /// four-dimensional diagram; drawn on Σ_C ∪ Σ_i.
    Alpha(u8),
    /// δ_i: compressing system of a three-dimensional diagram; drawn on
    /// Σ_i ∪ Σ_{i+1}.
    Delta(u8),
    /// τ_i: shadow arcs in sector i joining the central surface to Σ_i.
    Tau(u8),
    /// L_i: shadow arcs in sector i joining Σ_i to Σ_{i+1}.
    Ell(u8),
}

impl Family {
    pub fn label(self) -> String {
        match self {
            Family::Alpha(i) => format!("alpha{}", i + 1),
            Family::Delta(i) => format!("delta{}", i + 1),
            Family::Tau(i) => format!("tau{}", i + 1),
            Family::Ell(i) => format!("L{}", i + 1),
        }
    }
}

/// A curve or arc: consecutive darts, closed or open.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Curve {
    pub family: Family,
    pub darts: Vec<Dart>,
    pub closed: bool,
}

impl Curve {
    pub fn closed(family: Family, darts: Vec<Dart>) -> Curve {
        Curve {
            family,
            darts,
            closed: true,
        }
    }
    pub fn arc(family: Family, darts: Vec<Dart>) -> Curve {
        Curve {
            family,
            darts,
            closed: false,
        }
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.darts.iter().map(|d| d.edge()).collect()
    }

    /// Vertices passed through, in order.  For a closed curve the list has
    /// one entry per dart (tails); for an arc, tails plus the final head.
    pub fn vertices(&self, cx: &Complex) -> Vec<Vertex> {
        let mut v: Vec<Vertex> = self.darts.iter().map(|d| cx.tail(*d)).collect();
        if !self.closed {
            v.push(cx.head(*self.darts.last().unwrap()));
        }
        v
    }

    /// Checks connectivity of the walk and embeddedness (no repeated edge,
    /// no repeated interior vertex).
    pub fn check_embedded(&self, cx: &Complex) -> Result<(), StructureError> {
        if self.darts.is_empty() {
            return Err(StructureError::MalformedMap(format!(
                "curve {} has no darts",
                self.family.label()
            )));
        }
        let n = self.darts.len();
        let upper = if self.closed { n } else { n - 1 };
        for i in 0..upper {
            if cx.head(self.darts[i]) != cx.tail(self.darts[(i + 1) % n]) {
                return Err(StructureError::MalformedMap(format!(
                    "curve {} breaks at step {}",
                    self.family.label(),
                    i
                )));
            }
        }
        let mut edges = self.edges();
        edges.sort_unstable();
        let before = edges.len();
        edges.dedup();
        if edges.len() != before {
            return Err(StructureError::NotEmbedded(format!(
                "curve {} repeats an edge",
                self.family.label()
            )));
        }
        let mut verts = self.vertices(cx);
        verts.sort_unstable();
        let before = verts.len();
        verts.dedup();
        if verts.len() != before {
            return Err(StructureError::NotEmbedded(format!(
                "curve {} repeats a vertex",
                self.family.label()
            )));
        }
        Ok(())
    }
}

/// One transverse intersection point of two curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub vertex: Vertex,
    /// +1 if the frame (tangent of the first curve, tangent of the second)
    /// agrees with the surface orientation at the vertex.
    pub sign: i64,
    /// Index into the first curve's darts of its outgoing dart at the vertex.
    pub a_pos: usize,
    /// Same for the second curve.
    pub b_pos: usize,
}

/// The two darts of a curve at one of its interior passage vertices, both
/// pointing out of the vertex: (outgoing dart, reverse of incoming dart).
fn passages(cx: &Complex, curve: &Curve) -> BTreeMap<Vertex, (Dart, Dart, usize)> {
    let n = curve.darts.len();
    let mut m = BTreeMap::new();
    let start = if curve.closed { 0 } else { 1 };
    for i in start..n {
        let out = curve.darts[i];
        let inc = curve.darts[(i + n - 1) % n];
        m.insert(cx.tail(out), (out, inc.rev(), i));
    }
    m
}

/// Transverse intersections of two distinct curves within a role set.
/// Errors with `NonTransverse` if they share an edge, or share a vertex
/// without crossing cleanly (including endpoint touches).
pub fn transverse_crossings(
    cx: &Complex,
    slots: &SlotMap,
    a: &Curve,
    b: &Curve,
) -> Result<Vec<Crossing>, StructureError> {
    let mut ae = a.edges();
    ae.sort_unstable();
    for d in &b.darts {
        if ae.binary_search(&d.edge()).is_ok() {
            return Err(StructureError::NonTransverse(format!(
                "curves {} and {} share edge {}",
                a.family.label(),
                b.family.label(),
                d.edge()
            )));
        }
    }
    let pa = passages(cx, a);
    let pb = passages(cx, b);
    // Endpoint vertices of arcs must not lie on the other curve at all.
    for (name, arc, other) in [(&a.family, a, &pb), (&b.family, b, &pa)] {
        if !arc.closed {
            let ends = [
                cx.tail(arc.darts[0]),
                cx.head(*arc.darts.last().unwrap()),
            ];
            for v in ends {
                if other.contains_key(&v) {
                    return Err(StructureError::NonTransverse(format!(
                        "endpoint of {} touches the other curve at vertex {}",
                        name.label(),
                        v
                    )));
                }
            }
        }
    }
    let by_v = cx.out_darts_by_vertex(slots);
    let mut out = Vec::new();
    for (&v, &(a_out, a_in, a_pos)) in &pa {
        let Some(&(b_out, b_in, b_pos)) = pb.get(&v) else {
            continue;
        };
        let (fan, closed_fan) = cx.vertex_fan(slots, &by_v[v], v)?;
        if !closed_fan {
            return Err(StructureError::NonTransverse(format!(
                "curves meet on the boundary at vertex {}",
                v
            )));
        }
        let pos = |d: Dart| -> Result<usize, StructureError> {
            fan.iter().position(|&x| x == d).ok_or_else(|| {
                StructureError::MalformedMap(format!("dart {:?} missing from fan at {}", d, v))
            })
        };
        // Cyclic positions relative to a_out.
        let n = fan.len();
        let base = pos(a_out)?;
        let rel = |d: Dart| -> Result<usize, StructureError> { Ok((pos(d)? + n - base) % n) };
        let (ra_in, rb_out, rb_in) = (rel(a_in)?, rel(b_out)?, rel(b_in)?);
        let b_separated = (rb_out < ra_in) != (rb_in < ra_in);
        if !b_separated || ra_in == 0 {
            return Err(StructureError::NonTransverse(format!(
                "curves {} and {} touch without crossing at vertex {}",
                a.family.label(),
                b.family.label(),
                v
            )));
        }
        // Rotation order a_out, b_out, a_in, b_in is one sign; the other
        // interleaving is the opposite sign.
        let sign = if rb_out < ra_in { 1 } else { -1 };
        out.push(Crossing {
            vertex: v,
            sign,
            a_pos,
            b_pos,
        });
    }
    Ok(out)
}

/// Geometric intersection count ignoring signs.
pub fn crossing_count(
    cx: &Complex,
    slots: &SlotMap,
    a: &Curve,
    b: &Curve,
) -> Result<usize, StructureError> {
    Ok(transverse_crossings(cx, slots, a, b)?.len())
}

/// Algebraic intersection number.
pub fn algebraic_intersection(
    cx: &Complex,
    slots: &SlotMap,
    a: &Curve,
    b: &Curve,
) -> Result<i64, StructureError> {
    Ok(transverse_crossings(cx, slots, a, b)?
        .iter()
        .map(|c| c.sign)
        .sum())
}

/// Duplicates the edges under the given darts: for each dart `d`, the face
/// using `rev(d)` within `roles` is rewritten to a fresh twin edge, so the
/// surface can be pulled apart along the curve.  Vertices are *not* rebuilt;
/// call `Complex::rebuild_vertices` when all surgery on walks is done.
/// Returns the twin edge for each dart, aligned with input order.
pub fn duplicate_along(
    cx: &mut Complex,
    roles: &[Role],
    darts: &[Dart],
) -> Result<Vec<Edge>, StructureError> {
    let slots = cx.slot_map(roles)?;
    let mut plan = Vec::new();
    for &d in darts {
        let r = d.rev();
        let slot = slots.get(r).ok_or_else(|| {
            StructureError::InvalidTarget(format!(
                "dart {:?} has no face on its right within the surface",
                d
            ))
        })?;
        if slots.get(d).is_none() {
            return Err(StructureError::InvalidTarget(format!(
                "dart {:?} has no face on its left within the surface",
                d
            )));
        }
        plan.push((d, slot));
    }
    let mut twins = Vec::new();
    for (d, slot) in plan {
        let (t, h) = cx.edges[d.edge()];
        let twin = cx.add_edge(t, h);
        let twin_dart = Dart::with_dir(twin, !d.is_forward());
        cx.faces[slot.face].walk[slot.pos] = twin_dart;
        twins.push(twin);
    }
    Ok(twins)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::*;

    #[test]
    fn meridian_longitude_cross_once() {
        let cx = grid_torus(6);
        let slots = cx.slot_map(&[Role::S(0)]).unwrap();
        let m = Curve::closed(Family::Delta(0), gt_meridian(6, 1));
        let l = Curve::closed(Family::Delta(1), gt_longitude(6, 4));
        m.check_embedded(&cx).unwrap();
        l.check_embedded(&cx).unwrap();
        let xs = transverse_crossings(&cx, &slots, &m, &l).unwrap();
        assert_eq!(xs.len(), 1);
        assert_eq!(xs[0].vertex, gt_vertex(6, 4, 1));
        // Swapping the curves flips the sign.
        let ys = transverse_crossings(&cx, &slots, &l, &m).unwrap();
        assert_eq!(ys[0].sign, -xs[0].sign);
    }

    #[test]
    fn diagonal_crosses_each_once() {
        let cx = grid_torus(6);
        let slots = cx.slot_map(&[Role::S(0)]).unwrap();
        let m = Curve::closed(Family::Delta(0), gt_meridian(6, 1));
        let l = Curve::closed(Family::Delta(1), gt_longitude(6, 4));
        let d = Curve::closed(Family::Delta(2), gt6_diagonal());
        d.check_embedded(&cx).unwrap();
        assert_eq!(crossing_count(&cx, &slots, &d, &m).unwrap(), 1);
        assert_eq!(crossing_count(&cx, &slots, &d, &l).unwrap(), 1);
    }

    #[test]
    fn parallel_meridians_disjoint() {
        let cx = grid_torus(6);
        let slots = cx.slot_map(&[Role::S(0)]).unwrap();
        let m1 = Curve::closed(Family::Delta(0), gt_meridian(6, 1));
        let m2 = Curve::closed(Family::Delta(1), gt_meridian(6, 3));
        assert_eq!(crossing_count(&cx, &slots, &m1, &m2).unwrap(), 0);
    }

    #[test]
    fn shared_edge_is_nontransverse() {
        let cx = grid_torus(6);
        let slots = cx.slot_map(&[Role::S(0)]).unwrap();
        let m1 = Curve::closed(Family::Delta(0), gt_meridian(6, 1));
        let m2 = Curve::closed(Family::Delta(1), gt_meridian(6, 1));
        assert!(matches!(
            transverse_crossings(&cx, &slots, &m1, &m2),
            Err(StructureError::NonTransverse(_))
        ));
    }

    #[test]
    fn cut_torus_along_meridian_gives_annulus() {
        let mut cx = grid_torus(6);
        let m = gt_meridian(6, 1);
        duplicate_along(&mut cx, &[Role::S(0)], &m).unwrap();
        cx.rebuild_vertices();
        let s = cx.surface_shape(&[Role::S(0)]).unwrap();
        assert_eq!((s.components, s.total_genus, s.boundary_count), (1, 0, 2));
        assert_eq!(s.euler, 0);
    }

    #[test]
    fn cut_torus_along_two_curves() {
        // Meridian and longitude cross, so cut along two parallel meridians
        // instead: the torus falls into two annuli.
        let mut cx = grid_torus(6);
        let mut darts = gt_meridian(6, 1);
        darts.extend(gt_meridian(6, 3));
        duplicate_along(&mut cx, &[Role::S(0)], &darts).unwrap();
        cx.rebuild_vertices();
        let s = cx.surface_shape(&[Role::S(0)]).unwrap();
        assert_eq!((s.components, s.total_genus, s.boundary_count), (2, 0, 4));
    }
}
