//! Moves on three-sector diagrams: band stabilization, Heegaard
//! stabilization, and connected sum.  Handleslides live in [`crate::slide3`].
//!
//! All moves are pure: they take a diagram and return a new one; validity of
//! the input is assumed (run `validate` first) and the output is a diagram
//! that again passes validation, with the documented index deltas.

use std::collections::BTreeSet;

use crate::cell::{ring_glue, shift_dart, Complex, Dart, Edge, Role, Vertex};
use crate::curve::{duplicate_along, Curve, Family};
use crate::diagram::{BindingCircle, Diagram};
use crate::models;
use crate::report::StructureError;
use crate::triheeg::TripleHeegaard;

/// All vertices touched by any curve of the diagram.
pub(crate) fn curve_vertices(diag: &Diagram) -> BTreeSet<Vertex> {
    let mut s = BTreeSet::new();
    for c in &diag.curves {
        s.extend(c.vertices(&diag.cx));
    }
    s
}

/// Number of connected components of the faces of one role, joined when two
/// faces share an edge.
pub(crate) fn face_components(cx: &Complex, role: Role) -> usize {
    let ids: Vec<usize> = (0..cx.faces.len())
        .filter(|&f| cx.faces[f].role == role)
        .collect();
    let mut parent: Vec<usize> = (0..ids.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    let mut by_edge: std::collections::BTreeMap<Edge, Vec<usize>> = Default::default();
    for (k, &f) in ids.iter().enumerate() {
        for dt in &cx.faces[f].walk {
            by_edge.entry(dt.edge()).or_default().push(k);
        }
    }
    for users in by_edge.values() {
        for w in users.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a] = b;
        }
    }
    (0..ids.len())
        .filter(|&k| find(&mut parent, k) == k)
        .count()
}

/// Fresh binding labels not colliding with `taken`.
fn fresh_label(taken: &BTreeSet<String>, n: &mut usize) -> String {
    loop {
        *n += 1;
        let cand = format!("B{}", n);
        if !taken.contains(&cand) {
            return cand;
        }
    }
}

/// Re-derives the binding circle list after surgery on Σ_i: circles made of
/// untouched edges keep their old label and reference; new circles are
/// traced from Σ_i and oriented so that Σ_i's flip keeps its previous value.
pub(crate) fn rebuild_binding(
    diag: &mut Diagram,
    trace_role: Role,
    old_flip: i64,
) -> Result<(), StructureError> {
    let slots = diag.cx.slot_map(&[trace_role])?;
    let circles = diag.cx.boundary_circles(&slots)?;
    let old = std::mem::take(&mut diag.binding);
    let taken: BTreeSet<String> = old.iter().map(|b| b.label.clone()).collect();
    let mut counter = 0usize;
    let mut fresh = Vec::new();
    for traced in circles {
        let edge_set: BTreeSet<Edge> = traced.iter().map(|d| d.edge()).collect();
        if let Some(keep) = old.iter().find(|b| {
            let s: BTreeSet<Edge> = b.darts.iter().map(|d| d.edge()).collect();
            s == edge_set
        }) {
            fresh.push(keep.clone());
        } else {
            let darts = if old_flip == -1 {
                traced
            } else {
                crate::diagram::reversed_circle(&traced)
            };
            fresh.push(BindingCircle {
                label: fresh_label(&taken, &mut counter),
                darts,
            });
        }
    }
    diag.binding = fresh;
    Ok(())
}

/// Candidate guide arcs for [`stabilize_3`] in Σ_i: simple paths between
/// binding vertices whose interior runs through curve-free interior edges.
/// One shortest arc per ordered endpoint pair is returned; callers filter by
/// applying the move (which rejects separating arcs).
pub fn band_arcs(d: &TripleHeegaard, i: u8) -> Vec<Vec<Dart>> {
    let si = Role::S(i % 3);
    let diag = &d.diag;
    let slots = match diag.cx.slot_map(&[si]) {
        Ok(s) => s,
        Err(_) => return Vec::new(),
    };
    let bverts = diag.binding_vertices();
    let bedges = diag.binding_edges();
    let cv = curve_vertices(diag);
    let mut adj: std::collections::BTreeMap<Vertex, Vec<Dart>> = Default::default();
    for e in 0..diag.cx.edges.len() {
        let d0 = Dart::fwd(e);
        if bedges.contains(&e) || !slots.used(d0) || !slots.used(d0.rev()) {
            continue;
        }
        adj.entry(diag.cx.tail(d0)).or_default().push(d0);
        adj.entry(diag.cx.head(d0)).or_default().push(d0.rev());
    }
    let mut out = Vec::new();
    for &s in &bverts {
        if cv.contains(&s) {
            continue;
        }
        let mut prev: std::collections::BTreeMap<Vertex, Dart> = Default::default();
        let mut queue = std::collections::VecDeque::from([s]);
        let mut seen: BTreeSet<Vertex> = [s].into();
        let mut hits: Vec<Dart> = Vec::new();
        while let Some(v) = queue.pop_front() {
            for &dt in adj.get(&v).map(|x| x.as_slice()).unwrap_or(&[]) {
                let w = diag.cx.head(dt);
                if cv.contains(&w) || !seen.insert(w) {
                    continue;
                }
                if bverts.contains(&w) {
                    if w != s {
                        hits.push(dt);
                    }
                    continue;
                }
                prev.insert(w, dt);
                queue.push_back(w);
            }
        }
        for last in hits {
            let mut path = vec![last];
            let mut v = diag.cx.tail(last);
            while v != s {
                let dt = prev[&v];
                path.push(dt);
                v = diag.cx.tail(dt);
            }
            path.reverse();
            out.push(path);
        }
    }
    out
}

/// Validates a guide arc for band stabilization in surface `si`: a simple
/// path between two distinct binding vertices, interior to `si`, disjoint
/// from all curves, with `si` neither a disk nor disconnected by the cut.
/// Returns the endpoint vertices.
pub(crate) fn check_guide_arc(
    diag: &Diagram,
    si: Role,
    arc_in: &[Dart],
) -> Result<(Vertex, Vertex), StructureError> {
    if arc_in.is_empty() {
        return Err(StructureError::InvalidTarget("empty guide arc".into()));
    }
    // Arc must be a simple path with endpoints (only) on the binding.
    for w in arc_in.windows(2) {
        if diag.cx.head(w[0]) != diag.cx.tail(w[1]) {
            return Err(StructureError::InvalidTarget("guide arc is not a path".into()));
        }
    }
    let v0 = diag.cx.tail(arc_in[0]);
    let vk = diag.cx.head(*arc_in.last().unwrap());
    if v0 == vk {
        return Err(StructureError::InvalidTarget(
            "guide arc endpoints must be distinct binding vertices".into(),
        ));
    }
    let bverts = diag.binding_vertices();
    let bedges = diag.binding_edges();
    if !bverts.contains(&v0) || !bverts.contains(&vk) {
        return Err(StructureError::InvalidTarget(
            "guide arc endpoints must lie on the binding".into(),
        ));
    }
    let mut seen_v = BTreeSet::new();
    let mut seen_e = BTreeSet::new();
    for (t, &dt) in arc_in.iter().enumerate() {
        if bedges.contains(&dt.edge()) || !seen_e.insert(dt.edge()) {
            return Err(StructureError::InvalidTarget(
                "guide arc must run through distinct interior edges".into(),
            ));
        }
        if t > 0 {
            let v = diag.cx.tail(dt);
            if bverts.contains(&v) || !seen_v.insert(v) {
                return Err(StructureError::InvalidTarget(
                    "guide arc interior must avoid the binding and itself".into(),
                ));
            }
        }
    }
    let cv = curve_vertices(diag);
    let touches = arc_in.iter().any(|&dt| cv.contains(&diag.cx.tail(dt)))
        || cv.contains(&vk)
        || cv.contains(&v0);
    if touches {
        return Err(StructureError::InvalidTarget(
            "guide arc must be disjoint from all curves".into(),
        ));
    }
    {
        let slots = diag.cx.slot_map(&[si])?;
        for &dt in arc_in {
            if !slots.used(dt) || !slots.used(dt.rev()) {
                return Err(StructureError::InvalidTarget(
                    "guide arc must be interior to the sector surface".into(),
                ));
            }
        }
    }
    let shape = diag.cx.surface_shape(&[si])?;
    if shape.components == 1 && shape.total_genus == 0 && shape.boundary_count == 1 {
        return Err(StructureError::DiskSector(format!(
            "surface {} is a disk",
            si.label()
        )));
    }
    // Non-separating check on a scratch copy.  The raw cut pinches the
    // endpoint vertices, so count components by face adjacency over shared
    // edges instead of tracing vertex fans.
    {
        let mut probe = diag.cx.clone();
        duplicate_along(&mut probe, &[si], arc_in)?;
        if face_components(&probe, si) != 1 {
            return Err(StructureError::SeparatingArc(
                "cutting along the guide arc disconnects the surface".into(),
            ));
        }
    }
    Ok((v0, vk))
}

/// Band stabilization along a neat non-separating arc in Σ_i (0-based `i`).
///
/// The arc is thickened to a band which is removed from Σ_i and attached to
/// both Σ_{i+1} and Σ_{i+2}; a new meridian curve joins δ_{i+1}.  The arc
/// must be disjoint from all curves.  Indices change by Δy = e_{i+1} and
/// Δb = +1 if the endpoints lie on the same binding circle, −1 otherwise;
/// the realization homology is unchanged.
pub fn stabilize_3(
    d: &TripleHeegaard,
    i: u8,
    arc_in: &[Dart],
) -> Result<TripleHeegaard, StructureError> {
    let i = i % 3;
    let (si, sj, sk) = (Role::S(i), Role::S((i + 1) % 3), Role::S((i + 2) % 3));
    let mut diag = d.diag.clone();
    let (v0, vk) = check_guide_arc(&diag, si, arc_in)?;
    let flips = [
        diag.surface_flip(Role::S(0))?,
        diag.surface_flip(Role::S(1))?,
        diag.surface_flip(Role::S(2))?,
    ];
    // Length-1 arcs: subdivide so the band can host its meridian rung.
    let mut arc: Vec<Dart> = arc_in.to_vec();
    if arc.len() == 1 {
        let d0 = arc[0];
        let (_, e2) = diag.cx.subdivide_edge(d0.edge());
        arc = if d0.is_forward() {
            vec![d0, Dart::fwd(e2)]
        } else {
            vec![Dart::bwd(e2), d0]
        };
    }
    // Cut Σ_i along the arc.  The slit is then bridged by one band per
    // other surface, each split by a rung so the new meridian has edges to
    // follow, and attached to that surface by two "foot" arcs inserted into
    // face corners at the old endpoints.
    let twins = duplicate_along(&mut diag.cx, &[si], &arc)?;
    let copy_b: Vec<Dart> = twins
        .iter()
        .zip(&arc)
        .map(|(&e, &dt)| Dart::with_dir(e, dt.is_forward()))
        .collect();
    // Corner slots at the endpoints in the two other surfaces (their walks
    // are untouched by the cut, so the pre-surgery vertex table is valid).
    let mut corners = [[(0usize, 0usize); 2]; 2];
    for (side, role) in [(0usize, sj), (1, sk)] {
        for (eix, v) in [(0usize, v0), (1, vk)] {
            let slots = diag.cx.slot_map(&[role])?;
            let out = diag.cx.out_darts_by_vertex(&slots);
            let (fan, closed) = diag.cx.vertex_fan(&slots, &out[v], v)?;
            if closed || fan.len() < 2 {
                return Err(StructureError::InvalidTarget(format!(
                    "no usable corner at vertex {} in {}",
                    v,
                    role.label()
                )));
            }
            let s = slots
                .get(fan[0].rev())
                .ok_or_else(|| StructureError::MalformedMap("fan dart lost its face".into()))?;
            corners[side][eix] = (s.face, s.pos);
        }
    }
    let feet: [[Edge; 2]; 2] = [
        [diag.cx.add_edge(v0, v0), diag.cx.add_edge(vk, vk)],
        [diag.cx.add_edge(v0, v0), diag.cx.add_edge(vk, vk)],
    ];
    let a1 = diag.cx.head(arc[0]);
    let rungs = [diag.cx.add_edge(a1, a1), diag.cx.add_edge(a1, a1)];
    // A band's walk direction is forced by the flip bookkeeping: the cut
    // surface and the band expose the slit copies in the same direction, so
    // the band runs with the arc exactly when the two surfaces' flips agree.
    let rev_band = [
        flips[((i + 1) % 3) as usize] != flips[i as usize],
        flips[((i + 2) % 3) as usize] != flips[i as usize],
    ];
    // Which end of each foot attaches to which side of the slit is a local
    // binary choice; only one assignment per foot splits the endpoint
    // vertices into two manifold fans.  Search the 16 combinations.
    let base = diag.cx.clone();
    let mut found: Option<Diagram> = None;
    'combos: for combo in 0..16u32 {
        let toggles = [
            [combo & 1 != 0, combo & 2 != 0],
            [combo & 4 != 0, combo & 8 != 0],
        ];
        let mut cx = base.clone();
        for (side, role) in [(0usize, sj), (1, sk)] {
            // Insert the foot darts, deeper walk positions first so the
            // recorded corner slots stay valid.
            let mut ins: Vec<(usize, usize, Dart)> = (0..2)
                .map(|eix| {
                    let (f, p) = corners[side][eix];
                    (f, p + 1, Dart::with_dir(feet[side][eix], toggles[side][eix]))
                })
                .collect();
            ins.sort_by(|a, b| (b.0, b.1).cmp(&(a.0, a.1)));
            for (f, p, dart) in ins {
                cx.faces[f].walk.insert(p, dart);
            }
            // Band quads; the band uses each foot opposite to its corner
            // insertion, also after the optional reversal below.
            let foot_dir = |eix: usize| toggles[side][eix] == rev_band[side];
            let quad1 = vec![
                arc[0],
                Dart::fwd(rungs[side]),
                copy_b[0].rev(),
                Dart::with_dir(feet[side][0], foot_dir(0)),
            ];
            let mut quad2: Vec<Dart> = arc[1..].to_vec();
            quad2.push(Dart::with_dir(feet[side][1], foot_dir(1)));
            quad2.extend(copy_b[1..].iter().rev().map(|d| d.rev()));
            quad2.push(Dart::bwd(rungs[side]));
            for mut walk in [quad1, quad2] {
                if rev_band[side] {
                    walk.reverse();
                    for dt in walk.iter_mut() {
                        *dt = dt.rev();
                    }
                }
                cx.add_face(role, walk);
            }
        }
        cx.rebuild_vertices();
        let mut cand = Diagram {
            cx,
            binding: diag.binding.clone(),
            curves: diag.curves.clone(),
        };
        if rebuild_binding(&mut cand, si, flips[i as usize]).is_err() {
            continue;
        }
        for r in 0..3u8 {
            if cand.surface_flip(Role::S(r)).is_err() {
                continue 'combos;
            }
        }
        found = Some(cand);
        break;
    }
    let mut diag = found.ok_or_else(|| {
        StructureError::MalformedMap("no consistent band attachment found".into())
    })?;
    diag.curves.push(Curve::closed(
        Family::Delta((i + 1) % 3),
        vec![Dart::fwd(rungs[0]), Dart::bwd(rungs[1])],
    ));
    Ok(TripleHeegaard { diag })
}

/// Heegaard stabilization: adds a genus-1 handle to Σ_i over the given face
/// (0-based `i`), with the handle's meridian joining δ_i and its longitude
/// joining δ_{i−1}, intersecting once.  Indices: y_i and y_{i−1} grow by 1,
/// b is unchanged, complexity grows by 2; homology is unchanged.
pub fn heegaard_stabilize_3(
    d: &TripleHeegaard,
    i: u8,
    site: usize,
) -> Result<TripleHeegaard, StructureError> {
    let i = i % 3;
    let mut diag = d.diag.clone();
    if site >= diag.cx.faces.len() {
        return Err(StructureError::InvalidSite(format!("no face {}", site)));
    }
    if diag.cx.faces[site].role != Role::S(i) {
        return Err(StructureError::InvalidSite(format!(
            "face {} lies in {}, not {}",
            site,
            diag.cx.faces[site].role.label(),
            Role::S(i).label()
        )));
    }
    let hole = diag.cx.faces[site].walk.clone();
    let cv = curve_vertices(&diag);
    for &dt in &hole {
        if cv.contains(&diag.cx.tail(dt)) {
            return Err(StructureError::InvalidSite(
                "site face must avoid all curves".into(),
            ));
        }
    }
    diag.cx.faces.remove(site);
    // Splice in a punctured small torus and zip the two holes together.
    let mut model = models::grid_torus_role(3, Role::S(i));
    let model_site = models::gt_face(3, 0, 2);
    let model_hole = model.faces[model_site].walk.clone();
    models::puncture(&mut model, model_site);
    let (_, eo, _) = diag.cx.append(&model);
    let model_hole: Vec<Dart> = model_hole.iter().map(|&d| shift_dart(d, eo)).collect();
    ring_glue(&mut diag.cx, Role::S(i), &hole, &model_hole);
    let eta: Vec<Dart> = models::gt_meridian(3, 1)
        .iter()
        .map(|&d| shift_dart(d, eo))
        .collect();
    let gamma: Vec<Dart> = models::gt_longitude(3, 2)
        .iter()
        .map(|&d| shift_dart(d, eo))
        .collect();
    diag.curves.push(Curve::closed(Family::Delta(i), eta));
    diag.curves
        .push(Curve::closed(Family::Delta((i + 2) % 3), gamma));
    Ok(TripleHeegaard { diag })
}

/// Connected sum of two diagrams at binding circles `q1`, `q2`, with the
/// sectors of the second diagram rotated by `rotation` (0, 1 or 2).
/// Indices add, with b = b₁ + b₂ − 1; H₁ of the realization is the direct
/// sum.
pub fn connected_sum_3(
    d1: &TripleHeegaard,
    d2: &TripleHeegaard,
    q1: &str,
    q2: &str,
    rotation: u8,
) -> Result<TripleHeegaard, StructureError> {
    let mut diag = d1.diag.clone();
    let mut other = d2.diag.clone();
    let rotation = rotation % 3;
    for f in other.cx.faces.iter_mut() {
        if let Role::S(j) = f.role {
            f.role = Role::S((j + rotation) % 3);
        }
    }
    for c in other.curves.iter_mut() {
        if let Family::Delta(j) = c.family {
            c.family = Family::Delta((j + rotation) % 3);
        }
    }
    splice_sum(
        &mut diag,
        other,
        &[Role::S(0), Role::S(1), Role::S(2)],
        q1,
        q2,
    )?;
    Ok(TripleHeegaard { diag })
}

/// Shared core of the connected-sum moves: appends `other` to `diag`,
/// splices the binding circles `q1` (of `diag`) and `q2` (of `other`) into
/// one, and glues each role's surface across the junction along a fresh
/// interior arc.  `other` must already carry the same role/family indexing
/// as `diag`.
pub(crate) fn splice_sum(
    diag: &mut Diagram,
    mut other: Diagram,
    roles: &[Role],
    q1: &str,
    q2: &str,
) -> Result<(), StructureError> {
    // Align stored surface orientations so one junction arc per surface
    // suffices.
    for &r in roles {
        let want = diag.surface_flip(r)?;
        if other.surface_flip(r)? != want {
            for f in other.cx.faces.iter_mut() {
                if f.role == r {
                    f.walk.reverse();
                    for dt in f.walk.iter_mut() {
                        *dt = dt.rev();
                    }
                }
            }
        }
    }
    let c1 = diag
        .binding
        .iter()
        .position(|b| b.label == q1)
        .ok_or_else(|| StructureError::DanglingReference(format!("no binding circle {}", q1)))?;
    let c2 = other
        .binding
        .iter()
        .position(|b| b.label == q2)
        .ok_or_else(|| StructureError::DanglingReference(format!("no binding circle {}", q2)))?;
    let (_, eo, _) = diag.cx.append(&other.cx);
    for c in &other.curves {
        let mut c = c.clone();
        c.darts = c.darts.iter().map(|&dt| shift_dart(dt, eo)).collect();
        diag.curves.push(c);
    }
    let mut taken: BTreeSet<String> = diag.binding.iter().map(|b| b.label.clone()).collect();
    let mut ref2: Option<Vec<Dart>> = None;
    for (n, b) in other.binding.iter().enumerate() {
        let darts: Vec<Dart> = b.darts.iter().map(|&dt| shift_dart(dt, eo)).collect();
        if n == c2 {
            ref2 = Some(darts);
            continue;
        }
        let mut label = b.label.clone();
        while !taken.insert(label.clone()) {
            label.push('\'');
        }
        diag.binding.push(BindingCircle { label, darts });
    }
    let ref2 = ref2.unwrap();
    let ref1 = diag.binding[c1].darts.clone();
    let label1 = diag.binding[c1].label.clone();
    diag.binding.remove(c1);
    // Pick splice darts whose endpoints no curve touches.
    let cv = curve_vertices(&diag);
    let pick = |r: &[Dart], cx: &Complex| -> Option<usize> {
        (0..r.len()).find(|&t| {
            cx.tail(r[t]) != cx.head(r[t])
                && !cv.contains(&cx.tail(r[t]))
                && !cv.contains(&cx.head(r[t]))
        })
    };
    let p1 = pick(&ref1, &diag.cx).ok_or_else(|| {
        StructureError::InvalidTarget("no curve-free edge on the first binding circle".into())
    })?;
    let p2 = pick(&ref2, &diag.cx).ok_or_else(|| {
        StructureError::InvalidTarget("no curve-free edge on the second binding circle".into())
    })?;
    if ref1.len() < 2 || ref2.len() < 2 {
        return Err(StructureError::InvalidTarget(
            "binding circles must have at least two edges to splice".into(),
        ));
    }
    let (x1, x2) = (ref1[p1], ref2[p2]);
    let (t1, h1) = (diag.cx.tail(x1), diag.cx.head(x1));
    // Splice out one edge of each circle and sew the two circle remainders
    // together at the freed endpoints.  Each sector surface is glued across
    // the junction along its own fresh interior arc, replacing the spliced
    // edges in its face walks; the old edges become unused.
    for &r in roles {
        let er = diag.cx.add_edge(t1, h1);
        let slots = diag.cx.slot_map(&[r])?;
        for (x, flip_self) in [(x1, true), (x2, false)] {
            let used = if slots.used(x) { x } else { x.rev() };
            let s = slots.get(used).ok_or_else(|| {
                StructureError::MalformedMap("spliced edge lost its face".into())
            })?;
            // The second surface attaches with the opposite sense, so that
            // the new arc is two-sided within the sector.
            let same = (used == x) == flip_self;
            diag.cx.faces[s.face].walk[s.pos] = Dart::with_dir(er, same);
        }
    }
    diag.cx.rebuild_vertices();
    let mut spliced = Vec::new();
    for t in 1..ref1.len() {
        spliced.push(ref1[(p1 + t) % ref1.len()]);
    }
    for t in 1..ref2.len() {
        spliced.push(ref2[(p2 + t) % ref2.len()]);
    }
    diag.binding.push(BindingCircle {
        label: label1,
        darts: spliced,
    });
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn homologies(d: &TripleHeegaard) -> Vec<String> {
        d.realize_homology()
            .unwrap()
            .iter()
            .map(|g| g.to_string())
            .collect()
    }

    /// A curve-free interior arc between two binding vertices of Σ_i in the
    /// S¹×S² diagram: run along the hole circle's adjacent torus edges.
    #[test]
    fn stabilize_s1s2() {
        let d = zoo::s1s2_heegaard();
        let before = homologies(&d);
        let ix0 = d.indices().unwrap();
        // Guide arc in Σ₂ (role S(1)): the column-4 path from hole corner
        // (3,4) the long way round to hole corner (2,4).  It winds once
        // around the torus, so it does not separate, and column 4 avoids
        // both meridian curves (columns 1 and 3) and the hole edges.
        let arc = vec![
            Dart::fwd(models::gt_v(6, 3, 4)),
            Dart::fwd(models::gt_v(6, 4, 4)),
            Dart::fwd(models::gt_v(6, 5, 4)),
            Dart::fwd(models::gt_v(6, 0, 4)),
            Dart::fwd(models::gt_v(6, 1, 4)),
        ];
        let s = stabilize_3(&d, 1, &arc).unwrap();
        let rep = s.validate();
        assert!(rep.pass(), "{:?}", rep.failures);
        let ix = s.indices().unwrap();
        assert_eq!(ix.y, [ix0.y[0], ix0.y[1], ix0.y[2] + 1]);
        assert_eq!(s.complexity().unwrap(), d.complexity().unwrap() + 1);
        assert_eq!(homologies(&s), before);
    }

    #[test]
    fn stabilize_across_circles_drops_b() {
        // First stabilization raises b to 2; a second one along an arc
        // joining the two binding circles brings it back down to 1.
        let d = zoo::s1s2_heegaard();
        let arc = vec![
            Dart::fwd(models::gt_v(6, 3, 4)),
            Dart::fwd(models::gt_v(6, 4, 4)),
            Dart::fwd(models::gt_v(6, 5, 4)),
            Dart::fwd(models::gt_v(6, 0, 4)),
            Dart::fwd(models::gt_v(6, 1, 4)),
        ];
        let s1 = stabilize_3(&d, 1, &arc).unwrap();
        assert_eq!(s1.indices().unwrap().b, 2);
        let circle_of = |t: &TripleHeegaard, v: crate::cell::Vertex| -> usize {
            t.diag
                .binding
                .iter()
                .position(|b| b.darts.iter().any(|&dt| t.diag.cx.tail(dt) == v))
                .unwrap()
        };
        let mut done = None;
        for i in 0..3u8 {
            for arc in band_arcs(&s1, i) {
                let v0 = s1.diag.cx.tail(arc[0]);
                let vk = s1.diag.cx.head(*arc.last().unwrap());
                if circle_of(&s1, v0) == circle_of(&s1, vk) {
                    continue;
                }
                if let Ok(s2) = stabilize_3(&s1, i, &arc) {
                    done = Some((i, s2));
                    break;
                }
            }
            if done.is_some() {
                break;
            }
        }
        let (i, s2) = done.expect("some cross-circle arc should stabilize");
        let rep = s2.validate();
        assert!(rep.pass(), "{:?}", rep.failures);
        let (ix1, ix2) = (s1.indices().unwrap(), s2.indices().unwrap());
        assert_eq!(ix2.b, 1);
        let mut want = ix1.y;
        want[((i + 1) % 3) as usize] += 1;
        assert_eq!(ix2.y, want);
        assert_eq!(homologies(&s2), homologies(&s1));
    }

    #[test]
    fn stabilize_rejects_bad_arcs() {
        let d = zoo::s1s2_heegaard();
        // Arc not touching the binding.
        let arc = vec![Dart::fwd(models::gt_h(6, 0, 0))];
        assert!(matches!(
            stabilize_3(&d, 1, &arc),
            Err(StructureError::InvalidTarget(_))
        ));
        // Disk sector.
        let d2 = zoo::trivial_s3();
        let arc = vec![Dart::fwd(0)];
        assert!(!matches!(stabilize_3(&d2, 0, &arc), Ok(_)));
    }

    #[test]
    fn heegaard_stabilize_trivial() {
        let d = zoo::trivial_s3();
        let s = heegaard_stabilize_3(&d, 0, 0).unwrap();
        let rep = s.validate();
        assert!(rep.pass(), "{:?}", rep.failures);
        let ix = s.indices().unwrap();
        assert_eq!(ix.y, [1, 0, 1]);
        assert_eq!(ix.b, 1);
        assert_eq!(s.complexity().unwrap(), 2);
        let h = s.realize_homology().unwrap();
        assert!(h[1].is_trivial() && h[2].is_trivial());
    }

    #[test]
    fn connected_sum_two_s1s2() {
        let a = zoo::s1s2_heegaard();
        let b = zoo::s1s2_heegaard();
        for rot in 0..3u8 {
            let s = connected_sum_3(&a, &b, "B1", "B1", rot).unwrap();
            let rep = s.validate();
            assert!(rep.pass(), "rot {}: {:?}", rot, rep.failures);
            let ix = s.indices().unwrap();
            assert_eq!(ix.b, 1);
            assert_eq!(ix.y.iter().sum::<usize>(), 4);
            let h = s.realize_homology().unwrap();
            assert!(h[1].is_free_of_rank(2), "rot {}: H₁ = {}", rot, h[1]);
        }
    }

    #[test]
    fn connected_sum_trivial_is_identity_on_indices() {
        let a = zoo::trivial_s3();
        let s = connected_sum_3(&a, &a, "B1", "B1", 0).unwrap();
        assert!(s.validate().pass());
        let ix = s.indices().unwrap();
        assert_eq!((ix.y, ix.b), ([0, 0, 0], 1));
        let h = s.realize_homology().unwrap();
        assert!(h[1].is_trivial());
    }
}
