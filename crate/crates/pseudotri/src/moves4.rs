//! Moves on four-sector diagrams: torus stabilization (types I and II),
//! band stabilization, the boundary-stabilization shift, and boundary
//! connected sum.  Handleslides delegate to [`crate::slide3`] on the glued
//! pairs; the three-sector analogues live in [`crate::moves3`].

use serde::{Deserialize, Serialize};

use crate::cell::{ring_glue, shift_dart, Dart, Edge, Role};
use crate::curve::{duplicate_along, Curve, Family};
use crate::diagram::Diagram;
use crate::models;
use crate::moves3::{check_guide_arc, curve_vertices, rebuild_binding, splice_sum};
use crate::ptri::PseudoTrisection;
use crate::report::StructureError;

/// The two kinds of torus stabilization: type I enlarges a sector surface
/// Σ_j, type II enlarges the central surface Σ_C.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TorusKind {
    I,
    II,
}

/// Faces usable as torus-stabilization sites for the given kind and sector:
/// faces of the enlarged surface whose vertices no curve touches.
pub fn torus_sites(d: &PseudoTrisection, kind: TorusKind, j: u8) -> Vec<usize> {
    let role = match kind {
        TorusKind::I => Role::S(j % 3),
        TorusKind::II => Role::C,
    };
    let cv = curve_vertices(&d.diag);
    (0..d.diag.cx.faces.len())
        .filter(|&f| {
            d.diag.cx.faces[f].role == role
                && d.diag.cx.faces[f]
                    .walk
                    .iter()
                    .all(|&dt| !cv.contains(&d.diag.cx.tail(dt)))
        })
        .collect()
}

/// Torus stabilization over the given site face (0-based sector `j`).
///
/// A punctured small torus carrying two meridians μ₁, μ₂ and a longitude γ
/// is spliced into the site.  Type I enlarges Σ_j and adds μ₁ to α_j, μ₂ to
/// δ_{j−1}, γ to δ_j; type II enlarges Σ_C and adds γ to α_j, μ₁ to
/// α_{j+1}, μ₂ to α_{j−1}.  Complexity grows by 1, χ is unchanged, and
/// exactly one sector gains one S¹×S² summand: sector j−1 for type I,
/// sector j+1 for type II.
pub fn torus_stabilize(
    d: &PseudoTrisection,
    kind: TorusKind,
    j: u8,
    site: usize,
) -> Result<PseudoTrisection, StructureError> {
    let j = j % 3;
    let role = match kind {
        TorusKind::I => Role::S(j),
        TorusKind::II => Role::C,
    };
    let mut diag = d.diag.clone();
    if site >= diag.cx.faces.len() {
        return Err(StructureError::InvalidSite(format!("no face {}", site)));
    }
    if diag.cx.faces[site].role != role {
        return Err(StructureError::InvalidSite(format!(
            "face {} lies in {}, not {}",
            site,
            diag.cx.faces[site].role.label(),
            role.label()
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
    // A 4×4 grid torus has room for two disjoint meridians (columns 1 and
    // 2) and a longitude (row 2) away from the puncture at face (0,3).
    let mut model = models::grid_torus_role(4, role);
    let model_site = models::gt_face(4, 0, 3);
    let model_hole = model.faces[model_site].walk.clone();
    models::puncture(&mut model, model_site);
    let (_, eo, _) = diag.cx.append(&model);
    let model_hole: Vec<Dart> = model_hole.iter().map(|&dt| shift_dart(dt, eo)).collect();
    ring_glue(&mut diag.cx, role, &hole, &model_hole);
    let shift = |c: Vec<Dart>| -> Vec<Dart> { c.iter().map(|&dt| shift_dart(dt, eo)).collect() };
    let mu1 = shift(models::gt_meridian(4, 1));
    let mu2 = shift(models::gt_meridian(4, 2));
    let gamma = shift(models::gt_longitude(4, 2));
    match kind {
        TorusKind::I => {
            diag.curves.push(Curve::closed(Family::Alpha(j), mu1));
            diag.curves
                .push(Curve::closed(Family::Delta((j + 2) % 3), mu2));
            diag.curves.push(Curve::closed(Family::Delta(j), gamma));
        }
        TorusKind::II => {
            diag.curves.push(Curve::closed(Family::Alpha(j), gamma));
            diag.curves
                .push(Curve::closed(Family::Alpha((j + 1) % 3), mu1));
            diag.curves
                .push(Curve::closed(Family::Alpha((j + 2) % 3), mu2));
        }
    }
    Ok(PseudoTrisection { diag })
}

/// A verified handle on a band-stabilized configuration: the diagram it was
/// produced from, the cut sector, and the guide arc.  [`boundary_stab_shift`]
/// checks the pattern by replaying the (deterministic) move.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandSite {
    pub base: PseudoTrisection,
    pub i: u8,
    pub arc: Vec<Dart>,
}

/// Candidate guide arcs for [`band_stabilize`] in Σ_i: re-exported search
/// over curve-free interior paths between binding vertices.
pub fn band_arcs_4(d: &PseudoTrisection, i: u8) -> Vec<Vec<Dart>> {
    crate::moves3::band_arcs(&d.restrict_boundary(), i)
}

/// Band stabilization along a neat non-separating arc in Σ_i (0-based `i`).
///
/// The arc is thickened to a band which is removed from Σ_i and attached to
/// Σ_{i+1}, Σ_{i+2}, and Σ_C.  Three new curves are added — one each to
/// δ_{i+1}, α_{i+1}, α_{i+2} — every one made of two cocore arcs of the
/// attached bands.  The arc must be disjoint from all curves.  Complexity
/// grows by 1, χ is unchanged, b changes by ±1, and the boundary
/// restriction is the three-sector band stabilization along the same arc.
pub fn band_stabilize(
    d: &PseudoTrisection,
    i: u8,
    arc_in: &[Dart],
) -> Result<(PseudoTrisection, BandSite), StructureError> {
    let i = i % 3;
    let si = Role::S(i);
    let band_roles = [Role::S((i + 1) % 3), Role::S((i + 2) % 3), Role::C];
    let mut diag = d.diag.clone();
    let (v0, vk) = check_guide_arc(&diag, si, arc_in)?;
    let all_roles = [Role::C, Role::S(0), Role::S(1), Role::S(2)];
    let mut flips = std::collections::BTreeMap::new();
    for r in all_roles {
        flips.insert(r, diag.surface_flip(r)?);
    }
    // The three curve crossings need three distinct interior vertices, so
    // the slit must be at least four edges long.
    let mut arc: Vec<Dart> = arc_in.to_vec();
    while arc.len() < 4 {
        let d0 = arc[0];
        let (_, e2) = diag.cx.subdivide_edge(d0.edge());
        let head = if d0.is_forward() {
            vec![d0, Dart::fwd(e2)]
        } else {
            vec![Dart::bwd(e2), d0]
        };
        arc.splice(0..1, head);
    }
    // Cut Σ_i along the arc.  The slit is bridged by one band per other
    // surface; each band is split by two rungs (the cocores the new curves
    // follow) and attached to its surface by two "foot" arcs inserted into
    // face corners at the old endpoints.  Rung positions are staggered so
    // that each curve crossing gets its own slit vertex:
    //   Σ_{i+1}: rungs at 1 and 2;  Σ_{i+2}: at 1 and 3;  Σ_C: at 2 and 3.
    let twins = duplicate_along(&mut diag.cx, &[si], &arc)?;
    let copy_b: Vec<Dart> = twins
        .iter()
        .zip(&arc)
        .map(|(&e, &dt)| Dart::with_dir(e, dt.is_forward()))
        .collect();
    let mut corners = [[(0usize, 0usize); 2]; 3];
    for (side, &role) in band_roles.iter().enumerate() {
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
    let mut feet = [[0 as Edge; 2]; 3];
    for f in feet.iter_mut() {
        *f = [diag.cx.add_edge(v0, v0), diag.cx.add_edge(vk, vk)];
    }
    let positions = [[1usize, 2], [1, 3], [2, 3]];
    let mut rungs = [[0 as Edge; 2]; 3];
    for (side, r) in rungs.iter_mut().enumerate() {
        for (rix, e) in r.iter_mut().enumerate() {
            let a = diag.cx.head(arc[positions[side][rix] - 1]);
            *e = diag.cx.add_edge(a, a);
        }
    }
    // A band's walk direction is forced by the flip bookkeeping; which end
    // of each foot attaches to which side of the slit is a local binary
    // choice.  Search the 64 combinations of foot toggles.
    let rev_band: Vec<bool> = band_roles
        .iter()
        .map(|r| flips[r] != flips[&si])
        .collect();
    let base = diag.cx.clone();
    let mut found: Option<Diagram> = None;
    'combos: for combo in 0..64u32 {
        let toggles: Vec<[bool; 2]> = (0..3)
            .map(|s| [combo & (1 << (2 * s)) != 0, combo & (2 << (2 * s)) != 0])
            .collect();
        let mut cx = base.clone();
        for (side, &role) in band_roles.iter().enumerate() {
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
            let foot_dir = |eix: usize| toggles[side][eix] == rev_band[side];
            let (s, t) = (positions[side][0], positions[side][1]);
            // Three strips between the cuts at 0, s, t, end; each runs
            // along the slit, closes on the right by the next rung (or the
            // far foot), and returns along the copies.
            let strip = |lo: usize, hi: usize, right: Dart, left: Dart| -> Vec<Dart> {
                let mut w: Vec<Dart> = arc[lo..hi].to_vec();
                w.push(right);
                w.extend(copy_b[lo..hi].iter().rev().map(|dt| dt.rev()));
                w.push(left);
                w
            };
            let strips = [
                strip(
                    0,
                    s,
                    Dart::fwd(rungs[side][0]),
                    Dart::with_dir(feet[side][0], foot_dir(0)),
                ),
                strip(s, t, Dart::fwd(rungs[side][1]), Dart::bwd(rungs[side][0])),
                strip(
                    t,
                    arc.len(),
                    Dart::with_dir(feet[side][1], foot_dir(1)),
                    Dart::bwd(rungs[side][1]),
                ),
            ];
            for mut walk in strips {
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
        if rebuild_binding(&mut cand, si, flips[&si]).is_err() {
            continue;
        }
        for r in all_roles {
            if cand.surface_flip(r).is_err() {
                continue 'combos;
            }
        }
        found = Some(cand);
        break;
    }
    let mut diag = found.ok_or_else(|| {
        StructureError::MalformedMap("no consistent band attachment found".into())
    })?;
    // The cocore pairs: each new curve crosses the slit through the two
    // rungs sharing a vertex.
    diag.curves.push(Curve::closed(
        Family::Delta((i + 1) % 3),
        vec![Dart::fwd(rungs[0][0]), Dart::bwd(rungs[1][0])],
    ));
    diag.curves.push(Curve::closed(
        Family::Alpha((i + 1) % 3),
        vec![Dart::fwd(rungs[0][1]), Dart::bwd(rungs[2][0])],
    ));
    diag.curves.push(Curve::closed(
        Family::Alpha((i + 2) % 3),
        vec![Dart::fwd(rungs[1][1]), Dart::bwd(rungs[2][1])],
    ));
    let site = BandSite {
        base: d.clone(),
        i,
        arc: arc_in.to_vec(),
    };
    Ok((PseudoTrisection { diag }, site))
}

/// Boundary-stabilization shift: exchanges a stabilization of the boundary
/// for an internal stabilization.  The caller points at the stabilized
/// configuration via a [`BandSite`]; the pattern is verified by replaying
/// the band stabilization and comparing diagrams, and the result is the
/// internal (type II) stabilization of the unstabilized diagram in the
/// same sector.  Complexity is unchanged, boundary complexity drops by 1,
/// the sector ranks k are preserved, and the boundary restriction of the
/// result is the destabilization of the input's boundary.
pub fn boundary_stab_shift(
    d: &PseudoTrisection,
    site: &BandSite,
) -> Result<PseudoTrisection, StructureError> {
    let (replayed, _) = band_stabilize(&site.base, site.i, &site.arc).map_err(|e| {
        StructureError::PatternNotFound(format!(
            "site does not describe a band stabilization: {}",
            e
        ))
    })?;
    if replayed != *d {
        return Err(StructureError::PatternNotFound(
            "diagram does not match the stabilized configuration at the site".into(),
        ));
    }
    let spot = torus_sites(&site.base, TorusKind::II, site.i)
        .into_iter()
        .next()
        .ok_or_else(|| {
            StructureError::PatternNotFound(
                "no curve-free central face to host the internal stabilization".into(),
            )
        })?;
    torus_stabilize(&site.base, TorusKind::II, site.i, spot)
}

/// Boundary connected sum of two four-sector diagrams at binding circles
/// `q1`, `q2`, with the sectors of the second diagram rotated by `rotation`
/// (0, 1 or 2).  Indices g, k, p, y add, b = b₁ + b₂ − 1, and complexity
/// is additive: c = c₁ + c₂.
pub fn boundary_connect_sum_4(
    d1: &PseudoTrisection,
    d2: &PseudoTrisection,
    q1: &str,
    q2: &str,
    rotation: u8,
) -> Result<PseudoTrisection, StructureError> {
    let mut diag = d1.diag.clone();
    let mut other = d2.diag.clone();
    let rotation = rotation % 3;
    for f in other.cx.faces.iter_mut() {
        if let Role::S(j) = f.role {
            f.role = Role::S((j + rotation) % 3);
        }
    }
    for c in other.curves.iter_mut() {
        c.family = match c.family {
            Family::Delta(j) => Family::Delta((j + rotation) % 3),
            Family::Alpha(j) => Family::Alpha((j + rotation) % 3),
            f => f,
        };
    }
    splice_sum(
        &mut diag,
        other,
        &[Role::C, Role::S(0), Role::S(1), Role::S(2)],
        q1,
        q2,
    )?;
    Ok(PseudoTrisection { diag })
}
