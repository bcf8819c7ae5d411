//! Standalone surface utilities: canonical models, classification,
//! subdivision, cutting along curve systems, cut-system verification, and
//! assembly of several surfaces into one complex along boundary circles.
//!
//! These operate on bare [`Complex`]es; the diagram types build on the same
//! machinery but add binding and family bookkeeping.

use serde::{Deserialize, Serialize};

use crate::cell::{Complex, Dart, Edge, FaceId, Role, Vertex};
use crate::curve::{transverse_crossings, Curve};
use crate::report::StructureError;
use crate::triheeg::CheckReport;

/// Canonical connected oriented surface of the given genus and boundary
/// count, as a single polygonal face (all cells in [`Role::C`]).
///
/// The face walk concatenates one commutator block `a b a⁻ b⁻` per handle
/// and one slit block `t h t⁻` per boundary component, in that order, so
/// edges are numbered `a₀ b₀ a₁ b₁ … t₀ h₀ t₁ h₁ …` and the `j`-th
/// boundary circle is the single exposed dart over `h_j`.  The closed
/// sphere is the one-edge two-face map.
pub fn standard_surface(genus: usize, boundary_count: usize) -> Complex {
    let mut cx = Complex::new();
    cx.add_vertices(1);
    if genus == 0 && boundary_count == 0 {
        let e = cx.add_edge(0, 0);
        cx.add_face(Role::C, vec![Dart::fwd(e)]);
        cx.add_face(Role::C, vec![Dart::bwd(e)]);
        return cx;
    }
    let mut walk = Vec::new();
    for _ in 0..genus {
        let a = cx.add_edge(0, 0);
        let b = cx.add_edge(0, 0);
        walk.extend([Dart::fwd(a), Dart::fwd(b), Dart::bwd(a), Dart::bwd(b)]);
    }
    for _ in 0..boundary_count {
        let t = cx.add_edge(0, 0);
        let h = cx.add_edge(0, 0);
        walk.extend([Dart::fwd(t), Dart::fwd(h), Dart::bwd(t)]);
    }
    cx.add_face(Role::C, walk);
    cx.rebuild_vertices();
    cx
}

/// (genus, boundary_count, component_count) of a complex, over all roles
/// present.  Genus is total genus summed across components.
pub fn classify_surface(cx: &Complex) -> Result<(usize, usize, usize), StructureError> {
    let shape = cx.surface_shape(&cx.roles())?;
    Ok((shape.total_genus, shape.boundary_count, shape.components))
}

/// What a subdivision should split.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SubdivisionScheme {
    /// Split one edge at a midpoint vertex.
    EdgeMidpoint(Edge),
    /// Replace one face by a fan of triangles from a barycenter.
    FaceCenter(FaceId),
}

/// Subdivides the complex and retargets the tracked curves over the
/// refined map.  χ, genus, and boundary count are unchanged; curves keep
/// their isotopy classes and pairwise intersection counts.
pub fn subdivide(
    cx: &Complex,
    scheme: SubdivisionScheme,
    tracked: &[Curve],
) -> Result<(Complex, Vec<Curve>), StructureError> {
    let mut cx = cx.clone();
    let mut tracked = tracked.to_vec();
    match scheme {
        SubdivisionScheme::EdgeMidpoint(e) => {
            if e >= cx.n_edges() {
                return Err(StructureError::InvalidTarget(format!("no edge {}", e)));
            }
            let (_, e2) = cx.subdivide_edge(e);
            for c in tracked.iter_mut() {
                let mut darts = Vec::with_capacity(c.darts.len() + 1);
                for &d in &c.darts {
                    if d.edge() == e {
                        if d.is_forward() {
                            darts.extend([d, Dart::fwd(e2)]);
                        } else {
                            darts.extend([Dart::bwd(e2), d]);
                        }
                    } else {
                        darts.push(d);
                    }
                }
                c.darts = darts;
            }
        }
        SubdivisionScheme::FaceCenter(f) => {
            if f >= cx.faces.len() {
                return Err(StructureError::InvalidTarget(format!("no face {}", f)));
            }
            // Barycentric fans keep every original edge, so curves in the
            // 1-skeleton need no rerouting.
            cx.subdivide_face(f);
        }
    }
    Ok((cx, tracked))
}

/// Slices the complex along each curve of the system.  Closed curves leave
/// χ unchanged and add two boundary circles each; neat arcs raise χ by one
/// each.  Curves must be embedded and pairwise vertex-disjoint.
pub fn cut_along(cx: &Complex, curves: &[Curve]) -> Result<Complex, StructureError> {
    let mut cx = cx.clone();
    let roles = cx.roles();
    for (i, c) in curves.iter().enumerate() {
        c.check_embedded(&cx)?;
        for d in curves.iter().skip(i + 1) {
            let (cv, dv) = (c.vertices(&cx), d.vertices(&cx));
            if cv.iter().any(|v| dv.contains(v)) {
                return Err(StructureError::NotEmbedded(format!(
                    "curves {} and {} share a vertex",
                    c.family.label(),
                    d.family.label()
                )));
            }
        }
    }
    for c in curves {
        crate::curve::duplicate_along(&mut cx, &roles, &c.darts)?;
    }
    cx.rebuild_vertices();
    Ok(cx)
}

/// Checks that the curves form a cut system for a closed connected surface:
/// as many curves as the genus, each simple and closed, pairwise disjoint,
/// and cutting along all of them yields one genus-zero piece.
pub fn verify_cut_system(cx: &Complex, curves: &[Curve]) -> CheckReport {
    let mut rep = CheckReport::default();
    let (genus, boundary, components) = match classify_surface(cx) {
        Ok(t) => t,
        Err(e) => {
            rep.failures.push(format!("surface: {}", e));
            return rep;
        }
    };
    if components != 1 || boundary != 0 {
        rep.failures.push(format!(
            "expected one closed component, found {} component(s) with {} boundary circle(s)",
            components, boundary
        ));
        return rep;
    }
    if curves.len() != genus {
        rep.failures.push(format!(
            "cut system has {} curve(s) but the surface has genus {}",
            curves.len(),
            genus
        ));
        return rep;
    }
    for c in curves {
        if !c.closed {
            rep.failures
                .push(format!("{} is an arc, not a closed curve", c.family.label()));
            return rep;
        }
    }
    match cut_along(cx, curves) {
        Ok(cut) => match classify_surface(&cut) {
            Ok((g, _, comp)) => {
                if comp != 1 {
                    rep.failures
                        .push(format!("cutting disconnects the surface into {} pieces", comp));
                } else if g != 0 {
                    rep.failures
                        .push(format!("cut surface still has genus {}", g));
                }
            }
            Err(e) => rep.failures.push(format!("cut surface: {}", e)),
        },
        Err(e) => rep.failures.push(format!("cutting failed: {}", e)),
    }
    rep
}

/// One gluing record of an [`Assembly`]: boundary circle `a_circle` of
/// piece `a_piece` is identified with circle `b_circle` of piece `b_piece`,
/// with the second circle rotated by `offset` positions.  `reversed` flips
/// the identification's relative orientation (the default `false` is the
/// orientation-compatible gluing of two oriented surfaces).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identification {
    pub a_piece: usize,
    pub a_circle: usize,
    pub b_piece: usize,
    pub b_circle: usize,
    pub offset: usize,
    pub reversed: bool,
}

/// Surfaces plus gluing records, ready for [`glue_surfaces`].
#[derive(Clone, Debug)]
pub struct Assembly {
    pub pieces: Vec<Complex>,
    pub identifications: Vec<Identification>,
}

/// A glued complex with per-face provenance: `face_origin[f]` is the
/// (piece index, face index within the piece) each face came from.
#[derive(Clone, Debug)]
pub struct Glued {
    pub cx: Complex,
    pub face_origin: Vec<(usize, usize)>,
}

/// Glues the assembly's pieces along the identified boundary circles.
/// χ is additive: each identification merges circle cells pairwise, so
/// χ(glued) = Σ χ(pieces).  Circles of an identification must have equal
/// length ([`StructureError::LengthMismatch`]).
pub fn glue_surfaces(a: &Assembly) -> Result<Glued, StructureError> {
    let mut cx = Complex::new();
    let mut circles: Vec<Vec<Vec<Dart>>> = Vec::new();
    let mut face_origin = Vec::new();
    for (pi, piece) in a.pieces.iter().enumerate() {
        let slots = piece.slot_map(&piece.roles())?;
        let own = piece.boundary_circles(&slots)?;
        let (_, eo, _) = cx.append(piece);
        circles.push(
            own.iter()
                .map(|c| c.iter().map(|&d| crate::cell::shift_dart(d, eo)).collect())
                .collect(),
        );
        face_origin.extend((0..piece.faces.len()).map(|f| (pi, f)));
    }
    for id in &a.identifications {
        let circ = |piece: usize, circle: usize| -> Result<&Vec<Dart>, StructureError> {
            circles
                .get(piece)
                .and_then(|cs| cs.get(circle))
                .ok_or_else(|| {
                    StructureError::InvalidTarget(format!(
                        "piece {} has no boundary circle {}",
                        piece, circle
                    ))
                })
        };
        let ca = circ(id.a_piece, id.a_circle)?.clone();
        let cb = circ(id.b_piece, id.b_circle)?.clone();
        if ca.len() != cb.len() {
            return Err(StructureError::LengthMismatch(format!(
                "circles of length {} and {} cannot be identified",
                ca.len(),
                cb.len()
            )));
        }
        let n = ca.len();
        // The exposed dart of the second circle at position q lands on the
        // exposed dart of the first at σ(q); the glued faces then use
        // opposite sides of each shared edge.
        let sigma = |q: usize| -> Dart {
            if id.reversed {
                ca[(id.offset + q) % n]
            } else {
                ca[(id.offset + n - q) % n]
            }
        };
        let mut remap: Vec<Option<(Edge, bool)>> = vec![None; cx.n_edges()];
        for (q, &db) in cb.iter().enumerate() {
            let da = sigma(q);
            // db's exposed side becomes da; so db itself ↦ da.rev has the
            // faces of the second piece take the exposed side of da.
            remap[db.edge()] = Some((da.edge(), db.is_forward() != da.is_forward()));
        }
        for f in cx.faces.iter_mut() {
            for d in f.walk.iter_mut() {
                if let Some((e, flip)) = remap[d.edge()] {
                    *d = Dart::with_dir(e, d.is_forward() == flip);
                }
            }
        }
    }
    compact_edges(&mut cx);
    cx.rebuild_vertices();
    cx.check_walks()?;
    Ok(Glued { cx, face_origin })
}

/// Drops edges no face walk references and renumbers the rest.
fn compact_edges(cx: &mut Complex) {
    let mut used = vec![false; cx.n_edges()];
    for f in &cx.faces {
        for d in &f.walk {
            used[d.edge()] = true;
        }
    }
    let mut remap = vec![usize::MAX; cx.n_edges()];
    let mut edges = Vec::new();
    for (e, &u) in used.iter().enumerate() {
        if u {
            remap[e] = edges.len();
            edges.push(cx.edges[e]);
        }
    }
    cx.edges = edges;
    for f in cx.faces.iter_mut() {
        for d in f.walk.iter_mut() {
            *d = Dart::with_dir(remap[d.edge()], d.is_forward());
        }
    }
}

/// Signed transverse intersections of two curves: (vertex, ±1), with +1
/// when the frame (first tangent, second tangent) agrees with the surface
/// orientation.
pub fn curve_intersections(
    cx: &Complex,
    c1: &Curve,
    c2: &Curve,
) -> Result<Vec<(Vertex, i64)>, StructureError> {
    let slots = cx.slot_map(&cx.roles())?;
    Ok(transverse_crossings(cx, &slots, c1, c2)?
        .iter()
        .map(|x| (x.vertex, x.sign))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::Family;
    use crate::models;

    #[test]
    fn standard_surfaces_classify_to_their_parameters() {
        for (g, b) in [(0, 0), (0, 1), (0, 3), (1, 0), (1, 1), (1, 2), (2, 0), (3, 2)] {
            let s = standard_surface(g, b);
            s.check_walks().unwrap();
            assert_eq!(classify_surface(&s).unwrap(), (g, b, 1), "g={} b={}", g, b);
        }
    }

    #[test]
    fn disjoint_union_counts_components() {
        let mut s = standard_surface(0, 1);
        let other = standard_surface(0, 1);
        s.append(&other);
        assert_eq!(classify_surface(&s).unwrap(), (0, 2, 2));
    }

    #[test]
    fn subdivision_preserves_classification_and_crossings() {
        let cx = models::grid_torus(4);
        let m = Curve::closed(Family::Alpha(0), models::gt_meridian(4, 1));
        let l = Curve::closed(Family::Delta(0), models::gt_longitude(4, 2));
        let before = curve_intersections(&cx, &m, &l).unwrap();
        assert_eq!(before.len(), 1);
        let e = m.darts[0].edge();
        let (cx2, tracked) = subdivide(&cx, SubdivisionScheme::EdgeMidpoint(e), &[m, l]).unwrap();
        assert_eq!(classify_surface(&cx2).unwrap(), (1, 0, 1));
        let after = curve_intersections(&cx2, &tracked[0], &tracked[1]).unwrap();
        assert_eq!(after.len(), 1);
        assert_eq!(before[0].1, after[0].1);
        let (cx3, _) = subdivide(&cx2, SubdivisionScheme::FaceCenter(0), &tracked).unwrap();
        assert_eq!(classify_surface(&cx3).unwrap(), (1, 0, 1));
        assert!(matches!(
            subdivide(&cx3, SubdivisionScheme::EdgeMidpoint(99999), &[]),
            Err(StructureError::InvalidTarget(_))
        ));
    }

    #[test]
    fn torus_cut_along_meridian_is_annulus() {
        let cx = models::grid_torus(4);
        let m = Curve::closed(Family::Alpha(0), models::gt_meridian(4, 1));
        let cut = cut_along(&cx, &[m]).unwrap();
        assert_eq!(classify_surface(&cut).unwrap(), (0, 2, 1));
    }

    #[test]
    fn neat_arc_cut_raises_euler_characteristic() {
        // A spanning arc of an annulus cuts it into a disk: χ 0 → 1.
        let cx = models::grid_annulus(4, 1, Role::C);
        let arc = Curve::arc(Family::Ell(0), vec![Dart::fwd(models::ga_v(4, 1, 0, 0))]);
        assert_eq!(classify_surface(&cx).unwrap(), (0, 2, 1));
        let cut = cut_along(&cx, &[arc]).unwrap();
        assert_eq!(classify_surface(&cut).unwrap(), (0, 1, 1));
    }

    #[test]
    fn cut_system_verification_on_the_torus() {
        let cx = models::grid_torus(4);
        let essential = Curve::closed(Family::Alpha(0), models::gt_meridian(4, 1));
        assert!(verify_cut_system(&cx, &[essential.clone()]).pass());
        // A contractible square is null-homotopic: cutting disconnects.
        let f = &cx.faces[models::gt_face(4, 1, 1)].walk.clone();
        let square = Curve::closed(Family::Alpha(0), f.clone());
        let rep = verify_cut_system(&cx, &[square]);
        assert!(!rep.pass());
        // Wrong count.
        assert!(!verify_cut_system(&cx, &[]).pass());
        let two = vec![
            essential.clone(),
            Curve::closed(Family::Alpha(1), models::gt_meridian(4, 2)),
        ];
        assert!(!verify_cut_system(&cx, &two).pass());
    }

    #[test]
    fn gluing_two_disks_gives_a_sphere() {
        let a = Assembly {
            pieces: vec![models::disk(4, Role::C), models::disk(4, Role::S(0))],
            identifications: vec![Identification {
                a_piece: 0,
                a_circle: 0,
                b_piece: 1,
                b_circle: 0,
                offset: 0,
                reversed: false,
            }],
        };
        let g = glue_surfaces(&a).unwrap();
        assert_eq!(classify_surface(&g.cx).unwrap(), (0, 0, 1));
        assert_eq!(g.face_origin, vec![(0, 0), (1, 0)]);
    }

    #[test]
    fn gluing_rejects_length_mismatch() {
        let a = Assembly {
            pieces: vec![models::disk(4, Role::C), models::disk(5, Role::S(0))],
            identifications: vec![Identification {
                a_piece: 0,
                a_circle: 0,
                b_piece: 1,
                b_circle: 0,
                offset: 0,
                reversed: false,
            }],
        };
        assert!(matches!(
            glue_surfaces(&a),
            Err(StructureError::LengthMismatch(_))
        ));
    }

    #[test]
    fn annulus_and_disk_glue_to_a_disk() {
        let a = Assembly {
            pieces: vec![models::grid_annulus(4, 2, Role::C), models::disk(4, Role::S(1))],
            identifications: vec![Identification {
                a_piece: 0,
                a_circle: 0,
                b_piece: 1,
                b_circle: 0,
                offset: 1,
                reversed: false,
            }],
        };
        let g = glue_surfaces(&a).unwrap();
        assert_eq!(classify_surface(&g.cx).unwrap(), (0, 1, 1));
    }
}
