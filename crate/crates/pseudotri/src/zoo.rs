//! A zoo of concrete diagrams used throughout the tests, examples, and the
//! bundled corpus: small hand-checked encodings of standard manifolds.

use std::collections::BTreeMap;

use crate::cell::{Complex, Dart, Edge, Role, Vertex};
use crate::curve::{Curve, Family};
use crate::diagram::{reversed_circle, BindingCircle, Diagram};
use crate::ptri::PseudoTrisection;
use crate::shadow::{BridgePoint, PseudoShadow, ShadowArc, ShadowCrossing};
use crate::triheeg::TripleHeegaard;
use crate::models;

/// The three-sector diagram of S³ with no curves: three disks sharing one
/// binding circle of length 3.
pub fn trivial_s3() -> TripleHeegaard {
    let mut cx = Complex::new();
    cx.add_vertices(3);
    let e: Vec<Edge> = (0..3).map(|i| cx.add_edge(i, (i + 1) % 3)).collect();
    let walk: Vec<Dart> = e.iter().map(|&e| Dart::fwd(e)).collect();
    for r in 0..3u8 {
        cx.add_face(Role::S(r), walk.clone());
    }
    let binding = vec![BindingCircle { label: "B1".into(), darts: walk }];
    TripleHeegaard {
        diag: Diagram { cx, binding, curves: vec![] },
    }
}

/// S¹ × S² from its genus-1 Heegaard splitting: Σ₂ is a one-holed torus,
/// Σ₁ and Σ₃ are disks, and δ₁, δ₂ are two parallel meridians.
pub fn s1s2_heegaard() -> TripleHeegaard {
    let mut cx = models::grid_torus_role(6, Role::S(1));
    let hole = models::gt_face(6, 2, 4);
    let walk = cx.faces[hole].walk.clone();
    models::puncture(&mut cx, hole);
    cx.add_face(Role::S(0), walk.clone());
    cx.add_face(Role::S(2), walk.clone());
    let reference = reversed_circle(&walk);
    let curves = vec![
        Curve::closed(Family::Delta(0), models::gt_meridian(6, 1)),
        Curve::closed(Family::Delta(1), models::gt_meridian(6, 3)),
    ];
    TripleHeegaard {
        diag: Diagram {
            cx,
            binding: vec![BindingCircle { label: "B1".into(), darts: reference }],
            curves,
        },
    }
}

/// The connected sum of two copies of S¹ × S²: three annuli spanning two
/// binding circles, with each δ_i the core circle of the sector surface Σ_i.
pub fn two_s1s2() -> TripleHeegaard {
    let n = 4usize;
    let mut cx = Complex::new();
    cx.add_vertices(2 * n + 3 * n);
    let v = |j: usize| j % n;
    let w = |j: usize| n + j % n;
    let m = |i: usize, j: usize| 2 * n + i * n + j % n;
    let a: Vec<Edge> = (0..n).map(|j| cx.add_edge(v(j), v(j + 1))).collect();
    let b: Vec<Edge> = (0..n).map(|j| cx.add_edge(w(j), w(j + 1))).collect();
    let mut curves = Vec::new();
    for i in 0..3usize {
        let c: Vec<Edge> = (0..n).map(|j| cx.add_edge(m(i, j), m(i, j + 1))).collect();
        let r: Vec<Edge> = (0..n).map(|j| cx.add_edge(v(j), m(i, j))).collect();
        let s: Vec<Edge> = (0..n).map(|j| cx.add_edge(m(i, j), w(j))).collect();
        for j in 0..n {
            cx.add_face(
                Role::S(i as u8),
                vec![
                    Dart::fwd(a[j]),
                    Dart::fwd(r[(j + 1) % n]),
                    Dart::bwd(c[j]),
                    Dart::bwd(r[j]),
                ],
            );
            cx.add_face(
                Role::S(i as u8),
                vec![
                    Dart::fwd(c[j]),
                    Dart::fwd(s[(j + 1) % n]),
                    Dart::bwd(b[j]),
                    Dart::bwd(s[j]),
                ],
            );
        }
        curves.push(Curve::closed(
            Family::Delta(i as u8),
            c.iter().map(|&e| Dart::fwd(e)).collect(),
        ));
    }
    let b1 = reversed_circle(&a.iter().map(|&e| Dart::fwd(e)).collect::<Vec<_>>());
    let b2 = b.iter().map(|&e| Dart::fwd(e)).collect();
    TripleHeegaard {
        diag: Diagram {
            cx,
            binding: vec![
                BindingCircle { label: "B1".into(), darts: b1 },
                BindingCircle { label: "B2".into(), darts: b2 },
            ],
            curves,
        },
    }
}

// ---------------------------------------------------------------------------
// Four-sector diagrams.
// ---------------------------------------------------------------------------

/// The four-sector diagram of B⁴ with no curves: four disks sharing one
/// binding circle of length 3.
pub fn trivial_b4() -> PseudoTrisection {
    let mut cx = Complex::new();
    cx.add_vertices(3);
    let e: Vec<Edge> = (0..3).map(|i| cx.add_edge(i, (i + 1) % 3)).collect();
    let walk: Vec<Dart> = e.iter().map(|&e| Dart::fwd(e)).collect();
    cx.add_face(Role::C, walk.clone());
    for r in 0..3u8 {
        cx.add_face(Role::S(r), walk.clone());
    }
    let binding = vec![BindingCircle { label: "B1".into(), darts: walk }];
    PseudoTrisection {
        diag: Diagram { cx, binding, curves: vec![] },
    }
}

/// Shared scaffold of the genus-(0;0,1,0) four-sector diagrams: Σ₂ is a
/// one-holed torus, Σ₁, Σ₃ and Σ_C are disks, δ₁ and δ₂ are parallel
/// meridians.  The α₂ cut system of Σ_C ∪ Σ₂ is supplied by the caller.
fn one_holed_torus_ptri(alpha2: Vec<Dart>) -> PseudoTrisection {
    let mut cx = models::grid_torus_role(6, Role::S(1));
    let hole = models::gt_face(6, 2, 4);
    let walk = cx.faces[hole].walk.clone();
    models::puncture(&mut cx, hole);
    cx.add_face(Role::S(0), walk.clone());
    cx.add_face(Role::S(2), walk.clone());
    cx.add_face(Role::C, walk.clone());
    let reference = reversed_circle(&walk);
    let curves = vec![
        Curve::closed(Family::Delta(0), models::gt_meridian(6, 1)),
        Curve::closed(Family::Delta(1), models::gt_meridian(6, 3)),
        Curve::closed(Family::Alpha(1), alpha2),
    ];
    PseudoTrisection {
        diag: Diagram {
            cx,
            binding: vec![BindingCircle { label: "B1".into(), darts: reference }],
            curves,
        },
    }
}

/// S¹ × B³: the compressing curve α₂ is a third parallel meridian, so the
/// first two sectors each realize S¹ × S² and the third realizes S³.
pub fn s1_b3() -> PseudoTrisection {
    one_holed_torus_ptri(models::gt_meridian(6, 0))
}

/// S² × D²: the compressing curve α₂ is a longitude, cancelling both δ
/// meridians, so every sector realizes S³ while the boundary remains
/// S¹ × S².
pub fn s2_d2() -> PseudoTrisection {
    one_holed_torus_ptri(models::gt_longitude(6, 0))
}

/// 2(S² × D²): the boundary connected sum of two copies of S² × D².
/// Built as a connected sum of diagrams; complexity 2, but the boundary
/// diagram is non-minimal (pair complexity 6).  See [`two_s2d2`] for the
/// minimal-pair version.
pub fn two_s2d2_sum() -> PseudoTrisection {
    let a = s2_d2();
    crate::moves4::boundary_connect_sum_4(&a, &a, "B1", "B1", 0)
        .expect("connected sum of valid diagrams")
}

/// The minimal-pair diagram of 2(S² × D²): the three-annuli boundary
/// diagram of 2(S¹ × S²) extended by an annular Σ_C, with each α_i a
/// meridian through Σ_C and Σ_i crossing both binding circles.  The
/// boundary restriction is exactly [`two_s1s2`]; complexity 2, pair
/// complexity 5.
pub fn two_s2d2() -> PseudoTrisection {
    let n = 4usize;
    let th = two_s1s2();
    let mut cx = th.diag.cx;
    let mut curves = th.diag.curves;
    // Vertex/edge layout of two_s1s2: v(j) on circle A with edges a_j =
    // edge j, w(j) on circle B with edges b_j = edge n + j; annulus i has
    // ring edges c_i[j], rungs r_i[j] (v_j → m) and s_i[j] (m → w_j).
    let a = |j: usize| (j % n) as Edge;
    let b = |j: usize| (n + j % n) as Edge;
    let r = |i: usize, j: usize| (2 * n + 3 * i * n + n + j % n) as Edge;
    let s = |i: usize, j: usize| (2 * n + 3 * i * n + 2 * n + j % n) as Edge;
    let v = |j: usize| j % n;
    let w = |j: usize| n + j % n;
    let t: Vec<Edge> = (0..n).map(|j| cx.add_edge(v(j), w(j))).collect();
    for j in 0..n {
        cx.add_face(
            Role::C,
            vec![
                Dart::fwd(a(j)),
                Dart::fwd(t[(j + 1) % n]),
                Dart::bwd(b(j)),
                Dart::bwd(t[j]),
            ],
        );
    }
    for i in 0..3usize {
        curves.push(Curve::closed(
            Family::Alpha(i as u8),
            vec![Dart::fwd(r(i, i)), Dart::fwd(s(i, i)), Dart::bwd(t[i])],
        ));
    }
    PseudoTrisection {
        diag: Diagram { cx, binding: th.diag.binding, curves },
    }
}

/// CP² minus a ball: Σ_C is a one-holed torus, the sector surfaces are
/// disks, and the three α curves are a meridian, a longitude, and a
/// (1,1)-diagonal, pairwise crossing once.
pub fn cp2_minus_b4() -> PseudoTrisection {
    let mut cx = models::grid_torus_role(6, Role::C);
    let hole = models::gt6_safe_hole();
    let walk = cx.faces[hole].walk.clone();
    models::puncture(&mut cx, hole);
    for r in 0..3u8 {
        cx.add_face(Role::S(r), walk.clone());
    }
    let reference = reversed_circle(&walk);
    let curves = vec![
        Curve::closed(Family::Alpha(0), models::gt_meridian(6, 1)),
        Curve::closed(Family::Alpha(1), models::gt_longitude(6, 4)),
        Curve::closed(Family::Alpha(2), models::gt6_diagonal()),
    ];
    PseudoTrisection {
        diag: Diagram {
            cx,
            binding: vec![BindingCircle { label: "B1".into(), darts: reference }],
            curves,
        },
    }
}

// ---------------------------------------------------------------------------
// The three-torus.
// ---------------------------------------------------------------------------

/// A waypoint of a lattice curve: a cube-surface lattice point, or the
/// mid-ring vertex of a tube, identified by axis (0,1,2) and cross label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Node {
    P([i8; 3]),
    M(u8, [i8; 2]),
}

/// Quarter-turn of the cube lattice taking axis x→y→z→x, acting on curve
/// waypoints.
fn rho(n: Node) -> Node {
    match n {
        Node::P([a, b, c]) => Node::P([c, a, b]),
        Node::M(0, [a, b]) => Node::M(1, [b, a]),
        Node::M(1, [a, b]) => Node::M(2, [b, a]),
        Node::M(2, [a, b]) => Node::M(0, [a, b]),
        Node::M(..) => unreachable!("tube axis out of range"),
    }
}

/// Incremental builder for complexes living on the surface of the lattice
/// cube [0,5]³ with handles (tubes) joining antipodal face-center holes.
struct CubeSurface {
    cx: Complex,
    verts: BTreeMap<[i8; 3], Vertex>,
    edges: BTreeMap<([i8; 3], [i8; 3]), Edge>,
    mids: BTreeMap<(u8, [i8; 2]), Vertex>,
    ring_edges: BTreeMap<(u8, [i8; 2], [i8; 2]), Edge>,
    rungs: BTreeMap<[i8; 3], Edge>,
}

/// Cross-section label of a tube corner point: the two coordinates other
/// than the tube axis.
fn tube_label(axis: u8, p: [i8; 3]) -> [i8; 2] {
    match axis {
        0 => [p[1], p[2]],
        1 => [p[0], p[2]],
        2 => [p[0], p[1]],
        _ => unreachable!(),
    }
}

impl CubeSurface {
    fn new() -> CubeSurface {
        CubeSurface {
            cx: Complex::new(),
            verts: BTreeMap::new(),
            edges: BTreeMap::new(),
            mids: BTreeMap::new(),
            ring_edges: BTreeMap::new(),
            rungs: BTreeMap::new(),
        }
    }

    fn vert(&mut self, p: [i8; 3]) -> Vertex {
        if let Some(&v) = self.verts.get(&p) {
            return v;
        }
        let v = self.cx.add_vertices(1).start;
        self.verts.insert(p, v);
        v
    }

    /// Dart from `a` to `b` along the (created-on-demand) lattice edge.
    fn dart(&mut self, a: [i8; 3], b: [i8; 3]) -> Dart {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let e = match self.edges.get(&(lo, hi)) {
            Some(&e) => e,
            None => {
                let (t, h) = (self.vert(lo), self.vert(hi));
                let e = self.cx.add_edge(t, h);
                self.edges.insert((lo, hi), e);
                e
            }
        };
        Dart::with_dir(e, a == lo)
    }

    fn mid(&mut self, axis: u8, label: [i8; 2]) -> Vertex {
        if let Some(&v) = self.mids.get(&(axis, label)) {
            return v;
        }
        let v = self.cx.add_vertices(1).start;
        self.mids.insert((axis, label), v);
        v
    }

    /// Dart between two tube mid-ring vertices, from `la` to `lb`.
    fn mid_dart(&mut self, axis: u8, la: [i8; 2], lb: [i8; 2]) -> Dart {
        let (lo, hi) = if la <= lb { (la, lb) } else { (lb, la) };
        let e = match self.ring_edges.get(&(axis, lo, hi)) {
            Some(&e) => e,
            None => {
                let (t, h) = (self.mid(axis, lo), self.mid(axis, hi));
                let e = self.cx.add_edge(t, h);
                self.ring_edges.insert((axis, lo, hi), e);
                e
            }
        };
        Dart::with_dir(e, la == lo)
    }

    /// Dart from an outer tube corner to its mid-ring vertex (or back).
    fn rung_dart(&mut self, axis: u8, p: [i8; 3], outward: bool) -> Dart {
        let e = match self.rungs.get(&p) {
            Some(&e) => e,
            None => {
                let t = self.vert(p);
                let h = self.mid(axis, tube_label(axis, p));
                let e = self.cx.add_edge(t, h);
                self.rungs.insert(p, e);
                e
            }
        };
        Dart::with_dir(e, !outward)
    }

    /// One side of a tube: four quads joining an exposed hole circle (given
    /// as its corner points in exposed order) to the tube's mid ring.
    fn tube_side(&mut self, axis: u8, circle: [[i8; 3]; 4], role: Role) {
        for k in 0..4 {
            let p0 = circle[k];
            let p1 = circle[(k + 1) % 4];
            let (l0, l1) = (tube_label(axis, p0), tube_label(axis, p1));
            let walk = vec![
                self.dart(p0, p1),
                self.rung_dart(axis, p1, false),
                self.mid_dart(axis, l1, l0),
                self.rung_dart(axis, p0, true),
            ];
            self.cx.add_face(role, walk);
        }
    }

    /// The meridian ring of a tube, in the given label order.
    fn meridian(&mut self, axis: u8, labels: [[i8; 2]; 4]) -> Vec<Dart> {
        (0..4)
            .map(|k| self.mid_dart(axis, labels[k], labels[(k + 1) % 4]))
            .collect()
    }

    /// Converts a closed waypoint path to curve darts.
    fn path_darts(&mut self, path: &[Node]) -> Vec<Dart> {
        let n = path.len();
        (0..n)
            .map(|i| match (path[i], path[(i + 1) % n]) {
                (Node::P(a), Node::P(b)) => self.dart(a, b),
                (Node::P(a), Node::M(axis, l)) => {
                    assert_eq!(tube_label(axis, a), l, "rung label mismatch");
                    self.rung_dart(axis, a, false)
                }
                (Node::M(axis, l), Node::P(b)) => {
                    assert_eq!(tube_label(axis, b), l, "rung label mismatch");
                    self.rung_dart(axis, b, true)
                }
                (Node::M(..), Node::M(..)) => unreachable!("mid-to-mid step"),
            })
            .collect()
    }
}

/// Lattice point of face-local grid coordinates; faces are 0..6 in the
/// order +x, −x, +y, −y, +z, −z, each parametrized right-handedly with
/// respect to its outward normal so that the sphere orients coherently.
fn face_point(f: usize, u: i8, v: i8) -> [i8; 3] {
    match f {
        0 => [5, u, v],
        1 => [0, v, u],
        2 => [v, 5, u],
        3 => [u, 0, v],
        4 => [u, v, 5],
        5 => [v, u, 0],
        _ => unreachable!(),
    }
}

/// T³ from its standard genus-3 Heegaard splitting, presented with three
/// sectors: Σ₁ (genus 1) carries the z-handle, Σ₂ (genus 2) the x- and
/// y-handles, Σ₃ is a disk.  The genus-3 surface is the boundary of a
/// neighborhood of the three coordinate circles: a cube-surface sphere with
/// three tubes joining antipodal face-center holes.  δ₁ consists of the
/// three commutator curves, δ₂ of the x- and y-meridians, δ₃ of the
/// z-meridian.
pub fn t3() -> TripleHeegaard {
    let mut cs = CubeSurface::new();
    // Sphere faces.  Region Σ₁ on the sphere: the ±z caps plus the strip of
    // cells y ∈ [0,1] on the +x face, connecting them into a disk.
    for f in 0..6usize {
        for cu in 0..5i8 {
            for cv in 0..5i8 {
                if (cu, cv) == (2, 2) {
                    continue; // tube hole
                }
                let in_cap = f >= 4;
                let in_strip = f == 0 && cu == 0;
                let role = if in_cap || in_strip { Role::S(0) } else { Role::S(1) };
                let corners = [
                    face_point(f, cu, cv),
                    face_point(f, cu + 1, cv),
                    face_point(f, cu + 1, cv + 1),
                    face_point(f, cu, cv + 1),
                ];
                let walk = (0..4)
                    .map(|k| cs.dart(corners[k], corners[(k + 1) % 4]))
                    .collect();
                cs.cx.add_face(role, walk);
            }
        }
    }
    // Tubes: the hole circles in exposed order are the would-be walks of
    // the removed center cells.
    let hole = |f: usize| -> [[i8; 3]; 4] {
        [
            face_point(f, 2, 2),
            face_point(f, 3, 2),
            face_point(f, 3, 3),
            face_point(f, 2, 3),
        ]
    };
    for (axis, fp, fm, role) in [
        (0u8, 0usize, 1usize, Role::S(1)),
        (1, 2, 3, Role::S(1)),
        (2, 4, 5, Role::S(0)),
    ] {
        cs.tube_side(axis, hole(fp), role);
        cs.tube_side(axis, hole(fm), role);
    }
    // Meridians.
    let ring = [[2, 2], [3, 2], [3, 3], [2, 3]];
    let m_x = cs.meridian(0, ring);
    let m_y = cs.meridian(1, ring);
    let m_z = cs.meridian(2, ring);
    // The xy commutator curve: through the x-tube, around to the y-tube,
    // back through both, with one lane change (z = 2 → 3) en route so the
    // three commutators stay pairwise disjoint.
    let beta_xy: Vec<Node> = vec![
        Node::P([5, 3, 2]),
        Node::M(0, [3, 2]),
        Node::P([0, 3, 2]),
        Node::P([0, 4, 2]),
        Node::P([0, 5, 2]),
        Node::P([1, 5, 2]),
        Node::P([2, 5, 2]),
        Node::M(1, [2, 2]),
        Node::P([2, 0, 2]),
        Node::P([1, 0, 2]),
        Node::P([0, 0, 2]),
        Node::P([0, 1, 2]),
        Node::P([0, 1, 3]),
        Node::P([0, 2, 3]),
        Node::M(0, [2, 3]),
        Node::P([5, 2, 3]),
        Node::P([5, 1, 3]),
        Node::P([5, 0, 3]),
        Node::P([4, 0, 3]),
        Node::P([3, 0, 3]),
        Node::M(1, [3, 3]),
        Node::P([3, 5, 3]),
        Node::P([4, 5, 3]),
        Node::P([5, 5, 3]),
        Node::P([5, 4, 3]),
        Node::P([5, 4, 2]),
    ];
    let beta_yz: Vec<Node> = beta_xy.iter().map(|&n| rho(n)).collect();
    let beta_zx: Vec<Node> = beta_yz.iter().map(|&n| rho(n)).collect();
    let mut curves = Vec::new();
    for beta in [&beta_xy, &beta_yz, &beta_zx] {
        let darts = cs.path_darts(beta);
        curves.push(Curve::closed(Family::Delta(0), darts));
    }
    curves.push(Curve::closed(Family::Delta(1), m_x));
    curves.push(Curve::closed(Family::Delta(1), m_y));
    curves.push(Curve::closed(Family::Delta(2), m_z));
    // Binding: the traced boundary of Σ₁; Σ₃ is a single disk face over it.
    let slots = cs.cx.slot_map(&[Role::S(0)]).expect("Σ₁ slot map");
    let mut circles = cs.cx.boundary_circles(&slots).expect("Σ₁ boundary");
    assert_eq!(circles.len(), 1, "Σ₁ must have a single boundary circle");
    let reference = circles.pop().unwrap();
    cs.cx.add_face(Role::S(2), reference.clone());
    TripleHeegaard {
        diag: Diagram {
            cx: cs.cx,
            binding: vec![BindingCircle { label: "B1".into(), darts: reference }],
            curves,
        },
    }
}

// ---------------------------------------------------------------------------
// Shadow diagrams of surfaces in bridge position.
// ---------------------------------------------------------------------------

fn bp(label: &str, surface: Role) -> BridgePoint {
    BridgePoint { label: label.into(), surface }
}

/// An abstract arc crossing the (single) binding circle `crossings` times.
fn sarc(label: &str, family: Family, e0: &str, e1: &str, crossings: usize) -> ShadowArc {
    ShadowArc {
        label: label.into(),
        family,
        ends: [e0.into(), e1.into()],
        binding_crossings: vec!["B1".into(); crossings],
        darts: vec![],
    }
}

/// The simplest shadow of a disk in B⁴: one bridge point per surface, one
/// τ and one L arc per family, no crossings.  The boundary is a
/// zero-crossing unknot.
pub fn disk_in_b4_shadow() -> PseudoShadow {
    PseudoShadow {
        base: trivial_b4(),
        bridges: vec![
            bp("b1", Role::S(0)),
            bp("b2", Role::S(1)),
            bp("b3", Role::S(2)),
            bp("bc", Role::C),
        ],
        arcs: vec![
            sarc("L1", Family::Ell(0), "b1", "b2", 1),
            sarc("L2", Family::Ell(1), "b2", "b3", 1),
            sarc("L3", Family::Ell(2), "b3", "b1", 1),
            sarc("tau1", Family::Tau(0), "b1", "bc", 1),
            sarc("tau2", Family::Tau(1), "b2", "bc", 1),
            sarc("tau3", Family::Tau(2), "b3", "bc", 1),
        ],
        crossings: vec![],
    }
}

/// The disk shadow with every arc embedded along the binding 3-cycle of
/// the base, so each sector loop carries a 1-chain that can be checked for
/// null-homology.
pub fn embedded_disk_b4_shadow() -> PseudoShadow {
    let mut sd = disk_in_b4_shadow();
    for a in &mut sd.arcs {
        a.darts = match a.family {
            // τ arcs all run along the first binding edge; L arcs traverse
            // the whole binding circle, so every sector loop τ_i − τ_{i+1}
            // − L_i is a 1-cycle.
            Family::Tau(_) => vec![Dart::fwd(0)],
            _ => vec![Dart::fwd(0), Dart::fwd(1), Dart::fwd(2)],
        };
    }
    sd
}

/// A shadow of the disk in B⁴ whose boundary is the left-handed trefoil:
/// two bridge points per surface, two arcs per family, and one negative
/// self-crossing of each L family.
pub fn trefoil_b4_shadow() -> PseudoShadow {
    let mut arcs = Vec::new();
    let mut crossings = Vec::new();
    for i in 0..3u8 {
        let j = (i + 1) % 3;
        arcs.push(sarc(
            &format!("L{}a", i + 1),
            Family::Ell(i),
            &format!("x{}", i + 1),
            &format!("y{}", j + 1),
            1,
        ));
        arcs.push(sarc(
            &format!("L{}b", i + 1),
            Family::Ell(i),
            &format!("y{}", i + 1),
            &format!("x{}", j + 1),
            1,
        ));
        crossings.push(ShadowCrossing {
            surface: Role::S(j),
            a: format!("L{}a", i + 1),
            b: format!("L{}b", i + 1),
            a_over: true,
            sign: -1,
            a_pos: 0,
            b_pos: 0,
        });
    }
    for i in 0..3u8 {
        arcs.push(sarc(&format!("tau{}a", i + 1), Family::Tau(i), &format!("x{}", i + 1), "u", 1));
        arcs.push(sarc(&format!("tau{}b", i + 1), Family::Tau(i), &format!("y{}", i + 1), "v", 1));
    }
    let mut bridges = Vec::new();
    for i in 0..3u8 {
        bridges.push(bp(&format!("x{}", i + 1), Role::S(i)));
        bridges.push(bp(&format!("y{}", i + 1), Role::S(i)));
    }
    bridges.push(bp("u", Role::C));
    bridges.push(bp("v", Role::C));
    PseudoShadow { base: trivial_b4(), bridges, arcs, crossings }
}

/// A shadow of a Möbius band in CP² minus a ball: three bridge points in
/// Σ₂ joined by an odd triangle of arcs, closed up through the other
/// surfaces.  Non-orientable, χ = 0, unknotted boundary.
pub fn moebius_cp2_shadow() -> PseudoShadow {
    PseudoShadow {
        base: cp2_minus_b4(),
        bridges: vec![
            bp("b1", Role::S(1)),
            bp("b2", Role::S(1)),
            bp("b3", Role::S(1)),
            bp("a1", Role::S(0)),
            bp("a3", Role::S(2)),
            bp("c", Role::C),
        ],
        arcs: vec![
            sarc("L1a", Family::Ell(0), "b1", "b2", 0),
            sarc("L1b", Family::Ell(0), "a1", "b3", 1),
            sarc("L2a", Family::Ell(1), "b2", "b3", 0),
            sarc("L2b", Family::Ell(1), "b1", "a3", 1),
            sarc("L3", Family::Ell(2), "a3", "a1", 1),
            sarc("tau1", Family::Tau(0), "a1", "c", 1),
            sarc("tau2a", Family::Tau(1), "b1", "b3", 0),
            sarc("tau2b", Family::Tau(1), "b2", "c", 1),
            sarc("tau3", Family::Tau(2), "a3", "c", 1),
        ],
        crossings: vec![],
    }
}

/// The trefoil disk shadow transplanted into CP² minus a ball, with one
/// extra closed round of τ arcs through two central bridge points: a
/// shadow of the slice disk for the left-handed trefoil.  χ = 1.
pub fn lht_slice_disk_shadow() -> PseudoShadow {
    let mut sd = trefoil_b4_shadow();
    sd.base = cp2_minus_b4();
    sd.bridges.push(bp("w1", Role::C));
    sd.bridges.push(bp("w2", Role::C));
    for i in 0..3u8 {
        sd.arcs.push(sarc(&format!("tau{}c", i + 1), Family::Tau(i), "w1", "w2", 0));
    }
    sd
}

/// A shadow of the sphere CP¹ ⊂ CP² minus a ball: a closed surface (no L
/// arcs, empty boundary) built from two central bridge points and one τ
/// arc per family.  χ = 2.
pub fn cp1_cp2_shadow() -> PseudoShadow {
    PseudoShadow {
        base: cp2_minus_b4(),
        bridges: vec![bp("p", Role::C), bp("q", Role::C)],
        arcs: vec![
            sarc("tau1", Family::Tau(0), "p", "q", 0),
            sarc("tau2", Family::Tau(1), "p", "q", 0),
            sarc("tau3", Family::Tau(2), "p", "q", 0),
        ],
        crossings: vec![],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cell::Role;

    #[test]
    fn t3_surfaces_have_expected_shapes() {
        let d = t3();
        let s1 = d.diag.cx.surface_shape(&[Role::S(0)]).unwrap();
        assert_eq!((s1.components, s1.total_genus, s1.boundary_count), (1, 1, 1));
        let s2 = d.diag.cx.surface_shape(&[Role::S(1)]).unwrap();
        assert_eq!((s2.components, s2.total_genus, s2.boundary_count), (1, 2, 1));
        let s3 = d.diag.cx.surface_shape(&[Role::S(2)]).unwrap();
        assert_eq!((s3.components, s3.total_genus, s3.boundary_count), (1, 0, 1));
    }

    #[test]
    fn t3_validates_with_indices() {
        let d = t3();
        let rep = d.validate();
        assert!(rep.pass(), "{:?}", rep.failures);
        let ix = d.indices().unwrap();
        assert_eq!(ix.y, [3, 2, 1]);
        assert_eq!(ix.p, [1, 2, 0]);
        assert_eq!(ix.b, 1);
        assert_eq!(d.complexity().unwrap(), 6);
    }

    #[test]
    fn two_s2d2_has_minimal_pair_complexity() {
        let d = two_s2d2();
        let rep = d.validate();
        assert!(rep.pass(), "{:?}", rep.failures);
        let ix = d.indices().unwrap();
        assert_eq!((ix.c, ix.c_pair, ix.chi, ix.g, ix.b), (2, 5, 3, 0, 2));
        // The boundary restriction is the minimal 2(S¹ × S²) diagram.
        let boundary = d.restrict_boundary();
        assert!(boundary.validate().pass());
        let h = boundary.realize_homology().unwrap();
        assert!(h[1].is_free_of_rank(2), "H₁ = {}", h[1]);
        // The connected-sum construction reaches the same c but a larger
        // pair complexity.
        let ix = two_s2d2_sum().indices().unwrap();
        assert_eq!((ix.c, ix.c_pair), (2, 6));
    }

    #[test]
    fn t3_homology_is_z3() {
        let d = t3();
        let h = d.realize_homology().unwrap();
        assert!(h[1].is_free_of_rank(3), "H₁ = {}", h[1]);
        assert!(h[2].is_free_of_rank(3), "H₂ = {}", h[2]);
    }
}
