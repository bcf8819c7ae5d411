//! Parametric building blocks: disks, grid tori, grid annuli.
//!
//! These are the standard pieces from which corpus diagrams and move-local
//! models are assembled.  The grid torus carries named slope curves
//! (meridian, longitude, and a once-crossing diagonal) that are pairwise
//! transverse and edge-disjoint.

use crate::cell::{Complex, Dart, Edge, FaceId, Role, Vertex};

/// Disk with an `n`-gon boundary: `n` vertices, `n` edges, one face using
/// the forward darts, so the exposed boundary runs backward.
pub fn disk(n: usize, role: Role) -> Complex {
    let mut cx = Complex::new();
    cx.add_vertices(n);
    let edges: Vec<Edge> = (0..n).map(|i| cx.add_edge(i, (i + 1) % n)).collect();
    cx.add_face(role, edges.iter().map(|&e| Dart::fwd(e)).collect());
    cx
}

/// Vertex (r, c) of an m×m grid torus.
pub fn gt_vertex(m: usize, r: usize, c: usize) -> Vertex {
    (r % m) * m + (c % m)
}

/// Horizontal edge of the grid torus: (r, c) → (r, c+1).
pub fn gt_h(m: usize, r: usize, c: usize) -> Edge {
    (r % m) * m + (c % m)
}

/// Vertical edge of the grid torus: (r, c) → (r+1, c).
pub fn gt_v(m: usize, r: usize, c: usize) -> Edge {
    m * m + (r % m) * m + (c % m)
}

/// Face of the grid torus with lower-left corner (r, c).
pub fn gt_face(m: usize, r: usize, c: usize) -> FaceId {
    (r % m) * m + (c % m)
}

/// m×m quad-grid torus (m ≥ 2), coherently oriented, all faces `role`.
pub fn grid_torus_role(m: usize, role: Role) -> Complex {
    assert!(m >= 2);
    let mut cx = Complex::new();
    cx.add_vertices(m * m);
    for r in 0..m {
        for c in 0..m {
            cx.add_edge(gt_vertex(m, r, c), gt_vertex(m, r, c + 1));
        }
    }
    for r in 0..m {
        for c in 0..m {
            cx.add_edge(gt_vertex(m, r, c), gt_vertex(m, r + 1, c));
        }
    }
    for r in 0..m {
        for c in 0..m {
            cx.add_face(
                role,
                vec![
                    Dart::fwd(gt_h(m, r, c)),
                    Dart::fwd(gt_v(m, r, c + 1)),
                    Dart::bwd(gt_h(m, r + 1, c)),
                    Dart::bwd(gt_v(m, r, c)),
                ],
            );
        }
    }
    cx
}

/// m×m grid torus with role `S(0)`.
pub fn grid_torus(m: usize) -> Complex {
    grid_torus_role(m, Role::S(0))
}

/// Meridian of the grid torus: the vertical edge cycle in column `col`.
pub fn gt_meridian(m: usize, col: usize) -> Vec<Dart> {
    (0..m).map(|r| Dart::fwd(gt_v(m, r, col))).collect()
}

/// Longitude of the grid torus: the horizontal edge cycle in row `row`.
pub fn gt_longitude(m: usize, row: usize) -> Vec<Dart> {
    (0..m).map(|c| Dart::fwd(gt_h(m, row, c))).collect()
}

/// A (1,1)-slope staircase on the 6×6 grid torus that is edge-disjoint from
/// the column-1 meridian and the row-4 longitude and crosses each exactly
/// once (at vertices (0,1) and (4,5) respectively).
pub fn gt6_diagonal() -> Vec<Dart> {
    let m = 6;
    vec![
        Dart::fwd(gt_h(m, 0, 0)),
        Dart::fwd(gt_h(m, 0, 1)),
        Dart::fwd(gt_v(m, 0, 2)),
        Dart::fwd(gt_h(m, 1, 2)),
        Dart::fwd(gt_v(m, 1, 3)),
        Dart::fwd(gt_h(m, 2, 3)),
        Dart::fwd(gt_v(m, 2, 4)),
        Dart::fwd(gt_h(m, 3, 4)),
        Dart::fwd(gt_v(m, 3, 5)),
        Dart::fwd(gt_v(m, 4, 5)),
        Dart::fwd(gt_h(m, 5, 5)),
        Dart::fwd(gt_v(m, 5, 0)),
    ]
}

/// Face of the 6×6 grid torus disjoint (including corners) from the
/// column-1 meridian, the row-4 longitude, and [`gt6_diagonal`].
pub fn gt6_safe_hole() -> FaceId {
    gt_face(6, 5, 3)
}

/// Removes a face, exposing its walk as boundary.  Later face ids shift
/// down by one.
pub fn puncture(cx: &mut Complex, f: FaceId) {
    cx.faces.remove(f);
}

/// Grid annulus: circumference `circ` (≥ 2), `len` rings of quads (≥ 1).
/// Vertices (r, c) with r in 0..=len; boundary circles at r = 0 and r = len.
pub fn grid_annulus(circ: usize, len: usize, role: Role) -> Complex {
    assert!(circ >= 2 && len >= 1);
    let mut cx = Complex::new();
    cx.add_vertices((len + 1) * circ);
    let vx = |r: usize, c: usize| r * circ + (c % circ);
    // Horizontal (ring) edges per row, then vertical (rung) edges per ring.
    let mut h = vec![vec![0usize; circ]; len + 1];
    for (r, row) in h.iter_mut().enumerate() {
        for (c, e) in row.iter_mut().enumerate() {
            *e = cx.add_edge(vx(r, c), vx(r, c + 1));
        }
    }
    let mut v = vec![vec![0usize; circ]; len];
    for (r, row) in v.iter_mut().enumerate() {
        for (c, e) in row.iter_mut().enumerate() {
            *e = cx.add_edge(vx(r, c), vx(r + 1, c));
        }
    }
    for r in 0..len {
        for c in 0..circ {
            cx.add_face(
                role,
                vec![
                    Dart::fwd(h[r][c]),
                    Dart::fwd(v[r][(c + 1) % circ]),
                    Dart::bwd(h[r + 1][c]),
                    Dart::bwd(v[r][c]),
                ],
            );
        }
    }
    cx
}

/// Ring edge of the grid annulus at row `r`, column `c` (matching the
/// construction order of [`grid_annulus`]).
pub fn ga_h(circ: usize, r: usize, c: usize) -> Edge {
    r * circ + (c % circ)
}

/// Rung edge of the grid annulus from row `r` to row `r+1`.
pub fn ga_v(circ: usize, len: usize, r: usize, c: usize) -> Edge {
    (len + 1) * circ + r * circ + (c % circ)
}

/// Annulus vertex (r, c).
pub fn ga_vertex(circ: usize, r: usize, c: usize) -> Vertex {
    r * circ + (c % circ)
}

/// The middle ring circle of a grid annulus (row `r`), as forward darts.
pub fn ga_ring(circ: usize, r: usize) -> Vec<Dart> {
    (0..circ).map(|c| Dart::fwd(ga_h(circ, r, c))).collect()
}
