//! Oriented polygonal 2-complexes with role-tagged faces.
//!
//! The authoritative representation of every surface in this crate is a
//! polygonal complex: a set of vertices, a set of edges (each with a tail and
//! a head), and a set of faces given by closed walks of directed edges.  A
//! *dart* is a directed edge side; the rotation system (counterclockwise
//! order of darts around each vertex) is derived from the face walks, so the
//! half-edge view and the polygon view are two readings of the same data.
//!
//! A diagram stores several surfaces inside one complex by tagging each face
//! with a [`Role`].  Surface-level questions (boundary circles, Euler
//! characteristic, genus, manifoldness) are asked of a *role set*: the
//! subcomplex induced by the faces with those roles.  Binding circles are
//! shared edge cycles exposed by every role, which is what "identify the
//! boundaries of all surfaces" means here.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::report::StructureError;

/// Vertex identifier.
pub type Vertex = usize;
/// Edge identifier.
pub type Edge = usize;
/// Face identifier (index into `Complex::faces`).
pub type FaceId = usize;

/// A directed edge side.  `Dart::fwd(e)` runs tail → head, `Dart::bwd(e)`
/// head → tail.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Dart(pub u32);

impl Dart {
    pub fn fwd(e: Edge) -> Dart {
        Dart((e as u32) << 1)
    }
    pub fn bwd(e: Edge) -> Dart {
        Dart(((e as u32) << 1) | 1)
    }
    pub fn with_dir(e: Edge, forward: bool) -> Dart {
        if forward {
            Dart::fwd(e)
        } else {
            Dart::bwd(e)
        }
    }
    pub fn edge(self) -> Edge {
        (self.0 >> 1) as Edge
    }
    pub fn is_forward(self) -> bool {
        self.0 & 1 == 0
    }
    /// The opposite dart on the same edge.
    pub fn rev(self) -> Dart {
        Dart(self.0 ^ 1)
    }
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl std::fmt::Debug for Dart {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_forward() {
            write!(f, "+e{}", self.edge())
        } else {
            write!(f, "-e{}", self.edge())
        }
    }
}

/// Which diagram surface a face belongs to.  Standalone surfaces use
/// `Role::S(0)` throughout.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Role {
    /// The central surface Σ_C of a four-dimensional diagram.
    C,
    /// One of the outer surfaces Σ_1, Σ_2, Σ_3 (stored 0-based).
    S(u8),
}

impl Role {
    pub fn label(self) -> String {
        match self {
            Role::C => "C".to_string(),
            Role::S(i) => format!("{}", i + 1),
        }
    }
}

/// A 2-cell: an oriented closed walk of darts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub role: Role,
    pub walk: Vec<Dart>,
}

/// An oriented polygonal 2-complex with role-tagged faces.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Complex {
    pub n_vertices: usize,
    /// Per edge: (tail, head) of the forward dart.
    pub edges: Vec<(Vertex, Vertex)>,
    pub faces: Vec<Face>,
}

/// Where a dart is used: face index and position within its walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slot {
    pub face: FaceId,
    pub pos: usize,
}

/// Dart → slot map for a role set.  Within one surface every dart is used at
/// most once; the map is rebuilt on demand.
pub struct SlotMap {
    slots: Vec<Option<Slot>>,
}

impl SlotMap {
    pub fn get(&self, d: Dart) -> Option<Slot> {
        self.slots.get(d.index()).copied().flatten()
    }
    pub fn used(&self, d: Dart) -> bool {
        self.get(d).is_some()
    }
    /// A dart is boundary-exposed when it is unused but its reverse is used.
    pub fn exposed(&self, d: Dart) -> bool {
        !self.used(d) && self.used(d.rev())
    }
}

/// Outcome of rebuilding vertex identifications from corner gluing.
pub struct VertexMap {
    /// For each edge-end slot (2·edge + end, end 0 = tail, 1 = head), the new
    /// vertex id.
    class_of_slot: Vec<Vertex>,
    pub n_vertices: usize,
}

impl VertexMap {
    /// New vertex at the tail of the given dart.
    pub fn tail_of(&self, d: Dart) -> Vertex {
        let end = if d.is_forward() { 0 } else { 1 };
        self.class_of_slot[2 * d.edge() + end]
    }
    /// New vertex at the head of the given dart.
    pub fn head_of(&self, d: Dart) -> Vertex {
        self.tail_of(d.rev())
    }
}

impl Complex {
    pub fn new() -> Complex {
        Complex::default()
    }

    pub fn add_vertices(&mut self, n: usize) -> std::ops::Range<Vertex> {
        let start = self.n_vertices;
        self.n_vertices += n;
        start..self.n_vertices
    }

    pub fn add_edge(&mut self, tail: Vertex, head: Vertex) -> Edge {
        debug_assert!(tail < self.n_vertices && head < self.n_vertices);
        self.edges.push((tail, head));
        self.edges.len() - 1
    }

    pub fn add_face(&mut self, role: Role, walk: Vec<Dart>) -> FaceId {
        self.faces.push(Face { role, walk });
        self.faces.len() - 1
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn tail(&self, d: Dart) -> Vertex {
        let (t, h) = self.edges[d.edge()];
        if d.is_forward() {
            t
        } else {
            h
        }
    }

    pub fn head(&self, d: Dart) -> Vertex {
        self.tail(d.rev())
    }

    /// All roles present among faces, deduplicated, in sorted order.
    pub fn roles(&self) -> Vec<Role> {
        let mut v: Vec<Role> = self.faces.iter().map(|f| f.role).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Dart usage map for the faces whose role passes the filter.
    pub fn slot_map(&self, roles: &[Role]) -> Result<SlotMap, StructureError> {
        let mut slots = vec![None; 2 * self.edges.len()];
        for (fi, f) in self.faces.iter().enumerate() {
            if !roles.contains(&f.role) {
                continue;
            }
            for (pos, &d) in f.walk.iter().enumerate() {
                if slots[d.index()].is_some() {
                    return Err(StructureError::NonManifold(format!(
                        "dart {:?} used twice within roles {:?}",
                        d, roles
                    )));
                }
                slots[d.index()] = Some(Slot { face: fi, pos });
            }
        }
        Ok(SlotMap { slots })
    }

    /// Checks that every face walk is a closed path of consecutive darts.
    pub fn check_walks(&self) -> Result<(), StructureError> {
        for (fi, f) in self.faces.iter().enumerate() {
            if f.walk.is_empty() {
                return Err(StructureError::MalformedMap(format!("face {} empty", fi)));
            }
            for i in 0..f.walk.len() {
                let d = f.walk[i];
                let d2 = f.walk[(i + 1) % f.walk.len()];
                if d.edge() >= self.edges.len() || d2.edge() >= self.edges.len() {
                    return Err(StructureError::MalformedMap(format!(
                        "face {} references a missing edge",
                        fi
                    )));
                }
                if self.head(d) != self.tail(d2) {
                    return Err(StructureError::MalformedMap(format!(
                        "face {} walk breaks between {:?} and {:?}",
                        fi, d, d2
                    )));
                }
            }
        }
        for &(t, h) in &self.edges {
            if t >= self.n_vertices || h >= self.n_vertices {
                return Err(StructureError::MalformedMap(
                    "edge endpoint out of range".into(),
                ));
            }
        }
        Ok(())
    }

    /// Successor in the rotation around `tail(d)`, derived from face walks:
    /// the dart following `d.rev()` in its face, if `d.rev()` is used.
    pub fn rot_next(&self, slots: &SlotMap, d: Dart) -> Option<Dart> {
        let s = slots.get(d.rev())?;
        let w = &self.faces[s.face].walk;
        Some(w[(s.pos + 1) % w.len()])
    }

    /// Predecessor in the rotation around `tail(d)`: `rev` of the dart
    /// preceding `d` in its face, if `d` is used.
    pub fn rot_prev(&self, slots: &SlotMap, d: Dart) -> Option<Dart> {
        let s = slots.get(d)?;
        let w = &self.faces[s.face].walk;
        Some(w[(s.pos + w.len() - 1) % w.len()].rev())
    }

    /// The full rotation at a vertex within a role set: darts out of `v`
    /// listed in rotation order.  For an interior vertex this is a cycle; for
    /// a boundary vertex a path starting at the dart whose predecessor is
    /// missing.  Errors if the darts at `v` do not form a single fan.
    pub fn vertex_fan(
        &self,
        slots: &SlotMap,
        out_darts: &[Dart],
        v: Vertex,
    ) -> Result<(Vec<Dart>, bool), StructureError> {
        if out_darts.is_empty() {
            return Ok((Vec::new(), true));
        }
        // Find a fan start: a dart with no rotation predecessor (boundary),
        // or an arbitrary dart if all have predecessors (interior cycle).
        let mut starts: Vec<Dart> = out_darts
            .iter()
            .copied()
            .filter(|&d| self.rot_prev(slots, d).is_none())
            .collect();
        let closed = starts.is_empty();
        let start = if closed { out_darts[0] } else { starts.remove(0) };
        if starts.len() > 1 {
            return Err(StructureError::NonManifold(format!(
                "vertex {} has {} boundary fans",
                v,
                starts.len() + 1
            )));
        }
        let mut fan = vec![start];
        let mut cur = start;
        loop {
            match self.rot_next(slots, cur) {
                Some(next) => {
                    if next == start {
                        if !closed {
                            return Err(StructureError::NonManifold(format!(
                                "rotation at vertex {} closes past a boundary gap",
                                v
                            )));
                        }
                        break;
                    }
                    if fan.len() > out_darts.len() {
                        return Err(StructureError::NonManifold(format!(
                            "rotation at vertex {} does not close",
                            v
                        )));
                    }
                    fan.push(next);
                    cur = next;
                }
                None => {
                    if closed {
                        return Err(StructureError::NonManifold(format!(
                            "rotation at vertex {} mixes cycle and path",
                            v
                        )));
                    }
                    break;
                }
            }
        }
        if fan.len() != out_darts.len() {
            return Err(StructureError::NonManifold(format!(
                "vertex {} splits into several fans ({} of {} darts reached)",
                v,
                fan.len(),
                out_darts.len()
            )));
        }
        Ok((fan, closed))
    }

    /// Darts out of each vertex, restricted to edges visible in `slots`
    /// (i.e. edges used by at least one face of the role set).
    pub fn out_darts_by_vertex(&self, slots: &SlotMap) -> Vec<Vec<Dart>> {
        let mut by_v: Vec<Vec<Dart>> = vec![Vec::new(); self.n_vertices];
        for e in 0..self.edges.len() {
            let f = Dart::fwd(e);
            if slots.used(f) || slots.used(f.rev()) {
                by_v[self.tail(f)].push(f);
                by_v[self.head(f)].push(f.rev());
            }
        }
        by_v
    }

    /// Traces the boundary circles of a role set: cycles of exposed darts.
    pub fn boundary_circles(&self, slots: &SlotMap) -> Result<Vec<Vec<Dart>>, StructureError> {
        let mut exposed: Vec<Dart> = Vec::new();
        for e in 0..self.edges.len() {
            for d in [Dart::fwd(e), Dart::bwd(e)] {
                if slots.exposed(d) {
                    exposed.push(d);
                }
            }
        }
        exposed.sort();
        let mut seen: BTreeMap<Dart, bool> = exposed.iter().map(|&d| (d, false)).collect();
        let mut circles = Vec::new();
        for &start in &exposed {
            if seen[&start] {
                continue;
            }
            let mut circle = Vec::new();
            let mut d = start;
            loop {
                if *seen.get(&d).unwrap_or(&true) {
                    return Err(StructureError::NonManifold(format!(
                        "boundary trace revisits dart {:?}",
                        d
                    )));
                }
                seen.insert(d, true);
                circle.push(d);
                // Rotate around head(d) from rev(d) until an unused dart
                // leaves the vertex: the next exposed dart.
                let mut c = d.rev();
                let next = loop {
                    match slots.get(c) {
                        Some(s) => {
                            let w = &self.faces[s.face].walk;
                            let prev_in_face = w[(s.pos + w.len() - 1) % w.len()];
                            c = prev_in_face.rev();
                        }
                        None => break c,
                    }
                };
                if next == start {
                    break;
                }
                d = next;
            }
            circles.push(circle);
        }
        Ok(circles)
    }
}

/// Shape report for one role set: components with genus and boundary counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceShape {
    pub components: usize,
    pub total_genus: usize,
    pub boundary_count: usize,
    pub euler: i64,
    /// Boundary circles as traced exposed-dart cycles.
    pub circles: Vec<Vec<Dart>>,
    /// Genus and boundary count per component (component = index).
    pub per_component: Vec<(usize, usize)>,
}

impl Complex {
    /// Validates the role set as an oriented surface (possibly disconnected)
    /// and computes its classification.
    pub fn surface_shape(&self, roles: &[Role]) -> Result<SurfaceShape, StructureError> {
        self.check_walks()?;
        let slots = self.slot_map(roles)?;
        let by_v = self.out_darts_by_vertex(&slots);
        // Every used edge must have at least one slot per direction or be
        // exposed; manifold check happens vertex by vertex via fans.
        let mut n_edges = 0usize;
        for e in 0..self.edges.len() {
            let f = Dart::fwd(e);
            let fu = slots.used(f);
            let bu = slots.used(f.rev());
            if fu || bu {
                n_edges += 1;
            }
        }
        let mut n_verts = 0usize;
        for (v, darts) in by_v.iter().enumerate() {
            if darts.is_empty() {
                continue;
            }
            n_verts += 1;
            self.vertex_fan(&slots, darts, v)?;
        }
        let n_faces = self
            .faces
            .iter()
            .filter(|f| roles.contains(&f.role))
            .count();
        let circles = self.boundary_circles(&slots)?;
        let euler = n_verts as i64 - n_edges as i64 + n_faces as i64;

        // Components via union-find over vertices through used edges.
        let mut uf = UnionFind::new(self.n_vertices);
        for e in 0..self.edges.len() {
            let f = Dart::fwd(e);
            if slots.used(f) || slots.used(f.rev()) {
                uf.union(self.tail(f), self.head(f));
            }
        }
        let mut comp_ids: BTreeMap<usize, usize> = BTreeMap::new();
        for (v, darts) in by_v.iter().enumerate() {
            if !darts.is_empty() {
                let r = uf.find(v);
                let next = comp_ids.len();
                comp_ids.entry(r).or_insert(next);
            }
        }
        let components = comp_ids.len().max(if n_faces > 0 { 1 } else { 0 });
        // Per-component χ and boundary count.
        let mut comp_euler = vec![0i64; comp_ids.len()];
        let mut comp_bdry = vec![0usize; comp_ids.len()];
        for (v, darts) in by_v.iter().enumerate() {
            if !darts.is_empty() {
                comp_euler[comp_ids[&uf.find(v)]] += 1;
            }
        }
        for e in 0..self.edges.len() {
            let f = Dart::fwd(e);
            if slots.used(f) || slots.used(f.rev()) {
                comp_euler[comp_ids[&uf.find(self.tail(f))]] -= 1;
            }
        }
        for f in self.faces.iter().filter(|f| roles.contains(&f.role)) {
            let v = self.tail(f.walk[0]);
            comp_euler[comp_ids[&uf.find(v)]] += 1;
        }
        for c in &circles {
            comp_bdry[comp_ids[&uf.find(self.tail(c[0]))]] += 1;
        }
        let mut per_component = Vec::new();
        let mut total_genus = 0usize;
        for i in 0..comp_ids.len() {
            let chi = comp_euler[i];
            let b = comp_bdry[i];
            let two_g = 2 - chi - b as i64;
            if two_g < 0 || two_g % 2 != 0 {
                return Err(StructureError::MalformedMap(format!(
                    "component {} has χ = {} with {} boundary circles (not an oriented surface)",
                    i, chi, b
                )));
            }
            let g = (two_g / 2) as usize;
            total_genus += g;
            per_component.push((g, b));
        }
        Ok(SurfaceShape {
            components,
            total_genus,
            boundary_count: circles.len(),
            euler,
            circles,
            per_component,
        })
    }

    /// Rebuilds vertex identifications from corner gluing: within each face
    /// walk, the head of one dart is the tail of the next.  Fresh vertex ids
    /// are assigned deterministically (by smallest edge-end slot).  Edges not
    /// used by any face keep their endpoints via their own end slots only,
    /// so callers must re-attach loose structure explicitly.
    pub fn rebuild_vertices(&mut self) -> VertexMap {
        let n_slots = 2 * self.edges.len();
        let mut uf = UnionFind::new(n_slots);
        let slot_of = |d: Dart, end_is_head: bool| -> usize {
            // end 0 = tail of forward dart, 1 = head of forward dart.
            let tail_end = if d.is_forward() { 0 } else { 1 };
            let end = if end_is_head { 1 - tail_end } else { tail_end };
            2 * d.edge() + end
        };
        for f in &self.faces {
            for i in 0..f.walk.len() {
                let d = f.walk[i];
                let d2 = f.walk[(i + 1) % f.walk.len()];
                uf.union(slot_of(d, true), slot_of(d2, false));
            }
        }
        let mut class_of_slot = vec![usize::MAX; n_slots];
        let mut next = 0usize;
        for s in 0..n_slots {
            let r = uf.find(s);
            if class_of_slot[r] == usize::MAX {
                class_of_slot[r] = next;
                next += 1;
            }
            class_of_slot[s] = class_of_slot[r];
        }
        self.n_vertices = next;
        for e in 0..self.edges.len() {
            self.edges[e] = (class_of_slot[2 * e], class_of_slot[2 * e + 1]);
        }
        VertexMap {
            class_of_slot,
            n_vertices: next,
        }
    }

    /// Splits edge `e` at a new midpoint vertex.  `e` becomes tail → mid and
    /// a fresh edge runs mid → head.  All face walks (every role) are
    /// rewritten.  Returns (mid vertex, new edge).
    pub fn subdivide_edge(&mut self, e: Edge) -> (Vertex, Edge) {
        let (t, h) = self.edges[e];
        let mid = self.add_vertices(1).start;
        self.edges[e] = (t, mid);
        let e2 = self.add_edge(mid, h);
        for f in &mut self.faces {
            let mut i = 0;
            while i < f.walk.len() {
                let d = f.walk[i];
                if d.edge() == e {
                    if d.is_forward() {
                        f.walk.insert(i + 1, Dart::fwd(e2));
                    } else {
                        f.walk.insert(i, Dart::bwd(e2));
                    }
                    i += 2;
                } else {
                    i += 1;
                }
            }
        }
        (mid, e2)
    }

    /// Replaces face `f` by a fan of triangles from a new barycenter vertex.
    pub fn subdivide_face(&mut self, fi: FaceId) {
        let face = self.faces[fi].clone();
        let center = self.add_vertices(1).start;
        let k = face.walk.len();
        let spokes: Vec<Edge> = face
            .walk
            .iter()
            .map(|&d| self.add_edge(self.tail(d), center))
            .collect();
        for i in 0..k {
            let d = face.walk[i];
            let walk = vec![d, Dart::fwd(spokes[(i + 1) % k]), Dart::bwd(spokes[i])];
            if i == 0 {
                self.faces[fi].walk = walk;
            } else {
                self.add_face(face.role, walk);
            }
        }
    }

    /// Appends all cells of `other`, returning the (vertex, edge, face)
    /// offsets by which `other`'s ids were shifted.
    pub fn append(&mut self, other: &Complex) -> (usize, usize, usize) {
        let (vo, eo, fo) = (self.n_vertices, self.edges.len(), self.faces.len());
        self.n_vertices += other.n_vertices;
        for &(t, h) in &other.edges {
            self.edges.push((t + vo, h + vo));
        }
        for f in &other.faces {
            let walk = f
                .walk
                .iter()
                .map(|d| Dart::with_dir(d.edge() + eo, d.is_forward()))
                .collect();
            self.faces.push(Face { role: f.role, walk });
        }
        (vo, eo, fo)
    }
}

/// Shifts a dart into an appended complex's id space.
pub fn shift_dart(d: Dart, edge_offset: usize) -> Dart {
    Dart::with_dir(d.edge() + edge_offset, d.is_forward())
}

/// Glues two boundary circles of one complex with a ring of triangles.
/// Both circles must be given as exposed-dart cycles (in exposed direction);
/// the ring consumes the exposure of both, producing an interior annulus.
/// Returns the new triangle faces' ids.
pub fn ring_glue(
    cx: &mut Complex,
    role: Role,
    circle_a: &[Dart],
    circle_b: &[Dart],
) -> Vec<FaceId> {
    assert!(!circle_a.is_empty() && !circle_b.is_empty());
    let m = circle_a.len();
    let n = circle_b.len();
    // Vertex sequences: tails along each circle.  Circle A is zipped in its
    // exposed direction, circle B in reverse pairing order (its exposed darts
    // are still consumed in their exposed direction), which is what a
    // coherently oriented annulus between the two circles requires.
    let av: Vec<Vertex> = circle_a.iter().map(|&d| cx.tail(d)).collect();
    let bv: Vec<Vertex> = circle_b.iter().map(|&d| cx.tail(d)).collect();
    let mut faces = Vec::new();
    let mut i = 0usize; // A-steps taken
    let mut k = 0usize; // B-steps taken; current B vertex is bv[(n - k) % n]
    let first_spoke = cx.add_edge(av[0], bv[0]);
    let mut spoke = first_spoke; // runs from the current A vertex to the current B vertex
    while i < m || k < n {
        let advance_a = k >= n || (i < m && i * n <= k * m);
        let last = i + k + 1 == m + n;
        if advance_a {
            // Triangle av[i] -> av[i+1] -> bv[..]: consumes circle_a[i].
            let next_spoke = if last {
                first_spoke
            } else {
                cx.add_edge(av[(i + 1) % m], bv[(n - k) % n])
            };
            faces.push(cx.add_face(
                role,
                vec![circle_a[i], Dart::fwd(next_spoke), Dart::bwd(spoke)],
            ));
            spoke = next_spoke;
            i += 1;
        } else {
            // Triangle av[i] -> w_{k+1} -> w_k where w_k = bv[(n - k) % n]:
            // consumes circle_b[(n - k - 1) % n] in its exposed direction.
            let j = (n - k - 1) % n;
            let next_spoke = if last {
                first_spoke
            } else {
                cx.add_edge(av[i % m], bv[j])
            };
            faces.push(cx.add_face(
                role,
                vec![Dart::fwd(next_spoke), circle_b[j], Dart::bwd(spoke)],
            ));
            spoke = next_spoke;
            k += 1;
        }
    }
    faces
}

/// Simple union-find.
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }
    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Deterministic: smaller root wins.
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Disk: boundary circle of length n, one face.
    pub fn disk(n: usize) -> Complex {
        let mut cx = Complex::new();
        cx.add_vertices(n);
        let edges: Vec<Edge> = (0..n).map(|i| cx.add_edge(i, (i + 1) % n)).collect();
        cx.add_face(Role::S(0), edges.iter().map(|&e| Dart::fwd(e)).collect());
        cx
    }

    #[test]
    fn disk_shape() {
        let cx = disk(4);
        let s = cx.surface_shape(&[Role::S(0)]).unwrap();
        assert_eq!(s.components, 1);
        assert_eq!(s.total_genus, 0);
        assert_eq!(s.boundary_count, 1);
        assert_eq!(s.euler, 1);
        assert_eq!(s.circles[0].len(), 4);
        // Boundary circle consists of backward darts (faces use forward).
        assert!(s.circles[0].iter().all(|d| !d.is_forward()));
    }

    #[test]
    fn sphere_from_two_disks() {
        // Square pillow: two faces sharing a 4-cycle.
        let mut cx = disk(4);
        let back: Vec<Dart> = (0..4).rev().map(Dart::bwd).collect();
        cx.add_face(Role::S(0), back);
        let s = cx.surface_shape(&[Role::S(0)]).unwrap();
        assert_eq!((s.components, s.total_genus, s.boundary_count), (1, 0, 0));
        assert_eq!(s.euler, 2);
    }

    #[test]
    fn torus_one_square() {
        // Genus-1 from the standard a b a⁻ b⁻ square needs distinct corner
        // vertices per walk step; use a 2×2 grid torus instead.
        let cx = crate::models::grid_torus(2);
        let s = cx.surface_shape(&[Role::S(0)]).unwrap();
        assert_eq!((s.components, s.total_genus, s.boundary_count), (1, 1, 0));
        assert_eq!(s.euler, 0);
    }

    #[test]
    fn subdivide_edge_keeps_shape() {
        let mut cx = disk(4);
        cx.subdivide_edge(0);
        let s = cx.surface_shape(&[Role::S(0)]).unwrap();
        assert_eq!((s.total_genus, s.boundary_count, s.euler), (0, 1, 1));
        assert_eq!(s.circles[0].len(), 5);
    }

    #[test]
    fn subdivide_face_keeps_shape() {
        let mut cx = disk(4);
        cx.subdivide_face(0);
        let s = cx.surface_shape(&[Role::S(0)]).unwrap();
        assert_eq!((s.total_genus, s.boundary_count, s.euler), (0, 1, 1));
    }

    #[test]
    fn ring_glue_two_disks_sphere() {
        let mut cx = disk(3);
        let other = disk(5);
        let (_, eo, _) = cx.append(&other);
        let slots = cx.slot_map(&[Role::S(0)]).unwrap();
        let circles = cx.boundary_circles(&slots).unwrap();
        assert_eq!(circles.len(), 2);
        let (a, b) = (circles[0].clone(), circles[1].clone());
        let _ = eo;
        ring_glue(&mut cx, Role::S(0), &a, &b);
        let s = cx.surface_shape(&[Role::S(0)]).unwrap();
        assert_eq!((s.components, s.total_genus, s.boundary_count), (1, 0, 0));
        assert_eq!(s.euler, 2);
    }
}
