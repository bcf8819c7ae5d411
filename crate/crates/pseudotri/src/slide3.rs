//! Handleslides of delta curves, realized as the boundary of a ribbon
//! neighbourhood of slider ∪ band ∪ over inside the glued sector pair, and
//! the quad refinement used to give that boundary room to live on.

use std::collections::{BTreeMap, BTreeSet};

use crate::cell::{Complex, Dart, Edge, Face, Role, Vertex};
use crate::curve::{Curve, Family};
use crate::diagram::{reversed_circle, Diagram};
use crate::report::StructureError;
use crate::triheeg::TripleHeegaard;

/// Tables produced by quad subdivision: per (face, original walk position)
/// the spoke edge running from that position's midpoint to the face's
/// centre.
struct QuadTables {
    spokes: BTreeMap<(usize, usize), Edge>,
}

/// Expands a dart over subdivided edges into one or two darts.
fn expand_dart(d: Dart, mids: &BTreeMap<Edge, (Vertex, Edge)>) -> Vec<Dart> {
    match mids.get(&d.edge()) {
        None => vec![d],
        Some(&(_, e2)) => {
            if d.is_forward() {
                vec![d, Dart::fwd(e2)]
            } else {
                vec![Dart::bwd(e2), d]
            }
        }
    }
}

/// Subdivides every edge of the `support` faces at its midpoint and replaces
/// each support face by its fan of corner quads around a new centre vertex.
/// Walks of non-support faces, curves and binding circles are rewritten over
/// the half-edges.
fn quad_subdivide(diag: &mut Diagram, support: &BTreeSet<usize>) -> QuadTables {
    let mut edges: BTreeSet<Edge> = BTreeSet::new();
    for &f in support {
        for dt in &diag.cx.faces[f].walk {
            edges.insert(dt.edge());
        }
    }
    let mut mid_edge = BTreeMap::new();
    for &e in &edges {
        let (mid, e2) = diag.cx.subdivide_edge(e);
        mid_edge.insert(e, (mid, e2));
    }
    for c in diag.curves.iter_mut() {
        c.darts = c.darts.iter().flat_map(|&d| expand_dart(d, &mid_edge)).collect();
    }
    for b in diag.binding.iter_mut() {
        b.darts = b.darts.iter().flat_map(|&d| expand_dart(d, &mid_edge)).collect();
    }
    let mut spokes = BTreeMap::new();
    let mut quads: Vec<Face> = Vec::new();
    for &f in support {
        let walk = diag.cx.faces[f].walk.clone();
        let role = diag.cx.faces[f].role;
        debug_assert_eq!(walk.len() % 2, 0);
        let k = walk.len() / 2;
        let centre = diag.cx.n_vertices;
        diag.cx.n_vertices += 1;
        let spoke: Vec<Edge> = (0..k)
            .map(|t| {
                let mid = diag.cx.head(walk[2 * t]);
                let s = diag.cx.add_edge(mid, centre);
                spokes.insert((f, t), s);
                s
            })
            .collect();
        for t in 0..k {
            let u = (t + 1) % k;
            quads.push(Face {
                role,
                walk: vec![
                    walk[2 * t + 1],
                    walk[2 * u],
                    Dart::fwd(spoke[u]),
                    Dart::bwd(spoke[t]),
                ],
            });
        }
    }
    // Replace each support face in place by its first quad; push the rest,
    // so face indices outside the support stay valid.
    let mut extra = Vec::new();
    let mut qi = 0usize;
    for &f in support {
        let k = diag.cx.faces[f].walk.len() / 2;
        diag.cx.faces[f] = quads[qi].clone();
        extra.extend_from_slice(&quads[qi + 1..qi + k]);
        qi += k;
    }
    diag.cx.faces.extend(extra);
    QuadTables { spokes }
}

/// Globally quad-subdivides a diagram.  The result carries the same
/// surfaces, curves and binding up to subdivision, so every invariant —
/// indices, flips, realization homology — is unchanged.
pub fn refine(d: &TripleHeegaard) -> TripleHeegaard {
    let mut diag = d.diag.clone();
    let support: BTreeSet<usize> = (0..diag.cx.faces.len()).collect();
    quad_subdivide(&mut diag, &support);
    TripleHeegaard { diag }
}

/// A face visit of the realized slide curve: enter through the midpoint of
/// the occurrence at `entry`, pass the centre, and leave through `exit`
/// (original walk positions of the face).
#[derive(Clone, Copy, Debug)]
struct Visit {
    pair_face: usize,
    entry: usize,
    exit: usize,
}

/// Slides `slider` over `over` (indices into the δ_i family, 0-based `i`)
/// along a guide band: a path from a vertex of the slider to a vertex of
/// the over curve through the interior of the glued pair Σ_i ∪ Σ_{i+1},
/// otherwise disjoint from all curves and the binding.  The slider is
/// replaced by the band sum; all indices and the realization homology are
/// unchanged.
pub fn handleslide_3(
    d: &TripleHeegaard,
    i: u8,
    slider: usize,
    over: usize,
    band: &[Dart],
) -> Result<TripleHeegaard, StructureError> {
    let i = i % 3;
    let fam = Family::Delta(i);
    let (neg, pos) = (Role::S(i), Role::S((i + 1) % 3));
    let mut diag = d.diag.clone();
    let members: Vec<usize> = (0..diag.curves.len())
        .filter(|&t| diag.curves[t].family == fam)
        .collect();
    if slider >= members.len() || over >= members.len() || slider == over {
        return Err(StructureError::InvalidTarget(format!(
            "need two distinct curves of {} to slide",
            fam.label()
        )));
    }
    let (gs, go) = (members[slider], members[over]);
    let sv: BTreeSet<Vertex> = diag.curves[gs].vertices(&diag.cx).into_iter().collect();
    let ov: BTreeSet<Vertex> = diag.curves[go].vertices(&diag.cx).into_iter().collect();
    if band.is_empty() {
        return Err(StructureError::InvalidTarget("empty guide band".into()));
    }
    for w in band.windows(2) {
        if diag.cx.head(w[0]) != diag.cx.tail(w[1]) {
            return Err(StructureError::InvalidTarget("guide band is not a path".into()));
        }
    }
    if !sv.contains(&diag.cx.tail(band[0])) || !ov.contains(&diag.cx.head(*band.last().unwrap()))
    {
        return Err(StructureError::InvalidTarget(
            "guide band must run from the slider to the over curve".into(),
        ));
    }
    let bverts = diag.binding_vertices();
    let mut all_cv: BTreeSet<Vertex> = BTreeSet::new();
    for c in &diag.curves {
        all_cv.extend(c.vertices(&diag.cx));
    }
    for t in 1..band.len() {
        let v = diag.cx.tail(band[t]);
        if all_cv.contains(&v) || bverts.contains(&v) {
            return Err(StructureError::BandObstructed(format!(
                "guide band interior meets a curve or the binding at vertex {}",
                v
            )));
        }
    }
    // The pair complex, remembering which stored face each pair face came
    // from and whether its walk was reversed.
    let flip_neg = diag.surface_flip(neg)?;
    let flip_pos = diag.surface_flip(pos)?;
    let mut pair = Complex {
        n_vertices: diag.cx.n_vertices,
        edges: diag.cx.edges.clone(),
        faces: Vec::new(),
    };
    let mut origin: Vec<usize> = Vec::new();
    let mut reversed: Vec<bool> = Vec::new();
    for (fi, f) in diag.cx.faces.iter().enumerate() {
        let keep = if f.role == pos {
            flip_pos == 1
        } else if f.role == neg {
            flip_neg == -1
        } else {
            continue;
        };
        pair.faces.push(Face {
            role: Role::S(0),
            walk: if keep {
                f.walk.clone()
            } else {
                reversed_circle(&f.walk)
            },
        });
        origin.push(fi);
        reversed.push(!keep);
    }
    let slots = pair.slot_map(&[Role::S(0)])?;
    let mut graph: BTreeSet<Dart> = BTreeSet::new();
    for darts in [&diag.curves[gs].darts, &diag.curves[go].darts, &band.to_vec()] {
        for &dt in darts.iter() {
            if slots.get(dt).is_none() || slots.get(dt.rev()).is_none() {
                return Err(StructureError::BandObstructed(format!(
                    "edge {} does not lie in the glued pair {} ∪ {}",
                    dt.edge(),
                    neg.label(),
                    pos.label()
                )));
            }
            graph.insert(dt);
            graph.insert(dt.rev());
        }
    }
    // Trace the boundary circuits of a ribbon neighbourhood of the graph:
    // follow a dart, then rotate at its head past non-graph darts until the
    // next graph dart.
    let succ = |dt: Dart| -> Result<(Vec<Dart>, Dart), StructureError> {
        let mut x = pair
            .rot_next(&slots, dt.rev())
            .ok_or_else(|| StructureError::MalformedMap("open rotation in pair".into()))?;
        let mut skipped = Vec::new();
        for _ in 0..pair.edges.len() * 2 + 1 {
            if graph.contains(&x) {
                return Ok((skipped, x));
            }
            skipped.push(x);
            x = pair
                .rot_next(&slots, x)
                .ok_or_else(|| StructureError::MalformedMap("open rotation in pair".into()))?;
        }
        Err(StructureError::MalformedMap("rotation does not close".into()))
    };
    let mut unvisited: BTreeSet<Dart> = graph.clone();
    let mut chosen: Option<Vec<Dart>> = None;
    while let Some(&start) = unvisited.iter().next() {
        let mut circuit = vec![start];
        unvisited.remove(&start);
        let mut cur = start;
        loop {
            let (_, nxt) = succ(cur)?;
            if nxt == start {
                break;
            }
            unvisited.remove(&nxt);
            circuit.push(nxt);
            cur = nxt;
        }
        // The band sum is the circuit running along the slider once, the
        // over curve once, and both sides of the band.
        let mut count: BTreeMap<Edge, usize> = BTreeMap::new();
        for dt in &circuit {
            *count.entry(dt.edge()).or_insert(0) += 1;
        }
        let s_edges: BTreeSet<Edge> = diag.curves[gs].darts.iter().map(|d| d.edge()).collect();
        let o_edges: BTreeSet<Edge> = diag.curves[go].darts.iter().map(|d| d.edge()).collect();
        let b_edges: BTreeSet<Edge> = band.iter().map(|d| d.edge()).collect();
        let ok = s_edges.iter().all(|e| count.get(e) == Some(&1))
            && o_edges.iter().all(|e| count.get(e) == Some(&1))
            && b_edges.iter().all(|e| count.get(e) == Some(&2))
            && count.len() == s_edges.len() + o_edges.len() + b_edges.len();
        if ok {
            chosen = Some(circuit);
            break;
        }
    }
    let circuit = chosen.ok_or_else(|| {
        StructureError::BandObstructed(
            "no ribbon boundary realizes the band sum; the band does not join the two curves"
                .into(),
        )
    })?;
    // Convert the circuit into face visits: along each dart the curve runs
    // through the face on its left; at each corner it crosses the fan edges
    // between consecutive graph darts.
    let mut visits: Vec<Visit> = Vec::new();
    let mut open_entry: Option<(usize, usize)> = None;
    let mut first_exit: Option<(usize, usize)> = None;
    for &dt in &circuit {
        let (skipped, _) = succ(dt)?;
        if skipped.is_empty() {
            continue;
        }
        let lane = slots.get(dt).unwrap();
        let lane_len = pair.faces[lane.face].walk.len();
        let exit = (lane.pos + 1) % lane_len;
        match open_entry.take() {
            Some((f, entry)) => {
                debug_assert_eq!(f, lane.face);
                visits.push(Visit {
                    pair_face: f,
                    entry,
                    exit,
                });
            }
            None => first_exit = Some((lane.face, exit)),
        }
        for (j, &x) in skipped.iter().enumerate() {
            let s = slots.get(x.rev()).unwrap();
            if j + 1 < skipped.len() {
                let len = pair.faces[s.face].walk.len();
                visits.push(Visit {
                    pair_face: s.face,
                    entry: s.pos,
                    exit: (s.pos + 1) % len,
                });
            } else {
                open_entry = Some((s.face, s.pos));
            }
        }
    }
    match (open_entry, first_exit) {
        (Some((f, entry)), Some((f2, exit))) => {
            if f != f2 {
                return Err(StructureError::MalformedMap(
                    "ribbon boundary does not close over faces".into(),
                ));
            }
            visits.push(Visit {
                pair_face: f,
                entry,
                exit,
            });
        }
        _ => {
            return Err(StructureError::BandObstructed(
                "slide curve never leaves a single face; nothing to do".into(),
            ));
        }
    }
    // Map to stored faces (the pair may have reversed some walks) and check
    // the route has room: every face visited once, every edge crossed once.
    // `refine` the diagram first if a slide is rejected here.
    let mut route: Vec<Visit> = Vec::new();
    let mut faces_seen = BTreeSet::new();
    let mut crossings = BTreeSet::new();
    for v in &visits {
        let rf = origin[v.pair_face];
        let len = diag.cx.faces[rf].walk.len();
        let fix = |p: usize| if reversed[v.pair_face] { len - 1 - p } else { p };
        if !faces_seen.insert(rf) {
            return Err(StructureError::BandObstructed(format!(
                "slide route visits face {} twice; refine the diagram first",
                rf
            )));
        }
        let (entry, exit) = (fix(v.entry), fix(v.exit));
        let entry_edge = diag.cx.faces[rf].walk[entry].edge();
        if !crossings.insert(entry_edge) {
            return Err(StructureError::BandObstructed(format!(
                "slide route crosses edge {} twice; refine the diagram first",
                entry_edge
            )));
        }
        route.push(Visit {
            pair_face: rf,
            entry,
            exit,
        });
    }
    // Subdivide the visited faces and thread the new curve mid → centre →
    // mid through each.
    let support: BTreeSet<usize> = route.iter().map(|v| v.pair_face).collect();
    let tables = quad_subdivide(&mut diag, &support);
    let mut darts = Vec::new();
    for v in &route {
        let s_in = tables.spokes[&(v.pair_face, v.entry)];
        let s_out = tables.spokes[&(v.pair_face, v.exit)];
        darts.push(Dart::fwd(s_in));
        darts.push(Dart::bwd(s_out));
    }
    diag.curves[gs] = Curve::closed(fam, darts);
    Ok(TripleHeegaard { diag })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves3;
    use crate::zoo;

    fn homologies(d: &TripleHeegaard) -> Vec<String> {
        d.realize_homology()
            .unwrap()
            .iter()
            .map(|g| g.to_string())
            .collect()
    }

    #[test]
    fn refine_preserves_everything() {
        for d in [zoo::trivial_s3(), zoo::s1s2_heegaard(), zoo::two_s1s2()] {
            let r = refine(&d);
            let rep = r.validate();
            assert!(rep.pass(), "{:?}", rep.failures);
            assert_eq!(r.indices().unwrap(), d.indices().unwrap());
            assert_eq!(homologies(&r), homologies(&d));
        }
    }

    #[test]
    fn slide_meridians_on_connected_sum() {
        // δ₁ of (S¹×S²) # (S¹×S²) holds the two meridians; sliding one
        // over the other keeps every invariant.
        let a = zoo::s1s2_heegaard();
        let d = moves3::connected_sum_3(&a, &a, "B1", "B1", 0).unwrap();
        let ix0 = d.indices().unwrap();
        let before = homologies(&d);
        let slid = slide_with_any_band(&d, 0).expect("some band should work");
        let rep = slid.validate();
        assert!(rep.pass(), "{:?}", rep.failures);
        assert_eq!(slid.indices().unwrap(), ix0);
        assert_eq!(homologies(&slid), before);
    }

    #[test]
    fn slide_on_t3_preserves_homology() {
        let d = zoo::t3();
        let slid = slide_with_any_band(&d, 0).expect("some band should work");
        let rep = slid.validate();
        assert!(rep.pass(), "{:?}", rep.failures);
        assert_eq!(slid.indices().unwrap(), d.indices().unwrap());
        let h = slid.realize_homology().unwrap();
        assert!(h[1].is_free_of_rank(3), "H₁ = {}", h[1]);
    }

    #[test]
    fn slide_rejects_unconnected_band() {
        let d = zoo::two_s1s2();
        // A dart that does not join the two curves.
        let bad = vec![Dart::fwd(0)];
        assert!(matches!(
            handleslide_3(&d, 0, 0, 1, &bad),
            Err(StructureError::InvalidTarget(_)) | Err(StructureError::BandObstructed(_))
        ));
    }

    /// Finds any band between curves 0 and 1 of δ_{i+1} (0-based family i)
    /// that yields a valid slide, trying shortest paths first.
    pub fn slide_with_any_band(d: &TripleHeegaard, i: u8) -> Option<TripleHeegaard> {
        let fam = Family::Delta(i % 3);
        let members: Vec<usize> = (0..d.diag.curves.len())
            .filter(|&t| d.diag.curves[t].family == fam)
            .collect();
        if members.len() < 2 {
            return None;
        }
        let mut d = d.clone();
        for _ in 0..3 {
            for (a, b) in [(0usize, 1usize), (1, 0)] {
                for band in bands_between(&d, members[a], members[b]) {
                    if let Ok(s) = handleslide_3(&d, i, a, b, &band) {
                        if s.validate().pass() {
                            return Some(s);
                        }
                    }
                }
            }
            d = refine(&d);
        }
        None
    }

    /// Shortest edge paths from some vertex of curve `gs` to curve `go`
    /// through vertices free of curves and binding.
    pub fn bands_between(d: &TripleHeegaard, gs: usize, go: usize) -> Vec<Vec<Dart>> {
        let cx = &d.diag.cx;
        let sv: BTreeSet<Vertex> = d.diag.curves[gs].vertices(cx).into_iter().collect();
        let ov: BTreeSet<Vertex> = d.diag.curves[go].vertices(cx).into_iter().collect();
        let mut blocked: BTreeSet<Vertex> = d.diag.binding_vertices();
        for c in &d.diag.curves {
            blocked.extend(c.vertices(cx));
        }
        let mut adj: BTreeMap<Vertex, Vec<Dart>> = BTreeMap::new();
        for e in 0..cx.edges.len() {
            let dt = Dart::fwd(e);
            adj.entry(cx.tail(dt)).or_default().push(dt);
            adj.entry(cx.head(dt)).or_default().push(dt.rev());
        }
        let mut out = Vec::new();
        for &s in &sv {
            let mut prev: BTreeMap<Vertex, Dart> = BTreeMap::new();
            let mut seen: BTreeSet<Vertex> = [s].into();
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &dt in adj.get(&v).map(|x| x.as_slice()).unwrap_or(&[]) {
                    let w = cx.head(dt);
                    if !seen.insert(w) {
                        continue;
                    }
                    if ov.contains(&w) {
                        let mut path = vec![dt];
                        let mut u = cx.tail(dt);
                        while u != s {
                            path.push(prev[&u]);
                            u = cx.tail(prev[&u]);
                        }
                        path.reverse();
                        out.push(path);
                        continue;
                    }
                    if blocked.contains(&w) {
                        continue;
                    }
                    prev.insert(w, dt);
                    queue.push_back(w);
                }
            }
        }
        out.sort_by_key(|p| p.len());
        out
    }

    use crate::cell::Vertex;
    use std::collections::{BTreeMap, BTreeSet};
}

