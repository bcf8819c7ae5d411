//! Canonical forms for diagrams: a relabeling-invariant string encoding,
//! used to deduplicate enumeration output.  The encoding is the
//! lexicographic minimum, over all starting darts, of a breadth-first
//! traversal transcript of the dart structure, so two diagrams get the
//! same encoding exactly when they differ only by consistent relabeling
//! of vertices, edges, and faces.

use std::collections::BTreeMap;

use crate::cell::{Complex, Dart, Role};
use crate::diagram::Diagram;

/// Walk successor of each dart within each role's surface.  A dart may
/// lie in one face per role (binding edges are shared by every surface),
/// so successors are tracked per role.
fn walk_successors(cx: &Complex) -> Vec<(Role, Vec<Option<Dart>>)> {
    let n = cx.edges.len() * 2;
    let mut by_role: BTreeMap<Role, Vec<Option<Dart>>> = BTreeMap::new();
    for f in &cx.faces {
        let next = by_role.entry(f.role).or_insert_with(|| vec![None; n]);
        for (k, &d) in f.walk.iter().enumerate() {
            next[d.index()] = Some(f.walk[(k + 1) % f.walk.len()]);
        }
    }
    by_role.into_iter().collect()
}

/// Connected components of the dart structure under edge reversal and
/// walk succession in any role.
fn dart_components(cx: &Complex, next: &[(Role, Vec<Option<Dart>>)]) -> Vec<Vec<Dart>> {
    let n = cx.edges.len() * 2;
    let mut comp = vec![usize::MAX; n];
    let mut out: Vec<Vec<Dart>> = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let ci = out.len();
        let mut frontier = vec![Dart(s as u32)];
        let mut members = Vec::new();
        while let Some(d) = frontier.pop() {
            if comp[d.index()] != usize::MAX {
                continue;
            }
            comp[d.index()] = ci;
            members.push(d);
            frontier.push(d.rev());
            for (_, role_next) in next {
                if let Some(nd) = role_next[d.index()] {
                    frontier.push(nd);
                }
            }
        }
        out.push(members);
    }
    out
}

/// The BFS transcript for one component from one starting dart: per dart
/// in discovery order, the discovery numbers of its reverse and its walk
/// successor in each role (in fixed role order), and its endpoint vertex
/// numbers (vertices numbered in order of first appearance).
fn transcript(
    cx: &Complex,
    next: &[(Role, Vec<Option<Dart>>)],
    start: Dart,
) -> (String, BTreeMap<Dart, usize>) {
    let mut num: BTreeMap<Dart, usize> = BTreeMap::new();
    let mut vnum: BTreeMap<usize, usize> = BTreeMap::new();
    let mut order = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    num.insert(start, 0);
    order.push(start);
    queue.push_back(start);
    while let Some(d) = queue.pop_front() {
        let succs = std::iter::once(Some(d.rev()))
            .chain(next.iter().map(|(_, rn)| rn[d.index()]));
        for nd in succs.flatten() {
            if !num.contains_key(&nd) {
                num.insert(nd, order.len());
                order.push(nd);
                queue.push_back(nd);
            }
        }
    }
    let mut parts = Vec::with_capacity(order.len());
    for &d in &order {
        let nv = vnum.len();
        let t = *vnum.entry(cx.tail(d)).or_insert(nv);
        let nv = vnum.len();
        let h = *vnum.entry(cx.head(d)).or_insert(nv);
        let succ_part: Vec<String> = next
            .iter()
            .map(|(role, rn)| {
                format!(
                    "{}{}",
                    role_tag(*role),
                    rn[d.index()].map(|x| num[&x] as i64).unwrap_or(-1)
                )
            })
            .collect();
        parts.push(format!(
            "{},{},{}:{}",
            num[&d.rev()],
            succ_part.join(","),
            t,
            h
        ));
    }
    (parts.join(";"), num)
}

fn role_tag(r: Role) -> String {
    match r {
        Role::C => "C".into(),
        Role::S(i) => format!("S{}", i),
    }
}

/// Lexicographically smallest rotation of a sequence.
fn min_rotation(xs: &[usize]) -> Vec<usize> {
    if xs.is_empty() {
        return Vec::new();
    }
    (0..xs.len())
        .map(|r| {
            let mut v = xs[r..].to_vec();
            v.extend_from_slice(&xs[..r]);
            v
        })
        .min()
        .unwrap()
}

/// The canonical encoding of a diagram.  Invariant under relabeling of
/// vertices and edges, reindexing and rotation of face walks, rotation of
/// binding circles and closed curves, and reordering of faces, circles,
/// and curves.
pub fn canonical_encoding(diag: &Diagram) -> String {
    let cx = &diag.cx;
    let next = walk_successors(cx);
    let comps = dart_components(cx, &next);
    let mut comp_strings = Vec::new();
    for members in &comps {
        let mut best: Option<String> = None;
        for &start in members {
            let (body, num) = transcript(cx, &next, start);
            // Binding circles and curves whose darts live in this
            // component, renumbered and rotation-normalized.
            let mut circles: Vec<Vec<usize>> = diag
                .binding
                .iter()
                .filter(|c| c.darts.first().map(|d| num.contains_key(d)).unwrap_or(false))
                .map(|c| min_rotation(&c.darts.iter().map(|d| num[d]).collect::<Vec<_>>()))
                .collect();
            circles.sort();
            let mut curves: Vec<String> = diag
                .curves
                .iter()
                .filter(|c| c.darts.first().map(|d| num.contains_key(d)).unwrap_or(false))
                .map(|c| {
                    let ds: Vec<usize> = c.darts.iter().map(|d| num[d]).collect();
                    let ds = if c.closed { min_rotation(&ds) } else { ds };
                    format!("{}@{:?}", c.family.label(), ds)
                })
                .collect();
            curves.sort();
            let cand = format!("[{}|B{:?}|K{}]", body, circles, curves.join("/"));
            if best.as_ref().map(|b| cand < *b).unwrap_or(true) {
                best = Some(cand);
            }
        }
        comp_strings.push(best.expect("components are nonempty"));
    }
    comp_strings.sort();
    comp_strings.join("+")
}
