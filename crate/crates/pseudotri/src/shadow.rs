//! Shadow diagrams for surfaces in bridge position over a four-sector
//! diagram: validation, surface invariants (Euler characteristic,
//! orientability), crossing resolution, boundary-link extraction, the
//! Kauffman bracket, linking numbers, and the intersection pairing.
//!
//! A shadow diagram records, on top of its base four-sector diagram, six
//! arc families: τ_i on Σ_i ∪ Σ_C and L_i on Σ_i ∪ Σ_{i+1}.  Arc endpoints
//! are bridge points; each bridge point in Σ_i receives exactly one end of
//! τ_i, L_i, and L_{i−1}, and each bridge point in Σ_C one end of each τ.
//! Arcs are recorded as combinatorial strands (endpoints, ordered binding
//! crossings, crossing records with planar signs); an arc may additionally
//! carry an embedded dart walk, which enables the homological part of the
//! triviality check.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cell::{Dart, Role};
use crate::curve::Family;
use crate::homology::in_image;
use crate::ptri::{OrientationAssignment, PseudoTrisection};
use crate::report::{StructureError, Warning};
use crate::triheeg::CheckReport;

/// An arc endpoint: one of the diagram's bridge points.
pub type BridgeLabel = String;

/// A bridge point: an interior point of one surface where exactly three
/// arcs end.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgePoint {
    pub label: BridgeLabel,
    pub surface: Role,
}

/// One shadow arc.  `family` is `Tau(i)` or `Ell(i)`; `ends` are bridge
/// point labels; `binding_crossings` lists the binding circles the arc
/// crosses, in order from `ends[0]` to `ends[1]` (each crossing moves the
/// arc to the other surface of its family's pair).  `darts`, when
/// non-empty, is an embedded walk in the base complex from `ends[0]` to
/// `ends[1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowArc {
    pub label: String,
    pub family: Family,
    pub ends: [BridgeLabel; 2],
    pub binding_crossings: Vec<String>,
    pub darts: Vec<Dart>,
}

/// A recorded crossing between two arc strands (possibly of the same arc)
/// in one surface.  `a_over` is the drawn order — it is authoritative for
/// same-family crossings and ignored (recomputed) for cross-family ones.
/// `sign` is the planar crossing sign as drawn, before composing with the
/// diagram orientation.  `a_pos`/`b_pos` index the crossing along each
/// arc's traversal from `ends[0]`, so multi-crossing arcs order their
/// passes deterministically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowCrossing {
    pub surface: Role,
    pub a: String,
    pub b: String,
    pub a_over: bool,
    pub sign: i8,
    pub a_pos: usize,
    pub b_pos: usize,
}

/// A surface in bridge position: base diagram, bridge points, arcs, and
/// crossing records.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PseudoShadow {
    pub base: PseudoTrisection,
    pub bridges: Vec<BridgePoint>,
    pub arcs: Vec<ShadowArc>,
    pub crossings: Vec<ShadowCrossing>,
}

/// The three arc families visible in the boundary of sector `i`:
/// τ_i, τ_{i+1}, and L_i (0-based).
pub fn sector_families(i: u8) -> [Family; 3] {
    [
        Family::Tau(i % 3),
        Family::Tau((i + 1) % 3),
        Family::Ell(i % 3),
    ]
}

/// The families allowed to end at a bridge point of the given surface.
fn families_at(surface: Role) -> Option<[Family; 3]> {
    match surface {
        Role::C => Some([Family::Tau(0), Family::Tau(1), Family::Tau(2)]),
        Role::S(i) if i < 3 => Some([
            Family::Tau(i),
            Family::Ell(i),
            Family::Ell((i + 2) % 3),
        ]),
        _ => None,
    }
}

/// The two surfaces an arc family moves between.
fn family_sheets(f: Family) -> Option<(Role, Role)> {
    match f {
        Family::Tau(i) if i < 3 => Some((Role::S(i), Role::C)),
        Family::Ell(i) if i < 3 => Some((Role::S(i), Role::S((i + 1) % 3))),
        _ => None,
    }
}

impl PseudoShadow {
    fn bridge(&self, label: &str) -> Option<&BridgePoint> {
        self.bridges.iter().find(|b| b.label == label)
    }

    fn arc(&self, label: &str) -> Option<(usize, &ShadowArc)> {
        self.arcs
            .iter()
            .enumerate()
            .find(|(_, a)| a.label == label)
    }
}

/// Traces the arcs of the given families into closed loops through shared
/// bridge points.  Every bridge point must have exactly 0 or 2 in-family
/// arc ends; loops are returned as sequences of (arc index, forward?).
fn trace_loops(
    sd: &PseudoShadow,
    fams: &[Family],
) -> Result<Vec<Vec<(usize, bool)>>, StructureError> {
    // Arc ends incident to each bridge, restricted to the families.
    let mut ends: BTreeMap<&str, Vec<(usize, usize)>> = BTreeMap::new();
    for (ai, a) in sd.arcs.iter().enumerate() {
        if !fams.contains(&a.family) {
            continue;
        }
        for (eix, end) in a.ends.iter().enumerate() {
            ends.entry(end).or_default().push((ai, eix));
        }
    }
    for (b, incident) in &ends {
        if incident.len() != 2 {
            return Err(StructureError::OpenStrand(format!(
                "bridge point {} has {} in-sector arc end(s), expected 2",
                b,
                incident.len()
            )));
        }
    }
    let mut seen = vec![false; sd.arcs.len()];
    let mut loops = Vec::new();
    for (start, a) in sd.arcs.iter().enumerate() {
        if seen[start] || !fams.contains(&a.family) {
            continue;
        }
        let mut walk = Vec::new();
        let (mut ai, mut forward) = (start, true);
        loop {
            seen[ai] = true;
            walk.push((ai, forward));
            // Leave through the far end, then continue along the other
            // arc end at that bridge point.
            let exit_eix = if forward { 1 } else { 0 };
            let exit = &sd.arcs[ai].ends[exit_eix];
            let (next, eix) = ends[exit.as_str()]
                .iter()
                .copied()
                .find(|&(x, e)| x != ai || e != exit_eix)
                .unwrap();
            ai = next;
            forward = eix == 0;
            if ai == start && forward {
                break;
            }
            if walk.len() > 2 * sd.arcs.len() {
                return Err(StructureError::OpenStrand(
                    "loop tracing failed to close".into(),
                ));
            }
        }
        loops.push(walk);
    }
    Ok(loops)
}

/// Number of closed loops formed by τ_i ∪ τ_{i+1} ∪ L_i (0-based `i`).
pub fn sector_link_components(sd: &PseudoShadow, i: u8) -> Result<usize, StructureError> {
    Ok(trace_loops(sd, &sector_families(i))?.len())
}

/// Euler characteristic of the encoded surface: F − |B|/2, where F is the
/// total loop count over the three sectors and B the set of bridge points.
pub fn surface_euler_characteristic(sd: &PseudoShadow) -> Result<i64, StructureError> {
    if sd.bridges.len() % 2 != 0 {
        return Err(StructureError::OddBridgeCount(format!(
            "{} bridge points",
            sd.bridges.len()
        )));
    }
    let mut f = 0i64;
    for i in 0..3 {
        f += sector_link_components(sd, i)? as i64;
    }
    Ok(f - (sd.bridges.len() as i64) / 2)
}

/// Outcome of the orientability test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrientabilityCertificate {
    /// A consistent source/sink labeling of the incidence graph: node name
    /// to "source" flag.  Nodes are bridge points and per-arc binding
    /// crossings (named `arc-label/k`).
    SourceSink(Vec<(String, bool)>),
    /// An odd cycle of node names, witnessing non-orientability.
    OddCycle(Vec<String>),
}

/// Whether the encoded surface is orientable: the graph of all arcs, with
/// vertices the bridge points and the arcs' binding intersections, must be
/// 2-colorable (every vertex a source or a sink; equivalently every cycle
/// has even length).
pub fn orientability(sd: &PseudoShadow) -> (bool, OrientabilityCertificate) {
    // Nodes: bridge labels, plus "arc/k" for the k-th binding crossing of
    // an arc.  Edges: the arc segments between consecutive nodes.
    let mut nodes: Vec<String> = sd.bridges.iter().map(|b| b.label.clone()).collect();
    let mut edges: Vec<(String, String)> = Vec::new();
    for a in &sd.arcs {
        let mut prev = a.ends[0].clone();
        for k in 0..a.binding_crossings.len() {
            let n = format!("{}/{}", a.label, k);
            nodes.push(n.clone());
            edges.push((prev, n.clone()));
            prev = n;
        }
        edges.push((prev, a.ends[1].clone()));
    }
    let idx: BTreeMap<&str, usize> = nodes.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
    for (u, v) in &edges {
        let (u, v) = (idx[u.as_str()], idx[v.as_str()]);
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut color: Vec<Option<bool>> = vec![None; nodes.len()];
    let mut parent: Vec<usize> = (0..nodes.len()).collect();
    for s in 0..nodes.len() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(true);
        let mut queue = vec![s];
        while let Some(u) = queue.pop() {
            for &v in &adj[u] {
                match color[v] {
                    None => {
                        color[v] = Some(!color[u].unwrap());
                        parent[v] = u;
                        queue.push(v);
                    }
                    Some(c) if c == color[u].unwrap() => {
                        // Odd cycle: walk both parent chains to the root.
                        let chain = |mut x: usize| -> Vec<usize> {
                            let mut out = vec![x];
                            while parent[x] != x {
                                x = parent[x];
                                out.push(x);
                            }
                            out
                        };
                        let (cu, cv) = (chain(u), chain(v));
                        let shared: BTreeSet<usize> = cu.iter().copied().collect();
                        let meet = *cv.iter().find(|x| shared.contains(x)).unwrap();
                        let mut cycle: Vec<String> = cu
                            .iter()
                            .take_while(|&&x| x != meet)
                            .map(|&x| nodes[x].clone())
                            .collect();
                        cycle.push(nodes[meet].clone());
                        let tail: Vec<String> = cv
                            .iter()
                            .take_while(|&&x| x != meet)
                            .map(|&x| nodes[x].clone())
                            .collect();
                        cycle.extend(tail.into_iter().rev());
                        return (false, OrientabilityCertificate::OddCycle(cycle));
                    }
                    _ => {}
                }
            }
        }
    }
    let labeling = nodes
        .iter()
        .zip(&color)
        .map(|(n, c)| (n.clone(), c.unwrap_or(true)))
        .collect();
    (true, OrientabilityCertificate::SourceSink(labeling))
}

/// Whether family `f` lies above family `g` when both cross in a surface.
/// The order is: L_{i−1} over L_i; τ_i over L_i; L_i over τ_{i+1};
/// τ_{i+1} over τ_i.
fn lies_above(f: Family, g: Family) -> Option<bool> {
    match (f, g) {
        (Family::Ell(a), Family::Ell(b)) if a == (b + 2) % 3 => Some(true),
        (Family::Ell(a), Family::Ell(b)) if b == (a + 2) % 3 => Some(false),
        (Family::Tau(a), Family::Ell(b)) if a == b => Some(true),
        (Family::Ell(a), Family::Tau(b)) if b == a => Some(false),
        (Family::Ell(a), Family::Tau(b)) if b == (a + 1) % 3 => Some(true),
        (Family::Tau(a), Family::Ell(b)) if a == (b + 1) % 3 => Some(false),
        (Family::Tau(a), Family::Tau(b)) if a == (b + 1) % 3 => Some(true),
        (Family::Tau(a), Family::Tau(b)) if b == (a + 1) % 3 => Some(false),
        _ => None,
    }
}

/// Whether a same-family crossing's drawn order is preserved on lifting:
/// L_i in Σ_{i+1} preserved, in Σ_i reversed; τ_i in Σ_i preserved, in
/// Σ_C reversed.
fn self_crossing_preserved(f: Family, surface: Role) -> Option<bool> {
    match (f, surface) {
        (Family::Ell(i), Role::S(j)) if j == (i + 1) % 3 => Some(true),
        (Family::Ell(i), Role::S(j)) if j == i => Some(false),
        (Family::Tau(i), Role::S(j)) if j == i => Some(true),
        (Family::Tau(_), Role::C) => Some(false),
        _ => None,
    }
}

/// A fully resolved crossing: which arc is over, and the sign after
/// composing the drawn sign with the diagram orientation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolvedCrossing {
    pub surface: Role,
    pub a: String,
    pub b: String,
    pub a_over: bool,
    pub sign: i8,
    pub a_pos: usize,
    pub b_pos: usize,
}

/// Resolves every crossing: cross-family over/under from the lies-above
/// order, same-family drawn flags preserved or reversed per surface, and
/// signs composed with the global orientation (reversing the binding
/// orientation negates every sign).
pub fn resolve_crossings(
    sd: &PseudoShadow,
    orientation: Option<&OrientationAssignment>,
) -> Result<Vec<ResolvedCrossing>, StructureError> {
    let orient = orientation.ok_or_else(|| {
        StructureError::MissingOrientation(
            "crossing resolution needs an orientation assignment".into(),
        )
    })?;
    let eps = orient
        .binding_directions
        .first()
        .map(|&(_, d)| d)
        .unwrap_or(1);
    let mut out = Vec::new();
    for c in &sd.crossings {
        let (_, a) = sd.arc(&c.a).ok_or_else(|| {
            StructureError::DanglingReference(format!("crossing references arc {}", c.a))
        })?;
        let (_, b) = sd.arc(&c.b).ok_or_else(|| {
            StructureError::DanglingReference(format!("crossing references arc {}", c.b))
        })?;
        let a_over = if a.family == b.family {
            let preserved = self_crossing_preserved(a.family, c.surface).ok_or_else(|| {
                StructureError::InvalidTarget(format!(
                    "family {} cannot self-cross in {}",
                    a.family.label(),
                    c.surface.label()
                ))
            })?;
            c.a_over == preserved
        } else {
            lies_above(a.family, b.family).ok_or_else(|| {
                StructureError::InvalidTarget(format!(
                    "no crossing order relates {} and {}",
                    a.family.label(),
                    b.family.label()
                ))
            })?
        };
        out.push(ResolvedCrossing {
            surface: c.surface,
            a: c.a.clone(),
            b: c.b.clone(),
            a_over,
            sign: c.sign * eps,
            a_pos: c.a_pos,
            b_pos: c.b_pos,
        });
    }
    Ok(out)
}

/// A link diagram as Gauss data: crossing signs, and per component the
/// ordered passes (crossing id, over?).  Each crossing must be passed
/// exactly twice, once over and once under.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkDiagram {
    pub crossing_signs: Vec<i8>,
    pub components: Vec<LinkComponent>,
}

/// One closed strand of a link diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkComponent {
    pub label: String,
    pub passes: Vec<(usize, bool)>,
}

impl LinkDiagram {
    /// Checks the Gauss data: every pass references a crossing, and every
    /// crossing is passed exactly once over and once under.
    pub fn validate(&self) -> Result<(), StructureError> {
        let mut over = vec![0usize; self.crossing_signs.len()];
        let mut under = vec![0usize; self.crossing_signs.len()];
        for comp in &self.components {
            for &(c, o) in &comp.passes {
                if c >= self.crossing_signs.len() {
                    return Err(StructureError::DanglingReference(format!(
                        "component {} passes unknown crossing {}",
                        comp.label, c
                    )));
                }
                if o {
                    over[c] += 1;
                } else {
                    under[c] += 1;
                }
            }
        }
        for c in 0..self.crossing_signs.len() {
            if over[c] != 1 || under[c] != 1 {
                return Err(StructureError::MalformedMap(format!(
                    "crossing {} passed {} time(s) over and {} under",
                    c, over[c], under[c]
                )));
            }
        }
        Ok(())
    }

    /// Writhe: the sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossing_signs.iter().map(|&s| s as i64).sum()
    }

    /// Gauss code, one line per component: passes as `O<id><sign>` or
    /// `U<id><sign>` separated by spaces, crossings numbered from 1.
    pub fn gauss_code(&self) -> String {
        self.components
            .iter()
            .map(|comp| {
                comp.passes
                    .iter()
                    .map(|&(c, o)| {
                        format!(
                            "{}{}{}",
                            if o { "O" } else { "U" },
                            c + 1,
                            if self.crossing_signs[c] >= 0 { "+" } else { "-" }
                        )
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Extracts the boundary link L₁ ∪ L₂ ∪ L₃ ⊂ ∂X as a link diagram, with
/// crossings restricted to L families and resolved by [`resolve_crossings`].
/// Requires the base's boundary restriction to be a valid standardized
/// three-sector diagram ([`StructureError::NotStandardized`] otherwise).
pub fn boundary_link(
    sd: &PseudoShadow,
    orientation: Option<&OrientationAssignment>,
) -> Result<LinkDiagram, StructureError> {
    let boundary = sd.base.restrict_boundary();
    let rep = boundary.validate();
    if !rep.pass() {
        return Err(StructureError::NotStandardized(format!(
            "boundary diagram not in standard position: {}",
            rep.failures.join("; ")
        )));
    }
    let resolved = resolve_crossings(sd, orientation)?;
    let fams = [Family::Ell(0), Family::Ell(1), Family::Ell(2)];
    let is_ell = |label: &str| -> bool {
        sd.arc(label)
            .map(|(_, a)| fams.contains(&a.family))
            .unwrap_or(false)
    };
    let link_cross: Vec<&ResolvedCrossing> = resolved
        .iter()
        .filter(|c| is_ell(&c.a) && is_ell(&c.b))
        .collect();
    let loops = trace_loops(sd, &fams)?;
    let mut components = Vec::new();
    for (li, walk) in loops.iter().enumerate() {
        let mut passes = Vec::new();
        for &(ai, forward) in walk {
            let label = &sd.arcs[ai].label;
            // All passes of this arc, ordered along the traversal.
            let mut here: Vec<(usize, usize, bool)> = Vec::new();
            for (ci, c) in link_cross.iter().enumerate() {
                if c.a == *label {
                    here.push((c.a_pos, ci, c.a_over));
                }
                if c.b == *label {
                    here.push((c.b_pos, ci, !c.a_over));
                }
            }
            here.sort_unstable();
            if !forward {
                here.reverse();
            }
            passes.extend(here.into_iter().map(|(_, ci, over)| (ci, over)));
        }
        components.push(LinkComponent {
            label: format!("K{}", li + 1),
            passes,
        });
    }
    let ld = LinkDiagram {
        crossing_signs: link_cross.iter().map(|c| c.sign).collect(),
        components,
    };
    ld.validate()?;
    Ok(ld)
}

/// A Laurent polynomial with integer coefficients in one formal variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentPoly {
    /// Exponent → coefficient, zero coefficients omitted.
    pub coeffs: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }
    pub fn monomial(exp: i64, coeff: i64) -> LaurentPoly {
        let mut p = LaurentPoly::default();
        p.add_term(exp, coeff);
        p
    }
    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial(0, 1)
    }
    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        let e = self.coeffs.entry(exp).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.coeffs.remove(&exp);
        }
    }
    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, &c) in &other.coeffs {
            out.add_term(e, c);
        }
        out
    }
    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::default();
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in &other.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
    /// Substitutes the variable by its inverse (mirror image on brackets).
    pub fn invert_variable(&self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }
    /// Renders with the given variable name, highest exponent first.
    pub fn display(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (&e, &c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let coeff_part = if mag != 1 || e == 0 {
                mag.to_string()
            } else {
                String::new()
            };
            out.push_str(&coeff_part);
            if e != 0 {
                out.push_str(var);
                if e != 1 {
                    out.push_str(&format!("^{}", e));
                }
            }
        }
        out
    }
}

/// Kauffman bracket state sum.  Each crossing is smoothed two ways; for a
/// positive crossing the A-smoothing is the oriented resolution and the
/// B-smoothing the disoriented one (and conversely for negative
/// crossings).  `fixed` pins one crossing to a chosen smoothing (used by
/// the skein-relation oracle), `reverse_order` enumerates the state space
/// backwards (used by the brute-force recomputation oracle).
fn bracket_states(
    ld: &LinkDiagram,
    fixed: Option<(usize, bool)>,
    reverse_order: bool,
) -> LaurentPoly {
    let n = ld.crossing_signs.len();
    // Arcs: segments between consecutive passes of each component; the
    // arc with global id offset[ci] + k leaves pass k of component ci and
    // ends at pass k+1 (cyclically).  Components without passes are
    // standalone loops.
    let mut offset = BTreeMap::new();
    let mut n_arcs = 0usize;
    for (ci, comp) in ld.components.iter().enumerate() {
        offset.insert(ci, n_arcs);
        n_arcs += comp.passes.len();
    }
    let free_loops = ld
        .components
        .iter()
        .filter(|c| c.passes.is_empty())
        .count();
    // For each crossing: the (in-arc, out-arc) of its over and under pass.
    let mut over_io = vec![(usize::MAX, usize::MAX); n];
    let mut under_io = vec![(usize::MAX, usize::MAX); n];
    for (ci, comp) in ld.components.iter().enumerate() {
        let m = comp.passes.len();
        for (k, &(cross, over)) in comp.passes.iter().enumerate() {
            let arc_out = offset[&ci] + k;
            let arc_in = offset[&ci] + (k + m - 1) % m;
            if over {
                over_io[cross] = (arc_in, arc_out);
            } else {
                under_io[cross] = (arc_in, arc_out);
            }
        }
    }
    let delta = {
        let mut d = LaurentPoly::monomial(2, -1);
        d.add_term(-2, -1);
        d
    };
    let mut total = LaurentPoly::zero();
    let states: Vec<u64> = if reverse_order {
        (0..(1u64 << n)).rev().collect()
    } else {
        (0..(1u64 << n)).collect()
    };
    for state in states {
        if let Some((c, a_smooth)) = fixed {
            if ((state >> c) & 1 == 0) != a_smooth {
                continue;
            }
        }
        let mut uf: Vec<usize> = (0..n_arcs).collect();
        fn find(uf: &mut Vec<usize>, mut x: usize) -> usize {
            while uf[x] != x {
                uf[x] = uf[uf[x]];
                x = uf[x];
            }
            x
        }
        let mut a_count = 0i64;
        for c in 0..n {
            let a_smooth = (state >> c) & 1 == 0;
            if fixed.map(|(fc, _)| fc == c).unwrap_or(false) {
                // The pinned crossing contributes no weight: its factor is
                // applied externally by the skein identity.
            } else if a_smooth {
                a_count += 1;
            } else {
                a_count -= 1;
            }
            let oriented = (ld.crossing_signs[c] > 0) == a_smooth;
            let (oi, oo) = over_io[c];
            let (ui, uo) = under_io[c];
            let pairs = if oriented {
                [(oi, uo), (ui, oo)]
            } else {
                [(oi, ui), (oo, uo)]
            };
            for (x, y) in pairs {
                let (rx, ry) = (find(&mut uf, x), find(&mut uf, y));
                uf[rx] = ry;
            }
        }
        let mut roots = BTreeSet::new();
        for x in 0..n_arcs {
            roots.insert(find(&mut uf, x));
        }
        let loops = roots.len() + free_loops;
        let mut term = LaurentPoly::monomial(a_count, 1);
        for _ in 1..loops {
            term = term.mul(&delta);
        }
        total = total.add(&term);
    }
    total
}

/// Kauffman bracket of a link diagram as a Laurent polynomial in A,
/// normalized so the 0-crossing unknot has bracket 1.
pub fn kauffman_bracket(ld: &LinkDiagram) -> Result<LaurentPoly, StructureError> {
    kauffman_bracket_bounded(ld, 16)
}

/// Kauffman bracket with an explicit crossing bound.
pub fn kauffman_bracket_bounded(
    ld: &LinkDiagram,
    bound: usize,
) -> Result<LaurentPoly, StructureError> {
    ld.validate()?;
    if ld.crossing_signs.len() > bound {
        return Err(StructureError::TooManyCrossings(format!(
            "{} crossings exceeds the bound {}",
            ld.crossing_signs.len(),
            bound
        )));
    }
    Ok(bracket_states(ld, None, false))
}

/// Jones polynomial in q = t^{1/2}: (−A)^{−3w}·⟨L⟩ with A = q^{−1}.
pub fn jones_polynomial(ld: &LinkDiagram) -> Result<LaurentPoly, StructureError> {
    let bracket = kauffman_bracket(ld)?;
    let w = ld.writhe();
    let sign = if (3 * w) % 2 == 0 { 1 } else { -1 };
    let shifted = bracket.mul(&LaurentPoly::monomial(-3 * w, sign));
    let mut out = LaurentPoly::default();
    for (&e, &c) in &shifted.coeffs {
        assert!(e % 2 == 0, "writhe-normalized bracket has odd exponent");
        out.add_term(-e / 2, c);
    }
    Ok(out)
}

/// Verifies the skein relation ⟨L⟩ = A·⟨L₀⟩ + A⁻¹·⟨L∞⟩ at the given
/// crossing by explicit resolution (partial state sums enumerated in
/// reverse order).
pub fn skein_check(ld: &LinkDiagram, crossing: usize) -> Result<(), StructureError> {
    ld.validate()?;
    if crossing >= ld.crossing_signs.len() {
        return Err(StructureError::InvalidTarget(format!(
            "no crossing {}",
            crossing
        )));
    }
    let total = bracket_states(ld, None, false);
    let l0 = bracket_states(ld, Some((crossing, true)), true);
    let linf = bracket_states(ld, Some((crossing, false)), true);
    let rhs = LaurentPoly::monomial(1, 1)
        .mul(&l0)
        .add(&LaurentPoly::monomial(-1, 1).mul(&linf));
    if total != rhs {
        return Err(StructureError::MalformedMap(format!(
            "skein relation fails at crossing {}: {} vs {}",
            crossing,
            total.display("A"),
            rhs.display("A")
        )));
    }
    Ok(())
}

/// Linking number of two distinct components: half the signed sum of their
/// shared crossings.
pub fn linking_number(ld: &LinkDiagram, a: usize, b: usize) -> Result<i64, StructureError> {
    if a == b {
        return Err(StructureError::SameComponent(format!(
            "linking number of component {} with itself",
            a
        )));
    }
    ld.validate()?;
    if a >= ld.components.len() || b >= ld.components.len() {
        return Err(StructureError::DanglingReference(format!(
            "components {}, {} of a {}-component link",
            a,
            b,
            ld.components.len()
        )));
    }
    let member = |comp: usize, cross: usize| {
        ld.components[comp].passes.iter().any(|&(c, _)| c == cross)
    };
    let mut sum = 0i64;
    for c in 0..ld.crossing_signs.len() {
        if member(a, c) && member(b, c) {
            sum += ld.crossing_signs[c] as i64;
        }
    }
    assert!(sum % 2 == 0, "inter-component crossings come in pairs");
    Ok(sum / 2)
}

/// One sector's lifted link diagram with its components partitioned into
/// the two surfaces being paired.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorLift {
    pub link: LinkDiagram,
    pub k_components: Vec<usize>,
    pub e_components: Vec<usize>,
}

/// The intersection pairing Q([K], [E]): the sum over sectors of linking
/// numbers between K-side and E-side components of each lifted diagram.
pub fn intersection_pairing(lifts: &[SectorLift]) -> Result<i64, StructureError> {
    let mut total = 0i64;
    for (si, lift) in lifts.iter().enumerate() {
        let mut seen = BTreeSet::new();
        for &c in lift.k_components.iter().chain(&lift.e_components) {
            if c >= lift.link.components.len() || !seen.insert(c) {
                return Err(StructureError::BadPartition(format!(
                    "sector {}: component {} repeated or out of range",
                    si + 1,
                    c
                )));
            }
        }
        for &a in &lift.k_components {
            for &b in &lift.e_components {
                total += linking_number(&lift.link, a, b)?;
            }
        }
    }
    Ok(total)
}

/// Structural validation of a shadow diagram: bridge-point degrees and
/// family assignments, arc endpoint and binding-crossing consistency,
/// crossing records, and loop closure in every sector.  The unlink
/// condition is checked up to the decidable necessary parts — loops close,
/// and embedded loops are null-homologous in their realized sector
/// boundary — and flagged as unverified beyond that.
pub fn validate_shadow(sd: &PseudoShadow) -> CheckReport {
    let mut rep = CheckReport::default();
    let base_rep = sd.base.validate();
    for f in &base_rep.failures {
        rep.fail(format!("base: {}", f));
    }
    let mut seen = BTreeSet::new();
    for b in &sd.bridges {
        if !seen.insert(b.label.clone()) {
            rep.fail(format!("duplicate bridge point {}", b.label));
        }
        if families_at(b.surface).is_none() {
            rep.fail(format!(
                "bridge point {} lies in invalid surface {}",
                b.label,
                b.surface.label()
            ));
        }
    }
    let circle_labels: BTreeSet<&str> = sd
        .base
        .diag
        .binding
        .iter()
        .map(|c| c.label.as_str())
        .collect();
    // Arc ends, and the surface each end lies in (walking the binding
    // crossings from the declared start surface).
    let mut end_families: BTreeMap<&str, Vec<Family>> = BTreeMap::new();
    let mut arc_labels = BTreeSet::new();
    for a in &sd.arcs {
        if !arc_labels.insert(a.label.clone()) {
            rep.fail(format!("duplicate arc label {}", a.label));
        }
        let Some((s0, s1)) = family_sheets(a.family) else {
            rep.fail(format!(
                "arc {} has family {}, which is not an arc family",
                a.label,
                a.family.label()
            ));
            continue;
        };
        for circle in &a.binding_crossings {
            if !circle_labels.contains(circle.as_str()) {
                rep.fail(format!(
                    "arc {} crosses unknown binding circle {}",
                    a.label, circle
                ));
            }
        }
        let mut ok = true;
        for end in &a.ends {
            match sd.bridge(end) {
                None => {
                    rep.fail(format!("arc {} ends at unknown bridge point {}", a.label, end));
                    ok = false;
                }
                Some(b) => {
                    if b.surface != s0 && b.surface != s1 {
                        rep.fail(format!(
                            "arc {} ({}) cannot end in {}",
                            a.label,
                            a.family.label(),
                            b.surface.label()
                        ));
                        ok = false;
                    }
                }
            }
        }
        if a.ends[0] == a.ends[1] {
            rep.fail(format!("arc {} has coincident endpoints", a.label));
            ok = false;
        }
        if ok {
            let (b0, b1) = (
                sd.bridge(&a.ends[0]).unwrap().surface,
                sd.bridge(&a.ends[1]).unwrap().surface,
            );
            let crossings_even = a.binding_crossings.len() % 2 == 0;
            if (b0 == b1) != crossings_even {
                rep.fail(format!(
                    "arc {} crosses the binding {} time(s) but runs {} → {}",
                    a.label,
                    a.binding_crossings.len(),
                    b0.label(),
                    b1.label()
                ));
            }
            for end in &a.ends {
                end_families.entry(end.as_str()).or_default().push(a.family);
            }
        }
    }
    for b in &sd.bridges {
        let Some(expected) = families_at(b.surface) else {
            continue;
        };
        let mut got = end_families.remove(b.label.as_str()).unwrap_or_default();
        got.sort_unstable();
        let mut want = expected.to_vec();
        want.sort_unstable();
        if got != want {
            rep.fail(format!(
                "bridge point {} has arc ends {:?}, expected one end of each of {:?}",
                b.label,
                got.iter().map(|f| f.label()).collect::<Vec<_>>(),
                want.iter().map(|f| f.label()).collect::<Vec<_>>()
            ));
        }
    }
    for c in &sd.crossings {
        let (fa, fb) = match (sd.arc(&c.a), sd.arc(&c.b)) {
            (Some((_, a)), Some((_, b))) => (a.family, b.family),
            _ => {
                rep.fail(format!(
                    "crossing references unknown arc(s) {} / {}",
                    c.a, c.b
                ));
                continue;
            }
        };
        let on = |f: Family| {
            family_sheets(f)
                .map(|(x, y)| x == c.surface || y == c.surface)
                .unwrap_or(false)
        };
        if !on(fa) || !on(fb) {
            rep.fail(format!(
                "crossing of {} and {} recorded in {}, where they cannot both lie",
                c.a,
                c.b,
                c.surface.label()
            ));
        }
        if c.sign != 1 && c.sign != -1 {
            rep.fail(format!("crossing of {} and {} has sign {}", c.a, c.b, c.sign));
        }
    }
    if rep.pass() {
        for i in 0..3u8 {
            match sector_link_components(sd, i) {
                Ok(n) => rep.notes.push(format!("sector {}: {} loop(s)", i + 1, n)),
                Err(e) => rep.fail(format!("sector {}: {}", i + 1, e)),
            }
        }
    }
    if rep.pass() && !sd.arcs.is_empty() {
        check_loop_homology(sd, &mut rep);
        rep.warnings.push(Warning::UnverifiedTriviality(
            "sector loops checked for closure and (where embedded) null-homology only; \
             unlink certification is out of scope"
                .into(),
        ));
    }
    rep
}

/// For each sector loop whose arcs all carry embedded dart walks, checks
/// that the loop is a closed walk and null-homologous (a ∂₂-image) in the
/// realized sector boundary.
fn check_loop_homology(sd: &PseudoShadow, rep: &mut CheckReport) {
    for i in 0..3u8 {
        let Ok(loops) = trace_loops(sd, &sector_families(i)) else {
            continue;
        };
        let triple = sd.base.sector_triple(i);
        let Ok(cc) = triple.realization_complex() else {
            continue;
        };
        // The 1-cells of the realization are the skeleton edges in
        // increasing id order.
        let mut edge_set = BTreeSet::new();
        for f in &triple.diag.cx.faces {
            if matches!(f.role, Role::S(_)) {
                for d in &f.walk {
                    edge_set.insert(d.edge());
                }
            }
        }
        let edge_idx: BTreeMap<usize, usize> =
            edge_set.iter().enumerate().map(|(j, &e)| (e, j)).collect();
        for (li, walk) in loops.iter().enumerate() {
            if walk.iter().any(|&(ai, _)| sd.arcs[ai].darts.is_empty()) {
                rep.notes.push(format!(
                    "sector {} loop {}: no embedding, null-homology unverified",
                    i + 1,
                    li + 1
                ));
                continue;
            }
            let mut z = vec![BigInt::zero(); edge_set.len()];
            let mut ok = true;
            for &(ai, forward) in walk {
                for &d in &sd.arcs[ai].darts {
                    let Some(&j) = edge_idx.get(&d.edge()) else {
                        rep.fail(format!(
                            "sector {} loop {}: arc {} leaves the sector skeleton",
                            i + 1,
                            li + 1,
                            sd.arcs[ai].label
                        ));
                        ok = false;
                        break;
                    };
                    let s = if d.is_forward() == forward { 1 } else { -1 };
                    z[j] += BigInt::from(s);
                }
            }
            if !ok {
                continue;
            }
            match in_image(&cc.maps[2], &z) {
                Ok(true) => rep.notes.push(format!(
                    "sector {} loop {}: null-homologous in the realized boundary",
                    i + 1,
                    li + 1
                )),
                Ok(false) => rep.fail(format!(
                    "sector {} loop {}: not null-homologous in the realized boundary",
                    i + 1,
                    li + 1
                )),
                Err(e) => rep.fail(format!("sector {} loop {}: {}", i + 1, li + 1, e)),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ptri::orient_ptri;
    use crate::zoo;

    fn oriented(sd: &PseudoShadow, forward: bool) -> OrientationAssignment {
        orient_ptri(&sd.base, "B1", forward).unwrap()
    }

    fn poly(pairs: &[(i64, i64)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for &(e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    fn unknot() -> LinkDiagram {
        LinkDiagram {
            crossing_signs: vec![],
            components: vec![LinkComponent { label: "K1".into(), passes: vec![] }],
        }
    }

    /// The positive Hopf link: two components sharing two positive
    /// crossings, each over at one and under at the other.
    fn hopf_link() -> LinkDiagram {
        LinkDiagram {
            crossing_signs: vec![1, 1],
            components: vec![
                LinkComponent { label: "A".into(), passes: vec![(0, true), (1, false)] },
                LinkComponent { label: "B".into(), passes: vec![(0, false), (1, true)] },
            ],
        }
    }

    #[test]
    fn disk_shadow_is_a_disk_with_unknotted_boundary() {
        let sd = zoo::disk_in_b4_shadow();
        let rep = validate_shadow(&sd);
        assert!(rep.pass(), "{:?}", rep.failures);
        for i in 0..3 {
            assert_eq!(sector_link_components(&sd, i).unwrap(), 1);
        }
        assert_eq!(surface_euler_characteristic(&sd).unwrap(), 1);
        assert!(orientability(&sd).0);
        let ld = boundary_link(&sd, Some(&oriented(&sd, true))).unwrap();
        assert_eq!(ld.components.len(), 1);
        assert_eq!(ld.crossing_signs.len(), 0);
        assert_eq!(kauffman_bracket(&ld).unwrap(), LaurentPoly::one());
        assert_eq!(jones_polynomial(&ld).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn shadow_validation_flags_triviality_as_unverified() {
        let rep = validate_shadow(&zoo::disk_in_b4_shadow());
        assert!(rep
            .warnings
            .iter()
            .any(|w| w.to_string().starts_with("UNVERIFIED-TRIVIALITY")));
    }

    #[test]
    fn embedded_disk_loops_are_null_homologous() {
        let sd = zoo::embedded_disk_b4_shadow();
        let rep = validate_shadow(&sd);
        assert!(rep.pass(), "{:?}", rep.failures);
        let hits = rep
            .notes
            .iter()
            .filter(|n| n.contains("null-homologous"))
            .count();
        assert_eq!(hits, 3, "{:?}", rep.notes);
    }

    #[test]
    fn non_cycle_embedding_fails_the_homology_check() {
        let mut sd = zoo::embedded_disk_b4_shadow();
        let tau2 = sd.arcs.iter_mut().find(|a| a.label == "tau2").unwrap();
        tau2.darts = vec![Dart::fwd(1)];
        let rep = validate_shadow(&sd);
        assert!(!rep.pass());
        assert!(rep
            .failures
            .iter()
            .any(|f| f.contains("not null-homologous")));
    }

    #[test]
    fn trefoil_shadow_boundary_is_the_left_handed_trefoil() {
        let sd = zoo::trefoil_b4_shadow();
        let rep = validate_shadow(&sd);
        assert!(rep.pass(), "{:?}", rep.failures);
        assert_eq!(surface_euler_characteristic(&sd).unwrap(), -1);
        assert!(orientability(&sd).0);
        let orient = oriented(&sd, true);
        assert_eq!(orient.binding_directions[0].1, 1);
        let ld = boundary_link(&sd, Some(&orient)).unwrap();
        assert_eq!(ld.components.len(), 1);
        assert_eq!(ld.crossing_signs, vec![-1, -1, -1]);
        assert_eq!(ld.gauss_code(), "O1- U2- O3- U1- O2- U3-");
        assert_eq!(
            jones_polynomial(&ld).unwrap(),
            poly(&[(-8, -1), (-6, 1), (-2, 1)])
        );
    }

    #[test]
    fn orientation_reversal_mirrors_the_boundary() {
        let sd = zoo::trefoil_b4_shadow();
        let ld = boundary_link(&sd, Some(&oriented(&sd, true))).unwrap();
        let mirror = boundary_link(&sd, Some(&oriented(&sd, false))).unwrap();
        assert_eq!(mirror.crossing_signs, vec![1, 1, 1]);
        assert_eq!(
            jones_polynomial(&mirror).unwrap(),
            jones_polynomial(&ld).unwrap().invert_variable()
        );
    }

    #[test]
    fn moebius_shadow_is_nonorientable_with_unknotted_boundary() {
        let sd = zoo::moebius_cp2_shadow();
        let rep = validate_shadow(&sd);
        assert!(rep.pass(), "{:?}", rep.failures);
        assert_eq!(surface_euler_characteristic(&sd).unwrap(), 0);
        let (orientable, cert) = orientability(&sd);
        assert!(!orientable);
        match cert {
            OrientabilityCertificate::OddCycle(cycle) => {
                assert_eq!(cycle.len() % 2, 1, "cycle {:?}", cycle);
                for node in &cycle {
                    assert!(["b1", "b2", "b3"].contains(&node.as_str()), "{:?}", cycle);
                }
            }
            other => panic!("expected an odd cycle, got {:?}", other),
        }
        let ld = boundary_link(&sd, Some(&oriented(&sd, true))).unwrap();
        assert_eq!(ld.components.len(), 1);
        assert_eq!(ld.crossing_signs.len(), 0);
    }

    #[test]
    fn slice_disk_shadow_has_disk_euler_characteristic() {
        let sd = zoo::lht_slice_disk_shadow();
        let rep = validate_shadow(&sd);
        assert!(rep.pass(), "{:?}", rep.failures);
        for i in 0..3 {
            assert_eq!(sector_link_components(&sd, i).unwrap(), 2);
        }
        assert_eq!(sd.bridges.len(), 10);
        assert_eq!(surface_euler_characteristic(&sd).unwrap(), 1);
        let ld = boundary_link(&sd, Some(&oriented(&sd, true))).unwrap();
        assert_eq!(
            jones_polynomial(&ld).unwrap(),
            poly(&[(-8, -1), (-6, 1), (-2, 1)])
        );
    }

    #[test]
    fn sphere_shadow_is_closed_and_orientable() {
        let sd = zoo::cp1_cp2_shadow();
        let rep = validate_shadow(&sd);
        assert!(rep.pass(), "{:?}", rep.failures);
        assert_eq!(surface_euler_characteristic(&sd).unwrap(), 2);
        assert!(orientability(&sd).0);
        let ld = boundary_link(&sd, Some(&oriented(&sd, true))).unwrap();
        assert!(ld.components.is_empty());
    }

    #[test]
    fn bracket_of_unknot_and_hopf_link() {
        assert_eq!(kauffman_bracket(&unknot()).unwrap(), LaurentPoly::one());
        let hopf = hopf_link();
        assert_eq!(
            kauffman_bracket(&hopf).unwrap(),
            poly(&[(4, -1), (-4, -1)])
        );
        assert_eq!(jones_polynomial(&hopf).unwrap(), poly(&[(1, -1), (5, -1)]));
        assert_eq!(linking_number(&hopf, 0, 1).unwrap(), 1);
        assert_eq!(linking_number(&hopf, 1, 0).unwrap(), 1);
        assert!(matches!(
            linking_number(&hopf, 0, 0),
            Err(StructureError::SameComponent(_))
        ));
        for c in 0..2 {
            skein_check(&hopf, c).unwrap();
        }
    }

    #[test]
    fn skein_relation_holds_on_the_trefoil_boundary() {
        let sd = zoo::trefoil_b4_shadow();
        let ld = boundary_link(&sd, Some(&oriented(&sd, true))).unwrap();
        for c in 0..ld.crossing_signs.len() {
            skein_check(&ld, c).unwrap();
        }
    }

    #[test]
    fn crossing_bound_is_enforced() {
        let n = 17;
        let ld = LinkDiagram {
            crossing_signs: vec![1; n],
            components: vec![LinkComponent {
                label: "K1".into(),
                passes: (0..n).flat_map(|c| [(c, true), (c, false)]).collect(),
            }],
        };
        ld.validate().unwrap();
        assert!(matches!(
            kauffman_bracket(&ld),
            Err(StructureError::TooManyCrossings(_))
        ));
    }

    #[test]
    fn validation_rejects_structural_errors() {
        // Dropping an arc leaves two bridge points with the wrong degree.
        let mut sd = zoo::disk_in_b4_shadow();
        sd.arcs.retain(|a| a.label != "L1");
        assert!(!validate_shadow(&sd).pass());

        // An L arc between different surfaces must cross the binding an
        // odd number of times.
        let mut sd = zoo::disk_in_b4_shadow();
        sd.arcs[0].binding_crossings.clear();
        assert!(!validate_shadow(&sd).pass());

        // A crossing recorded in a surface neither arc can reach.
        let mut sd = zoo::disk_in_b4_shadow();
        sd.crossings.push(ShadowCrossing {
            surface: Role::S(2),
            a: "L1".into(),
            b: "L1".into(),
            a_over: true,
            sign: 1,
            a_pos: 0,
            b_pos: 1,
        });
        assert!(!validate_shadow(&sd).pass());
    }

    #[test]
    fn crossing_resolution_requires_an_orientation() {
        let sd = zoo::trefoil_b4_shadow();
        assert!(matches!(
            resolve_crossings(&sd, None),
            Err(StructureError::MissingOrientation(_))
        ));
    }

    /// One sector's lift with linking number 1 between its K and E sides.
    fn linked_lift() -> SectorLift {
        SectorLift {
            link: LinkDiagram {
                crossing_signs: vec![1, 1],
                components: vec![
                    LinkComponent { label: "g1".into(), passes: vec![(0, false), (1, false)] },
                    LinkComponent { label: "g2".into(), passes: vec![] },
                    LinkComponent { label: "e".into(), passes: vec![(0, true), (1, true)] },
                ],
            },
            k_components: vec![0, 1],
            e_components: vec![2],
        }
    }

    fn split_lift() -> SectorLift {
        SectorLift {
            link: LinkDiagram {
                crossing_signs: vec![],
                components: vec![
                    LinkComponent { label: "g".into(), passes: vec![] },
                    LinkComponent { label: "e".into(), passes: vec![] },
                ],
            },
            k_components: vec![0],
            e_components: vec![1],
        }
    }

    #[test]
    fn intersection_pairing_sums_sector_linking_numbers() {
        let lifts = vec![split_lift(), linked_lift(), linked_lift()];
        assert_eq!(intersection_pairing(&lifts).unwrap(), 2);

        // The pairing is symmetric in the two surface classes.
        let swapped: Vec<SectorLift> = lifts
            .iter()
            .map(|l| SectorLift {
                link: l.link.clone(),
                k_components: l.e_components.clone(),
                e_components: l.k_components.clone(),
            })
            .collect();
        assert_eq!(intersection_pairing(&swapped).unwrap(), 2);

        let mut bad = linked_lift();
        bad.e_components = vec![0];
        assert!(matches!(
            intersection_pairing(&[bad]),
            Err(StructureError::BadPartition(_))
        ));
    }
}
