//! The diagram file format: a JSON object per file, one diagram per file,
//! with extensions `.thd` (three-sector), `.ptd` (four-sector), `.shd`
//! (shadow), and `.lnk` (link).  Canonical serialization is sorted keys,
//! minimal whitespace, and a trailing LF; parse ∘ serialize is the
//! identity on canonical files.  Files carry expected-invariant metadata
//! so the corpus is self-testing.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cell::Complex;
use crate::diagram::Diagram;
use crate::ptri::{orient_ptri, PseudoTrisection};
use crate::report::StructureError;
use crate::shadow::{self, LinkDiagram, PseudoShadow};
use crate::triheeg::{CheckReport, TripleHeegaard};

/// The current (and only) file format version.
pub const FORMAT_VERSION: &str = "1";

/// Component partition for intersection-pairing inputs: which link
/// components lie on each of the two surfaces being paired.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftPartition {
    pub k: Vec<usize>,
    pub e: Vec<usize>,
}

/// Descriptive and self-test data attached to a diagram file.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub name: String,
    /// Free-form notes, including any transcription choices the encoding
    /// makes where the source drawing is ambiguous.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
    /// Expected invariants, checked by [`self_test`].
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub expected: BTreeMap<String, serde_json::Value>,
    /// For link files used as intersection-pairing lifts.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<LiftPartition>,
}

/// The diagram payload, tagged by kind.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "diagram", rename_all = "snake_case")]
pub enum Content {
    Triheeg(TripleHeegaard),
    Ptri(PseudoTrisection),
    Shadow(PseudoShadow),
    Link(LinkDiagram),
}

impl Content {
    /// The file extension conventional for this kind.
    pub fn extension(&self) -> &'static str {
        match self {
            Content::Triheeg(_) => "thd",
            Content::Ptri(_) => "ptd",
            Content::Shadow(_) => "shd",
            Content::Link(_) => "lnk",
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Content::Triheeg(_) => "triheeg",
            Content::Ptri(_) => "ptri",
            Content::Shadow(_) => "shadow",
            Content::Link(_) => "link",
        }
    }
}

/// One diagram file: version, metadata, and the tagged payload.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagramFile {
    pub format_version: String,
    pub metadata: Metadata,
    #[serde(flatten)]
    pub content: Content,
}

impl DiagramFile {
    pub fn new(name: &str, content: Content) -> DiagramFile {
        DiagramFile {
            format_version: FORMAT_VERSION.into(),
            metadata: Metadata { name: name.into(), ..Metadata::default() },
            content,
        }
    }
}

/// Serializes to the canonical byte form: JSON with sorted keys, minimal
/// whitespace, and a trailing newline.
pub fn serialize(file: &DiagramFile) -> Vec<u8> {
    // serde_json's default map representation keeps keys sorted, so
    // passing through `Value` yields the canonical ordering.
    let value = serde_json::to_value(file).expect("diagram files are serializable");
    let mut out = serde_json::to_string(&value).expect("JSON values print").into_bytes();
    out.push(b'\n');
    out
}

/// Parses a diagram file, checking the version and that every internal
/// reference resolves.
pub fn parse(bytes: &[u8]) -> Result<DiagramFile, StructureError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| StructureError::SyntaxError(format!("not UTF-8: {}", e)))?;
    let file: DiagramFile = serde_json::from_str(text).map_err(|e| {
        StructureError::SyntaxError(format!(
            "line {}, column {}: {}",
            e.line(),
            e.column(),
            e
        ))
    })?;
    if file.format_version != FORMAT_VERSION {
        return Err(StructureError::VersionMismatch(format!(
            "file has format version {:?}, this build reads {:?}",
            file.format_version, FORMAT_VERSION
        )));
    }
    check_references(&file.content)?;
    Ok(file)
}

fn check_complex_refs(cx: &Complex, what: &str) -> Result<(), StructureError> {
    for (ei, &(t, h)) in cx.edges.iter().enumerate() {
        if t >= cx.n_vertices || h >= cx.n_vertices {
            return Err(StructureError::DanglingReference(format!(
                "{}: edge {} joins vertices ({}, {}) but only {} vertices exist",
                what, ei, t, h, cx.n_vertices
            )));
        }
    }
    for (fi, f) in cx.faces.iter().enumerate() {
        for d in &f.walk {
            if d.edge() >= cx.edges.len() {
                return Err(StructureError::DanglingReference(format!(
                    "{}: face {} references edge {} of {}",
                    what,
                    fi,
                    d.edge(),
                    cx.edges.len()
                )));
            }
        }
    }
    Ok(())
}

fn check_diagram_refs(diag: &Diagram, what: &str) -> Result<(), StructureError> {
    check_complex_refs(&diag.cx, what)?;
    for circle in &diag.binding {
        for d in &circle.darts {
            if d.edge() >= diag.cx.edges.len() {
                return Err(StructureError::DanglingReference(format!(
                    "{}: binding circle {} references edge {} of {}",
                    what,
                    circle.label,
                    d.edge(),
                    diag.cx.edges.len()
                )));
            }
        }
    }
    for c in &diag.curves {
        for d in &c.darts {
            if d.edge() >= diag.cx.edges.len() {
                return Err(StructureError::DanglingReference(format!(
                    "{}: curve {} references edge {} of {}",
                    what,
                    c.family.label(),
                    d.edge(),
                    diag.cx.edges.len()
                )));
            }
        }
    }
    Ok(())
}

/// Checks that every reference inside the payload resolves: edge and
/// vertex indices in range, shadow arcs ending at declared bridge points,
/// link passes naming existing crossings.
pub fn check_references(content: &Content) -> Result<(), StructureError> {
    match content {
        Content::Triheeg(th) => check_diagram_refs(&th.diag, "three-sector diagram"),
        Content::Ptri(pt) => check_diagram_refs(&pt.diag, "four-sector diagram"),
        Content::Shadow(sd) => {
            check_diagram_refs(&sd.base.diag, "shadow base")?;
            let bridges: std::collections::BTreeSet<&str> =
                sd.bridges.iter().map(|b| b.label.as_str()).collect();
            let arcs: std::collections::BTreeSet<&str> =
                sd.arcs.iter().map(|a| a.label.as_str()).collect();
            for a in &sd.arcs {
                for end in &a.ends {
                    if !bridges.contains(end.as_str()) {
                        return Err(StructureError::DanglingReference(format!(
                            "arc {} ends at undeclared bridge point {}",
                            a.label, end
                        )));
                    }
                }
                for d in &a.darts {
                    if d.edge() >= sd.base.diag.cx.edges.len() {
                        return Err(StructureError::DanglingReference(format!(
                            "arc {} references edge {} of {}",
                            a.label,
                            d.edge(),
                            sd.base.diag.cx.edges.len()
                        )));
                    }
                }
            }
            for c in &sd.crossings {
                for label in [&c.a, &c.b] {
                    if !arcs.contains(label.as_str()) {
                        return Err(StructureError::DanglingReference(format!(
                            "crossing references undeclared arc {}",
                            label
                        )));
                    }
                }
            }
            Ok(())
        }
        Content::Link(ld) => {
            for comp in &ld.components {
                for &(c, _) in &comp.passes {
                    if c >= ld.crossing_signs.len() {
                        return Err(StructureError::DanglingReference(format!(
                            "component {} passes crossing {} of {}",
                            comp.label,
                            c,
                            ld.crossing_signs.len()
                        )));
                    }
                }
            }
            Ok(())
        }
    }
}

fn json_int(n: i64) -> serde_json::Value {
    serde_json::Value::from(n)
}

/// Recomputes the invariants a file is allowed to pin in its `expected`
/// metadata.  Keys: three-sector files support `complexity`, `b`, `h1`;
/// four-sector files `c`, `c_pair`, `c_boundary`, `chi`, `g`, `b`, `k`;
/// shadow files `euler`, `orientable`, `bridges`, `boundary_components`,
/// `boundary_crossings`, `jones_q`; link files `components`, `crossings`,
/// `writhe`, `gauss`, `jones_q`.
fn recompute(content: &Content, key: &str) -> Result<serde_json::Value, StructureError> {
    let unknown = || {
        StructureError::SyntaxError(format!(
            "unknown expected-invariant key {:?} for kind {:?}",
            key,
            content.kind_name()
        ))
    };
    match content {
        Content::Triheeg(th) => match key {
            "complexity" => Ok(json_int(th.complexity()? as i64)),
            "b" => Ok(json_int(th.indices()?.b as i64)),
            "h1" => {
                let h = th.realize_homology()?;
                Ok(serde_json::Value::from(h[1].to_string()))
            }
            _ => Err(unknown()),
        },
        Content::Ptri(pt) => {
            let ix = pt.indices()?;
            match key {
                "c" => Ok(json_int(ix.c)),
                "c_pair" => Ok(json_int(ix.c_pair)),
                "c_boundary" => Ok(json_int(ix.c_boundary)),
                "chi" => Ok(json_int(ix.chi)),
                "g" => Ok(json_int(ix.g as i64)),
                "b" => Ok(json_int(ix.b as i64)),
                "k" => Ok(serde_json::to_value(ix.k).expect("arrays serialize")),
                _ => Err(unknown()),
            }
        }
        Content::Shadow(sd) => match key {
            "euler" => Ok(json_int(shadow::surface_euler_characteristic(sd)?)),
            "orientable" => Ok(serde_json::Value::from(shadow::orientability(sd).0)),
            "bridges" => Ok(json_int(sd.bridges.len() as i64)),
            "boundary_components" | "boundary_crossings" | "jones_q" => {
                let circle = sd
                    .base
                    .diag
                    .binding
                    .first()
                    .map(|c| c.label.clone())
                    .ok_or_else(|| {
                        StructureError::MalformedMap("shadow base has no binding".into())
                    })?;
                let orient = orient_ptri(&sd.base, &circle, true)?;
                let ld = shadow::boundary_link(sd, Some(&orient))?;
                match key {
                    "boundary_components" => Ok(json_int(ld.components.len() as i64)),
                    "boundary_crossings" => Ok(json_int(ld.crossing_signs.len() as i64)),
                    _ => Ok(serde_json::Value::from(
                        shadow::jones_polynomial(&ld)?.display("q"),
                    )),
                }
            }
            _ => Err(unknown()),
        },
        Content::Link(ld) => match key {
            "components" => Ok(json_int(ld.components.len() as i64)),
            "crossings" => Ok(json_int(ld.crossing_signs.len() as i64)),
            "writhe" => Ok(json_int(ld.writhe())),
            "gauss" => Ok(serde_json::Value::from(ld.gauss_code())),
            "jones_q" => Ok(serde_json::Value::from(
                shadow::jones_polynomial(ld)?.display("q"),
            )),
            _ => Err(unknown()),
        },
    }
}

/// Runs the payload's structural validator and re-derives every expected
/// invariant recorded in the metadata, reporting mismatches.
pub fn self_test(file: &DiagramFile) -> CheckReport {
    let mut rep = match &file.content {
        Content::Triheeg(th) => th.validate(),
        Content::Ptri(pt) => pt.validate(),
        Content::Shadow(sd) => shadow::validate_shadow(sd),
        Content::Link(ld) => {
            let mut rep = CheckReport::default();
            if let Err(e) = ld.validate() {
                rep.fail(e);
            }
            rep
        }
    };
    for (key, want) in &file.metadata.expected {
        match recompute(&file.content, key) {
            Ok(got) if &got == want => {
                rep.notes.push(format!("{} = {} as expected", key, got));
            }
            Ok(got) => rep.fail(format!("{}: expected {}, recomputed {}", key, want, got)),
            Err(e) => rep.fail(format!("{}: {}", key, e)),
        }
    }
    rep
}
