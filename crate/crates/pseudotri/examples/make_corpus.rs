//! Regenerates the self-testing diagram corpus under `corpus/`.
//!
//! Every file carries expected-invariant metadata; after writing, each file
//! is re-parsed and self-tested, so a drift between the stored literals and
//! the library's computations fails loudly here.

use std::collections::BTreeMap;
use std::path::PathBuf;

use serde_json::{json, Value};

use pseudotri::format::{self, Content, DiagramFile, LiftPartition, Metadata};
use pseudotri::shadow::{LinkComponent, LinkDiagram};
use pseudotri::zoo;

fn expected(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn file(
    name: &str,
    comment: Option<&str>,
    exp: &[(&str, Value)],
    partition: Option<LiftPartition>,
    content: Content,
) -> DiagramFile {
    DiagramFile {
        format_version: format::FORMAT_VERSION.into(),
        metadata: Metadata {
            name: name.into(),
            comment: comment.map(|c| c.into()),
            expected: expected(exp),
            partition,
        },
        content,
    }
}

/// One sector lift of the projective-line/slice-disk pairing computation:
/// the slice-disk lift is a split unknot beside the line's lift.
fn split_lift_link() -> LinkDiagram {
    LinkDiagram {
        crossing_signs: vec![],
        components: vec![
            LinkComponent { label: "g".into(), passes: vec![] },
            LinkComponent { label: "e".into(), passes: vec![] },
        ],
    }
}

/// A sector lift where the two generic fibers of the line's lift each link
/// the disk's lift once: linking number contribution +1.
fn linked_lift_link() -> LinkDiagram {
    LinkDiagram {
        crossing_signs: vec![1, 1],
        components: vec![
            LinkComponent { label: "g1".into(), passes: vec![(0, false), (1, false)] },
            LinkComponent { label: "g2".into(), passes: vec![] },
            LinkComponent { label: "e".into(), passes: vec![(0, true), (1, true)] },
        ],
    }
}

fn hopf_link() -> LinkDiagram {
    LinkDiagram {
        crossing_signs: vec![1, 1],
        components: vec![
            LinkComponent { label: "A".into(), passes: vec![(0, true), (1, false)] },
            LinkComponent { label: "B".into(), passes: vec![(0, false), (1, true)] },
        ],
    }
}

fn lht_trefoil() -> LinkDiagram {
    LinkDiagram {
        crossing_signs: vec![-1, -1, -1],
        components: vec![LinkComponent {
            label: "K".into(),
            passes: vec![(0, true), (1, false), (2, true), (0, false), (1, true), (2, false)],
        }],
    }
}

fn corpus() -> Vec<DiagramFile> {
    vec![
        // Three-sector diagrams.
        file(
            "trivial_s3",
            Some("genus-0 diagram of the three-sphere: one vertex class, empty cut systems"),
            &[("complexity", json!(0)), ("b", json!(1)), ("h1", json!("0"))],
            None,
            Content::Triheeg(zoo::trivial_s3()),
        ),
        file(
            "s1s2",
            Some("genus-1 Heegaard diagram of S1xS2 spread over three sectors"),
            &[("complexity", json!(2)), ("b", json!(1)), ("h1", json!("Z"))],
            None,
            Content::Triheeg(zoo::s1s2_heegaard()),
        ),
        file(
            "two_s1s2",
            Some("three annuli over two binding circles; the minimal diagram of (S1xS2)#(S1xS2)"),
            &[("complexity", json!(3)), ("b", json!(2)), ("h1", json!("Z^2"))],
            None,
            Content::Triheeg(zoo::two_s1s2()),
        ),
        file(
            "t3",
            Some("three-torus diagram; cut systems of sizes 3, 2, 1"),
            &[("complexity", json!(6)), ("b", json!(1)), ("h1", json!("Z^3"))],
            None,
            Content::Triheeg(zoo::t3()),
        ),
        // Four-sector diagrams (complexity table rows).
        file(
            "trivial_b4",
            Some("trivial decomposition of the four-ball"),
            &[
                ("c", json!(0)),
                ("c_pair", json!(0)),
                ("c_boundary", json!(0)),
                ("chi", json!(1)),
                ("g", json!(0)),
                ("b", json!(1)),
                ("k", json!([0, 0, 0])),
            ],
            None,
            Content::Ptri(zoo::trivial_b4()),
        ),
        file(
            "s1xb3",
            Some("S1 x B3: one-holed-torus sector surface, boundary S1xS2"),
            &[
                ("c", json!(1)),
                ("c_pair", json!(3)),
                ("c_boundary", json!(2)),
                ("chi", json!(0)),
                ("g", json!(0)),
                ("b", json!(1)),
                ("k", json!([1, 1, 0])),
            ],
            None,
            Content::Ptri(zoo::s1_b3()),
        ),
        file(
            "s2xd2",
            Some("S2 x D2: one-holed-torus sector surface with a cut curve, boundary S1xS2"),
            &[
                ("c", json!(1)),
                ("c_pair", json!(3)),
                ("c_boundary", json!(2)),
                ("chi", json!(2)),
                ("g", json!(0)),
                ("b", json!(1)),
                ("k", json!([0, 0, 0])),
            ],
            None,
            Content::Ptri(zoo::s2_d2()),
        ),
        file(
            "cp2_minus_b4",
            Some("complex projective plane minus a ball: one-holed-torus central surface"),
            &[
                ("c", json!(1)),
                ("c_pair", json!(1)),
                ("c_boundary", json!(0)),
                ("chi", json!(2)),
                ("g", json!(1)),
                ("b", json!(1)),
                ("k", json!([0, 0, 0])),
            ],
            None,
            Content::Ptri(zoo::cp2_minus_b4()),
        ),
        file(
            "two_s2xd2",
            Some(
                "boundary sum of two copies of S2 x D2, drawn minimally: annular central \
                 surface over two binding circles",
            ),
            &[
                ("c", json!(2)),
                ("c_pair", json!(5)),
                ("c_boundary", json!(3)),
                ("chi", json!(3)),
                ("g", json!(0)),
                ("b", json!(2)),
                ("k", json!([0, 0, 0])),
            ],
            None,
            Content::Ptri(zoo::two_s2d2()),
        ),
        // Shadow diagrams.
        file(
            "disk_b4",
            Some("boundary-parallel disk in the four-ball; abstract strands without sector darts"),
            &[
                ("euler", json!(1)),
                ("orientable", json!(true)),
                ("bridges", json!(4)),
                ("boundary_components", json!(1)),
                ("boundary_crossings", json!(0)),
                ("jones_q", json!("1")),
            ],
            None,
            Content::Shadow(zoo::disk_in_b4_shadow()),
        ),
        file(
            "disk_b4_embedded",
            Some("the same disk with strands drawn as explicit sector arcs"),
            &[
                ("euler", json!(1)),
                ("orientable", json!(true)),
                ("bridges", json!(4)),
                ("boundary_components", json!(1)),
                ("boundary_crossings", json!(0)),
                ("jones_q", json!("1")),
            ],
            None,
            Content::Shadow(zoo::embedded_disk_b4_shadow()),
        ),
        file(
            "trefoil_surface",
            Some(
                "genus-1 surface in the four-ball bounding the left-handed trefoil; \
                 three negative same-family crossings",
            ),
            &[
                ("euler", json!(-1)),
                ("orientable", json!(true)),
                ("bridges", json!(8)),
                ("boundary_components", json!(1)),
                ("boundary_crossings", json!(3)),
                ("jones_q", json!("q^-2 + q^-6 - q^-8")),
            ],
            None,
            Content::Shadow(zoo::trefoil_b4_shadow()),
        ),
        file(
            "moebius",
            Some("Moebius band in the punctured projective plane; unknotted boundary"),
            &[
                ("euler", json!(0)),
                ("orientable", json!(false)),
                ("bridges", json!(6)),
                ("boundary_components", json!(1)),
                ("boundary_crossings", json!(0)),
                ("jones_q", json!("1")),
            ],
            None,
            Content::Shadow(zoo::moebius_cp2_shadow()),
        ),
        file(
            "lht_slice_disk",
            Some("slice disk for the left-handed trefoil in the punctured projective plane"),
            &[
                ("euler", json!(1)),
                ("orientable", json!(true)),
                ("bridges", json!(10)),
                ("boundary_components", json!(1)),
                ("boundary_crossings", json!(3)),
                ("jones_q", json!("q^-2 + q^-6 - q^-8")),
            ],
            None,
            Content::Shadow(zoo::lht_slice_disk_shadow()),
        ),
        file(
            "cp1",
            Some("the projective line in the punctured projective plane; closed surface, empty boundary"),
            &[
                ("euler", json!(2)),
                ("orientable", json!(true)),
                ("bridges", json!(2)),
                ("boundary_components", json!(0)),
                ("boundary_crossings", json!(0)),
            ],
            None,
            Content::Shadow(zoo::cp1_cp2_shadow()),
        ),
        // Link fixtures.
        file(
            "hopf",
            Some("positive Hopf link"),
            &[
                ("components", json!(2)),
                ("crossings", json!(2)),
                ("writhe", json!(2)),
                ("jones_q", json!("-q^5 - q")),
            ],
            None,
            Content::Link(hopf_link()),
        ),
        file(
            "lht_trefoil",
            Some("left-handed trefoil, all crossings negative"),
            &[
                ("components", json!(1)),
                ("crossings", json!(3)),
                ("writhe", json!(-3)),
                ("gauss", json!("O1- U2- O3- U1- O2- U3-")),
                ("jones_q", json!("q^-2 + q^-6 - q^-8")),
            ],
            None,
            Content::Link(lht_trefoil()),
        ),
        file(
            "cp1_lht_lift_1",
            Some(
                "sector-1 lift of the line and slice-disk pair: split, linking \
                 contribution 0; partition = line components vs disk component",
            ),
            &[("components", json!(2)), ("crossings", json!(0)), ("writhe", json!(0))],
            Some(LiftPartition { k: vec![0], e: vec![1] }),
            Content::Link(split_lift_link()),
        ),
        file(
            "cp1_lht_lift_2",
            Some("sector-2 lift: one generic fiber links the disk once"),
            &[("components", json!(3)), ("crossings", json!(2)), ("writhe", json!(2))],
            Some(LiftPartition { k: vec![0, 1], e: vec![2] }),
            Content::Link(linked_lift_link()),
        ),
        file(
            "cp1_lht_lift_3",
            Some("sector-3 lift: one generic fiber links the disk once"),
            &[("components", json!(3)), ("crossings", json!(2)), ("writhe", json!(2))],
            Some(LiftPartition { k: vec![0, 1], e: vec![2] }),
            Content::Link(linked_lift_link()),
        ),
    ]
}

fn main() {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("corpus"));
    std::fs::create_dir_all(&dir).expect("create corpus dir");
    let mut failures = 0;
    for f in corpus() {
        let path = dir.join(format!("{}.{}", f.metadata.name, f.content.extension()));
        let bytes = format::serialize(&f);
        std::fs::write(&path, &bytes).expect("write corpus file");
        let back = format::parse(&bytes).expect("corpus file re-parses");
        assert_eq!(back, f, "round trip changed {}", path.display());
        let report = format::self_test(&back);
        if report.pass() {
            println!("ok    {}", path.display());
        } else {
            failures += 1;
            println!("FAIL  {}", path.display());
            for e in &report.failures {
                println!("      {}", e);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
