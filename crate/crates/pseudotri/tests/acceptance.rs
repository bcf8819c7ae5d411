//! Acceptance suite: one criterion per test, each printing a single
//! pass/fail line (run with `--nocapture` to see them on success).

use std::collections::BTreeMap;
use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pseudotri::cell::Role;
use pseudotri::curve::{crossing_count, Curve, Family};
use pseudotri::format::{self, Content};
use pseudotri::homology::{smith_normal_form, verify_snf, Mat};
use pseudotri::ptri::{orient_ptri, PseudoTrisection};
use pseudotri::shadow::{
    self, jones_polynomial, skein_check, LinkDiagram, SectorLift,
};
use pseudotri::surface::{subdivide, SubdivisionScheme};
use pseudotri::triheeg::TripleHeegaard;
use pseudotri::{enumerate, models, moves3, moves4, zoo};

fn criterion<F: FnOnce() + UnwindSafe>(n: u32, desc: &str, f: F) {
    match catch_unwind(f) {
        Ok(()) => println!("criterion {} PASS: {}", n, desc),
        Err(e) => {
            println!("criterion {} FAIL: {}", n, desc);
            resume_unwind(e);
        }
    }
}

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn load(name: &str) -> format::DiagramFile {
    let path = corpus_dir().join(name);
    format::parse(&std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {}", name, e)))
        .unwrap_or_else(|e| panic!("{}: {}", name, e))
}

fn load_ptri(name: &str) -> PseudoTrisection {
    match load(name).content {
        Content::Ptri(pt) => pt,
        _ => panic!("{} is not a four-sector diagram", name),
    }
}

fn load_triheeg(name: &str) -> TripleHeegaard {
    match load(name).content {
        Content::Triheeg(th) => th,
        _ => panic!("{} is not a three-sector diagram", name),
    }
}

fn load_link(name: &str) -> (LinkDiagram, Option<format::LiftPartition>) {
    let f = load(name);
    match f.content {
        Content::Link(ld) => (ld, f.metadata.partition),
        _ => panic!("{} is not a link file", name),
    }
}

const PTRI_CORPUS: [&str; 5] =
    ["trivial_b4.ptd", "s1xb3.ptd", "s2xd2.ptd", "cp2_minus_b4.ptd", "two_s2xd2.ptd"];
const TRIHEEG_CORPUS: [&str; 4] = ["trivial_s3.thd", "s1s2.thd", "two_s1s2.thd", "t3.thd"];

#[test]
fn criterion_1_complexity_table() {
    criterion(1, "complexity / pair-complexity table reproduced exactly", || {
        let start = Instant::now();
        let table: [(&str, i64, i64); 5] = [
            ("trivial_b4.ptd", 0, 0),
            ("cp2_minus_b4.ptd", 1, 1),
            ("s1xb3.ptd", 1, 3),
            ("s2xd2.ptd", 1, 3),
            ("two_s2xd2.ptd", 2, 5),
        ];
        for (name, c, c_pair) in table {
            let ix = load_ptri(name).indices().unwrap();
            assert_eq!(ix.c, c, "{}: c", name);
            assert_eq!(ix.c_pair, c_pair, "{}: c_pair", name);
        }
        assert!(start.elapsed() < Duration::from_secs(1), "budget: {:?}", start.elapsed());
    });
}

#[test]
fn criterion_2_index_formulas() {
    criterion(2, "index identities hold exactly on every four-sector diagram", || {
        for name in PTRI_CORPUS {
            let ix = load_ptri(name).indices().unwrap();
            let (g, b) = (ix.g as i64, ix.b as i64);
            let total = |a: [usize; 3]| a.iter().sum::<usize>() as i64;
            let (ky, kk, kp) = (total(ix.y), total(ix.k), total(ix.p));
            assert_eq!((ky + b) % 2, 1, "{}: |y|+b parity", name);
            assert_eq!(ix.chi, g - kk + (ky + b + 1) / 2, "{}: chi", name);
            assert_eq!(ix.c, g + kp + 2 * b - 2, "{}: c", name);
            for i in 0..3 {
                assert_eq!(
                    ix.h[i] as i64,
                    g + ix.p[i] as i64 + b - 1,
                    "{}: h_{}",
                    name,
                    i + 1
                );
            }
        }
    });
}

#[test]
fn criterion_3_realization_homology() {
    criterion(3, "realization homology of the corpus diagrams", || {
        let s3 = load_triheeg("trivial_s3.thd").realize_homology().unwrap();
        assert!(s3[0].is_free_of_rank(1) && s3[3].is_free_of_rank(1));
        assert!(s3[1].is_trivial() && s3[2].is_trivial());

        let t3 = load_triheeg("t3.thd").realize_homology().unwrap();
        assert!(t3[1].is_free_of_rank(3), "three-torus H1 = {}", t3[1]);

        let two = load_triheeg("two_s1s2.thd").realize_homology().unwrap();
        assert!(two[1].is_free_of_rank(2), "H1 = {}", two[1]);

        for name in PTRI_CORPUS {
            let pt = load_ptri(name);
            let ix = pt.indices().unwrap();
            for i in 0..3u8 {
                let h = pt.sector_homology(i).unwrap();
                let k = ix.k[i as usize];
                assert!(h[0].is_free_of_rank(1), "{} sector {}: H0", name, i + 1);
                assert!(h[1].is_free_of_rank(k), "{} sector {}: H1 = {}", name, i + 1, h[1]);
                assert!(h[2].is_free_of_rank(k), "{} sector {}: H2 = {}", name, i + 1, h[2]);
                assert!(h[3].is_free_of_rank(1), "{} sector {}: H3", name, i + 1);
            }
        }
    });
}

fn homology_strings_3(d: &TripleHeegaard) -> Vec<String> {
    d.realize_homology().unwrap().iter().map(|g| g.to_string()).collect()
}

#[test]
fn criterion_4_move_invariance() {
    criterion(4, "50+ move applications preserve homology with exact index deltas", || {
        let start = Instant::now();
        let mut applied = 0usize;

        // Three-sector boundary stabilizations: Δy = e_{i+1}, Δb = ±1.
        for name in TRIHEEG_CORPUS {
            let d = load_triheeg(name);
            let h0 = homology_strings_3(&d);
            let ix0 = d.indices().unwrap();
            for i in 0..3u8 {
                for arc in moves3::band_arcs(&d, i).iter().take(4) {
                    let Ok(s) = moves3::stabilize_3(&d, i, arc) else { continue };
                    assert!(s.validate().pass(), "{} stabilize_3", name);
                    let ix = s.indices().unwrap();
                    let mut want_y = ix0.y;
                    want_y[(i as usize + 1) % 3] += 1;
                    assert_eq!(ix.y, want_y, "{} stabilize_3 y", name);
                    assert_eq!(ix.b.abs_diff(ix0.b), 1, "{} stabilize_3 b", name);
                    assert_eq!(homology_strings_3(&s), h0, "{} stabilize_3 homology", name);
                    applied += 1;
                }
            }
        }

        // Heegaard stabilizations: Δy = e_i + e_{i−1}, b unchanged.
        for name in TRIHEEG_CORPUS {
            let d = load_triheeg(name);
            let h0 = homology_strings_3(&d);
            let ix0 = d.indices().unwrap();
            for i in 0..3u8 {
                let mut done = 0;
                for site in 0..d.diag.cx.faces.len() {
                    if done >= 3 {
                        break;
                    }
                    let Ok(s) = moves3::heegaard_stabilize_3(&d, i, site) else { continue };
                    assert!(s.validate().pass(), "{} heegaard", name);
                    let ix = s.indices().unwrap();
                    let mut want_y = ix0.y;
                    want_y[i as usize] += 1;
                    want_y[(i as usize + 2) % 3] += 1;
                    assert_eq!(ix.y, want_y, "{} heegaard y", name);
                    assert_eq!(ix.b, ix0.b, "{} heegaard b", name);
                    assert_eq!(homology_strings_3(&s), h0, "{} heegaard homology", name);
                    applied += 1;
                    done += 1;
                }
            }
        }

        // Four-sector torus stabilizations: c + 1, χ unchanged, boundary
        // 3-manifold homology unchanged.
        for name in PTRI_CORPUS {
            let d = load_ptri(name);
            let ix0 = d.indices().unwrap();
            let hb0 = homology_strings_3(&d.restrict_boundary());
            for kind in [moves4::TorusKind::I, moves4::TorusKind::II] {
                for j in 0..3u8 {
                    for &site in moves4::torus_sites(&d, kind, j).iter().take(2) {
                        let s = moves4::torus_stabilize(&d, kind, j, site).unwrap();
                        assert!(s.validate().pass(), "{} torus", name);
                        let ix = s.indices().unwrap();
                        assert_eq!(ix.c, ix0.c + 1, "{} torus c", name);
                        assert_eq!(ix.chi, ix0.chi, "{} torus chi", name);
                        assert_eq!(
                            homology_strings_3(&s.restrict_boundary()),
                            hb0,
                            "{} torus boundary homology",
                            name
                        );
                        applied += 1;
                    }
                }
            }
        }

        // Four-sector band stabilizations (c + 1) and the boundary
        // stabilization shift (c unchanged, c_boundary − 1, k preserved).
        for name in PTRI_CORPUS {
            let d = load_ptri(name);
            let ix0 = d.indices().unwrap();
            let hb0 = homology_strings_3(&d.restrict_boundary());
            for i in 0..3u8 {
                for arc in moves4::band_arcs_4(&d, i).iter().take(3) {
                    let Ok((s, site)) = moves4::band_stabilize(&d, i, arc) else { continue };
                    assert!(s.validate().pass(), "{} band", name);
                    let ix = s.indices().unwrap();
                    assert_eq!(ix.c, ix0.c + 1, "{} band c", name);
                    assert_eq!(ix.chi, ix0.chi, "{} band chi", name);
                    assert_eq!(ix.b.abs_diff(ix0.b), 1, "{} band b", name);
                    assert_eq!(homology_strings_3(&s.restrict_boundary()), hb0, "{} band", name);
                    applied += 1;

                    let shifted = moves4::boundary_stab_shift(&s, &site).unwrap();
                    assert!(shifted.validate().pass(), "{} shift", name);
                    let ixs = shifted.indices().unwrap();
                    assert_eq!(ixs.c, ix.c, "{} shift c", name);
                    assert_eq!(ixs.c_boundary, ix.c_boundary - 1, "{} shift c_boundary", name);
                    assert_eq!(ixs.k, ix.k, "{} shift k", name);
                    assert_eq!(
                        homology_strings_3(&shifted.restrict_boundary()),
                        hb0,
                        "{} shift boundary homology",
                        name
                    );
                    applied += 1;
                }
            }
        }

        assert!(applied >= 50, "only {} move applications", applied);
        assert!(start.elapsed() < Duration::from_secs(60), "budget: {:?}", start.elapsed());
    });
}

#[test]
fn criterion_5_surface_invariants() {
    criterion(5, "Euler characteristics and orientability of the surface corpus", || {
        let slice = zoo::lht_slice_disk_shadow();
        assert_eq!(shadow::surface_euler_characteristic(&slice).unwrap(), 1);
        assert_eq!(slice.bridges.len(), 10);
        let faces: usize =
            (0..3).map(|i| shadow::sector_link_components(&slice, i).unwrap()).sum();
        assert_eq!(faces, 6);

        let trefoil = zoo::trefoil_b4_shadow();
        assert_eq!(shadow::surface_euler_characteristic(&trefoil).unwrap(), -1);

        let moebius = zoo::moebius_cp2_shadow();
        assert_eq!(shadow::surface_euler_characteristic(&moebius).unwrap(), 0);
        let (orientable, cert) = shadow::orientability(&moebius);
        assert!(!orientable);
        match cert {
            shadow::OrientabilityCertificate::OddCycle(cycle) => {
                assert_eq!(cycle.len() % 2, 1, "odd cycle: {:?}", cycle);
                assert!(cycle.len() >= 3, "cycle: {:?}", cycle);
            }
            other => panic!("expected an odd cycle, got {:?}", other),
        }

        for sd in [zoo::disk_in_b4_shadow(), zoo::embedded_disk_b4_shadow()] {
            assert_eq!(shadow::surface_euler_characteristic(&sd).unwrap(), 1);
            assert!(shadow::orientability(&sd).0);
        }
    });
}

#[test]
fn criterion_6_boundary_link() {
    criterion(6, "trefoil surface boundary is the left-handed trefoil by Jones", || {
        let start = Instant::now();
        let sd = zoo::trefoil_b4_shadow();
        let orient = orient_ptri(&sd.base, "B1", true).unwrap();
        let ld = shadow::boundary_link(&sd, Some(&orient)).unwrap();
        assert_eq!(ld.components.len(), 1);
        assert_eq!(ld.crossing_signs.len(), 3);
        assert!(ld.crossing_signs.iter().all(|&s| s == -1));

        let jones = jones_polynomial(&ld).unwrap();
        let (reference, _) = load_link("lht_trefoil.lnk");
        assert_eq!(jones, jones_polynomial(&reference).unwrap());
        // Mirror asymmetry: the right-handed trefoil has the inverted
        // polynomial, which must differ.
        assert_ne!(jones, jones.invert_variable());
        assert!(start.elapsed() < Duration::from_secs(1), "budget: {:?}", start.elapsed());
    });
}

#[test]
fn criterion_7_homology_class_pipeline() {
    criterion(7, "sector linking numbers (0, 1, 1) sum to pairing 2", || {
        let mut lifts = Vec::new();
        for name in ["cp1_lht_lift_1.lnk", "cp1_lht_lift_2.lnk", "cp1_lht_lift_3.lnk"] {
            let (link, partition) = load_link(name);
            let p = partition.expect("lift files carry a partition");
            lifts.push(SectorLift { link, k_components: p.k, e_components: p.e });
        }
        let per_sector: Vec<i64> = lifts
            .iter()
            .map(|l| shadow::intersection_pairing(std::slice::from_ref(l)).unwrap())
            .collect();
        let mut sorted: Vec<i64> = per_sector.iter().map(|v| v.abs()).collect();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 1], "per-sector linking: {:?}", per_sector);
        let total = shadow::intersection_pairing(&lifts).unwrap();
        assert_eq!(total.abs(), 2, "pairing: {}", total);
    });
}

#[test]
fn criterion_8_enumeration_properties() {
    criterion(8, "low-complexity catalogs have cyclic H1; rank 2 needs complexity 3", || {
        let start = Instant::now();
        let cat2 = enumerate::enumerate_triheeg(2, 2).unwrap();
        assert!(cat2.complete);
        assert!(!cat2.entries.is_empty());
        for e in &cat2.entries {
            assert!(enumerate::h1_is_cyclic(&e.h1), "{}: H1 = {}", e.name, e.h1);
        }
        let cat3 = enumerate::enumerate_triheeg(3, 2).unwrap();
        assert!(cat3.entries.iter().any(|e| e.h1 == "Z^2"));
        for e in &cat3.entries {
            if e.h1 == "Z^2" {
                assert!(e.complexity >= 3, "{} at complexity {}", e.name, e.complexity);
            }
        }
        assert!(start.elapsed() < Duration::from_secs(300), "budget: {:?}", start.elapsed());
    });
}

#[test]
fn criterion_9_oracle_equivalences() {
    criterion(9, "SNF certificates, skein relation, subdivision invariance", || {
        // 1. Smith-normal-form certificates re-multiply on random matrices.
        let mut rng = ChaCha8Rng::seed_from_u64(2026);
        for _ in 0..200 {
            let rows = rng.gen_range(1..=6);
            let cols = rng.gen_range(1..=6);
            let data: Vec<i64> = (0..rows * cols).map(|_| rng.gen_range(-9..=9)).collect();
            let m = Mat::from_i64(rows, cols, &data);
            let snf = smith_normal_form(&m);
            verify_snf(&m, &snf).unwrap();
        }

        // 2. The Kauffman bracket satisfies the skein relation at every
        // crossing of every fixture with at most 8 crossings.
        let mut fixtures: Vec<(String, LinkDiagram)> = Vec::new();
        for entry in std::fs::read_dir(corpus_dir()).unwrap() {
            let path = entry.unwrap().path();
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            let file = format::parse(&std::fs::read(&path).unwrap()).unwrap();
            match file.content {
                Content::Link(ld) => fixtures.push((name, ld)),
                Content::Shadow(sd) => {
                    let circle = sd.base.diag.binding[0].label.clone();
                    let orient = orient_ptri(&sd.base, &circle, true).unwrap();
                    let ld = shadow::boundary_link(&sd, Some(&orient)).unwrap();
                    fixtures.push((name, ld));
                }
                _ => {}
            }
        }
        let mut checked = 0;
        for (name, ld) in &fixtures {
            if ld.crossing_signs.len() > 8 {
                continue;
            }
            for c in 0..ld.crossing_signs.len() {
                skein_check(ld, c).unwrap_or_else(|e| panic!("{} crossing {}: {}", name, c, e));
                checked += 1;
            }
        }
        assert!(checked >= 10, "only {} skein checks ran", checked);

        // 3. Random subdivision preserves pairwise geometric intersection
        // counts of curves on a closed surface.
        let base = models::grid_torus_role(6, Role::C);
        let curves = vec![
            Curve::closed(Family::Alpha(0), models::gt_meridian(6, 1)),
            Curve::closed(Family::Alpha(1), models::gt_longitude(6, 4)),
            Curve::closed(Family::Alpha(2), models::gt6_diagonal()),
            Curve::closed(Family::Delta(0), models::gt_meridian(6, 3)),
            Curve::closed(Family::Delta(1), models::gt_longitude(6, 0)),
        ];
        let counts = |cx: &pseudotri::cell::Complex, curves: &[Curve]| {
            let slots = cx.slot_map(&[Role::C]).unwrap();
            let mut out = BTreeMap::new();
            for a in 0..curves.len() {
                for b in a + 1..curves.len() {
                    // Pairs sharing edges are non-transverse; record None
                    // and require that to survive subdivision too.
                    out.insert((a, b), crossing_count(cx, &slots, &curves[a], &curves[b]).ok());
                }
            }
            out
        };
        let reference = counts(&base, &curves);
        // Sanity: the chosen slopes intersect nontrivially.
        assert!(reference.values().any(|&c| c.unwrap_or(0) > 0));
        for seed in 0..5u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut cx = base.clone();
            let mut tracked = curves.clone();
            for _ in 0..12 {
                let scheme = if rng.gen_bool(0.5) {
                    SubdivisionScheme::EdgeMidpoint(rng.gen_range(0..cx.n_edges()))
                } else {
                    SubdivisionScheme::FaceCenter(rng.gen_range(0..cx.faces.len()))
                };
                let (next, next_curves) = subdivide(&cx, scheme, &tracked).unwrap();
                cx = next;
                tracked = next_curves;
            }
            assert_eq!(counts(&cx, &tracked), reference, "seed {}", seed);
        }
    });
}
