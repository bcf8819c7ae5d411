//! Applies one move of each kind and shows how the indices respond:
//! three-sector boundary and genus stabilizations, then four-sector
//! torus, band, and shift moves.

use pseudotri::{moves3, moves4, zoo};

fn main() {
    // Three-sector stabilizations on the three-torus diagram.
    let th = zoo::t3();
    let ix0 = th.indices().unwrap();
    println!("start        y={:?} b={}", ix0.y, ix0.b);

    let (i, stab) = (0..3u8)
        .find_map(|i| {
            moves3::band_arcs(&th, i)
                .iter()
                .find_map(|arc| moves3::stabilize_3(&th, i, arc).ok())
                .map(|s| (i, s))
        })
        .unwrap();
    let ix = stab.indices().unwrap();
    println!("stabilize_3  y={:?} b={}   (Δy = e_{}, Δb = ±1)", ix.y, ix.b, (i + 1) % 3 + 1);

    let heeg = (0..th.diag.cx.faces.len())
        .find_map(|site| moves3::heegaard_stabilize_3(&th, 0, site).ok())
        .unwrap();
    let ix = heeg.indices().unwrap();
    println!("heegaard_3   y={:?} b={}   (Δy = e_1 + e_3)", ix.y, ix.b);

    // Four-sector moves on S¹ × B³.
    let pt = zoo::s1_b3();
    let ix0 = pt.indices().unwrap();
    println!("\nstart        c={} c_boundary={} b={}", ix0.c, ix0.c_boundary, ix0.b);

    let site = moves4::torus_sites(&pt, moves4::TorusKind::I, 0)[0];
    let torus = moves4::torus_stabilize(&pt, moves4::TorusKind::I, 0, site).unwrap();
    let ix = torus.indices().unwrap();
    println!("torus I      c={} c_boundary={} b={}   (c + 1)", ix.c, ix.c_boundary, ix.b);

    let arc = moves4::band_arcs_4(&pt, 1)
        .into_iter()
        .find(|arc| moves4::band_stabilize(&pt, 1, arc).is_ok())
        .unwrap();
    let (banded, band_site) = moves4::band_stabilize(&pt, 1, &arc).unwrap();
    let ix = banded.indices().unwrap();
    println!("band         c={} c_boundary={} b={}   (c + 1, b ± 1)", ix.c, ix.c_boundary, ix.b);

    let shifted = moves4::boundary_stab_shift(&banded, &band_site).unwrap();
    let ix = shifted.indices().unwrap();
    println!(
        "shift        c={} c_boundary={} b={}   (c fixed, c_boundary − 1)",
        ix.c, ix.c_boundary, ix.b
    );

    for d in [&stab, &heeg] {
        assert!(d.validate().pass());
    }
    for d in [&torus, &banded, &shifted] {
        assert!(d.validate().pass());
    }
    println!("\nall results validate");
}
