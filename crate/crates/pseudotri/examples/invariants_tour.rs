//! Prints the index block and realization homology of every built-in
//! diagram: the three-sector models first, then the four-sector ones.

use pseudotri::zoo;

fn main() {
    println!("== three-sector diagrams ==");
    for (name, th) in [
        ("trivial_s3", zoo::trivial_s3()),
        ("s1s2", zoo::s1s2_heegaard()),
        ("two_s1s2", zoo::two_s1s2()),
        ("t3", zoo::t3()),
    ] {
        let ix = th.indices().unwrap();
        let h = th.realize_homology().unwrap();
        println!(
            "{:<12} y={:?} p={:?} b={}  c={}  H* = [{}, {}, {}, {}]",
            name,
            ix.y,
            ix.p,
            ix.b,
            th.complexity().unwrap(),
            h[0],
            h[1],
            h[2],
            h[3]
        );
    }

    println!("\n== four-sector diagrams ==");
    for (name, pt) in [
        ("trivial_b4", zoo::trivial_b4()),
        ("s1xb3", zoo::s1_b3()),
        ("s2xd2", zoo::s2_d2()),
        ("cp2_minus_b4", zoo::cp2_minus_b4()),
        ("two_s2xd2", zoo::two_s2d2()),
    ] {
        let ix = pt.indices().unwrap();
        println!(
            "{:<12} g={} b={} k={:?} y={:?}  chi={}  c={}  c_boundary={}  c_pair={}",
            name, ix.g, ix.b, ix.k, ix.y, ix.chi, ix.c, ix.c_boundary, ix.c_pair
        );
        for i in 0..3u8 {
            let h = pt.sector_homology(i).unwrap();
            println!("  sector {}: H* = [{}, {}, {}, {}]", i + 1, h[0], h[1], h[2], h[3]);
        }
    }
}
