//! The embedded-surface pipeline end to end: validate a shadow diagram,
//! compute its Euler characteristic and orientability, extract the
//! boundary link, and identify it by its Jones polynomial.

use pseudotri::ptri::orient_ptri;
use pseudotri::shadow::{
    boundary_link, jones_polynomial, orientability, surface_euler_characteristic,
    validate_shadow,
};
use pseudotri::zoo;

fn main() {
    for (name, sd) in [
        ("disk_b4", zoo::disk_in_b4_shadow()),
        ("trefoil_surface", zoo::trefoil_b4_shadow()),
        ("moebius", zoo::moebius_cp2_shadow()),
        ("lht_slice_disk", zoo::lht_slice_disk_shadow()),
        ("cp1", zoo::cp1_cp2_shadow()),
    ] {
        let report = validate_shadow(&sd);
        assert!(report.pass(), "{}: {:?}", name, report.failures);
        let chi = surface_euler_characteristic(&sd).unwrap();
        let (orientable, _) = orientability(&sd);
        println!("{:<16} chi={:<3} orientable={}", name, chi, orientable);

        let circle = sd.base.diag.binding[0].label.clone();
        let orient = orient_ptri(&sd.base, &circle, true).unwrap();
        let link = boundary_link(&sd, Some(&orient)).unwrap();
        if link.components.is_empty() {
            println!("  boundary: empty (closed surface)");
            continue;
        }
        println!(
            "  boundary: {} component(s), {} crossing(s), writhe {}",
            link.components.len(),
            link.crossing_signs.len(),
            link.writhe()
        );
        println!("  gauss:    {}", link.gauss_code().replace('\n', " | "));
        println!("  jones:    {}", jones_polynomial(&link).unwrap().display("q"));
    }
}
