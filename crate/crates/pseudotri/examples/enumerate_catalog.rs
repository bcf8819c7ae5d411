//! Runs the bounded enumerator and prints the resulting catalog: every
//! valid diagram over the documented model budget, deduplicated by
//! canonical encoding and sorted by (complexity, encoding).

use pseudotri::enumerate::enumerate_triheeg;

fn main() {
    let max_complexity: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let cat = enumerate_triheeg(max_complexity, 2).unwrap();
    println!("{:<4} {:<3} {:<12} {:<6} name", "c", "b", "y", "H1");
    for e in &cat.entries {
        println!(
            "{:<4} {:<3} {:<12} {:<6} {}",
            e.complexity,
            e.b,
            format!("{:?}", e.y),
            e.h1,
            e.name
        );
    }
    println!("\n{} entries, complete = {}", cat.entries.len(), cat.complete);
    for n in &cat.notes {
        println!("note: {}", n);
    }
}
