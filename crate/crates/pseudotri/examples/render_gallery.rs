//! Renders every corpus file to schematic SVG under `renders/`.

use std::path::PathBuf;

use pseudotri::{format, render};

fn main() {
    let corpus = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| "corpus".into());
    let out_dir = PathBuf::from("renders");
    std::fs::create_dir_all(&out_dir).unwrap();
    let mut paths: Vec<PathBuf> = std::fs::read_dir(&corpus)
        .expect("corpus directory (run the make_corpus example first)")
        .map(|e| e.unwrap().path())
        .collect();
    paths.sort();
    for path in paths {
        let file = format::parse(&std::fs::read(&path).unwrap()).unwrap();
        let svg = render::render_svg(&file);
        let out = out_dir.join(format!(
            "{}.svg",
            path.file_stem().unwrap().to_string_lossy()
        ));
        std::fs::write(&out, svg).unwrap();
        println!("wrote {}", out.display());
    }
}
