//! Command-line interface for diagram files: validation, invariants,
//! moves, boundary-link extraction, bracket polynomials, homology-class
//! pairing, bounded enumeration, and schematic SVG rendering.
//!
//! Exit codes: 0 ok, 1 validation failure, 2 usage error, 3 budget
//! exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pseudotri::format::{self, Content, DiagramFile};
use pseudotri::ptri::orient_ptri;
use pseudotri::report::StructureError;
use pseudotri::shadow::{
    self, jones_polynomial, kauffman_bracket_bounded, LinkDiagram, SectorLift,
};
use pseudotri::surface::{subdivide, SubdivisionScheme};
use pseudotri::{enumerate, moves3, moves4, render, slide3};

#[derive(Parser)]
#[command(name = "pseudotri", version, about = "Trisection-style diagram toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a diagram file, run its kind's validator and the stored
    /// expected-invariant self-test.
    Validate { files: Vec<PathBuf> },
    /// Print the index block of a diagram (or link/shadow summary data).
    Invariants {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Apply a named move and write the resulting diagram file.
    Move(MoveArgs),
    /// Extract the boundary link of a shadow diagram.
    BoundaryLink {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write the extracted link as a .lnk file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Kauffman bracket and Jones polynomial of a link (or of a shadow's
    /// boundary link).
    Bracket {
        file: PathBuf,
        /// Maximum crossing count for the state sum.
        #[arg(long, default_value = "16")]
        budget: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Intersection pairing from per-sector lifted link files carrying a
    /// component partition.
    Homclass {
        /// One .lnk file per sector, each with partition metadata.
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Enumerate low-complexity three-sector diagrams.
    Enumerate {
        #[arg(long, default_value = "2")]
        max_complexity: usize,
        #[arg(long, default_value = "2")]
        max_b: usize,
        /// Generation-order seed; the catalog is identical for every seed.
        #[arg(long, default_value = "0")]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Render a diagram file as schematic SVG.
    Render {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MoveType {
    /// Band stabilization along a boundary-to-boundary arc.
    Band,
    /// Internal torus stabilization enlarging a sector surface.
    TorusI,
    /// Internal torus stabilization enlarging the central surface.
    TorusIi,
    /// Three-sector boundary stabilization along an arc.
    Stabilize,
    /// Three-sector Heegaard (genus) stabilization at a face.
    Heegaard,
    /// Global quad subdivision (invariant-preserving refinement).
    Refine,
}

#[derive(Args)]
struct MoveArgs {
    file: PathBuf,
    #[arg(long = "type", value_enum)]
    move_type: MoveType,
    /// Sector index i (0-based) for sectored moves.
    #[arg(long, default_value = "0")]
    sector: u8,
    /// Site index: for torus/heegaard moves an index into the legal-site
    /// list; for band/stabilize an index into the enumerated legal arcs.
    #[arg(long = "move-site", default_value = "0")]
    site: usize,
    /// Output path; defaults to the input with `.out` before the
    /// extension.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failures mapped to process exit codes.
enum CliError {
    Validation(String),
    Usage(String),
    Budget(String),
}

impl From<StructureError> for CliError {
    fn from(e: StructureError) -> CliError {
        match e {
            StructureError::BudgetExceeded(_) | StructureError::TooManyCrossings(_) => {
                CliError::Budget(e.to_string())
            }
            other => CliError::Validation(other.to_string()),
        }
    }
}

fn load(path: &Path) -> Result<DiagramFile, CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {}", path.display(), e)))?;
    format::parse(&bytes).map_err(|e| {
        CliError::Validation(format!("{}: {}", path.display(), e))
    })
}

fn store(path: &Path, file: &DiagramFile) -> Result<(), CliError> {
    std::fs::write(path, format::serialize(file))
        .map_err(|e| CliError::Usage(format!("cannot write {}: {}", path.display(), e)))
}

fn json_out<T: serde::Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn cmd_validate(files: &[PathBuf]) -> Result<(), CliError> {
    if files.is_empty() {
        return Err(CliError::Usage("validate: no files given".into()));
    }
    let mut failed = false;
    for path in files {
        match load(path).map(|f| (format::self_test(&f), f)) {
            Ok((report, file)) => {
                let status = if report.pass() { "ok" } else { "FAIL" };
                println!("{}: {} ({})", path.display(), status, file.content.kind_name());
                for f in &report.failures {
                    println!("  failure: {}", f);
                    failed = true;
                }
                for w in &report.warnings {
                    println!("  warning: {}", w);
                }
            }
            Err(CliError::Validation(msg)) => {
                println!("{}: FAIL", path.display());
                println!("  failure: {}", msg);
                failed = true;
            }
            Err(other) => return Err(other),
        }
    }
    if failed {
        Err(CliError::Validation("one or more files failed validation".into()))
    } else {
        Ok(())
    }
}

fn link_of(file: &DiagramFile, path: &Path) -> Result<LinkDiagram, CliError> {
    match &file.content {
        Content::Link(ld) => Ok(ld.clone()),
        Content::Shadow(sd) => {
            let circle = sd
                .base
                .diag
                .binding
                .first()
                .ok_or_else(|| CliError::Validation("shadow base has no binding".into()))?
                .label
                .clone();
            let orient = orient_ptri(&sd.base, &circle, true)?;
            Ok(shadow::boundary_link(sd, Some(&orient))?)
        }
        _ => Err(CliError::Usage(format!(
            "{}: expected a link or shadow file",
            path.display()
        ))),
    }
}

fn cmd_invariants(path: &Path, fmt: Format) -> Result<(), CliError> {
    let file = load(path)?;
    match &file.content {
        Content::Triheeg(th) => {
            let report = th.validate();
            if !report.pass() {
                return Err(CliError::Validation(report.failures.join("; ")));
            }
            let ix = th.indices()?;
            if fmt == Format::Json {
                json_out(&serde_json::json!({
                    "kind": "triheeg", "y": ix.y, "p": ix.p, "b": ix.b,
                    "c": th.complexity()?,
                    "h1": th.realize_homology()?[1].to_string(),
                }));
            } else {
                println!("kind      triheeg");
                println!("y         [{}, {}, {}]", ix.y[0], ix.y[1], ix.y[2]);
                println!("p         [{}, {}, {}]", ix.p[0], ix.p[1], ix.p[2]);
                println!("b         {}", ix.b);
                println!("c         {}", th.complexity()?);
                println!("H1        {}", th.realize_homology()?[1]);
            }
        }
        Content::Ptri(pt) => {
            let report = pt.validate();
            if !report.pass() {
                return Err(CliError::Validation(report.failures.join("; ")));
            }
            let ix = pt.indices()?;
            if fmt == Format::Json {
                json_out(&ix);
            } else {
                println!("kind      ptri");
                println!("g         {}", ix.g);
                println!("b         {}", ix.b);
                println!("k         [{}, {}, {}]", ix.k[0], ix.k[1], ix.k[2]);
                println!("y         [{}, {}, {}]", ix.y[0], ix.y[1], ix.y[2]);
                println!("p         [{}, {}, {}]", ix.p[0], ix.p[1], ix.p[2]);
                println!("h         [{}, {}, {}]", ix.h[0], ix.h[1], ix.h[2]);
                println!("chi       {}", ix.chi);
                println!("c         {}", ix.c);
                println!("c_bdry    {}", ix.c_boundary);
                println!("c_pair    {}", ix.c_pair);
            }
        }
        Content::Shadow(sd) => {
            let report = shadow::validate_shadow(sd);
            if !report.pass() {
                return Err(CliError::Validation(report.failures.join("; ")));
            }
            let chi = shadow::surface_euler_characteristic(sd)?;
            let (orientable, _) = shadow::orientability(sd);
            if fmt == Format::Json {
                json_out(&serde_json::json!({
                    "kind": "shadow", "euler": chi, "orientable": orientable,
                    "bridges": sd.bridges.len(), "arcs": sd.arcs.len(),
                    "crossings": sd.crossings.len(),
                }));
            } else {
                println!("kind        shadow");
                println!("euler       {}", chi);
                println!("orientable  {}", orientable);
                println!("bridges     {}", sd.bridges.len());
                println!("arcs        {}", sd.arcs.len());
                println!("crossings   {}", sd.crossings.len());
            }
        }
        Content::Link(ld) => {
            ld.validate()?;
            if fmt == Format::Json {
                json_out(&serde_json::json!({
                    "kind": "link", "components": ld.components.len(),
                    "crossings": ld.crossing_signs.len(), "writhe": ld.writhe(),
                    "gauss": ld.gauss_code(),
                }));
            } else {
                println!("kind        link");
                println!("components  {}", ld.components.len());
                println!("crossings   {}", ld.crossing_signs.len());
                println!("writhe      {}", ld.writhe());
                println!("gauss       {}", ld.gauss_code().replace('\n', " | "));
            }
        }
    }
    Ok(())
}

fn out_path(input: &Path, explicit: Option<PathBuf>, ext: &str) -> PathBuf {
    explicit.unwrap_or_else(|| {
        let stem = input.file_stem().and_then(|s| s.to_str()).unwrap_or("out");
        input.with_file_name(format!("{}.out.{}", stem, ext))
    })
}

/// Barycentrically refines one Σ_i face so a surface with no interior
/// vertices gains legal band-arc sites.  Subdivision preserves every
/// invariant, so the refined diagram describes the same manifold.
fn refine_sector_face(
    diag: &pseudotri::diagram::Diagram,
    i: u8,
) -> Result<pseudotri::diagram::Diagram, CliError> {
    let role = pseudotri::cell::Role::S(i % 3);
    let f = diag
        .cx
        .faces
        .iter()
        .position(|f| f.role == role)
        .ok_or_else(|| CliError::Validation(format!("no face with role {}", role.label())))?;
    let (cx, curves) = subdivide(&diag.cx, SubdivisionScheme::FaceCenter(f), &diag.curves)?;
    Ok(pseudotri::diagram::Diagram { cx, binding: diag.binding.clone(), curves })
}

fn cmd_move(args: &MoveArgs) -> Result<(), CliError> {
    let file = load(&args.file)?;
    let site_err = |what: &str, n: usize| {
        CliError::Usage(format!("--move-site {} out of range ({} {})", n, what, n))
    };
    let content = match (&file.content, args.move_type) {
        (Content::Ptri(pt), MoveType::Band) => {
            let mut pt = pt.clone();
            if moves4::band_arcs_4(&pt, args.sector).is_empty() {
                pt = pseudotri::ptri::PseudoTrisection {
                    diag: refine_sector_face(&pt.diag, args.sector)?,
                };
            }
            // `--move-site` indexes the arcs on which the move succeeds,
            // so rejected (e.g. separating) candidates don't shift sites.
            let mut results = Vec::new();
            let mut last_err = None;
            for arc in moves4::band_arcs_4(&pt, args.sector) {
                match moves4::band_stabilize(&pt, args.sector, &arc) {
                    Ok((moved, _)) => results.push(moved),
                    Err(e) => last_err = Some(e),
                }
            }
            match (results.into_iter().nth(args.site), last_err) {
                (Some(moved), _) => Content::Ptri(moved),
                (None, Some(e)) => return Err(e.into()),
                (None, None) => return Err(site_err("legal arcs:", 0)),
            }
        }
        (Content::Ptri(pt), MoveType::TorusI | MoveType::TorusIi) => {
            let kind = if args.move_type == MoveType::TorusI {
                moves4::TorusKind::I
            } else {
                moves4::TorusKind::II
            };
            let sites = moves4::torus_sites(pt, kind, args.sector);
            let &site =
                sites.get(args.site).ok_or_else(|| site_err("legal sites:", sites.len()))?;
            Content::Ptri(moves4::torus_stabilize(pt, kind, args.sector, site)?)
        }
        (Content::Triheeg(th), MoveType::Stabilize) => {
            let mut th = th.clone();
            if moves3::band_arcs(&th, args.sector).is_empty() {
                th = pseudotri::triheeg::TripleHeegaard {
                    diag: refine_sector_face(&th.diag, args.sector)?,
                };
            }
            let mut results = Vec::new();
            let mut last_err = None;
            for arc in moves3::band_arcs(&th, args.sector) {
                match moves3::stabilize_3(&th, args.sector, &arc) {
                    Ok(moved) => results.push(moved),
                    Err(e) => last_err = Some(e),
                }
            }
            match (results.into_iter().nth(args.site), last_err) {
                (Some(moved), _) => Content::Triheeg(moved),
                (None, Some(e)) => return Err(e.into()),
                (None, None) => return Err(site_err("legal arcs:", 0)),
            }
        }
        (Content::Triheeg(th), MoveType::Heegaard) => {
            Content::Triheeg(moves3::heegaard_stabilize_3(th, args.sector, args.site)?)
        }
        (Content::Triheeg(th), MoveType::Refine) => Content::Triheeg(slide3::refine(th)),
        (c, _) => {
            return Err(CliError::Usage(format!(
                "move type not applicable to a {} file",
                c.kind_name()
            )))
        }
    };
    let report = match &content {
        Content::Triheeg(th) => th.validate(),
        Content::Ptri(pt) => pt.validate(),
        _ => unreachable!(),
    };
    if !report.pass() {
        return Err(CliError::Validation(format!(
            "move result fails validation: {}",
            report.failures.join("; ")
        )));
    }
    let ext = content.extension();
    let name = format!("{}-moved", file.metadata.name);
    let out = out_path(&args.file, args.out.clone(), ext);
    store(&out, &DiagramFile::new(&name, content))?;
    println!("wrote {}", out.display());
    Ok(())
}

fn cmd_boundary_link(path: &Path, fmt: Format, out: Option<PathBuf>) -> Result<(), CliError> {
    let file = load(path)?;
    let ld = link_of(&file, path)?;
    if let Some(out) = out {
        let name = format!("{}-boundary", file.metadata.name);
        store(&out, &DiagramFile::new(&name, Content::Link(ld.clone())))?;
        println!("wrote {}", out.display());
    }
    if fmt == Format::Json {
        json_out(&ld);
    } else {
        println!("components  {}", ld.components.len());
        println!("crossings   {}", ld.crossing_signs.len());
        println!("writhe      {}", ld.writhe());
        println!("gauss       {}", ld.gauss_code().replace('\n', " | "));
    }
    Ok(())
}

fn cmd_bracket(path: &Path, budget: usize, fmt: Format) -> Result<(), CliError> {
    let file = load(path)?;
    let ld = link_of(&file, path)?;
    let bracket = kauffman_bracket_bounded(&ld, budget)?;
    let jones = jones_polynomial(&ld)?;
    if fmt == Format::Json {
        json_out(&serde_json::json!({
            "bracket_a": bracket.display("A"),
            "jones_q": jones.display("q"),
            "writhe": ld.writhe(),
        }));
    } else {
        println!("bracket  {}", bracket.display("A"));
        println!("jones    {}", jones.display("q"));
        println!("writhe   {}", ld.writhe());
    }
    Ok(())
}

fn cmd_homclass(files: &[PathBuf], fmt: Format) -> Result<(), CliError> {
    if files.is_empty() {
        return Err(CliError::Usage("homclass: no lift files given".into()));
    }
    let mut lifts = Vec::new();
    for path in files {
        let file = load(path)?;
        let Content::Link(ld) = &file.content else {
            return Err(CliError::Usage(format!(
                "{}: homclass expects link files",
                path.display()
            )));
        };
        let part = file.metadata.partition.as_ref().ok_or_else(|| {
            CliError::Validation(format!(
                "{}: missing component partition metadata",
                path.display()
            ))
        })?;
        lifts.push(SectorLift {
            link: ld.clone(),
            k_components: part.k.clone(),
            e_components: part.e.clone(),
        });
    }
    let mut per_sector = Vec::new();
    for lift in &lifts {
        per_sector.push(shadow::intersection_pairing(std::slice::from_ref(lift))?);
    }
    let total = shadow::intersection_pairing(&lifts)?;
    if fmt == Format::Json {
        json_out(&serde_json::json!({ "sectors": per_sector, "pairing": total }));
    } else {
        for (i, v) in per_sector.iter().enumerate() {
            println!("sector {}  {}", i + 1, v);
        }
        println!("pairing   {}", total);
    }
    Ok(())
}

fn cmd_enumerate(
    max_complexity: usize,
    max_b: usize,
    seed: u64,
    fmt: Format,
) -> Result<(), CliError> {
    let cat = enumerate::enumerate_triheeg_seeded(max_complexity, max_b, seed)?;
    if fmt == Format::Json {
        json_out(&cat);
        return Ok(());
    }
    for e in &cat.entries {
        println!(
            "c={}  b={}  y=[{},{},{}]  H1={:<6}  {}",
            e.complexity, e.b, e.y[0], e.y[1], e.y[2], e.h1, e.name
        );
    }
    println!("entries   {}", cat.entries.len());
    println!("complete  {}", cat.complete);
    for n in &cat.notes {
        println!("note: {}", n);
    }
    Ok(())
}

fn cmd_render(path: &Path, out: Option<PathBuf>) -> Result<(), CliError> {
    let file = load(path)?;
    let svg = render::render_svg(&file);
    match out {
        Some(out) => {
            std::fs::write(&out, svg)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {}", out.display(), e)))?;
            println!("wrote {}", out.display());
        }
        None => print!("{}", svg),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Validate { files } => cmd_validate(&files),
        Command::Invariants { file, format } => cmd_invariants(&file, format),
        Command::Move(args) => cmd_move(&args),
        Command::BoundaryLink { file, format, out } => cmd_boundary_link(&file, format, out),
        Command::Bracket { file, budget, format } => cmd_bracket(&file, budget, format),
        Command::Homclass { files, format } => cmd_homclass(&files, format),
        Command::Enumerate { max_complexity, max_b, seed, format } => {
            cmd_enumerate(max_complexity, max_b, seed, format)
        }
        Command::Render { file, out } => cmd_render(&file, out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::from(0),
        Err(CliError::Validation(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {}", msg);
            ExitCode::from(2)
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("budget exceeded: {}", msg);
            ExitCode::from(3)
        }
    }
}
