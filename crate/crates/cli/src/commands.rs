use std::fmt::Write;
use std::path::{Path, PathBuf};

use reductlab_core::dot::to_dot;
use reductlab_core::galois::inclusion_witness;
use reductlab_core::grid::{section_classify, section_member, SectionConvention};
use reductlab_core::verify::{self, grid_diagram, order_diagram, VerifyConfig};
use reductlab_core::{
    aut_group, definable, hasse, space_compare, with_jobs, Definability, DefinabilitySpace, Error,
    GridStructure, HasseDiagram, Permutation, Relation, StructureKind,
};

use crate::workspace::{parse_workspace, StructureSpec, Workspace, WorkspaceFile};
use crate::{Cli, CliError, Command};

const DEFAULT_LINEAR: StructureSpec = StructureSpec::Linear(6);
const DEFAULT_GRID: StructureSpec = StructureSpec::Grid(4, 3);

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_grid_flag(text: &str) -> Result<StructureSpec, CliError> {
    let bad = || CliError::Usage(format!("--grid expects MxH, found `{text}`"));
    let (m, h) = text.split_once(['x', 'X']).ok_or_else(bad)?;
    Ok(StructureSpec::Grid(
        m.trim().parse().map_err(|_| bad())?,
        h.trim().parse().map_err(|_| bad())?,
    ))
}

/// Workspace file contents with structure flags applied.
fn workspace_file(cli: &Cli) -> Result<WorkspaceFile, CliError> {
    let mut file = match &cli.workspace {
        Some(p) => parse_workspace(&read(p)?)?,
        None => WorkspaceFile::default(),
    };
    if let Some(n) = cli.linear {
        file.structure = Some(StructureSpec::Linear(n));
    }
    if let Some(g) = &cli.grid {
        file.structure = Some(parse_grid_flag(g)?);
    }
    Ok(file)
}

pub fn run(cli: &Cli) -> Result<String, CliError> {
    with_jobs(cli.jobs, || dispatch(cli))?
}

fn dispatch(cli: &Cli) -> Result<String, CliError> {
    let file = workspace_file(cli)?;
    match &cli.command {
        Command::Lattice { sets, figure } => lattice(cli, file, sets, *figure),
        Command::VerifyPaper => verify_paper(cli, file),
        cmd => {
            let ws = Workspace::load(file, DEFAULT_LINEAR)?;
            match cmd {
                Command::Eval { name } => eval(&ws, name),
                Command::Definable { target, base } => definable_cmd(&ws, target, base),
                Command::Aut { names, order_only } => aut(&ws, names, *order_only),
                Command::Witness { first, second } => witness(&ws, first, second),
                Command::Boundary { name } => boundary(cli, &ws, name),
                Command::Classify { images } => classify(&ws, images),
                Command::Lattice { .. } | Command::VerifyPaper => unreachable!(),
            }
        }
    }
}

fn eval(ws: &Workspace, name: &str) -> Result<String, CliError> {
    let r = ws.resolve(name)?;
    let mut out = String::new();
    for t in r.tuples() {
        writeln!(out, "{}", ws.structure.render_tuple(&t)).unwrap();
    }
    Ok(out)
}

fn resolve_all(ws: &Workspace, lists: &[String]) -> Result<Vec<Relation>, CliError> {
    let mut out = Vec::new();
    for l in lists {
        out.extend(ws.resolve_set(l)?);
    }
    Ok(out)
}

fn definable_cmd(ws: &Workspace, target: &str, base: &[String]) -> Result<String, CliError> {
    let t = ws.resolve(target)?;
    let base = resolve_all(ws, base)?;
    Ok(match definable(&t, &base, &ws.structure)? {
        Definability::Yes => "YES\n".to_string(),
        Definability::No(w) => format!("NO {w}\n"),
    })
}

fn aut(ws: &Workspace, names: &[String], order_only: bool) -> Result<String, CliError> {
    let rels = resolve_all(ws, names)?;
    let g = aut_group(&ws.structure, &rels)?;
    let mut out = format!("order={}\n", g.order());
    if !order_only {
        for p in g.members() {
            writeln!(out, "{p}").unwrap();
        }
    }
    Ok(out)
}

fn witness(ws: &Workspace, first: &str, second: &str) -> Result<String, CliError> {
    let a = DefinabilitySpace::new(&ws.structure, ws.resolve_set(first)?)?;
    let b = DefinabilitySpace::new(&ws.structure, ws.resolve_set(second)?)?;
    let mut out = format!("relation={}\n", space_compare(&a, &b)?);
    // a member of the first group breaking a second generator shows the
    // second space is not inside the first, and symmetrically
    if let Some(w) = inclusion_witness(&a, &b)? {
        writeln!(out, "first-misses-second {w}").unwrap();
    }
    if let Some(w) = inclusion_witness(&b, &a)? {
        writeln!(out, "second-misses-first {w}").unwrap();
    }
    Ok(out)
}

fn boundary(cli: &Cli, ws: &Workspace, name: &str) -> Result<String, CliError> {
    let r = ws.resolve(name)?;
    let view = ws.structure.difference_view();
    let cap = cli.boundary_cap.unwrap_or(view.height().saturating_sub(1));
    match view.boundary(&r, cap) {
        Ok(b) => Ok(format!("{b}\n")),
        Err(Error::ExceedsCap { cap }) => Err(CliError::Mismatch(format!("exceeds cap {cap}\n"))),
        Err(e) => Err(e.into()),
    }
}

fn parse_images(args: &[String]) -> Result<Permutation, CliError> {
    let images = args
        .iter()
        .flat_map(|a| a.split([',', ' ']))
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.trim_matches(|c| c == '[' || c == ']')
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad permutation image `{s}`")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Permutation::new(images)?)
}

fn classify(ws: &Workspace, images: &[String]) -> Result<String, CliError> {
    let p = parse_images(images)?;
    let n = ws.structure.size();
    if p.size() != n {
        return Err(CliError::Core(Error::SizeMismatch {
            left: p.size(),
            right: n,
        }));
    }
    let mut out = String::new();
    match ws.structure.kind() {
        StructureKind::Grid(g) => {
            let c = g.classify(&p)?;
            writeln!(out, "{c}").unwrap();
            if c.systemic {
                writeln!(out, "initiation={}", g.initiate(&p)?).unwrap();
            }
        }
        StructureKind::Linear => {
            for (s, cond) in section_classify(&p) {
                writeln!(out, "section split={} condition={cond}", s.split).unwrap();
            }
            for conv in SectionConvention::ALL {
                let yes = section_member(&p, conv);
                writeln!(
                    out,
                    "member {}={}",
                    conv.name(),
                    if yes { "yes" } else { "no" }
                )
                .unwrap();
            }
        }
    }
    Ok(out)
}

fn golden_path(figure: u8) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("goldens")
        .join(format!("fig{figure}.dot"))
}

fn figure_diagram(
    figure: u8,
    spec: Option<StructureSpec>,
) -> Result<(HasseDiagram, String), CliError> {
    match (figure, spec) {
        (1, None) => figure_diagram(1, Some(DEFAULT_LINEAR)),
        (2, None) => figure_diagram(2, Some(DEFAULT_GRID)),
        (1, Some(s @ StructureSpec::Linear(_))) => Ok((order_diagram(&s.build()?)?, "fig1".into())),
        (2, Some(s @ StructureSpec::Grid(..))) => {
            Ok((grid_diagram(&s.build()?, true)?, "fig2".into()))
        }
        (1 | 2, Some(_)) => Err(CliError::Usage(format!(
            "figure {figure} needs a {} structure",
            if figure == 1 { "linear" } else { "grid" }
        ))),
        _ => Err(CliError::Usage(format!(
            "unknown figure {figure}; expected 1 or 2"
        ))),
    }
}

fn lattice(
    cli: &Cli,
    file: WorkspaceFile,
    sets: &[String],
    figure: Option<u8>,
) -> Result<String, CliError> {
    if cli.regen_goldens {
        let mut out = String::new();
        for f in [1, 2] {
            let (d, name) = figure_diagram(f, None)?;
            let path = golden_path(f);
            write_file(&path, &to_dot(&d, &name))?;
            writeln!(out, "wrote {}", path.display()).unwrap();
        }
        return Ok(out);
    }
    let dot = match figure {
        Some(f) => {
            let (d, name) = figure_diagram(f, file.structure.clone())?;
            to_dot(&d, &name)
        }
        None => {
            if sets.is_empty() {
                return Err(CliError::Usage("lattice needs --set or --figure".into()));
            }
            let ws = Workspace::load(file, DEFAULT_LINEAR)?;
            let spaces = sets
                .iter()
                .map(|s| Ok(DefinabilitySpace::new(&ws.structure, ws.resolve_set(s)?)?))
                .collect::<Result<Vec<_>, CliError>>()?;
            to_dot(&hasse(spaces)?, "lattice")
        }
    };
    match &cli.dot_out {
        Some(path) => {
            write_file(path, &dot)?;
            Ok(String::new())
        }
        None => Ok(dot),
    }
}

fn verify_paper(cli: &Cli, file: WorkspaceFile) -> Result<String, CliError> {
    let mut cfg = VerifyConfig {
        boundary_cap: cli.boundary_cap,
        ..VerifyConfig::default()
    };
    match file.structure {
        Some(StructureSpec::Linear(n)) => cfg.linear_n = n,
        Some(StructureSpec::Grid(m, h)) => cfg.lattice_grid = GridStructure::new(m, h)?,
        None => {}
    }
    let report = verify::run(&cfg)?;
    let text = report.render();
    if report.all_passed() {
        Ok(text)
    } else {
        Err(CliError::Mismatch(text))
    }
}
