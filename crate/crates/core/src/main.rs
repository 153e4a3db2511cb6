use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use prismatic::clique_cover::EXACT_COVER_LIMIT;
use prismatic::generators::{default_sweep, generate, random_schlafli_induced, FamilyId, FamilySpec};
use prismatic::io::{parse_graph, write_graph};
use prismatic::{
    check_clawfree, check_orientable, check_prismatic, clique_cover_exact, clique_cover_nonorientable,
    clique_cover_small_hitting, derived_component_kinds, find_hitting_set_at_most, find_rotator_or_twister,
    is_diamond_k4_free, is_orientable, is_prismatic, is_rigid, max_triangle_packing_prismatic, min_hitting_set,
    ComponentKind, Error, Graph, Verdict,
};

#[derive(Parser)]
#[command(name = "prismatic", version, about = "Generators and exact solvers for prismatic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph from a named family.
    Gen {
        family: String,
        /// Family parameter as key=value; `index=N` picks the N-th default sweep item.
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
        /// Output file; stdout when omitted.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        /// Seed for `schlafli-induced size=K`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Report structural properties.
    Check {
        file: PathBuf,
        #[command(flatten)]
        props: Props,
    },
    /// Find a triangle hitting set.
    HittingSet {
        file: PathBuf,
        /// Largest size searched for.
        #[arg(long, value_name = "K", conflicts_with = "exact")]
        max: Option<usize>,
        /// Compute a minimum hitting set.
        #[arg(long)]
        exact: bool,
    },
    /// Print a minimum clique cover.
    CliqueCover { file: PathBuf },
    /// Print a maximum set of vertex-disjoint triangles.
    Pack { file: PathBuf },
    /// Print size counts and a derived-graph summary.
    Stats { file: PathBuf },
}

#[derive(Args)]
struct Props {
    #[arg(long)]
    prismatic: bool,
    #[arg(long)]
    orientable: bool,
    #[arg(long)]
    rigid: bool,
    #[arg(long)]
    clawfree: bool,
}

/// A failed run: exit status and message for stderr.
struct Failure {
    code: u8,
    message: String,
}

fn parse_failure(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn precondition(message: impl Into<String>) -> Failure {
    Failure {
        code: 3,
        message: message.into(),
    }
}

fn from_error(e: Error) -> Failure {
    match e {
        Error::Parse { .. } | Error::InvalidParameter { .. } => parse_failure(e.to_string()),
        _ => precondition(e.to_string()),
    }
}

struct Report {
    text: String,
    code: u8,
}

fn ok(text: String) -> Result<Report, Failure> {
    Ok(Report { text, code: 0 })
}

fn read(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| parse_failure(format!("{}: {e}", path.display())))?;
    parse_graph(&text)
        .map(|f| f.graph)
        .map_err(|e| parse_failure(format!("{}: {e}", path.display())))
}

fn family_spec(family: &str, params: &[String], seed: u64) -> Result<FamilySpec, Failure> {
    let id = FamilyId::from_name(family).ok_or_else(|| {
        let names: Vec<&str> = FamilyId::ALL.iter().map(|f| f.name()).collect();
        parse_failure(format!("unknown family {family:?}; known: {}", names.join(" ")))
    })?;
    let mut map = BTreeMap::new();
    for p in params {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| parse_failure(format!("parameter {p:?} is not key=value")))?;
        if map.insert(k.to_string(), v.to_string()).is_some() {
            return Err(parse_failure(format!("parameter {k} given twice")));
        }
    }
    let sweep_pick = |key: &str| -> Result<Option<usize>, Failure> {
        match map.get(key) {
            None => Ok(None),
            Some(_) if map.len() > 1 => Err(parse_failure(format!("{key} cannot be combined with other parameters"))),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| parse_failure(format!("{key}={v} is not a non-negative integer"))),
        }
    };
    if let Some(i) = sweep_pick("index")? {
        let sweep = default_sweep(id);
        return sweep
            .get(i)
            .cloned()
            .ok_or_else(|| parse_failure(format!("index {i} out of range: {family} sweep has {} items", sweep.len())));
    }
    if id == FamilyId::SchlafliInduced {
        if let Some(size) = sweep_pick("size")? {
            if !(1..=27).contains(&size) {
                return Err(parse_failure("size must be between 1 and 27"));
            }
            return Ok(random_schlafli_induced(seed, 1, size, size).remove(0));
        }
    }
    if map.is_empty() {
        if let Some(first) = default_sweep(id).into_iter().find(|s| generate(s).is_ok()) {
            return Ok(first);
        }
    }
    FamilySpec::from_params(id, &map).map_err(from_error)
}

fn gen(family: &str, params: &[String], output: Option<&Path>, seed: u64) -> Result<Report, Failure> {
    let spec = family_spec(family, params, seed)?;
    let g = generate(&spec).map_err(from_error)?;
    let text = write_graph(&g, Some(&spec.to_string()));
    match output {
        None => ok(text),
        Some(path) => {
            std::fs::write(path, text).map_err(|e| parse_failure(format!("{}: {e}", path.display())))?;
            ok(String::new())
        }
    }
}

fn verdict_line(out: &mut String, name: &str, v: &Verdict) -> bool {
    match v {
        Verdict::Yes => writeln!(out, "{name}: yes").unwrap(),
        Verdict::No(o) => writeln!(out, "{name}: no\n  obstruction: {o}").unwrap(),
    }
    v.holds()
}

fn check(g: &Graph, props: &Props) -> Result<Report, Failure> {
    let none = !(props.prismatic || props.orientable || props.rigid || props.clawfree);
    let mut out = String::new();
    let mut all = true;
    if props.prismatic || none {
        all &= verdict_line(&mut out, "prismatic", &check_prismatic(g));
    }
    if props.orientable {
        let v = check_orientable(g).map_err(from_error)?;
        all &= verdict_line(&mut out, "orientable", &v);
        if !v.holds() {
            if let Some(o) = find_rotator_or_twister(g).found() {
                writeln!(out, "  induced: {o}").unwrap();
            }
        }
    }
    if props.rigid {
        let rigid = is_rigid(g).map_err(from_error)?;
        writeln!(out, "rigid: {}", if rigid { "yes" } else { "no" }).unwrap();
        all &= rigid;
    }
    if props.clawfree {
        all &= verdict_line(&mut out, "clawfree", &check_clawfree(g));
    }
    Ok(Report {
        text: out,
        code: if all { 0 } else { 1 },
    })
}

fn vertex_line(vs: &[usize]) -> String {
    let list: Vec<String> = vs.iter().map(usize::to_string).collect();
    format!("vertices {}\nsize {}\n", list.join(" "), vs.len())
}

fn hitting_set(g: &Graph, max: Option<usize>, exact: bool) -> Result<Report, Failure> {
    if exact {
        return ok(vertex_line(&min_hitting_set(g).vertices));
    }
    match find_hitting_set_at_most(g, max.unwrap_or(5)).map_err(from_error)? {
        Some(h) => ok(vertex_line(&h.vertices)),
        None => ok("none\n".into()),
    }
}

fn clique_cover(g: &Graph) -> Result<Report, Failure> {
    let cover = if is_prismatic(g) && !is_orientable(g).map_err(from_error)? {
        clique_cover_nonorientable(g)
    } else if is_diamond_k4_free(g) && find_hitting_set_at_most(g, 5).map_err(from_error)?.is_some() {
        clique_cover_small_hitting(g)
    } else if g.n() <= EXACT_COVER_LIMIT {
        clique_cover_exact(g)
    } else {
        return Err(precondition(
            "clique cover needs a non-orientable prismatic graph, a diamond-free K4-free graph with a \
             hitting set of size at most 5, or at most 27 vertices",
        ));
    };
    ok(cover.map_err(from_error)?.to_string())
}

fn stats(g: &Graph) -> Result<Report, Failure> {
    let mut out = format!(
        "n={} m={} triangles={} core={}\n",
        g.n(),
        g.edge_count(),
        g.triangles().len(),
        g.core().len()
    );
    let kinds = derived_component_kinds(g).map_err(from_error)?;
    let count = |k: Option<ComponentKind>| kinds.iter().filter(|(_, x)| *x == k).count();
    writeln!(
        out,
        "derived components={} k33={} clawfree={} other={}",
        kinds.len(),
        count(Some(ComponentKind::K33)),
        count(Some(ComponentKind::ClawFree)),
        count(None)
    )
    .unwrap();
    ok(out)
}

fn run(cli: Cli) -> Result<Report, Failure> {
    match cli.command {
        Command::Gen {
            family,
            params,
            output,
            seed,
        } => gen(&family, &params, output.as_deref(), seed),
        Command::Check { file, props } => check(&read(&file)?, &props),
        Command::HittingSet { file, max, exact } => hitting_set(&read(&file)?, max, exact),
        Command::CliqueCover { file } => clique_cover(&read(&file)?),
        Command::Pack { file } => ok(max_triangle_packing_prismatic(&read(&file)?)
            .map_err(from_error)?
            .to_string()),
        Command::Stats { file } => stats(&read(&file)?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(r) => {
            print!("{}", r.text);
            ExitCode::from(r.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
