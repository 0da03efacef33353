//! Thin command-line surface over the library. One solve per invocation;
//! exit codes are 0 = yes, 1 = no, 2 = error across all subcommands.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use circledom::dp;
use circledom::fpt::fpt_tree_dominating;
use circledom::graph::{verify_variant, DominationVariant};
use circledom::oracle::{brute_min_dominating, brute_tree_dominating};
use circledom::reduction::{
    gen_acyclic_from_kcc, gen_domset_from_kcc, gen_independent_from_kcc,
    gen_tree_from_3partition, parse_colored_graph, parse_three_partition,
};
use circledom::report::{SolveResult, SolveStats};
use circledom::repr::{parse_representation, CircleRepresentation};
use circledom::tree::{alpha, parse_tree, AlphaMode, RootedTree};

#[derive(Parser)]
#[command(name = "circledom", about = "Dominating-set solvers for circle graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    Plain,
    Connected,
    Total,
    Independent,
    Acyclic,
    ConnAcyclic,
    Tree,
    TreeSize,
}

impl Variant {
    fn as_str(self) -> &'static str {
        match self {
            Variant::Plain => "plain",
            Variant::Connected => "connected",
            Variant::Total => "total",
            Variant::Independent => "independent",
            Variant::Acyclic => "acyclic",
            Variant::ConnAcyclic => "conn-acyclic",
            Variant::Tree => "tree",
            Variant::TreeSize => "tree-size",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Domset,
    Independent,
    Acyclic,
    #[value(name = "3part")]
    ThreePart,
    Random,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide domination on a chord diagram and print a JSON result.
    Solve {
        /// Representation file.
        input: PathBuf,
        #[arg(long, value_enum, default_value = "conn-acyclic")]
        variant: Variant,
        /// Tree file; required by --variant tree.
        #[arg(long)]
        tree: Option<PathBuf>,
        /// Exact solution size; required by --variant tree-size.
        #[arg(long)]
        size: Option<usize>,
        /// Decide by brute force instead of the table-based solvers.
        #[arg(long)]
        oracle: bool,
        /// Lift the brute-force size guards (n > 24 or target > 6 refused otherwise).
        #[arg(long)]
        force: bool,
    },
    /// Generate a structured instance from a combinatorial source.
    Gen {
        /// Colored-graph or 3-partition source file; random kind ignores it.
        source: Option<PathBuf>,
        #[arg(long, value_enum)]
        kind: GenKind,
        /// Representation output path; metadata lands next to it as
        /// <path>.meta.json. Prints to standard output when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Tree output path for the 3-partition kind (default <out>.tree).
        #[arg(long)]
        tree_out: Option<PathBuf>,
        /// Chord count for --kind random.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "0")]
        seed: u64,
    },
    /// Check a witness file against a diagram; prints true or false.
    Verify {
        /// Representation file.
        input: PathBuf,
        /// Whitespace-separated chord labels.
        witness: PathBuf,
        #[arg(long, value_enum, default_value = "plain")]
        variant: Variant,
        #[arg(long)]
        tree: Option<PathBuf>,
        #[arg(long)]
        size: Option<usize>,
    },
    /// Report the branching measure of a rooted tree.
    Alpha {
        /// Tree file.
        input: PathBuf,
        /// Evaluate for this root (1-based) instead of maximizing over roots.
        #[arg(long)]
        root: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_tree(path: &Option<PathBuf>, variant: Variant) -> Result<Option<RootedTree>> {
    match (variant, path) {
        (Variant::Tree, Some(p)) => Ok(Some(parse_tree(&read(p)?)?)),
        (Variant::Tree, None) => bail!("--variant tree requires --tree FILE"),
        _ => Ok(None),
    }
}

fn guard(force: bool, n: usize, target: Option<usize>) -> Result<()> {
    if force {
        return Ok(());
    }
    if n > 24 {
        bail!("brute force refused for n = {n} > 24; pass --force to override");
    }
    if let Some(t) = target {
        if t > 6 {
            bail!("brute force refused for target {t} > 6; pass --force to override");
        }
    }
    Ok(())
}

/// Yes-answers are re-verified before they are printed; a witness the
/// checker rejects is an internal error, not a yes.
fn emit(repr: &CircleRepresentation, variant: &DominationVariant, result: SolveResult) -> Result<u8> {
    if let Some(names) = &result.witness {
        let ids: Vec<usize> =
            names.iter().map(|s| repr.chord_id(s)).collect::<circledom::Result<_>>()?;
        if !verify_variant(&repr.intersection_graph(), &ids, variant) {
            bail!("internal error: produced witness fails verification");
        }
    }
    println!("{}", result.to_json());
    Ok(if result.is_yes() { 0 } else { 1 })
}

fn names(repr: &CircleRepresentation, ids: &[usize]) -> Vec<String> {
    ids.iter().map(|&c| repr.chord_name(c).to_string()).collect()
}

fn cmd_solve(
    input: &Path,
    variant: Variant,
    tree_path: &Option<PathBuf>,
    size: Option<usize>,
    oracle: bool,
    force: bool,
) -> Result<u8> {
    let repr = parse_representation(&read(input)?)?;
    let tree = load_tree(tree_path, variant)?;
    let dom_variant = match variant {
        Variant::Plain => DominationVariant::Plain,
        Variant::Connected => DominationVariant::Connected,
        Variant::Total => DominationVariant::Total,
        Variant::Independent => DominationVariant::Independent,
        Variant::Acyclic => DominationVariant::Acyclic,
        Variant::ConnAcyclic => DominationVariant::ConnectedAcyclic,
        Variant::Tree => DominationVariant::GivenTree(tree.clone().unwrap()),
        Variant::TreeSize => DominationVariant::FixedSizeTree(
            size.ok_or_else(|| anyhow!("--variant tree-size requires --size K"))?,
        ),
    };
    let n = repr.n();
    let vname = variant.as_str();
    let start = Instant::now();
    let elapsed = |start: Instant| SolveStats {
        regions: 0,
        entries: 0,
        elapsed_ms: start.elapsed().as_millis(),
    };

    // only conn-acyclic, tree-size, and tree have dedicated solvers; the
    // other variants are oracle-only by construction
    let exact = !oracle
        && matches!(variant, Variant::ConnAcyclic | Variant::TreeSize | Variant::Tree);

    let result = if exact {
        match variant {
            Variant::ConnAcyclic | Variant::TreeSize => {
                let table = dp::solve(&repr);
                let witness = match variant {
                    Variant::ConnAcyclic => {
                        (1..=n).find_map(|k| table.dominating_tree_witness(k))
                    }
                    _ => table.dominating_tree_witness(size.unwrap()),
                };
                let stats = SolveStats {
                    regions: table.region_count(),
                    entries: table.entry_count(),
                    elapsed_ms: start.elapsed().as_millis(),
                };
                match witness {
                    Some(w) => SolveResult::yes(vname, names(&repr, &w), stats),
                    None => SolveResult::no(vname, stats),
                }
            }
            Variant::Tree => match fpt_tree_dominating(&repr, tree.as_ref().unwrap()) {
                Some((chords, map)) => {
                    let mut r = SolveResult::yes(vname, names(&repr, &chords), elapsed(start));
                    r.vertex_map = Some(
                        map.iter()
                            .map(|&(c, v)| (repr.chord_name(c).to_string(), v))
                            .collect::<BTreeMap<_, _>>(),
                    );
                    r
                }
                None => SolveResult::no(vname, elapsed(start)),
            },
            _ => unreachable!(),
        }
    } else {
        let target = match &dom_variant {
            DominationVariant::FixedSizeTree(k) => Some(*k),
            DominationVariant::GivenTree(t) => Some(t.size()),
            _ => None,
        };
        guard(force, n, target)?;
        let g = repr.intersection_graph();
        let hit = match &dom_variant {
            DominationVariant::GivenTree(t) => brute_tree_dominating(&g, t),
            DominationVariant::FixedSizeTree(k) => {
                brute_min_dominating(&g, &dom_variant, *k).map(|(_, w)| w)
            }
            v => brute_min_dominating(&g, v, n).map(|(_, w)| w),
        };
        match hit {
            Some(w) => SolveResult::yes(vname, names(&repr, &w), elapsed(start)),
            None => SolveResult::no(vname, elapsed(start)),
        }
    };
    emit(&repr, &dom_variant, result)
}

fn cmd_gen(
    source: &Option<PathBuf>,
    kind: GenKind,
    out: &Option<PathBuf>,
    tree_out: &Option<PathBuf>,
    n: Option<usize>,
    seed: u64,
) -> Result<u8> {
    let write_rep = |repr: &CircleRepresentation, meta: Option<serde_json::Value>| -> Result<()> {
        match out {
            Some(path) => {
                fs::write(path, repr.serialize())
                    .with_context(|| format!("writing {}", path.display()))?;
                if let Some(meta) = meta {
                    let mut meta_path = path.clone().into_os_string();
                    meta_path.push(".meta.json");
                    fs::write(&meta_path, serde_json::to_string_pretty(&meta)?)?;
                }
                eprintln!("wrote {} chords to {}", repr.n(), path.display());
            }
            None => print!("{}", repr.serialize()),
        }
        Ok(())
    };
    let src_text = |kind: &str| -> Result<String> {
        let path = source
            .as_ref()
            .ok_or_else(|| anyhow!("--kind {kind} requires a source file"))?;
        read(path)
    };

    match kind {
        GenKind::Random => {
            let n = n.ok_or_else(|| anyhow!("--kind random requires --n"))?;
            write_rep(&CircleRepresentation::random(n, seed), None)?;
        }
        GenKind::Domset | GenKind::Independent | GenKind::Acyclic => {
            let cg = parse_colored_graph(&src_text("colored-graph")?)?;
            let inst = match kind {
                GenKind::Domset => gen_domset_from_kcc(&cg)?,
                GenKind::Independent => gen_independent_from_kcc(&cg)?,
                _ => gen_acyclic_from_kcc(&cg)?,
            };
            write_rep(&inst.repr, Some(inst.metadata_json()))?;
        }
        GenKind::ThreePart => {
            let src = parse_three_partition(&src_text("3part")?)?;
            let (tree, inst) = gen_tree_from_3partition(&src)?;
            write_rep(&inst.repr, Some(inst.metadata_json()))?;
            let tree_path = match (tree_out, out) {
                (Some(p), _) => p.clone(),
                (None, Some(o)) => {
                    let mut p = o.clone().into_os_string();
                    p.push(".tree");
                    PathBuf::from(p)
                }
                (None, None) => bail!("--kind 3part requires --tree-out or -o"),
            };
            fs::write(&tree_path, tree.serialize())
                .with_context(|| format!("writing {}", tree_path.display()))?;
        }
    }
    Ok(0)
}

fn cmd_verify(
    input: &Path,
    witness: &Path,
    variant: Variant,
    tree_path: &Option<PathBuf>,
    size: Option<usize>,
) -> Result<u8> {
    let repr = parse_representation(&read(input)?)?;
    let tree = load_tree(tree_path, variant)?;
    let dom_variant = match variant {
        Variant::Plain => DominationVariant::Plain,
        Variant::Connected => DominationVariant::Connected,
        Variant::Total => DominationVariant::Total,
        Variant::Independent => DominationVariant::Independent,
        Variant::Acyclic => DominationVariant::Acyclic,
        Variant::ConnAcyclic => DominationVariant::ConnectedAcyclic,
        Variant::Tree => DominationVariant::GivenTree(tree.unwrap()),
        Variant::TreeSize => DominationVariant::FixedSizeTree(
            size.ok_or_else(|| anyhow!("--variant tree-size requires --size K"))?,
        ),
    };
    let ids: Vec<usize> = read(witness)?
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .flat_map(|l| l.split_whitespace())
        .map(|name| repr.chord_id(name))
        .collect::<circledom::Result<_>>()?;
    let ok = verify_variant(&repr.intersection_graph(), &ids, &dom_variant);
    println!("{ok}");
    Ok(if ok { 0 } else { 1 })
}

fn cmd_alpha(input: &Path, root: Option<usize>, json: bool) -> Result<u8> {
    let tree = parse_tree(&read(input)?)?;
    let (report, rooted) = match root {
        Some(r) => {
            if r == 0 || r > tree.size() {
                bail!("root {r} out of range 1..={}", tree.size());
            }
            (alpha(&tree.rerooted(r - 1), AlphaMode::PerRoot), true)
        }
        None => (alpha(&tree, AlphaMode::MaxOverRoots), false),
    };
    if json {
        println!(
            "{}",
            serde_json::json!({
                "schema": 1,
                "alpha": report.value.to_string(),
                "root": if rooted { root.unwrap() } else { report.argmax_root + 1 },
                "argmax_vertex": report.argmax_vertex + 1,
            })
        );
    } else if rooted {
        println!("alpha = {} (root {})", report.value, root.unwrap());
    } else {
        println!(
            "alpha = {} (argmax root {}, vertex {})",
            report.value,
            report.argmax_root + 1,
            report.argmax_vertex + 1
        );
    }
    Ok(0)
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.cmd {
        Cmd::Solve { input, variant, tree, size, oracle, force } => {
            cmd_solve(input, *variant, tree, *size, *oracle, *force)
        }
        Cmd::Gen { source, kind, out, tree_out, n, seed } => {
            cmd_gen(source, *kind, out, tree_out, *n, *seed)
        }
        Cmd::Verify { input, witness, variant, tree, size } => {
            cmd_verify(input, witness, *variant, tree, *size)
        }
        Cmd::Alpha { input, root, json } => cmd_alpha(input, *root, *json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
