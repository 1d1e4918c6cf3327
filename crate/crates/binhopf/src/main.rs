use clap::{Parser, Subcommand, ValueEnum};

use binhopf::error::Error;
use binhopf::hopf::{antipode, coproduct};
use binhopf::linear::LinComb;
use binhopf::pairing::pair_linear;
use binhopf::parse::{parse_forest, parse_tree};
use binhopf::prelie::{
    growth, prelie, prelie_exponential, pruning, shuffle_coproduct, star,
};
use binhopf::tree::{enumerate_forests, enumerate_trees, Forest};
use binhopf::verify::{suite_all, suite_duality, suite_exp, suite_hopf, suite_prelie};

/// Exact computations in the Hopf algebra of binary forests.
#[derive(Parser)]
#[command(name = "binhopf", version, about)]
struct Cli {
    /// Emit machine-readable JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical form of a tree.
    Canon { tree: String },
    /// Print the symmetry factor of a forest.
    Sym { forest: String },
    /// Coproduct of a forest by binary-admissible cuts.
    Coproduct { forest: String },
    /// Antipode of a forest.
    Antipode { forest: String },
    /// Insert tree S at one edge of tree T (edge 0 is the ghost root edge).
    Insert {
        tree: String,
        subtree: String,
        /// Depth-first edge index in the canonical form.
        #[arg(long, default_value_t = 0)]
        edge: usize,
    },
    /// Pre-Lie product: insert S at every edge of T.
    Prelie { tree: String, subtree: String },
    /// Star product of two forests (grafting with skips).
    Star { forest: String, other: String },
    /// Shuffle coproduct of a forest over its components.
    Shuffle { forest: String },
    /// Symmetric pairing of two forests.
    Pair { forest: String, other: String },
    /// Growth operator: insert one new leaf everywhere.
    Grow { forest: String },
    /// Pruning operator: remove one leaf everywhere.
    Prune { forest: String },
    /// Truncated pre-Lie exponential of the single leaf.
    Exp {
        #[arg(long)]
        degree: usize,
    },
    /// List all unlabelled trees or forests of one degree.
    Enumerate {
        #[arg(value_enum)]
        kind: Kind,
        degree: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_leaves: usize,
        #[arg(long, default_value_t = 6)]
        degree: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Trees,
    Forests,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    All,
    Hopf,
    Prelie,
    Duality,
    Exp,
}

fn forest_lc(text: &str) -> Result<LinComb, Error> {
    Ok(LinComb::from_forest(parse_forest(text)?))
}

fn print_lc(x: &LinComb, json: bool) {
    if json {
        println!("{}", x.to_json());
    } else {
        println!("{x}");
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    let json = cli.json;
    match cli.command {
        Command::Canon { tree } => {
            let t = parse_tree(&tree)?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({"schema": "binhopf/1", "canon": t.to_string()})
                );
            } else {
                println!("{t}");
            }
        }
        Command::Sym { forest } => {
            let f = parse_forest(&forest)?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({"schema": "binhopf/1", "sym": f.aut_order()})
                );
            } else {
                println!("{}", f.aut_order());
            }
        }
        Command::Coproduct { forest } => {
            let d = coproduct(&forest_lc(&forest)?);
            if json {
                println!("{}", d.to_json());
            } else {
                println!("{d}");
            }
        }
        Command::Antipode { forest } => print_lc(&antipode(&forest_lc(&forest)?), json),
        Command::Insert { tree, subtree, edge } => {
            let t = parse_tree(&tree)?.insert_at_edge(edge, &parse_tree(&subtree)?)?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({"schema": "binhopf/1", "tree": t.to_string()})
                );
            } else {
                println!("{t}");
            }
        }
        Command::Prelie { tree, subtree } => {
            print_lc(&prelie(&parse_tree(&tree)?, &parse_tree(&subtree)?), json)
        }
        Command::Star { forest, other } => {
            print_lc(&star(&forest_lc(&forest)?, &forest_lc(&other)?)?, json)
        }
        Command::Shuffle { forest } => {
            let d = shuffle_coproduct(&parse_forest(&forest)?);
            if json {
                println!("{}", d.to_json());
            } else {
                println!("{d}");
            }
        }
        Command::Pair { forest, other } => {
            let v = pair_linear(&forest_lc(&forest)?, &forest_lc(&other)?);
            if json {
                println!(
                    "{}",
                    serde_json::json!({"schema": "binhopf/1", "pair": v.to_string()})
                );
            } else {
                println!("{v}");
            }
        }
        Command::Grow { forest } => print_lc(&growth(&forest_lc(&forest)?)?, json),
        Command::Prune { forest } => print_lc(&pruning(&forest_lc(&forest)?), json),
        Command::Exp { degree } => print_lc(&prelie_exponential(degree)?, json),
        Command::Enumerate { kind, degree } => {
            let items: Vec<String> = match kind {
                Kind::Trees => enumerate_trees(degree)?
                    .iter()
                    .map(|t| t.to_string())
                    .collect(),
                Kind::Forests => enumerate_forests(degree)?
                    .iter()
                    .map(Forest::to_string)
                    .collect(),
            };
            if json {
                println!(
                    "{}",
                    serde_json::json!({"schema": "binhopf/1", "count": items.len(), "items": items})
                );
            } else {
                for it in &items {
                    println!("{it}");
                }
            }
        }
        Command::Verify {
            suite,
            max_leaves,
            degree,
        } => {
            let reports = match suite {
                Suite::All => suite_all(max_leaves, degree)?,
                Suite::Hopf => vec![suite_hopf(max_leaves)?],
                Suite::Prelie => vec![suite_prelie(max_leaves)?],
                Suite::Duality => vec![suite_duality(max_leaves)?],
                Suite::Exp => vec![suite_exp(degree)?],
            };
            let pass = reports.iter().all(|r| r.pass());
            for r in &reports {
                if json {
                    println!("{}", r.to_json());
                } else {
                    print!("{r}");
                }
            }
            return Ok(pass);
        }
    }
    Ok(true)
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => std::process::exit(0),
        Ok(false) => std::process::exit(1),
        Err(e @ Error::ResourceLimit(_)) => {
            eprintln!("error: {e}");
            std::process::exit(3);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
