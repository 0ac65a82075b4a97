//! Command-line front end: check suites, monoid rewriting, Grothendieck
//! matrices, coinvariant reduction, bimodule verifications and block-model
//! functor evaluation. Reports are JSON by default, markdown with
//! --pretty. Exit codes: 0 all checks pass, 1 some check failed, 2 usage
//! error.

mod parser;
mod suites;

use clap::{Args, Parser, Subcommand};
use rootfunctors::blockcat::{checks, AlgebraSpec, Block};
use rootfunctors::coinvariant::{parse_poly, CoinvariantAlgebra};
use rootfunctors::ktheory;
use rootfunctors::report::CheckReport;
use rootfunctors::rewrite::{complete, eggbox_finite, green_witnesses, preset, Presentation, RewriteSystem};
use rootfunctors::soergel;
use rootfunctors::weyl::WeylElement;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "rootfunctors", version, about = "verification toolkit for wall-crossing functor algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named check suite and report pass/fail.
    Check(CheckArgs),
    /// Weyl group element utilities.
    Weyl(WeylArgs),
    /// Finitely presented monoid operations.
    Monoid(MonoidArgs),
    /// Integer matrices on the Grothendieck group.
    Ktheory(KtheoryArgs),
    /// Coinvariant algebra reduction.
    Coinv(CoinvArgs),
    /// Bimodule chain verifications.
    Soergel(SoergelArgs),
    /// Block model: functor evaluation and suites.
    Block(BlockArgs),
}

#[derive(Args)]
struct CheckArgs {
    /// one of: weyl, monoid-S, monoid-Shat, singular-braid, coinvariant,
    /// theta-c, theta-cc, block-sl2, all
    #[arg(long)]
    suite: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    i: Option<usize>,
    /// render the report as markdown instead of JSON
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct WeylArgs {
    #[command(subcommand)]
    command: WeylCommand,
}

#[derive(Subcommand)]
enum WeylCommand {
    /// Parse an element ("s1 s2 s1", "e", or "[3,2,1]") and print its data.
    Element {
        #[arg(long)]
        rank: usize,
        text: String,
    },
}

#[derive(Args)]
struct MonoidArgs {
    #[command(subcommand)]
    command: MonoidCommand,
}

#[derive(Args, Clone)]
struct PresentationSource {
    /// built-in presentation: S, S-hat, or singular-braid
    #[arg(long)]
    preset: Option<String>,
    /// strand count for the singular braid monoid
    #[arg(long, default_value_t = 3)]
    rank: usize,
    /// JSON file with {alphabet, relations, grading}
    #[arg(long)]
    file: Option<String>,
    /// bound on the number of rewriting rules during completion
    #[arg(long, default_value_t = 128)]
    max_rules: usize,
}

impl PresentationSource {
    fn load(&self) -> Result<Presentation, String> {
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
            return serde_json::from_str(&text).map_err(|e| e.to_string());
        }
        let name = self.preset.as_deref().ok_or("need --preset or --file")?;
        preset(name, self.rank).map_err(|e| e.to_string())
    }

    fn system(&self) -> Result<RewriteSystem, String> {
        Ok(complete(&self.load()?, self.max_rules))
    }
}

#[derive(Subcommand)]
enum MonoidCommand {
    /// Normalize a word.
    Normalize {
        #[command(flatten)]
        source: PresentationSource,
        #[arg(long)]
        word: String,
    },
    /// Egg-box diagram: full ideal comparison for finite monoids, positive
    /// witness claims on a truncation for infinite ones.
    Eggbox {
        #[command(flatten)]
        source: PresentationSource,
        /// truncation length for infinite monoids
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long)]
        pretty: bool,
    },
    /// Idempotents among normal forms up to the length bound.
    Idempotents {
        #[command(flatten)]
        source: PresentationSource,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
}

#[derive(Args)]
struct KtheoryArgs {
    #[command(subcommand)]
    command: KtheoryCommand,
}

#[derive(Subcommand)]
enum KtheoryCommand {
    /// Verify the singular braid relations at the given rank.
    Check {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Print a functor matrix, as JSON rows or CSV.
    Matrix {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        /// theta, shuffle, coshuffle, twist, or completion
        #[arg(long)]
        kind: String,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Args)]
struct CoinvArgs {
    #[command(subcommand)]
    command: CoinvCommand,
}

#[derive(Subcommand)]
enum CoinvCommand {
    /// Reduce a polynomial to its staircase normal form.
    Reduce {
        #[arg(long)]
        n: usize,
        poly: String,
    },
}

#[derive(Args)]
struct SoergelArgs {
    #[command(subcommand)]
    command: SoergelCommand,
}

#[derive(Subcommand)]
enum SoergelCommand {
    /// Verify the commutation of the wall-crossing with one shuffle.
    VerifyThetaC {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
    },
    /// Verify the commutation with two adjacent shuffles.
    VerifyAdjacent {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
    },
}

#[derive(Args)]
struct BlockArgs {
    #[command(subcommand)]
    command: BlockCommand,
}

#[derive(Subcommand)]
enum BlockCommand {
    /// Evaluate a functor expression on a catalog module.
    Eval {
        #[arg(long)]
        functor: String,
        #[arg(long)]
        module: String,
        /// JSON algebra description; defaults to the built-in block
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Run one of the block suites:
    /// table, derived, monoid, exactness, hom, homdim, sequences, all.
    Check {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        pretty: bool,
    },
}

fn emit(report: &CheckReport, pretty: bool) -> ExitCode {
    if pretty {
        print!("{}", report.to_markdown());
    } else {
        println!("{}", report.to_json());
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn max_n_from_env() -> usize {
    std::env::var("ROOTFUNCTORS_MAX_N")
        .ok()
        .and_then(|x| x.parse().ok())
        .unwrap_or(3)
}

fn run_check(args: &CheckArgs) -> ExitCode {
    let report = match args.suite.as_str() {
        "weyl" => suites::suite_weyl(args.n.unwrap_or(4)),
        "monoid-S" => suites::suite_monoid_s(),
        "monoid-Shat" => suites::suite_monoid_shat(),
        "singular-braid" => suites::suite_singular_braid(args.n.unwrap_or(3)),
        "coinvariant" => suites::suite_coinvariant(args.n.unwrap_or(3)),
        "theta-c" => suites::suite_theta_c(args.n.unwrap_or(2), args.i.unwrap_or(1)),
        "theta-cc" => suites::suite_theta_cc(args.n.unwrap_or(3), args.i.unwrap_or(1)),
        "block-sl2" => suites::suite_block_sl2(),
        "all" => suites::suite_all(max_n_from_env()),
        other => return usage_error(&format!("unknown suite {other:?}")),
    };
    emit(&report, args.pretty)
}

fn run_weyl(args: &WeylArgs) -> ExitCode {
    match &args.command {
        WeylCommand::Element { rank, text } => match WeylElement::parse(*rank, text) {
            Ok(w) => {
                let words: Vec<String> = w
                    .reduced_words()
                    .into_iter()
                    .map(|word| {
                        word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "one_line": w.one_line(),
                        "word": w.word_string(),
                        "length": w.length(),
                        "right_descents": w.right_descents(),
                        "reduced_words": words,
                    })
                );
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(&e.to_string()),
        },
    }
}

fn run_monoid(args: &MonoidArgs) -> ExitCode {
    match &args.command {
        MonoidCommand::Normalize { source, word } => {
            let rs = match source.system() {
                Ok(rs) => rs,
                Err(e) => return usage_error(&e),
            };
            match rs.normalize_str(word) {
                Ok(nf) => {
                    println!(
                        "{}",
                        serde_json::json!({
                            "input": word,
                            "normal_form": nf,
                            "confluent": format!("{:?}", rs.status),
                        })
                    );
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
        MonoidCommand::Eggbox { source, max_len, pretty } => {
            let rs = match source.system() {
                Ok(rs) => rs,
                Err(e) => return usage_error(&e),
            };
            match rs.finite_normal_forms(*max_len * 2) {
                // finite monoid: full ideal comparison
                Some(forms) => match eggbox_finite(&rs, &forms) {
                    Ok(eb) => {
                        if *pretty {
                            print!("{}", eb.to_markdown());
                        } else {
                            println!(
                                "{}",
                                serde_json::to_string_pretty(&eb).expect("serializable")
                            );
                        }
                        ExitCode::SUCCESS
                    }
                    Err(e) => usage_error(&e.to_string()),
                },
                // infinite monoid: only positive claims with witness words
                None => {
                    let forms = rs.normal_forms(*max_len);
                    let (r_claims, l_claims) = green_witnesses(&rs, &forms, *max_len);
                    if *pretty {
                        println!("Positive Green claims on the truncation (length <= {max_len}):");
                        for c in &r_claims {
                            println!("R: {} ~ {}  via  {} , {}", c.x, c.y, c.u, c.v);
                        }
                        for c in &l_claims {
                            println!("L: {} ~ {}  via  {} , {}", c.x, c.y, c.u, c.v);
                        }
                    } else {
                        println!(
                            "{}",
                            serde_json::json!({
                                "truncation_length": max_len,
                                "note": "infinite monoid: positive witness claims only",
                                "r_claims": r_claims,
                                "l_claims": l_claims,
                            })
                        );
                    }
                    ExitCode::SUCCESS
                }
            }
        }
        MonoidCommand::Idempotents { source, max_len } => {
            let rs = match source.system() {
                Ok(rs) => rs,
                Err(e) => return usage_error(&e),
            };
            let forms = rs.normal_forms(*max_len);
            let idem: Vec<String> = rs
                .idempotents(&forms)
                .iter()
                .map(|w| rs.presentation.render_word(w))
                .collect();
            println!("{}", serde_json::json!({ "idempotents": idem }));
            ExitCode::SUCCESS
        }
    }
}

fn run_ktheory(args: &KtheoryArgs) -> ExitCode {
    match &args.command {
        KtheoryCommand::Check { n } => {
            if *n < 2 {
                return usage_error("rank must be at least 2");
            }
            let report = ktheory::check_singular_braid(*n);
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            if report.all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        KtheoryCommand::Matrix { n, i, kind, csv } => {
            if *i == 0 || *i >= *n {
                return usage_error("generator index out of range");
            }
            let m = match kind.as_str() {
                "theta" => ktheory::theta_matrix(*n, *i),
                "shuffle" => ktheory::shuffle_matrix(*n, *i),
                "coshuffle" => ktheory::coshuffle_matrix(*n, *i),
                "twist" => ktheory::twist_matrix(*n, *i),
                "completion" => ktheory::completion_matrix(*n, *i),
                other => return usage_error(&format!("unknown matrix kind {other:?}")),
            };
            if *csv {
                println!("{}", m.to_csv());
            } else {
                println!(
                    "{}",
                    serde_json::json!({ "label": m.label, "n": m.n, "rows": m.mat })
                );
            }
            ExitCode::SUCCESS
        }
    }
}

fn run_coinv(args: &CoinvArgs) -> ExitCode {
    match &args.command {
        CoinvCommand::Reduce { n, poly } => {
            let alg = match CoinvariantAlgebra::build(*n) {
                Ok(a) => a,
                Err(e) => return usage_error(&e.to_string()),
            };
            match parse_poly(*n, poly) {
                Ok(f) => {
                    let reduced = alg.reduce(&f);
                    println!(
                        "{}",
                        serde_json::json!({
                            "input": poly,
                            "reduced": reduced.render(),
                            "dimension": alg.dim(),
                        })
                    );
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
    }
}

fn run_soergel(args: &SoergelArgs) -> ExitCode {
    match &args.command {
        SoergelCommand::VerifyThetaC { n, i } => match soergel::verify_theta_shuffle(*n, *i) {
            Ok(r) => {
                println!("{}", serde_json::to_string_pretty(&r).expect("serializable"));
                if r.all_pass() {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(e) => usage_error(&e.to_string()),
        },
        SoergelCommand::VerifyAdjacent { n, i } => match soergel::verify_adjacent_pair(*n, *i) {
            Ok(r) => {
                println!("{}", serde_json::to_string_pretty(&r).expect("serializable"));
                if r.all_pass() {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(e) => usage_error(&e.to_string()),
        },
    }
}

fn load_block(path: &Option<String>) -> Result<Block, String> {
    match path {
        None => Ok(Block::sl2()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| e.to_string())?;
            let spec: AlgebraSpec = serde_json::from_str(&text).map_err(|e| e.to_string())?;
            Block::from_spec(&spec).map_err(|e| e.to_string())
        }
    }
}

fn run_block(args: &BlockArgs) -> ExitCode {
    match &args.command {
        BlockCommand::Eval { functor, module, algebra } => {
            let block = match load_block(algebra) {
                Ok(b) => b,
                Err(e) => return usage_error(&e),
            };
            let expr = match parser::parse_functor(functor, block.alg.rank) {
                Ok(e) => e,
                Err(e) => return usage_error(&e.to_string()),
            };
            let m = match block.module_by_name(module) {
                Ok(m) => m,
                Err(e) => return usage_error(&e.to_string()),
            };
            match block.eval(&expr, &m) {
                Ok(result) => {
                    let label = block
                        .multiplicities(&result)
                        .ok()
                        .map(|counts| {
                            let labels = block.catalog_labels();
                            counts
                                .iter()
                                .enumerate()
                                .filter(|(_, &c)| c > 0)
                                .map(|(k, &c)| {
                                    if c == 1 {
                                        labels[k].clone()
                                    } else {
                                        format!("{}^{}", labels[k], c)
                                    }
                                })
                                .collect::<Vec<_>>()
                                .join(" + ")
                        })
                        .unwrap_or_else(|| "<outside catalog>".to_string());
                    let shown = if label.is_empty() { "0".to_string() } else { label };
                    println!(
                        "{}",
                        serde_json::json!({
                            "functor": parser::render_functor(&expr),
                            "module": module,
                            "dimension_vector": result.dims,
                            "result": shown,
                        })
                    );
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
        BlockCommand::Check { suite, pretty } => {
            let block = Block::sl2();
            let report = match suite.as_str() {
                "table" => checks::suite_table(&block),
                "derived" => checks::suite_derived(&block),
                "monoid" => checks::suite_monoid(&block),
                "exactness" => checks::suite_exactness(&block),
                "hom" => checks::suite_hom(&block),
                "homdim" => checks::suite_homdim(&block),
                "sequences" => checks::suite_sequences(&block),
                "all" => checks::suite_all(&block),
                other => return usage_error(&format!("unknown block suite {other:?}")),
            };
            match report {
                Ok(r) => emit(&r, *pretty),
                Err(e) => usage_error(&e.to_string()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Check(args) => run_check(args),
        Command::Weyl(args) => run_weyl(args),
        Command::Monoid(args) => run_monoid(args),
        Command::Ktheory(args) => run_ktheory(args),
        Command::Coinv(args) => run_coinv(args),
        Command::Soergel(args) => run_soergel(args),
        Command::Block(args) => run_block(args),
    }
}
