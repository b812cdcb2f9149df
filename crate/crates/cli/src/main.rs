use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use skewqc::code::{generator_matrix, CodeStructureJson};
use skewqc::distance::{self, DEFAULT_BUDGET, EXTENDED_BUDGET};
use skewqc::factorization::{
    cofactor, linear_factor_chains, right_divisors, DEFAULT_DIVISOR_BUDGET,
};
use skewqc::search::{self, Bounds, ExportFormat, SearchConfig, VerifyOptions};
use skewqc::similarity::{
    are_left_similar_with_budget, are_similar_with_budget, SimilarityOutcome,
};
use skewqc::tables::{self, TableRow};
use skewqc::{CodeStructure, Field, SkewPoly};

#[derive(Parser)]
#[command(
    name = "skewqc",
    version,
    about = "Skew polynomial rings and skew quasi-cyclic codes"
)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "SKEWQC_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct FieldArgs {
    /// Characteristic.
    #[arg(long, default_value_t = 2)]
    p: u32,
    /// Fixed subfield has p^t elements.
    #[arg(long, default_value_t = 1)]
    t: u32,
    /// Order of the automorphism; the field has p^(t*m) elements.
    #[arg(long, default_value_t = 2)]
    m: u32,
}

impl FieldArgs {
    fn field(&self) -> Result<Field> {
        Ok(Field::new(self.p, self.t, self.m)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Right divisors of x^s - 1 of a given degree, with their cofactors.
    Factor {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        degree: usize,
        /// Only products of linear factors (fast, incomplete).
        #[arg(long)]
        chains: bool,
        #[arg(long, default_value_t = DEFAULT_DIVISOR_BUDGET)]
        budget: u128,
        /// Stop after this many divisors.
        #[arg(long)]
        limit: Option<usize>,
        /// Also print the cofactor h with x^s - 1 = h*g.
        #[arg(long)]
        cofactors: bool,
    },
    /// Build a code and print its structure as JSON.
    Build {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        code: CodeArgs,
        /// Include the reduced generator matrix.
        #[arg(long)]
        matrix: bool,
    },
    /// Minimum distance and weight enumerator.
    Distance {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        code: CodeArgs,
        /// Sample this many random codewords instead of enumerating.
        #[arg(long, conflicts_with = "exact")]
        sample: Option<u64>,
        /// Require full enumeration (the default when q^k fits the budget).
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        /// Print the weight enumerator: `tsv` or `poly`.
        #[arg(long)]
        enumerator: Option<String>,
    },
    /// Decide whether two monic polynomials are similar.
    Similar {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Use the left orientation.
        #[arg(long)]
        left: bool,
        #[arg(long, default_value_t = skewqc::similarity::DEFAULT_SIMILARITY_BUDGET)]
        budget: u128,
    },
    /// Run a search campaign described by a TOML file.
    Search {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long)]
        bounds: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        format: Option<ExportFormat>,
    },
    /// Rebuild every row of a code table and check its parameters.
    VerifyTable {
        /// Table file; the built-in transcription when omitted.
        #[arg(long)]
        table: Option<PathBuf>,
        /// Only rows of this group.
        #[arg(long)]
        group: Option<String>,
        /// Largest q^k checked by full enumeration.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        /// Raise the enumeration budget to 2^32.
        #[arg(long)]
        extended: bool,
        /// Random codewords for rows beyond the budget.
        #[arg(long, default_value_t = 1_000_000)]
        sample: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check only the dimension of rows with larger k.
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct CodeArgs {
    /// JSON file written by `build`, or `s:p1,p2,...` with coefficient strings.
    #[arg(long, conflicts_with_all = ["s", "gen"], required_unless_present = "gen")]
    code: Option<String>,
    /// Block length, with `--gen`.
    #[arg(long, requires = "gen")]
    s: Option<usize>,
    /// Index; checked against the number of `--gen` strings.
    #[arg(long, requires = "gen")]
    l: Option<usize>,
    /// Generator coefficient strings.
    #[arg(long, value_delimiter = ',', requires = "s")]
    gen: Vec<String>,
    /// Generators are g, f1, ... and the tuple is (g, f1*g, ...).
    #[arg(long)]
    degenerate: bool,
}

impl CodeArgs {
    fn inline(&self) -> Result<Option<(usize, Vec<String>)>> {
        if let Some(s) = self.s {
            if self.l.is_some_and(|l| l != self.gen.len()) {
                bail!(
                    "--l {} but {} generator strings",
                    self.l.unwrap(),
                    self.gen.len()
                );
            }
            return Ok(Some((s, self.gen.clone())));
        }
        let code = self.code.as_deref().unwrap_or_default();
        match code.split_once(':') {
            Some((s, gens)) => {
                let s = s
                    .trim()
                    .parse()
                    .with_context(|| format!("bad block length {s:?}"))?;
                Ok(Some((
                    s,
                    gens.split(',').map(|g| g.trim().to_string()).collect(),
                )))
            }
            None => Ok(None),
        }
    }

    fn structure(&self, field: &Field) -> Result<CodeStructure> {
        if let Some((s, strings)) = self.inline()? {
            let row = TableRow {
                group: "cli".into(),
                n: s * strings.len(),
                k: 0,
                d: 0,
                degenerate: self.degenerate,
                irregular: false,
                generators: strings,
                line: 0,
            };
            return Ok(generator_matrix(&row.spec_over(field)?)?);
        }
        let path = self.code.as_deref().unwrap_or_default();
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
        let json: CodeStructureJson = serde_json::from_str(&text)?;
        Ok(CodeStructure::from_json(&json)?)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<bool> {
    match command {
        Command::Factor {
            field,
            s,
            degree,
            chains,
            budget,
            limit,
            cofactors,
        } => {
            let field = field.field()?;
            let divisors = if chains {
                linear_factor_chains(&field, s, degree, limit.unwrap_or(usize::MAX))?
            } else {
                right_divisors(&field, s, degree, budget)?.divisors
            };
            for g in divisors.iter().take(limit.unwrap_or(usize::MAX)) {
                if cofactors {
                    let h =
                        cofactor(g, s)?.ok_or_else(|| anyhow!("{g} does not divide x^{s} - 1"))?;
                    println!("{}\t{}", g.to_coeff_string(), h.to_coeff_string());
                } else {
                    println!("{}", g.to_coeff_string());
                }
            }
            Ok(true)
        }
        Command::Build {
            field,
            code,
            matrix,
        } => {
            let st = code.structure(&field.field()?)?;
            println!("{}", serde_json::to_string_pretty(&st.to_json(matrix))?);
            Ok(true)
        }
        Command::Distance {
            field,
            code,
            sample,
            exact,
            seed,
            budget,
            enumerator,
        } => {
            let st = code.structure(&field.field()?)?;
            let fits = distance::code_size(&st) <= budget;
            if exact && !fits {
                bail!(
                    "q^k = {} exceeds the budget {budget}",
                    distance::code_size(&st)
                );
            }
            let report = match sample {
                Some(trials) => distance::min_distance_sampled(&st, trials, seed),
                None if fits => distance::min_distance(&st, budget)?,
                None => distance::min_distance_sampled(&st, 1_000_000, seed),
            };
            let d = report.d.map_or("-".to_string(), |d| d.to_string());
            println!(
                "n\t{}\nk\t{}\nd\t{d}\nexact\t{}",
                st.n(),
                st.k,
                report.exact
            );
            println!(
                "codewords\t{}\nelapsed_ms\t{}",
                report.codewords_enumerated,
                report.elapsed.as_millis()
            );
            if let Some(w) = &report.witness {
                println!("witness\t{}", w.to_token_string(st.field()));
            }
            if let Some(kind) = enumerator {
                if !report.exact {
                    bail!("a weight enumerator needs full enumeration");
                }
                let we = distance::weight_enumerator(&st, budget)?;
                match kind.as_str() {
                    "tsv" => print!("{}", we.to_tsv()),
                    "poly" => println!("{}", we.to_polynomial_string()),
                    other => bail!("unknown enumerator format {other:?}"),
                }
            }
            Ok(true)
        }
        Command::Similar {
            field,
            a,
            b,
            left,
            budget,
        } => {
            let field = field.field()?;
            let a = SkewPoly::parse(&field, &a)?;
            let b = SkewPoly::parse(&field, &b)?;
            let outcome = if left {
                are_left_similar_with_budget(&a, &b, budget)?
            } else {
                are_similar_with_budget(&a, &b, budget)?
            };
            match outcome {
                SimilarityOutcome::Similar(w) => println!("similar\tu={}", w.u.to_coeff_string()),
                SimilarityOutcome::NotSimilar => println!("not-similar"),
                SimilarityOutcome::Unknown => println!("unknown"),
            }
            Ok(true)
        }
        Command::Search {
            config,
            seed,
            trials,
            bounds,
            output,
            format,
        } => {
            let mut cfg = SearchConfig::load(&config)?;
            if let Some(s) = seed {
                cfg.seed = s;
            }
            if let Some(t) = trials {
                cfg.trials = t;
            }
            if bounds.is_some() {
                cfg.bounds = bounds;
            }
            if output.is_some() {
                cfg.output = output;
            }
            if let Some(f) = format {
                cfg.format = f;
            }
            let bounds = match &cfg.bounds {
                Some(path) => Bounds::load(path)?,
                None => Bounds::default(),
            };
            let records = search::run_search(&cfg, &bounds)?;
            match &cfg.output {
                Some(path) => {
                    search::export_results(&records, cfg.format, path)?;
                    eprintln!("{} records written to {}", records.len(), path.display());
                }
                None => print!("{}", search::export_string(&records, cfg.format)),
            }
            Ok(true)
        }
        Command::VerifyTable {
            table,
            group,
            budget,
            extended,
            sample,
            seed,
            max_k,
            json,
        } => {
            let text = match &table {
                Some(path) => std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?,
                None => tables::builtin_text().to_string(),
            };
            let mut rows = tables::parse_table(&text);
            if let Some(g) = &group {
                rows.retain(|(_, r)| r.as_ref().map_or(true, |r| &r.group == g));
            }
            let opts = VerifyOptions {
                budget: if extended {
                    budget.max(EXTENDED_BUDGET)
                } else {
                    budget
                },
                sample_trials: sample,
                seed,
                max_k,
            };
            let report = search::verify_table(&rows, &opts);
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", report.to_tsv());
            }
            let failures = report.failures();
            eprintln!("{} rows, {failures} failed", report.rows.len());
            Ok(failures == 0)
        }
    }
}
