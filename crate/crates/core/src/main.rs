use clap::{Args, Parser, Subcommand};
use sameorder::checks::{
    self, build_catalog_entries, run_catalog_check, run_group_check, BuiltEntry, EntrySlot,
    CATALOG_CHECKS, PER_GROUP_CHECKS,
};
use sameorder::constructions::{catalog, GroupRecipe};
use sameorder::error::{Error, Result};
use sameorder::group::DEFAULT_CAP;
use sameorder::report::{reports_to_json, CheckResult, CheckStatus, Report};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "sameorder", version, about = "Same-order types of finite groups")]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Abort enumeration beyond this many elements
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Suppress the human-readable summary on stderr
    #[arg(long, global = true)]
    json_only: bool,
    /// Treat skipped checks (missing data files) as failures
    #[arg(long, global = true)]
    strict: bool,
    /// Directory with generator files and catalog.toml
    #[arg(long, global = true, env = "SAMEORDER_DATA_DIR", default_value = "./data")]
    data_dir: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the order spectrum and derived sets of one group
    Spectrum {
        /// Group spec: A<n>, S<n>, C<n>, D<n>, L2(q), PSL(2,q), Sz(q),
        /// L3(3), L3(4), U3(3), U4(2), or file:<path>
        group: String,
    },
    /// Compute the prime graph of one group
    PrimeGraph {
        group: String,
    },
    /// Run a named check (or `all`) against a group or the whole catalog
    Verify {
        /// Check id, or `all`
        check: String,
        /// Group spec; omit when using --catalog
        group: Option<String>,
        /// Run against every catalog entry
        #[arg(long)]
        catalog: bool,
    },
    /// Build a group from a generator file and report its spectrum
    Ingest {
        path: String,
        #[arg(long)]
        expected_order: Option<u64>,
    },
    /// Catalog inspection
    Catalog {
        #[command(subcommand)]
        sub: CatalogCmd,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// List the catalog entries
    List,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let opts = &cli.opts;
    match &cli.command {
        Command::Spectrum { group } | Command::PrimeGraph { group } => {
            let recipe = GroupRecipe::parse(group)?;
            let entry = BuiltEntry::build(recipe, &opts.data_dir, opts.cap)?;
            let report = entry_report(&entry, Vec::new());
            println!("{}", report.to_json());
            summarize(opts, &report);
            Ok(ExitCode::SUCCESS)
        }
        Command::Ingest {
            path,
            expected_order,
        } => {
            let mut recipe = GroupRecipe::parse(&format!("file:{path}"))?;
            recipe.expected_order = *expected_order;
            let entry = BuiltEntry::build(recipe, &opts.data_dir, opts.cap)?;
            let checks = vec![run_group_check("frobenius", &entry)?];
            let report = entry_report(&entry, checks);
            println!("{}", report.to_json());
            summarize(opts, &report);
            Ok(exit_for(&[report], opts.strict))
        }
        Command::Verify {
            check,
            group,
            catalog: catalog_flag,
        } => {
            if check != "all" && !checks::is_known_check(check) {
                return Err(Error::UnknownCheck(check.clone()));
            }
            match (group, catalog_flag) {
                (Some(_), true) | (None, false) => Err(Error::Params(
                    "verify needs exactly one target: a group spec or --catalog".into(),
                )),
                (Some(spec), false) => {
                    let recipe = GroupRecipe::parse(spec)?;
                    let entry = BuiltEntry::build(recipe, &opts.data_dir, opts.cap)?;
                    let ids: Vec<&str> = if check == "all" {
                        PER_GROUP_CHECKS.to_vec()
                    } else {
                        vec![check.as_str()]
                    };
                    let mut results = Vec::new();
                    for id in ids {
                        results.push(run_group_check(id, &entry)?);
                    }
                    let report = entry_report(&entry, results);
                    println!("{}", report.to_json());
                    summarize(opts, &report);
                    Ok(exit_for(&[report], opts.strict))
                }
                (None, true) => {
                    let recipes = catalog(&opts.data_dir)?;
                    let slots = build_catalog_entries(recipes, &opts.data_dir, opts.cap)?;
                    let reports = verify_catalog(check, &slots)?;
                    println!("{}", reports_to_json(&reports));
                    for r in &reports {
                        summarize(opts, r);
                    }
                    Ok(exit_for(&reports, opts.strict))
                }
            }
        }
        Command::Catalog { sub: CatalogCmd::List } => {
            let recipes = catalog(&opts.data_dir)?;
            let listing: Vec<serde_json::Value> = recipes
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "name": r.name,
                        "kind": r.kind_string(),
                        "expected_order": r.expected_order,
                        "simple": r.claimed_simple,
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&listing).expect("listing"));
            if !opts.json_only {
                eprintln!("{} catalog entries", recipes.len());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn entry_report(entry: &BuiltEntry, checks: Vec<CheckResult>) -> Report {
    Report::for_group(
        &entry.recipe.name,
        &entry.recipe.kind_string(),
        &entry.group,
        &entry.spec,
        checks,
    )
}

fn verify_catalog(check: &str, slots: &[EntrySlot]) -> Result<Vec<Report>> {
    let per_group: Vec<&str> = if check == "all" {
        PER_GROUP_CHECKS.to_vec()
    } else if PER_GROUP_CHECKS.contains(&check) {
        vec![check]
    } else {
        Vec::new()
    };
    let catalog_level: Vec<&str> = if check == "all" {
        CATALOG_CHECKS.to_vec()
    } else if CATALOG_CHECKS.contains(&check) {
        vec![check]
    } else {
        Vec::new()
    };

    let mut reports = Vec::new();
    if !per_group.is_empty() {
        for slot in slots {
            match slot {
                EntrySlot::Built(entry) => {
                    let mut results = Vec::new();
                    for id in &per_group {
                        results.push(run_group_check(id, entry)?);
                    }
                    reports.push(entry_report(entry, results));
                }
                EntrySlot::Missing { recipe, reason } => {
                    reports.push(Report::skipped_stub(
                        &recipe.name,
                        &recipe.kind_string(),
                        reason,
                        &per_group,
                    ));
                }
            }
        }
    }
    if !catalog_level.is_empty() {
        let mut results = Vec::new();
        for id in catalog_level {
            results.push(run_catalog_check(id, slots)?);
        }
        reports.push(Report::catalog_summary(slots.len(), results));
    }
    Ok(reports)
}

fn exit_for(reports: &[Report], strict: bool) -> ExitCode {
    let failed = reports
        .iter()
        .any(|r| r.has_failure() || (strict && r.has_skip()));
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn summarize(opts: &GlobalOpts, report: &Report) {
    if opts.json_only {
        return;
    }
    let nse: Vec<String> = report.nse.iter().map(|v| v.to_string()).collect();
    eprintln!(
        "{}: order {}, nse {{{}}}",
        report.group.name,
        report.group.order,
        nse.join(",")
    );
    for c in &report.checks {
        let tag = match c.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::NotApplicable => "n/a",
            CheckStatus::Skipped => "skipped",
        };
        eprintln!("  {:<20} {:<8} {}", c.id, tag, c.details);
    }
}
