//! Command-line front end: check weak optimality of a point, verify a
//! certificate, emit the hardness reduction, or run the brute-force oracle.
//!
//! Exit codes for `check`: 0 = weakly optimal, 1 = not weakly optimal
//! (including not weakly feasible, distinguished in the report), 2 = input
//! error. `verify` exits 0 iff the certificate is valid; `oracle` exits 0 on
//! a certified scenario, 1 when inconclusive.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use weakopt::instance::{
    self, parse_instance, parse_point, parse_system, render_report, serialize_instance,
    InstanceFile, VerdictReport,
};
use weakopt::model::{Point, Verdict};
use weakopt::oracle::{corner_grid_oracle_with_budget, OracleOutcome, SCENARIO_BUDGET};
use weakopt::reduction::reduce_weak_feasibility_to_weak_optimality;
use weakopt::weak_optimality::{decide_weak_optimality, verify_witness_detailed, DecideOptions};

#[derive(Parser)]
#[command(name = "weakopt", version, about = "Weak optimality testing for interval linear programs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the instance's point is weakly optimal.
    Check {
        /// Instance file (JSON).
        instance: PathBuf,
        /// Candidate point override, e.g. '{"xf": [2, 1]}'.
        #[arg(long)]
        point: Option<String>,
        /// Worker threads for orthant enumeration (default 1).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Enumerate every orthant instead of stopping at the first feasible one.
        #[arg(long)]
        exhaustive_orthants: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        /// Include wall-clock timing in the report (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Re-check a certificate produced by `check` against its instance.
    Verify {
        instance: PathBuf,
        report: PathBuf,
    },
    /// Transform an interval inequality system `Bf x <= b` into the
    /// decision-equivalent weak-optimality instance with point x = 0.
    Reduce {
        system: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Brute-force scenario-grid search for a certifying scenario.
    Oracle {
        instance: PathBuf,
        #[arg(long)]
        point: Option<String>,
        /// Interior grid points per nondegenerate interval.
        #[arg(long, default_value_t = 2)]
        depth: usize,
        /// Maximum number of grid scenarios to enumerate.
        #[arg(long, default_value_t = SCENARIO_BUDGET)]
        budget: u64,
    },
}

fn input_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(2)
}

fn load_instance(path: &PathBuf) -> Result<InstanceFile, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_instance(&text).map_err(|e| e.to_string())
}

fn resolve_point(inst: &InstanceFile, flag: &Option<String>) -> Result<Point, String> {
    match flag {
        Some(text) => parse_point(text).map_err(|e| e.to_string()),
        None => inst
            .point
            .clone()
            .ok_or_else(|| "instance has no point; pass --point".to_string()),
    }
}

fn run_check(
    instance: &PathBuf,
    point: &Option<String>,
    jobs: usize,
    exhaustive: bool,
    timings: bool,
) -> ExitCode {
    let inst = match load_instance(instance) {
        Ok(i) => i,
        Err(e) => return input_error(e),
    };
    let x = match resolve_point(&inst, point) {
        Ok(x) => x,
        Err(e) => return input_error(e),
    };
    let opts = DecideOptions {
        exhaustive,
        parallel: jobs > 1,
    };
    let start = Instant::now();
    let decide = || decide_weak_optimality(&inst.data, &x, &opts);
    let decision = if jobs > 1 {
        let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(p) => p,
            Err(e) => return input_error(e),
        };
        pool.install(decide)
    } else {
        decide()
    };
    let decision = match decision {
        Ok(d) => d,
        Err(e) => return input_error(e),
    };
    let witness = match &decision.verdict {
        Verdict::WeaklyOptimal(w) => Some(w.clone()),
        _ => None,
    };
    let mut report =
        VerdictReport::from_stats(decision.verdict.tag(), witness, &decision.stats);
    if timings {
        report.stats.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    print!("{}", render_report(&report));
    if decision.verdict.is_weakly_optimal() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_verify(instance: &PathBuf, report: &PathBuf) -> ExitCode {
    let inst = match load_instance(instance) {
        Ok(i) => i,
        Err(e) => return input_error(e),
    };
    let text = match std::fs::read_to_string(report) {
        Ok(t) => t,
        Err(e) => return input_error(format!("cannot read {}: {e}", report.display())),
    };
    let parsed = match instance::parse_report(&text, &inst.data) {
        Ok(r) => r,
        Err(e) => return input_error(e),
    };
    let Some(witness) = parsed.witness else {
        return input_error("report carries no witness to verify");
    };
    let x = match resolve_point(&inst, &None) {
        Ok(x) => x,
        Err(e) => return input_error(e),
    };
    match verify_witness_detailed(&inst.data, &x, &witness) {
        Ok(()) => {
            println!("certificate valid");
            ExitCode::SUCCESS
        }
        Err(violation) => {
            println!("certificate invalid: {violation}");
            ExitCode::from(1)
        }
    }
}

fn run_reduce(system: &PathBuf) -> ExitCode {
    let text = match std::fs::read_to_string(system) {
        Ok(t) => t,
        Err(e) => return input_error(format!("cannot read {}: {e}", system.display())),
    };
    let sys = match parse_system(&text) {
        Ok(s) => s,
        Err(e) => return input_error(e),
    };
    let (data, x) = match reduce_weak_feasibility_to_weak_optimality(&sys.bf, &sys.b) {
        Ok(r) => r,
        Err(e) => return input_error(e),
    };
    let out = InstanceFile {
        version: "1".to_string(),
        data,
        point: Some(x),
    };
    print!("{}", serialize_instance(&out));
    ExitCode::SUCCESS
}

fn run_oracle(instance: &PathBuf, point: &Option<String>, depth: usize, budget: u64) -> ExitCode {
    let inst = match load_instance(instance) {
        Ok(i) => i,
        Err(e) => return input_error(e),
    };
    let x = match resolve_point(&inst, point) {
        Ok(x) => x,
        Err(e) => return input_error(e),
    };
    match corner_grid_oracle_with_budget(&inst.data, &x, depth, budget) {
        Ok(OracleOutcome::Certified(scenario)) => {
            let witness_data = InstanceFile {
                version: "1".to_string(),
                data: inst.data.clone(),
                point: Some(x),
            };
            // Report the certifying scenario as crisp instance data so it can
            // be inspected or replayed.
            let crisp = scenario_as_instance(&witness_data, &scenario);
            print!("{}", serialize_instance(&crisp));
            ExitCode::SUCCESS
        }
        Ok(OracleOutcome::Inconclusive) => {
            println!("inconclusive");
            ExitCode::from(1)
        }
        Err(e) => input_error(e),
    }
}

/// A certified scenario rendered as a degenerate-interval instance.
fn scenario_as_instance(base: &InstanceFile, s: &weakopt::model::Scenario) -> InstanceFile {
    use weakopt::interval::{Interval, IntervalMatrix};
    let crisp_mat = |m: &weakopt::model::RatMatrix| {
        IntervalMatrix::new(
            m.rows(),
            m.cols(),
            m.entries().iter().cloned().map(Interval::point).collect(),
        )
        .expect("shape preserved")
    };
    let crisp_vec = |v: &[weakopt::Rational]| v.iter().cloned().map(Interval::point).collect();
    InstanceFile {
        version: base.version.clone(),
        data: weakopt::model::IlpData::new(
            crisp_mat(&s.af),
            crisp_mat(&s.an),
            crisp_mat(&s.bf),
            crisp_mat(&s.bn),
            crisp_vec(&s.a),
            crisp_vec(&s.b),
            crisp_vec(&s.cf),
            crisp_vec(&s.cn),
        )
        .expect("scenario shapes match the instance"),
        point: base.point.clone(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Check {
            instance,
            point,
            jobs,
            exhaustive_orthants,
            format: OutputFormat::Json,
            timings,
        } => run_check(instance, point, *jobs, *exhaustive_orthants, *timings),
        Command::Verify { instance, report } => run_verify(instance, report),
        Command::Reduce {
            system,
            format: OutputFormat::Json,
        } => run_reduce(system),
        Command::Oracle {
            instance,
            point,
            depth,
            budget,
        } => run_oracle(instance, point, *depth, *budget),
    }
}
