use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use fiberplan_core::report::{render_forecast, render_plan, render_trace, render_violations};
use fiberplan_core::{
    estimate_ber, forecast_subscribers, plan, trace, validate_network, Error, Format,
    NetworkDocument, PathSpec, PlanRequest, TraceRequest, TrafficInput, DEFAULT_NOISE_SIGMA,
};

/// Optical backbone and GPON planning: link and rise-time budgets, EDFA
/// sizing, power traces and subscriber forecasts.
#[derive(Debug, Parser)]
#[command(name = "fiberplan", version)]
struct Cli {
    /// Network description file (JSON).
    #[arg(long, global = true, value_name = "PATH")]
    network: Option<PathBuf>,

    /// Standard profile name (built-in or from the file's `standards`).
    #[arg(long, global = true, value_name = "NAME")]
    standard: Option<String>,

    /// `ring` or a comma-separated node list.
    #[arg(long, global = true, value_name = "SPEC", default_value = "ring")]
    path: String,

    #[arg(long, global = true, value_name = "FORMAT", default_value = "text", value_parser = ["text", "json"])]
    format: String,

    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Print a generation timestamp on stderr.
    #[arg(long, global = true)]
    stamp: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the network's structure.
    Validate,
    /// Power and rise-time budget with compliance verdicts.
    Plan {
        /// Use only the amplifiers installed in the span inventory.
        #[arg(long)]
        no_amplifier_plan: bool,
    },
    /// Subscriber forecast.
    Forecast(ForecastArgs),
    /// Power at every element along the path.
    Trace {
        /// Injected power in dBm (defaults to the transmitter power).
        #[arg(long, value_name = "DBM", allow_negative_numbers = true)]
        input_power: Option<f64>,
        /// Append the Q-factor BER estimate at the final point.
        #[arg(long)]
        ber: bool,
        /// Receiver noise standard deviation in A.
        #[arg(long, value_name = "AMPS", default_value_t = DEFAULT_NOISE_SIGMA)]
        noise_sigma: f64,
        #[arg(long)]
        no_amplifier_plan: bool,
    },
}

#[derive(Debug, Args)]
struct ForecastArgs {
    #[arg(long)]
    population: Option<u64>,
    #[arg(long, value_name = "RATIO")]
    cellular_penetration: Option<f64>,
    #[arg(long, value_name = "RATIO")]
    operator_share: Option<f64>,
    #[arg(long, value_name = "RATIO")]
    lte_penetration: Option<f64>,
    /// Annual growth rate as a ratio (0.051 for 5.1 %).
    #[arg(long, value_name = "RATIO")]
    growth: Option<f64>,
    /// Years.
    #[arg(long)]
    horizon: Option<u32>,
}

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;

struct Outcome {
    body: String,
    pass: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli).and_then(|o| {
        write_output(cli.out.as_deref(), &o.body)?;
        Ok(o)
    });
    if cli.stamp {
        let secs = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.as_secs());
        eprintln!("generated-at: {secs}");
    }
    match outcome {
        Ok(o) if o.pass => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(EXIT_FAIL),
        Err(err) => {
            eprintln!("error: {err}");
            if let Error::Validation(violations) = &err {
                for v in violations {
                    eprintln!("  {v}");
                }
            }
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn write_output(out: Option<&Path>, body: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(())
}

fn load(cli: &Cli) -> Result<NetworkDocument, Error> {
    let path = cli
        .network
        .as_ref()
        .ok_or_else(|| Error::Config("--network <PATH> is required".into()))?;
    NetworkDocument::load(path)
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let format: Format = cli.format.parse()?;
    match &cli.command {
        Command::Validate => {
            let doc = load(cli)?;
            let violations = validate_network(&doc.network);
            Ok(Outcome {
                body: render_violations(&violations, format),
                pass: violations.is_empty(),
            })
        }
        Command::Plan { no_amplifier_plan } => {
            let doc = load(cli)?;
            let standard = cli
                .standard
                .clone()
                .ok_or_else(|| Error::Config("plan needs --standard <NAME>".into()))?;
            let report = plan(
                &doc,
                &PlanRequest {
                    standard,
                    path: cli.path.parse::<PathSpec>()?,
                    plan_amplifiers: no_amplifier_plan.then_some(false),
                },
            )?;
            Ok(Outcome {
                body: render_plan(&report, format),
                pass: report.pass,
            })
        }
        Command::Forecast(args) => {
            let input = forecast_input(cli, args)?;
            let forecast = forecast_subscribers(&input)?;
            Ok(Outcome {
                body: render_forecast(&input, &forecast, format),
                pass: true,
            })
        }
        Command::Trace {
            input_power,
            ber,
            noise_sigma,
            no_amplifier_plan,
        } => {
            let doc = load(cli)?;
            let power_trace = trace(
                &doc,
                &TraceRequest {
                    path: Some(cli.path.parse()?),
                    input_power: *input_power,
                    standard: cli.standard.clone(),
                    plan_amplifiers: no_amplifier_plan.then_some(false),
                },
            )?;
            let estimate = if *ber {
                Some(estimate_ber(
                    power_trace.final_power(),
                    doc.network.transceiver.responsivity,
                    *noise_sigma,
                )?)
            } else {
                None
            };
            Ok(Outcome {
                body: render_trace(&power_trace, estimate.as_ref(), format),
                pass: true,
            })
        }
    }
}

/// Flags override the `traffic` section of the network file, if any.
fn forecast_input(cli: &Cli, args: &ForecastArgs) -> Result<TrafficInput, Error> {
    let base = match &cli.network {
        Some(path) => NetworkDocument::load(path)?.traffic,
        None => None,
    };
    let missing = |name: &str| {
        Error::Config(format!(
            "forecast needs --{name} (or a `traffic` section in --network)"
        ))
    };
    let input = TrafficInput {
        population: args
            .population
            .or(base.as_ref().map(|b| b.population))
            .ok_or_else(|| missing("population"))?,
        cellular_penetration: args
            .cellular_penetration
            .or(base.as_ref().map(|b| b.cellular_penetration))
            .ok_or_else(|| missing("cellular-penetration"))?,
        operator_share: args
            .operator_share
            .or(base.as_ref().map(|b| b.operator_share))
            .ok_or_else(|| missing("operator-share"))?,
        lte_penetration: args
            .lte_penetration
            .or(base.as_ref().map(|b| b.lte_penetration))
            .ok_or_else(|| missing("lte-penetration"))?,
        annual_growth: args
            .growth
            .or(base.as_ref().map(|b| b.annual_growth))
            .ok_or_else(|| missing("growth"))?,
        horizon: args
            .horizon
            .or(base.as_ref().map(|b| b.horizon))
            .ok_or_else(|| missing("horizon"))?,
    };
    input.validate()?;
    Ok(input)
}
