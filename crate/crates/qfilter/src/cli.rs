//! Command-line front end: bundled figure datasets, single-point queries,
//! k and Γt sweeps, and entanglement-death onset queries.
//!
//! Every command resolves its parameters in three layers: command-line flags
//! override values from an optional `key = value` config file, which override
//! built-in defaults. All numeric output uses a fixed 12-significant-digit
//! format so repeated runs are byte-identical and suitable as golden files.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::experiments::{
    esd_onset, evaluate_point, linspace, sweep_filter, sweep_noise_filter, SweepRecord,
    DEFAULT_GAMMA_T_MAX, DEFAULT_K_FAMILY, DEFAULT_K_POINTS, DEFAULT_NOISE_POINTS,
    ESD_DEFAULT_TOL, QubitPair,
};
use crate::states::NamedState;

#[derive(Parser, Debug)]
#[command(
    name = "qfilter",
    version,
    about = "Single local filtering and depolarizing noise on 3-qubit states"
)]
pub struct Cli {
    /// Plain `key = value` config file; command-line flags take precedence.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the dataset behind one of the eight bundled figures as CSV.
    Figure {
        /// Figure number, 1 through 8.
        n: u32,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Evaluate one (state, k, gamma_t) point and print the record as JSON.
    Point {
        /// Dimensionless noise time Γt (default 0).
        #[arg(long)]
        gamma_t: Option<f64>,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Sweep the filtering parameter k with no noise.
    SweepK {
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Sweep the noise time Γt at a fixed filtering parameter.
    SweepNoise {
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Locate the noise time at which a pair's concurrence dies.
    Esd {
        #[command(flatten)]
        opts: CommonOpts,
    },
}

#[derive(Args, Debug, Default, Clone)]
struct CommonOpts {
    /// Initial state: w3, ghz3, or wwbar3.
    #[arg(long)]
    state: Option<String>,

    /// Filtering parameter in [0, 1].
    #[arg(long)]
    k: Option<f64>,

    /// Comma-separated filtering parameters (explicit grid or curve family).
    #[arg(long, value_delimiter = ',', value_name = "K,K,...")]
    k_list: Option<Vec<f64>>,

    /// Upper end of the Γt grid.
    #[arg(long)]
    gamma_t_max: Option<f64>,

    /// Number of grid points.
    #[arg(long)]
    points: Option<usize>,

    /// Qubit pair: 12, 13, or 23.
    #[arg(long)]
    pair: Option<String>,

    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Output format for sweeps: csv or json.
    #[arg(long)]
    format: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::invalid(format!("unknown format '{other}' (expected csv or json)"))),
        }
    }
}

/// Fully resolved parameters for one command invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub state: NamedState,
    pub k: f64,
    pub k_list: Option<Vec<f64>>,
    pub gamma_t: f64,
    pub gamma_t_max: f64,
    pub points: usize,
    pub pair: QubitPair,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
}

impl RunConfig {
    fn resolve(
        opts: &CommonOpts,
        gamma_t_flag: Option<f64>,
        file: &HashMap<String, String>,
        default_points: usize,
    ) -> Result<RunConfig> {
        let state = match pick(opts.state.clone(), file, "state") {
            Some(s) => s.parse()?,
            None => NamedState::W3,
        };
        let k = match pick(opts.k, file, "k") {
            Some(Layered::Flag(v)) => v,
            Some(Layered::File(s)) => parse_f64(&s, "k")?,
            None => 0.5,
        };
        require_unit_interval(k, "k")?;
        let k_list = match pick(opts.k_list.clone(), file, "k-list") {
            Some(Layered::Flag(v)) => Some(v),
            Some(Layered::File(s)) => Some(
                s.split(',')
                    .map(|item| parse_f64(item.trim(), "k-list"))
                    .collect::<Result<Vec<f64>>>()?,
            ),
            None => None,
        };
        if let Some(list) = &k_list {
            if list.is_empty() {
                return Err(Error::invalid("k-list must not be empty"));
            }
            for &v in list {
                require_unit_interval(v, "k-list entry")?;
            }
        }
        let gamma_t = match pick(gamma_t_flag, file, "gamma-t") {
            Some(Layered::Flag(v)) => v,
            Some(Layered::File(s)) => parse_f64(&s, "gamma-t")?,
            None => 0.0,
        };
        if !gamma_t.is_finite() || gamma_t < 0.0 {
            return Err(Error::invalid(format!("gamma-t must be nonnegative, got {gamma_t}")));
        }
        let gamma_t_max = match pick(opts.gamma_t_max, file, "gamma-t-max") {
            Some(Layered::Flag(v)) => v,
            Some(Layered::File(s)) => parse_f64(&s, "gamma-t-max")?,
            None => DEFAULT_GAMMA_T_MAX,
        };
        if !gamma_t_max.is_finite() || gamma_t_max <= 0.0 {
            return Err(Error::invalid(format!("gamma-t-max must be positive, got {gamma_t_max}")));
        }
        let points = match pick(opts.points, file, "points") {
            Some(Layered::Flag(v)) => v,
            Some(Layered::File(s)) => s
                .parse::<usize>()
                .map_err(|_| Error::invalid(format!("points must be an integer, got '{s}'")))?,
            None => default_points,
        };
        if points < 2 {
            return Err(Error::invalid(format!("points must be at least 2, got {points}")));
        }
        let pair = match pick(opts.pair.clone(), file, "pair") {
            Some(s) => s.parse()?,
            None => QubitPair::Q23,
        };
        let out = opts.out.clone().or_else(|| file.get("out").map(PathBuf::from));
        let format = match pick(opts.format.clone(), file, "format") {
            Some(s) => s.parse()?,
            None => OutputFormat::Csv,
        };
        Ok(RunConfig { state, k, k_list, gamma_t, gamma_t_max, points, pair, out, format })
    }
}

/// A value that arrived either as a typed flag or as raw config-file text.
enum Layered<T> {
    Flag(T),
    File(String),
}

fn pick<T>(flag: Option<T>, file: &HashMap<String, String>, key: &str) -> Option<Layered<T>> {
    match flag {
        Some(v) => Some(Layered::Flag(v)),
        None => file.get(key).map(|s| Layered::File(s.clone())),
    }
}

impl Layered<String> {
    fn parse<T: FromStr<Err = Error>>(self) -> Result<T> {
        match self {
            Layered::Flag(s) | Layered::File(s) => s.parse(),
        }
    }
}

fn parse_f64(s: &str, what: &str) -> Result<f64> {
    s.parse::<f64>().map_err(|_| Error::invalid(format!("{what} must be a number, got '{s}'")))
}

fn require_unit_interval(x: f64, what: &str) -> Result<()> {
    if !(0.0..=1.0).contains(&x) || x.is_nan() {
        return Err(Error::invalid(format!("{what} must lie in [0, 1], got {x}")));
    }
    Ok(())
}

/// Parse a plain `key = value` file: one pair per line, `#` starts a comment,
/// blank lines are skipped. Keys are case-insensitive and `_` matches `-`.
fn load_config(path: &Path) -> Result<HashMap<String, String>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    let mut map = HashMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Error::Config(format!("{}:{}: expected 'key = value'", path.display(), lineno + 1))
        })?;
        let key = key.trim().to_ascii_lowercase().replace('_', "-");
        map.insert(key, value.trim().to_string());
    }
    Ok(map)
}

/// Fixed 12-significant-digit scientific formatting for all CSV numbers.
fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn records_to_csv(records: &[SweepRecord]) -> String {
    let mut csv = String::from("state,k,gamma_t,c12,c13,c23,g12,g13,g23,success_prob\n");
    for r in records {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            r.state_name,
            sig12(r.k),
            sig12(r.gamma_t),
            sig12(r.c12),
            sig12(r.c13),
            sig12(r.c23),
            sig12(r.g12),
            sig12(r.g13),
            sig12(r.g23),
            sig12(r.success_prob),
        ));
    }
    csv
}

fn records_to_json(records: &[SweepRecord]) -> Result<String> {
    let mut json = serde_json::to_string_pretty(records)
        .map_err(|e| Error::invalid(format!("serialization failed: {e}")))?;
    json.push('\n');
    Ok(json)
}

fn render_records(records: &[SweepRecord], format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Csv => Ok(records_to_csv(records)),
        OutputFormat::Json => records_to_json(records),
    }
}

/// Which measured series a curve-per-k figure plots.
enum NoiseSeries {
    C23,
    C12,
}

fn cmd_figure(n: u32, cfg: &RunConfig) -> Result<()> {
    let content = match n {
        1 => filter_figure_csv(NamedState::W3, cfg, false)?,
        2 => filter_figure_csv(NamedState::W3, cfg, true)?,
        3 => filter_figure_csv(NamedState::WwBar3, cfg, false)?,
        4 => filter_figure_csv(NamedState::WwBar3, cfg, true)?,
        5 => noise_figure_csv(NamedState::W3, cfg, NoiseSeries::C23)?,
        6 => noise_figure_csv(NamedState::WwBar3, cfg, NoiseSeries::C23)?,
        7 => noise_figure_csv(NamedState::W3, cfg, NoiseSeries::C12)?,
        8 => noise_figure_csv(NamedState::WwBar3, cfg, NoiseSeries::C12)?,
        other => return Err(Error::invalid(format!("figure number must be 1..=8, got {other}"))),
    };
    write_output(&cfg.out, &content)
}

/// Figures 1-4: concurrences (or purities) of the 12 and 23 pairs against k.
fn filter_figure_csv(state: NamedState, cfg: &RunConfig, purities: bool) -> Result<String> {
    let grid = linspace(0.0, 1.0, cfg.points);
    let records = sweep_filter(state, &grid)?;
    let mut csv = String::from(if purities { "k,g12,g23\n" } else { "k,c12,c23\n" });
    for r in &records {
        let (a, b) = if purities { (r.g12, r.g23) } else { (r.c12, r.c23) };
        csv.push_str(&format!("{},{},{}\n", sig12(r.k), sig12(a), sig12(b)));
    }
    Ok(csv)
}

/// Figures 5-8: one concurrence series per filtering parameter against Γt.
fn noise_figure_csv(state: NamedState, cfg: &RunConfig, series: NoiseSeries) -> Result<String> {
    let family = cfg.k_list.clone().unwrap_or_else(|| DEFAULT_K_FAMILY.to_vec());
    let grid = linspace(0.0, cfg.gamma_t_max, cfg.points);

    let mut columns = Vec::with_capacity(family.len());
    for &k in &family {
        let records = sweep_noise_filter(state, k, &grid)?;
        let values: Vec<f64> = records
            .iter()
            .map(|r| match series {
                NoiseSeries::C23 => r.c23,
                NoiseSeries::C12 => r.c12,
            })
            .collect();
        columns.push(values);
    }

    let mut csv = String::from("gamma_t");
    for &k in &family {
        csv.push_str(&format!(",k={k}"));
    }
    csv.push('\n');
    for (i, &gamma_t) in grid.iter().enumerate() {
        csv.push_str(&sig12(gamma_t));
        for column in &columns {
            csv.push(',');
            csv.push_str(&sig12(column[i]));
        }
        csv.push('\n');
    }
    Ok(csv)
}

fn cmd_point(cfg: &RunConfig) -> Result<()> {
    let record = evaluate_point(cfg.state, cfg.k, cfg.gamma_t)?;
    let mut json = serde_json::to_string_pretty(&record)
        .map_err(|e| Error::invalid(format!("serialization failed: {e}")))?;
    json.push('\n');
    write_output(&cfg.out, &json)
}

fn cmd_sweep_k(cfg: &RunConfig) -> Result<()> {
    let grid = match &cfg.k_list {
        Some(list) => list.clone(),
        None => linspace(0.0, 1.0, cfg.points),
    };
    let records = sweep_filter(cfg.state, &grid)?;
    write_output(&cfg.out, &render_records(&records, cfg.format)?)
}

fn cmd_sweep_noise(cfg: &RunConfig) -> Result<()> {
    let grid = linspace(0.0, cfg.gamma_t_max, cfg.points);
    let records = sweep_noise_filter(cfg.state, cfg.k, &grid)?;
    write_output(&cfg.out, &render_records(&records, cfg.format)?)
}

fn cmd_esd(cfg: &RunConfig) -> Result<()> {
    let onset = esd_onset(cfg.state, cfg.k, cfg.pair, ESD_DEFAULT_TOL)?;
    let (lo, hi) = onset.bracket;
    let text = format!(
        "state        = {}\nk            = {}\npair         = {}\ngamma_t_star = {}\nbracket      = [{}, {}]\ntolerance    = {}\n",
        cfg.state,
        sig12(cfg.k),
        cfg.pair,
        sig12(onset.gamma_t_star),
        sig12(lo),
        sig12(hi),
        sig12(hi - lo),
    );
    write_output(&cfg.out, &text)
}

fn execute(cli: Cli) -> Result<()> {
    let file = match &cli.config {
        Some(path) => load_config(path)?,
        None => HashMap::new(),
    };
    match cli.command {
        Command::Figure { n, opts } => {
            let default_points = if (5..=8).contains(&n) { DEFAULT_NOISE_POINTS } else { DEFAULT_K_POINTS };
            let cfg = RunConfig::resolve(&opts, None, &file, default_points)?;
            cmd_figure(n, &cfg)
        }
        Command::Point { gamma_t, opts } => {
            let cfg = RunConfig::resolve(&opts, gamma_t, &file, DEFAULT_K_POINTS)?;
            cmd_point(&cfg)
        }
        Command::SweepK { opts } => {
            let cfg = RunConfig::resolve(&opts, None, &file, DEFAULT_K_POINTS)?;
            cmd_sweep_k(&cfg)
        }
        Command::SweepNoise { opts } => {
            let cfg = RunConfig::resolve(&opts, None, &file, DEFAULT_NOISE_POINTS)?;
            cmd_sweep_noise(&cfg)
        }
        Command::Esd { opts } => {
            let cfg = RunConfig::resolve(&opts, None, &file, DEFAULT_K_POINTS)?;
            cmd_esd(&cfg)
        }
    }
}

/// Exit codes: 0 success, 2 validation/usage, 3 never entangled,
/// 4 no death found, 5 filter annihilated the state, 1 anything else.
fn exit_code(err: &Error) -> u8 {
    match err {
        Error::InvalidArgument(_) | Error::Config(_) => 2,
        Error::NeverEntangled => 3,
        Error::NoDeathFound { .. } => 4,
        Error::FilterAnnihilated { .. } => 5,
        Error::Io(_) => 1,
    }
}

/// Parse the process arguments, run the requested command, and map errors to
/// distinct exit codes.
pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("qfilter").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn sig12_is_twelve_significant_digits() {
        assert_eq!(sig12(0.5), "5.00000000000e-1");
        assert_eq!(sig12(1.0), "1.00000000000e0");
        assert_eq!(sig12(0.0), "0.00000000000e0");
        assert_eq!(sig12(6.5 / 9.0), "7.22222222222e-1");
    }

    #[test]
    fn defaults_resolve_when_nothing_is_given() {
        let cli = parse(&["sweep-k"]);
        let Command::SweepK { opts } = cli.command else { panic!("wrong command") };
        let cfg = RunConfig::resolve(&opts, None, &HashMap::new(), DEFAULT_K_POINTS).unwrap();
        assert_eq!(cfg.state, NamedState::W3);
        assert_eq!(cfg.k, 0.5);
        assert_eq!(cfg.points, DEFAULT_K_POINTS);
        assert_eq!(cfg.pair, QubitPair::Q23);
        assert_eq!(cfg.format, OutputFormat::Csv);
        assert!(cfg.k_list.is_none());
        assert!(cfg.out.is_none());
    }

    #[test]
    fn flags_override_config_file_values() {
        let mut file = HashMap::new();
        file.insert("state".to_string(), "ghz3".to_string());
        file.insert("k".to_string(), "0.25".to_string());
        file.insert("points".to_string(), "11".to_string());

        let cli = parse(&["sweep-k", "--k", "0.75"]);
        let Command::SweepK { opts } = cli.command else { panic!("wrong command") };
        let cfg = RunConfig::resolve(&opts, None, &file, DEFAULT_K_POINTS).unwrap();
        // flag wins over file
        assert_eq!(cfg.k, 0.75);
        // file wins over default
        assert_eq!(cfg.state, NamedState::Ghz3);
        assert_eq!(cfg.points, 11);
    }

    #[test]
    fn config_file_parsing() {
        let dir = std::env::temp_dir();
        let path = dir.join(format!("qfilter-config-test-{}.conf", std::process::id()));
        fs::write(
            &path,
            "# comment line\nstate = wwbar3\nK = 0.3   # trailing comment\ngamma_t_max = 2.5\n\nk-list = 0, 0.5, 1\n",
        )
        .unwrap();
        let map = load_config(&path).unwrap();
        fs::remove_file(&path).ok();
        assert_eq!(map.get("state").unwrap(), "wwbar3");
        assert_eq!(map.get("k").unwrap(), "0.3");
        assert_eq!(map.get("gamma-t-max").unwrap(), "2.5");
        assert_eq!(map.get("k-list").unwrap(), "0, 0.5, 1");
    }

    #[test]
    fn malformed_config_is_rejected() {
        let dir = std::env::temp_dir();
        let path = dir.join(format!("qfilter-bad-config-{}.conf", std::process::id()));
        fs::write(&path, "state wwbar3\n").unwrap();
        let err = load_config(&path).unwrap_err();
        fs::remove_file(&path).ok();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn out_of_range_values_are_validation_errors() {
        let cli = parse(&["sweep-k", "--k", "1.5"]);
        let Command::SweepK { opts } = cli.command else { panic!("wrong command") };
        let err = RunConfig::resolve(&opts, None, &HashMap::new(), DEFAULT_K_POINTS).unwrap_err();
        assert_eq!(exit_code(&err), 2);
    }

    #[test]
    fn figure_numbers_outside_range_are_rejected() {
        let cfg = RunConfig {
            state: NamedState::W3,
            k: 0.5,
            k_list: None,
            gamma_t: 0.0,
            gamma_t_max: DEFAULT_GAMMA_T_MAX,
            points: 5,
            pair: QubitPair::Q23,
            out: None,
            format: OutputFormat::Csv,
        };
        let err = cmd_figure(9, &cfg).unwrap_err();
        assert_eq!(exit_code(&err), 2);
        let err = cmd_figure(0, &cfg).unwrap_err();
        assert_eq!(exit_code(&err), 2);
    }

    #[test]
    fn k_list_parses_from_both_layers() {
        let cli = parse(&["sweep-k", "--k-list", "0,0.5,1"]);
        let Command::SweepK { opts } = cli.command else { panic!("wrong command") };
        let cfg = RunConfig::resolve(&opts, None, &HashMap::new(), DEFAULT_K_POINTS).unwrap();
        assert_eq!(cfg.k_list.unwrap(), vec![0.0, 0.5, 1.0]);

        let mut file = HashMap::new();
        file.insert("k-list".to_string(), "0.25, 0.75".to_string());
        let cli = parse(&["sweep-k"]);
        let Command::SweepK { opts } = cli.command else { panic!("wrong command") };
        let cfg = RunConfig::resolve(&opts, None, &file, DEFAULT_K_POINTS).unwrap();
        assert_eq!(cfg.k_list.unwrap(), vec![0.25, 0.75]);
    }

    #[test]
    fn exit_codes_are_distinct_per_error_class() {
        assert_eq!(exit_code(&Error::invalid("x")), 2);
        assert_eq!(exit_code(&Error::NeverEntangled), 3);
        assert_eq!(exit_code(&Error::NoDeathFound { horizon: 20.0 }), 4);
        assert_eq!(exit_code(&Error::FilterAnnihilated { prob: 0.0 }), 5);
    }
}
