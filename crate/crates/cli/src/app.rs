use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use ratpark::daha::{evaluate_b, pf_diagram_of_weight, tableau_of_weight, weight_of_alcove, weight_of_alcove_unchecked};
use ratpark::finite::{finite_springer_poincare, reconstruct_v1, reconstruct_v2};
use ratpark::maps::{self, statistics_table};
use ratpark::parking::{check_coprime, format_values, parse_values};
use ratpark::qt_stats::{affine_springer_poincare_of, hilbert_series_of, qt_catalan};
use ratpark::shi::{pak_stanley_labels, slope};
use ratpark::sommers::{in_dilated_alcove, omega_m};
use ratpark::sp_invert::{build_u, extract_omega, DEFAULT_CAP_PER_N};
use ratpark::{AffinePermutation, ParkingFunction};

use crate::cache;
use crate::error::{CliError, CliResult, EXIT_OK};
use crate::sweep::{run_sweep, SweepConfig};

/// Default bound on `m^{n−1}` for commands that enumerate.
const DEFAULT_CAP: u64 = 1_000_000;

#[derive(Parser, Debug)]
#[command(name = "ratpark", version, about = "Rational slope parking functions and m-stable affine permutations")]
struct Cli {
    /// Skip the on-disk enumeration cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Refuse pairs with more than this many permutations.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    max_count: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Stable,
    Restricted,
    /// m-stable permutations that are minimal length right coset representatives.
    Minl,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Op {
    Anderson,
    Ps,
    Sp,
    Zeta,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List windows, one per line, in lexicographic order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Kind::Restricted)]
        kind: Kind,
    },
    /// TSV: omega, inverse, Anderson PF, area, PS, dinv.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Sum of q^area t^dinv over m-stable permutations.
    Hilbert {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// The rational q,t-Catalan polynomial.
    Catalan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Poincaré polynomial of the affine (or, with --finite, finite) Springer fiber.
    Poincare {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        finite: bool,
    },
    /// Apply one map. Windows are written [a,b,...]; parking functions a,b,...
    Map {
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        m: usize,
    },
    /// Invert SP with the U-table algorithm and print the window.
    InvertSp {
        #[arg(long)]
        pf: String,
        #[arg(long)]
        m: usize,
        /// Largest label to place; defaults to 40n.
        #[arg(long)]
        cap: Option<usize>,
        /// Also print the period start N and the gaps below it.
        #[arg(long)]
        verbose: bool,
    },
    /// Reconstruct a finite m-stable permutation from its PS sequence.
    Reconstruct {
        #[arg(long)]
        pf: String,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        algo: u8,
    },
    /// Pak-Stanley labels of the k-Shi regions: label, then the alcove.
    Shi {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true, value_parser = parse_sign)]
        sign: i8,
    },
    /// DAHA weights: sigma, weight, b, standard, diagram rows.
    Daha {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// A single alcove; it may lie outside the dilated fundamental alcove.
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<String>,
    },
    /// Run every check on all coprime pairs within the bounds and write a JSON report.
    Sweep {
        /// Largest m^{n−1} to enumerate.
        #[arg(long, default_value_t = 1_000_000)]
        max_cells: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 32)]
        max_dim: usize,
        /// Largest m^{n−1} for the series, symmetry and roundtrip checks.
        #[arg(long, default_value_t = 100_000)]
        check_cells: u64,
        /// Largest m^{n−1} for the SP inverter.
        #[arg(long, default_value_t = 10_000)]
        invert_cells: u64,
        /// Record per-pair wall time; the report is then no longer reproducible byte for byte.
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        threads: Option<usize>,
    },
}

fn parse_sign(s: &str) -> Result<i8, String> {
    match s {
        "1" | "+1" | "+" => Ok(1),
        "-1" | "-" => Ok(-1),
        _ => Err(format!("sign must be +1 or -1, got {s:?}")),
    }
}

fn parse_perm(s: &str) -> CliResult<AffinePermutation> {
    let s = s.trim();
    let text = if s.starts_with('[') { s.to_string() } else { format!("[{s}]") };
    Ok(text.parse()?)
}

fn parse_pf(s: &str, m: usize) -> CliResult<ParkingFunction> {
    let v = parse_values(s.trim().trim_start_matches('[').trim_end_matches(']'))?;
    Ok(ParkingFunction::new(v.len(), m, v)?)
}

struct Ctx {
    use_cache: bool,
    cap: u64,
}

impl Ctx {
    fn restricted(&self, n: usize, m: usize) -> CliResult<Vec<AffinePermutation>> {
        check_coprime(n, m)?;
        Ok(cache::restricted(n, m, self.cap, self.use_cache)?.restricted)
    }

    fn stable(&self, n: usize, m: usize) -> CliResult<Vec<AffinePermutation>> {
        let mut v: Vec<_> = self.restricted(n, m)?.iter().map(AffinePermutation::inverse).collect();
        v.sort_unstable();
        Ok(v)
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> CliResult<()> {
    let ctx = Ctx { use_cache: !cli.no_cache, cap: cli.max_count };
    match cli.command {
        Command::Enumerate { n, m, kind } => {
            let list = match kind {
                Kind::Restricted => ctx.restricted(n, m)?,
                Kind::Stable => ctx.stable(n, m)?,
                Kind::Minl => ctx.stable(n, m)?.into_iter().filter(|w| w.is_min_length_right_rep()).collect(),
            };
            for w in list {
                writeln!(out, "{w}")?;
            }
        }
        Command::Table { n, m } => {
            for row in statistics_table(&ctx.stable(n, m)?, m)? {
                writeln!(out, "{}", row.to_tsv())?;
            }
        }
        Command::Hilbert { n, m } => writeln!(out, "{}", hilbert_series_of(&ctx.stable(n, m)?, m)?)?,
        Command::Catalan { n, m } => writeln!(out, "{}", qt_catalan(n, m)?)?,
        Command::Poincare { n, m, finite } => {
            let p = if finite {
                if n == 0 || m == 0 {
                    return Err(CliError::Usage("--n and --m must be positive".into()));
                }
                finite_springer_poincare(n, m)
            } else {
                affine_springer_poincare_of(&ctx.restricted(n, m)?, m)?
            };
            writeln!(out, "{p}")?;
        }
        Command::Map { op, input, m } => {
            let f = match op {
                Op::Anderson => maps::anderson(&parse_perm(&input)?, m)?,
                Op::Ps => maps::ps(&parse_perm(&input)?, m)?,
                Op::Sp => maps::sp(&parse_perm(&input)?, m)?,
                Op::Zeta => maps::zeta(&parse_pf(&input, m)?),
            };
            writeln!(out, "{}", format_values(f.values()))?;
        }
        Command::InvertSp { pf, m, cap, verbose } => {
            let f = parse_pf(&pf, m)?;
            let table = build_u(&f, cap.unwrap_or(DEFAULT_CAP_PER_N * f.n()))?;
            let w = extract_omega(&table)?;
            writeln!(out, "{w}")?;
            if verbose {
                let start = table.period_start().expect("extraction needs a period");
                writeln!(out, "N\t{start}")?;
                writeln!(out, "gaps\t{}", table.gaps_below_start().unwrap_or(0))?;
            }
        }
        Command::Reconstruct { pf, m, algo } => {
            let f = parse_values(pf.trim().trim_start_matches('[').trim_end_matches(']'))?;
            let w = if algo == 1 { reconstruct_v1(&f, m)? } else { reconstruct_v2(&f, m)? };
            writeln!(out, "[{}]", format_values(w.values()))?;
        }
        Command::Shi { n, k, sign } => {
            let m = slope(n, k, sign)?;
            check_coprime(n, m)?;
            let mut labels = pak_stanley_labels(n, k, sign, ctx.cap)?;
            labels.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
            for (u, f) in labels {
                writeln!(out, "{}\t{u}", format_values(f.values()))?;
            }
        }
        Command::Daha { n, m, sigma } => {
            check_coprime(n, m)?;
            let wm_inv = omega_m(n, m)?.inverse();
            let sigmas = match sigma {
                Some(s) => {
                    let s = parse_perm(&s)?;
                    if s.n() != n {
                        return Err(CliError::Usage(format!("--sigma has length {}, expected {n}", s.n())));
                    }
                    vec![s]
                }
                None => {
                    let mut v: Vec<_> =
                        ctx.restricted(n, m)?.iter().map(|u| wm_inv.compose(u)).collect::<ratpark::Result<_>>()?;
                    v.sort_unstable();
                    v
                }
            };
            for s in sigmas {
                let a = if in_dilated_alcove(&s, m) { weight_of_alcove(&s, m)? } else { weight_of_alcove_unchecked(&s)? };
                let b = evaluate_b(&a, m)?;
                let standard = tableau_of_weight(&a, m)?.is_standard();
                let rows = if standard { format_values(&pf_diagram_of_weight(&a, m)?) } else { "-".into() };
                let b_text: Vec<String> = b.iter().map(i64::to_string).collect();
                writeln!(out, "{s}\t{a}\t[{}]\t{standard}\t{rows}", b_text.join(","))?;
            }
        }
        Command::Sweep { max_cells, out: path, max_dim, check_cells, invert_cells, timing, threads } => {
            let cfg = SweepConfig { max_dim, max_cells, check_cells, invert_cells, use_cache: !cli.no_cache, timing };
            let report = match threads {
                Some(t) => rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build()
                    .map_err(|e| CliError::Usage(e.to_string()))?
                    .install(|| run_sweep(&cfg))?,
                None => run_sweep(&cfg)?,
            };
            std::fs::write(&path, report.to_json())?;
            let s = &report.summary;
            writeln!(out, "pairs\t{}", s.pairs)?;
            for (name, list) in [
                ("count_failures", &s.count_failures),
                ("hilbert_asymmetric", &s.hilbert_asymmetric),
                ("hilbert_specialization_failures", &s.hilbert_specialization_failures),
                ("roundtrip_failures", &s.roundtrip_failures),
                ("ps_not_bijective", &s.ps_not_bijective),
                ("poincare_mismatches", &s.poincare_mismatches),
                ("catalan_failures", &s.catalan_failures),
                ("catalan_asymmetric", &s.catalan_asymmetric),
                ("sp_inverter_failures", &s.sp_inverter_failures),
            ] {
                writeln!(out, "{name}\t{}", list.len())?;
            }
        }
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if e.use_stderr() { write!(err, "{}", e.render()) } else { write!(out, "{}", e.render()) };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(()) => EXIT_OK,
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
