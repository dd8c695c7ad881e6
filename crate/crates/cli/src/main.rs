mod render;

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use sievekit::fibonomial::fibonomial;
use sievekit::gates::{identity_gates, schroder_gate};
use sievekit::orbits::{enumerate, Family, FamilySpec};
use sievekit::qtcat::{
    explore_dissection_conjecture, little_qt_schroder, little_schroder_symmetry, qt_catalan, qt_schroder,
};
use sievekit::sievecheck::{all_as_expected, verify_suite, NRange, SUITES};

#[derive(Parser)]
#[command(name = "sievekit", version, about = "Cyclic and dihedral sieving checks")]
struct Cli {
    /// Worker threads (default: all cores)
    #[arg(long, global = true, env = "SIEVEKIT_THREADS", value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Conjugacy classes and irreducible characters of I2(n)
    Chartable {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate a family and count fixed points per conjugacy class
    Enumerate {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, conflicts_with = "dump")]
        count_only: bool,
        /// List every object
        #[arg(long)]
        dump: bool,
    },
    /// Fibonomial {n choose k} in s, t (every k when --k is omitted)
    Fibonomial {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: Option<u32>,
    },
    /// q,t-Catalan polynomial by area and bounce
    Qtcatalan {
        #[arg(long)]
        n: u32,
    },
    /// q,t-Schroder polynomial with d diagonal steps
    Qtschroder {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        /// The little Schroder polynomial instead
        #[arg(long)]
        little: bool,
    },
    /// Run a named verification suite
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        #[arg(long)]
        n_min: Option<u32>,
        #[arg(long)]
        n_max: Option<u32>,
        /// Write the reports as JSON to this path
        #[arg(long)]
        json: Option<PathBuf>,
        /// Only print the summary
        #[arg(long)]
        quiet: bool,
    },
    /// Search prefactors (sign t)^f for the dissection sieving polynomial
    Explore {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 0)]
        f_min: u32,
        /// Defaults to 2 n^2
        #[arg(long)]
        f_max: Option<u32>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run every identity gate and verification suite
    Selftest,
}

fn write_json<T: serde::Serialize>(path: &PathBuf, value: &T) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn run(cli: Cli, out: &mut String) -> anyhow::Result<bool> {
    match cli.command {
        Command::Chartable { n, json } => {
            let table = render::char_table(n)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&table)?)?;
            } else {
                out.push_str(&render::char_table_text(&table, n)?);
            }
        }
        Command::Enumerate { family, n, k, count_only, dump } => {
            let fam = enumerate(FamilySpec::new(family, n, k)?)?;
            if count_only {
                writeln!(out, "{}", fam.len())?;
                return Ok(true);
            }
            if dump {
                for x in &fam.objects {
                    writeln!(out, "{x}")?;
                }
                return Ok(true);
            }
            writeln!(out, "{}: {} objects", fam.spec, fam.len())?;
            let classes = sievekit::dihedral::conjugacy_classes(n)?;
            for (c, fixed) in classes.iter().zip(fam.class_fixed_counts()?) {
                writeln!(out, "  {:<20} |C| = {:<3} fixed = {fixed}", c.label.to_string(), c.size())?;
            }
            writeln!(out, "  orbits: {}", fam.orbit_count()?)?;
        }
        Command::Fibonomial { n, k } => match k {
            Some(k) => writeln!(out, "{}", fibonomial(n, k)?)?,
            None => {
                for k in 0..=n {
                    writeln!(out, "{k}: {}", fibonomial(n, k)?)?;
                }
            }
        },
        Command::Qtcatalan { n } => writeln!(out, "{}", qt_catalan(n)?)?,
        Command::Qtschroder { n, d, little } => {
            let p = if little { little_qt_schroder(n, d)? } else { qt_schroder(n, d)? };
            writeln!(out, "{p}")?;
        }
        Command::Verify { suite, n_min, n_max, json, quiet } => {
            let range = NRange { min: n_min.unwrap_or(0), max: n_max.unwrap_or(u32::MAX) };
            if range.min > range.max {
                bail!("--n-min {} exceeds --n-max {}", range.min, range.max);
            }
            let reports = verify_suite(&suite, range)?;
            if !quiet {
                for r in &reports {
                    writeln!(out, "{r}")?;
                }
            }
            let real = reports.iter().filter(|r| !r.control);
            let (pass, total) = real.fold((0, 0), |(p, t), r| (p + r.pass as usize, t + 1));
            let controls = reports.iter().filter(|r| r.control).count();
            if reports.is_empty() {
                writeln!(out, "{suite}: no parameters in the requested n range")?;
            } else {
                writeln!(out, "{suite}: {pass}/{total} checks pass, {controls} negative controls")?;
            }
            if let Some(path) = json {
                write_json(&path, &reports)?;
            }
            return Ok(all_as_expected(&reports));
        }
        Command::Explore { n, k, f_min, f_max, json } => {
            let f_max = f_max.unwrap_or(2 * n * n);
            let report = explore_dissection_conjecture(n, k, f_min, f_max)?;
            writeln!(out, "dissections(n={n}, k={k}), S~_{{{}, {}}}(q,t) = {}", n - 2, n - 3 - k, report.polynomial)?;
            writeln!(out, "symmetric in q, t: {}", report.symmetry)?;
            writeln!(out, "candidates tried: {}", report.candidates.len())?;
            let matches: Vec<String> =
                report.matching.iter().map(|m| format!("(f={}, sign={})", m.f, m.sign)).collect();
            writeln!(out, "matching: {}", if matches.is_empty() { "none".to_string() } else { matches.join(" ") })?;
            if let Some(path) = json {
                write_json(&path, &report)?;
            }
        }
        Command::Selftest => return selftest(out),
    }
    Ok(true)
}

fn selftest(out: &mut String) -> anyhow::Result<bool> {
    let mut ok = true;
    let mut gates = identity_gates();
    gates.push(schroder_gate());
    for g in &gates {
        writeln!(out, "{g}")?;
        ok &= g.pass();
    }
    let sym = little_schroder_symmetry(7)?;
    let asym = sym.iter().filter(|x| !x.2).count();
    writeln!(out, "INFO little Schroder polynomials for n <= 7: {} symmetric, {asym} not", sym.len() - asym)?;
    for suite in SUITES {
        let reports = verify_suite(suite, NRange::default())?;
        let good = all_as_expected(&reports);
        let controls = reports.iter().filter(|r| r.control).count();
        writeln!(
            out,
            "{} suite {suite} ({} reports, {controls} controls)",
            if good { "PASS" } else { "FAIL" },
            reports.len()
        )?;
        for r in reports.iter().filter(|r| !r.as_expected()) {
            writeln!(out, "{r}")?;
        }
        ok &= good;
    }
    writeln!(out, "{}", if ok { "selftest passed" } else { "selftest FAILED" })?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t as usize).build_global() {
            eprintln!("error: thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    let mut out = String::new();
    let result = run(cli, &mut out);
    let mut stdout = std::io::stdout().lock();
    match stdout.write_all(out.as_bytes()).and_then(|()| stdout.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            eprintln!("error: stdout: {e}");
            return ExitCode::from(2);
        }
        _ => {}
    }
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
