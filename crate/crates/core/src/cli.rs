//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on a domain error or a failed claim, 2 on a
//! usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::claims::{any_failed, report_json, run_all};
use crate::error::{Error, Result};
use crate::exponent::bound::{BoundRecord, EtaInterval};
use crate::exponent::calculus::{
    asymptotic_annotation, best_max_form, max_form_bound, max_form_record, max_form_validity_note,
    montgomery_bound_with, prime_gap_exponent, PRIME_GAP_CAVEAT,
};
use crate::exponent::crossover::{crossover, default_width, Crossover, Root};
use crate::exponent::envelope::{
    dh_break_range, envelope, sigma_of, sup_a, trivial_from, Envelope, SupValue,
};
use crate::exponent::mu::{HypothesisMode, MuTable, ELL_CAP};
use crate::exponent::registry::{default_registry, named_bound, BoundId};
use crate::numerics::riemann_siegel::riemann_siegel_z;
use crate::numerics::scan::mu_scan;
use crate::numerics::zeros::{check_asymptotic, count_zeros, empirical_n_sigma_t};
use crate::plot::envelope_svg;
use crate::rational::{parse_exact, sig15, to_exact_string, to_f64, Rational};

fn exact_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_exact(s).map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "zero-density",
    version,
    about = "Exact zero-density exponent bounds for zeta, with numerical cross-checks",
    long_about = "Exact zero-density exponent bounds for zeta, with numerical cross-checks.\n\n\
        Units: eta = 1 - sigma is an exact rational written num/den (decimals are rejected \
        for exact operations); heights T, sigma in the zeta commands and grid steps are decimals."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate, compare and combine density bounds B(eta) (eta exact num/den)
    #[command(subcommand)]
    Bounds(Box<BoundsCmd>),
    /// Prime-gap exponents from a uniform density bound
    #[command(subcommand)]
    Gaps(GapsCmd),
    /// Re-derive the checkable claims about the bounds
    #[command(subcommand)]
    Claims(ClaimsCmd),
    /// Numerical checks with zeta on the critical strip (T, sigma decimal)
    #[command(subcommand)]
    Zeta(ZetaCmd),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Hypothesis {
    None,
    Lh,
    Custom,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    /// mu table CSV: alpha_num,alpha_den,mu_num,mu_den,source_tag,citation_text
    #[arg(long = "mu-table", value_name = "PATH")]
    pub mu_table: Option<PathBuf>,
    /// Hypothesis mode; `lh` sets mu(alpha) = 0 for alpha >= 1/2, `custom` needs --mu-table
    #[arg(long, value_enum, default_value = "none")]
    pub hypothesis: Hypothesis,
}

impl TableArgs {
    pub fn table(&self) -> Result<MuTable> {
        let base = match &self.mu_table {
            Some(p) => MuTable::from_csv_path(p)?,
            None if self.hypothesis == Hypothesis::Custom => {
                return Err(Error::Domain("--hypothesis custom needs --mu-table".into()))
            }
            None => MuTable::hardy_littlewood(),
        };
        Ok(match self.hypothesis {
            Hypothesis::Lh => base.with_mode(HypothesisMode::Lindelof),
            _ => base,
        })
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutArgs {
    /// Write output here instead of stdout
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct RangeArgs {
    /// Left end of the eta range, exact num/den (open)
    #[arg(long = "eta-from", value_parser = exact_arg)]
    pub eta_from: Option<Rational>,
    /// Right end of the eta range, exact num/den (closed)
    #[arg(long = "eta-to", value_parser = exact_arg)]
    pub eta_to: Option<Rational>,
    /// Use sigma in [SIGMA, 1), i.e. eta in (0, 1 - SIGMA]; exact num/den
    #[arg(long = "sigma-from", value_parser = exact_arg, conflicts_with_all = ["eta_from", "eta_to"])]
    pub sigma_from: Option<Rational>,
}

impl RangeArgs {
    fn interval(&self) -> EtaInterval {
        if let Some(s) = &self.sigma_from {
            return EtaInterval::open_closed(Rational::from_integer(0.into()), sigma_of(s));
        }
        let full = EtaInterval::full();
        EtaInterval::open_closed(
            self.eta_from.clone().unwrap_or(full.lo),
            self.eta_to.clone().unwrap_or(full.hi),
        )
    }
}

#[derive(Debug, Subcommand)]
pub enum BoundsCmd {
    /// B(eta) from the max-form bound (--ell), a named bound (--bound), or the best l
    Eval {
        /// eta = 1 - sigma, exact num/den in (0, 1/2]
        #[arg(long, value_parser = exact_arg)]
        eta: Rational,
        /// Exponent-table index l (0 gives the l = 0 bound from mu(0) alone)
        #[arg(long, conflicts_with = "bound")]
        ell: Option<u32>,
        /// Named bound, e.g. Ingham, Huxley, MaxForm-l2, Montgomery
        #[arg(long)]
        bound: Option<String>,
        #[command(flatten)]
        table: TableArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Lower envelope of a family of bounds over an eta range
    Envelope {
        /// Comma-separated bound names (default: all proven bounds)
        #[arg(long, value_delimiter = ',')]
        bounds: Vec<String>,
        /// Add the max-form bound for these l (comma-separated)
        #[arg(long, value_delimiter = ',')]
        ell: Vec<u32>,
        #[command(flatten)]
        range: RangeArgs,
        #[command(flatten)]
        table: TableArgs,
        /// Sample points per curve in SVG output
        #[arg(long, default_value_t = 400)]
        grid: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Exact crossing points of two bounds
    Crossover {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[command(flatten)]
        table: TableArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Range of eta where a bound is at most 2 (the density hypothesis)
    DhRange {
        #[arg(long, conflicts_with = "ell")]
        bound: Option<String>,
        #[arg(long)]
        ell: Option<u32>,
        #[command(flatten)]
        table: TableArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Supremum of the envelope over an eta range (uniform A)
    Sup {
        #[arg(long, value_delimiter = ',')]
        bounds: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        ell: Vec<u32>,
        #[command(flatten)]
        range: RangeArgs,
        #[command(flatten)]
        table: TableArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Smallest eta from which a bound is no better than 1/eta
    TrivialRange {
        #[arg(long, conflicts_with = "ell")]
        bound: Option<String>,
        #[arg(long)]
        ell: Option<u32>,
        #[command(flatten)]
        table: TableArgs,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum GapsCmd {
    /// 1 - 1/A for a uniform bound A >= 2 (exact num/den)
    Exponent {
        #[arg(long = "A", value_parser = exact_arg)]
        a: Rational,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum ClaimsCmd {
    /// Run every claim; exit 1 if any fails
    Verify {
        #[command(flatten)]
        table: TableArgs,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum ZetaCmd {
    /// Hardy's Z(t) at --T, or on a grid from --from to --T with --grid-step
    Z {
        /// Height t (decimal, >= 10)
        #[arg(long = "T")]
        t: f64,
        /// Start of a grid (decimal)
        #[arg(long)]
        from: Option<f64>,
        /// Grid spacing (decimal)
        #[arg(long = "grid-step", default_value_t = 0.05)]
        grid_step: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Count zeros up to height T; with --sigma, estimate N(sigma, T)
    Count {
        /// Height T (decimal, 10 <= T <= 10^4)
        #[arg(long = "T")]
        t: f64,
        /// Sign-change grid spacing (decimal, 0 < h <= 0.1)
        #[arg(long = "grid-step", default_value_t = 0.05)]
        grid_step: f64,
        /// Real part for N(sigma, T) (decimal, 1/2 < sigma < 1)
        #[arg(long)]
        sigma: Option<f64>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Running maximum of |zeta(sigma + it)| for 1 < t <= T
    MuScan {
        /// Real part (decimal in [0, 1])
        #[arg(long)]
        sigma: f64,
        /// Height T (decimal, 100 <= T <= 10^4)
        #[arg(long = "T")]
        t: f64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// N(T) / ((T/2pi) log T) for a list of heights
    #[command(name = "check-11")]
    Check11 {
        /// Comma-separated heights (decimal, 100 <= T <= 10^4)
        #[arg(long = "T", value_delimiter = ',', default_value = "100,300,1000,3000")]
        t: Vec<f64>,
        #[command(flatten)]
        out: OutArgs,
    },
}

fn resolve_bound(name: &str, table: &MuTable) -> Result<Vec<BoundRecord>> {
    if let Some(rest) = name
        .strip_prefix("l=")
        .or_else(|| name.strip_prefix("ell="))
    {
        let ell: u32 = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad l in `{name}`")))?;
        return Ok(vec![max_form_record(ell, table)?]);
    }
    let id: BoundId = name.parse()?;
    Ok(id.records())
}

fn family(names: &[String], ells: &[u32], table: &MuTable) -> Result<Vec<BoundRecord>> {
    if names.is_empty() && ells.is_empty() {
        return Ok(default_registry());
    }
    let mut recs = Vec::new();
    for n in names {
        recs.extend(resolve_bound(n, table)?);
    }
    for &l in ells {
        recs.push(max_form_record(l, table)?);
    }
    Ok(recs)
}

fn single(bound: &Option<String>, ell: Option<u32>, table: &MuTable) -> Result<Vec<BoundRecord>> {
    match (bound, ell) {
        (Some(b), _) => resolve_bound(b, table),
        (None, Some(l)) => Ok(vec![max_form_record(l, table)?]),
        (None, None) => Err(Error::Parse("one of --bound or --ell is required".into())),
    }
}

fn emit(out: &OutArgs, text: String, stdout: &mut dyn Write) -> Result<()> {
    match &out.out {
        Some(p) => std::fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn json_text(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

fn envelope_output(env: &Envelope, recs: &[BoundRecord], grid: usize, format: Format) -> String {
    match format {
        Format::Csv => env.to_csv(),
        Format::Json => json_text(&env.to_json()),
        Format::Svg => envelope_svg(recs, env, grid),
        Format::Text => {
            let mut s = String::new();
            for seg in &env.segments {
                let approx = if seg.lo_exact && seg.hi_exact {
                    ""
                } else {
                    " (approx)"
                };
                s.push_str(&format!(
                    "({}, {}]{approx}  {}  {}\n",
                    to_exact_string(&seg.lo),
                    to_exact_string(&seg.hi),
                    seg.winner,
                    seg.expr
                ));
            }
            s
        }
    }
}

fn root_text(r: &Root) -> String {
    match r {
        Root::Exact(x) => to_exact_string(x),
        Root::Isolated { lo, hi } => format!(
            "[{}, {}] (~{})",
            to_exact_string(lo),
            to_exact_string(hi),
            sig15(to_f64(&r.representative()))
        ),
    }
}

fn run_bounds(cmd: BoundsCmd, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match cmd {
        BoundsCmd::Eval {
            eta,
            ell,
            bound,
            table,
            out,
        } => {
            let table = table.table()?;
            let (value, citation) = match (ell, &bound) {
                (Some(0), _) => (
                    montgomery_bound_with(&eta, &table)?,
                    "max(4u_0(eta), 3u_0(2eta)), l = 0".to_string(),
                ),
                (Some(l), _) => {
                    if let Some(note) = max_form_validity_note(l, &eta) {
                        writeln!(stderr, "warning: {note}")?;
                    }
                    (
                        max_form_bound(l, &eta, &table)?,
                        format!("max(4u_l, 3v_l) density bound, l = {l}"),
                    )
                }
                (None, Some(b)) => {
                    let id: BoundId = b.parse()?;
                    let v = named_bound(id, &eta)?;
                    let rec = id.records().into_iter().find(|r| r.is_valid_at(&eta));
                    let cite = rec.map(|r| r.citation).unwrap_or_default();
                    match v.exact() {
                        Some(x) => (x.clone(), cite),
                        None => {
                            let text = match out.format {
                                Format::Json => json_text(&serde_json::json!({
                                    "eta": to_exact_string(&eta),
                                    "value": v.to_string(),
                                    "citation": cite,
                                })),
                                _ => format!("{v}\n# {cite}\n"),
                            };
                            emit(&out, text, stdout)?;
                            return Ok(0);
                        }
                    }
                }
                (None, None) => {
                    let (l, v) = best_max_form(&eta, &table, ELL_CAP)?;
                    (
                        v,
                        format!(
                            "max(4u_l, 3v_l) density bound, best l = {l} (asymptotic ~ {})",
                            sig15(asymptotic_annotation(to_f64(&eta)))
                        ),
                    )
                }
            };
            let text = match out.format {
                Format::Json => json_text(&serde_json::json!({
                    "eta": to_exact_string(&eta),
                    "value": to_exact_string(&value),
                    "citation": citation,
                })),
                Format::Csv => format!(
                    "eta,value,citation\n{},{},\"{}\"\n",
                    to_exact_string(&eta),
                    to_exact_string(&value),
                    citation
                ),
                _ => format!("{}\n# {citation}\n", to_exact_string(&value)),
            };
            emit(&out, text, stdout)?;
        }
        BoundsCmd::Envelope {
            bounds,
            ell,
            range,
            table,
            grid,
            out,
        } => {
            let table = table.table()?;
            let recs = family(&bounds, &ell, &table)?;
            let env = envelope(&recs, &range.interval())?;
            emit(&out, envelope_output(&env, &recs, grid, out.format), stdout)?;
        }
        BoundsCmd::Crossover { a, b, table, out } => {
            let table = table.table()?;
            let ra = resolve_bound(&a, &table)?;
            let rb = resolve_bound(&b, &table)?;
            let mut rows = Vec::new();
            for x in &ra {
                for y in &rb {
                    if x.validity.intersect(&y.validity).is_empty() {
                        continue;
                    }
                    let c = crossover(x, y, &EtaInterval::full(), &default_width())?;
                    rows.push((x.name.clone(), y.name.clone(), c));
                }
            }
            let text = match out.format {
                Format::Json => json_text(&serde_json::Value::Array(
                    rows.iter()
                        .map(|(x, y, c)| {
                            let roots: Vec<String> = c.roots().iter().map(root_text).collect();
                            serde_json::json!({
                                "a": x,
                                "b": y,
                                "identical": matches!(c, Crossover::Identical),
                                "roots": roots,
                            })
                        })
                        .collect(),
                )),
                _ => rows
                    .iter()
                    .map(|(x, y, c)| match c {
                        Crossover::Identical => format!("{x} vs {y}: identical\n"),
                        Crossover::Roots(r) if r.is_empty() => format!("{x} vs {y}: none\n"),
                        Crossover::Roots(r) => format!(
                            "{x} vs {y}: {}\n",
                            r.iter().map(root_text).collect::<Vec<_>>().join(", ")
                        ),
                    })
                    .collect(),
            };
            emit(&out, text, stdout)?;
        }
        BoundsCmd::DhRange {
            bound,
            ell,
            table,
            out,
        } => {
            let table = table.table()?;
            let mut rows = Vec::new();
            for r in single(&bound, ell, &table)? {
                let d = dh_break_range(&r)?;
                let range = d.range.map_or("empty".to_string(), |x| x.to_string());
                rows.push((r.name, range, d.exact));
            }
            let text = match out.format {
                Format::Json => json_text(&serde_json::Value::Array(
                    rows.iter()
                        .map(|(n, r, e)| serde_json::json!({"bound": n, "dh_range": r, "exact": e}))
                        .collect(),
                )),
                _ => rows
                    .iter()
                    .map(|(n, r, e)| {
                        format!(
                            "{n}: {r}{}\n",
                            if *e { "" } else { " (inner approximation)" }
                        )
                    })
                    .collect(),
            };
            emit(&out, text, stdout)?;
        }
        BoundsCmd::Sup {
            bounds,
            ell,
            range,
            table,
            out,
        } => {
            let table = table.table()?;
            let recs = family(&bounds, &ell, &table)?;
            let env = envelope(&recs, &range.interval())?;
            let s = sup_a(&env)?;
            let value = match &s.value {
                SupValue::Finite(v) => v.to_string(),
                SupValue::Unbounded => "unbounded".to_string(),
            };
            let at = s.at.as_ref().map_or("none".into(), to_exact_string);
            let text = match out.format {
                Format::Json => json_text(&serde_json::json!({
                    "interval": env.interval.to_string(),
                    "sup": value,
                    "at": at,
                    "trivial": s.trivial,
                })),
                _ => format!(
                    "{value}\n# at eta = {at}{}\n",
                    if s.trivial {
                        "; trivial ceiling wins somewhere"
                    } else {
                        ""
                    }
                ),
            };
            emit(&out, text, stdout)?;
        }
        BoundsCmd::TrivialRange {
            bound,
            ell,
            table,
            out,
        } => {
            let table = table.table()?;
            let mut text = String::new();
            for r in single(&bound, ell, &table)? {
                let from = trivial_from(&r)?;
                let line = match (&from, out.format) {
                    (Some(x), Format::Json) => {
                        serde_json::json!({"bound": r.name, "trivial_from": to_exact_string(x)})
                            .to_string()
                    }
                    (None, Format::Json) => {
                        serde_json::json!({"bound": r.name, "trivial_from": null}).to_string()
                    }
                    (Some(x), _) => {
                        format!("{}: trivial for eta >= {}", r.name, to_exact_string(x))
                    }
                    (None, _) => format!("{}: never trivial", r.name),
                };
                text.push_str(&line);
                text.push('\n');
            }
            emit(&out, text, stdout)?;
        }
    }
    Ok(0)
}

fn run_zeta(cmd: ZetaCmd, stdout: &mut dyn Write) -> Result<i32> {
    match cmd {
        ZetaCmd::Z {
            t,
            from,
            grid_step,
            out,
        } => {
            let ts: Vec<f64> = match from {
                None => vec![t],
                Some(t0) => {
                    if grid_step <= 0.0 || grid_step.is_nan() || t0 > t {
                        return Err(Error::Domain(
                            "need --from <= --T and --grid-step > 0".into(),
                        ));
                    }
                    let n = ((t - t0) / grid_step).floor() as usize;
                    (0..=n).map(|k| t0 + k as f64 * grid_step).collect()
                }
            };
            let mut text = String::from("t,value\n");
            for t in ts {
                text.push_str(&format!("{},{}\n", sig15(t), sig15(riemann_siegel_z(t)?)));
            }
            emit(&out, text, stdout)?;
        }
        ZetaCmd::Count {
            t,
            grid_step,
            sigma,
            out,
        } => {
            let text = if let Some(s) = sigma {
                let c = empirical_n_sigma_t(s, t)?;
                json_text(&serde_json::to_value(&c).expect("serializable"))
            } else {
                let r = count_zeros(t, grid_step)?;
                match out.format {
                    Format::Csv => {
                        let mut s = String::from("t,value\n");
                        for (k, z) in r.zeros.iter().enumerate() {
                            s.push_str(&format!("{},{}\n", sig15(*z), k + 1));
                        }
                        s
                    }
                    _ => json_text(&serde_json::to_value(&r).expect("serializable")),
                }
            };
            emit(&out, text, stdout)?;
        }
        ZetaCmd::MuScan {
            sigma,
            t,
            samples,
            out,
        } => {
            let r = mu_scan(sigma, t, samples)?;
            let text = match out.format {
                Format::Csv => {
                    let mut s = String::from("t,value\n");
                    for (t, v) in &r.running_max {
                        s.push_str(&format!("{},{}\n", sig15(*t), sig15(*v)));
                    }
                    s
                }
                _ => json_text(&serde_json::json!({
                    "sigma": r.sigma,
                    "T": r.t_max,
                    "samples": r.samples,
                    "max_abs_zeta": r.running_max.last().map(|p| p.1),
                    "fitted_exponent": r.fitted_exponent,
                    "reference_mu": r.reference_mu,
                    "reference": r.reference_label,
                    "note": r.note,
                })),
            };
            emit(&out, text, stdout)?;
        }
        ZetaCmd::Check11 { t, out } => {
            let rows = check_asymptotic(&t)?;
            let mut text = String::from("t,value\n");
            for (t, ratio) in rows {
                text.push_str(&format!("{},{}\n", sig15(t), sig15(ratio)));
            }
            emit(&out, text, stdout)?;
        }
    }
    Ok(0)
}

fn dispatch(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Bounds(b) => run_bounds(*b, stdout, stderr),
        Command::Gaps(GapsCmd::Exponent { a, out }) => {
            let e = prime_gap_exponent(&a)?;
            let text = match out.format {
                Format::Json => json_text(&serde_json::json!({
                    "A": to_exact_string(&a),
                    "exponent": to_exact_string(&e),
                    "caveat": PRIME_GAP_CAVEAT,
                })),
                _ => format!("{}\n# {PRIME_GAP_CAVEAT}\n", to_exact_string(&e)),
            };
            emit(&out, text, stdout)?;
            Ok(0)
        }
        Command::Claims(ClaimsCmd::Verify { table, out }) => {
            let table = table.table()?;
            let res = run_all(&default_registry(), &table);
            let text = match out.format {
                Format::Json => json_text(&report_json(&res)),
                _ => res.iter().map(|r| r.summary_line() + "\n").collect(),
            };
            emit(&out, text, stdout)?;
            Ok(if any_failed(&res) { 1 } else { 0 })
        }
        Command::Zeta(z) => run_zeta(z, stdout),
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(rendered.as_bytes());
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match dispatch(cli, stdout, stderr) {
        Ok(code) => code,
        Err(Error::Parse(msg)) => {
            let _ = writeln!(stderr, "usage error: {msg}");
            2
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut o = Vec::new();
        let mut e = Vec::new();
        let mut argv = vec!["zero-density"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut o, &mut e);
        (
            code,
            String::from_utf8(o).unwrap(),
            String::from_utf8(e).unwrap(),
        )
    }

    #[test]
    fn eval_prints_exact_value() {
        let (code, out, _) = call(&["bounds", "eval", "--eta", "1/8", "--ell", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().next(), Some("2/1"));
        assert!(out.contains("max(4u_l, 3v_l)"));
    }

    #[test]
    fn decimal_eta_is_usage_error() {
        let (code, _, err) = call(&["bounds", "eval", "--eta", "0.125", "--ell", "2"]);
        assert_eq!(code, 2);
        assert!(err.contains("num/den"));
    }

    #[test]
    fn domain_error_exits_one() {
        let (code, _, err) = call(&["bounds", "eval", "--eta", "1/4", "--ell", "2"]);
        assert_eq!(code, 1);
        assert!(err.contains("eta"));
    }

    #[test]
    fn unknown_subcommand_exits_two() {
        assert_eq!(call(&["bounds", "frobnicate"]).0, 2);
    }

    #[test]
    fn claims_verify_passes() {
        let (code, out, _) = call(&["claims", "verify"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().filter(|l| l.contains("ExactPass")).count(), 15);
    }

    #[test]
    fn help_mentions_units() {
        let (code, out, _) = call(&["bounds", "eval", "--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("num/den"));
        let (_, out, _) = call(&["zeta", "count", "--help"]);
        assert!(out.contains("decimal"));
    }

    #[test]
    fn svg_is_deterministic() {
        let args = ["bounds", "envelope", "--format", "svg"];
        assert_eq!(call(&args).1, call(&args).1);
    }
}
