//! `spinfh`: command-line front end for the spinfh engine.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 when a
//! resource cap or degree budget is hit, 64 on a usage error.

mod output;
mod verify;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use spinfh::combinatorics::class_size;
use spinfh::fh::{fit_structure_poly, graded_product_variant};
use spinfh::groupalgebra::{
    class_sum, decompose_central, elem_mul, set_support_cap, structure_coefficient, structure_constants,
};
use spinfh::jm::{a_coefficients, elementary_jm, elementary_jm_top, targeted_top_coefficients};
use spinfh::spingroup::enumerate_class;
use spinfh::{Error, Partition, Variant};

use output::{combination, Format, Rendered};

pub const DEFAULT_SEED: u64 = 0x5eed_0001;

/// Largest degree for full products of class sums without `--unsafe-n`.
const PRODUCT_BUDGET: usize = 9;
/// Largest degree for enumerating a class without `--unsafe-n`.
const CLASS_BUDGET: usize = 10;
/// Largest class walked by a targeted coefficient without `--unsafe-n`
/// (the size of `S_10`).
const WALK_BUDGET: u128 = 3_628_800;

#[derive(Parser, Debug)]
#[command(name = "spinfh", version, about = "Exact computations in spin symmetric group algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for products (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Cap on the estimated support of a single product.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Seed for randomized suites, decimal or 0x-prefixed hex.
    #[arg(long, value_parser = parse_seed, global = true)]
    seed: Option<u64>,
    /// Allow degrees beyond the default budgets.
    #[arg(long, global = true)]
    unsafe_n: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    Spin,
    Ordinary,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Spin => Variant::Spin,
            VariantArg::Ordinary => Variant::Ordinary,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate the even split class D_λ(n).
    Class {
        #[arg(long, value_parser = parse_partition)]
        lam: Partition,
        #[arg(long)]
        n: usize,
    },
    /// Multiply two class sums and decompose the product.
    Mult {
        #[arg(long, value_parser = parse_partition)]
        lam: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Spin)]
        variant: VariantArg,
    },
    /// Structure constants a_{λμ}^ν(n); a single one with --nu.
    Constants {
        #[arg(long, value_parser = parse_partition)]
        lam: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Option<Partition>,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Spin)]
        variant: VariantArg,
    },
    /// Fit the structure polynomial f_{λμ}^ν(n).
    Fit {
        #[arg(long, value_parser = parse_partition)]
        lam: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
        /// First degree of the fitting range.
        #[arg(long, requires = "to")]
        from: Option<usize>,
        /// Last degree of the fitting range; the last two points are held out.
        #[arg(long, requires = "from")]
        to: Option<usize>,
    },
    /// Product in the graded algebra.
    Graded {
        #[arg(long, value_parser = parse_partition)]
        lam: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_enum, default_value_t = VariantArg::Spin)]
        variant: VariantArg,
    },
    /// Elementary symmetric functions of the odd Jucys-Murphy elements.
    Jm {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        /// Only the top-degree part.
        #[arg(long, conflicts_with_all = ["extract", "lam"])]
        top: bool,
        /// Stable coefficients A_λ, checked one degree higher when cheap.
        #[arg(long, conflicts_with = "lam")]
        extract: bool,
        /// Read off A_λ for these partitions only (repeatable).
        #[arg(long, value_parser = parse_partition)]
        lam: Vec<Partition>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: verify::Suite,
        /// Largest r for the catalan, p2 and lagrange suites.
        #[arg(long)]
        rmax: Option<usize>,
        /// Largest degree for the generators suite.
        #[arg(long)]
        n: Option<usize>,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let s = s.trim();
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    }
    .map_err(|e| e.to_string())
}

#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 64,
            message: message.into(),
        }
    }

    fn budget(what: &str, n: usize, limit: usize) -> Self {
        Failure {
            code: 2,
            message: format!("{what} in degree {n} exceeds the default budget n <= {limit}; pass --unsafe-n to run anyway"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceCap(_) => 2,
            Error::Inconsistent { .. }
            | Error::DegreeExceeded { .. }
            | Error::NonIntegral
            | Error::StabilityViolation { .. }
            | Error::InconsistentLift
            | Error::NotSplit(_)
            | Error::NotCentral(_) => 1,
            _ => 64,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn check_budget(common: &Common, what: &str, n: usize, limit: usize) -> Result<(), Failure> {
    if n > limit && !common.unsafe_n {
        Err(Failure::budget(what, n, limit))
    } else {
        Ok(())
    }
}

fn check_walk(common: &Common, lambda: &Partition, mu: &Partition, n: usize) -> Result<(), Failure> {
    let walk = class_size(lambda, n).min(class_size(mu, n));
    if walk > WALK_BUDGET && !common.unsafe_n {
        return Err(Failure {
            code: 2,
            message: format!(
                "targeted coefficient in degree {n} walks {walk} permutations (budget {WALK_BUDGET}); pass --unsafe-n to run anyway"
            ),
        });
    }
    Ok(())
}

fn require_even(ps: &[&Partition]) -> Result<(), Failure> {
    for p in ps {
        if !p.all_even() {
            return Err(Error::OddPart((*p).clone()).into());
        }
    }
    Ok(())
}

fn entries_json(entries: &BTreeMap<Partition, i64>) -> serde_json::Value {
    let map: serde_json::Map<String, serde_json::Value> =
        entries.iter().map(|(k, &v)| (k.key(), v.into())).collect();
    serde_json::Value::Object(map)
}

fn entries_csv(entries: &BTreeMap<Partition, i64>) -> String {
    let mut s = String::from("nu,coefficient\n");
    for (k, v) in entries {
        s.push_str(&format!("\"{}\",{v}\n", k.key()));
    }
    s
}

fn basis_prefix(variant: Variant) -> &'static str {
    match variant {
        Variant::Spin => "d",
        Variant::Ordinary => "c",
    }
}

/// Returns the rendered output and whether it reports success.
fn run(command: &Command, common: &Common) -> Result<(Rendered, bool), Failure> {
    match command {
        Command::Class { lam, n } => {
            require_even(&[lam])?;
            check_budget(common, "class enumeration", *n, CLASS_BUDGET)?;
            let class = enumerate_class(lam, *n)?;
            let mut text = format!("D_{lam}({n}): {} members\n", class.len());
            let mut csv = String::from("perm,cycles,sign\n");
            for m in &class.members {
                let line: Vec<String> = m.perm().one_line(*n).iter().map(usize::to_string).collect();
                let sign = if m.sign() > 0 { "+" } else { "-" };
                text.push_str(&format!("{sign}{}\n", m.perm()));
                csv.push_str(&format!("\"{}\",\"{}\",{}\n", line.join(" "), m.perm(), m.sign()));
            }
            let value = json!({
                "lambda": lam,
                "n": n,
                "size": class.len(),
                "members": class.members,
            });
            Ok((Rendered::new(value, text).with_csv(csv), true))
        }
        Command::Mult { lam, mu, n, variant } => {
            let variant = Variant::from(*variant);
            if variant == Variant::Spin {
                require_even(&[lam, mu])?;
            }
            check_budget(common, "product", *n, PRODUCT_BUDGET)?;
            let a = class_sum(lam, *n, variant)?;
            let b = class_sum(mu, *n, variant)?;
            let product = elem_mul(&a, &b)?;
            let entries = decompose_central(&product)?;
            let x = basis_prefix(variant);
            let text = format!(
                "{x}_{lam}({n}) {x}_{mu}({n}) = {}\n",
                combination(x, &entries)
            );
            let value = json!({
                "lambda": lam,
                "mu": mu,
                "n": n,
                "variant": variant,
                "support": product.len(),
                "decomposition": entries_json(&entries),
            });
            Ok((Rendered::new(value, text).with_csv(entries_csv(&entries)), true))
        }
        Command::Constants { lam, mu, nu, n, variant } => {
            let variant = Variant::from(*variant);
            if variant == Variant::Spin {
                require_even(&[lam, mu])?;
            }
            if let Some(nu) = nu {
                if variant == Variant::Spin {
                    require_even(&[nu])?;
                }
                check_walk(common, lam, mu, *n)?;
                let c = structure_coefficient(lam, mu, nu, *n, variant)?;
                let value = json!({
                    "lambda": lam, "mu": mu, "nu": nu, "n": n, "variant": variant, "coefficient": c,
                });
                let csv = format!("nu,coefficient\n\"{}\",{c}\n", nu.key());
                return Ok((Rendered::new(value, format!("{c}\n")).with_csv(csv), true));
            }
            check_budget(common, "product", *n, PRODUCT_BUDGET)?;
            let table = structure_constants(lam, mu, *n, variant)?;
            let mut text = String::new();
            for (k, v) in &table.entries {
                text.push_str(&format!("{k}\t{v}\n"));
            }
            Ok((Rendered::new(table.to_json(), text).with_csv(table.to_csv()), true))
        }
        Command::Fit { lam, mu, nu, from, to } => {
            require_even(&[lam, mu, nu])?;
            let range = from.zip(*to).map(|(a, b)| a..=b);
            let top = match &range {
                Some(r) => *r.end(),
                None => nu.support() + (lam.support() + mu.support()).saturating_sub(nu.support()) + 2,
            };
            check_walk(common, lam, mu, top)?;
            let fit = fit_structure_poly(lam, mu, nu, range)?;
            let text = format!(
                "f = {} (binomial coefficients {:?}), held out at n = {} and {}\n",
                fit.poly,
                fit.poly.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
                fit.validated_on[0],
                fit.validated_on[1]
            );
            let mut csv = String::from("k,coefficient\n");
            for (k, c) in fit.poly.coeffs().iter().enumerate() {
                csv.push_str(&format!("{k},{c}\n"));
            }
            let value = serde_json::to_value(&fit).expect("fit serializes");
            Ok((Rendered::new(value, text).with_csv(csv), true))
        }
        Command::Graded { lam, mu, variant } => {
            let variant = Variant::from(*variant);
            let v = graded_product_variant(lam, mu, variant)?;
            let x = basis_prefix(variant);
            let text = format!("{x}_{lam} * {x}_{mu} = {}\n", combination(x, &v.coords));
            let mut value = v.to_json();
            value["variant"] = json!(variant);
            Ok((Rendered::new(value, text).with_csv(entries_csv(&v.coords)), true))
        }
        Command::Jm { r, n, top, extract, lam } => jm(common, *r, *n, *top, *extract, lam),
        Command::Verify { suite, rmax, n } => {
            if let Some(n) = n {
                check_budget(common, "generation check", *n, PRODUCT_BUDGET)?;
            }
            let opts = verify::Options {
                seed: common.seed.unwrap_or(DEFAULT_SEED),
                rmax: *rmax,
                n: *n,
            };
            let report = verify::run(*suite, &opts)?;
            let pass = report.pass;
            Ok((report.render(), pass))
        }
    }
}

fn jm(common: &Common, r: usize, n: usize, top: bool, extract: bool, lam: &[Partition]) -> Result<(Rendered, bool), Failure> {
    if !lam.is_empty() {
        check_budget(common, "targeted extraction", n, CLASS_BUDGET)?;
        let values = targeted_top_coefficients(r, n, lam)?;
        let entries: BTreeMap<Partition, i64> = lam.iter().cloned().zip(values).collect();
        let mut text = String::new();
        for (k, v) in &entries {
            text.push_str(&format!("A_{k} = {v}\n"));
        }
        let value = json!({ "r": r, "n": n, "coords": entries_json(&entries) });
        return Ok((Rendered::new(value, text).with_csv(entries_csv(&entries)), true));
    }
    check_budget(common, "Jucys-Murphy product", n, PRODUCT_BUDGET)?;
    if extract {
        let a = a_coefficients(r, n)?;
        let text = format!("e_{r}^* = {}\n", combination("d", &a.coords));
        let value = serde_json::to_value(&a).expect("coefficients serialize");
        return Ok((Rendered::new(value, text).with_csv(entries_csv(&a.coords)), true));
    }
    let e = if top { elementary_jm_top(r, n)? } else { elementary_jm(r, n)? };
    let entries = decompose_central(&e)?;
    let text = format!("{}\n", combination("d", &entries));
    let value = json!({
        "r": r,
        "n": n,
        "top": top,
        "coords": entries_json(&entries),
    });
    Ok((Rendered::new(value, text).with_csv(entries_csv(&entries)), true))
}

fn emit(rendered: &Rendered, common: &Common) -> Result<(), Failure> {
    let body = rendered.format(common.format).ok_or_else(|| Failure::usage("this command has no CSV form"))?;
    match &common.out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::usage(format!("cannot write output: {e}")))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(64) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(t) = cli.common.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(64);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(64);
        }
    }
    if let Some(cap) = cli.common.cap {
        set_support_cap(cap);
    }
    let result = run(&cli.command, &cli.common).and_then(|(rendered, pass)| {
        emit(&rendered, &cli.common)?;
        Ok(pass)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
