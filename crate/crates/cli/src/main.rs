use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sgqft::algebra::{Atom, Monomial, Poly, Rational, RationalFn};
use sgqft::applications::{self as apps, CurvePreset, EnumerationTable};
use sgqft::calculus::GraphSum;
use sgqft::checks::{run_suite, triage, Suite, KNOWN_MISPRINTS};
use sgqft::feynman::{realize_sum, realized_free_energy, recursion_solve, FeynmanContext};
use sgqft::graphs::{enumerate_keyed, enumerate_stable_with, Budget, EnumOptions};
use sgqft::oracle::wick_free_energies;

#[derive(Parser, Debug)]
#[command(name = "sgqft", version, about = "Exact calculus of stable graphs and their Feynman realizations")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Maximum number of graph classes per enumeration (overrides SGQFT_BUDGET).
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the isomorphism classes of connected stable graphs of type (g, n).
    Enumerate {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        legs: u32,
        #[arg(long, default_value_t = 1)]
        labels: u32,
        /// Only graphs all of whose vertices have genus 0.
        #[arg(long = "genus0-only")]
        genus0_only: bool,
    },
    /// The free energy F̂_{g,n} as a graph sum, with its realization.
    FreeEnergy {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        legs: u32,
        #[arg(long, default_value_t = 1)]
        labels: u32,
        /// Print only the graph sum.
        #[arg(long = "abstract")]
        abstract_only: bool,
    },
    /// The realized free energy Ŵ_g.
    Realize {
        #[arg(long)]
        genus: u32,
        #[arg(long, default_value_t = 1)]
        labels: u32,
    },
    /// Free energies of a model from its genus recursion.
    Recursion {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long)]
        gmax: u32,
    },
    /// Compare the Wick expansion with the graph sums.
    Oracle {
        #[arg(long)]
        gmax: u32,
        #[arg(long, default_value_t = 1)]
        labels: u32,
    },
    /// Coefficient tables a, b and lambda of the counting models (CSV in table format).
    Tables {
        #[arg(long, value_enum)]
        model: CountModel,
        #[arg(long)]
        gmax: u32,
    },
    /// Run the acceptance checks.
    Check {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        /// Show passing checks as well.
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Model {
    Generic,
    #[value(name = "1d")]
    OneD,
    Airy,
    Catalan,
    StableCount,
    GraphCount,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CountModel {
    StableCount,
    GraphCount,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::parse(s).ok_or_else(|| "expected one of all, graphs, operators, realization, oracle, applications".into())
}

/// What a command produced: its JSON form, its table form, and whether
/// the verification it ran (if any) succeeded.
struct Output {
    json: Value,
    table: String,
    verified: bool,
}

impl Output {
    fn new(json: Value, table: String) -> Output {
        Output { json, table, verified: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(b) = cli.budget {
        // Read by every enumeration in the library through Budget::from_env.
        std::env::set_var("SGQFT_BUDGET", b.to_string());
    }
    match run(&cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable")),
                Format::Table => print!("{}", out.table),
            }
            if out.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}

fn run(cmd: &Command) -> sgqft::Result<Output> {
    match *cmd {
        Command::Enumerate { genus, legs, labels, genus0_only } => enumerate(genus, legs, labels, genus0_only),
        Command::FreeEnergy { genus, legs, labels, abstract_only } => free_energy(genus, legs, labels, abstract_only),
        Command::Realize { genus, labels } => realize(genus, labels),
        Command::Recursion { model, gmax } => recursion(model, gmax),
        Command::Oracle { gmax, labels } => oracle(gmax, labels),
        Command::Tables { model, gmax } => tables(model, gmax),
        Command::Check { suite, verbose } => check(suite, verbose),
    }
}

fn enumerate(g: u32, n: u32, labels: u32, genus0_only: bool) -> sgqft::Result<Output> {
    let opts = EnumOptions { n_labels: labels, genus_zero_only: genus0_only, connected: true };
    let classes = enumerate_stable_with(g, n, opts, &Budget::from_env())?;
    let mut records = Vec::new();
    let mut table = format!("{:>5}  {:>8}  {:>10}  graph\n", "index", "|Aut|", "1/|Aut|");
    for (i, (graph, aut)) in classes.iter().enumerate() {
        let coef = Rational::new(1.into(), (*aut).into());
        let gj = graph.to_json();
        table.push_str(&format!("{:>5}  {:>8}  {:>10}  {}\n", i, aut, coef, gj));
        records.push(json!({
            "index": i,
            "automorphisms": aut.to_string(),
            "coefficient": coef.to_string(),
            "graph": gj,
        }));
    }
    table.push_str(&format!("{} classes\n", classes.len()));
    Ok(Output::new(Value::Array(records), table))
}

fn free_energy(g: u32, n: u32, labels: u32, abstract_only: bool) -> sgqft::Result<Output> {
    let opts = EnumOptions { n_labels: labels, ..EnumOptions::default() };
    let mut sum = GraphSum::zero();
    for (graph, aut) in enumerate_keyed(g, n, opts, None, &Budget::from_env())?.into_values() {
        sum.add_graph(graph, Rational::new(1.into(), aut.into()))?;
    }
    let mut table = String::new();
    for (_, graph, c) in sum.iter() {
        table.push_str(&format!("{:>10}  {}\n", c.to_string(), graph.to_json()));
    }
    let total: Rational = sum.coefficients().into_iter().sum();
    table.push_str(&format!("{} terms, coefficient sum {}\n", sum.len(), total));
    let mut json = json!({
        "genus": g,
        "legs": n,
        "labels": labels,
        "terms": sum.to_json(),
        "coefficientSum": total.to_string(),
    });
    if !abstract_only {
        let realized = realize_sum(&sum, &FeynmanContext::new(labels)?)?;
        table.push_str(&format!("realized: {}\n", realized));
        json["realized"] = json!(realized.to_string());
    }
    Ok(Output::new(json, table))
}

fn realize(g: u32, labels: u32) -> sgqft::Result<Output> {
    let p = realized_free_energy(g, &FeynmanContext::new(labels)?)?;
    let table = format!("W_{} = {}\n", g, p);
    Ok(Output::new(json!({"genus": g, "labels": labels, "polynomial": p.to_string()}), table))
}

fn poly_rows(model: &str, parts: impl Iterator<Item = (u32, Poly)>) -> Output {
    let mut rows = Vec::new();
    let mut table = String::new();
    for (g, p) in parts {
        table.push_str(&format!("F_{} = {}\n", g, p));
        rows.push(json!({"g": g, "value": p.to_string()}));
    }
    Output::new(json!({"model": model, "free_energies": rows}), table)
}

/// (coefficient, k) when f is q c^-k.
fn c_monomial(f: &RationalFn) -> Option<(Rational, i32)> {
    let q = f.num().as_constant()?;
    let (m, lead) = f.den().leading()?;
    if f.den().len() != 1 || lead != &Rational::from_integer(1.into()) {
        return None;
    }
    let k = m.exponent(&Atom::CoordC);
    (m == &Monomial::power(Atom::CoordC, k)).then_some((q, k))
}

fn recursion(model: Model, g_max: u32) -> sgqft::Result<Output> {
    match model {
        Model::Generic => {
            let f = recursion_solve(g_max, &FeynmanContext::new(1)?)?;
            Ok(poly_rows("generic", f.iter().map(|(g, p)| (g, p.clone()))))
        }
        Model::OneD => Ok(poly_rows("1d", apps::one_d_recursion(g_max)?.iter().map(|(g, p)| (g, p.clone())))),
        Model::StableCount => {
            Ok(poly_rows("stable-count", apps::stable_count_recursion(g_max)?.iter().map(|(g, p)| (g, p.clone()))))
        }
        Model::GraphCount => {
            let lam = apps::lambda_recursion_solve(g_max)?;
            let kappa = Atom::scalar_kappa();
            let parts = lam.into_iter().map(|(g, row)| {
                let mut p = Poly::zero();
                for (l, c) in row.into_iter().enumerate() {
                    p.add_term(Monomial::power(kappa.clone(), l as i32), c);
                }
                (g, p)
            });
            Ok(poly_rows("graph-count", parts))
        }
        Model::Airy | Model::Catalan => {
            let p = if model == Model::Airy { CurvePreset::Airy } else { CurvePreset::Catalan };
            curve_rows(p, &apps::curve_free_energies(p, g_max)?)
        }
    }
}

fn curve_rows(p: CurvePreset, fs: &BTreeMap<u32, RationalFn>) -> sgqft::Result<Output> {
    let mut rows = Vec::new();
    let mut table = String::new();
    let monomial = fs.values().all(|f| c_monomial(f).is_some());
    if monomial {
        table.push_str(&format!("{:>3}  {:>12}  {:>6}\n", "g", "coefficient", "c^-k"));
    }
    for (g, f) in fs {
        let mut row = json!({"g": g, "value": f.to_string()});
        match c_monomial(f) {
            Some((q, k)) if monomial => {
                table.push_str(&format!("{:>3}  {:>12}  {:>6}\n", g, q.to_string(), k));
                row["coefficient"] = json!(q.to_string());
                row["c_exponent"] = json!(k);
            }
            _ => table.push_str(&format!("F_{} = {}\n", g, f)),
        }
        rows.push(row);
    }
    Ok(Output::new(json!({"model": p.name(), "free_energies": rows}), table))
}

fn oracle(g_max: u32, labels: u32) -> sgqft::Result<Output> {
    let ctx = FeynmanContext::new(labels)?;
    let wick = wick_free_energies(g_max, labels)?;
    let mut rows = Vec::new();
    let mut table = String::new();
    let mut all = true;
    for g in 2..=g_max {
        let graphs = realized_free_energy(g, &ctx)?;
        let agree = wick.get(g) == Some(&graphs);
        all &= agree;
        table.push_str(&format!(
            "g = {}: Wick expansion {} the graph sum\n",
            g,
            if agree { "equals" } else { "DIFFERS FROM" }
        ));
        rows.push(json!({"g": g, "agree": agree, "graph_sum": graphs.to_string()}));
    }
    let mut out = Output::new(json!({"labels": labels, "genera": rows, "agree": all}), table);
    out.verified = all;
    Ok(out)
}

fn tables(model: CountModel, g_max: u32) -> sgqft::Result<Output> {
    let t = match model {
        CountModel::StableCount => EnumerationTable::stable_count(g_max)?,
        CountModel::GraphCount => EnumerationTable::graph_count(g_max)?,
    };
    Ok(Output::new(t.to_json(), t.to_csv()))
}

fn check(suite: Suite, verbose: bool) -> sgqft::Result<Output> {
    let reports = run_suite(suite);
    let t = triage(&reports);
    let mut table = String::new();
    for r in &reports {
        table.push_str(&r.render(verbose));
        table.push('\n');
    }
    let known: Vec<Value> = t
        .known
        .iter()
        .map(|&i| {
            let (id, label, why) = KNOWN_MISPRINTS[i];
            table.push_str(&format!("known failure, criterion {}: {} ({})\n", id, label.trim(), why));
            json!({"criterion": id, "check": label.trim(), "reason": why})
        })
        .collect();
    for u in &t.unexpected {
        table.push_str(&format!("unexpected: {}\n", u));
    }
    let json = json!({
        "criteria": serde_json::to_value(&reports).expect("serializable"),
        "known_failures": known,
        "unexpected": t.unexpected,
        "ok": t.ok(),
    });
    let mut out = Output::new(json, table);
    out.verified = t.ok();
    Ok(out)
}
