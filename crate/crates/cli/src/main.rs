use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use zsubmod_core::module::{submodule_generated, ConcreteModule, ModuleSpec, SubId, DEFAULT_BOUND};
use zsubmod_core::parse::{parse_elements, parse_instance, parse_instance_file, parse_module, parse_ring};
use zsubmod_core::spectrum::{Hull, Spectrum};
use zsubmod_core::verify::{
    all_passed, default_corpus, reports_to_csv, reports_to_json, run_checks, select_checks, CorpusParams,
};
use zsubmod_core::zsub::{z0_closure, Classifier};

/// Submodule lattices, prime spectra and z°-submodules of finite modules
/// over products of Z_n.
#[derive(Parser)]
#[command(name = "zsubmod", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every submodule with its order and generators.
    Lattice(InstanceArgs),
    /// Prime and minimal prime submodules, maximal submodules, reducedness.
    Spectrum(InstanceArgs),
    /// Classify every submodule (prime, z, strongly z, z°, ...).
    Classify(InstanceArgs),
    /// Iterate the z°-closure from the submodule spanned by `-g`.
    Closure {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Generators, e.g. `-g 2` or `-g "(1,0) (0,1)"`; repeatable.
        #[arg(short, long = "generators", num_args = 1)]
        generators: Vec<String>,
    },
    /// Run the theorem checks over the generated corpus.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct InstanceArgs {
    /// Ring, e.g. `Z6` or `Z4xZ6`.
    #[arg(short, long)]
    ring: Option<String>,
    /// Module, e.g. `Z2+Z3`, `Z4;Z3`, or the combined `Z6|Z6`. Defaults to
    /// the ring itself.
    #[arg(short, long)]
    module: Option<String>,
    /// TOML instance file instead of `-r/-m`.
    #[arg(short, long, conflicts_with_all = ["ring", "module"])]
    instance: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Largest module order to enumerate.
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    bound: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest n for single rings Z_n.
    #[arg(long, default_value_t = 30)]
    nmax: u32,
    /// Largest factor for product rings Z_m x Z_n; 0 disables them.
    #[arg(long, default_value_t = 12)]
    product_max: u32,
    /// Largest product-ring module order.
    #[arg(long, default_value_t = 1024)]
    order_cap: usize,
    /// Comma-separated check ids, e.g. `T6,D1`.
    #[arg(long, value_delimiter = ',')]
    checks: Option<Vec<String>>,
    #[arg(long, default_value_t = 4)]
    jobs: usize,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    bound: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let (text, code) = match cli.command {
        Command::Lattice(a) => (lattice(&a)?, 0),
        Command::Spectrum(a) => (spectrum(&a)?, 0),
        Command::Classify(a) => (classify(&a)?, 0),
        Command::Closure { instance, generators } => (closure(&instance, &generators)?, 0),
        Command::Verify(a) => verify(&a)?,
    };
    print!("{text}");
    Ok(code)
}

fn load(a: &InstanceArgs) -> Result<ModuleSpec> {
    if let Some(path) = &a.instance {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let file = parse_instance_file(&text).with_context(|| path.display().to_string())?;
        return Ok(file.module);
    }
    match (&a.ring, &a.module) {
        (_, Some(m)) if m.contains('|') => {
            let module = parse_instance(m).context("--module")?;
            if let Some(r) = &a.ring {
                if &parse_ring(r).context("--ring")? != module.ring() {
                    bail!("--ring {r} disagrees with --module {m}");
                }
            }
            Ok(module)
        }
        (Some(r), m) => {
            let ring = parse_ring(r).context("--ring")?;
            match m {
                Some(m) => Ok(parse_module(&ring, m).context("--module")?),
                None => Ok(ModuleSpec::regular(ring)),
            }
        }
        (None, _) => {
            bail!("give --ring (with an optional --module), a combined `RING|MODULE`, or --instance")
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("value serializes");
    s.push('\n');
    s
}

/// `<g1,g2>` by generators, `0` for the zero submodule.
fn span(m: &ModuleSpec, gens: &[usize]) -> String {
    if gens.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = gens.iter().map(|&g| m.residues(g).to_string()).collect();
    format!("<{}>", parts.join(","))
}

fn sub_text(s: &Spectrum<'_, ModuleSpec>, id: SubId) -> String {
    span(s.module(), s.lattice().get(id).generators())
}

fn hull_text(s: &Spectrum<'_, ModuleSpec>, h: Hull) -> String {
    match h {
        Hull::Whole => "M".into(),
        Hull::Sub(id) => sub_text(s, id),
    }
}

fn lattice(a: &InstanceArgs) -> Result<String> {
    let m = load(a)?;
    let s = Spectrum::new(&m, a.bound)?;
    let lat = s.lattice();
    Ok(match a.format {
        Format::Json => {
            let rows: Vec<Value> = lat
                .submodules()
                .iter()
                .map(|n| {
                    json!({
                        "order": n.len(),
                        "generators": n.generators().iter().map(|&g| m.residues(g)).collect::<Vec<_>>(),
                        "elements": n.residues(&m),
                    })
                })
                .collect();
            pretty(&json!({ "module": m.to_string(), "submodules": rows }))
        }
        Format::Csv => {
            let mut out = String::from("index,order,generators\n");
            for (i, n) in lat.submodules().iter().enumerate() {
                let _ = writeln!(out, "{i},{},\"{}\"", n.len(), span(&m, n.generators()));
            }
            out
        }
        Format::Plain => {
            let mut out = format!("{m}: {} submodules\n", lat.len());
            for (i, n) in lat.submodules().iter().enumerate() {
                let _ = writeln!(out, "{i:>4}  order {:>4}  {}", n.len(), span(&m, n.generators()));
            }
            out
        }
    })
}

fn spectrum(a: &InstanceArgs) -> Result<String> {
    let m = load(a)?;
    let s = Spectrum::new(&m, a.bound)?;
    let report = s.report();
    let certificate = s.hausdorff_certificate().ok();
    Ok(match a.format {
        Format::Json => {
            let mut v = serde_json::to_value(&report)?;
            v["module"] = json!(m.to_string());
            v["certificate"] = serde_json::to_value(&certificate)?;
            pretty(&v)
        }
        Format::Csv => {
            let mut out = String::from("submodule,colon,minimal,maximal\n");
            for &p in s.spec() {
                let _ = writeln!(
                    out,
                    "\"{}\",{},{},{}",
                    sub_text(&s, p),
                    s.lattice().colon(p),
                    s.is_min_prime(p),
                    s.maximal_submodules().contains(&p)
                );
            }
            out
        }
        Format::Plain => {
            let list = |ids: &[SubId]| ids.iter().map(|&p| sub_text(&s, p)).collect::<Vec<_>>().join(" ");
            let mut out = format!("{m}\n");
            let _ = writeln!(out, "spec:        {}", list(s.spec()));
            let _ = writeln!(out, "min primes:  {}", list(s.min_primes()));
            let _ = writeln!(out, "maximal:     {}", list(s.maximal_submodules()));
            let _ = writeln!(
                out,
                "Rad(0):      {}",
                hull_text(&s, s.jacobson_radical(s.lattice().bottom()))
            );
            let _ = writeln!(out, "reduced:     {}", s.is_reduced());
            if let Some(cert) = certificate {
                for pair in cert.pairs {
                    let _ = writeln!(
                        out,
                        "separated:   {} / {} by x = {}",
                        sub_text(&s, s.min_primes()[pair.first]),
                        sub_text(&s, s.min_primes()[pair.second]),
                        m.residues(pair.witness)
                    );
                }
            }
            out
        }
    })
}

fn classify(a: &InstanceArgs) -> Result<String> {
    let m = load(a)?;
    let s = Spectrum::new(&m, a.bound)?;
    let c = Classifier::new(&s);
    Ok(match a.format {
        Format::Json => {
            let mut v = serde_json::to_value(c.report())?;
            v["module"] = json!(m.to_string());
            pretty(&v)
        }
        Format::Csv | Format::Plain => {
            let csv = a.format == Format::Csv;
            let mut out = if csv {
                String::from("submodule,order,colon,proper,prime,minimal_prime,maximal,z,strongly_z,z0\n")
            } else {
                format!(
                    "{m}\n{:<16} {:>5} {:<10} proper prime minprime maximal z  strongly_z z0\n",
                    "submodule", "order", "colon"
                )
            };
            let mark = |b: bool| if b { "y" } else { "." };
            for n in s.lattice().ids() {
                let f = c.flags(n);
                let name = sub_text(&s, n);
                let colon = s.lattice().colon(n).to_string();
                if csv {
                    let _ = writeln!(
                        out,
                        "\"{name}\",{},{colon},{},{},{},{},{},{},{}",
                        s.lattice().get(n).len(),
                        f.proper,
                        f.prime,
                        f.minimal_prime,
                        f.maximal,
                        f.z,
                        f.strongly_z,
                        f.z0
                    );
                } else {
                    let _ = writeln!(
                        out,
                        "{name:<16} {:>5} {colon:<10} {:<6} {:<5} {:<8} {:<7} {:<2} {:<10} {}",
                        s.lattice().get(n).len(),
                        mark(f.proper),
                        mark(f.prime),
                        mark(f.minimal_prime),
                        mark(f.maximal),
                        mark(f.z),
                        mark(f.strongly_z),
                        mark(f.z0)
                    );
                }
            }
            out
        }
    })
}

fn closure(a: &InstanceArgs, generators: &[String]) -> Result<String> {
    let m = load(a)?;
    let s = Spectrum::new(&m, a.bound)?;
    let mut gens = Vec::new();
    for text in generators {
        for e in parse_elements(text).context("--generators")? {
            gens.push(m.index_of(&e).with_context(|| format!("generator {e}"))?);
        }
    }
    let n = s
        .lattice()
        .id_of(&submodule_generated(&m, &gens)?)
        .expect("generated submodule is in the lattice");
    let trace = z0_closure(&s, n);
    let smallest = Classifier::new(&s).smallest_z0_containing(n);
    Ok(match a.format {
        Format::Json => {
            let mut v = serde_json::to_value(trace.report(&s))?;
            v["module"] = json!(m.to_string());
            pretty(&v)
        }
        Format::Csv => {
            let mut out = String::from("step,submodule,order\n");
            for (i, &id) in trace.chain.iter().enumerate() {
                let _ = writeln!(out, "{i},\"{}\",{}", sub_text(&s, id), s.lattice().get(id).len());
            }
            out
        }
        Format::Plain => {
            let mut out = format!("{m}\n");
            for (i, &id) in trace.chain.iter().enumerate() {
                let _ = writeln!(out, "N_{i} = {}", sub_text(&s, id));
            }
            let _ = writeln!(
                out,
                "fixpoint {} after {} step(s), {}",
                sub_text(&s, trace.fixpoint),
                trace.steps,
                if trace.proper { "proper" } else { "not proper" }
            );
            let _ = writeln!(
                out,
                "smallest z° containing N: {}",
                smallest.map_or("none".into(), |id| sub_text(&s, id))
            );
            out
        }
    })
}

fn verify(a: &VerifyArgs) -> Result<(String, u8)> {
    let params = CorpusParams {
        nmax: a.nmax,
        product_max: a.product_max,
        order_cap: a.order_cap,
        ..CorpusParams::default()
    };
    let corpus = default_corpus(&params)?;
    let checks = select_checks(a.checks.as_deref())?;
    let reports = run_checks(&corpus, &checks, a.jobs, a.bound)?;
    let json = reports_to_json(&reports);
    if let Some(path) = &a.report {
        std::fs::write(path, &json).with_context(|| format!("writing {}", path.display()))?;
    }
    let text = match a.format {
        Format::Json => json,
        Format::Csv => reports_to_csv(&reports),
        Format::Plain => {
            let mut out = format!("{} instances\n", corpus.len());
            for r in &reports {
                let status = if !r.passed() {
                    "FAIL"
                } else if r.vacuous {
                    "VACUOUS"
                } else {
                    "ok"
                };
                let _ = writeln!(
                    out,
                    "{:<4} {:<8} satisfied {:>4}/{:<4} cases {:>7}  counterexamples {}  logged {}  skipped {}",
                    r.check_id,
                    status,
                    r.satisfied,
                    r.tested,
                    r.cases,
                    r.counterexamples.len(),
                    r.logged.len(),
                    r.skipped.len()
                );
                for f in &r.counterexamples {
                    let _ = writeln!(out, "     {} ({}x): {}", f.instance, f.occurrences, f.witness);
                }
            }
            out
        }
    };
    Ok((text, if all_passed(&reports) { 0 } else { 1 }))
}
