//! Command line front end. Every subcommand reads matroids as JSON objects
//! ({"n": ..., "bases" | "circuits" | "presentation" | "rank_table": ...}),
//! writes one JSON object to standard output, and exits 0 when a verdict was
//! computed, 1 when a cross-check found disagreements, and 2 on input or
//! usage errors. Output is byte-identical across runs for fixed inputs.

mod check;
mod io;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use matroid_core::constructions::{free_product, named, random_transversal};
use matroid_core::cyclic::cyclic_flats;
use matroid_core::fundamental::{
    check_by_method, fundamental_extension, is_fundamental, Method,
};
use matroid_core::mason::{alpha, beta};
use matroid_core::oracle::{oracle_is_transversal, oracle_is_transversal_pruned};
use matroid_core::transversal::{
    complete_presentation, delta_faces, is_transversal, maximal_presentation,
    TransversalCertificate,
};
use matroid_core::{Error as CoreError, Matroid, Subset};

use io::{emit, load, matroid_out, presentation_out, set_to_vec, sets_to_vec, Form, MatroidOut};

#[derive(Parser)]
#[command(name = "matroid", version, about = "Certificates for transversal and fundamental transversal matroids")]
struct Cli {
    /// Output layout: compact json or pretty-printed json
    #[arg(long, global = true, value_enum, default_value_t = Layout::Json)]
    format: Layout,
    /// Write the result here instead of standard output
    #[arg(long, short = 'o', global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Layout {
    Json,
    Pretty,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Antichain,
    Filter,
    Phi,
    Basis,
    Dual,
    Brylawski,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Summarize a matroid: rank, loops, coloops, and family counts
    Show { matroid: PathBuf },
    /// List the lattice of cyclic flats with ranks
    CyclicFlats { matroid: PathBuf },
    /// Beta values, keyed by subset bitmask (cyclic flats only by default)
    Beta {
        matroid: PathBuf,
        /// Emit all 2^n values instead of the cyclic flats
        #[arg(long)]
        full: bool,
    },
    /// Alpha values, keyed by subset bitmask (cyclic flats only by default)
    Alpha {
        matroid: PathBuf,
        /// Emit all 2^n values instead of the cyclic flats
        #[arg(long)]
        full: bool,
    },
    /// Decide transversality; certificate is a presentation or a negative beta witness
    IsTransversal { matroid: PathBuf },
    /// The unique maximal presentation (input must be transversal)
    MaxPresentation { matroid: PathBuf },
    /// Grow a presentation until every column complement is a cyclic flat
    CompletePresentation { matroid: PathBuf },
    /// Decide fundamentality; optionally by one named method or all six
    IsFundamental {
        matroid: PathBuf,
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
    },
    /// Column incidence of each element (input must be in presentation form)
    Faces { matroid: PathBuf },
    /// The dual matroid
    Dual { matroid: PathBuf },
    /// Restrict to the listed elements; reports the new-to-old index map
    Restrict {
        matroid: PathBuf,
        #[arg(value_delimiter = ',')]
        elements: Vec<usize>,
    },
    /// Contract the listed elements; reports the new-to-old index map
    Contract {
        matroid: PathBuf,
        #[arg(value_delimiter = ',')]
        elements: Vec<usize>,
    },
    /// Free product of two matroids, second ground set shifted up
    FreeProduct { first: PathBuf, second: PathBuf },
    /// Extend a transversal matroid to a fundamental one with fresh elements
    ExtendFundamental { matroid: PathBuf },
    /// Generate a fixture by name, e.g. "uniform(3,6)", "mk4", "random(6,3)"
    Gen {
        name: String,
        /// Seed for "random(n,r)"
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exhaustive presentation search (n <= 6), independent of the beta test
    Oracle {
        matroid: PathBuf,
        /// Column budget; defaults to the rank
        #[arg(long)]
        r_max: Option<usize>,
        /// Add the cyclic-flat meet-count cut (exact column count mode)
        #[arg(long)]
        pruned: bool,
    },
    /// Cross-validate the whole toolkit over a deterministic corpus
    Check {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Worker threads; defaults to available parallelism
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pretty = cli.format == Layout::Pretty;
    let output = cli.output.clone();
    match run(cli.cmd, pretty, output.as_deref()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn core(e: CoreError) -> anyhow::Error {
    anyhow!("{e}")
}

#[derive(Serialize)]
struct ShowOut {
    n: usize,
    rank: usize,
    loops: Vec<usize>,
    coloops: Vec<usize>,
    bases_count: usize,
    circuits_count: usize,
    cyclic_flats_count: usize,
}

#[derive(Serialize)]
struct FlatOut {
    set: Vec<usize>,
    rank: usize,
}

#[derive(Serialize)]
struct FlatsOut {
    flats: Vec<FlatOut>,
}

#[derive(Serialize)]
struct ValuesOut {
    values: BTreeMap<String, i64>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum CertificateOut {
    Presentation { presentation: Vec<Vec<usize>> },
    Witness { witness: Vec<usize>, beta: i64 },
}

#[derive(Serialize)]
struct TransversalOut {
    transversal: bool,
    certificate: CertificateOut,
}

#[derive(Serialize)]
struct ViolationOut {
    family: Vec<Vec<usize>>,
    lhs: i64,
    rhs: i64,
}

#[derive(Serialize)]
struct FundamentalOut {
    fundamental: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<ViolationOut>,
}

#[derive(Serialize)]
struct MethodOut {
    fundamental: bool,
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<ViolationOut>,
}

#[derive(Serialize)]
struct MethodsOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    fundamental: Option<bool>,
    methods: BTreeMap<&'static str, bool>,
}

#[derive(Serialize)]
struct FacesOut {
    faces: BTreeMap<String, Vec<usize>>,
}

#[derive(Serialize)]
struct ReindexOut {
    matroid: MatroidOut,
    index_map: Vec<usize>,
}

#[derive(Serialize)]
struct OracleOut {
    transversal: bool,
    r_max: usize,
    pruned: bool,
}

fn violation_out(v: &matroid_core::transversal::FamilyViolation) -> ViolationOut {
    ViolationOut { family: sets_to_vec(&v.family), lhs: v.lhs, rhs: v.rhs }
}

fn element_args(m: &Matroid, elements: &[usize]) -> Result<Subset> {
    for &e in elements {
        if e >= m.n() {
            bail!("element {e} is outside the ground set of {}", m.n());
        }
    }
    Ok(Subset::from_elements(elements.iter().copied()))
}

fn run(cmd: Cmd, pretty: bool, output: Option<&std::path::Path>) -> Result<u8> {
    match cmd {
        Cmd::Show { matroid } => {
            let m = load(&matroid)?.matroid;
            let out = ShowOut {
                n: m.n(),
                rank: m.full_rank(),
                loops: set_to_vec(m.loops()),
                coloops: set_to_vec(m.coloops()),
                bases_count: m.bases().len(),
                circuits_count: m.circuits().len(),
                cyclic_flats_count: cyclic_flats(&m).len(),
            };
            emit(&out, pretty, output)?;
            Ok(0)
        }
        Cmd::CyclicFlats { matroid } => {
            let m = load(&matroid)?.matroid;
            let z = cyclic_flats(&m);
            let flats = z
                .iter()
                .map(|(f, rank)| FlatOut { set: set_to_vec(f), rank })
                .collect();
            emit(&FlatsOut { flats }, pretty, output)?;
            Ok(0)
        }
        Cmd::Beta { matroid, full } => {
            let m = load(&matroid)?.matroid;
            let table = beta(&m);
            let mut values = BTreeMap::new();
            if full {
                for mask in 0u32..1 << m.n() {
                    values.insert(mask.to_string(), table.value(Subset(mask)));
                }
            } else {
                for &f in table.zlattice().flats() {
                    values.insert(f.bits().to_string(), table.value(f));
                }
            }
            emit(&ValuesOut { values }, pretty, output)?;
            Ok(0)
        }
        Cmd::Alpha { matroid, full } => {
            let m = load(&matroid)?.matroid;
            let table = alpha(&m).map_err(core)?;
            let mut values = BTreeMap::new();
            if full {
                for mask in 0u32..1 << m.n() {
                    values.insert(mask.to_string(), table.value(Subset(mask)));
                }
            } else {
                for &f in cyclic_flats(&m).flats() {
                    values.insert(f.bits().to_string(), table.value(f));
                }
            }
            emit(&ValuesOut { values }, pretty, output)?;
            Ok(0)
        }
        Cmd::IsTransversal { matroid } => {
            let m = load(&matroid)?.matroid;
            let v = is_transversal(&m);
            let certificate = match v.certificate {
                TransversalCertificate::Presentation(a) => CertificateOut::Presentation {
                    presentation: sets_to_vec(a.columns()),
                },
                TransversalCertificate::NegativeBeta { witness, beta } => {
                    CertificateOut::Witness { witness: set_to_vec(witness), beta }
                }
            };
            emit(&TransversalOut { transversal: v.transversal, certificate }, pretty, output)?;
            Ok(0)
        }
        Cmd::MaxPresentation { matroid } => {
            let m = load(&matroid)?.matroid;
            let a = maximal_presentation(&m).map_err(core)?;
            emit(&presentation_out(&a), pretty, output)?;
            Ok(0)
        }
        Cmd::CompletePresentation { matroid } => {
            let loaded = load(&matroid)?;
            let system = loaded
                .system
                .ok_or_else(|| anyhow!("complete-presentation needs a presentation-form input"))?;
            let done = complete_presentation(&loaded.matroid, &system).map_err(core)?;
            emit(&presentation_out(&done), pretty, output)?;
            Ok(0)
        }
        Cmd::IsFundamental { matroid, method } => {
            let m = load(&matroid)?.matroid;
            match method {
                None => {
                    let v = is_fundamental(&m).map_err(core)?;
                    let out = FundamentalOut {
                        fundamental: v.fundamental,
                        basis: v.basis.map(set_to_vec),
                        violation: v.violation.as_ref().map(violation_out),
                    };
                    emit(&out, pretty, output)?;
                    Ok(0)
                }
                Some(MethodArg::All) => {
                    let mut methods = BTreeMap::new();
                    for method in Method::ALL {
                        let got = check_by_method(&m, method).map_err(core)?;
                        methods.insert(method.name(), got.holds);
                    }
                    let agreed = methods.values().all(|&b| b) || methods.values().all(|&b| !b);
                    let out = MethodsOut {
                        fundamental: agreed.then(|| *methods.values().next().unwrap()),
                        methods,
                    };
                    emit(&out, pretty, output)?;
                    Ok(if agreed { 0 } else { 1 })
                }
                Some(arg) => {
                    let method = match arg {
                        MethodArg::Antichain => Method::Antichain,
                        MethodArg::Filter => Method::Filter,
                        MethodArg::Phi => Method::Phi,
                        MethodArg::Basis => Method::Basis,
                        MethodArg::Dual => Method::Dual,
                        MethodArg::Brylawski => Method::Brylawski,
                        MethodArg::All => unreachable!(),
                    };
                    let got = check_by_method(&m, method).map_err(core)?;
                    let out = MethodOut {
                        fundamental: got.holds,
                        method: method.name(),
                        violation: got.violation.as_ref().map(violation_out),
                    };
                    emit(&out, pretty, output)?;
                    Ok(0)
                }
            }
        }
        Cmd::Faces { matroid } => {
            let loaded = load(&matroid)?;
            let system = loaded
                .system
                .ok_or_else(|| anyhow!("faces needs a presentation-form input"))?;
            let faces = delta_faces(&system)
                .into_iter()
                .enumerate()
                .map(|(e, cols)| (e.to_string(), set_to_vec(cols)))
                .collect();
            emit(&FacesOut { faces }, pretty, output)?;
            Ok(0)
        }
        Cmd::Dual { matroid } => {
            let loaded = load(&matroid)?;
            emit(&matroid_out(&loaded.matroid.dual(), loaded.form), pretty, output)?;
            Ok(0)
        }
        Cmd::Restrict { matroid, elements } => {
            let loaded = load(&matroid)?;
            let keep = element_args(&loaded.matroid, &elements)?;
            let restricted = loaded.matroid.restrict(keep);
            let out = match &loaded.system {
                Some(s) => presentation_out(&s.restricted_to(keep)),
                None => matroid_out(&restricted, loaded.form),
            };
            emit(&ReindexOut { matroid: out, index_map: set_to_vec(keep) }, pretty, output)?;
            Ok(0)
        }
        Cmd::Contract { matroid, elements } => {
            let loaded = load(&matroid)?;
            let away = element_args(&loaded.matroid, &elements)?;
            let contracted = loaded.matroid.contract(away);
            let out = matroid_out(&contracted, loaded.form);
            let remaining = away.complement_in(loaded.matroid.n());
            emit(&ReindexOut { matroid: out, index_map: set_to_vec(remaining) }, pretty, output)?;
            Ok(0)
        }
        Cmd::FreeProduct { first, second } => {
            let a = load(&first)?;
            let b = load(&second)?;
            let p = free_product(&a.matroid, &b.matroid).map_err(core)?;
            emit(&matroid_out(&p, a.form), pretty, output)?;
            Ok(0)
        }
        Cmd::ExtendFundamental { matroid } => {
            let m = load(&matroid)?.matroid;
            let (_, system) = fundamental_extension(&m).map_err(core)?;
            emit(&presentation_out(&system), pretty, output)?;
            Ok(0)
        }
        Cmd::Gen { name, seed } => {
            let trimmed = name.trim();
            let out = if let Some(args) =
                trimmed.strip_prefix("random(").and_then(|t| t.strip_suffix(')'))
            {
                let (n, r) = args
                    .split_once(',')
                    .ok_or_else(|| anyhow!("random takes (n,r)"))?;
                let n = n.trim().parse::<usize>().map_err(|e| anyhow!("random n: {e}"))?;
                let r = r.trim().parse::<usize>().map_err(|e| anyhow!("random r: {e}"))?;
                let (system, _) = random_transversal(n, r, seed).map_err(core)?;
                presentation_out(&system)
            } else {
                matroid_out(&named(trimmed).map_err(core)?, Form::Bases)
            };
            emit(&out, pretty, output)?;
            Ok(0)
        }
        Cmd::Oracle { matroid, r_max, pruned } => {
            let m = load(&matroid)?.matroid;
            let budget = r_max.unwrap_or_else(|| m.full_rank());
            let transversal = if pruned {
                oracle_is_transversal_pruned(&m, budget).map_err(core)?
            } else {
                oracle_is_transversal(&m, budget).map_err(core)?
            };
            emit(&OracleOut { transversal, r_max: budget, pruned }, pretty, output)?;
            Ok(0)
        }
        Cmd::Check { seed, max_n, jobs } => {
            let jobs = jobs.unwrap_or_else(|| {
                std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1)
            });
            let report = check::run(seed, max_n, jobs);
            let ok = report.disagreements.is_empty();
            emit(&report, pretty, output)?;
            Ok(if ok { 0 } else { 1 })
        }
    }
}
