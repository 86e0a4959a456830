use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use multichain_poset::families::{boolean_lattice, chain, hypercube_face_lattice, hypercube_multichain_count, ideal_lattice};
use multichain_poset::incidence::{count_multichains, mobius_bottom_top, zeta_polynomial_eval};
use multichain_poset::io::{parse_labels, parse_poset, to_dot, write_labels, write_poset};
use multichain_poset::isomorphism::{are_isomorphic_with_budget, IsoWitness, DEFAULT_NODE_BUDGET};
use multichain_poset::lattice::{self, is_lattice};
use multichain_poset::multichain::multichain_poset;
use multichain_poset::shellability::{is_el_labeling, product_labeling, EdgeLabeling};
use multichain_poset::{set_element_cap, Poset, PosetError};

/// Finite posets and their posets of m-multichains.
#[derive(Parser)]
#[command(name = "mcposet", version)]
struct Cli {
    /// Largest poset any command may construct.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    cap: usize,
    /// Backtracking node budget for `iso`.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    iso_budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a standard family as a .poset file.
    Family {
        #[command(subcommand)]
        kind: Family,
        /// Write to this file instead of standard output.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Build P^(m); writes OUTPUT and a sidecar OUTPUT.decode, prints the element count.
    Multichain {
        file: PathBuf,
        m: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Test a property; without --property, print every property.
    Check {
        file: PathBuf,
        #[arg(long)]
        property: Option<Property>,
        /// Edge labeling for --property=el.
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Evaluate the zeta polynomial Z(P, t); t may be negative.
    Zeta {
        file: PathBuf,
        #[arg(allow_negative_numbers = true)]
        t: i64,
    },
    /// Print μ(0̂, 1̂).
    Mobius { file: PathBuf },
    /// Count m-multichains via the zeta polynomial.
    Count { file: PathBuf, m: usize },
    /// Closed-form count of m-multichains of the face lattice of the n-cube.
    HypercubeCount { n: u32, m: u32 },
    /// Decide isomorphism; prints the witness as space-separated i->j pairs.
    Iso { first: PathBuf, second: PathBuf },
    /// Emit the product labeling of P^(m), indexed like `multichain` output.
    EllabelProduct {
        file: PathBuf,
        labels: PathBuf,
        m: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Hasse diagram in DOT.
    ExportDot {
        file: PathBuf,
        #[arg(long)]
        labels: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// The chain with K elements.
    Chain { k: usize },
    /// Subsets of [N] under inclusion.
    Boolean { n: usize },
    /// Face lattice of the N-cube with the empty face.
    Hypercube { n: usize },
    /// Order ideals of the poset in FILE.
    Ideals { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Graded,
    Lattice,
    Distributive,
    Modular,
    Jsd,
    Msd,
    Lsm,
    Usm,
    El,
}

impl Property {
    const ALL: [Property; 8] = [
        Property::Graded,
        Property::Lattice,
        Property::Distributive,
        Property::Modular,
        Property::Jsd,
        Property::Msd,
        Property::Lsm,
        Property::Usm,
    ];

    fn name(self) -> &'static str {
        match self {
            Property::Graded => "graded",
            Property::Lattice => "lattice",
            Property::Distributive => "distributive",
            Property::Modular => "modular",
            Property::Jsd => "jsd",
            Property::Msd => "msd",
            Property::Lsm => "lsm",
            Property::Usm => "usm",
            Property::El => "el",
        }
    }
}

/// What a command reports: a verdict maps to exit 0 or 1.
enum Outcome {
    Done,
    Verdict(bool),
}

#[derive(Debug)]
enum Failure {
    Poset(PosetError),
    Io(String),
    Usage(String),
}

impl From<PosetError> for Failure {
    fn from(e: PosetError) -> Self {
        Failure::Poset(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Poset(PosetError::Timeout { budget }) => {
                write!(f, "undecided: search budget of {budget} nodes exhausted")
            }
            Failure::Poset(e) => write!(f, "{e}"),
            Failure::Io(m) | Failure::Usage(m) => f.write_str(m),
        }
    }
}

type Run = Result<Outcome, Failure>;

/// A parsed input file; `stored` maps file indices to internal ones.
struct Input {
    poset: Poset,
    stored: Vec<usize>,
    file_index: Vec<usize>,
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, content: &str) -> Result<(), Failure> {
    fs::write(path, content).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn emit(output: Option<&Path>, content: &str) -> Result<(), Failure> {
    match output {
        Some(path) => write(path, content),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<Input, Failure> {
    let parsed = parse_poset(&read(path)?).map_err(|e| match e {
        PosetError::Parse { line, message } => Failure::Io(format!("{}:{line}: {message}", path.display())),
        other => Failure::Poset(other),
    })?;
    let mut file_index = vec![0; parsed.index_map.len()];
    for (file, &stored) in parsed.index_map.iter().enumerate() {
        file_index[stored] = file;
    }
    let reordered = file_index.iter().enumerate().any(|(i, &f)| i != f);
    let poset = if reordered && parsed.poset.labels().is_none() {
        // keep the user's numbering visible in every label-based output
        parsed.poset.with_labels(file_index.iter().map(|f| f.to_string()).collect())?
    } else {
        parsed.poset
    };
    Ok(Input {
        poset,
        stored: parsed.index_map,
        file_index,
    })
}

fn load_labels(path: &Path, input: &Input) -> Result<EdgeLabeling, Failure> {
    parse_labels(&read(path)?, &input.stored).map_err(|e| match e {
        PosetError::Parse { line, message } => Failure::Io(format!("{}:{line}: {message}", path.display())),
        other => Failure::Poset(other),
    })
}

fn property(p: &Poset, which: Property) -> bool {
    let flag = |r: multichain_poset::Result<bool>| r.unwrap_or(false);
    match which {
        Property::Graded => p.is_graded(),
        Property::Lattice => is_lattice(p),
        Property::Distributive => flag(lattice::is_distributive(p)),
        Property::Modular => flag(lattice::is_modular(p)),
        Property::Jsd => flag(lattice::is_join_semidistributive(p)),
        Property::Msd => flag(lattice::is_meet_semidistributive(p)),
        Property::Lsm => flag(lattice::is_lower_semimodular(p)),
        Property::Usm => flag(lattice::is_upper_semimodular(p)),
        Property::El => unreachable!("el needs a labeling"),
    }
}

fn run(cli: Cli) -> Run {
    set_element_cap(cli.cap);
    match cli.command {
        Command::Family { kind, output } => {
            let poset = match kind {
                Family::Chain { k } => chain(k)?,
                Family::Boolean { n } => boolean_lattice(n)?,
                Family::Hypercube { n } => hypercube_face_lattice(n)?,
                Family::Ideals { file } => ideal_lattice(&load(&file)?.poset)?.poset,
            };
            emit(output.as_deref(), &write_poset(&poset))?;
            Ok(Outcome::Done)
        }
        Command::Multichain { file, m, output } => {
            if m == 0 {
                return Err(PosetError::BadMultiplicity.into());
            }
            let input = load(&file)?;
            let mp = multichain_poset(&input.poset, m)?;
            let mut decode = String::new();
            for (i, t) in mp.tuples().iter().enumerate() {
                let parts: Vec<_> = t.iter().map(|&e| input.file_index[e].to_string()).collect();
                decode.push_str(&format!("{i} {}\n", parts.join(",")));
            }
            write(&output, &write_poset(&mp.poset))?;
            write(&output.with_extension("decode"), &decode)?;
            println!("{}", mp.len());
            Ok(Outcome::Done)
        }
        Command::Check { file, property: which, labels } => {
            let input = load(&file)?;
            match (which, labels) {
                (Some(Property::El), Some(labels)) => {
                    let labeling = load_labels(&labels, &input)?;
                    let verdict = is_el_labeling(&input.poset, &labeling)?;
                    match &verdict.failure {
                        None => println!("true"),
                        Some(f) => {
                            let (a, b) = f.interval;
                            println!("false");
                            eprintln!(
                                "{} on [{}, {}]",
                                f.kind,
                                input.poset.display_label(a),
                                input.poset.display_label(b)
                            );
                        }
                    }
                    Ok(Outcome::Verdict(verdict.holds()))
                }
                (Some(Property::El), None) => Err(Failure::Usage("--property=el requires --labels".into())),
                (_, Some(_)) => Err(Failure::Usage("--labels is only used with --property=el".into())),
                (Some(which), None) => {
                    let holds = property(&input.poset, which);
                    println!("{holds}");
                    Ok(Outcome::Verdict(holds))
                }
                (None, None) => {
                    let parts: Vec<String> = Property::ALL
                        .iter()
                        .map(|&w| format!("{}={}", w.name(), property(&input.poset, w)))
                        .collect();
                    println!("{}", parts.join(" "));
                    Ok(Outcome::Done)
                }
            }
        }
        Command::Zeta { file, t } => {
            println!("{}", zeta_polynomial_eval(&load(&file)?.poset, t)?);
            Ok(Outcome::Done)
        }
        Command::Mobius { file } => {
            println!("{}", mobius_bottom_top(&load(&file)?.poset)?);
            Ok(Outcome::Done)
        }
        Command::Count { file, m } => {
            if m == 0 {
                return Err(PosetError::BadMultiplicity.into());
            }
            println!("{}", count_multichains(&load(&file)?.poset, m)?);
            Ok(Outcome::Done)
        }
        Command::HypercubeCount { n, m } => {
            if n == 0 || m == 0 {
                return Err(Failure::Usage("n and m must both be at least 1".into()));
            }
            println!("{}", hypercube_multichain_count(n, m));
            Ok(Outcome::Done)
        }
        Command::Iso { first, second } => {
            let (a, b) = (load(&first)?, load(&second)?);
            match are_isomorphic_with_budget(&a.poset, &b.poset, cli.iso_budget)? {
                IsoWitness::Isomorphic(map) => {
                    let pairs: Vec<String> = (0..map.len())
                        .map(|i| format!("{i}->{}", b.file_index[map[a.stored[i]]]))
                        .collect();
                    println!("{}", pairs.join(" "));
                    Ok(Outcome::Verdict(true))
                }
                IsoWitness::Refused(reason) => {
                    println!("not isomorphic: {reason}");
                    Ok(Outcome::Verdict(false))
                }
            }
        }
        Command::EllabelProduct { file, labels, m, output } => {
            if m == 0 {
                return Err(PosetError::BadMultiplicity.into());
            }
            let input = load(&file)?;
            let base = load_labels(&labels, &input)?;
            base.check_total(&input.poset)?;
            let mp = multichain_poset(&input.poset, m)?;
            let product = product_labeling(&mp, &base)?;
            emit(output.as_deref(), &write_labels(&product))?;
            Ok(Outcome::Done)
        }
        Command::ExportDot { file, labels, output } => {
            let input = load(&file)?;
            let labeling = labels.map(|l| load_labels(&l, &input)).transpose()?;
            emit(output.as_deref(), &to_dot(&input.poset, labeling.as_ref()))?;
            Ok(Outcome::Done)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Done) | Ok(Outcome::Verdict(true)) => ExitCode::SUCCESS,
        Ok(Outcome::Verdict(false)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
