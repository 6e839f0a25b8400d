use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dyck_cluster::*;
use serde::Serialize;

/// Dyck-path categories, snake graphs and type-A cluster variables.
#[derive(Parser)]
#[command(name = "dyckc", version)]
struct Cli {
    /// Largest `n` accepted by any subcommand.
    #[arg(long, global = true, env = "DYCKC_MAX_N", default_value_t = DEFAULT_ENUMERATION_BOUND)]
    max_n: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ChainArgs {
    /// Half-length of the Dyck paths; the quiver has `n - 1` vertices.
    #[arg(long)]
    n: usize,

    /// Admissible subchain, e.g. "j1,i2,j4" (`i` = sink, `j` = source).
    #[arg(long)]
    chain: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Dyck,
    Mutation,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Dyck paths of half-length N, optionally only those with K peaks.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        peaks: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Unitary shifts of a path, or its elementary shifts when a chain is given.
    Shifts {
        #[arg(long)]
        path: String,
        #[arg(long)]
        chain: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Prints 1 when Hom(FROM, TO) is nonzero, else 0.
    Hom {
        #[command(flatten)]
        chain: ChainArgs,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Auslander-Reiten quiver of the category on S.
    ArQuiver {
        #[command(flatten)]
        chain: ChainArgs,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Nakayama algebra of a Kupisch series such as "3,3,2,2,1".
    Nakayama {
        #[arg(long)]
        kupisch: String,
        #[arg(long, conflicts_with_all = ["json", "dyck"])]
        dot: bool,
        #[arg(long, conflicts_with = "dyck")]
        json: bool,
        #[arg(long)]
        dyck: bool,
    },
    /// Snake graph of a subchain.
    Snake {
        #[command(flatten)]
        chain: ChainArgs,
        #[arg(long)]
        json: bool,
    },
    /// Perfect matchings of the snake graph.
    Matchings {
        #[command(flatten)]
        chain: ChainArgs,
        /// Only print the count.
        #[arg(long)]
        count: bool,
        #[arg(long)]
        json: bool,
    },
    /// Words of the matchings, or of those restricted to a path.
    Words {
        #[command(flatten)]
        chain: ChainArgs,
        #[arg(long)]
        path: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Cluster variables by the Dyck-path formula, by mutation, or both compared.
    ClusterVars {
        #[command(flatten)]
        chain: ChainArgs,
        #[arg(long, value_enum, default_value = "dyck")]
        method: Method,
        /// Only the variable of this member of S (Dyck method).
        #[arg(long)]
        path: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Compares both engines on every subchain with 3 <= n <= NMAX.
    Verify {
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value_t = 3)]
        nmin: usize,
        #[arg(long)]
        json: bool,
    },
}

/// Failure classes, one exit code each; usage errors exit with 2 from clap.
enum Failure {
    Mismatch(String),
    Internal(String),
    Chain(String),
    Range(String),
    Format(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Internal(_) => 3,
            Failure::Chain(_) => 4,
            Failure::Range(_) => 5,
            Failure::Format(_) => 6,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Mismatch(m)
            | Failure::Internal(m)
            | Failure::Chain(m)
            | Failure::Range(m)
            | Failure::Format(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::InvalidSubchain(_) => Failure::Chain(msg),
            Error::SizeLimit { .. } | Error::IndexOutOfRange { .. } => Failure::Range(msg),
            Error::InvalidInput(_) | Error::InvalidKupisch(_) | Error::Parse(_) | Error::InvalidShift { .. } => {
                Failure::Format(msg)
            }
            Error::NvarsMismatch { .. } | Error::Divisibility { .. } | Error::Internal(_) => Failure::Internal(msg),
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

fn check_n(n: usize, min: usize, max: usize) -> std::result::Result<(), Failure> {
    if n < min || n > max {
        return Err(Failure::Range(format!("n = {n} outside {min}..={max}")));
    }
    Ok(())
}

fn parse_chain(args: &ChainArgs, min_n: usize, max_n: usize) -> std::result::Result<AdmissibleSubchain, Failure> {
    check_n(args.n, min_n, max_n)?;
    AdmissibleSubchain::parse(args.n, &args.chain).map_err(|e| Failure::Chain(e.to_string()))
}

fn parse_dyck(text: &str) -> std::result::Result<DyckPath, Failure> {
    text.parse().map_err(|e: Error| Failure::Format(e.to_string()))
}

/// A member of S given as a Dyck word or as an interval "[l,r]".
fn parse_member(text: &str, n: usize) -> std::result::Result<PeakPath, Failure> {
    let y = if let Some(inner) = text.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        let bounds: Vec<usize> = inner
            .split(',')
            .map(|t| t.trim().parse().map_err(|_| Failure::Format(format!("bad interval {text:?}"))))
            .collect::<std::result::Result<_, _>>()?;
        let [l, r] = bounds[..] else {
            return Err(Failure::Format(format!("interval {text:?} needs two bounds")));
        };
        PeakPath::new(n, l, r).map_err(|e| Failure::Format(e.to_string()))?
    } else {
        PeakPath::from_dyck(&parse_dyck(text)?)
            .ok_or_else(|| Failure::Format(format!("{text} does not have n - 1 peaks in one run")))?
    };
    if y.n() != n {
        return Err(Failure::Format(format!("{text} has half-length {}, expected {n}", y.n())));
    }
    Ok(y)
}

fn json<T: Serialize + ?Sized>(value: &T) -> Outcome {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| Failure::Internal(e.to_string()))
}

fn lines<I: IntoIterator<Item = T>, T: std::fmt::Display>(items: I) -> String {
    items.into_iter().fold(String::new(), |mut out, x| {
        let _ = writeln!(out, "{x}");
        out
    })
}

fn ar_text(ar: &ARQuiver) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "vertices: {}", ar.vertices.len());
    for (v, y) in ar.vertices.iter().enumerate() {
        let succ: Vec<String> = ar.successors(v).iter().map(|&w| ar.vertices[w].to_string()).collect();
        let tau = ar.tau(v).map_or_else(|| "-".to_string(), |t| ar.vertices[t].to_string());
        let _ = writeln!(out, "{y} {}  -> {}  tau {tau}", y.dyck(), succ.join(" "));
    }
    out
}

#[derive(Serialize)]
struct MemberVariable<'a> {
    path: String,
    interval: &'a PeakPath,
    variable: &'a LaurentPoly,
}

fn run(cli: Cli) -> Outcome {
    let max_n = cli.max_n;
    match cli.command {
        Command::Enumerate { n, peaks, json: as_json } => {
            check_n(n, 1, max_n)?;
            let paths: Vec<DyckPath> = enumerate_dyck_bounded(n, max_n)?
                .into_iter()
                .filter(|p| peaks.map_or(true, |k| count_peaks(p) == k))
                .collect();
            if as_json {
                json(&paths)
            } else {
                Ok(lines(&paths))
            }
        }
        Command::Shifts { path, chain, json: as_json } => {
            let p = parse_dyck(&path)?;
            check_n(p.n(), 1, max_n)?;
            match chain {
                None => {
                    let pf = pair_decompose(&p);
                    let shifted = (1..p.n())
                        .map(|i| unitary_shift(&pf, i).map(|s| (i, s.reassemble())))
                        .collect::<Result<Vec<_>>>()?;
                    if as_json {
                        json(&shifted.iter().map(|(i, s)| (i, s.to_string())).collect::<Vec<_>>())
                    } else {
                        Ok(lines(shifted.iter().map(|(i, s)| format!("{i} {s}"))))
                    }
                }
                Some(spec) => {
                    let c = parse_chain(&ChainArgs { n: p.n(), chain: spec }, 2, max_n)?;
                    let y = parse_member(&path, c.n())?;
                    let arrows = es_successors(&y, &c)?;
                    if as_json {
                        json(&arrows)
                    } else {
                        Ok(lines(arrows.iter().map(|a| {
                            let comp: Vec<String> = a.composition.iter().map(ToString::to_string).collect();
                            format!("{} -> {} {:?} [{}]", a.source, a.target, a.kind, comp.join(","))
                        })))
                    }
                }
            }
        }
        Command::Hom { chain, from, to } => {
            let c = parse_chain(&chain, 2, max_n)?;
            let (a, b) = (parse_member(&from, c.n())?, parse_member(&to, c.n())?);
            Ok(format!("{}\n", u8::from(hom_nonzero(&a, &b, &c)?)))
        }
        Command::ArQuiver { chain, dot, json: as_json } => {
            let ar = ar_quiver(&parse_chain(&chain, 2, max_n)?)?;
            if dot {
                Ok(ar.to_dot())
            } else if as_json {
                json(&ar)
            } else {
                Ok(ar_text(&ar))
            }
        }
        Command::Nakayama { kupisch, dot, json: as_json, dyck } => {
            let k: KupischSeries = kupisch.parse().map_err(|e: Error| Failure::Format(e.to_string()))?;
            check_n(k.m() + 1, 2, max_n)?;
            if !k.is_connected() {
                return Err(Failure::Format(format!("{k} is not connected")));
            }
            if dyck {
                return Ok(format!("{}\n", dyck_from_kupisch(&k)?));
            }
            let ar = ar_quiver_nakayama(&k)?;
            if dot {
                Ok(ar.to_dot())
            } else if as_json {
                json(&ar)
            } else {
                Ok(format!("kupisch: {k}\ndyck: {}\n{}", dyck_from_kupisch(&k)?, ar_text(&ar)))
            }
        }
        Command::Snake { chain, json: as_json } => {
            let g = snake_from_subchain(&parse_chain(&chain, 2, max_n)?);
            if as_json {
                json(&g)
            } else {
                let steps: String = g.steps().iter().map(|s| s.as_char()).collect();
                Ok(format!("tiles: {}\nsteps: {steps}\nmatchings: {}\n", g.d(), count_matchings_transfer(&g)))
            }
        }
        Command::Matchings { chain, count, json: as_json } => {
            let g = snake_from_subchain(&parse_chain(&chain, 2, max_n)?);
            if count {
                return Ok(format!("{}\n", count_matchings_transfer(&g)));
            }
            let matchings = enumerate_matchings(&g);
            if as_json {
                json(&matchings)
            } else {
                Ok(lines(matchings.iter().map(|p| {
                    let edges: Vec<String> =
                        p.edges().iter().map(|((x1, y1), (x2, y2))| format!("({x1},{y1})-({x2},{y2})")).collect();
                    edges.join(" ")
                })))
            }
        }
        Command::Words { chain, path, json: as_json } => {
            let c = parse_chain(&chain, 3, max_n)?;
            let words = match path {
                Some(p) => restricted_words(&parse_member(&p, c.n())?, &c)?,
                None => words_x_c(&c)?,
            };
            if as_json {
                json(&words)
            } else {
                Ok(lines(&words))
            }
        }
        Command::ClusterVars { chain, method, path, json: as_json } => {
            let c = parse_chain(&chain, 3, max_n)?;
            if let Some(p) = path {
                let y = parse_member(&p, c.n())?;
                let x = cluster_var_from_dyck(&y, &c)?;
                return if as_json {
                    json(&MemberVariable { path: y.dyck().to_string(), interval: &y, variable: &x })
                } else {
                    Ok(format!("{x}\n"))
                };
            }
            match method {
                Method::Dyck => {
                    let vars = dyck_cluster_variables(&c)?;
                    if as_json {
                        let rows: Vec<MemberVariable> = vars
                            .iter()
                            .map(|(y, x)| MemberVariable { path: y.dyck().to_string(), interval: y, variable: x })
                            .collect();
                        json(&rows)
                    } else {
                        Ok(lines(vars.iter().map(|(y, x)| format!("{y} {} {x}", y.dyck()))))
                    }
                }
                Method::Mutation => {
                    let vars: Vec<LaurentPoly> =
                        enumerate_cluster_variables(&quiver_from_subchain(&c))?.into_iter().collect();
                    if as_json {
                        json(&vars)
                    } else {
                        Ok(lines(&vars))
                    }
                }
                Method::Both => {
                    let report = verify_bijection(&c)?;
                    let out = if as_json {
                        json(&report)?
                    } else {
                        format!(
                            "{} dyck {} mutation {} {}\n",
                            report.subchain,
                            report.dyck_count,
                            report.mutation_count,
                            if report.equal { "equal" } else { "MISMATCH" }
                        )
                    };
                    if report.equal {
                        Ok(out)
                    } else {
                        print!("{out}");
                        Err(Failure::Mismatch(format!("engines disagree on {}", report.subchain)))
                    }
                }
            }
        }
        Command::Verify { nmax, nmin, json: as_json } => {
            check_n(nmin, 3, max_n)?;
            check_n(nmax, nmin, max_n)?;
            let reports = verify_all(nmin..=nmax)?;
            let out = if as_json {
                json(&reports)?
            } else {
                let mut out = lines(reports.iter().map(|r| {
                    format!(
                        "n={} {} dyck={} mutation={} {}",
                        r.subchain.n(),
                        r.subchain,
                        r.dyck_count,
                        r.mutation_count,
                        if r.equal { "ok" } else { "MISMATCH" }
                    )
                }));
                let bad = reports.iter().filter(|r| !r.equal).count();
                let _ = writeln!(out, "{} subchains, {bad} mismatches", reports.len());
                out
            };
            if reports.iter().all(|r| r.equal) {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Mismatch("engines disagree".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
