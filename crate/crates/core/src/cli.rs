//! The `domipoly` command line.
//!
//! Exit codes: 0 success, 1 usage, 2 parse or invalid input, 3 order limit
//! exceeded, 4 file error, 5 verification failed.

use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::domsets::{irrelevant_edges, reduce_irrelevant, BruteForce};
use crate::equiv::{self, CanonicalForm, Limits};
use crate::error::Error;
use crate::formulas::{self, CliqueSizeProfile};
use crate::graph::{clique_cover_product, edgelist, graph6, CliqueCover, Family, Graph};

pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;
pub const EXIT_IO: i32 = 4;
pub const EXIT_FAILED: i32 = 5;

#[derive(Parser, Debug)]
#[command(
    name = "domipoly",
    version,
    about = "Domination polynomials of small graphs"
)]
struct Cli {
    /// Largest order enumerated by brute force
    #[arg(long, global = true, env = "DOMIPOLY_LIMIT")]
    limit: Option<usize>,

    /// Worker threads (default: available parallelism)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the domination polynomial of a graph
    Poly { graph: String },
    /// Print a named family member as an edge list and graph6
    Family { name: String, args: Vec<usize> },
    /// Build a graph product
    #[command(subcommand)]
    Product(ProductCommand),
    /// List the irrelevant edges of a graph
    Irrelevant { graph: String },
    /// Delete irrelevant edges until none remain
    Reduce { graph: String },
    /// Compare the domination polynomials of two graphs
    Equiv { first: String, second: String },
    /// All graphs of the same order sharing the domination polynomial
    Class { graph: String },
    /// Run an exhaustive verification
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand, Debug)]
enum ProductCommand {
    /// Clique cover product G^C * H^U
    Ccp(CcpArgs),
}

#[derive(Args, Debug)]
struct CcpArgs {
    g: String,
    /// Cover parts, e.g. "0,1;2;3,4"
    #[arg(long)]
    cover: String,
    h: String,
    /// Attachment set in H, e.g. "0,2" (default: all of V(H))
    #[arg(long)]
    u: Option<String>,
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// [F_n] = {(G o K1) + K1 : |G| = n}
    Friendship { n: usize },
    /// D(G) = x^n (x+2)^n iff G = H o K1
    #[command(name = "corona-k1")]
    CoronaK1 { n: usize },
    /// Edge deletions and additions in H_2n keep the polynomial
    #[command(name = "h-variants")]
    HVariants { n: usize },
    /// Compare D(G^C * H^U) with the product of its per-clique factors
    #[command(name = "dcli-probe")]
    DcliProbe(CcpArgs),
}

#[derive(Debug)]
enum CliError {
    Core(Error),
    Io(String),
    Failed,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Resolves `family:NAME(args)`, a file (edge list or graph6, detected by
/// the first byte), or an inline graph6 string.
pub fn resolve_graph(spec: &str) -> Result<Graph, (i32, String)> {
    resolve(spec).map_err(|e| match e {
        CliError::Core(e) => (code_of(&e), e.to_string()),
        CliError::Io(msg) => (EXIT_IO, msg),
        CliError::Failed => (EXIT_FAILED, "failed".into()),
    })
}

fn resolve(spec: &str) -> CliResult<Graph> {
    if let Some(fam) = spec.strip_prefix("family:") {
        return Ok(fam.parse::<Family>()?.build()?);
    }
    let path = Path::new(spec);
    if path.exists() {
        let text =
            std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{spec}: {e}")))?;
        let trimmed = text.trim_start();
        return Ok(if trimmed.starts_with(|c: char| c.is_ascii_digit()) {
            edgelist::parse(trimmed)?
        } else {
            graph6::decode(trimmed.lines().next().unwrap_or(""))?
        });
    }
    let looks_graph6 = !spec.is_empty() && spec.bytes().all(|b| (63..=126).contains(&b));
    if looks_graph6 && !spec.contains('/') {
        return Ok(graph6::decode(spec)?);
    }
    Err(CliError::Io(format!("{spec}: no such file")))
}

fn code_of(e: &Error) -> i32 {
    match e {
        Error::LimitExceeded { .. } => EXIT_LIMIT,
        _ => EXIT_PARSE,
    }
}

fn parse_u(s: &str) -> CliResult<Vec<usize>> {
    s.split(',')
        .filter(|v| !v.trim().is_empty())
        .map(|v| {
            v.trim()
                .parse()
                .map_err(|_| CliError::Core(Error::Parse(format!("bad vertex '{v}' in --u"))))
        })
        .collect()
}

fn write_graph(out: &mut dyn Write, g: &Graph) -> std::io::Result<()> {
    write!(out, "{}", edgelist::format(g))?;
    writeln!(out, "graph6: {}", graph6::encode(g))
}

fn g6_list(forms: impl IntoIterator<Item = CanonicalForm>) -> Vec<String> {
    forms.into_iter().map(|f| f.graph6()).collect()
}

struct Ctx {
    limits: Limits,
}

impl Ctx {
    fn brute(&self) -> BruteForce {
        BruteForce::with_limit(self.limits.brute_force)
    }

    fn ccp_parts(
        &self,
        args: &CcpArgs,
    ) -> CliResult<(Graph, CliqueCover, Graph, Option<Vec<usize>>)> {
        let g = resolve(&args.g)?;
        let cover = CliqueCover::validate(&g, &CliqueCover::parse_parts(&args.cover)?)?;
        let h = resolve(&args.h)?;
        let u = args.u.as_deref().map(parse_u).transpose()?;
        Ok((g, cover, h, u))
    }

    fn execute(&self, command: &Command, out: &mut dyn Write) -> CliResult<()> {
        let io = |e: std::io::Error| CliError::Io(e.to_string());
        match command {
            Command::Poly { graph } => {
                let g = resolve(graph)?;
                writeln!(out, "{}", self.brute().polynomial(&g)?).map_err(io)?;
            }
            Command::Family { name, args } => {
                let g = Family::from_name_args(name, args)?.build()?;
                write_graph(out, &g).map_err(io)?;
            }
            Command::Product(ProductCommand::Ccp(args)) => {
                let (g, cover, h, u) = self.ccp_parts(args)?;
                let all: Vec<usize> = (0..h.order()).collect();
                let product = clique_cover_product(&g, &cover, &h, u.as_deref().unwrap_or(&all))?;
                write_graph(out, &product).map_err(io)?;
                writeln!(out, "brute-force: {}", self.brute().polynomial(&product)?).map_err(io)?;
                if u.is_none() && h.order() > 0 {
                    let closed = formulas::d_clique_cover_product(
                        &CliqueSizeProfile::from(&cover),
                        &self.brute().polynomial(&h)?,
                        h.order(),
                    )?;
                    writeln!(out, "closed-form: {closed}").map_err(io)?;
                }
            }
            Command::Irrelevant { graph } => {
                let g = resolve(graph)?;
                let edges = irrelevant_edges(&g);
                writeln!(out, "{}", edges.len()).map_err(io)?;
                for (u, v) in edges {
                    writeln!(out, "{u} {v}").map_err(io)?;
                }
            }
            Command::Reduce { graph } => {
                let g = resolve(graph)?;
                let trace = reduce_irrelevant(&g);
                writeln!(out, "deleted: {}", trace.deleted.len()).map_err(io)?;
                for (u, v) in &trace.deleted {
                    writeln!(out, "{u} {v}").map_err(io)?;
                }
                writeln!(out, "final:").map_err(io)?;
                write_graph(out, &trace.final_graph).map_err(io)?;
                if let Ok(d) = self.brute().polynomial(&trace.final_graph) {
                    writeln!(out, "polynomial: {d}").map_err(io)?;
                }
            }
            Command::Equiv { first, second } => {
                let (g, h) = (resolve(first)?, resolve(second)?);
                let (dg, dh) = (self.brute().polynomial(&g)?, self.brute().polynomial(&h)?);
                let verdict = if dg == dh { "equal" } else { "not equal" };
                writeln!(out, "{verdict}\nfirst: {dg}\nsecond: {dh}").map_err(io)?;
            }
            Command::Class { graph } => {
                let g = resolve(graph)?;
                let report = equiv::class_of(&g, &self.limits)?;
                writeln!(out, "{}", report.to_json()).map_err(io)?;
            }
            Command::Verify(v) => return self.verify(v, out),
        }
        Ok(())
    }

    fn verify(&self, command: &VerifyCommand, out: &mut dyn Write) -> CliResult<()> {
        let io = |e: std::io::Error| CliError::Io(e.to_string());
        let (passed, text) = match command {
            VerifyCommand::Friendship { n } => {
                let check = equiv::verify_friendship_class(*n, &self.limits)?;
                let witness = check.report.contains(&check.book_witness);
                let extra = json!({
                    "verified": "friendship",
                    "n": n,
                    "holds": check.holds,
                    "constructed": g6_list(check.constructed.iter().cloned()),
                    "book_witness": check.book_witness.graph6(),
                    "book_witness_in_class": witness,
                });
                (check.holds && witness, check.report.to_json_with(&extra))
            }
            VerifyCommand::CoronaK1 { n } => {
                let check = equiv::verify_corona_k1(*n, &self.limits)?;
                let doc = json!({
                    "verified": "corona-k1",
                    "n": n,
                    "holds": check.holds,
                    "matching": g6_list(check.matching),
                    "coronas": g6_list(check.coronas),
                });
                (check.holds, serde_json::to_string_pretty(&doc).unwrap())
            }
            VerifyCommand::HVariants { n } => {
                let check = equiv::verify_h_variants(*n, &self.limits)?;
                let doc = json!({
                    "verified": "h-variants",
                    "n": n,
                    "holds": check.holds,
                    "deletion_sets": check.deletion_sets,
                    "addition_sets": check.addition_sets,
                    "failures": check.failures,
                });
                (check.holds, serde_json::to_string_pretty(&doc).unwrap())
            }
            VerifyCommand::DcliProbe(args) => {
                let (g, cover, h, u) = self.ccp_parts(args)?;
                let u = u.unwrap_or_else(|| (0..h.order()).collect());
                let rec = equiv::probe_general_u(&g, &cover, &h, &u, &self.limits)?;
                let doc = json!({
                    "verified": "dcli-probe",
                    "u": u,
                    "equal": rec.equal(),
                    "product": rec.product.to_string(),
                    "factor_product": rec.factor_product.to_string(),
                });
                (rec.equal(), serde_json::to_string_pretty(&doc).unwrap())
            }
        };
        writeln!(out, "{text}").map_err(io)?;
        if passed {
            Ok(())
        } else {
            Err(CliError::Failed)
        }
    }
}

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let mut limits = Limits::default();
    if let Some(limit) = cli.limit {
        limits.brute_force = limit;
    }
    let ctx = Ctx { limits };

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = cli.jobs {
        builder = builder.num_threads(jobs.max(1));
    }
    let pool = match builder.build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return EXIT_USAGE;
        }
    };
    let mut buf = Vec::new();
    let result = pool.install(|| ctx.execute(&cli.command, &mut buf));
    if let Err(e) = out.write_all(&buf) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_IO;
    }
    match result {
        Ok(()) => 0,
        Err(CliError::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            code_of(&e)
        }
        Err(CliError::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_IO
        }
        Err(CliError::Failed) => {
            let _ = writeln!(err, "verification failed");
            EXIT_FAILED
        }
    }
}
