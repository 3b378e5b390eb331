use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hypercops::construct::{
    basic, cartesian_product, petersen, prism, random_hypertree, single_edge, BasicKind, HostTree,
    Multipartite, PrismSpec,
};
use hypercops::dismantle::dismantling_order;
use hypercops::format::{parse_hypergraph, serialize_hypergraph};
use hypercops::solver::{
    cop_number, extract_pursuer, extract_strategy, play_match, solve, CopStrategy, PassCop,
    PassRobber, RandomCop, RandomRobber, RobberStrategy, Side, Variant,
};
use hypercops::strategies::{
    hypertree_cop_strategy, mm_product_cop_strategy, multipartite_cop_strategy,
    multipartite_robber_evader, prism_cop_strategy, prism_robber_evader, product_robber_evader,
};
use hypercops::suite::{run_suite, SuiteId};
use hypercops::{Error, Graph, Hypergraph};

#[derive(Parser)]
#[command(name = "hypercops", version, about = "Cops and Robber on hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Standard,
    Active,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Standard => Variant::Standard,
            VariantArg::Active => Variant::ActiveRobber,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    Hypercube,
    Petersen,
    Edge,
    K,
    L,
    Hypertree,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CopName {
    Optimal,
    Hypertree,
    Mm,
    Prism,
    Multipartite,
    Random,
    Pass,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RobberName {
    Optimal,
    EvaderMultipartite,
    EvaderProduct,
    EvaderPrism,
    Random,
    Pass,
}

#[derive(Subcommand)]
enum Command {
    /// Least k such that k cops win.
    Copnum {
        file: PathBuf,
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long, value_enum, default_value = "standard")]
        variant: VariantArg,
    },
    /// Decide dismantlability and optionally write the elimination certificate.
    Dismantle {
        file: PathBuf,
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Print the 2-section.
    Twosection { file: PathBuf },
    /// Generate a family member.
    ///
    /// Parameters: path/cycle/complete/edge N; hypercube D; petersen (none);
    /// k R:N1,N2,...; l R:S:N1,N2,...; hypertree N:MAX_EDGE:EDGES.
    Gen {
        #[arg(value_enum)]
        family: Family,
        params: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short)]
        o: Option<PathBuf>,
        /// For hypertrees, also write the host tree to this file.
        #[arg(long)]
        host: Option<PathBuf>,
    },
    /// Cartesian product of two or more hypergraph files.
    Product {
        #[arg(required = true, num_args = 2..)]
        files: Vec<PathBuf>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Prism over a base hypergraph.
    Prism {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Play one match and print its trace as JSON.
    Play {
        file: PathBuf,
        #[arg(long)]
        cops: usize,
        #[arg(long, value_enum)]
        cop: CopName,
        #[arg(long, value_enum)]
        robber: RobberName,
        #[arg(long)]
        max_rounds: usize,
        #[arg(long, value_enum, default_value = "standard")]
        variant: VariantArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Host tree file (graph) for the hypertree cop.
        #[arg(long)]
        host: Option<PathBuf>,
        /// Two factor files for the mm cop (trees) and the product evader.
        #[arg(long, num_args = 2)]
        factors: Vec<PathBuf>,
        /// Base hypergraph file for the prism strategies.
        #[arg(long)]
        base: Option<PathBuf>,
        /// Number of prism copies.
        #[arg(long)]
        copies: Option<usize>,
        /// Transitional edge size of the prism.
        #[arg(long)]
        edge_size: Option<usize>,
        /// Multipartite family, as `k:R:N1,N2,...` or `l:R:S:N1,N2,...`.
        #[arg(long)]
        family: Option<String>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "ALL")]
        suite: SuiteId,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Time budget in seconds; checks that do not fit are SKIPPED.
        #[arg(long)]
        budget: Option<f64>,
        /// JSON report path; a markdown copy is written next to it.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<Hypergraph> {
    let bytes = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_hypergraph(&bytes).with_context(|| format!("{}", path.display()))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn numbers(params: &str) -> Result<Vec<usize>> {
    params
        .split(':')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| anyhow!("expected a number, got {s:?}"))
        })
        .collect()
}

fn generate(
    family: Family,
    params: Option<&str>,
    seed: u64,
) -> Result<(Hypergraph, Option<HostTree>)> {
    let need = || params.ok_or_else(|| anyhow!("this family needs parameters"));
    let one = || -> Result<usize> {
        match numbers(need()?)?.as_slice() {
            [n] => Ok(*n),
            _ => bail!("expected a single number"),
        }
    };
    Ok((
        match family {
            Family::Path => basic(BasicKind::Path, one()?)?,
            Family::Cycle => basic(BasicKind::Cycle, one()?)?,
            Family::Complete => basic(BasicKind::Complete, one()?)?,
            Family::Hypercube => basic(BasicKind::Hypercube, one()?)?,
            Family::Edge => single_edge(one()?)?,
            Family::Petersen => petersen(),
            Family::K => Multipartite::parse(&format!("k:{}", need()?))?.build()?,
            Family::L => Multipartite::parse(&format!("l:{}", need()?))?.build()?,
            Family::Hypertree => match numbers(need()?)?.as_slice() {
                [n, max_edge, edges] => {
                    let (t, host) = random_hypertree(*n, *max_edge, *edges, seed)?;
                    return Ok((t, Some(host)));
                }
                _ => bail!("hypertree parameters are N:MAX_EDGE:EDGES"),
            },
        },
        None,
    ))
}

fn tree(path: &Path) -> Result<HostTree> {
    Ok(HostTree::new(Graph::new(read(path)?)?)?)
}

struct PlayArgs<'a> {
    h: &'a Hypergraph,
    k: usize,
    variant: Variant,
    seed: u64,
    host: Option<&'a Path>,
    factors: &'a [PathBuf],
    base: Option<&'a Path>,
    copies: Option<usize>,
    edge_size: Option<usize>,
    family: Option<&'a str>,
}

impl PlayArgs<'_> {
    fn factors(&self) -> Result<[&Path; 2]> {
        match self.factors {
            [a, b] => Ok([a, b]),
            _ => bail!("this strategy needs --factors A B"),
        }
    }

    fn prism(&self) -> Result<(Hypergraph, usize, usize)> {
        let base = self
            .base
            .ok_or_else(|| anyhow!("prism strategies need --base"))?;
        let n = self
            .copies
            .ok_or_else(|| anyhow!("prism strategies need --copies"))?;
        let r = self
            .edge_size
            .ok_or_else(|| anyhow!("prism strategies need --edge-size"))?;
        Ok((read(base)?, n, r))
    }

    fn family(&self) -> Result<Multipartite> {
        Ok(Multipartite::parse(self.family.ok_or_else(|| {
            anyhow!("multipartite strategies need --family")
        })?)?)
    }

    fn cop(&self, name: CopName) -> Result<Box<dyn CopStrategy>> {
        Ok(match name {
            CopName::Optimal => {
                let table = Arc::new(solve(self.h, self.k, self.variant)?);
                if !table.is_k_cop_win() {
                    eprintln!("note: {} cops cannot force a win here; the cops chase greedily from lost positions", self.k);
                }
                Box::new(extract_pursuer(table))
            }
            CopName::Hypertree => {
                let host = tree(
                    self.host
                        .ok_or_else(|| anyhow!("the hypertree cop needs --host"))?,
                )?;
                Box::new(hypertree_cop_strategy(self.h, &host)?)
            }
            CopName::Mm => {
                let [a, b] = self.factors()?;
                Box::new(mm_product_cop_strategy(&tree(a)?, &tree(b)?, self.variant)?)
            }
            CopName::Prism => {
                let (base, n, r) = self.prism()?;
                let table = Arc::new(solve(&base, self.k, self.variant)?);
                let inner = extract_strategy(table, Side::Cop)?
                    .into_cop()
                    .expect("cop side");
                Box::new(prism_cop_strategy(&base, n, r, inner)?)
            }
            CopName::Multipartite => Box::new(multipartite_cop_strategy(&self.family()?)?),
            CopName::Random => Box::new(RandomCop::new(self.seed)),
            CopName::Pass => Box::new(PassCop),
        })
    }

    fn robber(&self, name: RobberName) -> Result<Box<dyn RobberStrategy>> {
        Ok(match name {
            RobberName::Optimal => {
                let table = Arc::new(solve(self.h, self.k, self.variant)?);
                extract_strategy(table, Side::Robber)?
                    .into_robber()
                    .expect("robber side")
            }
            RobberName::EvaderMultipartite => {
                Box::new(multipartite_robber_evader(&self.family()?)?)
            }
            RobberName::EvaderProduct => {
                let [a, b] = self.factors()?;
                Box::new(product_robber_evader(&read(a)?, &read(b)?)?)
            }
            RobberName::EvaderPrism => {
                let (base, n, r) = self.prism()?;
                let table = Arc::new(solve(&base, self.k, self.variant)?);
                let inner = extract_strategy(table, Side::Robber)?
                    .into_robber()
                    .expect("robber side");
                Box::new(prism_robber_evader(&base, n, r, inner)?)
            }
            RobberName::Random => Box::new(RandomRobber::new(self.seed.wrapping_add(1))),
            RobberName::Pass => Box::new(PassRobber),
        })
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Copnum {
            file,
            max_k,
            variant,
        } => {
            let h = read(&file)?;
            match cop_number(&h, max_k, variant.into())? {
                Some(c) => println!("{c}"),
                None => println!(
                    "more than {}",
                    max_k.expect("unbounded search always finds a value")
                ),
            }
        }
        Command::Dismantle { file, certificate } => {
            let h = read(&file)?;
            match dismantling_order(&h)? {
                Some(cert) => {
                    println!(
                        "dismantlable: {}",
                        cert.ordering().collect::<Vec<_>>().join(" ")
                    );
                    if let Some(p) = certificate {
                        emit(&format!("{}\n", cert.to_json()), Some(&p))?;
                    }
                }
                None => println!("not dismantlable"),
            }
        }
        Command::Twosection { file } => {
            let h = read(&file)?;
            print!(
                "{}",
                serialize_hypergraph(&h.two_section().into_inner(), None)
            );
        }
        Command::Gen {
            family,
            params,
            seed,
            o,
            host,
        } => {
            let (h, tree) = generate(family, params.as_deref(), seed)?;
            emit(&serialize_hypergraph(&h, None), o.as_deref())?;
            match (host, tree) {
                (Some(p), Some(t)) => emit(
                    &serialize_hypergraph(t.graph().as_hypergraph(), None),
                    Some(&p),
                )?,
                (Some(_), None) => bail!("--host only applies to hypertrees"),
                _ => {}
            }
        }
        Command::Product { files, o } => {
            let factors = files.iter().map(|f| read(f)).collect::<Result<Vec<_>>>()?;
            emit(
                &serialize_hypergraph(&cartesian_product(&factors)?, None),
                o.as_deref(),
            )?;
        }
        Command::Prism { file, n, r, o } => {
            let base = read(&file)?;
            emit(
                &serialize_hypergraph(&prism(&PrismSpec::new(base, n, r))?, None),
                o.as_deref(),
            )?;
        }
        Command::Play {
            file,
            cops,
            cop,
            robber,
            max_rounds,
            variant,
            seed,
            host,
            factors,
            base,
            copies,
            edge_size,
            family,
        } => {
            let h = read(&file)?;
            let args = PlayArgs {
                h: &h,
                k: cops,
                variant: variant.into(),
                seed,
                host: host.as_deref(),
                factors: &factors,
                base: base.as_deref(),
                copies,
                edge_size,
                family: family.as_deref(),
            };
            let mut c = args.cop(cop)?;
            let mut r = args.robber(robber)?;
            let trace = play_match(&h, cops, c.as_mut(), r.as_mut(), max_rounds, args.variant)?;
            println!("{}", trace.to_json());
        }
        Command::Verify {
            suite,
            seed,
            budget,
            report,
        } => {
            let budget = match budget {
                Some(b) if !(b.is_finite() && b >= 0.0) => {
                    bail!("budget must be a non-negative number of seconds")
                }
                other => other.map(Duration::from_secs_f64),
            };
            let result = run_suite(suite, budget, seed);
            let markdown = result.to_markdown();
            print!("{markdown}");
            if let Some(p) = report {
                emit(&result.to_json(), Some(&p))?;
                emit(&markdown, Some(&p.with_extension("md")))?;
            }
            if !result.success() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// A match that breaks down mid-game exits 1; bad input exits 2.
fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::IllegalMove { .. } | Error::Strategy { .. }) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
