//! Argument parsing and dispatch for the `hydras` binary.
//!
//! Exit codes: 0 on success, 2 on usage errors (bad flags, impossible
//! combinations), 1 on domain errors (budget exceeded, invalid distance,
//! bad prime lists, empty selections, failed verification).

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use anyhow::anyhow;
use clap::{Args, Parser, Subcommand, ValueEnum};

use hydra_core::construct::{self, Mode, WitnessPair};
use hydra_core::BigUint;
use hydra_core::metrics::{self, PairKind};
use hydra_core::{counting, hydra, primes, Budget, Hydra, Selector};

use crate::json::{self, DistanceTableDto, GapEntryDto, PlanDto};
use crate::render::{self, ListingOptions};
use crate::svg::{self, Highlight, Layout, WheelStyle};

/// Parses `args` and runs the selected subcommand, returning the process
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            1
        }
    }
}

enum Failure {
    Usage(String),
    Domain(anyhow::Error),
}

impl From<hydra_core::Error> for Failure {
    fn from(e: hydra_core::Error) -> Self {
        Failure::Domain(e.into())
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain(e.into())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

#[derive(Parser)]
#[command(
    name = "hydras",
    version,
    about = "Recursive wheel sieve: partition the positive integers into snakes, \
             split by primes, count and draw the survivors."
)]
struct Cli {
    /// Largest snake table any operation may materialize.
    #[arg(long, global = true, value_name = "N", default_value_t = Budget::default().max_snakes)]
    max_snakes: u64,

    /// Output format. SVG-producing commands and `verify` are text-only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct ListingArgs {
    /// List every snake, dead ones included.
    #[arg(long, conflicts_with = "twins")]
    all: bool,

    /// List only snakes that belong to a pair at distance 2.
    #[arg(long)]
    twins: bool,

    /// Tail values printed per snake.
    #[arg(long, value_name = "N", default_value_t = 4)]
    tail: usize,

    /// Prefix rows that open a head pair at this even distance with "pair->".
    #[arg(long, value_name = "D")]
    mark_pairs: Option<u64>,

    /// Suppress the header block.
    #[arg(long)]
    no_header: bool,
}

impl ListingArgs {
    fn options(&self) -> ListingOptions {
        let selector = if self.all {
            Selector::All
        } else if self.twins {
            Selector::Twins
        } else {
            Selector::Alive
        };
        ListingOptions {
            selector,
            tail_count: self.tail,
            header: !self.no_header,
            mark_pairs: self.mark_pairs,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a hydra by splitting on the given primes and list it.
    Hydra {
        /// Primes in split order, e.g. 2,3,5 or 5,7,2,3.
        #[arg(long, value_delimiter = ',', value_name = "P1,P2,...", required = true)]
        primes: Vec<u64>,
        #[command(flatten)]
        listing: ListingArgs,
    },

    /// Grow a natural hydra by repeatedly splitting on the next prime.
    Recurse {
        /// Number of recursion steps starting from the root.
        #[arg(long, value_name = "N", conflicts_with = "upto_prime")]
        steps: Option<u32>,
        /// Recurse until every prime up to this bound has been split on.
        #[arg(long, value_name = "P")]
        upto_prime: Option<u64>,
        #[command(flatten)]
        listing: ListingArgs,
    },

    /// Split a hydra by one more prime and list the result.
    Split {
        /// Primes already split on; omit for the root.
        #[arg(long, value_delimiter = ',', value_name = "P1,P2,...")]
        primes: Vec<u64>,
        /// The new prime to split by.
        #[arg(long, value_name = "P")]
        by: u64,
        #[command(flatten)]
        listing: ListingArgs,
    },

    /// Select snakes by recursive index, pair distance, or twin membership.
    Select {
        #[arg(long, value_delimiter = ',', value_name = "P1,P2,...", required = true)]
        primes: Vec<u64>,
        /// Dot-joined index prefixes, e.g. 1.1,1.6.
        #[arg(long, value_delimiter = ',', value_name = "I1,I2,...")]
        index: Vec<String>,
        /// Keep only members of pairs at this even distance.
        #[arg(long, value_name = "D", conflicts_with = "twins")]
        dist: Option<u64>,
        /// Shorthand for --dist 2.
        #[arg(long)]
        twins: bool,
        /// List every selected snake, dead ones included.
        #[arg(long)]
        all: bool,
        /// Tail values printed per snake.
        #[arg(long, value_name = "N", default_value_t = 4)]
        tail: usize,
        /// Prefix rows that open a head pair at this even distance with "pair->".
        #[arg(long, value_name = "D")]
        mark_pairs: Option<u64>,
        /// Suppress the header block.
        #[arg(long)]
        no_header: bool,
    },

    /// Consecutive alive-head gaps (wheeldiff), or their histogram table.
    Diff {
        #[arg(long, value_delimiter = ',', value_name = "P1,P2,...", required = true)]
        primes: Vec<u64>,
        /// Print the gap histogram as a table instead of the gap vector.
        #[arg(long)]
        table: bool,
    },

    /// Pairwise distance matrix between alive heads (wheeldist).
    Dist {
        #[arg(long, value_delimiter = ',', value_name = "P1,P2,...", required = true)]
        primes: Vec<u64>,
    },

    /// Exact closed-form counts; works far beyond the materialization budget.
    Counts {
        #[arg(long, value_delimiter = ',', value_name = "P1,P2,...", required = true)]
        primes: Vec<u64>,
        /// Also print the counts predicted after splitting by this prime.
        #[arg(long, value_name = "P")]
        predict: Option<u64>,
    },

    /// Plan (and optionally build) a hydra holding a pair at even distance d.
    Kronecker {
        /// The even distance to realize.
        #[arg(long, value_name = "D")]
        distance: u64,
        /// Materialize the planned hydra, list it, and locate a witness pair.
        #[arg(long)]
        materialize: bool,
    },

    /// Plan (and optionally build) a hydra holding a consecutive pair at a gap.
    Polignac {
        /// The even gap to realize between consecutive alive heads.
        #[arg(long, value_name = "D")]
        gap: u64,
        /// Use the brute-force prime set instead of the efficient one.
        #[arg(long)]
        brute: bool,
        /// Materialize the planned hydra, list it, and locate a witness pair.
        #[arg(long)]
        materialize: bool,
    },

    /// Exact candidate densities against the prime-counting references.
    Density {
        #[arg(long, value_delimiter = ',', value_name = "P1,P2,...", required = true)]
        primes: Vec<u64>,
        /// Reference point for 2/ln n and 4/ln² n.
        #[arg(long, value_name = "N")]
        n: u64,
    },

    /// Draw hydra rings as an SVG wheel.
    Wheel {
        /// Primes of the outermost ring in split order; the recursive layout
        /// draws one ring per prefix, the sorted layout a single ring.
        #[arg(long, value_delimiter = ',', value_name = "P1,P2,...", required = true)]
        rings: Vec<u64>,
        #[arg(long, value_enum, default_value_t = LayoutArg::Sorted)]
        layout: LayoutArg,
        #[arg(long, value_enum)]
        highlight: Option<HighlightArg>,
        /// Output file for the SVG document.
        #[arg(short, long, value_name = "FILE")]
        output: PathBuf,
    },

    /// Query the brute-force prime oracle directly.
    Primes {
        /// The first N primes.
        #[arg(long, value_name = "N")]
        first: Option<usize>,
        /// Primes up to N inclusive; with --gaps, the pair bound.
        #[arg(long, value_name = "N")]
        upto: Option<u64>,
        /// Prime pairs (p, p+D) with this gap, up to --upto.
        #[arg(long, value_name = "D")]
        gaps: Option<u64>,
        /// Restrict gap pairs to consecutive primes.
        #[arg(long, requires = "gaps")]
        consecutive: bool,
    },

    /// Cross-check hydra arithmetic against the oracle; exit 1 on violation.
    Verify {
        /// Check every natural hydra whose primes stay at or below this bound.
        #[arg(long, value_name = "P", default_value_t = 19)]
        max_prime: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LayoutArg {
    Sorted,
    Recursive,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HighlightArg {
    Twins,
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    if cli.max_snakes == 0 {
        return Err(usage("--max-snakes must be at least 1"));
    }
    let budget = Budget { max_snakes: cli.max_snakes };
    let fmt = cli.format;

    match cli.command {
        Command::Hydra { primes, listing } => {
            let h = Hydra::natural(&primes, &budget)?;
            print_hydra(&h, &listing.options(), fmt)
        }
        Command::Recurse { steps, upto_prime, listing } => {
            let mut h = Hydra::root();
            match (steps, upto_prime) {
                (Some(n), None) => {
                    for _ in 0..n {
                        h = h.recurse(&budget)?;
                    }
                }
                (None, Some(p)) => {
                    while h.next_prime()? <= p {
                        h = h.recurse(&budget)?;
                    }
                }
                _ => return Err(usage("recurse needs exactly one of --steps or --upto-prime")),
            }
            print_hydra(&h, &listing.options(), fmt)
        }
        Command::Split { primes, by, listing } => {
            let h = Hydra::natural(&primes, &budget)?.split(by, &budget)?;
            print_hydra(&h, &listing.options(), fmt)
        }
        Command::Select { primes, index, dist, twins, all, tail, mark_pairs, no_header } => {
            let dist = if twins { Some(2) } else { dist };
            if index.is_empty() && dist.is_none() {
                return Err(usage("select needs --index, --dist, or --twins"));
            }
            let mut h = Hydra::natural(&primes, &budget)?;
            if !index.is_empty() {
                let prefixes: Vec<&str> = index.iter().map(String::as_str).collect();
                h = h.subscript(&prefixes)?;
            }
            if let Some(d) = dist {
                let members: BTreeSet<u64> = metrics::count_pairs(&h, d)?
                    .into_iter()
                    .flat_map(|p| [p.low, p.high])
                    .collect();
                let displays: Vec<String> =
                    members.iter().map(|&head| h.index_display(head)).collect();
                let prefixes: Vec<&str> = displays.iter().map(String::as_str).collect();
                h = h.subscript(&prefixes)?;
            }
            let opts = ListingOptions {
                selector: if all { Selector::All } else { Selector::Alive },
                tail_count: tail,
                header: !no_header,
                mark_pairs,
            };
            print_hydra(&h, &opts, fmt)
        }
        Command::Diff { primes, table } => {
            let h = Hydra::natural(&primes, &budget)?;
            if table {
                let hist = metrics::gap_histogram(&h)?;
                match fmt {
                    Format::Text => print!("{}", render::render_histogram_table(&hist)),
                    Format::Json => print_json(&serde_json::json!(hist)),
                }
            } else {
                let entries = metrics::wheeldiff(&h)?;
                match fmt {
                    Format::Text => print!("{}", render::render_gap_vector(&entries)),
                    Format::Json => {
                        let dto: Vec<GapEntryDto> = entries
                            .iter()
                            .map(|e| GapEntryDto { label: e.label.clone(), value: e.value })
                            .collect();
                        print_json(&serde_json::json!(dto));
                    }
                }
            }
            Ok(())
        }
        Command::Dist { primes } => {
            let h = Hydra::natural(&primes, &budget)?;
            let t = metrics::wheeldist(&h, &budget)?;
            match fmt {
                Format::Text => print!("{}", render::render_dist_matrix(&t)),
                Format::Json => {
                    let dto = DistanceTableDto { labels: t.labels.clone(), matrix: t.matrix.clone() };
                    print_json(&serde_json::json!(dto));
                }
            }
            Ok(())
        }
        Command::Counts { primes, predict } => {
            hydra::validate_primes(&primes)?;
            let report = counting::report_for_primes(&primes);
            let predicted = match predict {
                Some(p) => Some((p, counting::predict_split(&report, p)?)),
                None => None,
            };
            match fmt {
                Format::Text => {
                    print!("{}", render::render_counts(&report));
                    if let Some((p, next)) = &predicted {
                        println!();
                        println!("after split by {p}:");
                        print!("{}", render::render_counts(next));
                    }
                }
                Format::Json => {
                    let value = serde_json::json!({
                        "counts": counts_json(&report),
                        "predict": predicted.as_ref().map(|(_, next)| counts_json(next)),
                    });
                    print_json(&value);
                }
            }
            Ok(())
        }
        Command::Kronecker { distance, materialize } => {
            let plan = construct::maillet_plan(distance)?;
            let built = if materialize {
                let (h, witness) = construct::maillet_hydra(distance, &budget)?;
                let oracle = construct::oracle_confirmation(&h, distance, false)?;
                Some((h, witness, oracle))
            } else {
                None
            };
            match fmt {
                Format::Text => {
                    print!("{}", render::render_plan(&plan));
                    if let Some((h, witness, oracle)) = &built {
                        let opts = ListingOptions {
                            mark_pairs: Some(distance),
                            ..ListingOptions::default()
                        };
                        println!();
                        print!("{}", render::render_hydra_text(h, &opts)?);
                        println!();
                        println!("{}", witness_line(witness, distance));
                        println!("{}", oracle_line(*oracle, distance, false));
                    }
                }
                Format::Json => {
                    let value = serde_json::json!({
                        "plan": PlanDto::from(&plan),
                        "hydra": built.as_ref().map(|(h, _, _)| json::hydra_to_dto(h)),
                        "witness": built.as_ref().map(|(_, w, _)| witness_json(w)),
                        "oracle": built.as_ref().and_then(|(_, _, o)| *o),
                    });
                    print_json(&value);
                }
            }
            Ok(())
        }
        Command::Polignac { gap, brute, materialize } => {
            let mode = if brute { Mode::GapBrute } else { Mode::GapEfficient };
            let plan = construct::polignac_plan(gap, mode)?;
            let built = if materialize {
                let (h, witness) = construct::polignac_hydra(gap, mode, &budget)?;
                let oracle = construct::oracle_confirmation(&h, gap, true)?;
                Some((h, witness, oracle))
            } else {
                None
            };
            match fmt {
                Format::Text => {
                    print!("{}", render::render_plan(&plan));
                    if let Some((h, witness, oracle)) = &built {
                        println!();
                        print!("{}", render::render_hydra_text(h, &ListingOptions::default())?);
                        println!();
                        println!("{}", gap_witness_line(witness, gap));
                        println!("{}", oracle_line(*oracle, gap, true));
                    }
                }
                Format::Json => {
                    let value = serde_json::json!({
                        "plan": PlanDto::from(&plan),
                        "hydra": built.as_ref().map(|(h, _, _)| json::hydra_to_dto(h)),
                        "witness": built.as_ref().map(|(_, w, _)| witness_json(w)),
                        "oracle": built.as_ref().and_then(|(_, _, o)| *o),
                    });
                    print_json(&value);
                }
            }
            Ok(())
        }
        Command::Density { primes, n } => {
            let h = Hydra::count_only(&primes)?;
            let report = metrics::density_report(&h, n)?;
            match fmt {
                Format::Text => print!("{}", render::render_density(&report)),
                Format::Json => print_json(&serde_json::json!(json::DensityDto::from(&report))),
            }
            Ok(())
        }
        Command::Wheel { rings, layout, highlight, output } => {
            if fmt == Format::Json {
                return Err(usage("wheel writes an SVG document; --format json is not available"));
            }
            let layout = match layout {
                LayoutArg::Sorted => Layout::Sorted,
                LayoutArg::Recursive => Layout::Recursive,
            };
            let highlight = match highlight {
                Some(HighlightArg::Twins) => Highlight::Twins,
                None => Highlight::None,
            };
            let ring_hydras: Vec<Hydra> = match layout {
                Layout::Sorted => vec![Hydra::natural(&rings, &budget)?],
                Layout::Recursive => (1..=rings.len())
                    .map(|n| Hydra::natural(&rings[..n], &budget))
                    .collect::<hydra_core::Result<_>>()?,
            };
            let style = WheelStyle { layout, highlight };
            let doc = svg::render_wheel(&ring_hydras, &style)?;
            fs::write(&output, &doc)?;
            let outer = ring_hydras.last().expect("at least one ring");
            println!(
                "wrote {} ({} ring{}, outer k = {})",
                output.display(),
                ring_hydras.len(),
                if ring_hydras.len() == 1 { "" } else { "s" },
                outer.k()?
            );
            Ok(())
        }
        Command::Primes { first, upto, gaps, consecutive } => {
            match (first, upto, gaps) {
                (Some(n), None, None) => {
                    let v = primes::primes_first(n)?;
                    match fmt {
                        Format::Text => println!("{}", render::render_prime_vector(&v)),
                        Format::Json => print_json(&serde_json::json!(v)),
                    }
                }
                (None, Some(n), None) => {
                    let v = primes::primes_upto(n)?;
                    match fmt {
                        Format::Text => println!("{}", render::render_prime_vector(&v)),
                        Format::Json => print_json(&serde_json::json!(v)),
                    }
                }
                (None, Some(n), Some(d)) => {
                    let pairs = primes::gap_pairs_upto(n, d, consecutive)?;
                    match fmt {
                        Format::Text => {
                            for (a, b) in &pairs {
                                println!("({a}, {b})");
                            }
                        }
                        Format::Json => print_json(&serde_json::json!(pairs)),
                    }
                }
                (None, None, Some(_)) => {
                    return Err(usage("--gaps needs --upto to bound the search"));
                }
                _ => {
                    return Err(usage(
                        "choose exactly one of --first N, --upto N, or --gaps D --upto N",
                    ));
                }
            }
            Ok(())
        }
        Command::Verify { max_prime } => {
            if fmt == Format::Json {
                return Err(usage("verify prints a text report; --format json is not available"));
            }
            verify(max_prime, &budget)
        }
    }
}

fn print_hydra(h: &Hydra, opts: &ListingOptions, fmt: Format) -> Result<(), Failure> {
    match fmt {
        Format::Text => print!("{}", render::render_hydra_text(h, opts)?),
        Format::Json => println!("{}", json::render_json(h)),
    }
    Ok(())
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable value"));
}

fn counts_json(r: &counting::CountReport) -> serde_json::Value {
    serde_json::json!({
        "primes": r.primes,
        "k": r.k.to_string(),
        "k1": r.k1.to_string(),
        "k2_twin": r.k2_twin.as_ref().map(BigUint::to_string),
        "pair_bound": r.pair_bound.as_ref().map(BigUint::to_string),
    })
}

fn kind_name(kind: PairKind) -> &'static str {
    match kind {
        PairKind::Head => "head",
        PairKind::Wrapped => "wrapped",
        PairKind::Both => "head and wrapped",
    }
}

fn witness_line(w: &WitnessPair, d: u64) -> String {
    format!(
        "witness: ({}, {}) {} pair at distance {d}",
        w.low_head,
        w.high_head,
        kind_name(w.kind)
    )
}

fn gap_witness_line(w: &WitnessPair, delta: u64) -> String {
    format!(
        "witness: ({}, {}) consecutive pair at gap {delta}",
        w.low_head, w.high_head
    )
}

fn oracle_line(confirmed: Option<(u64, u64)>, d: u64, consecutive: bool) -> String {
    match confirmed {
        Some((a, b)) if consecutive => {
            format!("oracle: ({a}, {b}) confirmed consecutive primes at gap {d}")
        }
        Some((a, b)) => format!("oracle: ({a}, {b}) confirmed prime pair at distance {d}"),
        None => "oracle: no pair inside the primality window".to_string(),
    }
}

fn witness_json(w: &WitnessPair) -> serde_json::Value {
    serde_json::json!({
        "low": w.low_head,
        "high": w.high_head,
        "kind": kind_name(w.kind),
        "consecutive": w.consecutive,
    })
}

/// Walks the natural recursion chain up to `max_prime`, checking every
/// cross-module invariant against the brute-force oracle.
fn verify(max_prime: u64, budget: &Budget) -> Result<(), Failure> {
    let fail = |msg: String| Failure::Domain(anyhow!("verify failed: {msg}"));

    let mut h = Hydra::root();
    if h.next_prime()? != 2 {
        return Err(fail("root next_prime is not 2".into()));
    }
    println!("ok: root next_prime = 2");

    let chain = primes::primes_upto(max_prime)?;
    for &p in &chain {
        h = h.recurse(budget)?;
        let name = render::hydra_name(&h);
        if h.primes().last() != Some(&p) {
            return Err(fail(format!("{name}: recursion skipped prime {p}")));
        }
        let k = h.k()?;
        let p_next = h.next_prime()?;
        if p_next != primes::next_prime_after(p) {
            return Err(fail(format!(
                "{name}: next_prime {p_next} != oracle {}",
                primes::next_prime_after(p)
            )));
        }

        // Primality window: alive heads in (1, p'^2) are exactly the primes
        // there, as far as the table reaches.
        let bound = p_next.saturating_mul(p_next).min(k + 1);
        let alive = h.heads(Selector::Alive)?;
        let window: Vec<u64> = alive.iter().copied().filter(|&x| 1 < x && x < bound).collect();
        let oracle: Vec<u64> = primes::primes_upto(bound - 1)?
            .into_iter()
            .filter(|&q| q > p)
            .collect();
        if window != oracle {
            return Err(fail(format!("{name}: primality window mismatch")));
        }

        let report = counting::report(&h);
        if BigUint::from(alive.len() as u64) != report.k1 {
            return Err(fail(format!("{name}: alive count != k1")));
        }

        let gaps = metrics::wheeldiff(&h)?;
        if gaps.iter().map(|g| g.value).sum::<u64>() != k {
            return Err(fail(format!("{name}: wheeldiff does not sum to k")));
        }

        let mut twin_note = String::new();
        if let Some(k2) = &report.k2_twin {
            let pairs = metrics::count_pairs(&h, 2)?;
            if &BigUint::from(pairs.len() as u64) != k2 {
                return Err(fail(format!("{name}: twin pair count != k2")));
            }
            let in_window: Vec<(u64, u64)> = pairs
                .iter()
                .filter(|q| q.low > 1 && q.high < bound && q.high == q.low + 2)
                .map(|q| (q.low, q.high))
                .collect();
            let oracle_twins: Vec<(u64, u64)> = primes::gap_pairs_upto(bound - 1, 2, false)?
                .into_iter()
                .filter(|&(a, _)| a > p)
                .collect();
            if in_window != oracle_twins {
                return Err(fail(format!("{name}: twin window mismatch")));
            }
            twin_note = format!(" k2 = {k2}");
        }

        println!(
            "ok: {name} k = {k} k1 = {} next_prime = {p_next}{twin_note}",
            report.k1
        );
    }
    println!("verify: all checks passed for primes up to {max_prime}");
    Ok(())
}
