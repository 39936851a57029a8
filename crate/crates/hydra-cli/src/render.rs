//! R-flavored text rendering: hydra listings, named vectors, distance
//! matrices, histogram tables, construction plans, counts, and density
//! reports.
//!
//! The listing layout follows R's `cat` with tab separators: header fields
//! are separated by two tabs expanded at a tab stop of 8, numeric columns
//! are right-aligned to the widest number on display, and named vectors
//! print their label line above their value line, every element padded to
//! its column width with a trailing space closing the line.

use std::collections::BTreeMap;

use hydra_core::construct::ConstructionPlan;
use hydra_core::counting::{self, CountReport};
use hydra_core::metrics::{DensityReport, DistanceTable, GapEntry, Pair, PairKind};
use hydra_core::primes;
use hydra_core::{Hydra, Result, Selector};

/// Expands tabs against a fixed tab stop, R/terminal style.
pub fn expand_tabs(s: &str, tabstop: usize) -> String {
    let mut out = String::with_capacity(s.len());
    let mut col = 0usize;
    for ch in s.chars() {
        if ch == '\t' {
            let next = (col / tabstop + 1) * tabstop;
            out.extend(std::iter::repeat_n(' ', next - col));
            col = next;
        } else {
            out.push(ch);
            col += 1;
        }
    }
    out
}

/// How to print a hydra listing.
#[derive(Debug, Clone)]
pub struct ListingOptions {
    pub selector: Selector,
    /// Tail values shown per snake row.
    pub tail_count: usize,
    /// Print the `H(...)` name line and the P/k header lines.
    pub header: bool,
    /// Mark the members of head-distance pairs at this distance with a
    /// `pair-> ` margin (other rows get a blank margin of equal width).
    pub mark_pairs: Option<u64>,
}

impl Default for ListingOptions {
    fn default() -> Self {
        ListingOptions {
            selector: Selector::Alive,
            tail_count: 4,
            header: true,
            mark_pairs: None,
        }
    }
}

/// The `H(2, 7, 3)` name line.
pub fn hydra_name(h: &Hydra) -> String {
    let list: Vec<String> = h.primes().iter().map(u64::to_string).collect();
    format!("H({})", list.join(", "))
}

/// The two header lines: `P(H)/p(H)/p'(H)` and `k/k1/k2`. k and k1 describe
/// the full table even for a selection view. p' is the next prime by first
/// candidate for a full hydra; a selection reports the next prime after
/// max(P) instead, as its own candidates need not contain the next prime.
fn header_lines(h: &Hydra) -> Result<Vec<String>> {
    let primes_list: Vec<String> = h.primes().iter().map(u64::to_string).collect();
    let p_last = match h.primes().last() {
        Some(p) => p.to_string(),
        None => "NA".to_string(),
    };
    let p_next = if h.is_selection() {
        primes::next_prime_after(h.primes().iter().copied().max().unwrap_or(0))
    } else {
        h.next_prime()?
    };
    let k2 = match counting::twin_count(h.primes()) {
        Ok(v) => v.to_string(),
        Err(_) => "NA".to_string(),
    };
    Ok(vec![
        expand_tabs(
            &format!(
                " P(H) = {{{}}} \t\t p(H) = {} \t\t p'(H) = {}",
                primes_list.join(", "),
                p_last,
                p_next
            ),
            8,
        ),
        expand_tabs(
            &format!(
                " k(H) = {} \t\t k1(H) = {} \t\t k2(H) = {}",
                h.k()?,
                h.alive_len()?,
                k2
            ),
            8,
        ),
    ])
}

/// Renders a hydra listing: optional name/header lines, then one row per
/// snake in view: `s(<index>) = <head> | <tails> ...` with all numbers
/// right-aligned to the widest number on display. Tails step by the
/// wavelength — doubled when it is odd, so the root snake lists 3 5 …
pub fn render_hydra_text(h: &Hydra, opts: &ListingOptions) -> Result<String> {
    let k = h.k()?;
    let step = if k % 2 == 0 { k } else { 2 * k };

    let snakes: Vec<hydra_core::Snake> = match opts.selector {
        Selector::All => h.selected()?.collect(),
        Selector::Alive => h.selected()?.filter(|s| s.alive).collect(),
        Selector::Twins => {
            let members = h.heads(Selector::Twins)?;
            h.selected()?
                .filter(|s| members.binary_search(&s.head).is_ok())
                .collect()
        }
    };

    let marked: Vec<u64> = match opts.mark_pairs {
        None => Vec::new(),
        Some(d) => {
            let mut m: Vec<u64> = hydra_core::metrics::count_pairs(h, d)?
                .into_iter()
                .filter(|p: &Pair| matches!(p.kind, PairKind::Head | PairKind::Both))
                .flat_map(|p| [p.low, p.high])
                .collect();
            m.sort_unstable();
            m.dedup();
            m
        }
    };

    let width = snakes
        .iter()
        .flat_map(|s| {
            std::iter::once(s.head)
                .chain((1..=opts.tail_count as u64).map(move |i| s.head + i * step))
        })
        .map(|n| n.to_string().len())
        .max()
        .unwrap_or(1);

    let mut out = String::new();
    if opts.header {
        out.push_str(&hydra_name(h));
        out.push('\n');
        for line in header_lines(h)? {
            out.push_str(&line);
            out.push('\n');
        }
    }
    for s in &snakes {
        if opts.mark_pairs.is_some() {
            out.push_str(if marked.binary_search(&s.head).is_ok() {
                "pair-> "
            } else {
                "       "
            });
        }
        let tails: Vec<String> = (1..=opts.tail_count as u64)
            .map(|i| format!("{:>width$}", s.head + i * step))
            .collect();
        out.push_str(&format!(
            "s({}) = {:>width$} | {}...\n",
            h.index_display(s.head),
            s.head,
            tails.iter().map(|t| format!("{t} ")).collect::<String>(),
        ));
    }
    Ok(out)
}

/// R named-vector print: the label line above the value line. Every entry
/// is right-aligned to one common width — the widest label or value — and
/// followed by a single space, so each line ends with a trailing space.
pub fn render_named_vector(labels: &[String], values: &[String]) -> String {
    let w = labels
        .iter()
        .chain(values)
        .map(String::len)
        .max()
        .unwrap_or(0);
    let mut line1 = String::new();
    let mut line2 = String::new();
    for (l, v) in labels.iter().zip(values) {
        line1.push_str(&format!("{l:>w$} "));
        line2.push_str(&format!("{v:>w$} "));
    }
    format!("{line1}\n{line2}\n")
}

/// The `h(H)` view: alive heads labeled by recursive index, ascending.
pub fn render_heads_vector(h: &Hydra) -> Result<String> {
    let heads = h.heads(Selector::Alive)?;
    let labels: Vec<String> = heads.iter().map(|&x| h.index_display(x)).collect();
    let values: Vec<String> = heads.iter().map(u64::to_string).collect();
    Ok(render_named_vector(&labels, &values))
}

/// The `f(H)` view: first candidates of the alive snakes, ascending by
/// candidate — the first entry is the next prime.
pub fn render_candidates_vector(h: &Hydra) -> Result<String> {
    let cands = h.first_candidates()?;
    let labels: Vec<String> = cands
        .iter()
        .map(|(idx, _)| if idx.is_empty() { "1".to_string() } else { idx.clone() })
        .collect();
    let values: Vec<String> = cands.iter().map(|(_, c)| c.to_string()).collect();
    Ok(render_named_vector(&labels, &values))
}

/// The `wheeldiff(H)` named vector of consecutive gaps.
pub fn render_gap_vector(entries: &[GapEntry]) -> String {
    let labels: Vec<String> = entries.iter().map(|e| e.label.clone()).collect();
    let values: Vec<String> = entries.iter().map(|e| e.value.to_string()).collect();
    render_named_vector(&labels, &values)
}

/// R matrix print of a distance table: row labels left-aligned in their own
/// column, cells right-aligned, no trailing spaces.
pub fn render_dist_matrix(t: &DistanceTable) -> String {
    let label_w = t.labels.iter().map(String::len).max().unwrap_or(0);
    let col_ws: Vec<usize> = t
        .labels
        .iter()
        .enumerate()
        .map(|(j, l)| {
            t.matrix
                .iter()
                .map(|row| row[j].to_string().len())
                .max()
                .unwrap_or(0)
                .max(l.len())
        })
        .collect();
    let mut out = String::new();
    out.push_str(&" ".repeat(label_w));
    for (l, w) in t.labels.iter().zip(&col_ws) {
        out.push_str(&format!(" {l:>w$}"));
    }
    out.push('\n');
    for (i, row) in t.matrix.iter().enumerate() {
        out.push_str(&format!("{:<label_w$}", t.labels[i]));
        for (v, w) in row.iter().zip(&col_ws) {
            out.push_str(&format!(" {v:>w$}"));
        }
        out.push('\n');
    }
    out
}

/// R table print of a gap histogram: a leading blank line, then the
/// named-vector layout of gap → count.
pub fn render_histogram_table(hist: &BTreeMap<u64, u64>) -> String {
    let labels: Vec<String> = hist.keys().map(u64::to_string).collect();
    let values: Vec<String> = hist.values().map(u64::to_string).collect();
    format!("\n{}", render_named_vector(&labels, &values))
}

/// R vector print of a prime list: `[1] 2 3 5` or `integer(0)` when empty.
pub fn render_prime_vector(primes_list: &[u64]) -> String {
    if primes_list.is_empty() {
        return "integer(0)".to_string();
    }
    let items: Vec<String> = primes_list.iter().map(u64::to_string).collect();
    format!("[1] {}", items.join(" "))
}

/// R list print of a construction plan: the artificial primes (ascending
/// for display; the stored split order may differ) and the natural fill.
pub fn render_plan(plan: &ConstructionPlan) -> String {
    let mut artificial = plan.artificial.clone();
    artificial.sort_unstable();
    format!(
        "$artificial\n{}\n\n$natural\n{}\n",
        render_prime_vector(&artificial),
        render_prime_vector(&plan.natural_fill),
    )
}

/// Count report block; `NA` where the twin closed form does not apply.
pub fn render_counts(report: &CountReport) -> String {
    let primes_list: Vec<String> = report.primes.iter().map(u64::to_string).collect();
    let k2 = report
        .k2_twin
        .as_ref()
        .map_or("NA".to_string(), |v| v.to_string());
    let mut out = format!(
        "P(H) = {{{}}}\n k(H) = {}\nk1(H) = {}\nk2(H) = {}\n",
        primes_list.join(", "),
        report.k,
        report.k1,
        k2
    );
    if let Some(bound) = &report.pair_bound {
        out.push_str(&format!("pair bound = {bound}\n"));
    }
    out
}

/// Formats with `sig` significant digits, plain decimal notation.
pub fn fmt_sig(x: f64, sig: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    let prec = (sig as i32 - 1 - exp).max(0) as usize;
    format!("{x:.prec$}")
}

/// Density block: exact rationals with 12-significant-digit decimals, the
/// smooth reference values beside them (reported, never asserted), and the
/// log-primorial summary.
pub fn render_density(r: &DensityReport) -> String {
    let primes_list: Vec<String> = r.primes.iter().map(u64::to_string).collect();
    let dec = |q: &hydra_core::BigRational| {
        let n: f64 = q.numer().to_string().parse().unwrap_or(f64::NAN);
        let d: f64 = q.denom().to_string().parse().unwrap_or(f64::NAN);
        fmt_sig(n / d, 12)
    };
    format!(
        concat!(
            "P(H) = {{{primes}}}\nn = {n}\n",
            "prime density   prod (p-1)/p   = {pd_exact} = {pd}\n",
            "twin relative   prod (p-2)/(p-1) = {tr_exact} = {tr}\n",
            "twin density    prod (p-2)/p   = {td_exact} = {td}\n",
            "reference       2/ln n         = {rp}\n",
            "reference       4/ln^2 n       = {rt}\n",
            "p^ = ln k = {p_hat}\n",
            "e^ = k^(1/max P) = {e_hat}\n",
        ),
        primes = primes_list.join(", "),
        n = r.n,
        pd_exact = r.prime_density,
        pd = dec(&r.prime_density),
        tr_exact = r.twin_relative,
        tr = dec(&r.twin_relative),
        td_exact = r.twin_density,
        td = dec(&r.twin_density),
        rp = fmt_sig(r.ref_prime, 12),
        rt = fmt_sig(r.ref_twin, 12),
        p_hat = fmt_sig(r.p_hat, 12),
        e_hat = fmt_sig(r.e_hat, 12),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use hydra_core::Budget;

    fn natural(primes: &[u64]) -> Hydra {
        Hydra::natural(primes, &Budget::default()).unwrap()
    }

    #[test]
    fn tab_expansion() {
        assert_eq!(expand_tabs("a\tb", 8), "a       b");
        assert_eq!(expand_tabs("12345678\tb", 8), "12345678        b");
        assert_eq!(expand_tabs("\t\tx", 8), "                x");
    }

    #[test]
    fn root_row() {
        let opts = ListingOptions {
            tail_count: 2,
            header: false,
            ..ListingOptions::default()
        };
        assert_eq!(
            render_hydra_text(&Hydra::root(), &opts).unwrap(),
            "s(1) = 1 | 3 5 ...\n"
        );
    }

    #[test]
    fn heads_and_candidates_vectors() {
        let h = natural(&[2, 3]);
        assert_eq!(render_heads_vector(&h).unwrap(), "1.1 1.2 \n  1   5 \n");
        assert_eq!(
            render_candidates_vector(&h).unwrap(),
            "1.2 1.1 \n  5   7 \n"
        );
    }

    #[test]
    fn gap_vector_layout() {
        let entries = hydra_core::metrics::wheeldiff(&natural(&[2, 3])).unwrap();
        assert_eq!(
            render_gap_vector(&entries),
            "1.2-1.1 1.1-1.2 \n      4       2 \n"
        );
    }

    #[test]
    fn matrix_layout() {
        let t = hydra_core::metrics::wheeldist(&natural(&[2, 3]), &Budget::default()).unwrap();
        assert_eq!(render_dist_matrix(&t), "    1.1 1.2\n1.1   0   2\n1.2   4   0\n");
    }

    #[test]
    fn table_layout() {
        let hist = hydra_core::metrics::gap_histogram(&natural(&[5, 7])).unwrap();
        assert_eq!(render_histogram_table(&hist), "\n 1  2  3 \n15  7  2 \n");
    }

    #[test]
    fn plan_layout() {
        let plan = hydra_core::construct::polignac_plan(
            6,
            hydra_core::construct::Mode::GapEfficient,
        )
        .unwrap();
        assert_eq!(render_plan(&plan), "$artificial\n[1] 2 5 7\n\n$natural\n[1] 3\n");

        let plan = hydra_core::construct::maillet_plan(2).unwrap();
        assert_eq!(render_plan(&plan), "$artificial\n[1] 2 3\n\n$natural\ninteger(0)\n");
    }

    #[test]
    fn significant_digits() {
        assert_eq!(fmt_sig(0.5333333333333333, 12), "0.533333333333");
        assert_eq!(fmt_sig(10.310287924748, 12), "10.3102879247");
        assert_eq!(fmt_sig(0.0, 12), "0");
    }

    #[test]
    fn counts_block() {
        let report = hydra_core::counting::report_for_primes(&[2, 3, 5]);
        assert_eq!(
            render_counts(&report),
            "P(H) = {2, 3, 5}\n k(H) = 30\nk1(H) = 8\nk2(H) = 3\n"
        );
        let report = hydra_core::counting::report_for_primes(&[2, 7]);
        assert!(render_counts(&report).contains("k2(H) = NA\n"));
    }
}
