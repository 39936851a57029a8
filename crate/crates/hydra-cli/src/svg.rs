//! SVG wheel diagrams: each hydra becomes a ring of arc segments, one per
//! snake, alive in green and dead in gray.
//!
//! Angle 0 sits at twelve o'clock and heads advance clockwise. The sorted
//! layout places head h at angle 2π(h−1)/k; the recursive layout orders a
//! ring's segments by ancestry, keeping every snake's children grouped
//! under their parent in the next ring. The twins highlight strokes the
//! members of distance-2 pairs red; a pair whose one member was freshly
//! killed by the ring's last prime shows that member in dark gray with a
//! cyan-stroked surviving partner.

use std::f64::consts::PI;
use std::fmt::Write as _;

use hydra_core::error::{Error, Result};
use hydra_core::metrics;
use hydra_core::{Hydra, Snake};

/// Spoke ceiling for the outermost ring, beyond which the drawing would
/// degenerate into an unreadable smear.
pub const MAX_SPOKES: u64 = 10_000;

const VIEW: f64 = 1000.0;
const CENTER: f64 = 500.0;
const R_MIN: f64 = 120.0;
const R_MAX: f64 = 440.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    Sorted,
    Recursive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Highlight {
    None,
    Twins,
}

#[derive(Debug, Clone, Copy)]
pub struct WheelStyle {
    pub layout: Layout,
    pub highlight: Highlight,
}

fn point(theta: f64, r: f64) -> (f64, f64) {
    (CENTER + r * theta.sin(), CENTER - r * theta.cos())
}

/// Appends arc commands from θ0 to θ1 at radius r, splitting spans of half
/// a turn or more so the endpoints never coincide.
fn arc_path(d: &mut String, theta0: f64, theta1: f64, r: f64, clockwise: bool) {
    let (from, to) = if clockwise { (theta0, theta1) } else { (theta1, theta0) };
    let span = (theta1 - theta0).abs();
    let steps = if span >= PI { 2 } else { 1 };
    let sweep = i32::from(clockwise);
    for i in 1..=steps {
        let t = from + (to - from) * i as f64 / steps as f64;
        let (x, y) = point(t, r);
        let _ = write!(d, " A {r:.2} {r:.2} 0 0 {sweep} {x:.2} {y:.2}");
    }
}

fn segment_path(theta0: f64, theta1: f64, r_in: f64, r_out: f64) -> String {
    let (x0, y0) = point(theta0, r_out);
    let mut d = format!("M {x0:.2} {y0:.2}");
    arc_path(&mut d, theta0, theta1, r_out, true);
    let (x1, y1) = point(theta1, r_in);
    let _ = write!(d, " L {x1:.2} {y1:.2}");
    arc_path(&mut d, theta0, theta1, r_in, false);
    d.push_str(" Z");
    d
}

/// Position of a head on the recursive ring: mixed-radix ancestry digits,
/// most significant first, so children stay grouped under their parent.
fn recursive_position(head: u64, primes: &[u64]) -> u64 {
    let mut pos = 0u64;
    let mut k_prev = 1u64;
    for &p in primes {
        let digit = ((head - 1) / k_prev) % p;
        pos = pos * p + digit;
        k_prev *= p;
    }
    pos
}

struct RingPaint {
    /// Heads of alive members of distance-2 pairs (stroked red).
    pair_members: Vec<u64>,
    /// Freshly killed heads that break a pair (filled dark gray).
    half_dead: Vec<u64>,
    /// Their surviving partners (stroked cyan).
    half_partners: Vec<u64>,
}

fn twin_paint(h: &Hydra) -> Result<RingPaint> {
    let k = h.k()?;
    let snakes = h.snakes()?;
    let mut pair_members: Vec<u64> = metrics::count_pairs(h, 2)?
        .into_iter()
        .flat_map(|p| [p.low, p.high])
        .collect();
    pair_members.sort_unstable();
    pair_members.dedup();

    let mut half_dead = Vec::new();
    let mut half_partners = Vec::new();
    if let Some((&last, earlier)) = h.primes().split_last() {
        let freshly_dead = |s: &Snake| {
            !s.alive && s.head % last == 0 && earlier.iter().all(|&p| s.head % p != 0)
        };
        for s in snakes.iter().filter(|s| freshly_dead(s)) {
            for partner in [(s.head + k - 2 - 1) % k + 1, (s.head + 2 - 1) % k + 1] {
                if snakes[(partner - 1) as usize].alive {
                    half_dead.push(s.head);
                    half_partners.push(partner);
                }
            }
        }
        half_dead.sort_unstable();
        half_dead.dedup();
        half_partners.sort_unstable();
        half_partners.dedup();
    }
    Ok(RingPaint { pair_members, half_dead, half_partners })
}

/// Renders the rings (inner to outer) as one SVG document.
pub fn render_wheel(rings: &[Hydra], style: &WheelStyle) -> Result<String> {
    if rings.is_empty() {
        return Err(Error::InvalidArgument("wheel needs at least one ring"));
    }
    if style.layout == Layout::Recursive {
        for pair in rings.windows(2) {
            let (inner, outer) = (pair[0].primes(), pair[1].primes());
            if outer.len() != inner.len() + 1 || !outer.starts_with(inner) {
                return Err(Error::InvalidArgument(
                    "recursive layout needs each ring to extend the previous by one prime",
                ));
            }
        }
    }
    let outer_k = rings[rings.len() - 1].k()?;
    if outer_k > MAX_SPOKES {
        return Err(Error::BudgetExceeded {
            required: outer_k.into(),
            max_snakes: MAX_SPOKES,
        });
    }

    let thickness = (R_MAX - R_MIN) / rings.len() as f64;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {VIEW:.0} {VIEW:.0}\">"
    );
    let _ = writeln!(out, "  <title>hydra wheel</title>");

    for (ring_idx, h) in rings.iter().enumerate() {
        let k = h.k()?;
        let primes_attr: Vec<String> = h.primes().iter().map(u64::to_string).collect();
        let r_in = R_MIN + thickness * ring_idx as f64;
        let r_out = r_in + thickness;
        let paint = match style.highlight {
            Highlight::Twins => Some(twin_paint(h)?),
            Highlight::None => None,
        };
        let _ = writeln!(
            out,
            "  <g data-ring=\"{ring_idx}\" data-k=\"{k}\" data-primes=\"{}\">",
            primes_attr.join(",")
        );
        let seg_angle = 2.0 * PI / k as f64;
        let font = (0.8 * seg_angle * (r_in + r_out) / 2.0).clamp(2.0, 16.0);
        let mut labels = String::new();
        for s in h.snakes()? {
            let pos = match style.layout {
                Layout::Sorted => s.head - 1,
                Layout::Recursive => recursive_position(s.head, h.primes()),
            };
            let theta0 = seg_angle * pos as f64;
            let theta1 = theta0 + seg_angle;
            let mut fill = if s.alive { "green" } else { "gray" };
            let mut stroke = "black";
            let mut stroke_width = 0.4;
            if let Some(paint) = &paint {
                if s.alive && paint.pair_members.binary_search(&s.head).is_ok() {
                    stroke = "red";
                    stroke_width = 2.0;
                } else if s.alive && paint.half_partners.binary_search(&s.head).is_ok() {
                    stroke = "cyan";
                    stroke_width = 2.0;
                } else if paint.half_dead.binary_search(&s.head).is_ok() {
                    fill = "darkgray";
                }
            }
            let d = segment_path(theta0, theta1, r_in, r_out);
            let _ = writeln!(
                out,
                "    <path data-head=\"{}\" fill=\"{fill}\" stroke=\"{stroke}\" stroke-width=\"{stroke_width}\" d=\"{d}\"/>",
                s.head
            );
            let mid = (theta0 + theta1) / 2.0;
            let (lx, ly) = point(mid, (r_in + r_out) / 2.0);
            let _ = writeln!(
                labels,
                "    <text x=\"{lx:.2}\" y=\"{ly:.2}\" font-size=\"{font:.1}\" text-anchor=\"middle\" dominant-baseline=\"middle\">{}</text>",
                s.head
            );
        }
        out.push_str(&labels);

        // A lone sorted ring gets Sorenson-style annotations: the gap to the
        // next alive spoke inside the wheel, the first tail value outside.
        if rings.len() == 1 && style.layout == Layout::Sorted {
            let alive: Vec<u64> = h.heads(hydra_core::Selector::Alive)?;
            let step = if k % 2 == 0 { k } else { 2 * k };
            for (i, &head) in alive.iter().enumerate() {
                let gap = if i + 1 < alive.len() {
                    alive[i + 1] - head
                } else {
                    alive[0] + k - head
                };
                let mid = seg_angle * (head as f64 - 0.5);
                let (gx, gy) = point(mid, r_in - 26.0);
                let _ = writeln!(
                    out,
                    "    <text x=\"{gx:.2}\" y=\"{gy:.2}\" font-size=\"{font:.1}\" text-anchor=\"middle\" dominant-baseline=\"middle\" fill=\"dimgray\">{gap}</text>"
                );
                let (tx, ty) = point(mid, r_out + 22.0);
                let _ = writeln!(
                    out,
                    "    <text x=\"{tx:.2}\" y=\"{ty:.2}\" font-size=\"{font:.1}\" text-anchor=\"middle\" dominant-baseline=\"middle\" fill=\"dimgray\">{}</text>",
                    head + step
                );
            }
        }
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}
