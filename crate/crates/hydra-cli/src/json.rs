//! JSON serialization of hydras and reports. Big integers travel as
//! decimal strings so arbitrary primorials survive the trip; parsing
//! rebuilds an equal hydra and re-validates the table against the prime
//! set.

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};

use hydra_core::counting::{self, CountReport};
use hydra_core::metrics::DensityReport;
use hydra_core::{Hydra, Snake};

#[derive(Debug, Serialize, Deserialize)]
pub struct SnakeDto {
    pub head: u64,
    pub index: String,
    pub alive: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CountsDto {
    pub k: String,
    pub k1: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k2_twin: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct HydraDto {
    pub primes: Vec<u64>,
    /// Decimal string: may exceed any machine word.
    pub wavelength: String,
    pub natural: bool,
    pub counts: CountsDto,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub snakes: Option<Vec<SnakeDto>>,
    /// Heads of the selected snakes, when the hydra is a selection view.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub selection: Option<Vec<u64>>,
}

impl From<&CountReport> for CountsDto {
    fn from(r: &CountReport) -> Self {
        CountsDto {
            k: r.k.to_string(),
            k1: r.k1.to_string(),
            k2_twin: r.k2_twin.as_ref().map(|v| v.to_string()),
        }
    }
}

pub fn hydra_to_dto(h: &Hydra) -> HydraDto {
    let snakes = h.is_materialized().then(|| {
        h.snakes()
            .expect("materialized")
            .iter()
            .map(|s| SnakeDto {
                head: s.head,
                index: h.index_display(s.head),
                alive: s.alive,
            })
            .collect()
    });
    let selection = h
        .is_selection()
        .then(|| h.selected().expect("materialized").map(|s| s.head).collect());
    HydraDto {
        primes: h.primes().to_vec(),
        wavelength: h.wavelength().to_string(),
        natural: h.is_natural(),
        counts: (&counting::report(h)).into(),
        snakes,
        selection,
    }
}

pub fn render_json(h: &Hydra) -> String {
    serde_json::to_string_pretty(&hydra_to_dto(h)).expect("hydra DTO serializes")
}

/// Rebuilds a hydra from its JSON form, re-validating the prime list, the
/// table shape and aliveness, the selection, and the wavelength string.
pub fn parse_hydra(text: &str) -> anyhow::Result<Hydra> {
    let dto: HydraDto = serde_json::from_str(text).context("malformed hydra JSON")?;
    let table: Option<Vec<Snake>> = dto.snakes.map(|v| {
        v.into_iter()
            .map(|s| Snake { head: s.head, alive: s.alive })
            .collect()
    });
    let selection: Option<Vec<u32>> = match dto.selection {
        None => None,
        Some(heads) => Some(
            heads
                .iter()
                .map(|&h| {
                    if h == 0 {
                        bail!("selection head 0 out of range");
                    }
                    Ok((h - 1) as u32)
                })
                .collect::<anyhow::Result<_>>()?,
        ),
    };
    let h = Hydra::from_parts(dto.primes, table, selection)?;
    if h.wavelength().to_string() != dto.wavelength {
        bail!(
            "wavelength {} does not match the prime set (expected {})",
            dto.wavelength,
            h.wavelength()
        );
    }
    Ok(h)
}

#[derive(Debug, Serialize)]
pub struct GapEntryDto {
    pub label: String,
    pub value: u64,
}

#[derive(Debug, Serialize)]
pub struct DistanceTableDto {
    pub labels: Vec<String>,
    pub matrix: Vec<Vec<u64>>,
}

#[derive(Debug, Serialize)]
pub struct DensityDto {
    pub primes: Vec<u64>,
    pub n: u64,
    pub prime_density: String,
    pub twin_relative: String,
    pub twin_density: String,
    pub ref_prime: f64,
    pub ref_twin: f64,
    pub p_hat: f64,
    pub e_hat: f64,
}

impl From<&DensityReport> for DensityDto {
    fn from(r: &DensityReport) -> Self {
        DensityDto {
            primes: r.primes.clone(),
            n: r.n,
            prime_density: r.prime_density.to_string(),
            twin_relative: r.twin_relative.to_string(),
            twin_density: r.twin_density.to_string(),
            ref_prime: r.ref_prime,
            ref_twin: r.ref_twin,
            p_hat: r.p_hat,
            e_hat: r.e_hat,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PlanDto {
    pub artificial: Vec<u64>,
    pub natural_fill: Vec<u64>,
    pub target: u64,
    pub mode: String,
}

impl From<&hydra_core::construct::ConstructionPlan> for PlanDto {
    fn from(p: &hydra_core::construct::ConstructionPlan) -> Self {
        PlanDto {
            artificial: p.artificial.clone(),
            natural_fill: p.natural_fill.clone(),
            target: p.target,
            mode: match p.mode {
                hydra_core::construct::Mode::Distance => "distance",
                hydra_core::construct::Mode::GapBrute => "gap_brute",
                hydra_core::construct::Mode::GapEfficient => "gap_efficient",
            }
            .to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hydra_core::Budget;

    #[test]
    fn round_trip_materialized() {
        let h = Hydra::natural(&[2, 7, 3], &Budget::default()).unwrap();
        let again = parse_hydra(&render_json(&h)).unwrap();
        assert_eq!(h, again);
    }

    #[test]
    fn round_trip_selection() {
        let h = Hydra::natural(&[2, 7, 3], &Budget::default())
            .unwrap()
            .subscript(&["1.1", "1.6"])
            .unwrap();
        let again = parse_hydra(&render_json(&h)).unwrap();
        assert_eq!(h, again);
    }

    #[test]
    fn round_trip_count_only() {
        let primes = hydra_core::primes::primes_first(15).unwrap();
        let h = Hydra::count_only(&primes).unwrap();
        let text = render_json(&h);
        assert!(text.contains("\"614889782588491410\""));
        assert!(!text.contains("snakes"));
        let again = parse_hydra(&text).unwrap();
        assert_eq!(h, again);
    }

    #[test]
    fn root_fields() {
        let text = render_json(&Hydra::root());
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["primes"].as_array().unwrap().len(), 0);
        assert_eq!(v["wavelength"], "1");
        assert_eq!(v["natural"], true);
        assert_eq!(v["snakes"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn h23_snake_array() {
        let h = Hydra::natural(&[2, 3], &Budget::default()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&render_json(&h)).unwrap();
        let snakes = v["snakes"].as_array().unwrap();
        assert_eq!(snakes.len(), 6);
        assert_eq!(
            snakes.iter().filter(|s| s["alive"] == true).count(),
            2
        );
        assert_eq!(v["counts"]["k2_twin"], "1");
    }

    #[test]
    fn tampering_is_rejected() {
        let h = Hydra::natural(&[2, 3], &Budget::default()).unwrap();
        let tampered = render_json(&h).replace("\"alive\": false", "\"alive\": true");
        assert!(parse_hydra(&tampered).is_err());

        let wrong_wavelength = render_json(&h).replace("\"wavelength\": \"6\"", "\"wavelength\": \"8\"");
        assert!(parse_hydra(&wrong_wavelength).is_err());
    }
}
