//! Byte-exact golden checks for every pinned listing, vector, matrix,
//! table, and plan rendering.

use hydra_cli::render::{self, ListingOptions};
use hydra_core::{construct, counting, metrics, Budget, Hydra, Selector};

fn natural(primes: &[u64]) -> Hydra {
    Hydra::natural(primes, &Budget::default()).unwrap()
}

fn listing(h: &Hydra, opts: &ListingOptions) -> String {
    render::render_hydra_text(h, opts).unwrap()
}

#[test]
fn root_row() {
    let opts = ListingOptions { tail_count: 2, header: false, ..ListingOptions::default() };
    assert_eq!(listing(&Hydra::root(), &opts), include_str!("goldens/root.txt"));
}

#[test]
fn h23_alive_listing() {
    let h = natural(&[2, 3]);
    assert_eq!(
        listing(&h, &ListingOptions::default()),
        include_str!("goldens/h23_alive.txt")
    );
}

#[test]
fn h23_all_listing() {
    let h = natural(&[2, 3]);
    let opts = ListingOptions { selector: Selector::All, ..ListingOptions::default() };
    assert_eq!(listing(&h, &opts), include_str!("goldens/h23_all.txt"));
}

#[test]
fn h235_auto_print() {
    let h = natural(&[2, 3, 5]);
    let opts = ListingOptions { tail_count: 6, ..ListingOptions::default() };
    assert_eq!(listing(&h, &opts), include_str!("goldens/h235_listing.txt"));
}

#[test]
fn h27_marked_listing() {
    let h = natural(&[2, 7]);
    let opts = ListingOptions {
        tail_count: 2,
        mark_pairs: Some(12),
        ..ListingOptions::default()
    };
    assert_eq!(listing(&h, &opts), include_str!("goldens/h27_marked.txt"));
}

#[test]
fn h273_selection_listing() {
    let h = natural(&[2, 7, 3]).subscript(&["1.1", "1.6"]).unwrap();
    let opts = ListingOptions { tail_count: 10, ..ListingOptions::default() };
    assert_eq!(listing(&h, &opts), include_str!("goldens/h273_selection.txt"));
}

#[test]
fn h23_vectors() {
    let h = natural(&[2, 3]);
    assert_eq!(
        render::render_heads_vector(&h).unwrap(),
        include_str!("goldens/h23_heads.txt")
    );
    assert_eq!(
        render::render_candidates_vector(&h).unwrap(),
        include_str!("goldens/h23_candidates.txt")
    );
    let gaps = metrics::wheeldiff(&h).unwrap();
    assert_eq!(
        render::render_gap_vector(&gaps),
        include_str!("goldens/h23_wheeldiff.txt")
    );
}

#[test]
fn h27_distance_matrix() {
    let h = natural(&[2, 7]);
    let t = metrics::wheeldist(&h, &Budget::default()).unwrap();
    assert_eq!(
        render::render_dist_matrix(&t),
        include_str!("goldens/h27_wheeldist.txt")
    );
}

#[test]
fn gap_histogram_tables() {
    for (primes, golden) in [
        (&[5u64, 7][..], include_str!("goldens/hist_57.txt")),
        (&[5, 7, 2][..], include_str!("goldens/hist_572.txt")),
        (&[5, 7, 2, 3][..], include_str!("goldens/hist_5723.txt")),
        (&[2, 3, 5, 7][..], include_str!("goldens/hist_2357.txt")),
    ] {
        let hist = metrics::gap_histogram(&natural(primes)).unwrap();
        assert_eq!(render::render_histogram_table(&hist), golden, "P = {primes:?}");
    }
}

#[test]
fn polignac_plan_print() {
    let plan = construct::polignac_plan(6, construct::Mode::GapEfficient).unwrap();
    assert_eq!(render::render_plan(&plan), include_str!("goldens/polignac6_plan.txt"));
}

#[test]
fn counts_block_matches_header_numbers() {
    let report = counting::report_for_primes(&[2, 7, 3]);
    assert_eq!(
        render::render_counts(&report),
        "P(H) = {2, 7, 3}\n k(H) = 42\nk1(H) = 12\nk2(H) = 5\n"
    );
}
