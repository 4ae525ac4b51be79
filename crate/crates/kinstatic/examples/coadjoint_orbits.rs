//! Coadjoint geometry of the dual: the action, the Kirillov form, and
//! the classification of sample points into the eight orbit classes
//! with their canonical charts.
//!
//! Run with: `cargo run --example coadjoint_orbits`

use kinstatic::coadjoint::{
    classify, coadjoint_act, from_chart, kirillov, kirillov_rank, to_chart, DualVector,
};
use kinstatic::group::GroupElement;

fn main() {
    let mu = DualVector::new(1.0, 2.0, 3.0, 4.0, 5.0, 6.0);
    let g = GroupElement::new(2.0, 3.0, 1.0);

    println!("mu          = {mu:?}");
    println!("Ad*_g mu    = {:?} (m, f, I fixed)", coadjoint_act(&g, &mu));

    println!("\nkirillov form at mu:");
    for row in kirillov(&mu) {
        println!("  {row:?}");
    }
    println!("rank = {}", kirillov_rank(&kirillov(&mu), 0.0));

    // One representative per zero pattern of (m, f, I).
    let samples = [
        DualVector::new(1.0, 2.0, 3.0, 4.0, 5.0, 6.0),
        DualVector::new(1.0, 2.0, 0.0, 4.0, 5.0, 6.0),
        DualVector::new(1.0, 0.0, 3.0, 4.0, 5.0, 6.0),
        DualVector::new(1.0, 0.0, 0.0, 4.0, 5.0, 7.0),
        DualVector::new(0.0, 2.0, 1.0, 5.0, 4.0, -6.0),
        DualVector::new(0.0, 2.0, 0.0, 5.0, 4.0, -6.0),
        DualVector::new(0.0, 0.0, 2.0, 6.0, 5.0, 1.0),
        DualVector::new(0.0, 0.0, 0.0, 4.0, 5.0, 6.0),
    ];

    println!("\nclassification of eight sample points:");
    for mu in samples {
        let orbit = classify(&mu, 1e-12);
        let chart = to_chart(&orbit, &mu).unwrap();
        println!(
            "  {:<6} dim {}  invariants {:?}  chart {:?}",
            orbit.class().to_string(),
            orbit.dim(),
            orbit.invariant_values(),
            chart,
        );
        // the chart embeds back to the same dual point
        let back = from_chart(&orbit, &chart).unwrap();
        assert!(back.distance_inf(&mu) <= 1e-12);
    }

    // Reports serialize to the JSON shape the CLI emits.
    let orbit = classify(&samples[4], 1e-12);
    println!(
        "\nBSF orbit report:\n{}",
        serde_json::to_string_pretty(&orbit.report()).unwrap()
    );
}
