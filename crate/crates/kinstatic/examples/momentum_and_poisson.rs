//! Momentum maps and the Poisson algebra: the momentum components of
//! each realization close on the extension's brackets with central
//! charges (m, I, f), and the generator vector fields are exactly their
//! Hamiltonian fields.
//!
//! Run with: `cargo run --example momentum_and_poisson`

use kinstatic::coadjoint::{coadjoint_act, from_chart, ChartPoint, OrbitClass};
use kinstatic::dynamics::{
    act_point, hamiltonian, momentum_map, momentum_observable, poisson_value, realization_report,
    vector_field, Generator,
};
use kinstatic::group::GroupElement;
use kinstatic::verify::canonical_orbit;

fn main() {
    let orbit = canonical_orbit(OrbitClass::Abs);
    println!("orbit: {:?}", orbit);
    println!(
        "realization report:\n{}",
        serde_json::to_string_pretty(&realization_report(&orbit)).unwrap()
    );

    let z = ChartPoint::Pq { p: 5.0, q: 4.0 };
    let (k, p, e) = momentum_map(&orbit, &z).unwrap();
    println!("\nmomentum at {z:?}: (k, p, e) = ({k}, {p}, {e})");

    // Equivariance: moving the point then reading the momentum equals
    // pushing the momentum through the coadjoint action.
    let g = GroupElement::new(0.5, -1.0, 2.0);
    let moved = act_point(&orbit, &g, &z).unwrap();
    let after_move = momentum_map(&orbit, &moved).unwrap();
    let mu = from_chart(&orbit.normalized(), &z).unwrap();
    let pushed = coadjoint_act(&g, &mu);
    println!("momentum after moving the point:   {after_move:?}");
    println!(
        "coadjoint push of the momentum:    ({}, {}, {})",
        pushed.k, pushed.p, pushed.e
    );

    // Central charges per class.
    println!("\ncentral charges ({{K,P}}, {{K,E}}, {{P,E}}) vs (m, I, f):");
    for class in OrbitClass::ALL {
        if class == OrbitClass::Fss0 {
            println!("  FSS_0  trivial (point orbit)");
            continue;
        }
        let orbit = canonical_orbit(class);
        let mu_k = momentum_observable(&orbit, Generator::K).unwrap();
        let mu_p = momentum_observable(&orbit, Generator::P).unwrap();
        let mu_e = momentum_observable(&orbit, Generator::E).unwrap();
        let charges = (
            poisson_value(&mu_k, &mu_p).unwrap(),
            poisson_value(&mu_k, &mu_e).unwrap(),
            poisson_value(&mu_p, &mu_e).unwrap(),
        );
        let (m, f, i) = orbit.mfi();
        println!(
            "  {:<6} charges {:?}  expected ({m}, {i}, {f})",
            class.to_string(),
            charges
        );
    }

    // Vector fields per generator on the fully invariant orbit.
    let orbit = canonical_orbit(OrbitClass::Abs);
    println!("\ngenerator vector fields on the (p, q) chart:");
    for gen in Generator::ALL {
        let (dp, dq) = vector_field(&orbit, gen).unwrap();
        println!("  D({gen}) = ({dp}) d/dp + ({dq}) d/dq");
    }
    let h = hamiltonian(&orbit).unwrap();
    println!(
        "hamiltonian: H = ({})p + ({})q + ({})",
        h.alpha, h.beta, h.gamma
    );
}
