//! Hamiltonian flows on the orbit charts, printed as the same CSV the
//! CLI emits. All motions are linear in time; the numeric integrators
//! exist as an independent route and agree with the closed form to
//! machine precision.
//!
//! Run with: `cargo run --example flow_trajectories`

use kinstatic::coadjoint::{ChartPoint, OrbitClass};
use kinstatic::dynamics::{flow, sample_flow, FlowMethod};
use kinstatic::verify::canonical_orbit;

fn main() {
    // Accelerated boosted massive particle: dp/dt = f, dq/dt = u.
    let orbit = canonical_orbit(OrbitClass::Abs);
    let z0 = ChartPoint::Pq { p: 0.0, q: 0.0 };
    println!("ABS trajectory (t = 2, 4 steps, exact):");
    let (c1, c2) = orbit.chart_kind().coord_names();
    println!("t,{c1},{c2},H");
    for row in sample_flow(&orbit, &z0, 2.0, 4, FlowMethod::Exact).unwrap() {
        println!("{},{},{},{}", row.t, row.c1, row.c2, row.h);
    }

    // The free boosted massless system lives on an (e, tau) chart where
    // the clock coordinate advances at unit rate.
    let orbit = canonical_orbit(OrbitClass::Bfs0);
    let z0 = ChartPoint::ETau { e: 5.0, tau: 1.0 };
    println!("\nBFS_0 trajectory (t = 3, 3 steps, exact):");
    let (c1, c2) = orbit.chart_kind().coord_names();
    println!("t,{c1},{c2},H");
    for row in sample_flow(&orbit, &z0, 3.0, 3, FlowMethod::Exact).unwrap() {
        println!("{},{},{},{}", row.t, row.c1, row.c2, row.h);
    }

    // Numeric integrators agree with the closed form on constant fields.
    println!("\nexact vs numeric endpoints per class (t = 1.7, 13 steps):");
    for class in OrbitClass::ALL {
        if class == OrbitClass::Fss0 {
            continue;
        }
        let orbit = canonical_orbit(class);
        let z0 = ChartPoint::from_coords(orbit.chart_kind(), 0.25, -1.5);
        let exact = flow(&orbit, &z0, 1.7, 13, FlowMethod::Exact).unwrap();
        let euler = flow(&orbit, &z0, 1.7, 13, FlowMethod::Euler).unwrap();
        let rk4 = flow(&orbit, &z0, 1.7, 13, FlowMethod::Rk4).unwrap();
        println!(
            "  {:<6} exact {:?}  |euler - exact| = {:e}  |rk4 - exact| = {:e}",
            class.to_string(),
            exact,
            euler.distance_inf(&exact),
            rk4.distance_inf(&exact),
        );
    }
}
