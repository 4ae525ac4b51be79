//! Kernel of the point action per orbit class: which (v, x, t)
//! directions act trivially on each chart.
//!
//! Every two-dimensional chart receives its action through a 2x3
//! coefficient matrix, so the kernel is at least one-dimensional; the
//! fixed-point class is killed by the whole group. This is why none of
//! the chart realizations is faithful in the ordinary sense.
//!
//! Run with: `cargo run --example kernel_audit`

use kinstatic::coadjoint::{ChartKind, ChartPoint, OrbitClass};
use kinstatic::dynamics::{act_point, action_kernel};
use kinstatic::group::GroupElement;
use kinstatic::verify::canonical_orbit;

fn main() {
    println!("action kernels (directions in (v, x, t) space):");
    for class in OrbitClass::ALL {
        let orbit = canonical_orbit(class);
        let report = action_kernel(&orbit);
        println!("  {:<6} dim {}", class.to_string(), report.dim);
        for basis in &report.basis {
            println!(
                "         [{:+.4}, {:+.4}, {:+.4}]",
                basis[0], basis[1], basis[2]
            );
        }

        // demonstrate triviality on a sample point
        if orbit.chart_kind() != ChartKind::Point {
            let z = ChartPoint::from_coords(orbit.chart_kind(), 0.75, -1.25);
            for basis in &report.basis {
                let g = GroupElement::new(basis[0], basis[1], basis[2]);
                let moved = act_point(&orbit, &g, &z).unwrap();
                assert!(moved.distance_inf(&z) <= 1e-12);
            }
        }
    }

    // The fully invariant massive class: the kernel direction mixes a
    // boost v = a·t with a compensating translation x = -u·t.
    let abs = canonical_orbit(OrbitClass::Abs);
    let report = action_kernel(&abs);
    println!(
        "\nABS kernel direction is proportional to (a, -u, 1) = (2, -3, 1): {:?}",
        report.basis[0]
    );

    println!(
        "\nnote: with a 1-dimensional kernel on every chart, no realization is\n\
         faithful under the ordinary definition; the audit records the kernels\n\
         rather than asserting a faithfulness claim."
    );
}
