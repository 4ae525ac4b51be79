//! Walk the algebra registry: list the tables, dump one as JSON, and
//! check the Jacobi identity on all of them.
//!
//! Run with: `cargo run --example algebra_registry`

use kinstatic::algebra::{registry_get, AlgebraName, AlgebraParams, AlgebraVector};

fn main() {
    println!("registry identifiers:");
    for name in AlgebraName::ALL {
        println!("  {name}");
    }

    // Tables with relativistic or oscillating brackets need parameters.
    let params = AlgebraParams::new(Some(1.0), Some(1.0));

    println!("\njacobi check (c_vel = omega = 1):");
    for name in AlgebraName::ALL {
        let table = registry_get(name, &params).expect("params cover every table");
        let report = table.check_jacobi(1e-9);
        println!(
            "  {:<14} dim {}  residual {:e}  {}",
            name.to_string(),
            table.dim(),
            report.max_residual,
            if report.pass { "pass" } else { "FAIL" }
        );
    }

    // The abelian table extends to six dimensions with three central
    // generators; [K,P] = M, [K,E] = Y, [P,E] = F.
    let ext = registry_get(AlgebraName::StaticExt, &AlgebraParams::default()).unwrap();
    println!(
        "\nextension table as JSON:\n{}",
        serde_json::to_string_pretty(&ext.dump()).unwrap()
    );

    // bch2 is exact on step-2 tables and refuses the others.
    let k = AlgebraVector::basis(6, kinstatic::algebra::ext_index::K);
    let p = AlgebraVector::basis(6, kinstatic::algebra::ext_index::P);
    let product = ext.bch2(&k, &p).unwrap();
    println!(
        "bch2(K, P) on the extension = {:?} (K + P + M/2)",
        product.coeffs()
    );

    let de_sitter = registry_get(AlgebraName::DeSitterPlus, &params).unwrap();
    let err = de_sitter
        .bch2(&AlgebraVector::basis(3, 0), &AlgebraVector::basis(3, 1))
        .unwrap_err();
    println!("bch2 on dS+ refuses: {err}");

    // Missing parameters are rejected up front.
    let err = registry_get(AlgebraName::Carroll, &AlgebraParams::default()).unwrap_err();
    println!("Carroll without c_vel: {err}");
}
