//! The extended group law and its cocycle algebra: c = c1 + c2, the
//! trivializing map b, and the BCH cross-check that ties the group
//! cocycle to the extension's brackets.
//!
//! Run with: `cargo run --example central_extension`

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use kinstatic::algebra::{registry_get, AlgebraName, AlgebraParams, AlgebraVector};
use kinstatic::group::{
    adjoint, b_map, coboundary_equivalent, cocycle, verify_cocycle_identity, CocycleChoice,
    CocycleKind, ExtGroupElement, GroupElement,
};

fn main() {
    let g = GroupElement::new(1.0, 2.0, 3.0);
    let h = GroupElement::new(4.0, 5.0, 6.0);

    println!("g = {g:?}");
    println!("h = {h:?}");
    println!("g * h = {:?} (componentwise sum)", g.compose(&h));

    for kind in [CocycleKind::C1, CocycleKind::C2, CocycleKind::C] {
        println!("{kind}(g, h) = {:?}", cocycle(kind, &g, &h));
    }
    println!("b(g) = {:?}", b_map(&g));

    // The defining 2-cocycle identity, for all three kinds.
    let k = GroupElement::new(-2.0, 0.5, 1.0);
    for kind in [CocycleKind::C1, CocycleKind::C2, CocycleKind::C] {
        let residual = verify_cocycle_identity(kind, &g, &h, &k);
        println!("cocycle identity residual for {kind}: {:?}", residual);
    }

    // c − c1 and c2 are coboundaries of b; c1 is not.
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let pairs = [
        (
            CocycleChoice::Kind(CocycleKind::C),
            CocycleChoice::Kind(CocycleKind::C1),
        ),
        (CocycleChoice::Kind(CocycleKind::C2), CocycleChoice::Zero),
        (CocycleChoice::Kind(CocycleKind::C1), CocycleChoice::Zero),
    ];
    println!("\ncoboundary equivalence via b:");
    for (a, b) in pairs {
        let report = coboundary_equivalent(a, b, 500, 1e-12, &mut rng);
        println!(
            "  {} vs {}: {} (max residual {:e} over {} samples)",
            report.lhs,
            report.rhs,
            if report.equivalent {
                "equivalent"
            } else {
                "NOT equivalent"
            },
            report.max_residual,
            report.samples
        );
    }

    // Extended multiplication twists the central slots by c.
    let a = ExtGroupElement::new(0.0, 0.0, 0.0, 1.0, 2.0, 3.0);
    let b = ExtGroupElement::new(0.0, 0.0, 0.0, 4.0, 5.0, 6.0);
    println!("\nextended product: {:?}", a.compose(&b));
    println!("extended inverse of a: {:?}", a.inverse());
    println!("a * a^-1 = {:?}", a.compose(&a.inverse()));

    // The central part of the truncated BCH product is exactly c1.
    let ext = registry_get(AlgebraName::StaticExt, &AlgebraParams::default()).unwrap();
    let va = AlgebraVector::static_ext(0.0, 0.0, 0.0, g.v, g.x, g.t);
    let vb = AlgebraVector::static_ext(0.0, 0.0, 0.0, h.v, h.x, h.t);
    let product = ext.bch2(&va, &vb).unwrap();
    let twist = cocycle(CocycleKind::C1, &g, &h);
    println!(
        "\nbch2 central part = ({}, {}, {}); c1(g, h) = ({}, {}, {})",
        product[0], product[1], product[2], twist.xi, twist.zeta, twist.y
    );

    // Adjoint action on the extension: central slots move, base stays.
    let delta = AlgebraVector::static_ext(0.0, 0.0, 0.0, 0.0, 1.0, 0.0);
    println!(
        "Ad_(1,0,0) applied to the space direction: {:?}",
        adjoint(&GroupElement::new(1.0, 0.0, 0.0), &delta)
            .unwrap()
            .coeffs()
    );
}
