//! Property tests over the algebraic laws.

use proptest::prelude::*;

use kinstatic::algebra::{registry_get, AlgebraName, AlgebraParams, AlgebraVector};
use kinstatic::coadjoint::{
    classify, coadjoint_act, from_chart, to_chart, ChartPoint, DualVector, Orbit,
};
use kinstatic::dynamics::{act_point, flow, hamiltonian, realize, FlowMethod};
use kinstatic::group::{
    adjoint, cocycle, verify_cocycle_identity, CocycleKind, ExtGroupElement, GroupElement,
};

fn small() -> impl Strategy<Value = f64> {
    -2.0..2.0f64
}

fn nonzero() -> impl Strategy<Value = f64> {
    prop_oneof![0.2..3.0f64, -3.0..-0.2f64]
}

fn group_elem() -> impl Strategy<Value = GroupElement> {
    (small(), small(), small()).prop_map(|(v, x, t)| GroupElement::new(v, x, t))
}

fn ext_elem() -> impl Strategy<Value = ExtGroupElement> {
    (small(), small(), small(), group_elem())
        .prop_map(|(xi, zeta, y, g)| ExtGroupElement::new(xi, zeta, y, g.v, g.x, g.t))
}

/// Orbits of the seven chart-carrying classes.
fn chart_orbit() -> impl Strategy<Value = Orbit> {
    prop_oneof![
        (nonzero(), nonzero(), nonzero(), small())
            .prop_map(|(m, f, i, u)| Orbit::abs(m, f, i, u).unwrap()),
        (nonzero(), nonzero(), small()).prop_map(|(m, f, u)| Orbit::ass(m, f, u).unwrap()),
        (nonzero(), nonzero(), small()).prop_map(|(m, i, u)| Orbit::bfs_m(m, i, u).unwrap()),
        (nonzero(), small()).prop_map(|(m, e)| Orbit::fss_m(m, e).unwrap()),
        (nonzero(), nonzero(), small()).prop_map(|(f, i, k0)| Orbit::bsf(f, i, k0).unwrap()),
        (nonzero(), small()).prop_map(|(f, k)| Orbit::ssf(f, k).unwrap()),
        (nonzero(), small()).prop_map(|(i, p)| Orbit::bfs_0(i, p).unwrap()),
    ]
}

fn orbit_with_point() -> impl Strategy<Value = (Orbit, ChartPoint)> {
    (chart_orbit(), small(), small()).prop_map(|(orbit, c1, c2)| {
        let z = ChartPoint::from_coords(orbit.chart_kind(), c1, c2);
        (orbit, z)
    })
}

proptest! {
    #[test]
    fn bracket_is_antisymmetric_on_every_table(
        idx in 0usize..12,
        a in prop::collection::vec(-3.0..3.0f64, 6),
        b in prop::collection::vec(-3.0..3.0f64, 6),
    ) {
        let name = AlgebraName::ALL[idx];
        let table = registry_get(name, &AlgebraParams::new(Some(1.0), Some(1.0))).unwrap();
        let dim = table.dim();
        let a = AlgebraVector::new(a[..dim].to_vec());
        let b = AlgebraVector::new(b[..dim].to_vec());
        let ab = table.bracket(&a, &b).unwrap();
        let ba = table.bracket(&b, &a).unwrap();
        prop_assert!(ab.add(&ba).norm_inf() <= 1e-12);
    }

    #[test]
    fn bch2_is_associative_on_the_extension(
        a in prop::collection::vec(-2.0..2.0f64, 6),
        b in prop::collection::vec(-2.0..2.0f64, 6),
        c in prop::collection::vec(-2.0..2.0f64, 6),
    ) {
        let ext = registry_get(AlgebraName::StaticExt, &AlgebraParams::default()).unwrap();
        let (a, b, c) = (
            AlgebraVector::new(a),
            AlgebraVector::new(b),
            AlgebraVector::new(c),
        );
        let lhs = ext.bch2(&ext.bch2(&a, &b).unwrap(), &c).unwrap();
        let rhs = ext.bch2(&a, &ext.bch2(&b, &c).unwrap()).unwrap();
        prop_assert!(lhs.distance_inf(&rhs) <= 1e-9);
    }

    #[test]
    fn group_laws(g in group_elem(), h in group_elem(), k in group_elem()) {
        let assoc = g.compose(&h).compose(&k).distance_inf(&g.compose(&h.compose(&k)));
        prop_assert!(assoc <= 1e-12);
        prop_assert!(g.compose(&g.inverse()).distance_inf(&GroupElement::identity()) <= 1e-12);
    }

    #[test]
    fn ext_group_laws(g in ext_elem(), h in ext_elem(), k in ext_elem()) {
        let assoc = g.compose(&h).compose(&k).distance_inf(&g.compose(&h.compose(&k)));
        prop_assert!(assoc <= 1e-12);
        prop_assert!(g.compose(&g.inverse()).distance_inf(&ExtGroupElement::identity()) <= 1e-12);
        prop_assert!(g.inverse().compose(&g).distance_inf(&ExtGroupElement::identity()) <= 1e-12);
    }

    #[test]
    fn cocycle_identity_and_split(g1 in group_elem(), g2 in group_elem(), g3 in group_elem()) {
        for kind in [CocycleKind::C1, CocycleKind::C2, CocycleKind::C] {
            prop_assert!(verify_cocycle_identity(kind, &g1, &g2, &g3).norm_inf() <= 1e-12);
        }
        let sum = cocycle(CocycleKind::C1, &g1, &g2).add(&cocycle(CocycleKind::C2, &g1, &g2));
        prop_assert!(cocycle(CocycleKind::C, &g1, &g2).sub(&sum).norm_inf() <= 1e-12);
    }

    #[test]
    fn adjoint_and_coadjoint_are_dual_actions(
        g in group_elem(),
        h in group_elem(),
        delta in prop::collection::vec(-2.0..2.0f64, 6),
        (orbit, z) in orbit_with_point(),
    ) {
        let delta = AlgebraVector::new(delta);
        let joined = adjoint(&g.compose(&h), &delta).unwrap();
        let nested = adjoint(&g, &adjoint(&h, &delta).unwrap()).unwrap();
        prop_assert!(joined.distance_inf(&nested) <= 1e-12);

        let mu = from_chart(&orbit, &z).unwrap();
        let lhs = kinstatic::coadjoint::pair(&coadjoint_act(&g, &mu), &delta).unwrap();
        let rhs = kinstatic::coadjoint::pair(&mu, &adjoint(&g.inverse(), &delta).unwrap()).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-9);
    }

    #[test]
    fn classification_is_scale_stable((orbit, z) in orbit_with_point(), s in 0.1..10.0f64) {
        let mu = from_chart(&orbit, &z).unwrap();
        prop_assert_eq!(classify(&mu, 0.0).class(), classify(&mu.scale(s), 0.0).class());
    }

    #[test]
    fn charts_round_trip((orbit, z) in orbit_with_point()) {
        let mu = from_chart(&orbit, &z).unwrap();
        let back = to_chart(&orbit, &mu).unwrap();
        prop_assert!(back.distance_inf(&z) <= 1e-9);

        let orbit2 = classify(&mu, 0.0);
        let mu2 = from_chart(&orbit2, &to_chart(&orbit2, &mu).unwrap()).unwrap();
        prop_assert!(mu2.distance_inf(&mu) <= 1e-9);
    }

    #[test]
    fn point_action_is_an_action_matching_the_dual(
        (orbit, z) in orbit_with_point(),
        g in group_elem(),
        h in group_elem(),
    ) {
        let joined = act_point(&orbit, &g.compose(&h), &z).unwrap();
        let nested = act_point(&orbit, &g, &act_point(&orbit, &h, &z).unwrap()).unwrap();
        prop_assert!(joined.distance_inf(&nested) <= 1e-9);

        // chart action = coadjoint action seen through the chart
        let mu = from_chart(&orbit, &z).unwrap();
        let via_dual = to_chart(&orbit, &coadjoint_act(&g, &mu)).unwrap();
        let via_chart = act_point(&orbit, &g, &z).unwrap();
        prop_assert!(via_dual.distance_inf(&via_chart) <= 1e-9);

        // pullback undoes the point action
        let realization = realize(&orbit);
        let back = realization
            .pullback_point(&g, &realization.act_point(&g, &z).unwrap())
            .unwrap();
        prop_assert!(back.distance_inf(&z) <= 1e-12);
    }

    #[test]
    fn flows_conserve_energy_and_methods_agree(
        (orbit, z) in orbit_with_point(),
        t in -3.0..3.0f64,
        steps in 1usize..16,
    ) {
        let h = hamiltonian(&orbit).unwrap();
        let exact = flow(&orbit, &z, t, steps, FlowMethod::Exact).unwrap();
        let drift = (h.eval(&exact).unwrap() - h.eval(&z).unwrap()).abs();
        prop_assert!(drift <= 1e-9 * (1.0 + h.eval(&z).unwrap().abs()));
        for method in [FlowMethod::Euler, FlowMethod::Rk4] {
            let numeric = flow(&orbit, &z, t, steps, method).unwrap();
            prop_assert!(numeric.distance_inf(&exact) <= 1e-12);
        }
    }

    #[test]
    fn dual_vector_json_round_trips(mu in (small(), small(), small(), small(), small(), small())) {
        let mu = DualVector::new(mu.0, mu.1, mu.2, mu.3, mu.4, mu.5);
        let json = serde_json::to_string(&mu).unwrap();
        prop_assert!(json.contains("\"I\":"));
        let back: DualVector = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, mu);
    }
}
