//! Seeded verification suites over the module invariants.
//!
//! Each suite runs its checks with a deterministic ChaCha stream, so a
//! (seed, trials) pair fixes every sampled value and therefore every
//! reported residual. Checks carry the tolerance they were judged at:
//! grid checks on small integers are exact, algebraic identities on
//! random reals allow 1e-12 of rounding, and the chart-level laws run
//! at the configured tolerance (default 1e-9).
//!
//! Two checks are deliberate negative controls: the antisymmetric
//! cocycle is shown NOT to be a coboundary of b, and the printed
//! internal energy of the accelerated static massive class is shown to
//! fail invariance (erratum E2). Those report `expected-failure` when
//! the demonstration succeeds.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{apply_matrix, registry_get, AlgebraName, AlgebraParams, AlgebraVector};
use crate::coadjoint::{
    classify, coadjoint_act, connecting_element, from_chart, kirillov, kirillov_rank, pair,
    to_chart, ChartKind, ChartPoint, DualVector, Orbit, OrbitClass,
};
use crate::dynamics::{
    act_point, action_kernel, flow, hamiltonian, momentum_map, momentum_observable, poisson_value,
    realize, vector_field, FlowMethod, Generator,
};
use crate::error::Error;
use crate::group::{
    adjoint, coboundary_equivalent, coboundary_of_b, cocycle, integer_grid, random_element,
    random_ext_element, verify_cocycle_identity, CocycleChoice, CocycleKind, ExtGroupElement,
    GroupElement,
};

/// Residual allowed for algebraic identities on random reals.
const TIGHT: f64 = 1e-12;

/// Configuration for the suites.
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    /// Tolerance for the chart-level laws (action property, Casimir
    /// invariance, round trips, equivariance).
    pub tol: f64,
    pub seed: u64,
    pub trials: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            tol: 1e-9,
            seed: 42,
            trials: 1000,
        }
    }
}

/// Outcome of one check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// A negative control that failed the way it must.
    ExpectedFailure,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::ExpectedFailure => "expected-failure",
        })
    }
}

/// One executed check.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub max_residual: f64,
    pub tolerance: f64,
    pub samples: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// All checks of one suite.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }
}

/// Whether every suite passed.
pub fn all_passed(reports: &[SuiteReport]) -> bool {
    reports.iter().all(SuiteReport::passed)
}

/// Suite selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Group,
    Cocycle,
    Coadjoint,
    Dynamics,
    All,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Group => "group",
            Suite::Cocycle => "cocycle",
            Suite::Coadjoint => "coadjoint",
            Suite::Dynamics => "dynamics",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "group" => Ok(Suite::Group),
            "cocycle" => Ok(Suite::Cocycle),
            "coadjoint" => Ok(Suite::Coadjoint),
            "dynamics" => Ok(Suite::Dynamics),
            "all" => Ok(Suite::All),
            other => Err(Error::InvalidInput(format!("unknown suite `{other}`"))),
        }
    }
}

/// Run the selected suite(s).
pub fn run(suite: Suite, cfg: &VerifyConfig) -> Vec<SuiteReport> {
    match suite {
        Suite::Group => vec![group_suite(cfg)],
        Suite::Cocycle => vec![cocycle_suite(cfg)],
        Suite::Coadjoint => vec![coadjoint_suite(cfg)],
        Suite::Dynamics => vec![dynamics_suite(cfg)],
        Suite::All => vec![
            group_suite(cfg),
            cocycle_suite(cfg),
            coadjoint_suite(cfg),
            dynamics_suite(cfg),
        ],
    }
}

struct Recorder {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Recorder {
    fn new(suite: &'static str) -> Self {
        Self {
            suite,
            checks: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, residual: f64, tol: f64, samples: usize) {
        self.note_check(name, residual, tol, samples, None)
    }

    fn note_check(
        &mut self,
        name: impl Into<String>,
        residual: f64,
        tol: f64,
        samples: usize,
        note: Option<String>,
    ) {
        self.checks.push(Check {
            name: name.into(),
            status: if residual <= tol {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            max_residual: residual,
            tolerance: tol,
            samples,
            note,
        });
    }

    /// A negative control: `demonstrated` must be true for the suite to
    /// count it as behaving as required.
    fn expected_failure(
        &mut self,
        name: impl Into<String>,
        demonstrated: bool,
        residual: f64,
        samples: usize,
        note: String,
    ) {
        self.checks.push(Check {
            name: name.into(),
            status: if demonstrated {
                CheckStatus::ExpectedFailure
            } else {
                CheckStatus::Fail
            },
            max_residual: residual,
            tolerance: 0.0,
            samples,
            note: Some(note),
        });
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite.to_string(),
            checks: self.checks,
        }
    }
}

fn stream_rng(cfg: &VerifyConfig, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(stream);
    rng
}

fn registry_params() -> AlgebraParams {
    AlgebraParams::new(Some(1.0), Some(1.0))
}

fn random_vector(dim: usize, rng: &mut impl Rng) -> AlgebraVector {
    AlgebraVector::new((0..dim).map(|_| rng.random_range(-2.0..2.0)).collect())
}

fn nonzero(rng: &mut impl Rng) -> f64 {
    let sign = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
    sign * rng.random_range(0.5..2.0)
}

/// The canonical small-integer orbit of each class, used where the
/// expected values must come out exact.
pub fn canonical_orbit(class: OrbitClass) -> Orbit {
    match class {
        OrbitClass::Abs => Orbit::abs(1.0, 2.0, 3.0, -1.0).unwrap(),
        OrbitClass::Ass => Orbit::ass(1.0, 2.0, 3.0).unwrap(),
        OrbitClass::BfsM => Orbit::bfs_m(1.0, 3.0, 2.0).unwrap(),
        OrbitClass::FssM => Orbit::fss_m(1.0, 7.0).unwrap(),
        OrbitClass::Bsf => Orbit::bsf(2.0, 1.0, 3.0).unwrap(),
        OrbitClass::Ssf => Orbit::ssf(2.0, 5.0).unwrap(),
        OrbitClass::Bfs0 => Orbit::bfs_0(2.0, 5.0).unwrap(),
        OrbitClass::Fss0 => Orbit::fss_0(4.0, 5.0, 6.0),
    }
}

fn free(rng: &mut impl Rng) -> f64 {
    rng.random_range(-2.0..2.0)
}

fn sample_orbit(class: OrbitClass, rng: &mut impl Rng) -> Orbit {
    match class {
        OrbitClass::Abs => Orbit::abs(nonzero(rng), nonzero(rng), nonzero(rng), free(rng)).unwrap(),
        OrbitClass::Ass => Orbit::ass(nonzero(rng), nonzero(rng), free(rng)).unwrap(),
        OrbitClass::BfsM => Orbit::bfs_m(nonzero(rng), nonzero(rng), free(rng)).unwrap(),
        OrbitClass::FssM => Orbit::fss_m(nonzero(rng), free(rng)).unwrap(),
        OrbitClass::Bsf => Orbit::bsf(nonzero(rng), nonzero(rng), free(rng)).unwrap(),
        OrbitClass::Ssf => Orbit::ssf(nonzero(rng), free(rng)).unwrap(),
        OrbitClass::Bfs0 => Orbit::bfs_0(nonzero(rng), free(rng)).unwrap(),
        OrbitClass::Fss0 => Orbit::fss_0(free(rng), free(rng), free(rng)),
    }
}

fn sample_point(kind: ChartKind, rng: &mut impl Rng) -> ChartPoint {
    match kind {
        ChartKind::Point => ChartPoint::Point,
        _ => ChartPoint::from_coords(
            kind,
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
        ),
    }
}

fn sample_mu(class: OrbitClass, rng: &mut impl Rng) -> DualVector {
    let orbit = sample_orbit(class, rng);
    let z = sample_point(orbit.chart_kind(), rng);
    from_chart(&orbit, &z).unwrap()
}

fn sample_mu_any(rng: &mut impl Rng) -> DualVector {
    let class = OrbitClass::ALL[rng.random_range(0..OrbitClass::ALL.len())];
    sample_mu(class, rng)
}

/// Base-group grid of (v, x, t) triples in {-1, 0, 1}.
fn small_grid() -> Vec<GroupElement> {
    let mut grid = Vec::with_capacity(27);
    for v in -1..=1 {
        for x in -1..=1 {
            for t in -1..=1 {
                grid.push(GroupElement::new(v as f64, x as f64, t as f64));
            }
        }
    }
    grid
}

fn ext_grid() -> Vec<ExtGroupElement> {
    let mut grid = Vec::new();
    for g in small_grid() {
        grid.push(ExtGroupElement {
            xi: 0.0,
            zeta: 0.0,
            y: 0.0,
            g,
        });
        grid.push(ExtGroupElement {
            xi: 1.0,
            zeta: -1.0,
            y: 2.0,
            g,
        });
    }
    grid
}

// ---------------------------------------------------------------------------
// group suite

fn group_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rec = Recorder::new("group");
    let mut rng = stream_rng(cfg, 1);

    // Jacobi identity on every registry table, exactly.
    {
        let mut max = 0.0f64;
        for name in AlgebraName::ALL {
            let tbl = registry_get(name, &registry_params()).unwrap();
            max = max.max(tbl.check_jacobi(0.0).max_residual);
        }
        rec.note_check(
            "registry_jacobi",
            max,
            0.0,
            AlgebraName::ALL.len(),
            Some("12 tables at c_vel = omega = 1, both de Sitter signs".into()),
        );
    }

    // Bracket antisymmetry on random pairs, per table.
    {
        let mut max = 0.0f64;
        let mut samples = 0;
        for name in AlgebraName::ALL {
            let tbl = registry_get(name, &registry_params()).unwrap();
            for _ in 0..cfg.trials {
                let a = random_vector(tbl.dim(), &mut rng);
                let b = random_vector(tbl.dim(), &mut rng);
                let ab = tbl.bracket(&a, &b).unwrap();
                let ba = tbl.bracket(&b, &a).unwrap();
                max = max.max(ab.add(&ba).norm_inf());
                samples += 1;
            }
        }
        rec.check("bracket_antisymmetry", max, TIGHT, samples);
    }

    // Associativity of the base law on the integer grid and random triples.
    {
        let grid = small_grid();
        let mut max = 0.0f64;
        let mut samples = 0;
        let mut probe = |a: &GroupElement, b: &GroupElement, c: &GroupElement| {
            let lhs = a.compose(b).compose(c);
            let rhs = a.compose(&b.compose(c));
            max = max.max(lhs.distance_inf(&rhs));
            samples += 1;
        };
        for a in &grid {
            for b in &grid {
                for c in &grid {
                    probe(a, b, c);
                }
            }
        }
        for _ in 0..cfg.trials {
            let (a, b, c) = (
                random_element(&mut rng),
                random_element(&mut rng),
                random_element(&mut rng),
            );
            probe(&a, &b, &c);
        }
        rec.check("multiply_associativity", max, TIGHT, samples);
    }

    // Associativity of the extended law.
    {
        let grid = ext_grid();
        let mut max = 0.0f64;
        let mut samples = 0;
        let mut probe = |a: &ExtGroupElement, b: &ExtGroupElement, c: &ExtGroupElement| {
            let lhs = a.compose(b).compose(c);
            let rhs = a.compose(&b.compose(c));
            max = max.max(lhs.distance_inf(&rhs));
            samples += 1;
        };
        for a in &grid {
            for b in &grid {
                for c in &grid {
                    probe(a, b, c);
                }
            }
        }
        for _ in 0..cfg.trials {
            let (a, b, c) = (
                random_ext_element(&mut rng),
                random_ext_element(&mut rng),
                random_ext_element(&mut rng),
            );
            probe(&a, &b, &c);
        }
        rec.check("ext_multiply_associativity", max, TIGHT, samples);
    }

    // Identity and inverse laws, base and extended.
    {
        let mut max = 0.0f64;
        let mut samples = 0;
        for _ in 0..cfg.trials {
            let g = random_element(&mut rng);
            max = max.max(g.compose(&GroupElement::identity()).distance_inf(&g));
            max = max.max(
                g.compose(&g.inverse())
                    .distance_inf(&GroupElement::identity()),
            );
            let ext = random_ext_element(&mut rng);
            max = max.max(ext.compose(&ExtGroupElement::identity()).distance_inf(&ext));
            max = max.max(
                ext.compose(&ext.inverse())
                    .distance_inf(&ExtGroupElement::identity()),
            );
            max = max.max(
                ext.inverse()
                    .compose(&ext)
                    .distance_inf(&ExtGroupElement::identity()),
            );
            samples += 1;
        }
        rec.check("identity_and_inverse", max, TIGHT, samples);
    }

    // Adjoint is an action of the base group.
    {
        let mut max = 0.0f64;
        for _ in 0..cfg.trials {
            let g = random_element(&mut rng);
            let h = random_element(&mut rng);
            let delta = random_vector(6, &mut rng);
            let joined = adjoint(&g.compose(&h), &delta).unwrap();
            let nested = adjoint(&g, &adjoint(&h, &delta).unwrap()).unwrap();
            max = max.max(joined.distance_inf(&nested));
        }
        rec.check("adjoint_action_property", max, TIGHT, cfg.trials);
    }

    // Adjoint agrees with exponentiating ad on the extension, which
    // terminates at first order.
    {
        let ext = registry_get(AlgebraName::StaticExt, &AlgebraParams::default()).unwrap();
        let mut max = 0.0f64;
        for _ in 0..cfg.trials {
            let g = random_element(&mut rng);
            let delta = random_vector(6, &mut rng);
            let x = AlgebraVector::static_ext(0.0, 0.0, 0.0, g.v, g.x, g.t);
            let mat = ext.ad_matrix(&x).unwrap();
            let first_order = delta.add(&apply_matrix(&mat, &delta).unwrap());
            max = max.max(adjoint(&g, &delta).unwrap().distance_inf(&first_order));
        }
        rec.check("adjoint_matches_ad_exponential", max, TIGHT, cfg.trials);
    }

    // Associativity of the truncated BCH product on the extension.
    {
        let ext = registry_get(AlgebraName::StaticExt, &AlgebraParams::default()).unwrap();
        let mut max = 0.0f64;
        for _ in 0..cfg.trials {
            let a = random_vector(6, &mut rng);
            let b = random_vector(6, &mut rng);
            let c = random_vector(6, &mut rng);
            let lhs = ext.bch2(&ext.bch2(&a, &b).unwrap(), &c).unwrap();
            let rhs = ext.bch2(&a, &ext.bch2(&b, &c).unwrap()).unwrap();
            max = max.max(lhs.distance_inf(&rhs));
        }
        rec.check("bch2_associativity", max, cfg.tol, cfg.trials);
    }

    rec.finish()
}

// ---------------------------------------------------------------------------
// cocycle suite

fn cocycle_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rec = Recorder::new("cocycle");
    let mut rng = stream_rng(cfg, 2);

    // 2-cocycle identity on the full integer grid, exactly.
    let grid = integer_grid();
    for kind in [CocycleKind::C1, CocycleKind::C2, CocycleKind::C] {
        let mut max = 0.0f64;
        let mut samples = 0;
        for a in &grid {
            for b in &grid {
                for c in &grid {
                    max = max.max(verify_cocycle_identity(kind, a, b, c).norm_inf());
                    samples += 1;
                }
            }
        }
        rec.check(format!("cocycle_identity_grid_{kind}"), max, 0.0, samples);
    }

    // Same identity on random triples.
    {
        let mut max = 0.0f64;
        for _ in 0..cfg.trials {
            let (a, b, c) = (
                random_element(&mut rng),
                random_element(&mut rng),
                random_element(&mut rng),
            );
            for kind in [CocycleKind::C1, CocycleKind::C2, CocycleKind::C] {
                max = max.max(verify_cocycle_identity(kind, &a, &b, &c).norm_inf());
            }
        }
        rec.check("cocycle_identity_random", max, TIGHT, 3 * cfg.trials);
    }

    // c = c1 + c2.
    {
        let mut max = 0.0f64;
        let mut samples = 0;
        let mut probe = |g: &GroupElement, h: &GroupElement| {
            let lhs = cocycle(CocycleKind::C, g, h);
            let rhs = cocycle(CocycleKind::C1, g, h).add(&cocycle(CocycleKind::C2, g, h));
            max = max.max(lhs.sub(&rhs).norm_inf());
            samples += 1;
        };
        for g in &grid {
            for h in &grid {
                probe(g, h);
            }
        }
        for _ in 0..cfg.trials {
            let g = random_element(&mut rng);
            let h = random_element(&mut rng);
            probe(&g, &h);
        }
        rec.check("c_equals_c1_plus_c2", max, TIGHT, samples);
    }

    // c − c1 is the coboundary of b.
    {
        let report = coboundary_equivalent(
            CocycleChoice::Kind(CocycleKind::C),
            CocycleChoice::Kind(CocycleKind::C1),
            cfg.trials,
            TIGHT,
            &mut rng,
        );
        rec.note_check(
            "c_minus_c1_is_coboundary_of_b",
            report.max_residual,
            TIGHT,
            report.samples,
            Some("difference equals b(gh) - b(g) - b(h)".into()),
        );
    }

    // c2 itself is the coboundary of b.
    {
        let report = coboundary_equivalent(
            CocycleChoice::Kind(CocycleKind::C2),
            CocycleChoice::Zero,
            cfg.trials,
            TIGHT,
            &mut rng,
        );
        rec.check(
            "c2_is_coboundary_of_b",
            report.max_residual,
            TIGHT,
            report.samples,
        );
    }

    // Negative control: c1 is NOT a coboundary of b.
    {
        let report = coboundary_equivalent(
            CocycleChoice::Kind(CocycleKind::C1),
            CocycleChoice::Zero,
            0,
            TIGHT,
            &mut rng,
        );
        let g = GroupElement::new(0.0, 1.0, 0.0);
        let h = GroupElement::new(1.0, 0.0, 0.0);
        let witness = cocycle(CocycleKind::C1, &g, &h)
            .sub(&coboundary_of_b(&g, &h))
            .norm_inf();
        rec.expected_failure(
            "c1_not_coboundary_of_b",
            !report.equivalent && witness >= 0.5,
            report.max_residual,
            report.samples,
            "antisymmetric c1 cannot equal the symmetric coboundary; \
             witness pair (0,1,0), (1,0,0) has residual 1"
                .into(),
        );
    }

    // Central part of the truncated BCH product reproduces c1.
    {
        let ext = registry_get(AlgebraName::StaticExt, &AlgebraParams::default()).unwrap();
        let mut max = 0.0f64;
        for _ in 0..cfg.trials {
            let g = random_element(&mut rng);
            let h = random_element(&mut rng);
            let a = AlgebraVector::static_ext(0.0, 0.0, 0.0, g.v, g.x, g.t);
            let b = AlgebraVector::static_ext(0.0, 0.0, 0.0, h.v, h.x, h.t);
            let prod = ext.bch2(&a, &b).unwrap();
            let twist = cocycle(CocycleKind::C1, &g, &h);
            max = max
                .max((prod[0] - twist.xi).abs())
                .max((prod[1] - twist.zeta).abs())
                .max((prod[2] - twist.y).abs());
        }
        rec.check("bch2_central_matches_c1", max, TIGHT, cfg.trials);
    }

    rec.finish()
}

// ---------------------------------------------------------------------------
// coadjoint suite

fn coadjoint_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rec = Recorder::new("coadjoint");
    let mut rng = stream_rng(cfg, 3);

    // Action property on the dual.
    {
        let mut max = 0.0f64;
        for _ in 0..cfg.trials {
            let g = random_element(&mut rng);
            let h = random_element(&mut rng);
            let mu = sample_mu_any(&mut rng);
            let joined = coadjoint_act(&g.compose(&h), &mu);
            let nested = coadjoint_act(&g, &coadjoint_act(&h, &mu));
            max = max.max(joined.distance_inf(&nested));
        }
        rec.check("action_composition", max, cfg.tol, cfg.trials);
    }

    // Contragredience against the adjoint.
    {
        let mut max = 0.0f64;
        for _ in 0..cfg.trials {
            let g = random_element(&mut rng);
            let mu = sample_mu_any(&mut rng);
            let delta = random_vector(6, &mut rng);
            let lhs = pair(&coadjoint_act(&g, &mu), &delta).unwrap();
            let rhs = pair(&mu, &adjoint(&g.inverse(), &delta).unwrap()).unwrap();
            max = max.max((lhs - rhs).abs());
        }
        rec.check("duality_contragredience", max, cfg.tol, cfg.trials);
    }

    // Casimir invariance per class, including k0 and the corrected U.
    for class in OrbitClass::ALL {
        let mut max = 0.0f64;
        for _ in 0..cfg.trials {
            let mu = sample_mu(class, &mut rng);
            let before = classify(&mu, 0.0).invariant_values();
            let g = random_element(&mut rng);
            let after = classify(&coadjoint_act(&g, &mu), 0.0).invariant_values();
            for (key, value) in &before {
                let relative = (after[key] - value).abs() / (1.0 + value.abs());
                max = max.max(relative);
            }
        }
        rec.check(
            format!("casimir_invariance_{}", class.as_str().to_lowercase()),
            max,
            cfg.tol,
            cfg.trials,
        );
    }

    // Chart round trips in both directions.
    {
        let mut max = 0.0f64;
        let mut samples = 0;
        for class in OrbitClass::ALL {
            for _ in 0..cfg.trials / 4 {
                let orbit = sample_orbit(class, &mut rng);
                let z = sample_point(orbit.chart_kind(), &mut rng);
                let mu = from_chart(&orbit, &z).unwrap();
                let back = to_chart(&orbit, &mu).unwrap();
                max = max.max(back.distance_inf(&z));

                let reclassified = classify(&mu, 0.0);
                let again =
                    from_chart(&reclassified, &to_chart(&reclassified, &mu).unwrap()).unwrap();
                max = max.max(again.distance_inf(&mu));
                samples += 1;
            }
        }
        rec.check("chart_round_trip", max, cfg.tol, samples);
    }

    // Transitivity: a constructed element connects any two points with
    // the same invariant record.
    {
        let mut max = 0.0f64;
        let mut samples = 0;
        for class in OrbitClass::ALL {
            for _ in 0..cfg.trials / 4 {
                let orbit = sample_orbit(class, &mut rng);
                let z1 = sample_point(orbit.chart_kind(), &mut rng);
                let z2 = sample_point(orbit.chart_kind(), &mut rng);
                let mu1 = from_chart(&orbit, &z1).unwrap();
                let mu2 = from_chart(&orbit, &z2).unwrap();
                let g = connecting_element(&orbit, &mu1, &mu2).unwrap();
                max = max.max(coadjoint_act(&g, &mu1).distance_inf(&mu2));
                samples += 1;
            }
        }
        rec.check("orbit_transitivity", max, cfg.tol, samples);
    }

    // The generically computed Kirillov form equals its closed form.
    {
        let mut max = 0.0f64;
        for _ in 0..cfg.trials {
            let mu = sample_mu_any(&mut rng);
            let form = kirillov(&mu);
            let expected = [[0.0, mu.m, mu.i], [-mu.m, 0.0, mu.f], [-mu.i, -mu.f, 0.0]];
            for (row, expected_row) in form.iter().zip(&expected) {
                for (got, want) in row.iter().zip(expected_row) {
                    max = max.max((got - want).abs());
                }
            }
        }
        rec.check("kirillov_matches_closed_form", max, 0.0, cfg.trials);
    }

    // Rank of the form is 0 or 2 and equals the chart dimension.
    {
        let mut mismatches = 0usize;
        let mut samples = 0;
        for class in OrbitClass::ALL {
            for _ in 0..cfg.trials / 8 {
                let mu = sample_mu(class, &mut rng);
                let rank = kirillov_rank(&kirillov(&mu), 0.0);
                let orbit = classify(&mu, 0.0);
                if rank != orbit.dim() || !(rank == 0 || rank == 2) {
                    mismatches += 1;
                }
                samples += 1;
            }
        }
        rec.check(
            "kirillov_rank_matches_chart_dim",
            mismatches as f64,
            0.0,
            samples,
        );
    }

    // Classification ignores positive scaling when tol = 0.
    {
        let mut mismatches = 0usize;
        for _ in 0..cfg.trials {
            let mu = sample_mu_any(&mut rng);
            let s = rng.random_range(0.1..10.0);
            if classify(&mu, 0.0).class() != classify(&mu.scale(s), 0.0).class() {
                mismatches += 1;
            }
        }
        rec.check("classify_scale_stable", mismatches as f64, 0.0, cfg.trials);
    }

    // Erratum E2: the printed internal energy e − fq of the accelerated
    // static class is NOT invariant; it shifts by −2fx.
    {
        let mut shift_matches = true;
        let mut min_shift = f64::INFINITY;
        let mut max_residual = 0.0f64;
        for _ in 0..cfg.trials {
            let orbit = sample_orbit(OrbitClass::Ass, &mut rng);
            let z = sample_point(ChartKind::Pq, &mut rng);
            let mu = from_chart(&orbit, &z).unwrap();
            let x = nonzero(&mut rng);
            let g = GroupElement::new(0.0, x, 0.0);
            let moved = coadjoint_act(&g, &mu);
            let printed = |m: &DualVector| m.e - m.f * m.k / m.m;
            let drift = printed(&moved) - printed(&mu);
            max_residual = max_residual.max((drift + 2.0 * mu.f * x).abs());
            min_shift = min_shift.min(drift.abs());
            if (drift + 2.0 * mu.f * x).abs() > cfg.tol * (1.0 + drift.abs()) {
                shift_matches = false;
            }
        }
        rec.expected_failure(
            "erratum_e2_printed_ass_energy",
            shift_matches && min_shift >= 0.4,
            max_residual,
            cfg.trials,
            format!(
                "printed U = e - fq drifts by exactly -2fx under (0, x, 0) \
                 (smallest observed |drift| {min_shift:.3}); corrected U = e + fq \
                 is invariant (E2)"
            ),
        );
    }

    rec.finish()
}

// ---------------------------------------------------------------------------
// dynamics suite

fn dynamics_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rec = Recorder::new("dynamics");
    let mut rng = stream_rng(cfg, 4);
    let chart_classes: Vec<OrbitClass> = OrbitClass::ALL
        .iter()
        .copied()
        .filter(|c| *c != OrbitClass::Fss0)
        .collect();

    // Momentum-map equivariance.
    {
        let mut max = 0.0f64;
        let mut samples = 0;
        for &class in &chart_classes {
            for _ in 0..cfg.trials / 4 {
                let orbit = sample_orbit(class, &mut rng);
                let z = sample_point(orbit.chart_kind(), &mut rng);
                let g = random_element(&mut rng);
                let moved = act_point(&orbit, &g, &z).unwrap();
                let (k1, p1, e1) = momentum_map(&orbit, &moved).unwrap();
                let mu = from_chart(&orbit.normalized(), &z).unwrap();
                let pushed = coadjoint_act(&g, &mu);
                max = max
                    .max((k1 - pushed.k).abs())
                    .max((p1 - pushed.p).abs())
                    .max((e1 - pushed.e).abs());
                samples += 1;
            }
        }
        rec.check("momentum_equivariance", max, cfg.tol, samples);
    }

    // Central charges on the canonical orbits, exactly.
    {
        let mut max = 0.0f64;
        let mut lines = Vec::new();
        for &class in &chart_classes {
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
            max = max
                .max((charges.0 - m).abs())
                .max((charges.1 - i).abs())
                .max((charges.2 - f).abs());
            lines.push(format!(
                "{}: ({{K,P}},{{K,E}},{{P,E}}) = ({}, {}, {})",
                class, charges.0, charges.1, charges.2
            ));
        }
        rec.note_check(
            "central_charges_canonical",
            max,
            0.0,
            chart_classes.len(),
            Some(lines.join("; ")),
        );
    }

    // Central charges on random orbits.
    {
        let mut max = 0.0f64;
        let mut samples = 0;
        for &class in &chart_classes {
            for _ in 0..cfg.trials / 8 {
                let orbit = sample_orbit(class, &mut rng);
                let mu_k = momentum_observable(&orbit, Generator::K).unwrap();
                let mu_p = momentum_observable(&orbit, Generator::P).unwrap();
                let mu_e = momentum_observable(&orbit, Generator::E).unwrap();
                let (m, f, i) = orbit.mfi();
                max = max
                    .max((poisson_value(&mu_k, &mu_p).unwrap() - m).abs())
                    .max((poisson_value(&mu_k, &mu_e).unwrap() - i).abs())
                    .max((poisson_value(&mu_p, &mu_e).unwrap() - f).abs());
                samples += 1;
            }
        }
        rec.check("central_charges_random", max, TIGHT, samples);
    }

    // Generator fields equal the Hamiltonian fields of their momenta.
    {
        let mut max = 0.0f64;
        let mut samples = 0;
        for &class in &chart_classes {
            let mut orbits = vec![canonical_orbit(class)];
            for _ in 0..cfg.trials / 16 {
                orbits.push(sample_orbit(class, &mut rng));
            }
            for orbit in orbits {
                let kind = orbit.chart_kind();
                let c1 = crate::dynamics::AffineObservable::coord1(kind);
                let c2 = crate::dynamics::AffineObservable::coord2(kind);
                for gen in Generator::ALL {
                    let field = vector_field(&orbit, gen).unwrap();
                    let mu_gen = momentum_observable(&orbit, gen).unwrap();
                    let hamilton_field = (
                        poisson_value(&mu_gen, &c1).unwrap(),
                        poisson_value(&mu_gen, &c2).unwrap(),
                    );
                    max = max
                        .max((field.0 - hamilton_field.0).abs())
                        .max((field.1 - hamilton_field.1).abs());
                    samples += 1;
                }
            }
        }
        rec.check("generator_consistency", max, TIGHT, samples);
    }

    // Energy is constant along the exact flow.
    {
        let mut max = 0.0f64;
        let mut samples = 0;
        for &class in &chart_classes {
            for _ in 0..cfg.trials / 8 {
                let orbit = sample_orbit(class, &mut rng);
                let z0 = sample_point(orbit.chart_kind(), &mut rng);
                let h = hamiltonian(&orbit).unwrap();
                let h0 = h.eval(&z0).unwrap();
                for _ in 0..4 {
                    let t = rng.random_range(-3.0..3.0);
                    let moved = flow(&orbit, &z0, t, 1, FlowMethod::Exact).unwrap();
                    max = max.max((h.eval(&moved).unwrap() - h0).abs());
                    samples += 1;
                }
            }
        }
        rec.check("energy_conservation", max, TIGHT, samples);
    }

    // Euler and RK4 integrate the constant fields exactly.
    {
        let mut max = 0.0f64;
        let mut samples = 0;
        for &class in &chart_classes {
            for _ in 0..cfg.trials / 8 {
                let orbit = sample_orbit(class, &mut rng);
                let z0 = sample_point(orbit.chart_kind(), &mut rng);
                let t = rng.random_range(-2.0..2.0);
                let steps = rng.random_range(1..20);
                let exact = flow(&orbit, &z0, t, steps, FlowMethod::Exact).unwrap();
                for method in [FlowMethod::Euler, FlowMethod::Rk4] {
                    let numeric = flow(&orbit, &z0, t, steps, method).unwrap();
                    max = max.max(numeric.distance_inf(&exact));
                    samples += 1;
                }
            }
        }
        rec.check("numeric_flow_matches_exact", max, TIGHT, samples);
    }

    // Pullback of g undoes the point action of g.
    {
        let mut max = 0.0f64;
        let mut samples = 0;
        for &class in &chart_classes {
            for _ in 0..cfg.trials / 8 {
                let orbit = sample_orbit(class, &mut rng);
                let realization = realize(&orbit);
                let z = sample_point(orbit.chart_kind(), &mut rng);
                let g = random_element(&mut rng);
                let there = realization.act_point(&g, &z).unwrap();
                let back = realization.pullback_point(&g, &there).unwrap();
                max = max.max(back.distance_inf(&z));
                samples += 1;
            }
        }
        rec.check("pullback_point_action_inverse", max, TIGHT, samples);
    }

    // Kernel audit: every chart class has a one-dimensional kernel, the
    // fixed point a three-dimensional one.
    {
        let mut mismatches = 0usize;
        let mut residual = 0.0f64;
        let mut dims = Vec::new();
        for class in OrbitClass::ALL {
            let orbit = canonical_orbit(class);
            let report = action_kernel(&orbit);
            let expected = if class == OrbitClass::Fss0 { 3 } else { 1 };
            if report.dim != expected {
                mismatches += 1;
            }
            dims.push(format!("{}: dim {}", class, report.dim));
            // kernel directions act trivially on a sample point
            if orbit.chart_kind() != ChartKind::Point {
                let z = sample_point(orbit.chart_kind(), &mut rng);
                for basis in &report.basis {
                    let g = GroupElement::new(basis[0], basis[1], basis[2]);
                    let moved = act_point(&orbit, &g, &z).unwrap();
                    residual = residual.max(moved.distance_inf(&z));
                }
            }
        }
        rec.note_check(
            "action_kernel_dimensions",
            mismatches as f64 + residual,
            TIGHT,
            OrbitClass::ALL.len(),
            Some(format!(
                "{}; every chart action has a nontrivial kernel, so none of the \
                 realizations is faithful in the ordinary sense; recorded as an \
                 open discrepancy with the source's faithfulness claim",
                dims.join(", ")
            )),
        );
    }

    rec.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_with_defaults() {
        let cfg = VerifyConfig {
            trials: 100,
            ..VerifyConfig::default()
        };
        let reports = run(Suite::All, &cfg);
        assert_eq!(reports.len(), 4);
        for report in &reports {
            for check in &report.checks {
                assert_ne!(
                    check.status,
                    CheckStatus::Fail,
                    "{}/{} residual {:e}",
                    report.suite,
                    check.name,
                    check.max_residual
                );
            }
        }
        assert!(all_passed(&reports));
    }

    #[test]
    fn suites_are_deterministic_given_seed() {
        let cfg = VerifyConfig {
            trials: 50,
            ..VerifyConfig::default()
        };
        let a = run(Suite::Coadjoint, &cfg);
        let b = run(Suite::Coadjoint, &cfg);
        let ser = |r: &Vec<SuiteReport>| serde_json::to_string(r).unwrap();
        assert_eq!(ser(&a), ser(&b));

        let other = VerifyConfig { seed: 43, ..cfg };
        let c = run(Suite::Coadjoint, &other);
        assert_ne!(ser(&a), ser(&c), "different seeds sample different values");
    }

    #[test]
    fn negative_controls_report_expected_failure() {
        let cfg = VerifyConfig {
            trials: 50,
            ..VerifyConfig::default()
        };
        let cocycle_report = &run(Suite::Cocycle, &cfg)[0];
        let control = cocycle_report
            .checks
            .iter()
            .find(|c| c.name == "c1_not_coboundary_of_b")
            .unwrap();
        assert_eq!(control.status, CheckStatus::ExpectedFailure);
        assert!(control.max_residual >= 0.5);

        let coadjoint_report = &run(Suite::Coadjoint, &cfg)[0];
        let e2 = coadjoint_report
            .checks
            .iter()
            .find(|c| c.name == "erratum_e2_printed_ass_energy")
            .unwrap();
        assert_eq!(e2.status, CheckStatus::ExpectedFailure);
    }
}
