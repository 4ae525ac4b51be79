//! Symplectic realizations of the orbit classes.
//!
//! Each two-dimensional orbit carries an action of the base group by
//! affine chart maps. The action on observables is by pullback,
//! `(D_g ψ)(z) = ψ(pullback_g(z))`, and the point action is the
//! pullback of the inverse element, so pullback arguments shift
//! opposite to the physical motion. Momentum components, Hamiltonians
//! and generator vector fields are all affine in the chart coordinates,
//! which makes flows linear in time and Poisson brackets of momentum
//! components constant.
//!
//! Sign conventions: with chart coordinates (c₁, c₂), meaning (p, q)
//! or (e, τ), the Poisson bracket is
//! `{F, G} = ∂F/∂c₂ · ∂G/∂c₁ − ∂F/∂c₁ · ∂G/∂c₂`,
//! the unique choice under which the momentum components reproduce the
//! extension's brackets with central charges (+m, +I, +f).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coadjoint::{from_chart, ChartKind, ChartPoint, Orbit};
use crate::error::{Error, Result};
use crate::group::GroupElement;

/// An observable affine in the chart coordinates:
/// `alpha·c₁ + beta·c₂ + gamma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineObservable {
    pub kind: ChartKind,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl AffineObservable {
    pub fn new(kind: ChartKind, alpha: f64, beta: f64, gamma: f64) -> Self {
        Self {
            kind,
            alpha,
            beta,
            gamma,
        }
    }

    pub fn constant(kind: ChartKind, value: f64) -> Self {
        Self::new(kind, 0.0, 0.0, value)
    }

    /// The first coordinate observable (p or e).
    pub fn coord1(kind: ChartKind) -> Self {
        Self::new(kind, 1.0, 0.0, 0.0)
    }

    /// The second coordinate observable (q or τ).
    pub fn coord2(kind: ChartKind) -> Self {
        Self::new(kind, 0.0, 1.0, 0.0)
    }

    pub fn eval(&self, z: &ChartPoint) -> Result<f64> {
        let (c1, c2) = z.coords().ok_or(Error::PointOrbit)?;
        if z.kind() != self.kind {
            return Err(Error::ChartKindMismatch {
                expected: self.kind.to_string(),
                got: z.kind().to_string(),
            });
        }
        Ok(self.alpha * c1 + self.beta * c2 + self.gamma)
    }
}

/// Poisson bracket of two affine observables; constant on the chart.
pub fn poisson(f: &AffineObservable, g: &AffineObservable) -> Result<AffineObservable> {
    if f.kind != g.kind {
        return Err(Error::ChartKindMismatch {
            expected: f.kind.to_string(),
            got: g.kind.to_string(),
        });
    }
    Ok(AffineObservable::constant(
        f.kind,
        f.beta * g.alpha - f.alpha * g.beta,
    ))
}

/// Convenience: the constant value of `{f, g}`.
pub fn poisson_value(f: &AffineObservable, g: &AffineObservable) -> Result<f64> {
    poisson(f, g).map(|obs| obs.gamma)
}

/// The three base-group generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// Boosts (parameter v).
    K,
    /// Space translations (parameter x).
    P,
    /// Time translations (parameter t).
    E,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::K, Generator::P, Generator::E];
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::K => "K",
            Generator::P => "P",
            Generator::E => "E",
        })
    }
}

/// Linear dependence of one pullback coordinate on (v, x, t).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PullbackCoeffs {
    pub dv: f64,
    pub dx: f64,
    pub dt: f64,
}

impl PullbackCoeffs {
    fn shift(&self, g: &GroupElement) -> f64 {
        self.dv * g.v + self.dx * g.x + self.dt * g.t
    }

    fn component(&self, gen: Generator) -> f64 {
        match gen {
            Generator::K => self.dv,
            Generator::P => self.dx,
            Generator::E => self.dt,
        }
    }
}

/// The pullback chart maps of one orbit; `None` for the fixed point.
#[derive(Debug, Clone, PartialEq)]
pub struct Realization {
    orbit: Orbit,
    coeffs: Option<(PullbackCoeffs, PullbackCoeffs)>,
}

/// Build the realization of an orbit.
///
/// The stored coefficients are those of the pullback argument map: for
/// the fully invariant massive class, `pullback_g(p, q) =
/// (p + mv − ft, q − ut − x)`, and analogously per class.
pub fn realize(orbit: &Orbit) -> Realization {
    let cc = |dv, dx, dt| PullbackCoeffs { dv, dx, dt };
    let coeffs = match *orbit {
        Orbit::Abs { m, f, i, .. } => Some((cc(m, 0.0, -f), cc(0.0, -1.0, -(i / m)))),
        Orbit::Ass { m, f, .. } => Some((cc(m, 0.0, -f), cc(0.0, -1.0, 0.0))),
        Orbit::BfsM { m, i, .. } => Some((cc(m, 0.0, 0.0), cc(0.0, -1.0, -(i / m)))),
        Orbit::FssM { m, .. } => Some((cc(m, 0.0, 0.0), cc(0.0, -1.0, 0.0))),
        Orbit::Bsf { f, i, .. } => Some((cc(0.0, 0.0, -f), cc(-(i / f), -1.0, 0.0))),
        Orbit::Ssf { f, .. } => Some((cc(0.0, 0.0, -f), cc(0.0, -1.0, 0.0))),
        Orbit::Bfs0 { i, .. } => Some((cc(i, 0.0, 0.0), cc(0.0, 0.0, -1.0))),
        Orbit::Fss0 { .. } => None,
    };
    Realization {
        orbit: *orbit,
        coeffs,
    }
}

impl Realization {
    pub fn orbit(&self) -> &Orbit {
        &self.orbit
    }

    pub fn pullback_coeffs(&self) -> Option<(&PullbackCoeffs, &PullbackCoeffs)> {
        self.coeffs.as_ref().map(|(a, b)| (a, b))
    }

    fn check_point(&self, z: &ChartPoint) -> Result<()> {
        if z.kind() != self.orbit.chart_kind() {
            return Err(Error::ChartKindMismatch {
                expected: self.orbit.chart_kind().to_string(),
                got: z.kind().to_string(),
            });
        }
        Ok(())
    }

    /// The argument map of `D_g`: shifts the chart point by the stored
    /// linear coefficients of g.
    pub fn pullback_point(&self, g: &GroupElement, z: &ChartPoint) -> Result<ChartPoint> {
        self.check_point(z)?;
        match (&self.coeffs, z.coords()) {
            (Some((a, b)), Some((c1, c2))) => Ok(ChartPoint::from_coords(
                z.kind(),
                c1 + a.shift(g),
                c2 + b.shift(g),
            )),
            _ => Ok(ChartPoint::Point),
        }
    }

    /// Point action of g: the pullback of g⁻¹.
    pub fn act_point(&self, g: &GroupElement, z: &ChartPoint) -> Result<ChartPoint> {
        self.pullback_point(&g.inverse(), z)
    }
}

/// Point action of g on the orbit chart.
pub fn act_point(orbit: &Orbit, g: &GroupElement, z: &ChartPoint) -> Result<ChartPoint> {
    realize(orbit).act_point(g, z)
}

/// Chart-coordinate momentum (k, p, e) of a point, with the additive
/// energy constant of the accelerated/free massive classes normalized
/// to zero.
pub fn momentum_map(orbit: &Orbit, z: &ChartPoint) -> Result<(f64, f64, f64)> {
    if orbit.chart_kind() == ChartKind::Point {
        return Err(Error::PointOrbit);
    }
    let mu = from_chart(&orbit.normalized(), z)?;
    Ok((mu.k, mu.p, mu.e))
}

/// Momentum component of a generator as an affine observable.
pub fn momentum_observable(orbit: &Orbit, gen: Generator) -> Result<AffineObservable> {
    let kind = orbit.chart_kind();
    if kind == ChartKind::Point {
        return Err(Error::PointOrbit);
    }
    let obs = |alpha, beta, gamma| AffineObservable::new(kind, alpha, beta, gamma);
    Ok(match (*orbit, gen) {
        // (p, q) charts, massive: μ(K) = mq, μ(P) = p
        (Orbit::Abs { m, .. }, Generator::K)
        | (Orbit::Ass { m, .. }, Generator::K)
        | (Orbit::BfsM { m, .. }, Generator::K)
        | (Orbit::FssM { m, .. }, Generator::K) => obs(0.0, m, 0.0),
        (Orbit::Abs { .. }, Generator::P)
        | (Orbit::Ass { .. }, Generator::P)
        | (Orbit::BfsM { .. }, Generator::P)
        | (Orbit::FssM { .. }, Generator::P)
        | (Orbit::Bsf { .. }, Generator::P)
        | (Orbit::Ssf { .. }, Generator::P) => obs(1.0, 0.0, 0.0),
        // energies
        (Orbit::Abs { m, f, i, .. }, Generator::E) => obs(i / m, -f, 0.0),
        (Orbit::Ass { f, .. }, Generator::E) => obs(0.0, -f, 0.0),
        (Orbit::BfsM { m, i, .. }, Generator::E) => obs(i / m, 0.0, 0.0),
        (Orbit::FssM { e, .. }, Generator::E) => obs(0.0, 0.0, e),
        // massless under force: μ(K) = k₀ + p/ω resp. the constant k
        (Orbit::Bsf { f, i, k0 }, Generator::K) => obs(i / f, 0.0, k0),
        (Orbit::Ssf { k, .. }, Generator::K) => obs(0.0, 0.0, k),
        (Orbit::Bsf { f, .. }, Generator::E) | (Orbit::Ssf { f, .. }, Generator::E) => {
            obs(0.0, -f, 0.0)
        }
        // (e, τ) chart: μ(K) = Iτ, μ(P) = p, μ(E) = e
        (Orbit::Bfs0 { i, .. }, Generator::K) => obs(0.0, i, 0.0),
        (Orbit::Bfs0 { p, .. }, Generator::P) => obs(0.0, 0.0, p),
        (Orbit::Bfs0 { .. }, Generator::E) => obs(1.0, 0.0, 0.0),
        (Orbit::Fss0 { .. }, _) => unreachable!("point chart rejected above"),
    })
}

/// Hamiltonian of the orbit: the time-translation momentum component.
pub fn hamiltonian(orbit: &Orbit) -> Result<AffineObservable> {
    momentum_observable(orbit, Generator::E)
}

/// Generator vector field on the chart: the derivative of the pullback
/// argument map along the generator's parameter at the identity.
pub fn vector_field(orbit: &Orbit, gen: Generator) -> Result<(f64, f64)> {
    let realization = realize(orbit);
    let (a, b) = realization.pullback_coeffs().ok_or(Error::PointOrbit)?;
    Ok((a.component(gen), b.component(gen)))
}

/// Integration method for [`flow`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlowMethod {
    /// Closed-form linear motion via the point action of (0, 0, t).
    Exact,
    /// Fixed-step explicit Euler on the Hamiltonian vector field.
    Euler,
    /// Fixed-step classical Runge-Kutta on the Hamiltonian vector field.
    Rk4,
}

impl fmt::Display for FlowMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FlowMethod::Exact => "exact",
            FlowMethod::Euler => "euler",
            FlowMethod::Rk4 => "rk4",
        })
    }
}

impl FromStr for FlowMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(FlowMethod::Exact),
            "euler" => Ok(FlowMethod::Euler),
            "rk4" => Ok(FlowMethod::Rk4),
            other => Err(Error::InvalidInput(format!(
                "unknown flow method `{other}`"
            ))),
        }
    }
}

/// Hamiltonian vector field of H under the chart's sign convention:
/// dc₁/dt = {c₁, H}, dc₂/dt = {c₂, H}.
fn time_field(h: &AffineObservable) -> (f64, f64) {
    (-h.beta, h.alpha)
}

fn euler_step<F>(field: &F, z: (f64, f64), h: f64) -> (f64, f64)
where
    F: Fn((f64, f64)) -> (f64, f64),
{
    let d = field(z);
    (z.0 + h * d.0, z.1 + h * d.1)
}

fn rk4_step<F>(field: &F, z: (f64, f64), h: f64) -> (f64, f64)
where
    F: Fn((f64, f64)) -> (f64, f64),
{
    let k1 = field(z);
    let k2 = field((z.0 + 0.5 * h * k1.0, z.1 + 0.5 * h * k1.1));
    let k3 = field((z.0 + 0.5 * h * k2.0, z.1 + 0.5 * h * k2.1));
    let k4 = field((z.0 + h * k3.0, z.1 + h * k3.1));
    (
        z.0 + h / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0),
        z.1 + h / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1),
    )
}

/// One sampled trajectory row.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FlowSample {
    pub t: f64,
    pub c1: f64,
    pub c2: f64,
    pub h: f64,
}

/// Evolve a chart point for duration `t`.
pub fn flow(
    orbit: &Orbit,
    z0: &ChartPoint,
    t: f64,
    steps: usize,
    method: FlowMethod,
) -> Result<ChartPoint> {
    let samples = sample_flow(orbit, z0, t, steps, method)?;
    let last = samples.last().expect("at least the initial row");
    Ok(ChartPoint::from_coords(z0.kind(), last.c1, last.c2))
}

/// Trajectory rows at uniform times 0, t/steps, …, t (endpoints
/// included); a zero duration yields the single initial row.
pub fn sample_flow(
    orbit: &Orbit,
    z0: &ChartPoint,
    t: f64,
    steps: usize,
    method: FlowMethod,
) -> Result<Vec<FlowSample>> {
    if orbit.chart_kind() == ChartKind::Point {
        return Err(Error::PointOrbit);
    }
    if steps == 0 {
        return Err(Error::ZeroSteps);
    }
    let realization = realize(orbit);
    realization.check_point(z0)?;
    let h_obs = hamiltonian(orbit)?;
    let (c1_0, c2_0) = z0.coords().expect("non-point chart");

    let row = |time: f64, c1: f64, c2: f64| FlowSample {
        t: time,
        c1,
        c2,
        h: h_obs.alpha * c1 + h_obs.beta * c2 + h_obs.gamma,
    };

    if t == 0.0 {
        return Ok(vec![row(0.0, c1_0, c2_0)]);
    }

    let dt = t / steps as f64;
    let mut samples = Vec::with_capacity(steps + 1);
    samples.push(row(0.0, c1_0, c2_0));
    match method {
        FlowMethod::Exact => {
            for step in 1..=steps {
                let time = step as f64 * dt;
                let moved = realization.act_point(&GroupElement::new(0.0, 0.0, time), z0)?;
                let (c1, c2) = moved.coords().expect("non-point chart");
                samples.push(row(time, c1, c2));
            }
        }
        FlowMethod::Euler | FlowMethod::Rk4 => {
            let field = |_z: (f64, f64)| time_field(&h_obs);
            let mut z = (c1_0, c2_0);
            for step in 1..=steps {
                z = match method {
                    FlowMethod::Euler => euler_step(&field, z, dt),
                    FlowMethod::Rk4 => rk4_step(&field, z, dt),
                    FlowMethod::Exact => unreachable!(),
                };
                samples.push(row(step as f64 * dt, z.0, z.1));
            }
        }
    }
    Ok(samples)
}

/// Kernel of the point action: directions in (v, x, t) space acting
/// trivially on the chart.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KernelReport {
    pub dim: usize,
    pub basis: Vec<[f64; 3]>,
}

const KERNEL_TOL: f64 = 1e-12;

fn norm3(v: &[f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

fn project_out(v: &mut [f64; 3], unit: &[f64; 3]) {
    let dot = v[0] * unit[0] + v[1] * unit[1] + v[2] * unit[2];
    for (comp, u) in v.iter_mut().zip(unit) {
        *comp -= dot * u;
    }
}

fn orient(mut v: [f64; 3]) -> [f64; 3] {
    // first significantly-nonzero component positive, for stable output
    if let Some(&lead) = v.iter().find(|c| c.abs() > 1e-9) {
        if lead < 0.0 {
            for c in v.iter_mut() {
                *c = -*c;
            }
        }
    }
    v
}

/// Orthonormal basis of the orthogonal complement of the rows.
fn complement_basis(rows: &[[f64; 3]]) -> Vec<[f64; 3]> {
    let mut span: Vec<[f64; 3]> = Vec::new();
    for row in rows {
        let mut v = *row;
        for unit in &span {
            project_out(&mut v, unit);
        }
        let n = norm3(&v);
        if n > KERNEL_TOL {
            for c in v.iter_mut() {
                *c /= n;
            }
            span.push(v);
        }
    }
    let mut kernel: Vec<[f64; 3]> = Vec::new();
    for axis in 0..3 {
        let mut v = [0.0; 3];
        v[axis] = 1.0;
        for unit in span.iter().chain(kernel.iter()) {
            project_out(&mut v, unit);
        }
        let n = norm3(&v);
        if n > KERNEL_TOL {
            for c in v.iter_mut() {
                *c /= n;
            }
            kernel.push(orient(v));
        }
    }
    kernel
}

/// Compute the kernel of the translation part of the point action.
pub fn action_kernel(orbit: &Orbit) -> KernelReport {
    let realization = realize(orbit);
    let rows: Vec<[f64; 3]> = match realization.pullback_coeffs() {
        // the point action translates by the negated pullback shift;
        // the sign does not change the kernel
        Some((a, b)) => vec![[a.dv, a.dx, a.dt], [b.dv, b.dx, b.dt]],
        None => Vec::new(),
    };
    let basis = complement_basis(&rows);
    KernelReport {
        dim: basis.len(),
        basis,
    }
}

/// JSON form of a realization: class, pullback coefficients, kernel.
#[derive(Debug, Clone, Serialize)]
pub struct RealizationReport {
    pub class: String,
    pub pullback: Option<std::collections::BTreeMap<String, PullbackCoeffs>>,
    pub kernel: KernelReport,
}

/// Build the serializable realization report of an orbit.
pub fn realization_report(orbit: &Orbit) -> RealizationReport {
    let realization = realize(orbit);
    let pullback = realization.pullback_coeffs().map(|(a, b)| {
        let mut map = std::collections::BTreeMap::new();
        map.insert("c1".to_string(), *a);
        map.insert("c2".to_string(), *b);
        map
    });
    RealizationReport {
        class: orbit.class().as_str().to_string(),
        pullback,
        kernel: action_kernel(orbit),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coadjoint::{classify, coadjoint_act, DualVector};

    fn abs_123() -> Orbit {
        Orbit::abs(1.0, 2.0, 3.0, -1.0).unwrap()
    }

    #[test]
    fn realizations_store_the_chart_maps() {
        let r = realize(&abs_123());
        let (c1, c2) = r.pullback_coeffs().unwrap();
        assert_eq!((c1.dv, c1.dx, c1.dt), (1.0, 0.0, -2.0));
        assert_eq!((c2.dv, c2.dx, c2.dt), (0.0, -1.0, -3.0));

        let fss = Orbit::fss_m(1.0, 7.0).unwrap();
        let (c1, c2) = realize(&fss)
            .pullback_coeffs()
            .map(|(a, b)| (*a, *b))
            .unwrap();
        assert_eq!((c1.dv, c1.dx, c1.dt), (1.0, 0.0, 0.0));
        assert_eq!((c2.dv, c2.dx, c2.dt), (0.0, -1.0, 0.0));

        let bfs0 = Orbit::bfs_0(2.0, 0.0).unwrap();
        let (c1, c2) = realize(&bfs0)
            .pullback_coeffs()
            .map(|(a, b)| (*a, *b))
            .unwrap();
        assert_eq!((c1.dv, c1.dx, c1.dt), (2.0, 0.0, 0.0));
        assert_eq!((c2.dv, c2.dx, c2.dt), (0.0, 0.0, -1.0));

        assert!(realize(&Orbit::fss_0(1.0, 2.0, 3.0))
            .pullback_coeffs()
            .is_none());
    }

    #[test]
    fn point_action_values() {
        let orbit = abs_123();
        let z = ChartPoint::Pq { p: 0.0, q: 0.0 };
        let moved = act_point(&orbit, &GroupElement::new(0.0, 0.0, 1.0), &z).unwrap();
        assert_eq!(moved, ChartPoint::Pq { p: 2.0, q: 3.0 });

        assert_eq!(act_point(&orbit, &GroupElement::identity(), &z).unwrap(), z);

        let bsf = Orbit::bsf(2.0, 1.0, 3.0).unwrap();
        let moved = act_point(
            &bsf,
            &GroupElement::new(2.0, 0.0, 0.0),
            &ChartPoint::Pq { p: 4.0, q: 3.0 },
        )
        .unwrap();
        assert_eq!(moved, ChartPoint::Pq { p: 4.0, q: 4.0 });

        // kind mismatch
        assert!(act_point(&orbit, &GroupElement::identity(), &ChartPoint::Point).is_err());
    }

    #[test]
    fn momentum_map_values() {
        let orbit = abs_123();
        let z = ChartPoint::Pq { p: 5.0, q: 4.0 };
        assert_eq!(momentum_map(&orbit, &z).unwrap(), (4.0, 5.0, 7.0));
        assert_eq!(
            momentum_map(&orbit, &ChartPoint::Pq { p: 0.0, q: 0.0 }).unwrap(),
            (0.0, 0.0, 0.0)
        );
        assert!(momentum_map(&Orbit::fss_0(0.0, 0.0, 0.0), &ChartPoint::Point).is_err());
    }

    #[test]
    fn momentum_map_is_equivariant_at_the_worked_instance() {
        let orbit = abs_123();
        let g = GroupElement::new(0.0, 0.0, 1.0);
        let z = ChartPoint::Pq { p: 0.0, q: 0.0 };
        let moved = act_point(&orbit, &g, &z).unwrap();
        let (k, p, e) = momentum_map(&orbit, &moved).unwrap();
        let before = coadjoint_act(&g, &DualVector::new(1.0, 2.0, 3.0, 0.0, 0.0, 0.0));
        assert_eq!((k, p, e), (before.k, before.p, before.e));
        assert_eq!((k, p, e), (3.0, 2.0, 0.0));
    }

    #[test]
    fn hamiltonian_per_class() {
        let h = hamiltonian(&abs_123()).unwrap();
        assert_eq!((h.alpha, h.beta, h.gamma), (3.0, -2.0, 0.0));

        let h = hamiltonian(&Orbit::fss_m(1.0, 7.0).unwrap()).unwrap();
        assert_eq!((h.alpha, h.beta, h.gamma), (0.0, 0.0, 7.0));

        let h = hamiltonian(&Orbit::bsf(2.0, 1.0, 3.0).unwrap()).unwrap();
        assert_eq!((h.alpha, h.beta, h.gamma), (0.0, -2.0, 0.0));

        let h = hamiltonian(&Orbit::bfs_0(2.0, 5.0).unwrap()).unwrap();
        assert_eq!((h.alpha, h.beta, h.gamma), (1.0, 0.0, 0.0));

        assert!(hamiltonian(&Orbit::fss_0(0.0, 0.0, 0.0)).is_err());
    }

    #[test]
    fn vector_field_values() {
        assert_eq!(
            vector_field(&abs_123(), Generator::E).unwrap(),
            (-2.0, -3.0)
        );
        assert_eq!(
            vector_field(&Orbit::fss_m(1.0, 0.0).unwrap(), Generator::K).unwrap(),
            (1.0, 0.0)
        );
        assert_eq!(
            vector_field(&Orbit::bfs_0(2.0, 0.0).unwrap(), Generator::E).unwrap(),
            (0.0, -1.0)
        );
    }

    #[test]
    fn poisson_brackets_reproduce_central_charges() {
        let orbit = abs_123();
        let mu_k = momentum_observable(&orbit, Generator::K).unwrap();
        let mu_p = momentum_observable(&orbit, Generator::P).unwrap();
        let mu_e = momentum_observable(&orbit, Generator::E).unwrap();
        assert_eq!(poisson_value(&mu_k, &mu_p).unwrap(), 1.0); // m
        assert_eq!(poisson_value(&mu_k, &mu_e).unwrap(), 3.0); // I
        assert_eq!(poisson_value(&mu_p, &mu_e).unwrap(), 2.0); // f
        assert_eq!(poisson_value(&mu_k, &mu_k).unwrap(), 0.0);

        let other = AffineObservable::new(ChartKind::ETau, 1.0, 0.0, 0.0);
        assert!(poisson(&mu_k, &other).is_err());
    }

    #[test]
    fn momentum_observables_agree_with_momentum_map() {
        for orbit in [
            abs_123(),
            Orbit::ass(1.5, -2.0, 0.25).unwrap(),
            Orbit::bfs_m(2.0, -1.0, 1.0).unwrap(),
            Orbit::fss_m(-1.5, 3.0).unwrap(),
            Orbit::bsf(2.0, 1.0, 3.0).unwrap(),
            Orbit::ssf(-0.5, 2.0).unwrap(),
            Orbit::bfs_0(2.0, -3.0).unwrap(),
        ] {
            let kind = orbit.chart_kind();
            for (c1, c2) in [(0.0, 0.0), (1.25, -0.5), (-2.0, 3.5)] {
                let z = ChartPoint::from_coords(kind, c1, c2);
                let (k, p, e) = momentum_map(&orbit, &z).unwrap();
                let by_obs = |gen| momentum_observable(&orbit, gen).unwrap().eval(&z).unwrap();
                assert!((by_obs(Generator::K) - k).abs() <= 1e-12, "{orbit:?}");
                assert!((by_obs(Generator::P) - p).abs() <= 1e-12, "{orbit:?}");
                assert!((by_obs(Generator::E) - e).abs() <= 1e-12, "{orbit:?}");
            }
        }
    }

    #[test]
    fn flows_match_worked_values() {
        let orbit = abs_123();
        let z0 = ChartPoint::Pq { p: 0.0, q: 0.0 };
        let end = flow(&orbit, &z0, 2.0, 4, FlowMethod::Exact).unwrap();
        assert_eq!(end, ChartPoint::Pq { p: 4.0, q: 6.0 });

        assert_eq!(flow(&orbit, &z0, 0.0, 4, FlowMethod::Rk4).unwrap(), z0);

        let bfs0 = Orbit::bfs_0(2.0, 0.0).unwrap();
        let end = flow(
            &bfs0,
            &ChartPoint::ETau { e: 5.0, tau: 1.0 },
            3.0,
            1,
            FlowMethod::Exact,
        )
        .unwrap();
        assert_eq!(end, ChartPoint::ETau { e: 5.0, tau: 4.0 });

        assert!(matches!(
            flow(&orbit, &z0, 1.0, 0, FlowMethod::Euler),
            Err(Error::ZeroSteps)
        ));
        assert!(matches!(
            flow(
                &Orbit::fss_0(0.0, 0.0, 0.0),
                &ChartPoint::Point,
                1.0,
                1,
                FlowMethod::Exact
            ),
            Err(Error::PointOrbit)
        ));
    }

    #[test]
    fn numeric_flows_agree_with_exact() {
        let orbit = abs_123();
        let z0 = ChartPoint::Pq { p: 0.25, q: -1.5 };
        let exact = flow(&orbit, &z0, 1.7, 13, FlowMethod::Exact).unwrap();
        for method in [FlowMethod::Euler, FlowMethod::Rk4] {
            let numeric = flow(&orbit, &z0, 1.7, 13, method).unwrap();
            assert!(numeric.distance_inf(&exact) <= 1e-12, "{method}");
        }
    }

    #[test]
    fn flow_samples_include_endpoints_and_constant_energy() {
        let orbit = abs_123();
        let z0 = ChartPoint::Pq { p: 1.0, q: 2.0 };
        let samples = sample_flow(&orbit, &z0, 2.0, 4, FlowMethod::Exact).unwrap();
        assert_eq!(samples.len(), 5);
        assert_eq!(samples[0].t, 0.0);
        assert_eq!(samples[4].t, 2.0);
        let h0 = samples[0].h;
        assert!(samples.iter().all(|s| (s.h - h0).abs() <= 1e-12));

        let single = sample_flow(&orbit, &z0, 0.0, 4, FlowMethod::Exact).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!((single[0].c1, single[0].c2), (1.0, 2.0));
    }

    #[test]
    fn action_kernels_per_class() {
        let report = action_kernel(&abs_123());
        assert_eq!(report.dim, 1);
        // span{(a, −u, 1)} = span{(2, −3, 1)}, normalized
        let n = (14.0f64).sqrt();
        let expected = [2.0 / n, -3.0 / n, 1.0 / n];
        for (got, want) in report.basis[0].iter().zip(expected) {
            assert!((got - want).abs() <= 1e-12);
        }

        let report = action_kernel(&Orbit::fss_m(1.0, 0.0).unwrap());
        assert_eq!(report.dim, 1);
        assert_eq!(report.basis[0], [0.0, 0.0, 1.0]);

        let report = action_kernel(&Orbit::fss_0(1.0, 2.0, 3.0));
        assert_eq!(report.dim, 3);

        for orbit in [
            Orbit::ass(1.0, 2.0, 0.0).unwrap(),
            Orbit::bfs_m(1.0, 3.0, 0.0).unwrap(),
            Orbit::bsf(2.0, 1.0, 0.0).unwrap(),
            Orbit::ssf(2.0, 0.0).unwrap(),
            Orbit::bfs_0(2.0, 0.0).unwrap(),
        ] {
            assert_eq!(action_kernel(&orbit).dim, 1, "{:?}", orbit.class());
        }
    }

    #[test]
    fn kernel_directions_act_trivially() {
        let mu = DualVector::new(1.0, 2.0, 3.0, 4.0, 5.0, 6.0);
        let orbit = classify(&mu, 0.0);
        let z = crate::coadjoint::to_chart(&orbit, &mu).unwrap();
        let report = action_kernel(&orbit);
        for dir in &report.basis {
            let g = GroupElement::new(dir[0], dir[1], dir[2]);
            let moved = act_point(&orbit, &g, &z).unwrap();
            assert!(moved.distance_inf(&z) <= 1e-12);
        }
    }

    #[test]
    fn realization_report_shape() {
        let report = realization_report(&abs_123());
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["class"], "ABS");
        assert_eq!(json["pullback"]["c1"]["dv"], 1.0);
        assert_eq!(json["kernel"]["dim"], 1);

        let trivial = realization_report(&Orbit::fss_0(0.0, 0.0, 0.0));
        assert!(trivial.pullback.is_none());
        assert_eq!(trivial.kernel.dim, 3);
    }
}
