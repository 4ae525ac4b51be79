//! The static group and its central extension as parameter tuples.
//!
//! A bare group element is the triplet (v, x, t): boost velocity, space
//! translation, time translation. The base law is componentwise
//! addition. The extension carries three central parameters (ξ, ζ, y)
//! twisted by a 2-cocycle: the antisymmetric `c₁`, the symmetric (and
//! trivial) `c₂ = δb`, and their sum `c = c₁ + c₂`, all valued in the
//! (ξ, ζ, y) slots.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraVector;
use crate::error::{Error, Result};

/// Element (v, x, t) of the static group.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GroupElement {
    pub v: f64,
    pub x: f64,
    pub t: f64,
}

impl GroupElement {
    pub fn new(v: f64, x: f64, t: f64) -> Self {
        Self { v, x, t }
    }

    pub fn identity() -> Self {
        Self::new(0.0, 0.0, 0.0)
    }

    /// Componentwise sum: the group is (ℝ³, +).
    pub fn compose(&self, other: &Self) -> Self {
        Self::new(self.v + other.v, self.x + other.x, self.t + other.t)
    }

    pub fn inverse(&self) -> Self {
        Self::new(-self.v, -self.x, -self.t)
    }

    pub fn distance_inf(&self, other: &Self) -> f64 {
        (self.v - other.v)
            .abs()
            .max((self.x - other.x).abs())
            .max((self.t - other.t).abs())
    }
}

impl std::ops::Mul for GroupElement {
    type Output = GroupElement;

    fn mul(self, rhs: GroupElement) -> GroupElement {
        self.compose(&rhs)
    }
}

/// Element (ξ, ζ, y, v, x, t) of the centrally extended static group.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExtGroupElement {
    pub xi: f64,
    pub zeta: f64,
    pub y: f64,
    #[serde(flatten)]
    pub g: GroupElement,
}

impl ExtGroupElement {
    pub fn new(xi: f64, zeta: f64, y: f64, v: f64, x: f64, t: f64) -> Self {
        Self {
            xi,
            zeta,
            y,
            g: GroupElement::new(v, x, t),
        }
    }

    pub fn identity() -> Self {
        Self::new(0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
    }

    /// Central parts add together with the cocycle `c`; base parts add.
    pub fn compose(&self, other: &Self) -> Self {
        let twist = cocycle(CocycleKind::C, &self.g, &other.g);
        Self {
            xi: self.xi + other.xi + twist.xi,
            zeta: self.zeta + other.zeta + twist.zeta,
            y: self.y + other.y + twist.y,
            g: self.g.compose(&other.g),
        }
    }

    /// Inverse under the twisted law: (−ξ+vx, −ζ+xt, −y+vt, −v, −x, −t).
    pub fn inverse(&self) -> Self {
        let GroupElement { v, x, t } = self.g;
        Self::new(
            -self.xi + v * x,
            -self.zeta + x * t,
            -self.y + v * t,
            -v,
            -x,
            -t,
        )
    }

    pub fn distance_inf(&self, other: &Self) -> f64 {
        (self.xi - other.xi)
            .abs()
            .max((self.zeta - other.zeta).abs())
            .max((self.y - other.y).abs())
            .max(self.g.distance_inf(&other.g))
    }
}

impl std::ops::Mul for ExtGroupElement {
    type Output = ExtGroupElement;

    fn mul(self, rhs: ExtGroupElement) -> ExtGroupElement {
        self.compose(&rhs)
    }
}

/// A value in the central (ξ, ζ, y) slots.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CocycleValue {
    pub xi: f64,
    pub zeta: f64,
    pub y: f64,
}

impl CocycleValue {
    pub fn new(xi: f64, zeta: f64, y: f64) -> Self {
        Self { xi, zeta, y }
    }

    pub fn zero() -> Self {
        Self::new(0.0, 0.0, 0.0)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.xi + other.xi, self.zeta + other.zeta, self.y + other.y)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.xi - other.xi, self.zeta - other.zeta, self.y - other.y)
    }

    pub fn norm_inf(&self) -> f64 {
        self.xi.abs().max(self.zeta.abs()).max(self.y.abs())
    }
}

/// The three named 2-cocycles on the static group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CocycleKind {
    /// Antisymmetric part: ½(vx′−v′x, xt′−x′t, vt′−v′t).
    C1,
    /// Symmetric part: ½(vx′+v′x, xt′+x′t, vt′+v′t); a coboundary.
    C2,
    /// Sum c₁ + c₂ = (vx′, xt′, vt′); the twist of the extended law.
    C,
}

impl fmt::Display for CocycleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CocycleKind::C1 => "c1",
            CocycleKind::C2 => "c2",
            CocycleKind::C => "c",
        })
    }
}

impl FromStr for CocycleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "c1" => Ok(CocycleKind::C1),
            "c2" => Ok(CocycleKind::C2),
            "c" => Ok(CocycleKind::C),
            other => Err(Error::UnknownCocycleKind(other.to_string())),
        }
    }
}

/// Evaluate one of the named cocycles at a pair of group elements.
pub fn cocycle(kind: CocycleKind, g: &GroupElement, h: &GroupElement) -> CocycleValue {
    let (v, x, t) = (g.v, g.x, g.t);
    let (v2, x2, t2) = (h.v, h.x, h.t);
    match kind {
        CocycleKind::C1 => CocycleValue::new(
            0.5 * (v * x2 - v2 * x),
            0.5 * (x * t2 - x2 * t),
            0.5 * (v * t2 - v2 * t),
        ),
        CocycleKind::C2 => CocycleValue::new(
            0.5 * (v * x2 + v2 * x),
            0.5 * (x * t2 + x2 * t),
            0.5 * (v * t2 + v2 * t),
        ),
        CocycleKind::C => CocycleValue::new(v * x2, x * t2, v * t2),
    }
}

/// The trivializing map b(g) = ½(vx, xt, vt).
pub fn b_map(g: &GroupElement) -> CocycleValue {
    CocycleValue::new(0.5 * g.v * g.x, 0.5 * g.x * g.t, 0.5 * g.v * g.t)
}

/// Coboundary of b: δb(g, h) = b(g·h) − b(g) − b(h).
pub fn coboundary_of_b(g: &GroupElement, h: &GroupElement) -> CocycleValue {
    b_map(&g.compose(h)).sub(&b_map(g)).sub(&b_map(h))
}

/// Residual of the 2-cocycle identity
/// `c(g1,g2) + c(g1·g2, g3) − c(g1, g2·g3) − c(g2, g3)`.
///
/// Identically zero for all three kinds.
pub fn verify_cocycle_identity(
    kind: CocycleKind,
    g1: &GroupElement,
    g2: &GroupElement,
    g3: &GroupElement,
) -> CocycleValue {
    cocycle(kind, g1, g2)
        .add(&cocycle(kind, &g1.compose(g2), g3))
        .sub(&cocycle(kind, g1, &g2.compose(g3)))
        .sub(&cocycle(kind, g2, g3))
}

/// A cocycle to compare in [`coboundary_equivalent`]: one of the named
/// kinds or the zero cocycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CocycleChoice {
    Kind(CocycleKind),
    Zero,
}

impl CocycleChoice {
    fn eval(&self, g: &GroupElement, h: &GroupElement) -> CocycleValue {
        match self {
            CocycleChoice::Kind(kind) => cocycle(*kind, g, h),
            CocycleChoice::Zero => CocycleValue::zero(),
        }
    }
}

impl fmt::Display for CocycleChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CocycleChoice::Kind(k) => k.fmt(f),
            CocycleChoice::Zero => f.write_str("0"),
        }
    }
}

/// Outcome of an equivalence-via-b check.
#[derive(Debug, Clone, Serialize)]
pub struct EquivalenceReport {
    pub lhs: String,
    pub rhs: String,
    pub equivalent: bool,
    pub max_residual: f64,
    pub samples: usize,
}

/// Small-integer grid of group elements, (v, x, t) ∈ {−2..2}³.
pub fn integer_grid() -> Vec<GroupElement> {
    let mut grid = Vec::with_capacity(125);
    for v in -2..=2 {
        for x in -2..=2 {
            for t in -2..=2 {
                grid.push(GroupElement::new(v as f64, x as f64, t as f64));
            }
        }
    }
    grid
}

/// Check whether `a − b = δb` on the integer grid plus `trials` random
/// pairs, i.e. whether the two cocycles differ by the coboundary of b.
pub fn coboundary_equivalent(
    a: CocycleChoice,
    b: CocycleChoice,
    trials: usize,
    tol: f64,
    rng: &mut impl Rng,
) -> EquivalenceReport {
    let mut max_residual: f64 = 0.0;
    let mut samples = 0;
    let mut probe = |g: &GroupElement, h: &GroupElement| {
        let difference = a.eval(g, h).sub(&b.eval(g, h));
        let residual = difference.sub(&coboundary_of_b(g, h)).norm_inf();
        max_residual = max_residual.max(residual);
        samples += 1;
    };
    let grid = integer_grid();
    for g in &grid {
        for h in &grid {
            probe(g, h);
        }
    }
    for _ in 0..trials {
        let g = random_element(rng);
        let h = random_element(rng);
        probe(&g, &h);
    }
    EquivalenceReport {
        lhs: a.to_string(),
        rhs: b.to_string(),
        equivalent: max_residual <= tol,
        max_residual,
        samples,
    }
}

/// Uniform random element with parameters in [−2, 2).
pub fn random_element(rng: &mut impl Rng) -> GroupElement {
    GroupElement::new(
        rng.random_range(-2.0..2.0),
        rng.random_range(-2.0..2.0),
        rng.random_range(-2.0..2.0),
    )
}

/// Uniform random extended element with parameters in [−2, 2).
pub fn random_ext_element(rng: &mut impl Rng) -> ExtGroupElement {
    ExtGroupElement {
        xi: rng.random_range(-2.0..2.0),
        zeta: rng.random_range(-2.0..2.0),
        y: rng.random_range(-2.0..2.0),
        g: random_element(rng),
    }
}

/// Adjoint action of the base group on the extended algebra:
/// the central slots pick up (vδx−xδv, xδt−tδx, vδt−tδv); the base
/// slots are untouched.
pub fn adjoint(g: &GroupElement, delta: &AlgebraVector) -> Result<AlgebraVector> {
    if delta.dim() != 6 {
        return Err(Error::DimensionMismatch {
            expected: 6,
            got: delta.dim(),
        });
    }
    let (dxi, dzeta, dy, dv, dx, dt) = (delta[0], delta[1], delta[2], delta[3], delta[4], delta[5]);
    Ok(AlgebraVector::static_ext(
        dxi + g.v * dx - g.x * dv,
        dzeta + g.x * dt - g.t * dx,
        dy + g.v * dt - g.t * dv,
        dv,
        dx,
        dt,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn base_law_is_componentwise_addition() {
        let g = GroupElement::new(1.0, 2.0, 3.0);
        let h = GroupElement::new(4.0, 5.0, 6.0);
        assert_eq!(g * h, GroupElement::new(5.0, 7.0, 9.0));
        assert_eq!(g * GroupElement::identity(), g);
        assert_eq!(g * g.inverse(), GroupElement::identity());
    }

    #[test]
    fn cocycle_values() {
        let g = GroupElement::new(1.0, 2.0, 3.0);
        let h = GroupElement::new(4.0, 5.0, 6.0);
        assert_eq!(
            cocycle(CocycleKind::C, &g, &h),
            CocycleValue::new(5.0, 12.0, 6.0)
        );
        assert_eq!(cocycle(CocycleKind::C1, &g, &g), CocycleValue::zero());
        assert_eq!(
            cocycle(
                CocycleKind::C1,
                &GroupElement::new(1.0, 0.0, 0.0),
                &GroupElement::new(0.0, 1.0, 0.0)
            ),
            CocycleValue::new(0.5, 0.0, 0.0)
        );
    }

    #[test]
    fn c_splits_into_c1_plus_c2() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let g = random_element(&mut rng);
            let h = random_element(&mut rng);
            let lhs = cocycle(CocycleKind::C, &g, &h);
            let rhs = cocycle(CocycleKind::C1, &g, &h).add(&cocycle(CocycleKind::C2, &g, &h));
            assert!(lhs.sub(&rhs).norm_inf() <= 1e-12);
        }
    }

    #[test]
    fn b_map_values() {
        assert_eq!(
            b_map(&GroupElement::new(2.0, 3.0, 4.0)),
            CocycleValue::new(3.0, 6.0, 4.0)
        );
        assert_eq!(b_map(&GroupElement::identity()), CocycleValue::zero());
        assert_eq!(
            b_map(&GroupElement::new(1.0, 1.0, 1.0)),
            CocycleValue::new(0.5, 0.5, 0.5)
        );
    }

    #[test]
    fn cocycle_identity_holds() {
        let g1 = GroupElement::new(1.0, 0.0, 0.0);
        let g2 = GroupElement::new(0.0, 1.0, 0.0);
        let g3 = GroupElement::new(0.0, 0.0, 1.0);
        assert_eq!(
            verify_cocycle_identity(CocycleKind::C, &g1, &g2, &g3),
            CocycleValue::zero()
        );
        // normalization: residual vanishes when the middle element is the identity
        let e = GroupElement::identity();
        for kind in [CocycleKind::C1, CocycleKind::C2, CocycleKind::C] {
            assert_eq!(
                verify_cocycle_identity(kind, &g1, &e, &g3),
                CocycleValue::zero()
            );
        }
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let (a, b, c) = (
                random_element(&mut rng),
                random_element(&mut rng),
                random_element(&mut rng),
            );
            assert!(verify_cocycle_identity(CocycleKind::C1, &a, &b, &c).norm_inf() <= 1e-12);
        }
    }

    #[test]
    fn coboundary_equivalences() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let report = coboundary_equivalent(
            CocycleChoice::Kind(CocycleKind::C),
            CocycleChoice::Kind(CocycleKind::C1),
            100,
            1e-12,
            &mut rng,
        );
        assert!(
            report.equivalent,
            "c − c1 = δb, residual {}",
            report.max_residual
        );

        let report = coboundary_equivalent(
            CocycleChoice::Kind(CocycleKind::C2),
            CocycleChoice::Zero,
            100,
            1e-12,
            &mut rng,
        );
        assert!(report.equivalent, "c2 = δb");

        let report = coboundary_equivalent(
            CocycleChoice::Kind(CocycleKind::C1),
            CocycleChoice::Zero,
            0,
            1e-12,
            &mut rng,
        );
        assert!(!report.equivalent, "c1 is not a coboundary of b");
        assert!(report.max_residual >= 0.5);

        // The antisymmetric c1 agrees with the symmetric δb at
        // ((1,0,0),(0,1,0)) but not with the arguments swapped.
        let g = GroupElement::new(1.0, 0.0, 0.0);
        let h = GroupElement::new(0.0, 1.0, 0.0);
        let fwd = cocycle(CocycleKind::C1, &g, &h).sub(&coboundary_of_b(&g, &h));
        let swapped = cocycle(CocycleKind::C1, &h, &g).sub(&coboundary_of_b(&h, &g));
        assert_eq!(fwd.norm_inf(), 0.0);
        assert_eq!(swapped.norm_inf(), 1.0);
    }

    #[test]
    fn extended_law_values() {
        let a = ExtGroupElement::new(0.0, 0.0, 0.0, 1.0, 2.0, 3.0);
        let b = ExtGroupElement::new(0.0, 0.0, 0.0, 4.0, 5.0, 6.0);
        assert_eq!(a * b, ExtGroupElement::new(5.0, 12.0, 6.0, 5.0, 7.0, 9.0));
        assert_eq!(a * ExtGroupElement::identity(), a);
        assert_eq!(a * a.inverse(), ExtGroupElement::identity());
        assert_eq!(a.inverse() * a, ExtGroupElement::identity());
    }

    #[test]
    fn adjoint_values() {
        let delta_x = AlgebraVector::static_ext(0.0, 0.0, 0.0, 0.0, 1.0, 0.0);
        let moved = adjoint(&GroupElement::new(1.0, 0.0, 0.0), &delta_x).unwrap();
        assert_eq!(moved.coeffs(), &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0]);

        let any = AlgebraVector::static_ext(0.4, -0.3, 0.2, 1.0, -2.0, 0.5);
        assert_eq!(adjoint(&GroupElement::identity(), &any).unwrap(), any);

        let delta_v = AlgebraVector::static_ext(0.0, 0.0, 0.0, 1.0, 0.0, 0.0);
        let moved = adjoint(&GroupElement::new(2.0, 3.0, 1.0), &delta_v).unwrap();
        assert_eq!(moved.coeffs(), &[-3.0, 0.0, -1.0, 1.0, 0.0, 0.0]);

        assert!(adjoint(&GroupElement::identity(), &AlgebraVector::zero(3)).is_err());
    }

    #[test]
    fn ext_json_shape() {
        let a = ExtGroupElement::new(1.0, 2.0, 3.0, 4.0, 5.0, 6.0);
        let json = serde_json::to_value(a).unwrap();
        assert_eq!(json["xi"], 1.0);
        assert_eq!(json["v"], 4.0);
        let back: ExtGroupElement = serde_json::from_value(json).unwrap();
        assert_eq!(back, a);
    }
}
