//! The dual of the extended static algebra and its orbit geometry.
//!
//! A [`DualVector`] (m, f, I, k, p, e) pairs with algebra elements by a
//! plain dot product in the (M, F, Y, K, P, E) basis order. The base
//! group acts on the dual by an affine map that fixes (m, f, I); the
//! zero pattern of those three slots splits the dual into eight orbit
//! classes, four massive (m ≠ 0) and four massless. Each class carries
//! an invariant record and, except for the fixed-point class, a
//! two-dimensional canonical chart: (p, q) or (e, τ).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::algebra::{
    ext_index, registry_get, AlgebraName, AlgebraParams, AlgebraVector, BracketTable,
};
use crate::error::{Error, Result};
use crate::group::GroupElement;

/// Default absolute tolerance for the zero tests in [`classify`].
pub const DEFAULT_CLASSIFY_TOL: f64 = 1e-12;

/// Point (m, f, I, k, p, e) of the dual of the extended algebra.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DualVector {
    /// Mass.
    pub m: f64,
    /// Force.
    pub f: f64,
    /// Impetus.
    #[serde(rename = "I")]
    pub i: f64,
    /// Static momentum (mass × position).
    pub k: f64,
    /// Linear momentum.
    pub p: f64,
    /// Energy.
    pub e: f64,
}

impl DualVector {
    pub fn new(m: f64, f: f64, i: f64, k: f64, p: f64, e: f64) -> Self {
        Self { m, f, i, k, p, e }
    }

    pub fn as_array(&self) -> [f64; 6] {
        [self.m, self.f, self.i, self.k, self.p, self.e]
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(
            s * self.m,
            s * self.f,
            s * self.i,
            s * self.k,
            s * self.p,
            s * self.e,
        )
    }

    pub fn distance_inf(&self, other: &Self) -> f64 {
        self.as_array()
            .iter()
            .zip(other.as_array())
            .fold(0.0f64, |acc, (a, b)| acc.max((a - b).abs()))
    }
}

/// Duality pairing ⟨μ, δ⟩ = mδξ + fδζ + Iδy + kδv + pδx + eδt.
pub fn pair(mu: &DualVector, delta: &AlgebraVector) -> Result<f64> {
    if delta.dim() != 6 {
        return Err(Error::DimensionMismatch {
            expected: 6,
            got: delta.dim(),
        });
    }
    Ok(mu
        .as_array()
        .iter()
        .zip(delta.coeffs())
        .map(|(a, b)| a * b)
        .sum())
}

/// Coadjoint action of g = (v, x, t):
/// (m, f, I, k + mx + It, p − mv + ft, e − fx − Iv).
pub fn coadjoint_act(g: &GroupElement, mu: &DualVector) -> DualVector {
    DualVector::new(
        mu.m,
        mu.f,
        mu.i,
        mu.k + mu.m * g.x + mu.i * g.t,
        mu.p - mu.m * g.v + mu.f * g.t,
        mu.e - mu.f * g.x - mu.i * g.v,
    )
}

fn static_ext_table() -> &'static BracketTable {
    static TABLE: OnceLock<BracketTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        registry_get(AlgebraName::StaticExt, &AlgebraParams::default())
            .expect("the extension table takes no parameters")
    })
}

/// Kirillov form over the (K, P, E) directions, computed generically as
/// entry(i, j) = ⟨μ, [eᵢ, eⱼ]⟩ from the extension's structure constants.
pub fn kirillov(mu: &DualVector) -> [[f64; 3]; 3] {
    let tbl = static_ext_table();
    let gens = [ext_index::K, ext_index::P, ext_index::E];
    let mut out = [[0.0; 3]; 3];
    for (a, &ga) in gens.iter().enumerate() {
        for (b, &gb) in gens.iter().enumerate() {
            let bracket = tbl
                .bracket(&AlgebraVector::basis(6, ga), &AlgebraVector::basis(6, gb))
                .expect("basis vectors conform");
            out[a][b] = pair(mu, &bracket).expect("dimensions agree");
        }
    }
    out
}

/// Rank of an antisymmetric 3×3 form: 0 or 2.
pub fn kirillov_rank(form: &[[f64; 3]; 3], tol: f64) -> usize {
    let max = form
        .iter()
        .flatten()
        .fold(0.0f64, |acc, v| acc.max(v.abs()));
    if max > tol {
        2
    } else {
        0
    }
}

/// The eight orbit classes, keyed by the zero pattern of (m, f, I).
///
/// `_M` marks the massive free/static classes and `_0` the massless
/// ones; the source taxonomy reuses the same acronym for both (see
/// erratum E4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrbitClass {
    /// Accelerated boosted massive: m ≠ 0, f ≠ 0, I ≠ 0.
    Abs,
    /// Accelerated static massive: m ≠ 0, f ≠ 0, I = 0.
    Ass,
    /// Boosted free massive: m ≠ 0, f = 0, I ≠ 0.
    BfsM,
    /// Free static massive: m ≠ 0, f = 0, I = 0.
    FssM,
    /// Boosted massless under force: m = 0, f ≠ 0, I ≠ 0.
    Bsf,
    /// Static massless under force: m = 0, f ≠ 0, I = 0.
    Ssf,
    /// Boosted free massless: m = 0, f = 0, I ≠ 0.
    Bfs0,
    /// Fixed point: m = f = I = 0.
    Fss0,
}

impl OrbitClass {
    pub const ALL: [OrbitClass; 8] = [
        OrbitClass::Abs,
        OrbitClass::Ass,
        OrbitClass::BfsM,
        OrbitClass::FssM,
        OrbitClass::Bsf,
        OrbitClass::Ssf,
        OrbitClass::Bfs0,
        OrbitClass::Fss0,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            OrbitClass::Abs => "ABS",
            OrbitClass::Ass => "ASS",
            OrbitClass::BfsM => "BFS_M",
            OrbitClass::FssM => "FSS_M",
            OrbitClass::Bsf => "BSF",
            OrbitClass::Ssf => "SSF",
            OrbitClass::Bfs0 => "BFS_0",
            OrbitClass::Fss0 => "FSS_0",
        }
    }

    pub fn chart_kind(&self) -> ChartKind {
        match self {
            OrbitClass::Bfs0 => ChartKind::ETau,
            OrbitClass::Fss0 => ChartKind::Point,
            _ => ChartKind::Pq,
        }
    }

    pub fn orbit_dim(&self) -> usize {
        match self.chart_kind() {
            ChartKind::Point => 0,
            _ => 2,
        }
    }
}

impl fmt::Display for OrbitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OrbitClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OrbitClass::ALL
            .iter()
            .copied()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidInput(format!("unknown orbit class `{s}`")))
    }
}

/// Chart families carried by the orbits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChartKind {
    /// Canonical (p, q) chart, σ = dp ∧ dq.
    Pq,
    /// Canonical (e, τ) chart, σ = de ∧ dτ.
    ETau,
    /// Zero-dimensional chart.
    Point,
}

impl ChartKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ChartKind::Pq => "PQ",
            ChartKind::ETau => "ETAU",
            ChartKind::Point => "POINT",
        }
    }

    /// Coordinate names, used for trajectory headers.
    pub fn coord_names(&self) -> (&'static str, &'static str) {
        match self {
            ChartKind::Pq => ("p", "q"),
            ChartKind::ETau => ("e", "tau"),
            ChartKind::Point => ("", ""),
        }
    }
}

impl fmt::Display for ChartKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Canonical coordinates of a point on an orbit chart.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ChartPoint {
    #[serde(rename = "PQ")]
    Pq { p: f64, q: f64 },
    #[serde(rename = "ETAU")]
    ETau { e: f64, tau: f64 },
    #[serde(rename = "POINT")]
    Point,
}

impl ChartPoint {
    pub fn kind(&self) -> ChartKind {
        match self {
            ChartPoint::Pq { .. } => ChartKind::Pq,
            ChartPoint::ETau { .. } => ChartKind::ETau,
            ChartPoint::Point => ChartKind::Point,
        }
    }

    /// The coordinate pair, in chart order.
    pub fn coords(&self) -> Option<(f64, f64)> {
        match *self {
            ChartPoint::Pq { p, q } => Some((p, q)),
            ChartPoint::ETau { e, tau } => Some((e, tau)),
            ChartPoint::Point => None,
        }
    }

    pub fn from_coords(kind: ChartKind, c1: f64, c2: f64) -> Self {
        match kind {
            ChartKind::Pq => ChartPoint::Pq { p: c1, q: c2 },
            ChartKind::ETau => ChartPoint::ETau { e: c1, tau: c2 },
            ChartKind::Point => ChartPoint::Point,
        }
    }

    pub fn distance_inf(&self, other: &Self) -> f64 {
        match (self.coords(), other.coords()) {
            (Some((a1, a2)), Some((b1, b2))) => (a1 - b1).abs().max((a2 - b2).abs()),
            (None, None) => 0.0,
            _ => f64::INFINITY,
        }
    }
}

/// A classified orbit: class tag plus its invariant record.
///
/// Invariant names follow the class: `U` is the internal energy of the
/// massive accelerated/free classes, `k0` the shifted static momentum
/// of the boosted massless class; the remaining slots are read off the
/// dual vector directly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Orbit {
    Abs { m: f64, f: f64, i: f64, u: f64 },
    Ass { m: f64, f: f64, u: f64 },
    BfsM { m: f64, i: f64, u: f64 },
    FssM { m: f64, e: f64 },
    Bsf { f: f64, i: f64, k0: f64 },
    Ssf { f: f64, k: f64 },
    Bfs0 { i: f64, p: f64 },
    Fss0 { k: f64, p: f64, e: f64 },
}

fn require_nonzero(name: &str, value: f64) -> Result<f64> {
    if value == 0.0 || !value.is_finite() {
        return Err(Error::InvalidInput(format!(
            "invariant `{name}` must be finite and nonzero, got {value}"
        )));
    }
    Ok(value)
}

impl Orbit {
    pub fn abs(m: f64, f: f64, i: f64, u: f64) -> Result<Self> {
        Ok(Orbit::Abs {
            m: require_nonzero("m", m)?,
            f: require_nonzero("f", f)?,
            i: require_nonzero("I", i)?,
            u,
        })
    }

    pub fn ass(m: f64, f: f64, u: f64) -> Result<Self> {
        Ok(Orbit::Ass {
            m: require_nonzero("m", m)?,
            f: require_nonzero("f", f)?,
            u,
        })
    }

    pub fn bfs_m(m: f64, i: f64, u: f64) -> Result<Self> {
        Ok(Orbit::BfsM {
            m: require_nonzero("m", m)?,
            i: require_nonzero("I", i)?,
            u,
        })
    }

    pub fn fss_m(m: f64, e: f64) -> Result<Self> {
        Ok(Orbit::FssM {
            m: require_nonzero("m", m)?,
            e,
        })
    }

    pub fn bsf(f: f64, i: f64, k0: f64) -> Result<Self> {
        Ok(Orbit::Bsf {
            f: require_nonzero("f", f)?,
            i: require_nonzero("I", i)?,
            k0,
        })
    }

    pub fn ssf(f: f64, k: f64) -> Result<Self> {
        Ok(Orbit::Ssf {
            f: require_nonzero("f", f)?,
            k,
        })
    }

    pub fn bfs_0(i: f64, p: f64) -> Result<Self> {
        Ok(Orbit::Bfs0 {
            i: require_nonzero("I", i)?,
            p,
        })
    }

    pub fn fss_0(k: f64, p: f64, e: f64) -> Self {
        Orbit::Fss0 { k, p, e }
    }

    pub fn class(&self) -> OrbitClass {
        match self {
            Orbit::Abs { .. } => OrbitClass::Abs,
            Orbit::Ass { .. } => OrbitClass::Ass,
            Orbit::BfsM { .. } => OrbitClass::BfsM,
            Orbit::FssM { .. } => OrbitClass::FssM,
            Orbit::Bsf { .. } => OrbitClass::Bsf,
            Orbit::Ssf { .. } => OrbitClass::Ssf,
            Orbit::Bfs0 { .. } => OrbitClass::Bfs0,
            Orbit::Fss0 { .. } => OrbitClass::Fss0,
        }
    }

    pub fn chart_kind(&self) -> ChartKind {
        self.class().chart_kind()
    }

    pub fn dim(&self) -> usize {
        self.class().orbit_dim()
    }

    /// The (m, f, I) values, with the class's structural zeros filled in.
    pub fn mfi(&self) -> (f64, f64, f64) {
        match *self {
            Orbit::Abs { m, f, i, .. } => (m, f, i),
            Orbit::Ass { m, f, .. } => (m, f, 0.0),
            Orbit::BfsM { m, i, .. } => (m, 0.0, i),
            Orbit::FssM { m, .. } => (m, 0.0, 0.0),
            Orbit::Bsf { f, i, .. } => (0.0, f, i),
            Orbit::Ssf { f, .. } => (0.0, f, 0.0),
            Orbit::Bfs0 { i, .. } => (0.0, 0.0, i),
            Orbit::Fss0 { .. } => (0.0, 0.0, 0.0),
        }
    }

    /// Constant boost u = I/m, where defined.
    pub fn boost(&self) -> Option<f64> {
        match *self {
            Orbit::Abs { m, i, .. } | Orbit::BfsM { m, i, .. } => Some(i / m),
            Orbit::Ass { .. } | Orbit::FssM { .. } => Some(0.0),
            _ => None,
        }
    }

    /// Acceleration a = f/m, where defined.
    pub fn acceleration(&self) -> Option<f64> {
        match *self {
            Orbit::Abs { m, f, .. } | Orbit::Ass { m, f, .. } => Some(f / m),
            Orbit::BfsM { .. } | Orbit::FssM { .. } => Some(0.0),
            _ => None,
        }
    }

    /// Invariant frequency ω = f/I of the boosted massless class.
    pub fn frequency(&self) -> Option<f64> {
        match *self {
            Orbit::Bsf { f, i, .. } => Some(f / i),
            _ => None,
        }
    }

    /// Named invariant record, as emitted in reports.
    pub fn invariant_values(&self) -> BTreeMap<String, f64> {
        let mut map = BTreeMap::new();
        match *self {
            Orbit::Abs { m, f, i, u } => {
                map.insert("m".into(), m);
                map.insert("f".into(), f);
                map.insert("I".into(), i);
                map.insert("U".into(), u);
            }
            Orbit::Ass { m, f, u } => {
                map.insert("m".into(), m);
                map.insert("f".into(), f);
                map.insert("U".into(), u);
            }
            Orbit::BfsM { m, i, u } => {
                map.insert("m".into(), m);
                map.insert("I".into(), i);
                map.insert("U".into(), u);
            }
            Orbit::FssM { m, e } => {
                map.insert("m".into(), m);
                map.insert("e".into(), e);
            }
            Orbit::Bsf { f, i, k0 } => {
                map.insert("f".into(), f);
                map.insert("I".into(), i);
                map.insert("k0".into(), k0);
            }
            Orbit::Ssf { f, k } => {
                map.insert("f".into(), f);
                map.insert("k".into(), k);
            }
            Orbit::Bfs0 { i, p } => {
                map.insert("I".into(), i);
                map.insert("p".into(), p);
            }
            Orbit::Fss0 { k, p, e } => {
                map.insert("k".into(), k);
                map.insert("p".into(), p);
                map.insert("e".into(), e);
            }
        }
        map
    }

    /// Derived quantities (u, a, ω) where the class defines them.
    pub fn derived_values(&self) -> BTreeMap<String, f64> {
        let mut map = BTreeMap::new();
        match self.class() {
            OrbitClass::Abs => {
                map.insert("u".into(), self.boost().unwrap());
                map.insert("a".into(), self.acceleration().unwrap());
            }
            OrbitClass::Ass => {
                map.insert("a".into(), self.acceleration().unwrap());
            }
            OrbitClass::BfsM => {
                map.insert("u".into(), self.boost().unwrap());
            }
            OrbitClass::Bsf => {
                map.insert("omega".into(), self.frequency().unwrap());
            }
            _ => {}
        }
        map
    }

    /// Copy of the orbit with the additive energy constant U set to zero.
    ///
    /// Used by the momentum map, which normalizes the Hamiltonian's free
    /// constant; the fixed invariants of the other classes stay as they
    /// are.
    pub fn normalized(&self) -> Orbit {
        match *self {
            Orbit::Abs { m, f, i, .. } => Orbit::Abs { m, f, i, u: 0.0 },
            Orbit::Ass { m, f, .. } => Orbit::Ass { m, f, u: 0.0 },
            Orbit::BfsM { m, i, .. } => Orbit::BfsM { m, i, u: 0.0 },
            other => other,
        }
    }

    /// Structured report: class, invariants, derived, chart, dimension.
    pub fn report(&self) -> OrbitReport {
        OrbitReport {
            class: self.class().as_str().to_string(),
            invariants: self.invariant_values(),
            derived: self.derived_values(),
            chart_kind: self.chart_kind().as_str().to_string(),
            orbit_dim: self.dim(),
        }
    }

    /// Rebuild an orbit from a class tag and named invariants.
    pub fn from_parts(class: OrbitClass, inv: &BTreeMap<String, f64>) -> Result<Self> {
        let get = |key: &str| -> Result<f64> {
            inv.get(key).copied().ok_or_else(|| {
                Error::InvalidInput(format!("class {class} requires invariant `{key}`"))
            })
        };
        match class {
            OrbitClass::Abs => Orbit::abs(get("m")?, get("f")?, get("I")?, get("U")?),
            OrbitClass::Ass => Orbit::ass(get("m")?, get("f")?, get("U")?),
            OrbitClass::BfsM => Orbit::bfs_m(get("m")?, get("I")?, get("U")?),
            OrbitClass::FssM => Orbit::fss_m(get("m")?, get("e")?),
            OrbitClass::Bsf => Orbit::bsf(get("f")?, get("I")?, get("k0")?),
            OrbitClass::Ssf => Orbit::ssf(get("f")?, get("k")?),
            OrbitClass::Bfs0 => Orbit::bfs_0(get("I")?, get("p")?),
            OrbitClass::Fss0 => Ok(Orbit::fss_0(get("k")?, get("p")?, get("e")?)),
        }
    }
}

impl Serialize for Orbit {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            class: &'a str,
            invariants: BTreeMap<String, f64>,
        }
        Repr {
            class: self.class().as_str(),
            invariants: self.invariant_values(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Orbit {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            class: String,
            invariants: BTreeMap<String, f64>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let class = repr.class.parse().map_err(serde::de::Error::custom)?;
        Orbit::from_parts(class, &repr.invariants).map_err(serde::de::Error::custom)
    }
}

/// JSON form of an orbit classification.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrbitReport {
    pub class: String,
    pub invariants: BTreeMap<String, f64>,
    pub derived: BTreeMap<String, f64>,
    pub chart_kind: String,
    pub orbit_dim: usize,
}

/// Classify a dual vector by the zero pattern of (m, f, I).
///
/// `tol` is the absolute threshold below which a slot counts as zero;
/// tol = 0 gives exact-zero semantics. Classification is discontinuous
/// across the pattern boundaries, so the caller owns this choice.
pub fn classify(mu: &DualVector, tol: f64) -> Orbit {
    let tol = tol.max(0.0);
    let nz = |v: f64| v.abs() > tol;
    match (nz(mu.m), nz(mu.f), nz(mu.i)) {
        (true, true, true) => {
            let u = mu.i / mu.m;
            let q = mu.k / mu.m;
            Orbit::Abs {
                m: mu.m,
                f: mu.f,
                i: mu.i,
                u: mu.e - mu.p * u + mu.f * q,
            }
        }
        (true, true, false) => Orbit::Ass {
            m: mu.m,
            f: mu.f,
            // e + f·k/m; the printed e − fq is not preserved by the
            // action (erratum E2).
            u: mu.e + mu.f * mu.k / mu.m,
        },
        (true, false, true) => Orbit::BfsM {
            m: mu.m,
            i: mu.i,
            u: mu.e - mu.p * (mu.i / mu.m),
        },
        (true, false, false) => Orbit::FssM { m: mu.m, e: mu.e },
        (false, true, true) => {
            let omega = mu.f / mu.i;
            Orbit::Bsf {
                f: mu.f,
                i: mu.i,
                k0: mu.k - mu.p / omega,
            }
        }
        (false, true, false) => Orbit::Ssf { f: mu.f, k: mu.k },
        (false, false, true) => Orbit::Bfs0 { i: mu.i, p: mu.p },
        (false, false, false) => Orbit::Fss0 {
            k: mu.k,
            p: mu.p,
            e: mu.e,
        },
    }
}

/// Canonical chart coordinates of a dual vector on its orbit.
pub fn to_chart(orbit: &Orbit, mu: &DualVector) -> Result<ChartPoint> {
    let found = classify(mu, DEFAULT_CLASSIFY_TOL).class();
    if found != orbit.class() {
        return Err(Error::ClassMismatch {
            expected: orbit.class().to_string(),
            got: found.to_string(),
        });
    }
    Ok(match orbit.class() {
        OrbitClass::Abs | OrbitClass::Ass | OrbitClass::BfsM | OrbitClass::FssM => ChartPoint::Pq {
            p: mu.p,
            q: mu.k / mu.m,
        },
        OrbitClass::Bsf | OrbitClass::Ssf => ChartPoint::Pq {
            p: mu.p,
            q: -mu.e / mu.f,
        },
        OrbitClass::Bfs0 => ChartPoint::ETau {
            e: mu.e,
            tau: mu.k / mu.i,
        },
        OrbitClass::Fss0 => ChartPoint::Point,
    })
}

/// Embed a chart point back into the dual, using the orbit's invariants.
pub fn from_chart(orbit: &Orbit, z: &ChartPoint) -> Result<DualVector> {
    if z.kind() != orbit.chart_kind() {
        return Err(Error::ChartKindMismatch {
            expected: orbit.chart_kind().to_string(),
            got: z.kind().to_string(),
        });
    }
    Ok(match (*orbit, *z) {
        (Orbit::Abs { m, f, i, u }, ChartPoint::Pq { p, q }) => {
            DualVector::new(m, f, i, m * q, p, u + p * (i / m) - f * q)
        }
        (Orbit::Ass { m, f, u }, ChartPoint::Pq { p, q }) => {
            DualVector::new(m, f, 0.0, m * q, p, u - f * q)
        }
        (Orbit::BfsM { m, i, u }, ChartPoint::Pq { p, q }) => {
            DualVector::new(m, 0.0, i, m * q, p, u + p * (i / m))
        }
        (Orbit::FssM { m, e }, ChartPoint::Pq { p, q }) => {
            DualVector::new(m, 0.0, 0.0, m * q, p, e)
        }
        (Orbit::Bsf { f, i, k0 }, ChartPoint::Pq { p, q }) => {
            let omega = f / i;
            DualVector::new(0.0, f, i, k0 + p / omega, p, -f * q)
        }
        (Orbit::Ssf { f, k }, ChartPoint::Pq { p, q }) => {
            DualVector::new(0.0, f, 0.0, k, p, -f * q)
        }
        (Orbit::Bfs0 { i, p }, ChartPoint::ETau { e, tau }) => {
            DualVector::new(0.0, 0.0, i, i * tau, p, e)
        }
        (Orbit::Fss0 { k, p, e }, ChartPoint::Point) => DualVector::new(0.0, 0.0, 0.0, k, p, e),
        _ => unreachable!("kind agreement checked above"),
    })
}

/// Group element carrying μ₁ to μ₂, which exist whenever the two share
/// class and invariant record. Two of the three parameters suffice for
/// every class; the construction fixes the third to zero.
pub fn connecting_element(
    orbit: &Orbit,
    mu1: &DualVector,
    mu2: &DualVector,
) -> Result<GroupElement> {
    let z1 = to_chart(orbit, mu1)?;
    let z2 = to_chart(orbit, mu2)?;
    let (m, f, i) = orbit.mfi();
    Ok(match (orbit.class(), z1, z2) {
        (
            OrbitClass::Abs | OrbitClass::Ass | OrbitClass::BfsM | OrbitClass::FssM,
            ChartPoint::Pq { p: p1, q: q1 },
            ChartPoint::Pq { p: p2, q: q2 },
        ) => GroupElement::new((p1 - p2) / m, q2 - q1, 0.0),
        (
            OrbitClass::Bsf | OrbitClass::Ssf,
            ChartPoint::Pq { p: p1, q: q1 },
            ChartPoint::Pq { p: p2, q: q2 },
        ) => GroupElement::new(0.0, q2 - q1, (p2 - p1) / f),
        (
            OrbitClass::Bfs0,
            ChartPoint::ETau { e: e1, tau: tau1 },
            ChartPoint::ETau { e: e2, tau: tau2 },
        ) => GroupElement::new((e1 - e2) / i, 0.0, tau2 - tau1),
        (OrbitClass::Fss0, _, _) => GroupElement::identity(),
        _ => unreachable!("chart kinds validated by to_chart"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::adjoint;

    #[test]
    fn pairing_is_a_dot_product() {
        let mu = DualVector::new(1.0, 2.0, 3.0, 4.0, 5.0, 6.0);
        let ones = AlgebraVector::new(vec![1.0; 6]);
        assert_eq!(pair(&mu, &ones).unwrap(), 21.0);
        assert_eq!(pair(&mu, &AlgebraVector::zero(6)).unwrap(), 0.0);
        let mass_only = DualVector::new(1.0, 0.0, 0.0, 0.0, 0.0, 0.0);
        let boost = AlgebraVector::static_ext(0.0, 0.0, 0.0, 1.0, 0.0, 0.0);
        assert_eq!(pair(&mass_only, &boost).unwrap(), 0.0);
        assert!(pair(&mu, &AlgebraVector::zero(3)).is_err());
    }

    #[test]
    fn coadjoint_action_values() {
        let g = GroupElement::new(2.0, 3.0, 1.0);
        let mu = DualVector::new(1.0, 1.0, 1.0, 0.0, 0.0, 0.0);
        assert_eq!(
            coadjoint_act(&g, &mu),
            DualVector::new(1.0, 1.0, 1.0, 4.0, -1.0, -5.0)
        );
        assert_eq!(coadjoint_act(&GroupElement::identity(), &mu), mu);
    }

    #[test]
    fn coadjoint_is_contragredient_to_adjoint() {
        let g = GroupElement::new(1.0, 1.0, 1.0);
        let mu = DualVector::new(1.0, 2.0, 3.0, 4.0, 5.0, 6.0);
        let delta = AlgebraVector::static_ext(0.0, 0.0, 0.0, 1.0, 1.0, 1.0);
        let lhs = pair(&coadjoint_act(&g, &mu), &delta).unwrap();
        let rhs = pair(&mu, &adjoint(&g.inverse(), &delta).unwrap()).unwrap();
        assert_eq!(lhs, 15.0);
        assert_eq!(rhs, 15.0);
    }

    #[test]
    fn kirillov_matches_closed_form() {
        let mu = DualVector::new(1.0, 2.0, 3.0, 9.0, -4.0, 7.0);
        let form = kirillov(&mu);
        assert_eq!(form, [[0.0, 1.0, 3.0], [-1.0, 0.0, 2.0], [-3.0, -2.0, 0.0]]);

        let zero = DualVector::new(0.0, 0.0, 0.0, 1.0, 2.0, 3.0);
        assert_eq!(kirillov(&zero), [[0.0; 3]; 3]);
        assert_eq!(kirillov_rank(&kirillov(&zero), 0.0), 0);

        let impetus_only = DualVector::new(0.0, 0.0, 5.0, 0.0, 0.0, 0.0);
        assert_eq!(kirillov_rank(&kirillov(&impetus_only), 0.0), 2);
    }

    #[test]
    fn classification_covers_all_patterns() {
        let abs = classify(&DualVector::new(1.0, 2.0, 3.0, 4.0, 5.0, 6.0), 0.0);
        assert_eq!(abs.class(), OrbitClass::Abs);
        assert_eq!(abs.boost(), Some(3.0));
        assert_eq!(abs.acceleration(), Some(2.0));
        assert_eq!(abs.invariant_values()["U"], -1.0);

        let fss0 = classify(&DualVector::new(0.0, 0.0, 0.0, 4.0, 5.0, 6.0), 0.0);
        assert_eq!(fss0.class(), OrbitClass::Fss0);
        assert_eq!(fss0.dim(), 0);

        let bsf = classify(&DualVector::new(0.0, 2.0, 1.0, 5.0, 4.0, -6.0), 0.0);
        assert_eq!(bsf.class(), OrbitClass::Bsf);
        assert_eq!(bsf.frequency(), Some(2.0));
        assert_eq!(bsf.invariant_values()["k0"], 3.0);

        assert_eq!(
            classify(&DualVector::new(1.0, 2.0, 0.0, 0.0, 0.0, 0.0), 0.0).class(),
            OrbitClass::Ass
        );
        assert_eq!(
            classify(&DualVector::new(1.0, 0.0, 3.0, 0.0, 0.0, 0.0), 0.0).class(),
            OrbitClass::BfsM
        );
        assert_eq!(
            classify(&DualVector::new(1.0, 0.0, 0.0, 0.0, 0.0, 0.0), 0.0).class(),
            OrbitClass::FssM
        );
        assert_eq!(
            classify(&DualVector::new(0.0, 2.0, 0.0, 0.0, 0.0, 0.0), 0.0).class(),
            OrbitClass::Ssf
        );
        assert_eq!(
            classify(&DualVector::new(0.0, 0.0, 3.0, 0.0, 0.0, 0.0), 0.0).class(),
            OrbitClass::Bfs0
        );
    }

    #[test]
    fn classify_tolerance_controls_the_boundary() {
        let nearly_massless = DualVector::new(1e-13, 2.0, 0.0, 0.0, 0.0, 0.0);
        assert_eq!(
            classify(&nearly_massless, DEFAULT_CLASSIFY_TOL).class(),
            OrbitClass::Ssf
        );
        assert_eq!(classify(&nearly_massless, 0.0).class(), OrbitClass::Ass);
    }

    #[test]
    fn chart_maps_match_worked_values() {
        let mu = DualVector::new(1.0, 2.0, 3.0, 4.0, 5.0, 6.0);
        let orbit = classify(&mu, 0.0);
        assert_eq!(
            to_chart(&orbit, &mu).unwrap(),
            ChartPoint::Pq { p: 5.0, q: 4.0 }
        );

        let bsf_mu = DualVector::new(0.0, 2.0, 1.0, 5.0, 4.0, -6.0);
        let bsf = classify(&bsf_mu, 0.0);
        assert_eq!(
            to_chart(&bsf, &bsf_mu).unwrap(),
            ChartPoint::Pq { p: 4.0, q: 3.0 }
        );

        let bfs0_mu = DualVector::new(0.0, 0.0, 2.0, 6.0, 1.5, -0.5);
        let bfs0 = classify(&bfs0_mu, 0.0);
        assert_eq!(
            to_chart(&bfs0, &bfs0_mu).unwrap(),
            ChartPoint::ETau { e: -0.5, tau: 3.0 }
        );
    }

    #[test]
    fn from_chart_matches_worked_values() {
        let orbit = Orbit::abs(1.0, 2.0, 3.0, -1.0).unwrap();
        let mu = from_chart(&orbit, &ChartPoint::Pq { p: 5.0, q: 4.0 }).unwrap();
        assert_eq!(mu, DualVector::new(1.0, 2.0, 3.0, 4.0, 5.0, 6.0));

        let fss = Orbit::fss_m(1.0, 7.0).unwrap();
        let mu = from_chart(&fss, &ChartPoint::Pq { p: 0.0, q: 0.0 }).unwrap();
        assert_eq!(mu, DualVector::new(1.0, 0.0, 0.0, 0.0, 0.0, 7.0));

        let bsf = Orbit::bsf(2.0, 1.0, 3.0).unwrap();
        let mu = from_chart(&bsf, &ChartPoint::Pq { p: 4.0, q: 3.0 }).unwrap();
        assert_eq!(mu, DualVector::new(0.0, 2.0, 1.0, 5.0, 4.0, -6.0));

        // kind mismatch
        assert!(from_chart(&bsf, &ChartPoint::ETau { e: 0.0, tau: 0.0 }).is_err());
        // class mismatch in the other direction
        let wrong = DualVector::new(0.0, 0.0, 0.0, 1.0, 1.0, 1.0);
        assert!(to_chart(&bsf, &wrong).is_err());
    }

    #[test]
    fn connecting_element_moves_between_orbit_points() {
        let orbit = Orbit::abs(2.0, -1.0, 4.0, 0.5).unwrap();
        let mu1 = from_chart(&orbit, &ChartPoint::Pq { p: 1.0, q: -2.0 }).unwrap();
        let mu2 = from_chart(&orbit, &ChartPoint::Pq { p: -0.5, q: 3.0 }).unwrap();
        let g = connecting_element(&orbit, &mu1, &mu2).unwrap();
        assert!(coadjoint_act(&g, &mu1).distance_inf(&mu2) <= 1e-12);
    }

    #[test]
    fn orbit_serde_round_trip() {
        let orbit = Orbit::bsf(2.0, 1.0, 3.0).unwrap();
        let json = serde_json::to_string(&orbit).unwrap();
        let back: Orbit = serde_json::from_str(&json).unwrap();
        assert_eq!(back, orbit);

        let report = orbit.report();
        assert_eq!(report.class, "BSF");
        assert_eq!(report.chart_kind, "PQ");
        assert_eq!(report.orbit_dim, 2);
        assert_eq!(report.derived["omega"], 2.0);
    }
}
