//! Finite-dimensional Lie algebras as structure-constant tables.
//!
//! The registry covers the eleven three-dimensional kinematical algebras
//! over the basis (K, P, E) of boosts, space translations and time
//! translations, together with the six-dimensional central extension
//! `StaticExt` of the abelian static algebra, over (M, F, Y, K, P, E).
//!
//! A [`BracketTable`] stores `c[i][j][k]`, the coefficient of basis
//! element `k` in `[e_i, e_j]`. All tables are validated for
//! antisymmetry on construction; step-2 nilpotency is detected up front
//! so that the truncated Baker-Campbell-Hausdorff product can refuse
//! algebras it would silently truncate.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default absolute comparison tolerance for residual checks.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Identifiers of the registry algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraName {
    DeSitterPlus,
    DeSitterMinus,
    NewtonHookePlus,
    NewtonHookeMinus,
    Poincare,
    ParaPoincarePlus,
    ParaPoincareMinus,
    Galilei,
    Carroll,
    ParaGalilei,
    Static,
    StaticExt,
}

impl AlgebraName {
    /// All registry identifiers, in listing order.
    pub const ALL: [AlgebraName; 12] = [
        AlgebraName::DeSitterPlus,
        AlgebraName::DeSitterMinus,
        AlgebraName::NewtonHookePlus,
        AlgebraName::NewtonHookeMinus,
        AlgebraName::Poincare,
        AlgebraName::ParaPoincarePlus,
        AlgebraName::ParaPoincareMinus,
        AlgebraName::Galilei,
        AlgebraName::Carroll,
        AlgebraName::ParaGalilei,
        AlgebraName::Static,
        AlgebraName::StaticExt,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            AlgebraName::DeSitterPlus => "dS+",
            AlgebraName::DeSitterMinus => "dS-",
            AlgebraName::NewtonHookePlus => "NH+",
            AlgebraName::NewtonHookeMinus => "NH-",
            AlgebraName::Poincare => "Poincare",
            AlgebraName::ParaPoincarePlus => "ParaPoincare+",
            AlgebraName::ParaPoincareMinus => "ParaPoincare-",
            AlgebraName::Galilei => "Galilei",
            AlgebraName::Carroll => "Carroll",
            AlgebraName::ParaGalilei => "ParaGalilei",
            AlgebraName::Static => "Static",
            AlgebraName::StaticExt => "StaticExt",
        }
    }

    fn needs_c_vel(&self) -> bool {
        matches!(
            self,
            AlgebraName::DeSitterPlus
                | AlgebraName::DeSitterMinus
                | AlgebraName::Poincare
                | AlgebraName::ParaPoincarePlus
                | AlgebraName::ParaPoincareMinus
                | AlgebraName::Carroll
        )
    }

    fn needs_omega(&self) -> bool {
        matches!(
            self,
            AlgebraName::DeSitterPlus
                | AlgebraName::DeSitterMinus
                | AlgebraName::NewtonHookePlus
                | AlgebraName::NewtonHookeMinus
                | AlgebraName::ParaPoincarePlus
                | AlgebraName::ParaPoincareMinus
                | AlgebraName::ParaGalilei
        )
    }
}

impl fmt::Display for AlgebraName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgebraName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgebraName::ALL
            .iter()
            .copied()
            .find(|n| n.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownAlgebra(s.to_string()))
    }
}

/// Named scalars used to populate bracket entries.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct AlgebraParams {
    /// Velocity constant; enters as 1/c² in [K,P] brackets.
    pub c_vel: Option<f64>,
    /// Frequency; enters as ω² in [P,E] brackets.
    pub omega: Option<f64>,
}

impl AlgebraParams {
    pub fn new(c_vel: Option<f64>, omega: Option<f64>) -> Self {
        Self { c_vel, omega }
    }
}

/// An element of a Lie algebra, as coefficients over the owning table's basis.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraVector {
    coeffs: Vec<f64>,
}

impl AlgebraVector {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Self { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            coeffs: vec![0.0; dim],
        }
    }

    /// The `i`-th basis element of a `dim`-dimensional algebra.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut coeffs = vec![0.0; dim];
        coeffs[i] = 1.0;
        Self { coeffs }
    }

    /// Element ξM + ζF + yY + vK + xP + tE of the extended static algebra.
    pub fn static_ext(xi: f64, zeta: f64, y: f64, v: f64, x: f64, t: f64) -> Self {
        Self {
            coeffs: vec![xi, zeta, y, v, x, t],
        }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Largest absolute coefficient.
    pub fn norm_inf(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Largest absolute componentwise difference.
    pub fn distance_inf(&self, other: &Self) -> f64 {
        self.sub(other).norm_inf()
    }
}

impl std::ops::Index<usize> for AlgebraVector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.coeffs[i]
    }
}

/// Jacobi-identity report: max residual over basis triples.
#[derive(Debug, Clone, Serialize)]
pub struct JacobiReport {
    pub max_residual: f64,
    /// Basis labels of the triple realizing the maximum.
    pub worst_triple: [String; 3],
    pub pass: bool,
}

/// One bracket specification: (i, j, coefficients of [e_i, e_j]).
pub type BracketSpec<'a> = (usize, usize, &'a [(usize, f64)]);

/// Structure constants of a finite-dimensional real Lie algebra over a
/// labeled basis.
#[derive(Debug, Clone, PartialEq)]
pub struct BracketTable {
    name: String,
    basis: Vec<String>,
    /// Physical-dimension labels, carried as metadata only.
    dims: Vec<String>,
    /// c[i][j][k] = coefficient of basis k in [e_i, e_j].
    c: Vec<Vec<Vec<f64>>>,
    params: BTreeMap<String, f64>,
    step2_nilpotent: bool,
}

impl BracketTable {
    /// Build a table from its nonzero brackets `[e_i, e_j] = Σ coeff·e_k`
    /// given for i < j; the antisymmetric counterparts are filled in.
    pub fn from_nonzero_brackets(
        name: impl Into<String>,
        basis: Vec<String>,
        dims: Vec<String>,
        entries: &[BracketSpec],
        params: BTreeMap<String, f64>,
    ) -> Result<Self> {
        let dim = basis.len();
        if dims.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: dims.len(),
            });
        }
        let mut c = vec![vec![vec![0.0; dim]; dim]; dim];
        for &(i, j, coeffs) in entries {
            if i >= dim || j >= dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: i.max(j) + 1,
                });
            }
            for &(k, val) in coeffs {
                if k >= dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        got: k + 1,
                    });
                }
                if i == j && val != 0.0 {
                    return Err(Error::NotAntisymmetric { i, j, k });
                }
                c[i][j][k] = val;
                c[j][i][k] = -val;
            }
        }
        let mut table = Self {
            name: name.into(),
            basis,
            dims,
            c,
            params,
            step2_nilpotent: false,
        };
        table.step2_nilpotent = table.compute_step2_nilpotency();
        Ok(table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis
    }

    pub fn dimension_labels(&self) -> &[String] {
        &self.dims
    }

    pub fn params(&self) -> &BTreeMap<String, f64> {
        &self.params
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> f64 {
        self.c[i][j][k]
    }

    /// Index of a basis label, if present.
    pub fn basis_index(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == label)
    }

    /// Whether all double brackets of basis elements vanish exactly.
    pub fn is_step2_nilpotent(&self) -> bool {
        self.step2_nilpotent
    }

    fn compute_step2_nilpotency(&self) -> bool {
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                let inner = self
                    .bracket(&AlgebraVector::basis(dim, i), &AlgebraVector::basis(dim, j))
                    .expect("basis vectors conform");
                for k in 0..dim {
                    let outer = self
                        .bracket(&inner, &AlgebraVector::basis(dim, k))
                        .expect("basis vectors conform");
                    if outer.norm_inf() != 0.0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn check_dim(&self, v: &AlgebraVector) -> Result<()> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: v.dim(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of the table: `result[k] = Σ_{i,j} A_i B_j c[i][j][k]`.
    pub fn bracket(&self, a: &AlgebraVector, b: &AlgebraVector) -> Result<AlgebraVector> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        let dim = self.dim();
        let mut out = vec![0.0; dim];
        for i in 0..dim {
            let ai = a[i];
            if ai == 0.0 {
                continue;
            }
            for j in 0..dim {
                let bj = b[j];
                if bj == 0.0 {
                    continue;
                }
                for (slot, cijk) in out.iter_mut().zip(&self.c[i][j]) {
                    if *cijk != 0.0 {
                        *slot += ai * bj * cijk;
                    }
                }
            }
        }
        Ok(AlgebraVector::new(out))
    }

    /// Max-norm residual of the Jacobi identity over basis triples.
    ///
    /// The Jacobiator is alternating in its three arguments, so i < j < k
    /// covers all cases.
    pub fn check_jacobi(&self, tol: f64) -> JacobiReport {
        let dim = self.dim();
        let mut max_residual = 0.0;
        let mut worst = (0, 1.min(dim - 1), 2.min(dim - 1));
        for i in 0..dim {
            for j in (i + 1)..dim {
                for k in (j + 1)..dim {
                    let ei = AlgebraVector::basis(dim, i);
                    let ej = AlgebraVector::basis(dim, j);
                    let ek = AlgebraVector::basis(dim, k);
                    let t1 = self.bracket(&ei, &self.bracket(&ej, &ek).unwrap()).unwrap();
                    let t2 = self.bracket(&ej, &self.bracket(&ek, &ei).unwrap()).unwrap();
                    let t3 = self.bracket(&ek, &self.bracket(&ei, &ej).unwrap()).unwrap();
                    let residual = t1.add(&t2).add(&t3).norm_inf();
                    if residual > max_residual {
                        max_residual = residual;
                        worst = (i, j, k);
                    }
                }
            }
        }
        JacobiReport {
            max_residual,
            worst_triple: [
                self.basis[worst.0].clone(),
                self.basis[worst.1].clone(),
                self.basis[worst.2].clone(),
            ],
            pass: max_residual <= tol,
        }
    }

    /// Truncated Baker-Campbell-Hausdorff product `A + B + ½[A, B]`.
    ///
    /// Exact on step-2 nilpotent algebras; refused otherwise.
    pub fn bch2(&self, a: &AlgebraVector, b: &AlgebraVector) -> Result<AlgebraVector> {
        if !self.step2_nilpotent {
            let (i, j, k) = self.first_step2_violation();
            return Err(Error::NotStepTwoNilpotent(
                self.name.clone(),
                self.basis[i].clone(),
                self.basis[j].clone(),
                self.basis[k].clone(),
            ));
        }
        let comm = self.bracket(a, b)?;
        Ok(a.add(b).add(&comm.scale(0.5)))
    }

    fn first_step2_violation(&self) -> (usize, usize, usize) {
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                let inner = self
                    .bracket(&AlgebraVector::basis(dim, i), &AlgebraVector::basis(dim, j))
                    .unwrap();
                for k in 0..dim {
                    let outer = self.bracket(&inner, &AlgebraVector::basis(dim, k)).unwrap();
                    if outer.norm_inf() != 0.0 {
                        return (i, j, k);
                    }
                }
            }
        }
        (0, 0, 0)
    }

    /// Matrix of ad(X): column j is `[X, e_j]`.
    pub fn ad_matrix(&self, x: &AlgebraVector) -> Result<Vec<Vec<f64>>> {
        self.check_dim(x)?;
        let dim = self.dim();
        let mut mat = vec![vec![0.0; dim]; dim];
        for j in 0..dim {
            let col = self.bracket(x, &AlgebraVector::basis(dim, j))?;
            for (i, row) in mat.iter_mut().enumerate() {
                row[j] = col[i];
            }
        }
        Ok(mat)
    }

    /// Serializable form of the table.
    pub fn dump(&self) -> TableDump {
        let dim = self.dim();
        let mut brackets = Vec::new();
        for i in 0..dim {
            for j in (i + 1)..dim {
                let mut coeffs = BTreeMap::new();
                for k in 0..dim {
                    if self.c[i][j][k] != 0.0 {
                        coeffs.insert(self.basis[k].clone(), self.c[i][j][k]);
                    }
                }
                if !coeffs.is_empty() {
                    brackets.push(BracketEntry {
                        i: self.basis[i].clone(),
                        j: self.basis[j].clone(),
                        coeffs,
                    });
                }
            }
        }
        TableDump {
            name: self.name.clone(),
            basis: self.basis.clone(),
            dims: self.dims.clone(),
            brackets,
            params: self.params.clone(),
        }
    }
}

/// One nonzero bracket `[i, j] = Σ coeffs[k]·k` in a table dump.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: String,
    pub j: String,
    pub coeffs: BTreeMap<String, f64>,
}

/// JSON document form of a bracket table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableDump {
    pub name: String,
    pub basis: Vec<String>,
    pub dims: Vec<String>,
    pub brackets: Vec<BracketEntry>,
    pub params: BTreeMap<String, f64>,
}

fn kpe_basis() -> (Vec<String>, Vec<String>) {
    (
        vec!["K".into(), "P".into(), "E".into()],
        vec![
            "velocity^-1".into(),
            "length^-1".into(),
            "duration^-1".into(),
        ],
    )
}

fn ext_basis() -> (Vec<String>, Vec<String>) {
    (
        vec![
            "M".into(),
            "F".into(),
            "Y".into(),
            "K".into(),
            "P".into(),
            "E".into(),
        ],
        vec![
            "length^-2 duration".into(),
            "length^-1 duration^-1".into(),
            "length^-1".into(),
            "velocity^-1".into(),
            "length^-1".into(),
            "duration^-1".into(),
        ],
    )
}

// Basis indices in the three-dimensional (K, P, E) tables.
const K: usize = 0;
const P: usize = 1;
const E: usize = 2;

/// Basis indices of the extended static algebra (M, F, Y, K, P, E).
pub mod ext_index {
    pub const M: usize = 0;
    pub const F: usize = 1;
    pub const Y: usize = 2;
    pub const K: usize = 3;
    pub const P: usize = 4;
    pub const E: usize = 5;
}

fn require_c_vel(name: AlgebraName, params: &AlgebraParams) -> Result<f64> {
    let c = params.c_vel.ok_or_else(|| Error::MissingParameter {
        algebra: name.to_string(),
        param: "c_vel".into(),
    })?;
    if !c.is_finite() || c <= 0.0 {
        return Err(Error::InvalidParameter {
            param: "c_vel".into(),
            value: c,
            reason: "must be finite and > 0".into(),
        });
    }
    Ok(c)
}

fn require_omega(name: AlgebraName, params: &AlgebraParams) -> Result<f64> {
    let w = params.omega.ok_or_else(|| Error::MissingParameter {
        algebra: name.to_string(),
        param: "omega".into(),
    })?;
    if !w.is_finite() || w <= 0.0 {
        return Err(Error::InvalidParameter {
            param: "omega".into(),
            value: w,
            reason: "must be finite and > 0".into(),
        });
    }
    Ok(w)
}

/// Look up a registry algebra, populating entries from `params`.
pub fn registry_get(name: AlgebraName, params: &AlgebraParams) -> Result<BracketTable> {
    let mut used = BTreeMap::new();
    let c_vel = if name.needs_c_vel() {
        let c = require_c_vel(name, params)?;
        used.insert("c_vel".to_string(), c);
        Some(c)
    } else {
        None
    };
    let omega = if name.needs_omega() {
        let w = require_omega(name, params)?;
        used.insert("omega".to_string(), w);
        Some(w)
    } else {
        None
    };
    let inv_c2 = c_vel.map(|c| 1.0 / (c * c));
    let omega2 = omega.map(|w| w * w);

    let (basis, dims) = kpe_basis();
    let table = |entries: &[BracketSpec]| {
        BracketTable::from_nonzero_brackets(
            name.as_str(),
            basis.clone(),
            dims.clone(),
            entries,
            used.clone(),
        )
    };

    match name {
        AlgebraName::DeSitterPlus => table(&[
            (K, P, &[(E, inv_c2.unwrap())]),
            (K, E, &[(P, 1.0)]),
            (P, E, &[(K, omega2.unwrap())]),
        ]),
        AlgebraName::DeSitterMinus => table(&[
            (K, P, &[(E, inv_c2.unwrap())]),
            (K, E, &[(P, 1.0)]),
            (P, E, &[(K, -omega2.unwrap())]),
        ]),
        AlgebraName::NewtonHookePlus => {
            table(&[(K, E, &[(P, 1.0)]), (P, E, &[(K, omega2.unwrap())])])
        }
        AlgebraName::NewtonHookeMinus => {
            table(&[(K, E, &[(P, 1.0)]), (P, E, &[(K, -omega2.unwrap())])])
        }
        AlgebraName::Poincare => table(&[(K, P, &[(E, inv_c2.unwrap())]), (K, E, &[(P, 1.0)])]),
        AlgebraName::ParaPoincarePlus => table(&[
            (K, P, &[(E, inv_c2.unwrap())]),
            (P, E, &[(K, omega2.unwrap())]),
        ]),
        AlgebraName::ParaPoincareMinus => table(&[
            (K, P, &[(E, inv_c2.unwrap())]),
            (P, E, &[(K, -omega2.unwrap())]),
        ]),
        AlgebraName::Galilei => table(&[(K, E, &[(P, 1.0)])]),
        AlgebraName::Carroll => table(&[(K, P, &[(E, inv_c2.unwrap())])]),
        AlgebraName::ParaGalilei => table(&[(P, E, &[(K, omega2.unwrap())])]),
        AlgebraName::Static => table(&[]),
        AlgebraName::StaticExt => {
            let (basis, dims) = ext_basis();
            BracketTable::from_nonzero_brackets(
                name.as_str(),
                basis,
                dims,
                &[
                    (ext_index::K, ext_index::P, &[(ext_index::M, 1.0)]),
                    (ext_index::K, ext_index::E, &[(ext_index::Y, 1.0)]),
                    (ext_index::P, ext_index::E, &[(ext_index::F, 1.0)]),
                ],
                used,
            )
        }
    }
}

/// Apply a square matrix to a vector.
pub fn apply_matrix(mat: &[Vec<f64>], v: &AlgebraVector) -> Result<AlgebraVector> {
    let dim = mat.len();
    if v.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: v.dim(),
        });
    }
    let mut out = vec![0.0; dim];
    for (i, row) in mat.iter().enumerate() {
        out[i] = row.iter().zip(v.coeffs()).map(|(m, c)| m * c).sum();
    }
    Ok(AlgebraVector::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params_11() -> AlgebraParams {
        AlgebraParams::new(Some(1.0), Some(1.0))
    }

    #[test]
    fn static_table_is_abelian() {
        let tbl = registry_get(AlgebraName::Static, &AlgebraParams::default()).unwrap();
        assert_eq!(tbl.dim(), 3);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert_eq!(tbl.structure_constant(i, j, k), 0.0);
                }
            }
        }
    }

    #[test]
    fn galilei_has_only_ke_bracket() {
        let tbl = registry_get(AlgebraName::Galilei, &AlgebraParams::default()).unwrap();
        let ke = tbl
            .bracket(&AlgebraVector::basis(3, K), &AlgebraVector::basis(3, E))
            .unwrap();
        assert_eq!(ke.coeffs(), &[0.0, 1.0, 0.0]);
        let dump = tbl.dump();
        assert_eq!(dump.brackets.len(), 1);
        assert_eq!(dump.brackets[0].i, "K");
        assert_eq!(dump.brackets[0].j, "E");
    }

    #[test]
    fn static_ext_brackets() {
        let tbl = registry_get(AlgebraName::StaticExt, &AlgebraParams::default()).unwrap();
        assert_eq!(tbl.dim(), 6);
        let k = AlgebraVector::basis(6, ext_index::K);
        let p = AlgebraVector::basis(6, ext_index::P);
        let e = AlgebraVector::basis(6, ext_index::E);
        assert_eq!(
            tbl.bracket(&k, &p).unwrap(),
            AlgebraVector::basis(6, ext_index::M)
        );
        assert_eq!(
            tbl.bracket(&k, &e).unwrap(),
            AlgebraVector::basis(6, ext_index::Y)
        );
        assert_eq!(
            tbl.bracket(&p, &e).unwrap(),
            AlgebraVector::basis(6, ext_index::F)
        );
        // M, F, Y are central.
        for central in [ext_index::M, ext_index::F, ext_index::Y] {
            let z = AlgebraVector::basis(6, central);
            for j in 0..6 {
                let b = tbl.bracket(&z, &AlgebraVector::basis(6, j)).unwrap();
                assert_eq!(b.norm_inf(), 0.0);
            }
        }
    }

    #[test]
    fn bracket_is_bilinear() {
        let tbl = registry_get(AlgebraName::Galilei, &AlgebraParams::default()).unwrap();
        let two_k = AlgebraVector::basis(3, K).scale(2.0);
        let three_e = AlgebraVector::basis(3, E).scale(3.0);
        let b = tbl.bracket(&two_k, &three_e).unwrap();
        assert_eq!(b.coeffs(), &[0.0, 6.0, 0.0]);
    }

    #[test]
    fn bracket_of_vector_with_itself_vanishes() {
        let tbl = registry_get(AlgebraName::DeSitterPlus, &params_11()).unwrap();
        let a = AlgebraVector::new(vec![1.5, -2.0, 0.75]);
        assert_eq!(tbl.bracket(&a, &a).unwrap().norm_inf(), 0.0);
    }

    #[test]
    fn jacobi_passes_on_registry_tables() {
        for name in AlgebraName::ALL {
            let tbl = registry_get(name, &params_11()).unwrap();
            let report = tbl.check_jacobi(DEFAULT_TOL);
            assert_eq!(report.max_residual, 0.0, "{name}");
            assert!(report.pass);
        }
    }

    #[test]
    fn jacobi_passes_on_rotation_type_table() {
        // [K,P]=E, [K,E]=P, [P,E]=K: the three cyclic terms cancel pairwise.
        let (basis, dims) = kpe_basis();
        let tbl = BracketTable::from_nonzero_brackets(
            "rotation-type",
            basis,
            dims,
            &[
                (K, P, &[(E, 1.0)]),
                (K, E, &[(P, 1.0)]),
                (P, E, &[(K, 1.0)]),
            ],
            BTreeMap::new(),
        )
        .unwrap();
        assert_eq!(tbl.check_jacobi(0.0).max_residual, 0.0);
    }

    #[test]
    fn bch2_on_static_ext() {
        let tbl = registry_get(AlgebraName::StaticExt, &AlgebraParams::default()).unwrap();
        let k = AlgebraVector::basis(6, ext_index::K);
        let p = AlgebraVector::basis(6, ext_index::P);
        let prod = tbl.bch2(&k, &p).unwrap();
        // K + P + ½M
        assert_eq!(prod.coeffs(), &[0.5, 0.0, 0.0, 1.0, 1.0, 0.0]);

        let a = AlgebraVector::static_ext(0.1, 0.2, 0.3, 1.0, 2.0, 3.0);
        assert_eq!(tbl.bch2(&a, &a).unwrap(), a.scale(2.0));
    }

    #[test]
    fn bch2_refuses_non_nilpotent_tables() {
        let tbl = registry_get(AlgebraName::DeSitterPlus, &params_11()).unwrap();
        let k = AlgebraVector::basis(3, K);
        let p = AlgebraVector::basis(3, P);
        let err = tbl.bch2(&k, &p).unwrap_err();
        assert!(matches!(err, Error::NotStepTwoNilpotent(..)));
        // Newton-Hooke is solvable but not step-2 either.
        let nh = registry_get(AlgebraName::NewtonHookePlus, &params_11()).unwrap();
        assert!(!nh.is_step2_nilpotent());
        // The three nilpotent tables and the abelian one admit bch2.
        for name in [
            AlgebraName::Galilei,
            AlgebraName::Carroll,
            AlgebraName::ParaGalilei,
            AlgebraName::Static,
            AlgebraName::StaticExt,
        ] {
            assert!(registry_get(name, &params_11())
                .unwrap()
                .is_step2_nilpotent());
        }
    }

    #[test]
    fn ad_matrix_static_is_zero() {
        let tbl = registry_get(AlgebraName::Static, &AlgebraParams::default()).unwrap();
        let x = AlgebraVector::new(vec![1.0, -2.0, 3.0]);
        let mat = tbl.ad_matrix(&x).unwrap();
        assert!(mat.iter().flatten().all(|&v| v == 0.0));
    }

    #[test]
    fn ad_matrix_of_boost_on_static_ext() {
        let tbl = registry_get(AlgebraName::StaticExt, &AlgebraParams::default()).unwrap();
        let mat = tbl
            .ad_matrix(&AlgebraVector::basis(6, ext_index::K))
            .unwrap();
        // column P = M, column E = Y, everything else zero
        for (i, row) in mat.iter().enumerate() {
            for (j, &val) in row.iter().enumerate() {
                let hits = (i == ext_index::M && j == ext_index::P)
                    || (i == ext_index::Y && j == ext_index::E);
                let expected = if hits { 1.0 } else { 0.0 };
                assert_eq!(val, expected, "entry ({i}, {j})");
            }
        }
    }

    #[test]
    fn identity_plus_ad_matches_first_order_action() {
        let tbl = registry_get(AlgebraName::StaticExt, &AlgebraParams::default()).unwrap();
        let x = AlgebraVector::static_ext(0.0, 0.0, 0.0, 2.0, 0.0, 0.0); // vK with v = 2
        let delta = AlgebraVector::static_ext(0.0, 0.0, 0.0, 0.0, 1.0, 0.0); // δx = 1
        let mat = tbl.ad_matrix(&x).unwrap();
        let moved = delta.add(&apply_matrix(&mat, &delta).unwrap());
        assert_eq!(moved.coeffs(), &[2.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
    }

    #[test]
    fn registry_rejects_unknown_and_missing() {
        assert!(matches!(
            "Minkowski".parse::<AlgebraName>(),
            Err(Error::UnknownAlgebra(_))
        ));
        let err = registry_get(AlgebraName::DeSitterPlus, &AlgebraParams::default()).unwrap_err();
        assert!(matches!(err, Error::MissingParameter { .. }));
        let err = registry_get(
            AlgebraName::ParaGalilei,
            &AlgebraParams::new(None, Some(-1.0)),
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidParameter { .. }));
    }

    #[test]
    fn table_dump_round_trips_through_json() {
        let tbl = registry_get(AlgebraName::DeSitterMinus, &params_11()).unwrap();
        let dump = tbl.dump();
        let json = serde_json::to_string(&dump).unwrap();
        let back: TableDump = serde_json::from_str(&json).unwrap();
        assert_eq!(back.basis, dump.basis);
        assert_eq!(back.brackets.len(), dump.brackets.len());
        // dS−: [P,E] = −ω²K
        let pe = back
            .brackets
            .iter()
            .find(|b| b.i == "P" && b.j == "E")
            .unwrap();
        assert_eq!(pe.coeffs["K"], -1.0);
    }
}
