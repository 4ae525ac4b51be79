//! Ledger of corrections to the source derivation's printed formulas.
//!
//! The implementation follows a classical treatment of the
//! one-dimensional static group whose printed text contains a handful
//! of slips. Every place where the code deviates from the printed
//! formula is recorded here, with the oracle that forces the
//! correction; the verification suites demonstrate each correction and
//! the summary tables flag the affected cells.

use serde::Serialize;

/// One documented correction.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Erratum {
    pub id: &'static str,
    pub location: &'static str,
    pub printed: &'static str,
    pub corrected: &'static str,
    pub rationale: &'static str,
}

/// All documented corrections, in id order.
pub static ERRATA: &[Erratum] = &[
    Erratum {
        id: "E1",
        location: "cocycle definitions, middle component",
        printed: "xt' - t'x (identically zero as scalars)",
        corrected: "xt' - x't",
        rationale: "forced by two independent oracles: the coboundary of b \
                    and the central part of the truncated BCH product",
    },
    Erratum {
        id: "E2",
        location: "internal energy of the accelerated static massive class",
        printed: "U = e - fq",
        corrected: "U = e + fq",
        rationale: "the printed form shifts by -2fx under the coadjoint \
                    action of (0, x, 0); the corrected form is the I -> 0 \
                    limit of the fully invariant class's U = e - pu + fq",
    },
    Erratum {
        id: "E3-a",
        location: "time-translation vector field of the fully invariant massive class",
        printed: "D(E) = -f d/dp - u d/q",
        corrected: "D(E) = -f d/dp - u d/dq",
        rationale: "forced by differentiating the pullback map in t",
    },
    Erratum {
        id: "E3-b",
        location: "summary tables, motion-equation column",
        printed: "dp/dq where dp/dt is meant (six cells), and dtau/dt = 0 \
                  for the boosted free massless class",
        corrected: "dp/dt throughout; dtau/dt = 1",
        rationale: "the derivation's own motion equations use dp/dt; \
                    dtau/dt = 1 is forced by H = e with the de ^ dtau \
                    orientation",
    },
    Erratum {
        id: "E4",
        location: "orbit taxonomy acronyms",
        printed: "BFS and FSS each name both a massive and a massless class",
        corrected: "disambiguated as BFS_M/BFS_0 and FSS_M/FSS_0",
        rationale: "the eight zero patterns of (m, f, I) need eight tags",
    },
];

/// Look up an erratum by id.
pub fn get(id: &str) -> Option<&'static Erratum> {
    ERRATA.iter().find(|e| e.id == id)
}
