//! The L-borderenergetic families of order `4r + 4`: their expressions,
//! closed-form spectra, and verification against the calculus.
//!
//! Building blocks, for `r >= 1`:
//!
//! ```text
//! H1 = rK1 + (K1 * (r+1)K1)      H2 = (r+1)K2
//! H3 = rK2 + 2K1                 H4 = (2r+1)K1 * K1
//! ```
//!
//! `Omega1 = H1 * H1`, `Omega2 = H2 * H2`, `G_ab = Ha * Hb`, while `Omega3`,
//! `Omega4` and the `Gir` series (`i = 0..=2r`) are written out directly.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::energy::{is_cospectral, laplacian_energy};
use crate::expr::{parse, GraphExpr};
use crate::rational::{self, Rational};
use crate::spectrum::{spectrum_of, Spectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    Omega1,
    Omega2,
    Omega3,
    Omega4,
    G12,
    G13,
    G23,
    G24,
    G34,
    Gir,
}

impl FamilyId {
    pub const ALL: [FamilyId; 10] = [
        FamilyId::Omega1,
        FamilyId::Omega2,
        FamilyId::Omega3,
        FamilyId::Omega4,
        FamilyId::G12,
        FamilyId::G13,
        FamilyId::G23,
        FamilyId::G24,
        FamilyId::G34,
        FamilyId::Gir,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Omega1 => "omega1",
            FamilyId::Omega2 => "omega2",
            FamilyId::Omega3 => "omega3",
            FamilyId::Omega4 => "omega4",
            FamilyId::G12 => "g12",
            FamilyId::G13 => "g13",
            FamilyId::G23 => "g23",
            FamilyId::G24 => "g24",
            FamilyId::G34 => "g34",
            FamilyId::Gir => "gir",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        FamilyId::ALL
            .into_iter()
            .find(|id| id.name() == lower)
            .ok_or_else(|| FamilyError::UnknownId(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family id {0:?}")]
    UnknownId(String),
    #[error("parameter r must be at least 1")]
    ZeroR,
    #[error("family gir needs an index i in 0..={max}")]
    MissingIndex { max: u64 },
    #[error("index i = {i} outside 0..={max}")]
    IndexOutOfRange { i: u64, max: u64 },
    #[error("only family gir takes an index")]
    UnexpectedIndex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    pub id: FamilyId,
    pub r: u64,
    pub i: Option<u64>,
}

impl FamilySpec {
    pub fn new(id: FamilyId, r: u64, i: Option<u64>) -> Result<Self, FamilyError> {
        let spec = FamilySpec { id, r, i };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        if self.r == 0 {
            return Err(FamilyError::ZeroR);
        }
        let max = 2 * self.r;
        match (self.id, self.i) {
            (FamilyId::Gir, None) => Err(FamilyError::MissingIndex { max }),
            (FamilyId::Gir, Some(i)) if i > max => Err(FamilyError::IndexOutOfRange { i, max }),
            (FamilyId::Gir, Some(_)) => Ok(()),
            (_, Some(_)) => Err(FamilyError::UnexpectedIndex),
            (_, None) => Ok(()),
        }
    }

    pub fn order(&self) -> u64 {
        4 * self.r + 4
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.i {
            Some(i) => write!(f, "{}(r={}, i={})", self.id, self.r, i),
            None => write!(f, "{}(r={})", self.id, self.r),
        }
    }
}

/// Every member of `id` at parameter `r`: one spec, or `2r + 1` for `Gir`.
pub fn members(id: FamilyId, r: u64) -> Vec<FamilySpec> {
    match id {
        FamilyId::Gir => (0..=2 * r)
            .map(|i| FamilySpec {
                id,
                r,
                i: Some(i),
            })
            .collect(),
        _ => vec![FamilySpec { id, r, i: None }],
    }
}

/// All members of every family at parameter `r`, in [`FamilyId::ALL`] order.
pub fn all_members(r: u64) -> Vec<FamilySpec> {
    FamilyId::ALL.into_iter().flat_map(|id| members(id, r)).collect()
}

pub fn h1_text(r: u64) -> String {
    format!("({r}K1 + (K1 * {}K1))", r + 1)
}

pub fn h2_text(r: u64) -> String {
    format!("{}K2", r + 1)
}

pub fn h3_text(r: u64) -> String {
    format!("({r}K2 + 2K1)")
}

pub fn h4_text(r: u64) -> String {
    format!("({}K1 * K1)", 2 * r + 1)
}

pub fn h1(r: u64) -> GraphExpr {
    parse(&h1_text(r)).expect("well-formed builder text")
}

pub fn h2(r: u64) -> GraphExpr {
    parse(&h2_text(r)).expect("well-formed builder text")
}

pub fn h3(r: u64) -> GraphExpr {
    parse(&h3_text(r)).expect("well-formed builder text")
}

pub fn h4(r: u64) -> GraphExpr {
    parse(&h4_text(r)).expect("well-formed builder text")
}

/// Expression text of a family member, in the ASCII expression syntax.
pub fn build_text(spec: &FamilySpec) -> Result<String, FamilyError> {
    spec.validate()?;
    let r = spec.r;
    Ok(match spec.id {
        FamilyId::Omega1 => format!("{0} * {0}", h1_text(r)),
        FamilyId::Omega2 => format!("{0} * {0}", h2_text(r)),
        FamilyId::Omega3 => format!("(K2 + {0}K1) * {0}K1", 2 * r + 1),
        FamilyId::Omega4 => format!("{}K1 * {}K1 * K1", 2 * r + 1, 2 * r + 2),
        FamilyId::G12 => format!("{} * {}", h1_text(r), h2_text(r)),
        FamilyId::G13 => format!("{} * {}", h1_text(r), h3_text(r)),
        FamilyId::G23 => format!("{} * {}", h2_text(r), h3_text(r)),
        FamilyId::G24 => format!("{} * {}", h2_text(r), h4_text(r)),
        FamilyId::G34 => format!("{} * {}", h3_text(r), h4_text(r)),
        FamilyId::Gir => {
            let i = spec.i.expect("validated");
            format!("{}K1 * ({}K1 + (K1 * {}K1))", 2 * r + 1, 2 * r + 1 - i, i + 1)
        }
    })
}

pub fn build(spec: &FamilySpec) -> Result<GraphExpr, FamilyError> {
    Ok(parse(&build_text(spec)?).expect("well-formed builder text"))
}

/// Closed-form spectrum of each family member, instantiated at `(r, i)`.
pub fn closed_form_spectrum(spec: &FamilySpec) -> Result<Spectrum, FamilyError> {
    spec.validate()?;
    let r = spec.r;
    let pairs: Vec<(u64, u64)> = match spec.id {
        FamilyId::Omega1 => vec![
            (0, 1),
            (2 * r + 2, 2 * r),
            (2 * r + 3, 2 * r),
            (3 * r + 4, 2),
            (4 * r + 4, 1),
        ],
        FamilyId::Omega2 => vec![(0, 1), (2 * r + 2, 2 * r), (2 * r + 4, 2 * r + 2), (4 * r + 4, 1)],
        FamilyId::Omega3 => vec![
            (0, 1),
            (2 * r + 1, 2 * r + 1),
            (2 * r + 3, 2 * r + 1),
            (4 * r + 4, 1),
        ],
        FamilyId::Omega4 => vec![(0, 1), (2 * r + 2, 2 * r + 1), (2 * r + 3, 2 * r), (4 * r + 4, 2)],
        FamilyId::G12 => vec![
            (0, 1),
            (2 * r + 2, 2 * r),
            (2 * r + 3, r),
            (2 * r + 4, r + 1),
            (3 * r + 4, 1),
            (4 * r + 4, 1),
        ],
        FamilyId::G13 => vec![
            (0, 1),
            (2 * r + 2, 2 * r + 1),
            (2 * r + 3, r),
            (2 * r + 4, r),
            (3 * r + 4, 1),
            (4 * r + 4, 1),
        ],
        FamilyId::G23 => vec![(0, 1), (2 * r + 2, 2 * r + 1), (2 * r + 4, 2 * r + 1), (4 * r + 4, 1)],
        FamilyId::G24 => vec![
            (0, 1),
            (2 * r + 2, r),
            (2 * r + 3, 2 * r),
            (2 * r + 4, r + 1),
            (4 * r + 4, 2),
        ],
        FamilyId::G34 => vec![
            (0, 1),
            (2 * r + 2, r + 1),
            (2 * r + 3, 2 * r),
            (2 * r + 4, r),
            (4 * r + 4, 2),
        ],
        FamilyId::Gir => {
            let i = spec.i.expect("validated");
            vec![
                (0, 1),
                (2 * r + 1, 2 * r + 1 - i),
                (2 * r + 2, i),
                (2 * r + 3, 2 * r),
                (2 * r + 3 + i, 1),
                (4 * r + 4, 1),
            ]
        }
    };
    // Some closed forms list a multiplicity that vanishes at the ends of the range
    // (e.g. (2r+2)^i at i = 0); those terms are simply absent.
    let pairs = pairs
        .into_iter()
        .filter(|&(_, m)| m > 0)
        .map(|(v, m)| (rational::int(v as i128), m));
    Ok(Spectrum::new(spec.order(), pairs).expect("closed forms are valid spectra"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyVerdict {
    pub spec: FamilySpec,
    pub expr: GraphExpr,
    pub calculus_spectrum: Spectrum,
    pub closed_form_spectrum: Spectrum,
    pub spectra_match: bool,
    pub le: Rational,
    pub le_matches_target: bool,
    pub noncospectral_with_complete: bool,
}

impl FamilyVerdict {
    pub fn passed(&self) -> bool {
        self.spectra_match && self.le_matches_target && self.noncospectral_with_complete
    }

    pub fn order(&self) -> u64 {
        self.calculus_spectrum.order()
    }

    /// `8r + 6`.
    pub fn target(&self) -> i128 {
        8 * self.spec.r as i128 + 6
    }
}

pub fn verify(spec: &FamilySpec) -> Result<FamilyVerdict, FamilyError> {
    let expr = build(spec)?;
    let closed = closed_form_spectrum(spec)?;
    let calculus = spectrum_of(&expr);
    let le = laplacian_energy(&calculus);
    let n = expr.order();
    let target = rational::int(2 * n as i128 - 2);
    Ok(FamilyVerdict {
        spec: *spec,
        spectra_match: calculus == closed,
        le_matches_target: n == spec.order() && le == target && target == rational::int(8 * spec.r as i128 + 6),
        noncospectral_with_complete: !is_cospectral(&calculus, &Spectrum::complete(n)),
        le,
        calculus_spectrum: calculus,
        closed_form_spectrum: closed,
        expr,
    })
}

#[derive(Serialize)]
struct VerdictJson<'a> {
    id: &'static str,
    r: u64,
    i: Option<u64>,
    expr: String,
    n: u64,
    spectrum: &'a Spectrum,
    closed_form: &'a Spectrum,
    spectra_match: bool,
    le: [i128; 2],
    target: i128,
    le_matches_target: bool,
    noncospectral_with_complete: bool,
    passed: bool,
}

impl Serialize for FamilyVerdict {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        VerdictJson {
            id: self.spec.id.name(),
            r: self.spec.r,
            i: self.spec.i,
            expr: build_text(&self.spec).map_err(serde::ser::Error::custom)?,
            n: self.order(),
            spectrum: &self.calculus_spectrum,
            closed_form: &self.closed_form_spectrum,
            spectra_match: self.spectra_match,
            le: rational::to_pair(&self.le),
            target: self.target(),
            le_matches_target: self.le_matches_target,
            noncospectral_with_complete: self.noncospectral_with_complete,
            passed: self.passed(),
        }
        .serialize(serializer)
    }
}

/// A pair of members whose calculus spectra coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Collision {
    pub first: FamilySpec,
    pub second: FamilySpec,
}

/// `Ok(None)` when all calculus spectra are pairwise distinct; otherwise
/// the first colliding pair in list order.
pub fn pairwise_noncospectral(specs: &[FamilySpec]) -> Result<Option<Collision>, FamilyError> {
    let mut seen: HashMap<Spectrum, FamilySpec> = HashMap::with_capacity(specs.len());
    for spec in specs {
        let s = spectrum_of(&build(spec)?);
        if let Some(first) = seen.get(&s) {
            return Ok(Some(Collision {
                first: *first,
                second: *spec,
            }));
        }
        seen.insert(s, *spec);
    }
    Ok(None)
}

/// Every cospectral pair among all family members at parameter `r`.
pub fn coincidences(r: u64) -> Vec<Collision> {
    let specs = all_members(r);
    let spectra: Vec<Spectrum> = specs
        .iter()
        .map(|s| spectrum_of(&build(s).expect("members are valid")))
        .collect();
    let mut out = Vec::new();
    for a in 0..specs.len() {
        for b in a + 1..specs.len() {
            if spectra[a] == spectra[b] {
                out.push(Collision {
                    first: specs[a],
                    second: specs[b],
                });
            }
        }
    }
    out
}
