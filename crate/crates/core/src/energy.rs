//! Mean-centred matrix energies, Laplacian energy, and the
//! L-borderenergetic and cospectrality predicates. All comparisons here are
//! exact.

use num_traits::Signed;
use serde::Serialize;
use thiserror::Error;

use crate::expr::GraphExpr;
use crate::rational::{self, Rational};
use crate::spectrum::{spectrum_of, Spectrum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnergyError {
    #[error("energy of a graph with no vertices is undefined")]
    NoVertices,
    #[error("eigenvalue multiplicities sum to {total}, expected {n}")]
    MultiplicityMismatch { total: u64, n: u64 },
}

/// `sum |lambda_i - trace/n|` over a multiset of eigenvalues of some
/// symmetric matrix with the given trace.
pub fn m_energy(
    eigenvalues: &[(Rational, u64)],
    trace: Rational,
    n: u64,
) -> Result<Rational, EnergyError> {
    if n == 0 {
        return Err(EnergyError::NoVertices);
    }
    let total: u64 = eigenvalues.iter().map(|(_, m)| m).sum();
    if total != n {
        return Err(EnergyError::MultiplicityMismatch { total, n });
    }
    let mean = trace / rational::int(n as i128);
    Ok(eigenvalues
        .iter()
        .map(|(v, m)| (v - mean).abs() * rational::int(*m as i128))
        .sum())
}

/// `LE(G) = sum |mu_i - dbar|`, with `dbar` taken from the spectrum's trace.
pub fn laplacian_energy(s: &Spectrum) -> Rational {
    m_energy(s.entries(), s.trace(), s.order()).expect("spectrum invariants hold")
}

/// `LE(K_n) = 2n - 2`.
pub fn complete_target(n: u64) -> i128 {
    2 * n as i128 - 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BorderenergeticWitness {
    pub holds: bool,
    pub le: Rational,
    pub target: i128,
}

pub fn is_l_borderenergetic(s: &Spectrum) -> BorderenergeticWitness {
    let le = laplacian_energy(s);
    let target = complete_target(s.order());
    BorderenergeticWitness {
        holds: le == rational::int(target),
        le,
        target,
    }
}

pub fn is_cospectral(a: &Spectrum, b: &Spectrum) -> bool {
    a == b
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnergyReport {
    pub order: u64,
    pub edges: u64,
    pub avg_degree: Rational,
    pub laplacian_energy: Rational,
    pub target: i128,
    pub is_l_borderenergetic: bool,
    pub is_complete: bool,
}

impl EnergyReport {
    /// Report for a spectrum whose graph has `edges` edges. Average degree
    /// comes from the spectrum trace; `2 * edges` must equal that trace.
    pub fn from_spectrum(s: &Spectrum, edges: u64) -> Self {
        let n = s.order();
        debug_assert_eq!(s.trace(), rational::int(2 * edges as i128));
        let witness = is_l_borderenergetic(s);
        EnergyReport {
            order: n,
            edges,
            avg_degree: s.trace() / rational::int(n as i128),
            laplacian_energy: witness.le,
            target: witness.target,
            is_l_borderenergetic: witness.holds,
            is_complete: u128::from(edges) == u128::from(n) * u128::from(n - 1) / 2,
        }
    }

    pub fn for_expr(expr: &GraphExpr) -> Self {
        EnergyReport::from_spectrum(&spectrum_of(expr), expr.edge_count())
    }
}

#[derive(Serialize)]
struct EnergyReportJson {
    n: u64,
    m: u64,
    dbar: [i128; 2],
    le: [i128; 2],
    target: i128,
    borderenergetic: bool,
}

impl Serialize for EnergyReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        EnergyReportJson {
            n: self.order,
            m: self.edges,
            dbar: rational::to_pair(&self.avg_degree),
            le: rational::to_pair(&self.laplacian_energy),
            target: self.target,
            borderenergetic: self.is_l_borderenergetic,
        }
        .serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;
    use crate::rational::int;

    fn spec(values: &[i64]) -> Spectrum {
        Spectrum::from_integers(values).unwrap()
    }

    #[test]
    fn m_energy_examples() {
        assert_eq!(m_energy(&[(int(0), 1)], int(0), 1).unwrap(), int(0));
        // adjacency spectrum of K4
        assert_eq!(
            m_energy(&[(int(-1), 3), (int(3), 1)], int(0), 4).unwrap(),
            int(6)
        );
        assert_eq!(
            m_energy(&[(int(0), 1), (int(2), 2), (int(4), 1)], int(8), 4).unwrap(),
            int(4)
        );
    }

    #[test]
    fn m_energy_rejects_bad_input() {
        assert_eq!(m_energy(&[], int(0), 0), Err(EnergyError::NoVertices));
        assert_eq!(
            m_energy(&[(int(0), 1)], int(0), 2),
            Err(EnergyError::MultiplicityMismatch { total: 1, n: 2 })
        );
    }

    #[test]
    fn laplacian_energy_examples() {
        assert_eq!(laplacian_energy(&Spectrum::complete(1)), int(0));
        assert_eq!(laplacian_energy(&spec(&[0, 4, 4, 5, 5, 7, 7, 8])), int(14));
        assert_eq!(laplacian_energy(&spec(&[0, 2, 4, 4])), int(6));
    }

    #[test]
    fn fractional_average_degree() {
        // P3: dbar = 4/3, LE = 4/3 + 1/3 + 5/3
        let p3 = spec(&[0, 1, 3]);
        assert_eq!(laplacian_energy(&p3), Rational::new(10, 3));
    }

    #[test]
    fn borderenergetic_examples() {
        let k5 = is_l_borderenergetic(&Spectrum::complete(5));
        assert!(k5.holds);
        assert_eq!(k5.target, 8);

        let omega3 = is_l_borderenergetic(&spec(&[0, 3, 3, 3, 5, 5, 5, 8]));
        assert!(omega3.holds);
        assert_eq!(omega3.le, int(14));

        let c4 = is_l_borderenergetic(&spec(&[0, 2, 2, 4]));
        assert!(!c4.holds);
        assert_eq!(c4.le, int(4));
        assert_eq!(c4.target, 6);
    }

    #[test]
    fn cospectrality() {
        let omega1 = spec(&[0, 4, 4, 5, 5, 7, 7, 8]);
        assert!(is_cospectral(&omega1, &omega1));
        assert!(!is_cospectral(&omega1, &Spectrum::complete(8)));
        let omega3 = spectrum_of(&parse("(K2 + 3K1) * 3K1").unwrap());
        let g01 = spectrum_of(&parse("3K1 * (3K1 + (K1 * 1K1))").unwrap());
        assert!(is_cospectral(&omega3, &g01));
    }

    #[test]
    fn report_for_second_family() {
        let report = EnergyReport::for_expr(&parse("2K2 * 2K2").unwrap());
        assert_eq!(report.order, 8);
        assert_eq!(report.edges, 20);
        assert_eq!(report.avg_degree, int(5));
        assert_eq!(report.laplacian_energy, int(14));
        assert!(report.is_l_borderenergetic);
        assert!(!report.is_complete);
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            r#"{"n":8,"m":20,"dbar":[5,1],"le":[14,1],"target":14,"borderenergetic":true}"#
        );
    }

    #[test]
    fn report_flags_complete_graphs() {
        assert!(EnergyReport::for_expr(&parse("K1").unwrap()).is_complete);
        assert!(EnergyReport::for_expr(&parse("~(3K1)").unwrap()).is_complete);
        assert!(EnergyReport::for_expr(&parse("K1 * K1 * K1").unwrap()).is_complete);
    }
}
