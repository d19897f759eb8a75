//! Exact Laplacian spectra of graph expressions.
//!
//! The spectrum of an expression is obtained by structural recursion:
//!
//! * `K_n` has spectrum `{0, n^(n-1)}`.
//! * A disjoint union has the multiset union of its parts' spectra.
//! * The complement of an `n`-vertex graph drops one zero and reflects every
//!   remaining eigenvalue `mu` to `n - mu`, then adds a zero back.
//! * The join of an `n1`-vertex and an `n2`-vertex graph drops one zero from
//!   each side, shifts the left side by `n2` and the right side by `n1`, and
//!   adds the eigenvalues `0` and `n1 + n2`.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::expr::GraphExpr;
use crate::rational::{self, Rational};

/// Multiset of Laplacian eigenvalues, sorted ascending with merged keys.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Spectrum {
    order: u64,
    entries: Vec<(Rational, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("a spectrum needs at least one vertex")]
    Empty,
    #[error("total multiplicity {total} does not match order {order}")]
    MultiplicityMismatch { total: u64, order: u64 },
    #[error("smallest eigenvalue must be exactly 0")]
    MissingZero,
    #[error("eigenvalue {value} lies outside [0, {order}]")]
    OutOfRange { value: Rational, order: u64 },
    #[error("zero multiplicity for eigenvalue {0}")]
    ZeroMultiplicity(Rational),
}

fn merge(pairs: impl IntoIterator<Item = (Rational, u64)>) -> Vec<(Rational, u64)> {
    let mut map: BTreeMap<Rational, u64> = BTreeMap::new();
    for (value, mult) in pairs {
        if mult > 0 {
            *map.entry(value).or_insert(0) += mult;
        }
    }
    map.into_iter().collect()
}

impl Spectrum {
    /// Builds a spectrum from `(eigenvalue, multiplicity)` pairs in any
    /// order, merging repeated keys and checking every invariant.
    pub fn new(
        order: u64,
        pairs: impl IntoIterator<Item = (Rational, u64)>,
    ) -> Result<Self, SpectrumError> {
        if order == 0 {
            return Err(SpectrumError::Empty);
        }
        let pairs: Vec<_> = pairs.into_iter().collect();
        if let Some((v, _)) = pairs.iter().find(|(_, m)| *m == 0) {
            return Err(SpectrumError::ZeroMultiplicity(*v));
        }
        let entries = merge(pairs);
        let total: u64 = entries.iter().map(|(_, m)| m).sum();
        if total != order {
            return Err(SpectrumError::MultiplicityMismatch { total, order });
        }
        let zero = rational::int(0);
        if entries[0].0 != zero {
            return Err(if entries[0].0 < zero {
                SpectrumError::OutOfRange {
                    value: entries[0].0,
                    order,
                }
            } else {
                SpectrumError::MissingZero
            });
        }
        let top = entries[entries.len() - 1].0;
        if top > rational::int(order as i128) {
            return Err(SpectrumError::OutOfRange { value: top, order });
        }
        Ok(Spectrum { order, entries })
    }

    /// Convenience for integer spectra given as a flat list of eigenvalues.
    pub fn from_integers(values: &[i64]) -> Result<Self, SpectrumError> {
        Spectrum::new(
            values.len() as u64,
            values.iter().map(|&v| (rational::int(v as i128), 1)),
        )
    }

    fn from_parts(order: u64, pairs: impl IntoIterator<Item = (Rational, u64)>) -> Self {
        let s = Spectrum {
            order,
            entries: merge(pairs),
        };
        debug_assert_eq!(s.entries.iter().map(|(_, m)| m).sum::<u64>(), order);
        s
    }

    /// Spectrum of `K_n`: `{0, n^(n-1)}`.
    pub fn complete(n: u64) -> Self {
        assert!(n >= 1);
        Spectrum::from_parts(n, [(rational::int(0), 1), (rational::int(n as i128), n - 1)])
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn entries(&self) -> &[(Rational, u64)] {
        &self.entries
    }

    /// Eigenvalues expanded by multiplicity, ascending.
    pub fn values(&self) -> impl Iterator<Item = Rational> + '_ {
        self.entries
            .iter()
            .flat_map(|(v, m)| std::iter::repeat_n(*v, *m as usize))
    }

    pub fn multiplicity(&self, value: &Rational) -> u64 {
        self.entries
            .binary_search_by(|(v, _)| v.cmp(value))
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    /// Number of connected components.
    pub fn multiplicity_of_zero(&self) -> u64 {
        self.entries[0].1
    }

    /// Sum of eigenvalues with multiplicity; twice the edge count.
    pub fn trace(&self) -> Rational {
        self.entries
            .iter()
            .map(|(v, m)| v * rational::int(*m as i128))
            .sum()
    }

    pub fn max(&self) -> Rational {
        self.entries[self.entries.len() - 1].0
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|(v, _)| v.is_integer())
    }

    /// Entries without one copy of the leading zero (the `mu_1` slot).
    fn without_one_zero(&self) -> impl Iterator<Item = (Rational, u64)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, &(v, m))| if i == 0 { (v, m - 1) } else { (v, m) })
            .filter(|(_, m)| *m > 0)
    }

    /// `m` disjoint copies: multiplicities scale by `m`.
    pub fn repeated(&self, m: u64) -> Spectrum {
        Spectrum {
            order: self.order * m,
            entries: self.entries.iter().map(|&(v, k)| (v, k * m)).collect(),
        }
    }
}

pub fn union_spectra(a: &Spectrum, b: &Spectrum) -> Spectrum {
    Spectrum::from_parts(
        a.order + b.order,
        a.entries.iter().chain(b.entries.iter()).copied(),
    )
}

pub fn complement_spectrum(s: &Spectrum) -> Spectrum {
    let n = rational::int(s.order as i128);
    Spectrum::from_parts(
        s.order,
        std::iter::once((rational::int(0), 1)).chain(s.without_one_zero().map(|(v, m)| (n - v, m))),
    )
}

pub fn join_spectra(a: &Spectrum, b: &Spectrum) -> Spectrum {
    let n1 = rational::int(a.order as i128);
    let n2 = rational::int(b.order as i128);
    let total = a.order + b.order;
    let ends = [(rational::int(0), 1), (n1 + n2, 1)];
    Spectrum::from_parts(
        total,
        ends.into_iter()
            .chain(a.without_one_zero().map(|(v, m)| (v + n2, m)))
            .chain(b.without_one_zero().map(|(v, m)| (v + n1, m))),
    )
}

pub fn multiplicity_of_zero(s: &Spectrum) -> u64 {
    s.multiplicity_of_zero()
}

/// Exact Laplacian spectrum of the graph an expression denotes.
pub fn spectrum_of(expr: &GraphExpr) -> Spectrum {
    match expr {
        GraphExpr::Complete(n) => Spectrum::complete(*n),
        GraphExpr::Union(l, r) => union_spectra(&spectrum_of(l), &spectrum_of(r)),
        GraphExpr::Join(l, r) => join_spectra(&spectrum_of(l), &spectrum_of(r)),
        GraphExpr::Repeat(m, e) => spectrum_of(e).repeated(*m),
        GraphExpr::Complement(e) => complement_spectrum(&spectrum_of(e)),
    }
}

#[derive(Serialize, Deserialize)]
struct SpectrumJson {
    n: u64,
    eigs: Vec<(i128, i128, u64)>,
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SpectrumJson {
            n: self.order,
            eigs: self
                .entries
                .iter()
                .map(|(v, m)| (*v.numer(), *v.denom(), *m))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Spectrum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = SpectrumJson::deserialize(deserializer)?;
        let mut pairs = Vec::with_capacity(raw.eigs.len());
        for (num, den, mult) in raw.eigs {
            if den == 0 {
                return Err(serde::de::Error::custom("zero denominator"));
            }
            pairs.push((Rational::new(num, den), mult));
        }
        Spectrum::new(raw.n, pairs).map_err(serde::de::Error::custom)
    }
}
