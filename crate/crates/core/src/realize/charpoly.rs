use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::SquareMatrix;

/// Integer polynomial, coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Trailing zero coefficients are trimmed.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPolynomial { coeffs }
    }

    /// `prod (x - k)` over the given roots.
    pub fn from_roots(roots: &[i64]) -> Self {
        let mut coeffs = vec![BigInt::one()];
        for &k in roots {
            let mut next = vec![BigInt::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * k;
            }
            coeffs = next;
        }
        IntPolynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && !(deg == 0 && first) {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if deg == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match deg {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{deg}")?,
            }
        }
        Ok(())
    }
}

/// `det(xI - m)` by the Faddeev-LeVerrier recurrence in exact integer
/// arithmetic. Every division in the recurrence is exact.
pub fn charpoly_exact(m: &SquareMatrix<i64>) -> IntPolynomial {
    let n = m.n();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // acc <- m * acc + c_{n-k+1} I
        let mut next = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let a = m.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = &acc[l * n + j];
                    if !v.is_zero() {
                        next[i * n + j] += v * a;
                    }
                }
            }
        }
        for i in 0..n {
            next[i * n + i] += &coeffs[n - k + 1];
        }
        acc = next;
        // c_{n-k} = -tr(m * acc) / k
        let mut trace = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                let a = m.get(i, l);
                if a != 0 {
                    trace += &acc[l * n + i] * a;
                }
            }
        }
        let k_big = BigInt::from(k);
        debug_assert!((&trace % &k_big).is_zero());
        coeffs[n - k] = -(trace / k_big);
    }
    IntPolynomial::new(coeffs)
}

/// True iff the characteristic polynomial of `m` is exactly
/// `prod (x - k)` over the candidate multiset.
pub fn certify_integer_spectrum(m: &SquareMatrix<i64>, candidate: &[i64]) -> bool {
    candidate.len() == m.n() && charpoly_exact(m) == IntPolynomial::from_roots(candidate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realize::DenseGraph;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    fn diamond() -> DenseGraph {
        DenseGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(charpoly_exact(&SquareMatrix::zeros(2)), poly(&[0, 0, 1]));
    }

    #[test]
    fn k2_laplacian() {
        let l = DenseGraph::complete(2).laplacian_matrix();
        assert_eq!(charpoly_exact(&l), poly(&[0, -2, 1]));
    }

    #[test]
    fn diamond_laplacian() {
        let p = charpoly_exact(&diamond().laplacian_matrix());
        assert_eq!(p, poly(&[0, -32, 32, -10, 1]));
        assert_eq!(p, IntPolynomial::from_roots(&[0, 2, 4, 4]));
        assert_eq!(p.to_string(), "x^4 - 10x^3 + 32x^2 - 32x");
    }

    #[test]
    fn general_integer_matrix() {
        // det(xI - [[2,1],[1,3]]) = x^2 - 5x + 5
        let m = SquareMatrix::from_rows(&[vec![2, 1], vec![1, 3]]);
        assert_eq!(charpoly_exact(&m), poly(&[5, -5, 1]));
        // non-symmetric input works too: [[0,1],[-2,-3]] -> x^2 + 3x + 2
        let m = SquareMatrix::from_rows(&[vec![0, 1], vec![-2, -3]]);
        assert_eq!(charpoly_exact(&m), poly(&[2, 3, 1]));
    }

    #[test]
    fn certification() {
        let k3 = DenseGraph::complete(3).laplacian_matrix();
        assert!(certify_integer_spectrum(&k3, &[0, 3, 3]));
        assert!(!certify_integer_spectrum(&k3, &[0, 2, 4]));
        assert!(!certify_integer_spectrum(&k3, &[0, 3]));
        assert!(certify_integer_spectrum(&diamond().laplacian_matrix(), &[4, 0, 4, 2]));
    }

    #[test]
    fn five_cycle_is_not_integral() {
        let c5 = DenseGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let l = c5.laplacian_matrix();
        // Every integer multiset of size 5 with values in [0, 5] and trace 10.
        let mut found = false;
        let mut cand = [0i64; 5];
        fn rec(i: usize, lo: i64, cand: &mut [i64; 5], l: &SquareMatrix<i64>, found: &mut bool) {
            if i == 5 {
                if cand.iter().sum::<i64>() == 10 && certify_integer_spectrum(l, cand) {
                    *found = true;
                }
                return;
            }
            for v in lo..=5 {
                cand[i] = v;
                rec(i + 1, v, cand, l, found);
            }
        }
        rec(0, 0, &mut cand, &l, &mut found);
        assert!(!found);
    }

    #[test]
    fn display_and_eval() {
        assert_eq!(poly(&[0]).to_string(), "0");
        assert_eq!(poly(&[-1, 0, 1]).to_string(), "x^2 - 1");
        assert_eq!(poly(&[3, -1]).to_string(), "-x + 3");
        assert_eq!(poly(&[0, -32, 32, -10, 1]).eval(4), BigInt::zero());
        assert_eq!(poly(&[0, -32, 32, -10, 1]).eval(1), BigInt::from(-9));
    }
}
