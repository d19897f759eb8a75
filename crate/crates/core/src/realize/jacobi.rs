use thiserror::Error;

use super::SquareMatrix;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiOptions {
    /// Stop once the off-diagonal Frobenius norm drops below
    /// `tol * max(1, ||A||_F)`.
    pub tol: f64,
    pub max_sweeps: usize,
}

impl Default for JacobiOptions {
    fn default() -> Self {
        JacobiOptions {
            tol: 1e-12,
            max_sweeps: 100,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
pub struct NoConvergence {
    pub sweeps: usize,
    pub residual: f64,
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            sum += a[i * n + j] * a[i * n + j];
        }
    }
    (2.0 * sum).sqrt()
}

/// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi
/// rotations in fixed row-by-row pivot order. Only the upper triangle and
/// diagonal of the input are read.
pub fn symmetric_eigenvalues(
    m: &SquareMatrix<f64>,
    opts: JacobiOptions,
) -> Result<Vec<f64>, NoConvergence> {
    let n = m.n();
    let mut a = vec![0.0; n * n];
    for i in 0..n {
        for j in i..n {
            let v = m.get(i, j);
            a[i * n + j] = v;
            a[j * n + i] = v;
        }
    }
    let scale = a.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    let threshold = opts.tol * scale;

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a, n);
        if off < threshold {
            break;
        }
        if sweeps == opts.max_sweeps {
            return Err(NoConvergence {
                sweeps,
                residual: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

/// Applies the rotation in the (p, q) plane that annihilates `a[p][q]`.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    // smaller root of t^2 + 2 theta t - 1 = 0
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eig(rows: &[Vec<f64>]) -> Vec<f64> {
        symmetric_eigenvalues(&SquareMatrix::from_rows(rows), JacobiOptions::default()).unwrap()
    }

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn k2_laplacian() {
        assert!(close(&eig(&[vec![1.0, -1.0], vec![-1.0, 1.0]]), &[0.0, 2.0], 1e-12));
    }

    #[test]
    fn path_laplacian() {
        let l = [
            vec![1.0, -1.0, 0.0],
            vec![-1.0, 2.0, -1.0],
            vec![0.0, -1.0, 1.0],
        ];
        assert!(close(&eig(&l), &[0.0, 1.0, 3.0], 1e-12));
    }

    #[test]
    fn diagonal_and_empty_inputs() {
        assert!(close(&eig(&[vec![3.0, 0.0], vec![0.0, -2.0]]), &[-2.0, 3.0], 0.0));
        assert!(eig(&[]).is_empty());
        assert!(close(&eig(&[vec![7.0]]), &[7.0], 0.0));
    }

    #[test]
    fn reports_non_convergence() {
        let m = SquareMatrix::from_rows(&[
            vec![1.0, 2.0, 3.0],
            vec![2.0, 4.0, 5.0],
            vec![3.0, 5.0, 6.0],
        ]);
        let err = symmetric_eigenvalues(
            &m,
            JacobiOptions {
                tol: 1e-12,
                max_sweeps: 0,
            },
        )
        .unwrap_err();
        assert_eq!(err.sweeps, 0);
        assert!(err.residual > 1.0);
    }

    #[test]
    fn deterministic() {
        let m = SquareMatrix::from_rows(&[
            vec![4.0, 1.0, -2.0, 2.0],
            vec![1.0, 2.0, 0.0, 1.0],
            vec![-2.0, 0.0, 3.0, -2.0],
            vec![2.0, 1.0, -2.0, -1.0],
        ]);
        let a = symmetric_eigenvalues(&m, JacobiOptions::default()).unwrap();
        let b = symmetric_eigenvalues(&m, JacobiOptions::default()).unwrap();
        assert_eq!(a, b);
        let trace: f64 = a.iter().sum();
        assert!((trace - 8.0).abs() < 1e-12);
    }
}
