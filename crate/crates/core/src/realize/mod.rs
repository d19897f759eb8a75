//! Concrete adjacency matrices for expressions and graph6 records, plus the
//! two independent oracles used to cross-check the spectral calculus: a
//! cyclic Jacobi eigensolver and an exact characteristic polynomial.

mod charpoly;
pub mod graph6;
mod jacobi;

pub use charpoly::{certify_integer_spectrum, charpoly_exact, IntPolynomial};
pub use jacobi::{symmetric_eigenvalues, JacobiOptions, NoConvergence};

use thiserror::Error;

use crate::expr::GraphExpr;

/// Default cap on the number of vertices [`realize`] will materialize.
pub const DEFAULT_SIZE_CAP: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("expression has {order} vertices, above the size cap of {cap}")]
pub struct SizeCapExceeded {
    pub order: u64,
    pub cap: u64,
}

/// Dense row-major square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Copy + Default> SquareMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        SquareMatrix {
            n,
            data: vec![T::default(); n * n],
        }
    }

    /// Panics unless `data.len() == n * n`.
    pub fn from_row_major(n: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), n * n, "expected {n}x{n} entries");
        SquareMatrix { n, data }
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let n = rows.len();
        let data: Vec<T> = rows.iter().flat_map(|r| r.iter().copied()).collect();
        SquareMatrix::from_row_major(n, data)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn map<U: Copy + Default>(&self, f: impl Fn(T) -> U) -> SquareMatrix<U> {
        SquareMatrix {
            n: self.n,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }
}

/// Simple undirected graph as a symmetric 0/1 table with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DenseGraph {
    n: usize,
    adj: Vec<bool>,
}

impl DenseGraph {
    pub fn empty(n: usize) -> Self {
        DenseGraph {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = DenseGraph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Panics on a self-loop or an out-of-range vertex.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = DenseGraph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.set_edge(u, v, true);
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        assert!(u != v, "self-loop at vertex {u}");
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.adj[u * self.n + v] = present;
        self.adj[v * self.n + u] = present;
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u * self.n..(u + 1) * self.n]
            .iter()
            .filter(|&&b| b)
            .count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> DenseGraph {
        let mut g = DenseGraph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Vertices of `other` are renumbered after those of `self`.
    pub fn disjoint_union(&self, other: &DenseGraph) -> DenseGraph {
        let n = self.n + other.n;
        let mut g = DenseGraph::empty(n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    pub fn join(&self, other: &DenseGraph) -> DenseGraph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        g
    }

    pub fn adjacency_matrix(&self) -> SquareMatrix<i64> {
        SquareMatrix::from_row_major(self.n, self.adj.iter().map(|&b| i64::from(b)).collect())
    }

    /// `L = D - A`; every row sums to zero.
    pub fn laplacian_matrix(&self) -> SquareMatrix<i64> {
        let mut l = self.adjacency_matrix().map(|a| -a);
        for u in 0..self.n {
            l.set(u, u, self.degree(u) as i64);
        }
        l
    }

    /// Numeric Laplacian eigenvalues, ascending.
    pub fn laplacian_eigenvalues(&self, opts: JacobiOptions) -> Result<Vec<f64>, NoConvergence> {
        symmetric_eigenvalues(&self.laplacian_matrix().map(|x| x as f64), opts)
    }
}

pub fn laplacian_matrix(g: &DenseGraph) -> SquareMatrix<i64> {
    g.laplacian_matrix()
}

pub fn realize(expr: &GraphExpr) -> Result<DenseGraph, SizeCapExceeded> {
    realize_with_cap(expr, DEFAULT_SIZE_CAP)
}

pub fn realize_with_cap(expr: &GraphExpr, cap: u64) -> Result<DenseGraph, SizeCapExceeded> {
    let order = expr.checked_order().unwrap_or(u64::MAX);
    if order > cap {
        return Err(SizeCapExceeded { order, cap });
    }
    Ok(build(expr))
}

fn build(expr: &GraphExpr) -> DenseGraph {
    match expr {
        GraphExpr::Complete(n) => DenseGraph::complete(*n as usize),
        GraphExpr::Union(l, r) => build(l).disjoint_union(&build(r)),
        GraphExpr::Join(l, r) => build(l).join(&build(r)),
        GraphExpr::Repeat(m, e) => {
            let one = build(e);
            let k = one.order();
            let mut g = DenseGraph::empty(k * *m as usize);
            for copy in 0..*m as usize {
                for (u, v) in one.edges() {
                    g.add_edge(copy * k + u, copy * k + v);
                }
            }
            g
        }
        GraphExpr::Complement(e) => build(e).complement(),
    }
}
