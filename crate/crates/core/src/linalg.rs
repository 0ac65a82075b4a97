//! Dense exact-rational linear algebra: rank, kernel, solving, subspaces
//! and quotients. Everything here is deterministic; pivot choice is always
//! the first nonzero entry in column order, so downstream constructions
//! (quotient bases, induced maps) are reproducible.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Dense matrix over the rationals, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Rat>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rat) -> Self {
        let mut m = Mat::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let t = a * b;
                        out[(i, j)] += t;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc += &self[(i, j)] * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &other[(i, j)])
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &other[(i, j)])
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * c)
    }

    /// Vertical stack: self on top of other.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block diagonal of two matrices.
    pub fn block_diag(&self, other: &Mat) -> Mat {
        let mut m = Mat::zero(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let pivot_row = (r..m.rows).find(|&i| !m[(i, c)].is_zero());
            let Some(p) = pivot_row else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(r * m.cols + j, p * m.cols + j);
                }
            }
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let v = &m[(i, j)] - &f * &m[(r, j)];
                        m[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the kernel (right null space), as column vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve self * x = b; None if inconsistent. Free variables are set to 0.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    /// Determinant by fraction-free-ish Gaussian elimination.
    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let mut det = Rat::one();
        for c in 0..m.cols {
            let pivot_row = (c..m.rows).find(|&i| !m[(i, c)].is_zero());
            let Some(p) = pivot_row else { return Rat::zero() };
            if p != c {
                for j in 0..m.cols {
                    m.data.swap(c * m.cols + j, p * m.cols + j);
                }
                det = -det;
            }
            det *= &m[(c, c)];
            let inv = m[(c, c)].recip();
            for i in c + 1..m.rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..m.cols {
                    let v = &m[(i, j)] - &f * &m[(c, j)];
                    m[(i, j)] = v;
                }
            }
        }
        det
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self[(i, j)].is_one()
                    } else {
                        self[(i, j)].is_zero()
                    }
                })
            })
    }

    /// Inverse if square and invertible.
    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Mat::zero(0, 0));
        }
        let mut aug = Mat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rat::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }
}

/// A subspace of Q^dim, stored as an rref basis (rows). Supports membership,
/// canonical reduction modulo the subspace, and quotient coordinates.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub dim_ambient: usize,
    /// rref rows spanning the subspace.
    pub basis: Mat,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_spanning(vectors: &[Vec<Rat>], dim_ambient: usize) -> Self {
        if vectors.is_empty() {
            return Subspace { dim_ambient, basis: Mat::zero(0, dim_ambient), pivots: vec![] };
        }
        let m = Mat::from_rows(vectors.to_vec());
        assert_eq!(m.cols, dim_ambient);
        let (r, pivots) = m.rref();
        let mut rows = Vec::new();
        for i in 0..pivots.len() {
            rows.push(r.row(i).to_vec());
        }
        let basis =
            if rows.is_empty() { Mat::zero(0, dim_ambient) } else { Mat::from_rows(rows) };
        Subspace { dim_ambient, basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Canonical representative of v modulo the subspace: subtract the
    /// pivot components.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.dim_ambient);
        let mut w = v.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            if !w[pc].is_zero() {
                let f = w[pc].clone();
                for j in 0..self.dim_ambient {
                    let t = &w[j] - &f * &self.basis[(row, j)];
                    w[j] = t;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Coordinates of the class of v in the quotient, indexed by non-pivot
    /// coordinates in increasing order.
    pub fn quotient_coords(&self, v: &[Rat]) -> Vec<Rat> {
        let w = self.reduce(v);
        let pivot_set: std::collections::HashSet<usize> = self.pivots.iter().copied().collect();
        (0..self.dim_ambient).filter(|j| !pivot_set.contains(j)).map(|j| w[j].clone()).collect()
    }

    pub fn quotient_dim(&self) -> usize {
        self.dim_ambient - self.dim()
    }
}

/// Least common multiple of denominators; used for pretty integer output.
pub fn clear_denominators(v: &[Rat]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in v {
        let d = x.denom();
        let g = gcd_big(&l, d);
        l = &l / &g * d;
    }
    v.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

fn gcd_big(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_rank_kernel() {
        let m = Mat::from_rows(vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
            vec![rat(1), rat(0), rat(1)],
        ]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_and_inverse() {
        let m = Mat::from_rows(vec![vec![rat(2), rat(1)], vec![rat(1), rat(1)]]);
        let x = m.solve(&[rat(3), rat(2)]).unwrap();
        assert_eq!(x, vec![rat(1), rat(1)]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert_eq!(m.det(), rat(1));
    }

    #[test]
    fn subspace_quotient() {
        let s = Subspace::from_spanning(&[vec![rat(1), rat(1), rat(0)]], 3);
        assert_eq!(s.dim(), 1);
        assert_eq!(s.quotient_dim(), 2);
        assert!(s.contains(&[rat(2), rat(2), rat(0)]));
        let q = s.quotient_coords(&[rat(1), rat(0), rat(5)]);
        assert_eq!(q.len(), 2);
        // v = (1,0,5) reduces to (0,-1,5): non-pivot coords are 1 and 2.
        assert_eq!(q, vec![rat(-1), rat(5)]);
    }
}
