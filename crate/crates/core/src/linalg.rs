//! Exact integer linear algebra.
//!
//! Everything here works over `i64` with checked arithmetic; any overflow is
//! surfaced as [`Error::Overflow`] instead of wrapping. Rational ranks and
//! determinants use fraction-free elimination in `i128`.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<i64>]) -> Result<Self> {
        Ok(Matrix::from_rows(cols)?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self[(i, j)] == -self[(j, i)]))
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::InvalidInput(format!(
                "shape mismatch: {}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a
                        .checked_mul(rhs[(k, j)])
                        .ok_or(Error::Overflow("matrix product"))?;
                    out[(i, j)] = out[(i, j)]
                        .checked_add(prod)
                        .ok_or(Error::Overflow("matrix product"))?;
                }
            }
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::InvalidInput("shape mismatch in subtraction".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| {
                a.checked_sub(*b)
                    .ok_or(Error::Overflow("matrix difference"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn mul_vec(&self, v: &[i64]) -> Result<Vec<i64>> {
        if v.len() != self.cols {
            return Err(Error::InvalidInput(
                "vector length does not match matrix".into(),
            ));
        }
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn rank(&self) -> usize {
        rank(&self.to_rows())
    }

    pub fn determinant(&self) -> Result<i128> {
        if !self.is_square() {
            return Err(Error::InvalidInput(
                "determinant of a non-square matrix".into(),
            ));
        }
        determinant(&self.to_rows())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(deserializer)?;
        Matrix::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

pub fn dot(a: &[i64], b: &[i64]) -> Result<i64> {
    a.iter().zip(b).try_fold(0i64, |acc, (x, y)| {
        x.checked_mul(*y)
            .and_then(|p| acc.checked_add(p))
            .ok_or(Error::Overflow("dot product"))
    })
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// gcd of all entries (0 for the zero vector).
pub fn content(v: &[i64]) -> i64 {
    v.iter().fold(0, |g, &x| gcd(g, x))
}

fn combine(a: &[i64], ca: i64, b: &[i64], cb: i64) -> Result<Vec<i64>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            x.checked_mul(ca)
                .and_then(|p| y.checked_mul(cb).and_then(|q| p.checked_add(q)))
                .ok_or(Error::Overflow("row combination"))
        })
        .collect()
}

/// Row-echelon form by unimodular row operations, pivoting only on the
/// first `pivot_cols` columns. Pivots are made positive and the entries
/// above each pivot are reduced into `[0, pivot)`. Returns the rank, i.e.
/// the number of pivot rows, which occupy the top of `rows`.
pub fn echelonize(rows: &mut [Vec<i64>], pivot_cols: usize) -> Result<usize> {
    let m = rows.len();
    let mut r = 0;
    for col in 0..pivot_cols {
        if r == m {
            break;
        }
        for i in r + 1..m {
            if rows[i][col] == 0 {
                continue;
            }
            let (a, b) = (rows[r][col], rows[i][col]);
            let (g, s, t) = ext_gcd(a, b);
            let new_r = combine(&rows[r], s, &rows[i], t)?;
            let new_i = combine(&rows[r], -b / g, &rows[i], a / g)?;
            rows[r] = new_r;
            rows[i] = new_i;
        }
        if rows[r][col] == 0 {
            continue;
        }
        if rows[r][col] < 0 {
            for x in rows[r].iter_mut() {
                *x = -*x;
            }
        }
        let p = rows[r][col];
        for i in 0..r {
            let q = rows[i][col].div_euclid(p);
            if q != 0 {
                let reduced = combine(&rows[i], 1, &rows[r], -q)?;
                rows[i] = reduced;
            }
        }
        r += 1;
    }
    Ok(r)
}

/// Canonical Hermite normal form basis of the lattice spanned by `rows`
/// (zero rows dropped).
pub fn row_hnf(rows: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let Some(n) = rows.first().map(Vec::len) else {
        return Ok(Vec::new());
    };
    let mut work = rows.to_vec();
    let r = echelonize(&mut work, n)?;
    work.truncate(r);
    Ok(work)
}

/// Saturated integer basis of `{x : A x = 0}`, in Hermite normal form.
pub fn integer_kernel(a: &Matrix) -> Result<Vec<Vec<i64>>> {
    let (m, n) = (a.rows(), a.cols());
    // Rows of [A^T | I_n]; the transform part of zero rows spans the kernel.
    let mut aug: Vec<Vec<i64>> = (0..n)
        .map(|j| {
            let mut row: Vec<i64> = (0..m).map(|i| a[(i, j)]).collect();
            row.extend((0..n).map(|l| i64::from(l == j)));
            row
        })
        .collect();
    let r = echelonize(&mut aug, m)?;
    let kernel: Vec<Vec<i64>> = aug[r..].iter().map(|row| row[m..].to_vec()).collect();
    row_hnf(&kernel)
}

/// Integer right inverse `S` of a surjective `P : Z^n -> Z^m`, so `P S = I_m`.
pub fn right_inverse(p: &Matrix) -> Result<Matrix> {
    let (m, n) = (p.rows(), p.cols());
    let mut aug: Vec<Vec<i64>> = (0..n)
        .map(|j| {
            let mut row: Vec<i64> = (0..m).map(|i| p[(i, j)]).collect();
            row.extend((0..n).map(|l| i64::from(l == j)));
            row
        })
        .collect();
    let r = echelonize(&mut aug, m)?;
    if r != m {
        return Err(Error::InvalidInput("map is not of full rank".into()));
    }
    // U P^T = [H; 0] with H upper triangular; surjective iff diag(H) = 1.
    let h: Vec<Vec<i64>> = aug[..m].iter().map(|row| row[..m].to_vec()).collect();
    if (0..m).any(|i| h[i][i] != 1) {
        return Err(Error::InvalidInput(
            "map is not surjective over the integers".into(),
        ));
    }
    let h_inv = unit_upper_inverse(&h)?;
    let u_top = Matrix::from_rows(
        &aug[..m]
            .iter()
            .map(|row| row[m..].to_vec())
            .collect::<Vec<_>>(),
    )?;
    // S = U_top^T H^{-T}
    u_top
        .transpose()
        .checked_mul(&Matrix::from_rows(&h_inv)?.transpose())
}

#[allow(clippy::needless_range_loop)]
fn unit_upper_inverse(h: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let n = h.len();
    let mut inv = vec![vec![0i64; n]; n];
    for col in 0..n {
        for i in (0..n).rev() {
            let mut acc = i64::from(i == col);
            for k in i + 1..n {
                let p = h[i][k]
                    .checked_mul(inv[k][col])
                    .ok_or(Error::Overflow("triangular inverse"))?;
                acc = acc
                    .checked_sub(p)
                    .ok_or(Error::Overflow("triangular inverse"))?;
            }
            inv[i][col] = acc;
        }
    }
    Ok(inv)
}

/// Rank over the rationals.
#[allow(clippy::needless_range_loop)]
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut work: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let ncols = work.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..work.len()).find(|&i| work[i][col] != 0) else {
            continue;
        };
        work.swap(r, p);
        for i in r + 1..work.len() {
            if work[i][col] == 0 {
                continue;
            }
            let (a, b) = (work[r][col], work[i][col]);
            let mut g = 0i128;
            for c in 0..ncols {
                work[i][c] = work[i][c] * a - work[r][c] * b;
                g = gcd128(g, work[i][c]);
            }
            if g > 1 {
                for x in work[i].iter_mut() {
                    *x /= g;
                }
            }
        }
        r += 1;
    }
    r
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Bareiss fraction-free determinant.
pub fn determinant(rows: &[Vec<i64>]) -> Result<i128> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidInput(
            "determinant of a non-square matrix".into(),
        ));
    }
    if n == 0 {
        return Ok(1);
    }
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|x| a[i][k].checked_mul(a[k][j]).and_then(|y| x.checked_sub(y)))
                    .ok_or(Error::Overflow("determinant"))?;
                a[i][j] = num / prev;
            }
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}

/// Rank over the two-element field of rows given as bitmasks.
pub fn f2_rank(rows: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &row in rows {
        let mut x = row;
        for &b in &basis {
            x = x.min(x ^ b);
        }
        if x != 0 {
            basis.push(x);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_gcd_identity() {
        for a in -20..20 {
            for b in -20..20 {
                let (g, s, t) = ext_gcd(a, b);
                assert_eq!(g, gcd(a, b));
                assert_eq!(s * a + t * b, g);
            }
        }
    }

    #[test]
    fn kernel_of_simple_map() {
        let a = Matrix::from_rows(&[vec![2, 4, 6]]).unwrap();
        let k = integer_kernel(&a).unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(a.mul_vec(v).unwrap(), vec![0]);
        }
        // saturated: the kernel of (1 2 3) over Z, which has index 1
        assert_eq!(k, row_hnf(&[vec![2, -1, 0], vec![3, 0, -1]]).unwrap());
    }

    #[test]
    fn kernel_is_saturated() {
        // 2x = 0 over Q has kernel 0; x - y with coefficient 2 has kernel (1,1).
        let a = Matrix::from_rows(&[vec![2, -2]]).unwrap();
        assert_eq!(integer_kernel(&a).unwrap(), vec![vec![1, 1]]);
    }

    #[test]
    fn right_inverse_roundtrip() {
        let p = Matrix::from_rows(&[vec![1, 2, 0], vec![0, 3, 1]]).unwrap();
        let s = right_inverse(&p).unwrap();
        assert_eq!(p.checked_mul(&s).unwrap(), Matrix::identity(2));
        let not_onto = Matrix::from_rows(&[vec![2, 0], vec![0, 1]]).unwrap();
        assert!(right_inverse(&not_onto).is_err());
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&[vec![0, 1], vec![-1, 0]]).unwrap(), 1);
        assert_eq!(
            determinant(&[vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]]).unwrap(),
            4
        );
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]).unwrap(), 0);
        assert_eq!(
            determinant(&[vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]).unwrap(),
            -1
        );
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![0, 1], vec![-1, 0]]), 2);
        assert_eq!(f2_rank(&[0b011, 0b110, 0b101]), 2);
        assert_eq!(rank(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]), 3);
    }

    #[test]
    fn hnf_is_canonical() {
        let a = row_hnf(&[vec![2, 1], vec![4, 3]]).unwrap();
        let b = row_hnf(&[vec![2, 2], vec![2, 1]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, vec![vec![2, 0], vec![0, 1]]);
    }
}
