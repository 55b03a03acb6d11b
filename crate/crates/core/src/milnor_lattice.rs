//! The vanishing-cycle lattice of the cubic surface singularity.
//!
//! The basis is indexed by `{0,1}^k` in lexicographic order. The pairing of
//! two basis vectors `i < j` is `-(-1)^{sum(i - j)}` when the tuples are
//! coordinatewise comparable and zero otherwise, extended skew-symmetrically.
//! For `k = 4` the form has a rank-6 radical and the quotient is a rank-10
//! unimodular symplectic lattice carrying the images `a_v` of the 16 cycles.

use serde::{Deserialize, Serialize};

use crate::artin_graph::{BitVertex, MAX_K};
use crate::error::{invalid, Error, Result};
use crate::linalg::{self, Matrix};

/// Pairing of two basis cycles.
pub fn hl_pairing(i: &BitVertex, j: &BitVertex) -> Result<i64> {
    if i.k() != j.k() {
        return invalid(format!("dimension mismatch: {i} vs {j}"));
    }
    if i == j {
        return Ok(0);
    }
    if i > j {
        return hl_pairing(j, i).map(|x| -x);
    }
    if !i.no_opposite_pair(j) {
        return Ok(0);
    }
    let exponent: i64 = (0..usize::from(i.k()))
        .map(|c| i64::from(i.bit(c)) - i64::from(j.bit(c)))
        .sum();
    Ok(if exponent.rem_euclid(2) == 0 { -1 } else { 1 })
}

/// Skew Gram matrix on the `2^k` vanishing cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewLattice {
    pub k: u8,
    pub gram: Matrix,
}

impl SkewLattice {
    pub fn dimension(&self) -> usize {
        self.gram.rows()
    }

    /// Wrap an arbitrary skew-symmetric matrix (for small test lattices).
    pub fn from_gram(gram: Matrix) -> Result<Self> {
        if !gram.is_skew_symmetric() {
            return invalid("Gram matrix is not skew-symmetric");
        }
        Ok(SkewLattice { k: 0, gram })
    }

    pub fn rank(&self) -> usize {
        self.gram.rank()
    }
}

pub fn gram_matrix(k: u8) -> Result<SkewLattice> {
    if k == 0 || k > MAX_K {
        return invalid(format!("k must be in 1..={MAX_K}, got {k}"));
    }
    let n = 1usize << k;
    let verts: Vec<BitVertex> = (0..n)
        .map(|c| BitVertex::new(k, c as u16))
        .collect::<Result<_>>()?;
    let mut gram = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            gram[(i, j)] = hl_pairing(&verts[i], &verts[j])?;
        }
    }
    Ok(SkewLattice { k, gram })
}

/// Hermite-reduced basis of the saturated integer kernel of the form.
pub fn radical(lattice: &SkewLattice) -> Result<Vec<Vec<i64>>> {
    linalg::integer_kernel(&lattice.gram)
}

/// The lattice modulo its radical, with the induced form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientLattice {
    pub k: u8,
    pub rank: usize,
    pub induced_gram: Matrix,
    /// Image of each vanishing cycle, indexed like the vertex list.
    pub class_map: Vec<Vec<i64>>,
    pub radical_basis: Vec<Vec<i64>>,
}

impl QuotientLattice {
    /// Induced pairing of two quotient vectors.
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> Result<i64> {
        linalg::dot(x, &self.induced_gram.mul_vec(y)?)
    }

    pub fn class_of(&self, v: &BitVertex) -> Result<&[i64]> {
        self.class_map
            .get(v.index())
            .filter(|_| v.k() == self.k)
            .map(Vec::as_slice)
            .ok_or_else(|| {
                Error::InvalidInput(format!("vertex {v} not in lattice of k={}", self.k))
            })
    }

    pub fn determinant(&self) -> Result<i128> {
        self.induced_gram.determinant()
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        Ok(self.determinant()?.abs() == 1)
    }
}

/// Quotient by the saturated radical.
///
/// Coordinates on the quotient are the Hermite basis of the integer vectors
/// orthogonal (under the dot product) to the radical; the class of a cycle is
/// its vector of values on that basis.
pub fn quotient_lattice(lattice: &SkewLattice) -> Result<QuotientLattice> {
    let n = lattice.dimension();
    let radical_basis = radical(lattice)?;
    let projection = if radical_basis.is_empty() {
        Matrix::identity(n)
    } else {
        let rows = linalg::integer_kernel(&Matrix::from_rows(&radical_basis)?)?;
        Matrix::from_rows(&rows)?
    };
    let rank = projection.rows();
    let section = linalg::right_inverse(&projection)?;
    let induced_gram = section
        .transpose()
        .checked_mul(&lattice.gram)?
        .checked_mul(&section)?;
    let class_map: Vec<Vec<i64>> = (0..n).map(|i| projection.column(i)).collect();
    let q = QuotientLattice {
        k: lattice.k,
        rank,
        induced_gram,
        class_map,
        radical_basis,
    };
    // The defining property; anything else is a bug in the elimination.
    for i in 0..n {
        for j in 0..n {
            if q.pairing(&q.class_map[i], &q.class_map[j])? != lattice.gram[(i, j)] {
                return Err(Error::ConstructionFailed(format!(
                    "quotient pairing differs from the Gram matrix at ({i}, {j})"
                )));
            }
        }
    }
    Ok(q)
}

/// Rational rank of the span of the selected classes.
pub fn sublattice_rank(q: &QuotientLattice, subset: &[usize]) -> Result<usize> {
    let rows = subset
        .iter()
        .map(|&i| {
            q.class_map
                .get(i)
                .cloned()
                .ok_or_else(|| Error::InvalidInput(format!("vertex index {i} out of range")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(linalg::rank(&rows))
}

fn skew_pair(gram: &Matrix, x: &[i64], y: &[i64]) -> Result<i64> {
    linalg::dot(x, &gram.mul_vec(y)?)
}

/// Basis `e_1, f_1, ..., e_g, f_g` of a unimodular skew lattice with
/// `<e_i, f_i> = 1` and all other pairings zero.
pub fn symplectic_basis_of(gram: &Matrix) -> Result<Vec<Vec<i64>>> {
    if !gram.is_skew_symmetric() {
        return invalid("form is not skew-symmetric");
    }
    let det = gram.determinant()?;
    if det.abs() != 1 {
        return Err(Error::DegenerateForm(format!(
            "determinant {det}, expected +-1"
        )));
    }
    let n = gram.rows();
    let mut lattice: Vec<Vec<i64>> = Matrix::identity(n).to_rows();
    let mut out = Vec::with_capacity(n);
    while !lattice.is_empty() {
        let e = lattice[0].clone();
        let mut f = vec![0i64; n];
        let mut g = 0i64;
        for z in &lattice {
            let p = skew_pair(gram, &e, z)?;
            if p == 0 {
                continue;
            }
            let (ng, s, t) = linalg::ext_gcd(g, p);
            f = f
                .iter()
                .zip(z)
                .map(|(a, b)| {
                    a.checked_mul(s)
                        .and_then(|x| b.checked_mul(t).and_then(|y| x.checked_add(y)))
                        .ok_or(Error::Overflow("symplectic basis"))
                })
                .collect::<Result<_>>()?;
            g = ng;
        }
        if g != 1 {
            return Err(Error::DegenerateForm(format!(
                "vector {e:?} pairs with content {g}"
            )));
        }
        let mut projected = Vec::with_capacity(lattice.len());
        for z in &lattice {
            let zf = skew_pair(gram, z, &f)?;
            let ze = skew_pair(gram, z, &e)?;
            let w: Vec<i64> = (0..n)
                .map(|c| {
                    zf.checked_mul(e[c])
                        .and_then(|a| ze.checked_mul(f[c]).map(|b| z[c] - a + b))
                        .ok_or(Error::Overflow("symplectic basis"))
                })
                .collect::<Result<_>>()?;
            projected.push(w);
        }
        out.push(e);
        out.push(f);
        lattice = linalg::row_hnf(&projected)?;
    }
    Ok(out)
}

pub fn symplectic_basis(q: &QuotientLattice) -> Result<Vec<Vec<i64>>> {
    symplectic_basis_of(&q.induced_gram)
}

/// Gram matrix of a list of vectors under a form.
pub fn gram_of(gram: &Matrix, basis: &[Vec<i64>]) -> Result<Matrix> {
    let m = basis.len();
    let mut out = Matrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            out[(i, j)] = skew_pair(gram, &basis[i], &basis[j])?;
        }
    }
    Ok(out)
}

pub fn standard_symplectic_form(n: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for b in 0..n / 2 {
        m[(2 * b, 2 * b + 1)] = 1;
        m[(2 * b + 1, 2 * b)] = -1;
    }
    m
}

/// Everything the lattice stage exports.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LatticeExport {
    pub k: u8,
    pub gram: Matrix,
    pub radical_basis: Vec<Vec<i64>>,
    pub induced_gram: Matrix,
    pub class_map: Vec<Vec<i64>>,
    pub determinant: i128,
    pub symplectic_basis: Option<Vec<Vec<i64>>>,
}

impl LatticeExport {
    pub fn build(k: u8) -> Result<Self> {
        let lattice = gram_matrix(k)?;
        let q = quotient_lattice(&lattice)?;
        let determinant = q.determinant()?;
        let symplectic_basis = symplectic_basis(&q).ok();
        Ok(LatticeExport {
            k,
            gram: lattice.gram,
            radical_basis: q.radical_basis,
            induced_gram: q.induced_gram,
            class_map: q.class_map,
            determinant,
            symplectic_basis,
        })
    }
}
