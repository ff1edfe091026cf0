//! Exact integer/rational linear algebra: rank, rational solve, column-style
//! Hermite normal form, and integer linear-system solvability.
//!
//! All decision paths are exact; no floating point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational scalar. Always stored reduced with a positive
/// denominator (guaranteed by `BigRational`).
pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Dense row-major rectangular matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
    }

    /// Builds the matrix whose columns are the given integer vectors.
    pub fn from_int_columns(cols: &[Vec<BigInt>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |col| col.len());
        assert!(cols.iter().all(|col| col.len() == r), "ragged columns");
        let mut m = Self::zero(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = Rat::from_integer(v.clone());
            }
        }
        m
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// Clears denominators row by row, returning an integer matrix with the same
/// rank and row space.
fn rows_cleared(m: &RatMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows)
        .map(|i| {
            let mut lcm = BigInt::one();
            for j in 0..m.cols {
                lcm = lcm.lcm(m[(i, j)].denom());
            }
            (0..m.cols)
                .map(|j| {
                    let v = &m[(i, j)];
                    v.numer() * (&lcm / v.denom())
                })
                .collect()
        })
        .collect()
}

/// Exact rank by fraction-free (Bareiss) Gaussian elimination.
pub fn rank(m: &RatMatrix) -> usize {
    int_rank(&rows_cleared(m))
}

/// Bareiss elimination rank of an integer matrix.
pub fn int_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..ncols {
        // Pivot search.
        let Some(p) = (row..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        for i in row + 1..nrows {
            for j in col + 1..ncols {
                let t = &a[row][col] * &a[i][j] - &a[i][col] * &a[row][j];
                a[i][j] = &t / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[row][col].clone();
        rank += 1;
        row += 1;
        if row == nrows {
            break;
        }
    }
    rank
}

/// Fast path for small 0/1 (or small-entry) matrices; entries must stay within
/// i128 during Bareiss elimination, which holds for incidence matrices at desk
/// scale by the Hadamard bound.
pub fn int_rank_i64(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev: i128 = 1;
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..nrows).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(row, p);
        for i in row + 1..nrows {
            for j in col + 1..ncols {
                let t = a[row][col]
                    .checked_mul(a[i][j])
                    .and_then(|x| a[i][col].checked_mul(a[row][j]).map(|y| x - y))
                    .expect("i128 overflow in rank; use int_rank");
                a[i][j] = t / prev;
            }
            a[i][col] = 0;
        }
        prev = a[row][col];
        rank += 1;
        row += 1;
        if row == nrows {
            break;
        }
    }
    rank
}

/// Some exact solution of `A s = b`, or `None` when the system is
/// inconsistent. Free variables are set to zero.
pub fn solve_rational(a: &RatMatrix, b: &[Rat]) -> Result<Option<Vec<Rat>>, LinalgError> {
    if b.len() != a.rows {
        return Err(LinalgError::DimensionMismatch(format!(
            "matrix has {} rows, rhs has {}",
            a.rows,
            b.len()
        )));
    }
    // Gauss-Jordan on the augmented matrix; exact rational pivoting.
    let mut m: Vec<Vec<Rat>> = (0..a.rows)
        .map(|i| {
            let mut row: Vec<Rat> = a.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();
    let ncols = a.cols;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for j in col..=ncols {
            let v = &m[row][j] * &inv;
            m[row][j] = v;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=ncols {
                    let v = &m[i][j] - &f * &m[row][j];
                    m[i][j] = v;
                }
            }
        }
        pivots.push((row, col));
        row += 1;
        if row == m.len() {
            break;
        }
    }
    // Inconsistency: a zero row with nonzero rhs.
    for i in row..m.len() {
        if m[i][..ncols].iter().all(|v| v.is_zero()) && !m[i][ncols].is_zero() {
            return Ok(None);
        }
    }
    let mut x = vec![Rat::zero(); ncols];
    for &(r, c) in &pivots {
        x[c] = m[r][ncols].clone();
    }
    Ok(Some(x))
}

/// Column-style Hermite normal form `A·U = H` with `U` unimodular.
#[derive(Debug, Clone)]
pub struct Hnf {
    /// Lower-triangular column HNF: pivot rows strictly increase over the
    /// nonzero columns, pivots are positive, and earlier columns are reduced
    /// at pivot rows into `[0, pivot)`.
    pub h: Vec<Vec<BigInt>>,
    /// Unimodular transform, `a * u = h` (both column-major as row-major
    /// `rows × cols` arrays).
    pub u: Vec<Vec<BigInt>>,
    /// Pivot (row, col) positions of `h`.
    pub pivots: Vec<(usize, usize)>,
}

/// Computes the column Hermite normal form of an integer matrix (given as
/// row-major `Vec<Vec<BigInt>>`).
pub fn hnf(a: &[Vec<BigInt>]) -> Hnf {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut h: Vec<Vec<BigInt>> = a.to_vec();
    // u as row-major identity (cols × cols); column ops applied to both.
    let mut u: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();

    let col_swap = |m: &mut Vec<Vec<BigInt>>, j1: usize, j2: usize| {
        for row in m.iter_mut() {
            row.swap(j1, j2);
        }
    };
    // col[j2] -= q * col[j1]
    let col_addmul = |m: &mut Vec<Vec<BigInt>>, j2: usize, j1: usize, q: &BigInt| {
        for row in m.iter_mut() {
            let v = &row[j2] - q * &row[j1];
            row[j2] = v;
        }
    };
    let col_neg = |m: &mut Vec<Vec<BigInt>>, j: usize| {
        for row in m.iter_mut() {
            let v = -row[j].clone();
            row[j] = v;
        }
    };

    let mut pivots = Vec::new();
    let mut c = 0;
    for r in 0..rows {
        if c == cols {
            break;
        }
        // Euclidean elimination across columns c..cols in row r.
        loop {
            let mut best: Option<usize> = None;
            for j in c..cols {
                if !h[r][j].is_zero() {
                    best = match best {
                        None => Some(j),
                        Some(b) => {
                            if h[r][j].abs() < h[r][b].abs() {
                                Some(j)
                            } else {
                                Some(b)
                            }
                        }
                    };
                }
            }
            let Some(b) = best else {
                break;
            };
            if b != c {
                col_swap(&mut h, c, b);
                col_swap(&mut u, c, b);
            }
            let mut done = true;
            for j in c + 1..cols {
                if !h[r][j].is_zero() {
                    let q = h[r][j].div_floor(&h[r][c]);
                    if !q.is_zero() {
                        col_addmul(&mut h, j, c, &q);
                        col_addmul(&mut u, j, c, &q);
                    }
                    if !h[r][j].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            col_neg(&mut h, c);
            col_neg(&mut u, c);
        }
        // Reduce earlier columns at this pivot row into [0, pivot).
        for j in 0..c {
            let q = h[r][j].div_floor(&h[r][c]);
            if !q.is_zero() {
                col_addmul(&mut h, j, c, &q);
                col_addmul(&mut u, j, c, &q);
            }
        }
        pivots.push((r, c));
        c += 1;
    }
    Hnf { h, u, pivots }
}

/// Integer solution of `A x = b` via HNF back-substitution, or `None`.
pub fn integer_solve(a: &[Vec<BigInt>], b: &[BigInt]) -> Result<Option<Vec<BigInt>>, LinalgError> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    if b.len() != rows {
        return Err(LinalgError::DimensionMismatch(format!(
            "matrix has {rows} rows, rhs has {}",
            b.len()
        )));
    }
    if cols == 0 {
        return Ok(if b.iter().all(|v| v.is_zero()) {
            Some(Vec::new())
        } else {
            None
        });
    }
    let n = hnf(a);
    // Solve H z = b. H's nonzero columns have strictly increasing pivot rows;
    // process rows top-down, consuming pivots as they appear.
    let mut z = vec![BigInt::zero(); cols];
    let mut residual: Vec<BigInt> = b.to_vec();
    let mut piv_iter = n.pivots.iter().peekable();
    for r in 0..rows {
        if let Some(&&(pr, pc)) = piv_iter.peek() {
            if pr == r {
                let (q, rem) = residual[r].div_rem(&n.h[pr][pc]);
                if !rem.is_zero() {
                    return Ok(None);
                }
                if !q.is_zero() {
                    for i in r..rows {
                        let v = &residual[i] - &q * &n.h[i][pc];
                        residual[i] = v;
                    }
                }
                z[pc] = q;
                piv_iter.next();
                continue;
            }
        }
        if !residual[r].is_zero() {
            return Ok(None);
        }
    }
    // x = U z.
    let x: Vec<BigInt> = (0..cols)
        .map(|i| {
            let mut s = BigInt::zero();
            for (j, zj) in z.iter().enumerate() {
                if !zj.is_zero() {
                    s += &n.u[i][j] * zj;
                }
            }
            s
        })
        .collect();
    debug_assert!(mat_vec(a, &x) == b, "integer_solve postcondition");
    Ok(Some(x))
}

pub fn mat_vec(a: &[Vec<BigInt>], x: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| {
            let mut s = BigInt::zero();
            for (v, xi) in row.iter().zip(x) {
                if !v.is_zero() && !xi.is_zero() {
                    s += v * xi;
                }
            }
            s
        })
        .collect()
}

/// Determinant by Bareiss; used in tests to verify unimodularity.
pub fn int_det(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(a.iter().all(|r| r.len() == n), "det of non-square matrix");
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = &t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn rank_identity_and_ones() {
        assert_eq!(rank(&RatMatrix::identity(3)), 3);
        assert_eq!(rank(&RatMatrix::from_int_rows(&[vec![1, 1], vec![1, 1]])), 1);
        assert_eq!(rank(&RatMatrix::zero(2, 3)), 0);
    }

    #[test]
    fn rank_permutation_invariant() {
        let m = RatMatrix::from_int_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        let p = RatMatrix::from_int_rows(&[vec![0, 1, 1], vec![1, 2, 3], vec![2, 4, 6]]);
        let c = RatMatrix::from_int_rows(&[vec![3, 2, 1], vec![6, 4, 2], vec![1, 1, 0]]);
        assert_eq!(rank(&m), 2);
        assert_eq!(rank(&p), 2);
        assert_eq!(rank(&c), 2);
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let a = RatMatrix::identity(3);
        let b = vec![rat(1, 2), rat_int(3), rat(-7, 5)];
        let x = solve_rational(&a, &b).unwrap().unwrap();
        assert_eq!(x, b);
    }

    #[test]
    fn solve_inconsistent_is_none() {
        let a = RatMatrix::from_int_rows(&[vec![1, 0], vec![1, 0]]);
        let b = vec![rat_int(0), rat_int(1)];
        assert!(solve_rational(&a, &b).unwrap().is_none());
    }

    #[test]
    fn solve_dimension_mismatch() {
        let a = RatMatrix::identity(2);
        assert!(solve_rational(&a, &[rat_int(1)]).is_err());
    }

    #[test]
    fn hnf_diagonal_already_canonical() {
        let a = vec![vec![bi(2), bi(0)], vec![bi(0), bi(3)]];
        let n = hnf(&a);
        assert_eq!(n.h, a);
        assert_eq!(int_det(&n.u).abs().to_i64().unwrap(), 1);
    }

    #[test]
    fn hnf_postconditions() {
        let a = vec![vec![bi(1), bi(1)], vec![bi(0), bi(2)]];
        let n = hnf(&a);
        // A·U = H
        for i in 0..2 {
            for j in 0..2 {
                let mut s = BigInt::zero();
                for k in 0..2 {
                    s += &a[i][k] * &n.u[k][j];
                }
                assert_eq!(s, n.h[i][j]);
            }
        }
        assert_eq!(int_det(&n.u).abs().to_i64().unwrap(), 1);
        // Lower triangular with positive pivots.
        for &(r, c) in &n.pivots {
            assert!(n.h[r][c].is_positive());
            for j in c + 1..2 {
                assert!(n.h[r][j].is_zero());
            }
        }
    }

    #[test]
    fn integer_solve_parity() {
        let a = vec![vec![bi(2)]];
        assert!(integer_solve(&a, &[bi(3)]).unwrap().is_none());
        assert_eq!(integer_solve(&a, &[bi(4)]).unwrap().unwrap(), vec![bi(2)]);
    }

    #[test]
    fn integer_solve_matches_brute_force_on_randoms() {
        // Deterministic LCG; entries in [-3,3], 4x4 systems, rhs in [-6,6].
        let mut state: u64 = 0x9e3779b97f4a7c15;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as i64
        };
        for _ in 0..40 {
            let a: Vec<Vec<BigInt>> = (0..4)
                .map(|_| (0..4).map(|_| bi(next() % 7 - 3)).collect())
                .collect();
            let b: Vec<BigInt> = (0..4).map(|_| bi(next() % 13 - 6)).collect();
            let got = integer_solve(&a, &b).unwrap();
            match got {
                Some(x) => assert_eq!(mat_vec(&a, &x), b),
                None => {
                    // Brute force over the coefficient box [-5,5]^4.
                    let mut found = false;
                    'outer: for c0 in -5i64..=5 {
                        for c1 in -5i64..=5 {
                            for c2 in -5i64..=5 {
                                for c3 in -5i64..=5 {
                                    let x = [bi(c0), bi(c1), bi(c2), bi(c3)];
                                    if mat_vec(&a, &x) == b {
                                        found = true;
                                        break 'outer;
                                    }
                                }
                            }
                        }
                    }
                    assert!(!found, "integer_solve missed a solution");
                }
            }
        }
    }

    #[test]
    fn lattice_membership_via_hnf_k3_cuts() {
        // Columns are the cuts of K3; (2,0,0) = d(1)+d(2)-d(3) over Z.
        let cols = vec![
            vec![bi(1), bi(1), bi(0)],
            vec![bi(1), bi(0), bi(1)],
            vec![bi(0), bi(1), bi(1)],
        ];
        let a: Vec<Vec<BigInt>> = (0..3)
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect();
        let b = vec![bi(2), bi(0), bi(0)];
        let sol = integer_solve(&a, &b).unwrap();
        assert!(sol.is_some());
        // Brute-force confirmation in the box [-3,3]^3.
        let mut found = false;
        for c0 in -3i64..=3 {
            for c1 in -3i64..=3 {
                for c2 in -3i64..=3 {
                    let x = [bi(c0), bi(c1), bi(c2)];
                    if mat_vec(&a, &x) == b {
                        found = true;
                    }
                }
            }
        }
        assert!(found);
    }
}
