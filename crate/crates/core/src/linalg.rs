//! Exact rational vectors and small dense matrices.
//!
//! Everything here works over [`Q`] (64-bit rationals). The dimensions involved
//! are tiny (ambient spaces of rank ≤ 8), so the solvers are plain Gaussian
//! elimination without pivoting heuristics beyond "first nonzero".

use num_rational::Rational64;
use num_traits::{One, Zero};

/// Exact rational scalar.
pub type Q = Rational64;

/// Column vector in ambient coordinates.
pub type Vector = Vec<Q>;

/// Row-major square or rectangular matrix.
pub type Matrix = Vec<Vec<Q>>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

pub fn zeros(dim: usize) -> Vector {
    vec![Q::zero(); dim]
}

pub fn unit(dim: usize, k: usize) -> Vector {
    let mut v = zeros(dim);
    v[k] = Q::one();
    v
}

pub fn add(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: Q, a: &[Q]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

pub fn neg(a: &[Q]) -> Vector {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero(a: &[Q]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// `Σ c_i v_i`; `vs` must be nonempty or `dim` is used for the zero vector.
pub fn combine(coeffs: &[Q], vs: &[Vector], dim: usize) -> Vector {
    let mut out = zeros(dim);
    for (c, v) in coeffs.iter().zip(vs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

pub fn identity(dim: usize) -> Matrix {
    (0..dim).map(|k| unit(dim, k)).collect()
}

pub fn mat_vec(m: &Matrix, v: &[Q]) -> Vector {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter().map(|row| (0..cols).map(|c| (0..inner).map(|k| row[k] * b[k][c]).sum()).collect()).collect()
}

pub fn transpose(m: &Matrix) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|c| m.iter().map(|row| row[c]).collect()).collect()
}

/// Bilinear form `vᵀ F w`.
pub fn bilinear(form: &Matrix, v: &[Q], w: &[Q]) -> Q {
    let mut acc = Q::zero();
    for (i, vi) in v.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        for (j, wj) in w.iter().enumerate() {
            let f = form[i][j];
            if !f.is_zero() && !wj.is_zero() {
                acc += vi * f * wj;
            }
        }
    }
    acc
}

/// Solves `A x = b` for square `A`. Returns `None` when `A` is singular.
pub fn solve(a: &Matrix, b: &[Q]) -> Option<Vector> {
    let n = a.len();
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            let mut r = row.clone();
            r.push(rhs);
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let p = aug[col][col];
        for x in aug[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col];
                for c in col..=n {
                    let delta = f * aug[col][c];
                    aug[r][c] -= delta;
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n]).collect())
}

/// Inverse of a square matrix, or `None` if singular.
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let cols: Option<Vec<Vector>> = (0..n).map(|k| solve(a, &unit(n, k))).collect();
    cols.map(|c| transpose(&c))
}

/// Rank of a (possibly rectangular) matrix, rows taken as vectors.
pub fn rank(rows: &[Vector]) -> usize {
    let mut m: Matrix = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][col];
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col] / pivot;
                for c in col..cols {
                    let delta = f * m[r][c];
                    m[i][c] -= delta;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

pub fn is_integer(x: &Q) -> bool {
    x.is_integer()
}

pub fn is_nonneg_integer(x: &Q) -> bool {
    x.is_integer() && *x >= Q::zero()
}

/// Smallest integer `k ≥ 0` with `k · step ≥ target` (or `>` when `strict`).
/// `step` must be positive.
pub fn least_multiple_reaching(step: Q, target: Q, strict: bool) -> i64 {
    let ratio = target / step;
    let k = if strict { ratio.floor().to_integer() + 1 } else { ratio.ceil().to_integer() };
    k.max(0)
}
