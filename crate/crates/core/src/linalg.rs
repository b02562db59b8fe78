//! Exact rank and determinant computations. Characteristic-zero ranks use
//! fraction-free (Bareiss) elimination in `i128`, falling back to big-integer
//! arithmetic if an intermediate minor overflows; prime fields use plain
//! modular elimination. No floating point anywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Rank over the rationals of an integer matrix. Entries arrive as `i64`.
pub(crate) fn rank_char0(rows: &[Vec<i64>]) -> usize {
    let m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    match bareiss_rank_i128(m) {
        Some(rank) => rank,
        None => bareiss_rank_bigint(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        ),
    }
}

/// Rank of an integer matrix with `i128` entries (used for facet geometry).
pub(crate) fn rank_char0_i128(rows: &[Vec<i128>]) -> usize {
    match bareiss_rank_i128(rows.to_vec()) {
        Some(rank) => rank,
        None => bareiss_rank_bigint(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        ),
    }
}

fn bareiss_rank_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let nrows = m.len();
    if nrows == 0 {
        return Some(0);
    }
    let ncols = m[0].len();
    let mut rank = 0usize;
    let mut prev: i128 = 1;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..nrows).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col];
        for i in rank + 1..nrows {
            for j in col + 1..ncols {
                let a = m[i][j].checked_mul(pivot)?;
                let b = m[i][col].checked_mul(m[rank][j])?;
                m[i][j] = a.checked_sub(b)? / prev;
            }
            m[i][col] = 0;
        }
        prev = pivot;
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    Some(rank)
}

fn bareiss_rank_bigint(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        let Some(pivot_row) = (rank..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for i in rank + 1..nrows {
            for j in col + 1..ncols {
                let v = (&m[i][j] * &pivot - &m[i][col] * &m[rank][j]) / &prev;
                m[i][j] = v;
            }
            m[i][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Rank over `F_p`. `p` must be an odd prime or 2 (validated by callers).
pub(crate) fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..nrows).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let inv = mod_inverse(m[rank][col], p);
        for j in col..ncols {
            m[rank][j] = mulmod(m[rank][j], inv, p);
        }
        for i in rank + 1..nrows {
            if m[i][col] != 0 {
                let f = m[i][col];
                for j in col..ncols {
                    let sub = mulmod(f, m[rank][j], p);
                    m[i][j] = (m[i][j] + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: p is prime and a != 0 mod p
    let mut result: u64 = 1;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mulmod(result, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    result
}

/// Determinant of a square integer matrix, exact.
pub(crate) fn det_bigint(m: &[Vec<i128>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return BigInt::zero();
        };
        if pivot_row != col {
            a.swap(col, pivot_row);
            sign = -sign;
        }
        let pivot = a[col][col].clone();
        for i in col + 1..n {
            for j in col + 1..n {
                let v = (&a[i][j] * &pivot - &a[i][col] * &a[col][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = pivot;
    }
    sign * &a[n - 1][n - 1]
}

/// One-dimensional kernel of an `(s−1) × s` integer matrix by Cramer
/// cofactors: component `j` is `(−1)^j` times the maximal minor omitting
/// column `j`. Returns the zero vector when the matrix has rank `< s−1`.
pub(crate) fn kernel_cofactors(rows: &[Vec<i128>]) -> Vec<BigInt> {
    let s = if rows.is_empty() { 1 } else { rows[0].len() };
    debug_assert!(rows.iter().all(|r| r.len() == s));
    debug_assert_eq!(rows.len() + 1, s);
    (0..s)
        .map(|omit| {
            let minor: Vec<Vec<i128>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != omit)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let d = if minor.is_empty() {
                BigInt::one()
            } else {
                det_bigint(&minor)
            };
            if omit % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

/// Affine dimension of a point set (dimension of its affine hull).
pub(crate) fn affine_dim(points: &[Vec<i128>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = &points[0];
    let diffs: Vec<Vec<i128>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    rank_char0_i128(&diffs)
}

pub(crate) fn gcd_bigint(values: &[BigInt]) -> BigInt {
    use num_integer::Integer;
    values
        .iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(&v.abs()))
}
