//! Shared helpers for the integration suites: seeded random instances and
//! independent brute-force oracles. The oracles are deliberately naive and
//! share no code with the library paths they check.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use idealis_core::monomial::{Monomial, MonomialIdeal};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random proper nonzero monomial ideal.
pub fn random_ideal(
    rng: &mut ChaCha8Rng,
    max_arity: usize,
    max_gens: usize,
    max_exp: u64,
) -> MonomialIdeal {
    let r = rng.gen_range(1..=max_arity);
    let count = rng.gen_range(1..=max_gens);
    let mut gens = Vec::with_capacity(count);
    while gens.len() < count {
        let exps: Vec<u64> = (0..r).map(|_| rng.gen_range(0..=max_exp)).collect();
        if exps.iter().any(|&e| e > 0) {
            gens.push(Monomial::new(exps));
        }
    }
    MonomialIdeal::new(r, gens).unwrap()
}

/// A random proper nonzero square-free ideal.
pub fn random_squarefree_ideal(
    rng: &mut ChaCha8Rng,
    max_arity: usize,
    max_gens: usize,
) -> MonomialIdeal {
    let r = rng.gen_range(1..=max_arity);
    let count = rng.gen_range(1..=max_gens);
    let mut gens = Vec::with_capacity(count);
    while gens.len() < count {
        let exps: Vec<u64> = (0..r).map(|_| u64::from(rng.gen_bool(0.5))).collect();
        if exps.iter().any(|&e| e > 0) {
            gens.push(Monomial::new(exps));
        }
    }
    MonomialIdeal::new(r, gens).unwrap()
}

/// Every lattice point of the box `[0, bound]^r`, odometer order.
pub fn box_points(r: usize, bound: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut x = vec![0u64; r];
    'outer: loop {
        out.push(x.clone());
        for j in (0..r).rev() {
            if x[j] < bound {
                x[j] += 1;
                continue 'outer;
            }
            x[j] = 0;
        }
        return out;
    }
}

fn det_i128(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| a[i][col] != 0) else {
            return 0;
        };
        if p != col {
            a.swap(col, p);
            sign = -sign;
        }
        let pivot = a[col][col];
        for i in col + 1..n {
            for j in col + 1..n {
                a[i][j] = (a[i][j] * pivot - a[i][col] * a[col][j]) / prev;
            }
            a[i][col] = 0;
        }
        prev = pivot;
    }
    sign * a[n - 1][n - 1]
}

/// Exact feasibility of `Σ λ_i p_i ≤ x`, `Σ λ_i = n`, `λ ≥ 0` by basic
/// solution enumeration with integer Cramer determinants: membership of `x`
/// in the `n`-fold dilation of the convex hull of the points plus the
/// nonnegative orthant.
pub fn convex_combination_oracle(points: &[&[u64]], n: u64, x: &[u64]) -> bool {
    let k = points.len();
    let r = x.len();
    let vars = k + r; // λ's then slacks
    let eqs = r + 1;
    if vars < eqs {
        // fewer columns than equations: try every full subset anyway
    }
    // column j of the constraint matrix
    let column = |j: usize| -> Vec<i128> {
        let mut col = vec![0i128; eqs];
        if j < k {
            for row in 0..r {
                col[row] = points[j][row] as i128;
            }
            col[r] = 1;
        } else {
            col[j - k] = 1;
        }
        col
    };
    let mut rhs = vec![0i128; eqs];
    for row in 0..r {
        rhs[row] = x[row] as i128;
    }
    rhs[r] = n as i128;

    if vars < eqs {
        return false;
    }
    // enumerate column bases of size eqs; a feasible point exists iff some
    // basic solution is nonnegative
    let mut choice: Vec<usize> = (0..eqs).collect();
    loop {
        let cols: Vec<Vec<i128>> = choice.iter().map(|&j| column(j)).collect();
        let mat: Vec<Vec<i128>> = (0..eqs)
            .map(|row| cols.iter().map(|c| c[row]).collect())
            .collect();
        let d = det_i128(&mat);
        if d != 0 {
            let mut feasible = true;
            for pos in 0..eqs {
                let mut replaced = mat.clone();
                for row in 0..eqs {
                    replaced[row][pos] = rhs[row];
                }
                let di = det_i128(&replaced);
                if di * d < 0 {
                    feasible = false;
                    break;
                }
            }
            if feasible {
                return true;
            }
        }
        // next combination
        let mut i = eqs;
        while i > 0 && choice[i - 1] == i - 1 + vars - eqs {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        choice[i - 1] += 1;
        for j in i..eqs {
            choice[j] = choice[j - 1] + 1;
        }
    }
}
