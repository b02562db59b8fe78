//! Newton polyhedra of monomial ideals as exact integer inequality systems,
//! and what they buy: membership in dilations, integral closures of powers,
//! analytic spread via compact faces, and lattice witnesses for mixed
//! strict/weak constraint regions.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::sets;

/// One supporting inequality `⟨normal, x⟩ ≥ offset` of a Newton polyhedron.
/// Normals have nonnegative integer entries and gcd 1 with the offset.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<u64>,
    pub offset: u64,
}

impl Facet {
    pub fn support_mask(&self) -> u32 {
        self.normal
            .iter()
            .enumerate()
            .fold(0u32, |m, (i, &a)| if a > 0 { m | (1 << i) } else { m })
    }

    fn dot(&self, x: &[u64]) -> u128 {
        self.normal
            .iter()
            .zip(x)
            .map(|(&a, &v)| a as u128 * v as u128)
            .sum()
    }
}

/// The Newton polyhedron of a proper nonzero monomial ideal, in irredundant
/// H-representation. Every facet is supporting: it contains as many affinely
/// independent generator points as its normal has nonzero coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    arity: usize,
    facets: Vec<Facet>,
}

impl NewtonPolyhedron {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Membership of an integer point in the `n`-fold dilation: `x ≥ 0` and
    /// `⟨a_j, x⟩ ≥ n·b_j` for every facet.
    pub fn contains_scaled(&self, n: u64, x: &[i64]) -> bool {
        if x.len() != self.arity || x.iter().any(|&v| v < 0) {
            return false;
        }
        let ux: Vec<u64> = x.iter().map(|&v| v as u64).collect();
        self.facets
            .iter()
            .all(|f| f.dot(&ux) >= n as u128 * f.offset as u128)
    }

    fn contains_unsigned(&self, n: u64, x: &[u64]) -> bool {
        self.facets
            .iter()
            .all(|f| f.dot(x) >= n as u128 * f.offset as u128)
    }
}

const CANDIDATE_CAP: u128 = 50_000_000;

/// Exact facet list of `conv(E(G(I))) + R₊^r`.
///
/// Candidates come from the structure of the supporting hyperplanes: a facet
/// whose normal has support `C` with `|C| = s` passes through `s` generator
/// points whose `C`-restrictions are affinely independent, and is parallel to
/// the coordinate directions outside `C`. The normal is recovered as the
/// integer kernel of the restricted difference matrix.
pub fn newton_polyhedron(ideal: &MonomialIdeal) -> Result<NewtonPolyhedron> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !ideal.is_proper() {
        return Err(Error::UnitIdeal);
    }
    let r = ideal.arity();
    if r > 32 {
        return Err(Error::SizeCap(format!("arity {r} > 32")));
    }
    let points: Vec<&[u64]> = ideal.generators().iter().map(Monomial::exponents).collect();
    let k = points.len();

    let mut work: u128 = 0;
    for s in 1..=r.min(k) {
        work += binomial(r, s) * binomial(k, s);
        if work > CANDIDATE_CAP {
            return Err(Error::SizeCap(format!(
                "facet enumeration over {k} generators in {r} variables"
            )));
        }
    }

    let d = ideal.max_degree();
    let mut found: BTreeSet<(Vec<u64>, u64)> = BTreeSet::new();

    for support in 1u32..(1 << r) {
        let coords = sets::to_indices(support);
        let s = coords.len();
        if s > k {
            continue;
        }
        for chosen in (0..k).combinations(s) {
            // difference matrix restricted to the support coordinates
            let base = points[chosen[0]];
            let rows: Vec<Vec<i128>> = chosen[1..]
                .iter()
                .map(|&pi| {
                    coords
                        .iter()
                        .map(|&c| points[pi][c] as i128 - base[c] as i128)
                        .collect()
                })
                .collect();
            let kernel = linalg::kernel_cofactors(&rows);
            if kernel.iter().any(|v| v.is_zero()) {
                continue; // dependent points or support smaller than C
            }
            let negatives = kernel.iter().filter(|v| v.is_negative()).count();
            if negatives != 0 && negatives != s {
                continue; // mixed signs can never support the polyhedron
            }
            let g = linalg::gcd_bigint(&kernel);
            let mut normal = vec![0u64; r];
            let mut ok = true;
            for (c, v) in coords.iter().zip(&kernel) {
                let reduced = v.abs() / &g;
                match reduced.to_u64() {
                    Some(u) => normal[*c] = u,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                return Err(Error::Overflow("facet normal"));
            }
            let facet = Facet {
                normal,
                offset: 0,
            };
            let value = facet.dot(base);
            if chosen[1..].iter().any(|&pi| facet.dot(points[pi]) != value) {
                continue;
            }
            if points.iter().any(|p| facet.dot(p) < value) {
                continue; // not supporting
            }
            let offset = match u64::try_from(value) {
                Ok(b) => b,
                Err(_) => return Err(Error::Overflow("facet offset")),
            };
            debug_assert!(nph_coefficient_bound_holds(&facet.normal, d));
            found.insert((facet.normal, offset));
        }
    }

    let facets = found
        .into_iter()
        .map(|(normal, offset)| Facet { normal, offset })
        .collect();
    Ok(NewtonPolyhedron { arity: r, facets })
}

/// Coefficient bound on facet normals: each entry is at most `s·d^(s−1)`
/// where `s` is the support size of the normal and `d` the maximal
/// generating degree.
pub fn nph_coefficient_bound_holds(normal: &[u64], max_degree: u64) -> bool {
    let s = normal.iter().filter(|&&a| a > 0).count() as u32;
    if s == 0 {
        return false;
    }
    let bound = (s as u128) * (max_degree as u128).pow(s - 1);
    normal.iter().all(|&a| a as u128 <= bound)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Minimal monomial generators of the integral closure of `I^n`: the
/// divisibility-minimal lattice points of `n·NP(I)`. Minimal points have all
/// coordinates at most `n·rho_j`, so the box scan is exhaustive.
pub fn integral_closure_power(ideal: &MonomialIdeal, n: u64) -> Result<MonomialIdeal> {
    let np = newton_polyhedron(ideal)?;
    let r = ideal.arity();
    let rho = ideal.max_exponents();
    let bounds: Vec<u64> = rho
        .values()
        .iter()
        .map(|&b| {
            b.checked_mul(n).ok_or(Error::Overflow("closure box"))
        })
        .collect::<Result<_>>()?;

    let mut gens = Vec::new();
    let mut x = vec![0u64; r];
    'outer: loop {
        if np.contains_unsigned(n, &x) {
            let minimal = (0..r).all(|j| {
                if x[j] == 0 {
                    return true;
                }
                x[j] -= 1;
                let inside = np.contains_unsigned(n, &x);
                x[j] += 1;
                !inside
            });
            if minimal {
                gens.push(Monomial::new(x.clone()));
            }
        }
        // odometer
        for j in (0..r).rev() {
            if x[j] < bounds[j] {
                x[j] += 1;
                continue 'outer;
            }
            x[j] = 0;
        }
        break;
    }
    MonomialIdeal::new(r, gens)
}

/// Analytic spread: one plus the largest dimension of a compact face of the
/// Newton polyhedron. A face (an intersection of facets) is compact exactly
/// when the active normals jointly touch every coordinate, and its dimension
/// is the affine dimension of the generator points lying on it.
pub fn analytic_spread(ideal: &MonomialIdeal) -> Result<usize> {
    let np = newton_polyhedron(ideal)?;
    let q = np.facets.len();
    if q > 24 {
        return Err(Error::SizeCap(format!("{q} facets in analytic spread")));
    }
    let r = ideal.arity();
    let full = sets::full_mask(r);
    let points: Vec<Vec<i128>> = ideal
        .generators()
        .iter()
        .map(|g| g.exponents().iter().map(|&e| e as i128).collect())
        .collect();
    let supports: Vec<u32> = np.facets.iter().map(Facet::support_mask).collect();
    // which generator points lie on each facet
    let on_facet: Vec<Vec<bool>> = np
        .facets
        .iter()
        .map(|f| {
            ideal
                .generators()
                .iter()
                .map(|g| f.dot(g.exponents()) == f.offset as u128)
                .collect()
        })
        .collect();

    let mut best: Option<usize> = None;
    for active in 1u32..(1 << q) {
        let mut union = 0u32;
        for j in sets::bits(active) {
            union |= supports[j];
        }
        if union != full {
            continue; // face has a recession direction
        }
        let face_points: Vec<Vec<i128>> = (0..points.len())
            .filter(|&pi| sets::bits(active).all(|j| on_facet[j][pi]))
            .map(|pi| points[pi].clone())
            .collect();
        if face_points.is_empty() {
            continue;
        }
        let dim = linalg::affine_dim(&face_points);
        best = Some(best.map_or(dim + 1, |b: usize| b.max(dim + 1)));
    }
    Ok(best.expect("a Newton polyhedron always has a vertex"))
}

/// A mixed system of strict and weak dilated facet constraints on `R₊^r`:
/// `⟨a_j, x⟩ < c_j` for the strict part, `⟨a_l, x⟩ ≥ c_l` for the weak part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedRegion {
    arity: usize,
    strict: Vec<(Vec<u64>, u128)>,
    weak: Vec<(Vec<u64>, u128)>,
}

impl MixedRegion {
    pub fn new(
        arity: usize,
        strict: Vec<(Vec<u64>, u128)>,
        weak: Vec<(Vec<u64>, u128)>,
    ) -> Self {
        Self { arity, strict, weak }
    }

    /// Split the facets of `np`, dilated by `n`: indices in `strict_idx` go to
    /// the strict side, the rest to the weak side.
    pub fn from_facet_split(np: &NewtonPolyhedron, n: u64, strict_idx: &[usize]) -> Self {
        let mut strict = Vec::new();
        let mut weak = Vec::new();
        for (j, f) in np.facets.iter().enumerate() {
            let entry = (f.normal.clone(), n as u128 * f.offset as u128);
            if strict_idx.contains(&j) {
                strict.push(entry);
            } else {
                weak.push(entry);
            }
        }
        Self {
            arity: np.arity,
            strict,
            weak,
        }
    }

    pub fn max_offset(&self) -> u128 {
        self.strict
            .iter()
            .chain(&self.weak)
            .map(|(_, c)| *c)
            .max()
            .unwrap_or(0)
    }

    fn satisfied(&self, x: &[u64]) -> bool {
        let dot = |a: &[u64]| -> u128 {
            a.iter().zip(x).map(|(&c, &v)| c as u128 * v as u128).sum()
        };
        self.strict.iter().all(|(a, c)| dot(a) < *c)
            && self.weak.iter().all(|(a, c)| dot(a) >= *c)
    }

    /// First lattice point (in lexicographic order) inside the region with
    /// all coordinates at most `box_bound`, if any. Absence within the box is
    /// not a proof of infeasibility.
    pub fn lattice_witness(&self, box_bound: u64) -> Option<Vec<u64>> {
        let r = self.arity;
        let mut x = vec![0u64; r];
        'outer: loop {
            if self.satisfied(&x) {
                return Some(x);
            }
            for j in (0..r).rev() {
                if x[j] < box_bound {
                    x[j] += 1;
                    continue 'outer;
                }
                x[j] = 0;
            }
            return None;
        }
    }
}
