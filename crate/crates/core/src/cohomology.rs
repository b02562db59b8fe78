//! Depth and Cohen–Macaulayness of monomial quotients through local
//! cohomology: the depth is the least `i` whose `i`-th local cohomology has a
//! nonzero multigraded component, and each component is the reduced homology
//! of a degree complex. The search box is finite: a component only depends on
//! the co-support of the degree and on its nonnegative part clamped at the
//! maximal generator exponents.
//!
//! An independent Koszul-homology oracle (depth as arity minus projective
//! dimension) cross-checks the degree-complex route, and per-power profiles
//! cover ordinary powers, integral closures and symbolic powers.

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::polyhedra::{self, NewtonPolyhedron};
use crate::simplicial::{
    self, delta_of_ideal, DeltaShape, FieldChar, SimplicialComplex, MAX_GROUND,
};
use crate::sets;

/// Which power sequence a profile walks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerKind {
    Ordinary,
    Closure,
    Symbolic,
}

/// A multidegree witnessing nonvanishing local cohomology at the depth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub cohomological_degree: usize,
    pub multidegree: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthReport {
    pub depth: usize,
    pub dim: usize,
    pub cohen_macaulay: bool,
    pub witness: Option<Witness>,
    pub field_char: FieldChar,
}

/// Sources of degree complexes for the depth search.
trait DegreeComplexes: Sync {
    /// Inclusive per-coordinate bounds of the nonnegative search box.
    fn box_bounds(&self) -> &[u64];
    fn shape(&self, cs: u32, alpha: &[u64]) -> DeltaShape;
}

/// Degree complexes of an explicitly presented ideal, via localized
/// membership of the degree against the generators.
struct ExplicitComplexes<'a> {
    ideal: &'a MonomialIdeal,
    bounds: Vec<u64>,
}

impl DegreeComplexes for ExplicitComplexes<'_> {
    fn box_bounds(&self) -> &[u64] {
        &self.bounds
    }

    fn shape(&self, cs: u32, alpha: &[u64]) -> DeltaShape {
        let signed: Vec<i64> = alpha
            .iter()
            .enumerate()
            .map(|(j, &a)| if cs & (1 << j) != 0 { -1 } else { a as i64 })
            .collect();
        simplicial::violation_shape(self.ideal, cs, &signed)
    }
}

/// Degree complexes of the integral closures of powers, read off the Newton
/// polyhedron facets: a facet whose support misses the co-support and whose
/// dilated inequality fails at the degree contributes the complement of its
/// support. Agrees with the explicit route on every degree.
struct ClosureComplexes<'a> {
    np: &'a NewtonPolyhedron,
    n: u64,
    full: u32,
    bounds: Vec<u64>,
}

impl DegreeComplexes for ClosureComplexes<'_> {
    fn box_bounds(&self) -> &[u64] {
        &self.bounds
    }

    fn shape(&self, cs: u32, alpha: &[u64]) -> DeltaShape {
        let mut gens: Vec<u32> = Vec::new();
        for f in self.np.facets() {
            let supp = f.support_mask();
            if supp & cs != 0 {
                continue;
            }
            let dot: u128 = sets::bits(supp)
                .map(|j| f.normal[j] as u128 * alpha[j] as u128)
                .sum();
            if dot < self.n as u128 * f.offset as u128 {
                gens.push(self.full & !cs & !supp);
            }
        }
        if gens.is_empty() {
            DeltaShape::Void
        } else {
            DeltaShape::Generated { gens }
        }
    }
}

/// Degree complexes of symbolic powers of a square-free ideal: facets of the
/// ideal's complex containing the co-support whose complements carry weight
/// at most `n − 1` generate the degree complex.
struct SymbolicComplexes {
    facets: Vec<u32>,
    n: u64,
    r: usize,
    bounds: Vec<u64>,
}

impl DegreeComplexes for SymbolicComplexes {
    fn box_bounds(&self) -> &[u64] {
        &self.bounds
    }

    fn shape(&self, cs: u32, alpha: &[u64]) -> DeltaShape {
        let mut gens: Vec<u32> = Vec::new();
        for &f in &self.facets {
            if cs & f != cs {
                continue;
            }
            let outside: u128 = (0..self.r)
                .filter(|&i| f & (1 << i) == 0)
                .map(|i| alpha[i] as u128)
                .sum();
            if outside <= self.n as u128 - 1 {
                gens.push(f & !cs);
            }
        }
        if gens.is_empty() {
            DeltaShape::Void
        } else {
            DeltaShape::Generated { gens }
        }
    }
}

/// Ascend `i = 0, 1, …` and scan co-supports and boxed degrees in a fixed
/// total order; the first nonvanishing reduced homology pins the depth and a
/// witness. Termination at `i = dim` is guaranteed.
fn depth_search(
    r: usize,
    dim: usize,
    cs_candidates: &[u32],
    provider: &dyn DegreeComplexes,
    field: FieldChar,
) -> (usize, Witness) {
    let bounds = provider.box_bounds();
    for i in 0..=dim {
        for &cs in cs_candidates {
            let c = cs.count_ones() as usize;
            if c > i {
                continue;
            }
            let k = i as i64 - c as i64 - 1;
            let free: Vec<usize> = (0..r).filter(|j| cs & (1 << j) == 0).collect();
            let mut alpha = vec![0u64; r];
            'scan: loop {
                let shape = provider.shape(cs, &alpha);
                if shape.betti(k, field) > 0 {
                    let multidegree = (0..r)
                        .map(|j| {
                            if cs & (1 << j) != 0 {
                                -1
                            } else {
                                alpha[j] as i64
                            }
                        })
                        .collect();
                    return (
                        i,
                        Witness {
                            cohomological_degree: i,
                            multidegree,
                        },
                    );
                }
                for &j in free.iter().rev() {
                    if alpha[j] < bounds[j] {
                        alpha[j] += 1;
                        continue 'scan;
                    }
                    alpha[j] = 0;
                }
                break;
            }
        }
    }
    unreachable!("local cohomology vanished through the dimension")
}

fn cs_candidates(delta: &SimplicialComplex) -> Vec<u32> {
    delta.all_faces()
}

fn check_proper(j: &MonomialIdeal) -> Result<()> {
    if !j.is_proper() {
        return Err(Error::UnitIdeal);
    }
    if j.arity() > MAX_GROUND {
        return Err(Error::SizeCap(format!(
            "arity {} > {MAX_GROUND} in depth computation",
            j.arity()
        )));
    }
    Ok(())
}

/// Depth, dimension and Cohen–Macaulayness of `R/J` by the degree-complex
/// search, with the witnessing multidegree.
pub fn depth_takayama(j: &MonomialIdeal, field: FieldChar) -> Result<DepthReport> {
    field.validate()?;
    check_proper(j)?;
    let dim = j.krull_dim()?;
    let delta = delta_of_ideal(j)?;
    let provider = ExplicitComplexes {
        ideal: j,
        bounds: j.max_exponents().values().to_vec(),
    };
    let (depth, witness) = depth_search(j.arity(), dim, &cs_candidates(&delta), &provider, field);
    Ok(DepthReport {
        depth,
        dim,
        cohen_macaulay: depth == dim,
        witness: Some(witness),
        field_char: field,
    })
}

/// Independent depth oracle: arity minus projective dimension, where the
/// projective dimension is read off multigraded Koszul homology on the
/// variables. Only degrees dividing the lcm of the generators can carry
/// nonzero homology.
pub fn depth_koszul_oracle(j: &MonomialIdeal, field: FieldChar) -> Result<usize> {
    field.validate()?;
    check_proper(j)?;
    let r = j.arity();
    let rho = j.max_exponents();
    let mut pd = 0usize;

    let mut gamma = vec![0u64; r];
    'outer: loop {
        let supp: Vec<usize> = (0..r).filter(|&jx| gamma[jx] >= 1).collect();
        // strand basis by homological degree: subsets of the support whose
        // shifted monomial stays outside the ideal
        let mut basis: Vec<Vec<u32>> = vec![Vec::new(); supp.len() + 1];
        for card in 0..=supp.len() {
            for s in sets::k_subsets(&supp, card) {
                let exps: Vec<u64> = (0..r)
                    .map(|jx| gamma[jx] - u64::from(s & (1 << jx) != 0))
                    .collect();
                if !j.contains(&Monomial::new(exps)) {
                    basis[card].push(s);
                }
            }
        }
        for i in (pd + 1..=supp.len()).rev() {
            if basis[i].is_empty() {
                continue;
            }
            let below = if i == 0 { &[][..] } else { &basis[i - 1][..] };
            let above = if i + 1 <= supp.len() { &basis[i + 1][..] } else { &[][..] };
            let rank_down = simplicial::boundary_rank(&basis[i], below, field);
            let rank_up = simplicial::boundary_rank(above, &basis[i], field);
            if basis[i].len() > rank_down + rank_up {
                pd = pd.max(i);
                break;
            }
        }
        for jx in (0..r).rev() {
            if gamma[jx] < rho.get(jx) {
                gamma[jx] += 1;
                continue 'outer;
            }
            gamma[jx] = 0;
        }
        break;
    }
    Ok(r - pd)
}

/// `n`-th symbolic power of a square-free ideal: the intersection of the
/// `n`-th powers of its minimal primes. A monomial lies in each such power
/// exactly when its total degree outside the corresponding facet reaches
/// `n`, so the minimal generators are swept out of the box `[0, n]^r`.
pub fn symbolic_power(ideal: &MonomialIdeal, n: u64) -> Result<MonomialIdeal> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquareFree);
    }
    if n == 0 {
        return Err(Error::BadParameter("symbolic power exponent must be ≥ 1".into()));
    }
    let delta = delta_of_ideal(ideal)?;
    let r = ideal.arity();
    let complements: Vec<Vec<usize>> = delta
        .facet_masks()
        .iter()
        .map(|&f| (0..r).filter(|&i| f & (1 << i) == 0).collect())
        .collect();

    let mut gens = Vec::new();
    let mut alpha = vec![0u64; r];
    'outer: loop {
        let sums: Vec<u64> = complements
            .iter()
            .map(|c| c.iter().map(|&i| alpha[i]).sum())
            .collect();
        if sums.iter().all(|&s| s >= n) {
            // a decrement in coordinate j breaks feasibility iff some facet
            // complement through j is tight
            let minimal = (0..r).all(|jx| {
                alpha[jx] == 0
                    || complements
                        .iter()
                        .zip(&sums)
                        .any(|(c, &s)| s == n && c.contains(&jx))
            });
            if minimal {
                gens.push(Monomial::new(alpha.clone()));
            }
        }
        for jx in (0..r).rev() {
            if alpha[jx] < n {
                alpha[jx] += 1;
                continue 'outer;
            }
            alpha[jx] = 0;
        }
        break;
    }
    MonomialIdeal::new(r, gens)
}

#[derive(Clone, Debug)]
pub struct DepthProfile {
    pub kind: PowerKind,
    pub field_char: FieldChar,
    /// Reports for `n = 1, …, n_max`, in order.
    pub entries: Vec<DepthReport>,
    /// Least `s` with the depth constant from `s` through the window end.
    pub observed_dstab: usize,
    /// `r − ℓ(I)` for closures: the provable limiting depth.
    pub limit_hint: Option<usize>,
    /// Published stabilization bound for this kind, when one exists.
    pub paper_bound: Option<BigUint>,
    /// Window reached the published bound, so the observed index is certified.
    pub certified: bool,
}

impl DepthProfile {
    pub fn depth(&self, n: usize) -> usize {
        self.entries[n - 1].depth
    }

    pub fn n_max(&self) -> usize {
        self.entries.len()
    }
}

/// Depth of `R/I^n`, `R/closure(I^n)` or `R/I^(n)` for `n = 1 … n_max`.
///
/// Closures and symbolic powers are driven by their facet-form degree
/// complexes and never build the power ideals; ordinary powers are expanded
/// explicitly. The per-`n` computations are independent and fan out across
/// the worker pool; the merge is by index, hence deterministic.
pub fn depth_profile(
    ideal: &MonomialIdeal,
    kind: PowerKind,
    n_max: u64,
    field: FieldChar,
) -> Result<DepthProfile> {
    field.validate()?;
    check_proper(ideal)?;
    if n_max == 0 {
        return Err(Error::BadParameter("n_max must be ≥ 1".into()));
    }
    let r = ideal.arity();
    let dim = ideal.krull_dim()?;
    let delta = delta_of_ideal(ideal)?;
    let candidates = cs_candidates(&delta);
    let rho = ideal.max_exponents();

    let np = match kind {
        PowerKind::Closure => Some(polyhedra::newton_polyhedron(ideal)?),
        _ => None,
    };
    if kind == PowerKind::Symbolic && !ideal.is_squarefree() {
        return Err(Error::NotSquareFree);
    }

    let entries: Vec<DepthReport> = (1..=n_max)
        .into_par_iter()
        .map(|n| -> Result<DepthReport> {
            let (depth, witness) = match kind {
                PowerKind::Ordinary => {
                    let jn = ideal.power(n)?;
                    let provider = ExplicitComplexes {
                        bounds: jn.max_exponents().values().to_vec(),
                        ideal: &jn,
                    };
                    depth_search(r, dim, &candidates, &provider, field)
                }
                PowerKind::Closure => {
                    let provider = ClosureComplexes {
                        np: np.as_ref().unwrap(),
                        n,
                        full: sets::full_mask(r),
                        bounds: rho
                            .values()
                            .iter()
                            .map(|&b| b.saturating_mul(n))
                            .collect(),
                    };
                    depth_search(r, dim, &candidates, &provider, field)
                }
                PowerKind::Symbolic => {
                    let provider = SymbolicComplexes {
                        facets: delta.facet_masks().to_vec(),
                        n,
                        r,
                        bounds: vec![n; r],
                    };
                    depth_search(r, dim, &candidates, &provider, field)
                }
            };
            Ok(DepthReport {
                depth,
                dim,
                cohen_macaulay: depth == dim,
                witness: Some(witness),
                field_char: field,
            })
        })
        .collect::<Result<_>>()?;

    let observed_dstab = observed_stab_index(entries.iter().map(|e| e.depth));
    let limit_hint = match kind {
        PowerKind::Closure => Some(r - polyhedra::analytic_spread(ideal)?),
        _ => None,
    };
    let paper_bound = match kind {
        PowerKind::Ordinary => None,
        PowerKind::Closure => Some(dstab_bar_bound(r as u64, ideal.max_degree())),
        PowerKind::Symbolic => {
            // big height: the codimension of the smallest facet
            let min_facet = delta
                .facet_masks()
                .iter()
                .map(|f| f.count_ones() as usize)
                .min()
                .unwrap_or(0);
            Some(dstab_star_bound(r as u64, (r - min_facet) as u64))
        }
    };
    let certified = paper_bound
        .as_ref()
        .map_or(false, |b| BigUint::from(n_max) >= *b);
    Ok(DepthProfile {
        kind,
        field_char: field,
        entries,
        observed_dstab,
        limit_hint,
        paper_bound,
        certified,
    })
}

/// Least index from which the sequence is constant through its end.
pub(crate) fn observed_stab_index<I: IntoIterator<Item = usize>>(seq: I) -> usize {
    let v: Vec<usize> = seq.into_iter().collect();
    let last = *v.last().expect("nonempty window");
    let mut s = v.len();
    while s > 1 && v[s - 2] == last {
        s -= 1;
    }
    s
}

/// Exact integer evaluations of the published stabilization bounds. Values
/// with half-integer exponents are rounded up, which preserves their role as
/// upper bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityBounds {
    /// Stabilization bound for associated primes of closures of powers.
    pub astab_bar: BigUint,
    /// Stabilization bound for associated primes of ordinary powers.
    pub astab: BigUint,
    /// Stabilization bound for depth of closures of powers.
    pub dstab_bar: BigUint,
    /// Stabilization bound for depth of symbolic powers.
    pub dstab_star: BigUint,
}

fn ceil_sqrt(x: BigUint) -> BigUint {
    let s = x.sqrt();
    if &s * &s == x {
        s
    } else {
        s + BigUint::one()
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

pub fn astab_bar_bound(ell: u64, d: u64) -> BigUint {
    if ell <= 2 {
        return BigUint::one();
    }
    big(ell) * big(ell - 1) * big(d).pow((ell - 2) as u32)
}

pub fn astab_bound(r: u64, d: u64, s: u64) -> BigUint {
    let e = ((r + 1) * (s - 1)) as u32;
    let b1_sq = (big(d) * big(r * s + s + d)).pow(2)
        * big(r).pow((r + 1) as u32)
        * big(2).pow(e)
        * big(d).pow(2 * e);
    let b1 = ceil_sqrt(b1_sq);
    let b2 = big(s)
        * big(s + r).pow(4)
        * big(s).pow((r + 2) as u32)
        * big(d).pow(2)
        * (big(2) * big(d).pow(2)).pow((s * s - s + 1) as u32);
    b1.max(b2)
}

pub fn dstab_bar_bound(r: u64, d: u64) -> BigUint {
    if r <= 2 {
        return BigUint::one();
    }
    let c = big(r)
        * big(r * r - 1)
        * big(r - 1).pow(r as u32)
        * big(d).pow(((r - 2) * (r + 1)) as u32);
    ceil_sqrt(c.pow(2) * big(r).pow(r as u32))
}

pub fn dstab_star_bound(r: u64, bight: u64) -> BigUint {
    let c = big(r) * big(r + 1);
    ceil_sqrt(c.pow(2) * big(bight).pow(r as u32))
}

pub fn stability_bounds(r: u64, d: u64, s: u64, ell: u64, bight: u64) -> StabilityBounds {
    StabilityBounds {
        astab_bar: astab_bar_bound(ell, d),
        astab: astab_bound(r, d, s),
        dstab_bar: dstab_bar_bound(r, d),
        dstab_star: dstab_star_bound(r, bight),
    }
}
