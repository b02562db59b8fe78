//! Monomials and monomial ideals with exact integer exponents.
//!
//! A monomial is an exponent vector in `N^r`; an ideal is stored as its unique
//! minimal generating antichain in a canonical order (lexicographic on
//! exponent vectors), so equal ideals compare bit-equal. The zero ideal is the
//! empty generator set; the unit ideal is the single all-zero vector. Every
//! operation documents its behavior on both.

use std::fmt;

use crate::error::{Error, Result};
use crate::sets;

/// An exponent vector `α ∈ N^r`. Exponents are fixed-width integers with
/// checked arithmetic; any overflow is reported, never wrapped.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u64>,
}

impl Monomial {
    pub fn new(exps: Vec<u64>) -> Self {
        Self { exps }
    }

    /// The monomial 1 (all exponents zero).
    pub fn one(arity: usize) -> Self {
        Self { exps: vec![0; arity] }
    }

    /// The variable `x_j` (0-based).
    pub fn variable(arity: usize, j: usize) -> Self {
        let mut exps = vec![0; arity];
        exps[j] = 1;
        Self { exps }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exps
    }

    pub fn exponent(&self, j: usize) -> u64 {
        self.exps[j]
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().fold(0u64, |a, &e| {
            a.checked_add(e).expect("total degree overflow")
        })
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Componentwise divisibility: `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.arity(), other.arity());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b)?);
        }
        Some(Monomial { exps })
    }

    /// Componentwise max (least common multiple of the monomials).
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// Exponent vector of `self : other`, i.e. `max(self − other, 0)`.
    pub fn quotient_by(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    /// Square-free support monomial.
    pub fn radical(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| u64::from(e > 0)).collect(),
        }
    }

    /// Support as a bitmask; requires arity ≤ 32.
    pub fn support_mask(&self) -> u32 {
        debug_assert!(self.arity() <= 32);
        self.exps
            .iter()
            .enumerate()
            .fold(0u32, |m, (i, &e)| if e > 0 { m | (1 << i) } else { m })
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Per-variable maximum exponents over the minimal generators. These bound
/// every search box used by the saturation and depth drivers: membership of
/// `x^α` in the ideal is constant in `α_j` once `α_j ≥ rho_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxExponents {
    rho: Vec<u64>,
}

impl MaxExponents {
    pub fn values(&self) -> &[u64] {
        &self.rho
    }

    pub fn get(&self, j: usize) -> u64 {
        self.rho[j]
    }
}

/// A monomial ideal: arity plus the divisibility-minimal generating antichain
/// in canonical (lexicographic) order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    arity: usize,
    gens: Vec<Monomial>,
}

fn minimalize_vec(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    // Sort by (total degree, lex) so divisors precede multiples; a generator
    // can only be divided by one of strictly smaller degree once deduped.
    gens.sort_unstable_by_key(|m| (m.total_degree(), m.exps.clone()));
    gens.dedup();
    let mut kept: Vec<(u64, u32, Monomial)> = Vec::new();
    'outer: for m in gens {
        let deg = m.total_degree();
        let supp = if m.arity() <= 32 { m.support_mask() } else { u32::MAX };
        for (kdeg, ksupp, k) in &kept {
            if *kdeg >= deg {
                break;
            }
            if supp != u32::MAX && ksupp & supp != *ksupp {
                continue;
            }
            if k.divides(&m) {
                continue 'outer;
            }
        }
        kept.push((deg, supp, m));
    }
    let mut out: Vec<Monomial> = kept.into_iter().map(|(_, _, m)| m).collect();
    out.sort_unstable();
    out
}

impl MonomialIdeal {
    /// Build an ideal from an arbitrary generating set, minimalizing and
    /// canonicalizing. The empty set yields the zero ideal.
    pub fn new(arity: usize, gens: Vec<Monomial>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::BadParameter("arity must be positive".into()));
        }
        for g in &gens {
            if g.arity() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    got: g.arity(),
                });
            }
        }
        Ok(Self {
            arity,
            gens: minimalize_vec(gens),
        })
    }

    /// Test convenience: build from raw exponent rows.
    pub fn from_exponents(arity: usize, rows: &[&[u64]]) -> Result<Self> {
        let gens = rows.iter().map(|r| Monomial::new(r.to_vec())).collect();
        Self::new(arity, gens)
    }

    pub fn zero(arity: usize) -> Self {
        Self { arity, gens: Vec::new() }
    }

    pub fn unit(arity: usize) -> Self {
        Self {
            arity,
            gens: vec![Monomial::one(arity)],
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Membership: `m ∈ I` iff some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn max_exponents(&self) -> MaxExponents {
        let mut rho = vec![0u64; self.arity];
        for g in &self.gens {
            for (j, &e) in g.exponents().iter().enumerate() {
                rho[j] = rho[j].max(e);
            }
        }
        MaxExponents { rho }
    }

    /// Maximal generating degree `d(I)`; 0 for the zero and unit ideals.
    pub fn max_degree(&self) -> u64 {
        self.gens.iter().map(Monomial::total_degree).max().unwrap_or(0)
    }

    fn check_arity(&self, other: &MonomialIdeal) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: other.arity,
            });
        }
        Ok(())
    }

    /// Product ideal: pairwise exponent sums, minimalized.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_arity(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.checked_mul(b).ok_or(Error::Overflow("product"))?);
            }
        }
        Ok(MonomialIdeal {
            arity: self.arity,
            gens: minimalize_vec(gens),
        })
    }

    /// `I^n` by iterated products with intermediate minimalization.
    /// `n = 0` returns the unit ideal by convention.
    pub fn power(&self, n: u64) -> Result<MonomialIdeal> {
        if n == 0 {
            return Ok(MonomialIdeal::unit(self.arity));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Intersection: pairwise lcm of generators, minimalized.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_arity(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal {
            arity: self.arity,
            gens: minimalize_vec(gens),
        })
    }

    /// Colon ideal `I : m` for a single monomial `m`.
    pub fn quotient(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.arity() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: m.arity(),
            });
        }
        let gens = self.gens.iter().map(|g| g.quotient_by(m)).collect();
        Ok(MonomialIdeal {
            arity: self.arity,
            gens: minimalize_vec(gens),
        })
    }

    /// Colon by the prime generated by the variables in `vars`:
    /// `I : (x_j : j ∈ vars) = ∩_j (I : x_j)`.
    pub fn quotient_by_variables(&self, vars: &[usize]) -> Result<MonomialIdeal> {
        let mut acc: Option<MonomialIdeal> = None;
        for &j in vars {
            if j >= self.arity {
                return Err(Error::IndexOutOfRange { index: j, arity: self.arity });
            }
            let q = self.quotient(&Monomial::variable(self.arity, j))?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        acc.ok_or_else(|| Error::BadParameter("variable set must be nonempty".into()))
    }

    /// Saturation `I : P^∞` with respect to the prime `P = (x_j : j ∈ vars)`,
    /// computed by iterating the colon by `P` to a fixpoint. Detects
    /// nonvanishing zeroth local cohomology supported on `P`.
    pub fn saturate(&self, vars: &[usize]) -> Result<MonomialIdeal> {
        let mut cur = self.clone();
        loop {
            let next = cur.quotient_by_variables(vars)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Radical: square-free supports of the generators, minimalized.
    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal {
            arity: self.arity,
            gens: minimalize_vec(self.gens.iter().map(Monomial::radical).collect()),
        }
    }

    /// Set the exponent of variable `j` to zero in every generator (the image
    /// of the ideal under `x_j ↦ 1`), keeping the ambient arity.
    pub fn delete(&self, j: usize) -> Result<MonomialIdeal> {
        if j >= self.arity {
            return Err(Error::IndexOutOfRange { index: j, arity: self.arity });
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = g.exponents().to_vec();
                e[j] = 0;
                Monomial::new(e)
            })
            .collect();
        Ok(MonomialIdeal {
            arity: self.arity,
            gens: minimalize_vec(gens),
        })
    }

    /// Delete every variable *not* in `keep` (localization to the face).
    pub fn delete_outside(&self, keep: u32) -> Result<MonomialIdeal> {
        if self.arity > 32 {
            return Err(Error::SizeCap(format!("arity {} > 32", self.arity)));
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let e = g
                    .exponents()
                    .iter()
                    .enumerate()
                    .map(|(j, &v)| if keep & (1 << j) != 0 { v } else { 0 })
                    .collect();
                Monomial::new(e)
            })
            .collect();
        Ok(MonomialIdeal {
            arity: self.arity,
            gens: minimalize_vec(gens),
        })
    }

    /// Supports of the generators of the radical, as masks (an antichain).
    pub(crate) fn radical_supports(&self) -> Result<Vec<u32>> {
        if self.arity > 32 {
            return Err(Error::SizeCap(format!("arity {} > 32", self.arity)));
        }
        Ok(sets::minimal_masks(
            self.gens.iter().map(Monomial::support_mask).collect(),
        ))
    }

    /// Krull dimension of `R/I`: the largest cardinality of a variable subset
    /// whose product avoids the radical. The zero ideal gives `r`; the unit
    /// ideal has an empty quotient ring and is rejected.
    pub fn krull_dim(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let supports = self.radical_supports()?;
        let min_cover = sets::minimal_transversals(sets::full_mask(self.arity), &supports)
            .into_iter()
            .map(|t| t.count_ones() as usize)
            .min()
            .expect("a proper ideal always has a transversal");
        Ok(self.arity - min_cover)
    }

    /// Height (codimension) of the ideal.
    pub fn height(&self) -> Result<usize> {
        Ok(self.arity - self.krull_dim()?)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(r: usize, rows: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(r, rows).unwrap()
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = ideal(2, &[&[2, 0], &[3, 1], &[0, 1]]);
        assert_eq!(i, ideal(2, &[&[2, 0], &[0, 1]]));
        assert_eq!(MonomialIdeal::new(2, vec![]).unwrap(), MonomialIdeal::zero(2));
        let j = ideal(2, &[&[1, 4], &[2, 3], &[3, 2], &[5, 1], &[4, 2]]);
        assert_eq!(j, ideal(2, &[&[1, 4], &[2, 3], &[3, 2], &[5, 1]]));
    }

    #[test]
    fn minimalize_rejects_mixed_arity() {
        let gens = vec![Monomial::new(vec![1, 0]), Monomial::new(vec![1])];
        assert!(matches!(
            MonomialIdeal::new(2, gens),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn product_and_power() {
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(x.product(&y).unwrap(), ideal(2, &[&[1, 1]]));

        let m = ideal(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(
            m.product(&m).unwrap(),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])
        );
        assert_eq!(m.power(2).unwrap(), m.product(&m).unwrap());

        assert!(MonomialIdeal::zero(2).product(&m).unwrap().is_zero());
        assert_eq!(
            ideal(1, &[&[2]]).power(3).unwrap(),
            ideal(1, &[&[6]])
        );
        assert!(m.power(0).unwrap().is_unit());
    }

    #[test]
    fn intersect_examples() {
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(x.intersect(&y).unwrap(), ideal(2, &[&[1, 1]]));
        let i = ideal(2, &[&[2, 0], &[0, 1]]);
        assert_eq!(i.intersect(&x).unwrap(), ideal(2, &[&[2, 0], &[1, 1]]));
        assert_eq!(i.intersect(&MonomialIdeal::unit(2)).unwrap(), i);
    }

    #[test]
    fn quotient_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(
            i.quotient(&Monomial::variable(2, 0)).unwrap(),
            ideal(2, &[&[1, 0], &[0, 1]])
        );
        assert_eq!(i.quotient(&Monomial::one(2)).unwrap(), i);
        let j = ideal(4, &[&[1, 0, 1, 1], &[0, 1, 0, 1]]);
        assert_eq!(
            j.quotient(&Monomial::variable(4, 3)).unwrap(),
            ideal(4, &[&[1, 0, 1, 0], &[0, 1, 0, 0]])
        );
    }

    #[test]
    fn saturate_strips_components_supported_on_the_prime() {
        // (x^2, xy) = x * (x, y); saturating by (x, y) recovers (x)
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.saturate(&[0, 1]).unwrap(), ideal(2, &[&[1, 0]]));
        // (x) has no component supported on (x, y)
        let x = ideal(2, &[&[1, 0]]);
        assert_eq!(x.saturate(&[0, 1]).unwrap(), x);
        // but saturating (x) by (x) alone inverts it away
        assert!(x.saturate(&[0]).unwrap().is_unit());
        let u = MonomialIdeal::unit(3);
        assert_eq!(u.saturate(&[0, 1, 2]).unwrap(), u);
    }

    #[test]
    fn radical_examples() {
        let fig = ideal(4, &[&[2, 0, 3, 1], &[0, 3, 0, 2]]);
        assert_eq!(
            fig.radical(),
            ideal(4, &[&[1, 0, 1, 1], &[0, 1, 0, 1]])
        );
        let sf = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(sf.radical(), sf);
        assert_eq!(
            ideal(3, &[&[2, 1, 0], &[1, 0, 2]]).radical(),
            ideal(3, &[&[1, 1, 0], &[1, 0, 1]])
        );
        assert_eq!(fig.radical().radical(), fig.radical());
    }

    #[test]
    fn delete_examples() {
        let fig = ideal(4, &[&[2, 0, 3, 1], &[0, 3, 0, 2]]);
        assert_eq!(
            fig.delete(3).unwrap(),
            ideal(4, &[&[2, 0, 3, 0], &[0, 3, 0, 0]])
        );
        assert!(ideal(1, &[&[2]]).delete(0).unwrap().is_unit());
        let a = fig.delete(0).unwrap().delete(2).unwrap();
        let b = fig.delete(2).unwrap().delete(0).unwrap();
        assert_eq!(a, b);
        assert!(fig.delete(4).is_err());
    }

    #[test]
    fn krull_dim_examples() {
        let fig = ideal(4, &[&[2, 0, 3, 1], &[0, 3, 0, 2]]);
        assert_eq!(fig.krull_dim().unwrap(), 3);
        let m = ideal(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(m.krull_dim().unwrap(), 0);
        assert_eq!(MonomialIdeal::zero(5).krull_dim().unwrap(), 5);
        assert!(MonomialIdeal::unit(2).krull_dim().is_err());
        assert_eq!(fig.height().unwrap(), 1);
    }

    #[test]
    fn membership_is_divisibility() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert!(i.contains(&Monomial::new(vec![2, 5])));
        assert!(!i.contains(&Monomial::new(vec![1, 0])));
        assert!(!MonomialIdeal::zero(2).contains(&Monomial::one(2)));
        assert!(MonomialIdeal::unit(2).contains(&Monomial::one(2)));
    }

    #[test]
    fn canonical_representation_is_stable() {
        let a = ideal(2, &[&[0, 1], &[2, 0], &[3, 3]]);
        let b = ideal(2, &[&[2, 0], &[0, 1]]);
        assert_eq!(a, b);
        assert_eq!(a.generators(), b.generators());
    }
}
