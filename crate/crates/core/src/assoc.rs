//! Associated primes of monomial quotients and of powers and integral
//! closures of powers. Every associated prime of a monomial ideal is
//! generated by a subset of the variables; membership of such a prime is
//! detected after localization (deleting the variables outside the subset)
//! by a nonzero socle element, equivalently by the quotient failing to be
//! saturated with respect to the remaining variables.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::cohomology::{self, PowerKind};
use crate::error::{Error, Result};
use crate::monomial::{MaxExponents, Monomial, MonomialIdeal};
use crate::polyhedra;
use crate::sets;

/// A set of primes, each generated by the variables of a subset of `[r]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeSet {
    arity: usize,
    primes: BTreeSet<u32>,
}

impl PrimeSet {
    pub fn new(arity: usize, primes: impl IntoIterator<Item = u32>) -> Self {
        Self {
            arity,
            primes: primes.into_iter().collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn contains(&self, mask: u32) -> bool {
        self.primes.contains(&mask)
    }

    pub fn contains_maximal(&self) -> bool {
        self.primes.contains(&sets::full_mask(self.arity))
    }

    pub fn masks(&self) -> impl Iterator<Item = u32> + '_ {
        self.primes.iter().copied()
    }

    pub fn is_subset(&self, other: &PrimeSet) -> bool {
        self.primes.is_subset(&other.primes)
    }

    pub fn difference(&self, other: &PrimeSet) -> PrimeSet {
        PrimeSet {
            arity: self.arity,
            primes: self.primes.difference(&other.primes).copied().collect(),
        }
    }

    /// Primes as 0-based index lists, sorted by (cardinality, lexicographic).
    pub fn sorted_primes(&self) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = self.primes.iter().map(|&m| sets::to_indices(m)).collect();
        v.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        v
    }
}

fn check_input(j: &MonomialIdeal) -> Result<()> {
    if j.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !j.is_proper() {
        return Err(Error::UnitIdeal);
    }
    if j.arity() > 16 {
        return Err(Error::SizeCap(format!(
            "arity {} > 16 in associated-prime sweep",
            j.arity()
        )));
    }
    Ok(())
}

/// Does the localized quotient have a nonzero socle element? Scans the box
/// clamped at the maximal exponents for a monomial outside the ideal that
/// every remaining variable pushes inside.
fn has_socle_element(j_local: &MonomialIdeal, s_mask: u32) -> bool {
    let r = j_local.arity();
    let rho = j_local.max_exponents();
    let mut alpha = vec![0u64; r];
    'outer: loop {
        let mut singles = 0u32;
        let mut outside = true;
        for g in j_local.generators() {
            let mut w = 0u32;
            let mut count = 0;
            for j in 0..r {
                if g.exponent(j) > alpha[j] {
                    w |= 1 << j;
                    count += 1;
                    if count > 1 {
                        break;
                    }
                }
            }
            if w == 0 {
                outside = false;
                break;
            }
            if count == 1 {
                singles |= w;
            }
        }
        if outside && singles & s_mask == s_mask {
            return true;
        }
        for j in (0..r).rev() {
            if alpha[j] < rho.get(j) {
                alpha[j] += 1;
                continue 'outer;
            }
            alpha[j] = 0;
        }
        return false;
    }
}

/// Associated primes of `R/J` by the localization sweep: a variable subset
/// `S` is associated exactly when the deletion of `J` to `S` fails to be
/// saturated with respect to the variables of `S`.
pub fn ass(j: &MonomialIdeal) -> Result<PrimeSet> {
    check_input(j)?;
    let r = j.arity();
    let support: u32 = j
        .generators()
        .iter()
        .fold(0, |m, g| m | g.support_mask());
    let mins = min_primes(j)?;
    let min_masks: Vec<u32> = mins.masks().collect();

    let mut primes = BTreeSet::new();
    for s in 1u32..(1 << r) {
        if s & !support != 0 {
            continue; // associated primes only involve supporting variables
        }
        if !min_masks.iter().any(|&m| m & s == m) {
            continue; // every associated prime contains a minimal one
        }
        let local = j.delete_outside(s)?;
        if has_socle_element(&local, s) {
            primes.insert(s);
        }
    }
    Ok(PrimeSet { arity: r, primes })
}

/// Brute-force oracle: every variable-generated prime of the form `J : x^γ`
/// with `γ` in the given box. Used to cross-check `ass`.
pub fn ass_witness_oracle(j: &MonomialIdeal, bounds: &MaxExponents) -> Result<PrimeSet> {
    check_input(j)?;
    let r = j.arity();
    let mut primes = BTreeSet::new();
    let mut gamma = vec![0u64; r];
    'outer: loop {
        let q = j.quotient(&Monomial::new(gamma.clone()))?;
        if !q.is_zero()
            && q.generators()
                .iter()
                .all(|g| g.total_degree() == 1)
        {
            primes.insert(
                q.generators()
                    .iter()
                    .fold(0u32, |m, g| m | g.support_mask()),
            );
        }
        for jx in (0..r).rev() {
            if gamma[jx] < bounds.get(jx) {
                gamma[jx] += 1;
                continue 'outer;
            }
            gamma[jx] = 0;
        }
        break;
    }
    Ok(PrimeSet { arity: r, primes })
}

/// Minimal primes: inclusion-minimal variable subsets meeting the support of
/// every generator.
pub fn min_primes(j: &MonomialIdeal) -> Result<PrimeSet> {
    check_input(j)?;
    let supports = j.radical_supports()?;
    let covers = sets::minimal_transversals(sets::full_mask(j.arity()), &supports);
    Ok(PrimeSet {
        arity: j.arity(),
        primes: covers.into_iter().collect(),
    })
}

#[derive(Clone, Debug)]
pub struct AssProfile {
    pub kind: PowerKind,
    /// `Ass` of the `n`-th power (or its closure) for `n = 1 … n_max`.
    pub entries: Vec<PrimeSet>,
    /// Least `s` with the set constant from `s` through the window end.
    pub observed_astab: usize,
    pub min_primes: PrimeSet,
    /// Published stabilization bound for this kind.
    pub paper_bound: Option<BigUint>,
    /// Window reached the published bound.
    pub certified: bool,
}

impl AssProfile {
    pub fn entry(&self, n: usize) -> &PrimeSet {
        &self.entries[n - 1]
    }

    pub fn n_max(&self) -> usize {
        self.entries.len()
    }

    /// Embedded primes present at step `n`.
    pub fn embedded(&self, n: usize) -> PrimeSet {
        self.entry(n).difference(&self.min_primes)
    }
}

/// Associated primes of `I^n` or of the integral closures, over a window.
/// Per-`n` computations are independent; the merge is by index.
pub fn ass_profile(ideal: &MonomialIdeal, kind: PowerKind, n_max: u64) -> Result<AssProfile> {
    check_input(ideal)?;
    if n_max == 0 {
        return Err(Error::BadParameter("n_max must be ≥ 1".into()));
    }
    if kind == PowerKind::Symbolic {
        return Err(Error::BadParameter(
            "symbolic powers of square-free ideals have no embedded primes".into(),
        ));
    }
    let entries: Vec<PrimeSet> = (1..=n_max)
        .into_par_iter()
        .map(|n| -> Result<PrimeSet> {
            let jn = match kind {
                PowerKind::Ordinary => ideal.power(n)?,
                PowerKind::Closure => polyhedra::integral_closure_power(ideal, n)?,
                PowerKind::Symbolic => unreachable!(),
            };
            ass(&jn)
        })
        .collect::<Result<_>>()?;

    let mut s = entries.len();
    while s > 1 && entries[s - 2] == entries[entries.len() - 1] {
        s -= 1;
    }
    let paper_bound = match kind {
        PowerKind::Ordinary => Some(cohomology::astab_bound(
            ideal.arity() as u64,
            ideal.max_degree(),
            ideal.num_generators() as u64,
        )),
        PowerKind::Closure => Some(cohomology::astab_bar_bound(
            polyhedra::analytic_spread(ideal)? as u64,
            ideal.max_degree(),
        )),
        PowerKind::Symbolic => unreachable!(),
    };
    let certified = paper_bound
        .as_ref()
        .map_or(false, |b| BigUint::from(n_max) >= *b);
    Ok(AssProfile {
        kind,
        observed_astab: s,
        min_primes: min_primes(ideal)?,
        entries,
        paper_bound,
        certified,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PersistenceReport {
    pub holds: bool,
    /// First `(n, prime)` with the prime present at `n` but not at `n+1`.
    pub first_violation: Option<(usize, u32)>,
}

/// Is the window ascending: `entries(n) ⊆ entries(n+1)` throughout?
pub fn persistence_check(profile: &AssProfile) -> PersistenceReport {
    for n in 1..profile.n_max() {
        let now = profile.entry(n);
        let next = profile.entry(n + 1);
        if !now.is_subset(next) {
            let offender = now
                .sorted_primes()
                .into_iter()
                .map(|v| sets::mask_of(&v))
                .find(|m| !next.contains(*m))
                .expect("a violated inclusion has an offender");
            return PersistenceReport {
                holds: false,
                first_violation: Some((n, offender)),
            };
        }
    }
    PersistenceReport {
        holds: true,
        first_violation: None,
    }
}
